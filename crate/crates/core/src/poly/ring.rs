use std::sync::Arc;

use super::monomial::TermOrder;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Coefficient field, variable names and term ordering of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub vars: Vec<String>,
    pub order: TermOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str], order: TermOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        })
    }

    pub fn from_names(field: F, vars: Vec<String>, order: TermOrder) -> Arc<Self> {
        Arc::new(PolyRing { field, vars, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Same field and variables under a different ordering.
    pub fn with_order(&self, order: TermOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order,
        })
    }

    /// Same variables and ordering over another field.
    pub fn with_field<G: Field>(&self, field: G) -> Arc<PolyRing<G>> {
        Arc::new(PolyRing {
            field,
            vars: self.vars.clone(),
            order: self.order,
        })
    }
}
