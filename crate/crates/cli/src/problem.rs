//! `.zdk` problem files.
//!
//! ```text
//! ring Q[x, y] order degrevlex
//! ideal = [3x^3 - x^2 + 1, x^2 - y]
//! elem f = x + y        # one element per line
//! ```
//! `#` starts a comment. Generators may span several lines.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;
use zdk_core::{parse_poly, Error as CoreError, Field, Ideal, MultiPoly, PolyRing, PrimeField, Rationals, TermOrder};

#[derive(Debug, Error)]
pub struct ProblemError {
    pub line: usize,
    pub col: usize,
    pub kind: CoreError,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CoreError::Parse { msg, .. } => write!(f, "{}:{}: {msg}", self.line, self.col),
            k => write!(f, "{}:{}: {k}", self.line, self.col),
        }
    }
}

/// A problem over one concrete field.
#[derive(Debug, Clone)]
pub struct Spec<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub ideal: Ideal<F>,
    pub elems: Vec<(String, MultiPoly<F>)>,
}

#[derive(Debug, Clone)]
pub enum Problem {
    Q(Spec<Rationals>),
    Fp(Spec<PrimeField>),
}

pub fn order_name(o: TermOrder) -> &'static str {
    match o {
        TermOrder::Lex => "lex",
        TermOrder::DegLex => "deglex",
        TermOrder::DegRevLex => "degrevlex",
        TermOrder::Block { .. } => "block",
    }
}

impl<F: Field> Spec<F> {
    pub fn elem(&self, name: &str) -> Option<&MultiPoly<F>> {
        self.elems.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    /// Parse an expression over this ring.
    pub fn poly(&self, text: &str) -> Result<MultiPoly<F>, CoreError> {
        parse_poly(&self.ring, text)
    }
}

impl<F: Field> fmt::Display for Spec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.ring;
        writeln!(
            f,
            "ring {}[{}] order {}",
            r.field.name(),
            r.vars.join(", "),
            order_name(r.order)
        )?;
        let gens: Vec<String> = self.ideal.gens().iter().map(|g| g.to_string()).collect();
        writeln!(f, "ideal = [{}]", gens.join(", "))?;
        for (name, e) in &self.elems {
            writeln!(f, "elem {name} = {e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::Q(s) => s.fmt(f),
            Problem::Fp(s) => s.fmt(f),
        }
    }
}

impl Problem {
    pub fn field_name(&self) -> String {
        match self {
            Problem::Q(s) => s.ring.field.name(),
            Problem::Fp(s) => s.ring.field.name(),
        }
    }
}

enum FieldDecl {
    Q,
    Fp(PrimeField),
}

struct Header {
    field: FieldDecl,
    vars: Vec<String>,
    order: TermOrder,
    gens: Vec<(usize, String)>,
    elems: Vec<(usize, String, String)>,
}

struct Cursor<'a> {
    src: &'a str,
    text: String,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        // blank out comments so offsets still point into the original text
        let mut text = String::with_capacity(src.len());
        for line in src.split_inclusive('\n') {
            match line.find('#') {
                Some(i) => {
                    text.push_str(&line[..i]);
                    text.extend(line[i..].chars().map(|c| if c == '\n' { '\n' } else { ' ' }));
                }
                None => text.push_str(line),
            }
        }
        Cursor { src, text, pos: 0 }
    }

    fn error_at(&self, pos: usize, kind: CoreError) -> ProblemError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        ProblemError { line, col, kind }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ProblemError> {
        Err(self.error_at(
            self.pos,
            CoreError::Parse {
                pos: self.pos,
                msg: msg.into(),
            },
        ))
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn word(&mut self) -> Option<String> {
        self.skip_ws();
        let r = self.rest();
        let n = r
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(r.len());
        if n == 0 || r.as_bytes()[0].is_ascii_digit() {
            return None;
        }
        let w = r[..n].to_string();
        self.pos += n;
        Some(w)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ProblemError> {
        let start = self.pos;
        match self.word() {
            Some(w) if w == kw => Ok(()),
            _ => {
                self.pos = start;
                self.skip_ws();
                self.fail(format!("expected `{kw}`"))
            }
        }
    }

    fn symbol(&mut self, c: char) -> Result<(), ProblemError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    /// Comma-separated chunks up to the closing `]`, split at bracket depth 0.
    fn bracket_list(&mut self) -> Result<Vec<(usize, String)>, ProblemError> {
        self.symbol('[')?;
        let mut out = Vec::new();
        let mut depth = 0usize;
        let mut start = self.pos;
        let bytes = self.text.as_bytes();
        let mut i = self.pos;
        while i < bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b',' | b']' if depth == 0 => {
                    let chunk = &self.text[start..i];
                    let lead = chunk.len() - chunk.trim_start().len();
                    if chunk.trim().is_empty() {
                        self.pos = i;
                        return self.fail("empty list entry");
                    }
                    out.push((start + lead, chunk.trim().to_string()));
                    if bytes[i] == b']' {
                        self.pos = i + 1;
                        return Ok(out);
                    }
                    start = i + 1;
                }
                _ => {}
            }
            i += 1;
        }
        self.pos = bytes.len();
        self.fail("missing `]`")
    }

    fn line_rest(&mut self) -> (usize, String) {
        self.skip_ws_inline();
        let r = self.rest();
        let n = r.find('\n').unwrap_or(r.len());
        let out = (self.pos, r[..n].trim_end().to_string());
        self.pos += n;
        out
    }

    fn skip_ws_inline(&mut self) {
        let r = self.rest();
        let t = r.trim_start_matches([' ', '\t', '\r']);
        self.pos += r.len() - t.len();
    }

    fn header(&mut self) -> Result<Header, ProblemError> {
        self.keyword("ring")?;
        self.skip_ws();
        let fpos = self.pos;
        let field = match self.word() {
            Some(w) if w == "Q" => FieldDecl::Q,
            Some(w) if w.starts_with('F') && w.len() > 1 && w[1..].bytes().all(|b| b.is_ascii_digit()) => {
                let p: u64 = w[1..]
                    .parse()
                    .map_err(|_| self.error_at(fpos, CoreError::NonPrimeField(u64::MAX)))?;
                FieldDecl::Fp(PrimeField::new(p).map_err(|e| self.error_at(fpos, e))?)
            }
            _ => {
                self.pos = fpos;
                return self.fail("expected a field `Q` or `F<prime>`");
            }
        };
        let mut vars = Vec::new();
        for (pos, v) in self.bracket_list()? {
            let ok = v.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                self.pos = pos;
                return self.fail(format!("bad variable name `{v}`"));
            }
            if vars.contains(&v) {
                self.pos = pos;
                return self.fail(format!("duplicate variable `{v}`"));
            }
            vars.push(v);
        }
        self.keyword("order")?;
        self.skip_ws();
        let opos = self.pos;
        let order = match self.word().as_deref() {
            Some("lex") => TermOrder::Lex,
            Some("deglex") => TermOrder::DegLex,
            Some("degrevlex") => TermOrder::DegRevLex,
            _ => {
                self.pos = opos;
                return self.fail("expected `lex`, `deglex` or `degrevlex`");
            }
        };
        self.keyword("ideal")?;
        self.symbol('=')?;
        let gens = self.bracket_list()?;
        let mut elems = Vec::new();
        while !self.at_end() {
            self.keyword("elem")?;
            self.skip_ws();
            let npos = self.pos;
            let Some(name) = self.word() else {
                return self.fail("expected an element name");
            };
            if elems.iter().any(|(_, n, _): &(usize, String, String)| *n == name) {
                self.pos = npos;
                return self.fail(format!("duplicate element `{name}`"));
            }
            self.symbol('=')?;
            let (pos, text) = self.line_rest();
            if text.is_empty() {
                return self.fail("expected a polynomial");
            }
            elems.push((pos, name, text));
        }
        Ok(Header {
            field,
            vars,
            order,
            gens,
            elems,
        })
    }

    fn build<F: Field>(&self, field: F, h: &Header) -> Result<Spec<F>, ProblemError> {
        let ring = PolyRing::from_names(field, h.vars.clone(), h.order);
        let poly = |pos: usize, text: &str| {
            parse_poly(&ring, text).map_err(|e| match e {
                CoreError::Parse { pos: off, msg } => self.error_at(pos + off, CoreError::Parse { pos: pos + off, msg }),
                other => self.error_at(pos, other),
            })
        };
        let gens = h
            .gens
            .iter()
            .map(|(pos, t)| poly(*pos, t))
            .collect::<Result<Vec<_>, _>>()?;
        let elems = h
            .elems
            .iter()
            .map(|(pos, n, t)| Ok((n.clone(), poly(*pos, t)?)))
            .collect::<Result<Vec<_>, ProblemError>>()?;
        Ok(Spec {
            ideal: Ideal::new(&ring, gens),
            ring,
            elems,
        })
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, ProblemError> {
    let mut c = Cursor::new(text);
    let h = c.header()?;
    Ok(match h.field {
        FieldDecl::Q => Problem::Q(c.build(Rationals, &h)?),
        FieldDecl::Fp(k) => Problem::Fp(c.build(k, &h)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_ideal_and_elements() {
        let p = parse_problem(
            "# two generators\nring Q[x,y] order degrevlex\nideal = [3x^3 - x^2 + 1,\n  x^2 - y]\nelem f = x+y\n",
        )
        .unwrap();
        let Problem::Q(s) = &p else { panic!("expected Q") };
        assert_eq!(s.ideal.gens().len(), 2);
        assert_eq!(s.elem("f").unwrap().to_string(), "x + y");
        assert_eq!(
            p.to_string(),
            "ring Q[x, y] order degrevlex\nideal = [3x^3 - x^2 + 1, x^2 - y]\nelem f = x + y\n"
        );
        assert_eq!(parse_problem(&p.to_string()).unwrap().to_string(), p.to_string());
    }

    #[test]
    fn prime_field_header() {
        let p = parse_problem("ring F101[x] order lex\nideal = [x^2]").unwrap();
        assert!(matches!(p, Problem::Fp(_)));
        assert_eq!(p.field_name(), "F101");
    }

    #[test]
    fn rejects_composite_modulus() {
        let e = parse_problem("ring F4[x] order lex\nideal = [x]").unwrap_err();
        assert_eq!(e.kind, CoreError::NonPrimeField(4));
        assert_eq!((e.line, e.col), (1, 6));
    }

    #[test]
    fn unknown_variable_is_located() {
        let e = parse_problem("ring Q[x,y] order lex\nideal = [x, y + w]").unwrap_err();
        assert_eq!(e.kind, CoreError::UnknownVariable("w".into()));
        assert_eq!(e.line, 2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_problem("ring Q[x] order lex\nideal = [x^2 +]").unwrap_err();
        assert!(matches!(e.kind, CoreError::Parse { .. }));
        assert_eq!(e.line, 2);
        let e = parse_problem("ring Q[x,x] order lex\nideal = [x]").unwrap_err();
        assert!(e.to_string().contains("duplicate variable"));
        let e = parse_problem("ring Q[x] order grevlex\nideal = [x]").unwrap_err();
        assert_eq!((e.line, e.col), (1, 17));
    }

    #[test]
    fn comments_are_ignored() {
        let p = parse_problem("ring F2[x, y] order degrevlex # tiny\nideal = [x^2 + x, # first\n y^2 + y]\n").unwrap();
        let Problem::Fp(s) = p else { panic!() };
        assert_eq!(s.ideal.gens().len(), 2);
    }
}
