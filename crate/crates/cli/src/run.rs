//! Command dispatch and report rendering.

use serde_json::{json, Value};
use thiserror::Error;
use zdk_core::modular::{minpoly_modular_heuristic, Verification};
use zdk_core::structure::{
    frobenius_dim, is_maximal, is_primary_0dim, is_radical_0dim, primary_decomposition_0dim, radical_0dim,
};
use zdk_core::{
    minpoly, minpoly_modular, Error as CoreError, Field, Ideal, MinPolyAlg, ModularOptions, MultiPoly, Rationals,
    StructField, StructureOptions, UniPoly,
};

use crate::problem::{Problem, ProblemError, Spec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alg {
    Def,
    Mat,
    Elim,
    Modular,
    Heuristic,
}

impl std::str::FromStr for Alg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "def" => Alg::Def,
            "mat" => Alg::Mat,
            "elim" => Alg::Elim,
            "modular" => Alg::Modular,
            "heuristic" => Alg::Heuristic,
            _ => return Err(format!("unknown algorithm `{s}`")),
        })
    }
}

#[derive(Debug, Clone)]
pub enum Command {
    Gb,
    MinPoly {
        poly: Option<String>,
        elem: Option<String>,
        alg: Option<Alg>,
    },
    IsRadical,
    Radical,
    IsMaximal,
    IsPrimary,
    FrobDim,
    Primdec,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::MinPoly { .. } => "minpoly",
            Command::IsRadical => "is-radical",
            Command::Radical => "radical",
            Command::IsMaximal => "is-maximal",
            Command::IsPrimary => "is-primary",
            Command::FrobDim => "frob-dim",
            Command::Primdec => "primdec",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Flags {
    pub seed: u64,
    pub verify: bool,
    pub max_attempts: usize,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            seed: 0,
            verify: true,
            max_attempts: StructureOptions::default().max_attempts,
        }
    }
}

impl Flags {
    pub(crate) fn structure(&self) -> StructureOptions {
        StructureOptions {
            seed: self.seed,
            max_attempts: self.max_attempts,
            verify: self.verify,
        }
    }

    fn modular(&self) -> ModularOptions {
        ModularOptions {
            verify: self.verify,
            seed: self.seed,
            ..ModularOptions::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(#[from] ProblemError),
    #[error("{0}")]
    Math(CoreError),
    /// A precondition of the command itself, such as a finite field.
    #[error("{0}")]
    Precondition(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    /// 1 for bad invocations or input, 2 for failed mathematical
    /// preconditions, 3 when the randomized search gave up.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 1,
            CliError::Math(CoreError::HeuristicExhausted(_)) => 3,
            CliError::Math(_) | CliError::Precondition(_) => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Polys(Vec<String>),
    MinPoly {
        poly: String,
        degree: usize,
        modular: Option<ModularSummary>,
    },
    Bool(bool),
    Count(usize),
    Components(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularSummary {
    pub primes: usize,
    pub bad_primes: Vec<u64>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub field: String,
    pub outcome: Outcome,
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = String::new();
        match &self.outcome {
            Outcome::Polys(ps) => {
                for p in ps {
                    out.push_str(p);
                    out.push('\n');
                }
            }
            Outcome::MinPoly { poly, .. } => {
                out.push_str(poly);
                out.push('\n');
            }
            Outcome::Bool(b) => out.push_str(&format!("{b}\n")),
            Outcome::Count(n) => out.push_str(&format!("{n}\n")),
            Outcome::Components(cs) => {
                out.push_str(&format!("{} components\n", cs.len()));
                for (i, c) in cs.iter().enumerate() {
                    out.push_str(&format!("\ncomponent {}/{}\n", i + 1, cs.len()));
                    for p in c {
                        out.push_str(p);
                        out.push('\n');
                    }
                }
            }
        }
        out
    }

    pub fn json(&self) -> Value {
        let result = match &self.outcome {
            Outcome::Polys(ps) => json!({ "gb": ps }),
            Outcome::MinPoly { poly, degree, modular } => {
                let mut v = json!({ "minpoly": poly, "degree": degree });
                if let Some(m) = modular {
                    v["primes"] = json!(m.primes);
                    v["bad_primes"] = json!(m.bad_primes);
                    v["verified"] = json!(m.verified);
                }
                v
            }
            Outcome::Bool(b) => json!({ "value": b }),
            Outcome::Count(n) => json!({ "value": n }),
            Outcome::Components(cs) => json!({
                "count": cs.len(),
                "components": cs,
            }),
        };
        json!({ "command": self.command, "field": self.field, "result": result })
    }
}

fn gb_lines<F: Field>(ideal: &Ideal<F>) -> Vec<String> {
    ideal.gb().elems().iter().map(|g| g.to_string()).collect()
}

fn uni_outcome<F: Field>(mu: &UniPoly<F>, modular: Option<ModularSummary>) -> Outcome {
    Outcome::MinPoly {
        poly: mu.to_string(),
        degree: mu.deg(),
        modular,
    }
}

fn pick_element<F: Field>(
    spec: &Spec<F>,
    poly: &Option<String>,
    elem: &Option<String>,
) -> Result<MultiPoly<F>, CliError> {
    match (poly, elem) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --poly or --elem, not both".into())),
        (Some(text), None) => spec
            .poly(text)
            .map_err(|e| CliError::Usage(format!("--poly: {e}"))),
        (None, Some(name)) => spec
            .elem(name)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("no element named `{name}`"))),
        (None, None) => match spec.elems.as_slice() {
            [(_, f)] => Ok(f.clone()),
            [] => Err(CliError::Usage("minpoly needs --poly or --elem".into())),
            _ => Err(CliError::Usage("several elements declared; choose one with --elem".into())),
        },
    }
}

fn core_alg(alg: Alg) -> Option<MinPolyAlg> {
    match alg {
        Alg::Def => Some(MinPolyAlg::Def),
        Alg::Mat => Some(MinPolyAlg::Mat),
        Alg::Elim => Some(MinPolyAlg::Elim),
        Alg::Modular | Alg::Heuristic => None,
    }
}

fn structure_command<F: StructField>(spec: &Spec<F>, cmd: &Command, flags: &Flags) -> Result<Outcome, CliError> {
    let opts = flags.structure();
    let ideal = &spec.ideal;
    Ok(match cmd {
        Command::Gb => Outcome::Polys(gb_lines(ideal)),
        Command::IsRadical => Outcome::Bool(is_radical_0dim(ideal, &opts)?),
        Command::Radical => Outcome::Polys(gb_lines(&radical_0dim(ideal, &opts)?)),
        Command::IsMaximal => Outcome::Bool(is_maximal(ideal, &opts)?),
        Command::IsPrimary => Outcome::Bool(is_primary_0dim(ideal, &opts)?),
        Command::FrobDim => {
            if ideal.field().characteristic() == 0 {
                return Err(CliError::Precondition("frob-dim needs a finite coefficient field".into()));
            }
            Outcome::Count(frobenius_dim(ideal)?)
        }
        Command::Primdec => Outcome::Components(
            primary_decomposition_0dim(ideal, &opts)?
                .iter()
                .map(gb_lines)
                .collect(),
        ),
        Command::MinPoly { .. } => unreachable!("handled per field"),
    })
}

fn run_q(spec: &Spec<Rationals>, cmd: &Command, flags: &Flags) -> Result<Outcome, CliError> {
    let Command::MinPoly { poly, elem, alg } = cmd else {
        return structure_command(spec, cmd, flags);
    };
    let f = pick_element(spec, poly, elem)?;
    let alg = alg.unwrap_or(Alg::Modular);
    if let Some(a) = core_alg(alg) {
        return Ok(uni_outcome(&minpoly(&spec.ideal, &f, a)?, None));
    }
    let order = spec.ring.order;
    let (mu, report) = if alg == Alg::Modular {
        minpoly_modular(&spec.ideal, &f, order, &flags.modular())?
    } else {
        minpoly_modular_heuristic(&spec.ring, spec.ideal.gens(), &f, order, &flags.modular())?
    };
    let summary = ModularSummary {
        primes: report.primes_used(),
        bad_primes: report.bad_primes().into_iter().map(|(p, _)| p).collect(),
        verified: report.verification == Verification::Passed,
    };
    Ok(uni_outcome(&mu, Some(summary)))
}

fn run_fp(spec: &Spec<zdk_core::PrimeField>, cmd: &Command, flags: &Flags) -> Result<Outcome, CliError> {
    let Command::MinPoly { poly, elem, alg } = cmd else {
        return structure_command(spec, cmd, flags);
    };
    let f = pick_element(spec, poly, elem)?;
    let alg = alg.unwrap_or(Alg::Def);
    let a = core_alg(alg)
        .ok_or_else(|| CliError::Usage("modular and heuristic algorithms need a problem over Q".into()))?;
    Ok(uni_outcome(&minpoly(&spec.ideal, &f, a)?, None))
}

pub fn run_command(problem: &Problem, cmd: &Command, flags: &Flags) -> Result<Report, CliError> {
    let outcome = match problem {
        Problem::Q(s) => run_q(s, cmd, flags)?,
        Problem::Fp(s) => run_fp(s, cmd, flags)?,
    };
    Ok(Report {
        command: cmd.name(),
        field: problem.field_name(),
        outcome,
    })
}
