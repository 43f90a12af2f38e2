//! Benchmark corpus: problem files with expected degrees, verdicts and
//! component counts, listed in a TOML manifest.
//!
//! ```toml
//! [[case]]
//! id = "f101-four-var-f1"
//! file = "f101_four_var.zdk"
//! elem = "f1"
//! expect = { minpoly_deg = 500 }
//! ```
//! Optional keys: `suite` (`default` or `stretch`), `intersect` (a second
//! problem file whose ideal is intersected with the first), `poly` (an
//! element given inline) and `points` (the vanishing ideal of random integer
//! points, built instead of reading `file`).

use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use zdk_core::structure::{
    frobenius_dim, is_maximal, is_primary_0dim, is_radical_0dim, primary_decomposition_0dim,
};
use zdk_core::{Field, Rationals, StructField, UniPoly};

use crate::problem::{parse_problem, Problem, Spec};
use crate::run::{CliError, Flags};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    #[default]
    Default,
    Stretch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteFilter {
    Default,
    Stretch,
    All,
}

impl SuiteFilter {
    fn admits(self, s: Suite) -> bool {
        match self {
            SuiteFilter::All => true,
            SuiteFilter::Default => s == Suite::Default,
            SuiteFilter::Stretch => s == Suite::Stretch,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Points {
    /// Ring declaration without the leading `ring`, e.g. `Q[x,y,z] order lex`.
    pub ring: String,
    pub count: usize,
    /// Coordinates are drawn from `(-bound, bound)`.
    pub bound: i64,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    pub minpoly_deg: Option<usize>,
    pub is_radical: Option<bool>,
    pub is_maximal: Option<bool>,
    pub is_primary: Option<bool>,
    pub components: Option<usize>,
    pub frob_dim: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchCase {
    pub id: String,
    #[serde(default)]
    pub suite: Suite,
    pub file: Option<String>,
    pub points: Option<Points>,
    pub intersect: Option<String>,
    pub elem: Option<String>,
    pub poly: Option<String>,
    #[serde(default)]
    pub expect: Expect,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(rename = "case", default)]
    pub cases: Vec<BenchCase>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub got: Result<String, String>,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.got.as_ref() == Ok(&self.expected)
    }
}

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub id: String,
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Set when the case could not be loaded at all.
    pub load_error: Option<String>,
    pub seconds: f64,
}

impl CaseResult {
    pub fn pass(&self) -> bool {
        self.load_error.is_none() && self.checks.iter().all(Check::pass)
    }

    pub fn line(&self) -> String {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        let mut parts = Vec::new();
        if let Some(e) = &self.load_error {
            parts.push(format!("error: {e}"));
        }
        for c in &self.checks {
            parts.push(match &c.got {
                Ok(v) if c.pass() => format!("{}={v}", c.name),
                Ok(v) => format!("{}={v} (want {})", c.name, c.expected),
                Err(e) => format!("{}: {e} (want {})", c.name, c.expected),
            });
        }
        format!("{verdict} {:<28} {:>9.2}s  {}", self.id, self.seconds, parts.join(" "))
    }
}

pub fn load_manifest(path: &Path) -> Result<Manifest, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Vanishing ideal of random points with distinct first coordinates, in
/// shape form `<p(x_1), x_2 - q_2(x_1), ...>`, as problem text.
pub fn points_problem(pts: &Points) -> Result<String, CliError> {
    let (head, _) = pts
        .ring
        .split_once('[')
        .ok_or_else(|| CliError::Usage("points: bad ring".into()))?;
    if head.trim() != "Q" {
        return Err(CliError::Usage("points: only Q is supported".into()));
    }
    let probe = parse_problem(&format!("ring {}\nideal = [0]", pts.ring))?;
    let Problem::Q(spec) = probe else { unreachable!() };
    let vars = spec.ring.vars.clone();
    if pts.bound < 1 || pts.count as i64 > 2 * pts.bound - 1 {
        return Err(CliError::Usage("points: bound too small for distinct coordinates".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(pts.seed);
    let mut xs: Vec<i64> = Vec::with_capacity(pts.count);
    while xs.len() < pts.count {
        let x = rng.gen_range(-pts.bound + 1..pts.bound);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    let coords: Vec<Vec<i64>> = (1..vars.len())
        .map(|_| (0..pts.count).map(|_| rng.gen_range(-pts.bound + 1..pts.bound)).collect())
        .collect();

    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let vanish = xs.iter().fold(UniPoly::one(Rationals), |acc, &x| {
        acc.mul(&UniPoly::from_coeffs(Rationals, vec![-q(x), BigRational::one()]))
    });
    // Lagrange basis scaled by the barycentric weights
    let basis: Vec<UniPoly<Rationals>> = xs
        .iter()
        .map(|&x| {
            let b = vanish.div_exact(&UniPoly::from_coeffs(Rationals, vec![-q(x), BigRational::one()]));
            let w = Rationals.inv(&b.eval(&q(x)));
            b.scale(&w)
        })
        .collect();
    let mut gens = vec![vanish.format_with(&vars[0])];
    for (v, ys) in vars[1..].iter().zip(&coords) {
        let interp = basis
            .iter()
            .zip(ys)
            .fold(UniPoly::zero(Rationals), |acc, (b, &y)| acc.add(&b.scale(&q(y))));
        gens.push(format!("{v} - ({})", interp.format_with(&vars[0])));
    }
    Ok(format!("ring {}\nideal = [{}]\n", pts.ring, gens.join(",\n  ")))
}

fn load_case(dir: &Path, case: &BenchCase) -> Result<Problem, CliError> {
    let read = |rel: &str| -> Result<Problem, CliError> {
        let path: PathBuf = dir.join(rel);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        parse_problem(&text).map_err(|e| CliError::Usage(format!("{}:{e}", path.display())))
    };
    let base = match (&case.file, &case.points) {
        (Some(f), None) => read(f)?,
        (None, Some(p)) => parse_problem(&points_problem(p)?)?,
        _ => return Err(CliError::Usage("give exactly one of `file` and `points`".into())),
    };
    let Some(other) = &case.intersect else {
        return Ok(base);
    };
    Ok(match (base, read(other)?) {
        (Problem::Q(a), Problem::Q(b)) => Problem::Q(intersect(a, &b)?),
        (Problem::Fp(a), Problem::Fp(b)) if a.ring.field == b.ring.field => Problem::Fp(intersect(a, &b)?),
        _ => return Err(CliError::Usage("intersected problems live over different fields".into())),
    })
}

fn intersect<F: Field>(mut a: Spec<F>, b: &Spec<F>) -> Result<Spec<F>, CliError> {
    if a.ring.vars != b.ring.vars {
        return Err(CliError::Usage("intersected problems use different variables".into()));
    }
    let other = zdk_core::Ideal::new(&a.ring, b.ideal.gens().iter().map(|g| g.to_ring(&a.ring)).collect());
    a.ideal = a.ideal.intersect(&other);
    Ok(a)
}

fn show<T: ToString>(r: zdk_core::Result<T>) -> Result<String, String> {
    r.map(|v| v.to_string()).map_err(|e| e.to_string())
}

fn evaluate<F: StructField>(spec: &Spec<F>, case: &BenchCase, flags: &Flags) -> Vec<Check> {
    let opts = flags.structure();
    let ideal = &spec.ideal;
    let e = &case.expect;
    let mut checks = Vec::new();
    if let Some(d) = e.minpoly_deg {
        let f = match (&case.poly, &case.elem) {
            (Some(t), _) => spec.poly(t).map_err(|e| e.to_string()),
            (None, Some(n)) => spec.elem(n).cloned().ok_or_else(|| format!("no element `{n}`")),
            (None, None) => match spec.elems.as_slice() {
                [(_, f)] => Ok(f.clone()),
                _ => Err("no element chosen".to_string()),
            },
        };
        let got = f.and_then(|f| show(F::structure_minpoly(ideal, &f, &opts).map(|mu| mu.deg())));
        checks.push(Check {
            name: "minpoly_deg",
            expected: d.to_string(),
            got,
        });
    }
    let mut push = |name, expected: Option<String>, run: &dyn Fn() -> Result<String, String>| {
        if let Some(expected) = expected {
            checks.push(Check {
                name,
                expected,
                got: run(),
            });
        }
    };
    let s = |v: Option<bool>| v.map(|b| b.to_string());
    push("is_radical", s(e.is_radical), &|| show(is_radical_0dim(ideal, &opts)));
    push("is_maximal", s(e.is_maximal), &|| show(is_maximal(ideal, &opts)));
    push("is_primary", s(e.is_primary), &|| show(is_primary_0dim(ideal, &opts)));
    push("components", e.components.map(|n| n.to_string()), &|| {
        show(primary_decomposition_0dim(ideal, &opts).map(|c| c.len()))
    });
    push("frob_dim", e.frob_dim.map(|n| n.to_string()), &|| show(frobenius_dim(ideal)));
    checks
}

pub fn run_case(dir: &Path, case: &BenchCase, flags: &Flags) -> CaseResult {
    let t0 = Instant::now();
    let outcome = std::panic::catch_unwind(|| {
        load_case(dir, case).map(|p| match &p {
            Problem::Q(s) => evaluate(s, case, flags),
            Problem::Fp(s) => evaluate(s, case, flags),
        })
    });
    let (checks, load_error) = match outcome {
        Ok(Ok(c)) => (c, None),
        Ok(Err(e)) => (Vec::new(), Some(e.to_string())),
        Err(_) => (Vec::new(), Some("panicked".to_string())),
    };
    CaseResult {
        id: case.id.clone(),
        suite: case.suite,
        checks,
        load_error,
        seconds: t0.elapsed().as_secs_f64(),
    }
}

/// Run the admitted cases of a manifest in order, calling `report` after each.
pub fn run_bench(
    manifest: &Path,
    filter: SuiteFilter,
    only: &[String],
    flags: &Flags,
    mut report: impl FnMut(&CaseResult),
) -> Result<Vec<CaseResult>, CliError> {
    let m = load_manifest(manifest)?;
    let dir = manifest.parent().unwrap_or(Path::new("."));
    let mut out = Vec::new();
    for case in &m.cases {
        if !filter.admits(case.suite) || (!only.is_empty() && !only.contains(&case.id)) {
            continue;
        }
        let r = run_case(dir, case, flags);
        report(&r);
        out.push(r);
    }
    Ok(out)
}
