//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criterion 6 is a long optional run, enabled with `ZDK_STRETCH=1`; its
//! failure is reported as a warning. `ZDK_ONLY=3,5` restricts the run.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zdk_core::arith::{crt_combine, rat_reconstruct, BigInt, PrimeStream, Rat};
use zdk_core::minpoly::{minpoly_def, minpoly_elim, minpoly_mat, mult_matrix};
use zdk_core::modular::{classify_prime, PrimeClass, PrimeQuality, Verification};
use zdk_core::structure::{
    frobenius_dim, is_maximal, is_primary_0dim, primary_decomposition_0dim, radical_0dim,
};
use zdk_core::{
    minpoly_modular, Error, Ideal, ModularOptions, MultiPoly, PrimeField, StructField,
    StructureOptions, TermOrder, UniPoly,
};

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    optional: bool,
    run: fn() -> Check,
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn fixture_exactness() -> Check {
    let r = q_ring(&["x", "y"]);
    let i = ideal(&r, &["3x^3 - x^2 + 1", "x^2 - y"]);
    let gb: Vec<String> = i.gb().elems().iter().map(|g| g.to_string()).collect();
    let want = ["x^2 - y", "x*y - 1/3y + 1/3", "y^2 + 1/3x - 1/9y + 1/9"];
    ensure!(
        sorted(gb.clone()) == sorted(want.map(String::from).to_vec()),
        "reduced basis {gb:?}"
    );
    let nf = i.normal_form(&poly(&r, "y^3")).to_string();
    ensure!(nf == "-1/27x - 17/81y + 8/81", "NF(y^3) = {nf}");
    let i2 = i.reduce_mod_p(TermOrder::DegRevLex, 2).map_err(|e| e.to_string())?;
    let gb2: Vec<String> = i2.gb().elems().iter().map(|g| g.to_string()).collect();
    let want2 = ["x^2 + y", "x*y + y + 1", "y^2 + x + y + 1"];
    ensure!(
        sorted(gb2.clone()) == sorted(want2.map(String::from).to_vec()),
        "mod 2 basis {gb2:?}"
    );
    let e3 = i.reduce_mod_p(TermOrder::DegRevLex, 3).err();
    ensure!(e3 == Some(Error::UglyPrime(3)), "p = 3 gave {e3:?}");
    Ok("basis, NF(y^3), mod-2 image and ugly p = 3 exact".into())
}

fn bad_prime_fixture() -> Check {
    let r = q_ring(&["x", "y"]);
    let i = ideal(&r, &["x^2", "y^2"]);
    let f = poly(&r, "x + y");
    let mq = minpoly_def(&i, &f).map_err(|e| e.to_string())?.to_string();
    ensure!(mq == "z^3", "over Q: {mq}");
    let r2 = fp_ring(2, &["x", "y"]);
    let m2 = minpoly_def(&ideal(&r2, &["x^2", "y^2"]), &poly(&r2, "x + y"))
        .map_err(|e| e.to_string())?
        .to_string();
    ensure!(m2 == "z^2", "over F_2: {m2}");
    let opts = ModularOptions {
        forced_primes: vec![2],
        ..Default::default()
    };
    let (mu, rep) = minpoly_modular(&i, &f, TermOrder::DegRevLex, &opts).map_err(|e| e.to_string())?;
    ensure!(mu.to_string() == "z^3", "modular: {mu}");
    let first = &rep.records[0];
    ensure!(
        first.prime == 2 && first.quality == PrimeQuality::Bad,
        "first record {first:?}"
    );
    ensure!(rep.verification == Verification::Passed, "{:?}", rep.verification);
    Ok(format!("z^3 over Q, z^2 over F_2, p = 2 flagged bad, {} primes", rep.primes_used()))
}

fn agreement_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut max_d = 0;
    for case in 0..200 {
        let p = if case % 2 == 0 { 101 } else { 32003 };
        let n = rng.gen_range(1..=4);
        let vars = var_names(n, "x");
        let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
        let r = fp_ring(p, &vars);
        let exps = random_exps(&mut rng, n, 6, 30);
        let extra = rng.gen_bool(0.3);
        let i = random_zero_dim(&r, &mut rng, &exps, extra);
        let nt = rng.gen_range(1..=4);
        let f = random_poly(&r, &mut rng, nt, 3);
        let gb = i.gb();
        let qb = gb.quotient_basis().map_err(|e| e.to_string())?;
        ensure!(qb.len() <= 30, "case {case}: d = {}", qb.len());
        max_d = max_d.max(qb.len());
        let def = minpoly_def(&i, &f).map_err(|e| e.to_string())?;
        let mat = minpoly_mat(&i, &f).map_err(|e| e.to_string())?;
        let elim = minpoly_elim(&i, &f).map_err(|e| e.to_string())?;
        ensure!(def == mat && def == elim, "case {case}: {def} / {mat} / {elim}");
        let m = mult_matrix(&f, &gb, &qb);
        let chi = charpoly(&r.field, &m.cols);
        ensure!(def.divides(&chi), "case {case}: {def} does not divide {chi}");
        ensure!(eval_mod(&i, &def, &f).is_zero(), "case {case}: mu(f) not in I");
    }
    Ok(format!("200 ideals, d <= {max_d}"))
}

fn modular_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut total_primes = 0;
    let mut max_d = 0;
    let mut case = 0;
    while case < 100 {
        let n = rng.gen_range(1..=3);
        let vars = var_names(n, "x");
        let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
        let r = q_ring(&vars);
        let exps = random_exps(&mut rng, n, 5, 15);
        let arg = rng.gen_bool(0.3);
        let i = random_zero_dim(&r, &mut rng, &exps, arg);
        if i.is_unit() {
            continue;
        }
        max_d = max_d.max(i.quotient_dim().map_err(|e| e.to_string())?);
        let nt = rng.gen_range(1..=3);
        let f = random_poly(&r, &mut rng, nt, 2)
            .scale(&Rat::new(rng.gen_range(1..=5).into(), rng.gen_range(1..=5).into()));
        let opts = ModularOptions {
            seed: case,
            ..Default::default()
        };
        let (mu, rep) = minpoly_modular(&i, &f, TermOrder::DegRevLex, &opts).map_err(|e| e.to_string())?;
        let direct = minpoly_def(&i, &f).map_err(|e| e.to_string())?;
        ensure!(mu == direct, "case {case}: modular {mu} vs direct {direct}");
        ensure!(rep.verification == Verification::Passed, "case {case}: not verified");
        let mut checked = 0;
        for p in PrimeStream::new(case + 1000) {
            if checked == 5 {
                break;
            }
            if classify_prime(p, &f, &i, TermOrder::DegRevLex) != PrimeClass::Usable {
                continue;
            }
            let k = PrimeField::new(p).unwrap();
            let ip = i.reduce_mod_p(TermOrder::DegRevLex, p).map_err(|e| e.to_string())?;
            let fp = f.map_mod_p(ip.ring()).map_err(|e| e.to_string())?;
            let mp = minpoly_def(&ip, &fp).map_err(|e| e.to_string())?;
            let image = UniPoly::from_coeffs(
                k,
                mu.coeffs().iter().map(|c| k.from_rational(c).unwrap()).collect(),
            );
            ensure!(mp.divides(&image), "case {case}, p = {p}: image does not divide");
            checked += 1;
        }
        total_primes += rep.primes_used();
        case += 1;
    }
    Ok(format!("100 ideals, d <= {max_d}, {total_primes} primes used in total"))
}

fn large_degrees() -> Check {
    let opts = StructureOptions::default();
    let r = fp_ring(23, &["x", "y", "z"]);
    let i = ideal(
        &r,
        &[
            "x^16 + 8x^15 - 6x^14 - 8x^13 + 4x^12 - 4x^11 + 5x^10 + 8x^9 + 5x^8 - 4x^7 + 5x^6 + 2x^5 - 7x^4 + 4x^3 + 10x^2 + 3x + 8",
            "y^5 - 7y^4 + 2y^3 + 11y^2 - y + 5",
            "z^11 + 9z^10 - 9z^9 + 7z^8 - 8z^7 - 4z^6 + 9z^5 + z^4 - 5z^3 + 7z^2 + z + 10",
        ],
    );
    let t = Instant::now();
    let mu = minpoly_def(&i, &poly(&r, "3x - 2y + 5z")).map_err(|e| e.to_string())?;
    ensure!(mu.deg() == 880, "F_23 complete intersection: deg {}", mu.deg());
    let t_mu = t.elapsed();
    ensure!(is_maximal(&i, &opts).map_err(|e| e.to_string())?, "F_23: not maximal");
    let comps = primary_decomposition_0dim(&i, &opts).map_err(|e| e.to_string())?;
    ensure!(comps.len() == 1, "F_23: {} components", comps.len());
    let t_fp = t.elapsed();

    let names = var_names(5, "a");
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let rq = q_ring(&names);
    let iq = splitting_algebra(&rq, &[0, 0, 0, -1, 2]);
    let t = Instant::now();
    let l = poly(&rq, "a1 + 2a2 + 3a3 + 4a4 + 5a5");
    let (mu, rep) = minpoly_modular(&iq, &l, TermOrder::DegRevLex, &ModularOptions::default())
        .map_err(|e| e.to_string())?;
    ensure!(mu.deg() == 120, "splitting algebra: deg {}", mu.deg());
    ensure!(rep.verification == Verification::Passed, "not verified");
    let t_mq = t.elapsed();
    ensure!(is_maximal(&iq, &opts).map_err(|e| e.to_string())?, "splitting algebra: not maximal");
    let comps = primary_decomposition_0dim(&iq, &opts).map_err(|e| e.to_string())?;
    ensure!(comps.len() == 1, "splitting algebra: {} components", comps.len());
    Ok(format!(
        "deg 880 ({:.1?}; with maximality and decomposition {:.1?}), deg 120 over Q with {} primes ({:.1?}; total {:.1?})",
        t_mu,
        t_fp,
        rep.primes_used(),
        t_mq,
        t.elapsed()
    ))
}

fn stretch() -> Check {
    let names = var_names(6, "a");
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let r = fp_ring(101, &names);
    let i = splitting_algebra(&r, &[0, 0, 0, 0, 7, 1]);
    let t = Instant::now();
    let mu = minpoly_def(&i, &poly(&r, "a1 + 2a2 + 3a3 + 4a4 + 5a5 + 6a6")).map_err(|e| e.to_string())?;
    ensure!(mu.deg() == 720, "deg {}", mu.deg());
    let t_mu = t.elapsed();
    let comps = primary_decomposition_0dim(&i, &StructureOptions::default()).map_err(|e| e.to_string())?;
    ensure!(comps.len() == 144, "{} components", comps.len());
    Ok(format!("deg 720 ({t_mu:.1?}), 144 components ({:.1?})", t.elapsed()))
}

fn check_decomposition<F: StructField>(i: &Ideal<F>, seed: u64) -> std::result::Result<usize, String> {
    let opts = StructureOptions {
        seed,
        ..Default::default()
    };
    let comps = primary_decomposition_0dim(i, &opts).map_err(|e| e.to_string())?;
    ensure!(!comps.is_empty(), "no components");
    let meet = comps[1..].iter().fold(comps[0].clone(), |a, c| a.intersect(c));
    ensure!(meet.same_ideal(i), "intersection differs from the ideal");
    for c in &comps {
        ensure!(
            is_primary_0dim(c, &opts).map_err(|e| e.to_string())?,
            "component not primary"
        );
    }
    Ok(comps.len())
}

fn decomposition_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done_fp = 0;
    let mut comps_fp = 0;
    while done_fp < 100 {
        let p = [2, 3, 5, 7, 101, 32003][rng.gen_range(0..6)];
        let n = rng.gen_range(1..=3);
        let vars = var_names(n, "x");
        let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
        let r = fp_ring(p, &vars);
        let exps = random_exps(&mut rng, n, 5, 20);
        let arg = rng.gen_bool(0.5);
        let i = random_zero_dim(&r, &mut rng, &exps, arg);
        if i.is_unit() {
            continue;
        }
        let c = check_decomposition(&i, done_fp).map_err(|e| format!("F_{p} case {done_fp}: {e}"))?;
        let fd = frobenius_dim(&i).map_err(|e| e.to_string())?;
        ensure!(c == fd, "F_{p} case {done_fp}: {c} components, Frobenius dimension {fd}");
        comps_fp += c;
        done_fp += 1;
    }
    let mut done_q = 0;
    let mut comps_q = 0;
    while done_q < 30 {
        let n = rng.gen_range(1..=3);
        let vars = var_names(n, "x");
        let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
        let r = q_ring(&vars);
        let exps = random_exps(&mut rng, n, 4, 10);
        let arg = rng.gen_bool(0.5);
        let i = random_zero_dim(&r, &mut rng, &exps, arg);
        if i.is_unit() {
            continue;
        }
        comps_q += check_decomposition(&i, done_q).map_err(|e| format!("Q case {done_q}: {e}"))?;
        done_q += 1;
    }
    Ok(format!(
        "100 ideals over F_p ({comps_fp} components), 30 over Q ({comps_q} components)"
    ))
}

fn radical_properties() -> Check {
    let opts = StructureOptions::default();
    let r = q_ring(&["x1", "x2", "x3", "x4"]);
    let m = ideal(&r, &["x1", "x2", "x3", "x4"]);
    let sq: Vec<MultiPoly<_>> = m
        .gens()
        .iter()
        .flat_map(|a| m.gens().iter().map(move |b| a.mul(b)))
        .collect();
    let i = Ideal::new(&r, sq);
    let d = i.quotient_dim().map_err(|e| e.to_string())?;
    ensure!(d == 5, "d = {d}");
    let rad = radical_0dim(&i, &opts).map_err(|e| e.to_string())?;
    ensure!(rad.same_ideal(&m), "radical is {:?}", rad.gb().to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(1..=999)).collect();
        let l = MultiPoly::linear_form(&r, &c);
        let mu = minpoly_def(&i, &l).map_err(|e| e.to_string())?;
        ensure!(mu.to_string() == "z^2", "mu(l) = {mu}");
        // adding the square-free part l itself falls short of the radical
        ensure!(i.add_generators(&[l]).quotient_dim().unwrap() == 4, "I + <l> too small");
    }
    let r1 = q_ring(&["x"]);
    ensure!(
        is_maximal(&ideal(&r1, &["x^4 - 10x^2 + 1"]), &opts).map_err(|e| e.to_string())?,
        "x^4 - 10x^2 + 1 not maximal over Q"
    );
    let r5 = fp_ring(5, &["x"]);
    ensure!(
        !is_primary_0dim(&ideal(&r5, &["x^4 - 10x^2 + 1"]), &opts).map_err(|e| e.to_string())?,
        "x^4 - 10x^2 + 1 primary over F_5"
    );
    Ok("radical of the squared maximal ideal, linear forms give z^2, maximal over Q, not primary over F_5".into())
}

fn reconstruction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let primes: Vec<u64> = PrimeStream::new(9).take(64).collect();
    for case in 0..1000 {
        let b: i64 = rng.gen_range(1..=1_000_000);
        let a: i64 = rng.gen_range(-1_000_000..=1_000_000);
        let q = Rat::new(a.into(), b.into());
        let need = (BigInt::from(2) * BigInt::from(a.abs().max(1)) * BigInt::from(b)) << 20;
        let mut m = BigInt::from(1);
        let mut r = BigInt::from(0);
        let start = rng.gen_range(0..32);
        for &p in &primes[start..] {
            let k = PrimeField::new(p).unwrap();
            r = crt_combine(&r, &m, &BigInt::from(k.from_rational(&q).unwrap()), &BigInt::from(p))
                .map_err(|e| e.to_string())?;
            m *= p;
            if m > need {
                break;
            }
        }
        let rr = rat_reconstruct(&r, &m);
        ensure!(
            &rr.num == q.numer() && &rr.den == q.denom() && rr.reliable,
            "case {case}: {a}/{b} gave {}/{} reliable={}",
            rr.num,
            rr.den,
            rr.reliable
        );
    }
    let mut recovered = 0;
    for case in 0..100 {
        let q = Rat::new(
            rng.gen_range(-1_000_000i64..=1_000_000).into(),
            rng.gen_range(1i64..=1_000_000).into(),
        );
        let bad = rng.gen_range(0..10);
        let mut m = BigInt::from(1);
        let mut r = BigInt::from(0);
        for (j, &p) in primes[case % 40..].iter().take(12).enumerate() {
            let k = PrimeField::new(p).unwrap();
            let mut v = k.from_rational(&q).unwrap();
            if j == bad {
                v = (v + 1 + rng.gen_range(0..p - 1)) % p;
            }
            r = crt_combine(&r, &m, &BigInt::from(v), &BigInt::from(p)).map_err(|e| e.to_string())?;
            m *= p;
        }
        let rr = rat_reconstruct(&r, &m);
        ensure!(
            &rr.num == q.numer() && &rr.den == q.denom(),
            "corrupted case {case}: {q} gave {}/{}",
            rr.num,
            rr.den
        );
        recovered += 1;
    }
    Ok(format!("1000 round trips; {recovered}/100 values recovered with one corrupted residue among 12"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "fixture exactness", budget: Duration::from_secs(10), optional: false, run: fixture_exactness },
        Criterion { id: 2, name: "bad-prime fixture", budget: Duration::from_secs(1), optional: false, run: bad_prime_fixture },
        Criterion { id: 3, name: "algorithm agreement", budget: Duration::from_secs(300), optional: false, run: agreement_suite },
        Criterion { id: 4, name: "modular correctness", budget: Duration::from_secs(600), optional: false, run: modular_suite },
        Criterion { id: 5, name: "degree table, desk scale", budget: Duration::from_secs(1800), optional: false, run: large_degrees },
        Criterion { id: 6, name: "stretch: degree 720, 144 components", budget: Duration::from_secs(3600), optional: true, run: stretch },
        Criterion { id: 7, name: "primary decomposition properties", budget: Duration::from_secs(900), optional: false, run: decomposition_properties },
        Criterion { id: 8, name: "radical properties", budget: Duration::from_secs(60), optional: false, run: radical_properties },
        Criterion { id: 9, name: "reconstruction robustness", budget: Duration::from_secs(60), optional: false, run: reconstruction },
    ];
    let only: Option<Vec<u32>> = std::env::var("ZDK_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect());
    let stretch_on = std::env::var("ZDK_STRETCH").is_ok_and(|v| v == "1");
    let mut failed = 0;
    for c in &criteria {
        if only.as_ref().is_some_and(|o| !o.contains(&c.id)) {
            continue;
        }
        if c.optional && !stretch_on {
            println!("criterion {} [{}]: SKIP (set ZDK_STRETCH=1)", c.id, c.name);
            continue;
        }
        let t = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let el = t.elapsed();
        let out = match out {
            Ok(_) if el > c.budget => Err(format!("over budget ({el:.1?} > {:?})", c.budget)),
            o => o,
        };
        match out {
            Ok(detail) => println!("criterion {} [{}]: PASS ({el:.1?}) {detail}", c.id, c.name),
            Err(why) if c.optional => {
                println!("criterion {} [{}]: WARN ({el:.1?}) {why}", c.id, c.name)
            }
            Err(why) => {
                failed += 1;
                println!("criterion {} [{}]: FAIL ({el:.1?}) {why}", c.id, c.name);
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
