//! Acceptance run: one line per criterion, nonzero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use braided_suq2::algebra::{confluence_check, suq2_presentation, torus_presentation, uq2_presentation};
use braided_suq2::exec::Exec;
use braided_suq2::numeric::{oracle_batch, TruncatedRep};
use braided_suq2::scalars::Scalar;
use braided_suq2::verify::{run_check, VerifyOptions};
use num_complex::Complex64;

const TIME_LIMIT: Duration = Duration::from_secs(60);

fn checks(ids: &[&str], opts: &VerifyOptions) -> Result<String, String> {
    let mut notes = Vec::new();
    for id in ids {
        let r = run_check(id, opts).map_err(|e| e.to_string())?;
        if !r.passed {
            return Err(format!("{id}: {:?} {:?}", r.notes, r.residuals.iter().take(4).collect::<Vec<_>>()));
        }
        notes.extend(r.notes.iter().map(|n| format!("{id}: {n}")));
    }
    Ok(if notes.is_empty() { ids.join(", ") } else { format!("{}; {}", ids.join(", "), notes.join("; ")) })
}

fn confluence() -> Result<String, String> {
    let q = Scalar::q();
    let presentations = [
        suq2_presentation(&q).unwrap(),
        torus_presentation(&Scalar::zeta()).unwrap(),
        uq2_presentation(&q).unwrap(),
    ];
    let mut out = Vec::new();
    for p in &presentations {
        let r = confluence_check(p, 4, 500, 20240601, Exec::Parallel);
        if !r.passed() {
            return Err(format!("{}: {:?}", p.label(), r.divergences.first()));
        }
        out.push(format!("{} ({} critical pairs, {} words)", p.label(), r.critical_pairs, r.words_checked));
    }
    Ok(out.join(", "))
}

fn numeric() -> Result<String, String> {
    let p = suq2_presentation(&Scalar::q()).unwrap();
    let qs = [Complex64::new(0.5, 0.0), Complex64::new(0.9, 0.0), Complex64::new(0.3, 0.4), Complex64::new(0.6, -0.3)];
    let (mut rel, mut cmp, mut spec) = (0.0f64, 0.0f64, 0.0f64);
    for q in qs {
        let rep = TruncatedRep::build(q, 30, 8).map_err(|e| e.to_string())?;
        let r = rep.relation_residuals().max_interior();
        let c = oracle_batch(&rep, &p, 200, 6, 7, Exec::Parallel).map_err(|e| e.to_string())?.max_deviation;
        let s = rep.spectrum_deviation();
        if r > 1e-12 || c > 1e-11 || s > 1e-12 {
            return Err(format!("q = {q}: relations {r:e}, compare {c:e}, spectrum {s:e}"));
        }
        rel = rel.max(r);
        cmp = cmp.max(c);
        spec = spec.max(s);
    }
    Ok(format!("max relation residual {rel:.1e}, max deviation {cmp:.1e}, spectrum error {spec:.1e}"))
}

fn properties() -> Result<String, String> {
    let laws = common::laws();
    for law in &laws {
        (law.run)(1000).map_err(|e| format!("{}: {e}", law.name))?;
    }
    Ok(format!("{} laws x 1000 cases", laws.len()))
}

fn main() {
    let opts = VerifyOptions::default();
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<String, String>>)> = vec![
        ("unitarity of u", Box::new(|| checks(&["unitary-u"], &opts))),
        ("Δ is a homomorphism", Box::new(|| checks(&["delta-hom"], &opts))),
        ("Δ is coassociative", Box::new(|| checks(&["delta-coassoc"], &opts))),
        ("cancellation witnesses to length 3", Box::new(|| checks(&["cancellation-witness"], &opts))),
        (
            "representations and the invariant vector",
            Box::new(|| checks(&["tensprod-corep", "invariant-vector", "invariance-constraints"], &opts)),
        ),
        ("symmetries", Box::new(|| checks(&["q-inverse-iso", "aq-symmetry"], &opts))),
        ("U_q(2)", Box::new(|| checks(&["uq2-hom", "uq2-coassoc", "uq2-corep-bijection"], &opts))),
        ("rewrite confluence", Box::new(confluence)),
        ("numeric oracle", Box::new(numeric)),
        ("property suites", Box::new(properties)),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > TIME_LIMIT => Err(format!("{msg}; exceeded {}s", TIME_LIMIT.as_secs())),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name} ({:.2}s): {msg}", k + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({:.2}s): {msg}", k + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
