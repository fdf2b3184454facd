//! JSON and CSV renderings. Key order is fixed so identical runs print
//! identical bytes apart from `wall_time_ms`.

use qeuler_core::posetlab::Poset;
use qeuler_core::{Poly, Report, Var};
use serde_json::{json, Value};

use crate::{SuiteRun, SCHEMA};

pub fn report_json(r: &Report) -> Value {
    let mut v = json!({
        "theorem": r.theorem,
        "n_or_N": r.bound,
        "pass": r.pass(),
        "checks": r.checks.iter().map(|c| json!({"label": c.label, "n": c.n, "pass": c.pass})).collect::<Vec<_>>(),
    });
    if let Some(c) = r.first_mismatch() {
        v["first_mismatch"] = json!({"label": c.label, "n": c.n, "lhs": c.lhs, "rhs": c.rhs});
    }
    v
}

pub fn verify_json(suite: &str, runs: &[SuiteRun], wall_time_ms: u128) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "verify",
        "suite": suite,
        "pass": runs.iter().all(SuiteRun::pass),
        "reports": runs.iter().map(|run| json!({
            "suite": run.suite.name(),
            "parameters": {"n": run.bounds.n, "m": run.bounds.m, "q": run.bounds.q},
            "details": run.details,
            "report": report_json(&run.report),
        })).collect::<Vec<_>>(),
        "wall_time_ms": wall_time_ms,
    })
}

/// One line per run, plus the first mismatch of a failing run.
pub fn verify_text(runs: &[SuiteRun]) -> String {
    let mut out = String::new();
    for run in runs {
        let r = &run.report;
        let mut params = format!("n={}", run.bounds.n);
        if let Some(m) = run.bounds.m {
            params += &format!(", m={m}");
        }
        if let Some(q) = run.bounds.q {
            params += &format!(", q={q}");
        }
        let failed = r.checks.iter().filter(|c| !c.pass).count();
        if failed == 0 {
            out += &format!("{} ({params}): PASS, {} checks\n", run.suite.name(), r.checks.len());
        } else {
            out += &format!("{} ({params}): FAIL, {failed} of {} checks failed\n", run.suite.name(), r.checks.len());
        }
        for d in &run.details {
            out += &format!("  {d}\n");
        }
        if let Some(c) = r.first_mismatch() {
            out += &format!("  first mismatch: {}\n", c.label);
            if let (Some(l), Some(rh)) = (&c.lhs, &c.rhs) {
                out += &format!("    lhs: {l}\n    rhs: {rh}\n");
            }
        }
    }
    out
}

/// Exponent columns for the variables present, then the coefficient.
pub fn poly_csv(p: &Poly, vars: &[Var]) -> String {
    let mut out: String = vars.iter().map(|v| format!("{v},")).collect();
    out += "coeff\n";
    for (m, c) in p.terms() {
        for v in vars {
            out += &format!("{},", m.exponent(*v));
        }
        out += &format!("{c}\n");
    }
    out
}

pub fn poset_json(p: &Poset) -> Value {
    json!({
        "schema": SCHEMA,
        "elements": p.labels(),
        "ranks": p.ranks(),
        "covers": p.covers(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let p: Poly = "1 + q*t + 2*q^2*t".parse().unwrap();
        assert_eq!(poly_csv(&p, &[Var::Q, Var::T]), "q,t,coeff\n0,0,1\n1,1,1\n2,1,2\n");
    }

    #[test]
    fn poset_dump_shape() {
        let v = poset_json(&Poset::chain(3));
        assert_eq!(v["elements"], json!(["1", "2", "3"]));
        assert_eq!(v["ranks"], json!([0, 1, 2]));
        assert_eq!(v["covers"], json!([[0, 1], [1, 2]]));
    }

    #[test]
    fn mismatch_is_reported() {
        let mut r = Report::new("demo", 2);
        r.compare("n=1", 1, &1, &1);
        r.compare("n=2", 2, &3, &4);
        let v = report_json(&r);
        assert_eq!(v["pass"], json!(false));
        assert_eq!(v["first_mismatch"], json!({"label": "n=2", "n": 2, "lhs": "3", "rhs": "4"}));
    }
}
