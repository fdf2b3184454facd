//! The `(maj, exc)` q-Eulerian polynomials, their fixed-point refinement and the
//! `(aid, des)` partner, with cross-multiplied checks of the generating-function
//! identities.
//!
//! Series here are in numerator form: `Σ a_n z^n / [n]_q!` is stored as `(a_n)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactalg::{Convolution, Monomial, Poly, Var, ZSeries};
use crate::exec::{Executor, Sequential};
use crate::permstat::{self, factorial, for_each_in_ranks};
use crate::qcalc::{q_exp_series, q_factorial, q_int, q_multinomial};
use crate::Report;

/// Sums `Π v_i^{stat_i(σ)}` over `S_n` through the executor.
fn tally<const K: usize>(
    n: usize,
    vars: [Var; K],
    stat: fn(&[usize]) -> [usize; K],
    exec: &dyn Executor,
) -> Poly {
    exec.sum_ranges(factorial(n), &|ranks| {
        let mut counts: BTreeMap<[usize; K], u64> = BTreeMap::new();
        for_each_in_ranks(n, ranks, |w| *counts.entry(stat(w)).or_insert(0) += 1);
        Poly::from_terms(counts.into_iter().map(|(exps, c)| {
            let mut m = Monomial::one();
            for (v, e) in vars.iter().zip(exps) {
                m.set(*v, e as u32);
            }
            (m, BigInt::from(c))
        }))
    })
}

/// `A_n^{maj,exc}(q,t) = Σ_{σ ∈ S_n} q^maj t^exc`; `A_0 = 1`.
pub fn maj_exc_poly(n: usize) -> Poly {
    maj_exc_poly_with(n, &Sequential)
}

pub fn maj_exc_poly_with(n: usize, exec: &dyn Executor) -> Poly {
    tally(n, [Var::Q, Var::T], |w| [permstat::maj(w), permstat::exc(w)], exec)
}

/// `Σ q^maj t^exc r^fix`.
pub fn fix_refined_poly(n: usize) -> Poly {
    fix_refined_poly_with(n, &Sequential)
}

pub fn fix_refined_poly_with(n: usize, exec: &dyn Executor) -> Poly {
    tally(
        n,
        [Var::Q, Var::T, Var::R],
        |w| [permstat::maj(w), permstat::exc(w), permstat::fix(w)],
        exec,
    )
}

/// `Σ q^aid t^des`.
pub fn aid_des_poly(n: usize) -> Poly {
    aid_des_poly_with(n, &Sequential)
}

pub fn aid_des_poly_with(n: usize, exec: &dyn Executor) -> Poly {
    tally(n, [Var::Q, Var::T], |w| [permstat::aid(w), permstat::des(w)], exec)
}

/// Eulerian polynomial `Σ t^des`.
pub fn eulerian_poly(n: usize) -> Poly {
    tally(n, [Var::T], |w| [permstat::des(w)], &Sequential)
}

/// `A_n^{maj,exc}` for `n = 0..=max_n`, optionally with the `r^fix` refinement.
#[derive(Clone, Debug)]
pub struct QEulerianTable {
    pub maj_exc: Vec<Poly>,
    pub fix_refined: Option<Vec<Poly>>,
}

impl QEulerianTable {
    pub fn build(max_n: usize, with_fix: bool, exec: &dyn Executor) -> Self {
        if with_fix {
            let fix: Vec<Poly> = (0..=max_n).map(|n| fix_refined_poly_with(n, exec)).collect();
            let maj_exc = fix.iter().map(|p| p.subs(Var::R, &Poly::one())).collect();
            QEulerianTable { maj_exc, fix_refined: Some(fix) }
        } else {
            QEulerianTable {
                maj_exc: (0..=max_n).map(|n| maj_exc_poly_with(n, exec)).collect(),
                fix_refined: None,
            }
        }
    }
}

/// Checks `(exp_q(ztq) - tq exp_q(z)) · Σ A_n z^n/[n]_q! = (1-tq) exp_q(z)` through `z^N`.
pub fn verify_thm_1_1(max_n: usize) -> Report {
    verify_thm_1_1_with(max_n, &Sequential)
}

pub fn verify_thm_1_1_with(max_n: usize, exec: &dyn Executor) -> Report {
    let table = QEulerianTable::build(max_n, false, exec);
    let tq = Poly::var(Var::T) * Poly::var(Var::Q);
    let lhs = ZSeries::new(table.maj_exc, Convolution::q_generic());
    let exp = q_exp_series(max_n, &Poly::one());
    let denom = q_exp_series(max_n, &tq).sub(&exp.scale(&tq)).expect("same normalization");
    let numer = exp.scale(&(Poly::one() - &tq));
    let prod = denom.mul(&lhs).expect("same normalization");
    let mut report = Report::new("thm1-1", max_n);
    for n in 0..=max_n {
        report.compare(format!("n={n}"), n, prod.coeff(n), numer.coeff(n));
    }
    report
}

/// The `q = 1` shadow of [`verify_thm_1_1`]: `A_n(1,t)` are the Eulerian
/// polynomials and satisfy `(e^{zt} - t e^z) · Σ A_n z^n/n! = (1-t) e^z`.
pub fn verify_eq_1(max_n: usize) -> Report {
    let one = Poly::one();
    let t = Poly::var(Var::T);
    let kind = Convolution::QFactorial(one.clone());
    let lhs = ZSeries::from_fn(max_n, kind.clone(), |n| maj_exc_poly(n).subs(Var::Q, &one));
    let exp = ZSeries::from_fn(max_n, kind.clone(), |_| one.clone());
    let denom = exp.scale_z(&t).sub(&exp.scale(&t)).expect("same normalization");
    let numer = exp.scale(&(&one - &t));
    let prod = denom.mul(&lhs).expect("same normalization");
    let mut report = Report::new("eq1", max_n);
    for n in 0..=max_n {
        report.compare(format!("n={n}"), n, prod.coeff(n), numer.coeff(n));
    }
    report
}

/// Ordered compositions of `total` into `parts` parts, each at least `min`.
fn compositions(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, left: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = min;
        while k + min * (left - 1) <= rest {
            cur.push(k);
            go(rest - k, left - 1, min, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(total, parts, min, &mut Vec::new(), &mut out);
    out
}

/// The closed form for `Σ q^maj t^exc r^fix`: a sum over `m` and ordered tuples
/// `(k_0, k_1..k_m)` with `k_0 >= 0`, `k_i >= 2`, `Σ k_i = n` of
/// `(tq)^m [n; k_0..k_m]_q r^{k_0} Π [k_i - 1]_{tq}`.
pub fn thm_1_2_rhs(n: usize) -> Poly {
    let tq = Poly::var(Var::T) * Poly::var(Var::Q);
    let mut total = Poly::zero();
    for m in 0..=n / 2 {
        let tq_m = tq.pow(m as u32);
        for k0 in 0..=n {
            for ks in compositions(n - k0, m, 2) {
                let mut parts = Vec::with_capacity(m + 1);
                parts.push(k0);
                parts.extend_from_slice(&ks);
                let mut term = &tq_m * &q_multinomial(n, &parts).expect("parts sum to n");
                term = term.mul_monomial(&Monomial::var_pow(Var::R, k0 as u32));
                for &k in &ks {
                    term = &term * &q_int(k - 1, &tq);
                }
                total += term;
            }
        }
    }
    total
}

/// Closed form against brute force for every `n' <= n`, plus the `q=t=r=1` count `n!`.
pub fn verify_thm_1_2(max_n: usize) -> Report {
    verify_thm_1_2_with(max_n, &Sequential)
}

pub fn verify_thm_1_2_with(max_n: usize, exec: &dyn Executor) -> Report {
    let mut report = Report::new("thm1-2", max_n);
    for n in 0..=max_n {
        let rhs = thm_1_2_rhs(n);
        report.compare(format!("n={n}"), n, &fix_refined_poly_with(n, exec), &rhs);
        report.compare(
            format!("n={n} at q=t=r=1"),
            n,
            &rhs.eval_all(1),
            &BigInt::from(factorial(n)),
        );
    }
    report
}

/// `Σ q^aid t^des = Σ q^maj t^exc` for `1 <= n' <= n`.
pub fn verify_thm_4_1(max_n: usize) -> Report {
    verify_thm_4_1_with(max_n, &Sequential)
}

pub fn verify_thm_4_1_with(max_n: usize, exec: &dyn Executor) -> Report {
    let mut report = Report::new("thm4-1", max_n);
    for n in 1..=max_n {
        report.compare(format!("n={n}"), n, &aid_des_poly_with(n, exec), &maj_exc_poly_with(n, exec));
    }
    report
}

/// `A_n(1,t) = Σ t^des` and `A_n(q,1) = [n]_q!`.
pub fn verify_reductions(max_n: usize) -> Report {
    let mut report = Report::new("reductions", max_n);
    let one = Poly::one();
    for n in 0..=max_n {
        let a = maj_exc_poly(n);
        report.compare(format!("n={n} q=1"), n, &a.subs(Var::Q, &one), &eulerian_poly(n));
        report.compare(format!("n={n} t=1"), n, &a.subs(Var::T, &one), &q_factorial(n));
    }
    report
}
