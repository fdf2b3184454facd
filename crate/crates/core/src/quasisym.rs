//! Quasisymmetric and symmetric functions in finitely many variables `x_1..x_m`.
//!
//! The fundamental function `F_{S,n}` sums `x_{i_1} ... x_{i_n}` over weakly
//! decreasing index sequences `i_1 >= ... >= i_n` that drop strictly at every
//! position of `S`. Working in `m >= n` concrete variables loses nothing for
//! identities between symmetric functions of degree `<= n`.
//!
//! `Q_{n,j}`, `Q_{λ,j}` and `~Q_{n,j}` are first computed as multisets of
//! `Exd` sets ([`FExpansion`]) and only expanded into monomials on demand.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactalg::{Bindings, Convolution, Monomial, Poly, Var, ZSeries};
use crate::permstat::{self, Partition, PosSet};
use crate::{genfun, qcalc, Error, Report};

/// A polynomial in `x_1..x_m`, homogeneous of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    poly: Poly,
    vars: usize,
    degree: usize,
}

impl SymPoly {
    pub fn new(poly: Poly, vars: usize, degree: usize) -> Self {
        SymPoly { poly, vars, degree }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_homogeneous(&self) -> bool {
        self.poly.terms().all(|(m, _)| m.degree() as usize == self.degree)
    }

    /// Invariant under every adjacent swap `x_i <-> x_{i+1}`, `i < m`.
    pub fn is_symmetric(&self) -> bool {
        (1..self.vars as u32).all(|i| self.poly.swap_vars(Var::X(i), Var::X(i + 1)) == self.poly)
    }

    /// Coefficient of `x_1 x_2 ... x_d` with `d` the degree.
    pub fn squarefree_coeff(&self) -> BigInt {
        self.poly.coeff(&squarefree_monomial(self.degree))
    }
}

pub fn squarefree_monomial(n: usize) -> Monomial {
    (1..=n as u32).fold(Monomial::one(), |m, i| m.mul(&Monomial::var(Var::X(i))))
}

/// `F_{S,n}(x_1, ..., x_m)`; `F_{∅,0} = 1`.
pub fn fundamental_f(s: PosSet, n: usize, m: usize) -> Result<SymPoly, Error> {
    if m == 0 {
        return Err(Error::NoVariables);
    }
    if s.max().is_some_and(|p| p >= n.max(1)) || (n == 0 && !s.is_empty()) {
        return Err(Error::InvalidSubset { set: s.to_vec(), max: n.saturating_sub(1) });
    }
    Ok(SymPoly::new(fundamental_poly(s, n, m), m, n))
}

fn fundamental_poly(s: PosSet, n: usize, m: usize) -> Poly {
    // exps[i] counts how often x_{i+1} has been used
    fn go(pos: usize, prev: usize, n: usize, s: PosSet, exps: &mut Vec<u32>, out: &mut Poly) {
        if pos > n {
            out.add_term(x_monomial(exps), BigInt::from(1));
            return;
        }
        // i_pos <= i_{pos-1}, strictly when pos-1 is in S
        let hi = if pos > 1 && s.contains(pos - 1) { prev - 1 } else { prev };
        for i in 1..=hi {
            exps[i - 1] += 1;
            go(pos + 1, i, n, s, exps, out);
            exps[i - 1] -= 1;
        }
    }
    let mut out = Poly::zero();
    let mut exps = vec![0u32; m];
    go(1, m, n, s, &mut exps, &mut out);
    out
}

fn x_monomial(exps: &[u32]) -> Monomial {
    let mut full = vec![0u32; 4];
    full.extend_from_slice(exps);
    Monomial::from_exponents(full)
}

/// `h_n(x_1, ..., x_m) = F_{∅,n}`.
pub fn complete_h(n: usize, m: usize) -> SymPoly {
    SymPoly::new(fundamental_poly(PosSet::EMPTY, n, m), m, n)
}

/// A nonnegative combination `Σ c_S F_{S,n}` at a fixed degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FExpansion {
    pub n: usize,
    pub terms: BTreeMap<PosSet, u64>,
}

impl FExpansion {
    pub fn new(n: usize) -> Self {
        FExpansion { n, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, s: PosSet) {
        *self.terms.entry(s).or_insert(0) += 1;
    }

    pub fn count(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Expands into monomials in `x_1..x_m`, sharing `F` evaluations through `cache`.
    pub fn to_sympoly(&self, m: usize, cache: &mut FCache) -> SymPoly {
        let mut acc = Poly::zero();
        for (&s, &c) in &self.terms {
            acc += cache.get(s, self.n, m).scale(c);
        }
        SymPoly::new(acc, m, self.n)
    }

    pub fn as_list(&self) -> Vec<(PosSet, usize)> {
        self.terms.iter().flat_map(|(&s, &c)| core::iter::repeat_n((s, self.n), c as usize)).collect()
    }
}

/// Memo of `F_{S,n}` in a given number of variables.
#[derive(Default)]
pub struct FCache {
    map: BTreeMap<(PosSet, usize, usize), Poly>,
}

impl FCache {
    pub fn get(&mut self, s: PosSet, n: usize, m: usize) -> &Poly {
        self.map.entry((s, n, m)).or_insert_with(|| fundamental_poly(s, n, m))
    }
}

/// The `Exd` expansions of `Q_{n,j}`, `~Q_{n,j}` and `Q_{λ,j}` from one scan of `S_n`.
#[derive(Clone, Debug)]
pub struct QExpansions {
    pub n: usize,
    /// Indexed by `j = exc`, `0..=n`.
    pub all: Vec<FExpansion>,
    pub derangements: Vec<FExpansion>,
    pub by_type: BTreeMap<(Partition, usize), FExpansion>,
}

impl QExpansions {
    pub fn scan(n: usize) -> QExpansions {
        let mut all = vec![FExpansion::new(n); n + 1];
        let mut derangements = vec![FExpansion::new(n); n + 1];
        let mut by_type: BTreeMap<(Partition, usize), FExpansion> = BTreeMap::new();
        permstat::for_each_in_ranks(n, 0..permstat::factorial(n), |w| {
            let j = permstat::exc(w);
            let s = permstat::exd_set(w);
            all[j].add(s);
            if permstat::fix(w) == 0 {
                derangements[j].add(s);
            }
            by_type
                .entry((permstat::cycle_type(w), j))
                .or_insert_with(|| FExpansion::new(n))
                .add(s);
        });
        QExpansions { n, all, derangements, by_type }
    }

    pub fn q(&self, j: usize) -> FExpansion {
        self.all.get(j).cloned().unwrap_or_else(|| FExpansion::new(self.n))
    }

    pub fn tilde(&self, j: usize) -> FExpansion {
        self.derangements.get(j).cloned().unwrap_or_else(|| FExpansion::new(self.n))
    }

    pub fn lambda(&self, l: &Partition, j: usize) -> FExpansion {
        self.by_type.get(&(l.clone(), j)).cloned().unwrap_or_else(|| FExpansion::new(self.n))
    }
}

fn check_j(n: usize, j: usize) -> Result<(), Error> {
    if n > 0 && j >= n {
        return Err(Error::InvalidExcedance { n, j });
    }
    Ok(())
}

/// `Q_{n,j}`: sum of `F_{Exd(σ),n}` over `σ ∈ S_n` with `j` excedances.
pub fn q_nj(n: usize, j: usize, m: usize) -> Result<SymPoly, Error> {
    check_j(n, j)?;
    if m == 0 {
        return Err(Error::NoVariables);
    }
    Ok(QExpansions::scan(n).q(j).to_sympoly(m, &mut FCache::default()))
}

/// `~Q_{n,j}`: as [`q_nj`] but over derangements only.
pub fn tilde_q_nj(n: usize, j: usize, m: usize) -> Result<SymPoly, Error> {
    check_j(n, j)?;
    if m == 0 {
        return Err(Error::NoVariables);
    }
    Ok(QExpansions::scan(n).tilde(j).to_sympoly(m, &mut FCache::default()))
}

/// `Q_{λ,j}`: as [`q_nj`] over permutations of cycle type `λ`.
pub fn q_lambda_j(lambda: &Partition, j: usize, m: usize) -> Result<SymPoly, Error> {
    let n = lambda.size();
    check_j(n, j)?;
    if m == 0 {
        return Err(Error::NoVariables);
    }
    Ok(QExpansions::scan(n).lambda(lambda, j).to_sympoly(m, &mut FCache::default()))
}

/// Exact principal specialization of `Σ F_{S,n}` at `x_i = q^(i-1)`:
/// returns the numerator `Σ q^(ΣS)` and `n`, meaning `numerator / ((1-q)...(1-q^n))`.
pub fn principal_specialization(terms: &[(PosSet, usize)]) -> Result<(Poly, usize), Error> {
    let n = terms.first().map_or(0, |t| t.1);
    let mut num = Poly::zero();
    for &(s, d) in terms {
        if d != n {
            return Err(Error::MixedDegrees(n, d));
        }
        num += Poly::var_pow(Var::Q, s.sum() as u32);
    }
    Ok((num, n))
}

/// Substitutes `x_i = q^(i-1)` and keeps powers of `q` below `order`.
/// Exact modulo `q^order` when `f` has at least `order` variables.
pub fn specialize_truncated(f: &SymPoly, order: u32) -> Poly {
    let mut b = Bindings::new();
    for i in 1..=f.vars() as u32 {
        b.insert(Var::X(i), Poly::var_pow(Var::Q, i - 1));
    }
    f.poly().substitute(&b).truncate(Var::Q, order)
}

/// Precomputed `Q_{n,j}`, `~Q_{n,j}` and `h_n` in `m` variables for `n <= max_n`.
pub struct QTable {
    pub m: usize,
    pub expansions: Vec<QExpansions>,
    pub q: Vec<Vec<Poly>>,
    pub tilde: Vec<Vec<Poly>>,
    pub h: Vec<Poly>,
}

impl QTable {
    pub fn build(max_n: usize, m: usize) -> QTable {
        let mut cache = FCache::default();
        let expansions: Vec<QExpansions> = (0..=max_n).map(QExpansions::scan).collect();
        let q = expansions
            .iter()
            .map(|e| e.all.iter().map(|f| f.to_sympoly(m, &mut cache).into_poly()).collect())
            .collect();
        let tilde = expansions
            .iter()
            .map(|e| e.derangements.iter().map(|f| f.to_sympoly(m, &mut cache).into_poly()).collect())
            .collect();
        let h = (0..=max_n).map(|n| cache.get(PosSet::EMPTY, n, m).clone()).collect();
        QTable { m, expansions, q, tilde, h }
    }

    /// `Q_{n,j}`, zero outside the stored range.
    pub fn q_at(&self, n: usize, j: usize) -> Poly {
        self.q.get(n).and_then(|r| r.get(j)).cloned().unwrap_or_default()
    }

    pub fn tilde_at(&self, n: usize, j: usize) -> Poly {
        self.tilde.get(n).and_then(|r| r.get(j)).cloned().unwrap_or_default()
    }
}

/// Cross-multiplied check of `Σ Q_{n,j} t^j z^n = (1-t)H(z) / (H(zt) - tH(z))` through `z^N`.
pub fn verify_thm_2_1(max_n: usize, m: usize) -> Report {
    let table = QTable::build(max_n, m);
    let t = Poly::var(Var::T);
    let h = ZSeries::new(table.h.clone(), Convolution::Ordinary);
    let lhs = ZSeries::from_fn(max_n, Convolution::Ordinary, |n| {
        table.q[n].iter().enumerate().map(|(j, p)| p * &Poly::var_pow(Var::T, j as u32)).sum()
    });
    let denom = h.scale_z(&t).sub(&h.scale(&t)).expect("same normalization");
    let numer = h.scale(&(Poly::one() - &t));
    let prod = denom.mul(&lhs).expect("same normalization");
    let mut report = Report::new("thm2-1", max_n);
    for n in 0..=max_n {
        report.compare(format!("n={n},m={m}"), n, prod.coeff(n), numer.coeff(n));
    }
    report
}

/// `Q_{n,j} = Σ_k h_k ~Q_{n-k,j}` for every `n' <= n` and `j`.
pub fn verify_cor_2_3(max_n: usize, m: usize) -> Report {
    let table = QTable::build(max_n, m);
    let mut report = Report::new("cor2-3", max_n);
    for n in 0..=max_n {
        for j in 0..n.max(1) {
            let rhs: Poly = (0..=n).map(|k| &table.h[k] * &table.tilde_at(n - k, j)).sum();
            report.compare(format!("n={n},j={j}"), n, &table.q_at(n, j), &rhs);
        }
    }
    report
}

/// `~Q_{n,j} = Σ ~Q_{k,i} h_{n-k}` over `0 <= k <= n-2`, `j+k-n < i < j`, for `1 <= n' <= n`.
pub fn verify_recurrence_9(max_n: usize, m: usize) -> Report {
    let table = QTable::build(max_n, m);
    let mut report = Report::new("rec9", max_n);
    for n in 1..=max_n {
        for j in 0..n {
            let mut rhs = Poly::zero();
            for k in 0..=n.saturating_sub(2) {
                if k + 2 > n {
                    break;
                }
                // i ranges over integers with j+k-n < i < j
                let lo = (j + k + 1).saturating_sub(n);
                for i in lo..j {
                    rhs += &table.tilde_at(k, i) * &table.h[n - k];
                }
            }
            report.compare(format!("n={n},j={j}"), n, &table.tilde_at(n, j), &rhs);
        }
    }
    report
}

/// `Q_{n,j}` and `Q_{λ,j}` are homogeneous and symmetric in `x_1..x_m`, the
/// `Q_{λ,j}` sum to `Q_{n,j}`, and the squarefree coefficient of `Q_{n,j}` is the
/// number of permutations with `j` excedances (when `m >= n`).
pub fn verify_symmetry(max_n: usize, m: usize) -> Report {
    let mut report = Report::new("symmetry", max_n);
    let mut cache = FCache::default();
    for n in 0..=max_n {
        let ex = QExpansions::scan(n);
        let mut eulerian = vec![0u64; n + 1];
        permstat::for_each_in_ranks(n, 0..permstat::factorial(n), |w| eulerian[permstat::exc(w)] += 1);
        for (j, &count) in eulerian.iter().enumerate().take(n.max(1)) {
            let q = ex.q(j).to_sympoly(m, &mut cache);
            report.record(format!("Q n={n},j={j},m={m} symmetric"), n, q.is_homogeneous() && q.is_symmetric());
            if m >= n {
                report.compare(
                    format!("Q n={n},j={j} squarefree coefficient"),
                    n,
                    &q.squarefree_coeff(),
                    &BigInt::from(count),
                );
            }
            let mut by_type = Poly::zero();
            for l in Partition::all(n) {
                let ql = ex.lambda(&l, j).to_sympoly(m, &mut cache);
                report.record(
                    format!("Q lambda={l},j={j},m={m} symmetric"),
                    n,
                    ql.is_homogeneous() && ql.is_symmetric(),
                );
                by_type += ql.into_poly();
            }
            report.compare(format!("sum over lambda of Q n={n},j={j}"), n, &by_type, q.poly());
        }
    }
    report
}

/// `1/((1-q)...(1-q^n)) mod q^order`, by counting partitions with parts `<= n`.
fn inverse_q_pochhammer(n: usize, order: u32) -> Poly {
    let mut counts = vec![0u64; order as usize];
    if order > 0 {
        counts[0] = 1;
    }
    for part in 1..=n {
        for e in part..order as usize {
            counts[e] += counts[e - part];
        }
    }
    counts.iter().enumerate().map(|(e, &c)| Poly::var_pow(Var::Q, e as u32).scale(c)).sum()
}

/// Principal specialization of `Σ Q_{n,j} t^j z^n` at `x_i = q^(i-1)`, `z -> z(1-q)`,
/// compared with `Σ q^(maj-exc) t^exc z^n/[n]_q!`; then `t -> tq` recovers the
/// `(maj, exc)` polynomials. A truncated substitution with `q_order` variables
/// cross-checks the closed form modulo `q^q_order`.
pub fn verify_specialization_6(max_n: usize, q_order: u32) -> Report {
    let mut report = Report::new("eq6", max_n);
    let q = Poly::var(Var::Q);
    let t = Poly::var(Var::T);
    let mut cache = FCache::default();
    for n in 0..=max_n {
        let ex = QExpansions::scan(n);
        let mut closed = Poly::zero();
        for j in 0..=n {
            let (num, _) = principal_specialization(&ex.q(j).as_list()).expect("single degree");
            closed += &num * &Poly::var_pow(Var::T, j as u32);

            let m = q_order as usize;
            if m > 0 && j < n.max(1) {
                let sym = ex.q(j).to_sympoly(m, &mut cache);
                let direct = specialize_truncated(&sym, q_order);
                let series = (&num * &inverse_q_pochhammer(n, q_order)).truncate(Var::Q, q_order);
                report.compare(format!("n={n},j={j} truncated mod q^{q_order}"), n, &direct, &series);
            }
        }
        let mut brute = Poly::zero();
        permstat::for_each_in_ranks(n, 0..permstat::factorial(n), |w| {
            let (mj, e) = (permstat::maj(w), permstat::exc(w));
            let mut mono = Monomial::var_pow(Var::Q, (mj - e) as u32);
            mono.set(Var::T, e as u32);
            brute.add_term(mono, BigInt::from(1));
        });
        report.compare(format!("n={n} numerator"), n, &closed, &brute);

        // z -> z(1-q) turns 1/((1-q)...(1-q^n)) into 1/[n]_q!
        let lhs = &(Poly::one() - &q).pow(n as u32) * &qcalc::q_factorial(n);
        let rhs: Poly = (1..=n).map(|i| Poly::one() - Poly::var_pow(Var::Q, i as u32)).product();
        report.compare(format!("n={n} (1-q)^n [n]_q! = (q;q)_n"), n, &lhs, &rhs);

        let shifted = closed.subs(Var::T, &(&t * &q));
        report.compare(format!("n={n} t->tq"), n, &shifted, &genfun::maj_exc_poly(n));
    }
    report
}
