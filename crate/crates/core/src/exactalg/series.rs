use alloc::vec;
use alloc::vec::Vec;

use super::poly::Poly;
use super::Var;
use crate::{qcalc, Error};

/// How the `z^n` coefficients of a [`ZSeries`] are normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Convolution {
    /// The series is `sum a_n z^n`; products use the Cauchy convolution.
    Ordinary,
    /// The series is `sum a_n z^n / [n]_q!` with the stored `a_n` being the numerators.
    /// Products use `a_n(fg) = sum_k [n choose k]_q a_k(f) a_{n-k}(g)`. The payload is
    /// the value substituted for `q` in the q-binomials: `Poly::var(Var::Q)` for the
    /// generic case, or an integer constant for specializations such as `q = 1`.
    QFactorial(Poly),
}

impl Convolution {
    pub fn q_generic() -> Self {
        Convolution::QFactorial(Poly::var(Var::Q))
    }

    fn weights(&self, order: usize) -> Option<Vec<Vec<Poly>>> {
        match self {
            Convolution::Ordinary => None,
            Convolution::QFactorial(q) => {
                let table = qcalc::q_binomial_table(order);
                if *q == Poly::var(Var::Q) {
                    Some(table)
                } else {
                    Some(
                        table
                            .into_iter()
                            .map(|row| row.iter().map(|p| p.subs(Var::Q, q)).collect())
                            .collect(),
                    )
                }
            }
        }
    }
}

/// Truncated power series in `z` with polynomial coefficients, known through `z^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<Poly>,
    kind: Convolution,
}

impl ZSeries {
    /// Takes coefficients `0..=N`; the truncation order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Poly>, kind: Convolution) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the z^0 coefficient");
        ZSeries { coeffs, kind }
    }

    pub fn from_fn(order: usize, kind: Convolution, f: impl FnMut(usize) -> Poly) -> Self {
        ZSeries::new((0..=order).map(f).collect(), kind)
    }

    pub fn constant(p: Poly, order: usize, kind: Convolution) -> Self {
        let mut coeffs = vec![Poly::zero(); order + 1];
        coeffs[0] = p;
        ZSeries { coeffs, kind }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn kind(&self) -> &Convolution {
        &self.kind
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    fn check_kind(&self, other: &ZSeries) -> Result<usize, Error> {
        if self.kind != other.kind {
            return Err(Error::ConvolutionMismatch);
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &ZSeries) -> Result<ZSeries, Error> {
        let n = self.check_kind(other)?;
        Ok(ZSeries::from_fn(n, self.kind.clone(), |i| &self.coeffs[i] + &other.coeffs[i]))
    }

    pub fn sub(&self, other: &ZSeries) -> Result<ZSeries, Error> {
        let n = self.check_kind(other)?;
        Ok(ZSeries::from_fn(n, self.kind.clone(), |i| &self.coeffs[i] - &other.coeffs[i]))
    }

    /// Multiplies every coefficient by the same polynomial.
    pub fn scale(&self, p: &Poly) -> ZSeries {
        ZSeries::from_fn(self.order(), self.kind.clone(), |i| &self.coeffs[i] * p)
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &ZSeries) -> Result<ZSeries, Error> {
        let order = self.check_kind(other)?;
        let weights = self.kind.weights(order);
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = Poly::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let ab = a * b;
                match &weights {
                    None => acc += ab,
                    Some(w) => acc += &w[n][k] * &ab,
                }
            }
            out.push(acc);
        }
        Ok(ZSeries { coeffs: out, kind: self.kind.clone() })
    }

    /// Substitutes `z -> s*z`, multiplying the `n`-th coefficient by `s^n`.
    pub fn scale_z(&self, s: &Poly) -> ZSeries {
        let mut pw = Poly::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * s;
        }
        ZSeries { coeffs: out, kind: self.kind.clone() }
    }

    /// Applies the same substitution to every coefficient.
    pub fn map_coeffs(&self, kind: Convolution, f: impl Fn(&Poly) -> Poly) -> ZSeries {
        ZSeries { coeffs: self.coeffs.iter().map(f).collect(), kind }
    }

    pub fn truncate(&self, order: usize) -> ZSeries {
        ZSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
            kind: self.kind.clone(),
        }
    }

    /// First index `<= upto` where the coefficients differ, if any.
    pub fn first_difference(&self, other: &ZSeries, upto: usize) -> Result<Option<usize>, Error> {
        let order = self.check_kind(other)?;
        if upto > order {
            return Err(Error::OrderOutOfRange { upto, order });
        }
        Ok((0..=upto).find(|&i| self.coeffs[i] != other.coeffs[i]))
    }

    /// True iff coefficients `0..=upto` agree.
    pub fn equal_upto(&self, other: &ZSeries, upto: usize) -> Result<bool, Error> {
        Ok(self.first_difference(other, upto)?.is_none())
    }
}
