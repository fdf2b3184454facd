use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A variable of the fixed universe `q < t < r < u < x_1 < x_2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    R,
    U,
    /// `x_i` with `i >= 1`.
    X(u32),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::T => 1,
            Var::R => 2,
            Var::U => 3,
            Var::X(i) => {
                assert!(i >= 1, "x variables are 1-indexed");
                3 + i as usize
            }
        }
    }

    pub fn from_index(idx: usize) -> Var {
        match idx {
            0 => Var::Q,
            1 => Var::T,
            2 => Var::R,
            3 => Var::U,
            i => Var::X((i - 3) as u32),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => f.write_str("q"),
            Var::T => f.write_str("t"),
            Var::R => f.write_str("r"),
            Var::U => f.write_str("u"),
            Var::X(i) => write!(f, "x_{i}"),
        }
    }
}

/// Exponent vector indexed by [`Var::index`], with trailing zeros trimmed.
///
/// Ordering is graded: lower total degree first; within a degree the monomial
/// with the larger exponent on the earliest differing variable comes first,
/// so `q^2 < q*t < t^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = Monomial(Vec::new());
        m.set(v, e);
        m
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: Var, e: u32) {
        let i = v.index();
        if e == 0 {
            if i < self.0.len() {
                self.0[i] = 0;
                while self.0.last() == Some(&0) {
                    self.0.pop();
                }
            }
            return;
        }
        if i >= self.0.len() {
            self.0.resize(i + 1, 0);
        }
        self.0[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Variables with a positive exponent, in universe order.
    pub fn support(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_index(i), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.0.clone();
        for (e, &o) in exps.iter_mut().zip(&short.0) {
            *e += o;
        }
        Monomial(exps)
    }

    pub fn swap(&self, a: Var, b: Var) -> Monomial {
        let mut m = self.clone();
        let (ea, eb) = (self.exponent(a), self.exponent(b));
        m.set(a, eb);
        m.set(b, ea);
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for i in 0..len {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                if a != b {
                    return b.cmp(&a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
