//! q-analogs: `[n]_v`, `[n]_q!`, Gaussian binomials and multinomials, truncated `exp_q`.
//!
//! Everything is division-free. Gaussian binomials come from the q-Pascal rule
//! and multinomials are products of binomials.

use alloc::vec;
use alloc::vec::Vec;

use crate::exactalg::{Convolution, Poly, Var, ZSeries};
use crate::Error;

/// `[n]_v = 1 + v + ... + v^(n-1)`, where `v` may be any polynomial (e.g. `t*q`).
pub fn q_int(n: usize, v: &Poly) -> Poly {
    let mut acc = Poly::zero();
    let mut pw = Poly::one();
    for _ in 0..n {
        acc += &pw;
        pw = &pw * v;
    }
    acc
}

/// `[n]_q!`, with `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> Poly {
    let q = Poly::var(Var::Q);
    (1..=n).map(|k| q_int(k, &q)).product()
}

/// Rows `0..=n` of Gaussian binomials: `table[a][b] = [a choose b]_q`.
pub fn q_binomial_table(n: usize) -> Vec<Vec<Poly>> {
    let mut table: Vec<Vec<Poly>> = Vec::with_capacity(n + 1);
    for a in 0..=n {
        let mut row = vec![Poly::zero(); a + 1];
        row[0] = Poly::one();
        row[a] = Poly::one();
        for b in 1..a {
            // [a choose b] = [a-1 choose b-1] + q^b [a-1 choose b]
            let prev = &table[a - 1];
            row[b] = &prev[b - 1] + &prev[b].mul_monomial(&crate::Monomial::var_pow(Var::Q, b as u32));
        }
        table.push(row);
    }
    table
}

/// `[n choose k]_q`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    q_binomial_table(n).swap_remove(n).swap_remove(k)
}

/// `[n]_q! / ([k_0]_q! ... [k_m]_q!)` as a product of Gaussian binomials.
pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<Poly, Error> {
    let got: usize = parts.iter().sum();
    if got != n {
        return Err(Error::PartsSum { expected: n, got });
    }
    let table = q_binomial_table(n);
    let mut remaining = n;
    let mut acc = Poly::one();
    for &k in parts {
        acc = &acc * &table[remaining][k];
        remaining -= k;
    }
    Ok(acc)
}

/// `exp_q(s*z)` through `z^order`, in numerator form: the `n`-th stored
/// coefficient is `s^n`, meaning `s^n z^n / [n]_q!`.
pub fn q_exp_series(order: usize, arg_scale: &Poly) -> ZSeries {
    let mut pw = Poly::one();
    ZSeries::from_fn(order, Convolution::q_generic(), |_| {
        let c = pw.clone();
        pw = &pw * arg_scale;
        c
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(3, &q()), p("1 + q + q^2"));
        assert_eq!(q_int(0, &q()), Poly::zero());
        assert_eq!(q_int(2, &p("t*q")), p("1 + q*t"));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), Poly::one());
        assert_eq!(q_factorial(3), p("1 + 2*q + 2*q^2 + q^3"));
        let mut fact = BigInt::from(1);
        for n in 0..10u32 {
            if n > 0 {
                fact *= n;
            }
            assert_eq!(q_factorial(n as usize).eval_all(1), fact);
        }
    }

    /// Lattice paths from (0,0) to (k, n-k) weighted by the area under them.
    fn gaussian_by_paths(n: usize, k: usize) -> Poly {
        let mut acc = Poly::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            // each east step (bit set) contributes the number of north steps before it
            let mut norths = 0;
            let mut area = 0;
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    area += norths;
                } else {
                    norths += 1;
                }
            }
            acc += Poly::var_pow(Var::Q, area);
        }
        acc
    }

    #[test]
    fn q_binomial_matches_lattice_paths() {
        for n in 0..=9 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), gaussian_by_paths(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_pascal_second_form() {
        // [n choose k] = q^(n-k) [n-1 choose k-1] + [n-1 choose k]
        let t = q_binomial_table(12);
        for n in 1..=12 {
            for k in 1..n {
                let rhs = &t[n - 1][k - 1].mul_monomial(&crate::Monomial::var_pow(Var::Q, (n - k) as u32))
                    + &t[n - 1][k];
                assert_eq!(t[n][k], rhs);
            }
        }
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(q_multinomial(2, &[0, 2]).unwrap(), Poly::one());
        assert_eq!(q_multinomial(4, &[2, 2]).unwrap(), gaussian_by_paths(4, 2));
        assert_eq!(q_multinomial(4, &[2, 2]).unwrap().to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(q_multinomial(3, &[1, 2]).unwrap(), p("1 + q + q^2"));
        assert_eq!(q_multinomial(5, &[5]).unwrap(), Poly::one());
        assert_eq!(
            q_multinomial(3, &[1, 1]),
            Err(Error::PartsSum { expected: 3, got: 2 })
        );
    }

    #[test]
    fn q_multinomial_is_symmetric_and_specializes() {
        let parts = [2usize, 0, 3, 1];
        let base = q_multinomial(6, &parts).unwrap();
        assert_eq!(q_multinomial(6, &[3, 1, 2, 0]).unwrap(), base);
        assert_eq!(q_multinomial(6, &[1, 3, 0, 2]).unwrap(), base);
        // 6!/(2!3!1!) = 60
        assert_eq!(base.eval_all(1), BigInt::from(60));
        // exact product check: multinomial * prod [k]! == [n]!
        let lhs = parts.iter().fold(base.clone(), |acc, &k| &acc * &q_factorial(k));
        assert_eq!(lhs, q_factorial(6));
    }

    #[test]
    fn q_exp_numerators() {
        let e = q_exp_series(2, &Poly::one());
        assert_eq!(e.coeffs(), &[Poly::one(), Poly::one(), Poly::one()]);
        let e = q_exp_series(2, &p("t*q"));
        assert_eq!(e.coeffs(), &[Poly::one(), p("q*t"), p("q^2*t^2")]);
    }
}
