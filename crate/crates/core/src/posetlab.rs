//! Finite ranked posets, Rees products and reduced rational homology of order
//! complexes.
//!
//! Ranks follow the convention that minimal elements of a graded poset have
//! rank 0. Removing the bottom of `B_n` therefore leaves `S` at rank `|S| - 1`,
//! and element `j` of the chain `C_n` has rank `j - 1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{Convolution, Monomial, Poly, Var, ZSeries};
use crate::permstat::{self, PosSet};
use crate::quasisym::{FCache, QExpansions};
use crate::{qcalc, Error, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Bits {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

/// A finite poset with a rank function that strictly increases along the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    ranks: Vec<usize>,
    /// `up[x]` holds every `y` with `x < y`.
    up: Vec<Bits>,
}

impl Poset {
    /// Builds the poset whose strict order is `lt`. Fails unless `lt` is
    /// irreflexive and transitive and `rank` strictly increases along it.
    pub fn new(labels: Vec<String>, ranks: Vec<usize>, lt: impl Fn(usize, usize) -> bool) -> Result<Poset, Error> {
        let n = labels.len();
        assert_eq!(ranks.len(), n, "one rank per element");
        let mut up = vec![Bits::new(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if lt(x, y) {
                    if x == y {
                        return Err(Error::NotAnOrder);
                    }
                    if ranks[x] >= ranks[y] {
                        return Err(Error::NotRanked);
                    }
                    row.set(y);
                }
            }
        }
        let closed = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(&up[x])));
        if !closed {
            return Err(Error::NotAnOrder);
        }
        Ok(Poset { labels, ranks, up })
    }

    /// Subsets of `[n]` under inclusion, indexed by bitmask, ranked by size.
    pub fn boolean(n: usize) -> Poset {
        assert!(n < 16, "boolean lattice on {n} atoms is too large");
        let size = 1usize << n;
        let labels = (0..size).map(|s| PosSet::from_bits((s as u64) << 1).to_string()).collect();
        let ranks = (0..size).map(|s: usize| s.count_ones() as usize).collect();
        Poset::new(labels, ranks, |a, b| a != b && a & b == a).expect("inclusion is an order")
    }

    /// `1 < 2 < ... < n` with element `j` (index `j - 1`) at rank `j - 1`.
    pub fn chain(n: usize) -> Poset {
        let labels = (1..=n).map(|j| j.to_string()).collect();
        Poset::new(labels, (0..n).collect(), |a, b| a < b).expect("a chain is an order")
    }

    /// Subspaces of `F_q^n` under inclusion, ranked by dimension, for `q ∈ {2, 3}`
    /// and `q^n <= 81`.
    pub fn subspace(q: u32, n: usize) -> Result<Poset, Error> {
        if q != 2 && q != 3 {
            return Err(Error::UnsupportedField(q));
        }
        let vectors = (q as u64).checked_pow(n as u32).filter(|&v| v <= 81);
        let Some(vectors) = vectors else {
            return Err(Error::LatticeTooLarge((q as u64).saturating_pow(n as u32)));
        };
        let field = Field { q, n, vectors: vectors as usize };
        let mut spaces: Vec<(usize, Vec<Vec<u32>>, u128)> = Vec::new();
        for k in 0..=n {
            for basis in field.rref_bases(k) {
                let span = field.span(&basis);
                spaces.push((k, basis, span));
            }
        }
        let labels = spaces.iter().map(|(_, b, _)| basis_label(b)).collect();
        let ranks = spaces.iter().map(|s| s.0).collect();
        Poset::new(labels, ranks, |a, b| {
            let (x, y) = (spaces[a].2, spaces[b].2);
            x != y && x & y == x
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].get(y)
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if !self.up[x].iter().any(|z| self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn has_below(&self, y: usize) -> bool {
        (0..self.len()).any(|x| self.lt(x, y))
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !self.has_below(x)).collect()
    }

    pub fn maximum(&self) -> Option<usize> {
        match self.maximal_elements()[..] {
            [m] => Some(m),
            _ => None,
        }
    }

    /// Minimal elements at rank 0 and every cover raising the rank by exactly one.
    pub fn is_graded(&self) -> bool {
        self.minimal_elements().iter().all(|&x| self.ranks[x] == 0)
            && self.covers().iter().all(|&(x, y)| self.ranks[y] == self.ranks[x] + 1)
    }

    /// Subposet on `keep` (in that order) with every rank lowered by `shift`.
    fn induced(&self, keep: &[usize], shift: usize) -> Poset {
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let ranks = keep.iter().map(|&x| self.ranks[x] - shift).collect();
        Poset::new(labels, ranks, |a, b| self.lt(keep[a], keep[b])).expect("restriction of an order")
    }

    /// Removes a unique minimum and lowers the remaining ranks by one.
    pub fn delete_minimum(&self) -> Result<Poset, Error> {
        let [bottom] = self.minimal_elements()[..] else {
            return Err(Error::NotRanked);
        };
        if self.len() > 1 && (0..self.len()).any(|x| x != bottom && !self.lt(bottom, x)) {
            return Err(Error::NotRanked);
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&x| x != bottom).collect();
        Ok(self.induced(&keep, 1))
    }

    /// Induced subposet on `{x : x < top}`.
    pub fn open_ideal(&self, top: usize) -> Result<Poset, Error> {
        if top >= self.len() {
            return Err(Error::NoSuchElement(top));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&x| self.lt(x, top)).collect();
        Ok(self.induced(&keep, 0))
    }

    pub fn order_complex(&self) -> OrderComplex {
        OrderComplex::of(self)
    }
}

fn basis_label(basis: &[Vec<u32>]) -> String {
    let rows: Vec<String> = basis
        .iter()
        .map(|r| r.iter().map(|d| char::from_digit(*d, 10).expect("digit")).collect())
        .collect();
    format!("<{}>", rows.join(","))
}

struct Field {
    q: u32,
    n: usize,
    vectors: usize,
}

impl Field {
    fn index(&self, v: &[u32]) -> usize {
        v.iter().fold(0, |acc, &d| acc * self.q as usize + d as usize)
    }

    /// Row-reduced echelon bases of the `k`-dimensional subspaces.
    fn rref_bases(&self, k: usize) -> Vec<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        for pivots in (0u64..1 << self.n).filter(|s| s.count_ones() as usize == k) {
            let pivots: Vec<usize> = (0..self.n).filter(|&c| pivots >> c & 1 == 1).collect();
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(row, &p)| (p + 1..self.n).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
                .collect();
            let choices = (self.q as usize).pow(free.len() as u32);
            for mut code in 0..choices {
                let mut basis = vec![vec![0u32; self.n]; k];
                for (row, &p) in pivots.iter().enumerate() {
                    basis[row][p] = 1;
                }
                for &(row, c) in &free {
                    basis[row][c] = (code % self.q as usize) as u32;
                    code /= self.q as usize;
                }
                out.push(basis);
            }
        }
        out
    }

    /// All vectors of the span, as a bitmask over vector indices.
    fn span(&self, basis: &[Vec<u32>]) -> u128 {
        debug_assert!(self.vectors <= 128);
        let combos = (self.q as usize).pow(basis.len() as u32);
        let mut mask = 0u128;
        for mut code in 0..combos {
            let mut v = vec![0u32; self.n];
            for row in basis {
                let c = (code % self.q as usize) as u32;
                code /= self.q as usize;
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + c * r) % self.q;
                }
            }
            mask |= 1 << self.index(&v);
        }
        mask
    }
}

/// `P * Q` together with the pair `(p, q)` behind each element.
#[derive(Clone, Debug)]
pub struct Rees {
    pub poset: Poset,
    pub pairs: Vec<(usize, usize)>,
}

impl Rees {
    pub fn index_of(&self, p: usize, q: usize) -> Option<usize> {
        self.pairs.iter().position(|&pair| pair == (p, q))
    }
}

/// Pairs `(p, q)` with `r(p) >= r(q)`, ordered by `p1 <= p2`, `q1 <= q2` and
/// `r(p2) - r(p1) >= r(q2) - r(q1)`.
pub fn rees_product(p: &Poset, q: &Poset) -> Result<Rees, Error> {
    if !p.is_graded() || !q.is_graded() {
        return Err(Error::NotRanked);
    }
    let mut pairs = Vec::new();
    for a in 0..p.len() {
        for b in 0..q.len() {
            if p.rank(a) >= q.rank(b) {
                pairs.push((a, b));
            }
        }
    }
    let labels = pairs.iter().map(|&(a, b)| format!("({},{})", p.label(a), q.label(b))).collect();
    let ranks = pairs.iter().map(|&(a, _)| p.rank(a)).collect();
    let poset = Poset::new(labels, ranks, |x, y| {
        let ((p1, q1), (p2, q2)) = (pairs[x], pairs[y]);
        x != y
            && p.le(p1, p2)
            && q.le(q1, q2)
            && p.rank(p2) as isize - p.rank(p1) as isize >= q.rank(q2) as isize - q.rank(q1) as isize
    })?;
    Ok(Rees { poset, pairs })
}

/// `(B_n \ {∅}) * C_n`, or its subspace analog when `q` is given.
pub fn rees_with_chain(n: usize, q: Option<u32>) -> Result<Rees, Error> {
    let base = match q {
        None => Poset::boolean(n),
        Some(q) => Poset::subspace(q, n)?,
    };
    rees_product(&base.delete_minimum()?, &Poset::chain(n))
}

/// The open ideals below `(top, j)` for `j = 1..=n`, where `top` is the maximum
/// of the left factor.
pub fn top_ideals(rees: &Rees, n: usize) -> Vec<Poset> {
    let Some(&(left_top, _)) = rees.pairs.iter().find(|&&(_, c)| c + 1 == n) else {
        return Vec::new();
    };
    (0..n)
        .map(|c| {
            let idx = rees.index_of(left_top, c).expect("(top, j) is in the product");
            rees.poset.open_ideal(idx).expect("index comes from the product")
        })
        .collect()
}

/// `I_{n,j}` inside `(B_n \ {∅}) * C_n`, or `I_{n,j}(q)` when `q` is given.
pub fn ideal(n: usize, j: usize, q: Option<u32>) -> Result<Poset, Error> {
    if j == 0 || j > n {
        return Err(Error::NoSuchElement(j));
    }
    let rees = rees_with_chain(n, q)?;
    Ok(top_ideals(&rees, n).swap_remove(j - 1))
}

/// `β̃_{n-2}(I_{n,j})` (or of `I_{n,j}(q)`) for `j = 1..=n`.
pub fn top_dims(n: usize, q: Option<u32>) -> Result<Vec<usize>, Error> {
    let rees = rees_with_chain(n, q)?;
    Ok(top_ideals(&rees, n).iter().map(|p| betti_numbers(p).get(n as isize - 2)).collect())
}

/// Chains of a poset grouped by dimension; `faces[d]` lists the chains with
/// `d + 1` elements in increasing order, sorted lexicographically by position
/// in a fixed linear extension.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    faces: Vec<Vec<Vec<u32>>>,
}

impl OrderComplex {
    pub fn of(p: &Poset) -> OrderComplex {
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&x| (p.rank(x), x));
        let mut pos = vec![0u32; p.len()];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i as u32;
        }
        let up: Vec<Vec<u32>> = order
            .iter()
            .map(|&x| {
                let mut ys: Vec<u32> = p.up[x].iter().map(|y| pos[y]).collect();
                ys.sort_unstable();
                ys
            })
            .collect();
        let mut faces: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut layer: Vec<Vec<u32>> = (0..p.len() as u32).map(|v| vec![v]).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for f in &layer {
                let last = *f.last().expect("faces are nonempty") as usize;
                for &y in &up[last] {
                    let mut g = f.clone();
                    g.push(y);
                    next.push(g);
                }
            }
            faces.push(layer);
            layer = next;
        }
        OrderComplex { faces }
    }

    /// Largest face dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// `f_{-1}, f_0, f_1, ...`, the empty face included.
    pub fn face_counts(&self) -> Vec<usize> {
        core::iter::once(1).chain(self.faces.iter().map(Vec::len)).collect()
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        alternating(&self.face_counts())
    }

    /// Rank over `Q` of the boundary map from dimension `d` to `d - 1`.
    fn boundary_rank(&self, d: usize) -> usize {
        let Some(layer) = self.faces.get(d) else { return 0 };
        if d == 0 {
            return usize::from(!layer.is_empty());
        }
        let lower = &self.faces[d - 1];
        let rows = layer
            .iter()
            .map(|f| {
                let mut row: Vec<(u32, i64)> = (0..f.len())
                    .map(|i| {
                        let mut g = f.clone();
                        g.remove(i);
                        let col = lower.binary_search(&g).expect("faces are closed under deletion");
                        (col as u32, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        exact_rank(rows)
    }

    /// Reduced Betti numbers over `Q`.
    pub fn betti_numbers(&self) -> Betti {
        let ranks: Vec<usize> = (0..=self.faces.len()).map(|d| self.boundary_rank(d)).collect();
        let mut values = vec![1 - ranks[0]];
        for (d, layer) in self.faces.iter().enumerate() {
            values.push(layer.len() - ranks[d] - ranks[d + 1]);
        }
        Betti { values }
    }
}

fn alternating(xs: &[usize]) -> i64 {
    // entry 0 sits in dimension -1
    xs.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { x as i64 } else { -(x as i64) }).sum()
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Betti {
    values: Vec<usize>,
}

impl Betti {
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.values.get(k)).copied().unwrap_or(0)
    }

    /// Values starting at dimension `-1`.
    pub fn from_minus_one(&self) -> &[usize] {
        &self.values
    }

    /// Values starting at dimension `0`; empty for the empty complex.
    pub fn from_zero(&self) -> &[usize] {
        &self.values[1..]
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(&self.values)
    }
}

impl fmt::Display for Betti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = if self.values.len() == 1 { &self.values[..] } else { self.from_zero() };
        f.write_str("[")?;
        for (i, v) in shown.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

pub fn betti_numbers(p: &Poset) -> Betti {
    p.order_complex().betti_numbers()
}

trait Entry: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `x * s - y * t`, or `None` on overflow.
    fn combine(x: &Self, s: &Self, y: &Self, t: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div(&self, d: &Self) -> Self;
}

impl Entry for i64 {
    fn zero() -> i64 {
        0
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn combine(x: &i64, s: &i64, y: &i64, t: &i64) -> Option<i64> {
        x.checked_mul(*s)?.checked_sub(y.checked_mul(*t)?)
    }

    fn gcd(&self, other: &i64) -> i64 {
        Integer::gcd(self, other)
    }

    fn is_unit(&self) -> bool {
        self.abs() == 1
    }

    fn div(&self, d: &i64) -> i64 {
        self / d
    }
}

impl Entry for BigInt {
    fn zero() -> BigInt {
        Zero::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn combine(x: &BigInt, s: &BigInt, y: &BigInt, t: &BigInt) -> Option<BigInt> {
        Some(x * s - y * t)
    }

    fn gcd(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn div(&self, d: &BigInt) -> BigInt {
        self / d
    }
}

type SparseRow<T> = Vec<(u32, T)>;

/// `a * row - b * pivot` with the leading entries cancelling, content removed.
fn reduce<T: Entry>(row: &SparseRow<T>, pivot: &SparseRow<T>) -> Option<SparseRow<T>> {
    let (a, b) = (&pivot[0].1, &row[0].1);
    let g = a.gcd(b);
    let (a, b) = (a.div(&g), b.div(&g));
    let zero = T::zero();
    let mut out: SparseRow<T> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let entry = match (row.get(i), pivot.get(j)) {
            (Some(r), Some(p)) if r.0 == p.0 => {
                i += 1;
                j += 1;
                (r.0, T::combine(&r.1, &a, &p.1, &b)?)
            }
            (Some(r), Some(p)) if r.0 > p.0 => {
                j += 1;
                (p.0, T::combine(&zero, &a, &p.1, &b)?)
            }
            (Some(r), _) => {
                i += 1;
                (r.0, T::combine(&r.1, &a, &zero, &b)?)
            }
            (None, Some(p)) => {
                j += 1;
                (p.0, T::combine(&zero, &a, &p.1, &b)?)
            }
            (None, None) => unreachable!(),
        };
        if !entry.1.is_zero() {
            out.push(entry);
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd(v);
        }
        if !g.is_unit() {
            for e in &mut out {
                e.1 = e.1.div(&g);
            }
        }
    }
    Some(out)
}

fn eliminate<T: Entry>(rows: Vec<SparseRow<T>>) -> Option<usize> {
    let mut pivots: BTreeMap<u32, SparseRow<T>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => row = reduce(&row, p)?,
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over `Q` of a sparse integer matrix given by rows sorted by column.
/// Fraction-free elimination in `i64`, redone with big integers on overflow.
pub fn exact_rank(rows: Vec<Vec<(u32, i64)>>) -> usize {
    if let Some(r) = eliminate(rows.clone()) {
        return r;
    }
    let big = rows
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    eliminate::<BigInt>(big).expect("big integers do not overflow")
}

fn check_complex(report: &mut Report, label: &str, n: usize, p: &Poset, top: isize) -> Betti {
    let complex = p.order_complex();
    let betti = complex.betti_numbers();
    report.compare(
        format!("{label} euler characteristic"),
        n,
        &betti.euler_characteristic(),
        &complex.reduced_euler_characteristic(),
    );
    let low = (-1..top).all(|i| betti.get(i) == 0);
    report.record(format!("{label} vanishes below dimension {top}"), n, low);
    betti
}

/// Top reduced Betti numbers of `I_{n,j}` for `j = 1..=n` against the squarefree
/// coefficient of `Q_{n,j-1}` and the count of permutations with `j - 1`
/// excedances; lower homology must vanish.
pub fn verify_thm_3_3_dims(n: usize) -> Report {
    let mut report = Report::new("thm3-3", n);
    if n == 0 {
        return report;
    }
    let rees = rees_with_chain(n, None).expect("boolean lattice is graded");
    let ex = QExpansions::scan(n);
    let mut cache = FCache::default();
    let mut exc_counts = vec![0u64; n];
    permstat::for_each_in_ranks(n, 0..permstat::factorial(n), |w| exc_counts[permstat::exc(w)] += 1);
    for (c, ideal) in top_ideals(&rees, n).iter().enumerate() {
        let j = c + 1;
        let label = format!("n={n},j={j}");
        let betti = check_complex(&mut report, &label, n, ideal, n as isize - 2);
        let dim = BigInt::from(betti.get(n as isize - 2));
        let squarefree = ex.q(c).to_sympoly(n, &mut cache).squarefree_coeff();
        report.compare(format!("{label} top homology"), n, &dim, &squarefree);
        report.compare(format!("{label} eulerian"), n, &squarefree, &BigInt::from(exc_counts[c]));
    }
    report
}

pub fn verify_thm_3_3_upto(max_n: usize) -> Report {
    let mut report = Report::new("thm3-3", max_n);
    for n in 1..=max_n {
        report.checks.extend(verify_thm_3_3_dims(n).checks);
    }
    report
}

/// `Σ_{des(σ) = j-1} q^ai(σ)` for `j = 1..=n`, or `Σ q^(C(n,2) - ai(σ))` when `reflected`.
pub fn ai_des_weights(n: usize, q: u32, reflected: bool) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); n.max(1)];
    let q = BigInt::from(q);
    let top = n * n.saturating_sub(1) / 2;
    permstat::for_each_in_ranks(n, 0..permstat::factorial(n), |w| {
        let a = permstat::ai(w);
        out[permstat::des(w)] += num_traits::pow(q.clone(), if reflected { top - a } else { a });
    });
    out
}

fn check_q(q: u32, report: &mut Report) -> bool {
    let ok = q == 2 || q == 3;
    if !ok {
        report.record(format!("q={q} unsupported"), 0, false);
    }
    ok
}

/// Top homology of `I_{n,j}(q)` for `n' <= n`, or the error that stopped the build.
fn subspace_dims(max_n: usize, q: u32, report: &mut Report) -> Option<Vec<Vec<usize>>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        let rees = match rees_with_chain(n, Some(q)) {
            Ok(r) => r,
            Err(e) => {
                report.record(format!("n={n},q={q}: {e}"), n, false);
                return None;
            }
        };
        let dims = top_ideals(&rees, n)
            .iter()
            .enumerate()
            .map(|(c, ideal)| {
                let label = format!("n={n},q={q},j={}", c + 1);
                check_complex(report, &label, n, ideal, n as isize - 2).get(n as isize - 2)
            })
            .collect();
        all.push(dims);
    }
    Some(all)
}

/// Top reduced Betti numbers of `I_{n',j}(q)` for `n' <= n` against
/// `Σ_{des(σ) = j-1} q^(C(n',2) - ai(σ))`, then the series
/// `L = Σ_n Σ_j dim · t^(j-1) z^n/[n]_q!` (with `L_0 = 1`) against
/// `L · (E(zt) - t E(z)) = (1 - t) E(z)` where `E(z) = Σ q^C(n,2) z^n/[n]_q!`,
/// all at the given integer `q`.
///
/// The unreflected weights `Σ q^ai(σ)` with `exp_q` in place of `E` do not
/// match the homology of these posets; [`verify_eq_13_literal`] reports that form.
pub fn verify_eq_13_14(max_n: usize, q: u32) -> Report {
    let mut report = Report::new("eq13", max_n);
    if !check_q(q, &mut report) {
        return report;
    }
    let Some(all) = subspace_dims(max_n, q, &mut report) else {
        return report;
    };
    let mut l = vec![Poly::one()];
    for (i, dims) in all.iter().enumerate() {
        let n = i + 1;
        let weights = ai_des_weights(n, q, true);
        let mut ln = Poly::zero();
        for (c, &dim) in dims.iter().enumerate() {
            let label = format!("n={n},q={q},j={} top homology", c + 1);
            report.compare(label, n, &BigInt::from(dim), &weights[c]);
            ln += Poly::term(dim as i64, Monomial::var_pow(Var::T, c as u32));
        }
        l.push(ln);
    }
    let kind = Convolution::QFactorial(Poly::constant(q));
    let t = Poly::var(Var::T);
    let one_minus_t = Poly::one() - &t;
    let scale = |k: usize| Poly::constant(num_traits::pow(BigInt::from(q), k * k.saturating_sub(1) / 2));
    let lser = ZSeries::new(l, kind.clone());
    let d = ZSeries::from_fn(max_n, kind.clone(), |k| {
        if k == 0 {
            one_minus_t.clone()
        } else {
            scale(k) * (t.pow(k as u32) - &t)
        }
    });
    let r = ZSeries::from_fn(max_n, kind, |k| scale(k) * &one_minus_t);
    let lhs = lser.mul(&d).expect("same normalization");
    for k in 0..=max_n {
        report.compare(format!("series z^{k},q={q}"), k, lhs.coeff(k), r.coeff(k));
    }
    report
}

/// Top reduced Betti numbers of `I_{n',j}(q)` against the unreflected weights
/// `Σ_{des(σ) = j-1} q^ai(σ)`. Fails from `n' = 2` on: `I_{2,1}(q)` is an
/// antichain of `q + 1` lines.
pub fn verify_eq_13_literal(max_n: usize, q: u32) -> Report {
    let mut report = Report::new("eq13-literal", max_n);
    if !check_q(q, &mut report) {
        return report;
    }
    let Some(all) = subspace_dims(max_n, q, &mut report) else {
        return report;
    };
    for (i, dims) in all.iter().enumerate() {
        let n = i + 1;
        let weights = ai_des_weights(n, q, false);
        for (c, &dim) in dims.iter().enumerate() {
            report.compare(format!("n={n},q={q},j={} top homology", c + 1), n, &BigInt::from(dim), &weights[c]);
        }
    }
    report
}

/// Gaussian-binomial count of subspaces of `F_q^n`.
pub fn subspace_count(q: u32, n: usize) -> BigInt {
    (0..=n).map(|k| qcalc::q_binomial(n, k).eval_all(q as i64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain(k: usize) -> Poset {
        Poset::new((0..k).map(|i| i.to_string()).collect(), vec![0; k], |_, _| false).unwrap()
    }

    #[test]
    fn element_counts() {
        assert_eq!(Poset::boolean(3).len(), 8);
        let c = Poset::chain(4);
        assert_eq!(c.len(), 4);
        assert_eq!(c.ranks(), [0, 1, 2, 3]);
        for (q, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
            let p = Poset::subspace(q, n).unwrap();
            assert_eq!(BigInt::from(p.len()), subspace_count(q, n), "q={q} n={n}");
            assert!(p.is_graded());
        }
        assert_eq!(Poset::subspace(2, 3).unwrap().len(), 16);
        assert_eq!(Poset::subspace(5, 2), Err(Error::UnsupportedField(5)));
        assert!(matches!(Poset::subspace(3, 5), Err(Error::LatticeTooLarge(243))));
    }

    #[test]
    fn subspace_inclusions() {
        let p = Poset::subspace(2, 2).unwrap();
        let zero = p.position("<>").unwrap();
        let full = p.position("<10,01>").unwrap();
        let line = p.position("<11>").unwrap();
        assert!(p.lt(zero, line) && p.lt(line, full));
        assert_eq!(p.covers().len(), 6);
    }

    #[test]
    fn invalid_orders_rejected() {
        let labels = || vec!["a".to_string(), "b".to_string(), "c".to_string()];
        // a<b, b<c without a<c
        let r = Poset::new(labels(), vec![0, 1, 2], |x, y| (x, y) == (0, 1) || (x, y) == (1, 2));
        assert_eq!(r, Err(Error::NotAnOrder));
        let r = Poset::new(labels(), vec![0, 0, 1], |x, y| (x, y) == (0, 1));
        assert_eq!(r, Err(Error::NotRanked));
        let bad_rank = Poset::new(labels(), vec![0, 2, 0], |x, y| (x, y) == (0, 1)).unwrap();
        assert!(!bad_rank.is_graded());
        assert!(matches!(rees_product(&bad_rank, &Poset::chain(1)), Err(Error::NotRanked)));
    }

    #[test]
    fn rees_examples() {
        let b1 = Poset::boolean(1).delete_minimum().unwrap();
        let r = rees_product(&b1, &Poset::chain(1)).unwrap();
        assert_eq!(r.poset.labels(), ["({1},1)"]);

        let b2 = Poset::boolean(2).delete_minimum().unwrap();
        let r = rees_product(&b2, &Poset::chain(2)).unwrap();
        let mut labels = r.poset.labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["({1,2},1)", "({1,2},2)", "({1},1)", "({2},1)"]);

        let b3 = Poset::boolean(3).delete_minimum().unwrap();
        let r = rees_product(&b3, &Poset::chain(1)).unwrap();
        assert_eq!(r.poset.len(), b3.len());
        assert_eq!(r.poset.covers().len(), b3.covers().len());
    }

    #[test]
    fn ideal_examples() {
        assert!(ideal(1, 1, None).unwrap().is_empty());
        let i21 = ideal(2, 1, None).unwrap();
        let mut labels = i21.labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["({1},1)", "({2},1)"]);
        assert!(i21.covers().is_empty());
        let i22 = ideal(2, 2, None).unwrap();
        assert_eq!(i22.labels(), i21.labels());
        assert!(ideal(2, 3, None).is_err());
        let p = Poset::chain(2);
        assert_eq!(p.open_ideal(7), Err(Error::NoSuchElement(7)));
    }

    #[test]
    fn betti_examples() {
        let empty = antichain(0);
        assert_eq!(betti_numbers(&empty).from_minus_one(), [1]);
        assert_eq!(betti_numbers(&antichain(2)).from_minus_one(), [0, 1]);
        assert_eq!(betti_numbers(&Poset::chain(3)).from_minus_one(), [0, 0, 0, 0]);
        // proper part of B_3 is a circle
        let b3 = Poset::boolean(3);
        let keep: Vec<usize> = (1..7).collect();
        assert_eq!(betti_numbers(&b3.induced(&keep, 1)).from_zero(), [0, 1]);
        let i32 = ideal(3, 2, None).unwrap();
        let b = betti_numbers(&i32);
        assert_eq!(b.get(1), 4);
        assert_eq!(b.to_string(), "[0, 4]");
        assert_eq!(betti_numbers(&empty).to_string(), "[1]");
    }

    #[test]
    fn rank_falls_back_on_overflow() {
        let big = 1i64 << 40;
        let rows = vec![vec![(0, big), (1, 3)], vec![(0, 3), (1, big)], vec![(0, 1), (1, 1)]];
        assert_eq!(exact_rank(rows), 2);
        let dependent = vec![vec![(0, 2), (2, 4)], vec![(0, 1), (2, 2)], vec![(1, 5)]];
        assert_eq!(exact_rank(dependent), 2);
    }

    #[test]
    fn top_dimensions_small() {
        for (n, expected) in [(1, vec![1]), (2, vec![1, 1]), (3, vec![1, 4, 1]), (4, vec![1, 11, 11, 1])] {
            let rees = rees_with_chain(n, None).unwrap();
            let dims: Vec<usize> = top_ideals(&rees, n).iter().map(|p| betti_numbers(p).get(n as isize - 2)).collect();
            assert_eq!(dims, expected, "n={n}");
        }
        assert!(verify_thm_3_3_upto(4).pass());
    }

    #[test]
    fn subspace_dimensions_small() {
        let big = |v: &[u32]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(ai_des_weights(3, 2, false), big(&[1, 8, 1]));
        assert_eq!(ai_des_weights(2, 2, false), big(&[1, 1]));
        assert_eq!(ai_des_weights(3, 2, true), big(&[8, 22, 8]));
        // three lines of F_2^2, so two reduced classes in degree 0
        let i21 = ideal(2, 1, Some(2)).unwrap();
        assert_eq!(i21.len(), 3);
        assert_eq!(betti_numbers(&i21).from_zero(), [2]);
        let rees = rees_with_chain(3, Some(2)).unwrap();
        let dims: Vec<usize> = top_ideals(&rees, 3).iter().map(|p| betti_numbers(p).get(1)).collect();
        assert_eq!(dims, [8, 22, 8]);
        let r = verify_eq_13_14(3, 2);
        assert!(r.pass(), "{:?}", r.first_mismatch());
        assert!(verify_eq_13_14(3, 3).pass());
        assert!(verify_eq_13_14(4, 2).pass());
        let lit = verify_eq_13_literal(3, 2);
        assert_eq!(lit.first_mismatch().map(|c| c.label.as_str()), Some("n=2,q=2,j=1 top homology"));
        assert!(!verify_eq_13_14(2, 5).pass());
    }
}
