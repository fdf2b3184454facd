//! Permutations in one-line notation, the statistics built on them, and
//! lexicographic enumeration of `S_n` (optionally split into rank ranges).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::wordcomb::{AlphabetOrder, BarredLetter};
use crate::Error;

/// A set of positions in `1..=63`, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosSet(u64);

impl PosSet {
    pub const EMPTY: PosSet = PosSet(0);

    pub fn from_positions(ps: &[usize]) -> PosSet {
        let mut s = PosSet::EMPTY;
        for &p in ps {
            s.insert(p);
        }
        s
    }

    pub fn from_bits(bits: u64) -> PosSet {
        PosSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, p: usize) {
        assert!((1..64).contains(&p), "position {p} out of range");
        self.0 |= 1 << p;
    }

    pub fn contains(self, p: usize) -> bool {
        p < 64 && self.0 >> p & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn sum(self) -> usize {
        self.iter().sum()
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..64).filter(move |&p| self.contains(p))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `[1, m]`.
    pub fn all_subsets(m: usize) -> impl Iterator<Item = PosSet> {
        (0u64..1 << m).map(|b| PosSet(b << 1))
    }
}

impl fmt::Display for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Integer partition with parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; rejects zero parts and a wrong total.
    pub fn of(n: usize, parts: &[usize]) -> Result<Partition, Error> {
        if parts.contains(&0) || parts.iter().sum::<usize>() != n {
            return Err(Error::InvalidPartition(parts.to_vec(), n));
        }
        let mut p = parts.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(p))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Descent positions `i` with `w(i) > w(i+1)`, 1-indexed.
pub fn descent_set(w: &[usize]) -> PosSet {
    let mut s = PosSet::EMPTY;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            s.insert(i);
        }
    }
    s
}

pub fn des(w: &[usize]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn maj(w: &[usize]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).sum()
}

pub fn excedance_set(w: &[usize]) -> PosSet {
    let mut s = PosSet::EMPTY;
    for (i, &v) in w.iter().enumerate() {
        if v > i + 1 {
            s.insert(i + 1);
        }
    }
    s
}

pub fn exc(w: &[usize]) -> usize {
    w.iter().enumerate().filter(|&(i, &v)| v > i + 1).count()
}

pub fn fix(w: &[usize]) -> usize {
    w.iter().enumerate().filter(|&(i, &v)| v == i + 1).count()
}

pub fn inv(w: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// The barred word of `w`: every excedance value carries a bar.
pub fn barred_word(w: &[usize]) -> Vec<BarredLetter> {
    w.iter()
        .enumerate()
        .map(|(i, &v)| BarredLetter { value: v as u32, barred: v > i + 1 })
        .collect()
}

/// Descent set of the barred word under the block order (all barred letters
/// below all unbarred ones).
pub fn exd_set(w: &[usize]) -> PosSet {
    let order = AlphabetOrder::Block;
    let bw = barred_word(w);
    let mut s = PosSet::EMPTY;
    for i in 1..bw.len() {
        if order.key(bw[i - 1]) > order.key(bw[i]) {
            s.insert(i);
        }
    }
    s
}

/// Value pairs `(w(i), w(j))` with `i < j`, `w(i) > w(j)`, and either
/// `w(j) < w(j+1)` (false when `j` is the last position) or some `k` strictly
/// between with `w(k) < w(j)`.
pub fn admissible_inversions(w: &[usize]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w[i] <= w[j] {
                continue;
            }
            let ascent_after = j + 1 < n && w[j] < w[j + 1];
            if ascent_after || (i + 1..j).any(|k| w[k] < w[j]) {
                out.push((w[i], w[j]));
            }
        }
    }
    out
}

pub fn ai(w: &[usize]) -> usize {
    admissible_inversions(w).len()
}

pub fn aid(w: &[usize]) -> usize {
    ai(w) + des(w)
}

pub fn cycle_type(w: &[usize]) -> Partition {
    let mut seen = vec![false; w.len()];
    let mut parts = Vec::new();
    for start in 0..w.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = w[i] - 1;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    image: Vec<usize>,
}

/// Every statistic used by the identities, computed in one pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub des: usize,
    pub exc: usize,
    pub maj: usize,
    pub inv: usize,
    pub fix: usize,
    pub descent_set: PosSet,
    pub excedance_set: PosSet,
    pub exd: PosSet,
    pub ai: usize,
    pub aid: usize,
    pub cycle_type: Partition,
}

impl Perm {
    pub fn new(image: Vec<usize>) -> Result<Perm, Error> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPerm(format!("{image:?} is not a permutation of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Perm { image })
    }

    pub fn identity(n: usize) -> Perm {
        Perm { image: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn stats(&self) -> StatRecord {
        let w = self.as_slice();
        let ai = ai(w);
        let des = des(w);
        StatRecord {
            des,
            exc: exc(w),
            maj: maj(w),
            inv: inv(w),
            fix: fix(w),
            descent_set: descent_set(w),
            excedance_set: excedance_set(w),
            exd: exd_set(w),
            ai,
            aid: ai + des,
            cycle_type: cycle_type(w),
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// `"32541"`, or comma-separated values such as `"10,3,1,..."` for `n > 9`.
    fn from_str(s: &str) -> Result<Perm, Error> {
        let s = s.trim();
        let image: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let image = image.ok_or_else(|| Error::InvalidPerm(String::from(s)))?;
        Perm::new(image)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of lexicographic rank `rank` in `S_n`.
pub fn unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Rearranges `w` into its lexicographic successor; false at the last permutation.
pub fn next_permutation(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Calls `f` on each permutation with lexicographic rank in `ranks`, reusing one buffer.
pub fn for_each_in_ranks(n: usize, ranks: Range<u64>, mut f: impl FnMut(&[usize])) {
    if ranks.start >= ranks.end || ranks.start >= factorial(n) {
        return;
    }
    let mut w = unrank(n, ranks.start);
    let mut r = ranks.start;
    loop {
        f(&w);
        r += 1;
        if r >= ranks.end || !next_permutation(&mut w) {
            break;
        }
    }
}

/// Which permutations [`iterate_perms`] yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermFilter {
    All,
    Derangements,
    CycleType(Vec<usize>),
    Exc(usize),
    Des(usize),
}

/// Streams `S_n` (filtered) in lexicographic order without materializing it.
pub struct PermIter {
    current: Option<Vec<usize>>,
    filter: PermFilter,
}

impl Iterator for PermIter {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        loop {
            let w = self.current.as_mut()?;
            let out = w.clone();
            if !next_permutation(w) {
                self.current = None;
            }
            let keep = match &self.filter {
                PermFilter::All => true,
                PermFilter::Derangements => fix(&out) == 0,
                PermFilter::CycleType(l) => cycle_type(&out).parts() == l.as_slice(),
                PermFilter::Exc(j) => exc(&out) == *j,
                PermFilter::Des(j) => des(&out) == *j,
            };
            if keep {
                return Some(Perm { image: out });
            }
        }
    }
}

pub fn iterate_perms(n: usize, filter: PermFilter) -> Result<PermIter, Error> {
    let filter = match filter {
        PermFilter::CycleType(parts) => PermFilter::CycleType(Partition::of(n, &parts)?.0),
        f => f,
    };
    Ok(PermIter { current: Some((1..=n).collect()), filter })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn stats_of_32541() {
        let s = perm("32541").stats();
        assert_eq!((s.des, s.exc), (3, 2));
        assert_eq!(s.descent_set.to_vec(), [1, 3, 4]);
        assert_eq!(s.excedance_set.to_vec(), [1, 3]);
        assert_eq!(s.maj, 8);
    }

    #[test]
    fn exd_of_531462() {
        let p = perm("531462");
        let s = p.stats();
        assert_eq!(s.exd.to_vec(), [1, 4]);
        assert_eq!((s.maj, s.exc), (8, 3));
        assert_eq!(s.exd.sum(), s.maj - s.exc);
        let bars: Vec<bool> = barred_word(p.as_slice()).iter().map(|l| l.barred).collect();
        assert_eq!(bars, [true, true, false, false, true, false]);
    }

    #[test]
    fn admissible_inversions_of_24153() {
        let p = perm("24153");
        assert_eq!(admissible_inversions(p.as_slice()), [(2, 1), (4, 1), (4, 3)]);
        let s = p.stats();
        assert_eq!((s.ai, s.des, s.aid), (3, 2, 5));
    }

    #[test]
    fn identity_stats() {
        for n in 0..7 {
            let s = Perm::identity(n).stats();
            assert_eq!((s.des, s.exc, s.maj, s.inv, s.ai, s.fix), (0, 0, 0, 0, 0, n));
            assert_eq!(s.cycle_type.parts(), alloc::vec![1; n].as_slice());
        }
    }

    #[test]
    fn ai_table_for_s3_descent_one() {
        // 132, 213, 231, 312 in lexicographic order
        let ais: Vec<usize> = iterate_perms(3, PermFilter::Des(1)).unwrap().map(|p| p.stats().ai).collect();
        assert_eq!(ais, [0, 1, 0, 2]);
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(perm("32541").to_string(), "32541");
        let big: Perm = "10,3,1,2,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(big.len(), 10);
        assert_eq!(big.to_string(), "10,3,1,2,4,5,6,7,8,9");
        for bad in ["112", "0", "13", "1,2,4", "a2"] {
            assert!(matches!(bad.parse::<Perm>(), Err(Error::InvalidPerm(_))), "{bad}");
        }
    }

    #[test]
    fn iteration_filters() {
        assert_eq!(iterate_perms(3, PermFilter::All).unwrap().count(), 6);
        let der: Vec<String> = iterate_perms(3, PermFilter::Derangements).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(der, ["231", "312"]);
        assert_eq!(iterate_perms(4, PermFilter::CycleType(alloc::vec![2, 2])).unwrap().count(), 3);
        assert_eq!(iterate_perms(0, PermFilter::All).unwrap().count(), 1);
        assert!(matches!(
            iterate_perms(4, PermFilter::CycleType(alloc::vec![2, 1])),
            Err(Error::InvalidPartition(..))
        ));
        // lexicographic and complete
        let all: Vec<Perm> = iterate_perms(5, PermFilter::All).unwrap().collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rank_ranges_partition_sn() {
        let mut whole = Vec::new();
        for_each_in_ranks(5, 0..120, |w| whole.push(w.to_vec()));
        let mut pieces = Vec::new();
        for r in [0..7, 7..50, 50..51, 51..200] {
            for_each_in_ranks(5, r, |w| pieces.push(w.to_vec()));
        }
        assert_eq!(whole, pieces);
        assert_eq!(unrank(4, 23), [4, 3, 2, 1]);
    }

    #[test]
    fn macmahon_equidistribution_and_mahonian() {
        use crate::{qcalc::q_factorial, Poly, Var};
        for n in 0..=8 {
            let mut by_des = vec![0u64; n + 1];
            let mut by_exc = vec![0u64; n + 1];
            let mut maj_gf = vec![0i64; n * n + 1];
            let mut inv_gf = vec![0i64; n * n + 1];
            for_each_in_ranks(n, 0..factorial(n), |w| {
                by_des[des(w)] += 1;
                by_exc[exc(w)] += 1;
                maj_gf[maj(w)] += 1;
                inv_gf[inv(w)] += 1;
                let e = exd_set(w);
                assert!(e.max().unwrap_or(0) < n.max(1));
                assert_eq!(e.sum() + exc(w), maj(w));
            });
            assert_eq!(by_des, by_exc);
            assert_eq!(maj_gf, inv_gf);
            let gf: Poly = maj_gf
                .iter()
                .enumerate()
                .map(|(k, &c)| Poly::var_pow(Var::Q, k as u32).scale(c))
                .sum();
            assert_eq!(gf, q_factorial(n));
        }
    }

    #[test]
    fn partitions_enumerated() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(Partition::of(4, &[1, 3]).unwrap().parts(), [3, 1]);
        assert!(Partition::of(4, &[2, 0, 2]).is_err());
    }
}
