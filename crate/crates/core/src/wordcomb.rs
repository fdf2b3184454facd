//! Words over barred and unbarred positive integers: Lyndon factorization,
//! necklaces, ornaments, banners and marked sequences.
//!
//! Two total orders on letters are in use. [`AlphabetOrder::Block`] puts every
//! barred letter below every unbarred one and defines `Exd`.
//! [`AlphabetOrder::Interleaved`] is `1' < 1 < 2' < 2 < ...` and governs Lyndon
//! factorization and the ordering of necklaces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::exactalg::{Monomial, Poly, Var};
use crate::permstat::Partition;
use crate::quasisym::{complete_h, FCache, QExpansions};
use crate::{Error, Report};

/// A letter `a` or `a'` (barred). `|a|` is `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BarredLetter {
    pub value: u32,
    pub barred: bool,
}

impl BarredLetter {
    pub fn plain(value: u32) -> Self {
        BarredLetter { value, barred: false }
    }

    pub fn bar(value: u32) -> Self {
        BarredLetter { value, barred: true }
    }
}

impl fmt::Display for BarredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "'" } else { "" })
    }
}

impl FromStr for BarredLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (digits, barred) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v > 0 => Ok(BarredLetter { value: v, barred }),
            _ => Err(Error::InvalidWord(String::from(s))),
        }
    }
}

/// Parses `"2',3,1"` (optionally wrapped in parentheses).
pub fn parse_word(s: &str) -> Result<Vec<BarredLetter>, Error> {
    let s = s.trim();
    let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(str::parse).collect()
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[BarredLetter]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetOrder {
    /// `1' < 2' < ... < n' < 1 < 2 < ... < n`.
    Block,
    /// `1' < 1 < 2' < 2 < ...`.
    Interleaved,
}

impl AlphabetOrder {
    pub fn key(self, l: BarredLetter) -> (u32, u32) {
        let plain = u32::from(!l.barred);
        match self {
            AlphabetOrder::Block => (plain, l.value),
            AlphabetOrder::Interleaved => (l.value, plain),
        }
    }

    pub fn cmp(self, a: BarredLetter, b: BarredLetter) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Lexicographic order on finite words, a proper prefix being smaller.
    pub fn cmp_words(self, a: &[BarredLetter], b: &[BarredLetter]) -> Ordering {
        for (x, y) in a.iter().zip(b) {
            match self.cmp(*x, *y) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        a.len().cmp(&b.len())
    }
}

/// Product of `x_{|a|}` over the letters.
pub fn letters_weight(letters: &[BarredLetter]) -> Monomial {
    letters.iter().fold(Monomial::one(), |m, l| m.mul(&Monomial::var(Var::X(l.value))))
}

pub fn bar_count(letters: &[BarredLetter]) -> usize {
    letters.iter().filter(|l| l.barred).count()
}

/// Strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[BarredLetter], order: AlphabetOrder) -> bool {
    let k = w.len();
    k > 0
        && (1..k).all(|r| {
            let rot: Vec<BarredLetter> = w[r..].iter().chain(&w[..r]).copied().collect();
            order.cmp_words(w, &rot) == Ordering::Less
        })
}

/// Duval's factorization into weakly decreasing Lyndon words.
pub fn lyndon_factorize_with(w: &[BarredLetter], order: AlphabetOrder) -> Result<Vec<&[BarredLetter]>, Error> {
    if w.is_empty() {
        return Err(Error::InvalidWord(String::from("empty word has no Lyndon factorization")));
    }
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n {
            match order.cmp(w[k], w[j]) {
                Ordering::Less => k = i,
                Ordering::Equal => k += 1,
                Ordering::Greater => break,
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(&w[i..i + period]);
            i += period;
        }
    }
    Ok(out)
}

/// Lyndon factorization in the interleaved order.
pub fn lyndon_factorize(w: &[BarredLetter]) -> Result<Vec<&[BarredLetter]>, Error> {
    lyndon_factorize_with(w, AlphabetOrder::Interleaved)
}

/// Partition of the Lyndon factor lengths.
pub fn lyndon_type(w: &[BarredLetter]) -> Result<Partition, Error> {
    let sizes: Vec<usize> = lyndon_factorize(w)?.iter().map(|f| f.len()).collect();
    Partition::of(w.len(), &sizes)
}

fn rotations(w: &[BarredLetter]) -> impl Iterator<Item = Vec<BarredLetter>> + '_ {
    (0..w.len()).map(move |r| w[r..].iter().chain(&w[..r]).copied().collect())
}

fn is_primitive(w: &[BarredLetter]) -> bool {
    let k = w.len();
    (1..k).all(|r| (0..k).any(|i| w[i] != w[(i + r) % k]))
}

/// Primitive circular word obeying the bar rule (barred before a larger
/// letter, unbarred before a smaller one, free before an equal one), and not a
/// lone barred letter.
pub fn is_necklace(c: &[BarredLetter]) -> bool {
    let k = c.len();
    if k == 0 || (k == 1 && c[0].barred) || !is_primitive(c) {
        return false;
    }
    (0..k).all(|i| {
        let (a, b) = (c[i], c[(i + 1) % k]);
        match a.value.cmp(&b.value) {
            Ordering::Less => a.barred,
            Ordering::Greater => !a.barred,
            Ordering::Equal => true,
        }
    })
}

/// Compares the infinite words `a^∞` and `b^∞` in the interleaved order; a
/// prefix of length `|a| + |b|` decides it.
pub fn compare_periodic(a: &[BarredLetter], b: &[BarredLetter]) -> Ordering {
    let order = AlphabetOrder::Interleaved;
    for i in 0..a.len() + b.len() {
        match order.cmp(a[i % a.len()], b[i % b.len()]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// A necklace stored in the rotation giving its smallest infinite word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Necklace {
    letters: Vec<BarredLetter>,
}

impl Necklace {
    pub fn new(letters: &[BarredLetter]) -> Result<Necklace, Error> {
        if !is_necklace(letters) {
            return Err(Error::InvalidWord(format!("({}) is not a necklace", DisplayWord(letters))));
        }
        let best = rotations(letters)
            .min_by(|a, b| compare_periodic(a, b))
            .expect("nonempty");
        Ok(Necklace { letters: best })
    }

    pub fn letters(&self) -> &[BarredLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn bars(&self) -> usize {
        bar_count(&self.letters)
    }
}

/// Necklace order: lexicographic order of smallest infinite words.
pub fn necklace_compare(a: &Necklace, b: &Necklace) -> Ordering {
    compare_periodic(&a.letters, &b.letters)
}

impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> Ordering {
        necklace_compare(self, other)
    }
}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_letters(f, &self.letters)?;
        f.write_str(")")
    }
}

struct DisplayWord<'a>(&'a [BarredLetter]);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.0)
    }
}

/// All necklaces of length `k` with letters in `1..=m`, ascending in necklace order.
pub fn enumerate_necklaces(k: usize, m: u32) -> Vec<Necklace> {
    let mut out = BTreeSet::new();
    if k == 0 || m == 0 {
        return Vec::new();
    }
    let alphabet: Vec<BarredLetter> = (1..=m).flat_map(|v| [BarredLetter::bar(v), BarredLetter::plain(v)]).collect();
    let base = alphabet.len();
    let mut digits = vec![0usize; k];
    loop {
        let word: Vec<BarredLetter> = digits.iter().map(|&d| alphabet[d]).collect();
        if let Ok(nk) = Necklace::new(&word) {
            out.insert(nk);
        }
        let mut i = 0;
        while i < k {
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    out.into_iter().collect()
}

/// Weakly decreasing sequence of necklaces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ornament {
    necklaces: Vec<Necklace>,
}

impl Ornament {
    pub fn new(necklaces: Vec<Necklace>) -> Result<Ornament, Error> {
        if necklaces.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWord(String::from("ornament necklaces must weakly decrease")));
        }
        Ok(Ornament { necklaces })
    }

    pub fn necklaces(&self) -> &[Necklace] {
        &self.necklaces
    }

    pub fn cycle_type(&self) -> Partition {
        let sizes: Vec<usize> = self.necklaces.iter().map(Necklace::len).collect();
        Partition::of(sizes.iter().sum(), &sizes).expect("necklaces are nonempty")
    }

    pub fn bars(&self) -> usize {
        self.necklaces.iter().map(Necklace::bars).sum()
    }

    pub fn weight(&self) -> Monomial {
        self.necklaces
            .iter()
            .fold(Monomial::one(), |m, nk| m.mul(&letters_weight(nk.letters())))
    }
}

impl fmt::Display for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, nk) in self.necklaces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{nk}")?;
        }
        Ok(())
    }
}

/// Ornaments of type `λ` with exactly `bars` bars and letters in `1..=m`.
pub fn enumerate_ornaments(lambda: &Partition, bars: usize, m: u32) -> Vec<Ornament> {
    let mut need: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *need.entry(p).or_insert(0) += 1;
    }
    // descending necklace order, so picks with nondecreasing index weakly decrease
    let mut pool: Vec<Necklace> = need.keys().flat_map(|&k| enumerate_necklaces(k, m)).collect();
    pool.sort_by(|a, b| b.cmp(a));

    fn go(
        pool: &[Necklace],
        start: usize,
        need: &mut BTreeMap<usize, usize>,
        bars_left: usize,
        left: usize,
        cur: &mut Vec<Necklace>,
        out: &mut Vec<Ornament>,
    ) {
        if left == 0 {
            if bars_left == 0 {
                out.push(Ornament { necklaces: cur.clone() });
            }
            return;
        }
        for i in start..pool.len() {
            let nk = &pool[i];
            let b = nk.bars();
            let slot = need.get_mut(&nk.len()).expect("pool sizes come from need");
            if *slot == 0 || b > bars_left {
                continue;
            }
            *slot -= 1;
            cur.push(nk.clone());
            go(pool, i, need, bars_left - b, left - 1, cur, out);
            cur.pop();
            *need.get_mut(&nk.len()).expect("present") += 1;
        }
    }

    let mut out = Vec::new();
    let left = lambda.parts().len();
    go(&pool, 0, &mut need, bars, left, &mut Vec::new(), &mut out);
    out
}

/// A linear word where a letter is barred before a strictly larger letter and
/// unbarred before a strictly smaller one or at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Banner {
    letters: Vec<BarredLetter>,
}

impl Banner {
    pub fn new(letters: Vec<BarredLetter>) -> Result<Banner, Error> {
        let n = letters.len();
        for i in 0..n {
            let ok = if i + 1 == n {
                !letters[i].barred
            } else {
                match letters[i].value.cmp(&letters[i + 1].value) {
                    Ordering::Less => letters[i].barred,
                    Ordering::Greater => !letters[i].barred,
                    Ordering::Equal => true,
                }
            };
            if !ok {
                return Err(Error::InvalidWord(format!("{} violates the banner rule at {}", DisplayWord(&letters), i + 1)));
            }
        }
        Ok(Banner { letters })
    }

    pub fn letters(&self) -> &[BarredLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn bars(&self) -> usize {
        bar_count(&self.letters)
    }

    pub fn weight(&self) -> Monomial {
        letters_weight(&self.letters)
    }

    /// Lyndon type; the empty banner has the empty partition.
    pub fn lyndon_type(&self) -> Partition {
        if self.letters.is_empty() {
            return Partition::of(0, &[]).expect("empty partition");
        }
        lyndon_type(&self.letters).expect("nonempty")
    }
}

impl fmt::Display for Banner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

impl FromStr for Banner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Banner::new(parse_word(s)?)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BannerFilter {
    pub bars: Option<usize>,
    /// Keep only banners whose Lyndon type has no part of size 1.
    pub no_singleton_factors: bool,
}

/// Banners of length `n` with letters in `1..=m`. `n = 0` yields the empty banner.
pub fn enumerate_banners(n: usize, m: u32, filter: BannerFilter) -> Vec<Banner> {
    fn go(n: usize, m: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=m {
            cur.push(v);
            go(n, m, cur, out);
            cur.pop();
        }
    }
    let mut values = Vec::new();
    go(n, m, &mut Vec::new(), &mut values);

    let mut out = Vec::new();
    for vs in values {
        let ties: Vec<usize> = (0..n.saturating_sub(1)).filter(|&i| vs[i] == vs[i + 1]).collect();
        for mask in 0u32..1 << ties.len() {
            let mut letters: Vec<BarredLetter> = (0..n)
                .map(|i| BarredLetter { value: vs[i], barred: i + 1 < n && vs[i] < vs[i + 1] })
                .collect();
            for (b, &i) in ties.iter().enumerate() {
                letters[i].barred = mask >> b & 1 == 1;
            }
            let banner = Banner { letters };
            if filter.bars.is_some_and(|j| banner.bars() != j) {
                continue;
            }
            if filter.no_singleton_factors && banner.lyndon_type().parts().contains(&1) {
                continue;
            }
            out.push(banner);
        }
    }
    out
}

/// Wraps each Lyndon factor of the banner into a circular word.
pub fn banner_to_ornament(b: &Banner) -> Result<Ornament, Error> {
    if b.is_empty() {
        return Ok(Ornament { necklaces: Vec::new() });
    }
    let necklaces = lyndon_factorize(&b.letters)?
        .into_iter()
        .map(Necklace::new)
        .collect::<Result<Vec<_>, _>>()?;
    Ornament::new(necklaces)
}

/// A weakly increasing sequence `α` with a mark `1 <= j <= len(α) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedSequence {
    alpha: Vec<u32>,
    mark: usize,
}

impl MarkedSequence {
    pub fn new(alpha: Vec<u32>, mark: usize) -> Result<Self, Error> {
        let ok = alpha.windows(2).all(|w| w[0] <= w[1])
            && !alpha.contains(&0)
            && mark >= 1
            && mark < alpha.len();
        if !ok {
            return Err(Error::InvalidWord(format!("({alpha:?}, {mark}) is not a marked sequence")));
        }
        Ok(MarkedSequence { alpha, mark })
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    /// `Π x_{α_i}`.
    pub fn weight(&self) -> Monomial {
        self.alpha.iter().fold(Monomial::one(), |m, &a| m.mul(&Monomial::var(Var::X(a))))
    }
}

/// Marked sequences of length `k` with entries in `1..=m`.
pub fn enumerate_marked(k: usize, m: u32) -> Vec<MarkedSequence> {
    fn go(k: usize, lo: u32, m: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            go(k, v, m, cur, out);
            cur.pop();
        }
    }
    let mut seqs = Vec::new();
    go(k, 1, m, &mut Vec::new(), &mut seqs);
    seqs.into_iter()
        .flat_map(|a| (1..k).map(move |j| MarkedSequence { alpha: a.clone(), mark: j }))
        .collect()
}

fn weight_sum<'a>(ms: impl Iterator<Item = Monomial> + 'a) -> Poly {
    Poly::from_terms(ms.map(|m| (m, BigInt::from(1))))
}

/// `Q_{λ,j}` against the weight sum of ornaments of type `λ` with `j` bars, letters `<= m`.
pub fn verify_thm_2_2(lambda: &Partition, j: usize, m: u32) -> Report {
    let n = lambda.size();
    let mut report = Report::new("thm2-2", n);
    check_thm_2_2(&mut report, &QExpansions::scan(n), lambda, j, m, &mut FCache::default());
    report
}

fn check_thm_2_2(report: &mut Report, ex: &QExpansions, lambda: &Partition, j: usize, m: u32, cache: &mut FCache) {
    let q = ex.lambda(lambda, j).to_sympoly(m as usize, cache);
    let orn = weight_sum(enumerate_ornaments(lambda, j, m).iter().map(Ornament::weight));
    report.compare(format!("lambda={lambda},j={j},m={m}"), lambda.size(), q.poly(), &orn);
}

/// [`verify_thm_2_2`] for every `λ ⊢ n'`, `1 <= n' <= n`, and `0 <= j < n'`.
pub fn verify_thm_2_2_upto(max_n: usize, m: u32) -> Report {
    let mut report = Report::new("thm2-2", max_n);
    let mut cache = FCache::default();
    for n in 1..=max_n {
        let ex = QExpansions::scan(n);
        for lambda in Partition::all(n) {
            for j in 0..n {
                check_thm_2_2(&mut report, &ex, &lambda, j, m, &mut cache);
            }
        }
    }
    report
}

/// Banners of Lyndon type `λ` (letters `<= m`) map injectively onto the ornaments
/// of type `λ`, preserving bars and weight, for every bar count.
pub fn verify_prop_2_5(lambda: &Partition, m: u32) -> Report {
    let n = lambda.size();
    let mut report = Report::new("prop2-5", n);
    let mut images: BTreeMap<usize, BTreeSet<Ornament>> = BTreeMap::new();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut well_formed = true;
    for b in enumerate_banners(n, m, BannerFilter::default()) {
        if b.lyndon_type() != *lambda {
            continue;
        }
        match banner_to_ornament(&b) {
            Ok(o) => {
                well_formed &= o.cycle_type() == *lambda && o.bars() == b.bars() && o.weight() == b.weight();
                *counts.entry(b.bars()).or_insert(0) += 1;
                images.entry(b.bars()).or_default().insert(o);
            }
            Err(_) => well_formed = false,
        }
    }
    report.record(format!("lambda={lambda},m={m} images are ornaments of the same type, bars, weight"), n, well_formed);
    for j in 0..=n {
        let image = images.remove(&j).unwrap_or_default();
        let injective = image.len() == counts.get(&j).copied().unwrap_or(0);
        report.record(format!("lambda={lambda},j={j},m={m} injective"), n, injective);
        let target: BTreeSet<Ornament> = enumerate_ornaments(lambda, j, m).into_iter().collect();
        report.record(format!("lambda={lambda},j={j},m={m} onto"), n, image == target);
    }
    report
}

/// [`verify_prop_2_5`] for every `λ ⊢ n'`, `1 <= n' <= n`.
pub fn verify_prop_2_5_upto(max_n: usize, m: u32) -> Report {
    let mut report = Report::new("prop2-5", max_n);
    for n in 1..=max_n {
        for lambda in Partition::all(n) {
            report.checks.extend(verify_prop_2_5(&lambda, m).checks);
        }
    }
    report
}

/// `~Q_{n,j}` against the weight sum of banners of length `n` with `j` bars and
/// no Lyndon factor of length 1, letters `<= m`.
pub fn verify_cor_2_4(n: usize, j: usize, m: u32) -> Report {
    let mut report = Report::new("cor2-4", n);
    let ex = QExpansions::scan(n);
    let tilde = ex.tilde(j).to_sympoly(m as usize, &mut FCache::default());
    let banners = enumerate_banners(n, m, BannerFilter { bars: Some(j), no_singleton_factors: true });
    let sum = weight_sum(banners.iter().map(Banner::weight));
    report.compare(format!("n={n},j={j},m={m}"), n, tilde.poly(), &sum);
    report
}

/// [`verify_cor_2_4`] for `1 <= n' <= n`, `0 <= j < n'`, with `m = n'` unless given.
pub fn verify_cor_2_4_upto(max_n: usize, m: Option<u32>) -> Report {
    let mut report = Report::new("cor2-4", max_n);
    for n in 1..=max_n {
        for j in 0..n {
            let r = verify_cor_2_4(n, j, m.unwrap_or(n as u32));
            report.checks.extend(r.checks);
        }
    }
    report
}

/// Bar-marked banner weight `Σ_{B ∈ ~B_n} w(B) u^bars(B)`.
fn marked_banner_sum(n: usize, m: u32) -> Poly {
    Poly::from_terms(
        enumerate_banners(n, m, BannerFilter { bars: None, no_singleton_factors: true })
            .iter()
            .map(|b| {
                let mut w = b.weight();
                w.set(Var::U, b.bars() as u32);
                (w, BigInt::from(1))
            }),
    )
}

/// The weight and bar-count contract of a bijection `~B_n -> ⋃ ~B_{n-k} × M_k`:
/// `Σ_{~B_n} w u^bars = Σ_{k>=2} (Σ_{~B_{n-k}} w u^bars) (Σ_{M_k} w(α) u^j)`.
/// Also checks that marked sequences of length `k` weigh `(k-1) h_k` in total.
pub fn verify_thm_2_6_contract(n: usize, m: u32) -> Report {
    let mut report = Report::new("thm2-6", n);
    let lhs = marked_banner_sum(n, m);
    let mut rhs = Poly::zero();
    for k in 2..=n {
        let marked = enumerate_marked(k, m);
        let seq_sum = Poly::from_terms(marked.iter().map(|s| {
            let mut w = s.weight();
            w.set(Var::U, s.mark() as u32);
            (w, BigInt::from(1))
        }));
        let h = complete_h(k, m as usize).into_poly();
        let unmarked = seq_sum.subs(Var::U, &Poly::one());
        report.compare(format!("n={n},k={k} marked weights"), n, &unmarked, &h.scale(k as i64 - 1));
        rhs += &marked_banner_sum(n - k, m) * &seq_sum;
    }
    report.compare(format!("n={n},m={m}"), n, &lhs, &rhs);
    report
}

/// [`verify_thm_2_6_contract`] for `1 <= n' <= n` with `m = n'` unless given.
pub fn verify_thm_2_6_upto(max_n: usize, m: Option<u32>) -> Report {
    let mut report = Report::new("thm2-6", max_n);
    for n in 1..=max_n {
        report.checks.extend(verify_thm_2_6_contract(n, m.unwrap_or(n as u32)).checks);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Vec<BarredLetter> {
        parse_word(s).unwrap()
    }

    fn factor_strings(s: &str) -> Vec<String> {
        let word = w(s);
        lyndon_factorize(&word)
            .unwrap()
            .iter()
            .map(|f| DisplayWord(f).to_string())
            .collect()
    }

    #[test]
    fn letter_text_form() {
        assert_eq!("3'".parse::<BarredLetter>().unwrap(), BarredLetter::bar(3));
        assert_eq!(BarredLetter::bar(3).to_string(), "3'");
        assert!("0".parse::<BarredLetter>().is_err());
        assert!("x".parse::<BarredLetter>().is_err());
        assert_eq!(w("(1',3,1)"), [BarredLetter::bar(1), BarredLetter::plain(3), BarredLetter::plain(1)]);
    }

    #[test]
    fn two_orders_differ() {
        let (a, b) = (BarredLetter::plain(1), BarredLetter::bar(2));
        assert_eq!(AlphabetOrder::Block.cmp(a, b), Ordering::Greater);
        assert_eq!(AlphabetOrder::Interleaved.cmp(a, b), Ordering::Less);
        assert_eq!(AlphabetOrder::Interleaved.cmp(BarredLetter::bar(1), a), Ordering::Less);
    }

    #[test]
    fn lyndon_examples() {
        assert_eq!(factor_strings("3"), ["3"]);
        assert_eq!(factor_strings("2,1"), ["2", "1"]);
        assert_eq!(factor_strings("1',2"), ["1',2"]);
        assert_eq!(lyndon_type(&w("2',3,1")).unwrap().parts(), [2, 1]);
        assert!(lyndon_factorize(&[]).is_err());
    }

    #[test]
    fn lyndon_factorization_properties() {
        let order = AlphabetOrder::Interleaved;
        for b in enumerate_banners(5, 3, BannerFilter::default()).iter().chain(&enumerate_banners(4, 4, BannerFilter::default())) {
            let word = b.letters();
            let fs = lyndon_factorize(word).unwrap();
            let joined: Vec<BarredLetter> = fs.iter().flat_map(|f| f.iter().copied()).collect();
            assert_eq!(joined, word);
            assert!(fs.iter().all(|f| is_lyndon(f, order)));
            assert!(fs.windows(2).all(|p| order.cmp_words(p[0], p[1]) != Ordering::Less));
        }
    }

    #[test]
    fn necklace_examples() {
        for good in ["1',3,1,1',2,2", "1',3,1',1',2,2", "1',3,1,1',2',2", "1',3,1',1',2',2", "3"] {
            assert!(is_necklace(&w(good)), "{good}");
        }
        for bad in ["1',3',1,1,2,2'", "3'", "1',2,1',2"] {
            assert!(!is_necklace(&w(bad)), "{bad}");
        }
    }

    #[test]
    fn necklace_order_uses_infinite_words() {
        // 1'1 1'1 ... vs 1'1 1 1'1 1 ...: third letters 1' < 1
        let a = Necklace::new(&w("1',1")).unwrap();
        let b = Necklace::new(&w("1',1,1")).unwrap();
        assert_eq!(necklace_compare(&a, &b), Ordering::Less);
        // canonical rotation
        let c = Necklace::new(&w("2,1',2")).unwrap();
        assert_eq!(c.to_string(), "(1',2,2)");
    }

    #[test]
    fn ornament_examples() {
        let l2 = Partition::of(2, &[2]).unwrap();
        let orns = enumerate_ornaments(&l2, 1, 2);
        let mut shown: Vec<String> = orns.iter().map(|o| o.to_string()).collect();
        shown.sort();
        assert_eq!(shown, ["(1',1)", "(1',2)", "(2',2)"]);
        let sum = weight_sum(orns.iter().map(Ornament::weight));
        assert_eq!(sum, "x_1^2 + x_1*x_2 + x_2^2".parse().unwrap());

        let o = Ornament::new(alloc::vec![
            Necklace::new(&w("1',2,2")).unwrap(),
            Necklace::new(&w("1',2',3,3,2")).unwrap(),
        ]);
        // order is by infinite word: (1',2',...) < (1',2,...)
        let o = o.unwrap();
        assert_eq!(o.cycle_type().parts(), [5, 3]);
        assert_eq!(Poly::term(1, o.weight()), "x_1^2*x_2^4*x_3^2".parse().unwrap());

        let l1 = Partition::of(1, &[1]).unwrap();
        assert!(enumerate_ornaments(&l1, 1, 5).is_empty());
    }

    #[test]
    fn banner_examples() {
        let tilde2 = enumerate_banners(2, 2, BannerFilter { bars: None, no_singleton_factors: true });
        let shown: Vec<String> = tilde2.iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, ["1',1", "1',2", "2',2"]);
        assert_eq!(marked_banner_sum(2, 2), "u*x_1^2 + u*x_1*x_2 + u*x_2^2".parse().unwrap());

        let b: Banner = "2',3,1".parse().unwrap();
        assert_eq!(b.lyndon_type().parts(), [2, 1]);
        assert!(matches!("1,2".parse::<Banner>(), Err(Error::InvalidWord(_))));
        assert!(matches!("1'".parse::<Banner>(), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn banner_enumeration_is_complete() {
        // brute force over all 2m-letter words of length n
        let (n, m) = (4usize, 3u32);
        let alphabet: Vec<BarredLetter> = (1..=m).flat_map(|v| [BarredLetter::bar(v), BarredLetter::plain(v)]).collect();
        let mut brute = 0;
        for code in 0..alphabet.len().pow(n as u32) {
            let mut c = code;
            let word: Vec<BarredLetter> = (0..n)
                .map(|_| {
                    let l = alphabet[c % alphabet.len()];
                    c /= alphabet.len();
                    l
                })
                .collect();
            if Banner::new(word).is_ok() {
                brute += 1;
            }
        }
        assert_eq!(enumerate_banners(n, m, BannerFilter::default()).len(), brute);
    }

    #[test]
    fn marked_sequences() {
        assert_eq!(enumerate_marked(1, 3).len(), 0);
        // C(m+k-1, k) sequences times (k-1) marks
        assert_eq!(enumerate_marked(3, 2).len(), 4 * 2);
        assert!(MarkedSequence::new(alloc::vec![2, 1], 1).is_err());
        assert!(MarkedSequence::new(alloc::vec![1, 2], 2).is_err());
        assert!(MarkedSequence::new(alloc::vec![1, 2], 1).is_ok());
    }

    /// With distinct letters 1..n every bar is forced, so ornaments of type (n)
    /// are the (n-1)! cyclic arrangements and their bar counts follow the
    /// excedance distribution of n-cycles.
    #[test]
    fn distinct_letter_ornaments_count_cycles() {
        use crate::permstat::{iterate_perms, PermFilter};
        for n in 1..=5usize {
            let lambda = Partition::of(n, &[n]).unwrap();
            let sq = crate::quasisym::squarefree_monomial(n);
            for j in 0..n {
                let orn = enumerate_ornaments(&lambda, j, n as u32).iter().filter(|o| o.weight() == sq).count();
                let cycles = iterate_perms(n, PermFilter::CycleType(alloc::vec![n]))
                    .unwrap()
                    .filter(|p| p.stats().exc == j)
                    .count();
                assert_eq!(orn, cycles, "n={n} j={j}");
            }
            let total: usize = (0..n)
                .map(|j| enumerate_ornaments(&lambda, j, n as u32).iter().filter(|o| o.weight() == sq).count())
                .sum();
            assert_eq!(total as u64, crate::permstat::factorial(n - 1));
        }
    }

    #[test]
    fn enumerators_self_validate() {
        for k in 1..=4 {
            for nk in enumerate_necklaces(k, 3) {
                assert!(is_necklace(nk.letters()));
            }
        }
        for b in enumerate_banners(4, 3, BannerFilter::default()) {
            assert!(Banner::new(b.letters().to_vec()).is_ok());
        }
    }

    #[test]
    fn identities_at_small_sizes() {
        let l2 = Partition::of(2, &[2]).unwrap();
        assert!(verify_thm_2_2(&l2, 1, 2).pass());
        assert!(verify_thm_2_2_upto(4, 3).pass());
        assert!(verify_prop_2_5_upto(4, 3).pass());
        assert!(verify_cor_2_4(2, 1, 2).pass());
        assert!(verify_cor_2_4_upto(4, None).pass());
        assert!(verify_thm_2_6_upto(4, None).pass());
    }
}
