use proptest::prelude::*;
use qeuler_core::permstat::{self, PosSet};
use qeuler_core::posetlab::{betti_numbers, Poset};
use qeuler_core::qcalc::{q_binomial, q_multinomial};
use qeuler_core::wordcomb::{self, AlphabetOrder, BannerFilter, BarredLetter};
use qeuler_core::{Poly, Var};

fn perm(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

fn word(max_len: usize, m: u32) -> impl Strategy<Value = Vec<BarredLetter>> {
    prop::collection::vec((1..=m, any::<bool>()).prop_map(|(value, barred)| BarredLetter { value, barred }), 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn exd_sums_to_maj_minus_exc(w in perm(12)) {
        let exd = permstat::exd_set(&w);
        prop_assert!(exd.max().is_none_or(|k| k < w.len()));
        prop_assert_eq!(exd.sum() + permstat::exc(&w), permstat::maj(&w));
    }

    #[test]
    fn aid_is_ai_plus_des(w in perm(10)) {
        prop_assert_eq!(permstat::aid(&w), permstat::ai(&w) + permstat::des(&w));
        prop_assert!(permstat::ai(&w) <= permstat::inv(&w));
    }

    #[test]
    fn lyndon_factors_reassemble(w in word(9, 3)) {
        let order = AlphabetOrder::Interleaved;
        let fs = wordcomb::lyndon_factorize(&w).unwrap();
        let joined: Vec<BarredLetter> = fs.iter().flat_map(|f| f.iter().copied()).collect();
        prop_assert_eq!(&joined, &w);
        prop_assert!(fs.iter().all(|f| wordcomb::is_lyndon(f, order)));
        prop_assert!(fs.windows(2).all(|p| order.cmp_words(p[0], p[1]).is_ge()));
    }

    #[test]
    fn multinomial_symmetric(mut parts in prop::collection::vec(0usize..4, 1..5), shift in any::<usize>()) {
        let n: usize = parts.iter().sum();
        let a = q_multinomial(n, &parts).unwrap();
        let len = parts.len();
        parts.rotate_left(shift % len);
        prop_assert_eq!(&a, &q_multinomial(n, &parts).unwrap());
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let expected = fact(n) / parts.iter().map(|&k| fact(k)).product::<u64>();
        prop_assert_eq!(a.eval_all(1), expected.into());
    }

    /// Random subfamilies of subsets of [4]: Betti numbers agree with face counts
    /// through the Euler characteristic.
    #[test]
    fn euler_characteristic_matches(keep in prop::collection::vec(any::<bool>(), 16)) {
        let b4 = Poset::boolean(4);
        let kept: Vec<usize> = (0..16).filter(|&s| keep[s]).collect();
        let labels = kept.iter().map(|&s| b4.label(s).to_string()).collect();
        let ranks = kept.iter().map(|&s| b4.rank(s)).collect();
        let p = Poset::new(labels, ranks, |a, b| b4.lt(kept[a], kept[b])).unwrap();
        let c = p.order_complex();
        prop_assert_eq!(c.betti_numbers().euler_characteristic(), c.reduced_euler_characteristic());
    }
}

#[test]
fn banners_map_into_ornaments() {
    for n in 1..=5 {
        for b in wordcomb::enumerate_banners(n, 3, BannerFilter::default()) {
            let o = wordcomb::banner_to_ornament(&b).unwrap();
            assert_eq!(o.weight(), b.weight());
            assert_eq!(o.bars(), b.bars());
            assert_eq!(o.cycle_type(), b.lyndon_type());
        }
    }
}

#[test]
fn q_pascal_second_form() {
    let q = Poly::var(Var::Q);
    for n in 1..=12 {
        for k in 1..n {
            let rhs = q_binomial(n - 1, k - 1) + q.pow(k as u32) * q_binomial(n - 1, k);
            assert_eq!(q_binomial(n, k), rhs, "n={n} k={k}");
        }
    }
}

#[test]
fn proper_part_of_boolean_lattice_is_a_sphere() {
    for n in 2..=5usize {
        let b = Poset::boolean(n);
        let top = (1usize << n) - 1;
        let proper = b.delete_minimum().unwrap().open_ideal(top - 1).unwrap();
        let expected: Vec<usize> = (0..n - 1).map(|i| usize::from(i == n - 2)).collect();
        assert_eq!(betti_numbers(&proper).from_zero(), expected, "n={n}");
    }
    assert_eq!(PosSet::from_positions(&[1, 3]).to_string(), "{1,3}");
}
