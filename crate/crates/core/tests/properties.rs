mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use symfunc::hall_littlewood::{
    expand_in_hl_basis, hl_to_x, mul_hl, pieri_hl, straighten_hl, StraighteningCache, Strategy as Rewrite,
};
use symfunc::oracle::{pairs_up_to, uc_pairs_up_to};
use symfunc::partition::partitions_up_to;
use symfunc::schur::{mul_schur, pieri_schur, straighten_schur, straighten_schur_by_swaps};
use symfunc::universal::mul_uc;
use symfunc::{HLSum, Partition};

use common::*;

#[test]
fn schur_two_row_relation() {
    for i in -2..=6 {
        for j in -2..=6 {
            assert!(schur_two_row_holds(i, j), "({i},{j})");
        }
    }
}

#[test]
fn deformed_fermionic_relation() {
    for n in -2..=6 {
        for m in -2..=6 {
            assert!(deformed_fermionic_holds(n, m), "({n},{m})");
        }
    }
}

#[test]
fn series_order_does_not_matter() {
    let mut rng = seeded(7);
    for i in 0..1000 {
        let (same, within) = ordering_trial(&mut rng);
        assert!(same, "instance {i}");
        assert!(within, "instance {i}");
    }
}

#[test]
fn negative_tail_sum_means_zero() {
    let (checked, bad) = pruning_counterexamples(3, -4, 6);
    assert!(checked > 0);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn leftmost_and_rightmost_rewriting_agree() {
    let mut left = StraighteningCache::with_strategy(Rewrite::LeftmostAscent);
    let mut right = StraighteningCache::with_strategy(Rewrite::RightmostAscent);
    for v in all_vectors(3, -2, 5) {
        assert_eq!(left.straighten(&iv(&v)).unwrap(), right.straighten(&iv(&v)).unwrap(), "{v:?}");
    }
}

#[test]
fn hl_at_t_zero_is_schur_straightening() {
    for v in all_vectors(3, -3, 6) {
        let hl = straighten_hl(&iv(&v)).unwrap().eval_at(0);
        let schur: std::collections::BTreeMap<Partition, BigInt> =
            straighten_schur(&iv(&v)).map(|(s, la)| (la, BigInt::from(s))).into_iter().collect();
        assert_eq!(hl, schur, "{v:?}");
    }
}

#[test]
fn products_commute() {
    for (mu, nu) in pairs_up_to(6, 6) {
        assert_eq!(mul_schur(&mu, &nu).unwrap(), mul_schur(&nu, &mu).unwrap(), "{mu} {nu}");
        assert_eq!(mul_hl(&mu, &nu).unwrap(), mul_hl(&nu, &mu).unwrap(), "{mu} {nu}");
    }
    for (a, b) in uc_pairs_up_to(4) {
        assert_eq!(mul_uc(&a, &b).unwrap(), mul_uc(&b, &a).unwrap(), "{a} {b}");
    }
}

#[test]
fn one_row_products_are_pieri() {
    for mu in partitions_up_to(5, 5) {
        for r in 1..=3 {
            let row = Partition::new(&[r as i64]).unwrap();
            assert_eq!(mul_schur(&mu, &row).unwrap(), pieri_schur(&mu, r).unwrap(), "{mu} {r}");
            assert_eq!(mul_hl(&mu, &row).unwrap(), pieri_hl(&mu, r).unwrap(), "{mu} {r}");
        }
    }
}

#[test]
fn basis_elements_expand_to_themselves() {
    for la in partitions_up_to(5, 5) {
        let x = hl_to_x(&la, la.weight()).unwrap();
        assert_eq!(expand_in_hl_basis(&x, la.weight()).unwrap(), HLSum::singleton(la.clone()), "{la}");
    }
}

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_weight, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap()
    })
}

proptest! {
    #[test]
    fn straightening_routes_agree(v in prop::collection::vec(-4i64..8, 0..6)) {
        prop_assert_eq!(straighten_schur(&iv(&v)), straighten_schur_by_swaps(&iv(&v)));
    }

    #[test]
    fn schur_products_are_positive_and_graded(mu in partition_strategy(3), nu in partition_strategy(3)) {
        let w = mu.weight() + nu.weight();
        for (la, c) in mul_schur(&mu, &nu).unwrap().terms() {
            prop_assert_eq!(la.weight(), w);
            prop_assert!(*c > BigInt::from(0));
            prop_assert!(la.contains(&mu) && la.contains(&nu));
        }
    }

    #[test]
    fn hl_products_are_graded_and_dominated(mu in partition_strategy(3), nu in partition_strategy(3)) {
        let w = mu.weight() + nu.weight();
        let union = mu.union(&nu);
        let q = mul_hl(&mu, &nu).unwrap();
        prop_assert_eq!(q.coeff(&union), symfunc::TPoly::one());
        for (la, _) in q.terms() {
            prop_assert_eq!(la.weight(), w);
            prop_assert!(la.len() <= union.len());
        }
    }
}
