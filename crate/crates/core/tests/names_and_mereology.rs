//! Names and quasi-Boolean models against a plain bitmask lattice.
//!
//! Object `x` of a base-`n` model is the nonempty subset `mask(x)` of the
//! atoms; the oracle computes order, supremum, join, meet and complement on
//! those masks directly.

use mereotopo::lo::{LOModel, Name, ObjectId};
use mereotopo::mereo::{MeetResult, QBAModel};
use proptest::prelude::*;

fn masks(m: &QBAModel, a: &Name) -> Vec<u32> {
    a.objects().map(|x| m.mask(x)).collect()
}

fn name_of_masks(m: &QBAModel, ms: &[u32]) -> Name {
    m.lo().name(ms.iter().map(|&k| m.object(k))).unwrap()
}

fn full(m: &QBAModel) -> u32 {
    (1 << m.base()) - 1
}

#[test]
fn membership_matches_eta_on_two_objects() {
    let lo = LOModel::new(2).unwrap();
    for a in lo.all_names() {
        for x in lo.objects() {
            let iota = lo.iota(x).unwrap();
            assert_eq!(a.contains(x), lo.eta(&iota, &a).unwrap(), "{x:?} in {a:?}");
        }
    }
}

#[test]
fn in_to_eta_truth_table() {
    // eta A b holds exactly when A names one object that b also names
    let lo = LOModel::new(3).unwrap();
    for a in lo.all_names() {
        for b in lo.all_names() {
            let oracle = a.len() == 1 && a.bits() & !b.bits() == 0;
            assert_eq!(lo.eta(&a, &b).unwrap(), oracle);
        }
    }
}

#[test]
fn part_of_twelve() {
    let m = QBAModel::new(2).unwrap();
    let mut got = masks(&m, &m.pt(&m.ind(3)).unwrap());
    got.sort();
    assert_eq!(got, vec![1, 2, 3]);
}

#[test]
fn klass_and_coll_of_one_and_two() {
    let m = QBAModel::new(2).unwrap();
    let ab = name_of_masks(&m, &[1, 2]);
    assert_eq!(m.klass(&ab).unwrap(), m.ind(3));
    assert!(m.coll(&m.ind(3), &ab));
}

#[test]
fn small_examples() {
    let m = QBAModel::new(2).unwrap();
    assert_eq!(m.b_sum(&m.ind(1), &m.ind(2)).unwrap(), m.ind(3));
    assert_eq!(m.compl(&m.ind(1)).unwrap(), MeetResult::Defined(m.ind(2)));
    assert_eq!(m.closure_m(&m.ind(1)).unwrap(), m.ind(1));
    let bd = m.boundary_m(&m.ind(1)).unwrap();
    assert!(bd.is_empty(), "boundary of a non-top individual is empty");

    let m3 = QBAModel::new(3).unwrap();
    assert!(m3.boundary_m(&m3.ind(3)).unwrap().is_empty());
}

#[test]
fn lattice_operations_match_masks_exhaustively() {
    for base in 2..=4 {
        let m = QBAModel::new(base).unwrap();
        let top = full(&m);
        for x in 1..=top {
            let q = m.ind(x);
            for y in 1..=top {
                let r = m.ind(y);
                assert_eq!(m.le(m.object(x), m.object(y)), x & !y == 0);
                assert_eq!(m.b_sum(&q, &r).unwrap(), m.ind(x | y));
                let meet = m.b_prod(&q, &r).unwrap();
                if x & y == 0 {
                    assert!(meet.is_undefined());
                    assert!(m.ext(&q, &r).unwrap());
                } else {
                    assert_eq!(meet, MeetResult::Defined(m.ind(x & y)));
                    assert!(!m.ext(&q, &r).unwrap());
                }
            }
            if x != top {
                assert_eq!(m.compl(&q).unwrap(), MeetResult::Defined(m.ind(top ^ x)));
                assert_eq!(m.b_sum(&q, &m.ind(top ^ x)).unwrap(), m.universe());
                assert_eq!(m.closure_m(&q).unwrap(), q);
                assert!(m.boundary_m(&q).unwrap().is_empty());
            }
            let int = m.interior_m(&q).unwrap();
            assert_eq!(m.interior_m(&int).unwrap(), int);
        }
    }
}

#[test]
fn boundary_empty_in_all_six_base_three_cases() {
    let m = QBAModel::new(3).unwrap();
    let n = (1..7).filter(|&x| m.boundary_m(&m.ind(x)).unwrap().is_empty()).count();
    assert_eq!(n, 6);
}

#[test]
fn klass_is_bitwise_or_for_every_base_three_name() {
    let m = QBAModel::new(3).unwrap();
    for a in m.lo().all_names() {
        let got = m.klass(&a);
        if a.is_empty() {
            assert!(got.is_err());
        } else {
            let sup = masks(&m, &a).into_iter().fold(0, |acc, k| acc | k);
            assert_eq!(got.unwrap(), m.ind(sup));
        }
    }
}

proptest! {
    #[test]
    fn klass_is_bitwise_or_base_four(bits in 1u64..(1 << 15)) {
        let m = QBAModel::new(4).unwrap();
        let a = m.lo().name_from_bits(bits);
        let sup = masks(&m, &a).into_iter().fold(0, |acc, k| acc | k);
        prop_assert_eq!(m.klass(&a).unwrap(), m.ind(sup));
    }

    #[test]
    fn name_algebra_is_boolean(size in 1usize..=10, a in any::<u64>(), b in any::<u64>()) {
        let lo = LOModel::new(size).unwrap();
        let (a, b) = (lo.name_from_bits(a), lo.name_from_bits(b));
        let neg = |n: &Name| lo.name_neg(n).unwrap();
        prop_assert_eq!(neg(&neg(&a)), a.clone());
        prop_assert_eq!(neg(&lo.name_conj(&a, &b).unwrap()), lo.name_disj(&neg(&a), &neg(&b)).unwrap());
        prop_assert_eq!(lo.incl(&a, &b).unwrap(), a.bits() & !b.bits() == 0);
    }

    #[test]
    fn eta_is_transitive(size in 1usize..=6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let lo = LOModel::new(size).unwrap();
        let (a, b, c) = (lo.name_from_bits(a), lo.name_from_bits(b), lo.name_from_bits(c));
        if lo.eta(&a, &b).unwrap() && lo.eta(&b, &c).unwrap() {
            prop_assert!(lo.eta(&a, &c).unwrap());
        }
    }

    #[test]
    fn iota_is_individual(size in 1usize..=64, i in 0usize..64) {
        let lo = LOModel::new(size).unwrap();
        let x = ObjectId(i % size);
        let n = lo.iota(x).unwrap();
        prop_assert!(lo.is_individual(&n));
        prop_assert_eq!(n.single(), Some(x));
    }
}
