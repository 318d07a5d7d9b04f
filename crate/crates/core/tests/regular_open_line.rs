//! Regular open subsets of the line, checked pointwise.
//!
//! Raw intervals have integer endpoints, so away from the integers the
//! regularized set and the raw union agree. Probing at `k + 1/2` turns every
//! lattice law into a truth-table check.

use mereotopo::mereo::MeetResult;
use mereotopo::regopen::{
    boundary_m1d, closure_m1d, compl1d, join1d, meet1d, part_of1d, Endpoint, RegOpen1D, RegOpenError,
};
use mereotopo::Rat;
use proptest::prelude::*;

fn ro(raw: &[(i64, i64)]) -> RegOpen1D {
    RegOpen1D::regularize(raw.iter().map(|&(a, b)| (Rat::int(a), Rat::int(b)))).unwrap()
}

fn raw_contains(raw: &[(i64, i64)], x: &Rat) -> bool {
    raw.iter().any(|&(a, b)| &Rat::int(a) < x && x < &Rat::int(b))
}

fn half_points() -> impl Iterator<Item = Rat> {
    (-2..24).map(|k| Rat::new(2 * k + 1, 2))
}

fn raw_set() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((0i64..20, 1i64..6).prop_map(|(a, w)| (a, a + w)), 1..5)
}

#[test]
fn touching_intervals_merge() {
    assert_eq!(ro(&[(0, 1), (1, 2)]), ro(&[(0, 2)]));
    assert_eq!(ro(&[(0, 1), (1, 2)]).intervals().len(), 1);
}

#[test]
fn closure_of_two_pieces_is_itself() {
    let q = ro(&[(0, 1), (2, 3)]);
    assert_eq!(closure_m1d(&q).unwrap(), q);
}

#[test]
fn boundary_is_empty() {
    assert!(matches!(boundary_m1d(&ro(&[(0, 1)])).unwrap(), MeetResult::UndefinedMeet));
}

#[test]
fn complement_of_line_and_empty() {
    assert_eq!(compl1d(&RegOpen1D::full()), Err(RegOpenError::NoComplement));
    assert_eq!(compl1d(&RegOpen1D::empty()), Err(RegOpenError::NotIndividual));
    let c = compl1d(&ro(&[(0, 1)])).unwrap();
    assert_eq!(c.intervals().first().unwrap().lo, Endpoint::NegInf);
    assert_eq!(c.intervals().last().unwrap().hi, Endpoint::PosInf);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn membership_matches_raw_union(a in raw_set()) {
        let q = RegOpen1D::regularize(a.iter().map(|&(x, y)| (Rat::int(x), Rat::int(y)))).unwrap();
        for p in half_points() {
            prop_assert_eq!(q.contains(&p), raw_contains(&a, &p));
        }
    }

    #[test]
    fn operations_are_pointwise(a in raw_set(), b in raw_set()) {
        let (p, q) = (ro(&a), ro(&b));
        let join = join1d(&p, &q);
        let meet = meet1d(&p, &q);
        let cp = compl1d(&p).unwrap();
        for x in half_points() {
            let (ina, inb) = (raw_contains(&a, &x), raw_contains(&b, &x));
            prop_assert_eq!(join.contains(&x), ina || inb);
            let in_meet = match &meet {
                MeetResult::Defined(m) => m.contains(&x),
                MeetResult::UndefinedMeet => false,
            };
            prop_assert_eq!(in_meet, ina && inb);
            prop_assert_eq!(cp.contains(&x), !ina);
        }
        prop_assert_eq!(part_of1d(&p, &q), half_points().all(|x| !raw_contains(&a, &x) || raw_contains(&b, &x)));
    }

    #[test]
    fn quasi_boolean_laws(a in raw_set(), b in raw_set()) {
        let (p, q) = (ro(&a), ro(&b));
        let cp = compl1d(&p).unwrap();
        prop_assert_eq!(compl1d(&cp).unwrap(), p.clone());
        prop_assert!(join1d(&p, &cp).is_full());
        prop_assert!(matches!(meet1d(&p, &cp), MeetResult::UndefinedMeet));
        // De Morgan, whenever the join is not the whole line
        let j = join1d(&p, &q);
        if !j.is_full() {
            let lhs = compl1d(&j).unwrap();
            let rhs = meet1d(&cp, &compl1d(&q).unwrap());
            prop_assert_eq!(MeetResult::Defined(lhs), rhs);
        }
        prop_assert_eq!(closure_m1d(&p).unwrap(), p.clone());
        prop_assert!(matches!(boundary_m1d(&p).unwrap(), MeetResult::UndefinedMeet));
    }

    #[test]
    fn regularize_is_idempotent(a in raw_set()) {
        let q = ro(&a);
        let again = RegOpen1D::regularize(q.intervals().iter().map(|iv| (iv.lo.clone(), iv.hi.clone()))).unwrap();
        prop_assert_eq!(again, q);
    }
}
