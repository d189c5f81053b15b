use cameral_core::intlin::{same_lattice, smith_diagonal};
use cameral_core::oracle::{enumerate_weyl, DEFAULT_CAP};
use cameral_core::rootdatum::{all_types, DynkinType, Family, LatticeForm, RootDatum};
use cameral_core::Int;
use num_traits::One;
use proptest::prelude::*;

fn weyl_order(d: DynkinType) -> u64 {
    let r = d.rank as u64;
    let fact = |n: u64| (1..=n).product::<u64>();
    match d.family {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1u64 << r) * fact(r),
        Family::D => (1u64 << (r - 1)) * fact(r),
        Family::E => match r {
            6 => 51840,
            7 => 2903040,
            _ => 696729600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

#[test]
fn root_counts_and_degrees() {
    for d in all_types(8) {
        let rd = RootDatum::build(d).unwrap();
        assert_eq!(rd.num_roots(), d.root_count(), "{d}");
        let exps: u64 = rd.degrees.iter().map(|&x| x as u64 - 1).sum();
        assert_eq!(exps as usize, rd.num_positive(), "{d}");
        let prod: u64 = rd.degrees.iter().map(|&x| x as u64).product();
        assert_eq!(prod, weyl_order(d), "{d}");
    }
}

#[test]
fn weyl_enumeration_matches_degree_product() {
    for s in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"] {
        let rd = RootDatum::build(s.parse().unwrap()).unwrap();
        let prod: usize = rd.degrees.iter().map(|&x| x as usize).product();
        assert_eq!(enumerate_weyl(&rd, DEFAULT_CAP).unwrap().order(), prod, "{s}");
    }
}

#[test]
fn known_degrees() {
    let deg = |s: &str| RootDatum::build(s.parse().unwrap()).unwrap().degrees;
    assert_eq!(deg("A3"), vec![2, 3, 4]);
    assert_eq!(deg("G2"), vec![2, 6]);
    assert_eq!(deg("F4"), vec![2, 6, 8, 12]);
    assert_eq!(deg("E6"), vec![2, 5, 6, 8, 9, 12]);
    assert_eq!(deg("D4"), vec![2, 4, 4, 6]);
}

#[test]
fn centers() {
    let center = |s: &str| RootDatum::build(s.parse().unwrap()).unwrap().center().to_string();
    assert_eq!(center("A1"), "Z/2");
    assert_eq!(center("A3"), "Z/4");
    assert_eq!(center("D4"), "Z/2 + Z/2");
    assert_eq!(center("E6"), "Z/3");
    assert_eq!(center("E8"), "0");
    assert_eq!(center("G2"), "0");
}

#[test]
fn adjoint_epsilon_is_one() {
    for d in all_types(8) {
        let rd = RootDatum::build(d).unwrap();
        for k in 0..rd.num_roots() {
            assert!(rd.epsilon(k, LatticeForm::Adjoint).unwrap().is_one(), "{d} root {k}");
        }
    }
}

#[test]
fn sc_epsilon_of_a1_is_two() {
    let rd = RootDatum::build("A1".parse().unwrap()).unwrap();
    assert_eq!(rd.epsilon(0, LatticeForm::SimplyConnected).unwrap(), Int::from(2));
}

#[test]
fn reflections_are_involutions_on_roots() {
    for d in all_types(6) {
        let rd = RootDatum::build(d).unwrap();
        for k in 0..rd.num_positive() {
            let s = rd.reflection(k);
            assert!(s.mul(&s).is_identity());
            assert_eq!(rd.reflect_root(k, k), rd.negative_index(k));
            for b in 0..rd.num_roots() {
                assert_eq!(rd.reflect_root(k, rd.reflect_root(k, b)), b);
            }
        }
    }
}

#[test]
fn coroot_lattice_index_is_center_order() {
    for d in all_types(8) {
        let rd = RootDatum::build(d).unwrap();
        let idx: Int = smith_diagonal(&rd.cartan).iter().product();
        assert_eq!(idx, rd.center().torsion_order(), "{d}");
    }
}

proptest! {
    #[test]
    fn dual_is_involution(i in 0usize..40) {
        let types = all_types(8);
        let d = types[i % types.len()];
        let rd = RootDatum::build(d).unwrap();
        let dd = rd.langlands_dual().langlands_dual();
        prop_assert_eq!(dd.dynkin, d);
        prop_assert_eq!(&dd.cartan, &rd.cartan);
        prop_assert!(same_lattice(&dd.coroot_lattice, &rd.coroot_lattice));
        prop_assert_eq!(rd.langlands_dual().cartan, rd.cartan.transpose());
    }

    #[test]
    fn type_names_round_trip(i in 0usize..40) {
        let types = all_types(8);
        let d = types[i % types.len()];
        prop_assert_eq!(d.to_string().parse::<DynkinType>().unwrap(), d);
    }
}

#[test]
fn invalid_types_rejected() {
    for s in ["D2", "E5", "E9", "F3", "G3", "B1", "A0", "X2", ""] {
        assert!(s.parse::<DynkinType>().is_err(), "{s}");
    }
}
