use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use pertinent::discrete::{
    bifurcation_check, check_inclusion, compute_u, omega, omega_instances, omega_tilde,
    omega_tilde_with, omega_with, prop6_witnesses, Members, ValueSet,
};
use pertinent::enumeration::zero_line_witness;
use pertinent::{Family, Parallelism, RationalMatrix, TypeSpec};
use proptest::prelude::*;

fn vs(s: &str) -> ValueSet {
    ValueSet::parse(s).unwrap()
}

fn q(s: &str) -> BigRational {
    pertinent::matrix::parse_rational(s).unwrap()
}

/// Every assignment over `values`, built entry by entry, with its
/// determinant by cofactor expansion.
fn brute_force(spec: &TypeSpec, values: &[BigRational]) -> Vec<(RationalMatrix, BigRational)> {
    let n = spec.n();
    let var = spec.variable_positions();
    let mut out = Vec::new();
    let total = values.len().pow(var.len() as u32);
    for idx in 0..total {
        let mut e = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                if !var.contains(&(i, j)) {
                    e[i * n + j] = BigRational::from_integer(1.into());
                }
            }
        }
        let mut rest = idx;
        for &(i, j) in &var {
            e[i * n + j] = values[rest % values.len()].clone();
            rest /= values.len();
        }
        let m = RationalMatrix::new(n, e).unwrap();
        let d = m.determinant_expansion().unwrap();
        out.push((m, d));
    }
    out
}

fn least(all: &[(RationalMatrix, BigRational)]) -> BigRational {
    let modulus = all.iter().map(|(_, d)| d.abs()).min().unwrap();
    if all.iter().any(|(_, d)| *d == modulus) {
        modulus
    } else {
        -modulus
    }
}

#[test]
fn worked_instances_reproduce() {
    for r in omega_instances().unwrap() {
        assert!(r.pass, "{r}");
    }
}

#[test]
fn witnesses_reproduce() {
    for r in prop6_witnesses().unwrap() {
        assert!(r.pass, "{r}");
    }
}

#[test]
fn bifurcation_is_an_identity() {
    assert!(bifurcation_check().unwrap().holds());
}

#[test]
fn a2_continuous_tilde_has_nine_members_with_zero_permanent() {
    let spec = TypeSpec::new(Family::A, 2).unwrap();
    let o = omega_tilde(&spec, &vs("[0,2]")).unwrap();
    assert_eq!(o.members.len(), 9);
    let Members::Support(ms) = &o.members else { panic!() };
    assert!(ms.iter().all(|m| m.permanent_expansion().unwrap().is_zero()));
    let d = omega_tilde(&spec, &vs("0,1/2,2")).unwrap();
    let extra: Vec<_> = d.supports().difference(&o.supports()).cloned().collect();
    assert_eq!(extra.len(), 1);
    assert_eq!(extra[0].to_string(), "1 1; 1 1");
}

#[test]
fn attained_and_minimal_against_brute_force() {
    for (family, n, set) in [
        (Family::C, 2, "0,1/2,2"),
        (Family::C, 2, "0,1/2"),
        (Family::A, 2, "0,1/2,2"),
        (Family::B, 2, "0,-1,3"),
        (Family::C, 3, "0,1,2"),
        (Family::B, 3, "0,1/2,2"),
    ] {
        let spec = TypeSpec::new(family, n).unwrap();
        let x = vs(set);
        let all = brute_force(&spec, &x.discrete_values().unwrap());
        let u = least(&all);
        let o = omega(&spec, &x).unwrap();
        assert_eq!(o.u, u, "{spec} {set}");
        let Members::Rational(ms) = &o.members else { panic!() };
        assert!(!ms.is_empty());
        assert!(ms.iter().all(|m| m.determinant() == u));
        let expected: BTreeSet<String> =
            all.iter().filter(|(_, d)| *d == u).map(|(m, _)| m.to_string()).collect();
        let got: BTreeSet<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(got, expected, "{spec} {set}");
        assert_eq!(o.partition_sizes().iter().sum::<usize>(), ms.len());
    }
}

#[test]
fn zero_line_for_a_and_b() {
    for family in [Family::A, Family::B] {
        for n in 2..=3 {
            let spec = TypeSpec::new(family, n).unwrap();
            for set in ["0,1/2", "0,1,2", "0,-1,1/3"] {
                assert!(compute_u(&spec, &vs(set)).unwrap().is_zero());
                assert!(omega_tilde(&spec, &vs(set)).unwrap().u.is_zero());
            }
            let w = zero_line_witness(&spec).unwrap();
            assert!(w.to_rational().determinant().is_zero());
            spec.check_respects(&w).unwrap();
        }
    }
}

#[test]
fn partition_index_matches_member_nonzeros() {
    let spec = TypeSpec::new(Family::C, 2).unwrap();
    for set in ["[0,2]", "0,1/2,2"] {
        for o in [omega(&spec, &vs(set)).unwrap(), omega_tilde(&spec, &vs(set)).unwrap()] {
            let sizes = o.partition_sizes();
            let counts = o.nonzero_counts();
            for (i, &size) in sizes.iter().enumerate() {
                assert_eq!(size, counts.iter().filter(|&&c| c == i).count());
            }
        }
    }
}

#[test]
fn scans_are_deterministic_across_workers() {
    let spec = TypeSpec::new(Family::A, 3).unwrap();
    let x = vs("0,1/2,2");
    let reference = omega_with(&spec, &x, Parallelism::Sequential).unwrap();
    for w in [1, 2, 5] {
        assert_eq!(omega_with(&spec, &x, Parallelism::workers(w)).unwrap(), reference);
        assert_eq!(
            omega_tilde_with(&spec, &x, Parallelism::workers(w)).unwrap(),
            omega_tilde_with(&spec, &x, Parallelism::Sequential).unwrap()
        );
    }
}

#[test]
fn inclusion_holds_for_a_and_b() {
    for family in [Family::A, Family::B] {
        for n in 2..=3 {
            for (d, c) in [("0,1/2,2", "[0,2]"), ("0,1", "[0,1]"), ("0,-1,1", "[-1,1]")] {
                let r = check_inclusion(family, n, &vs(d), &vs(c)).unwrap();
                assert!(r.includes, "{family}_{n} {d} {c}");
            }
        }
    }
}

#[test]
fn weighted_probability() {
    // p(1/2) = r/4, p(2) = 3r/4: both members of Omega(C_2) contribute
    // (r/4)(3r/4).
    let spec = TypeSpec::new(Family::C, 2).unwrap();
    let o = omega(&spec, &vs("0,1/2@1/4,2@3/4")).unwrap();
    assert_eq!(o.probability().render("r"), "3/8*r^2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn c2_u_matches_brute_force(vals in proptest::collection::btree_set((-6i64..=6, 1i64..=4), 1..4)) {
        let mut values = vec![BigRational::zero()];
        for (a, b) in vals {
            let v = BigRational::new(BigInt::from(a), BigInt::from(b));
            if !values.contains(&v) {
                values.push(v);
            }
        }
        prop_assume!(values.len() > 1);
        let x = ValueSet::discrete(values.clone()).unwrap();
        for family in Family::ALL {
            let spec = TypeSpec::new(family, 2).unwrap();
            let all = brute_force(&spec, &values);
            prop_assert_eq!(compute_u(&spec, &x).unwrap(), least(&all));
        }
    }
}

#[test]
fn negative_least_value_is_kept() {
    let spec = TypeSpec::new(Family::C, 2).unwrap();
    assert_eq!(compute_u(&spec, &vs("0,11/10")).unwrap(), q("-21/100"));
}
