use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use pertinent::{BinaryMatrix, Family, RationalMatrix, TypeSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn from_bits(n: usize, bits: u64) -> BinaryMatrix {
    let mask = (1u64 << n) - 1;
    let rows = (0..n).map(|i| ((bits >> (i * n)) & mask) as u32).collect();
    BinaryMatrix::new(n, rows).unwrap()
}

fn random_binary(rng: &mut ChaCha8Rng, n: usize, density: f64) -> BinaryMatrix {
    let rows = (0..n)
        .map(|_| (0..n).fold(0u32, |r, j| if rng.gen_bool(density) { r | 1 << j } else { r }))
        .collect();
    BinaryMatrix::new(n, rows).unwrap()
}

/// Permanent straight from the definition: every permutation by recursion
/// over unused columns.
fn permanent_by_definition(m: &BinaryMatrix) -> BigUint {
    fn go(m: &BinaryMatrix, row: usize, used: u32) -> u64 {
        if row == m.n() {
            return 1;
        }
        (0..m.n())
            .filter(|&j| used >> j & 1 == 0 && m.rows()[row] >> j & 1 == 1)
            .map(|j| go(m, row + 1, used | 1 << j))
            .sum()
    }
    BigUint::from(go(m, 0, 0))
}

#[test]
fn ryser_matches_expansion_exhaustively_up_to_3() {
    for n in 1..=3 {
        for bits in 0..(1u64 << (n * n)) {
            let m = from_bits(n, bits);
            let e = m.permanent_expansion().unwrap();
            assert_eq!(m.permanent_ryser().unwrap(), e, "{m}");
            assert_eq!(permanent_by_definition(&m), e, "{m}");
        }
    }
}

#[test]
fn ryser_matches_expansion_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 4..=7 {
        let cases = if n == 7 { 2_500 } else { 10_000 };
        for k in 0..cases {
            let density = [0.2, 0.5, 0.8, 0.95][k % 4];
            let m = random_binary(&mut rng, n, density);
            assert_eq!(m.permanent_ryser().unwrap(), m.permanent_expansion().unwrap(), "{m}");
        }
    }
}

#[test]
fn ryser_on_all_ones_is_factorial() {
    let mut f = BigUint::from(1u32);
    for n in 1..=12usize {
        f *= n;
        assert_eq!(BinaryMatrix::ones(n).unwrap().permanent_ryser().unwrap(), f);
    }
}

#[test]
fn zero_permanent_iff_no_full_diagonal_exhaustive() {
    for n in 1..=4 {
        for bits in 0..(1u64 << (n * n)) {
            let m = from_bits(n, bits);
            let zero = m.permanent_expansion().unwrap().is_zero();
            assert_eq!(zero, !m.has_perfect_matching(), "{m}");
            assert_eq!(zero, permanent_by_definition(&m).is_zero(), "{m}");
        }
    }
}

#[test]
fn random_6x6_matching_agrees_with_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let m = random_binary(&mut rng, 6, 0.3);
        assert_eq!(m.permanent_ryser().unwrap().is_zero(), !m.has_perfect_matching(), "{m}");
    }
}

fn random_rational(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let entries = (0..n * n)
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(-9i64..=9)),
                BigInt::from(rng.gen_range(1i64..=4)),
            )
        })
        .collect();
    RationalMatrix::new(n, entries).unwrap()
}

#[test]
fn laplace_expansion_along_every_row() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 2..=5 {
        for _ in 0..40 {
            let m = random_rational(&mut rng, n);
            let det = m.determinant();
            assert_eq!(det, m.determinant_expansion().unwrap());
            for i in 1..=n {
                let sum = (1..=n).fold(BigRational::zero(), |acc, j| {
                    acc + m.get(i, j).unwrap() * m.cofactor(i, j).unwrap()
                });
                assert_eq!(sum, det, "row {i} of {m}");
            }
        }
    }
}

#[test]
fn determinant_of_singular_examples() {
    for s in ["1 1 0; 1 1 0; 0 1 1", "1 0 1/2; 0 1 0; 2 1 1", "1 0 1; 1 1 0; 2 1 1"] {
        let m: RationalMatrix = s.parse().unwrap();
        assert!(m.determinant().is_zero(), "{s}");
        assert!(m.determinant_expansion().unwrap().is_zero(), "{s}");
    }
}

proptest! {
    #[test]
    fn type_spec_arithmetic(n in 1usize..=8, f in 0usize..3) {
        let spec = TypeSpec::new(Family::ALL[f], n).unwrap();
        prop_assert_eq!(spec.i_max() + spec.j_min(), spec.m());
        prop_assert_eq!(spec.variable_positions().len(), spec.m());
    }

    #[test]
    fn bareiss_matches_expansion(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_rational(&mut rng, n);
        prop_assert_eq!(m.determinant(), m.determinant_expansion().unwrap());
    }

    #[test]
    fn permanent_invariant_under_transpose(bits in any::<u64>(), n in 1usize..=5) {
        let m = from_bits(n, bits & ((1u64 << (n * n)) - 1));
        prop_assert_eq!(m.permanent_ryser().unwrap(), m.transpose().permanent_ryser().unwrap());
    }
}
