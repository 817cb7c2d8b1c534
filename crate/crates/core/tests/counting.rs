use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use pertinent::dag::{count_dags_by_edges_with, dag_census, is_acyclic, matrix_to_digraph};
use pertinent::enumeration::{
    count_pertinent, count_pertinent_by_permanent, count_pertinent_with, is_pertinent,
    verify_extremes, zero_line_witness,
};
use pertinent::genfunc::h_table_gf;
use pertinent::{Family, Parallelism, TypeSpec};

fn u64s(c: &[BigUint]) -> Vec<u64> {
    c.iter().map(|x| x.to_u64().unwrap()).collect()
}

/// Cycle test by depth-first search with colors, independent of the
/// library's peeling.
fn has_cycle(n: usize, adj: &[Vec<bool>]) -> bool {
    fn visit(v: usize, adj: &[Vec<bool>], color: &mut [u8]) -> bool {
        color[v] = 1;
        for w in 0..adj.len() {
            if adj[v][w] && (color[w] == 1 || (color[w] == 0 && visit(w, adj, color))) {
                return true;
            }
        }
        color[v] = 2;
        false
    }
    let mut color = vec![0u8; n];
    (0..n).any(|v| color[v] == 0 && visit(v, adj, &mut color))
}

/// Edge histogram of labeled DAGs by brute force over every loop-free
/// adjacency.
fn brute_force_dag_histogram(n: usize) -> Vec<u64> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut hist = vec![0u64; cells.len() + 1];
    for mask in 0u64..(1 << cells.len()) {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in cells.iter().enumerate() {
            adj[i][j] = mask >> k & 1 == 1;
        }
        if !has_cycle(n, &adj) {
            hist[mask.count_ones() as usize] += 1;
        }
    }
    hist
}

/// Labeled DAG totals by the inclusion-exclusion recurrence over the set of
/// sources: `a_n = sum_k (-1)^(k+1) C(n,k) 2^(k(n-k)) a_(n-k)`.
fn dag_totals_by_recurrence(max: usize) -> Vec<i128> {
    let mut a = vec![1i128];
    for n in 1..=max {
        let mut s = 0i128;
        let mut c = 1i128;
        for k in 1..=n {
            c = c * (n - k + 1) as i128 / k as i128;
            let term = c * (1i128 << (k * (n - k))) * a[n - k];
            s += if k % 2 == 1 { term } else { -term };
        }
        a.push(s);
    }
    a
}

#[test]
fn census_matches_brute_force_histogram() {
    for n in 1..=4 {
        let mut census = dag_census(n, Parallelism::default()).unwrap();
        let brute = brute_force_dag_histogram(n);
        census.resize(brute.len(), 0);
        assert_eq!(census, brute, "n = {n}");
    }
}

#[test]
fn census_totals_match_recurrence() {
    let rec = dag_totals_by_recurrence(6);
    for (n, &expected) in rec.iter().enumerate().skip(1) {
        let total: u64 = dag_census(n, Parallelism::default()).unwrap().iter().sum();
        assert_eq!(i128::from(total), expected, "n = {n}");
    }
    assert_eq!(rec[6], 3_781_503);
}

#[test]
fn census_has_no_mass_beyond_half_the_cells() {
    for n in 1..=5 {
        let hist = dag_census(n, Parallelism::default()).unwrap();
        let i_max = (n * n - n) / 2;
        assert!(hist[i_max] > 0);
        assert!(hist[i_max + 1..].iter().all(|&c| c == 0));
    }
}

#[test]
fn three_routes_agree_up_to_5() {
    for n in 1..=5 {
        let spec = TypeSpec::new(Family::C, n).unwrap();
        let e = count_pertinent(&spec).unwrap();
        let d = count_dags_by_edges_with(n, Parallelism::default()).unwrap();
        let g = h_table_gf(n).unwrap();
        assert!(e.same_counts(&d) && d.same_counts(&g), "n = {n}");
    }
}

#[test]
fn permanent_predicate_route_agrees_up_to_4() {
    for family in Family::ALL {
        for n in 1..=4 {
            let spec = TypeSpec::new(family, n).unwrap();
            let fast = count_pertinent(&spec).unwrap();
            let slow = count_pertinent_by_permanent(&spec, Parallelism::default()).unwrap();
            assert!(fast.same_counts(&slow), "{spec}");
        }
    }
}

#[test]
fn permanent_one_iff_acyclic_up_to_4() {
    for n in 1..=4 {
        let spec = TypeSpec::new(Family::C, n).unwrap();
        let mut images = HashSet::new();
        for a in 0..(1u64 << spec.m()) {
            let s = spec.assignment_to_matrix(a);
            let d = matrix_to_digraph(&s).unwrap();
            assert_eq!(s.permanent_expansion().unwrap().is_one(), is_acyclic(&d), "{s}");
            assert!(images.insert(d), "two supports share a digraph");
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let spec = TypeSpec::new(Family::A, 4).unwrap();
    let reference = count_pertinent_with(&spec, Parallelism::Sequential).unwrap();
    for workers in [1, 2, 3, 8] {
        for split_bits in [None, Some(0), Some(1), Some(5), Some(16)] {
            let par = Parallelism::Parallel { workers: Some(workers), split_bits };
            assert_eq!(count_pertinent_with(&spec, par).unwrap(), reference);
        }
    }
    let census = dag_census(5, Parallelism::Sequential).unwrap();
    assert_eq!(dag_census(5, Parallelism::workers(4)).unwrap(), census);
}

#[test]
fn extremes_hold_and_zero_line_witnesses_are_pertinent() {
    for family in Family::ALL {
        for n in 1..=4 {
            let spec = TypeSpec::new(family, n).unwrap();
            let r = verify_extremes(&spec).unwrap();
            assert!(r.holds(), "{spec}: {:?}", r.j_min_observed);
            if let Some(w) = zero_line_witness(&spec) {
                assert!(is_pertinent(&spec, &w).unwrap());
            }
        }
    }
}

#[test]
fn family_b_top_coefficient_is_two() {
    for n in 2..=4 {
        let spec = TypeSpec::new(Family::B, n).unwrap();
        let t = count_pertinent(&spec).unwrap();
        assert_eq!(u64s(t.coeffs()).last(), Some(&2));
    }
}
