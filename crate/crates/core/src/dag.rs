//! Labeled acyclic digraphs and their edge census.
//!
//! A family-C support `S` corresponds to the digraph on `{1..n}` with
//! adjacency `S - I`. Its permanent is 1 exactly when that digraph is acyclic,
//! so counting DAGs by edge count is a second route to the family-C table.

use std::fmt;

use num_bigint::BigUint;

use crate::enumeration::{CoefficientTable, Route};
use crate::exec::{add_histograms, map_reduce};
use crate::matrix::{BinaryMatrix, Family, TypeSpec};
use crate::{Error, Parallelism, Result};

/// Largest vertex count for the exhaustive census (3^15 orientations at 6).
pub const MAX_CENSUS_DIM: usize = 6;

/// Loop-free digraph on vertices `1..=n`; `out[k]` holds the successors of
/// vertex `k + 1` as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u32>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph { n, out: vec![0; n] }
    }

    /// Builds from 1-based `(from, to)` pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 32 {
            return Err(Error::DimensionOutOfRange { n, min: 0, max: 32 });
        }
        let mut g = Digraph::empty(n);
        for &(k, l) in edges {
            if k == 0 || l == 0 || k > n || l > n {
                return Err(Error::IndexOutOfRange { i: k, j: l, n });
            }
            if k == l {
                return Err(Error::SpecViolation(format!("loop at vertex {k}")));
            }
            g.out[k - 1] |= 1 << (l - 1);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted 1-based pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for (k, &succ) in self.out.iter().enumerate() {
            for l in 0..self.n {
                if succ >> l & 1 == 1 {
                    e.push((k + 1, l + 1));
                }
            }
        }
        e
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|s| s.count_ones() as usize).sum()
    }

    pub fn has_edge(&self, k: usize, l: usize) -> bool {
        k >= 1 && l >= 1 && k <= self.n && l <= self.n && self.out[k - 1] >> (l - 1) & 1 == 1
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, {:?})", self.n, self.edges())
    }
}

/// The digraph with adjacency `M - I`. The diagonal of `M` must be all ones.
pub fn matrix_to_digraph(m: &BinaryMatrix) -> Result<Digraph> {
    let out = m
        .rows()
        .iter()
        .enumerate()
        .map(|(k, &row)| {
            if row >> k & 1 == 0 {
                Err(Error::DiagonalNotFixed(k + 1))
            } else {
                Ok(row & !(1 << k))
            }
        })
        .collect::<Result<_>>()?;
    Ok(Digraph { n: m.n(), out })
}

/// Inverse of [`matrix_to_digraph`].
pub fn digraph_to_matrix(d: &Digraph) -> Result<BinaryMatrix> {
    BinaryMatrix::new(
        d.n,
        d.out.iter().enumerate().map(|(k, &s)| s | 1 << k).collect(),
    )
}

pub fn is_acyclic(d: &Digraph) -> bool {
    is_acyclic_masks(&d.out)
}

/// Repeatedly removes sinks (no successor among the remaining vertices);
/// the graph is acyclic iff every vertex gets removed. Iterative, no
/// allocation.
#[inline]
pub(crate) fn is_acyclic_masks(out: &[u32]) -> bool {
    let n = out.len();
    let mut remaining: u32 = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
    while remaining != 0 {
        let mut sinks = 0u32;
        let mut scan = remaining;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if out[v] & remaining == 0 {
                sinks |= 1 << v;
            }
        }
        if sinks == 0 {
            return false;
        }
        remaining &= !sinks;
    }
    true
}

/// Census of labeled DAGs on `n` vertices by edge count, as a family-C
/// coefficient table. `n <= 5`; see [`dag_census`] for `n = 6`.
pub fn count_dags_by_edges(n: usize) -> Result<CoefficientTable> {
    count_dags_by_edges_with(n, Parallelism::default())
}

pub fn count_dags_by_edges_with(n: usize, par: Parallelism) -> Result<CoefficientTable> {
    let spec = TypeSpec::new(Family::C, n)?;
    let hist = dag_census(n, par)?;
    CoefficientTable::from_histogram(spec, &hist, Route::DagCensus)
}

/// Histogram over `0..=n^2-n` edges of labeled DAGs on `n` vertices.
///
/// Off-diagonal cells are grouped into transposed pairs `(k, l), (l, k)` with
/// `k < l`. The outer counter chooses the forward edges; the inner loop walks
/// only the submasks of the remaining pairs for backward edges, so no mask
/// containing a 2-cycle is ever built.
pub fn dag_census(n: usize, par: Parallelism) -> Result<Vec<u64>> {
    if n == 0 || n > MAX_CENSUS_DIM {
        return Err(Error::DimensionOutOfRange { n, min: 1, max: MAX_CENSUS_DIM });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|k| (k + 1..n).map(move |l| (k, l)))
        .collect();
    let p = pairs.len();
    let all_pairs: u32 = if p == 0 { 0 } else { (1u32 << p) - 1 };
    let edge_slots = n * n - n;
    map_reduce(
        1u64 << p,
        par,
        |range| {
            let mut hist = vec![0u64; edge_slots + 1];
            let mut out = [0u32; 32];
            for forward in range {
                let forward = forward as u32;
                let mut base = [0u32; 32];
                for (idx, &(k, l)) in pairs.iter().enumerate() {
                    if forward >> idx & 1 == 1 {
                        base[k] |= 1 << l;
                    }
                }
                let free = all_pairs & !forward;
                let f_edges = forward.count_ones() as usize;
                // Submasks of `free`, including the empty one.
                let mut back = free;
                loop {
                    out[..n].copy_from_slice(&base[..n]);
                    let mut bits = back;
                    while bits != 0 {
                        let idx = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let (k, l) = pairs[idx];
                        out[l] |= 1 << k;
                    }
                    if is_acyclic_masks(&out[..n]) {
                        hist[f_edges + back.count_ones() as usize] += 1;
                    }
                    if back == 0 {
                        break;
                    }
                    back = (back - 1) & free;
                }
            }
            hist
        },
        add_histograms,
    )
}

/// Total labeled DAGs on `n` vertices from the census.
pub fn dag_total(n: usize, par: Parallelism) -> Result<BigUint> {
    Ok(dag_census(n, par)?.into_iter().map(BigUint::from).sum())
}
