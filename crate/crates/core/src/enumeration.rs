//! Exhaustive counting of pertinent supports.
//!
//! A support of family A or B is pertinent when its permanent is 0, which is
//! the same as its row/column bipartite graph having no perfect matching. A
//! support of family C is pertinent when its permanent is 1, which is the same
//! as the digraph with adjacency `S - I` being acyclic. The hot loop uses
//! those two predicates; the permanent itself stays available as an oracle.
//!
//! Assignments are integers in `0..2^m`: bit `k` is the `k`-th variable
//! position in row-major order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::dag::is_acyclic_masks;
use crate::exec::{add_histograms, map_reduce};
use crate::matrix::{has_perfect_matching, row_mask, BinaryMatrix, Family, TypeSpec};
use crate::{Error, Parallelism, Result};

/// Largest dimension counted by exhaustive enumeration.
pub const MAX_ENUMERATION_DIM: usize = 5;

/// How a coefficient table was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "enumeration")]
    Enumeration,
    #[serde(rename = "dag")]
    DagCensus,
    #[serde(rename = "gf")]
    GeneratingFunction,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Enumeration => "enumeration",
            Route::DagCensus => "dag",
            Route::GeneratingFunction => "gf",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `coeffs[i]` = number of pertinent supports with exactly `i` one-valued
/// variable entries, for `i = 0..=i_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    spec: TypeSpec,
    coeffs: Vec<BigUint>,
    route: Route,
}

impl CoefficientTable {
    /// Validates length `i_max + 1`, `coeffs[0] = 1`, and for families A and
    /// B the count of supports with a single zero line.
    pub fn new(spec: TypeSpec, coeffs: Vec<BigUint>, route: Route) -> Result<Self> {
        if coeffs.len() != spec.i_max() + 1 {
            return Err(Error::InvalidTable(format!(
                "{spec} needs {} coefficients, got {}",
                spec.i_max() + 1,
                coeffs.len()
            )));
        }
        if !coeffs[0].is_one() {
            return Err(Error::InvalidTable("coefficient of i = 0 must be 1".into()));
        }
        let n = spec.n();
        let expected_last = match spec.family() {
            Family::A if n > 1 => Some(2 * n),
            Family::B if n > 1 => Some(2),
            Family::A | Family::B => Some(1),
            Family::C => None,
        };
        if let Some(e) = expected_last {
            if coeffs[spec.i_max()] != BigUint::from(e) {
                return Err(Error::InvalidTable(format!(
                    "{spec}: coefficient at i_max must be {e}, got {}",
                    coeffs[spec.i_max()]
                )));
            }
        }
        Ok(CoefficientTable { spec, coeffs, route })
    }

    /// Builds from a histogram over `0..=m`; entries beyond `i_max` must be
    /// zero.
    pub fn from_histogram(spec: TypeSpec, hist: &[u64], route: Route) -> Result<Self> {
        if let Some(i) = hist
            .iter()
            .enumerate()
            .skip(spec.i_max() + 1)
            .find_map(|(i, &c)| (c != 0).then_some(i))
        {
            return Err(Error::InvalidTable(format!(
                "{spec}: pertinent support with {i} ones exceeds i_max = {}",
                spec.i_max()
            )));
        }
        let coeffs = (0..=spec.i_max())
            .map(|i| BigUint::from(hist.get(i).copied().unwrap_or(0)))
            .collect();
        CoefficientTable::new(spec, coeffs, route)
    }

    pub fn spec(&self) -> &TypeSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Same spec and coefficients, whatever the route.
    pub fn same_counts(&self, other: &CoefficientTable) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}

/// Pertinence of a full support (fixed entries included).
pub fn is_pertinent(spec: &TypeSpec, assignment: &BinaryMatrix) -> Result<bool> {
    spec.check_respects(assignment)?;
    Ok(pertinent_rows(spec.family(), assignment.rows()))
}

/// Pertinence decided by the permanent itself.
pub fn is_pertinent_by_permanent(spec: &TypeSpec, assignment: &BinaryMatrix) -> Result<bool> {
    spec.check_respects(assignment)?;
    Ok(assignment.permanent_expansion()? == BigUint::from(spec.target()))
}

#[inline]
fn pertinent_rows(family: Family, rows: &[u32]) -> bool {
    match family {
        Family::A | Family::B => !has_perfect_matching(rows),
        Family::C => {
            let mut adj = [0u32; 32];
            for (k, &r) in rows.iter().enumerate() {
                adj[k] = r & !(1 << k);
            }
            is_acyclic_masks(&adj[..rows.len()])
        }
    }
}

/// Maps an assignment counter to row bitmasks with one lookup per row.
pub(crate) struct RowDecoder {
    rows: Vec<RowTable>,
}

struct RowTable {
    shift: u32,
    mask: u64,
    table: Vec<u32>,
}

impl RowDecoder {
    pub(crate) fn new(spec: &TypeSpec) -> Self {
        let fixed = spec.fixed_rows();
        let mut shift = 0;
        let rows = spec
            .variable_mask()
            .rows()
            .iter()
            .zip(fixed)
            .map(|(&var, fixed)| {
                let cols: Vec<u32> = (0..32).filter(|&j| var >> j & 1 == 1).collect();
                let width = cols.len() as u32;
                let table = (0..1u32 << width)
                    .map(|bits| {
                        cols.iter()
                            .enumerate()
                            .filter(|&(k, _)| bits >> k & 1 == 1)
                            .fold(fixed, |row, (_, &j)| row | 1 << j)
                    })
                    .collect();
                let t = RowTable {
                    shift,
                    mask: (1u64 << width) - 1,
                    table,
                };
                shift += width;
                t
            })
            .collect();
        RowDecoder { rows }
    }

    #[inline]
    pub(crate) fn decode(&self, assignment: u64, out: &mut [u32]) {
        for (slot, t) in out.iter_mut().zip(&self.rows) {
            *slot = t.table[((assignment >> t.shift) & t.mask) as usize];
        }
    }
}

fn check_enumeration_cap(spec: &TypeSpec) -> Result<()> {
    if spec.n() > MAX_ENUMERATION_DIM {
        return Err(Error::DimensionOutOfRange {
            n: spec.n(),
            min: 1,
            max: MAX_ENUMERATION_DIM,
        });
    }
    Ok(())
}

/// Histogram over `0..=m` of assignments satisfying `keep`.
fn histogram<F>(spec: &TypeSpec, par: Parallelism, keep: F) -> Result<Vec<u64>>
where
    F: Fn(&[u32]) -> bool + Sync + Send,
{
    let decoder = RowDecoder::new(spec);
    let n = spec.n();
    let m = spec.m();
    map_reduce(
        1u64 << m,
        par,
        |range| {
            let mut hist = vec![0u64; m + 1];
            let mut rows = [0u32; 32];
            for a in range {
                decoder.decode(a, &mut rows[..n]);
                if keep(&rows[..n]) {
                    hist[a.count_ones() as usize] += 1;
                }
            }
            hist
        },
        add_histograms,
    )
}

/// Counts pertinent supports by number of one-valued variable entries,
/// using all available workers.
pub fn count_pertinent(spec: &TypeSpec) -> Result<CoefficientTable> {
    count_pertinent_with(spec, Parallelism::default())
}

pub fn count_pertinent_with(spec: &TypeSpec, par: Parallelism) -> Result<CoefficientTable> {
    check_enumeration_cap(spec)?;
    let family = spec.family();
    let hist = histogram(spec, par, |rows| pertinent_rows(family, rows))?;
    CoefficientTable::from_histogram(spec.clone(), &hist, Route::Enumeration)
}

/// Same count with the permanent (permutation expansion) as the predicate.
/// Limited to `n <= 4`.
pub fn count_pertinent_by_permanent(spec: &TypeSpec, par: Parallelism) -> Result<CoefficientTable> {
    if spec.n() > 4 {
        return Err(Error::DimensionOutOfRange { n: spec.n(), min: 1, max: 4 });
    }
    let n = spec.n();
    let target = BigUint::from(spec.target());
    let hist = histogram(spec, par, |rows| {
        let m = BinaryMatrix::new(n, rows.to_vec()).expect("decoder emits valid rows");
        m.permanent_expansion().expect("n <= 4") == target
    })?;
    CoefficientTable::from_histogram(spec.clone(), &hist, Route::Enumeration)
}

pub fn total_pertinent(spec: &TypeSpec) -> Result<BigUint> {
    Ok(count_pertinent(spec)?.total())
}

/// Outcome of checking the fewest zero-valued variable entries a pertinent
/// support can have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremesReport {
    pub spec: TypeSpec,
    pub j_min_expected: usize,
    /// `None` when no support is pertinent.
    pub j_min_observed: Option<usize>,
    /// Pertinent supports attaining the observed minimum, in assignment order.
    pub witnesses: Vec<BinaryMatrix>,
}

impl ExtremesReport {
    pub fn holds(&self) -> bool {
        self.j_min_observed == Some(self.j_min_expected)
    }

    /// Witnesses in neither upper- nor lower-triangular form.
    pub fn non_triangular_witnesses(&self) -> Vec<&BinaryMatrix> {
        self.witnesses
            .iter()
            .filter(|w| !w.is_upper_triangular() && !w.is_lower_triangular())
            .collect()
    }
}

/// Scans every assignment and reports the largest number of ones among
/// pertinent supports together with the supports attaining it.
pub fn verify_extremes(spec: &TypeSpec) -> Result<ExtremesReport> {
    verify_extremes_with(spec, Parallelism::default())
}

pub fn verify_extremes_with(spec: &TypeSpec, par: Parallelism) -> Result<ExtremesReport> {
    check_enumeration_cap(spec)?;
    let decoder = RowDecoder::new(spec);
    let n = spec.n();
    let family = spec.family();
    type Best = Option<(u32, Vec<Vec<u32>>)>;
    let best: Best = map_reduce(
        1u64 << spec.m(),
        par,
        |range| {
            let mut best: Best = None;
            let mut rows = [0u32; 32];
            for a in range {
                let ones = a.count_ones();
                if best.as_ref().is_some_and(|(b, _)| ones < *b) {
                    continue;
                }
                decoder.decode(a, &mut rows[..n]);
                if !pertinent_rows(family, &rows[..n]) {
                    continue;
                }
                match &mut best {
                    Some((b, w)) if *b == ones => w.push(rows[..n].to_vec()),
                    _ => best = Some((ones, vec![rows[..n].to_vec()])),
                }
            }
            best
        },
        |a, b| match (a, b) {
            (None, x) | (x, None) => x,
            (Some((ia, mut wa)), Some((ib, wb))) => {
                if ia == ib {
                    wa.extend(wb);
                    Some((ia, wa))
                } else if ia > ib {
                    Some((ia, wa))
                } else {
                    Some((ib, wb))
                }
            }
        },
    )?;
    let (j_min_observed, witnesses) = match best {
        None => (None, Vec::new()),
        Some((ones, w)) => (
            Some(spec.m() - ones as usize),
            w.into_iter()
                .map(|rows| BinaryMatrix::new(n, rows))
                .collect::<Result<_>>()?,
        ),
    };
    Ok(ExtremesReport {
        spec: spec.clone(),
        j_min_expected: spec.j_min(),
        j_min_observed,
        witnesses,
    })
}

/// A support with one all-zero variable line, which is pertinent for
/// families A and B. Row 1 is used for both.
pub fn zero_line_witness(spec: &TypeSpec) -> Option<BinaryMatrix> {
    let n = spec.n();
    let full = row_mask(n);
    let rows = match spec.family() {
        Family::A | Family::B => (0..n).map(|i| if i == 0 { 0 } else { full }).collect(),
        Family::C => return None,
    };
    BinaryMatrix::new(n, rows).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, n: usize) -> TypeSpec {
        TypeSpec::new(f, n).unwrap()
    }

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn pertinence_examples() {
        let a2 = spec(Family::A, 2);
        assert!(is_pertinent(&a2, &BinaryMatrix::zeros(2).unwrap()).unwrap());
        let c2 = spec(Family::C, 2);
        assert!(!is_pertinent(&c2, &BinaryMatrix::ones(2).unwrap()).unwrap());
        let b2 = spec(Family::B, 2);
        let m = BinaryMatrix::from_rows(&[&[0, 1], &[0, 1]]).unwrap();
        assert!(is_pertinent(&b2, &m).unwrap());
        assert!(is_pertinent_by_permanent(&b2, &m).unwrap());
    }

    #[test]
    fn pertinence_rejects_broken_fixed_entries() {
        let c2 = spec(Family::C, 2);
        let m = BinaryMatrix::from_rows(&[&[0, 0], &[0, 1]]).unwrap();
        assert!(matches!(is_pertinent(&c2, &m), Err(Error::SpecViolation(_))));
    }

    #[test]
    fn small_tables() {
        assert_eq!(count_pertinent(&spec(Family::A, 1)).unwrap().coeffs(), u(&[1]));
        assert_eq!(count_pertinent(&spec(Family::B, 1)).unwrap().coeffs(), u(&[1]));
        assert_eq!(count_pertinent(&spec(Family::C, 1)).unwrap().coeffs(), u(&[1]));
        assert_eq!(count_pertinent(&spec(Family::A, 2)).unwrap().coeffs(), u(&[1, 4, 4]));
        assert_eq!(count_pertinent(&spec(Family::B, 2)).unwrap().coeffs(), u(&[1, 2]));
        assert_eq!(
            count_pertinent(&spec(Family::A, 3)).unwrap().coeffs(),
            u(&[1, 9, 36, 78, 90, 45, 6])
        );
        assert_eq!(
            count_pertinent(&spec(Family::B, 3)).unwrap().coeffs(),
            u(&[1, 6, 13, 10, 2])
        );
    }

    #[test]
    fn fast_predicate_matches_permanent_for_small_n() {
        for f in Family::ALL {
            for n in 1..=3 {
                let s = spec(f, n);
                let fast = count_pertinent_with(&s, Parallelism::Sequential).unwrap();
                let slow = count_pertinent_by_permanent(&s, Parallelism::Sequential).unwrap();
                assert!(fast.same_counts(&slow), "{s}");
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            count_pertinent(&spec(Family::A, 6)),
            Err(Error::DimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn table_validation() {
        let a2 = spec(Family::A, 2);
        assert!(CoefficientTable::new(a2.clone(), u(&[1, 4]), Route::Enumeration).is_err());
        assert!(CoefficientTable::new(a2.clone(), u(&[2, 4, 4]), Route::Enumeration).is_err());
        assert!(CoefficientTable::new(a2.clone(), u(&[1, 4, 3]), Route::Enumeration).is_err());
        assert!(CoefficientTable::from_histogram(a2, &[1, 4, 4, 1, 0], Route::Enumeration).is_err());
    }

    #[test]
    fn extremes_for_c2() {
        let r = verify_extremes(&spec(Family::C, 2)).unwrap();
        assert!(r.holds());
        assert_eq!(r.j_min_observed, Some(1));
        assert_eq!(r.spec.i_max(), 1);
        assert_eq!(r.witnesses.len(), 2);
    }

    #[test]
    fn zero_line_witnesses_are_pertinent() {
        for f in [Family::A, Family::B] {
            for n in 2..=5 {
                let s = spec(f, n);
                let w = zero_line_witness(&s).unwrap();
                assert!(is_pertinent(&s, &w).unwrap());
                assert_eq!(s.variable_ones(&w), s.i_max());
            }
        }
    }

    #[test]
    fn decoder_matches_reference_mapping() {
        for f in Family::ALL {
            let s = spec(f, 3);
            let d = RowDecoder::new(&s);
            let mut rows = [0u32; 3];
            for a in 0..(1u64 << s.m()) {
                d.decode(a, &mut rows);
                assert_eq!(&rows[..], s.assignment_to_matrix(a).rows());
            }
        }
    }
}
