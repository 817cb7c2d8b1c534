//! Least attainable determinants over continuous and discrete value sets.
//!
//! Variable entries take values in a set `X` containing 0; an entry is 0 with
//! probability `1 - r`. For continuous `X` only the support of a matrix
//! matters (any prescribed nonzero value has probability 0), so the least
//! attainable |det| is 0 for families A/B and 1 for C, attained exactly by the
//! pertinent supports. For a finite `X` every assignment has positive
//! probability and the least |det| has to be found by scanning all
//! `|X|^m` assignments.
//!
//! Sign convention: when both `+u` and `-u` are attainable at the least
//! modulus, `+u` is reported.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::enumeration::{is_pertinent, RowDecoder};
use crate::exec::map_reduce;
use crate::matrix::{parse_rational, BinaryMatrix, Family, RationalMatrix, TypeSpec};
use crate::poly::RationalPolynomial;
use crate::report::CheckReport;
use crate::{Error, Parallelism, Result};

/// Largest number of assignments a scan may visit.
pub const ENUMERATION_BUDGET: u128 = 20_000_000;

/// Values a variable entry may take. Nonzero discrete values carry weights
/// summing to 1, so `p(x) = w_x r` and `p(0) = 1 - r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueSet {
    /// An interval `[lo, hi]` with `lo <= 0 <= hi` and `lo < hi`.
    Continuous { lo: BigRational, hi: BigRational },
    /// `0` plus the listed nonzero values, sorted and distinct.
    Discrete {
        nonzero: Vec<(BigRational, BigRational)>,
    },
}

impl ValueSet {
    pub fn continuous(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo >= hi || lo.is_positive() || hi.is_negative() {
            return Err(Error::InvalidValueSet(format!(
                "[{lo}, {hi}] must be a nondegenerate interval containing 0"
            )));
        }
        Ok(ValueSet::Continuous { lo, hi })
    }

    /// Discrete set with weights uniform over the nonzero values.
    pub fn discrete(values: Vec<BigRational>) -> Result<Self> {
        ValueSet::discrete_weighted(values.into_iter().map(|v| (v, None)).collect())
    }

    /// Weights are either given for every nonzero value or for none.
    pub fn discrete_weighted(values: Vec<(BigRational, Option<BigRational>)>) -> Result<Self> {
        if !values.iter().any(|(v, _)| v.is_zero()) {
            return Err(Error::InvalidValueSet("0 must be a member".into()));
        }
        if values.iter().any(|(v, w)| v.is_zero() && w.is_some()) {
            return Err(Error::InvalidValueSet("0 takes no weight; p(0) = 1 - r".into()));
        }
        let mut nonzero: Vec<(BigRational, Option<BigRational>)> =
            values.into_iter().filter(|(v, _)| !v.is_zero()).collect();
        nonzero.sort_by(|a, b| a.0.cmp(&b.0));
        if nonzero.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidValueSet("duplicate value".into()));
        }
        if nonzero.is_empty() {
            return Err(Error::InvalidValueSet("at least one nonzero value is required".into()));
        }
        let given = nonzero.iter().filter(|(_, w)| w.is_some()).count();
        let k = nonzero.len();
        let weighted: Vec<(BigRational, BigRational)> = if given == 0 {
            let w = BigRational::new(BigInt::one(), BigInt::from(k));
            nonzero.into_iter().map(|(v, _)| (v, w.clone())).collect()
        } else if given == k {
            nonzero.into_iter().map(|(v, w)| (v, w.unwrap())).collect()
        } else {
            return Err(Error::InvalidValueSet(
                "give a weight for every nonzero value or for none".into(),
            ));
        };
        if weighted.iter().any(|(_, w)| !w.is_positive()) {
            return Err(Error::InvalidValueSet("weights must be positive".into()));
        }
        let total: BigRational = weighted.iter().map(|(_, w)| w.clone()).sum();
        if !total.is_one() {
            return Err(Error::InvalidValueSet(format!("weights sum to {total}, not 1")));
        }
        Ok(ValueSet::Discrete { nonzero: weighted })
    }

    /// Parses `[lo,hi]` (continuous) or `0,1/2@1/2,2@1/2` (discrete, optional
    /// `@weight` per nonzero value).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let (lo, hi) = inner
                .split_once(',')
                .ok_or_else(|| Error::InvalidValueSet(format!("bad interval {s:?}")))?;
            return ValueSet::continuous(parse_rational(lo)?, parse_rational(hi)?);
        }
        let items = s
            .split(',')
            .map(|item| match item.split_once('@') {
                Some((v, w)) => Ok((parse_rational(v)?, Some(parse_rational(w)?))),
                None => Ok((parse_rational(item)?, None)),
            })
            .collect::<Result<Vec<_>>>()?;
        ValueSet::discrete_weighted(items)
    }

    pub fn is_continuous(&self) -> bool {
        matches!(self, ValueSet::Continuous { .. })
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        match self {
            ValueSet::Continuous { lo, hi } => lo <= x && x <= hi,
            ValueSet::Discrete { nonzero } => x.is_zero() || nonzero.iter().any(|(v, _)| v == x),
        }
    }

    /// All values of a discrete set, 0 first.
    pub fn discrete_values(&self) -> Option<Vec<BigRational>> {
        match self {
            ValueSet::Continuous { .. } => None,
            ValueSet::Discrete { nonzero } => Some(
                std::iter::once(BigRational::zero())
                    .chain(nonzero.iter().map(|(v, _)| v.clone()))
                    .collect(),
            ),
        }
    }

    /// `p(x)` as a polynomial in `r` (discrete sets only).
    pub fn probability_of(&self, x: &BigRational) -> Option<RationalPolynomial> {
        match self {
            ValueSet::Continuous { .. } => None,
            ValueSet::Discrete { nonzero } => {
                if x.is_zero() {
                    return Some(one_minus_r());
                }
                nonzero
                    .iter()
                    .find(|(v, _)| v == x)
                    .map(|(_, w)| RationalPolynomial::monomial(w.clone(), 1))
            }
        }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSet::Continuous { lo, hi } => write!(f, "[{lo}, {hi}]"),
            ValueSet::Discrete { nonzero } => {
                write!(f, "{{0")?;
                for (v, _) in nonzero {
                    write!(f, ", {v}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

fn one_minus_r() -> RationalPolynomial {
    RationalPolynomial::new(vec![BigRational::one(), -BigRational::one()])
}

/// Members of an [`OmegaSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Members {
    /// Attaining matrices, for a discrete value set.
    Rational(Vec<RationalMatrix>),
    /// Support patterns, one per class of matrices with the same nonzero
    /// locations (continuous value sets), or binary matrices themselves.
    Support(Vec<BinaryMatrix>),
}

impl Members {
    pub fn len(&self) -> usize {
        match self {
            Members::Rational(v) => v.len(),
            Members::Support(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Matrices attaining the least |det| with positive probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSet {
    pub spec: TypeSpec,
    pub xset: ValueSet,
    pub u: BigRational,
    pub members: Members,
    /// Binarized set: members are the binary matrices themselves.
    pub tilde: bool,
}

impl OmegaSet {
    /// Number of nonzero variable entries of every member, in member order.
    pub fn nonzero_counts(&self) -> Vec<usize> {
        match &self.members {
            Members::Rational(v) => v.iter().map(|m| self.spec.variable_nonzeros(m)).collect(),
            Members::Support(v) => v.iter().map(|m| self.spec.variable_ones(m)).collect(),
        }
    }

    /// `sizes[i]` = number of members with `i` nonzero variable entries,
    /// for `i = 0..=m`.
    pub fn partition_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.spec.m() + 1];
        for i in self.nonzero_counts() {
            sizes[i] += 1;
        }
        sizes
    }

    /// Supports of the members (for support members, the members).
    pub fn supports(&self) -> BTreeSet<BinaryMatrix> {
        match &self.members {
            Members::Rational(v) => v.iter().map(|m| m.support()).collect(),
            Members::Support(v) => v.iter().cloned().collect(),
        }
    }

    /// Probability, as a polynomial in `r`, that a random matrix falls in
    /// one of the member classes. Support members contribute
    /// `r^i (1-r)^(m-i)`; rational members the product of their entry
    /// probabilities.
    pub fn probability(&self) -> RationalPolynomial {
        let m = self.spec.m();
        let r = RationalPolynomial::monomial(BigRational::one(), 1);
        match &self.members {
            Members::Support(v) => v.iter().fold(RationalPolynomial::zero(), |acc, s| {
                let i = self.spec.variable_ones(s);
                &acc + &(&r.pow(i) * &one_minus_r().pow(m - i))
            }),
            Members::Rational(v) => v.iter().fold(RationalPolynomial::zero(), |acc, mat| {
                let term = self
                    .spec
                    .variable_positions()
                    .into_iter()
                    .fold(RationalPolynomial::constant(BigRational::one()), |t, (i, j)| {
                        let x = mat.get(i + 1, j + 1).expect("in range");
                        let p = self
                            .xset
                            .probability_of(x)
                            .expect("member entries come from the value set");
                        &t * &p
                    });
                &acc + &term
            }),
        }
    }

    /// Members rendered one per line. Continuous classes show nonzero
    /// variable entries as `*`.
    pub fn render(&self) -> Vec<String> {
        match &self.members {
            Members::Rational(v) => v.iter().map(|m| m.to_string()).collect(),
            Members::Support(v) if self.xset.is_continuous() && !self.tilde => {
                v.iter().map(|s| render_class(&self.spec, s)).collect()
            }
            Members::Support(v) => v.iter().map(|s| s.to_string()).collect(),
        }
    }
}

fn render_class(spec: &TypeSpec, s: &BinaryMatrix) -> String {
    let n = spec.n();
    let var = spec.variable_mask().rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let bit = s.rows()[i] >> j & 1 == 1;
                    match (var[i] >> j & 1 == 1, bit) {
                        (true, true) => "*",
                        (_, true) => "1",
                        (_, false) => "0",
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn check_budget(needed: u128) -> Result<()> {
    if needed > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: ENUMERATION_BUDGET,
        });
    }
    Ok(())
}

/// Bareiss elimination in `i128`; `None` on overflow.
fn det_i128(a: &mut [i128], n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k * n + k] == 0 {
            let r = (k + 1..n).find(|&r| a[r * n + k] != 0)?;
            for c in 0..n {
                a.swap(k * n + c, r * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i * n + j]
                    .checked_mul(a[k * n + k])?
                    .checked_sub(a[i * n + k].checked_mul(a[k * n + j])?)?;
                a[i * n + j] = v / prev;
            }
        }
        prev = a[k * n + k];
    }
    Some(sign * a[n * n - 1])
}

/// Result of scanning every discrete assignment: the signed scaled
/// determinant of least modulus and the assignment indices attaining it.
struct Scan {
    u: BigRational,
    members: Vec<u64>,
}

#[derive(Default)]
struct Partial {
    best: Option<BigInt>,
    pos: Vec<u64>,
    neg: Vec<u64>,
}

impl Partial {
    fn offer(&mut self, det: BigInt, index: u64) {
        let modulus = det.abs();
        match &self.best {
            Some(b) if modulus > *b => return,
            Some(b) if modulus == *b => {}
            _ => {
                self.best = Some(modulus);
                self.pos.clear();
                self.neg.clear();
            }
        }
        if det.is_negative() {
            self.neg.push(index);
        } else {
            self.pos.push(index);
        }
    }

    fn combine(mut self, other: Partial) -> Partial {
        match (&self.best, &other.best) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if a < b => self,
            (Some(a), Some(b)) if a > b => other,
            _ => {
                self.pos.extend(other.pos);
                self.neg.extend(other.neg);
                self
            }
        }
    }
}

/// Common-denominator integer image of a discrete value set.
struct ScaledValues {
    denom: BigInt,
    ints: Vec<i128>,
    values: Vec<BigRational>,
}

impl ScaledValues {
    fn new(values: Vec<BigRational>) -> Result<Self> {
        let denom = values
            .iter()
            .fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        let ints = values
            .iter()
            .map(|v| {
                (v.numer() * (&denom / v.denom()))
                    .to_i128()
                    .ok_or_else(|| Error::InvalidValueSet("values too large".into()))
            })
            .collect::<Result<_>>()?;
        Ok(ScaledValues { denom, ints, values })
    }
}

fn scan_discrete(spec: &TypeSpec, values: Vec<BigRational>, par: Parallelism) -> Result<Scan> {
    let base = values.len() as u64;
    let m = spec.m();
    let total = (base as u128)
        .checked_pow(m as u32)
        .unwrap_or(u128::MAX);
    check_budget(total)?;
    let scaled = ScaledValues::new(values)?;
    let n = spec.n();
    let positions = spec.variable_positions();
    let denom_i = scaled
        .denom
        .to_i128()
        .ok_or_else(|| Error::InvalidValueSet("denominator too large".into()))?;
    let fixed = spec.fixed_rows();
    let mut template = vec![0i128; n * n];
    for (i, row) in fixed.iter().enumerate() {
        for j in 0..n {
            if row >> j & 1 == 1 {
                template[i * n + j] = denom_i;
            }
        }
    }
    let to_rational = |idx: u64| -> RationalMatrix {
        assignment_matrix(spec, &scaled.values, idx)
    };
    let partial = map_reduce(
        total as u64,
        par,
        |range| {
            let mut p = Partial::default();
            let mut a = template.clone();
            for idx in range {
                a.copy_from_slice(&template);
                let mut rest = idx;
                for &(i, j) in &positions {
                    a[i * n + j] = scaled.ints[(rest % base) as usize];
                    rest /= base;
                }
                let det = match det_i128(&mut a, n) {
                    Some(d) => BigInt::from(d),
                    None => {
                        let d = to_rational(idx).determinant();
                        (d * BigRational::from_integer(num_traits::pow(
                            scaled.denom.clone(),
                            n,
                        )))
                        .to_integer()
                    }
                };
                p.offer(det, idx);
            }
            p
        },
        Partial::combine,
    )?;
    let best = partial.best.expect("at least one assignment");
    let scale = num_traits::pow(scaled.denom.clone(), n);
    let (u, members) = if !partial.pos.is_empty() {
        (BigRational::new(best, scale), partial.pos)
    } else {
        (BigRational::new(-best, scale), partial.neg)
    };
    Ok(Scan { u, members })
}

/// Matrix for assignment `idx`: digit `k` (base `|values|`, least
/// significant first) is the value of the `k`-th variable position.
fn assignment_matrix(spec: &TypeSpec, values: &[BigRational], idx: u64) -> RationalMatrix {
    let n = spec.n();
    let base = values.len() as u64;
    let mut entries = vec![BigRational::zero(); n * n];
    for (i, row) in spec.fixed_rows().iter().enumerate() {
        for j in 0..n {
            if row >> j & 1 == 1 {
                entries[i * n + j] = BigRational::one();
            }
        }
    }
    let mut rest = idx;
    for (i, j) in spec.variable_positions() {
        entries[i * n + j] = values[(rest % base) as usize].clone();
        rest /= base;
    }
    RationalMatrix::new(n, entries).expect("square")
}

/// Least-modulus determinant attainable with positive probability.
pub fn compute_u(spec: &TypeSpec, xset: &ValueSet) -> Result<BigRational> {
    compute_u_with(spec, xset, Parallelism::default())
}

pub fn compute_u_with(spec: &TypeSpec, xset: &ValueSet, par: Parallelism) -> Result<BigRational> {
    match xset.discrete_values() {
        None => Ok(BigRational::from_integer(spec.target().into())),
        Some(values) => Ok(scan_discrete(spec, values, par)?.u),
    }
}

fn pertinent_supports(spec: &TypeSpec) -> Result<Vec<BinaryMatrix>> {
    check_budget(1u128 << spec.m())?;
    let mut out = Vec::new();
    for a in 0..(1u64 << spec.m()) {
        let s = spec.assignment_to_matrix(a);
        if is_pertinent(spec, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Attaining matrices (discrete) or support classes (continuous).
pub fn omega(spec: &TypeSpec, xset: &ValueSet) -> Result<OmegaSet> {
    omega_with(spec, xset, Parallelism::default())
}

pub fn omega_with(spec: &TypeSpec, xset: &ValueSet, par: Parallelism) -> Result<OmegaSet> {
    match xset.discrete_values() {
        None => Ok(OmegaSet {
            spec: spec.clone(),
            xset: xset.clone(),
            u: BigRational::from_integer(spec.target().into()),
            members: Members::Support(pertinent_supports(spec)?),
            tilde: false,
        }),
        Some(values) => {
            let scan = scan_discrete(spec, values.clone(), par)?;
            let members = scan
                .members
                .iter()
                .map(|&idx| assignment_matrix(spec, &values, idx))
                .collect();
            Ok(OmegaSet {
                spec: spec.clone(),
                xset: xset.clone(),
                u: scan.u,
                members: Members::Rational(members),
                tilde: false,
            })
        }
    }
}

/// Partition sizes of `omega` without materializing the members.
pub fn omega_partition_sizes(spec: &TypeSpec, xset: &ValueSet) -> Result<(BigRational, Vec<usize>)> {
    match xset.discrete_values() {
        None => {
            let o = omega(spec, xset)?;
            Ok((o.u.clone(), o.partition_sizes()))
        }
        Some(values) => {
            let zero_digit = 0u64;
            let base = values.len() as u64;
            let scan = scan_discrete(spec, values, Parallelism::default())?;
            let mut sizes = vec![0usize; spec.m() + 1];
            for idx in scan.members {
                let mut rest = idx;
                let mut nz = 0;
                for _ in 0..spec.m() {
                    if rest % base != zero_digit {
                        nz += 1;
                    }
                    rest /= base;
                }
                sizes[nz] += 1;
            }
            Ok((scan.u, sizes))
        }
    }
}

/// Binary matrices attaining the least |det| over supports reachable from
/// `xset`. Continuous: the pertinent supports, with `u~ = u`. Discrete: every
/// support is reachable, and the least |det| among them decides.
pub fn omega_tilde(spec: &TypeSpec, xset: &ValueSet) -> Result<OmegaSet> {
    omega_tilde_with(spec, xset, Parallelism::default())
}

pub fn omega_tilde_with(spec: &TypeSpec, xset: &ValueSet, par: Parallelism) -> Result<OmegaSet> {
    if xset.is_continuous() {
        return Ok(OmegaSet {
            tilde: true,
            ..omega_with(spec, xset, par)?
        });
    }
    check_budget(1u128 << spec.m())?;
    let decoder = RowDecoder::new(spec);
    let n = spec.n();
    let partial = map_reduce(
        1u64 << spec.m(),
        par,
        |range| {
            let mut p = Partial::default();
            let mut rows = vec![0u32; n];
            let mut ints = vec![0i128; n * n];
            for a in range {
                decoder.decode(a, &mut rows);
                for (i, &r) in rows.iter().enumerate() {
                    for j in 0..n {
                        ints[i * n + j] = i128::from(r >> j & 1);
                    }
                }
                let det = match det_i128(&mut ints, n) {
                    Some(d) => BigInt::from(d),
                    None => BinaryMatrix::new(n, rows.clone())
                        .expect("valid rows")
                        .to_rational()
                        .determinant()
                        .to_integer(),
                };
                p.offer(det, a);
            }
            p
        },
        Partial::combine,
    )?;
    let best = partial.best.expect("at least one support");
    let (u, chosen) = if partial.pos.is_empty() {
        (-best, partial.neg)
    } else {
        (best, partial.pos)
    };
    Ok(OmegaSet {
        spec: spec.clone(),
        xset: xset.clone(),
        u: BigRational::from_integer(u),
        members: Members::Support(chosen.into_iter().map(|a| spec.assignment_to_matrix(a)).collect()),
        tilde: true,
    })
}

/// Comparison of the binary attaining sets for a discrete set and a
/// continuous set containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionReport {
    pub spec: TypeSpec,
    pub u_dis: BigRational,
    pub u_cnt: BigRational,
    pub dis: BTreeSet<BinaryMatrix>,
    pub cnt: BTreeSet<BinaryMatrix>,
    /// Every continuous member is also a discrete member.
    pub includes: bool,
    pub disjoint: bool,
    /// Discrete members that are not continuous members.
    pub extra: Vec<BinaryMatrix>,
    /// Continuous members missing from the discrete set.
    pub missing: Vec<BinaryMatrix>,
}

impl InclusionReport {
    /// Families A and B must satisfy the inclusion; C is report-only.
    pub fn pass(&self) -> bool {
        match self.spec.family() {
            Family::A | Family::B => self.includes,
            Family::C => true,
        }
    }
}

pub fn check_inclusion(
    family: Family,
    n: usize,
    xset_dis: &ValueSet,
    xset_cnt: &ValueSet,
) -> Result<InclusionReport> {
    let values = xset_dis
        .discrete_values()
        .ok_or_else(|| Error::InvalidValueSet("first set must be discrete".into()))?;
    if !xset_cnt.is_continuous() {
        return Err(Error::InvalidValueSet("second set must be continuous".into()));
    }
    if let Some(v) = values.iter().find(|v| !xset_cnt.contains(v)) {
        return Err(Error::InvalidValueSet(format!(
            "{v} lies outside {xset_cnt}"
        )));
    }
    let spec = TypeSpec::new(family, n)?;
    let dis = omega_tilde(&spec, xset_dis)?;
    let cnt = omega_tilde(&spec, xset_cnt)?;
    let dis_set = dis.supports();
    let cnt_set = cnt.supports();
    let extra: Vec<_> = dis_set.difference(&cnt_set).cloned().collect();
    let missing: Vec<_> = cnt_set.difference(&dis_set).cloned().collect();
    Ok(InclusionReport {
        spec,
        u_dis: dis.u,
        u_cnt: cnt.u,
        includes: missing.is_empty(),
        disjoint: dis_set.is_disjoint(&cnt_set),
        dis: dis_set,
        cnt: cnt_set,
        extra,
        missing,
    })
}

/// The exact identity linking the continuous and discrete 2x2 unit-diagonal
/// cases over `[0, 1]` and `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BifurcationReport {
    /// Probability that det = 1 over `[0, 1]`.
    pub continuous: RationalPolynomial,
    /// Probability that det = 0 over `{0, 1}`.
    pub discrete: RationalPolynomial,
    pub sum: RationalPolynomial,
    pub u_continuous: BigRational,
    pub u_discrete: BigRational,
}

impl BifurcationReport {
    pub fn holds(&self) -> bool {
        self.sum == RationalPolynomial::constant(BigRational::one())
    }
}

pub fn bifurcation_check() -> Result<BifurcationReport> {
    let spec = TypeSpec::new(Family::C, 2)?;
    let cnt = ValueSet::continuous(BigRational::zero(), BigRational::one())?;
    let dis = ValueSet::discrete(vec![BigRational::zero(), BigRational::one()])?;
    let cnt_omega = omega_tilde(&spec, &cnt)?;
    let dis_omega = omega(&spec, &dis)?;
    let continuous = cnt_omega.probability();
    let discrete = dis_omega.probability();
    let sum = &continuous + &discrete;
    Ok(BifurcationReport {
        continuous,
        discrete,
        sum,
        u_continuous: cnt_omega.u,
        u_discrete: dis_omega.u,
    })
}

fn mat(s: &str) -> RationalMatrix {
    s.parse().expect("literal matrix")
}

/// Recomputes every counterexample showing which binary-reduction properties fail for
/// discrete value sets.
pub fn prop6_witnesses() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let c2 = TypeSpec::new(Family::C, 2)?;

    // Least values differ for C: X = {0, 1/2}.
    let half = ValueSet::parse("0,1/2")?;
    let u = compute_u(&c2, &half)?;
    out.push(CheckReport::eq("u(C_2, {0,1/2})", "3/4", u));
    let witness = mat("1 1/2; 1/2 1");
    out.push(CheckReport::eq("det (1 1/2; 1/2 1)", "3/4", witness.determinant()));
    let ut = omega_tilde(&c2, &half)?;
    out.push(CheckReport::eq("u~(C~_2, {0,1/2})", "0", &ut.u));
    out.push(CheckReport::eq(
        "support of (1 1/2; 1/2 1)",
        "1 1; 1 1",
        witness.support(),
    ));

    // A and B: a zero line gives 0 either way.
    for family in [Family::A, Family::B] {
        let spec = TypeSpec::new(family, 2)?;
        out.push(CheckReport::eq(
            &format!("u({family}_2, {{0,1/2}})"),
            "0",
            compute_u(&spec, &half)?,
        ));
        out.push(CheckReport::eq(
            &format!("u~({family}~_2, {{0,1/2}})"),
            "0",
            omega_tilde(&spec, &half)?.u,
        ));
    }

    // Partition sizes differ: X = {0, 1/2, 1, 2}; S_3 and T_3 share a support.
    let x4 = ValueSet::parse("0,1/2,1,2")?;
    let s3 = mat("1 0 1/2; 0 1 0; 2 1 1");
    let s3_bin = BinaryMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 0], &[1, 1, 1]])?;
    let t3 = s3_bin.to_rational();
    out.push(CheckReport::eq("det S_3", "0", s3.determinant()));
    out.push(CheckReport::eq("det T_3", "0", t3.determinant()));
    out.push(CheckReport::eq("det S~_3", "0", s3_bin.to_rational().determinant()));
    out.push(CheckReport::eq("per S_3", "2", s3.permanent_expansion()?));
    out.push(CheckReport::eq("per S~_3", "2", s3_bin.permanent_expansion()?));
    out.push(CheckReport::eq("support S_3", &s3_bin.to_string(), s3.support()));
    out.push(CheckReport::eq("support T_3", &s3_bin.to_string(), t3.support()));
    for (family, i) in [(Family::A, 6), (Family::B, 4), (Family::C, 3)] {
        let spec = TypeSpec::new(family, 3)?;
        let (u, sizes) = omega_partition_sizes(&spec, &x4)?;
        out.push(CheckReport::eq(&format!("u({family}_3, {{0,1/2,1,2}})"), "0", &u));
        let tilde = omega_tilde(&spec, &x4)?;
        out.push(CheckReport::eq(
            &format!("u~({family}~_3, {{0,1/2,1,2}})"),
            "0",
            &tilde.u,
        ));
        out.push(CheckReport::eq(
            &format!("S_3 nonzero variable entries as {family}_3"),
            &i.to_string(),
            spec.variable_nonzeros(&s3),
        ));
        out.push(CheckReport::eq(
            &format!("T_3 nonzero variable entries as {family}_3"),
            &i.to_string(),
            spec.variable_nonzeros(&t3),
        ));
        let tilde_i = tilde.partition_sizes()[i];
        out.push(CheckReport::new(
            &format!("|Omega_{i}({family}_3)| != |Omega~_{i}({family}~_3)|"),
            "sizes differ",
            format!("{} vs {}", sizes[i], tilde_i),
            sizes[i] != tilde_i,
        ));
    }

    // 3(a) and 3(c) are not equivalent: X = {0, 1, 2}.
    let x3 = ValueSet::parse("0,1,2")?;
    let m3 = mat("1 1 0; 1 1 0; 0 1 1");
    out.push(CheckReport::eq("det M", "0", m3.determinant()));
    for family in Family::ALL {
        let spec = TypeSpec::new(family, 3)?;
        out.push(CheckReport::eq(
            &format!("u({family}_3, {{0,1,2}})"),
            "0",
            compute_u(&spec, &x3)?,
        ));
        out.push(CheckReport::eq(
            &format!("u~({family}~_3, {{0,1,2}})"),
            "0",
            omega_tilde(&spec, &x3)?.u,
        ));
    }
    let s3c = mat("1 0 1; 1 1 0; 2 1 1");
    out.push(CheckReport::eq("det S_3 (X = {0,1,2})", "0", s3c.determinant()));
    out.push(CheckReport::eq(
        "det S~_3 (X = {0,1,2})",
        "1",
        s3c.support().to_rational().determinant(),
    ));
    out.push(CheckReport::eq(
        "support S_3 (X = {0,1,2})",
        "1 0 1; 1 1 0; 1 1 1",
        s3c.support(),
    ));
    Ok(out)
}

/// Worked 2x2 instances: memberships and cardinalities of every
/// displayed attaining set for 2x2 matrices.
pub fn omega_instances() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let c2 = TypeSpec::new(Family::C, 2)?;
    let a2 = TypeSpec::new(Family::A, 2)?;
    let cnt02 = ValueSet::parse("[0,2]")?;
    let dis = ValueSet::parse("0,1/2,2")?;

    out.push(CheckReport::eq("u(C_2, [0,2])", "1", compute_u(&c2, &cnt02)?));
    out.push(CheckReport::eq("u(C_2, {0,1/2,2})", "0", compute_u(&c2, &dis)?));

    let o = omega(&c2, &cnt02)?;
    out.push(CheckReport::eq("Omega(C_2, [0,2])", "1 0; 0 1 | 1 *; 0 1 | 1 0; * 1", o.render().join(" | ")));
    out.push(CheckReport::eq("|Omega_i(C_2, [0,2])|, i = 0..2", "[1, 2, 0]", format!("{:?}", o.partition_sizes())));

    let o = omega(&c2, &dis)?;
    out.push(CheckReport::eq("Omega(C_2, {0,1/2,2})", "1 2; 1/2 1 | 1 1/2; 2 1", o.render().join(" | ")));
    out.push(CheckReport::eq("|Omega_i(C_2, {0,1/2,2})|, i = 0..2", "[0, 0, 2]", format!("{:?}", o.partition_sizes())));
    out.push(CheckReport::eq(
        "P(C_2 in Omega(C_2, {0,1/2,2}))",
        "1/2*r^2",
        o.probability().render("r"),
    ));

    let o = omega_tilde(&c2, &cnt02)?;
    out.push(CheckReport::eq("Omega~(C~_2, [0,2])", "1 0; 0 1 | 1 1; 0 1 | 1 0; 1 1", o.render().join(" | ")));
    out.push(CheckReport::eq("|Omega~_i(C~_2, [0,2])|, i = 0..2", "[1, 2, 0]", format!("{:?}", o.partition_sizes())));

    let o = omega_tilde(&c2, &dis)?;
    out.push(CheckReport::eq("Omega~(C~_2, {0,1/2,2})", "1 1; 1 1", o.render().join(" | ")));
    out.push(CheckReport::eq("|Omega~_i(C~_2, {0,1/2,2})|, i = 0..2", "[0, 0, 1]", format!("{:?}", o.partition_sizes())));

    let o = omega_tilde(&a2, &cnt02)?;
    out.push(CheckReport::eq("|Omega~(A~_2, [0,2])|", "9", o.members.len()));
    let all_per_zero = o.supports().iter().all(|s| s.permanent_expansion().is_ok_and(|p| p.is_zero()));
    out.push(CheckReport::new("Omega~(A~_2, [0,2]) members have per 0", "true", all_per_zero.to_string(), all_per_zero));

    let inc = check_inclusion(Family::A, 2, &dis, &cnt02)?;
    out.push(CheckReport::eq("|Omega~(A~_2, {0,1/2,2})|", "10", inc.dis.len()));
    out.push(CheckReport::eq(
        "Omega~(A~_2, dis) \\ Omega~(A~_2, cnt)",
        "1 1; 1 1",
        inc.extra.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" | "),
    ));
    out.push(CheckReport::new("Omega~(A~_2, dis) contains Omega~(A~_2, cnt)", "true", inc.includes.to_string(), inc.includes));

    let inc = check_inclusion(Family::C, 2, &dis, &cnt02)?;
    out.push(CheckReport::new("Omega~(C~_2, dis) does not contain Omega~(C~_2, cnt)", "false", inc.includes.to_string(), !inc.includes));

    let bin = ValueSet::parse("0,1")?;
    let cnt01 = ValueSet::parse("[0,1]")?;
    let o = omega(&c2, &bin)?;
    out.push(CheckReport::eq("u(C_2, {0,1})", "0", &o.u));
    out.push(CheckReport::eq("Omega(C_2, {0,1})", "1 1; 1 1", o.render().join(" | ")));
    let o = omega_tilde(&c2, &bin)?;
    out.push(CheckReport::eq("Omega~(C~_2, {0,1})", "1 1; 1 1", o.render().join(" | ")));
    let inc = check_inclusion(Family::C, 2, &bin, &cnt01)?;
    out.push(CheckReport::new("Omega~(C~_2, [0,1]) and Omega~(C~_2, {0,1}) are disjoint", "true", inc.disjoint.to_string(), inc.disjoint));
    Ok(out)
}
