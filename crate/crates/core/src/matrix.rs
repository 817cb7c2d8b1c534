//! Exact matrices, permanents and determinants, and the three random matrix
//! families whose binary supports are counted elsewhere in the crate.
//!
//! All public indices are 1-based: `get(i, j)` is the entry in row `i`,
//! column `j`, matching the usual `m_ij` notation. Storage is 0-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest dimension for permutation-expansion based operations.
pub const MAX_EXPANSION_DIM: usize = 8;
/// Largest dimension accepted by [`BinaryMatrix`] (and Ryser's formula).
pub const MAX_BINARY_DIM: usize = 30;
/// Largest dimension of a [`TypeSpec`].
pub const MAX_TYPE_DIM: usize = 8;

fn check_dim(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::DimensionOutOfRange { n, min: 1, max });
    }
    Ok(())
}

/// Calls `f(perm, sign)` for every permutation of `0..n` (Heap's algorithm).
/// `sign` is +1 for even and -1 for odd permutations.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i8)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    f(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Square 0/1 matrix stored as one bitmask per row; bit `j` of row `i` is the
/// 0-based entry `(i, j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl BinaryMatrix {
    pub fn new(n: usize, rows: Vec<u32>) -> Result<Self> {
        check_dim(n, MAX_BINARY_DIM)?;
        if rows.len() != n {
            return Err(Error::SpecViolation(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let allowed = row_mask(n);
        if let Some(r) = rows.iter().position(|&r| r & !allowed != 0) {
            return Err(Error::SpecViolation(format!(
                "row {} has bits beyond column {n}",
                r + 1
            )));
        }
        Ok(BinaryMatrix { n, rows })
    }

    /// Builds from nested 0/1 rows, e.g. `&[&[1, 0], &[0, 1]]`.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let n = rows.len();
        let mut masks = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SpecViolation(format!("row {} is not length {n}", i + 1)));
            }
            let mut mask = 0u32;
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => mask |= 1 << j,
                    _ => return Err(Error::SpecViolation(format!("entry {v} is not 0/1"))),
                }
            }
            masks.push(mask);
        }
        BinaryMatrix::new(n, masks)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        BinaryMatrix::new(n, vec![0; n])
    }

    pub fn ones(n: usize) -> Result<Self> {
        check_dim(n, MAX_BINARY_DIM)?;
        BinaryMatrix::new(n, vec![row_mask(n); n])
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_dim(n, MAX_BINARY_DIM)?;
        BinaryMatrix::new(n, (0..n).map(|i| 1u32 << i).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i, j)?;
        Ok(self.rows[i - 1] >> (j - 1) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) -> Result<()> {
        self.check_index(i, j)?;
        if value {
            self.rows[i - 1] |= 1 << (j - 1);
        } else {
            self.rows[i - 1] &= !(1 << (j - 1));
        }
        Ok(())
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(())
    }

    pub fn count_ones(&self) -> u32 {
        self.rows.iter().map(|r| r.count_ones()).sum()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut rows = vec![0u32; self.n];
        for (i, &row) in self.rows.iter().enumerate() {
            for (j, out) in rows.iter_mut().enumerate() {
                *out |= (row >> j & 1) << i;
            }
        }
        BinaryMatrix { n: self.n, rows }
    }

    /// Every entry strictly below the diagonal is 0.
    pub fn is_upper_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &r)| r & ((1u32 << i) - 1) == 0)
    }

    /// Every entry strictly above the diagonal is 0.
    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for &row in &self.rows {
            for j in 0..self.n {
                entries.push(BigRational::from_integer(BigInt::from(row >> j & 1)));
            }
        }
        RationalMatrix { n: self.n, entries }
    }

    /// `sum over sigma of prod_i M[sigma(i), i]`, by enumerating all `n!`
    /// permutations.
    pub fn permanent_expansion(&self) -> Result<BigUint> {
        check_dim(self.n, MAX_EXPANSION_DIM)?;
        let mut count = 0u64;
        for_each_permutation(self.n, |perm, _| {
            if perm
                .iter()
                .enumerate()
                .all(|(col, &row)| self.rows[row] >> col & 1 == 1)
            {
                count += 1;
            }
        });
        Ok(BigUint::from(count))
    }

    /// Ryser's inclusion-exclusion formula over column subsets,
    /// `per(M) = (-1)^n sum_S (-1)^|S| prod_i |row_i ∩ S|`.
    pub fn permanent_ryser(&self) -> Result<BigUint> {
        check_dim(self.n, MAX_BINARY_DIM)?;
        let n = self.n;
        let mut acc = BigInt::zero();
        let mut partial: i128 = 0;
        let full = 1u64 << n;
        'subsets: for subset in 1..full {
            let subset = subset as u32;
            let mut product: u128 = 1;
            let mut overflow = false;
            for &row in &self.rows {
                let s = (row & subset).count_ones() as u128;
                if s == 0 {
                    continue 'subsets;
                }
                match product.checked_mul(s) {
                    Some(p) => product = p,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            let negative = (n as u32 - subset.count_ones()) % 2 == 1;
            if overflow {
                let big: BigInt = self
                    .rows
                    .iter()
                    .map(|&row| BigInt::from((row & subset).count_ones()))
                    .product();
                if negative {
                    acc -= big;
                } else {
                    acc += big;
                }
                continue;
            }
            let term = match i128::try_from(product) {
                Ok(t) if negative => t.checked_neg(),
                Ok(t) => Some(t),
                Err(_) => None,
            };
            match term.and_then(|t| partial.checked_add(t)) {
                Some(p) => partial = p,
                None => {
                    acc += BigInt::from(partial);
                    partial = 0;
                    let t = BigInt::from(product);
                    if negative {
                        acc -= t;
                    } else {
                        acc += t;
                    }
                }
            }
        }
        acc += BigInt::from(partial);
        Ok(acc
            .to_biguint()
            .expect("permanent of a 0/1 matrix is nonnegative"))
    }

    /// Whether the bipartite graph rows x columns with an edge at every
    /// 1-entry has a perfect matching, i.e. whether `per(M) > 0`.
    pub fn has_perfect_matching(&self) -> bool {
        has_perfect_matching(&self.rows)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix(")?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for BinaryMatrix {
    /// Rows separated by `;`, e.g. `1 0; 0 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", row >> j & 1)?;
            }
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn row_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Kuhn's augmenting-path matching on row bitmasks. Allocation-free for
/// `rows.len() <= 32`.
#[inline]
pub(crate) fn has_perfect_matching(rows: &[u32]) -> bool {
    let n = rows.len();
    debug_assert!(n <= 32);
    // match_of_col[c] = row matched to column c, or u8::MAX.
    let mut match_of_col = [u8::MAX; 32];
    for start in 0..n {
        if rows[start] == 0 {
            return false;
        }
        let mut visited = 0u32;
        if !augment(rows, start, &mut visited, &mut match_of_col) {
            return false;
        }
    }
    true
}

fn augment(rows: &[u32], row: usize, visited: &mut u32, match_of_col: &mut [u8; 32]) -> bool {
    let mut candidates = rows[row] & !*visited;
    while candidates != 0 {
        let col = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        *visited |= 1 << col;
        let owner = match_of_col[col];
        if owner == u8::MAX || augment(rows, owner as usize, visited, match_of_col) {
            match_of_col[col] = row as u8;
            return true;
        }
    }
    false
}

/// Square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionOutOfRange { n, min: 1, max: usize::MAX });
        }
        if entries.len() != n * n {
            return Err(Error::SpecViolation(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(RationalMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::SpecViolation("matrix is not square".into()));
        }
        RationalMatrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> Result<&BigRational> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(&self.entries[(i - 1) * self.n + (j - 1)])
    }

    fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    /// Bit `(i, j)` set iff the entry is nonzero.
    pub fn support(&self) -> BinaryMatrix {
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| !self.at(i, j).is_zero())
                    .fold(0u32, |m, j| m | 1 << j)
            })
            .collect();
        BinaryMatrix { n: self.n, rows }
    }

    /// Removes row `i` and column `j` (1-based).
    pub fn delete_row_col(&self, i: usize, j: usize) -> Result<RationalMatrix> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        if self.n < 2 {
            return Err(Error::DimensionOutOfRange { n: self.n, min: 2, max: usize::MAX });
        }
        let entries = (0..self.n)
            .filter(|&r| r != i - 1)
            .flat_map(|r| {
                (0..self.n)
                    .filter(move |&c| c != j - 1)
                    .map(move |c| self.at(r, c).clone())
            })
            .collect();
        Ok(RationalMatrix { n: self.n - 1, entries })
    }

    /// `(-1)^(i+j) det(delete_row_col(i, j))`.
    pub fn cofactor(&self, i: usize, j: usize) -> Result<BigRational> {
        let minor = self.delete_row_col(i, j)?.determinant();
        Ok(if (i + j).is_multiple_of(2) { minor } else { -minor })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Each row is
    /// first scaled to integers by the lcm of its denominators.
    pub fn determinant(&self) -> BigRational {
        let n = self.n;
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let lcm = row
                .iter()
                .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
            scale *= lcm;
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigRational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        BigRational::new(sign * &a[n - 1][n - 1], scale)
    }

    /// Determinant by signed permutation expansion (Leibniz), `n <= 8`.
    pub fn determinant_expansion(&self) -> Result<BigRational> {
        check_dim(self.n, MAX_EXPANSION_DIM)?;
        let mut sum = BigRational::zero();
        for_each_permutation(self.n, |perm, sign| {
            let mut term = BigRational::one();
            for (col, &row) in perm.iter().enumerate() {
                let v = self.at(row, col);
                if v.is_zero() {
                    return;
                }
                term *= v;
            }
            if sign > 0 {
                sum += term;
            } else {
                sum -= term;
            }
        });
        Ok(sum)
    }

    /// Permanent by permutation expansion, `n <= 8`.
    pub fn permanent_expansion(&self) -> Result<BigRational> {
        check_dim(self.n, MAX_EXPANSION_DIM)?;
        let mut sum = BigRational::zero();
        for_each_permutation(self.n, |perm, _| {
            let mut term = BigRational::one();
            for (col, &row) in perm.iter().enumerate() {
                let v = self.at(row, col);
                if v.is_zero() {
                    return;
                }
                term *= v;
            }
            sum += term;
        });
        Ok(sum)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix({self})")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        Ok(())
    }
}

impl FromStr for RationalMatrix {
    type Err = Error;

    /// Parses `"1 0 1/2; 0 1 0; 2 1 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_rows(rows)
    }
}

/// Parses an exact rational literal such as `3`, `-1/2` or `0.25`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidValueSet(format!("not a rational number: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = int_part.abs() * &den + frac_part;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(BigRational::new(num, den));
    }
    let v: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(v))
}

/// The three random matrix families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Every entry is variable.
    A,
    /// Unit diagonal except the variable entry (1, 1); off-diagonals variable.
    B,
    /// Unit diagonal; off-diagonals variable.
    C,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::B, Family::C];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::SpecViolation(format!("unknown family {other:?}"))),
        }
    }
}

/// A family at a fixed dimension: which positions are variable and the
/// derived counts `m`, `j_min`, `i_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeSpec {
    family: Family,
    n: usize,
    variable_mask: BinaryMatrix,
    m: usize,
    i_max: usize,
    j_min: usize,
}

impl TypeSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        check_dim(n, MAX_TYPE_DIM)?;
        let full = row_mask(n);
        let rows: Vec<u32> = (0..n)
            .map(|i| match family {
                Family::A => full,
                Family::B if i == 0 => full,
                Family::B | Family::C => full & !(1 << i),
            })
            .collect();
        let variable_mask = BinaryMatrix::new(n, rows)?;
        let m = variable_mask.count_ones() as usize;
        // Fewest zero-valued variable entries in a pertinent matrix: one zero
        // line for A/B, one side of every transposed pair for C.
        let j_min = match family {
            Family::A | Family::B => n,
            Family::C => (n * n - n) / 2,
        };
        Ok(TypeSpec {
            family,
            n,
            variable_mask,
            m,
            i_max: m - j_min,
            j_min,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variable_mask(&self) -> &BinaryMatrix {
        &self.variable_mask
    }

    /// Number of variable positions.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn j_min(&self) -> usize {
        self.j_min
    }

    /// Permanent value a pertinent support must have: 0 for A and B, 1 for C.
    pub fn target(&self) -> u32 {
        match self.family {
            Family::A | Family::B => 0,
            Family::C => 1,
        }
    }

    /// Mask of fixed positions (all fixed entries equal 1).
    pub fn fixed_rows(&self) -> Vec<u32> {
        let full = row_mask(self.n);
        self.variable_mask.rows().iter().map(|&r| full & !r).collect()
    }

    /// Variable positions as 0-based `(row, col)` pairs in row-major order.
    pub fn variable_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (i, &row) in self.variable_mask.rows().iter().enumerate() {
            for j in 0..self.n {
                if row >> j & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The support whose variable entries are the bits of `assignment`
    /// (bit `k` = `k`-th variable position in row-major order).
    pub fn assignment_to_matrix(&self, assignment: u64) -> BinaryMatrix {
        let mut rows = self.fixed_rows();
        for (k, (i, j)) in self.variable_positions().into_iter().enumerate() {
            if assignment >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        BinaryMatrix { n: self.n, rows }
    }

    /// Checks dimension and that every fixed position holds 1.
    pub fn check_respects(&self, matrix: &BinaryMatrix) -> Result<()> {
        if matrix.n() != self.n {
            return Err(Error::SpecViolation(format!(
                "matrix is {0}x{0}, family needs {1}x{1}",
                matrix.n(),
                self.n
            )));
        }
        for (i, (&row, fixed)) in matrix.rows().iter().zip(self.fixed_rows()).enumerate() {
            if row & fixed != fixed {
                let j = (fixed & !row).trailing_zeros() as usize;
                return Err(Error::SpecViolation(format!(
                    "fixed entry ({}, {}) is 0",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Number of one-valued variable entries of `matrix`.
    pub fn variable_ones(&self, matrix: &BinaryMatrix) -> usize {
        matrix
            .rows()
            .iter()
            .zip(self.variable_mask.rows())
            .map(|(r, v)| (r & v).count_ones() as usize)
            .sum()
    }

    /// Whether a rational matrix has this family's fixed entries (all 1).
    pub fn check_rational(&self, matrix: &RationalMatrix) -> Result<()> {
        if matrix.n() != self.n {
            return Err(Error::SpecViolation("dimension mismatch".into()));
        }
        for (i, fixed) in self.fixed_rows().into_iter().enumerate() {
            for j in 0..self.n {
                if fixed >> j & 1 == 1 && !matrix.at(i, j).is_one() {
                    return Err(Error::SpecViolation(format!(
                        "fixed entry ({}, {}) is not 1",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Number of nonzero variable entries of a rational matrix.
    pub fn variable_nonzeros(&self, matrix: &RationalMatrix) -> usize {
        self.variable_ones(&matrix.support())
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// Converts an exact rational to the nearest `f64`.
pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
