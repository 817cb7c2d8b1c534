//! Edge-counting polynomials of labeled DAGs from a weighted power series.
//!
//! A [`WeightedSeries`] stores integer polynomials `a_n(t)` standing for the
//! series `sum_n a_n(t) z^n / (n! (1+t)^C(n,2))`. In that basis the product of
//! two series is the weighted convolution
//!
//! ```text
//! c_n(t) = sum_j C(n, j) (1+t)^(j(n-j)) a_j(t) b_(n-j)(t)
//! ```
//!
//! which never divides, so everything stays in `Z[t]`. The series
//! `Z(-z, t)` is simply `a_n = (-1)^n`, and the `n`-th term of its reciprocal
//! is `Y_n(t) = sum_e H_n(e) t^e`, the number of labeled DAGs on `n` vertices
//! counted by edges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::enumeration::{CoefficientTable, Route};
use crate::matrix::{Family, TypeSpec};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Largest `n` accepted by [`compute_y`].
pub const MAX_GF_DIM: usize = 24;

/// Truncated series in the weighted basis; `terms[n]` is `a_n(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSeries {
    terms: Vec<IntPolynomial>,
}

/// Memoized `(1+t)^k` and binomial rows.
#[derive(Default)]
struct Powers {
    one_plus_t: Vec<IntPolynomial>,
    binomial_rows: Vec<Vec<BigInt>>,
}

impl Powers {
    fn one_plus_t(&mut self, k: usize) -> &IntPolynomial {
        if self.one_plus_t.is_empty() {
            self.one_plus_t.push(IntPolynomial::constant(BigInt::one()));
        }
        let step = IntPolynomial::one_plus_x_pow(1);
        while self.one_plus_t.len() <= k {
            let next = self.one_plus_t.last().unwrap() * &step;
            self.one_plus_t.push(next);
        }
        &self.one_plus_t[k]
    }

    fn binomial(&mut self, n: usize, k: usize) -> BigInt {
        while self.binomial_rows.len() <= n {
            let row = match self.binomial_rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigInt::one());
                    for w in prev.windows(2) {
                        row.push(&w[0] + &w[1]);
                    }
                    row.push(BigInt::one());
                    row
                }
            };
            self.binomial_rows.push(row);
        }
        self.binomial_rows[n][k].clone()
    }

    /// `C(n, k) (1+t)^(k(n-k))`.
    fn weight(&mut self, n: usize, k: usize) -> IntPolynomial {
        let c = self.binomial(n, k);
        self.one_plus_t(k * (n - k)).scale(&c)
    }
}

impl WeightedSeries {
    pub fn new(terms: Vec<IntPolynomial>) -> Self {
        WeightedSeries { terms }
    }

    pub fn terms(&self) -> &[IntPolynomial] {
        &self.terms
    }

    /// Highest stored power of `z`.
    pub fn order(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// `[1, 0, 0, ...]`.
    pub fn unit(order: usize) -> Self {
        let mut terms = vec![IntPolynomial::zero(); order + 1];
        terms[0] = IntPolynomial::constant(BigInt::one());
        WeightedSeries { terms }
    }

    /// Product under the weighted convolution, truncated to the shorter
    /// order.
    pub fn multiply(&self, other: &WeightedSeries) -> WeightedSeries {
        let order = self.order().min(other.order());
        let mut powers = Powers::default();
        let terms = (0..=order)
            .map(|n| {
                (0..=n).fold(IntPolynomial::zero(), |acc, j| {
                    if self.terms[j].is_zero() || other.terms[n - j].is_zero() {
                        return acc;
                    }
                    let w = powers.weight(n, j);
                    &acc + &(&(&w * &self.terms[j]) * &other.terms[n - j])
                })
            })
            .collect();
        WeightedSeries { terms }
    }

    /// Multiplicative inverse by the forward recurrence
    /// `R_n = -sum_{k=1..n} C(n,k) (1+t)^(k(n-k)) S_k R_(n-k)`.
    pub fn reciprocal(&self) -> Result<WeightedSeries> {
        if self.terms.first() != Some(&IntPolynomial::constant(BigInt::one())) {
            return Err(Error::NonUnitLeadingTerm);
        }
        let mut powers = Powers::default();
        let mut r: Vec<IntPolynomial> = Vec::with_capacity(self.terms.len());
        r.push(IntPolynomial::constant(BigInt::one()));
        for n in 1..self.terms.len() {
            let mut sum = IntPolynomial::zero();
            for k in 1..=n {
                if self.terms[k].is_zero() || r[n - k].is_zero() {
                    continue;
                }
                let w = powers.weight(n, k);
                sum = &sum + &(&(&w * &self.terms[k]) * &r[n - k]);
            }
            r.push(-sum);
        }
        Ok(WeightedSeries { terms: r })
    }

    /// Ordinary coefficients of `z^n` at a rational `t`:
    /// `a_n(t) / (n! (1+t)^C(n,2))`.
    pub fn coefficients_at(&self, t: &BigRational) -> Vec<BigRational> {
        let base = BigRational::one() + t;
        let mut fact = BigInt::one();
        self.terms
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    fact *= n;
                }
                let num = a.to_rational().eval(t);
                let den = BigRational::from_integer(fact.clone())
                    * num_traits::pow(base.clone(), n * n.saturating_sub(1) / 2);
                num / den
            })
            .collect()
    }
}

/// `Z(z, t)` truncated at `z^order`: every weighted term is 1.
pub fn z_series(order: usize) -> WeightedSeries {
    WeightedSeries::new(vec![IntPolynomial::constant(BigInt::one()); order + 1])
}

/// `Z(-z, t)` truncated at `z^order`: weighted terms `(-1)^n`.
pub fn z_series_neg(order: usize) -> WeightedSeries {
    WeightedSeries::new(
        (0..=order)
            .map(|n| IntPolynomial::constant(if n % 2 == 0 { BigInt::one() } else { -BigInt::one() }))
            .collect(),
    )
}

/// `Y_n(t) = sum_e H_n(e) t^e`, the DAG edge polynomial on `n` vertices.
pub fn compute_y(n: usize) -> Result<IntPolynomial> {
    compute_y_with_order(n, n)
}

/// [`compute_y`] from a series truncated at `order >= n`; the result does
/// not depend on `order`.
pub fn compute_y_with_order(n: usize, order: usize) -> Result<IntPolynomial> {
    if n == 0 || n > MAX_GF_DIM {
        return Err(Error::DimensionOutOfRange { n, min: 1, max: MAX_GF_DIM });
    }
    if order < n {
        return Err(Error::SpecViolation(format!(
            "series order {order} is below n = {n}"
        )));
    }
    let r = z_series_neg(order).reciprocal()?;
    Ok(r.terms[n].clone())
}

/// Family-C coefficient table read off `Y_n(t)`.
pub fn h_table_gf(n: usize) -> Result<CoefficientTable> {
    let spec = TypeSpec::new(Family::C, n)?;
    let y = compute_y(n)?;
    if y.degree() != Some(spec.i_max()) {
        return Err(Error::InvalidTable(format!(
            "Y_{n} has degree {:?}, expected {}",
            y.degree(),
            spec.i_max()
        )));
    }
    let coeffs = y
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_negative() {
                Err(Error::InvalidTable(format!("negative coefficient {c}")))
            } else {
                Ok(c.magnitude().clone())
            }
        })
        .collect::<Result<_>>()?;
    CoefficientTable::new(spec, coeffs, Route::GeneratingFunction)
}

/// `H_n(e)` through literal repeated differentiation of `Y_n` at `t = 0`.
pub fn h_by_derivative(n: usize, e: usize) -> Result<BigInt> {
    Ok(compute_y(n)?.coefficient_by_derivative(e))
}
