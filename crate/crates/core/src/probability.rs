//! Least-change probabilities as polynomials in the nonzero probability `r`.
//!
//! For a family with `m` variable entries and table `E(i)`,
//! `P(r) = sum_i E(i) r^i (1-r)^(m-i)`. The Bernstein-like form is the primary
//! representation; the monomial expansion exists for cross-checks.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumeration::{count_pertinent_with, CoefficientTable};
use crate::exec::map_reduce;
use crate::genfunc::h_table_gf;
use crate::matrix::{rational_to_f64, Family, TypeSpec};
use crate::poly::IntPolynomial;
use crate::{Error, Parallelism, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityPolynomial {
    table: CoefficientTable,
}

/// One Bernstein-form term `coeff * r^ones * (1-r)^zeros`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigUint,
    pub ones: usize,
    pub zeros: usize,
}

fn check_domain(r: &BigRational) -> Result<()> {
    if r.is_negative() || *r > BigRational::one() {
        return Err(Error::Domain(r.to_string()));
    }
    Ok(())
}

impl ProbabilityPolynomial {
    pub fn build(spec: &TypeSpec, table: CoefficientTable) -> Result<Self> {
        if table.spec() != spec {
            return Err(Error::SpecMismatch);
        }
        Ok(ProbabilityPolynomial { table })
    }

    pub fn spec(&self) -> &TypeSpec {
        self.table.spec()
    }

    pub fn table(&self) -> &CoefficientTable {
        &self.table
    }

    pub fn terms(&self) -> Vec<Term> {
        let m = self.spec().m();
        self.table
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| Term {
                coeff: c.clone(),
                ones: i,
                zeros: m - i,
            })
            .collect()
    }

    /// Exact value at rational `r`. With `r = p/q` this is
    /// `sum_i E(i) p^i (q-p)^(m-i) / q^m`, all in integers.
    pub fn evaluate(&self, r: &BigRational) -> Result<BigRational> {
        check_domain(r)?;
        let m = self.spec().m();
        let p = r.numer();
        let q = r.denom();
        let qp = q - p;
        let mut num = BigInt::zero();
        let mut p_pow = BigInt::one();
        for (i, c) in self.table.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num += BigInt::from(c.clone()) * &p_pow * num_traits::pow(qp.clone(), m - i);
            }
            p_pow *= p;
        }
        Ok(BigRational::new(num, num_traits::pow(q.clone(), m)))
    }

    pub fn evaluate_f64(&self, r: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(r.to_string()));
        }
        let m = self.spec().m() as i32;
        Ok(self
            .table
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let c = rational_to_f64(&BigRational::from_integer(BigInt::from(c.clone())));
                c * r.powi(i as i32) * (1.0 - r).powi(m - i as i32)
            })
            .sum())
    }

    /// Expansion in powers of `r`.
    pub fn to_monomial(&self) -> IntPolynomial {
        let m = self.spec().m();
        let one_minus_r = IntPolynomial::new(vec![BigInt::one(), -BigInt::one()]);
        self.table
            .coeffs()
            .iter()
            .enumerate()
            .fold(IntPolynomial::zero(), |acc, (i, c)| {
                let term = &IntPolynomial::monomial(BigInt::from(c.clone()), i)
                    * &one_minus_r.pow(m - i);
                &acc + &term
            })
    }

    /// Renders as `1*(1-r)^4 + 4*r*(1-r)^3 + ...`.
    pub fn render(&self) -> String {
        self.terms()
            .iter()
            .map(|t| {
                let mut s = t.coeff.to_string();
                match t.ones {
                    0 => {}
                    1 => s.push_str("*r"),
                    k => s.push_str(&format!("*r^{k}")),
                }
                match t.zeros {
                    0 => {}
                    1 => s.push_str("*(1-r)"),
                    k => s.push_str(&format!("*(1-r)^{k}")),
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Probability polynomials of the three families at one dimension.
#[derive(Debug, Clone)]
pub struct FamilyCurves {
    pub n: usize,
    pub a: ProbabilityPolynomial,
    pub b: ProbabilityPolynomial,
    pub c: ProbabilityPolynomial,
}

/// `r`, then `P_A(r)`, `P_B(r)`, `P_C(r)`, all exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSample {
    pub r: BigRational,
    pub p_a: BigRational,
    pub p_b: BigRational,
    pub p_c: BigRational,
}

impl CurveSample {
    pub fn as_f64(&self) -> [f64; 4] {
        [&self.r, &self.p_a, &self.p_b, &self.p_c].map(rational_to_f64)
    }

    /// `P_A > P_B > P_C` and `P_A - P_B > P_B - P_C`.
    pub fn chain_holds(&self) -> bool {
        self.p_a > self.p_b
            && self.p_b > self.p_c
            && (&self.p_a - &self.p_b) > (&self.p_b - &self.p_c)
    }
}

impl FamilyCurves {
    /// Tables by enumeration for A and B, by generating function for C.
    pub fn for_dimension(n: usize, par: Parallelism) -> Result<Self> {
        let a = TypeSpec::new(Family::A, n)?;
        let b = TypeSpec::new(Family::B, n)?;
        let c = TypeSpec::new(Family::C, n)?;
        Ok(FamilyCurves {
            n,
            a: ProbabilityPolynomial::build(&a, count_pertinent_with(&a, par)?)?,
            b: ProbabilityPolynomial::build(&b, count_pertinent_with(&b, par)?)?,
            c: ProbabilityPolynomial::build(&c, h_table_gf(n)?)?,
        })
    }

    pub fn sample(&self, r: &BigRational) -> Result<CurveSample> {
        Ok(CurveSample {
            r: r.clone(),
            p_a: self.a.evaluate(r)?,
            p_b: self.b.evaluate(r)?,
            p_c: self.c.evaluate(r)?,
        })
    }

    /// Samples at every grid point in `points`, in order.
    pub fn sample_all(&self, points: &[BigRational], par: Parallelism) -> Result<Vec<CurveSample>> {
        map_reduce(
            points.len() as u64,
            par,
            |range| {
                range
                    .map(|k| self.sample(&points[k as usize]))
                    .collect::<Result<Vec<_>>>()
            },
            |a, b| {
                let mut a = a?;
                a.extend(b?);
                Ok(a)
            },
        )?
    }

    /// Writes `r,P_A,P_B,P_C` rows over the interior grid `k * step`.
    pub fn emit_curve<W: Write>(
        &self,
        step: &BigRational,
        sink: &mut W,
        par: Parallelism,
    ) -> Result<Vec<CurveSample>> {
        let samples = self.sample_all(&interior_grid(step)?, par)?;
        write_curve_csv(&samples, sink).map_err(|e| Error::SpecViolation(e.to_string()))?;
        Ok(samples)
    }

    pub fn scan_chain(
        &self,
        lo: &BigRational,
        hi: &BigRational,
        step: &BigRational,
        par: Parallelism,
    ) -> Result<ChainScan> {
        let points = grid(lo, hi, step)?;
        let samples = self.sample_all(&points, par)?;
        Ok(ChainScan {
            points: samples.iter().map(|s| (s.r.clone(), s.chain_holds())).collect(),
        })
    }
}

/// Convenience wrapper: builds the three curves at `n` and writes the CSV.
pub fn emit_curve<W: Write>(n: usize, step: &BigRational, sink: &mut W) -> Result<Vec<CurveSample>> {
    FamilyCurves::for_dimension(n, Parallelism::default())?.emit_curve(step, sink, Parallelism::default())
}

/// Where the ordering chain holds along a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainScan {
    pub points: Vec<(BigRational, bool)>,
}

impl ChainScan {
    pub fn never_holds(&self) -> bool {
        self.points.iter().all(|(_, h)| !h)
    }

    pub fn always_holds(&self) -> bool {
        self.points.iter().all(|(_, h)| *h)
    }

    /// `(last r where the chain fails, next grid r)`; the chain holds at
    /// every grid point from the second value on. `None` when the chain
    /// never fails or fails at the last grid point.
    pub fn boundary(&self) -> Option<(BigRational, BigRational)> {
        let last_fail = self.points.iter().rposition(|(_, h)| !h)?;
        let next = self.points.get(last_fail + 1)?;
        Some((self.points[last_fail].0.clone(), next.0.clone()))
    }

    pub fn first_failure(&self) -> Option<&BigRational> {
        self.points.iter().find(|(_, h)| !h).map(|(r, _)| r)
    }
}

/// Scans `lo, lo+step, ..., <= hi` at dimension `n` for the ordering chain.
pub fn find_order_violation(
    n: usize,
    lo: &BigRational,
    hi: &BigRational,
    step: &BigRational,
) -> Result<ChainScan> {
    FamilyCurves::for_dimension(n, Parallelism::default())?.scan_chain(lo, hi, step, Parallelism::default())
}

/// `k * step` for `k = 1, 2, ...` strictly inside `(0, 1)`.
pub fn interior_grid(step: &BigRational) -> Result<Vec<BigRational>> {
    if !step.is_positive() || *step >= BigRational::one() {
        return Err(Error::Domain(format!("grid step {step}")));
    }
    let mut out = Vec::new();
    let mut r = step.clone();
    while r < BigRational::one() {
        out.push(r.clone());
        r += step;
    }
    Ok(out)
}

/// `lo, lo + step, ...` up to and including `hi`.
pub fn grid(lo: &BigRational, hi: &BigRational, step: &BigRational) -> Result<Vec<BigRational>> {
    if !step.is_positive() {
        return Err(Error::Domain(format!("grid step {step}")));
    }
    check_domain(lo)?;
    check_domain(hi)?;
    let mut out = Vec::new();
    let mut r = lo.clone();
    while r <= *hi {
        out.push(r.clone());
        r += step;
    }
    Ok(out)
}

pub fn write_curve_csv<W: Write>(samples: &[CurveSample], sink: &mut W) -> std::io::Result<()> {
    writeln!(sink, "r,P_A,P_B,P_C")?;
    for s in samples {
        let v = s.as_f64();
        writeln!(
            sink,
            "{},{},{},{}",
            format_sig17(v[0]),
            format_sig17(v[1]),
            format_sig17(v[2]),
            format_sig17(v[3])
        )?;
    }
    Ok(())
}

/// Plain decimal with exactly 17 significant digits.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.16e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let sign = if x < 0.0 { "-" } else { "" };
    if exp < 0 {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            format!("{sign}{digits}{}", "0".repeat(point - digits.len()))
        } else {
            format!("{sign}{}.{}", &digits[..point], &digits[point..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::parse_rational;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn poly(f: Family, n: usize) -> ProbabilityPolynomial {
        let s = TypeSpec::new(f, n).unwrap();
        ProbabilityPolynomial::build(&s, count_pertinent_with(&s, Parallelism::Sequential).unwrap())
            .unwrap()
    }

    #[test]
    fn a2_values() {
        let p = poly(Family::A, 2);
        assert_eq!(p.evaluate(&q("1/2")).unwrap(), q("9/16"));
        assert_eq!(p.evaluate(&q("0")).unwrap(), q("1"));
        assert_eq!(p.evaluate(&q("1")).unwrap(), q("0"));
        assert_eq!(p.render(), "1*(1-r)^4 + 4*r*(1-r)^3 + 4*r^2*(1-r)^2");
    }

    #[test]
    fn c1_is_constant_one() {
        let p = poly(Family::C, 1);
        assert_eq!(p.to_monomial(), IntPolynomial::constant(BigInt::one()));
        assert_eq!(p.evaluate(&q("3/7")).unwrap(), q("1"));
    }

    #[test]
    fn domain_errors() {
        let p = poly(Family::A, 2);
        assert!(matches!(p.evaluate(&q("-1/2")), Err(Error::Domain(_))));
        assert!(matches!(p.evaluate(&q("3/2")), Err(Error::Domain(_))));
        assert!(p.evaluate_f64(1.5).is_err());
    }

    #[test]
    fn spec_mismatch_rejected() {
        let a = TypeSpec::new(Family::A, 2).unwrap();
        let b = TypeSpec::new(Family::B, 2).unwrap();
        let t = count_pertinent_with(&b, Parallelism::Sequential).unwrap();
        assert_eq!(ProbabilityPolynomial::build(&a, t), Err(Error::SpecMismatch));
    }

    #[test]
    fn monomial_basis_agrees() {
        for f in Family::ALL {
            let p = poly(f, 3);
            let mono = p.to_monomial().to_rational();
            for k in 0..=10 {
                let r = BigRational::new(k.into(), 10.into());
                assert_eq!(mono.eval(&r), p.evaluate(&r).unwrap());
            }
        }
    }

    #[test]
    fn grids() {
        assert_eq!(interior_grid(&q("1/4")).unwrap().len(), 3);
        assert_eq!(interior_grid(&q("0.01")).unwrap().len(), 99);
        assert!(interior_grid(&q("0")).is_err());
        assert_eq!(grid(&q("0.1"), &q("0.3"), &q("0.1")).unwrap().len(), 3);
    }

    #[test]
    fn sig17_formatting() {
        assert_eq!(format_sig17(0.01), "0.010000000000000000");
        assert_eq!(format_sig17(0.5), "0.50000000000000000");
        assert_eq!(format_sig17(1.0), "1.0000000000000000");
        assert_eq!(format_sig17(0.0), "0");
        for x in [0.308_850_526_809_692_4, 1e-12, 0.123456789, 12345.678] {
            assert_eq!(format_sig17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn n1_chain_never_holds() {
        let curves = FamilyCurves::for_dimension(1, Parallelism::Sequential).unwrap();
        let scan = curves
            .scan_chain(&q("0.01"), &q("0.99"), &q("0.01"), Parallelism::Sequential)
            .unwrap();
        assert!(scan.never_holds());
        assert!(scan.boundary().is_none());
    }
}
