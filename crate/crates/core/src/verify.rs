//! Named verification suites. Each suite recomputes a group of published
//! values and returns one [`CheckReport`] per claim.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dag::{count_dags_by_edges_with, is_acyclic, matrix_to_digraph};
use crate::discrete::{bifurcation_check, check_inclusion, omega_instances, prop6_witnesses, ValueSet};
use crate::enumeration::{count_pertinent_with, CoefficientTable};
use crate::genfunc::{compute_y, h_table_gf};
use crate::matrix::{BinaryMatrix, Family, TypeSpec};
use crate::probability::ProbabilityPolynomial;
use crate::report::CheckReport;
use crate::{Error, Parallelism, Result};

/// Family A rows, `F_n(i)` for `n = 1..=5`.
pub const F_ROWS: [&[u64]; 5] = [
    &[1],
    &[1, 4, 4],
    &[1, 9, 36, 78, 90, 45, 6],
    &[1, 16, 120, 560, 1796, 4080, 6496, 6976, 4860, 2128, 576, 96, 8],
    &[
        1, 25, 300, 2300, 12650, 53010, 174700, 458500, 956775, 1571525, 2010920, 1994200,
        1534800, 923700, 439600, 166720, 50025, 11500, 1900, 200, 10,
    ],
];

/// Family B rows, `G_n(i)` for `n = 1..=5`.
pub const G_ROWS: [&[u64]; 5] = [
    &[1],
    &[1, 2],
    &[1, 6, 13, 10, 2],
    &[1, 12, 63, 184, 315, 324, 203, 78, 18, 2],
    &[
        1, 20, 186, 1056, 4035, 10836, 21032, 30212, 32829, 27520, 18062, 9324, 3741, 1128, 240,
        32, 2,
    ],
];

/// Family C rows, `H_n(i)` for `n = 1..=5`.
pub const H_ROWS: [&[u64]; 5] = [
    &[1],
    &[1, 2],
    &[1, 6, 12, 6],
    &[1, 12, 60, 152, 186, 108, 24],
    &[1, 20, 180, 940, 3050, 6180, 7960, 6540, 3330, 960, 120],
];

/// Totals `f_n`, `n = 1..=5`.
pub const F_TOTALS: [u64; 5] = [1, 9, 265, 27713, 10363661];

/// Totals `h_n` (labeled DAGs), `n = 1..=5`.
pub const H_TOTALS: [u64; 5] = [1, 3, 25, 543, 29281];

pub fn frozen_row(family: Family, n: usize) -> Option<&'static [u64]> {
    let rows = match family {
        Family::A => &F_ROWS,
        Family::B => &G_ROWS,
        Family::C => &H_ROWS,
    };
    n.checked_sub(1).and_then(|k| rows.get(k)).copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Tables,
    Routes,
    Worked,
    Sloane,
    Prop3,
    Matching,
    Normalization,
    Prop6,
    Prop7,
    Bifurcation,
    Omega,
    All,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Tables,
        Suite::Routes,
        Suite::Worked,
        Suite::Sloane,
        Suite::Prop3,
        Suite::Matching,
        Suite::Normalization,
        Suite::Prop6,
        Suite::Prop7,
        Suite::Bifurcation,
        Suite::Omega,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Routes => "routes",
            Suite::Worked => "worked",
            Suite::Sloane => "sloane",
            Suite::Prop3 => "prop3",
            Suite::Matching => "matching",
            Suite::Normalization => "normalization",
            Suite::Prop6 => "prop6",
            Suite::Prop7 => "prop7",
            Suite::Bifurcation => "bifurcation",
            Suite::Omega => "omega",
            Suite::All => "all",
        }
    }

    /// Largest `n` the suite runs at when none is given.
    pub fn default_n(self) -> usize {
        match self {
            Suite::Prop3 | Suite::Matching => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::SpecViolation(format!("unknown suite {s:?}")))
    }
}

/// Runs `suite` up to dimension `n` (the suite default when `None`).
pub fn run(suite: Suite, n: Option<usize>, par: Parallelism) -> Result<Vec<CheckReport>> {
    let nmax = n.unwrap_or(suite.default_n());
    match suite {
        Suite::Tables => tables(nmax, par),
        Suite::Routes => routes(nmax, par),
        Suite::Worked => worked(),
        Suite::Sloane => sloane(nmax, par),
        Suite::Prop3 => prop3(nmax),
        Suite::Matching => matching(nmax),
        Suite::Normalization => normalization(nmax, par),
        Suite::Prop6 => prop6_witnesses(),
        Suite::Prop7 => prop7(),
        Suite::Bifurcation => bifurcation(),
        Suite::Omega => omega_instances(),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::ALL.into_iter().filter(|&s| s != Suite::All) {
                out.extend(run(s, n, par)?);
            }
            Ok(out)
        }
    }
}

fn render_row(c: &[BigUint]) -> String {
    format!(
        "[{}]",
        c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    )
}

fn render_frozen(c: &[u64]) -> String {
    format!(
        "[{}]",
        c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    )
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::DimensionOutOfRange { n, min: 1, max });
    }
    Ok(())
}

/// Enumerated tables against the frozen rows, every family, `1..=nmax`.
pub fn tables(nmax: usize, par: Parallelism) -> Result<Vec<CheckReport>> {
    check_n(nmax, 5)?;
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in 1..=nmax {
            let spec = TypeSpec::new(family, n)?;
            let table = count_pertinent_with(&spec, par)?;
            let frozen = frozen_row(family, n).expect("n <= 5");
            out.push(CheckReport::eq(
                &format!("table {spec}"),
                &render_frozen(frozen),
                render_row(table.coeffs()),
            ));
        }
    }
    Ok(out)
}

/// Enumeration, census and generating function agree on family C.
pub fn routes(nmax: usize, par: Parallelism) -> Result<Vec<CheckReport>> {
    check_n(nmax, 5)?;
    let mut out = Vec::new();
    for n in 1..=nmax {
        let spec = TypeSpec::new(Family::C, n)?;
        let e = count_pertinent_with(&spec, par)?;
        let d = count_dags_by_edges_with(n, par)?;
        let g = h_table_gf(n)?;
        let same = e.same_counts(&d) && d.same_counts(&g);
        out.push(CheckReport::new(
            &format!("routes agree on {spec}"),
            &render_frozen(frozen_row(Family::C, n).expect("n <= 5")),
            format!(
                "enumeration {} dag {} gf {}",
                render_row(e.coeffs()),
                render_row(d.coeffs()),
                render_row(g.coeffs())
            ),
            same && render_row(e.coeffs()) == render_frozen(frozen_row(Family::C, n).expect("n <= 5")),
        ));
    }
    Ok(out)
}

/// The worked generating-function example at `n = 4`.
pub fn worked() -> Result<Vec<CheckReport>> {
    let y4 = compute_y(4)?;
    let spec = TypeSpec::new(Family::C, 4)?;
    let p = ProbabilityPolynomial::build(&spec, h_table_gf(4)?)?;
    Ok(vec![
        CheckReport::eq(
            "Y_4(t)",
            "1 + 12*t + 60*t^2 + 152*t^3 + 186*t^4 + 108*t^5 + 24*t^6",
            y4.render("t"),
        ),
        CheckReport::eq(
            "P(per C~_4 = 1)",
            "1*(1-r)^12 + 12*r*(1-r)^11 + 60*r^2*(1-r)^10 + 152*r^3*(1-r)^9 + 186*r^4*(1-r)^8 + 108*r^5*(1-r)^7 + 24*r^6*(1-r)^6",
            p.render(),
        ),
    ])
}

/// Totals against the quoted integer sequences, plus `g_n` self-consistency.
pub fn sloane(nmax: usize, par: Parallelism) -> Result<Vec<CheckReport>> {
    check_n(nmax, 5)?;
    let mut out = Vec::new();
    for n in 1..=nmax {
        let a = count_pertinent_with(&TypeSpec::new(Family::A, n)?, par)?;
        out.push(CheckReport::eq(&format!("f_{n}"), &F_TOTALS[n - 1].to_string(), a.total()));
        let c = h_table_gf(n)?;
        out.push(CheckReport::eq(&format!("h_{n}"), &H_TOTALS[n - 1].to_string(), c.total()));
        let b = count_pertinent_with(&TypeSpec::new(Family::B, n)?, par)?;
        let g: u64 = G_ROWS[n - 1].iter().sum();
        out.push(CheckReport::eq(&format!("g_{n}"), &g.to_string(), b.total()));
    }
    Ok(out)
}

/// Family-C supports: permanent 1 exactly when the digraph `S - I` is
/// acyclic. Counts exceptions.
pub fn prop3(nmax: usize) -> Result<Vec<CheckReport>> {
    check_n(nmax, 5)?;
    let mut out = Vec::new();
    for n in 1..=nmax {
        let spec = TypeSpec::new(Family::C, n)?;
        let mut exceptions = 0u64;
        let total = 1u64 << spec.m();
        for a in 0..total {
            let s = spec.assignment_to_matrix(a);
            let per_one = s.permanent_ryser()?.is_one();
            let acyclic = is_acyclic(&matrix_to_digraph(&s)?);
            if per_one != acyclic {
                exceptions += 1;
            }
        }
        out.push(CheckReport::eq(
            &format!("per = 1 iff acyclic over {total} supports of {spec}"),
            "0 exceptions",
            format!("{exceptions} exceptions"),
        ));
    }
    Ok(out)
}

/// Every `n x n` binary matrix: permanent 0 exactly when no perfect matching.
pub fn matching(nmax: usize) -> Result<Vec<CheckReport>> {
    check_n(nmax, 4)?;
    let mut out = Vec::new();
    for n in 1..=nmax {
        let mut exceptions = 0u64;
        let total = 1u64 << (n * n);
        for bits in 0..total {
            let rows = (0..n).map(|i| ((bits >> (i * n)) as u32) & ((1 << n) - 1)).collect();
            let m = BinaryMatrix::new(n, rows)?;
            if m.permanent_expansion()?.is_zero() == m.has_perfect_matching() {
                exceptions += 1;
            }
        }
        out.push(CheckReport::eq(
            &format!("per = 0 iff no perfect matching over {total} matrices, n = {n}"),
            "0 exceptions",
            format!("{exceptions} exceptions"),
        ));
    }
    Ok(out)
}

/// `P(1/2) * 2^m` equals the table total.
pub fn normalization(nmax: usize, par: Parallelism) -> Result<Vec<CheckReport>> {
    check_n(nmax, 5)?;
    let half = BigRational::new(1.into(), 2.into());
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in 1..=nmax {
            let spec = TypeSpec::new(family, n)?;
            let table: CoefficientTable = match family {
                Family::C => h_table_gf(n)?,
                _ => count_pertinent_with(&spec, par)?,
            };
            let total = table.total();
            let p = ProbabilityPolynomial::build(&spec, table)?;
            let scaled = p.evaluate(&half)? * BigRational::from_integer(num_traits::pow(2.into(), spec.m()));
            out.push(CheckReport::eq(
                &format!("P_{spec}(1/2) * 2^{}", spec.m()),
                &total.to_string(),
                scaled,
            ));
        }
    }
    Ok(out)
}

/// Inclusion of the binary attaining sets.
pub fn prop7() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let cases = [
        ("0,1/2,2", "[0,2]"),
        ("0,1", "[0,1]"),
        ("0,1/2", "[0,1]"),
        ("0,1/2,1,2", "[0,2]"),
        ("0,-1,1", "[-1,1]"),
    ];
    for (dis, cnt) in cases {
        let d = ValueSet::parse(dis)?;
        let c = ValueSet::parse(cnt)?;
        for family in [Family::A, Family::B] {
            for n in 2..=3 {
                let r = check_inclusion(family, n, &d, &c)?;
                out.push(CheckReport::new(
                    &format!("Omega~({family}~_{n}, {d}) contains Omega~({family}~_{n}, {c})"),
                    "true",
                    r.includes.to_string(),
                    r.includes,
                ));
            }
        }
    }
    let r = check_inclusion(
        Family::C,
        2,
        &ValueSet::parse("0,1/2,2")?,
        &ValueSet::parse("[0,2]")?,
    )?;
    out.push(CheckReport::new(
        "Omega~(C~_2, {0,1/2,2}) contains Omega~(C~_2, [0,2])",
        "false",
        r.includes.to_string(),
        !r.includes,
    ));
    Ok(out)
}

pub fn bifurcation() -> Result<Vec<CheckReport>> {
    let r = bifurcation_check()?;
    Ok(vec![
        CheckReport::eq("P(det C_2 = 1), X = [0,1]", "1 + -1*r^2", r.continuous.render("r")),
        CheckReport::eq("P(det C_2 = 0), X = {0,1}", "r^2", r.discrete.render("r")),
        CheckReport::eq("sum", "1", r.sum.render("r")),
        CheckReport::eq("u(C_2, [0,1])", "1", &r.u_continuous),
        CheckReport::eq("u(C_2, {0,1})", "0", &r.u_discrete),
    ])
}
