//! Invariants read off a rank table: the Jones polynomial, the determinant,
//! unknot certificates and the rank bounds.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kh::{GradedComplex, RankTable};

/// Integer Laurent polynomial in `q`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn new(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        LaurentPoly { coeffs }
    }

    pub fn one() -> Self {
        LaurentPoly::new([(0, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// `p(q^-1)`.
    pub fn invert(&self) -> Self {
        LaurentPoly::new(self.terms().map(|(e, c)| (-e, c)))
    }

    /// `p(q^k)`.
    pub fn substitute_power(&self, k: i32) -> Self {
        LaurentPoly::new(self.terms().map(|(e, c)| (e * k, c)))
    }

    pub fn mul(&self, other: &LaurentPoly) -> Self {
        LaurentPoly::new(self.terms().flat_map(|(e, c)| other.terms().map(move |(f, d)| (e + f, c * d))))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms `coef*q^exp`, joined by ` + `, in increasing exponent; `0` for the
    /// zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("{c}*q^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn sign(i: i32) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Graded Euler characteristic `sum (-1)^i q^j dim`.
pub fn jones(t: &RankTable) -> LaurentPoly {
    LaurentPoly::new(t.iter().map(|((i, j), v)| (j, sign(i) * v as i64)))
}

/// The same polynomial computed from chain groups instead of homology.
pub fn jones_from_complex(c: &GradedComplex) -> LaurentPoly {
    LaurentPoly::new(c.euler_terms())
}

/// `|sum (-1)^(i + j/2) dim|`, the Jones polynomial at `q^2 = -1`.
pub fn determinant(t: &RankTable) -> Result<u64> {
    let mut sum = 0i64;
    for ((i, j), v) in t.iter() {
        if j.rem_euclid(2) != 0 {
            return Err(Error::OddGrading { j });
        }
        sum += sign(i + j / 2) * v as i64;
    }
    Ok(sum.unsigned_abs())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetectionReport {
    pub determinant: u64,
    pub total_rank: usize,
    pub slack: i64,
    pub holds: bool,
}

/// Compares the determinant with the total rank, which bounds it from above.
pub fn check_detection_inequality(t: &RankTable) -> Result<DetectionReport> {
    let det = determinant(t)?;
    let rank = t.total_rank();
    let slack = rank as i64 - det as i64;
    Ok(DetectionReport { determinant: det, total_rank: rank, slack, holds: slack >= 0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Unknot,
    Knotted,
    Inconclusive,
}

impl Verdict {
    /// Process exit code used by the command line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Unknot => 0,
            Verdict::Knotted => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

/// The outcome of an unknot test. `asserted_class` records the caller's claim
/// that the knot has tangle unknotting number one; it is never checked here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub knot_name: String,
    pub total_rank: usize,
    pub asserted_class: bool,
    pub verdict: Verdict,
}

pub fn certify(name: &str, t: &RankTable, asserted_class: bool) -> Certificate {
    let total_rank = t.total_rank();
    let verdict = match (total_rank, asserted_class) {
        (r, _) if r > 1 => Verdict::Knotted,
        (_, true) => Verdict::Unknot,
        _ => Verdict::Inconclusive,
    };
    Certificate { knot_name: name.to_string(), total_rank, asserted_class, verdict }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatelliteReport {
    pub n: i32,
    pub total_rank: usize,
    /// `4n + 1`, or `None` when the bound does not apply.
    pub bound: Option<usize>,
    pub slack: Option<i64>,
    pub holds: bool,
}

/// Checks `rank >= 4n + 1` for a satellite of a nontrivial companion.
pub fn check_satellite_bound(t: &RankTable, n: i32, companion_nontrivial: bool) -> SatelliteReport {
    let total_rank = t.total_rank();
    let bound = (companion_nontrivial && n >= 1).then(|| 4 * n as usize + 1);
    let slack = bound.map(|b| total_rank as i64 - b as i64);
    SatelliteReport { n, total_rank, bound, slack, holds: slack.is_none_or(|s| s >= 0) }
}
