//! Triangular fuzzy numbers and the pipeline that turns expert linguistic
//! ratings into a crisp component reliability:
//!
//! ratings → fuzzy numbers → average fuzzy number → left/right possibility
//! scores → fuzzy possibility score → fuzzy failure rate → reliability.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Slack for values that should lie in `[0, 1]` but went through an average.
const UNIT_SLACK: f64 = 1e-12;

/// Multiplier applied to the cube root in the score-to-exponent conversion.
const FAILURE_RATE_SCALE: f64 = 2.301;

/// A triangular fuzzy number `(a, b, c)` with support `[a, c]` and peak `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularFuzzyNumber {
    a: f64,
    b: f64,
    c: f64,
}

impl TriangularFuzzyNumber {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a > b || b > c {
            return Err(Error::InvalidFuzzyNumber(a, b, c));
        }
        Ok(Self { a, b, c })
    }

    /// The degenerate number `(p, p, p)`.
    pub fn crisp(p: f64) -> Result<Self> {
        Self::new(p, p, p)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn as_tuple(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    /// Degree of membership of `x`.
    pub fn membership(&self, x: f64) -> f64 {
        if x < self.a || x > self.c {
            0.0
        } else if x <= self.b {
            if self.b == self.a {
                1.0
            } else {
                (x - self.a) / (self.b - self.a)
            }
        } else if self.c == self.b {
            1.0
        } else {
            (x - self.c) / (self.b - self.c)
        }
    }

    /// Componentwise product; both operands need a non-negative support.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        if self.a < 0.0 || rhs.a < 0.0 {
            return Err(Error::FuzzyDomain {
                op: "multiplication",
                requirement: "non-negative operands",
            });
        }
        Ok(Self {
            a: self.a * rhs.a,
            b: self.b * rhs.b,
            c: self.c * rhs.c,
        })
    }

    /// `(a1 / c2, b1 / b2, c1 / a2)`; the dividend needs a non-negative
    /// support and the divisor a strictly positive one.
    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if self.a < 0.0 || rhs.a <= 0.0 {
            return Err(Error::FuzzyDomain {
                op: "division",
                requirement: "a non-negative dividend and a positive divisor",
            });
        }
        Ok(Self {
            a: self.a / rhs.c,
            b: self.b / rhs.b,
            c: self.c / rhs.a,
        })
    }

    /// Divides every component by `s > 0`.
    pub fn scale_down(self, s: f64) -> Result<Self> {
        if s.is_nan() || s <= 0.0 || s.is_infinite() {
            return Err(Error::FuzzyDomain {
                op: "scaling",
                requirement: "a positive finite divisor",
            });
        }
        Ok(Self {
            a: self.a / s,
            b: self.b / s,
            c: self.c / s,
        })
    }

    fn check_unit(&self) -> Result<()> {
        if self.a < -UNIT_SLACK || self.c > 1.0 + UNIT_SLACK {
            return Err(Error::FuzzyNumberOutsideUnit(self.a, self.b, self.c));
        }
        Ok(())
    }
}

impl Add for TriangularFuzzyNumber {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
        }
    }
}

impl Sub for TriangularFuzzyNumber {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.c,
            b: self.b - rhs.b,
            c: self.c - rhs.a,
        }
    }
}

impl fmt::Display for TriangularFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6}, {:.6}, {:.6})", self.a, self.b, self.c)
    }
}

/// The seven-point linguistic rating scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinguisticVariable {
    /// Very low.
    VL,
    /// Low.
    L,
    /// Fairly low.
    FL,
    /// Medium.
    M,
    /// Fairly high.
    FH,
    /// High.
    H,
    /// Very high.
    VH,
}

impl LinguisticVariable {
    pub const ALL: [LinguisticVariable; 7] = [
        LinguisticVariable::VL,
        LinguisticVariable::L,
        LinguisticVariable::FL,
        LinguisticVariable::M,
        LinguisticVariable::FH,
        LinguisticVariable::H,
        LinguisticVariable::VH,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            LinguisticVariable::VL => "VL",
            LinguisticVariable::L => "L",
            LinguisticVariable::FL => "FL",
            LinguisticVariable::M => "M",
            LinguisticVariable::FH => "FH",
            LinguisticVariable::H => "H",
            LinguisticVariable::VH => "VH",
        }
    }

    /// The fuzzy number a rating stands for.
    pub fn to_fuzzy(self) -> TriangularFuzzyNumber {
        let (a, b, c) = match self {
            LinguisticVariable::VL => (0.0, 0.0, 0.1),
            LinguisticVariable::L => (0.0, 0.1, 0.3),
            LinguisticVariable::FL => (0.1, 0.3, 0.5),
            LinguisticVariable::M => (0.3, 0.5, 0.7),
            LinguisticVariable::FH => (0.5, 0.7, 0.9),
            LinguisticVariable::H => (0.7, 0.9, 1.0),
            LinguisticVariable::VH => (0.9, 1.0, 1.0),
        };
        TriangularFuzzyNumber { a, b, c }
    }
}

impl fmt::Display for LinguisticVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for LinguisticVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LinguisticVariable::ALL
            .into_iter()
            .find(|v| v.abbreviation().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownLinguistic(s.to_string()))
    }
}

/// Unweighted mean of the experts' fuzzy numbers.
pub fn average_fuzzy_number(ratings: &[LinguisticVariable]) -> Result<TriangularFuzzyNumber> {
    let (first, rest) = ratings.split_first().ok_or(Error::NoRatings)?;
    let sum = rest
        .iter()
        .fold(first.to_fuzzy(), |acc, r| acc + r.to_fuzzy());
    sum.scale_down(ratings.len() as f64)
}

/// Closed interval of values with membership at least `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaCutInterval {
    pub alpha: f64,
    pub lower: f64,
    pub upper: f64,
}

impl AlphaCutInterval {
    pub fn contains(&self, other: &AlphaCutInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

pub fn alpha_cut(number: &TriangularFuzzyNumber, alpha: f64) -> Result<AlphaCutInterval> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let (a, b, c) = number.as_tuple();
    Ok(AlphaCutInterval {
        alpha,
        lower: alpha * (b - a) + a,
        upper: alpha * (b - c) + c,
    })
}

/// Height of the intersection with the maximizing set `f(x) = x`: the
/// level `α` at which the right end of the α-cut equals `α`.
pub fn fps_right(number: &TriangularFuzzyNumber) -> Result<f64> {
    number.check_unit()?;
    let (_, b, c) = number.as_tuple();
    Ok(c / (1.0 + c - b))
}

/// Height of the intersection with the minimizing set `f(x) = 1 - x`: the
/// level `α` at which the left end of the α-cut equals `1 - α`.
pub fn fps_left(number: &TriangularFuzzyNumber) -> Result<f64> {
    number.check_unit()?;
    let (a, b, _) = number.as_tuple();
    Ok((1.0 - a) / (1.0 + b - a))
}

/// Fuzzy possibility score `|right + 1 - left| / 2`.
pub fn fps(number: &TriangularFuzzyNumber) -> Result<f64> {
    Ok(score_from_sides(fps_left(number)?, fps_right(number)?))
}

fn score_from_sides(left: f64, right: f64) -> f64 {
    (right + 1.0 - left).abs() / 2.0
}

/// Failure rate derived from a possibility score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FailureRate {
    /// Decimal exponent; `None` when the score is zero.
    pub exponent: Option<f64>,
    pub rate: f64,
}

/// Converts a possibility score to a failure rate `10^-k` with
/// `k = ((1 - fps) / fps)^(1/3) * 2.301`; a zero score has rate zero.
pub fn fps_to_ffr(score: f64) -> Result<FailureRate> {
    if !(0.0..=1.0).contains(&score) {
        return Err(Error::ScoreOutOfRange(score));
    }
    if score == 0.0 {
        return Ok(FailureRate {
            exponent: None,
            rate: 0.0,
        });
    }
    let k = ((1.0 - score) / score).abs().cbrt() * FAILURE_RATE_SCALE;
    Ok(FailureRate {
        exponent: Some(k),
        rate: 10f64.powf(-k),
    })
}

/// Every intermediate value of the rating-to-reliability pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefuzzificationResult {
    pub average: TriangularFuzzyNumber,
    pub fps_left: f64,
    pub fps_right: f64,
    pub fps: f64,
    /// `None` when `fps == 0`.
    pub k: Option<f64>,
    pub ffr: f64,
    pub reliability: f64,
}

/// Turns one component's expert ratings into a crisp reliability.
pub fn resolve_uncertain_component(
    ratings: &[LinguisticVariable],
) -> Result<DefuzzificationResult> {
    let average = average_fuzzy_number(ratings)?;
    let left = fps_left(&average)?;
    let right = fps_right(&average)?;
    let score = score_from_sides(left, right).clamp(0.0, 1.0);
    let failure = fps_to_ffr(score)?;
    Ok(DefuzzificationResult {
        average,
        fps_left: left,
        fps_right: right,
        fps: score,
        k: failure.exponent,
        ffr: failure.rate,
        reliability: 1.0 - failure.rate,
    })
}
