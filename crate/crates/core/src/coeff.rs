//! Coefficient rings for series: the integers and `Z[u]`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientKind {
    Integer,
    Polynomial,
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientKind::Integer => f.write_str("integer"),
            CoefficientKind::Polynomial => f.write_str("polynomial"),
        }
    }
}

/// The ring contract shared by every coefficient kind.
///
/// Series are generic over this trait, so mixing kinds in a single
/// operation is rejected by the type checker.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Zero + One + Send + Sync
{
    const KIND: CoefficientKind;

    fn from_integer(n: BigInt) -> Self;
    fn accumulate(&mut self, other: &Self);
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, String>;

    /// `self += a * b`.
    fn accumulate_product(&mut self, a: &Self, b: &Self) {
        self.accumulate(&a.times(b));
    }
}

fn parse_bigint(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| format!("invalid integer `{s}`: {e}")),
        other => Err(format!("expected a decimal string, found {other}")),
    }
}

impl Coefficient for BigInt {
    const KIND: CoefficientKind = CoefficientKind::Integer;

    fn from_integer(n: BigInt) -> Self {
        n
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self, String> {
        parse_bigint(v)
    }
    fn accumulate_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// A univariate polynomial in `u` with integer coefficients, lowest degree first.
///
/// Trailing zeros are trimmed, so the empty list is the zero polynomial and
/// equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · u^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl From<Vec<i64>> for IntPoly {
    fn from(c: Vec<i64>) -> Self {
        IntPoly::new(c.into_iter().map(BigInt::from).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self.accumulate(&rhs);
        self
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        self.times(&rhs)
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }
}

impl Coefficient for IntPoly {
    const KIND: CoefficientKind = CoefficientKind::Polynomial;

    fn from_integer(n: BigInt) -> Self {
        IntPoly::constant(n)
    }
    fn accumulate(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
    fn times(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
    fn negated(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn to_json(&self) -> Value {
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        json!({ "poly": coeffs })
    }
    fn from_json(v: &Value) -> Result<Self, String> {
        let list = v
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| format!("expected {{\"poly\": [...]}}, found {v}"))?;
        let coeffs = list
            .iter()
            .map(parse_bigint)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}
