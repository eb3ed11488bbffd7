//! JSON series files and plain-text rendering.
//!
//! Series file:
//! `{"bound":D,"coefficients":[{"exponents":[..],"value":"n"}],"monoid":{..}}`
//! with coefficients in graded-lex order. Polynomial values are
//! `{"poly":["c0","c1",..]}`. Rational file:
//! `{"denominator":[{"exponents":[..],"multiplicity":e}],"monoid":{..},"numerator":[{"exponents":[..],"value":"n"}]}`.
//! Object keys are written sorted, so identical inputs give identical bytes.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::coeff::{Coefficient, CoefficientKind, IntPoly};
use crate::monoid::{GradedMonoid, MonoidElement};
use crate::series::{Difference, FormalSeries, IntSeries, PolySeries, RationalSeries, SeriesError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid series file: {0}")]
    Format(String),
    #[error("cannot compare a {0} series with a {1} series")]
    KindMismatch(CoefficientKind, CoefficientKind),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn format_err(msg: impl Into<String>) -> IoError {
    IoError::Format(msg.into())
}

fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialise");
    s.push('\n');
    s
}

pub fn series_to_json<C: Coefficient>(f: &FormalSeries<C>) -> Value {
    let coefficients: Vec<Value> = f
        .terms()
        .map(|(m, c)| json!({ "exponents": m, "value": c.to_json() }))
        .collect();
    json!({
        "monoid": f.monoid(),
        "bound": f.bound(),
        "coefficients": coefficients,
    })
}

pub fn write_series<C: Coefficient>(f: &FormalSeries<C>) -> String {
    to_text(&series_to_json(f))
}

pub fn rational_to_json(r: &RationalSeries) -> Value {
    let numerator: Vec<Value> = r
        .numerator()
        .iter()
        .map(|(m, c)| json!({ "exponents": m, "value": c.to_string() }))
        .collect();
    let denominator: Vec<Value> = r
        .denominator()
        .iter()
        .map(|(m, e)| json!({ "exponents": m, "multiplicity": e }))
        .collect();
    json!({
        "monoid": r.monoid(),
        "numerator": numerator,
        "denominator": denominator,
    })
}

pub fn write_rational(r: &RationalSeries) -> String {
    to_text(&rational_to_json(r))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, IoError> {
    v.get(key)
        .ok_or_else(|| format_err(format!("missing field `{key}`")))
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, IoError> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| format_err(format!("field `{key}` must be an array")))
}

fn monoid_of(v: &Value) -> Result<GradedMonoid, IoError> {
    Ok(serde_json::from_value(field(v, "monoid")?.clone())?)
}

fn exponents_of(v: &Value) -> Result<MonoidElement, IoError> {
    Ok(serde_json::from_value(field(v, "exponents")?.clone())?)
}

/// A series file of either coefficient kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnySeries {
    Integer(IntSeries),
    Polynomial(PolySeries),
}

impl AnySeries {
    pub fn kind(&self) -> CoefficientKind {
        match self {
            AnySeries::Integer(_) => CoefficientKind::Integer,
            AnySeries::Polynomial(_) => CoefficientKind::Polynomial,
        }
    }

    pub fn monoid(&self) -> &GradedMonoid {
        match self {
            AnySeries::Integer(f) => f.monoid(),
            AnySeries::Polynomial(f) => f.monoid(),
        }
    }

    pub fn bound(&self) -> u64 {
        match self {
            AnySeries::Integer(f) => f.bound(),
            AnySeries::Polynomial(f) => f.bound(),
        }
    }

    pub fn to_json_string(&self) -> String {
        match self {
            AnySeries::Integer(f) => write_series(f),
            AnySeries::Polynomial(f) => write_series(f),
        }
    }

    /// First coefficient (graded-lex) of grade ≤ `degree` where the two
    /// files differ, rendered as strings.
    pub fn first_difference(
        &self,
        other: &AnySeries,
        degree: u64,
    ) -> Result<Option<Difference<String>>, IoError> {
        fn render<C: Coefficient>(d: Option<Difference<C>>) -> Option<Difference<String>> {
            d.map(|d| Difference {
                element: d.element,
                left: d.left.to_string(),
                right: d.right.to_string(),
            })
        }
        match (self, other) {
            (AnySeries::Integer(a), AnySeries::Integer(b)) => {
                Ok(render(a.first_difference(b, degree)?))
            }
            (AnySeries::Polynomial(a), AnySeries::Polynomial(b)) => {
                Ok(render(a.first_difference(b, degree)?))
            }
            _ => Err(IoError::KindMismatch(self.kind(), other.kind())),
        }
    }
}

fn parse_terms<C: Coefficient>(
    monoid: GradedMonoid,
    bound: u64,
    coefficients: &[Value],
) -> Result<FormalSeries<C>, IoError> {
    let terms = coefficients
        .iter()
        .map(|t| {
            let value = C::from_json(field(t, "value")?).map_err(IoError::Format)?;
            Ok((exponents_of(t)?, value))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(FormalSeries::from_terms(monoid, bound, terms)?)
}

/// Parses a series file. The coefficient kind is read from the value
/// encoding; a file without coefficients is the zero integer series.
pub fn parse_series(text: &str) -> Result<AnySeries, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let monoid = monoid_of(&v)?;
    let bound = field(&v, "bound")?
        .as_u64()
        .ok_or_else(|| format_err("`bound` must be a nonnegative integer"))?;
    let coefficients = array(&v, "coefficients")?;
    let polynomial = coefficients
        .first()
        .and_then(|t| t.get("value"))
        .is_some_and(Value::is_object);
    if polynomial {
        Ok(AnySeries::Polynomial(parse_terms::<IntPoly>(
            monoid,
            bound,
            coefficients,
        )?))
    } else {
        Ok(AnySeries::Integer(parse_terms::<BigInt>(
            monoid,
            bound,
            coefficients,
        )?))
    }
}

pub fn parse_rational(text: &str) -> Result<RationalSeries, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let monoid = monoid_of(&v)?;
    let numerator = array(&v, "numerator")?
        .iter()
        .map(|t| {
            let value = BigInt::from_json(field(t, "value")?).map_err(IoError::Format)?;
            Ok((exponents_of(t)?, value))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    let denominator = array(&v, "denominator")?
        .iter()
        .map(|t| {
            let e = field(t, "multiplicity")?
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| format_err("`multiplicity` must be a positive integer"))?;
            Ok((exponents_of(t)?, e))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(RationalSeries::new(monoid, numerator, denominator)?)
}

/// `x^2*y`, or `1` for the zero exponent vector.
pub fn monomial(m: &MonoidElement, variables: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(variables)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| {
            if *e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn polynomial_text(terms: &[(MonoidElement, BigInt)], variables: &[String]) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let mono = monomial(m, variables);
        let mag = c.abs();
        let body = if m.is_zero() {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Human-readable closed form, e.g. `(1 + z)/(1 - z)^5` or
/// `1/((1 - x)^4*(1 - y)^4*(1 - x*y)^3)`.
pub fn rational_text(r: &RationalSeries, variables: &[String]) -> String {
    let num = polynomial_text(r.numerator(), variables);
    let factors: Vec<String> = r
        .denominator()
        .iter()
        .map(|(m, e)| {
            let base = format!("(1 - {})", monomial(m, variables));
            if *e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        return num;
    }
    let num = if r.numerator().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    let den = if factors.len() == 1 {
        factors[0].clone()
    } else {
        format!("({})", factors.join("*"))
    };
    format!("{num}/{den}")
}

/// Default variable names `t` (rank 1) or `t0, t1, …`.
pub fn default_variables(monoid: &GradedMonoid) -> Vec<String> {
    if monoid.rank() == 1 {
        vec!["t".to_string()]
    } else {
        (0..monoid.rank()).map(|i| format!("t{i}")).collect()
    }
}

/// `monomial<TAB>value` lines in graded-lex order, non-zero terms only.
pub fn coefficient_table<C: Coefficient>(f: &FormalSeries<C>, variables: &[String]) -> String {
    let mut out = String::new();
    for (m, c) in f.terms() {
        if !Zero::is_zero(c) {
            out.push_str(&monomial(m, variables));
            out.push('\t');
            out.push_str(&c.to_string());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn series_round_trip_and_stability() {
        let m = GradedMonoid::with_unit_weights(["x", "y"]).unwrap();
        let r = RationalSeries::product_of_geometrics(m, [([1, 0].into(), 2), ([1, 1].into(), 1)])
            .unwrap();
        let f = r.expand(4);
        let text = write_series(&f);
        assert_eq!(text, write_series(&f));
        let back = parse_series(&text).unwrap();
        assert_eq!(back, AnySeries::Integer(f.clone()));
        assert_eq!(back.to_json_string(), text);
        let pos_x = text.find("\"bound\"").unwrap();
        let pos_m = text.find("\"monoid\"").unwrap();
        assert!(pos_x < pos_m, "keys are written sorted");
    }

    #[test]
    fn polynomial_files() {
        let m = GradedMonoid::with_unit_weights(["z"]).unwrap();
        let f = FormalSeries::from_terms(
            m,
            2,
            [
                ([0].into(), IntPoly::from(vec![1, 2])),
                ([2].into(), IntPoly::from(vec![0, -1])),
            ],
        )
        .unwrap();
        let text = write_series(&f);
        assert!(text.contains("\"poly\""));
        assert_eq!(parse_series(&text).unwrap(), AnySeries::Polynomial(f));
    }

    #[test]
    fn rational_round_trip() {
        let m = GradedMonoid::with_unit_weights(["z"]).unwrap();
        let r = RationalSeries::new(
            m,
            [([0].into(), BigInt::from(1)), ([1].into(), BigInt::from(1))],
            [([1].into(), 5)],
        )
        .unwrap();
        let text = write_rational(&r);
        assert_eq!(parse_rational(&text).unwrap(), r);
        assert_eq!(rational_text(&r, &vars(&["z"])), "(1 + z)/(1 - z)^5");
    }

    #[test]
    fn rational_rendering() {
        let m = GradedMonoid::with_unit_weights(["x", "y"]).unwrap();
        let r = RationalSeries::product_of_geometrics(
            m.clone(),
            [([1, 0].into(), 4), ([0, 1].into(), 4), ([1, 1].into(), 3)],
        )
        .unwrap();
        assert_eq!(
            rational_text(&r, &vars(&["x", "y"])),
            "1/((1 - x)^4*(1 - y)^4*(1 - x*y)^3)"
        );
        let r = RationalSeries::new(
            m,
            [
                ([0, 0].into(), BigInt::from(1)),
                ([1, 1].into(), BigInt::from(-1)),
            ],
            [([1, 0].into(), 3), ([0, 1].into(), 3)],
        )
        .unwrap();
        assert_eq!(
            rational_text(&r, &vars(&["x", "y"])),
            "(1 - x*y)/((1 - x)^3*(1 - y)^3)"
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_series("{"), Err(IoError::Json(_))));
        assert!(matches!(
            parse_series(r#"{"monoid":{"generators":[]}}"#),
            Err(IoError::Format(_))
        ));
        let bad_weight =
            r#"{"monoid":{"generators":[{"label":"t","weight":0}]},"bound":1,"coefficients":[]}"#;
        assert!(parse_series(bad_weight).is_err());
        let too_high = r#"{"monoid":{"generators":[{"label":"t","weight":1}]},"bound":1,"coefficients":[{"exponents":[2],"value":"1"}]}"#;
        assert!(matches!(parse_series(too_high), Err(IoError::Series(_))));
        let bare_number = r#"{"monoid":{"generators":[{"label":"t","weight":1}]},"bound":1,"coefficients":[{"exponents":[1],"value":1}]}"#;
        assert!(matches!(parse_series(bare_number), Err(IoError::Format(_))));
    }

    #[test]
    fn kinds_do_not_mix() {
        let m = GradedMonoid::with_unit_weights(["t"]).unwrap();
        let a = AnySeries::Integer(IntSeries::one(m.clone(), 2));
        let b = AnySeries::Polynomial(PolySeries::one(m, 2));
        assert!(matches!(
            a.first_difference(&b, 1),
            Err(IoError::KindMismatch(..))
        ));
    }

    #[test]
    fn tables() {
        let m = GradedMonoid::with_unit_weights(["t"]).unwrap();
        let f = RationalSeries::product_of_geometrics(m, [([1].into(), 3)])
            .unwrap()
            .expand(3);
        assert_eq!(
            coefficient_table(&f, &vars(&["t"])),
            "1\t1\nt\t3\nt^2\t6\nt^3\t10\n"
        );
    }
}
