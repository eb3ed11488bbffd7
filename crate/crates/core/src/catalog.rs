//! Closed forms and computation pipelines for the varieties we know how to handle.
//!
//! Two pipelines produce series from simpler pieces:
//!
//! * [`split_bundle_series`]: for `X = P(O_{P^n}(d) ⊕ 1)`,
//!   `E_p(X) = Ψ_♯(E_{p-1}(P^n) ⊙ E_p(P^n) ⊙ E_p(P^n))` with
//!   `Ψ(a, b, c) = (a + c·d, b + c)`.
//! * [`grassmannian_pipeline`]: for `G(d, n)` with the `C^*`-action whose fixed
//!   locus is `G(d, n-1) ⊔ G(d-1, n-1)` and whose Chow quotient is
//!   `F(d-1, d; n-1)`, `E_p = Ψ_♯(E_{p-1}(F) ⊙ E_p(G(d,n-1)) ⊙ E_p(G(d-1,n-1)))`
//!   with `Ψ` given on Schubert generators by the trace map and the two inclusions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::monoid::{GradedMonoid, MonoidElement, MonoidMorphism};
use crate::oracle::binomial;
use crate::schubert::{
    basis, euler_characteristic, inclusion_i, inclusion_j, trace_phi, FlagType, SchubertError,
    SchubertSymbol,
};
use crate::series::{IntSeries, RationalSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{0}")]
    OutOfRange(String),
    #[error("Euler characteristic must be positive, got {0}")]
    NonPositiveChi(i64),
    #[error("unknown variety descriptor `{0}`")]
    UnknownDescriptor(String),
    #[error("no pipeline is available for {variety} at p = {p}")]
    NoPipeline { variety: String, p: u32 },
    #[error(
        "closed form and pipeline disagree at {element}: closed form {closed}, pipeline {pipeline}"
    )]
    Verification {
        element: MonoidElement,
        closed: BigInt,
        pipeline: BigInt,
    },
    #[error("generator `{label}` has no image in {target}")]
    MissingGenerator { label: String, target: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
}

fn out_of_range(msg: impl Into<String>) -> CatalogError {
    CatalogError::OutOfRange(msg.into())
}

/// The varieties in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variety {
    /// `P^n`.
    ProjectiveSpace(u32),
    /// `P^n × P^1`, the `d = 0` bundle.
    ProductPnP1(u32),
    /// `P(O_{P^n}(d) ⊕ 1)` over `P^n`.
    ProjClosureLineBundle { base_n: u32, d: u32 },
    /// Hirzebruch surface `F_d`, the bundle over `P^1`.
    Hirzebruch(u32),
    /// Blow-up of `P^n` at a point, `P(O_{P^{n-1}}(1) ⊕ 1)`.
    BlowupPnAtPoint(u32),
    /// The flag variety `F(0,1;2)`.
    Flag012,
    /// The Grassmannian `G(1,3)` of lines in `P^3`.
    Grassmannian13,
    /// Zero-cycles on a variety of Euler characteristic `chi`.
    SymmetricPointCase(u32),
}

impl Variety {
    /// `(base_n, d)` when the variety is one of the split `P^1`-bundles.
    fn as_split_bundle(&self) -> Option<(u32, u32)> {
        match *self {
            Variety::ProductPnP1(n) => Some((n, 0)),
            Variety::ProjClosureLineBundle { base_n, d } => Some((base_n, d)),
            Variety::Hirzebruch(d) => Some((1, d)),
            Variety::BlowupPnAtPoint(n) => Some((n.saturating_sub(1), 1)),
            _ => None,
        }
    }

    fn check_p(&self, p: u32) -> Result<(), CatalogError> {
        let max = match *self {
            Variety::ProjectiveSpace(n) => n,
            Variety::Flag012 => 2,
            Variety::Grassmannian13 => 4,
            Variety::SymmetricPointCase(_) => 0,
            Variety::BlowupPnAtPoint(0) => {
                return Err(out_of_range("BlowupPn needs n ≥ 1"));
            }
            _ => self.as_split_bundle().map(|(n, _)| n).unwrap_or(0),
        };
        if p > max {
            return Err(out_of_range(format!(
                "{self}: p must lie in 0..={max}, got {p}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Variety::ProjectiveSpace(n) => write!(f, "Pn({n})"),
            Variety::ProductPnP1(n) => write!(f, "PnxP1({n})"),
            Variety::ProjClosureLineBundle { base_n, d } => {
                write!(f, "ProjClosure(n={base_n},d={d})")
            }
            Variety::Hirzebruch(d) => write!(f, "Hirzebruch({d})"),
            Variety::BlowupPnAtPoint(n) => write!(f, "BlowupPn({n})"),
            Variety::Flag012 => f.write_str("Flag012"),
            Variety::Grassmannian13 => f.write_str("G(1,3)"),
            Variety::SymmetricPointCase(chi) => write!(f, "Macdonald({chi})"),
        }
    }
}

impl FromStr for Variety {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let unknown = || CatalogError::UnknownDescriptor(s.to_string());
        match compact.as_str() {
            "Flag012" | "F(0,1;2)" => return Ok(Variety::Flag012),
            "G(1,3)" => return Ok(Variety::Grassmannian13),
            _ => {}
        }
        let (name, args) = compact
            .strip_suffix(')')
            .and_then(|c| c.split_once('('))
            .ok_or_else(unknown)?;
        let num = |a: &str| a.parse::<u32>().map_err(|_| unknown());
        match name {
            "Pn" => Ok(Variety::ProjectiveSpace(num(args)?)),
            "PnxP1" => Ok(Variety::ProductPnP1(num(args)?)),
            "Hirzebruch" => Ok(Variety::Hirzebruch(num(args)?)),
            "BlowupPn" => Ok(Variety::BlowupPnAtPoint(num(args)?)),
            "Macdonald" => Ok(Variety::SymmetricPointCase(num(args
                .strip_prefix("chi=")
                .unwrap_or(args))?)),
            "ProjClosure" => {
                let (n, d) = args.split_once(',').ok_or_else(unknown)?;
                let n = n.strip_prefix("n=").unwrap_or(n);
                let d = d.strip_prefix("d=").unwrap_or(d);
                Ok(Variety::ProjClosureLineBundle {
                    base_n: num(n)?,
                    d: num(d)?,
                })
            }
            _ => Err(unknown()),
        }
    }
}

/// A monoid generator together with its conventional variable name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorName {
    pub label: String,
    pub variable: String,
}

fn dictionary(monoid: &GradedMonoid, variables: &[&str]) -> Vec<GeneratorName> {
    monoid
        .labels()
        .zip(variables)
        .map(|(label, var)| GeneratorName {
            label: label.to_string(),
            variable: var.to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Closed,
    Pipeline,
    Both,
    /// Both when a pipeline exists, otherwise the closed form alone.
    #[default]
    Auto,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed" => Ok(Method::Closed),
            "pipeline" => Ok(Method::Pipeline),
            "both" => Ok(Method::Both),
            "auto" => Ok(Method::Auto),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EulerChowResult {
    pub variety: Variety,
    pub p: u32,
    pub degree: u64,
    pub closed_form: Option<RationalSeries>,
    /// The series to `degree`, from the pipeline when one was run.
    pub series: IntSeries,
    pub generator_dictionary: Vec<GeneratorName>,
    /// Whether a pipeline was run and checked against the closed form.
    pub verified: bool,
}

fn rank1(label: &str) -> GradedMonoid {
    GradedMonoid::with_unit_weights([label]).expect("single label")
}

/// `E_0(X) = (1 - t)^{-χ(X)}`.
pub fn macdonald(chi: i64) -> Result<RationalSeries, CatalogError> {
    if chi <= 0 {
        return Err(CatalogError::NonPositiveChi(chi));
    }
    Ok(RationalSeries::product_of_geometrics(
        rank1("[pt]"),
        [([1].into(), chi as u32)],
    )?)
}

/// `E_p(P^n) = (1 - t)^{-C(n+1, p+1)}`.
pub fn lawson_yau_pn(n: u32, p: u32) -> Result<RationalSeries, CatalogError> {
    if p > n {
        return Err(out_of_range(format!(
            "E_p(P^n) needs 0 ≤ p ≤ n, got p={p}, n={n}"
        )));
    }
    let e = lawson_yau_exponent(n, p);
    Ok(RationalSeries::product_of_geometrics(
        rank1(&format!("[P^{p}]")),
        [([1].into(), e)],
    )?)
}

pub fn lawson_yau_exponent(n: u32, p: u32) -> u32 {
    binomial(u64::from(n) + 1, u64::from(p) + 1)
        .try_into()
        .expect("exponent fits in u32")
}

/// Series whose only cycles are multiples of the fundamental class.
fn fundamental_class(monoid: GradedMonoid) -> Result<RationalSeries, CatalogError> {
    Ok(RationalSeries::product_of_geometrics(
        monoid,
        [([1].into(), 1)],
    )?)
}

fn small_binomial(n: u32, k: u32) -> u32 {
    binomial(u64::from(n), u64::from(k))
        .try_into()
        .expect("binomial fits in u32")
}

/// Cycle-class monoid of `P(O_{P^n}(d) ⊕ 1)` in dimension `p`.
///
/// For `p ≥ 1` it is free on `t0 ↔ q^*[P^{p-1}]` and `t1 ↔ [P^p]` (section
/// class); for `p = 0` only the point class remains.
pub fn split_bundle_monoid(p: u32) -> GradedMonoid {
    if p == 0 {
        rank1("[pt]")
    } else {
        GradedMonoid::with_unit_weights([format!("q^*[P^{}]", p - 1), format!("[P^{p}]")])
            .expect("distinct labels")
    }
}

fn split_bundle_check(n: u32, p: u32) -> Result<(), CatalogError> {
    if p > n {
        return Err(out_of_range(format!(
            "split bundle over P^{n} needs 0 ≤ p ≤ {n}, got {p}"
        )));
    }
    Ok(())
}

/// `(1-t0)^{-C(n+1,p)} (1-t1)^{-C(n+1,p+1)} (1-t0^d t1)^{-C(n+1,p+1)}`.
///
/// At `p = 0` the `t0` factor disappears and both remaining factors become
/// powers of the point class.
pub fn split_bundle_closed_form(n: u32, d: u32, p: u32) -> Result<RationalSeries, CatalogError> {
    split_bundle_check(n, p)?;
    let e = small_binomial(n + 1, p + 1);
    let monoid = split_bundle_monoid(p);
    let factors: Vec<(MonoidElement, u32)> = if p == 0 {
        vec![([1].into(), e), ([1].into(), e)]
    } else {
        vec![
            ([1, 0].into(), small_binomial(n + 1, p)),
            ([0, 1].into(), e),
            ([d, 1].into(), e),
        ]
    };
    Ok(RationalSeries::product_of_geometrics(monoid, factors)?)
}

/// `E_p(P(O_{P^n}(d) ⊕ 1))` to total degree `degree`, via push-forward.
pub fn split_bundle_series(n: u32, d: u32, p: u32, degree: u64) -> Result<IntSeries, CatalogError> {
    split_bundle_check(n, p)?;
    let lower = if p == 0 {
        IntSeries::one(GradedMonoid::trivial(), degree)
    } else {
        lawson_yau_pn(n, p - 1)?.expand(degree)
    };
    let same = lawson_yau_pn(n, p)?.expand(degree);
    let source = lower.exterior(&same).exterior(&same);
    let target = split_bundle_monoid(p);
    let mut images: Vec<MonoidElement> = Vec::new();
    if p == 0 {
        images.extend([[1].into(), [1].into()]);
    } else {
        images.extend([[1, 0].into(), [0, 1].into(), [d, 1].into()]);
    }
    let psi =
        MonoidMorphism::new(source.monoid().clone(), target, images).map_err(SeriesError::from)?;
    Ok(source.pushforward_to(&psi, degree)?)
}

fn f012() -> FlagType {
    FlagType::new(vec![0, 1], 2).expect("valid flag type")
}

fn g13() -> FlagType {
    FlagType::grassmannian(1, 3).expect("valid flag type")
}

fn flag012_variables(p: u32) -> &'static [&'static str] {
    match p {
        0 => &["t"],
        1 => &["r", "s"],
        2 => &["x", "y"],
        _ => &["w"],
    }
}

fn g13_variables(p: u32) -> &'static [&'static str] {
    match p {
        0 => &["t"],
        1 => &["s"],
        2 => &["x", "y"],
        3 => &["z"],
        _ => &["w"],
    }
}

/// Closed forms for `F(0,1;2)` over its Schubert basis:
/// `p = 0`: `(1-t)^{-6}`; `p = 1`: `1/((1-r)^3 (1-s)^3 (1-rs)^3)` with
/// `r ↔ ⟨0;0,2⟩`, `s ↔ ⟨1;0,1⟩`; `p = 2`: `(1-xy)/((1-x)^3 (1-y)^3)` with
/// `x ↔ ⟨1;1,2⟩`, `y ↔ ⟨2;0,2⟩`.
pub fn flag012_series(p: u32) -> Result<RationalSeries, CatalogError> {
    let monoid = basis(&f012(), p);
    let one = BigInt::from(1);
    match p {
        0 => Ok(macdonald(i64::from(euler_characteristic(&f012())))?.relabeled(monoid)?),
        1 => Ok(RationalSeries::product_of_geometrics(
            monoid,
            [([1, 0].into(), 3), ([0, 1].into(), 3), ([1, 1].into(), 3)],
        )?),
        2 => Ok(RationalSeries::new(
            monoid,
            [([0, 0].into(), one.clone()), ([1, 1].into(), -one)],
            [([1, 0].into(), 3), ([0, 1].into(), 3)],
        )?),
        _ => Err(out_of_range(format!(
            "F(0,1;2) closed forms exist for p ∈ {{0,1,2}}, got {p}"
        ))),
    }
}

/// Divisor Euler characteristics `a⁰_{r,s}` of `F(0,1;2)` from the
/// stratification recurrences
/// `a⁰_{r,s} = a¹_{r,s} + b_{r,s} - b_{r-1,s-1}`,
/// `a¹_{r,s} = a⁰_{r-1,s} + a⁰_{r,s-1} - a⁰_{r-1,s-1}`,
/// where `b` are the coefficients of `E_1(P^1 × P^1) = 1/((1-x)^2 (1-y)^2)`.
/// Indexed `table[r][s]`.
pub fn flag012_divisor_by_recurrence(max_r: usize, max_s: usize) -> Vec<Vec<BigInt>> {
    let degree = (max_r + max_s) as u64;
    let b_series = split_bundle_closed_form(1, 0, 1)
        .expect("P^1 × P^1 is in range")
        .expand(degree);
    let b = |r: isize, s: isize| -> BigInt {
        if r < 0 || s < 0 {
            return BigInt::from(0);
        }
        b_series
            .coeff(&[r as u32, s as u32].into())
            .expect("within expansion bound")
    };
    let mut a0 = vec![vec![BigInt::from(0); max_s + 1]; max_r + 1];
    let get = |a0: &Vec<Vec<BigInt>>, r: isize, s: isize| -> BigInt {
        if r < 0 || s < 0 {
            BigInt::from(0)
        } else {
            a0[r as usize][s as usize].clone()
        }
    };
    // Row-major order visits (r-1, s), (r, s-1), (r-1, s-1) before (r, s).
    for r in 0..=max_r as isize {
        for s in 0..=max_s as isize {
            let a1 = get(&a0, r - 1, s) + get(&a0, r, s - 1) - get(&a0, r - 1, s - 1);
            a0[r as usize][s as usize] = a1 + b(r, s) - b(r - 1, s - 1);
        }
    }
    a0
}

/// `E_2(F(0,1;2))` to total degree `degree`, tabulated from the recurrence.
pub fn flag012_divisor_series(degree: u64) -> IntSeries {
    let d = degree as usize;
    let table = flag012_divisor_by_recurrence(d, d);
    IntSeries::from_fn(basis(&f012(), 2), degree, |m| {
        let e = m.exponents();
        table[e[0] as usize][e[1] as usize].clone()
    })
}

fn images_from_labels(
    factor: &GradedMonoid,
    target: &GradedMonoid,
    map: impl Fn(&SchubertSymbol) -> Result<SchubertSymbol, SchubertError>,
) -> Result<Vec<MonoidElement>, CatalogError> {
    factor
        .labels()
        .map(|label| {
            let image = map(&label.parse::<SchubertSymbol>()?)?.label();
            let i = target
                .index_of(&image)
                .ok_or_else(|| CatalogError::MissingGenerator {
                    label: image.clone(),
                    target: target.to_string(),
                })?;
            Ok(target.generator(i))
        })
        .collect()
}

/// Chow-quotient assembly for `G(d, n)` in dimension `p`.
///
/// Each input series must live over a Schubert basis monoid: `quotient` over
/// `F(d-1,d;n-1)` in dimension `p-1` (or the trivial monoid), `fixed_i` over
/// `G(d,n-1)` and `fixed_j` over `G(d-1,n-1)` in dimension `p`. Generator
/// images are read off the labels via the trace map and the two inclusions.
pub fn grassmannian_pipeline(
    d: u32,
    n: u32,
    p: u32,
    quotient: &IntSeries,
    fixed_i: &IntSeries,
    fixed_j: &IntSeries,
    degree: u64,
) -> Result<IntSeries, CatalogError> {
    let target = basis(&FlagType::grassmannian(d, n)?, p);
    let mut images = images_from_labels(quotient.monoid(), &target, trace_phi)?;
    images.extend(images_from_labels(fixed_i.monoid(), &target, inclusion_i)?);
    images.extend(images_from_labels(fixed_j.monoid(), &target, inclusion_j)?);
    let source = quotient.exterior(fixed_i).exterior(fixed_j);
    let psi =
        MonoidMorphism::new(source.monoid().clone(), target, images).map_err(SeriesError::from)?;
    Ok(source.pushforward_to(&psi, degree)?)
}

/// `E_p(P^2)` over the Schubert basis of `G(k, 2)`, or the unit series on the
/// trivial monoid when `p` exceeds the dimension.
fn plane_series(k: u32, p: u32, degree: u64) -> Result<IntSeries, CatalogError> {
    let ft = FlagType::grassmannian(k, 2)?;
    let monoid = basis(&ft, p);
    if monoid.rank() == 0 {
        return Ok(IntSeries::one(monoid, degree));
    }
    Ok(lawson_yau_pn(2, p)?.relabeled(monoid)?.expand(degree))
}

/// `E_{p-1}(F(0,1;2))` expanded over its Schubert basis.
fn flag_quotient_series(p: u32, degree: u64) -> Result<IntSeries, CatalogError> {
    match p {
        0 => Ok(IntSeries::one(GradedMonoid::trivial(), degree)),
        1..=3 => Ok(flag012_series(p - 1)?.expand(degree)),
        _ => {
            let monoid = basis(&f012(), p - 1);
            if monoid.rank() == 0 {
                Ok(IntSeries::one(monoid, degree))
            } else {
                Ok(fundamental_class(monoid)?.expand(degree))
            }
        }
    }
}

/// `E_p(G(1,3))` to degree `degree` via the Chow-quotient pipeline.
pub fn grassmannian13_series(p: u32, degree: u64) -> Result<IntSeries, CatalogError> {
    if p > 4 {
        return Err(out_of_range(format!("G(1,3) has dimension 4, got p={p}")));
    }
    let quotient = flag_quotient_series(p, degree)?;
    let fixed_i = plane_series(1, p, degree)?;
    let fixed_j = plane_series(0, p, degree)?;
    grassmannian_pipeline(1, 3, p, &quotient, &fixed_i, &fixed_j, degree)
}

/// Closed forms for `G(1,3)` over its Schubert basis.
pub fn grassmannian13_closed_form(p: u32) -> Result<RationalSeries, CatalogError> {
    let monoid = basis(&g13(), p);
    match p {
        0 => Ok(macdonald(i64::from(euler_characteristic(&g13())))?.relabeled(monoid)?),
        1 => Ok(RationalSeries::product_of_geometrics(
            monoid,
            [([1].into(), 12)],
        )?),
        2 => Ok(RationalSeries::product_of_geometrics(
            monoid,
            [([1, 0].into(), 4), ([0, 1].into(), 4), ([1, 1].into(), 3)],
        )?),
        3 => Ok(RationalSeries::new(
            monoid,
            [([0].into(), BigInt::from(1)), ([1].into(), BigInt::from(1))],
            [([1].into(), 5)],
        )?),
        4 => fundamental_class(monoid),
        _ => Err(out_of_range(format!("G(1,3) has dimension 4, got p={p}"))),
    }
}

type Pipeline = Box<dyn Fn(u64) -> Result<IntSeries, CatalogError>>;

struct CatalogEntry {
    closed: RationalSeries,
    pipeline: Option<Pipeline>,
    variables: Vec<GeneratorName>,
}

fn entry(v: Variety, p: u32) -> Result<CatalogEntry, CatalogError> {
    v.check_p(p)?;
    if let Some((n, d)) = v.as_split_bundle() {
        let closed = split_bundle_closed_form(n, d, p)?;
        let vars: &[&str] = if p == 0 { &["t"] } else { &["t0", "t1"] };
        let variables = dictionary(closed.monoid(), vars);
        return Ok(CatalogEntry {
            closed,
            pipeline: Some(Box::new(move |deg| split_bundle_series(n, d, p, deg))),
            variables,
        });
    }
    let (closed, pipeline, vars): (_, Option<Pipeline>, &[&str]) = match v {
        Variety::ProjectiveSpace(n) => (lawson_yau_pn(n, p)?, None, &["t"]),
        Variety::SymmetricPointCase(chi) => (macdonald(i64::from(chi))?, None, &["t"]),
        Variety::Flag012 => {
            let pipeline =
                (p == 2).then(|| Box::new(|deg| Ok(flag012_divisor_series(deg))) as Pipeline);
            (flag012_series(p)?, pipeline, flag012_variables(p))
        }
        Variety::Grassmannian13 => (
            grassmannian13_closed_form(p)?,
            Some(Box::new(move |deg| grassmannian13_series(p, deg))),
            g13_variables(p),
        ),
        _ => unreachable!("split bundles handled above"),
    };
    let variables = dictionary(closed.monoid(), vars);
    Ok(CatalogEntry {
        closed,
        pipeline,
        variables,
    })
}

/// Computes `E_p(v)` to `degree` by the requested method.
///
/// With [`Method::Both`] (or [`Method::Auto`] when a pipeline exists) the
/// pipeline result is compared against the closed-form expansion and any
/// disagreement is returned as [`CatalogError::Verification`].
pub fn euler_chow(
    v: Variety,
    p: u32,
    degree: u64,
    method: Method,
) -> Result<EulerChowResult, CatalogError> {
    let entry = entry(v, p)?;
    let no_pipeline = || CatalogError::NoPipeline {
        variety: v.to_string(),
        p,
    };
    let run_pipeline = match method {
        Method::Closed => false,
        Method::Pipeline | Method::Both => true,
        Method::Auto => entry.pipeline.is_some(),
    };
    let pipeline = if run_pipeline {
        let f = entry.pipeline.as_ref().ok_or_else(no_pipeline)?;
        Some(f(degree)?)
    } else {
        None
    };
    let check = matches!(method, Method::Both | Method::Auto) && pipeline.is_some();
    let series = match pipeline {
        Some(s) if check => {
            let expected = entry.closed.expand(degree);
            if let Some(diff) = expected.first_difference(&s, degree)? {
                return Err(CatalogError::Verification {
                    element: diff.element,
                    closed: diff.left,
                    pipeline: diff.right,
                });
            }
            s
        }
        Some(s) => s,
        None => entry.closed.expand(degree),
    };
    let closed_form = (method != Method::Pipeline).then_some(entry.closed);
    Ok(EulerChowResult {
        variety: v,
        p,
        degree,
        closed_form,
        series,
        generator_dictionary: entry.variables,
        verified: check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn descriptors_round_trip() {
        for s in [
            "Pn(3)",
            "PnxP1(2)",
            "ProjClosure(n=2,d=3)",
            "Hirzebruch(2)",
            "BlowupPn(3)",
            "Flag012",
            "G(1,3)",
            "Macdonald(6)",
        ] {
            let v: Variety = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!(
            "ProjClosure(2, 3)".parse::<Variety>().unwrap().to_string(),
            "ProjClosure(n=2,d=3)"
        );
        assert!(matches!(
            "Quadric(3)".parse::<Variety>(),
            Err(CatalogError::UnknownDescriptor(_))
        ));
        assert!("Pn(x)".parse::<Variety>().is_err());
    }

    #[test]
    fn macdonald_forms() {
        let one = macdonald(1).unwrap().expand(5);
        assert!(one.terms().all(|(_, c)| c == &int(1)));
        assert_eq!(one.len(), 6);
        assert_eq!(macdonald(6).unwrap().denominator()[0].1, 6);
        assert_eq!(macdonald(0), Err(CatalogError::NonPositiveChi(0)));
        assert_eq!(macdonald(-2), Err(CatalogError::NonPositiveChi(-2)));
    }

    #[test]
    fn lawson_yau_forms() {
        assert_eq!(lawson_yau_exponent(4, 4), 1);
        assert_eq!(lawson_yau_exponent(2, 1), 3);
        let e = lawson_yau_pn(3, 1).unwrap().expand(2);
        assert_eq!(e.coeff(&[2].into()).unwrap(), int(21));
        assert!(lawson_yau_pn(2, 3).is_err());
    }

    #[test]
    fn split_bundle_matches_closed_form_small() {
        for (n, d, p) in [(1, 2, 1), (2, 0, 0), (2, 3, 2), (1, 0, 1)] {
            let pipeline = split_bundle_series(n, d, p, 6).unwrap();
            let closed = split_bundle_closed_form(n, d, p).unwrap().expand(6);
            assert_eq!(pipeline, closed, "(n,d,p)=({n},{d},{p})");
        }
        assert!(split_bundle_series(1, 0, 2, 3).is_err());
    }

    #[test]
    fn split_bundle_swap_symmetry_at_d0() {
        // With d = 0 the images of b and c coincide; swapping the two
        // E_p(P^n) factors gives the same series.
        let s = split_bundle_series(2, 0, 1, 6).unwrap();
        let e = lawson_yau_pn(2, 1).unwrap().expand(6);
        let lower = lawson_yau_pn(2, 0).unwrap().expand(6);
        let src = lower.exterior(&e).exterior(&e);
        let psi = MonoidMorphism::new(
            src.monoid().clone(),
            split_bundle_monoid(1),
            vec![[1, 0].into(), [0, 1].into(), [0, 1].into()],
        )
        .unwrap();
        assert_eq!(src.pushforward(&psi).unwrap(), s);
    }

    #[test]
    fn recurrence_small_values() {
        let t = flag012_divisor_by_recurrence(3, 3);
        assert_eq!(t[0][0], int(1));
        assert_eq!(t[1][1], int(8));
        assert_eq!(t[1][0], int(3));
        assert_eq!(t[2][3], int(42));
    }

    #[test]
    fn grassmannian_pipeline_small() {
        for p in 0..=4 {
            let pipeline = grassmannian13_series(p, 6).unwrap();
            let closed = grassmannian13_closed_form(p).unwrap().expand(6);
            assert_eq!(pipeline, closed, "p={p}");
        }
        assert!(grassmannian13_series(5, 3).is_err());
    }

    #[test]
    fn dispatcher() {
        let r = euler_chow(Variety::ProjectiveSpace(3), 2, 4, Method::Auto).unwrap();
        assert_eq!(r.closed_form.unwrap().denominator(), &[([1].into(), 4)]);
        assert!(!r.verified);

        let r = euler_chow(Variety::Grassmannian13, 3, 12, Method::Both).unwrap();
        assert!(r.verified);
        assert_eq!(r.generator_dictionary[0].variable, "z");
        assert_eq!(r.generator_dictionary[0].label, "⟨1,3⟩^3");

        let r = euler_chow(Variety::ProductPnP1(2), 1, 5, Method::Both).unwrap();
        let closed = r.closed_form.unwrap();
        assert_eq!(
            closed.denominator(),
            &[([1, 0].into(), 3), ([0, 1].into(), 6)]
        );

        assert!(matches!(
            euler_chow(Variety::ProjectiveSpace(3), 1, 4, Method::Pipeline),
            Err(CatalogError::NoPipeline { .. })
        ));
        assert!(
            euler_chow(Variety::Flag012, 2, 8, Method::Both)
                .unwrap()
                .verified
        );
        assert!(euler_chow(Variety::Flag012, 3, 8, Method::Closed).is_err());
        assert!(euler_chow(Variety::Hirzebruch(1), 2, 8, Method::Closed).is_err());
        assert!(euler_chow(Variety::SymmetricPointCase(4), 1, 8, Method::Closed).is_err());
    }

    #[test]
    fn flag_generator_names_follow_convention() {
        let r = euler_chow(Variety::Flag012, 1, 2, Method::Closed).unwrap();
        let pairs: Vec<(String, String)> = r
            .generator_dictionary
            .into_iter()
            .map(|g| (g.variable, g.label))
            .collect();
        assert_eq!(
            pairs,
            vec![
                ("r".to_string(), "⟨0;0,2⟩^2".to_string()),
                ("s".to_string(), "⟨1;0,1⟩^2".to_string())
            ]
        );
    }
}
