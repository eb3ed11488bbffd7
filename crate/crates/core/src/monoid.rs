//! Finitely generated free graded abelian monoids `Z_+^k`.
//!
//! Every monoid carries a positive weight per generator. The induced grading
//! `grade(e) = Σ e_i w_i` is what makes truncated series well defined: only
//! finitely many elements have grade below any bound, and the zero element is
//! the only one of grade zero.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("generator `{0}` has weight 0; weights must be positive")]
    NonPositiveWeight(String),
    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),
    #[error("element of rank {found} used where rank {expected} was required")]
    RankMismatch { expected: usize, found: usize },
    #[error("morphism needs {expected} generator images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("monoid mismatch: {0}")]
    Mismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub weight: u32,
}

impl Generator {
    pub fn new(label: impl Into<String>, weight: u32) -> Self {
        Self {
            label: label.into(),
            weight,
        }
    }
}

/// A free abelian monoid on labelled, positively weighted generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GradedMonoid {
    generators: Vec<Generator>,
}

impl GradedMonoid {
    pub fn new(generators: Vec<Generator>) -> Result<Self, MonoidError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if g.weight == 0 {
                return Err(MonoidError::NonPositiveWeight(g.label.clone()));
            }
            if !seen.insert(g.label.as_str()) {
                return Err(MonoidError::DuplicateLabel(g.label.clone()));
            }
        }
        Ok(Self { generators })
    }

    /// The trivial monoid `{0}`.
    pub fn trivial() -> Self {
        Self {
            generators: Vec::new(),
        }
    }

    /// Monoid with every generator of weight 1.
    pub fn with_unit_weights<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, MonoidError> {
        Self::new(labels.into_iter().map(|l| Generator::new(l, 1)).collect())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|g| g.label.as_str())
    }

    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.generators.iter().map(|g| g.weight)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.label == label)
    }

    pub fn check_element(&self, e: &MonoidElement) -> Result<(), MonoidError> {
        if e.rank() == self.rank() {
            Ok(())
        } else {
            Err(MonoidError::RankMismatch {
                expected: self.rank(),
                found: e.rank(),
            })
        }
    }

    /// `Σ exponents[i] · weight[i]`.
    ///
    /// The element must have the rank of the monoid; extra or missing
    /// entries are a logic error and trip a debug assertion.
    pub fn grade(&self, e: &MonoidElement) -> u64 {
        debug_assert_eq!(e.rank(), self.rank());
        e.exponents
            .iter()
            .zip(&self.generators)
            .map(|(&x, g)| u64::from(x) * u64::from(g.weight))
            .sum()
    }

    pub fn zero(&self) -> MonoidElement {
        MonoidElement::zero(self.rank())
    }

    /// The `i`-th generator as an element.
    pub fn generator(&self, i: usize) -> MonoidElement {
        let mut exps = vec![0; self.rank()];
        exps[i] = 1;
        MonoidElement::new(exps)
    }

    /// Key ordering elements graded-lexicographically for this monoid.
    pub fn key(&self, e: &MonoidElement) -> GradedKey {
        GradedKey {
            grade: self.grade(e),
            element: e.clone(),
        }
    }

    /// Every element of grade at most `bound`, each once, in graded-lex order.
    pub fn enumerate_up_to(&self, bound: u64) -> Vec<MonoidElement> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.rank()];
        self.fill(0, bound, &mut current, &mut out);
        out.sort_by(|a, b| self.graded_lex_cmp(a, b));
        out
    }

    fn fill(&self, i: usize, budget: u64, current: &mut [u32], out: &mut Vec<MonoidElement>) {
        if i == self.rank() {
            out.push(MonoidElement::new(current.to_vec()));
            return;
        }
        let w = u64::from(self.generators[i].weight);
        for x in 0..=budget / w {
            current[i] = x as u32;
            self.fill(i + 1, budget - x * w, current, out);
        }
        current[i] = 0;
    }

    /// Graded-lex order: by grade, then lexicographically with the first
    /// generator largest (so `x > y` ⇒ `x` precedes `y` within a grade).
    pub fn graded_lex_cmp(&self, a: &MonoidElement, b: &MonoidElement) -> Ordering {
        self.grade(a)
            .cmp(&self.grade(b))
            .then_with(|| b.exponents.cmp(&a.exponents))
    }
}

impl<'de> Deserialize<'de> for GradedMonoid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            generators: Vec<Generator>,
        }
        let raw = Raw::deserialize(d)?;
        GradedMonoid::new(raw.generators).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for GradedMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_+<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", g.label, g.weight)?;
        }
        write!(f, ">")
    }
}

/// An exponent vector; the `α` of a monomial `t^α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonoidElement {
    exponents: Vec<u32>,
}

impl MonoidElement {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            exponents: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&x| x == 0)
    }

    /// `self - other` when `other ≤ self` componentwise.
    pub fn checked_sub(&self, other: &MonoidElement) -> Option<MonoidElement> {
        debug_assert_eq!(self.rank(), other.rank());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(MonoidElement::new)
    }

    pub fn scaled(&self, k: u32) -> MonoidElement {
        MonoidElement::new(self.exponents.iter().map(|&x| x * k).collect())
    }

    /// Concatenation, the element `(self, other)` of a product monoid.
    pub fn concat(&self, other: &MonoidElement) -> MonoidElement {
        let mut exps = self.exponents.clone();
        exps.extend_from_slice(&other.exponents);
        MonoidElement::new(exps)
    }
}

impl From<Vec<u32>> for MonoidElement {
    fn from(exponents: Vec<u32>) -> Self {
        Self::new(exponents)
    }
}

impl<const N: usize> From<[u32; N]> for MonoidElement {
    fn from(exponents: [u32; N]) -> Self {
        Self::new(exponents.to_vec())
    }
}

impl Add for &MonoidElement {
    type Output = MonoidElement;

    fn add(self, rhs: &MonoidElement) -> MonoidElement {
        assert_eq!(self.rank(), rhs.rank(), "adding elements of different rank");
        MonoidElement::new(
            self.exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An element paired with its grade; `Ord` is the graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedKey {
    pub grade: u64,
    pub element: MonoidElement,
}

impl Ord for GradedKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade
            .cmp(&other.grade)
            .then_with(|| other.element.cmp(&self.element))
    }
}

impl PartialOrd for GradedKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monoid morphism, determined by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMorphism {
    source: GradedMonoid,
    target: GradedMonoid,
    images: Vec<MonoidElement>,
}

impl MonoidMorphism {
    pub fn new(
        source: GradedMonoid,
        target: GradedMonoid,
        images: Vec<MonoidElement>,
    ) -> Result<Self, MonoidError> {
        if images.len() != source.rank() {
            return Err(MonoidError::ImageCount {
                expected: source.rank(),
                found: images.len(),
            });
        }
        for img in &images {
            target.check_element(img)?;
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    pub fn identity(m: &GradedMonoid) -> Self {
        let images = (0..m.rank()).map(|i| m.generator(i)).collect();
        Self {
            source: m.clone(),
            target: m.clone(),
            images,
        }
    }

    pub fn source(&self) -> &GradedMonoid {
        &self.source
    }

    pub fn target(&self) -> &GradedMonoid {
        &self.target
    }

    pub fn images(&self) -> &[MonoidElement] {
        &self.images
    }

    pub fn apply(&self, m: &MonoidElement) -> Result<MonoidElement, MonoidError> {
        self.source.check_element(m)?;
        let mut out = vec![0u32; self.target.rank()];
        for (&x, img) in m.exponents().iter().zip(&self.images) {
            if x == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(img.exponents()) {
                *o += x * y;
            }
        }
        Ok(MonoidElement::new(out))
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &MonoidMorphism) -> Result<MonoidMorphism, MonoidError> {
        if inner.target != self.source {
            return Err(MonoidError::Mismatch(format!(
                "cannot compose: inner target {} differs from outer source {}",
                inner.target, self.source
            )));
        }
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonoidMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// True iff no generator is sent to zero. With positive weights this is
    /// equivalent to every fiber being finite: an element of grade `g` in the
    /// target can only come from source elements of grade at most `g·w_max`.
    pub fn has_finite_fibers(&self) -> bool {
        self.images.iter().all(|img| !img.is_zero())
    }
}

/// The product `M × N` with its structure maps.
#[derive(Debug, Clone)]
pub struct ProductMonoid {
    pub monoid: GradedMonoid,
    pub injections: (MonoidMorphism, MonoidMorphism),
    pub projections: (MonoidMorphism, MonoidMorphism),
}

/// Product of two monoids with concatenated generators.
///
/// Labels are kept as they are unless the factors share a label, in which
/// case every label is prefixed with its factor index (`0.` or `1.`).
pub fn product(m: &GradedMonoid, n: &GradedMonoid) -> ProductMonoid {
    let collide = m.labels().any(|l| n.index_of(l).is_some());
    let relabel = |i: usize, g: &Generator| {
        if collide {
            Generator::new(format!("{i}.{}", g.label), g.weight)
        } else {
            g.clone()
        }
    };
    let generators: Vec<Generator> = m
        .generators()
        .iter()
        .map(|g| relabel(0, g))
        .chain(n.generators().iter().map(|g| relabel(1, g)))
        .collect();
    let monoid = GradedMonoid::new(generators).expect("namespaced labels are distinct");

    let (k, l) = (m.rank(), n.rank());
    let unit = |i: usize| monoid.generator(i);
    let inj_m = MonoidMorphism {
        source: m.clone(),
        target: monoid.clone(),
        images: (0..k).map(unit).collect(),
    };
    let inj_n = MonoidMorphism {
        source: n.clone(),
        target: monoid.clone(),
        images: (k..k + l).map(unit).collect(),
    };
    let proj_m = MonoidMorphism {
        source: monoid.clone(),
        target: m.clone(),
        images: (0..k)
            .map(|i| m.generator(i))
            .chain((0..l).map(|_| m.zero()))
            .collect(),
    };
    let proj_n = MonoidMorphism {
        source: monoid.clone(),
        target: n.clone(),
        images: (0..k)
            .map(|_| n.zero())
            .chain((0..l).map(|i| n.generator(i)))
            .collect(),
    };
    ProductMonoid {
        monoid,
        injections: (inj_m, inj_n),
        projections: (proj_m, proj_n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monoid(weights: &[u32]) -> GradedMonoid {
        GradedMonoid::new(
            weights
                .iter()
                .enumerate()
                .map(|(i, &w)| Generator::new(format!("g{i}"), w))
                .collect(),
        )
        .unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn grade_is_weighted_sum() {
        assert_eq!(monoid(&[1, 1]).grade(&MonoidElement::zero(2)), 0);
        assert_eq!(monoid(&[1, 1]).grade(&[2, 1].into()), 3);
        assert_eq!(monoid(&[1, 2, 3]).grade(&[1, 0, 2].into()), 7);
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(
            GradedMonoid::new(vec![Generator::new("a", 0)]),
            Err(MonoidError::NonPositiveWeight("a".into()))
        );
        assert_eq!(
            GradedMonoid::new(vec![Generator::new("a", 1), Generator::new("a", 2)]),
            Err(MonoidError::DuplicateLabel("a".into()))
        );
    }

    #[test]
    fn enumerate_small_cases() {
        let elems = monoid(&[1]).enumerate_up_to(3);
        let exps: Vec<_> = elems.iter().map(|e| e.exponents().to_vec()).collect();
        assert_eq!(exps, vec![vec![0], vec![1], vec![2], vec![3]]);

        assert_eq!(monoid(&[1, 1]).enumerate_up_to(2).len(), 6);

        let elems = monoid(&[1, 2]).enumerate_up_to(2);
        let expected: Vec<MonoidElement> =
            vec![[0, 0].into(), [1, 0].into(), [2, 0].into(), [0, 1].into()];
        assert_eq!(elems, expected);

        assert_eq!(
            GradedMonoid::trivial().enumerate_up_to(5),
            vec![MonoidElement::zero(0)]
        );
    }

    #[test]
    fn enumerate_counts_match_binomials() {
        for k in 0..4u64 {
            let m = monoid(&vec![1; k as usize]);
            for d in 0..8u64 {
                assert_eq!(m.enumerate_up_to(d).len() as u64, binom(d + k, k));
            }
        }
    }

    #[test]
    fn apply_pushes_generators_linearly() {
        let src = monoid(&[1, 1, 1]);
        let tgt = monoid(&[1, 1]);
        let phi = MonoidMorphism::new(
            src.clone(),
            tgt.clone(),
            vec![[1, 0].into(), [0, 1].into(), [2, 1].into()],
        )
        .unwrap();
        assert_eq!(phi.apply(&[1, 1, 3].into()).unwrap(), [7, 4].into());
        assert_eq!(phi.apply(&src.zero()).unwrap(), tgt.zero());
        assert!(matches!(
            phi.apply(&[1, 1].into()),
            Err(MonoidError::RankMismatch {
                expected: 3,
                found: 2
            })
        ));
        let id = MonoidMorphism::identity(&src);
        assert_eq!(id.apply(&[4, 0, 2].into()).unwrap(), [4, 0, 2].into());
    }

    #[test]
    fn compose_rank_one_maps() {
        let m = monoid(&[1]);
        let sq = MonoidMorphism::new(m.clone(), m.clone(), vec![[2].into()]).unwrap();
        let cube = MonoidMorphism::new(m.clone(), m.clone(), vec![[3].into()]).unwrap();
        let six = cube.compose(&sq).unwrap();
        assert_eq!(six.images(), &[MonoidElement::from([6])]);
        assert_eq!(MonoidMorphism::identity(&m).compose(&sq).unwrap(), sq);

        let other = monoid(&[2]);
        let bad = MonoidMorphism::new(other.clone(), other, vec![[1].into()]).unwrap();
        assert!(matches!(bad.compose(&sq), Err(MonoidError::Mismatch(_))));
    }

    #[test]
    fn finite_fiber_flag() {
        let from_trivial =
            MonoidMorphism::new(GradedMonoid::trivial(), monoid(&[1]), vec![]).unwrap();
        assert!(from_trivial.has_finite_fibers());

        let kill = MonoidMorphism::new(monoid(&[1]), monoid(&[1]), vec![[0].into()]).unwrap();
        assert!(!kill.has_finite_fibers());

        let psi = MonoidMorphism::new(
            monoid(&[1, 1, 1]),
            monoid(&[1, 1]),
            vec![[1, 0].into(), [0, 1].into(), [0, 1].into()],
        )
        .unwrap();
        assert!(psi.has_finite_fibers());
        let target = MonoidElement::from([1, 1]);
        let fiber: Vec<_> = psi
            .source()
            .enumerate_up_to(4)
            .into_iter()
            .filter(|m| psi.apply(m).unwrap() == target)
            .collect();
        assert_eq!(fiber.len(), 2);
    }

    #[test]
    fn product_structure_maps() {
        let a = monoid(&[1]);
        let b = monoid(&[2]);
        let p = product(&a, &b);
        assert_eq!(p.monoid.rank(), 2);
        // shared label `g0` forces namespacing
        assert_eq!(p.monoid.labels().collect::<Vec<_>>(), vec!["0.g0", "1.g0"]);

        let x = MonoidElement::from([3]);
        let y = MonoidElement::from([2]);
        let xy = x.concat(&y);
        assert_eq!(p.monoid.grade(&xy), a.grade(&x) + b.grade(&y));
        assert_eq!(p.projections.0.apply(&xy).unwrap(), x);
        assert_eq!(p.projections.1.apply(&xy).unwrap(), y);
        let back = &p.injections.0.apply(&x).unwrap() + &p.injections.1.apply(&y).unwrap();
        assert_eq!(back, xy);

        let t = product(&GradedMonoid::trivial(), &b);
        assert_eq!(t.monoid, b);
    }

    #[test]
    fn monoid_json_shape() {
        let m = GradedMonoid::new(vec![Generator::new("x", 1), Generator::new("y", 2)]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"generators":[{"label":"x","weight":1},{"label":"y","weight":2}]}"#
        );
        let back: GradedMonoid = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let dup = r#"{"generators":[{"label":"x","weight":1},{"label":"x","weight":1}]}"#;
        assert!(serde_json::from_str::<GradedMonoid>(dup).is_err());
    }
}
