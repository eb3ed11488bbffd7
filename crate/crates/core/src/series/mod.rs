//! Truncated series in the completed monoid ring `S[[M]]`.
//!
//! A [`FormalSeries`] stores the coefficients of a function `M → S` on every
//! element of grade at most its `bound`. The bound is part of the value: each
//! operation computes the exact bound up to which its output is correct, and
//! asking for a coefficient beyond it is an error.

mod hilbert;
mod rational;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{Coefficient, IntPoly};
use crate::monoid::{product, GradedKey, GradedMonoid, MonoidElement, MonoidError, MonoidMorphism};

pub use hilbert::GradedRanks;
pub use rational::RationalSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("series live over different monoids: {left} vs {right}")]
    MonoidMismatch { left: String, right: String },
    #[error("element {element} has grade {grade}, beyond the truncation bound {bound}")]
    GradeExceedsBound {
        element: MonoidElement,
        grade: u64,
        bound: u64,
    },
    #[error("degree {requested} requested but the series is only known up to degree {available}")]
    InsufficientTruncation { requested: u64, available: u64 },
    #[error("push-forward along a morphism with infinite fibers")]
    InfiniteFibers,
    #[error("denominator factor 1 - t^{0} has grade 0")]
    ZeroGradeDenominator(MonoidElement),
    #[error("denominator factor 1 - t^{0} has multiplicity 0")]
    ZeroMultiplicity(MonoidElement),
}

pub(crate) fn same_monoid(a: &GradedMonoid, b: &GradedMonoid) -> Result<(), SeriesError> {
    if a == b {
        Ok(())
    } else {
        Err(SeriesError::MonoidMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

/// Largest target degree determined by a source series known to `source_bound`.
///
/// Every source element `m` satisfies `grade(φ(m)) ≥ ρ · grade(m)` with
/// `ρ = min_i grade(φ(e_i)) / w_i`, so target degrees up to `⌊ρ · D⌋` only
/// receive contributions from source degrees up to `D`. A morphism out of the
/// trivial monoid keeps the source bound.
pub fn pushforward_bound(phi: &MonoidMorphism, source_bound: u64) -> u64 {
    let src = phi.source();
    let tgt = phi.target();
    phi.images()
        .iter()
        .zip(src.weights())
        .map(|(img, w)| source_bound * tgt.grade(img) / u64::from(w))
        .min()
        .unwrap_or(source_bound)
}

/// Largest source degree whose image lies inside a target bound.
///
/// Generators sent to zero do not constrain the bound; if every generator is
/// sent to zero the target bound is kept.
pub fn pullback_bound(phi: &MonoidMorphism, target_bound: u64) -> u64 {
    let src = phi.source();
    let tgt = phi.target();
    phi.images()
        .iter()
        .zip(src.weights())
        .filter_map(|(img, w)| {
            let g = tgt.grade(img);
            (g > 0).then(|| target_bound * u64::from(w) / g)
        })
        .min()
        .unwrap_or(target_bound)
}

/// A coefficient table that disagrees between two series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference<C> {
    pub element: MonoidElement,
    pub left: C,
    pub right: C,
}

/// An element of `S^M` known on all elements of grade at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries<C> {
    monoid: GradedMonoid,
    bound: u64,
    terms: BTreeMap<GradedKey, C>,
}

pub type IntSeries = FormalSeries<BigInt>;
pub type PolySeries = FormalSeries<IntPoly>;

impl<C: Coefficient> FormalSeries<C> {
    pub fn zero(monoid: GradedMonoid, bound: u64) -> Self {
        Self {
            monoid,
            bound,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `t^0`.
    pub fn one(monoid: GradedMonoid, bound: u64) -> Self {
        let zero = monoid.zero();
        Self::delta(monoid, zero, C::one(), bound).expect("grade 0 fits every bound")
    }

    /// `c · t^m`.
    pub fn delta(
        monoid: GradedMonoid,
        m: MonoidElement,
        c: C,
        bound: u64,
    ) -> Result<Self, SeriesError> {
        Self::from_terms(monoid, bound, [(m, c)])
    }

    /// Builds a series from `(element, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        monoid: GradedMonoid,
        bound: u64,
        terms: impl IntoIterator<Item = (MonoidElement, C)>,
    ) -> Result<Self, SeriesError> {
        let mut acc: BTreeMap<GradedKey, C> = BTreeMap::new();
        for (m, c) in terms {
            monoid.check_element(&m)?;
            let key = monoid.key(&m);
            if key.grade > bound {
                return Err(SeriesError::GradeExceedsBound {
                    element: m,
                    grade: key.grade,
                    bound,
                });
            }
            acc.entry(key).or_insert_with(C::zero).accumulate(&c);
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            monoid,
            bound,
            terms: acc,
        })
    }

    /// Tabulates `f` on every element up to `bound`.
    pub fn from_fn(
        monoid: GradedMonoid,
        bound: u64,
        mut f: impl FnMut(&MonoidElement) -> C,
    ) -> Self {
        let terms = monoid
            .enumerate_up_to(bound)
            .into_iter()
            .filter_map(|m| {
                let c = f(&m);
                (!c.is_zero()).then(|| (monoid.key(&m), c))
            })
            .collect();
        Self {
            monoid,
            bound,
            terms,
        }
    }

    fn from_accumulator(monoid: GradedMonoid, bound: u64, acc: HashMap<GradedKey, C>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self {
            monoid,
            bound,
            terms,
        }
    }

    pub fn monoid(&self) -> &GradedMonoid {
        &self.monoid
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Number of stored (nonzero) coefficients.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero coefficients in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElement, &C)> {
        self.terms.iter().map(|(k, c)| (&k.element, c))
    }

    pub fn coeff(&self, m: &MonoidElement) -> Result<C, SeriesError> {
        self.monoid.check_element(m)?;
        let key = self.monoid.key(m);
        if key.grade > self.bound {
            return Err(SeriesError::GradeExceedsBound {
                element: m.clone(),
                grade: key.grade,
                bound: self.bound,
            });
        }
        Ok(self.terms.get(&key).cloned().unwrap_or_else(C::zero))
    }

    fn coeff_unchecked(&self, key: &GradedKey) -> Option<&C> {
        self.terms.get(key)
    }

    /// Restriction to a smaller bound.
    pub fn truncate(&self, bound: u64) -> Result<Self, SeriesError> {
        if bound > self.bound {
            return Err(SeriesError::InsufficientTruncation {
                requested: bound,
                available: self.bound,
            });
        }
        Ok(self.truncated_unchecked(bound))
    }

    fn truncated_unchecked(&self, bound: u64) -> Self {
        Self {
            monoid: self.monoid.clone(),
            bound,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.grade <= bound)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces the generator labels, keeping weights.
    pub fn relabeled(&self, monoid: GradedMonoid) -> Result<Self, SeriesError> {
        if monoid.rank() != self.monoid.rank() || !monoid.weights().eq(self.monoid.weights()) {
            return Err(SeriesError::MonoidMismatch {
                left: self.monoid.to_string(),
                right: monoid.to_string(),
            });
        }
        Ok(Self {
            monoid,
            bound: self.bound,
            terms: self.terms.clone(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        same_monoid(&self.monoid, &other.monoid)?;
        let bound = self.bound.min(other.bound);
        let mut terms = self.truncated_unchecked(bound).terms;
        for (k, c) in other.terms.iter().filter(|(k, _)| k.grade <= bound) {
            terms.entry(k.clone()).or_insert_with(C::zero).accumulate(c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self {
            monoid: self.monoid.clone(),
            bound,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            monoid: self.monoid.clone(),
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.negated()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    /// `s · f` for a scalar `s` of the coefficient ring.
    pub fn scale(&self, s: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), s.times(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self {
            monoid: self.monoid.clone(),
            bound: self.bound,
            terms,
        }
    }

    /// The convolution product `(f∗g)(m) = Σ_{a+b=m} f(a) g(b)`.
    ///
    /// Terms are visited in increasing grade, so the inner loop stops as soon
    /// as the combined grade passes the output bound.
    pub fn convolve(&self, other: &Self) -> Result<Self, SeriesError> {
        same_monoid(&self.monoid, &other.monoid)?;
        let bound = self.bound.min(other.bound);
        let mut acc: HashMap<GradedKey, C> = HashMap::new();
        for (ka, ca) in &self.terms {
            if ka.grade > bound {
                break;
            }
            for (kb, cb) in &other.terms {
                let grade = ka.grade + kb.grade;
                if grade > bound {
                    break;
                }
                let key = GradedKey {
                    grade,
                    element: &ka.element + &kb.element,
                };
                acc.entry(key)
                    .or_insert_with(C::zero)
                    .accumulate_product(ca, cb);
            }
        }
        Ok(Self::from_accumulator(self.monoid.clone(), bound, acc))
    }

    /// `(f ⊙ g)(m, n) = f(m) g(n)` on the product monoid `M × N`.
    pub fn exterior(&self, other: &Self) -> Self {
        let prod = product(&self.monoid, &other.monoid);
        let bound = self.bound.min(other.bound);
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            if ka.grade > bound {
                break;
            }
            for (kb, cb) in &other.terms {
                let grade = ka.grade + kb.grade;
                if grade > bound {
                    break;
                }
                let c = ca.times(cb);
                if !c.is_zero() {
                    let key = GradedKey {
                        grade,
                        element: ka.element.concat(&kb.element),
                    };
                    terms.insert(key, c);
                }
            }
        }
        Self {
            monoid: prod.monoid,
            bound,
            terms,
        }
    }

    /// `(Ψ_♯ f)(n) = Σ_{Ψ(m)=n} f(m)`, known up to [`pushforward_bound`].
    pub fn pushforward(&self, phi: &MonoidMorphism) -> Result<Self, SeriesError> {
        same_monoid(phi.source(), &self.monoid)?;
        if !phi.has_finite_fibers() {
            return Err(SeriesError::InfiniteFibers);
        }
        let bound = pushforward_bound(phi, self.bound);
        let target = phi.target();
        let mut acc: HashMap<GradedKey, C> = HashMap::new();
        for (k, c) in &self.terms {
            let image = phi.apply(&k.element)?;
            let grade = target.grade(&image);
            if grade <= bound {
                acc.entry(GradedKey {
                    grade,
                    element: image,
                })
                .or_insert_with(C::zero)
                .accumulate(c);
            }
        }
        Ok(Self::from_accumulator(target.clone(), bound, acc))
    }

    /// Push-forward truncated to `degree`, failing if the source bound does
    /// not determine the target up to that degree.
    pub fn pushforward_to(&self, phi: &MonoidMorphism, degree: u64) -> Result<Self, SeriesError> {
        let pushed = self.pushforward(phi)?;
        pushed.truncate(degree)
    }

    /// `(Ψ^♯ g)(m) = g(Ψ(m))`, known up to [`pullback_bound`].
    pub fn pullback(&self, phi: &MonoidMorphism) -> Result<Self, SeriesError> {
        same_monoid(phi.target(), &self.monoid)?;
        let bound = pullback_bound(phi, self.bound);
        let source = phi.source();
        let mut terms = BTreeMap::new();
        for m in source.enumerate_up_to(bound) {
            let key = self.monoid.key(&phi.apply(&m)?);
            if let Some(c) = self.coeff_unchecked(&key) {
                terms.insert(source.key(&m), c.clone());
            }
        }
        Ok(Self {
            monoid: source.clone(),
            bound,
            terms,
        })
    }

    fn check_comparable(&self, other: &Self, degree: u64) -> Result<(), SeriesError> {
        same_monoid(&self.monoid, &other.monoid)?;
        let available = self.bound.min(other.bound);
        if degree > available {
            return Err(SeriesError::InsufficientTruncation {
                requested: degree,
                available,
            });
        }
        Ok(())
    }

    /// First element (graded-lex) of grade ≤ `degree` where the two differ.
    pub fn first_difference(
        &self,
        other: &Self,
        degree: u64,
    ) -> Result<Option<Difference<C>>, SeriesError> {
        self.check_comparable(other, degree)?;
        let a = self.terms.range(..).take_while(|(k, _)| k.grade <= degree);
        let b = other.terms.range(..).take_while(|(k, _)| k.grade <= degree);
        let mut a = a.peekable();
        let mut b = b.peekable();
        loop {
            let diff = match (a.peek(), b.peek()) {
                (None, None) => return Ok(None),
                (Some((ka, ca)), None) => Some(((*ka).clone(), (*ca).clone(), C::zero())),
                (None, Some((kb, cb))) => Some(((*kb).clone(), C::zero(), (*cb).clone())),
                (Some((ka, ca)), Some((kb, cb))) => match ka.cmp(kb) {
                    std::cmp::Ordering::Less => Some(((*ka).clone(), (*ca).clone(), C::zero())),
                    std::cmp::Ordering::Greater => Some(((*kb).clone(), C::zero(), (*cb).clone())),
                    std::cmp::Ordering::Equal => {
                        if ca != cb {
                            Some(((*ka).clone(), (*ca).clone(), (*cb).clone()))
                        } else {
                            a.next();
                            b.next();
                            None
                        }
                    }
                },
            };
            if let Some((key, left, right)) = diff {
                return Ok(Some(Difference {
                    element: key.element,
                    left,
                    right,
                }));
            }
        }
    }

    /// True iff the coefficients agree on every element of grade ≤ `degree`.
    pub fn equals_up_to(&self, other: &Self, degree: u64) -> Result<bool, SeriesError> {
        Ok(self.first_difference(other, degree)?.is_none())
    }

    pub fn map_coefficients<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> FormalSeries<D> {
        FormalSeries {
            monoid: self.monoid.clone(),
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl FormalSeries<IntPoly> {
    /// Evaluates every coefficient polynomial at `x`; at `x = -1` this turns a
    /// Hilbert series into the corresponding Euler series.
    pub fn evaluate_polynomial_coefficients(&self, x: &BigInt) -> FormalSeries<BigInt> {
        self.map_coefficients(|p| p.evaluate(x))
    }
}
