use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{same_monoid, FormalSeries, SeriesError};
use crate::monoid::{GradedKey, GradedMonoid, MonoidElement};

/// A closed form `N(t) / Π (1 - t^m)^e` with a finite integer numerator.
///
/// No cancellation between numerator and denominator is attempted; two
/// closed forms are compared by expanding them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    monoid: GradedMonoid,
    numerator: Vec<(MonoidElement, BigInt)>,
    denominator: Vec<(MonoidElement, u32)>,
}

impl RationalSeries {
    /// Validates and normalises: numerator terms are merged and sorted
    /// graded-lex with zeros dropped; denominator factors are sorted
    /// graded-lex with repeated elements merged by adding multiplicities.
    pub fn new(
        monoid: GradedMonoid,
        numerator: impl IntoIterator<Item = (MonoidElement, BigInt)>,
        denominator: impl IntoIterator<Item = (MonoidElement, u32)>,
    ) -> Result<Self, SeriesError> {
        let mut num: BTreeMap<GradedKey, BigInt> = BTreeMap::new();
        for (m, c) in numerator {
            monoid.check_element(&m)?;
            *num.entry(monoid.key(&m)).or_insert_with(BigInt::zero) += c;
        }
        let mut den: BTreeMap<GradedKey, u32> = BTreeMap::new();
        for (m, e) in denominator {
            monoid.check_element(&m)?;
            let key = monoid.key(&m);
            if key.grade == 0 {
                return Err(SeriesError::ZeroGradeDenominator(m));
            }
            if e == 0 {
                return Err(SeriesError::ZeroMultiplicity(m));
            }
            *den.entry(key).or_insert(0) += e;
        }
        Ok(Self {
            monoid,
            numerator: num
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.element, c))
                .collect(),
            denominator: den.into_iter().map(|(k, e)| (k.element, e)).collect(),
        })
    }

    pub fn one(monoid: GradedMonoid) -> Self {
        let zero = monoid.zero();
        Self {
            monoid,
            numerator: vec![(zero, BigInt::from(1))],
            denominator: Vec::new(),
        }
    }

    /// `1 / Π (1 - t^m)^e` with a unit numerator.
    pub fn product_of_geometrics(
        monoid: GradedMonoid,
        factors: impl IntoIterator<Item = (MonoidElement, u32)>,
    ) -> Result<Self, SeriesError> {
        let zero = monoid.zero();
        Self::new(monoid, [(zero, BigInt::from(1))], factors)
    }

    pub fn monoid(&self) -> &GradedMonoid {
        &self.monoid
    }

    pub fn numerator(&self) -> &[(MonoidElement, BigInt)] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[(MonoidElement, u32)] {
        &self.denominator
    }

    /// Same closed form over a monoid with different labels but equal weights.
    pub fn relabeled(&self, monoid: GradedMonoid) -> Result<Self, SeriesError> {
        if monoid.rank() != self.monoid.rank() || !monoid.weights().eq(self.monoid.weights()) {
            return Err(SeriesError::MonoidMismatch {
                left: self.monoid.to_string(),
                right: monoid.to_string(),
            });
        }
        Ok(Self {
            monoid,
            ..self.clone()
        })
    }

    /// Formal product: numerators multiplied as polynomials, factor lists merged.
    pub fn multiply(&self, other: &Self) -> Result<Self, SeriesError> {
        same_monoid(&self.monoid, &other.monoid)?;
        let mut num = Vec::with_capacity(self.numerator.len() * other.numerator.len());
        for (a, ca) in &self.numerator {
            for (b, cb) in &other.numerator {
                num.push((a + b, ca * cb));
            }
        }
        let den = self.denominator.iter().chain(&other.denominator).cloned();
        Self::new(self.monoid.clone(), num, den)
    }

    /// Power-series expansion up to grade `bound`.
    ///
    /// The numerator is laid out on the dense graded-lex table, then divided
    /// by each factor `1 - t^m` in turn via `h(n) = f(n) + h(n - m)`. Since
    /// `grade(m) ≥ 1` the right-hand side is already final when `n` is reached.
    pub fn expand(&self, bound: u64) -> FormalSeries<BigInt> {
        let elements = self.monoid.enumerate_up_to(bound);
        let index: HashMap<&MonoidElement, usize> =
            elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut values = vec![BigInt::zero(); elements.len()];
        for (m, c) in &self.numerator {
            if let Some(&i) = index.get(m) {
                values[i] += c;
            }
        }
        for (m, e) in &self.denominator {
            let predecessor: Vec<Option<usize>> = elements
                .iter()
                .map(|n| n.checked_sub(m).map(|prev| index[&prev]))
                .collect();
            for _ in 0..*e {
                for i in 0..elements.len() {
                    if let Some(j) = predecessor[i] {
                        let prev = values[j].clone();
                        values[i] += prev;
                    }
                }
            }
        }
        FormalSeries::from_terms(self.monoid.clone(), bound, elements.into_iter().zip(values))
            .expect("elements come from enumerate_up_to")
    }
}
