//! Brute-force reference implementations.
//!
//! Everything here works on dense tables indexed by
//! [`GradedMonoid::enumerate_up_to`] and follows the definitions literally,
//! with no sparsity or early exits. Only suitable for small ranks and bounds.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::Coefficient;
use crate::monoid::{GradedMonoid, MonoidElement, MonoidMorphism};
use crate::series::{pushforward_bound, FormalSeries, RationalSeries, SeriesError};

/// Coefficients on every element of grade ≤ `bound`, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTable<C> {
    monoid: GradedMonoid,
    bound: u64,
    elements: Vec<MonoidElement>,
    values: Vec<C>,
}

impl<C: Coefficient> DenseTable<C> {
    pub fn zeros(monoid: GradedMonoid, bound: u64) -> Self {
        let elements = monoid.enumerate_up_to(bound);
        let values = vec![C::zero(); elements.len()];
        Self {
            monoid,
            bound,
            elements,
            values,
        }
    }

    /// Dense copy of a series, read coefficient by coefficient.
    pub fn from_series(f: &FormalSeries<C>, bound: u64) -> Result<Self, SeriesError> {
        let mut t = Self::zeros(f.monoid().clone(), bound);
        for (i, m) in t.elements.iter().enumerate() {
            t.values[i] = f.coeff(m)?;
        }
        Ok(t)
    }

    pub fn monoid(&self) -> &GradedMonoid {
        &self.monoid
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MonoidElement, &C)> {
        self.elements.iter().zip(&self.values)
    }

    pub fn get(&self, m: &MonoidElement) -> Option<&C> {
        self.elements
            .iter()
            .position(|e| e == m)
            .map(|i| &self.values[i])
    }

    fn add_at(&mut self, m: &MonoidElement, c: &C) {
        if let Some(i) = self.elements.iter().position(|e| e == m) {
            self.values[i].accumulate(c);
        }
    }

    /// True iff `f` has exactly these coefficients on every element of the table.
    pub fn matches(&self, f: &FormalSeries<C>) -> bool {
        f.monoid() == &self.monoid
            && self
                .entries()
                .all(|(m, c)| f.coeff(m).map(|v| &v == c).unwrap_or(false))
    }

    pub fn to_series(&self) -> FormalSeries<C> {
        FormalSeries::from_terms(
            self.monoid.clone(),
            self.bound,
            self.elements
                .iter()
                .cloned()
                .zip(self.values.iter().cloned()),
        )
        .expect("table elements lie within the bound")
    }
}

/// `(f∗g)(m) = Σ_{a+b=m} f(a) g(b)` by scanning all pairs `(a, b)`.
pub fn naive_convolve<C: Coefficient>(
    f: &FormalSeries<C>,
    g: &FormalSeries<C>,
    bound: u64,
) -> Result<DenseTable<C>, SeriesError> {
    let fa = DenseTable::from_series(f, bound)?;
    let gb = DenseTable::from_series(g, bound)?;
    let mut out = DenseTable::zeros(f.monoid().clone(), bound);
    let targets: Vec<MonoidElement> = out.elements.clone();
    for m in &targets {
        let mut acc = C::zero();
        for (a, ca) in fa.entries() {
            for (b, cb) in gb.entries() {
                if &(a + b) == m {
                    acc.accumulate(&ca.times(cb));
                }
            }
        }
        out.add_at(m, &acc);
    }
    Ok(out)
}

/// `(Ψ_♯ f)(n)` by scanning the whole source domain up to the bound of `f`
/// for each target element `n` of grade ≤ `target_bound`.
pub fn naive_pushforward<C: Coefficient>(
    phi: &MonoidMorphism,
    f: &FormalSeries<C>,
    target_bound: u64,
) -> Result<DenseTable<C>, SeriesError> {
    if !phi.has_finite_fibers() {
        return Err(SeriesError::InfiniteFibers);
    }
    let available = pushforward_bound(phi, f.bound());
    if target_bound > available {
        return Err(SeriesError::InsufficientTruncation {
            requested: target_bound,
            available,
        });
    }
    let source = DenseTable::from_series(f, f.bound())?;
    let mut out = DenseTable::zeros(phi.target().clone(), target_bound);
    let targets: Vec<MonoidElement> = out.elements.clone();
    for n in &targets {
        let mut acc = C::zero();
        for (m, c) in source.entries() {
            if &phi.apply(m)? == n {
                acc.accumulate(c);
            }
        }
        out.add_at(n, &acc);
    }
    Ok(out)
}

/// `(Ψ^♯ g)(m) = g(Ψ(m))` for every source element up to `source_bound`.
pub fn naive_pullback<C: Coefficient>(
    phi: &MonoidMorphism,
    g: &FormalSeries<C>,
    source_bound: u64,
) -> Result<DenseTable<C>, SeriesError> {
    let mut out = DenseTable::zeros(phi.source().clone(), source_bound);
    for i in 0..out.elements.len() {
        let image = phi.apply(&out.elements[i])?;
        out.values[i] = g.coeff(&image)?;
    }
    Ok(out)
}

/// Expansion of a closed form as the literal product of the numerator with
/// `Σ_j C(j+e-1, e-1) t^{jm}` for every denominator factor.
pub fn naive_expand(r: &RationalSeries, bound: u64) -> Result<DenseTable<BigInt>, SeriesError> {
    let monoid = r.monoid().clone();
    let numerator = FormalSeries::from_terms(
        monoid.clone(),
        bound,
        r.numerator()
            .iter()
            .filter(|(m, _)| monoid.grade(m) <= bound)
            .cloned(),
    )?;
    let mut acc = DenseTable::from_series(&numerator, bound)?;
    for (m, e) in r.denominator() {
        let grade = monoid.grade(m);
        let terms = (0..).take_while(|j| j * grade <= bound).map(|j| {
            let e = u64::from(*e);
            (m.scaled(j as u32), binomial(j + e - 1, e - 1))
        });
        let factor = FormalSeries::from_terms(monoid.clone(), bound, terms)?;
        acc = naive_convolve(&acc.to_series(), &factor, bound)?;
    }
    Ok(acc)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `dim S_λ(C^3)` for `λ = (r+s, s, 0)`: `(r+1)(s+1)(r+s+2)/2`.
pub fn weyl_dim_gl3(r: u64, s: u64) -> BigInt {
    let twice = BigInt::from(r + 1) * (s + 1) * (r + s + 2);
    debug_assert!((&twice % 2u32).is_zero());
    twice / 2u32
}

/// Number of partitions of `size` with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(rows: u32, cols: u32, size: u32) -> u64 {
    fn rec(rows: u32, max_part: u32, size: u32, memo: &mut HashMap<(u32, u32, u32), u64>) -> u64 {
        if size == 0 {
            return 1;
        }
        if rows == 0 || max_part == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(rows, max_part, size)) {
            return v;
        }
        let v = (0..=max_part.min(size))
            .map(|first| {
                if first == 0 {
                    0
                } else {
                    rec(rows - 1, first, size - first, memo)
                }
            })
            .sum();
        memo.insert((rows, max_part, size), v);
        v
    }
    rec(rows, cols, size, &mut HashMap::new())
}
