use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{pullback_bound, pushforward_bound, same_monoid, FormalSeries, SeriesError};
use crate::coeff::IntPoly;
use crate::monoid::{GradedKey, GradedMonoid, MonoidElement, MonoidMorphism};

/// The ranks `rank A_{m,k}` of a finite `M`-graded algebra that is also
/// graded by an auxiliary degree `k ≥ 0`, recorded for `grade(m) ≤ bound`.
///
/// Only ranks matter for Hilbert and Euler series, so the algebra structure
/// itself is not represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRanks {
    monoid: GradedMonoid,
    bound: u64,
    ranks: BTreeMap<GradedKey, BTreeMap<u32, u64>>,
}

impl GradedRanks {
    pub fn new(
        monoid: GradedMonoid,
        bound: u64,
        pieces: impl IntoIterator<Item = (MonoidElement, u32, u64)>,
    ) -> Result<Self, SeriesError> {
        let mut ranks: BTreeMap<GradedKey, BTreeMap<u32, u64>> = BTreeMap::new();
        for (m, k, r) in pieces {
            monoid.check_element(&m)?;
            let key = monoid.key(&m);
            if key.grade > bound {
                return Err(SeriesError::GradeExceedsBound {
                    element: m,
                    grade: key.grade,
                    bound,
                });
            }
            if r > 0 {
                *ranks.entry(key).or_default().entry(k).or_insert(0) += r;
            }
        }
        Ok(Self {
            monoid,
            bound,
            ranks,
        })
    }

    pub fn monoid(&self) -> &GradedMonoid {
        &self.monoid
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn rank(&self, m: &MonoidElement, k: u32) -> u64 {
        self.ranks
            .get(&self.monoid.key(m))
            .and_then(|row| row.get(&k))
            .copied()
            .unwrap_or(0)
    }

    /// `P_A(u)(m) = Σ_k rank(A_{m,k}) u^k`.
    pub fn hilbert_series(&self) -> FormalSeries<IntPoly> {
        let terms = self.ranks.iter().map(|(key, row)| {
            let top = row.keys().next_back().copied().unwrap_or(0) as usize;
            let mut coeffs = vec![BigInt::zero(); top + 1];
            for (&k, &r) in row {
                coeffs[k as usize] = BigInt::from(r);
            }
            (key.element.clone(), IntPoly::new(coeffs))
        });
        FormalSeries::from_terms(self.monoid.clone(), self.bound, terms)
            .expect("keys respect the bound")
    }

    /// `E_A(m) = Σ_k (-1)^k rank(A_{m,k})`, summed directly from the ranks.
    pub fn euler_series(&self) -> FormalSeries<BigInt> {
        let terms = self.ranks.iter().map(|(key, row)| {
            let chi = row.iter().fold(
                BigInt::zero(),
                |acc, (&k, &r)| {
                    if k % 2 == 0 {
                        acc + r
                    } else {
                        acc - r
                    }
                },
            );
            (key.element.clone(), chi)
        });
        FormalSeries::from_terms(self.monoid.clone(), self.bound, terms)
            .expect("keys respect the bound")
    }

    /// `(Ψ_♯ A)_{n,k} = ⊕_{Ψ(m)=n} A_{m,k}`.
    pub fn pushforward(&self, phi: &MonoidMorphism) -> Result<Self, SeriesError> {
        same_monoid(phi.source(), &self.monoid)?;
        if !phi.has_finite_fibers() {
            return Err(SeriesError::InfiniteFibers);
        }
        let bound = pushforward_bound(phi, self.bound);
        let mut pieces = Vec::new();
        for (key, row) in &self.ranks {
            let n = phi.apply(&key.element)?;
            if phi.target().grade(&n) <= bound {
                pieces.extend(row.iter().map(|(&k, &r)| (n.clone(), k, r)));
            }
        }
        Self::new(phi.target().clone(), bound, pieces)
    }

    /// `(Ψ^♯ B)_{m,k} = B_{Ψ(m),k}`.
    pub fn pullback(&self, phi: &MonoidMorphism) -> Result<Self, SeriesError> {
        same_monoid(phi.target(), &self.monoid)?;
        let bound = pullback_bound(phi, self.bound);
        let mut pieces = Vec::new();
        for m in phi.source().enumerate_up_to(bound) {
            let n = self.monoid.key(&phi.apply(&m)?);
            if let Some(row) = self.ranks.get(&n) {
                pieces.extend(row.iter().map(|(&k, &r)| (m.clone(), k, r)));
            }
        }
        Self::new(phi.source().clone(), bound, pieces)
    }
}
