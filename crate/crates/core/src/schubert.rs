//! Schubert symbols on partial flag varieties of projective space.
//!
//! A flag type `F(d_1,…,d_r; n)` parametrises nested projective subspaces of
//! `P^n` of dimensions `d_1 < … < d_r`. Schubert varieties are indexed by
//! nested sequences `a^1 ⊂ … ⊂ a^r` with `a^i` of length `d_i + 1` and entries
//! in `[0, n]`; their classes freely generate the monoids of effective cycles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monoid::{Generator, GradedMonoid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error("invalid flag type: {0}")]
    InvalidFlagType(String),
    #[error("invalid Schubert symbol: {0}")]
    InvalidSymbol(String),
    #[error("{0} is not a two-step symbol omitting exactly one entry")]
    NotATraceSymbol(String),
    #[error("{0} is not a Grassmannian symbol of the expected type")]
    WrongType(String),
    #[error("cannot parse Schubert label `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagType {
    dims: Vec<u32>,
    ambient: u32,
}

impl FlagType {
    pub fn new(dims: Vec<u32>, ambient: u32) -> Result<Self, SchubertError> {
        if dims.is_empty() {
            return Err(SchubertError::InvalidFlagType(
                "no subspace dimensions".into(),
            ));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SchubertError::InvalidFlagType(format!(
                "dimensions {dims:?} are not strictly increasing"
            )));
        }
        if *dims.last().unwrap() > ambient {
            return Err(SchubertError::InvalidFlagType(format!(
                "dimension {} exceeds ambient P^{ambient}",
                dims.last().unwrap()
            )));
        }
        Ok(Self { dims, ambient })
    }

    /// `G(d, n)`, the `d`-planes in `P^n`.
    pub fn grassmannian(d: u32, n: u32) -> Result<Self, SchubertError> {
        Self::new(vec![d], n)
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    /// Dimension of the flag variety itself (its top Schubert symbol).
    pub fn variety_dimension(&self) -> u32 {
        enumerate_symbols(self)
            .iter()
            .map(SchubertSymbol::dimension)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.len() == 1 {
            write!(f, "G({},{})", self.dims[0], self.ambient)
        } else {
            let dims: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
            write!(f, "F({};{})", dims.join(","), self.ambient)
        }
    }
}

/// `⟨a^1; …; a^r⟩^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertSymbol {
    flag_type: FlagType,
    sequences: Vec<Vec<u32>>,
}

impl SchubertSymbol {
    pub fn new(flag_type: FlagType, sequences: Vec<Vec<u32>>) -> Result<Self, SchubertError> {
        if sequences.len() != flag_type.dims.len() {
            return Err(SchubertError::InvalidSymbol(format!(
                "{} sequences for a flag of length {}",
                sequences.len(),
                flag_type.dims.len()
            )));
        }
        for (seq, &d) in sequences.iter().zip(&flag_type.dims) {
            if seq.len() != d as usize + 1 {
                return Err(SchubertError::InvalidSymbol(format!(
                    "sequence {seq:?} should have length {}",
                    d + 1
                )));
            }
            if seq.windows(2).any(|w| w[0] >= w[1]) {
                return Err(SchubertError::InvalidSymbol(format!(
                    "sequence {seq:?} is not strictly increasing"
                )));
            }
            if seq.iter().any(|&a| a > flag_type.ambient) {
                return Err(SchubertError::InvalidSymbol(format!(
                    "sequence {seq:?} has an entry beyond {}",
                    flag_type.ambient
                )));
            }
        }
        for w in sequences.windows(2) {
            if !w[0].iter().all(|a| w[1].contains(a)) {
                return Err(SchubertError::InvalidSymbol(format!(
                    "{:?} is not contained in {:?}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self {
            flag_type,
            sequences,
        })
    }

    /// Symbol on a Grassmannian `G(len-1, n)`.
    pub fn grassmannian(sequence: Vec<u32>, n: u32) -> Result<Self, SchubertError> {
        let d = sequence
            .len()
            .checked_sub(1)
            .ok_or_else(|| SchubertError::InvalidSymbol("empty sequence".into()))?;
        Self::new(FlagType::grassmannian(d as u32, n)?, vec![sequence])
    }

    /// Symbol whose flag type is read off the sequence lengths.
    pub fn from_sequences(sequences: Vec<Vec<u32>>, n: u32) -> Result<Self, SchubertError> {
        let dims = sequences
            .iter()
            .map(|s| {
                s.len()
                    .checked_sub(1)
                    .map(|d| d as u32)
                    .ok_or_else(|| SchubertError::InvalidSymbol("empty sequence".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(FlagType::new(dims, n)?, sequences)
    }

    pub fn flag_type(&self) -> &FlagType {
        &self.flag_type
    }

    pub fn sequences(&self) -> &[Vec<u32>] {
        &self.sequences
    }

    /// `Σ_i Σ'_j (a^i_j - j)`, skipping entries already present in `a^{i-1}`.
    pub fn dimension(&self) -> u32 {
        let mut total = 0;
        for (i, seq) in self.sequences.iter().enumerate() {
            for (j, &a) in seq.iter().enumerate() {
                if i > 0 && self.sequences[i - 1].contains(&a) {
                    continue;
                }
                total += a - j as u32;
            }
        }
        total
    }

    /// Canonical generator label, e.g. `⟨1;0,1⟩^2`.
    pub fn label(&self) -> String {
        format!("⟨{}⟩^{}", self.body(), self.flag_type.ambient)
    }

    /// Label for terminals without Unicode, e.g. `<1;0,1>^2`.
    pub fn ascii_label(&self) -> String {
        format!("<{}>^{}", self.body(), self.flag_type.ambient)
    }

    fn body(&self) -> String {
        self.sequences
            .iter()
            .map(|s| {
                s.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for SchubertSymbol {
    type Err = SchubertError;

    /// Accepts both `⟨1;0,1⟩^2` and `<1;0,1>^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || SchubertError::Parse(s.to_string());
        let s = s.trim();
        let (body, ambient) = if let Some(rest) = s.strip_prefix('⟨') {
            rest.split_once("⟩^").ok_or_else(parse_err)?
        } else if let Some(rest) = s.strip_prefix('<') {
            rest.split_once(">^").ok_or_else(parse_err)?
        } else {
            return Err(parse_err());
        };
        let ambient: u32 = ambient.parse().map_err(|_| parse_err())?;
        let sequences = body
            .split(';')
            .map(|part| {
                part.split(',')
                    .map(|a| a.trim().parse::<u32>().map_err(|_| parse_err()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_sequences(sequences, ambient)
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    ambient: u32,
    dims: Vec<u32>,
    sequences: Vec<Vec<u32>>,
}

impl Serialize for SchubertSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymbolJson {
            ambient: self.flag_type.ambient,
            dims: self.flag_type.dims.clone(),
            sequences: self.sequences.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchubertSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SymbolJson::deserialize(d)?;
        let ft = FlagType::new(raw.dims, raw.ambient).map_err(serde::de::Error::custom)?;
        SchubertSymbol::new(ft, raw.sequences).map_err(serde::de::Error::custom)
    }
}

fn subsets_of_size(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn rec(pool: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All Schubert symbols of a flag type, ordered lexicographically by their
/// sequences (innermost first).
pub fn enumerate_symbols(ft: &FlagType) -> Vec<SchubertSymbol> {
    let full: Vec<u32> = (0..=ft.ambient).collect();
    // Build chains from the outermost sequence inwards.
    let mut chains: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    for &d in ft.dims.iter().rev() {
        let mut next = Vec::new();
        for chain in &chains {
            let pool = chain.first().unwrap_or(&full);
            for sub in subsets_of_size(pool, d as usize + 1) {
                let mut c = Vec::with_capacity(chain.len() + 1);
                c.push(sub);
                c.extend(chain.iter().cloned());
                next.push(c);
            }
        }
        chains = next;
    }
    let mut symbols: Vec<SchubertSymbol> = chains
        .into_iter()
        .map(|sequences| SchubertSymbol {
            flag_type: ft.clone(),
            sequences,
        })
        .collect();
    symbols.sort();
    symbols
}

/// Symbols of dimension `p`, in [`enumerate_symbols`] order.
pub fn basis_symbols(ft: &FlagType, p: u32) -> Vec<SchubertSymbol> {
    enumerate_symbols(ft)
        .into_iter()
        .filter(|s| s.dimension() == p)
        .collect()
}

/// The free monoid of effective `p`-cycle classes, one weight-1 generator per
/// Schubert symbol of dimension `p`. Empty when `p` exceeds the dimension.
pub fn basis(ft: &FlagType, p: u32) -> GradedMonoid {
    GradedMonoid::new(
        basis_symbols(ft, p)
            .iter()
            .map(|s| Generator::new(s.label(), 1))
            .collect(),
    )
    .expect("distinct symbols have distinct labels")
}

/// Topological Euler characteristic: the number of torus-fixed points, one per symbol.
pub fn euler_characteristic(ft: &FlagType) -> u32 {
    enumerate_symbols(ft).len() as u32
}

/// The trace map from `F(d-1, d; n-1)` to `G(d, n)` on Schubert generators:
/// `⟨a_0…â_j…a_d; a_0…a_d⟩^{n-1} ↦ ⟨a_0,…,a_{j-1}, a_j+1,…,a_d+1⟩^n`.
pub fn trace_phi(sigma: &SchubertSymbol) -> Result<SchubertSymbol, SchubertError> {
    let dims = sigma.flag_type.dims();
    let not_trace = || SchubertError::NotATraceSymbol(sigma.label());
    if dims.len() != 2 || dims[1] != dims[0] + 1 {
        return Err(not_trace());
    }
    let (inner, outer) = (&sigma.sequences[0], &sigma.sequences[1]);
    let j = omitted_index(inner, outer).ok_or_else(not_trace)?;
    let image: Vec<u32> = outer
        .iter()
        .enumerate()
        .map(|(k, &a)| if k < j { a } else { a + 1 })
        .collect();
    SchubertSymbol::grassmannian(image, sigma.flag_type.ambient + 1)
}

/// Index of the unique entry of `outer` missing from `inner`.
pub fn omitted_index(inner: &[u32], outer: &[u32]) -> Option<usize> {
    if inner.len() + 1 != outer.len() {
        return None;
    }
    let missing: Vec<usize> = outer
        .iter()
        .enumerate()
        .filter(|(_, a)| !inner.contains(a))
        .map(|(j, _)| j)
        .collect();
    match missing[..] {
        [j] => Some(j),
        _ => None,
    }
}

fn expect_grassmannian(sigma: &SchubertSymbol) -> Result<&[u32], SchubertError> {
    match sigma.sequences.as_slice() {
        [seq] => Ok(seq),
        _ => Err(SchubertError::WrongType(sigma.label())),
    }
}

/// `G(d, n-1) ↪ G(d, n)`: the same index sequence in the larger ambient space.
pub fn inclusion_i(sigma: &SchubertSymbol) -> Result<SchubertSymbol, SchubertError> {
    let seq = expect_grassmannian(sigma)?;
    SchubertSymbol::grassmannian(seq.to_vec(), sigma.flag_type.ambient + 1)
}

/// `G(d-1, n-1) ↪ G(d, n)` by joining with the point at infinity:
/// `⟨a_0,…,a_{d-1}⟩^{n-1} ↦ ⟨0, a_0+1, …, a_{d-1}+1⟩^n`.
pub fn inclusion_j(sigma: &SchubertSymbol) -> Result<SchubertSymbol, SchubertError> {
    let seq = expect_grassmannian(sigma)?;
    let image = std::iter::once(0)
        .chain(seq.iter().map(|a| a + 1))
        .collect();
    SchubertSymbol::grassmannian(image, sigma.flag_type.ambient + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SchubertSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions_of_named_symbols() {
        assert_eq!(sym("⟨0;0,1⟩^2").dimension(), 0);
        assert_eq!(sym("⟨0;0,2⟩^2").dimension(), 1);
        assert_eq!(sym("⟨1;0,1⟩^2").dimension(), 1);
        assert_eq!(sym("⟨1;1,2⟩^2").dimension(), 2);
        assert_eq!(sym("⟨2;0,2⟩^2").dimension(), 2);
        assert_eq!(sym("⟨2;1,2⟩^2").dimension(), 3);
        assert_eq!(sym("⟨0,3⟩^3").dimension(), 2);
        assert_eq!(sym("⟨1,3⟩^3").dimension(), 3);
    }

    #[test]
    fn grassmannian_13_basis() {
        let g13 = FlagType::grassmannian(1, 3).unwrap();
        let labels: Vec<String> = basis(&g13, 2).labels().map(String::from).collect();
        assert_eq!(labels, vec!["⟨0,3⟩^3", "⟨1,2⟩^3"]);
        let counts: Vec<usize> = (0..=4).map(|p| basis(&g13, p).rank()).collect();
        assert_eq!(counts, vec![1, 1, 2, 1, 1]);
        assert_eq!(basis(&g13, 5).rank(), 0);
        assert_eq!(euler_characteristic(&g13), 6);
        assert_eq!(g13.variety_dimension(), 4);
    }

    #[test]
    fn flag_012_bases() {
        let f = FlagType::new(vec![0, 1], 2).unwrap();
        let p1: Vec<String> = basis(&f, 1).labels().map(String::from).collect();
        assert_eq!(p1, vec!["⟨0;0,2⟩^2", "⟨1;0,1⟩^2"]);
        let p2: Vec<String> = basis(&f, 2).labels().map(String::from).collect();
        assert_eq!(p2, vec!["⟨1;1,2⟩^2", "⟨2;0,2⟩^2"]);
        assert_eq!(euler_characteristic(&f), 6);
        assert_eq!(f.variety_dimension(), 3);
    }

    #[test]
    fn trace_map_examples() {
        let cases = [
            ("⟨0;0,1⟩^2", "⟨0,2⟩^3"),
            ("⟨1;0,1⟩^2", "⟨1,2⟩^3"),
            ("⟨0;0,2⟩^2", "⟨0,3⟩^3"),
            ("⟨1;1,2⟩^2", "⟨1,3⟩^3"),
            ("⟨2;0,2⟩^2", "⟨1,3⟩^3"),
            ("⟨2;1,2⟩^2", "⟨2,3⟩^3"),
        ];
        for (src, dst) in cases {
            let s = sym(src);
            let image = trace_phi(&s).unwrap();
            assert_eq!(image, sym(dst), "{src}");
            assert_eq!(image.dimension(), s.dimension() + 1);
        }
        assert!(matches!(
            trace_phi(&sym("⟨0,1⟩^3")),
            Err(SchubertError::NotATraceSymbol(_))
        ));
    }

    #[test]
    fn inclusions() {
        assert_eq!(inclusion_i(&sym("⟨0,2⟩^2")).unwrap(), sym("⟨0,2⟩^3"));
        assert_eq!(inclusion_i(&sym("⟨1,2⟩^2")).unwrap(), sym("⟨1,2⟩^3"));
        assert_eq!(inclusion_j(&sym("⟨1⟩^2")).unwrap(), sym("⟨0,2⟩^3"));
        assert_eq!(inclusion_j(&sym("⟨2⟩^2")).unwrap(), sym("⟨0,3⟩^3"));
        let g12 = FlagType::grassmannian(1, 2).unwrap();
        for s in enumerate_symbols(&g12) {
            assert_eq!(inclusion_i(&s).unwrap().dimension(), s.dimension());
        }
        let g02 = FlagType::grassmannian(0, 2).unwrap();
        for s in enumerate_symbols(&g02) {
            assert_eq!(inclusion_j(&s).unwrap().dimension(), s.dimension());
        }
        assert!(inclusion_i(&sym("⟨0;0,1⟩^2")).is_err());
    }

    #[test]
    fn validation_and_parsing() {
        let f = FlagType::new(vec![0, 1], 2).unwrap();
        assert!(SchubertSymbol::new(f.clone(), vec![vec![2], vec![0, 1]]).is_err());
        assert!(SchubertSymbol::new(f.clone(), vec![vec![0], vec![1, 0]]).is_err());
        assert!(SchubertSymbol::new(f, vec![vec![0], vec![0, 3]]).is_err());
        assert!(FlagType::new(vec![1, 1], 3).is_err());
        assert!(FlagType::new(vec![4], 3).is_err());
        assert_eq!(sym("<1;0,1>^2"), sym("⟨1;0,1⟩^2"));
        assert_eq!(sym("⟨1;0,1⟩^2").ascii_label(), "<1;0,1>^2");
        assert!("⟨1;0,1⟩".parse::<SchubertSymbol>().is_err());
        assert!("1,2".parse::<SchubertSymbol>().is_err());
    }

    #[test]
    fn json_shape() {
        let s = sym("⟨1;0,1⟩^2");
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"ambient":2,"dims":[0,1],"sequences":[[1],[0,1]]}"#);
        assert_eq!(serde_json::from_str::<SchubertSymbol>(&j).unwrap(), s);
        let bad = r#"{"ambient":2,"dims":[0,1],"sequences":[[2],[0,1]]}"#;
        assert!(serde_json::from_str::<SchubertSymbol>(bad).is_err());
    }
}
