//! Validated discrete invariants: genus, chain types, VHS types and
//! stability parameters.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Genus of the base curve, always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Genus(i64);

impl Genus {
    pub fn new(g: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// `g - 1`.
    pub fn g1(self) -> i64 {
        self.0 - 1
    }

    /// Degree of the canonical bundle, `2g - 2`.
    pub fn canonical_degree(self) -> i64 {
        2 * self.0 - 2
    }
}

impl TryFrom<i64> for Genus {
    type Error = Error;
    fn try_from(g: i64) -> Result<Self> {
        Genus::new(g)
    }
}

impl From<Genus> for i64 {
    fn from(g: Genus) -> i64 {
        g.0
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Deserialize)]
struct RawType {
    ranks: Vec<i64>,
    degrees: Vec<i64>,
}

/// Rank and degree vectors `(r_1..r_l; d_1..d_l)` of a holomorphic chain.
///
/// Indices in the accessor helpers are 1-based; positions `0` and `l + 1`
/// read as rank and degree zero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawType")]
pub struct ChainType {
    ranks: Vec<i64>,
    degrees: Vec<i64>,
}

impl ChainType {
    pub fn new(ranks: Vec<i64>, degrees: Vec<i64>) -> Result<Self> {
        if ranks.is_empty() && degrees.is_empty() {
            return Err(Error::EmptyType);
        }
        if let Some((index, &rank)) = ranks.iter().enumerate().find(|(_, &r)| r <= 0) {
            return Err(Error::NonPositiveRank {
                index: index + 1,
                rank,
            });
        }
        if ranks.len() != degrees.len() {
            return Err(Error::LengthMismatch {
                expected: ranks.len(),
                found: degrees.len(),
            });
        }
        if ranks.is_empty() {
            return Err(Error::EmptyType);
        }
        Ok(ChainType { ranks, degrees })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    /// Always false; kept for the `len`/`is_empty` convention.
    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn total_rank(&self) -> i64 {
        self.ranks.iter().sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `r_i` for `i` in `0..=l+1`, zero outside `1..=l`.
    pub fn rank_at(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.ranks.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `d_i` for `i` in `0..=l+1`, zero outside `1..=l`.
    pub fn degree_at(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.degrees.get(i - 1).copied().unwrap_or(0)
        }
    }
}

impl TryFrom<RawType> for ChainType {
    type Error = Error;
    fn try_from(raw: RawType) -> Result<Self> {
        ChainType::new(raw.ranks, raw.degrees)
    }
}

/// Canonical order: length first, then ranks, then degrees.
impl Ord for ChainType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.ranks.cmp(&other.ranks))
            .then_with(|| self.degrees.cmp(&other.degrees))
    }
}

impl PartialOrd for ChainType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {:?})", self.ranks, self.degrees)
    }
}

impl fmt::Debug for ChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The type of a complex variation of Hodge structure: a chain type of total
/// degree zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ChainType", into = "ChainType")]
pub struct VhsType(ChainType);

impl VhsType {
    pub fn new(ranks: Vec<i64>, degrees: Vec<i64>) -> Result<Self> {
        ChainType::new(ranks, degrees)?.try_into()
    }

    pub fn chain(&self) -> &ChainType {
        &self.0
    }

    pub fn into_chain(self) -> ChainType {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ranks(&self) -> &[i64] {
        self.0.ranks()
    }

    pub fn degrees(&self) -> &[i64] {
        self.0.degrees()
    }

    /// Total rank `r` of the ambient moduli problem.
    pub fn rank(&self) -> i64 {
        self.0.total_rank()
    }
}

impl TryFrom<ChainType> for VhsType {
    type Error = Error;
    fn try_from(ct: ChainType) -> Result<Self> {
        let total = ct.total_degree();
        if total != 0 {
            return Err(Error::NonZeroTotalDegree(total));
        }
        Ok(VhsType(ct))
    }
}

impl From<VhsType> for ChainType {
    fn from(v: VhsType) -> ChainType {
        v.0
    }
}

impl fmt::Display for VhsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for VhsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Stability parameter `(alpha_1..alpha_l)` for chains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityParam {
    alphas: Vec<Rational>,
    /// Set by [`crate::chains::higgs_parameter`]; such parameters are strictly
    /// decreasing.
    higgs_type: bool,
}

impl StabilityParam {
    pub fn new(alphas: Vec<Rational>) -> Self {
        StabilityParam {
            alphas,
            higgs_type: false,
        }
    }

    pub fn from_integers(alphas: &[i64]) -> Self {
        Self::new(alphas.iter().copied().map(Rational::integer).collect())
    }

    /// Builds a Higgs-type parameter, rejecting anything not strictly decreasing.
    pub fn higgs(alphas: Vec<Rational>) -> Result<Self> {
        let param = StabilityParam {
            alphas,
            higgs_type: true,
        };
        param.require_strictly_decreasing()?;
        Ok(param)
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn is_higgs_type(&self) -> bool {
        self.higgs_type
    }

    pub fn require_strictly_decreasing(&self) -> Result<()> {
        match self.alphas.windows(2).position(|w| w[0] <= w[1]) {
            Some(i) => Err(Error::NonDecreasingParameter { index: i + 2 }),
            None => Ok(()),
        }
    }

    pub fn require_len(&self, len: usize) -> Result<()> {
        if self.alphas.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: self.alphas.len(),
            });
        }
        Ok(())
    }
}

/// Builds a validated chain type.
pub fn make_chain_type(ranks: &[i64], degrees: &[i64]) -> Result<ChainType> {
    ChainType::new(ranks.to_vec(), degrees.to_vec())
}
