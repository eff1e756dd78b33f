//! Dimensions of fixed-point components and of the strata lying over them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{Genus, VhsType};
use crate::vhs::{
    check_vhs_admissible, enumerate_vhs_types, is_admissible, trivial_type, uniformizing_type,
};

/// Raw component dimension
/// `(g-1) sum r_i (r_i + r_{i+1}) + sum r_i (d_{i+1} - d_{i-1}) + 1`
/// with `r_{l+1} = d_0 = d_{l+1} = 0`.
///
/// This is the dimension only when the stable locus is non-empty;
/// [`dim_component`] corrects the known exceptions.
pub fn dim_formula(v: &VhsType, genus: Genus) -> i64 {
    let ct = v.chain();
    let quadratic: i64 = (1..=ct.len())
        .map(|i| ct.rank_at(i) * (ct.rank_at(i) + ct.rank_at(i + 1)))
        .sum();
    let linear: i64 = (1..=ct.len())
        .map(|i| ct.rank_at(i) * (ct.degree_at(i + 1) - ct.degree_at(i - 1)))
        .sum();
    genus.g1() * quadratic + linear + 1
}

/// Half the dimension of the de Rham moduli space, `r^2 (g-1) + 1`.
pub fn half_dim(r: i64, genus: Genus) -> i64 {
    r * r * genus.g1() + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Formula,
    SpecialCaseTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub dim: i64,
    pub provenance: Provenance,
    /// Rank >= 5 only: the type splits into admissible degree-0 summands, so
    /// the formula may overcount.
    pub stable_locus_caveat: bool,
    pub stratum_dim: i64,
}

/// Table values for the rank-3 and rank-4 families whose stable locus is
/// empty. `None` means the formula applies.
fn special_case(v: &VhsType, genus: Genus) -> Result<Option<i64>> {
    let g = genus.get();
    let g1 = genus.g1();
    let d = v.degrees();
    let value = match v.ranks() {
        [1, 2] | [2, 1] if d[0] == g1 => Some(2 * g),
        [1, 3] | [3, 1] if d[0] == g1 => Some(5 * g - 3),
        [1, 1, 2] if 2 * d[1] + d[0] == 2 * g1 => {
            // 5g - 3 - (3/2) d_1
            let twice = 2 * (5 * g - 3) - 3 * d[0];
            if twice % 2 != 0 {
                return Err(Error::NonIntegralTableValue { numerator: twice });
            }
            Some(twice / 2)
        }
        [2, 1, 1] if d[0] - d[1] == 2 * g1 => Some(8 * g - 6 - 3 * d[0]),
        [1, 2, 1] if d == [2 * g1, 0, -2 * g1] => Some(2 * g),
        _ => None,
    };
    Ok(value)
}

/// Admissible types of every total rank below `r`, indexed by rank.
struct SplitCatalogue {
    by_rank: Vec<Vec<VhsType>>,
}

impl SplitCatalogue {
    fn new(r: i64, genus: Genus) -> Result<Self> {
        let mut by_rank = vec![Vec::new()];
        for k in 1..r {
            by_rank.push(enumerate_vhs_types(k, genus)?);
        }
        Ok(SplitCatalogue { by_rank })
    }

    /// True when `v` is a sum of at least two admissible degree-0 types, each
    /// placed on a contiguous block of positions.
    fn splits(&self, v: &VhsType) -> bool {
        let mut ranks = v.ranks().to_vec();
        let mut degrees = v.degrees().to_vec();
        let mut dead = HashSet::new();
        self.cover(&mut ranks, &mut degrees, true, &mut dead)
    }

    fn cover(
        &self,
        ranks: &mut [i64],
        degrees: &mut [i64],
        top: bool,
        dead: &mut HashSet<(Vec<i64>, Vec<i64>)>,
    ) -> bool {
        let Some(start) = ranks.iter().position(|&r| r > 0) else {
            return degrees.iter().all(|&d| d == 0);
        };
        if degrees[..start].iter().any(|&d| d != 0) {
            return false;
        }
        let key = (ranks.to_vec(), degrees.to_vec());
        if dead.contains(&key) {
            return false;
        }
        let left: i64 = ranks.iter().sum();
        // The first summand must cover `start`; at top level it cannot be everything.
        let max_rank = if top { left - 1 } else { left };
        for k in 1..=max_rank.min(self.by_rank.len() as i64 - 1) {
            for piece in &self.by_rank[k as usize] {
                let len = piece.len();
                if start + len > ranks.len() {
                    continue;
                }
                let fits = piece
                    .ranks()
                    .iter()
                    .enumerate()
                    .all(|(i, &r)| r <= ranks[start + i]);
                if !fits {
                    continue;
                }
                for (i, (&r, &d)) in piece.ranks().iter().zip(piece.degrees()).enumerate() {
                    ranks[start + i] -= r;
                    degrees[start + i] -= d;
                }
                let ok = self.cover(ranks, degrees, false, dead);
                for (i, (&r, &d)) in piece.ranks().iter().zip(piece.degrees()).enumerate() {
                    ranks[start + i] += r;
                    degrees[start + i] += d;
                }
                if ok {
                    return true;
                }
            }
        }
        dead.insert(key);
        false
    }
}

fn dim_component_with(
    v: &VhsType,
    genus: Genus,
    catalogue: Option<&SplitCatalogue>,
) -> Result<DimReport> {
    let report = check_vhs_admissible(v, genus);
    if !report.passed() {
        return Err(Error::NotAdmissible(format!(
            "{v} fails {:?}",
            report.violations[0].condition
        )));
    }
    let (dim, provenance) = match special_case(v, genus)? {
        Some(value) => (value, Provenance::SpecialCaseTable),
        None => (dim_formula(v, genus), Provenance::Formula),
    };
    let r = v.rank();
    let stable_locus_caveat = r >= 5
        && match catalogue {
            Some(c) => c.splits(v),
            None => SplitCatalogue::new(r, genus)?.splits(v),
        };
    Ok(DimReport {
        dim,
        provenance,
        stable_locus_caveat,
        stratum_dim: dim + half_dim(r, genus),
    })
}

/// Dimension of the fixed-point component of an admissible type.
pub fn dim_component(v: &VhsType, genus: Genus) -> Result<DimReport> {
    dim_component_with(v, genus, None)
}

/// Dimension of the stratum over the component: component dimension plus the
/// half dimension `r^2 (g-1) + 1` of the Lagrangian fibres.
pub fn stratum_dim(v: &VhsType, genus: Genus) -> Result<i64> {
    Ok(dim_component(v, genus)?.stratum_dim)
}

fn branch_bounds(prev: i64, cur: i64, next: i64, g1: i64) -> impl Iterator<Item = i64> {
    [
        (prev >= cur && next >= cur, next + prev - 2 * cur),
        (prev <= cur && next <= cur, 2 * cur - next - prev),
        (next >= cur && cur >= prev, next - prev),
        (next <= cur && cur <= prev, prev - next),
    ]
    .into_iter()
    .filter(|(applies, _)| *applies)
    .map(move |(_, weight)| g1 * weight + 1)
}

/// Lower bound on the codimension of the non-stable locus: the minimum, over
/// positions `m` with `r_m > 1`, of every applicable piecewise bound at `m`.
pub fn codim_nonstable_bound(v: &VhsType, genus: Genus) -> Result<i64> {
    let ct = v.chain();
    (1..=ct.len())
        .filter(|&m| ct.rank_at(m) > 1)
        .flat_map(|m| {
            branch_bounds(
                ct.rank_at(m - 1),
                ct.rank_at(m),
                ct.rank_at(m + 1),
                genus.g1(),
            )
        })
        .min()
        .ok_or(Error::AllRanksOne)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliDims {
    pub dim_mdr: i64,
    pub half_dim: i64,
    pub oper_dim: i64,
    pub max_stratum_dim: i64,
}

pub fn moduli_dims(r: i64, genus: Genus) -> Result<ModuliDims> {
    if r < 2 {
        return Err(Error::RankTooSmall { rank: r, min: 2 });
    }
    let half = half_dim(r, genus);
    Ok(ModuliDims {
        dim_mdr: 2 * half,
        half_dim: half,
        oper_dim: half + genus.get(),
        max_stratum_dim: 2 * half,
    })
}

/// One row of the strata table for a given `(r, g)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRow {
    #[serde(rename = "type")]
    pub vhs_type: VhsType,
    pub dim: i64,
    pub stratum_dim: i64,
    pub provenance: Provenance,
    pub stable_locus_caveat: bool,
    /// `None` when every rank is 1.
    pub codim_bound: Option<i64>,
}

/// Dimension data for every admissible type of rank `r`, canonically sorted.
pub fn strata_table(r: i64, genus: Genus) -> Result<Vec<StratumRow>> {
    let types = enumerate_vhs_types(r, genus)?;
    let catalogue = if r >= 5 {
        Some(SplitCatalogue::new(r, genus)?)
    } else {
        None
    };
    types
        .into_iter()
        .map(|v| {
            let rep = dim_component_with(&v, genus, catalogue.as_ref())?;
            let codim_bound = match codim_nonstable_bound(&v, genus) {
                Ok(b) => Some(b),
                Err(Error::AllRanksOne) => None,
                Err(e) => return Err(e),
            };
            Ok(StratumRow {
                vhs_type: v,
                dim: rep.dim,
                stratum_dim: rep.stratum_dim,
                provenance: rep.provenance,
                stable_locus_caveat: rep.stable_locus_caveat,
                codim_bound,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub min_dim: i64,
    pub min_types: Vec<VhsType>,
    pub max_dim: i64,
    pub max_types: Vec<VhsType>,
    /// Every component dimension lies in `[g, r^2 (g-1) + 1]`.
    pub bounds_hold: bool,
    /// `min_types` is exactly the uniformizing type and `max_types` exactly
    /// `([r], [0])`.
    pub extremes_unique: bool,
}

/// Scans every admissible type of rank `r` for the extreme component dimensions.
pub fn extremal_report(r: i64, genus: Genus) -> Result<ExtremalReport> {
    let rows = strata_table(r, genus)?;
    let min_dim = rows
        .iter()
        .map(|row| row.dim)
        .min()
        .expect("([r],[0]) is always admissible");
    let max_dim = rows.iter().map(|row| row.dim).max().expect("non-empty");
    let pick = |target: i64| -> Vec<VhsType> {
        rows.iter()
            .filter(|row| row.dim == target)
            .map(|row| row.vhs_type.clone())
            .collect()
    };
    let (min_types, max_types) = (pick(min_dim), pick(max_dim));
    let upper = half_dim(r, genus);
    let bounds_hold = rows
        .iter()
        .all(|row| row.dim >= genus.get() && row.dim <= upper);
    let extremes_unique =
        r >= 2 && min_types == [uniformizing_type(r, genus)?] && max_types == [trivial_type(r)?];
    Ok(ExtremalReport {
        min_dim,
        min_types,
        max_dim,
        max_types,
        bounds_hold,
        extremes_unique,
    })
}

/// Whether `v` decomposes into admissible degree-0 summands on contiguous
/// blocks (the rank >= 5 caveat heuristic), exposed for inspection.
pub fn has_admissible_splitting(v: &VhsType, genus: Genus) -> Result<bool> {
    if !is_admissible(v, genus) {
        return Err(Error::NotAdmissible(v.to_string()));
    }
    Ok(SplitCatalogue::new(v.rank(), genus)?.splits(v))
}
