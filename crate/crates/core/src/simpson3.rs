//! Rank-3 Simpson filtrations at the numerical level, the subbundle degree
//! bound they imply, and a single step of the destabilizing iteration.
//!
//! A rank-3 flat bundle whose underlying bundle is not stable has one of
//! three Harder-Narasimhan shapes. Together with the degrees of a few
//! saturated line subbundles (`deg_i`, `deg_n`, `deg_j`, `deg_m`) the shape
//! determines the limiting Higgs bundle's type through a fixed decision tree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::types::{Genus, VhsType};

/// Harder-Narasimhan shape of a rank-3 degree-0 bundle plus the saturation
/// degrees the decision tree consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum Hn3Profile {
    /// HN filtration `H ⊂ E` with `H` a line bundle of degree `d`.
    Line { d: i64, deg_i: i64 },
    /// HN filtration `G ⊂ E` with `G` of rank 2 and degree `l`.
    Plane { l: i64, deg_n: i64 },
    /// HN filtration `A1 ⊂ A2 ⊂ E` of degrees `a1`, `a2`.
    Full {
        a1: i64,
        a2: i64,
        deg_j: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deg_m: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpsonCase {
    #[serde(rename = "1.1")]
    C1_1,
    #[serde(rename = "1.2")]
    C1_2,
    #[serde(rename = "1.3")]
    C1_3,
    #[serde(rename = "2.1")]
    C2_1,
    #[serde(rename = "2.2")]
    C2_2,
    #[serde(rename = "2.3")]
    C2_3,
    #[serde(rename = "3.1")]
    C3_1,
    #[serde(rename = "3.2")]
    C3_2,
    #[serde(rename = "3.3.1")]
    C3_3_1,
    #[serde(rename = "3.3.2.1")]
    C3_3_2_1,
    #[serde(rename = "3.3.2.2")]
    C3_3_2_2,
    #[serde(rename = "3.3.2.3")]
    C3_3_2_3,
}

impl SimpsonCase {
    pub const ALL: [SimpsonCase; 12] = [
        SimpsonCase::C1_1,
        SimpsonCase::C1_2,
        SimpsonCase::C1_3,
        SimpsonCase::C2_1,
        SimpsonCase::C2_2,
        SimpsonCase::C2_3,
        SimpsonCase::C3_1,
        SimpsonCase::C3_2,
        SimpsonCase::C3_3_1,
        SimpsonCase::C3_3_2_1,
        SimpsonCase::C3_3_2_2,
        SimpsonCase::C3_3_2_3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SimpsonCase::C1_1 => "1.1",
            SimpsonCase::C1_2 => "1.2",
            SimpsonCase::C1_3 => "1.3",
            SimpsonCase::C2_1 => "2.1",
            SimpsonCase::C2_2 => "2.2",
            SimpsonCase::C2_3 => "2.3",
            SimpsonCase::C3_1 => "3.1",
            SimpsonCase::C3_2 => "3.2",
            SimpsonCase::C3_3_1 => "3.3.1",
            SimpsonCase::C3_3_2_1 => "3.3.2.1",
            SimpsonCase::C3_3_2_2 => "3.3.2.2",
            SimpsonCase::C3_3_2_3 => "3.3.2.3",
        }
    }

    /// The limit is polystable and the Simpson filtration is not unique.
    pub fn is_polystable(self) -> bool {
        matches!(
            self,
            SimpsonCase::C1_2 | SimpsonCase::C2_2 | SimpsonCase::C3_2 | SimpsonCase::C3_3_2_2
        )
    }
}

impl fmt::Display for SimpsonCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpsonOutcome {
    pub case_label: SimpsonCase,
    /// Types of the stable summands of the limiting Higgs bundle.
    pub limit_summands: Vec<VhsType>,
    /// `(rank, degree)` of the proper steps of the Simpson filtration, smallest
    /// first; empty when the filtration is not unique.
    pub filtration_ranks_degrees: Vec<(i64, i64)>,
    /// The Simpson filtration is the Harder-Narasimhan filtration.
    pub equals_hn: bool,
    /// The limit's underlying bundle is the HN graded bundle.
    pub graded_matches_hn: bool,
    pub unique_filtration: bool,
}

fn window(
    bound: &'static str,
    ok: bool,
    value: impl fmt::Display,
    limit: impl fmt::Display,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::HnWindowViolated {
            bound,
            value: value.to_string(),
            limit: limit.to_string(),
        })
    }
}

/// Checks `min <= value <= max` where `max` may be a half-integer.
fn saturation(name: &'static str, value: i64, min: i64, max: Rational) -> Result<()> {
    if value >= min && Rational::integer(value) <= max {
        Ok(())
    } else {
        Err(Error::SaturationOutOfRange {
            name,
            value,
            min: min.to_string(),
            max: max.to_string(),
        })
    }
}

/// Whether a full-shape profile reaches the branch that consumes `deg_m`.
fn needs_deg_m(a1: i64, a2: i64, deg_j: i64) -> bool {
    deg_j < -a1 && a2 - a1 >= 0
}

/// Checks the shape-specific HN degree windows and the saturation ranges.
///
/// `deg_m` is only checked on the branch that consumes it.
pub fn validate_hn3(p: &Hn3Profile, genus: Genus) -> Result<()> {
    let k = genus.canonical_degree();
    // 0 < x <= (2/3)(2g-2), compared as 3x <= 2(2g-2)
    let two_thirds = Rational::new(2 * k, 3);
    match *p {
        Hn3Profile::Line { d, deg_i } => {
            window("d > 0", d > 0, d, 0)?;
            window("d <= (2/3)(2g-2)", 3 * d <= 2 * k, d, two_thirds)?;
            saturation("deg_i", deg_i, d - k, Rational::new(-d, 2))
        }
        Hn3Profile::Plane { l, deg_n } => {
            window("l > 0", l > 0, l, 0)?;
            window("l <= (2/3)(2g-2)", 3 * l <= 2 * k, l, two_thirds)?;
            saturation("deg_n", deg_n, 2 * l - k, Rational::new(l, 2))
        }
        Hn3Profile::Full {
            a1,
            a2,
            deg_j,
            deg_m,
        } => {
            window("2a1 - a2 > 0", 2 * a1 - a2 > 0, 2 * a1 - a2, 0)?;
            window("2a1 - a2 <= 2g-2", 2 * a1 - a2 <= k, 2 * a1 - a2, k)?;
            window("2a2 - a1 > 0", 2 * a2 - a1 > 0, 2 * a2 - a1, 0)?;
            window("2a2 - a1 <= 2g-2", 2 * a2 - a1 <= k, 2 * a2 - a1, k)?;
            saturation("deg_j", deg_j, a1 - k, Rational::integer(a2 - a1))?;
            if needs_deg_m(a1, a2, deg_j) {
                if let Some(m) = deg_m {
                    saturation("deg_m", m, 2 * a2 - k, Rational::integer(a2 - a1))?;
                }
            }
            Ok(())
        }
    }
}

fn summand(ranks: &[i64], degrees: &[i64]) -> VhsType {
    VhsType::new(ranks.to_vec(), degrees.to_vec()).expect("limit summands have total degree 0")
}

/// Routes a validated profile to its case of the rank-3 decision tree.
pub fn resolve_case(p: &Hn3Profile, genus: Genus) -> Result<SimpsonCase> {
    validate_hn3(p, genus)?;
    let k = genus.canonical_degree();
    let case = match *p {
        Hn3Profile::Line { d, deg_i } => {
            // deg_i <= -d/2 as 2 deg_i <= -d
            if d - k <= deg_i && deg_i < -d {
                Some(SimpsonCase::C1_1)
            } else if deg_i == -d {
                Some(SimpsonCase::C1_2)
            } else if -d < deg_i && 2 * deg_i <= -d {
                Some(SimpsonCase::C1_3)
            } else {
                None
            }
        }
        Hn3Profile::Plane { l, deg_n } => {
            if 2 * l - k <= deg_n && deg_n < 0 {
                Some(SimpsonCase::C2_1)
            } else if deg_n == 0 {
                Some(SimpsonCase::C2_2)
            } else if 0 < deg_n && 2 * deg_n <= l {
                Some(SimpsonCase::C2_3)
            } else {
                None
            }
        }
        Hn3Profile::Full {
            a1,
            a2,
            deg_j,
            deg_m,
        } => {
            if -a1 < deg_j && deg_j <= a2 - a1 {
                Some(SimpsonCase::C3_1)
            } else if deg_j == -a1 {
                Some(SimpsonCase::C3_2)
            } else if a1 - k <= deg_j && deg_j < -a1 {
                if a2 - a1 < 0 {
                    Some(SimpsonCase::C3_3_1)
                } else {
                    let m = deg_m.ok_or(Error::MissingSaturationDegree("deg_m"))?;
                    if 2 * a2 - k <= m && m < 0 {
                        Some(SimpsonCase::C3_3_2_1)
                    } else if m == 0 {
                        Some(SimpsonCase::C3_3_2_2)
                    } else if a2 - a1 > 0 && 0 < m && m <= a2 - a1 {
                        Some(SimpsonCase::C3_3_2_3)
                    } else {
                        None
                    }
                }
            } else {
                None
            }
        }
    };
    case.ok_or_else(|| Error::CaseGap(format!("{p:?} at g = {genus}")))
}

/// The limit `lim_{t -> 0} t·(E, ∇)` of a rank-3 flat bundle with the given
/// HN profile, as a list of stable VHS summands.
pub fn simpson_limit_rank3(p: &Hn3Profile, genus: Genus) -> Result<SimpsonOutcome> {
    let case = resolve_case(p, genus)?;
    let mut equals_hn = false;
    let mut graded_matches_hn = false;
    let (limit_summands, filtration) = match (*p, case) {
        (Hn3Profile::Line { d, .. }, SimpsonCase::C1_1) => {
            equals_hn = true;
            (vec![summand(&[1, 2], &[d, -d])], vec![(1, d)])
        }
        (Hn3Profile::Line { d, .. }, SimpsonCase::C1_2) => (
            vec![summand(&[1, 1], &[d, -d]), summand(&[1], &[0])],
            vec![],
        ),
        (Hn3Profile::Line { d, deg_i }, SimpsonCase::C1_3) => (
            vec![summand(&[1, 1, 1], &[d, deg_i, -d - deg_i])],
            vec![(1, d), (2, d + deg_i)],
        ),
        (Hn3Profile::Plane { l, .. }, SimpsonCase::C2_1) => {
            equals_hn = true;
            (vec![summand(&[2, 1], &[l, -l])], vec![(2, l)])
        }
        (Hn3Profile::Plane { l, .. }, SimpsonCase::C2_2) => (
            vec![summand(&[1], &[0]), summand(&[1, 1], &[l, -l])],
            vec![],
        ),
        (Hn3Profile::Plane { l, deg_n }, SimpsonCase::C2_3) => (
            vec![summand(&[1, 1, 1], &[deg_n, l - deg_n, -l])],
            vec![(1, deg_n), (2, l)],
        ),
        (Hn3Profile::Full { a1, a2, deg_j, .. }, SimpsonCase::C3_1) => {
            equals_hn = deg_j == a2 - a1;
            (
                vec![summand(&[1, 1, 1], &[a1, deg_j, -a1 - deg_j])],
                vec![(1, a1), (2, a1 + deg_j)],
            )
        }
        (Hn3Profile::Full { a1, .. }, SimpsonCase::C3_2) => (
            vec![summand(&[1, 1], &[a1, -a1]), summand(&[1], &[0])],
            vec![],
        ),
        (Hn3Profile::Full { a1, .. }, SimpsonCase::C3_3_1) => {
            (vec![summand(&[1, 2], &[a1, -a1])], vec![(1, a1)])
        }
        (Hn3Profile::Full { a2, .. }, SimpsonCase::C3_3_2_1) => {
            (vec![summand(&[2, 1], &[a2, -a2])], vec![(2, a2)])
        }
        (Hn3Profile::Full { a2, .. }, SimpsonCase::C3_3_2_2) => (
            vec![summand(&[1], &[0]), summand(&[1, 1], &[a2, -a2])],
            vec![],
        ),
        (Hn3Profile::Full { a1, a2, deg_m, .. }, SimpsonCase::C3_3_2_3) => {
            let m = deg_m.expect("resolved on the deg_m branch");
            graded_matches_hn = m == a2 - a1;
            (
                vec![summand(&[1, 1, 1], &[m, a2 - m, -a2])],
                vec![(1, m), (2, a2)],
            )
        }
        (p, case) => unreachable!("case {case} resolved for mismatched shape {p:?}"),
    };
    Ok(SimpsonOutcome {
        case_label: case,
        limit_summands,
        filtration_ranks_degrees: filtration,
        equals_hn,
        graded_matches_hn: graded_matches_hn || equals_hn,
        unique_filtration: !case.is_polystable(),
    })
}

/// Case-wise upper bound on `deg W` for any subbundle `W` of a rank-3
/// degree-0 bundle carrying a flat connection. Never exceeds `4g - 4`.
pub fn subbundle_degree_bound(p: &Hn3Profile, genus: Genus) -> Result<i64> {
    let case = resolve_case(p, genus)?;
    let bound = match (*p, case) {
        (Hn3Profile::Line { d, .. }, SimpsonCase::C1_1) => d,
        (Hn3Profile::Line { d, .. }, _) => (3 * d).div_euclid(2),
        (Hn3Profile::Plane { l, .. }, SimpsonCase::C2_1) => l,
        (Hn3Profile::Plane { l, .. }, _) => (3 * l).div_euclid(2),
        (Hn3Profile::Full { a1, a2, .. }, SimpsonCase::C3_1 | SimpsonCase::C3_2) => a1 + a2,
        (Hn3Profile::Full { a1, .. }, SimpsonCase::C3_3_1) => a1,
        (Hn3Profile::Full { a2, .. }, SimpsonCase::C3_3_2_1) => a2,
        (Hn3Profile::Full { a1, a2, .. }, _) => 2 * a2 - a1,
    };
    Ok(bound)
}

/// Per-Hodge-level `(rank, degree)` data of a graded object, level 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct GradedType {
    levels: Vec<(i64, i64)>,
}

impl GradedType {
    /// Rejects negative ranks, rank-0 levels of non-zero degree, and objects
    /// of total rank 0.
    pub fn new(levels: Vec<(i64, i64)>) -> Result<Self> {
        for (p, &(rank, degree)) in levels.iter().enumerate() {
            if rank < 0 {
                return Err(Error::InvalidGradedType(format!(
                    "negative rank at level {p}"
                )));
            }
            if rank == 0 && degree != 0 {
                return Err(Error::InvalidGradedType(format!(
                    "rank 0 with degree {degree} at level {p}"
                )));
            }
        }
        if levels.iter().all(|&(rank, _)| rank == 0) {
            return Err(Error::InvalidGradedType("total rank is 0".into()));
        }
        Ok(GradedType { levels })
    }

    pub fn levels(&self) -> &[(i64, i64)] {
        &self.levels
    }

    pub fn total_rank(&self) -> i64 {
        self.levels.iter().map(|l| l.0).sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.levels.iter().map(|l| l.1).sum()
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.total_degree(), self.total_rank())
    }

    fn level(&self, p: usize) -> (i64, i64) {
        self.levels.get(p).copied().unwrap_or((0, 0))
    }
}

impl TryFrom<Vec<(i64, i64)>> for GradedType {
    type Error = Error;
    fn try_from(levels: Vec<(i64, i64)>) -> Result<Self> {
        GradedType::new(levels)
    }
}

impl From<GradedType> for Vec<(i64, i64)> {
    fn from(gt: GradedType) -> Self {
        gt.levels
    }
}

/// One numerical step of the destabilizing iteration: replaces the graded
/// object by the one of the modified filtration, whose level `p` is an
/// extension of `H^{p-1}` by `Gr^p / H^p`.
///
/// Level `p` of the result is `(r_p - h_p + h_{p-1}, d_p - e_p + e_{p-1})`.
/// Zero levels at the top are trimmed; interior zero levels are kept.
pub fn iterate_step(gt: &GradedType, destabilizer: &GradedType) -> Result<GradedType> {
    let depth = gt.levels.len().max(destabilizer.levels.len());
    for p in 0..depth {
        let (r, d) = gt.level(p);
        let (h, e) = destabilizer.level(p);
        if h > r {
            return Err(Error::LevelOverflow {
                level: p,
                sub_rank: h,
                rank: r,
            });
        }
        if h == r && e != d {
            return Err(Error::FullLevelDegreeMismatch {
                level: p,
                sub_degree: e,
                degree: d,
            });
        }
    }
    let sub_rank = destabilizer.total_rank();
    if sub_rank <= 0 || sub_rank >= gt.total_rank() {
        return Err(Error::ZeroOrFullDestabilizer);
    }
    let (sub, total) = (destabilizer.slope(), gt.slope());
    if sub <= total {
        return Err(Error::NotDestabilizing {
            sub: sub.to_string(),
            total: total.to_string(),
        });
    }

    let mut levels: Vec<(i64, i64)> = (0..=depth)
        .map(|p| {
            let (r, d) = gt.level(p);
            let (h, e) = destabilizer.level(p);
            let (h_prev, e_prev) = if p == 0 {
                (0, 0)
            } else {
                destabilizer.level(p - 1)
            };
            (r - h + h_prev, d - e + e_prev)
        })
        .collect();
    while levels.last() == Some(&(0, 0)) {
        levels.pop();
    }
    GradedType::new(levels)
}
