//! Admissibility of VHS types and finite enumeration of every admissible
//! type of a given total rank.

use serde::{Deserialize, Serialize};

use crate::chains::Verdict;
use crate::error::{Error, Result};
use crate::types::{Genus, VhsType};

/// Largest total rank [`enumerate_vhs_types`] accepts.
pub const RANK_CAP: i64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VhsCondition {
    V1,
    V2,
    V3,
    V4,
}

/// A failed integer inequality `lhs <= rhs`.
///
/// The strict condition V1 (`sum_{i>=j} d_i < 0`) is reported in its integer
/// form `sum_{i>=j} d_i <= -1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VhsViolation {
    pub condition: VhsCondition,
    pub indices: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub verdict: Verdict,
    pub violations: Vec<VhsViolation>,
}

impl AdmissibilityReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

/// Evaluates the four non-emptiness conditions V1..V4 on a VHS type.
///
/// Passing means the fixed-point locus of this type with all Higgs components
/// non-zero is non-empty. For `l = 1` every condition is vacuous.
pub fn check_vhs_admissible(v: &VhsType, genus: Genus) -> AdmissibilityReport {
    let ct = v.chain();
    let l = ct.len();
    let r = |i: usize| ct.rank_at(i);
    let d = |i: usize| ct.degree_at(i);
    let g1 = genus.g1();
    let mut violations = Vec::new();
    let mut check = |condition, indices: Vec<usize>, lhs: i64, rhs: i64| {
        if lhs > rhs {
            violations.push(VhsViolation {
                condition,
                indices,
                lhs,
                rhs,
            });
        }
    };

    for j in 2..=l {
        check(VhsCondition::V1, vec![j], (j..=l).map(d).sum(), -1);
    }
    for j in 1..l {
        if r(j) == r(j + 1) {
            // d_j/r_j - d_{j+1}/r_{j+1} <= 2g-2 with r_j = r_{j+1}
            check(
                VhsCondition::V2,
                vec![j],
                d(j) - d(j + 1),
                genus.canonical_degree() * r(j),
            );
        }
    }
    for k in 1..l {
        for j in k + 1..=l {
            let span = (j - k) as i64;
            let inner = (k + 1..=j).map(r);
            if r(k) < inner.clone().min().unwrap() {
                let lhs = -(k + 1..=j).map(d).sum::<i64>() + span * (d(k) - (span + 1) * g1 * r(k));
                check(VhsCondition::V3, vec![k, j], lhs, 0);
            }
            if r(k) > inner.max().unwrap() {
                let lhs = (k..j).map(d).sum::<i64>() - span * (d(j) + (span + 1) * g1 * r(j));
                check(VhsCondition::V4, vec![k, j], lhs, 0);
            }
        }
    }

    let verdict = if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    AdmissibilityReport {
        verdict,
        violations,
    }
}

pub fn is_admissible(v: &VhsType, genus: Genus) -> bool {
    check_vhs_admissible(v, genus).passed()
}

/// All compositions of `n` (ordered tuples of positive parts), in canonical
/// order: shorter first, then lexicographic.
pub fn compositions(n: i64) -> Vec<Vec<i64>> {
    fn go(n: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=n {
            prefix.push(part);
            go(n - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn require_rank(r: i64) -> Result<()> {
    if r < 1 {
        return Err(Error::RankTooSmall { rank: r, min: 1 });
    }
    if r > RANK_CAP {
        return Err(Error::RankCapExceeded {
            rank: r,
            cap: RANK_CAP,
        });
    }
    Ok(())
}

/// Every admissible VHS type of total rank `r`, sorted canonically.
///
/// The search runs depth-first over `d_1, d_2, ...` for each rank
/// composition, inside the polytope
///
/// * `d_j - d_{j+1} <= (2g-2) min(r_j, r_{j+1})` (the adjacent instances of
///   V2-V4),
/// * `d_1 + ... + d_j >= 1` for `j < l` (V1 together with total degree 0),
/// * `d_1 + ... + d_l = 0`,
///
/// and every lattice point found is then filtered by the full condition set.
pub fn enumerate_vhs_types(r: i64, genus: Genus) -> Result<Vec<VhsType>> {
    require_rank(r)?;
    let mut out = Vec::new();
    for ranks in compositions(r) {
        enumerate_for_ranks(&ranks, genus, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Admissible degree vectors for one rank composition.
pub fn enumerate_for_ranks(ranks: &[i64], genus: Genus, out: &mut Vec<VhsType>) {
    let l = ranks.len();
    if l == 1 {
        out.push(VhsType::new(ranks.to_vec(), vec![0]).expect("single block"));
        return;
    }
    // drop[j] bounds d_j - d_{j+1}, 0-based.
    let drop: Vec<i64> = ranks
        .windows(2)
        .map(|w| genus.canonical_degree() * w[0].min(w[1]))
        .collect();
    let mut degrees = Vec::with_capacity(l);
    descend(ranks, &drop, genus, 0, &mut degrees, out);
}

/// Sum over `i` in `from+1..l` of the total allowed drop from position `from`
/// to `i`; every `d_i >= d_from - (drop_from + ... + drop_{i-1})`.
fn accumulated_drop(drop: &[i64], from: usize, l: usize) -> i64 {
    let mut total = 0;
    let mut run = 0;
    for step in drop.iter().take(l - 1).skip(from) {
        run += step;
        total += run;
    }
    total
}

fn descend(
    ranks: &[i64],
    drop: &[i64],
    genus: Genus,
    pos: usize,
    degrees: &mut Vec<i64>,
    out: &mut Vec<VhsType>,
) {
    let l = ranks.len();
    let prefix: i64 = degrees.iter().sum();
    if pos == l - 1 {
        let last = -prefix;
        if prefix >= 1 && degrees[pos - 1] - last <= drop[pos - 1] {
            degrees.push(last);
            let v = VhsType::new(ranks.to_vec(), degrees.clone()).expect("total degree 0");
            if is_admissible(&v, genus) {
                out.push(v);
            }
            degrees.pop();
        }
        return;
    }
    // Remaining d_pos..d_{l-1} sum to -prefix and each is at least
    // d_pos - accumulated drop, so (l - pos) d_pos <= -prefix + K.
    let remaining = (l - pos) as i64;
    let hi = (-prefix + accumulated_drop(drop, pos, l)).div_euclid(remaining);
    let mut lo = 1 - prefix;
    if pos > 0 {
        lo = lo.max(degrees[pos - 1] - drop[pos - 1]);
    }
    for candidate in lo..=hi {
        degrees.push(candidate);
        descend(ranks, drop, genus, pos + 1, degrees, out);
        degrees.pop();
    }
}

/// The uniformizing type: ranks all 1, degrees `((r-1)(g-1), (r-3)(g-1), ..., (1-r)(g-1))`.
pub fn uniformizing_type(r: i64, genus: Genus) -> Result<VhsType> {
    if r < 2 {
        return Err(Error::RankTooSmall { rank: r, min: 2 });
    }
    let degrees = (0..r).map(|i| (r - 1 - 2 * i) * genus.g1()).collect();
    VhsType::new(vec![1; r as usize], degrees)
}

/// The single-block type `([r], [0])` (zero Higgs field).
pub fn trivial_type(r: i64) -> Result<VhsType> {
    VhsType::new(vec![r], vec![0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> Genus {
        Genus::new(n).unwrap()
    }

    fn vhs(r: &[i64], d: &[i64]) -> VhsType {
        VhsType::new(r.to_vec(), d.to_vec()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(check_vhs_admissible(&vhs(&[3], &[0]), g(2)).passed());
        assert!(check_vhs_admissible(&vhs(&[1, 2], &[2, -2]), g(3)).passed());
        let rep = check_vhs_admissible(&vhs(&[1, 1], &[2, -2]), g(2));
        assert_eq!(rep.verdict, Verdict::Fail);
        assert_eq!(
            rep.violations,
            vec![VhsViolation {
                condition: VhsCondition::V2,
                indices: vec![1],
                lhs: 4,
                rhs: 2
            }]
        );
    }

    #[test]
    fn v1_is_strict() {
        let rep = check_vhs_admissible(&vhs(&[1, 1], &[0, 0]), g(2));
        assert_eq!(rep.violations[0].condition, VhsCondition::V1);
    }

    #[test]
    fn compositions_are_canonical() {
        assert_eq!(
            compositions(3),
            vec![vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]
        );
        assert_eq!(compositions(6).len(), 32);
        assert!(compositions(0).is_empty());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_vhs_types(2, g(2)).unwrap(),
            vec![vhs(&[2], &[0]), vhs(&[1, 1], &[1, -1])]
        );
        assert_eq!(
            enumerate_vhs_types(2, g(3)).unwrap(),
            vec![
                vhs(&[2], &[0]),
                vhs(&[1, 1], &[1, -1]),
                vhs(&[1, 1], &[2, -2])
            ]
        );
        assert_eq!(
            enumerate_vhs_types(3, g(2)).unwrap(),
            vec![
                vhs(&[3], &[0]),
                vhs(&[1, 2], &[1, -1]),
                vhs(&[2, 1], &[1, -1]),
                vhs(&[1, 1, 1], &[1, 0, -1]),
                vhs(&[1, 1, 1], &[2, 0, -2]),
            ]
        );
    }

    #[test]
    fn enumeration_rank_limits() {
        assert_eq!(
            enumerate_vhs_types(RANK_CAP + 1, g(2)),
            Err(Error::RankCapExceeded {
                rank: RANK_CAP + 1,
                cap: RANK_CAP
            })
        );
        assert!(enumerate_vhs_types(0, g(2)).is_err());
        assert_eq!(enumerate_vhs_types(1, g(2)).unwrap(), vec![vhs(&[1], &[0])]);
    }

    #[test]
    fn uniformizing_examples() {
        assert_eq!(uniformizing_type(2, g(2)).unwrap(), vhs(&[1, 1], &[1, -1]));
        assert_eq!(
            uniformizing_type(3, g(2)).unwrap(),
            vhs(&[1, 1, 1], &[2, 0, -2])
        );
        let u = uniformizing_type(3, g(3)).unwrap();
        assert_eq!(u, vhs(&[1, 1, 1], &[4, 0, -4]));
        assert!(enumerate_vhs_types(3, g(3)).unwrap().contains(&u));
        assert_eq!(
            uniformizing_type(1, g(2)),
            Err(Error::RankTooSmall { rank: 1, min: 2 })
        );
    }

    #[test]
    fn uniformizing_is_admissible() {
        for r in 2..=8 {
            for genus in 2..=6 {
                assert!(is_admissible(
                    &uniformizing_type(r, g(genus)).unwrap(),
                    g(genus)
                ));
            }
        }
    }
}
