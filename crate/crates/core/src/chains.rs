//! Chain slopes, the Higgs stability parameter, the VHS-to-chain twist, and
//! the four families of necessary conditions for semistable chains.
//!
//! Quotient inequalities `num / den <= mu` are decided in the cleared form
//! `num <= mu * den`; no division enters a verdict.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::types::{ChainType, Genus, StabilityParam, VhsType};

/// `(sum d_i + sum alpha_i r_i) / sum r_i`.
pub fn alpha_slope(ct: &ChainType, alpha: &StabilityParam) -> Result<Rational> {
    alpha.require_len(ct.len())?;
    let weighted: Rational = ct
        .degrees()
        .iter()
        .zip(ct.ranks())
        .zip(alpha.alphas())
        .map(|((&d, &r), &a)| Rational::integer(d) + a.scale(r))
        .sum();
    Ok(weighted.div_int(ct.total_rank()))
}

/// `alpha_i = (l - i + delta)(2g - 2)` for `i = 1..=l`.
pub fn higgs_parameter(l: usize, delta: i64, genus: Genus) -> Result<StabilityParam> {
    if l == 0 {
        return Err(Error::EmptyType);
    }
    let step = genus.canonical_degree();
    let alphas = (1..=l as i64)
        .map(|i| Rational::integer((l as i64 - i + delta) * step))
        .collect();
    StabilityParam::higgs(alphas)
}

/// Twists a VHS type into a chain, `d'_i = d_i - r_i alpha_i`, paired with the
/// matching Higgs parameter.
pub fn vhs_to_chain(v: &VhsType, delta: i64, genus: Genus) -> (ChainType, StabilityParam) {
    let alpha = higgs_parameter(v.len(), delta, genus).expect("VHS types are non-empty");
    let step = genus.canonical_degree();
    let l = v.len() as i64;
    let degrees = v
        .ranks()
        .iter()
        .zip(v.degrees())
        .zip(1..)
        .map(|((&r, &d), i): ((&i64, &i64), i64)| d - r * (l - i + delta) * step)
        .collect();
    let ct = ChainType::new(v.ranks().to_vec(), degrees).expect("ranks already validated");
    (ct, alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ChainCondition {
    C1,
    C2,
    C3,
    C4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// One failed inequality, with `lhs > rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainViolation {
    pub condition: ChainCondition,
    /// `[j]` for C1/C2, `[k, j]` for C3/C4, 1-based.
    pub indices: Vec<usize>,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCheckReport {
    pub mu: Rational,
    pub verdict: Verdict,
    pub violations: Vec<ChainViolation>,
    /// Indices `j` where C1 holds with equality.
    pub ties: Vec<usize>,
}

impl ChainCheckReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

/// Evaluates the four necessary-condition families for `alpha`-semistability.
///
/// A pass only means the necessary conditions hold.
///
/// Clause C4's denominator `sum_{i=k}^{j-1} (r_i - r_j)` can vanish or turn
/// negative when the ranks between `k` and `j` dip below `r_j`; the clause is
/// always evaluated as `num <= mu * den`. When `den > 0` the reported `lhs`
/// is the quotient, otherwise it is `num` against `rhs = mu * den`.
pub fn check_chain_necessary(ct: &ChainType, alpha: &StabilityParam) -> Result<ChainCheckReport> {
    alpha.require_len(ct.len())?;
    alpha.require_strictly_decreasing()?;
    let mu = alpha_slope(ct, alpha)?;
    let l = ct.len();
    let r = |i: usize| ct.rank_at(i);
    let d = |i: usize| Rational::integer(ct.degree_at(i));
    let a = |i: usize| alpha.alphas()[i - 1];
    // d_i + alpha_i r_i
    let w = |i: usize| d(i) + a(i).scale(r(i));

    let mut violations = Vec::new();
    let mut ties = Vec::new();
    let mut record = |condition, indices: Vec<usize>, num: Rational, den: i64| -> bool {
        match cleared(condition, indices, num, den, mu) {
            Ok(tie) => tie,
            Err(v) => {
                violations.push(v);
                false
            }
        }
    };

    for j in 2..=l {
        let num: Rational = (j..=l).map(w).sum();
        let den: i64 = (j..=l).map(r).sum();
        if record(ChainCondition::C1, vec![j], num, den) {
            ties.push(j);
        }
    }

    let mut c2 = Vec::new();
    for j in 1..l {
        if r(j) == r(j + 1) && d(j) > d(j + 1) {
            c2.push(ChainViolation {
                condition: ChainCondition::C2,
                indices: vec![j],
                lhs: d(j),
                rhs: d(j + 1),
            });
        }
    }

    for k in 1..l {
        for j in k + 1..=l {
            let inner = (k + 1..=j).map(r);
            if r(k) < inner.clone().min().unwrap() {
                let span = (j - k + 1) as i64;
                let outside = (1..k).chain(j + 1..=l);
                let num = outside.clone().map(w).sum::<Rational>()
                    + d(k).scale(span)
                    + (k..=j).map(a).sum::<Rational>().scale(r(k));
                let den = outside.map(r).sum::<i64>() + span * r(k);
                record(ChainCondition::C3, vec![k, j], num, den);
            }
            if r(k) > inner.max().unwrap() {
                let num: Rational = (k..j).map(|i| d(i) - d(j) + a(i).scale(r(i) - r(j))).sum();
                let den: i64 = (k..j).map(|i| r(i) - r(j)).sum();
                record(ChainCondition::C4, vec![k, j], num, den);
            }
        }
    }

    violations.extend(c2);
    violations.sort_by(|x, y| (x.condition, &x.indices).cmp(&(y.condition, &y.indices)));
    let verdict = if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(ChainCheckReport {
        mu,
        verdict,
        violations,
        ties,
    })
}

/// `Ok(tie)` when `num <= mu * den`, otherwise the violation record.
fn cleared(
    condition: ChainCondition,
    indices: Vec<usize>,
    num: Rational,
    den: i64,
    mu: Rational,
) -> Result<bool, ChainViolation> {
    let bound = mu.scale(den);
    if num <= bound {
        return Ok(num == bound);
    }
    let (lhs, rhs) = if den > 0 {
        (num.div_int(den), mu)
    } else {
        (num, bound)
    };
    Err(ChainViolation {
        condition,
        indices,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::make_chain_type;

    fn g(n: i64) -> Genus {
        Genus::new(n).unwrap()
    }

    fn vhs(r: &[i64], d: &[i64]) -> VhsType {
        VhsType::new(r.to_vec(), d.to_vec()).unwrap()
    }

    // Independent evaluation of the slope: plain integer numerator/denominator.
    fn slope_by_hand(r: &[i64], d: &[i64], alpha: &[i64]) -> Rational {
        let num: i64 = d.iter().sum::<i64>() + r.iter().zip(alpha).map(|(x, y)| x * y).sum::<i64>();
        Rational::new(num, r.iter().sum())
    }

    #[test]
    fn alpha_slope_examples() {
        let ct = make_chain_type(&[1, 1], &[-1, -1]).unwrap();
        let alpha = StabilityParam::from_integers(&[2, 0]);
        assert_eq!(alpha_slope(&ct, &alpha).unwrap(), Rational::ZERO);

        let ct = make_chain_type(&[3], &[0]).unwrap();
        assert_eq!(
            alpha_slope(&ct, &StabilityParam::from_integers(&[0])).unwrap(),
            Rational::ZERO
        );

        let ct = make_chain_type(&[1, 2], &[-1, -2]).unwrap();
        let alpha = StabilityParam::from_integers(&[4, 0]);
        let mu = alpha_slope(&ct, &alpha).unwrap();
        assert_eq!(mu, Rational::new(1, 3));
        assert_eq!(mu, slope_by_hand(&[1, 2], &[-1, -2], &[4, 0]));

        assert!(matches!(
            alpha_slope(&ct, &StabilityParam::from_integers(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn higgs_parameter_examples() {
        let p = higgs_parameter(2, 0, g(2)).unwrap();
        assert_eq!(p.alphas(), StabilityParam::from_integers(&[2, 0]).alphas());
        assert!(p.is_higgs_type());
        for genus in 2..6 {
            assert_eq!(
                higgs_parameter(1, 0, g(genus)).unwrap().alphas(),
                &[Rational::ZERO]
            );
        }
        let p = higgs_parameter(3, 1, g(3)).unwrap();
        assert_eq!(
            p.alphas(),
            StabilityParam::from_integers(&[12, 8, 4]).alphas()
        );
        assert!(p.is_higgs_type());
        assert!(p
            .alphas()
            .windows(2)
            .all(|w| w[0] - w[1] == Rational::integer(4)));
    }

    #[test]
    fn vhs_to_chain_examples() {
        let (ct, alpha) = vhs_to_chain(&vhs(&[1, 1], &[1, -1]), 0, g(2));
        assert_eq!(ct, make_chain_type(&[1, 1], &[-1, -1]).unwrap());
        assert_eq!(
            alpha.alphas(),
            StabilityParam::from_integers(&[2, 0]).alphas()
        );

        let (ct, alpha) = vhs_to_chain(&vhs(&[3], &[0]), 0, g(2));
        assert_eq!(ct, make_chain_type(&[3], &[0]).unwrap());
        assert_eq!(alpha.alphas(), &[Rational::ZERO]);

        let (ct, _) = vhs_to_chain(&vhs(&[1, 2], &[1, -1]), 0, g(2));
        assert_eq!(ct, make_chain_type(&[1, 2], &[-1, -1]).unwrap());
    }

    #[test]
    fn twisted_chain_has_zero_slope() {
        let v = vhs(&[2, 1, 3], &[5, -1, -4]);
        for delta in -3..=3 {
            let (ct, alpha) = vhs_to_chain(&v, delta, g(3));
            assert_eq!(alpha_slope(&ct, &alpha).unwrap(), Rational::ZERO);
        }
    }

    #[test]
    fn check_examples() {
        let (ct, alpha) = vhs_to_chain(&vhs(&[1, 1], &[1, -1]), 0, g(2));
        let rep = check_chain_necessary(&ct, &alpha).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.mu, Rational::ZERO);

        let ct = make_chain_type(&[1, 1], &[1, -1]).unwrap();
        let rep = check_chain_necessary(&ct, &StabilityParam::from_integers(&[2, 0])).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        let c2: Vec<_> = rep
            .violations
            .iter()
            .filter(|v| v.condition == ChainCondition::C2)
            .collect();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[0].indices, vec![1]);
        assert_eq!(
            (c2[0].lhs, c2[0].rhs),
            (Rational::integer(1), Rational::integer(-1))
        );

        let (ct, alpha) = vhs_to_chain(&vhs(&[1, 2], &[2, -2]), 0, g(2));
        let rep = check_chain_necessary(&ct, &alpha).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].condition, ChainCondition::C3);
        assert_eq!(rep.violations[0].indices, vec![1, 2]);
        assert!(rep.violations[0].lhs > rep.violations[0].rhs);
    }

    #[test]
    fn rejects_bad_parameters() {
        let ct = make_chain_type(&[1, 1], &[0, 0]).unwrap();
        assert!(matches!(
            check_chain_necessary(&ct, &StabilityParam::from_integers(&[0, 1])),
            Err(Error::NonDecreasingParameter { index: 2 })
        ));
        assert!(matches!(
            check_chain_necessary(&ct, &StabilityParam::from_integers(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn c1_tie_is_flagged_not_failed() {
        // sum_{i>=2} d_i = 0 is a boundary tie of the first clause.
        let (ct, alpha) = vhs_to_chain(&vhs(&[1, 1], &[0, 0]), 0, g(2));
        let rep = check_chain_necessary(&ct, &alpha).unwrap();
        assert_eq!(rep.ties, vec![2]);
        assert!(rep
            .violations
            .iter()
            .all(|v| v.condition != ChainCondition::C1));
    }

    #[test]
    fn c4_with_non_positive_denominator() {
        // r = (3, 1, 2): k = 1, j = 3 has den = (3-2) + (1-2) = 0.
        let ct = make_chain_type(&[3, 1, 2], &[5, 0, -5]).unwrap();
        let alpha = StabilityParam::from_integers(&[4, 2, 0]);
        let rep = check_chain_necessary(&ct, &alpha).unwrap();
        for v in &rep.violations {
            assert!(v.lhs > v.rhs);
        }
    }

    #[test]
    fn report_json_shape() {
        let ct = make_chain_type(&[1, 1], &[1, -1]).unwrap();
        let rep = check_chain_necessary(&ct, &StabilityParam::from_integers(&[2, 0])).unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["mu"], "1");
        assert_eq!(json["verdict"], "fail");
        assert_eq!(json["violations"][0]["condition"], "C2");
        assert_eq!(json["violations"][0]["lhs"], "1");
        assert_eq!(json["violations"][0]["rhs"], "-1");
    }
}
