//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the enumerator or the cleared-form checks of the
//! library: admissibility is re-derived from the slope form of the
//! conditions with `i128` cross-multiplication, and candidate types come
//! from a plain box scan.

#![allow(dead_code)]

use oper_strata::{Genus, VhsType};

/// Compositions of `n` from the bitmask of cut points.
pub fn compositions(n: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask >> bit & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(parts);
    }
    out
}

/// `a/b <= c/e` for positive denominators.
fn frac_le(a: i128, b: i128, c: i128, e: i128) -> bool {
    a * e <= c * b
}

/// Admissibility straight from the slope form of the four conditions.
pub fn admissible(ranks: &[i64], degrees: &[i64], g: i64) -> bool {
    let l = ranks.len();
    let r: Vec<i128> = ranks.iter().map(|&x| x as i128).collect();
    let d: Vec<i128> = degrees.iter().map(|&x| x as i128).collect();
    let g = g as i128;
    // strict suffix negativity
    for j in 1..l {
        if d[j..].iter().sum::<i128>() >= 0 {
            return false;
        }
    }
    for j in 0..l.saturating_sub(1) {
        if r[j] == r[j + 1] {
            // d_j/r_j - d_{j+1}/r_{j+1} <= 2g-2
            let lhs_num = d[j] * r[j + 1] - d[j + 1] * r[j];
            if !frac_le(lhs_num, r[j] * r[j + 1], 2 * g - 2, 1) {
                return false;
            }
        }
    }
    for k in 0..l {
        for j in k + 1..l {
            let n = (j - k) as i128;
            let between = &r[k + 1..=j];
            if r[k] < *between.iter().min().unwrap() {
                let s: i128 = d[k + 1..=j].iter().sum();
                if -s + n * (d[k] - (n + 1) * (g - 1) * r[k]) > 0 {
                    return false;
                }
            }
            if r[k] > *between.iter().max().unwrap() {
                let s: i128 = d[k..j].iter().sum();
                if s - n * (d[j] + (n + 1) * (g - 1) * r[j]) > 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Every degree-0 vector of length `l` with entries in `[-b, b]`.
pub fn box_vectors(l: usize, b: i64, mut visit: impl FnMut(&[i64])) {
    fn go(l: usize, b: i64, acc: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if acc.len() == l - 1 {
            let last = -acc.iter().sum::<i64>();
            if last.abs() <= b {
                acc.push(last);
                visit(acc);
                acc.pop();
            }
            return;
        }
        for x in -b..=b {
            acc.push(x);
            go(l, b, acc, visit);
            acc.pop();
        }
    }
    go(l, b, &mut Vec::with_capacity(l), &mut visit);
}

/// The half-width of the search box, `2(2g-2)r`.
pub fn box_bound(r: i64, g: i64) -> i64 {
    2 * (2 * g - 2) * r
}

/// All admissible types of total rank `r` whose degrees lie in `[-b, b]`,
/// sorted by the library's canonical order.
pub fn brute_force(r: i64, g: i64, b: i64) -> Vec<VhsType> {
    let mut out = Vec::new();
    for ranks in compositions(r) {
        box_vectors(ranks.len(), b, |d| {
            if admissible(&ranks, d, g) {
                out.push(VhsType::new(ranks.clone(), d.to_vec()).unwrap());
            }
        });
    }
    out.sort();
    out
}

/// Expected component dimension from the per-family closed forms, for total
/// rank 3 or 4. Returns `None` outside those families.
pub fn table_dim(ranks: &[i64], d: &[i64], g: i64) -> Option<i64> {
    let d1 = d[0];
    let d2 = d.get(1).copied().unwrap_or(0);
    let d3 = d.get(2).copied().unwrap_or(0);
    let value = match ranks {
        [3] => 9 * g - 8,
        [1, 1, 1] => 5 * g - 4 - 2 * d1 - d2,
        [1, 2] | [2, 1] if d1 == g - 1 => 2 * g,
        [1, 2] | [2, 1] => 7 * g - 6 - 3 * d1,
        [4] => 16 * g - 15,
        [1, 1, 1, 1] => 7 * g - 6 - 2 * d1 - d2 - d3,
        [1, 3] | [3, 1] if d1 == g - 1 => 5 * g - 3,
        [1, 3] | [3, 1] => 13 * g - 12 - 4 * d1,
        [2, 2] => 12 * g - 11 - 4 * d1,
        [1, 1, 2] if 2 * d2 + d1 == 2 * g - 2 => {
            assert_eq!(d1 % 2, 0);
            5 * g - 3 - 3 * d1 / 2
        }
        [1, 1, 2] => 9 * g - 8 - 2 * d1 - 2 * d2,
        [2, 1, 1] if d1 - d2 == 2 * g - 2 => 8 * g - 6 - 3 * d1,
        [2, 1, 1] => 9 * g - 8 - 2 * d1,
        [1, 2, 1] if d == [2 * g - 2, 0, 2 - 2 * g] => 2 * g,
        [1, 2, 1] => 10 * g - 9 - 4 * d1 - 2 * d2,
        _ => return None,
    };
    Some(value)
}

/// The closed forms without any special-case substitution.
pub fn table_formula(ranks: &[i64], d: &[i64], g: i64) -> Option<i64> {
    let d1 = d[0];
    let d2 = d.get(1).copied().unwrap_or(0);
    let d3 = d.get(2).copied().unwrap_or(0);
    let value = match ranks {
        [3] => 9 * g - 8,
        [1, 1, 1] => 5 * g - 4 - 2 * d1 - d2,
        [1, 2] | [2, 1] => 7 * g - 6 - 3 * d1,
        [4] => 16 * g - 15,
        [1, 1, 1, 1] => 7 * g - 6 - 2 * d1 - d2 - d3,
        [1, 3] | [3, 1] => 13 * g - 12 - 4 * d1,
        [2, 2] => 12 * g - 11 - 4 * d1,
        [1, 1, 2] => 9 * g - 8 - 2 * d1 - 2 * d2,
        [2, 1, 1] => 9 * g - 8 - 2 * d1,
        [1, 2, 1] => 10 * g - 9 - 4 * d1 - 2 * d2,
        _ => return None,
    };
    Some(value)
}

pub fn genus(g: i64) -> Genus {
    Genus::new(g).unwrap()
}

pub fn vhs(r: &[i64], d: &[i64]) -> VhsType {
    VhsType::new(r.to_vec(), d.to_vec()).unwrap()
}

use oper_strata::{GradedType, Hn3Profile};
use proptest::prelude::*;

/// Every profile inside the degree windows with saturation degrees in the
/// covered ranges, written out from the window inequalities directly.
pub fn valid_profiles(g: i64) -> Vec<Hn3Profile> {
    let k = 2 * g - 2;
    let mut out = Vec::new();
    for d in 1..=k {
        if 3 * d > 2 * k {
            continue;
        }
        for deg_i in d - k..=0 {
            if 2 * deg_i <= -d {
                out.push(Hn3Profile::Line { d, deg_i });
            }
        }
        let l = d;
        for deg_n in 2 * l - k..=l {
            if 2 * deg_n <= l {
                out.push(Hn3Profile::Plane { l, deg_n });
            }
        }
    }
    for a1 in -2 * k..=2 * k {
        for a2 in -2 * k..=2 * k {
            let (p, q) = (2 * a1 - a2, 2 * a2 - a1);
            if !(0 < p && p <= k && 0 < q && q <= k) {
                continue;
            }
            for deg_j in a1 - k..=a2 - a1 {
                if deg_j < -a1 && a2 >= a1 {
                    for m in 2 * a2 - k..=a2 - a1 {
                        out.push(Hn3Profile::Full {
                            a1,
                            a2,
                            deg_j,
                            deg_m: Some(m),
                        });
                    }
                } else {
                    out.push(Hn3Profile::Full {
                        a1,
                        a2,
                        deg_j,
                        deg_m: None,
                    });
                }
            }
        }
    }
    out
}

/// Profiles with every field drawn well outside the valid windows.
pub fn any_profile() -> impl Strategy<Value = (Hn3Profile, i64)> {
    (2i64..=6).prop_flat_map(|g| {
        let w = 6 * g;
        let line = (-w..=w, -w..=w).prop_map(|(d, deg_i)| Hn3Profile::Line { d, deg_i });
        let plane = (-w..=w, -w..=w).prop_map(|(l, deg_n)| Hn3Profile::Plane { l, deg_n });
        let full = (-w..=w, -w..=w, -w..=w, prop::option::of(-w..=w)).prop_map(
            |(a1, a2, deg_j, deg_m)| Hn3Profile::Full {
                a1,
                a2,
                deg_j,
                deg_m,
            },
        );
        (prop_oneof![line, plane, full], Just(g))
    })
}

/// A graded type plus a destabilizer satisfying every precondition.
pub fn step_pair() -> impl Strategy<Value = (GradedType, GradedType)> {
    prop::collection::vec((0i64..=4, -6i64..=6), 1..=5)
        .prop_flat_map(|levels| {
            let subs: Vec<_> = levels.iter().map(|&(r, _)| (0..=r, -8i64..=8)).collect();
            (Just(levels), subs)
        })
        .prop_filter_map("preconditions", |(levels, subs)| {
            let levels: Vec<(i64, i64)> = levels
                .into_iter()
                .map(|(r, d)| (r, if r == 0 { 0 } else { d }))
                .collect();
            let subs: Vec<(i64, i64)> = subs
                .into_iter()
                .zip(&levels)
                .map(|((h, e), &(r, d))| match h {
                    0 => (0, 0),
                    h if h == r => (h, d),
                    h => (h, e),
                })
                .collect();
            let (rt, dt): (i64, i64) = (
                levels.iter().map(|l| l.0).sum(),
                levels.iter().map(|l| l.1).sum(),
            );
            let (rs, ds): (i64, i64) = (
                subs.iter().map(|l| l.0).sum(),
                subs.iter().map(|l| l.1).sum(),
            );
            if rs == 0 || rs >= rt || ds * rt <= dt * rs {
                return None;
            }
            Some((GradedType::new(levels).ok()?, GradedType::new(subs).ok()?))
        })
}
