//! Browser bindings. Every export returns a JSON string, either
//! `{"ok": ...}` or `{"error": {"code": ..., "message": ...}}`, so the page
//! needs no generated type glue and the same functions run in native tests.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use oper_strata::chains::{check_chain_necessary, vhs_to_chain};
use oper_strata::dims::{dim_component, moduli_dims, strata_table};
use oper_strata::simpson3::{simpson_limit_rank3, subbundle_degree_bound, Hn3Profile};
use oper_strata::vhs::check_vhs_admissible;
use oper_strata::{Error, Genus, VhsType};

/// Ranks above this make the rank >= 5 splitting check too slow for a page.
const PAGE_RANK_CAP: i64 = 6;

struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

fn envelope(result: Result<Value, Failure>) -> String {
    match result {
        Ok(v) => json!({ "ok": v }),
        Err(f) => json!({ "error": { "code": f.code, "message": f.message } }),
    }
    .to_string()
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn parse_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| Failure {
                code: "INVALID_INPUT",
                message: format!("'{t}' is not an integer"),
            })
        })
        .collect()
}

fn strata_value(rank: i64, genus: i64) -> Result<Value, Failure> {
    let g = Genus::new(genus)?;
    if rank > PAGE_RANK_CAP {
        return Err(Error::RankCapExceeded {
            rank,
            cap: PAGE_RANK_CAP,
        }
        .into());
    }
    Ok(json!({
        "moduli": to_value(&moduli_dims(rank, g)?),
        "rows": to_value(&strata_table(rank, g)?),
    }))
}

fn check_value(ranks: &str, degrees: &str, genus: i64) -> Result<Value, Failure> {
    let g = Genus::new(genus)?;
    let v = VhsType::new(parse_list(ranks)?, parse_list(degrees)?)?;
    let admissibility = check_vhs_admissible(&v, g);
    let (ct, alpha) = vhs_to_chain(&v, 0, g);
    let chain = check_chain_necessary(&ct, &alpha)?;
    let dims = if admissibility.passed() && v.rank() <= PAGE_RANK_CAP {
        Some(to_value(&dim_component(&v, g)?))
    } else {
        None
    };
    Ok(json!({
        "type": to_value(&v),
        "admissibility": to_value(&admissibility),
        "twisted_chain": { "type": to_value(&ct), "report": to_value(&chain) },
        "dims": dims,
    }))
}

fn simpson_value(
    shape: &str,
    x: i64,
    y: i64,
    z: i64,
    m: Option<i64>,
    genus: i64,
) -> Result<Value, Failure> {
    let g = Genus::new(genus)?;
    let p = match shape {
        "line" => Hn3Profile::Line { d: x, deg_i: y },
        "plane" => Hn3Profile::Plane { l: x, deg_n: y },
        "full" => Hn3Profile::Full {
            a1: x,
            a2: y,
            deg_j: z,
            deg_m: m,
        },
        other => {
            return Err(Failure {
                code: "INVALID_INPUT",
                message: format!("unknown shape '{other}'"),
            })
        }
    };
    let outcome = simpson_limit_rank3(&p, g)?;
    Ok(json!({
        "profile": to_value(&p),
        "outcome": to_value(&outcome),
        "subbundle_degree_bound": subbundle_degree_bound(&p, g)?,
        "bound_limit": 4 * genus - 4,
    }))
}

/// Strata table and global dimensions for rank `rank`, genus `genus`.
#[wasm_bindgen]
pub fn strata(rank: i32, genus: i32) -> String {
    envelope(strata_value(rank.into(), genus.into()))
}

/// Admissibility, the twisted-chain check and the component dimension of a
/// type given as comma-separated lists.
#[wasm_bindgen]
pub fn check_type(ranks: &str, degrees: &str, genus: i32) -> String {
    envelope(check_value(ranks, degrees, genus.into()))
}

/// Rank-3 Simpson limit. `x, y` are `(d, deg_i)` for `line`, `(l, deg_n)` for
/// `plane`; for `full` they are `(a1, a2)` with `z = deg_j` and `m = deg_m`.
#[wasm_bindgen]
pub fn simpson3(shape: &str, x: i32, y: i32, z: i32, m: Option<i32>, genus: i32) -> String {
    envelope(simpson_value(
        shape,
        x.into(),
        y.into(),
        z.into(),
        m.map(i64::from),
        genus.into(),
    ))
}
