//! Aligned-column text rendering. Display only; JSON is the lossless form.

use oper_strata::dims::{DimReport, ExtremalReport, ModuliDims, Provenance, StratumRow};
use oper_strata::simpson3::{GradedType, SimpsonOutcome};
use oper_strata::vhs::AdmissibilityReport;
use oper_strata::VhsType;

const SPECIAL: &str = "†";
const FOOTNOTE: &str = "† value from the special-case table (empty stable locus)";

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    notes: Vec<String>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn note(&mut self, line: &str) {
        if !self.notes.iter().any(|n| n == line) {
            self.notes.push(line.to_string());
        }
    }

    pub fn render(&self) -> String {
        let width = |s: &str| s.chars().count();
        let mut widths: Vec<usize> = self.header.iter().map(|h| width(h)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(cell));
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                out.push_str(n);
                out.push('\n');
            }
        }
        out
    }
}

fn list(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn pairs(xs: &[(i64, i64)]) -> String {
    let parts: Vec<String> = xs.iter().map(|(r, d)| format!("({r},{d})")).collect();
    format!("[{}]", parts.join(","))
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn dim_cell(dim: i64, provenance: Provenance, table: &mut Table) -> String {
    if provenance == Provenance::SpecialCaseTable {
        table.note(FOOTNOTE);
        format!("{dim}{SPECIAL}")
    } else {
        dim.to_string()
    }
}

pub fn types(types: &[VhsType]) -> String {
    let mut t = Table::new(&["ranks", "degrees"]);
    for v in types {
        t.row(vec![list(v.ranks()), list(v.degrees())]);
    }
    t.render()
}

pub fn admissibility(entries: &[(VhsType, AdmissibilityReport)]) -> String {
    let mut t = Table::new(&["ranks", "degrees", "verdict", "violations"]);
    for (v, rep) in entries {
        let viol: Vec<String> = rep
            .violations
            .iter()
            .map(|x| {
                let idx: Vec<String> = x.indices.iter().map(usize::to_string).collect();
                format!(
                    "{:?}({}): {} > {}",
                    x.condition,
                    idx.join(","),
                    x.lhs,
                    x.rhs
                )
            })
            .collect();
        let verdict = if rep.passed() { "pass" } else { "fail" };
        t.row(vec![
            list(v.ranks()),
            list(v.degrees()),
            verdict.into(),
            viol.join("; "),
        ]);
    }
    t.render()
}

pub fn dims(v: &VhsType, rep: &DimReport) -> String {
    let mut t = Table::new(&[
        "ranks",
        "degrees",
        "dim",
        "stratum_dim",
        "provenance",
        "caveat",
    ]);
    let dim = dim_cell(rep.dim, rep.provenance, &mut t);
    let provenance = match rep.provenance {
        Provenance::Formula => "formula",
        Provenance::SpecialCaseTable => "special-case-table",
    };
    t.row(vec![
        list(v.ranks()),
        list(v.degrees()),
        dim,
        rep.stratum_dim.to_string(),
        provenance.into(),
        yes_no(rep.stable_locus_caveat),
    ]);
    t.render()
}

pub fn strata(rows: &[StratumRow]) -> String {
    let mut t = Table::new(&[
        "ranks",
        "degrees",
        "dim",
        "stratum_dim",
        "codim_bound",
        "caveat",
    ]);
    for row in rows {
        let dim = dim_cell(row.dim, row.provenance, &mut t);
        let codim = row.codim_bound.map_or("-".to_string(), |c| c.to_string());
        t.row(vec![
            list(row.vhs_type.ranks()),
            list(row.vhs_type.degrees()),
            dim,
            row.stratum_dim.to_string(),
            codim,
            yes_no(row.stable_locus_caveat),
        ]);
    }
    t.render()
}

pub fn moduli(m: &ModuliDims) -> String {
    let mut t = Table::new(&["quantity", "dim"]);
    t.row(vec!["de Rham moduli".into(), m.dim_mdr.to_string()]);
    t.row(vec!["half".into(), m.half_dim.to_string()]);
    t.row(vec!["oper stratum".into(), m.oper_dim.to_string()]);
    t.row(vec!["max stratum".into(), m.max_stratum_dim.to_string()]);
    t.render()
}

pub fn extremal(e: &ExtremalReport) -> String {
    let mut t = Table::new(&["extreme", "dim", "types"]);
    let names = |vs: &[VhsType]| {
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    t.row(vec![
        "min".into(),
        e.min_dim.to_string(),
        names(&e.min_types),
    ]);
    t.row(vec![
        "max".into(),
        e.max_dim.to_string(),
        names(&e.max_types),
    ]);
    t.note(&format!(
        "bounds hold: {}; extremes unique: {}",
        yes_no(e.bounds_hold),
        yes_no(e.extremes_unique)
    ));
    t.render()
}

pub fn simpson(out: &SimpsonOutcome) -> String {
    let mut t = Table::new(&[
        "case",
        "limit",
        "filtration",
        "equals_hn",
        "graded_matches_hn",
        "unique",
    ]);
    let limit: Vec<String> = out.limit_summands.iter().map(|v| v.to_string()).collect();
    t.row(vec![
        out.case_label.to_string(),
        limit.join(" ⊕ "),
        pairs(&out.filtration_ranks_degrees),
        yes_no(out.equals_hn),
        yes_no(out.graded_matches_hn),
        yes_no(out.unique_filtration),
    ]);
    t.render()
}

pub fn graded(results: &[GradedType]) -> String {
    let mut t = Table::new(&["levels", "rank", "degree"]);
    for gt in results {
        t.row(vec![
            pairs(gt.levels()),
            gt.total_rank().to_string(),
            gt.total_degree().to_string(),
        ]);
    }
    t.render()
}
