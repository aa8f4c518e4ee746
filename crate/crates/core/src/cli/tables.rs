use std::fmt::Write as _;

use crate::higher::{ot_angle, HIndec, HigherError, IndexTable, TiltingSet};
use crate::object::IndexVector;

/// Term order for written-out vectors. Index rows read best descending
/// (`146-136+135`), θ-values ascending (`-135+137+146-147`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Ascending,
    Descending,
}

/// Signed sum of labels with ASCII signs, `0` for the zero vector.
pub fn format_expansion(v: &IndexVector<HIndec>, order: TermOrder) -> String {
    let mut terms: Vec<(&HIndec, i64)> = v.terms().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    if order == TermOrder::Descending {
        terms.reverse();
    }
    let mut out = String::new();
    for (i, (x, c)) in terms.into_iter().enumerate() {
        let sign = match (i == 0, c < 0) {
            (true, false) => "",
            (_, true) => "-",
            (false, false) => "+",
        };
        let mag = c.unsigned_abs();
        if mag == 1 {
            write!(out, "{sign}{x}").unwrap();
        } else {
            write!(out, "{sign}{mag}*{x}").unwrap();
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per indecomposable in enumeration order: `object,index`.
pub fn emit_index_table(t: &TiltingSet) -> Result<String, HigherError> {
    let mut table = IndexTable::new(t);
    let mut out = String::from("object,index\n");
    for s in t.params().enumerate_indecs() {
        let v = table.index(&s)?;
        writeln!(out, "{},{}", csv_field(&s.to_string()), csv_field(&format_expansion(&v, TermOrder::Descending)))
            .unwrap();
    }
    Ok(out)
}

/// One row per ordered intertwining pair: `angle,theta`.
pub fn emit_theta_table(t: &TiltingSet) -> Result<String, HigherError> {
    let params = t.params();
    let mut table = IndexTable::new(t);
    let all = params.enumerate_indecs();
    let mut out = String::from("angle,theta\n");
    for x in &all {
        for y in all.iter().filter(|y| params.intertwines(x, y)) {
            let angle = ot_angle(&params, x, y)?;
            let v = table.angle_theta(&angle)?;
            writeln!(
                out,
                "{},{}",
                csv_field(&angle.to_string()),
                csv_field(&format_expansion(&v, TermOrder::Ascending))
            )
            .unwrap();
        }
    }
    Ok(out)
}
