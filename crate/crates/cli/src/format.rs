//! Text, CSV and b-file renderings.

use std::fmt::Write;

use crate::doc::{SystemDoc, SystemKind};
use crate::error::Result;

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// `[2, 4, 8, 1], [6, 5, 7, 3]`
pub fn bracketed(cycles: &[Vec<i64>]) -> String {
    cycles
        .iter()
        .map(|c| format!("[{}]", join(c)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn parenthesized(cycles: &[Vec<i64>]) -> String {
    cycles
        .iter()
        .map(|c| format!("({})", join(c)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn icos_entries(cycles: &[Vec<i64>]) -> String {
    cycles
        .iter()
        .map(|c| {
            let entries: Vec<String> = c
                .iter()
                .map(|&v| format!("({},{})", if v < 0 { '-' } else { '+' }, v.unsigned_abs()))
                .collect();
            format!("[{}]", entries.join(", "))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Two aligned rows, coaches separated by `|`:
///
/// ```text
/// A: 1 | 3 31 17 | ...
/// K: 6 | 1  1  4 | ...
/// ```
fn coach_rows(upper: &[Vec<i64>], lower: &[Vec<u32>]) -> String {
    let mut a_row = String::from("A:");
    let mut k_row = String::from("K:");
    for (i, (a, k)) in upper.iter().zip(lower).enumerate() {
        if i > 0 {
            a_row.push_str(" |");
            k_row.push_str(" |");
        }
        for (x, y) in a.iter().zip(k) {
            let w = x.to_string().len().max(y.to_string().len());
            let _ = write!(a_row, " {x:>w$}");
            let _ = write!(k_row, " {y:>w$}");
        }
    }
    format!("{a_row}\n{k_row}\n")
}

pub fn render_text(doc: &SystemDoc) -> String {
    match doc.kind {
        SystemKind::Mds => bracketed(&doc.cycles) + "\n",
        SystemKind::Sbb | SystemKind::SbbSigned => parenthesized(&doc.cycles) + "\n",
        SystemKind::Icos => icos_entries(&doc.cycles) + "\n",
        SystemKind::Coach => coach_rows(
            &doc.cycles,
            doc.meta.exponents.as_deref().unwrap_or_default(),
        ),
    }
}

/// One row per element: `cycle,position,value[,exponent]`, 1-based.
pub fn render_csv(doc: &SystemDoc) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let coach = doc.kind == SystemKind::Coach;
    if coach {
        w.write_record(["cycle", "position", "value", "exponent"])?;
    } else {
        w.write_record(["cycle", "position", "value"])?;
    }
    for (i, cycle) in doc.cycles.iter().enumerate() {
        for (j, v) in cycle.iter().enumerate() {
            let mut record = vec![(i + 1).to_string(), (j + 1).to_string(), v.to_string()];
            if coach {
                let k = doc
                    .meta
                    .exponents
                    .as_ref()
                    .map(|ks| ks[i][j])
                    .unwrap_or_default();
                record.push(k.to_string());
            }
            w.write_record(&record)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// `index value` per line, no header.
pub fn render_bfile(terms: &[(u64, i64)]) -> String {
    let mut out = String::new();
    for (n, v) in terms {
        let _ = writeln!(out, "{n} {v}");
    }
    out
}

/// All cycle elements in order, indexed from 1.
pub fn flatten(doc: &SystemDoc) -> Vec<(u64, i64)> {
    doc.cycles
        .iter()
        .flatten()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::system_doc;
    use oddcycles_core::OddModulus;

    fn doc(kind: SystemKind, b: u64) -> SystemDoc {
        system_doc(kind, OddModulus::new(b).unwrap())
    }

    #[test]
    fn texts() {
        assert_eq!(
            render_text(&doc(SystemKind::Mds, 63)),
            "[2, 4, 8, 16, 31, 1], [10, 20, 23, 17, 29, 5], [22, 19, 25, 13, 26, 11]\n"
        );
        assert_eq!(
            render_text(&doc(SystemKind::Sbb, 17)),
            "(1, 15, 13, 9), (3, 11, 5, 7)\n"
        );
        assert_eq!(render_text(&doc(SystemKind::SbbSigned, 7)), "(1, 5, -3)\n");
        assert_eq!(
            render_text(&doc(SystemKind::Icos, 17)),
            "[(+,2), (+,4), (+,8), (-,1)], [(+,6), (-,5), (-,7), (-,3)]\n"
        );
        assert_eq!(
            render_text(&doc(SystemKind::Coach, 65)),
            "A: 1 | 3 31 17 | 7 29 9 | 11 27 19 23 21\n\
             K: 6 | 1  1  4 | 1  2 3 |  1  1  1  1  2\n"
        );
    }

    #[test]
    fn csv_rows() {
        let text = render_csv(&doc(SystemKind::Coach, 7)).unwrap();
        assert_eq!(text, "cycle,position,value,exponent\n1,1,1,1\n1,2,3,2\n");
        let text = render_csv(&doc(SystemKind::Mds, 5)).unwrap();
        assert_eq!(text, "cycle,position,value\n1,1,2\n1,2,1\n");
    }

    #[test]
    fn bfile() {
        assert_eq!(render_bfile(&[(1, 1), (2, -1)]), "1 1\n2 -1\n");
        assert_eq!(flatten(&doc(SystemKind::Mds, 7)), [(1, 2), (2, 3), (3, 1)]);
    }
}
