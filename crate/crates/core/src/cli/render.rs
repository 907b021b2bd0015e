//! Text, JSON and CSV renderings.

use std::fmt::Write;

use crate::betti::{BettiTable, SyzygyProfile};
use crate::theory::{Claim, ClaimOutcome};

/// Columns shown: `0..=r-1`. Column `r` is always zero because the
/// projective dimension is at most the codimension.
fn shown_columns(t: &BettiTable) -> usize {
    t.r.max(1)
}

fn cell(v: Option<u64>) -> String {
    v.map_or_else(|| "?".to_string(), |b| b.to_string())
}

/// Grid with rows `j` and columns `i`; `0` inside the rectangle, `?` for holes.
pub fn table_text(t: &BettiTable) -> String {
    let cols = shown_columns(t);
    let cells: Vec<Vec<String>> = t.rows.iter().map(|row| row[..cols].iter().map(|&v| cell(v)).collect()).collect();
    let width =
        cells.iter().flatten().map(String::len).chain((0..cols).map(|i| i.to_string().len())).max().unwrap_or(1);
    let label = t.rows.len().saturating_sub(1).to_string().len().max(1);
    let mut out = String::new();
    let _ = writeln!(out, "variety {}  bundle {}  r = {}", t.model, t.class, t.r);
    let _ = write!(out, "{:label$} ", "");
    for i in 0..cols {
        let _ = write!(out, " {i:>width$}");
    }
    out.push('\n');
    for (j, row) in cells.iter().enumerate() {
        let _ = write!(out, "{j:>label$}:");
        for c in row {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    }
    let primes: Vec<String> = t.primes.iter().map(|p| p.to_string()).collect();
    let _ = writeln!(out, "primes {}  {}", primes.join(","), if t.certified { "certified" } else { "NOT certified" });
    out
}

pub fn table_json(t: &BettiTable) -> String {
    serde_json::to_string_pretty(t).expect("table serializes")
}

pub fn table_csv(t: &BettiTable) -> String {
    let cols = shown_columns(t);
    let mut out = String::from("j");
    for i in 0..cols {
        let _ = write!(out, ",{i}");
    }
    out.push('\n');
    for (j, row) in t.rows.iter().enumerate() {
        let _ = write!(out, "{j}");
        for &v in &row[..cols] {
            let _ = write!(out, ",{}", cell(v));
        }
        out.push('\n');
    }
    out
}

pub fn profile_text(p: &SyzygyProfile) -> String {
    let mut out = format!(
        "p_max={} q_max={} tug={} delta={} j_max={}\n{}\n",
        p.p_max,
        p.q_max,
        p.tug,
        p.delta,
        p.j_max,
        p.verdict()
    );
    if p.q_max_floored {
        out.push_str("note: (M_1) fails, q_max reported as 0\n");
    } else if p.r <= 1 {
        out.push_str("note: r <= 1, no (M_q) range; q_max reported as 0\n");
    }
    if !p.certified {
        out.push_str("note: table NOT certified\n");
    }
    out
}

pub fn profile_csv(p: &SyzygyProfile) -> String {
    format!(
        "p_max,q_max,tug,delta,j_max,pd,r,certified\n{},{},{},{},{},{},{},{}\n",
        p.p_max, p.q_max, p.tug, p.delta, p.j_max, p.projective_dimension, p.r, p.certified
    )
}

fn outcome_tag(o: ClaimOutcome) -> &'static str {
    match o {
        ClaimOutcome::Pass => "PASS",
        ClaimOutcome::Violation => "VIOLATION",
        ClaimOutcome::Mismatch => "MISMATCH",
        ClaimOutcome::Inconclusive => "INCONCLUSIVE",
        ClaimOutcome::NotApplicable => "N/A",
    }
}

pub fn claims_text(claims: &[Claim]) -> String {
    let mut out = String::new();
    for c in claims {
        let _ =
            writeln!(out, "[{}] {}: predicted {}; observed {}", outcome_tag(c.outcome), c.id, c.predicted, c.observed);
    }
    out
}

pub fn claims_csv(claims: &[Claim]) -> String {
    let mut out = String::from("claim,predicted,observed,outcome\n");
    for c in claims {
        let _ = writeln!(
            out,
            "{},\"{}\",\"{}\",{}",
            c.id,
            c.predicted.replace('"', "'"),
            c.observed.replace('"', "'"),
            outcome_tag(c.outcome)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;
    use crate::variety::{DivisorClass, SurfaceModel};

    fn sample() -> BettiTable {
        BettiTable {
            model: SurfaceModel::projective(2).unwrap(),
            class: DivisorClass::Hyperplane(2),
            r: 5,
            rows: vec![
                vec![Some(1), Some(0), Some(0), Some(0), Some(0), Some(0)],
                vec![Some(0), Some(6), Some(8), None, Some(0), Some(0)],
            ],
            primes: PrimeField::defaults(),
            certified: false,
        }
    }

    #[test]
    fn text_grid() {
        let s = table_text(&sample());
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["0", "1", "2", "3", "4"]);
        assert_eq!(lines[2].split_whitespace().collect::<Vec<_>>(), ["0:", "1", "0", "0", "0", "0"]);
        assert_eq!(lines[3].split_whitespace().collect::<Vec<_>>(), ["1:", "0", "6", "8", "?", "0"]);
        assert!(lines[4].contains("NOT certified"));
    }

    #[test]
    fn csv_grid() {
        assert_eq!(table_csv(&sample()), "j,0,1,2,3,4\n0,1,0,0,0,0\n1,0,6,8,?,0\n");
    }
}
