//! text rendering for the terminal: betti grids, complexes, ideals,
//! stability reports, verification output.  all output is deterministic.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use shiftlab_core::{
    BettiTable, CheckStatus, Complex, Monomial, MonomialIdeal, ShiftTrace, StabilityReport,
    SweepSummary, VerificationReport,
};

/// grid in the style computer algebra systems print resolutions: columns
/// are homological indices, rows are degree slopes j - i, plus a total row;
/// followed by the raw entries and the regularity
pub fn betti_text(t: &BettiTable) -> String {
    if t.is_empty() {
        return String::from("0\n");
    }
    let max_i = t.max_homological_index().unwrap();
    let slopes: BTreeSet<u32> = t.entries().keys().map(|&(i, j)| j - i as u32).collect();

    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend((0..=max_i).map(|i| i.to_string()));
    rows.push(header);
    let mut total = vec![String::from("total:")];
    for i in 0..=max_i {
        let sum: u64 = t.entries().iter().filter(|(&(ei, _), _)| ei == i).map(|(_, &b)| b).sum();
        total.push(sum.to_string());
    }
    rows.push(total);
    for &r in &slopes {
        let mut line = vec![format!("{}:", r)];
        for i in 0..=max_i {
            let b = t.get(i, i as u32 + r);
            line.push(if b == 0 { String::from(".") } else { b.to_string() });
        }
        rows.push(line);
    }

    let cols = max_i + 2;
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut out = String::new();
    for row in &rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{:>width$}", cell, width = widths[c]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push('\n');
    for (&(i, j), &b) in t.entries() {
        let _ = writeln!(out, "b({},{}) = {}", i, j, b);
    }
    if let Some(r) = t.regularity() {
        let _ = writeln!(out, "regularity: {}", r);
    }
    out
}

pub fn monomial_text(m: &Monomial) -> String {
    if m.is_unit() {
        return String::from("1");
    }
    let mut parts = Vec::new();
    for (k, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", k + 1)),
            _ => parts.push(format!("x{}^{}", k + 1, e)),
        }
    }
    parts.join("*")
}

pub fn ideal_text(i: &MonomialIdeal) -> String {
    let mut out = format!("n: {}\n", i.n());
    if i.is_zero() {
        out.push_str("generators: (none)\n");
    } else {
        let gens: Vec<String> = i.gens().iter().map(monomial_text).collect();
        let _ = writeln!(out, "generators: {}", gens.join(", "));
    }
    out
}

pub fn complex_text(c: &Complex) -> String {
    let mut out = format!("n: {}\n", c.n());
    let faces = |fs: &[shiftlab_core::Face]| -> String {
        if fs.is_empty() {
            String::from("(none)")
        } else {
            fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
        }
    };
    let _ = writeln!(out, "minimal nonfaces: {}", faces(c.min_nonfaces()));
    let _ = writeln!(out, "facets: {}", faces(c.facets()));
    out
}

pub fn trace_text(t: &ShiftTrace) -> String {
    let mut out = String::new();
    if t.steps().is_empty() {
        out.push_str("steps: (none)\n");
    } else {
        let steps: Vec<String> = t.steps().iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "steps: {}", steps.join(" "));
    }
    let counts: Vec<String> = t.nonface_counts().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "nonface counts: {}", counts.join(" -> "));
    out
}

pub fn classify_text(r: &StabilityReport) -> String {
    format!(
        "stable: {}\nstrongly stable: {}\nsquarefree: {}\nsquarefree stable: {}\nsquarefree strongly stable: {}\n",
        r.stable, r.strongly_stable, r.squarefree, r.squarefree_stable, r.squarefree_strongly_stable
    )
}

fn status_tag(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::NotApplicable => "n/a ",
    }
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "complex: {}", r.id());
    let _ = writeln!(out, "stable: {}", r.stable());
    let _ = writeln!(out, "seed: {}", r.seed());
    let _ = writeln!(out, "fields: {}", r.fields().join(", "));
    for route in r.routes() {
        let _ = writeln!(out, "route {}", route.label());
        match route.closed_form() {
            Some(t) => {
                let _ = writeln!(out, "  closed form: {}", t);
            }
            None => {
                let _ = writeln!(out, "  closed form: (not applicable)");
            }
        }
        for (field, table) in route.homology() {
            match table {
                Some(t) => {
                    let _ = writeln!(out, "  homology over {}: {}", field, t);
                }
                None => {
                    let _ = writeln!(out, "  homology over {}: (failed)", field);
                }
            }
        }
    }
    for c in r.checks() {
        match c.detail() {
            Some(d) => {
                let _ = writeln!(out, "[{}] {} — {}", status_tag(c.status()), c.name(), d);
            }
            None => {
                let _ = writeln!(out, "[{}] {}", status_tag(c.status()), c.name());
            }
        }
    }
    let _ = writeln!(out, "result: {}", if r.passed() { "pass" } else { "fail" });
    out
}

pub fn summary_text(s: &SweepSummary, mode: &str, fields: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}/{} pass", s.passes(), s.total());
    let _ = writeln!(out, "n: {}, mode: {}, fields: {}", s.n(), mode, fields.join(", "));
    for f in s.failures() {
        out.push('\n');
        out.push_str(&report_text(f));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use shiftlab_core::Face;

    fn fix_a_table() -> BettiTable {
        let mut t = BettiTable::new();
        t.add(0, 2, 3);
        t.add(1, 3, 3);
        t.add(2, 4, 1);
        t
    }

    #[test]
    fn betti_grid() {
        let text = betti_text(&fix_a_table());
        let expected = concat!(
            "        0  1  2\n",
            "total:  3  3  1\n",
            "    2:  3  3  1\n",
            "\n",
            "b(0,2) = 3\n",
            "b(1,3) = 3\n",
            "b(2,4) = 1\n",
            "regularity: 2\n",
        );
        assert_eq!(text, expected);
    }

    #[test]
    fn betti_grid_with_gap() {
        // entries on two slopes; missing cells print as dots
        let mut t = BettiTable::new();
        t.add(0, 2, 2);
        t.add(0, 3, 1);
        t.add(1, 3, 1);
        t.add(1, 4, 1);
        let text = betti_text(&t);
        assert!(text.contains("total:  3  2"), "{}", text);
        assert!(text.contains("    2:  2  1"), "{}", text);
        assert!(text.contains("    3:  1  1"), "{}", text);
        assert!(text.contains("regularity: 3"), "{}", text);
    }

    #[test]
    fn empty_table_is_zero() {
        assert_eq!(betti_text(&BettiTable::new()), "0\n");
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial_text(&Monomial::new(vec![0, 0])), "1");
        assert_eq!(monomial_text(&Monomial::new(vec![2, 0, 1])), "x1^2*x3");
        assert_eq!(monomial_text(&Monomial::new(vec![1, 1, 0])), "x1*x2");
    }

    #[test]
    fn complexes_and_traces() {
        let c = Complex::from_min_nonfaces(
            3,
            &[Face::from_vertices(&[1, 2]), Face::from_vertices(&[2, 3])],
        )
        .unwrap();
        let text = complex_text(&c);
        assert!(text.contains("minimal nonfaces: {1,2} {2,3}"), "{}", text);
        assert!(text.contains("facets: {2} {1,3}"), "{}", text);
    }
}
