// SPDX-License-Identifier: Apache-2.0

//! Plain-text histogram tables.

use std::fmt::Write;

use ncv_core::analysis::CostHistogram;

/// Renders histograms side by side: one row per cost that any column
/// realizes, then a `WA` row with the weighted averages.
pub fn render_histograms(columns: &[(&str, &CostHistogram)]) -> String {
    let width = columns
        .iter()
        .map(|(h, _)| h.len())
        .max()
        .unwrap_or(0)
        .max(10);
    let max = columns
        .iter()
        .filter_map(|(_, h)| h.max_cost())
        .max()
        .unwrap_or(0);
    let mut s = String::new();
    let _ = write!(s, "{:<6}", "Cost");
    for (head, _) in columns {
        let _ = write!(s, " {head:>width$}");
    }
    s.push('\n');
    for cost in 0..=max {
        if columns.iter().all(|(_, h)| h.count(cost) == 0) {
            continue;
        }
        let _ = write!(s, "{cost:<6}");
        for (_, h) in columns {
            let _ = write!(s, " {:>width$}", h.count(cost));
        }
        s.push('\n');
    }
    let _ = write!(s, "{:<6}", "WA");
    for (_, h) in columns {
        let _ = write!(s, " {:>width$}", h.render_weighted_average());
    }
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_unrealized_costs() {
        let a = CostHistogram::from_costs([0, 1, 1, 3]);
        let b = CostHistogram::from_costs([0, 1, 2, 2]);
        let out = render_histograms(&[("A", &a), ("B", &b)]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].starts_with("Cost"));
        assert!(lines[5].starts_with("WA"));
        assert!(lines[5].ends_with("1.2500"));
        let only_a = render_histograms(&[("A", &a)]);
        assert!(!only_a.lines().any(|l| l.starts_with("2 ")));
    }
}
