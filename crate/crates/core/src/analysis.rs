// SPDX-License-Identifier: Apache-2.0

//! Cost histograms and NCT-versus-NCV comparison statistics.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::qmodel::{CostMetric, Permutation, FUNCTION_COUNT};
use crate::search::{CostModel, SynthesisTable};
use crate::Error;

/// Number of functions per cost, with an exact weighted average.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CostHistogram {
    counts: BTreeMap<u32, u64>,
    total: u64,
    weighted_sum: u64,
}

impl CostHistogram {
    pub fn from_costs(costs: impl IntoIterator<Item = u32>) -> Self {
        let mut h = CostHistogram::default();
        for c in costs {
            *h.counts.entry(c).or_default() += 1;
            h.total += 1;
            h.weighted_sum += u64::from(c);
        }
        h
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn count(&self, cost: u32) -> u64 {
        self.counts.get(&cost).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn max_cost(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// Counts for costs `0..=max_cost`, zeros included.
    pub fn dense(&self) -> Vec<u64> {
        let max = self.max_cost().map_or(0, |m| m as usize + 1);
        (0..max as u32).map(|c| self.count(c)).collect()
    }

    /// `Σ cost·count / total` as an unreduced fraction.
    pub fn weighted_average(&self) -> (u64, u64) {
        (self.weighted_sum, self.total)
    }

    pub fn weighted_average_f64(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.weighted_sum as f64 / self.total as f64
        }
    }

    /// Weighted average rounded half-up to four decimals, from the exact
    /// fraction.
    pub fn render_weighted_average(&self) -> String {
        let (num, den) = self.weighted_average();
        let mut out = String::new();
        if den == 0 {
            out.push_str("0.0000");
            return out;
        }
        let scaled = (u128::from(num) * 20_000 + u128::from(den)) / (2 * u128::from(den));
        let _ = write!(out, "{}.{:04}", scaled / 10_000, scaled % 10_000);
        out
    }
}

/// Histogram of a complete table's stored costs.
pub fn histogram(table: &SynthesisTable) -> Result<CostHistogram, Error> {
    complete(table)?;
    Ok(CostHistogram::from_costs(
        table.costs().iter().flatten().copied(),
    ))
}

/// Histogram of `f(cost)` over a complete table, e.g. the primary part of a
/// lexicographic cost.
pub fn histogram_by(
    table: &SynthesisTable,
    f: impl Fn(u32) -> u32,
) -> Result<CostHistogram, Error> {
    complete(table)?;
    Ok(CostHistogram::from_costs(
        table.costs().iter().flatten().map(|&c| f(c)),
    ))
}

fn complete(table: &SynthesisTable) -> Result<(), Error> {
    if table.is_complete() {
        Ok(())
    } else {
        Err(Error::IncompleteTable {
            settled: table.settled_count(),
        })
    }
}

/// One function's costs in a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub function: Permutation,
    /// Gate count of the chosen optimal NCT circuit.
    pub nct_gate_count: u32,
    /// NCV cost of that circuit after Toffoli substitution.
    pub nct_cost: u32,
    /// Optimal NCV cost.
    pub ncv_cost: u32,
}

/// A ratio `num / den` compared exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u32,
    pub den: u32,
}

impl Ratio {
    pub fn value(self) -> f64 {
        f64::from(self.num) / f64::from(self.den)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (u64::from(self.num) * u64::from(other.den))
            .cmp(&(u64::from(other.num) * u64::from(self.den)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub metric: CostMetric,
    pub rows: Vec<ComparisonRow>,
    pub pearson_correlation: f64,
    /// Mean of `nct_cost / ncv_cost` over functions with `ncv_cost > 0`.
    pub average_ratio: f64,
    pub max_ratio: Ratio,
    /// Every function attaining `max_ratio`, in rank order.
    pub max_ratio_witnesses: Vec<Permutation>,
    /// Functions whose substituted NCT cost equals the NCV optimum.
    pub equal_count: usize,
    /// Functions where the substituted NCT cost is below the NCV optimum;
    /// always 0 when both tables are correct.
    pub violations: usize,
}

impl ComparisonReport {
    pub fn row(&self, function: &Permutation) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.function == *function)
    }

    pub fn nct_histogram(&self) -> CostHistogram {
        CostHistogram::from_costs(self.rows.iter().map(|r| r.nct_cost))
    }

    pub fn nct_gate_count_histogram(&self) -> CostHistogram {
        CostHistogram::from_costs(self.rows.iter().map(|r| r.nct_gate_count))
    }

    pub fn ncv_histogram(&self) -> CostHistogram {
        CostHistogram::from_costs(self.rows.iter().map(|r| r.ncv_cost))
    }
}

/// Pearson correlation coefficient of paired samples; 1 for two identical
/// constant vectors.
pub fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len().min(ys.len()) as f64;
    if n == 0.0 {
        return 0.0;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return if xs == ys { 1.0 } else { 0.0 };
    }
    sxy / libm::sqrt(sxx * syy)
}

/// Compares the substituted NCV cost of each function's optimal NCT circuit
/// with its optimal NCV cost under `metric`.
///
/// `nct_table` may be an NCT table (its witnesses are substituted and costed
/// in `metric`) or an NCV table under `metric`, in which case its stored costs
/// are used directly.
pub fn compare(
    nct_table: &SynthesisTable,
    ncv_table: &SynthesisTable,
    metric: &CostMetric,
) -> Result<ComparisonReport, Error> {
    complete(nct_table)?;
    complete(ncv_table)?;
    if ncv_table.model() != CostModel::Ncv(*metric) {
        return Err(Error::MetricMismatch);
    }
    let nct_model = nct_table.model();
    match nct_model {
        CostModel::Nct(m) if m.substitution().is_some_and(|s| s != *metric) => {
            return Err(Error::MetricMismatch)
        }
        CostModel::Ncv(m) if m != *metric => return Err(Error::MetricMismatch),
        _ => {}
    }

    let mut rows = Vec::with_capacity(FUNCTION_COUNT);
    for ((function, x_stored, witness), y) in
        nct_table.iter().zip(ncv_table.costs().iter().flatten())
    {
        let (gc, x) = match nct_model {
            CostModel::Nct(m) => {
                let w = witness.ok_or(Error::IncompleteTable { settled: 0 })?;
                (m.gate_count(x_stored), w.cost(metric))
            }
            CostModel::Ncv(_) => (witness.map_or(0, |w| w.len() as u32), x_stored),
        };
        rows.push(ComparisonRow {
            function,
            nct_gate_count: gc,
            nct_cost: x,
            ncv_cost: *y,
        });
    }

    let xs: Vec<f64> = rows.iter().map(|r| f64::from(r.nct_cost)).collect();
    let ys: Vec<f64> = rows.iter().map(|r| f64::from(r.ncv_cost)).collect();
    let pearson_correlation = pearson(&xs, &ys);

    let mut ratio_sum = 0.0;
    let mut ratio_n = 0usize;
    let mut max_ratio = Ratio { num: 1, den: 1 };
    let mut max_ratio_witnesses = Vec::new();
    for r in rows.iter().filter(|r| r.ncv_cost > 0) {
        let q = Ratio {
            num: r.nct_cost,
            den: r.ncv_cost,
        };
        ratio_sum += q.value();
        ratio_n += 1;
        match q.cmp(&max_ratio) {
            Ordering::Greater => {
                max_ratio = q;
                max_ratio_witnesses.clear();
                max_ratio_witnesses.push(r.function);
            }
            Ordering::Equal => max_ratio_witnesses.push(r.function),
            Ordering::Less => {}
        }
    }
    let average_ratio = if ratio_n == 0 {
        1.0
    } else {
        ratio_sum / ratio_n as f64
    };
    let equal_count = rows.iter().filter(|r| r.nct_cost == r.ncv_cost).count();
    let violations = rows.iter().filter(|r| r.nct_cost < r.ncv_cost).count();

    Ok(ComparisonReport {
        metric: *metric,
        rows,
        pearson_correlation,
        average_ratio,
        max_ratio,
        max_ratio_witnesses,
        equal_count,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmodel::{Circuit, Library, Topology};

    fn synthetic_table(cost_of: impl Fn(usize) -> u32) -> SynthesisTable {
        let mut t = SynthesisTable::new(CostModel::Ncv(CostMetric::NCV_111), Topology::FULL);
        for (r, f) in Permutation::all().enumerate() {
            t.insert(f, cost_of(r), Some(Circuit::empty(Library::Ncv)));
        }
        t
    }

    #[test]
    fn render_rounding() {
        let h = CostHistogram::from_costs([0, 1, 1]);
        assert_eq!(h.render_weighted_average(), "0.6667");
        let h = CostHistogram::from_costs([1, 2]);
        assert_eq!(h.render_weighted_average(), "1.5000");
        assert_eq!(CostHistogram::default().render_weighted_average(), "0.0000");
    }

    #[test]
    fn incomplete_table() {
        let mut t = SynthesisTable::new(CostModel::Ncv(CostMetric::NCV_111), Topology::FULL);
        t.insert(Permutation::IDENTITY, 0, None);
        assert_eq!(histogram(&t), Err(Error::IncompleteTable { settled: 1 }));
    }

    #[test]
    fn self_comparison() {
        let t = synthetic_table(|r| (r % 17) as u32);
        let rep = compare(&t, &t, &CostMetric::NCV_111).unwrap();
        assert!((rep.pearson_correlation - 1.0).abs() < 1e-12);
        assert_eq!(rep.max_ratio, Ratio { num: 1, den: 1 });
        assert_eq!(rep.equal_count, FUNCTION_COUNT);
        assert!((rep.average_ratio - 1.0).abs() < 1e-12);
        assert_eq!(histogram(&t).unwrap().total(), FUNCTION_COUNT as u64);
    }

    #[test]
    fn metric_mismatch() {
        let t = synthetic_table(|_| 1);
        assert_eq!(
            compare(&t, &t, &CostMetric::NCV_012),
            Err(Error::MetricMismatch)
        );
    }

    #[test]
    fn pearson_known_values() {
        assert!((pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]) - 1.0).abs() < 1e-12);
        assert!((pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]) + 1.0).abs() < 1e-12);
        // cov = 0.5, var = 2/3 and 2/3 over n=3: r = 0.5
        assert!((pearson(&[1.0, 2.0, 3.0], &[1.0, 3.0, 2.0]) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ratio_ordering() {
        assert!(Ratio { num: 27, den: 8 } > Ratio { num: 10, den: 3 });
        assert_eq!(
            Ratio { num: 16, den: 2 }.cmp(&Ratio { num: 8, den: 1 }),
            Ordering::Equal
        );
    }
}
