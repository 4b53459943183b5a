// SPDX-License-Identifier: Apache-2.0

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::nct::NctCostModel;
use crate::qmodel::{Circuit, CostMetric, Permutation, Topology, FUNCTION_COUNT, LEX_BASE};

/// How the costs stored in a [`SynthesisTable`] were computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CostModel {
    /// Optimal NCV circuits under a linear metric (possibly a lexicographic
    /// scalarization built with [`CostMetric::lexicographic`]).
    Ncv(CostMetric),
    /// Optimal NCT circuits under linear NOT/CNOT/Toffoli weights.
    Nct(NctCostModel),
}

impl CostModel {
    /// The metric NCT circuits are charged in after Toffoli substitution,
    /// when the table was built lexicographically.
    pub fn substitution_metric(&self) -> Option<CostMetric> {
        match self {
            CostModel::Nct(m) => m.substitution(),
            CostModel::Ncv(_) => None,
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostModel::Ncv(m) => write!(f, "{m}"),
            CostModel::Nct(m) => write!(f, "{m}"),
        }
    }
}

/// Splits a lexicographically scalarized cost into (primary, secondary).
pub fn split_lexicographic(cost: u32) -> (u32, u32) {
    (cost / LEX_BASE, cost % LEX_BASE)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Distinct quaternary states inserted into the visited map.
    pub states_seen: usize,
    /// States popped at their final cost and expanded.
    pub states_settled: usize,
}

/// Optimal cost and one witness circuit for each reversible function.
///
/// Records are indexed by [`Permutation::rank`]. Tables loaded from a plain
/// cost listing carry no witnesses.
#[derive(Clone, Debug)]
pub struct SynthesisTable {
    model: CostModel,
    topology: Topology,
    costs: Vec<Option<u32>>,
    witnesses: Vec<Option<Circuit>>,
    stats: SearchStats,
}

/// Search statistics are not part of a table's identity.
impl PartialEq for SynthesisTable {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model
            && self.topology == other.topology
            && self.costs == other.costs
            && self.witnesses == other.witnesses
    }
}

impl Eq for SynthesisTable {}

impl SynthesisTable {
    pub fn new(model: CostModel, topology: Topology) -> SynthesisTable {
        SynthesisTable {
            model,
            topology,
            costs: vec![None; FUNCTION_COUNT],
            witnesses: vec![None; FUNCTION_COUNT],
            stats: SearchStats::default(),
        }
    }

    pub fn insert(&mut self, function: Permutation, cost: u32, witness: Option<Circuit>) {
        let r = function.rank();
        self.costs[r] = Some(cost);
        self.witnesses[r] = witness;
    }

    pub fn model(&self) -> CostModel {
        self.model
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    pub(crate) fn set_stats(&mut self, stats: SearchStats) {
        self.stats = stats;
    }

    pub fn cost(&self, function: &Permutation) -> Option<u32> {
        self.costs[function.rank()]
    }

    pub fn witness(&self, function: &Permutation) -> Option<&Circuit> {
        self.witnesses[function.rank()].as_ref()
    }

    pub fn settled_count(&self) -> usize {
        self.costs.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.costs.iter().all(Option::is_some)
    }

    pub fn has_witnesses(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    /// Settled records in rank order.
    pub fn iter(&self) -> impl Iterator<Item = (Permutation, u32, Option<&Circuit>)> + '_ {
        self.costs
            .iter()
            .zip(&self.witnesses)
            .enumerate()
            .filter_map(|(r, (c, w))| c.map(|c| (Permutation::unrank(r), c, w.as_ref())))
    }

    /// Costs by rank; `None` for unsettled functions.
    pub fn costs(&self) -> &[Option<u32>] {
        &self.costs
    }

    /// Drops witness circuits, keeping only costs.
    pub fn without_witnesses(&self) -> SynthesisTable {
        SynthesisTable {
            witnesses: vec![None; FUNCTION_COUNT],
            ..self.clone()
        }
    }
}
