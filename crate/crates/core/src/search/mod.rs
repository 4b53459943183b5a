// SPDX-License-Identifier: Apache-2.0

//! Uniform-cost search over quaternary circuit states.
//!
//! States are expanded in nondecreasing cost order from a [`BucketQueue`],
//! so a state is final the first time it is popped at its recorded cost.
//! The visited map stores, per packed state, its best cost, how it was
//! reached and the placement of the last gate on that path; circuits are
//! rebuilt backwards by undoing the arriving gate, which needs no stored
//! predecessor key.

mod bucket;
mod oracle;
mod table;

use alloc::vec::Vec;

use hashbrown::hash_map::Entry;
use hashbrown::HashMap;

pub use bucket::BucketQueue;
pub use oracle::exhaustive_oracle;
pub use table::{split_lexicographic, CostModel, SearchStats, SynthesisTable};

use crate::qmodel::{
    Circuit, CircuitState, CostMetric, Gate, GateKind, LinePermutation, Permutation, Placement,
    Topology, FUNCTION_COUNT,
};
use crate::Error;

/// Pruning switches and resource ceilings for one search run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Never follow a gate with another gate on the same placement.
    pub prune_repeat_placement: bool,
    /// Never apply a controlled-V⁺ to a fully Boolean state.
    pub prune_leading_v_dag: bool,
    /// Settling a Boolean state also settles its line relabelings that
    /// preserve the topology.
    pub relabel_closure: bool,
    /// Settling `f` also settles `f⁻¹` with the inverted circuit.
    pub inverse_closure: bool,
    /// Give up on paths costlier than this.
    pub cost_ceiling: Option<u32>,
    /// Give up once this many distinct states have been stored.
    pub max_states: Option<usize>,
    /// Initial visited-map capacity.
    pub capacity_hint: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune_repeat_placement: true,
            prune_leading_v_dag: true,
            relabel_closure: true,
            inverse_closure: false,
            cost_ceiling: None,
            max_states: None,
            capacity_hint: 1 << 16,
        }
    }
}

impl SearchOptions {
    /// No pruning, no closures.
    pub fn unpruned() -> Self {
        SearchOptions {
            prune_repeat_placement: false,
            prune_leading_v_dag: false,
            relabel_closure: false,
            inverse_closure: false,
            ..Self::default()
        }
    }
}

/// The NCV gates whose line pairs are allowed, in canonical order.
pub fn enumerate_gates(topology: Topology) -> Vec<Gate> {
    Gate::ncv_library()
        .into_iter()
        .filter(|g| g.fits(topology))
        .collect()
}

// Visited-map value layout.
const COST_MASK: u64 = 0xFFFF_FFFF;
const ARRIVAL_SHIFT: u32 = 32;
const PLACEMENT_SHIFT: u32 = 40;
const SETTLED: u64 = 1 << 48;

// Arrival codes: 0..21 index the canonical NCV library.
const ARRIVAL_RELABEL: u8 = 32;
const ARRIVAL_INVERSE: u8 = 64;
const ARRIVAL_ROOT: u8 = 255;
const NO_PLACEMENT: u8 = 15;

#[inline]
fn pack(cost: u32, arrival: u8, placement: u8) -> u64 {
    u64::from(cost) | u64::from(arrival) << ARRIVAL_SHIFT | u64::from(placement) << PLACEMENT_SHIFT
}

#[inline]
fn cost_of(v: u64) -> u32 {
    (v & COST_MASK) as u32
}

#[inline]
fn arrival_of(v: u64) -> u8 {
    (v >> ARRIVAL_SHIFT) as u8
}

#[inline]
fn placement_of(v: u64) -> u8 {
    ((v >> PLACEMENT_SHIFT) & 0xF) as u8
}

#[derive(Clone, Copy)]
struct Edge {
    gate: Gate,
    weight: u32,
    arrival: u8,
    placement: u8,
    is_v_dag: bool,
}

/// One uniform-cost search run; keeps its visited map for reconstruction.
pub struct Search {
    metric: CostMetric,
    topology: Topology,
    options: SearchOptions,
    edges: Vec<Edge>,
    symmetries: Vec<LinePermutation>,
    library: [Gate; 21],
    visited: HashMap<u64, u64>,
    queue: BucketQueue<u64>,
    boolean_settled: usize,
    states_settled: usize,
    truncated: bool,
    finished: bool,
}

impl Search {
    pub fn new(
        metric: CostMetric,
        topology: Topology,
        options: SearchOptions,
    ) -> Result<Search, Error> {
        if !topology.is_connected() {
            return Err(Error::DisconnectedTopology);
        }
        let library = Gate::ncv_library();
        let mut edges: Vec<Edge> = library
            .iter()
            .enumerate()
            .filter(|(_, g)| g.fits(topology))
            .map(|(i, g)| Edge {
                gate: *g,
                weight: metric.weight(g.kind()),
                arrival: i as u8,
                placement: g.placement().index() as u8,
                is_v_dag: g.kind() == GateKind::VDag,
            })
            .collect();
        // Cheaper gates first; the sort is stable, so canonical order breaks ties.
        edges.sort_by_key(|e| e.weight);
        let symmetries = topology.symmetries().filter(|p| !p.is_identity()).collect();
        let mut visited = HashMap::with_capacity(options.capacity_hint);
        let root = CircuitState::IDENTITY.key();
        visited.insert(root, pack(0, ARRIVAL_ROOT, NO_PLACEMENT));
        let mut queue = BucketQueue::new();
        queue.push(0, root);
        Ok(Search {
            metric,
            topology,
            options,
            edges,
            symmetries,
            library,
            visited,
            queue,
            boolean_settled: 0,
            states_settled: 0,
            truncated: false,
            finished: false,
        })
    }

    pub fn metric(&self) -> CostMetric {
        self.metric
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            states_seen: self.visited.len(),
            states_settled: self.states_settled,
        }
    }

    /// Number of reversible functions settled so far.
    pub fn functions_settled(&self) -> usize {
        self.boolean_settled
    }

    /// Final cost of a state, if it has been settled.
    pub fn settled_cost(&self, state: CircuitState) -> Option<u32> {
        self.visited
            .get(&state.key())
            .filter(|v| *v & SETTLED != 0)
            .map(|v| cost_of(*v))
    }

    /// Runs until every reversible function is settled.
    pub fn run_to_completion(&mut self) -> Result<(), Error> {
        self.run_until(|_| false)
    }

    /// Runs until `stop` returns true for a freshly settled Boolean state, or
    /// every reversible function is settled.
    pub fn run_until(&mut self, mut stop: impl FnMut(CircuitState) -> bool) -> Result<(), Error> {
        if self.finished {
            return Ok(());
        }
        while let Some((cost, key)) = self.queue.pop() {
            let value = match self.visited.get_mut(&key) {
                Some(v) if *v & SETTLED == 0 && cost_of(*v) == cost => {
                    *v |= SETTLED;
                    *v
                }
                _ => continue,
            };
            self.states_settled += 1;
            let state = CircuitState::from_key(key)?;
            let boolean = state.is_boolean();
            if boolean {
                self.boolean_settled += 1;
                if self.boolean_settled == FUNCTION_COUNT {
                    self.finished = true;
                    return Ok(());
                }
                if self.options.relabel_closure {
                    self.settle_relabelings(state, cost, placement_of(value));
                }
                if self.options.inverse_closure {
                    self.settle_inverse(state, cost)?;
                }
            }
            self.expand(state, cost, placement_of(value), boolean)?;
            if boolean && stop(state) {
                return Ok(());
            }
        }
        if self.truncated {
            Err(Error::BudgetExceeded {
                settled: self.boolean_settled,
                states: self.visited.len(),
            })
        } else {
            Err(Error::Unreachable {
                settled: self.boolean_settled,
            })
        }
    }

    fn expand(
        &mut self,
        state: CircuitState,
        cost: u32,
        last: u8,
        boolean: bool,
    ) -> Result<(), Error> {
        for i in 0..self.edges.len() {
            let edge = self.edges[i];
            if self.options.prune_repeat_placement && edge.placement == last {
                continue;
            }
            if self.options.prune_leading_v_dag && boolean && edge.is_v_dag {
                continue;
            }
            let Ok(next) = state.apply(edge.gate) else {
                continue;
            };
            let next_cost = cost + edge.weight;
            if self.options.cost_ceiling.is_some_and(|c| next_cost > c) {
                self.truncated = true;
                continue;
            }
            self.offer(next, next_cost, edge.arrival, edge.placement);
        }
        if let Some(max) = self.options.max_states {
            if self.visited.len() > max {
                return Err(Error::BudgetExceeded {
                    settled: self.boolean_settled,
                    states: self.visited.len(),
                });
            }
        }
        Ok(())
    }

    #[inline]
    fn offer(&mut self, next: CircuitState, cost: u32, arrival: u8, placement: u8) {
        let value = pack(cost, arrival, placement);
        match self.visited.entry(next.key()) {
            Entry::Vacant(slot) => {
                assert!(
                    next.projection_is_permutation(),
                    "Boolean projection of {next:?} is not a permutation"
                );
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                let old = *slot.get();
                if old & SETTLED != 0 || cost_of(old) <= cost {
                    return;
                }
                slot.insert(value);
            }
        }
        self.queue.push(cost, next.key());
    }

    fn settle_relabelings(&mut self, state: CircuitState, cost: u32, last: u8) {
        for k in 0..self.symmetries.len() {
            let perm = self.symmetries[k];
            let placement = Placement::from_index(last as usize)
                .map_or(NO_PLACEMENT, |p| p.relabel(perm).index() as u8);
            self.offer(
                state.relabel(perm),
                cost,
                ARRIVAL_RELABEL + perm.index() as u8,
                placement,
            );
        }
    }

    fn settle_inverse(&mut self, state: CircuitState, cost: u32) -> Result<(), Error> {
        let function = state
            .to_permutation()
            .ok_or(Error::UnknownState(state.key()))?;
        let inverse = CircuitState::from_permutation(&function.inverse());
        if inverse == state {
            return Ok(());
        }
        let circuit = self.reconstruct(state)?;
        // The inverted circuit ends with the inverse of our first gate.
        let placement = circuit
            .gates()
            .first()
            .map_or(NO_PLACEMENT, |g| g.placement().index() as u8);
        self.offer(inverse, cost, ARRIVAL_INVERSE, placement);
        Ok(())
    }

    /// Rebuilds the stored best circuit reaching `state`.
    pub fn reconstruct(&self, state: CircuitState) -> Result<Circuit, Error> {
        let mut tail = Vec::new();
        let mut cur = state;
        let prefix: Vec<Gate> = loop {
            let value = *self
                .visited
                .get(&cur.key())
                .ok_or(Error::UnknownState(state.key()))?;
            match arrival_of(value) {
                ARRIVAL_ROOT => break Vec::new(),
                a if (a as usize) < self.library.len() => {
                    let gate = self.library[a as usize];
                    tail.push(gate);
                    cur = cur
                        .apply(gate.inverse())
                        .expect("undoing a recorded gate keeps its control Boolean");
                }
                ARRIVAL_INVERSE => {
                    let function = cur.to_permutation().ok_or(Error::UnknownState(cur.key()))?;
                    let source = CircuitState::from_permutation(&function.inverse());
                    break self.reconstruct(source)?.inverse().into_gates();
                }
                a => {
                    let perm = LinePermutation::ALL[(a - ARRIVAL_RELABEL) as usize];
                    let source = cur.relabel(perm.inverse());
                    let base = self.reconstruct(source)?;
                    break base.gates().iter().map(|g| g.relabel(perm)).collect();
                }
            }
        };
        let mut gates = prefix;
        gates.extend(tail.into_iter().rev());
        Ok(Circuit::ncv(gates))
    }

    /// Collects the settled reversible functions with their witnesses.
    pub fn into_table(self) -> Result<SynthesisTable, Error> {
        let mut table = SynthesisTable::new(CostModel::Ncv(self.metric), self.topology);
        for function in Permutation::all() {
            let state = CircuitState::from_permutation(&function);
            if let Some(cost) = self.settled_cost(state) {
                table.insert(function, cost, Some(self.reconstruct(state)?));
            }
        }
        table.set_stats(self.stats());
        Ok(table)
    }
}

/// Settles every reversible function under `metric` and `topology`.
pub fn settle_all(
    metric: CostMetric,
    topology: Topology,
    options: &SearchOptions,
) -> Result<SynthesisTable, Error> {
    let mut search = Search::new(metric, topology, *options)?;
    search.run_to_completion()?;
    search.into_table()
}

/// Optimal cost and circuit for one function; stops as soon as it settles.
pub fn synthesize_one(
    function: &[u8],
    metric: CostMetric,
    topology: Topology,
    options: &SearchOptions,
) -> Result<(u32, Circuit), Error> {
    let function = Permutation::from_slice(function)?;
    let target = CircuitState::from_permutation(&function);
    let mut search = Search::new(metric, topology, *options)?;
    search.run_until(|s| s == target)?;
    let cost = search
        .settled_cost(target)
        .ok_or(Error::UnknownState(target.key()))?;
    Ok((cost, search.reconstruct(target)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmodel::Line::*;

    #[test]
    fn gate_counts_per_topology() {
        assert_eq!(enumerate_gates(Topology::FULL).len(), 21);
        assert_eq!(enumerate_gates(Topology::PATH).len(), 15);
        assert_eq!(
            enumerate_gates(Topology::NONE),
            [Gate::not(A), Gate::not(B), Gate::not(C)]
        );
    }

    #[test]
    fn disconnected_topology_rejected() {
        assert_eq!(
            Search::new(
                CostMetric::NCV_111,
                Topology::NONE,
                SearchOptions::default()
            )
            .err(),
            Some(Error::DisconnectedTopology)
        );
    }

    #[test]
    fn reconstruct_root_and_single_gate() {
        let mut s = Search::new(
            CostMetric::NCV_111,
            Topology::FULL,
            SearchOptions::default(),
        )
        .unwrap();
        assert!(s.reconstruct(CircuitState::IDENTITY).unwrap().is_empty());
        let not_a = CircuitState::IDENTITY.apply(Gate::not(A)).unwrap();
        s.run_until(|st| st == not_a).unwrap();
        assert_eq!(s.reconstruct(not_a).unwrap().gates(), &[Gate::not(A)]);
        let never = CircuitState::from_key(0).unwrap();
        assert_eq!(s.reconstruct(never), Err(Error::UnknownState(0)));
    }

    #[test]
    fn identity_costs_nothing() {
        let (cost, c) = synthesize_one(
            &[0, 1, 2, 3, 4, 5, 6, 7],
            CostMetric::NCV_111,
            Topology::FULL,
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(cost, 0);
        assert!(c.is_empty());
    }

    #[test]
    fn invalid_function() {
        let r = synthesize_one(
            &[0, 0, 1, 2, 3, 4, 5, 6],
            CostMetric::NCV_111,
            Topology::FULL,
            &SearchOptions::default(),
        );
        assert_eq!(r.err(), Some(Error::InvalidFunction));
    }

    #[test]
    fn ceiling_reports_budget() {
        let opts = SearchOptions {
            cost_ceiling: Some(3),
            ..SearchOptions::default()
        };
        let r = settle_all(CostMetric::NCV_111, Topology::FULL, &opts);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
        let opts = SearchOptions {
            max_states: Some(1000),
            ..SearchOptions::default()
        };
        let r = settle_all(CostMetric::NCV_111, Topology::FULL, &opts);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }
}
