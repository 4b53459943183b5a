// SPDX-License-Identifier: Apache-2.0

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::qmodel::{CircuitState, CostMetric, Gate, Permutation, Topology};

/// Minimal costs of every function reachable within `max_cost`, found by
/// label-correcting relaxation over all legal gate sequences.
///
/// No pruning rule is applied and nodes are relaxed in arbitrary order until
/// a fixpoint, so this is independent of the bucketed search it is used to
/// check. Only practical for small `max_cost`.
pub fn exhaustive_oracle(
    metric: CostMetric,
    topology: Topology,
    max_cost: u32,
) -> BTreeMap<Permutation, u32> {
    let gates: Vec<Gate> = Gate::ncv_library()
        .into_iter()
        .filter(|g| g.fits(topology))
        .collect();
    let mut best: HashMap<u64, u32> = HashMap::new();
    best.insert(CircuitState::IDENTITY.key(), 0);
    let mut frontier = alloc::vec![CircuitState::IDENTITY];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for state in frontier {
            let cost = best[&state.key()];
            for &g in &gates {
                let Ok(n) = state.apply(g) else { continue };
                let c = cost + metric.weight(g.kind());
                if c > max_cost {
                    continue;
                }
                let improved = best.get(&n.key()).is_none_or(|&old| c < old);
                if improved {
                    best.insert(n.key(), c);
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    best.into_iter()
        .filter_map(|(k, c)| {
            let s = CircuitState::from_key(k).ok()?;
            Some((s.to_permutation()?, c))
        })
        .collect()
}
