// SPDX-License-Identifier: Apache-2.0

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Monotone bucket priority queue keyed by integer cost.
///
/// Items pushed at the cost currently being drained land in the active
/// bucket and are popped before any costlier bucket is opened, so zero-weight
/// edges are handled without special casing. Pushing below the active cost
/// is a logic error.
#[derive(Debug)]
pub struct BucketQueue<T> {
    active_cost: u32,
    active: Vec<T>,
    pending: BTreeMap<u32, Vec<T>>,
    len: usize,
}

impl<T> Default for BucketQueue<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> BucketQueue<T> {
    pub fn new() -> Self {
        BucketQueue {
            active_cost: 0,
            active: Vec::new(),
            pending: BTreeMap::new(),
            len: 0,
        }
    }

    pub fn push(&mut self, cost: u32, item: T) {
        debug_assert!(cost >= self.active_cost, "bucket queue is monotone");
        if cost == self.active_cost {
            self.active.push(item);
        } else {
            self.pending.entry(cost).or_default().push(item);
        }
        self.len += 1;
    }

    pub fn pop(&mut self) -> Option<(u32, T)> {
        loop {
            if let Some(item) = self.active.pop() {
                self.len -= 1;
                return Some((self.active_cost, item));
            }
            let (cost, bucket) = self.pending.pop_first()?;
            self.active_cost = cost;
            self.active = bucket;
        }
    }

    /// Cost of the bucket being drained.
    pub fn current_cost(&self) -> u32 {
        self.active_cost
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_in_cost_order() {
        let mut q = BucketQueue::new();
        q.push(5, 'a');
        q.push(0, 'b');
        q.push(3, 'c');
        q.push(5, 'd');
        let mut costs = alloc::vec![];
        while let Some((c, _)) = q.pop() {
            costs.push(c);
        }
        assert_eq!(costs, [0, 3, 5, 5]);
        assert!(q.is_empty());
    }

    #[test]
    fn zero_weight_reinsertion_stays_in_bucket() {
        let mut q = BucketQueue::new();
        q.push(2, 1);
        q.push(4, 9);
        let (c, _) = q.pop().unwrap();
        assert_eq!(c, 2);
        q.push(2, 2);
        q.push(3, 3);
        assert_eq!(q.pop(), Some((2, 2)));
        assert_eq!(q.pop(), Some((3, 3)));
        assert_eq!(q.pop(), Some((4, 9)));
        assert_eq!(q.pop(), None);
    }
}
