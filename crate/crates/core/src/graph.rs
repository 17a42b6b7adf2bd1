//! Reachability and strongly connected components on adjacency lists.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) struct Graph {
    pub succ: Vec<Vec<usize>>,
}

impl Graph {
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.succ.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.succ[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn has_self_loop(&self, v: usize) -> bool {
        self.succ[v].contains(&v)
    }

    /// SCCs of the subgraph induced by `alive` (Tarjan, iterative).
    pub fn sccs(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let n = self.succ.len();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut out = Vec::new();
        let mut next = 0;
        // (node, next successor to inspect)
        let mut frames: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if !alive[root] || index[root] != UNSEEN {
                continue;
            }
            frames.push((root, 0));
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut cursor)) = frames.last_mut() {
                if let Some(&w) = self.succ[v].get(*cursor) {
                    *cursor += 1;
                    if !alive[w] {
                        continue;
                    }
                    if index[w] == UNSEEN {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    out.push(component);
                }
            }
        }
        out
    }

    /// A component contains a cycle unless it is a single node without a
    /// self-loop.
    pub fn is_cyclic(&self, component: &[usize]) -> bool {
        component.len() > 1 || self.has_self_loop(component[0])
    }
}
