use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::Zero;
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::StochasticMatrix;

/// A strongly connected component of the transition diagram.
///
/// States are zero-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunicatingClass {
    pub states: Vec<usize>,
    /// No edge leaves the class.
    pub closed: bool,
    /// gcd of cycle lengths inside the class; `None` for a single state without a self-loop.
    pub period: Option<usize>,
    /// Cyclic subclasses `C_0, …, C_{p−1}`: every edge from `C_k` lands in `C_{k+1 mod p}`.
    /// `C_0` holds the smallest state. Empty when the class has no cycle.
    pub cyclic_classes: Vec<Vec<usize>>,
}

impl CommunicatingClass {
    pub fn contains(&self, state: usize) -> bool {
        self.states.binary_search(&state).is_ok()
    }
}

/// Communicating classes of a chain, ordered by their smallest state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStructure {
    n: usize,
    classes: Vec<CommunicatingClass>,
    /// `class_of[s]` is the index of the class containing `s`.
    class_of: Vec<usize>,
}

impl ChainStructure {
    pub fn of(a: &StochasticMatrix) -> Self {
        let m = a.matrix();
        let n = m.rows();
        let mut graph = DiGraph::<(), ()>::with_capacity(n, 0);
        let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
        let successors: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| !m[(i, j)].is_zero()).collect())
            .collect();
        for (i, succ) in successors.iter().enumerate() {
            for &j in succ {
                graph.add_edge(nodes[i], nodes[j], ());
            }
        }

        let mut components: Vec<Vec<usize>> = tarjan_scc(&graph)
            .into_iter()
            .map(|c| {
                let mut states: Vec<usize> = c.into_iter().map(|v| v.index()).collect();
                states.sort_unstable();
                states
            })
            .collect();
        components.sort_unstable_by_key(|c| c[0]);

        let mut class_of = vec![0; n];
        for (k, c) in components.iter().enumerate() {
            for &s in c {
                class_of[s] = k;
            }
        }

        let classes = components
            .into_iter()
            .enumerate()
            .map(|(k, states)| {
                let closed = states.iter().all(|&s| successors[s].iter().all(|&t| class_of[t] == k));
                let (period, cyclic_classes) = cyclic_decomposition(&states, &successors, &class_of, k);
                CommunicatingClass {
                    states,
                    closed,
                    period,
                    cyclic_classes,
                }
            })
            .collect();

        Self { n, classes, class_of }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[CommunicatingClass] {
        &self.classes
    }

    pub fn class_of(&self, state: usize) -> &CommunicatingClass {
        &self.classes[self.class_of[state]]
    }

    pub fn class_index(&self, state: usize) -> usize {
        self.class_of[state]
    }

    pub fn closed_classes(&self) -> impl Iterator<Item = &CommunicatingClass> {
        self.classes.iter().filter(|c| c.closed)
    }

    /// States lying in classes that are not closed.
    pub fn transient_states(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self
            .classes
            .iter()
            .filter(|c| !c.closed)
            .flat_map(|c| c.states.iter().copied())
            .collect();
        t.sort_unstable();
        t
    }

    pub fn has_transients(&self) -> bool {
        self.classes.iter().any(|c| !c.closed)
    }

    pub fn is_irreducible(&self) -> bool {
        self.classes.len() == 1
    }

    /// Every closed class has period 1. For an irreducible chain this is
    /// ordinary aperiodicity.
    pub fn is_aperiodic(&self) -> bool {
        self.closed_classes().all(|c| c.period == Some(1))
    }

    /// Period of an irreducible chain.
    pub fn period(&self) -> Option<usize> {
        if self.is_irreducible() {
            self.classes[0].period
        } else {
            None
        }
    }
}

pub fn chain_structure(a: &StochasticMatrix) -> ChainStructure {
    ChainStructure::of(a)
}

/// BFS levels from the smallest state; the period is the gcd of
/// `level(u) + 1 − level(v)` over the edges `u → v` inside the class, and
/// the cyclic subclasses are the level classes mod the period.
fn cyclic_decomposition(
    states: &[usize],
    successors: &[Vec<usize>],
    class_of: &[usize],
    class: usize,
) -> (Option<usize>, Vec<Vec<usize>>) {
    let root = states[0];
    let mut level = vec![usize::MAX; successors.len()];
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut g: i64 = 0;
    while let Some(u) = queue.pop_front() {
        for &v in &successors[u] {
            if class_of[v] != class {
                continue;
            }
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            } else {
                g = g.gcd(&(level[u] as i64 + 1 - level[v] as i64));
            }
        }
    }
    if g == 0 {
        return (None, Vec::new());
    }
    let p = g as usize;
    let mut cyclic = vec![Vec::new(); p];
    for &s in states {
        cyclic[level[s] % p].push(s);
    }
    (Some(p), cyclic)
}
