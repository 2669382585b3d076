use std::collections::VecDeque;

use super::{Assembly, Dir, ModelError, Pos, StrengthFunction};

/// Exhaustive cut enumeration is used up to this many tiles; larger
/// assemblies go through max-flow.
pub const EXHAUSTIVE_CUT_LIMIT: usize = 20;

/// Weighted grid graph over the domain of an assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingGraph {
    pub vertices: Vec<Pos>,
    /// `(i, j, weight)` with `i < j` indexing into `vertices`.
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn binding_graph(a: &Assembly, g: &StrengthFunction) -> BindingGraph {
    let vertices: Vec<Pos> = a.positions().collect();
    let index = |p: Pos| vertices.binary_search(&p).ok();
    let mut edges = Vec::new();
    for (i, &(x, y)) in vertices.iter().enumerate() {
        let tile = a.get((x, y)).expect("vertex placed");
        // Each undirected edge once: look east and north only.
        for dir in [Dir::E, Dir::N] {
            let (dx, dy) = dir.offset();
            let q = (x + dx, y + dy);
            if let (Some(j), Some(other)) = (index(q), a.get(q)) {
                let w = g.bond(tile, dir, other);
                if w > 0 {
                    edges.push((i.min(j), i.max(j), w));
                }
            }
        }
    }
    BindingGraph { vertices, edges }
}

/// Minimum weight over all cuts of the graph; `None` for a single vertex.
pub fn min_cut_weight(graph: &BindingGraph) -> Option<u64> {
    let n = graph.vertices.len();
    if n < 2 {
        return None;
    }
    if n <= EXHAUSTIVE_CUT_LIMIT {
        Some(min_cut_exhaustive(n, &graph.edges))
    } else {
        Some(min_cut_flow(n, &graph.edges))
    }
}

pub fn is_tau_stable(a: &Assembly, g: &StrengthFunction, tau: u32) -> Result<bool, ModelError> {
    if a.is_empty() {
        return Err(ModelError::EmptyAssembly);
    }
    Ok(match min_cut_weight(&binding_graph(a, g)) {
        None => true,
        Some(w) => w >= u64::from(tau),
    })
}

/// Vertex 0 is fixed on one side, so each cut is visited once.
fn min_cut_exhaustive(n: usize, edges: &[(usize, usize, u32)]) -> u64 {
    let mut best = u64::MAX;
    for mask in 0u32..(1u32 << (n - 1)) {
        let side = |v: usize| v == 0 || (mask >> (v - 1)) & 1 == 1;
        if (1..n).all(side) {
            continue;
        }
        let w: u64 = edges
            .iter()
            .filter(|&&(i, j, _)| side(i) != side(j))
            .map(|&(_, _, w)| u64::from(w))
            .sum();
        best = best.min(w);
    }
    best
}

/// Global min cut as the minimum over s-t max-flows from vertex 0.
fn min_cut_flow(n: usize, edges: &[(usize, usize, u32)]) -> u64 {
    (1..n).map(|t| max_flow(n, edges, 0, t)).min().unwrap_or(0)
}

fn max_flow(n: usize, edges: &[(usize, usize, u32)], s: usize, t: usize) -> u64 {
    // Residual graph with paired arcs; undirected edges get capacity both ways.
    let mut head = vec![usize::MAX; n];
    let mut to = Vec::new();
    let mut cap: Vec<u64> = Vec::new();
    let mut next = Vec::new();
    let mut add = |u: usize, v: usize, c: u64, head: &mut Vec<usize>| {
        to.push(v);
        cap.push(c);
        next.push(head[u]);
        head[u] = to.len() - 1;
    };
    for &(i, j, w) in edges {
        add(i, j, u64::from(w), &mut head);
        add(j, i, u64::from(w), &mut head);
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let mut e = head[u];
            while e != usize::MAX {
                let v = to[e];
                if !seen[v] && cap[e] > 0 {
                    seen[v] = true;
                    prev[v] = e;
                    queue.push_back(v);
                }
                e = next[e];
            }
        }
        if !seen[t] {
            return flow;
        }
        let mut bottleneck = u64::MAX;
        let mut v = t;
        while v != s {
            let e = prev[v];
            bottleneck = bottleneck.min(cap[e]);
            v = to[e ^ 1];
        }
        let mut v = t;
        while v != s {
            let e = prev[v];
            cap[e] -= bottleneck;
            cap[e ^ 1] += bottleneck;
            v = to[e ^ 1];
        }
        flow += bottleneck;
    }
}
