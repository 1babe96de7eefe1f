use std::collections::VecDeque;

use super::{Graph, VertexSet};

/// Up to this many vertices connectivity is found by separator enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Whether `G[within]` is connected (vacuously true for 0 or 1 vertices).
pub fn is_connected(g: &Graph, within: VertexSet) -> bool {
    let Some(start) = within.first() else {
        return true;
    };
    let mut reached = VertexSet::singleton(start);
    let mut frontier = reached;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v));
        }
        frontier = next.intersection(within).difference(reached);
        reached = reached.union(frontier);
    }
    reached == within
}

/// Vertex connectivity: the fewest vertices whose removal disconnects the
/// graph or leaves a single vertex. `K_n` has connectivity `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.n() <= BRUTE_FORCE_LIMIT {
        connectivity_by_separators(g)
    } else {
        vertex_connectivity_menger(g)
    }
}

fn connectivity_by_separators(g: &Graph) -> usize {
    let n = g.n();
    let all = g.vertices();
    for k in 0..n.saturating_sub(1) {
        let mut found = false;
        for_each_subset_of_size(n, k, &mut |s| {
            if !found && !is_connected(g, all.difference(s)) {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    n.saturating_sub(1)
}

fn for_each_subset_of_size(n: usize, k: usize, f: &mut impl FnMut(VertexSet)) {
    fn rec(start: usize, n: usize, k: usize, acc: VertexSet, f: &mut impl FnMut(VertexSet)) {
        if k == 0 {
            f(acc);
            return;
        }
        for v in start..=n - k {
            rec(v + 1, n, k - 1, acc.with(v), f);
        }
    }
    if k <= n {
        rec(0, n, k, VertexSet::EMPTY, f);
    }
}

/// Connectivity through Menger's theorem: the minimum, over non-adjacent
/// pairs, of the number of internally disjoint paths (unit vertex
/// capacities, Even's pair selection).
pub fn vertex_connectivity_menger(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    let mut i = 0;
    while i < n && i <= best {
        for j in 0..n {
            if j != i && !g.adjacent(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Max number of internally vertex-disjoint `s`-`t` paths, stopping at `cap`.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // split node v into v_in = 2v and v_out = 2v + 1
    let size = 2 * n;
    let big = n as i32 + 1;
    let mut residual = vec![0i32; size * size];
    let idx = |a: usize, b: usize| a * size + b;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        residual[idx(2 * v, 2 * v + 1)] = c;
        for u in g.neighbors(v) {
            residual[idx(2 * v + 1, 2 * u)] = big;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut parent = vec![usize::MAX; size];
    while flow < cap {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..size {
                if parent[b] == usize::MAX && residual[idx(a, b)] > 0 {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            residual[idx(a, b)] -= 1;
            residual[idx(b, a)] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}
