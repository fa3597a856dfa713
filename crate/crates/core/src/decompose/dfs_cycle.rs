//! A cycle whose removal leaves only light components, from a DFS tree and a
//! weighted centroid.

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, WeightedGraph};
use crate::{VertexId, VertexSet, Weight};

struct Dfs {
    parent: Vec<Option<VertexId>>,
    depth: Vec<usize>,
    order: Vec<VertexId>,
}

fn dfs(g: &WeightedGraph, root: VertexId) -> Dfs {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    // explicit stack of (vertex, next neighbour candidates)
    let mut stack: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    seen.insert(root);
    order.push(root);
    stack.push((root, g.neighbors(root).iter().collect::<Vec<_>>().into_iter().rev().collect()));
    while let Some((v, pending)) = stack.last_mut() {
        let v = *v;
        match pending.pop() {
            Some(u) if !seen.contains(u) => {
                seen.insert(u);
                parent[u] = Some(v);
                depth[u] = depth[v] + 1;
                order.push(u);
                stack.push((u, g.neighbors(u).iter().collect::<Vec<_>>().into_iter().rev().collect()));
            }
            Some(_) => {}
            None => {
                stack.pop();
            }
        }
    }
    Dfs { parent, depth, order }
}

/// Cycle `H` (possibly of length 1) such that every component of `G \ V(H)`
/// weighs at most `w(G)/2`. DFS from vertex 0, neighbours in increasing order.
pub fn dfs_cycle(g: &WeightedGraph) -> Result<CycleCertificate> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected and non-empty".into()));
    }
    let r = 0;
    let t = dfs(g, r);
    let mut sub = g.weights().to_vec();
    for &v in t.order.iter().rev() {
        if let Some(p) = t.parent[v] {
            let w = sub[v];
            sub[p] += w;
        }
    }
    let total = g.total_weight();

    // walk from the root towards the heavy side
    let mut v = r;
    while let Some(c) = g.neighbors(v).iter().find(|&c| t.parent[c] == Some(v) && sub[c] > total.half()) {
        v = c;
    }
    if v == r {
        return CycleCertificate::new(vec![r]);
    }

    let mut below = VertexSet::new(n);
    for &x in &t.order {
        if x != v && t.parent[x].is_some_and(|p| p == v || below.contains(p)) {
            below.insert(x);
        }
    }
    // cross edges between the root side and the subtrees of v
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for (a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if x != v && !below.contains(x) && below.contains(y) {
                let key = (t.depth[x], x, y);
                if best.is_none_or(|cur| key < cur) {
                    best = Some(key);
                }
            }
        }
    }
    let Some((_, x, y)) = best else {
        return CycleCertificate::new(vec![v]);
    };
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = t.parent[cur].expect("x is an ancestor of y");
        path.push(cur);
    }
    path.reverse();
    CycleCertificate::new(path)
}

/// Heaviest component weight of `G \ V(H)`.
pub fn heaviest_outside(g: &WeightedGraph, h: &CycleCertificate) -> Weight {
    let rest = h.vertex_set(g.vertex_count()).complement();
    g.heaviest_component(&rest).map_or(Weight::ZERO, |(_, w)| w)
}
