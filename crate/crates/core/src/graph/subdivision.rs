//! Topological-minor certificates and an exhaustive search for subdivided cliques.
//!
//! The search is meant for small graphs only: it enumerates branch-vertex sets
//! and then routes the clique edges one by one as internally disjoint paths,
//! backtracking over every simple path. A node budget bounds the work.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::vset::format_ids;
use crate::{VertexId, VertexSet};

pub const DEFAULT_SUBDIVISION_BUDGET: usize = 5_000_000;

/// Branch vertices plus one path per edge of the pattern graph `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub branch: Vec<VertexId>,
    /// `(i, j, path)`: the pattern edge between `branch[i]` and `branch[j]`,
    /// realized by `path` from `branch[i]` to `branch[j]`.
    pub paths: Vec<(usize, usize, Vec<VertexId>)>,
}

impl SubdivisionWitness {
    pub fn pattern_vertex_count(&self) -> usize {
        self.branch.len()
    }

    pub fn pattern_edge_count(&self) -> usize {
        self.paths.len()
    }

    pub fn has_pattern_edge(&self, i: usize, j: usize) -> bool {
        self.paths.iter().any(|&(a, b, _)| (a, b) == (i, j) || (a, b) == (j, i))
    }

    /// Whether the pattern is the complete graph on the branch vertices.
    pub fn is_complete(&self) -> bool {
        let k = self.branch.len();
        self.paths.len() == k * k.saturating_sub(1) / 2
    }

    /// Structural validation against the host graph: distinct branch vertices,
    /// simple paths along host edges with the right endpoints, interiors
    /// avoiding branch vertices and each other, and no repeated pattern edge.
    pub fn validate(&self, g: &WeightedGraph) -> std::result::Result<(), String> {
        let n = g.vertex_count();
        let mut branch_set = VertexSet::new(n);
        for &b in &self.branch {
            if b >= n {
                return Err(format!("branch vertex {b} out of range"));
            }
            if !branch_set.insert(b) {
                return Err(format!("branch vertex {b} repeated"));
            }
        }
        let mut used = VertexSet::new(n);
        let mut seen_pairs = Vec::new();
        for (i, j, path) in &self.paths {
            let (i, j) = (*i, *j);
            if i >= self.branch.len() || j >= self.branch.len() || i == j {
                return Err(format!("bad pattern edge ({i}, {j})"));
            }
            let key = (i.min(j), i.max(j));
            if seen_pairs.contains(&key) {
                return Err(format!("pattern edge ({i}, {j}) realized twice"));
            }
            seen_pairs.push(key);
            if path.len() < 2 || path[0] != self.branch[i] || *path.last().unwrap() != self.branch[j] {
                return Err(format!("path for ({i}, {j}) has wrong endpoints"));
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("path for ({i}, {j}) uses non-edge {}-{}", w[0], w[1]));
                }
            }
            for &x in &path[1..path.len() - 1] {
                if branch_set.contains(x) {
                    return Err(format!("path for ({i}, {j}) passes through branch vertex {x}"));
                }
                if !used.insert(x) {
                    return Err(format!("interior vertex {x} shared between paths"));
                }
            }
        }
        Ok(())
    }

    /// The same witness restricted to host vertices outside `forbidden`.
    pub fn avoids(&self, forbidden: &VertexSet) -> bool {
        self.branch.iter().all(|&b| !forbidden.contains(b))
            && self.paths.iter().all(|(_, _, p)| p.iter().all(|&x| !forbidden.contains(x)))
    }

    pub fn map_ids(&self, f: impl Fn(VertexId) -> VertexId) -> SubdivisionWitness {
        SubdivisionWitness {
            branch: self.branch.iter().map(|&b| f(b)).collect(),
            paths: self.paths.iter().map(|(i, j, p)| (*i, *j, p.iter().map(|&x| f(x)).collect())).collect(),
        }
    }
}

impl fmt::Display for SubdivisionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "branch={}", format_ids(self.branch.iter().copied()))?;
        for (i, j, p) in &self.paths {
            write!(f, " path{}-{}={}", i, j, format_ids(p.iter().copied()))?;
        }
        Ok(())
    }
}

struct Router<'g> {
    g: &'g WeightedGraph,
    budget: usize,
    steps: usize,
}

impl Router<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(Error::BudgetExceeded { what: "subdivision search nodes", budget: self.budget })
        } else {
            Ok(())
        }
    }

    /// Routes `pairs[k..]` using interiors drawn from `free`.
    fn route(
        &mut self,
        pairs: &[(VertexId, VertexId)],
        k: usize,
        free: &mut VertexSet,
        out: &mut Vec<Vec<VertexId>>,
    ) -> Result<bool> {
        if k == pairs.len() {
            return Ok(true);
        }
        let (a, b) = pairs[k];
        let mut path = vec![a];
        self.extend(pairs, k, b, &mut path, free, out)
    }

    fn extend(
        &mut self,
        pairs: &[(VertexId, VertexId)],
        k: usize,
        target: VertexId,
        path: &mut Vec<VertexId>,
        free: &mut VertexSet,
        out: &mut Vec<Vec<VertexId>>,
    ) -> Result<bool> {
        self.tick()?;
        let tail = *path.last().unwrap();
        if path.len() > 1 && self.g.has_edge(tail, target) {
            path.push(target);
            out.push(path.clone());
            if self.route(pairs, k + 1, free, out)? {
                return Ok(true);
            }
            out.pop();
            path.pop();
        }
        let candidates: Vec<VertexId> = self.g.neighbors(tail).intersection(free).to_vec();
        for x in candidates {
            free.remove(x);
            path.push(x);
            if self.extend(pairs, k, target, path, free, out)? {
                return Ok(true);
            }
            path.pop();
            free.insert(x);
        }
        Ok(false)
    }
}

fn combinations(pool: &[VertexId], k: usize, start: usize, cur: &mut Vec<VertexId>, f: &mut dyn FnMut(&[VertexId]) -> Result<bool>) -> Result<bool> {
    if cur.len() == k {
        return f(cur);
    }
    for i in start..pool.len() {
        if pool.len() - i < k - cur.len() {
            break;
        }
        cur.push(pool[i]);
        if combinations(pool, k, i + 1, cur, f)? {
            return Ok(true);
        }
        cur.pop();
    }
    Ok(false)
}

/// Searches `g` for a subdivision of `K_n`. Returns `Ok(None)` only when the
/// search was exhaustive; running past `budget` search nodes is an error.
pub fn find_subdivision(g: &WeightedGraph, n: usize, budget: usize) -> Result<Option<SubdivisionWitness>> {
    if n == 0 {
        return Err(Error::Precondition("K_0 has no vertices".into()));
    }
    let pool: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) + 1 >= n).collect();
    if pool.len() < n {
        return Ok(None);
    }
    let mut router = Router { g, budget, steps: 0 };
    let mut found = None;
    combinations(&pool, n, 0, &mut Vec::new(), &mut |branch| {
        let mut direct = Vec::new();
        let mut routed = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(branch[i], branch[j]) {
                    direct.push((i, j));
                } else {
                    routed.push((i, j));
                }
            }
        }
        let mut free = g.all_vertices();
        for &b in branch {
            free.remove(b);
        }
        let pairs: Vec<_> = routed.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
        let mut out = Vec::new();
        if router.route(&pairs, 0, &mut free, &mut out)? {
            let mut paths: Vec<_> = direct.iter().map(|&(i, j)| (i, j, vec![branch[i], branch[j]])).collect();
            paths.extend(routed.iter().zip(out).map(|(&(i, j), p)| (i, j, p)));
            paths.sort_by_key(|&(i, j, _)| (i, j));
            found = Some(SubdivisionWitness { branch: branch.to_vec(), paths });
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(found)
}
