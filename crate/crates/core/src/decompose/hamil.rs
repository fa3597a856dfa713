//! Separators in graphs with a known Hamiltonian cycle.

use crate::decompose::constants::{c_hamil1, c_hamil2};
use crate::decompose::outcome::{OutcomeTag, StructuralOutcome};
use crate::decompose::two_paths::oriented_two_paths;
use crate::error::{Error, Result};
use crate::graph::{cycle_reduction_check, CycleCertificate, WeightedGraph};
use crate::{VertexId, VertexSet, Weight};

struct Ring<'a> {
    g: &'a WeightedGraph,
    order: &'a [VertexId],
    pos: Vec<usize>,
}

impl<'a> Ring<'a> {
    fn new(g: &'a WeightedGraph, h: &'a CycleCertificate) -> Result<Self> {
        if !h.is_hamiltonian_in(g) {
            return Err(Error::Precondition("cycle is not Hamiltonian in the graph".into()));
        }
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in h.order().iter().enumerate() {
            pos[v] = i;
        }
        Ok(Ring { g, order: h.order(), pos })
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    /// Offset of `b` after `a` going forward, in `1..=n` (`n` when `a == b`).
    fn gap(&self, a: VertexId, b: VertexId) -> usize {
        let n = self.len();
        let d = (self.pos[b] + n - self.pos[a]) % n;
        if d == 0 {
            n
        } else {
            d
        }
    }

    /// The open interval `(a, b)_H`.
    fn open(&self, a: VertexId, b: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let start = self.pos[a];
        let n = self.len();
        (1..self.gap(a, b)).map(move |d| self.order[(start + d) % n])
    }

    fn open_weight(&self, a: VertexId, b: VertexId) -> Weight {
        self.open(a, b).map(|x| self.g.weight(x)).sum()
    }

    fn covers(&self, (a, b): (VertexId, VertexId), x: VertexId) -> bool {
        let d = self.gap(a, x);
        d < self.gap(a, b) && x != a
    }
}

fn cycle_set(g: &WeightedGraph, s: VertexSet, basis: Weight) -> Result<StructuralOutcome> {
    let cert = cycle_reduction_check(g, &s).ok_or_else(|| Error::Precondition("reduction to the cycle set is not a cycle".into()))?;
    let achieved = g.set_weight_of(&s);
    Ok(StructuralOutcome::new(OutcomeTag::CycleSet, s, achieved, c_hamil1(), basis).with_cycle(cert))
}

/// Either a connected `S` with `w*(H \ S) >= w(G)/5` or a cycle-reduction set
/// of weight at least `w(G)/5`. `achieved` of a separator is measured on `H`.
pub fn hamil_separator(g: &WeightedGraph, h: &CycleCertificate) -> Result<StructuralOutcome> {
    let ring = Ring::new(g, h)?;
    let n = g.vertex_count();
    let total = g.total_weight();
    let c = c_hamil1();
    let threshold = c * total;
    if n <= 3 {
        return cycle_set(g, g.all_vertices(), total);
    }
    let hg = h.as_graph(g);
    for (u, v) in g.edges() {
        let s = VertexSet::from_ids(n, [u, v]);
        let r = hg.w_star_without(&s);
        if r >= threshold {
            return Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, s, r, c, total));
        }
    }

    // orient: cycle edges forward, chords toward the lighter side (ties forward from the lower position)
    let mut arcs: Vec<(VertexId, VertexId)> = (0..n).map(|i| (h.order()[i], h.order()[(i + 1) % n])).collect();
    for (u, v) in g.edges() {
        if ring.gap(u, v) == 1 || ring.gap(v, u) == 1 {
            continue;
        }
        let (wf, wb) = (ring.open_weight(u, v), ring.open_weight(v, u));
        let arc = if wf < wb || (wf == wb && ring.pos[u] < ring.pos[v]) { (u, v) } else { (v, u) };
        debug_assert!(ring.open_weight(arc.0, arc.1) < threshold);
        arcs.push(arc);
    }

    let uncovered = |arcs: &[(VertexId, VertexId)]| {
        VertexSet::from_ids(n, g.vertices().filter(|&x| !arcs.iter().any(|&e| ring.covers(e, x))))
    };
    let mut u_set = uncovered(&arcs);
    if u_set.is_empty() {
        let v = 0;
        for arc in arcs.iter_mut() {
            if ring.covers(*arc, v) {
                arc.1 = v;
            }
        }
        u_set = uncovered(&arcs);
        debug_assert!(u_set.contains(v) && g.set_weight_of(&u_set) < threshold);
    } else if g.set_weight_of(&u_set) >= threshold {
        return cycle_set(g, u_set, total);
    }

    let cycles = split_and_route(&ring, &u_set, &arcs)?;
    let (s0, s1) = (VertexSet::from_ids(n, cycles.0), VertexSet::from_ids(n, cycles.1));
    debug_assert!(g.is_connected_set(&s0) && g.is_connected_set(&s1));
    let s = if g.set_weight_of(&s0) <= g.set_weight_of(&s1) { s0 } else { s1 };
    let achieved = hg.w_star_without(&s);
    Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, s, achieved, c, total))
}

/// Splits the ring at the uncovered vertices, finds two disjoint paths in each
/// piece and glues them into two closed walks `C_0`, `C_1`.
fn split_and_route(ring: &Ring, u_set: &VertexSet, arcs: &[(VertexId, VertexId)]) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let n = ring.len();
    let mut cuts: Vec<usize> = u_set.iter().map(|u| ring.pos[u]).collect();
    cuts.sort_unstable();
    let k = cuts.len();
    let mut c0 = Vec::new();
    let mut c1 = Vec::new();
    for i in 0..k {
        let start = cuts[i];
        let len = if k == 1 { n + 1 } else { (cuts[(i + 1) % k] + n - start) % n + 1 };
        let head = ring.order[start];
        let mut local = Vec::new();
        for &(a, b) in arcs {
            let ta = (ring.pos[a] + n - start) % n;
            if ta >= len - 1 {
                continue;
            }
            let mut hb = (ring.pos[b] + n - start) % n;
            if hb == 0 {
                hb = n;
            }
            if hb > len - 1 {
                return Err(Error::Precondition(format!("arc {a}->{b} crosses an uncovered vertex")));
            }
            if hb > ta + 1 {
                local.push((ta, hb));
            }
        }
        let (q0, q1) = oriented_two_paths(len, &local)?;
        let to_vertex = |p: usize| ring.order[(start + p) % n];
        debug_assert_eq!(to_vertex(0), head);
        c0.extend(q0[..q0.len() - 1].iter().map(|&p| to_vertex(p)));
        c1.extend(q1[..q1.len() - 1].iter().map(|&p| to_vertex(p)));
    }
    Ok((c0, c1))
}

/// A block `[f_i, u_i)` of the growth construction, as positions along `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowBlock {
    pub vertices: Vec<VertexId>,
    pub first: VertexId,
    pub stop: VertexId,
    /// 0 or 1.
    pub family: u8,
}

/// The blocks `B_1, ..., B_n` of `V \ A` and their families. `P` follows the
/// cycle order and ends at the lowest-id vertex of `A`.
pub fn grow_blocks(g: &WeightedGraph, h: &CycleCertificate, a: &VertexSet) -> Result<Vec<GrowBlock>> {
    let ring = Ring::new(g, h)?;
    let n = g.vertex_count();
    let a0 = a.first().ok_or_else(|| Error::Precondition("A must be non-empty".into()))?;
    let path: Vec<VertexId> = (1..=n).map(|d| ring.order[(ring.pos[a0] + d) % n]).collect();
    let na = g.closed_set_neighborhood(a);
    let mut done = a.clone();
    let mut blocks: Vec<GrowBlock> = Vec::new();
    let mut fam1 = VertexSet::new(n);
    let mut p = 0;
    while p < n {
        if done.contains(path[p]) {
            p += 1;
            continue;
        }
        let reach = g.closed_set_neighborhood(&done);
        let f = p;
        let mut q = f + 1;
        while !reach.contains(path[q]) {
            q += 1;
        }
        let stop = path[q];
        let family = if na.contains(stop) || g.neighbors(stop).intersects(&fam1) { 0 } else { 1 };
        let vertices = path[f..q].to_vec();
        for &x in &vertices {
            done.insert(x);
            if family == 1 {
                fam1.insert(x);
            }
        }
        blocks.push(GrowBlock { vertices, first: path[f], stop, family });
        p = q;
    }
    Ok(blocks)
}

/// For connected `A`: a connected `S ⊇ A` with `w*(G \ S) >= w*(H \ A)/5`
/// (separator) or with `w(N(S)) >= w*(H \ A)/5` (neighborhood set).
pub fn hamil_grow(g: &WeightedGraph, h: &CycleCertificate, a: &VertexSet) -> Result<StructuralOutcome> {
    if a.is_empty() || !g.is_connected_set(a) {
        return Err(Error::Precondition("A must be connected and non-empty".into()));
    }
    let n = g.vertex_count();
    let c = c_hamil2();
    let hg = h.as_graph(g);
    let basis = hg.w_star_without(a);
    let rest = a.complement();
    if hg.components(&rest).len() <= 1 {
        return Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, a.clone(), g.w_star_without(a), c, basis));
    }
    let threshold = c * basis;
    let blocks = grow_blocks(g, h, a)?;
    let family_union = |k: u8| VertexSet::from_ids(n, blocks.iter().filter(|b| b.family == k).flat_map(|b| b.vertices.iter().copied()));
    let firsts = |k: u8| VertexSet::from_ids(n, blocks.iter().filter(|b| b.family == k).map(|b| b.first));
    let a1 = [a.union(&family_union(1)), a.union(&family_union(0))];
    let f = [firsts(0), firsts(1)];

    for k in 0..2 {
        if g.set_weight_of(&f[k]) >= threshold {
            let nb = g.set_weight_of(&g.set_neighborhood(&a1[k]));
            return Ok(StructuralOutcome::new(OutcomeTag::NeighborhoodSet, a1[k].clone(), nb, c, basis));
        }
    }
    for k in 0..2 {
        let a2 = a1[k].union(&f[k]);
        let r = g.w_star_without(&a2);
        if r >= threshold {
            return Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, a2, r, c, basis));
        }
    }
    let heaviest_tail = |k: u8| {
        let mut best: Option<VertexSet> = None;
        for b in blocks.iter().filter(|b| b.family == k) {
            let tail = VertexSet::from_ids(n, b.vertices[1..].iter().copied());
            if best.as_ref().is_none_or(|x| g.set_weight_of(&tail) > g.set_weight_of(x)) {
                best = Some(tail);
            }
        }
        best.unwrap_or_else(|| VertexSet::new(n))
    };
    let s = heaviest_tail(0).union(&heaviest_tail(1)).complement();
    let r = g.w_star_without(&s);
    Ok(StructuralOutcome::new(OutcomeTag::ConnectedSeparator, s, r, c, basis))
}
