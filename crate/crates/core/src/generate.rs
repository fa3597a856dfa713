//! Adversarial families and seeded random instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, WeightedGraph};
use crate::{VertexId, VertexSet, Weight};

pub const DEFAULT_ODD_CAP: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spine {
    Path,
    Star,
}

/// `G_n`: leaves `a_i = i` of weight 1 hanging from `b_i = n + i` of weight 0;
/// the `b` vertices form a path or a star centred at `b_0`.
pub fn hedgehog(n: usize, spine: Spine) -> Result<WeightedGraph> {
    if n == 0 {
        return Err(Error::Precondition("hedgehog needs n >= 1".into()));
    }
    let mut w = vec![1; n];
    w.extend(std::iter::repeat_n(0, n));
    let mut edges: Vec<_> = (0..n).map(|i| (i, n + i)).collect();
    for i in 1..n {
        edges.push(match spine {
            Spine::Path => (n + i - 1, n + i),
            Spine::Star => (n, n + i),
        });
    }
    WeightedGraph::from_int_weights(&w, &edges)
}

/// `H_n`: `a_i = i`, `b_i = n + i`, and `c_X = 2n + X - 1` for every non-empty
/// `X ⊆ [n]` given as a bitmask. Only the `a_i` carry weight (1).
pub fn odd_construction(n: usize) -> Result<WeightedGraph> {
    odd_construction_with_cap(n, DEFAULT_ODD_CAP)
}

pub fn odd_construction_with_cap(n: usize, cap: usize) -> Result<WeightedGraph> {
    if n == 0 {
        return Err(Error::Precondition("odd construction needs n >= 1".into()));
    }
    if n > cap {
        return Err(Error::TooLarge(2 * n + (1 << n) - 1, 2 * cap + (1 << cap) - 1));
    }
    let count = 2 * n + (1usize << n) - 1;
    let mut w = vec![0; count];
    w[..n].fill(1);
    let mut edges: Vec<_> = (0..n).map(|i| (i, n + i)).collect();
    for mask in 1usize..(1 << n) {
        for i in 0..n {
            if mask >> i & 1 == 1 {
                edges.push((n + i, 2 * n + mask - 1));
            }
        }
    }
    WeightedGraph::from_int_weights(&w, &edges)
}

/// Replaces each listed edge by a path through `count` new zero-weight
/// vertices (appended after the existing ids, in list order). Counts must be
/// even and both endpoints must have weight zero.
pub fn subdivide_even(g: &WeightedGraph, counts: &[((VertexId, VertexId), usize)]) -> Result<WeightedGraph> {
    let mut weights = g.weights().to_vec();
    let mut removed = Vec::new();
    let mut added = Vec::new();
    for &((u, v), k) in counts {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v, "not an edge of the graph"));
        }
        if k % 2 == 1 {
            return Err(Error::Precondition(format!("edge {u}-{v} subdivided an odd number of times")));
        }
        if !g.weight(u).is_zero() || !g.weight(v).is_zero() {
            return Err(Error::Precondition(format!("edge {u}-{v} has a positive-weight endpoint")));
        }
        if k == 0 {
            continue;
        }
        if removed.contains(&(u.min(v), u.max(v))) {
            return Err(Error::InvalidEdge(u, v, "listed twice"));
        }
        removed.push((u.min(v), u.max(v)));
        let mut prev = u;
        for _ in 0..k {
            weights.push(Weight::ZERO);
            let x = weights.len() - 1;
            added.push((prev, x));
            prev = x;
        }
        added.push((prev, v));
    }
    let mut edges: Vec<_> = g.edges().filter(|e| !removed.contains(e)).collect();
    edges.extend(added);
    WeightedGraph::from_edges(weights, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

#[derive(Clone, Debug)]
pub struct RandomSpec {
    pub size: usize,
    /// Probability of each non-tree pair becoming an edge.
    pub edge_prob: f64,
    /// Integer weights are drawn from `1..=max_weight`, or 0 with `zero_prob`.
    pub max_weight: u64,
    pub zero_prob: f64,
    pub parity: Parity,
    /// Only a sparse set of vertices may carry weight.
    pub sparse_weights: bool,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(size: usize, seed: u64) -> Self {
        RandomSpec { size, edge_prob: 0.2, max_weight: 8, zero_prob: 0.2, parity: Parity::Any, sparse_weights: false, seed }
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn edge_prob(mut self, p: f64) -> Self {
        self.edge_prob = p;
        self
    }

    pub fn zero_prob(mut self, p: f64) -> Self {
        self.zero_prob = p;
        self
    }

    pub fn sparse(mut self) -> Self {
        self.sparse_weights = true;
        self
    }
}

/// Random tree plus random extra edges; reproducible from the seed. A pendant
/// zero-weight vertex is appended when the parity constraint needs one.
pub fn random_connected(spec: &RandomSpec) -> Result<WeightedGraph> {
    if spec.size == 0 {
        return Err(Error::Precondition("size must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.size;
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(spec.edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let draw = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(spec.zero_prob) {
            0
        } else {
            rng.gen_range(1..=spec.max_weight.max(1))
        }
    };
    let mut w: Vec<u64> = (0..n).map(|_| draw(&mut rng)).collect();
    let needs_pad = match spec.parity {
        Parity::Any => false,
        Parity::Odd => n.is_multiple_of(2),
        Parity::Even => n % 2 == 1,
    };
    if needs_pad {
        let anchor = rng.gen_range(0..n);
        w.push(0);
        edges.push((anchor, n));
    }
    let mut g = WeightedGraph::from_int_weights(&w, &edges)?;
    if spec.sparse_weights {
        let mut order: Vec<VertexId> = g.vertices().collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let mut blocked = VertexSet::new(g.vertex_count());
        let mut keep = VertexSet::new(g.vertex_count());
        for v in order {
            let ball = g.closed_neighborhood(v);
            if !ball.intersects(&blocked) && g.weight(v).is_positive() {
                keep.insert(v);
                blocked.union_with(&ball);
            }
        }
        g = g.with_weights_restricted_to(&keep);
    }
    Ok(g)
}

/// Hubs on a ring (consecutive hubs joined directly or through `connectors[i]`
/// zero-weight vertices), each hub with one weighted leaf and `spokes[i]`
/// zero-weight leaves. Returns the graph and the weighted leaves.
pub fn ring_of_stars(leaf_weights: &[u64], spokes: &[usize], connectors: &[usize]) -> Result<(WeightedGraph, Vec<VertexId>)> {
    let k = leaf_weights.len();
    if k == 0 || spokes.len() != k || connectors.len() != k {
        return Err(Error::Precondition("one leaf weight, spoke count and connector count per hub".into()));
    }
    let mut w: Vec<u64> = vec![0; k];
    let mut edges = Vec::new();
    let mut leaves = Vec::new();
    for i in 0..k {
        w.push(leaf_weights[i]);
        leaves.push(w.len() - 1);
        edges.push((i, w.len() - 1));
        for _ in 0..spokes[i] {
            w.push(0);
            edges.push((i, w.len() - 1));
        }
    }
    if k >= 2 {
        for (i, &links) in connectors.iter().enumerate() {
            let j = (i + 1) % k;
            if k == 2 && i == 1 && links == 0 {
                continue;
            }
            let mut prev = i;
            for _ in 0..links {
                w.push(0);
                edges.push((prev, w.len() - 1));
                prev = w.len() - 1;
            }
            edges.push((prev, j));
        }
    }
    Ok((WeightedGraph::from_int_weights(&w, &edges)?, leaves))
}

/// A seeded ring of stars with odd vertex count and at most `max_vertices` vertices.
pub fn random_ring_of_stars(hubs: usize, max_vertices: usize, seed: u64) -> Result<(WeightedGraph, Vec<VertexId>)> {
    if hubs == 0 || 2 * hubs > max_vertices {
        return Err(Error::Precondition("too many hubs for the vertex limit".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<u64> = (0..hubs).map(|_| rng.gen_range(0..=9)).collect();
    let mut spokes = vec![0; hubs];
    let mut connectors = vec![0; hubs];
    let mut count = 2 * hubs;
    let spare = max_vertices - count;
    let extra = rng.gen_range(0..=spare);
    for _ in 0..extra {
        let i = rng.gen_range(0..hubs);
        if rng.gen_bool(0.5) && hubs >= 3 {
            connectors[i] += 1;
        } else {
            spokes[i] += 1;
        }
        count += 1;
    }
    if count.is_multiple_of(2) {
        if count < max_vertices {
            spokes[rng.gen_range(0..hubs)] += 1;
        } else if let Some(i) = (0..hubs).find(|&i| spokes[i] > 0) {
            spokes[i] -= 1;
        } else if let Some(i) = (0..hubs).find(|&i| connectors[i] > 0) {
            connectors[i] -= 1;
        } else {
            return Err(Error::Precondition("cannot reach odd parity within the vertex limit".into()));
        }
    }
    ring_of_stars(&weights, &spokes, &connectors)
}

/// A random Hamiltonian graph on `size` vertices: a shuffled spanning cycle
/// (returned as the certificate) plus each other pair with probability `chord_prob`.
pub fn random_hamiltonian(size: usize, chord_prob: f64, seed: u64) -> Result<(WeightedGraph, CycleCertificate)> {
    if size == 0 {
        return Err(Error::Precondition("size must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = (0..size).collect();
    for i in (1..size).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut g = WeightedGraph::new(vec![Weight::ZERO; size]);
    if size >= 2 {
        for i in 0..size {
            let (a, b) = (order[i], order[(i + 1) % size]);
            if !g.has_edge(a, b) {
                g.add_edge(a, b)?;
            }
        }
    }
    for u in 0..size {
        for v in u + 1..size {
            if !g.has_edge(u, v) && rng.gen_bool(chord_prob) {
                g.add_edge(u, v)?;
            }
        }
    }
    for v in 0..size {
        let w = if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..=9) };
        g.set_weight(v, Weight::int(w));
    }
    Ok((g, CycleCertificate::new(order)?))
}

/// A seeded connected vertex set grown from a random vertex of a connected graph.
pub fn random_connected_subset(g: &WeightedGraph, seed: u64) -> VertexSet {
    let n = g.vertex_count();
    if n == 0 {
        return VertexSet::new(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = VertexSet::singleton(n, rng.gen_range(0..n));
    let target = rng.gen_range(1..=n);
    while a.len() < target {
        let frontier = g.set_neighborhood(&a).to_vec();
        if frontier.is_empty() {
            break;
        }
        a.insert(frontier[rng.gen_range(0..frontier.len())]);
    }
    a
}
