//! Exhaustive 1-disk drawability search for tiny graphs.
//!
//! A candidate drawing is a set of crossing pairs (pairwise independent
//! edges, each edge used at most once) plus a rotation for every node of the
//! resulting planarization. Original vertices range over all cyclic orders of
//! their neighbours; a dummy ranges over the two alternating orders. A
//! candidate is kept when the Euler count certifies a sphere embedding and
//! some face visits all of X.
//!
//! Enumeration order is fixed: crossing count, then crossing set
//! lexicographically, then rotations lexicographically with node 0 most
//! significant. The first hit is therefore the least drawing under that key,
//! and results never depend on timing.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::one_disk_max_edges;
use crate::drawing::{Drawing, DrawingError};
use crate::embedding::{self, NodeId};
use crate::graph::{BipartiteGraph, EdgeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_crossings: usize,
    pub max_rotation_nodes: usize,
    pub time_budget: Duration,
    /// Start the edge-count descent at `x * y` instead of at the proved bound.
    pub probe_above_bound: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_crossings: 8,
            max_rotation_nodes: 24,
            time_budget: Duration::from_secs(300),
            probe_above_bound: false,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(seconds: f64) -> Self {
        Self {
            time_budget: Duration::from_secs_f64(seconds),
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_crossings == 0 || self.max_rotation_nodes == 0 || self.time_budget.is_zero() {
            return Err(SearchError::InvalidLimits);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exceeded before the space was exhausted; the answer is unknown")]
    BudgetExceeded,
    #[error("search limits must all be positive")]
    InvalidLimits,
    #[error("graph must be connected")]
    Disconnected,
    #[error("part sizes must be at least 1 (got x = {x}, y = {y})")]
    OutOfDomain { x: usize, y: usize },
    #[error("x * y = {0} is too large for exhaustive search")]
    TooLarge(usize),
    #[error("found a 1-disk drawing with {edges} edges, above the proved bound {bound}")]
    BoundExceeded { edges: usize, bound: usize },
    #[error("witness failed re-verification: {0}")]
    Witness(#[from] DrawingError),
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub x_count: usize,
    pub y_count: usize,
    pub max_edges: usize,
    #[serde(skip)]
    pub witness: Option<Drawing>,
    /// Every larger edge count was refuted without hitting a limit.
    pub exhausted: bool,
    pub graphs_examined: usize,
    /// Candidates are restricted to connected graphs.
    pub connected_only: bool,
}

struct Deadline {
    end: Instant,
    ticks: u32,
}

impl Deadline {
    fn new(budget: Duration) -> Self {
        Self {
            end: Instant::now() + budget,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<(), SearchError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) && Instant::now() > self.end {
            return Err(SearchError::BudgetExceeded);
        }
        Ok(())
    }
}

/// Pairs of edges with no common endpoint, as `(i, j)` with `i < j`.
fn independent_pairs(g: &BipartiteGraph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = (edges[i], edges[j]);
            if a.0 != b.0 && a.1 != b.1 {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Calls `f` on every matching of exactly `size` pairs, lexicographically.
fn matchings<F>(
    pairs: &[(usize, usize)],
    edge_count: usize,
    size: usize,
    f: &mut F,
) -> Result<ControlFlow<()>, SearchError>
where
    F: FnMut(&[(usize, usize)]) -> Result<ControlFlow<()>, SearchError>,
{
    fn go<F>(
        pairs: &[(usize, usize)],
        from: usize,
        used: &mut [bool],
        chosen: &mut Vec<(usize, usize)>,
        size: usize,
        f: &mut F,
    ) -> Result<ControlFlow<()>, SearchError>
    where
        F: FnMut(&[(usize, usize)]) -> Result<ControlFlow<()>, SearchError>,
    {
        if chosen.len() == size {
            return f(chosen);
        }
        for k in from..pairs.len() {
            let (i, j) = pairs[k];
            if used[i] || used[j] {
                continue;
            }
            used[i] = true;
            used[j] = true;
            chosen.push((i, j));
            let flow = go(pairs, k + 1, used, chosen, size, f)?;
            chosen.pop();
            used[i] = false;
            used[j] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
    let mut used = vec![false; edge_count];
    go(pairs, 0, &mut used, &mut Vec::with_capacity(size), size, f)
}

/// Lexicographic permutations of a sorted slice (Narayana's algorithm).
fn permutations(sorted: &[NodeId]) -> Vec<Vec<NodeId>> {
    let mut current = sorted.to_vec();
    let mut all = vec![current.clone()];
    loop {
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return all;
        };
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("pivot exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        all.push(current.clone());
    }
}

fn cyclic_orders(neighbours: &[NodeId]) -> Vec<Vec<NodeId>> {
    let mut sorted = neighbours.to_vec();
    sorted.sort_unstable();
    if sorted.len() <= 2 {
        return vec![sorted];
    }
    permutations(&sorted[1..])
        .into_iter()
        .map(|rest| std::iter::once(sorted[0]).chain(rest).collect())
        .collect()
}

fn normalize_cycle(cycle: [NodeId; 4]) -> Vec<NodeId> {
    let start = (0..4).min_by_key(|&i| cycle[i]).expect("nonempty");
    (0..4).map(|i| cycle[(start + i) % 4]).collect()
}

/// Planarization of `g` for a crossing set, with the rotation candidates of
/// every node in lexicographic order.
struct Candidate {
    crossings: Vec<(EdgeId, EdgeId)>,
    options: Vec<Vec<Vec<NodeId>>>,
    segments: usize,
}

fn candidate(g: &BipartiteGraph, chosen: &[(usize, usize)]) -> Candidate {
    let n = g.vertex_count();
    let mut neighbours = vec![Vec::new(); n + chosen.len()];
    let mut dummy_of = vec![None; g.edge_count()];
    for (k, &(i, j)) in chosen.iter().enumerate() {
        dummy_of[i] = Some(n + k);
        dummy_of[j] = Some(n + k);
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match dummy_of[e] {
            None => {
                neighbours[a.0].push(b.0);
                neighbours[b.0].push(a.0);
            }
            Some(d) => {
                neighbours[a.0].push(d);
                neighbours[b.0].push(d);
                neighbours[d].push(a.0);
                neighbours[d].push(b.0);
            }
        }
    }
    let mut options: Vec<_> = neighbours[..n].iter().map(|list| cyclic_orders(list)).collect();
    for &(i, j) in chosen {
        let (a0, a1) = g.edges()[i];
        let (b0, b1) = g.edges()[j];
        let mut pair = vec![
            normalize_cycle([a0.0, b0.0, a1.0, b1.0]),
            normalize_cycle([a0.0, b1.0, a1.0, b0.0]),
        ];
        pair.sort();
        options.push(pair);
    }
    Candidate {
        crossings: chosen.iter().map(|&(i, j)| (EdgeId(i), EdgeId(j))).collect(),
        options,
        segments: g.edge_count() + 2 * chosen.len(),
    }
}

fn has_one_disk_face(rotation: &[Vec<NodeId>], x_count: usize) -> bool {
    embedding::trace_faces(rotation).iter().any(|face| {
        let mut hit = vec![false; x_count];
        for u in face.nodes().filter(|&u| u < x_count) {
            hit[u] = true;
        }
        hit.into_iter().all(|h| h)
    })
}

#[derive(Debug)]
enum Scan {
    Complete,
    Truncated,
    Stopped,
}

/// Walks every sphere embedding of every admissible planarization of `g` in
/// canonical order. `visit` sees the crossing set and the rotation.
fn scan<F>(
    g: &BipartiteGraph,
    limits: &SearchLimits,
    deadline: &mut Deadline,
    mut visit: F,
) -> Result<Scan, SearchError>
where
    F: FnMut(&[(EdgeId, EdgeId)], &[Vec<NodeId>]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    let pairs = independent_pairs(g);
    let most = g.edge_count() / 2;
    let mut truncated = most > limits.max_crossings;
    for size in 0..=most.min(limits.max_crossings) {
        let mut on_set = |chosen: &[(usize, usize)]| -> Result<ControlFlow<()>, SearchError> {
            deadline.tick()?;
            let nodes = n + size;
            if nodes > limits.max_rotation_nodes {
                truncated = true;
                return Ok(ControlFlow::Continue(()));
            }
            let c = candidate(g, chosen);
            // simple planar graphs, with and without an apex joined to all of X
            if nodes >= 3 && c.segments > 3 * nodes - 6 {
                return Ok(ControlFlow::Continue(()));
            }
            if c.segments + g.x_count() > 3 * (nodes + 1) - 6 {
                return Ok(ControlFlow::Continue(()));
            }
            let faces_needed = embedding::planar_face_count(nodes, c.segments).unwrap_or(0);
            let mut index = vec![0usize; nodes];
            let mut rotation: Vec<Vec<NodeId>> = (0..nodes).map(|u| c.options[u][0].clone()).collect();
            loop {
                deadline.tick()?;
                if embedding::count_faces(&rotation) == faces_needed && visit(&c.crossings, &rotation).is_break() {
                    return Ok(ControlFlow::Break(()));
                }
                // odometer, last node fastest
                let mut u = nodes;
                loop {
                    if u == 0 {
                        return Ok(ControlFlow::Continue(()));
                    }
                    u -= 1;
                    index[u] += 1;
                    if index[u] < c.options[u].len() {
                        rotation[u].clone_from(&c.options[u][index[u]]);
                        break;
                    }
                    index[u] = 0;
                    rotation[u].clone_from(&c.options[u][0]);
                }
            }
        };
        if matchings(&pairs, g.edge_count(), size, &mut on_set)?.is_break() {
            return Ok(Scan::Stopped);
        }
    }
    Ok(if truncated { Scan::Truncated } else { Scan::Complete })
}

enum Decision {
    Yes(Drawing),
    No,
    Unknown,
}

fn decide(g: &BipartiteGraph, limits: &SearchLimits, deadline: &mut Deadline) -> Result<Decision, SearchError> {
    let x_count = g.x_count();
    let mut found = None;
    let scan = scan(g, limits, deadline, |crossings, rotation| {
        if has_one_disk_face(rotation, x_count) {
            found = Some((crossings.to_vec(), rotation.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    match (found, scan) {
        (Some((crossings, rotation)), _) => {
            let witness = Drawing::new(g.clone(), crossings, rotation)?;
            assert!(witness.is_one_disk(), "search accepted a drawing without a 1-disk face");
            Ok(Decision::Yes(witness))
        }
        (None, Scan::Complete) => Ok(Decision::No),
        (None, _) => Ok(Decision::Unknown),
    }
}

/// Decides whether `g` has a 1-disk drawing.
///
/// `Ok(None)` means the full space was searched and no drawing exists;
/// a search cut short by any limit is `BudgetExceeded` instead.
pub fn is_one_disk_drawable(g: &BipartiteGraph, limits: &SearchLimits) -> Result<Option<Drawing>, SearchError> {
    limits.validate()?;
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let mut deadline = Deadline::new(limits.time_budget);
    match decide(g, limits, &mut deadline)? {
        Decision::Yes(d) => Ok(Some(d)),
        Decision::No => Ok(None),
        Decision::Unknown => Err(SearchError::BudgetExceeded),
    }
}

/// Every sphere embedding of every admissible planarization of `g`, in
/// canonical order, each validated as a [`Drawing`].
pub fn plane_drawings(g: &BipartiteGraph, limits: &SearchLimits) -> Result<Vec<Drawing>, SearchError> {
    limits.validate()?;
    let mut deadline = Deadline::new(limits.time_budget);
    let mut raw = Vec::new();
    scan(g, limits, &mut deadline, |crossings, rotation| {
        raw.push((crossings.to_vec(), rotation.to_vec()));
        ControlFlow::Continue(())
    })?;
    raw.into_iter()
        .map(|(c, r)| Drawing::new(g.clone(), c, r).map_err(SearchError::from))
        .collect()
}

/// Part-preserving symmetry group acting on edge bitmasks, bit `i * y + j`
/// standing for the edge between the `i`-th X and the `j`-th Y vertex.
struct Symmetry {
    x: usize,
    y: usize,
    x_perms: Vec<Vec<usize>>,
    y_perms: Vec<Vec<usize>>,
}

impl Symmetry {
    fn new(x: usize, y: usize) -> Self {
        let ids = |k: usize| (0..k).collect::<Vec<_>>();
        Self {
            x,
            y,
            x_perms: permutations(&ids(x)),
            y_perms: permutations(&ids(y)),
        }
    }

    fn is_canonical(&self, mask: u64) -> bool {
        for px in &self.x_perms {
            for py in &self.y_perms {
                let mut image = 0u64;
                for i in 0..self.x {
                    for j in 0..self.y {
                        if mask & (1 << (i * self.y + j)) != 0 {
                            image |= 1 << (px[i] * self.y + py[j]);
                        }
                    }
                }
                if image < mask {
                    return false;
                }
            }
        }
        true
    }

    fn graph(&self, mask: u64) -> BipartiteGraph {
        let edges = (0..self.x * self.y)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| (b / self.y, self.x + b % self.y));
        BipartiteGraph::new(self.x, self.y, edges).expect("mask edges are valid")
    }
}

/// Masks over `bits` bits with exactly `ones` set, in increasing order.
fn masks_with(bits: usize, ones: usize) -> impl Iterator<Item = u64> {
    let first = if ones == 0 { 0 } else { (1u64 << ones) - 1 };
    let limit = 1u64 << bits;
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let current = next?;
        if current >= limit {
            return None;
        }
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            Some((((ripple ^ current) >> 2) / low) | ripple)
        };
        Some(current)
    })
}

/// Largest edge count of a connected bipartite graph with parts of sizes
/// `x` and `y` that has a 1-disk drawing, found by descending edge counts.
pub fn max_edges_one_disk(x: usize, y: usize, limits: &SearchLimits) -> Result<SearchOutcome, SearchError> {
    limits.validate()?;
    if x == 0 || y == 0 {
        return Err(SearchError::OutOfDomain { x, y });
    }
    if x * y > 24 {
        return Err(SearchError::TooLarge(x * y));
    }
    let bound = one_disk_max_edges(x, y).ok();
    let start = match bound {
        Some(b) if !limits.probe_above_bound => b.min(x * y),
        _ => x * y,
    };
    let symmetry = Symmetry::new(x, y);
    let mut deadline = Deadline::new(limits.time_budget);
    let mut exhausted = true;
    let mut graphs_examined = 0;
    for m in (x + y - 1..=start).rev() {
        for mask in masks_with(x * y, m) {
            deadline.tick()?;
            if !symmetry.is_canonical(mask) {
                continue;
            }
            let g = symmetry.graph(mask);
            if !g.is_connected() {
                continue;
            }
            graphs_examined += 1;
            match decide(&g, limits, &mut deadline)? {
                Decision::Yes(witness) => {
                    if let Some(b) = bound.filter(|&b| m > b) {
                        return Err(SearchError::BoundExceeded { edges: m, bound: b });
                    }
                    return Ok(SearchOutcome {
                        x_count: x,
                        y_count: y,
                        max_edges: m,
                        witness: Some(witness),
                        exhausted,
                        graphs_examined,
                        connected_only: true,
                    });
                }
                Decision::No => {}
                Decision::Unknown => exhausted = false,
            }
        }
    }
    Err(SearchError::BudgetExceeded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(&[1, 2, 3]);
        assert_eq!(
            p,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(cyclic_orders(&[4, 2, 7, 5]).len(), 6);
        assert!(cyclic_orders(&[4, 2, 7, 5]).iter().all(|c| c[0] == 2));
    }

    #[test]
    fn gosper_enumerates_combinations() {
        let masks: Vec<_> = masks_with(5, 2).collect();
        assert_eq!(masks.len(), 10);
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        assert!(masks.iter().all(|m| m.count_ones() == 2));
        assert_eq!(masks_with(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_with(3, 3).collect::<Vec<_>>(), vec![7]);
    }

    #[test]
    fn canonical_masks_count_orbits() {
        // bipartite graphs on parts 2, 2 up to part-preserving isomorphism, by edge count
        let s = Symmetry::new(2, 2);
        let orbits: Vec<_> = (0..=4)
            .map(|m| masks_with(4, m).filter(|&k| s.is_canonical(k)).count())
            .collect();
        // two edges: sharing an X vertex, sharing a Y vertex, or disjoint
        assert_eq!(orbits, vec![1, 1, 3, 1, 1]);
    }

    #[test]
    fn k22_is_drawable_without_crossings() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let d = is_one_disk_drawable(&g, &SearchLimits::default()).unwrap().unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert!(d.is_one_planar() && d.is_one_disk());
    }

    #[test]
    fn k33_needs_crossings() {
        let g = BipartiteGraph::complete(3, 3).unwrap();
        let d = is_one_disk_drawable(&g, &SearchLimits::default()).unwrap().unwrap();
        assert!(d.crossing_count() >= 1);
        assert!(d.is_one_planar() && d.is_one_disk());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = BipartiteGraph::new(2, 2, [(0, 2)]).unwrap();
        assert_eq!(
            is_one_disk_drawable(&g, &SearchLimits::default()).unwrap_err(),
            SearchError::Disconnected
        );
    }

    #[test]
    fn zero_limits_are_rejected() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let limits = SearchLimits {
            max_crossings: 0,
            ..SearchLimits::default()
        };
        assert_eq!(
            is_one_disk_drawable(&g, &limits).unwrap_err(),
            SearchError::InvalidLimits
        );
    }

    #[test]
    fn truncated_search_is_unknown_not_no() {
        // K2,4 plus nothing: planar, so a crossing cap cannot hide a witness;
        // a node cap below |V| truncates everything
        let g = BipartiteGraph::complete(2, 4).unwrap();
        let limits = SearchLimits {
            max_rotation_nodes: 3,
            ..SearchLimits::default()
        };
        assert_eq!(
            is_one_disk_drawable(&g, &limits).unwrap_err(),
            SearchError::BudgetExceeded
        );
    }

    #[test]
    fn plane_drawings_of_c4() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let all = plane_drawings(&g, &SearchLimits::default()).unwrap();
        // degree 2 everywhere: a single crossing-free rotation system, then
        // the self-intersecting drawings of the square
        assert_eq!(all[0].crossing_count(), 0);
        assert_eq!(all.iter().filter(|d| d.crossing_count() == 0).count(), 1);
        assert!(all.iter().all(Drawing::is_one_planar));
        assert!(all.windows(2).all(|w| w[0].crossing_count() <= w[1].crossing_count()));
    }

    #[test]
    fn small_maxima() {
        let limits = SearchLimits::default();
        for (x, y, expected) in [(2, 2, 4), (2, 3, 6), (1, 3, 3)] {
            let out = max_edges_one_disk(x, y, &limits).unwrap();
            assert_eq!(out.max_edges, expected, "({x}, {y})");
            assert!(out.exhausted);
            let w = out.witness.unwrap();
            assert_eq!(w.graph().edge_count(), expected);
            assert!(w.is_one_planar() && w.is_one_disk());
        }
    }

    #[test]
    fn witness_is_deterministic() {
        let limits = SearchLimits::default();
        let a = max_edges_one_disk(2, 3, &limits).unwrap().witness.unwrap();
        let b = max_edges_one_disk(2, 3, &limits).unwrap().witness.unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graph().neighbors(VertexId(0)).len(), 3);
    }
}
