//! A mutable plane map used while assembling the extremal drawings.
//!
//! Black nodes become X, blue nodes become Y. Black-black adjacencies are
//! scaffold only and must be removed before [`Scaffold::finish`].

use super::outerplanar::OuterplanarSkeleton;
use super::ConstructError;
use crate::drawing::Drawing;
use crate::embedding::{self, FaceWalk, NodeId};
use crate::graph::{BipartiteGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Black,
    Blue,
    Dummy,
}

/// Nodes of one inserted B3 configuration.
///
/// `corners` are `[a1, a2, a3]` in counter-clockwise order. Every blue is
/// joined to every corner; the crossings are `b2a1 x b1a2`, `b3a1 x b1a3` and
/// `b2a3 x b3a2`, at `dummies[0..3]` respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct B3Pattern {
    pub corners: [NodeId; 3],
    pub blues: [NodeId; 3],
    pub dummies: [NodeId; 3],
}

#[derive(Debug, Clone)]
struct ScaffoldEdge {
    black: NodeId,
    blue: NodeId,
}

#[derive(Debug, Clone)]
pub struct Scaffold {
    kinds: Vec<NodeKind>,
    rotation: Vec<Vec<NodeId>>,
    edges: Vec<ScaffoldEdge>,
    // (edge, edge) per dummy, in dummy creation order
    crossings: Vec<(usize, usize, NodeId)>,
}

impl Scaffold {
    pub fn from_skeleton(skeleton: &OuterplanarSkeleton) -> Self {
        Self {
            kinds: vec![NodeKind::Black; skeleton.vertex_count()],
            rotation: skeleton.rotation().to_vec(),
            edges: Vec::new(),
            crossings: Vec::new(),
        }
    }

    /// `k` black vertices with no adjacencies at all.
    pub fn isolated_blacks(k: usize) -> Self {
        Self {
            kinds: vec![NodeKind::Black; k],
            rotation: vec![Vec::new(); k],
            edges: Vec::new(),
            crossings: Vec::new(),
        }
    }

    pub fn rotation(&self) -> &[Vec<NodeId>] {
        &self.rotation
    }

    pub fn kind(&self, node: NodeId) -> NodeKind {
        self.kinds[node]
    }

    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn faces(&self) -> Vec<FaceWalk> {
        embedding::trace_faces(&self.rotation)
    }

    /// `V - E + F` of the current map.
    pub fn euler_characteristic(&self) -> isize {
        let v = self.node_count() as isize;
        let e = embedding::segment_count(&self.rotation) as isize;
        let f = embedding::count_faces(&self.rotation) as isize;
        v - e + f
    }

    fn add_node(&mut self, kind: NodeKind) -> NodeId {
        self.kinds.push(kind);
        self.rotation.push(Vec::new());
        self.kinds.len() - 1
    }

    fn insert_after(&mut self, at: NodeId, after: NodeId, nodes: &[NodeId]) {
        let around = &mut self.rotation[at];
        let p = around
            .iter()
            .position(|&w| w == after)
            .expect("corner neighbour present");
        for (i, &w) in nodes.iter().enumerate() {
            around.insert(p + 1 + i, w);
        }
    }

    fn is_current_face(&self, walk: &FaceWalk) -> bool {
        let darts = walk.darts();
        (0..darts.len()).all(|i| embedding::next_dart(&self.rotation, darts[i]) == Some(darts[(i + 1) % darts.len()]))
    }

    /// Places a B3 configuration inside a triangular face of black vertices.
    pub fn insert_b3(&mut self, triangle: &FaceWalk) -> Result<B3Pattern, ConstructError> {
        let nodes: Vec<_> = triangle.nodes().collect();
        if nodes.len() != 3
            || nodes
                .iter()
                .any(|&u| u >= self.node_count() || self.kinds[u] != NodeKind::Black)
            || nodes[0] == nodes[1]
            || nodes[1] == nodes[2]
            || nodes[0] == nodes[2]
            || !self.is_current_face(triangle)
        {
            return Err(ConstructError::NotATriangle);
        }
        // faces keep their interior on the right, so the walk runs clockwise
        let (a1, a2, a3) = (nodes[0], nodes[2], nodes[1]);
        let [b1, b2, b3] = [(); 3].map(|_| self.add_node(NodeKind::Blue));
        let [d1, d2, d3] = [(); 3].map(|_| self.add_node(NodeKind::Dummy));

        self.insert_after(a1, a2, &[d1, b1, d2]);
        self.insert_after(a2, a3, &[d3, b2, d1]);
        self.insert_after(a3, a1, &[d2, b3, d3]);
        self.rotation[b1] = vec![a1, d1, d2];
        self.rotation[b2] = vec![d1, a2, d3];
        self.rotation[b3] = vec![d2, d3, a3];
        self.rotation[d1] = vec![b1, a1, a2, b2];
        self.rotation[d2] = vec![a1, b1, b3, a3];
        self.rotation[d3] = vec![b3, b2, a2, a3];

        let mut edge = |black, blue| {
            self.edges.push(ScaffoldEdge { black, blue });
            self.edges.len() - 1
        };
        edge(a1, b1);
        edge(a2, b2);
        edge(a3, b3);
        let b2a1 = edge(a1, b2);
        let b1a2 = edge(a2, b1);
        let b3a1 = edge(a1, b3);
        let b1a3 = edge(a3, b1);
        let b2a3 = edge(a3, b2);
        let b3a2 = edge(a2, b3);
        self.crossings.push((b2a1, b1a2, d1));
        self.crossings.push((b3a1, b1a3, d2));
        self.crossings.push((b2a3, b3a2, d3));

        Ok(B3Pattern {
            corners: [a1, a2, a3],
            blues: [b1, b2, b3],
            dummies: [d1, d2, d3],
        })
    }

    pub fn remove_black_edges(&mut self) {
        let kinds = &self.kinds;
        for (u, around) in self.rotation.iter_mut().enumerate() {
            if kinds[u] == NodeKind::Black {
                around.retain(|&w| kinds[w] != NodeKind::Black);
            }
        }
    }

    /// Adds one blue vertex joined to blacks `a` and `b`, drawn inside the
    /// face that currently visits every black vertex, where the walk passes
    /// from `a` to `b` without meeting another black vertex.
    ///
    /// Repeated calls nest the new vertices one inside the other.
    pub fn attach_degree_two(&mut self, a: NodeId, b: NodeId) -> Result<NodeId, ConstructError> {
        let y = if self.rotation[a].is_empty() && self.rotation[b].is_empty() {
            let y = self.add_node(NodeKind::Blue);
            self.rotation[a].push(y);
            self.rotation[b].push(y);
            self.rotation[y] = vec![a, b];
            y
        } else {
            let (ca, cb) = self.black_corner_pair(a, b).ok_or(ConstructError::NoOneDiskFace)?;
            let y = self.add_node(NodeKind::Blue);
            self.insert_after(a, ca, &[y]);
            self.insert_after(b, cb, &[y]);
            self.rotation[y] = vec![a, b];
            y
        };
        self.edges.push(ScaffoldEdge { black: a, blue: y });
        self.edges.push(ScaffoldEdge { black: b, blue: y });
        Ok(y)
    }

    // Corners at `a` and `b` (given by the node each walk enters from) on the
    // all-black face, with no black vertex strictly between them on the walk.
    fn black_corner_pair(&self, a: NodeId, b: NodeId) -> Option<(NodeId, NodeId)> {
        let blacks = self.kinds.iter().filter(|&&k| k == NodeKind::Black).count();
        let face = self.faces().into_iter().find(|f| {
            let mut seen: Vec<_> = f.nodes().filter(|&u| self.kinds[u] == NodeKind::Black).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == blacks
        })?;
        let darts = face.darts();
        let len = darts.len();
        let entered_from = |i: usize| darts[(i + len - 1) % len].0;
        for (first, second) in [(a, b), (b, a)] {
            for i in 0..len {
                if darts[i].0 != first {
                    continue;
                }
                let next_black = (1..len)
                    .map(|j| (i + j) % len)
                    .find(|&j| self.kinds[darts[j].0] == NodeKind::Black);
                if let Some(j) = next_black {
                    if darts[j].0 == second {
                        let (ca, cb) = (entered_from(i), entered_from(j));
                        return Some(if first == a { (ca, cb) } else { (cb, ca) });
                    }
                }
            }
        }
        None
    }

    /// Relabels into a validated [`Drawing`]: blacks first, then blues, then
    /// dummies, each in creation order.
    pub fn finish(self) -> Result<(BipartiteGraph, Drawing), ConstructError> {
        let mut label = vec![usize::MAX; self.node_count()];
        let count = |kind| self.kinds.iter().filter(|&&k| k == kind).count();
        let (x_count, y_count) = (count(NodeKind::Black), count(NodeKind::Blue));
        let mut next = [0, x_count, x_count + y_count];
        for (u, &k) in self.kinds.iter().enumerate() {
            let slot = match k {
                NodeKind::Black => 0,
                NodeKind::Blue => 1,
                NodeKind::Dummy => 2,
            };
            label[u] = next[slot];
            next[slot] += 1;
        }
        for (u, around) in self.rotation.iter().enumerate() {
            if self.kinds[u] == NodeKind::Black && around.iter().any(|&w| self.kinds[w] == NodeKind::Black) {
                return Err(ConstructError::BlackEdgesRemain);
            }
        }
        let graph = BipartiteGraph::new(
            x_count,
            y_count,
            self.edges.iter().map(|e| (label[e.black], label[e.blue])),
        )?;
        let edge_id = |i: usize| {
            let e = &self.edges[i];
            graph
                .edge_id(VertexId(label[e.black]), VertexId(label[e.blue]))
                .expect("edge just inserted")
        };
        let mut dummies: Vec<_> = self.crossings.iter().collect();
        dummies.sort_by_key(|c| label[c.2]);
        let crossings = dummies.iter().map(|&&(ea, eb, _)| (edge_id(ea), edge_id(eb))).collect();
        let mut rotation = vec![Vec::new(); self.node_count()];
        for (u, around) in self.rotation.iter().enumerate() {
            rotation[label[u]] = around.iter().map(|&w| label[w]).collect();
        }
        let drawing = Drawing::new(graph.clone(), crossings, rotation)?;
        Ok((graph, drawing))
    }
}

#[cfg(test)]
mod tests {
    use super::super::outerplanar::{maximal_outerplanar, Strategy};
    use super::*;

    #[test]
    fn b3_in_a_triangle_keeps_the_map_planar() {
        let skeleton = maximal_outerplanar(3, Strategy::Fan).unwrap();
        let mut s = Scaffold::from_skeleton(&skeleton);
        let pattern = s.insert_b3(&skeleton.triangles()[0]).unwrap();
        assert_eq!(s.node_count(), 9);
        assert_eq!(s.crossing_count(), 3);
        assert_eq!(s.euler_characteristic(), 2);
        for &d in &pattern.dummies {
            assert_eq!(s.rotation()[d].len(), 4);
        }
        s.remove_black_edges();
        assert_eq!(s.euler_characteristic(), 2);
        let (g, d) = s.finish().unwrap();
        assert_eq!(g, BipartiteGraph::complete(3, 3).unwrap());
        assert_eq!(d.node_count(), 9);
        assert_eq!(d.segments().len(), 15);
        assert_eq!(d.faces().len(), 8);
        assert!(d.is_one_disk());
    }

    #[test]
    fn all_triangles_of_a_fan() {
        let skeleton = maximal_outerplanar(5, Strategy::Fan).unwrap();
        let mut s = Scaffold::from_skeleton(&skeleton);
        for t in skeleton.triangles() {
            s.insert_b3(t).unwrap();
            assert_eq!(s.euler_characteristic(), 2);
        }
        assert_eq!(s.crossing_count(), 9);
        assert_eq!(s.kinds.iter().filter(|&&k| k == NodeKind::Blue).count(), 9);
        assert_eq!(s.edges.len(), 27);
    }

    #[test]
    fn outer_face_is_not_a_triangle() {
        let skeleton = maximal_outerplanar(5, Strategy::Fan).unwrap();
        let mut s = Scaffold::from_skeleton(&skeleton);
        assert_eq!(
            s.insert_b3(skeleton.outer_face()).unwrap_err(),
            ConstructError::NotATriangle
        );
    }

    #[test]
    fn stale_triangle_is_rejected() {
        let skeleton = maximal_outerplanar(3, Strategy::Fan).unwrap();
        let mut s = Scaffold::from_skeleton(&skeleton);
        s.insert_b3(&skeleton.triangles()[0]).unwrap();
        assert_eq!(
            s.insert_b3(&skeleton.triangles()[0]).unwrap_err(),
            ConstructError::NotATriangle
        );
    }

    #[test]
    fn black_edges_must_go() {
        let skeleton = maximal_outerplanar(3, Strategy::Fan).unwrap();
        let mut s = Scaffold::from_skeleton(&skeleton);
        s.insert_b3(&skeleton.triangles()[0]).unwrap();
        assert_eq!(s.finish().unwrap_err(), ConstructError::BlackEdgesRemain);
    }

    #[test]
    fn nested_pairs_stay_planar() {
        let mut s = Scaffold::isolated_blacks(2);
        for _ in 0..6 {
            s.attach_degree_two(0, 1).unwrap();
            assert_eq!(s.euler_characteristic(), 2);
        }
        let (g, d) = s.finish().unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(d.is_one_disk());
    }
}
