//! 1-planar drawings as planarizations with a rotation system.
//!
//! Every crossing of two edges becomes a degree-4 dummy node that splits both
//! edges into two segments. Nodes `0..|V|` are the graph's vertices and node
//! `|V| + i` is the dummy of crossing `i`. The rotation is the only source of
//! geometric truth: faces are traced from it and planarity is the Euler count
//! `V' - E' + F = 2` on the (connected) planarization.

use thiserror::Error;

use crate::embedding::{self, FaceWalk, NodeId};
use crate::graph::{BipartiteGraph, EdgeId, Part, VertexId};

/// Two crossing edges and the dummy node placed at their crossing point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edge_a: EdgeId,
    pub edge_b: EdgeId,
    pub dummy: NodeId,
}

/// One piece of an edge in the planarization.
///
/// An uncrossed edge is a single segment `(x, y)`; a crossed edge is the two
/// segments `(x, dummy)` and `(dummy, y)`, numbered consecutively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub ends: (NodeId, NodeId),
    pub edge: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("crossing references unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is crossed more than once")]
    EdgeCrossedTwice(EdgeId),
    #[error("edges {0} and {1} share an endpoint and may not cross")]
    AdjacentEdgesCross(EdgeId, EdgeId),
    #[error("rotation at dummy node {0} does not alternate between its two edges")]
    NonAlternatingDummy(NodeId),
    #[error("rotation at node {node} does not list exactly its incident segments")]
    IncompleteRotation { node: NodeId },
    #[error("rotation covers {found} nodes but the planarization has {expected}")]
    RotationSize { expected: usize, found: usize },
    #[error("segment id {0} does not exist")]
    UnknownSegment(usize),
    #[error("planarization is disconnected")]
    DisconnectedPlanarization,
    #[error("rotation is not a plane embedding: traced {faces} faces, Euler requires {expected}")]
    NotPlanarEmbedding { faces: usize, expected: usize },
}

#[derive(Debug, Clone)]
pub struct Drawing {
    graph: BipartiteGraph,
    crossings: Vec<Crossing>,
    rotation: Vec<Vec<NodeId>>,
    segments: Vec<Segment>,
    faces: Vec<FaceWalk>,
}

impl PartialEq for Drawing {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.crossings == other.crossings && self.rotation == other.rotation
    }
}

impl Eq for Drawing {}

impl Drawing {
    /// Validates and builds a drawing.
    ///
    /// `crossings[i]` receives dummy node `graph.vertex_count() + i`;
    /// `rotation[u]` lists the planarization neighbours of node `u`
    /// counter-clockwise.
    pub fn new(
        graph: BipartiteGraph,
        crossings: Vec<(EdgeId, EdgeId)>,
        rotation: Vec<Vec<NodeId>>,
    ) -> Result<Self, DrawingError> {
        let n = graph.vertex_count();
        let crossings = crossings
            .into_iter()
            .enumerate()
            .map(|(i, (edge_a, edge_b))| Crossing {
                edge_a,
                edge_b,
                dummy: n + i,
            })
            .collect::<Vec<_>>();
        let (segments, faces) = validate(&graph, &crossings, &rotation)?;
        Ok(Self {
            graph,
            crossings,
            rotation,
            segments,
            faces,
        })
    }

    /// Like [`Drawing::new`], with each rotation given as segment ids.
    pub fn from_segment_rotation(
        graph: BipartiteGraph,
        crossings: Vec<(EdgeId, EdgeId)>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, DrawingError> {
        let n = graph.vertex_count();
        let marked = crossings
            .iter()
            .enumerate()
            .map(|(i, &(edge_a, edge_b))| Crossing {
                edge_a,
                edge_b,
                dummy: n + i,
            })
            .collect::<Vec<_>>();
        check_crossings(&graph, &marked)?;
        let segments = planarization_segments(&graph, &marked);
        let mut neighbours = Vec::with_capacity(rotation.len());
        for (node, around) in rotation.iter().enumerate() {
            let mut list = Vec::with_capacity(around.len());
            for &s in around {
                let seg = segments.get(s).ok_or(DrawingError::UnknownSegment(s))?;
                let other = match seg.ends {
                    (a, b) if a == node => b,
                    (a, b) if b == node => a,
                    _ => return Err(DrawingError::IncompleteRotation { node }),
                };
                list.push(other);
            }
            neighbours.push(list);
        }
        Self::new(graph, crossings, neighbours)
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Counter-clockwise neighbour lists, indexed by planarization node.
    pub fn rotation(&self) -> &[Vec<NodeId>] {
        &self.rotation
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn node_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn is_dummy(&self, node: NodeId) -> bool {
        node >= self.graph.vertex_count()
    }

    pub fn segment_id(&self, u: NodeId, v: NodeId) -> Option<usize> {
        self.segments.iter().position(|s| s.ends == (u, v) || s.ends == (v, u))
    }

    /// Rotation at `node` expressed as segment ids.
    pub fn segment_rotation(&self, node: NodeId) -> Vec<usize> {
        self.rotation[node]
            .iter()
            .map(|&w| self.segment_id(node, w).expect("validated rotation"))
            .collect()
    }

    pub fn crossing_of(&self, e: EdgeId) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.edge_a == e || c.edge_b == e)
    }

    /// Faces traced at construction time.
    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    /// Retraces the faces from the stored rotation and applies the Euler check.
    pub fn trace_faces(&self) -> Result<Vec<FaceWalk>, DrawingError> {
        traced_faces(&self.rotation, self.segments.len())
    }

    /// Re-runs every structural check on the stored data.
    pub fn verify_one_planar(&self) -> Result<(), DrawingError> {
        validate(&self.graph, &self.crossings, &self.rotation).map(|_| ())
    }

    pub fn is_one_planar(&self) -> bool {
        self.verify_one_planar().is_ok()
    }

    /// Index into [`Drawing::faces`] of the first face incident to every X-vertex.
    pub fn one_disk_face_index(&self) -> Option<usize> {
        let x_count = self.graph.x_count();
        self.faces.iter().position(|face| {
            let mut hit = vec![false; x_count];
            for u in face.nodes() {
                if u < x_count {
                    hit[u] = true;
                }
            }
            hit.into_iter().all(|h| h)
        })
    }

    /// A face whose boundary walk visits all of X, if one exists.
    ///
    /// Redrawing with that face outermost puts X on a circle around the rest
    /// of the drawing, which is the 1-disk condition.
    pub fn find_one_disk_face(&self) -> Option<&FaceWalk> {
        self.one_disk_face_index().map(|i| &self.faces[i])
    }

    pub fn is_one_disk(&self) -> bool {
        self.one_disk_face_index().is_some()
    }

    pub fn node_part(&self, node: NodeId) -> Option<Part> {
        (node < self.graph.vertex_count()).then(|| self.graph.part(VertexId(node)))
    }

    #[cfg(test)]
    pub(crate) fn crossings_mut(&mut self) -> &mut Vec<Crossing> {
        &mut self.crossings
    }

    #[cfg(test)]
    pub(crate) fn rotation_mut(&mut self) -> &mut Vec<Vec<NodeId>> {
        &mut self.rotation
    }
}

fn check_crossings(graph: &BipartiteGraph, crossings: &[Crossing]) -> Result<(), DrawingError> {
    let mut crossed = vec![false; graph.edge_count()];
    for c in crossings {
        let (a0, a1) = graph.edge(c.edge_a).ok_or(DrawingError::UnknownEdge(c.edge_a))?;
        let (b0, b1) = graph.edge(c.edge_b).ok_or(DrawingError::UnknownEdge(c.edge_b))?;
        if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
            return Err(DrawingError::AdjacentEdgesCross(c.edge_a, c.edge_b));
        }
        for e in [c.edge_a, c.edge_b] {
            if std::mem::replace(&mut crossed[e.0], true) {
                return Err(DrawingError::EdgeCrossedTwice(e));
            }
        }
    }
    Ok(())
}

/// Segment table in canonical numbering: edges in id order, crossed edges
/// contributing their X-side half first.
pub fn planarization_segments(graph: &BipartiteGraph, crossings: &[Crossing]) -> Vec<Segment> {
    let mut dummy_of = vec![None; graph.edge_count()];
    for c in crossings {
        dummy_of[c.edge_a.0] = Some(c.dummy);
        dummy_of[c.edge_b.0] = Some(c.dummy);
    }
    let mut segments = Vec::with_capacity(graph.edge_count() + 2 * crossings.len());
    for (i, &(x, y)) in graph.edges().iter().enumerate() {
        let edge = EdgeId(i);
        match dummy_of[i] {
            None => segments.push(Segment { ends: (x.0, y.0), edge }),
            Some(d) => {
                segments.push(Segment { ends: (x.0, d), edge });
                segments.push(Segment { ends: (d, y.0), edge });
            }
        }
    }
    segments
}

fn traced_faces(rotation: &[Vec<NodeId>], segment_count: usize) -> Result<Vec<FaceWalk>, DrawingError> {
    let faces = embedding::trace_faces(rotation);
    let expected = embedding::planar_face_count(rotation.len(), segment_count).unwrap_or(0);
    if faces.len() != expected {
        return Err(DrawingError::NotPlanarEmbedding {
            faces: faces.len(),
            expected,
        });
    }
    Ok(faces)
}

fn validate(
    graph: &BipartiteGraph,
    crossings: &[Crossing],
    rotation: &[Vec<NodeId>],
) -> Result<(Vec<Segment>, Vec<FaceWalk>), DrawingError> {
    check_crossings(graph, crossings)?;
    let n = graph.vertex_count();
    let node_count = n + crossings.len();
    if rotation.len() != node_count {
        return Err(DrawingError::RotationSize {
            expected: node_count,
            found: rotation.len(),
        });
    }
    for (i, c) in crossings.iter().enumerate() {
        if c.dummy != n + i {
            return Err(DrawingError::IncompleteRotation { node: c.dummy });
        }
    }

    let segments = planarization_segments(graph, crossings);
    let mut expected: Vec<Vec<NodeId>> = vec![Vec::new(); node_count];
    for s in &segments {
        expected[s.ends.0].push(s.ends.1);
        expected[s.ends.1].push(s.ends.0);
    }
    for (node, around) in rotation.iter().enumerate() {
        let mut listed = around.clone();
        listed.sort_unstable();
        let mut want = expected[node].clone();
        want.sort_unstable();
        if listed != want {
            return Err(DrawingError::IncompleteRotation { node });
        }
    }

    for c in crossings {
        let around = &rotation[c.dummy];
        let edge_at = |w: NodeId| {
            let (a0, a1) = graph.edge(c.edge_a).expect("checked");
            if w == a0.0 || w == a1.0 {
                c.edge_a
            } else {
                c.edge_b
            }
        };
        let alternating = around.len() == 4
            && edge_at(around[0]) == edge_at(around[2])
            && edge_at(around[1]) == edge_at(around[3])
            && edge_at(around[0]) != edge_at(around[1]);
        if !alternating {
            return Err(DrawingError::NonAlternatingDummy(c.dummy));
        }
    }

    if !embedding::is_connected(rotation) {
        return Err(DrawingError::DisconnectedPlanarization);
    }
    let faces = traced_faces(rotation, segments.len())?;
    Ok((segments, faces))
}
