//! Rotation systems on simple graphs and face tracing.
//!
//! A rotation lists, for every node, its neighbours in counter-clockwise
//! order. A dart `(u, v)` is followed in its face by `(v, w)` where `w` is
//! the successor of `u` in the rotation at `v`, so every face keeps its
//! interior on the right.

/// Planarization node index: original vertices first, then crossing dummies.
pub type NodeId = usize;

/// A directed segment `(tail, head)` of an embedded graph.
pub type Dart = (NodeId, NodeId);

/// The boundary walk of one face, as a cyclic sequence of darts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceWalk {
    darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn new(darts: Vec<Dart>) -> Self {
        Self { darts }
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Nodes in walk order, with repetition where the walk revisits a node.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.darts.iter().map(|&(u, _)| u)
    }

    pub fn visits(&self, node: NodeId) -> bool {
        self.darts.iter().any(|&(u, _)| u == node)
    }
}

fn position(list: &[NodeId], node: NodeId) -> Option<usize> {
    list.iter().position(|&w| w == node)
}

/// Successor of dart `(u, v)` in its face. `None` if `u` is not listed at `v`.
pub fn next_dart(rotation: &[Vec<NodeId>], (u, v): Dart) -> Option<Dart> {
    let around = &rotation[v];
    let p = position(around, u)?;
    Some((v, around[(p + 1) % around.len()]))
}

/// All face walks, discovered by scanning darts in node-then-rotation order.
///
/// The rotation must be symmetric (`v` listed at `u` iff `u` listed at `v`).
pub fn trace_faces(rotation: &[Vec<NodeId>]) -> Vec<FaceWalk> {
    let mut seen: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..rotation.len() {
        for i in 0..rotation[u].len() {
            if seen[u][i] {
                continue;
            }
            let start = (u, rotation[u][i]);
            let mut darts = Vec::new();
            let mut dart = start;
            loop {
                let (a, b) = dart;
                let slot = position(&rotation[a], b).expect("dart endpoints listed in rotation");
                seen[a][slot] = true;
                darts.push(dart);
                dart = next_dart(rotation, dart).expect("asymmetric rotation");
                if dart == start {
                    break;
                }
            }
            faces.push(FaceWalk::new(darts));
        }
    }
    faces
}

/// Number of faces, without materializing the walks.
pub fn count_faces(rotation: &[Vec<NodeId>]) -> usize {
    let mut seen: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0;
    for u in 0..rotation.len() {
        for i in 0..rotation[u].len() {
            if seen[u][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut slot) = (u, i);
            while !seen[a][slot] {
                seen[a][slot] = true;
                let b = rotation[a][slot];
                let around = &rotation[b];
                let p = position(around, a).expect("asymmetric rotation");
                a = b;
                slot = (p + 1) % around.len();
            }
        }
    }
    faces
}

/// Number of undirected segments described by a symmetric rotation.
pub fn segment_count(rotation: &[Vec<NodeId>]) -> usize {
    rotation.iter().map(Vec::len).sum::<usize>() / 2
}

pub fn is_connected(rotation: &[Vec<NodeId>]) -> bool {
    if rotation.is_empty() {
        return true;
    }
    let mut seen = vec![false; rotation.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &rotation[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Faces a connected rotation needs in order to be a sphere embedding.
pub fn planar_face_count(nodes: usize, segments: usize) -> Option<usize> {
    (2 + segments).checked_sub(nodes)
}

/// Rotations of `count` points in convex position, labelled counter-clockwise,
/// for the given set of non-crossing chords and polygon sides.
pub fn convex_rotation(count: usize, edges: &[(NodeId, NodeId)]) -> Vec<Vec<NodeId>> {
    let mut rotation = vec![Vec::new(); count];
    for &(a, b) in edges {
        rotation[a].push(b);
        rotation[b].push(a);
    }
    for (u, around) in rotation.iter_mut().enumerate() {
        around.sort_by_key(|&w| (w + count - u) % count);
    }
    rotation
}
