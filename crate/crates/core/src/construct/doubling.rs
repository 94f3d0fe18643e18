//! Gluing a 1-disk drawing to its mirror image along X.
//!
//! The copy duplicates every Y vertex and every dummy and reverses every
//! rotation, which is what a reflection does to a plane drawing. Each X vertex
//! then receives its own rotation, opened at its corner on the 1-disk face,
//! followed by the mirrored rotation opened at the same corner.

use super::ConstructError;
use crate::drawing::Drawing;
use crate::embedding::NodeId;
use crate::graph::{BipartiteGraph, VertexId};

#[derive(Debug, Clone)]
pub struct DoublingResult {
    pub graph_star: BipartiteGraph,
    pub drawing_star: Drawing,
}

pub fn double(d: &Drawing) -> Result<DoublingResult, ConstructError> {
    let face = d.find_one_disk_face().ok_or(ConstructError::NoOneDiskFace)?;
    let g = d.graph();
    let (x, y, c) = (g.x_count(), g.y_count(), d.crossing_count());
    let n = x + y;
    let n_star = x + 2 * y;

    let original = |u: NodeId| if u < n { u } else { n_star + (u - n) };
    let mirror = |u: NodeId| {
        if u < x {
            u
        } else if u < n {
            u + y
        } else {
            n_star + c + (u - n)
        }
    };

    let edges = g
        .edges()
        .iter()
        .flat_map(|&(a, b)| [(a.0, b.0), (a.0, b.0 + y)])
        .collect::<Vec<_>>();
    let graph_star = BipartiteGraph::new(x, 2 * y, edges)?;

    let lift = |e, map: &dyn Fn(NodeId) -> NodeId| {
        let (a, b) = g.edge(e).expect("drawing edges exist");
        graph_star
            .edge_id(VertexId(map(a.0)), VertexId(map(b.0)))
            .expect("lifted edge exists")
    };
    let mut crossings = Vec::with_capacity(2 * c);
    for map in [&original as &dyn Fn(NodeId) -> NodeId, &mirror] {
        for cr in d.crossings() {
            crossings.push((lift(cr.edge_a, map), lift(cr.edge_b, map)));
        }
    }

    let rotation = d.rotation();
    let mut rotation_star = vec![Vec::new(); n_star + 2 * c];
    for (u, around) in rotation.iter().enumerate().skip(x) {
        rotation_star[original(u)] = around.iter().map(|&w| original(w)).collect();
        rotation_star[mirror(u)] = around.iter().rev().map(|&w| mirror(w)).collect();
    }
    for v in 0..x {
        let entered_from = face
            .darts()
            .iter()
            .find(|&&(_, head)| head == v)
            .map(|&(tail, _)| tail)
            .expect("1-disk face visits every X vertex");
        let around = &rotation[v];
        let p = around
            .iter()
            .position(|&w| w == entered_from)
            .expect("face dart in rotation");
        let opened: Vec<_> = (1..=around.len()).map(|i| around[(p + i) % around.len()]).collect();
        let mut merged: Vec<_> = opened.iter().map(|&w| original(w)).collect();
        merged.extend(opened.iter().rev().map(|&w| mirror(w)));
        rotation_star[v] = merged;
    }

    let drawing_star = Drawing::new(graph_star.clone(), crossings, rotation_star)?;
    Ok(DoublingResult {
        graph_star,
        drawing_star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_extremal;

    #[test]
    fn planar_c4_doubles_to_k24() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let d = Drawing::new(g, vec![], vec![vec![2, 3], vec![3, 2], vec![1, 0], vec![0, 1]]).unwrap();
        let r = double(&d).unwrap();
        assert_eq!(r.graph_star.vertex_count(), 6);
        assert_eq!(r.graph_star.edge_count(), 8);
        assert_eq!(r.drawing_star.crossing_count(), 0);
        assert_eq!(r.drawing_star.faces().len(), 4);
    }

    #[test]
    fn k33_doubles_to_eighteen_edges() {
        let (_, d) = construct_extremal(3, 3).unwrap();
        let r = double(&d).unwrap();
        assert_eq!(r.graph_star.vertex_count(), 9);
        assert_eq!(r.graph_star.edge_count(), 18);
        assert_eq!(r.drawing_star.crossing_count(), 6);
        assert!(r.drawing_star.is_one_planar());
    }

    #[test]
    fn path_with_a_single_face() {
        // x0 - y - x1: one face that passes y twice
        let g = BipartiteGraph::new(2, 1, [(0, 2), (1, 2)]).unwrap();
        let d = Drawing::new(g, vec![], vec![vec![2], vec![2], vec![0, 1]]).unwrap();
        let r = double(&d).unwrap();
        assert_eq!(r.graph_star.edge_count(), 4);
        assert!(r.drawing_star.is_one_planar());
    }
}
