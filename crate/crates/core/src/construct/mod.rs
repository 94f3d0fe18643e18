//! Extremal 1-disk drawings and the doubling transformation.
//!
//! The extremal family starts from a maximal outerplanar graph on the X
//! vertices, fills every triangular face with a B3 configuration, deletes the
//! outerplanar edges and finally hangs any surplus Y vertices, nested, on one
//! pair of consecutive X vertices. The result has exactly `3|X| + 2|Y| - 6`
//! edges.

mod doubling;
mod outerplanar;
mod scaffold;

pub use doubling::{double, DoublingResult};
pub use outerplanar::{maximal_outerplanar, OuterplanarSkeleton, Strategy};
pub use scaffold::{B3Pattern, NodeKind, Scaffold};

use thiserror::Error;

use crate::drawing::{Drawing, DrawingError};
use crate::graph::{BipartiteGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("a maximal outerplanar skeleton needs at least 3 vertices (got {0})")]
    KTooSmall(usize),
    #[error("face is not a triangle of three distinct black vertices in the current map")]
    NotATriangle,
    #[error("construction needs 2 <= x <= y (got x = {x}, y = {y})")]
    OutOfDomain { x: usize, y: usize },
    #[error("no construction for x = {x}, y = {y}: it covers only y >= 3(x - 2) when x >= 4")]
    UncoveredRegime { x: usize, y: usize },
    #[error("drawing has no face incident to every X vertex")]
    NoOneDiskFace,
    #[error("scaffold still contains edges between black vertices")]
    BlackEdgesRemain,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

/// Number of B3 gadgets (and of degree-3 Y vertices divided by three) used
/// for `x` X vertices.
pub fn gadget_count(x: usize) -> usize {
    x.saturating_sub(2)
}

pub fn construct_extremal(x: usize, y: usize) -> Result<(BipartiteGraph, Drawing), ConstructError> {
    construct_extremal_with(x, y, Strategy::Fan)
}

pub fn construct_extremal_with(
    x: usize,
    y: usize,
    strategy: Strategy,
) -> Result<(BipartiteGraph, Drawing), ConstructError> {
    if x < 2 || y < x {
        return Err(ConstructError::OutOfDomain { x, y });
    }
    let mut scaffold = if x == 2 {
        Scaffold::isolated_blacks(2)
    } else {
        let base = 3 * gadget_count(x);
        if y < base {
            return Err(ConstructError::UncoveredRegime { x, y });
        }
        let skeleton = maximal_outerplanar(x, strategy)?;
        let mut scaffold = Scaffold::from_skeleton(&skeleton);
        for triangle in skeleton.triangles() {
            scaffold.insert_b3(triangle)?;
        }
        scaffold.remove_black_edges();
        scaffold
    };
    let placed = if x == 2 { 0 } else { 3 * gadget_count(x) };
    for _ in placed..y {
        scaffold.attach_degree_two(0, 1)?;
    }
    scaffold.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn k33_from_one_gadget() {
        let (g, d) = construct_extremal(3, 3).unwrap();
        assert_eq!(g, BipartiteGraph::complete(3, 3).unwrap());
        assert_eq!(g.edge_count(), 9);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.faces().len(), 8);
        assert!(d.is_one_planar());
        assert!(d.is_one_disk());
    }

    #[test]
    fn four_six() {
        let (g, d) = construct_extremal(4, 6).unwrap();
        assert_eq!(g.edge_count(), 18);
        assert_eq!(d.crossing_count(), 6);
        assert!(d.is_one_planar() && d.is_one_disk());
    }

    #[test]
    fn four_eight_has_two_hanging_vertices() {
        let (g, d) = construct_extremal(4, 8).unwrap();
        assert_eq!(g.edge_count(), 22);
        let hanging: Vec<_> = g.y_vertices().filter(|&v| g.degree(v) == 2).collect();
        assert_eq!(hanging.len(), 2);
        for v in hanging {
            assert_eq!(g.neighbors(v), vec![VertexId(0), VertexId(1)]);
        }
        assert!(d.is_one_disk());
    }

    #[test]
    fn two_five_is_nested_and_planar() {
        let (g, d) = construct_extremal(2, 5).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(d.crossing_count(), 0);
        assert!(g.y_vertices().all(|v| g.degree(v) == 2));
        assert!(d.is_one_disk());
    }

    #[test]
    fn five_nine_has_a_face_on_all_of_x() {
        let (g, d) = construct_extremal(5, 9).unwrap();
        assert_eq!(g.edge_count(), 27);
        let face = d.find_one_disk_face().unwrap();
        assert!((0..5).all(|u| face.visits(u)));
    }

    #[test]
    fn out_of_range_requests() {
        assert_eq!(
            construct_extremal(4, 5).unwrap_err(),
            ConstructError::UncoveredRegime { x: 4, y: 5 }
        );
        assert_eq!(
            construct_extremal(5, 8).unwrap_err(),
            ConstructError::UncoveredRegime { x: 5, y: 8 }
        );
        assert_eq!(
            construct_extremal(1, 4).unwrap_err(),
            ConstructError::OutOfDomain { x: 1, y: 4 }
        );
        assert_eq!(
            construct_extremal(4, 3).unwrap_err(),
            ConstructError::OutOfDomain { x: 4, y: 3 }
        );
    }

    #[test]
    fn degree_profile() {
        for x in 3..=7 {
            for t in 0..4 {
                let y = 3 * (x - 2) + t;
                let (g, _) = construct_extremal(x, y).unwrap();
                let deg3 = g.y_vertices().filter(|&v| g.degree(v) == 3).count();
                let deg2 = g.y_vertices().filter(|&v| g.degree(v) == 2).count();
                assert_eq!(deg3, 3 * (x - 2));
                assert_eq!(deg2, t);
            }
        }
    }

    #[test]
    fn strategy_does_not_change_the_count() {
        for x in 3..=9 {
            let y = 3 * (x - 2) + 1;
            for strategy in [Strategy::Fan, Strategy::Zigzag, Strategy::Seeded(x as u64)] {
                let (g, d) = construct_extremal_with(x, y, strategy).unwrap();
                assert_eq!(g.edge_count(), 3 * x + 2 * y - 6, "{x} {strategy}");
                assert!(d.is_one_disk(), "{x} {strategy}");
            }
        }
    }
}
