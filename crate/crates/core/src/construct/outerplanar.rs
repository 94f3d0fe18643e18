//! Maximal outerplanar skeletons on a convex polygon.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ConstructError;
use crate::embedding::{self, FaceWalk, NodeId};

/// How the polygon is triangulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// All chords from vertex 0.
    #[default]
    Fan,
    /// Chords alternating between the two ends of a shrinking strip.
    Zigzag,
    /// Uniformly random apex per recursive split, reproducible from the seed.
    Seeded(u64),
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Fan => write!(f, "fan"),
            Strategy::Zigzag => write!(f, "zigzag"),
            Strategy::Seeded(s) => write!(f, "seed:{s}"),
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fan" => Ok(Strategy::Fan),
            "zigzag" => Ok(Strategy::Zigzag),
            _ => s
                .strip_prefix("seed:")
                .and_then(|n| n.parse().ok())
                .map(Strategy::Seeded)
                .ok_or_else(|| format!("unknown strategy `{s}` (expected fan, zigzag or seed:N)")),
        }
    }
}

/// A maximal outerplanar graph on `k` black vertices placed counter-clockwise
/// on a convex polygon, together with its faces.
#[derive(Debug, Clone)]
pub struct OuterplanarSkeleton {
    k: usize,
    edges: Vec<(NodeId, NodeId)>,
    rotation: Vec<Vec<NodeId>>,
    outer_face: FaceWalk,
    triangles: Vec<FaceWalk>,
}

impl OuterplanarSkeleton {
    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn rotation(&self) -> &[Vec<NodeId>] {
        &self.rotation
    }

    /// The walk `0 -> 1 -> ... -> k-1 -> 0` around the polygon.
    pub fn outer_face(&self) -> &FaceWalk {
        &self.outer_face
    }

    pub fn triangles(&self) -> &[FaceWalk] {
        &self.triangles
    }
}

fn fan_chords(k: usize) -> Vec<(NodeId, NodeId)> {
    (2..k - 1).map(|i| (0, i)).collect()
}

fn zigzag_chords(k: usize) -> Vec<(NodeId, NodeId)> {
    let (mut lo, mut hi) = (0, k - 1);
    let mut chords = Vec::new();
    let mut advance_low = true;
    while hi - lo > 2 {
        if advance_low {
            lo += 1;
        } else {
            hi -= 1;
        }
        chords.push((lo, hi));
        advance_low = !advance_low;
    }
    chords
}

fn seeded_chords(k: usize, seed: u64) -> Vec<(NodeId, NodeId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chords = Vec::new();
    let mut pending = vec![(0, k - 1)];
    while let Some((a, b)) = pending.pop() {
        if b - a < 2 {
            continue;
        }
        let apex = rng.gen_range(a + 1..b);
        for (u, v) in [(a, apex), (apex, b)] {
            if v - u >= 2 {
                chords.push((u, v));
                pending.push((u, v));
            }
        }
    }
    chords.sort_unstable();
    chords
}

pub fn maximal_outerplanar(k: usize, strategy: Strategy) -> Result<OuterplanarSkeleton, ConstructError> {
    if k < 3 {
        return Err(ConstructError::KTooSmall(k));
    }
    let mut edges: Vec<(NodeId, NodeId)> = (0..k).map(|i| (i.min((i + 1) % k), i.max((i + 1) % k))).collect();
    edges.extend(match strategy {
        Strategy::Fan => fan_chords(k),
        Strategy::Zigzag => zigzag_chords(k),
        Strategy::Seeded(seed) => seeded_chords(k, seed),
    });
    edges.sort_unstable();
    let rotation = embedding::convex_rotation(k, &edges);
    let faces = embedding::trace_faces(&rotation);
    let (outer, inner): (Vec<_>, Vec<_>) = faces.into_iter().partition(|f| f.darts().contains(&(0, 1)));
    let outer_face = outer.into_iter().next().expect("polygon side 0-1 lies on some face");
    debug_assert_eq!(outer_face.len(), k);
    debug_assert!(inner.iter().all(|f| f.len() == 3));
    Ok(OuterplanarSkeleton {
        k,
        edges,
        rotation,
        outer_face,
        triangles: inner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let s = maximal_outerplanar(3, Strategy::Fan).unwrap();
        assert_eq!(s.edge_count(), 3);
        assert_eq!(s.triangles().len(), 1);
        assert_eq!(s.outer_face().len(), 3);
    }

    #[test]
    fn fan_on_five() {
        let s = maximal_outerplanar(5, Strategy::Fan).unwrap();
        assert_eq!(s.edge_count(), 7);
        assert_eq!(s.triangles().len(), 3);
        assert!(s.edges().contains(&(0, 2)) && s.edges().contains(&(0, 3)));
    }

    #[test]
    fn four_vertices_any_strategy() {
        for strategy in [
            Strategy::Fan,
            Strategy::Zigzag,
            Strategy::Seeded(7),
            Strategy::Seeded(8),
        ] {
            let s = maximal_outerplanar(4, strategy).unwrap();
            assert_eq!(s.edge_count(), 5, "{strategy}");
            assert_eq!(s.triangles().len(), 2, "{strategy}");
        }
    }

    #[test]
    fn too_small() {
        assert_eq!(
            maximal_outerplanar(2, Strategy::Fan).unwrap_err(),
            ConstructError::KTooSmall(2)
        );
    }

    #[test]
    fn outer_face_is_the_polygon() {
        let s = maximal_outerplanar(7, Strategy::Zigzag).unwrap();
        let nodes: Vec<_> = s.outer_face().nodes().collect();
        let start = nodes.iter().position(|&u| u == 0).unwrap();
        let rotated: Vec<_> = nodes[start..].iter().chain(&nodes[..start]).copied().collect();
        assert_eq!(rotated, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("fan".parse::<Strategy>().unwrap(), Strategy::Fan);
        assert_eq!("zigzag".parse::<Strategy>().unwrap(), Strategy::Zigzag);
        assert_eq!("seed:42".parse::<Strategy>().unwrap(), Strategy::Seeded(42));
        assert!("seed:x".parse::<Strategy>().is_err());
        assert_eq!(Strategy::Seeded(3).to_string(), "seed:3");
    }

    mod props {
        use super::super::Strategy;
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn every_strategy_is_maximal(k in 3usize..40, seed in any::<u64>(), pick in 0u8..3) {
                let strategy = match pick {
                    0 => Strategy::Fan,
                    1 => Strategy::Zigzag,
                    _ => Strategy::Seeded(seed),
                };
                let s = maximal_outerplanar(k, strategy).unwrap();
                prop_assert_eq!(s.edge_count(), 2 * k - 3);
                prop_assert_eq!(s.triangles().len(), k - 2);
                prop_assert!(s.triangles().iter().all(|t| t.len() == 3));
                prop_assert_eq!(embedding::count_faces(s.rotation()), k - 1);
            }
        }
    }
}
