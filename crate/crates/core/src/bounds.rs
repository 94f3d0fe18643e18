//! Closed-form edge bounds for bipartite and 1-planar graphs.
//!
//! `one_disk_max_edges` is the bound for bipartite graphs with a 1-disk
//! drawing; the others are the classical and literature bounds it sits among.
//! [`check`] evaluates a concrete graph (and optionally a drawing) against all
//! of them.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::drawing::Drawing;
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{bound} bound is defined for {domain} (got {got})")]
    OutOfDomain {
        bound: &'static str,
        domain: &'static str,
        got: String,
    },
}

fn parts_domain(bound: &'static str, x: usize, y: usize) -> Result<(), BoundsError> {
    if 2 <= x && x <= y {
        Ok(())
    } else {
        Err(BoundsError::OutOfDomain {
            bound,
            domain: "2 <= x <= y",
            got: format!("x = {x}, y = {y}"),
        })
    }
}

/// `2(x + y) + x - 6` for a bipartite graph with a 1-disk drawing on X.
pub fn one_disk_max_edges(x: usize, y: usize) -> Result<usize, BoundsError> {
    parts_domain("one-disk", x, y)?;
    Ok(3 * x + 2 * y - 6)
}

/// `2(x + y) + 4x - 12` for bipartite 1-planar graphs.
pub fn huang_max_edges(x: usize, y: usize) -> Result<usize, BoundsError> {
    parts_domain("huang", x, y)?;
    Ok(2 * (x + y) + 4 * x - 12)
}

/// `2(x + y) + 6x - 16` for bipartite 1-planar graphs.
pub fn czap_max_edges(x: usize, y: usize) -> Result<usize, BoundsError> {
    parts_domain("czap", x, y)?;
    Ok(2 * (x + y) + 6 * x - 16)
}

/// Bipartite 1-planar graphs on `n` vertices: `3n - 8` for even `n != 6`,
/// otherwise `3n - 9`.
pub fn karpov_max_edges(n: usize) -> Result<usize, BoundsError> {
    if n < 4 {
        return Err(BoundsError::OutOfDomain {
            bound: "karpov",
            domain: "n >= 4",
            got: format!("n = {n}"),
        });
    }
    Ok(if n.is_multiple_of(2) && n != 6 {
        3 * n - 8
    } else {
        3 * n - 9
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicKind {
    Planar,
    BipartitePlanar,
    OnePlanar,
}

pub fn classic_max_edges(kind: ClassicKind, n: usize) -> Result<usize, BoundsError> {
    if n < 3 {
        return Err(BoundsError::OutOfDomain {
            bound: "classic",
            domain: "n >= 3",
            got: format!("n = {n}"),
        });
    }
    Ok(match kind {
        ClassicKind::Planar => 3 * n - 6,
        ClassicKind::BipartitePlanar => 2 * n - 4,
        ClassicKind::OnePlanar => 4 * n - 8,
    })
}

/// `2y + 5x/3 - 2`, exactly.
pub fn problem_target_edges(x: usize, y: usize) -> Ratio<i64> {
    let (x, y) = (x as i64, y as i64);
    Ratio::from_integer(2 * y - 2) + Ratio::new(5 * x, 3)
}

/// One row of a [`BoundsReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub applicable: bool,
    pub limit: Option<usize>,
    pub actual: usize,
    pub tight: bool,
    pub violated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub x_count: usize,
    pub y_count: usize,
    pub edge_count: usize,
    pub one_planar_drawing: bool,
    pub one_disk_drawing: bool,
    pub entries: Vec<BoundEntry>,
    /// The `2y + 5x/3 - 2` target, as `p/q`. Informational, never enforced.
    pub problem_target: String,
    pub exceeds_problem_target: bool,
}

impl BoundsReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.violated)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }
}

fn entry(name: &'static str, applicable: bool, limit: Option<usize>, actual: usize) -> BoundEntry {
    let applicable = applicable && limit.is_some();
    let tight = applicable && limit == Some(actual);
    let violated = applicable && limit.is_some_and(|l| actual > l);
    BoundEntry {
        name,
        applicable,
        limit,
        actual,
        tight,
        violated,
    }
}

/// Compares `g` against every bound whose hypotheses are certified.
///
/// Bounds that need 1-planarity are applicable only with a drawing of `g`
/// that verifies; the planar bounds need a crossing-free one; the 1-disk
/// bound needs a face on all of X. Without a drawing only the limits are
/// reported.
pub fn check(g: &BipartiteGraph, d: Option<&Drawing>) -> BoundsReport {
    let (x, y, m) = (g.x_count(), g.y_count(), g.edge_count());
    let n = g.vertex_count();
    let d = d.filter(|d| d.graph() == g);
    let one_planar = d.is_some_and(Drawing::is_one_planar);
    let planar = one_planar && d.is_some_and(|d| d.crossing_count() == 0);
    let one_disk = one_planar && d.is_some_and(Drawing::is_one_disk);
    let (small, large) = (x.min(y), x.max(y));

    let entries = vec![
        entry("one_disk", one_disk, one_disk_max_edges(x, y).ok(), m),
        entry("huang", one_planar, huang_max_edges(small, large).ok(), m),
        entry("czap", one_planar, czap_max_edges(small, large).ok(), m),
        entry("karpov", one_planar, karpov_max_edges(n).ok(), m),
        entry(
            "one_planar",
            one_planar,
            classic_max_edges(ClassicKind::OnePlanar, n).ok(),
            m,
        ),
        entry("planar", planar, classic_max_edges(ClassicKind::Planar, n).ok(), m),
        entry(
            "bipartite_planar",
            planar,
            classic_max_edges(ClassicKind::BipartitePlanar, n).ok(),
            m,
        ),
    ];
    let target = problem_target_edges(x, y);
    BoundsReport {
        x_count: x,
        y_count: y,
        edge_count: m,
        one_planar_drawing: one_planar,
        one_disk_drawing: one_disk,
        entries,
        problem_target: target.to_string(),
        exceeds_problem_target: Ratio::from_integer(m as i64) > target,
    }
}
