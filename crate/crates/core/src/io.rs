//! JSON documents for graphs and drawings.
//!
//! ```json
//! { "schema": "onedisk.graph", "version": 1, "x_count": 2, "y_count": 2,
//!   "edges": [[0, 2], [0, 3], [1, 2], [1, 3]] }
//! ```
//!
//! A drawing document embeds a graph document and adds `crossings` (pairs of
//! edge indices into the sorted edge list), `rotation` (per planarization
//! node, counter-clockwise segment ids) and optionally `one_disk_face`, the
//! index of a traced face that visits all of X. Loading always rebuilds and
//! re-validates the drawing.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::{Drawing, DrawingError};
use crate::graph::{BipartiteGraph, EdgeId, GraphError};

pub const GRAPH_SCHEMA: &str = "onedisk.graph";
pub const DRAWING_SCHEMA: &str = "onedisk.drawing";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported document: expected schema `{expected}` version {SCHEMA_VERSION}, found `{found}` version {version}")]
    Schema {
        expected: &'static str,
        found: String,
        version: u32,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(#[from] GraphError),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(#[from] DrawingError),
    #[error("face {0} does not visit every X vertex")]
    NotOneDiskFace(usize),
}

impl IoError {
    /// Document parsed but its content fails validation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            IoError::InvalidGraph(_) | IoError::InvalidDrawing(_) | IoError::NotOneDiskFace(_)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema: String,
    pub version: u32,
    pub x_count: usize,
    pub y_count: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingDocument {
    pub schema: String,
    pub version: u32,
    pub graph: GraphDocument,
    pub crossings: Vec<[usize; 2]>,
    pub rotation: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_disk_face: Option<usize>,
}

fn check_schema(expected: &'static str, found: &str, version: u32) -> Result<(), IoError> {
    if found != expected || version != SCHEMA_VERSION {
        return Err(IoError::Schema {
            expected,
            found: found.to_owned(),
            version,
        });
    }
    Ok(())
}

impl GraphDocument {
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        Self {
            schema: GRAPH_SCHEMA.to_owned(),
            version: SCHEMA_VERSION,
            x_count: g.x_count(),
            y_count: g.y_count(),
            edges: g.edges().iter().map(|&(a, b)| [a.0, b.0]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<BipartiteGraph, IoError> {
        check_schema(GRAPH_SCHEMA, &self.schema, self.version)?;
        Ok(BipartiteGraph::new(
            self.x_count,
            self.y_count,
            self.edges.iter().map(|&[a, b]| (a, b)),
        )?)
    }
}

impl DrawingDocument {
    pub fn from_drawing(d: &Drawing) -> Self {
        Self {
            schema: DRAWING_SCHEMA.to_owned(),
            version: SCHEMA_VERSION,
            graph: GraphDocument::from_graph(d.graph()),
            crossings: d.crossings().iter().map(|c| [c.edge_a.0, c.edge_b.0]).collect(),
            rotation: (0..d.node_count()).map(|u| d.segment_rotation(u)).collect(),
            one_disk_face: d.one_disk_face_index(),
        }
    }

    pub fn to_drawing(&self) -> Result<Drawing, IoError> {
        check_schema(DRAWING_SCHEMA, &self.schema, self.version)?;
        let graph = self.graph.to_graph()?;
        let crossings = self.crossings.iter().map(|&[a, b]| (EdgeId(a), EdgeId(b))).collect();
        let d = Drawing::from_segment_rotation(graph, crossings, self.rotation.clone())?;
        if let Some(face) = self.one_disk_face {
            let ok = d
                .faces()
                .get(face)
                .is_some_and(|f| (0..d.graph().x_count()).all(|u| f.visits(u)));
            if !ok {
                return Err(IoError::NotOneDiskFace(face));
            }
        }
        Ok(d)
    }
}

pub fn graph_to_json(g: &BipartiteGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDocument::from_graph(g)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn graph_from_json(text: &str) -> Result<BipartiteGraph, IoError> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

pub fn drawing_to_json(d: &Drawing) -> String {
    let mut s = serde_json::to_string_pretty(&DrawingDocument::from_drawing(d)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn drawing_from_json(text: &str) -> Result<Drawing, IoError> {
    serde_json::from_str::<DrawingDocument>(text)?.to_drawing()
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File {
        path: path.to_owned(),
        source,
    })
}

pub fn save_graph(path: impl AsRef<Path>, g: &BipartiteGraph) -> Result<(), IoError> {
    write(path.as_ref(), &graph_to_json(g))
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<BipartiteGraph, IoError> {
    graph_from_json(&read(path.as_ref())?)
}

pub fn save_drawing(path: impl AsRef<Path>, d: &Drawing) -> Result<(), IoError> {
    write(path.as_ref(), &drawing_to_json(d))
}

pub fn load_drawing(path: impl AsRef<Path>) -> Result<Drawing, IoError> {
    drawing_from_json(&read(path.as_ref())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_extremal;

    #[test]
    fn extremal_drawing_round_trips() {
        let (g, d) = construct_extremal(3, 3).unwrap();
        let text = drawing_to_json(&d);
        let back = drawing_from_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(drawing_to_json(&back), text);
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn repeated_crossing_edge_is_a_validation_error() {
        let (_, d) = construct_extremal(3, 3).unwrap();
        let mut doc = DrawingDocument::from_drawing(&d);
        let first = doc.crossings[0];
        doc.crossings[1][0] = first[0];
        let err = doc.to_drawing().unwrap_err();
        assert!(
            matches!(err, IoError::InvalidDrawing(DrawingError::EdgeCrossedTwice(_))),
            "{err}"
        );
        assert!(err.is_validation());
    }

    #[test]
    fn bad_json_is_a_parse_error() {
        let err = drawing_from_json("{ \"schema\": ").unwrap_err();
        assert!(matches!(err, IoError::Parse(_)));
        assert!(!err.is_validation());
        let err = graph_from_json(
            r#"{"schema":"onedisk.graph","version":1,"x_count":1,"y_count":1,"edges":[[0,1]],"extra":0}"#,
        )
        .unwrap_err();
        assert!(matches!(err, IoError::Parse(_)));
        let err =
            graph_from_json(r#"{"schema":"onedisk.graph","version":1,"x_count":1,"y_count":1,"edges":[[0,1.5]]}"#)
                .unwrap_err();
        assert!(matches!(err, IoError::Parse(_)));
    }

    #[test]
    fn wrong_schema_is_rejected() {
        let err = graph_from_json(r#"{"schema":"other","version":1,"x_count":1,"y_count":1,"edges":[]}"#).unwrap_err();
        assert!(matches!(err, IoError::Schema { .. }));
    }

    #[test]
    fn same_part_edge_is_a_validation_error() {
        let err = graph_from_json(r#"{"schema":"onedisk.graph","version":1,"x_count":2,"y_count":1,"edges":[[0,1]]}"#)
            .unwrap_err();
        assert!(matches!(err, IoError::InvalidGraph(GraphError::SamePartEdge(0, 1))));
    }

    #[test]
    fn false_one_disk_face_is_rejected() {
        let (_, d) = construct_extremal(3, 3).unwrap();
        let mut doc = DrawingDocument::from_drawing(&d);
        let wrong = (0..d.faces().len())
            .find(|&i| Some(i) != d.one_disk_face_index() && !(0..3).all(|u| d.faces()[i].visits(u)));
        doc.one_disk_face = wrong;
        assert!(matches!(doc.to_drawing(), Err(IoError::NotOneDiskFace(_))));
    }
}
