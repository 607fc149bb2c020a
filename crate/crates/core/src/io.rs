//! Edge-list ingestion and CSV emission.
//!
//! Edge lists: one `label label` pair per line, whitespace separated. Lines
//! starting with `#` and blank lines are skipped. Labels are opaque strings
//! mapped to dense ids in first-appearance order.

use std::io::{BufRead, Write};

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Node labels in id order; a label's index in the set is its node id.
pub type LabelSet = IndexSet<String>;

#[derive(Debug, Clone, Default)]
pub struct IngestReport {
    pub nodes_kept: usize,
    pub edges_kept: usize,
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
    /// External label for each node id; the set index is the id.
    pub label_map: LabelSet,
}

impl IngestReport {
    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.label_map.get_index(id as usize).map(String::as_str)
    }

    pub fn id_of(&self, label: &str) -> Option<NodeId> {
        self.label_map.get_index_of(label).map(|i| i as NodeId)
    }

    /// Edge lines that produced a pair, before dedup.
    pub fn input_edge_lines(&self) -> usize {
        self.edges_kept + self.duplicates_dropped + self.self_loops_dropped
    }
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(Graph, IngestReport)> {
    let mut labels = LabelSet::new();
    let mut pairs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!(
                    "expected 2 tokens, found {}",
                    trimmed.split_whitespace().count()
                ),
            });
        };
        let u = labels.insert_full(a.to_owned()).0 as NodeId;
        let v = labels.insert_full(b.to_owned()).0 as NodeId;
        pairs.push((u, v));
    }
    if pairs.is_empty() {
        return Err(Error::NoEdges);
    }
    let (graph, built) = Graph::from_edges(labels.len(), pairs)?;
    let report = IngestReport {
        nodes_kept: graph.node_count(),
        edges_kept: graph.edge_count(),
        duplicates_dropped: built.duplicates_dropped,
        self_loops_dropped: built.self_loops_dropped,
        label_map: labels,
    };
    Ok((graph, report))
}

/// Writes one `u v` line per edge. Node ids are used as labels unless
/// `labels` is given, in which case `labels[id]` is written.
pub fn write_edge_list<W: Write>(
    graph: &Graph,
    labels: Option<&LabelSet>,
    mut out: W,
) -> Result<()> {
    for (u, v) in graph.edges() {
        match labels {
            Some(l) => writeln!(out, "{} {}", l[u as usize], l[v as usize])?,
            None => writeln!(out, "{u} {v}")?,
        }
    }
    out.flush()?;
    Ok(())
}

/// Writes `header.0,header.1` then one `x,y` row per point.
///
/// Reals use the shortest representation that parses back to the same
/// `f64`, so re-reading the file is lossless.
pub fn write_curve_csv<W: Write>(
    curve: &[(f64, f64)],
    header: (&str, &str),
    mut out: W,
) -> Result<()> {
    if let Some(&(x, y)) = curve.iter().find(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::param(format!("non-finite curve point ({x}, {y})")));
    }
    if curve.windows(2).any(|w| w[1].0 < w[0].0) {
        return Err(Error::param("curve x values must be non-decreasing"));
    }
    writeln!(out, "{},{}", header.0, header.1)?;
    for (x, y) in curve {
        writeln!(out, "{x},{y}")?;
    }
    out.flush()?;
    Ok(())
}

/// Column names of a two-column curve file.
pub type CsvHeader = (String, String);

/// Reads a two-column CSV produced by [`write_curve_csv`].
pub fn parse_curve_csv<R: BufRead>(reader: R) -> Result<(CsvHeader, Vec<(f64, f64)>)> {
    let mut lines = reader.lines();
    let header = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })??;
    let (hx, hy) = header.split_once(',').ok_or(Error::Parse {
        line: 1,
        message: "header must have two columns".into(),
    })?;
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let bad = |message: String| Error::Parse {
            line: i + 2,
            message,
        };
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| bad("expected x,y".into()))?;
        let x: f64 = x.parse().map_err(|e| bad(format!("{x:?}: {e}")))?;
        let y: f64 = y.parse().map_err(|e| bad(format!("{y:?}: {e}")))?;
        points.push((x, y));
    }
    Ok(((hx.to_owned(), hy.to_owned()), points))
}
