//! Immutable weighted undirected networks and DIMACS-style ingestion.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::weight::{Weight, WeightParseError};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Weighted undirected graph in compressed adjacency form.
///
/// Every edge is stored in both endpoints' lists with the same weight.
/// Self-loops and parallel edges never survive construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    weights: Vec<Weight>,
}

impl Network {
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()]
            .iter()
            .zip(&self.weights[range])
            .map(|(&u, &w)| (u as usize, w))
    }

    /// Each undirected edge once, as `(lo, hi, weight)` with `lo < hi`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Weight)> + '_ {
        (0..self.vertex_count()).flat_map(move |v| {
            self.neighbors(v)
                .filter(move |&(u, _)| u > v)
                .map(move |(u, w)| (v, u, w))
        })
    }

    /// Serializes in the same DIMACS dialect `load_network` reads. Vertex ids
    /// are written 1-based.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p sp {} {}", self.vertex_count(), self.edge_count());
        for (a, b, w) in self.edges() {
            let _ = writeln!(out, "a {} {} {}", a + 1, b + 1, w);
        }
        out
    }
}

/// Accumulates edges and normalizes them into a [`Network`].
#[derive(Clone, Debug)]
pub struct NetworkBuilder {
    n: usize,
    edges: BTreeMap<(u32, u32), Weight>,
}

impl NetworkBuilder {
    pub fn new(n: usize) -> Self {
        assert!(n < u32::MAX as usize, "too many vertices");
        NetworkBuilder {
            n,
            edges: BTreeMap::new(),
        }
    }

    /// Adds an undirected edge. Self-loops are dropped and duplicates keep
    /// the minimum weight.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId, w: Weight) -> &mut Self {
        assert!(a < self.n && b < self.n, "edge endpoint out of range");
        if a == b {
            return self;
        }
        let key = (a.min(b) as u32, a.max(b) as u32);
        self.edges
            .entry(key)
            .and_modify(|old| *old = (*old).min(w))
            .or_insert(w);
        self
    }

    pub fn build(&self) -> Network {
        let mut degree = vec![0usize; self.n];
        for &(a, b) in self.edges.keys() {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(self.n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let total = *offsets.last().unwrap();
        let mut targets = vec![0u32; total];
        let mut weights = vec![Weight::ZERO; total];
        let mut cursor = offsets[..self.n].to_vec();
        for (&(a, b), &w) in &self.edges {
            for (v, u) in [(a, b), (b, a)] {
                let slot = cursor[v as usize];
                targets[slot] = u;
                weights[slot] = w;
                cursor[v as usize] += 1;
            }
        }
        let mut net = Network {
            offsets,
            targets,
            weights,
        };
        net.sort_lists();
        net
    }
}

impl Network {
    fn sort_lists(&mut self) {
        for v in 0..self.vertex_count() {
            let range = self.offsets[v]..self.offsets[v + 1];
            let mut pairs: Vec<(u32, Weight)> = self.targets[range.clone()]
                .iter()
                .copied()
                .zip(self.weights[range.clone()].iter().copied())
                .collect();
            pairs.sort_unstable();
            for (slot, (u, w)) in range.zip(pairs) {
                self.targets[slot] = u;
                self.weights[slot] = w;
            }
        }
    }
}

/// Counts reported by [`load_network`] alongside the normalized graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadReport {
    pub declared_edges: usize,
    pub arc_lines: usize,
    pub self_loops: usize,
}

/// Reads a DIMACS shortest-path file.
///
/// Comment lines start with `c`; one `p sp <n> <m>` header must precede the
/// `a <u> <v> <w>` arc lines. Arcs are treated as undirected edges.
pub fn load_network(text: &str) -> Result<(Network, LoadReport)> {
    let mut builder: Option<NetworkBuilder> = None;
    let mut report = LoadReport {
        declared_edges: 0,
        arc_lines: 0,
        self_loops: 0,
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if builder.is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: "duplicate problem line".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "sp" {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `p sp <n> <m>`".into(),
                    });
                }
                let n: usize = parse_count(fields[2], line)?;
                report.declared_edges = parse_count(fields[3], line)?;
                builder = Some(NetworkBuilder::new(n));
            }
            "a" => {
                let b = builder.as_mut().ok_or_else(|| Error::Parse {
                    line,
                    msg: "arc before problem line".into(),
                })?;
                if fields.len() != 4 {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `a <u> <v> <w>`".into(),
                    });
                }
                let u = parse_vertex(fields[1], b.n, line)?;
                let v = parse_vertex(fields[2], b.n, line)?;
                let w = Weight::parse_decimal(fields[3]).map_err(|e| match e {
                    WeightParseError::Negative => {
                        Error::Domain(format!("line {line}: negative weight {}", fields[3]))
                    }
                    other => Error::Parse {
                        line,
                        msg: format!("{other}: {}", fields[3]),
                    },
                })?;
                report.arc_lines += 1;
                if u == v {
                    report.self_loops += 1;
                }
                b.add_edge(u, v, w);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown record type `{other}`"),
                });
            }
        }
    }
    let builder = builder.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    Ok((builder.build(), report))
}

fn parse_count(field: &str, line: usize) -> Result<usize> {
    field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad count `{field}`"),
    })
}

fn parse_vertex(field: &str, n: usize, line: usize) -> Result<VertexId> {
    let id: i64 = field.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad vertex id `{field}`"),
    })?;
    if id < 1 || id as u64 > n as u64 {
        return Err(Error::Range { line, id, n });
    }
    Ok((id - 1) as usize)
}
