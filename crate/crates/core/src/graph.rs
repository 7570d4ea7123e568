//! Finite truncations of the associated graph `Γ` of `ℛ_s`.
//!
//! Vertices are all points whose value is at most the bound; edges are the
//! steps of the admissible paths whose partition sums to at most the bound.
//! Edges are kept directed (path direction) while components are taken on the
//! undirected closure.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{for_each_triple_upto, paths_for_triple};
use crate::polygonal::PolygonOrder;
use crate::representation::{Coord, Representation};

/// Largest vertex count [`build_graph`] will allocate.
pub const VERTEX_BUDGET: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub i: u64,
    pub j: u64,
    pub value: u64,
    pub component: u64,
    pub nontrivial: bool,
}

impl VertexRecord {
    pub fn coord(&self) -> Coord {
        Coord::new(self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedGraph {
    s: PolygonOrder,
    max: u64,
    /// Sorted by coordinate.
    vertices: Vec<VertexRecord>,
    /// Sorted, without duplicates.
    edges: Vec<(Coord, Coord)>,
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    s: u64,
    #[serde(rename = "N")]
    max: u64,
    vertices: Vec<VertexRecord>,
    edges: Vec<[u64; 4]>,
}

impl TruncatedGraph {
    pub fn order(&self) -> PolygonOrder {
        self.s
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn vertices(&self) -> &[VertexRecord] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Coord, Coord)] {
        &self.edges
    }

    pub fn vertex(&self, c: Coord) -> Option<&VertexRecord> {
        self.vertices
            .binary_search_by(|v| v.coord().cmp(&c))
            .ok()
            .map(|k| &self.vertices[k])
    }

    pub fn has_edge(&self, from: Coord, to: Coord) -> bool {
        self.edges.binary_search(&(from, to)).is_ok()
    }

    pub fn component_count(&self) -> u64 {
        self.vertices
            .iter()
            .map(|v| v.component + 1)
            .max()
            .unwrap_or(0)
    }

    /// Graphviz digraph; node `v_i_j` is labelled `(i,j):value`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph gamma_{} {{", self.s);
        for v in &self.vertices {
            let _ = writeln!(
                out,
                "  v_{}_{} [label=\"({},{}):{}\"]",
                v.i, v.j, v.i, v.j, v.value
            );
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  v_{}_{} -> v_{}_{}", a.i, a.j, b.i, b.j);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDocument {
            s: self.s.get(),
            max: self.max,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|(a, b)| [a.i, a.j, b.i, b.j])
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        let s = PolygonOrder::new(doc.s)?;
        let g = TruncatedGraph {
            s,
            max: doc.max,
            vertices: doc.vertices,
            edges: doc
                .edges
                .iter()
                .map(|e| (Coord::new(e[0], e[1]), Coord::new(e[2], e[3])))
                .collect(),
        };
        if !g.vertices.windows(2).all(|w| w[0].coord() < w[1].coord()) {
            return Err(Error::Document("vertices are not strictly sorted".into()));
        }
        if !g.edges.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Document("edges are not strictly sorted".into()));
        }
        if let Some((a, b)) = g
            .edges
            .iter()
            .find(|(a, b)| g.vertex(*a).is_none() || g.vertex(*b).is_none())
        {
            return Err(Error::Document(format!(
                "edge {a}->{b} leaves the vertex set"
            )));
        }
        Ok(g)
    }
}

fn vertex_count(rep: &Representation, max: u64) -> u128 {
    let rest = max - rep.base();
    (0..=rest / rep.ci())
        .map(|i| u128::from((rest - rep.ci() * i) / rep.cj()) + 1)
        .sum()
}

/// Builds the truncation of `Γ` to values `≤ max` under `ℛ_s`.
pub fn build_graph(s: PolygonOrder, max: u64) -> Result<TruncatedGraph> {
    if max < 3 {
        return Err(Error::GraphBound(max));
    }
    let rep = Representation::standard(s);
    let needed = vertex_count(&rep, max);
    if needed > VERTEX_BUDGET {
        return Err(Error::Budget {
            what: "graph vertices",
            needed,
            budget: VERTEX_BUDGET as u64,
        });
    }

    let rest = max - rep.base();
    let mut coords = Vec::with_capacity(needed as usize);
    for i in 0..=rest / rep.ci() {
        for j in 0..=(rest - rep.ci() * i) / rep.cj() {
            coords.push(Coord::new(i, j));
        }
    }

    let mut steps: HashSet<(Coord, Coord)> = HashSet::new();
    let mut broken: Option<Error> = None;
    for_each_triple_upto(s, max, |t, _, _| {
        for p in paths_for_triple(t) {
            match p.partial_sums(s) {
                Ok(sums) => {
                    let off = p
                        .vertices()
                        .iter()
                        .zip(&sums)
                        .find(|(v, want)| rep.value(**v).ok() != Some(**want));
                    if let Some((v, want)) = off {
                        broken.get_or_insert(Error::Invariant(format!(
                            "vertex {v} on {p} should carry {want}"
                        )));
                    }
                }
                Err(e) => {
                    broken.get_or_insert(e);
                }
            }
            steps.extend(p.vertices().windows(2).map(|w| (w[0], w[1])));
        }
    });
    if let Some(e) = broken {
        return Err(e);
    }
    let mut edges: Vec<_> = steps.into_iter().collect();
    edges.sort_unstable();

    let index = |c: Coord| {
        coords
            .binary_search(&c)
            .expect("path vertices lie in the truncation")
    };
    let mut components = UnionFind::<usize>::new(coords.len());
    let mut nontrivial = vec![false; coords.len()];
    for (a, b) in &edges {
        let (x, y) = (index(*a), index(*b));
        components.union(x, y);
        nontrivial[x] = true;
        nontrivial[y] = true;
    }

    // components are numbered by their smallest vertex
    let mut ids = vec![u64::MAX; coords.len()];
    let mut next = 0;
    let vertices = coords
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let root = components.find_mut(k);
            if ids[root] == u64::MAX {
                ids[root] = next;
                next += 1;
            }
            VertexRecord {
                i: c.i,
                j: c.j,
                value: rep.value(*c).expect("bounded by max"),
                component: ids[root],
                nontrivial: nontrivial[k],
            }
        })
        .collect();

    Ok(TruncatedGraph {
        s,
        max,
        vertices,
        edges,
    })
}

/// Every value carried by some vertex of a non-trivial component.
pub fn nontrivial_values(g: &TruncatedGraph) -> BTreeSet<u64> {
    g.vertices
        .iter()
        .filter(|v| v.nontrivial)
        .map(|v| v.value)
        .collect()
}
