//! The 1-skeleton of the associahedron on the vertex set `Y_n`, face counts
//! through partial triangulations, and deterministic graph export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::triangulation::Diagonal;

/// Largest `n` accepted by [`FlipGraph::build`].
pub const GRAPH_LIMIT: usize = 9;
/// Largest `n` accepted by [`count_faces`].
pub const FACE_LIMIT: usize = 7;

pub const GRAPH_SCHEMA: &str = "assoc.graph.v1";

/// `Catalan(n) = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Flip graph of the diagrams in `Y_n`, i.e. the 1-skeleton of `As^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipGraph {
    pub n: usize,
    /// Sorted.
    pub vertices: Vec<Partition>,
    /// Each edge stored once with the smaller endpoint first.
    pub edges: BTreeSet<(Partition, Partition)>,
}

impl FlipGraph {
    pub fn build(n: usize) -> Result<FlipGraph> {
        if !(1..=GRAPH_LIMIT).contains(&n) {
            return Err(Error::BudgetExceeded(format!(
                "flip graphs supported for 1 <= n <= {GRAPH_LIMIT}, got {n}"
            )));
        }
        let vertices = Partition::all_fitting(n);
        let mut edges = BTreeSet::new();
        for p in &vertices {
            for q in p.flip_neighbors(n)? {
                if *p < q {
                    edges.insert((p.clone(), q));
                }
            }
        }
        Ok(FlipGraph { n, vertices, edges })
    }

    pub fn has_edge(&self, p: &Partition, q: &Partition) -> bool {
        if p <= q {
            self.edges.contains(&(p.clone(), q.clone()))
        } else {
            self.edges.contains(&(q.clone(), p.clone()))
        }
    }

    pub fn adjacency(&self) -> BTreeMap<&Partition, BTreeSet<&Partition>> {
        let mut adj: BTreeMap<&Partition, BTreeSet<&Partition>> =
            self.vertices.iter().map(|v| (v, BTreeSet::new())).collect();
        for (p, q) in &self.edges {
            adj.entry(p).or_default().insert(q);
            adj.entry(q).or_default().insert(p);
        }
        adj
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adjacency().values().all(|nb| nb.len() == degree)
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let Some(start) = self.vertices.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Edges of `self` whose endpoints both lie in `vertices`.
    pub fn induced_edges(&self, vertices: &BTreeSet<Partition>) -> BTreeSet<(Partition, Partition)> {
        self.edges
            .iter()
            .filter(|(p, q)| vertices.contains(p) && vertices.contains(q))
            .cloned()
            .collect()
    }

    pub fn to_export(&self) -> ExportGraph {
        let index: BTreeMap<&Partition, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        ExportGraph {
            kind: "flip-graph".into(),
            name: format!("Y_{}", self.n),
            vertices: self.vertices.iter().map(ToString::to_string).collect(),
            edges: self
                .edges
                .iter()
                .map(|(p, q)| (index[p], index[q]))
                .collect(),
        }
    }

    pub fn export(&self, format: ExportFormat) -> String {
        self.to_export().render(format)
    }

    /// Inverse of the adjacency-json export.
    pub fn from_adjacency_json(text: &str) -> Result<FlipGraph> {
        let g = ExportGraph::from_adjacency_json(text)?;
        let n = g
            .name
            .strip_prefix("Y_")
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("not a flip graph name: {:?}", g.name)))?;
        let vertices = g
            .vertices
            .iter()
            .map(|s| s.parse::<Partition>())
            .collect::<Result<Vec<_>>>()?;
        let edges = g
            .edges
            .iter()
            .map(|&(i, j)| {
                let (p, q) = (vertices[i].clone(), vertices[j].clone());
                if p < q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        let mut vertices = vertices;
        vertices.sort();
        Ok(FlipGraph { n, vertices, edges })
    }
}

/// True iff the flip graph of `Y_n` is the subgraph of the flip graph of
/// `Y_{n+1}` induced on `Y_n`.
pub fn embedding_check(n: usize) -> Result<bool> {
    if n + 1 > GRAPH_LIMIT {
        return Err(Error::BudgetExceeded(format!("embedding check needs n <= {}", GRAPH_LIMIT - 1)));
    }
    let small = FlipGraph::build(n)?;
    let large = FlipGraph::build(n + 1)?;
    let vs: BTreeSet<Partition> = small.vertices.iter().cloned().collect();
    Ok(vs.iter().all(|p| large.vertices.contains(p)) && large.induced_edges(&vs) == small.edges)
}

/// Number of `k`-dimensional faces of `As^n`: non-crossing sets of `n - k`
/// diagonals of the `(n + 3)`-gon.
pub fn count_faces(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Err(Error::Parse(format!("face dimension {k} exceeds polytope dimension {n}")));
    }
    Ok(face_vector(n)?[k])
}

/// Face numbers `f_0..f_n` of `As^n`, by enumerating partial triangulations.
pub fn face_vector(n: usize) -> Result<Vec<u64>> {
    if n > FACE_LIMIT {
        return Err(Error::BudgetExceeded(format!("face counts supported for n <= {FACE_LIMIT}")));
    }
    let ngon = n + 3;
    let diagonals: Vec<Diagonal> = (0..ngon)
        .flat_map(|a| (a + 2..ngon).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == ngon - 1))
        .map(|(a, b)| Diagonal { tail: a, head: b })
        .collect();
    // by_size[s] = number of non-crossing sets with s diagonals
    let mut by_size = vec![0u64; n + 1];
    fn extend(start: usize, chosen: &mut Vec<usize>, diags: &[Diagonal], by_size: &mut [u64]) {
        by_size[chosen.len()] += 1;
        for i in start..diags.len() {
            if chosen.iter().all(|&j| !diags[j].crosses(&diags[i])) {
                chosen.push(i);
                extend(i + 1, chosen, diags, by_size);
                chosen.pop();
            }
        }
    }
    extend(0, &mut Vec::new(), &diagonals, &mut by_size);
    // a k-face carries n - k diagonals
    Ok((0..=n).map(|k| by_size[n - k]).collect())
}

/// Edges `(p, q)` of the flip graph of `Y_n` whose transposes are not
/// adjacent.
pub fn transpose_edge_defect(n: usize) -> Result<BTreeSet<(Partition, Partition)>> {
    let g = FlipGraph::build(n)?;
    Ok(g.edges
        .iter()
        .filter(|(p, q)| !g.has_edge(&p.transpose(), &q.transpose()))
        .cloned()
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    DotLike,
    AdjacencyJson,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" => Ok(ExportFormat::EdgeList),
            "dot-like" | "dot" => Ok(ExportFormat::DotLike),
            "adjacency-json" => Ok(ExportFormat::AdjacencyJson),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// A graph with textual vertex labels, the common currency of every export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportGraph {
    pub kind: String,
    pub name: String,
    pub vertices: Vec<String>,
    /// Index pairs into `vertices`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct AdjacencyDoc {
    schema: String,
    kind: String,
    name: String,
    vertices: Vec<String>,
    adjacency: BTreeMap<String, Vec<String>>,
}

impl ExportGraph {
    /// Edges as label pairs, ordered by vertex position.
    fn sorted_edges(&self) -> Vec<(&str, &str)> {
        let mut es: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(i, j)| (i.min(j), i.max(j)))
            .collect();
        es.sort();
        es.iter()
            .map(|&(i, j)| (self.vertices[i].as_str(), self.vertices[j].as_str()))
            .collect()
    }

    pub fn render(&self, format: ExportFormat) -> String {
        let mut out = String::new();
        match format {
            ExportFormat::EdgeList => {
                writeln!(
                    out,
                    "# {} {} vertices={} edges={}",
                    self.kind,
                    self.name,
                    self.vertices.len(),
                    self.edges.len()
                )
                .unwrap();
                for (a, b) in self.sorted_edges() {
                    writeln!(out, "{a} -- {b}").unwrap();
                }
            }
            ExportFormat::DotLike => {
                writeln!(out, "graph \"{} {}\" {{", self.kind, self.name).unwrap();
                for v in &self.vertices {
                    writeln!(out, "  \"{v}\";").unwrap();
                }
                for (a, b) in self.sorted_edges() {
                    writeln!(out, "  \"{a}\" -- \"{b}\";").unwrap();
                }
                out.push_str("}\n");
            }
            ExportFormat::AdjacencyJson => {
                let mut adjacency: BTreeMap<String, Vec<String>> =
                    self.vertices.iter().map(|v| (v.clone(), Vec::new())).collect();
                for (a, b) in self.sorted_edges() {
                    adjacency.get_mut(a).unwrap().push(b.to_string());
                    adjacency.get_mut(b).unwrap().push(a.to_string());
                }
                let vertices = self.vertices.clone();
                let doc = AdjacencyDoc {
                    schema: GRAPH_SCHEMA.into(),
                    kind: self.kind.clone(),
                    name: self.name.clone(),
                    vertices,
                    adjacency,
                };
                out = serde_json::to_string_pretty(&doc).unwrap();
                out.push('\n');
            }
        }
        out
    }

    pub fn from_adjacency_json(text: &str) -> Result<ExportGraph> {
        let doc: AdjacencyDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("adjacency json: {e}")))?;
        if doc.schema != GRAPH_SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {:?}", doc.schema)));
        }
        let index: BTreeMap<&str, usize> = doc
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut edges = Vec::new();
        for (v, nbs) in &doc.adjacency {
            let i = *index
                .get(v.as_str())
                .ok_or_else(|| Error::Parse(format!("unknown vertex {v:?}")))?;
            for w in nbs {
                let j = *index
                    .get(w.as_str())
                    .ok_or_else(|| Error::Parse(format!("unknown vertex {w:?}")))?;
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        Ok(ExportGraph {
            kind: doc.kind,
            name: doc.name,
            vertices: doc.vertices,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn catalan_numbers() {
        let cs: Vec<u64> = (0..=9).map(catalan).collect();
        assert_eq!(cs, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn small_graphs() {
        let g1 = FlipGraph::build(1).unwrap();
        assert_eq!(g1.vertices, vec![Partition::empty()]);
        assert!(g1.edges.is_empty());

        let g3 = FlipGraph::build(3).unwrap();
        assert_eq!(g3.vertices, vec![p("[]"), p("[1]"), p("[1,1]"), p("[2]"), p("[2,1]")]);
        assert_eq!(g3.edges.len(), 5);
        assert!(g3.is_regular(2) && g3.is_connected());

        let g4 = FlipGraph::build(4).unwrap();
        assert_eq!((g4.vertices.len(), g4.edges.len()), (14, 21));
        assert!(FlipGraph::build(10).is_err());
        assert!(FlipGraph::build(0).is_err());
    }

    #[test]
    fn embeddings() {
        assert!(embedding_check(1).unwrap());
        assert!(embedding_check(3).unwrap());
        assert!(embedding_check(7).unwrap());
        assert!(embedding_check(9).is_err());
    }

    #[test]
    fn pentagon_faces() {
        assert_eq!(face_vector(2).unwrap(), vec![5, 5, 1]);
        for n in 0..=5 {
            assert_eq!(count_faces(n, n).unwrap(), 1);
        }
        assert!(count_faces(8, 0).is_err());
        assert!(count_faces(2, 3).is_err());
    }

    #[test]
    fn transpose_defect_small() {
        assert!(transpose_edge_defect(2).unwrap().is_empty());
    }

    #[test]
    fn exports() {
        let g1 = FlipGraph::build(1).unwrap();
        assert_eq!(g1.export(ExportFormat::EdgeList), "# flip-graph Y_1 vertices=1 edges=0\n");
        let g3 = FlipGraph::build(3).unwrap();
        let text = g3.export(ExportFormat::EdgeList);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines.contains(&"[] -- [1]"));
        let dot = g3.export(ExportFormat::DotLike);
        assert!(dot.starts_with("graph \"flip-graph Y_3\" {"));
        assert!(dot.contains("  \"[1]\" -- \"[1,1]\";"));
        assert_eq!("svg".parse::<ExportFormat>(), Err(Error::UnknownFormat("svg".into())));
    }

    #[test]
    fn adjacency_json_round_trip() {
        for n in 1..=5 {
            let g = FlipGraph::build(n).unwrap();
            let text = g.export(ExportFormat::AdjacencyJson);
            assert_eq!(FlipGraph::from_adjacency_json(&text).unwrap(), g);
        }
    }
}
