//! Finite directed graphs, paths, the `E(X)` cover and morphisms between
//! graphs with distinguished sets of regular vertices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Suffix appended to a name to form its primed copy in `E(X)`.
pub const PRIME_SUFFIX: &str = "'";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub range: VertexId,
}

/// A finite directed graph. Vertices and edges are stored sorted by name, so
/// id order is name order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: BTreeMap<String, VertexId>,
    edge_index: BTreeMap<String, EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from vertex names and `(edge, source, range)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::BadGraph(format!("duplicate vertex `{}`", w[0])));
        }
        let vertex_index: BTreeMap<String, VertexId> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), VertexId(i))).collect();
        let mut raw: Vec<(String, String, String)> = edges.into_iter().collect();
        raw.sort();
        let mut edges = Vec::with_capacity(raw.len());
        let mut edge_index = BTreeMap::new();
        for (name, src, dst) in raw {
            let lookup = |n: &str| {
                vertex_index
                    .get(n)
                    .copied()
                    .ok_or_else(|| Error::BadGraph(format!("edge `{name}` uses unknown vertex `{n}`")))
            };
            let (source, range) = (lookup(&src)?, lookup(&dst)?);
            if vertex_index.contains_key(&name) {
                return Err(Error::BadGraph(format!("`{name}` names both a vertex and an edge")));
            }
            if edge_index.insert(name.clone(), EdgeId(edges.len())).is_some() {
                return Err(Error::BadGraph(format!("duplicate edge `{name}`")));
            }
            edges.push(Edge { name, source, range });
        }
        for n in vertices.iter().chain(edges.iter().map(|e| &e.name)) {
            if n.is_empty() || n.contains('*') || n.contains(char::is_whitespace) {
                return Err(Error::BadGraph(format!("invalid name `{n}`")));
            }
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.source.0].push(EdgeId(i));
        }
        Ok(Graph { vertices, edges, vertex_index, edge_index, out_edges })
    }

    /// Convenience constructor from string slices.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Graph> {
        Graph::new(
            vertices.iter().map(|v| v.to_string()),
            edges.iter().map(|(n, s, r)| (n.to_string(), s.to_string(), r.to_string())),
        )
    }

    pub fn null() -> Graph {
        Graph::new(Vec::<String>::new(), Vec::new()).expect("null graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].range
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    /// `s^{-1}(v)` in name order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_edges[v.0].is_empty()
    }

    pub fn sinks(&self) -> BTreeSet<VertexId> {
        self.vertices().filter(|&v| self.is_sink(v)).collect()
    }

    /// Finite graphs have no infinite emitters, so every non-sink is regular.
    pub fn regular_vertices(&self) -> BTreeSet<VertexId> {
        self.vertices().filter(|&v| !self.is_sink(v)).collect()
    }

    /// `(sinks, regular vertices)`.
    pub fn vertex_classify(&self) -> (BTreeSet<VertexId>, BTreeSet<VertexId>) {
        (self.sinks(), self.regular_vertices())
    }

    /// `P(n, v)`: paths of length `n` (ending at `target` when given), in
    /// lexicographic order of their edge names.
    pub fn paths(&self, n: usize, target: Option<VertexId>) -> Vec<Path> {
        let mut layer: Vec<Path> = self.vertices().map(Path::vertex).collect();
        for step in 0..n {
            let mut next = Vec::new();
            if step == 0 {
                // order by first edge rather than by source vertex
                for e in self.edge_ids() {
                    next.push(Path::edge(self, e));
                }
            } else {
                for p in &layer {
                    for &e in self.out_edges(p.range) {
                        next.push(p.extend(self, e));
                    }
                }
            }
            layer = next;
        }
        match target {
            Some(v) => layer.into_iter().filter(|p| p.range == v).collect(),
            None => layer,
        }
    }

    /// All paths with length at most `max_len`, shortest first.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        (0..=max_len).flat_map(|n| self.paths(n, None)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path_len().is_some()
    }

    /// Length of the longest path, or `None` when the graph has a cycle.
    pub fn longest_path_len(&self) -> Option<usize> {
        // Kahn's algorithm on edges
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.range.0] += 1;
        }
        let mut queue: Vec<VertexId> = self.vertices().filter(|v| indeg[v.0] == 0).collect();
        let mut depth = vec![0usize; n];
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &e in self.out_edges(v) {
                let w = self.range(e);
                depth[w.0] = depth[w.0].max(depth[v.0] + 1);
                indeg[w.0] -= 1;
                if indeg[w.0] == 0 {
                    queue.push(w);
                }
            }
        }
        (seen == n).then(|| depth.into_iter().max().unwrap_or(0))
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_vertex() {
            self.vertex_name(p.source).to_string()
        } else {
            p.edges.iter().map(|&e| self.edge_name(e)).collect::<Vec<_>>().concat()
        }
    }

    pub fn to_file(&self, x: Option<&BTreeSet<VertexId>>) -> GraphFile {
        GraphFile {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    name: e.name.clone(),
                    src: self.vertex_name(e.source).to_string(),
                    dst: self.vertex_name(e.range).to_string(),
                })
                .collect(),
            x: x.map(|x| x.iter().map(|&v| self.vertex_name(v).to_string()).collect()),
        }
    }
}

/// A path `f_1 ... f_n`, or a vertex viewed as a path of length zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    edges: Vec<EdgeId>,
    source: VertexId,
    range: VertexId,
}

impl Path {
    pub fn vertex(v: VertexId) -> Path {
        Path { edges: Vec::new(), source: v, range: v }
    }

    pub fn edge(graph: &Graph, e: EdgeId) -> Path {
        Path { edges: vec![e], source: graph.source(e), range: graph.range(e) }
    }

    /// Checks composability `r(f_i) = s(f_{i+1})`.
    pub fn from_edges(graph: &Graph, edges: Vec<EdgeId>) -> Result<Path> {
        let Some(&first) = edges.first() else {
            return Err(Error::BadGraph("a path needs at least one edge".into()));
        };
        for w in edges.windows(2) {
            if graph.range(w[0]) != graph.source(w[1]) {
                return Err(Error::BadGraph(format!(
                    "edges `{}` and `{}` are not composable",
                    graph.edge_name(w[0]),
                    graph.edge_name(w[1])
                )));
            }
        }
        let range = graph.range(*edges.last().expect("nonempty"));
        Ok(Path { source: graph.source(first), range, edges })
    }

    pub fn from_names(graph: &Graph, names: &[&str]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| graph.edge_id(n).ok_or_else(|| Error::UnknownGenerator(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Path::from_edges(graph, ids)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_vertex()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// Appends an edge starting at `r(self)`.
    pub fn extend(&self, graph: &Graph, e: EdgeId) -> Path {
        debug_assert_eq!(graph.source(e), self.range);
        let mut edges = self.edges.clone();
        edges.push(e);
        Path { edges, source: self.source, range: graph.range(e) }
    }

    /// `self` followed by `tail`; requires `r(self) = s(tail)`.
    pub fn concat(&self, tail: &Path) -> Path {
        debug_assert_eq!(self.range, tail.source);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&tail.edges);
        Path { edges, source: self.source, range: tail.range }
    }

    /// Drops the last edge; the result ends at `s(last edge)`.
    pub fn without_last(&self, graph: &Graph) -> Option<Path> {
        let last = self.last_edge()?;
        let mut edges = self.edges.clone();
        edges.pop();
        Some(Path { edges, source: self.source, range: graph.source(last) })
    }

    /// `Some(kappa)` when `other = self kappa`.
    pub fn strip_prefix_of(&self, other: &Path) -> Option<Path> {
        if self.source != other.source || !other.edges.starts_with(&self.edges) {
            return None;
        }
        Some(Path {
            edges: other.edges[self.edges.len()..].to_vec(),
            source: self.range,
            range: other.range,
        })
    }
}

/// An object `(E, X)` with `X` a subset of the regular vertices of `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeGraph {
    pub graph: Arc<Graph>,
    pub x: BTreeSet<VertexId>,
}

impl RelativeGraph {
    pub fn new(graph: Arc<Graph>, x: BTreeSet<VertexId>) -> Result<Self> {
        let regular = graph.regular_vertices();
        let bad: Vec<String> =
            x.iter().filter(|v| !regular.contains(v)).map(|&v| graph.vertex_name(v).to_string()).collect();
        if !bad.is_empty() {
            return Err(Error::XNotRegular(bad));
        }
        Ok(RelativeGraph { graph, x })
    }

    pub fn with_names(graph: Arc<Graph>, x: &[&str]) -> Result<Self> {
        let ids = x
            .iter()
            .map(|n| graph.vertex_id(n).ok_or_else(|| Error::BadGraph(format!("unknown vertex `{n}`"))))
            .collect::<Result<BTreeSet<_>>>()?;
        RelativeGraph::new(graph, ids)
    }

    /// `(E, Reg(E))`.
    pub fn leavitt(graph: Arc<Graph>) -> Self {
        let x = graph.regular_vertices();
        RelativeGraph { graph, x }
    }

    pub fn is_leavitt(&self) -> bool {
        self.x == self.graph.regular_vertices()
    }

    /// `Y = Reg(E) \ X`.
    pub fn y(&self) -> BTreeSet<VertexId> {
        self.graph.regular_vertices().difference(&self.x).copied().collect()
    }
}

/// The graph `E(X)`: a primed copy `v'` of each `v` in `Y = Reg(E) \ X`, and
/// an edge `e' : s(e) -> r(e)'` for each edge with `r(e)` in `Y`.
pub fn cohn_cover(rel: &RelativeGraph) -> Result<Graph> {
    let g = &rel.graph;
    let y = rel.y();
    let primed = |n: &str| format!("{n}{PRIME_SUFFIX}");
    let mut vertices: Vec<String> = g.vertices().map(|v| g.vertex_name(v).to_string()).collect();
    let mut edges: Vec<(String, String, String)> = g
        .edge_ids()
        .map(|e| {
            let ed = g.edge(e);
            (ed.name.clone(), g.vertex_name(ed.source).to_string(), g.vertex_name(ed.range).to_string())
        })
        .collect();
    let taken = |n: &str| g.vertex_id(n).is_some() || g.edge_id(n).is_some();
    for &v in &y {
        let name = primed(g.vertex_name(v));
        if taken(&name) {
            return Err(Error::PrimedNameCollision(name));
        }
        vertices.push(name);
    }
    for e in g.edge_ids() {
        let ed = g.edge(e);
        if y.contains(&ed.range) {
            let name = primed(&ed.name);
            if taken(&name) {
                return Err(Error::PrimedNameCollision(name));
            }
            edges.push((name, g.vertex_name(ed.source).to_string(), primed(g.vertex_name(ed.range))));
        }
    }
    Graph::new(vertices, edges)
}

/// A candidate morphism `(F, Y) -> (E, X)` in the category of graphs with
/// distinguished regular vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMorphism {
    pub source: RelativeGraph,
    pub target: RelativeGraph,
    /// Indexed by source vertex id.
    pub vertex_map: Vec<VertexId>,
    /// Indexed by source edge id.
    pub edge_map: Vec<EdgeId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismCondition {
    /// Injective graph homomorphism.
    A,
    /// `psi0(Y)` lies in `X`.
    B,
    /// Bijection `s_F^{-1}(v) -> s_E^{-1}(psi0(v))` for `v` in `Y`.
    C,
}

impl fmt::Display for MorphismCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MorphismCondition::A => "a",
            MorphismCondition::B => "b",
            MorphismCondition::C => "c",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismVerdict {
    Valid,
    Invalid { condition: MorphismCondition, detail: String },
}

impl MorphismVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, MorphismVerdict::Valid)
    }
}

impl GraphMorphism {
    /// Builds a morphism from name maps; every source vertex and edge must be mapped.
    pub fn from_names(
        source: RelativeGraph,
        target: RelativeGraph,
        vmap: &BTreeMap<String, String>,
        emap: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let (f, e) = (&source.graph, &target.graph);
        let vertex_map = f
            .vertices()
            .map(|v| {
                let name = f.vertex_name(v);
                let img = vmap
                    .get(name)
                    .ok_or_else(|| Error::InvalidMorphism(format!("vertex `{name}` is not mapped")))?;
                e.vertex_id(img)
                    .ok_or_else(|| Error::InvalidMorphism(format!("unknown target vertex `{img}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let edge_map = f
            .edge_ids()
            .map(|x| {
                let name = f.edge_name(x);
                let img = emap
                    .get(name)
                    .ok_or_else(|| Error::InvalidMorphism(format!("edge `{name}` is not mapped")))?;
                e.edge_id(img)
                    .ok_or_else(|| Error::InvalidMorphism(format!("unknown target edge `{img}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GraphMorphism { source, target, vertex_map, edge_map })
    }

    pub fn identity(obj: RelativeGraph) -> Self {
        let vertex_map = obj.graph.vertices().collect();
        let edge_map = obj.graph.edge_ids().collect();
        GraphMorphism { source: obj.clone(), target: obj, vertex_map, edge_map }
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v.0]
    }

    pub fn map_edge(&self, e: EdgeId) -> EdgeId {
        self.edge_map[e.0]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphMorphism) -> Result<GraphMorphism> {
        if self.target.graph != other.source.graph {
            return Err(Error::InvalidMorphism("morphisms are not composable".into()));
        }
        Ok(GraphMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            vertex_map: self.vertex_map.iter().map(|&v| other.map_vertex(v)).collect(),
            edge_map: self.edge_map.iter().map(|&e| other.map_edge(e)).collect(),
        })
    }

    pub fn validate(&self) -> MorphismVerdict {
        morphism_validate(self)
    }
}

pub fn morphism_validate(psi: &GraphMorphism) -> MorphismVerdict {
    let (f, e) = (&psi.source.graph, &psi.target.graph);
    let invalid = |condition, detail: String| MorphismVerdict::Invalid { condition, detail };
    if psi.vertex_map.len() != f.vertex_count() || psi.edge_map.len() != f.edge_count() {
        return invalid(MorphismCondition::A, "maps are not total".into());
    }
    for x in f.edge_ids() {
        let img = psi.map_edge(x);
        if e.source(img) != psi.map_vertex(f.source(x)) || e.range(img) != psi.map_vertex(f.range(x)) {
            return invalid(
                MorphismCondition::A,
                format!("edge `{}` is not mapped compatibly with its endpoints", f.edge_name(x)),
            );
        }
    }
    let mut seen = BTreeMap::new();
    for v in f.vertices() {
        if let Some(prev) = seen.insert(psi.map_vertex(v), v) {
            return invalid(
                MorphismCondition::A,
                format!(
                    "vertices `{}` and `{}` share an image",
                    f.vertex_name(prev),
                    f.vertex_name(v)
                ),
            );
        }
    }
    let mut seen = BTreeMap::new();
    for x in f.edge_ids() {
        if let Some(prev) = seen.insert(psi.map_edge(x), x) {
            return invalid(
                MorphismCondition::A,
                format!("edges `{}` and `{}` share an image", f.edge_name(prev), f.edge_name(x)),
            );
        }
    }
    for &v in &psi.source.x {
        if !psi.target.x.contains(&psi.map_vertex(v)) {
            return invalid(
                MorphismCondition::B,
                format!("`{}` maps outside the target's distinguished set", f.vertex_name(v)),
            );
        }
    }
    for &v in &psi.source.x {
        let mut images: Vec<EdgeId> = f.out_edges(v).iter().map(|&x| psi.map_edge(x)).collect();
        images.sort();
        if images != e.out_edges(psi.map_vertex(v)) {
            return invalid(
                MorphismCondition::C,
                format!("edges leaving `{}` are not mapped onto those leaving its image", f.vertex_name(v)),
            );
        }
    }
    MorphismVerdict::Valid
}

/// Graph file: `{"vertices":[..],"edges":[{"name","src","dst"}],"x":[..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub name: String,
    pub src: String,
    pub dst: String,
}

impl GraphFile {
    /// Builds the relative graph; a missing `x` means `X = Reg(E)`.
    pub fn into_relative(self) -> Result<RelativeGraph> {
        let graph = Arc::new(Graph::new(
            self.vertices,
            self.edges.into_iter().map(|e| (e.name, e.src, e.dst)),
        )?);
        match self.x {
            None => Ok(RelativeGraph::leavitt(graph)),
            Some(x) => {
                let names: Vec<&str> = x.iter().map(String::as_str).collect();
                RelativeGraph::with_names(graph, &names)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(g: &Graph, vs: &BTreeSet<VertexId>) -> Vec<String> {
        vs.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    }

    #[test]
    fn no_paths_past_the_longest() {
        let g = fixtures::v_w_u();
        assert_eq!(g.paths(2, None).len(), 1);
        assert!(g.paths(3, None).is_empty());
        assert!(g.paths(4, None).is_empty());
        assert_eq!(g.paths_up_to(5).len(), 3 + 2 + 1);
    }

    #[test]
    fn classify_vertices() {
        let a1 = fixtures::a1();
        let (s, r) = a1.vertex_classify();
        assert_eq!(names(&a1, &s), vec!["v"]);
        assert!(r.is_empty());
        let vw = fixtures::v_to_w();
        let (s, r) = vw.vertex_classify();
        assert_eq!((names(&vw, &s), names(&vw, &r)), (vec!["w".to_string()], vec!["v".to_string()]));
        let lp = fixtures::loop_graph();
        let (s, r) = lp.vertex_classify();
        assert!(s.is_empty());
        assert_eq!(names(&lp, &r), vec!["v"]);
    }

    #[test]
    fn path_enumeration() {
        let lp = fixtures::loop_graph();
        let v = lp.vertex_id("v").unwrap();
        let p = lp.paths(2, Some(v));
        assert_eq!(p.iter().map(|p| lp.path_name(p)).collect::<Vec<_>>(), vec!["ee"]);
        let rose = fixtures::rose2();
        let v = rose.vertex_id("v").unwrap();
        let p = rose.paths(2, Some(v));
        assert_eq!(
            p.iter().map(|p| rose.path_name(p)).collect::<Vec<_>>(),
            vec!["ee", "ef", "fe", "ff"]
        );
        let vw = fixtures::v_to_w();
        assert!(vw.paths(1, vw.vertex_id("v")).is_empty());
        assert_eq!(vw.paths(0, vw.vertex_id("v")), vec![Path::vertex(vw.vertex_id("v").unwrap())]);
    }

    #[test]
    fn acyclicity() {
        assert!(fixtures::v_to_w().is_acyclic());
        assert!(!fixtures::loop_graph().is_acyclic());
        assert!(!fixtures::two_cycle().is_acyclic());
        assert_eq!(fixtures::v_w_u().longest_path_len(), Some(2));
        assert_eq!(Graph::null().longest_path_len(), Some(0));
    }

    #[test]
    fn cover_of_single_edge() {
        let g = Arc::new(fixtures::v_to_w());
        let rel = RelativeGraph::new(g, BTreeSet::new()).unwrap();
        let c = cohn_cover(&rel).unwrap();
        assert_eq!(c.vertices().map(|v| c.vertex_name(v).to_string()).collect::<Vec<_>>(), vec!["v", "v'", "w"]);
        assert_eq!(c.edge_count(), 1);
    }

    #[test]
    fn cover_of_loop() {
        let g = Arc::new(fixtures::loop_graph());
        let rel = RelativeGraph::new(g, BTreeSet::new()).unwrap();
        let c = cohn_cover(&rel).unwrap();
        assert_eq!(c.vertex_count(), 2);
        let ep = c.edge_id("e'").unwrap();
        assert_eq!(c.vertex_name(c.source(ep)), "v");
        assert_eq!(c.vertex_name(c.range(ep)), "v'");
    }

    #[test]
    fn cover_with_full_x_is_identity() {
        for g in fixtures::six_graphs() {
            let rel = RelativeGraph::leavitt(Arc::new(g.1.clone()));
            assert_eq!(cohn_cover(&rel).unwrap(), g.1);
        }
    }

    #[test]
    fn primed_collision_is_error() {
        let g = Arc::new(Graph::from_names(&["v", "v'"], &[("e", "v", "v")]).unwrap());
        let rel = RelativeGraph::new(g, BTreeSet::new()).unwrap();
        assert_eq!(cohn_cover(&rel), Err(Error::PrimedNameCollision("v'".into())));
    }

    #[test]
    fn x_must_be_regular() {
        let a1 = Arc::new(fixtures::a1());
        assert!(matches!(RelativeGraph::with_names(a1, &["v"]), Err(Error::XNotRegular(_))));
    }

    #[test]
    fn morphism_validation() {
        let a1 = RelativeGraph::new(Arc::new(fixtures::a1()), BTreeSet::new()).unwrap();
        let vw = RelativeGraph::with_names(Arc::new(fixtures::v_to_w()), &["v"]).unwrap();
        let vmap = BTreeMap::from([("v".to_string(), "v".to_string())]);
        let psi = GraphMorphism::from_names(a1, vw.clone(), &vmap, &BTreeMap::new()).unwrap();
        assert!(morphism_validate(&psi).is_valid());

        let two = RelativeGraph::new(Arc::new(Graph::from_names(&["a", "b"], &[]).unwrap()), BTreeSet::new())
            .unwrap();
        let vmap = BTreeMap::from([("a".to_string(), "v".to_string()), ("b".to_string(), "v".to_string())]);
        let bad = GraphMorphism::from_names(two, vw, &vmap, &BTreeMap::new()).unwrap();
        assert!(matches!(
            morphism_validate(&bad),
            MorphismVerdict::Invalid { condition: MorphismCondition::A, .. }
        ));
    }

    #[test]
    fn condition_c_requires_all_out_edges() {
        // (v->w, {v}) into rose-like graph where v emits two edges
        let src = RelativeGraph::with_names(Arc::new(fixtures::v_to_w()), &["v"]).unwrap();
        let tgt_g = Graph::from_names(&["v", "w", "u"], &[("f", "v", "w"), ("g", "v", "u")]).unwrap();
        let tgt = RelativeGraph::with_names(Arc::new(tgt_g), &["v"]).unwrap();
        let vmap: BTreeMap<String, String> =
            [("v", "v"), ("w", "w")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let emap = BTreeMap::from([("f".to_string(), "f".to_string())]);
        let psi = GraphMorphism::from_names(src, tgt, &vmap, &emap).unwrap();
        assert!(matches!(
            morphism_validate(&psi),
            MorphismVerdict::Invalid { condition: MorphismCondition::C, .. }
        ));
    }

    #[test]
    fn graph_file_roundtrip() {
        let json = r#"{"vertices":["v","w"],"edges":[{"name":"f","src":"v","dst":"w"}],"x":["v"]}"#;
        let file: GraphFile = serde_json::from_str(json).unwrap();
        let rel = file.clone().into_relative().unwrap();
        assert!(rel.is_leavitt());
        assert_eq!(rel.graph.to_file(Some(&rel.x)), file);
    }
}
