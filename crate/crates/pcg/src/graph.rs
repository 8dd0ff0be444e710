//! Finite simple graphs with named, ordered vertices.
//!
//! A [`CommutationGraph`] is the defining datum of a partially commutative
//! group: vertices are generators and an edge between two vertices means the
//! corresponding generators commute. Vertex order is fixed at construction
//! and drives every deterministic tie-break downstream (shortlex normal
//! forms, backtracking search order, centralizer listings).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple graph with named vertices in a fixed declaration order.
///
/// No self-loops, no duplicate edges, every edge endpoint declared.
#[derive(Debug, Clone)]
pub struct CommutationGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl PartialEq for CommutationGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for CommutationGraph {}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    // Identifier characters, plus the characters used by extension-ball
    // vertex names ("x@w" with '.'-separated letters and "^-1" inverses).
    chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '@' | '.' | '^' | '-'))
}

impl CommutationGraph {
    /// Builds a graph from vertex names (declaration order) and edges given
    /// as name pairs.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::from_names(vertices.iter().map(|s| s.as_ref()), 0)?;
        for (u, v) in edges {
            let ui = g.vertex_index(u.as_ref())?;
            let vi = g.vertex_index(v.as_ref())?;
            g.insert_edge(ui, vi, 0)?;
        }
        Ok(g)
    }

    fn from_names<'a>(names: impl Iterator<Item = &'a str>, line: usize) -> Result<Self> {
        let mut g = CommutationGraph {
            names: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            edges: BTreeSet::new(),
        };
        for name in names {
            if !valid_name(name) {
                return Err(Error::Parse {
                    line,
                    message: format!("invalid vertex name `{name}`"),
                });
            }
            if g.index.contains_key(name) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate vertex `{name}`"),
                });
            }
            g.index.insert(name.to_string(), g.names.len());
            g.names.push(name.to_string());
            g.adj.push(BTreeSet::new());
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at `{}`", self.names[u]),
            });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.insert((a, b));
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    /// Parses the graph file format:
    ///
    /// ```text
    /// vertices: a b c
    /// edges: a-b b-c
    /// ```
    ///
    /// `#` starts a comment to end of line, blank lines are skipped, the
    /// edges line may be empty or missing. Errors name the offending
    /// 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<CommutationGraph> = None;
        let mut saw_edges = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("vertices:") {
                if graph.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "repeated `vertices:` line".into(),
                    });
                }
                graph = Some(Self::from_names(rest.split_whitespace(), line)?);
            } else if let Some(rest) = content.strip_prefix("edges:") {
                let g = graph.as_mut().ok_or(Error::Parse {
                    line,
                    message: "`edges:` before `vertices:`".into(),
                })?;
                if saw_edges {
                    return Err(Error::Parse {
                        line,
                        message: "repeated `edges:` line".into(),
                    });
                }
                saw_edges = true;
                for token in rest.split_whitespace() {
                    let (u, v) = g.parse_edge_token(token, line)?;
                    g.insert_edge(u, v, line)?;
                }
            } else {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `vertices:` or `edges:`, got `{content}`"),
                });
            }
        }
        graph.ok_or(Error::Parse {
            line: 1,
            message: "missing `vertices:` line".into(),
        })
    }

    /// Splits an edge token `u-v` against the declared vertex set. Vertex
    /// names may themselves contain `-` (extension-ball names such as
    /// `a@b^-1`), so the first split point at which both sides are declared
    /// vertices wins.
    fn parse_edge_token(&self, token: &str, line: usize) -> Result<(usize, usize)> {
        for (i, c) in token.char_indices() {
            if c != '-' || i == 0 || i + 1 == token.len() {
                continue;
            }
            let (left, right) = (&token[..i], &token[i + 1..]);
            if let (Some(&u), Some(&v)) = (self.index.get(left), self.index.get(right)) {
                return Ok((u, v));
            }
        }
        Err(Error::Parse {
            line,
            message: format!("edge `{token}` does not join two declared vertices"),
        })
    }

    /// Serialises back to the graph file format. The output re-parses to an
    /// equal graph.
    pub fn to_text(&self) -> String {
        let mut out = String::from("vertices:");
        for name in &self.names {
            out.push(' ');
            out.push_str(name);
        }
        out.push_str("\nedges:");
        for &(u, v) in &self.edges {
            out.push(' ');
            out.push_str(&self.names[u]);
            out.push('-');
            out.push_str(&self.names[v]);
        }
        out.push('\n');
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Edges as ordered index pairs `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.contains(&(a, b))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `x` (as an index set).
    pub fn link(&self, x: usize) -> BTreeSet<usize> {
        self.adj[x].clone()
    }

    /// `link(x) ∪ {x}`.
    pub fn star(&self, x: usize) -> BTreeSet<usize> {
        let mut s = self.adj[x].clone();
        s.insert(x);
        s
    }

    /// Same vertices in the same order; complemented edge set.
    pub fn complement(&self) -> CommutationGraph {
        let mut g = CommutationGraph {
            names: self.names.clone(),
            index: self.index.clone(),
            adj: vec![BTreeSet::new(); self.names.len()],
            edges: BTreeSet::new(),
        };
        for u in 0..self.names.len() {
            for v in u + 1..self.names.len() {
                if !self.edges.contains(&(u, v)) {
                    g.edges.insert((u, v));
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// Induced subgraph on the given vertex names, kept in this graph's
    /// declaration order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, names: &[S]) -> Result<CommutationGraph> {
        let mut keep: Vec<usize> = Vec::with_capacity(names.len());
        for n in names {
            keep.push(self.vertex_index(n.as_ref())?);
        }
        keep.sort_unstable();
        keep.dedup();
        let mut g = Self::from_names(keep.iter().map(|&i| self.names[i].as_str()), 0)?;
        for (new_u, &old_u) in keep.iter().enumerate() {
            for (new_v, &old_v) in keep.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.insert_edge(new_u, new_v, 0)?;
                }
            }
        }
        Ok(g)
    }

    /// Connected components as sorted index sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// No induced cycle on 4 or more vertices.
    pub fn is_chordal(&self) -> bool {
        (4..=self.vertex_count()).all(|n| find_induced(&cycle_graph(n).unwrap(), self).is_none())
    }

    /// No induced cycle or complement-of-cycle on 5 or more vertices.
    pub fn is_weakly_chordal(&self) -> bool {
        (5..=self.vertex_count()).all(|n| {
            let cn = cycle_graph(n).unwrap();
            find_induced(&cn, self).is_none() && find_induced(&cn.complement(), self).is_none()
        })
    }

    /// No induced square and no induced path with 3 edges.
    pub fn is_thin_chordal(&self) -> bool {
        find_induced(&cycle_graph(4).unwrap(), self).is_none()
            && find_induced(&path_graph(3).unwrap(), self).is_none()
    }
}

impl fmt::Display for CommutationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The cycle on `n >= 3` vertices `v1 .. vn`.
pub fn cycle_graph(n: usize) -> Result<CommutationGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle graph needs at least 3 vertices, got {n}"
        )));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(String, String)> = (0..n - 1)
        .map(|i| (names[i].clone(), names[i + 1].clone()))
        .collect();
    edges.push((names[n - 1].clone(), names[0].clone()));
    CommutationGraph::new(&names, &edges)
}

/// The path with `n >= 0` edges, so `n + 1` vertices `v1 .. v(n+1)`.
pub fn path_graph(n: usize) -> Result<CommutationGraph> {
    let names: Vec<String> = (1..=n + 1).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String)> = (0..n)
        .map(|i| (names[i].clone(), names[i + 1].clone()))
        .collect();
    CommutationGraph::new(&names, &edges)
}

/// The complete graph on `n >= 1` vertices `v1 .. vn`.
pub fn complete_graph(n: usize) -> Result<CommutationGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((names[i].clone(), names[j].clone()));
        }
    }
    CommutationGraph::new(&names, &edges)
}

/// An injective map from pattern vertices to host vertices that preserves
/// both edges and non-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEmbedding {
    pairs: Vec<(String, String)>,
}

impl GraphEmbedding {
    /// `(pattern vertex, host vertex)` pairs in pattern declaration order.
    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn image_of(&self, pattern_vertex: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(p, _)| p == pattern_vertex)
            .map(|(_, h)| h.as_str())
    }
}

/// Backtracking search for an injective, adjacency- and
/// non-adjacency-preserving assignment of pattern vertices (in declaration
/// order) to host vertices (candidates in declaration order). When
/// `bijective` is set, host degrees must match pattern degrees exactly.
pub(crate) fn induced_search_indices(
    pattern: &CommutationGraph,
    host_n: usize,
    host_has_edge: &dyn Fn(usize, usize) -> bool,
    host_degree: &dyn Fn(usize) -> usize,
    bijective: bool,
) -> Option<Vec<usize>> {
    let pn = pattern.vertex_count();
    if pn > host_n || (bijective && pn != host_n) {
        return None;
    }
    let mut assigned: Vec<usize> = Vec::with_capacity(pn);
    let mut used = vec![false; host_n];

    fn recurse(
        pattern: &CommutationGraph,
        host_n: usize,
        host_has_edge: &dyn Fn(usize, usize) -> bool,
        host_degree: &dyn Fn(usize) -> usize,
        bijective: bool,
        assigned: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = assigned.len();
        if i == pattern.vertex_count() {
            return true;
        }
        let pat_deg = pattern.degree(i);
        'cand: for cand in 0..host_n {
            if used[cand] {
                continue;
            }
            let hd = host_degree(cand);
            if hd < pat_deg || (bijective && hd != pat_deg) {
                continue;
            }
            for (j, &hj) in assigned.iter().enumerate() {
                if pattern.has_edge(j, i) != host_has_edge(hj, cand) {
                    continue 'cand;
                }
            }
            assigned.push(cand);
            used[cand] = true;
            if recurse(
                pattern,
                host_n,
                host_has_edge,
                host_degree,
                bijective,
                assigned,
                used,
            ) {
                return true;
            }
            assigned.pop();
            used[cand] = false;
        }
        false
    }

    if recurse(
        pattern,
        host_n,
        host_has_edge,
        host_degree,
        bijective,
        &mut assigned,
        &mut used,
    ) {
        Some(assigned)
    } else {
        None
    }
}

fn embedding_from_indices(
    pattern: &CommutationGraph,
    host: &CommutationGraph,
    image: &[usize],
) -> GraphEmbedding {
    GraphEmbedding {
        pairs: image
            .iter()
            .enumerate()
            .map(|(p, &h)| (pattern.vertex_name(p).to_string(), host.vertex_name(h).to_string()))
            .collect(),
    }
}

/// First induced embedding of `pattern` into `host` in backtracking order,
/// or `None` if there is no induced copy.
pub fn find_induced(pattern: &CommutationGraph, host: &CommutationGraph) -> Option<GraphEmbedding> {
    let image = induced_search_indices(
        pattern,
        host.vertex_count(),
        &|u, v| host.has_edge(u, v),
        &|v| host.degree(v),
        false,
    )?;
    Some(embedding_from_indices(pattern, host, &image))
}

/// A graph isomorphism `g1 -> g2`, or `None`. Intended for small graphs;
/// the search backtracks over degree-compatible assignments.
pub fn graph_isomorphic(g1: &CommutationGraph, g2: &CommutationGraph) -> Option<GraphEmbedding> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1: Vec<usize> = (0..g1.vertex_count()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.vertex_count()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let image = induced_search_indices(
        g1,
        g2.vertex_count(),
        &|u, v| g2.has_edge(u, v),
        &|v| g2.degree(v),
        true,
    )?;
    Some(embedding_from_indices(g1, g2, &image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reproduce::{gamma1, gamma2};

    #[test]
    fn parse_two_vertex_graph() {
        let g = CommutationGraph::parse("vertices: a b\nedges: a-b").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_gamma1() {
        let g = CommutationGraph::parse("vertices: a b c d e\nedges: a-d a-e b-e c-d d-e").unwrap();
        assert_eq!(g, gamma1());
        assert_eq!(g.vertex_names(), &["a", "b", "c", "d", "e"]);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = CommutationGraph::parse("vertices: a\nedges: a-a").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_duplicate_vertex() {
        let err = CommutationGraph::parse("vertices: a b a\nedges:").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn parse_rejects_unknown_endpoint() {
        let err = CommutationGraph::parse("vertices: a b\nedges: a-z").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn parse_tolerates_comments_and_blanks() {
        let g = CommutationGraph::parse("# a triangle\n\nvertices: x y z # names\nedges: x-y y-z x-z\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn text_round_trip() {
        let g = gamma2();
        let back = CommutationGraph::parse(&g.to_text()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn complement_is_involution() {
        let g = gamma1();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c5 = cycle_graph(5).unwrap();
        assert!(graph_isomorphic(&c5.complement(), &c5).is_some());
    }

    #[test]
    fn complement_of_k3_is_edgeless() {
        let k3 = complete_graph(3).unwrap();
        let c = k3.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertex_count(), 3);
    }

    #[test]
    fn family_sizes() {
        let p7 = path_graph(7).unwrap();
        assert_eq!(p7.vertex_count(), 8);
        assert_eq!(p7.edge_count(), 7);
        let c3 = cycle_graph(3).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));
        let p0 = path_graph(0).unwrap();
        assert_eq!((p0.vertex_count(), p0.edge_count()), (1, 0));
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn induced_subgraph_triangle() {
        let g = gamma1();
        let t = g.induced_subgraph(&["a", "d", "e"]).unwrap();
        assert_eq!(t.edge_count(), 3);
        assert!(graph_isomorphic(&t, &complete_graph(3).unwrap()).is_some());
    }

    #[test]
    fn induced_subgraph_whole_graph() {
        let g = gamma1();
        let names: Vec<&str> = g.vertex_names().iter().map(|s| s.as_str()).collect();
        assert_eq!(g.induced_subgraph(&names).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_path() {
        let g = gamma1();
        let p = g.induced_subgraph(&["b", "e", "d", "c"]).unwrap();
        // kept in declaration order b, c, d, e; edges b-e, c-d, d-e
        assert_eq!(p.edge_count(), 3);
        assert!(graph_isomorphic(&p, &path_graph(3).unwrap()).is_some());
    }

    #[test]
    fn induced_subgraph_unknown_vertex() {
        assert!(gamma1().induced_subgraph(&["a", "zz"]).is_err());
    }

    #[test]
    fn find_induced_p3_in_gamma1() {
        let p3 = path_graph(3).unwrap();
        let emb = find_induced(&p3, &gamma1()).unwrap();
        let image: Vec<&str> = p3
            .vertex_names()
            .iter()
            .map(|v| emb.image_of(v).unwrap())
            .collect();
        // first embedding in backtracking order lands on the path b-e-d-c
        assert_eq!(image, vec!["b", "e", "d", "c"]);
    }

    #[test]
    fn find_induced_no_c4_in_gamma1() {
        assert!(find_induced(&cycle_graph(4).unwrap(), &gamma1()).is_none());
    }

    #[test]
    fn find_induced_self_is_identity() {
        let g = gamma1();
        let emb = find_induced(&g, &g).unwrap();
        for (p, h) in emb.pairs() {
            assert_eq!(p, h);
        }
    }

    #[test]
    fn find_induced_matches_exhaustive_enumeration() {
        // oracle: try every injection of pattern vertices into host vertices
        fn exists_by_enumeration(pattern: &CommutationGraph, host: &CommutationGraph) -> bool {
            let pn = pattern.vertex_count();
            let hn = host.vertex_count();
            if pn > hn {
                return false;
            }
            let mut image = vec![0usize; pn];
            fn rec(
                pattern: &CommutationGraph,
                host: &CommutationGraph,
                image: &mut Vec<usize>,
                depth: usize,
            ) -> bool {
                if depth == pattern.vertex_count() {
                    for i in 0..image.len() {
                        for j in i + 1..image.len() {
                            if pattern.has_edge(i, j) != host.has_edge(image[i], image[j]) {
                                return false;
                            }
                        }
                    }
                    return true;
                }
                for cand in 0..host.vertex_count() {
                    if image[..depth].contains(&cand) {
                        continue;
                    }
                    image[depth] = cand;
                    if rec(pattern, host, image, depth + 1) {
                        return true;
                    }
                }
                false
            }
            rec(pattern, host, &mut image, 0)
        }

        let patterns = [
            cycle_graph(4).unwrap(),
            cycle_graph(5).unwrap(),
            path_graph(3).unwrap(),
            complete_graph(3).unwrap(),
            path_graph(4).unwrap(),
        ];
        let hosts = [gamma1(), gamma2(), cycle_graph(6).unwrap(), path_graph(8).unwrap()];
        for p in &patterns {
            for h in &hosts {
                assert_eq!(
                    find_induced(p, h).is_some(),
                    exists_by_enumeration(p, h),
                    "disagreement for pattern/host pair"
                );
            }
        }
    }

    #[test]
    fn embedding_preserves_edges_and_non_edges() {
        let p3 = path_graph(3).unwrap();
        let host = gamma1();
        let emb = find_induced(&p3, &host).unwrap();
        for i in 0..p3.vertex_count() {
            for j in i + 1..p3.vertex_count() {
                let hi = host.vertex_index(emb.image_of(p3.vertex_name(i)).unwrap()).unwrap();
                let hj = host.vertex_index(emb.image_of(p3.vertex_name(j)).unwrap()).unwrap();
                assert_eq!(p3.has_edge(i, j), host.has_edge(hi, hj));
            }
        }
    }

    #[test]
    fn weakly_chordal_paths_and_cycles() {
        for n in 0..=10 {
            assert!(path_graph(n).unwrap().is_weakly_chordal(), "P_{n}");
        }
        for n in 5..=8 {
            assert!(!cycle_graph(n).unwrap().is_weakly_chordal(), "C_{n}");
        }
    }

    #[test]
    fn weakly_chordal_closed_under_complement() {
        for g in [gamma1(), gamma2(), cycle_graph(6).unwrap(), path_graph(5).unwrap()] {
            assert_eq!(g.is_weakly_chordal(), g.complement().is_weakly_chordal());
        }
    }

    #[test]
    fn gamma1_is_not_thin_chordal() {
        // contains the induced path b-e-d-c
        assert!(!gamma1().is_thin_chordal());
    }

    #[test]
    fn thin_chordal_matches_pattern_search() {
        let c4 = cycle_graph(4).unwrap();
        let p3 = path_graph(3).unwrap();
        for g in [gamma1(), gamma2(), complete_graph(4).unwrap(), path_graph(2).unwrap()] {
            let expect = find_induced(&c4, &g).is_none() && find_induced(&p3, &g).is_none();
            assert_eq!(g.is_thin_chordal(), expect);
        }
    }

    #[test]
    fn chordal_detector() {
        assert!(gamma2().is_chordal());
        assert!(complete_graph(5).unwrap().is_chordal());
        assert!(!cycle_graph(4).unwrap().is_chordal());
        assert!(!cycle_graph(5).unwrap().is_chordal());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = cycle_graph(4).unwrap();
        let p3 = path_graph(3).unwrap();
        assert!(graph_isomorphic(&c4, &p3).is_none());
        let g = gamma2();
        let id = graph_isomorphic(&g, &g).unwrap();
        for (p, h) in id.pairs() {
            assert_eq!(p, h);
        }
    }

    #[test]
    fn star_and_link() {
        let g = gamma2();
        let d = g.vertex_index("d").unwrap();
        let star_names: Vec<&str> = g.star(d).iter().map(|&i| g.vertex_name(i)).collect();
        assert_eq!(star_names, vec!["a1", "a2", "c", "d", "e"]);
        let single = CommutationGraph::new(&["x"], &[]).unwrap();
        assert!(single.link(0).is_empty());
    }
}
