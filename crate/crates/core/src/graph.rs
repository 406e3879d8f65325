//! Multigraphs with parallel edges and loops, the deletion/contraction
//! primitives, and generators for the graph families behind each link family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An unordered edge, stored with `0 <= .0 <= .1`.
pub type Edge = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge:?} references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange { edge: Edge, vertex_count: usize },
    #[error("edge index {index} out of range (graph has {edge_count} edges)")]
    EdgeIndexOutOfRange { index: usize, edge_count: usize },
    #[error("cannot contract loop edge {index}")]
    ContractLoop { index: usize },
    #[error("{what} with n = {n}: {requirement}")]
    ParameterOutOfRange {
        what: String,
        n: i64,
        requirement: &'static str,
    },
    #[error("sign list has {signs} entries but the graph has {edges} edges")]
    SignCountMismatch { signs: usize, edges: usize },
    #[error("edge sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("unsupported dual pair kind {0}")]
    UnsupportedDual(GraphKind),
    #[error("graph must be connected")]
    Disconnected,
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

/// Vertices `0..vertex_count` plus an edge multiset. Parallel edges are
/// repeated pairs; a loop is a pair `(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

fn normalize((a, b): Edge) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Multigraph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges: Vec<Edge> = edges.into_iter().map(normalize).collect();
        if let Some(&edge) = edges.iter().find(|e| e.1 >= vertex_count) {
            return Err(GraphError::VertexOutOfRange { edge, vertex_count });
        }
        Ok(Multigraph { vertex_count, edges })
    }

    /// Internal constructor for edge lists already known to be valid.
    pub(crate) fn from_valid(vertex_count: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.0 <= e.1 && e.1 < vertex_count));
        Multigraph { vertex_count, edges }
    }

    /// `n` isolated vertices.
    pub fn edgeless(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_loop(&self, index: usize) -> bool {
        let (a, b) = self.edges[index];
        a == b
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Same graph with the edge list sorted; two graphs with equal canonical
    /// forms have identical edge multisets.
    pub fn canonical(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Multigraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Applies `perm` (old index -> new index) to every endpoint.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.vertex_count, "permutation length");
        let edges = self.edges.iter().map(|&(a, b)| normalize((perm[a], perm[b]))).collect();
        Multigraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    pub fn delete_edge(&self, index: usize) -> Result<Multigraph, GraphError> {
        self.check_index(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Merges the endpoints of a non-loop edge. The higher-numbered endpoint
    /// disappears and vertices above it shift down by one; other edges joining
    /// the merged pair become loops.
    pub fn contract_edge(&self, index: usize) -> Result<Multigraph, GraphError> {
        self.check_index(index)?;
        let (keep, gone) = self.edges[index];
        if keep == gone {
            return Err(GraphError::ContractLoop { index });
        }
        let remap = |w: usize| match w.cmp(&gone) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &(a, b))| normalize((remap(a), remap(b))))
            .collect();
        Ok(Multigraph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    fn check_index(&self, index: usize) -> Result<(), GraphError> {
        if index >= self.edges.len() {
            Err(GraphError::EdgeIndexOutOfRange {
                index,
                edge_count: self.edges.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Number of connected components `k(G)`; isolated vertices count.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.components()
    }

    /// Cycle rank `c(G) = e(G) + k(G) - n(G)`.
    pub fn cyclomatic(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.component_count() == 1
    }

    /// Component label for every vertex, labels numbered in order of first
    /// appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut root_label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            label[v] = root_label[r];
        }
        label
    }

    /// Marks every edge whose removal increases the component count.
    /// Loops are never bridges; an edge with a parallel twin is never a bridge.
    pub fn bridges(&self) -> Vec<bool> {
        let n = self.vertex_count;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                adj[a].push((b, i));
                adj[b].push((a, i));
            }
        }
        let mut is_bridge = vec![false; self.edges.len()];
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        // Iterative Tarjan lowlink, skipping only the tree edge by index so
        // parallel edges are handled correctly.
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(frame) = stack.last_mut() {
                let (v, parent_edge, pos) = *frame;
                if pos < adj[v].len() {
                    frame.2 += 1;
                    let (w, ei) = adj[v][pos];
                    if ei == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, ei, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            is_bridge[parent_edge] = true;
                        }
                    }
                }
            }
        }
        is_bridge
    }

    /// Disjoint union of two graphs; vertices of `other` are shifted up.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)))
            .collect();
        Multigraph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
        }
    }

    // Family generators. Each returns `Err` below its minimum parameter.

    /// Circuit `C_n`; `C_2` is a pair of parallel edges.
    pub fn circuit(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 2, "C", n, "n must be at least 2")?;
        Ok(Self::cycle_unchecked(n))
    }

    fn cycle_unchecked(n: usize) -> Multigraph {
        let edges = (0..n).map(|i| normalize((i, (i + 1) % n))).collect();
        Multigraph::from_valid(n, edges)
    }

    /// Fat link `FL_n`: two vertices joined by `n` parallel edges.
    pub fn fat_link(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 2, "FL", n, "n must be at least 2")?;
        Ok(Multigraph::from_valid(2, vec![(0, 1); n]))
    }

    /// `C_n` with the edge `(0, 1)` doubled.
    pub fn d1c(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 2, "D1C", n, "n must be at least 2")?;
        let mut g = Self::cycle_unchecked(n);
        g.edges.insert(0, (0, 1));
        Ok(g)
    }

    /// `C_n` with every edge doubled.
    pub fn doubled_circuit(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 2, "DC", n, "n must be at least 2")?;
        let g = Self::cycle_unchecked(n);
        let edges = g.edges.iter().flat_map(|&e| [e, e]).collect();
        Ok(Multigraph::from_valid(n, edges))
    }

    /// Wheel `(Wh)_n`: hub `0` joined to every vertex of the rim `C_{n-1}`
    /// on vertices `1..n`.
    pub fn wheel(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 3, "Wheel", n, "n must be at least 3")?;
        let rim = n - 1;
        let mut edges: Vec<Edge> = (0..rim).map(|i| normalize((1 + i, 1 + (i + 1) % rim))).collect();
        edges.extend((1..n).map(|v| (0, v)));
        Ok(Multigraph::from_valid(n, edges))
    }

    /// Hammock `H_{3,n}`: end vertices `0` and `1` joined by `n` two-edge
    /// paths through vertices `2..n+2`.
    pub fn hammock3(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 2, "H3", n, "n must be at least 2")?;
        let edges = (0..n).flat_map(|i| [(0, 2 + i), (1, 2 + i)]).collect();
        Ok(Multigraph::from_valid(n + 2, edges))
    }

    /// `HW_n`: hub `0`, rim `C_m` on `1..=m` with `m = (n-1)/2`, and each
    /// spoke subdivided by a vertex in `m+1..=2m`.
    pub fn homeomorphic_wheel(n: usize) -> Result<Multigraph, GraphError> {
        require(n >= 5 && n % 2 == 1, "HW", n, "n must be odd and at least 5")?;
        let m = (n - 1) / 2;
        let mut edges: Vec<Edge> = (0..m).map(|i| normalize((1 + i, 1 + (i + 1) % m))).collect();
        for i in 0..m {
            let mid = m + 1 + i;
            edges.push((0, mid));
            edges.push((1 + i, mid));
        }
        Ok(Multigraph::from_valid(n, edges))
    }
}

fn require(ok: bool, what: &str, n: usize, requirement: &'static str) -> Result<(), GraphError> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::ParameterOutOfRange {
            what: what.to_string(),
            n: n as i64,
            requirement,
        })
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.vertex_count)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "]")
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.sets -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.sets
    }
}

/// Sign of an edge in the associated graph of a non-alternating link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Sign, GraphError> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(GraphError::BadSign(other)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMultigraph {
    graph: Multigraph,
    signs: Vec<Sign>,
}

impl SignedMultigraph {
    pub fn new(graph: Multigraph, signs: Vec<Sign>) -> Result<Self, GraphError> {
        if signs.len() != graph.edge_count() {
            return Err(GraphError::SignCountMismatch {
                signs: signs.len(),
                edges: graph.edge_count(),
            });
        }
        Ok(SignedMultigraph { graph, signs })
    }

    pub fn all_positive(graph: Multigraph) -> Self {
        let signs = vec![Sign::Plus; graph.edge_count()];
        SignedMultigraph { graph, signs }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.signs.iter().filter(|&&s| s == sign).count()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signs: Option<Vec<i64>>,
}

impl SignedMultigraph {
    /// Parses `{"vertices": N, "edges": [[u,v],...], "signs": [1,-1,...]}`;
    /// a missing `signs` array means every edge is positive.
    pub fn from_json(text: &str) -> Result<SignedMultigraph, GraphError> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        let graph = Multigraph::new(raw.vertices, raw.edges.iter().map(|e| (e[0], e[1])))?;
        match raw.signs {
            None => Ok(SignedMultigraph::all_positive(graph)),
            Some(values) => {
                let signs = values
                    .into_iter()
                    .map(Sign::from_value)
                    .collect::<Result<Vec<_>, _>>()?;
                SignedMultigraph::new(graph, signs)
            }
        }
    }

    pub fn to_json(&self) -> String {
        let signs = if self.signs.iter().all(|&s| s == Sign::Plus) {
            None
        } else {
            Some(self.signs.iter().map(|s| s.value()).collect())
        };
        let raw = GraphJson {
            vertices: self.graph.vertex_count,
            edges: self.graph.edges.iter().map(|&(a, b)| [a, b]).collect(),
            signs,
        };
        serde_json::to_string(&raw).expect("graph JSON serialization")
    }
}

impl Multigraph {
    pub fn from_json(text: &str) -> Result<Multigraph, GraphError> {
        Ok(SignedMultigraph::from_json(text)?.graph)
    }

    pub fn to_json(&self) -> String {
        SignedMultigraph::all_positive(self.clone()).to_json()
    }
}

/// Named graph constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Circuit,
    FatLink,
    D1C,
    DoubledCircuit,
    Wheel,
    Hammock3,
    HomeomorphicWheel,
}

impl GraphKind {
    pub const ALL: [GraphKind; 7] = [
        GraphKind::Circuit,
        GraphKind::FatLink,
        GraphKind::D1C,
        GraphKind::DoubledCircuit,
        GraphKind::Wheel,
        GraphKind::Hammock3,
        GraphKind::HomeomorphicWheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Circuit => "C",
            GraphKind::FatLink => "FL",
            GraphKind::D1C => "D1C",
            GraphKind::DoubledCircuit => "DC",
            GraphKind::Wheel => "Wheel",
            GraphKind::Hammock3 => "H3",
            GraphKind::HomeomorphicWheel => "HW",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown graph kind `{s}` (expected C, FL, D1C, DC, Wheel, H3 or HW)"))
    }
}

pub fn build_graph(kind: GraphKind, n: usize) -> Result<Multigraph, GraphError> {
    match kind {
        GraphKind::Circuit => Multigraph::circuit(n),
        GraphKind::FatLink => Multigraph::fat_link(n),
        GraphKind::D1C => Multigraph::d1c(n),
        GraphKind::DoubledCircuit => Multigraph::doubled_circuit(n),
        GraphKind::Wheel => Multigraph::wheel(n),
        GraphKind::Hammock3 => Multigraph::hammock3(n),
        GraphKind::HomeomorphicWheel => Multigraph::homeomorphic_wheel(n),
    }
}

/// The planar dual pairs used here: `(C_n, FL_n)`, `(H_{3,n}, DC_n)` and the
/// self-dual wheel. `kind` names the first member of the pair.
pub fn dual_pair(kind: GraphKind, n: usize) -> Result<(Multigraph, Multigraph), GraphError> {
    match kind {
        GraphKind::Circuit | GraphKind::FatLink => Ok((Multigraph::circuit(n)?, Multigraph::fat_link(n)?)),
        GraphKind::Hammock3 | GraphKind::DoubledCircuit => {
            Ok((Multigraph::hammock3(n)?, Multigraph::doubled_circuit(n)?))
        }
        GraphKind::Wheel => {
            let w = Multigraph::wheel(n)?;
            Ok((w.clone(), w))
        }
        other => Err(GraphError::UnsupportedDual(other)),
    }
}

/// The four link families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    E,
    F,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::E, Family::F];

    /// Smallest valid parameter.
    pub fn min_n(self) -> usize {
        match self {
            Family::A | Family::B => 3,
            Family::E => 2,
            Family::F => 5,
        }
    }

    pub fn is_valid(self, n: usize) -> bool {
        n >= self.min_n() && (self != Family::F || n % 2 == 1)
    }

    /// Valid parameters in `lo..=hi`.
    pub fn params(self, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
        (lo.max(self.min_n())..=hi).filter(move |&n| self.is_valid(n))
    }

    pub fn graph_kind(self) -> GraphKind {
        match self {
            Family::A => GraphKind::D1C,
            Family::B => GraphKind::Wheel,
            Family::E => GraphKind::Hammock3,
            Family::F => GraphKind::HomeomorphicWheel,
        }
    }

    /// Parameter of the associated graph `G_+` for member `n`.
    pub fn graph_param(self, n: usize) -> usize {
        match self {
            Family::A => n - 1,
            _ => n,
        }
    }

    fn requirement(self) -> &'static str {
        match self {
            Family::A | Family::B => "n must be at least 3",
            Family::E => "n must be at least 2",
            Family::F => "n must be odd and at least 5",
        }
    }

    pub fn check(self, n: usize) -> Result<(), GraphError> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(GraphError::ParameterOutOfRange {
                what: format!("family {self}"),
                n: n as i64,
                requirement: self.requirement(),
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::E => "E",
            Family::F => "F",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            _ => Err(format!("unknown family `{s}` (expected A, B, E or F)")),
        }
    }
}

/// A family member: its associated graph `G_+` and the diagram data that
/// enters the Jones prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkPresentation {
    pub family: Family,
    pub n: usize,
    pub graph: Multigraph,
    pub writhe: i64,
    pub n_dark: usize,
    pub n_light: usize,
    pub crossings: usize,
    pub n_components: usize,
}

pub fn link_presentation(family: Family, n: usize) -> Result<LinkPresentation, GraphError> {
    family.check(n)?;
    let graph = build_graph(family.graph_kind(), family.graph_param(n))?;
    let ni = n as i64;
    let (writhe, n_dark, n_light, crossings) = match family {
        Family::A => {
            let w = if n % 2 == 1 { -ni } else { 4 - ni };
            (w, n - 1, 3, n)
        }
        Family::B => (0, n, n, 2 * (n - 1)),
        Family::E => (-2 * ni, n + 2, n, 2 * n),
        Family::F => (-(ni - 1) / 2, n, n.div_ceil(2), 3 * (n - 1) / 2),
    };
    let n_components = link_component_count(&graph)?;
    Ok(LinkPresentation {
        family,
        n,
        graph,
        writhe,
        n_dark,
        n_light,
        crossings,
        n_components,
    })
}

/// Number of link components of the medial link of `graph`.
///
/// `n_c - 1` is the dimension of the bicycle space (edge sets that are both
/// cycles and cocycles over GF(2)), which is also why `|T(G,-1,-1)| =
/// 2^(n_c - 1)`. A cocycle `yM` (M the incidence matrix) is a cycle exactly
/// when `L y = 0` for the GF(2) Laplacian `L = M M^T`; dividing out the
/// all-ones vector of the connected graph leaves `n_c = |V| - rank_2(L)`.
pub fn link_component_count(graph: &Multigraph) -> Result<usize, GraphError> {
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = graph.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    let flip = |rows: &mut Vec<Vec<u64>>, r: usize, c: usize| rows[r][c / 64] ^= 1 << (c % 64);
    for &(a, b) in graph.edges() {
        if a != b {
            flip(&mut rows, a, a);
            flip(&mut rows, b, b);
            flip(&mut rows, a, b);
            flip(&mut rows, b, a);
        }
    }
    Ok(n - gf2_rank(rows, n))
}

fn gf2_rank(mut rows: Vec<Vec<u64>>, columns: usize) -> usize {
    let mut rank = 0;
    for c in 0..columns {
        let bit = |row: &Vec<u64>| row[c / 64] >> (c % 64) & 1 == 1;
        let Some(pivot) = (rank..rows.len()).find(|&r| bit(&rows[r])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && bit(&rows[r]) {
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delete_from_cycle_gives_path() {
        let c3 = Multigraph::circuit(3).unwrap();
        for e in 0..3 {
            let p = c3.delete_edge(e).unwrap();
            assert_eq!(p.vertex_count(), 3);
            assert_eq!(p.edge_count(), 2);
            assert!(p.is_connected());
            assert_eq!(p.cyclomatic(), 0);
        }
    }

    #[test]
    fn delete_parallel_and_loop() {
        let fl3 = Multigraph::fat_link(3).unwrap();
        assert_eq!(
            fl3.delete_edge(1).unwrap().canonical(),
            Multigraph::fat_link(2).unwrap()
        );
        let lp = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(lp.delete_edge(0).unwrap(), Multigraph::edgeless(1));
        assert_eq!(
            lp.delete_edge(3),
            Err(GraphError::EdgeIndexOutOfRange {
                index: 3,
                edge_count: 1
            })
        );
    }

    #[test]
    fn contraction_examples() {
        let c3 = Multigraph::circuit(3).unwrap();
        let c2 = Multigraph::circuit(2).unwrap().canonical();
        for e in 0..3 {
            assert_eq!(c3.contract_edge(e).unwrap().canonical(), c2);
        }
        let fl2 = Multigraph::fat_link(2).unwrap();
        assert_eq!(fl2.contract_edge(0).unwrap(), Multigraph::new(1, [(0, 0)]).unwrap());
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.contract_edge(0).unwrap(), Multigraph::edgeless(1));
        let lp = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(lp.contract_edge(0), Err(GraphError::ContractLoop { index: 0 }));
    }

    #[test]
    fn components_and_cycle_rank() {
        let c4 = Multigraph::circuit(4).unwrap();
        assert_eq!((c4.component_count(), c4.cyclomatic()), (1, 1));
        let fl3 = Multigraph::fat_link(3).unwrap();
        assert_eq!((fl3.component_count(), fl3.cyclomatic()), (1, 2));
        let e3 = Multigraph::edgeless(3);
        assert_eq!((e3.component_count(), e3.cyclomatic()), (3, 0));
    }

    #[test]
    fn bridges_respect_parallel_edges() {
        // path 0-1-2 with 1-2 doubled, plus a loop at 0
        let g = Multigraph::new(3, [(0, 1), (1, 2), (1, 2), (0, 0)]).unwrap();
        assert_eq!(g.bridges(), vec![true, false, false, false]);
        let c4 = Multigraph::circuit(4).unwrap();
        assert!(c4.bridges().iter().all(|b| !b));
    }

    #[test]
    fn named_constructions() {
        assert_eq!(
            Multigraph::d1c(2).unwrap().canonical(),
            Multigraph::fat_link(3).unwrap()
        );
        assert_eq!(
            Multigraph::doubled_circuit(2).unwrap().canonical(),
            Multigraph::fat_link(4).unwrap()
        );
        let hw5 = Multigraph::homeomorphic_wheel(5).unwrap();
        assert_eq!((hw5.vertex_count(), hw5.edge_count()), (5, 6));
        let h32 = Multigraph::hammock3(2).unwrap();
        assert_eq!((h32.vertex_count(), h32.edge_count()), (4, 4));
        assert!(h32
            .edges()
            .iter()
            .all(|&(a, b)| h32.degree(a) == 2 && h32.degree(b) == 2));
        let wh = Multigraph::wheel(6).unwrap();
        assert_eq!((wh.vertex_count(), wh.edge_count()), (6, 10));
        assert_eq!(wh.degree(0), 5);
        assert!(Multigraph::wheel(2).is_err());
        assert!(Multigraph::homeomorphic_wheel(6).is_err());
        assert!(Multigraph::homeomorphic_wheel(3).is_err());
    }

    #[test]
    fn dual_pairs() {
        let (g, d) = dual_pair(GraphKind::Circuit, 4).unwrap();
        assert_eq!(g, Multigraph::circuit(4).unwrap());
        assert_eq!(d, Multigraph::fat_link(4).unwrap());
        let (g, d) = dual_pair(GraphKind::Hammock3, 3).unwrap();
        assert_eq!((g.edge_count(), d.edge_count()), (6, 6));
        let (g, d) = dual_pair(GraphKind::Wheel, 5).unwrap();
        assert_eq!(g, d);
        assert!(dual_pair(GraphKind::D1C, 4).is_err());
    }

    #[test]
    fn presentations_of_named_links() {
        let a9 = link_presentation(Family::A, 9).unwrap();
        assert_eq!(a9.graph, Multigraph::d1c(8).unwrap());
        assert_eq!((a9.writhe, a9.n_dark, a9.n_light, a9.crossings), (-9, 8, 3, 9));
        let b5 = link_presentation(Family::B, 5).unwrap();
        assert_eq!(b5.graph, Multigraph::wheel(5).unwrap());
        assert_eq!((b5.writhe, b5.crossings), (0, 8));
        let e2 = link_presentation(Family::E, 2).unwrap();
        assert_eq!((e2.writhe, e2.n_dark, e2.n_light, e2.crossings), (-4, 4, 2, 4));
        assert_eq!(e2.n_components, 2);
        assert!(link_presentation(Family::F, 4).is_err());
        assert!(link_presentation(Family::A, 2).is_err());
    }

    #[test]
    fn component_counts_of_named_links() {
        assert_eq!(link_component_count(&Multigraph::d1c(2).unwrap()).unwrap(), 1);
        assert_eq!(link_component_count(&Multigraph::wheel(4).unwrap()).unwrap(), 3);
        assert_eq!(link_component_count(&Multigraph::hammock3(4).unwrap()).unwrap(), 4);
        assert_eq!(
            link_component_count(&Multigraph::edgeless(2)),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn json_round_trip_and_defaults() {
        let sg = SignedMultigraph::from_json(r#"{"vertices":3,"edges":[[0,1],[2,1]],"signs":[1,-1]}"#).unwrap();
        assert_eq!(sg.graph().edges(), &[(0, 1), (1, 2)]);
        assert_eq!(sg.signs(), &[Sign::Plus, Sign::Minus]);
        assert_eq!(SignedMultigraph::from_json(&sg.to_json()).unwrap(), sg);
        let g = Multigraph::from_json(r#"{"vertices":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            Multigraph::from_json(r#"{"vertices":2,"edges":[[0,5]]}"#),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            SignedMultigraph::from_json(r#"{"vertices":2,"edges":[[0,1]],"signs":[2]}"#),
            Err(GraphError::BadSign(2))
        ));
        assert!(matches!(Multigraph::from_json("{"), Err(GraphError::Json(_))));
    }
}
