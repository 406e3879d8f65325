//! Tutte polynomials by spanning-subgraph enumeration, by memoized
//! deletion-contraction, and by closed forms for the four graph families;
//! plus the signed-graph variant and the Potts and chromatic specializations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{build_graph, GraphError, GraphKind, Multigraph, Sign, SignedMultigraph, UnionFind};
use crate::poly::{BivarLaurent, BivarPoly, IntPoly};

/// Largest edge count accepted by the `2^e` subgraph enumerations.
pub const ENUMERATION_EDGE_LIMIT: usize = 24;

#[derive(Debug, Error, PartialEq)]
pub enum TutteError {
    #[error("subgraph enumeration limited to {limit} edges, graph has {edges}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("the Tutte route to the Potts partition function needs v != 0")]
    ZeroCoupling,
    #[error("no closed form for graph kind {0}")]
    NoClosedForm(GraphKind),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---------------------------------------------------------------------------
// Spanning-subgraph census

/// Histogram of spanning subgraphs by (components, edges, marked edges).
#[derive(Clone, Debug)]
pub struct SubgraphCensus {
    vertex_count: usize,
    base_components: usize,
    max_edges: usize,
    max_marked: usize,
    counts: Vec<u64>,
}

impl SubgraphCensus {
    fn index(&self, k: usize, e: usize, p: usize) -> usize {
        (k * (self.max_edges + 1) + e) * (self.max_marked + 1) + p
    }

    /// Nonzero cells as `(components, edges, marked, count)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize, u64)> + '_ {
        (0..=self.vertex_count).flat_map(move |k| {
            (0..=self.max_edges).flat_map(move |e| {
                (0..=self.max_marked).filter_map(move |p| {
                    let c = self.counts[self.index(k, e, p)];
                    (c > 0).then_some((k, e, p, c))
                })
            })
        })
    }
}

/// Union-find without path compression so unions can be undone.
struct RollbackUf {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
    sets: usize,
}

impl RollbackUf {
    fn new(n: usize) -> Self {
        RollbackUf {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
            sets: n,
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        self.history.push(Some((ra, rb)));
    }

    fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
            self.sets += 1;
        }
    }
}

fn census_rec(
    edges: &[(usize, usize)],
    marked: &[bool],
    i: usize,
    uf: &mut RollbackUf,
    e: usize,
    p: usize,
    out: &mut SubgraphCensus,
) {
    if i == edges.len() {
        let idx = out.index(uf.sets, e, p);
        out.counts[idx] += 1;
        return;
    }
    census_rec(edges, marked, i + 1, uf, e, p, out);
    let (a, b) = edges[i];
    uf.union(a, b);
    census_rec(edges, marked, i + 1, uf, e + 1, p + usize::from(marked[i]), out);
    uf.undo();
}

/// Enumerates all `2^e` spanning subgraphs, recording how many marked edges
/// each contains.
pub fn subgraph_census(graph: &Multigraph, marked: &[bool]) -> Result<SubgraphCensus, TutteError> {
    let m = graph.edge_count();
    if m > ENUMERATION_EDGE_LIMIT {
        return Err(TutteError::TooManyEdges {
            edges: m,
            limit: ENUMERATION_EDGE_LIMIT,
        });
    }
    assert_eq!(marked.len(), m, "one mark per edge");
    let n = graph.vertex_count();
    let max_marked = marked.iter().filter(|&&b| b).count();
    let empty = SubgraphCensus {
        vertex_count: n,
        base_components: graph.component_count(),
        max_edges: m,
        max_marked,
        counts: vec![0; (n + 1) * (m + 1) * (max_marked + 1)],
    };
    let edges = graph.edges();
    let split = m.min(6);
    let merged = (0..1usize << split)
        .into_par_iter()
        .map(|mask| {
            let mut part = empty.clone();
            let mut uf = RollbackUf::new(n);
            let (mut e, mut p) = (0, 0);
            for (j, &(a, b)) in edges.iter().enumerate().take(split) {
                if mask >> j & 1 == 1 {
                    uf.union(a, b);
                    e += 1;
                    p += usize::from(marked[j]);
                }
            }
            census_rec(edges, marked, split, &mut uf, e, p, &mut part);
            part
        })
        .reduce(
            || empty.clone(),
            |mut a, b| {
                for (x, y) in a.counts.iter_mut().zip(&b.counts) {
                    *x += y;
                }
                a
            },
        );
    Ok(merged)
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Expands `sum A[a,b,p] (x-1)^a (y-1)^b (-1/y)^p` into a Laurent polynomial.
fn expand_shifted(table: &HashMap<(usize, usize, usize), BigInt>) -> BivarLaurent {
    let mut out = BivarLaurent::zero();
    for (&(a, b, p), count) in table {
        let ra = binomial_row(a);
        let rb = binomial_row(b);
        let sign_p = if p % 2 == 0 { 1 } else { -1 };
        for (i, ca) in ra.iter().enumerate() {
            let sa = if (a - i) % 2 == 0 { 1 } else { -1 };
            for (j, cb) in rb.iter().enumerate() {
                let sb = if (b - j) % 2 == 0 { 1 } else { -1 };
                let c = count * ca * cb * BigInt::from(sa * sb * sign_p);
                out.add_term((i as i32, j as i32 - p as i32), c);
            }
        }
    }
    out
}

/// Spanning-subgraph sum `sum (x-1)^(k(G')-k(G)) (y-1)^(c(G'))`.
pub fn tutte_bruteforce(graph: &Multigraph) -> Result<BivarPoly, TutteError> {
    let census = subgraph_census(graph, &vec![false; graph.edge_count()])?;
    let mut table: HashMap<(usize, usize, usize), BigInt> = HashMap::new();
    for (k, e, _, count) in census.cells() {
        let a = k - census.base_components;
        let b = e + k - census.vertex_count;
        *table.entry((a, b, 0)).or_default() += BigInt::from(count);
    }
    let laurent = expand_shifted(&table);
    Ok(laurent.map_exponents(|(i, j)| (i as u32, j as u32)))
}

/// Signed-graph Tutte sum with the extra weight `(-1/y)^(e'(G'))`, where
/// `e'` counts the edges of sign `primed` in `G'`.
pub fn signed_tutte(graph: &SignedMultigraph, primed: Sign) -> Result<BivarLaurent, TutteError> {
    let marked: Vec<bool> = graph.signs().iter().map(|&s| s == primed).collect();
    let census = subgraph_census(graph.graph(), &marked)?;
    let mut table: HashMap<(usize, usize, usize), BigInt> = HashMap::new();
    for (k, e, p, count) in census.cells() {
        let a = k - census.base_components;
        let b = e + k - census.vertex_count;
        *table.entry((a, b, p)).or_default() += BigInt::from(count);
    }
    Ok(expand_shifted(&table))
}

// ---------------------------------------------------------------------------
// Deletion-contraction

/// Deletion-contraction with loops and bridges peeled as factors, parallel
/// classes reduced in one step, and a memo keyed by a refined relabeling.
pub fn tutte_dc(graph: &Multigraph) -> BivarPoly {
    DcSolver::default().tutte(graph)
}

#[derive(Default)]
pub struct DcSolver {
    memo: HashMap<Vec<u32>, BivarPoly>,
}

impl DcSolver {
    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn tutte(&mut self, graph: &Multigraph) -> BivarPoly {
        let loops = graph.edges().iter().filter(|e| e.0 == e.1).count();
        let labels = graph.component_labels();
        let ncomp = labels.iter().max().map_or(0, |m| m + 1);
        let mut result = BivarPoly::monomial((0, loops as u32), 1);
        for c in 0..ncomp {
            let part = component_without_loops(graph, &labels, c);
            if part.edge_count() > 0 {
                result = &result * &self.connected(part);
            }
        }
        result
    }

    /// `graph` is connected, loopless, and has at least one edge.
    fn connected(&mut self, graph: Multigraph) -> BivarPoly {
        let (key, graph) = refined_form(&graph);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let value = self.connected_uncached(&graph);
        self.memo.insert(key, value.clone());
        value
    }

    fn connected_uncached(&mut self, graph: &Multigraph) -> BivarPoly {
        let bridges = graph.bridges();
        let bridge_count = bridges.iter().filter(|&&b| b).count();
        if bridge_count > 0 {
            let merged = merge_endpoints(graph, |i| bridges[i]);
            let rest = if merged.edge_count() == 0 {
                BivarPoly::one()
            } else {
                self.tutte(&merged)
            };
            return rest.mul_term((bridge_count as u32, 0), &BigInt::one());
        }
        // Lowest-index edge and its parallel class.
        let first = graph.edges()[0];
        let class: Vec<bool> = graph.edges().iter().map(|&e| e == first).collect();
        let k = class.iter().filter(|&&b| b).count() as u32;
        let contracted = merge_endpoints(graph, |i| class[i]);
        let contracted_t = if contracted.edge_count() == 0 {
            BivarPoly::one()
        } else {
            self.tutte(&contracted)
        };
        let geometric: BivarPoly = (0..k).map(|j| BivarPoly::monomial((0, j), 1)).sum();
        let deleted = Multigraph::from_valid(
            graph.vertex_count(),
            graph
                .edges()
                .iter()
                .zip(&class)
                .filter(|(_, &c)| !c)
                .map(|(&e, _)| e)
                .collect(),
        );
        if deleted.is_connected() {
            &self.tutte(&deleted) + &(&geometric * &contracted_t)
        } else {
            // The class is a multi-edge bridge: x + y + ... + y^(k-1).
            let factor = &(&geometric - &BivarPoly::one()) + &BivarPoly::x();
            &factor * &contracted_t
        }
    }
}

fn component_without_loops(graph: &Multigraph, labels: &[usize], c: usize) -> Multigraph {
    let mut index = vec![usize::MAX; graph.vertex_count()];
    let mut next = 0;
    for (v, &l) in labels.iter().enumerate() {
        if l == c {
            index[v] = next;
            next += 1;
        }
    }
    let edges = graph
        .edges()
        .iter()
        .filter(|&&(a, b)| a != b && labels[a] == c)
        .map(|&(a, b)| (index[a], index[b]))
        .collect();
    Multigraph::from_valid(next, edges)
}

/// Contracts every selected edge at once (endpoints merged, selected edges
/// dropped). Unselected edges between merged vertices become loops.
fn merge_endpoints(graph: &Multigraph, selected: impl Fn(usize) -> bool) -> Multigraph {
    let n = graph.vertex_count();
    let mut uf = UnionFind::new(n);
    for (i, &(a, b)) in graph.edges().iter().enumerate() {
        if selected(i) {
            uf.union(a, b);
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        let r = uf.find(v);
        if index[r] == usize::MAX {
            index[r] = next;
            next += 1;
        }
        index[v] = index[r];
    }
    let edges = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| !selected(i))
        .map(|(_, &(a, b))| {
            let (a, b) = (index[a], index[b]);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    Multigraph::from_valid(next, edges)
}

/// Relabels vertices by colour refinement (ties broken by index) and returns
/// the sorted edge list as a memo key together with the relabeled graph.
/// Equal keys imply equal graphs, so a hit is always sound; isomorphic graphs
/// whose refinement leaves ties may still miss.
fn refined_form(graph: &Multigraph) -> (Vec<u32>, Multigraph) {
    let n = graph.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in graph.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut classes = distinct(&colour);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = adj[v].iter().map(|&w| colour[w]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("signature present"))
            .collect();
        let next_classes = distinct(&next);
        colour = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colour[v], v));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let relabeled = graph.relabel(&perm).canonical();
    let mut key = Vec::with_capacity(2 * relabeled.edge_count() + 1);
    key.push(n as u32);
    for &(a, b) in relabeled.edges() {
        key.push(a as u32);
        key.push(b as u32);
    }
    (key, relabeled)
}

fn distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

// ---------------------------------------------------------------------------
// Closed family forms

/// Power sums `s_m = a^m + b^m` of the roots of `z^2 - sum*z + product`,
/// via `s_m = sum*s_(m-1) - product*s_(m-2)`.
pub(crate) fn conjugate_power_sum<E: crate::poly::Exponent>(
    sum: &crate::poly::SparsePoly<E>,
    product: &crate::poly::SparsePoly<E>,
    m: u32,
) -> crate::poly::SparsePoly<E> {
    let two = crate::poly::SparsePoly::<E>::constant(2);
    if m == 0 {
        return two;
    }
    let mut prev = two;
    let mut cur = sum.clone();
    for _ in 1..m {
        let next = &(sum * &cur) - &(product * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Closed forms for `D1C_n`, `(Wh)_n`, `H_{3,n}` and `HW_n`, all computed
/// without division.
pub fn tutte_family_closed(kind: GraphKind, n: usize) -> Result<BivarPoly, TutteError> {
    // Same parameter checks as the graph generators.
    build_graph(kind, n)?;
    let x = BivarPoly::x();
    let y = BivarPoly::y();
    let one = BivarPoly::one();
    match kind {
        GraphKind::D1C => {
            // (1+y)[y + x + ... + x^(n-2)] + x^(n-1)
            let inner: BivarPoly = std::iter::once(y.clone())
                .chain((1..=n as u32 - 2).map(|j| BivarPoly::monomial((j, 0), 1)))
                .sum();
            Ok(&(&(&one + &y) * &inner) + &x.pow(n as u32 - 1))
        }
        GraphKind::Wheel => {
            let base = &(&(&x * &y) - &x) - &(&y + &one);
            let sum = &(&one + &x) + &y;
            Ok(&base + &conjugate_power_sum(&sum, &(&x * &y), n as u32 - 1))
        }
        GraphKind::Hammock3 => {
            // (x-1)(1+x)^n + sum_{j<n} (x+y)^j (x+1)^(n-1-j)
            let xp1 = &x + &one;
            let xpy = &x + &y;
            let mut total = &(&x - &one) * &xp1.pow(n as u32);
            for j in 0..n as u32 {
                total += &(&xpy.pow(j) * &xp1.pow(n as u32 - 1 - j));
            }
            Ok(total)
        }
        GraphKind::HomeomorphicWheel => {
            let m = (n as u32 - 1) / 2;
            let xp1 = &x + &one;
            let base = &(&(&(&x * &y) - &x) - &y) - &one;
            let sum = &(&(&one + &x.scale(&BigInt::from(2))) + &x.pow(2)) + &y;
            let product = &(&x * &xp1) * &(&x + &y);
            Ok(&(&base * &xp1.pow(m)) + &conjugate_power_sum(&sum, &product, m))
        }
        other => Err(TutteError::NoClosedForm(other)),
    }
}

// ---------------------------------------------------------------------------
// Potts and chromatic

/// Potts partition function from both routes.
#[derive(Clone, Copy, Debug)]
pub struct PottsValue {
    /// Direct cluster sum; `None` when the graph exceeds the enumeration limit.
    pub direct: Option<Complex64>,
    /// `(x-1)^k(G) (y-1)^n(G) T(G,x,y)` at `x = 1 + q/v`, `y = 1 + v`.
    pub via_tutte: Complex64,
}

impl PottsValue {
    pub fn value(&self) -> Complex64 {
        self.direct.unwrap_or(self.via_tutte)
    }

    pub fn relative_disagreement(&self) -> f64 {
        match self.direct {
            None => 0.0,
            Some(d) => (d - self.via_tutte).norm() / d.norm().max(self.via_tutte.norm()).max(f64::MIN_POSITIVE),
        }
    }
}

/// Cluster sum `sum q^k(G') v^e(G')`.
pub fn potts_direct(graph: &Multigraph, q: Complex64, v: Complex64) -> Result<Complex64, TutteError> {
    let census = subgraph_census(graph, &vec![false; graph.edge_count()])?;
    Ok(census
        .cells()
        .map(|(k, e, _, count)| q.powu(k as u32) * v.powu(e as u32) * count as f64)
        .sum())
}

pub fn potts_via_tutte_poly(
    graph: &Multigraph,
    tutte: &BivarPoly,
    q: Complex64,
    v: Complex64,
) -> Result<Complex64, TutteError> {
    if v == Complex64::new(0.0, 0.0) {
        return Err(TutteError::ZeroCoupling);
    }
    let x = 1.0 + q / v;
    let y = 1.0 + v;
    let k = graph.component_count() as u32;
    let n = graph.vertex_count() as u32;
    Ok((q / v).powu(k) * v.powu(n) * tutte.eval(x, y))
}

pub fn potts_partition(graph: &Multigraph, q: Complex64, v: Complex64) -> Result<PottsValue, TutteError> {
    let via_tutte = potts_via_tutte_poly(graph, &tutte_dc(graph), q, v)?;
    let direct = match potts_direct(graph, q, v) {
        Ok(z) => Some(z),
        Err(TutteError::TooManyEdges { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(PottsValue { direct, via_tutte })
}

/// Coupling carried by an edge of the opposite sign: flipping a crossing
/// sends `y = 1 + v` to `1/y`, so `v -> -v / (1 + v)`. The map is an
/// involution away from `v = -1`.
pub fn dual_coupling(v: Complex64) -> Complex64 {
    -v / (1.0 + v)
}

/// Chromatic polynomial `P(G,q) = (-q)^k(G) (-1)^n(G) T(G, 1-q, 0)` as an
/// exact polynomial in `q`.
pub fn chromatic_from_tutte(graph: &Multigraph, tutte: &BivarPoly) -> IntPoly {
    let q = IntPoly::var();
    let one_minus_q = &IntPoly::one() - &q;
    let at = tutte.substitute_univariate(&one_minus_q, &IntPoly::zero());
    let k = graph.component_count() as u32;
    let n = graph.vertex_count() as u32;
    let sign = if (k + n).is_multiple_of(2) { 1 } else { -1 };
    at.mul_term(k, &BigInt::from(sign))
}

pub fn chromatic(graph: &Multigraph) -> IntPoly {
    chromatic_from_tutte(graph, &tutte_dc(graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(terms: &[((u32, u32), i64)]) -> BivarPoly {
        BivarPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn bruteforce_small_cases() {
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(tutte_bruteforce(&k2).unwrap(), BivarPoly::x());
        let lp = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(tutte_bruteforce(&lp).unwrap(), BivarPoly::y());
        let fl3 = Multigraph::fat_link(3).unwrap();
        assert_eq!(
            tutte_bruteforce(&fl3).unwrap(),
            bp(&[((1, 0), 1), ((0, 1), 1), ((0, 2), 1)])
        );
        let big = Multigraph::fat_link(25).unwrap();
        assert!(matches!(
            tutte_bruteforce(&big),
            Err(TutteError::TooManyEdges { edges: 25, .. })
        ));
    }

    #[test]
    fn dc_small_cases() {
        let c4 = Multigraph::circuit(4).unwrap();
        assert_eq!(tutte_dc(&c4), bp(&[((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(
            tutte_dc(&Multigraph::wheel(3).unwrap()),
            tutte_dc(&Multigraph::d1c(3).unwrap())
        );
        assert_eq!(tutte_dc(&Multigraph::edgeless(4)), BivarPoly::one());
        // disconnected graph with loops: product of parts
        let g = Multigraph::new(4, [(0, 1), (2, 3), (2, 3), (3, 3)]).unwrap();
        assert_eq!(tutte_dc(&g), tutte_bruteforce(&g).unwrap());
    }

    #[test]
    fn closed_forms_small_cases() {
        assert_eq!(
            tutte_family_closed(GraphKind::D1C, 2).unwrap(),
            bp(&[((1, 0), 1), ((0, 1), 1), ((0, 2), 1)])
        );
        assert_eq!(
            tutte_family_closed(GraphKind::Hammock3, 2).unwrap(),
            bp(&[((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)])
        );
        assert_eq!(
            tutte_family_closed(GraphKind::HomeomorphicWheel, 5).unwrap(),
            tutte_dc(&Multigraph::homeomorphic_wheel(5).unwrap())
        );
        assert!(matches!(
            tutte_family_closed(GraphKind::Circuit, 4),
            Err(TutteError::NoClosedForm(GraphKind::Circuit))
        ));
        assert!(tutte_family_closed(GraphKind::Wheel, 2).is_err());
    }

    #[test]
    fn signed_variant_small_cases() {
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        let pos = SignedMultigraph::all_positive(k2);
        // unprimed sign: ordinary Tutte polynomial
        assert_eq!(signed_tutte(&pos, Sign::Minus).unwrap(), BivarPoly::x().to_laurent());
        // primed: empty subgraph gives x - 1, full edge gives -1/y
        let expected = BivarLaurent::from_terms([((1, 0), 1), ((0, 0), -1), ((0, -1), -1)]);
        assert_eq!(signed_tutte(&pos, Sign::Plus).unwrap(), expected);
        let empty = SignedMultigraph::all_positive(Multigraph::edgeless(1));
        assert_eq!(signed_tutte(&empty, Sign::Plus).unwrap(), BivarLaurent::one());
    }

    #[test]
    fn potts_small_cases() {
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        let (q, v) = (Complex64::new(1.3, -0.2), Complex64::new(0.7, 0.4));
        let z = potts_partition(&k2, q, v).unwrap();
        let expected = q * q + q * v;
        assert!((z.direct.unwrap() - expected).norm() < 1e-12);
        assert!((z.via_tutte - expected).norm() < 1e-12);
        assert_eq!(
            potts_partition(&k2, q, Complex64::new(0.0, 0.0)).unwrap_err(),
            TutteError::ZeroCoupling
        );
        // (x-1)(y-1) = q for the substitution pair
        let (x, y) = (1.0 + q / v, 1.0 + v);
        assert!(((x - 1.0) * (y - 1.0) - q).norm() < 1e-14);
    }

    #[test]
    fn chromatic_small_cases() {
        let c3 = Multigraph::circuit(3).unwrap();
        assert_eq!(chromatic(&c3), IntPoly::from_terms([(3, 1), (2, -3), (1, 2)]));
        let looped = Multigraph::new(2, [(0, 1), (1, 1)]).unwrap();
        assert!(chromatic(&looped).is_zero());
        assert_eq!(chromatic(&Multigraph::edgeless(2)), IntPoly::monomial(2, 1));
    }

    #[test]
    fn power_sum_recurrence() {
        // roots 2 and 3: 2^5 + 3^5
        let s = conjugate_power_sum(&IntPoly::constant(5), &IntPoly::constant(6), 5);
        assert_eq!(s, IntPoly::constant(32 + 243));
        assert_eq!(
            conjugate_power_sum(&IntPoly::constant(5), &IntPoly::constant(6), 0),
            IntPoly::constant(2)
        );
    }

    #[test]
    fn memo_is_used() {
        let mut solver = DcSolver::default();
        let w = Multigraph::wheel(9).unwrap();
        let t = solver.tutte(&w);
        assert!(solver.cache_len() > 0);
        assert_eq!(t, tutte_family_closed(GraphKind::Wheel, 9).unwrap());
    }
}
