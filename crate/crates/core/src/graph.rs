//! Simple graphs, the two monomial ideals attached to them, and the
//! graph-theoretic decision procedures they call for.
//!
//! A graph on `[n]` yields the *edge ideal* `(x_i x_j : {i,j} ∈ E)` and the
//! *complementary edge ideal* generated by the degree-`(n-2)` monomials
//! `x_{[n]∖e}` for each edge `e`. The verification routines relate
//! homological properties of these ideals to chordality of the complement
//! graph and to the number of nontrivial connected components.

use crate::betti;
use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::lq;
use crate::monomial::Monomial;
use crate::Result;
use serde::Serialize;

/// Largest vertex count representable with bitmask adjacency.
const MAX_VERTICES: usize = 64;
/// Largest vertex count whose edge set fits in a `u64` encoding.
const MAX_ENCODED_VERTICES: usize = 11;

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph from (unordered, possibly repeated) edge pairs.
    /// Loops are rejected; duplicates collapse.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::AmbientTooLarge(n, MAX_VERTICES));
        }
        let mut adj = vec![0u64; n];
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n {
                return Err(Error::BadVertex(a, n));
            }
            if b >= n {
                return Err(Error::BadVertex(b, n));
            }
            if a == b {
                return Err(Error::Unsupported("loops are not allowed in a simple graph"));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if adj[lo] >> hi & 1 == 0 {
                adj[lo] |= 1 << hi;
                adj[hi] |= 1 << lo;
                normalized.push((lo, hi));
            }
        }
        normalized.sort_unstable();
        Ok(Graph { n, adj, edges: normalized })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, Vec::new())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::new(n, edges)
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`; needs `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Unsupported("a cycle needs at least 3 vertices"));
        }
        let edges = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::new(n, edges)
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges as sorted `(a, b)` pairs with `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a] >> b & 1 == 1
    }

    /// Neighbors of `v` as a bitmask.
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Graph with the complementary edge set on the same vertices.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] >> b & 1 == 0 {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement of a valid graph is valid")
    }

    /// Vertex sets of the connected components, as bitmasks, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut next = comp;
                let mut rest = comp;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[u];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of connected components with at least two vertices.
    pub fn c_count(&self) -> usize {
        self.components().iter().filter(|c| c.count_ones() >= 2).count()
    }

    /// Vertices with no incident edge, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Chordality via maximum cardinality search: the reverse of the MCS
    /// order is a perfect elimination order iff the graph is chordal.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return true;
        }
        let mut weight = vec![0usize; n];
        let mut chosen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !chosen[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unchosen vertex remains");
            chosen[v] = true;
            order.push(v);
            let mut rest = self.adj[v];
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if !chosen[u] {
                    weight[u] += 1;
                }
            }
        }
        // elimination order = reverse of the MCS order
        let mut elim_pos = vec![0usize; n];
        for (t, &v) in order.iter().rev().enumerate() {
            elim_pos[v] = t;
        }
        for (t, &v) in order.iter().rev().enumerate() {
            let later: u64 = {
                let mut mask = 0u64;
                let mut rest = self.adj[v];
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if elim_pos[u] > t {
                        mask |= 1 << u;
                    }
                }
                mask
            };
            if later == 0 {
                continue;
            }
            let w = {
                let mut best = usize::MAX;
                let mut bestv = 0;
                let mut rest = later;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if elim_pos[u] < best {
                        best = elim_pos[u];
                        bestv = u;
                    }
                }
                bestv
            };
            // all other later neighbors must be adjacent to w
            if later & !(1 << w) & !self.adj[w] != 0 {
                return false;
            }
        }
        true
    }

    /// Edge ideal `(x_a x_b : {a,b} ∈ E)` in `n` variables (the zero ideal
    /// for an edgeless graph).
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::var(self.n, a).mul(&Monomial::var(self.n, b)))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, gens)
    }

    /// Complementary edge ideal `(x_{[n]∖e} : e ∈ E)`, equigenerated in
    /// degree `n - 2`. Needs `n ≥ 3` and at least one edge.
    pub fn complementary_edge_ideal(&self) -> Result<MonomialIdeal> {
        if self.n < 3 {
            return Err(Error::Unsupported(
                "the complementary edge ideal needs at least 3 vertices",
            ));
        }
        if self.edges.is_empty() {
            return Err(Error::Unsupported("the complementary edge ideal needs an edge"));
        }
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| {
                Monomial::from_support_mask(self.n, full & !(1 << a) & !(1 << b))
            })
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Relabel a connected graph so that deleting the vertices labeled
    /// `1..i` (in order) leaves a connected graph for every `i < n`.
    ///
    /// Returns `order` with `order[i]` = vertex receiving label `i + 1`.
    /// Built from a breadth-first spanning tree rooted at vertex 0 by
    /// repeatedly stripping its smallest-index leaf.
    pub fn connected_elimination_labeling(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::Unsupported("elimination labeling needs a connected graph"));
        }
        let n = self.n;
        if n == 0 {
            return Ok(Vec::new());
        }
        // breadth-first spanning tree from vertex 0
        let mut tree = vec![0u64; n];
        let mut visited = 1u64;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let mut rest = self.adj[v];
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if visited >> u & 1 == 0 {
                    visited |= 1 << u;
                    tree[v] |= 1 << u;
                    tree[u] |= 1 << v;
                    queue.push(u);
                }
            }
        }
        // strip the smallest-index leaf of the shrinking tree
        let mut remaining = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .find(|&v| {
                    remaining >> v & 1 == 1 && (tree[v] & remaining).count_ones() <= 1
                })
                .expect("a tree always has a leaf");
            order.push(v);
            remaining &= !(1u64 << v);
        }
        Ok(order)
    }

    /// The subgraph on the non-isolated vertices, reindexed to
    /// `0..k`, together with the original index of each new vertex.
    pub fn nontrivial_core(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            back[old] = new;
        }
        let edges = self.edges.iter().map(|&(a, b)| (back[a], back[b])).collect();
        let core = Graph::new(keep.len(), edges).expect("reindexed edges stay valid");
        (core, keep)
    }

    /// All vertex pairs of an `n`-vertex graph in encoding order.
    pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a, b));
            }
        }
        pairs
    }

    /// Decode a graph from a bitmask over `all_pairs(n)`.
    pub fn from_edge_bits(n: usize, bits: u64) -> Result<Graph> {
        if n > MAX_ENCODED_VERTICES {
            return Err(Error::AmbientTooLarge(n, MAX_ENCODED_VERTICES));
        }
        let pairs = Graph::all_pairs(n);
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| bits >> t & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, edges)
    }

    /// Inverse of [`Graph::from_edge_bits`].
    pub fn edge_bits(&self) -> Result<u64> {
        if self.n > MAX_ENCODED_VERTICES {
            return Err(Error::AmbientTooLarge(self.n, MAX_ENCODED_VERTICES));
        }
        let mut bits = 0u64;
        for (t, &(a, b)) in Graph::all_pairs(self.n).iter().enumerate() {
            if self.has_edge(a, b) {
                bits |= 1 << t;
            }
        }
        Ok(bits)
    }

    /// Compact text encoding `n:edge-bits-hex` used in scan reports.
    pub fn encode(&self) -> String {
        match self.edge_bits() {
            Ok(bits) => format!("{}:{:x}", self.n, bits),
            Err(_) => format!("{}:?", self.n),
        }
    }
}

/// Per-power linear-quotients row of a graph equivalence report.
#[derive(Clone, Debug, Serialize)]
pub struct PowerLqRow {
    pub k: u32,
    /// "found", "none", or "budget"
    pub outcome: String,
    pub nodes: u64,
    /// Whether the outcome matches the chordality prediction (orders exist
    /// for chordal complements, none otherwise); `None` when the search
    /// was inconclusive.
    pub consistent: Option<bool>,
}

/// Result of checking the linear-resolution ⟺ chordal-complement
/// equivalence for an edge ideal, with optional power searches.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeIdealReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub complement_chordal: bool,
    pub linres_q: bool,
    pub linres_f2: bool,
    pub power_lq: Vec<PowerLqRow>,
    pub holds: bool,
}

/// Check, for a graph with at least one edge, that linear resolution of
/// the edge ideal over `Q` and `F_2` coincides with chordality of the
/// complement. For chordal complements, powers up to `kmax` are searched
/// for linear-quotients orders (all must exist); for non-chordal
/// complements only `k = 1` is searched (none may exist).
pub fn edge_ideal_equivalence(g: &Graph, kmax: u32, budget: u64) -> Result<EdgeIdealReport> {
    if g.edge_count() == 0 {
        return Err(Error::Unsupported("the equivalence check needs at least one edge"));
    }
    let ideal = g.edge_ideal()?;
    let chordal = g.complement().is_chordal();
    let linres_q = betti::has_linear_resolution(&ideal, crate::field::FieldSpec::Q)?;
    let linres_f2 = betti::has_linear_resolution(&ideal, crate::field::FieldSpec::F2)?;

    let mut power_lq = Vec::new();
    let mut powers_ok = true;
    let checked: Vec<u32> = if chordal { (1..=kmax).collect() } else { (1..=kmax.min(1)).collect() };
    for k in checked {
        let power = ideal.power(k)?;
        let search = lq::find_lq_order(&power, budget)?;
        let (outcome, consistent) = match search.outcome {
            lq::SearchOutcome::Found(_) => ("found", Some(chordal)),
            lq::SearchOutcome::NoneExists => ("none", Some(!chordal)),
            lq::SearchOutcome::BudgetExhausted => ("budget", None),
        };
        if consistent != Some(true) {
            powers_ok = false;
        }
        power_lq.push(PowerLqRow {
            k,
            outcome: outcome.to_string(),
            nodes: search.nodes,
            consistent,
        });
    }

    let holds = linres_q == chordal && linres_f2 == chordal && powers_ok;
    Ok(EdgeIdealReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        complement_chordal: chordal,
        linres_q,
        linres_f2,
        power_lq,
        holds,
    })
}

/// Result of checking that the complementary edge ideal has a linear
/// resolution exactly when the graph has a single nontrivial component,
/// including the lex linear-quotients certificate for its powers.
#[derive(Clone, Debug, Serialize)]
pub struct ComplementaryIdealReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub c_count: usize,
    pub linres_q: bool,
    pub linres_f2: bool,
    /// Variable priority induced by the connected elimination labeling
    /// (present only when `c_count == 1`).
    pub priority: Option<Vec<usize>>,
    /// `(k, lex order has linear quotients)` rows for `k ≤ kmax`.
    pub lex_lq: Vec<(u32, bool)>,
    pub holds: bool,
}

/// Check the single-nontrivial-component equivalence for the
/// complementary edge ideal, verifying lex linear quotients of its powers
/// under the elimination labeling when the component count is 1.
pub fn complementary_ideal_equivalence(g: &Graph, kmax: u32) -> Result<ComplementaryIdealReport> {
    let ideal = g.complementary_edge_ideal()?;
    let c = g.c_count();
    let linres_q = betti::has_linear_resolution(&ideal, crate::field::FieldSpec::Q)?;
    let linres_f2 = betti::has_linear_resolution(&ideal, crate::field::FieldSpec::F2)?;

    let mut priority = None;
    let mut lex_lq = Vec::new();
    let mut powers_ok = true;
    if c == 1 {
        let (core, keep) = g.nontrivial_core();
        let labeling = core.connected_elimination_labeling()?;
        let mut p: Vec<usize> = labeling.iter().map(|&v| keep[v]).collect();
        p.extend(g.isolated_vertices());
        for k in 1..=kmax {
            let power = ideal.power(k)?;
            let ok = lq::lex_lq_check(&power, &p)?;
            if !ok {
                powers_ok = false;
            }
            lex_lq.push((k, ok));
        }
        priority = Some(p);
    }

    let expected = c == 1;
    let holds = linres_q == expected && linres_f2 == expected && powers_ok;
    Ok(ComplementaryIdealReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        c_count: c,
        linres_q,
        linres_f2,
        priority,
        lex_lq,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::format_ideal;

    #[test]
    fn construction_normalizes() {
        let g = Graph::new(4, vec![(2, 0), (0, 2), (3, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(0, 1));
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
    }

    #[test]
    fn complement_is_involutive() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(Graph::complete(4).unwrap().complement().edge_count(), 0);
        // complement of C4 is the perfect matching 2K2
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.complement().edges(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn chordality_basics() {
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(!Graph::cycle(5).unwrap().is_chordal());
        assert!(Graph::cycle(3).unwrap().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
        assert!(Graph::empty(4).unwrap().is_chordal());
        // C4 plus one chord is chordal
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert!(g.is_chordal());
        // C6 plus a long chord still has a chordless C4
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)])
            .unwrap();
        assert!(!g.is_chordal());
    }

    #[test]
    fn components_and_c_count() {
        let g = Graph::new(5, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b01100, 0b10000]);
        assert_eq!(g.c_count(), 2);
        assert_eq!(g.isolated_vertices(), vec![4]);
        assert!(!g.is_connected());
        assert!(Graph::path(4).unwrap().is_connected());
        assert_eq!(Graph::path(4).unwrap().c_count(), 1);
        // an edge plus isolated vertices still counts once
        let g = Graph::new(4, vec![(1, 2)]).unwrap();
        assert_eq!(g.c_count(), 1);
    }

    #[test]
    fn both_ideals() {
        let triangle = Graph::complete(3).unwrap();
        assert_eq!(format_ideal(&triangle.edge_ideal().unwrap()), "x1*x2\nx1*x3\nx2*x3\n");
        assert_eq!(
            format_ideal(&triangle.complementary_edge_ideal().unwrap()),
            "x1\nx2\nx3\n"
        );
        let single = Graph::new(4, vec![(0, 1)]).unwrap();
        assert_eq!(format_ideal(&single.complementary_edge_ideal().unwrap()), "x3*x4\n");
        assert!(Graph::empty(3).unwrap().edge_ideal().unwrap().is_zero());
        assert!(Graph::empty(4).unwrap().complementary_edge_ideal().is_err());
        assert!(Graph::new(2, vec![(0, 1)]).unwrap().complementary_edge_ideal().is_err());
    }

    #[test]
    fn complementary_ideal_factors_through_the_core() {
        // one nontrivial component + isolated vertices:
        // the ideal is x_A times the core's complementary ideal
        let g = Graph::new(6, vec![(0, 2), (2, 4), (0, 4), (2, 5)]).unwrap();
        assert_eq!(g.c_count(), 1);
        let (core, keep) = g.nontrivial_core();
        assert_eq!(keep, vec![0, 2, 4, 5]);
        let core_ideal = core.complementary_edge_ideal().unwrap();
        let embedded = core_ideal.map_variables(6, &keep).unwrap();
        let isolated_product = Monomial::from_support_mask(6, 0b01010);
        let expected = embedded.multiply_monomial(&isolated_product).unwrap();
        assert_eq!(g.complementary_edge_ideal().unwrap(), expected);
    }

    #[test]
    fn elimination_labeling_keeps_deletions_connected() {
        for g in [
            Graph::path(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::new(4, vec![(0, 3), (1, 3), (2, 3)]).unwrap(), // star
            Graph::complete(5).unwrap(),
            Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap(),
        ] {
            let order = g.connected_elimination_labeling().unwrap();
            let n = g.vertex_count();
            let mut deleted = 0u64;
            for (i, &v) in order.iter().enumerate() {
                if i + 1 == n {
                    break;
                }
                deleted |= 1 << v;
                let rest: Vec<usize> = (0..n).filter(|&u| deleted >> u & 1 == 0).collect();
                let mut back = vec![usize::MAX; n];
                for (new, &old) in rest.iter().enumerate() {
                    back[old] = new;
                }
                let sub_edges = g
                    .edges()
                    .iter()
                    .filter(|&&(a, b)| deleted >> a & 1 == 0 && deleted >> b & 1 == 0)
                    .map(|&(a, b)| (back[a], back[b]))
                    .collect();
                let sub = Graph::new(rest.len(), sub_edges).unwrap();
                assert!(sub.is_connected(), "deletion step {i} disconnects {:?}", g.edges());
            }
        }
        // star: leaves labeled before the center
        let star = Graph::new(4, vec![(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(star.connected_elimination_labeling().unwrap(), vec![0, 1, 2, 3]);
        assert!(Graph::new(4, vec![(0, 1)]).unwrap().connected_elimination_labeling().is_err());
    }

    #[test]
    fn edge_bits_round_trip() {
        for bits in [0u64, 1, 0b101010, 0b111111] {
            let g = Graph::from_edge_bits(4, bits).unwrap();
            assert_eq!(g.edge_bits().unwrap(), bits);
        }
        let g = Graph::cycle(4).unwrap();
        assert_eq!(Graph::from_edge_bits(4, g.edge_bits().unwrap()).unwrap(), g);
        assert!(g.encode().starts_with("4:"));
    }

    #[test]
    fn edge_ideal_equivalence_on_cycles() {
        // complement of C4 is chordal: linear resolution and orders exist
        let report = edge_ideal_equivalence(&Graph::cycle(4).unwrap(), 2, 100_000).unwrap();
        assert!(report.complement_chordal);
        assert!(report.linres_q && report.linres_f2);
        assert_eq!(report.power_lq.len(), 2);
        assert!(report.holds, "{report:?}");

        // complement of C5 is C5: not chordal, no linear resolution
        let report = edge_ideal_equivalence(&Graph::cycle(5).unwrap(), 2, 100_000).unwrap();
        assert!(!report.complement_chordal);
        assert!(!report.linres_q && !report.linres_f2);
        assert_eq!(report.power_lq.len(), 1);
        assert_eq!(report.power_lq[0].outcome, "none");
        assert!(report.holds, "{report:?}");

        // complete graph: complement edgeless, trivially chordal
        let report = edge_ideal_equivalence(&Graph::complete(4).unwrap(), 1, 100_000).unwrap();
        assert!(report.complement_chordal && report.holds);
    }

    #[test]
    fn complementary_ideal_equivalence_cases() {
        // 2K2: two nontrivial components, no linear resolution
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let report = complementary_ideal_equivalence(&g, 3).unwrap();
        assert_eq!(report.c_count, 2);
        assert!(!report.linres_q && !report.linres_f2);
        assert!(report.lex_lq.is_empty());
        assert!(report.holds, "{report:?}");

        // path on 4 vertices: c = 1, lex linear quotients through k = 3
        let report = complementary_ideal_equivalence(&Graph::path(4).unwrap(), 3).unwrap();
        assert_eq!(report.c_count, 1);
        assert!(report.linres_q && report.linres_f2);
        assert_eq!(report.lex_lq, vec![(1, true), (2, true), (3, true)]);
        assert!(report.holds, "{report:?}");

        // edge plus two isolated vertices: principal ideal
        let g = Graph::new(4, vec![(0, 1)]).unwrap();
        let report = complementary_ideal_equivalence(&g, 2).unwrap();
        assert_eq!(report.c_count, 1);
        assert!(report.holds, "{report:?}");
        assert_eq!(report.priority.as_ref().unwrap().len(), 4);
    }
}
