//! Rees presentation ideals of equigenerated monomial ideals.
//!
//! For an ideal `I` with minimal generators `u_1, ..., u_m` in `n` variables,
//! the Rees algebra is presented by the kernel `J` of the map sending `x_i` to
//! `x_i` and `y_j` to `u_j t`.  `J` is a toric ideal: it is spanned by
//! *balanced* binomials, differences of two T-monomials with the same image.
//! This module computes a minimal generating set of the y-degree-capped part
//! of `J`, runs a degree-capped binomial Buchberger algorithm over any
//! [`OrderSpec`], and certifies the *x-condition*: every minimal generator of
//! the initial ideal has x-degree at most one.
//!
//! Everything here is y-graded: balanced binomials have equal y-degrees on
//! both sides, S-polynomials live in the y-degree of their lcm, and reduction
//! preserves y-degree.  Capping the y-degree therefore yields the exact
//! initial ideal of `J` in y-degrees up to the cap, for any monomial order.
//!
//! An independent oracle comes from graph theory: the toric ideal of the edge
//! ring of a graph is generated by the binomials of its primitive even closed
//! walks, and the Rees algebra of an edge ideal is the edge ring of the cone
//! over the graph (a new apex vertex joined to every old vertex, apex edges
//! playing the role of the `x_i`).  [`walk_agreement`] cross-checks the fiber
//! computation against walk enumeration in that cone.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::Error;
use crate::exec::par_map;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::torder::{OrderSpec, TMonomial};
use crate::Result;

/// A difference of two distinct T-monomials, read as `lead - trail`.
///
/// Order-free constructors orient structurally (larger side first under the
/// derived T-monomial ordering); Gröbner routines re-orient so that `lead` is
/// the initial term under their [`OrderSpec`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: TMonomial,
    pub trail: TMonomial,
}

impl Binomial {
    /// Orient a pair structurally; `None` when the sides are equal.
    pub fn structural(a: TMonomial, b: TMonomial) -> Option<Binomial> {
        match a.cmp(&b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    /// Orient a pair under `ord`; `None` when the sides are equal.
    pub fn oriented(a: TMonomial, b: TMonomial, ord: &OrderSpec) -> Result<Option<Binomial>> {
        Ok(match ord.compare(&a, &b)? {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        })
    }

    /// Common y-degree of both sides (they agree for balanced binomials).
    pub fn ydeg(&self) -> u32 {
        self.lead.ydeg()
    }

    /// Larger of the two per-side total degrees.
    pub fn side_degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }
}

fn format_part(m: &Monomial, letter: char) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 1 {
            parts.push(format!("{letter}{}", i + 1));
        } else if e > 1 {
            parts.push(format!("{letter}{}^{e}", i + 1));
        }
    }
    parts.join("*")
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * {} - {} * {}",
            format_part(&self.lead.x, 'x'),
            format_part(&self.lead.y, 'y'),
            format_part(&self.trail.x, 'x'),
            format_part(&self.trail.y, 'y'),
        )
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The presentation data of the Rees algebra of an equigenerated ideal:
/// one y-variable per minimal generator, `y_j` mapping to `u_j t`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    ideal: MonomialIdeal,
    degree: u32,
}

impl ReesPresentation {
    /// Wrap an equigenerated, nonzero ideal.
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal("Rees presentation"));
        }
        let degree = ideal.equigenerated_degree().ok_or(Error::NotEquigenerated)?;
        Ok(ReesPresentation { ideal, degree })
    }

    /// The presented base ideal.
    pub fn base(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Number of x-variables.
    pub fn xvars(&self) -> usize {
        self.ideal.ambient()
    }

    /// Number of y-variables (= number of minimal generators).
    pub fn yvars(&self) -> usize {
        self.ideal.num_generators()
    }

    /// Common degree of the minimal generators.
    pub fn generator_degree(&self) -> u32 {
        self.degree
    }

    /// Image of a y-monomial: the product of the generators it names.
    pub fn phi(&self, y: &Monomial) -> Result<Monomial> {
        if y.ambient() != self.yvars() {
            return Err(Error::AmbientMismatch(y.ambient(), self.yvars()));
        }
        let mut out = Monomial::one(self.xvars());
        for (j, &e) in y.exps().iter().enumerate() {
            if e > 0 {
                out = out.mul(&self.ideal.generators()[j].pow(e)?)?;
            }
        }
        Ok(out)
    }

    /// Image of a T-monomial in the ambient ring of the Rees algebra,
    /// reported as (x-monomial, t-degree).
    pub fn value(&self, t: &TMonomial) -> Result<(Monomial, u32)> {
        Ok((t.x.mul(&self.phi(&t.y)?)?, t.ydeg()))
    }

    /// A binomial lies in the presentation ideal exactly when both sides
    /// share the same image.
    pub fn is_balanced(&self, b: &Binomial) -> Result<bool> {
        Ok(self.value(&b.lead)? == self.value(&b.trail)?)
    }
}

/// Minimal generators of the presentation ideal in y-degrees `1..=cap`.
///
/// Fibers (sets of T-monomials sharing an image) are processed in increasing
/// y-degree, then increasing image degree.  Within a fiber, two elements are
/// joined whenever a previously emitted binomial rewrites one into the other;
/// one connector per missing link is emitted.  Candidate images are the lcms
/// of generator images over coprime pairs of y-monomials: every minimal
/// generator of a toric ideal has coprime sides, which pins its image to such
/// an lcm.  In y-degree 1 this yields a minimal set of Koszul-type relations
/// `x_a y_i - x_b y_j` with `x_a u_i = x_b u_j`.
///
/// Images of equal degree cannot divide one another, so the fibers of one
/// degree level are independent and are processed in parallel against the
/// frozen list of earlier binomials.
pub fn rees_generators_capped(pres: &ReesPresentation, cap: u32) -> Result<Vec<Binomial>> {
    if cap < 1 {
        return Err(Error::CapTooSmall(cap, 1));
    }
    let m = pres.yvars();
    let mut found: Vec<Binomial> = Vec::new();
    for b in 1..=cap {
        let ys = monomials_of_degree(m, b);
        let phis = ys
            .iter()
            .map(|a| pres.phi(a))
            .collect::<Result<Vec<_>>>()?;
        let mut values: BTreeSet<Monomial> = BTreeSet::new();
        for i in 0..ys.len() {
            for j in (i + 1)..ys.len() {
                if ys[i].gcd(&ys[j])?.is_one() {
                    values.insert(phis[i].lcm(&phis[j])?);
                }
            }
        }
        let mut by_degree: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for v in values {
            by_degree.entry(v.degree()).or_default().push(v);
        }
        for bucket in by_degree.into_values() {
            let batches = par_map(&bucket, |v| fiber_connectors(v, &ys, &phis, &found));
            for batch in batches {
                found.extend(batch?);
            }
        }
    }
    Ok(found)
}

/// Connectors joining the components of one fiber, given the binomials
/// emitted for smaller images.
fn fiber_connectors(
    value: &Monomial,
    ys: &[Monomial],
    phis: &[Monomial],
    gens: &[Binomial],
) -> Result<Vec<Binomial>> {
    let mut fiber: Vec<TMonomial> = Vec::new();
    for (a, p) in ys.iter().zip(phis) {
        if p.divides(value) {
            fiber.push(TMonomial::new(value.div_exact(p)?, a.clone()));
        }
    }
    if fiber.len() < 2 {
        return Ok(Vec::new());
    }
    fiber.sort();
    let index: HashMap<&TMonomial, usize> =
        fiber.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut dsu = Dsu::new(fiber.len());
    for (i, t) in fiber.iter().enumerate() {
        for g in gens {
            for (from, to) in [(&g.lead, &g.trail), (&g.trail, &g.lead)] {
                if from.divides(t) {
                    let next = t.div_exact(from)?.mul(to)?;
                    let j = *index
                        .get(&next)
                        .expect("a balanced rewrite stays inside its fiber");
                    dsu.union(i, j);
                }
            }
        }
    }
    let mut component_min: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..fiber.len() {
        let root = dsu.find(i);
        component_min.entry(root).or_insert(i);
    }
    let mut reps: Vec<usize> = component_min.into_values().collect();
    reps.sort_unstable();
    let base = reps[0];
    reps[1..]
        .iter()
        .map(|&r| {
            Binomial::structural(fiber[r].clone(), fiber[base].clone())
                .ok_or(Error::Internal("distinct fiber representatives coincide"))
        })
        .collect()
}

/// A Gröbner basis of the y-degree-capped part of a presentation ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ord: OrderSpec,
    pub cap: u32,
    pub elements: Vec<Binomial>,
}

impl GroebnerBasis {
    /// Minimal generators of the initial ideal, up to the cap.
    pub fn initial_generators(&self) -> Vec<TMonomial> {
        let mut out: Vec<TMonomial> = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            let lead = &g.lead;
            let redundant = self.elements.iter().enumerate().any(|(j, h)| {
                j != i && h.lead.divides(lead) && (!lead.divides(&h.lead) || j < i)
            });
            if !redundant {
                out.push(lead.clone());
            }
        }
        out
    }
}

/// Buchberger's algorithm on balanced binomials, closed under all S-pairs
/// whose lcm has y-degree at most `cap`.
///
/// Binomiality is preserved throughout: S-polynomials of binomials are
/// binomials, and reduction rewrites one monomial side at a time.  The
/// selection strategy picks the pair with the smallest lcm under `ord`
/// (ties broken by index), and the result is interreduced: no lead divides
/// another, and every trail is in normal form.  Lex-type orders are not
/// degree-compatible, so reductions guard the x-degree against the bound
/// `2 * cap * d` (`d` the generator degree); the y-grading makes the bound
/// unreachable, but it is checked rather than assumed.
pub fn buchberger_capped(
    pres: &ReesPresentation,
    gens: &[Binomial],
    ord: &OrderSpec,
    cap: u32,
) -> Result<GroebnerBasis> {
    ord.validate(pres.xvars(), pres.yvars())?;
    let max_ydeg = gens.iter().map(|g| g.ydeg()).max().unwrap_or(0);
    if cap < max_ydeg {
        return Err(Error::CapTooSmall(cap, max_ydeg));
    }
    for g in gens {
        if !pres.is_balanced(g)? {
            return Err(Error::Unsupported(
                "capped Groebner input must be balanced binomials",
            ));
        }
    }
    let xbound = 2 * cap * pres.generator_degree();

    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if let Some(oriented) = Binomial::oriented(g.lead.clone(), g.trail.clone(), ord)? {
            if !basis.contains(&oriented) {
                basis.push(oriented);
            }
        }
    }

    // Pair queue with cached lcm; coprime leads are skipped (their S-pair
    // reduces to zero), as are pairs whose lcm leaves the y-degree cap.
    let mut pairs: Vec<(usize, usize, TMonomial)> = Vec::new();
    let enqueue = |pairs: &mut Vec<(usize, usize, TMonomial)>,
                       basis: &[Binomial],
                       t: usize|
     -> Result<()> {
        for k in 0..t {
            if basis[k].lead.gcd(&basis[t].lead)?.is_one() {
                continue;
            }
            let lcm = basis[k].lead.lcm(&basis[t].lead)?;
            if lcm.ydeg() <= cap {
                pairs.push((k, t, lcm));
            }
        }
        Ok(())
    };
    for t in 1..basis.len() {
        enqueue(&mut pairs, &basis, t)?;
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for p in 1..pairs.len() {
            match ord.compare(&pairs[p].2, &pairs[best].2)? {
                Ordering::Less => best = p,
                Ordering::Equal => {
                    if (pairs[p].0, pairs[p].1) < (pairs[best].0, pairs[best].1) {
                        best = p;
                    }
                }
                Ordering::Greater => {}
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        let a = lcm.div_exact(&basis[i].lead)?.mul(&basis[i].trail)?;
        let b = lcm.div_exact(&basis[j].lead)?.mul(&basis[j].trail)?;
        let na = normal_form(&a, &basis, xbound)?;
        let nb = normal_form(&b, &basis, xbound)?;
        if na == nb {
            continue;
        }
        let new = Binomial::oriented(na, nb, ord)?
            .ok_or(Error::Internal("distinct normal forms compared equal"))?;
        let t = basis.len();
        basis.push(new);
        enqueue(&mut pairs, &basis, t)?;
    }

    let elements = interreduce(basis, ord, xbound)?;
    for g in &elements {
        debug_assert!(matches!(pres.is_balanced(g), Ok(true)));
    }
    Ok(GroebnerBasis {
        ord: ord.clone(),
        cap,
        elements,
    })
}

/// Deterministic normal form: repeatedly rewrite by the first basis element
/// whose lead divides the current monomial.  Each step strictly decreases
/// the monomial under the basis orientation order, so this terminates.
fn normal_form(t: &TMonomial, basis: &[Binomial], xbound: u32) -> Result<TMonomial> {
    let mut cur = t.clone();
    'rewrite: loop {
        for g in basis {
            if g.lead.divides(&cur) {
                cur = cur.div_exact(&g.lead)?.mul(&g.trail)?;
                if cur.xdeg() > xbound {
                    return Err(Error::XDegreeBoundExceeded(cur.xdeg(), xbound));
                }
                continue 'rewrite;
            }
        }
        return Ok(cur);
    }
}

/// Minimalize leads, reduce trails to normal form, and check that every
/// discarded element still rejoins over the kept basis.
fn interreduce(mut basis: Vec<Binomial>, ord: &OrderSpec, xbound: u32) -> Result<Vec<Binomial>> {
    basis.sort_by(|a, b| {
        ord.compare(&a.lead, &b.lead)
            .expect("ambient validated on entry")
            .then_with(|| a.cmp(b))
    });
    let mut kept: Vec<Binomial> = Vec::new();
    let mut dropped: Vec<Binomial> = Vec::new();
    for g in basis {
        if kept.iter().any(|h| h.lead.divides(&g.lead)) {
            dropped.push(g);
        } else {
            kept.push(g);
        }
    }
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let nf = normal_form(&kept[i].trail, &kept, xbound)?;
            if nf != kept[i].trail {
                kept[i].trail = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &dropped {
        let a = normal_form(&g.lead, &kept, xbound)?;
        let b = normal_form(&g.trail, &kept, xbound)?;
        if a != b {
            return Err(Error::Internal(
                "interreduction dropped an element whose sides do not rejoin",
            ));
        }
    }
    Ok(kept)
}

/// Outcome of an x-condition certificate, valid up to the recorded cap.
#[derive(Clone, Debug)]
pub struct XConditionReport {
    pub holds: bool,
    pub cap: u32,
    pub witness: Option<TMonomial>,
}

/// Check that every minimal generator of the initial ideal (up to the cap)
/// has x-degree at most one; on failure the first offender is reported.
pub fn x_condition_check(gb: &GroebnerBasis) -> XConditionReport {
    let mut initial = gb.initial_generators();
    initial.sort();
    let witness = initial.into_iter().find(|t| t.xdeg() > 1);
    XConditionReport {
        holds: witness.is_none(),
        cap: gb.cap,
        witness,
    }
}

/// Render a capped Gröbner basis, one binomial per line with the initial
/// term first; the header records the order and the cap.
pub fn format_groebner(gb: &GroebnerBasis) -> String {
    let mut out = format!("# order {}, cap {}\n", gb.ord.name(), gb.cap);
    for g in &gb.elements {
        out.push_str(&format!("{g}\n"));
    }
    out
}

/// Binomials of the primitive even closed walks of length at most `max_len`
/// in a graph, in variables indexed by its edge list (stored in the y-block
/// of each side; the x-block is empty).
///
/// A closed walk of even length alternates its edges into two products; the
/// walk is primitive when no other even closed walk's binomial divides it
/// side-by-side.  A dominating binomial has sides of no larger degree, hence
/// comes from a walk of no greater length: filtering inside the enumerated
/// set is complete for the requested bound.
pub fn primitive_walk_relations(g: &Graph, max_len: usize) -> Vec<Binomial> {
    let m = g.edge_count();
    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        edge_of.insert((a, b), k);
        edge_of.insert((b, a), k);
    }
    let mut seen: BTreeSet<(Monomial, Monomial)> = BTreeSet::new();
    let mut walk: Vec<usize> = Vec::new();
    for start in 0..g.vertex_count() {
        walk.push(start);
        extend_walks(g, &mut walk, start, max_len, &edge_of, m, &mut seen);
        walk.pop();
    }
    let list: Vec<(Monomial, Monomial)> = seen.into_iter().collect();
    let dominated = |i: usize| {
        list.iter().enumerate().any(|(j, other)| {
            j != i
                && ((other.0.divides(&list[i].0) && other.1.divides(&list[i].1))
                    || (other.0.divides(&list[i].1) && other.1.divides(&list[i].0)))
        })
    };
    list.iter()
        .enumerate()
        .filter(|(i, _)| !dominated(*i))
        .map(|(_, (u, v))| Binomial {
            lead: TMonomial::new(Monomial::one(0), u.clone()),
            trail: TMonomial::new(Monomial::one(0), v.clone()),
        })
        .collect()
}

fn extend_walks(
    g: &Graph,
    walk: &mut Vec<usize>,
    start: usize,
    max_len: usize,
    edge_of: &HashMap<(usize, usize), usize>,
    m: usize,
    seen: &mut BTreeSet<(Monomial, Monomial)>,
) {
    let cur = *walk.last().expect("walk holds at least its start");
    let len = walk.len() - 1;
    if len >= 4 && len % 2 == 0 && cur == start {
        let mut odd = vec![0u16; m];
        let mut even = vec![0u16; m];
        for t in 1..=len {
            let e = edge_of[&(walk[t - 1], walk[t])];
            if t % 2 == 1 {
                odd[e] += 1;
            } else {
                even[e] += 1;
            }
        }
        let (u, v) = (Monomial::new(odd), Monomial::new(even));
        match u.cmp(&v) {
            Ordering::Greater => {
                seen.insert((u, v));
            }
            Ordering::Less => {
                seen.insert((v, u));
            }
            Ordering::Equal => {}
        }
    }
    if len == max_len {
        return;
    }
    let mut nbrs = g.adjacency(cur);
    while nbrs != 0 {
        let next = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        walk.push(next);
        extend_walks(g, walk, start, max_len, edge_of, m, seen);
        walk.pop();
    }
}

/// The cone over a graph: one new apex vertex joined to every vertex.
pub fn apex_extension(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    let mut edges = g.edges().to_vec();
    for i in 0..n {
        edges.push((i, n));
    }
    Graph::new(n + 1, edges)
}

/// Walk-based oracle for the Rees presentation ideal of an edge ideal:
/// primitive even closed walks of the apex cone, translated so that apex
/// edges become x-variables and original edges become the y-variables of the
/// corresponding edge-ideal generators.
pub fn rees_walk_oracle(g: &Graph, max_len: usize) -> Result<Vec<Binomial>> {
    let pres = ReesPresentation::new(g.edge_ideal()?)?;
    let n = g.vertex_count();
    let mut gen_index: HashMap<Monomial, usize> = HashMap::new();
    for (j, u) in pres.base().generators().iter().enumerate() {
        gen_index.insert(u.clone(), j);
    }
    let star = apex_extension(g)?;
    let raw = primitive_walk_relations(&star, max_len);
    let translate = |side: &Monomial| -> Result<TMonomial> {
        let mut xexps = vec![0u16; n];
        let mut yexps = vec![0u16; pres.yvars()];
        for (k, &e) in side.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (a, b) = star.edges()[k];
            if b == n {
                xexps[a] += e;
            } else {
                let u = Monomial::from_support_mask(n, (1 << a) | (1 << b));
                let j = *gen_index
                    .get(&u)
                    .ok_or(Error::Internal("cone edge without a matching generator"))?;
                yexps[j] += e;
            }
        }
        Ok(TMonomial::new(Monomial::new(xexps), Monomial::new(yexps)))
    };
    let mut out = Vec::with_capacity(raw.len());
    for b in &raw {
        let (u, v) = (translate(&b.lead.y)?, translate(&b.trail.y)?);
        out.push(
            Binomial::structural(u, v)
                .ok_or(Error::Internal("walk binomial translated to zero"))?,
        );
    }
    Ok(out)
}

/// Whether `target` lies in the ideal generated by `gens`, for pure
/// differences of T-monomials: breadth-first search over the (finite) fiber
/// of the lead, using each generator as a two-way rewrite rule.
pub fn in_binomial_span(target: &Binomial, gens: &[Binomial]) -> Result<bool> {
    if target.lead == target.trail {
        return Ok(true);
    }
    let mut seen: HashSet<TMonomial> = HashSet::new();
    let mut queue: VecDeque<TMonomial> = VecDeque::new();
    seen.insert(target.lead.clone());
    queue.push_back(target.lead.clone());
    while let Some(cur) = queue.pop_front() {
        for g in gens {
            for (from, to) in [(&g.lead, &g.trail), (&g.trail, &g.lead)] {
                if from.divides(&cur) {
                    let next = cur.div_exact(from)?.mul(to)?;
                    if next == target.trail {
                        return Ok(true);
                    }
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Two-way comparison between the fiber computation and the walk oracle.
#[derive(Clone, Debug)]
pub struct WalkAgreementReport {
    /// Primitive walk binomials of the apex cone, translated.
    pub walk_relations: usize,
    /// Capped generators whose sides fit the walk-length window.
    pub window_generators: usize,
    /// Every walk binomial lies in the span of the capped generators.
    pub walks_in_generators: bool,
    /// Every windowed generator lies in the span of the walk binomials.
    pub generators_in_walks: bool,
}

impl WalkAgreementReport {
    pub fn holds(&self) -> bool {
        self.walks_in_generators && self.generators_in_walks
    }
}

/// Cross-check [`rees_generators_capped`] against [`rees_walk_oracle`] on an
/// edge ideal.  Walks of length up to `max_len` correspond to binomials with
/// per-side total degree up to `max_len / 2`; generators are compared inside
/// that window.  Choose `max_len >= 2 * cap` so the walk list can span every
/// windowed generator.
pub fn walk_agreement(g: &Graph, cap: u32, max_len: usize) -> Result<WalkAgreementReport> {
    let pres = ReesPresentation::new(g.edge_ideal()?)?;
    let gens = rees_generators_capped(&pres, cap)?;
    let walks = rees_walk_oracle(g, max_len)?;
    let half = (max_len / 2) as u32;
    let window: Vec<Binomial> = gens
        .iter()
        .filter(|b| b.side_degree() <= half)
        .cloned()
        .collect();
    let mut walks_in_generators = true;
    for w in &walks {
        if !in_binomial_span(w, &gens)? {
            walks_in_generators = false;
            break;
        }
    }
    let mut generators_in_walks = true;
    for b in &window {
        if !in_binomial_span(b, &walks)? {
            generators_in_walks = false;
            break;
        }
    }
    Ok(WalkAgreementReport {
        walk_relations: walks.len(),
        window_generators: window.len(),
        walks_in_generators,
        generators_in_walks,
    })
}

/// Union-find with path halving.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_ideal;

    fn pres(text: &str) -> ReesPresentation {
        ReesPresentation::new(parse_ideal(text, None).unwrap()).unwrap()
    }

    fn tmono(pres: &ReesPresentation, xmask: &[u16], ymask: &[u16]) -> TMonomial {
        assert_eq!(xmask.len(), pres.xvars());
        assert_eq!(ymask.len(), pres.yvars());
        TMonomial::new(Monomial::new(xmask.to_vec()), Monomial::new(ymask.to_vec()))
    }

    fn unordered(b: &Binomial) -> BTreeSet<TMonomial> {
        [b.lead.clone(), b.trail.clone()].into_iter().collect()
    }

    /// Full capped Groebner property: every in-cap S-pair reduces to zero.
    fn spairs_close(pres: &ReesPresentation, gb: &GroebnerBasis) -> bool {
        let xbound = 2 * gb.cap * pres.generator_degree() + 8;
        let basis = &gb.elements;
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let lcm = basis[i].lead.lcm(&basis[j].lead).unwrap();
                if lcm.ydeg() > gb.cap {
                    continue;
                }
                let a = lcm
                    .div_exact(&basis[i].lead)
                    .unwrap()
                    .mul(&basis[i].trail)
                    .unwrap();
                let b = lcm
                    .div_exact(&basis[j].lead)
                    .unwrap()
                    .mul(&basis[j].trail)
                    .unwrap();
                if normal_form(&a, basis, xbound).unwrap() != normal_form(&b, basis, xbound).unwrap()
                {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn presentation_rejects_degenerate_input() {
        let zero = MonomialIdeal::zero(3);
        assert!(matches!(
            ReesPresentation::new(zero),
            Err(Error::ZeroIdeal(_))
        ));
        let mixed = parse_ideal("x1\nx2*x3\n", None).unwrap();
        assert!(matches!(
            ReesPresentation::new(mixed),
            Err(Error::NotEquigenerated)
        ));
        let p = pres("x1*x2\nx2*x3\n");
        assert!(matches!(
            rees_generators_capped(&p, 0),
            Err(Error::CapTooSmall(0, 1))
        ));
    }

    #[test]
    fn koszul_relation_of_overlapping_edges() {
        let p = pres("x1*x2\nx2*x3\n");
        let gens = rees_generators_capped(&p, 1).unwrap();
        assert_eq!(gens.len(), 1);
        let expected: BTreeSet<TMonomial> = [
            tmono(&p, &[0, 0, 1], &[1, 0]),
            tmono(&p, &[1, 0, 0], &[0, 1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(unordered(&gens[0]), expected);
        assert!(p.is_balanced(&gens[0]).unwrap());
    }

    #[test]
    fn koszul_relations_of_three_variables() {
        let p = pres("x1\nx2\nx3\n");
        let gens = rees_generators_capped(&p, 1).unwrap();
        assert_eq!(gens.len(), 3);
        let got: BTreeSet<BTreeSet<TMonomial>> = gens.iter().map(unordered).collect();
        let pair = |i: usize, j: usize| {
            let mut xa = [0u16; 3];
            let mut ya = [0u16; 3];
            let mut xb = [0u16; 3];
            let mut yb = [0u16; 3];
            xa[j] = 1;
            ya[i] = 1;
            xb[i] = 1;
            yb[j] = 1;
            [tmono(&p, &xa, &ya), tmono(&p, &xb, &yb)]
                .into_iter()
                .collect::<BTreeSet<_>>()
        };
        let expected: BTreeSet<BTreeSet<TMonomial>> =
            [pair(0, 1), pair(0, 2), pair(1, 2)].into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn quadrilateral_cycle_relation() {
        let g = Graph::cycle(4).unwrap();
        let p = ReesPresentation::new(g.edge_ideal().unwrap()).unwrap();
        let gens = rees_generators_capped(&p, 2).unwrap();
        // four Koszul relations from overlapping edges plus the cycle relation
        assert_eq!(gens.len(), 5);
        let index_of = |mono: &Monomial| {
            p.base()
                .generators()
                .iter()
                .position(|u| u == mono)
                .unwrap()
        };
        let edge = |a: usize, b: usize| Monomial::from_support_mask(4, (1 << a) | (1 << b));
        let mut side_a = vec![0u16; 4];
        let mut side_b = vec![0u16; 4];
        side_a[index_of(&edge(0, 1))] = 1;
        side_a[index_of(&edge(2, 3))] = 1;
        side_b[index_of(&edge(0, 3))] = 1;
        side_b[index_of(&edge(1, 2))] = 1;
        let cycle: BTreeSet<TMonomial> = [
            tmono(&p, &[0; 4], &side_a),
            tmono(&p, &[0; 4], &side_b),
        ]
        .into_iter()
        .collect();
        assert!(gens.iter().any(|g| unordered(g) == cycle));
        for g in &gens {
            assert!(p.is_balanced(g).unwrap());
            assert_eq!(g.lead.ydeg(), g.trail.ydeg());
        }
    }

    #[test]
    fn capped_generators_are_minimal() {
        let g = Graph::cycle(4).unwrap();
        let p = ReesPresentation::new(g.edge_ideal().unwrap()).unwrap();
        let gens = rees_generators_capped(&p, 2).unwrap();
        for (i, g) in gens.iter().enumerate() {
            let others: Vec<Binomial> = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            assert!(
                !in_binomial_span(g, &others).unwrap(),
                "generator {i} is redundant"
            );
        }
    }

    #[test]
    fn groebner_of_variable_koszul_relations() {
        let p = pres("x1\nx2\nx3\n");
        let gens = rees_generators_capped(&p, 1).unwrap();
        let ord = OrderSpec::xfirst_lex(3, 3);
        let gb = buchberger_capped(&p, &gens, &ord, 1).unwrap();
        assert_eq!(gb.elements.len(), 3);
        for g in &gb.elements {
            assert!(p.is_balanced(g).unwrap());
            assert_eq!(g.lead.xdeg(), 1);
        }
        assert!(spairs_close(&p, &gb));
        let report = x_condition_check(&gb);
        assert!(report.holds);
        assert_eq!(report.cap, 1);
        assert!(report.witness.is_none());
    }

    #[test]
    fn groebner_keeps_a_single_relation() {
        let p = pres("x1\nx2\n");
        let gens = rees_generators_capped(&p, 1).unwrap();
        assert_eq!(gens.len(), 1);
        let ord = OrderSpec::xfirst_lex(2, 2);
        let gb = buchberger_capped(&p, &gens, &ord, 2).unwrap();
        assert_eq!(gb.elements.len(), 1);
        assert_eq!(gb.elements[0].lead, tmono(&p, &[1, 0], &[0, 1]));
        assert_eq!(gb.elements[0].trail, tmono(&p, &[0, 1], &[1, 0]));
        assert!(x_condition_check(&gb).holds);
    }

    #[test]
    fn groebner_of_quadrilateral_keeps_cycle_relation() {
        let g = Graph::cycle(4).unwrap();
        let p = ReesPresentation::new(g.edge_ideal().unwrap()).unwrap();
        let gens = rees_generators_capped(&p, 2).unwrap();
        let ord = OrderSpec::xfirst_lex(4, 4);
        let gb = buchberger_capped(&p, &gens, &ord, 2).unwrap();
        assert!(spairs_close(&p, &gb));
        assert!(gb
            .elements
            .iter()
            .any(|g| g.lead.xdeg() == 0 && g.trail.xdeg() == 0 && g.ydeg() == 2));
        assert!(x_condition_check(&gb).holds);
        for g in &gb.elements {
            assert!(p.is_balanced(g).unwrap());
            assert!(g.ydeg() <= 2);
        }
    }

    #[test]
    fn x_condition_reports_an_offender() {
        let ord = OrderSpec::xfirst_lex(2, 3);
        let offender = TMonomial::new(
            Monomial::new(vec![1, 1]),
            Monomial::new(vec![1, 0, 0]),
        );
        let gb = GroebnerBasis {
            ord,
            cap: 2,
            elements: vec![Binomial {
                lead: offender.clone(),
                trail: TMonomial::new(Monomial::one(2), Monomial::new(vec![0, 1, 1])),
            }],
        };
        let report = x_condition_check(&gb);
        assert!(!report.holds);
        assert_eq!(report.witness, Some(offender));
        assert_eq!(report.cap, 2);
    }

    #[test]
    fn path_complement_ideal_satisfies_x_condition() {
        let g = Graph::path(4).unwrap();
        let labeling = g.connected_elimination_labeling().unwrap();
        assert_eq!(labeling, vec![0, 1, 2, 3]);
        let p = ReesPresentation::new(g.complementary_edge_ideal().unwrap()).unwrap();
        let ord = OrderSpec::xfirst_lex(p.xvars(), p.yvars()).with_x_priority(labeling);
        let gens = rees_generators_capped(&p, 3).unwrap();
        let gb = buchberger_capped(&p, &gens, &ord, 3).unwrap();
        assert!(spairs_close(&p, &gb));
        assert!(x_condition_check(&gb).holds);
    }

    #[test]
    fn connected_four_vertex_graphs_satisfy_x_condition() {
        let pairs = Graph::all_pairs(4);
        for bits in 0u64..(1 << pairs.len()) {
            let g = Graph::from_edge_bits(4, bits).unwrap();
            if !g.is_connected() {
                continue;
            }
            let labeling = g.connected_elimination_labeling().unwrap();
            let p = ReesPresentation::new(g.complementary_edge_ideal().unwrap()).unwrap();
            let ord =
                OrderSpec::xfirst_lex(p.xvars(), p.yvars()).with_x_priority(labeling);
            let gens = rees_generators_capped(&p, 3).unwrap();
            let gb = buchberger_capped(&p, &gens, &ord, 3).unwrap();
            let report = x_condition_check(&gb);
            assert!(report.holds, "graph {} fails: {:?}", g.encode(), report.witness);
        }
    }

    #[test]
    fn walk_relations_of_a_quadrilateral() {
        let g = Graph::cycle(4).unwrap();
        let walks = primitive_walk_relations(&g, 6);
        assert_eq!(walks.len(), 1);
        let edge_index = |a: usize, b: usize| {
            g.edges()
                .iter()
                .position(|&e| e == (a.min(b), a.max(b)))
                .unwrap()
        };
        let mut odd = vec![0u16; 4];
        let mut even = vec![0u16; 4];
        odd[edge_index(0, 1)] = 1;
        odd[edge_index(2, 3)] = 1;
        even[edge_index(0, 3)] = 1;
        even[edge_index(1, 2)] = 1;
        let got = unordered(&walks[0]);
        let expected: BTreeSet<TMonomial> = [
            TMonomial::new(Monomial::one(0), Monomial::new(odd)),
            TMonomial::new(Monomial::one(0), Monomial::new(even)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn walk_relations_of_trees_are_empty() {
        for n in 2..=5 {
            let g = Graph::path(n).unwrap();
            assert!(primitive_walk_relations(&g, 6).is_empty());
        }
    }

    #[test]
    fn walk_relations_of_k4_are_the_three_quadrilaterals() {
        let g = Graph::complete(4).unwrap();
        let walks = primitive_walk_relations(&g, 4);
        assert_eq!(walks.len(), 3);
        for w in &walks {
            assert_eq!(w.lead.y.degree(), 2);
            assert_eq!(w.trail.y.degree(), 2);
            assert!(w.lead.y.gcd(&w.trail.y).unwrap().is_one());
        }
    }

    #[test]
    fn walk_oracle_binomials_are_balanced() {
        let g = Graph::cycle(5).unwrap();
        let p = ReesPresentation::new(g.edge_ideal().unwrap()).unwrap();
        let oracle = rees_walk_oracle(&g, 6).unwrap();
        assert!(!oracle.is_empty());
        for b in &oracle {
            assert!(p.is_balanced(b).unwrap());
        }
    }

    #[test]
    fn walk_agreement_on_small_graphs() {
        for n in 2..=4usize {
            let pairs = Graph::all_pairs(n);
            for bits in 1u64..(1 << pairs.len()) {
                let g = Graph::from_edge_bits(n, bits).unwrap();
                let report = walk_agreement(&g, 3, 6).unwrap();
                assert!(
                    report.holds(),
                    "graph {} disagrees: {report:?}",
                    g.encode()
                );
            }
        }
        let report = walk_agreement(&Graph::cycle(5).unwrap(), 3, 6).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn groebner_validates_its_input() {
        let quad = ReesPresentation::new(
            Graph::cycle(4).unwrap().edge_ideal().unwrap(),
        )
        .unwrap();
        let quad_gens = rees_generators_capped(&quad, 2).unwrap();
        assert_eq!(quad_gens.iter().map(Binomial::ydeg).max(), Some(2));
        let quad_ord = OrderSpec::xfirst_lex(4, 4);
        assert!(matches!(
            buchberger_capped(&quad, &quad_gens, &quad_ord, 1),
            Err(Error::CapTooSmall(1, 2))
        ));

        let p = pres("x1*x2\nx2*x3\n");
        let gens = rees_generators_capped(&p, 2).unwrap();
        let ord = OrderSpec::xfirst_lex(3, 2);
        let skewed = Binomial {
            lead: tmono(&p, &[1, 0, 0], &[1, 0]),
            trail: tmono(&p, &[0, 0, 1], &[0, 1]),
        };
        assert!(matches!(
            buchberger_capped(&p, &[skewed], &ord, 2),
            Err(Error::Unsupported(_))
        ));
        let wrong = OrderSpec::xfirst_lex(4, 2);
        assert!(matches!(
            buchberger_capped(&p, &gens, &wrong, 2),
            Err(Error::AmbientMismatch(_, _))
        ));
    }

    #[test]
    fn dump_format_lists_initial_terms_first() {
        let p = pres("x1\nx2\n");
        let gens = rees_generators_capped(&p, 1).unwrap();
        let ord = OrderSpec::xfirst_lex(2, 2);
        let gb = buchberger_capped(&p, &gens, &ord, 1).unwrap();
        let dump = format_groebner(&gb);
        let mut lines = dump.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with('#'));
        assert!(header.contains("cap 1"));
        assert!(header.contains(&gb.ord.name()));
        assert_eq!(lines.next().unwrap(), "x1 * y2 - x2 * y1");
        assert_eq!(lines.next(), None);
    }
}
