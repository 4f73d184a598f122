//! Seeded pseudorandom ideals and graphs.
//!
//! Cross-check suites draw their instances from these generators with an
//! explicit RNG, so a fixed seed reproduces the exact corpus on every run.

use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use rand::Rng;

fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_exp: u16) -> Monomial {
    loop {
        let exps: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps);
        }
    }
}

/// Random monomial ideal on `n ≥ 1` variables with between 1 and
/// `max_gens` generators (fewer after minimalization) and exponents up to
/// `max_exp ≥ 1`. The result is always proper and nonzero.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_exp: u16) -> MonomialIdeal {
    assert!(n >= 1 && max_gens >= 1 && max_exp >= 1);
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| random_monomial(rng, n, max_exp)).collect();
    MonomialIdeal::new(n, gens).expect("generated monomials share the ambient")
}

/// Random squarefree monomial ideal on `n ≥ 1` variables with between 1
/// and `max_gens` generators. Proper and nonzero: every generator is a
/// nonempty squarefree monomial.
pub fn random_squarefree_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize) -> MonomialIdeal {
    assert!(n >= 1 && n <= 63 && max_gens >= 1);
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| Monomial::from_support_mask(n, rng.gen_range(1..(1u64 << n))))
        .collect();
    MonomialIdeal::new(n, gens).expect("generated monomials share the ambient")
}

/// Random connected graph on `n ≥ 1` vertices: each edge is drawn with
/// probability `edge_prob`, rejecting until the result is connected.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> Graph {
    assert!(n >= 1);
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.gen_bool(edge_prob) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, edges).expect("generated edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}
