//! Exact computations with monomial ideals at desk scale.
//!
//! The crate provides:
//!
//! * [`monomial`] / [`ideal`] — monomials with explicit exponent vectors and
//!   minimally generated monomial ideals, with the usual operations
//!   (products, powers, colons, intersections, polarization, restriction).
//! * [`complex`] / [`homology`] — simplicial complexes, the Stanley–Reisner
//!   correspondence for squarefree ideals, Alexander duality, and reduced
//!   simplicial homology over `Q` and `F_p` computed by exact rank
//!   elimination.
//! * [`betti`] — graded Betti numbers of monomial ideals via the Hochster
//!   subset formula (after polarization when the input is not squarefree),
//!   an independent Koszul-complex evaluator used as a cross-check oracle,
//!   Castelnuovo–Mumford regularity, linear-resolution and
//!   Cohen–Macaulayness tests.
//! * [`lq`] — linear-quotient order verification and memoized backtracking
//!   search, lexicographic quotient checks, and the polymatroidal exchange
//!   test.
//! * [`graph`] — finite simple graphs, edge ideals and complementary edge
//!   ideals, chordality, connected elimination labelings, and the exhaustive
//!   / seeded scan drivers relating those ideals to graph structure.
//! * [`torder`] / [`rees`] — monomial orders on the Rees presentation ring
//!   `S[y_1..y_m]`, x/y-dominance classification, fiber-based computation of
//!   capped presentation-ideal generators, a capped binomial Buchberger
//!   procedure, the x-condition certificate, and the even-closed-walk oracle
//!   for edge-ring toric ideals.
//! * [`families`] — named ideal families (the 10-generator triangulation
//!   ideal, the 8-generator sorted ideal with its stored quotient order, the
//!   squarefree second Veronese) and the prefix constructions built from
//!   them, plus Betti splittings and the lcm Tor-vanishing criterion.
//! * [`suites`] — end-to-end reproduction suites wired into the CLI and the
//!   acceptance tests.
//!
//! All linear algebra is exact: dense bit-matrix elimination over `F_2`,
//! dense modular elimination for odd primes, and sparse integer elimination
//! with a big-integer fraction-free fallback in characteristic 0.
//!
//! With the default `parallel` feature the independent inner loops (the
//! Hochster subset sum, graph scans, subset enumerations) run on rayon;
//! without it the same code paths degrade to sequential iterators.
//! Accumulation order is fixed either way, so results are identical.

pub mod betti;
pub mod complex;
pub mod corpus;
pub mod error;
mod exec;
pub mod families;
pub mod field;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod lq;
pub mod monomial;
pub mod rees;
pub mod suites;
pub mod textio;
pub mod torder;

pub use error::Error;
pub use field::FieldSpec;
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
