//! Simplicial complexes and the Stanley–Reisner correspondence.
//!
//! A [`SimplicialComplex`] is stored by its facets, each a vertex bitmask.
//! Three shapes deserve names: the *void* complex (no faces at all, not
//! even the empty face), the complex `{∅}` whose only face is the empty
//! face, and everything else. Reduced homology distinguishes the first two:
//! the void complex has all-zero homology while `{∅}` has a single
//! dimension in degree −1.

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::Result;

/// Largest vertex count for which full subset enumeration is allowed.
pub(crate) const MAX_ENUM_VERTICES: usize = 24;

/// A simplicial complex on `n` labeled vertices, stored by facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Maximal faces as bitmasks, sorted by (popcount, mask); pairwise
    /// incomparable under inclusion. Empty vector = void complex.
    facets: Vec<u64>,
}

fn sort_facets(facets: &mut Vec<u64>) {
    facets.sort_unstable_by_key(|&f| (f.count_ones(), f));
    facets.dedup();
}

impl SimplicialComplex {
    /// The void complex (no faces).
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_complex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![0] }
    }

    /// The full simplex on all `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::AmbientTooLarge(n, 64));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(SimplicialComplex { n, facets: vec![full] })
    }

    /// Complex generated by the given faces (maximal ones are kept).
    pub fn from_faces(n: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut masks = Vec::with_capacity(faces.len());
        for face in faces {
            let mut mask = 0u64;
            for v in face {
                if v >= n {
                    return Err(Error::BadVertex(v, n));
                }
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        Ok(Self::from_masks(n, masks))
    }

    /// Complex generated by face bitmasks.
    pub fn from_masks(n: usize, mut masks: Vec<u64>) -> Self {
        debug_assert!(n <= 64);
        sort_facets(&mut masks);
        // keep the maximal ones; masks are sorted by size, so any container
        // appears later
        let mut facets: Vec<u64> = Vec::with_capacity(masks.len());
        for (i, &f) in masks.iter().enumerate() {
            if !masks[i + 1..].iter().any(|&g| g & f == f && g != f) {
                facets.push(f);
            }
        }
        SimplicialComplex { n, facets }
    }

    /// Number of ambient vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The facets, sorted by (size, mask).
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// `true` for the void complex.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: `None` for void, otherwise `max |F| - 1` (so `-1` for `{∅}`).
    pub fn dim(&self) -> Option<i64> {
        self.facets.last().map(|f| i64::from(f.count_ones()) - 1)
    }

    /// Face membership test.
    pub fn is_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// All faces as bitmasks (including `∅` unless void), sorted by
    /// (size, mask).
    pub fn faces(&self) -> Vec<u64> {
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut s = f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces
    }

    /// Restriction to a vertex subset given as a bitmask.
    pub fn restrict_mask(&self, w: u64) -> SimplicialComplex {
        let masks: Vec<u64> = self.facets.iter().map(|&f| f & w).collect();
        Self::from_masks(self.n, masks)
    }

    /// Restriction to a vertex subset.
    pub fn restrict(&self, vertices: &[usize]) -> Result<SimplicialComplex> {
        let mut w = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::BadVertex(v, self.n));
            }
            w |= 1 << v;
        }
        Ok(self.restrict_mask(w))
    }

    /// Link of a face, on the same ambient vertex set.
    pub fn link_mask(&self, f: u64) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace);
        }
        let masks: Vec<u64> =
            self.facets.iter().filter(|&&h| h & f == f).map(|&h| h & !f).collect();
        // complements of facets through f are automatically an antichain
        let mut facets = masks;
        sort_facets(&mut facets);
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Link of a face given by vertex list.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let mut mask = 0u64;
        for &v in face {
            if v >= self.n {
                return Err(Error::BadVertex(v, self.n));
            }
            mask |= 1 << v;
        }
        self.link_mask(mask)
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_void() {
            return write!(f, "void complex on {} vertices", self.n);
        }
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|&m| {
                let vs: Vec<String> =
                    (0..self.n).filter(|&v| m >> v & 1 == 1).map(|v| (v + 1).to_string()).collect();
                if vs.is_empty() {
                    "{}".to_string()
                } else {
                    format!("{{{}}}", vs.join(","))
                }
            })
            .collect();
        write!(f, "complex<{}>[{}]", self.n, parts.join(" "))
    }
}

/// Stanley–Reisner complex of a squarefree monomial ideal: the faces are
/// the subsets `F` with `x_F ∉ I`. The zero ideal gives the full simplex.
/// Errors on non-squarefree input and on the unit ideal (whose complex
/// would be void).
pub fn complex_from_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("Stanley-Reisner complex"));
    }
    let n = ideal.ambient();
    if n > MAX_ENUM_VERTICES {
        return Err(Error::AmbientTooLarge(n, MAX_ENUM_VERTICES));
    }
    let supports: Vec<u64> = ideal.generators().iter().map(Monomial::support_mask).collect();
    let is_face = |mask: u64| supports.iter().all(|&s| s & !mask != 0);
    let total: u64 = if n == 0 { 1 } else { 1 << n };
    let mut facets = Vec::new();
    for mask in 0..total {
        if !is_face(mask) {
            continue;
        }
        // maximal iff no single-vertex extension is a face
        let maximal = (0..n)
            .filter(|&v| mask >> v & 1 == 0)
            .all(|v| !is_face(mask | 1 << v));
        if maximal {
            facets.push(mask);
        }
    }
    sort_facets(&mut facets);
    Ok(SimplicialComplex { n, facets })
}

/// Stanley–Reisner ideal of a complex: generated by the minimal non-faces.
pub fn ideal_from_complex(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.vertex_count();
    if n > MAX_ENUM_VERTICES {
        return Err(Error::AmbientTooLarge(n, MAX_ENUM_VERTICES));
    }
    let total: u64 = if n == 0 { 1 } else { 1 << n };
    let mut gens = Vec::new();
    for mask in 0..total {
        if complex.is_face(mask) {
            continue;
        }
        // minimal non-face: every proper maximal subset is a face
        let minimal = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| complex.is_face(mask & !(1 << v)));
        if minimal {
            gens.push(Monomial::from_support_mask(n, mask));
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Alexander dual of a proper nonzero squarefree ideal: generated by the
/// complements of the facets of the Stanley–Reisner complex.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("Alexander dual"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("Alexander dual"));
    }
    let n = ideal.ambient();
    let complex = complex_from_ideal(ideal)?;
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let gens: Vec<Monomial> = complex
        .facets()
        .iter()
        .map(|&f| Monomial::from_support_mask(n, full & !f))
        .collect();
    MonomialIdeal::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_ideal;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        parse_ideal(&gens.join("\n"), Some(n)).unwrap()
    }

    #[test]
    fn facet_reduction_keeps_maximal_faces() {
        let c = SimplicialComplex::from_faces(3, vec![vec![0, 1], vec![0], vec![1, 2]]).unwrap();
        assert_eq!(c.facets(), &[0b011, 0b110]);
        assert_eq!(c.dim(), Some(1));
        assert!(c.is_face(0));
        assert!(c.is_face(0b010));
        assert!(!c.is_face(0b101));
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let void = SimplicialComplex::void(2);
        let empty = SimplicialComplex::empty_complex(2);
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(empty.faces(), vec![0]);
        assert!(void.faces().is_empty());
    }

    #[test]
    fn ideal_to_complex_round_trip() {
        // (xy, yz) in 3 vars: facets {x,z} and {y}... check via round trip
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        let c = complex_from_ideal(&i).unwrap();
        assert_eq!(ideal_from_complex(&c).unwrap(), i);
        assert_eq!(c.facets(), &[0b010, 0b101]);
    }

    #[test]
    fn zero_ideal_gives_full_simplex() {
        let c = complex_from_ideal(&MonomialIdeal::zero(3)).unwrap();
        assert_eq!(c.facets(), &[0b111]);
        assert!(complex_from_ideal(&MonomialIdeal::unit(3)).is_err());
        assert!(complex_from_ideal(&ideal(2, &["x1^2"])).is_err());
    }

    #[test]
    fn variable_generators_delete_vertices() {
        let i = ideal(2, &["x1"]);
        let c = complex_from_ideal(&i).unwrap();
        // only vertex 2 survives
        assert_eq!(c.facets(), &[0b10]);
    }

    #[test]
    fn links_and_restrictions() {
        // hollow triangle
        let c = SimplicialComplex::from_faces(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let link = c.link(&[1]).unwrap();
        // link of a vertex in the hollow triangle: two isolated vertices
        assert_eq!(link.facets(), &[0b001, 0b100]);
        let r = c.restrict(&[0, 1]).unwrap();
        assert_eq!(r.facets(), &[0b011]);
        assert!(c.link(&[0, 1, 2]).is_err()); // not a face
    }

    #[test]
    fn alexander_dual_small_example() {
        // (x1x2) in 3 vars: facets {1,3},{2,3}, complements {2},{1}
        let i = ideal(3, &["x1*x2"]);
        let d = alexander_dual(&i).unwrap();
        assert_eq!(d, ideal(3, &["x1", "x2"]));
        // and back
        assert_eq!(alexander_dual(&d).unwrap(), i);
    }

    #[test]
    fn dual_rejects_degenerate_input() {
        assert!(alexander_dual(&MonomialIdeal::zero(2)).is_err());
        assert!(alexander_dual(&MonomialIdeal::unit(2)).is_err());
        assert!(alexander_dual(&ideal(2, &["x1^2"])).is_err());
    }
}
