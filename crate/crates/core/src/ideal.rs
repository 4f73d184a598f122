//! Minimally generated monomial ideals and their arithmetic.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set, in
//! the canonical order of [`crate::monomial::canonical_cmp`] (degree, then
//! graded-lex). The zero ideal has an empty generator list; the unit ideal
//! is generated by `1`.

use crate::error::Error;
use crate::monomial::{canonical_cmp, Monomial};
use crate::Result;

/// A monomial ideal in `K[x_1, .., x_n]`, kept in minimal generated form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Summary data of a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    /// Minimum generator degree.
    pub alpha: u32,
    /// All generators share one degree.
    pub equigenerated: bool,
    /// That common degree, when `equigenerated`.
    pub generator_degree: Option<u32>,
    /// Union of the generator supports, ascending.
    pub support: Vec<usize>,
    /// Every ambient variable occurs in some generator.
    pub fully_supported: bool,
}

/// Record of a polarization: which original variable and copy each new
/// variable came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    /// Number of copies allotted to each original variable (at least 1).
    pub copies: Vec<usize>,
    /// `new_to_old[j] = (i, c)`: new variable `j` is copy `c` of old `i`.
    pub new_to_old: Vec<(usize, usize)>,
}

impl PolarizationMap {
    /// `true` when polarization did not change the ring.
    pub fn is_identity(&self) -> bool {
        self.copies.iter().all(|&c| c == 1)
    }
}

fn minimalize_in_place(gens: &mut Vec<Monomial>) {
    gens.sort_by(canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    'outer: for g in gens.iter() {
        for h in &kept {
            // kept is scanned in increasing degree, so only divisors appear
            if h.divides(g) {
                continue 'outer;
            }
        }
        kept.push(g.clone());
    }
    *gens = kept;
}

impl MonomialIdeal {
    /// Ideal generated by `gens` in `n` variables. The generating set is
    /// minimalized (duplicates and divisible generators removed) and sorted
    /// canonically.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch(n, g.ambient()));
            }
        }
        if gens.iter().any(Monomial::is_one) {
            return Ok(Self::unit(n));
        }
        let mut gens = gens;
        minimalize_in_place(&mut gens);
        Ok(MonomialIdeal { n, gens })
    }

    /// The zero ideal.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// The unit ideal.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// Ambient variable count.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// The minimal generators, canonically ordered.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// `true` for the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `true` for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// `true` when the ideal is proper and nonzero.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// `true` when every generator is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Membership test for a monomial.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.ambient() != self.n {
            return Err(Error::AmbientMismatch(self.n, m.ambient()));
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `true` when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimum generator degree; errors on the zero ideal.
    pub fn alpha(&self) -> Result<u32> {
        self.gens.first().map(Monomial::degree).ok_or(Error::ZeroIdeal("minimum generator degree"))
    }

    /// Common generator degree, if the ideal is equigenerated.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let first = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == first).then_some(first)
    }

    /// Union of the generator supports as a bitmask.
    pub fn support_mask(&self) -> u64 {
        self.gens.iter().fold(0, |m, g| m | g.support_mask())
    }

    /// Summary of the generating set; errors on the zero ideal.
    pub fn profile(&self) -> Result<IdealProfile> {
        let alpha = self.alpha()?;
        let degree = self.equigenerated_degree();
        let mask = self.support_mask();
        let support: Vec<usize> = (0..self.n).filter(|&i| mask >> i & 1 == 1).collect();
        Ok(IdealProfile {
            alpha,
            equigenerated: degree.is_some(),
            generator_degree: degree,
            fully_supported: support.len() == self.n,
            support,
        })
    }

    /// Product ideal `self * other`.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                products.push(g.mul(h)?);
            }
        }
        MonomialIdeal::new(self.n, products)
    }

    /// Power `self^k`, `k >= 1`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Product with a single monomial.
    pub fn multiply_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, gens)
    }

    /// Colon ideal `self : (v)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if v.ambient() != self.n {
            return Err(Error::AmbientMismatch(self.n, v.ambient()));
        }
        let gens = self.gens.iter().map(|g| g.colon(v)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, gens)
    }

    /// Intersection `self ∩ other` via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h)?);
            }
        }
        MonomialIdeal::new(self.n, lcms)
    }

    /// Polarization: each occurrence `x_i^e` of a variable is split into a
    /// product of `e` distinct copies. Returns the squarefree polarized
    /// ideal together with the variable bookkeeping. Betti tables are
    /// preserved degree-for-degree, which is what [`crate::betti`] relies
    /// on for non-squarefree input.
    pub fn polarize(&self) -> Result<(MonomialIdeal, PolarizationMap)> {
        let mut copies = vec![1usize; self.n];
        for g in &self.gens {
            for i in 0..self.n {
                copies[i] = copies[i].max(usize::from(g.exp(i)));
            }
        }
        let mut offset = vec![0usize; self.n];
        let mut new_to_old = Vec::new();
        let mut total = 0usize;
        for i in 0..self.n {
            offset[i] = total;
            for c in 0..copies[i] {
                new_to_old.push((i, c));
            }
            total += copies[i];
        }
        let mut new_gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut exps = vec![0u16; total];
            for i in 0..self.n {
                for c in 0..usize::from(g.exp(i)) {
                    exps[offset[i] + c] = 1;
                }
            }
            new_gens.push(Monomial::new(exps));
        }
        let ideal = MonomialIdeal::new(total, new_gens)?;
        Ok((ideal, PolarizationMap { copies, new_to_old }))
    }

    /// Restriction to a variable subset: keeps the generators supported
    /// inside `vars` and re-indexes them to `vars.len()` variables in the
    /// order given. `vars` must be distinct and in range.
    pub fn restrict(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        let mut seen = vec![false; self.n];
        let mut map = vec![usize::MAX; self.n];
        for (pos, &v) in vars.iter().enumerate() {
            if v >= self.n {
                return Err(Error::BadVertex(v, self.n));
            }
            if seen[v] {
                return Err(Error::BadVariablePriority(self.n));
            }
            seen[v] = true;
            map[v] = pos;
        }
        let keep_mask: u64 = vars.iter().fold(0, |m, &v| m | 1 << v);
        let gens = self
            .gens
            .iter()
            .filter(|g| g.support_mask() & !keep_mask == 0)
            .map(|g| g.map_variables(vars.len(), &map))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(vars.len(), gens)
    }

    /// Re-index into a (possibly larger) ring: `map[i]` is the new index of
    /// old variable `i`. The map must be injective on the support.
    pub fn map_variables(&self, new_n: usize, map: &[usize]) -> Result<MonomialIdeal> {
        let gens =
            self.gens.iter().map(|g| g.map_variables(new_n, map)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(new_n, gens)
    }

    /// Sum of two ideals (union of generating sets, re-minimalized).
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "(0) in {} vars", self.n);
        }
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({}) in {} vars", gens.join(", "), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_ideal;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        parse_ideal(&gens.join("\n"), Some(n)).unwrap()
    }

    #[test]
    fn minimalization_removes_duplicates_and_multiples() {
        // {x, y, x} -> {x, y}
        let i = ideal(2, &["x1", "x2", "x1"]);
        assert_eq!(i.num_generators(), 2);
        // {x^2, x^3} -> {x^2}
        let j = ideal(1, &["x1^2", "x1^3"]);
        assert_eq!(j.num_generators(), 1);
        assert_eq!(j.generators()[0].exp(0), 2);
    }

    #[test]
    fn one_absorbs_everything() {
        let i = ideal(3, &["1", "x1*x2"]);
        assert!(i.is_unit());
        assert_eq!(i.num_generators(), 1);
    }

    #[test]
    fn zero_and_unit_flags() {
        assert!(MonomialIdeal::zero(3).is_zero());
        assert!(MonomialIdeal::unit(3).is_unit());
        assert!(!MonomialIdeal::unit(3).is_proper_nonzero());
        assert!(ideal(3, &["x1"]).is_proper_nonzero());
    }

    #[test]
    fn canonical_generator_order() {
        let i = ideal(2, &["x2^2", "x1*x2", "x1^2", "x2"]);
        // x2 (degree 1) first; x2^2 and x1*x2 are absorbed by x2
        let shown: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x2", "x1^2"]);
    }

    #[test]
    fn product_and_power() {
        // (xy, yz)^2 = (x^2y^2, xy^2z, y^2z^2)
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        let sq = i.power(2).unwrap();
        let shown: Vec<String> = sq.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"]);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0).unwrap_err(), Error::ZeroPower);
        assert_eq!(i.multiply(&i).unwrap(), sq);
    }

    #[test]
    fn colon_by_monomial() {
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        let c = i.colon_monomial(&Monomial::var(3, 1)).unwrap();
        let shown: Vec<String> = c.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x1", "x3"]);
        // colon that reaches the unit ideal
        let u = ideal(2, &["x1"]).colon_monomial(&Monomial::var(2, 0)).unwrap();
        assert!(u.is_unit());
    }

    #[test]
    fn intersection_via_lcms() {
        let i = ideal(2, &["x1"]);
        let j = ideal(2, &["x2"]);
        let meet = i.intersect(&j).unwrap();
        assert_eq!(meet, ideal(2, &["x1*x2"]));
        // intersection with the unit ideal is the identity
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)).unwrap(), i);
        assert!(i.intersect(&MonomialIdeal::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn profile_reports_support_and_degrees() {
        let i = ideal(4, &["x1*x2", "x2*x3"]);
        let p = i.profile().unwrap();
        assert_eq!(p.alpha, 2);
        assert!(p.equigenerated);
        assert_eq!(p.generator_degree, Some(2));
        assert_eq!(p.support, vec![0, 1, 2]);
        assert!(!p.fully_supported);
        assert!(MonomialIdeal::zero(2).profile().is_err());
    }

    #[test]
    fn polarization_of_squarefree_is_identity() {
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        let (p, map) = i.polarize().unwrap();
        assert!(map.is_identity());
        assert_eq!(p, i);
    }

    #[test]
    fn polarization_splits_powers() {
        // (x^2, xy) in 2 vars -> (x1x2, x1y) in 3 vars
        let i = ideal(2, &["x1^2", "x1*x2"]);
        let (p, map) = i.polarize().unwrap();
        assert_eq!(map.copies, vec![2, 1]);
        assert_eq!(p.ambient(), 3);
        let shown: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x1*x2", "x1*x3"]);
        assert!(p.is_squarefree());
    }

    #[test]
    fn restriction_keeps_contained_generators() {
        let i = ideal(4, &["x1*x2", "x2*x3", "x3*x4"]);
        let r = i.restrict(&[1, 2]).unwrap();
        assert_eq!(r, ideal(2, &["x1*x2"]));
        assert!(i.restrict(&[0]).unwrap().is_zero());
        assert!(i.restrict(&[9]).is_err());
    }

    #[test]
    fn membership() {
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        assert!(i.contains(&parse_monomial_str("x1*x2^2*x3", 3)).unwrap());
        assert!(!i.contains(&parse_monomial_str("x1*x3", 3)).unwrap());
    }

    fn parse_monomial_str(s: &str, n: usize) -> Monomial {
        crate::textio::parse_monomial(s, n).unwrap()
    }
}
