//! Graded Betti numbers, Castelnuovo–Mumford regularity, and the
//! homological predicates built on them.
//!
//! The main path computes the Betti table of a squarefree monomial ideal
//! with Hochster's formula: `β_{i,j}` is a sum of reduced homology
//! dimensions of restrictions of the Stanley–Reisner complex to vertex
//! subsets of size `j`. Non-squarefree ideals are polarized first, which
//! preserves the table degree for degree. A second, fully independent path
//! ([`betti_via_koszul`]) resolves against the Koszul complex of the
//! variables and is used to cross-check the first.
//!
//! Tables are for the ideal `I` as a module (so `β_{0,d}` counts minimal
//! generators of degree `d`), not for the quotient `S/I`.

use crate::complex::{complex_from_ideal, alexander_dual, SimplicialComplex};
use crate::error::Error;
use crate::exec;
use crate::field::FieldSpec;
use crate::homology;
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

/// Largest ambient dimension accepted by the subset-sum over vertex sets.
const MAX_BETTI_VERTICES: usize = 20;

/// A graded Betti table: `(i, j) -> β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, u32, u64)>", from = "Vec<(usize, u32, u64)>")]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable { entries: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    /// `β_{i,j}`.
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max { j - i }` over nonzero entries; 0 for an empty table.
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|&(i, j)| (j as i64 - i as i64).max(0) as u32)
            .max()
            .unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((bi, _), _)| *bi == i).map(|(_, &v)| v).sum()
    }

    /// Sum of all entries.
    pub fn sum(&self) -> u64 {
        self.entries.values().sum()
    }
}

impl From<BettiTable> for Vec<(usize, u32, u64)> {
    fn from(t: BettiTable) -> Self {
        t.entries.into_iter().map(|((i, j), c)| (i, j, c)).collect()
    }
}

impl From<Vec<(usize, u32, u64)>> for BettiTable {
    fn from(v: Vec<(usize, u32, u64)>) -> Self {
        let mut t = BettiTable::new();
        for (i, j, c) in v {
            t.add(i, j, c);
        }
        t
    }
}

impl fmt::Display for BettiTable {
    /// Grid with homological degree `i` across and slope `j - i` down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty table)");
        }
        let imax = self.projective_dimension().unwrap();
        let tmin = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
        let tmax = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap();
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap()
            .max(2);
        write!(f, "{:>6}", "")?;
        for i in 0..=imax {
            write!(f, " {i:>width$}")?;
        }
        for t in tmin..=tmax {
            write!(f, "\n{t:>5}:")?;
            for i in 0..=imax {
                let j = i as i64 + t;
                let v = if j < 0 { 0 } else { self.get(i, j as u32) };
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
        }
        Ok(())
    }
}

/// The family of vertex sets that can carry Betti contributions: nonempty
/// unions of generator supports. Restricting to any other set leaves an
/// uncovered vertex, which cones the restricted complex and kills its
/// homology.
fn support_union_family(supports: &[u64]) -> Vec<u64> {
    let mut family: HashSet<u64> = HashSet::new();
    family.insert(0);
    for &s in supports {
        let additions: Vec<u64> = family.iter().map(|&w| w | s).collect();
        family.extend(additions);
    }
    family.remove(&0);
    let mut out: Vec<u64> = family.into_iter().collect();
    out.sort_unstable();
    out
}

/// Bitset over all subsets of `[n]` marking the non-faces of the
/// Stanley–Reisner complex (sets containing a generator support).
fn non_face_table(n: usize, supports: &[u64]) -> Vec<bool> {
    let mut non_face = vec![false; 1usize << n];
    for &s in supports {
        non_face[s as usize] = true;
    }
    for mask in 1..(1u64 << n) {
        if non_face[mask as usize] {
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            if non_face[(mask & !(1 << v)) as usize] {
                non_face[mask as usize] = true;
                break;
            }
            rest &= rest - 1;
        }
    }
    non_face
}

/// Betti table of a proper nonzero squarefree monomial ideal via
/// Hochster's formula.
pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("graded Betti table"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("Hochster decomposition"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ambient();
    if n > MAX_BETTI_VERTICES {
        return Err(Error::AmbientTooLarge(n, MAX_BETTI_VERTICES));
    }
    let supports: Vec<u64> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let non_face = non_face_table(n, &supports);
    let family = support_union_family(&supports);

    let contributions = exec::par_map(&family, |&w| {
        let mut faces = Vec::new();
        let mut s = w;
        loop {
            if !non_face[s as usize] {
                faces.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & w;
        }
        let dims = homology::homology_from_faces(n, &faces, field);
        let j = w.count_ones();
        let mut local: Vec<(usize, u32, u64)> = Vec::new();
        for (k, &d) in dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            // H̃_{k-1} of the restriction to W lands in β_{i,|W|} with
            // k - 1 = |W| - i - 2
            let i = j as i64 - k as i64 - 1;
            if i >= 0 {
                local.push((i as usize, j, d as u64));
            }
        }
        local
    });

    let mut table = BettiTable::new();
    for local in contributions {
        for (i, j, c) in local {
            table.add(i, j, c);
        }
    }
    Ok(table)
}

/// Betti table of any monomial ideal: squarefree ideals go straight to
/// Hochster's formula, the rest are polarized first. The unit ideal is the
/// free module, `β_{0,0} = 1`; the zero ideal is rejected.
pub fn graded_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("graded Betti table"));
    }
    if ideal.is_unit() {
        let mut t = BettiTable::new();
        t.add(0, 0, 1);
        return Ok(t);
    }
    if ideal.is_squarefree() {
        hochster_betti(ideal, field)
    } else {
        let (polarized, _) = ideal.polarize()?;
        hochster_betti(&polarized, field)
    }
}

/// Independent Betti oracle: resolve `I ⊗ K_•` where `K_•` is the Koszul
/// complex on all variables, and read `β_{i,j} = dim H_i(I ⊗ K_•)_j`.
///
/// The internal degree is scanned up to `max_j`, which must be at least the
/// degree of the lcm of all generators (the Taylor complex bound, beyond
/// which every entry vanishes); `None` uses that bound.
pub fn betti_via_koszul(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    max_j: Option<u32>,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("graded Betti table"));
    }
    if ideal.is_unit() {
        let mut t = BettiTable::new();
        t.add(0, 0, 1);
        return Ok(t);
    }
    let n = ideal.ambient();
    const MAX_KOSZUL_VARIABLES: usize = 16;
    if n > MAX_KOSZUL_VARIABLES {
        return Err(Error::AmbientTooLarge(n, MAX_KOSZUL_VARIABLES));
    }
    let mut lcm = ideal.generators()[0].clone();
    for g in &ideal.generators()[1..] {
        lcm = lcm.lcm(g)?;
    }
    let bound = lcm.degree();
    let mj = max_j.unwrap_or(bound);
    if mj < bound {
        return Err(Error::DegreeBoundTooSmall(mj, bound));
    }

    let mut subsets_by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0..(1u64 << n) {
        subsets_by_size[mask.count_ones() as usize].push(mask);
    }

    let degrees: Vec<u32> = (0..=mj).collect();
    let per_degree = exec::par_map(&degrees, |&j| {
        koszul_strand(ideal, field, &subsets_by_size, j)
    });

    let mut table = BettiTable::new();
    for strand in per_degree {
        for (i, j, c) in strand {
            table.add(i, j, c);
        }
    }
    Ok(table)
}

/// Homology of the degree-`j` strand of `I ⊗ K_•`; returns `(i, j, β_{i,j})`
/// triples.
fn koszul_strand(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    subsets_by_size: &[Vec<u64>],
    j: u32,
) -> Vec<(usize, u32, u64)> {
    let n = ideal.ambient();
    let pmax = (n as u32).min(j) as usize;

    // basis of (I ⊗ K_p)_j: (m, F) with m a degree-(j-p) monomial of I
    // and F a p-subset of the variables
    let mut bases: Vec<Vec<(Monomial, u64)>> = Vec::with_capacity(pmax + 2);
    let mut index: Vec<HashMap<(Vec<u16>, u64), usize>> = Vec::with_capacity(pmax + 2);
    for p in 0..=pmax {
        let d = j - p as u32;
        let members: Vec<Monomial> = monomials_of_degree(n, d)
            .into_iter()
            .filter(|m| ideal.contains(m).unwrap_or(false))
            .collect();
        let mut basis = Vec::with_capacity(members.len() * subsets_by_size[p].len());
        for m in &members {
            for &f in &subsets_by_size[p] {
                basis.push((m.clone(), f));
            }
        }
        let idx = basis
            .iter()
            .enumerate()
            .map(|(t, (m, f))| ((m.exps().to_vec(), *f), t))
            .collect();
        bases.push(basis);
        index.push(idx);
    }

    // rank of d_p : (I ⊗ K_p)_j -> (I ⊗ K_{p-1})_j
    let mut ranks = vec![0usize; pmax + 2];
    for p in 1..=pmax {
        if bases[p].is_empty() || bases[p - 1].is_empty() {
            continue;
        }
        let mut entries: Vec<linalg::Entry> = Vec::new();
        for (col, (m, fmask)) in bases[p].iter().enumerate() {
            let mut sign = 1i64;
            let mut rest = *fmask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let image = m.mul(&Monomial::var(n, v)).expect("exponent in range");
                let key = (image.exps().to_vec(), fmask & !(1 << v));
                let row = index[p - 1][&key];
                entries.push((row, col, sign));
                sign = -sign;
            }
        }
        ranks[p] = linalg::rank(field, bases[p - 1].len(), bases[p].len(), &entries);
    }

    let mut out = Vec::new();
    for p in 0..=pmax {
        let h = bases[p].len() as i64 - ranks[p] as i64 - ranks[p + 1] as i64;
        assert!(h >= 0, "Koszul strand is not a complex");
        if h > 0 {
            out.push((p, j, h as u64));
        }
    }
    out
}

/// Castelnuovo–Mumford regularity of the ideal (0 for the unit ideal).
pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<u32> {
    Ok(graded_betti(ideal, field)?.regularity())
}

/// Whether the ideal has a linear resolution over the given field: all its
/// generators sit in one degree `d` and the regularity equals `d`.
/// Mixed-degree ideals return `false`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("resolution data"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("resolution data"));
    }
    match ideal.equigenerated_degree() {
        None => Ok(false),
        Some(d) => Ok(regularity(ideal, field)? == d),
    }
}

/// Reisner's criterion: the complex is Cohen–Macaulay over the field iff
/// every link (including the whole complex, as the link of `∅`) has reduced
/// homology only in its top dimension.
pub fn is_cohen_macaulay_complex(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if complex.is_void() {
        return Ok(true);
    }
    for &face in &complex.faces() {
        let link = complex.link_mask(face)?;
        let top = link.dim().expect("link of a face is non-void");
        let dims = homology::homology_dims(&link, field);
        for (k, &h) in dims.iter().enumerate() {
            if h > 0 && (k as i64 - 1) < top {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The two sides of the Eagon–Reiner correspondence for a proper nonzero
/// squarefree ideal: whether it has a linear resolution, and whether the
/// Stanley–Reisner complex of its Alexander dual is Cohen–Macaulay. The
/// two answers must always agree.
pub fn eagon_reiner_data(ideal: &MonomialIdeal, field: FieldSpec) -> Result<(bool, bool)> {
    let linear = has_linear_resolution(ideal, field)?;
    let dual = alexander_dual(ideal)?;
    let dual_complex = complex_from_ideal(&dual)?;
    let cm = is_cohen_macaulay_complex(&dual_complex, field)?;
    Ok((linear, cm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_ideal;

    fn ideal(text: &str, n: usize) -> MonomialIdeal {
        parse_ideal(text, Some(n)).unwrap()
    }

    fn table(entries: &[(usize, u32, u64)]) -> BettiTable {
        entries.to_vec().into()
    }

    #[test]
    fn principal_squarefree_ideal() {
        let i = ideal("x1*x2", 2);
        for f in [FieldSpec::Q, FieldSpec::F2] {
            assert_eq!(hochster_betti(&i, f).unwrap(), table(&[(0, 2, 1)]));
        }
        assert_eq!(regularity(&i, FieldSpec::Q).unwrap(), 2);
        assert!(has_linear_resolution(&i, FieldSpec::Q).unwrap());
    }

    #[test]
    fn path_on_three_vertices() {
        let i = ideal("x1*x2\nx2*x3", 3);
        let expected = table(&[(0, 2, 2), (1, 3, 1)]);
        for f in [FieldSpec::Q, FieldSpec::F2, FieldSpec::F3] {
            assert_eq!(hochster_betti(&i, f).unwrap(), expected);
            assert_eq!(betti_via_koszul(&i, f, None).unwrap(), expected);
        }
        assert_eq!(regularity(&i, FieldSpec::Q).unwrap(), 2);
        assert!(has_linear_resolution(&i, FieldSpec::F2).unwrap());
    }

    #[test]
    fn maximal_ideal_in_three_variables() {
        let i = ideal("x1\nx2\nx3", 3);
        let expected = table(&[(0, 1, 3), (1, 2, 3), (2, 3, 1)]);
        assert_eq!(hochster_betti(&i, FieldSpec::Q).unwrap(), expected);
        assert_eq!(betti_via_koszul(&i, FieldSpec::F2, None).unwrap(), expected);
        assert_eq!(regularity(&i, FieldSpec::Q).unwrap(), 1);
    }

    #[test]
    fn mixed_degree_complete_intersection() {
        let i = ideal("x1\nx2*x3", 3);
        let expected = table(&[(0, 1, 1), (0, 2, 1), (1, 3, 1)]);
        assert_eq!(hochster_betti(&i, FieldSpec::Q).unwrap(), expected);
        assert_eq!(betti_via_koszul(&i, FieldSpec::Q, None).unwrap(), expected);
        assert!(!has_linear_resolution(&i, FieldSpec::Q).unwrap());
        assert_eq!(regularity(&i, FieldSpec::Q).unwrap(), 2);
    }

    #[test]
    fn polarization_matches_koszul_on_powers() {
        // (x, y)^2 has a linear resolution
        let i = ideal("x1^2\nx1*x2\nx2^2", 2);
        let expected = table(&[(0, 2, 3), (1, 3, 2)]);
        assert_eq!(graded_betti(&i, FieldSpec::Q).unwrap(), expected);
        assert_eq!(betti_via_koszul(&i, FieldSpec::Q, None).unwrap(), expected);
        assert!(has_linear_resolution(&i, FieldSpec::Q).unwrap());

        let j = ideal("x1^2\nx1*x2", 2);
        let expected = table(&[(0, 2, 2), (1, 3, 1)]);
        assert_eq!(graded_betti(&j, FieldSpec::F3).unwrap(), expected);
        assert_eq!(betti_via_koszul(&j, FieldSpec::F3, None).unwrap(), expected);
    }

    #[test]
    fn unit_and_zero_edges() {
        let unit = MonomialIdeal::unit(3);
        assert_eq!(graded_betti(&unit, FieldSpec::Q).unwrap(), table(&[(0, 0, 1)]));
        assert_eq!(regularity(&unit, FieldSpec::Q).unwrap(), 0);
        let zero = MonomialIdeal::zero(3);
        assert!(graded_betti(&zero, FieldSpec::Q).is_err());
        assert!(betti_via_koszul(&zero, FieldSpec::Q, None).is_err());
    }

    #[test]
    fn truncation_bound_is_enforced() {
        let i = ideal("x1*x2\nx2*x3", 3);
        // lcm has degree 3
        assert!(matches!(
            betti_via_koszul(&i, FieldSpec::Q, Some(2)),
            Err(Error::DegreeBoundTooSmall(2, 3))
        ));
        assert!(betti_via_koszul(&i, FieldSpec::Q, Some(5)).is_ok());
    }

    #[test]
    fn characteristic_dependent_regularity() {
        // triangulated projective plane: regularity jumps in characteristic 2
        let i = ideal(
            "a*b*d\na*b*f\na*c*e\na*c*d\na*e*f\nb*d*e\nb*c*f\nb*c*e\nc*d*f\nd*e*f",
            6,
        );
        assert_eq!(regularity(&i, FieldSpec::Q).unwrap(), 3);
        assert_eq!(regularity(&i, FieldSpec::F2).unwrap(), 4);
        assert_eq!(regularity(&i, FieldSpec::F3).unwrap(), 3);
        assert!(has_linear_resolution(&i, FieldSpec::Q).unwrap());
        assert!(!has_linear_resolution(&i, FieldSpec::F2).unwrap());
    }

    #[test]
    fn eagon_reiner_agrees_on_both_outcomes() {
        // 4-cycle edge ideal: linear resolution, dual complex Cohen-Macaulay
        let cycle = ideal("x1*x2\nx2*x3\nx3*x4\nx1*x4", 4);
        assert_eq!(eagon_reiner_data(&cycle, FieldSpec::Q).unwrap(), (true, true));
        // two disjoint edges: no linear resolution, dual complex disconnected
        let matching = ideal("x1*x2\nx3*x4", 4);
        assert_eq!(eagon_reiner_data(&matching, FieldSpec::Q).unwrap(), (false, false));
    }

    #[test]
    fn betti_table_display_and_serde() {
        let t = table(&[(0, 2, 3), (1, 3, 2)]);
        let shown = t.to_string();
        assert!(shown.contains("2:"), "slope row label missing in:\n{shown}");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[0,2,3],[1,3,2]]");
        let back: BettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.projective_dimension(), Some(1));
        assert_eq!(t.total(0), 3);
        assert_eq!(t.sum(), 5);
    }

    #[test]
    fn non_face_table_matches_direct_check() {
        let i = ideal("x1*x2\nx2*x3^2\nx4", 4);
        let supports: Vec<u64> =
            i.generators().iter().map(|g| g.support_mask()).collect();
        let nf = non_face_table(4, &supports);
        for mask in 0u64..16 {
            let direct = supports.iter().any(|&s| s & mask == s);
            assert_eq!(nf[mask as usize], direct, "mask {mask:b}");
        }
    }
}
