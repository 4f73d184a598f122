//! Named ideal families and the splitting checks around them.
//!
//! Two classical six-variable cubics anchor this module: Terai's ideal,
//! whose regularity is 3 in characteristic 0 but 4 in characteristic 2, and
//! Sturmfels' ideal, which has linear quotients while its square fails to
//! have a linear resolution. [`terai_family`] and [`sturmfels_family`]
//! extend them to fully supported, equigenerated degree-`d` ideals in `n`
//! variables by adjoining an auxiliary block of variables and the squarefree
//! degree-2 Veronese; the Sturmfels extension carries an explicit linear
//! quotients order. [`betti_splitting_check`] tests additivity of graded
//! Betti numbers across a generator partition, and
//! [`tor_vanishing_lcm_check`] verifies the lcm criterion that certifies
//! such splittings.

use crate::betti::graded_betti;
use crate::error::Error;
use crate::exec;
use crate::field::FieldSpec;
use crate::ideal::MonomialIdeal;
use crate::monomial::{canonical_cmp, lex_cmp_with_priority, Monomial};
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Number of random subsets drawn in the sampled mode of
/// [`tor_vanishing_lcm_check`], after all subsets of size at most 3.
const TOR_SAMPLE_COUNT: usize = 2048;

/// Fixed seed for the sampled mode, so repeated runs agree.
const TOR_SAMPLE_SEED: u64 = 0x1729;

fn cubic(vars: [usize; 3]) -> Monomial {
    Monomial::from_support_mask(6, vars.iter().fold(0u64, |m, &v| m | 1 << v))
}

/// Terai's ideal: ten squarefree cubics in six variables whose regularity
/// is 3 over fields of characteristic 0 and 4 in characteristic 2.
pub fn terai_ideal() -> MonomialIdeal {
    let listed = [
        [0, 1, 3], // abd
        [0, 1, 5], // abf
        [0, 2, 4], // ace
        [0, 2, 3], // acd
        [0, 4, 5], // aef
        [1, 3, 4], // bde
        [1, 2, 5], // bcf
        [1, 2, 4], // bce
        [2, 3, 5], // cdf
        [3, 4, 5], // def
    ];
    MonomialIdeal::new(6, listed.iter().map(|&t| cubic(t)).collect())
        .expect("the listed generators are valid")
}

/// Sturmfels' ideal: eight squarefree cubics in six variables that have
/// linear quotients — so a linear resolution — while the square does not
/// have a linear resolution.
///
/// Returns the ideal together with its linear quotients order, given as
/// indices into the canonical generator list.
pub fn sturmfels_ideal() -> (MonomialIdeal, Vec<usize>) {
    let listed = [
        [3, 4, 5], // def
        [2, 4, 5], // cef
        [2, 3, 5], // cdf
        [2, 3, 4], // cde
        [1, 4, 5], // bef
        [1, 2, 3], // bcd
        [0, 2, 5], // acf
        [0, 3, 4], // ade
    ];
    let monos: Vec<Monomial> = listed.iter().map(|&t| cubic(t)).collect();
    let ideal = MonomialIdeal::new(6, monos.clone()).expect("the listed generators are valid");
    let order = monos
        .iter()
        .map(|v| {
            ideal
                .generators()
                .iter()
                .position(|g| g == v)
                .expect("every listed generator is minimal")
        })
        .collect();
    (ideal, order)
}

/// All fifteen squarefree degree-2 monomials in six variables. This is a
/// polymatroidal ideal, hence has linear quotients and a linear resolution.
pub fn veronese2_ideal() -> MonomialIdeal {
    let mut gens = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            gens.push(Monomial::from_support_mask(6, 1 << i | 1 << j));
        }
    }
    MonomialIdeal::new(6, gens).expect("the listed generators are valid")
}

/// Parameters of the degree-`d` families on `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    /// Ambient variable count; the variables beyond the first six form the
    /// auxiliary block `y_1, .., y_{n-6}`.
    pub n: usize,
    /// Generation degree.
    pub d: u32,
}

impl FamilyParams {
    /// The families are defined for `n >= 6` and `3 <= d <= n - 3`.
    pub fn validate(&self) -> Result<()> {
        if self.n < 6 || self.d < 3 || (self.d as usize) + 3 > self.n {
            return Err(Error::Unsupported("family parameters require n >= 6 and 3 <= d <= n - 3"));
        }
        Ok(())
    }
}

struct FamilyPieces {
    /// The product `y_1 .. y_{d-3}` every generator is multiplied by.
    prefix: Monomial,
    /// Variable indices of the block `y_{d-2}, .., y_{n-6}`.
    middle: Vec<usize>,
    /// The six-variable base ideal, embedded in `n` variables.
    base: MonomialIdeal,
    /// The squarefree Veronese, embedded in `n` variables.
    veronese: MonomialIdeal,
    /// The assembled family member.
    ideal: MonomialIdeal,
}

/// Build `prefix * (base + (middle block) * veronese)`. Either block of
/// auxiliary variables may be empty; together they always cover all of
/// them, so the result is fully supported.
fn assemble(base6: &MonomialIdeal, p: FamilyParams) -> Result<FamilyPieces> {
    p.validate()?;
    let (n, d) = (p.n, p.d as usize);
    let embed: Vec<usize> = (0..6).collect();
    let base = base6.map_variables(n, &embed)?;
    let veronese = veronese2_ideal().map_variables(n, &embed)?;
    // the k-th auxiliary variable y_k is variable 5 + k, with k 1-based
    let middle: Vec<usize> = ((d - 2)..=(n - 6)).map(|k| 5 + k).collect();
    let mut h = base.clone();
    for &y in &middle {
        h = h.sum(&veronese.multiply_monomial(&Monomial::var(n, y))?)?;
    }
    let mut prefix = Monomial::one(n);
    for k in 1..=(d - 3) {
        prefix = prefix.mul(&Monomial::var(n, 5 + k))?;
    }
    let ideal = h.multiply_monomial(&prefix)?;
    Ok(FamilyPieces { prefix, middle, base, veronese, ideal })
}

/// Degree-`d` member of the family built over Terai's ideal.
///
/// With auxiliary variables `y_1, .., y_{n-6}` following the first six,
/// this is `(y_1 .. y_{d-3}) * (J + (y_{d-2}, .., y_{n-6}) L)`, where `J`
/// is Terai's ideal and `L` the squarefree Veronese. The result is
/// squarefree, fully supported, and equigenerated in degree `d`; its
/// regularity is `d` in characteristic 0 and `d + 1` in characteristic 2.
pub fn terai_family(p: FamilyParams) -> Result<MonomialIdeal> {
    Ok(assemble(&terai_ideal(), p)?.ideal)
}

/// Degree-`d` member of the family built over Sturmfels' ideal, together
/// with a linear quotients order (indices into the canonical generators).
///
/// The construction is the same as [`terai_family`] with Sturmfels' ideal
/// as the base. The order lists the auxiliary-block generators first —
/// ascending auxiliary variable, then the canonical Veronese order — and
/// the stored Sturmfels order after them. The returned ideal has linear
/// quotients, yet the regularity of its square exceeds `2d`, so no power
/// of it has linear powers.
pub fn sturmfels_family(p: FamilyParams) -> Result<(MonomialIdeal, Vec<usize>)> {
    let (base6, stored) = sturmfels_ideal();
    let pieces = assemble(&base6, p)?;
    let embed: Vec<usize> = (0..6).collect();
    let mut ordered: Vec<Monomial> = Vec::new();
    for &y in &pieces.middle {
        let yvar = Monomial::var(p.n, y);
        for w in pieces.veronese.generators() {
            ordered.push(pieces.prefix.mul(&yvar.mul(w)?)?);
        }
    }
    for &k in &stored {
        let v = base6.generators()[k].map_variables(p.n, &embed)?;
        ordered.push(pieces.prefix.mul(&v)?);
    }
    let gens = pieces.ideal.generators();
    let order = ordered
        .iter()
        .map(|m| {
            gens.iter()
                .position(|g| g == m)
                .expect("every ordered generator appears in the canonical list")
        })
        .collect();
    Ok((pieces.ideal, order))
}

/// Result of [`betti_splitting_check`]: whether the graded Betti numbers
/// are additive across the partition, with the nonzero residuals
/// `β_{i,j}(whole) − β_{i,j}(left) − β_{i,j}(right) − β_{i−1,j}(left ∩ right)`.
#[derive(Clone, Debug, Serialize)]
pub struct BettiSplittingReport {
    pub holds: bool,
    /// Triples `(i, j, residual)` for every position with nonzero residual.
    pub residuals: Vec<(usize, u32, i64)>,
}

/// Check whether the generator partition `whole = left + right` is a Betti
/// splitting over `field`, i.e. whether at every homological degree `i` and
/// internal degree `j`
/// `β_{i,j}(whole) = β_{i,j}(left) + β_{i,j}(right) + β_{i−1,j}(left ∩ right)`.
///
/// The generators of `left` and `right` must be disjoint and together be
/// exactly the minimal generators of `whole`.
pub fn betti_splitting_check(
    whole: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    field: FieldSpec,
) -> Result<BettiSplittingReport> {
    let n = whole.ambient();
    if left.ambient() != n {
        return Err(Error::AmbientMismatch(left.ambient(), n));
    }
    if right.ambient() != n {
        return Err(Error::AmbientMismatch(right.ambient(), n));
    }
    if left.is_zero() || right.is_zero() {
        return Err(Error::BadPartition("each part must contribute at least one generator"));
    }
    let mut union: Vec<Monomial> = left.generators().to_vec();
    union.extend_from_slice(right.generators());
    union.sort_by(canonical_cmp);
    if union.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::BadPartition("the parts share a generator"));
    }
    if union.as_slice() != whole.generators() {
        return Err(Error::BadPartition("the parts do not partition the generators of the whole"));
    }
    let meet = left.intersect(right)?;
    let ideals: Vec<&MonomialIdeal> = vec![whole, left, right, &meet];
    let mut tables = exec::par_map(&ideals, |id| graded_betti(id, field)).into_iter();
    let whole_t = tables.next().expect("four tables")?;
    let left_t = tables.next().expect("four tables")?;
    let right_t = tables.next().expect("four tables")?;
    let meet_t = tables.next().expect("four tables")?;
    let mut keys: BTreeSet<(usize, u32)> = BTreeSet::new();
    keys.extend(whole_t.entries().map(|(k, _)| k));
    keys.extend(left_t.entries().map(|(k, _)| k));
    keys.extend(right_t.entries().map(|(k, _)| k));
    keys.extend(meet_t.entries().map(|((i, j), _)| (i + 1, j)));
    let mut residuals = Vec::new();
    for (i, j) in keys {
        let shifted = if i == 0 { 0 } else { meet_t.get(i - 1, j) };
        let split = left_t.get(i, j) + right_t.get(i, j) + shifted;
        let diff = whole_t.get(i, j) as i64 - split as i64;
        if diff != 0 {
            residuals.push((i, j, diff));
        }
    }
    Ok(BettiSplittingReport { holds: residuals.is_empty(), residuals })
}

/// How [`tor_vanishing_lcm_check`] covered the subsets of the source
/// generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorCheckMode {
    /// Every nonempty subset was checked.
    Exhaustive,
    /// All subsets of size at most 3, plus seeded random larger subsets.
    Sampled,
}

/// Result of [`tor_vanishing_lcm_check`].
#[derive(Clone, Debug, Serialize)]
pub struct TorVanishingReport {
    pub holds: bool,
    pub mode: TorCheckMode,
    /// A subset of source generator indices violating the criterion, when
    /// one was found.
    pub witness: Option<Vec<usize>>,
}

fn subset_fails(subset: &[usize], src: &[Monomial], img: &[Monomial]) -> Result<bool> {
    let mut lcm_src = src[subset[0]].clone();
    let mut lcm_img = img[subset[0]].clone();
    for &k in &subset[1..] {
        lcm_src = lcm_src.lcm(&src[k])?;
        lcm_img = lcm_img.lcm(&img[k])?;
    }
    Ok(!(lcm_img.divides(&lcm_src) && lcm_img != lcm_src))
}

fn exhaustive_witness(
    k: usize,
    src: &[Monomial],
    img: &[Monomial],
    state: Option<(Monomial, Monomial)>,
    chosen: &mut Vec<usize>,
) -> Result<Option<Vec<usize>>> {
    if k == src.len() {
        if let Some((lcm_src, lcm_img)) = &state {
            if !(lcm_img.divides(lcm_src) && lcm_img != lcm_src) {
                return Ok(Some(chosen.clone()));
            }
        }
        return Ok(None);
    }
    // leave-out branch first, so small offending subsets surface early
    if let Some(w) = exhaustive_witness(k + 1, src, img, state.clone(), chosen)? {
        return Ok(Some(w));
    }
    let next = match &state {
        None => (src[k].clone(), img[k].clone()),
        Some((lcm_src, lcm_img)) => (lcm_src.lcm(&src[k])?, lcm_img.lcm(&img[k])?),
    };
    chosen.push(k);
    let found = exhaustive_witness(k + 1, src, img, Some(next), chosen)?;
    chosen.pop();
    Ok(found)
}

fn first_failing_small(src: &[Monomial], img: &[Monomial]) -> Result<Option<Vec<usize>>> {
    let m = src.len();
    for a in 0..m {
        if subset_fails(&[a], src, img)? {
            return Ok(Some(vec![a]));
        }
        for b in (a + 1)..m {
            if subset_fails(&[a, b], src, img)? {
                return Ok(Some(vec![a, b]));
            }
            for c in (b + 1)..m {
                if subset_fails(&[a, b, c], src, img)? {
                    return Ok(Some(vec![a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

/// Check the lcm criterion certifying that the inclusion `sub ⊆ target` is
/// Tor-vanishing: under the generator map `phi` (indices into the
/// generators of `target`), `lcm` of every nonempty subset of generators of
/// `sub` must lie in the irrelevant ideal times the `lcm` of the image —
/// equivalently, the image `lcm` must properly divide the source `lcm`.
///
/// With at most `exhaustive_limit` generators every subset is checked;
/// beyond that, all subsets of size up to 3 plus seeded random larger
/// subsets. The report records which mode ran and an offending subset if
/// one was found.
pub fn tor_vanishing_lcm_check(
    sub: &MonomialIdeal,
    target: &MonomialIdeal,
    phi: &[usize],
    exhaustive_limit: usize,
) -> Result<TorVanishingReport> {
    if sub.ambient() != target.ambient() {
        return Err(Error::AmbientMismatch(sub.ambient(), target.ambient()));
    }
    let m = sub.num_generators();
    if phi.len() != m {
        return Err(Error::BadMapLength(phi.len(), m));
    }
    for &t in phi {
        if t >= target.num_generators() {
            return Err(Error::BadGeneratorIndex(t, target.num_generators()));
        }
    }
    if !target.contains_ideal(sub)? {
        return Err(Error::NotContained("the source of a Tor-vanishing check must lie in the target"));
    }
    let src = sub.generators();
    let img: Vec<Monomial> = phi.iter().map(|&t| target.generators()[t].clone()).collect();
    if m <= exhaustive_limit {
        let witness = exhaustive_witness(0, src, &img, None, &mut Vec::new())?;
        return Ok(TorVanishingReport {
            holds: witness.is_none(),
            mode: TorCheckMode::Exhaustive,
            witness,
        });
    }
    if let Some(witness) = first_failing_small(src, &img)? {
        return Ok(TorVanishingReport {
            holds: false,
            mode: TorCheckMode::Sampled,
            witness: Some(witness),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(TOR_SAMPLE_SEED);
    for _ in 0..TOR_SAMPLE_COUNT {
        let subset: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
        if subset.len() > 3 && subset_fails(&subset, src, &img)? {
            return Ok(TorVanishingReport {
                holds: false,
                mode: TorCheckMode::Sampled,
                witness: Some(subset),
            });
        }
    }
    Ok(TorVanishingReport { holds: true, mode: TorCheckMode::Sampled, witness: None })
}

/// For each generator of `sub`, the index of the lex-least generator of
/// `target` dividing it (lex under the identity variable priority). Errors
/// when a generator has no divisor among the generators of `target`, i.e.
/// when `sub` is not contained in `target`.
pub fn divisor_map(sub: &MonomialIdeal, target: &MonomialIdeal) -> Result<Vec<usize>> {
    if sub.ambient() != target.ambient() {
        return Err(Error::AmbientMismatch(sub.ambient(), target.ambient()));
    }
    let priority: Vec<usize> = (0..sub.ambient()).collect();
    let gens = target.generators();
    sub.generators()
        .iter()
        .map(|u| {
            let mut best: Option<usize> = None;
            for (k, g) in gens.iter().enumerate() {
                if g.divides(u)
                    && best
                        .map_or(true, |b| lex_cmp_with_priority(g, &gens[b], &priority) == Ordering::Less)
                {
                    best = Some(k);
                }
            }
            best.ok_or(Error::NotContained("a generator of the source has no divisor in the target"))
        })
        .collect()
}

/// The seven-variable splitting instance over Terai's ideal, ready for
/// [`betti_splitting_check`] and [`tor_vanishing_lcm_check`].
#[derive(Clone, Debug)]
pub struct SplittingInstance {
    /// `J + (y_1) L` on seven variables.
    pub whole: MonomialIdeal,
    /// Terai's ideal `J`, embedded.
    pub left: MonomialIdeal,
    /// `(y_1) L`, the auxiliary variable times the squarefree Veronese.
    pub right: MonomialIdeal,
    /// `left ∩ right`, which equals `(y_1) J`.
    pub meet: MonomialIdeal,
    /// Divisor map `meet → left`, sending `y_1 v` to `v`.
    pub to_left: Vec<usize>,
    /// Divisor map `meet → right`, sending `y_1 v` to `y_1 v'` for the
    /// lex-least degree-2 divisor `v'` of `v`.
    pub to_right: Vec<usize>,
}

/// Build the seven-variable splitting of `J + (y_1) L` over Terai's ideal.
/// Both inclusion maps of the meet satisfy the lcm criterion, which
/// certifies the partition as a Betti splitting over every field.
pub fn terai_splitting_instance() -> Result<SplittingInstance> {
    let pieces = assemble(&terai_ideal(), FamilyParams { n: 7, d: 3 })?;
    let left = pieces.base;
    let right = pieces.veronese.multiply_monomial(&Monomial::var(7, 6))?;
    let whole = pieces.ideal;
    let meet = left.intersect(&right)?;
    let to_left = divisor_map(&meet, &left)?;
    let to_right = divisor_map(&meet, &right)?;
    Ok(SplittingInstance { whole, left, right, meet, to_left, to_right })
}
