//! Monomials in a polynomial ring `K[x_1, .., x_n]`.
//!
//! A [`Monomial`] stores its full exponent vector; the ambient variable
//! count is the vector length and every binary operation insists that the
//! ambients agree. Exponents are `u16`, which is far beyond anything the
//! desk-scale computations here produce; overflow is still checked.

use crate::error::Error;
use crate::Result;
use std::cmp::Ordering;
use std::fmt;

/// A monomial given by its exponent vector.
///
/// The degree-0 monomial (all exponents zero) represents `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    /// Monomial with the given exponent vector.
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (0-based index `i`) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial `x_F` from a support bitmask.
    pub fn from_support_mask(n: usize, mask: u64) -> Self {
        let exps = (0..n).map(|i| u16::from(mask >> i & 1 == 1)).collect();
        Monomial { exps }
    }

    /// Number of ambient variables.
    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of `x_{i+1}`.
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// The full exponent vector.
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    /// `true` when every exponent is at most 1.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `true` for the monomial `1`.
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Support as a bitmask (bit `i` set iff `x_{i+1}` occurs).
    ///
    /// Ambients are capped at 64 variables throughout the crate, which a
    /// desk-scale computation never approaches.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.exps.len(), other.exps.len()))
        }
    }

    /// `true` when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// `k`-th power.
    pub fn pow(&self, k: u16) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Greatest common divisor.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Ok(Monomial { exps })
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Ok(Monomial { exps })
    }

    /// Exact quotient `self / other`; errors unless `other` divides `self`.
    pub fn div_exact(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(Error::Internal("inexact monomial division")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Colon `self : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_sub(b)).collect();
        Ok(Monomial { exps })
    }

    /// Re-index the variables: `map[i]` is the new index of old variable `i`,
    /// `new_n` the new ambient. Every occurring variable must be mapped.
    pub fn map_variables(&self, new_n: usize, map: &[usize]) -> Result<Monomial> {
        let mut exps = vec![0u16; new_n];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let j = *map.get(i).ok_or(Error::BadVertex(i, map.len()))?;
                if j >= new_n {
                    return Err(Error::BadVertex(j, new_n));
                }
                exps[j] = exps[j].checked_add(e).ok_or(Error::ExponentOverflow)?;
            }
        }
        Ok(Monomial { exps })
    }
}

/// Canonical comparison: by total degree, then graded-lexicographically
/// (between monomials of equal degree the one with the larger exponent at
/// the first differing variable comes first).
///
/// This is the order in which every [`crate::ideal::MonomialIdeal`] stores
/// its generators.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.ambient(), b.ambient());
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // larger exponent at the first difference sorts first
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            }
        }
        Ordering::Equal
    })
}

/// Pure lexicographic comparison under a variable priority.
///
/// `priority[0]` is the most significant variable. Returns `Greater` when
/// `a` is lex-larger than `b`.
pub fn lex_cmp_with_priority(a: &Monomial, b: &Monomial, priority: &[usize]) -> Ordering {
    debug_assert_eq!(a.ambient(), b.ambient());
    for &v in priority {
        match a.exps[v].cmp(&b.exps[v]) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// All monomials of total degree `d` in `n` variables, in a deterministic
/// order (exponent vectors descending lexicographically).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fill_degree(&mut exps, 0, d, &mut out);
    out
}

fn fill_degree(exps: &mut [u16], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining as u16;
        out.push(Monomial::new(exps.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e as u16;
        fill_degree(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degree_and_support() {
        let u = m(&[2, 0, 1]);
        assert_eq!(u.degree(), 3);
        assert_eq!(u.support(), vec![0, 2]);
        assert_eq!(u.support_mask(), 0b101);
        assert!(!u.is_squarefree());
        assert!(m(&[1, 0, 1]).is_squarefree());
        assert!(Monomial::one(3).is_one());
    }

    #[test]
    fn arithmetic() {
        let u = m(&[2, 1, 0]);
        let v = m(&[1, 0, 3]);
        assert_eq!(u.mul(&v).unwrap(), m(&[3, 1, 3]));
        assert_eq!(u.gcd(&v).unwrap(), m(&[1, 0, 0]));
        assert_eq!(u.lcm(&v).unwrap(), m(&[2, 1, 3]));
        assert_eq!(u.colon(&v).unwrap(), m(&[1, 1, 0]));
        assert_eq!(v.colon(&u).unwrap(), m(&[0, 0, 3]));
        assert_eq!(u.pow(3).unwrap(), m(&[6, 3, 0]));
        assert!(m(&[1, 0, 0]).divides(&u));
        assert!(!m(&[0, 0, 1]).divides(&u));
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let err = m(&[1, 0]).mul(&m(&[1, 0, 0])).unwrap_err();
        assert_eq!(err, Error::AmbientMismatch(2, 3));
    }

    #[test]
    fn canonical_order_is_degree_then_graded_lex() {
        // degree 2 in two variables: x^2 < xy < y^2 in storage order
        let xx = m(&[2, 0]);
        let xy = m(&[1, 1]);
        let yy = m(&[0, 2]);
        assert_eq!(canonical_cmp(&xx, &xy), Ordering::Less);
        assert_eq!(canonical_cmp(&xy, &yy), Ordering::Less);
        // lower degree always first
        assert_eq!(canonical_cmp(&m(&[0, 1]), &xx), Ordering::Less);
        assert_eq!(canonical_cmp(&xy, &xy), Ordering::Equal);
    }

    #[test]
    fn lex_priority_reorders_comparisons() {
        let u = m(&[1, 0, 0]);
        let v = m(&[0, 0, 1]);
        assert_eq!(lex_cmp_with_priority(&u, &v, &[0, 1, 2]), Ordering::Greater);
        assert_eq!(lex_cmp_with_priority(&u, &v, &[2, 1, 0]), Ordering::Less);
    }

    #[test]
    fn display_round_trip_shapes() {
        assert_eq!(m(&[1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::one(4).to_string(), "1");
    }

    #[test]
    fn variable_maps_reindex() {
        let u = m(&[0, 2, 1]);
        let mapped = u.map_variables(2, &[0, 0, 1]).unwrap();
        assert_eq!(mapped, m(&[2, 1]));
    }
}
