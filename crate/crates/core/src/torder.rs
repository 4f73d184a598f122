//! Monomial orders on the Rees presentation ring
//! `T = K[x_1..x_n, y_1..y_m]`, and their dominance classification.
//!
//! Monomials of `T` are stored as an x-part and a y-part ([`TMonomial`]).
//! [`OrderSpec`] describes graded lex, pure lex, graded reverse lex, and
//! block product orders, each with either variable block leading. An order
//! is *x-dominant* when, for bidegree-matched pairs (`deg u = deg u'`,
//! `deg v = deg v'` with `u, u'` x-monomials and `v, v'` y-monomials),
//! `u ≠ u'` implies `uv > u'v' ⟺ u > u'`; *y-dominant* is the mirror
//! notion. The classification of each order family is structural and is
//! cross-checked by sampled biconditional tests.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::Result;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A monomial of `T`, split into its x-part (`n` variables) and y-part
/// (`m` variables).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TMonomial {
    pub x: Monomial,
    pub y: Monomial,
}

impl TMonomial {
    pub fn new(x: Monomial, y: Monomial) -> Self {
        TMonomial { x, y }
    }

    pub fn one(n: usize, m: usize) -> Self {
        TMonomial { x: Monomial::one(n), y: Monomial::one(m) }
    }

    /// Number of x-variables.
    pub fn xvars(&self) -> usize {
        self.x.ambient()
    }

    /// Number of y-variables.
    pub fn yvars(&self) -> usize {
        self.y.ambient()
    }

    pub fn xdeg(&self) -> u32 {
        self.x.degree()
    }

    pub fn ydeg(&self) -> u32 {
        self.y.degree()
    }

    /// Total degree in `T` (every variable has weight 1).
    pub fn degree(&self) -> u32 {
        self.xdeg() + self.ydeg()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_one()
    }

    pub fn mul(&self, other: &TMonomial) -> Result<TMonomial> {
        Ok(TMonomial { x: self.x.mul(&other.x)?, y: self.y.mul(&other.y)? })
    }

    pub fn divides(&self, other: &TMonomial) -> bool {
        self.x.divides(&other.x) && self.y.divides(&other.y)
    }

    pub fn div_exact(&self, other: &TMonomial) -> Result<TMonomial> {
        Ok(TMonomial { x: self.x.div_exact(&other.x)?, y: self.y.div_exact(&other.y)? })
    }

    pub fn lcm(&self, other: &TMonomial) -> Result<TMonomial> {
        Ok(TMonomial { x: self.x.lcm(&other.x)?, y: self.y.lcm(&other.y)? })
    }

    pub fn gcd(&self, other: &TMonomial) -> Result<TMonomial> {
        Ok(TMonomial { x: self.x.gcd(&other.x)?, y: self.y.gcd(&other.y)? })
    }
}

impl fmt::Display for TMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.x.exps().iter().enumerate() {
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
        for (j, &e) in self.y.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "y{}", j + 1)?;
            } else {
                write!(f, "y{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Order family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    /// Total degree first, then lexicographic tie-break.
    Lex,
    /// Lexicographic with no degree comparison.
    PureLex,
    /// Total degree first, then reverse-lexicographic tie-break.
    RevLex,
    /// Compare the leading block by pure lex, then the other block.
    Product,
}

/// Which variable block leads the priority list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Block {
    XFirst,
    YFirst,
}

/// A total monomial order on `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSpec {
    pub kind: OrderKind,
    pub block: Block,
    /// Most significant x-variable first.
    pub x_priority: Vec<usize>,
    /// Most significant y-variable first.
    pub y_priority: Vec<usize>,
}

impl OrderSpec {
    /// Order with index priorities `x_1 > x_2 > …` and `y_1 > y_2 > …`.
    pub fn standard(kind: OrderKind, block: Block, n: usize, m: usize) -> Self {
        OrderSpec {
            kind,
            block,
            x_priority: (0..n).collect(),
            y_priority: (0..m).collect(),
        }
    }

    /// The graded lex order induced by `x_1 > ⋯ > x_n > y_1 > ⋯ > y_m`.
    pub fn xfirst_lex(n: usize, m: usize) -> Self {
        OrderSpec::standard(OrderKind::Lex, Block::XFirst, n, m)
    }

    /// Replace the x-priority (most significant variable first).
    pub fn with_x_priority(mut self, priority: Vec<usize>) -> Self {
        self.x_priority = priority;
        self
    }

    /// Parse `kind-block` (e.g. `lex-x`, `purelex-y`, `revlex-y`,
    /// `product-x`); the suffix names the leading block.
    pub fn parse(s: &str, n: usize, m: usize) -> Result<Self> {
        let (kind_s, block_s) = s
            .rsplit_once('-')
            .ok_or(Error::Unsupported("order spec must look like `lex-x` or `revlex-y`"))?;
        let kind = match kind_s {
            "lex" => OrderKind::Lex,
            "purelex" => OrderKind::PureLex,
            "revlex" => OrderKind::RevLex,
            "product" => OrderKind::Product,
            _ => {
                return Err(Error::Unsupported(
                    "unknown order kind (expected lex, purelex, revlex, or product)",
                ))
            }
        };
        let block = match block_s {
            "x" => Block::XFirst,
            "y" => Block::YFirst,
            _ => return Err(Error::Unsupported("order block must be `x` or `y`")),
        };
        Ok(OrderSpec::standard(kind, block, n, m))
    }

    /// Short text form matching [`OrderSpec::parse`].
    pub fn name(&self) -> String {
        let kind = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::PureLex => "purelex",
            OrderKind::RevLex => "revlex",
            OrderKind::Product => "product",
        };
        let block = match self.block {
            Block::XFirst => "x",
            Block::YFirst => "y",
        };
        format!("{kind}-{block}")
    }

    /// Check the priorities against an explicit ambient `(n, m)`.
    pub fn validate(&self, n: usize, m: usize) -> Result<()> {
        if self.x_priority.len() != n || self.y_priority.len() != m {
            return Err(Error::AmbientMismatch(
                self.x_priority.len() + self.y_priority.len(),
                n + m,
            ));
        }
        if !is_permutation(&self.x_priority) {
            return Err(Error::BadVariablePriority(n));
        }
        if !is_permutation(&self.y_priority) {
            return Err(Error::BadVariablePriority(m));
        }
        Ok(())
    }

    fn check_ambient(&self, a: &TMonomial, b: &TMonomial) -> Result<()> {
        if a.xvars() != b.xvars() || a.yvars() != b.yvars() {
            return Err(Error::AmbientMismatch(a.xvars() + a.yvars(), b.xvars() + b.yvars()));
        }
        if self.x_priority.len() != a.xvars() {
            return Err(Error::BadVariablePriority(a.xvars()));
        }
        if self.y_priority.len() != a.yvars() {
            return Err(Error::BadVariablePriority(a.yvars()));
        }
        Ok(())
    }

    /// Exponent of `t` in the concatenated priority list: positions
    /// `0..n` are x-variables, `n..n+m` y-variables, most significant
    /// first according to the block order.
    fn exp_at(&self, mono: &TMonomial, slot: usize) -> u16 {
        let (first, second, split) = match self.block {
            Block::XFirst => (&self.x_priority, &self.y_priority, self.x_priority.len()),
            Block::YFirst => (&self.y_priority, &self.x_priority, self.y_priority.len()),
        };
        let (list_is_x, var) = if slot < split {
            (matches!(self.block, Block::XFirst), first[slot])
        } else {
            (matches!(self.block, Block::YFirst), second[slot - split])
        };
        if list_is_x {
            mono.x.exp(var)
        } else {
            mono.y.exp(var)
        }
    }

    fn lex_tiebreak(&self, a: &TMonomial, b: &TMonomial) -> Ordering {
        let total = self.x_priority.len() + self.y_priority.len();
        for slot in 0..total {
            match self.exp_at(a, slot).cmp(&self.exp_at(b, slot)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    fn revlex_tiebreak(&self, a: &TMonomial, b: &TMonomial) -> Ordering {
        let total = self.x_priority.len() + self.y_priority.len();
        for slot in (0..total).rev() {
            match self.exp_at(a, slot).cmp(&self.exp_at(b, slot)) {
                Ordering::Equal => continue,
                // smaller exponent at the least significant difference wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    fn block_lex(&self, a: &Monomial, b: &Monomial, priority: &[usize]) -> Ordering {
        for &v in priority {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Total order comparison: `Greater` means `a` is the larger monomial.
    pub fn compare(&self, a: &TMonomial, b: &TMonomial) -> Result<Ordering> {
        self.check_ambient(a, b)?;
        Ok(match self.kind {
            OrderKind::Lex => a.degree().cmp(&b.degree()).then_with(|| self.lex_tiebreak(a, b)),
            OrderKind::PureLex => self.lex_tiebreak(a, b),
            OrderKind::RevLex => {
                a.degree().cmp(&b.degree()).then_with(|| self.revlex_tiebreak(a, b))
            }
            OrderKind::Product => match self.block {
                Block::XFirst => self
                    .block_lex(&a.x, &b.x, &self.x_priority)
                    .then_with(|| self.block_lex(&a.y, &b.y, &self.y_priority)),
                Block::YFirst => self
                    .block_lex(&a.y, &b.y, &self.y_priority)
                    .then_with(|| self.block_lex(&a.x, &b.x, &self.x_priority)),
            },
        })
    }

    /// Structural dominance classification `(x_dominant, y_dominant)` for
    /// ambient sizes `(n, m)`. With `n ≤ 1` there are no two distinct
    /// equal-degree x-monomials, so every order is vacuously x-dominant;
    /// likewise `m ≤ 1` for y-dominance.
    pub fn structural_dominance(&self, n: usize, m: usize) -> (bool, bool) {
        let leading_decides_x = match self.kind {
            // under graded revlex the trailing block is dominant
            OrderKind::RevLex => matches!(self.block, Block::YFirst),
            _ => matches!(self.block, Block::XFirst),
        };
        let x_dom = n <= 1 || leading_decides_x;
        let y_dom = m <= 1 || !leading_decides_x;
        (x_dom, y_dom)
    }
}

/// Sampled dominance check: draws bidegree-matched pairs
/// `(u v, u' v')` and tests both defining biconditionals, returning
/// `(x_dominant, y_dominant)` as observed. Exhausts small bidegrees first
/// and then draws `samples` pseudorandom pairs from `seed`.
pub fn dominance_class(
    ord: &OrderSpec,
    n: usize,
    m: usize,
    samples: u64,
    seed: u64,
) -> Result<(bool, bool)> {
    let mut x_dom = true;
    let mut y_dom = true;
    let mut check = |ux: &Monomial, vx: &Monomial, uy: &Monomial, vy: &Monomial| -> Result<()> {
        let a = TMonomial::new(ux.clone(), uy.clone());
        let b = TMonomial::new(vx.clone(), vy.clone());
        let whole = ord.compare(&a, &b)?;
        if ux != vx {
            let xonly = ord.compare(
                &TMonomial::new(ux.clone(), Monomial::one(m)),
                &TMonomial::new(vx.clone(), Monomial::one(m)),
            )?;
            if whole != xonly {
                x_dom = false;
            }
        }
        if uy != vy {
            let yonly = ord.compare(
                &TMonomial::new(Monomial::one(n), uy.clone()),
                &TMonomial::new(Monomial::one(n), vy.clone()),
            )?;
            if whole != yonly {
                y_dom = false;
            }
        }
        Ok(())
    };

    // exhaustive sweep over tiny bidegrees
    let xd_cap = if n <= 2 { 3 } else { 2 };
    let yd_cap = if m <= 2 { 3 } else { 2 };
    for xd in 0..=xd_cap {
        for yd in 0..=yd_cap {
            let xs = crate::monomial::monomials_of_degree(n, xd);
            let ys = crate::monomial::monomials_of_degree(m, yd);
            if xs.len() * ys.len() > 60 {
                continue;
            }
            for ux in &xs {
                for vx in &xs {
                    for uy in &ys {
                        for vy in &ys {
                            check(ux, vx, uy, vy)?;
                        }
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let xd = rng.gen_range(0..=4u32);
        let yd = rng.gen_range(0..=4u32);
        let ux = random_monomial(&mut rng, n, xd);
        let vx = random_monomial(&mut rng, n, xd);
        let uy = random_monomial(&mut rng, m, yd);
        let vy = random_monomial(&mut rng, m, yd);
        check(&ux, &vx, &uy, &vy)?;
    }
    Ok((x_dom, y_dom))
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v >= p.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Uniformly drop `d` unit exponents onto `n` variables.
fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    if n == 0 {
        return Monomial::one(0);
    }
    let mut exps = vec![0u16; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}
