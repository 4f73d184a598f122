//! Exact rank computation over `Q` and `F_p`.
//!
//! Boundary and Koszul matrices here are sparse with entries `±1`, so the
//! characteristic-0 path runs a sparse integer elimination that only ever
//! pivots on `±1` entries (row updates stay integral, no division needed)
//! and hands any residual block without unit entries to a dense
//! fraction-free (Bareiss) elimination over big integers. Both steps are
//! exact. `F_2` uses dense bit-matrix elimination; odd primes use dense
//! modular elimination.

use crate::field::FieldSpec;
use num_bigint::BigInt;

/// A sparse matrix entry `(row, col, value)`.
pub type Entry = (usize, usize, i64);

/// Rank of the `rows x cols` matrix with the given sparse entries over the
/// field. Duplicate coordinates are summed.
pub fn rank(field: FieldSpec, rows: usize, cols: usize, entries: &[Entry]) -> usize {
    if rows == 0 || cols == 0 || entries.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => rank_q_sparse(rows, cols, entries),
        FieldSpec::Prime(2) => rank_f2_dense(rows, cols, entries),
        FieldSpec::Prime(p) => rank_fp_dense(rows, cols, entries, u64::from(p)),
    }
}

fn rank_f2_dense(rows: usize, cols: usize, entries: &[Entry]) -> usize {
    let words = cols.div_ceil(64);
    let mut m = vec![0u64; rows * words];
    for &(r, c, v) in entries {
        if v.rem_euclid(2) == 1 {
            m[r * words + c / 64] ^= 1 << (c % 64);
        }
    }
    let mut rank = 0;
    let mut pivot_row = 0;
    for c in 0..cols {
        let word = c / 64;
        let bit = 1u64 << (c % 64);
        let Some(found) =
            (pivot_row..rows).find(|&r| m[r * words + word] & bit != 0)
        else {
            continue;
        };
        if found != pivot_row {
            for w in 0..words {
                m.swap(found * words + w, pivot_row * words + w);
            }
        }
        for r in 0..rows {
            if r != pivot_row && m[r * words + word] & bit != 0 {
                for w in word..words {
                    m[r * words + w] ^= m[pivot_row * words + w];
                }
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

fn rank_fp_dense(rows: usize, cols: usize, entries: &[Entry], p: u64) -> usize {
    let mut m = vec![0u64; rows * cols];
    for &(r, c, v) in entries {
        let val = (i128::from(v)).rem_euclid(i128::from(p)) as u64;
        m[r * cols + c] = (m[r * cols + c] + val) % p;
    }
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime and a != 0 mod p
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    let mut pivot_row = 0;
    for c in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if found != pivot_row {
            for j in 0..cols {
                m.swap(found * cols + j, pivot_row * cols + j);
            }
        }
        let pv = inv(m[pivot_row * cols + c]);
        for r in 0..rows {
            if r == pivot_row || m[r * cols + c] == 0 {
                continue;
            }
            let factor = m[r * cols + c] * pv % p;
            for j in c..cols {
                let sub = factor * m[pivot_row * cols + j] % p;
                m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sparse elimination over the integers, pivoting only on `±1` entries.
/// Residual entries (no unit pivot left) go to dense Bareiss over `BigInt`.
fn rank_q_sparse(nrows: usize, ncols: usize, entries: &[Entry]) -> usize {
    // row-major sparse build, merging duplicates
    let mut rows: Vec<Vec<(usize, i128)>> = vec![Vec::new(); nrows];
    for &(r, c, v) in entries {
        rows[r].push((c, i128::from(v)));
    }
    let mut col_nnz = vec![0usize; ncols];
    for row in &mut rows {
        row.sort_unstable_by_key(|&(c, _)| c);
        let mut merged: Vec<(usize, i128)> = Vec::with_capacity(row.len());
        for &(c, v) in row.iter() {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|&(_, v)| v != 0);
        for &(c, _) in &merged {
            col_nnz[c] += 1;
        }
        *row = merged;
    }

    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    let mut col_dead = vec![false; ncols];
    let mut rank = 0usize;
    let mut scratch: Vec<(usize, i128)> = Vec::new();

    loop {
        // Markowitz-style pivot choice among +-1 entries
        let mut best: Option<(usize, usize, usize, i128)> = None; // cost, row, col, val
        for (r, row) in rows.iter().enumerate() {
            if !active[r] {
                continue;
            }
            for &(c, v) in row {
                if v == 1 || v == -1 {
                    let cost = (row.len() - 1) * (col_nnz[c] - 1);
                    let cand = (cost, r, c, v);
                    if best.map_or(true, |b| (cand.0, cand.1, cand.2) < (b.0, b.1, b.2)) {
                        best = Some(cand);
                    }
                }
            }
        }
        let Some((_, pr, pc, pv)) = best else { break };

        let pivot_row = std::mem::take(&mut rows[pr]);
        active[pr] = false;
        for &(c, _) in &pivot_row {
            col_nnz[c] -= 1;
        }
        col_dead[pc] = true;
        rank += 1;

        for r in 0..nrows {
            if !active[r] {
                continue;
            }
            let Ok(pos) = rows[r].binary_search_by_key(&pc, |&(c, _)| c) else {
                continue;
            };
            let a = rows[r][pos].1;
            // row_r -= a * pv * pivot_row   (pv in {1, -1}, so this clears col pc)
            let factor = a * pv;
            scratch.clear();
            let (mut i, mut j) = (0usize, 0usize);
            let row = &rows[r];
            while i < row.len() || j < pivot_row.len() {
                let next = match (row.get(i), pivot_row.get(j)) {
                    (Some(&(ca, va)), Some(&(cb, vb))) => {
                        if ca == cb {
                            i += 1;
                            j += 1;
                            (ca, va - factor * vb)
                        } else if ca < cb {
                            i += 1;
                            (ca, va)
                        } else {
                            j += 1;
                            (cb, -factor * vb)
                        }
                    }
                    (Some(&(ca, va)), None) => {
                        i += 1;
                        (ca, va)
                    }
                    (None, Some(&(cb, vb))) => {
                        j += 1;
                        (cb, -factor * vb)
                    }
                    (None, None) => break,
                };
                if next.1 != 0 && next.0 != pc {
                    scratch.push(next);
                }
            }
            // keep magnitudes in check: divide the row by the gcd of its entries
            if scratch.iter().any(|&(_, v)| v.abs() > 1 << 32) {
                let g = scratch.iter().fold(0i128, |g, &(_, v)| gcd_i128(g, v));
                if g > 1 {
                    for e in &mut scratch {
                        e.1 /= g;
                    }
                }
            }
            for &(c, _) in rows[r].iter() {
                col_nnz[c] -= 1;
            }
            for &(c, _) in scratch.iter() {
                col_nnz[c] += 1;
            }
            std::mem::swap(&mut rows[r], &mut scratch);
            if rows[r].is_empty() {
                active[r] = false;
            }
        }
    }

    // residual block: no +-1 entries left
    let mut residual_rows: Vec<&Vec<(usize, i128)>> =
        rows.iter().enumerate().filter(|(r, _)| active[*r]).map(|(_, row)| row).collect();
    residual_rows.retain(|row| !row.is_empty());
    if residual_rows.is_empty() {
        return rank;
    }
    let mut live_cols: Vec<usize> = residual_rows
        .iter()
        .flat_map(|row| row.iter().map(|&(c, _)| c))
        .filter(|&c| !col_dead[c])
        .collect();
    live_cols.sort_unstable();
    live_cols.dedup();
    let col_index: std::collections::HashMap<usize, usize> =
        live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> =
        vec![vec![BigInt::from(0); live_cols.len()]; residual_rows.len()];
    for (r, row) in residual_rows.iter().enumerate() {
        for &(c, v) in row.iter() {
            if let Some(&j) = col_index.get(&c) {
                dense[r][j] = BigInt::from(v);
            }
        }
    }
    rank + bareiss_rank(dense)
}

/// Fraction-free dense elimination; exact over the integers.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let zero = BigInt::from(0);
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut r0 = 0;
    let mut c0 = 0;
    while r0 < rows && c0 < cols {
        // full pivot search in the remaining block
        let mut pivot = None;
        'search: for r in r0..rows {
            for c in c0..cols {
                if m[r][c] != zero {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(r0, pr);
        if pc != c0 {
            for row in &mut m {
                row.swap(c0, pc);
            }
        }
        for r in r0 + 1..rows {
            for c in c0 + 1..cols {
                let num = &m[r0][c0] * &m[r][c] - &m[r][c0] * &m[r0][c];
                m[r][c] = num / &prev; // exact by the Bareiss identity
            }
            m[r][c0] = zero.clone();
        }
        prev = m[r0][c0].clone();
        rank += 1;
        r0 += 1;
        c0 += 1;
    }
    rank
}
