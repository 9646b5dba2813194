//! Number-theoretic codings: Cantor pairing, canonical finite sets `D_u`,
//! the join `A ⊕ B`, and sequence codes.

use crate::set::ElementSet;
use alloc::vec::Vec;

/// Cantor pairing `⟨x, y⟩ = (x + y)(x + y + 1)/2 + y`; `None` on overflow.
pub fn pair(x: u64, y: u64) -> Option<u64> {
    let s = x.checked_add(y)?;
    let t = if s % 2 == 0 {
        (s / 2).checked_mul(s.checked_add(1)?)?
    } else {
        s.checked_mul((s + 1) / 2)?
    };
    t.checked_add(y)
}

/// Inverse of [`pair`].
pub fn unpair(z: u64) -> (u64, u64) {
    // w = floor((sqrt(8z + 1) - 1) / 2)
    let w = (((8 * z as u128 + 1).isqrt() - 1) / 2) as u64;
    let y = z - tri(w).expect("triangular number below z");
    (w - y, y)
}

fn tri(w: u64) -> Option<u64> {
    let (a, b) = if w % 2 == 0 { (w / 2, w + 1) } else { (w, (w + 1) / 2) };
    a.checked_mul(b)
}

/// `D_u`: the set of bit positions of `u`.
pub fn finite_set_decode(u: u64) -> ElementSet {
    (0..64).filter(|b| u >> b & 1 == 1).collect()
}

/// Inverse of [`finite_set_decode`]; `None` when an element is ≥ 64.
pub fn finite_set_code(set: &ElementSet) -> Option<u64> {
    set.iter().try_fold(0u64, |acc, x| (x < 64).then(|| acc | 1 << x))
}

/// `A ⊕ B = {2x : x ∈ A} ∪ {2y + 1 : y ∈ B}`.
pub fn join(a: &ElementSet, b: &ElementSet) -> ElementSet {
    a.iter()
        .map(|x| 2 * x)
        .chain(b.iter().map(|y| 2 * y + 1))
        .collect()
}

/// Splits a joined set back into its even and odd halves.
pub fn unjoin(s: &ElementSet) -> (ElementSet, ElementSet) {
    let even = s.iter().filter(|x| x % 2 == 0).map(|x| x / 2).collect();
    let odd = s.iter().filter(|x| x % 2 == 1).map(|x| x / 2).collect();
    (even, odd)
}

/// Countable join of columns, coded as `{⟨i, x⟩ : x ∈ A_i}`.
pub fn column_join(columns: &[ElementSet]) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        for x in col {
            out.push(pair(i as u64, x as u64)?);
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Length-prefixed sequence code `⟨|σ|, σ(0), ⟨σ(1), ⟨…⟩⟩⟩` by folding
/// [`pair`] from the right; injective on `ℕ*`. `None` on overflow.
pub fn sequence_code(seq: &[u64]) -> Option<u64> {
    let body = match seq.split_last() {
        None => 0,
        Some((&last, init)) => init.iter().rev().try_fold(last, |acc, &x| pair(x, acc))?,
    };
    pair(seq.len() as u64, body)
}

/// Inverse of [`sequence_code`].
pub fn sequence_decode(code: u64) -> Vec<u64> {
    let (len, mut body) = unpair(code);
    let mut out = Vec::with_capacity(len as usize);
    for k in 0..len {
        if k + 1 == len {
            out.push(body);
        } else {
            let (x, rest) = unpair(body);
            out.push(x);
            body = rest;
        }
    }
    out
}

/// `σ[S]`: the subsequence of `σ` at the positions in `S`, read in increasing
/// order. Positions must be `< |σ|`; `None` otherwise.
pub fn sigma_select<T: Copy>(sigma: &[T], positions: &ElementSet) -> Option<Vec<T>> {
    positions.iter().map(|p| sigma.get(p as usize).copied()).collect()
}
