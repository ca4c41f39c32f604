//! Finite-difference and partial-sum calculus on integer sequences.
//!
//! Sequences are indexed from 0 and extended by zero to negative indices,
//! so `difference` at index 0 is just `f(0)`.

use crate::error::Error;

/// Backward difference `(∂f)(n) = f(n) - f(n-1)` with `f(-1) = 0`.
pub fn difference(f: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(f.len());
    let mut prev = 0i64;
    for &v in f {
        out.push(v.checked_sub(prev).expect("difference overflow"));
        prev = v;
    }
    out
}

/// `k`-fold backward difference, same length as the input.
pub fn nth_difference(f: &[i64], k: usize) -> Vec<i64> {
    let mut cur = f.to_vec();
    for _ in 0..k {
        cur = difference(&cur);
    }
    cur
}

/// Partial sums `(Sf)(n) = sum_{k<=n} f(k)`, extended to `len` entries.
///
/// Entries of `f` beyond its length count as zero, so the output is
/// constant past the support of `f`.
pub fn partial_sums(f: &[i64], len: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(len);
    let mut acc = 0i64;
    for n in 0..len {
        if n < f.len() {
            acc = acc.checked_add(f[n]).expect("partial sum overflow");
        }
        out.push(acc);
    }
    out
}

/// `k`-fold partial sums extended to `len` entries.
pub fn nth_partial_sums(f: &[i64], k: usize, len: usize) -> Vec<i64> {
    if k == 0 {
        let mut out = f.to_vec();
        out.resize(len, 0);
        return out;
    }
    let mut cur = partial_sums(f, len);
    for _ in 1..k {
        cur = partial_sums(&cur, len);
    }
    cur
}

/// Binomial coefficient `C(n, k)`, zero when `n < k` (including negative `n`).
pub fn binomial(n: i64, k: u32) -> Result<i64, Error> {
    if n < k as i64 {
        return Ok(0);
    }
    let mut num: i64 = 1;
    for i in 0..k as i64 {
        num = num.checked_mul(n - i).ok_or(Error::Overflow)?;
    }
    let mut den: i64 = 1;
    for i in 1..=k as i64 {
        den *= i;
    }
    Ok(num / den)
}

/// Dimension of degree-`n` forms on `P^N`: `C(n + N, N)`.
pub fn ambient_dim(n: i64, big_n: u32) -> Result<i64, Error> {
    binomial(n + big_n as i64, big_n)
}
