//! Words in a free group on generators `a_1 .. a_m`, stored as signed
//! 1-based indices (`-j` is `a_j^-1`).

pub type FreeWord = Vec<i32>;

/// Appends `letter` to a freely reduced word, cancelling if possible.
#[inline]
pub fn push_reduced(out: &mut FreeWord, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

pub fn reduce(w: &[i32]) -> FreeWord {
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        push_reduced(&mut out, l);
    }
    out
}

pub fn inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|l| -l).collect()
}

/// Product of freely reduced words, reduced.
pub fn mul(parts: &[&[i32]]) -> FreeWord {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        for &l in *p {
            push_reduced(&mut out, l);
        }
    }
    out
}

/// Replaces each letter `a_j^{±1}` by `images[j-1]^{±1}` and reduces.
pub fn substitute(w: &[i32], images: &[FreeWord]) -> FreeWord {
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            for &m in img {
                push_reduced(&mut out, m);
            }
        } else {
            for &m in img.iter().rev() {
                push_reduced(&mut out, -m);
            }
        }
    }
    out
}

/// Splits a reduced word as `u · r · u^-1` with `r` cyclically reduced.
pub fn cyclic_split(w: &[i32]) -> (FreeWord, FreeWord) {
    let mut lo = 0;
    let mut hi = w.len();
    while hi >= lo + 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    (w[..lo].to_vec(), w[lo..hi].to_vec())
}

/// Index of the lexicographically least rotation of `r` (first one on ties).
pub fn least_rotation(r: &[i32]) -> usize {
    let n = r.len();
    let mut best = 0;
    for s in 1..n {
        let better = (0..n)
            .map(|k| r[(s + k) % n].cmp(&r[(best + k) % n]))
            .find(|o| o.is_ne())
            .map(|o| o.is_lt())
            .unwrap_or(false);
        if better {
            best = s;
        }
    }
    best
}

/// Shortest `p` with `r = p^k` for some `k >= 1`.
pub fn primitive_root(r: &[i32]) -> FreeWord {
    let n = r.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|k| r[k] == r[k - d]) {
            return r[..d].to_vec();
        }
    }
    r.to_vec()
}

/// `p^k` for any integer `k`.
pub fn power(p: &[i32], k: i64) -> FreeWord {
    let base = if k >= 0 { p.to_vec() } else { inverse(p) };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        for &l in &base {
            push_reduced(&mut out, l);
        }
    }
    out
}
