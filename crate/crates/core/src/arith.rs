//! Integer square roots without floating point.

/// Largest `s` with `s * s <= n`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Newton iteration from an upper bound; monotonically decreasing.
    let mut x = 1u64 << ((64 - n.leading_zeros()).div_ceil(2));
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Smallest `s` with `s * s >= n`.
pub fn ceil_sqrt(n: u64) -> u64 {
    let s = isqrt(n);
    if s * s == n {
        s
    } else {
        s + 1
    }
}

pub fn is_perfect_square(n: u64) -> bool {
    let s = isqrt(n);
    s * s == n
}
