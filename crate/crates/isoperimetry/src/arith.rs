//! Exact integer square roots and small combinatorial helpers.
//!
//! All verified computations reduce inequalities between square roots to
//! integer comparisons, so the floor/ceiling square roots here must be exact
//! at perfect-square boundaries. Newton iteration on integers only.

/// `⌊√n⌋` by integer Newton iteration (no floating point).
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // Seed with a power of two >= sqrt(n); the iteration then decreases
    // monotonically to the floor square root.
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// `⌈√n⌉`.
pub fn ceil_sqrt(n: u128) -> u128 {
    let r = isqrt(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

pub fn is_perfect_square(n: u128) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// `C(x, 2) = x(x-1)/2` for `x >= 0`.
pub fn binom2(x: i64) -> i64 {
    debug_assert!(x >= 0, "binom2 takes a nonnegative argument, got {x}");
    x * (x - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_exhaustive_small() {
        for n in 0u128..100_000 {
            let r = isqrt(n);
            assert!(r * r <= n);
            assert!((r + 1) * (r + 1) > n);
        }
    }

    #[test]
    fn isqrt_perfect_square_boundaries() {
        for r in [1u128, 2, 3, 63, 64, 1 << 20, (1 << 40) - 1, 987_654_321] {
            assert_eq!(isqrt(r * r), r);
            assert_eq!(isqrt(r * r - 1), r - 1);
            assert_eq!(isqrt(r * r + 1), r);
            assert_eq!(ceil_sqrt(r * r), r);
            assert_eq!(ceil_sqrt(r * r + 1), r + 1);
            assert!(is_perfect_square(r * r));
            assert!(!is_perfect_square(r * r + 1));
        }
    }

    #[test]
    fn binom2_small() {
        assert_eq!(binom2(0), 0);
        assert_eq!(binom2(1), 0);
        assert_eq!(binom2(2), 1);
        assert_eq!(binom2(7), 21);
    }
}
