//! Small exact integer helpers. No floating point: irrational comparisons
//! elsewhere are phrased as squared or fourth-power integer inequalities.

/// Greatest common divisor; `gcd(0, b) = b`.
pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_u32(a: u32, b: u32) -> u32 {
    gcd(a as u64, b as u64) as u32
}

/// Floor of the integer square root.
pub(crate) fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    // Newton iteration from a power-of-two seed; converges in a few steps.
    let mut r = 1u128 << (x.ilog2() / 2 + 1);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    r
}

/// Smallest integer `r` with `r*r >= x`.
pub(crate) fn ceil_sqrt(x: u128) -> u128 {
    let r = isqrt(x);
    if r * r >= x {
        r
    } else {
        r + 1
    }
}

/// Smallest integer `r` with `r^4 >= x`.
pub(crate) fn ceil_root4(x: u128) -> u128 {
    let r = isqrt(isqrt(x));
    if r.pow(4) >= x {
        r
    } else {
        r + 1
    }
}

/// Positive divisors of `n` in ascending order.
pub(crate) fn divisors_of(n: u32) -> alloc::vec::Vec<u32> {
    assert!(n >= 1);
    let mut small = alloc::vec::Vec::new();
    let mut large = alloc::vec::Vec::new();
    let mut d = 1u32;
    while u64::from(d) * u64::from(d) <= u64::from(n) {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
