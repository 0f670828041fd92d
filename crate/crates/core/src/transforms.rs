//! The structural maps between counting classes and the divisor-sum
//! identities relating the two counting sequences.
//!
//! `phi` sends a semigroup with maximum primitive `n` to one with Frobenius
//! number `n` by deleting `n` and filling everything above it; its image is
//! exactly the Frobenius-`n` class with unit extended-left gcd, and `delta`
//! rescales the class with extended-left gcd `d` down to Frobenius `f/d`.
//! Chaining the two bijections per divisor gives `N_n = Σ_{d|n} A_{n/d}`, and
//! Möbius inversion recovers `A_n` from the `N` sequence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::divisors_of;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::{closure_of, NumericalSemigroup};

/// Delete the maximum primitive `n` and fill `(n, ∞)`. The result has
/// Frobenius number exactly `n`, unit extended-left gcd, and (for `n >= 3`)
/// the same multiplicity; for the full semigroup it gives `<2,3>`.
pub fn phi(s: &NumericalSemigroup) -> NumericalSemigroup {
    let n = s.max_primitive();
    let mut low = Bits::zeros(n as usize + 1);
    for x in 0..n {
        if s.contains(i64::from(x)) {
            low.set(x as usize);
        }
    }
    NumericalSemigroup::from_parts(n, &low)
}

/// Inverse of [`phi`]: close the extended left elements of a Frobenius-`n`
/// semigroup with unit extended-left gcd. Rejects inputs outside the image
/// (non-unit gcd, e.g. the ordinary semigroup `O_{n+1}`).
pub fn phi_inverse(t: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if t.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    let g = t.gcd_extended_left()?;
    if g != 1 {
        return Err(Error::NotInImage { gcd_ext_left: g });
    }
    let ext = t.extended_left_elements()?;
    let gens: Vec<u32> = ext.into_iter().filter(|&x| x > 0).collect();
    let s = closure_of(&gens, None)?;
    debug_assert_eq!(u64::from(s.max_primitive()), t.frobenius() as u64);
    Ok(s)
}

/// Rescale a semigroup with extended-left gcd `d` to the unit-gcd class at
/// Frobenius `F/d`: `S ↦ S/d`, which here is just `L(S)/d ∪ (F/d, ∞)`.
pub fn delta(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    let d = s.gcd_extended_left()?;
    let r = s.quotient(d);
    debug_assert_eq!(r.frobenius() * i64::from(d), s.frobenius());
    Ok(r)
}

/// Inverse of [`delta`]: scale the left elements of a unit-gcd semigroup `r`
/// by `d` and fill above `f = d * F(r)`. `f` is passed explicitly and checked
/// so that mismatched table bookkeeping fails loudly.
pub fn delta_inverse(r: &NumericalSemigroup, d: u32, f: i64) -> Result<NumericalSemigroup> {
    if r.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    if d < 1 || r.frobenius() * i64::from(d) != f {
        return Err(Error::DivisorMismatch { d, frobenius: r.frobenius() });
    }
    let g = r.gcd_extended_left()?;
    if g != 1 {
        return Err(Error::DivisorMismatch { d, frobenius: r.frobenius() });
    }
    let mut low = Bits::zeros(f as usize + 1);
    for x in r.left_elements() {
        low.set(x as usize * d as usize);
    }
    Ok(NumericalSemigroup::from_parts(f as u32, &low))
}

/// Divisors of `n` together with the Möbius values `μ(n/d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u32,
    /// Ascending positive divisors.
    pub divisors: Vec<u32>,
    /// `mobius_values[i] = μ(n / divisors[i])`.
    pub mobius_values: Vec<i32>,
}

/// Möbius function: 1 at 1, 0 on non-square-free integers, `(-1)^k` on
/// square-free integers with `k` prime factors.
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius undefined at 0");
    let mut n = n;
    let mut k = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisor_profile(n: u32) -> DivisorProfile {
    let divisors = divisors_of(n);
    let mobius_values = divisors.iter().map(|&d| mobius(u64::from(n / d))).collect();
    DivisorProfile { n, divisors, mobius_values }
}

/// `N_n = Σ_{d|n} A_{n/d}` from a table of enumerated `A` values.
pub fn n_from_a(n: u32, a_table: &BTreeMap<u32, u64>) -> Result<u64> {
    assert!(n >= 1);
    let mut total = 0u64;
    for d in divisors_of(n) {
        let q = n / d;
        let a = a_table.get(&q).ok_or(Error::MissingTableEntry { n: q })?;
        total += a;
    }
    Ok(total)
}

/// `A_n = Σ_{d|n} μ(n/d) N_d` from a table of enumerated `N` values.
///
/// The inversion identity is stated for `n > 2`; `A_1 = 1` and `A_2 = 0` are
/// returned as fixed conventions.
pub fn a_from_n(n: u32, n_table: &BTreeMap<u32, u64>) -> Result<u64> {
    assert!(n >= 1);
    match n {
        1 => return Ok(1),
        2 => return Ok(0),
        _ => {}
    }
    let profile = divisor_profile(n);
    let mut total: i128 = 0;
    for (&d, &mu) in profile.divisors.iter().zip(&profile.mobius_values) {
        if mu == 0 {
            continue;
        }
        let nd = n_table.get(&d).ok_or(Error::MissingTableEntry { n: d })?;
        total += i128::from(mu) * i128::from(*nd);
    }
    if total < 0 {
        return Err(Error::DomainError { what: "Möbius inversion went negative; N-table inconsistent", n: i64::from(n) });
    }
    Ok(total as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::EnumerationBudget;
    use crate::semigroup::GeneratorSet;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        let g = GeneratorSet::new(gens.iter().copied()).unwrap();
        NumericalSemigroup::from_generators(&g, &EnumerationBudget::unlimited()).unwrap()
    }

    #[test]
    fn phi_figures() {
        assert_eq!(phi(&sg(&[5, 6])).primitives(), &[5, 7, 8, 9, 11]);
        let t = phi(&sg(&(10..=19).collect::<Vec<_>>()));
        assert_eq!(t.primitives(), &(10..=18).collect::<Vec<_>>()[..]);
        assert_eq!(t.frobenius(), 19);
        // Φ₁(ℕ) = O₂
        let o2 = phi(&NumericalSemigroup::naturals());
        assert_eq!(o2.primitives(), &[2, 3]);
        assert_eq!(o2.frobenius(), 1);
    }

    #[test]
    fn phi_preserves_multiplicity_and_sets_frobenius() {
        for gens in [&[5u32, 6][..], &[6, 7, 8], &[3, 5, 7], &[9, 11, 13]] {
            let s = sg(gens);
            let t = phi(&s);
            assert_eq!(t.frobenius(), i64::from(s.max_primitive()));
            assert_eq!(t.multiplicity(), s.multiplicity());
            assert_eq!(t.gcd_extended_left().unwrap(), 1);
        }
    }

    #[test]
    fn phi_inverse_round_trips() {
        for gens in [&[5u32, 6][..], &[6, 7, 8], &[3, 5, 7], &(10..=19).collect::<Vec<_>>()[..]] {
            let s = sg(gens);
            let back = phi_inverse(&phi(&s)).unwrap();
            assert_eq!(back, s);
        }
        assert_eq!(phi_inverse(&sg(&[5, 7, 8, 9, 11])).unwrap(), sg(&[5, 6]));
        assert!(phi_inverse(&sg(&[2, 3])).unwrap().is_naturals());
    }

    #[test]
    fn phi_inverse_rejects_ordinary_semigroups() {
        for n in 2..=9u32 {
            let o = sg(&(n + 1..=2 * n + 1).collect::<Vec<_>>());
            assert_eq!(o.frobenius(), i64::from(n));
            assert_eq!(phi_inverse(&o), Err(Error::NotInImage { gcd_ext_left: n }));
        }
    }

    #[test]
    fn delta_round_trips() {
        // S = {0,4} ∪ (6, ∞): extended-left gcd 2, scales down to <2,5>
        let s = delta_inverse(&sg(&[2, 5]), 2, 6).unwrap();
        assert_eq!(s.frobenius(), 6);
        assert_eq!(s.gcd_extended_left().unwrap(), 2);
        assert_eq!(delta(&s).unwrap(), sg(&[2, 5]));
        // identity on the unit-gcd class
        let u = sg(&[3, 5, 7]);
        assert_eq!(delta(&u).unwrap(), u);
        assert_eq!(delta_inverse(&u, 1, u.frobenius()).unwrap(), u);
    }

    #[test]
    fn delta_inverse_rejects_mismatches() {
        let r = sg(&[2, 5]);
        assert!(matches!(delta_inverse(&r, 2, 7), Err(Error::DivisorMismatch { .. })));
        let bad = sg(&(4..=7).collect::<Vec<_>>()); // gcd(L̄) = 3, not in any unit class
        assert!(matches!(delta_inverse(&bad, 2, 6), Err(Error::DivisorMismatch { .. })));
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(210), 1);
    }

    #[test]
    fn divisor_profile_structure() {
        let p = divisor_profile(12);
        assert_eq!(p.divisors, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(p.mobius_values, vec![mobius(12), mobius(6), mobius(4), mobius(3), mobius(2), mobius(1)]);
        // d(n)^2 < 4n
        assert!((p.divisors.len() as u64).pow(2) < 4 * 12);
    }

    fn table(pairs: &[(u32, u64)]) -> BTreeMap<u32, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn forward_identity_examples() {
        let a = table(&[(1, 1), (2, 0), (3, 1), (4, 1), (6, 2), (12, 35)]);
        assert_eq!(n_from_a(12, &a).unwrap(), 40);
        let a9 = table(&[(1, 1), (3, 1), (9, 19)]);
        assert_eq!(n_from_a(9, &a9).unwrap(), 21);
        assert_eq!(n_from_a(1, &table(&[(1, 1)])).unwrap(), 1);
    }

    #[test]
    fn inverse_identity_examples() {
        let n12 = table(&[(1, 1), (2, 1), (3, 2), (4, 2), (6, 4), (12, 40)]);
        assert_eq!(a_from_n(12, &n12).unwrap(), 35);
        let n8 = table(&[(1, 1), (2, 1), (4, 2), (8, 10)]);
        assert_eq!(a_from_n(8, &n8).unwrap(), 8);
        let n49 = table(&[(1, 1), (7, 11), (49, 40_010_851)]);
        assert_eq!(a_from_n(49, &n49).unwrap(), 40_010_840);
        // conventions below the identity's domain
        let empty = table(&[]);
        assert_eq!(a_from_n(1, &empty).unwrap(), 1);
        assert_eq!(a_from_n(2, &empty).unwrap(), 0);
    }

    #[test]
    fn missing_entries_are_reported() {
        let a = table(&[(12, 35)]);
        assert_eq!(n_from_a(12, &a), Err(Error::MissingTableEntry { n: 6 }));
        assert_eq!(a_from_n(12, &a), Err(Error::MissingTableEntry { n: 2 }));
    }
}
