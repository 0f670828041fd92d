//! Wilf-inequality verification: per-semigroup reports, the multiplicity
//! criterion `|S ∩ (m, 2m)|² >= 3m`, class scans, distribution statistics,
//! and the interval witness-family constructor.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::arith::{ceil_sqrt, gcd_u32};
use crate::budget::SearchContext;
use crate::enumerate::{self, ClassBy};
use crate::error::{Error, FamilyPrecondition, Result};
use crate::ratio::Rational;
use crate::semigroup::{closure_of, CanonicalKey, NumericalSemigroup};

/// Everything the Wilf inequality needs about one semigroup, as exact
/// integers: `wilf_holds` is `e·l >= F+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfReport {
    pub key: CanonicalKey,
    /// `e = |P(S)|`.
    pub embedding_dim: u64,
    /// `l = |L(S)|`.
    pub left_count: u64,
    /// `F(S) + 1`; zero for the full semigroup.
    pub frobenius_plus_one: u64,
    /// `ceil((F+1)/m)`; zero for the full semigroup by local convention.
    pub depth: u32,
    pub wilf_holds: bool,
    /// Maximal embedding dimension: `|P(S)| = m(S)`.
    pub max_embedding_dim: bool,
    /// `|S ∩ (m, 2m)|² >= 3m`; always false for the full semigroup.
    pub sqrt3m_criterion: bool,
}

/// `|S ∩ (m, 2m)|² >= 3m`, in integers. A semigroup passing this satisfies
/// the Wilf inequality, which `wilf_check` makes observable per semigroup.
pub fn criterion_sqrt3m(s: &NumericalSemigroup) -> Result<bool> {
    if s.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    Ok(criterion_sqrt3m_raw(s))
}

fn criterion_sqrt3m_raw(s: &NumericalSemigroup) -> bool {
    let m = u64::from(s.multiplicity());
    let count = s.count_in_open(m, 2 * m);
    count * count >= 3 * m
}

/// Populate a [`WilfReport`]. Total on all inputs; for the full semigroup the
/// product and `F+1` are both zero, so the inequality holds.
pub fn wilf_check(s: &NumericalSemigroup) -> WilfReport {
    let e = s.embedding_dim();
    let l = s.left_count();
    let f1 = (s.frobenius() + 1) as u64;
    WilfReport {
        key: s.canonical_key(),
        embedding_dim: e,
        left_count: l,
        frobenius_plus_one: f1,
        depth: s.depth_value(),
        wilf_holds: e * l >= f1,
        max_embedding_dim: e == u64::from(s.multiplicity()),
        sqrt3m_criterion: if s.is_naturals() { false } else { criterion_sqrt3m_raw(s) },
    }
}

/// Depth classes with known Wilf status: everything below depth 4 is settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthClass {
    AtMostTwo,
    Three,
    AtLeastFour,
}

pub fn classify_depth(s: &NumericalSemigroup) -> Result<DepthClass> {
    if s.is_naturals() {
        return Err(Error::UndefinedForN);
    }
    Ok(match s.depth_pair()?.depth {
        0..=2 => DepthClass::AtMostTwo,
        3 => DepthClass::Three,
        _ => DepthClass::AtLeastFour,
    })
}

/// How the multiplicities of the max-primitive-`n` class spread around `n/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionStat {
    pub n: u32,
    pub half_width: u32,
    /// Semigroups with `|m(S) - n/2| <= half_width`.
    pub inside_count: u64,
    /// Semigroups with `|m(S) - n/2| > half_width`.
    pub outside_count: u64,
    pub fraction_outside: Rational,
}

/// Tally `|m(S) - n/2| > half_width` over the max-primitive-`n` class,
/// comparing `|2m - n| > 2·half_width` so nothing leaves the integers.
pub fn multiplicity_distribution(
    n: u32,
    half_width: u32,
    ctx: &SearchContext<'_>,
) -> Result<DistributionStat> {
    let mut inside = 0u64;
    let mut outside = 0u64;
    let total = enumerate::enumerate_by_max_primitive(n, ctx, |s| {
        let two_m = i64::from(s.multiplicity()) * 2;
        if (two_m - i64::from(n)).unsigned_abs() > 2 * u64::from(half_width) {
            outside += 1;
        } else {
            inside += 1;
        }
    })?;
    if total == 0 {
        return Err(Error::EmptyClass { n });
    }
    debug_assert_eq!(inside + outside, total);
    Ok(DistributionStat {
        n,
        half_width,
        inside_count: inside,
        outside_count: outside,
        fraction_outside: Rational::new(outside, total),
    })
}

/// Fraction of the max-primitive-`n` class failing the `√(3m)` criterion.
pub fn left_primitive_fraction(n: u32, ctx: &SearchContext<'_>) -> Result<Rational> {
    let mut failing = 0u64;
    let total = enumerate::enumerate_by_max_primitive(n, ctx, |s| {
        if !criterion_sqrt3m_raw(s) {
            failing += 1;
        }
    })?;
    if total == 0 {
        return Err(Error::EmptyClass { n });
    }
    Ok(Rational::new(failing, total))
}

/// Fraction of the max-primitive-`n` class satisfying the Wilf inequality.
pub fn wilf_probability(n: u32, ctx: &SearchContext<'_>) -> Result<Rational> {
    let mut good = 0u64;
    let total = enumerate::enumerate_by_max_primitive(n, ctx, |s| {
        let r = wilf_check(s);
        if r.wilf_holds {
            good += 1;
        }
    })?;
    if total == 0 {
        return Err(Error::EmptyClass { n });
    }
    Ok(Rational::new(good, total))
}

/// Scan whole classes for a Wilf violation; returns the report of the first
/// counterexample in canonical order, or `None` (the expected outcome).
pub fn wilf_scan(
    by: ClassBy,
    ns: RangeInclusive<u32>,
    ctx: &SearchContext<'_>,
) -> Result<Option<WilfReport>> {
    for n in ns {
        if by == ClassBy::MaxPrimitive && n == 2 {
            continue; // empty class
        }
        let mut violation: Option<WilfReport> = None;
        let check = |s: &NumericalSemigroup| {
            if violation.is_none() {
                let r = wilf_check(s);
                if !r.wilf_holds {
                    violation = Some(r);
                }
            }
        };
        match by {
            ClassBy::Frobenius => enumerate::enumerate_by_frobenius(n, ctx, check)?,
            ClassBy::MaxPrimitive => enumerate::enumerate_by_max_primitive(n, ctx, check)?,
            ClassBy::Genus => enumerate::enumerate_by_genus(n, ctx, check)?,
        };
        if violation.is_some() {
            return Ok(violation);
        }
    }
    Ok(None)
}

/// A constructed witness `S = <B>` for `B` inside the interval
/// `A = [m, m + ⌊(m-2)/3⌋]`, with every claimed property verified by direct
/// computation rather than assumed.
#[derive(Debug, Clone)]
pub struct Family9Witness {
    pub m: u32,
    pub b: Vec<u32>,
    pub semigroup: NumericalSemigroup,
    pub report: WilfReport,
    /// `|S ∩ (m, 2m)|² >= 3m` for the constructed semigroup itself.
    pub criterion_holds: bool,
    /// `F(S) > 3m`.
    pub frobenius_exceeds_3m: bool,
    /// `3·|P(S)| < m`.
    pub small_embedding_dim: bool,
    /// Frobenius number of the full interval semigroup `<A>`, computed.
    pub interval_frobenius: i64,
    /// `ceil((m-1)/⌊(m-2)/3⌋)·m - 1`, which should equal both the computed
    /// value and `4m - 1`.
    pub interval_formula_value: i64,
}

impl Family9Witness {
    /// All four claimed properties of the witness plus the interval
    /// Frobenius formula.
    pub fn fully_verified(&self) -> bool {
        self.criterion_holds
            && self.frobenius_exceeds_3m
            && self.small_embedding_dim
            && self.report.wilf_holds
            && self.interval_frobenius == self.interval_formula_value
            && self.interval_formula_value == 4 * i64::from(self.m) - 1
    }
}

/// Default choice of `B`: the shortest consecutive prefix `[m, m+b-1]` whose
/// *interior* count clears the criterion, i.e. `(b-1)² >= 3m`, provided it
/// still fits `3b < m` and the interval; otherwise the prefix of length
/// `⌈√(3m)⌉`. The fallback satisfies the size precondition `b² >= 3m` but its
/// constructed semigroup has only `b-1` members in `(m, 2m)`, so the
/// criterion itself ends up false; the witness record reports that honestly.
pub fn default_family9_b(m: u32) -> Vec<u32> {
    let k = (m - 2) / 3;
    let base = ceil_sqrt(3 * u128::from(m)) as u32;
    let strict = base + 1;
    let b = if 3 * strict < m && strict <= k + 1 { strict } else { base };
    (m..m + b).collect()
}

/// Build and verify `<B>` for `B ⊆ [m, m + ⌊(m-2)/3⌋]` with `m ∈ B`,
/// `|B|² >= 3m`, `|B| < m/3` and `gcd(B) = 1`. `None` selects
/// [`default_family9_b`]. Precondition violations name the condition.
pub fn construct_family9(m: u32, b: Option<&[u32]>) -> Result<Family9Witness> {
    if m <= 30 {
        return Err(Error::PreconditionFailed(FamilyPrecondition::MultiplicityTooSmall { m }));
    }
    let k = (m - 2) / 3;
    let interval_end = m + k;
    let mut b: Vec<u32> = match b {
        Some(b) => b.to_vec(),
        None => default_family9_b(m),
    };
    b.sort_unstable();
    b.dedup();
    if b.first() != Some(&m) {
        if let Some(&out) = b.iter().find(|&&x| x < m) {
            return Err(Error::PreconditionFailed(FamilyPrecondition::OutsideInterval {
                element: out,
                interval_end,
            }));
        }
        return Err(Error::PreconditionFailed(FamilyPrecondition::MissingMultiplicity { m }));
    }
    if let Some(&out) = b.iter().find(|&&x| x > interval_end) {
        return Err(Error::PreconditionFailed(FamilyPrecondition::OutsideInterval {
            element: out,
            interval_end,
        }));
    }
    let size = b.len() as u64;
    if size * size < 3 * u64::from(m) {
        return Err(Error::PreconditionFailed(FamilyPrecondition::TooFewElements {
            size,
            triple_m: 3 * u64::from(m),
        }));
    }
    if 3 * size >= u64::from(m) {
        return Err(Error::PreconditionFailed(FamilyPrecondition::TooManyElements { size, m }));
    }
    let g = b.iter().fold(0u32, |acc, &x| gcd_u32(acc, x));
    if g != 1 {
        return Err(Error::PreconditionFailed(FamilyPrecondition::NonUnitGcd { gcd: g }));
    }

    let semigroup = closure_of(&b, None)?;
    debug_assert_eq!(semigroup.multiplicity(), m);
    let report = wilf_check(&semigroup);
    let criterion_holds = criterion_sqrt3m_raw(&semigroup);
    let frobenius_exceeds_3m = semigroup.frobenius() > 3 * i64::from(m);
    let small_embedding_dim = 3 * semigroup.embedding_dim() < u64::from(m);

    let interval: Vec<u32> = (m..=interval_end).collect();
    let interval_frobenius = closure_of(&interval, None)?.frobenius();
    let interval_formula_value =
        i64::from((m - 1).div_ceil(k)) * i64::from(m) - 1;

    Ok(Family9Witness {
        m,
        b,
        semigroup,
        report,
        criterion_holds,
        frobenius_exceeds_3m,
        small_embedding_dim,
        interval_frobenius,
        interval_formula_value,
    })
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

    fn ctx() -> SearchContext<'static> {
        SearchContext::unlimited()
    }

    #[test]
    fn report_examples() {
        let r = wilf_check(&sg(&[3, 5, 7]));
        assert_eq!((r.embedding_dim, r.left_count, r.frobenius_plus_one), (3, 2, 5));
        assert!(r.wilf_holds);
        assert!(r.max_embedding_dim);

        let r = wilf_check(&sg(&[6, 7, 8]));
        assert_eq!((r.embedding_dim, r.left_count, r.frobenius_plus_one), (3, 9, 18));
        assert_eq!(r.depth, 3);
        assert!(r.wilf_holds);

        let r = wilf_check(&NumericalSemigroup::naturals());
        assert_eq!(r.embedding_dim * r.left_count, 0);
        assert_eq!(r.frobenius_plus_one, 0);
        assert_eq!(r.depth, 0);
        assert!(r.wilf_holds);
        assert!(!r.sqrt3m_criterion);
    }

    #[test]
    fn criterion_examples() {
        // <10,...,19>: 9 members in (10, 20), 81 >= 30
        assert!(criterion_sqrt3m(&sg(&(10..=19).collect::<Vec<_>>())).unwrap());
        // <10,11>: one member in (10, 20), criterion silent, Wilf still holds
        let s = sg(&[10, 11]);
        assert!(!criterion_sqrt3m(&s).unwrap());
        assert!(wilf_check(&s).wilf_holds);
        // O_{n+1} has n members in the window; n^2 >= 3(n+1) first holds at n = 4
        let o4 = sg(&[4, 5, 6, 7]);
        assert!(!criterion_sqrt3m(&o4).unwrap());
        for n in 4..=12u32 {
            let o = sg(&(n + 1..=2 * n + 1).collect::<Vec<_>>());
            assert!(criterion_sqrt3m(&o).unwrap(), "O_{}", n + 1);
        }
        assert_eq!(criterion_sqrt3m(&NumericalSemigroup::naturals()), Err(Error::UndefinedForN));
    }

    #[test]
    fn criterion_implies_wilf_on_small_classes() {
        for f in 1..=18u32 {
            enumerate::enumerate_by_frobenius(f, &ctx(), |s| {
                let r = wilf_check(s);
                if r.sqrt3m_criterion {
                    assert!(r.wilf_holds, "criterion without Wilf at {s}");
                }
            })
            .unwrap();
        }
    }

    #[test]
    fn window_members_are_primitives() {
        for f in 1..=16u32 {
            enumerate::enumerate_by_frobenius(f, &ctx(), |s| {
                let m = u64::from(s.multiplicity());
                for x in m + 1..2 * m {
                    if s.contains(x as i64) {
                        assert!(s.primitives().contains(&(x as u32)), "{s}: {x}");
                    }
                }
            })
            .unwrap();
        }
    }

    #[test]
    fn depth_classes() {
        assert_eq!(classify_depth(&sg(&[3, 5, 7])).unwrap(), DepthClass::AtMostTwo);
        assert_eq!(classify_depth(&sg(&[6, 7, 8])).unwrap(), DepthClass::Three);
        assert_eq!(classify_depth(&sg(&[5, 6])).unwrap(), DepthClass::AtLeastFour);
        assert!(classify_depth(&NumericalSemigroup::naturals()).is_err());
    }

    #[test]
    fn distribution_trivial_window() {
        // window covering every feasible multiplicity: nothing outside
        let d = multiplicity_distribution(20, 10, &ctx()).unwrap();
        assert_eq!(d.outside_count, 0);
        assert_eq!(d.inside_count, 877);
        assert_eq!(d.fraction_outside, Rational::zero());
    }

    #[test]
    fn distribution_half_width_zero() {
        // outside = A_12 - #{m(S) = 6}
        let d = multiplicity_distribution(12, 0, &ctx()).unwrap();
        assert_eq!(d.inside_count + d.outside_count, 35);
        let mut with_m6 = 0u64;
        enumerate::enumerate_by_max_primitive(12, &ctx(), |s| {
            if s.multiplicity() == 6 {
                with_m6 += 1;
            }
        })
        .unwrap();
        assert_eq!(d.inside_count, with_m6);
    }

    #[test]
    fn empty_class_errors() {
        assert_eq!(multiplicity_distribution(2, 1, &ctx()), Err(Error::EmptyClass { n: 2 }));
        assert_eq!(wilf_probability(2, &ctx()), Err(Error::EmptyClass { n: 2 }));
        assert_eq!(left_primitive_fraction(2, &ctx()), Err(Error::EmptyClass { n: 2 }));
    }

    #[test]
    fn criterion_fraction_on_tiny_classes() {
        // every semigroup with maximum primitive 5 (or 3) has too small a
        // window to clear the criterion, so the failing fraction is 1
        assert_eq!(left_primitive_fraction(5, &ctx()).unwrap(), Rational::one());
        assert_eq!(left_primitive_fraction(3, &ctx()).unwrap(), Rational::one());
    }

    #[test]
    fn probability_one_on_small_classes() {
        assert!(wilf_probability(5, &ctx()).unwrap().is_one());
        for n in [1u32, 3, 4, 6, 7, 12, 15] {
            assert!(wilf_probability(n, &ctx()).unwrap().is_one(), "n = {n}");
        }
    }

    #[test]
    fn scan_finds_nothing() {
        assert_eq!(wilf_scan(ClassBy::MaxPrimitive, 1..=16, &ctx()).unwrap(), None);
        assert_eq!(wilf_scan(ClassBy::Frobenius, 1..=16, &ctx()).unwrap(), None);
        assert_eq!(wilf_scan(ClassBy::Genus, 0..=8, &ctx()).unwrap(), None);
    }

    #[test]
    fn family9_preconditions() {
        assert_eq!(
            construct_family9(30, None).unwrap_err(),
            Error::PreconditionFailed(FamilyPrecondition::MultiplicityTooSmall { m: 30 })
        );
        assert_eq!(
            construct_family9(31, Some(&[31])).unwrap_err(),
            Error::PreconditionFailed(FamilyPrecondition::TooFewElements {
                size: 1,
                triple_m: 93
            })
        );
        assert!(matches!(
            construct_family9(31, Some(&[31, 32, 33, 34, 35, 36, 37, 38, 39, 41])),
            Err(Error::PreconditionFailed(FamilyPrecondition::OutsideInterval { element: 41, .. }))
        ));
        assert!(matches!(
            construct_family9(40, Some(&(41..=52).collect::<Vec<_>>())),
            Err(Error::PreconditionFailed(FamilyPrecondition::MissingMultiplicity { m: 40 }))
        ));
        // m = 42: the interval [42, 55] has exactly 14 elements, and taking
        // all of them breaks |B| < m/3
        assert!(matches!(
            construct_family9(42, Some(&(42..=55).collect::<Vec<_>>())),
            Err(Error::PreconditionFailed(FamilyPrecondition::TooManyElements { size: 14, m: 42 }))
        ));
    }

    #[test]
    fn family9_m31_prefix_witness() {
        // B = [31, 40]: passes every size precondition, and direct computation
        // shows F = 123 = 4·31 - 1, e = 10 with 3e < 31, Wilf holds. But the
        // open window (31, 62) holds only the 9 elements [32, 40], and
        // 81 < 93, so the criterion itself is false for this B.
        let w = construct_family9(31, None).unwrap();
        assert_eq!(w.b, (31..=40).collect::<Vec<_>>());
        assert_eq!(w.semigroup.frobenius(), 123);
        assert_eq!(w.interval_frobenius, 123);
        assert_eq!(w.interval_formula_value, 123);
        assert!(w.frobenius_exceeds_3m);
        assert!(w.small_embedding_dim);
        assert!(w.report.wilf_holds);
        assert_eq!(w.semigroup.count_in_open(31, 62), 9);
        assert!(!w.criterion_holds);
        assert!(!w.fully_verified());
    }

    #[test]
    fn family9_m37_fully_verified() {
        let w = construct_family9(37, None).unwrap();
        assert_eq!(w.b, (37..=48).collect::<Vec<_>>());
        assert!(w.criterion_holds);
        assert!(w.frobenius_exceeds_3m);
        assert!(w.small_embedding_dim);
        assert!(w.report.wilf_holds);
        assert_eq!(w.interval_frobenius, 4 * 37 - 1);
        assert!(w.fully_verified());
    }

    #[test]
    fn family9_interval_formula_matches_computation() {
        for m in [31u32, 33, 40, 52, 75, 101] {
            let w = construct_family9(m, None).unwrap();
            assert_eq!(w.interval_frobenius, w.interval_formula_value, "m = {m}");
            assert_eq!(w.interval_formula_value, 4 * i64::from(m) - 1, "m = {m}");
        }
    }
}
