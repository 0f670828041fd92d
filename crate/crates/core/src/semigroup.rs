//! The numerical-semigroup value type and its cached invariants.
//!
//! A numerical semigroup is a cofinite additive submonoid of the nonnegative
//! integers. The canonical value stores a dense membership table over
//! `[0, F+1]`, where `F` is the Frobenius number (largest non-member, `-1`
//! for the full semigroup of all nonnegative integers); everything above `F`
//! is implicitly a member. All invariants used by the counting, transform and
//! verification layers (multiplicity, genus, minimal generators) are computed
//! once at construction, because enumeration touches these values millions of
//! times.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, gcd_u32};
use crate::bits::Bits;
use crate::budget::EnumerationBudget;
use crate::error::{BudgetLimit, Error, Result};

/// A finite, nonempty set of positive integers with gcd 1: the input form of
/// a numerical semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    elements: Vec<u32>,
}

impl GeneratorSet {
    /// Sorts, dedupes and validates. Rejects empty sets and zeros with a
    /// domain error and non-unit gcds with [`Error::NonUnitGcd`].
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut elements: Vec<u32> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::DomainError { what: "generator set must be nonempty", n: 0 });
        }
        if elements[0] == 0 {
            return Err(Error::DomainError { what: "generators must be positive", n: 0 });
        }
        let g = elements.iter().fold(0u32, |acc, &e| gcd_u32(acc, e));
        if g != 1 {
            return Err(Error::NonUnitGcd { gcd: g });
        }
        Ok(GeneratorSet { elements })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }
}

/// Depth `ceil((F+1)/m)` paired with primitive depth `ceil(max P / min P)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthPair {
    pub depth: u32,
    pub pdepth: u32,
}

/// Opaque comparable token identifying a semigroup: derived from the
/// extended left elements, equal if and only if the semigroups are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    frobenius: i64,
    words: Vec<u64>,
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.frobenius)?;
        for w in &self.words {
            write!(f, ":{w:x}")?;
        }
        Ok(())
    }
}

/// A numerical semigroup with all per-semigroup invariants cached.
///
/// Values are immutable after construction and safe to share across threads;
/// every operation on them is a pure function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    frobenius: i64,
    /// Membership over `[0, frobenius + 1]`; the top bit (position `F+1`) is
    /// always set. For the full semigroup this is the single bit `0`.
    members: Bits,
    multiplicity: u32,
    primitives: Vec<u32>,
    genus: u64,
}

impl NumericalSemigroup {
    /// The full semigroup of all nonnegative integers (`F = -1` by convention).
    pub fn naturals() -> Self {
        let mut members = Bits::zeros(1);
        members.set(0);
        NumericalSemigroup {
            frobenius: -1,
            members,
            multiplicity: 1,
            primitives: vec![1],
            genus: 0,
        }
    }

    /// Build from the membership table below the Frobenius number.
    ///
    /// `low` holds membership over `[0, f]`; bit 0 must be set, bit `f` must
    /// be clear, and the set must be closed under truncated addition
    /// (`a + b <= f` implies membership of the sum). All enumeration and
    /// transform code funnels through here.
    pub(crate) fn from_parts(f: u32, low: &Bits) -> Self {
        debug_assert_eq!(low.len(), f as usize + 1);
        debug_assert!(low.get(0));
        debug_assert!(!low.get(f as usize));
        let mut members = Bits::zeros(f as usize + 2);
        members.or_shifted(low, 0);
        members.set(f as usize + 1);

        let multiplicity = members
            .iter_ones()
            .find(|&i| i > 0)
            .expect("membership table always has an element above 0") as u32;
        let left_count = low.count_ones();
        let genus = u64::from(f) + 1 - left_count;
        let primitives = compute_primitives(f, &members, multiplicity);
        NumericalSemigroup { frobenius: i64::from(f), members, multiplicity, primitives, genus }
    }

    /// Smallest additively closed, cofinite superset of the generators
    /// containing 0.
    ///
    /// The sieve marks reachable integers in increasing order and stops once
    /// it has seen `m` consecutive members (with `m` the smallest generator):
    /// from there on every integer is reachable, so the last recorded gap is
    /// the Frobenius number. The budget's node cap bounds how far the sieve
    /// may extend.
    pub fn from_generators(gens: &GeneratorSet, budget: &EnumerationBudget) -> Result<Self> {
        closure_of(gens.elements(), budget.node_cap)
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// The minimal generators `S* \ (S* + S*)`, sorted ascending.
    pub fn primitives(&self) -> &[u32] {
        &self.primitives
    }

    /// Alias for [`primitives`](Self::primitives) under its other common name.
    pub fn minimal_generators(&self) -> &[u32] {
        &self.primitives
    }

    pub fn embedding_dim(&self) -> u64 {
        self.primitives.len() as u64
    }

    pub fn max_primitive(&self) -> u32 {
        *self.primitives.last().expect("primitive set is never empty")
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.members.get(x as usize)
        }
    }

    /// Number of members in the open interval `(lo, hi)`.
    pub fn count_in_open(&self, lo: u64, hi: u64) -> u64 {
        (lo + 1..hi).filter(|&x| self.contains(x as i64)).count() as u64
    }

    /// The left elements `S ∩ [0, F)`, empty for the full semigroup.
    pub fn left_elements(&self) -> Vec<u32> {
        if self.is_naturals() {
            return Vec::new();
        }
        let f = self.frobenius as usize;
        self.members.iter_ones().take_while(|&i| i < f).map(|i| i as u32).collect()
    }

    /// `|L(S)|` without materializing the set.
    pub fn left_count(&self) -> u64 {
        if self.is_naturals() {
            0
        } else {
            self.members.count_ones_below(self.frobenius as usize)
        }
    }

    /// The extended left elements `L(S) ∪ {F(S)}`, which determine the
    /// semigroup. Undefined for the full semigroup.
    pub fn extended_left_elements(&self) -> Result<Vec<u32>> {
        if self.is_naturals() {
            return Err(Error::UndefinedForN);
        }
        let mut v = self.left_elements();
        v.push(self.frobenius as u32);
        Ok(v)
    }

    /// gcd of the extended left elements.
    pub fn gcd_extended_left(&self) -> Result<u32> {
        if self.is_naturals() {
            return Err(Error::UndefinedForN);
        }
        let f = self.frobenius as usize;
        let mut g = self.frobenius as u64;
        for i in self.members.iter_ones() {
            if i == 0 || i >= f {
                continue;
            }
            g = gcd(g, i as u64);
            if g == 1 {
                break;
            }
        }
        Ok(g as u32)
    }

    /// Depth and primitive depth, both exact integer ceilings. Rejects the
    /// full semigroup rather than guessing a convention.
    pub fn depth_pair(&self) -> Result<DepthPair> {
        if self.is_naturals() {
            return Err(Error::UndefinedForN);
        }
        Ok(DepthPair { depth: self.depth_value(), pdepth: self.primitive_depth() })
    }

    /// `ceil((F+1)/m)`; 0 for the full semigroup (local convention used only
    /// in reports, never asserted as a theorem).
    pub(crate) fn depth_value(&self) -> u32 {
        if self.is_naturals() {
            return 0;
        }
        let f1 = self.frobenius as u64 + 1;
        let m = u64::from(self.multiplicity);
        f1.div_ceil(m) as u32
    }

    /// `ceil(max P / min P)`; total (1 for the full semigroup).
    pub fn primitive_depth(&self) -> u32 {
        let hi = u64::from(self.max_primitive());
        let lo = u64::from(self.multiplicity);
        hi.div_ceil(lo) as u32
    }

    /// Whether the embedding dimension equals the multiplicity.
    pub fn is_max_embedding_dim(&self) -> Result<bool> {
        if self.is_naturals() {
            return Err(Error::UndefinedForN);
        }
        Ok(self.primitives.len() as u64 == u64::from(self.multiplicity))
    }

    /// The quotient `S/d = { x : d*x ∈ S }`, always a numerical semigroup.
    pub fn quotient(&self, d: u32) -> NumericalSemigroup {
        assert!(d >= 1, "quotient by zero");
        if d == 1 {
            return self.clone();
        }
        if self.is_naturals() {
            return NumericalSemigroup::naturals();
        }
        let d64 = i64::from(d);
        let fmax = self.frobenius / d64;
        // New Frobenius number: largest x with d*x not a member.
        let mut new_f: Option<u32> = None;
        for x in (1..=fmax).rev() {
            if !self.contains(d64 * x) {
                new_f = Some(x as u32);
                break;
            }
        }
        let Some(nf) = new_f else {
            return NumericalSemigroup::naturals();
        };
        let mut low = Bits::zeros(nf as usize + 1);
        for x in 0..=nf {
            if self.contains(d64 * i64::from(x)) {
                low.set(x as usize);
            }
        }
        NumericalSemigroup::from_parts(nf, &low)
    }

    /// Token equal iff the semigroups are equal; derived from the extended
    /// left elements (the membership word plus the Frobenius number).
    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey { frobenius: self.frobenius, words: self.members.words().to_vec() }
    }

    /// Remove a primitive strictly above the Frobenius number. This is the
    /// edge relation of the genus tree: the result has Frobenius number `p`
    /// and genus one larger.
    pub(crate) fn remove_primitive(&self, p: u32) -> NumericalSemigroup {
        debug_assert!(i64::from(p) > self.frobenius);
        debug_assert!(self.primitives.contains(&p));
        let mut low = Bits::zeros(p as usize + 1);
        for x in 0..p {
            if self.contains(i64::from(x)) {
                low.set(x as usize);
            }
        }
        NumericalSemigroup::from_parts(p, &low)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, p) in self.primitives.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ">")
    }
}

/// Minimal generators of the semigroup described by `members` (table over
/// `[0, f+1]` with the top bit set). Primitives live in `[m, F+m]`: anything
/// larger splits as `m + (member above F)`.
fn compute_primitives(f: u32, members: &Bits, m: u32) -> Vec<u32> {
    let hi = f as usize + m as usize; // inclusive upper bound of the search range
    let mut star = Bits::zeros(hi + 1);
    for i in members.iter_ones() {
        if i > 0 && i <= f as usize {
            star.set(i);
        }
    }
    for x in f as usize + 1..=hi {
        star.set(x);
    }
    // sums = union over nonzero members a <= f of (star << a); any s <= F+m
    // expressible as a sum of two nonzero members has a summand <= F.
    let mut sums = Bits::zeros(hi + 1);
    let star_snapshot = star.clone();
    for a in star_snapshot.iter_ones() {
        if a > f as usize {
            break;
        }
        sums.or_shifted(&star_snapshot, a);
    }
    star.iter_ones().filter(|&s| !sums.get(s)).map(|s| s as u32).collect()
}

/// Closure sieve shared by `from_generators` and the pullback construction.
pub(crate) fn closure_of(gens: &[u32], node_cap: Option<u64>) -> Result<NumericalSemigroup> {
    debug_assert!(!gens.is_empty() && gens[0] >= 1);
    if gens[0] == 1 {
        return Ok(NumericalSemigroup::naturals());
    }
    let m = gens[0] as usize;
    let max_gen = *gens.last().unwrap() as usize;
    let mut capacity = 2 * max_gen + 2;
    let mut reach: Vec<bool> = vec![false; capacity];
    reach[0] = true;
    let mut run = 0usize;
    let mut last_gap = 0usize;
    let mut x = 1usize;
    loop {
        if x >= capacity {
            capacity *= 2;
            reach.resize(capacity, false);
        }
        if let Some(cap) = node_cap {
            if x as u64 > cap {
                return Err(Error::BudgetExceeded(BudgetLimit::NodeCap { cap }));
            }
        }
        let mut member = false;
        for &g in gens {
            let g = g as usize;
            if g <= x && reach[x - g] {
                member = true;
                break;
            }
        }
        reach[x] = member;
        if member {
            run += 1;
            if run == m {
                break;
            }
        } else {
            run = 0;
            last_gap = x;
        }
        x += 1;
    }
    let f = last_gap as u32;
    let mut low = Bits::zeros(f as usize + 1);
    for (i, &r) in reach.iter().enumerate().take(f as usize + 1) {
        if r {
            low.set(i);
        }
    }
    Ok(NumericalSemigroup::from_parts(f, &low))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        let g = GeneratorSet::new(gens.iter().copied()).unwrap();
        NumericalSemigroup::from_generators(&g, &EnumerationBudget::unlimited()).unwrap()
    }

    #[test]
    fn naturals_conventions() {
        let n = NumericalSemigroup::naturals();
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.genus(), 0);
        assert_eq!(n.multiplicity(), 1);
        assert_eq!(n.primitives(), &[1]);
        assert!(n.left_elements().is_empty());
        assert_eq!(n.left_count(), 0);
        assert_eq!(n.extended_left_elements(), Err(Error::UndefinedForN));
        assert_eq!(n.depth_pair(), Err(Error::UndefinedForN));
        assert_eq!(n.is_max_embedding_dim(), Err(Error::UndefinedForN));
        assert_eq!(sg(&[1]), n);
        assert_eq!(sg(&[1, 4, 9]), n);
    }

    #[test]
    fn generator_set_validation() {
        assert_eq!(
            GeneratorSet::new([2u32, 4]).unwrap_err(),
            Error::NonUnitGcd { gcd: 2 }
        );
        assert!(GeneratorSet::new([]).is_err());
        assert!(GeneratorSet::new([0u32, 3]).is_err());
        let g = GeneratorSet::new([6u32, 4, 9, 6]).unwrap();
        assert_eq!(g.elements(), &[4, 6, 9]);
    }

    #[test]
    fn two_generator_closed_form() {
        // F(<a,b>) = ab - a - b and g = (a-1)(b-1)/2 for coprime a, b
        let s = sg(&[5, 6]);
        assert_eq!(s.frobenius(), 19);
        assert_eq!(s.genus(), 10);
        assert_eq!(s.primitives(), &[5, 6]);
        for (a, b) in [(2u32, 3u32), (3, 7), (4, 9), (7, 11), (20, 31)] {
            let s = sg(&[a, b]);
            assert_eq!(s.frobenius(), i64::from(a * b - a - b), "<{a},{b}>");
            assert_eq!(s.genus(), u64::from((a - 1) * (b - 1) / 2), "<{a},{b}>");
        }
    }

    #[test]
    fn example_invariants() {
        let s = sg(&[6, 7, 8]);
        assert_eq!(s.frobenius(), 17);
        assert_eq!(s.multiplicity(), 6);
        // sieve oracle: members below 17 are 0,6,7,8,12,13,14,15,16
        assert_eq!(s.left_elements(), vec![0, 6, 7, 8, 12, 13, 14, 15, 16]);
        assert_eq!(s.left_count(), 9);
        let d = s.depth_pair().unwrap();
        assert_eq!(d, DepthPair { depth: 3, pdepth: 2 });

        let t = sg(&(10..=19).collect::<Vec<_>>());
        assert_eq!(t.frobenius(), 9);
        assert_eq!(t.depth_pair().unwrap(), DepthPair { depth: 1, pdepth: 2 });

        let u = sg(&[3, 5, 7]);
        assert_eq!(u.frobenius(), 4);
        assert_eq!(u.left_elements(), vec![0, 3]);
        assert_eq!(u.extended_left_elements().unwrap(), vec![0, 3, 4]);
        assert_eq!(u.depth_pair().unwrap(), DepthPair { depth: 2, pdepth: 3 });
        assert!(u.is_max_embedding_dim().unwrap());
        assert!(!sg(&[5, 6]).is_max_embedding_dim().unwrap());
    }

    #[test]
    fn minimal_generators_examples() {
        assert_eq!(sg(&[5, 7, 8, 9, 11]).primitives(), &[5, 7, 8, 9, 11]);
        // ordinary semigroup O_6 = <6,...,11>
        let o6 = sg(&(6..=11).collect::<Vec<_>>());
        assert_eq!(o6.primitives(), &[6, 7, 8, 9, 10, 11]);
        assert!(o6.is_max_embedding_dim().unwrap());
        // redundant generators are dropped
        assert_eq!(sg(&[5, 6, 11]).primitives(), &[5, 6]);
    }

    #[test]
    fn genus_left_count_identity() {
        for gens in [&[3u32, 5, 7][..], &[6, 7, 8], &[5, 6], &[2, 3], &[10, 11]] {
            let s = sg(gens);
            assert_eq!(s.left_count() + s.genus(), s.frobenius() as u64 + 1);
        }
    }

    #[test]
    fn closure_under_addition_double_loop() {
        let s = sg(&[6, 7, 8]);
        let f = s.frobenius();
        for a in 0..=f {
            for b in a..=f {
                if s.contains(a) && s.contains(b) && a + b <= f {
                    assert!(s.contains(a + b), "{a}+{b}");
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let s = sg(&[2, 5]);
        assert_eq!(s.frobenius(), 3);
        assert_eq!(s.quotient(1), s);
        assert!(s.quotient(2).is_naturals());
        // witness built by scaling <2,3> by 3: S = {0} ∪ (3, ∞)
        let o2 = sg(&[2, 3]);
        assert_eq!(o2.frobenius(), 1);
        let scaled = sg(&(4..=7).collect::<Vec<_>>());
        assert_eq!(scaled.frobenius(), 3);
        assert_eq!(scaled.gcd_extended_left().unwrap(), 3);
        assert_eq!(scaled.quotient(3), o2);
    }

    #[test]
    fn canonical_key_semantics() {
        assert_eq!(sg(&[5, 6]).canonical_key(), sg(&[5, 6, 11]).canonical_key());
        assert_ne!(sg(&[3, 5, 7]).canonical_key(), sg(&[3, 4, 5]).canonical_key());
        let nat_key = NumericalSemigroup::naturals().canonical_key();
        assert_eq!(nat_key, sg(&[1]).canonical_key());
        assert_ne!(nat_key, sg(&[2, 3]).canonical_key());
    }

    #[test]
    fn primitive_class_bound() {
        for gens in [&[6u32, 7, 8][..], &[5, 6], &[3, 5, 7], &[10, 11, 12, 13]] {
            let s = sg(gens);
            let m = s.multiplicity();
            // at most one primitive per congruence class mod m
            let mut seen = vec![false; m as usize];
            for &p in s.primitives() {
                let c = (p % m) as usize;
                assert!(!seen[c], "two primitives congruent mod {m}");
                seen[c] = true;
            }
            assert!(s.embedding_dim() <= u64::from(m));
        }
    }

    #[test]
    fn budget_caps_closure_sieve() {
        let g = GeneratorSet::new([1000u32, 1001]).unwrap();
        let b = EnumerationBudget::unlimited().with_node_cap(100);
        assert!(matches!(
            NumericalSemigroup::from_generators(&g, &b),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn display_uses_generators() {
        assert_eq!(sg(&[5, 6]).to_string(), "<5,6>");
    }
}
