//! Exhaustive enumeration of numerical semigroups by Frobenius number, by
//! maximum primitive, and by genus.
//!
//! A semigroup with Frobenius number `f` is the same thing as a set
//! `T ⊆ [0, f]` with `0 ∈ T`, `f ∉ T`, closed under truncated addition
//! (`a, b ∈ T` and `a + b <= f` force `a + b ∈ T`); the semigroup is then
//! `T ∪ (f, ∞)`. The search branches on the integers `1..f-1` in ascending
//! order, deciding membership and propagating forced sums through bitset
//! closure; an integer whose inclusion would force `f` itself is excluded on
//! the spot. Every surviving leaf is a distinct semigroup, visited in
//! include-first order (the canonical order used everywhere downstream).
//!
//! Enumeration by maximum primitive `n` is routed through this search: the
//! semigroups with maximum primitive `n` correspond bijectively to the
//! Frobenius-`n` semigroups whose extended left elements have gcd 1, by
//! removing `n` and filling everything above it. The pullback regenerates the
//! preimage by closing the extended left elements.
//!
//! Genus enumeration walks the usual semigroup tree (remove one primitive
//! above the Frobenius number per edge) and is used as an independent
//! cross-check, not as a primary counting route.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{divisors_of, gcd};
use crate::bits::{self, Bits};
use crate::budget::SearchContext;
use crate::error::{Error, Result};
use crate::semigroup::{closure_of, NumericalSemigroup};

/// Which class a scan runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassBy {
    Frobenius,
    MaxPrimitive,
    Genus,
}

/// A node of the Frobenius-side search: membership decided for all positions
/// below `next`, forced sums already propagated.
#[derive(Debug, Clone)]
pub struct FrobeniusCandidate {
    f: u32,
    /// First position in `[1, f]` not yet decided; `next == f` means the
    /// candidate is a complete semigroup.
    next: u32,
    /// Truncated-closed membership over `[0, f]`; bit `f` is never set.
    members: Bits,
    /// gcd of the nonzero members so far (0 while none). Forced members are
    /// sums of chosen ones, so they never change this value.
    gcd_members: u64,
    /// Branch decisions from the root, include = `true`; forced positions do
    /// not appear. Lexicographic order on this path (include first) is the
    /// canonical enumeration order.
    path: Vec<bool>,
}

impl FrobeniusCandidate {
    /// The root of the search for Frobenius number `f >= 1`.
    pub fn root(f: u32) -> Result<Self> {
        if f < 1 {
            return Err(Error::DomainError { what: "Frobenius number must be positive", n: i64::from(f) });
        }
        let mut members = Bits::zeros(f as usize + 1);
        members.set(0);
        Ok(FrobeniusCandidate { f, next: 1, members, gcd_members: 0, path: Vec::new() })
    }

    pub fn frobenius_target(&self) -> u32 {
        self.f
    }

    /// The members below `f` chosen or forced so far, excluding 0.
    pub fn chosen(&self) -> Vec<u32> {
        self.members.iter_ones().filter(|&i| i > 0).map(|i| i as u32).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.next >= self.f
    }

    /// Skip positions already forced in, so `next` points at a real branch
    /// point (or at `f` when complete).
    fn advance_forced(&mut self) {
        while self.next < self.f && self.members.get(self.next as usize) {
            self.next += 1;
        }
    }

    /// Children at the branch position, include-child first. The include
    /// branch is `None` when adding the element would force `f` itself.
    fn expand(&self) -> (Option<FrobeniusCandidate>, FrobeniusCandidate) {
        debug_assert!(!self.is_complete());
        debug_assert!(!self.members.get(self.next as usize));
        let x = self.next as usize;

        let mut exclude = self.clone();
        exclude.next += 1;
        exclude.path.push(false);

        let mut inc_members = self.members.clone();
        inc_members.set(x);
        inc_members.close_under_shift(x);
        let include = if inc_members.get(self.f as usize) {
            None
        } else {
            let mut c = self.clone();
            c.next += 1;
            c.gcd_members = gcd(c.gcd_members, x as u64);
            c.members = inc_members;
            c.path.push(true);
            Some(c)
        };
        (include, exclude)
    }
}

const CHARGE_BATCH: u64 = 1024;

/// Depth-first search engine over one candidate's subtree. State rows live in
/// a flat arena, one row per include-depth, so backtracking is a no-op and
/// including costs one row copy.
struct Searcher<'a, 'b> {
    f: usize,
    nbits: usize,
    words: usize,
    arena: Vec<u64>,
    ctx: &'a SearchContext<'b>,
    pending: u64,
}

impl<'a, 'b> Searcher<'a, 'b> {
    fn new(f: u32, ctx: &'a SearchContext<'b>) -> Self {
        let nbits = f as usize + 1;
        let words = bits::words_for(nbits);
        Searcher {
            f: f as usize,
            nbits,
            words,
            arena: vec![0u64; words * (f as usize + 1)],
            ctx,
            pending: 0,
        }
    }

    fn charge_node(&mut self) -> Result<()> {
        self.pending += 1;
        if self.pending >= CHARGE_BATCH {
            self.ctx.charge(core::mem::take(&mut self.pending))?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        if self.pending > 0 {
            self.ctx.charge(core::mem::take(&mut self.pending))?;
        }
        Ok(())
    }

    /// Copy row `r` into row `r+1`, insert `x` there and propagate forced
    /// sums. Returns whether the result avoids `f`.
    fn try_include(&mut self, r: usize, x: usize) -> bool {
        let w = self.words;
        let (lo, hi) = self.arena.split_at_mut((r + 1) * w);
        let src = &lo[r * w..(r + 1) * w];
        let dst = &mut hi[..w];
        dst.copy_from_slice(src);
        bits::slice_set(dst, x);
        bits::slice_close_under_shift(dst, x, self.nbits);
        !bits::slice_get(dst, self.f)
    }

    fn dfs<S>(&mut self, x: usize, r: usize, g: u64, sink: &mut S) -> Result<()>
    where
        S: FnMut(&[u64], u64) -> Result<()>,
    {
        self.charge_node()?;
        let w = self.words;
        if x >= self.f {
            let row = &self.arena[r * w..(r + 1) * w];
            return sink(row, g);
        }
        if bits::slice_get(&self.arena[r * w..(r + 1) * w], x) {
            return self.dfs(x + 1, r, g, sink);
        }
        if self.try_include(r, x) {
            self.dfs(x + 1, r + 1, gcd(g, x as u64), sink)?;
        }
        self.dfs(x + 1, r, g, sink)
    }
}

/// Run the raw search below `cand`, feeding each leaf's membership row and
/// member gcd to `sink`.
fn search_from<S>(cand: &FrobeniusCandidate, ctx: &SearchContext<'_>, sink: &mut S) -> Result<()>
where
    S: FnMut(&[u64], u64) -> Result<()>,
{
    ctx.admit(cand.f)?;
    let mut searcher = Searcher::new(cand.f, ctx);
    searcher.arena[..searcher.words].copy_from_slice(cand.members.words());
    let result = searcher.dfs(cand.next as usize, 0, cand.gcd_members, sink);
    searcher.flush()?;
    result
}

fn semigroup_from_row(f: u32, row: &[u64]) -> NumericalSemigroup {
    let low = Bits::from_words(row.to_vec(), f as usize + 1);
    NumericalSemigroup::from_parts(f, &low)
}

/// Visit every semigroup with Frobenius number exactly `f`, in canonical
/// (include-first) order; returns the class size.
pub fn enumerate_by_frobenius<V>(f: u32, ctx: &SearchContext<'_>, visit: V) -> Result<u64>
where
    V: FnMut(&NumericalSemigroup),
{
    enumerate_candidate(&FrobeniusCandidate::root(f)?, ctx, visit)
}

/// Visit the subtree of one search prefix; used by parallel drivers.
pub fn enumerate_candidate<V>(
    cand: &FrobeniusCandidate,
    ctx: &SearchContext<'_>,
    mut visit: V,
) -> Result<u64>
where
    V: FnMut(&NumericalSemigroup),
{
    let mut count = 0u64;
    search_from(cand, ctx, &mut |row, _g| {
        let s = semigroup_from_row(cand.f, row);
        count += 1;
        visit(&s);
        Ok(())
    })?;
    Ok(count)
}

/// Class size of the Frobenius-`f` semigroups, without materializing them.
pub fn count_by_frobenius(f: u32, ctx: &SearchContext<'_>) -> Result<u64> {
    let root = FrobeniusCandidate::root(f)?;
    let mut count = 0u64;
    search_from(&root, ctx, &mut |_row, _g| {
        count += 1;
        Ok(())
    })?;
    Ok(count)
}

/// Per-divisor class sizes over one search prefix: `d -> #leaves` with
/// extended-left gcd `d`. Keys cover every divisor of `f`, including empty
/// classes, so partition sums are visible directly.
pub fn count_candidate_partitioned(
    cand: &FrobeniusCandidate,
    ctx: &SearchContext<'_>,
) -> Result<BTreeMap<u32, u64>> {
    let f = cand.f;
    let mut by_gcd: BTreeMap<u32, u64> = divisors_of(f).into_iter().map(|d| (d, 0)).collect();
    search_from(cand, ctx, &mut |_row, g| {
        let d = gcd(g, u64::from(f)) as u32;
        *by_gcd.get_mut(&d).expect("extended-left gcd always divides f") += 1;
        Ok(())
    })?;
    Ok(by_gcd)
}

/// Partition of the Frobenius-`f` count by extended-left gcd.
pub fn count_by_frobenius_partitioned(f: u32, ctx: &SearchContext<'_>) -> Result<BTreeMap<u32, u64>> {
    count_candidate_partitioned(&FrobeniusCandidate::root(f)?, ctx)
}

/// The partition itself: every divisor of `f` mapped to its class, in
/// canonical order within each class. Classes can be empty (`d = 1` at
/// `f = 2` is the standard example).
pub fn enumerate_by_frobenius_partitioned(
    f: u32,
    ctx: &SearchContext<'_>,
) -> Result<BTreeMap<u32, Vec<NumericalSemigroup>>> {
    let mut classes: BTreeMap<u32, Vec<NumericalSemigroup>> =
        divisors_of(f).into_iter().map(|d| (d, Vec::new())).collect();
    search_from(&FrobeniusCandidate::root(f)?, ctx, &mut |row, g| {
        let s = semigroup_from_row(f, row);
        let d = gcd(g, u64::from(f)) as u32;
        classes.get_mut(&d).expect("extended-left gcd always divides f").push(s);
        Ok(())
    })?;
    Ok(classes)
}

/// Visit every semigroup whose maximum primitive is exactly `n`; returns the
/// class size (0 for `n = 2`). Each visited semigroup is re-verified to have
/// maximum primitive `n`.
pub fn enumerate_by_max_primitive<V>(n: u32, ctx: &SearchContext<'_>, mut visit: V) -> Result<u64>
where
    V: FnMut(&NumericalSemigroup),
{
    let node_cap = ctx.budget().node_cap;
    let mut count = 0u64;
    search_from(&FrobeniusCandidate::root(n)?, ctx, &mut |row, g| {
        if gcd(g, u64::from(n)) != 1 {
            return Ok(());
        }
        // Pull the leaf back through the max-primitive correspondence: close
        // its extended left elements (low members plus n itself).
        let mut gens: Vec<u32> =
            Bits::from_words(row.to_vec(), n as usize + 1).iter_ones().skip(1).map(|i| i as u32).collect();
        gens.push(n);
        let s = closure_of(&gens, node_cap)?;
        assert_eq!(s.max_primitive(), n, "pullback produced a wrong maximum primitive");
        count += 1;
        visit(&s);
        Ok(())
    })?;
    Ok(count)
}

/// Class size for maximum primitive `n` without constructing the semigroups:
/// the preimages correspond one-to-one to unit-gcd Frobenius-`n` leaves.
pub fn count_by_max_primitive(n: u32, ctx: &SearchContext<'_>) -> Result<u64> {
    let mut count = 0u64;
    search_from(&FrobeniusCandidate::root(n)?, ctx, &mut |_row, g| {
        if gcd(g, u64::from(n)) == 1 {
            count += 1;
        }
        Ok(())
    })?;
    Ok(count)
}

/// Visit every semigroup of genus `g` via the semigroup tree; returns the
/// count. Intended as a cross-check oracle at small genus.
pub fn enumerate_by_genus<V>(g: u32, ctx: &SearchContext<'_>, mut visit: V) -> Result<u64>
where
    V: FnMut(&NumericalSemigroup),
{
    ctx.admit(g)?;
    let mut count = 0u64;
    let mut pending = 0u64;
    genus_walk(&NumericalSemigroup::naturals(), g, ctx, &mut visit, &mut count, &mut pending)?;
    ctx.charge(pending)?;
    Ok(count)
}

fn genus_walk<V>(
    s: &NumericalSemigroup,
    depth_left: u32,
    ctx: &SearchContext<'_>,
    visit: &mut V,
    count: &mut u64,
    pending: &mut u64,
) -> Result<()>
where
    V: FnMut(&NumericalSemigroup),
{
    *pending += 1;
    if *pending >= 256 {
        ctx.charge(core::mem::take(pending))?;
    }
    if depth_left == 0 {
        *count += 1;
        visit(s);
        return Ok(());
    }
    for &p in s.primitives() {
        if i64::from(p) > s.frobenius() {
            let child = s.remove_primitive(p);
            genus_walk(&child, depth_left - 1, ctx, visit, count, pending)?;
        }
    }
    Ok(())
}

/// Split the Frobenius-`f` search space into at least `k` (when possible)
/// disjoint prefixes whose subtrees jointly cover the whole space. Prefixes
/// come back in canonical order, so concatenating per-prefix results in order
/// reproduces the sequential enumeration exactly.
pub fn split_for_parallel(f: u32, k: usize, ctx: &SearchContext<'_>) -> Result<Vec<FrobeniusCandidate>> {
    ctx.admit(f)?;
    let k = k.max(1);
    let mut frontier = VecDeque::new();
    let mut complete: Vec<FrobeniusCandidate> = Vec::new();
    let mut root = FrobeniusCandidate::root(f)?;
    root.advance_forced();
    frontier.push_back(root);
    while frontier.len() + complete.len() < k {
        let Some(cand) = frontier.pop_front() else {
            break;
        };
        ctx.charge(1)?;
        if cand.is_complete() {
            complete.push(cand);
            continue;
        }
        let (include, exclude) = cand.expand();
        if let Some(mut inc) = include {
            inc.advance_forced();
            frontier.push_back(inc);
        }
        let mut exc = exclude;
        exc.advance_forced();
        frontier.push_back(exc);
    }
    let mut out: Vec<FrobeniusCandidate> = complete.into_iter().chain(frontier).collect();
    // include-first lexicographic order on branch paths
    out.sort_by(|a, b| {
        let ka = a.path.iter().map(|&inc| u8::from(!inc));
        let kb = b.path.iter().map(|&inc| u8::from(!inc));
        ka.cmp(kb)
    });
    Ok(out)
}
