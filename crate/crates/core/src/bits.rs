//! Packed bit vectors for dense membership tables.
//!
//! Everything here works on `u64` words. The single operation that matters
//! for performance is the truncated shift-or `w |= w << k`, which implements
//! one layer of sumset closure: if bit `i` means "i is a member", then
//! `w | (w << k)` marks every `i + k` reachable from a member `i`.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

pub(crate) fn slice_get(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] & (1u64 << (i % WORD_BITS)) != 0
}

pub(crate) fn slice_set(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

/// Mask selecting the valid bits of the last word of an `nbits`-wide vector.
fn tail_mask(nbits: usize) -> u64 {
    match nbits % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// In-place truncated shift-or: `words |= words << k`, keeping only the low
/// `nbits` positions. Returns whether any new bit appeared.
pub(crate) fn slice_shl_or(words: &mut [u64], k: usize, nbits: usize) -> bool {
    debug_assert!(k > 0);
    if k >= nbits {
        return false;
    }
    let nw = words_for(nbits);
    let wk = k / WORD_BITS;
    let bk = k % WORD_BITS;
    let tm = tail_mask(nbits);
    let mut changed = 0u64;
    // High-to-low keeps source words unmodified until read.
    for i in (wk..nw).rev() {
        let lo = words[i - wk];
        let mut add = if bk == 0 {
            lo
        } else {
            let hi = if i > wk { words[i - wk - 1] } else { 0 };
            (lo << bk) | (hi >> (WORD_BITS - bk))
        };
        if i == nw - 1 {
            add &= tm;
        }
        changed |= add & !words[i];
        words[i] |= add;
    }
    changed != 0
}

/// Close `words` (truncated to `nbits`) under repeated addition of `k`:
/// afterwards it contains every `j*k + m <= nbits-1` with `m` a set bit.
/// Doubling the shift needs only O(log(nbits/k)) passes; an unproductive
/// pass implies all further multiples are already present.
pub(crate) fn slice_close_under_shift(words: &mut [u64], k: usize, nbits: usize) {
    let mut shift = k;
    while shift < nbits {
        if !slice_shl_or(words, shift, nbits) {
            break;
        }
        shift *= 2;
    }
}

/// Growable bit vector with a fixed logical length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits {
    nbits: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(nbits: usize) -> Self {
        Bits { nbits, words: vec![0u64; words_for(nbits)] }
    }

    pub fn from_words(words: Vec<u64>, nbits: usize) -> Self {
        debug_assert_eq!(words.len(), words_for(nbits));
        let mut b = Bits { nbits, words };
        let tm = tail_mask(nbits);
        if let Some(last) = b.words.last_mut() {
            *last &= tm;
        }
        b
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        slice_get(&self.words, i)
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        slice_set(&mut self.words, i);
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Number of set bits strictly below position `limit`.
    pub fn count_ones_below(&self, limit: usize) -> u64 {
        let limit = limit.min(self.nbits);
        let full = limit / WORD_BITS;
        let mut total: u64 = self.words[..full].iter().map(|w| u64::from(w.count_ones())).sum();
        let rem = limit % WORD_BITS;
        if rem > 0 {
            total += u64::from((self.words[full] & ((1u64 << rem) - 1)).count_ones());
        }
        total
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Iterate positions of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Close under repeated addition of `k`; see [`slice_close_under_shift`].
    pub fn close_under_shift(&mut self, k: usize) {
        let nbits = self.nbits;
        slice_close_under_shift(&mut self.words, k, nbits);
    }

    /// `self |= other << k`, truncated to `self.len()`.
    pub fn or_shifted(&mut self, other: &Bits, k: usize) {
        let nbits = self.nbits;
        if k >= nbits {
            return;
        }
        let nw = self.words.len();
        let wk = k / WORD_BITS;
        let bk = k % WORD_BITS;
        for i in wk..nw {
            let lo = other.words.get(i - wk).copied().unwrap_or(0);
            let hi = if bk > 0 && i > wk { other.words.get(i - wk - 1).copied().unwrap_or(0) } else { 0 };
            let add = if bk == 0 { lo } else { (lo << bk) | (hi >> (WORD_BITS - bk)) };
            self.words[i] |= add;
        }
        let tm = tail_mask(nbits);
        if let Some(last) = self.words.last_mut() {
            *last &= tm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn close_under_shift_reaches_all_multiples() {
        // start with {0}; closing under +3 within [0, 10] gives {0,3,6,9}
        let nbits = 11;
        let mut w = vec![0u64; words_for(nbits)];
        slice_set(&mut w, 0);
        slice_close_under_shift(&mut w, 3, nbits);
        let got: Vec<usize> = (0..nbits).filter(|&i| slice_get(&w, i)).collect();
        assert_eq!(got, vec![0, 3, 6, 9]);
    }

    #[test]
    fn close_under_shift_long_range() {
        // {0, 7} closed under +2 over [0, 300]: evens plus odds from 7 up
        let nbits = 301;
        let mut w = vec![0u64; words_for(nbits)];
        slice_set(&mut w, 0);
        slice_set(&mut w, 7);
        slice_close_under_shift(&mut w, 2, nbits);
        for i in 0..nbits {
            let expect = i % 2 == 0 || i >= 7;
            assert_eq!(slice_get(&w, i), expect, "bit {i}");
        }
    }

    #[test]
    fn shl_or_multi_word() {
        let nbits = 200;
        let mut w = vec![0u64; words_for(nbits)];
        slice_set(&mut w, 0);
        slice_set(&mut w, 63);
        slice_set(&mut w, 64);
        assert!(slice_shl_or(&mut w, 70, nbits));
        assert!(slice_get(&w, 70));
        assert!(slice_get(&w, 133));
        assert!(slice_get(&w, 134));
        assert!(!slice_get(&w, 71));
    }

    #[test]
    fn truncation_is_silent() {
        let nbits = 10;
        let mut w = vec![0u64; words_for(nbits)];
        slice_set(&mut w, 8);
        // shifting by 5 pushes 13 past the end; nothing inside changes
        assert!(!slice_shl_or(&mut w, 5, nbits));
        assert_eq!(w[0], 1 << 8);
    }

    #[test]
    fn bits_iter_and_counts() {
        let mut b = Bits::zeros(130);
        for i in [0usize, 5, 63, 64, 129] {
            b.set(i);
        }
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 5, 63, 64, 129]);
        assert_eq!(b.count_ones(), 5);
        assert_eq!(b.count_ones_below(64), 3);
        assert_eq!(b.count_ones_below(129), 4);
    }

    #[test]
    fn or_shifted_between_vectors() {
        let mut a = Bits::zeros(40);
        let mut b = Bits::zeros(40);
        b.set(0);
        b.set(7);
        a.or_shifted(&b, 10);
        assert_eq!(a.iter_ones().collect::<Vec<_>>(), vec![10, 17]);
    }
}
