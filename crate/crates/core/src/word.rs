//! Binary words and the combinatorial primitives the code constructions
//! are built from: runs, periodic subvectors, deletions, sticky insertions,
//! period-check vectors and prefix comparison.
//!
//! Positions are 1-indexed throughout the public API. The empty word is a
//! legal value; it only shows up as an intermediate during splicing and
//! bijections, never as a codeword.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An immutable binary word.
///
/// Words order lexicographically, with a strict prefix sorting before any
/// word that extends it.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word { bits: Vec::new() }
    }

    /// Builds a word from raw symbols, each of which must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(format!("symbol {bad} is not binary")));
        }
        Ok(Word {
            bits: bits.to_vec(),
        })
    }

    /// The `n`-bit big-endian expansion of `value`; position 1 holds the
    /// most significant bit.
    pub fn from_uint(value: u64, n: usize) -> Self {
        assert!(n <= 64, "from_uint supports at most 64 bits");
        let bits = (0..n)
            .map(|k| ((value >> (n - 1 - k)) & 1) as u8)
            .collect();
        Word { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The raw symbols, most significant (position 1) first.
    pub fn as_bits(&self) -> &[u8] {
        &self.bits
    }

    /// Symbol at 1-indexed `pos`, or `None` when out of range.
    pub fn get(&self, pos: usize) -> Option<u8> {
        if pos == 0 {
            None
        } else {
            self.bits.get(pos - 1).copied()
        }
    }

    /// Symbol at 1-indexed `pos`; panics when out of range.
    pub(crate) fn bit(&self, pos: usize) -> u8 {
        self.bits[pos - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.bits.iter().copied()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bits = Vec::with_capacity(self.len() + other.len());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(&other.bits);
        Word { bits }
    }

    /// The subvector spanning positions `i1..=i2` (1-indexed, inclusive).
    pub fn subword(&self, i1: usize, i2: usize) -> Result<Word> {
        if i1 < 1 || i1 > i2 || i2 > self.len() {
            return Err(Error::Range {
                i1,
                i2,
                len: self.len(),
            });
        }
        Ok(Word {
            bits: self.bits[i1 - 1..i2].to_vec(),
        })
    }

    /// Length of the longest subvector with period `ell`, i.e. the largest
    /// window where every symbol equals the one `ell` places later.
    ///
    /// Any window of length `ell` has period `ell` vacuously, so the result
    /// is at least `ell`. Period 1 recovers the longest run length.
    pub fn longest_periodic(&self, ell: usize) -> Result<usize> {
        let n = self.len();
        if ell < 1 || ell > n {
            return Err(Error::Period {
                period: ell,
                len: n,
            });
        }
        let mut best = ell;
        // Consecutive positions p satisfying u_p == u_{p-ell} extend a
        // periodic window by one each.
        let mut matched = 0usize;
        for p in ell + 1..=n {
            if self.bit(p) == self.bit(p - ell) {
                matched += 1;
                best = best.max(ell + matched);
            } else {
                matched = 0;
            }
        }
        Ok(best)
    }

    /// Length of the longest run of equal symbols; 0 for the empty word.
    pub fn longest_run(&self) -> usize {
        let mut best = 0usize;
        let mut cur = 0usize;
        let mut prev = 2u8;
        for &b in &self.bits {
            if b == prev {
                cur += 1;
            } else {
                cur = 1;
                prev = b;
            }
            best = best.max(cur);
        }
        best
    }

    /// Length of the longest run of zeros; 0 when there are none.
    pub fn longest_zero_run(&self) -> usize {
        let mut best = 0usize;
        let mut cur = 0usize;
        for &b in &self.bits {
            if b == 0 {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }

    /// Removes the distinct 1-indexed `positions`, preserving the order of
    /// the surviving symbols.
    pub fn delete(&self, positions: &[usize]) -> Result<Word> {
        let n = self.len();
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::Duplicate { pos: pair[0] });
            }
        }
        if let Some(&pos) = sorted.iter().find(|&&p| p < 1 || p > n) {
            return Err(Error::Position { pos, len: n });
        }
        let mut bits = Vec::with_capacity(n - sorted.len());
        let mut cut = sorted.iter().peekable();
        for p in 1..=n {
            if cut.peek() == Some(&&p) {
                cut.next();
            } else {
                bits.push(self.bit(p));
            }
        }
        Ok(Word { bits })
    }

    /// Removes the `b` consecutive symbols starting at position `i`.
    pub fn delete_burst(&self, i: usize, b: usize) -> Result<Word> {
        let n = self.len();
        if b < 1 || i < 1 || i + b - 1 > n {
            return Err(Error::Burst {
                pos: i,
                len: b,
                word_len: n,
            });
        }
        let mut bits = Vec::with_capacity(n - b);
        bits.extend_from_slice(&self.bits[..i - 1]);
        bits.extend_from_slice(&self.bits[i + b - 1..]);
        Ok(Word { bits })
    }

    /// Re-reads the symbol at position `i` another `s` times: the output is
    /// the word with `s` extra copies of that symbol inserted right after
    /// it, which models a shift that failed `s` cycles in a row.
    pub fn sticky_insert(&self, i: usize, s: usize) -> Result<Word> {
        let n = self.len();
        if i < 1 || i > n {
            return Err(Error::Position { pos: i, len: n });
        }
        if s < 1 {
            return Err(Error::Parse("sticky repeat count must be >= 1".into()));
        }
        let mut bits = Vec::with_capacity(n + s);
        bits.extend_from_slice(&self.bits[..i]);
        bits.extend(std::iter::repeat(self.bit(i)).take(s));
        bits.extend_from_slice(&self.bits[i..]);
        Ok(Word { bits })
    }

    /// The `b`-period check vector: componentwise binary sum of the word
    /// with its own `b`-shift. Zeros mark period-`b` structure.
    pub fn period_check(&self, b: usize) -> Result<Word> {
        let m = self.len();
        if b < 1 || b >= m {
            return Err(Error::Period { period: b, len: m });
        }
        let bits = (1..=m - b).map(|p| self.bit(p) ^ self.bit(p + b)).collect();
        Ok(Word { bits })
    }

    /// Smallest position where the two words disagree. A strict prefix
    /// differs from the longer word at the first position past its own
    /// end; `None` means the words are identical.
    pub fn leftmost_diff(&self, other: &Word) -> Option<usize> {
        let common = self.len().min(other.len());
        for p in 1..=common {
            if self.bit(p) != other.bit(p) {
                return Some(p);
            }
        }
        if self.len() == other.len() {
            None
        } else {
            Some(common + 1)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::Parse(format!("invalid word symbol {c:?}"))),
            }
        }
        Ok(Word { bits })
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// All binary words of length `n`, lexicographic order.
    fn all_words(n: usize) -> Vec<Word> {
        (0..1u64 << n).map(|v| Word::from_uint(v, n)).collect()
    }

    /// Independent subsequence test used as the oracle for delete.
    fn is_subsequence(needle: &Word, hay: &Word) -> bool {
        let mut it = hay.iter();
        needle.iter().all(|b| it.by_ref().any(|h| h == b))
    }

    #[test]
    fn subword_fixtures() {
        let u = w("001101011");
        assert_eq!(u.subword(4, 8).unwrap(), w("10101"));
        assert_eq!(w("01").subword(1, 2).unwrap(), w("01"));
        assert_eq!(w("011").subword(2, 2).unwrap(), w("1"));
        assert!(matches!(u.subword(4, 10), Err(Error::Range { .. })));
        assert!(matches!(u.subword(0, 3), Err(Error::Range { .. })));
        assert!(matches!(u.subword(5, 4), Err(Error::Range { .. })));
    }

    #[test]
    fn longest_periodic_fixtures() {
        let u = w("001101011");
        assert_eq!(u.longest_periodic(1).unwrap(), 2);
        assert_eq!(u.longest_periodic(2).unwrap(), 5);
        assert_eq!(u.longest_periodic(9).unwrap(), 9);
        assert!(matches!(
            u.longest_periodic(10),
            Err(Error::Period { .. })
        ));
        assert!(matches!(u.longest_periodic(0), Err(Error::Period { .. })));
    }

    #[test]
    fn longest_periodic_1_equals_longest_run_exhaustive() {
        for n in 1..=16 {
            for v in 0..1u64 << n.min(16) {
                let u = Word::from_uint(v, n);
                assert_eq!(u.longest_periodic(1).unwrap(), u.longest_run());
            }
        }
    }

    #[test]
    fn longest_zero_run_fixtures() {
        assert_eq!(w("0110100010").longest_zero_run(), 3);
        assert_eq!(w("11111").longest_zero_run(), 0);
        assert_eq!(w("0000000").longest_zero_run(), 7);
        assert_eq!(Word::empty().longest_zero_run(), 0);
    }

    #[test]
    fn delete_fixtures() {
        let u = w("001101011");
        assert_eq!(u.delete(&[4]).unwrap(), w("00101011"));
        assert_eq!(u.delete(&[4, 7, 9]).unwrap(), w("001011"));
        assert_eq!(u.delete(&[]).unwrap(), u);
        assert!(matches!(u.delete(&[4, 4]), Err(Error::Duplicate { .. })));
        assert!(matches!(u.delete(&[10]), Err(Error::Position { .. })));
        assert!(matches!(u.delete(&[0]), Err(Error::Position { .. })));
    }

    #[test]
    fn delete_burst_fixtures() {
        let u = w("001101011");
        assert_eq!(u.delete_burst(3, 4).unwrap(), w("00011"));
        assert_eq!(w("10").delete_burst(1, 2).unwrap(), Word::empty());
        assert!(matches!(u.delete_burst(8, 3), Err(Error::Burst { .. })));
        assert!(matches!(u.delete_burst(1, 0), Err(Error::Burst { .. })));
    }

    #[test]
    fn delete_burst_matches_delete_exhaustive() {
        for n in 1..=10usize {
            for u in all_words(n) {
                for i in 1..=n {
                    for b in 1..=n - i + 1 {
                        let positions: Vec<usize> = (i..i + b).collect();
                        assert_eq!(
                            u.delete_burst(i, b).unwrap(),
                            u.delete(&positions).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn delete_is_order_preserving_exhaustive() {
        for n in 1..=10usize {
            for u in all_words(n) {
                for mask in 0u32..1 << n {
                    let positions: Vec<usize> =
                        (1..=n).filter(|p| mask >> (p - 1) & 1 == 1).collect();
                    let out = u.delete(&positions).unwrap();
                    assert!(is_subsequence(&out, &u));
                    assert_eq!(out.len(), n - positions.len());
                }
            }
        }
    }

    #[test]
    fn sticky_insert_fixtures() {
        assert_eq!(w("01").sticky_insert(1, 1).unwrap(), w("001"));
        assert_eq!(
            w("001101011").sticky_insert(3, 1).unwrap(),
            w("0011101011")
        );
        assert!(matches!(
            w("01").sticky_insert(3, 1),
            Err(Error::Position { .. })
        ));
        assert!(matches!(w("01").sticky_insert(1, 0), Err(Error::Parse(_))));
    }

    #[test]
    fn sticky_insert_extends_a_run_exhaustive() {
        for n in 1..=10usize {
            for u in all_words(n) {
                for i in 1..=n {
                    for s in 1..=2usize {
                        let out = u.sticky_insert(i, s).unwrap();
                        assert_eq!(out.len(), n + s);
                        // the inserted copies sit in one run with position i
                        let v = u.bit(i);
                        for p in i..=i + s {
                            assert_eq!(out.bit(p), v);
                        }
                        // deleting any one of the inserted copies undoes s=1
                        if s == 1 {
                            assert_eq!(out.delete(&[i + 1]).unwrap(), u);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn period_check_fixtures() {
        // direct evaluation: (0+0, 0+1, 1+1, 1+0) = (0,1,0,1)
        assert_eq!(w("00110").period_check(1).unwrap(), w("0101"));
        assert_eq!(w("000000").period_check(2).unwrap(), w("0000"));
        assert!(matches!(
            w("0011").period_check(4),
            Err(Error::Period { .. })
        ));
        assert!(matches!(
            w("0011").period_check(0),
            Err(Error::Period { .. })
        ));
    }

    #[test]
    fn period_check_run_equivalence_exhaustive() {
        // A word has a period-b subvector of length t > b exactly when its
        // b-period check vector has a run of t-b zeros.
        for n in 2..=12usize {
            for u in all_words(n) {
                for b in 1..=3.min(n - 1) {
                    let check = u.period_check(b).unwrap();
                    let lp = u.longest_periodic(b).unwrap();
                    for th in b + 1..=n {
                        let has_period_t = lp >= th;
                        let has_zero_run = check.longest_zero_run() >= th - b;
                        assert_eq!(has_period_t, has_zero_run, "u={u} b={b} t={th}");
                    }
                }
            }
        }
    }

    #[test]
    fn leftmost_diff_fixtures() {
        assert_eq!(
            w("00101011").leftmost_diff(&w("00110011")),
            Some(4)
        );
        assert_eq!(w("0101").leftmost_diff(&w("0101")), None);
        assert_eq!(w("01").leftmost_diff(&w("011")), Some(3));
        assert_eq!(Word::empty().leftmost_diff(&w("1")), Some(1));
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["", "0", "1", "001101011"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert!("01x".parse::<Word>().is_err());
        assert!(Word::from_bits(&[0, 1, 2]).is_err());
    }

    proptest! {
        #[test]
        fn prop_delete_yields_subsequence(bits in proptest::collection::vec(0u8..2, 0..40),
                                          mask in proptest::collection::vec(any::<bool>(), 0..40)) {
            let u = Word::from_bits(&bits).unwrap();
            let positions: Vec<usize> = (1..=u.len())
                .filter(|&p| mask.get(p - 1).copied().unwrap_or(false))
                .collect();
            let out = u.delete(&positions).unwrap();
            prop_assert!(is_subsequence(&out, &u));
        }

        #[test]
        fn prop_leftmost_diff_symmetric(a in proptest::collection::vec(0u8..2, 0..24),
                                        b in proptest::collection::vec(0u8..2, 0..24)) {
            let u = Word::from_bits(&a).unwrap();
            let v = Word::from_bits(&b).unwrap();
            prop_assert_eq!(u.leftmost_diff(&v), v.leftmost_diff(&u));
        }

        #[test]
        fn prop_sticky_then_delete_roundtrip(bits in proptest::collection::vec(0u8..2, 1..40),
                                             i in 1usize..40) {
            let u = Word::from_bits(&bits).unwrap();
            let i = 1 + (i - 1) % u.len();
            let out = u.sticky_insert(i, 1).unwrap();
            prop_assert_eq!(out.delete(&[i + 1]).unwrap(), u);
        }
    }
}
