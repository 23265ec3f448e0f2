//! Exact arithmetic on k-ary tuples: negation, pseudoweight, rotations and
//! canonical forms.
//!
//! A [`KTuple`] is an ordered word over the residues `0..k`.  The same type
//! serves as a sequence window, a graph vertex and a graph edge, so equality
//! is strictly structural: two tuples are equal iff both the alphabet size
//! and every entry match.

use std::fmt;

use crate::error::{Error, Result};

/// A fixed-length word over `Z_k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTuple {
    k: u16,
    entries: Vec<u16>,
}

/// Twice the pseudoweight of a tuple.
///
/// The pseudoweight counts a nonzero entry `u` as `u` and a zero entry as
/// `k/2`, so it is a half-integer at worst.  Doubling keeps every comparison
/// an exact integer comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pseudoweight2(pub u64);

impl Pseudoweight2 {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl KTuple {
    /// Builds a tuple, checking that `k >= 2`, the word is non-empty and
    /// every entry is a canonical residue in `[0, k)`.
    pub fn new(k: u16, entries: Vec<u16>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("alphabet size {k} < 2")));
        }
        if entries.is_empty() {
            return Err(Error::InvalidParams("empty tuple".into()));
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= k) {
            return Err(Error::InvalidParams(format!(
                "entry {e} out of range for alphabet size {k}"
            )));
        }
        Ok(KTuple { k, entries })
    }

    /// Internal constructor for entries already known to be reduced mod `k`.
    pub(crate) fn new_unchecked(k: u16, entries: Vec<u16>) -> Self {
        debug_assert!(k >= 2 && !entries.is_empty());
        debug_assert!(entries.iter().all(|&e| e < k));
        KTuple { k, entries }
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    /// Entrywise negation mod k: entry `e` becomes `(k - e) mod k`.
    pub fn negated(&self) -> KTuple {
        let k = self.k;
        let entries = self
            .entries
            .iter()
            .map(|&e| if e == 0 { 0 } else { k - e })
            .collect();
        KTuple { k, entries }
    }

    /// Entrywise complement: entry `e` becomes `k - 1 - e`.  For `k = 2`
    /// this is the usual bitwise complement.
    pub fn complemented(&self) -> KTuple {
        let k = self.k;
        let entries = self.entries.iter().map(|&e| k - 1 - e).collect();
        KTuple { k, entries }
    }

    /// True iff the tuple equals its own negation, i.e. every entry is 0 or
    /// (for even k) k/2.
    pub fn is_self_negative(&self) -> bool {
        let half = if self.k % 2 == 0 { Some(self.k / 2) } else { None };
        self.entries
            .iter()
            .all(|&e| e == 0 || Some(e) == half)
    }

    /// Twice the pseudoweight: a nonzero entry `u` contributes `2u`, a zero
    /// entry contributes `k`.
    pub fn pseudoweight2(&self) -> Pseudoweight2 {
        let k = self.k as u64;
        let sum = self
            .entries
            .iter()
            .map(|&e| if e == 0 { k } else { 2 * e as u64 })
            .sum();
        Pseudoweight2(sum)
    }

    /// Number of nonzero entries.  Only meaningful work for the binary
    /// complement-avoiding construction.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// The smallest `c >= 1` with `t[i] == t[(i + c) mod n]` for all `i`.
    /// Always divides the length.
    pub fn rotation_period(&self) -> usize {
        let n = self.entries.len();
        for c in 1..=n {
            if n % c != 0 {
                continue;
            }
            if (0..n).all(|i| self.entries[i] == self.entries[(i + c) % n]) {
                return c;
            }
        }
        n
    }

    /// The tuple rotated left by `r` positions.
    pub fn rotated_left(&self, r: usize) -> KTuple {
        let n = self.entries.len();
        let r = r % n;
        let mut entries = Vec::with_capacity(n);
        entries.extend_from_slice(&self.entries[r..]);
        entries.extend_from_slice(&self.entries[..r]);
        KTuple {
            k: self.k,
            entries,
        }
    }

    /// The lexicographically least cyclic rotation.
    pub fn canonical_rotation(&self) -> KTuple {
        self.rotated_left(least_rotation_index(&self.entries))
    }

    /// The first `w` entries as a tuple (`1 <= w <= len`).
    pub(crate) fn prefix(&self, w: usize) -> KTuple {
        debug_assert!(w >= 1 && w <= self.entries.len());
        KTuple {
            k: self.k,
            entries: self.entries[..w].to_vec(),
        }
    }

    /// The last `w` entries as a tuple (`1 <= w <= len`).
    pub(crate) fn suffix(&self, w: usize) -> KTuple {
        debug_assert!(w >= 1 && w <= self.entries.len());
        KTuple {
            k: self.k,
            entries: self.entries[self.entries.len() - w..].to_vec(),
        }
    }

    /// Parses the space- or comma-separated textual form, or a compact digit
    /// string when `k <= 10`.
    pub fn parse(k: u16, text: &str) -> Result<Self> {
        let symbols = parse_symbols(k, text)?;
        KTuple::new(k, symbols)
    }

    /// Compact digit-string form, available only for `k <= 10`.
    pub fn compact_string(&self) -> Option<String> {
        compact_string(self.k, &self.entries)
    }
}

impl fmt::Display for KTuple {
    /// Space-separated decimal entries, e.g. `0 1 1 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Iterator over all `k^n` tuples in ascending lexicographic order.
pub fn enumerate(k: u16, n: usize) -> Tuples {
    Tuples {
        k,
        next: Some(vec![0; n]),
    }
}

pub struct Tuples {
    k: u16,
    next: Option<Vec<u16>>,
}

impl Iterator for Tuples {
    type Item = KTuple;

    fn next(&mut self) -> Option<KTuple> {
        let current = self.next.take()?;
        let mut following = current.clone();
        // odometer increment, least significant digit last
        let mut i = following.len();
        loop {
            if i == 0 {
                break; // wrapped past the most significant digit: done
            }
            i -= 1;
            if following[i] + 1 < self.k {
                following[i] += 1;
                self.next = Some(following);
                break;
            }
            following[i] = 0;
        }
        Some(KTuple::new_unchecked(self.k, current))
    }
}

/// Index of the lexicographically least rotation of `word` (Booth-style
/// duelling-candidates scan, linear time).
pub(crate) fn least_rotation_index(word: &[u16]) -> usize {
    let n = word.len();
    let at = |i: usize| word[i % n];
    let mut best = 0;
    let mut i = 1;
    let mut offset = 0;
    while best + offset < n && i + offset < 2 * n {
        let (a, b) = (at(best + offset), at(i + offset));
        if a == b {
            offset += 1;
            continue;
        }
        if a > b {
            best = (best + offset + 1).max(i);
            i = best + 1;
        } else {
            i = i + offset + 1;
        }
        offset = 0;
    }
    best
}

pub(crate) fn compact_string(k: u16, symbols: &[u16]) -> Option<String> {
    if k > 10 {
        return None;
    }
    Some(
        symbols
            .iter()
            .map(|&e| char::from(b'0' + e as u8))
            .collect(),
    )
}

/// Shared symbol parser for tuples and sequences: splits on whitespace and
/// commas; a single unseparated token over a small alphabet is read as a
/// compact digit string.
pub(crate) fn parse_symbols(k: u16, text: &str) -> Result<Vec<u16>> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::Parse("no symbols found".into()));
    }
    let symbols: Vec<u16> = if tokens.len() == 1 && k <= 10 && tokens[0].len() > 1 {
        tokens[0]
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u16)
                    .ok_or_else(|| Error::Parse(format!("invalid digit '{c}'")))
            })
            .collect::<Result<_>>()?
    } else {
        tokens
            .iter()
            .map(|t| {
                t.parse::<u16>()
                    .map_err(|_| Error::Parse(format!("invalid symbol '{t}'")))
            })
            .collect::<Result<_>>()?
    };
    if let Some(&s) = symbols.iter().find(|&&s| s >= k) {
        return Err(Error::Parse(format!(
            "symbol {s} out of range for alphabet size {k}"
        )));
    }
    Ok(symbols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: u16, entries: &[u16]) -> KTuple {
        KTuple::new(k, entries.to_vec()).unwrap()
    }

    #[test]
    fn negation_examples() {
        assert_eq!(t(3, &[0, 1, 2]).negated(), t(3, &[0, 2, 1]));
        assert_eq!(t(3, &[1, 2, 1, 2]).negated(), t(3, &[2, 1, 2, 1]));
        assert_eq!(t(4, &[0, 2, 0, 2]).negated(), t(4, &[0, 2, 0, 2]));
    }

    #[test]
    fn self_negative_examples() {
        assert!(t(3, &[0, 0, 0]).is_self_negative());
        assert!(t(4, &[0, 2, 2, 0]).is_self_negative());
        assert!(!t(3, &[0, 1, 0]).is_self_negative());
    }

    #[test]
    fn pseudoweight2_examples() {
        assert_eq!(t(3, &[0, 1, 1, 2]).pseudoweight2(), Pseudoweight2(11));
        assert_eq!(t(3, &[0, 0, 0]).pseudoweight2(), Pseudoweight2(9));
        assert_eq!(t(4, &[1, 1]).pseudoweight2(), Pseudoweight2(4));
    }

    #[test]
    fn rotation_period_examples() {
        assert_eq!(t(3, &[0, 0, 0]).rotation_period(), 1);
        assert_eq!(t(3, &[0, 1, 2]).rotation_period(), 3);
        assert_eq!(t(3, &[1, 2, 1, 2]).rotation_period(), 2);
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(t(3, &[2, 0, 1]).canonical_rotation(), t(3, &[0, 1, 2]));
        assert_eq!(t(3, &[0, 0, 0]).canonical_rotation(), t(3, &[0, 0, 0]));
        assert_eq!(t(3, &[1, 2, 0]).canonical_rotation(), t(3, &[0, 1, 2]));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(KTuple::new(1, vec![0]).is_err());
        assert!(KTuple::new(3, vec![]).is_err());
        assert!(KTuple::new(3, vec![0, 3]).is_err());
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        for k in [2u16, 3, 4] {
            for n in 1..=6 {
                for tuple in enumerate(k, n) {
                    let best = (0..n)
                        .map(|r| tuple.rotated_left(r))
                        .min()
                        .unwrap();
                    assert_eq!(tuple.canonical_rotation(), best, "tuple {tuple}");
                }
            }
        }
    }

    // Exhaustive invariants over every alphabet/length pair small enough to
    // enumerate completely.
    #[test]
    fn exhaustive_invariants() {
        for k in 3u16..=6 {
            for n in 1..=6 {
                if (k as u64).pow(n as u32) > 6561 {
                    continue;
                }
                for tuple in enumerate(k, n) {
                    assert_eq!(tuple.negated().negated(), tuple);
                    let pw = tuple.pseudoweight2().value();
                    let pw_neg = tuple.negated().pseudoweight2().value();
                    assert_eq!(pw + pw_neg, 2 * n as u64 * k as u64, "tuple {tuple}");
                    assert_eq!(tuple.is_self_negative(), tuple.negated() == tuple);
                    let p = tuple.rotation_period();
                    assert_eq!(n % p, 0);
                    assert_eq!(tuple.rotated_left(p), tuple);
                    let canon = tuple.canonical_rotation();
                    assert_eq!(canon.canonical_rotation(), canon);
                    assert_eq!(tuple.rotated_left(1).canonical_rotation(), canon);
                }
            }
        }
    }

    #[test]
    fn enumerate_is_sorted_and_complete() {
        let all: Vec<KTuple> = enumerate(3, 3).collect();
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(KTuple::parse(3, "0 1 1 2").unwrap(), t(3, &[0, 1, 1, 2]));
        assert_eq!(KTuple::parse(3, "0112").unwrap(), t(3, &[0, 1, 1, 2]));
        assert_eq!(KTuple::parse(3, "0,1,1,2").unwrap(), t(3, &[0, 1, 1, 2]));
        assert_eq!(KTuple::parse(12, "11 3").unwrap(), t(12, &[11, 3]));
        assert_eq!(KTuple::parse(12, "11").unwrap(), t(12, &[11]));
        assert!(KTuple::parse(3, "0 3").is_err());
        assert!(KTuple::parse(3, "").is_err());
        assert_eq!(t(3, &[0, 1, 1, 2]).to_string(), "0 1 1 2");
        assert_eq!(t(3, &[0, 1, 1, 2]).compact_string().unwrap(), "0112");
        assert_eq!(t(12, &[11, 3]).compact_string(), None);
    }
}
