//! Permutations of `[2n]`, D-permutation recognition, subclass membership,
//! and exhaustive enumeration by constrained backtracking.
//!
//! Everything is 1-indexed: `sigma(i)` and `sigma_inv(i)` take `1..=len`.
//! The empty permutation (`n = 0`) is a valid value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation in one-line notation with its cached inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
    inv: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut inv = vec![0u32; n];
        for (i, &v) in word.iter().enumerate() {
            if v < 1 || v as usize > n || inv[v as usize - 1] != 0 {
                return Err(Error::NotAPermutation(n));
            }
            inv[v as usize - 1] = (i + 1) as u32;
        }
        Ok(Permutation { word, inv })
    }

    pub fn identity(n: usize) -> Self {
        let word: Vec<u32> = (1..=n as u32).collect();
        Permutation {
            inv: word.clone(),
            word,
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Half the ground-set size; errors on odd length.
    pub fn n_half(&self) -> Result<usize> {
        if self.word.len() % 2 != 0 {
            return Err(Error::OddLength(self.word.len()));
        }
        Ok(self.word.len() / 2)
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn sigma(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    /// `sigma^{-1}(i)` for 1-based `i`.
    pub fn sigma_inv(&self, i: usize) -> u32 {
        self.inv[i - 1]
    }

    /// D-permutation test: `sigma(2k-1) >= 2k-1` and `sigma(2k) <= 2k`.
    /// Odd-length input is a length-parity error.
    pub fn is_d_permutation(&self) -> Result<bool> {
        self.n_half()?;
        Ok(self.word.iter().enumerate().all(|(i0, &v)| {
            let i = (i0 + 1) as u32;
            if i % 2 == 1 {
                v >= i
            } else {
                v <= i
            }
        }))
    }

    pub fn is_fixed_point(&self, i: usize) -> bool {
        self.sigma(i) as usize == i
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(move |&i| self.is_fixed_point(i))
    }

    /// Record = left-to-right maximum.
    pub fn record_positions(&self) -> Vec<bool> {
        let mut out = vec![false; self.len()];
        let mut best = 0u32;
        for (i, &v) in self.word.iter().enumerate() {
            if v > best {
                out[i] = true;
                best = v;
            }
        }
        out
    }

    /// Antirecord = right-to-left minimum.
    pub fn antirecord_positions(&self) -> Vec<bool> {
        let mut out = vec![false; self.len()];
        let mut best = u32::MAX;
        for i in (0..self.len()).rev() {
            if self.word[i] < best {
                out[i] = true;
                best = self.word[i];
            }
        }
        out
    }

    /// Cycle decomposition; each cycle starts at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                c.push(j as u32);
                j = self.sigma(j) as usize;
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// `R o sigma o R` with `R(i) = 2n+1-i`. Takes D-permutations to
    /// D-permutations and swaps e-semiderangements with o-semiderangements.
    pub fn reversal_conjugate(&self) -> Permutation {
        let n = self.len() as u32;
        let word: Vec<u32> = (1..=n)
            .map(|i| n + 1 - self.sigma((n + 1 - i) as usize))
            .collect();
        Permutation::new(word).expect("conjugate of a permutation is a permutation")
    }

    pub fn class_membership(&self, class: DClass) -> bool {
        match class {
            DClass::All => true,
            DClass::ESemi => self.fixed_points().all(|i| i % 2 == 1),
            DClass::OSemi => self.fixed_points().all(|i| i % 2 == 0),
            DClass::Derangement => self.fixed_points().next().is_none(),
            DClass::Cycle => !self.is_empty() && self.cycle_count() == 1,
            DClass::Pure => {
                let rec = self.record_positions();
                let arec = self.antirecord_positions();
                !rec.iter().zip(&arec).any(|(&r, &a)| r && a)
            }
        }
    }
}

impl fmt::Display for Permutation {
    /// Compact digits when all values are single-digit, else space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "()");
        }
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", strs.join(" "))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3142`, `3 1 4 2`, or `3,1,4,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Permutation::new(Vec::new());
        }
        let vals: Vec<u32> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad digit `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(vals)
    }
}

/// The D-permutation subclasses of the class-count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DClass {
    /// All D-permutations.
    All,
    /// No even fixed points.
    ESemi,
    /// No odd fixed points.
    OSemi,
    /// No fixed points.
    Derangement,
    /// Exactly one cycle.
    Cycle,
    /// No record-antirecord index.
    Pure,
}

impl DClass {
    pub const ALL: [DClass; 6] = [
        DClass::All,
        DClass::ESemi,
        DClass::OSemi,
        DClass::Derangement,
        DClass::Cycle,
        DClass::Pure,
    ];

    /// Fixed-point parity filter usable during backtracking: is a fixed
    /// point at position `i` permitted?
    fn allows_fixed_point(self, i: u32) -> bool {
        match self {
            DClass::All | DClass::Pure => true,
            DClass::ESemi => i % 2 == 1,
            DClass::OSemi => i % 2 == 0,
            DClass::Derangement | DClass::Cycle => false,
        }
    }

    /// Global predicate applied to complete words.
    fn post_filter(self, p: &Permutation) -> bool {
        match self {
            DClass::Cycle => p.cycle_count() == 1,
            DClass::Pure => p.class_membership(DClass::Pure),
            _ => true,
        }
    }
}

impl FromStr for DClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" | "d" => Ok(DClass::All),
            "esemi" | "e" => Ok(DClass::ESemi),
            "osemi" | "o" => Ok(DClass::OSemi),
            "derangement" | "eo" => Ok(DClass::Derangement),
            "cycle" | "dc" => Ok(DClass::Cycle),
            "pure" => Ok(DClass::Pure),
            other => Err(Error::Parse(format!("unknown class `{other}`"))),
        }
    }
}

impl fmt::Display for DClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DClass::All => "all",
            DClass::ESemi => "esemi",
            DClass::OSemi => "osemi",
            DClass::Derangement => "derangement",
            DClass::Cycle => "cycle",
            DClass::Pure => "pure",
        };
        write!(f, "{s}")
    }
}

/// Backtracking enumerator for D-permutations of `[2n]` in a class, in
/// lexicographic word order.
///
/// The value at an odd position `p` must be `>= p` and at an even position
/// `<= p`; candidates are tried in increasing order, which makes the
/// output stream lexicographically sorted and duplicate-free. Fixed-point
/// parity constraints are applied during the search; global constraints
/// (single cycle, purity) are applied to complete words.
pub struct DPermIter {
    n2: usize,
    class: DClass,
    word: Vec<u32>,
    used: u32,
    done: bool,
    resume: bool,
    prefix_len: usize,
}

impl DPermIter {
    fn new(n: usize, class: DClass) -> Self {
        DPermIter {
            n2: 2 * n,
            class,
            word: Vec::with_capacity(2 * n),
            used: 0,
            done: false,
            resume: false,
            prefix_len: 0,
        }
    }

    fn candidate_ok(&self, pos: u32, v: u32) -> bool {
        if self.used >> (v - 1) & 1 == 1 {
            return false;
        }
        if pos % 2 == 1 && v < pos {
            return false;
        }
        if pos % 2 == 0 && v > pos {
            return false;
        }
        if v == pos && !self.class.allows_fixed_point(pos) {
            return false;
        }
        true
    }

    /// Extend the current prefix with the smallest candidate `>= from` at
    /// the next position. Returns false when none exists.
    fn push_next(&mut self, from: u32) -> bool {
        let pos = (self.word.len() + 1) as u32;
        let lo = if pos % 2 == 1 { from.max(pos) } else { from.max(1) };
        let hi = if pos % 2 == 1 { self.n2 as u32 } else { pos };
        for v in lo..=hi {
            if self.candidate_ok(pos, v) {
                self.word.push(v);
                self.used |= 1 << (v - 1);
                return true;
            }
        }
        false
    }

    /// Remove the last value and return it.
    fn pop(&mut self) -> Option<u32> {
        let v = self.word.pop()?;
        self.used &= !(1 << (v - 1));
        Some(v)
    }
}

impl Iterator for DPermIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n2 == 0 {
            self.done = true;
            if self.class == DClass::Cycle {
                return None;
            }
            return Some(Permutation::identity(0));
        }
        loop {
            // backtrack past the last yield or dead end, never into the
            // fixed prefix
            if self.resume {
                self.resume = false;
                loop {
                    if self.word.len() <= self.prefix_len {
                        self.done = true;
                        return None;
                    }
                    let v = self.pop().expect("length checked above");
                    if self.push_next(v + 1) {
                        break;
                    }
                }
            }
            while self.word.len() < self.n2 {
                if !self.push_next(1) {
                    self.resume = true;
                    break;
                }
            }
            if self.resume {
                continue;
            }
            self.resume = true;
            let p = Permutation::new(self.word.clone()).expect("backtracker builds permutations");
            if self.class.post_filter(&p) {
                return Some(p);
            }
        }
    }
}

/// Stream every member of the class over `[2n]` exactly once, in
/// lexicographic word order.
pub fn enumerate_d_permutations(n: usize, class: DClass) -> DPermIter {
    assert!(n <= 15, "ground sets beyond [30] are not supported");
    DPermIter::new(n, class)
}

/// Stream the members whose word starts with `prefix`. An inadmissible
/// prefix yields the empty stream, so partitioning a position over
/// workers and taking the union reproduces the full enumeration exactly
/// once regardless of how prefixes are assigned.
pub fn enumerate_with_prefix(n: usize, class: DClass, prefix: &[u32]) -> DPermIter {
    assert!(n <= 15, "ground sets beyond [30] are not supported");
    let mut iter = DPermIter::new(n, class);
    for (i, &v) in prefix.iter().enumerate() {
        let pos = (i + 1) as u32;
        if v < 1 || v as usize > 2 * n || !iter.candidate_ok(pos, v) {
            iter.done = true;
            break;
        }
        iter.word.push(v);
        iter.used |= 1 << (v - 1);
    }
    iter.prefix_len = prefix.len();
    iter
}

/// The six cardinalities of the class-count table, in column order
/// `(DC, Deo, De (= Do), De union Do, Dpure, D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub dcycle: u64,
    pub derangement: u64,
    pub semiderangement: u64,
    pub semi_union: u64,
    pub pure: u64,
    pub all: u64,
}

impl ClassCounts {
    pub fn as_tuple(&self) -> (u64, u64, u64, u64, u64, u64) {
        (
            self.dcycle,
            self.derangement,
            self.semiderangement,
            self.semi_union,
            self.pure,
            self.all,
        )
    }
}

/// Count all six classes in one enumeration pass over the D-permutations
/// of `[2n]`. `|De| = |Do|` is verified by direct count.
pub fn class_counts(n: usize) -> ClassCounts {
    let mut dc = 0u64;
    let mut deo = 0u64;
    let mut de = 0u64;
    let mut dob = 0u64;
    let mut pure = 0u64;
    let mut all = 0u64;
    for p in enumerate_d_permutations(n, DClass::All) {
        all += 1;
        let e = p.class_membership(DClass::ESemi);
        let o = p.class_membership(DClass::OSemi);
        if e {
            de += 1;
        }
        if o {
            dob += 1;
        }
        if e && o {
            deo += 1;
        }
        if p.class_membership(DClass::Cycle) {
            dc += 1;
        }
        if p.class_membership(DClass::Pure) {
            pure += 1;
        }
    }
    assert_eq!(de, dob, "|D^e_2n| must equal |D^o_2n|");
    ClassCounts {
        dcycle: dc,
        derangement: deo,
        semiderangement: de,
        semi_union: de + dob - deo,
        pure,
        all,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn d_recognition() {
        assert!(perm("21").is_d_permutation().unwrap());
        assert!(!perm("1324").is_d_permutation().unwrap());
        assert!(perm("3142").is_d_permutation().unwrap());
        assert!(matches!(
            perm("213").is_d_permutation(),
            Err(Error::OddLength(3))
        ));
    }

    #[test]
    fn membership_markers_from_d4() {
        // 3241 is marked o (o-semiderangement, not a derangement);
        // 2143 is marked eo; 4231 is pure but has fixed points of both
        // parities.
        let p = perm("3241");
        assert!(p.class_membership(DClass::OSemi));
        assert!(!p.class_membership(DClass::ESemi));
        let q = perm("2143");
        assert!(q.class_membership(DClass::Derangement));
        let r = perm("4231");
        assert!(r.class_membership(DClass::Pure));
        assert!(!r.class_membership(DClass::ESemi));
        assert!(!r.class_membership(DClass::OSemi));
    }

    #[test]
    fn pure_counterexample_513462() {
        // 513462 has the odd-even fixed-point pair 3,4 but no
        // record-antirecords.
        let p = perm("513462");
        assert!(p.is_d_permutation().unwrap());
        assert!(p.class_membership(DClass::Pure));
        assert!(!p.class_membership(DClass::ESemi));
        assert!(!p.class_membership(DClass::OSemi));
    }

    #[test]
    fn enumeration_small() {
        let d2: Vec<String> = enumerate_d_permutations(1, DClass::All)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(d2, vec!["12", "21"]);
        let dc4: Vec<String> = enumerate_d_permutations(2, DClass::Cycle)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(dc4, vec!["3142"]);
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_d_permutations(n, DClass::All).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 8, 56, 608, 9440, 198272]);
    }

    #[test]
    fn enumeration_matches_filtering_s2n() {
        // Stream is duplicate-free, lexicographically sorted, and agrees
        // with filtering all of S_{2n} for n <= 3.
        for n in 0..=3usize {
            for class in DClass::ALL {
                let direct: Vec<Permutation> =
                    enumerate_d_permutations(n, class).collect();
                let filtered: Vec<Permutation> = all_permutations(2 * n)
                    .into_iter()
                    .filter(|p| p.is_d_permutation().unwrap() && p.class_membership(class))
                    .collect();
                assert_eq!(direct, filtered, "n={n} class={class}");
                let mut sorted = direct.clone();
                sorted.sort_by(|a, b| a.word().cmp(b.word()));
                sorted.dedup();
                assert_eq!(direct, sorted);
            }
        }
    }

    fn all_permutations(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<u32> = (1..=n as u32).collect();
        // Plain lexicographic generation by next-permutation.
        loop {
            out.push(Permutation::new(word.clone()).unwrap());
            // next lexicographic permutation
            if n < 2 {
                break;
            }
            let mut i = n - 2;
            loop {
                if word[i] < word[i + 1] {
                    break;
                }
                if i == 0 {
                    return out;
                }
                i -= 1;
            }
            let mut j = n - 1;
            while word[j] <= word[i] {
                j -= 1;
            }
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }

    #[test]
    fn class_count_table_rows() {
        assert_eq!(class_counts(0).as_tuple(), (0, 1, 1, 1, 1, 1));
        assert_eq!(class_counts(3).as_tuple(), (3, 8, 17, 26, 41, 56));
        assert_eq!(class_counts(5).as_tuple(), (155, 608, 2073, 3538, 8161, 9440));
    }

    #[test]
    fn reversal_conjugate_involution() {
        assert_eq!(perm("21").reversal_conjugate(), perm("21"));
        assert_eq!(perm("3241").reversal_conjugate(), perm("4132"));
        for p in enumerate_d_permutations(2, DClass::All) {
            let q = p.reversal_conjugate();
            assert!(q.is_d_permutation().unwrap());
            assert_eq!(q.reversal_conjugate(), p);
            assert_eq!(
                p.class_membership(DClass::ESemi),
                q.class_membership(DClass::OSemi)
            );
        }
    }

    #[test]
    fn prefix_partitions_union_to_full_enumeration() {
        for class in DClass::ALL {
            let full: Vec<Permutation> = enumerate_d_permutations(3, class).collect();
            let mut union: Vec<Permutation> = Vec::new();
            for first in 1..=6u32 {
                union.extend(enumerate_with_prefix(3, class, &[first]));
            }
            union.sort_by(|a, b| a.word().cmp(b.word()));
            let mut sorted_full = full.clone();
            sorted_full.sort_by(|a, b| a.word().cmp(b.word()));
            assert_eq!(union, sorted_full, "{class}");
        }
        // a complete prefix yields exactly that word once
        let one: Vec<Permutation> =
            enumerate_with_prefix(2, DClass::All, &[3, 1, 4, 2]).collect();
        assert_eq!(one, vec!["3142".parse().unwrap()]);
    }

    #[test]
    fn record_antirecords_come_in_pairs() {
        for n in 0..=3usize {
            for p in enumerate_d_permutations(n, DClass::All) {
                let rec = p.record_positions();
                let arec = p.antirecord_positions();
                for i in 1..=n {
                    let odd = rec[2 * i - 2] && arec[2 * i - 2];
                    let even = rec[2 * i - 1] && arec[2 * i - 1];
                    assert_eq!(odd, even, "{p}");
                }
            }
        }
    }
}
