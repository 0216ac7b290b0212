//! Per-index and per-permutation statistics: the parity-refined
//! record-and-cycle classification, crossings and nestings in refined,
//! index-refined and primed variants, pseudo-nestings, cycle extrema, and
//! inversions.
//!
//! Production counting uses O(N^2) scans derived from the definitions; the
//! [`brute`] module recounts everything by literal quadruplet enumeration
//! and serves as the standing oracle.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Cycle classification of an index, from comparing `sigma^{-1}(i)`, `i`,
/// `sigma(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleType {
    CPeak,
    CVal,
    CDRise,
    CDFall,
    Fix,
}

/// Record classification of an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecordType {
    /// Exclusive record (record, not antirecord).
    ERec,
    /// Exclusive antirecord.
    EARec,
    /// Record-antirecord; always a fixed point.
    Rar,
    /// Neither record nor antirecord.
    NRar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexClass {
    pub cycle_type: CycleType,
    pub record_type: RecordType,
    pub even: bool,
}

/// Classify index `i` (1-based). Errors when `i` is out of range.
pub fn classify_index(p: &Permutation, i: usize) -> Result<IndexClass> {
    if i == 0 || i > p.len() {
        return Err(Error::IndexOutOfRange { index: i, len: p.len() });
    }
    let rec = p.record_positions();
    let arec = p.antirecord_positions();
    Ok(IndexClass {
        cycle_type: cycle_type(p, i),
        record_type: record_type_at(&rec, &arec, i),
        even: i % 2 == 0,
    })
}

pub fn cycle_type(p: &Permutation, i: usize) -> CycleType {
    let s = p.sigma(i) as usize;
    let q = p.sigma_inv(i) as usize;
    if s == i {
        CycleType::Fix
    } else if q < i && i > s {
        CycleType::CPeak
    } else if q > i && i < s {
        CycleType::CVal
    } else if q < i && i < s {
        CycleType::CDRise
    } else {
        CycleType::CDFall
    }
}

fn record_type_at(rec: &[bool], arec: &[bool], i: usize) -> RecordType {
    match (rec[i - 1], arec[i - 1]) {
        (true, true) => RecordType::Rar,
        (true, false) => RecordType::ERec,
        (false, true) => RecordType::EARec,
        (false, false) => RecordType::NRar,
    }
}

/// `psnest(j) = #{i < j : sigma(i) > j}` for a fixed point `j` (the level
/// of the fixed point).
pub fn psnest(p: &Permutation, j: usize) -> u32 {
    (1..j).filter(|&i| p.sigma(i) as usize > j).count() as u32
}

/// Index-refined crossing/nesting values at `j`:
/// `(ucross(j), unest(j))` when `j` is an excedance,
/// `(lcross(j), lnest(j))` when `j` is an anti-excedance,
/// `(psnest(j), psnest(j))` when `j` is fixed.
pub fn index_refined(p: &Permutation, j: usize) -> (u32, u32) {
    let s = p.sigma(j) as usize;
    if s > j {
        let ucross = (1..j)
            .filter(|&i| {
                let si = p.sigma(i) as usize;
                j < si && si < s
            })
            .count() as u32;
        let unest = (1..j).filter(|&i| p.sigma(i) as usize > s).count() as u32;
        (ucross, unest)
    } else if s < j {
        let lcross = (j + 1..=p.len())
            .filter(|&l| {
                let sl = p.sigma(l) as usize;
                s < sl && sl < j
            })
            .count() as u32;
        let lnest = (j + 1..=p.len())
            .filter(|&l| (p.sigma(l) as usize) < s)
            .count() as u32;
        (lcross, lnest)
    } else {
        let ps = psnest(p, j);
        (ps, ps)
    }
}

/// Variant index-refined values at `k`:
/// `(ucross'(k), unest'(k))` when `sigma^{-1}(k)` is an excedance (`k` is
/// a cycle peak or cycle double rise),
/// `(lcross'(k), lnest'(k))` when it is an anti-excedance,
/// `(0, 0)` on fixed points.
pub fn variant_index_refined(p: &Permutation, k: usize) -> (u32, u32) {
    let q = p.sigma_inv(k) as usize;
    if q == k {
        return (0, 0);
    }
    if q < k {
        // sigma^{-1}(k) is an excedance
        let ucross = (q + 1..k)
            .filter(|&j| p.sigma(j) as usize > k)
            .count() as u32;
        let unest = (1..q).filter(|&i| p.sigma(i) as usize > k).count() as u32;
        (ucross, unest)
    } else {
        let lcross = (k + 1..q)
            .filter(|&j| (p.sigma(j) as usize) < k)
            .count() as u32;
        let lnest = (q + 1..=p.len())
            .filter(|&l| (p.sigma(l) as usize) < k)
            .count() as u32;
        (lcross, lnest)
    }
}

pub fn inversions(p: &Permutation) -> u32 {
    let w = p.word();
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// All per-permutation statistic counts used by the generating-polynomial
/// families.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatProfile {
    // Parity-refined record-and-cycle classification (the twelve types).
    pub eareccpeak: u32,
    pub eareccdfall: u32,
    pub ereccval: u32,
    pub ereccdrise: u32,
    pub nrcpeak: u32,
    pub nrcdfall: u32,
    pub nrcval: u32,
    pub nrcdrise: u32,
    pub evennrfix: u32,
    pub oddnrfix: u32,
    pub evenrar: u32,
    pub oddrar: u32,
    // Refined crossing/nesting totals.
    pub ucrosscval: u32,
    pub ucrosscdrise: u32,
    pub lcrosscpeak: u32,
    pub lcrosscdfall: u32,
    pub unestcval: u32,
    pub unestcdrise: u32,
    pub lnestcpeak: u32,
    pub lnestcdfall: u32,
    // Joinings (degenerate crossings): ujoin = cdrise, ljoin = cdfall.
    pub ujoin: u32,
    pub ljoin: u32,
    // Pseudo-nesting totals split by fixed-point parity.
    pub psnest_e: u32,
    pub psnest_o: u32,
    pub cyc: u32,
    // Cycle extrema.
    pub minval: u32,
    pub nminval: u32,
    pub maxpeak: u32,
    pub nmaxpeak: u32,
    // Primed record statistics: record/antirecord status of the position
    // sigma^{-1}(i).
    pub ereccpeak_p: u32,
    pub nrcpeak_p: u32,
    pub ereccdrise_p: u32,
    pub nrcdrise_p: u32,
    pub eareccval_p: u32,
    pub nrcval_p: u32,
    pub eareccdfall_p: u32,
    pub nrcdfall_p: u32,
    // Primed crossing/nesting totals.
    pub ucrosscpeak_p: u32,
    pub unestcpeak_p: u32,
    pub ucrosscdrise_p: u32,
    pub unestcdrise_p: u32,
    pub lcrosscval_p: u32,
    pub lnestcval_p: u32,
    pub lcrosscdfall_p: u32,
    pub lnestcdfall_p: u32,
    pub inv: u32,
}

impl StatProfile {
    pub fn ucross(&self) -> u32 {
        self.ucrosscval + self.ucrosscdrise
    }
    pub fn lcross(&self) -> u32 {
        self.lcrosscpeak + self.lcrosscdfall
    }
    pub fn unest(&self) -> u32 {
        self.unestcval + self.unestcdrise
    }
    pub fn lnest(&self) -> u32 {
        self.lnestcpeak + self.lnestcdfall
    }
    pub fn psnest(&self) -> u32 {
        self.psnest_e + self.psnest_o
    }
    pub fn cval(&self) -> u32 {
        self.ereccval + self.nrcval
    }
    pub fn cpeak(&self) -> u32 {
        self.eareccpeak + self.nrcpeak
    }
    pub fn cdrise(&self) -> u32 {
        self.ereccdrise + self.nrcdrise
    }
    pub fn cdfall(&self) -> u32 {
        self.eareccdfall + self.nrcdfall
    }
    pub fn evenfix(&self) -> u32 {
        self.evennrfix + self.evenrar
    }
    pub fn oddfix(&self) -> u32 {
        self.oddnrfix + self.oddrar
    }
    pub fn earec(&self) -> u32 {
        self.eareccpeak + self.eareccdfall
    }
    pub fn erec(&self) -> u32 {
        self.ereccval + self.ereccdrise
    }
    pub fn arec(&self) -> u32 {
        self.earec() + self.evenrar + self.oddrar
    }
    pub fn rec(&self) -> u32 {
        self.erec() + self.evenrar + self.oddrar
    }
}

/// Compute the full profile of a D-permutation in one pass of O(N^2)
/// scans.
pub fn stat_profile(p: &Permutation) -> StatProfile {
    let n2 = p.len();
    let mut s = StatProfile {
        cyc: p.cycle_count() as u32,
        inv: inversions(p),
        ..Default::default()
    };
    let rec = p.record_positions();
    let arec = p.antirecord_positions();

    // cycle extrema
    for cycle in p.cycles() {
        if cycle.len() == 1 {
            continue;
        }
        let mn = *cycle.iter().min().unwrap() as usize;
        let mx = *cycle.iter().max().unwrap() as usize;
        for &i in &cycle {
            let i = i as usize;
            match cycle_type(p, i) {
                CycleType::CVal => {
                    if i == mn {
                        s.minval += 1;
                    } else {
                        s.nminval += 1;
                    }
                }
                CycleType::CPeak => {
                    if i == mx {
                        s.maxpeak += 1;
                    } else {
                        s.nmaxpeak += 1;
                    }
                }
                _ => {}
            }
        }
    }

    for i in 1..=n2 {
        let ct = cycle_type(p, i);
        let rt = record_type_at(&rec, &arec, i);
        let (a, b) = index_refined(p, i);
        let (ap, bp) = variant_index_refined(p, i);
        let prec = if ct != CycleType::Fix {
            let q = p.sigma_inv(i) as usize;
            (rec[q - 1], arec[q - 1])
        } else {
            (false, false)
        };
        match ct {
            CycleType::Fix => {
                let ps = psnest(p, i);
                if i % 2 == 0 {
                    s.psnest_e += ps;
                } else {
                    s.psnest_o += ps;
                }
                match (rt, i % 2 == 0) {
                    (RecordType::Rar, true) => s.evenrar += 1,
                    (RecordType::Rar, false) => s.oddrar += 1,
                    (_, true) => s.evennrfix += 1,
                    (_, false) => s.oddnrfix += 1,
                }
            }
            CycleType::CPeak => {
                if rt == RecordType::EARec {
                    s.eareccpeak += 1;
                } else {
                    s.nrcpeak += 1;
                }
                s.lcrosscpeak += a;
                s.lnestcpeak += b;
                s.ucrosscpeak_p += ap;
                s.unestcpeak_p += bp;
                if prec.0 {
                    s.ereccpeak_p += 1;
                } else {
                    s.nrcpeak_p += 1;
                }
            }
            CycleType::CVal => {
                if rt == RecordType::ERec {
                    s.ereccval += 1;
                } else {
                    s.nrcval += 1;
                }
                s.ucrosscval += a;
                s.unestcval += b;
                s.lcrosscval_p += ap;
                s.lnestcval_p += bp;
                if prec.1 {
                    s.eareccval_p += 1;
                } else {
                    s.nrcval_p += 1;
                }
            }
            CycleType::CDRise => {
                if rt == RecordType::ERec {
                    s.ereccdrise += 1;
                } else {
                    s.nrcdrise += 1;
                }
                s.ujoin += 1;
                s.ucrosscdrise += a;
                s.unestcdrise += b;
                s.ucrosscdrise_p += ap;
                s.unestcdrise_p += bp;
                if prec.0 {
                    s.ereccdrise_p += 1;
                } else {
                    s.nrcdrise_p += 1;
                }
            }
            CycleType::CDFall => {
                if rt == RecordType::EARec {
                    s.eareccdfall += 1;
                } else {
                    s.nrcdfall += 1;
                }
                s.ljoin += 1;
                s.lcrosscdfall += a;
                s.lnestcdfall += b;
                s.lcrosscdfall_p += ap;
                s.lnestcdfall_p += bp;
                if prec.1 {
                    s.eareccdfall_p += 1;
                } else {
                    s.nrcdfall_p += 1;
                }
            }
        }
    }
    s
}

/// Literal quadruplet/triplet scans. Everything in here follows the
/// defining patterns directly, independent of the index-refined scans
/// above.
pub mod brute {
    use super::*;

    /// Totals of the eight refined crossing/nesting statistics, plus
    /// joinings and the two pseudo-nesting totals, counted by pattern.
    #[derive(Debug, Default, Clone, PartialEq, Eq)]
    pub struct QuadTotals {
        pub ucrosscval: u32,
        pub ucrosscdrise: u32,
        pub lcrosscpeak: u32,
        pub lcrosscdfall: u32,
        pub unestcval: u32,
        pub unestcdrise: u32,
        pub lnestcpeak: u32,
        pub lnestcdfall: u32,
        pub ujoin: u32,
        pub ljoin: u32,
        pub upsnest: u32,
        pub lpsnest: u32,
    }

    pub fn quad_totals(p: &Permutation) -> QuadTotals {
        let n = p.len();
        let sig = |i: usize| p.sigma(i) as usize;
        let mut t = QuadTotals::default();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        if sig(i) == k && sig(j) == l {
                            if p.sigma_inv(j) as usize > j {
                                t.ucrosscval += 1;
                            } else {
                                t.ucrosscdrise += 1;
                            }
                        }
                        if sig(k) == i && sig(l) == j {
                            if (p.sigma_inv(k) as usize) < k {
                                t.lcrosscpeak += 1;
                            } else {
                                t.lcrosscdfall += 1;
                            }
                        }
                        if sig(i) == l && sig(j) == k {
                            if p.sigma_inv(j) as usize > j {
                                t.unestcval += 1;
                            } else {
                                t.unestcdrise += 1;
                            }
                        }
                        if sig(l) == i && sig(k) == j {
                            if (p.sigma_inv(k) as usize) < k {
                                t.lnestcpeak += 1;
                            } else {
                                t.lnestcdfall += 1;
                            }
                        }
                    }
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for l in j + 1..=n {
                    if sig(i) == j && sig(j) == l {
                        t.ujoin += 1;
                    }
                    if sig(j) == i && sig(l) == j {
                        t.ljoin += 1;
                    }
                    if sig(i) == l && sig(j) == j {
                        t.upsnest += 1;
                    }
                    if sig(l) == i && sig(j) == j {
                        t.lpsnest += 1;
                    }
                }
            }
        }
        t
    }

    /// `(ucross(j), unest(j), lcross(j), lnest(j))` by quadruplet scan.
    pub fn index_refined(p: &Permutation, j0: usize) -> (u32, u32, u32, u32) {
        let n = p.len();
        let sig = |i: usize| p.sigma(i) as usize;
        let (mut uc, mut un, mut lc, mut ln) = (0, 0, 0, 0);
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        if j == j0 && sig(i) == k && sig(j) == l {
                            uc += 1;
                        }
                        if j == j0 && sig(j) == k && sig(i) == l {
                            un += 1;
                        }
                        if k == j0 && sig(k) == i && sig(l) == j {
                            lc += 1;
                        }
                        if k == j0 && sig(l) == i && sig(k) == j {
                            ln += 1;
                        }
                    }
                }
            }
        }
        (uc, un, lc, ln)
    }

    /// `(ucross'(m), unest'(m), lcross'(m), lnest'(m))` by quadruplet scan.
    pub fn variant_index_refined(p: &Permutation, m: usize) -> (u32, u32, u32, u32) {
        let n = p.len();
        let sig = |i: usize| p.sigma(i) as usize;
        let (mut uc, mut un, mut lc, mut ln) = (0, 0, 0, 0);
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        if k == m && sig(i) == k && sig(j) == l {
                            uc += 1;
                        }
                        if k == m && sig(j) == k && sig(i) == l {
                            un += 1;
                        }
                        if j == m && sig(k) == i && sig(l) == j {
                            lc += 1;
                        }
                        if j == m && sig(l) == i && sig(k) == j {
                            ln += 1;
                        }
                    }
                }
            }
        }
        (uc, un, lc, ln)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_d_permutations, DClass};

    fn fig1_word() -> Permutation {
        Permutation::new(vec![7, 1, 9, 2, 5, 4, 8, 6, 10, 3, 11, 12, 14, 13]).unwrap()
    }

    #[test]
    fn classify_examples() {
        let p = fig1_word();
        assert_eq!(classify_index(&p, 5).unwrap().cycle_type, CycleType::Fix);
        assert_eq!(classify_index(&p, 7).unwrap().cycle_type, CycleType::CDRise);
        let q: Permutation = "21".parse().unwrap();
        let c = classify_index(&q, 1).unwrap();
        assert_eq!(c.cycle_type, CycleType::CVal);
        assert_eq!(c.record_type, RecordType::ERec);
        assert!(classify_index(&q, 3).is_err());
    }

    #[test]
    fn index_refined_examples() {
        let p = fig1_word();
        // j=3 is an excedance: (ucross, unest) = (1, 0)
        assert_eq!(index_refined(&p, 3), (1, 0));
        // j=5 is fixed with psnest = 2
        assert_eq!(index_refined(&p, 5), (2, 2));
        assert_eq!(psnest(&p, 5), 2);
        let id = Permutation::identity(8);
        for j in 1..=8 {
            assert_eq!(index_refined(&id, j), (0, 0));
            assert_eq!(variant_index_refined(&id, j), (0, 0));
        }
    }

    #[test]
    fn variant_examples() {
        let p: Permutation = "3142".parse().unwrap();
        for k in 1..=4 {
            assert_eq!(variant_index_refined(&p, k), (0, 0));
        }
    }

    /// The full profile of the Figure-1 word, frozen from the quadruplet
    /// oracle ahead of the main build.
    #[test]
    fn fig1_profile_frozen() {
        let s = stat_profile(&fig1_word());
        assert_eq!(
            (s.eareccpeak, s.eareccdfall, s.ereccval, s.ereccdrise),
            (2, 2, 3, 1)
        );
        assert_eq!((s.nrcpeak, s.nrcdfall, s.nrcval, s.nrcdrise), (1, 1, 0, 1));
        assert_eq!(
            (s.evennrfix, s.oddnrfix, s.evenrar, s.oddrar),
            (0, 1, 1, 1)
        );
        assert_eq!(
            (s.ucrosscval, s.ucrosscdrise, s.lcrosscpeak, s.lcrosscdfall),
            (1, 0, 0, 1)
        );
        assert_eq!(
            (s.unestcval, s.unestcdrise, s.lnestcpeak, s.lnestcdfall),
            (0, 1, 1, 1)
        );
        assert_eq!((s.ujoin, s.ljoin), (2, 3));
        assert_eq!((s.psnest_e, s.psnest_o), (0, 2));
        assert_eq!(s.cyc, 6);
        assert_eq!((s.minval, s.nminval, s.maxpeak, s.nmaxpeak), (3, 0, 3, 0));
        assert_eq!(
            (s.ereccpeak_p, s.nrcpeak_p, s.ereccdrise_p, s.nrcdrise_p),
            (2, 1, 2, 0)
        );
        assert_eq!(
            (s.eareccval_p, s.nrcval_p, s.eareccdfall_p, s.nrcdfall_p),
            (3, 0, 1, 2)
        );
        assert_eq!(
            (s.ucrosscpeak_p, s.unestcpeak_p, s.ucrosscdrise_p, s.unestcdrise_p),
            (0, 1, 1, 0)
        );
        assert_eq!(
            (s.lcrosscval_p, s.lnestcval_p, s.lcrosscdfall_p, s.lnestcdfall_p),
            (1, 0, 0, 2)
        );
        assert_eq!(s.inv, 20);
    }

    #[test]
    fn fig1_matches_quadruplet_oracle() {
        let p = fig1_word();
        let s = stat_profile(&p);
        let q = brute::quad_totals(&p);
        assert_eq!(s.ucrosscval, q.ucrosscval);
        assert_eq!(s.ucrosscdrise, q.ucrosscdrise);
        assert_eq!(s.lcrosscpeak, q.lcrosscpeak);
        assert_eq!(s.lcrosscdfall, q.lcrosscdfall);
        assert_eq!(s.unestcval, q.unestcval);
        assert_eq!(s.unestcdrise, q.unestcdrise);
        assert_eq!(s.lnestcpeak, q.lnestcpeak);
        assert_eq!(s.lnestcdfall, q.lnestcdfall);
        assert_eq!(s.ujoin, q.ujoin);
        assert_eq!(s.ljoin, q.ljoin);
        assert_eq!(s.psnest(), q.upsnest);
        assert_eq!(q.upsnest, q.lpsnest);
        // per-index values, including the nest-prime relation
        for j in 1..=p.len() {
            let (uc, un, lc, ln) = brute::index_refined(&p, j);
            let got = index_refined(&p, j);
            let s_j = p.sigma(j) as usize;
            if s_j > j {
                assert_eq!(got, (uc, un));
            } else if s_j < j {
                assert_eq!(got, (lc, ln));
            }
            let (ucp, unp, lcp, lnp) = brute::variant_index_refined(&p, j);
            let gotp = variant_index_refined(&p, j);
            let q_j = p.sigma_inv(j) as usize;
            if q_j < j {
                assert_eq!(gotp, (ucp, unp));
            } else if q_j > j {
                assert_eq!(gotp, (lcp, lnp));
            }
            // unest'(k) = unest(sigma^{-1}(k)); lnest'(j) = lnest(sigma^{-1}(j))
            let (_, un_at_q, _, ln_at_q) = brute::index_refined(&p, q_j);
            assert_eq!(unp, un_at_q);
            assert_eq!(lnp, ln_at_q);
        }
    }

    #[test]
    fn profile_3142() {
        let p: Permutation = "3142".parse().unwrap();
        let s = stat_profile(&p);
        assert_eq!((s.ujoin, s.ljoin), (1, 1));
        assert_eq!(s.ucross() + s.lcross() + s.unest() + s.lnest(), 0);
        assert_eq!(s.cyc, 1);
    }

    #[test]
    fn identity_profile() {
        let p = Permutation::identity(10);
        let s = stat_profile(&p);
        assert_eq!(s.ucross() + s.lcross() + s.unest() + s.lnest(), 0);
        assert_eq!(s.evenrar, 5);
        assert_eq!(s.oddrar, 5);
    }

    #[test]
    fn cheap_invariants_at_n5() {
        // production-scan identities over all of D_10, no oracle
        for p in enumerate_d_permutations(5, DClass::All) {
            let s = stat_profile(&p);
            assert_eq!(
                s.inv,
                s.cval()
                    + s.cdrise()
                    + s.cdfall()
                    + s.ucross()
                    + s.lcross()
                    + 2 * (s.unest() + s.lnest() + s.psnest()),
                "{p}"
            );
            let even_sum =
                s.eareccpeak + s.nrcpeak + s.eareccdfall + s.nrcdfall + s.evenrar + s.evennrfix;
            let odd_sum =
                s.ereccval + s.nrcval + s.ereccdrise + s.nrcdrise + s.oddrar + s.oddnrfix;
            assert_eq!(even_sum, 5, "{p}");
            assert_eq!(odd_sum, 5, "{p}");
        }
    }

    #[test]
    fn scans_match_oracle_exhaustively() {
        // Equality of the O(N^2) scans and the O(N^4) oracle on all
        // D-permutations through n = 4, plus the structural invariants.
        for n in 0..=4usize {
            for p in enumerate_d_permutations(n, DClass::All) {
                let s = stat_profile(&p);
                let q = brute::quad_totals(&p);
                assert_eq!(
                    (s.ucrosscval, s.ucrosscdrise, s.lcrosscpeak, s.lcrosscdfall),
                    (q.ucrosscval, q.ucrosscdrise, q.lcrosscpeak, q.lcrosscdfall),
                    "{p}"
                );
                assert_eq!(
                    (s.unestcval, s.unestcdrise, s.lnestcpeak, s.lnestcdfall),
                    (q.unestcval, q.unestcdrise, q.lnestcpeak, q.lnestcdfall),
                    "{p}"
                );
                assert_eq!((s.ujoin, s.ljoin), (q.ujoin, q.ljoin), "{p}");
                assert_eq!(s.psnest(), q.upsnest, "{p}");
                assert_eq!(q.upsnest, q.lpsnest, "{p}");
                // joinings coincide with cycle double rises/falls
                assert_eq!(s.ujoin, s.cdrise(), "{p}");
                assert_eq!(s.ljoin, s.cdfall(), "{p}");
                // twelve types partition [2n] into two halves of size n
                let even_sum =
                    s.eareccpeak + s.nrcpeak + s.eareccdfall + s.nrcdfall + s.evenrar + s.evennrfix;
                let odd_sum =
                    s.ereccval + s.nrcval + s.ereccdrise + s.nrcdrise + s.oddrar + s.oddnrfix;
                assert_eq!(even_sum as usize, n, "{p}");
                assert_eq!(odd_sum as usize, n, "{p}");
                // inversion identity
                assert_eq!(
                    s.inv,
                    s.cval()
                        + s.cdrise()
                        + s.cdfall()
                        + s.ucross()
                        + s.lcross()
                        + 2 * (s.unest() + s.lnest() + s.psnest()),
                    "{p}"
                );
                // index-refined sums equal the quadruplet totals
                let mut sums = (0u32, 0u32, 0u32, 0u32);
                for j in 1..=p.len() {
                    let (uc, un, lc, ln) = brute::index_refined(&p, j);
                    sums.0 += uc;
                    sums.1 += un;
                    sums.2 += lc;
                    sums.3 += ln;
                    // parity support: upper stats live on odd non-fixed j,
                    // lower on even non-fixed j
                    if j % 2 == 0 || p.is_fixed_point(j) {
                        assert_eq!((uc, un), (0, 0), "{p} j={j}");
                    }
                    if j % 2 == 1 || p.is_fixed_point(j) {
                        assert_eq!((lc, ln), (0, 0), "{p} j={j}");
                    }
                }
                assert_eq!(sums.0, s.ucross(), "{p}");
                assert_eq!(sums.1, s.unest(), "{p}");
                assert_eq!(sums.2, s.lcross(), "{p}");
                assert_eq!(sums.3, s.lnest(), "{p}");
                // each non-singleton cycle has one minval and one maxpeak
                let nonsingleton = p.cycles().iter().filter(|c| c.len() > 1).count() as u32;
                assert_eq!(s.minval, nonsingleton, "{p}");
                assert_eq!(s.maxpeak, nonsingleton, "{p}");
                // nest-prime relations: unest'(k) = unest(sigma^{-1}(k)),
                // lnest'(j) = lnest(sigma^{-1}(j))
                for k in 1..=p.len() {
                    let q = p.sigma_inv(k) as usize;
                    let (_, unp, _, lnp) = brute::variant_index_refined(&p, k);
                    let (_, un_at_q, _, ln_at_q) = brute::index_refined(&p, q);
                    assert_eq!(unp, un_at_q, "{p} k={k}");
                    assert_eq!(lnp, ln_at_q, "{p} k={k}");
                }
            }
        }
    }
}
