//! The generating-polynomial families: each family assigns a monomial to
//! every permutation of its class, built from the statistic profile (and,
//! for the master families, from per-index crossing/nesting values).
//!
//! Hatted and tilded variables reuse the base variable names (`y2` hosts
//! the record-value variant of the cycle-double-rise split in the hatted
//! families, `y1`/`v1` host the minimum-based split in the tilded ones);
//! no family mixes a variable with its decorated counterpart, and the
//! continued-fraction coefficient laws are written against the same names.

use num_bigint::BigInt;
use num_traits::One;

use crate::perm::{enumerate_d_permutations, DClass, Permutation};
use crate::poly::{Poly, PolyBuilder, VarTable};
use crate::stats::{cycle_type, index_refined, psnest, stat_profile, variant_index_refined, CycleType, StatProfile};

/// Identifiers for every polynomial family in the verification harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// 12-variable parity-refined record-and-cycle polynomial.
    Pn12,
    /// 22-variable (p,q)-refinement of `Pn12`.
    Pn22,
    /// First master polynomial in six indeterminate families.
    Qn,
    /// Variant first master polynomial (primed statistics).
    QnPrime,
    /// 22-variable variant polynomial over primed statistics.
    PnPrime22,
    /// `Pn12` with a cycle-counting variable.
    PnHat,
    /// `PnHat` with the cycle-double-rise split taken by record value.
    PnHatHat,
    /// 23-variable (p,q)-refinement of `PnHatHat`.
    PnHatHat22,
    /// `Pn12` with the cycle-valley split by cycle minimum.
    PnTilde,
    /// `PnTilde` with the cycle-double-rise split by record value; the
    /// cycle-free reformulation of the second T-fraction.
    PnTildeHatHat,
    /// Three-variable specialization (exclusive antirecords, nrar
    /// anti-excedances, even fixed points).
    PnStar,
    /// `PnStar` with lower crossing/nesting variables.
    PnStarPQ,
    /// `PnStar` with a cycle-counting variable.
    PnStarCyc,
    /// `PnStarPQ` with a cycle-counting variable.
    PnStarCycPQ,
    /// 8-variable polynomial over D-cycles.
    Pdc,
    /// D-cycle polynomial with record-value cycle-double-rise split.
    PdcHatHat,
    /// (p,q)-refinement of `PdcHatHat`.
    PdcHatHatPQ,
    /// Second master polynomial (cycle-counting).
    QHatHat,
    /// Three-variable antirecord/exclusive-record/cycle polynomial.
    PnXYLam,
}

impl FamilyId {
    pub fn class(self) -> DClass {
        match self {
            FamilyId::Pdc | FamilyId::PdcHatHat | FamilyId::PdcHatHatPQ => DClass::Cycle,
            _ => DClass::All,
        }
    }

    /// True for the master families whose indeterminates are registered
    /// lazily per index value.
    pub fn is_master(self) -> bool {
        matches!(self, FamilyId::Qn | FamilyId::QnPrime | FamilyId::QHatHat)
    }
}

impl std::str::FromStr for FamilyId {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "pn12" => FamilyId::Pn12,
            "pn22" => FamilyId::Pn22,
            "qn" => FamilyId::Qn,
            "qnprime" => FamilyId::QnPrime,
            "pnprime22" => FamilyId::PnPrime22,
            "pnhat" => FamilyId::PnHat,
            "pnhathat" => FamilyId::PnHatHat,
            "pnhathat22" => FamilyId::PnHatHat22,
            "pntilde" => FamilyId::PnTilde,
            "pntildehathat" => FamilyId::PnTildeHatHat,
            "pnstar" => FamilyId::PnStar,
            "pnstarpq" => FamilyId::PnStarPQ,
            "pnstarcyc" => FamilyId::PnStarCyc,
            "pnstarcycpq" => FamilyId::PnStarCycPQ,
            "pdc" => FamilyId::Pdc,
            "pdchathat" => FamilyId::PdcHatHat,
            "pdchathatpq" => FamilyId::PdcHatHatPQ,
            "qhathat" => FamilyId::QHatHat,
            "pnxylam" => FamilyId::PnXYLam,
            other => return Err(crate::error::Error::Parse(format!("unknown family `{other}`"))),
        })
    }
}

pub const ALL_FAMILIES: [FamilyId; 19] = [
    FamilyId::Pn12,
    FamilyId::Pn22,
    FamilyId::Qn,
    FamilyId::QnPrime,
    FamilyId::PnPrime22,
    FamilyId::PnHat,
    FamilyId::PnHatHat,
    FamilyId::PnHatHat22,
    FamilyId::PnTilde,
    FamilyId::PnTildeHatHat,
    FamilyId::PnStar,
    FamilyId::PnStarPQ,
    FamilyId::PnStarCyc,
    FamilyId::PnStarCycPQ,
    FamilyId::Pdc,
    FamilyId::PdcHatHat,
    FamilyId::PdcHatHatPQ,
    FamilyId::QHatHat,
    FamilyId::PnXYLam,
];

/// Append `(variable, exponent)` pairs with nonzero exponent.
fn push(exps: &mut Vec<(usize, u32)>, var: usize, e: u32) {
    if e > 0 {
        exps.push((var, e));
    }
}

/// The twelve base variables, interned in a fixed order.
fn twelve_vars(vt: &mut VarTable) -> [usize; 12] {
    [
        vt.intern("x1"),
        vt.intern("x2"),
        vt.intern("y1"),
        vt.intern("y2"),
        vt.intern("u1"),
        vt.intern("u2"),
        vt.intern("v1"),
        vt.intern("v2"),
        vt.intern("we"),
        vt.intern("wo"),
        vt.intern("ze"),
        vt.intern("zo"),
    ]
}

fn pq_vars(vt: &mut VarTable) -> [usize; 10] {
    [
        vt.intern("p-1"),
        vt.intern("p-2"),
        vt.intern("p+1"),
        vt.intern("p+2"),
        vt.intern("q-1"),
        vt.intern("q-2"),
        vt.intern("q+1"),
        vt.intern("q+2"),
        vt.intern("se"),
        vt.intern("so"),
    ]
}

fn twelve_exponents(s: &StatProfile, v: &[usize; 12], exps: &mut Vec<(usize, u32)>) {
    push(exps, v[0], s.eareccpeak);
    push(exps, v[1], s.eareccdfall);
    push(exps, v[2], s.ereccval);
    push(exps, v[3], s.ereccdrise);
    push(exps, v[4], s.nrcpeak);
    push(exps, v[5], s.nrcdfall);
    push(exps, v[6], s.nrcval);
    push(exps, v[7], s.nrcdrise);
    push(exps, v[8], s.evennrfix);
    push(exps, v[9], s.oddnrfix);
    push(exps, v[10], s.evenrar);
    push(exps, v[11], s.oddrar);
}

fn pq_exponents(s: &StatProfile, v: &[usize; 10], exps: &mut Vec<(usize, u32)>) {
    push(exps, v[0], s.lcrosscpeak);
    push(exps, v[1], s.lcrosscdfall);
    push(exps, v[2], s.ucrosscval);
    push(exps, v[3], s.ucrosscdrise);
    push(exps, v[4], s.lnestcpeak);
    push(exps, v[5], s.lnestcdfall);
    push(exps, v[6], s.unestcval);
    push(exps, v[7], s.unestcdrise);
    push(exps, v[8], s.psnest_e);
    push(exps, v[9], s.psnest_o);
}

/// Per-index master exponents for the first master polynomial and its
/// variant.
fn master_exponents(
    p: &Permutation,
    vt: &mut VarTable,
    variant: bool,
    exps: &mut Vec<(usize, u32)>,
) {
    for i in 1..=p.len() {
        let ct = cycle_type(p, i);
        let name = match ct {
            CycleType::Fix => {
                let ps = psnest(p, i);
                if i % 2 == 0 {
                    format!("e[{ps}]")
                } else {
                    format!("f[{ps}]")
                }
            }
            _ => {
                let (a, b) = if variant {
                    variant_index_refined(p, i)
                } else {
                    index_refined(p, i)
                };
                let letter = match ct {
                    CycleType::CVal => "a",
                    CycleType::CPeak => "b",
                    CycleType::CDFall => "c",
                    CycleType::CDRise => "d",
                    CycleType::Fix => unreachable!(),
                };
                format!("{letter}[{a},{b}]")
            }
        };
        let var = vt.intern(&name);
        exps.push((var, 1));
    }
}

/// Per-index exponents for the second master polynomial: cycle valleys
/// depend on crossings and nestings only via their sum, cycle double
/// rises use the primed statistics.
fn second_master_exponents(p: &Permutation, vt: &mut VarTable, exps: &mut Vec<(usize, u32)>) {
    let lam = vt.intern("lambda");
    push(exps, lam, p.cycle_count() as u32);
    for i in 1..=p.len() {
        let ct = cycle_type(p, i);
        let name = match ct {
            CycleType::Fix => {
                let ps = psnest(p, i);
                if i % 2 == 0 {
                    format!("e[{ps}]")
                } else {
                    format!("f[{ps}]")
                }
            }
            CycleType::CVal => {
                let (a, b) = index_refined(p, i);
                format!("a[{}]", a + b)
            }
            CycleType::CPeak => {
                let (a, b) = index_refined(p, i);
                format!("b[{a},{b}]")
            }
            CycleType::CDFall => {
                let (a, b) = index_refined(p, i);
                format!("c[{a},{b}]")
            }
            CycleType::CDRise => {
                let (a, b) = variant_index_refined(p, i);
                format!("d[{a},{b}]")
            }
        };
        let var = vt.intern(&name);
        exps.push((var, 1));
    }
}

/// Exponent list of one permutation under one family.
pub fn weight_exponents(
    family: FamilyId,
    p: &Permutation,
    s: &StatProfile,
    vt: &mut VarTable,
) -> Vec<(usize, u32)> {
    let mut exps = Vec::new();
    match family {
        FamilyId::Pn12 => {
            let v = twelve_vars(vt);
            twelve_exponents(s, &v, &mut exps);
        }
        FamilyId::Pn22 => {
            let v = twelve_vars(vt);
            let w = pq_vars(vt);
            twelve_exponents(s, &v, &mut exps);
            pq_exponents(s, &w, &mut exps);
        }
        FamilyId::Qn => master_exponents(p, vt, false, &mut exps),
        FamilyId::QnPrime => master_exponents(p, vt, true, &mut exps),
        FamilyId::PnPrime22 => {
            let v = twelve_vars(vt);
            let w = pq_vars(vt);
            push(&mut exps, v[0], s.ereccpeak_p);
            push(&mut exps, v[1], s.eareccdfall_p);
            push(&mut exps, v[2], s.eareccval_p);
            push(&mut exps, v[3], s.ereccdrise_p);
            push(&mut exps, v[4], s.nrcpeak_p);
            push(&mut exps, v[5], s.nrcdfall_p);
            push(&mut exps, v[6], s.nrcval_p);
            push(&mut exps, v[7], s.nrcdrise_p);
            push(&mut exps, v[8], s.evennrfix);
            push(&mut exps, v[9], s.oddnrfix);
            push(&mut exps, v[10], s.evenrar);
            push(&mut exps, v[11], s.oddrar);
            push(&mut exps, w[0], s.ucrosscpeak_p);
            push(&mut exps, w[1], s.lcrosscdfall_p);
            push(&mut exps, w[2], s.lcrosscval_p);
            push(&mut exps, w[3], s.ucrosscdrise_p);
            push(&mut exps, w[4], s.unestcpeak_p);
            push(&mut exps, w[5], s.lnestcdfall_p);
            push(&mut exps, w[6], s.lnestcval_p);
            push(&mut exps, w[7], s.unestcdrise_p);
            push(&mut exps, w[8], s.psnest_e);
            push(&mut exps, w[9], s.psnest_o);
        }
        FamilyId::PnHat => {
            let v = twelve_vars(vt);
            let lam = vt.intern("lambda");
            twelve_exponents(s, &v, &mut exps);
            push(&mut exps, lam, s.cyc);
        }
        FamilyId::PnHatHat | FamilyId::PnHatHat22 => {
            let v = twelve_vars(vt);
            push(&mut exps, v[0], s.eareccpeak);
            push(&mut exps, v[1], s.eareccdfall);
            push(&mut exps, v[2], s.ereccval);
            push(&mut exps, v[3], s.ereccdrise_p);
            push(&mut exps, v[4], s.nrcpeak);
            push(&mut exps, v[5], s.nrcdfall);
            push(&mut exps, v[6], s.nrcval);
            push(&mut exps, v[7], s.nrcdrise_p);
            push(&mut exps, v[8], s.evennrfix);
            push(&mut exps, v[9], s.oddnrfix);
            push(&mut exps, v[10], s.evenrar);
            push(&mut exps, v[11], s.oddrar);
            if family == FamilyId::PnHatHat22 {
                let w = pq_vars(vt);
                push(&mut exps, w[0], s.lcrosscpeak);
                push(&mut exps, w[1], s.lcrosscdfall);
                push(&mut exps, w[2], s.ucrosscval);
                push(&mut exps, w[3], s.ucrosscdrise_p);
                push(&mut exps, w[4], s.lnestcpeak);
                push(&mut exps, w[5], s.lnestcdfall);
                push(&mut exps, w[6], s.unestcval);
                push(&mut exps, w[7], s.unestcdrise_p);
                push(&mut exps, w[8], s.psnest_e);
                push(&mut exps, w[9], s.psnest_o);
            }
            let lam = vt.intern("lambda");
            push(&mut exps, lam, s.cyc);
        }
        FamilyId::PnTilde | FamilyId::PnTildeHatHat => {
            let v = twelve_vars(vt);
            push(&mut exps, v[0], s.eareccpeak);
            push(&mut exps, v[1], s.eareccdfall);
            push(&mut exps, v[2], s.minval);
            if family == FamilyId::PnTilde {
                push(&mut exps, v[3], s.ereccdrise);
                push(&mut exps, v[7], s.nrcdrise);
            } else {
                push(&mut exps, v[3], s.ereccdrise_p);
                push(&mut exps, v[7], s.nrcdrise_p);
            }
            push(&mut exps, v[4], s.nrcpeak);
            push(&mut exps, v[5], s.nrcdfall);
            push(&mut exps, v[6], s.nminval);
            push(&mut exps, v[8], s.evennrfix);
            push(&mut exps, v[9], s.oddnrfix);
            push(&mut exps, v[10], s.evenrar);
            push(&mut exps, v[11], s.oddrar);
        }
        FamilyId::PnStar | FamilyId::PnStarPQ | FamilyId::PnStarCyc | FamilyId::PnStarCycPQ => {
            let x = vt.intern("x");
            let u = vt.intern("u");
            let we = vt.intern("we");
            push(&mut exps, x, s.earec());
            push(&mut exps, u, s.nrcpeak + s.nrcdfall);
            push(&mut exps, we, s.evenfix());
            if matches!(family, FamilyId::PnStarPQ | FamilyId::PnStarCycPQ) {
                let pm = vt.intern("p-");
                let qm = vt.intern("q-");
                push(&mut exps, pm, s.lcross());
                push(&mut exps, qm, s.lnest());
            }
            if matches!(family, FamilyId::PnStarCyc | FamilyId::PnStarCycPQ) {
                let lam = vt.intern("lambda");
                push(&mut exps, lam, s.cyc);
            }
        }
        FamilyId::Pdc | FamilyId::PdcHatHat | FamilyId::PdcHatHatPQ => {
            let v = twelve_vars(vt);
            push(&mut exps, v[0], s.eareccpeak);
            push(&mut exps, v[1], s.eareccdfall);
            push(&mut exps, v[2], s.ereccval);
            push(&mut exps, v[4], s.nrcpeak);
            push(&mut exps, v[5], s.nrcdfall);
            push(&mut exps, v[6], s.nrcval);
            if family == FamilyId::Pdc {
                push(&mut exps, v[3], s.ereccdrise);
                push(&mut exps, v[7], s.nrcdrise);
            } else {
                push(&mut exps, v[3], s.ereccdrise_p);
                push(&mut exps, v[7], s.nrcdrise_p);
            }
            if family == FamilyId::PdcHatHatPQ {
                let w = pq_vars(vt);
                push(&mut exps, w[0], s.lcrosscpeak);
                push(&mut exps, w[1], s.lcrosscdfall);
                push(&mut exps, w[2], s.ucrosscval);
                push(&mut exps, w[3], s.ucrosscdrise_p);
                push(&mut exps, w[4], s.lnestcpeak);
                push(&mut exps, w[5], s.lnestcdfall);
                push(&mut exps, w[6], s.unestcval);
                push(&mut exps, w[7], s.unestcdrise_p);
            }
        }
        FamilyId::QHatHat => second_master_exponents(p, vt, &mut exps),
        FamilyId::PnXYLam => {
            let x = vt.intern("x");
            let y = vt.intern("y");
            let lam = vt.intern("lambda");
            push(&mut exps, x, s.arec());
            push(&mut exps, y, s.erec());
            push(&mut exps, lam, s.cyc);
        }
    }
    exps
}

/// Sum the family's monomial over every permutation of the class.
pub fn build_polynomial(family: FamilyId, n: usize, vt: &mut VarTable) -> Poly {
    let mut terms: Vec<Vec<(usize, u32)>> = Vec::new();
    for p in enumerate_d_permutations(n, family.class()) {
        let s = stat_profile(&p);
        terms.push(weight_exponents(family, &p, &s, vt));
    }
    let mut b = PolyBuilder::new(vt);
    for t in terms {
        let width = t.iter().map(|&(v, _)| v + 1).max().unwrap_or(0);
        let mut exps = vec![0u16; width];
        for (v, e) in t {
            exps[v] += e as u16;
        }
        b.add_term(exps, BigInt::one());
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_is_zezo_plus_x1y1() {
        let mut vt = VarTable::new();
        let p1 = build_polynomial(FamilyId::Pn12, 1, &mut vt);
        let x1 = vt.var("x1");
        let y1 = vt.var("y1");
        let ze = vt.var("ze");
        let zo = vt.var("zo");
        assert_eq!(p1, ze.mul(&zo).add(&x1.mul(&y1)));
    }

    #[test]
    fn p2_at_all_ones_counts_d4() {
        let mut vt = VarTable::new();
        let p2 = build_polynomial(FamilyId::Pn12, 2, &mut vt);
        let ones: std::collections::HashMap<usize, BigInt> =
            (0..vt.len()).map(|i| (i, BigInt::one())).collect();
        assert_eq!(p2.specialize(&ones).as_constant().unwrap(), BigInt::from(8));
    }

    #[test]
    fn homogeneity_of_pn12() {
        // degree n in the even-index alphabet and in the odd-index one
        let mut vt = VarTable::new();
        for n in 0..=3usize {
            let p = build_polynomial(FamilyId::Pn12, n, &mut vt);
            let even: Vec<usize> = ["x1", "x2", "u1", "u2", "we", "ze"]
                .iter()
                .map(|v| vt.lookup(v).unwrap())
                .collect();
            let odd: Vec<usize> = ["y1", "y2", "v1", "v2", "wo", "zo"]
                .iter()
                .map(|v| vt.lookup(v).unwrap())
                .collect();
            for (m, _) in p.terms() {
                let de: u32 = even.iter().map(|&v| m.exponent(v) as u32).sum();
                let do_: u32 = odd.iter().map(|&v| m.exponent(v) as u32).sum();
                assert_eq!(de as usize, n);
                assert_eq!(do_ as usize, n);
            }
        }
    }

    #[test]
    fn qn_master_at_n1() {
        // D_2 = {12, 21}: 12 contributes e[0] f[0], 21 contributes
        // a[0,0] b[0,0].
        let mut vt = VarTable::new();
        let q1 = build_polynomial(FamilyId::Qn, 1, &mut vt);
        let want = vt
            .var("e[0]")
            .mul(&vt.var("f[0]"))
            .add(&vt.var("a[0,0]").mul(&vt.var("b[0,0]")));
        assert_eq!(q1, want);
    }

    #[test]
    fn lambda_degree_equals_cycle_count() {
        // instrumented build: the lambda exponent of each contribution is
        // the cycle count of the contributing permutation
        let mut vt = VarTable::new();
        let lam = vt.intern("lambda");
        for n in 0..=3usize {
            for family in [FamilyId::PnHat, FamilyId::PnHatHat, FamilyId::QHatHat] {
                for p in enumerate_d_permutations(n, family.class()) {
                    let s = stat_profile(&p);
                    let exps = weight_exponents(family, &p, &s, &mut vt);
                    let got: u32 = exps
                        .iter()
                        .filter(|&&(v, _)| v == lam)
                        .map(|&(_, e)| e)
                        .sum();
                    assert_eq!(got as usize, p.cycle_count(), "{p}");
                }
            }
        }
    }
}
