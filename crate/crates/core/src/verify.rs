//! The verification harness: every theorem, corollary and conjecture gets
//! a named check that pits the enumeration side (a generating-polynomial
//! family) against the continued-fraction side (a coefficient law fed to
//! the expander), symbolically up to a per-check cap and under seeded
//! integer specializations beyond it. Conjecture checks are report-only:
//! a discrepancy is recorded as a counterexample, not a suite failure.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cfrac::{
    augment_restrict, classical_sequences, contract_even, contract_odd,
    jfraction_from_moments, seidel, seidel_margins_agree, CfSpec, SequenceName,
    TransformDirection,
};
use crate::error::{Error, Result};
use crate::families::{build_polynomial, FamilyId};
use crate::paths::{
    self, biane_inverse, biane_labels, fz_inverse, fz_labels, fz_path, LabelSystem, LabelVariant,
    PathLabel, Step, StepContext,
};
use crate::perm::{class_counts, enumerate_d_permutations, DClass, Permutation};
use crate::poly::{pq_integer, Poly, VarTable};
use crate::series::TruncatedSeries;
use crate::stats::{cycle_type, stat_profile, CycleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Specialized,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symbolic" => Ok(Mode::Symbolic),
            "specialized" => Ok(Mode::Specialized),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Override of the per-check default range.
    pub n_max: Option<usize>,
    /// Force one phase only; default runs symbolic up to the cap and
    /// specialized beyond.
    pub mode: Option<Mode>,
    pub seed: u64,
    pub num_seeds: usize,
    /// Cap for brute-force labeled-path enumeration (`2n <= cap`).
    pub cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            n_max: None,
            mode: None,
            seed: 0xD_5EED,
            num_seeds: 5,
            cap: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Counterexample,
}

/// One check outcome; serializes to the report schema
/// `{check_id, mode, n_max, seed, status, details?, millis}`.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub check_id: String,
    pub mode: String,
    pub n_max: usize,
    pub seed: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
    pub millis: u128,
}

impl TheoremCheck {
    /// True when this check should fail the suite (conjectures never do).
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<TheoremCheck>,
}

impl VerifyReport {
    pub fn any_failure(&self) -> bool {
        self.checks.iter().any(TheoremCheck::is_failure)
    }
}

// ---------------------------------------------------------------------
// Engine for polynomial-vs-continued-fraction checks
// ---------------------------------------------------------------------

/// Both sides of an identity, plus extra comparisons that are always
/// performed exactly (double enumerations and the like). The
/// continued-fraction side stays unexpanded: the symbolic phase expands
/// it only to its cap, and seeded runs expand after specialization,
/// which keeps deep ranges cheap.
struct BuiltCheck {
    lhs: Vec<Poly>,
    spec: CfSpec,
    prefactor: Poly,
    extra_exact: Vec<(String, Poly, Poly)>,
}

impl BuiltCheck {
    fn rhs_coeffs(&self, order: usize) -> Vec<Poly> {
        self.spec
            .expand(order)
            .expect("spec depth covers the requested order")
            .coeffs()
            .iter()
            .map(|c| c.mul(&self.prefactor))
            .collect()
    }
}

struct CheckDef {
    id: &'static str,
    conjecture: bool,
    /// Largest `n` compared symbolically (0 = specialized only).
    sym_cap: usize,
    default_n_max: usize,
    /// Keep `lambda` symbolic during specialization.
    keep_lambda: bool,
    build: fn(&mut VarTable, usize) -> BuiltCheck,
}

fn first_failing(lhs: &[Poly], rhs: &[Poly], vt: &VarTable, upto: usize) -> Option<String> {
    for n in 0..=upto.min(lhs.len() - 1) {
        if lhs[n] != rhs[n] {
            // name one differing monomial and both coefficients
            let mut detail = format!("first mismatch at n={n}");
            'outer: for flip in [false, true] {
                let (a, b) = if flip {
                    (&rhs[n], &lhs[n])
                } else {
                    (&lhs[n], &rhs[n])
                };
                for (m, c) in a.terms() {
                    let c2 = b
                        .terms()
                        .find(|(m2, _)| *m2 == m)
                        .map(|(_, c2)| c2.clone())
                        .unwrap_or_else(BigInt::zero);
                    if *c != c2 {
                        let (lv, rv) = if flip { (c2, c.clone()) } else { (c.clone(), c2) };
                        detail = format!(
                            "first mismatch at n={n}, monomial {} : lhs {} vs rhs {}",
                            render_monomial(vt, m.exponents()),
                            lv,
                            rv
                        );
                        break 'outer;
                    }
                }
            }
            return Some(detail);
        }
    }
    None
}

fn render_monomial(vt: &VarTable, exps: &[u16]) -> String {
    let mut s = String::new();
    for (v, &e) in exps.iter().enumerate() {
        if e > 0 {
            s.push_str(&format!("{}^{} ", vt.name(v), e));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s.trim_end().to_string()
}

/// Distinct integers from `[2, 97]` for every variable except the kept
/// ones.
fn draw_assignment(
    vt: &VarTable,
    keep: &[usize],
    rng: &mut ChaCha8Rng,
) -> HashMap<usize, BigInt> {
    let mut pool: Vec<i64> = (2..=97).collect();
    pool.shuffle(rng);
    let mut map = HashMap::new();
    let mut next = 0usize;
    for v in 0..vt.len() {
        if keep.contains(&v) {
            continue;
        }
        let val = pool[next % pool.len()];
        next += 1;
        map.insert(v, BigInt::from(val));
    }
    map
}

fn run_engine_check(def: &CheckDef, opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(def.default_n_max);
    let mut vt = VarTable::new();
    let built = (def.build)(&mut vt, n_max);
    let mut status = Status::Pass;
    let mut details: Vec<String> = Vec::new();
    let mode_label = match opts.mode {
        Some(Mode::Symbolic) => "symbolic",
        Some(Mode::Specialized) => "specialized",
        None => "symbolic+specialized",
    };

    // exact comparisons (double enumerations, specialization agreements)
    for (what, a, b) in &built.extra_exact {
        if a != b {
            status = Status::Fail;
            details.push(format!("exact comparison failed: {what}"));
        }
    }

    // symbolic phase: expand the continued fraction only to the cap
    if opts.mode != Some(Mode::Specialized) && def.sym_cap > 0 {
        let upto = def.sym_cap.min(n_max);
        let rhs = built.rhs_coeffs(upto);
        if let Some(d) = first_failing(&built.lhs, &rhs, &vt, upto) {
            status = Status::Fail;
            details.push(format!("symbolic: {d}"));
        }
    }

    // specialized phase; the exact assignment of the first seed goes on
    // record, the rest reproduce from the seed values. Master checks have
    // no symbolic phase and run this one even when symbolic was forced.
    if opts.mode != Some(Mode::Symbolic) || def.sym_cap == 0 {
        let keep: Vec<usize> = if def.keep_lambda {
            vt.lookup("lambda").into_iter().collect()
        } else {
            Vec::new()
        };
        for s in 0..opts.num_seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(s as u64));
            let map = draw_assignment(&vt, &keep, &mut rng);
            let assignment = || {
                let mut assign: Vec<String> = map
                    .iter()
                    .map(|(v, val)| format!("{}={}", vt.name(*v), val))
                    .collect();
                assign.sort();
                assign.join(",")
            };
            if s == 0 {
                details.push(format!(
                    "specialized seeds {}..={} with {}",
                    opts.seed,
                    opts.seed.wrapping_add(opts.num_seeds as u64 - 1),
                    assignment()
                ));
            }
            let lhs: Vec<Poly> = built.lhs.iter().map(|p| p.specialize(&map)).collect();
            let specialized = BuiltCheck {
                lhs: Vec::new(),
                spec: built.spec.specialize(&map),
                prefactor: built.prefactor.specialize(&map),
                extra_exact: Vec::new(),
            };
            let rhs = specialized.rhs_coeffs(n_max);
            if let Some(d) = first_failing(&lhs, &rhs, &vt, n_max) {
                status = Status::Fail;
                details.push(format!(
                    "specialized (seed {}): {d}; assignment {}",
                    opts.seed.wrapping_add(s as u64),
                    assignment()
                ));
                break;
            }
        }
    }

    if status == Status::Fail && def.conjecture {
        status = Status::Counterexample;
    }
    TheoremCheck {
        check_id: def.id.to_string(),
        mode: mode_label.to_string(),
        n_max,
        seed: opts.seed,
        status,
        details: if details.is_empty() {
            None
        } else {
            Some(details.join("; "))
        },
        millis: start.elapsed().as_millis(),
    }
}

// ---------------------------------------------------------------------
// Shared algebra helpers
// ---------------------------------------------------------------------

fn int(k: i64) -> Poly {
    Poly::from_i64(k)
}

/// `base + c * step`
fn affine(base: &Poly, c: i64, step: &Poly) -> Poly {
    base.add(&step.scale(&BigInt::from(c)))
}

fn family_series(
    family: FamilyId,
    n_max: usize,
    vt: &mut VarTable,
    subs: &[(&str, Poly)],
) -> Vec<Poly> {
    (0..=n_max)
        .map(|n| {
            let mut p = build_polynomial(family, n, vt);
            for (name, value) in subs {
                if let Some(idx) = vt.lookup(name) {
                    p = p.substitute(idx, value);
                }
            }
            p
        })
        .collect()
}

// ---------------------------------------------------------------------
// First T-fraction and friends
// ---------------------------------------------------------------------

fn build_thm32(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::Pn12, n_max, vt, &[]);
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, ze, zo] = std_vars(vt);
    let spec = CfSpec::t_from_fn(n_max, ze.mul(&zo), |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&x1, k - 1, &u1).mul(&affine(&y1, k - 1, &v1))
        } else {
            affine(&x2, k - 1, &u2)
                .add(&we)
                .mul(&affine(&y2, k - 1, &v2).add(&wo))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn std_vars(vt: &mut VarTable) -> [Poly; 12] {
    [
        vt.var("x1"),
        vt.var("x2"),
        vt.var("y1"),
        vt.var("y2"),
        vt.var("u1"),
        vt.var("u2"),
        vt.var("v1"),
        vt.var("v2"),
        vt.var("we"),
        vt.var("wo"),
        vt.var("ze"),
        vt.var("zo"),
    ]
}

fn pq_var_polys(vt: &mut VarTable) -> [Poly; 10] {
    [
        vt.var("p-1"),
        vt.var("p-2"),
        vt.var("p+1"),
        vt.var("p+2"),
        vt.var("q-1"),
        vt.var("q-2"),
        vt.var("q+1"),
        vt.var("q+2"),
        vt.var("se"),
        vt.var("so"),
    ]
}

fn build_cor33(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    // 1 + ze zo t * sum P_n t^n  =  S-fraction of the augmented sequence
    let pn = family_series(FamilyId::Pn12, n_max.saturating_sub(1), vt, &[]);
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, ze, zo] = std_vars(vt);
    let zezo = ze.mul(&zo);
    let mut lhs = vec![Poly::one()];
    for n in 1..=n_max {
        lhs.push(zezo.mul(&pn[n - 1]));
    }
    let spec = CfSpec::s_from_fn(n_max, |i| {
        if i == 1 {
            return zezo.clone();
        }
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            // alpha_{2k-1} for k >= 2
            affine(&x2, k - 2, &u2)
                .add(&we)
                .mul(&affine(&y2, k - 2, &v2).add(&wo))
        } else {
            affine(&x1, k - 1, &u1).mul(&affine(&y1, k - 1, &v1))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor34(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    // restricted pure D-permutations: P_{n+1} with rars suppressed
    let with_ze0 = family_series(FamilyId::Pn12, n_max + 1, vt, &[("ze", Poly::zero())]);
    let with_zo0 = family_series(FamilyId::Pn12, n_max + 1, vt, &[("zo", Poly::zero())]);
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, _ze, _zo] = std_vars(vt);
    let lhs: Vec<Poly> = (0..=n_max).map(|n| with_ze0[n + 1].clone()).collect();
    // suppressing either parity of record-antirecord kills both
    let extra_exact = (0..=n_max + 1)
        .map(|n| {
            (
                format!("P_{n}(ze=0) = P_{n}(zo=0)"),
                with_ze0[n].clone(),
                with_zo0[n].clone(),
            )
        })
        .collect();
    let spec = CfSpec::t_from_fn(n_max, x1.mul(&y1), |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&x2, k - 1, &u2)
                .add(&we)
                .mul(&affine(&y2, k - 1, &v2).add(&wo))
        } else {
            affine(&x1, k, &u1).mul(&affine(&y1, k, &v1))
        }
    });
    BuiltCheck {
        lhs,
        prefactor: x1.mul(&y1),
        spec,
        extra_exact,
    }
}

fn build_prop35(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::Pn12, n_max, vt, &[]);
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, ze, zo] = std_vars(vt);
    let alpha: Vec<Poly> = (1..=n_max)
        .map(|i| {
            let k = ((i + 1) / 2) as i64;
            if i % 2 == 1 {
                affine(&x2, k - 1, &u2)
                    .add(&we)
                    .mul(&affine(&y1, k - 1, &v1))
            } else {
                affine(&x1, k - 1, &u1).mul(&affine(&y2, k - 1, &v2).add(&wo))
            }
        })
        .collect();
    let x1mx2mwe = x1.sub(&x2).sub(&we);
    let u1mu2 = u1.sub(&u2);
    let delta: Vec<Poly> = (1..=n_max)
        .map(|i| {
            if i == 1 {
                x1mx2mwe.mul(&y1).add(&ze.mul(&zo))
            } else if i % 2 == 1 {
                // i = 2k+1, k >= 1
                let k = ((i - 1) / 2) as i64;
                let part1 = x1mx2mwe.mul(
                    &y1.sub(&y2)
                        .add(&v1.scale(&BigInt::from(k)))
                        .sub(&v2.scale(&BigInt::from(k - 1)))
                        .sub(&wo),
                );
                let part2 = u1mu2.mul(
                    &y1.scale(&BigInt::from(k))
                        .sub(&y2.scale(&BigInt::from(k - 1)))
                        .add(&v1.scale(&BigInt::from(k * k)))
                        .sub(&v2.scale(&BigInt::from((k - 1) * (k - 1))))
                        .sub(&wo.scale(&BigInt::from(k - 1))),
                );
                part1.add(&part2)
            } else {
                Poly::zero()
            }
        })
        .collect();
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor36(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(
        FamilyId::Pn12,
        n_max,
        vt,
        &[
            ("y1", Poly::one()),
            ("y2", Poly::one()),
            ("v1", Poly::one()),
            ("v2", Poly::one()),
            ("wo", Poly::one()),
            ("zo", Poly::one()),
        ],
    );
    let x1 = vt.var("x1");
    let x2 = vt.var("x2");
    let u1 = vt.var("u1");
    let u2 = vt.var("u2");
    let we = vt.var("we");
    let ze = vt.var("ze");
    let alpha: Vec<Poly> = (1..=n_max)
        .map(|i| {
            let k = ((i + 1) / 2) as i64;
            if i % 2 == 1 {
                affine(&x2, k - 1, &u2).add(&we).scale(&BigInt::from(k))
            } else {
                affine(&x1, k - 1, &u1).scale(&BigInt::from(k + 1))
            }
        })
        .collect();
    let delta: Vec<Poly> = (1..=n_max)
        .map(|i| {
            if i == 1 {
                x1.sub(&x2).add(&ze).sub(&we)
            } else if i % 2 == 1 {
                let k = ((i - 1) / 2) as i64;
                u1.sub(&u2).scale(&BigInt::from(k + 1))
            } else {
                Poly::zero()
            }
        })
        .collect();
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor37(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::PnStar, n_max, vt, &[]);
    let x = vt.var("x");
    let u = vt.var("u");
    let we = vt.var("we");
    let spec = CfSpec::s_from_fn(n_max, |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&x, k - 1, &u).add(&we).scale(&BigInt::from(k))
        } else {
            affine(&x, k - 1, &u).scale(&BigInt::from(k + 1))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor38(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::PnStarPQ, n_max, vt, &[]);
    let x = vt.var("x");
    let u = vt.var("u");
    let we = vt.var("we");
    let pm = vt.var("p-");
    let qm = vt.var("q-");
    let spec = CfSpec::s_from_fn(n_max, |i| {
        let k = ((i + 1) / 2) as u32;
        let core = pm
            .pow(k - 1)
            .mul(&x)
            .add(&qm.mul(&pq_integer(k - 1, &pm, &qm)).mul(&u));
        if i % 2 == 1 {
            core.add(&we).scale(&BigInt::from(k))
        } else {
            core.scale(&BigInt::from(k + 1))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn pq_alpha_first(vt: &mut VarTable, i: usize) -> Poly {
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, _ze, _zo] = std_vars(vt);
    let [pm1, pm2, pp1, pp2, qm1, qm2, qp1, qp2, se, so] = pq_var_polys(vt);
    let k = ((i + 1) / 2) as u32;
    if i % 2 == 1 {
        let a = pm1
            .pow(k - 1)
            .mul(&x1)
            .add(&qm1.mul(&pq_integer(k - 1, &pm1, &qm1)).mul(&u1));
        let b = pp1
            .pow(k - 1)
            .mul(&y1)
            .add(&qp1.mul(&pq_integer(k - 1, &pp1, &qp1)).mul(&v1));
        a.mul(&b)
    } else {
        let a = pm2
            .pow(k - 1)
            .mul(&x2)
            .add(&qm2.mul(&pq_integer(k - 1, &pm2, &qm2)).mul(&u2))
            .add(&se.pow(k).mul(&we));
        let b = pp2
            .pow(k - 1)
            .mul(&y2)
            .add(&qp2.mul(&pq_integer(k - 1, &pp2, &qp2)).mul(&v2))
            .add(&so.pow(k).mul(&wo));
        a.mul(&b)
    }
}

fn build_thm34(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::Pn22, n_max, vt, &[]);
    let ze = vt.var("ze");
    let zo = vt.var("zo");
    let mut alpha = Vec::with_capacity(n_max);
    for i in 1..=n_max {
        alpha.push(pq_alpha_first(vt, i));
    }
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = ze.mul(&zo);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

/// Master sums `sum_{xi=0}^{k-1} m[k-1-xi, xi]` for a letter.
fn master_row_sum(vt: &mut VarTable, letter: char, k: u32) -> Poly {
    let mut acc = Poly::zero();
    for xi in 0..k {
        acc = acc.add(&vt.var(&format!("{letter}[{},{xi}]", k - 1 - xi)));
    }
    acc
}

fn master_alpha(vt: &mut VarTable, i: usize) -> Poly {
    let k = ((i + 1) / 2) as u32;
    if i % 2 == 1 {
        master_row_sum(vt, 'a', k).mul(&master_row_sum(vt, 'b', k))
    } else {
        let e = vt.var(&format!("e[{k}]"));
        let f = vt.var(&format!("f[{k}]"));
        master_row_sum(vt, 'c', k)
            .add(&e)
            .mul(&master_row_sum(vt, 'd', k).add(&f))
    }
}

fn build_thm39(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::Qn, n_max, vt, &[]);
    let e0 = vt.var("e[0]");
    let f0 = vt.var("f[0]");
    let mut alpha = Vec::with_capacity(n_max);
    for i in 1..=n_max {
        alpha.push(master_alpha(vt, i));
    }
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = e0.mul(&f0);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_thm311(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::QnPrime, n_max, vt, &[]);
    let qn = family_series(FamilyId::Qn, n_max.min(4), vt, &[]);
    let e0 = vt.var("e[0]");
    let f0 = vt.var("f[0]");
    let mut alpha = Vec::with_capacity(n_max);
    for i in 1..=n_max {
        alpha.push(master_alpha(vt, i));
    }
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = e0.mul(&f0);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    let extra_exact = qn
        .iter()
        .enumerate()
        .map(|(n, q)| (format!("Q_{n} = Q'_{n}"), q.clone(), lhs[n].clone()))
        .collect();
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact,
    }
}

fn build_thm312(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::PnPrime22, n_max, vt, &[]);
    let pn = family_series(FamilyId::Pn22, n_max.min(4), vt, &[]);
    let ze = vt.var("ze");
    let zo = vt.var("zo");
    let mut alpha = Vec::with_capacity(n_max);
    for i in 1..=n_max {
        alpha.push(pq_alpha_first(vt, i));
    }
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = ze.mul(&zo);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    let extra_exact = pn
        .iter()
        .enumerate()
        .map(|(n, p)| (format!("P_{n} = P'_{n}"), p.clone(), lhs[n].clone()))
        .collect();
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact,
    }
}

// ---------------------------------------------------------------------
// Second T-fraction and friends
// ---------------------------------------------------------------------

fn second_alpha(vt: &mut VarTable, i: usize) -> Poly {
    let [x1, x2, y1, y2, u1, u2, _v1, v2, we, wo, _ze, _zo] = std_vars(vt);
    let lam = vt.var("lambda");
    let k = ((i + 1) / 2) as i64;
    if i % 2 == 1 {
        affine(&lam, k - 1, &Poly::one())
            .mul(&affine(&x1, k - 1, &u1))
            .mul(&y1)
    } else {
        affine(&x2, k - 1, &u2)
            .add(&lam.mul(&we))
            .mul(&affine(&y2, k - 1, &v2).add(&lam.mul(&wo)))
    }
}

fn build_second_family(vt: &mut VarTable, n_max: usize, family: FamilyId) -> BuiltCheck {
    let lhs = {
        let y1 = vt.var("y1");
        family_series(family, n_max, vt, &[("v1", y1)])
    };
    let lam = vt.var("lambda");
    let ze = vt.var("ze");
    let zo = vt.var("zo");
    let mut alpha = Vec::with_capacity(n_max);
    for i in 1..=n_max {
        alpha.push(second_alpha(vt, i));
    }
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = lam.pow(2).mul(&ze).mul(&zo);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_thm42(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    build_second_family(vt, n_max, FamilyId::PnHatHat)
}

fn build_conj41(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    build_second_family(vt, n_max, FamilyId::PnHat)
}

fn build_conj41bisbis(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    // the reformulation by cycle-valley minima: same T-fraction shape as
    // the first T-fraction, with y1/v1 hosting the minimum split
    let lhs = family_series(FamilyId::PnTilde, n_max, vt, &[]);
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, ze, zo] = std_vars(vt);
    let spec = CfSpec::t_from_fn(n_max, ze.mul(&zo), |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&x1, k - 1, &u1).mul(&affine(&y1, k - 1, &v1))
        } else {
            affine(&x2, k - 1, &u2)
                .add(&we)
                .mul(&affine(&y2, k - 1, &v2).add(&wo))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor49(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    // the provable tilde form: cycle-double-rise split by record value
    let lhs = family_series(FamilyId::PnTildeHatHat, n_max, vt, &[]);
    let [x1, x2, y1, y2, u1, u2, v1, v2, we, wo, ze, zo] = std_vars(vt);
    let spec = CfSpec::t_from_fn(n_max, ze.mul(&zo), |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&x1, k - 1, &u1).mul(&affine(&y1, k - 1, &v1))
        } else {
            affine(&x2, k - 1, &u2)
                .add(&we)
                .mul(&affine(&y2, k - 1, &v2).add(&wo))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor43(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::PnStarCyc, n_max, vt, &[]);
    let x = vt.var("x");
    let u = vt.var("u");
    let we = vt.var("we");
    let lam = vt.var("lambda");
    let spec = CfSpec::s_from_fn(n_max, |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&lam, k - 1, &Poly::one())
                .mul(&affine(&x, k - 1, &u).add(&lam.mul(&we)))
        } else {
            affine(&lam, k, &Poly::one()).mul(&affine(&x, k - 1, &u))
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor48(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::PnStarCycPQ, n_max, vt, &[]);
    let x = vt.var("x");
    let u = vt.var("u");
    let we = vt.var("we");
    let pm = vt.var("p-");
    let qm = vt.var("q-");
    let lam = vt.var("lambda");
    let spec = CfSpec::s_from_fn(n_max, |i| {
        let k = ((i + 1) / 2) as u32;
        let core = pm
            .pow(k - 1)
            .mul(&x)
            .add(&qm.mul(&pq_integer(k - 1, &pm, &qm)).mul(&u));
        if i % 2 == 1 {
            affine(&lam, k as i64 - 1, &Poly::one()).mul(&core.add(&lam.mul(&we)))
        } else {
            affine(&lam, k as i64, &Poly::one()).mul(&core)
        }
    });
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_dcycle(vt: &mut VarTable, n_max: usize, family: FamilyId) -> BuiltCheck {
    // sum_n F_{n+1}(v1=y1) t^n = x1 y1 * S-fraction
    let shifted = {
        let y1 = vt.var("y1");
        family_series(family, n_max + 1, vt, &[("v1", y1)])
    };
    let lhs: Vec<Poly> = (0..=n_max).map(|n| shifted[n + 1].clone()).collect();
    let [x1, x2, y1, y2, u1, u2, _v1, v2, _we, _wo, _ze, _zo] = std_vars(vt);
    let spec = CfSpec::s_from_fn(n_max, |i| {
        let k = ((i + 1) / 2) as i64;
        if i % 2 == 1 {
            affine(&x2, k - 1, &u2).mul(&affine(&y2, k - 1, &v2))
        } else {
            affine(&x1, k, &u1).mul(&y1).scale(&BigInt::from(k))
        }
    });
    BuiltCheck {
        lhs,
        prefactor: x1.mul(&y1),
        spec,
        extra_exact: Vec::new(),
    }
}

fn build_conj45(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    build_dcycle(vt, n_max, FamilyId::Pdc)
}

fn build_cor46(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    build_dcycle(vt, n_max, FamilyId::PdcHatHat)
}

fn build_thm44(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = {
        let y1 = vt.var("y1");
        let pp1 = vt.var("p+1");
        family_series(
            FamilyId::PnHatHat22,
            n_max,
            vt,
            &[("v1", y1), ("q+1", pp1)],
        )
    };
    let [x1, x2, y1, y2, u1, u2, _v1, v2, we, wo, ze, zo] = std_vars(vt);
    let [pm1, pm2, pp1, pp2, qm1, qm2, _qp1, qp2, se, so] = pq_var_polys(vt);
    let lam = vt.var("lambda");
    let alpha: Vec<Poly> = (1..=n_max)
        .map(|i| {
            let k = ((i + 1) / 2) as u32;
            if i % 2 == 1 {
                // a rise from height 2k-2 carries p+1^{k-1} y1, so the
                // odd coefficient gets p+1^{k-1}
                affine(&lam, k as i64 - 1, &Poly::one())
                    .mul(&pp1.pow(k - 1))
                    .mul(&y1)
                    .mul(
                        &pm1.pow(k - 1)
                            .mul(&x1)
                            .add(&qm1.mul(&pq_integer(k - 1, &pm1, &qm1)).mul(&u1)),
                    )
            } else {
                let a = pm2
                    .pow(k - 1)
                    .mul(&x2)
                    .add(&qm2.mul(&pq_integer(k - 1, &pm2, &qm2)).mul(&u2))
                    .add(&lam.mul(&se.pow(k)).mul(&we));
                let b = pp2
                    .pow(k - 1)
                    .mul(&y2)
                    .add(&qp2.mul(&pq_integer(k - 1, &pp2, &qp2)).mul(&v2))
                    .add(&lam.mul(&so.pow(k)).mul(&wo));
                a.mul(&b)
            }
        })
        .collect();
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = lam.pow(2).mul(&ze).mul(&zo);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

fn build_cor47(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let shifted = {
        let y1 = vt.var("y1");
        let pp1 = vt.var("p+1");
        family_series(
            FamilyId::PdcHatHatPQ,
            n_max + 1,
            vt,
            &[("v1", y1), ("q+1", pp1)],
        )
    };
    let lhs: Vec<Poly> = (0..=n_max).map(|n| shifted[n + 1].clone()).collect();
    let [x1, x2, y1, y2, u1, u2, _v1, v2, _we, _wo, _ze, _zo] = std_vars(vt);
    let [pm1, pm2, pp1, pp2, qm1, qm2, _qp1, qp2, _se, _so] = pq_var_polys(vt);
    let spec = CfSpec::s_from_fn(n_max, |i| {
        let k = ((i + 1) / 2) as u32;
        if i % 2 == 1 {
            let a = pm2
                .pow(k - 1)
                .mul(&x2)
                .add(&qm2.mul(&pq_integer(k - 1, &pm2, &qm2)).mul(&u2));
            let b = pp2
                .pow(k - 1)
                .mul(&y2)
                .add(&qp2.mul(&pq_integer(k - 1, &pp2, &qp2)).mul(&v2));
            a.mul(&b)
        } else {
            pm1.pow(k)
                .mul(&x1)
                .add(&qm1.mul(&pq_integer(k, &pm1, &qm1)).mul(&u1))
                .mul(&pp1.pow(k))
                .mul(&y1)
                .scale(&BigInt::from(k))
        }
    });
    BuiltCheck {
        lhs,
        prefactor: x1.mul(&y1),
        spec,
        extra_exact: Vec::new(),
    }
}

fn build_thm46(vt: &mut VarTable, n_max: usize) -> BuiltCheck {
    let lhs = family_series(FamilyId::QHatHat, n_max, vt, &[]);
    let lam = vt.var("lambda");
    let e0 = vt.var("e[0]");
    let f0 = vt.var("f[0]");
    let mut alpha = Vec::with_capacity(n_max);
    for i in 1..=n_max {
        let k = ((i + 1) / 2) as u32;
        let a = if i % 2 == 1 {
            let ak = vt.var(&format!("a[{}]", k - 1));
            affine(&lam, k as i64 - 1, &Poly::one())
                .mul(&ak)
                .mul(&master_row_sum(vt, 'b', k))
        } else {
            let e = vt.var(&format!("e[{k}]"));
            let f = vt.var(&format!("f[{k}]"));
            master_row_sum(vt, 'c', k)
                .add(&lam.mul(&e))
                .mul(&master_row_sum(vt, 'd', k).add(&lam.mul(&f)))
        };
        alpha.push(a);
    }
    let mut delta = vec![Poly::zero(); n_max];
    if n_max > 0 {
        delta[0] = lam.pow(2).mul(&e0).mul(&f0);
    }
    let spec = CfSpec::t_fraction(alpha, delta);
    BuiltCheck {
        lhs,
        spec,
        prefactor: Poly::one(),
        extra_exact: Vec::new(),
    }
}

const ENGINE_CHECKS: &[CheckDef] = &[
    CheckDef {
        id: "thm3.2",
        conjecture: false,
        sym_cap: 4,
        default_n_max: 5,
        keep_lambda: false,
        build: build_thm32,
    },
    CheckDef {
        id: "cor3.3",
        conjecture: false,
        sym_cap: 4,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor33,
    },
    CheckDef {
        id: "cor3.4",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 4,
        keep_lambda: false,
        build: build_cor34,
    },
    CheckDef {
        id: "prop3.5",
        conjecture: false,
        sym_cap: 4,
        default_n_max: 5,
        keep_lambda: false,
        build: build_prop35,
    },
    CheckDef {
        id: "cor3.6",
        conjecture: false,
        sym_cap: 4,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor36,
    },
    CheckDef {
        id: "cor3.7",
        conjecture: false,
        sym_cap: 4,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor37,
    },
    CheckDef {
        id: "cor3.8",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor38,
    },
    CheckDef {
        id: "thm3.4",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_thm34,
    },
    CheckDef {
        id: "thm3.9",
        conjecture: false,
        sym_cap: 0,
        default_n_max: 5,
        keep_lambda: false,
        build: build_thm39,
    },
    CheckDef {
        id: "thm3.11",
        conjecture: false,
        sym_cap: 0,
        default_n_max: 5,
        keep_lambda: false,
        build: build_thm311,
    },
    CheckDef {
        id: "thm3.12",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_thm312,
    },
    CheckDef {
        id: "thm4.2",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: true,
        build: build_thm42,
    },
    CheckDef {
        id: "conj4.1",
        conjecture: true,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: true,
        build: build_conj41,
    },
    CheckDef {
        id: "conj4.1bisbis",
        conjecture: true,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_conj41bisbis,
    },
    CheckDef {
        id: "cor4.3",
        conjecture: false,
        sym_cap: 4,
        default_n_max: 5,
        keep_lambda: true,
        build: build_cor43,
    },
    CheckDef {
        id: "conj4.5",
        conjecture: true,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_conj45,
    },
    CheckDef {
        id: "cor4.6",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor46,
    },
    CheckDef {
        id: "thm4.4",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: true,
        build: build_thm44,
    },
    CheckDef {
        id: "cor4.7",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor47,
    },
    CheckDef {
        id: "cor4.8",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: true,
        build: build_cor48,
    },
    CheckDef {
        id: "cor4.9",
        conjecture: false,
        sym_cap: 3,
        default_n_max: 5,
        keep_lambda: false,
        build: build_cor49,
    },
    CheckDef {
        id: "thm4.6",
        conjecture: false,
        sym_cap: 0,
        default_n_max: 5,
        keep_lambda: true,
        build: build_thm46,
    },
];

// ---------------------------------------------------------------------
// Standalone checks
// ---------------------------------------------------------------------

fn ok(id: &str, n_max: usize, opts: &CheckOptions, start: Instant) -> TheoremCheck {
    TheoremCheck {
        check_id: id.to_string(),
        mode: "exact".to_string(),
        n_max,
        seed: opts.seed,
        status: Status::Pass,
        details: None,
        millis: start.elapsed().as_millis(),
    }
}

fn failed(
    id: &str,
    n_max: usize,
    opts: &CheckOptions,
    start: Instant,
    conjecture: bool,
    details: String,
) -> TheoremCheck {
    TheoremCheck {
        check_id: id.to_string(),
        mode: "exact".to_string(),
        n_max,
        seed: opts.seed,
        status: if conjecture {
            Status::Counterexample
        } else {
            Status::Fail
        },
        details: Some(details),
        millis: start.elapsed().as_millis(),
    }
}

macro_rules! expect {
    ($id:expr, $n:expr, $opts:expr, $start:expr, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            return failed($id, $n, $opts, $start, false, format!($($msg)*));
        }
    };
}

fn ints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn check_sequences(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let g = classical_sequences(SequenceName::Genocchi, 7);
    expect!(
        "sequences", 7, opts, start,
        g == ints(&[1, 1, 3, 17, 155, 2073, 38227, 929569]),
        "genocchi sequence mismatch: {g:?}"
    );
    let h = classical_sequences(SequenceName::Median, 7);
    expect!(
        "sequences", 7, opts, start,
        h == ints(&[1, 1, 2, 8, 56, 608, 9440, 198272]),
        "median sequence mismatch: {h:?}"
    );
    let hf = classical_sequences(SequenceName::HFlat, 6);
    expect!(
        "sequences", 7, opts, start,
        hf == ints(&[1, 1, 5, 41, 493, 8161, 178469]),
        "h-flat sequence mismatch: {hf:?}"
    );
    let e = classical_sequences(SequenceName::Euler, 9);
    expect!(
        "sequences", 7, opts, start,
        e == ints(&[1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]),
        "euler sequence mismatch: {e:?}"
    );
    let ae = classical_sequences(SequenceName::AugmentedEuler, 5);
    expect!(
        "sequences", 7, opts, start,
        ae == ints(&[1, 2, 3, 8, 25, 96]),
        "augmented euler mismatch: {ae:?}"
    );
    ok("sequences", 7, opts, start)
}

fn check_classcounts(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(6);
    let table: [(u64, u64, u64, u64, u64, u64); 7] = [
        (0, 1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 2),
        (1, 2, 3, 4, 5, 8),
        (3, 8, 17, 26, 41, 56),
        (17, 56, 155, 254, 493, 608),
        (155, 608, 2073, 3538, 8161, 9440),
        (2073, 9440, 38227, 67014, 178469, 198272),
    ];
    let g = classical_sequences(SequenceName::Genocchi, n_max);
    let h = classical_sequences(SequenceName::Median, n_max + 1);
    let hf = classical_sequences(SequenceName::HFlat, n_max + 1);
    for n in 0..=n_max.min(6) {
        let c = class_counts(n);
        expect!(
            "classcounts", n_max, opts, start,
            c.as_tuple() == table[n],
            "class-count row n={n}: got {:?}, want {:?}",
            c.as_tuple(),
            table[n]
        );
        // margins against the independent sequence generators
        expect!(
            "classcounts", n_max, opts, start,
            BigInt::from(c.all) == h[n + 1],
            "|D_2n| = h_n+1 at n={n}"
        );
        expect!(
            "classcounts", n_max, opts, start,
            BigInt::from(c.semiderangement) == g[n],
            "|De_2n| = g_n at n={n}"
        );
        expect!(
            "classcounts", n_max, opts, start,
            BigInt::from(c.derangement) == h[n],
            "|Deo_2n| = h_n at n={n}"
        );
        if n >= 1 {
            expect!(
                "classcounts", n_max, opts, start,
                BigInt::from(c.dcycle) == g[n - 1],
                "|DC_2n| = g_n-1 at n={n}"
            );
        }
        // the h-flat generator is already indexed as (hflat_{n+1})_{n>=0}
        expect!(
            "classcounts", n_max, opts, start,
            BigInt::from(c.pure) == hf[n],
            "|Dpure_2n| = hflat_n+1 at n={n}"
        );
    }
    ok("classcounts", n_max, opts, start)
}

fn check_crossids(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(8);
    // classical_sequences itself asserts the augmented-tangent,
    // binomial-Genocchi and augmented-secant identities while generating
    let g = classical_sequences(SequenceName::Genocchi, n_max);
    let h = classical_sequences(SequenceName::Median, n_max);
    let e = classical_sequences(SequenceName::Euler, 2 * n_max + 1);
    for n in 0..=n_max {
        let lhs = &g[n] * BigInt::from(4u64).pow(n as u32);
        let rhs = &e[2 * n + 1] * BigInt::from((n + 1) as u64);
        expect!(
            "crossids", n_max, opts, start,
            lhs == rhs,
            "4^n g_n = (n+1) E_2n+1 fails at n={n}"
        );
    }
    let t = seidel(2 * n_max + 1);
    seidel_margins_agree(&t, &g, &h);
    for n in 0..=n_max {
        expect!(
            "crossids", n_max, opts, start,
            t.genocchi(n) == g[n] && t.median(n) == h[n],
            "Seidel margins fail at n={n}"
        );
    }
    ok("crossids", n_max, opts, start)
}

fn check_transforms(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let order = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut draw = || int(rng.gen_range(1..=30));
    let alpha: Vec<Poly> = (0..20).map(|_| draw()).collect();
    let delta_odd: Vec<Poly> = (0..20)
        .map(|i| if i % 2 == 0 { draw() } else { Poly::zero() })
        .collect();
    let delta_even: Vec<Poly> = (0..20)
        .map(|i| if i % 2 == 1 { draw() } else { Poly::zero() })
        .collect();

    // even contraction
    let t = CfSpec::t_fraction(alpha.clone(), delta_odd.clone())
        .expand(order)
        .unwrap();
    let (gamma, beta) = contract_even(&alpha, &delta_odd).unwrap();
    let j = CfSpec::j_fraction(gamma, beta).expand(order).unwrap();
    expect!(
        "transforms", order, opts, start,
        t == j,
        "even contraction identity fails at order {order}"
    );

    // odd contraction: T = 1 + alpha_1 t J
    let t2 = CfSpec::t_fraction(alpha.clone(), delta_even.clone())
        .expand(order)
        .unwrap();
    let (lead, gamma2, beta2) = contract_odd(&alpha, &delta_even).unwrap();
    let j2 = CfSpec::j_fraction(gamma2, beta2).expand(order).unwrap();
    let rhs = TruncatedSeries::one(order).add(&j2.mul_poly(&lead).shift(1));
    expect!(
        "transforms", order, opts, start,
        t2 == rhs,
        "odd contraction identity fails at order {order}"
    );

    // combined contraction: the canonical shifted solution
    // alpha'_n = alpha_{n+1}, delta'_1 = alpha_1 + delta_2,
    // delta'_{2n+1} = delta_{2n+2}
    let shift_order = 10;
    let alpha_p: Vec<Poly> = alpha[1..].to_vec();
    let mut delta_p = vec![Poly::zero(); alpha_p.len()];
    delta_p[0] = alpha[0].add(&delta_even[1]);
    for n in 1..alpha_p.len() / 2 {
        if 2 * n + 1 < delta_even.len() {
            delta_p[2 * n] = delta_even[2 * n + 1].clone();
        }
    }
    let orig = CfSpec::t_fraction(alpha.clone(), delta_even.clone())
        .expand(shift_order + 1)
        .unwrap();
    let shifted = CfSpec::t_fraction(alpha_p, delta_p)
        .expand(shift_order)
        .unwrap();
    for n in 0..=shift_order {
        let want = orig.coeff(n + 1);
        let got = shifted.coeff(n).mul(&alpha[0]);
        expect!(
            "transforms", order, opts, start,
            *want == got,
            "combined contraction shift fails at n={n}"
        );
    }

    // augmentation and restriction
    let t_spec = CfSpec::t_fraction(alpha.clone(), delta_odd.clone());
    let aug = augment_restrict(&t_spec, TransformDirection::Augment).unwrap();
    let old = t_spec.expand(order).unwrap();
    let new = aug.expand(order).unwrap();
    let expect_new = TruncatedSeries::one(order).add(&old.mul_poly(&delta_odd[0]).shift(1));
    expect!(
        "transforms", order, opts, start,
        new == expect_new,
        "augmentation series identity fails"
    );
    let s_spec = CfSpec::s_fraction(alpha.clone());
    let restricted = augment_restrict(&s_spec, TransformDirection::Restrict).unwrap();
    let orig_series = s_spec.expand(order).unwrap();
    let back = TruncatedSeries::one(order)
        .add(&restricted.expand(order).unwrap().mul_poly(&alpha[0]).shift(1));
    expect!(
        "transforms", order, opts, start,
        back == orig_series,
        "restriction series identity fails"
    );
    ok("transforms", order, opts, start)
}

/// Multiset equality of the two 12-tuples of the equidistribution
/// conjecture.
fn check_equidistribution(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(5);
    for n in 0..=n_max {
        let mut counts: HashMap<[u32; 12], i64> = HashMap::new();
        for p in enumerate_d_permutations(n, DClass::All) {
            let s = stat_profile(&p);
            let a = [
                s.eareccpeak,
                s.eareccdfall,
                s.cval(),
                s.ereccdrise,
                s.nrcpeak,
                s.nrcdfall,
                s.nrcdrise,
                s.evennrfix,
                s.oddnrfix,
                s.evenrar,
                s.oddrar,
                s.cyc,
            ];
            let b = [
                s.eareccpeak,
                s.eareccdfall,
                s.cval(),
                s.ereccdrise_p,
                s.nrcpeak,
                s.nrcdfall,
                s.nrcdrise_p,
                s.evennrfix,
                s.oddnrfix,
                s.evenrar,
                s.oddrar,
                s.cyc,
            ];
            *counts.entry(a).or_insert(0) += 1;
            *counts.entry(b).or_insert(0) -= 1;
        }
        if counts.values().any(|&v| v != 0) {
            return failed(
                "conj4.1bis",
                n_max,
                opts,
                start,
                true,
                format!("12-tuple multisets differ at n={n}"),
            );
        }
    }
    ok("conj4.1bis", n_max, opts, start)
}

fn check_rz_remark(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(4);
    // pointwise: lema / remi / romi computed from record positions and
    // value parity agree with the primed statistics on o-semiderangements
    for n in 0..=n_max {
        for p in enumerate_d_permutations(n, DClass::OSemi) {
            let s = stat_profile(&p);
            let rec = p.record_positions();
            let arec = p.antirecord_positions();
            let lema = (1..=2 * n)
                .filter(|&j| rec[j - 1] && p.sigma(j) % 2 == 0 && !p.is_fixed_point(j))
                .count() as u32;
            let remi = (1..=2 * n)
                .filter(|&j| arec[j - 1] && p.sigma(j) % 2 == 0 && !p.is_fixed_point(j))
                .count() as u32;
            let romi = (1..=2 * n)
                .filter(|&j| arec[j - 1] && p.sigma(j) % 2 == 1)
                .count() as u32;
            expect!(
                "rz-remark", n_max, opts, start,
                lema == s.ereccpeak_p && remi == s.eareccdfall_p && romi == s.eareccval_p,
                "lema/remi/romi mismatch for {p}"
            );
        }
    }
    // polynomial route: the four-variable specialization of the variant
    // polynomial equals the direct sum over o-semiderangements
    let mut vt = VarTable::new();
    let spec_poly: Vec<Poly> = {
        let one = Poly::one();
        family_series(
            FamilyId::PnPrime22,
            n_max,
            &mut vt,
            &[
                ("y2", one.clone()),
                ("u1", one.clone()),
                ("u2", one.clone()),
                ("v1", one.clone()),
                ("v2", one.clone()),
                ("wo", Poly::zero()),
                ("ze", one.clone()),
                ("zo", Poly::zero()),
                ("p-1", one.clone()),
                ("p-2", one.clone()),
                ("p+1", one.clone()),
                ("p+2", one.clone()),
                ("q-1", one.clone()),
                ("q-2", one.clone()),
                ("q+1", one.clone()),
                ("q+2", one.clone()),
                ("se", one.clone()),
                ("so", one),
            ],
        )
    };
    for n in 0..=n_max {
        let mut direct = Poly::zero();
        for p in enumerate_d_permutations(n, DClass::OSemi) {
            let rec = p.record_positions();
            let arec = p.antirecord_positions();
            let lema = (1..=2 * n)
                .filter(|&j| rec[j - 1] && p.sigma(j) % 2 == 0 && !p.is_fixed_point(j))
                .count() as u32;
            let remi = (1..=2 * n)
                .filter(|&j| arec[j - 1] && p.sigma(j) % 2 == 0 && !p.is_fixed_point(j))
                .count() as u32;
            let romi = (1..=2 * n)
                .filter(|&j| arec[j - 1] && p.sigma(j) % 2 == 1)
                .count() as u32;
            let fix = p.fixed_points().count() as u32;
            let term = vt
                .var("x1")
                .pow(lema)
                .mul(&vt.var("y1").pow(romi))
                .mul(&vt.var("we").pow(fix))
                .mul(&vt.var("x2").pow(remi));
            direct = direct.add(&term);
        }
        expect!(
            "rz-remark", n_max, opts, start,
            spec_poly[n] == direct,
            "specialized variant polynomial differs from direct sum at n={n}"
        );
    }
    ok("rz-remark", n_max, opts, start)
}

// ---------------------------------------------------------------------
// Flajolet oracle
// ---------------------------------------------------------------------

fn check_flajolet(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(4).min(opts.cap / 2);
    // all-weights-1 sanity for both systems at n=2 (= |D_4| = 8) is part
    // of the module tests; here run the seeded dual computation.
    for s in 0..opts.num_seeds.min(2) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(s as u64));
        let mut vt = VarTable::new();
        let names = [
            "x1", "x2", "y1", "y2", "u1", "u2", "v1", "v2", "we", "wo", "ze", "zo", "p-1", "p-2",
            "p+1", "p+2", "q-1", "q-2", "q+1", "q+2", "se", "so",
        ];
        let mut pool: Vec<i64> = (2..=97).collect();
        pool.shuffle(&mut rng);
        let assign: HashMap<&str, BigInt> = names
            .iter()
            .enumerate()
            .map(|(i, &n)| (n, BigInt::from(pool[i])))
            .collect();
        for name in names {
            vt.intern(name);
        }
        let v = |name: &str| Poly::constant(assign[name].clone());

        // first label system with the proof's weight dictionary
        let weights1 = {
            let (x1, u1) = (v("x1"), v("u1"));
            let (x2, u2) = (v("x2"), v("u2"));
            let (y1, v1) = (v("y1"), v("v1"));
            let (y2, v2) = (v("y2"), v("v2"));
            let (we, wo, ze, zo) = (v("we"), v("wo"), v("ze"), v("zo"));
            let (pm1, pm2, pp1, pp2) = (v("p-1"), v("p-2"), v("p+1"), v("p+2"));
            let (qm1, qm2, qp1, qp2) = (v("q-1"), v("q-2"), v("q+1"), v("q+2"));
            let (se, so) = (v("se"), v("so"));
            move |ctx: &StepContext| -> Poly {
                let PathLabel::Single(xi) = ctx.label else {
                    unreachable!()
                };
                match ctx.step {
                    Step::Rise if ctx.height % 2 == 0 => {
                        // a_{k-xi, xi} at h = 2k
                        let k = (ctx.height / 2) as u32;
                        let base = if xi == 0 { &y1 } else { &v1 };
                        pp1.pow(k - xi).mul(&qp1.pow(xi)).mul(base)
                    }
                    Step::Rise => {
                        // h = 2k-1: c_{k-1-xi, xi} or e_k
                        let k = ((ctx.height + 1) / 2) as u32;
                        if xi == k {
                            se.pow(k).mul(&we)
                        } else {
                            let base = if xi == 0 { &x2 } else { &u2 };
                            pm2.pow(k - 1 - xi).mul(&qm2.pow(xi)).mul(base)
                        }
                    }
                    Step::Fall if ctx.height % 2 == 0 => {
                        // h = 2k: d_{k-1-xi, xi} or f_k
                        let k = (ctx.height / 2) as u32;
                        if xi == k {
                            so.pow(k).mul(&wo)
                        } else {
                            let base = if xi == 0 { &y2 } else { &v2 };
                            pp2.pow(k - 1 - xi).mul(&qp2.pow(xi)).mul(base)
                        }
                    }
                    Step::Fall => {
                        // h = 2k+1: b_{k-xi, xi}
                        let k = ((ctx.height - 1) / 2) as u32;
                        let base = if xi == 0 { &x1 } else { &u1 };
                        pm1.pow(k - xi).mul(&qm1.pow(xi)).mul(base)
                    }
                    Step::LongLevel => ze.mul(&zo),
                }
            }
        };
        let system1 = LabelSystem::first_bijection();
        // continued-fraction side: the 22-variable T-fraction at the same
        // assignment
        let mut vt2 = VarTable::new();
        let built = build_thm34(&mut vt2, n_max);
        let map: HashMap<usize, BigInt> = (0..vt2.len())
            .map(|i| {
                let name = vt2.name(i).to_string();
                (i, assign[name.as_str()].clone())
            })
            .collect();
        let rhs_all = BuiltCheck {
            lhs: Vec::new(),
            spec: built.spec.specialize(&map),
            prefactor: built.prefactor.specialize(&map),
            extra_exact: Vec::new(),
        }
        .rhs_coeffs(n_max);
        for n in 0..=n_max {
            let lhs = paths::flajolet_weight_sum(&system1, &weights1, 2 * n, opts.cap);
            let rhs = rhs_all[n].clone();
            expect!(
                "flajolet", n_max, opts, start,
                lhs == rhs,
                "first system weight sum differs from T-fraction at n={n} seed {s}"
            );
        }

        // second label system, lambda symbolic
        let mut vt3 = VarTable::new();
        let lam = vt3.var("lambda");
        let weights2 = {
            let (x1, u1) = (v("x1"), v("u1"));
            let (x2, u2) = (v("x2"), v("u2"));
            let (y1, y2, v2) = (v("y1"), v("y2"), v("v2"));
            let (we, wo, ze, zo) = (v("we"), v("wo"), v("ze"), v("zo"));
            let (pm1, pm2, pp1, pp2) = (v("p-1"), v("p-2"), v("p+1"), v("p+2"));
            let (qm1, qm2, qp2) = (v("q-1"), v("q-2"), v("q+2"));
            let (se, so) = (v("se"), v("so"));
            let lam = lam.clone();
            move |ctx: &StepContext| -> Poly {
                let PathLabel::Pair(xp, xpp) = ctx.label else {
                    unreachable!()
                };
                match ctx.step {
                    Step::Rise if ctx.height % 2 == 0 => {
                        // a_k = p+1^k y1 at h = 2k
                        let k = (ctx.height / 2) as u32;
                        pp1.pow(k).mul(&y1)
                    }
                    Step::Rise => {
                        let k = ((ctx.height + 1) / 2) as u32;
                        if xpp == k {
                            lam.mul(&se.pow(k)).mul(&we)
                        } else {
                            let base = if xpp == 0 { &x2 } else { &u2 };
                            pm2.pow(k - 1 - xpp).mul(&qm2.pow(xpp)).mul(base)
                        }
                    }
                    Step::Fall if ctx.height % 2 == 0 => {
                        let k = (ctx.height / 2) as u32;
                        if xp == k {
                            lam.mul(&so.pow(k)).mul(&wo)
                        } else {
                            let base = if xp == 0 { &y2 } else { &v2 };
                            pp2.pow(k - 1 - xp).mul(&qp2.pow(xp)).mul(base)
                        }
                    }
                    Step::Fall => {
                        let k = ((ctx.height - 1) / 2) as u32;
                        let base = if xpp == 0 { &x1 } else { &u1 };
                        let b = pm1.pow(k - xpp).mul(&qm1.pow(xpp)).mul(base);
                        if ctx.closes_cycle {
                            lam.mul(&b)
                        } else {
                            b
                        }
                    }
                    Step::LongLevel => lam.pow(2).mul(&ze).mul(&zo),
                }
            }
        };
        let system2 = LabelSystem::second_bijection();
        let mut vt4 = VarTable::new();
        let built2 = build_thm44(&mut vt4, n_max);
        let lam_idx = vt4.lookup("lambda");
        let map2: HashMap<usize, BigInt> = (0..vt4.len())
            .filter(|i| Some(*i) != lam_idx)
            .map(|i| {
                let name = vt4.name(i).to_string();
                // thm4.4 identifies q+1 with p+1
                let key = if name == "q+1" { "p+1" } else { name.as_str() };
                (i, assign[key].clone())
            })
            .collect();
        let rhs2_all = BuiltCheck {
            lhs: Vec::new(),
            spec: built2.spec.specialize(&map2),
            prefactor: built2.prefactor.specialize(&map2),
            extra_exact: Vec::new(),
        }
        .rhs_coeffs(n_max);
        for n in 0..=n_max {
            let lhs = paths::flajolet_weight_sum(&system2, &weights2, 2 * n, opts.cap);
            let rhs = rhs2_all[n].clone();
            // both live over different tables; compare via rendering on
            // lambda exponents
            expect!(
                "flajolet", n_max, opts, start,
                poly_eq_across_tables(&lhs, &vt3, &rhs, &vt4),
                "second system weight sum differs from T-fraction at n={n} seed {s}"
            );
        }
    }
    ok("flajolet", n_max, opts, start)
}

/// Compare polynomials from different tables by rendering against their
/// own tables (used where one side only carries `lambda`).
fn poly_eq_across_tables(a: &Poly, ta: &VarTable, b: &Poly, tb: &VarTable) -> bool {
    a.render(ta) == b.render(tb)
}

// ---------------------------------------------------------------------
// Appendix A
// ---------------------------------------------------------------------

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn check_appendix_a(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let points = opts.n_max.unwrap_or(20).max(1);
    let mut vt = VarTable::new();
    let x = vt.var("x");
    let y = vt.var("y");
    let lam = vt.var("lambda");
    // P_n(x, y, lambda) for n = 0..6, one enumeration pass each
    let pn: Vec<Poly> = (0..=6).map(|n| build_polynomial(FamilyId::PnXYLam, n, &mut vt)).collect();

    // printed displays
    let one = Poly::one();
    let g0 = lam.mul(&x).mul(&lam.mul(&x).add(&y));
    let b1 = lam
        .mul(&x)
        .mul(&y)
        .mul(&lam.add(&x))
        .mul(&lam.add(&y));
    let g1 = one.add(&lam).mul(&lam.add(&x).add(&y).add(&x.mul(&y)));
    let b2 = {
        let t3 = lam.pow(3).mul(&one.add(&x.mul(&y)));
        let t2 = lam.pow(2).mul(
            &int(2)
                .add(&x)
                .add(&x.pow(2))
                .add(&y)
                .add(&x.mul(&y).scale(&BigInt::from(4)))
                .add(&y.pow(2)),
        );
        let t1 = lam.mul(
            &one.add(&x.scale(&BigInt::from(3)))
                .add(&x.pow(2))
                .add(&y.scale(&BigInt::from(3)))
                .add(&x.mul(&y).scale(&BigInt::from(4)))
                .add(&x.pow(2).mul(&y))
                .add(&y.pow(2))
                .add(&x.mul(&y.pow(2)))
                .add(&x.pow(2).mul(&y.pow(2))),
        );
        let t0 = x
            .add(&y)
            .add(&x.pow(2).mul(&y))
            .add(&x.mul(&y.pow(2)))
            .scale(&BigInt::from(2));
        t3.add(&t2).add(&t1).add(&t0)
    };
    let n_big = {
        let l4 = lam.pow(4).mul(&one.add(&x.mul(&y)));
        let l3 = lam.pow(3).mul(
            &int(5)
                .add(&x)
                .add(&x.pow(2).scale(&BigInt::from(2)))
                .add(&y)
                .add(&x.mul(&y).scale(&BigInt::from(10)))
                .add(&y.pow(2).scale(&BigInt::from(2)))
                .add(&x.pow(2).mul(&y.pow(2))),
        );
        let l2 = lam.pow(2).mul(
            &int(7)
                .add(&x.scale(&BigInt::from(8)))
                .add(&x.pow(2).scale(&BigInt::from(8)))
                .add(&y.scale(&BigInt::from(8)))
                .add(&x.mul(&y).scale(&BigInt::from(26)))
                .add(&x.pow(2).mul(&y).scale(&BigInt::from(4)))
                .add(&x.pow(3).mul(&y).scale(&BigInt::from(2)))
                .add(&y.pow(2).scale(&BigInt::from(8)))
                .add(&x.mul(&y.pow(2)).scale(&BigInt::from(4)))
                .add(&x.pow(2).mul(&y.pow(2)).scale(&BigInt::from(7)))
                .add(&x.mul(&y.pow(3)).scale(&BigInt::from(2))),
        );
        let l1 = lam.mul(
            &int(3)
                .add(&x.scale(&BigInt::from(15)))
                .add(&x.pow(2).scale(&BigInt::from(8)))
                .add(&x.pow(3).scale(&BigInt::from(2)))
                .add(&y.scale(&BigInt::from(15)))
                .add(&x.mul(&y).scale(&BigInt::from(22)))
                .add(&x.pow(2).mul(&y).scale(&BigInt::from(18)))
                .add(&x.pow(3).mul(&y).scale(&BigInt::from(5)))
                .add(&y.pow(2).scale(&BigInt::from(8)))
                .add(&x.mul(&y.pow(2)).scale(&BigInt::from(18)))
                .add(&x.pow(2).mul(&y.pow(2)).scale(&BigInt::from(13)))
                .add(&x.pow(3).mul(&y.pow(2)))
                .add(&y.pow(3).scale(&BigInt::from(2)))
                .add(&x.mul(&y.pow(3)).scale(&BigInt::from(5)))
                .add(&x.pow(2).mul(&y.pow(3))),
        );
        let l0 = x
            .scale(&BigInt::from(8))
            .add(&x.pow(2).scale(&BigInt::from(2)))
            .add(&x.pow(3).scale(&BigInt::from(2)))
            .add(&y.scale(&BigInt::from(8)))
            .add(&x.mul(&y).scale(&BigInt::from(5)))
            .add(&x.pow(2).mul(&y).scale(&BigInt::from(18)))
            .add(&x.pow(3).mul(&y))
            .add(&y.pow(2).scale(&BigInt::from(2)))
            .add(&x.mul(&y.pow(2)).scale(&BigInt::from(18)))
            .add(&x.pow(2).mul(&y.pow(2)).scale(&BigInt::from(4)))
            .add(&x.pow(3).mul(&y.pow(2)).scale(&BigInt::from(4)))
            .add(&y.pow(3).scale(&BigInt::from(2)))
            .add(&x.mul(&y.pow(3)))
            .add(&x.pow(2).mul(&y.pow(3)).scale(&BigInt::from(4)))
            .add(&x.pow(3).mul(&y.pow(3)));
        one.add(&lam)
            .mul(&l4.add(&l3).add(&l2).add(&l1).add(&l0))
    };
    let d_big = {
        let l3 = lam.pow(3).mul(&one.add(&x.mul(&y)));
        let l2 = lam.pow(2).mul(
            &int(2)
                .add(&x)
                .add(&x.pow(2))
                .add(&y)
                .add(&x.mul(&y).scale(&BigInt::from(4)))
                .add(&y.pow(2)),
        );
        let l1 = lam.mul(
            &one.add(&x.scale(&BigInt::from(3)))
                .add(&x.pow(2))
                .add(&y.scale(&BigInt::from(3)))
                .add(&x.mul(&y).scale(&BigInt::from(4)))
                .add(&x.pow(2).mul(&y))
                .add(&y.pow(2))
                .add(&x.mul(&y.pow(2)))
                .add(&x.pow(2).mul(&y.pow(2))),
        );
        let l0 = x.add(&y).mul(&one.add(&x.mul(&y))).scale(&BigInt::from(2));
        l3.add(&l2).add(&l1).add(&l0)
    };

    let x_idx = vt.lookup("x").unwrap();
    let y_idx = vt.lookup("y").unwrap();
    let l_idx = vt.lookup("lambda").unwrap();
    let eval3 = |p: &Poly, xv: &BigRational, yv: &BigRational, lv: &BigRational| {
        let mut vals = vec![BigRational::zero(); vt.len()];
        vals[x_idx] = xv.clone();
        vals[y_idx] = yv.clone();
        vals[l_idx] = lv.clone();
        p.eval_rational(&vals)
    };

    // fixed sanity point (1,1,1): gamma = 2, 8, 18; beta = 4, 36
    {
        let onev = BigRational::one();
        let m: Vec<BigRational> = pn.iter().map(|p| eval3(p, &onev, &onev, &onev)).collect();
        let (gamma, beta) = jfraction_from_moments(&m, 2).unwrap();
        let want_g: Vec<BigRational> = [2i64, 8, 18].iter().map(|&v| rational(v, 1)).collect();
        let want_b: Vec<BigRational> = [4i64, 36].iter().map(|&v| rational(v, 1)).collect();
        expect!(
            "appendix-a", points, opts, start,
            gamma == want_g && beta == want_b,
            "J-coefficients at (1,1,1) differ: gamma {gamma:?} beta {beta:?}"
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let draw_rational = |rng: &mut ChaCha8Rng| loop {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=5);
        if num != 0 {
            return rational(num, den);
        }
    };
    let mut done = 0usize;
    let mut attempts = 0usize;
    while done < points {
        attempts += 1;
        expect!(
            "appendix-a", points, opts, start,
            attempts < 40 * points,
            "could not find {points} usable evaluation points"
        );
        let xv = draw_rational(&mut rng);
        let yv = draw_rational(&mut rng);
        let lv = draw_rational(&mut rng);
        let m: Vec<BigRational> = pn.iter().map(|p| eval3(p, &xv, &yv, &lv)).collect();
        // gamma_2 needs nonzero pivots along the way
        let dv = eval3(&d_big, &xv, &yv, &lv);
        let b1v = eval3(&b1, &xv, &yv, &lv);
        if dv.is_zero() || b1v.is_zero() {
            continue; // unlucky draw: resample
        }
        let extraction = jfraction_from_moments(&m, 2);
        let (gamma, beta) = match extraction {
            Ok(v) => v,
            Err(_) => continue,
        };
        if beta.iter().any(BigRational::is_zero) {
            continue; // gamma_2 undefined here: resample
        }
        let ok_gb = gamma[0] == eval3(&g0, &xv, &yv, &lv)
            && beta[0] == b1v
            && gamma[1] == eval3(&g1, &xv, &yv, &lv)
            && beta[1] == eval3(&b2, &xv, &yv, &lv);
        expect!(
            "appendix-a", points, opts, start,
            ok_gb,
            "printed gamma0/beta1/gamma1/beta2 fail at ({xv},{yv},{lv})"
        );
        // gamma_2 * D = N
        let nv = eval3(&n_big, &xv, &yv, &lv);
        expect!(
            "appendix-a", points, opts, start,
            &gamma[2] * &dv == nv,
            "gamma2 * D != N at ({xv},{yv},{lv})"
        );
        done += 1;
    }

    // specialization rows
    // lambda = +1: T-fraction and its contracted J-fraction
    {
        let p_at = |n: usize| pn[n].substitute(l_idx, &Poly::one());
        let order = 5;
        let alpha: Vec<Poly> = (1..=order)
            .map(|i| {
                let k = ((i + 1) / 2) as i64;
                if i % 2 == 1 {
                    affine(&x, k - 1, &Poly::one()).mul(&affine(&y, k - 1, &Poly::one()))
                } else {
                    affine(&x, k, &Poly::one()).mul(&affine(&y, k, &Poly::one()))
                }
            })
            .collect();
        let mut delta = vec![Poly::zero(); order];
        delta[0] = x.pow(2);
        let spec = CfSpec::t_fraction(alpha.clone(), delta.clone());
        let series = spec.expand(order).unwrap();
        for n in 0..=order {
            expect!(
                "appendix-a", points, opts, start,
                *series.coeff(n) == p_at(n.min(6)),
                "lambda=+1 row fails at n={n}"
            );
        }
        // contraction: gamma_0 = x(x+y), gamma_n = 2(x+n)(y+n),
        // beta_n = (x+n-1)(x+n)(y+n-1)(y+n)
        let (gamma, beta) = contract_even(&alpha, &delta).unwrap();
        expect!(
            "appendix-a", points, opts, start,
            gamma[0] == x.mul(&x.add(&y)),
            "lambda=+1 gamma_0"
        );
        for (n, g) in gamma.iter().enumerate().skip(1).take(2) {
            let want = affine(&x, n as i64, &Poly::one())
                .mul(&affine(&y, n as i64, &Poly::one()))
                .scale(&BigInt::from(2));
            expect!(
                "appendix-a", points, opts, start,
                *g == want,
                "lambda=+1 gamma_{n}"
            );
        }
        for (n0, b) in beta.iter().enumerate().take(2) {
            let n = (n0 + 1) as i64;
            let want = affine(&x, n - 1, &Poly::one())
                .mul(&affine(&x, n, &Poly::one()))
                .mul(&affine(&y, n - 1, &Poly::one()))
                .mul(&affine(&y, n, &Poly::one()));
            expect!(
                "appendix-a", points, opts, start,
                *b == want,
                "lambda=+1 beta_{n}"
            );
        }
    }
    // x = +1 and y = +1 rows: T-fractions in (y, lambda) resp. (x, lambda)
    for row in ["x", "y"] {
        let (sub_idx, var) = if row == "x" {
            (x_idx, y.clone())
        } else {
            (y_idx, x.clone())
        };
        let p_at = |n: usize| pn[n].substitute(sub_idx, &Poly::one());
        let order = 5;
        let alpha: Vec<Poly> = (1..=order)
            .map(|i| {
                let k = ((i + 1) / 2) as i64;
                if i % 2 == 1 {
                    affine(&lam, k - 1, &Poly::one()).mul(&affine(&var, k - 1, &Poly::one()))
                } else {
                    affine(&lam, k, &Poly::one()).mul(&affine(&var, k - 1, &Poly::one()).add(&lam))
                }
            })
            .collect();
        let mut delta = vec![Poly::zero(); order];
        delta[0] = if row == "x" {
            lam.pow(2)
        } else {
            lam.pow(2).mul(&x.pow(2))
        };
        let spec = CfSpec::t_fraction(alpha, delta);
        let series = spec.expand(order).unwrap();
        for n in 0..=order {
            expect!(
                "appendix-a", points, opts, start,
                *series.coeff(n) == p_at(n.min(6)),
                "{row}=+1 row fails at n={n}"
            );
        }
    }
    // x = y = 0: P_n(0,0,lambda) = [n = 0]
    {
        let zero = Poly::zero();
        for (n, p) in pn.iter().enumerate() {
            let v = p.substitute(x_idx, &zero).substitute(y_idx, &zero);
            let want = if n == 0 { Poly::one() } else { Poly::zero() };
            expect!(
                "appendix-a", points, opts, start,
                v == want,
                "x=y=0 row fails at n={n}"
            );
        }
    }
    // y = 0: P_n(x,0,lambda) = lambda^{2n} x^{2n}, the identity
    // permutation only; S-fraction alpha_1 = lambda^2 x^2, rest 0
    {
        let zero = Poly::zero();
        for (n, p) in pn.iter().enumerate() {
            let v = p.substitute(y_idx, &zero);
            let want = lam.pow(2 * n as u32).mul(&x.pow(2 * n as u32));
            expect!(
                "appendix-a", points, opts, start,
                v == want,
                "y=0 row fails at n={n}"
            );
        }
        let mut alpha = vec![Poly::zero(); 6];
        alpha[0] = lam.pow(2).mul(&x.pow(2));
        let spec = CfSpec::s_fraction(alpha);
        let series = spec.expand(6).unwrap();
        for n in 0..=6usize {
            let want = lam.pow(2 * n as u32).mul(&x.pow(2 * n as u32));
            expect!(
                "appendix-a", points, opts, start,
                *series.coeff(n) == want,
                "y=0 S-fraction fails at n={n}"
            );
        }
    }
    // report-only rows: lambda = -1 (conjectured J-fraction) and
    // lambda = -2 (gamma_2 display)
    let mut conj_details = Vec::new();
    {
        let lv = rational(-1, 1);
        let mut tried = 0;
        let mut used = 0;
        while used < 5 && tried < 200 {
            tried += 1;
            let xv = draw_rational(&mut rng);
            let yv = draw_rational(&mut rng);
            let bv = -(&xv * &yv)
                * (BigRational::one() - &xv)
                * (BigRational::one() - &yv);
            if bv.is_zero() {
                continue;
            }
            let m: Vec<BigRational> = pn.iter().map(|p| eval3(p, &xv, &yv, &lv)).collect();
            let Ok((gamma, beta)) = jfraction_from_moments(&m, 3) else {
                // the conjectured row promises beta_n = bv != 0, so a
                // vanishing pivot is itself a counterexample
                conj_details.push(format!("lambda=-1 pivot vanishes at ({xv},{yv})"));
                break;
            };
            used += 1;
            let g0_want = &xv * (&xv - &yv);
            if gamma[0] != g0_want
                || !gamma[1].is_zero()
                || !gamma[2].is_zero()
                || beta[0] != bv
                || beta[1] != bv
                || beta[2] != bv
            {
                conj_details.push(format!("lambda=-1 row fails at ({xv},{yv})"));
                break;
            }
        }
    }
    {
        let lv = rational(-2, 1);
        let mut tried = 0;
        let mut used = 0;
        while used < 5 && tried < 200 {
            tried += 1;
            let xv = draw_rational(&mut rng);
            let yv = draw_rational(&mut rng);
            let m: Vec<BigRational> = pn.iter().map(|p| eval3(p, &xv, &yv, &lv)).collect();
            let Ok((gamma, beta)) = jfraction_from_moments(&m, 2) else {
                continue;
            };
            // a vanishing pivot means gamma_2 is undefined at this point:
            // resample
            if beta.iter().any(BigRational::is_zero) {
                continue;
            }
            used += 1;
            let want = -BigRational::one() + &xv + &yv + (&xv * &yv) * rational(1, 2);
            if gamma[2] != want {
                conj_details.push(format!("lambda=-2 gamma_2 fails at ({xv},{yv})"));
                break;
            }
        }
    }
    let mut out = ok("appendix-a", points, opts, start);
    if !conj_details.is_empty() {
        out.status = Status::Counterexample;
        out.details = Some(conj_details.join("; "));
    }
    out
}

// ---------------------------------------------------------------------
// Bijection suite
// ---------------------------------------------------------------------

/// The frozen worked example: almost-Dyck heights and both label tables
/// of the running 14-point permutation, byte for byte.
pub const WORKED_EXAMPLE: &str = "\
word: 7 1 9 2 5 4 8 6 10 3 11 12 14 13
heights: 1 2 3 4 3 4 3 2 1 0 -1 0 1 0
xi even: 0 0 1 1 0 0 0
xi odd: 0 0 2 1 0 0 0
xihat F': 0 0 1 1 0 0 0
xihat G': 0 0 2 1 0 0 0
";

pub fn render_worked_example(p: &Permutation) -> String {
    let path = fz_path(p);
    let hs = path.heights();
    let xi = fz_labels(p, LabelVariant::Xi);
    let xihat = fz_labels(p, LabelVariant::XiHat);
    let n = p.len() / 2;
    // xihat is printed against the even and odd subwords
    let f_set: Vec<usize> = (1..=n).map(|a| p.sigma(2 * a) as usize).collect();
    let g_set: Vec<usize> = (1..=n).map(|a| p.sigma(2 * a - 1) as usize).collect();
    let join = |v: Vec<String>| v.join(" ");
    format!(
        "word: {}\nheights: {}\nxi even: {}\nxi odd: {}\nxihat F': {}\nxihat G': {}\n",
        join(p.word().iter().map(|x| x.to_string()).collect()),
        join(hs[1..].iter().map(|h| h.to_string()).collect()),
        join((1..=n).map(|a| xi[2 * a - 1].to_string()).collect()),
        join((1..=n).map(|a| xi[2 * a - 2].to_string()).collect()),
        join(f_set.iter().map(|&v| xihat[v - 1].to_string()).collect()),
        join(g_set.iter().map(|&v| xihat[v - 1].to_string()).collect()),
    )
}

fn check_bijections(opts: &CheckOptions) -> TheoremCheck {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(5);
    // the worked example must match byte for byte
    let fig1 = Permutation::new(vec![7, 1, 9, 2, 5, 4, 8, 6, 10, 3, 11, 12, 14, 13]).unwrap();
    expect!(
        "bijections", n_max, opts, start,
        render_worked_example(&fig1) == WORKED_EXAMPLE,
        "worked example rendering mismatch"
    );
    let mut total = 0u64;
    for n in 0..=n_max {
        for p in enumerate_d_permutations(n, DClass::All) {
            total += 1;
            if let Err(e) = bijection_lemmas_hold(&p) {
                return failed("bijections", n_max, opts, start, false, format!("{p}: {e}"));
            }
        }
    }
    let mut out = ok("bijections", n_max, opts, start);
    out.details = Some(format!("{total} permutations checked"));
    out
}

/// Every pointwise lemma of both bijections for one permutation:
/// heights, label interpretations, bounds, crossing complements, cycle
/// classification, record detection, and the three roundtrips.
pub fn bijection_lemmas_hold(p: &Permutation) -> std::result::Result<(), String> {
    let n2 = p.len();
    let path = fz_path(p);
    let hs = path.heights();
    let err = |msg: String| -> std::result::Result<(), String> { Err(msg) };

    // height interpretation: h_k = 2 f_k - [k odd], parity, rar windows
    for k in 1..=n2 {
        let f_k = (1..=k).filter(|&i| p.sigma(i) as usize > k).count() as i64;
        let want = if k % 2 == 1 { 2 * f_k - 1 } else { 2 * f_k };
        if hs[k] != want {
            return err(format!("height law fails at k={k}"));
        }
        if (hs[k] % 2 + 2) % 2 != (k % 2) as i64 {
            return err(format!("height parity fails at k={k}"));
        }
    }
    let rec = p.record_positions();
    let arec = p.antirecord_positions();
    for i in 1..=n2 / 2 {
        let window = (hs[2 * i - 2], hs[2 * i - 1], hs[2 * i]) == (0, -1, 0);
        let rar = rec[2 * i - 2] && arec[2 * i - 2];
        let rar_even = rec[2 * i - 1] && arec[2 * i - 1];
        if window != rar || window != rar_even {
            return err(format!("rar window fails at i={i}"));
        }
    }

    let xi = fz_labels(p, LabelVariant::Xi);
    let xihat = fz_labels(p, LabelVariant::XiHat);
    let ceil_half = |h: i64| if h >= 0 { (h + 1) / 2 } else { h / 2 };

    for i in 1..=n2 {
        let s_i = p.sigma(i) as usize;
        let q_i = p.sigma_inv(i) as usize;
        let is_rise = q_i % 2 == 0;
        let ct = cycle_type(p, i);
        let (a, b) = crate::stats::index_refined(p, i);
        let (ap, bp) = crate::stats::variant_index_refined(p, i);
        let ps = crate::stats::psnest(p, i);

        // label interpretations (nesting statistics)
        let want_xi = if s_i == i { ps } else { b };
        if xi[i - 1] != want_xi {
            return err(format!("xi nesting law fails at i={i}"));
        }
        let want_xihat = if s_i == i { ps } else { bp };
        if xihat[i - 1] != want_xihat {
            return err(format!("xihat nesting law fails at i={i}"));
        }

        // bounds
        let bound = if is_rise {
            ceil_half(hs[i - 1])
        } else {
            ceil_half(hs[i - 1] - 1)
        };
        if (xi[i - 1] as i64) > bound || (xihat[i - 1] as i64) > bound {
            return err(format!("label bound fails at i={i}"));
        }

        // crossing complements for xi; on a fixed point the crossing
        // count is zero (index_refined reports psnest there)
        let cross = if s_i == i { 0 } else { a as i64 };
        let diff = bound - xi[i - 1] as i64;
        let indicator_fall = i64::from(ct == CycleType::CDFall);
        let indicator_rise = i64::from(ct == CycleType::CDRise);
        if is_rise {
            if i % 2 == 1 {
                if diff != cross {
                    return err(format!("xi crossing law (rise,odd) fails at i={i}"));
                }
            } else if diff != cross + indicator_fall {
                return err(format!("xi crossing law (rise,even) fails at i={i}"));
            }
        } else if i % 2 == 1 {
            if diff != cross + indicator_rise {
                return err(format!("xi crossing law (fall,odd) fails at i={i}"));
            }
        } else if diff != cross {
            return err(format!("xi crossing law (fall,even) fails at i={i}"));
        }

        // crossing complements for xihat (primed statistics)
        let diff_hat = bound - xihat[i - 1] as i64;
        if is_rise {
            if diff_hat != ap as i64 + indicator_fall {
                return err(format!("xihat crossing law (rise) fails at i={i}"));
            }
        } else if diff_hat != ap as i64 + indicator_rise {
            return err(format!("xihat crossing law (fall) fails at i={i}"));
        }

        // cycle classification from maximal labels
        if is_rise && i % 2 == 0 {
            let max = ceil_half(hs[i] - 1);
            let is_fix = s_i == i;
            if is_fix != (xi[i - 1] as i64 == max) || is_fix != (xihat[i - 1] as i64 == max) {
                return err(format!("fixed-point detection (rise) fails at i={i}"));
            }
        }
        if !is_rise && i % 2 == 1 {
            let max = ceil_half(hs[i]);
            let is_fix = s_i == i;
            if is_fix != (xi[i - 1] as i64 == max) || is_fix != (xihat[i - 1] as i64 == max) {
                return err(format!("fixed-point detection (fall) fails at i={i}"));
            }
        }

        // record detection from minimal labels
        if i % 2 == 1 {
            if rec[i - 1] != (xi[i - 1] == 0) {
                return err(format!("record detection fails at i={i}"));
            }
            if arec[i - 1] != (hs[i] == -1 && xi[i - 1] == 0) {
                return err(format!("antirecord detection fails at i={i}"));
            }
        } else {
            if arec[i - 1] != (xi[i - 1] == 0) {
                return err(format!("antirecord detection fails at i={i}"));
            }
            // an even record is a record-antirecord fixed point: the step
            // is a rise out of the -1 window
            if rec[i - 1] != (hs[i - 1] == -1 && xi[i - 1] == 0) {
                return err(format!("record detection fails at i={i}"));
            }
        }
        // value-based record detection for xihat
        if q_i % 2 == 1 {
            if rec[q_i - 1] != (xihat[i - 1] == 0) {
                return err(format!("xihat record detection fails at i={i}"));
            }
        } else if arec[q_i - 1] != (xihat[i - 1] == 0) {
            return err(format!("xihat antirecord detection fails at i={i}"));
        }

        // relation between the two label families
        if xihat[i - 1] != xi[q_i - 1] {
            return err(format!("xihat = xi o sigma^{{-1}} fails at i={i}"));
        }
    }

    // second bijection labels
    let pair = biane_labels(p);
    for i in 1..=n2 {
        let (xp, xpp) = pair[i - 1];
        let s_i = p.sigma(i) as usize;
        let q_i = p.sigma_inv(i) as usize;
        let ct = cycle_type(p, i);
        let (_, b) = crate::stats::index_refined(p, i);
        let (ap, bp) = crate::stats::variant_index_refined(p, i);
        let ps = crate::stats::psnest(p, i);
        // nesting interpretations and bounds
        if q_i % 2 == 1 {
            let want = if s_i == i { ps } else { bp };
            if xp != want {
                return err(format!("xi' nesting law fails at i={i}"));
            }
            if (xp as i64) > ceil_half(hs[i]) {
                return err(format!("xi' bound fails at i={i}"));
            }
            // crossing complement
            let diff = ceil_half(hs[i]) - xp as i64;
            if diff != ap as i64 + i64::from(ct == CycleType::CDRise) {
                return err(format!("xi' crossing law fails at i={i}"));
            }
            // record detection
            if rec[q_i - 1] != (xp == 0) {
                return err(format!("xi' record detection fails at i={i}"));
            }
        } else if xp != 0 {
            return err(format!("xi' should vanish on rises at i={i}"));
        }
        if i % 2 == 0 {
            let want = if s_i == i { ps } else { b };
            if xpp != want {
                return err(format!("xi'' nesting law fails at i={i}"));
            }
            if (xpp as i64) > hs[i] / 2 {
                return err(format!("xi'' bound fails at i={i}"));
            }
            let diff = hs[i] / 2 - xpp as i64;
            let (a_lc, _) = crate::stats::index_refined(p, i);
            let lcross = if s_i == i { 0 } else { a_lc };
            if diff != lcross as i64 + i64::from(ct == CycleType::CDFall) {
                return err(format!("xi'' crossing law fails at i={i}"));
            }
            if arec[i - 1] != (xpp == 0) {
                return err(format!("xi'' antirecord detection fails at i={i}"));
            }
        } else if xpp != 0 {
            return err(format!("xi'' should vanish on odd indices at i={i}"));
        }
        // cycle-valley heights carry ucross + unest
        if ct == CycleType::CVal {
            let (uc, un) = crate::stats::index_refined(p, i);
            if hs[i - 1] / 2 != (uc + un) as i64 {
                return err(format!("cval height law fails at i={i}"));
            }
        }
        // fixed points sit at maximal labels
        if ct == CycleType::Fix {
            if i % 2 == 0 && (xpp as i64) != hs[i] / 2 {
                return err(format!("even fixed point label fails at i={i}"));
            }
            if i % 2 == 1 && (xp as i64) != (hs[i] + 1) / 2 {
                return err(format!("odd fixed point label fails at i={i}"));
            }
        }
    }

    // roundtrips
    for variant in [LabelVariant::Xi, LabelVariant::XiHat] {
        let labels = fz_labels(p, variant);
        match fz_inverse(&path, &labels, variant) {
            Ok(q) if &q == p => {}
            Ok(q) => return err(format!("fz roundtrip produced {q}")),
            Err(e) => return err(format!("fz roundtrip error: {e}")),
        }
    }
    match biane_inverse(&path, &pair) {
        Ok(out) => {
            if &out.permutation != p {
                return err(format!("biane roundtrip produced {}", out.permutation));
            }
            if out.cycles_closed as usize != p.cycle_count() {
                return err("biane closure count differs from cyc".to_string());
            }
        }
        Err(e) => return err(format!("biane roundtrip error: {e}")),
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------

pub fn all_check_ids() -> Vec<&'static str> {
    let mut ids = vec!["sequences", "classcounts", "crossids", "transforms"];
    ids.extend(ENGINE_CHECKS.iter().map(|c| c.id));
    ids.extend(["conj4.1bis", "flajolet", "appendix-a", "bijections", "rz-remark"]);
    ids
}

pub fn run_check(id: &str, opts: &CheckOptions) -> Result<TheoremCheck> {
    match id {
        "sequences" => Ok(check_sequences(opts)),
        "classcounts" => Ok(check_classcounts(opts)),
        "crossids" => Ok(check_crossids(opts)),
        "transforms" => Ok(check_transforms(opts)),
        "conj4.1bis" => Ok(check_equidistribution(opts)),
        "flajolet" => Ok(check_flajolet(opts)),
        "appendix-a" => Ok(check_appendix_a(opts)),
        "bijections" => Ok(check_bijections(opts)),
        "rz-remark" => Ok(check_rz_remark(opts)),
        other => {
            if let Some(def) = ENGINE_CHECKS.iter().find(|c| c.id == other) {
                Ok(run_engine_check(def, opts))
            } else {
                Err(Error::UnknownCheckId(other.to_string()))
            }
        }
    }
}

/// Run every check; reports are ordered by check id registry order.
pub fn run_all(opts: &CheckOptions) -> VerifyReport {
    let checks = all_check_ids()
        .into_iter()
        .map(|id| run_check(id, opts).expect("registry ids are valid"))
        .collect();
    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(n_max: usize) -> CheckOptions {
        CheckOptions {
            n_max: Some(n_max),
            num_seeds: 2,
            ..CheckOptions::default()
        }
    }

    #[test]
    fn thm32_small() {
        let c = run_check("thm3.2", &quick(3)).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }

    #[test]
    fn first_corollaries_small() {
        for id in ["cor3.3", "cor3.4", "prop3.5", "cor3.6", "cor3.7", "cor3.8"] {
            let c = run_check(id, &quick(3)).unwrap();
            assert_eq!(c.status, Status::Pass, "{id}: {:?}", c.details);
        }
    }

    #[test]
    fn pq_and_master_small() {
        for id in ["thm3.4", "thm3.9", "thm3.11", "thm3.12"] {
            let c = run_check(id, &quick(3)).unwrap();
            assert_eq!(c.status, Status::Pass, "{id}: {:?}", c.details);
        }
    }

    #[test]
    fn second_family_small() {
        for id in [
            "thm4.2",
            "conj4.1",
            "conj4.1bis",
            "conj4.1bisbis",
            "cor4.3",
            "conj4.5",
            "cor4.6",
            "thm4.4",
            "cor4.7",
            "cor4.8",
            "cor4.9",
            "thm4.6",
        ] {
            let c = run_check(id, &quick(3)).unwrap();
            assert_eq!(c.status, Status::Pass, "{id}: {:?}", c.details);
        }
    }

    #[test]
    fn standalone_checks() {
        for id in ["sequences", "crossids", "transforms"] {
            let c = run_check(id, &CheckOptions::default()).unwrap();
            assert_eq!(c.status, Status::Pass, "{id}: {:?}", c.details);
        }
        let c = run_check("classcounts", &quick(4)).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        let c = run_check("bijections", &quick(3)).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        let c = run_check("rz-remark", &quick(3)).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }

    #[test]
    fn flajolet_small() {
        let opts = CheckOptions {
            n_max: Some(3),
            num_seeds: 1,
            ..CheckOptions::default()
        };
        let c = run_check("flajolet", &opts).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }

    #[test]
    fn appendix_small() {
        let opts = CheckOptions {
            n_max: Some(4), // points
            ..CheckOptions::default()
        };
        let c = run_check("appendix-a", &opts).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(
            run_check("thm9.9", &CheckOptions::default()),
            Err(Error::UnknownCheckId(_))
        ));
    }
}
