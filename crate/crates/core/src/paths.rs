//! Lattice paths, the two D-permutation <-> labeled-path bijections with
//! their inverses, and the brute-force weight sum over labeled Schröder
//! paths that mirrors the continued-fraction side.
//!
//! The first bijection sends a D-permutation to its almost-Dyck path
//! (step `i` is a rise iff `sigma^{-1}(i)` is even) with single-integer
//! labels, in a position-based (`xi`) and a value-based (`xihat`)
//! variant. The second bijection keeps the same path but labels each step
//! with a pair of integers, which makes the number of cycles readable
//! from the label history.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Rise,
    Fall,
    /// Long level step (advances two abscissae). Only Schröder-family
    /// paths use it.
    LongLevel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Dyck,
    Motzkin,
    Schroeder,
    AlmostDyck,
    ZeroSchroeder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub steps: Vec<Step>,
    pub kind: PathKind,
}

impl Path {
    pub fn new(steps: Vec<Step>, kind: PathKind) -> Result<Self> {
        let p = Path { steps, kind };
        p.validate()?;
        Ok(p)
    }

    /// Total abscissa length (a long level step spans 2).
    pub fn length(&self) -> usize {
        self.steps
            .iter()
            .map(|s| if *s == Step::LongLevel { 2 } else { 1 })
            .sum()
    }

    /// Height profile by abscissa, `heights()[x]` = height at abscissa
    /// `x`; index 0 is the origin. Under a long level step the
    /// intermediate abscissa repeats the height.
    pub fn heights(&self) -> Vec<i64> {
        let mut hs = vec![0i64];
        let mut h = 0i64;
        for s in &self.steps {
            match s {
                Step::Rise => {
                    h += 1;
                    hs.push(h);
                }
                Step::Fall => {
                    h -= 1;
                    hs.push(h);
                }
                Step::LongLevel => {
                    hs.push(h);
                    hs.push(h);
                }
            }
        }
        hs
    }

    pub fn validate(&self) -> Result<()> {
        let hs = self.heights();
        let floor = match self.kind {
            PathKind::AlmostDyck => -1,
            _ => 0,
        };
        if *hs.last().unwrap() != 0 {
            return Err(Error::MalformedPath("path does not end at height 0".into()));
        }
        if hs.iter().any(|&h| h < floor) {
            return Err(Error::MalformedPath(format!("height drops below {floor}")));
        }
        match self.kind {
            PathKind::Dyck | PathKind::AlmostDyck => {
                if self.steps.contains(&Step::LongLevel) {
                    return Err(Error::MalformedPath(
                        "level step in a Dyck-family path".into(),
                    ));
                }
            }
            PathKind::ZeroSchroeder => {
                let mut h = 0i64;
                for s in &self.steps {
                    match s {
                        Step::Rise => h += 1,
                        Step::Fall => h -= 1,
                        Step::LongLevel => {
                            if h != 0 {
                                return Err(Error::MalformedPath(
                                    "long level step above height 0".into(),
                                ));
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// The almost-Dyck path of a D-permutation: step `i` is a rise iff
/// `sigma^{-1}(i)` is even.
pub fn fz_path(p: &Permutation) -> Path {
    let steps = (1..=p.len())
        .map(|i| {
            if p.sigma_inv(i) % 2 == 0 {
                Step::Rise
            } else {
                Step::Fall
            }
        })
        .collect();
    Path {
        steps,
        kind: PathKind::AlmostDyck,
    }
}

/// Replace each down-up excursion to height -1 by a long level step at
/// height 0, turning an almost-Dyck path into a 0-Schröder path.
pub fn psi(path: &Path) -> Result<Path> {
    assert_eq!(path.kind, PathKind::AlmostDyck);
    let mut steps = Vec::with_capacity(path.steps.len());
    let mut h = 0i64;
    let mut iter = path.steps.iter().peekable();
    while let Some(&s) = iter.next() {
        match s {
            Step::Rise => {
                h += 1;
                steps.push(Step::Rise);
            }
            Step::Fall if h == 0 => match iter.next() {
                Some(Step::Rise) => steps.push(Step::LongLevel),
                _ => {
                    return Err(Error::MalformedPath(
                        "fall to height -1 not followed by a rise".into(),
                    ))
                }
            },
            Step::Fall => {
                h -= 1;
                steps.push(Step::Fall);
            }
            Step::LongLevel => {
                return Err(Error::MalformedPath(
                    "level step in an almost-Dyck path".into(),
                ))
            }
        }
    }
    Path::new(steps, PathKind::ZeroSchroeder)
}

/// Inverse of [`psi`]: expand each long level step (necessarily at height
/// 0) back into a fall-rise excursion.
pub fn psi_inverse(path: &Path) -> Result<Path> {
    assert_eq!(path.kind, PathKind::ZeroSchroeder);
    let mut steps = Vec::with_capacity(path.length());
    for s in &path.steps {
        match s {
            Step::LongLevel => {
                steps.push(Step::Fall);
                steps.push(Step::Rise);
            }
            other => steps.push(*other),
        }
    }
    Path::new(steps, PathKind::AlmostDyck)
}

/// Which label rule the first bijection uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelVariant {
    /// Position-based: `xi_i` counts inversions at position `i`.
    Xi,
    /// Value-based: `xihat_i = xi_{sigma^{-1}(i)}`.
    XiHat,
}

impl std::str::FromStr for LabelVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "xi" => Ok(LabelVariant::Xi),
            "xihat" => Ok(LabelVariant::XiHat),
            other => Err(Error::Parse(format!("unknown label variant `{other}`"))),
        }
    }
}

/// Labels of the first bijection; entry `i-1` belongs to step `i`.
pub fn fz_labels(p: &Permutation, variant: LabelVariant) -> Vec<u32> {
    let n2 = p.len();
    (1..=n2)
        .map(|i| match variant {
            LabelVariant::Xi => {
                if i % 2 == 0 {
                    (i + 1..=n2).filter(|&j| p.sigma(j) < p.sigma(i)).count() as u32
                } else {
                    (1..i).filter(|&j| p.sigma(j) > p.sigma(i)).count() as u32
                }
            }
            LabelVariant::XiHat => {
                if p.sigma_inv(i) % 2 == 0 {
                    (1..i).filter(|&j| p.sigma_inv(j) > p.sigma_inv(i)).count() as u32
                } else {
                    (i + 1..=n2)
                        .filter(|&j| p.sigma_inv(j) < p.sigma_inv(i))
                        .count() as u32
                }
            }
        })
        .collect()
}

fn ceil_half(h: i64) -> i64 {
    if h >= 0 {
        (h + 1) / 2
    } else {
        h / 2
    }
}

/// Admissible label maximum for step `i` of an almost-Dyck path:
/// `ceil(h_{i-1}/2)` on a rise, `ceil((h_{i-1}-1)/2)` on a fall.
fn label_bound(step: Step, h_before: i64) -> i64 {
    match step {
        Step::Rise => ceil_half(h_before),
        Step::Fall => ceil_half(h_before - 1),
        Step::LongLevel => 0,
    }
}

fn check_labels(path: &Path, labels: &[u32]) -> Result<()> {
    if labels.len() != path.steps.len() {
        return Err(Error::MalformedPath(format!(
            "{} labels for {} steps",
            labels.len(),
            path.steps.len()
        )));
    }
    let hs = path.heights();
    for (i, (&s, &label)) in path.steps.iter().zip(labels).enumerate() {
        let max = label_bound(s, hs[i]);
        if (label as i64) > max {
            return Err(Error::InvalidLabel {
                step: i + 1,
                label: label.to_string(),
                max: max.to_string(),
            });
        }
    }
    Ok(())
}

/// Inverse of the first bijection. Rise positions form the set of values
/// placed at even positions, fall positions the values at odd positions;
/// the labels are their inversion tables, position-based (`xi`) or
/// value-based (`xihat`).
pub fn fz_inverse(path: &Path, labels: &[u32], variant: LabelVariant) -> Result<Permutation> {
    assert_eq!(path.kind, PathKind::AlmostDyck);
    check_labels(path, labels)?;
    let n2 = path.steps.len();
    let n = n2 / 2;
    let f_set: Vec<u32> = (1..=n2)
        .filter(|&i| path.steps[i - 1] == Step::Rise)
        .map(|i| i as u32)
        .collect(); // values at even positions, increasing
    let g_set: Vec<u32> = (1..=n2)
        .filter(|&i| path.steps[i - 1] == Step::Fall)
        .map(|i| i as u32)
        .collect(); // values at odd positions, increasing
    debug_assert_eq!(f_set.len(), n);
    let mut word = vec![0u32; n2];
    match variant {
        LabelVariant::Xi => {
            // even subword: right-to-left inversion table q_a = xi_{2a};
            // sigma(2a) is the (q+1)-th smallest remaining element
            let mut remaining = f_set.clone();
            for a in 1..=n {
                let q = labels[2 * a - 1] as usize;
                assert!(q < remaining.len(), "label bound ensures feasibility");
                word[2 * a - 1] = remaining.remove(q);
            }
            // odd subword: left-to-right inversion table p_a = xi_{2a-1};
            // working right to left, sigma(2a-1) is the (p+1)-th largest
            let mut remaining = g_set.clone();
            for a in (1..=n).rev() {
                let p = labels[2 * a - 2] as usize;
                assert!(p < remaining.len(), "label bound ensures feasibility");
                word[2 * a - 2] = remaining.remove(remaining.len() - 1 - p);
            }
        }
        LabelVariant::XiHat => {
            // even subword by value insertion, smallest value first, each
            // placed with xihat_v entries to its right
            let mut even_word: Vec<u32> = Vec::with_capacity(n);
            for &v in &f_set {
                let q = labels[v as usize - 1] as usize;
                assert!(q <= even_word.len(), "label bound ensures feasibility");
                even_word.insert(even_word.len() - q, v);
            }
            // odd subword by value insertion, largest value first, each
            // placed with xihat_v entries to its left
            let mut odd_word: Vec<u32> = Vec::with_capacity(n);
            for &v in g_set.iter().rev() {
                let p = labels[v as usize - 1] as usize;
                assert!(p <= odd_word.len(), "label bound ensures feasibility");
                odd_word.insert(p, v);
            }
            for a in 1..=n {
                word[2 * a - 1] = even_word[a - 1];
                word[2 * a - 2] = odd_word[a - 1];
            }
        }
    }
    let p = Permutation::new(word)?;
    assert!(
        p.is_d_permutation()?,
        "labels within bounds always rebuild a D-permutation"
    );
    Ok(p)
}

/// Pair labels `(xi', xi'')` of the second bijection; entry `i-1` belongs
/// to step `i`. Computed directly from the defining formulas, never from
/// the digraph, so the digraph-based inverse is an independent
/// cross-check.
pub fn biane_labels(p: &Permutation) -> Vec<(u32, u32)> {
    let n2 = p.len();
    (1..=n2)
        .map(|i| {
            let xp = if p.sigma_inv(i) % 2 == 0 {
                0
            } else {
                (i + 1..=n2)
                    .filter(|&j| p.sigma_inv(j) < p.sigma_inv(i))
                    .count() as u32
            };
            let xpp = if i % 2 == 1 {
                0
            } else {
                (i + 1..=n2).filter(|&j| p.sigma(j) < p.sigma(i)).count() as u32
            };
            (xp, xpp)
        })
        .collect()
}

/// Minimal union-find over chain ids.
struct ChainForest {
    parent: Vec<usize>,
}

impl ChainForest {
    fn new() -> Self {
        ChainForest { parent: Vec::new() }
    }
    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Outcome of the second bijection's inverse: the permutation and the
/// number of cycles closed during reconstruction (which equals `cyc`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BianeInverse {
    pub permutation: Permutation,
    pub cycles_closed: u32,
}

/// Inverse of the second bijection, rebuilding the bipartite digraph
/// stage by stage. Free vertices on each row are indexed left-to-right
/// from 0; open chains are tracked with a union-find so the cycle-closer
/// test is near-constant per step.
pub fn biane_inverse(path: &Path, labels: &[(u32, u32)]) -> Result<BianeInverse> {
    assert_eq!(path.kind, PathKind::AlmostDyck);
    let n2 = path.steps.len();
    if labels.len() != n2 {
        return Err(Error::MalformedPath(format!(
            "{} labels for {} steps",
            labels.len(),
            n2
        )));
    }
    let hs = path.heights();
    let mut word = vec![0u32; n2];
    // free vertices as (vertex, chain id), kept in increasing vertex order
    let mut free_top: Vec<(usize, usize)> = Vec::new();
    let mut free_bottom: Vec<(usize, usize)> = Vec::new();
    let mut forest = ChainForest::new();
    let mut closed = 0u32;

    let bad = |step: usize, got: (u32, u32), max: (i64, i64)| Error::InvalidLabel {
        step,
        label: format!("({},{})", got.0, got.1),
        max: format!("({},{})", max.0, max.1),
    };

    for i in 1..=n2 {
        let (xp, xpp) = labels[i - 1];
        let h_before = hs[i - 1];
        let h_after = hs[i];
        match path.steps[i - 1] {
            Step::Rise if h_after % 2 != 0 => {
                // cycle valley: no arrows, a fresh open chain
                if (xp, xpp) != (0, 0) {
                    return Err(bad(i, (xp, xpp), (0, 0)));
                }
                let c = forest.fresh();
                free_top.push((i, c));
                free_bottom.push((i, c));
            }
            Step::Rise => {
                // h_after = 2k: even fixed point when xi'' = k, else a
                // cycle double fall picking the xi''-th free bottom vertex
                let k = h_after / 2;
                if xp != 0 || (xpp as i64) > k {
                    return Err(bad(i, (xp, xpp), (0, k)));
                }
                if xpp as i64 == k {
                    word[i - 1] = i as u32;
                    closed += 1;
                } else {
                    let (j, c) = free_bottom.remove(xpp as usize);
                    word[i - 1] = j as u32;
                    // chain keeps its id; its start migrates to i'
                    free_bottom.push((i, c));
                }
            }
            Step::Fall if h_after % 2 != 0 => {
                // h_after = 2k-1, i odd: odd fixed point when xi' = k,
                // else a cycle double rise from the xi'-th free top vertex
                let k = (h_after + 1) / 2;
                if xpp != 0 || (xp as i64) > k {
                    return Err(bad(i, (xp, xpp), (k, 0)));
                }
                if xp as i64 == k {
                    word[i - 1] = i as u32;
                    closed += 1;
                } else {
                    let (j, c) = free_top.remove(xp as usize);
                    word[j - 1] = i as u32;
                    free_top.push((i, c));
                }
            }
            Step::Fall => {
                // h_before = 2k+1, i even: cycle peak; two arrows
                let k = (h_before - 1) / 2;
                if (xp as i64) > k || (xpp as i64) > k {
                    return Err(bad(i, (xp, xpp), (k, k)));
                }
                let (t, ct) = free_top.remove(xp as usize);
                let (b, cb) = free_bottom.remove(xpp as usize);
                word[i - 1] = b as u32;
                word[t - 1] = i as u32;
                // the cycle-closer test: exactly one free bottom chain
                // matches the chosen top chain
                let rt = forest.find(ct);
                let mut matches = usize::from(forest.find(cb) == rt);
                let bottom_ids: Vec<usize> = free_bottom.iter().map(|&(_, c)| c).collect();
                for c in bottom_ids {
                    if forest.find(c) == rt {
                        matches += 1;
                    }
                }
                assert_eq!(matches, 1, "each open chain has exactly one start");
                if forest.find(cb) == rt {
                    closed += 1;
                } else {
                    forest.union(ct, cb);
                }
            }
            Step::LongLevel => {
                return Err(Error::MalformedPath(
                    "level step in an almost-Dyck path".into(),
                ))
            }
        }
        let _ = h_before;
    }
    assert!(free_top.is_empty() && free_bottom.is_empty());
    let permutation = Permutation::new(word)?;
    assert!(permutation.is_d_permutation()?);
    Ok(BianeInverse {
        permutation,
        cycles_closed: closed,
    })
}

/// A labeled-path label: one integer for the first bijection, a pair for
/// the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathLabel {
    Single(u32),
    Pair(u32, u32),
}

pub type LabelSetFn = Box<dyn Fn(Step, i64) -> Vec<PathLabel>>;

/// Per-height label sets for each step kind; empty sets forbid the step.
pub struct LabelSystem {
    pub sets: LabelSetFn,
}

impl LabelSystem {
    /// The single-integer system of the first bijection:
    /// `A_h = {0..ceil(h/2)}`, `B_h = {0..ceil((h-1)/2)}`, `C_0 = {0}`.
    pub fn first_bijection() -> Self {
        LabelSystem {
            sets: Box::new(|step, h| match step {
                Step::Rise => (0..=ceil_half(h))
                    .map(|x| PathLabel::Single(x as u32))
                    .collect(),
                Step::Fall => (0..=ceil_half(h - 1))
                    .map(|x| PathLabel::Single(x as u32))
                    .collect(),
                Step::LongLevel => {
                    if h == 0 {
                        vec![PathLabel::Single(0)]
                    } else {
                        vec![]
                    }
                }
            }),
        }
    }

    /// The pair system of the second bijection.
    pub fn second_bijection() -> Self {
        LabelSystem {
            sets: Box::new(|step, h| match step {
                Step::Rise => {
                    if h % 2 == 0 {
                        vec![PathLabel::Pair(0, 0)]
                    } else {
                        let k = (h + 1) / 2;
                        (0..=k).map(|x| PathLabel::Pair(0, x as u32)).collect()
                    }
                }
                Step::Fall => {
                    if h % 2 == 0 {
                        let k = h / 2;
                        (0..=k).map(|x| PathLabel::Pair(x as u32, 0)).collect()
                    } else {
                        let k = (h - 1) / 2;
                        let mut v = Vec::new();
                        for a in 0..=k {
                            for b in 0..=k {
                                v.push(PathLabel::Pair(a as u32, b as u32));
                            }
                        }
                        v
                    }
                }
                Step::LongLevel => {
                    if h == 0 {
                        vec![PathLabel::Pair(0, 0)]
                    } else {
                        vec![]
                    }
                }
            }),
        }
    }

    /// One label everywhere: plain path counting.
    pub fn singleton() -> Self {
        LabelSystem {
            sets: Box::new(|step, h| match step {
                Step::LongLevel if h != 0 => vec![],
                _ => vec![PathLabel::Single(0)],
            }),
        }
    }
}

/// Context handed to a weight function for one step of one labeled path.
#[derive(Debug, Clone, Copy)]
pub struct StepContext {
    pub step: Step,
    pub height: i64,
    pub label: PathLabel,
    /// For pair labels: whether this step closes a cycle, read off the
    /// open chains of the reconstruction history.
    pub closes_cycle: bool,
}

struct Chains {
    forest: ChainForest,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

/// Brute-force sum over all labeled Schröder paths of length `two_n` of
/// the product of per-step weights. The enumeration carries the second
/// bijection's open-chain state so weight functions may consult
/// `closes_cycle`. Capped to guard against runaway enumeration.
pub fn flajolet_weight_sum(
    system: &LabelSystem,
    weight: &dyn Fn(&StepContext) -> Poly,
    two_n: usize,
    cap: usize,
) -> Poly {
    assert!(two_n <= cap, "labeled-path enumeration capped at 2n = {cap}");
    let mut total = Poly::zero();
    let mut chains = Chains {
        forest: ChainForest::new(),
        top: Vec::new(),
        bottom: Vec::new(),
    };
    recurse_weight_sum(
        system,
        weight,
        two_n,
        0,
        &mut chains,
        &Poly::one(),
        &mut total,
    );
    total
}

fn recurse_weight_sum(
    system: &LabelSystem,
    weight: &dyn Fn(&StepContext) -> Poly,
    remaining: usize,
    h: i64,
    chains: &mut Chains,
    acc: &Poly,
    total: &mut Poly,
) {
    if remaining == 0 {
        if h == 0 {
            *total = total.add(acc);
        }
        return;
    }
    if h > remaining as i64 {
        return; // cannot return to height 0
    }
    for step in [Step::Rise, Step::Fall, Step::LongLevel] {
        let width = if step == Step::LongLevel { 2 } else { 1 };
        if width > remaining {
            continue;
        }
        let h_after = match step {
            Step::Rise => h + 1,
            Step::Fall => h - 1,
            Step::LongLevel => h,
        };
        if h_after < 0 {
            continue;
        }
        for label in (system.sets)(step, h) {
            // mirror the digraph bookkeeping to expose cycle closure
            let mut closes = false;
            let mut saved: Option<(Vec<usize>, Vec<usize>, Vec<usize>)> = None;
            if let PathLabel::Pair(xp, xpp) = label {
                saved = Some((
                    chains.top.clone(),
                    chains.bottom.clone(),
                    chains.forest.parent.clone(),
                ));
                match (step, h_after % 2 != 0) {
                    (Step::Rise, true) => {
                        let c = chains.forest.fresh();
                        chains.top.push(c);
                        chains.bottom.push(c);
                    }
                    (Step::Rise, false) => {
                        let k = h_after / 2;
                        if (xpp as i64) < k {
                            let c = chains.bottom.remove(xpp as usize);
                            chains.bottom.push(c);
                        } else {
                            closes = true; // even fixed point, singleton
                        }
                    }
                    (Step::Fall, true) => {
                        let k = (h_after + 1) / 2;
                        if (xp as i64) < k {
                            let c = chains.top.remove(xp as usize);
                            chains.top.push(c);
                        } else {
                            closes = true; // odd fixed point, singleton
                        }
                    }
                    (Step::Fall, false) => {
                        let ct = chains.top.remove(xp as usize);
                        let cb = chains.bottom.remove(xpp as usize);
                        if chains.forest.find(ct) == chains.forest.find(cb) {
                            closes = true;
                        } else {
                            chains.forest.union(ct, cb);
                        }
                    }
                    (Step::LongLevel, _) => {
                        closes = true; // collapsed pair of singleton fixed points
                    }
                }
            }
            let ctx = StepContext {
                step,
                height: h,
                label,
                closes_cycle: closes,
            };
            let w = weight(&ctx);
            if !w.is_zero() {
                let acc2 = acc.mul(&w);
                recurse_weight_sum(system, weight, remaining - width, h_after, chains, &acc2, total);
            }
            if let Some((t, b, f)) = saved {
                chains.top = t;
                chains.bottom = b;
                chains.forest.parent = f;
            }
        }
    }
}

/// Dynamic-programming count of 0-Schröder paths of length `2n`,
/// independent of the continued-fraction expander.
pub fn count_zero_schroeder(n: usize) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let two_n = 2 * n;
    let mut table: HashMap<(usize, i64), BigInt> = HashMap::new();
    table.insert((0, 0), BigInt::from(1));
    for x in 0..two_n {
        let snapshot: Vec<(i64, BigInt)> = table
            .iter()
            .filter(|((pos, _), _)| *pos == x)
            .map(|(&(_, h), v)| (h, v.clone()))
            .collect();
        for (h, count) in snapshot {
            let mut bump = |pos: usize, nh: i64, c: &BigInt| {
                if nh >= 0 && pos <= two_n {
                    *table.entry((pos, nh)).or_insert_with(|| BigInt::from(0)) += c;
                }
            };
            bump(x + 1, h + 1, &count);
            bump(x + 1, h - 1, &count);
            if h == 0 && x + 2 <= two_n {
                bump(x + 2, 0, &count);
            }
        }
    }
    table
        .get(&(two_n, 0))
        .cloned()
        .unwrap_or_else(|| BigInt::from(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_d_permutations, DClass};
    use crate::stats;

    fn fig1_word() -> Permutation {
        Permutation::new(vec![7, 1, 9, 2, 5, 4, 8, 6, 10, 3, 11, 12, 14, 13]).unwrap()
    }

    #[test]
    fn fig1_path_heights() {
        let path = fz_path(&fig1_word());
        assert_eq!(
            path.heights()[1..],
            [1, 2, 3, 4, 3, 4, 3, 2, 1, 0, -1, 0, 1, 0]
        );
        path.validate().unwrap();
    }

    #[test]
    fn tiny_paths() {
        let id2: Permutation = "12".parse().unwrap();
        assert_eq!(fz_path(&id2).heights()[1..], [-1, 0]);
        let swap: Permutation = "21".parse().unwrap();
        assert_eq!(fz_path(&swap).heights()[1..], [1, 0]);
    }

    #[test]
    fn psi_examples() {
        let id2: Permutation = "12".parse().unwrap();
        let z = psi(&fz_path(&id2)).unwrap();
        assert_eq!(z.steps, vec![Step::LongLevel]);
        assert_eq!(psi_inverse(&z).unwrap(), fz_path(&id2));
        // Fig. 5: one long level, at abscissa 10-12
        let z = psi(&fz_path(&fig1_word())).unwrap();
        let ll: Vec<usize> = z
            .steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::LongLevel)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(ll, vec![10]);
        assert_eq!(z.kind, PathKind::ZeroSchroeder);
        assert_eq!(psi_inverse(&z).unwrap(), fz_path(&fig1_word()));
        // a Dyck path is unchanged
        let swap: Permutation = "21".parse().unwrap();
        let d = psi(&fz_path(&swap)).unwrap();
        assert_eq!(d.steps, vec![Step::Rise, Step::Fall]);
    }

    #[test]
    fn fig8_fig9_label_tables() {
        let p = fig1_word();
        let xi = fz_labels(&p, LabelVariant::Xi);
        let even: Vec<u32> = (1..=7).map(|a| xi[2 * a - 1]).collect();
        let odd: Vec<u32> = (1..=7).map(|a| xi[2 * a - 2]).collect();
        assert_eq!(even, vec![0, 0, 1, 1, 0, 0, 0]);
        assert_eq!(odd, vec![0, 0, 2, 1, 0, 0, 0]);
        let xihat = fz_labels(&p, LabelVariant::XiHat);
        let by_f: Vec<u32> = [1usize, 2, 4, 6, 3, 12, 13]
            .iter()
            .map(|&v| xihat[v - 1])
            .collect();
        let by_g: Vec<u32> = [7usize, 9, 5, 8, 10, 11, 14]
            .iter()
            .map(|&v| xihat[v - 1])
            .collect();
        assert_eq!(by_f, vec![0, 0, 1, 1, 0, 0, 0]);
        assert_eq!(by_g, vec![0, 0, 2, 1, 0, 0, 0]);
        // xihat_i = xi_{sigma^{-1}(i)}
        for i in 1..=14 {
            assert_eq!(xihat[i - 1], xi[p.sigma_inv(i) as usize - 1]);
        }
        // identity: all labels zero
        let id = Permutation::identity(8);
        assert!(fz_labels(&id, LabelVariant::Xi).iter().all(|&x| x == 0));
        assert!(fz_labels(&id, LabelVariant::XiHat).iter().all(|&x| x == 0));
    }

    #[test]
    fn fig8_fig9_reconstruction() {
        let p = fig1_word();
        let path = fz_path(&p);
        for variant in [LabelVariant::Xi, LabelVariant::XiHat] {
            let labels = fz_labels(&p, variant);
            let q = fz_inverse(&path, &labels, variant).unwrap();
            assert_eq!(q, p);
        }
        // all-zero labels on heights (1,0) give 21
        let path21 = Path::new(vec![Step::Rise, Step::Fall], PathKind::AlmostDyck).unwrap();
        let q = fz_inverse(&path21, &[0, 0], LabelVariant::Xi).unwrap();
        assert_eq!(q, "21".parse().unwrap());
    }

    #[test]
    fn out_of_bounds_label_is_reported() {
        let path21 = Path::new(vec![Step::Rise, Step::Fall], PathKind::AlmostDyck).unwrap();
        let err = fz_inverse(&path21, &[1, 0], LabelVariant::Xi).unwrap_err();
        assert!(matches!(err, Error::InvalidLabel { step: 1, .. }));
    }

    #[test]
    fn biane_label_examples() {
        let p = fig1_word();
        let labels = biane_labels(&p);
        let expect = [
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (2, 0),
            (0, 1),
            (0, 0),
            (1, 1),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
        ];
        assert_eq!(labels, expect);
        let id2: Permutation = "12".parse().unwrap();
        assert_eq!(biane_labels(&id2), vec![(0, 0), (0, 0)]);
        let c: Permutation = "3142".parse().unwrap();
        assert_eq!(biane_labels(&c), vec![(0, 0); 4]);
    }

    #[test]
    fn biane_roundtrip_examples() {
        for w in ["12", "21", "3142", "2143", "4231"] {
            let p: Permutation = w.parse().unwrap();
            let path = fz_path(&p);
            let labels = biane_labels(&p);
            let out = biane_inverse(&path, &labels).unwrap();
            assert_eq!(out.permutation, p, "{w}");
            assert_eq!(out.cycles_closed as usize, p.cycle_count(), "{w}");
        }
        let p = fig1_word();
        let out = biane_inverse(&fz_path(&p), &biane_labels(&p)).unwrap();
        assert_eq!(out.permutation, p);
        assert_eq!(out.cycles_closed, 6);
    }

    #[test]
    fn roundtrips_exhaustive_small() {
        for n in 0..=3usize {
            for p in enumerate_d_permutations(n, DClass::All) {
                let path = fz_path(&p);
                for variant in [LabelVariant::Xi, LabelVariant::XiHat] {
                    let labels = fz_labels(&p, variant);
                    assert_eq!(fz_inverse(&path, &labels, variant).unwrap(), p);
                }
                let out = biane_inverse(&path, &biane_labels(&p)).unwrap();
                assert_eq!(out.permutation, p);
                assert_eq!(out.cycles_closed as usize, p.cycle_count());
            }
        }
    }

    #[test]
    fn label_interpretation_lemmas_small() {
        // xi_i = lnest/unest/psnest by case; record and record-antirecord
        // detection at label zero.
        for n in 0..=3usize {
            for p in enumerate_d_permutations(n, DClass::All) {
                let path = fz_path(&p);
                let hs = path.heights();
                let xi = fz_labels(&p, LabelVariant::Xi);
                let rec = p.record_positions();
                let arec = p.antirecord_positions();
                for i in 1..=2 * n {
                    let s = p.sigma(i) as usize;
                    let expected = if s != i {
                        stats::index_refined(&p, i).1
                    } else {
                        stats::psnest(&p, i)
                    };
                    assert_eq!(xi[i - 1], expected, "{p} i={i}");
                    if i % 2 == 1 {
                        assert_eq!(rec[i - 1], xi[i - 1] == 0, "{p} i={i}");
                        assert_eq!(arec[i - 1], hs[i] == -1 && xi[i - 1] == 0, "{p} i={i}");
                    } else {
                        assert_eq!(arec[i - 1], xi[i - 1] == 0, "{p} i={i}");
                        // an even record is a record-antirecord fixed
                        // point, i.e. a rise out of the -1 window
                        assert_eq!(rec[i - 1], hs[i - 1] == -1 && xi[i - 1] == 0, "{p} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn weight_sum_counts_d_permutations() {
        // all weights 1 under both systems: |D_2n|
        let unit = |_: &StepContext| Poly::one();
        let system = LabelSystem::first_bijection();
        let system2 = LabelSystem::second_bijection();
        for (n, want) in [(0usize, 1i64), (1, 2), (2, 8), (3, 56)] {
            let w = flajolet_weight_sum(&system, &unit, 2 * n, 10);
            assert_eq!(w, Poly::from_i64(want), "first system n={n}");
            let w2 = flajolet_weight_sum(&system2, &unit, 2 * n, 10);
            assert_eq!(w2, Poly::from_i64(want), "second system n={n}");
        }
    }

    #[test]
    fn weight_sum_singleton_counts_schroeder() {
        let system = LabelSystem::singleton();
        let unit = |_: &StepContext| Poly::one();
        for n in 0..=5usize {
            let w = flajolet_weight_sum(&system, &unit, 2 * n, 10);
            assert_eq!(w.as_constant().unwrap(), count_zero_schroeder(n), "n={n}");
        }
        // 1, 2, 5, 14, 42: shifted Catalan
        let got: Vec<String> = (0..=4)
            .map(|n| count_zero_schroeder(n).to_string())
            .collect();
        assert_eq!(got, vec!["1", "2", "5", "14", "42"]);
    }

    #[test]
    fn weight_sum_two_step_paths() {
        // 2n = 2: one long level (weight w) plus the rise-fall paths
        let mut vt = crate::poly::VarTable::new();
        let w = vt.var("w");
        let w_for_weight = w.clone();
        let system = LabelSystem::first_bijection();
        let weight = move |ctx: &StepContext| match ctx.step {
            Step::LongLevel => w_for_weight.clone(),
            _ => Poly::one(),
        };
        let got = flajolet_weight_sum(&system, &weight, 2, 10);
        assert_eq!(got, w.add(&Poly::one()));
    }
}
