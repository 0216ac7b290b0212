//! Continued-fraction algebra: expansion of S-, J- and T-fractions into
//! truncated series, the contraction and augmentation/restriction
//! transforms, exact moment-to-J-fraction extraction over rationals, and
//! the classical sequences (Euler, Genocchi, median Genocchi, and the
//! `h-flat` companion) together with the Seidel triangle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfKind {
    S,
    J,
    T,
}

/// Coefficient lists of a continued fraction. `alpha`/`delta` hold
/// `alpha_1..` and `delta_1..` for S- and T-fractions; `gamma`/`beta` hold
/// `gamma_0..` and `beta_1..` for J-fractions. An S-fraction is a
/// T-fraction with every `delta = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfSpec {
    pub kind: CfKind,
    pub alpha: Vec<Poly>,
    pub delta: Vec<Poly>,
    pub gamma: Vec<Poly>,
    pub beta: Vec<Poly>,
}

impl CfSpec {
    pub fn s_fraction(alpha: Vec<Poly>) -> Self {
        CfSpec {
            kind: CfKind::S,
            delta: vec![Poly::zero(); alpha.len()],
            alpha,
            gamma: Vec::new(),
            beta: Vec::new(),
        }
    }

    /// Build an S-fraction from a closed-form rank generator `k -> alpha_k`
    /// (`k` starting at 1), materialized to `depth` terms.
    pub fn s_from_fn(depth: usize, f: impl Fn(usize) -> Poly) -> Self {
        Self::s_fraction((1..=depth).map(f).collect())
    }

    pub fn t_fraction(alpha: Vec<Poly>, delta: Vec<Poly>) -> Self {
        assert_eq!(alpha.len(), delta.len());
        CfSpec {
            kind: CfKind::T,
            alpha,
            delta,
            gamma: Vec::new(),
            beta: Vec::new(),
        }
    }

    /// T-fraction with `delta_1` the only nonzero delta, the shape taken
    /// by every T-fraction in this crate.
    pub fn t_from_fn(depth: usize, delta1: Poly, f: impl Fn(usize) -> Poly) -> Self {
        let mut delta = vec![Poly::zero(); depth];
        if depth > 0 {
            delta[0] = delta1;
        }
        Self::t_fraction((1..=depth).map(f).collect(), delta)
    }

    pub fn j_fraction(gamma: Vec<Poly>, beta: Vec<Poly>) -> Self {
        CfSpec {
            kind: CfKind::J,
            alpha: Vec::new(),
            delta: Vec::new(),
            gamma,
            beta,
        }
    }

    fn required_depth(&self, order: usize) -> usize {
        if order == 0 {
            return 0;
        }
        match self.kind {
            // each level contributes at least one power of t
            CfKind::S | CfKind::T => order,
            // each level contributes at least two powers of t; the deepest
            // level's beta cannot reach order <= N
            CfKind::J => order / 2 + 1,
        }
    }

    fn available_depth(&self) -> usize {
        match self.kind {
            CfKind::S | CfKind::T => self.alpha.len().min(self.delta.len()),
            CfKind::J => self.gamma.len().min(self.beta.len() + 1),
        }
    }

    /// Bottom-up expansion to the series of `t^0..t^order`:
    /// `f^(K+1) = 1`, `f^(k) = 1/(1 - delta_k t - alpha_k t f^(k+1))`
    /// (for J: `f^(k) = 1/(1 - gamma_{k-1} t - beta_k t^2 f^(k+1))`).
    /// Levels beyond the coefficient lists are an error, not zero.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        self.expand_with_depth(order, self.required_depth(order))
    }

    /// Substitute constants for a subset of variables in every
    /// coefficient.
    pub fn specialize(&self, values: &std::collections::HashMap<usize, num_bigint::BigInt>) -> CfSpec {
        let sub = |v: &[Poly]| v.iter().map(|p| p.specialize(values)).collect();
        CfSpec {
            kind: self.kind,
            alpha: sub(&self.alpha),
            delta: sub(&self.delta),
            gamma: sub(&self.gamma),
            beta: sub(&self.beta),
        }
    }

    /// Expansion at an explicit truncation depth; used by the
    /// depth-insensitivity test.
    pub fn expand_with_depth(&self, order: usize, depth: usize) -> Result<TruncatedSeries> {
        if self.available_depth() < depth {
            return Err(Error::InsufficientDepth {
                have: self.available_depth(),
                need: depth,
            });
        }
        let mut f = TruncatedSeries::one(order);
        for k in (1..=depth).rev() {
            let mut denom = TruncatedSeries::one(order);
            match self.kind {
                CfKind::S | CfKind::T => {
                    let dk = &self.delta[k - 1];
                    if !dk.is_zero() {
                        denom = denom.sub(&TruncatedSeries::constant(order, dk.clone()).shift(1));
                    }
                    denom = denom.sub(&f.mul_poly(&self.alpha[k - 1]).shift(1));
                }
                CfKind::J => {
                    let gk = &self.gamma[k - 1];
                    if !gk.is_zero() {
                        denom = denom.sub(&TruncatedSeries::constant(order, gk.clone()).shift(1));
                    }
                    if let Some(bk) = self.beta.get(k - 1) {
                        denom = denom.sub(&f.mul_poly(bk).shift(2));
                    }
                }
            }
            f = denom.inverse_unit()?;
        }
        Ok(f)
    }
}

/// Even contraction of a T-fraction with vanishing even deltas into a
/// J-fraction: `gamma_0 = alpha_1 + delta_1`,
/// `gamma_n = alpha_2n + alpha_{2n+1} + delta_{2n+1}`,
/// `beta_n = alpha_{2n-1} alpha_2n`.
pub fn contract_even(alpha: &[Poly], delta: &[Poly]) -> Result<(Vec<Poly>, Vec<Poly>)> {
    if delta.iter().skip(1).step_by(2).any(|d| !d.is_zero()) {
        return Err(Error::BadContraction("even"));
    }
    let d = |n: usize| delta.get(n - 1).cloned().unwrap_or_else(Poly::zero);
    let m = alpha.len() / 2;
    let mut gamma = Vec::with_capacity(m);
    let mut beta = Vec::with_capacity(m);
    if alpha.is_empty() {
        return Ok((gamma, beta));
    }
    gamma.push(alpha[0].add(&d(1)));
    for n in 1..=m {
        if 2 * n < alpha.len() {
            gamma.push(alpha[2 * n - 1].add(&alpha[2 * n]).add(&d(2 * n + 1)));
        }
        beta.push(alpha[2 * n - 2].mul(&alpha[2 * n - 1]));
    }
    Ok((gamma, beta))
}

/// Odd contraction of a T-fraction with vanishing odd deltas. Returns the
/// prefactor `alpha_1` and the J-fraction with
/// `gamma_n = alpha_{2n+1} + alpha_{2n+2} + delta_{2n+2}`,
/// `beta_n = alpha_2n alpha_{2n+1}`; the series identity is
/// `T-series = 1 + alpha_1 t (J-series)`.
pub fn contract_odd(alpha: &[Poly], delta: &[Poly]) -> Result<(Poly, Vec<Poly>, Vec<Poly>)> {
    if delta.iter().step_by(2).any(|d| !d.is_zero()) {
        return Err(Error::BadContraction("odd"));
    }
    let d = |n: usize| delta.get(n - 1).cloned().unwrap_or_else(Poly::zero);
    if alpha.is_empty() {
        return Ok((Poly::zero(), Vec::new(), Vec::new()));
    }
    let mut gamma = Vec::new();
    let mut beta = Vec::new();
    let mut n = 0usize;
    while 2 * n + 2 <= alpha.len() {
        gamma.push(alpha[2 * n].add(&alpha[2 * n + 1]).add(&d(2 * n + 2)));
        if n >= 1 {
            beta.push(alpha[2 * n - 1].mul(&alpha[2 * n]));
        }
        n += 1;
    }
    if 2 * n < alpha.len() && n >= 1 {
        beta.push(alpha[2 * n - 1].mul(&alpha[2 * n]));
    }
    Ok((alpha[0].clone(), gamma, beta))
}

/// Direction of the augmentation/restriction transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformDirection {
    /// `a -> (1, delta_1 a_0, delta_1 a_1, ...)`.
    Augment,
    /// `a' -> (a'_1/alpha'_1, a'_2/alpha'_1, ...)`; requires
    /// `delta'_1 = delta'_2 = 0` and `alpha'_1` a nonzero unit monomial.
    Restrict,
}

/// Coefficient relabeling for augmentation/restriction of a T-fraction.
/// The series identity `1 + delta_1 t (old) = (new)` (augment direction)
/// is checked by expansion in the test and verification suites.
pub fn augment_restrict(spec: &CfSpec, direction: TransformDirection) -> Result<CfSpec> {
    assert!(matches!(spec.kind, CfKind::S | CfKind::T));
    match direction {
        TransformDirection::Augment => {
            let mut alpha = Vec::with_capacity(spec.alpha.len() + 1);
            let mut delta = Vec::with_capacity(spec.alpha.len() + 1);
            alpha.push(spec.delta[0].clone());
            delta.push(Poly::zero());
            for i in 0..spec.alpha.len() {
                alpha.push(spec.alpha[i].clone());
                // delta'_{i+2} = delta_{i+1} for i >= 1, and delta'_2 = 0
                delta.push(if i == 0 {
                    Poly::zero()
                } else {
                    spec.delta[i].clone()
                });
            }
            Ok(CfSpec::t_fraction(alpha, delta))
        }
        TransformDirection::Restrict => {
            let d1_zero = spec.delta.first().map(Poly::is_zero).unwrap_or(true);
            let d2_zero = spec.delta.get(1).map(Poly::is_zero).unwrap_or(true);
            if !d1_zero || !d2_zero || !spec.alpha[0].is_unit_monomial() {
                return Err(Error::BadRestriction);
            }
            let alpha: Vec<Poly> = spec.alpha[1..].to_vec();
            let mut delta = vec![spec.alpha[0].clone()];
            delta.extend(spec.delta[2..].iter().cloned());
            delta.truncate(alpha.len());
            while delta.len() < alpha.len() {
                delta.push(Poly::zero());
            }
            Ok(CfSpec::t_fraction(alpha, delta))
        }
    }
}

/// Exact J-fraction coefficients from a moment sequence with `m_0 = 1`,
/// peeling one level at a time:
/// `c(t) = (1 - 1/g(t))/t = gamma + beta t g'(t)`.
///
/// Returns `gamma_0..gamma_depth` and `beta_1..beta_depth`. When the
/// fraction terminates, the remaining coefficients are zero; a zero pivot
/// with a nonzero remainder is an error.
pub fn jfraction_from_moments(
    moments: &[BigRational],
    depth: usize,
) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    assert!(moments[0].is_one(), "moment sequence must start at 1");
    let mut gamma = Vec::with_capacity(depth + 1);
    let mut beta = Vec::with_capacity(depth);
    let mut g: Vec<BigRational> = moments.to_vec();
    let mut terminated = false;
    for level in 0..=depth {
        if terminated || g.len() < 2 {
            gamma.push(BigRational::zero());
            if level < depth {
                beta.push(BigRational::zero());
            }
            continue;
        }
        let inv = invert_rational_series(&g);
        // c = (1 - 1/g)/t
        let c: Vec<BigRational> = (1..inv.len()).map(|k| -inv[k].clone()).collect();
        gamma.push(c[0].clone());
        let d: Vec<BigRational> = c[1..].to_vec();
        if level == depth {
            break;
        }
        if d.is_empty() || d[0].is_zero() {
            if d.iter().all(BigRational::is_zero) {
                terminated = true;
                beta.push(BigRational::zero());
                continue;
            }
            return Err(Error::ZeroPivot(level + 1));
        }
        beta.push(d[0].clone());
        g = d.iter().map(|x| x / &d[0]).collect();
    }
    // internal consistency: the J-fraction reproduces the moments up to
    // the order its depth controls
    let order = (2 * depth + 1).min(moments.len() - 1);
    let re = expand_rational_j(&gamma, &beta, order);
    for k in 0..=order {
        assert_eq!(re[k], moments[k], "moment mismatch at order {k}");
    }
    Ok((gamma, beta))
}

/// 1/g for a rational series with nonzero constant term.
fn invert_rational_series(g: &[BigRational]) -> Vec<BigRational> {
    let mut r = vec![BigRational::zero(); g.len()];
    r[0] = g[0].recip();
    for k in 1..g.len() {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            acc += &g[j] * &r[k - j];
        }
        r[k] = -(acc / &g[0]);
    }
    r
}

/// Expand a J-fraction with rational coefficients to `t^order`.
pub fn expand_rational_j(
    gamma: &[BigRational],
    beta: &[BigRational],
    order: usize,
) -> Vec<BigRational> {
    let depth = order / 2 + 1;
    let mut f = vec![BigRational::zero(); order + 1];
    f[0] = BigRational::one();
    for k in (1..=depth).rev() {
        let gk = gamma.get(k - 1).cloned().unwrap_or_else(BigRational::zero);
        let bk = beta.get(k - 1).cloned().unwrap_or_else(BigRational::zero);
        // denom = 1 - gk t - bk t^2 f
        let mut denom = vec![BigRational::zero(); order + 1];
        denom[0] = BigRational::one();
        if order >= 1 {
            denom[1] = -gk.clone();
        }
        for i in 0..=order.saturating_sub(2) {
            let v = &bk * &f[i];
            denom[i + 2] -= v;
        }
        f = invert_rational_series(&denom);
    }
    f
}

/// Names of the classical integer sequences generated from their
/// S-fraction coefficient laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceName {
    /// Genocchi `g_n`: `alpha_{2k-1} = k^2`, `alpha_2k = k(k+1)`.
    Genocchi,
    /// Median Genocchi `h_n`: `alpha_{2k-1} = alpha_2k = k^2`.
    Median,
    /// `h-flat_{n+1}`: `alpha_{2k-1} = k^2`, `alpha_2k = (k+1)^2`.
    HFlat,
    /// Euler numbers `E_n` interleaved from the secant (`alpha_n = n^2`)
    /// and tangent (`alpha_n = n(n+1)`) S-fractions.
    Euler,
    /// Augmented Euler numbers `(n+1) E_n`.
    AugmentedEuler,
}

impl std::str::FromStr for SequenceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "genocchi" => Ok(SequenceName::Genocchi),
            "median" => Ok(SequenceName::Median),
            "hflat" => Ok(SequenceName::HFlat),
            "euler" => Ok(SequenceName::Euler),
            "augmented_euler" | "augmented-euler" => Ok(SequenceName::AugmentedEuler),
            other => Err(Error::UnknownSequence(other.to_string())),
        }
    }
}

fn int(v: u64) -> Poly {
    Poly::constant(BigInt::from(v))
}

/// Expand an integer-coefficient S-fraction and return the sequence.
fn s_sequence(order: usize, alpha: impl Fn(usize) -> u64) -> Vec<BigInt> {
    let spec = CfSpec::s_from_fn(order, |k| int(alpha(k)));
    let series = spec.expand(order).expect("depth matches order");
    series
        .coeffs()
        .iter()
        .map(|c| c.as_constant().expect("constant coefficients"))
        .collect()
}

/// Terms `0..=n_max` of a classical sequence, generated from its
/// continued fraction. The defining cross-identities between the
/// sequences are asserted for every computed index.
pub fn classical_sequences(name: SequenceName, n_max: usize) -> Vec<BigInt> {
    let half = |k: usize| (k as u64 + 1) / 2; // ceil(k/2)
    let genocchi = |k: usize| {
        let m = half(k);
        if k % 2 == 1 {
            m * m
        } else {
            m * (m + 1)
        }
    };
    let median = |k: usize| half(k) * half(k);
    let hflat = |k: usize| {
        let m = half(k);
        if k % 2 == 1 {
            m * m
        } else {
            (m + 1) * (m + 1)
        }
    };
    match name {
        SequenceName::Genocchi => {
            let g = s_sequence(n_max, genocchi);
            assert_genocchi_tangent(&g);
            g
        }
        SequenceName::Median => {
            let h = s_sequence(n_max, median);
            assert_median_identities(&h);
            h
        }
        SequenceName::HFlat => s_sequence(n_max, hflat),
        SequenceName::Euler => euler_numbers(n_max),
        SequenceName::AugmentedEuler => euler_numbers(n_max)
            .into_iter()
            .enumerate()
            .map(|(n, e)| e * BigInt::from(n as u64 + 1))
            .collect(),
    }
}

/// `E_0..E_n` interleaved from the secant and tangent S-fractions.
pub fn euler_numbers(n_max: usize) -> Vec<BigInt> {
    let sec = s_sequence(n_max / 2, |k| (k * k) as u64);
    let tan = s_sequence(n_max / 2 + 1, |k| (k * (k + 1)) as u64);
    (0..=n_max)
        .map(|n| {
            if n % 2 == 0 {
                sec[n / 2].clone()
            } else {
                tan[n / 2].clone()
            }
        })
        .collect()
}

/// `g_n = 4^{-n} (n+1) E_{2n+1}`, asserted clear of denominators.
fn assert_genocchi_tangent(g: &[BigInt]) {
    let e = euler_numbers(2 * (g.len() - 1) + 1);
    for (n, gn) in g.iter().enumerate() {
        let lhs = gn * BigInt::from(4u64).pow(n as u32);
        let rhs = &e[2 * n + 1] * BigInt::from(n as u64 + 1);
        assert_eq!(lhs, rhs, "augmented-tangent identity at n={n}");
    }
}

/// The two alternative definitions of the Genocchi medians:
/// the alternating binomial sum over `g` and the 1-binomial transform of
/// the augmented secant numbers.
fn assert_median_identities(h: &[BigInt]) {
    let n_max = h.len() - 1;
    let g = s_sequence(n_max, |k| {
        let m = (k as u64 + 1) / 2;
        if k % 2 == 1 {
            m * m
        } else {
            m * (m + 1)
        }
    });
    let e = euler_numbers(2 * n_max);
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for i in 0..n {
            if 2 * i + 1 > n {
                break;
            }
            let term = binomial(n, 2 * i + 1) * &g[n - 1 - i];
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        assert_eq!(acc, h[n], "binomial-Genocchi identity at n={n}");
    }
    for n in 0..=n_max {
        let mut acc = BigInt::zero();
        for k in 0..=n {
            acc += binomial(n, k) * BigInt::from(2 * k as u64 + 1) * &e[2 * k];
        }
        assert_eq!(
            &acc,
            &(&h[n] * BigInt::from(4u64).pow(n as u32)),
            "augmented-secant identity at n={n}"
        );
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    acc
}

/// The Seidel triangle `s_{n,k}`, rows `0..=n_rows`; row `n` has
/// `floor(n/2) + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelTriangle {
    pub rows: Vec<Vec<BigInt>>,
}

impl SeidelTriangle {
    pub fn entry(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Diagonal reading `g_n = s_{2n,n}` (with `s_{0,-1} = 1` the
    /// convention covers `s_{2n,n-1}` and `s_{2n+1,n}` too).
    pub fn genocchi(&self, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        self.entry(2 * n, n)
    }

    /// Column reading `h_n = s_{2n,0}`.
    pub fn median(&self, n: usize) -> BigInt {
        self.entry(2 * n, 0)
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }
}

/// Build the triangle by the two-case Seidel recurrence.
pub fn seidel(n_rows: usize) -> SeidelTriangle {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_rows {
        let width = n / 2 + 1;
        let prev = &rows[n - 1];
        let at = |j: usize| prev.get(j).cloned().unwrap_or_else(BigInt::zero);
        let mut row = Vec::with_capacity(width);
        for k in 0..width {
            let v: BigInt = if n % 2 == 0 {
                (0..=k).map(at).sum()
            } else {
                (k..width).map(at).sum()
            };
            row.push(v);
        }
        rows.push(row);
    }
    SeidelTriangle { rows }
}

/// Assert every margin identity between the triangle and the sequence
/// generators, for all indices the triangle covers.
pub fn seidel_margins_agree(t: &SeidelTriangle, g: &[BigInt], h: &[BigInt]) {
    let n_rows = t.rows.len() - 1;
    for n in 0..=n_rows / 2 {
        assert_eq!(t.genocchi(n), g[n], "g_n = s_2n,n at n={n}");
        if n >= 1 {
            assert_eq!(t.entry(2 * n, n - 1), g[n], "g_n = s_2n,n-1 at n={n}");
        }
        if 2 * n + 1 <= n_rows {
            assert_eq!(t.entry(2 * n + 1, n), g[n], "g_n = s_2n+1,n at n={n}");
            if n + 1 < g.len() {
                assert_eq!(t.row_sum(2 * n + 1), g[n + 1], "odd row sum at n={n}");
            }
        }
        assert_eq!(t.median(n), h[n], "h_n = s_2n,0 at n={n}");
        if n >= 1 {
            assert_eq!(t.entry(2 * n - 1, 0), h[n], "h_n = s_2n-1,0 at n={n}");
        }
        if n + 1 < h.len() {
            assert_eq!(t.row_sum(2 * n), h[n + 1], "even row sum at n={n}");
        }
    }
}
