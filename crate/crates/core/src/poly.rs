//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! A [`Poly`] stores a map from exponent vectors to nonzero `BigInt`
//! coefficients. Variables are indices into a [`VarTable`]; the table is
//! append-only, so polynomials built at different times against the same
//! table remain compatible. Monomials are kept in graded-lexicographic
//! order, which fixes the text serialization.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

static NEXT_TABLE_ID: AtomicU64 = AtomicU64::new(1);

/// Registry of variable names. Index order is creation order and is the
/// order used by exponent vectors.
#[derive(Debug)]
pub struct VarTable {
    id: u64,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new() -> Self {
        VarTable {
            id: NEXT_TABLE_ID.fetch_add(1, AtomicOrdering::Relaxed),
            names: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    /// Index of `name`, registering it if new. Indices are stable once
    /// assigned.
    pub fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// The variable `name` as a degree-1 polynomial.
    pub fn var(&mut self, name: &str) -> Poly {
        let idx = self.intern(name);
        Poly::variable(self.id, idx)
    }
}

impl Default for VarTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Exponent vector with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u16>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            exps.push(self.exponent(i) + other.exponent(i));
        }
        Monomial::from_exponents(exps)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: compare total degree, then exponents from the
    /// lowest variable index (a higher exponent on an earlier variable wins).
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match self.exponent(i).cmp(&other.exponent(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with `BigInt` coefficients.
///
/// `table` is the id of the `VarTable` the exponents refer to; `0` marks a
/// constant polynomial, compatible with any table. Mixing polynomials from
/// different tables is a programming error and panics. Equality compares
/// the term maps only; the table id is bookkeeping.
#[derive(Debug, Clone)]
pub struct Poly {
    table: u64,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            table: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { table: 0, terms }
    }

    pub fn from_i64(c: i64) -> Self {
        Poly::constant(BigInt::from(c))
    }

    fn variable(table: u64, idx: usize) -> Self {
        let mut exps = vec![0u16; idx + 1];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::from_exponents(exps), BigInt::one());
        Poly { table, terms }
    }

    pub fn monomial(table: &VarTable, exps: Vec<u16>, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial::from_exponents(exps), coeff);
        }
        let m_one = terms.keys().all(|m: &Monomial| m.is_one());
        Poly {
            table: if m_one { 0 } else { table.id() },
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    fn joined_table(&self, other: &Poly) -> u64 {
        match (self.table, other.table) {
            (0, t) | (t, 0) => t,
            (a, b) => {
                assert_eq!(a, b, "polynomials belong to different VarTables");
                a
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let table = self.joined_table(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Poly { table, terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            table: self.table,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let table = self.joined_table(other);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { table, terms }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            table: self.table,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Replace variable `var` by the polynomial `value`.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let table = self.joined_table(value);
        let mut powers: HashMap<u16, Poly> = HashMap::new();
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut exps = m.exponents().to_vec();
            if var < exps.len() {
                exps[var] = 0;
            }
            let base = Monomial::from_exponents(exps);
            if e == 0 {
                let entry = terms.entry(base).or_insert_with(BigInt::zero);
                *entry += c;
                continue;
            }
            let vp = powers
                .entry(e)
                .or_insert_with(|| value.pow(e as u32))
                .clone();
            for (vm, vc) in &vp.terms {
                let entry = terms.entry(base.mul(vm)).or_insert_with(BigInt::zero);
                *entry += c * vc;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { table, terms }
    }

    /// Substitute `BigInt` constants for a subset of variables, leaving the
    /// rest symbolic.
    pub fn specialize(&self, values: &HashMap<usize, BigInt>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exponents().to_vec();
            for (&var, val) in values {
                let e = m.exponent(var);
                if e > 0 {
                    coeff *= val.pow(e as u32);
                    exps[var] = 0; // e > 0 implies var < exps.len()
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let mono = Monomial::from_exponents(exps);
            let entry = out.terms.entry(mono).or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out.table = if out.terms.keys().all(|m| m.is_one()) {
            0
        } else {
            self.table
        };
        out
    }

    /// Evaluate with a rational value for every variable that occurs.
    /// `values[i]` is the value of variable index `i`.
    pub fn eval_rational(&self, values: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (var, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= pow_rational(&values[var], e as u32);
                }
            }
            acc += t;
        }
        acc
    }

    /// The coefficient as a constant, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    /// True when the polynomial is `c * x_i` for a single variable and
    /// nonzero `c`, or a nonzero constant. These are the shapes accepted as
    /// leading coefficients by the T-fraction restriction transform.
    pub fn is_unit_monomial(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        !c.is_zero() && (m.is_one() || (m.degree() == 1))
    }

    /// Canonical text form: monomials in descending graded-lex order with
    /// explicit exponents, e.g. `2*x1^1*y1^1 - 1`.
    pub fn render(&self, table: &VarTable) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(out, "{}", abs);
            } else {
                let _ = write!(out, "{}", abs);
                for (var, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        let _ = write!(out, "*{}^{}", table.name(var), e);
                    }
                }
            }
        }
        out
    }
}

/// Incremental term accumulator; used where summing many monomials one
/// `Poly::add` at a time would be quadratic.
pub struct PolyBuilder {
    table: u64,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PolyBuilder {
    pub fn new(table: &VarTable) -> Self {
        PolyBuilder {
            table: table.id(),
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, exps: Vec<u16>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let m = Monomial::from_exponents(exps);
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += coeff;
    }

    pub fn finish(mut self) -> Poly {
        self.terms.retain(|_, c| !c.is_zero());
        Poly {
            table: self.table,
            terms: self.terms,
        }
    }
}

fn pow_rational(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// The (p,q)-integer `[n] = sum_{j=0}^{n-1} p^j q^{n-1-j}`, satisfying
/// `[n] = p[n-1] + q^{n-1}`.
pub fn pq_integer(n: u32, p: &Poly, q: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for j in 0..n {
        acc = acc.add(&p.pow(j).mul(&q.pow(n - 1 - j)));
    }
    acc
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}
