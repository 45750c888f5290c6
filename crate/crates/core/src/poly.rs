//! Sparse exact-rational multivariate polynomials with weighted-degree
//! structure, graded decomposition and weighted homogenization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exponent vector of a monomial. The length is fixed per ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u64>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<u64> {
        if w.len() != self.0.len() {
            return Err(Error::VarCountMismatch {
                expected: self.0.len(),
                got: w.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(w.weights())
            .map(|(e, wi)| e * wi)
            .sum())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Quotient, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// System of positive integer weights with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<u64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::BadWeights("empty weight vector".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::BadWeights("weights must be positive".into()));
        }
        let g = weights.iter().fold(0u64, |a, &b| num_integer::gcd(a, b));
        if g != 1 {
            return Err(Error::BadWeights(format!("gcd of weights is {g}, must be 1")));
        }
        Ok(WeightSystem { weights })
    }

    pub fn usual(nvars: usize) -> Self {
        WeightSystem {
            weights: vec![1; nvars],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    /// The weight sum w = w_1 + ... + w_{n+1}.
    pub fn sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn max(&self) -> u64 {
        *self.weights.iter().max().unwrap()
    }

    /// Prepend a fresh weight-1 variable (the homogenization variable).
    pub fn extend_front(&self) -> WeightSystem {
        let mut w = vec![1];
        w.extend_from_slice(&self.weights);
        WeightSystem { weights: w }
    }

    /// Drop the weight at position `i` (slice variable removal).
    pub fn without(&self, i: usize) -> Vec<u64> {
        let mut w = self.weights.clone();
        w.remove(i);
        w
    }
}

/// Sparse polynomial over Q with a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rat::one())
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Polynomial::term(Monomial::var(i, nvars), Rat::one())
    }

    pub fn var_pow(i: usize, e: u64, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = e;
        Polynomial::term(m, Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: u64) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] = e - 1;
                out.add_term(m2, c * rat_int(e as i64));
            }
        }
        out
    }

    /// The gradient (all formal partials).
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitute variable `i` by the constant `c`; the variable count is
    /// unchanged (the variable simply no longer occurs).
    pub fn substitute(&self, i: usize, c: &Rat) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, k) in &self.terms {
            let e = m.0[i];
            let mut m2 = m.clone();
            m2.0[i] = 0;
            let mut v = k.clone();
            for _ in 0..e {
                v *= c;
            }
            out.add_term(m2, v);
        }
        out
    }

    /// Drop variable `i` from the ring. The variable must not occur.
    pub fn remove_var(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            debug_assert_eq!(m.0[i], 0);
            let mut e = m.0.clone();
            e.remove(i);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Add a fresh variable at position 0 (exponent 0 everywhere).
    pub fn extend_front(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = vec![0];
            e.extend_from_slice(&m.0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Add a fresh variable at the end.
    pub fn extend_back(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.push(0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Apply the permutation `perm` to variables: new variable `i` is old
    /// variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e: Vec<u64> = perm.iter().map(|&j| m.0[j]).collect();
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Translation x_i -> x_i + a_i for every i.
    pub fn translate(&self, shift: &[Rat]) -> Result<Polynomial> {
        if shift.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                expected: self.nvars,
                got: shift.len(),
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut piece = Polynomial::constant(self.nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let lin = if shift[i].is_zero() {
                    Polynomial::var(i, self.nvars)
                } else {
                    Polynomial::var(i, self.nvars)
                        .add(&Polynomial::constant(self.nvars, shift[i].clone()))
                };
                piece = piece.mul(&lin.pow(e));
            }
            out = out.add(&piece);
        }
        Ok(out)
    }

    /// Divide out the gcd of all coefficients (content removal); the result
    /// has integer coefficients with content 1, up to overall sign kept from
    /// the leading coefficient of the storage order.
    pub fn remove_content(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            num_gcd = num_integer::gcd(num_gcd, scaled.abs());
        }
        let factor = Rat::new(denom_lcm, num_gcd);
        self.scale(&factor)
    }

    pub fn max_total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// The weighted degree of the polynomial (max over monomials), if any.
    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<Option<u64>> {
        let mut top = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(w)?;
            top = Some(top.map_or(d, |t: u64| t.max(d)));
        }
        Ok(top)
    }

    /// True when every monomial has the same weighted degree.
    pub fn is_weighted_homogeneous(&self, w: &WeightSystem) -> Result<bool> {
        let mut seen = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(w)?;
            match seen {
                None => seen = Some(d),
                Some(s) if s != d => return Ok(false),
                _ => {}
            }
        }
        Ok(true)
    }

    /// Bucket the terms by weighted degree.
    pub fn graded_parts(&self, w: &WeightSystem) -> Result<BTreeMap<u64, Polynomial>> {
        let mut parts: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.weighted_degree(w)?;
            parts
                .entry(d)
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        Ok(parts)
    }
}

/// The tuple (w; N; k) together with the graded parts of f.
#[derive(Debug, Clone)]
pub struct WeightedDecomposition {
    pub w: WeightSystem,
    pub degree: u64,
    pub gap: u64,
    pub parts: BTreeMap<u64, Polynomial>,
    pub nvars: usize,
}

impl WeightedDecomposition {
    pub fn top(&self) -> &Polynomial {
        &self.parts[&self.degree]
    }

    pub fn subtop(&self) -> &Polynomial {
        &self.parts[&(self.degree - self.gap)]
    }

    pub fn reconstruct(&self) -> Polynomial {
        let mut f = Polynomial::zero(self.nvars);
        for p in self.parts.values() {
            f = f.add(p);
        }
        f
    }
}

/// Split f into weighted-homogeneous parts and read off N and the gap k.
pub fn decompose(f: &Polynomial, w: &WeightSystem) -> Result<WeightedDecomposition> {
    if f.is_constant() {
        return Err(Error::DegenerateInput);
    }
    let parts = f.graded_parts(w)?;
    if parts.len() < 2 {
        return Err(Error::NotMixed);
    }
    let degrees: Vec<u64> = parts.keys().cloned().collect();
    let n_deg = *degrees.last().unwrap();
    let second = degrees[degrees.len() - 2];
    Ok(WeightedDecomposition {
        w: w.clone(),
        degree: n_deg,
        gap: n_deg - second,
        parts,
        nvars: f.nvars(),
    })
}

/// Weighted homogenization: f~ = f_N + x0^k f_{N-k} + ... + x0^N f_0, with x0
/// of weight 1 in front.
pub fn homogenize(dec: &WeightedDecomposition) -> Polynomial {
    let mut out = Polynomial::zero(dec.nvars + 1);
    for (&d, p) in &dec.parts {
        let lifted = p.extend_front();
        let x0 = Polynomial::var_pow(0, dec.degree - d, dec.nvars + 1);
        out = out.add(&lifted.mul(&x0));
    }
    out
}

/// Canonical display ordering: graded reverse lexicographic by total degree,
/// highest first.
fn display_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        match y.cmp(x) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| display_cmp(b, a));
        let mut first = true;
        for m in monos {
            let c = &self.terms[m];
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", i + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", i + 1, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
