//! Poincare series, virtual Euler characteristics, Euler characteristics of
//! the two affine Milnor fibers, and assembly of the total Milnor number.
//! Also the independent brute-force oracle.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::branches::{suspended_dims, BranchData};
use crate::error::{Error, Result};
use crate::ideal::{self, MonomialOrder, Staircase};
use crate::poly::{Monomial, Polynomial, Rat, WeightedDecomposition, WeightSystem};
use crate::wly::WlyAnalysis;

/// (-1)^p
fn sgn(p: usize) -> BigInt {
    if p % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn rat_to_int(r: &Rat, what: &str) -> Result<BigInt> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::Inconsistent(format!("{what} is not an integer: {r}")))
    }
}

/// prod (N - w_i)/w_i over all variables.
fn weight_product(w: &WeightSystem, n_deg: u64) -> Result<Rat> {
    let mut p = Rat::one();
    for &wi in w.weights() {
        if wi >= n_deg {
            return Err(Error::DegenerateWeights);
        }
        p *= Rat::new(BigInt::from(n_deg - wi), BigInt::from(wi));
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Poincare series and virtual Euler characteristics
// ---------------------------------------------------------------------------

/// Truncated expansion of P(t) = prod (1-t^{N-w_i})/(1-t^{w_i}).
#[derive(Debug, Clone)]
pub struct PoincareSeries {
    pub w: WeightSystem,
    pub degree: u64,
    pub coeffs: Vec<BigInt>,
}

pub fn poincare_coeffs(w: &WeightSystem, n_deg: u64, s_max: u64) -> Result<PoincareSeries> {
    if n_deg <= w.max() {
        return Err(Error::DegenerateWeights);
    }
    let len = (s_max + 1) as usize;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    for &wi in w.weights() {
        // divide by (1 - t^{w_i}): prefix recurrence
        let a = wi as usize;
        for s in a..len {
            let add = c[s - a].clone();
            c[s] += add;
        }
        // multiply by (1 - t^{N-w_i}), descending so old values are read
        let b = (n_deg - wi) as usize;
        for s in (b..len).rev() {
            let sub = c[s - b].clone();
            c[s] -= sub;
        }
    }
    Ok(PoincareSeries {
        w: w.clone(),
        degree: n_deg,
        coeffs: c,
    })
}

/// chi_m(w;N) = 1 + (-1)^n sum_{s <= mN-w} c_s, where w = sum of weights and
/// n+1 is the variable count. The sum starts at s = 0; this is what makes
/// the stabilized value equal 1 + (-1)^n prod (N-w_i)/w_i.
pub fn chi_virtual(w: &WeightSystem, n_deg: u64, m: u64) -> Result<BigInt> {
    assert!(m >= 1);
    let upper = m as i128 * n_deg as i128 - w.sum() as i128;
    if upper < 0 {
        return Ok(BigInt::one());
    }
    let series = poincare_coeffs(w, n_deg, upper as u64)?;
    let total: BigInt = series.coeffs.iter().sum();
    Ok(BigInt::one() + sgn(w.len() - 1) * total)
}

// ---------------------------------------------------------------------------
// existence of an isolated-singularity weighted homogeneous polynomial
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum IsoPoly {
    Yes(Polynomial),
    ProbablyNo,
}

impl IsoPoly {
    pub fn exists(&self) -> bool {
        matches!(self, IsoPoly::Yes(_))
    }
}

/// Corner monomials for variable i: x_i^a when w_i | N, and x_i^a x_j when
/// N - a w_i equals some other weight w_j. An isolated singularity of type
/// (w;N) needs one of these for every i, so an empty list is a fast No.
fn corner_monomials(w: &WeightSystem, n_deg: u64, i: usize) -> Vec<Monomial> {
    let n = w.len();
    let wi = w.weight(i);
    let mut out = Vec::new();
    for a in 1..=(n_deg / wi) {
        let rem = n_deg - a * wi;
        if rem == 0 {
            out.push(Monomial::var(i, n).mul(&pow_mono(i, a - 1, n)));
        } else {
            for j in 0..n {
                if j != i && w.weight(j) == rem {
                    let mut m = pow_mono(i, a, n);
                    m.0[j] += 1;
                    out.push(m);
                }
            }
        }
    }
    out
}

fn pow_mono(i: usize, e: u64, n: usize) -> Monomial {
    let mut m = Monomial::one(n);
    m.0[i] = e;
    m
}

fn random_monomial(rng: &mut ChaCha8Rng, w: &WeightSystem, n_deg: u64) -> Option<Monomial> {
    let n = w.len();
    'attempt: for _ in 0..32 {
        let mut exps = vec![0u64; n];
        let mut rem = n_deg;
        while rem > 0 {
            let eligible: Vec<usize> = (0..n).filter(|&i| w.weight(i) <= rem).collect();
            if eligible.is_empty() {
                continue 'attempt;
            }
            let i = eligible[rng.gen_range(0..eligible.len())];
            exps[i] += 1;
            rem -= w.weight(i);
        }
        return Some(Monomial(exps));
    }
    None
}

/// S-poly reduction budget per isolatedness check; exhausting it counts as
/// not isolated, which only costs the probe a trial.
const ISO_BUDGET: usize = 1000;

/// Isolatedness of the singularity of a weighted homogeneous f: for an
/// isolated singularity the Milnor algebra staircase lives below the socle
/// degree sum(N - 2 w_i), so a basis truncated just above decides exactly.
fn is_isolated(f: &Polynomial, w: &WeightSystem, n_deg: u64) -> bool {
    let socle: i128 = w
        .weights()
        .iter()
        .map(|&wi| n_deg as i128 - 2 * wi as i128)
        .sum();
    let max_deg = socle.max(0) as u64 + w.max();
    match ideal::truncated_weighted_basis(&f.gradient(), w.weights(), max_deg, ISO_BUDGET) {
        Ok(Some(sb)) => ideal::staircase_is_finite(&sb),
        _ => false,
    }
}

fn kuhn_augment(
    i: usize,
    targets: &[Vec<(usize, u64)>],
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &(j, _) in &targets[i] {
        if !seen[j] {
            seen[j] = true;
            if owner[j].is_none() || kuhn_augment(owner[j].unwrap(), targets, owner, seen) {
                owner[j] = Some(i);
                return true;
            }
        }
    }
    false
}

/// Try to assemble an invertible corner polynomial of type (w;N): a pure
/// power x_i^a where w_i | N and an injective assignment x_i^a x_j
/// elsewhere. Injectivity makes the support graph a union of Fermat, chain
/// and loop pieces, which all have isolated singularities.
fn corner_assignment(w: &WeightSystem, n_deg: u64) -> Option<Polynomial> {
    let n = w.len();
    let mut pure: Vec<Option<u64>> = vec![None; n];
    let mut targets: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for i in 0..n {
        let wi = w.weight(i);
        for a in 1..=(n_deg / wi) {
            let rem = n_deg - a * wi;
            if rem == 0 {
                pure[i] = Some(a);
            } else {
                for j in 0..n {
                    if j != i
                        && w.weight(j) == rem
                        && !targets[i].iter().any(|&(t, _)| t == j)
                    {
                        targets[i].push((j, a));
                    }
                }
            }
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if pure[i].is_some() {
            continue;
        }
        let mut seen = vec![false; n];
        if !kuhn_augment(i, &targets, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut f = Polynomial::zero(n);
    for i in 0..n {
        if let Some(a) = pure[i] {
            f.add_term(pow_mono(i, a, n), Rat::one());
        }
    }
    for j in 0..n {
        if let Some(i) = owner[j] {
            let a = targets[i].iter().find(|&&(t, _)| t == j).unwrap().1;
            let mut m = pow_mono(i, a, n);
            m.0[j] += 1;
            f.add_term(m, Rat::one());
        }
    }
    Some(f)
}

/// Probe for a weighted homogeneous polynomial of type (w;N) with an
/// isolated singularity at the origin. An injective corner assignment
/// certifies Yes combinatorially; otherwise a handful of corner-rich random
/// combinations is tested by (budgeted) standard-basis computation.
/// ProbablyNo is explicitly probabilistic.
pub fn iso_poly_exists(w: &WeightSystem, n_deg: u64, trials: u32, seed: u64) -> IsoPoly {
    let n = w.len();
    let corners: Vec<Vec<Monomial>> = (0..n).map(|i| corner_monomials(w, n_deg, i)).collect();
    if corners.iter().any(|c| c.is_empty()) {
        return IsoPoly::ProbablyNo;
    }
    if let Some(f) = corner_assignment(w, n_deg) {
        debug_assert!(is_isolated(&f, w, n_deg));
        return IsoPoly::Yes(f);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut f = Polynomial::zero(n);
        for c in &corners {
            let m = c[rng.gen_range(0..c.len())].clone();
            f.add_term(m, Rat::from(BigInt::from(rng.gen_range(1..=4))));
        }
        for _ in 0..rng.gen_range(0..=2u32) {
            if let Some(m) = random_monomial(&mut rng, w, n_deg) {
                f.add_term(m, Rat::from(BigInt::from(rng.gen_range(1..=3))));
            }
        }
        if is_isolated(&f, w, n_deg) {
            return IsoPoly::Yes(f);
        }
    }
    IsoPoly::ProbablyNo
}

// ---------------------------------------------------------------------------
// branch summaries (what the closed formulas actually consume)
// ---------------------------------------------------------------------------

/// The isotropy order, eigenspace dimensions and mu/tau bookkeeping of one
/// branch; all the fiber formulas need.
#[derive(Debug, Clone)]
pub struct BranchSummary {
    pub d: u64,
    pub dims: Vec<usize>,
    pub mu0: usize,
    /// None when the suspension bookkeeping cannot track tau.
    pub tau0: Option<usize>,
}

impl From<&BranchData> for BranchSummary {
    fn from(b: &BranchData) -> Self {
        BranchSummary {
            d: b.isotropy_order,
            dims: b.eigen_dims.clone(),
            mu0: b.mu0,
            tau0: Some(b.tau0),
        }
    }
}

impl BranchSummary {
    fn dim_at(&self, idx: i128) -> usize {
        self.dims[idx.rem_euclid(self.d as i128) as usize]
    }

    /// mu0 - tau0 when known.
    fn gap(&self) -> Option<usize> {
        self.tau0.map(|t| self.mu0 - t)
    }

    /// Data of the suspension g + x0^k: mu0 scales by k-1, the eigenspaces
    /// direct-sum over t = 0..k-2, and mu-tau goes 0 -> 0 and 1 -> k.
    fn suspend(&self, k: u64) -> Result<BranchSummary> {
        let dims = suspended_dims(&self.dims, self.d, k)?;
        let mu0 = self.mu0 * (k - 1) as usize;
        let tau0 = match self.gap() {
            Some(0) => Some(mu0),
            Some(1) => Some(mu0 - k as usize),
            _ => None,
        };
        Ok(BranchSummary {
            d: self.d,
            dims,
            mu0,
            tau0,
        })
    }
}

/// sum over branches, s = 1..N and (optionally) t = 0..k-1 of
/// dim M(g_j)^{base + s - t}.
fn eigen_sum(branches: &[BranchSummary], base: i128, n_deg: u64, k: Option<u64>) -> BigInt {
    let tmax = k.unwrap_or(1);
    let mut total: u128 = 0;
    for b in branches {
        for s in 1..=n_deg as i128 {
            for t in 0..tmax as i128 {
                total += b.dim_at(base + s - t) as u128;
            }
        }
    }
    BigInt::from(total)
}

fn stab_period(branches: &[BranchSummary], n_deg: u64) -> u64 {
    branches
        .iter()
        .map(|b| b.d / num_integer::gcd(b.d, n_deg))
        .fold(1, num_integer::lcm)
}

// ---------------------------------------------------------------------------
// Euler characteristics of the fibers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberMethod {
    /// (3.3): isolated singularity of the top form.
    Product,
    /// (3.5): an isolated-singularity polynomial of the type exists.
    Iso,
    /// (3.6) at the recorded stabilized m.
    Stabilized(u64),
    /// (3.6) outside its hypotheses (Dimca's conjecture), stabilized m.
    ConjecturalStab(u64),
}

impl FiberMethod {
    pub fn is_conjectural(&self) -> bool {
        matches!(self, FiberMethod::ConjecturalStab(_))
    }
}

/// chi of the Milnor fiber of an isolated weighted homogeneous singularity,
/// formula (3.3).
fn chi_isolated(w: &WeightSystem, n_deg: u64) -> Result<BigInt> {
    let prod = rat_to_int(&weight_product(w, n_deg)?, "(N-w_i)/w_i product")?;
    Ok(BigInt::one() + sgn(w.len() - 1) * prod)
}

/// Stabilized-m search: start at m0 = n+1, compare the value at m and m+L
/// where L is the period of the eigenspace index in m, cap at m0 + 10L.
fn stabilize<F>(m0: u64, l: u64, cap_mult: u64, value: F) -> Result<(Rat, u64)>
where
    F: Fn(u64) -> Result<Rat>,
{
    let cap = m0 + cap_mult * l;
    for m in m0..=cap {
        let v = value(m)?;
        if v == value(m + l)? {
            return Ok((v, m));
        }
    }
    Err(Error::NoStabilization(cap))
}

/// chi of the fiber F_N of the top form, by formula (3.3), (3.5) or (3.6).
fn fiber_chi(
    w: &WeightSystem,
    n_deg: u64,
    branches: &[BranchSummary],
    iso_yes: bool,
) -> Result<(BigInt, FiberMethod)> {
    let np = w.len(); // n + 1
    if branches.is_empty() {
        return Ok((chi_isolated(w, n_deg)?, FiberMethod::Product));
    }
    let w_sum = w.sum() as i128;
    if iso_yes {
        let prod = rat_to_int(&weight_product(w, n_deg)?, "(N-w_i)/w_i product")?;
        let base = -(n_deg as i128) - w_sum;
        let v = BigInt::one() + sgn(np - 1) * prod + sgn(np) * eigen_sum(branches, base, n_deg, None);
        return Ok((v, FiberMethod::Iso));
    }
    let conjectural = branches.iter().any(|b| !matches!(b.gap(), Some(0) | Some(1)));
    let l = stab_period(branches, n_deg);
    let value = |m: u64| -> Result<Rat> {
        let base = (m as i128 - 1) * n_deg as i128 - w_sum;
        let v = chi_virtual(w, n_deg, m)? + sgn(np) * eigen_sum(branches, base, n_deg, None);
        Ok(Rat::from(v))
    };
    let (v, m) = stabilize(np as u64, l, 10, value)?;
    let v = rat_to_int(&v, "chi(F_N)")?;
    let method = if conjectural {
        FiberMethod::ConjecturalStab(m)
    } else {
        FiberMethod::Stabilized(m)
    };
    Ok((v, method))
}

/// Public entry: chi(F_N) with its own existence probe.
pub fn chi_fiber(
    w: &WeightSystem,
    n_deg: u64,
    branches: &[BranchSummary],
    trials: u32,
    seed: u64,
) -> Result<BigInt> {
    let iso = iso_poly_exists(w, n_deg, trials, seed).exists();
    fiber_chi(w, n_deg, branches, iso).map(|(v, _)| v)
}

fn suspend_all(branches: &[BranchSummary], k: u64) -> Result<Vec<BranchSummary>> {
    branches.iter().map(|b| b.suspend(k)).collect()
}

/// chi of the fiber of the homogenization f~: (3.4) for k = 1, otherwise the
/// fiber formulas over ((1,w);N) with the suspended branch data.
pub fn chi_tilde(
    w: &WeightSystem,
    n_deg: u64,
    k: u64,
    branches: &[BranchSummary],
    trials: u32,
    seed: u64,
) -> Result<BigInt> {
    if k == 1 {
        let prod = weight_product(w, n_deg)?;
        let v = Rat::one()
            + Rat::from(sgn(w.len()) * BigInt::from(n_deg - 1)) * prod;
        return rat_to_int(&v, "chi(F~) via (3.4)");
    }
    let w1 = w.extend_front();
    let iso = iso_poly_exists(&w1, n_deg, trials, seed).exists();
    fiber_chi(&w1, n_deg, &suspend_all(branches, k)?, iso).map(|(v, _)| v)
}

/// An integer depending linearly on the gap k: constant + k_coeff * k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInK {
    pub constant: BigInt,
    pub k_coeff: BigInt,
}

impl std::fmt::Display for LinearInK {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.k_coeff.is_zero() {
            return write!(f, "{}", self.constant);
        }
        write!(f, "{} {} {}*k", self.constant,
            if self.k_coeff.is_negative() { "-" } else { "+" },
            self.k_coeff.magnitude())
    }
}

impl LinearInK {
    pub fn eval(&self, k: u64) -> BigInt {
        &self.constant + &self.k_coeff * BigInt::from(k)
    }
}

/// chi(F~) as a symbolic linear function of k (abstract mode): fit from
/// k = 2, 3 and verify at k = 4.
pub fn chi_tilde_symbolic(
    w: &WeightSystem,
    n_deg: u64,
    branches: &[BranchSummary],
    trials: u32,
    seed: u64,
) -> Result<LinearInK> {
    let w1 = w.extend_front();
    let iso = iso_poly_exists(&w1, n_deg, trials, seed).exists();
    let at = |k: u64| -> Result<BigInt> {
        fiber_chi(&w1, n_deg, &suspend_all(branches, k)?, iso).map(|(v, _)| v)
    };
    let v2 = at(2)?;
    let v3 = at(3)?;
    let k_coeff = &v3 - &v2;
    let constant = v2 - BigInt::from(2) * &k_coeff;
    let fit = LinearInK { constant, k_coeff };
    if fit.eval(4) != at(4)? {
        return Err(Error::Inconsistent("chi(F~) is not linear in k".into()));
    }
    Ok(fit)
}

// ---------------------------------------------------------------------------
// total Milnor number
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuValue {
    Finite(BigInt),
    Infinite,
    Conjectural(BigInt),
}

impl std::fmt::Display for MuValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MuValue::Finite(v) => write!(f, "{v}"),
            MuValue::Infinite => write!(f, "infinite"),
            MuValue::Conjectural(v) => write!(f, "conjectural({v})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaPath {
    Isolated,
    K1,
    Thm331,
    Thm332,
    Mixed,
}

impl std::fmt::Display for FormulaPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FormulaPath::Isolated => "Isolated(3.3-product)",
            FormulaPath::K1 => "K1(3.2+3.4)",
            FormulaPath::Thm331 => "Thm3.3-1(3.7)",
            FormulaPath::Thm332 => "Thm3.3-2(3.8)",
            FormulaPath::Mixed => "Mixed(3.2+3.5+3.6)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct MilnorReport {
    pub mu: MuValue,
    pub formula_path: FormulaPath,
    pub chi_fn: BigInt,
    pub chi_tilde: BigInt,
    pub hypotheses: Vec<(String, String)>,
    pub branches: Vec<BranchData>,
    pub wly: WlyAnalysis,
}

#[derive(Debug, Clone)]
pub struct MilnorOptions {
    pub trials: u32,
    pub seed: u64,
    pub allow_conjectural: bool,
}

impl Default for MilnorOptions {
    fn default() -> Self {
        MilnorOptions {
            trials: 16,
            seed: 0x6d696c6e6f72,
            allow_conjectural: false,
        }
    }
}

fn exact_div(num: BigInt, n_deg: u64) -> Result<BigInt> {
    let n = BigInt::from(n_deg);
    let (q, r) = num_integer::Integer::div_rem(&num, &n);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "chi difference {num} is not divisible by N = {n_deg}; \
             wrong eigen-sign convention or an upstream bug"
        )));
    }
    Ok(q)
}

/// Identity (3.2): mu = (-1)^{n+1} (chi(F~) - chi(F_N)) / N, division exact.
fn mu_from_chis(np: usize, n_deg: u64, chi_t: &BigInt, chi_f: &BigInt) -> Result<BigInt> {
    exact_div(sgn(np) * (chi_t - chi_f), n_deg)
}

/// Formula (3.8) with stabilized m.
fn mu_38(
    w: &WeightSystem,
    n_deg: u64,
    k: u64,
    branches: &[BranchSummary],
) -> Result<(BigInt, u64)> {
    let np = w.len();
    let w1 = w.extend_front();
    let w_sum = w.sum() as i128;
    let l = stab_period(branches, n_deg);
    let value = |m: u64| -> Result<Rat> {
        let diff = chi_virtual(&w1, n_deg, m)? - chi_virtual(w, n_deg, m)?;
        let base = (m as i128 - 1) * n_deg as i128 - w_sum;
        let s = eigen_sum(branches, base, n_deg, Some(k));
        Ok(Rat::new(sgn(np) * diff - s, BigInt::from(n_deg)))
    };
    let (v, m) = stabilize(np as u64, l, 10, value)?;
    Ok((rat_to_int(&v, "mu via (3.8)")?, m))
}

fn check_nonnegative(mu: &BigInt) -> Result<()> {
    if mu.is_negative() {
        return Err(Error::Inconsistent(format!("computed mu = {mu} < 0")));
    }
    Ok(())
}

/// Assemble the total Milnor number of a WLY polynomial from its analysis
/// and branch data, choosing a formula path per Theorem 3.3 and its remarks.
pub fn total_milnor(
    analysis: &WlyAnalysis,
    branches: &[BranchData],
    opts: &MilnorOptions,
) -> Result<MilnorReport> {
    if !analysis.is_wly {
        return Err(Error::Inconsistent(
            "total_milnor requires the WLY property".into(),
        ));
    }
    assemble(analysis, branches, opts)
}

/// Abstract mode: only the top form and the gap k are given; the WLY
/// property is assumed (Corollary 3.5: mu depends only on f_N and k).
pub fn total_milnor_abstract(
    top: &Polynomial,
    w: &WeightSystem,
    k: u64,
    branches: &[BranchData],
    opts: &MilnorOptions,
) -> Result<MilnorReport> {
    let n_deg = match top.weighted_degree(w)? {
        Some(d) if d > 0 => d,
        _ => return Err(Error::NotMixed),
    };
    if k == 0 || k >= n_deg {
        return Err(Error::Inconsistent(format!(
            "gap k = {k} must satisfy 0 < k < N = {n_deg}"
        )));
    }
    let mut parts = std::collections::BTreeMap::new();
    parts.insert(n_deg, top.clone());
    parts.insert(n_deg - k, Polynomial::zero(top.nvars()));
    let dec = WeightedDecomposition {
        w: w.clone(),
        degree: n_deg,
        gap: k,
        parts,
        nvars: top.nvars(),
    };
    let sing_dim = ideal::ideal_dimension(&top.gradient())?;
    let analysis = WlyAnalysis {
        dec,
        is_wly: true,
        sing_dim,
        quasi_tame: true,
    };
    assemble(&analysis, branches, opts)
}

fn assemble(
    analysis: &WlyAnalysis,
    branches: &[BranchData],
    opts: &MilnorOptions,
) -> Result<MilnorReport> {
    let dec = &analysis.dec;
    let w = &dec.w;
    let n_deg = dec.degree;
    let k = dec.gap;
    let np = dec.nvars; // n + 1
    let summaries: Vec<BranchSummary> = branches.iter().map(BranchSummary::from).collect();
    let mut hyps: Vec<(String, String)> = Vec::new();
    hyps.push((
        "wly".into(),
        if analysis.dec.subtop().is_zero() { "assumed (abstract mode)" } else { "verified" }.into(),
    ));

    // (a) isolated singularity of the top form: the product formula
    if analysis.sing_dim <= 0 {
        let mu = rat_to_int(&weight_product(w, n_deg)?, "(N-w_i)/w_i product")?;
        check_nonnegative(&mu)?;
        let chi_fn = chi_isolated(w, n_deg)?;
        let chi_t = &chi_fn + sgn(np) * BigInt::from(n_deg) * &mu;
        hyps.push(("top form singularity".into(), "isolated".into()));
        return Ok(MilnorReport {
            mu: MuValue::Finite(mu),
            formula_path: FormulaPath::Isolated,
            chi_fn,
            chi_tilde: chi_t,
            hypotheses: hyps,
            branches: branches.to_vec(),
            wly: analysis.clone(),
        });
    }
    if summaries.is_empty() {
        return Err(Error::Inconsistent(
            "1-dimensional singular locus but no branch data".into(),
        ));
    }
    let w_sum = w.sum() as i128;
    let w1 = w.extend_front();

    // (b) k = 1: the homogenization has isolated singularity, use (3.4)
    if k == 1 {
        let chi_t = chi_tilde(w, n_deg, 1, &summaries, opts.trials, opts.seed)?;
        let iso = iso_poly_exists(w, n_deg, opts.trials, opts.seed);
        hyps.push(("iso_poly(w;N)".into(), iso_status(&iso)));
        let (chi_fn, method) = fiber_chi(w, n_deg, &summaries, iso.exists())?;
        push_method(&mut hyps, "chi(F_N)", method);
        let mu = mu_from_chis(np, n_deg, &chi_t, &chi_fn)?;
        check_nonnegative(&mu)?;
        let mu = wrap_conjectural(mu, method.is_conjectural(), opts)?;
        return Ok(MilnorReport {
            mu,
            formula_path: FormulaPath::K1,
            chi_fn,
            chi_tilde: chi_t,
            hypotheses: hyps,
            branches: branches.to_vec(),
            wly: analysis.clone(),
        });
    }

    // (c) an isolated-singularity polynomial exists for (w;N): direct (3.7),
    // cross-checked against the full (3.2) pipeline
    let iso_w = iso_poly_exists(w, n_deg, opts.trials, opts.seed);
    hyps.push(("iso_poly(w;N)".into(), iso_status(&iso_w)));
    if let IsoPoly::Yes(witness) = &iso_w {
        let prod = weight_product(w, n_deg)?;
        let base = -(n_deg as i128) - w_sum;
        let triple = eigen_sum(&summaries, base, n_deg, Some(k));
        let direct = prod - Rat::new(triple, BigInt::from(n_deg));
        let mu = rat_to_int(&direct, "mu via (3.7)")?;
        check_nonnegative(&mu)?;
        // witness + x0^N is isolated for ((1,w);N) (Theorem 3.3 (1))
        let lifted = witness
            .extend_front()
            .add(&Polynomial::var_pow(0, n_deg, np + 1));
        debug_assert!(is_isolated(&lifted, &w1, n_deg));
        let (chi_fn, _) = fiber_chi(w, n_deg, &summaries, true)?;
        let (chi_t, _) = fiber_chi(&w1, n_deg, &suspend_all(&summaries, k)?, true)?;
        let pipeline = mu_from_chis(np, n_deg, &chi_t, &chi_fn)?;
        if pipeline != mu {
            return Err(Error::Inconsistent(format!(
                "(3.7) gives {mu} but the (3.2) pipeline gives {pipeline}"
            )));
        }
        hyps.push(("cross-check (3.7) vs (3.2)".into(), "equal".into()));
        return Ok(MilnorReport {
            mu: MuValue::Finite(mu),
            formula_path: FormulaPath::Thm331,
            chi_fn,
            chi_tilde: chi_t,
            hypotheses: hyps,
            branches: branches.to_vec(),
            wly: analysis.clone(),
        });
    }

    let gaps: Vec<Option<usize>> = summaries.iter().map(|b| b.gap()).collect();
    let all_eq = gaps.iter().all(|g| *g == Some(0));
    let all_le1 = gaps.iter().all(|g| matches!(g, Some(0) | Some(1)));
    hyps.push((
        "transversal mu0 - tau0".into(),
        if all_eq {
            "all zero".into()
        } else if all_le1 {
            "at most 1".into()
        } else {
            "exceeds 1".into()
        },
    ));

    // (e) mixed: isolated-singularity polynomial exists for ((1,w);N) even
    // though not for (w;N) — (3.5) for F~ and (3.6) for F_N
    let iso_1w = iso_poly_exists(&w1, n_deg, opts.trials, opts.seed);
    hyps.push(("iso_poly((1,w);N)".into(), iso_status(&iso_1w)));
    if iso_1w.exists() && all_le1 {
        let (chi_t, _) = fiber_chi(&w1, n_deg, &suspend_all(&summaries, k)?, true)?;
        let (chi_fn, method) = fiber_chi(w, n_deg, &summaries, false)?;
        push_method(&mut hyps, "chi(F_N)", method);
        let mu = mu_from_chis(np, n_deg, &chi_t, &chi_fn)?;
        check_nonnegative(&mu)?;
        return Ok(MilnorReport {
            mu: MuValue::Finite(mu),
            formula_path: FormulaPath::Mixed,
            chi_fn,
            chi_tilde: chi_t,
            hypotheses: hyps,
            branches: branches.to_vec(),
            wly: analysis.clone(),
        });
    }

    // (d) all mu0 = tau0: formula (3.8) at stabilized m; otherwise (f) the
    // same value under Dimca's conjecture, flagged conjectural
    let (mu, m) = mu_38(w, n_deg, k, &summaries)?;
    check_nonnegative(&mu)?;
    hyps.push(("stabilized m".into(), m.to_string()));
    let (chi_fn, method) = fiber_chi(w, n_deg, &summaries, false)?;
    push_method(&mut hyps, "chi(F_N)", method);
    let chi_t = &chi_fn + sgn(np) * BigInt::from(n_deg) * &mu;
    if !all_eq {
        hyps.push(("dimca-conjecture".into(), "assumed".into()));
    }
    let mu = wrap_conjectural(mu, !all_eq, opts)?;
    Ok(MilnorReport {
        mu,
        formula_path: FormulaPath::Thm332,
        chi_fn,
        chi_tilde: chi_t,
        hypotheses: hyps,
        branches: branches.to_vec(),
        wly: analysis.clone(),
    })
}

fn iso_status(iso: &IsoPoly) -> String {
    match iso {
        IsoPoly::Yes(f) => format!("yes ({f})"),
        IsoPoly::ProbablyNo => "probably-no".into(),
    }
}

fn push_method(hyps: &mut Vec<(String, String)>, what: &str, method: FiberMethod) {
    let s = match method {
        FiberMethod::Product => "(3.3)".to_string(),
        FiberMethod::Iso => "(3.5)".to_string(),
        FiberMethod::Stabilized(m) => format!("(3.6) at m = {m}"),
        FiberMethod::ConjecturalStab(m) => format!("(3.6) at m = {m}, conjectural"),
    };
    hyps.push((what.to_string(), s));
}

fn wrap_conjectural(mu: BigInt, conjectural: bool, opts: &MilnorOptions) -> Result<MuValue> {
    if !conjectural {
        return Ok(MuValue::Finite(mu));
    }
    if !opts.allow_conjectural {
        return Err(Error::Conjectural);
    }
    Ok(MuValue::Conjectural(mu))
}

// ---------------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleMu {
    Finite(usize),
    Infinite,
}

/// Dimension of the global Jacobian quotient ring C[x]/(grad f), which is
/// the sum of all local Milnor numbers when finite.
pub fn oracle_total_milnor(f: &Polynomial) -> Result<OracleMu> {
    let gb = ideal::groebner_basis(&f.gradient(), &MonomialOrder::grevlex(f.nvars()))?;
    Ok(match ideal::quotient_staircase(&gb) {
        Staircase::Finite(v) => OracleMu::Finite(v.len()),
        Staircase::Infinite => OracleMu::Infinite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branches::{find_branches, EigenSign};
    use crate::poly::{decompose, rat_int};
    use crate::wly::check_wly;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn report(f: &Polynomial, w: &WeightSystem) -> MilnorReport {
        let dec = decompose(f, w).unwrap();
        let analysis = check_wly(&dec).unwrap();
        assert!(analysis.is_wly);
        let branches = if analysis.sing_dim == 1 {
            find_branches(dec.top(), w, &[], EigenSign::Plus).unwrap()
        } else {
            vec![]
        };
        total_milnor(&analysis, &branches, &MilnorOptions::default()).unwrap()
    }

    #[test]
    fn poincare_examples() {
        let p = poincare_coeffs(&ws(&[1, 1]), 2, 5).unwrap();
        assert_eq!(p.coeffs, vec![big(1), big(0), big(0), big(0), big(0), big(0)]);

        let p = poincare_coeffs(&ws(&[1, 2, 3]), 9, 4).unwrap();
        assert_eq!(p.coeffs[0], big(1));
        assert_eq!(p.coeffs[1], big(1));
        assert!(p.coeffs.iter().all(|c| !c.is_negative()));
    }

    #[test]
    fn poincare_polynomial_type() {
        // for (1,24,33,58;265) the series is a polynomial of degree
        // sum(N - 2 w_i) = 828
        let p = poincare_coeffs(&ws(&[1, 24, 33, 58]), 265, 1000).unwrap();
        assert!(p.coeffs[829..].iter().all(|c| c.is_zero()));
        assert!(!p.coeffs[828].is_zero());
        assert!(p.coeffs.iter().all(|c| !c.is_negative()));
    }

    #[test]
    fn chi_virtual_values() {
        for m in 4..=12 {
            assert_eq!(chi_virtual(&ws(&[1, 1, 1, 1]), 3, m).unwrap(), big(-15));
            assert_eq!(chi_virtual(&ws(&[1, 2, 1, 1]), 3, m).unwrap(), big(-3));
        }
        // the fiber of x^2 + y^2 is C^*, so the stabilized value is 0
        for m in 1..=6 {
            assert_eq!(chi_virtual(&ws(&[1, 1]), 2, m).unwrap(), big(0));
        }
    }

    #[test]
    fn iso_probe_paper_types() {
        // paper witness x1^7 x2 + x2^15 + x3^3 for (2,1,5;15)
        let mut witness = Polynomial::zero(3);
        witness.add_term(Monomial(vec![7, 1, 0]), rat_int(1));
        witness.add_term(Monomial(vec![0, 15, 0]), rat_int(1));
        witness.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        assert!(is_isolated(&witness, &ws(&[2, 1, 5]), 15));
        assert!(iso_poly_exists(&ws(&[2, 1, 5]), 15, 8, 1).exists());
        assert!(iso_poly_exists(&ws(&[1, 2, 3]), 9, 8, 1).exists());
    }

    #[test]
    fn iso_probe_negative_and_lifted() {
        assert!(!iso_poly_exists(&ws(&[1, 24, 33, 58]), 265, 4, 1).exists());
        // but the homogenized type admits one (paper gives a witness)
        assert!(iso_poly_exists(&ws(&[1, 1, 24, 33, 58]), 265, 8, 1).exists());
    }

    fn paper_branch_summary() -> BranchSummary {
        BranchSummary {
            d: 2,
            dims: vec![6, 6],
            mu0: 12,
            tau0: Some(12),
        }
    }

    #[test]
    fn chi_fiber_paper() {
        let v = chi_fiber(&ws(&[1, 2, 3]), 9, &[paper_branch_summary()], 8, 1).unwrap();
        assert_eq!(v, big(3));
        // isolated case: x^2 + y^2
        assert_eq!(chi_fiber(&ws(&[1, 1]), 2, &[], 4, 1).unwrap(), big(0));
    }

    #[test]
    fn chi_fiber_big_example() {
        let b = BranchSummary {
            d: 3,
            dims: vec![1, 1, 1],
            mu0: 3,
            tau0: Some(3),
        };
        let v = chi_fiber(&ws(&[1, 24, 33, 58]), 265, &[b], 4, 1).unwrap();
        assert_eq!(v, big(-66250));
    }

    #[test]
    fn chi_tilde_values() {
        let v = chi_tilde(&ws(&[1, 2, 3]), 9, 7, &[paper_branch_summary()], 8, 1).unwrap();
        assert_eq!(v, big(-123));
        assert_eq!(chi_tilde(&ws(&[1, 2, 1, 1]), 3, 1, &[], 8, 1).unwrap(), big(9));
    }

    #[test]
    fn chi_tilde_symbolic_big_example() {
        let b = BranchSummary {
            d: 3,
            dims: vec![1, 1, 1],
            mu0: 3,
            tau0: Some(3),
        };
        let fit = chi_tilde_symbolic(&ws(&[1, 24, 33, 58]), 265, &[b], 8, 1).unwrap();
        assert_eq!(fit.constant, big(17560490));
        assert_eq!(fit.k_coeff, big(-265));
    }

    #[test]
    fn dual_weight_mu_14() {
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial(vec![7, 1, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        f.add_term(Monomial(vec![0, 1, 0]), rat_int(1));
        let r1 = report(&f, &ws(&[2, 1, 5]));
        assert_eq!(r1.mu, MuValue::Finite(big(14)));
        assert_eq!(r1.formula_path, FormulaPath::Thm331);
        let r2 = report(&f, &ws(&[1, 2, 3]));
        assert_eq!(r2.mu, MuValue::Finite(big(14)));
        assert_eq!(r2.chi_fn, big(3));
        assert_eq!(r2.chi_tilde, big(-123));
        assert_eq!(oracle_total_milnor(&f).unwrap(), OracleMu::Finite(14));
    }

    #[test]
    fn k1_path_mu_3() {
        let mut f = Polynomial::zero(4);
        f.add_term(Monomial(vec![3, 0, 0, 0]), rat_int(1));
        f.add_term(Monomial(vec![1, 1, 0, 0]), rat_int(1));
        f.add_term(Monomial(vec![1, 0, 2, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 1, 2]), rat_int(1));
        f.add_term(Monomial(vec![0, 1, 0, 0]), rat_int(1));
        let r = report(&f, &ws(&[1, 2, 1, 1]));
        assert_eq!(r.formula_path, FormulaPath::K1);
        assert_eq!(r.chi_tilde, big(9));
        assert_eq!(r.chi_fn, big(0));
        assert_eq!(r.mu, MuValue::Finite(big(3)));
        assert_eq!(oracle_total_milnor(&f).unwrap(), OracleMu::Finite(3));
    }

    #[test]
    fn usual_weights_reduction() {
        // x1^2 x2 + x3^3 + x2, usual weights: (N-1)^3 - k sum mu0 = 8 - 2*2
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial(vec![2, 1, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        f.add_term(Monomial(vec![0, 1, 0]), rat_int(1));
        let r = report(&f, &WeightSystem::usual(3));
        assert_eq!(r.formula_path, FormulaPath::Thm331);
        assert_eq!(r.mu, MuValue::Finite(big(4)));
        assert_eq!(oracle_total_milnor(&f).unwrap(), OracleMu::Finite(4));
    }

    #[test]
    fn isolated_path() {
        // Brieskorn plus a lower term
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial(vec![4, 0, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 4, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 4]), rat_int(1));
        f.add_term(Monomial(vec![1, 0, 0]), rat_int(1));
        let r = report(&f, &WeightSystem::usual(3));
        assert_eq!(r.formula_path, FormulaPath::Isolated);
        assert_eq!(r.mu, MuValue::Finite(big(27)));
        assert_eq!(oracle_total_milnor(&f).unwrap(), OracleMu::Finite(27));
    }

    #[test]
    fn abstract_big_example() {
        let mut top = Polynomial::zero(4);
        top.add_term(Monomial(vec![265, 0, 0, 0]), rat_int(1));
        top.add_term(Monomial(vec![1, 11, 0, 0]), rat_int(1));
        top.add_term(Monomial(vec![1, 0, 8, 0]), rat_int(1));
        top.add_term(Monomial(vec![0, 0, 1, 4]), rat_int(1));
        let w = ws(&[1, 24, 33, 58]);
        let branches = find_branches(&top, &w, &[], EigenSign::Plus).unwrap();
        let opts = MilnorOptions { trials: 8, seed: 1, ..Default::default() };
        let r = total_milnor_abstract(&top, &w, 100, &branches, &opts).unwrap();
        assert_eq!(r.formula_path, FormulaPath::Mixed);
        assert_eq!(r.mu, MuValue::Finite(big(66416)));
    }

    #[test]
    fn oracle_infinite() {
        let f = Polynomial::term(Monomial(vec![2, 1]), rat_int(1));
        assert_eq!(oracle_total_milnor(&f).unwrap(), OracleMu::Infinite);
    }
}
