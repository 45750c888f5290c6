//! Groebner bases for global monomial orders, Mora standard bases for a
//! local order, quotient staircases, Krull dimension and radical membership.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rat};

/// A monomial order. `Local` is anti-graded by total degree with reverse-lex
/// tie-break, so the constant monomial is the largest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    WeightedDegRevLex(Vec<u64>),
    Lex,
    Local,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder::WeightedDegRevLex(vec![1; nvars])
    }

    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::Local)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::WeightedDegRevLex(w) => {
                let da: u64 = a.0.iter().zip(w).map(|(e, wi)| e * wi).sum();
                let db: u64 = b.0.iter().zip(w).map(|(e, wi)| e * wi).sum();
                da.cmp(&db).then_with(|| revlex_tie(a, b))
            }
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Local => {
                let da = a.total_degree();
                let db = b.total_degree();
                db.cmp(&da).then_with(|| revlex_tie(a, b))
            }
        }
    }
}

// Reverse lexicographic tie-break: the monomial with the larger exponent in
// the last differing position is the smaller one.
fn revlex_tie(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        match y.cmp(x) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Polynomial with terms sorted descending under a fixed order. Internal
/// workhorse of the basis algorithms.
#[derive(Debug, Clone)]
struct OPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl OPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rat)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        OPoly { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rat {
        &self.terms[0].1
    }

    fn max_total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    fn ecart(&self) -> u64 {
        self.max_total_degree() - self.lm().total_degree()
    }

    fn scale(&mut self, c: &Rat) {
        for (_, k) in &mut self.terms {
            *k *= c;
        }
    }

    fn monic(&mut self) {
        if !self.is_zero() {
            let inv = Rat::one() / self.lc().clone();
            self.scale(&inv);
        }
    }

    fn remove_content(&mut self) {
        if self.is_zero() {
            return;
        }
        use num_bigint::BigInt;
        use num_traits::Signed;
        let mut denom_lcm = BigInt::one();
        for (_, c) in &self.terms {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            num_gcd = num_integer::gcd(num_gcd, scaled.abs());
        }
        let factor = Rat::new(denom_lcm, num_gcd);
        self.scale(&factor);
    }

    /// self - c * x^q * other, merging the sorted term lists.
    fn sub_mul(&self, other: &OPoly, q: &Monomial, c: &Rat, order: &MonomialOrder) -> OPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let om = other.terms[j].0.mul(q);
            match order.cmp(&self.terms[i].0, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((om, -(&other.terms[j].1 * c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let k = &self.terms[i].1 - &other.terms[j].1 * c;
                    if !k.is_zero() {
                        out.push((self.terms[i].0.clone(), k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push(self.terms[i].clone());
            i += 1;
        }
        while j < other.terms.len() {
            out.push((other.terms[j].0.mul(q), -(&other.terms[j].1 * c)));
            j += 1;
        }
        OPoly { terms: out }
    }
}

/// Full normal form with respect to `basis` (global orders). With a budget,
/// every division step is charged and None signals exhaustion.
fn normal_form_budgeted(
    f: OPoly,
    basis: &[OPoly],
    order: &MonomialOrder,
    budget: &mut Option<usize>,
) -> Option<OPoly> {
    let mut rem: Vec<(Monomial, Rat)> = Vec::new();
    let mut h = f;
    'outer: while !h.is_zero() {
        let lm = h.lm().clone();
        for g in basis {
            if g.lm().divides(&lm) {
                if let Some(b) = budget {
                    if *b == 0 {
                        return None;
                    }
                    *b -= 1;
                }
                let q = lm.div(g.lm());
                let c = h.lc() / g.lc();
                h = h.sub_mul(g, &q, &c, order);
                if rem.is_empty() {
                    h.remove_content();
                }
                continue 'outer;
            }
        }
        rem.push(h.terms.remove(0));
    }
    Some(OPoly { terms: rem })
}

fn normal_form(f: OPoly, basis: &[OPoly], order: &MonomialOrder) -> OPoly {
    normal_form_budgeted(f, basis, order, &mut None).expect("unbudgeted normal form")
}

/// Mora weak normal form with ecart selection (local order). Reduces the
/// leading term until it is no longer divisible; the tail is left alone.
fn mora_normal_form(f: OPoly, basis: &[OPoly], order: &MonomialOrder) -> OPoly {
    let mut t: Vec<OPoly> = basis.to_vec();
    let mut h = f;
    loop {
        if h.is_zero() {
            return h;
        }
        let mut best: Option<usize> = None;
        for (i, g) in t.iter().enumerate() {
            if g.lm().divides(h.lm()) {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if t[i].ecart() < t[b].ecart() {
                            best = Some(i);
                        }
                    }
                }
            }
        }
        let Some(b) = best else {
            return h;
        };
        if t[b].ecart() > h.ecart() {
            t.push(h.clone());
        }
        let q = h.lm().div(t[b].lm());
        let c = h.lc() / t[b].lc();
        h = h.sub_mul(&t[b], &q, &c, order);
        h.remove_content();
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn weighted_deg(m: &Monomial, w: &[u64]) -> u64 {
    m.0.iter().zip(w).map(|(e, wi)| e * wi).sum()
}

/// Buchberger loop, shared by the global and the local engine. For global
/// orders reduction is the full normal form; for the local order it is the
/// Mora weak normal form. The product criterion is only applied for global
/// orders.
///
/// `bound` discards S-pairs whose lcm exceeds the given weighted degree;
/// with weighted homogeneous input this yields a basis whose leading terms
/// are complete up to that degree. `budget` caps the number of S-poly
/// reductions; None is returned when it runs out.
fn completion_bounded(
    gens: &[Polynomial],
    order: &MonomialOrder,
    bound: Option<(&[u64], u64)>,
    budget: Option<usize>,
) -> Option<Vec<OPoly>> {
    let mut basis: Vec<OPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut q = OPoly::from_poly(p, order);
            q.remove_content();
            q
        })
        .collect();
    let within = |lcm: &Monomial| match bound {
        Some((w, max)) => weighted_deg(lcm, w) <= max,
        None => true,
    };
    let mut pairs: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let lcm = basis[i].lm().lcm(basis[j].lm());
            if within(&lcm) {
                pairs.push(Pair { i, j, lcm });
            }
        }
    }
    let mut budget = budget;
    let global = order.is_global();
    while !pairs.is_empty() {
        // normal selection strategy: lowest lcm under the order
        let mut best = 0;
        for (idx, p) in pairs.iter().enumerate() {
            if order.cmp(&p.lcm, &pairs[best].lcm) == Ordering::Less {
                best = idx;
            }
        }
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        if global && basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        // chain criterion
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            if g.lm().divides(&pair.lcm)
                && !pairs.iter().any(|p| {
                    (p.i == i.min(k) && p.j == i.max(k)) || (p.i == j.min(k) && p.j == j.max(k))
                })
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }
        if let Some(b) = &mut budget {
            if *b == 0 {
                return None;
            }
            *b -= 1;
        }
        let s = spoly_clean(&basis[i], &basis[j], order);
        let r = if global {
            normal_form_budgeted(s, &basis, order, &mut budget)?
        } else {
            mora_normal_form(s, &basis, order)
        };
        if !r.is_zero() {
            let mut r = r;
            r.remove_content();
            let new = basis.len();
            for k in 0..new {
                let lcm = basis[k].lm().lcm(r.lm());
                if within(&lcm) {
                    pairs.push(Pair { i: k, j: new, lcm });
                }
            }
            basis.push(r);
        }
    }
    Some(basis)
}

fn completion(gens: &[Polynomial], order: &MonomialOrder) -> Vec<OPoly> {
    completion_bounded(gens, order, None, None).expect("unbounded completion")
}

fn spoly_clean(f: &OPoly, g: &OPoly, order: &MonomialOrder) -> OPoly {
    let l = f.lm().lcm(g.lm());
    let qf = l.div(f.lm());
    let qg = l.div(g.lm());
    let lifted = OPoly {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&qf), c / f.lc())).collect(),
    };
    let mut gg = g.clone();
    let inv = Rat::one() / g.lc().clone();
    gg.scale(&inv);
    let mut s = lifted.sub_mul(&gg, &qg, &Rat::one(), order);
    s.remove_content();
    s
}

/// Keep only elements whose leading monomial is not divisible by another's;
/// then tail-reduce and normalize (global orders only for tail reduction).
fn minimalize(mut basis: Vec<OPoly>, order: &MonomialOrder, tail_reduce: bool) -> Vec<OPoly> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut keep: Vec<OPoly> = Vec::new();
    for g in basis {
        if !keep.iter().any(|h| h.lm().divides(g.lm())) {
            keep.push(g);
        }
    }
    if tail_reduce {
        let snapshot = keep.clone();
        keep = snapshot
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let others: Vec<OPoly> = snapshot
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i)
                    .map(|(_, h)| h.clone())
                    .collect();
                normal_form(g.clone(), &others, order)
            })
            .filter(|g| !g.is_zero())
            .collect();
    }
    for g in &mut keep {
        g.monic();
    }
    keep.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    keep
}

/// A Groebner or Mora basis together with its order.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
    nvars: usize,
    leading: Vec<Monomial>,
}

impl StandardBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn contains_unit(&self) -> bool {
        self.leading.iter().any(|m| m.total_degree() == 0)
    }

    /// Normal form of `p` with respect to this basis (full reduction for
    /// global orders, Mora weak normal form for the local order).
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let f = OPoly::from_poly(p, &self.order);
        let basis: Vec<OPoly> = self
            .generators
            .iter()
            .map(|g| OPoly::from_poly(g, &self.order))
            .collect();
        let r = if self.order.is_global() {
            normal_form(f, &basis, &self.order)
        } else {
            mora_normal_form(f, &basis, &self.order)
        };
        r.to_poly(self.nvars)
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

fn ring_nvars(gens: &[Polynomial]) -> Result<usize> {
    let nvars = gens.first().map(|p| p.nvars()).unwrap_or(0);
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::VarCountMismatch {
                expected: nvars,
                got: g.nvars(),
            });
        }
    }
    Ok(nvars)
}

/// Reduced Groebner basis for a global order.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<StandardBasis> {
    if !order.is_global() {
        return Err(Error::Inconsistent(
            "groebner_basis requires a global order; use local_standard_basis".into(),
        ));
    }
    let nvars = ring_nvars(gens)?;
    let basis = minimalize(completion(gens, order), order, true);
    let leading = basis.iter().map(|g| g.lm().clone()).collect();
    Ok(StandardBasis {
        generators: basis.iter().map(|g| g.to_poly(nvars)).collect(),
        order: order.clone(),
        reduced: true,
        nvars,
        leading,
    })
}

/// Degree-truncated Groebner basis for weighted homogeneous generators,
/// under the weighted graded order. Leading terms are complete up to
/// `max_deg`, which is enough to decide zero-dimensionality when the
/// staircase is known to live below that degree. Returns None when the
/// reduction budget runs out.
pub fn truncated_weighted_basis(
    gens: &[Polynomial],
    weights: &[u64],
    max_deg: u64,
    budget: usize,
) -> Result<Option<StandardBasis>> {
    let nvars = ring_nvars(gens)?;
    if nvars != weights.len() && !gens.is_empty() {
        return Err(Error::VarCountMismatch {
            expected: weights.len(),
            got: nvars,
        });
    }
    let order = MonomialOrder::WeightedDegRevLex(weights.to_vec());
    let Some(raw) = completion_bounded(gens, &order, Some((weights, max_deg)), Some(budget))
    else {
        return Ok(None);
    };
    let basis = minimalize(raw, &order, false);
    let leading = basis.iter().map(|g| g.lm().clone()).collect();
    Ok(Some(StandardBasis {
        generators: basis.iter().map(|g| g.to_poly(nvars)).collect(),
        order,
        reduced: false,
        nvars,
        leading,
    }))
}

/// Finiteness of the quotient without enumerating the staircase: every
/// variable must show a pure power among the leading terms.
pub fn staircase_is_finite(sb: &StandardBasis) -> bool {
    if sb.contains_unit() || sb.nvars == 0 {
        return true;
    }
    if sb.leading.is_empty() {
        return false;
    }
    (0..sb.nvars).all(|i| {
        sb.leading
            .iter()
            .any(|m| m.0[i] > 0 && (0..sb.nvars).all(|j| j == i || m.0[j] == 0))
    })
}

/// Mora standard basis with respect to the local order.
pub fn local_standard_basis(gens: &[Polynomial]) -> Result<StandardBasis> {
    let nvars = ring_nvars(gens)?;
    let order = MonomialOrder::Local;
    let basis = minimalize(completion(gens, &order), &order, false);
    let leading: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    Ok(StandardBasis {
        generators: basis.iter().map(|g| g.to_poly(nvars)).collect(),
        order,
        reduced: false,
        nvars,
        leading,
    })
}

/// Monomials outside the leading-term ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Staircase {
    Finite(Vec<Monomial>),
    Infinite,
}

impl Staircase {
    pub fn len(&self) -> Option<usize> {
        match self {
            Staircase::Finite(v) => Some(v.len()),
            Staircase::Infinite => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Staircase::Finite(v) if v.is_empty())
    }
}

pub fn quotient_staircase(sb: &StandardBasis) -> Staircase {
    staircase_of(sb.leading_monomials(), sb.nvars)
}

fn staircase_of(leading: &[Monomial], nvars: usize) -> Staircase {
    if leading.iter().any(|m| m.total_degree() == 0) {
        return Staircase::Finite(Vec::new());
    }
    if nvars == 0 {
        // no leading terms in a zero-variable ring: the quotient is the field
        return Staircase::Finite(vec![Monomial::one(0)]);
    }
    if leading.is_empty() {
        return Staircase::Infinite;
    }
    // finite iff every variable has a pure power among the leading terms
    let mut bounds = vec![None; nvars];
    for m in leading {
        let support: Vec<usize> = (0..nvars).filter(|&i| m.0[i] > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            let e = m.0[i];
            bounds[i] = Some(bounds[i].map_or(e, |b: u64| b.min(e)));
        }
    }
    if bounds.iter().any(|b| b.is_none()) {
        return Staircase::Infinite;
    }
    let bounds: Vec<u64> = bounds.into_iter().map(|b| b.unwrap()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u64; nvars];
    loop {
        let m = Monomial(cur.clone());
        if !leading.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box [0, bounds)
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort();
                return Staircase::Finite(out);
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Dimension of the affine variety, via the largest independent set of
/// variables modulo the leading-term ideal. Unit ideal gives -1.
pub fn krull_dimension(sb: &StandardBasis) -> i64 {
    if sb.contains_unit() {
        return -1;
    }
    let nvars = sb.nvars;
    let leading = sb.leading_monomials();
    if leading.is_empty() {
        return nvars as i64;
    }
    let mut best = 0i64;
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        let independent = !leading.iter().any(|m| {
            (0..nvars).all(|i| m.0[i] == 0 || mask & (1 << i) != 0)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// p lies in the radical of the ideal iff 1 lies in I + (1 - t p) in the
/// ring with one extra variable t.
pub fn radical_membership(p: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let nvars = ring_nvars(gens)?;
    if p.nvars() != nvars {
        return Err(Error::VarCountMismatch {
            expected: nvars,
            got: p.nvars(),
        });
    }
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_back()).collect();
    let t = Polynomial::var(nvars, nvars + 1);
    let trick = Polynomial::one(nvars + 1).sub(&t.mul(&p.extend_back()));
    ext.push(trick);
    let order = MonomialOrder::grevlex(nvars + 1);
    let gb = groebner_basis(&ext, &order)?;
    Ok(gb.contains_unit())
}

/// Convenience: dimension of V(gens) under a global order.
pub fn ideal_dimension(gens: &[Polynomial]) -> Result<i64> {
    let nvars = ring_nvars(gens)?;
    let gb = groebner_basis(gens, &MonomialOrder::grevlex(nvars))?;
    Ok(krull_dimension(&gb))
}

/// True iff the quotient by the ideal is a finite-dimensional vector space.
pub fn is_zero_dimensional(sb: &StandardBasis) -> bool {
    matches!(quotient_staircase(sb), Staircase::Finite(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn grevlex(n: usize) -> MonomialOrder {
        MonomialOrder::grevlex(n)
    }

    #[test]
    fn buchberger_one_step() {
        // {x1^2 + x2, x2} -> {x1^2, x2}
        let g1 = Polynomial::var_pow(0, 2, 2).add(&Polynomial::var(1, 2));
        let g2 = Polynomial::var(1, 2);
        let gb = groebner_basis(&[g1.clone(), g2.clone()], &grevlex(2)).unwrap();
        let strs: Vec<String> = gb.generators.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["x2", "x1^2"]);
        assert!(gb.reduces_to_zero(&g1));
        assert!(gb.reduces_to_zero(&g2));
    }

    #[test]
    fn single_generator() {
        let g = Polynomial::var(0, 1);
        let gb = groebner_basis(&[g], &grevlex(1)).unwrap();
        assert_eq!(gb.generators.len(), 1);
    }

    #[test]
    fn gradient_basis_leading_terms() {
        // gradient of x1^7 x2 + x3^3: (7 x1^6 x2, x1^7, 3 x3^2)
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial(vec![7, 1, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        let gb = groebner_basis(&f.gradient(), &grevlex(3)).unwrap();
        let mut lms: Vec<Monomial> = gb.leading_monomials().to_vec();
        lms.sort();
        assert_eq!(
            lms,
            vec![
                Monomial(vec![0, 0, 2]),
                Monomial(vec![6, 1, 0]),
                Monomial(vec![7, 0, 0]),
            ]
        );
    }

    #[test]
    fn local_unit_factor() {
        // (3y^2 - 2y) = (y) locally
        let g = Polynomial::var_pow(0, 2, 1)
            .scale(&rat_int(3))
            .add(&Polynomial::var(0, 1).scale(&rat_int(-2)));
        let sb = local_standard_basis(&[g]).unwrap();
        assert_eq!(sb.leading_monomials(), &[Monomial(vec![1])]);
        let st = quotient_staircase(&sb);
        assert_eq!(st.len(), Some(1));
    }

    #[test]
    fn local_monomial_staircase() {
        // (7y1^6, 3y3^2) in variables (y1, y3): 12 standard monomials
        let a = Polynomial::var_pow(0, 6, 2).scale(&rat_int(7));
        let b = Polynomial::var_pow(1, 2, 2).scale(&rat_int(3));
        let sb = local_standard_basis(&[a, b]).unwrap();
        assert_eq!(quotient_staircase(&sb).len(), Some(12));
    }

    #[test]
    fn local_unit_ideal() {
        let sb = local_standard_basis(&[Polynomial::one(2)]).unwrap();
        assert!(quotient_staircase(&sb).is_empty());
    }

    #[test]
    fn staircase_infinite() {
        // (x1^2 x2): no pure power of either variable
        let g = Polynomial::term(Monomial(vec![2, 1]), rat_int(1));
        let gb = groebner_basis(&[g], &grevlex(2)).unwrap();
        assert_eq!(quotient_staircase(&gb), Staircase::Infinite);
    }

    #[test]
    fn staircase_point() {
        let gb = groebner_basis(
            &[Polynomial::var(0, 2), Polynomial::var(1, 2)],
            &grevlex(2),
        )
        .unwrap();
        let st = quotient_staircase(&gb);
        assert_eq!(st, Staircase::Finite(vec![Monomial(vec![0, 0])]));
    }

    #[test]
    fn krull_dimension_examples() {
        // (x1, x3) in 3 variables -> dimension 1
        let gb = groebner_basis(
            &[Polynomial::var(0, 3), Polynomial::var(2, 3)],
            &grevlex(3),
        )
        .unwrap();
        assert_eq!(krull_dimension(&gb), 1);

        // gradient ideal of x1^7 x2 + x3^3 -> dimension 1
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial(vec![7, 1, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        let gb = groebner_basis(&f.gradient(), &grevlex(3)).unwrap();
        assert_eq!(krull_dimension(&gb), 1);

        // unit ideal -> -1
        let gb = groebner_basis(&[Polynomial::one(2)], &grevlex(2)).unwrap();
        assert_eq!(krull_dimension(&gb), -1);
    }

    #[test]
    fn radical_membership_examples() {
        let x1 = Polynomial::var(0, 2);
        let x2 = Polynomial::var(1, 2);
        assert!(radical_membership(&x1, &[x1.mul(&x1)]).unwrap());
        assert!(!radical_membership(&x2, &[x1.clone()]).unwrap());

        // x1 in rad(7 x1^6 x2, x1^7, x2)
        let g1 = Polynomial::term(Monomial(vec![6, 1]), rat_int(7));
        let g2 = Polynomial::var_pow(0, 7, 2);
        assert!(radical_membership(&x1, &[g1, g2, x2.clone()]).unwrap());
    }

    #[test]
    fn generator_shuffle_same_basis() {
        let g1 = Polynomial::var_pow(0, 2, 2).add(&Polynomial::var(1, 2));
        let g2 = Polynomial::var(1, 2).mul(&Polynomial::var(0, 2)).add(&Polynomial::one(2));
        let a = groebner_basis(&[g1.clone(), g2.clone()], &grevlex(2)).unwrap();
        let b = groebner_basis(&[g2, g1], &grevlex(2)).unwrap();
        assert_eq!(a.generators, b.generators);
    }
}
