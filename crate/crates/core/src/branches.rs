//! One-dimensional components of the singular locus of the top form:
//! rational orbit representatives, isotropy groups, transversal germs,
//! local Milnor/Tjurina numbers and eigenspace dimensions.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{self, MonomialOrder, Staircase};
use crate::poly::{rat_int, Monomial, Polynomial, Rat, WeightSystem};

/// Which sign convention assigns a staircase monomial y^a to the eigenspace
/// index l = sign * <w, a> mod d. The default is pinned by comparing both
/// settings against the brute-force oracle on an asymmetric instance (see
/// the acceptance suite).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenSign {
    Plus,
    Minus,
}

impl Default for EigenSign {
    fn default() -> Self {
        EigenSign::Plus
    }
}

/// Data of one singular-locus orbit.
#[derive(Debug, Clone)]
pub struct BranchData {
    pub representative: Vec<Rat>,
    pub isotropy_order: u64,
    pub slice_index: usize,
    pub germ: Polynomial,
    pub germ_weights: Vec<u64>,
    pub mu0: usize,
    pub tau0: usize,
    pub eigen_dims: Vec<usize>,
    pub orbit_fingerprint: String,
}

// ---------------------------------------------------------------------------
// rational points of zero-dimensional ideals
// ---------------------------------------------------------------------------

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    if let Some(v) = n.to_u128() {
        let mut out = Vec::new();
        let mut i: u128 = 1;
        while i * i <= v {
            if v % i == 0 {
                out.push(BigInt::from(i));
                out.push(BigInt::from(v / i));
            }
            i += 1;
        }
        out.sort();
        out.dedup();
        out
    } else {
        // huge constant term: only probe small divisors and the number itself
        let mut out = Vec::new();
        for i in 1u64..=1_000_000 {
            let d = BigInt::from(i);
            if (&n % &d).is_zero() {
                out.push(d);
            }
        }
        out.push(n);
        out
    }
}

/// All rational roots of a univariate polynomial over Q.
pub fn rational_roots(p: &Polynomial) -> Vec<Rat> {
    assert_eq!(p.nvars(), 1);
    if p.is_zero() {
        return vec![];
    }
    let cleared = p.remove_content();
    let deg = cleared
        .terms()
        .map(|(m, _)| m.0[0])
        .max()
        .unwrap();
    let mut coeffs = vec![BigInt::zero(); (deg + 1) as usize];
    for (m, c) in cleared.terms() {
        debug_assert!(c.denom().is_one());
        coeffs[m.0[0] as usize] = c.numer().clone();
    }
    let mut roots = Vec::new();
    let mut low = 0usize;
    while coeffs[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
    }
    if low == deg as usize {
        return roots;
    }
    let a0 = coeffs[low].clone();
    let alead = coeffs[deg as usize].clone();
    for p_div in divisors(&a0) {
        for q_div in divisors(&alead) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&p_div * BigInt::from(sign), q_div.clone());
                if p.eval(std::slice::from_ref(&cand)).unwrap().is_zero()
                    && !roots.contains(&cand)
                {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// Rational points of a zero-dimensional ideal, by lex triangularization and
/// back-substitution through univariate rational roots. Non-rational points
/// are silently dropped.
pub fn rational_points(gens: &[Polynomial]) -> Result<Vec<Vec<Rat>>> {
    let nvars = gens.first().map(|g| g.nvars()).unwrap_or(0);
    if nvars == 0 {
        return Ok(if gens.iter().all(|g| g.is_zero()) {
            vec![vec![]]
        } else {
            vec![]
        });
    }
    let gb = ideal::groebner_basis(gens, &MonomialOrder::Lex)?;
    if gb.contains_unit() {
        return Ok(vec![]);
    }
    // smallest lex variable is the last one; its elimination ideal is
    // generated by a univariate member of the lex basis
    let last = nvars - 1;
    let uni = gb
        .generators
        .iter()
        .find(|g| g.terms().all(|(m, _)| (0..last).all(|i| m.0[i] == 0)));
    let Some(uni) = uni else {
        return Err(Error::Inconsistent(
            "no univariate generator in lex basis; ideal not zero-dimensional".into(),
        ));
    };
    let mut squeezed = Polynomial::zero(1);
    for (m, c) in uni.terms() {
        squeezed.add_term(Monomial(vec![m.0[last]]), c.clone());
    }
    let mut out = Vec::new();
    for r in rational_roots(&squeezed) {
        let reduced: Vec<Polynomial> = gb
            .generators
            .iter()
            .map(|g| g.substitute(last, &r).remove_var(last))
            .filter(|g| !g.is_zero())
            .collect();
        for mut point in rational_points(&reduced)? {
            point.push(r.clone());
            out.push(point);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// orbits
// ---------------------------------------------------------------------------

/// Ideal of the closure of the weighted orbit of `a`: eliminate v from
/// { x_i - a_i v^{w_i} }.
pub fn orbit_closure_ideal(a: &[Rat], w: &WeightSystem) -> Result<Vec<Polynomial>> {
    let n = a.len();
    let ring = n + 1; // v is variable 0, largest in lex
    let mut gens = Vec::new();
    for i in 0..n {
        let mut g = Polynomial::var(i + 1, ring);
        if !a[i].is_zero() {
            let mut vm = Monomial::one(ring);
            vm.0[0] = w.weight(i);
            g = g.sub(&Polynomial::term(vm, a[i].clone()));
        }
        gens.push(g);
    }
    let gb = ideal::groebner_basis(&gens, &MonomialOrder::Lex)?;
    Ok(gb
        .generators
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.0[0] == 0))
        .map(|g| g.remove_var(0))
        .collect())
}

fn fingerprint(gens: &[Polynomial]) -> String {
    let mut parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    parts.sort();
    parts.join("; ")
}

// ---------------------------------------------------------------------------
// transversal germ and local invariants
// ---------------------------------------------------------------------------

/// Slice the top form transversally to the orbit of `a`: fix x_m = a_m for
/// the nonzero coordinate m of minimal weight and translate the rest to the
/// origin. Returns the germ, its ambient weights and the slice index.
pub fn transversal_germ(
    top: &Polynomial,
    a: &[Rat],
    w: &WeightSystem,
) -> Result<(Polynomial, Vec<u64>, usize)> {
    let n = top.nvars();
    if a.len() != n {
        return Err(Error::VarCountMismatch {
            expected: n,
            got: a.len(),
        });
    }
    let m = (0..n)
        .filter(|&i| !a[i].is_zero())
        .min_by_key(|&i| (w.weight(i), i))
        .ok_or_else(|| Error::Inconsistent("branch representative is the origin".into()))?;
    let mut shift: Vec<Rat> = a.to_vec();
    shift[m] = Rat::zero();
    let germ = top
        .substitute(m, &a[m])
        .translate(&shift)?
        .remove_var(m);
    if !germ.eval(&vec![Rat::zero(); n - 1])?.is_zero() {
        return Err(Error::Inconsistent("transversal germ does not vanish at 0".into()));
    }
    Ok((germ, w.without(m), m))
}

fn local_quotient_count(gens: &[Polynomial]) -> Result<usize> {
    let sb = ideal::local_standard_basis(gens)?;
    match ideal::quotient_staircase(&sb) {
        Staircase::Finite(v) => Ok(v.len()),
        Staircase::Infinite => Err(Error::NonIsolatedGerm),
    }
}

/// Local Milnor number: length of C[[y]]/(grad g).
pub fn local_milnor(germ: &Polynomial) -> Result<usize> {
    local_quotient_count(&germ.gradient())
}

/// Local Tjurina number: length of C[[y]]/(g, grad g).
pub fn local_tjurina(germ: &Polynomial) -> Result<usize> {
    let mut gens = germ.gradient();
    gens.push(germ.clone());
    local_quotient_count(&gens)
}

fn residue(m: &Monomial, weights: &[u64], d: u64, sign: EigenSign) -> usize {
    let raw: i128 = m
        .0
        .iter()
        .zip(weights)
        .map(|(e, w)| (*e as i128) * (*w as i128))
        .sum();
    let signed = match sign {
        EigenSign::Plus => raw,
        EigenSign::Minus => -raw,
    };
    signed.rem_euclid(d as i128) as usize
}

/// Dimensions of the eigenspaces of the order-d diagonal action on the
/// Milnor algebra of the germ. The Jacobian ideal is first checked to be
/// invariant under the action.
pub fn eigenspace_dims(
    germ: &Polynomial,
    germ_weights: &[u64],
    d: u64,
    sign: EigenSign,
) -> Result<Vec<usize>> {
    assert!(d >= 1);
    let jac = germ.gradient();
    let sb = ideal::local_standard_basis(&jac)?;
    let monos = match ideal::quotient_staircase(&sb) {
        Staircase::Finite(v) => v,
        Staircase::Infinite => return Err(Error::NonIsolatedGerm),
    };
    if d > 1 {
        // split each basis element into its Z/d-graded pieces and check each
        // piece lies in the ideal again
        for g in &sb.generators {
            let mut pieces: std::collections::BTreeMap<usize, Polynomial> =
                std::collections::BTreeMap::new();
            for (m, c) in g.terms() {
                let r = residue(m, germ_weights, d, EigenSign::Plus);
                pieces
                    .entry(r)
                    .or_insert_with(|| Polynomial::zero(germ.nvars()))
                    .add_term(m.clone(), c.clone());
            }
            if pieces.len() > 1 {
                for piece in pieces.values() {
                    if !sb.reduces_to_zero(piece) {
                        return Err(Error::NonInvariantJacobian);
                    }
                }
            }
        }
    }
    let mut dims = vec![0usize; d as usize];
    for m in &monos {
        dims[residue(m, germ_weights, d, sign)] += 1;
    }
    Ok(dims)
}

/// Eigenspace dimensions of the suspension g + x0^k, via the direct-sum
/// rule over t = 0..k-2.
pub fn suspended_dims(eigen_dims: &[usize], d: u64, k: u64) -> Result<Vec<usize>> {
    if k < 2 {
        return Err(Error::NotApplicable);
    }
    let d = d as usize;
    let mut out = vec![0usize; d];
    for (l, slot) in out.iter_mut().enumerate() {
        for t in 0..(k - 1) as usize {
            *slot += eigen_dims[(l as i128 - t as i128).rem_euclid(d as i128) as usize];
        }
    }
    Ok(out)
}

/// If the germ is quasi-homogeneous for some positive rational weights
/// (all monomials of degree 1), return the Milnor number predicted by the
/// product formula prod(1/u_i - 1). Used as an independent cross-check.
pub fn quasi_homogeneous_milnor(germ: &Polynomial) -> Option<Rat> {
    let n = germ.nvars();
    let monos: Vec<&Monomial> = germ.terms().map(|(m, _)| m).collect();
    if monos.is_empty() {
        return None;
    }
    // solve <u, alpha> = 1 by Gaussian elimination
    let mut rows: Vec<Vec<Rat>> = monos
        .iter()
        .map(|m| {
            let mut r: Vec<Rat> = m.0.iter().map(|&e| rat_int(e as i64)).collect();
            r.push(Rat::one());
            r
        })
        .collect();
    let mut pivots: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = Rat::one() / rows[row][col].clone();
        for x in rows[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..=n {
                    let delta = &rows[row][c] * &f;
                    rows[r][c] -= delta;
                }
            }
        }
        pivots[col] = Some(row);
        row += 1;
    }
    // inconsistent system?
    for r in &rows {
        if r[..n].iter().all(|x| x.is_zero()) && !r[n].is_zero() {
            return None;
        }
    }
    // need a unique solution with all weights positive
    let mut u = Vec::with_capacity(n);
    for (col, piv) in pivots.iter().enumerate() {
        match piv {
            Some(r) => u.push(rows[*r][n].clone()),
            None => {
                let _ = col;
                return None;
            }
        }
    }
    if u.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let mut mu = Rat::one();
    for ui in &u {
        mu *= Rat::one() / ui.clone() - Rat::one();
    }
    Some(mu)
}

// ---------------------------------------------------------------------------
// branch discovery
// ---------------------------------------------------------------------------

const SLICE_VALUES: [i64; 6] = [1, -1, 2, -2, 3, -3];

/// Find the 1-dimensional singular branches of the top form, with one
/// rational representative each. `hints` supplements the slice-and-solve
/// search for components without small rational points.
pub fn find_branches(
    top: &Polynomial,
    w: &WeightSystem,
    hints: &[Vec<Rat>],
    sign: EigenSign,
) -> Result<Vec<BranchData>> {
    let n = top.nvars();
    let grads = top.gradient();
    let gb = ideal::groebner_basis(&grads, &MonomialOrder::grevlex(n))?;
    let dim = ideal::krull_dimension(&gb);
    if dim != 1 {
        return Err(Error::NotCurve { dim });
    }

    let mut candidates: Vec<Vec<Rat>> = Vec::new();
    for hint in hints {
        if hint.len() != n {
            return Err(Error::VarCountMismatch {
                expected: n,
                got: hint.len(),
            });
        }
        if hint.iter().all(|c| c.is_zero()) {
            return Err(Error::Inconsistent("branch hint is the origin".into()));
        }
        for g in &grads {
            if !g.eval(hint)?.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "branch hint is not a singular point of the top form: {hint:?}"
                )));
            }
        }
        candidates.push(hint.clone());
    }
    for m in 0..n {
        for c in SLICE_VALUES {
            let c = rat_int(c);
            let sliced: Vec<Polynomial> = grads
                .iter()
                .map(|g| g.substitute(m, &c).remove_var(m))
                .filter(|g| !g.is_zero())
                .collect();
            let sgb = ideal::groebner_basis(&sliced, &MonomialOrder::Lex)?;
            if sgb.contains_unit() {
                continue;
            }
            if !ideal::is_zero_dimensional(&sgb) {
                continue;
            }
            for sol in rational_points(&sliced)? {
                let mut a = sol;
                a.insert(m, c.clone());
                candidates.push(a);
            }
        }
    }

    // dedupe candidates by orbit-closure ideal
    let mut orbits: Vec<(String, Vec<Polynomial>, Vec<Rat>)> = Vec::new();
    for a in candidates {
        if a.iter().all(|c| c.is_zero()) {
            continue;
        }
        let oi = orbit_closure_ideal(&a, w)?;
        let fp = fingerprint(&oi);
        if !orbits.iter().any(|(f, _, _)| *f == fp) {
            orbits.push((fp, oi, a));
        }
    }
    orbits.sort_by(|a, b| a.0.cmp(&b.0));

    // coverage: V(grad) must lie in the union of the orbit closures and the
    // origin, i.e. every generator of the product ideal m * prod(J_j)
    // vanishes on V(grad)
    let mut product: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
    for (_, oi, _) in &orbits {
        let mut next = Vec::new();
        for p in &product {
            for q in oi {
                next.push(p.mul(q));
            }
        }
        product = next;
    }
    for g in &product {
        if !ideal::radical_membership(g, &grads)? {
            return Err(Error::NonRationalBranch);
        }
    }

    let mut out = Vec::new();
    for (fp, _, a) in orbits {
        let (germ, germ_weights, slice_index) = transversal_germ(top, &a, w)?;
        let d = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| w.weight(i))
            .fold(0u64, num_integer::gcd);
        let mu0 = local_milnor(&germ)?;
        let tau0 = local_tjurina(&germ)?;
        let eigen_dims = eigenspace_dims(&germ, &germ_weights, d, sign)?;
        debug_assert_eq!(eigen_dims.iter().sum::<usize>(), mu0);
        out.push(BranchData {
            representative: a,
            isotropy_order: d,
            slice_index,
            germ,
            germ_weights,
            mu0,
            tau0,
            eigen_dims,
            orbit_fingerprint: fp,
        });
    }
    Ok(out)
}
