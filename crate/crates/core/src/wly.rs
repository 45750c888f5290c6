//! The weighted-Le-Yomdin-at-infinity test and classification of the
//! singular structure of the top form.

use crate::error::Result;
use crate::ideal::{self, MonomialOrder};
use crate::poly::{Polynomial, WeightedDecomposition};

/// Outcome of the WLY test for one decomposition.
#[derive(Debug, Clone)]
pub struct WlyAnalysis {
    pub dec: WeightedDecomposition,
    pub is_wly: bool,
    /// Dimension of V(grad f_N): -1 empty, 0 isolated, 1 curve, >= 2 higher.
    pub sing_dim: i64,
    pub quasi_tame: bool,
}

/// Decide whether the common zero set of grad f_N and f_{N-k} is contained
/// in the origin, coordinate by coordinate via radical membership.
pub fn check_wly(dec: &WeightedDecomposition) -> Result<WlyAnalysis> {
    let top = dec.top();
    let grads = top.gradient();
    let gb = ideal::groebner_basis(&grads, &MonomialOrder::grevlex(dec.nvars))?;
    let sing_dim = ideal::krull_dimension(&gb);

    let mut tested = grads.clone();
    tested.push(dec.subtop().clone());
    let mut is_wly = true;
    for i in 0..dec.nvars {
        if !ideal::radical_membership(&Polynomial::var(i, dec.nvars), &tested)? {
            is_wly = false;
            break;
        }
    }
    // the paper's dimension argument: WLY forces dim V(grad f_N) <= 1
    debug_assert!(!is_wly || sing_dim <= 1);
    Ok(WlyAnalysis {
        dec: dec.clone(),
        is_wly,
        sing_dim,
        quasi_tame: is_wly,
    })
}

/// True iff the gradient ideal of the (weighted homogeneous) top form is
/// zero-dimensional, so the only possible singular point is the origin.
pub fn sing_locus_is_isolated(top: &Polynomial) -> Result<bool> {
    Ok(ideal::ideal_dimension(&top.gradient())? <= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{decompose, rat_int, Monomial, WeightSystem};

    fn w(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    fn paper_f() -> Polynomial {
        let mut p = Polynomial::zero(3);
        p.add_term(Monomial(vec![7, 1, 0]), rat_int(1));
        p.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        p.add_term(Monomial(vec![0, 1, 0]), rat_int(1));
        p
    }

    #[test]
    fn paper_instance_is_wly() {
        let dec = decompose(&paper_f(), &w(&[2, 1, 5])).unwrap();
        let a = check_wly(&dec).unwrap();
        assert!(a.is_wly);
        assert_eq!(a.sing_dim, 1);
        assert!(a.quasi_tame);
    }

    #[test]
    fn four_variable_instance_is_wly() {
        // x1^3 + x1 x2 + x1 x3^2 + x3 x4^2 + x2, weights (1,2,1,1)
        let mut f = Polynomial::zero(4);
        f.add_term(Monomial(vec![3, 0, 0, 0]), rat_int(1));
        f.add_term(Monomial(vec![1, 1, 0, 0]), rat_int(1));
        f.add_term(Monomial(vec![1, 0, 2, 0]), rat_int(1));
        f.add_term(Monomial(vec![0, 0, 1, 2]), rat_int(1));
        f.add_term(Monomial(vec![0, 1, 0, 0]), rat_int(1));
        let dec = decompose(&f, &w(&[1, 2, 1, 1])).unwrap();
        assert_eq!((dec.degree, dec.gap), (3, 1));
        let a = check_wly(&dec).unwrap();
        assert!(a.is_wly);
    }

    #[test]
    fn rejected_instance() {
        // x1^2 x2^2 + x1 with usual weights: S(f) contains the line x1 = 0
        let mut f = Polynomial::zero(2);
        f.add_term(Monomial(vec![2, 2]), rat_int(1));
        f.add_term(Monomial(vec![1, 0]), rat_int(1));
        let dec = decompose(&f, &WeightSystem::usual(2)).unwrap();
        assert_eq!((dec.degree, dec.gap), (4, 3));
        let a = check_wly(&dec).unwrap();
        assert!(!a.is_wly);
    }

    #[test]
    fn isolated_top_forms() {
        // Brieskorn form
        let mut b = Polynomial::zero(3);
        b.add_term(Monomial(vec![15, 0, 0]), rat_int(1));
        b.add_term(Monomial(vec![0, 15, 0]), rat_int(1));
        b.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        assert!(sing_locus_is_isolated(&b).unwrap());

        let mut t = Polynomial::zero(3);
        t.add_term(Monomial(vec![7, 1, 0]), rat_int(1));
        t.add_term(Monomial(vec![0, 0, 3]), rat_int(1));
        assert!(!sing_locus_is_isolated(&t).unwrap());

        let s = Polynomial::term(Monomial(vec![2, 1]), rat_int(1));
        assert!(!sing_locus_is_isolated(&s).unwrap());
    }

    #[test]
    fn wly_invariant_under_variable_permutation() {
        // permute variables and weights together on the paper instance
        let f = paper_f();
        let perm = [2usize, 0, 1];
        let g = f.permute_vars(&perm);
        let wp = w(&[5, 2, 1]);
        let dec = decompose(&g, &wp).unwrap();
        let a = check_wly(&dec).unwrap();
        assert!(a.is_wly);
        assert_eq!(a.sing_dim, 1);
    }
}
