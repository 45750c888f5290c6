//! Randomized structural properties of the core algebra.

use milnor_core::branches::{eigenspace_dims, suspended_dims, EigenSign};
use milnor_core::ideal::{groebner_basis, quotient_staircase, MonomialOrder, Staircase};
use milnor_core::poly::{decompose, rat_int, Monomial, Polynomial, WeightSystem};
use proptest::prelude::*;

fn arb_poly(nvars: usize, max_exp: u64, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (
            prop::collection::vec(0..=max_exp, nvars),
            -4i64..=4,
        ),
        1..=max_terms,
    )
    .prop_map(move |terms| {
        let mut f = Polynomial::zero(nvars);
        for (e, c) in terms {
            if c != 0 {
                f.add_term(Monomial(e), rat_int(c));
            }
        }
        f
    })
}

fn arb_weights(nvars: usize) -> impl Strategy<Value = WeightSystem> {
    // first weight pinned to 1 so the gcd condition always holds
    prop::collection::vec(1u64..=4, nvars).prop_map(|mut w| {
        w[0] = 1;
        WeightSystem::new(w).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompose_reconstructs((f, w) in (2usize..=3).prop_flat_map(|n| (arb_poly(n, 5, 6), arb_weights(n)))) {
        if f.is_zero() || f.is_constant() {
            return Ok(());
        }
        match decompose(&f, &w) {
            Ok(dec) => {
                prop_assert_eq!(dec.reconstruct(), f);
                prop_assert!(dec.gap >= 1);
                for (&d, part) in &dec.parts {
                    prop_assert!(part.is_weighted_homogeneous(&w).unwrap());
                    prop_assert_eq!(part.weighted_degree(&w).unwrap(), Some(d));
                    prop_assert!(d <= dec.degree);
                }
                prop_assert!(dec.parts.contains_key(&dec.degree));
                prop_assert!(dec.parts.contains_key(&(dec.degree - dec.gap)));
            }
            Err(_) => {
                // single graded piece (or constant): nothing to decompose
                prop_assert!(f.is_weighted_homogeneous(&w).unwrap());
            }
        }
    }

    #[test]
    fn staircase_ignores_generator_order(
        (gens, perm) in (
            prop::collection::vec(arb_poly(2, 4, 4), 2..=4),
            any::<u64>(),
        )
    ) {
        let order = MonomialOrder::grevlex(2);
        let gb1 = groebner_basis(&gens, &order).unwrap();
        let mut shuffled = gens.clone();
        // cheap deterministic shuffle from the seed
        let n = shuffled.len();
        let mut s = perm;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let gb2 = groebner_basis(&shuffled, &order).unwrap();
        let count = |st: Staircase| match st {
            Staircase::Finite(v) => Some(v.len()),
            Staircase::Infinite => None,
        };
        prop_assert_eq!(count(quotient_staircase(&gb1)), count(quotient_staircase(&gb2)));
    }

    #[test]
    fn eigen_dims_partition_mu0((a, b, d) in (2u64..=5, 2u64..=5, 1u64..=5)) {
        // Brieskorn germ y1^a + y2^b with the natural group weights
        let mut germ = Polynomial::zero(2);
        germ.add_term(Monomial(vec![a, 0]), rat_int(1));
        germ.add_term(Monomial(vec![0, b]), rat_int(1));
        let mu0 = ((a - 1) * (b - 1)) as usize;
        for gw in [[1u64, 1], [1, d.max(1)], [b, a]] {
            if let Ok(dims) = eigenspace_dims(&germ, &gw, d, EigenSign::Plus) {
                prop_assert_eq!(dims.len(), d as usize);
                prop_assert_eq!(dims.iter().sum::<usize>(), mu0);
            }
        }
    }

    #[test]
    fn suspension_multiplies_by_k_minus_1(
        (dims, d_extra, k) in (prop::collection::vec(0usize..=6, 1..=6), 0u64..=3, 2u64..=6)
    ) {
        let d = dims.len() as u64 + d_extra;
        let mut padded = dims.clone();
        padded.resize(d as usize, 0);
        let sus = suspended_dims(&padded, d, k).unwrap();
        prop_assert_eq!(sus.len(), d as usize);
        let total: usize = padded.iter().sum();
        prop_assert_eq!(sus.iter().sum::<usize>(), (k as usize - 1) * total);
    }

    #[test]
    fn weighted_degree_is_additive(
        (f, g, w) in (2usize..=3).prop_flat_map(|n| (arb_poly(n, 4, 4), arb_poly(n, 4, 4), arb_weights(n)))
    ) {
        // homogeneous parts multiply with added degrees
        let pf = f.graded_parts(&w).unwrap();
        let pg = g.graded_parts(&w).unwrap();
        for (df, a) in &pf {
            for (dg, b) in &pg {
                let prod = a.mul(b);
                if !prod.is_zero() {
                    prop_assert_eq!(prod.weighted_degree(&w).unwrap(), Some(df + dg));
                }
            }
        }
    }
}
