mod common;

use common::{hyperoctahedral_3, hyperoctahedral_average, z2_characters};
use num_traits::{One, Zero};
use proptest::prelude::*;
use wreath_core::freeprob::{
    character_moments_wreath, classical_wreath_moments, compound_poisson_moments, EpsWord,
};
use wreath_core::fusion::{FusionData, GroupDualFusion, TableFusion};
use wreath_core::homspaces::dim_hom_wreath;
use wreath_core::scalar::rint;
use wreath_core::Rational;

#[test]
fn classical_matches_group_average() {
    assert_eq!(hyperoctahedral_3().len(), 48);
    for (chi, m) in z2_characters() {
        for k in 0..=4u32 {
            let formula = classical_wreath_moments(m, 3, k as usize).unwrap();
            assert_eq!(formula, hyperoctahedral_average(chi, k), "k={k}");
        }
    }
    let sgn = |j: usize| rint((j % 2 == 0) as i64);
    assert_eq!(classical_wreath_moments(sgn, 3, 4).unwrap(), rint(4));
}

fn check_character_law<F: FusionData>(fd: &F) {
    for a in fd.irreps().unwrap() {
        let initial = |e: &EpsWord| {
            let labels: Vec<_> = e.0.iter().map(|&c| (a.clone(), c)).collect();
            rint(wreath_core::homspaces::dim_hom_g(&[], &labels, fd) as i64)
        };
        for r in 0..=5 {
            for eps in EpsWord::all(r) {
                let m = character_moments_wreath(&a, fd, &eps).unwrap();
                let cp = compound_poisson_moments(&initial, &Rational::one(), &eps).unwrap();
                assert_eq!(rint(m as i64), cp, "{eps}");
                let down: Vec<_> = eps.0.iter().map(|&c| (a.clone(), c)).collect();
                if r <= 4 {
                    assert_eq!(m, dim_hom_wreath(&[], &down, fd).unwrap(), "{eps}");
                }
            }
        }
    }
}

#[test]
fn character_law_is_compound_poisson() {
    check_character_law(&GroupDualFusion::cyclic(2).unwrap());
    check_character_law(&GroupDualFusion::cyclic(3).unwrap());
    check_character_law(&TableFusion::dual_s3());
}

proptest! {
    #[test]
    fn compound_poisson_scales_cumulants(num in 0i64..5, den in 1i64..5, vals in proptest::collection::vec(-3i64..4, 6)) {
        let lambda = Rational::new(num.into(), den.into());
        let init = |e: &EpsWord| if e.is_empty() { Rational::one() } else { rint(vals[e.len() - 1]) };
        let m = |e: &EpsWord| compound_poisson_moments(&init, &lambda, e).unwrap();
        let k = wreath_core::freeprob::moments_to_free_cumulants(&m, 5).unwrap();
        for (w, v) in k.sorted() {
            if !w.is_empty() {
                prop_assert_eq!(v, lambda.clone() * init(&w));
            } else {
                prop_assert!(!v.is_zero());
            }
        }
    }
}
