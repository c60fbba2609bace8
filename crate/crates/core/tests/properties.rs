//! Randomized structural properties of the blade algebra, complementing the
//! exhaustive checks in the unit and acceptance suites with generator-driven
//! cases over arbitrary (p, q) signatures up to dimension 8.

use clifford_cpt::blade_algebra::{
    blade_inverse, blade_mul, blade_square_sign, conjugation_sign, AlgebraSignature, Sign,
    SignedBlade,
};
use proptest::prelude::*;

fn small_signature() -> impl Strategy<Value = AlgebraSignature> {
    (1u32..=8).prop_flat_map(|total| {
        (Just(total), 0..=total).prop_map(|(t, p)| AlgebraSignature::new(p, t - p))
    })
}

fn blade_in(sig: AlgebraSignature) -> impl Strategy<Value = SignedBlade> {
    let max_mask = (1u32 << sig.dim()) - 1;
    (0..=max_mask, any::<bool>()).prop_map(|(mask, neg)| {
        SignedBlade::new(mask, if neg { Sign::Minus } else { Sign::Plus })
    })
}

fn sig_and_blades(n: usize) -> impl Strategy<Value = (AlgebraSignature, Vec<SignedBlade>)> {
    small_signature()
        .prop_flat_map(move |sig| (Just(sig), proptest::collection::vec(blade_in(sig), n)))
}

proptest! {
    #[test]
    fn product_is_associative((sig, blades) in sig_and_blades(3)) {
        let (a, b, c) = (blades[0], blades[1], blades[2]);
        let ab_c = blade_mul(sig, blade_mul(sig, a, b).unwrap(), c).unwrap();
        let a_bc = blade_mul(sig, a, blade_mul(sig, b, c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn square_matches_blade_square_sign((sig, blades) in sig_and_blades(1)) {
        let a = blades[0].positive();
        let sq = blade_mul(sig, a, a).unwrap();
        prop_assert_eq!(sq.mask(), 0);
        prop_assert_eq!(sq.sign(), blade_square_sign(sig, a));
    }

    #[test]
    fn inverse_is_two_sided((sig, blades) in sig_and_blades(1)) {
        let a = blades[0];
        let inv = blade_inverse(sig, a);
        prop_assert_eq!(blade_mul(sig, a, inv).unwrap(), SignedBlade::one());
        prop_assert_eq!(blade_mul(sig, inv, a).unwrap(), SignedBlade::one());
    }

    #[test]
    fn label_round_trips((_sig, blades) in sig_and_blades(1)) {
        let a = blades[0];
        prop_assert_eq!(SignedBlade::parse(&a.label()).unwrap(), a);
    }

    #[test]
    fn conjugation_sign_matches_direct_conjugation((sig, blades) in sig_and_blades(1)) {
        let b = blades[0].positive();
        for i in 0..sig.dim() {
            let g = SignedBlade::generator(i);
            let conj = blade_mul(sig, blade_mul(sig, b, g).unwrap(), blade_inverse(sig, b)).unwrap();
            let expected = match conjugation_sign(sig, b, i) {
                Sign::Plus => g,
                Sign::Minus => g.negate(),
            };
            prop_assert_eq!(conj, expected);
        }
    }

    #[test]
    fn grades_add_modulo_contraction((sig, blades) in sig_and_blades(2)) {
        // the product's index set is the symmetric difference of the factors'
        let (a, b) = (blades[0], blades[1]);
        let p = blade_mul(sig, a, b).unwrap();
        prop_assert_eq!(p.mask(), a.mask() ^ b.mask());
    }
}
