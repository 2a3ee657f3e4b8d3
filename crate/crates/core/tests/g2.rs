use gspin_core::clifford::{spin_matrix, torus_element, CliffordContext};
use gspin_core::conjugacy::{spinor_norm_chart, std_eigenvalues};
use gspin_core::g2::{
    embed_so7, ht2_matches_g2, is_g2_class, is_principal_type, spin_restriction_check, G2TorusPoint,
};
use gspin_core::quadratic::Quadratic;
use gspin_core::rootdata::WeylElement;
use gspin_core::scalar::{int, rat, sorted_multiset, Rational, Scalar};
use gspin_core::weights::check_ht2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rat(rng.gen_range(-7..=7), rng.gen_range(1..=4));
        if r != int(0) {
            return r;
        }
    }
}

#[test]
fn restriction_over_the_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let ctx = CliffordContext::shared(3).unwrap();
    for i in 0..60 {
        let g = G2TorusPoint::new(nonzero(&mut rng), nonzero(&mut rng)).unwrap();
        let r = spin_restriction_check(&g);
        assert!(r.ok && r.multiset_ok);
        let t = embed_so7(&g);
        assert_eq!(spinor_norm_chart(&t), int(1));
        assert!(is_g2_class(t.a()).unwrap());
        if i % 10 == 0 {
            // the Clifford lift has the same spin spectrum
            let x = torus_element(&ctx, t.c(), t.a()).unwrap();
            let mut std = std_eigenvalues(&t);
            std.push(int(1));
            assert_eq!(
                sorted_multiset(spin_matrix(&x).diagonal()),
                sorted_multiset(std)
            );
        }
    }
}

#[test]
fn restriction_over_quadratic_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for d in [2, 3, 5, -1] {
        for _ in 0..10 {
            let mut q = || Quadratic::new(nonzero(&mut rng), nonzero(&mut rng), d).unwrap();
            let g = G2TorusPoint::new(q(), q()).unwrap();
            let r = spin_restriction_check(&g);
            assert!(r.ok && r.multiset_ok);
            assert_eq!(spinor_norm_chart(&embed_so7(&g)), Quadratic::from_i64(1));
        }
    }
}

#[test]
fn g2_recognition_is_weyl_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    let ws = WeylElement::all(3).unwrap();
    for _ in 0..20 {
        let a: Vec<Rational> = (0..3).map(|_| nonzero(&mut rng)).collect();
        let base = is_g2_class(&a).unwrap();
        for w in &ws {
            let (_, moved) = w.act_chart(&int(1), &a).unwrap();
            assert_eq!(is_g2_class(&moved).unwrap(), base);
        }
    }
}

#[test]
fn ht2_and_g2_lattice_agree() {
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            for c in -5i64..=5 {
                let mu = [a, b, c];
                assert_eq!(ht2_matches_g2(&mu).unwrap(), !check_ht2(&mu).unwrap());
                // additive condition matches the multiplicative one at base 2
                let pow = |e: i64| Rational::from_i64(2).powi(e);
                assert_eq!(
                    ht2_matches_g2(&mu).unwrap(),
                    is_g2_class(&[pow(a), pow(b), pow(c)]).unwrap()
                );
            }
        }
    }
}

#[test]
fn independent_coordinates_avoid_principal_classes() {
    let primes = [2, 3, 5, 7, 11];
    for &x in &primes {
        for &y in &primes {
            if x != y {
                let g = G2TorusPoint::new(int(x), int(y)).unwrap();
                assert!(!is_principal_type(embed_so7(&g).a()), "({x},{y})");
            }
        }
    }
    // x = y^2 gives (s^2, s, s^3): a principal class
    let g = G2TorusPoint::new(int(4), int(2)).unwrap();
    assert!(is_principal_type(embed_so7(&g).a()));
}
