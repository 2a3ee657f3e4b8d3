use gspin_core::clifford::{
    spin_matrix, torus_element, weyl_representative, CliffordContext, Multivector,
};
use gspin_core::conjugacy::{
    canonical, go_conjugate, gspin_conjugate, in_bad_position, multivector_conjugate,
    norm_one_lift, sign_twist_conjugate, spin_eigenvalues, spinor_norm_chart, std_conjugate,
    std_eigenvalues, steinberg_conjugate, GSpinTorusPoint,
};
use gspin_core::quadratic::Quadratic;
use gspin_core::rootdata::WeylElement;
use gspin_core::scalar::{int, rat, sorted_multiset, Rational};
use gspin_core::Error;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Pt = GSpinTorusPoint<Rational>;

fn coordinate_pool() -> Vec<Rational> {
    vec![int(1), int(-1), int(2), int(-2), int(3), rat(1, 2)]
}

fn all_points(n: usize) -> Vec<Pt> {
    let pool = coordinate_pool();
    let k = pool.len();
    (0..k.pow(n as u32 + 1))
        .map(|mut code| {
            let mut coords = Vec::new();
            for _ in 0..=n {
                coords.push(pool[code % k].clone());
                code /= k;
            }
            Pt::new(coords[0].clone(), coords[1..].to_vec()).unwrap()
        })
        .collect()
}

fn random_point(n: usize, rng: &mut ChaCha8Rng) -> Pt {
    let pool = coordinate_pool();
    let mut pick = || pool[rng.gen_range(0..pool.len())].clone();
    Pt::new(pick(), (0..n).map(|_| pick()).collect()).unwrap()
}

#[test]
fn closed_forms_match_the_clifford_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in [2, 3] {
        let ctx = CliffordContext::shared(n).unwrap();
        for _ in 0..25 {
            let t = Pt::new(
                rat(rng.gen_range(1..=7), rng.gen_range(1..=3)),
                (0..n)
                    .map(|_| rat(rng.gen_range(-5..=5) | 1, rng.gen_range(1..=3)))
                    .collect(),
            )
            .unwrap();
            let x = torus_element(&ctx, t.c(), t.a()).unwrap();
            let m = spin_matrix(&x);
            assert!(m.is_diagonal());
            assert_eq!(sorted_multiset(m.diagonal()), spin_eigenvalues(&t));
            assert_eq!(x.spinor_norm().unwrap(), spinor_norm_chart(&t));
            let so = x.gspin_to_go().unwrap().so_matrix();
            assert_eq!(sorted_multiset(so.diagonal()), std_eigenvalues(&t));
        }
    }
}

#[test]
fn steinberg_and_larsen_exhaustive_rank_two() {
    let pts = all_points(2);
    let orbits: Vec<Vec<Pt>> = pts
        .iter()
        .map(|t| gspin_core::conjugacy::weyl_orbit(t).unwrap())
        .collect();
    for (i, t1) in pts.iter().enumerate() {
        assert_eq!(
            sign_twist_conjugate(t1).unwrap(),
            in_bad_position(t1),
            "{t1}"
        );
        for t2 in &pts {
            let orbit_eq = orbits[i].contains(t2);
            assert_eq!(
                steinberg_conjugate(t1, t2).unwrap(),
                orbit_eq,
                "{t1} vs {t2}"
            );
        }
    }
    // the API path on a slice
    for t1 in pts.iter().step_by(7) {
        for t2 in pts.iter().step_by(5) {
            assert_eq!(
                gspin_conjugate(t1, t2).unwrap(),
                steinberg_conjugate(t1, t2).unwrap()
            );
        }
    }
}

#[test]
fn steinberg_and_larsen_random_rank_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..200 {
        let t1 = random_point(3, &mut rng);
        // half the pairs are conjugate by construction
        let t2 = if rng.gen_bool(0.5) {
            let ws = WeylElement::all(3).unwrap();
            t1.act(&ws[rng.gen_range(0..ws.len())]).unwrap()
        } else {
            random_point(3, &mut rng)
        };
        assert_eq!(
            gspin_conjugate(&t1, &t2).unwrap(),
            steinberg_conjugate(&t1, &t2).unwrap()
        );
        assert_eq!(sign_twist_conjugate(&t1).unwrap(), in_bad_position(&t1));
    }
}

#[test]
fn spin_eigenvalues_are_self_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for n in 1..=4 {
        for _ in 0..10 {
            let t = random_point(n, &mut rng);
            let nrm = spinor_norm_chart(&t);
            let ev = spin_eigenvalues(&t);
            let dual = sorted_multiset(ev.iter().map(|l| nrm.clone() / l.clone()).collect());
            assert_eq!(ev, dual);
        }
    }
}

#[test]
fn canonical_is_an_orbit_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for n in 1..=3 {
        for _ in 0..10 {
            let t = random_point(n, &mut rng);
            let c = canonical(&t).unwrap();
            for w in WeylElement::all(n).unwrap() {
                assert_eq!(canonical(&t.act(&w).unwrap()).unwrap(), c);
            }
        }
    }
}

#[test]
fn std_conjugacy_of_norm_one_lifts() {
    let pool = coordinate_pool();
    let mut lifts = Vec::new();
    for a1 in &pool {
        for a2 in &pool {
            lifts.push(norm_one_lift(&[a1.clone(), a2.clone()]).unwrap());
        }
    }
    for l in &lifts {
        assert_eq!(spinor_norm_chart(l), Quadratic::one());
    }
    let minus = -Quadratic::one();
    for l1 in &lifts {
        for l2 in &lifts {
            let up_to_center = gspin_conjugate(l1, l2).unwrap()
                || gspin_conjugate(l1, &l2.twist(&minus).unwrap()).unwrap();
            assert_eq!(std_conjugate(l1, l2).unwrap(), up_to_center, "{l1} vs {l2}");
        }
    }
}

#[test]
fn go_conjugacy_examples() {
    let c = int(5);
    let t1 = Pt::new(c.clone(), vec![int(2), int(3)]).unwrap();
    let t2 = Pt::new(c, vec![rat(1, 2), int(3)]).unwrap();
    // same SO image, different spinor norms
    assert!(std_conjugate(&t1, &t2).unwrap());
    assert!(!go_conjugate(&t1, &t2).unwrap());
    assert!(!gspin_conjugate(&t1, &t2).unwrap());
    let w = WeylElement::from_signs(vec![-1, 1]).unwrap();
    assert!(go_conjugate(&t1, &t1.act(&w).unwrap()).unwrap());
    assert!(go_conjugate(&t1, &t1.twist(&int(-1)).unwrap()).unwrap());
    let t3 = Pt::new(int(5), vec![int(2), int(5)]).unwrap();
    assert!(!go_conjugate(&t1, &t3).unwrap());
}

#[test]
fn multivector_conjugacy() {
    let ctx = CliffordContext::shared(2).unwrap();
    let t = torus_element(&ctx, &int(6), &[int(2), int(3)]).unwrap();
    for w in WeylElement::all(2).unwrap() {
        let x = weyl_representative(&ctx, &w).unwrap();
        let conj = x.mul(&t).unwrap().mul(&x.gspin_inverse().unwrap()).unwrap();
        assert!(multivector_conjugate(&t, &conj).unwrap());
    }
    let other = torus_element(&ctx, &int(6), &[int(2), int(5)]).unwrap();
    assert!(!multivector_conjugate(&t, &other).unwrap());
    let unip = Multivector::from_terms(&ctx, [(0, int(1)), (0b11, int(1))]).unwrap();
    assert!(matches!(
        multivector_conjugate(&t, &unip),
        Err(Error::NotSemisimple)
    ));
    let odd = Multivector::<Rational>::generator(&ctx, 0);
    assert!(matches!(
        multivector_conjugate(&t, &odd),
        Err(Error::NotInGSpin(_))
    ));
}
