use gspin_core::conjugacy::{spin_eigenvalues, spinor_norm_chart, GSpinTorusPoint};
use gspin_core::rootdata::{
    adjoint_trace_explicit, adjoint_trace_so, flip, is_dominant, pairing, root_system,
    weyl_character, weyl_dim, weyl_dim_formula, GroupTag, WeightKind, WeightVector, WeylElement,
};
use gspin_core::scalar::{int, rat, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dominant_weights(tag: GroupTag, n: usize, bound: i64) -> Vec<WeightVector> {
    let len = tag.weight_len(n);
    let mut out = Vec::new();
    let span = (2 * bound + 1) as usize;
    for code in 0..span.pow(len as u32) {
        let mut c = code;
        let coords: Vec<i64> = (0..len)
            .map(|_| {
                let v = (c % span) as i64 - bound;
                c /= span;
                v
            })
            .collect();
        let w = WeightVector::character(tag, n, coords).unwrap();
        if is_dominant(&w).unwrap() {
            out.push(w);
        }
    }
    out
}

#[test]
fn characters_are_weyl_invariant() {
    for n in 1..=3 {
        let ws = WeylElement::all(n).unwrap();
        for lambda in dominant_weights(GroupTag::GSpin, n, 1) {
            let chi = weyl_character(&lambda).unwrap();
            for w in &ws {
                let moved = chi.map_exponents(|e| {
                    let v = WeightVector {
                        coords: e.to_vec(),
                        ..lambda.clone()
                    };
                    w.act_weight(&v).unwrap().coords
                });
                assert_eq!(moved, chi, "λ = {:?}, w = {w:?}", lambda.coords);
            }
        }
    }
}

#[test]
fn dimensions_match_the_product_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut pool: Vec<WeightVector> = Vec::new();
    for (tag, n) in [
        (GroupTag::GSpin, 2),
        (GroupTag::GSp, 2),
        (GroupTag::SO, 3),
        (GroupTag::Sp, 3),
    ] {
        pool.extend(dominant_weights(tag, n, 2));
    }
    for _ in 0..20 {
        let w = &pool[rng.gen_range(0..pool.len())];
        assert_eq!(weyl_dim(w).unwrap(), weyl_dim_formula(w).unwrap(), "{w:?}");
    }
    let spin = WeightVector::character(GroupTag::GSpin, 3, vec![1, 0, 0, 0]).unwrap();
    assert_eq!(weyl_dim(&spin).unwrap(), int(8));
    let std = WeightVector::character(GroupTag::GSpin, 3, vec![0, 1, 0, 0]).unwrap();
    assert_eq!(weyl_dim(&std).unwrap(), int(7));
}

#[test]
fn weyl_action_preserves_spin_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut nz = || loop {
        let r = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        if r != int(0) {
            return r;
        }
    };
    for n in 1..=3 {
        for _ in 0..5 {
            let t = GSpinTorusPoint::<Rational>::new(nz(), (0..n).map(|_| nz()).collect()).unwrap();
            for w in WeylElement::all(n).unwrap() {
                let wt = t.act(&w).unwrap();
                assert_eq!(spin_eigenvalues(&wt), spin_eigenvalues(&t));
                assert_eq!(spinor_norm_chart(&wt), spinor_norm_chart(&t));
            }
        }
    }
}

#[test]
fn roots_pair_to_two_with_their_coroots() {
    for tag in [GroupTag::GSp, GroupTag::GSpin, GroupTag::Sp, GroupTag::SO] {
        for n in 1..=4 {
            let rs = root_system(tag, n).unwrap();
            assert_eq!(rs.roots.len(), n * n);
            for (r, c) in rs.roots.iter().zip(&rs.coroots) {
                let r = WeightVector::character(tag, n, r.clone()).unwrap();
                let c = WeightVector::cocharacter(tag, n, c.clone()).unwrap();
                assert_eq!(pairing(&r, &c).unwrap(), 2);
                // roots of one side are coroots of the other
                if matches!(tag, GroupTag::GSp | GroupTag::GSpin) {
                    let dual = root_system(flip(&r).unwrap().tag, n).unwrap();
                    assert!(dual.coroots.contains(&flip(&r).unwrap().coords));
                    assert_eq!(flip(&c).unwrap().kind, WeightKind::Character);
                }
            }
        }
    }
}

#[test]
fn adjoint_trace_explicit_matches_closed_form() {
    for n in 1..=4 {
        for a in 0..=n {
            assert_eq!(
                adjoint_trace_explicit(n, a, n - a).unwrap(),
                adjoint_trace_so(n, a, n - a).unwrap()
            );
        }
    }
}
