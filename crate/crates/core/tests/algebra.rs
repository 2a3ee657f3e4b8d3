use gspin_core::algebra::{
    charpoly_to_power_sums, companion_matrix, find_twist_scalars, newton_to_charpoly, LaurentPoly,
    Matrix, UniPoly,
};
use gspin_core::scalar::{int, rat, Rational};
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn root_pool() -> Vec<Rational> {
    vec![int(-2), int(-1), rat(1, 2), int(1), int(2), int(3)]
}

/// All multisets of size `k` drawn from `pool`, as index vectors.
fn multisets(pool: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for m in multisets(pool, k - 1) {
        let start = m.last().copied().unwrap_or(0);
        for i in start..pool {
            let mut v = m.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

#[test]
fn newton_roundtrip_exhaustive() {
    let pool = root_pool();
    for deg in 1..=8 {
        for idx in multisets(pool.len(), deg) {
            let roots: Vec<Rational> = idx.iter().map(|&i| pool[i].clone()).collect();
            let p = UniPoly::from_roots(&roots);
            let sums = charpoly_to_power_sums(&p, deg).unwrap();
            let direct: Vec<Rational> = (1..=deg as i32)
                .map(|j| roots.iter().map(|r| r.pow(j)).sum::<Rational>())
                .collect();
            assert_eq!(sums, direct);
            assert_eq!(newton_to_charpoly(&sums, deg).unwrap(), p);
        }
    }
}

/// `det(X I - M)` by the Leibniz expansion over polynomial entries.
fn leibniz_charpoly(m: &Matrix<Rational>) -> UniPoly<Rational> {
    let n = m.rows();
    let entry = |i: usize, j: usize| {
        let c = UniPoly::constant(-m.get(i, j).clone());
        if i == j {
            c + UniPoly::x()
        } else {
            c
        }
    };
    let mut total = UniPoly::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = UniPoly::one();
        for (i, &j) in p.iter().enumerate() {
            term = term * entry(i, j);
        }
        total = std::mem::replace(&mut total, UniPoly::zero())
            + if inversions % 2 == 0 { term } else { -term };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

#[test]
fn companion_charpoly_matches_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..40 {
        let deg = rng.gen_range(1..=6);
        let mut coeffs: Vec<Rational> = (0..deg)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        coeffs.push(int(1));
        let p = UniPoly::new(coeffs);
        let c = companion_matrix(&p).unwrap();
        assert_eq!(leibniz_charpoly(&c), p);
        assert_eq!(c.charpoly(), p);
    }
}

fn twist_residual(
    p: &UniPoly<Rational>,
    q: &UniPoly<Rational>,
    m: usize,
    l: &Rational,
) -> UniPoly<Rational> {
    p.clone() - q.substitute_scaled(&l.recip()).scale(&l.pow(m as i32))
}

#[test]
fn twist_scalars_are_exact() {
    let p = UniPoly::new(vec![int(-4), int(0), int(1)]);
    let q = UniPoly::new(vec![int(-1), int(0), int(1)]);
    let t = find_twist_scalars(&p, &q, 2).unwrap();
    assert_eq!(t.found, vec![int(-2), int(2)]);
    assert!(!t.not_representable);

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let m = rng.gen_range(1..=5);
        let roots: Vec<Rational> = (0..m)
            .map(|_| rat(rng.gen_range(1..=6), rng.gen_range(1..=3)))
            .collect();
        let lambda = rat(rng.gen_range(-4..=4) * 2 + 1, rng.gen_range(1..=3));
        let q = UniPoly::from_roots(&roots);
        let p = UniPoly::from_roots(&roots.iter().map(|r| r * &lambda).collect::<Vec<_>>());
        let t = find_twist_scalars(&p, &q, m).unwrap();
        assert!(t.found.contains(&lambda));
        for l in &t.found {
            assert!(twist_residual(&p, &q, m, l).is_zero());
        }
    }
    // X^2 - 2 against X^2 - 1: the twist is sqrt(2)
    let t = find_twist_scalars(&UniPoly::new(vec![int(-2), int(0), int(1)]), &q, 2).unwrap();
    assert!(t.found.is_empty() && t.not_representable);
}

fn small_laurent(nvars: usize) -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), -5i64..=5), 0..6).prop_map(
        move |terms| {
            LaurentPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, int(c)))).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in small_laurent(3), b in small_laurent(3), c in small_laurent(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(3), a.clone());
    }

    #[test]
    fn charpoly_evaluates_to_zero_on_matrix(entries in prop::collection::vec(-4i64..=4, 9)) {
        let m = Matrix::from_rows(entries.chunks(3).map(|r| r.iter().map(|&x| int(x)).collect()).collect());
        prop_assert!(m.charpoly().eval_matrix(&m).is_zero());
        prop_assert!(m.charpoly().coeff(3).is_one());
    }
}
