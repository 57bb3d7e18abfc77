use mukai_core::exactmath::{int, rat, BigRational, RatMatrix};
use mukai_core::spinor::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n).map(|_| int(rng.gen_range(-4..=4))).collect()
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let mut a = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            a.set(i, j, x.clone());
            a.set(j, i, -x);
        }
    }
    a
}

fn random_ext(rng: &mut ChaCha8Rng, n: usize) -> ExtVec {
    let mut e = ExtVec::zero(n);
    for c in e.coeffs.iter_mut() {
        *c = int(rng.gen_range(-3..=3));
    }
    e
}

/// An invertible change of basis applied to the rows keeps the span.
fn scramble_rows(rng: &mut ChaCha8Rng, m: &RatMatrix) -> RatMatrix {
    loop {
        let g = RatMatrix::from_rows(m.nrows(), (0..m.nrows()).map(|_| random_vec(rng, m.nrows())).collect())
            .unwrap();
        if !g.det().unwrap().is_zero() {
            return g.mul(m).unwrap();
        }
    }
}

#[test]
fn phi_squares_to_quadratic_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let v = random_vec(&mut rng, 10);
        let s = random_ext(&mut rng, 5);
        let twice = phi_action(&v, &phi_action(&v, &s));
        assert_eq!(twice, s.scale(&quadratic(&v)));
    }
}

#[test]
fn phi_anticommutator_is_bilinear_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let v = random_vec(&mut rng, 10);
        let w = random_vec(&mut rng, 10);
        let s = random_ext(&mut rng, 5);
        let lhs = phi_action(&v, &phi_action(&w, &s)).add(&phi_action(&w, &phi_action(&v, &s)));
        assert_eq!(lhs, s.scale(&bilinear(&v, &w)));
    }
}

#[test]
fn clifford_product_matches_operator_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let a = CliffordElt::vector(&random_vec(&mut rng, 10));
        let b = CliffordElt::vector(&random_vec(&mut rng, 10));
        let c = CliffordElt::vector(&random_vec(&mut rng, 10));
        let s = random_ext(&mut rng, 5);
        let prod = a.mul(&b).mul(&c);
        assert_eq!(prod, a.mul(&b.mul(&c)));
        let direct = clifford_on_ext(&a, &clifford_on_ext(&b, &clifford_on_ext(&c, &s)));
        assert_eq!(clifford_on_ext(&prod, &s), direct);
    }
}

#[test]
fn pfaffian_and_kernel_methods_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let a = random_skew(&mut rng, 5);
        let u = Lagrangian(scramble_rows(&mut rng, &Lagrangian::from_skew(&a).0));
        assert!(u.is_lagrangian());
        let p = half_spinor_pfaffian(&u).unwrap();
        let k = half_spinor_kernel(&u).unwrap();
        assert_eq!(k.parity, Parity::Even);
        assert!(p.projectively_eq(&k.as_plus().unwrap()));
        assert!(on_og(&p));
    }
}

#[test]
fn small_rank_pfaffian_spinor_is_annihilated() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in 2..=4 {
        let a = random_skew(&mut rng, n);
        let u = Lagrangian::from_skew(&a);
        let p = half_spinor_pfaffian(&u).unwrap();
        let mut e = ExtVec::zero(n);
        for (c, s) in p.0.iter().zip(ordered_subsets(n, true)) {
            e.coeffs[s as usize] = c.clone();
        }
        for r in 0..n {
            assert!(phi_action(u.0.row(r), &e).is_zero());
        }
    }
}

#[test]
fn spinors_of_random_lagrangians_satisfy_og_quadrics() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let qs = og_quadrics();
    for _ in 0..50 {
        let a = random_skew(&mut rng, 5);
        let s = half_spinor_pfaffian(&Lagrangian::from_skew(&a)).unwrap();
        assert_eq!(s.0[0], BigRational::one());
        for q in &qs {
            assert!(q.eval(&s.0).unwrap().is_zero());
        }
    }
}

fn sp(entries: &[(&str, BigRational)]) -> SpinorPlus {
    let mut v = vec![BigRational::zero(); 16];
    for (name, c) in entries {
        v[coordinate_index(name).unwrap()] = c.clone();
    }
    SpinorPlus(v)
}

fn basis_vec(i: usize) -> SpinorPlus {
    let mut v = vec![BigRational::zero(); 16];
    v[i] = BigRational::one();
    SpinorPlus(v)
}

#[test]
fn gm_lift_is_diagonal_with_expected_exponents() {
    let exps = [-5, 2, 1, 0, -1, 0, -1, -2, -2, -3, -4, 5, 4, 3, 2, 1];
    for t in [int(2), int(3), rat(-1, 2), rat(5, 3)] {
        for sign in [1, -1] {
            let g = gm_lift(&t, sign);
            for (i, &k) in exps.iter().enumerate() {
                let img = spin_action(&g, &basis_vec(i)).unwrap();
                let scale: BigRational = if k >= 0 {
                    num_traits::pow(t.clone(), k as usize)
                } else {
                    num_traits::pow(t.recip(), (-k) as usize)
                };
                assert_eq!(img, basis_vec(i).scale_by(&(scale * int(sign))));
            }
        }
    }
}

#[test]
fn involution_lift_table() {
    let half = rat(1, 2);
    let table: [(&str, &str, BigRational); 8] = [
        ("x0", "x1234", half.clone()),
        ("x12", "x34", int(1)),
        ("x13", "x24", int(2)),
        ("x14", "x23", int(1)),
        ("x15", "x2345", int(1)),
        ("x25", "x1345", half.clone()),
        ("x35", "x1245", int(1)),
        ("x45", "x1235", half.clone()),
    ];
    for sign in [1, -1] {
        let g = involution_lift(sign);
        for (src, dst, c) in &table {
            let img = spin_action(&g, &sp(&[(src, int(1))])).unwrap();
            assert!(img.projectively_eq(&sp(&[(dst, c.clone())])), "{src} -> {img:?}");
            assert_eq!(img, sp(&[(dst, c * int(sign))]));
        }
        // the lift squares to a scalar on S+
        let sq = g.mul(&g);
        for i in 0..16 {
            let img = spin_action(&sq, &basis_vec(i)).unwrap();
            assert!(img.projectively_eq(&basis_vec(i)));
        }
    }
}

#[test]
fn lifts_preserve_og() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let lifts = [gm_lift(&int(2), 1), gm_lift(&rat(-3, 7), -1), involution_lift(1)];
    for _ in 0..20 {
        let a = random_skew(&mut rng, 5);
        let s = half_spinor_pfaffian(&Lagrangian::from_skew(&a)).unwrap();
        for g in &lifts {
            assert!(on_og(&spin_action(g, &s).unwrap()));
        }
    }
}
