use std::collections::{BTreeMap, HashMap};

use mukai_core::d5rep::*;
use mukai_core::exactmath::{rat, BigRational};
use num_bigint::BigInt;
use itertools::Itertools;
use num_traits::Zero;

fn d5() -> RootSystemD {
    RootSystemD::new(5).unwrap()
}

#[test]
fn weyl_dimensions() {
    let rs = d5();
    let dim = |l: &[i32]| rs.weyl_dim(&rs.from_dynkin(l)).unwrap();
    assert_eq!(dim(&[1, 0, 1, 0, 1]), BigInt::from(8800));
    assert_eq!(dim(&[3, 0, 0, 1, 0]), BigInt::from(2640));
    assert_eq!(dim(&[5, 0, 0, 0, 0]), BigInt::from(1782));
    assert_eq!(dim(&[0, 0, 0, 0, 1]), BigInt::from(16));
    assert_eq!(dim(&[0, 0, 0, 0, 0]), BigInt::from(1));
}

#[test]
fn casimir_scalars() {
    let rs = d5();
    assert_eq!(rs.casimir_scalar(&Weight::zero(5)).unwrap(), rat(0, 1));
    assert_eq!(rs.casimir_scalar(&rs.from_dynkin(&[5, 0, 0, 0, 0])).unwrap(), rat(65, 1));
    assert_eq!(rs.casimir_scalar(&rs.from_dynkin(&[1, 0, 0, 0, 0])).unwrap(), rat(9, 1));
    assert_eq!(rs.casimir_scalar(&rs.from_dynkin(&[1, 0, 1, 0, 1])).unwrap(), rat(189, 4));
    assert_eq!(rs.casimir_scalar(&rs.from_dynkin(&[3, 0, 0, 1, 0])).unwrap(), rat(189, 4));
}

#[test]
fn multiplicities_sum_to_dimension() {
    for n in 2..=5 {
        let rs = RootSystemD::new(n).unwrap();
        let mut checked = 0;
        for labels in itertools::repeat_n(0..3i32, n).multi_cartesian_product() {
            let lambda = rs.from_dynkin(&labels);
            let d = rs.weyl_dim(&lambda).unwrap();
            if d > BigInt::from(5000) {
                continue;
            }
            let chi = rs.weight_multiplicities(&lambda).unwrap();
            assert_eq!(BigInt::from(character_dim(&chi)), d, "n={n} {labels:?}");
            checked += 1;
        }
        assert!(checked > 3);
    }
}

#[test]
fn half_spin_and_std_characters() {
    let rs = d5();
    let hs = rs.weight_multiplicities(&Weight(vec![1, 1, 1, 1, 1])).unwrap();
    assert_eq!(hs.len(), 16);
    assert!(hs.iter().all(|(w, m)| *m == 1 && w.0.iter().filter(|&&x| x < 0).count() % 2 == 0));
    let std = rs.weight_multiplicities(&Weight::from_eps(&[1, 0, 0, 0, 0])).unwrap();
    assert_eq!(std.len(), 10);
    assert_eq!(character_dim(&std), 10);
}

#[test]
fn decompositions() {
    let rs = d5();
    let l7 = wedge_character(&half_spin_weights(5, true), 7);
    assert_eq!(character_dim(&l7), 11440);
    let d = rs.decompose(&l7).unwrap();
    let dyn_: Vec<(Vec<i64>, u64)> = d.iter().map(|(w, m)| (rs.to_dynkin(w), *m)).collect();
    assert_eq!(dyn_, vec![(vec![3, 0, 0, 1, 0], 1), (vec![1, 0, 1, 0, 1], 1)]);

    let s5 = sym_character(&std_weights(5), 5);
    assert_eq!(character_dim(&s5), 2002);
    let d = rs.decompose(&s5).unwrap();
    let dyn_: Vec<(Vec<i64>, u64)> = d.iter().map(|(w, m)| (rs.to_dynkin(w), *m)).collect();
    assert_eq!(dyn_, vec![(vec![5, 0, 0, 0, 0], 1), (vec![3, 0, 0, 0, 0], 1), (vec![1, 0, 0, 0, 0], 1)]);

    let mut bad = Character::new();
    bad.insert(Weight::from_eps(&[1, 0, 0, 0, 0]), 1);
    assert!(matches!(rs.decompose(&bad), Err(RepError::NotWeylSymmetric(_))));
}

/// Kostant's multiplicity formula with a memoized partition function.
fn kostant_multiplicity(rs: &RootSystemD, lambda: &Weight, mu: &Weight) -> i128 {
    fn partitions(
        roots: &[Vec<i32>],
        fundamentals: &[Weight],
        k: usize,
        v: &Weight,
        memo: &mut HashMap<(usize, Weight), i128>,
    ) -> i128 {
        if v.0.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == roots.len() {
            return 0;
        }
        if let Some(&c) = memo.get(&(k, v.clone())) {
            return c;
        }
        // simple-root coordinates (v, omega_k) must stay nonnegative
        let in_cone = |w: &Weight| fundamentals.iter().all(|f| w.dot4(f) >= 0);
        let mut total = 0;
        let mut cur = v.clone();
        while in_cone(&cur) {
            total += partitions(roots, fundamentals, k + 1, &cur, memo);
            cur = cur.add_root(&roots[k], -1);
        }
        memo.insert((k, v.clone()), total);
        total
    }
    let mut memo = HashMap::new();
    let fundamentals: Vec<Weight> = (0..rs.n)
        .map(|k| {
            let mut l = vec![0; rs.n];
            l[k] = 1;
            rs.from_dynkin(&l)
        })
        .collect();
    let lr = lambda.add(&rs.rho);
    let mr = mu.add(&rs.rho);
    rs.weyl_group()
        .iter()
        .map(|w| {
            let v = w.act(&lr).sub(&mr);
            if v.0.iter().any(|x| x % 2 != 0) {
                return 0;
            }
            w.sign as i128 * partitions(&rs.positive, &fundamentals, 0, &v, &mut memo)
        })
        .sum()
}

#[test]
fn freudenthal_matches_kostant() {
    let rs = d5();
    for labels in [[5, 0, 0, 0, 0], [1, 0, 1, 0, 1], [0, 1, 0, 0, 1]] {
        let lambda = rs.from_dynkin(&labels);
        let dom = rs.dominant_multiplicities(&lambda).unwrap();
        for mu in rs.dominant_weights(&lambda).unwrap() {
            let m = dom.get(&mu).copied().unwrap_or(0) as i128;
            assert_eq!(m, kostant_multiplicity(&rs, &lambda, &mu), "{labels:?} at {mu}");
        }
    }
    // weight zero is not in 5 omega_1 + root lattice
    let five = rs.weight_multiplicities(&rs.from_dynkin(&[5, 0, 0, 0, 0])).unwrap();
    assert_eq!(five.get(&Weight::zero(5)).copied().unwrap_or(0), 0);
    assert_eq!(kostant_multiplicity(&rs, &rs.from_dynkin(&[5, 0, 0, 0, 0]), &Weight::zero(5)), 0);
}

#[test]
fn sym4_counts() {
    let rs = d5();
    let c = invariant_count_sym4(&rs);
    assert_eq!(c.dimension, "714036824189260");
    assert_eq!(c.torus_invariants, "359317176120");
    assert!(c.invariants.parse::<i128>().unwrap() > 0);
}

#[test]
fn sym2_tensor_count() {
    let rs = d5();
    let n = sym2_tensor_invariants(&rs, &rs.from_dynkin(&[1, 0, 1, 0, 1]), &rs.from_dynkin(&[3, 0, 0, 1, 0])).unwrap();
    assert_eq!(n, 89);
    // Sym^2 Std has exactly one invariant
    let std = rs.from_dynkin(&[1, 0, 0, 0, 0]);
    assert_eq!(sym2_tensor_invariants(&rs, &std, &Weight::zero(5)).unwrap(), 1);
}

#[test]
fn module_relations_and_casimir() {
    for n in [2, 3, 5] {
        let rs = RootSystemD::new(n).unwrap();
        let mut specs = vec![
            ModuleSpec::Std,
            ModuleSpec::half_spin(),
            ModuleSpec::HalfSpin { even: false },
            ModuleSpec::sym(ModuleSpec::Std, 2),
            ModuleSpec::lambda(ModuleSpec::half_spin(), 2),
            ModuleSpec::tensor(ModuleSpec::Std, ModuleSpec::half_spin()),
        ];
        if n == 5 {
            specs.push(ModuleSpec::sym(ModuleSpec::Std, 5));
        }
        for spec in specs {
            let m = build_module(&rs, &spec).unwrap();
            check_relations(&rs, &m).unwrap_or_else(|e| panic!("n={n} {spec}: {e}"));
            assert!(casimir_commutes(&rs, &m), "n={n} {spec}");
        }
    }
}

#[test]
fn half_spin_highest_weight() {
    let rs = d5();
    for even in [true, false] {
        let m = build_module(&rs, &ModuleSpec::HalfSpin { even }).unwrap();
        assert_eq!(m.dim(), 16);
        let top = if even { Weight(vec![1, 1, 1, 1, -1]) } else { Weight(vec![1, 1, 1, 1, 1]) };
        let idx = m.weight_space(&top);
        assert_eq!(idx.len(), 1);
        assert!(m.is_highest_weight_vector(&rs, &m.basis_vector(idx[0])));
        let c = casimir_apply(&m, &m.basis_vector(idx[0]));
        assert_eq!(c[idx[0]], rs.casimir_scalar(&top).unwrap());
    }
}

#[test]
fn sym5_highest_weight_eigenvalue() {
    let rs = d5();
    let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::Std, 5)).unwrap();
    let i = m.index_of_label("e1*e1*e1*e1*e1").unwrap();
    let v = m.basis_vector(i);
    assert!(m.is_highest_weight_vector(&rs, &v));
    let cv = casimir_apply(&m, &v);
    let expected: Vec<BigRational> = v.iter().map(|x| x * rat(65, 1)).collect();
    assert_eq!(cv, expected);
}

fn wedge_vector(m: &WeightedModule, names: &[&str]) -> Vec<BigRational> {
    let label = names.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("^");
    m.basis_vector(m.index_of_label(&label).unwrap_or_else(|| panic!("{label}")))
}

#[test]
fn lambda7_highest_weight_vectors() {
    let rs = d5();
    let m = build_module(&rs, &ModuleSpec::lambda(ModuleSpec::half_spin(), 7)).unwrap();
    assert_eq!(m.dim(), 11440);
    let v1 = wedge_vector(&m, &["e12", "e13", "e1234", "e1235", "e1245", "e1345", "e2345"]);
    let v2 = wedge_vector(&m, &["e12", "e13", "e14", "e1234", "e1235", "e1245", "e1345"]);
    for (v, labels) in [(v1, [1, 0, 1, 0, 1]), (v2, [3, 0, 0, 1, 0])] {
        assert!(m.is_highest_weight_vector(&rs, &v));
        let k = rs.casimir_scalar(&rs.from_dynkin(&labels)).unwrap();
        let expected: Vec<BigRational> = v.iter().map(|x| x * &k).collect();
        assert_eq!(casimir_apply(&m, &v), expected);
    }
}

#[test]
fn trivial_module_casimir_is_zero() {
    let rs = RootSystemD::new(3).unwrap();
    let m = build_module(&rs, &ModuleSpec::lambda(ModuleSpec::half_spin(), 4)).unwrap();
    assert_eq!(m.dim(), 1);
    assert!(casimir_apply(&m, &m.basis_vector(0)).iter().all(Zero::is_zero));
}

#[test]
fn invariant_projection_matches_kernel() {
    let cases: Vec<(usize, ModuleSpec)> = vec![
        (2, ModuleSpec::sym(ModuleSpec::Std, 2)),
        (2, ModuleSpec::sym(ModuleSpec::half_spin(), 2)),
        (2, ModuleSpec::sym(ModuleSpec::lambda(ModuleSpec::half_spin(), 1), 2)),
        (2, ModuleSpec::tensor(ModuleSpec::half_spin(), ModuleSpec::half_spin())),
        (2, ModuleSpec::sym(ModuleSpec::Std, 4)),
        (3, ModuleSpec::sym(ModuleSpec::lambda(ModuleSpec::half_spin(), 2), 2)),
        (3, ModuleSpec::sym(ModuleSpec::Std, 3)),
        (3, ModuleSpec::sym(ModuleSpec::Std, 4)),
        (3, ModuleSpec::tensor(ModuleSpec::lambda(ModuleSpec::half_spin(), 2), ModuleSpec::Std)),
        (3, ModuleSpec::tensor(ModuleSpec::half_spin(), ModuleSpec::lambda(ModuleSpec::half_spin(), 3))),
        (3, ModuleSpec::sym(ModuleSpec::tensor(ModuleSpec::half_spin(), ModuleSpec::HalfSpin { even: false }), 2)),
    ];
    for (n, spec) in cases {
        let rs = RootSystemD::new(n).unwrap();
        let m = build_module(&rs, &spec).unwrap();
        assert!(m.dim() <= 500);
        let projected = projected_invariants(&rs, &m).unwrap();
        let kernel = generator_kernel(&m);
        assert_eq!(projected.nrows(), kernel.nrows(), "n={n} {spec}");
        assert!(kernel.row_space_contains(&projected) && projected.row_space_contains(&kernel), "n={n} {spec}");
    }
}

#[test]
fn sym2_std_projection_is_quadratic_form() {
    let rs = d5();
    let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::Std, 2)).unwrap();
    let spectrum = module_spectrum(&rs, &m).unwrap();
    let v: Vec<BigRational> = (0..m.dim()).map(|i| rat((i as i64 * 7) % 5 - 2, 1 + (i as i64 % 3))).collect();
    let p = invariant_project(&rs, &m, &v, &spectrum).unwrap();
    let kernel = generator_kernel(&m);
    assert_eq!(kernel.nrows(), 1);
    let row = mukai_core::exactmath::RatMatrix::from_rows(m.dim(), vec![p.clone()]).unwrap();
    assert!(kernel.row_space_contains(&row));
    // already invariant vectors are fixed
    assert_eq!(invariant_project(&rs, &m, &p, &spectrum).unwrap(), p);
    // an incomplete spectrum is detected
    assert_eq!(invariant_project(&rs, &m, &v, &spectrum[..0]), Err(RepError::SpectrumIncomplete));
}

#[test]
fn small_highest_weight_vector() {
    let rs = RootSystemD::new(3).unwrap();
    let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::lambda(ModuleSpec::half_spin(), 2), 2)).unwrap();
    let mu = Weight::from_eps(&[2, 0, 0]);
    let k = rs.casimir_scalar(&mu).unwrap();
    let v = highest_weight_in_weightspace(&rs, &m, &mu, &k).unwrap();
    assert!(m.is_highest_weight_vector(&rs, &v));
    let cv = casimir_apply(&m, &v);
    assert_eq!(cv, v.iter().map(|x| x * &k).collect::<Vec<_>>());
    // brute force: kernel of the raising operators on the weight space is one-dimensional
    let cols = m.weight_space(&mu);
    let mut stacked = mukai_core::exactmath::RatMatrix::zeros(0, cols.len());
    for i in 0..3 {
        let rows: Vec<usize> = (0..m.dim()).collect();
        stacked = stacked.vstack(&m.simple_raising(&rs, i).to_rat_matrix(&rows, &cols)).unwrap();
    }
    assert_eq!(stacked.kernel_basis().nrows(), 1);
    assert!(matches!(
        highest_weight_in_weightspace(&rs, &m, &mu, &rat(1, 1)),
        Err(RepError::EigenvalueAbsent(_))
    ));
}

#[test]
fn tensor_rank_mismatch() {
    let a = build_module(&RootSystemD::new(2).unwrap(), &ModuleSpec::Std).unwrap();
    let b = build_module(&RootSystemD::new(3).unwrap(), &ModuleSpec::Std).unwrap();
    assert_eq!(tensor_module(&a, &b).unwrap_err(), RepError::InconsistentRank(2, 3));
}

#[test]
fn torus_pairing_dimension() {
    let rs = d5();
    let chi = rs.weight_multiplicities(&rs.from_dynkin(&[5, 0, 0, 0, 0])).unwrap();
    assert_eq!(torus_pairing_dim(&chi), 4722);
    let _: BTreeMap<Weight, i128> = chi;
}
