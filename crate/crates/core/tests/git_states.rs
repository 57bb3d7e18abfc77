use mukai_core::curves::{nodal_span_matrix, TParam};
use mukai_core::exactmath::{int, BigRational, RatMatrix};
use mukai_core::gitstate::*;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::OnceLock;

fn cached_states() -> &'static [StatePolytope; 3] {
    static STATES: OnceLock<[StatePolytope; 3]> = OnceLock::new();
    STATES.get_or_init(|| [state_at(2, 1), state_at(1, 1), state_at(1, 0)])
}

fn state_at(a: i64, b: i64) -> StatePolytope {
    let m = nodal_span_matrix(&TParam::from_ints(a, b).unwrap()).unwrap();
    pluecker_state(&m).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn same_up_to_sign(d: &[BigInt], e: &[i64]) -> bool {
    let e = ints(e);
    let neg: Vec<BigInt> = e.iter().map(|x| -x).collect();
    d == e.as_slice() || d == neg.as_slice()
}

#[test]
fn generic_nodal_state_is_interior() {
    let s = state_at(2, 1);
    assert_eq!(s.len(), 21);
    assert_eq!(vertex_count(&s), 20);
    assert_eq!(hull_classify(&s).unwrap(), HullPosition::Interior);
    assert_eq!(worst_one_ps(&s).unwrap_err(), GitError::OriginInHull);
}

#[test]
fn zero_parameter_state_is_interior() {
    let s = state_at(0, 1);
    assert_eq!(s.len(), 16);
    assert_eq!(vertex_count(&s), 16);
    assert_eq!(hull_classify(&s).unwrap(), HullPosition::Interior);
}

#[test]
fn state_at_one_is_unstable() {
    let s = state_at(1, 1);
    assert_eq!(s.len(), 9);
    assert_eq!(vertex_count(&s), 8);
    assert_eq!(hull_classify(&s).unwrap(), HullPosition::Outside);
    let (d, mn) = worst_one_ps(&s).unwrap();
    assert!(same_up_to_sign(&d, &[-2, 1, 1, 1, 1]), "{d:?}");
    for (p, _) in &mn.support {
        assert!(s.multiplicities.contains_key(p));
    }
}

#[test]
fn state_at_infinity_is_unstable() {
    let s = state_at(1, 0);
    assert_eq!(s.len(), 12);
    assert_eq!(vertex_count(&s), 12);
    assert_eq!(hull_classify(&s).unwrap(), HullPosition::Outside);
    let (d, _) = worst_one_ps(&s).unwrap();
    assert!(same_up_to_sign(&d, &[1, 0, 1, 0, 1]), "{d:?}");
}

#[test]
fn generic_parameters_share_a_state() {
    let a = state_at(2, 1).points();
    assert_eq!(a, state_at(3, 1).points());
    assert_eq!(a, state_at(5, 2).points());
}

#[test]
fn rank_deficient_matrix_is_rejected() {
    let m = RatMatrix::zeros(7, 16);
    assert_eq!(pluecker_state(&m).unwrap_err(), GitError::RankDeficient(0));
}

#[test]
fn row_scaling_keeps_state() {
    let m = nodal_span_matrix(&TParam::from_ints(1, 1).unwrap()).unwrap();
    let mut scaled = m.clone();
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            scaled.set(r, c, m.get(r, c) * int(r as i64 + 2));
        }
    }
    assert_eq!(pluecker_state(&m).unwrap(), pluecker_state(&scaled).unwrap());
}

#[test]
fn certificate_serializes() {
    let m = nodal_span_matrix(&TParam::from_ints(1, 0).unwrap()).unwrap();
    let c = git_certificate("nodal [1:0]", &m).unwrap();
    let json = serde_json::to_string(&c).unwrap();
    let back: GitCertificate = serde_json::from_str(&json).unwrap();
    assert_eq!(back, c);
    assert_eq!(c.classification, HullPosition::Outside);
}

/// Signed permutation with an even number of sign changes.
fn weyl_act(perm: &[usize], signs: &[bool], p: &WeightVec) -> WeightVec {
    WeightVec(
        (0..5)
            .map(|i| {
                let x = p.0[perm[i]].clone();
                if signs[i] {
                    -x
                } else {
                    x
                }
            })
            .collect(),
    )
}

fn weyl_element() -> impl Strategy<Value = (Vec<usize>, Vec<bool>)> {
    (Just((0..5).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), 4)).prop_map(
        |(perm, mut signs)| {
            let odd = signs.iter().filter(|s| **s).count() % 2 == 1;
            signs.push(odd);
            (perm, signs)
        },
    )
}

fn small_point() -> impl Strategy<Value = WeightVec> {
    prop::collection::vec(-3i64..=3, 5).prop_map(|v| WeightVec::from_ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weyl_invariance((perm, signs) in weyl_element(), which in 0usize..3) {
        let s = cached_states()[which].clone();
        let moved = StatePolytope::from_points(s.points().iter().map(|p| weyl_act(&perm, &signs, p)));
        prop_assert_eq!(hull_classify(&s).unwrap(), hull_classify(&moved).unwrap());
        prop_assert_eq!(vertex_count(&s), vertex_count(&moved));
        let a = min_norm_point(&s.points()).unwrap().point;
        let b = min_norm_point(&moved.points()).unwrap().point;
        prop_assert_eq!(a.dot(&a), b.dot(&b));
        prop_assert_eq!(weyl_act(&perm, &signs, &a), b);
    }

    #[test]
    fn min_norm_variational_inequality(pts in prop::collection::vec(small_point(), 1..12)) {
        let mn = min_norm_point(&pts).unwrap();
        let q = &mn.point;
        for s in &pts {
            prop_assert!(q.dot(&s.sub(q)) >= BigRational::zero());
        }
        prop_assert!(mn.support.len() <= 6);
        let total: BigRational = mn.support.iter().map(|(_, l)| l.clone()).sum();
        prop_assert_eq!(total, int(1));
    }

    #[test]
    fn point_order_irrelevant(mut pts in prop::collection::vec(small_point(), 1..10), seed in any::<u64>()) {
        let s1 = StatePolytope::from_points(pts.clone());
        let k = (seed as usize) % pts.len();
        pts.rotate_left(k);
        pts.reverse();
        let s2 = StatePolytope::from_points(pts.clone());
        prop_assert_eq!(hull_classify(&s1).unwrap(), hull_classify(&s2).unwrap());
        prop_assert_eq!(vertex_count(&s1), vertex_count(&s2));
        prop_assert_eq!(min_norm_point(&pts).unwrap().point, min_norm_point(&s1.points()).unwrap().point);
    }
}
