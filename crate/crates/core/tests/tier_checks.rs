use mukai_core::d5rep::tier::*;
use mukai_core::d5rep::{build_module, ModuleSpec, RootSystemD};

#[test]
fn toy_tier_passes() {
    let r = run_toy_tier().unwrap();
    for it in &r.items {
        assert!(it.passed(), "{it:?}");
    }
}

#[test]
fn small_rank_lowering_basis_matches_weyl_dimension() {
    for n in 3..=4 {
        let rs = RootSystemD::new(n).unwrap();
        let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::Std, 3)).unwrap();
        let top = m.index_of_label("e1*e1*e1").unwrap();
        let b = lowering_basis(&rs, &m, top);
        let mut labels = vec![0; n];
        labels[0] = 3;
        let expected = rs.weyl_dim(&rs.from_dynkin(&labels)).unwrap();
        assert_eq!(num_bigint::BigInt::from(b.words.len()), expected);
        let again = vectors_from_words(&rs, &m, top, &b.words);
        assert_eq!(again.vectors, b.vectors);
    }
}

#[test]
fn full_tier_runs_and_resumes() {
    let dir = std::env::temp_dir().join(format!("mukai-tier-{}", std::process::id()));
    let ck = Checkpoint::new(&dir).unwrap();
    let t = std::time::Instant::now();
    let r = run_full_tier(&ck).unwrap();
    eprintln!("full tier {:?}", t.elapsed());
    for it in &r.items {
        eprintln!("{it:?}");
    }
    let again = run_full_tier(&ck).unwrap();
    assert_eq!(again, r);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn sym2_index(m2: &mukai_core::d5rep::WeightedModule, base: &mukai_core::d5rep::WeightedModule, a: u32, b: u32) -> usize {
    let label = format!("{}*{}", base.labels[a as usize], base.labels[b as usize]);
    m2.index_of_label(&label).unwrap()
}

#[test]
fn quadratic_forms_match_symmetric_square_module() {
    use mukai_core::d5rep::quad::*;
    use mukai_core::exactmath::{int, BigRational};
    for (n, spec) in [(3, ModuleSpec::lambda(ModuleSpec::half_spin(), 2)), (3, ModuleSpec::Std), (2, ModuleSpec::half_spin())] {
        let rs = RootSystemD::new(n).unwrap();
        let base = build_module(&rs, &spec).unwrap();
        let m2 = build_module(&rs, &ModuleSpec::sym(spec.clone(), 2)).unwrap();
        let c4 = base.casimir4();
        let c4_2 = m2.casimir4();
        let d = base.dim() as u32;
        let mut q = Quad::new();
        for a in 0..d {
            for b in a..d {
                if (a * 7 + b * 3) % 5 == 0 {
                    q.insert((a, b), int(((a + 2 * b) % 7) as i64 - 3));
                }
            }
        }
        q.retain(|_, x| *x != BigRational::from_integer(0.into()));
        let to_dense = |q: &Quad| {
            let mut v = vec![int(0); m2.dim()];
            for ((a, b), x) in q {
                v[sym2_index(&m2, &base, *a, *b)] += x;
            }
            v
        };
        assert_eq!(to_dense(&quad_casimir4(&base, &c4, &q)), c4_2.apply(&to_dense(&q)), "n={n} {spec}");
        for (g, g2) in base.lowering.iter().zip(&m2.lowering) {
            assert_eq!(to_dense(&quad_act(g, &q)), g2.apply(&to_dense(&q)));
            let iq = quad_primitive(&q).unwrap();
            let acted = iq.act(g).unwrap();
            let expect = quad_act(g, &iq.to_quad());
            assert_eq!(acted.to_quad(), expect);
        }
    }
}
