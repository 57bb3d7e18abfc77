//! Acceptance suite: one PASS/FAIL line per criterion. Criteria 1 to 9 must
//! pass; criterion 10 is the optional full invariant tier, always run and
//! reported but not required.

use std::time::{Duration, Instant};

use mukai_core::curves::*;
use mukai_core::d5rep::tier::{run_full_tier, Checkpoint};
use mukai_core::d5rep::*;
use mukai_core::exactmath::{int, rat, BigRational, RatMatrix};
use mukai_core::gitstate::{git_certificate, HullPosition};
use mukai_core::polyring::{sym2_kernel, GradedPiece};
use mukai_core::spinor::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of one criterion: verdict plus a short witness.
type Outcome = Result<(bool, String), String>;

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn generic_ts() -> Vec<TParam> {
    [(2, 1), (3, 1), (0, 1)].iter().map(|&(a, b)| TParam::from_ints(a, b).unwrap()).collect()
}

fn mukai_recovery() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let budget = Duration::from_secs(10);
    for (name, curve, printed) in [
        ("cusp", build_cuspidal().map_err(e)?, printed_mukai_form(Family::Cuspidal)),
        ("ribbon", build_ribbon(), printed_mukai_form(Family::Ribbon)),
        ("nodal[2:1]", build_nodal(&TParam::from_ints(2, 1).map_err(e)?).map_err(e)?, None),
    ] {
        let start = Instant::now();
        let f_polys = if name == "cusp" { cusp_printed_quadrics() } else { curve.quadrics.clone() };
        let kernel = sym2_kernel(&GradedPiece::from_polys(7, 2, &f_polys).map_err(e)?).map_err(e)?;
        let reference = match printed {
            Some(p) => p,
            None => hyperbolic_form_over_f(&mukai_gbasis(&curve).map_err(e)?),
        };
        let good = kernel.len() == 1 && proportional(&kernel[0], &reference) && start.elapsed() < budget;
        ok &= good;
        notes.push(format!("{name}: kernel dim {} ({:.1}s)", kernel.len(), start.elapsed().as_secs_f64()));
    }
    Ok((ok, notes.join(", ")))
}

fn hyperbolic_identity() -> Outcome {
    let mut curves = vec![build_cuspidal().map_err(e)?, build_ribbon()];
    for t in generic_ts() {
        curves.push(build_nodal(&t).map_err(e)?);
    }
    let ok = curves.iter().map(mukai_gbasis).all(|gb| gb.is_ok_and(|gb| gb.hyperbolic_sum().is_zero()));
    Ok((ok, format!("{} g-bases", curves.len())))
}

fn matrix_reproduction() -> Outcome {
    let (_, cusp) = cusp_span().map_err(e)?;
    let rib = verify_ribbon_section(&int(-1), &int(-1)).map_err(e)?;
    let mut ok = cusp.rref_matches_printed == Some(true) && rib.rref_matches_printed;
    for t in generic_ts() {
        let (_, cert) = nodal_span(&t).map_err(e)?;
        ok &= cert.rref_matches_printed == Some(true);
    }
    Ok((ok, "cusp, ribbon, nodal at [2:1], [3:1], [0:1]".into()))
}

fn intersection_certificates() -> Outcome {
    let mut certs = vec![cusp_span().map_err(e)?.1];
    for t in generic_ts() {
        certs.push(nodal_span(&t).map_err(e)?.1);
    }
    let spans_ok = certs.iter().all(|c| {
        c.quadric_space_equality && (c.restricted_og_rank, c.canonical_rank, c.union_rank) == (10, 10, 10)
    });
    let rib = verify_ribbon_section(&int(-1), &int(-1)).map_err(e)?;
    let ok = spans_ok && rib.every_quadric_is_a_multiple && rib.span_equal;
    Ok((ok, format!("{} span certificates, {} ribbon multiples", certs.len(), rib.matches.len())))
}

fn table_evaluations() -> Outcome {
    let mut ok = true;
    let mut nodes = Vec::new();
    for (a, b) in [(2, 1), (3, 1)] {
        let cert = verify_tables(&TParam::from_ints(a, b).map_err(e)?).map_err(e)?;
        ok &= cert.all_pass() && cert.nodes.len() == 17;
        nodes.push(cert.nodes.len());
    }
    Ok((ok, format!("nodes checked {nodes:?}")))
}

fn git_states() -> Outcome {
    let cases: [((i64, i64), usize, usize, HullPosition, Option<[i64; 5]>); 4] = [
        ((2, 1), 21, 20, HullPosition::Interior, None),
        ((0, 1), 16, 16, HullPosition::Interior, None),
        ((1, 1), 9, 8, HullPosition::Outside, Some([-2, 1, 1, 1, 1])),
        ((1, 0), 12, 12, HullPosition::Outside, Some([1, 0, 1, 0, 1])),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for ((a, b), size, vertices, position, direction) in cases {
        let t = TParam::from_ints(a, b).map_err(e)?;
        let cert = git_certificate(&t.label(), &nodal_span_matrix(&t).map_err(e)?).map_err(e)?;
        let dir_ok = match direction {
            None => cert.direction.is_none(),
            Some(d) => {
                let want: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                let neg: Vec<String> = d.iter().map(|x| (-x).to_string()).collect();
                cert.direction.as_ref().is_some_and(|v| *v == want || *v == neg)
            }
        };
        ok &= cert.state_points.len() == size && cert.vertex_count == vertices && cert.classification == position && dir_ok;
        notes.push(format!("{}: {}/{}", t.label(), cert.state_points.len(), cert.vertex_count));
    }
    Ok((ok, notes.join(", ")))
}

fn representation_facts() -> Outcome {
    let rs = RootSystemD::new(5).map_err(e)?;
    let w = |d: &[i32]| rs.from_dynkin(d);
    let dims: Vec<String> = [[0, 0, 0, 0, 1], [1, 0, 1, 0, 1], [3, 0, 0, 1, 0], [5, 0, 0, 0, 0]]
        .iter()
        .map(|d| rs.weyl_dim(&w(d)).map(|x| x.to_string()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    let dims_ok = dims == ["16", "8800", "2640", "1782"];
    let dynkin = |parts: Vec<(Weight, u64)>| -> Vec<(Vec<i64>, u64)> {
        let mut v: Vec<_> = parts.iter().map(|(w, m)| (rs.to_dynkin(w), *m)).collect();
        v.sort();
        v
    };
    let lambda7 = dynkin(rs.decompose(&wedge_character(&half_spin_weights(5, true), 7)).map_err(e)?);
    let sym5 = dynkin(rs.decompose(&sym_character(&std_weights(5), 5)).map_err(e)?);
    let decomp_ok = lambda7 == vec![(vec![1, 0, 1, 0, 1], 1), (vec![3, 0, 0, 1, 0], 1)]
        && sym5 == vec![(vec![1, 0, 0, 0, 0], 1), (vec![3, 0, 0, 0, 0], 1), (vec![5, 0, 0, 0, 0], 1)];
    let casimir_ok = rs.casimir_scalar(&w(&[5, 0, 0, 0, 0])).map_err(e)? == int(65);
    let counts = invariant_count_sym4(&rs);
    let pair = sym2_tensor_invariants(&rs, &w(&[1, 0, 1, 0, 1]), &w(&[3, 0, 0, 1, 0])).map_err(e)?;
    let counts_ok =
        counts.torus_invariants == "359317176120" && counts.dimension == "714036824189260" && pair == 89;
    Ok((
        dims_ok && decomp_ok && casimir_ok && counts_ok,
        format!("dims {dims:?}, torus invariants {}, pair invariants {pair}", counts.torus_invariants),
    ))
}

fn basis_vec(i: usize) -> SpinorPlus {
    let mut v = vec![BigRational::zero(); 16];
    v[i] = BigRational::one();
    SpinorPlus(v)
}

fn sp(label: &str, c: BigRational) -> SpinorPlus {
    basis_vec(coordinate_index(label).expect("known label")).scale_by(&c)
}

fn spin_lift_conformance() -> Outcome {
    let exps = [-5, 2, 1, 0, -1, 0, -1, -2, -2, -3, -4, 5, 4, 3, 2, 1];
    let t = int(3);
    let g = gm_lift(&t, 1);
    let mut ok = true;
    for (i, &k) in exps.iter().enumerate() {
        let scale: BigRational =
            if k >= 0 { num_traits::pow(t.clone(), k as usize) } else { num_traits::pow(t.recip(), (-k) as usize) };
        ok &= spin_action(&g, &basis_vec(i)).map_err(e)? == basis_vec(i).scale_by(&scale);
    }
    let half = rat(1, 2);
    let table = [
        ("x0", "x1234", half.clone()),
        ("x12", "x34", int(1)),
        ("x13", "x24", int(2)),
        ("x14", "x23", int(1)),
        ("x15", "x2345", int(1)),
        ("x25", "x1345", half.clone()),
        ("x35", "x1245", int(1)),
        ("x45", "x1235", half),
    ];
    let inv = involution_lift(1);
    for (src, dst, c) in table {
        ok &= spin_action(&inv, &sp(src, int(1))).map_err(e)? == sp(dst, c);
    }
    Ok((ok, "16 exponents, 8 involution entries".into()))
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

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut ok = true;
    for n in [2, 4, 6] {
        for _ in 0..10 {
            let a = random_skew(&mut rng, n);
            let pf = a.pfaffian().map_err(e)?;
            ok &= &pf * &pf == a.det().map_err(e)?;
        }
    }
    for _ in 0..50 {
        let u = Lagrangian::from_skew(&random_skew(&mut rng, 5));
        let p = half_spinor_pfaffian(&u).map_err(e)?;
        let k = half_spinor_kernel(&u).map_err(e)?;
        ok &= k.as_plus().is_some_and(|k| p.projectively_eq(&k)) && on_og(&p);
    }
    let d5 = RootSystemD::new(5).map_err(e)?;
    let mut built = 0;
    for spec in [
        ModuleSpec::Std,
        ModuleSpec::half_spin(),
        ModuleSpec::lambda(ModuleSpec::Std, 2),
        ModuleSpec::sym(ModuleSpec::Std, 2),
        ModuleSpec::sym(ModuleSpec::half_spin(), 2),
        ModuleSpec::sym(ModuleSpec::Std, 3),
        ModuleSpec::lambda(ModuleSpec::half_spin(), 3),
        ModuleSpec::sym(ModuleSpec::Std, 5),
    ] {
        let m = build_module(&d5, &spec).map_err(e)?;
        ok &= m.dim() <= 2002 && casimir_commutes(&d5, &m);
        built += 1;
    }
    let small = [
        (2, ModuleSpec::sym(ModuleSpec::Std, 2)),
        (2, ModuleSpec::tensor(ModuleSpec::half_spin(), ModuleSpec::half_spin())),
        (3, ModuleSpec::sym(ModuleSpec::lambda(ModuleSpec::half_spin(), 2), 2)),
        (3, ModuleSpec::sym(ModuleSpec::Std, 4)),
    ];
    for (n, spec) in small {
        let rs = RootSystemD::new(n).map_err(e)?;
        let m = build_module(&rs, &spec).map_err(e)?;
        let projected = projected_invariants(&rs, &m).map_err(e)?;
        let kernel = generator_kernel(&m);
        ok &= m.dim() <= 500
            && projected.nrows() == kernel.nrows()
            && kernel.row_space_contains(&projected)
            && projected.row_space_contains(&kernel);
    }
    Ok((ok, format!("30 Pfaffians, 50 Lagrangians, {built} Casimir modules, 4 invariant oracles")))
}

fn optional_full_tier() -> Outcome {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance-full-tier");
    let _ = std::fs::remove_dir_all(&dir);
    let report = run_full_tier(&Checkpoint::new(&dir).map_err(e)?).map_err(e)?;
    for item in &report.items {
        println!(
            "    {} {}: expected {}, observed {}",
            if item.passed() { "pass" } else { "fail" },
            item.name,
            item.expected,
            item.observed.as_deref().unwrap_or("-")
        );
    }
    let passed = report.items.iter().filter(|i| i.passed()).count();
    Ok((report.all_pass(), format!("{passed}/{} items", report.items.len())))
}

#[test]
fn acceptance() {
    let criteria: [(u8, &str, fn() -> Outcome, u64); 10] = [
        (1, "Mukai quadric recovery", mukai_recovery, 30),
        (2, "hyperbolic identity", hyperbolic_identity, 5),
        (3, "matrix reproduction", matrix_reproduction, 60),
        (4, "intersection certificates", intersection_certificates, 120),
        (5, "table evaluations", table_evaluations, 60),
        (6, "GIT states", git_states, 300),
        (7, "representation facts", representation_facts, 1800),
        (8, "spin-lift conformance", spin_lift_conformance, 5),
        (9, "property suites", property_suites, 600),
        (10, "optional full invariant tier", optional_full_tier, 7200),
    ];
    let mut required_failures = Vec::new();
    for (n, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (ok, witness) = match outcome {
            Ok((ok, w)) => (ok && secs < budget as f64, w),
            Err(err) => (false, format!("error: {err}")),
        };
        let tag = if n == 10 { " (optional)" } else { "" };
        println!(
            "{} criterion {n}{tag}: {name} [{witness}] ({secs:.1}s, budget {budget}s)",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok && n != 10 {
            required_failures.push(n);
        }
    }
    assert!(required_failures.is_empty(), "required criteria failed: {required_failures:?}");
}
