use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use mukai_core::curves::{
    build_cuspidal, build_nodal, build_ribbon, cusp_printed_quadrics, cusp_span, hyperbolic_form_over_f, mukai_gbasis,
    nodal_span, nodal_span_matrix, printed_mukai_form, proportional, special_fiber_check, verify_ribbon_section,
    verify_tables, Family, TParam,
};
use mukai_core::d5rep::tier::{oracle_items, run_full_tier, run_toy_tier, Checkpoint, TierItem, LAMBDA7_V1, LAMBDA7_V2};
use mukai_core::d5rep::{
    build_module, casimir_apply, casimir_commutes, character_dim, half_spin_weights, invariant_count_sym4,
    sym2_tensor_invariants, torus_pairing_dim, wedge_character, ModuleSpec, RootSystemD,
};
use mukai_core::exactmath::{fmt_rat, int, parse_rat};
use mukai_core::gitstate::{git_certificate, HullPosition};
use mukai_core::polyring::GradedPiece;

#[derive(Parser)]
#[command(name = "mukai7", version, about = "Exact certificates for spinor embeddings of genus-7 curves")]
struct Cli {
    /// Write the certificate to this file instead of standard output.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Heptagonally symmetric 7-cuspidal curve.
    Cusp,
    /// Balanced genus-7 ribbon.
    Ribbon,
    /// Reducible nodal curve C_t.
    Nodal {
        /// Parameter `a/b` meaning [a:b].
        #[arg(long, value_parser = parse_t, allow_hyphen_values = true)]
        t: TParam,
        /// Predict that the section of OG(5,10) is not a curve at this t.
        #[arg(long)]
        expect_mismatch: bool,
    },
    /// Torus state polytope of P_nod(t).
    Git {
        #[arg(long, value_parser = parse_t, allow_hyphen_values = true)]
        t: TParam,
    },
    /// Representation-theoretic checks for Spin(10).
    Rep {
        #[arg(long, value_enum)]
        check: RepCheck,
        /// Rank for `oracle-n`.
        n: Option<usize>,
    },
    /// Invariant constructions.
    Invariant {
        #[arg(long, value_enum)]
        tier: Tier,
        /// Checkpoint directory (required for the full tier).
        #[arg(long, env = "MUKAI7_CHECKPOINT_DIR")]
        checkpoint: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RepCheck {
    Dims,
    Counts,
    Casimir,
    OracleN,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tier {
    Toy,
    Full,
}

fn parse_t(s: &str) -> Result<TParam, String> {
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a = parse_rat(a.trim()).map_err(|e| e.to_string())?;
    let b = parse_rat(b.trim()).map_err(|e| e.to_string())?;
    TParam::new(a, b).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Serialize)]
struct Claim {
    description: String,
    anchor: String,
    verdict: Verdict,
    witness: Value,
}

#[derive(Debug, Serialize)]
struct Certificate {
    command: String,
    inputs: BTreeMap<String, String>,
    claims: Vec<Claim>,
    #[serde(rename = "toolkit-version")]
    toolkit_version: String,
}

fn claim(description: &str, anchor: &str, ok: bool, witness: Value) -> Claim {
    Claim {
        description: description.to_string(),
        anchor: anchor.to_string(),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        witness,
    }
}

/// Runs a check; an error becomes a failed claim carrying the message.
fn check(description: &str, anchor: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Claim {
    match f() {
        Ok((ok, witness)) => claim(description, anchor, ok, witness),
        Err(e) => claim(description, anchor, false, json!({ "error": format!("{e:#}") })),
    }
}

fn to_value(x: &impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn cmd_cusp() -> Vec<Claim> {
    let curve = match build_cuspidal() {
        Ok(c) => c,
        Err(e) => return vec![claim("cuspidal curve is constructed", "cusp.build", false, json!({ "error": e.to_string() }))],
    };
    let mut claims = vec![check("canonical quadrics span the printed quadric list", "cusp.quadrics", || {
        let printed = GradedPiece::from_polys(7, 2, &cusp_printed_quadrics())?;
        Ok((printed.same_span(&curve.quadric_piece()), json!({ "quadrics": curve.quadrics.len() })))
    })];
    claims.push(check(
        "Mukai form is proportional to the printed form and the g-basis is hyperbolic",
        "cusp.mukai-form",
        || {
            let gb = mukai_gbasis(&curve)?;
            let printed = printed_mukai_form(Family::Cuspidal).ok_or_else(|| anyhow!("no printed form"))?;
            let prop = proportional(&gb.mukai_form, &printed);
            let hyper = gb.hyperbolic_sum().is_zero() && proportional(&hyperbolic_form_over_f(&gb), &gb.mukai_form);
            Ok((prop && hyper, json!({ "proportional_to_printed": prop, "hyperbolic_identity": hyper })))
        },
    ));
    claims.extend(span_claims("cusp", cusp_span().map_err(Into::into)));
    claims
}

fn span_claims(
    tag: &str,
    result: Result<(mukai_core::curves::GrassPoint, mukai_core::curves::SpanCertificate)>,
) -> Vec<Claim> {
    let cert = match result {
        Ok((_, c)) => c,
        Err(e) => {
            return vec![claim(
                "spinor images span a 7-dimensional space",
                &format!("{tag}.span"),
                false,
                json!({ "error": format!("{e:#}") }),
            )]
        }
    };
    let points_ok = cert.point_memberships.iter().all(|m| m.on_og && m.in_span && m.frame_consistent != Some(false));
    vec![
        claim(
            "spinor images span a 7-space whose reduced row echelon form equals the printed matrix",
            &format!("{tag}.span-rref"),
            cert.rref_matches_printed == Some(true),
            json!({ "rref": cert.matrix_rref, "frame_points": cert.frame_points, "transformation": cert.transformation }),
        ),
        claim(
            "OG(5,10) quadrics restricted to the span equal the transported canonical quadrics",
            &format!("{tag}.quadric-space"),
            cert.quadric_space_equality,
            json!({
                "restricted_og_rank": cert.restricted_og_rank,
                "canonical_rank": cert.canonical_rank,
                "union_rank": cert.union_rank,
                "method": cert.method,
            }),
        ),
        claim(
            "every marked point maps into OG(5,10) and into the span, consistently with the frame",
            &format!("{tag}.points"),
            points_ok,
            json!(cert.point_memberships.iter().map(|m| json!({
                "label": m.label,
                "on_og": m.on_og,
                "in_span": m.in_span,
                "frame_consistent": m.frame_consistent,
            })).collect::<Vec<_>>()),
        ),
    ]
}

fn cmd_ribbon() -> Vec<Claim> {
    let mut claims = vec![check(
        "Mukai form is proportional to the printed form and the g-basis is hyperbolic",
        "ribbon.mukai-form",
        || {
            let curve = build_ribbon();
            let gb = mukai_gbasis(&curve)?;
            let printed = printed_mukai_form(Family::Ribbon).ok_or_else(|| anyhow!("no printed form"))?;
            let prop = proportional(&gb.mukai_form, &printed);
            let hyper = gb.hyperbolic_sum().is_zero() && proportional(&hyperbolic_form_over_f(&gb), &gb.mukai_form);
            Ok((prop && hyper, json!({ "proportional_to_printed": prop, "hyperbolic_identity": hyper })))
        },
    )];
    match verify_ribbon_section(&int(-1), &int(-1)) {
        Ok(cert) => {
            claims.push(claim(
                "at c2 = c4 = -1 every section quadric is a nonzero multiple of a ribbon quadric",
                "ribbon.section-multiples",
                cert.every_quadric_is_a_multiple,
                json!({ "matches": cert.matches, "section_quadrics": cert.section_quadrics }),
            ));
            claims.push(claim(
                "section quadrics and ribbon quadrics span the same space",
                "ribbon.section-span",
                cert.span_equal,
                json!({
                    "union_rank": cert.union_rank,
                    "printed_list_same_span": cert.printed_list_same_span,
                    "printed_list_same_span_after_reversal": cert.printed_list_same_span_after_reversal,
                }),
            ));
            claims.push(claim(
                "the nine hyperplanes cut out the printed span matrix",
                "ribbon.span-rref",
                cert.rref_matches_printed,
                json!({ "rref": cert.hyperplane_space_rref }),
            ));
        }
        Err(e) => claims.push(claim("ribbon section is computed", "ribbon.section", false, json!({ "error": e.to_string() }))),
    }
    claims
}

fn cmd_nodal(t: &TParam, expect_mismatch: bool) -> Vec<Claim> {
    if expect_mismatch {
        return vec![check(
            "the section of OG(5,10) by P_nod(t) is not a curve (predicted mismatch)",
            "nodal.special-fiber-mismatch",
            || {
                let cert = special_fiber_check(t)?;
                Ok((cert.section_is_not_a_curve, to_value(&cert)?))
            },
        )];
    }
    let mut claims = vec![check("printed g-basis satisfies the hyperbolic identity", "nodal.gbasis", || {
        let curve = build_nodal(t)?;
        let gb = mukai_gbasis(&curve)?;
        let ok = gb.hyperbolic_sum().is_zero() && proportional(&hyperbolic_form_over_f(&gb), &gb.mukai_form);
        Ok((ok, json!({ "parameter": t.label() })))
    })];
    claims.extend(span_claims("nodal", nodal_span(t).map_err(Into::into)));
    claims.push(check("component ideals and node spinors vanish where tabulated", "nodal.tables", || {
        let cert = verify_tables(t)?;
        let ok = cert.all_pass();
        Ok((ok, json!({ "components": cert.components.len(), "nodes": cert.nodes.len(), "failures": cert.failures })))
    }));
    claims
}

/// Reference state sizes and destabilizing directions for named parameters.
fn git_reference(t: &TParam) -> Option<(usize, usize, Option<[i64; 5]>)> {
    let same = |a: i64, b: i64| &t.t0 * int(b) == &t.t1 * int(a);
    if same(2, 1) {
        Some((21, 20, None))
    } else if same(0, 1) {
        Some((16, 16, None))
    } else if same(1, 1) {
        Some((9, 8, Some([-2, 1, 1, 1, 1])))
    } else if same(1, 0) {
        Some((12, 12, Some([1, 0, 1, 0, 1])))
    } else {
        None
    }
}

fn cmd_git(t: &TParam) -> Vec<Claim> {
    let cert = match nodal_span_matrix(t).map_err(anyhow::Error::from).and_then(|m| Ok(git_certificate(&t.label(), &m)?)) {
        Ok(c) => c,
        Err(e) => return vec![claim("torus state is computed", "git.state", false, json!({ "error": format!("{e:#}") }))],
    };
    let special = t.is_one() || t.is_infinity();
    let outside = cert.classification == HullPosition::Outside;
    let mut claims = vec![claim(
        "the origin is outside the state polytope exactly when t is 1 or infinity",
        "git.nodal.classification",
        outside == special,
        json!({ "classification": cert.classification, "proximum": cert.proximum.iter().map(fmt_rat).collect::<Vec<_>>() }),
    )];
    if let Some((size, vertices, direction)) = git_reference(t) {
        let sizes_ok = cert.state_points.len() == size && cert.vertex_count == vertices;
        claims.push(claim(
            "state size and vertex count match the reference values",
            "git.nodal.state-size",
            sizes_ok,
            json!({ "state_points": cert.state_points.len(), "vertices": cert.vertex_count, "expected": [size, vertices] }),
        ));
        if let Some(d) = direction {
            let want: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            let neg: Vec<String> = d.iter().map(|x| (-x).to_string()).collect();
            let ok = cert.direction.as_ref().is_some_and(|v| *v == want || *v == neg);
            claims.push(claim(
                "worst one-parameter subgroup is the reference direction up to sign",
                "git.nodal.direction",
                ok,
                json!({ "direction": cert.direction, "expected_up_to_sign": want }),
            ));
        }
    }
    claims.push(claim(
        "state polytope witness",
        "git.nodal.state",
        true,
        json!({ "points": cert.state_points, "multiplicities": cert.multiplicities }),
    ));
    claims
}

fn cmd_rep(check_kind: RepCheck, n: Option<usize>) -> Result<Vec<Claim>> {
    let rs = RootSystemD::new(5)?;
    let v1 = rs.from_dynkin(&[1, 0, 1, 0, 1]);
    let v2 = rs.from_dynkin(&[3, 0, 0, 1, 0]);
    let five = rs.from_dynkin(&[5, 0, 0, 0, 0]);
    Ok(match check_kind {
        RepCheck::Dims => {
            let mut claims = Vec::new();
            for (name, w, expected) in [("V(1,0,1,0,1)", &v1, 8800), ("V(3,0,0,1,0)", &v2, 2640), ("V(5,0,0,0,0)", &five, 1782)] {
                claims.push(check(&format!("dim {name} = {expected}"), "rep.dims.weyl", || {
                    let d = rs.weyl_dim(w)?;
                    Ok((d == expected.into(), json!({ "dimension": d.to_string() })))
                }));
            }
            let spin = half_spin_weights(5, true);
            claims.push(claim("dim S+ = 16", "rep.dims.half-spin", spin.len() == 16, json!({ "dimension": spin.len() })));
            claims.push(check("Lambda^7 S+ has dimension 11440 and splits as V(1,0,1,0,1) + V(3,0,0,1,0)", "rep.dims.lambda7", || {
                let chi = wedge_character(&spin, 7);
                let parts = rs.decompose(&chi)?;
                let labels: Vec<(Vec<i64>, u64)> = parts.iter().map(|(w, m)| (rs.to_dynkin(w), *m)).collect();
                let ok = character_dim(&chi) == 11440 && labels == vec![(vec![3, 0, 0, 1, 0], 1), (vec![1, 0, 1, 0, 1], 1)];
                Ok((ok, json!({ "dimension": character_dim(&chi).to_string(), "constituents": labels })))
            }));
            claims
        }
        RepCheck::Counts => {
            let counts = invariant_count_sym4(&rs);
            vec![
                claim(
                    "dim Sym^4(Lambda^7 S+) = 714036824189260",
                    "rep.counts.sym4-dimension",
                    counts.dimension == "714036824189260",
                    to_value(&counts)?,
                ),
                claim(
                    "torus invariants of Sym^4(Lambda^7 S+) number 359317176120",
                    "rep.counts.sym4-torus",
                    counts.torus_invariants == "359317176120",
                    json!({ "torus_invariants": counts.torus_invariants }),
                ),
                claim(
                    "Sym^4(Lambda^7 S+) has nonzero Spin(10) invariants",
                    "rep.counts.sym4-invariants",
                    counts.invariants.parse::<i128>().is_ok_and(|k| k > 0),
                    json!({ "invariants": counts.invariants }),
                ),
                check("Sym^2 V1 (x) Sym^2 V2 has 89 invariants", "rep.counts.sym2-pair", || {
                    let k = sym2_tensor_invariants(&rs, &v1, &v2)?;
                    Ok((k == 89, json!({ "invariants": k.to_string() })))
                }),
                check("torus-invariant pairing space of V(5w1) has dimension 4722", "rep.counts.pairing", || {
                    let k = torus_pairing_dim(&rs.weight_multiplicities(&five)?);
                    Ok((k == 4722, json!({ "dimension": k.to_string() })))
                }),
            ]
        }
        RepCheck::Casimir => {
            let mut claims = vec![check("Casimir scalar of V(5w1) is 65", "rep.casimir.scalar", || {
                let c = rs.casimir_scalar(&five)?;
                Ok((c == int(65), json!({ "scalar": fmt_rat(&c) })))
            })];
            claims.push(check(
                "highest-weight vector of Sym^5 Std has eigenvalue 65 and the Casimir commutes with all generators",
                "rep.casimir.sym5",
                || {
                    let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::Std, 5))?;
                    let i = m.index_of_label("e1*e1*e1*e1*e1").ok_or_else(|| anyhow!("missing monomial"))?;
                    let v = m.basis_vector(i);
                    let eigen = casimir_apply(&m, &v) == v.iter().map(|x| x * int(65)).collect::<Vec<_>>();
                    let commutes = casimir_commutes(&rs, &m);
                    Ok((eigen && commutes, json!({ "eigenvector": eigen, "commutes": commutes, "dimension": m.dim() })))
                },
            ));
            claims.push(check(
                "highest-weight vectors of Lambda^7 S+ are Casimir eigenvectors with their scalar",
                "rep.casimir.lambda7",
                || {
                    let m = build_module(&rs, &ModuleSpec::lambda(ModuleSpec::half_spin(), 7))?;
                    let mut witness = Vec::new();
                    let mut ok = true;
                    for (label, lambda) in [(LAMBDA7_V1, &v1), (LAMBDA7_V2, &v2)] {
                        let i = m.index_of_label(label).ok_or_else(|| anyhow!("missing {label}"))?;
                        let v = m.basis_vector(i);
                        let k = rs.casimir_scalar(lambda)?;
                        let good = m.is_highest_weight_vector(&rs, &v)
                            && casimir_apply(&m, &v) == v.iter().map(|x| x * &k).collect::<Vec<_>>();
                        ok &= good;
                        witness.push(json!({ "vector": label, "highest_weight": rs.to_dynkin(lambda), "scalar": fmt_rat(&k), "verified": good }));
                    }
                    Ok((ok, json!(witness)))
                },
            ));
            claims
        }
        RepCheck::OracleN => {
            let n = n.ok_or_else(|| anyhow!("oracle-n needs a rank, e.g. `rep --check oracle-n 3`"))?;
            tier_claims("rep.oracle", &oracle_items(n)?)
        }
    })
}

fn tier_claims(prefix: &str, items: &[TierItem]) -> Vec<Claim> {
    items
        .iter()
        .enumerate()
        .map(|(i, it)| {
            claim(
                &it.name,
                &format!("{prefix}.{i}"),
                it.passed(),
                json!({ "expected": it.expected, "observed": it.observed, "status": it.status }),
            )
        })
        .collect()
}

fn cmd_invariant(tier: Tier, checkpoint: Option<&PathBuf>) -> Result<Vec<Claim>> {
    Ok(match tier {
        Tier::Toy => tier_claims("invariant.toy", &run_toy_tier()?.items),
        Tier::Full => {
            let dir = checkpoint.context("the full tier needs --checkpoint DIR (or MUKAI7_CHECKPOINT_DIR)")?;
            tier_claims("invariant.full", &run_full_tier(&Checkpoint::new(dir)?)?.items)
        }
    })
}

fn run(cli: &Cli) -> Result<Certificate> {
    let mut inputs = BTreeMap::new();
    let (command, claims) = match &cli.command {
        Command::Cusp => ("cusp", cmd_cusp()),
        Command::Ribbon => ("ribbon", cmd_ribbon()),
        Command::Nodal { t, expect_mismatch } => {
            inputs.insert("t".to_string(), t.label());
            inputs.insert("expect_mismatch".to_string(), expect_mismatch.to_string());
            ("nodal", cmd_nodal(t, *expect_mismatch))
        }
        Command::Git { t } => {
            inputs.insert("t".to_string(), t.label());
            ("git", cmd_git(t))
        }
        Command::Rep { check, n } => {
            let name = check.to_possible_value().expect("named").get_name().to_string();
            inputs.insert("check".to_string(), name);
            if let Some(n) = n {
                inputs.insert("n".to_string(), n.to_string());
            }
            ("rep", cmd_rep(*check, *n)?)
        }
        Command::Invariant { tier, checkpoint } => {
            let name = tier.to_possible_value().expect("named").get_name().to_string();
            inputs.insert("tier".to_string(), name);
            ("invariant", cmd_invariant(*tier, checkpoint.as_ref())?)
        }
    };
    Ok(Certificate {
        command: command.to_string(),
        inputs,
        claims,
        toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("mukai7: {e}");
            return ExitCode::from(2);
        }
    }
    let cert = match run(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("mukai7: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = serde_json::to_string_pretty(&cert).expect("certificate serializes") + "\n";
    match &cli.json {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("mukai7: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    let passed = cert.claims.iter().filter(|c| c.verdict == Verdict::Pass).count();
    eprintln!("{}: {passed}/{} claims pass", cert.command, cert.claims.len());
    if passed == cert.claims.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
