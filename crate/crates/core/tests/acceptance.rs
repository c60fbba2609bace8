//! Acceptance gate: ten numbered criteria, one test and one printed
//! pass/fail line each. Run with `cargo test --test acceptance -- --nocapture`
//! to see every line.

use clifford_cpt::automorphism_solver::{derive_automorphism_set, verify_intertwining};
use clifford_cpt::blade_algebra::{blade_mul, AlgebraSignature, Sign, SignedBlade};
use clifford_cpt::cli_reporting::{diff_tables, parse_reference_csv};
use clifford_cpt::cpt_groups::{
    build_dt_set, build_ext_set, build_g14, cayley_table_signed, compute_signature,
    salingaros_check, signed_closure,
};
use clifford_cpt::group_engine::{find_isomorphism, FiniteGroup};
use clifford_cpt::matrix_rep::{blade_to_matrix, build_gamma_basis, verify_clifford_relations};

fn report(number: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("criterion {number} ({name}): PASS - {detail}"),
        Err(detail) => {
            println!("criterion {number} ({name}): FAIL - {detail}");
            panic!("criterion {number} ({name}) failed: {detail}");
        }
    }
}

fn reference_table(file: &str) -> clifford_cpt::cpt_groups::SignedTable {
    let path = format!("{}/reference/{file}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    parse_reference_csv(&text).unwrap_or_else(|e| panic!("parse {path}: {e}"))
}

#[test]
fn criterion_01_gamma_relations() {
    let basis = build_gamma_basis();
    let rep = verify_clifford_relations(&basis);
    report(
        1,
        "gamma anticommutation relations",
        if rep.passed() && rep.total_pairs == 25 {
            Ok(format!("{}/{} anticommutators exact", rep.total_pairs, rep.total_pairs))
        } else {
            Err(format!("failed pairs: {:?}", rep.failed_pairs))
        },
    );
}

#[test]
fn criterion_02_g14_order_and_structure() {
    let g14 = build_g14();
    let structure = g14.group.order_structure().pair();
    report(
        2,
        "signed blade group order 64, structure (23, 40)",
        if g14.group.order() == 64 && structure == (23, 40) {
            Ok(format!("order {}, structure {:?}", g14.group.order(), structure))
        } else {
            Err(format!("order {}, structure {:?}", g14.group.order(), structure))
        },
    );
}

#[test]
fn criterion_03_dt_table_matches_reference() {
    let computed = cayley_table_signed(&build_dt_set()).unwrap();
    let reference = reference_table("dt_table.csv");
    let mismatches = diff_tables(&computed, &reference);
    report(
        3,
        "discrete-transformation Cayley table, 64 cells",
        if mismatches.is_empty() {
            Ok("all 64 cells bit-exact".into())
        } else {
            Err(format!("{} mismatched cells: {mismatches:?}", mismatches.len()))
        },
    );
}

#[test]
fn criterion_04_ext_table_matches_reference() {
    let derived = derive_automorphism_set(&build_gamma_basis()).unwrap();
    let computed = cayley_table_signed(&build_ext_set(&derived)).unwrap();
    let reference = reference_table("ext_table.csv");
    let mismatches = diff_tables(&computed, &reference);
    report(
        4,
        "automorphism-representative Cayley table, 64 cells",
        if mismatches.is_empty() {
            Ok("all 64 cells bit-exact".into())
        } else {
            Err(format!("{} mismatched cells: {mismatches:?}", mismatches.len()))
        },
    );
}

#[test]
fn criterion_05_signatures() {
    let dt_sig = compute_signature(&build_dt_set()).to_string();
    let derived = derive_automorphism_set(&build_gamma_basis()).unwrap();
    let ext_sig = compute_signature(&build_ext_set(&derived)).to_string();
    report(
        5,
        "signature sign vectors",
        if dt_sig == "(+,+,-,-,-,+,-)" && ext_sig == "(+,-,-,-,-,+,+)" {
            Ok(format!("dt {dt_sig}, ext {ext_sig}"))
        } else {
            Err(format!("dt {dt_sig}, ext {ext_sig}"))
        },
    );
}

#[test]
fn criterion_06_automorphism_derivation_and_intertwining() {
    let basis = build_gamma_basis();
    let derived = derive_automorphism_set(&basis).unwrap();
    let expected = [
        ("I", "1"),
        ("W", "g01234"),
        ("E", "g24"),
        ("C", "g013"),
        ("Pi", "g13"),
        ("K", "g024"),
        ("S", "g1234"),
        ("F", "g0"),
    ];
    let mut wrong = Vec::new();
    for ((name, blade), (want_name, want)) in derived.named().iter().zip(expected.iter()) {
        if name != want_name || blade.label() != *want {
            wrong.push(format!("{name}={} (wanted {want_name}={want})", blade.label()));
        }
    }
    let intertwining = verify_intertwining(&basis, &derived);
    report(
        6,
        "intertwiner derivation and matrix-level checks",
        if wrong.is_empty() && intertwining.passed() {
            Ok("E=g24 Pi=g13 C=g013 K=g024 W=g01234 S=g1234 F=g0; all intertwining relations exact".into())
        } else {
            Err(format!("wrong reps {wrong:?}, intertwining failures {:?}", intertwining.failures))
        },
    );
}

#[test]
fn criterion_07_closures_isomorphic() {
    let dt = signed_closure(&build_dt_set()).unwrap();
    let derived = derive_automorphism_set(&build_gamma_basis()).unwrap();
    let ext = signed_closure(&build_ext_set(&derived)).unwrap();
    let outcome = match find_isomorphism(&dt.group, &ext.group) {
        Some(h) if h.verify_isomorphism(&dt.group, &ext.group) => {
            Ok("isomorphism found and verified on all 256 pairs".into())
        }
        Some(_) => Err("candidate map failed exhaustive verification".into()),
        None => Err(format!(
            "no isomorphism exists: the order-16 closures differ structurally \
             (left abelian: {}, right abelian: {}); only their quotients by \
             {{1, -1}} are isomorphic",
            dt.group.is_abelian(),
            ext.group.is_abelian()
        )),
    };
    report(7, "order-16 closures isomorphic", outcome);
}

#[test]
fn criterion_08_salingaros_decomposition() {
    let rep = salingaros_check().unwrap();
    report(
        8,
        "central product Q8 ∘ D8 ∘ V4 isomorphic to the blade group",
        if rep.passed() {
            Ok(format!(
                "order {}, structure {:?}, isomorphism verified",
                rep.construct_order, rep.construct_order_structure
            ))
        } else {
            Err(format!("{rep:?}"))
        },
    );
}

#[test]
fn criterion_09_both_closures_non_abelian() {
    let sig = AlgebraSignature::new(1, 4);
    let t = SignedBlade::parse("g0").unwrap();
    let c = SignedBlade::parse("g2").unwrap();
    let tc = blade_mul(sig, t, c).unwrap();
    let ct = blade_mul(sig, c, t).unwrap();
    let witness_holds = tc == ct.negate() && tc.sign() == Sign::Plus;

    let dt = signed_closure(&build_dt_set()).unwrap();
    let derived = derive_automorphism_set(&build_gamma_basis()).unwrap();
    let ext = signed_closure(&build_ext_set(&derived)).unwrap();
    report(
        9,
        "both closures non-abelian with anticommuting witness",
        if witness_holds && !dt.group.is_abelian() && !ext.group.is_abelian() {
            Ok("T·C = -C·T; both closures non-abelian".into())
        } else {
            Err(format!(
                "witness T·C = -C·T holds: {witness_holds}; dt abelian: {}; ext abelian: {} \
                 (ext is generated by commuting blades g24, g13 and the central pseudoscalar)",
                dt.group.is_abelian(),
                ext.group.is_abelian()
            ))
        },
    );
}

#[test]
fn criterion_10_structural_property_suite() {
    let mut failures: Vec<String> = Vec::new();
    let sig = AlgebraSignature::new(1, 4);
    let basis = build_gamma_basis();

    // Representation homomorphism on all 1024 signed blade pairs.
    let signed = sig.signed_blades();
    for &a in &signed {
        for &b in &signed {
            let lhs = blade_to_matrix(&basis, a).mat_mul(&blade_to_matrix(&basis, b)).unwrap();
            let rhs = blade_to_matrix(&basis, blade_mul(sig, a, b).unwrap());
            if lhs != rhs {
                failures.push(format!("homomorphism broken at {} * {}", a.label(), b.label()));
            }
        }
    }

    // Blade associativity on all 32^3 unsigned triples.
    let blades = sig.unsigned_blades();
    'outer: for &a in &blades {
        for &b in &blades {
            for &c in &blades {
                let ab_c = blade_mul(sig, blade_mul(sig, a, b).unwrap(), c).unwrap();
                let a_bc = blade_mul(sig, a, blade_mul(sig, b, c).unwrap()).unwrap();
                if ab_c != a_bc {
                    failures.push(format!(
                        "associativity broken at ({}, {}, {})",
                        a.label(),
                        b.label(),
                        c.label()
                    ));
                    break 'outer;
                }
            }
        }
    }

    // Latin-square, identity, inverse and associativity re-validation of
    // every constructed Cayley table, plus the sign-quotient invariants.
    let derived = derive_automorphism_set(&basis).unwrap();
    let dt = signed_closure(&build_dt_set()).unwrap();
    let ext = signed_closure(&build_ext_set(&derived)).unwrap();
    let g14 = build_g14();
    for (name, group) in [("dt", &dt.group), ("ext", &ext.group), ("g14", &g14.group)] {
        let labels: Vec<String> = group.labels().to_vec();
        let n = group.order();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|r| (0..n).map(|c| group.op(r, c)).collect())
            .collect();
        if let Err(e) = FiniteGroup::from_table(labels, table) {
            failures.push(format!("{name} table failed validation: {e}"));
        }
    }
    for (name, group) in [("dt", &dt.group), ("ext", &ext.group)] {
        let z = vec![group.index_of("1").unwrap(), group.index_of("-1").unwrap()];
        match group.quotient_by_central_subgroup(&z) {
            Ok(q) => {
                if q.order() != 8 || !q.is_abelian() || q.exponent() != 2 {
                    failures.push(format!(
                        "{name} sign quotient: order {}, abelian {}, exponent {}",
                        q.order(),
                        q.is_abelian(),
                        q.exponent()
                    ));
                }
            }
            Err(e) => failures.push(format!("{name} sign quotient failed: {e}")),
        }
    }

    if sig.type_mod8() != 5 {
        failures.push(format!("type_mod8(1,4) = {}", sig.type_mod8()));
    }

    report(
        10,
        "structural property suite",
        if failures.is_empty() {
            Ok("1024 homomorphism pairs, 32768 associativity triples, table and quotient invariants, type_mod8 = 5".into())
        } else {
            Err(failures.join("; "))
        },
    );
}
