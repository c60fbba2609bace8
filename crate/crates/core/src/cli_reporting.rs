//! Command-line surface: verifications, table and signature rendering in
//! markdown/CSV/JSON, and diffing computed tables against reference files.
//!
//! Markdown is the only format that prints the γ glyph; CSV and JSON stick
//! to the ASCII blade grammar so machine output stays encoding-unambiguous.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::automorphism_solver::{
    derive_automorphism_set, solve_commutation_pattern, verify_intertwining, CommutationPattern,
};
use crate::blade_algebra::AlgebraSignature;
use crate::cpt_groups::{
    build_blade_group, build_dt_set, build_ext_set, cayley_table_signed, compute_signature,
    salingaros_check, signed_closure, CptElementSet, SignedTable,
};
use crate::group_engine::find_isomorphism;
use crate::matrix_rep::{build_gamma_basis, verify_clifford_relations};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetChoice {
    /// The set built from the wave-equation symmetry operators.
    Dt,
    /// The set derived from the algebra automorphism intertwiners.
    Ext,
}

#[derive(Parser, Debug)]
#[command(
    name = "clifford-cpt",
    about = "Exact finite-group computations for the discrete symmetries of Cl(1,4)",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the generator anticommutation relations at exact matrix level.
    VerifyGamma,
    /// Generate the blade group of Cl(p,q) and report its structure.
    Generate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
    /// Print the 8x8 signed multiplication table of a symmetry set.
    Table {
        #[arg(long, value_enum)]
        set: SetChoice,
    },
    /// Print the seven square signs of a symmetry set.
    Signature {
        #[arg(long, value_enum)]
        set: SetChoice,
    },
    /// Search for an isomorphism between two order-16 closures.
    Iso {
        #[arg(long, value_enum)]
        left: SetChoice,
        #[arg(long, value_enum)]
        right: SetChoice,
    },
    /// List the blades realizing a commutation pattern.
    Solve {
        /// Five signs over {+,-}, generator order 0..4, e.g. "++-+-".
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
    },
    /// Verify the central-product decomposition of the order-64 blade group.
    Salingaros,
    /// Diff a computed table against a reference CSV file.
    Diff {
        #[arg(long, value_enum)]
        set: SetChoice,
        #[arg(long)]
        reference: std::path::PathBuf,
    },
}

fn build_set(choice: SetChoice) -> CptElementSet {
    match choice {
        SetChoice::Dt => build_dt_set(),
        SetChoice::Ext => {
            let derived = derive_automorphism_set(&build_gamma_basis())
                .expect("the built-in basis always yields a derivation");
            build_ext_set(&derived)
        }
    }
}

fn gamma_label(ascii: &str) -> String {
    ascii.replace('g', "γ")
}

/// Serializes a signed table in one of the three formats. Row and column
/// order is the slot order of the set that produced it.
pub fn render_table(table: &SignedTable, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            out.push(',');
            out.push_str(&table.labels.join(","));
            out.push('\n');
            for (r, row) in table.cells.iter().enumerate() {
                out.push_str(&table.labels[r]);
                out.push(',');
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Md => {
            let mut out = String::new();
            let head: Vec<String> = table.labels.iter().map(|l| gamma_label(l)).collect();
            let _ = writeln!(out, "|   | {} |", head.join(" | "));
            let _ = writeln!(out, "|{}|", vec!["---"; table.labels.len() + 1].join("|"));
            for (r, row) in table.cells.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| gamma_label(c)).collect();
                let _ = writeln!(out, "| {} | {} |", head[r], cells.join(" | "));
            }
            out
        }
        Format::Json => {
            let value = json!({
                "rows": table.labels,
                "cols": table.labels,
                "cells": table.cells,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
    }
}

/// Parses the CSV table contract: header row of labels, then one labeled row
/// per element, cells in the blade label grammar.
pub fn parse_reference_csv(text: &str) -> Result<SignedTable, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty reference file")?;
    let header_cells: Vec<&str> = header.split(',').collect();
    if header_cells.len() < 2 || !header_cells[0].trim().is_empty() {
        return Err("header row must start with an empty cell".into());
    }
    let labels: Vec<String> = header_cells[1..].iter().map(|s| s.to_string()).collect();
    let n = labels.len();
    let mut cells = Vec::new();
    for (r, line) in lines.enumerate() {
        let row: Vec<&str> = line.split(',').collect();
        if row.len() != n + 1 {
            return Err(format!("row {} has {} cells, expected {}", r + 1, row.len(), n + 1));
        }
        if row[0] != labels[r] {
            return Err(format!(
                "row label {:?} does not match column label {:?}",
                row[0], labels[r]
            ));
        }
        cells.push(row[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    if cells.len() != n {
        return Err(format!("expected {} rows, found {}", n, cells.len()));
    }
    Ok(SignedTable { labels, cells })
}

/// A single disagreeing cell between a computed and a reference table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: String,
    pub col: String,
    pub computed: String,
    pub reference: String,
}

/// Cell-for-cell comparison; empty iff bit-exact agreement.
pub fn diff_tables(computed: &SignedTable, reference: &SignedTable) -> Vec<CellMismatch> {
    let mut mismatches = Vec::new();
    if computed.labels != reference.labels {
        mismatches.push(CellMismatch {
            row: "(header)".into(),
            col: "(header)".into(),
            computed: computed.labels.join(" "),
            reference: reference.labels.join(" "),
        });
        return mismatches;
    }
    for (r, (crow, rrow)) in computed.cells.iter().zip(&reference.cells).enumerate() {
        for (c, (cv, rv)) in crow.iter().zip(rrow).enumerate() {
            if cv != rv {
                mismatches.push(CellMismatch {
                    row: computed.labels[r].clone(),
                    col: computed.labels[c].clone(),
                    computed: cv.clone(),
                    reference: rv.clone(),
                });
            }
        }
    }
    mismatches
}

/// Parses argv and executes one command, returning the process exit status
/// and everything that should go to standard output.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own usage/help text; help requests are not errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    execute(cli.command, cli.format)
}

fn execute(command: Command, format: Format) -> (i32, String) {
    match command {
        Command::VerifyGamma => {
            let basis = build_gamma_basis();
            let report = verify_clifford_relations(&basis);
            let derived = derive_automorphism_set(&basis);
            let intertwining = derived
                .as_ref()
                .map(|set| verify_intertwining(&basis, set))
                .ok();
            let inter_ok = intertwining.as_ref().map_or(false, |r| r.passed());
            let ok = report.passed() && inter_ok;
            let held = report.total_pairs - report.failed_pairs.len();
            let out = match format {
                Format::Json => {
                    let value = json!({
                        "relations_total": report.total_pairs,
                        "relations_held": held,
                        "failed_pairs": report.failed_pairs,
                        "intertwining_passed": inter_ok,
                        "passed": ok,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("check,passed\n");
                    let _ = writeln!(s, "relations,{}", report.passed());
                    let _ = writeln!(s, "intertwining,{inter_ok}");
                    s
                }
                Format::Md => {
                    let mut s = format!("{held}/{} relations hold\n", report.total_pairs);
                    for (a, b) in &report.failed_pairs {
                        let _ = writeln!(s, "failed pair: ({a}, {b})");
                    }
                    let _ = writeln!(
                        s,
                        "intertwining relations: {}",
                        if inter_ok { "pass" } else { "FAIL" }
                    );
                    s
                }
            };
            (if ok { EXIT_OK } else { EXIT_VERIFICATION_FAILED }, out)
        }
        Command::Generate { p, q } => {
            if p + q == 0 || p + q > 8 {
                return (
                    EXIT_USAGE,
                    "error: p + q must be between 1 and 8\n".to_string(),
                );
            }
            let sig = AlgebraSignature::new(p, q);
            let blade_group = match build_blade_group(sig) {
                Ok(g) => g,
                Err(e) => return (EXIT_VERIFICATION_FAILED, format!("error: {e}\n")),
            };
            let structure = blade_group.group.order_structure();
            let out = match format {
                Format::Json => {
                    let hist: serde_json::Map<String, serde_json::Value> = structure
                        .histogram()
                        .iter()
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect();
                    let value = json!({
                        "p": p,
                        "q": q,
                        "type_mod8": sig.type_mod8(),
                        "order": blade_group.group.order(),
                        "order_structure": hist,
                        "center_size": blade_group.group.center().len(),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("key,value\n");
                    let _ = writeln!(s, "order,{}", blade_group.group.order());
                    for (k, v) in structure.histogram() {
                        let _ = writeln!(s, "order_{k},{v}");
                    }
                    let _ = writeln!(s, "type_mod8,{}", sig.type_mod8());
                    s
                }
                Format::Md => {
                    let mut s = format!(
                        "G({p},{q}): order {}, type {} (mod 8)\n",
                        blade_group.group.order(),
                        sig.type_mod8()
                    );
                    let (n2, n4) = structure.pair();
                    let _ = writeln!(s, "order structure: ({n2}, {n4})");
                    s
                }
            };
            (EXIT_OK, out)
        }
        Command::Table { set } => {
            let table = match cayley_table_signed(&build_set(set)) {
                Ok(t) => t,
                Err(e) => return (EXIT_VERIFICATION_FAILED, format!("error: {e}\n")),
            };
            (EXIT_OK, render_table(&table, format))
        }
        Command::Signature { set } => {
            let signature = compute_signature(&build_set(set));
            let signs: Vec<String> = signature.0.iter().map(|s| s.to_string()).collect();
            let out = match format {
                Format::Json => {
                    let value = json!({
                        "set": match set { SetChoice::Dt => "dt", SetChoice::Ext => "ext" },
                        "signature": signs,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => format!("{}\n", signs.join(",")),
                Format::Md => format!("{}\n", signs.join(" ")),
            };
            (EXIT_OK, out)
        }
        Command::Iso { left, right } => {
            let lg = match signed_closure(&build_set(left)) {
                Ok(g) => g,
                Err(e) => return (EXIT_VERIFICATION_FAILED, format!("error: {e}\n")),
            };
            let rg = match signed_closure(&build_set(right)) {
                Ok(g) => g,
                Err(e) => return (EXIT_VERIFICATION_FAILED, format!("error: {e}\n")),
            };
            let hom = find_isomorphism(&lg.group, &rg.group);
            let found = hom.is_some();
            let out = match format {
                Format::Json => {
                    let mapping = hom.as_ref().map(|h| {
                        h.mapping
                            .iter()
                            .enumerate()
                            .map(|(i, &j)| json!([lg.group.label(i), rg.group.label(j)]))
                            .collect::<Vec<_>>()
                    });
                    let value = json!({
                        "found": found,
                        "order": lg.group.order(),
                        "mapping": mapping,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("left,right\n");
                    if let Some(h) = &hom {
                        for (i, &j) in h.mapping.iter().enumerate() {
                            let _ = writeln!(s, "{},{}", lg.group.label(i), rg.group.label(j));
                        }
                    }
                    s
                }
                Format::Md => {
                    if let Some(h) = &hom {
                        let mut s = String::from("isomorphism found:\n");
                        for (i, &j) in h.mapping.iter().enumerate() {
                            let _ = writeln!(
                                s,
                                "{} -> {}",
                                gamma_label(lg.group.label(i)),
                                gamma_label(rg.group.label(j))
                            );
                        }
                        s
                    } else {
                        "no isomorphism exists\n".to_string()
                    }
                }
            };
            (if found { EXIT_OK } else { EXIT_VERIFICATION_FAILED }, out)
        }
        Command::Solve { pattern } => {
            let pat = match CommutationPattern::parse(&pattern) {
                Some(p) => p,
                None => {
                    return (
                        EXIT_USAGE,
                        format!("error: pattern must be 5 characters over {{+,-}}, got {pattern:?}\n"),
                    )
                }
            };
            let solutions = solve_commutation_pattern(AlgebraSignature::new(1, 4), pat);
            let labels: Vec<String> = solutions.iter().map(|b| b.label()).collect();
            let out = match format {
                Format::Json => {
                    let value = json!({
                        "pattern": pattern,
                        "solutions": labels,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("solution\n");
                    for l in &labels {
                        let _ = writeln!(s, "{l}");
                    }
                    s
                }
                Format::Md => {
                    if labels.is_empty() {
                        "no blade satisfies the pattern\n".to_string()
                    } else {
                        let pretty: Vec<String> = labels.iter().map(|l| gamma_label(l)).collect();
                        format!("{}\n", pretty.join(" "))
                    }
                }
            };
            (EXIT_OK, out)
        }
        Command::Salingaros => {
            let report = match salingaros_check() {
                Ok(r) => r,
                Err(e) => return (EXIT_VERIFICATION_FAILED, format!("error: {e}\n")),
            };
            let ok = report.passed();
            let out = match format {
                Format::Json => {
                    let value = json!({
                        "order": report.construct_order,
                        "order_structure": [
                            report.construct_order_structure.0,
                            report.construct_order_structure.1,
                        ],
                        "center_size": report.construct_center_size,
                        "isomorphic_to_blade_group": report.isomorphism.is_some(),
                        "mapping": report.isomorphism.as_ref().map(|h| h.mapping.clone()),
                        "passed": ok,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("key,value\n");
                    let _ = writeln!(s, "order,{}", report.construct_order);
                    let _ = writeln!(
                        s,
                        "order_structure,({};{})",
                        report.construct_order_structure.0, report.construct_order_structure.1
                    );
                    let _ = writeln!(s, "isomorphic,{}", report.isomorphism.is_some());
                    s
                }
                Format::Md => {
                    let (n2, n4) = report.construct_order_structure;
                    format!(
                        "Q8 ∘ D8 ∘ (Z2 x Z2): order {}, order structure ({n2}, {n4}), center size {}\nisomorphic to the order-64 blade group: {}\n",
                        report.construct_order,
                        report.construct_center_size,
                        if ok { "yes" } else { "NO" }
                    )
                }
            };
            (if ok { EXIT_OK } else { EXIT_VERIFICATION_FAILED }, out)
        }
        Command::Diff { set, reference } => {
            let text = match std::fs::read_to_string(&reference) {
                Ok(t) => t,
                Err(e) => {
                    return (
                        EXIT_USAGE,
                        format!("error: cannot read {}: {e}\n", reference.display()),
                    )
                }
            };
            let reference_table = match parse_reference_csv(&text) {
                Ok(t) => t,
                Err(e) => return (EXIT_USAGE, format!("error: ill-formed reference: {e}\n")),
            };
            let computed = match cayley_table_signed(&build_set(set)) {
                Ok(t) => t,
                Err(e) => return (EXIT_VERIFICATION_FAILED, format!("error: {e}\n")),
            };
            let mismatches = diff_tables(&computed, &reference_table);
            let ok = mismatches.is_empty();
            let out = match format {
                Format::Json => {
                    let list: Vec<serde_json::Value> = mismatches
                        .iter()
                        .map(|m| {
                            json!({
                                "row": m.row,
                                "col": m.col,
                                "computed": m.computed,
                                "reference": m.reference,
                            })
                        })
                        .collect();
                    let value = json!({ "mismatches": list, "passed": ok });
                    format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
                }
                Format::Csv => {
                    let mut s = String::from("row,col,computed,reference\n");
                    for m in &mismatches {
                        let _ = writeln!(s, "{},{},{},{}", m.row, m.col, m.computed, m.reference);
                    }
                    s
                }
                Format::Md => {
                    if ok {
                        "tables agree on all cells\n".to_string()
                    } else {
                        let mut s = format!("{} mismatched cells:\n", mismatches.len());
                        for m in &mismatches {
                            let _ = writeln!(
                                s,
                                "({}, {}): computed {} reference {}",
                                m.row, m.col, m.computed, m.reference
                            );
                        }
                        s
                    }
                }
            };
            (if ok { EXIT_OK } else { EXIT_VERIFICATION_FAILED }, out)
        }
    }
}
