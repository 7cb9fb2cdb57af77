//! Command-line pipeline for exact left-invariant curvature and
//! null-cone certification.
//!
//! Exit codes: 0 success / verified; 2 parse error; 3 Jacobi failure;
//! 4 verification mismatch; 5 membership undetermined (success in batch
//! mode with --lenient). Construction failures report a typed reason and
//! exit 1.

mod document;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use document::AlgebraDocument;
use nullcone::algebra::{StructureConstants, Subspace};
use nullcone::boostweight::{support, WeightVector};
use nullcone::catalog;
use nullcone::construct::{
    csolvable_frame, distribution_analysis_with, frame_certificate, nilpotent_frame,
    refinement_check, weight_assignment, FrameAssignment,
};
use nullcone::geometry::{scalar_invariants, CurvaturePack, NullFrameMetric};
use nullcone::nullcone::{
    allowed_components, classify_case, membership_with_permutations, necessary_conditions,
};
use nullcone::scalar::{self, Scalar};

#[derive(Parser)]
#[command(name = "nullcone", version, about = "Exact analysis of left-invariant pseudo-Riemannian metrics on Lie groups", disable_help_subcommand = true)]
struct Cli {
    /// Print the machine-readable JSON block instead of the human report
    #[arg(long, global = true)]
    json: bool,
    /// Treat undetermined membership as success (batch mode)
    #[arg(long, global = true)]
    lenient: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document, verify the Jacobi identity, report the series
    /// and the structural classification
    Check { file: PathBuf },
    /// Compute connection, Riemann/Ricci tensors, Killing data,
    /// derivatives and the curated scalar invariants
    Curvature {
        file: PathBuf,
        /// Highest covariant derivative of the curvature to compute
        #[arg(long, default_value_t = 3)]
        max_nabla: usize,
    },
    /// Boost-weight support, case label, membership certificate (or
    /// NotFoundInFrame) and the necessary-condition battery
    Certify { file: PathBuf },
    /// Build a split-signature null frame by the nilpotent or completely
    /// solvable construction
    Construct {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Bundled example registry: list, show, verify, export
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Structure-constant positions allowed by a case inequality,
    /// grouped by boost weight
    AppendixA {
        /// Case label such as 3,1 or 3/2,1/2 (default: the union of the
        /// two steep rank-two cases)
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Nilpotent,
    Csolvable,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names of all bundled entries
    List,
    /// Document and expectations for one entry
    Show {
        name: String,
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Scalar)>,
    },
    /// Recompute everything for one entry (or all) and diff exactly
    Verify {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Scalar)>,
    },
    /// Write the whole catalog as a versioned data file
    Export {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_param(s: &str) -> Result<(String, Scalar), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s}"))?;
    Ok((k.trim().to_string(), scalar::parse(v)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli);
    ExitCode::from(code)
}

fn load(path: &PathBuf) -> Result<(AlgebraDocument, StructureConstants, NullFrameMetric), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc = AlgebraDocument::from_json(&text).map_err(|e| e.to_string())?;
    let (mu, g) = doc.to_core().map_err(|e| e.to_string())?;
    Ok((doc, mu, g))
}

fn emit(cli: &Cli, machine: &Value, human: &str) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(machine).unwrap());
    } else {
        println!("{human}");
    }
}

fn run(cli: &Cli) -> u8 {
    match &cli.command {
        Command::Check { file } => cmd_check(cli, file),
        Command::Curvature { file, max_nabla } => cmd_curvature(cli, file, *max_nabla),
        Command::Certify { file } => cmd_certify(cli, file),
        Command::Construct { file, mode } => cmd_construct(cli, file, *mode),
        Command::Catalog { action } => cmd_catalog(cli, action),
        Command::AppendixA { case, p, k } => cmd_appendix_a(cli, case.as_deref(), *p, *k),
    }
}

fn series_dims(chain: &[Subspace]) -> Vec<usize> {
    chain.iter().map(Subspace::dim).collect()
}

fn cmd_check(cli: &Cli, file: &PathBuf) -> u8 {
    let (_, mu, g) = match load(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let defect = mu.jacobi_defect();
    if !defect.is_zero() {
        let comps: Vec<Value> = defect
            .iter()
            .take(10)
            .map(|(idx, v)| {
                json!({
                    "a": idx[0] + 1, "b": idx[1] + 1, "c": idx[2] + 1, "d": idx[3] + 1,
                    "value": scalar::format(v),
                })
            })
            .collect();
        let machine = json!({
            "command": "check",
            "jacobi_ok": false,
            "jacobi_defect": comps,
        });
        let human = format!(
            "Jacobi identity FAILS in {} component(s); first offenders: {}",
            defect.len(),
            serde_json::to_string(&machine["jacobi_defect"]).unwrap()
        );
        emit(cli, &machine, &human);
        return 3;
    }
    let derived = mu.derived_series().expect("jacobi verified");
    let lcs = mu.lower_central_series().expect("jacobi verified");
    let solvable = derived.last().unwrap().dim() == 0;
    let nilpotent = lcs.last().unwrap().dim() == 0;
    let semisimple = mu.is_semisimple().expect("jacobi verified");
    let class = if mu.is_abelian() {
        "abelian".to_string()
    } else if nilpotent {
        format!("nilpotent ({}-step)", lcs.len() - 1)
    } else if solvable {
        format!("solvable (derived length {})", derived.len() - 1)
    } else if semisimple {
        "semisimple".to_string()
    } else {
        "neither solvable nor semisimple (nontrivial Levi decomposition)".to_string()
    };
    let machine = json!({
        "command": "check",
        "jacobi_ok": true,
        "dim": g.dim(),
        "signature": {"p": g.p(), "k": g.k()},
        "derived_series_dims": series_dims(&derived),
        "lower_central_series_dims": series_dims(&lcs),
        "solvable": solvable,
        "nilpotent": nilpotent,
        "semisimple": semisimple,
        "classification": class,
    });
    let human = format!(
        "Jacobi identity: OK\ndim {} in signature ({},{})\nderived series dims: {:?}\nlower central series dims: {:?}\nclassification: {}",
        g.dim(),
        g.p(),
        g.p() + g.k(),
        series_dims(&derived),
        series_dims(&lcs),
        class
    );
    emit(cli, &machine, &human);
    0
}

fn cmd_curvature(cli: &Cli, file: &PathBuf, max_nabla: usize) -> u8 {
    let (_, mu, g) = match load(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let pack = CurvaturePack::compute(&mu, &g, max_nabla.max(1));
    let invariants = scalar_invariants(&pack);
    let nabla_flags: Vec<bool> = pack.nablas.iter().map(|t| t.is_zero()).collect();
    let machine = json!({
        "command": "curvature",
        "jacobi_ok": mu.is_lie_algebra(),
        "ric": report::sym_tensor_json(&pack.ric),
        "killing": report::sym_tensor_json(&pack.killing),
        "riem_zero": pack.riem.is_zero(),
        "nabla_riem_zero": nabla_flags,
        "ricci_jordan": jordan_json(&pack.ricci_op.jordan_type()),
        "killing_jordan": jordan_json(&pack.killing_op.jordan_type()),
        "invariants": invariants.iter().map(|(n, v)| json!({
            "name": n, "value": scalar::format(v),
        })).collect::<Vec<_>>(),
    });
    let human = format!(
        "Ric = {}\nB   = {}\nRiemann zero: {}\n∇^(m)Riem zero flags (m = 1..{}): {:?}\nRicci operator Jordan type: {}\nKilling operator Jordan type: {}\nnonzero invariants: {}",
        report::sym_tensor_human(&pack.ric),
        report::sym_tensor_human(&pack.killing),
        pack.riem.is_zero(),
        pack.nablas.len(),
        nabla_flags,
        report::jordan_human(&pack.ricci_op.jordan_type()),
        report::jordan_human(&pack.killing_op.jordan_type()),
        {
            let nz: Vec<String> = invariants
                .iter()
                .filter(|(_, v)| !num_traits_is_zero(v))
                .map(|(n, v)| format!("{n} = {}", scalar::format(v)))
                .collect();
            if nz.is_empty() {
                "none (all curated invariants vanish)".to_string()
            } else {
                nz.join(", ")
            }
        }
    );
    emit(cli, &machine, &human);
    0
}

fn num_traits_is_zero(v: &Scalar) -> bool {
    use nullcone::scalar::format;
    format(v) == "0"
}

fn jordan_json(t: &Result<Vec<usize>, nullcone::Error>) -> Value {
    match t {
        Ok(blocks) => json!(blocks),
        Err(_) => json!("not nilpotent"),
    }
}

fn cmd_certify(cli: &Cli, file: &PathBuf) -> u8 {
    let (_, mu, g) = match load(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    if !mu.is_lie_algebra() {
        eprintln!("Jacobi identity fails; certify requires a Lie algebra");
        return 3;
    }
    let pack = CurvaturePack::compute(&mu, &g, 1);
    let sup = support(&mu.as_tensor(), g.p(), g.k());
    let label = classify_case(&sup, g.p());
    let cert = membership_with_permutations(&mu, &g).expect("jacobi verified");
    let necessary = necessary_conditions(&mu, &g, &pack);
    let (verdict, code) = match (&cert, necessary.passes) {
        (Some(_), _) => ("member (certified)", 0),
        (None, false) => ("not in null cone (certified)", 0),
        (None, true) => ("undetermined", 5),
    };
    let chain = cert
        .as_ref()
        .and_then(|c| distribution_analysis_with(&mu, &g, c).ok());
    let machine = json!({
        "command": "certify",
        "support": sup.iter().map(report::boost_weight_json).collect::<Vec<_>>(),
        "case_label": label.as_ref().map(|l| report::weights_json(&l.0)),
        "certificate": cert.as_ref().map(|c| report::certificate_json(c, &g)),
        "necessary": report::necessary_json(&necessary),
        "distribution_chain": chain.as_ref().map(|ch| json!({
            "member_dims": ch.members.iter().map(Subspace::dim).collect::<Vec<_>>(),
            "d_perp_dim": ch.d_perp.dim(),
            "d_perp_nilpotent": ch.d_perp_nilpotent,
        })),
        "verdict": verdict,
    });
    let human = format!(
        "boost support: {}\ncase label (identity frame): {}\ncertificate: {}\nnecessary conditions pass: {} (invariants zero: {}, K nilpotent: {} index {:?} ≤ {}, semisimple: {})\nverdict: {}",
        sup.iter()
            .map(|w| format!("{:?}", w.0))
            .collect::<Vec<_>>()
            .join(" "),
        label
            .as_ref()
            .map(|l| l.display())
            .unwrap_or_else(|| "infeasible in this frame".into()),
        cert.as_ref()
            .map(|c| format!(
                "found: weights {} after frame permutation {:?}",
                report::weights_human(&c.weights),
                c.permutation.index_map(&g).iter().map(|i| i + 1).collect::<Vec<_>>()
            ))
            .unwrap_or_else(|| "NotFoundInFrame (not a proof of non-membership)".into()),
        necessary.passes,
        necessary.invariants_all_zero,
        necessary.killing_nilpotent,
        necessary.killing_index,
        necessary.killing_index_bound,
        necessary.semisimple,
        verdict
    );
    emit(cli, &machine, &human);
    if code == 5 && cli.lenient {
        0
    } else {
        code
    }
}

fn cmd_construct(cli: &Cli, file: &PathBuf, mode: Mode) -> u8 {
    let (_, mu, _) = match load(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let frame: Result<FrameAssignment, nullcone::Error> = match mode {
        Mode::Nilpotent => nilpotent_frame(&mu),
        Mode::Csolvable => csolvable_frame(&mu),
    };
    let frame = match frame {
        Ok(f) => f,
        Err(e) => {
            eprintln!("construction failed: {e}");
            return 1;
        }
    };
    let transformed = frame.transformed(&mu).expect("frame basis is invertible");
    let metric = frame.metric();
    let refinement = refinement_check(&mu, &frame).expect("frame is valid");
    let cert = frame_certificate(&mu, &frame).expect("refinement guarantees feasibility");
    let out_doc = AlgebraDocument::from_core(&transformed, &metric);
    let frame_json: Vec<Value> = frame
        .basis
        .iter()
        .map(|v| {
            Value::Array(
                v.iter()
                    .map(|x| Value::String(scalar::format(x)))
                    .collect(),
            )
        })
        .collect();
    let machine = json!({
        "command": "construct",
        "signature": {"p": frame.p, "k": frame.k},
        "p_tilde": frame.p_tilde(),
        "block_weights": report::weights_json(&weight_assignment(frame.p_tilde())),
        "frame_basis_rows": frame_json,
        "refinement_ok": refinement.ok,
        "certificate": report::certificate_json(&cert, &metric),
        "document": serde_json::to_value(&out_doc).unwrap(),
    });
    let human = format!(
        "constructed frame in signature ({},{}); refinement conditions: {}\nblock weights: {}\ncertificate margins all ≤ -1: yes\ntransformed document:\n{}",
        frame.p,
        frame.p + frame.k,
        if refinement.ok { "pass" } else { "FAIL" },
        report::weights_human(&weight_assignment(frame.p_tilde())),
        out_doc.to_json()
    );
    emit(cli, &machine, &human);
    0
}

fn cmd_catalog(cli: &Cli, action: &CatalogAction) -> u8 {
    match action {
        CatalogAction::List => {
            let names = catalog::list();
            let machine = json!({"command": "catalog-list", "entries": names});
            emit(cli, &machine, &names.join("\n"));
            0
        }
        CatalogAction::Show { name, params } => {
            let bindings: BTreeMap<String, Scalar> = params.iter().cloned().collect();
            match catalog::get(name, &bindings) {
                Ok(inst) => {
                    let doc = AlgebraDocument::from_core(&inst.mu, &inst.metric);
                    let machine = json!({
                        "command": "catalog-show",
                        "name": inst.name,
                        "bindings": inst.bindings.iter()
                            .map(|(k, v)| (k.clone(), scalar::format(v)))
                            .collect::<BTreeMap<_, _>>(),
                        "document": serde_json::to_value(&doc).unwrap(),
                        "expected_ric": inst.expected_ric.as_ref().map(report::sym_tensor_json),
                        "expected_killing": inst.expected_killing.as_ref().map(report::sym_tensor_json),
                    });
                    let human = format!(
                        "{}\nbindings: {:?}\n{}\nexpected Ric = {}\nexpected B   = {}",
                        inst.name,
                        inst.bindings
                            .iter()
                            .map(|(k, v)| format!("{k}={}", scalar::format(v)))
                            .collect::<Vec<_>>(),
                        doc.to_json(),
                        inst.expected_ric
                            .as_ref()
                            .map(|t| report::sym_tensor_human(t))
                            .unwrap_or_else(|| "(not recorded)".into()),
                        inst.expected_killing
                            .as_ref()
                            .map(|t| report::sym_tensor_human(t))
                            .unwrap_or_else(|| "(not recorded)".into()),
                    );
                    emit(cli, &machine, &human);
                    0
                }
                Err(e) => {
                    eprintln!("{e}");
                    2
                }
            }
        }
        CatalogAction::Verify { name, all, params } => {
            let bindings: BTreeMap<String, Scalar> = params.iter().cloned().collect();
            let targets: Vec<String> = if *all {
                catalog::list().iter().map(|s| s.to_string()).collect()
            } else {
                match name {
                    Some(n) => vec![n.clone()],
                    None => {
                        eprintln!("catalog verify needs a name or --all");
                        return 2;
                    }
                }
            };
            let mut results = Vec::new();
            let mut mismatch_count = 0;
            for target in &targets {
                match catalog::get(target, &bindings) {
                    Ok(inst) => {
                        let mismatches = catalog::verify(&inst);
                        if !mismatches.is_empty() {
                            mismatch_count += 1;
                        }
                        results.push(json!({
                            "name": target,
                            "ok": mismatches.is_empty(),
                            "mismatches": mismatches,
                        }));
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        return 2;
                    }
                }
            }
            let machine = json!({
                "command": "catalog-verify",
                "results": results,
                "mismatch_count": mismatch_count,
            });
            let human = results
                .iter()
                .map(|r| {
                    if r["ok"].as_bool().unwrap() {
                        format!("ok       {}", r["name"].as_str().unwrap())
                    } else {
                        format!(
                            "MISMATCH {}: {}",
                            r["name"].as_str().unwrap(),
                            serde_json::to_string(&r["mismatches"]).unwrap()
                        )
                    }
                })
                .collect::<Vec<_>>()
                .join("\n")
                + &format!("\n{} entries, {} mismatched", targets.len(), mismatch_count);
            emit(cli, &machine, &human);
            if mismatch_count > 0 {
                4
            } else {
                0
            }
        }
        CatalogAction::Export { out } => {
            let exported = export_catalog();
            let text = serde_json::to_string_pretty(&exported).unwrap();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return 1;
                    }
                    println!("wrote {}", path.display());
                }
                None => println!("{text}"),
            }
            0
        }
    }
}

pub fn export_catalog() -> Value {
    let entries: Vec<Value> = catalog::entries()
        .iter()
        .map(|entry| {
            let inst = catalog::instantiate(entry, &BTreeMap::new()).expect("defaults instantiate");
            let doc = AlgebraDocument::from_core(&inst.mu, &inst.metric);
            let e = &entry.expected;
            let expected = json!({
                "ric": inst.expected_ric.as_ref().map(report::sym_tensor_json),
                "killing": inst.expected_killing.as_ref().map(report::sym_tensor_json),
                "case_label": e.case_label.as_ref().map(|l| l.as_ref().map(|xs| {
                    xs.iter().map(scalar::format).collect::<Vec<_>>()
                })),
                "ricci_jordan": e.ricci_jordan,
                "killing_jordan": e.killing_jordan,
                "riem_zero": e.riem_zero,
                "nabla_riem_zero": e.nabla_riem_zero,
                "vsi": e.vsi,
                "membership": e.membership.map(|m| match m {
                    catalog::Membership::Member => "member",
                    catalog::Membership::NonMember => "non-member",
                }),
                "nilpotent": e.nilpotent,
                "solvable": e.solvable,
            });
            json!({
                "name": entry.name,
                "description": entry.description,
                "params": entry.params.iter().map(|(n, d)| json!({
                    "name": n, "default": scalar::format(d),
                })).collect::<Vec<_>>(),
                "document": serde_json::to_value(&doc).unwrap(),
                "expected": expected,
            })
        })
        .collect();
    json!({
        "format_version": document::FORMAT_VERSION,
        "catalog_version": env!("CARGO_PKG_VERSION"),
        "entries": entries,
    })
}

fn cmd_appendix_a(cli: &Cli, case: Option<&str>, p: usize, k: usize) -> u8 {
    let cases: Vec<WeightVector> = match case {
        Some(text) => {
            let parts: Result<Vec<Scalar>, _> = text.split(',').map(scalar::parse).collect();
            match parts {
                Ok(xs) if xs.len() == p => vec![WeightVector(xs)],
                Ok(xs) => {
                    eprintln!("case has {} entries but p = {p}", xs.len());
                    return 2;
                }
                Err(e) => {
                    eprintln!("bad case label: {e}");
                    return 2;
                }
            }
        }
        None => {
            if p != 2 {
                eprintln!("the default union table is defined for p = 2; pass --case");
                return 2;
            }
            vec![
                WeightVector::from_i64(&[3, 1]),
                WeightVector::from_i64(&[3, 2]),
            ]
        }
    };
    let mut groups: BTreeMap<Vec<i64>, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for x in &cases {
        for (w, positions) in allowed_components(x, p, k) {
            let entry = groups.entry(w.0.clone()).or_default();
            for pos in positions {
                if !entry.contains(&pos) {
                    entry.push(pos);
                }
            }
        }
    }
    for positions in groups.values_mut() {
        positions.sort_unstable();
    }
    let machine = json!({
        "command": "appendix-a",
        "p": p,
        "k": k,
        "groups": groups.iter().map(|(w, positions)| json!({
            "weight": w,
            "components": positions.iter().map(|(a, b, c)| json!({
                "a": a + 1, "b": b + 1, "c": c + 1,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    let human = groups
        .iter()
        .map(|(w, positions)| {
            let list = positions
                .iter()
                .map(|(a, b, c)| format!("C^{}_{}{}", a + 1, b + 1, c + 1))
                .collect::<Vec<_>>()
                .join(", ");
            format!("{w:?}: {list}")
        })
        .collect::<Vec<_>>()
        .join("\n");
    emit(cli, &machine, &human);
    0
}
