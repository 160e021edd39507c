use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use fracnet::conditions::{
    explore_fnc, fset_characterization, gftc_set, overlap_floor, wsc_bound, ExploreOptions,
    FncReport, FncStatus,
};
use fracnet::geometry::{RatVec, Rational, Similarity};
use fracnet::ifs::validate;
use fracnet::measures::{
    build_graph, build_graph_only, class_decomposition, local_dimension, local_dimension_at,
    to_dot, ClassDecomposition, DimReport, PathSpec, QuotientGraph,
};
use fracnet::net::net_intervals_at;
use fracnet::Error;

use crate::document::{parse_document, DocumentError, IfsDocument};
use crate::report::{cell, to_csv, ErrorInfo, Report};

#[derive(Parser, Debug)]
#[command(
    name = "fracnet",
    version,
    about = "Net intervals, neighbor types and local dimensions of cube IFSs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Deepest exploration level.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_levels: usize,
    /// Most neighbor types explored, the root included.
    #[arg(long, global = true, default_value_t = 500)]
    pub max_types: usize,
    /// Word depth of the attractor approximation without full support.
    #[arg(long, global = true, default_value_t = 4)]
    pub k_depth: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub output: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural checks on a system document.
    Validate { file: PathBuf },
    /// Net intervals at one generation.
    NetIntervals {
        file: PathBuf,
        /// Generation as a rational in (0, 1].
        #[arg(long, conflicts_with = "level", required_unless_present = "level")]
        alpha: Option<String>,
        /// Generation as a power of the level step.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Separation conditions; all of them when no flag is given.
    Check {
        file: PathBuf,
        #[arg(long)]
        fnc: bool,
        #[arg(long)]
        wsc: bool,
        #[arg(long)]
        gftc: bool,
        #[arg(long)]
        fset: bool,
        #[arg(long)]
        overlap_floor: bool,
        /// Levels for the neighbor-count and overlap tables.
        #[arg(long, default_value_t = 4)]
        levels: u32,
        /// Truncation generation of the overlap-map set; defaults to the
        /// deepest table level.
        #[arg(long)]
        gftc_alpha: Option<String>,
        /// Word length for the translation-difference sets.
        #[arg(long, default_value_t = 6)]
        fset_n: usize,
    },
    /// Weighted neighbor-type graph, optionally written as DOT.
    Graph {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Report the class decomposition and cluster the essential class.
        #[arg(long)]
        essential: bool,
        /// Build from the system alone, without transition weights.
        #[arg(long)]
        no_weights: bool,
    },
    /// Local dimension at a point or along a symbolic path.
    Localdim {
        file: PathBuf,
        /// Comma-separated rational coordinates.
        #[arg(
            long,
            conflicts_with = "path",
            required_unless_present = "path",
            allow_hyphen_values = true
        )]
        point: Option<String>,
        /// Vertex labels from the root, e.g. `A,5,(5)`.
        #[arg(long)]
        path: Option<String>,
        #[arg(long, default_value_t = 32)]
        depth: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::NetIntervals { .. } => "net-intervals",
            Command::Check { .. } => "check",
            Command::Graph { .. } => "graph",
            Command::Localdim { .. } => "localdim",
        }
    }

    fn file(&self) -> &Path {
        match self {
            Command::Validate { file }
            | Command::NetIntervals { file, .. }
            | Command::Check { file, .. }
            | Command::Graph { file, .. }
            | Command::Localdim { file, .. } => file,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID: i32 = 1;
    pub const CAP_REACHED: i32 = 2;
    pub const INVARIANT: i32 = 3;
}

/// Rendered output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Failure carried to the report, with its exit code.
struct Failure {
    code: i32,
    info: ErrorInfo,
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure {
            code: exit::INVALID,
            info: ErrorInfo {
                kind: "parse",
                field: e.field_path().map(str::to_string),
                message: e.to_string(),
            },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::CapExceeded(_) => (exit::CAP_REACHED, "cap_reached"),
            Error::InvariantViolation(_) => (exit::INVARIANT, "invariant_violation"),
            Error::TechnicalAssumption(_) => (exit::INVALID, "technical_assumption"),
            Error::NotEquicontractive => (exit::INVALID, "technical_assumption"),
            _ => (exit::INVALID, "invalid_input"),
        };
        Failure {
            code,
            info: ErrorInfo {
                kind,
                field: None,
                message: e.to_string(),
            },
        }
    }
}

fn usage(field: &str, message: impl Into<String>) -> Failure {
    Failure {
        code: exit::INVALID,
        info: ErrorInfo {
            kind: "invalid_argument",
            field: Some(field.into()),
            message: message.into(),
        },
    }
}

/// Command results: JSON, a CSV table, and an exit code for partial output.
struct Done {
    results: Value,
    table: Vec<Vec<String>>,
    code: i32,
}

pub fn run(cli: &Cli) -> Outcome {
    let mut report = Report::new(cli.command.name());
    report
        .parameters
        .insert("max_levels", json!(cli.max_levels));
    report.parameters.insert("max_types", json!(cli.max_types));
    report.parameters.insert("k_depth", json!(cli.k_depth));
    let result = std::fs::read(cli.command.file())
        .map_err(|e| {
            usage(
                "file",
                format!("cannot read {}: {e}", cli.command.file().display()),
            )
        })
        .and_then(|bytes| {
            report.input_sha256 = Some(hex::encode(Sha256::digest(&bytes)));
            let text = String::from_utf8(bytes).map_err(|_| usage("file", "input is not UTF-8"))?;
            let doc = parse_document(&text)?;
            execute(cli, &doc, &mut report)
        });
    let (code, table) = match result {
        Ok(done) => {
            report.results = done.results;
            (done.code, done.table)
        }
        Err(f) => {
            let table = vec![
                vec!["error".into(), "field".into(), "message".into()],
                vec![
                    f.info.kind.into(),
                    f.info.field.clone().unwrap_or_default(),
                    f.info.message.clone(),
                ],
            ];
            report.error = Some(f.info);
            (f.code, table)
        }
    };
    let stdout = match cli.output {
        Format::Json => report.to_json(),
        Format::Csv => to_csv(&table),
    };
    Outcome { code, stdout }
}

fn opts(cli: &Cli) -> ExploreOptions {
    ExploreOptions {
        max_levels: cli.max_levels,
        max_types: cli.max_types,
        k_depth: cli.k_depth,
    }
}

fn parse_rational(field: &str, s: &str) -> Result<Rational, Failure> {
    s.parse()
        .map_err(|_| usage(field, format!("\"{s}\" is not an exact rational p/q")))
}

fn execute(cli: &Cli, doc: &IfsDocument, report: &mut Report) -> Result<Done, Failure> {
    match &cli.command {
        Command::Validate { .. } => cmd_validate(cli, doc),
        Command::NetIntervals { alpha, level, .. } => {
            let alpha = match (alpha, level) {
                (Some(a), _) => parse_rational("alpha", a)?,
                (None, Some(n)) => doc.sys.level_step().0.pow(*n as i32),
                (None, None) => return Err(usage("alpha", "give --alpha or --level")),
            };
            report.parameters.insert("alpha", json!(alpha.to_string()));
            cmd_net_intervals(cli, doc, &alpha, report)
        }
        Command::Check {
            fnc,
            wsc,
            gftc,
            fset,
            overlap_floor,
            levels,
            gftc_alpha,
            fset_n,
            ..
        } => {
            let none = !(*fnc || *wsc || *gftc || *fset || *overlap_floor);
            let which = Which {
                fnc: *fnc || none,
                wsc: *wsc || none,
                gftc: *gftc || none,
                fset: *fset || none,
                overlap: *overlap_floor || none,
            };
            let step = doc.sys.level_step().0.clone();
            let gftc_alpha = match gftc_alpha {
                Some(a) => parse_rational("gftc_alpha", a)?,
                None => step.pow(*levels as i32),
            };
            report.parameters.insert("levels", json!(levels));
            report
                .parameters
                .insert("gftc_alpha", json!(gftc_alpha.to_string()));
            report.parameters.insert("fset_n", json!(fset_n));
            cmd_check(cli, doc, &which, *levels, &gftc_alpha, *fset_n, report)
        }
        Command::Graph {
            dot,
            essential,
            no_weights,
            ..
        } => {
            report.parameters.insert("essential", json!(essential));
            report.parameters.insert("no_weights", json!(no_weights));
            cmd_graph(cli, doc, dot.as_deref(), *essential, *no_weights)
        }
        Command::Localdim {
            point, path, depth, ..
        } => {
            report.parameters.insert("depth", json!(depth));
            if let Some(p) = point {
                report.parameters.insert("point", json!(p));
            }
            if let Some(p) = path {
                report.parameters.insert("path", json!(p));
            }
            cmd_localdim(cli, doc, point.as_deref(), path.as_deref(), *depth, report)
        }
    }
}

fn cmd_validate(cli: &Cli, doc: &IfsDocument) -> Result<Done, Failure> {
    let v = validate(&doc.sys, cli.k_depth);
    let mut results = serde_json::to_value(&v).expect("serializable");
    if let Some(mu) = doc.measure() {
        let check = mu.assumptions(None);
        results["probabilities"] = json!(mu.probs());
        results["assumptions"] = json!({
            "k_is_cube": check.k_is_cube,
            "equicontractive": check.equicontractive,
            "boundary_pmin": check.boundary_pmin,
            "first_failure": check.first_failure(),
        });
    }
    let mut table = vec![vec!["field".to_string(), "value".to_string()]];
    if let Value::Object(m) = &results {
        for (k, v) in m {
            table.push(vec![k.clone(), cell(v)]);
        }
    }
    Ok(Done {
        results,
        table,
        code: exit::OK,
    })
}

fn sim_strings(maps: &[Similarity]) -> Vec<String> {
    maps.iter().map(ToString::to_string).collect()
}

fn cmd_net_intervals(
    cli: &Cli,
    doc: &IfsDocument,
    alpha: &Rational,
    report: &mut Report,
) -> Result<Done, Failure> {
    let net = net_intervals_at(&doc.sys, alpha, cli.k_depth)?;
    if !net.k_exact {
        report.warnings.push(format!(
            "attractor approximated by depth-{} words; intervals are approximate",
            net.k_depth
        ));
    }
    let mut sets = Vec::new();
    let mut types = Vec::new();
    let mut rows = Vec::new();
    let mut table = vec![[
        "index",
        "side",
        "anchor",
        "components",
        "cells",
        "cover",
        "neighbor_set",
        "type",
    ]
    .map(String::from)
    .to_vec()];
    for (i, n) in net.intervals.iter().enumerate() {
        let ns = n.neighbor_set();
        let set_id = sets.iter().position(|s| s == &ns).unwrap_or_else(|| {
            sets.push(ns.clone());
            sets.len() - 1
        });
        let key = n.type_key();
        let type_id = types.iter().position(|k| k == &key).unwrap_or_else(|| {
            types.push(key.clone());
            types.len() - 1
        });
        let words: Vec<String> = n.cover_words().iter().map(ToString::to_string).collect();
        table.push(vec![
            i.to_string(),
            n.side().to_string(),
            n.anchor().to_string(),
            n.region.component_count().to_string(),
            n.region.to_string(),
            words.join(" "),
            set_id.to_string(),
            type_id.to_string(),
        ]);
        rows.push(json!({
            "index": i,
            "cells": n.region.cells(),
            "components": n.region.component_count(),
            "volume": n.region.volume(),
            "side": n.side(),
            "anchor": n.anchor(),
            "cover": n.cover.iter().map(|c| json!({
                "map": c.map.to_string(),
                "words": c.words.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "neighbor_set": set_id,
            "type": type_id,
        }));
    }
    let results = json!({
        "alpha": alpha,
        "k_exact": net.k_exact,
        "count": net.intervals.len(),
        "distinct_neighbor_sets": sets.len(),
        "distinct_types": types.len(),
        "intervals": rows,
        "neighbor_sets": sets.iter().map(|s| sim_strings(s.maps())).collect::<Vec<_>>(),
    });
    Ok(Done {
        results,
        table,
        code: exit::OK,
    })
}

struct Which {
    fnc: bool,
    wsc: bool,
    gftc: bool,
    fset: bool,
    overlap: bool,
}

fn fnc_json(rep: &FncReport) -> Value {
    json!({
        "status": rep.status,
        "types": rep.types.len(),
        "edges": rep.edges.len(),
        "max_neighbors": rep.max_neighbors(),
        "closure_level": rep.closure_level,
        "levels_explored": rep.levels_explored,
        "step": rep.step,
        "step_exact": rep.step_exact,
        "k_exact": rep.k_exact,
        "type_list": rep.types.iter().map(|t| json!({
            "label": t.label,
            "depth": t.depth,
            "neighbors": sim_strings(t.neighbors().maps()),
            "region": t.key.region.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_check(
    cli: &Cli,
    doc: &IfsDocument,
    which: &Which,
    levels: u32,
    gftc_alpha: &Rational,
    fset_n: usize,
    report: &mut Report,
) -> Result<Done, Failure> {
    let sys = &doc.sys;
    let step = sys.level_step().0.clone();
    let table_levels: Vec<Rational> = (1..=levels as i32).map(|k| step.pow(k)).collect();
    let mut results = serde_json::Map::new();
    let mut code = exit::OK;
    let needs_fnc = which.fnc || which.gftc;
    let fnc = needs_fnc.then(|| explore_fnc(sys, &opts(cli)));
    if let (true, Some(rep)) = (which.fnc, &fnc) {
        if rep.status == FncStatus::CapReached {
            code = exit::CAP_REACHED;
            report
                .warnings
                .push("cap_reached: exploration stopped before closing".into());
        }
        if !rep.k_exact {
            report.warnings.push(format!(
                "attractor approximated by depth-{} words",
                cli.k_depth
            ));
        }
        results.insert("fnc".into(), fnc_json(rep));
    }
    if which.wsc {
        let w = wsc_bound(sys, &table_levels, cli.k_depth)?;
        results.insert(
            "wsc".into(),
            serde_json::to_value(&w).expect("serializable"),
        );
    }
    if which.gftc {
        let closed = fnc.as_ref().filter(|r| r.status == FncStatus::FncDetected);
        let g = gftc_set(sys, gftc_alpha, closed)?;
        results.insert(
            "gftc".into(),
            json!({
                "elements": sim_strings(&g.elements),
                "size": g.elements.len(),
                "truncation_alpha": g.truncation_alpha,
                "cumulative_sizes": g.cumulative_sizes,
                "contains_identity": g.contains_identity,
                "inverse_closed": g.inverse_closed,
                "witness_size": g.witness.as_ref().map(Vec::len),
                "contained_in_witness": g.contained_in_witness,
            }),
        );
        if which.overlap {
            insert_overlap(sys, &table_levels, Some(&g), &mut results, report);
        }
    } else if which.overlap {
        insert_overlap(sys, &table_levels, None, &mut results, report);
    }
    if which.fset {
        match fset_characterization(sys, fset_n) {
            Ok(f) => {
                results.insert(
                    "fset".into(),
                    json!({
                        "size": f.elements.len(),
                        "cumulative_sizes": f.cumulative_sizes,
                        "stabilized": f.stabilized,
                    }),
                );
            }
            Err(Error::NotEquicontractive) => {
                report
                    .warnings
                    .push("fset skipped: system is not equicontractive".into());
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut table = vec![vec![
        "condition".to_string(),
        "key".to_string(),
        "value".to_string(),
    ]];
    for (cond, v) in &results {
        if let Value::Object(m) = v {
            for (k, x) in m {
                if !x.is_array() && !x.is_object() {
                    table.push(vec![cond.clone(), k.clone(), cell(x)]);
                }
            }
        }
    }
    Ok(Done {
        results: Value::Object(results),
        table,
        code,
    })
}

fn insert_overlap(
    sys: &fracnet::ifs::IfsSystem,
    levels: &[Rational],
    gftc: Option<&fracnet::conditions::GftcSet>,
    results: &mut serde_json::Map<String, Value>,
    report: &mut Report,
) {
    match overlap_floor(sys, levels, gftc) {
        Ok(o) => {
            results.insert(
                "overlap_floor".into(),
                serde_json::to_value(&o).expect("serializable"),
            );
        }
        Err(e) => report.warnings.push(format!("overlap floor skipped: {e}")),
    }
}

fn graph_for(cli: &Cli, doc: &IfsDocument, weighted: bool) -> Result<QuotientGraph, Failure> {
    if !weighted {
        return Ok(build_graph_only(&doc.sys, &opts(cli))?);
    }
    let mu = doc.measure().ok_or_else(|| Failure {
        code: exit::INVALID,
        info: ErrorInfo {
            kind: "technical_assumption",
            field: Some("probabilities".into()),
            message: "weighted analysis needs probabilities; use --no-weights for the graph alone"
                .into(),
        },
    })?;
    Ok(build_graph(&mu, &opts(cli))?)
}

fn classes_json(g: &QuotientGraph, c: &ClassDecomposition) -> Value {
    let labels = |vs: &[usize]| {
        vs.iter()
            .map(|&v| g.label(v).to_string())
            .collect::<Vec<_>>()
    };
    json!({
        "sccs": c.sccs.iter().map(|s| labels(s)).collect::<Vec<_>>(),
        "loop_classes": c.loop_classes.iter().map(|&i| labels(&c.sccs[i])).collect::<Vec<_>>(),
        "essential": c.essential_vertices().map(labels),
        "transient": labels(&c.transient()),
    })
}

fn cmd_graph(
    cli: &Cli,
    doc: &IfsDocument,
    dot: Option<&Path>,
    essential: bool,
    no_weights: bool,
) -> Result<Done, Failure> {
    let g = graph_for(cli, doc, !no_weights)?;
    let classes = if essential {
        Some(class_decomposition(&g)?)
    } else {
        None
    };
    let mut results = json!({
        "weighted": g.is_weighted(),
        "vertex_count": g.vertex_count(),
        "edge_count": g.edges.len(),
        "vertices": g.vertices().iter().map(|t| json!({
            "label": t.label,
            "depth": t.depth,
            "neighbors": sim_strings(t.neighbors().maps()),
        })).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| {
            let mut v = json!({"from": g.label(e.from), "to": g.label(e.to)});
            if g.is_weighted() {
                v["matrix"] = json!(e.matrix.symbolic());
                v["entries"] = json!(e.matrix.entries);
            }
            v
        }).collect::<Vec<_>>(),
    });
    if let Some(c) = &classes {
        results["classes"] = classes_json(&g, c);
    }
    if let Some(path) = dot {
        let text = to_dot(&g, classes.as_ref(), !no_weights);
        std::fs::write(path, &text)
            .map_err(|e| usage("dot", format!("cannot write {}: {e}", path.display())))?;
        results["dot"] = json!({
            "path": path.display().to_string(),
            "sha256": hex::encode(Sha256::digest(text.as_bytes())),
        });
    }
    let mut table = vec![["from", "to", "matrix"].map(String::from).to_vec()];
    for e in &g.edges {
        table.push(vec![
            g.label(e.from).to_string(),
            g.label(e.to).to_string(),
            if g.is_weighted() {
                e.matrix.symbolic()
            } else {
                String::new()
            },
        ]);
    }
    Ok(Done {
        results,
        table,
        code: exit::OK,
    })
}

fn parse_point(s: &str) -> Result<RatVec, Failure> {
    s.split(',')
        .map(|c| parse_rational("point", c))
        .collect::<Result<Vec<_>, _>>()
        .map(RatVec::new)
}

fn cmd_localdim(
    cli: &Cli,
    doc: &IfsDocument,
    point: Option<&str>,
    path: Option<&str>,
    depth: usize,
    report: &mut Report,
) -> Result<Done, Failure> {
    if depth == 0 {
        return Err(usage("depth", "depth must be positive"));
    }
    let g = graph_for(cli, doc, true)?;
    let dim: DimReport = match (point, path) {
        (Some(p), _) => local_dimension_at(&g, &parse_point(p)?, depth)?,
        (None, Some(p)) => {
            let spec = PathSpec::parse(&g, p).map_err(|e| usage("path", e.to_string()))?;
            local_dimension(&g, &spec, depth)?
        }
        (None, None) => return Err(usage("point", "give --point or --path")),
    };
    report.warnings.extend(dim.warnings.iter().cloned());
    let mut table = vec![["n", "pn", "estimate"].map(String::from).to_vec()];
    for e in &dim.estimates {
        table.push(vec![e.n.to_string(), e.pn.to_string(), e.decimal.clone()]);
    }
    if let Some(c) = &dim.certificate {
        let exact = c
            .exact
            .as_ref()
            .map_or(c.decimal.clone(), ToString::to_string);
        table.push(vec!["limit".into(), String::new(), exact]);
    }
    let mut results = serde_json::to_value(&dim).expect("serializable");
    if let Value::Object(m) = &mut results {
        m.remove("warnings");
    }
    Ok(Done {
        results,
        table,
        code: exit::OK,
    })
}

/// Parses arguments, mapping usage errors to exit code 1.
pub fn parse_args<I, T>(args: I) -> Result<Cli, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map_err(|e| {
        let code = if e.use_stderr() {
            exit::INVALID
        } else {
            exit::OK
        };
        Outcome {
            code,
            stdout: e.render().to_string(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(name: &str) -> String {
        format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn invoke(args: &[&str]) -> (i32, Value) {
        let cli = parse_args(std::iter::once("fracnet").chain(args.iter().copied())).unwrap();
        let out = run(&cli);
        (out.code, serde_json::from_str(&out.stdout).unwrap())
    }

    fn temp_doc(text: &str) -> tempfile::NamedTempFile {
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), text).unwrap();
        file
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        let err = parse_args(["fracnet", "check", "x.json", "--bogus"]).unwrap_err();
        assert_eq!(err.code, exit::INVALID);
    }

    #[test]
    fn missing_file_is_reported_not_panicked() {
        let (code, v) = invoke(&["validate", "/nonexistent/doc.json"]);
        assert_eq!(code, exit::INVALID);
        assert_eq!(v["error"]["field"], "file");
    }

    #[test]
    fn whole_cube_at_alpha_one() {
        let (code, v) = invoke(&[
            "net-intervals",
            &data("overlapping_center_2d.json"),
            "--alpha",
            "1",
        ]);
        assert_eq!(code, exit::OK);
        assert_eq!(v["results"]["count"], 1);
        assert_eq!(v["results"]["intervals"][0]["volume"], "1");
    }

    #[test]
    fn type_cap_exits_with_partials() {
        let (code, v) = invoke(&[
            "check",
            &data("overlapping_center_2d.json"),
            "--fnc",
            "--max-types",
            "1",
        ]);
        assert_eq!(code, exit::CAP_REACHED);
        assert_eq!(v["results"]["fnc"]["status"], "cap_reached");
        assert!(v["warnings"][0]
            .as_str()
            .unwrap()
            .starts_with("cap_reached"));
    }

    #[test]
    fn boundary_weight_refusal_names_the_clause() {
        let doc = temp_doc(
            r#"{"dim": 2, "maps": [
                {"ratio": "1/2", "translation": ["-1/4", "1/4"]},
                {"ratio": "1/2", "translation": ["-1/4", "-1/4"]},
                {"ratio": "1/2", "translation": ["1/4", "-1/4"]},
                {"ratio": "1/2", "translation": ["1/4", "1/4"]},
                {"ratio": "1/2", "translation": ["0", "0"]}],
               "probabilities": ["1/16", "1/8", "3/16", "1/4", "3/8"]}"#,
        );
        let path = doc.path().to_str().unwrap();
        let (code, v) = invoke(&["graph", path]);
        assert_eq!(code, exit::INVALID);
        assert_eq!(v["error"]["kind"], "technical_assumption");
        assert!(v["error"]["message"]
            .as_str()
            .unwrap()
            .contains("p_j=p_min"));
        let (code, v) = invoke(&["graph", path, "--no-weights"]);
        assert_eq!(code, exit::OK);
        assert_eq!(v["results"]["vertex_count"], 9);
    }

    #[test]
    fn shallow_depth_warns_and_skips_certificate() {
        let (code, v) = invoke(&[
            "localdim",
            &data("overlapping_center_2d.json"),
            "--path",
            "A,5,(5)",
            "--depth",
            "1",
        ]);
        assert_eq!(code, exit::OK);
        assert!(v["results"]["certificate"].is_null());
        assert!(!v["warnings"].as_array().unwrap().is_empty());
    }

    #[test]
    fn bad_point_names_the_argument() {
        let (code, v) = invoke(&["localdim", &data("lebesgue_1d.json"), "--point", "0.3"]);
        assert_eq!(code, exit::INVALID);
        assert_eq!(v["error"]["field"], "point");
    }
}
