//! Command implementations behind the `hypercx` binary.
//!
//! Every command returns an [`Outcome`]: a JSON result, a human-readable
//! text block and a pass/fail verdict. [`run`] wraps it in a versioned
//! [`RunReport`].

pub mod curve;
pub mod table1;

use clap::{Args, Parser, Subcommand};
use hypercx_core::{ExactMatrix, Rational};
use hypercx_geometry::{
    analyze, analyze_auto, form_summary, GeometryOptions, GeometryReport, DEFAULT_DEFINITION_CAP, DEFAULT_PSI_CAP,
};
use hypercx_joyce::{
    hypercomplex_structure, hyperholomorphic_check, verify_bracket_inclusions, verify_integrability,
    verify_joyce_relations, GroupSpec, JoyceDecomposition, JoyceStructure, ParameterMatrix, Report,
};
use hypercx_obata::{
    curvature, find_parallel_subspaces, holonomy_algebra, joyce_connection, verify_euler, verify_nabla_e1, Connection,
    CurvatureTensor, HolonomyResult, InvariantSubspace, Method, DEFAULT_MAX_DEPTH,
};
use hypercx_rootsys::diagram_joyce_decomposition;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

/// Version tag of the JSON layout.
pub const SCHEMA: &str = "hypercx.run/1";

/// Default cap on the ambient dimension for connection computations.
pub const DEFAULT_DIM_CAP: usize = 64;

/// Environment variable overriding [`DEFAULT_DIM_CAP`].
pub const DIM_CAP_ENV: &str = "OBATA_DIM_CAP";

/// Command-line interface.
#[derive(Debug, Parser)]
#[command(name = "hypercx", version, about = "Joyce hypercomplex structures, Obata holonomy and HKT geometry")]
pub struct Cli {
    /// Write the machine-readable report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Joyce decomposition of a group, from roots or realized.
    Decompose(DecomposeArgs),
    /// Trivial f_j counts for all simple types up to a rank.
    Table1(Table1Args),
    /// Holonomy algebra of the Obata connection.
    Holonomy(HolonomyArgs),
    /// Holonomy along a curve of parameter matrices.
    Sweep(SweepArgs),
    /// Lee form, Obata-Ricci tensor and twisted Calabi-Yau checks.
    Geometry(GeometryArgs),
}

/// Group selection.
#[derive(Debug, Clone, Args, Serialize)]
pub struct GroupArgs {
    /// su, so, sp, e, e6, e7, e8, f4, g2 or hopf.
    #[arg(long)]
    pub family: String,
    /// Matrix size for su/so/sp, rank for e.
    #[arg(long)]
    pub n: Option<usize>,
    /// Torus dimension; must equal 2m - r when given.
    #[arg(long)]
    pub torus: Option<usize>,
}

/// Arguments of `decompose`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct DecomposeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArgs,
    /// Use the root recursion only.
    #[arg(long, conflicts_with = "realize")]
    pub diagram_only: bool,
    /// Build structure constants even for E6, E7, E8 and F4.
    #[arg(long)]
    pub realize: bool,
    /// Parameter matrix for the structure checks, e.g. "0,1;1,0".
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Include the adapted frame vectors.
    #[arg(long)]
    pub emit_basis: bool,
}

/// Arguments of `table1`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct Table1Args {
    /// Largest rank to tabulate.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..=16))]
    pub max_rank: u64,
}

/// Arguments of `holonomy`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct HolonomyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArgs,
    /// Parameter matrix, e.g. "0,1;1,0". Identity by default.
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    /// filtration or alekseevskii.
    #[arg(long, default_value = "filtration")]
    pub method: String,
    /// Bound on closure steps.
    #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
    pub max_depth: usize,
    /// Include a basis of the holonomy algebra.
    #[arg(long)]
    pub emit_basis: bool,
    /// Include the connection 1-form matrix.
    #[arg(long)]
    pub emit_theta: bool,
}

/// Arguments of `sweep`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArgs,
    /// Matrix of rational functions of t, e.g. "t,1-t;1+t,-t".
    #[arg(long, allow_hyphen_values = true)]
    pub curve: String,
    /// Values "0,1/2,1" or "a:b:count".
    #[arg(long = "t", allow_hyphen_values = true)]
    pub t_values: String,
    /// filtration or alekseevskii.
    #[arg(long, default_value = "filtration")]
    pub method: String,
    /// Bound on closure steps.
    #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
    pub max_depth: usize,
}

/// Arguments of `geometry`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct GeometryArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArgs,
    /// Rational parameter matrix; a compatible one is searched otherwise.
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Run the HKT, strong HKT and twisted Calabi-Yau checks.
    #[arg(long)]
    pub twisted_cy: bool,
    /// Largest quaternionic dimension for the holomorphic volume form.
    #[arg(long, default_value_t = DEFAULT_PSI_CAP)]
    pub psi_cap: usize,
    /// Largest quaternionic dimension for solving the Lee form from its definition.
    #[arg(long, default_value_t = DEFAULT_DEFINITION_CAP)]
    pub definition_cap: usize,
    /// Torus values of lambda_j^2, comma separated; checked against the metric.
    #[arg(long)]
    pub torus_lambdas: Option<String>,
}

/// Errors that abort a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input.
    #[error("{0}")]
    Input(String),
    /// The request exceeds a configured limit.
    #[error("{0}")]
    Unsupported(String),
    /// Computation error.
    #[error("{0}")]
    Compute(String),
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

/// Result of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    /// Normalised inputs.
    pub inputs: Value,
    /// Machine-readable result.
    pub result: Value,
    /// Every requested verification passed and every computation stabilized.
    pub passed: bool,
    /// Human-readable summary.
    pub text: String,
}

/// Versioned envelope written with `--json`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    /// Layout version.
    pub schema: &'static str,
    /// Tool name and version.
    pub tool: Value,
    /// Command name.
    pub command: String,
    /// Arguments as given.
    pub argv: Vec<String>,
    /// Normalised inputs.
    pub inputs: Value,
    /// Command output.
    pub result: Value,
    /// Error message when the command aborted.
    pub error: Option<String>,
    /// Overall verdict.
    pub passed: bool,
    /// Wall-clock time.
    pub timing: Value,
}

impl RunReport {
    /// Process exit code: 0 on pass, 1 on a failed verification, 2 on error.
    pub fn exit_code(&self) -> i32 {
        match (&self.error, self.passed) {
            (Some(_), _) => 2,
            (None, true) => 0,
            (None, false) => 1,
        }
    }
}

/// Ambient-dimension cap from the environment.
pub fn dim_cap() -> usize {
    std::env::var(DIM_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

/// Runs a parsed command line and returns the report and its text.
pub fn run(cli: &Cli, argv: Vec<String>) -> (RunReport, String) {
    let start = Instant::now();
    let (name, res) = match &cli.command {
        Command::Decompose(a) => ("decompose", cmd_decompose(a)),
        Command::Table1(a) => ("table1", cmd_table1(a)),
        Command::Holonomy(a) => ("holonomy", cmd_holonomy(a, dim_cap())),
        Command::Sweep(a) => ("sweep", cmd_sweep(a, dim_cap())),
        Command::Geometry(a) => ("geometry", cmd_geometry(a, dim_cap())),
    };
    let secs = start.elapsed().as_secs_f64();
    let tool = json!({"name": "hypercx", "version": env!("CARGO_PKG_VERSION")});
    let timing = json!({ "wall_seconds": secs });
    match res {
        Ok(o) => (
            RunReport {
                schema: SCHEMA,
                tool,
                command: name.into(),
                argv,
                inputs: o.inputs,
                result: o.result,
                error: None,
                passed: o.passed,
                timing,
            },
            o.text,
        ),
        Err(e) => {
            (
                RunReport {
                    schema: SCHEMA,
                    tool,
                    command: name.into(),
                    argv,
                    inputs: Value::Null,
                    result: Value::Null,
                    error: Some(e.to_string()),
                    passed: false,
                    timing,
                },
                String::new(),
            )
        }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| strings(&m.row(r))).collect()
}

fn matrix_text(m: &ExactMatrix) -> String {
    matrix_rows(m)
        .iter()
        .map(|r| r.join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_group(g: &GroupArgs) -> Result<GroupSpec, CliError> {
    GroupSpec::parse(&g.family, g.n, g.torus).map_err(input)
}

fn parse_method(s: &str) -> Result<Method, CliError> {
    s.parse().map_err(CliError::Input)
}

fn parameter(d: &JoyceDecomposition, a: Option<&str>) -> Result<ParameterMatrix, CliError> {
    let p = match a {
        Some(s) => ParameterMatrix::parse(s).map_err(input)?,
        None => ParameterMatrix::identity(d.m),
    };
    if p.size() != d.m {
        return Err(CliError::Input(format!(
            "parameter matrix is {0}x{0}, {1} needs {2}x{2}",
            p.size(),
            d.name,
            d.m
        )));
    }
    Ok(p)
}

fn check_cap(d: &JoyceDecomposition, cap: usize) -> Result<(), CliError> {
    if d.dim() > cap {
        return Err(CliError::Unsupported(format!(
            "ambient dimension {} of {} exceeds the cap {cap}; raise {DIM_CAP_ENV} to proceed",
            d.dim(),
            d.name
        )));
    }
    Ok(())
}

fn report_text(out: &mut String, r: &Report) {
    for c in &r.checks {
        let _ = writeln!(
            out,
            "  [{}] {}{}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }
        );
    }
}

/// Structural verifiers of a realized decomposition and structure.
pub fn structure_checks(d: &JoyceDecomposition, s: &JoyceStructure) -> Report {
    let mut r = Report::new();
    r.extend_prefixed("joyce", verify_joyce_relations(d));
    r.extend_prefixed("inclusions", verify_bracket_inclusions(d));
    r.extend_prefixed("quaternion", s.triple.quaternion_relations());
    r.extend_prefixed("integrability", verify_integrability(&s.triple, &d.ambient));
    r.extend_prefixed("hyperholomorphic", hyperholomorphic_check(d, &s.triple));
    r
}

/// `decompose`.
pub fn cmd_decompose(args: &DecomposeArgs) -> Result<Outcome, CliError> {
    let spec = parse_group(&args.group)?;
    let (letter, rank) = spec.root_type().map_err(input)?;
    let diagram = diagram_joyce_decomposition(letter, rank).map_err(compute)?;
    if let Some(t) = spec.torus {
        if t != diagram.ell {
            return Err(CliError::Input(format!("torus dimension must be {}, got {t}", diagram.ell)));
        }
    }
    let realize = !args.diagram_only && (args.realize || !spec.is_exceptional());
    let mut text = format!("{spec}: type {letter}{rank}, torus T^{}\n", diagram.ell);
    let _ = writeln!(text, "  layer  f_hdim");
    for l in &diagram.layers {
        let _ = writeln!(text, "  {:>5}  {:>6}", l.d_index, l.f_quaternionic_dim);
    }
    let _ = writeln!(
        text,
        "  m = {}, dim b = {}, trivial f = {}",
        diagram.m, diagram.b_dim, diagram.trivial_f_count
    );
    let mut result = json!({ "group": spec.to_string(), "diagram": diagram });
    let mut passed = true;
    if realize {
        let d = spec.decompose().map_err(compute)?;
        let a = parameter(&d, args.a.as_deref())?;
        let s = hypercomplex_structure(&d, &a).map_err(compute)?;
        let mut checks = structure_checks(&d, &s);
        let realized: Vec<usize> = d.f_hdims();
        let expected: Vec<usize> = diagram.layers.iter().map(|l| l.f_quaternionic_dim).collect();
        checks.push(
            "diagram_agreement",
            realized == expected && d.b_dim() == diagram.b_dim && d.ell == diagram.ell,
            format!("realized f_hdims {realized:?}, root recursion {expected:?}"),
        );
        passed = checks.passed();
        let mut realized_json = json!({
            "dim": d.dim(),
            "quaternionic_dim": d.quaternionic_dim(),
            "ell": d.ell,
            "m": d.m,
            "b_dim": d.b_dim(),
            "f_hdims": realized,
            "parameter": matrix_rows(a.matrix()),
            "checks": checks,
        });
        if args.emit_basis {
            let frame = &s.frame;
            realized_json["basis"] = json!({
                "labels": d.frame_labels(),
                "vectors": (0..frame.cols()).map(|c| strings(&frame.column(c))).collect::<Vec<_>>(),
            });
        }
        result["realized"] = realized_json;
        let _ = writeln!(text, "realized: dim {} (H^{}), A = {}", d.dim(), d.quaternionic_dim(), matrix_text(a.matrix()));
        report_text(&mut text, &checks);
    }
    Ok(Outcome {
        inputs: serde_json::to_value(args).expect("serializable"),
        result,
        passed,
        text,
    })
}

/// `table1`.
pub fn cmd_table1(args: &Table1Args) -> Result<Outcome, CliError> {
    let rows = table1::table(args.max_rank as usize).map_err(compute)?;
    let passed = rows.iter().all(|r| r.matches);
    let mut text = format!("{:<10} {:>4} {:>4} {:>9} {:>9}  {}\n", "group", "rank", "m", "trivial_f", "expected", "rule");
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<10} {:>4} {:>4} {:>9} {:>9}  {}{}",
            r.group,
            r.rank,
            r.m,
            r.trivial_f,
            r.expected,
            r.rule,
            if r.matches { "" } else { "  MISMATCH" }
        );
    }
    let mismatches: Vec<&str> = rows.iter().filter(|r| !r.matches).map(|r| r.group.as_str()).collect();
    let _ = writeln!(text, "{} rows, {} mismatches", rows.len(), mismatches.len());
    Ok(Outcome {
        inputs: serde_json::to_value(args).expect("serializable"),
        result: json!({ "rows": rows, "mismatches": mismatches }),
        passed,
        text,
    })
}

/// Connection, curvature and holonomy of one realized structure.
pub struct HolonomyRun {
    /// Decomposition.
    pub d: JoyceDecomposition,
    /// Hypercomplex structure.
    pub s: JoyceStructure,
    /// Obata connection in the frame.
    pub c: Connection,
    /// Curvature.
    pub r: CurvatureTensor,
    /// Holonomy algebra.
    pub h: HolonomyResult,
    /// Candidate parallel subspaces.
    pub subspaces: Vec<InvariantSubspace>,
}

/// Runs the connection pipeline for `d` and `a`.
pub fn holonomy_run(
    d: JoyceDecomposition,
    a: &ParameterMatrix,
    method: Method,
    max_depth: usize,
) -> Result<HolonomyRun, CliError> {
    let s = hypercomplex_structure(&d, a).map_err(compute)?;
    let c = joyce_connection(&s).map_err(compute)?;
    let r = curvature(&c, &s.frame_algebra);
    let h = holonomy_algebra(&c, &r, method, max_depth);
    let subspaces = find_parallel_subspaces(&c, &d);
    Ok(HolonomyRun { d, s, c, r, h, subspaces })
}

fn lemma_checks(run: &HolonomyRun) -> Report {
    let mut r = Report::new();
    r.extend_prefixed("connection", run.c.verify(&run.s.frame_algebra));
    r.extend_prefixed("nabla_e1", verify_nabla_e1(&run.c, &run.d));
    r.extend_prefixed("euler", verify_euler(&run.c, &run.d));
    let b = run.r.bianchi_defects();
    r.push("bianchi", b.is_empty(), format!("{} defects, first {:?}", b.len(), b.first()));
    r
}

fn theta_json(run: &HolonomyRun) -> Value {
    let theta = run.c.connection_form();
    let mut entries = Vec::new();
    for (a, row) in theta.iter().enumerate() {
        for (b, form) in row.iter().enumerate() {
            let terms: Vec<Value> = form
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(x, c)| json!({"idx": [x], "coef": c.to_string()}))
                .collect();
            if !terms.is_empty() {
                entries.push(json!({"row": a, "col": b, "form": {"degree": 1, "terms": terms}}));
            }
        }
    }
    json!({ "labels": run.d.frame_labels(), "entries": entries })
}

/// `holonomy`.
pub fn cmd_holonomy(args: &HolonomyArgs, cap: usize) -> Result<Outcome, CliError> {
    let spec = parse_group(&args.group)?;
    let method = parse_method(&args.method)?;
    let d = spec.decompose().map_err(compute)?;
    check_cap(&d, cap)?;
    let a = parameter(&d, args.a.as_deref())?;
    let run = holonomy_run(d, &a, method, args.max_depth)?;
    let lemmas = lemma_checks(&run);
    let h = &run.h;
    let curvature_dim = run.r.span().dim();
    let parallel: Vec<&InvariantSubspace> = run.subspaces.iter().filter(|s| s.parallel && s.proper).collect();
    let passed = h.stabilized && lemmas.passed();
    let mut result = json!({
        "group": spec.to_string(),
        "dim": run.d.dim(),
        "quaternionic_dim": run.d.quaternionic_dim(),
        "parameter": matrix_rows(a.matrix()),
        "flat": run.r.is_flat(),
        "curvature_span_dim": curvature_dim,
        "holonomy": h,
        "full_gl": h.dim == run.c.rep.coord_dim(),
        "sl_n_h": h.traceless,
        "subspaces": run.subspaces,
        "reducible": !parallel.is_empty(),
        "checks": lemmas,
    });
    if args.emit_basis {
        result["basis"] = json!({
            "encoding": format!("{:?}", h.rep),
            "vectors": h.basis.vectors().iter().map(|v| strings(v)).collect::<Vec<_>>(),
        });
    }
    if args.emit_theta {
        result["theta"] = theta_json(&run);
    }
    let mut text = format!(
        "{spec}, A = {}: dim {} (H^{})\n",
        matrix_text(a.matrix()),
        run.d.dim(),
        run.d.quaternionic_dim()
    );
    let _ = writeln!(text, "  curvature span: {curvature_dim}");
    let _ = writeln!(
        text,
        "  holonomy ({:?}): filtration {:?}, dim {}, depth {}, stabilized {}",
        method, h.filtration, h.dim, h.depth, h.stabilized
    );
    let _ = writeln!(text, "  inside sl(n,H): {}", h.traceless);
    if let Some(b) = &h.blocks {
        let _ = writeln!(text, "  block dims: {:?}", b.block_dims);
    }
    for s in &run.subspaces {
        let _ = writeln!(
            text,
            "  subspace {:<8} dim {:>3}  parallel {}{}",
            s.name,
            s.dim,
            s.parallel,
            if s.parallel && s.proper { " (proper)" } else { "" }
        );
    }
    report_text(&mut text, &lemmas);
    Ok(Outcome {
        inputs: serde_json::to_value(args).expect("serializable"),
        result,
        passed,
        text,
    })
}

/// One sample of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    /// Parameter value.
    pub t: String,
    /// `A_t`, when defined.
    pub parameter: Option<Vec<Vec<String>>>,
    /// `det A_t`, when defined.
    pub det: Option<String>,
    /// Reason the point was skipped.
    pub skipped: Option<String>,
    /// Holonomy filtration.
    pub filtration: Vec<usize>,
    /// Holonomy dimension.
    pub dim: Option<usize>,
    /// Closure stabilized.
    pub stabilized: Option<bool>,
    /// Some proper candidate subspace is parallel.
    pub reducible: Option<bool>,
    /// Names of the proper parallel subspaces.
    pub parallel: Vec<String>,
}

/// `sweep`.
pub fn cmd_sweep(args: &SweepArgs, cap: usize) -> Result<Outcome, CliError> {
    let spec = parse_group(&args.group)?;
    let method = parse_method(&args.method)?;
    let curve = curve::Curve::parse(&args.curve).map_err(input)?;
    let mut ts = curve::parse_t_values(&args.t_values).map_err(input)?;
    ts.sort();
    ts.dedup();
    let d = spec.decompose().map_err(compute)?;
    check_cap(&d, cap)?;
    if curve.size() != d.m {
        return Err(CliError::Input(format!(
            "curve is {0}x{0}, {1} needs {2}x{2}",
            curve.size(),
            d.name,
            d.m
        )));
    }
    let mut points = Vec::new();
    for t in &ts {
        let mut p = SweepPoint {
            t: t.to_string(),
            parameter: None,
            det: None,
            skipped: None,
            filtration: Vec::new(),
            dim: None,
            stabilized: None,
            reducible: None,
            parallel: Vec::new(),
        };
        match curve.at(t) {
            Err(e) => p.skipped = Some(e.to_string()),
            Ok(m) => {
                let det = m.determinant();
                p.parameter = Some(matrix_rows(&m));
                p.det = Some(det.to_string());
                if num_traits::Zero::is_zero(&det) {
                    p.skipped = Some(format!("A_t is singular at t = {t}"));
                } else {
                    let a = ParameterMatrix::new(m).map_err(input)?;
                    let run = holonomy_run(d.clone(), &a, method, args.max_depth)?;
                    p.filtration = run.h.filtration.clone();
                    p.dim = Some(run.h.dim);
                    p.stabilized = Some(run.h.stabilized);
                    p.parallel = run
                        .subspaces
                        .iter()
                        .filter(|s| s.parallel && s.proper)
                        .map(|s| s.name.clone())
                        .collect();
                    p.reducible = Some(!p.parallel.is_empty());
                }
            }
        }
        points.push(p);
    }
    let computed: Vec<&SweepPoint> = points.iter().filter(|p| p.skipped.is_none()).collect();
    let jumps: Vec<Value> = computed
        .windows(2)
        .filter(|w| w[0].dim != w[1].dim || w[0].reducible != w[1].reducible)
        .map(|w| {
            json!({
                "from": w[0].t, "to": w[1].t,
                "dim": [w[0].dim, w[1].dim],
                "reducible": [w[0].reducible, w[1].reducible],
            })
        })
        .collect();
    let passed = computed.iter().all(|p| p.stabilized == Some(true));
    let mut text = String::from("t,det,status,dim,stabilized,reducible,parallel,filtration\n");
    for p in &points {
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{},{}",
            p.t,
            p.det.as_deref().unwrap_or(""),
            p.skipped.as_ref().map_or("ok".to_string(), |s| format!("skipped: {s}")),
            p.dim.map_or(String::new(), |x| x.to_string()),
            p.stabilized.map_or(String::new(), |x| x.to_string()),
            p.reducible.map_or(String::new(), |x| x.to_string()),
            p.parallel.join(" "),
            p.filtration.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        );
    }
    for j in &jumps {
        let t = |k: &str| j[k].as_str().unwrap_or_default().to_string();
        let _ = writeln!(text, "# jump between t = {} and t = {}", t("from"), t("to"));
    }
    Ok(Outcome {
        inputs: serde_json::to_value(args).expect("serializable"),
        result: json!({ "group": spec.to_string(), "points": points, "jumps": jumps }),
        passed,
        text,
    })
}

fn geometry_text(spec: &GroupSpec, r: &GeometryReport) -> String {
    let mut text = format!("{spec} over {}\n", r.field);
    let _ = writeln!(text, "  lambda^2: {}", r.lambdas.join(", "));
    let _ = writeln!(text, "  bi-invariant {}, hyperhermitian {}", r.bi_invariant, r.hyperhermitian);
    let _ = writeln!(
        text,
        "  eta independent of L {}, Ric = d eta {}, Ric = 0 {}",
        r.summary.eta_independent_of_l, r.summary.ricci_is_d_eta, r.summary.ricci_zero
    );
    let def = r.lee_eq_definition.map_or("skipped".to_string(), |b| b.to_string());
    let _ = writeln!(text, "  Lee = eta {}, Lee from definition {def}, d theta = 0 {}", r.lee_eq_eta, r.dtheta_zero);
    if let Some(t) = &r.twisted_cy {
        let _ = writeln!(
            text,
            "  HKT {}, strong {}, dPsi = theta ^ Psi {}, d theta = 0 {}",
            t.hkt, t.strong, t.d_psi, t.dtheta_zero
        );
    }
    text
}

/// `geometry`.
pub fn cmd_geometry(args: &GeometryArgs, cap: usize) -> Result<Outcome, CliError> {
    let spec = parse_group(&args.group)?;
    let d = spec.decompose().map_err(compute)?;
    check_cap(&d, cap)?;
    let torus_lambdas = args
        .torus_lambdas
        .as_deref()
        .map(|s| s.split(',').map(|x| x.trim().parse::<Rational>()).collect::<Result<Vec<_>, _>>())
        .transpose()
        .map_err(input)?;
    let opts = GeometryOptions {
        twisted_cy: args.twisted_cy,
        psi_cap: args.psi_cap,
        torus_lambdas,
        definition_cap: args.definition_cap,
    };
    let report = match &args.a {
        Some(s) => {
            let a = ExactMatrix::parse(s).map_err(input)?;
            analyze(&d, &a, &opts)
        }
        None => analyze_auto(&d, &opts),
    };
    match report {
        Ok(r) => {
            // Every requested equation must hold, including dθ = 0.
            let dtheta_ok = r.twisted_cy.map_or(true, |t| t.dtheta_zero);
            let text = geometry_text(&spec, &r);
            Ok(Outcome {
                inputs: serde_json::to_value(args).expect("serializable"),
                passed: r.passed() && dtheta_ok,
                result: json!({ "group": spec.to_string(), "metric": r }),
                text,
            })
        }
        Err(hypercx_geometry::GeometryError::NoField(msg)) if args.a.is_none() => {
            // No metric over a supported field: report the metric-free part.
            let a = ParameterMatrix::identity(d.m);
            let s = hypercomplex_structure(&d, &a).map_err(compute)?;
            let summary = form_summary(&s.frame_algebra, &s.frame_triple().all().map(|m| m.clone()));
            let mut text = format!("{spec}: no compatible metric ({msg})\n");
            let _ = writeln!(
                text,
                "  eta independent of L {}, Ric = d eta {}, Ric = 0 {}",
                summary.eta_independent_of_l, summary.ricci_is_d_eta, summary.ricci_zero
            );
            Ok(Outcome {
                inputs: serde_json::to_value(args).expect("serializable"),
                passed: false,
                result: json!({
                    "group": spec.to_string(),
                    "metric": null,
                    "metric_error": msg,
                    "metric_free": summary,
                }),
                text,
            })
        }
        Err(e) => Err(compute(e)),
    }
}
