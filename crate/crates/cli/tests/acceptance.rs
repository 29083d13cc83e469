//! Acceptance criteria, one PASS/FAIL line each, with runtime limits.

use hypercx_cli::{holonomy_run, structure_checks, table1, HolonomyRun};
use hypercx_core::{standard_structure, ExactMatrix, Rational, SpanBasis};
use hypercx_geometry::{analyze_auto, form_summary, GeometryError, GeometryOptions};
use hypercx_joyce::{
    sp2_quaternionic_algebra, GroupSpec, HypercomplexTriple, JoyceDecomposition, ParameterMatrix,
};
use hypercx_obata::{
    covariant_derivative_along, curvature, obata_connection, verify_euler, verify_nabla_e1, EndTensor, Method,
    DEFAULT_MAX_DEPTH,
};
use hypercx_rootsys::TypeLetter;
use num_traits::{One, Zero};
use serde_json::Value;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

/// Name, check and runtime limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn decompose(f: &str, n: usize) -> JoyceDecomposition {
    GroupSpec::parse(f, Some(n), None).unwrap().decompose().unwrap()
}

fn run(f: &str, n: usize, a: Option<&str>, method: Method) -> HolonomyRun {
    let d = decompose(f, n);
    let a = a.map_or(ParameterMatrix::identity(d.m), |s| ParameterMatrix::parse(s).unwrap());
    holonomy_run(d, &a, method, DEFAULT_MAX_DEPTH).unwrap()
}

fn unit(d: usize, t: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[t] = Rational::one();
    v
}

// 1 -----------------------------------------------------------------------

fn table_one() -> Outcome {
    use TypeLetter::*;
    let mut cases: Vec<(TypeLetter, usize, usize)> = vec![(G, 2, 1), (F, 4, 1), (E, 6, 1), (E, 7, 4), (E, 8, 4)];
    cases.extend((2..=6).map(|k| (C, k, 1)));
    cases.extend([(B, 3, 2), (B, 4, 2), (B, 5, 3), (B, 6, 3)]);
    cases.extend([(D, 4, 3), (D, 6, 4)]);
    cases.extend([(D, 5, 2), (D, 7, 3)]);
    cases.extend([(A, 3, 1), (A, 5, 1), (A, 7, 1)]);
    cases.extend([(A, 2, 0), (A, 4, 0), (A, 6, 0), (A, 8, 0)]);
    for &(l, r, want) in &cases {
        let row = table1::row(l, r).map_err(|e| e.to_string())?;
        ensure!(row.trivial_f == want, "{}: trivial_f {} != {want}", row.group, row.trivial_f);
        ensure!(row.matches, "{}: closed form disagrees", row.group);
    }
    let out = Command::new(env!("CARGO_BIN_EXE_hypercx"))
        .args(["table1", "--max-rank", "8"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "table1 command exited with {:?}", out.status.code());
    Ok(format!("{} rows exact", cases.len()))
}

// 2 -----------------------------------------------------------------------

const NAMES: [&str; 12] = ["p11", "p12", "p13", "p14", "s11", "s12", "s13", "s14", "p21", "p22", "p23", "p24"];

fn form(term: &str) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); 12];
    if term == "0" {
        return v;
    }
    let (sign, rest) = match term.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, term),
    };
    let split = rest.find(|c: char| c.is_ascii_alphabetic()).unwrap();
    let coef: i64 = if split == 0 { 1 } else { rest[..split].parse().unwrap() };
    let idx = NAMES.iter().position(|n| *n == &rest[split..]).unwrap();
    v[idx] = Rational::from(sign * coef);
    v
}

const THETA: [&str; 12] = [
    "-p11 p12 p13 p14 s11 s12 s13 s14 0 0 0 0",
    "-p12 -p11 -p14 p13 -s12 s11 -s14 s13 0 0 0 0",
    "-p13 p14 -p11 -p12 -s13 s14 s11 -s12 0 0 0 0",
    "-p14 -p13 p12 -p11 -s14 -s13 s12 s11 0 0 0 0",
    "-s11 s12 s13 s14 -p11 p22 p23 p24 0 0 0 0",
    "-s12 -s11 -s14 s13 -p22 -p11 -p24 p23 0 0 0 0",
    "-s13 s14 -s11 -s12 -p23 p24 -p11 -p22 0 0 0 0",
    "-s14 -s13 s12 -s11 -p24 -p23 p22 -p11 0 0 0 0",
    "0 0 0 0 -3s11 s12 s13 s14 -p21 p22 p23 p24",
    "0 0 0 0 -s12 -3s11 -s14 s13 -p22 -p21 -p24 p23",
    "0 0 0 0 -s13 s14 -3s11 -s12 -p23 p24 -p21 -p22",
    "0 0 0 0 -s14 -s13 s12 -3s11 -p24 -p23 p22 -p21",
];

fn tensor(parts: [&str; 4]) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(12, 12);
    for (t, p) in parts.iter().enumerate() {
        for term in p.split_whitespace() {
            for (b, c) in form(term).iter().enumerate() {
                m[(8 + t, b)] += c;
            }
        }
    }
    m
}

const TAUS: [[&str; 4]; 7] = [
    ["p12 -p22", "p21 -p11", "p24 -p14", "p13 -p23"],
    ["p13 -p23", "p14 -p24", "p21 -p11", "p22 -p12"],
    ["p14 -p24", "p23 -p13", "p12 -p22", "p21 -p11"],
    ["s11", "s12", "s13", "s14"],
    ["s12", "-s11", "-s14", "s13"],
    ["s13", "s14", "-s11", "-s12"],
    ["s14", "-s13", "s12", "-s11"],
];

const NU1: [&str; 4] = ["p12", "-p11", "-p14", "p13"];

fn sp2_golden() -> Outcome {
    let g = sp2_quaternionic_algebra();
    let [i, j, k] = standard_structure::<Rational>(3);
    let c = obata_connection(&g, &HypercomplexTriple { i, j, k }).map_err(|e| e.to_string())?;
    let theta = c.connection_form();
    for (a, row) in THETA.iter().enumerate() {
        for (b, term) in row.split_whitespace().enumerate() {
            ensure!(theta[a][b] == form(term), "Theta entry ({a},{b})");
        }
    }
    let r = curvature(&c, &g);
    let span = r.span();
    ensure!(span.dim() == 7, "curvature span {}", span.dim());
    let taus: Vec<Vec<Rational>> = TAUS.iter().map(|t| c.rep.encode(&tensor(*t)).unwrap()).collect();
    let tspan = SpanBasis::spanned_by(c.rep.coord_dim(), &taus).unwrap();
    ensure!(tspan == span, "curvature span differs from span of tau_1..tau_7");
    let tau1 = EndTensor::constant(c.rep, 12, taus[0].clone());
    let d = covariant_derivative_along(&c, &unit(12, 0), &tau1);
    ensure!(c.rep.decode(d.value()) == tensor(NU1), "nabla_(e^1_1) tau_1 != nu_1");
    let p = run("sp", 2, None, Method::Filtration);
    let h = &p.h;
    ensure!(h.dim == 11 && h.stabilized, "holonomy dim {}", h.dim);
    let b = h.blocks.as_ref().ok_or("no block report")?;
    ensure!(
        b.block_dims == vec![vec![0, 0, 0], vec![0, 0, 0], vec![4, 4, 3]] && b.diagonal_imaginary[2],
        "block shape {:?}",
        b.block_dims
    );
    Ok("Theta exact, span 7 = <tau>, nu_1, dim 11 with (q1, q2, p) = (H, H, Im H)".into())
}

// 3 -----------------------------------------------------------------------

fn su5_full() -> Outcome {
    let p = run("su", 5, Some("0,1;1,0"), Method::Filtration);
    ensure!(
        p.h.filtration == vec![52, 138, 144] && p.h.stabilized && p.h.dim == 144,
        "filtration {:?}",
        p.h.filtration
    );
    Ok(format!("filtration {:?}", p.h.filtration))
}

// 4 -----------------------------------------------------------------------

fn su5_reducible() -> Outcome {
    let mut notes = Vec::new();
    for a in ["1,0;2,-1", "1,0;0,1", "2,0;1,3"] {
        let p = run("su", 5, Some(a), Method::Filtration);
        let tail = p.subspaces.iter().find(|s| s.name == "tail[2]").ok_or("no su(3) candidate")?;
        ensure!(tail.parallel && tail.dim == 8, "A={a}: su(3) subspace parallel {} dim {}", tail.parallel, tail.dim);
        ensure!(p.h.stabilized && p.h.dim < 144, "A={a}: holonomy dim {}", p.h.dim);
        if a == "1,0;2,-1" {
            ensure!(p.h.dim == 112, "A={a}: regression baseline 112, got {}", p.h.dim);
        }
        notes.push(format!("A={a}: dim {}", p.h.dim));
    }
    Ok(format!("8-dim su(3) parallel; {}", notes.join(", ")))
}

// 5 -----------------------------------------------------------------------

fn su3_depth() -> Outcome {
    let p = run("su", 3, None, Method::Filtration);
    ensure!(
        p.h.dim == 16 && p.h.depth == 4 && p.h.stabilized && p.h.filtration[3] < 16,
        "filtration {:?} depth {}",
        p.h.filtration,
        p.h.depth
    );
    Ok(format!("filtration {:?}, depth {}", p.h.filtration, p.h.depth))
}

// 6 -----------------------------------------------------------------------

fn hopf_flat() -> Outcome {
    let d = GroupSpec::parse("hopf", None, None).unwrap().decompose().unwrap();
    let p = holonomy_run(d, &ParameterMatrix::identity(1), Method::Filtration, DEFAULT_MAX_DEPTH)
        .map_err(|e| e.to_string())?;
    ensure!(p.r.is_flat() && p.h.dim == 0, "curvature flat {} holonomy {}", p.r.is_flat(), p.h.dim);
    Ok("R = 0, hol = 0".into())
}

// 7 -----------------------------------------------------------------------

const CATALOG: &[(&str, usize, Option<&str>)] = &[
    ("su", 2, None),
    ("su", 3, None),
    ("su", 3, Some("-2")),
    ("su", 4, None),
    ("sp", 2, None),
    ("sp", 2, Some("1,1;0,2")),
    ("sp", 3, None),
    ("su", 5, Some("0,1;1,0")),
    ("su", 5, Some("1,0;2,-1")),
    ("so", 7, None),
    ("so", 8, None),
    ("g2", 2, None),
];

fn triple_of(p: &HolonomyRun) -> [ExactMatrix; 3] {
    p.s.frame_triple().all().map(|m| m.clone())
}

fn lemma_suite() -> Outcome {
    let mut checks = 0;
    for &(f, n, a) in CATALOG {
        let p = run(f, n, a, Method::Filtration);
        let tag = format!("{f}{n} A={a:?}");
        let g = &p.s.frame_algebra;
        let mut r = structure_checks(&p.d, &p.s);
        r.extend_prefixed("connection", p.c.verify(g));
        r.extend_prefixed("nabla_e1", verify_nabla_e1(&p.c, &p.d));
        r.extend_prefixed("euler", verify_euler(&p.c, &p.d));
        r.push("bianchi", p.r.bianchi_defects().is_empty(), "");
        let s = form_summary(g, &triple_of(&p));
        r.push("eta_independent_of_L", s.eta_independent_of_l, "");
        r.push("Ric=d eta", s.ricci_is_d_eta, "");
        ensure!(r.passed(), "{tag}: {:?}", r.failures());
        checks += r.checks.len();
    }
    Ok(format!("{} examples, {checks} exact checks", CATALOG.len()))
}

// 8 -----------------------------------------------------------------------

fn geometry_suite() -> Outcome {
    let tcy = GeometryOptions {
        twisted_cy: true,
        ..Default::default()
    };
    let plain = GeometryOptions::default();
    let hopf = GroupSpec::parse("hopf", None, None).unwrap().decompose().unwrap();
    for (name, d, opts) in [
        ("T2xSp(2)", decompose("sp", 2), &tcy),
        ("T3xSO(7)", decompose("so", 7), &plain),
        ("Hopf", hopf.clone(), &tcy),
    ] {
        let r = analyze_auto(&d, opts).map_err(|e| e.to_string())?;
        ensure!(r.lee_eq_eta, "{name}: lee != eta");
        if let Some(t) = r.twisted_cy {
            ensure!(t.passed(), "{name}: twisted CY {t:?}");
        }
        if name == "T2xSp(2)" {
            ensure!(r.summary.ricci_zero, "Ric != 0 on T2xSp(2)");
        }
    }
    let catalog = [
        hopf,
        decompose("sp", 2),
        decompose("sp", 3),
        decompose("su", 3),
        decompose("su", 4),
        decompose("so", 7),
        decompose("g2", 2),
    ];
    for d in &catalog {
        let r = analyze_auto(d, &plain).map_err(|e| e.to_string())?;
        ensure!(r.dtheta_zero == (d.b_dim() == 0), "{}: dtheta_zero {} with dim b {}", d.name, r.dtheta_zero, d.b_dim());
    }
    let su3 = analyze_auto(&decompose("su", 3), &tcy).map_err(|e| e.to_string())?;
    let t = su3.twisted_cy.ok_or("no twisted CY report for SU(3)")?;
    ensure!(!su3.summary.ricci_zero, "Ric = 0 on SU(3)");
    ensure!(t.hkt && t.strong && t.d_psi && !t.dtheta_zero, "SU(3) twisted CY {t:?}");
    let su5 = decompose("su", 5);
    ensure!(
        matches!(analyze_auto(&su5, &plain), Err(GeometryError::NoField(_))),
        "SU(5) metric field search changed"
    );
    let p = run("su", 5, Some("0,1;1,0"), Method::Filtration);
    ensure!(!form_summary(&p.s.frame_algebra, &triple_of(&p)).ricci_zero, "Ric = 0 on SU(5)");
    Ok(format!("lee = eta, dtheta = 0 iff b = 0 on {} groups, Ric and twisted CY verdicts", catalog.len()))
}

// 9 -----------------------------------------------------------------------

fn cross_validation() -> Outcome {
    let hopf = GroupSpec::parse("hopf", None, None).unwrap().decompose().unwrap();
    let mut cases: Vec<(JoyceDecomposition, ParameterMatrix)> = vec![
        (hopf, ParameterMatrix::identity(1)),
        (decompose("sp", 2), ParameterMatrix::identity(2)),
        (decompose("su", 3), ParameterMatrix::identity(1)),
    ];
    for a in ["0,1;1,0", "1,0;2,-1", "1,0;0,1", "2,0;1,3"] {
        cases.push((decompose("su", 5), ParameterMatrix::parse(a).unwrap()));
    }
    let mut dims = Vec::new();
    for (d, a) in cases {
        let f = holonomy_run(d.clone(), &a, Method::Filtration, DEFAULT_MAX_DEPTH).map_err(|e| e.to_string())?;
        let k = holonomy_run(d, &a, Method::Alekseevskii, DEFAULT_MAX_DEPTH).map_err(|e| e.to_string())?;
        ensure!(f.h.stabilized && k.h.stabilized, "{}: not stabilized", f.d.name);
        ensure!(f.h.dim == k.h.dim, "{}: filtration {} vs alekseevskii {}", f.d.name, f.h.dim, k.h.dim);
        let ric0 = form_summary(&f.s.frame_algebra, &triple_of(&f)).ricci_zero;
        ensure!(f.h.traceless == ric0, "{}: traceless {} but Ric = 0 is {ric0}", f.d.name, f.h.traceless);
        dims.push(f.h.dim);
    }
    Ok(format!("dims {dims:?} agree; traceless iff Ric = 0"))
}

// 10 ----------------------------------------------------------------------

fn sweep() -> Outcome {
    let path = std::env::temp_dir().join(format!("hypercx-acceptance-{}.json", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_hypercx"))
        .args(["sweep", "--family", "su", "--n", "5", "--curve", "t,1-t;1+t,-t", "--t", "0,1/2,1", "--json"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "sweep exited with {:?}", out.status.code());
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&path);
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let points = v["result"]["points"].as_array().ok_or("no points")?;
    let at = |t: &str| points.iter().find(|p| p["t"] == t).cloned().unwrap_or(Value::Null);
    let (p0, p1, mid) = (at("0"), at("1"), at("1/2"));
    ensure!(p0["dim"] == 144 && p0["reducible"] == false, "t=0: {p0}");
    ensure!(
        p1["reducible"] == true && p1["dim"].as_u64().is_some_and(|d| d < 144),
        "t=1: {p1}"
    );
    ensure!(
        p1["parallel"].as_array().is_some_and(|a| a.iter().any(|n| n == "tail[2]")),
        "t=1: su(3) subspace not parallel"
    );
    Ok(format!(
        "t=0 dim {} irreducible, t=1 dim {} reducible; t=1/2 dim {} (computed only)",
        p0["dim"], p1["dim"], mid["dim"]
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Table 1 trivial f_j counts", table_one, 5),
        ("T2 x Sp(2) golden suite", sp2_golden, 10),
        ("SU(5) full holonomy", su5_full, 600),
        ("SU(5) reducible parameters", su5_reducible, 600),
        ("SU(3) gl(2,H) at depth 4", su3_depth, 30),
        ("Hopf surface flat", hopf_flat, 1),
        ("Lemma suite", lemma_suite, 600),
        ("Geometry suite", geometry_suite, 60),
        ("Method cross-validation", cross_validation, 600),
        ("Sweep along A_t", sweep, 600),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let el = start.elapsed();
        let res = match res {
            Ok(_) if el > Duration::from_secs(*limit) => Err(format!("took {:.2} s, limit {limit} s", el.as_secs_f64())),
            r => r,
        };
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => {
                failed += 1;
                ("FAIL", e.clone())
            }
        };
        println!("{tag} criterion {:>2} {name}: {detail} [{:.2} s, limit {limit} s]", i + 1, el.as_secs_f64());
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
