use hypercx_core::{standard_structure, ExactMatrix, LieAlgebraData, Rational};
use hypercx_joyce::*;
use hypercx_obata::*;
use num_traits::{One, Zero};

struct Pipeline {
    d: JoyceDecomposition,
    s: JoyceStructure,
    c: Connection,
    r: CurvatureTensor,
}

fn pipeline(f: &str, n: usize, a: Option<&str>) -> Pipeline {
    let d = GroupSpec::parse(f, Some(n), None).unwrap().decompose().unwrap();
    let a = a.map_or(ParameterMatrix::identity(d.m), |s| ParameterMatrix::parse(s).unwrap());
    let s = hypercomplex_structure(&d, &a).unwrap();
    let c = joyce_connection(&s).unwrap();
    let r = curvature(&c, &s.frame_algebra);
    Pipeline { d, s, c, r }
}

fn unit(d: usize, t: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[t] = Rational::one();
    v
}

// Frame of T^2 x sp(2): e^1_1..e^1_4, f^1_1..f^1_4, e^2_1..e^2_4, with
// the dual forms named p11..p14, s11..s14, p21..p24.
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

/// Endomorphism `Σ α_t ⊗ e^2_t` from four sums of signed dual forms.
fn tensor(parts: [&str; 4]) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(12, 12);
    for (t, p) in parts.iter().enumerate() {
        for term in p.split_whitespace() {
            let f = form(term);
            for (b, c) in f.iter().enumerate() {
                m[(8 + t, b)] += c;
            }
        }
    }
    m
}

fn taus() -> Vec<ExactMatrix> {
    [
        ["p12 -p22", "p21 -p11", "p24 -p14", "p13 -p23"],
        ["p13 -p23", "p14 -p24", "p21 -p11", "p22 -p12"],
        ["p14 -p24", "p23 -p13", "p12 -p22", "p21 -p11"],
        ["s11", "s12", "s13", "s14"],
        ["s12", "-s11", "-s14", "s13"],
        ["s13", "s14", "-s11", "-s12"],
        ["s14", "-s13", "s12", "-s11"],
    ]
    .into_iter()
    .map(tensor)
    .collect()
}

fn nus() -> Vec<ExactMatrix> {
    [
        ["p12", "-p11", "-p14", "p13"],
        ["p11", "p12", "p13", "p14"],
        ["-p14", "p13", "-p12", "p11"],
        ["p13", "p14", "-p11", "-p12"],
    ]
    .into_iter()
    .map(tensor)
    .collect()
}

fn sp2_golden_connection() -> (LieAlgebraData, Connection) {
    let g = sp2_quaternionic_algebra();
    assert!(g.verify_jacobi().passed());
    let [i, j, k] = standard_structure::<Rational>(3);
    let c = obata_connection(&g, &HypercomplexTriple { i, j, k }).unwrap();
    (g, c)
}

#[test]
fn sp2_connection_form_matches_theta() {
    let (g, c) = sp2_golden_connection();
    assert!(c.verify(&g).passed());
    assert_eq!(c.rep, Rep::Quat(3));
    let theta = c.connection_form();
    for (a, row) in THETA.iter().enumerate() {
        for (b, term) in row.split_whitespace().enumerate() {
            assert_eq!(theta[a][b], form(term), "entry ({a},{b})");
        }
    }
}

#[test]
fn sp2_curvature_generators_and_first_derivatives() {
    let (g, c) = sp2_golden_connection();
    let r = curvature(&c, &g);
    let span = r.span();
    assert_eq!(span.dim(), 7);
    let taus: Vec<Vec<Rational>> = taus().iter().map(|t| c.rep.encode(t).expect("tau is quaternionic")).collect();
    let tspan = hypercx_core::SpanBasis::spanned_by(c.rep.coord_dim(), &taus).unwrap();
    assert_eq!(tspan, span, "curvature span equals the span of the seven generators");
    // ∇_{e^1_t} τ_1 = ν_t.
    let tau1 = EndTensor::constant(c.rep, 12, taus[0].clone());
    for (t, nu) in nus().iter().enumerate() {
        let d = covariant_derivative_along(&c, &unit(12, t), &tau1);
        assert_eq!(c.rep.decode(d.value()), *nu, "nu_{}", t + 1);
        assert!(!span.contains(d.value()).unwrap());
    }
    let mut all = span.clone();
    for nu in nus() {
        all.insert(&c.rep.encode(&nu).unwrap()).unwrap();
    }
    assert_eq!(all.dim(), 11);
    for m in [Method::Filtration, Method::Alekseevskii] {
        let h = holonomy_algebra(&c, &r, m, DEFAULT_MAX_DEPTH);
        assert_eq!(h.dim, 11);
        assert_eq!(h.basis, all);
    }
}

#[test]
fn sp2_catalog_holonomy_shape() {
    let p = pipeline("sp", 2, None);
    for m in [Method::Filtration, Method::Alekseevskii] {
        let h = holonomy_algebra(&p.c, &p.r, m, DEFAULT_MAX_DEPTH);
        assert_eq!((h.dim, h.stabilized, h.lie_closed), (11, true, Some(true)));
        let b = h.blocks.as_ref().unwrap();
        assert_eq!(b.block_dims, vec![vec![0, 0, 0], vec![0, 0, 0], vec![4, 4, 3]]);
        assert_eq!(b.nonzero_rows, vec![2]);
        assert!(b.diagonal_imaginary[2]);
        assert!(b.traceless && h.traceless);
        if m == Method::Filtration {
            assert_eq!((h.filtration.clone(), h.depth), (vec![7, 11, 11], 2));
            let json = serde_json::to_value(&h).unwrap();
            assert_eq!(json["dim"], 11);
            assert_eq!(json["filtration"], serde_json::json!([7, 11, 11]));
            assert_eq!(json["depth"], 2);
            assert_eq!(json["stabilized"], true);
        }
    }
    let subs = find_parallel_subspaces(&p.c, &p.d);
    let h2 = subs.iter().find(|s| s.name == "h[2]").unwrap();
    assert!(h2.parallel && h2.proper && h2.dim == 4);
    let h = holonomy_algebra(&p.c, &p.r, Method::Filtration, DEFAULT_MAX_DEPTH);
    for s in subs.iter().filter(|s| s.parallel) {
        assert!(reduction_consistent(&h, &s.basis), "{}", s.name);
    }
}

#[test]
fn hopf_surface_is_flat() {
    let p = pipeline("su", 2, None);
    assert!(p.r.is_flat());
    for m in [Method::Filtration, Method::Alekseevskii] {
        let h = holonomy_algebra(&p.c, &p.r, m, DEFAULT_MAX_DEPTH);
        assert_eq!((h.dim, h.filtration.clone(), h.stabilized), (0, vec![0], true));
    }
}

#[test]
fn su3_reaches_gl2h_at_depth_four() {
    let p = pipeline("su", 3, None);
    let h = holonomy_algebra(&p.c, &p.r, Method::Filtration, DEFAULT_MAX_DEPTH);
    assert_eq!((h.dim, h.depth, h.stabilized), (16, 4, true));
    assert_eq!(h.filtration.last(), Some(&16));
    assert!(h.filtration[3] < 16);
    assert!(!h.traceless);
    let a = holonomy_algebra(&p.c, &p.r, Method::Alekseevskii, DEFAULT_MAX_DEPTH);
    assert_eq!(a.dim, 16);
    // Too shallow a bound is reported, not hidden.
    let short = holonomy_algebra(&p.c, &p.r, Method::Filtration, 2);
    assert!(!short.stabilized && short.depth == 2);
}

#[test]
fn su5_full_holonomy() {
    let p = pipeline("su", 5, Some("0,1;1,0"));
    assert_eq!(p.r.span().dim(), 52);
    let h = holonomy_algebra(&p.c, &p.r, Method::Filtration, DEFAULT_MAX_DEPTH);
    assert_eq!((h.filtration.clone(), h.dim, h.stabilized), (vec![52, 138, 144], 144, true));
    let a = holonomy_algebra(&p.c, &p.r, Method::Alekseevskii, DEFAULT_MAX_DEPTH);
    assert_eq!(a.dim, 144);
    let subs = find_parallel_subspaces(&p.c, &p.d);
    assert!(!has_proper_parallel(&subs));
}

#[test]
fn su5_lower_triangular_parameters_reduce() {
    for a in ["1,0;2,-1", "1,0;0,1", "2,0;1,3"] {
        let p = pipeline("su", 5, Some(a));
        let subs = find_parallel_subspaces(&p.c, &p.d);
        let tail = subs.iter().find(|s| s.name == "tail[2]").unwrap();
        assert!(tail.parallel && tail.dim == 8, "{a}");
        // The tail is the su(3) spanned by E_2, d_2 and f_2.
        let model = p.d.rooted.model.as_ref().unwrap();
        for v in tail.basis.vectors() {
            let x = model.matrix_of(&p.s.to_ambient(v)[p.d.ell..]);
            for r in 0..5 {
                for col in 0..5 {
                    if r < 2 || col < 2 {
                        assert!(x.get(r, col).is_zero(), "{a}: entry ({r},{col})");
                    }
                }
            }
        }
        let h = holonomy_algebra(&p.c, &p.r, Method::Filtration, DEFAULT_MAX_DEPTH);
        let k = holonomy_algebra(&p.c, &p.r, Method::Alekseevskii, DEFAULT_MAX_DEPTH);
        assert!(h.stabilized && h.dim < 144 && h.dim == k.dim, "{a}");
        assert!(reduction_consistent(&h, &tail.basis));
        if a == "1,0;2,-1" {
            assert_eq!(h.filtration, vec![48, 72, 94, 110, 112, 112]);
        }
    }
}

#[test]
fn lemma_suite_across_catalog() {
    let cases: &[(&str, usize, Option<&str>)] = &[
        ("su", 2, None),
        ("su", 3, None),
        ("su", 3, Some("-2")),
        ("su", 4, None),
        ("sp", 2, None),
        ("sp", 2, Some("1,1;0,2")),
        ("su", 5, Some("0,1;1,0")),
        ("su", 5, Some("1,0;2,-1")),
        ("so", 7, None),
        ("g2", 2, None),
    ];
    for &(f, n, a) in cases {
        let p = pipeline(f, n, a);
        let g = &p.s.frame_algebra;
        let tag = format!("{f}{n} {a:?}");
        assert!(p.c.verify(g).passed(), "{tag}: {:?}", p.c.verify(g).failures());
        assert!(verify_nabla_e1(&p.c, &p.d).passed(), "{tag}");
        assert!(verify_euler(&p.c, &p.d).passed(), "{tag}");
        assert!(p.r.bianchi_defects().is_empty(), "{tag}");
        // The ambient computation agrees with the frame one.
        let amb = obata_connection(&p.d.ambient, &p.s.triple).unwrap();
        let dim = p.d.dim();
        for t in 0..dim {
            let v = p.s.frame.column(t);
            let mut amb_t = ExactMatrix::zeros(dim, dim);
            for (k, c) in v.iter().enumerate() {
                amb_t.add_scaled(c, &amb.nabla[k]);
            }
            let conj = &(&p.s.frame_inverse * &amb_t) * &p.s.frame;
            assert_eq!(conj, p.c.nabla[t], "{tag}: direction {t}");
        }
        let h = holonomy_algebra(&p.c, &p.r, Method::Filtration, DEFAULT_MAX_DEPTH);
        for m in h.real_basis() {
            for l in p.s.frame_triple().all() {
                assert!(m.commutator(l).is_zero(), "{tag}");
            }
        }
    }
}

#[test]
fn negative_controls() {
    let p = pipeline("sp", 2, None);
    let bad = p.c.perturbed(0, 0, 0, Rational::one());
    assert!(!verify_nabla_e1(&bad, &p.d).passed());
    assert!(!bad.verify(&p.s.frame_algebra).passed());
    // A non-integrable triple is refused.
    let mut frame = p.s.frame.clone();
    let (c5, c6) = (frame.column(5), frame.column(6));
    frame.set_column(5, &c6);
    frame.set_column(6, &c5);
    let g = p.d.ambient.change_basis(&frame, p.d.frame_labels()).unwrap();
    let [i, j, k] = standard_structure::<Rational>(3);
    assert!(matches!(
        obata_connection(&g, &HypercomplexTriple { i, j, k }),
        Err(ObataError::NotHypercomplex(_))
    ));
}

#[test]
fn covariant_derivative_basics() {
    let p = pipeline("sp", 2, None);
    let id = p.c.rep.encode(&ExactMatrix::identity(12)).unwrap();
    let t = EndTensor::constant(p.c.rep, 12, id);
    assert!(covariant_derivative(&p.c, &t).is_zero());
    // The curvature tensor and its derivative span what the filtration reports.
    let dr = covariant_derivative(&p.c, &p.r.to_tensor());
    assert_eq!(dr.slots, 3);
    let mut s = p.r.span();
    for v in dr.values.values() {
        s.insert(v).unwrap();
    }
    assert_eq!(s.dim(), 11);
}
