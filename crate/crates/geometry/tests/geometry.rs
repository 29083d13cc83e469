use hypercx_core::{standard_structure, ExactMatrix, Field, LieAlgebraData, Quad, Rational};
use hypercx_geometry::*;
use hypercx_joyce::{hypercomplex_structure, sp2_quaternionic_algebra, GroupSpec, JoyceDecomposition, ParameterMatrix};
use hypercx_obata::{curvature, holonomy_algebra, joyce_connection, Method, DEFAULT_MAX_DEPTH};

fn decompose(f: &str, n: Option<usize>) -> JoyceDecomposition {
    GroupSpec::parse(f, n, None).unwrap().decompose().unwrap()
}

fn frame_data(f: &str, n: Option<usize>, a: Option<&str>) -> (LieAlgebraData, [ExactMatrix; 3]) {
    let d = decompose(f, n);
    let a = a.map_or(ParameterMatrix::identity(d.m), |s| ParameterMatrix::parse(s).unwrap());
    let s = hypercomplex_structure(&d, &a).unwrap();
    (s.frame_algebra, standard_structure(d.quaternionic_dim()))
}

// Index of φ^1_t, ψ^1_t, φ^2_t in the explicit sp(2) frame.
fn sp2_index(name: &str) -> usize {
    let (kind, t) = name.split_at(name.len() - 1);
    let t: usize = t.parse::<usize>().unwrap() - 1;
    match kind {
        "p1_" => t,
        "s" => 4 + t,
        "p2_" => 8 + t,
        other => panic!("unknown name {other}"),
    }
}

// "c a b | c a b | ..." as Σ c e^a ∧ e^b.
fn two_form(s: &str) -> LeftInvariantForm<Rational> {
    let mut f = LeftInvariantForm::zero(12, 2);
    for term in s.split('|') {
        let t: Vec<&str> = term.split_whitespace().collect();
        let c: Rational = t[0].parse().unwrap();
        let x = LeftInvariantForm::basis(12, sp2_index(t[1]));
        let y = LeftInvariantForm::basis(12, sp2_index(t[2]));
        f = f.add(&x.wedge(&y).scale(&c));
    }
    f
}

#[test]
fn sp2_structure_equations() {
    let g = sp2_quaternionic_algebra();
    let s1 = "1 s1 s2 | 1 s3 s4";
    let s2 = "1 s1 s3 | 1 s4 s2";
    let s3 = "1 s1 s4 | 1 s2 s3";
    let b1 = "1 s1 s2 | -1 s3 s4";
    let b2 = "1 s1 s3 | -1 s4 s2";
    let b3 = "1 s1 s4 | -1 s2 s3";
    let scaled = |s: &str, c: &str| two_form(s).scale(&c.parse().unwrap());
    let cases = [
        ("p1_2", two_form("-2 p1_3 p1_4").add(&scaled(s1, "-2"))),
        ("p1_3", two_form("-2 p1_4 p1_2").add(&scaled(s2, "-2"))),
        ("p1_4", two_form("-2 p1_2 p1_3").add(&scaled(s3, "-2"))),
        ("p2_2", two_form("-2 p2_3 p2_4").add(&scaled(b1, "2"))),
        ("p2_3", two_form("-2 p2_4 p2_2").add(&scaled(b2, "2"))),
        ("p2_4", two_form("-2 p2_2 p2_3").add(&scaled(b3, "2"))),
        (
            "s1",
            two_form("1 p1_2 s2 | 1 p1_3 s3 | 1 p1_4 s4 | -1 p2_2 s2 | -1 p2_3 s3 | -1 p2_4 s4"),
        ),
        (
            "s2",
            two_form("-1 p1_2 s1 | -1 p1_3 s4 | 1 p1_4 s3 | 1 p2_2 s1 | 1 p2_4 s3 | -1 p2_3 s4"),
        ),
        (
            "s3",
            two_form("1 p1_2 s4 | -1 p1_3 s1 | -1 p1_4 s2 | 1 p2_3 s1 | -1 p2_4 s2 | 1 p2_2 s4"),
        ),
        (
            "s4",
            two_form("-1 p1_2 s3 | 1 p1_3 s2 | -1 p1_4 s1 | 1 p2_4 s1 | 1 p2_3 s2 | -1 p2_2 s3"),
        ),
    ];
    for (name, want) in cases {
        let got = ce_differential(&g, &LeftInvariantForm::basis(12, sp2_index(name)));
        assert_eq!(got, want, "d of {name}");
    }
    for centre in [0, 8] {
        assert!(ce_differential(&g, &LeftInvariantForm::basis(12, centre)).is_zero());
    }
}

// dα(x_0..x_k) = Σ_{i<j} (−1)^{i+j} α([x_i,x_j], x_0, .., x̂_i, .., x̂_j, .., x_k)
fn differential_by_evaluation(g: &LieAlgebraData, a: &LeftInvariantForm<Rational>, xs: &[Vec<Rational>]) -> Rational {
    let mut acc = Rational::from(0);
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let mut args = vec![g.bracket(&xs[i], &xs[j]).unwrap()];
            args.extend(xs.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, v)| v.clone()));
            let v = a.evaluate(&args);
            if (i + j) % 2 == 0 {
                acc += &v;
            } else {
                acc -= &v;
            }
        }
    }
    acc
}

fn test_vectors(n: usize, k: usize, seed: i64) -> Vec<Vec<Rational>> {
    (0..k)
        .map(|s| {
            (0..n)
                .map(|t| Rational::from(((seed + 7 * s as i64 + 3 * t as i64 * (s as i64 + 1)) % 5) - 2))
                .collect()
        })
        .collect()
}

#[test]
fn differential_matches_invariant_formula() {
    let g = sp2_quaternionic_algebra();
    let forms = [
        two_form("1 p1_2 s1 | 3 s3 p2_4 | -2 p1_3 p1_4"),
        two_form("1 s1 s2 | 1 s3 s4").wedge(&LeftInvariantForm::basis(12, 0)),
        LeftInvariantForm::basis(12, 5).add(&LeftInvariantForm::basis(12, 9).scale(&Rational::from(2))),
    ];
    for (t, a) in forms.iter().enumerate() {
        let da = ce_differential(&g, a);
        for seed in 0..4 {
            let xs = test_vectors(12, a.degree() + 1, seed + 10 * t as i64);
            assert_eq!(da.evaluate(&xs), differential_by_evaluation(&g, a, &xs), "form {t} seed {seed}");
        }
    }
}

#[test]
fn d_squared_vanishes() {
    let (g, _) = frame_data("su", Some(3), None);
    let n = g.dim();
    for i in 0..n {
        let e = LeftInvariantForm::basis(n, i);
        assert!(ce_differential(&g, &ce_differential(&g, &e)).is_zero());
        for j in i + 1..n {
            let w = e.wedge(&LeftInvariantForm::basis(n, j));
            assert!(ce_differential(&g, &ce_differential(&g, &w)).is_zero());
        }
    }
    let torus = LieAlgebraData::<Rational>::abelian(vec!["a".into(), "b".into()]);
    let f = LeftInvariantForm::from_covector(&[Rational::from(3), Rational::from(-1)]);
    assert!(ce_differential(&torus, &f).is_zero());
}

#[test]
fn pullback_and_wedge_agree_with_evaluation() {
    let a = two_form("1 p1_2 s1 | 3 s3 p2_4").wedge(&LeftInvariantForm::basis(12, 2));
    let m = ExactMatrix::from_fn(12, 12, |r, c| Rational::from(((r * 5 + c * 3) % 7) as i64 - 3));
    let xs = test_vectors(12, 3, 4);
    let mxs: Vec<Vec<Rational>> = xs.iter().map(|x| m.mul_vec(x)).collect();
    assert_eq!(a.pullback(&m).evaluate(&xs), a.evaluate(&mxs));
    let e01 = LeftInvariantForm::<Rational>::basis(12, 0).wedge(&LeftInvariantForm::basis(12, 1));
    let e10 = LeftInvariantForm::<Rational>::basis(12, 1).wedge(&LeftInvariantForm::basis(12, 0));
    assert_eq!(e01, e10.scale(&Rational::from(-1)));
    assert_eq!(e01.evaluate(&test_vectors(12, 2, 1)[..]), {
        let v = test_vectors(12, 2, 1);
        &v[0][0] * &v[1][1] - &v[0][1] * &v[1][0]
    });
}

#[test]
fn form_json_shape() {
    let f = two_form("-2 p1_3 p1_4");
    let v = serde_json::to_value(&f).unwrap();
    assert_eq!(v, serde_json::json!({"degree": 2, "terms": [{"idx": [2, 3], "coef": "-2"}]}));
    assert_eq!(serde_json::to_value(FormJson::from(&f)).unwrap(), v);
}

#[test]
fn obata_form_is_minus_half_connection_trace() {
    for (f, n, a) in [
        ("hopf", None, None),
        ("sp", Some(2), None),
        ("su", Some(3), None),
        ("su", Some(4), None),
        ("su", Some(5), Some("0,1;1,0")),
        ("su", Some(5), Some("1,0;2,-1")),
        ("g2", None, None),
    ] {
        let d = decompose(f, n);
        let a = a.map_or(ParameterMatrix::identity(d.m), |s| ParameterMatrix::parse(s).unwrap());
        let s = hypercomplex_structure(&d, &a).unwrap();
        let c = joyce_connection(&s).unwrap();
        let triple = standard_structure(d.quaternionic_dim());
        let eta = obata_one_form(&s.frame_algebra, &triple);
        let half = Rational::new(-1, 2);
        let want: Vec<Rational> = c.nabla.iter().map(|m| m.trace() * &half).collect();
        assert_eq!(eta, LeftInvariantForm::from_covector(&want), "{}", d.name);
        assert!(obata_one_form_consistent(&s.frame_algebra, &triple), "{}", d.name);
        assert!(ricci_is_d_eta(&s.frame_algebra, &triple), "{}", d.name);
        assert!(obata_ricci(&s.frame_algebra, &triple).is_antisymmetric());
    }
}

#[test]
fn ricci_vanishes_exactly_without_b() {
    for (f, n, a, flat) in [
        ("hopf", None, None, true),
        ("sp", Some(2), None, true),
        ("sp", Some(2), Some("1,1;0,2"), true),
        ("g2", None, None, true),
        ("so", Some(7), None, true),
        ("su", Some(3), None, false),
        ("su", Some(4), None, false),
        ("su", Some(5), Some("0,1;1,0"), false),
        ("su", Some(5), Some("1,0;2,-1"), false),
    ] {
        let (g, t) = frame_data(f, n, a);
        let s = form_summary(&g, &t);
        assert_eq!(s.ricci_zero, flat, "{f} {n:?}");
        assert_eq!(s.d_eta_zero, flat, "{f} {n:?}");
    }
    let ab = LieAlgebraData::<Rational>::abelian((0..4).map(|t| t.to_string()).collect());
    assert!(obata_ricci(&ab, &standard_structure(1)).is_zero());
}

#[test]
fn ricci_flat_iff_traceless_holonomy() {
    for (f, n) in [("hopf", None), ("sp", Some(2)), ("su", Some(3))] {
        let d = decompose(f, n);
        let s = hypercomplex_structure(&d, &ParameterMatrix::identity(d.m)).unwrap();
        let c = joyce_connection(&s).unwrap();
        let h = holonomy_algebra(&c, &curvature(&c, &s.frame_algebra), Method::Filtration, DEFAULT_MAX_DEPTH);
        let ric = obata_ricci(&s.frame_algebra, &standard_structure(d.quaternionic_dim()));
        assert_eq!(ric.is_zero(), h.traceless, "{}", d.name);
    }
}

#[test]
fn catalog_geometry() {
    // (family, n, twisted CY, expected field)
    for (f, n, tcy, field) in [
        ("hopf", None, true, "Q"),
        ("su", Some(2), true, "Q"),
        ("sp", Some(2), true, "Q"),
        ("su", Some(3), true, "Q(sqrt3)"),
        ("su", Some(4), true, "Q(sqrt2)"),
        ("g2", None, true, "Q"),
        ("so", Some(7), false, "Q"),
    ] {
        let d = decompose(f, n);
        let opts = GeometryOptions {
            twisted_cy: tcy,
            ..Default::default()
        };
        let r = analyze_auto(&d, &opts).unwrap();
        assert_eq!(r.field, field, "{}", d.name);
        assert!(r.passed() || r.twisted_cy.is_some_and(|t| !t.dtheta_zero), "{}: {r:?}", d.name);
        assert!(r.bi_invariant && r.hyperhermitian, "{}", d.name);
        assert!(r.lee_eq_eta && r.lee_eq_definition == Some(true), "{}", d.name);
        assert_eq!(r.dtheta_zero, d.b_dim() == 0, "{}", d.name);
        assert_eq!(r.summary.ricci_zero, d.b_dim() == 0, "{}", d.name);
        if let Some(t) = r.twisted_cy {
            assert!(t.hkt && t.strong && t.d_psi, "{}: {t:?}", d.name);
            assert_eq!(t.dtheta_zero, d.b_dim() == 0, "{}", d.name);
        }
    }
}

#[test]
fn sp2_lee_form_closed_formula() {
    let d = decompose("sp", Some(2));
    let m = extend_killing_metric::<Rational>(&d, &ExactMatrix::identity(2), None).unwrap();
    let k = d.rooted.algebra.killing_form();
    let e2 = &d.layers[0].e2[d.ell..];
    let norm: Rational = k.mul_vec(e2).iter().zip(e2).map(|(x, y)| x * y).sum();
    assert_eq!(m.lambdas, vec![norm.clone(), norm.clone()]);
    // θ = (2/λ²)(1+1) g(e^1_1,·) + (2/λ²)(1+0) g(e^2_1,·), with g(e_1^j,e_1^j) = λ².
    let mut want = vec![Rational::from(0); 12];
    want[0] = Rational::from(4);
    want[8] = Rational::from(2);
    assert_eq!(lee_form(&m), LeftInvariantForm::from_covector(&want));
    let r = verify_twisted_cy(&m.data, &lee_form(&m), DEFAULT_PSI_CAP).unwrap();
    assert!(r.passed());
    assert_eq!(
        serde_json::to_value(r).unwrap(),
        serde_json::json!({"hkt": true, "strong": true, "dPsi_eq_theta_wedge_Psi": true, "dtheta_zero": true})
    );
}

#[test]
fn compatibility_errors() {
    let su5 = decompose("su", Some(5));
    let swap = ExactMatrix::parse("0,1;1,0").unwrap();
    assert!(matches!(
        extend_killing_metric::<Rational>(&su5, &swap, None),
        Err(GeometryError::Incompatible(_))
    ));
    assert!(matches!(
        analyze_auto(&su5, &GeometryOptions::default()),
        Err(GeometryError::NoField(_))
    ));
    let su3 = decompose("su", Some(3));
    assert!(compatible_parameter::<Rational>(&su3).is_none());
    let a3 = compatible_parameter::<Quad<3>>(&su3).unwrap();
    assert!(extend_killing_metric::<Quad<3>>(&su3, &a3.scale(&Quad::from_i64(2)), None).is_err());
    assert!(extend_killing_metric::<Quad<3>>(&su3, &a3, None).is_ok());

    // With b = 0 every parameter matrix is compatible.
    let sp2 = decompose("sp", Some(2));
    let a = ExactMatrix::parse("1,1;0,2").unwrap();
    let m = extend_killing_metric::<Rational>(&sp2, &a, None).unwrap();
    assert!(m.data.is_hyperhermitian() && m.data.is_bi_invariant());
    assert_eq!(lee_form(&m), obata_one_form(&m.data.algebra, &m.data.triple));
    let lam = m.lambdas.clone();
    assert!(extend_killing_metric::<Rational>(&sp2, &a, Some(&lam)).is_ok());
    let wrong = vec![lam[0].clone() * Rational::from(2), lam[1].clone()];
    assert!(extend_killing_metric::<Rational>(&sp2, &a, Some(&wrong)).is_err());
    assert!(extend_killing_metric::<Rational>(&sp2, &a, Some(&lam[..1])).is_err());
    let singular = ExactMatrix::parse("1,1;1,1").unwrap();
    assert!(extend_killing_metric::<Rational>(&sp2, &singular, None).is_err());
}

#[test]
fn twisted_cy_negative_control_and_cap() {
    let d = decompose("sp", Some(2));
    let m = extend_killing_metric::<Rational>(&d, &ExactMatrix::identity(2), None).unwrap();
    let mut h = m.data.clone();
    // Rescaling one quaternionic block keeps the metric hyperhermitian but
    // breaks ad-invariance.
    for t in 4..8 {
        h.gram[(t, t)] = &h.gram[(t, t)] * &Rational::from(2);
    }
    assert!(h.is_hyperhermitian() && !h.is_bi_invariant());
    let theta = lee_form_from_definition(&h).unwrap();
    let r = verify_twisted_cy(&h, &theta, DEFAULT_PSI_CAP).unwrap();
    assert!(!r.hkt, "{r:?}");
    assert!(matches!(
        verify_twisted_cy(&m.data, &lee_form(&m), 2),
        Err(GeometryError::CapExceeded { n: 3, cap: 2 })
    ));
}

fn base(f: &str, n: Option<usize>) -> HyperhermitianData<Rational> {
    let d = decompose(f, n);
    extend_killing_metric::<Rational>(&d, &ExactMatrix::identity(d.m), None)
        .unwrap()
        .data
}

fn semidirect_passes(h: &HyperhermitianData<Rational>, cap: usize) {
    assert!(h.quaternion_relations() && h.is_integrable() && h.is_hyperhermitian());
    assert!(h.algebra.verify_jacobi().passed());
    let theta = lee_form_from_definition(h).unwrap();
    let r = verify_twisted_cy(h, &theta, cap).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn semidirect_products() {
    let sp2 = base("sp", Some(2));
    for r in [1, 2] {
        let rho = vec![ExactMatrix::zeros(4 * r, 4 * r); 12];
        let h = semidirect_hkt(&sp2, &rho, r).unwrap();
        assert_eq!(h.dim(), 12 + 4 * r);
        semidirect_passes(&h, 5);
    }
    let hopf = base("hopf", None);
    let h = semidirect_hkt(&hopf, &standard_sp1_rho(), 1).unwrap();
    assert_eq!(h.dim(), 8);
    assert!(!h.algebra.bracket_basis(1, 4).is_empty());
    semidirect_passes(&h, DEFAULT_PSI_CAP);
}

#[test]
fn semidirect_rejects_bad_representations() {
    let hopf = base("hopf", None);
    let good = standard_sp1_rho::<Rational>();
    // Not antisymmetric.
    let mut bad = good.clone();
    bad[0] = ExactMatrix::identity(4);
    assert!(matches!(semidirect_hkt(&hopf, &bad, 1), Err(GeometryError::InvalidRho(_))));
    // Left instead of right multiplication: fails to commute with I, J, K.
    let mut bad = good.clone();
    for (t, m) in bad.iter_mut().enumerate().skip(1) {
        *m = hypercx_core::Quaternion::<Rational>::basis(t).left_matrix();
    }
    assert!(matches!(semidirect_hkt(&hopf, &bad, 1), Err(GeometryError::InvalidRho(_))));
    // Wrong scale: not a homomorphism.
    let bad: Vec<_> = good.iter().map(|m| m.scale(&Rational::from(2))).collect();
    assert!(matches!(semidirect_hkt(&hopf, &bad, 1), Err(GeometryError::InvalidRho(_))));
    assert!(semidirect_hkt(&hopf, &good[..3], 1).is_err());
}

#[test]
fn generic_field_arithmetic_in_forms() {
    let s = Quad::<3>::sqrt_d();
    let a = LeftInvariantForm::<Quad<3>>::basis(4, 0).scale(&s);
    let b = LeftInvariantForm::<Quad<3>>::basis(4, 1).scale(&s);
    let w = a.wedge(&b);
    assert_eq!(w.coefficient(&[0, 1]), Quad::from_i64(3));
}
