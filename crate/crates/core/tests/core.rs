use hypercx_core::{q, qi, ExactMatrix, Field, LieAlgebraData, QuatMatrix, Quaternion, Rational, SpanBasis};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

type M = ExactMatrix<Rational>;

fn det_by_expansion(m: &M, rows: &[usize], cols: &[usize]) -> Rational {
    if rows.is_empty() {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for (t, &c) in cols.iter().enumerate() {
        let x = &m[(rows[0], c)];
        if x.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
        let sub = det_by_expansion(m, &rows[1..], &rest);
        let term = x * &sub;
        if t % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Rank as the largest order of a nonzero minor.
fn rank_by_minors(m: &M) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                if !det_by_expansion(m, &rs, &cs).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = M> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            prop_oneof![3 => Just(Rational::zero()), 2 => small_rational()],
            r * c,
        )
        .prop_map(move |d| M::from_vec(r, c, d))
    })
}

#[test]
fn rank_trivial_cases() {
    assert_eq!(M::identity(5).rank(), 5);
    assert_eq!(M::zeros(3, 7).rank(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_minor_oracle(m in matrix_strategy(5)) {
        prop_assert_eq!(m.rank(), rank_by_minors(&m));
        prop_assert_eq!(m.rank_bareiss(), m.rank_by_elimination());
    }

    #[test]
    fn rank_invariant_under_permutation_and_transpose(m in matrix_strategy(8), seed in 0u64..1000) {
        let r = m.rank();
        prop_assert_eq!(m.transpose().rank(), r);
        let mut rows: Vec<usize> = (0..m.rows()).collect();
        let mut cols: Vec<usize> = (0..m.cols()).collect();
        rows.rotate_left((seed as usize) % m.rows());
        cols.reverse();
        prop_assert_eq!(m.select(&rows, &cols).rank(), r);
    }

    #[test]
    fn rational_arithmetic_matches_bigrational(a in -1_000_000_000_000i64..1_000_000_000_000, b in 1i64..1_000_000_000,
                                                c in -1_000_000_000_000i64..1_000_000_000_000, d in 1i64..1_000_000_000) {
        let x = q(a, b);
        let y = q(c, d);
        let bx = BigRational::new(a.into(), b.into());
        let by = BigRational::new(c.into(), d.into());
        prop_assert_eq!(BigRational::from(&(&x + &y)), &bx + &by);
        prop_assert_eq!(BigRational::from(&(&x - &y)), &bx - &by);
        prop_assert_eq!(BigRational::from(&(&x * &y)), &bx * &by);
        if c != 0 {
            prop_assert_eq!(BigRational::from(&(&x / &y)), &bx / &by);
        }
        // Repeated squaring forces promotion; arithmetic stays exact.
        let mut p = x.clone();
        let mut bp = bx.clone();
        for _ in 0..4 { p = &p * &p; bp = &bp * &bp; }
        prop_assert_eq!(BigRational::from(&p), bp);
        prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
    }

    #[test]
    fn span_is_order_independent(vs in proptest::collection::vec(proptest::collection::vec(small_rational(), 6), 1..9)) {
        let a = SpanBasis::spanned_by(6, vs.iter()).unwrap();
        let b = SpanBasis::spanned_by(6, vs.iter().rev()).unwrap();
        prop_assert_eq!(&a, &b);
        let m = M::from_rows(vs.clone());
        prop_assert_eq!(a.dim(), m.rank());
        // Idempotent insertion.
        let mut c = a.clone();
        for v in &vs { prop_assert!(!c.insert(v).unwrap()); }
        prop_assert_eq!(c, a);
    }

    #[test]
    fn inverse_and_determinant(m in matrix_strategy(4)) {
        if m.is_square() {
            let d = m.determinant();
            let idx: Vec<usize> = (0..m.rows()).collect();
            prop_assert_eq!(&d, &det_by_expansion(&m, &idx, &idx));
            let ker = m.kernel();
            prop_assert_eq!(ker.len(), m.cols() - m.rank());
            for x in &ker { prop_assert!(m.mul_vec(x).iter().all(|c| c.is_zero())); }
            match m.inverse() {
                Some(inv) => prop_assert_eq!(&m * &inv, M::identity(m.rows())),
                None => prop_assert!(d.is_zero()),
            }
        }
    }
}

#[test]
fn span_insert_examples() {
    let mut s = SpanBasis::new(3);
    assert!(s.insert(&[qi(1), qi(0), qi(0)]).unwrap());
    assert_eq!(s.dim(), 1);
    assert!(!s.insert(&[qi(2), qi(0), qi(0)]).unwrap());
    assert_eq!(s.dim(), 1);
    assert!(s.insert(&[qi(1)]).is_err());

    let mut full = SpanBasis::new(16);
    for t in 0..16 {
        let mut e = vec![Rational::zero(); 16];
        e[t] = Rational::one();
        full.insert(&e).unwrap();
    }
    assert_eq!(full.dim(), 16);
}

fn su2() -> LieAlgebraData {
    let z = Rational::zero;
    LieAlgebraData::from_brackets(
        vec!["e2".into(), "e3".into(), "e4".into()],
        vec![
            ((0, 1), vec![z(), z(), qi(2)]),
            ((2, 0), vec![z(), qi(2), z()]),
            ((1, 2), vec![qi(2), z(), z()]),
        ],
    )
    .unwrap()
}

#[test]
fn su2_bracket_and_killing() {
    let g = su2();
    let e = |t: usize| {
        let mut v = vec![Rational::zero(); 3];
        v[t] = Rational::one();
        v
    };
    assert_eq!(g.bracket(&e(0), &e(1)).unwrap(), vec![qi(0), qi(0), qi(2)]);
    let x = vec![q(1, 2), qi(-3), q(5, 7)];
    assert!(g.bracket(&x, &x).unwrap().iter().all(|c| c.is_zero()));
    assert!(g.bracket(&x, &[qi(1)]).is_err());
    let b = g.killing_form();
    // Oracle: direct trace of squared adjoint matrices.
    for i in 0..3 {
        for j in 0..3 {
            let t = (&g.ad_basis(i) * &g.ad_basis(j)).trace();
            assert_eq!(b[(i, j)], -t);
        }
    }
    assert_eq!(b[(0, 0)], qi(8));
    assert_eq!(b[(0, 1)], qi(0));
    assert!(g.verify_jacobi().passed());
    assert!(b.is_positive_definite());
}

#[test]
fn abelian_killing_vanishes() {
    let g = LieAlgebraData::<Rational>::abelian(vec!["t1".into(), "t2".into(), "t3".into()]);
    assert!(g.killing_form().is_zero());
}

/// Coordinates of a complex matrix in the basis by solving the real system.
fn decompose(basis: &[QuatMatrix], x: &QuatMatrix) -> Vec<Rational> {
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.coords()).collect();
    let n = cols[0].len();
    let a = M::from_columns(n, &cols);
    let at = a.transpose();
    let normal = &at * &a;
    let rhs = at.mul_vec(&x.coords());
    let c = normal.solve(&rhs).unwrap();
    assert_eq!(a.mul_vec(&c), x.coords(), "not in span");
    c
}

#[test]
fn su3_killing_matches_trace_form() {
    // su(3) from complex matrices, complex unit = quaternion i.
    let n = 3;
    let one = Quaternion::<Rational>::one();
    let i = Quaternion::<Rational>::basis(1);
    let mut basis = Vec::new();
    for a in 0..2 {
        let mut h = QuatMatrix::unit(n, a, a, i.clone());
        *h.get_mut(a + 1, a + 1) = -&i;
        basis.push(h);
    }
    for a in 0..n {
        for b in a + 1..n {
            let mut x = QuatMatrix::unit(n, a, b, one.clone());
            *x.get_mut(b, a) = -&one;
            basis.push(x);
            let mut y = QuatMatrix::unit(n, a, b, i.clone());
            *y.get_mut(b, a) = i.clone();
            basis.push(y);
        }
    }
    let mut brackets = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            brackets.push(((a, b), decompose(&basis, &basis[a].commutator(&basis[b]))));
        }
    }
    let g = LieAlgebraData::from_brackets((0..8).map(|t| format!("x{t}")).collect(), brackets).unwrap();
    assert!(g.verify_jacobi().passed());
    let b = g.killing_form();
    for s in 0..8 {
        for t in 0..8 {
            let tr = basis[s].matmul(&basis[t]).real_trace();
            assert_eq!(b[(s, t)], -&(&qi(6) * &tr), "B = -2n tr(XY) at ({s},{t})");
        }
    }
    assert!(b.is_positive_definite());
}

#[test]
fn jacobi_negative_control() {
    let g = su2();
    let bad = g.with_constant(0, 1, 0, qi(1));
    let rep = bad.verify_jacobi();
    assert!(!rep.passed());
    assert_eq!(rep.violations, vec![(0, 1, 2)]);
}

#[test]
fn change_basis_preserves_structure() {
    let g = su2();
    let p = M::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 3]]);
    let h = g.change_basis(&p, vec!["a".into(), "b".into(), "c".into()]).unwrap();
    assert!(h.verify_jacobi().passed());
    let cols = p.columns();
    for a in 0..3 {
        for b in 0..3 {
            let lhs = g.bracket(&cols[a], &cols[b]).unwrap();
            let coeffs: Vec<Rational> = (0..3).map(|k| h.constant(a, b, k)).collect();
            assert_eq!(lhs, p.mul_vec(&coeffs));
        }
    }
}

#[test]
fn quadratic_field_is_exact() {
    use hypercx_core::Quad;
    type Q5 = Quad<5>;
    let phi = Q5::new(q(1, 2), q(1, 2));
    // Golden ratio satisfies x^2 = x + 1.
    assert_eq!(&phi * &phi, phi.clone() + &Q5::one());
    assert_eq!(Field::signum(&(phi.clone() - &Q5::from_i64(2))), -1);
    let m = ExactMatrix::<Q5>::from_rows(vec![vec![phi.clone(), Q5::one()], vec![Q5::one(), phi.clone() - &Q5::one()]]);
    assert_eq!(m.rank(), 1);
}
