//! Verifiers for the structural properties of Joyce decompositions and
//! structures.

use crate::decomposition::JoyceDecomposition;
use crate::report::Report;
use crate::structure::HypercomplexTriple;
use hypercx_core::{ExactMatrix, LieAlgebraData, Rational, SpanBasis};
use num_traits::Zero;

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

fn br(g: &LieAlgebraData, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    g.bracket(x, y).expect("ambient vectors")
}

fn neg(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x.clone()).collect()
}

fn scaled(v: &[Rational], c: i64) -> Vec<Rational> {
    let c = Rational::from(c);
    v.iter().map(|x| x * &c).collect()
}

/// Checks that all brackets of `xs` with `ys` lie in `target`; returns the
/// first offending pair.
fn inclusion<'a>(
    g: &LieAlgebraData,
    xs: impl IntoIterator<Item = &'a Vec<Rational>>,
    ys: &[&Vec<Rational>],
    target: &SpanBasis<Rational>,
) -> Option<String> {
    for (a, x) in xs.into_iter().enumerate() {
        for (b, y) in ys.iter().enumerate() {
            let z = br(g, x, y);
            if !target.contains(&z).expect("ambient vectors") {
                return Some(format!("bracket of generators {a} and {b} escapes"));
            }
        }
    }
    None
}

fn record(r: &mut Report, name: String, fail: Option<String>) {
    let ok = fail.is_none();
    r.push(name, ok, fail.unwrap_or_default());
}

/// J1-J4, the `su(2)` relations of each layer and Killing orthogonality of
/// the summands.
pub fn verify_joyce_relations(d: &JoyceDecomposition) -> Report {
    let g = &d.ambient;
    let mut r = Report::new();
    let zero = SpanBasis::new(d.dim());
    for (i, l) in d.layers.iter().enumerate() {
        let ok = br(g, &l.e2, &l.e3) == scaled(&l.e4, 2)
            && br(g, &l.e4, &l.e2) == scaled(&l.e3, 2)
            && br(g, &l.e3, &l.e4) == scaled(&l.e2, 2);
        r.push(format!("su2[{}]", i + 1), ok, "triple is not normalized");
    }
    let b: Vec<&Vec<Rational>> = d.b_vectors().iter().collect();
    for (i, l) in d.layers.iter().enumerate() {
        record(&mut r, format!("J1[{}]", i + 1), inclusion(g, l.triple(), &b, &zero));
    }
    for i in 0..d.m {
        for j in i + 1..d.m {
            let dj: Vec<&Vec<Rational>> = d.layers[j].triple().to_vec();
            record(&mut r, format!("J2[{},{}]", i + 1, j + 1), inclusion(g, d.layers[i].triple(), &dj, &zero));
        }
    }
    for i in 0..d.m {
        for j in i + 1..d.m {
            let fj: Vec<&Vec<Rational>> = d.layers[j].f_vectors().collect();
            record(&mut r, format!("J3[{},{}]", i + 1, j + 1), inclusion(g, d.layers[i].triple(), &fj, &zero));
        }
    }
    for (i, l) in d.layers.iter().enumerate() {
        let fi: Vec<&Vec<Rational>> = l.f_vectors().collect();
        let mut fail = inclusion(g, l.triple(), &fi, &d.span_f(i));
        if fail.is_none() {
            for f in l.f_vectors() {
                let twice = br(g, &l.e2, &br(g, &l.e2, f));
                if twice != neg(f) {
                    fail = Some("ad(e2)^2 is not -Id on f".into());
                    break;
                }
            }
        }
        record(&mut r, format!("J4[{}]", i + 1), fail);
    }
    // Orthogonality of distinct summands for the extended Killing form.
    let k = d.extended_killing();
    let mut groups: Vec<Vec<&Vec<Rational>>> = vec![d.centre.iter().collect()];
    for l in &d.layers {
        groups.push(l.triple().to_vec());
        groups.push(l.f_vectors().collect());
    }
    let mut fail = None;
    'outer: for s in 0..groups.len() {
        for t in s + 1..groups.len() {
            for x in &groups[s] {
                let kx = k.mul_vec(x);
                for y in &groups[t] {
                    let v: Rational = kx.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
                    if !v.is_zero() {
                        fail = Some(format!("summands {s} and {t} are not orthogonal"));
                        break 'outer;
                    }
                }
            }
        }
    }
    record(&mut r, "orthogonal".into(), fail);
    r
}

/// The four bracket inclusions between `b`, `d_i` and `f_j`.
pub fn verify_bracket_inclusions(d: &JoyceDecomposition) -> Report {
    let g = &d.ambient;
    let mut r = Report::new();
    let fs: Vec<SpanBasis<Rational>> = (0..d.m).map(|j| d.span_f(j)).collect();
    let fvec: Vec<Vec<&Vec<Rational>>> = d.layers.iter().map(|l| l.f_vectors().collect()).collect();
    for j in 0..d.m {
        record(&mut r, format!("b.f[{}]", j + 1), inclusion(g, d.centre.iter(), &fvec[j], &fs[j]));
    }
    for i in 0..d.m {
        for j in 0..i {
            record(
                &mut r,
                format!("d[{}].f[{}]", i + 1, j + 1),
                inclusion(g, d.layers[i].triple(), &fvec[j], &fs[j]),
            );
        }
    }
    for i in 0..d.m {
        for j in i + 1..d.m {
            record(
                &mut r,
                format!("f[{}].f[{}]", i + 1, j + 1),
                inclusion(g, fvec[i].iter().copied(), &fvec[j], &fs[i]),
            );
        }
    }
    for i in 0..d.m {
        let mut target = d.span_centre();
        for k in i..d.m {
            for v in d.layers[k].triple().into_iter().chain(d.layers[k].f_vectors()) {
                target.insert(v).expect("ambient vectors");
            }
        }
        record(
            &mut r,
            format!("f[{}].f[{}]", i + 1, i + 1),
            inclusion(g, fvec[i].iter().copied(), &fvec[i], &target),
        );
    }
    r
}

/// Basis pairs `(a, b)` with `a < b` where the Nijenhuis tensor of `l`
/// does not vanish.
pub fn nijenhuis_defects(g: &LieAlgebraData, l: &ExactMatrix) -> Vec<(usize, usize)> {
    let n = g.dim();
    let cols = l.columns();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            // N(x,y) = [Lx,Ly] - L[Lx,y] - L[x,Ly] - [x,y]
            let mut v = br(g, &cols[a], &cols[b]);
            let lxy = neg(&g.bracket_with_basis(b, &cols[a]));
            let xly = g.bracket_with_basis(a, &cols[b]);
            let s: Vec<Rational> = lxy.iter().zip(&xly).map(|(p, q)| p + q).collect();
            for (x, y) in v.iter_mut().zip(l.mul_vec(&s)) {
                *x -= &y;
            }
            for (k, c) in g.bracket_basis(a, b) {
                v[*k] -= c;
            }
            if !is_zero(&v) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Nijenhuis tensors of `I`, `J`, `K` vanish on all basis pairs.
pub fn verify_integrability(h: &HypercomplexTriple, g: &LieAlgebraData) -> Report {
    let mut r = Report::new();
    for (name, l) in [("N_I", &h.i), ("N_J", &h.j), ("N_K", &h.k)] {
        let bad = nijenhuis_defects(g, l);
        r.push(name, bad.is_empty(), format!("{} nonvanishing pairs, first {:?}", bad.len(), bad.first()));
    }
    r
}

/// True when `ad_v` commutes with `I`, `J` and `K`.
pub fn is_hyperholomorphic(g: &LieAlgebraData, h: &HypercomplexTriple, v: &[Rational]) -> bool {
    let ad = g.ad(v);
    h.all().iter().all(|l| ad.commutator(l).is_zero())
}

/// Every vector of `R^ell ⊕ b` is hyper-holomorphic.
pub fn hyperholomorphic_check(d: &JoyceDecomposition, h: &HypercomplexTriple) -> Report {
    let mut r = Report::new();
    for (j, c) in d.centre.iter().enumerate() {
        r.push(
            format!("c[{}]", j + 1),
            is_hyperholomorphic(&d.ambient, h, c),
            "ad does not commute with the structure",
        );
    }
    r
}
