//! Chevalley basis structure constants and the compact real form.
//!
//! Signs are fixed by declaring `N(alpha, beta) = p + 1 > 0` on every
//! extraspecial pair, where `alpha` is the lowest-indexed positive root with
//! `xi - alpha` a positive root. All other constants follow from the
//! standard identities, with `N(-alpha,-beta) = -N(alpha,beta)`.

use crate::rooted::{root_labels, RootedAlgebra};
use crate::rootsystem::RootSystem;
use crate::RootError;
use hypercx_core::{qi, LieAlgebraData, Rational};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Integer structure constants `N(alpha, beta)` of a Chevalley basis.
#[derive(Clone, Debug)]
pub struct ChevalleyConstants {
    rs: RootSystem,
    memo: HashMap<(usize, usize), i64>,
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|x| **x != 0).is_some_and(|x| *x > 0)
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl ChevalleyConstants {
    /// Prepares the constants for a root system.
    pub fn new(rs: &RootSystem) -> Self {
        ChevalleyConstants {
            rs: rs.clone(),
            memo: HashMap::new(),
        }
    }

    /// `N(a, b)` for arbitrary roots; zero when `a + b` is not a root.
    pub fn n(&mut self, a: &[i64], b: &[i64]) -> i64 {
        let c = add(a, b);
        if c.iter().all(|x| *x == 0) || !self.rs.is_root(&c) {
            return 0;
        }
        let (pa, pb) = (is_positive(a), is_positive(b));
        match (pa, pb) {
            (true, true) => self.npos(a, b),
            (false, false) => -self.npos(&neg(a), &neg(b)),
            (true, false) => {
                let (na, nb, nc) = (self.rs.inner(a, a), self.rs.inner(b, b), self.rs.inner(&c, &c));
                if is_positive(&c) {
                    let v = self.npos(&neg(b), &c);
                    debug_assert_eq!((nc * v) % na, 0);
                    -(nc * v) / na
                } else {
                    let v = self.npos(&neg(&c), a);
                    debug_assert_eq!((nc * v) % nb, 0);
                    (nc * v) / nb
                }
            }
            (false, true) => -self.n(b, a),
        }
    }

    fn npos(&mut self, a: &[i64], b: &[i64]) -> i64 {
        let ia = self.rs.positive_index(a).expect("positive root");
        let ib = self.rs.positive_index(b).expect("positive root");
        if let Some(v) = self.memo.get(&(ia, ib)) {
            return *v;
        }
        let xi = add(a, b);
        let roots = self.rs.positive_roots().to_vec();
        let a1 = roots
            .iter()
            .find(|r| {
                let d = sub(&xi, r);
                self.rs.positive_index(&d).is_some()
            })
            .expect("sum of positive roots has a decomposition")
            .clone();
        let b1 = sub(&xi, &a1);
        let mut p = 0;
        let mut down = sub(&b1, &a1);
        while self.rs.is_root(&down) {
            p += 1;
            down = sub(&down, &a1);
        }
        let v = if a == a1.as_slice() {
            p + 1
        } else if b == a1.as_slice() {
            -(p + 1)
        } else {
            let n_ext = Rational::from(p + 1);
            let xin = qi(self.rs.inner(&xi, &xi));
            let mut acc = Rational::zero();
            let d1 = sub(b, &a1);
            if self.rs.is_root(&d1) {
                let t = self.n(b, &neg(&a1)) * self.n(a, &neg(&b1));
                acc += Rational::new(t, self.rs.inner(&d1, &d1));
            }
            let d2 = sub(a, &a1);
            if self.rs.is_root(&d2) {
                let t = self.n(&neg(&a1), a) * self.n(b, &neg(&b1));
                acc += Rational::new(t, self.rs.inner(&d2, &d2));
            }
            let r = &(&xin / &n_ext) * &acc;
            assert!(r.is_integer(), "non-integral structure constant");
            r.numer().try_into().expect("small structure constant")
        };
        self.memo.insert((ia, ib), v);
        v
    }
}

/// Complex number over the rationals.
type C = (Rational, Rational);

fn cmul(x: &C, y: &C) -> C {
    (&(&x.0 * &y.0) - &(&x.1 * &y.1), &(&x.0 * &y.1) + &(&x.1 * &y.0))
}

/// Builds the compact real form of the simple algebra of `rs`.
///
/// Basis: `H_j = i h_j`, `A_alpha = e_alpha - e_{-alpha}`,
/// `B_alpha = i (e_alpha + e_{-alpha})`.
pub fn chevalley_compact_form(rs: &RootSystem) -> Result<RootedAlgebra, RootError> {
    let r = rs.rank();
    let roots = rs.positive_roots().to_vec();
    let np = roots.len();
    let dim = r + 2 * np;
    let mut nc = ChevalleyConstants::new(rs);

    // Complex Chevalley index: h_j -> j, e_alpha -> r + p, e_{-alpha} -> r + np + p.
    let cdim = r + 2 * np;
    let root_of = |c: usize| -> Option<Vec<i64>> {
        if c < r {
            None
        } else if c < r + np {
            Some(roots[c - r].clone())
        } else {
            Some(neg(&roots[c - r - np]))
        }
    };
    let index_of = |v: &[i64]| -> usize {
        if is_positive(v) {
            r + rs.positive_index(v).expect("root")
        } else {
            r + np + rs.positive_index(&neg(v)).expect("root")
        }
    };
    let zero = || (Rational::zero(), Rational::zero());
    let one = || (Rational::one(), Rational::zero());
    let imag = || (Rational::zero(), Rational::one());

    let mut chev = |x: usize, y: usize, out: &mut Vec<(usize, Rational)>| {
        out.clear();
        match (root_of(x), root_of(y)) {
            (None, None) => {}
            (None, Some(b)) => out.push((y, qi(rs.pairing(&b, &unit(r, x))))),
            (Some(a), None) => out.push((x, -qi(rs.pairing(&a, &unit(r, y))))),
            (Some(a), Some(b)) => {
                let s = add(&a, &b);
                if s.iter().all(|t| *t == 0) {
                    // [e_a, e_{-a}] = h_a, and h_{-a} = -h_a.
                    for (j, c) in rs.coroot_coefficients(&a).into_iter().enumerate() {
                        if !c.is_zero() {
                            out.push((j, c));
                        }
                    }
                } else {
                    let nv = nc.n(&a, &b);
                    if nv != 0 {
                        out.push((index_of(&s), qi(nv)));
                    }
                }
            }
        }
    };

    // Compact basis elements as complex combinations of Chevalley elements.
    let mut compact: Vec<Vec<(usize, C)>> = Vec::with_capacity(dim);
    for j in 0..r {
        compact.push(vec![(j, imag())]);
    }
    for p in 0..np {
        let (ep, em) = (r + p, r + np + p);
        compact.push(vec![(ep, one()), (em, (-Rational::one(), Rational::zero()))]);
        compact.push(vec![(ep, imag()), (em, imag())]);
    }

    let mut buf = Vec::new();
    let mut brackets = Vec::new();
    for s in 0..dim {
        for t in s + 1..dim {
            let mut z: Vec<C> = vec![zero(); cdim];
            for (x, cx) in &compact[s] {
                for (y, cy) in &compact[t] {
                    chev(*x, *y, &mut buf);
                    let w = cmul(cx, cy);
                    for (k, c) in &buf {
                        z[*k].0 += &(&w.0 * c);
                        z[*k].1 += &(&w.1 * c);
                    }
                }
            }
            brackets.push(((s, t), to_compact(&z, r, np)?));
        }
    }
    let algebra = LieAlgebraData::from_brackets(root_labels(rs), brackets)?;
    Ok(RootedAlgebra {
        name: format!("{}{}", rs.letter(), rs.rank()),
        root_system: rs.clone(),
        algebra,
        model: None,
    })
}

/// Converts a complex Chevalley vector lying in the compact form to compact
/// coordinates.
fn to_compact(z: &[C], r: usize, np: usize) -> Result<Vec<Rational>, RootError> {
    let mut v = vec![Rational::zero(); r + 2 * np];
    let bad = || RootError::Inconsistent("bracket leaves the compact form".into());
    for j in 0..r {
        if !z[j].0.is_zero() {
            return Err(bad());
        }
        v[j] = z[j].1.clone();
    }
    let half = Rational::new(1, 2);
    for p in 0..np {
        let (u, w) = (&z[r + p], &z[r + np + p]);
        // a (1, -1) + b (i, i) = (u, w)
        let diff = (&u.0 - &w.0, &u.1 - &w.1);
        let sum = (&u.0 + &w.0, &u.1 + &w.1);
        if !diff.1.is_zero() || !sum.0.is_zero() {
            return Err(bad());
        }
        v[r + 2 * p] = &diff.0 * &half;
        v[r + 2 * p + 1] = &sum.1 * &half;
    }
    Ok(v)
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}
