//! Left-invariant differential forms on a Lie algebra.
//!
//! A `k`-form is stored by its values on increasing basis tuples, so that
//! `e^{i_1} ∧ .. ∧ e^{i_k}` takes the value 1 on `(e_{i_1}, .., e_{i_k})`.

use hypercx_core::{ExactMatrix, Field, LieAlgebraData};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Increasing tuple of basis indices.
pub type Mono = Vec<u16>;

/// Left-invariant `k`-form with coefficients in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftInvariantForm<F> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Mono, F>,
}

/// Merges two increasing tuples; `None` when they overlap, otherwise the
/// union together with the sign of the sorting permutation.
pub fn merge(a: &[u16], b: &[u16]) -> Option<(Mono, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining elements of a.
            if (a.len() - i) % 2 == 1 {
                odd = !odd;
            }
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, odd))
}

impl<F: Field> LeftInvariantForm<F> {
    /// The zero `k`-form.
    pub fn zero(dim: usize, degree: usize) -> Self {
        LeftInvariantForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant function 1 as a 0-form.
    pub fn one(dim: usize) -> Self {
        let mut f = Self::zero(dim, 0);
        f.terms.insert(Vec::new(), F::one());
        f
    }

    /// Dual basis 1-form `e^i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut f = Self::zero(dim, 1);
        f.terms.insert(vec![i as u16], F::one());
        f
    }

    /// 1-form with the given values on the basis.
    pub fn from_covector(v: &[F]) -> Self {
        let mut f = Self::zero(v.len(), 1);
        for (i, c) in v.iter().enumerate() {
            f.add_term(vec![i as u16], c.clone());
        }
        f
    }

    /// 2-form `(x, y) -> m[x][y]` from an antisymmetric matrix.
    pub fn from_antisymmetric(m: &ExactMatrix<F>) -> Self {
        let d = m.rows();
        let mut f = Self::zero(d, 2);
        for a in 0..d {
            for b in a + 1..d {
                f.add_term(vec![a as u16, b as u16], m[(a, b)].clone());
            }
        }
        f
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<Mono, F> {
        &self.terms
    }

    /// Value on the increasing tuple `idx`.
    pub fn coefficient(&self, idx: &[u16]) -> F {
        self.terms.get(idx).cloned().unwrap_or_else(F::zero)
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` to the coefficient of `idx`.
    pub fn add_term(&mut self, idx: Mono, c: F) {
        debug_assert_eq!(idx.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum.
    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree, "degrees differ");
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v.mul_ref(c));
            }
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.degree + o.degree);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if let Some((m, odd)) = merge(a, b) {
                    let p = x.mul_ref(y);
                    out.add_term(m, if odd { -p } else { p });
                }
            }
        }
        out
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> Self {
        let mut out = Self::one(self.dim);
        for _ in 0..k {
            out = out.wedge(self);
        }
        out
    }

    /// Pull-back by the linear map `m`: `(m^* α)(x_1..x_k) = α(m x_1, .., m x_k)`.
    pub fn pullback(&self, m: &ExactMatrix<F>) -> Self {
        // m^* e^j = sum_i m[j][i] e^i
        let d = self.dim;
        let rows: Vec<Vec<(u16, F)>> = (0..d)
            .map(|j| {
                (0..d)
                    .filter(|&i| !m[(j, i)].is_zero())
                    .map(|i| (i as u16, m[(j, i)].clone()))
                    .collect()
            })
            .collect();
        let mut out = Self::zero(d, self.degree);
        for (idx, c) in &self.terms {
            let mut partial: BTreeMap<Mono, F> = BTreeMap::from([(Vec::new(), c.clone())]);
            for &j in idx {
                let mut next: BTreeMap<Mono, F> = BTreeMap::new();
                for (p, v) in &partial {
                    for (i, s) in &rows[j as usize] {
                        if let Some((q, odd)) = merge(p, &[*i]) {
                            let t = v.mul_ref(s);
                            let e = next.entry(q).or_insert_with(F::zero);
                            if odd {
                                *e -= &t;
                            } else {
                                *e += &t;
                            }
                        }
                    }
                }
                partial = next;
            }
            for (q, v) in partial {
                out.add_term(q, v);
            }
        }
        out
    }

    /// Value on arbitrary vectors, `vs.len() == degree`.
    pub fn evaluate(&self, vs: &[Vec<F>]) -> F {
        let mut acc = F::zero();
        for (idx, c) in &self.terms {
            // Determinant of the k x k minor.
            let minor = ExactMatrix::from_fn(self.degree, self.degree, |r, s| vs[s][idx[r] as usize].clone());
            acc += &c.mul_ref(&minor.determinant());
        }
        acc
    }

    /// Maps coefficients into another field.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> LeftInvariantForm<G> {
        let mut out = LeftInvariantForm::zero(self.dim, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }
}

/// Chevalley–Eilenberg differential,
/// `dα(x_0..x_k) = Σ_{i<j} (−1)^{i+j} α([x_i,x_j], x_0, .., x̂_i, .., x̂_j, .., x_k)`.
///
/// Computed by the Leibniz rule from `de^i = −Σ_{a<b} c_{ab}^i e^a ∧ e^b`.
pub fn ce_differential<F: Field>(g: &LieAlgebraData<F>, form: &LeftInvariantForm<F>) -> LeftInvariantForm<F> {
    let d = g.dim();
    let de = dual_differentials(g);
    let mut out = LeftInvariantForm::zero(d, form.degree + 1);
    for (idx, c) in &form.terms {
        for t in 0..idx.len() {
            // e^{i_0} ∧ .. ∧ de^{i_t} ∧ .. : moving the 2-form to the front
            // costs no sign, moving e^{i_t}'s slot costs (−1)^t.
            let rest: Mono = idx.iter().enumerate().filter(|&(s, _)| s != t).map(|(_, &v)| v).collect();
            for (pair, s) in &de[idx[t] as usize] {
                if let Some((m, odd)) = merge(pair, &rest) {
                    let v = c.mul_ref(s);
                    let neg = odd ^ (t % 2 == 1);
                    out.add_term(m, if neg { -v } else { v });
                }
            }
        }
    }
    out
}

/// `de^i` for every dual basis form, as lists of `((a,b), coefficient)`.
fn dual_differentials<F: Field>(g: &LieAlgebraData<F>) -> Vec<Vec<(Mono, F)>> {
    let d = g.dim();
    let mut de: Vec<Vec<(Mono, F)>> = vec![Vec::new(); d];
    for a in 0..d {
        for b in a + 1..d {
            for (k, c) in g.bracket_basis(a, b) {
                de[*k].push((vec![a as u16, b as u16], -c.clone()));
            }
        }
    }
    de
}

impl<F: Field> Serialize for LeftInvariantForm<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Terms<'a, F>(&'a BTreeMap<Mono, F>);
        struct Term<'a, F>(&'a Mono, &'a F);
        impl<F: Field> Serialize for Term<'_, F> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("idx", self.0)?;
                m.serialize_entry("coef", &self.1.to_string())?;
                m.end()
            }
        }
        impl<F: Field> Serialize for Terms<'_, F> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut q = s.serialize_seq(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    q.serialize_element(&Term(k, v))?;
                }
                q.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("degree", &self.degree)?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}

/// Complex form `re + i im`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexForm<F: Field> {
    /// Real part.
    pub re: LeftInvariantForm<F>,
    /// Imaginary part.
    pub im: LeftInvariantForm<F>,
}

impl<F: Field> ComplexForm<F> {
    /// Exterior product.
    pub fn wedge(&self, o: &Self) -> Self {
        ComplexForm {
            re: self.re.wedge(&o.re).sub(&self.im.wedge(&o.im)),
            im: self.re.wedge(&o.im).add(&self.im.wedge(&o.re)),
        }
    }

    /// Product with a real form on the left.
    pub fn wedge_real_left(&self, a: &LeftInvariantForm<F>) -> Self {
        ComplexForm {
            re: a.wedge(&self.re),
            im: a.wedge(&self.im),
        }
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> Self {
        let d = self.re.dim();
        let mut out = ComplexForm {
            re: LeftInvariantForm::one(d),
            im: LeftInvariantForm::zero(d, 0),
        };
        for _ in 0..k {
            out = out.wedge(self);
        }
        out
    }

    /// Differential.
    pub fn d(&self, g: &LieAlgebraData<F>) -> Self {
        ComplexForm {
            re: ce_differential(g, &self.re),
            im: ce_differential(g, &self.im),
        }
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// Field-independent form representation with coefficients as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormJson {
    /// Degree.
    pub degree: usize,
    /// Nonzero terms.
    pub terms: Vec<TermJson>,
}

/// One term of a [`FormJson`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    /// Increasing 0-based basis indices.
    pub idx: Mono,
    /// Coefficient.
    pub coef: String,
}

impl<F: Field> From<&LeftInvariantForm<F>> for FormJson {
    fn from(f: &LeftInvariantForm<F>) -> Self {
        FormJson {
            degree: f.degree,
            terms: f
                .terms
                .iter()
                .map(|(k, v)| TermJson {
                    idx: k.clone(),
                    coef: v.to_string(),
                })
                .collect(),
        }
    }
}
