//! Reduced irreducible root systems in simple-root coordinates.

use crate::RootError;
use hypercx_core::{qi, Rational};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// Cartan type letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    /// `sl(n+1)`.
    A,
    /// `so(2n+1)`.
    B,
    /// `sp(n)`.
    C,
    /// `so(2n)`.
    D,
    /// Exceptional `E6, E7, E8`.
    E,
    /// Exceptional `F4`.
    F,
    /// Exceptional `G2`.
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for TypeLetter {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => TypeLetter::A,
            "B" => TypeLetter::B,
            "C" => TypeLetter::C,
            "D" => TypeLetter::D,
            "E" => TypeLetter::E,
            "F" => TypeLetter::F,
            "G" => TypeLetter::G,
            _ => return Err(RootError::InvalidType(s.to_string(), 0)),
        })
    }
}

/// Root system with roots in simple-root integer coordinates.
///
/// Positive roots are sorted by height, ties broken by reverse
/// lexicographic order of coordinates, so simple roots come first in
/// index order. This order is induced by a linear functional ordering and
/// is therefore compatible with addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    letter: TypeLetter,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

/// Symmetrized form `(alpha_i, alpha_j)` on simple roots, short roots of
/// squared length 2.
fn symmetric_form(letter: TypeLetter, n: usize) -> Result<Vec<Vec<i64>>, RootError> {
    let valid = match letter {
        TypeLetter::A => n >= 1,
        TypeLetter::B | TypeLetter::C => n >= 2,
        TypeLetter::D => n >= 3,
        TypeLetter::E => (6..=8).contains(&n),
        TypeLetter::F => n == 4,
        TypeLetter::G => n == 2,
    };
    if !valid {
        return Err(RootError::InvalidType(letter.to_string(), n));
    }
    let mut s = vec![vec![0i64; n]; n];
    let link = |s: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        s[i][j] = v;
        s[j][i] = v;
    };
    match letter {
        TypeLetter::A => {
            for i in 0..n {
                s[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut s, i, i + 1, -1);
            }
        }
        TypeLetter::B => {
            // alpha_1..alpha_{n-1} long, alpha_n short.
            for i in 0..n - 1 {
                s[i][i] = 4;
            }
            s[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                link(&mut s, i, i + 1, -2);
            }
        }
        TypeLetter::C => {
            // alpha_1..alpha_{n-1} short, alpha_n long.
            for i in 0..n - 1 {
                s[i][i] = 2;
            }
            s[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut s, i, i + 1, -1);
            }
            link(&mut s, n - 2, n - 1, -2);
        }
        TypeLetter::D => {
            for i in 0..n {
                s[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut s, i, i + 1, -1);
            }
            link(&mut s, n - 3, n - 1, -1);
        }
        TypeLetter::E => {
            // Bourbaki: 1-3-4-5-6(-7-8), 2-4.
            for i in 0..n {
                s[i][i] = 2;
            }
            link(&mut s, 0, 2, -1);
            link(&mut s, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut s, i, i + 1, -1);
            }
        }
        TypeLetter::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            s[0][0] = 4;
            s[1][1] = 4;
            s[2][2] = 2;
            s[3][3] = 2;
            link(&mut s, 0, 1, -2);
            link(&mut s, 1, 2, -2);
            link(&mut s, 2, 3, -1);
        }
        TypeLetter::G => {
            // alpha_1 short, alpha_2 long.
            s[0][0] = 2;
            s[1][1] = 6;
            link(&mut s, 0, 1, -3);
        }
    }
    Ok(s)
}

/// Classical count of positive roots.
pub fn expected_positive_count(letter: TypeLetter, n: usize) -> usize {
    match letter {
        TypeLetter::A => n * (n + 1) / 2,
        TypeLetter::B | TypeLetter::C => n * n,
        TypeLetter::D => n * (n - 1),
        TypeLetter::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        TypeLetter::F => 24,
        TypeLetter::G => 6,
    }
}

impl RootSystem {
    /// Builds the root system of the given simple type.
    pub fn new(letter: TypeLetter, rank: usize) -> Result<RootSystem, RootError> {
        let sym = symmetric_form(letter, rank)?;
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * sym[i][j] / sym[j][j]).collect())
            .collect();
        let mut rs = RootSystem {
            letter,
            rank,
            cartan,
            sym,
            positive: Vec::new(),
            index: HashMap::new(),
        };
        rs.enumerate_positive();
        Ok(rs)
    }

    fn enumerate_positive(&mut self) {
        let r = self.rank;
        let mut all: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..r {
                    // alpha_i-string through beta: p = steps down, q = p - <beta, alpha_i^vee>.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = self.pairing_simple(beta, i);
                    let q = p - pairing;
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        self.index = all.iter().enumerate().map(|(t, v)| (v.clone(), t)).collect();
        self.positive = all;
    }

    fn pairing_simple(&self, beta: &[i64], i: usize) -> i64 {
        2 * self.inner(beta, &unit(self.rank, i)) / self.sym[i][i]
    }

    /// Type letter.
    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix `A_ij = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrized form on simple roots.
    pub fn symmetric_form(&self) -> &[Vec<i64>] {
        &self.sym
    }

    /// Simple roots as unit vectors.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| unit(self.rank, i)).collect()
    }

    /// Positive roots in canonical order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Index of a positive root.
    pub fn positive_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// True when `v` is a root (positive or negative).
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// Invariant inner product.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut t = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                t += a[i] * self.sym[i][j] * b[j];
            }
        }
        t
    }

    /// `<a, b^vee> = 2 (a,b)/(b,b)`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.inner(a, b) / self.inner(b, b)
    }

    /// Height.
    pub fn height(v: &[i64]) -> i64 {
        v.iter().sum()
    }

    /// The highest root.
    pub fn maximal_root(&self) -> Vec<i64> {
        self.positive.last().cloned().expect("nonempty root system")
    }

    /// Coefficients of the coroot `alpha^vee` in the simple coroots.
    pub fn coroot_coefficients(&self, alpha: &[i64]) -> Vec<Rational> {
        let n = self.inner(alpha, alpha);
        (0..self.rank)
            .map(|j| Rational::new(alpha[j] * self.sym[j][j], n))
            .collect()
    }

    /// Dimension of the Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    /// Pairing of `alpha` with simple coroot `j`, as a rational.
    pub fn simple_pairing(&self, alpha: &[i64], j: usize) -> Rational {
        qi(self.pairing_simple(alpha, j))
    }
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}
