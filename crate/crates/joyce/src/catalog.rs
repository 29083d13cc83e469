//! Catalog of groups carrying Joyce hypercomplex structures.

use crate::decomposition::{joyce_decompose, JoyceDecomposition};
use crate::JoyceError;
use hypercx_core::{QuatMatrix, Quaternion, Rational};
use hypercx_rootsys::{chevalley_compact_form, sp_model, su_model, RootSystem, RootedAlgebra, TypeLetter};
use serde::Serialize;
use std::fmt;

/// Group family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `SU(n)`.
    Su,
    /// `SO(n)`.
    So,
    /// `Sp(n)`.
    Sp,
    /// `E6`.
    E6,
    /// `E7`.
    E7,
    /// `E8`.
    E8,
    /// `F4`.
    F4,
    /// `G2`.
    G2,
    /// The Hopf surface `S^1 x SU(2)`.
    Hopf,
}

/// A compact group `T^ell x G` from the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    /// Family.
    pub family: Family,
    /// Matrix size for classical families, rank for exceptional ones.
    pub n: usize,
    /// Requested torus dimension; must equal `2m - r` when given.
    pub torus: Option<usize>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Su => write!(f, "SU({})", self.n),
            Family::So => write!(f, "SO({})", self.n),
            Family::Sp => write!(f, "Sp({})", self.n),
            Family::Hopf => write!(f, "S1 x SU(2)"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl GroupSpec {
    /// Parses a family name (`su`, `so`, `sp`, `e`, `e6`..`e8`, `f4`, `g2`,
    /// `hopf`) with an optional size.
    pub fn parse(family: &str, n: Option<usize>, torus: Option<usize>) -> Result<Self, JoyceError> {
        let fam = family.trim().to_ascii_lowercase();
        let need = |n: Option<usize>| n.ok_or_else(|| JoyceError::UnknownFamily(format!("{fam} requires --n")));
        let (family, n) = match fam.as_str() {
            "su" => (Family::Su, need(n)?),
            "so" => (Family::So, need(n)?),
            "sp" => (Family::Sp, need(n)?),
            "hopf" => (Family::Hopf, 2),
            "e" => match need(n)? {
                6 => (Family::E6, 6),
                7 => (Family::E7, 7),
                8 => (Family::E8, 8),
                k => return Err(JoyceError::UnknownFamily(format!("e{k}"))),
            },
            "e6" => (Family::E6, 6),
            "e7" => (Family::E7, 7),
            "e8" => (Family::E8, 8),
            "f" | "f4" => (Family::F4, 4),
            "g" | "g2" => (Family::G2, 2),
            _ => return Err(JoyceError::UnknownFamily(fam)),
        };
        let spec = GroupSpec { family, n, torus };
        spec.root_type()?;
        Ok(spec)
    }

    /// Type and rank of the simple factor.
    pub fn root_type(&self) -> Result<(TypeLetter, usize), JoyceError> {
        let bad = || JoyceError::UnknownFamily(self.to_string());
        Ok(match self.family {
            Family::Su if self.n >= 2 => (TypeLetter::A, self.n - 1),
            Family::Hopf => (TypeLetter::A, 1),
            Family::So if self.n >= 5 && self.n % 2 == 1 => (TypeLetter::B, (self.n - 1) / 2),
            Family::So if self.n >= 6 && self.n % 2 == 0 => (TypeLetter::D, self.n / 2),
            Family::Sp if self.n >= 2 => (TypeLetter::C, self.n),
            Family::E6 => (TypeLetter::E, 6),
            Family::E7 => (TypeLetter::E, 7),
            Family::E8 => (TypeLetter::E, 8),
            Family::F4 => (TypeLetter::F, 4),
            Family::G2 => (TypeLetter::G, 2),
            _ => return Err(bad()),
        })
    }

    /// True for families that default to the combinatorial path.
    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E6 | Family::E7 | Family::E8 | Family::F4)
    }

    /// Root-adapted compact simple algebra: matrix models for `su` and `sp`,
    /// the Chevalley form otherwise.
    pub fn rooted_algebra(&self) -> Result<RootedAlgebra, JoyceError> {
        let (letter, rank) = self.root_type()?;
        let mut g = match self.family {
            Family::Su | Family::Hopf => su_model(rank + 1)?,
            Family::Sp => sp_model(rank)?,
            _ => chevalley_compact_form(&RootSystem::new(letter, rank)?)?,
        };
        if self.family == Family::So {
            g.name = format!("so({})", self.n);
        }
        Ok(g)
    }

    /// Joyce decomposition of `T^ell x G`, using the nested basis of `b`
    /// for `SU(2n+1)`.
    pub fn decompose(&self) -> Result<JoyceDecomposition, JoyceError> {
        let g = self.rooted_algebra()?;
        let b = match self.family {
            Family::Su if self.n % 2 == 1 && self.n >= 3 => Some(su_odd_b_basis(&g)?),
            _ => None,
        };
        let d = joyce_decompose(&g, b)?;
        if let Some(t) = self.torus {
            if t != d.ell {
                return Err(JoyceError::TorusMismatch {
                    expected: d.ell,
                    given: t,
                });
            }
        }
        Ok(d)
    }
}

/// Nested basis `E_1..E_n` of `b` for `su(2n+1)`: `E_k` is `i` times the
/// diagonal matrix that vanishes on the first `2k-2` entries, equals
/// `2n-2k+1` on the next two and `-2` on the rest.
pub fn su_odd_b_basis(g: &RootedAlgebra) -> Result<Vec<Vec<Rational>>, JoyceError> {
    let model = g
        .model
        .as_ref()
        .ok_or_else(|| JoyceError::Inconsistent("su(2n+1) needs its matrix model".into()))?;
    let size = model.n();
    let n = (size - 1) / 2;
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut e = QuatMatrix::zeros(size);
        let a = (2 * n - 2 * k + 1) as i64;
        for t in 2 * k - 2..size {
            let c = if t < 2 * k { a } else { -2 };
            *e.get_mut(t, t) = Quaternion::from_i64([0, c, 0, 0]);
        }
        out.push(
            model
                .coords_of(&e)
                .ok_or_else(|| JoyceError::Inconsistent("E_k outside su(2n+1)".into()))?,
        );
    }
    Ok(out)
}
