//! Counts of trivial `f_j` summands, computed from root data and compared
//! with their closed forms.

use hypercx_rootsys::{diagram_joyce_decomposition, RootError, TypeLetter};
use serde::Serialize;

/// Closed-form number of trivial `f_j` for a simple type.
pub fn closed_form(letter: TypeLetter, rank: usize) -> Option<(usize, &'static str)> {
    use TypeLetter::*;
    Some(match (letter, rank) {
        (A, r) if r >= 1 && r % 2 == 1 => (1, "SU(2k): 1"),
        (A, r) if r >= 2 => (0, "SU(2k+1): 0"),
        (B, k) if k >= 2 => (k.div_ceil(2), "SO(2k+1): ceil(k/2)"),
        (C, k) if k >= 2 => (1, "Sp(k): 1"),
        (D, r) if r >= 4 && r % 2 == 0 => (r / 2 + 1, "SO(4k): k+1"),
        (D, r) if r >= 3 => ((r - 1) / 2, "SO(4k+2): k"),
        (E, 6) => (1, "E6: 1"),
        (E, 7) => (4, "E7: 4"),
        (E, 8) => (4, "E8: 4"),
        (F, 4) => (1, "F4: 1"),
        (G, 2) => (1, "G2: 1"),
        _ => return None,
    })
}

/// Group name for a simple type.
pub fn group_name(letter: TypeLetter, rank: usize) -> String {
    use TypeLetter::*;
    match letter {
        A => format!("SU({})", rank + 1),
        B => format!("SO({})", 2 * rank + 1),
        C => format!("Sp({rank})"),
        D => format!("SO({})", 2 * rank),
        E => format!("E{rank}"),
        F => "F4".into(),
        G => "G2".into(),
    }
}

/// One row of the table.
#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    /// Group name.
    pub group: String,
    /// Type letter.
    #[serde(rename = "type")]
    pub letter: TypeLetter,
    /// Rank.
    pub rank: usize,
    /// Number of layers.
    pub m: usize,
    /// Torus dimension.
    pub ell: usize,
    /// `f_hdim` per layer.
    pub f_hdims: Vec<usize>,
    /// Trivial `f_j` from the root recursion.
    pub trivial_f: usize,
    /// Closed-form value.
    pub expected: usize,
    /// Closed-form rule.
    pub rule: &'static str,
    /// `trivial_f == expected`.
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Every simple type of rank at most `max_rank`, in table order.
pub fn types_up_to(max_rank: usize) -> Vec<(TypeLetter, usize)> {
    use TypeLetter::*;
    let mut out = vec![(G, 2), (F, 4), (E, 6), (E, 7), (E, 8)];
    out.retain(|&(_, r)| r <= max_rank);
    out.extend((2..=max_rank).map(|k| (C, k)));
    out.extend((2..=max_rank).map(|k| (B, k)));
    out.extend((4..=max_rank).step_by(2).map(|r| (D, r)));
    out.extend((3..=max_rank).step_by(2).map(|r| (D, r)));
    out.extend((1..=max_rank).step_by(2).map(|r| (A, r)));
    out.extend((2..=max_rank).step_by(2).map(|r| (A, r)));
    out
}

/// Computes one row.
pub fn row(letter: TypeLetter, rank: usize) -> Result<Table1Row, RootError> {
    let d = diagram_joyce_decomposition(letter, rank)?;
    let (expected, rule) =
        closed_form(letter, rank).ok_or_else(|| RootError::InvalidType(letter.to_string(), rank))?;
    Ok(Table1Row {
        group: group_name(letter, rank),
        letter,
        rank,
        m: d.m,
        ell: d.ell,
        f_hdims: d.layers.iter().map(|l| l.f_quaternionic_dim).collect(),
        trivial_f: d.trivial_f_count,
        expected,
        rule,
        matches: d.trivial_f_count == expected,
    })
}

/// The full table up to `max_rank`.
pub fn table(max_rank: usize) -> Result<Vec<Table1Row>, RootError> {
    types_up_to(max_rank).into_iter().map(|(l, r)| row(l, r)).collect()
}
