//! `R^2 ⊕ sp(2)` in an explicit quaternionic frame.

use hypercx_core::{LieAlgebraData, QuatMatrix, Quaternion, Rational};
use num_traits::Zero;

/// Labels of the frame `e^1_1..e^1_4, f^1_1..f^1_4, e^2_1..e^2_4`.
pub const SP2_FRAME_LABELS: [&str; 12] = [
    "e^1_1", "e^1_2", "e^1_3", "e^1_4", "f^1_1", "f^1_2", "f^1_3", "f^1_4", "e^2_1", "e^2_2", "e^2_3", "e^2_4",
];

/// `R^2 ⊕ sp(2)` in the frame where `e^1_1, e^2_1` span the centre,
/// `e^1_t` and `e^2_t` are `i, j, k` in the diagonal entries, and
/// `f^1_1 = E_12 - E_21`, `f^1_t = q(E_12 + E_21)` for `q = i, j, k`.
///
/// In this frame the Joyce structure with identity parameters is the
/// standard one.
pub fn sp2_quaternionic_algebra() -> LieAlgebraData {
    let u = |a, b, t| QuatMatrix::unit(2, a, b, Quaternion::<Rational>::basis(t));
    let f1 = u(0, 1, 0).sub(&u(1, 0, 0));
    let ft = |t| u(0, 1, t).add(&u(1, 0, t));
    // None marks a central direction.
    let basis: [Option<QuatMatrix>; 12] = [
        None,
        Some(u(0, 0, 1)),
        Some(u(0, 0, 2)),
        Some(u(0, 0, 3)),
        Some(f1),
        Some(ft(1)),
        Some(ft(2)),
        Some(ft(3)),
        None,
        Some(u(1, 1, 1)),
        Some(u(1, 1, 2)),
        Some(u(1, 1, 3)),
    ];
    // Each basis matrix is read off from one distinguished entry.
    let coords = |m: &QuatMatrix| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); 12];
        v[1..4].clone_from_slice(&m.get(0, 0).0[1..4]);
        v[9..12].clone_from_slice(&m.get(1, 1).0[1..4]);
        v[4..8].clone_from_slice(&m.get(0, 1).0);
        let mut back = QuatMatrix::zeros(2);
        for (k, b) in basis.iter().enumerate() {
            if let Some(b) = b {
                back.add_scaled(&v[k], b);
            }
        }
        assert_eq!(&back, m, "bracket leaves sp(2)");
        v
    };
    let mut br = Vec::new();
    for a in 0..12 {
        for b in a + 1..12 {
            if let (Some(x), Some(y)) = (&basis[a], &basis[b]) {
                br.push(((a, b), coords(&x.commutator(y))));
            }
        }
    }
    LieAlgebraData::from_brackets(SP2_FRAME_LABELS.iter().map(|s| s.to_string()).collect(), br)
        .expect("antisymmetric brackets")
}
