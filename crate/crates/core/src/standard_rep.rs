//! The seven-dimensional standard module of the derivation algebra.
//!
//! The imaginary octonions carry the smallest faithful action of the
//! algebra.  Simultaneous eigenvectors of the two coroots give a basis of
//! seven weight vectors — one of weight zero, six indexed by the short
//! roots — and every root vector moves weight vectors along the root
//! diagram with signs +1, -1, or a single -2.  This module computes the
//! full action table, the sign rule, and the exact change of basis that
//! makes every generator an integer matrix.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::chevalley::{weight_vector, weight_zero_vector, ChevalleyBasis, Root};
use crate::linalg::{self, Matrix, Operator};
use crate::octonion::{Octonion, OCT_DIM};
use crate::scalar::Scalar;

/// A weight of the standard module: zero or a short root.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Weight {
    Zero,
    Of(Root),
}

impl Weight {
    /// The seven weights in the frozen basis order.
    pub const ALL: [Weight; 7] = [
        Weight::Zero,
        Weight::Of(Root::Beta),
        Weight::Of(Root::BetaP),
        Weight::Of(Root::BetaPP),
        Weight::Of(Root::MinusBeta),
        Weight::Of(Root::MinusBetaP),
        Weight::Of(Root::MinusBetaPP),
    ];

    pub fn mn(self) -> (i64, i64) {
        match self {
            Weight::Zero => (0, 0),
            Weight::Of(root) => root.mn(),
        }
    }

    pub fn index(self) -> usize {
        Weight::ALL.iter().position(|&w| w == self).expect("weight is listed")
    }

    pub fn from_mn(mn: (i64, i64)) -> Option<Weight> {
        Weight::ALL.iter().copied().find(|w| w.mn() == mn)
    }

    /// The weight vector in octonion coordinates.
    pub fn vector(self) -> Octonion {
        match self {
            Weight::Zero => weight_zero_vector(),
            Weight::Of(root) => weight_vector(root),
        }
    }

    pub fn label(self) -> String {
        match self {
            Weight::Zero => String::from("0"),
            Weight::Of(root) => String::from(root.label()),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One entry of the action table: the image of a weight vector under a root
/// vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ActionEntry {
    Zero,
    /// `-2 v_0` — the image of the opposite weight vector under a short
    /// root vector.
    MinusTwoZero,
    /// `sign * v_w` for the given weight.
    Signed(i8, Weight),
}

/// The sign in `E_rho v_psi = +/- v_(rho+psi)`, for a root `rho` and short
/// root `psi` with `rho + psi` again a short root: plus exactly when the sum
/// is the one-step rotation of `psi` or the negated two-step rotation.
pub fn action_sign(rho: Root, psi: Root) -> i8 {
    assert!(psi.is_short());
    let sum = Weight::from_mn({
        let (m1, n1) = rho.mn();
        let (m2, n2) = psi.mn();
        (m1 + m2, n1 + n2)
    });
    let sum_root = match sum {
        Some(Weight::Of(root)) => root,
        _ => panic!("sum must be a short root"),
    };
    if sum_root == psi.rotated() || sum_root == psi.rotated().rotated().negated() {
        1
    } else {
        assert!(
            sum_root == psi.rotated().rotated() || sum_root == psi.rotated().negated(),
            "sum of a root and a short root is a quarter-turn neighbour"
        );
        -1
    }
}

/// Equivalent geometric form of the sign: positive exactly when turning
/// from `psi` to `rho + psi` goes anticlockwise by less than a half turn,
/// as measured by the determinant of their simple-root coordinates.
pub fn action_sign_geometric(rho: Root, psi: Root) -> i8 {
    let (p1, q1) = psi.pq();
    let sum = rho.plus(psi).expect("sum must be a root");
    let (p2, q2) = sum.pq();
    let det = p1 * q2 - q1 * p2;
    assert_ne!(det, 0, "distinct short roots are never parallel");
    if det > 0 {
        1
    } else {
        -1
    }
}

/// The expected image of the weight vector `w` under `E_rho`, by the table
/// rules.
pub fn expected_action(rho: Root, w: Weight) -> ActionEntry {
    match w {
        Weight::Zero => {
            if rho.is_short() {
                ActionEntry::Signed(1, Weight::Of(rho))
            } else {
                ActionEntry::Zero
            }
        }
        Weight::Of(psi) => {
            if rho.is_short() && psi == rho.negated() {
                return ActionEntry::MinusTwoZero;
            }
            let (m1, n1) = rho.mn();
            let (m2, n2) = psi.mn();
            match Weight::from_mn((m1 + m2, n1 + n2)) {
                Some(Weight::Zero) => unreachable!("handled as the opposite pair"),
                Some(sum @ Weight::Of(_)) => ActionEntry::Signed(action_sign(rho, psi), sum),
                None => ActionEntry::Zero,
            }
        }
    }
}

/// The standard module with its frozen weight basis: the change of basis
/// from octonion coordinates, and every generator as an integer matrix.
pub struct StandardRep {
    basis: ChevalleyBasis,
    weight_matrix: Matrix,
    weight_matrix_inv: Matrix,
    generators: BTreeMap<Root, Matrix>,
}

/// Restriction of a derivation to the seven imaginary coordinates.
/// Derivations kill the unit and preserve imaginaries, so row and column
/// zero of the 8 x 8 matrix vanish.
pub fn imaginary_restriction(op: &Operator) -> Matrix {
    assert_eq!(op.rows(), OCT_DIM);
    let mut out = Matrix::zero(7, 7);
    for i in 0..7 {
        assert!(op.at(0, 1 + i).is_zero(), "derivations preserve imaginaries");
        assert!(op.at(1 + i, 0).is_zero(), "derivations kill the unit");
        for j in 0..7 {
            *out.at_mut(i, j) = op.at(1 + i, 1 + j).clone();
        }
    }
    assert!(op.at(0, 0).is_zero());
    out
}

impl StandardRep {
    pub fn build() -> StandardRep {
        let basis = ChevalleyBasis::build();
        // Columns of the change-of-basis matrix are the weight vectors in
        // imaginary coordinates.
        let mut weight_matrix = Matrix::zero(7, 7);
        for (k, w) in Weight::ALL.iter().enumerate() {
            let v = w.vector();
            assert!(v.is_imaginary());
            for i in 0..7 {
                *weight_matrix.at_mut(i, k) = v.coord(1 + i).clone();
            }
        }
        let weight_matrix_inv = linalg::invert(&weight_matrix).expect("weight vectors are a basis");
        let mut generators = BTreeMap::new();
        for root in Root::ALL {
            let restricted = imaginary_restriction(basis.root_vector(root));
            let conjugated = weight_matrix_inv.mul(&restricted).mul(&weight_matrix);
            generators.insert(root, conjugated);
        }
        StandardRep { basis, weight_matrix, weight_matrix_inv, generators }
    }

    pub fn chevalley(&self) -> &ChevalleyBasis {
        &self.basis
    }

    /// The 7 x 7 change-of-basis matrix whose columns are the weight
    /// vectors.
    pub fn weight_matrix(&self) -> &Matrix {
        &self.weight_matrix
    }

    /// The action of `E_rho` on weight coordinates — an integer matrix with
    /// at most one nonzero entry per column.
    pub fn generator(&self, rho: Root) -> &Matrix {
        &self.generators[&rho]
    }

    /// The coordinates of an imaginary octonion in the weight basis.
    pub fn weight_coordinates(&self, v: &Octonion) -> Vec<Scalar> {
        assert!(v.is_imaginary(), "weight coordinates are defined on imaginaries");
        let imaginary: Vec<Scalar> = (0..7).map(|i| v.coord(1 + i).clone()).collect();
        self.weight_matrix_inv.apply(&imaginary)
    }

    /// The action of the coroot of `rho` on weight coordinates: the
    /// diagonal matrix of eigenvalues.
    pub fn coroot_matrix(&self, rho: Root) -> Matrix {
        let restricted = imaginary_restriction(self.basis.coroot(rho));
        self.weight_matrix_inv.mul(&restricted).mul(&self.weight_matrix)
    }

    /// The image of a weight vector under a root vector, in octonion
    /// coordinates.
    pub fn act(&self, rho: Root, w: Weight) -> Octonion {
        Octonion::from_coords(self.basis.root_vector(rho).apply(w.vector().coords()))
    }

    /// The full 12 x 7 action table in the frozen orders.
    pub fn action_table(&self) -> Vec<(Root, Vec<ActionEntry>)> {
        Root::ALL
            .iter()
            .map(|&rho| {
                let row = Weight::ALL.iter().map(|&w| expected_action(rho, w)).collect();
                (rho, row)
            })
            .collect()
    }
}

/// The joint coroot eigenvalues of an octonion, if it is a simultaneous
/// eigenvector; `None` otherwise.
pub fn weight_of(basis: &ChevalleyBasis, v: &Octonion) -> Option<(i64, i64)> {
    if v.is_zero() {
        return None;
    }
    let mut out = [0i64; 2];
    for (slot, h) in [basis.h_beta(), basis.h_gamma()].into_iter().enumerate() {
        let image = Octonion::from_coords(h.apply(v.coords()));
        let pivot = (0..OCT_DIM).find(|&k| !v.coord(k).is_zero()).expect("nonzero");
        let lambda = image.coord(pivot).checked_div(v.coord(pivot)).ok()?;
        if v.scale(&lambda) != image {
            return None;
        }
        out[slot] = i64::try_from(lambda.to_integer()?).ok()?;
    }
    Some((out[0], out[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn e(i: i64) -> Octonion {
        Octonion::imaginary_unit(i)
    }

    #[test]
    fn weight_vectors_are_simultaneous_eigenvectors() {
        let basis = ChevalleyBasis::build();
        for w in Weight::ALL {
            assert_eq!(weight_of(&basis, &w.vector()), Some(w.mn()), "at {}", w);
        }
    }

    #[test]
    fn conjugate_combination_has_the_opposite_weight() {
        // e2 - i e6 is proportional to the weight vector of beta', not of
        // -beta'; the honest -beta' vector is its complex conjugate
        // -i e2 + e6.  The two are not scalar multiples of each other.
        let basis = ChevalleyBasis::build();
        let printed = e(2).sub(&e(6).scale(&Scalar::i()));
        assert_eq!(weight_of(&basis, &printed), Some(Root::BetaP.mn()));
        let correct = e(2).scale(&(-&Scalar::i())).add(&e(6));
        assert_eq!(weight_of(&basis, &correct), Some(Root::MinusBetaP.mn()));
        assert_eq!(printed, weight_vector(Root::BetaP).scale(&(-&Scalar::i())));
    }

    #[test]
    fn action_matches_the_table_everywhere() {
        let rep = StandardRep::build();
        for rho in Root::ALL {
            for w in Weight::ALL {
                let actual = rep.act(rho, w);
                let expected = match expected_action(rho, w) {
                    ActionEntry::Zero => Octonion::zero(),
                    ActionEntry::MinusTwoZero => {
                        weight_zero_vector().scale(&Scalar::from_integer(-2))
                    }
                    ActionEntry::Signed(sign, target) => {
                        target.vector().scale(&Scalar::from_integer(i64::from(sign)))
                    }
                };
                assert_eq!(actual, expected, "E_{} on {}", rho, w);
            }
        }
    }

    #[test]
    fn frozen_table_examples() {
        let rep = StandardRep::build();
        // E_psi v_0 = v_psi for every short root.
        for psi in Root::SHORT {
            assert_eq!(rep.act(psi, Weight::Zero), weight_vector(psi));
        }
        // E_beta v_-beta = -2 v_0.
        assert_eq!(
            rep.act(Root::Beta, Weight::Of(Root::MinusBeta)),
            weight_zero_vector().scale(&Scalar::from_integer(-2))
        );
        // Long root vectors kill v_0.
        for nu in Root::LONG {
            assert!(rep.act(nu, Weight::Zero).is_zero());
        }
        // Signed arrows.
        assert_eq!(
            rep.act(Root::BetaP, Weight::Of(Root::Beta)),
            weight_vector(Root::MinusBetaPP)
        );
        assert_eq!(
            rep.act(Root::Gamma, Weight::Of(Root::Beta)),
            weight_vector(Root::BetaP)
        );
        assert_eq!(
            rep.act(Root::BetaPP, Weight::Of(Root::Beta)),
            weight_vector(Root::MinusBetaP).neg()
        );
        assert_eq!(
            rep.act(Root::MinusGammaPP, Weight::Of(Root::Beta)),
            weight_vector(Root::BetaPP).neg()
        );
    }

    #[test]
    fn algebraic_and_geometric_signs_agree() {
        let mut arrows = 0;
        for rho in Root::ALL {
            for psi in Root::SHORT {
                if rho.is_short() && psi == rho.negated() {
                    continue;
                }
                let (m1, n1) = rho.mn();
                let (m2, n2) = psi.mn();
                if let Some(Weight::Of(_)) = Weight::from_mn((m1 + m2, n1 + n2)) {
                    assert_eq!(
                        action_sign(rho, psi),
                        action_sign_geometric(rho, psi),
                        "at {}, {}",
                        rho,
                        psi
                    );
                    arrows += 1;
                }
            }
        }
        // Each root moves exactly two short weights to other short weights.
        assert_eq!(arrows, 24);
    }

    #[test]
    fn generators_are_integer_single_entry_matrices() {
        let rep = StandardRep::build();
        for rho in Root::ALL {
            let m = rep.generator(rho);
            for col in 0..7 {
                let mut nonzero = 0;
                for row in 0..7 {
                    let entry = m.at(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    nonzero += 1;
                    let value = entry.to_integer().expect("integer entry");
                    let value = i64::try_from(value).unwrap();
                    assert!(matches!(value, 1 | -1 | -2), "entry {} at {}", value, rho);
                }
                assert!(nonzero <= 1, "one arrow per weight at {}", rho);
            }
            // The matrix realizes the action table.
            for (col, w) in Weight::ALL.iter().enumerate() {
                match expected_action(rho, *w) {
                    ActionEntry::Zero => {
                        for row in 0..7 {
                            assert!(m.at(row, col).is_zero());
                        }
                    }
                    ActionEntry::MinusTwoZero => {
                        assert_eq!(m.at(0, col), &Scalar::from_integer(-2));
                    }
                    ActionEntry::Signed(sign, target) => {
                        assert_eq!(
                            m.at(target.index(), col),
                            &Scalar::from_integer(i64::from(sign))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn coroot_matrices_are_diagonal_eigenvalues() {
        let rep = StandardRep::build();
        for rho in Root::ALL {
            let m = rep.coroot_matrix(rho);
            for (k, w) in Weight::ALL.iter().enumerate() {
                for j in 0..7 {
                    if j != k {
                        assert!(m.at(k, j).is_zero(), "off-diagonal at {}", rho);
                    }
                }
                // Diagonal entry = pairing of the weight with the coroot,
                // 2 <w, rho> / <rho, rho>.
                let expected = match w {
                    Weight::Zero => 0,
                    Weight::Of(psi) => 2 * psi.inner(rho) / rho.norm2(),
                };
                assert_eq!(m.at(k, k), &Scalar::from_integer(expected), "at {}, {}", rho, w);
            }
        }
    }

    #[test]
    fn weight_of_rejects_non_eigenvectors() {
        let basis = ChevalleyBasis::build();
        let mixed = weight_vector(Root::Beta).add(&weight_vector(Root::BetaP));
        assert_eq!(weight_of(&basis, &mixed), None);
        assert_eq!(weight_of(&basis, &Octonion::zero()), None);
    }

    #[test]
    fn module_has_no_invariant_line_through_weight_vectors() {
        // The action moves every weight vector somewhere new: the module is
        // generated by any single weight vector.
        let rep = StandardRep::build();
        for w in Weight::ALL {
            let mut moved = false;
            for rho in Root::ALL {
                if !rep.act(rho, w).is_zero() {
                    moved = true;
                }
            }
            assert!(moved);
        }
    }
}
