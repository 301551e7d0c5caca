//! The root system and Chevalley basis of the derivation algebra.
//!
//! Two commuting semisimple elements are singled out inside one abelian
//! two-dimensional subalgebra; their joint eigenvalues on the algebra form a
//! rank-two root system with six short and six long roots.  Root vectors are
//! constructed from wedges of weight vectors of the seven-dimensional
//! standard module, and the whole basis is transported around the root
//! system by an order-three index-doubling symmetry together with entrywise
//! complex conjugation.  All structure constants come out as integers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::derivations::{d_pair, Wedge2, WEDGE_PAIRS};
use crate::linalg::{self, LinalgError, Matrix, Operator, SpanSolver, Subspace};
use crate::octonion::{conjugate_transport, GaloisSymmetry, Octonion, OCT_DIM};
use crate::scalar::Scalar;

/// Dimension of the algebra.
pub const ALGEBRA_DIM: usize = 14;

/// The twelve roots.  The primed versions are the images of the unprimed
/// ones under the order-three rotation induced by index doubling.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Root {
    Beta,
    BetaP,
    BetaPP,
    Gamma,
    GammaP,
    GammaPP,
    MinusBeta,
    MinusBetaP,
    MinusBetaPP,
    MinusGamma,
    MinusGammaP,
    MinusGammaPP,
}

use Root::*;

impl Root {
    /// All twelve roots: positives first, each family in twist order.
    pub const ALL: [Root; 12] = [
        Beta, BetaP, BetaPP, Gamma, GammaP, GammaPP,
        MinusBeta, MinusBetaP, MinusBetaPP, MinusGamma, MinusGammaP, MinusGammaPP,
    ];

    pub const POSITIVE: [Root; 6] = [Beta, BetaP, BetaPP, Gamma, GammaP, GammaPP];

    pub const SHORT: [Root; 6] = [Beta, BetaP, BetaPP, MinusBeta, MinusBetaP, MinusBetaPP];

    pub const LONG: [Root; 6] = [Gamma, GammaP, GammaPP, MinusGamma, MinusGammaP, MinusGammaPP];

    /// Builds a root from its family (`false` = short family, `true` = long),
    /// twist count modulo three, and sign.
    pub fn from_family(long: bool, twist: usize, negative: bool) -> Root {
        let table = [
            [Beta, BetaP, BetaPP],
            [Gamma, GammaP, GammaPP],
            [MinusBeta, MinusBetaP, MinusBetaPP],
            [MinusGamma, MinusGammaP, MinusGammaPP],
        ];
        table[usize::from(long) + 2 * usize::from(negative)][twist % 3]
    }

    pub fn is_long(self) -> bool {
        matches!(self, Gamma | GammaP | GammaPP | MinusGamma | MinusGammaP | MinusGammaPP)
    }

    pub fn is_short(self) -> bool {
        !self.is_long()
    }

    pub fn is_negative(self) -> bool {
        matches!(
            self,
            MinusBeta | MinusBetaP | MinusBetaPP | MinusGamma | MinusGammaP | MinusGammaPP
        )
    }

    /// Number of index-doubling steps from the unprimed root of the family.
    pub fn twist(self) -> usize {
        match self {
            Beta | Gamma | MinusBeta | MinusGamma => 0,
            BetaP | GammaP | MinusBetaP | MinusGammaP => 1,
            BetaPP | GammaPP | MinusBetaPP | MinusGammaPP => 2,
        }
    }

    pub fn negated(self) -> Root {
        Root::from_family(self.is_long(), self.twist(), !self.is_negative())
    }

    /// Image under the order-three rotation (one index-doubling step).
    pub fn rotated(self) -> Root {
        Root::from_family(self.is_long(), self.twist() + 1, self.is_negative())
    }

    /// Eigenvalue coordinates `(m, n)`: the values of the root on the two
    /// chosen coroots.
    pub fn mn(self) -> (i64, i64) {
        let (m, n) = match (self.is_long(), self.twist()) {
            (false, 0) => (2, -1),
            (false, 1) => (-1, 1),
            (false, 2) => (-1, 0),
            (true, 0) => (-3, 2),
            (true, 1) => (0, -1),
            (true, 2) => (3, -1),
            _ => unreachable!(),
        };
        if self.is_negative() {
            (-m, -n)
        } else {
            (m, n)
        }
    }

    /// Coordinates `(p, q)` over the two simple roots:
    /// `p = 2m + 3n`, `q = m + 2n`.
    pub fn pq(self) -> (i64, i64) {
        let (m, n) = self.mn();
        (2 * m + 3 * n, m + 2 * n)
    }

    pub fn from_mn(mn: (i64, i64)) -> Option<Root> {
        Root::ALL.iter().copied().find(|r| r.mn() == mn)
    }

    /// The sum as a root, when it is one.
    pub fn plus(self, other: Root) -> Option<Root> {
        let (m1, n1) = self.mn();
        let (m2, n2) = other.mn();
        Root::from_mn((m1 + m2, n1 + n2))
    }

    /// Invariant inner product, normalized so short roots have square
    /// length 2 and long roots 6.
    pub fn inner(self, other: Root) -> i64 {
        let (p1, q1) = self.pq();
        let (p2, q2) = other.pq();
        2 * p1 * p2 - 3 * (p1 * q2 + q1 * p2) + 6 * q1 * q2
    }

    pub fn norm2(self) -> i64 {
        self.inner(self)
    }

    /// ASCII label: `beta`, `beta'`, `-gamma''`, and so on.
    pub fn label(self) -> &'static str {
        match self {
            Beta => "beta",
            BetaP => "beta'",
            BetaPP => "beta''",
            Gamma => "gamma",
            GammaP => "gamma'",
            GammaPP => "gamma''",
            MinusBeta => "-beta",
            MinusBetaP => "-beta'",
            MinusBetaPP => "-beta''",
            MinusGamma => "-gamma",
            MinusGammaP => "-gamma'",
            MinusGammaPP => "-gamma''",
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The zero-weight vector of the seven-dimensional module: `e0`.
pub fn weight_zero_vector() -> Octonion {
    Octonion::imaginary_unit(0)
}

/// The weight vector of a short root.  The base vector is `i e1 + e3`;
/// primed vectors apply index doubling, negatives apply complex conjugation.
pub fn weight_vector(psi: Root) -> Octonion {
    assert!(psi.is_short(), "only short roots are weights of the standard module");
    let base = Octonion::imaginary_unit(1)
        .scale(&Scalar::i())
        .add(&Octonion::imaginary_unit(3));
    let twisted = GaloisSymmetry::FROBENIUS.power(psi.twist() as i64).apply_octonion(&base);
    if psi.is_negative() {
        twisted.complex_conjugate()
    } else {
        twisted
    }
}

/// For a long root, the canonical pair of short roots summing to it whose
/// weight-vector wedge produces its root vector.
pub fn long_root_factors(nu: Root) -> (Root, Root) {
    assert!(nu.is_long());
    let psi1 = Root::from_family(false, nu.twist(), !nu.is_negative());
    let psi2 = nu.plus(psi1.negated()).expect("difference of a long root and a short root");
    debug_assert!(psi2.is_short());
    debug_assert_eq!(psi1.plus(psi2), Some(nu));
    (psi1, psi2)
}

fn d_wedge_of(a: &Octonion, b: &Octonion) -> Operator {
    d_pair(a, b)
}

/// The Chevalley basis: two coroots and twelve root vectors, in the frozen
/// order `[H_beta, H_gamma, E_beta, E_beta', E_beta'', E_gamma, E_gamma',
/// E_gamma'', E_-beta, ..., E_-gamma'']`, realized as operators on the
/// eight octonion coordinates.
pub struct ChevalleyBasis {
    elements: Vec<Operator>,
    coroots: BTreeMap<Root, Operator>,
    root_vectors: BTreeMap<Root, Operator>,
    solver: SpanSolver,
}

impl ChevalleyBasis {
    pub fn build() -> ChevalleyBasis {
        let i = Scalar::i();
        let minus_i = -&i;
        let d13 = d_pair(&Octonion::imaginary_unit(1), &Octonion::imaginary_unit(3));
        let d26 = d_pair(&Octonion::imaginary_unit(2), &Octonion::imaginary_unit(6));

        let h_beta = d13.scale(&minus_i);
        let h_gamma = d13.sub(&d26).scale(&Scalar::i().checked_div(&Scalar::from_integer(3)).unwrap());

        // Coroots for every root, transported by index doubling; negatives
        // are negations.
        let fr = GaloisSymmetry::FROBENIUS;
        let mut coroots: BTreeMap<Root, Operator> = BTreeMap::new();
        for family_base in [Beta, Gamma] {
            let base_op = if family_base == Beta { h_beta.clone() } else { h_gamma.clone() };
            let mut op = base_op;
            for twist in 0..3 {
                let root = Root::from_family(family_base == Gamma, twist, false);
                coroots.insert(root, op.clone());
                coroots.insert(root.negated(), op.neg());
                op = fr.conjugate_operator(&op);
            }
        }

        // Root vectors: the short base from a wedge with the zero-weight
        // vector, the long base from a wedge of two short weight vectors;
        // then transport by index doubling and complex conjugation.
        let half = Scalar::ratio(1, 2).unwrap();
        let sixth = Scalar::ratio(1, 6).unwrap();
        let v0 = weight_zero_vector();

        let e_beta = d_wedge_of(&v0, &weight_vector(Beta)).scale(&half);
        let (psi1, psi2) = long_root_factors(Gamma);
        let e_gamma = d_wedge_of(&weight_vector(psi1), &weight_vector(psi2)).scale(&sixth);

        let mut root_vectors: BTreeMap<Root, Operator> = BTreeMap::new();
        for (base_root, base_op) in [(Beta, e_beta), (Gamma, e_gamma)] {
            let mut op = base_op;
            for twist in 0..3 {
                let root = Root::from_family(base_root == Gamma, twist, false);
                root_vectors.insert(root, op.clone());
                root_vectors.insert(root.negated(), conjugate_transport(&op));
                op = fr.conjugate_operator(&op);
            }
        }

        let mut elements = Vec::with_capacity(ALGEBRA_DIM);
        elements.push(coroots[&Beta].clone());
        elements.push(coroots[&Gamma].clone());
        for root in Root::ALL {
            elements.push(root_vectors[&root].clone());
        }

        let flattened: Vec<_> = elements.iter().map(Operator::flatten).collect();
        let solver = SpanSolver::greedy(OCT_DIM * OCT_DIM, &flattened);
        assert_eq!(solver.rank(), ALGEBRA_DIM, "Chevalley elements must be independent");

        ChevalleyBasis { elements, coroots, root_vectors, solver }
    }

    /// The fourteen basis operators in frozen order.
    pub fn elements(&self) -> &[Operator] {
        &self.elements
    }

    /// Labels matching `elements`.
    pub fn labels() -> Vec<String> {
        let mut out = Vec::with_capacity(ALGEBRA_DIM);
        out.push(String::from("H_beta"));
        out.push(String::from("H_gamma"));
        for root in Root::ALL {
            out.push(alloc::format!("E_{}", root.label()));
        }
        out
    }

    /// Position of a root vector in the frozen basis order.
    pub fn root_index(root: Root) -> usize {
        2 + Root::ALL.iter().position(|&r| r == root).unwrap()
    }

    pub fn h_beta(&self) -> &Operator {
        &self.elements[0]
    }

    pub fn h_gamma(&self) -> &Operator {
        &self.elements[1]
    }

    /// The transported coroot of any root; negatives negate.
    pub fn coroot(&self, root: Root) -> &Operator {
        &self.coroots[&root]
    }

    pub fn root_vector(&self, root: Root) -> &Operator {
        &self.root_vectors[&root]
    }

    /// Coordinates of an operator over the basis; errors if outside the span.
    pub fn coordinates(&self, op: &Operator) -> Result<Vec<Scalar>, LinalgError> {
        self.solver.express(&op.flatten())
    }

    /// The matrix of `ad(op)` on basis coordinates.
    pub fn adjoint_matrix(&self, op: &Operator) -> Result<Matrix, LinalgError> {
        let mut m = Matrix::zero(ALGEBRA_DIM, ALGEBRA_DIM);
        for (k, b) in self.elements.iter().enumerate() {
            let coords = self.coordinates(&op.commutator(b))?;
            for (row, c) in coords.into_iter().enumerate() {
                *m.at_mut(row, k) = c;
            }
        }
        Ok(m)
    }

    /// All 14 x 14 commutators expressed over the basis, as exact integers.
    pub fn structure_constants(&self) -> Result<StructureConstants, LinalgError> {
        let mut table = alloc::vec![0i64; ALGEBRA_DIM * ALGEBRA_DIM * ALGEBRA_DIM];
        for i in 0..ALGEBRA_DIM {
            for j in 0..ALGEBRA_DIM {
                let bracket = self.elements[i].commutator(&self.elements[j]);
                let coords = self.coordinates(&bracket)?;
                for (k, c) in coords.into_iter().enumerate() {
                    let value = c
                        .to_integer()
                        .and_then(|n| i64::try_from(n).ok())
                        .expect("structure constants are integers");
                    table[(i * ALGEBRA_DIM + j) * ALGEBRA_DIM + k] = value;
                }
            }
        }
        Ok(StructureConstants { table })
    }

    /// Joint eigenspace decomposition of the adjoint action of the two
    /// coroots: twelve one-dimensional root spaces indexed by `Root::ALL`
    /// plus the two-dimensional zero space, over basis coordinates.
    pub fn root_space_decomposition(&self) -> Result<RootSpaceDecomposition, LinalgError> {
        let ad_h_beta = self.adjoint_matrix(self.h_beta())?;
        let ad_h_gamma = self.adjoint_matrix(self.h_gamma())?;
        let mut root_spaces = Vec::with_capacity(12);
        for root in Root::ALL {
            let (m, n) = root.mn();
            let space = linalg::simultaneous_eigenspace(&[
                (&ad_h_beta, Scalar::from_integer(m)),
                (&ad_h_gamma, Scalar::from_integer(n)),
            ])?;
            root_spaces.push((root, space));
        }
        let zero_space = linalg::simultaneous_eigenspace(&[
            (&ad_h_beta, Scalar::zero()),
            (&ad_h_gamma, Scalar::zero()),
        ])?;
        Ok(RootSpaceDecomposition { root_spaces, zero_space })
    }
}

/// Result of the joint eigenspace decomposition over basis coordinates.
pub struct RootSpaceDecomposition {
    pub root_spaces: Vec<(Root, Subspace)>,
    pub zero_space: Subspace,
}

/// The integer structure constants `[b_i, b_j] = sum_k c[i][j][k] b_k`.
pub struct StructureConstants {
    table: Vec<i64>,
}

impl StructureConstants {
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> i64 {
        self.table[(i * ALGEBRA_DIM + j) * ALGEBRA_DIM + k]
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[i64] {
        &self.table[(i * ALGEBRA_DIM + j) * ALGEBRA_DIM..(i * ALGEBRA_DIM + j + 1) * ALGEBRA_DIM]
    }

    /// Checks antisymmetry of the table.
    pub fn is_antisymmetric(&self) -> bool {
        for i in 0..ALGEBRA_DIM {
            for j in 0..ALGEBRA_DIM {
                for k in 0..ALGEBRA_DIM {
                    if self.coefficient(i, j, k) != -self.coefficient(j, i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        for i in 0..ALGEBRA_DIM {
            for j in 0..ALGEBRA_DIM {
                for k in 0..ALGEBRA_DIM {
                    for l in 0..ALGEBRA_DIM {
                        let mut sum = 0i64;
                        for m in 0..ALGEBRA_DIM {
                            sum += self.coefficient(i, j, m) * self.coefficient(m, k, l)
                                + self.coefficient(j, k, m) * self.coefficient(m, i, l)
                                + self.coefficient(k, i, m) * self.coefficient(m, j, l);
                        }
                        if sum != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Largest `k >= 0` with `sigma - k rho` a root (the chain length behind the
/// size of the constant on `[E_rho, E_sigma]`).
pub fn chain_length(rho: Root, sigma: Root) -> i64 {
    let (mr, nr) = rho.mn();
    let (ms, ns) = sigma.mn();
    let mut k = 0i64;
    loop {
        let next = (ms - (k + 1) * mr, ns - (k + 1) * nr);
        if Root::from_mn(next).is_none() {
            return k;
        }
        k += 1;
    }
}

/// The standard embedding of wedges into antisymmetric 7 x 7 matrices:
/// `e_i ^ e_j` maps to twice the elementary antisymmetric matrix.
pub fn so7_matrix(w: &Wedge2) -> Matrix {
    let mut m = Matrix::zero(7, 7);
    let two = Scalar::from_integer(2);
    for (p, c) in w.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // Distinct wedge pairs hit distinct matrix slots.
        let (i, j) = WEDGE_PAIRS[p];
        let scaled = c * &two;
        *m.at_mut(j, i) = -&scaled;
        *m.at_mut(i, j) = scaled;
    }
    m
}

/// The wedge whose `so7_matrix` is the commutator of the images of the two
/// arguments: the orthogonal-algebra bracket pulled back to wedges.
pub fn so7_bracket(w1: &Wedge2, w2: &Wedge2) -> Wedge2 {
    let commutator = so7_matrix(w1).commutator(&so7_matrix(w2));
    let half = Scalar::ratio(1, 2).unwrap();
    let mut coords = alloc::vec![Scalar::zero(); WEDGE_PAIRS.len()];
    for (p, &(i, j)) in WEDGE_PAIRS.iter().enumerate() {
        debug_assert_eq!(&(-commutator.at(i, j)), commutator.at(j, i));
        coords[p] = commutator.at(i, j) * &half;
    }
    Wedge2::from_coords(coords)
}

/// A fixed pair of wedges witnessing that negated `d_wedge` is not a Lie
/// homomorphism from the orthogonal algebra: the bracket identity that holds
/// on the special wedges above fails here.
pub fn non_homomorphism_witness() -> (Wedge2, Wedge2) {
    (Wedge2::unit(0, 1), Wedge2::unit(0, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::d_wedge;

    fn e(i: i64) -> Octonion {
        Octonion::imaginary_unit(i)
    }

    fn d_units(i: i64, j: i64) -> Operator {
        d_pair(&e(i), &e(j))
    }

    fn scaled_wedge_op(pairs: &[(usize, usize, Scalar)]) -> Operator {
        let mut op = Matrix::zero(OCT_DIM, OCT_DIM);
        for (i, j, c) in pairs {
            op = op.add(&d_units(*i as i64, *j as i64).scale(c));
        }
        op
    }

    #[test]
    fn root_coordinate_tables() {
        assert_eq!(Beta.mn(), (2, -1));
        assert_eq!(BetaP.mn(), (-1, 1));
        assert_eq!(BetaPP.mn(), (-1, 0));
        assert_eq!(Gamma.mn(), (-3, 2));
        assert_eq!(GammaP.mn(), (0, -1));
        assert_eq!(GammaPP.mn(), (3, -1));
        assert_eq!(MinusGamma.mn(), (3, -2));
        // (p, q) over the simple roots.
        assert_eq!(Beta.pq(), (1, 0));
        assert_eq!(Gamma.pq(), (0, 1));
        assert_eq!(BetaP.pq(), (1, 1));
        assert_eq!(BetaPP.pq(), (-2, -1));
        assert_eq!(GammaP.pq(), (-3, -2));
        assert_eq!(GammaPP.pq(), (3, 1));
        // The twelve mn pairs are distinct.
        let mut seen: Vec<(i64, i64)> = Root::ALL.iter().map(|r| r.mn()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn rotation_has_order_three_and_cycles_families() {
        assert_eq!(Beta.rotated(), BetaP);
        assert_eq!(BetaP.rotated(), BetaPP);
        assert_eq!(BetaPP.rotated(), Beta);
        assert_eq!(Gamma.rotated(), GammaP);
        for r in Root::ALL {
            assert_eq!(r.rotated().rotated().rotated(), r);
            // The rotation in mn coordinates is the matrix
            // [[-2, -3], [1, 1]].
            let (m, n) = r.mn();
            assert_eq!(r.rotated().mn(), (-2 * m - 3 * n, m + n));
        }
    }

    #[test]
    fn inner_products_and_lengths() {
        for r in Root::SHORT {
            assert_eq!(r.norm2(), 2);
        }
        for r in Root::LONG {
            assert_eq!(r.norm2(), 6);
        }
        assert_eq!(Beta.inner(Gamma), -3);
        // Rotation is an isometry.
        for a in Root::ALL {
            for b in Root::ALL {
                assert_eq!(a.inner(b), a.rotated().inner(b.rotated()));
            }
        }
        // Cartan pairings 2<a,b>/<b,b> recover the eigenvalue table.
        for r in Root::ALL {
            let (m, n) = r.mn();
            assert_eq!(2 * r.inner(Beta) / Beta.norm2(), m);
            assert_eq!(2 * r.inner(Gamma) / Gamma.norm2(), n);
        }
    }

    #[test]
    fn weight_vectors_match_the_frozen_table() {
        let i = Scalar::i();
        assert_eq!(weight_vector(Beta), e(1).scale(&i).add(&e(3)));
        assert_eq!(weight_vector(BetaP), e(2).scale(&i).add(&e(6)));
        assert_eq!(weight_vector(BetaPP), e(4).scale(&i).add(&e(5)));
        assert_eq!(weight_vector(MinusBeta), e(1).scale(&(-&i)).add(&e(3)));
        assert_eq!(weight_vector(MinusBetaP), e(2).scale(&(-&i)).add(&e(6)));
        assert_eq!(weight_vector(MinusBetaPP), e(4).scale(&(-&i)).add(&e(5)));
    }

    #[test]
    fn coroots_match_the_frozen_formulas() {
        let basis = ChevalleyBasis::build();
        let i = Scalar::i();
        let minus_i = -&i;
        let third_i = i.checked_div(&Scalar::from_integer(3)).unwrap();
        assert_eq!(basis.h_beta(), &d_units(1, 3).scale(&minus_i));
        assert_eq!(
            basis.h_gamma(),
            &d_units(1, 3).sub(&d_units(2, 6)).scale(&third_i)
        );
        assert_eq!(basis.coroot(BetaP), &d_units(2, 6).scale(&minus_i));
        assert_eq!(basis.coroot(BetaPP), &d_units(4, 5).scale(&minus_i));
        assert_eq!(
            basis.coroot(GammaP),
            &d_units(2, 6).sub(&d_units(4, 5)).scale(&third_i)
        );
        assert_eq!(
            basis.coroot(GammaPP),
            &d_units(4, 5).sub(&d_units(1, 3)).scale(&third_i)
        );
        for root in Root::ALL {
            assert_eq!(basis.coroot(root.negated()), &basis.coroot(root).neg());
        }
        // The two chosen coroots commute.
        assert!(basis.h_beta().commutator(basis.h_gamma()).is_zero());
    }

    #[test]
    fn root_vectors_match_the_frozen_formulas() {
        let basis = ChevalleyBasis::build();
        let i = Scalar::i();
        let half = Scalar::ratio(1, 2).unwrap();
        let sixth = Scalar::ratio(1, 6).unwrap();
        let minus_i_sixth = (-&i).checked_div(&Scalar::from_integer(6)).unwrap();
        // E_beta = (i e01 + e03) / 2.
        let expected_beta = scaled_wedge_op(&[
            (0, 1, &i * &half),
            (0, 3, half.clone()),
        ]);
        assert_eq!(basis.root_vector(Beta), &expected_beta);
        // E_gamma = (e12 + e36 - i e23 - i e16) / 6.
        let expected_gamma = scaled_wedge_op(&[
            (1, 2, sixth.clone()),
            (3, 6, sixth.clone()),
            (2, 3, minus_i_sixth.clone()),
            (1, 6, minus_i_sixth),
        ]);
        assert_eq!(basis.root_vector(Gamma), &expected_gamma);
    }

    #[test]
    fn short_root_vectors_come_from_zero_weight_wedges() {
        let basis = ChevalleyBasis::build();
        let half = Scalar::ratio(1, 2).unwrap();
        let v0 = weight_zero_vector();
        for psi in Root::SHORT {
            let expected = d_pair(&v0, &weight_vector(psi)).scale(&half);
            assert_eq!(basis.root_vector(psi), &expected, "at {}", psi);
        }
    }

    #[test]
    fn long_root_vectors_come_from_short_weight_wedges() {
        let basis = ChevalleyBasis::build();
        let sixth = Scalar::ratio(1, 6).unwrap();
        let expected_factors = [
            (Gamma, MinusBeta),
            (GammaP, MinusBetaP),
            (GammaPP, MinusBetaPP),
            (MinusGamma, Beta),
            (MinusGammaP, BetaP),
            (MinusGammaPP, BetaPP),
        ];
        for (nu, psi1_expected) in expected_factors {
            let (psi1, psi2) = long_root_factors(nu);
            assert_eq!(psi1, psi1_expected, "first factor at {}", nu);
            let expected = d_pair(&weight_vector(psi1), &weight_vector(psi2)).scale(&sixth);
            assert_eq!(basis.root_vector(nu), &expected, "at {}", nu);
        }
    }

    #[test]
    fn transport_consistency() {
        let basis = ChevalleyBasis::build();
        let fr = GaloisSymmetry::FROBENIUS;
        for root in Root::ALL {
            // Index doubling rotates every root vector.
            assert_eq!(
                &fr.conjugate_operator(basis.root_vector(root)),
                basis.root_vector(root.rotated()),
                "rotation at {}",
                root
            );
            // Entrywise conjugation negates every root.
            assert_eq!(
                &conjugate_transport(basis.root_vector(root)),
                basis.root_vector(root.negated()),
                "negation at {}",
                root
            );
            assert_eq!(
                &fr.conjugate_operator(basis.coroot(root)),
                basis.coroot(root.rotated()),
                "coroot rotation at {}",
                root
            );
            assert_eq!(
                &conjugate_transport(basis.coroot(root)),
                basis.coroot(root.negated()),
                "coroot negation at {}",
                root
            );
        }
    }

    #[test]
    fn adjoint_eigenvalues_realize_the_root_table() {
        let basis = ChevalleyBasis::build();
        for root in Root::ALL {
            let (m, n) = root.mn();
            let ev = basis.root_vector(root);
            assert_eq!(
                basis.h_beta().commutator(ev),
                ev.scale(&Scalar::from_integer(m)),
                "H_beta eigenvalue at {}",
                root
            );
            assert_eq!(
                basis.h_gamma().commutator(ev),
                ev.scale(&Scalar::from_integer(n)),
                "H_gamma eigenvalue at {}",
                root
            );
        }
    }

    #[test]
    fn cartan_matrix_is_the_g2_one() {
        // Rows: pairings of the simple roots beta, gamma against the two
        // coroots.
        assert_eq!(Beta.mn().0, 2);
        assert_eq!(Beta.mn().1, -1);
        assert_eq!(Gamma.mn().0, -3);
        assert_eq!(Gamma.mn().1, 2);
    }

    #[test]
    fn opposite_root_vectors_bracket_to_negated_coroots() {
        // With the frozen normalizations, [E_rho, E_-rho] = -H_rho: the
        // bracket of opposite root vectors is the coroot transported to the
        // opposite root.
        let basis = ChevalleyBasis::build();
        for root in Root::ALL {
            let bracket = basis
                .root_vector(root)
                .commutator(basis.root_vector(root.negated()));
            assert_eq!(&bracket, basis.coroot(root.negated()), "at {}", root);
            assert_eq!(bracket, basis.coroot(root).neg(), "at {}", root);
        }
    }

    #[test]
    fn structure_constants_are_integral_antisymmetric_jacobi() {
        let basis = ChevalleyBasis::build();
        let sc = basis.structure_constants().unwrap();
        assert!(sc.is_antisymmetric());
        assert!(sc.jacobi_holds());
        // [H_beta, E_beta] = 2 E_beta.
        let i_beta = ChevalleyBasis::root_index(Beta);
        assert_eq!(sc.coefficient(0, i_beta, i_beta), 2);
        // [E_beta, E_-beta] = -H_beta.
        let i_minus_beta = ChevalleyBasis::root_index(MinusBeta);
        assert_eq!(sc.coefficient(i_beta, i_minus_beta, 0), -1);
        assert_eq!(sc.coefficient(i_beta, i_minus_beta, 1), 0);
    }

    #[test]
    fn off_diagonal_constants_have_chain_magnitudes() {
        let basis = ChevalleyBasis::build();
        let sc = basis.structure_constants().unwrap();
        for rho in Root::ALL {
            for sigma in Root::ALL {
                if rho == sigma || rho == sigma.negated() {
                    continue;
                }
                let i = ChevalleyBasis::root_index(rho);
                let j = ChevalleyBasis::root_index(sigma);
                match rho.plus(sigma) {
                    Some(sum) => {
                        let k = ChevalleyBasis::root_index(sum);
                        let n = sc.coefficient(i, j, k);
                        let p = chain_length(rho, sigma);
                        assert_eq!(n.abs(), p + 1, "|N| at {}, {}", rho, sigma);
                        // The bracket lies entirely in the sum root space.
                        for other in 0..ALGEBRA_DIM {
                            if other != k {
                                assert_eq!(sc.coefficient(i, j, other), 0);
                            }
                        }
                    }
                    None => {
                        for k in 0..ALGEBRA_DIM {
                            assert_eq!(sc.coefficient(i, j, k), 0, "at {}, {}", rho, sigma);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn short_short_brackets_give_triple_long_vectors() {
        // For the canonical factor pair of each long root, the bracket of
        // the two short root vectors is exactly three times the long one.
        let basis = ChevalleyBasis::build();
        let three = Scalar::from_integer(3);
        for nu in Root::LONG {
            let (psi1, psi2) = long_root_factors(nu);
            let bracket = basis.root_vector(psi1).commutator(basis.root_vector(psi2));
            assert_eq!(bracket, basis.root_vector(nu).scale(&three), "at {}", nu);
        }
        // Every ordered short pair with a long sum brackets to plus or minus
        // three times the long root vector.
        for a in Root::SHORT {
            for b in Root::SHORT {
                let nu = match a.plus(b) {
                    Some(nu) if nu.is_long() => nu,
                    _ => continue,
                };
                let bracket = basis.root_vector(a).commutator(basis.root_vector(b));
                let target = basis.root_vector(nu).scale(&three);
                assert!(
                    bracket == target || bracket == target.neg(),
                    "at {}, {}",
                    a,
                    b
                );
            }
        }
    }

    #[test]
    fn root_space_decomposition_has_the_right_shape() {
        let basis = ChevalleyBasis::build();
        let decomposition = basis.root_space_decomposition().unwrap();
        assert_eq!(decomposition.zero_space.dim(), 2);
        for (root, space) in &decomposition.root_spaces {
            assert_eq!(space.dim(), 1, "root space at {}", root);
            let coords = basis.coordinates(basis.root_vector(*root)).unwrap();
            let vec = crate::linalg::SparseVec::from_dense(&coords);
            assert!(space.member(&vec), "root vector spans its space at {}", root);
        }
    }

    #[test]
    fn so7_embedding_brackets_match_on_long_root_wedges() {
        let basis = ChevalleyBasis::build();
        let v0 = weight_zero_vector();
        let twelve = Scalar::from_integer(12);
        for nu in Root::LONG {
            let (psi1, psi2) = long_root_factors(nu);
            // Wedges with the zero-weight vector; their derivations are
            // twice the short root vectors.
            let w1 = Wedge2::of(&v0, &weight_vector(psi1));
            let w2 = Wedge2::of(&v0, &weight_vector(psi2));
            let lhs = d_wedge(&w1).commutator(&d_wedge(&w2));
            assert_eq!(lhs, basis.root_vector(nu).scale(&twelve), "12 E at {}", nu);
            let rhs = d_wedge(&so7_bracket(&w1, &w2)).neg();
            assert_eq!(lhs, rhs, "orthogonal-bracket match at {}", nu);
        }
    }

    #[test]
    fn so7_embedding_is_not_a_homomorphism_in_general() {
        let (w1, w2) = non_homomorphism_witness();
        let lhs = d_wedge(&w1).commutator(&d_wedge(&w2));
        let rhs = d_wedge(&so7_bracket(&w1, &w2)).neg();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn chain_lengths_match_known_values() {
        assert_eq!(chain_length(Beta, Gamma), 0);
        assert_eq!(chain_length(Gamma, Beta), 0);
        assert_eq!(chain_length(BetaP, MinusBeta), 2);
        // The longest chain: walking gamma'' down by beta passes through
        // three further roots.
        assert_eq!(chain_length(Beta, GammaPP), 3);
        assert_eq!(chain_length(BetaP, BetaPP), 1);
    }
}
