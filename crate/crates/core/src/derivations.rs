//! Derivations of the complexified octonions.
//!
//! The map `D(a, b) = ([ad_a, ad_b] + ad_[a,b]) / 4` sends a pair of
//! octonions to a derivation of the algebra.  Restricted to wedges of the
//! seven imaginary units it has a seven-dimensional kernel, and its image is
//! a fourteen-dimensional simple Lie algebra acting on the eight octonion
//! coordinates.  This module constructs that image with exact coordinates.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::gf8::F8;
use crate::linalg::{self, LinalgError, Matrix, Operator, SpanSolver, SparseVec, Subspace};
use crate::octonion::{basis_product, GaloisSymmetry, Octonion, OCT_DIM};
use crate::scalar::Scalar;

/// Dimension of the wedge square of the imaginary units.
pub const WEDGE_DIM: usize = 21;

/// The 21 wedge basis pairs `(i, j)` with `i < j`, in lexicographic order.
pub const WEDGE_PAIRS: [(usize, usize); WEDGE_DIM] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 4), (3, 5), (3, 6),
    (4, 5), (4, 6), (5, 6),
];

/// Position of the pair `(i, j)` (with `i < j`) in `WEDGE_PAIRS`.
pub fn pair_position(i: usize, j: usize) -> usize {
    assert!(i < j && j < 7, "wedge pairs index distinct imaginary units");
    WEDGE_PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .expect("pair is listed")
}

/// A wedge of imaginary octonions: coordinates over `e_i ^ e_j`, `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wedge2 {
    coords: Vec<Scalar>,
}

impl Wedge2 {
    pub fn zero() -> Wedge2 {
        Wedge2 { coords: alloc::vec![Scalar::zero(); WEDGE_DIM] }
    }

    /// The basis wedge `e_i ^ e_j`; indices in either order, with
    /// `e_j ^ e_i = -(e_i ^ e_j)`.
    pub fn unit(i: usize, j: usize) -> Wedge2 {
        assert!(i != j && i < 7 && j < 7, "wedge of distinct imaginary units");
        let mut w = Wedge2::zero();
        if i < j {
            w.coords[pair_position(i, j)] = Scalar::one();
        } else {
            w.coords[pair_position(j, i)] = Scalar::from_integer(-1);
        }
        w
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Wedge2 {
        assert_eq!(coords.len(), WEDGE_DIM);
        Wedge2 { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize, j: usize) -> &Scalar {
        &self.coords[pair_position(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Wedge2) -> Wedge2 {
        Wedge2 {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Wedge2 {
        Wedge2 { coords: self.coords.iter().map(|c| c * factor).collect() }
    }

    pub fn neg(&self) -> Wedge2 {
        self.scale(&Scalar::from_integer(-1))
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.coords)
    }

    pub fn from_sparse(v: &SparseVec) -> Wedge2 {
        assert_eq!(v.dim(), WEDGE_DIM);
        Wedge2 { coords: v.to_dense() }
    }

    /// The wedge of two imaginary octonions.
    pub fn of(a: &Octonion, b: &Octonion) -> Wedge2 {
        assert!(a.is_imaginary() && b.is_imaginary(), "wedge factors must be imaginary");
        let mut w = Wedge2::zero();
        for (p, &(i, j)) in WEDGE_PAIRS.iter().enumerate() {
            // Octonion coordinate 1 + k holds e_k.
            let c = &(a.coord(1 + i) * b.coord(1 + j)) - &(a.coord(1 + j) * b.coord(1 + i));
            w.coords[p] = c;
        }
        w
    }

    /// Image under a symmetry of the index set, with orientation signs.
    pub fn galois_apply(&self, g: GaloisSymmetry) -> Wedge2 {
        let mut out = Wedge2::zero();
        for (p, &(i, j)) in WEDGE_PAIRS.iter().enumerate() {
            let c = &self.coords[p];
            if c.is_zero() {
                continue;
            }
            let gi = g.apply_index(i as u8) as usize;
            let gj = g.apply_index(j as u8) as usize;
            let (lo, hi, flip) = if gi < gj { (gi, gj, false) } else { (gj, gi, true) };
            let slot = &mut out.coords[pair_position(lo, hi)];
            *slot = if flip { &*slot - c } else { &*slot + c };
        }
        out
    }

    pub fn render(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (p, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = WEDGE_PAIRS[p];
            let sym = alloc::format!("e{}^e{}", i, j);
            let term = if c.is_one() {
                sym
            } else if (-c).is_one() {
                alloc::format!("-{}", sym)
            } else {
                alloc::format!("{}*{}", c.render(), sym)
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return String::from("0");
        }
        let mut out = terms[0].clone();
        for term in &terms[1..] {
            if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        out
    }
}

impl fmt::Display for Wedge2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `D(a, b) = ([ad_a, ad_b] + ad_[a,b]) / 4` as an operator on the eight
/// octonion coordinates.
pub fn d_pair(a: &Octonion, b: &Octonion) -> Operator {
    let ad_a = a.ad_operator();
    let ad_b = b.ad_operator();
    let ad_bracket = a.commutator(b).ad_operator();
    ad_a.commutator(&ad_b)
        .add(&ad_bracket)
        .scale(&Scalar::ratio(1, 4).unwrap())
}

/// `R(a, b) = [ad_a, ad_b] - ad_[a,b]`, the associator-measuring companion
/// of `d_pair`.
pub fn r_pair(a: &Octonion, b: &Octonion) -> Operator {
    let ad_a = a.ad_operator();
    let ad_b = b.ad_operator();
    let ad_bracket = a.commutator(b).ad_operator();
    ad_a.commutator(&ad_b).sub(&ad_bracket)
}

/// Linear extension of `d_pair` to wedges of imaginary units.
pub fn d_wedge(w: &Wedge2) -> Operator {
    let mut op = Matrix::zero(OCT_DIM, OCT_DIM);
    for (p, c) in w.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = WEDGE_PAIRS[p];
        let d = d_pair(&Octonion::imaginary_unit(i as i64), &Octonion::imaginary_unit(j as i64));
        op = op.add(&d.scale(c));
    }
    op
}

/// Closed form for `D(e^x ^ e^y) e^z` on basis vectors, by cases on `z`:
/// `2 e^y` at `z = x`; `-2 e^x` at `z = y`; zero at `z = 0` and `z = x + y`;
/// `-(e^x e^y) e^z` otherwise.  Serves as an independent cross-check of
/// `d_pair`; rejects degenerate exponent pairs.
pub fn d_basis_closed_form(x: F8, y: F8, z: F8) -> Result<Octonion, DerivationError> {
    if x == y || x.is_zero() || y.is_zero() {
        return Err(DerivationError::DegenerateWedge);
    }
    let two = Scalar::from_integer(2);
    if z == x {
        return Ok(Octonion::unit(y).scale(&two));
    }
    if z == y {
        return Ok(Octonion::unit(x).scale(&(-&two)));
    }
    if z.is_zero() || z == x.add(y) {
        return Ok(Octonion::zero());
    }
    let (sign_xy, xy) = basis_product(x, y);
    let (sign_all, w) = basis_product(xy, z);
    let mut c = Scalar::from_integer(-1);
    if sign_xy * sign_all < 0 {
        c = -&c;
    }
    Ok(Octonion::unit(w).scale(&c))
}

/// How far `op` is from satisfying the Leibniz rule at the pair `(a, b)`:
/// `op(a) b + a op(b) - op(ab)`.
pub fn leibniz_defect(op: &Operator, a: &Octonion, b: &Octonion) -> Octonion {
    let apply = |o: &Octonion| Octonion::from_coords(op.apply(o.coords()));
    apply(a)
        .multiply(b)
        .add(&a.multiply(&apply(b)))
        .sub(&apply(&a.multiply(b)))
}

/// The 64x21 matrix of `d_wedge` over the wedge basis, with operators
/// flattened row-major into 64 coordinates.
pub fn d_matrix() -> Matrix {
    let columns: Vec<SparseVec> = WEDGE_PAIRS
        .iter()
        .map(|&(i, j)| {
            d_pair(&Octonion::imaginary_unit(i as i64), &Octonion::imaginary_unit(j as i64))
                .flatten()
        })
        .collect();
    Matrix::from_columns(OCT_DIM * OCT_DIM, &columns)
}

/// The kernel of `d_wedge` as a subspace of the 21 wedge coordinates.
pub fn kernel_of_d() -> Subspace {
    linalg::kernel(&d_matrix())
}

/// The canonical kernel element `e1^e3 + e2^e6 + e4^e5` (one orbit of the
/// index-doubling symmetry, whose three pairs each sum to exponent 1).
pub fn kernel_generator() -> Wedge2 {
    Wedge2::unit(1, 3).add(&Wedge2::unit(2, 6)).add(&Wedge2::unit(4, 5))
}

/// The seven index-shift translates of `kernel_generator`, which form a basis
/// of the kernel of `d_wedge`.
pub fn kernel_orbit() -> Vec<Wedge2> {
    let delta = kernel_generator();
    (0i64..7)
        .map(|k| delta.galois_apply(GaloisSymmetry::MTWIST.power(k)))
        .collect()
}

/// The partition of the 21 wedge pairs into seven blocks of three: block `k`
/// shifts the pairs `{(1,3), (2,6), (4,5)}` by `k` modulo 7.  Each block
/// spans a two-dimensional abelian subalgebra of the derivation algebra.
pub fn pair_blocks() -> [[(usize, usize); 3]; 7] {
    let base = [(1usize, 3usize), (2, 6), (4, 5)];
    let mut blocks = [[(0usize, 0usize); 3]; 7];
    for (k, block) in blocks.iter_mut().enumerate() {
        let mut shifted: Vec<(usize, usize)> = base
            .iter()
            .map(|&(i, j)| {
                let a = (i + k) % 7;
                let b = (j + k) % 7;
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        shifted.sort();
        block.copy_from_slice(&shifted);
    }
    blocks
}

/// Errors raised by derivation constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DerivationError {
    /// A basis wedge needs two distinct nonzero exponents.
    DegenerateWedge,
}

impl fmt::Display for DerivationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationError::DegenerateWedge => {
                write!(f, "basis wedge requires distinct nonzero exponents")
            }
        }
    }
}

/// An element of the derivation algebra: its operator together with its
/// coordinates over the canonical fourteen-element basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GElement {
    pub op: Operator,
    pub coords: Vec<Scalar>,
}

/// The fourteen-dimensional derivation algebra with a fixed basis.
///
/// The basis is chosen greedily: scanning `D(e_i ^ e_j)` in wedge-pair order
/// and keeping each operator independent of those already kept.
pub struct DerivationAlgebra {
    basis_pairs: Vec<(usize, usize)>,
    basis_ops: Vec<Operator>,
    solver: SpanSolver,
}

impl DerivationAlgebra {
    pub fn build() -> DerivationAlgebra {
        let all_ops: Vec<Operator> = WEDGE_PAIRS
            .iter()
            .map(|&(i, j)| {
                d_pair(&Octonion::imaginary_unit(i as i64), &Octonion::imaginary_unit(j as i64))
            })
            .collect();
        let flattened: Vec<SparseVec> = all_ops.iter().map(Operator::flatten).collect();
        let solver = SpanSolver::greedy(OCT_DIM * OCT_DIM, &flattened);
        let basis_pairs: Vec<(usize, usize)> =
            solver.selected().iter().map(|&k| WEDGE_PAIRS[k]).collect();
        let basis_ops: Vec<Operator> =
            solver.selected().iter().map(|&k| all_ops[k].clone()).collect();
        DerivationAlgebra { basis_pairs, basis_ops, solver }
    }

    pub fn dim(&self) -> usize {
        self.basis_ops.len()
    }

    /// The wedge pairs whose derivations were kept as the basis.
    pub fn basis_pairs(&self) -> &[(usize, usize)] {
        &self.basis_pairs
    }

    pub fn basis_ops(&self) -> &[Operator] {
        &self.basis_ops
    }

    /// Wraps an operator as an algebra element, solving for its coordinates;
    /// rejects operators outside the span of the basis.
    pub fn element(&self, op: &Operator) -> Result<GElement, LinalgError> {
        let coords = self.solver.express(&op.flatten())?;
        Ok(GElement { op: op.clone(), coords })
    }

    /// Coordinates of an operator over the basis.
    pub fn coordinates(&self, op: &Operator) -> Result<Vec<Scalar>, LinalgError> {
        self.solver.express(&op.flatten())
    }

    /// The commutator, re-expressed in the algebra.
    pub fn bracket(&self, x: &GElement, y: &GElement) -> Result<GElement, LinalgError> {
        self.element(&x.op.commutator(&y.op))
    }

    /// The matrix of `ad_x` on basis coordinates.
    pub fn ad_matrix(&self, x: &GElement) -> Result<Matrix, LinalgError> {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (k, b) in self.basis_ops.iter().enumerate() {
            let coords = self.coordinates(&x.op.commutator(b))?;
            for (i, c) in coords.into_iter().enumerate() {
                *m.at_mut(i, k) = c;
            }
        }
        Ok(m)
    }

    /// The Killing form `trace(ad_x ad_y)` computed on basis coordinates.
    pub fn killing_form(&self, x: &GElement, y: &GElement) -> Result<Scalar, LinalgError> {
        Ok(self.ad_matrix(x)?.mul(&self.ad_matrix(y)?).trace())
    }

    /// The Gram matrix of the Killing form over the basis.
    pub fn killing_gram(&self) -> Result<Matrix, LinalgError> {
        let ads: Vec<Matrix> = self
            .basis_ops
            .iter()
            .map(|op| self.ad_matrix(&self.element(op)?))
            .collect::<Result<_, _>>()?;
        let n = self.dim();
        let mut gram = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *gram.at_mut(i, j) = ads[i].mul(&ads[j]).trace();
            }
        }
        Ok(gram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64) -> Octonion {
        Octonion::imaginary_unit(i)
    }

    fn d_units(i: i64, j: i64) -> Operator {
        d_pair(&e(i), &e(j))
    }

    #[test]
    fn closed_form_agrees_with_the_definition() {
        // All 42 ordered pairs of distinct nonzero exponents, all 8 arguments.
        let mut checked = 0;
        for &x in &F8::nonzero() {
            for &y in &F8::nonzero() {
                if x == y {
                    continue;
                }
                let op = d_pair(&Octonion::unit(x), &Octonion::unit(y));
                for &z in &F8::all() {
                    let direct = Octonion::from_coords(op.apply(Octonion::unit(z).coords()));
                    let formula = d_basis_closed_form(x, y, z).unwrap();
                    assert_eq!(direct, formula, "x={} y={} z={}", x, y, z);
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 336);
    }

    #[test]
    fn closed_form_rejects_degenerate_input() {
        assert_eq!(
            d_basis_closed_form(F8::ALPHA, F8::ALPHA, F8::ONE),
            Err(DerivationError::DegenerateWedge)
        );
        assert_eq!(
            d_basis_closed_form(F8::ZERO, F8::ALPHA, F8::ONE),
            Err(DerivationError::DegenerateWedge)
        );
    }

    #[test]
    fn images_satisfy_the_leibniz_rule() {
        for &(i, j) in WEDGE_PAIRS.iter() {
            let op = d_units(i as i64, j as i64);
            for &x in &F8::all() {
                for &y in &F8::all() {
                    assert!(
                        leibniz_defect(&op, &Octonion::unit(x), &Octonion::unit(y)).is_zero(),
                        "defect at ({}, {}) on pair ({}, {})",
                        i,
                        j,
                        x,
                        y
                    );
                }
            }
        }
    }

    #[test]
    fn r_pair_is_minus_six_times_the_associator() {
        for &x in &F8::all() {
            for &y in &F8::all() {
                let r = r_pair(&Octonion::unit(x), &Octonion::unit(y));
                for &z in &F8::all() {
                    let lhs = Octonion::from_coords(r.apply(Octonion::unit(z).coords()));
                    let rhs = Octonion::associator(&Octonion::unit(x), &Octonion::unit(y), &Octonion::unit(z))
                        .scale(&Scalar::from_integer(-6));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn twice_d_is_ad_bracket_minus_three_associators() {
        // 2 D(a ^ b) = ad_[a,b] - 3 [a, b, -] as operators, on basis pairs.
        for &x in &F8::all() {
            for &y in &F8::all() {
                let a = Octonion::unit(x);
                let b = Octonion::unit(y);
                let lhs = d_pair(&a, &b).scale(&Scalar::from_integer(2));
                let ad_bracket = a.commutator(&b).ad_operator();
                let mut assoc_op = Matrix::zero(OCT_DIM, OCT_DIM);
                for k in 0..OCT_DIM {
                    let img = Octonion::associator(&a, &b, &Octonion::unit(crate::octonion::index_exponent(k)));
                    for r in 0..OCT_DIM {
                        *assoc_op.at_mut(r, k) = img.coord(r).clone();
                    }
                }
                let rhs = ad_bracket.sub(&assoc_op.scale(&Scalar::from_integer(3)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn d_factors_through_wedges() {
        let a = e(1).scale(&Scalar::i()).add(&e(3));
        let b = e(2).sub(&e(5).scale(&Scalar::from_integer(3)));
        assert_eq!(d_pair(&a, &b), d_wedge(&Wedge2::of(&a, &b)));
        // Antisymmetry.
        assert_eq!(d_pair(&a, &b), d_pair(&b, &a).neg());
    }

    #[test]
    fn rank_and_kernel_of_d() {
        assert_eq!(linalg::rank(&d_matrix()), 14);
        let kernel = kernel_of_d();
        assert_eq!(kernel.dim(), 7);
        let orbit = kernel_orbit();
        for w in &orbit {
            assert!(kernel.member(&w.to_sparse()), "orbit element {} not in kernel", w);
            assert!(d_wedge(w).is_zero());
        }
        // The orbit is independent, hence a basis of the kernel.
        let span = Subspace::from_spanning(WEDGE_DIM, orbit.iter().map(Wedge2::to_sparse));
        assert_eq!(span.dim(), 7);
        assert_eq!(span, kernel);
    }

    #[test]
    fn kernel_generator_shift_has_expected_coordinates() {
        // Shifting e1^e3 + e2^e6 + e4^e5 by one index gives
        // e2^e4 + e3^e0 + e5^e6, whose normalized (0,3) coefficient is -1.
        let shifted = kernel_generator().galois_apply(GaloisSymmetry::MTWIST);
        assert_eq!(shifted.coord(2, 4), &Scalar::one());
        assert_eq!(shifted.coord(0, 3), &Scalar::from_integer(-1));
        assert_eq!(shifted.coord(5, 6), &Scalar::one());
        assert!(d_wedge(&shifted).is_zero());
    }

    #[test]
    fn pair_blocks_partition_the_wedge_pairs() {
        let blocks = pair_blocks();
        assert_eq!(blocks[0], [(1, 3), (2, 6), (4, 5)]);
        assert_eq!(blocks[1], [(0, 3), (2, 4), (5, 6)]);
        let mut seen: Vec<(usize, usize)> = blocks.iter().flatten().copied().collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 21);
        // Each block's three pairs have exponents summing to a common value.
        for block in &blocks {
            let sums: Vec<F8> = block
                .iter()
                .map(|&(i, j)| F8::alpha_power(i as i64).add(F8::alpha_power(j as i64)))
                .collect();
            assert!(sums.iter().all(|&s| s == sums[0] && !s.is_zero()));
        }
    }

    #[test]
    fn frobenius_fixes_the_kernel_generator() {
        // Index doubling permutes {(1,3), (2,6), (4,5)} cyclically.
        let delta = kernel_generator();
        assert_eq!(delta.galois_apply(GaloisSymmetry::FROBENIUS), delta);
    }

    #[test]
    fn symmetries_conjugate_derivations() {
        // D(g w) = g D(w) g^-1 for both generators, on a few wedges.
        for g in [GaloisSymmetry::FROBENIUS, GaloisSymmetry::MTWIST] {
            for &(i, j) in &[(0usize, 1usize), (1, 3), (2, 5)] {
                let w = Wedge2::unit(i, j);
                assert_eq!(d_wedge(&w.galois_apply(g)), g.conjugate_operator(&d_wedge(&w)));
            }
        }
    }

    #[test]
    fn greedy_basis_has_dimension_14() {
        let algebra = DerivationAlgebra::build();
        assert_eq!(algebra.dim(), 14);
        assert_eq!(algebra.basis_pairs().len(), 14);
        // Unit coordinates round-trip.
        for (k, op) in algebra.basis_ops().iter().enumerate() {
            let coords = algebra.coordinates(op).unwrap();
            for (i, c) in coords.iter().enumerate() {
                assert_eq!(c.is_one(), i == k);
                assert_eq!(c.is_zero(), i != k);
            }
        }
    }

    #[test]
    fn bracket_closes_and_is_a_derivation() {
        let algebra = DerivationAlgebra::build();
        let x = algebra.element(&d_units(0, 1)).unwrap();
        let y = algebra.element(&d_units(2, 5)).unwrap();
        let bracket = algebra.bracket(&x, &y).unwrap();
        // The bracket operator satisfies the Leibniz rule too.
        for &a in &F8::all() {
            for &b in &F8::all() {
                assert!(leibniz_defect(&bracket.op, &Octonion::unit(a), &Octonion::unit(b)).is_zero());
            }
        }
    }

    #[test]
    fn images_anticommute_off_the_excluded_exponent() {
        // For distinct nonzero x, y and any u with u + x + y nonzero, the
        // octonion D(e^x ^ e^y) e^u anticommutes with every basis unit e^v
        // whose nonzero exponent v differs from u + x + y.
        let mut checked = 0;
        for &x in &F8::nonzero() {
            for &y in &F8::nonzero() {
                if x == y {
                    continue;
                }
                let op = d_pair(&Octonion::unit(x), &Octonion::unit(y));
                for &u in &F8::all() {
                    let excluded = u.add(x).add(y);
                    if excluded.is_zero() {
                        continue;
                    }
                    let image = Octonion::from_coords(op.apply(Octonion::unit(u).coords()));
                    for &v in &F8::nonzero() {
                        if v == excluded {
                            continue;
                        }
                        let unit = Octonion::unit(v);
                        assert!(
                            image.multiply(&unit).add(&unit.multiply(&image)).is_zero(),
                            "x={} y={} u={} v={}",
                            x,
                            y,
                            u,
                            v
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn e13_and_e26_commute() {
        let d13 = d_units(1, 3);
        let d26 = d_units(2, 6);
        assert!(d13.commutator(&d26).is_zero());
    }

    #[test]
    fn cartan_blocks_are_abelian_and_two_dimensional() {
        let algebra = DerivationAlgebra::build();
        let blocks = pair_blocks();
        for block in &blocks {
            let ops: Vec<Operator> = block
                .iter()
                .map(|&(i, j)| d_units(i as i64, j as i64))
                .collect();
            for a in &ops {
                for b in &ops {
                    assert!(a.commutator(b).is_zero());
                }
            }
            let span = Subspace::from_spanning(
                OCT_DIM * OCT_DIM,
                ops.iter().map(Operator::flatten),
            );
            assert_eq!(span.dim(), 2, "three derivations sum to zero in a block");
            let _ = &algebra;
        }
    }

    #[test]
    fn killing_form_separates_blocks() {
        let algebra = DerivationAlgebra::build();
        let blocks = pair_blocks();
        // Elements of different blocks are orthogonal under the Killing form.
        let b0 = algebra.element(&d_units(1, 3)).unwrap();
        let b1 = algebra.element(&d_units(2, 4)).unwrap();
        assert!(algebra.killing_form(&b0, &b1).unwrap().is_zero());
        // Within one block the form is nonzero.
        let b0b = algebra.element(&d_units(2, 6)).unwrap();
        assert!(!algebra.killing_form(&b0, &b0b).unwrap().is_zero());
        let _ = blocks;
    }

    #[test]
    fn killing_form_is_nondegenerate() {
        let algebra = DerivationAlgebra::build();
        let gram = algebra.killing_gram().unwrap();
        assert_eq!(linalg::rank(&gram), 14);
    }

    #[test]
    fn derivations_annihilate_the_unit_and_preserve_imaginaries() {
        for &(i, j) in WEDGE_PAIRS.iter() {
            let op = d_units(i as i64, j as i64);
            let u_image = op.apply(Octonion::one().coords());
            assert!(u_image.iter().all(Scalar::is_zero));
            for k in 0..7 {
                let img = Octonion::from_coords(op.apply(e(k).coords()));
                assert!(img.is_imaginary());
            }
        }
    }
}
