//! Finite-dimensional irreducible modules built inside tensor powers of the
//! seven-dimensional module.
//!
//! A dominant weight `a*mu1 + b*mu2` selects the two-row shape
//! `(a + b, b)`.  The corresponding Young operator — column
//! antisymmetrization followed by row symmetrization, both averaged — cuts a
//! Schur functor image out of the `(a + 2b)`-th tensor power, and the
//! projected highest tensor generates the irreducible module under the
//! twelve root-vector actions.  Dimensions are certified against the
//! closed-form degree formula and hook-content counts, and weight
//! multiplicities are read off exactly.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::chevalley::Root;
use crate::derivations::{kernel_generator, WEDGE_PAIRS};
use crate::linalg::{self, LinearOp, Matrix, SparseVec, Subspace};
use crate::octonion::Octonion;
use crate::scalar::Scalar;
use crate::standard_rep::{StandardRep, Weight};

/// Dimension of the standard module: seven basis weights per tensor factor.
pub const MODULE_RANK: usize = 7;

/// The dimension of the irreducible module with highest weight
/// `a*mu1 + b*mu2`, by the closed-form degree formula.
pub fn weyl_dimension(a: u64, b: u64) -> u64 {
    let (a, b) = (a as u128, b as u128);
    let product = (a + 1)
        * (b + 1)
        * (a + b + 2)
        * (a + 2 * b + 3)
        * (a + 3 * b + 4)
        * (2 * a + 3 * b + 5);
    assert!(product % 120 == 0, "degree product is divisible by 5!");
    u64::try_from(product / 120).expect("degree fits in 64 bits")
}

/// The six positive roots, in increasing height.
pub fn positive_roots() -> [Root; 6] {
    [Root::Beta, Root::Gamma, Root::BetaP, Root::MinusBetaPP, Root::GammaPP, Root::MinusGammaP]
}

/// The coefficients of `lambda - mu` on the two simple roots.  Both are
/// nonnegative exactly when `mu` lies under `lambda` in the dominance order.
pub fn simple_gap(lambda: (i64, i64), mu: (i64, i64)) -> (i64, i64) {
    let (dm, dn) = (lambda.0 - mu.0, lambda.1 - mu.1);
    (2 * dm + 3 * dn, dm + 2 * dn)
}

/// The order-three rotation on weights in eigenvalue coordinates.  Together
/// with negation it generates the rotation half of the Weyl group.
pub fn rotate_mn(w: (i64, i64)) -> (i64, i64) {
    (-2 * w.0 - 3 * w.1, w.0 + w.1)
}

/// A partition with at most two rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoRowShape {
    row1: usize,
    row2: usize,
}

impl TwoRowShape {
    pub fn new(row1: usize, row2: usize) -> TwoRowShape {
        assert!(row1 >= row2, "rows of a partition decrease");
        TwoRowShape { row1, row2 }
    }

    /// The shape whose Schur image contains the module of highest weight
    /// `a*mu1 + b*mu2`: rows `(a + b, b)`.
    pub fn from_highest_weight(a: usize, b: usize) -> TwoRowShape {
        TwoRowShape::new(a + b, b)
    }

    pub fn row1(&self) -> usize {
        self.row1
    }

    pub fn row2(&self) -> usize {
        self.row2
    }

    /// Number of cells, i.e. the tensor degree.
    pub fn size(&self) -> usize {
        self.row1 + self.row2
    }

    /// `(content, hook length)` for every cell, rows left to right.
    pub fn cell_data(&self) -> Vec<(i64, u64)> {
        let (p, q) = (self.row1, self.row2);
        let mut out = Vec::with_capacity(p + q);
        for j in 1..=p {
            let below = if j <= q { 1 } else { 0 };
            out.push((j as i64 - 1, (p - j + 1 + below) as u64));
        }
        for j in 1..=q {
            out.push((j as i64 - 2, (q - j + 1) as u64));
        }
        out
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> u64 {
        self.cell_data().iter().map(|&(_, h)| h).product()
    }

    /// Dimension of the Schur functor image on a seven-dimensional space:
    /// the product of `(7 + content) / hook` over the cells.
    pub fn schur_dimension(&self) -> u64 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (content, hook) in self.cell_data() {
            num *= (7 + content) as u128;
            den *= hook as u128;
        }
        assert!(num % den == 0, "hook-content quotient is an integer");
        u64::try_from(num / den).expect("dimension fits in 64 bits")
    }

    /// Position of cell `(row, col)` in the column-major tensor layout:
    /// full columns contribute adjacent pairs, then the tail of row one.
    pub fn position(&self, row: usize, col: usize) -> usize {
        match row {
            0 => {
                assert!(col < self.row1);
                if col < self.row2 {
                    2 * col
                } else {
                    self.row2 + col
                }
            }
            1 => {
                assert!(col < self.row2);
                2 * col + 1
            }
            _ => panic!("two-row shape"),
        }
    }

    /// Tensor positions of the cells of each row.
    pub fn row_positions(&self) -> (Vec<usize>, Vec<usize>) {
        let first = (0..self.row1).map(|j| self.position(0, j)).collect();
        let second = (0..self.row2).map(|j| self.position(1, j)).collect();
        (first, second)
    }

    /// Tensor position pairs of the two-cell columns.
    pub fn column_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.row2).map(|j| (self.position(0, j), self.position(1, j))).collect()
    }
}

/// The `n`-th tensor power of the standard module, with basis tensors
/// indexed big-endian in base seven by their factor weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    factors: usize,
}

impl TensorSpace {
    pub fn new(factors: usize) -> TensorSpace {
        assert!(factors <= 12, "tensor degree out of supported range");
        TensorSpace { factors }
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn dim(&self) -> usize {
        MODULE_RANK.pow(self.factors as u32)
    }

    /// Place value of factor `k` in the big-endian index.
    pub fn place(&self, k: usize) -> usize {
        assert!(k < self.factors);
        MODULE_RANK.pow((self.factors - 1 - k) as u32)
    }

    /// The per-factor weight indices of a basis tensor.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        assert!(index < self.dim());
        let mut out = vec![0usize; self.factors];
        let mut rest = index;
        for k in (0..self.factors).rev() {
            out[k] = rest % MODULE_RANK;
            rest /= MODULE_RANK;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        assert_eq!(digits.len(), self.factors);
        let mut out = 0usize;
        for &d in digits {
            assert!(d < MODULE_RANK);
            out = out * MODULE_RANK + d;
        }
        out
    }

    pub fn basis_tensor(&self, digits: &[usize]) -> SparseVec {
        SparseVec::unit(self.dim(), self.index(digits))
    }

    /// The weight of a basis tensor: the sum of its factor weights.
    pub fn weight_of_index(&self, index: usize) -> (i64, i64) {
        let mut total = (0i64, 0i64);
        for d in self.digits(index) {
            let (m, n) = Weight::ALL[d].mn();
            total = (total.0 + m, total.1 + n);
        }
        total
    }

    /// Move the factor at position `k` to position `perm[k]`.
    pub fn permute(&self, v: &SparseVec, perm: &[usize]) -> SparseVec {
        assert_eq!(perm.len(), self.factors);
        let mut out = SparseVec::zero(self.dim());
        for (index, coeff) in v.iter() {
            let digits = self.digits(index);
            let mut moved = vec![0usize; self.factors];
            for k in 0..self.factors {
                moved[perm[k]] = digits[k];
            }
            out.set(self.index(&moved), coeff.clone());
        }
        out
    }

    /// Swap the factors at two positions.
    pub fn transpose(&self, v: &SparseVec, x: usize, y: usize) -> SparseVec {
        let mut perm: Vec<usize> = (0..self.factors).collect();
        perm.swap(x, y);
        self.permute(v, &perm)
    }
}

/// All permutations of `0..m` in lexicographic order.
fn permutations_list(m: usize) -> Vec<Vec<usize>> {
    fn extend(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, used: &mut [bool]) {
        if current.len() == used.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                current.push(i);
                extend(out, current, used);
                current.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut out, &mut Vec::new(), &mut vec![false; m]);
    out
}

/// The averaged Young operator of a two-row shape in the column-major
/// layout: signed average over column swaps, then average over row
/// permutations.  It squares to `normalization()` times itself, and its
/// image is the Schur functor applied to the standard module.
pub struct YoungOperator {
    shape: TwoRowShape,
    row_perms: Vec<Vec<usize>>,
    column_terms: Vec<(i64, Vec<usize>)>,
}

impl YoungOperator {
    pub fn for_shape(shape: TwoRowShape) -> YoungOperator {
        let n = shape.size();
        let (first, second) = shape.row_positions();
        let mut row_perms = Vec::new();
        for p1 in &permutations_list(first.len()) {
            for p2 in &permutations_list(second.len()) {
                let mut perm: Vec<usize> = (0..n).collect();
                for (t, &slot) in p1.iter().enumerate() {
                    perm[first[t]] = first[slot];
                }
                for (t, &slot) in p2.iter().enumerate() {
                    perm[second[t]] = second[slot];
                }
                row_perms.push(perm);
            }
        }
        let pairs = shape.column_pairs();
        let mut column_terms = Vec::new();
        for mask in 0..(1u32 << pairs.len()) {
            let mut perm: Vec<usize> = (0..n).collect();
            let mut sign = 1i64;
            for (t, &(x, y)) in pairs.iter().enumerate() {
                if mask & (1 << t) != 0 {
                    perm.swap(x, y);
                    sign = -sign;
                }
            }
            column_terms.push((sign, perm));
        }
        YoungOperator { shape, row_perms, column_terms }
    }

    pub fn shape(&self) -> TwoRowShape {
        self.shape
    }

    pub fn row_order(&self) -> usize {
        self.row_perms.len()
    }

    pub fn column_order(&self) -> usize {
        self.column_terms.len()
    }

    /// The constant `c` with `P(P(v)) = c P(v)`: hook product over group
    /// orders.  The image is exactly the eigenspace `P(v) = c v`.
    pub fn normalization(&self) -> Scalar {
        Scalar::ratio(
            self.shape.hook_product() as i64,
            (self.row_order() * self.column_order()) as i64,
        )
        .expect("group orders are positive")
    }

    pub fn apply(&self, space: &TensorSpace, v: &SparseVec) -> SparseVec {
        assert_eq!(space.factors(), self.shape.size());
        let mut antisymmetrized = SparseVec::zero(space.dim());
        for (sign, perm) in &self.column_terms {
            antisymmetrized.add_scaled(&space.permute(v, perm), &Scalar::from_integer(*sign));
        }
        let mut symmetrized = SparseVec::zero(space.dim());
        for perm in &self.row_perms {
            symmetrized.add_scaled(&space.permute(&antisymmetrized, perm), &Scalar::one());
        }
        let average = Scalar::ratio(1, (self.row_order() * self.column_order()) as i64)
            .expect("group orders are positive");
        symmetrized.scale(&average)
    }

    /// The full image inside the tensor power, by projecting every basis
    /// tensor.
    pub fn image(&self, space: &TensorSpace) -> Subspace {
        Subspace::from_spanning(
            space.dim(),
            (0..space.dim()).map(|i| self.apply(space, &SparseVec::unit(space.dim(), i))),
        )
    }

    /// The trace of the operator; equals `normalization()` times the image
    /// dimension.
    pub fn trace(&self, space: &TensorSpace) -> Scalar {
        let mut total = Scalar::zero();
        for i in 0..space.dim() {
            total = &total + &self.apply(space, &SparseVec::unit(space.dim(), i)).get(i);
        }
        total
    }
}

/// One seven-by-seven matrix acting on a tensor power factor by factor, by
/// the sum over positions.
pub struct TensorPowerAction {
    space: TensorSpace,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl TensorPowerAction {
    pub fn new(space: TensorSpace, matrix: &Matrix) -> TensorPowerAction {
        assert_eq!((matrix.rows(), matrix.cols()), (MODULE_RANK, MODULE_RANK));
        let columns = (0..MODULE_RANK)
            .map(|j| {
                (0..MODULE_RANK)
                    .filter(|&i| !matrix.at(i, j).is_zero())
                    .map(|i| (i, matrix.at(i, j).clone()))
                    .collect()
            })
            .collect();
        TensorPowerAction { space, columns }
    }
}

impl LinearOp for TensorPowerAction {
    fn apply_op(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero(self.space.dim());
        for (index, coeff) in v.iter() {
            let digits = self.space.digits(index);
            for (k, &d) in digits.iter().enumerate() {
                let place = self.space.place(k);
                for (row, entry) in &self.columns[d] {
                    let target = index - place * d + place * row;
                    out.set(target, &out.get(target) + &(coeff * entry));
                }
            }
        }
        out
    }
}

/// Digit string of the highest tensor for highest weight `a*mu1 + b*mu2`:
/// each full column holds the pair of weights summing to `mu2`, the row-one
/// tail repeats the weight `mu1`.
pub fn highest_weight_digits(a: usize, b: usize) -> Vec<usize> {
    let top = Weight::Of(Root::MinusBetaPP).index();
    let second = Weight::Of(Root::BetaP).index();
    let mut out = Vec::with_capacity(a + 2 * b);
    for _ in 0..b {
        out.push(top);
        out.push(second);
    }
    for _ in 0..a {
        out.push(top);
    }
    out
}

/// An irreducible module realized inside a tensor power: the closure of the
/// projected highest tensor under the twelve root-vector actions.
pub struct WeylModule {
    a: usize,
    b: usize,
    shape: TwoRowShape,
    space: TensorSpace,
    highest: SparseVec,
    module: Subspace,
}

impl WeylModule {
    pub fn generate(rep: &StandardRep, a: usize, b: usize) -> WeylModule {
        let shape = TwoRowShape::from_highest_weight(a, b);
        let space = TensorSpace::new(shape.size());
        let young = YoungOperator::for_shape(shape);
        let seed = space.basis_tensor(&highest_weight_digits(a, b));
        let highest = young.apply(&space, &seed);
        assert!(!highest.is_zero(), "the projected highest tensor survives");
        let actions: Vec<TensorPowerAction> =
            Root::ALL.iter().map(|&r| TensorPowerAction::new(space, rep.generator(r))).collect();
        let ops: Vec<&dyn LinearOp> = actions.iter().map(|a| a as &dyn LinearOp).collect();
        let module = linalg::closure_under(&ops, space.dim(), &[highest.clone()]);
        WeylModule { a, b, shape, space, highest, module }
    }

    pub fn highest_weight(&self) -> (i64, i64) {
        (self.a as i64, self.b as i64)
    }

    pub fn shape(&self) -> TwoRowShape {
        self.shape
    }

    pub fn tensor_space(&self) -> TensorSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.module
    }

    pub fn highest_vector(&self) -> &SparseVec {
        &self.highest
    }

    /// Exact dimension of every weight space.  Basis rows split into
    /// weight-pure pieces — the splitting stays inside the module because
    /// the two coroots act diagonally on basis tensors — and the pieces of a
    /// fixed weight are ranked.
    pub fn weight_multiplicities(&self) -> BTreeMap<(i64, i64), usize> {
        let dim = self.space.dim();
        let mut buckets: BTreeMap<(i64, i64), Vec<SparseVec>> = BTreeMap::new();
        for row in self.module.basis() {
            let mut pieces: BTreeMap<(i64, i64), SparseVec> = BTreeMap::new();
            for (index, coeff) in row.iter() {
                pieces
                    .entry(self.space.weight_of_index(index))
                    .or_insert_with(|| SparseVec::zero(dim))
                    .set(index, coeff.clone());
            }
            for (w, piece) in pieces {
                buckets.entry(w).or_default().push(piece);
            }
        }
        let mut out = BTreeMap::new();
        let mut total = 0usize;
        for (w, pieces) in buckets {
            let rank = Subspace::from_spanning(dim, pieces).dim();
            if rank > 0 {
                total += rank;
                out.insert(w, rank);
            }
        }
        assert_eq!(total, self.dim(), "weight spaces fill the module");
        out
    }
}

/// The module copy of the standard module inside the tensor square: the
/// antisymmetrized tensor carried by the derivation-kernel generator.
pub fn kernel_tensor(rep: &StandardRep) -> SparseVec {
    let delta = kernel_generator();
    let in_weights: Vec<Vec<Scalar>> = (0..7)
        .map(|k| rep.weight_coordinates(&Octonion::imaginary_unit(k as i64)))
        .collect();
    let mut dense = vec![Scalar::zero(); MODULE_RANK * MODULE_RANK];
    for &(i, j) in WEDGE_PAIRS.iter() {
        let c = delta.coord(i, j);
        if c.is_zero() {
            continue;
        }
        for t1 in 0..MODULE_RANK {
            for t2 in 0..MODULE_RANK {
                let antisym = &(&in_weights[i][t1] * &in_weights[j][t2])
                    - &(&in_weights[j][t1] * &in_weights[i][t2]);
                let slot = &mut dense[t1 * MODULE_RANK + t2];
                *slot = &*slot + &(c * &antisym);
            }
        }
    }
    SparseVec::from_dense(&dense)
}

/// The decomposition of the antisymmetric square: the full Young image,
/// the adjoint-sized closure of the projected highest tensor, and the
/// seven-dimensional closure of the kernel tensor.
pub struct WedgeSquareSplit {
    pub image: Subspace,
    pub adjoint_copy: Subspace,
    pub module_copy: Subspace,
}

pub fn split_wedge_square(rep: &StandardRep) -> WedgeSquareSplit {
    let shape = TwoRowShape::new(1, 1);
    let space = TensorSpace::new(2);
    let image = YoungOperator::for_shape(shape).image(&space);
    let adjoint_copy = WeylModule::generate(rep, 0, 1).module;
    let actions: Vec<TensorPowerAction> =
        Root::ALL.iter().map(|&r| TensorPowerAction::new(space, rep.generator(r))).collect();
    let ops: Vec<&dyn LinearOp> = actions.iter().map(|a| a as &dyn LinearOp).collect();
    let module_copy = linalg::closure_under(&ops, space.dim(), &[kernel_tensor(rep)]);
    WedgeSquareSplit { image, adjoint_copy, module_copy }
}
