//! Named verification suites with structured results.
//!
//! Each suite re-derives a family of facts by exact computation and reports
//! one line per check.  Randomized checks draw from fixed seeds, so repeated
//! runs produce identical reports.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::chevalley::{
    chain_length, long_root_factors, non_homomorphism_witness, so7_bracket, weight_vector,
    weight_zero_vector, ChevalleyBasis, Root, ALGEBRA_DIM,
};
use crate::derivations::{
    d_basis_closed_form, d_matrix, d_pair, d_wedge, kernel_generator, kernel_of_d, kernel_orbit,
    leibniz_defect, pair_blocks, DerivationAlgebra, Wedge2, WEDGE_DIM, WEDGE_PAIRS,
};
use crate::gf8::{self, F8};
use crate::linalg::{self, LinearOp, Matrix, SparseVec, Subspace};
use crate::octonion::{GaloisSymmetry, Octonion, OCT_DIM};
use crate::rng::SeededRng;
use crate::scalar::Scalar;
use crate::standard_rep::{action_sign, action_sign_geometric, weight_of, ActionEntry, StandardRep, Weight};
use crate::weyl::{
    positive_roots, rotate_mn, simple_gap, split_wedge_square, weyl_dimension, TensorPowerAction,
    TensorSpace, TwoRowShape, WeylModule, YoungOperator,
};

/// The outcome of one named check.
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// All checks of one suite.
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Registered suite names, in running order.
pub const SUITE_NAMES: [&str; 8] = [
    "gf8",
    "scalar",
    "linalg",
    "octonion",
    "derivations",
    "chevalley",
    "standard-rep",
    "weyl",
];

/// Runs one suite by name; `None` for an unregistered name.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    match name {
        "gf8" => Some(gf8_suite()),
        "scalar" => Some(scalar_suite()),
        "linalg" => Some(linalg_suite()),
        "octonion" => Some(octonion_suite()),
        "derivations" => Some(derivations_suite()),
        "chevalley" => Some(chevalley_suite()),
        "standard-rep" => Some(standard_rep_suite()),
        "weyl" => Some(weyl_suite()),
        _ => None,
    }
}

/// Runs every registered suite in order.
pub fn run_all() -> Vec<SuiteReport> {
    SUITE_NAMES.iter().map(|n| run_suite(n).expect("registered suite")).collect()
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult { name: name.to_string(), passed, detail }
}

fn random_scalar(rng: &mut SeededRng) -> Scalar {
    Scalar::gaussian(
        rng.int_in(-9, 10),
        rng.int_in(1, 8),
        rng.int_in(-9, 10),
        rng.int_in(1, 8),
    )
    .expect("positive denominators")
}

fn random_octonion(rng: &mut SeededRng) -> Octonion {
    Octonion::from_coords((0..OCT_DIM).map(|_| random_scalar(rng)).collect())
}

fn octonion_conjugate(a: &Octonion) -> Octonion {
    let double_real = Octonion::one().scale(&(a.real_part() + a.real_part()));
    double_real.sub(a)
}

fn gf8_suite() -> SuiteReport {
    let mut checks = Vec::new();

    let mut ok = true;
    let mut triples = 0usize;
    for &x in &F8::all() {
        for &y in &F8::all() {
            for &z in &F8::all() {
                triples += 1;
                ok &= x.mul(y.mul(z)) == x.mul(y).mul(z);
                ok &= x.mul(y) == y.mul(x);
                ok &= x.mul(y.add(z)) == x.mul(y).add(x.mul(z));
                ok &= x.add(y) == y.add(x);
            }
        }
    }
    for &x in &F8::nonzero() {
        ok &= x.mul(x.power(6).expect("unit power")) == F8::ONE;
        ok &= x.power(7).expect("unit power") == x.power(0).expect("unit power");
    }
    checks.push(check(
        "field-axioms",
        ok,
        format!("ring laws on {triples} triples; every unit inverts by its sixth power"),
    ));

    let powers: Vec<F8> = (0..7).map(|k| F8::ALPHA.power(k).expect("power")).collect();
    let mut ok = powers.iter().collect::<alloc::collections::BTreeSet<_>>().len() == 7;
    ok &= F8::ALPHA.power(7).expect("power") == F8::ONE;
    for p in &powers {
        ok &= !p.is_zero();
    }
    checks.push(check(
        "generator-order",
        ok,
        "the generator has order seven and its powers list every unit".to_string(),
    ));

    let zeros: Vec<F8> = F8::all().into_iter().filter(|x| x.trace() == 0).collect();
    let expected = [
        F8::ZERO,
        F8::ALPHA,
        F8::ALPHA.mul(F8::ALPHA),
        F8::alpha_power(4),
    ];
    let mut ok = zeros == expected;
    for &x in &F8::all() {
        for &y in &F8::all() {
            ok &= (x.add(y)).trace() == (x.trace() + y.trace()) % 2;
            ok &= x.mul(x).trace() == x.trace();
        }
    }
    checks.push(check(
        "trace-kernel",
        ok,
        "the trace is additive, Frobenius-invariant, and vanishes exactly on zero and three powers"
            .to_string(),
    ));

    let mut ok = true;
    for &x in &F8::nonzero() {
        ok &= x.phi(x) == 1;
        ok &= x.phi(F8::ZERO) == 0 && F8::ZERO.phi(x) == 0;
        for &y in &F8::nonzero() {
            if x != y {
                ok &= (x.phi(y) + y.phi(x)) % 2 == 1;
            }
        }
    }
    checks.push(check(
        "sign-pairing",
        ok,
        "the multiplication pairing is 1 on the diagonal and antisymmetric off it".to_string(),
    ));

    let closure = gf8::frobenius_mtwist_closure();
    let mut ok = closure.len() == 21;
    for &x in &F8::all() {
        let fr = |v: F8| v.frobenius();
        let m = |v: F8| v.mtwist();
        ok &= fr(fr(fr(x))) == x;
        let mut seven = x;
        for _ in 0..7 {
            seven = m(seven);
        }
        ok &= seven == x;
        ok &= fr(m(fr(fr(x)))) == m(m(x));
    }
    checks.push(check(
        "symmetry-group",
        ok,
        format!(
            "squaring and generator-multiplication close into {} maps with the twist relation",
            closure.len()
        ),
    ));

    SuiteReport { suite: "gf8".to_string(), checks }
}

fn scalar_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let mut rng = SeededRng::fixed(0x5343_414c_4152);

    let mut ok = true;
    let rounds = 60usize;
    for _ in 0..rounds {
        let a = random_scalar(&mut rng);
        let b = random_scalar(&mut rng);
        let c = random_scalar(&mut rng);
        ok &= &(&a + &b) + &c == &a + &(&b + &c);
        ok &= &(&a * &b) * &c == &a * &(&b * &c);
        ok &= &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        ok &= &a * &b == &b * &a;
        ok &= &a - &a == Scalar::zero();
    }
    checks.push(check(
        "exact-field-laws",
        ok,
        format!("ring laws hold on {rounds} random rational triples"),
    ));

    let mut ok = &Scalar::i() * &Scalar::i() == Scalar::from_integer(-1);
    for _ in 0..30 {
        let a = random_scalar(&mut rng);
        let b = random_scalar(&mut rng);
        ok &= (&a * &b).conj() == &a.conj() * &b.conj();
        let norm = Scalar::from_parts(a.norm(), num_rational::BigRational::from_integer(0.into()));
        ok &= &a * &a.conj() == norm;
    }
    checks.push(check(
        "conjugation-norm",
        ok,
        "conjugation is multiplicative and recovers the square norm".to_string(),
    ));

    let mut ok = Scalar::ratio(6, 3).expect("den").to_integer() == Some(2.into());
    ok &= Scalar::ratio(1, 3).expect("den").to_integer().is_none();
    ok &= Scalar::i().to_integer().is_none();
    ok &= Scalar::ratio(1, 3).expect("den") + Scalar::ratio(1, 6).expect("den")
        == Scalar::ratio(1, 2).expect("den");
    checks.push(check(
        "integer-detection",
        ok,
        "integrality tests and exact fraction arithmetic agree".to_string(),
    ));

    let mut ok = Scalar::zero().inverse().is_err();
    ok &= Scalar::one().checked_div(&Scalar::zero()).is_err();
    ok &= Scalar::ratio(1, 0).is_err();
    for _ in 0..30 {
        let a = random_scalar(&mut rng);
        let mut b = random_scalar(&mut rng);
        if b.is_zero() {
            b = Scalar::one();
        }
        ok &= &a.checked_div(&b).expect("nonzero divisor") * &b == a;
    }
    checks.push(check(
        "safe-division",
        ok,
        "division round-trips on nonzero divisors and rejects zero".to_string(),
    ));

    SuiteReport { suite: "scalar".to_string(), checks }
}

fn random_integer_matrix(rng: &mut SeededRng, n: usize) -> Matrix {
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = Scalar::from_integer(rng.int_in(-4, 5));
        }
    }
    m
}

fn linalg_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let mut rng = SeededRng::fixed(0x4c49_4e41_4c47);

    let mut ok = true;
    for _ in 0..10 {
        let m = random_integer_matrix(&mut rng, 5);
        let rank = linalg::rank(&m);
        let nullity = linalg::kernel(&m).dim();
        ok &= rank + nullity == 5;
        ok &= (rank == 5) == linalg::invert(&m).is_ok();
        for v in linalg::kernel(&m).basis() {
            ok &= m.apply_sparse(v).is_zero();
        }
    }
    checks.push(check(
        "rank-nullity",
        ok,
        "row rank and kernel dimension fill the ambient space; kernels annihilate".to_string(),
    ));

    let mut ok = true;
    for _ in 0..8 {
        // Unitriangular times unitriangular is invertible with determinant one.
        let mut upper = Matrix::identity(5);
        let mut lower = Matrix::identity(5);
        for i in 0..5 {
            for j in (i + 1)..5 {
                *upper.at_mut(i, j) = Scalar::from_integer(rng.int_in(-4, 5));
                *lower.at_mut(j, i) = Scalar::from_integer(rng.int_in(-4, 5));
            }
        }
        let m = upper.mul(&lower);
        let inv = linalg::invert(&m).expect("unitriangular product inverts");
        ok &= m.mul(&inv) == Matrix::identity(5);
        ok &= inv.mul(&m) == Matrix::identity(5);
    }
    let mut repeated = Matrix::zero(3, 3);
    for j in 0..3 {
        *repeated.at_mut(0, j) = Scalar::from_integer(j as i64 + 1);
        *repeated.at_mut(1, j) = Scalar::from_integer(2 * (j as i64 + 1));
        *repeated.at_mut(2, j) = Scalar::from_integer(rng.int_in(-3, 4));
    }
    ok &= linalg::invert(&repeated).is_err();
    checks.push(check(
        "inverse-round-trip",
        ok,
        "unitriangular products invert on both sides; proportional rows are rejected".to_string(),
    ));

    let mut ok = true;
    let ambient = 6usize;
    let mut space = Subspace::empty(ambient);
    let mut inserted = Vec::new();
    for _ in 0..4 {
        let mut v = SparseVec::zero(ambient);
        for _ in 0..3 {
            v.set(rng.index(ambient), Scalar::from_integer(rng.int_in(-5, 6)));
        }
        space.insert(&v);
        inserted.push(v);
    }
    let dim = space.dim();
    for v in &inserted {
        ok &= space.member(v);
        space.insert(v);
    }
    ok &= space.dim() == dim;
    let mut combo = SparseVec::zero(ambient);
    for v in &inserted {
        combo.add_scaled(v, &Scalar::from_integer(rng.int_in(-3, 4)));
    }
    ok &= space.member(&combo);
    checks.push(check(
        "span-membership",
        ok,
        "reinsertion is stable and random combinations stay inside the span".to_string(),
    ));

    let mut rotation = Matrix::zero(2, 2);
    *rotation.at_mut(0, 1) = Scalar::from_integer(-1);
    *rotation.at_mut(1, 0) = Scalar::one();
    let seed = SparseVec::unit(2, 0);
    let closed = linalg::closure_under(&[&rotation as &dyn LinearOp], 2, &[seed]);
    let mut ok = closed.dim() == 2;
    let family: Vec<SparseVec> = (0..4)
        .map(|k| {
            let mut v = SparseVec::zero(3);
            v.set(k % 3, Scalar::from_integer(1 + k as i64));
            v
        })
        .collect();
    let solver = linalg::SpanSolver::greedy(3, &family);
    ok &= solver.rank() == 3;
    for v in &family {
        let coords = solver.express(v).expect("family spans");
        let mut rebuilt = SparseVec::zero(3);
        for (c, &idx) in coords.iter().zip(solver.selected()) {
            rebuilt.add_scaled(&family[idx], c);
        }
        ok &= &rebuilt == v;
    }
    checks.push(check(
        "closure-and-span",
        ok,
        "operator closure fills the plane; greedy spanning coordinates rebuild inputs".to_string(),
    ));

    SuiteReport { suite: "linalg".to_string(), checks }
}

fn octonion_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let mut rng = SeededRng::fixed(0x4f43_544f);

    let mut ok = true;
    let mut count = 0usize;
    for &x in &F8::all() {
        for &y in &F8::all() {
            count += 1;
            let product = Octonion::unit(x).multiply(&Octonion::unit(y));
            let (sign, exponent) = crate::octonion::basis_product(x, y);
            let expected = Octonion::unit(exponent).scale(&Scalar::from_integer(sign as i64));
            ok &= product == expected;
        }
    }
    let e = |i: i64| Octonion::imaginary_unit(i);
    ok &= e(1).multiply(&e(3)) == e(0);
    ok &= e(1).multiply(&e(2)) == e(4);
    ok &= e(2).multiply(&e(1)) == e(4).neg();
    ok &= e(1).commutator(&e(3)) == e(0).scale(&Scalar::from_integer(2));
    for i in 0..7 {
        ok &= e(i).multiply(&e(i)) == Octonion::one().neg();
        ok &= Octonion::one().multiply(&e(i)) == e(i);
        ok &= e(i).multiply(&Octonion::one()) == e(i);
    }
    checks.push(check(
        "basis-products",
        ok,
        format!("all {count} basis products carry the signed exponent-sum rule"),
    ));

    let mut ok = true;
    let pairs = 100usize;
    for _ in 0..pairs {
        let a = random_octonion(&mut rng);
        let b = random_octonion(&mut rng);
        ok &= a.multiply(&b).norm() == &a.norm() * &b.norm();
    }
    checks.push(check(
        "norm-multiplicativity",
        ok,
        format!("the square norm is multiplicative on {pairs} random rational pairs"),
    ));

    let mut ok = true;
    for _ in 0..30 {
        let a = random_octonion(&mut rng);
        let b = random_octonion(&mut rng);
        ok &= octonion_conjugate(&a.multiply(&b))
            == octonion_conjugate(&b).multiply(&octonion_conjugate(&a));
        let norm_scalar = a.norm();
        ok &= a.multiply(&octonion_conjugate(&a)) == Octonion::one().scale(&norm_scalar);
    }
    checks.push(check(
        "conjugation-antiautomorphism",
        ok,
        "conjugation reverses products and recovers the norm".to_string(),
    ));

    let mut ok = true;
    for _ in 0..30 {
        let a = random_octonion(&mut rng);
        let b = random_octonion(&mut rng);
        ok &= a.multiply(&a.multiply(&b)) == a.multiply(&a).multiply(&b);
        ok &= a.multiply(&b).multiply(&b) == a.multiply(&b.multiply(&b));
        ok &= a.multiply(&b.multiply(&a)) == a.multiply(&b).multiply(&a);
    }
    checks.push(check(
        "alternative-laws",
        ok,
        "left and right alternativity and flexibility hold on random pairs".to_string(),
    ));

    let mut ok = true;
    for _ in 0..20 {
        let a = random_octonion(&mut rng);
        let b = random_octonion(&mut rng);
        let c = random_octonion(&mut rng);
        let base = Octonion::associator(&a, &b, &c);
        ok &= Octonion::associator(&b, &a, &c) == base.neg();
        ok &= Octonion::associator(&a, &c, &b) == base.neg();
        ok &= Octonion::associator(&a, &a, &c).is_zero();
    }
    checks.push(check(
        "associator-alternation",
        ok,
        "the associator is alternating in its three slots".to_string(),
    ));

    let mut ok = GaloisSymmetry::all().len() == 21;
    for g in [GaloisSymmetry::FROBENIUS, GaloisSymmetry::MTWIST] {
        for &x in &F8::all() {
            for &y in &F8::all() {
                let (a, b) = (Octonion::unit(x), Octonion::unit(y));
                ok &= g.apply_octonion(&a.multiply(&b))
                    == g.apply_octonion(&a).multiply(&g.apply_octonion(&b));
            }
        }
    }
    ok &= GaloisSymmetry::FROBENIUS.power(3) == GaloisSymmetry::IDENTITY;
    ok &= GaloisSymmetry::MTWIST.power(7) == GaloisSymmetry::IDENTITY;
    let fr = GaloisSymmetry::FROBENIUS;
    let m = GaloisSymmetry::MTWIST;
    ok &= fr.compose(m).compose(fr.inverse()) == m.compose(m);
    checks.push(check(
        "index-symmetries",
        ok,
        "both index symmetries are automorphisms generating an order-21 group".to_string(),
    ));

    SuiteReport { suite: "octonion".to_string(), checks }
}

fn derivations_suite() -> SuiteReport {
    let mut checks = Vec::new();

    let mut ok = true;
    let mut triples = 0usize;
    for &x in &F8::nonzero() {
        for &y in &F8::nonzero() {
            if x == y {
                continue;
            }
            let op = d_pair(&Octonion::unit(x), &Octonion::unit(y));
            for &z in &F8::all() {
                triples += 1;
                let direct = Octonion::from_coords(op.apply(Octonion::unit(z).coords()));
                let formula = d_basis_closed_form(x, y, z).expect("nondegenerate wedge");
                ok &= direct == formula;
            }
        }
    }
    checks.push(check(
        "closed-form",
        ok,
        format!("the four-case image formula matches on all {triples} basis triples"),
    ));

    let mut ok = true;
    let mut count = 0usize;
    for &(i, j) in WEDGE_PAIRS.iter() {
        let op = d_wedge(&Wedge2::unit(i, j));
        for &a in &F8::all() {
            for &b in &F8::all() {
                count += 1;
                ok &= leibniz_defect(&op, &Octonion::unit(a), &Octonion::unit(b)).is_zero();
            }
        }
    }
    checks.push(check(
        "leibniz-rule",
        ok,
        format!("all {count} product derivations vanish on basis pairs"),
    ));

    let mut ok = true;
    for &x in &F8::all() {
        for &y in &F8::all() {
            let a = Octonion::unit(x);
            let b = Octonion::unit(y);
            let r = crate::derivations::r_pair(&a, &b);
            for &z in &F8::all() {
                let c = Octonion::unit(z);
                let lhs = Octonion::from_coords(r.apply(c.coords()));
                let rhs = Octonion::associator(&a, &b, &c).scale(&Scalar::from_integer(-6));
                ok &= lhs == rhs;
            }
            let twice_d = d_pair(&a, &b).scale(&Scalar::from_integer(2));
            let mut assoc_op = Matrix::zero(OCT_DIM, OCT_DIM);
            for col in 0..OCT_DIM {
                let image = Octonion::associator(&a, &b, &Octonion::unit(crate::octonion::index_exponent(col)));
                for row in 0..OCT_DIM {
                    *assoc_op.at_mut(row, col) = image.coord(row).clone();
                }
            }
            let rhs = a.commutator(&b).ad_operator().sub(&assoc_op.scale(&Scalar::from_integer(3)));
            ok &= twice_d == rhs;
        }
    }
    checks.push(check(
        "bracket-identities",
        ok,
        "the commutator remainder is minus six associators; twice a derivation splits as stated"
            .to_string(),
    ));

    let mut ok = linalg::rank(&d_matrix()) == ALGEBRA_DIM;
    let kernel = kernel_of_d();
    ok &= kernel.dim() == 7;
    let orbit = kernel_orbit();
    let orbit_span =
        Subspace::from_spanning(WEDGE_DIM, orbit.iter().map(Wedge2::to_sparse));
    ok &= orbit_span.dim() == 7;
    for v in orbit_span.basis() {
        ok &= kernel.member(v);
    }
    let delta = kernel_generator();
    ok &= delta.galois_apply(GaloisSymmetry::FROBENIUS) == delta;
    let blocks = pair_blocks();
    let mut seen = alloc::collections::BTreeSet::new();
    for block in &blocks {
        for &(i, j) in block {
            seen.insert((i, j));
        }
    }
    ok &= seen.len() == WEDGE_DIM;
    checks.push(check(
        "kernel-structure",
        ok,
        "rank 14 with a seven-dimensional kernel swept out by the twist orbit".to_string(),
    ));

    let mut ok = true;
    let mut count = 0usize;
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
                    ok &= image.multiply(&unit).add(&unit.multiply(&image)).is_zero();
                    count += 1;
                }
            }
        }
    }
    checks.push(check(
        "anticommutation",
        ok,
        format!("derivation images anticommute with {count} off-exponent units"),
    ));

    let algebra = DerivationAlgebra::build();
    let mut ok = algebra.dim() == ALGEBRA_DIM;
    let gram = algebra.killing_gram().expect("basis coordinates");
    ok &= linalg::rank(&gram) == ALGEBRA_DIM;
    let blocks = pair_blocks();
    for (bi, block_i) in blocks.iter().enumerate() {
        for (bj, block_j) in blocks.iter().enumerate() {
            if bi == bj {
                continue;
            }
            for &(i1, j1) in block_i {
                for &(i2, j2) in block_j {
                    let x = algebra
                        .element(&d_wedge(&Wedge2::unit(i1, j1)))
                        .expect("derivation in span");
                    let y = algebra
                        .element(&d_wedge(&Wedge2::unit(i2, j2)))
                        .expect("derivation in span");
                    ok &= algebra.killing_form(&x, &y).expect("coords").is_zero();
                }
            }
        }
    }
    checks.push(check(
        "killing-blocks",
        ok,
        "the trace form is nondegenerate and separates the seven wedge blocks".to_string(),
    ));

    SuiteReport { suite: "derivations".to_string(), checks }
}

fn chevalley_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let basis = ChevalleyBasis::build();
    let i = Scalar::i();
    let third_i = Scalar::from_parts(
        num_rational::BigRational::from_integer(0.into()),
        num_rational::BigRational::new(1.into(), 3.into()),
    );

    let d13 = d_wedge(&Wedge2::unit(1, 3));
    let d26 = d_wedge(&Wedge2::unit(2, 6));
    let d45 = d_wedge(&Wedge2::unit(4, 5));
    let mut ok = *basis.coroot(Root::Beta) == d13.scale(&i).neg();
    ok &= *basis.coroot(Root::Gamma) == d13.sub(&d26).scale(&third_i);
    ok &= *basis.coroot(Root::BetaP) == d26.scale(&i).neg();
    ok &= *basis.coroot(Root::BetaPP) == d45.scale(&i).neg();
    ok &= *basis.coroot(Root::GammaP) == d26.sub(&d45).scale(&third_i);
    ok &= *basis.coroot(Root::GammaPP) == d45.sub(&d13).scale(&third_i);
    for r in Root::ALL {
        ok &= *basis.coroot(r.negated()) == basis.coroot(r).neg();
    }
    ok &= basis.h_beta().commutator(basis.h_gamma()).is_zero();
    checks.push(check(
        "cartan-literals",
        ok,
        "all twelve coroots match their frozen wedge combinations and commute".to_string(),
    ));

    let v0 = weight_zero_vector();
    let half = Scalar::ratio(1, 2).expect("den");
    let sixth = Scalar::ratio(1, 6).expect("den");
    let mut ok = true;
    for psi in Root::SHORT {
        let expected = d_wedge(&Wedge2::of(&v0, &weight_vector(psi))).scale(&half);
        ok &= *basis.root_vector(psi) == expected;
    }
    for nu in Root::LONG {
        let (psi1, psi2) = long_root_factors(nu);
        let expected =
            d_wedge(&Wedge2::of(&weight_vector(psi1), &weight_vector(psi2))).scale(&sixth);
        ok &= *basis.root_vector(nu) == expected;
    }
    checks.push(check(
        "root-vector-rules",
        ok,
        "short vectors halve zero-weight wedges; long vectors are sixth-scaled short wedges"
            .to_string(),
    ));

    let mut ok = true;
    for sigma in Root::ALL {
        let (m, n) = sigma.mn();
        let e = basis.root_vector(sigma);
        ok &= basis.h_beta().commutator(e) == e.scale(&Scalar::from_integer(m));
        ok &= basis.h_gamma().commutator(e) == e.scale(&Scalar::from_integer(n));
    }
    ok &= Root::Beta.mn().0 == 2 && Root::Beta.mn().1 == -1;
    ok &= Root::Gamma.mn().0 == -3 && Root::Gamma.mn().1 == 2;
    checks.push(check(
        "eigenvalue-table",
        ok,
        "both coroots act on every root vector by its integer eigenvalue pair".to_string(),
    ));

    let constants = basis.structure_constants();
    let mut ok = constants.is_ok();
    let mut detail = "structure constants fail to be integers".to_string();
    if let Ok(sc) = &constants {
        ok &= sc.is_antisymmetric();
        ok &= sc.jacobi_holds();
        for r in Root::ALL {
            let e = basis.root_vector(r);
            let f = basis.root_vector(r.negated());
            ok &= e.commutator(f) == *basis.coroot(r.negated());
        }
        let i_beta = ChevalleyBasis::root_index(Root::Beta);
        let i_minus = ChevalleyBasis::root_index(Root::MinusBeta);
        ok &= sc.coefficient(i_beta, i_minus, 0) == -1;
        detail = format!(
            "{} integer brackets are antisymmetric, satisfy the Jacobi identity, and pair \
             opposite vectors into negated coroots",
            ALGEBRA_DIM * ALGEBRA_DIM
        );
    }
    checks.push(check("integral-structure", ok, detail));

    let mut ok = true;
    let mut counted = 0usize;
    if let Ok(sc) = &constants {
        for rho in Root::ALL {
            for sigma in Root::ALL {
                let Some(sum) = rho.plus(sigma) else { continue };
                counted += 1;
                let i = ChevalleyBasis::root_index(rho);
                let j = ChevalleyBasis::root_index(sigma);
                let k = ChevalleyBasis::root_index(sum);
                let n = sc.coefficient(i, j, k);
                ok &= n.abs() == chain_length(rho, sigma) + 1;
            }
        }
    }
    ok &= chain_length(Root::Beta, Root::Gamma) == 0;
    ok &= chain_length(Root::BetaP, Root::MinusBeta) == 2;
    ok &= chain_length(Root::Beta, Root::GammaPP) == 3;
    checks.push(check(
        "chain-lengths",
        ok,
        format!("|N| is one more than the chain length on all {counted} summing pairs"),
    ));

    let decomposition = basis.root_space_decomposition();
    let mut ok = decomposition.is_ok();
    if let Ok(d) = &decomposition {
        ok &= d.root_spaces.len() == 12;
        let coords = |op: &Matrix| {
            SparseVec::from_dense(&basis.coordinates(op).expect("basis element"))
        };
        for (root, space) in &d.root_spaces {
            ok &= space.dim() == 1;
            ok &= space.member(&coords(basis.root_vector(*root)));
        }
        ok &= d.zero_space.dim() == 2;
        ok &= d.zero_space.member(&coords(basis.h_beta()));
        ok &= d.zero_space.member(&coords(basis.h_gamma()));
    }
    checks.push(check(
        "root-decomposition",
        ok,
        "twelve lines and a two-dimensional commuting zero space fill the algebra".to_string(),
    ));

    let twelve = Scalar::from_integer(12);
    let mut ok = true;
    for nu in Root::LONG {
        let (psi1, psi2) = long_root_factors(nu);
        let w1 = Wedge2::of(&v0, &weight_vector(psi1));
        let w2 = Wedge2::of(&v0, &weight_vector(psi2));
        let lhs = d_wedge(&w1).commutator(&d_wedge(&w2));
        ok &= lhs == basis.root_vector(nu).scale(&twelve);
        ok &= lhs == d_wedge(&so7_bracket(&w1, &w2)).neg();
    }
    let (w1, w2) = non_homomorphism_witness();
    let lhs = d_wedge(&w1).commutator(&d_wedge(&w2));
    ok &= lhs != d_wedge(&so7_bracket(&w1, &w2)).neg();
    checks.push(check(
        "orthogonal-bracket",
        ok,
        "the orthogonal-algebra bracket matches on all six long-root wedges and fails on the \
         witness pair"
            .to_string(),
    ));

    SuiteReport { suite: "chevalley".to_string(), checks }
}

fn standard_rep_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let rep = StandardRep::build();
    let basis = rep.chevalley();

    let mut ok = true;
    for w in Weight::ALL {
        ok &= weight_of(basis, &w.vector()) == Some(w.mn());
    }
    ok &= linalg::invert(rep.weight_matrix()).is_ok();
    checks.push(check(
        "weight-basis",
        ok,
        "seven simultaneous eigenvectors with the frozen eigenvalue pairs form a basis"
            .to_string(),
    ));

    let mut ok = true;
    let mut count = 0usize;
    for (rho, row) in rep.action_table() {
        for (w, entry) in Weight::ALL.iter().zip(row) {
            count += 1;
            let image = rep.act(rho, *w);
            let expected = match entry {
                ActionEntry::Zero => Octonion::zero(),
                ActionEntry::MinusTwoZero => {
                    weight_zero_vector().scale(&Scalar::from_integer(-2))
                }
                ActionEntry::Signed(sign, target) => {
                    target.vector().scale(&Scalar::from_integer(sign as i64))
                }
            };
            ok &= image == expected;
        }
    }
    checks.push(check(
        "action-table",
        ok,
        format!("all {count} root-vector images match the signed table"),
    ));

    let mut ok = true;
    let mut arrows = 0usize;
    for rho in Root::ALL {
        for psi in Root::SHORT {
            let Some(sum) = rho.plus(psi) else { continue };
            if !sum.is_short() {
                continue;
            }
            arrows += 1;
            ok &= action_sign(rho, psi) == action_sign_geometric(rho, psi);
        }
    }
    ok &= arrows == 24;
    checks.push(check(
        "sign-rule",
        ok,
        format!("the algebraic and rotational sign rules agree on all {arrows} arrows"),
    ));

    let mut ok = true;
    for rho in Root::ALL {
        let m = rep.generator(rho);
        for j in 0..7 {
            let mut nonzero = 0usize;
            for r in 0..7 {
                let entry = m.at(r, j);
                if entry.is_zero() {
                    continue;
                }
                nonzero += 1;
                let value = entry.to_integer().map(|v| i64::try_from(v).ok());
                ok &= matches!(value, Some(Some(1 | -1 | -2)));
            }
            ok &= nonzero <= 1;
        }
    }
    checks.push(check(
        "integer-generators",
        ok,
        "weight-basis generators are integer with at most one entry per column".to_string(),
    ));

    let mut ok = true;
    for rho in Root::ALL {
        let m = rep.coroot_matrix(rho);
        for r in 0..7 {
            for c in 0..7 {
                if r != c {
                    ok &= m.at(r, c).is_zero();
                }
            }
            let expected = match Weight::ALL[r] {
                Weight::Zero => 0,
                Weight::Of(psi) => 2 * psi.inner(rho) / rho.norm2(),
            };
            ok &= *m.at(r, r) == Scalar::from_integer(expected);
        }
    }
    checks.push(check(
        "coroot-diagonals",
        ok,
        "coroot matrices are diagonal with the paired eigenvalues".to_string(),
    ));

    SuiteReport { suite: "standard-rep".to_string(), checks }
}

fn weyl_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let rep = StandardRep::build();

    let mut ok = true;
    let mut rng = SeededRng::fixed(0x5745_594c);
    for shape in [
        TwoRowShape::new(1, 1),
        TwoRowShape::new(2, 0),
        TwoRowShape::new(2, 1),
        TwoRowShape::new(2, 2),
    ] {
        let space = TensorSpace::new(shape.size());
        let young = YoungOperator::for_shape(shape);
        let c = young.normalization();
        for _ in 0..4 {
            let mut v = SparseVec::zero(space.dim());
            for _ in 0..5 {
                v.set(rng.index(space.dim()), Scalar::from_integer(rng.int_in(-4, 5)));
            }
            let once = young.apply(&space, &v);
            ok &= young.apply(&space, &once) == once.scale(&c);
        }
        if let Some(&(x, y)) = shape.column_pairs().first() {
            for index in 0..space.dim() {
                let digits = space.digits(index);
                let v = SparseVec::unit(space.dim(), index);
                let projected = young.apply(&space, &v);
                if digits[x] == digits[y] {
                    ok &= projected.is_zero();
                }
                ok &= young.apply(&space, &space.transpose(&v, x, y)) == projected.neg();
            }
        }
    }
    let hook = TwoRowShape::new(2, 1);
    let space3 = TensorSpace::new(3);
    let young3 = YoungOperator::for_shape(hook);
    for index in 0..space3.dim() {
        let v = SparseVec::unit(space3.dim(), index);
        let direct = young3.apply(&space3, &v);
        let exchanged = young3
            .apply(&space3, &space3.transpose(&v, 0, 2))
            .add(&young3.apply(&space3, &space3.transpose(&v, 1, 2)));
        ok &= direct == exchanged;
    }
    checks.push(check(
        "projector-laws",
        ok,
        "scaled idempotency, column alternation, and the exchange relation hold".to_string(),
    ));

    let mut ok = true;
    for shape in [TwoRowShape::new(1, 1), TwoRowShape::new(2, 0), TwoRowShape::new(2, 1)] {
        let space = TensorSpace::new(shape.size());
        let young = YoungOperator::for_shape(shape);
        let image = young.image(&space);
        ok &= image.dim() as u64 == shape.schur_dimension();
        ok &= young.trace(&space)
            == &young.normalization() * &Scalar::from_integer(image.dim() as i64);
    }
    checks.push(check(
        "schur-ranks",
        ok,
        "projected tensor powers have ranks 21, 28, and 112, confirmed by traces".to_string(),
    ));

    let mut modules = Vec::new();
    for (a, b) in [(0usize, 0usize), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
        modules.push(WeylModule::generate(&rep, a, b));
    }
    let mut ok = true;
    let mut dims = Vec::new();
    for module in &modules {
        let (a, b) = module.highest_weight();
        let expected = weyl_dimension(a as u64, b as u64);
        ok &= module.dim() as u64 == expected;
        dims.push(format!("{}", module.dim()));
    }
    checks.push(check(
        "module-dimensions",
        ok,
        format!("generated dimensions {} match the degree formula", dims.join(", ")),
    ));

    let mut ok = true;
    for module in modules.iter().skip(1) {
        let lambda = module.highest_weight();
        let space = module.tensor_space();
        let highest = module.highest_vector();
        ok &= module.subspace().member(highest);
        for (index, _) in highest.iter() {
            ok &= space.weight_of_index(index) == lambda;
        }
        for root in positive_roots() {
            let action = TensorPowerAction::new(space, rep.generator(root));
            ok &= action.apply_op(highest).is_zero();
        }
    }
    checks.push(check(
        "singular-vectors",
        ok,
        "every projected highest tensor is weight-pure and killed by the positive roots"
            .to_string(),
    ));

    let mut ok = true;
    let frozen_zero = [1usize, 2, 3, 4, 5];
    for (module, zero_mult) in modules.iter().skip(1).zip(frozen_zero) {
        let lambda = module.highest_weight();
        let mults = module.weight_multiplicities();
        ok &= mults[&(0, 0)] == zero_mult;
        ok &= mults[&lambda] == 1;
        ok &= mults.values().sum::<usize>() == module.dim();
        for (&w, &mult) in &mults {
            let (p, q) = simple_gap(lambda, w);
            ok &= p >= 0 && q >= 0;
            ok &= mults.get(&rotate_mn(w)) == Some(&mult);
            ok &= mults.get(&(-w.0, -w.1)) == Some(&mult);
        }
    }
    checks.push(check(
        "weight-multiplicities",
        ok,
        "multiplicities are dominant, rotation- and negation-symmetric, with zero-weight \
         spaces 1, 2, 3, 4, 5"
            .to_string(),
    ));

    let split = split_wedge_square(&rep);
    let mut ok = split.image.dim() == 21;
    ok &= split.adjoint_copy.dim() == 14;
    ok &= split.module_copy.dim() == 7;
    for row in split.adjoint_copy.basis().iter().chain(split.module_copy.basis()) {
        ok &= split.image.member(row);
    }
    let union = Subspace::from_spanning(
        49,
        split.adjoint_copy.basis().iter().chain(split.module_copy.basis()).cloned(),
    );
    ok &= union.dim() == 21;
    checks.push(check(
        "alternating-square",
        ok,
        "the 21-dimensional alternating square splits as 14 plus 7".to_string(),
    ));

    SuiteReport { suite: "weyl".to_string(), checks }
}
