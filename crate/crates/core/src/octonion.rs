//! The complexified octonions with multiplication indexed by the field with
//! eight elements.
//!
//! Basis vectors are `e^x` for field elements `x`, with product
//! `e^x * e^y = (-1)^phi(x,y) e^(x+y)`.  The identity is `u = e^0` (zero
//! exponent); the seven imaginary units are `e_i = e^(a^i)` for `i = 0..6`.
//! Coordinates are stored in the order `[u, e0, e1, .., e6]`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::gf8::F8;
use crate::linalg::{Matrix, Operator, SparseVec};
use crate::scalar::Scalar;

/// Number of basis coordinates: the unit plus seven imaginary units.
pub const OCT_DIM: usize = 8;

/// The coordinate slot of the basis vector `e^x`.
pub fn basis_index(x: F8) -> usize {
    match x.alpha_index() {
        Err(_) => 0,
        Ok(i) => 1 + i as usize,
    }
}

/// The field exponent whose basis vector sits in coordinate `index`.
pub fn index_exponent(index: usize) -> F8 {
    assert!(index < OCT_DIM, "coordinate out of range");
    if index == 0 {
        F8::ZERO
    } else {
        F8::alpha_power(index as i64 - 1)
    }
}

/// The display symbol of coordinate `index`: `u`, `e0`, .., `e6`.
pub fn basis_symbol(index: usize) -> String {
    assert!(index < OCT_DIM, "coordinate out of range");
    if index == 0 {
        String::from("u")
    } else {
        alloc::format!("e{}", index - 1)
    }
}

/// Product of two basis vectors: `e^x e^y = sign * e^(x+y)` with
/// `sign = (-1)^phi(x,y)`.
pub fn basis_product(x: F8, y: F8) -> (i8, F8) {
    let sign = if x.phi(y) == 0 { 1 } else { -1 };
    (sign, x.add(y))
}

/// An octonion with exact complex-rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Octonion {
    coords: Vec<Scalar>,
}

impl Octonion {
    pub fn zero() -> Octonion {
        Octonion { coords: alloc::vec![Scalar::zero(); OCT_DIM] }
    }

    /// The basis vector `e^x`.
    pub fn unit(x: F8) -> Octonion {
        let mut o = Octonion::zero();
        o.coords[basis_index(x)] = Scalar::one();
        o
    }

    /// The multiplicative identity `u`.
    pub fn one() -> Octonion {
        Octonion::unit(F8::ZERO)
    }

    /// The imaginary unit `e_i = e^(a^i)` for `i` modulo 7.
    pub fn imaginary_unit(i: i64) -> Octonion {
        Octonion::unit(F8::alpha_power(i))
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Octonion {
        assert_eq!(coords.len(), OCT_DIM, "octonions have eight coordinates");
        Octonion { coords }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, index: usize) -> &Scalar {
        &self.coords[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Octonion) -> Octonion {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Octonion { coords }
    }

    pub fn sub(&self, other: &Octonion) -> Octonion {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Octonion { coords }
    }

    pub fn scale(&self, factor: &Scalar) -> Octonion {
        Octonion { coords: self.coords.iter().map(|c| c * factor).collect() }
    }

    pub fn neg(&self) -> Octonion {
        self.scale(&Scalar::from_integer(-1))
    }

    /// The octonion product, extended bilinearly from the basis law.
    pub fn multiply(&self, other: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let x = index_exponent(i);
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let y = index_exponent(j);
                let (sign, z) = basis_product(x, y);
                let k = basis_index(z);
                let mut term = a * b;
                if sign < 0 {
                    term = -&term;
                }
                out.coords[k] = &out.coords[k] + &term;
            }
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Octonion) -> Octonion {
        self.multiply(other).sub(&other.multiply(self))
    }

    /// The associator `[a, b, c] = (ab)c - a(bc)`, which measures the failure
    /// of associativity and is alternating in its three arguments.
    pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
        a.multiply(b).multiply(c).sub(&a.multiply(&b.multiply(c)))
    }

    /// The matrix of `ad_a = [a, -]` on the eight coordinates.
    pub fn ad_operator(&self) -> Operator {
        let mut m = Matrix::zero(OCT_DIM, OCT_DIM);
        for j in 0..OCT_DIM {
            let image = self.commutator(&Octonion::unit(index_exponent(j)));
            for i in 0..OCT_DIM {
                *m.at_mut(i, j) = image.coords[i].clone();
            }
        }
        m
    }

    /// The quadratic form: the sum of squared coordinates.  On octonions with
    /// rational coordinates it is multiplicative.
    pub fn norm(&self) -> Scalar {
        let mut n = Scalar::zero();
        for c in &self.coords {
            n = &n + &(c * c);
        }
        n
    }

    /// The coefficient of the unit `u`.
    pub fn real_part(&self) -> &Scalar {
        &self.coords[0]
    }

    /// The projection onto the span of the seven imaginary units.
    pub fn imaginary_part(&self) -> Octonion {
        let mut o = self.clone();
        o.coords[0] = Scalar::zero();
        o
    }

    /// True when the `u`-coordinate vanishes.
    pub fn is_imaginary(&self) -> bool {
        self.coords[0].is_zero()
    }

    /// Complex conjugation of all coordinates (the antilinear extension of
    /// the identity on the real basis).
    pub fn complex_conjugate(&self) -> Octonion {
        Octonion { coords: self.coords.iter().map(Scalar::conj).collect() }
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.coords)
    }

    pub fn from_sparse(v: &SparseVec) -> Octonion {
        assert_eq!(v.dim(), OCT_DIM, "octonions have eight coordinates");
        Octonion { coords: v.to_dense() }
    }

    /// Renders as a signed sum of scaled basis symbols, e.g. `i*e1 + e3`.
    pub fn render(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sym = basis_symbol(k);
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

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// An element of the order-21 symmetry group generated by the field squaring
/// map `Fr` and multiplication by the generator `M`.
///
/// On exponent indices the group acts by affine maps `i -> scale*i + shift`
/// modulo 7 with `scale` in `{1, 2, 4}`; this is the reduced normal form of
/// every word in the two generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GaloisSymmetry {
    scale: u8,
    shift: u8,
}

impl GaloisSymmetry {
    pub const IDENTITY: GaloisSymmetry = GaloisSymmetry { scale: 1, shift: 0 };
    /// The field squaring automorphism `x -> x^2`.
    pub const FROBENIUS: GaloisSymmetry = GaloisSymmetry { scale: 2, shift: 0 };
    /// Multiplication by the generator, `x -> a*x`.
    pub const MTWIST: GaloisSymmetry = GaloisSymmetry { scale: 1, shift: 1 };

    /// `self . other` (apply `other` first).
    pub fn compose(self, other: GaloisSymmetry) -> GaloisSymmetry {
        GaloisSymmetry {
            scale: (self.scale * other.scale) % 7,
            shift: (self.scale * other.shift + self.shift) % 7,
        }
    }

    pub fn inverse(self) -> GaloisSymmetry {
        // Inverses of 1, 2, 4 modulo 7 are 1, 4, 2.
        let scale_inv = match self.scale {
            1 => 1,
            2 => 4,
            4 => 2,
            _ => unreachable!("scale is a power of two modulo seven"),
        };
        GaloisSymmetry {
            scale: scale_inv,
            shift: (scale_inv * (7 - self.shift)) % 7,
        }
    }

    pub fn power(self, k: i64) -> GaloisSymmetry {
        let mut result = GaloisSymmetry::IDENTITY;
        let (base, reps) = if k < 0 { (self.inverse(), -k) } else { (self, k) };
        for _ in 0..reps {
            result = base.compose(result);
        }
        result
    }

    /// All 21 group elements in a fixed order.
    pub fn all() -> Vec<GaloisSymmetry> {
        let mut out = Vec::with_capacity(21);
        for &scale in &[1u8, 2, 4] {
            for shift in 0u8..7 {
                out.push(GaloisSymmetry { scale, shift });
            }
        }
        out
    }

    /// Image of the exponent index `i` (for `a^i`).
    pub fn apply_index(self, i: u8) -> u8 {
        (self.scale * (i % 7) + self.shift) % 7
    }

    /// Image of a field element: fixes zero, maps `a^i` to `a^(scale*i+shift)`.
    pub fn apply_f8(self, x: F8) -> F8 {
        match x.alpha_index() {
            Err(_) => F8::ZERO,
            Ok(i) => F8::alpha_power(self.apply_index(i) as i64),
        }
    }

    /// Image of an octonion under the induced algebra automorphism (permutes
    /// the basis vectors by the field action).
    pub fn apply_octonion(self, o: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (k, c) in o.coords().iter().enumerate() {
            if !c.is_zero() {
                out.coords[basis_index(self.apply_f8(index_exponent(k)))] = c.clone();
            }
        }
        out
    }

    /// The permutation of the eight coordinates induced on octonions.
    pub fn coordinate_permutation(self) -> [usize; OCT_DIM] {
        let mut perm = [0usize; OCT_DIM];
        for (k, slot) in perm.iter_mut().enumerate() {
            *slot = basis_index(self.apply_f8(index_exponent(k)));
        }
        perm
    }

    /// The 8x8 permutation operator of `apply_octonion`.
    pub fn operator(self) -> Operator {
        Matrix::permutation(&self.coordinate_permutation())
    }

    /// Conjugates an operator on octonion coordinates: `T -> g T g^-1`.
    pub fn conjugate_operator(self, op: &Operator) -> Operator {
        assert_eq!(op.dim(), OCT_DIM);
        self.operator().mul(op).mul(&self.inverse().operator())
    }
}

impl fmt::Display for GaloisSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Normal form M^shift . Fr^k with scale = 2^k.
        let fr_power = match self.scale {
            1 => 0,
            2 => 1,
            4 => 2,
            _ => unreachable!(),
        };
        match (self.shift, fr_power) {
            (0, 0) => write!(f, "id"),
            (0, k) => write!(f, "Fr^{}", k),
            (s, 0) => write!(f, "M^{}", s),
            (s, k) => write!(f, "M^{}.Fr^{}", s, k),
        }
    }
}

/// Complex conjugation transport of an operator: the matrix of
/// `conj . T . conj`, which is the entrywise conjugate of `T`.
pub fn conjugate_transport(op: &Operator) -> Operator {
    op.conj_entrywise()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn e(i: i64) -> Octonion {
        Octonion::imaginary_unit(i)
    }

    #[test]
    fn basis_indexing_distinguishes_unit_from_e0() {
        // Coordinate 0 is e^0 = u; coordinate 1 is e_0 = e^(a^0) = e^1.
        assert_eq!(basis_index(F8::ZERO), 0);
        assert_eq!(basis_index(F8::ONE), 1);
        assert_eq!(basis_index(F8::ALPHA), 2);
        assert_eq!(index_exponent(0), F8::ZERO);
        assert_eq!(index_exponent(1), F8::ONE);
        assert_eq!(basis_symbol(0), "u");
        assert_eq!(basis_symbol(1), "e0");
        assert_eq!(basis_symbol(7), "e6");
    }

    #[test]
    fn unit_is_a_two_sided_identity() {
        let u = Octonion::one();
        for &x in &F8::all() {
            let b = Octonion::unit(x);
            assert_eq!(u.multiply(&b), b);
            assert_eq!(b.multiply(&u), b);
        }
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for &x in &F8::nonzero() {
            let b = Octonion::unit(x);
            assert_eq!(b.multiply(&b), Octonion::one().neg());
        }
    }

    #[test]
    fn basis_product_examples() {
        // e1 * e3 = e0 (exponents a + a^3 = 1 = a^0, positive sign).
        let (sign, z) = basis_product(F8::ALPHA, F8::alpha_power(3));
        assert_eq!((sign, z), (1, F8::ONE));
        assert_eq!(e(1).multiply(&e(3)), e(0));
        // e1 * e2 = e4 and e2 * e1 = -e4.
        assert_eq!(e(1).multiply(&e(2)), e(4));
        assert_eq!(e(2).multiply(&e(1)), e(4).neg());
        // [e1, e3] = 2 e0.
        assert_eq!(e(1).commutator(&e(3)), e(0).scale(&Scalar::from_integer(2)));
    }

    #[test]
    fn products_respect_the_sign_law() {
        for &x in &F8::all() {
            for &y in &F8::all() {
                let (sign, z) = basis_product(x, y);
                let expected = Octonion::unit(z).scale(&Scalar::from_integer(sign as i64));
                assert_eq!(Octonion::unit(x).multiply(&Octonion::unit(y)), expected);
            }
        }
    }

    #[test]
    fn alternativity_associator_is_alternating() {
        // On basis triples, the associator changes sign under swapping any
        // two arguments (checked for adjacent swaps, which generate).
        for &x in &F8::all() {
            for &y in &F8::all() {
                for &z in &F8::all() {
                    let (a, b, c) = (Octonion::unit(x), Octonion::unit(y), Octonion::unit(z));
                    let abc = Octonion::associator(&a, &b, &c);
                    assert_eq!(Octonion::associator(&b, &a, &c), abc.neg());
                    assert_eq!(Octonion::associator(&a, &c, &b), abc.neg());
                }
            }
        }
    }

    #[test]
    fn galois_symmetries_are_automorphisms() {
        for g in [GaloisSymmetry::FROBENIUS, GaloisSymmetry::MTWIST] {
            for &x in &F8::all() {
                for &y in &F8::all() {
                    let lhs = g.apply_octonion(&Octonion::unit(x).multiply(&Octonion::unit(y)));
                    let rhs = g
                        .apply_octonion(&Octonion::unit(x))
                        .multiply(&g.apply_octonion(&Octonion::unit(y)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn galois_group_structure() {
        assert_eq!(GaloisSymmetry::all().len(), 21);
        let fr = GaloisSymmetry::FROBENIUS;
        let m = GaloisSymmetry::MTWIST;
        assert_eq!(fr.power(3), GaloisSymmetry::IDENTITY);
        assert_eq!(m.power(7), GaloisSymmetry::IDENTITY);
        // Fr M Fr^-1 = M^2.
        assert_eq!(fr.compose(m).compose(fr.inverse()), m.power(2));
        // Closure under composition and inverse stays inside the 21 listed.
        let all = GaloisSymmetry::all();
        for &g in &all {
            assert!(all.contains(&g.inverse()));
            assert_eq!(g.compose(g.inverse()), GaloisSymmetry::IDENTITY);
            for &h in &all {
                assert!(all.contains(&g.compose(h)));
            }
        }
    }

    #[test]
    fn galois_action_on_units() {
        // Fr doubles imaginary indices, M shifts them by one.
        assert_eq!(GaloisSymmetry::FROBENIUS.apply_octonion(&e(1)), e(2));
        assert_eq!(GaloisSymmetry::FROBENIUS.apply_octonion(&e(3)), e(6));
        assert_eq!(GaloisSymmetry::MTWIST.apply_octonion(&e(6)), e(0));
        // Both fix the unit u.
        assert_eq!(GaloisSymmetry::FROBENIUS.apply_octonion(&Octonion::one()), Octonion::one());
        assert_eq!(GaloisSymmetry::MTWIST.apply_octonion(&Octonion::one()), Octonion::one());
    }

    #[test]
    fn norm_is_multiplicative_on_rational_octonions() {
        let mut rng = SeededRng::fixed(0x0c70);
        for _ in 0..100 {
            let sample = |rng: &mut SeededRng| {
                Octonion::from_coords(
                    (0..OCT_DIM)
                        .map(|_| {
                            Scalar::ratio(rng.int_in(-6, 6), rng.int_in(1, 4)).unwrap()
                        })
                        .collect(),
                )
            };
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            assert_eq!(a.multiply(&b).norm(), &a.norm() * &b.norm());
        }
    }

    #[test]
    fn ad_of_bracket_doubles_the_associator_off_the_plane() {
        // ad_[e^x, e^y] e^z = 2 [e^x, e^y, e^z] whenever z is outside the
        // F2-span {0, x, y, x+y}.
        for &x in &F8::all() {
            for &y in &F8::all() {
                let bracket = Octonion::unit(x).commutator(&Octonion::unit(y));
                for &z in &F8::all() {
                    if z == F8::ZERO || z == x || z == y || z == x.add(y) {
                        continue;
                    }
                    let lhs = bracket.commutator(&Octonion::unit(z));
                    let assoc =
                        Octonion::associator(&Octonion::unit(x), &Octonion::unit(y), &Octonion::unit(z));
                    assert_eq!(lhs, assoc.scale(&Scalar::from_integer(2)));
                }
            }
        }
    }

    #[test]
    fn complex_conjugation_commutes_with_galois() {
        let v = e(1).scale(&Scalar::i()).add(&e(3));
        let fr = GaloisSymmetry::FROBENIUS;
        assert_eq!(
            fr.apply_octonion(&v.complex_conjugate()),
            fr.apply_octonion(&v).complex_conjugate()
        );
    }

    #[test]
    fn rendering_examples() {
        assert_eq!(Octonion::zero().render(), "0");
        assert_eq!(Octonion::one().render(), "u");
        let v = e(1).scale(&Scalar::i()).add(&e(3));
        assert_eq!(v.render(), "i*e1 + e3");
        assert_eq!(v.complex_conjugate().render(), "-i*e1 + e3");
        assert_eq!(e(0).neg().render(), "-e0");
    }
}
