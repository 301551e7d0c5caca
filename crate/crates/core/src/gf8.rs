//! Arithmetic in the field with eight elements.
//!
//! Elements are stored as coefficient triples `(c0, c1, c2)` over the two-element
//! field, representing `c0 + c1*a + c2*a^2` for a fixed generator `a` subject to
//! `a^3 = a + 1`.  The nonzero elements form a cyclic group of order seven
//! generated by `a`; discrete-log and power tables are derived from the
//! coefficient representation at compile time.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Bit-packed powers of the generator: `ALPHA_POW[i]` encodes `a^i` with bit
/// `k` holding the coefficient of `a^k`.
const ALPHA_POW: [u8; 7] = build_alpha_pow();

/// Discrete logarithm base `a`: `ALPHA_LOG[bits]` is the exponent `i` with
/// `a^i` encoded by `bits` (unused slot 0 holds a sentinel).
const ALPHA_LOG: [u8; 8] = build_alpha_log();

const fn mul_bits(x: u8, y: u8) -> u8 {
    // Carry-less polynomial product followed by reduction with a^3 = a + 1.
    let mut prod: u8 = 0;
    let mut k = 0;
    while k < 3 {
        if (y >> k) & 1 == 1 {
            prod ^= x << k;
        }
        k += 1;
    }
    // Degrees 4 and 3 reduce in that order so the degree-3 bit produced by
    // reducing degree 4 is itself folded down.
    if (prod >> 4) & 1 == 1 {
        prod ^= (1 << 4) | (1 << 1) | (1 << 2);
    }
    if (prod >> 3) & 1 == 1 {
        prod ^= (1 << 3) | (1 << 0) | (1 << 1);
    }
    prod
}

const fn build_alpha_pow() -> [u8; 7] {
    let mut table = [0u8; 7];
    let mut value: u8 = 1;
    let mut i = 0;
    while i < 7 {
        table[i] = value;
        value = mul_bits(value, 0b010);
        i += 1;
    }
    table
}

const fn build_alpha_log() -> [u8; 8] {
    let mut table = [0xffu8; 8];
    let mut i = 0;
    while i < 7 {
        table[ALPHA_POW[i] as usize] = i as u8;
        i += 1;
    }
    table
}

/// An element of the field with eight elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct F8(u8);

impl F8 {
    /// The additive identity.
    pub const ZERO: F8 = F8(0);
    /// The multiplicative identity.
    pub const ONE: F8 = F8(1);
    /// The chosen generator `a` of the multiplicative group.
    pub const ALPHA: F8 = F8(0b010);

    /// Builds an element from its three coefficients `(c0, c1, c2)`, each 0 or 1.
    pub fn from_coefficients(c0: u8, c1: u8, c2: u8) -> F8 {
        assert!(c0 < 2 && c1 < 2 && c2 < 2, "coefficients must be 0 or 1");
        F8(c0 | c1 << 1 | c2 << 2)
    }

    /// The coefficients `(c0, c1, c2)` of `1, a, a^2`.
    pub fn coefficients(self) -> (u8, u8, u8) {
        (self.0 & 1, (self.0 >> 1) & 1, (self.0 >> 2) & 1)
    }

    /// `a^i` for `0 <= i`, reduced modulo the group order 7.
    pub fn alpha_power(i: i64) -> F8 {
        F8(ALPHA_POW[i.rem_euclid(7) as usize])
    }

    /// All eight field elements, zero first, then `a^0 .. a^6`.
    pub fn all() -> [F8; 8] {
        let mut out = [F8::ZERO; 8];
        let mut i = 0;
        while i < 7 {
            out[i + 1] = F8(ALPHA_POW[i]);
            i += 1;
        }
        out
    }

    /// The seven nonzero elements in exponent order `a^0 .. a^6`.
    pub fn nonzero() -> [F8; 7] {
        let mut out = [F8::ONE; 7];
        let mut i = 0;
        while i < 7 {
            out[i] = F8(ALPHA_POW[i]);
            i += 1;
        }
        out
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: F8) -> F8 {
        F8(self.0 ^ other.0)
    }

    pub fn mul(self, other: F8) -> F8 {
        if self.0 == 0 || other.0 == 0 {
            return F8::ZERO;
        }
        let i = ALPHA_LOG[self.0 as usize] as i64;
        let j = ALPHA_LOG[other.0 as usize] as i64;
        F8::alpha_power(i + j)
    }

    /// `self^k`; negative exponents invert, so they are rejected for zero.
    pub fn power(self, k: i64) -> Result<F8, F8Error> {
        if self.0 == 0 {
            if k < 0 {
                return Err(F8Error::ZeroToNegativePower);
            }
            return Ok(if k == 0 { F8::ONE } else { F8::ZERO });
        }
        let i = ALPHA_LOG[self.0 as usize] as i64;
        Ok(F8::alpha_power(i * k))
    }

    /// The discrete logarithm base `a`; zero has none.
    pub fn alpha_index(self) -> Result<u8, F8Error> {
        if self.0 == 0 {
            return Err(F8Error::LogOfZero);
        }
        Ok(ALPHA_LOG[self.0 as usize])
    }

    /// Absolute trace to the two-element field: `x + x^2 + x^4`, read off the
    /// low bit of the (always constant-polynomial) result.
    pub fn trace(self) -> u8 {
        let x2 = self.mul(self);
        let x4 = x2.mul(x2);
        let t = self.add(x2).add(x4);
        debug_assert!(t == F8::ZERO || t == F8::ONE);
        t.0 & 1
    }

    /// The bilinear-exponent pairing `phi(x, y) = trace(y * x^6)` used in the
    /// octonion multiplication law.
    pub fn phi(self, y: F8) -> u8 {
        let x6 = self.power(6).expect("non-negative power");
        y.mul(x6).trace()
    }

    /// The field squaring automorphism `x -> x^2`.
    pub fn frobenius(self) -> F8 {
        self.mul(self)
    }

    /// Multiplication by the generator, `x -> a*x`.
    pub fn mtwist(self) -> F8 {
        self.mul(F8::ALPHA)
    }
}

impl fmt::Display for F8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "0");
        }
        match ALPHA_LOG[self.0 as usize] {
            0 => write!(f, "1"),
            1 => write!(f, "a"),
            i => write!(f, "a^{}", i),
        }
    }
}

/// Errors for the few partial operations on field elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum F8Error {
    /// A negative power of zero was requested.
    ZeroToNegativePower,
    /// The discrete logarithm of zero was requested.
    LogOfZero,
}

impl fmt::Display for F8Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            F8Error::ZeroToNegativePower => write!(f, "zero has no negative powers"),
            F8Error::LogOfZero => write!(f, "zero is not a power of the generator"),
        }
    }
}

/// Composes the permutations of the field induced by `frobenius` and `mtwist`
/// until closed, returning every distinct permutation reached (as images of
/// the eight elements in `F8::all()` order).
pub fn frobenius_mtwist_closure() -> Vec<[F8; 8]> {
    let elements = F8::all();
    let perm_of = |f: &dyn Fn(F8) -> F8| -> [F8; 8] {
        let mut out = [F8::ZERO; 8];
        for (k, &x) in elements.iter().enumerate() {
            out[k] = f(x);
        }
        out
    };
    let identity = perm_of(&|x| x);
    let generators = [perm_of(&F8::frobenius), perm_of(&F8::mtwist)];
    let compose = |p: &[F8; 8], q: &[F8; 8]| -> [F8; 8] {
        // (p . q)(x) = p(q(x)); positions are indices into `elements`.
        let index = |x: F8| elements.iter().position(|&e| e == x).unwrap();
        let mut out = [F8::ZERO; 8];
        for k in 0..8 {
            out[k] = p[index(q[k])];
        }
        out
    };
    let mut seen: Vec<[F8; 8]> = alloc::vec![identity];
    let mut frontier = seen.clone();
    while let Some(p) = frontier.pop() {
        for g in &generators {
            let next = compose(g, &p);
            if !seen.contains(&next) {
                seen.push(next);
                frontier.push(next);
            }
        }
    }
    seen.sort();
    seen
}

/// Renders a field element for tables and reports.
pub fn render(x: F8) -> String {
    alloc::format!("{}", x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_satisfies_defining_relation() {
        // a^3 = a + 1
        let a = F8::ALPHA;
        assert_eq!(a.power(3).unwrap(), a.add(F8::ONE));
        // The group order is seven.
        assert_eq!(a.power(7).unwrap(), F8::ONE);
        for k in 1..7 {
            assert_ne!(a.power(k).unwrap(), F8::ONE);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        let all = F8::all();
        for &x in &all {
            assert_eq!(x.add(F8::ZERO), x);
            assert_eq!(x.mul(F8::ONE), x);
            assert_eq!(x.add(x), F8::ZERO, "characteristic two");
            for &y in &all {
                assert_eq!(x.add(y), y.add(x));
                assert_eq!(x.mul(y), y.mul(x));
                for &z in &all {
                    assert_eq!(x.add(y).add(z), x.add(y.add(z)));
                    assert_eq!(x.mul(y).mul(z), x.mul(y.mul(z)));
                    assert_eq!(x.mul(y.add(z)), x.mul(y).add(x.mul(z)));
                }
            }
            if !x.is_zero() {
                let inv = x.power(-1).unwrap();
                assert_eq!(x.mul(inv), F8::ONE);
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let a = F8::ALPHA;
        // a * a^2 = a^3 = 1 + a
        assert_eq!(
            a.mul(a.power(2).unwrap()),
            F8::from_coefficients(1, 1, 0)
        );
        // a^3 * a^4 = 1
        assert_eq!(
            a.power(3).unwrap().mul(a.power(4).unwrap()),
            F8::ONE
        );
    }

    #[test]
    fn power_edge_cases() {
        assert_eq!(F8::ZERO.power(0).unwrap(), F8::ONE);
        assert_eq!(F8::ZERO.power(5).unwrap(), F8::ZERO);
        assert_eq!(F8::ZERO.power(-1), Err(F8Error::ZeroToNegativePower));
        let a5 = F8::alpha_power(5);
        assert_eq!(a5.power(-1).unwrap(), F8::alpha_power(2));
        assert_eq!(F8::alpha_power(-1), F8::alpha_power(6));
    }

    #[test]
    fn trace_values() {
        assert_eq!(F8::ZERO.trace(), 0);
        assert_eq!(F8::ONE.trace(), 1);
        // Kernel of the trace: {0, a, a^2, a^4}.
        let kernel: Vec<F8> = F8::all().iter().copied().filter(|x| x.trace() == 0).collect();
        assert_eq!(
            kernel,
            alloc::vec![
                F8::ZERO,
                F8::ALPHA,
                F8::alpha_power(2),
                F8::alpha_power(4)
            ]
        );
        // The trace is onto: both values occur.
        assert!(F8::all().iter().any(|x| x.trace() == 1));
    }

    #[test]
    fn pairing_examples() {
        let a = F8::ALPHA;
        assert_eq!(a.phi(a.power(3).unwrap()), 0);
        for &x in &F8::nonzero() {
            assert_eq!(x.phi(x), 1, "phi(x, x) = trace(x^7) = trace(1)");
        }
        assert_eq!(F8::ZERO.phi(F8::ONE), 0);
        assert_eq!(F8::ONE.phi(F8::ZERO), 0);
    }

    #[test]
    fn pairing_invariant_under_symmetries() {
        for &x in &F8::all() {
            for &y in &F8::all() {
                let expected = x.phi(y);
                assert_eq!(x.frobenius().phi(y.frobenius()), expected);
                assert_eq!(x.mtwist().phi(y.mtwist()), expected);
            }
        }
    }

    #[test]
    fn frobenius_and_mtwist_orders() {
        for &x in &F8::all() {
            assert_eq!(x.frobenius().frobenius().frobenius(), x);
            let mut y = x;
            for _ in 0..7 {
                y = y.mtwist();
            }
            assert_eq!(y, x);
            // Conjugation relation: Fr . M . Fr^-1 = M^2, with Fr^-1 = Fr . Fr.
            assert_eq!(
                x.frobenius().frobenius().mtwist().frobenius(),
                x.mtwist().mtwist()
            );
        }
    }

    #[test]
    fn symmetry_group_has_order_21() {
        assert_eq!(frobenius_mtwist_closure().len(), 21);
    }

    #[test]
    fn discrete_log_examples() {
        // a^2 + a = a^4
        let x = F8::alpha_power(2).add(F8::ALPHA);
        assert_eq!(x.alpha_index().unwrap(), 4);
        assert_eq!(F8::ZERO.alpha_index(), Err(F8Error::LogOfZero));
        for i in 0..7 {
            assert_eq!(F8::alpha_power(i).alpha_index().unwrap() as i64, i);
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(render(F8::ZERO), "0");
        assert_eq!(render(F8::ONE), "1");
        assert_eq!(render(F8::ALPHA), "a");
        assert_eq!(render(F8::alpha_power(6)), "a^6");
    }
}
