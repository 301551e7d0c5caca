//! Exact scalars: Gaussian rationals `re + im*i` with arbitrary-precision
//! rational components.
//!
//! Every component is kept reduced with a positive denominator (the underlying
//! rational type maintains that canonical form), so equality is plain
//! componentwise comparison and no floating point appears anywhere.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact Gaussian rational scalar.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Scalar {
        Scalar { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Scalar {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_integer(n: i64) -> Scalar {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// The real rational `num/den`; rejects a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Result<Scalar, ScalarError> {
        if den == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        })
    }

    /// `(re_num/re_den) + (im_num/im_den) i`; rejects zero denominators.
    pub fn gaussian(
        re_num: i64,
        re_den: i64,
        im_num: i64,
        im_den: i64,
    ) -> Result<Scalar, ScalarError> {
        if re_den == 0 || im_den == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Scalar {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        })
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Scalar {
        Scalar { re, im }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the value is a rational with no imaginary part.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The value as a plain integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    /// Complex conjugate `re - im*i`.
    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re^2 + im^2`, a non-negative rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; zero has none.
    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Exact division; rejects a zero divisor.
    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inverse()?)
    }

    /// Renders the scalar in a compact human form such as `0`, `-1/2`, `i`,
    /// `2i/3`, or `1/2-i/2`.
    pub fn render(&self) -> String {
        fn rational(r: &BigRational) -> String {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                alloc::format!("{}/{}", r.numer(), r.denom())
            }
        }
        fn imaginary(r: &BigRational) -> String {
            let numer = r.numer();
            let body = if numer.abs().is_one() {
                String::from("i")
            } else {
                alloc::format!("{}i", numer.abs())
            };
            let sign = if numer.is_negative() { "-" } else { "" };
            if r.denom().is_one() {
                alloc::format!("{}{}", sign, body)
            } else {
                alloc::format!("{}{}/{}", sign, body, r.denom())
            }
        }
        if self.is_zero() {
            return String::from("0");
        }
        if self.im.is_zero() {
            return rational(&self.re);
        }
        if self.re.is_zero() {
            return imaginary(&self.im);
        }
        let im = imaginary(&self.im);
        if self.im.is_negative() {
            alloc::format!("{}{}", rational(&self.re), im)
        } else {
            alloc::format!("{}+{}", rational(&self.re), im)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Errors from partial scalar operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarError {
    DivisionByZero,
    ZeroDenominator,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        Scalar { re: &self.re + &other.re, im: &self.im + &other.im }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        Scalar { re: &self.re - &other.re, im: &self.im - &other.im }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, other: &Scalar) -> Scalar {
        self.checked_div(other).expect("scalar division by zero")
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, other: Scalar) -> Scalar {
                (&self).$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
