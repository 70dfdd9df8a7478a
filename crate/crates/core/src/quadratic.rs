//! Exact arithmetic in Q[√3].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{Poly, Rational, Ring};

/// `rat + irr·√3` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadSqrt3 {
    pub rat: Rational,
    pub irr: Rational,
}

pub type Sqrt3Poly = Poly<QuadSqrt3>;

impl QuadSqrt3 {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        QuadSqrt3 { rat, irr }
    }

    pub fn from_ints(rat: i64, irr: i64) -> Self {
        QuadSqrt3::new(
            Rational::from_integer(rat.into()),
            Rational::from_integer(irr.into()),
        )
    }

    pub fn from_integer(rat: BigInt) -> Self {
        QuadSqrt3::new(Rational::from_integer(rat), Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// `rat² - 3·irr²`
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(3.into()) * &self.irr * &self.irr
    }

    pub fn conjugate(&self) -> Self {
        QuadSqrt3::new(self.rat.clone(), -self.irr.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadSqrt3::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Floating-point value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64().unwrap_or(f64::NAN) + self.irr.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

impl fmt::Display for QuadSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            write!(f, "{}", self.rat)
        } else {
            write!(f, "{} + {}√3", self.rat, self.irr)
        }
    }
}

impl Zero for QuadSqrt3 {
    fn zero() -> Self {
        QuadSqrt3::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QuadSqrt3 {
    fn one() -> Self {
        QuadSqrt3::new(Rational::one(), Rational::zero())
    }
}

impl Add for QuadSqrt3 {
    type Output = QuadSqrt3;
    fn add(mut self, rhs: QuadSqrt3) -> QuadSqrt3 {
        self += &rhs;
        self
    }
}

impl Sub for QuadSqrt3 {
    type Output = QuadSqrt3;
    fn sub(mut self, rhs: QuadSqrt3) -> QuadSqrt3 {
        self -= &rhs;
        self
    }
}

impl Mul for QuadSqrt3 {
    type Output = QuadSqrt3;
    fn mul(self, rhs: QuadSqrt3) -> QuadSqrt3 {
        self.mul_ref(&rhs)
    }
}

impl Neg for QuadSqrt3 {
    type Output = QuadSqrt3;
    fn neg(self) -> QuadSqrt3 {
        QuadSqrt3::new(-self.rat, -self.irr)
    }
}

impl AddAssign<&QuadSqrt3> for QuadSqrt3 {
    fn add_assign(&mut self, rhs: &QuadSqrt3) {
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl SubAssign<&QuadSqrt3> for QuadSqrt3 {
    fn sub_assign(&mut self, rhs: &QuadSqrt3) {
        self.rat -= &rhs.rat;
        self.irr -= &rhs.irr;
    }
}

impl Ring for QuadSqrt3 {
    // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
    fn mul_ref(&self, other: &Self) -> Self {
        let three = Rational::from_integer(3.into());
        QuadSqrt3::new(
            &self.rat * &other.rat + three * &self.irr * &other.irr,
            &self.rat * &other.irr + &self.irr * &other.rat,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_one_plus_root3() {
        let a = QuadSqrt3::from_ints(1, 1);
        let b = QuadSqrt3::from_ints(1, -1);
        assert_eq!(a.mul_ref(&b), QuadSqrt3::from_ints(-2, 0));
        assert_eq!(a.norm(), Rational::from_integer((-2).into()));
        assert_eq!(a.conjugate(), b);
    }

    #[test]
    fn square_and_identity() {
        let a = QuadSqrt3::from_ints(1, 1);
        assert_eq!(a.mul_ref(&a), QuadSqrt3::from_ints(4, 2));
        assert_eq!(a.pow(2), QuadSqrt3::from_ints(4, 2));
        assert_eq!(a.mul_ref(&QuadSqrt3::one()), a);
        assert_eq!(a.pow(0), QuadSqrt3::one());
    }

    #[test]
    fn polynomial_product_over_extension() {
        let p = Sqrt3Poly::new(vec![QuadSqrt3::from_ints(1, 1)]);
        let q = Sqrt3Poly::new(vec![QuadSqrt3::from_ints(1, -1)]);
        assert_eq!(&p * &q, Sqrt3Poly::constant(QuadSqrt3::from_ints(-2, 0)));
        // (1 + √3 z)(1 - √3 z) = 1 - 3z²
        let p = Sqrt3Poly::new(vec![QuadSqrt3::one(), QuadSqrt3::from_ints(0, 1)]);
        let q = Sqrt3Poly::new(vec![QuadSqrt3::one(), QuadSqrt3::from_ints(0, -1)]);
        assert_eq!(
            &p * &q,
            Sqrt3Poly::new(vec![
                QuadSqrt3::one(),
                QuadSqrt3::zero(),
                QuadSqrt3::from_ints(-3, 0)
            ])
        );
    }
}
