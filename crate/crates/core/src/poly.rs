//! Dense univariate polynomials over exact coefficient rings.
//!
//! Coefficients are stored lowest degree first and the vector never ends in
//! a zero, so the zero polynomial is the empty vector and structural
//! equality is polynomial equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Coefficient ring for [`Poly`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<Rational>;

impl<T: Ring> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact division by `z^k`. Returns `None` if any coefficient below
    /// `z^k` is nonzero.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn add_into(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Self::new(coeffs)
    }

    fn sub_into(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, T::zero());
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Self::new(coeffs)
    }

    fn mul_into(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &a.mul_ref(b);
            }
        }
        Self::new(coeffs)
    }
}

impl<T: Ring> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        self.add_into(rhs)
    }
}

impl<T: Ring> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self.sub_into(rhs)
    }
}

impl<T: Ring> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        self.mul_into(rhs)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<T: Ring> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Ring> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Ring> $tr<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at `x`, computed from the homogenized integer form
    /// `den^deg * p(num/den)` so no rational is ever built.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let mut coeffs = self.coeffs.iter().rev();
        let Some(lead) = coeffs.next() else {
            return Ordering::Equal;
        };
        let mut acc = lead.clone();
        let mut den_pow = BigInt::one();
        for c in coeffs {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        acc.sign_ordering()
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    ///
    /// # Panics
    /// If `d` is zero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lead = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        // One pop per degree step, so lead is applied exactly deg - dd + 1 times.
        while r.len() > dd {
            let top = r.pop().unwrap();
            // r <- lead * r - top * z^k * d; the popped slot is the cancelled top
            let k = r.len() - dd;
            for c in r.iter_mut() {
                *c *= lead;
            }
            if !top.is_zero() {
                for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                    r[k + j] -= &top * dc;
                }
            }
        }
        Self::new(r)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != Sign::Minus)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        match self.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn add_cancels_and_renormalizes() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!((&p(&[1, 1]) + &p(&[1, -1])).degree(), Some(0));
        assert_eq!(&p(&[0, 3]) - &p(&[0, 3]), IntPoly::zero());
        assert_eq!(&p(&[5, 7]) + &IntPoly::zero(), p(&[5, 7]));
        assert_eq!(&p(&[2, 2]) + &p(&[0, 40, 24]), p(&[2, 42, 24]));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::new(vec![BigInt::zero(); 4]).degree(), None);
        assert_eq!(IntPoly::zero().valuation(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        let w = p(&[3, 45, 16]);
        assert_eq!(&w * &p(&[16]), p(&[48, 720, 256]));
        assert_eq!(&p(&[0, 0, 0, 1]) * &w, w.shift(3));
        assert_eq!(&w * &IntPoly::zero(), IntPoly::zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[2, 2]).eval_rational(&q(1, 1)), q(4, 1));
        assert_eq!(p(&[2, 2]).eval_rational(&q(-1, 1)), q(0, 1));
        assert_eq!(p(&[0, 48, 720, 256]).eval_rational(&q(1, 1)), q(1024, 1));
        assert_eq!(p(&[2, 2]).eval_rational(&q(-5, 3)), q(-4, 3));
    }

    #[test]
    fn sign_at_matches_eval() {
        let w = p(&[3, 45, 16]);
        for (n, d) in [(-3, 1), (-1, 1), (-1, 10), (-1, 20), (0, 1), (7, 5)] {
            let x = q(n, d);
            assert_eq!(w.sign_at(&x), w.eval_rational(&x).cmp(&Rational::zero()));
        }
        assert_eq!(IntPoly::zero().sign_at(&q(3, 2)), Ordering::Equal);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[2, 2]).derivative(), p(&[2]));
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert_eq!(p(&[3, 45, 16]).derivative(), p(&[45, 32]));
        assert_eq!(p(&[9]).derivative(), IntPoly::zero());
    }

    #[test]
    fn unshift_rejects_low_terms() {
        assert_eq!(p(&[0, 0, 5, 1]).unshift(2), Some(p(&[5, 1])));
        assert_eq!(p(&[0, 1, 5]).unshift(2), None);
    }

    #[test]
    fn pseudo_rem_matches_rational_division() {
        // (z^3 + 2z + 5) mod (3z^2 - 1) over Q is (7/3)z + 5; lc^2 = 9.
        let a = p(&[5, 2, 0, 1]);
        let b = p(&[-1, 0, 3]);
        assert_eq!(a.pseudo_rem(&b), p(&[45, 21]));
        // divisible case
        let prod = &p(&[1, 1]) * &b;
        assert!(prod.pseudo_rem(&b).is_zero());
    }

    #[test]
    fn content_and_primitive_part() {
        let w = p(&[48, 720, -256]);
        assert_eq!(w.content(), BigInt::from(16));
        assert_eq!(w.primitive_part(), p(&[3, 45, -16]));
    }
}
