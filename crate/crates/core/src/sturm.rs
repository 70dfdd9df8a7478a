//! Sturm sequences over the integers and exact real-root counting.
//!
//! The sequence is `p, p', -rem(p, p'), ...` computed with pseudo-remainders
//! and content removal. Each element is a positive multiple of the
//! corresponding classical Sturm polynomial, so sign variations are
//! unchanged while coefficients stay small.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};

use crate::poly::{IntPoly, Rational};

#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// # Panics
    /// If `p` is the zero polynomial.
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut seq = vec![p.primitive_part()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { seq };
        }
        seq.push(d.primitive_part());
        loop {
            let k = seq.len();
            let (prev, cur) = (&seq[k - 2], &seq[k - 1]);
            let delta = prev.degree().unwrap() - cur.degree().unwrap();
            let mut r = prev.pseudo_rem(cur);
            if r.is_zero() {
                break;
            }
            // prem = lc^(delta+1) * rem; undo a negative multiplier, then negate.
            let lead_negative = cur.leading().unwrap().sign() == Sign::Minus;
            if !(lead_negative && delta % 2 == 0) {
                r = -r;
            }
            seq.push(r.primitive_part());
        }
        SturmChain { seq }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.seq
    }

    /// The last element is `gcd(p, p')` up to a constant.
    pub fn is_squarefree(&self) -> bool {
        self.seq.last().unwrap().degree() == Some(0)
    }

    fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::count_variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::count_variations(self.seq.iter().map(|p| {
            let lead = sign_of(p.leading().unwrap());
            if p.degree().unwrap() % 2 == 1 {
                lead.reverse()
            } else {
                lead
            }
        }))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::count_variations(self.seq.iter().map(|p| sign_of(p.leading().unwrap())))
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(lo < hi);
        self.variations_at(lo)
            .saturating_sub(self.variations_at(hi))
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }
}

fn sign_of(c: &BigInt) -> Ordering {
    match c.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPoly, lo: &Rational, hi: &Rational) -> usize {
    SturmChain::new(p).count(lo, hi)
}

/// Cauchy bound `1 + max_{i<d} |a_i| / |a_d|`: every root has smaller
/// absolute value.
pub fn cauchy_bound(p: &IntPoly) -> Rational {
    let d = p.degree().expect("root bound of the zero polynomial");
    let lead = p.leading().unwrap().abs();
    let max = p.coeffs()[..d]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    Rational::one() + Rational::new(max, lead)
}
