//! Partitioned genus distributions of iterated claws.
//!
//! `A_n`, `B_n`, `C_n` count embeddings of `Y_n` by genus, split by how many
//! distinct face-boundary walks meet the root: three, two, or one walk
//! passing the root three times. Each newclaw surgery acts linearly on the
//! triple through the production matrix
//!
//! ```text
//!        [ 0     2    8  ]
//! M(z) = [ 12z   12z  0  ]
//!        [ 4z²   2z   8z ]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgdVector {
    pub n: usize,
    pub a: IntPoly,
    pub b: IntPoly,
    pub c: IntPoly,
}

impl PgdVector {
    /// `V(Y_0) = (2, 0, 2z)`: the dipole has two planar embeddings with three
    /// root faces and two toroidal ones with a single face.
    pub fn initial() -> Self {
        PgdVector {
            n: 0,
            a: IntPoly::from_i64s(&[2]),
            b: IntPoly::zero(),
            c: IntPoly::from_i64s(&[0, 2]),
        }
    }

    /// Apply one newclaw surgery:
    /// `A' = 2B + 8C`, `B' = 12z(A + B)`, `C' = 4z²A + 2zB + 8zC`.
    pub fn step(&self) -> Self {
        let two = BigInt::from(2);
        let a = &self.b.scale(&two) + &self.c.scale(&BigInt::from(8));
        let b = (&self.a + &self.b).scale(&BigInt::from(12)).shift(1);
        let c = &(&self.a.scale(&BigInt::from(4)).shift(1) + &self.b.scale(&two))
            + &self.c.scale(&BigInt::from(8));
        PgdVector {
            n: self.n + 1,
            a,
            b,
            c: c.shift(1),
        }
    }

    /// The genus polynomial `A + B + C`.
    pub fn total(&self) -> IntPoly {
        &(&self.a + &self.b) + &self.c
    }

    pub fn components(&self) -> [&IntPoly; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Checks nonnegativity, the total count `2^(4n+2)`, the zero constant
    /// term of `B` for `n >= 1`, and the support of the total.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n;
        for (name, part) in ["A", "B", "C"].iter().zip(self.components()) {
            if !part.all_nonnegative() {
                return Err(Error::Structural {
                    n,
                    detail: format!("negative coefficient in {name}"),
                });
            }
        }
        if n >= 1 && !self.b.coeff(0).is_zero() {
            return Err(Error::Structural {
                n,
                detail: "B has a nonzero constant term".into(),
            });
        }
        let total = self.total();
        let count: BigInt = total.coeffs().iter().sum();
        if count != rotation_system_count(n) {
            return Err(Error::Consistency {
                n,
                detail: format!("total {count} != 2^{}", 4 * n + 2),
            });
        }
        let (lo, hi) = (total.valuation(), total.degree());
        if lo != Some(n.div_ceil(2)) || hi != Some(n + 1) {
            return Err(Error::Structural {
                n,
                detail: format!(
                    "support {lo:?}..{hi:?}, expected {}..{}",
                    n.div_ceil(2),
                    n + 1
                ),
            });
        }
        Ok(())
    }
}

/// Number of rotation systems of `Y_n`: `2^(4n+2)`, one bit per 3-valent vertex.
pub fn rotation_system_count(n: usize) -> BigInt {
    BigInt::one() << (4 * n + 2)
}

/// The 3×3 polynomial matrix `M(z)` acting on column vectors `(A, B, C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductionMatrix {
    entries: [[IntPoly; 3]; 3],
}

impl Default for ProductionMatrix {
    fn default() -> Self {
        let p = IntPoly::from_i64s;
        ProductionMatrix {
            entries: [
                [p(&[]), p(&[2]), p(&[8])],
                [p(&[0, 12]), p(&[0, 12]), p(&[])],
                [p(&[0, 0, 4]), p(&[0, 2]), p(&[0, 8])],
            ],
        }
    }
}

impl ProductionMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &IntPoly {
        &self.entries[row][col]
    }

    /// `M · v`
    pub fn apply(&self, v: &[IntPoly; 3]) -> [IntPoly; 3] {
        std::array::from_fn(|row| {
            self.entries[row]
                .iter()
                .zip(v)
                .fold(IntPoly::zero(), |acc, (m, x)| &acc + &(m * x))
        })
    }
}

/// `V(Y_n) = M^n V(Y_0)`, by repeated newclaw steps.
pub fn pgd(n: usize) -> PgdVector {
    (0..n).fold(PgdVector::initial(), |v, _| v.step())
}

/// `pgd(0) ..= pgd(max_n)`.
pub fn pgd_series(max_n: usize) -> Vec<PgdVector> {
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(PgdVector::initial());
    for _ in 0..max_n {
        let next = out.last().unwrap().step();
        out.push(next);
    }
    out
}

/// Third-column sums `r_k = (1,1,1) M^k (0,0,1)ᵀ` for `k = 0 ..= max_n`.
///
/// `(0,0,1)ᵀ` is `4·V(Y_{-1})`, so `r_k = 4·Γ_{Y_{k-1}}` for `k >= 1`.
pub fn column_sums(max_n: usize) -> Vec<IntPoly> {
    let m = ProductionMatrix::default();
    let mut v = [IntPoly::zero(), IntPoly::zero(), IntPoly::one()];
    let mut out = Vec::with_capacity(max_n + 1);
    for k in 0..=max_n {
        out.push(&(&v[0] + &v[1]) + &v[2]);
        if k < max_n {
            v = m.apply(&v);
        }
    }
    out
}

/// The third-column sum of `M^n`, checked against `4·Γ_{Y_{n-1}}` from the
/// pgd route.
pub fn column_sum_check(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "column sum check needs n >= 1".into(),
        ));
    }
    let r = column_sums(n).pop().unwrap();
    let expected = pgd(n - 1).total().scale(&BigInt::from(4));
    if r != expected {
        let index = first_difference(&r, &expected);
        return Err(Error::Consistency {
            n,
            detail: format!(
                "third-column sum differs from 4·Γ_{{Y_{}}} at z^{index}",
                n - 1
            ),
        });
    }
    Ok(r)
}

/// First coefficient index where two polynomials differ.
pub fn first_difference(p: &IntPoly, q: &IntPoly) -> usize {
    let len = p.coeffs().len().max(q.coeffs().len());
    (0..len).find(|&i| p.coeff(i) != q.coeff(i)).unwrap_or(len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn initial_vector() {
        let v = PgdVector::initial();
        assert_eq!(
            (v.a.clone(), v.b.clone(), v.c.clone()),
            (p(&[2]), p(&[]), p(&[0, 2]))
        );
        assert_eq!(v.total(), p(&[2, 2]));
        v.check_invariants().unwrap();
    }

    #[test]
    fn one_step_from_dipole() {
        let v = PgdVector::initial().step();
        assert_eq!(v.n, 1);
        assert_eq!(v.a, p(&[0, 16]));
        assert_eq!(v.b, p(&[0, 24]));
        assert_eq!(v.c, p(&[0, 0, 24]));
        assert_eq!(v.total(), p(&[0, 40, 24]));
    }

    #[test]
    fn step_is_linear() {
        let zero = PgdVector {
            n: 3,
            a: IntPoly::zero(),
            b: IntPoly::zero(),
            c: IntPoly::zero(),
        };
        let s = zero.step();
        assert!(s.a.is_zero() && s.b.is_zero() && s.c.is_zero());
    }

    #[test]
    fn step_matches_matrix_product() {
        let m = ProductionMatrix::default();
        let mut v = PgdVector::initial();
        for _ in 0..6 {
            let next = v.step();
            let via_matrix = m.apply(&[v.a.clone(), v.b.clone(), v.c.clone()]);
            assert_eq!([next.a.clone(), next.b.clone(), next.c.clone()], via_matrix);
            v = next;
        }
    }

    #[test]
    fn table_rows() {
        assert_eq!(pgd(2).total(), p(&[0, 48, 720, 256]));
        assert_eq!(pgd(3).total(), p(&[0, 0, 1920, 11648, 2816]));
        assert_eq!(pgd(4).total(), p(&[0, 0, 1152, 52608, 177664, 30720]));
        let count: BigInt = pgd(4).total().coeffs().iter().sum();
        assert_eq!(count, BigInt::from(262144));
    }

    #[test]
    fn series_invariants() {
        for v in pgd_series(40) {
            v.check_invariants().unwrap();
        }
    }

    #[test]
    fn column_sum_examples() {
        assert_eq!(column_sum_check(1).unwrap(), p(&[8, 8]));
        assert_eq!(column_sum_check(2).unwrap(), p(&[0, 160, 96]));
        let r5 = column_sum_check(5).unwrap();
        assert_eq!(
            r5,
            p(&[0, 0, 1152, 52608, 177664, 30720]).scale(&BigInt::from(4))
        );
        assert!(column_sum_check(0).is_err());
        assert_eq!(column_sums(0), vec![IntPoly::one()]);
    }
}
