//! Genus polynomials `Γ_{Y_n}(z)` by the three non-matrix routes, and the
//! structural facts they satisfy.
//!
//! * [`gamma_series`]: the three-term recurrence
//!   `Γ_n = 20z Γ_{n-1} + 8z(3-8z) Γ_{n-2} - 384z³ Γ_{n-3}`.
//! * [`gf_series`]: coefficients `r_n` of the bivariate generating function
//!   `(1 + (8-12z)t - 24zt²) / (1 - 20zt + 8z(8z-3)t² + 384z³t³)`, with
//!   `r_{n+1} = 4 Γ_n`.
//! * [`explicit_gamma`]: the closed form over Q[√3] built from [`h_poly`].

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pgd::rotation_system_count;
use crate::poly::{IntPoly, Rational};
use crate::quadratic::{QuadSqrt3, Sqrt3Poly};

/// `Γ_{Y_n}` together with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusPolynomial {
    pub n: usize,
    pub poly: IntPoly,
}

impl GenusPolynomial {
    /// Minimum genus `⌊(n+1)/2⌋`.
    pub fn min_genus(n: usize) -> usize {
        n.div_ceil(2)
    }

    /// Maximum genus `n + 1`.
    pub fn max_genus(n: usize) -> usize {
        n + 1
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.poly.coeff(i)
    }

    /// Exact support `[⌊(n+1)/2⌋, n+1]`, strictly positive inside, and
    /// total `2^(4n+2)`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let (lo, hi) = (Self::min_genus(n), Self::max_genus(n));
        if self.poly.degree() != Some(hi) {
            return Err(Error::Structural {
                n,
                detail: format!("degree {:?}, expected {hi}", self.poly.degree()),
            });
        }
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            let inside = (lo..=hi).contains(&i);
            if inside != c.is_positive() {
                return Err(Error::Structural {
                    n,
                    detail: format!("coefficient g_{{{n},{i}}} = {c} outside the support pattern"),
                });
            }
        }
        let total: BigInt = self.poly.coeffs().iter().sum();
        if total != rotation_system_count(n) {
            return Err(Error::Consistency {
                n,
                detail: format!("Γ(1) = {total}, expected 2^{}", 4 * n + 2),
            });
        }
        Ok(())
    }
}

/// Rows `n = 0, 1, 2` of the genus table, the seeds of the recurrence.
pub fn seed(n: usize) -> Option<IntPoly> {
    let row: &[i64] = match n {
        0 => &[2, 2],
        1 => &[0, 40, 24],
        2 => &[0, 48, 720, 256],
        _ => return None,
    };
    Some(IntPoly::from_i64s(row))
}

/// Shared third-order step `x_n = 20z x_{n-1} + 8z(3-8z) x_{n-2} - 384z³ x_{n-3}`.
fn third_order_step(x1: &IntPoly, x2: &IntPoly, x3: &IntPoly) -> IntPoly {
    let t1 = x1.scale(&BigInt::from(20)).shift(1);
    let t2 = &(x2 * &IntPoly::from_i64s(&[24, -64])).shift(1);
    let t3 = x3.scale(&BigInt::from(384)).shift(3);
    &(&t1 + t2) - &t3
}

/// `Γ_{Y_0} ..= Γ_{Y_max_n}` by the three-term recurrence.
pub fn gamma_series(max_n: usize) -> Result<Vec<GenusPolynomial>> {
    let mut out: Vec<GenusPolynomial> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let poly = match seed(n) {
            Some(p) => p,
            None => third_order_step(&out[n - 1].poly, &out[n - 2].poly, &out[n - 3].poly),
        };
        if let Some(i) = poly.coeffs().iter().position(|c| c.is_negative()) {
            return Err(Error::Structural {
                n,
                detail: format!("recurrence produced negative coefficient at z^{i}"),
            });
        }
        out.push(GenusPolynomial { n, poly });
    }
    Ok(out)
}

pub fn gamma_recurrence(n: usize) -> Result<GenusPolynomial> {
    Ok(gamma_series(n)?.pop().unwrap())
}

/// `r_0 ..= r_max_n`, the power-series coefficients in `t` of the
/// generating function, from `r_0 = 1`, `r_1 = 8+8z`, `r_2 = 160z+96z²`.
pub fn gf_series(max_n: usize) -> Vec<IntPoly> {
    let seeds = [
        IntPoly::one(),
        IntPoly::from_i64s(&[8, 8]),
        IntPoly::from_i64s(&[0, 160, 96]),
    ];
    let mut out: Vec<IntPoly> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let r = match seeds.get(n) {
            Some(s) => s.clone(),
            None => third_order_step(&out[n - 1], &out[n - 2], &out[n - 3]),
        };
        out.push(r);
    }
    out
}

/// `Γ_{Y_n} = r_{n+1} / 4` for `n = 0 ..= max_n`.
pub fn gamma_from_gf(max_n: usize) -> Result<Vec<GenusPolynomial>> {
    let four = BigInt::from(4);
    gf_series(max_n + 1)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, r)| {
            let n = k - 1;
            let mut coeffs = Vec::with_capacity(r.coeffs().len());
            for (i, c) in r.coeffs().iter().enumerate() {
                if !(c % &four).is_zero() {
                    return Err(Error::Consistency {
                        n,
                        detail: format!("r_{k} coefficient z^{i} not divisible by 4"),
                    });
                }
                coeffs.push(c / &four);
            }
            Ok(GenusPolynomial {
                n,
                poly: IntPoly::new(coeffs),
            })
        })
        .collect()
}

/// Denominator `1 - 20zt + 8z(8z-3)t² + 384z³t³`, coefficients in `t`.
pub fn gf_denominator() -> [IntPoly; 4] {
    [
        IntPoly::one(),
        IntPoly::from_i64s(&[0, -20]),
        IntPoly::from_i64s(&[0, -24, 64]),
        IntPoly::from_i64s(&[0, 0, 0, 384]),
    ]
}

/// Numerator `1 + (8-12z)t - 24zt²`, coefficients in `t`.
pub fn gf_numerator() -> [IntPoly; 3] {
    [
        IntPoly::one(),
        IntPoly::from_i64s(&[8, -12]),
        IntPoly::from_i64s(&[0, -24]),
    ]
}

/// Multiplies the closed-form denominator against `Σ r_n tⁿ` and checks the
/// product equals the closed-form numerator through `t^(len-1)`.
///
/// Returns the first power of `t` where they differ.
pub fn verify_gf_closed_form(series: &[IntPoly]) -> std::result::Result<(), usize> {
    let den = gf_denominator();
    let num = gf_numerator();
    for k in 0..series.len() {
        let mut acc = IntPoly::zero();
        for (m, d) in den.iter().enumerate() {
            if m <= k {
                acc = &acc + &(d * &series[k - m]);
            }
        }
        let expected = num.get(k).cloned().unwrap_or_else(IntPoly::zero);
        if acc != expected {
            return Err(k);
        }
    }
    Ok(())
}

/// Pascal rows `0 ..= max` as big integers.
fn pascal(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    for m in 0..=max {
        let mut row = vec![BigInt::one(); m + 1];
        for k in 1..m {
            row[k] = &rows[m - 1][k - 1] + &rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `h_n(z) = Σ_{2j+i₁+i₂+i₃=n} C(j+i₁,i₁) C(j+i₂,i₂) C(j+i₃,i₃)
/// (1+√3)^{i₂} (1-√3)^{i₃} 3^{j+i₁} (2z)^{n-j}`, with `h_{-1} = 0`.
pub fn h_poly(n: i64) -> Sqrt3Poly {
    if n < 0 {
        return Sqrt3Poly::zero();
    }
    HTable::new(n as usize).h(n)
}

/// Precomputed binomials and powers of `1 ± √3` up to a fixed order.
struct HTable {
    binom: Vec<Vec<BigInt>>,
    plus: Vec<QuadSqrt3>,
    minus: Vec<QuadSqrt3>,
}

impl HTable {
    fn new(max_n: usize) -> Self {
        let mut plus = vec![QuadSqrt3::one()];
        let mut minus = vec![QuadSqrt3::one()];
        let (p1, m1) = (QuadSqrt3::from_ints(1, 1), QuadSqrt3::from_ints(1, -1));
        for k in 1..=max_n {
            plus.push(crate::poly::Ring::mul_ref(&plus[k - 1], &p1));
            minus.push(crate::poly::Ring::mul_ref(&minus[k - 1], &m1));
        }
        HTable {
            binom: pascal(max_n),
            plus,
            minus,
        }
    }

    fn c(&self, top: usize, k: usize) -> &BigInt {
        &self.binom[top][k]
    }

    fn h(&self, n: i64) -> Sqrt3Poly {
        use crate::poly::Ring;
        if n < 0 {
            return Sqrt3Poly::zero();
        }
        let n = n as usize;
        let mut coeffs = vec![QuadSqrt3::zero(); n + 1];
        for j in 0..=n / 2 {
            // inner[m] = Σ_{i₂+i₃=m} C(j+i₂,i₂) C(j+i₃,i₃) (1+√3)^{i₂} (1-√3)^{i₃}
            let rest = n - 2 * j;
            let mut total = QuadSqrt3::zero();
            for i1 in 0..=rest {
                let m = rest - i1;
                let mut inner = QuadSqrt3::zero();
                for i2 in 0..=m {
                    let i3 = m - i2;
                    let weight = self.c(j + i2, i2) * self.c(j + i3, i3);
                    let term = self.plus[i2].mul_ref(&self.minus[i3]);
                    inner += &term.mul_ref(&QuadSqrt3::from_integer(weight));
                }
                let outer = self.c(j + i1, i1) * BigInt::from(3).pow((j + i1) as u32);
                total += &inner.mul_ref(&QuadSqrt3::from_integer(outer));
            }
            let two_pow = BigInt::one() << (n - j);
            coeffs[n - j] = total.mul_ref(&QuadSqrt3::from_integer(two_pow));
        }
        Sqrt3Poly::new(coeffs)
    }
}

/// `2^{n-1} (h_{n+1} + 2(2-3z) h_n - 6z h_{n-1})` reduced to an integer
/// polynomial; every √3 part must cancel and every rational part must be a
/// nonnegative integer.
fn explicit_from_h(
    n: usize,
    h_next: &Sqrt3Poly,
    h: &Sqrt3Poly,
    h_prev: &Sqrt3Poly,
) -> Result<GenusPolynomial> {
    let lift = |c: &[i64]| Sqrt3Poly::new(c.iter().map(|&x| QuadSqrt3::from_ints(x, 0)).collect());
    let combo = &(h_next + &(&lift(&[4, -6]) * h)) - &(&lift(&[0, 6]) * h_prev);
    let prefactor = if n == 0 {
        Rational::new(BigInt::one(), BigInt::from(2))
    } else {
        Rational::from_integer(BigInt::one() << (n - 1))
    };
    let scaled = combo.scale(&QuadSqrt3::new(prefactor, Rational::zero()));
    let mut coeffs = Vec::with_capacity(scaled.coeffs().len());
    for (index, c) in scaled.coeffs().iter().enumerate() {
        if !c.irr.is_zero() {
            return Err(Error::FormulaIntegrity {
                n,
                index,
                detail: format!("nonzero √3 part {}", c.irr),
            });
        }
        if !c.rat.is_integer() || c.rat.is_negative() {
            return Err(Error::FormulaIntegrity {
                n,
                index,
                detail: format!("rational part {} is not a nonnegative integer", c.rat),
            });
        }
        coeffs.push(c.rat.to_integer());
    }
    Ok(GenusPolynomial {
        n,
        poly: IntPoly::new(coeffs),
    })
}

pub fn explicit_gamma(n: usize) -> Result<GenusPolynomial> {
    let table = HTable::new(n + 1);
    let n_i = n as i64;
    explicit_from_h(n, &table.h(n_i + 1), &table.h(n_i), &table.h(n_i - 1))
}

/// `explicit_gamma(0) ..= explicit_gamma(max_n)`, sharing one `h` table.
pub fn explicit_series(max_n: usize) -> Result<Vec<GenusPolynomial>> {
    let table = HTable::new(max_n + 1);
    let hs: Vec<Sqrt3Poly> = (-1..=(max_n as i64 + 1)).map(|k| table.h(k)).collect();
    (0..=max_n)
        .map(|n| explicit_from_h(n, &hs[n + 2], &hs[n + 1], &hs[n]))
        .collect()
}

/// `4ⁿ Σ_k C(n+2, 2k+1) 3^k` for `0 <= k <= ⌊(n+1)/2⌋`.
pub fn leading_closed_form(n: usize) -> BigInt {
    let top = BigInt::from(n + 2);
    let sum: BigInt = (0..=n.div_ceil(2))
        .map(|k| binomial(top.clone(), BigInt::from(2 * k + 1)) * BigInt::from(3).pow(k as u32))
        .sum();
    (BigInt::one() << (2 * n)) * sum
}

/// `s_0 ..= s_max_n` from `s_n = 20 s_{n-1} - 64 s_{n-2} - 384 s_{n-3}`.
pub fn leading_recurrence(max_n: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let v = match n {
            0 => BigInt::from(2),
            1 => BigInt::from(24),
            2 => BigInt::from(256),
            _ => 20 * &s[n - 1] - 64 * &s[n - 2] - 384 * &s[n - 3],
        };
        s.push(v);
    }
    s
}

/// Leading coefficients `g_{n,n+1}` for `n = 0 ..= max_n`, confirmed three
/// ways: closed form, linear recurrence, and the top coefficient of `series`.
pub fn leading_coefficients(series: &[GenusPolynomial]) -> Result<Vec<BigInt>> {
    let Some(max_n) = series.len().checked_sub(1) else {
        return Ok(Vec::new());
    };
    let rec = leading_recurrence(max_n);
    series
        .iter()
        .zip(rec)
        .map(|(g, r)| {
            let n = g.n;
            let closed = leading_closed_form(n);
            let top = g.coeff(n + 1);
            if closed != r || closed != top {
                return Err(Error::FormulaIntegrity {
                    n,
                    index: n + 1,
                    detail: format!("closed form {closed}, recurrence {r}, polynomial {top}"),
                });
            }
            Ok(closed)
        })
        .collect()
}

pub fn leading_coefficient(n: usize) -> Result<BigInt> {
    Ok(leading_coefficients(&gamma_series(n)?)?.pop().unwrap())
}

/// Outcome of one structural check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    /// The index range of the check is empty.
    Vacuous,
    /// First index where the check fails.
    Fail {
        index: usize,
    },
}

impl Check {
    pub fn ok(self) -> bool {
        !matches!(self, Check::Fail { .. })
    }

    fn first_failure(
        range: impl IntoIterator<Item = usize>,
        holds: impl Fn(usize) -> bool,
    ) -> Check {
        let mut any = false;
        for i in range {
            any = true;
            if !holds(i) {
                return Check::Fail { index: i };
            }
        }
        if any {
            Check::Pass
        } else {
            Check::Vacuous
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub n: usize,
    /// Support exactly `[⌊(n+1)/2⌋, n+1]`, positive inside.
    pub support: Check,
    /// `g_{n,i} = 20g_{n-1,i-1} + 24g_{n-2,i-1} - 64g_{n-2,i-2} - 384g_{n-3,i-3}`.
    pub coefficient_recurrence: Check,
    /// `g_{n,i} > 11 g_{n-1,i-1}` for `⌊(n+1)/2⌋+1 <= i <= n`.
    pub growth_bound: Check,
    pub no_internal_zeros: Check,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.support.ok()
            && self.coefficient_recurrence.ok()
            && self.growth_bound.ok()
            && self.no_internal_zeros.ok()
    }
}

/// Structural checks on `series[n]`, using `series[n-3..n]` where needed.
///
/// # Panics
/// If `series` is shorter than `n + 1` or not indexed by position.
pub fn structure_check(series: &[GenusPolynomial], n: usize) -> StructureReport {
    let g = |k: usize, i: isize| -> BigInt {
        if i < 0 {
            BigInt::zero()
        } else {
            series[k].coeff(i as usize)
        }
    };
    let poly = &series[n].poly;
    let (lo, hi) = (GenusPolynomial::min_genus(n), GenusPolynomial::max_genus(n));
    let width = poly.coeffs().len().max(hi + 1);

    let support = Check::first_failure(0..width, |i| {
        let c = poly.coeff(i);
        if (lo..=hi).contains(&i) {
            c.is_positive()
        } else {
            c.is_zero()
        }
    });

    let coefficient_recurrence = if n >= 3 {
        Check::first_failure(0..width + 1, |i| {
            let i = i as isize;
            let rhs = 20 * g(n - 1, i - 1) + 24 * g(n - 2, i - 1)
                - 64 * g(n - 2, i - 2)
                - 384 * g(n - 3, i - 3);
            g(n, i) == rhs
        })
    } else {
        Check::Vacuous
    };

    let growth_bound = if n >= 1 {
        Check::first_failure(lo + 1..=n, |i| {
            g(n, i as isize) > 11 * g(n - 1, i as isize - 1)
        })
    } else {
        Check::Vacuous
    };

    StructureReport {
        n,
        support,
        coefficient_recurrence,
        growth_bound,
        no_internal_zeros: no_internal_zeros(poly),
    }
}

/// No zero coefficient strictly between the first and last nonzero ones.
pub fn no_internal_zeros(poly: &IntPoly) -> Check {
    match (poly.valuation(), poly.degree()) {
        (Some(lo), Some(hi)) => Check::first_failure(lo..=hi, |i| !poly.coeff(i).is_zero()),
        _ => Check::Vacuous,
    }
}
