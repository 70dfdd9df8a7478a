//! Real-rootedness, interlacing and log-concavity certificates for the
//! normalized genus polynomials `W_n(z) = z^{-⌊(n+1)/2⌋} Γ_{Y_n}(z)`.
//!
//! Every claim is backed by exact Sturm counts on rational intervals. An
//! [`IsolatingInterval`] `(lo, hi]` holds exactly one root of its
//! polynomial; two intervals that do not overlap therefore order their roots
//! strictly, even when they share an endpoint.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::{self, Check, GenusPolynomial};
use crate::poly::{IntPoly, Rational};
use crate::sturm::{cauchy_bound, SturmChain};

/// `W_n` with its degree `d_n = ⌈(n+1)/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedPoly {
    pub n: usize,
    pub w: IntPoly,
    pub degree: usize,
}

/// `d_n = ⌈(n+1)/2⌉`.
pub fn normalized_degree(n: usize) -> usize {
    (n + 2) / 2
}

/// Divide out `z^⌊(n+1)/2⌋`.
pub fn normalize(g: &GenusPolynomial) -> Result<NormalizedPoly> {
    let n = g.n;
    let shift = GenusPolynomial::min_genus(n);
    let w = g.poly.unshift(shift).ok_or_else(|| Error::Structural {
        n,
        detail: format!("nonzero coefficient below z^{shift}"),
    })?;
    let degree = normalized_degree(n);
    if w.degree() != Some(degree) || w.coeffs().iter().any(|c| !c.is_positive()) {
        return Err(Error::Structural {
            n,
            detail: format!("W_{n} = {w} is not a positive polynomial of degree {degree}"),
        });
    }
    Ok(NormalizedPoly { n, w, degree })
}

/// `W_0 ..= W_max_n` by the parity-split recurrence
///
/// ```text
/// n even: W_n = 20z W_{n-1} + 8(3-8z) W_{n-2} - 384z² W_{n-3}
/// n odd:  W_n = 20  W_{n-1} + 8(3-8z) W_{n-2} - 384z  W_{n-3}
/// ```
///
/// each checked against `normalize(Γ_{Y_n})` from the genus recurrence.
pub fn w_series(max_n: usize) -> Result<Vec<NormalizedPoly>> {
    let gammas = formulas::gamma_series(max_n)?;
    let seeds = [
        IntPoly::from_i64s(&[2, 2]),
        IntPoly::from_i64s(&[40, 24]),
        IntPoly::from_i64s(&[48, 720, 256]),
    ];
    let mid = IntPoly::from_i64s(&[24, -64]);
    let mut ws: Vec<IntPoly> = Vec::with_capacity(max_n + 1);
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let w = match seeds.get(n) {
            Some(s) => s.clone(),
            None => {
                let even = n % 2 == 0;
                let t1 = ws[n - 1].scale(&BigInt::from(20)).shift(usize::from(even));
                let t2 = &mid * &ws[n - 2];
                let t3 = ws[n - 3]
                    .scale(&BigInt::from(384))
                    .shift(1 + usize::from(even));
                &(&t1 + &t2) - &t3
            }
        };
        let expected = normalize(&gammas[n])?;
        if w != expected.w {
            return Err(Error::Consistency {
                n,
                detail: format!("W recurrence gives {w}, normalized Γ gives {}", expected.w),
            });
        }
        ws.push(w);
        out.push(expected);
    }
    Ok(out)
}

pub fn w_recurrence(n: usize) -> Result<NormalizedPoly> {
    Ok(w_series(n)?.pop().unwrap())
}

/// Half-open rational interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo < hi);
        IsolatingInterval { lo, hi }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }

    /// Halve around the single root counted by `chain`.
    pub fn bisect(&self, chain: &SturmChain) -> Self {
        let mid = self.midpoint();
        if chain.count(&self.lo, &mid) == 1 {
            IsolatingInterval::new(self.lo.clone(), mid)
        } else {
            IsolatingInterval::new(mid, self.hi.clone())
        }
    }
}

/// Isolating intervals for all real roots of `p` in `(lo, hi]`, in
/// increasing order.
pub fn isolate_in(chain: &SturmChain, lo: Rational, hi: Rational) -> Vec<IsolatingInterval> {
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => out.push(IsolatingInterval::new(lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Proof that `W_n` has `d_n` distinct negative roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCertificate {
    pub n: usize,
    pub degree: usize,
    pub poly: IntPoly,
    pub intervals: Vec<IsolatingInterval>,
    /// The Sturm count on `(-L, 0]` equals the degree.
    pub complete: bool,
}

impl RootCertificate {
    pub fn chain(&self) -> SturmChain {
        SturmChain::new(&self.poly)
    }

    /// Copies of the intervals shrunk until each is narrower than `2^-bits`
    /// times the larger magnitude of its endpoints.
    pub fn refined(&self, bits: u32) -> Vec<IsolatingInterval> {
        let chain = self.chain();
        let scale = Rational::from_integer(BigInt::from(1) << bits);
        self.intervals
            .iter()
            .map(|iv| {
                let mut iv = iv.clone();
                for _ in 0..8 * bits + 256 {
                    let size = iv.lo.abs().max(iv.hi.abs());
                    if iv.width() * &scale <= size {
                        break;
                    }
                    iv = iv.bisect(&chain);
                }
                iv
            })
            .collect()
    }
}

pub fn isolate_roots(p: &NormalizedPoly) -> RootCertificate {
    let chain = SturmChain::new(&p.w);
    let bound = cauchy_bound(&p.w);
    let zero = Rational::zero();
    let count = chain.count(&-bound.clone(), &zero);
    let intervals = isolate_in(&chain, -bound, zero);
    let all_negative = intervals.iter().all(|iv| iv.hi <= Rational::zero())
        && p.w.sign_at(&Rational::zero()) == Ordering::Greater;
    RootCertificate {
        n: p.n,
        degree: p.degree,
        poly: p.w.clone(),
        complete: count == p.degree && intervals.len() == p.degree && all_negative,
        intervals,
    }
}

/// Default bisection cap: `4 · d · bits(max |coeff|)`.
pub fn default_refine_cap(degree: usize, polys: &[&IntPoly]) -> usize {
    let bits = polys
        .iter()
        .map(|p| p.max_abs_coeff().bits())
        .max()
        .unwrap_or(1)
        .max(1);
    4 * degree.max(1) * bits as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterlaceMode {
    /// `W_n` against `W_{n-1}`.
    Consecutive,
    /// `W_n` against `W_{n-2}`.
    Skip,
}

impl InterlaceMode {
    pub fn offset(self) -> usize {
        match self {
            InterlaceMode::Consecutive => 1,
            InterlaceMode::Skip => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InterlaceMode::Consecutive => "consecutive",
            InterlaceMode::Skip => "skip",
        }
    }
}

/// Which polynomial a merged root belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `W_n`, the higher index.
    Upper,
    /// `W_{n-1}` or `W_{n-2}`.
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedRoot {
    pub side: Side,
    /// 1-based root index within its polynomial.
    pub index: usize,
    pub interval: IsolatingInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterlaceOutcome {
    Verified,
    /// Intervals could not be separated within the bisection cap.
    Undecided {
        upper_root: usize,
        lower_root: usize,
    },
    Failed {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingCertificate {
    pub n: usize,
    pub m: usize,
    pub mode: InterlaceMode,
    pub merged: Vec<MergedRoot>,
    pub outcome: InterlaceOutcome,
}

impl InterlacingCertificate {
    pub fn verified(&self) -> bool {
        self.outcome == InterlaceOutcome::Verified
    }
}

/// Separate the roots of `upper` (`W_n`) and `lower` (`W_{n-1}` or
/// `W_{n-2}`) and check they alternate as
/// `x_{n,1} < x_{m,1} < x_{n,2} < ...`, with `W_n` holding one more root
/// except in consecutive mode at odd `n`, where the counts are equal and
/// the lower polynomial holds the rightmost root.
pub fn certify_interlacing(
    upper: &RootCertificate,
    lower: &RootCertificate,
    mode: InterlaceMode,
    max_refine: Option<usize>,
) -> Result<InterlacingCertificate> {
    let n = upper.n;
    if n < mode.offset() || lower.n != n - mode.offset() {
        return Err(Error::InvalidArgument(format!(
            "{} interlacing needs W_n and W_(n-{}), got n={} and m={}",
            mode.name(),
            mode.offset(),
            n,
            lower.n
        )));
    }
    let mut cert = InterlacingCertificate {
        n,
        m: lower.n,
        mode,
        merged: Vec::new(),
        outcome: InterlaceOutcome::Verified,
    };
    if !upper.complete || !lower.complete {
        cert.outcome = InterlaceOutcome::Failed {
            reason: "root certificate incomplete".into(),
        };
        return Ok(cert);
    }

    let cap =
        max_refine.unwrap_or_else(|| default_refine_cap(upper.degree, &[&upper.poly, &lower.poly]));
    let (up_chain, low_chain) = (upper.chain(), lower.chain());
    let mut ups = upper.intervals.clone();
    let mut lows = lower.intervals.clone();
    let mut up_depth = vec![0usize; ups.len()];
    let mut low_depth = vec![0usize; lows.len()];

    loop {
        let mut changed = false;
        for i in 0..ups.len() {
            for j in 0..lows.len() {
                if !ups[i].overlaps(&lows[j]) {
                    continue;
                }
                if up_depth[i] >= cap || low_depth[j] >= cap {
                    cert.outcome = InterlaceOutcome::Undecided {
                        upper_root: i + 1,
                        lower_root: j + 1,
                    };
                    return Ok(cert);
                }
                ups[i] = ups[i].bisect(&up_chain);
                lows[j] = lows[j].bisect(&low_chain);
                up_depth[i] += 1;
                low_depth[j] += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut merged: Vec<MergedRoot> = ups
        .into_iter()
        .enumerate()
        .map(|(k, interval)| MergedRoot {
            side: Side::Upper,
            index: k + 1,
            interval,
        })
        .chain(
            lows.into_iter()
                .enumerate()
                .map(|(k, interval)| MergedRoot {
                    side: Side::Lower,
                    index: k + 1,
                    interval,
                }),
        )
        .collect();
    merged.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));

    let (nu, nl) = (upper.intervals.len(), lower.intervals.len());
    let equal_counts = mode == InterlaceMode::Consecutive && n % 2 == 1;
    let expected_lower = if equal_counts {
        nu
    } else {
        nu.saturating_sub(1)
    };
    let alternates = merged
        .iter()
        .enumerate()
        .all(|(k, r)| r.side == if k % 2 == 0 { Side::Upper } else { Side::Lower });
    cert.outcome = if nl != expected_lower {
        InterlaceOutcome::Failed {
            reason: format!("W_{n} has {nu} roots and W_{} has {nl}", lower.n),
        }
    } else if !alternates {
        InterlaceOutcome::Failed {
            reason: "roots do not alternate starting from W_n".into(),
        }
    } else {
        InterlaceOutcome::Verified
    };
    cert.merged = merged;
    Ok(cert)
}

/// One sign evaluation of a polynomial at a certified root of the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSample {
    /// 1-based index of the root evaluated at.
    pub index: usize,
    pub expected: Ordering,
    /// `None` if the evaluated polynomial could not be shown sign-constant
    /// on the root's interval within the cap.
    pub observed: Option<Ordering>,
}

impl SignSample {
    pub fn ok(&self) -> bool {
        self.observed == Some(self.expected)
    }
}

/// Signs of `P` at the roots of `Q` and of `Q` at the roots of `P`, for
/// positive `P`, `Q` whose roots interlace as `x_1 < y_1 < x_2 < ...`:
/// `(-1)^(i + deg P) P(y_i) > 0` and `(-1)^(j + deg Q) Q(x_j) < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub p_index: usize,
    pub q_index: usize,
    pub p_at_q_roots: Vec<SignSample>,
    pub q_at_p_roots: Vec<SignSample>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.p_at_q_roots.iter().all(SignSample::ok) && self.q_at_p_roots.iter().all(SignSample::ok)
    }
}

fn sign_of_parity(exponent: usize, positive: bool) -> Ordering {
    let even = exponent.is_multiple_of(2);
    if even == positive {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Sign of `eval` at the root isolated by `interval` (of `root_chain`),
/// after shrinking the interval until `eval` has no root in it.
fn sign_at_root(
    eval: &IntPoly,
    eval_chain: &SturmChain,
    root_chain: &SturmChain,
    interval: &IsolatingInterval,
    cap: usize,
) -> Option<Ordering> {
    let mut iv = interval.clone();
    for _ in 0..=cap {
        if eval_chain.count(&iv.lo, &iv.hi) == 0 {
            return Some(eval.sign_at(&iv.midpoint()));
        }
        iv = iv.bisect(root_chain);
    }
    None
}

pub fn lemma_sign_check(
    p: &RootCertificate,
    q: &RootCertificate,
    max_refine: Option<usize>,
) -> LemmaReport {
    let cap = max_refine
        .unwrap_or_else(|| default_refine_cap(p.degree.max(q.degree), &[&p.poly, &q.poly]));
    let (pc, qc) = (p.chain(), q.chain());
    let deg_p = p.poly.degree().unwrap_or(0);
    let deg_q = q.poly.degree().unwrap_or(0);
    let p_at_q_roots = q
        .intervals
        .iter()
        .enumerate()
        .map(|(k, iv)| SignSample {
            index: k + 1,
            expected: sign_of_parity(k + 1 + deg_p, true),
            observed: sign_at_root(&p.poly, &pc, &qc, iv, cap),
        })
        .collect();
    let q_at_p_roots = p
        .intervals
        .iter()
        .enumerate()
        .map(|(k, iv)| SignSample {
            index: k + 1,
            expected: sign_of_parity(k + 1 + deg_q, false),
            observed: sign_at_root(&q.poly, &qc, &pc, iv, cap),
        })
        .collect();
    LemmaReport {
        p_index: p.n,
        q_index: q.n,
        p_at_q_roots,
        q_at_p_roots,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcavityReport {
    /// `c_{i-1} c_{i+1} <= c_i²` at every index strictly inside the support.
    pub log_concave: Check,
    /// Indices inside the support where `c_{i-1} c_{i+1} = c_i²`.
    pub equalities: Vec<usize>,
    pub unimodal: bool,
    /// Index of the (first) largest coefficient.
    pub mode: Option<usize>,
    pub no_internal_zeros: Check,
}

impl ConcavityReport {
    pub fn strictly_log_concave(&self) -> bool {
        self.log_concave.ok() && self.equalities.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.log_concave.ok() && self.unimodal && self.no_internal_zeros.ok()
    }
}

pub fn concavity_report(poly: &IntPoly) -> ConcavityReport {
    let c = poly.coeffs();
    let interior = match (poly.valuation(), poly.degree()) {
        (Some(lo), Some(hi)) if hi > lo => lo + 1..hi,
        _ => 0..0,
    };
    let mut log_concave = Check::Vacuous;
    let mut equalities = Vec::new();
    for i in interior {
        let lhs = &c[i - 1] * &c[i + 1];
        let rhs = &c[i] * &c[i];
        match lhs.cmp(&rhs) {
            Ordering::Greater => {
                log_concave = Check::Fail { index: i };
                break;
            }
            Ordering::Equal => {
                equalities.push(i);
                log_concave = Check::Pass;
            }
            Ordering::Less => log_concave = Check::Pass,
        }
    }
    let mode = c
        .iter()
        .enumerate()
        .fold(None::<(usize, &BigInt)>, |best, (i, x)| match best {
            Some((_, b)) if b >= x => best,
            _ => Some((i, x)),
        })
        .map(|(i, _)| i);
    let unimodal = match mode {
        Some(m) => {
            c[..=m].windows(2).all(|w| w[0] <= w[1]) && c[m..].windows(2).all(|w| w[0] >= w[1])
        }
        None => true,
    };
    ConcavityReport {
        log_concave,
        equalities,
        unimodal,
        mode,
        no_internal_zeros: formulas::no_internal_zeros(poly),
    }
}

/// Everything certified for one `n`.
#[derive(Clone, Debug)]
pub struct Certification {
    pub n: usize,
    pub roots: RootCertificate,
    pub consecutive: Option<InterlacingCertificate>,
    pub skip: Option<InterlacingCertificate>,
    pub lemma_consecutive: Option<LemmaReport>,
    pub lemma_skip: Option<LemmaReport>,
    pub concavity: ConcavityReport,
    pub squarefree: bool,
}

impl Certification {
    pub fn real_rooted(&self) -> bool {
        self.roots.complete && self.squarefree
    }

    pub fn interlace_consecutive(&self) -> Option<bool> {
        self.consecutive.as_ref().map(|c| {
            c.verified()
                && self
                    .lemma_consecutive
                    .as_ref()
                    .is_some_and(LemmaReport::passed)
        })
    }

    pub fn interlace_skip(&self) -> Option<bool> {
        self.skip
            .as_ref()
            .map(|c| c.verified() && self.lemma_skip.as_ref().is_some_and(LemmaReport::passed))
    }

    pub fn passed(&self) -> bool {
        self.real_rooted()
            && self.interlace_consecutive().unwrap_or(true)
            && self.interlace_skip().unwrap_or(true)
            && self.concavity.passed()
    }
}

/// Certify `W_n` given root certificates `roots[k]` of `W_k` for every
/// `k <= n`; `gamma` is `Γ_{Y_n}` for the concavity check.
pub fn certify_one(
    n: usize,
    roots: &[RootCertificate],
    gamma: &IntPoly,
    max_refine: Option<usize>,
) -> Result<Certification> {
    let cert = roots[n].clone();
    let pair = |mode: InterlaceMode| -> Result<Option<(InterlacingCertificate, LemmaReport)>> {
        if n < mode.offset() {
            return Ok(None);
        }
        let lower = &roots[n - mode.offset()];
        let inter = certify_interlacing(&cert, lower, mode, max_refine)?;
        let lemma = lemma_sign_check(&cert, lower, max_refine);
        Ok(Some((inter, lemma)))
    };
    let (consecutive, lemma_consecutive) = pair(InterlaceMode::Consecutive)?.unzip();
    let (skip, lemma_skip) = pair(InterlaceMode::Skip)?.unzip();
    Ok(Certification {
        n,
        squarefree: cert.chain().is_squarefree(),
        roots: cert,
        consecutive,
        skip,
        lemma_consecutive,
        lemma_skip,
        concavity: concavity_report(gamma),
    })
}

/// Certify every `n` in `ns`. Root isolation and per-`n` certification
/// run on `parallelism` threads; results come back in order of `n`.
pub fn certify_range(
    ns: RangeInclusive<usize>,
    max_refine: Option<usize>,
    parallelism: usize,
) -> Result<Vec<Certification>> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument("empty n-range".into()));
    }
    let hi = *ns.end();
    let ws = w_series(hi)?;
    let gammas = formulas::gamma_series(hi)?;
    crate::in_pool(parallelism, || {
        let roots: Vec<RootCertificate> = ws.par_iter().map(isolate_roots).collect();
        ns.into_par_iter()
            .map(|n| certify_one(n, &roots, &gammas[n].poly, max_refine))
            .collect()
    })?
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn contains(iv: &IsolatingInterval, x: f64) -> bool {
        iv.lo.to_f64().unwrap() < x && x <= iv.hi.to_f64().unwrap()
    }

    // Roots of 16z² + 45z + 3 by the quadratic formula.
    const W2_ROOTS: [f64; 2] = [-2.744_173_414_287_98, -0.068_326_585_712_022_2];

    #[test]
    fn refined_intervals_pin_roots() {
        let w2 = isolate_roots(&w_recurrence(2).unwrap());
        let fine = w2.refined(40);
        for (iv, x) in fine.iter().zip(W2_ROOTS) {
            assert!(contains(iv, x));
            assert!(iv.width().to_f64().unwrap() < 1e-11);
        }
        let w1 = isolate_roots(&w_recurrence(1).unwrap()).refined(30);
        assert!(contains(&w1[0], -5.0 / 3.0) && w1[0].width().to_f64().unwrap() < 1e-8);
    }

    #[test]
    fn normalize_examples() {
        let gs = formulas::gamma_series(2).unwrap();
        assert_eq!(normalize(&gs[0]).unwrap().w, p(&[2, 2]));
        assert_eq!(normalize(&gs[1]).unwrap().w, p(&[40, 24]));
        assert_eq!(normalize(&gs[2]).unwrap().w, p(&[48, 720, 256]));
        assert_eq!(normalize(&gs[2]).unwrap().degree, 2);
        let bad = GenusPolynomial {
            n: 2,
            poly: p(&[1, 48, 720, 256]),
        };
        assert!(matches!(
            normalize(&bad),
            Err(Error::Structural { n: 2, .. })
        ));
    }

    #[test]
    fn w_recurrence_examples() {
        assert_eq!(w_recurrence(2).unwrap().w, p(&[48, 720, 256]));
        assert_eq!(w_recurrence(3).unwrap().w, p(&[1920, 11648, 2816]));
        assert_eq!(w_recurrence(4).unwrap().w, p(&[1152, 52608, 177664, 30720]));
        for w in w_series(30).unwrap() {
            assert_eq!(w.degree, normalized_degree(w.n));
        }
    }

    #[test]
    fn isolates_small_cases() {
        let ws = w_series(5).unwrap();
        let c0 = isolate_roots(&ws[0]);
        assert!(c0.complete);
        assert_eq!(c0.intervals.len(), 1);
        assert!(contains(&c0.intervals[0], -1.0));

        let c2 = isolate_roots(&ws[2]);
        assert!(c2.complete);
        assert_eq!(c2.intervals.len(), 2);
        assert!(contains(&c2.intervals[0], W2_ROOTS[0]));
        assert!(contains(&c2.intervals[1], W2_ROOTS[1]));

        let c5 = isolate_roots(&ws[5]);
        assert!(c5.complete);
        assert_eq!(c5.intervals.len(), 3);
    }

    #[test]
    fn incomplete_when_roots_are_complex() {
        let fake = NormalizedPoly {
            n: 2,
            w: p(&[1, 1, 1]),
            degree: 2,
        };
        let c = isolate_roots(&fake);
        assert!(!c.complete);
        assert!(c.intervals.is_empty());
    }

    #[test]
    fn interlacing_small_cases() {
        let ws = w_series(2).unwrap();
        let certs: Vec<_> = ws.iter().map(isolate_roots).collect();

        let skip = certify_interlacing(&certs[2], &certs[0], InterlaceMode::Skip, None).unwrap();
        assert!(skip.verified());
        let sides: Vec<_> = skip.merged.iter().map(|r| r.side).collect();
        assert_eq!(sides, [Side::Upper, Side::Lower, Side::Upper]);
        assert!(contains(&skip.merged[1].interval, -1.0));

        let c10 =
            certify_interlacing(&certs[1], &certs[0], InterlaceMode::Consecutive, None).unwrap();
        assert!(c10.verified());
        assert!(contains(&c10.merged[0].interval, -5.0 / 3.0));
        assert_eq!(c10.merged.last().unwrap().side, Side::Lower);

        let c21 =
            certify_interlacing(&certs[2], &certs[1], InterlaceMode::Consecutive, None).unwrap();
        assert!(c21.verified());
        assert!(contains(&c21.merged[1].interval, -5.0 / 3.0));
    }

    #[test]
    fn interlacing_rejects_wrong_order_and_shared_roots() {
        let ws = w_series(2).unwrap();
        let certs: Vec<_> = ws.iter().map(isolate_roots).collect();
        assert!(
            certify_interlacing(&certs[0], &certs[1], InterlaceMode::Consecutive, None).is_err()
        );

        // (z+1)(z+3) against W_0 = 2(z+1): shared root at -1
        let shared = NormalizedPoly {
            n: 2,
            w: p(&[3, 4, 1]),
            degree: 2,
        };
        let c = isolate_roots(&shared);
        let out = certify_interlacing(&c, &certs[0], InterlaceMode::Skip, Some(40)).unwrap();
        assert!(matches!(out.outcome, InterlaceOutcome::Undecided { .. }));

        // (z+1/2)(z+1/4) against W_0: both roots to the right of -1
        let right = NormalizedPoly {
            n: 2,
            w: p(&[1, 6, 8]),
            degree: 2,
        };
        let c = isolate_roots(&right);
        let out = certify_interlacing(&c, &certs[0], InterlaceMode::Skip, None).unwrap();
        assert!(matches!(out.outcome, InterlaceOutcome::Failed { .. }));
    }

    #[test]
    fn lemma_signs_small_cases() {
        let ws = w_series(2).unwrap();
        let certs: Vec<_> = ws.iter().map(isolate_roots).collect();
        let r = lemma_sign_check(&certs[1], &certs[0], None);
        // (-1)^(1+1) W_1(-1) = 16 > 0 and (-1)^(1+1) W_0(-5/3) = -4/3 < 0
        assert_eq!(certs[1].poly.eval_rational(&q(-1, 1)), q(16, 1));
        assert_eq!(certs[0].poly.eval_rational(&q(-5, 3)), q(-4, 3));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.p_at_q_roots[0].observed, Some(Ordering::Greater));
        assert_eq!(r.q_at_p_roots[0].observed, Some(Ordering::Less));

        // Roles swapped: the hypothesis fails and so do the signs.
        assert!(!lemma_sign_check(&certs[0], &certs[1], None).passed());

        // No roots in range: vacuous.
        let empty = RootCertificate {
            n: 9,
            degree: 0,
            poly: p(&[7]),
            intervals: vec![],
            complete: true,
        };
        let r = lemma_sign_check(&empty, &empty, None);
        assert!(r.passed() && r.p_at_q_roots.is_empty());
    }

    #[test]
    fn concavity_examples() {
        let r = concavity_report(&p(&[0, 40, 24]));
        assert!(r.passed());
        let r = concavity_report(&p(&[0, 0, 1152, 52608, 177664, 30720]));
        assert!(r.passed() && r.strictly_log_concave());
        assert_eq!(r.mode, Some(4));
        let r = concavity_report(&p(&[5]));
        assert_eq!(r.log_concave, Check::Vacuous);
        assert!(r.passed());
        let r = concavity_report(&p(&[1, 1, 1]));
        assert_eq!(r.equalities, vec![1]);
        assert!(!r.strictly_log_concave());
        let r = concavity_report(&p(&[1, 0, 1]));
        assert_eq!(r.log_concave, Check::Fail { index: 1 });
        assert!(!r.unimodal);
        let r = concavity_report(&p(&[1, 3, 2, 4]));
        assert!(!r.unimodal);
    }

    #[test]
    fn certify_first_cases() {
        let ws = w_series(8).unwrap();
        let gs = formulas::gamma_series(8).unwrap();
        let roots: Vec<_> = ws.iter().map(isolate_roots).collect();
        for (n, g) in gs.iter().enumerate() {
            let c = certify_one(n, &roots, &g.poly, None).unwrap();
            assert!(c.passed(), "n = {n}: {c:?}");
            assert_eq!(c.consecutive.is_some(), n >= 1);
            assert_eq!(c.skip.is_some(), n >= 2);
        }
    }
}
