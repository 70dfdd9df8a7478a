//! Text, CSV and JSON renderings.
//!
//! JSON never carries floats for exact quantities: integers are emitted at
//! full precision and rationals as `[num, den]`. Objects use sorted keys,
//! so parsing and re-serializing any output reproduces it byte for byte.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::formulas::{Check, GenusPolynomial};
use crate::oracle::OraclePgd;
use crate::poly::{IntPoly, Rational};
use crate::rootcert::{
    Certification, ConcavityReport, InterlaceOutcome, InterlacingCertificate, IsolatingInterval,
    LemmaReport, RootCertificate, Side, SignSample,
};
use crate::routes::Agreement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// A big integer as an exact JSON number.
pub fn int(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

pub fn coefficients(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

/// `[num, den]`
pub fn rational(q: &Rational) -> Value {
    json!([int(q.numer()), int(q.denom())])
}

/// `[lo_num, lo_den, hi_num, hi_den]`
pub fn interval(iv: &IsolatingInterval) -> Value {
    json!([
        int(iv.lo.numer()),
        int(iv.lo.denom()),
        int(iv.hi.numer()),
        int(iv.hi.denom())
    ])
}

/// Scientific notation, 10 significant digits; for display only.
pub fn decimal(q: &Rational) -> String {
    format!("{:.9e}", q.to_f64().unwrap_or(f64::NAN))
}

/// Compact canonical JSON with a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn check(c: Check) -> Value {
    match c {
        Check::Pass => json!({"status": "pass"}),
        Check::Vacuous => json!({"status": "vacuous"}),
        Check::Fail { index } => json!({"status": "fail", "index": index}),
    }
}

fn sign(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "-",
        Ordering::Equal => "0",
        Ordering::Greater => "+",
    }
}

/// Bits of relative precision behind the `"approx"` decimals.
pub const APPROX_BITS: u32 = 40;

/// Decimal approximations of each root.
pub fn approximate_roots(c: &RootCertificate) -> Vec<String> {
    c.refined(APPROX_BITS)
        .iter()
        .map(|iv| decimal(&iv.midpoint()))
        .collect()
}

/// With `with_approx`, adds decimal root approximations under `"approx"`.
pub fn root_certificate(c: &RootCertificate, with_approx: bool) -> Value {
    let mut v = json!({
        "n": c.n,
        "degree": c.degree,
        "poly": coefficients(&c.poly),
        "intervals": c.intervals.iter().map(interval).collect::<Vec<_>>(),
        "complete": c.complete,
    });
    if with_approx {
        v["approx"] = approximate_roots(c).into();
    }
    v
}

pub fn interlacing(c: &InterlacingCertificate) -> Value {
    let merged: Vec<Value> = c
        .merged
        .iter()
        .map(|r| {
            let (side, poly) = match r.side {
                Side::Upper => ("upper", c.n),
                Side::Lower => ("lower", c.m),
            };
            json!({"side": side, "poly": poly, "index": r.index, "interval": interval(&r.interval)})
        })
        .collect();
    let outcome = match &c.outcome {
        InterlaceOutcome::Verified => json!({"status": "verified"}),
        InterlaceOutcome::Undecided {
            upper_root,
            lower_root,
        } => json!({
            "status": "undecided",
            "upper_root": upper_root,
            "lower_root": lower_root,
        }),
        InterlaceOutcome::Failed { reason } => json!({"status": "failed", "reason": reason}),
    };
    json!({"n": c.n, "m": c.m, "mode": c.mode.name(), "merged": merged, "outcome": outcome})
}

fn samples(s: &[SignSample]) -> Value {
    s.iter()
        .map(|x| {
            json!({
                "index": x.index,
                "expected": sign(x.expected),
                "observed": x.observed.map(sign),
            })
        })
        .collect()
}

pub fn lemma(r: &LemmaReport) -> Value {
    json!({
        "p": r.p_index,
        "q": r.q_index,
        "p_at_q_roots": samples(&r.p_at_q_roots),
        "q_at_p_roots": samples(&r.q_at_p_roots),
        "passed": r.passed(),
    })
}

pub fn concavity(r: &ConcavityReport) -> Value {
    json!({
        "log_concave": check(r.log_concave),
        "strict": r.strictly_log_concave(),
        "equalities": r.equalities,
        "unimodal": r.unimodal,
        "mode": r.mode,
        "no_internal_zeros": check(r.no_internal_zeros),
    })
}

pub fn certification(c: &Certification, with_approx: bool) -> Value {
    json!({
        "n": c.n,
        "roots": root_certificate(&c.roots, with_approx),
        "squarefree": c.squarefree,
        "interlace_consecutive": c.consecutive.as_ref().map(interlacing),
        "interlace_skip": c.skip.as_ref().map(interlacing),
        "lemma_consecutive": c.lemma_consecutive.as_ref().map(lemma),
        "lemma_skip": c.lemma_skip.as_ref().map(lemma),
        "concavity": concavity(&c.concavity),
        "summary": {
            "real_rooted": c.real_rooted(),
            "interlace_consecutive": c.interlace_consecutive(),
            "interlace_skip": c.interlace_skip(),
            "log_concave": c.concavity.passed(),
            "passed": c.passed(),
        },
    })
}

fn mark(ok: Option<bool>) -> &'static str {
    match ok {
        Some(true) => "✓",
        Some(false) => "✗",
        None => "n/a",
    }
}

/// `n=2: real-rooted ✓ (2 intervals), interlace(n-1) ✓, interlace(n-2) n/a, log-concave ✓`
pub fn summary_line(c: &Certification) -> String {
    format!(
        "n={}: real-rooted {} ({} interval{}), interlace(n-1) {}, interlace(n-2) {}, log-concave {}",
        c.n,
        mark(Some(c.real_rooted())),
        c.roots.intervals.len(),
        if c.roots.intervals.len() == 1 { "" } else { "s" },
        mark(c.interlace_consecutive()),
        mark(c.interlace_skip()),
        mark(Some(c.concavity.passed())),
    )
}

/// Isolating intervals as `(lo, hi]` with exact rational endpoints.
pub fn interval_text(c: &RootCertificate) -> String {
    c.intervals
        .iter()
        .map(|iv| format!("({}, {}]", iv.lo, iv.hi))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `n,g_0,...,g_{width-1}` with zero padding.
pub fn csv_row(g: &GenusPolynomial, width: usize) -> String {
    let mut s = g.n.to_string();
    for i in 0..width.max(g.poly.coeffs().len()) {
        write!(s, ",{}", g.poly.coeff(i)).unwrap();
    }
    s
}

/// Rows `g_{n,0} ..= g_{n,max_n+1}` for each `n`, zero-padded to a rectangle.
pub fn table(rows: &[GenusPolynomial], format: Format) -> String {
    let width = rows.iter().map(|g| g.n + 2).max().unwrap_or(0);
    match format {
        Format::Csv => rows.iter().map(|g| csv_row(g, width) + "\n").collect(),
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|g| (0..width).map(|i| g.poly.coeff(i).to_string()).collect())
                .collect();
            let col = |i: usize| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([i.to_string().len()])
                    .max()
                    .unwrap()
            };
            let nw = rows
                .iter()
                .map(|g| g.n.to_string().len())
                .max()
                .unwrap_or(1)
                .max(1);
            let mut out = format!("{:>nw$} |", "n");
            for i in 0..width {
                write!(out, " {:>w$}", i, w = col(i)).unwrap();
            }
            out.push('\n');
            for (g, r) in rows.iter().zip(&cells) {
                write!(out, "{:>nw$} |", g.n).unwrap();
                for (i, c) in r.iter().enumerate() {
                    write!(out, " {:>w$}", c, w = col(i)).unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Json => render_json(&json!({
            "rows": rows
                .iter()
                .map(|g| json!({"n": g.n, "coefficients": coefficients(&g.poly)}))
                .collect::<Vec<_>>(),
        })),
    }
}

pub fn agreement(a: &Agreement) -> Value {
    let disagreement = a.disagreement.as_ref().map(|e| match e {
        crate::Error::RouteDisagreement { index, detail, .. } => {
            json!({"index": index, "detail": detail})
        }
        other => json!({"detail": other.to_string()}),
    });
    json!({
        "n": a.n,
        "routes": a.routes.iter().map(|r| r.name()).collect::<Vec<_>>(),
        "agree": a.agree(),
        "coefficients": coefficients(&a.gamma.poly),
        "disagreement": disagreement,
    })
}

/// Tallies as coefficient lists, trimmed like the pgd polynomials.
pub fn oracle(o: &OraclePgd, matches_pgd: bool) -> Value {
    let v = o.to_pgd();
    json!({
        "n": o.n,
        "a": coefficients(&v.a),
        "b": coefficients(&v.b),
        "c": coefficients(&v.c),
        "total": o.total(),
        "matches_pgd": matches_pgd,
    })
}
