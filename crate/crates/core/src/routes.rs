//! Independent computations of `Γ_{Y_n}` and their comparison.

use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::formulas::{self, GenusPolynomial};
use crate::oracle::{self, OracleConfig};
use crate::pgd::{self, first_difference};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Iterate the production matrix on `(A, B, C)`.
    Pgd,
    /// Three-term recurrence from the table seeds.
    Recurrence,
    /// `h_n` formula over `Q[√3]`.
    Explicit,
    /// Power-series coefficients of the generating function.
    Gf,
    /// Exhaustive enumeration of rotation systems.
    Oracle,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Pgd,
        Route::Recurrence,
        Route::Explicit,
        Route::Gf,
        Route::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Pgd => "pgd",
            Route::Recurrence => "recurrence",
            Route::Explicit => "explicit",
            Route::Gf => "gf",
            Route::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Γ_{Y_n}` for every `n` in `ns`, by one route.
pub fn compute(
    route: Route,
    ns: RangeInclusive<usize>,
    oracle_config: &OracleConfig,
) -> Result<Vec<GenusPolynomial>> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument("empty n-range".into()));
    }
    let (lo, hi) = (*ns.start(), *ns.end());
    let series = match route {
        Route::Pgd => pgd::pgd_series(hi)
            .into_iter()
            .map(|v| {
                v.check_invariants()?;
                Ok(GenusPolynomial {
                    n: v.n,
                    poly: v.total(),
                })
            })
            .collect::<Result<Vec<_>>>()?,
        Route::Recurrence => formulas::gamma_series(hi)?,
        Route::Explicit => formulas::explicit_series(hi)?,
        Route::Gf => {
            let r = formulas::gf_series(hi + 1);
            if let Err(k) = formulas::verify_gf_closed_form(&r) {
                return Err(Error::Consistency {
                    n: k.saturating_sub(1),
                    detail: format!("power series disagrees with the closed form at t^{k}"),
                });
            }
            formulas::gamma_from_gf(hi)?
        }
        Route::Oracle => {
            return ns
                .map(|n| {
                    let tally = oracle::oracle_pgd(n, oracle_config)?;
                    Ok(GenusPolynomial {
                        n,
                        poly: tally.to_pgd().total(),
                    })
                })
                .collect();
        }
    };
    for g in &series[lo..] {
        g.validate()?;
    }
    Ok(series.into_iter().skip(lo).collect())
}

/// The first coefficient where `other` departs from `reference`.
pub fn compare(
    reference: (Route, &GenusPolynomial),
    other: (Route, &GenusPolynomial),
) -> Result<()> {
    let (ra, a) = reference;
    let (rb, b) = other;
    debug_assert_eq!(a.n, b.n);
    if a.poly == b.poly {
        return Ok(());
    }
    let index = first_difference(&a.poly, &b.poly);
    Err(Error::RouteDisagreement {
        n: a.n,
        index,
        detail: format!(
            "{ra} gives {}, {rb} gives {}",
            a.coeff(index),
            b.coeff(index)
        ),
    })
}

/// Per-`n` result of running several routes.
#[derive(Clone, Debug)]
pub struct Agreement {
    pub n: usize,
    pub routes: Vec<Route>,
    pub gamma: GenusPolynomial,
    /// The first disagreement against the first route, if any.
    pub disagreement: Option<Error>,
}

impl Agreement {
    pub fn agree(&self) -> bool {
        self.disagreement.is_none()
    }
}

/// Run every route in `routes` over `ns` and compare them against the first.
///
/// Routes are skipped for an `n` where `skip(route, n)` holds, e.g. the
/// oracle beyond its cap.
pub fn consensus(
    routes: &[Route],
    ns: RangeInclusive<usize>,
    oracle_config: &OracleConfig,
    skip: impl Fn(Route, usize) -> bool,
) -> Result<Vec<Agreement>> {
    let (lo, hi) = (*ns.start(), *ns.end());
    let mut columns = Vec::with_capacity(routes.len());
    for &route in routes {
        let wanted: Vec<usize> = (lo..=hi).filter(|&n| !skip(route, n)).collect();
        let values = match (wanted.first(), wanted.last()) {
            (Some(&a), Some(&b)) => compute(route, a..=b, oracle_config)?,
            _ => Vec::new(),
        };
        columns.push((route, values));
    }
    let mut out = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        let present: Vec<(Route, &GenusPolynomial)> = columns
            .iter()
            .filter_map(|(r, vs)| vs.iter().find(|g| g.n == n).map(|g| (*r, g)))
            .collect();
        let Some(&first) = present.first() else {
            return Err(Error::InvalidArgument(format!("no route ran for n={n}")));
        };
        let disagreement = present[1..]
            .iter()
            .find_map(|&other| compare(first, other).err());
        out.push(Agreement {
            n,
            routes: present.iter().map(|p| p.0).collect(),
            gamma: first.1.clone(),
            disagreement,
        });
    }
    Ok(out)
}
