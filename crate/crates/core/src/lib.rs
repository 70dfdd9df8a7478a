//! Genus polynomials of iterated-claw graphs in exact arithmetic.
//!
//! The iterated claw `Y_n` starts from the dipole `D_3` and grows by the
//! newclaw surgery: subdivide the three edges at the root and join the new
//! vertices to a fresh root. This crate computes `Γ_{Y_n}(z)` four ways
//! ([`pgd`], [`formulas`]), checks them against exhaustive enumeration of
//! embeddings ([`oracle`]), and certifies real-rootedness, root interlacing
//! and log-concavity with exact Sturm sequences ([`rootcert`]).

pub mod error;
pub mod formulas;
pub mod oracle;
pub mod pgd;
pub mod poly;
pub mod quadratic;
pub mod report;
pub mod rootcert;
pub mod routes;
pub mod sturm;

pub use error::{Error, Result};
pub use poly::{IntPoly, Poly, RatPoly, Rational, Ring};
pub use quadratic::{QuadSqrt3, Sqrt3Poly};

/// Run `f` on a dedicated rayon pool with `threads` workers.
pub(crate) fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
