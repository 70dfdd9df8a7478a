use thiserror::Error;

#[derive(Clone, Debug, Error)]
pub enum Error {
    /// A coefficient pattern that cannot occur in a genus polynomial, e.g. a
    /// negative genus count or a nonzero coefficient below the minimum genus.
    #[error("structural violation at n={n}: {detail}")]
    Structural { n: usize, detail: String },

    /// Two computations of the same quantity disagree.
    #[error("internal consistency failure at n={n}: {detail}")]
    Consistency { n: usize, detail: String },

    /// The explicit Q[√3] formula left an irrational or fractional residue.
    #[error("formula integrity failure at n={n}, coefficient {index}: {detail}")]
    FormulaIntegrity {
        n: usize,
        index: usize,
        detail: String,
    },

    #[error("invalid face trace: {0}")]
    InvalidTrace(String),

    #[error(
        "oracle for n={n} would enumerate {rotation_systems} rotation systems; \
         cap is n={cap} (raise it or acknowledge the cost)"
    )]
    OracleCap {
        n: usize,
        cap: usize,
        rotation_systems: String,
    },

    #[error("routes disagree at n={n}, coefficient {index}: {detail}")]
    RouteDisagreement {
        n: usize,
        index: usize,
        detail: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
