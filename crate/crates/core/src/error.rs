use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the range a table or sieve was built for.
    #[error("{what} = {value} exceeds the supported limit {limit}")]
    Range {
        what: &'static str,
        value: f64,
        limit: f64,
    },

    /// An argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A requested accuracy could not be reached.
    #[error("tolerance {requested:e} not reached on [{lo}, {hi}] (best estimate {achieved:e}){}", context.as_deref().map(|c| format!(" in {c}")).unwrap_or_default())]
    Tolerance {
        requested: f64,
        achieved: f64,
        lo: f64,
        hi: f64,
        context: Option<String>,
    },

    /// Evaluation at the pole s = 1 of the zeta function.
    #[error("s = 1 is a pole of the zeta function")]
    Pole,

    /// Real part outside the supported half-line s > 0.
    #[error("s = {0} is outside the supported domain s > 0")]
    Domain(f64),

    /// Allocation of a table failed.
    #[error("cannot allocate table for {0} entries")]
    Resource(usize),
}

impl Error {
    /// Attach a label naming where a tolerance failure happened.
    pub fn in_context(self, label: impl Into<String>) -> Self {
        match self {
            Error::Tolerance {
                requested,
                achieved,
                lo,
                hi,
                context,
            } => {
                let label = label.into();
                let context = Some(match context {
                    Some(inner) => format!("{label}: {inner}"),
                    None => label,
                });
                Error::Tolerance {
                    requested,
                    achieved,
                    lo,
                    hi,
                    context,
                }
            }
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
