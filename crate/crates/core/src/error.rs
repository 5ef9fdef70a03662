use thiserror::Error;

/// Library-wide error type.
///
/// `Capacity` marks inputs that exceed a hard implementation limit (the bitset
/// kernel caps graphs at 64 vertices, exact path DP at 24 vertices per
/// component, surplus enumeration at 12 vertices by default). `Undecided` is
/// the explicit outcome of an arrowing search that ran out of node budget;
/// it is never silently converted into a verdict.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} supports at most {limit}, got {got}")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// n <= (r-1)(t-1) leaves no positive k; the degree threshold is only
    /// defined above the classical Ramsey window.
    #[error("n = {n} is below the classical Ramsey window for r = {r}, t = {t} (need n > (r-1)(t-1) = {limit})")]
    BelowWindow { r: u64, t: u64, n: u64, limit: u64 },

    #[error("search budget exhausted after {nodes} node expansions; verdict undecided")]
    Undecided { nodes: u64 },

    /// A lemma-backed operation met its preconditions but the guaranteed
    /// conclusion did not materialize. Either the implementation is broken or
    /// the lemma instance is falsified; both must surface loudly.
    #[error("lemma conclusion violated ({lemma}): {detail}")]
    LemmaViolation { lemma: &'static str, detail: String },

    /// The witness extractor exhausted every proof case and the exact
    /// fallback search on an instance meeting all preconditions.
    #[error("theorem falsified on an instance meeting all preconditions: {0}")]
    TheoremFalsified(Box<crate::proof::FalsifiedReport>),

    #[error("certificate invalid: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
