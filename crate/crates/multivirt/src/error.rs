//! Crate-wide error type.
//!
//! Every failure carries enough context to be actionable from a CLI message
//! alone: the offending token, relator, generator, or limit is always named.

use thiserror::Error;

/// Unified error type for all engine operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A token or word string could not be parsed.
    #[error("parse error in `{input}`: {reason}")]
    Parse {
        /// The text that failed to parse.
        input: String,
        /// What was wrong with it.
        reason: String,
    },

    /// A permutation was malformed (not a bijection, wrong degree, ...).
    #[error("invalid permutation: {reason}")]
    InvalidPermutation {
        /// What was wrong with it.
        reason: String,
    },

    /// A presentation failed validation.
    #[error("invalid presentation `{name}`: {reason}")]
    InvalidPresentation {
        /// Name of the offending presentation.
        name: String,
        /// What was wrong with it.
        reason: String,
    },

    /// Degree outside the supported guard range.
    #[error("degree {n} outside supported range {min}..={max}")]
    DegreeOutOfRange {
        /// The requested degree.
        n: usize,
        /// Smallest supported degree.
        min: usize,
        /// Largest supported degree.
        max: usize,
    },

    /// A map of generator images does not send every relator to the identity.
    #[error("map is not well-defined: relator `{relator}` maps to `{image}`, not the identity")]
    NotWellDefined {
        /// The relator whose image is nontrivial.
        relator: String,
        /// Its (nonidentity) image.
        image: String,
    },

    /// A homomorphism was missing an image for a generator.
    #[error("no image provided for generator `{generator}`")]
    MissingImage {
        /// The generator without an image.
        generator: String,
    },

    /// Coset enumeration exceeded its table budget.
    #[error(
        "coset enumeration exceeded the limit of {limit} cosets; \
             set MVB_MAX_COSETS to raise the bound"
    )]
    CosetLimitExceeded {
        /// The ceiling that was hit.
        limit: usize,
    },

    /// A transversal or rewriting input was incompatible with the coset table.
    #[error("incompatible with coset table: {reason}")]
    IncompatibleTable {
        /// How the input disagreed with the table.
        reason: String,
    },

    /// A named dictionary entry failed to resolve to a single derived symbol.
    #[error("dictionary entry `{name}` does not resolve to a single generator: {reason}")]
    DictionaryEntry {
        /// The dictionary name that failed.
        name: String,
        /// Why resolution failed.
        reason: String,
    },

    /// A requested elimination or renaming referenced a missing generator.
    #[error("unknown generator `{generator}`: {reason}")]
    UnknownGenerator {
        /// The missing generator.
        generator: String,
        /// Where it was expected.
        reason: String,
    },

    /// A Tietze elimination was rejected (not a valid defining relator).
    #[error("cannot eliminate `{generator}`: {reason}")]
    BadElimination {
        /// The generator that cannot be eliminated.
        generator: String,
        /// Why the elimination is invalid.
        reason: String,
    },

    /// A renaming was not a bijection onto fresh names.
    #[error("invalid renaming: {reason}")]
    BadRenaming {
        /// Why the renaming is invalid.
        reason: String,
    },

    /// Catalog lookup failed.
    #[error("unknown catalog key `{key}`{hint}")]
    UnknownCatalogKey {
        /// The key that was looked up.
        key: String,
        /// A nearest-match hint, or empty.
        hint: String,
    },

    /// Catalog parameters out of range for the requested family.
    #[error("catalog entry `{key}` does not accept parameters {params}: {reason}")]
    BadCatalogParams {
        /// The catalog key.
        key: String,
        /// The rejected `(n, k)` parameters, already formatted.
        params: String,
        /// Why they are rejected.
        reason: String,
    },

    /// An action-verification step failed.
    #[error("action verification failed for `{entry}` under `{generator}`: {reason}")]
    ActionMismatch {
        /// The action-table entry being checked.
        entry: String,
        /// The conjugating generator.
        generator: String,
        /// How the check failed.
        reason: String,
    },

    /// JSON (de)serialization failure, with the underlying message.
    #[error("JSON error: {0}")]
    Json(String),

    /// Input/output failure, with the underlying message.
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
