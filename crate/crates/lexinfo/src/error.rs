use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate, from matrix edits to
/// enumeration caps. Variants are fine-grained so callers can map them to
/// distinct exit codes or recovery paths.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimensions must be at least 1x1, got {vs_max}x{vr_max}")]
    InvalidDimension { vs_max: usize, vr_max: usize },

    #[error("word index {index} out of range for a vocabulary of {vs_max}")]
    WordOutOfRange { index: usize, vs_max: usize },

    #[error("meaning index {index} out of range for a repertoire of {vr_max}")]
    MeaningOutOfRange { index: usize, vr_max: usize },

    #[error("link ({word}, {meaning}) is already present")]
    DuplicateLink { word: usize, meaning: usize },

    #[error("link ({word}, {meaning}) is not present")]
    MissingLink { word: usize, meaning: usize },

    #[error("all {vs_max} words are linked; vocabulary is full")]
    VocabularyFull { vs_max: usize },

    /// The probabilistic measures are undefined on an empty mapping (M = 0).
    #[error("undefined measures for empty mapping")]
    UndefinedMeasure,

    #[error("lambda must lie in [0, 1], got {value}")]
    InvalidLambda { value: f64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid attachment plan: {message}")]
    InvalidPlan { message: String },

    /// Attaching a "new" word that already has links is recycling, which has
    /// different entropy bookkeeping; callers must use `attach_old_word`.
    #[error("word {word} is already linked; recycling requires attach_old_word")]
    RecycleRequired { word: usize },

    #[error("word {word} is unlinked; use attach_new_word for new words")]
    WordUnlinked { word: usize },

    #[error("no unlinked meaning is available for strategy a")]
    StrategyAUnavailable,

    #[error("meaning {meaning} is unlinked; strategy b targets a linked meaning")]
    NotStrategyB { meaning: usize },

    #[error("plans cannot be compared: {message}")]
    InvalidComparison { message: String },

    #[error("{cells} cells exceed the enumeration cap of {cap}")]
    EnumerationTooLarge { cells: usize, cap: usize },

    #[error("invalid configuration: {message}")]
    InvalidConfig { message: String },
}
