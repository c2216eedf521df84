use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable '{variable}' repeated within a term at byte {position}")]
    RepeatedVariable { position: usize, variable: char },

    #[error("degree {degree} exceeds the configured cap of {cap}")]
    DegreeCap { degree: u64, cap: u32 },

    #[error("degree must be positive, got {0}")]
    InvalidDegree(u32),

    #[error("ideal is not Artinian (missing a pure power of {missing})")]
    NotArtinian { missing: char },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("permanent of a {cols}-column matrix exceeds the evaluation limit of {limit}")]
    PermanentTooLarge { cols: usize, limit: usize },

    #[error("punctures must come from distinct monomials, got {0} twice")]
    SamePuncture(Monomial),

    #[error("monomial {monomial} has degree {degree}, expected less than {bound}")]
    DegreeTooLarge {
        monomial: Monomial,
        degree: u32,
        bound: u32,
    },

    #[error("generator {generator} has degree above d = {d}")]
    GeneratorAboveDegree { generator: Monomial, d: u32 },

    #[error("triangular region T_{0} is empty")]
    EmptyRegion(u32),

    #[error("tiling does not match the region: {0}")]
    TilingMismatch(String),

    #[error("invalid family parameters: {0}")]
    Family(String),

    #[error("family generator m_{index} is invalid: {reason}")]
    FamilyGenerator { index: usize, reason: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::RepeatedVariable { .. } => "repeated_variable",
            Error::DegreeCap { .. } => "degree_cap",
            Error::InvalidDegree(_) => "invalid_degree",
            Error::NotArtinian { .. } => "not_artinian",
            Error::NotSquare { .. } => "not_square",
            Error::PermanentTooLarge { .. } => "permanent_too_large",
            Error::SamePuncture(_) => "same_puncture",
            Error::DegreeTooLarge { .. } => "degree_too_large",
            Error::GeneratorAboveDegree { .. } => "generator_above_degree",
            Error::EmptyRegion(_) => "empty_region",
            Error::TilingMismatch(_) => "tiling_mismatch",
            Error::Family(_) => "family",
            Error::FamilyGenerator { .. } => "family_generator",
            Error::Consistency(_) => "consistency",
        }
    }

    /// Errors caused by malformed input text rather than by a violated
    /// precondition on well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::RepeatedVariable { .. } | Error::DegreeCap { .. }
        )
    }
}
