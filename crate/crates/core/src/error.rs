use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant has a stable upper-snake-case [`code`](Error::code) used by
/// the command-line front end as a machine-parsable identifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(i64),
    #[error("type has no entries")]
    EmptyType,
    #[error("rank at position {index} is {rank}, ranks must be positive")]
    NonPositiveRank { index: usize, rank: i64 },
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("total degree must be 0, got {0}")]
    NonZeroTotalDegree(i64),
    #[error("stability parameter is not strictly decreasing at position {index}")]
    NonDecreasingParameter { index: usize },
    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCapExceeded { rank: i64, cap: i64 },
    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: i64, min: i64 },
    #[error("type is not admissible: {0}")]
    NotAdmissible(String),
    #[error("table value {numerator}/2 is not an integer")]
    NonIntegralTableValue { numerator: i64 },
    #[error("every rank is 1; the non-stable locus bound is undefined")]
    AllRanksOne,
    #[error("Harder-Narasimhan window violated: {bound} (value {value}, limit {limit})")]
    HnWindowViolated {
        bound: &'static str,
        value: String,
        limit: String,
    },
    #[error("saturation degree {name}={value} outside [{min}, {max}]")]
    SaturationOutOfRange {
        name: &'static str,
        value: i64,
        min: String,
        max: String,
    },
    #[error("saturation degree {0} is required on this branch")]
    MissingSaturationDegree(&'static str),
    #[error("validated profile matched no case: {0}")]
    CaseGap(String),
    #[error("graded type is invalid: {0}")]
    InvalidGradedType(String),
    #[error("destabilizer rank {sub_rank} exceeds rank {rank} at level {level}")]
    LevelOverflow {
        level: usize,
        sub_rank: i64,
        rank: i64,
    },
    #[error("destabilizer fills level {level} but has degree {sub_degree} instead of {degree}")]
    FullLevelDegreeMismatch {
        level: usize,
        sub_degree: i64,
        degree: i64,
    },
    #[error("destabilizer slope {sub} does not exceed slope {total}")]
    NotDestabilizing { sub: String, total: String },
    #[error("destabilizer must be a proper non-zero sub-object")]
    ZeroOrFullDestabilizer,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::GenusTooSmall(_) => "GENUS_TOO_SMALL",
            Error::EmptyType => "EMPTY_TYPE",
            Error::NonPositiveRank { .. } => "NON_POSITIVE_RANK",
            Error::LengthMismatch { .. } => "LENGTH_MISMATCH",
            Error::NonZeroTotalDegree(_) => "NON_ZERO_TOTAL_DEGREE",
            Error::NonDecreasingParameter { .. } => "NON_DECREASING_PARAMETER",
            Error::RankCapExceeded { .. } => "RANK_CAP_EXCEEDED",
            Error::RankTooSmall { .. } => "RANK_TOO_SMALL",
            Error::NotAdmissible(_) => "NOT_ADMISSIBLE",
            Error::NonIntegralTableValue { .. } => "NON_INTEGRAL_TABLE_VALUE",
            Error::AllRanksOne => "ALL_RANKS_ONE",
            Error::HnWindowViolated { .. } => "HN_WINDOW_VIOLATED",
            Error::SaturationOutOfRange { .. } => "SATURATION_OUT_OF_RANGE",
            Error::MissingSaturationDegree(_) => "MISSING_SATURATION_DEGREE",
            Error::CaseGap(_) => "CASE_GAP",
            Error::InvalidGradedType(_) => "INVALID_GRADED_TYPE",
            Error::LevelOverflow { .. } => "LEVEL_OVERFLOW",
            Error::FullLevelDegreeMismatch { .. } => "FULL_LEVEL_DEGREE_MISMATCH",
            Error::NotDestabilizing { .. } => "NOT_DESTABILIZING",
            Error::ZeroOrFullDestabilizer => "ZERO_OR_FULL_DESTABILIZER",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
