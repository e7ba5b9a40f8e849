use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the stable error names printed by the CLI, so
/// the `Display` output always starts with the variant name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ParseError: line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("NoGenerators: a group needs at least one generator")]
    NoGenerators,
    #[error("DegreeMismatch: permutations of degree {expected} and {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("DegreeTooLarge: degree {0} exceeds the limit of 64 points")]
    DegreeTooLarge(usize),
    #[error("OrderLimitExceeded: group order exceeds {0}")]
    OrderLimitExceeded(usize),
    #[error("NotASubgroup: {0}")]
    NotASubgroup(String),

    #[error("DivisionByZero")]
    DivisionByZero,

    #[error("GroupMismatch: class functions live on different groups")]
    GroupMismatch,
    #[error("NotACharacter: multiplicity of irreducible {index} is {value}")]
    NotACharacter { index: usize, value: String },
    #[error("NotAPermutationCharacter: {0}")]
    NotAPermutationCharacter(String),
    #[error("CommutantMismatch: sum of squared dimensions {found} != {expected}")]
    CommutantMismatch { found: u64, expected: u64 },

    #[error("RelationViolated: product of commutators is {lhs}, product of parabolic images is {rhs}")]
    RelationViolated { lhs: String, rhs: String },
    #[error("NotGenerating: images generate a subgroup of order {image_order} in a group of order {group_order}")]
    NotGenerating {
        image_order: usize,
        group_order: usize,
    },
    #[error("DegenerateBase: {0}")]
    DegenerateBase(String),
    #[error("TrivialBranch: parabolic image l{0} is the identity")]
    TrivialBranch(usize),
    #[error("HyperbolicCountMismatch: base genus {genus} but {found} hyperbolic pairs")]
    HyperbolicCountMismatch { genus: usize, found: usize },
    #[error("NotClosed: operation requires a closed base surface")]
    NotClosed,
    #[error("NoPunctures: operation requires at least one branch point")]
    NoPunctures,
    #[error("NonIntegerGenus: Riemann-Hurwitz Euler characteristic {0} is odd or positive")]
    NonIntegerGenus(i64),
    #[error("InconsistentCounts: n(2g+m-2)+2-k = {formula} but 2*genus = {riemann_hurwitz}")]
    InconsistentCounts {
        formula: i64,
        riemann_hurwitz: i64,
    },

    #[error("NegativeMultiplicity: {0}")]
    NegativeMultiplicity(String),
    #[error("HodgeSumMismatch: chi_10 + chi_01 differs from the H1 character at class {0}")]
    HodgeSumMismatch(usize),
    #[error("OddBranchCount: {0} branch points; a double cover branches over an even number")]
    OddBranchCount(usize),
    #[error("OracleMismatch: {0}")]
    OracleMismatch(String),

    #[error("NonInvariantSubspace: {0}")]
    NonInvariantSubspace(String),

    #[error("InvalidCurve: {0}")]
    InvalidCurve(String),
}

impl Error {
    /// Guard errors flag internal inconsistencies; they must never fire on
    /// valid input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::CommutantMismatch { .. }
                | Error::NonIntegerGenus(_)
                | Error::InconsistentCounts { .. }
                | Error::NegativeMultiplicity(_)
                | Error::HodgeSumMismatch(_)
                | Error::OracleMismatch(_)
                | Error::NonInvariantSubspace(_)
        )
    }

    /// The stable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ParseError { .. } => "ParseError",
            Error::NoGenerators => "NoGenerators",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::DegreeTooLarge(_) => "DegreeTooLarge",
            Error::OrderLimitExceeded(_) => "OrderLimitExceeded",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::DivisionByZero => "DivisionByZero",
            Error::GroupMismatch => "GroupMismatch",
            Error::NotACharacter { .. } => "NotACharacter",
            Error::NotAPermutationCharacter(_) => "NotAPermutationCharacter",
            Error::CommutantMismatch { .. } => "CommutantMismatch",
            Error::RelationViolated { .. } => "RelationViolated",
            Error::NotGenerating { .. } => "NotGenerating",
            Error::DegenerateBase(_) => "DegenerateBase",
            Error::TrivialBranch(_) => "TrivialBranch",
            Error::HyperbolicCountMismatch { .. } => "HyperbolicCountMismatch",
            Error::NotClosed => "NotClosed",
            Error::NoPunctures => "NoPunctures",
            Error::NonIntegerGenus(_) => "NonIntegerGenus",
            Error::InconsistentCounts { .. } => "InconsistentCounts",
            Error::NegativeMultiplicity(_) => "NegativeMultiplicity",
            Error::HodgeSumMismatch(_) => "HodgeSumMismatch",
            Error::OddBranchCount(_) => "OddBranchCount",
            Error::OracleMismatch(_) => "OracleMismatch",
            Error::NonInvariantSubspace(_) => "NonInvariantSubspace",
            Error::InvalidCurve(_) => "InvalidCurve",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
