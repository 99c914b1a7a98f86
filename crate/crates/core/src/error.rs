use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by constructors and queries. Subsets inside messages are
/// already rendered with their element labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("ground set has {size} elements, the supported maximum is {cap}")]
    GroundTooLarge { size: usize, cap: usize },
    #[error("subset {0} has elements outside the ground set")]
    ForeignElement(String),

    #[error("empty basis list")]
    EmptyBasisList,
    #[error("bases have unequal sizes: {first} has {first_len} elements, {other} has {other_len}")]
    UnequalBasisSizes {
        first: String,
        first_len: usize,
        other: String,
        other_len: usize,
    },
    #[error("basis exchange fails for B1={b1}, B2={b2}, e={element}: no f in B2\\B1 makes B1-e+f a basis")]
    ExchangeViolation {
        b1: String,
        b2: String,
        element: String,
    },
    #[error("circuit family is not an antichain: {smaller} is contained in {larger}")]
    NotAntichain { smaller: String, larger: String },
    #[error("circuit elimination fails for {c1}, {c2} on element {element}")]
    EliminationFailure {
        c1: String,
        c2: String,
        element: String,
    },
    #[error("circuit family yields no bases")]
    NoBases,
    #[error("rank {rank} out of range for a ground set of size {size}")]
    RankOutOfRange { rank: usize, size: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("edge `{edge}` uses undeclared vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("delete set {delete} and contract set {contract} overlap")]
    OverlappingMinor { delete: String, contract: String },
    #[error("{0} is not a basis")]
    NotABasis(String),
    #[error("element {element} is on the wrong side of basis {basis} for a fundamental {kind}")]
    WrongSide {
        element: String,
        basis: String,
        kind: &'static str,
    },

    #[error("matroids are on different ordered ground sets")]
    GroundMismatch,
    #[error("not a perspective: circuit {circuit} of M meets cocircuit {cocircuit} of M' in exactly one element")]
    Mp3Violation { circuit: String, cocircuit: String },
    #[error("negative rank codrop on {0}: r(M)-r(M') < r_M(A)-r_M'(A)")]
    NegativeRankCodrop(String),
    #[error("element {element} is neither externally active in nor the minimum of a circuit inside {subset}")]
    NotActive { element: String, subset: String },
    #[error("expected a unique witness circuit for {element} and {subset}, found {count}")]
    WitnessNotUnique {
        element: String,
        subset: String,
        count: usize,
    },
    #[error("{0} is not independent in M and spanning in M'")]
    NotIndependentSpanning(String),
    #[error("empty set family")]
    EmptyFamily,
    #[error("intervals do not partition the Boolean lattice: {subset} is covered {count} times")]
    NotAPartition { subset: String, count: usize },

    #[error("unbound variable `{0}`")]
    UnboundVariable(char),
    #[error("polynomial syntax error at byte {position}: {message}")]
    PolynomialSyntax { position: usize, message: String },

    #[error("instance has {size} elements, exhaustive checks are capped at {cap}")]
    InstanceTooLarge { size: usize, cap: usize },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown expansion family `{0}`")]
    UnknownFamily(String),
    #[error("unknown derivative variant `{0}`")]
    UnknownVariant(String),
}
