use alloc::string::String;
use core::fmt;

/// Everything that can go wrong across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Generator names are nonempty tokens of letters, digits or `_`,
    /// optionally followed by `'` marks.
    InvalidGeneratorName(String),
    DuplicateGenerator(String),
    UnknownGenerator(String),
    /// `m(s,s)` is always 1 and may not be listed.
    SelfPair(String),
    DuplicatePair(String, String),
    /// Off-diagonal orders are at least 2.
    InvalidOrder(u32),
    EmptySystem,
    /// The pair handed to a separation query lies inside the cut.
    GeneratorInCut(String),
    NotASeparator(String),
    InvalidSeparation(String),
    NotFiniteType(String),
    NotAnAutomorphism(String),
    /// A user-supplied twist permutation is not induced by conjugation by
    /// any element of the cut subgroup.
    SigmaNotRealized,
    /// The graph of groups belongs to a different ambient system.
    AmbientMismatch,
    BadVertexIndex(usize),
    /// Exhaustive enumeration refused: the system is larger than the bound.
    RankBound {
        rank: usize,
        bound: usize,
    },
    /// Coset enumeration ran out of table space. Inconclusive: the group may
    /// be finite but larger than the bound, or infinite.
    EnumerationBound {
        cap: usize,
    },
    /// Orbit exploration hit its node budget.
    OrbitBudget {
        budget: usize,
    },
    /// The enumerated group has no unique element of maximal length.
    NoUniqueLongest,
    /// Defensive: an internal oracle invariant failed.
    OracleInvariant(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGeneratorName(n) => write!(f, "invalid generator name {:?}", n),
            Error::DuplicateGenerator(n) => write!(f, "duplicate generator {}", n),
            Error::UnknownGenerator(n) => write!(f, "unknown generator {}", n),
            Error::SelfPair(n) => write!(f, "order listed for pair ({0},{0})", n),
            Error::DuplicatePair(s, t) => write!(f, "pair ({},{}) listed more than once", s, t),
            Error::InvalidOrder(m) => write!(f, "order {} is below 2", m),
            Error::EmptySystem => write!(f, "system has no generators"),
            Error::GeneratorInCut(n) => write!(f, "generator {} lies in the cut", n),
            Error::NotASeparator(s) => write!(f, "{} does not separate the diagram", s),
            Error::InvalidSeparation(msg) => write!(f, "invalid separation: {}", msg),
            Error::NotFiniteType(s) => write!(f, "{} does not generate a finite-type subgroup", s),
            Error::NotAnAutomorphism(msg) => write!(f, "not a diagram automorphism: {}", msg),
            Error::SigmaNotRealized => {
                write!(
                    f,
                    "permutation is not realized by conjugation in the cut subgroup"
                )
            }
            Error::AmbientMismatch => write!(f, "graph of groups has a different ambient system"),
            Error::BadVertexIndex(i) => write!(f, "edge references vertex {} out of range", i),
            Error::RankBound { rank, bound } => {
                write!(f, "rank {} exceeds enumeration bound {}", rank, bound)
            }
            Error::EnumerationBound { cap } => {
                write!(f, "coset table cap {} exceeded; result inconclusive", cap)
            }
            Error::OrbitBudget { budget } => write!(f, "orbit budget {} exhausted", budget),
            Error::NoUniqueLongest => write!(f, "no unique element of maximal length"),
            Error::OracleInvariant(msg) => write!(f, "oracle invariant violated: {}", msg),
        }
    }
}
