use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank in descriptor `{0}`")]
    InvalidRank(String),
    #[error("cannot parse system descriptor `{0}`")]
    BadDescriptor(String),
    #[error("Coxeter matrix is not symmetric at ({0}, {1})")]
    AsymmetricMatrix(usize, usize),
    #[error("bad bond {bond} at ({row}, {col})")]
    BadBond { row: usize, col: usize, bond: i64 },
    #[error("the Coxeter diagram is disconnected")]
    ReducibleSystem,
    #[error("no exact geometric representation for this system (bond outside 2, 3, 4, 5, infinity, or 4 and 5 mixed)")]
    UnsupportedRing,
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("element is not fully commutative")]
    NotFC,
    #[error("system is not a(2)-finite")]
    NotA2Finite,
    #[error("closed forms are only tabulated for the built-in families")]
    NotBuiltinType,
    #[error("element does not have a-value 2")]
    NotAValue2,
    #[error("right descents of the left factor differ from left descents of the right factor")]
    NotDescentCompatible,
    #[error("not a short stub")]
    NotShortStub,
    #[error("pair is not an edge of the Coxeter diagram")]
    NotAnEdge,
    #[error("slide does not land on a short stub")]
    ResultNotStub,
    #[error("stubs are not related by left star operations or a single slide")]
    NotRelated,
    #[error("simple star operations need a bond of 3")]
    BondNotThree,
    #[error("`{0}` is not a stub of this system")]
    UnknownStubWord(String),
    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),
    #[error("group is infinite")]
    GroupInfinite,
    #[error("cannot parse custom system: {0}")]
    BadCustomSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
