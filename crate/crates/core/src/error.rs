use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("inconsistent system")]
    InconsistentSystem,
    #[error("rewriting system is not confluent: {0}")]
    NotConfluent(String),
    #[error("rewriting did not terminate within {0} steps")]
    NonTerminating(usize),
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("matrices do not define a module: {0}")]
    NotAModule(String),
    #[error("presentation mismatch")]
    PresentationMismatch,
    #[error("catalog incomplete: {0}")]
    CatalogIncomplete(String),
    #[error("label out of family: {0}")]
    LabelOutOfFamily(String),
    #[error("criterion not applicable: {0}")]
    CriterionNotApplicable(String),
    #[error("bijection not dimension-preserving: {0}")]
    BijectionNotDimensionPreserving(String),
    #[error("closure did not stabilize within {0} tensor steps")]
    ClosureDiverged(usize),
    #[error("relation subspace not H-stable: {0}")]
    RelationNotStable(String),
    #[error("extension condition fails for generator {0}")]
    ExtensionConditionFails(String),
    #[error("parameters violate inner-faithfulness precondition: {0}")]
    NotInnerFaithful(String),
    #[error("degree bound too small: {0}")]
    DegreeBoundTooSmall(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;
