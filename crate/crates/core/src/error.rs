use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quiver has an oriented cycle through vertex {0}")]
    TriangularityViolation(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("quiver is not a Hasse diagram: arrow {0} -> {1} is a bypass")]
    NotAHasseDiagram(String, String),
    #[error("loop at vertex {0}")]
    LoopArrow(String),
    #[error("duplicate arrow {0} -> {1}")]
    DuplicateArrow(String, String),
    #[error("zero relation {0} ~> {1} is not supported by a path of length at least two")]
    MalformedRelation(String, String),
    #[error("empty vertex selection")]
    EmptySelection,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("too many vertices ({0}); at most {max} are supported", max = crate::vertex_set::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("invalid hom support: {0}")]
    InvalidHomSupport(String),
    #[error("linear maps do not commute with the arrows: {0}")]
    NotAMorphism(String),
    #[error("representation violates the relations: {0}")]
    RelationViolated(String),
    #[error("module is zero")]
    ZeroModule,
    #[error("s < r for the pair ({0}, {1}); apply the test to the opposite algebra")]
    DualizationRequired(String, String),
    #[error("P_{1} is not a summand of the third term of the resolution of S_{0}")]
    NotAThirdSyzygyPair(String, String),
    #[error("invalid template parameter: {0}")]
    InvalidTemplate(String),
    #[error("critical algebra on {0} vertices matches no catalogued template")]
    ClassificationGap(usize),
    #[error("algebra has zero relations; expected a plain incidence algebra")]
    NotAnIncidenceAlgebra,
    #[error("internal error: {0}")]
    Internal(String),
}
