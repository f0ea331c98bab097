use thiserror::Error;

/// Malformed input tables. These are distinct from axiom violations, which
/// are reported by [`crate::verify_axioms`] on well-shaped algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("algebra must have at least one element")]
    Empty,
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {label:?} in {field}")]
    UnknownLabel { field: String, label: String },
    #[error("table {table} has wrong shape: expected {expected}x{expected}")]
    BadShape { table: &'static str, expected: usize },
    #[error("table {table} entry ({row}, {col}) = {value} out of range 0..{n}")]
    OutOfRange { table: &'static str, row: usize, col: usize, value: usize, n: usize },
    #[error("constant {name} = {value} out of range 0..{n}")]
    ConstantOutOfRange { name: &'static str, value: usize, n: usize },
    #[error("order relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("order is not a lattice: {a} and {b} have no {which}")]
    NotLattice { a: String, b: String, which: &'static str },
    #[error("lattice data inconsistent: {0}")]
    InconsistentLattice(String),
    #[error("missing lattice data: give join/meet tables or a covers list")]
    MissingLattice,
    #[error("no residuum for ({a}, {b}): {{c | c*{a} <= {b}}} has no maximum")]
    NoResiduum { a: String, b: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("algebra {name:?} violates {count} axiom instance(s); first: {first}")]
    AxiomViolation { name: String, count: usize, first: String },
    #[error("not a filter: {0}")]
    NotAFilter(String),
    #[error("filter inclusion required: {0}")]
    NotIncluded(String),
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("map is not a morphism: {0}")]
    NotAMorphism(String),
    #[error("element {0:?} is not in the Boolean center")]
    NotComplemented(String),
    #[error("filters {i} and {j} are not co-maximal")]
    NotComaximal { i: usize, j: usize },
    #[error("filter is not prime")]
    NotPrime,
    #[error("size cap exceeded: product would have {size} elements, cap is {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("no lifting; unliftable idempotent {witness}")]
    NoLifting { witness: String },
    #[error("operation requires a nontrivial algebra")]
    Trivial,
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("enumeration order {n} outside 1..={cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("index {index} out of range for algebra of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
