use thiserror::Error;

/// Errors raised by constructions and verifiers.
///
/// Every variant identifies the offending datum by index so that callers
/// (and certificates) can point at a concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has length {table_len}, domain has size {dom_size}")]
    LengthMismatch { table_len: usize, dom_size: usize },
    #[error("table entry {entry} at position {pos} is out of range for codomain of size {cod_size}")]
    OutOfRange {
        pos: usize,
        entry: usize,
        cod_size: usize,
    },
    #[error("cannot compose: left domain has size {left_dom}, right codomain has size {right_cod}")]
    CompositionMismatch { left_dom: usize, right_cod: usize },
    #[error("enumeration needs {required} candidates, exceeding cap {cap}")]
    CapExceeded { required: u128, cap: u64 },
    #[error("maps do not form a parallel pair")]
    ParallelMismatch,
    #[error("maps do not share a domain")]
    DomainMismatch,
    #[error("cospan legs have different codomains")]
    CospanMismatch,
    #[error("square boundary does not match: {0}")]
    BoundaryMismatch(&'static str),
    #[error("square does not commute at element {at}")]
    NonCommuting { at: usize },
    #[error("matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("row {row} of the relation has no entry")]
    NotTotal { row: usize },
    #[error("row {row} of the relation has more than one entry")]
    NotUnique { row: usize },
    #[error("relation is not an equivalence relation")]
    NotEquivalenceRelation,
    #[error("map does not preserve the relation at pair ({x}, {y})")]
    NotPreserving { x: usize, y: usize },
    #[error("map is not a monomorphism")]
    NotMono,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map does not live over the expected base (expected size {expected}, got {got})")]
    BaseMismatch { expected: usize, got: usize },
    #[error("slice map does not commute over the base at element {at}")]
    SliceMismatch { at: usize },
    #[error("fiber over {b} has {size} elements, exceeding the classifier bound {bound}")]
    FiberBoundExceeded { b: usize, size: usize, bound: usize },
    #[error("codomain is not the subobject classifier (size 2), got size {got}")]
    NotOmega { got: usize },
    #[error("square is not a covering square: {0}")]
    NotCovering(&'static str),
    #[error("W-type did not stabilize within the given caps")]
    WNotFinite,
    #[error("algebra is not compatible with the shape map: {0}")]
    AlgebraMismatch(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
