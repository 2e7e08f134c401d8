use thiserror::Error;

/// Errors reported by fallible constructors and capped operations.
///
/// Contract violations on already-validated values (indexing a permutation
/// out of range, composing mismatched degrees) panic instead; see the
/// individual operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A permutation of degree zero was requested.
    #[error("permutation degree must be at least 1")]
    ZeroDegree,

    /// An image table is not a bijection of `0..len`.
    #[error("image table {images:?} is not a bijection of 0..{}", images.len())]
    NotBijection { images: Vec<usize> },

    /// Two objects that must share a degree do not.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// A word length of zero was requested.
    #[error("word length must be at least 1")]
    ZeroLength,

    /// An alphabet too small to form a graph edge.
    #[error("alphabet size must be at least 2, got {m}")]
    AlphabetTooSmall { m: usize },

    /// An operation would exceed its configured scale cap.
    #[error("scale cap exceeded: operation needs {required}, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },

    /// The singleton-intersection check was asked about the base vertex
    /// itself, for which no predecessor layer exists.
    #[error("target vertex equals the base vertex; no predecessor layer")]
    SameVertex,
}
