//! Vincular (dashed) pattern avoidance in k-ary words.
//!
//! A vincular pattern is a reduced word together with a set of adjacency
//! positions: letters at adjacent positions must be consecutive in any
//! occurrence, letters across a dash need only appear in order. This crate
//! provides:
//!
//! - [`word`] / [`pattern`]: k-ary words, reduction, the dash notation, and
//!   the reverse/complement symmetries;
//! - [`matcher`]: occurrence detection, including role-constrained variants;
//! - [`enumeration`]: exact avoider counting (plain, prefix- and
//!   content-refined) and a Wilf-classification engine;
//! - [`bijections`]: explicit avoidance-set bijections between equivalent
//!   pattern classes, with inverses and stage traces;
//! - [`series`]: truncated power series over exact rationals, Chebyshev
//!   polynomials, elementary symmetric functions;
//! - [`genfun`]: closed-form and recurrence evaluation of avoidance
//!   generating functions, verified coefficient-by-coefficient against
//!   enumeration;
//! - [`suites`]: the self-check suites behind `vincular verify`.
//!
//! All counting is exact; series coefficients are arbitrary-precision
//! rationals. Enumeration kernels are data-parallel via rayon when the
//! `parallel` feature (default) is enabled, and fall back to sequential
//! loops without it.

pub mod bijections;
pub mod enumeration;
pub mod genfun;
pub mod matcher;
pub mod pattern;
pub mod series;
pub mod suites;
pub mod word;


pub use matcher::{contains, count_occurrences, find_occurrences, Occurrence};
pub use pattern::Pattern;

pub use word::Word;

/// Runs `f` over `items`, in parallel when the `parallel` feature is on.
///
/// Output order always matches input order, so results are deterministic
/// regardless of scheduling.
pub(crate) fn map_cells<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}
