//! Finite sets and maps with chosen finite limits, plus the graded words
//! construction that carries the free-monoid monad.

mod atom;
mod finset;
mod graded;
mod limits;

pub use atom::Atom;
pub use finset::{AllMaps, FinMap, FinSetObj};
pub use graded::{bounded_words, graded_pullback_fiber, GradedFiber, GradedMap, GradedSet};
pub use limits::{
    equalizer, is_equalizer, is_kernel_pair, is_pullback_square, kernel_pair, kernel_triples,
    pullback, KernelPair, KernelTriples, Pullback, SquareVerdict,
};
