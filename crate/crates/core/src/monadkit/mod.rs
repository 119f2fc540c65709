//! Monads on the shipped ambients, their laws, cartesianness and algebras.

mod algebra;
mod builtins;
mod cartesian;
mod dfib;
mod g;
mod galg;
mod monad;
mod tx;

pub use algebra::{algebras_on, is_algebra_hom, kernel_of_structure, tbar, tbar_functor, validate_algebra, Algebra};
pub use builtins::{list_grade_piece, FinMonoid, Identity, List, Maybe, Writer};
pub use cartesian::{
    certify_cartesian, certify_sigma_cartesian, CartesianCertificate, CONSERVATIVE, HALF, HYPER, MULT, PRESERVES,
    UNIT,
};
pub use dfib::{algebra_to_dfib, dfib_to_algebra};
pub use g::GMonad;
pub use galg::{g_algebra_to_groupoid, g_algebras_on_graph, groupoid_to_g_algebra, rich_check};
pub use monad::{probe_morphisms, validate_monad, Monad, Mor, Obj};
pub use tx::TxMonad;

#[cfg(test)]
mod tests;
