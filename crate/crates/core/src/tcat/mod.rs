//! T-categories for a monad `T`: graphs whose domain leg lands in `T(X0)`,
//! their axioms, functors, and the translations to internal categories in
//! `Kl(T)`, over `X•`, and in points.

mod core;
mod embed;
mod gcat;
mod kl;
mod tx;
mod txt;

pub use self::core::*;
pub use embed::{
    arity, cat_embed, dec_tcat, is_operad, r_coreflection, r_counit, r_factor, tc_embed_algebra, tcat_pullback, DecTcat,
    Multicategory,
};
pub use gcat::{cat_to_gcat, gcat_to_cat, relabel_arrow_level};
pub use kl::{tcat_from_kl, tcat_to_kl, validate_kl_category};
pub use tx::{functor_to_tx_tcat, tx_tcat_to_functor};
pub use txt::{discrete_tfibrations_over, tfunctor_to_txt_algebra, txt_algebra_to_tfunctor, TxtMonad};

#[cfg(test)]
mod tests;
