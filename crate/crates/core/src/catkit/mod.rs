//! Internal categories, groupoids, functors, discrete (co)fibrations, the
//! Dec construction, and split epimorphisms with their cartesian class.

mod ambient;
mod dec;
mod enumerate;
mod functor;
mod groupoid;
mod internal;
mod pt;
mod simplicial;
mod slice;

pub use ambient::{lift_maps, probe_set, Ambient, FinSetCat};
pub use dec::{dec, dec_to_kernel_groupoid};
pub use enumerate::{category_structures, reflexive_graphs, small_categories};
pub use functor::{is_discrete_cofibration, is_discrete_fibration, InternalFunctor};
pub use groupoid::{
    check_presentation, groupoid_from_presentation, groupoid_square, invert, is_groupoid, presentation_of,
};
pub use internal::{InternalCategory, ReflexiveGraph};
pub use pt::{pt_is_cartesian, pt_square, PtCat, PtMorphism, PtObject};
pub use simplicial::{check_simplicial, Simplicial};
pub use slice::{SliceCat, SliceMor, SliceObj};

#[cfg(test)]
mod tests;
