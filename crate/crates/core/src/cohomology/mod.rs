//! Cohomology rings `H*(G, k)`: composition products over minimal
//! resolutions, generator and relation discovery, the abelian closed form and
//! reductions for groups that are not `p`-groups.

mod discover;
mod lift;
mod presentation;
mod strategies;

pub use discover::{ring_presentation, ring_presentation_from};
pub use lift::{
    lift_cocycle, lift_cocycle_seeded, multiply_classes, product_with_lift, ChainMapLift,
    CohomologyClass,
};
pub use presentation::{
    hilbert_coeffs, kunneth_tensor, monomial_degree, monomial_product, monomial_string,
    monomials_of_degree, Generator, GeneratorKind, GradedRingPresentation, Relation,
};
pub use strategies::{
    abelian_closed_form, abelian_closed_form_of, ext_dims, invariant_subring_cyclic, lhs_strategy,
    select_strategy, CharacterActionData, Strategy,
};
