//! Buchberger's algorithm and the ideal-theoretic questions built on it.

mod buchberger;
mod ideal;
mod kernel;
mod reduce;

pub use buchberger::{buchberger, GroebnerBasis, GroebnerConfig, DEFAULT_STEP_BUDGET};
pub use ideal::{elimination_basis, elimination_ideal, ideal_membership, normal_form, Ideal};
pub use kernel::{
    localized_subalgebra_membership, ringmap_kernel, subalgebra_membership, Membership, RingMap,
    Subalgebra,
};
