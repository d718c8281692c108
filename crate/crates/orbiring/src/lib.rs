//! orbiring: exact computation of inertial cohomology subrings of linear circle
//! actions and the rational Chen-Ruan cohomology rings of weighted projective
//! and weighted hyperprojective spaces.
//!
//! Everything is computed over exact arbitrary-precision rationals from a
//! single input datum, a [`CircleWeightSystem`]: a list of integer weights, an
//! ambient mode (the vector space itself, or its cotangent doubling), and a
//! cyclic sector-group order. The sector product is available through two
//! independent routes — the definitional obstruction-bundle computation and a
//! closed-form exponent formula — which the `check` suites require to agree.

pub mod cli;
pub mod comparator;
pub mod error;
pub mod inertial;
pub mod lattice;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod suites;
pub mod weights;

pub use comparator::{
    check_homotopy_theorem, distinguish, fingerprint, rep_homotopy_equivalent, DistinguishResult,
    Fingerprint, Verdict, Witness,
};
pub use error::Error;
pub use inertial::{
    inertial_presentation, inertial_product, obstruction_data, unit_product,
    unit_product_closed_form, InertialElement, InertialPresentation, ObstructionData,
    ProductMonomial, Relation,
};
pub use poly::UPoly;
pub use quotient::{
    conjectural_integral_algebra, cr_algebra, lattice_maps, multivariable_presentation,
    truncation_exponents, BasisElement, CoefficientTag, FiniteGradedAlgebra, KernelIdeal,
    LatticeMaps,
};
pub use rational::Rational;
pub use weights::{default_order, logweight, CircleWeightSystem, Mode, Sector};
