//! Explicit constructions: implicitization of polynomial curves, the
//! counterexample factory `A = Q[X1, Y, Z, T]/(X1^m Y - F(Z, T))`, its
//! classical instance `F = Z(Z+1)^n - T^n`, Winkelmann's derivation and a
//! single tower step.

mod bundle;
mod curve;
mod tower;
mod winkelmann;

pub use bundle::{
    build_counterexample, example_5_5, BundleDocument, BundleFlags, CounterexampleBundle,
    GeneratorStrings,
};
pub use curve::{implicitize, is_smooth_curve, map_degree, CurveParam};
pub use tower::{tower_step, TowerStep};
pub use winkelmann::{winkelmann_check, Winkelmann};
