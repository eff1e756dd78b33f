//! Exact combinatorics of the oper stratification of the de Rham moduli
//! space of a compact Riemann surface.
//!
//! * [`vhs`] enumerates the admissible types of fixed points of the
//!   `C*`-action on the Higgs moduli space.
//! * [`chains`] checks the necessary stability conditions for holomorphic
//!   chains, of which VHS are the special case of an evenly spaced parameter.
//! * [`dims`] assigns dimensions to fixed-point components and strata.
//! * [`simpson3`] computes rank-3 Simpson limits from Harder-Narasimhan data.
//!
//! All arithmetic is on `i64` and exact rationals; nothing is floating point.

pub mod chains;
pub mod dims;
pub mod error;
pub mod rational;
pub mod simpson3;
pub mod types;
pub mod vhs;

pub use chains::{check_chain_necessary, higgs_parameter, vhs_to_chain, ChainCheckReport, Verdict};
pub use dims::{
    codim_nonstable_bound, dim_component, extremal_report, moduli_dims, strata_table, stratum_dim,
    DimReport, ModuliDims, StratumRow,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use simpson3::{
    iterate_step, simpson_limit_rank3, subbundle_degree_bound, validate_hn3, GradedType,
    Hn3Profile, SimpsonCase, SimpsonOutcome,
};
pub use types::{make_chain_type, ChainType, Genus, StabilityParam, VhsType};
pub use vhs::{check_vhs_admissible, enumerate_vhs_types, is_admissible, AdmissibilityReport};
