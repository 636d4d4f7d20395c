//! Quantum correlation quantifiers for two-qubit states.
//!
//! The crate covers four layers:
//!
//! * [`qstate`]: density operators, Bell-diagonal and Werner families, Bloch
//!   decomposition, partial traces and entropies.
//! * [`bases`]: parametrized local measurement bases, complementary bases,
//!   projective outcome distributions, dephasing and local rotations.
//! * [`correlations`]: closed forms for classical correlations, local
//!   available quantum correlations (LAQC), discord and concurrence.
//! * [`channels`]: Kraus channels applied identically to both qubits and the
//!   induced maps on Werner parameters.
//!
//! [`oracle`] re-derives the closed forms by exhaustive search over local
//! measurement angles and reports any disagreement as data.

pub mod bases;
pub mod channels;
pub mod correlations;
mod error;
pub mod linalg;
pub mod oracle;
pub mod qstate;

pub use bases::{
    complementary_qubit_basis, dephase_in_basis, joint_projective_distribution, local_qubit_basis,
    rotate_to_basis, ComplementaryAngles, JointDistribution, LocalBasisAngles, QubitBasis,
};
pub use channels::{
    apply_product_channel, correlation_trajectory, depolarized_werner_params, depolarizing_kraus,
    phase_damped_werner_params, phase_damping_kraus, ChannelKind, KrausChannel, TrajectoryPoint,
};
pub use correlations::{
    classical_correlations_bd, concurrence, concurrence_werner, correlation_entropy_function,
    discord_bd, discord_werner, full_report, laqc_bd, mutual_information, CorrelationReport,
};
pub use error::{Error, Result};
pub use oracle::{
    audit_closed_forms, brute_force_discord, maximize_laqc, minimize_relative_entropy_basis,
    AuditRecord, ClassicalSearch, GridSpec, OracleAngles, OracleResult,
};
pub use qstate::{
    bell_diagonal_state, bloch_compose, bloch_decompose, partial_trace, relative_entropy,
    validate_density, von_neumann_entropy, werner_state, BellDiagonalParams, BlochParams,
    DensityMatrix, SingleQubitState, Spectrum, Subsystem, ValidationReport, Violation,
};
