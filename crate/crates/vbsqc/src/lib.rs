//! Cluster states seen as valence bond solids.
//!
//! This crate provides the pieces needed to build graph/cluster states,
//! re-derive them as valence bond solids (bonds `|H⟩` plus local projectors),
//! drive gate teleportation off those bonds, and compile small gate circuits
//! into adaptive single-qubit measurement patterns whose execution is checked
//! against direct circuit simulation.
//!
//! The crate is organized around two interchangeable simulation backends:
//!
//! - [`statevec`]: a dense state-vector simulator, the ground-truth oracle
//!   for everything else (capped at [`statevec::MAX_DENSE_QUBITS`] qubits);
//! - [`stabilizer`]: a GF(2) tableau simulator for Clifford circuits and
//!   graph states, polynomial in the qubit count.
//!
//! On top of those sit [`vbs`] (projectors, bond algebra, materialization,
//! the hexagonal toy model), [`teleport`] (Bell- and GHZ-basis gate
//! teleportation with Pauli byproduct tracking), and [`mbqc`] (the circuit →
//! measurement-pattern compiler, pattern runners for both backends, and the
//! equivalence harness).

pub mod graph;
pub mod mbqc;
pub mod stabilizer;
pub mod statevec;
pub mod teleport;
pub mod vbs;

use rand::RngCore;

/// Where a measurement outcome comes from: forced to a branch index, or
/// sampled from a caller-supplied generator.
///
/// Forcing is rejected when the requested branch has probability below the
/// impossibility threshold of the operation in question.
pub enum OutcomeSource<'a> {
    /// Select this outcome index, failing if its probability is (numerically)
    /// zero.
    Forced(usize),
    /// Sample an outcome according to the Born probabilities.
    Random(&'a mut dyn RngCore),
}

impl<'a> OutcomeSource<'a> {
    /// Convenience constructor for forcing a single outcome bit.
    pub fn forced_bit(bit: bool) -> Self {
        OutcomeSource::Forced(usize::from(bit))
    }
}
