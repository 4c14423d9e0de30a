//! Measurement-based gate primitives: single-qubit gates by Bell measurement
//! on a bond, the two-qubit phase gate by GHZ-type three-qubit measurements,
//! and classical Pauli byproduct tracking.
//!
//! Every teleportation consumes fresh `|H⟩` bonds appended to the register
//! and leaves the logical qubit(s) back on their original wire indices, with
//! the outcome-dependent Pauli recorded in a [`ByproductFrame`] instead of
//! being corrected on the spot.

use nalgebra::{DVector, Matrix2};
use num_complex::Complex64;
use thiserror::Error;

use crate::statevec::{gates, StateError, StateVector};
use crate::vbs::bond_state;
use crate::OutcomeSource;

#[derive(Debug, Error)]
pub enum TeleportError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error("wire {wire} out of range for {n} wires")]
    WireOutOfRange { wire: usize, n: usize },
    #[error("gate does not conjugate Paulis to Paulis; adapt measurement bases instead")]
    CannotPush,
}

/// Pending Pauli byproducts, one `σ_x^x σ_z^z` left-factor per logical wire.
///
/// The frame is projective: global phases from reordering X against Z are
/// dropped, and composition is bitwise XOR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ByproductFrame {
    x: Vec<bool>,
    z: Vec<bool>,
}

impl ByproductFrame {
    pub fn identity(wires: usize) -> Self {
        ByproductFrame { x: vec![false; wires], z: vec![false; wires] }
    }

    pub fn wires(&self) -> usize {
        self.x.len()
    }

    /// `(x, z)` bits of the pending Pauli on `wire`.
    pub fn bits(&self, wire: usize) -> (bool, bool) {
        (self.x[wire], self.z[wire])
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(self.z.iter()).all(|&b| !b)
    }

    /// XOR a Pauli (as `(x, z)` bits) onto a wire.
    pub fn xor(&mut self, wire: usize, x: bool, z: bool) {
        self.x[wire] ^= x;
        self.z[wire] ^= z;
    }

    /// XOR `σ_α` (paper indexing: 0 = I, 1 = X, 2 = Y, 3 = Z) onto a wire.
    pub fn xor_pauli_index(&mut self, wire: usize, alpha: usize) {
        let (x, z) = match alpha {
            0 => (false, false),
            1 => (true, false),
            2 => (true, true),
            3 => (false, true),
            _ => panic!("pauli index {alpha} out of range"),
        };
        self.xor(wire, x, z);
    }

    /// The pending Pauli on `wire` as a matrix, up to global phase
    /// (`X^x Z^z`).
    pub fn pauli_matrix(&self, wire: usize) -> Matrix2<Complex64> {
        let mut m = Matrix2::identity();
        if self.x[wire] {
            m *= gates::pauli_x();
        }
        if self.z[wire] {
            m = if self.x[wire] { gates::pauli_x() * gates::pauli_z() } else { gates::pauli_z() };
        }
        m
    }

    /// Undo the recorded byproducts on a dense register whose qubit `w` is
    /// wire `w` (applies `Z^z` then `X^x`, the projective inverse).
    pub fn apply_inverse(&self, state: &mut StateVector) -> Result<(), StateError> {
        for w in 0..self.wires() {
            if self.z[w] {
                state.apply_z(w)?;
            }
            if self.x[w] {
                state.apply_x(w)?;
            }
        }
        Ok(())
    }
}

/// A gate being commuted past the byproduct frame.
pub enum FrameGate<'a> {
    /// CZ between two wires.
    Cz(usize, usize),
    /// A single-qubit gate on one wire.
    OneQubit(usize, &'a Matrix2<Complex64>),
}

/// The four Bell-type kets `(U†σ_α ⊗ 1)|H⟩`, α = 0..3, normalized.
///
/// Index bit 0 of each ket is the first tensor slot (the qubit carrying
/// `U†σ_α`), bit 1 the second.
pub fn bell_basis_for(u: &Matrix2<Complex64>) -> Result<Vec<DVector<Complex64>>, TeleportError> {
    check_unitary(u)?;
    let bond = bond_state();
    let mut kets = Vec::with_capacity(4);
    for alpha in 0..4 {
        let v = u.adjoint() * gates::pauli(alpha);
        let mut ket = DVector::<Complex64>::zeros(4);
        for b1 in 0..2 {
            for b0 in 0..2 {
                let mut acc = Complex64::ZERO;
                for c in 0..2 {
                    acc += v[(b0, c)] * bond.amps()[c + 2 * b1];
                }
                ket[b0 + 2 * b1] = acc;
            }
        }
        kets.push(ket);
    }
    Ok(kets)
}

/// Teleport wire `wire` through a fresh bond with the measurement basis
/// twisted by `u`: the wire ends up carrying `σ_α u |ψ⟩`, the returned index
/// is α, and the frame picks up `σ_α`. Every branch has probability 1/4.
pub fn teleport_1q(
    state: &StateVector,
    wire: usize,
    u: &Matrix2<Complex64>,
    source: OutcomeSource,
    frame: &ByproductFrame,
) -> Result<(StateVector, usize, ByproductFrame), TeleportError> {
    let n = state.n();
    if wire >= n {
        return Err(TeleportError::WireOutOfRange { wire, n });
    }
    let basis = bell_basis_for(u)?;
    let extended = state.tensor(&bond_state())?;
    // Bond halves sit at n (measured with the wire) and n+1 (the new carrier).
    let (alpha, _prob, reduced) = extended.measure_and_remove(&[wire, n], &basis, source)?;
    // After removal the carrier is the last qubit; put it back on `wire`.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for q in 0..n {
        order.push(match q.cmp(&wire) {
            std::cmp::Ordering::Less => q,
            std::cmp::Ordering::Equal => n - 1,
            std::cmp::Ordering::Greater => q - 1,
        });
    }
    let out = reduced.reorder_qubits(&order);
    let mut new_frame = frame.clone();
    new_frame.xor_pauli_index(wire, alpha);
    Ok((out, alpha, new_frame))
}

/// The 8-element GHZ-type basis `(σ_x^i ⊗ σ_x^j ⊗ 1)(|000⟩ ± |111⟩)/√2`.
///
/// Outcome index encodes `(i, j, s)` as `4i + 2j + s` with `s = 0` for `+`.
/// Index bit 0 of each ket is the first tensor slot.
pub fn ghz_basis() -> Vec<DVector<Complex64>> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut kets = Vec::with_capacity(8);
    for i in 0..2usize {
        for j in 0..2usize {
            for s in 0..2usize {
                let mut ket = DVector::<Complex64>::zeros(8);
                let lead = i + 2 * j;
                let tail = (1 - i) + 2 * (1 - j) + 4;
                ket[lead] = Complex64::new(r, 0.0);
                ket[tail] = Complex64::new(if s == 0 { r } else { -r }, 0.0);
                kets.push(ket);
            }
        }
    }
    kets
}

/// The two (identical) 8-ket bases used by the two 3-qubit measurements of
/// the phase-gate teleportation.
pub fn ghz_bases() -> (Vec<DVector<Complex64>>, Vec<DVector<Complex64>>) {
    (ghz_basis(), ghz_basis())
}

/// Decode a GHZ outcome index into `(i, j, s)`.
pub fn ghz_outcome_bits(alpha: usize) -> (bool, bool, bool) {
    (alpha >> 2 & 1 == 1, alpha >> 1 & 1 == 1, alpha & 1 == 1)
}

/// Teleport the two-wire phase gate: after the two GHZ measurements the
/// wires carry `(P_1 ⊗ P_2)(H ⊗ H)U_ph |ψ⟩`, with the outcome-dependent
/// Paulis `P_1, P_2` recorded in the frame.
///
/// Wiring (frozen; the regression test walks all 64 branches): three bonds
/// `B1, B2, B3` are appended; measurement 1 acts on `(wire1, B1a, B3a)`,
/// measurement 2 on `(wire2, B2a, B3b)`, with tensor slots in that order.
/// `B1b` and `B2b` become the new carriers of wire 1 and wire 2. Bond `B3`
/// bridges the two measured triples; `B1`/`B2` carry the outputs.
pub fn teleport_phase_gate(
    state: &StateVector,
    wire1: usize,
    wire2: usize,
    source1: OutcomeSource,
    source2: OutcomeSource,
    frame: &ByproductFrame,
) -> Result<(StateVector, (usize, usize), ByproductFrame), TeleportError> {
    let n = state.n();
    for wire in [wire1, wire2] {
        if wire >= n {
            return Err(TeleportError::WireOutOfRange { wire, n });
        }
    }
    if wire1 == wire2 {
        return Err(TeleportError::WireOutOfRange { wire: wire2, n });
    }
    let bond = bond_state();
    // Qubits n..n+5: B1a, B1b, B2a, B2b, B3a, B3b.
    let extended = state.tensor(&bond)?.tensor(&bond)?.tensor(&bond)?;
    let basis = ghz_basis();

    let (alpha1, _, after1) =
        extended.measure_and_remove(&[wire1, n, n + 4], &basis, source1)?;
    // Index map after removing {wire1, n, n+4}.
    let new_idx1 = |q: usize| q - [wire1, n, n + 4].iter().filter(|&&r| r < q).count();
    let (alpha2, _, after2) =
        after1.measure_and_remove(&[new_idx1(wire2), new_idx1(n + 2), new_idx1(n + 5)], &basis, source2)?;

    // Remaining original qubits, in order: wires except wire1/wire2, then
    // B1b, B2b (the last two). Route the carriers back onto wire1/wire2.
    let mut order = vec![0usize; n];
    let mut pos = 0usize;
    for q in 0..n {
        if q != wire1 && q != wire2 {
            order[q] = pos;
            pos += 1;
        }
    }
    order[wire1] = n - 2;
    order[wire2] = n - 1;
    let out = after2.reorder_qubits(&order);

    let (i1, j1, s1) = ghz_outcome_bits(alpha1);
    let (i2, j2, s2) = ghz_outcome_bits(alpha2);
    let mut new_frame = frame.clone();
    new_frame.xor(wire1, s1 ^ i2, j1 ^ i1);
    new_frame.xor(wire2, s2 ^ i1, j2 ^ i2);
    Ok((out, (alpha1, alpha2), new_frame))
}

/// Commute the frame past a gate: returns `frame'` with
/// `gate · (frame Paulis) = (frame' Paulis) · gate` up to global phase.
pub fn push_pauli(frame: &ByproductFrame, gate: &FrameGate) -> Result<ByproductFrame, TeleportError> {
    let mut out = frame.clone();
    match gate {
        FrameGate::Cz(a, b) => {
            let (xa, _) = frame.bits(*a);
            let (xb, _) = frame.bits(*b);
            // CZ (X ⊗ 1) CZ = X ⊗ Z: an x bit on one wire toggles z on the other.
            out.xor(*a, false, xb);
            out.xor(*b, false, xa);
        }
        FrameGate::OneQubit(wire, u) => {
            let x_image = pauli_bits_of(&conjugate(u, &gates::pauli_x()))?;
            let z_image = pauli_bits_of(&conjugate(u, &gates::pauli_z()))?;
            let (x, z) = frame.bits(*wire);
            let mut nx = false;
            let mut nz = false;
            if x {
                nx ^= x_image.0;
                nz ^= x_image.1;
            }
            if z {
                nx ^= z_image.0;
                nz ^= z_image.1;
            }
            out.x[*wire] = nx;
            out.z[*wire] = nz;
        }
    }
    Ok(out)
}

fn conjugate(u: &Matrix2<Complex64>, p: &Matrix2<Complex64>) -> Matrix2<Complex64> {
    u * p * u.adjoint()
}

/// Express a matrix as `phase · X^x Z^z` if it is a Pauli up to phase.
fn pauli_bits_of(m: &Matrix2<Complex64>) -> Result<(bool, bool), TeleportError> {
    let candidates = [
        ((false, false), gates::identity()),
        ((true, false), gates::pauli_x()),
        ((true, true), gates::pauli_y()),
        ((false, true), gates::pauli_z()),
    ];
    for ((x, z), p) in candidates {
        // |tr(P† M)| = 2 exactly when M ∝ P with a unit phase.
        let overlap = (p.adjoint() * m).trace();
        if (overlap.norm() - 2.0).abs() < 1e-9 {
            return Ok((x, z));
        }
    }
    Err(TeleportError::CannotPush)
}

fn check_unitary(u: &Matrix2<Complex64>) -> Result<(), TeleportError> {
    let prod = u.adjoint() * u;
    if (prod - Matrix2::<Complex64>::identity()).norm() > 1e-10 {
        return Err(TeleportError::State(StateError::NotUnitary));
    }
    Ok(())
}

/// `U_ph = diag(1, 1, 1, -1)` applied to a dense 2-qubit pair, for oracles.
pub fn apply_u_ph(state: &mut StateVector, a: usize, b: usize) -> Result<(), StateError> {
    state.apply_cz(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_unitary(rng: &mut ChaCha8Rng) -> Matrix2<Complex64> {
        // Haar-ish: random SU(2) angles plus a random global phase.
        let phi = rng.random_range(0.0..std::f64::consts::TAU);
        let u = gates::rz(rng.random_range(0.0..std::f64::consts::TAU))
            * gates::rx(rng.random_range(0.0..std::f64::consts::TAU))
            * gates::rz(rng.random_range(0.0..std::f64::consts::TAU));
        u * Complex64::from_polar(1.0, phi)
    }

    fn random_state(n: usize, rng: &mut ChaCha8Rng) -> StateVector {
        let amps: Vec<Complex64> = (0..1usize << n)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        StateVector::from_amps(n, amps)
    }

    #[test]
    fn bell_basis_orthonormal_for_random_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let u = random_unitary(&mut rng);
            let basis = bell_basis_for(&u).unwrap();
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let g: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((g - c(expect, 0.)).norm() < 1e-12, "gram ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn bell_basis_identity_element_zero_is_bond() {
        let basis = bell_basis_for(&gates::identity()).unwrap();
        let bond = bond_state();
        for (a, b) in basis[0].iter().zip(bond.amps()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn bell_basis_hadamard_element_zero() {
        // (H ⊗ 1)|H⟩, using H† = H.
        let basis = bell_basis_for(&gates::hadamard()).unwrap();
        let mut expect = bond_state();
        expect.apply_1q(&gates::hadamard(), 0).unwrap();
        for (a, b) in basis[0].iter().zip(expect.amps()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn bell_basis_rejects_non_unitary() {
        let bad = Matrix2::new(c(1., 0.), c(1., 0.), c(0., 0.), c(1., 0.));
        assert!(bell_basis_for(&bad).is_err());
    }

    #[test]
    fn identity_teleport_forced_alpha_zero() {
        let s = StateVector::basis_state(&[0]).unwrap();
        let frame = ByproductFrame::identity(1);
        let (out, alpha, frame) =
            teleport_1q(&s, 0, &gates::identity(), OutcomeSource::Forced(0), &frame).unwrap();
        assert_eq!(alpha, 0);
        assert!(frame.is_identity());
        assert!(out.equal_exact(&s, 1e-10).unwrap());
    }

    #[test]
    fn hadamard_teleport_forced_alpha_zero() {
        let s = StateVector::basis_state(&[0]).unwrap();
        let frame = ByproductFrame::identity(1);
        let (out, _, _) =
            teleport_1q(&s, 0, &gates::hadamard(), OutcomeSource::Forced(0), &frame).unwrap();
        let plus = StateVector::plus_state(1).unwrap();
        assert!(out.fidelity_up_to_phase(&plus).unwrap() > 1.0 - 1e-10);
    }

    #[test]
    fn all_branches_realize_sigma_alpha_u() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let u = random_unitary(&mut rng);
            let input = random_state(2, &mut rng);
            for wire in 0..2 {
                for alpha in 0..4 {
                    let frame = ByproductFrame::identity(2);
                    let extended = input.tensor(&bond_state()).unwrap();
                    let basis = bell_basis_for(&u).unwrap();
                    let (_, prob, _) = extended
                        .measure_and_remove(&[wire, 2], &basis, OutcomeSource::Forced(alpha))
                        .unwrap();
                    assert!((prob - 0.25).abs() < 1e-10, "branch probability {prob}");

                    let (out, got_alpha, new_frame) =
                        teleport_1q(&input, wire, &u, OutcomeSource::Forced(alpha), &frame).unwrap();
                    assert_eq!(got_alpha, alpha);
                    let mut expect = input.clone();
                    expect.apply_1q(&u, wire).unwrap();
                    expect.apply_1q(&gates::pauli(alpha), wire).unwrap();
                    let f = out.fidelity_up_to_phase(&expect).unwrap();
                    assert!(f > 1.0 - 1e-10, "alpha {alpha} wire {wire}: fidelity {f}");
                    // Frame bits match σ_α.
                    let expect_bits = match alpha {
                        0 => (false, false),
                        1 => (true, false),
                        2 => (true, true),
                        _ => (false, true),
                    };
                    assert_eq!(new_frame.bits(wire), expect_bits);
                }
            }
        }
    }

    #[test]
    fn teleport_spectator_wire_untouched() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let input = random_state(3, &mut rng);
        let frame = ByproductFrame::identity(3);
        let (out, _, _) =
            teleport_1q(&input, 1, &gates::identity(), OutcomeSource::Forced(0), &frame).unwrap();
        assert!(out.fidelity_up_to_phase(&input).unwrap() > 1.0 - 1e-10);
    }

    #[test]
    fn ghz_basis_orthonormal_and_indexed() {
        let basis = ghz_basis();
        assert_eq!(basis.len(), 8);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let g: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - c(expect, 0.)).norm() < 1e-12);
            }
        }
        // (i, j, s) = (0, 0, 0): (|000⟩ + |111⟩)/√2.
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((basis[0][0] - c(r, 0.)).norm() < 1e-15);
        assert!((basis[0][7] - c(r, 0.)).norm() < 1e-15);
        let (both, _) = ghz_bases();
        assert_eq!(both.len(), 8);
    }

    #[test]
    fn ghz_basis_closed_under_xx_relabeling() {
        // σ_x ⊗ σ_x ⊗ 1 maps ket (i,j,s) to ket (1-i, 1-j, s).
        let basis = ghz_basis();
        for idx in 0..8 {
            let (i, j, s) = ghz_outcome_bits(idx);
            let mut relabeled = DVector::<Complex64>::zeros(8);
            for b in 0..8usize {
                relabeled[b ^ 0b011] = basis[idx][b];
            }
            let target = 4 * usize::from(!i) + 2 * usize::from(!j) + usize::from(s);
            for (a, b) in relabeled.iter().zip(basis[target].iter()) {
                assert!((a - b).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn phase_gate_zero_outcomes_on_computational_inputs() {
        let frame = ByproductFrame::identity(2);
        // |00⟩ -> (H⊗H)U_ph|00⟩ = |++⟩.
        let s = StateVector::basis_state(&[0, 0]).unwrap();
        let (out, outcomes, f) = teleport_phase_gate(
            &s,
            0,
            1,
            OutcomeSource::Forced(0),
            OutcomeSource::Forced(0),
            &frame,
        )
        .unwrap();
        assert_eq!(outcomes, (0, 0));
        assert!(f.is_identity());
        let plus2 = StateVector::plus_state(2).unwrap();
        assert!(out.fidelity_up_to_phase(&plus2).unwrap() > 1.0 - 1e-10);

        // |11⟩ -> -(H⊗H)|11⟩ = -|--⟩ up to global phase.
        let s = StateVector::basis_state(&[1, 1]).unwrap();
        let (out, _, _) = teleport_phase_gate(
            &s,
            0,
            1,
            OutcomeSource::Forced(0),
            OutcomeSource::Forced(0),
            &frame,
        )
        .unwrap();
        let mut expect = StateVector::basis_state(&[1, 1]).unwrap();
        expect.apply_1q(&gates::hadamard(), 0).unwrap();
        expect.apply_1q(&gates::hadamard(), 1).unwrap();
        assert!(out.fidelity_up_to_phase(&expect).unwrap() > 1.0 - 1e-10);
    }

    #[test]
    fn phase_gate_all_64_branches_match_recorded_frame() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..3 {
            let input = random_state(2, &mut rng);
            for a1 in 0..8 {
                for a2 in 0..8 {
                    let frame = ByproductFrame::identity(2);
                    let (out, outcomes, new_frame) = teleport_phase_gate(
                        &input,
                        0,
                        1,
                        OutcomeSource::Forced(a1),
                        OutcomeSource::Forced(a2),
                        &frame,
                    )
                    .unwrap();
                    assert_eq!(outcomes, (a1, a2));
                    // Expected: (P1 ⊗ P2)(H⊗H)U_ph |ψ⟩ with P from the frame.
                    let mut expect = input.clone();
                    expect.apply_cz(0, 1).unwrap();
                    expect.apply_1q(&gates::hadamard(), 0).unwrap();
                    expect.apply_1q(&gates::hadamard(), 1).unwrap();
                    for w in 0..2 {
                        expect.apply_1q(&new_frame.pauli_matrix(w), w).unwrap();
                    }
                    let f = out.fidelity_up_to_phase(&expect).unwrap();
                    assert!(f > 1.0 - 1e-10, "branch ({a1},{a2}): fidelity {f}");
                }
            }
        }
    }

    #[test]
    fn push_pauli_cz_rule() {
        let mut frame = ByproductFrame::identity(2);
        frame.xor(0, true, false);
        let pushed = push_pauli(&frame, &FrameGate::Cz(0, 1)).unwrap();
        assert_eq!(pushed.bits(0), (true, false));
        assert_eq!(pushed.bits(1), (false, true));
        // Matrix identity: CZ(X⊗1) = (X⊗Z)CZ.
        let mut lhs = StateVector::plus_state(2).unwrap();
        lhs.apply_x(0).unwrap();
        lhs.apply_cz(0, 1).unwrap();
        let mut rhs = StateVector::plus_state(2).unwrap();
        rhs.apply_cz(0, 1).unwrap();
        rhs.apply_z(1).unwrap();
        rhs.apply_x(0).unwrap();
        assert!(lhs.equal_exact(&rhs, 1e-12).unwrap());
    }

    #[test]
    fn push_pauli_zero_frame_fixed() {
        let frame = ByproductFrame::identity(2);
        let pushed = push_pauli(&frame, &FrameGate::Cz(0, 1)).unwrap();
        assert!(pushed.is_identity());
        let h = gates::hadamard();
        let pushed = push_pauli(&frame, &FrameGate::OneQubit(0, &h)).unwrap();
        assert!(pushed.is_identity());
    }

    #[test]
    fn push_pauli_hadamard_swaps_x_and_z() {
        let mut frame = ByproductFrame::identity(1);
        frame.xor(0, true, false);
        let h = gates::hadamard();
        let pushed = push_pauli(&frame, &FrameGate::OneQubit(0, &h)).unwrap();
        assert_eq!(pushed.bits(0), (false, true));
    }

    #[test]
    fn push_pauli_conjugation_matrix_identities() {
        // For every frame bit pattern and a handful of Cliffords, check
        // gate · P = P' · gate up to global phase as 2x2 matrices.
        let cliffords = [gates::hadamard(), gates::phase_s(), gates::pauli_x(), gates::pauli_z()];
        for u in cliffords {
            for (x, z) in [(false, false), (true, false), (false, true), (true, true)] {
                let mut frame = ByproductFrame::identity(1);
                frame.xor(0, x, z);
                let pushed = push_pauli(&frame, &FrameGate::OneQubit(0, &u)).unwrap();
                let lhs = u * frame.pauli_matrix(0);
                let rhs = pushed.pauli_matrix(0) * u;
                // Compare up to global phase via the overlap magnitude.
                let overlap = (lhs.adjoint() * rhs).trace().norm();
                assert!((overlap - 2.0).abs() < 1e-12, "bits ({x},{z})");
            }
        }
    }

    #[test]
    fn push_pauli_rejects_non_clifford() {
        let mut frame = ByproductFrame::identity(1);
        frame.xor(0, true, false);
        let t = gates::phase(std::f64::consts::FRAC_PI_4);
        assert!(matches!(
            push_pauli(&frame, &FrameGate::OneQubit(0, &t)),
            Err(TeleportError::CannotPush)
        ));
    }
}
