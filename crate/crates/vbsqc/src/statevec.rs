//! Dense n-qubit state vectors: gates, projective measurements in arbitrary
//! bases, reduced density matrices, and entropies.
//!
//! Qubit `i` addresses bit `i` of the basis index (little-endian), so
//! `basis_state(&[1, 0])` puts its single nonzero amplitude at index 1. That
//! convention is the single source of truth for tensor ordering across the
//! crate.

use nalgebra::{DMatrix, DVector, Matrix2};
use num_complex::Complex64;
use thiserror::Error;

use crate::graph::Graph;
use crate::OutcomeSource;

/// Hard cap on dense registers: 2^20 amplitudes (16 MiB of complex doubles).
pub const MAX_DENSE_QUBITS: usize = 20;

/// Forced outcomes with probability below this are treated as impossible
/// branches rather than rounding noise.
pub const BRANCH_EPSILON: f64 = 1e-12;

const UNITARY_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum StateError {
    #[error("qubit count must be >= 1")]
    InvalidDimension,
    #[error("register of {0} qubits exceeds the dense cap of {MAX_DENSE_QUBITS}")]
    TooLarge(usize),
    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("matrix is not unitary within {UNITARY_TOL}")]
    NotUnitary,
    #[error("measurement basis is not orthonormal and complete")]
    BadBasis,
    #[error("forced outcome {outcome} has probability {probability:.3e} (< {BRANCH_EPSILON})")]
    ZeroProbabilityBranch { outcome: usize, probability: f64 },
    #[error("qubit counts differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("subset must be nonempty and proper")]
    InvalidSubset,
}

/// A pure state of `n` qubits as 2^n complex amplitudes, kept unit-norm.
#[derive(Debug, Clone)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The zero-qubit register: a single amplitude 1. Useful as the starting
    /// point for measurement patterns that have no logical inputs.
    pub fn empty() -> Self {
        StateVector { n: 0, amps: vec![Complex64::new(1.0, 0.0)] }
    }

    /// `|+⟩^n`: every amplitude `2^(-n/2)`.
    pub fn plus_state(n: usize) -> Result<Self, StateError> {
        if n == 0 {
            return Err(StateError::InvalidDimension);
        }
        check_cap(n)?;
        let amp = Complex64::new(0.5f64.powf(n as f64 / 2.0), 0.0);
        Ok(StateVector { n, amps: vec![amp; 1 << n] })
    }

    /// Computational basis ket; `bits[i]` is the bit of qubit `i`.
    pub fn basis_state(bits: &[u8]) -> Result<Self, StateError> {
        let n = bits.len();
        if n == 0 {
            return Err(StateError::InvalidDimension);
        }
        check_cap(n)?;
        let mut index = 0usize;
        for (q, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(StateError::BadBasis);
            }
            index |= (b as usize) << q;
        }
        let mut amps = vec![Complex64::ZERO; 1 << n];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Build a state directly from amplitudes (normalizing); crate-internal.
    pub(crate) fn from_amps(n: usize, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n);
        let mut s = StateVector { n, amps };
        s.renormalize();
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn renormalize(&mut self) {
        let norm = self.norm();
        if norm > 0.0 {
            let inv = 1.0 / norm;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
    }

    fn check_qubit(&self, q: usize) -> Result<(), StateError> {
        if q >= self.n {
            Err(StateError::QubitOutOfRange { qubit: q, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Apply a single-qubit unitary to qubit `q`.
    pub fn apply_1q(&mut self, u: &Matrix2<Complex64>, q: usize) -> Result<(), StateError> {
        self.check_qubit(q)?;
        check_unitary2(u)?;
        self.apply_1q_unchecked(u, q);
        Ok(())
    }

    pub(crate) fn apply_1q_unchecked(&mut self, u: &Matrix2<Complex64>, q: usize) {
        let stride = 1usize << q;
        let len = self.amps.len();
        let mut base = 0;
        while base < len {
            for low in base..base + stride {
                let i0 = low;
                let i1 = low | stride;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = u[(0, 0)] * a0 + u[(0, 1)] * a1;
                self.amps[i1] = u[(1, 0)] * a0 + u[(1, 1)] * a1;
            }
            base += stride << 1;
        }
    }

    /// Controlled-Z between two distinct qubits (symmetric in its arguments).
    pub fn apply_cz(&mut self, q1: usize, q2: usize) -> Result<(), StateError> {
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        if q1 == q2 {
            return Err(StateError::QubitOutOfRange { qubit: q2, n: self.n });
        }
        let mask = (1usize << q1) | (1usize << q2);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *a = -*a;
            }
        }
        Ok(())
    }

    /// Pauli-X on qubit `q` (amplitude swap, no unitarity check needed).
    pub fn apply_x(&mut self, q: usize) -> Result<(), StateError> {
        self.check_qubit(q)?;
        let stride = 1usize << q;
        let mut base = 0;
        while base < self.amps.len() {
            for low in base..base + stride {
                self.amps.swap(low, low | stride);
            }
            base += stride << 1;
        }
        Ok(())
    }

    /// Pauli-Z on qubit `q`.
    pub fn apply_z(&mut self, q: usize) -> Result<(), StateError> {
        self.check_qubit(q)?;
        let stride = 1usize << q;
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & stride != 0 {
                *a = -*a;
            }
        }
        Ok(())
    }

    /// Append `k` fresh qubits (indices `n..n+k`) in the given `k`-qubit
    /// state: the result is `self ⊗ tail`.
    pub fn tensor(&self, tail: &StateVector) -> Result<StateVector, StateError> {
        let n = self.n + tail.n;
        check_cap(n)?;
        let mut amps = vec![Complex64::ZERO; 1 << n];
        for (j, &t) in tail.amps.iter().enumerate() {
            if t == Complex64::ZERO {
                continue;
            }
            let base = j << self.n;
            for (i, &s) in self.amps.iter().enumerate() {
                amps[base | i] = s * t;
            }
        }
        Ok(StateVector { n, amps })
    }

    /// Relabel qubits: `order[new] = old`. Must be a permutation of `0..n`.
    pub(crate) fn reorder_qubits(&self, order: &[usize]) -> StateVector {
        debug_assert_eq!(order.len(), self.n);
        let mut amps = vec![Complex64::ZERO; self.amps.len()];
        for (i, amp) in self.amps.iter().enumerate() {
            let mut j = 0usize;
            for (new, &old) in order.iter().enumerate() {
                j |= ((i >> old) & 1) << new;
            }
            amps[j] = *amp;
        }
        StateVector { n: self.n, amps }
    }

    /// Swap the labels of two qubits.
    pub fn swap_qubits(&mut self, a: usize, b: usize) -> Result<(), StateError> {
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        if a == b {
            return Ok(());
        }
        let (ba, bb) = (1usize << a, 1usize << b);
        for i in 0..self.amps.len() {
            let bit_a = i & ba != 0;
            let bit_b = i & bb != 0;
            if bit_a && !bit_b {
                let j = (i & !ba) | bb;
                self.amps.swap(i, j);
            }
        }
        Ok(())
    }

    /// Probability-weighted measurement of qubits `qs` in an orthonormal
    /// basis over their joint space.
    ///
    /// Basis kets have dimension `2^qs.len()` and are indexed little-endian
    /// over the listed qubits: bit `j` of a basis-ket index is qubit `qs[j]`.
    /// Returns `(outcome, probability, collapsed state)`; the collapsed state
    /// keeps all `n` qubits.
    pub fn measure_in_basis(
        &self,
        qs: &[usize],
        basis: &[DVector<Complex64>],
        source: OutcomeSource,
    ) -> Result<(usize, f64, StateVector), StateError> {
        self.check_measurement_args(qs, basis)?;
        check_orthonormal_complete(basis)?;
        let (outcome, probability, residual) = self.select_branch(qs, basis, source)?;
        // Re-embed |basis[outcome]⟩ on qs against the collapsed residual.
        let mut amps = vec![Complex64::ZERO; 1 << self.n];
        let ket = &basis[outcome];
        for (rest, &r) in residual.amps.iter().enumerate() {
            if r == Complex64::ZERO {
                continue;
            }
            for (b, kamp) in ket.iter().enumerate() {
                if *kamp == Complex64::ZERO {
                    continue;
                }
                amps[expand_index(rest, b, qs, self.n)] = r * kamp;
            }
        }
        Ok((outcome, probability, StateVector::from_amps(self.n, amps)))
    }

    /// Like [`measure_in_basis`](Self::measure_in_basis), but the measured
    /// qubits are removed from the register; the returned state has
    /// `n - qs.len()` qubits (remaining qubits keep their relative order).
    pub fn measure_and_remove(
        &self,
        qs: &[usize],
        basis: &[DVector<Complex64>],
        source: OutcomeSource,
    ) -> Result<(usize, f64, StateVector), StateError> {
        self.check_measurement_args(qs, basis)?;
        check_orthonormal_complete(basis)?;
        self.select_branch(qs, basis, source)
    }

    fn check_measurement_args(
        &self,
        qs: &[usize],
        basis: &[DVector<Complex64>],
    ) -> Result<(), StateError> {
        if qs.is_empty() || qs.len() >= self.n + 1 {
            return Err(StateError::InvalidSubset);
        }
        for &q in qs {
            self.check_qubit(q)?;
        }
        let mut sorted = qs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != qs.len() {
            return Err(StateError::InvalidSubset);
        }
        if basis.len() != 1 << qs.len() || basis.iter().any(|k| k.len() != 1 << qs.len()) {
            return Err(StateError::BadBasis);
        }
        Ok(())
    }

    fn select_branch(
        &self,
        qs: &[usize],
        basis: &[DVector<Complex64>],
        source: OutcomeSource,
    ) -> Result<(usize, f64, StateVector), StateError> {
        match source {
            OutcomeSource::Forced(outcome) => {
                if outcome >= basis.len() {
                    return Err(StateError::BadBasis);
                }
                let mut residual = self.project_residual(qs, &basis[outcome]);
                let probability = residual.norm().powi(2);
                if probability < BRANCH_EPSILON {
                    return Err(StateError::ZeroProbabilityBranch { outcome, probability });
                }
                residual.renormalize();
                Ok((outcome, probability, residual))
            }
            OutcomeSource::Random(rng) => {
                let residuals: Vec<StateVector> =
                    basis.iter().map(|k| self.project_residual(qs, k)).collect();
                let probs: Vec<f64> = residuals.iter().map(|r| r.norm().powi(2)).collect();
                let total: f64 = probs.iter().sum();
                // total ~ 1 for a complete basis; tolerate rounding.
                let mut draw = rand::Rng::random_range(rng, 0.0..1.0) * total;
                let mut outcome = probs.len() - 1;
                for (k, &p) in probs.iter().enumerate() {
                    if draw < p {
                        outcome = k;
                        break;
                    }
                    draw -= p;
                }
                let mut residual = residuals.into_iter().nth(outcome).unwrap();
                residual.renormalize();
                Ok((outcome, probs[outcome], residual))
            }
        }
    }

    /// Partial inner product `⟨ket|_qs |self⟩`, unnormalized, on the
    /// remaining qubits.
    fn project_residual(&self, qs: &[usize], ket: &DVector<Complex64>) -> StateVector {
        let k = qs.len();
        let m = self.n - k;
        let mut amps = vec![Complex64::ZERO; 1 << m];
        for (rest, amp) in amps.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for (b, kamp) in ket.iter().enumerate() {
                if *kamp == Complex64::ZERO {
                    continue;
                }
                acc += kamp.conj() * self.amps[expand_index(rest, b, qs, self.n)];
            }
            *amp = acc;
        }
        StateVector { n: m, amps }
    }

    /// `|⟨a|b⟩|²`; insensitive to global phase.
    pub fn fidelity_up_to_phase(&self, other: &StateVector) -> Result<f64, StateError> {
        if self.n != other.n {
            return Err(StateError::DimensionMismatch(self.n, other.n));
        }
        let overlap: Complex64 = self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(overlap.norm_sqr())
    }

    /// Entrywise comparison within `tol` (phase-sensitive).
    pub fn equal_exact(&self, other: &StateVector, tol: f64) -> Result<bool, StateError> {
        if self.n != other.n {
            return Err(StateError::DimensionMismatch(self.n, other.n));
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .all(|(a, b)| (a - b).norm() <= tol))
    }

    /// Reduced density matrix of `subset` (partial trace over its
    /// complement). Basis index bit `j` of the result is qubit `subset[j]`.
    pub fn reduced_density(&self, subset: &[usize]) -> Result<DensityMatrix, StateError> {
        if subset.is_empty() || subset.len() >= self.n {
            return Err(StateError::InvalidSubset);
        }
        for &q in subset {
            self.check_qubit(q)?;
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() {
            return Err(StateError::InvalidSubset);
        }
        let k = subset.len();
        let m = self.n - k;
        let mut rho = DMatrix::<Complex64>::zeros(1 << k, 1 << k);
        for rest in 0..1usize << m {
            for row in 0..1usize << k {
                let i = expand_index(rest, row, subset, self.n);
                let ai = self.amps[i];
                if ai == Complex64::ZERO {
                    continue;
                }
                for col in 0..1usize << k {
                    let j = expand_index(rest, col, subset, self.n);
                    rho[(row, col)] += ai * self.amps[j].conj();
                }
            }
        }
        Ok(DensityMatrix { k, matrix: rho })
    }

    /// Von Neumann entropy of `subset` in bits. Computed on the smaller of
    /// the subset and its complement (they agree for pure states).
    pub fn entropy_bits(&self, subset: &[usize]) -> Result<f64, StateError> {
        if subset.is_empty() || subset.len() >= self.n {
            return Err(StateError::InvalidSubset);
        }
        let side: Vec<usize> = if subset.len() * 2 <= self.n {
            subset.to_vec()
        } else {
            let inside: std::collections::BTreeSet<usize> = subset.iter().copied().collect();
            if inside.len() != subset.len() {
                return Err(StateError::InvalidSubset);
            }
            (0..self.n).filter(|q| !inside.contains(q)).collect()
        };
        Ok(self.reduced_density(&side)?.entropy_bits())
    }
}

/// Reduced density matrix on `k` qubits.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    k: usize,
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.diagonal().iter().sum()
    }

    /// Eigenvalues, clipped at zero (the matrix is Hermitian PSD up to
    /// rounding).
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .map(|&v| v.max(0.0))
            .collect()
    }

    /// `-Σ λ log2 λ` with `0·log 0 = 0`.
    pub fn entropy_bits(&self) -> f64 {
        self.eigenvalues()
            .into_iter()
            .filter(|&v| v > 0.0)
            .map(|v| -v * v.log2())
            .sum()
    }

    /// Check Hermiticity, unit trace, and PSD within `tol` (used by tests).
    pub fn validate(&self, tol: f64) -> bool {
        let h = (&self.matrix - self.matrix.adjoint()).norm();
        let t = (self.trace() - Complex64::new(1.0, 0.0)).norm();
        let min_eig = self
            .matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .fold(f64::INFINITY, |m, &v| m.min(v));
        h <= tol && t <= tol && min_eig >= -tol
    }
}

/// The cluster/graph state of `g`: `|+⟩^n` followed by one CZ per edge.
pub fn graph_state(g: &Graph) -> Result<StateVector, StateError> {
    check_cap(g.n())?;
    let mut s = StateVector::plus_state(g.n())?;
    for (u, v) in g.edges() {
        s.apply_cz(u, v)?;
    }
    Ok(s)
}

fn check_cap(n: usize) -> Result<(), StateError> {
    if n > MAX_DENSE_QUBITS {
        Err(StateError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn check_unitary2(u: &Matrix2<Complex64>) -> Result<(), StateError> {
    let prod = u.adjoint() * u;
    let id = Matrix2::<Complex64>::identity();
    if (prod - id).norm() > UNITARY_TOL {
        Err(StateError::NotUnitary)
    } else {
        Ok(())
    }
}

fn check_orthonormal_complete(basis: &[DVector<Complex64>]) -> Result<(), StateError> {
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let g: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            if (g - Complex64::new(expect, 0.0)).norm() > UNITARY_TOL {
                return Err(StateError::BadBasis);
            }
        }
    }
    Ok(())
}

/// Scatter `block` bits onto positions `qs` and `rest` bits onto the other
/// qubits (in ascending order), forming a full basis index.
fn expand_index(rest: usize, block: usize, qs: &[usize], n: usize) -> usize {
    let mut index = 0usize;
    let mut member = [false; 64];
    for (j, &q) in qs.iter().enumerate() {
        member[q] = true;
        index |= ((block >> j) & 1) << q;
    }
    let mut r = rest;
    for q in 0..n {
        if !member[q] {
            index |= (r & 1) << q;
            r >>= 1;
        }
    }
    index
}

/// Common 2x2 matrices, shared across modules and tests.
pub mod gates {
    use nalgebra::Matrix2;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    pub fn identity() -> Matrix2<Complex64> {
        Matrix2::identity()
    }

    pub fn pauli_x() -> Matrix2<Complex64> {
        Matrix2::new(c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.))
    }

    pub fn pauli_y() -> Matrix2<Complex64> {
        Matrix2::new(c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.))
    }

    pub fn pauli_z() -> Matrix2<Complex64> {
        Matrix2::new(c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.))
    }

    /// σ_α for α = 0..3 in the paper's ordering (identity, x, y, z).
    pub fn pauli(alpha: usize) -> Matrix2<Complex64> {
        match alpha {
            0 => identity(),
            1 => pauli_x(),
            2 => pauli_y(),
            3 => pauli_z(),
            _ => panic!("pauli index {alpha} out of range"),
        }
    }

    pub fn hadamard() -> Matrix2<Complex64> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Matrix2::new(c(h, 0.), c(h, 0.), c(h, 0.), c(-h, 0.))
    }

    pub fn phase_s() -> Matrix2<Complex64> {
        Matrix2::new(c(1., 0.), c(0., 0.), c(0., 0.), c(0., 1.))
    }

    /// `diag(1, e^{iθ})`.
    pub fn phase(theta: f64) -> Matrix2<Complex64> {
        Matrix2::new(c(1., 0.), c(0., 0.), c(0., 0.), Complex64::from_polar(1.0, theta))
    }

    /// `exp(-iθX/2)`.
    pub fn rx(theta: f64) -> Matrix2<Complex64> {
        let (s, co) = (theta / 2.0).sin_cos();
        Matrix2::new(c(co, 0.), c(0., -s), c(0., -s), c(co, 0.))
    }

    /// `exp(-iθZ/2)`.
    pub fn rz(theta: f64) -> Matrix2<Complex64> {
        Matrix2::new(
            Complex64::from_polar(1.0, -theta / 2.0),
            c(0., 0.),
            c(0., 0.),
            Complex64::from_polar(1.0, theta / 2.0),
        )
    }
}
