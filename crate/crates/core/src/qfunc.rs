//! Cluster model and its response function.
//!
//! A cluster carries a diagonal internal Hamiltonian. Which orbital is
//! occupied decides the pole set of the response
//!
//! ```text
//! Q(λ) = Σ_s w_s (1 + λ α_s) / (α_s − λ)
//! ```
//!
//! In the ground state the poles are `{α_e, α_1, α_2, …}`, in the excited
//! state `{α_g, α_1, α_2, …}`. The two responses differ by one pole only.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Evaluation closer than this (reduced energy) to a pole is refused.
pub const POLE_TOLERANCE: f64 = 1e-9;

/// Occupation of the cluster's lowest orbitals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClusterState {
    Ground,
    Excited,
}

impl ClusterState {
    pub fn other(self) -> Self {
        match self {
            ClusterState::Ground => ClusterState::Excited,
            ClusterState::Excited => ClusterState::Ground,
        }
    }
}

/// An orbital energy together with the squared overlap `|⟨h, φ⟩|²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub energy: f64,
    pub weight: f64,
}

impl Level {
    pub fn new(energy: f64, weight: f64) -> Self {
        Self { energy, weight }
    }

    /// Residue of `Q` at this pole, `w (1 + α²)`.
    pub fn residue(&self) -> f64 {
        self.weight * (1.0 + self.energy * self.energy)
    }
}

/// Rational Herglotz function given by its poles and weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QFunction {
    levels: Vec<Level>,
}

impl QFunction {
    /// Builds the function from levels with finite energies and positive
    /// weights. Levels are sorted by energy; duplicates are rejected.
    pub fn new(mut levels: Vec<Level>) -> Result<Self> {
        for l in &levels {
            if !l.energy.is_finite() || !l.weight.is_finite() || l.weight <= 0.0 {
                return Err(Error::InvalidCluster(format!(
                    "level ({}, {}) needs a finite energy and positive weight",
                    l.energy, l.weight
                )));
            }
        }
        levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
        if levels.windows(2).any(|w| w[0].energy == w[1].energy) {
            return Err(Error::InvalidCluster("repeated pole".into()));
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn poles(&self) -> impl Iterator<Item = f64> + '_ {
        self.levels.iter().map(|l| l.energy)
    }

    /// Pole within [`POLE_TOLERANCE`] of `lambda`, if any.
    pub fn nearby_pole(&self, lambda: f64) -> Option<f64> {
        self.poles().find(|p| (lambda - p).abs() < POLE_TOLERANCE)
    }

    pub fn eval(&self, lambda: Complex64) -> Result<Complex64> {
        for p in self.poles() {
            if (lambda - p).norm() < POLE_TOLERANCE {
                return Err(Error::PoleHit {
                    lambda: lambda.re,
                    pole: p,
                });
            }
        }
        Ok(self
            .levels
            .iter()
            .map(|l| l.weight * (1.0 + lambda * l.energy) / (l.energy - lambda))
            .sum())
    }

    pub fn eval_real(&self, lambda: f64) -> Result<f64> {
        if let Some(pole) = self.nearby_pole(lambda) {
            return Err(Error::PoleHit { lambda, pole });
        }
        Ok(self.eval_unchecked(lambda))
    }

    /// Real evaluation without the pole guard; infinite exactly at a pole.
    pub(crate) fn eval_unchecked(&self, lambda: f64) -> f64 {
        self.levels
            .iter()
            .map(|l| l.weight * (1.0 + lambda * l.energy) / (l.energy - lambda))
            .sum()
    }

    /// `dQ/dλ = Σ w_s (1 + α_s²) / (α_s − λ)²`, positive off the poles.
    pub fn derivative(&self, lambda: f64) -> f64 {
        self.levels
            .iter()
            .map(|l| l.residue() / ((l.energy - lambda) * (l.energy - lambda)))
            .sum()
    }

    /// `(c0, c1)` with `Q(λ) = c0 − c1/λ + O(λ⁻²)`: `c0 = −⟨Ah,h⟩`,
    /// `c1 = ⟨(I + A²)h,h⟩`.
    pub fn high_energy_moments(&self) -> (f64, f64) {
        let c0 = -self.levels.iter().map(|l| l.energy * l.weight).sum::<f64>();
        let c1 = self.levels.iter().map(Level::residue).sum();
        (c0, c1)
    }
}

/// A cluster with two switchable low orbitals and a common upper spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoStateCluster {
    ground: Level,
    excited: Level,
    shared: Vec<Level>,
}

impl TwoStateCluster {
    /// `ground` is `(α_g, w_g)`, `excited` is `(α_e, w_e)`; `shared` holds the
    /// higher orbitals common to both states, strictly ascending and above
    /// `α_e`.
    pub fn new(ground: Level, excited: Level, shared: Vec<Level>) -> Result<Self> {
        let mut all = Vec::with_capacity(shared.len() + 2);
        all.push(ground);
        all.push(excited);
        all.extend_from_slice(&shared);
        for l in &all {
            if !l.energy.is_finite() || !l.weight.is_finite() || l.weight <= 0.0 {
                return Err(Error::InvalidCluster(format!(
                    "level ({}, {}) needs a finite energy and positive weight",
                    l.energy, l.weight
                )));
            }
        }
        if all.windows(2).any(|w| w[0].energy >= w[1].energy) {
            return Err(Error::InvalidCluster(
                "levels must satisfy alpha_g < alpha_e < alpha_1 < alpha_2 < ...".into(),
            ));
        }
        Ok(Self {
            ground,
            excited,
            shared,
        })
    }

    /// Cluster without shared upper orbitals.
    pub fn two_level(alpha_g: f64, w_g: f64, alpha_e: f64, w_e: f64) -> Result<Self> {
        Self::new(
            Level::new(alpha_g, w_g),
            Level::new(alpha_e, w_e),
            Vec::new(),
        )
    }

    /// Two-level cluster whose switched poles carry the same residue `r`.
    pub fn matched_two_level(alpha_g: f64, alpha_e: f64, residue: f64) -> Result<Self> {
        Self::two_level(
            alpha_g,
            residue / (1.0 + alpha_g * alpha_g),
            alpha_e,
            residue / (1.0 + alpha_e * alpha_e),
        )
    }

    pub fn alpha_g(&self) -> f64 {
        self.ground.energy
    }

    pub fn alpha_e(&self) -> f64 {
        self.excited.energy
    }

    pub fn ground_level(&self) -> Level {
        self.ground
    }

    pub fn excited_level(&self) -> Level {
        self.excited
    }

    pub fn shared_levels(&self) -> &[Level] {
        &self.shared
    }

    /// Non-occupied orbitals of the given state, ascending.
    pub fn pole_levels(&self, state: ClusterState) -> Vec<Level> {
        let switched = match state {
            ClusterState::Ground => self.excited,
            ClusterState::Excited => self.ground,
        };
        std::iter::once(switched)
            .chain(self.shared.iter().copied())
            .collect()
    }

    pub fn q_function(&self, state: ClusterState) -> QFunction {
        QFunction {
            levels: self.pole_levels(state),
        }
    }

    pub fn q(&self, state: ClusterState, lambda: Complex64) -> Result<Complex64> {
        self.q_function(state).eval(lambda)
    }

    pub fn q_real(&self, state: ClusterState, lambda: f64) -> Result<f64> {
        self.q_function(state).eval_real(lambda)
    }

    pub fn high_energy_moments(&self, state: ClusterState) -> (f64, f64) {
        self.q_function(state).high_energy_moments()
    }

    /// Residue `w_s (1 + α_s²)` of the `index`-th pole (ascending) of the state.
    pub fn residue_at(&self, state: ClusterState, index: usize) -> Result<f64> {
        let levels = self.pole_levels(state);
        levels
            .get(index)
            .map(Level::residue)
            .ok_or(Error::IndexOutOfRange {
                index,
                len: levels.len(),
            })
    }

    /// Union of the pole sets of both states, ascending.
    pub fn all_poles(&self) -> Vec<f64> {
        std::iter::once(self.ground.energy)
            .chain(std::iter::once(self.excited.energy))
            .chain(self.shared.iter().map(|l| l.energy))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn single_pole() -> QFunction {
        QFunction::new(vec![Level::new(0.0, 1.0)]).unwrap()
    }

    #[test]
    fn single_pole_values() {
        let q = single_pole();
        assert_relative_eq!(q.eval_real(2.0).unwrap(), -0.5, epsilon = 1e-15);
        let at_i = q.eval(Complex64::i()).unwrap();
        assert_relative_eq!(at_i.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(at_i.im, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn large_energy_limit() {
        let q = QFunction::new(vec![Level::new(-0.3, 0.7), Level::new(1.1, 0.4)]).unwrap();
        let (c0, _) = q.high_energy_moments();
        assert_relative_eq!(c0, -(-0.3 * 0.7 + 1.1 * 0.4), epsilon = 1e-15);
        assert_relative_eq!(q.eval_real(1e9).unwrap(), c0, epsilon = 1e-8);
    }

    #[test]
    fn moments_by_hand() {
        assert_eq!(single_pole().high_energy_moments(), (0.0, 1.0));
        let q = QFunction::new(vec![Level::new(1.0, 1.0)]).unwrap();
        assert_eq!(q.high_energy_moments(), (-1.0, 2.0));
        let q = QFunction::new(vec![Level::new(-2.0, 0.3), Level::new(2.0, 0.3)]).unwrap();
        assert_eq!(q.high_energy_moments().0, 0.0);
    }

    #[test]
    fn residues() {
        let c = TwoStateCluster::new(
            Level::new(-1.0, 3.0),
            Level::new(0.0, 1.0),
            vec![Level::new(2.0, 0.5)],
        )
        .unwrap();
        assert_eq!(c.residue_at(ClusterState::Ground, 0).unwrap(), 1.0);
        assert_eq!(c.residue_at(ClusterState::Ground, 1).unwrap(), 2.5);
        assert_eq!(c.residue_at(ClusterState::Excited, 0).unwrap(), 6.0);
        assert_eq!(
            c.residue_at(ClusterState::Excited, 2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn pole_guard() {
        let q = single_pole();
        assert!(matches!(q.eval_real(5e-10), Err(Error::PoleHit { .. })));
        assert!(q.eval_real(2e-9).is_ok());
    }

    #[test]
    fn cluster_ordering_enforced() {
        assert!(TwoStateCluster::two_level(1.0, 1.0, 0.5, 1.0).is_err());
        assert!(TwoStateCluster::two_level(0.0, 1.0, 0.5, -1.0).is_err());
        assert!(TwoStateCluster::new(
            Level::new(0.0, 1.0),
            Level::new(1.0, 1.0),
            vec![Level::new(3.0, 1.0), Level::new(2.0, 1.0)]
        )
        .is_err());
    }

    #[test]
    fn states_differ_by_one_pole() {
        let c = TwoStateCluster::new(
            Level::new(0.2, 0.4),
            Level::new(0.9, 0.3),
            vec![Level::new(2.0, 0.5), Level::new(4.0, 0.1)],
        )
        .unwrap();
        let g: Vec<f64> = c.q_function(ClusterState::Ground).poles().collect();
        let e: Vec<f64> = c.q_function(ClusterState::Excited).poles().collect();
        assert_eq!(g, vec![0.9, 2.0, 4.0]);
        assert_eq!(e, vec![0.2, 2.0, 4.0]);
    }
}
