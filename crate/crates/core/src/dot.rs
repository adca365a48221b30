//! A single cluster attached to an infinite wire at `x = 0`.
//!
//! The wire wave is `T e^{ikx}` for `x < 0` and `e^{ikx} + R e^{−ikx}` for
//! `x > 0`. The boundary values of the wire and of the internal channel are
//! tied by a Hermitian matrix `γ`:
//!
//! ```text
//! −u(0) = γ00 [u'] + γ01 ξ₊,    ξ₋ = γ10 [u'] + γ11 ξ₊,    ξ₋ = Q(λ) ξ₊
//! ```
//!
//! which gives `T = 2ikB/(2ikB − 1)` with `B = γ00 − |γ01|²/(γ11 − Q)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::qfunc::{ClusterState, QFunction, TwoStateCluster};
use crate::{Error, Result};

/// `1 − |t|²` below this counts as perfect transmission.
pub const PERFECT_TRANSMISSION_TOLERANCE: f64 = 1e-12;

/// Dot–wire boundary matrix `[[γ00, γ01], [conj(γ01), γ11]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingSpec {
    gamma00: f64,
    gamma01: Complex64,
    gamma11: f64,
}

impl CouplingSpec {
    pub fn new(gamma00: f64, gamma01: Complex64, gamma11: f64) -> Result<Self> {
        if gamma01.norm() == 0.0 {
            return Err(Error::DegenerateCoupling);
        }
        if !(gamma00.is_finite() && gamma11.is_finite() && gamma01.is_finite()) {
            return Err(Error::InvalidCoupling("non-finite entry".into()));
        }
        Ok(Self {
            gamma00,
            gamma01,
            gamma11,
        })
    }

    /// Coupling without chemical shifts and a real positive `γ01 = √g01sq`.
    pub fn simplified(g01sq: f64) -> Result<Self> {
        if !(g01sq > 0.0) {
            return Err(Error::InvalidCoupling(format!(
                "|gamma01|^2 = {g01sq} must be positive"
            )));
        }
        Self::new(0.0, Complex64::new(g01sq.sqrt(), 0.0), 0.0)
    }

    pub fn gamma00(&self) -> f64 {
        self.gamma00
    }
    pub fn gamma01(&self) -> Complex64 {
        self.gamma01
    }
    pub fn gamma10(&self) -> Complex64 {
        self.gamma01.conj()
    }
    pub fn gamma11(&self) -> f64 {
        self.gamma11
    }
    pub fn g01sq(&self) -> f64 {
        self.gamma01.norm_sqr()
    }

    pub fn with_gamma11(self, gamma11: f64) -> Self {
        Self { gamma11, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringAmplitudes {
    pub t: Complex64,
    pub r: Complex64,
    pub lambda: f64,
}

impl ScatteringAmplitudes {
    pub fn unitarity_residual(&self) -> f64 {
        (self.t.norm_sqr() + self.r.norm_sqr() - 1.0).abs()
    }
}

fn check_momentum(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::NonpositiveMomentum(k))
    }
}

/// Transmission with the full boundary matrix. Denominators are cleared in
/// `D = γ11 − Q`, so `γ11 = Q(λ)` is an ordinary point; at a pole of `Q` the
/// removable limit `2ikγ00/(2ikγ00 − 1)` is returned.
pub fn transmission_full(
    cluster: &TwoStateCluster,
    state: ClusterState,
    coupling: &CouplingSpec,
    k: f64,
) -> Result<Complex64> {
    check_momentum(k)?;
    Ok(transmission_with_q(&cluster.q_function(state), coupling, k))
}

pub(crate) fn transmission_with_q(q: &QFunction, coupling: &CouplingSpec, k: f64) -> Complex64 {
    let ik2 = Complex64::new(0.0, 2.0 * k);
    let lambda = k * k;
    if q.nearby_pole(lambda).is_some() {
        let b = ik2 * coupling.gamma00;
        return b / (b - 1.0);
    }
    let d = coupling.gamma11 - q.eval_unchecked(lambda);
    let num = ik2 * (coupling.gamma00 * d - coupling.g01sq());
    num / (num - d)
}

/// `T = 2ik·g01sq / (2ik·g01sq − Q)`: the full transmission with
/// `γ00 = γ11 = 0`. Vanishes at the poles of `Q`, equals one at its zeros.
pub fn transmission_simplified(
    cluster: &TwoStateCluster,
    state: ClusterState,
    g01sq: f64,
    k: f64,
) -> Result<Complex64> {
    check_momentum(k)?;
    transmission_full(cluster, state, &CouplingSpec::simplified(g01sq)?, k)
}

pub fn reflection(t: Complex64) -> Complex64 {
    t - 1.0
}

pub fn scatter(
    cluster: &TwoStateCluster,
    state: ClusterState,
    coupling: &CouplingSpec,
    k: f64,
) -> Result<ScatteringAmplitudes> {
    let t = transmission_full(cluster, state, coupling, k)?;
    Ok(ScatteringAmplitudes {
        t,
        r: reflection(t),
        lambda: k * k,
    })
}

/// Internal-channel wave `Ψ = (A + i)/(A − λ) h ξ₊` with `h_s = √w_s`, one
/// entry per pole of the state, ascending.
///
/// `ξ₊ = γ10 [u'] / (Q − γ11)` and `[u'] = 2ik(1 − T)`.
pub fn internal_amplitude(
    cluster: &TwoStateCluster,
    state: ClusterState,
    coupling: &CouplingSpec,
    k: f64,
) -> Result<Vec<Complex64>> {
    check_momentum(k)?;
    let q = cluster.q_function(state);
    let lambda = k * k;
    let d = coupling.gamma11 - q.eval_real(lambda)?;
    let ik2 = Complex64::new(0.0, 2.0 * k);
    let xi_plus =
        -ik2 * coupling.gamma10() / (d * (1.0 - ik2 * coupling.gamma00) + ik2 * coupling.g01sq());
    Ok(q.levels()
        .iter()
        .map(|l| Complex64::new(l.energy, 1.0) / (l.energy - lambda) * l.weight.sqrt() * xi_plus)
        .collect())
}

/// Landauer conductance in units of `e²/ħ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Conductance {
    Finite(f64),
    Infinite,
}

impl Conductance {
    pub fn value(self) -> f64 {
        match self {
            Conductance::Finite(v) => v,
            Conductance::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Conductance::Infinite)
    }
}

/// `σ = |t|²/(1 − |t|²)`.
pub fn landauer_conductance(t: Complex64) -> Conductance {
    let p = t.norm_sqr();
    let rest = 1.0 - p;
    if rest <= PERFECT_TRANSMISSION_TOLERANCE {
        Conductance::Infinite
    } else {
        Conductance::Finite(p / rest)
    }
}

/// The `γ11` that cancels the constant term of `Q` at high energy,
/// `γ11 = −⟨Ah, h⟩`, making `T − 1 = O(k⁻³)`.
pub fn calibrate_chemical_shift(cluster: &TwoStateCluster, state: ClusterState) -> f64 {
    cluster.high_energy_moments(state).0
}

/// Conductance of the dot at real energy `lambda`; zero below the band
/// bottom of the wire.
pub fn conductance_at(
    cluster: &TwoStateCluster,
    state: ClusterState,
    coupling: &CouplingSpec,
    lambda: f64,
) -> Conductance {
    if lambda <= 0.0 {
        return Conductance::Finite(0.0);
    }
    landauer_conductance(transmission_with_q(
        &cluster.q_function(state),
        coupling,
        lambda.sqrt(),
    ))
}

/// `(σ_ground, σ_excited)` at the Fermi level.
pub fn switching_contrast(
    cluster: &TwoStateCluster,
    coupling: &CouplingSpec,
    lambda_f: f64,
) -> (Conductance, Conductance) {
    (
        conductance_at(cluster, ClusterState::Ground, coupling, lambda_f),
        conductance_at(cluster, ClusterState::Excited, coupling, lambda_f),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfunc::Level;
    use approx::assert_relative_eq;

    fn unit_pole() -> TwoStateCluster {
        // Ground-state pole at 0 with weight 1.
        TwoStateCluster::two_level(-1.0, 0.5, 0.0, 1.0).unwrap()
    }

    #[test]
    fn hand_value_at_unit_momentum() {
        let t = transmission_simplified(&unit_pole(), ClusterState::Ground, 1.0, 1.0).unwrap();
        let expect = Complex64::new(0.0, 2.0) / Complex64::new(1.0, 2.0);
        assert_relative_eq!(t.re, expect.re, epsilon = 1e-15);
        assert_relative_eq!(t.im, expect.im, epsilon = 1e-15);
        assert_relative_eq!(t.norm_sqr(), 0.8, epsilon = 1e-15);
        let r = reflection(t);
        assert_relative_eq!(t.norm_sqr() + r.norm_sqr(), 1.0, epsilon = 1e-15);
        match landauer_conductance(t) {
            Conductance::Finite(s) => assert_relative_eq!(s, 4.0, epsilon = 1e-12),
            Conductance::Infinite => panic!(),
        }
    }

    #[test]
    fn pole_limits() {
        let c = unit_pole();
        let tiny = 1e-6;
        let t = transmission_simplified(&c, ClusterState::Ground, 1.0, tiny).unwrap();
        assert!(t.norm() < 1e-5);
        let cp = CouplingSpec::new(0.3, Complex64::new(0.4, -0.2), 0.7).unwrap();
        let c2 = TwoStateCluster::two_level(0.5, 0.3, 2.0, 0.4).unwrap();
        let k = 2f64.sqrt();
        let at = transmission_full(&c2, ClusterState::Ground, &cp, k).unwrap();
        let b = Complex64::new(0.0, 2.0 * k * 0.3);
        assert_relative_eq!((at - b / (b - 1.0)).norm(), 0.0, epsilon = 1e-15);
        let near =
            transmission_full(&c2, ClusterState::Ground, &cp, (2.0f64 + 1e-7).sqrt()).unwrap();
        assert!((near - at).norm() < 1e-5);
    }

    #[test]
    fn degenerate_coupling_rejected() {
        assert_eq!(
            CouplingSpec::new(0.0, Complex64::new(0.0, 0.0), 0.0),
            Err(Error::DegenerateCoupling)
        );
    }

    #[test]
    fn landauer_cases() {
        assert_eq!(
            landauer_conductance(Complex64::new(0.0, 0.0)),
            Conductance::Finite(0.0)
        );
        assert_eq!(
            landauer_conductance(Complex64::new(0.6, 0.8)),
            Conductance::Infinite
        );
        assert_eq!(
            reflection(Complex64::new(1.0, 0.0)),
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            reflection(Complex64::new(0.0, 0.0)),
            Complex64::new(-1.0, 0.0)
        );
    }

    #[test]
    fn calibration_values() {
        assert_eq!(
            calibrate_chemical_shift(&unit_pole(), ClusterState::Ground),
            0.0
        );
        let c = TwoStateCluster::two_level(0.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(calibrate_chemical_shift(&c, ClusterState::Ground), -1.0);
        let c = TwoStateCluster::new(
            Level::new(-3.0, 1.0),
            Level::new(-2.0, 1.0),
            vec![Level::new(2.0, 1.0)],
        )
        .unwrap();
        assert_eq!(calibrate_chemical_shift(&c, ClusterState::Ground), 0.0);
    }

    #[test]
    fn contrast_at_excited_level() {
        let c = TwoStateCluster::matched_two_level(0.5, 1.0, 0.2).unwrap();
        let cp = CouplingSpec::simplified(0.5).unwrap();
        let (g, e) = switching_contrast(&c, &cp, 1.0);
        assert_eq!(g, Conductance::Finite(0.0));
        assert!(e.value() > 0.0);
        let (g, e) = switching_contrast(&c, &cp, 0.5);
        assert!(g.value() > 0.0);
        assert_eq!(e, Conductance::Finite(0.0));
    }

    #[test]
    fn internal_amplitude_at_perfect_transmission() {
        // Q has a zero at λ = 1 for a single pole at α = −1 (1 + λα = 0).
        // There 1 − T = 0 and (Q − γ11)⁻¹ diverges; the product stays finite.
        let c = TwoStateCluster::two_level(-2.0, 0.7, -1.0, 0.9).unwrap();
        let cp = CouplingSpec::simplified(0.8).unwrap();
        let t = transmission_full(&c, ClusterState::Ground, &cp, 1.0).unwrap();
        assert_relative_eq!(t.re, 1.0, epsilon = 1e-15);
        let amp = internal_amplitude(&c, ClusterState::Ground, &cp, 1.0).unwrap();
        let expect =
            -cp.gamma10() / cp.g01sq() * Complex64::new(-1.0, 1.0) / (-2.0) * 0.9f64.sqrt();
        assert_relative_eq!((amp[0] - expect).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn internal_amplitude_direct_product() {
        let c = TwoStateCluster::new(
            Level::new(0.2, 0.4),
            Level::new(0.9, 0.3),
            vec![Level::new(2.5, 0.6)],
        )
        .unwrap();
        let cp = CouplingSpec::new(0.15, Complex64::new(0.5, 0.3), -0.4).unwrap();
        let k = 1.3f64;
        let lambda = k * k;
        let amp = internal_amplitude(&c, ClusterState::Excited, &cp, k).unwrap();
        let t = transmission_full(&c, ClusterState::Excited, &cp, k).unwrap();
        let q = c.q_real(ClusterState::Excited, lambda).unwrap();
        let xi = cp.gamma10() * Complex64::new(0.0, 2.0 * k) * (1.0 - t) / (q - cp.gamma11());
        for (a, l) in amp.iter().zip(c.pole_levels(ClusterState::Excited)) {
            let direct = Complex64::new(l.energy, 1.0) / (l.energy - lambda) * l.weight.sqrt() * xi;
            assert_relative_eq!((a - direct).norm(), 0.0, epsilon = 1e-14);
        }
    }
}
