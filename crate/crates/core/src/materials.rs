//! Physical units: the semiconductor table, thermal de Broglie wavelengths,
//! and Fermi-averaged conductance of a gate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::chain::{scatter_numeric, FiniteChainSpec};
use crate::dot::{landauer_conductance, transmission_with_q, CouplingSpec};
use crate::lattice::ChainCoupling;
use crate::qfunc::{ClusterState, TwoStateCluster};
use crate::quad::{integrate, QuadOptions};
use crate::{Error, Result};

// CODATA 2018.
pub const HBAR: f64 = 1.054_571_817e-34;
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;
pub const BOLTZMANN_EV_PER_K: f64 = BOLTZMANN / ELECTRON_VOLT;

const TABLE: &str = include_str!("../data/materials.csv");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialRecord {
    pub name: String,
    pub e_gap_300k_ev: f64,
    pub m_e_ratio: f64,
    pub m_p_ratio: f64,
    pub epsilon: f64,
    pub lambda_300k_angstrom: f64,
    pub lambda_77k_angstrom: f64,
}

fn parse_table(text: &str) -> Result<Vec<MaterialRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut out: Vec<MaterialRecord> = Vec::new();
    for row in reader.deserialize() {
        let rec: MaterialRecord = row.map_err(|e| Error::Table(e.to_string()))?;
        let positive = [
            rec.m_e_ratio,
            rec.m_p_ratio,
            rec.epsilon,
            rec.lambda_300k_angstrom,
            rec.lambda_77k_angstrom,
        ];
        if positive.iter().any(|v| !(*v > 0.0)) {
            return Err(Error::Table(format!(
                "{}: masses, permittivity and wavelengths must be positive",
                rec.name
            )));
        }
        if out.iter().any(|r| r.name == rec.name) {
            return Err(Error::Table(format!("duplicate material {}", rec.name)));
        }
        out.push(rec);
    }
    Ok(out)
}

/// The bundled table.
pub fn material_table() -> Vec<MaterialRecord> {
    parse_table(TABLE).expect("bundled material table is well formed")
}

pub fn find_material(name: &str) -> Result<MaterialRecord> {
    material_table()
        .into_iter()
        .find(|r| r.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownMaterial(name.to_string()))
}

/// Thermal de Broglie wavelength `2πħ/√(2 m k_B T)` in ångström.
pub fn de_broglie_wavelength(m_ratio: f64, temperature_k: f64) -> Result<f64> {
    if !(m_ratio > 0.0) || !(temperature_k > 0.0) {
        return Err(Error::NonpositiveInput(format!(
            "mass ratio {m_ratio} and temperature {temperature_k} K must be positive"
        )));
    }
    let p = (2.0 * m_ratio * ELECTRON_MASS * BOLTZMANN * temperature_k).sqrt();
    Ok(std::f64::consts::TAU * HBAR / p * 1e10)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableCheck {
    pub name: String,
    pub computed_300k: f64,
    pub computed_77k: f64,
    pub rel_error_300k: f64,
    pub rel_error_77k: f64,
}

/// Computed wavelengths and their relative deviation from the table.
pub fn validate_table() -> Vec<TableCheck> {
    material_table()
        .into_iter()
        .map(|r| {
            let c300 = de_broglie_wavelength(r.m_e_ratio, 300.0).expect("positive table mass");
            let c77 = de_broglie_wavelength(r.m_e_ratio, 77.0).expect("positive table mass");
            TableCheck {
                rel_error_300k: (c300 - r.lambda_300k_angstrom) / r.lambda_300k_angstrom,
                rel_error_77k: (c77 - r.lambda_77k_angstrom) / r.lambda_77k_angstrom,
                computed_300k: c300,
                computed_77k: c77,
                name: r.name,
            }
        })
        .collect()
}

/// Temperature, Fermi level and the scale `E₀` (eV per reduced unit) for a
/// thermal average over `λ_F ± window_kt · k_BT`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalSpec {
    pub temperature_k: f64,
    pub fermi_level: f64,
    pub energy_scale_ev: f64,
    pub window_kt: f64,
    pub quadrature: QuadOptions,
}

impl ThermalSpec {
    pub fn new(
        temperature_k: f64,
        fermi_level: f64,
        energy_scale_ev: f64,
        window_kt: f64,
    ) -> Result<Self> {
        if !(temperature_k > 0.0) {
            return Err(Error::NonpositiveInput(format!(
                "temperature {temperature_k} K"
            )));
        }
        if !(energy_scale_ev > 0.0) {
            return Err(Error::NonpositiveInput(format!(
                "energy scale {energy_scale_ev} eV"
            )));
        }
        if !(window_kt >= 10.0) {
            return Err(Error::NonpositiveInput(format!(
                "window of {window_kt} k_BT is below 10"
            )));
        }
        if !fermi_level.is_finite() {
            return Err(Error::NonpositiveInput("Fermi level must be finite".into()));
        }
        Ok(Self {
            temperature_k,
            fermi_level,
            energy_scale_ev,
            window_kt,
            quadrature: QuadOptions::default(),
        })
    }

    pub fn with_quadrature(self, quadrature: QuadOptions) -> Self {
        Self { quadrature, ..self }
    }

    /// Same settings at another temperature.
    pub fn at_temperature(&self, temperature_k: f64) -> Result<Self> {
        Ok(Self::new(
            temperature_k,
            self.fermi_level,
            self.energy_scale_ev,
            self.window_kt,
        )?
        .with_quadrature(self.quadrature))
    }

    /// `k_B T` in reduced energy units.
    pub fn kt(&self) -> f64 {
        BOLTZMANN_EV_PER_K * self.temperature_k / self.energy_scale_ev
    }

    pub fn window(&self) -> (f64, f64) {
        let h = self.window_kt * self.kt();
        (self.fermi_level - h, self.fermi_level + h)
    }
}

/// `−∂f/∂λ` for the Fermi function, renormalized to unit mass on the window.
pub fn fermi_weight(lambda: f64, spec: &ThermalSpec) -> f64 {
    let kt = spec.kt();
    let x = (lambda - spec.fermi_level) / kt;
    if x.abs() > spec.window_kt {
        return 0.0;
    }
    let c = (0.5 * x).cosh();
    1.0 / (4.0 * kt * c * c) / (0.5 * spec.window_kt).tanh()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThermalAverage {
    pub value: f64,
    /// The profile has a non-integrable divergence in the window.
    pub divergent: bool,
    pub singular_points: Vec<f64>,
}

/// `σ̄ = ∫ σ(λ) (−∂f/∂λ) dλ` over the window, adaptive to relative accuracy
/// `1e-9`. `breaks` are extra points where the profile has kinks or poles.
pub fn mean_conductance<F: Fn(f64) -> f64>(
    profile: F,
    spec: &ThermalSpec,
    breaks: &[f64],
) -> Result<ThermalAverage> {
    let (lo, hi) = spec.window();
    let mut pts = vec![lo, spec.fermi_level, hi];
    pts.extend(breaks.iter().copied().filter(|b| *b > lo && *b < hi));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let r = integrate(
        |x| profile(x) * fermi_weight(x, spec),
        &pts,
        spec.quadrature,
    )?;
    Ok(ThermalAverage {
        value: r.value,
        divergent: r.divergent,
        singular_points: r.singular_points,
    })
}

/// What is averaged over the Fermi window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    /// `|T|²/(1 − |T|²)`.
    #[default]
    Landauer,
    /// `|T|²`.
    TransmissionProbability,
}

impl Observable {
    fn apply(self, t: Complex64) -> f64 {
        match self {
            Observable::Landauer => landauer_conductance(t).value(),
            Observable::TransmissionProbability => t.norm_sqr(),
        }
    }
}

/// A switch whose two occupation states are compared.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Gate {
    /// One cluster in the wire.
    Dot {
        cluster: TwoStateCluster,
        coupling: CouplingSpec,
    },
    /// `2·cells` clusters: all ground when off, alternating when excited.
    Chain {
        cluster: TwoStateCluster,
        coupling: ChainCoupling,
        cells: usize,
        period_length: f64,
    },
}

impl Gate {
    fn breaks(&self) -> Vec<f64> {
        let c = match self {
            Gate::Dot { cluster, .. } | Gate::Chain { cluster, .. } => cluster,
        };
        let mut b = c.all_poles();
        b.push(0.0);
        b
    }

    /// Observable at one energy for the gate in `state`; zero for `λ ≤ 0`.
    pub fn profile(&self, state: ClusterState, observable: Observable, lambda: f64) -> Result<f64> {
        if lambda <= 0.0 {
            return Ok(0.0);
        }
        let t = match self {
            Gate::Dot { cluster, coupling } => {
                transmission_with_q(&cluster.q_function(state), coupling, lambda.sqrt())
            }
            Gate::Chain {
                cluster,
                coupling,
                cells,
                period_length,
            } => {
                let spec = match state {
                    ClusterState::Ground => FiniteChainSpec::ground(
                        cluster.clone(),
                        *coupling,
                        2 * cells,
                        *period_length,
                    )?,
                    ClusterState::Excited => FiniteChainSpec::alternating(
                        cluster.clone(),
                        *coupling,
                        *cells,
                        *period_length,
                    )?,
                };
                match scatter_numeric(&spec, lambda.sqrt()) {
                    Ok(res) => res.t,
                    // A site at its pole blocks the chain.
                    Err(Error::PoleHit { .. }) => Complex64::new(0.0, 0.0),
                    Err(e) => return Err(e),
                }
            }
        };
        Ok(observable.apply(t))
    }

    pub fn mean(
        &self,
        state: ClusterState,
        observable: Observable,
        spec: &ThermalSpec,
    ) -> Result<ThermalAverage> {
        let failure = std::cell::RefCell::new(None);
        let avg = mean_conductance(
            |x| match self.profile(state, observable, x) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            },
            spec,
            &self.breaks(),
        );
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        avg
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContrastPoint {
    pub temperature_k: f64,
    pub sigma_ground: ThermalAverage,
    pub sigma_excited: ThermalAverage,
    /// `max/min` of the two averages, the minimum floored at `1e-30`;
    /// `None` when both diverge.
    pub ratio: Option<f64>,
}

pub const RATIO_FLOOR: f64 = 1e-30;

pub fn contrast_ratio(a: f64, b: f64) -> Option<f64> {
    if a.is_infinite() && b.is_infinite() || a.is_nan() || b.is_nan() {
        return None;
    }
    Some(a.max(b) / a.min(b).max(RATIO_FLOOR))
}

/// Ground/excited thermal averages over an ascending temperature grid.
/// Ground and excited averages on a temperature grid; `template` supplies
/// everything but the temperature.
pub fn contrast_vs_temperature(
    gate: &Gate,
    observable: Observable,
    template: &ThermalSpec,
    temperatures_k: &[f64],
) -> Result<Vec<ContrastPoint>> {
    if temperatures_k.is_empty() || temperatures_k.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::NonpositiveInput(
            "temperature grid must be ascending and nonempty".into(),
        ));
    }
    temperatures_k
        .iter()
        .map(|&t| {
            let spec = template.at_temperature(t)?;
            let g = gate.mean(ClusterState::Ground, observable, &spec)?;
            let e = gate.mean(ClusterState::Excited, observable, &spec)?;
            Ok(ContrastPoint {
                temperature_k: t,
                ratio: contrast_ratio(g.value, e.value),
                sigma_ground: g,
                sigma_excited: e,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn table_loads() {
        let t = material_table();
        assert_eq!(t.len(), 13);
        assert_eq!(find_material("HgTe").unwrap().e_gap_300k_ev, -0.117);
        assert!(matches!(
            find_material("Unobtainium"),
            Err(Error::UnknownMaterial(_))
        ));
    }

    #[test]
    fn wavelength_scaling() {
        let a = de_broglie_wavelength(0.07, 300.0).unwrap();
        let b = de_broglie_wavelength(0.07, 1200.0).unwrap();
        assert_relative_eq!(a / b, 2.0, epsilon = 1e-14);
        assert!(de_broglie_wavelength(0.0, 300.0).is_err());
        assert!(de_broglie_wavelength(0.1, -1.0).is_err());
    }

    #[test]
    fn weight_peak() {
        let s = ThermalSpec::new(300.0, 1.0, 0.1, 20.0).unwrap();
        assert_relative_eq!(fermi_weight(1.0, &s) * 4.0 * s.kt(), 1.0, epsilon = 1e-8);
        assert!(fermi_weight(1.0 + 10.0 * s.kt(), &s) < 1e-3 * fermi_weight(1.0, &s));
        assert_eq!(fermi_weight(1.0 + 21.0 * s.kt(), &s), 0.0);
    }

    #[test]
    fn thermal_spec_validation() {
        assert!(ThermalSpec::new(0.0, 1.0, 0.1, 12.0).is_err());
        assert!(ThermalSpec::new(10.0, 1.0, 0.1, 5.0).is_err());
        assert!(ThermalSpec::new(10.0, 1.0, -0.1, 12.0).is_err());
    }

    #[test]
    fn ratio_floor() {
        assert_relative_eq!(
            contrast_ratio(2.0, 0.0).unwrap(),
            2e30,
            max_relative = 1e-15
        );
        assert_eq!(contrast_ratio(f64::INFINITY, f64::INFINITY), None);
        assert_eq!(contrast_ratio(1.0, 4.0), Some(4.0));
    }
}
