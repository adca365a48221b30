//! Scenario files: one JSON document. Energies carry a unit tag; couplings
//! and weights are dimensionless model parameters.

use mottgate::chain::FiniteChainSpec;
use mottgate::dot::CouplingSpec;
use mottgate::lattice::ChainCoupling;
use mottgate::materials::{Gate, Observable};
use mottgate::quad::QuadOptions;
use mottgate::{ClusterState, Complex64, Level, TwoStateCluster};
use serde::Deserialize;

pub const DEMO: &str = include_str!("../scenarios/demo.json");

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
pub enum Unit {
    #[serde(rename = "reduced")]
    Reduced,
    #[serde(rename = "eV")]
    Ev,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Energy {
    pub value: f64,
    pub unit: Unit,
}

impl Energy {
    fn reduced(self, scale_ev: f64) -> f64 {
        match self.unit {
            Unit::Reduced => self.value,
            Unit::Ev => self.value / scale_ev,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct LevelFile {
    energy: Energy,
    weight: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClusterFile {
    ground: LevelFile,
    excited: LevelFile,
    #[serde(default)]
    shared: Vec<LevelFile>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct DotFile {
    gamma00: f64,
    gamma01: [f64; 2],
    gamma11: f64,
    fermi_level: Energy,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    Alternating,
    Ground,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainFile {
    modulus: f64,
    phase: f64,
    cells: usize,
    period_length: f64,
    pattern: Pattern,
    fermi_level: Energy,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct WindowFile {
    lo: Energy,
    hi: Energy,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ThermalFile {
    temperatures_k: Vec<f64>,
    window_kt: f64,
    #[serde(default)]
    observable: Observable,
    #[serde(default)]
    quadrature: Option<QuadratureFile>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadratureFile {
    rel_tol: Option<f64>,
    max_intervals: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    energy_scale_ev: f64,
    cluster: ClusterFile,
    dot: DotFile,
    chain: ChainFile,
    window: WindowFile,
    grid_points: usize,
    thermal: ThermalFile,
}

/// Validated scenario in reduced units.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub energy_scale_ev: f64,
    pub cluster: TwoStateCluster,
    pub dot: CouplingSpec,
    pub dot_fermi: f64,
    pub chain: ChainCoupling,
    pub cells: usize,
    pub period_length: f64,
    pub pattern: Pattern,
    pub chain_fermi: f64,
    pub window: (f64, f64),
    pub grid_points: usize,
    pub temperatures_k: Vec<f64>,
    pub window_kt: f64,
    pub observable: Observable,
    pub quadrature: QuadOptions,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, String> {
        let f: ScenarioFile = serde_json::from_str(text).map_err(|e| format!("scenario: {e}"))?;
        let e0 = f.energy_scale_ev;
        if !(e0 > 0.0 && e0.is_finite()) {
            return Err(format!("energy_scale_ev must be positive, got {e0}"));
        }
        let level = |l: &LevelFile| Level::new(l.energy.reduced(e0), l.weight);
        let cluster = TwoStateCluster::new(
            level(&f.cluster.ground),
            level(&f.cluster.excited),
            f.cluster.shared.iter().map(level).collect(),
        )
        .map_err(|e| format!("cluster: {e}"))?;
        let dot = CouplingSpec::new(
            f.dot.gamma00,
            Complex64::new(f.dot.gamma01[0], f.dot.gamma01[1]),
            f.dot.gamma11,
        )
        .map_err(|e| format!("dot: {e}"))?;
        let chain = ChainCoupling::from_polar(f.chain.modulus, f.chain.phase)
            .map_err(|e| format!("chain: {e}"))?;
        if f.chain.cells == 0 {
            return Err("chain: cells must be at least 1".into());
        }
        if !(f.chain.period_length > 0.0 && f.chain.period_length.is_finite()) {
            return Err(format!(
                "chain: period_length must be positive, got {}",
                f.chain.period_length
            ));
        }
        let window = (f.window.lo.reduced(e0), f.window.hi.reduced(e0));
        if !(window.0 < window.1) || !window.0.is_finite() || !window.1.is_finite() {
            return Err(format!(
                "window [{}, {}] is empty or not finite",
                window.0, window.1
            ));
        }
        if f.grid_points < 2 {
            return Err("grid_points must be at least 2".into());
        }
        let temps = &f.thermal.temperatures_k;
        if temps.is_empty()
            || temps.iter().any(|t| !(*t > 0.0))
            || temps.windows(2).any(|w| !(w[0] < w[1]))
        {
            return Err("thermal: temperatures_k must be positive and strictly increasing".into());
        }
        if !(f.thermal.window_kt >= 10.0) {
            return Err(format!(
                "thermal: window_kt must be at least 10, got {}",
                f.thermal.window_kt
            ));
        }
        let mut quadrature = QuadOptions::default();
        if let Some(q) = &f.thermal.quadrature {
            if let Some(r) = q.rel_tol {
                if !(r > 0.0 && r < 1.0) {
                    return Err(format!("thermal: rel_tol must lie in (0, 1), got {r}"));
                }
                quadrature.rel_tol = r;
            }
            if let Some(m) = q.max_intervals {
                if m == 0 {
                    return Err("thermal: max_intervals must be at least 1".into());
                }
                quadrature.max_intervals = m;
            }
        }
        let dot_fermi = f.dot.fermi_level.reduced(e0);
        let chain_fermi = f.chain.fermi_level.reduced(e0);
        if !dot_fermi.is_finite() || !chain_fermi.is_finite() {
            return Err("Fermi levels must be finite".into());
        }
        Ok(Self {
            energy_scale_ev: e0,
            cluster,
            dot,
            dot_fermi,
            chain,
            cells: f.chain.cells,
            period_length: f.chain.period_length,
            pattern: f.chain.pattern,
            chain_fermi,
            window,
            grid_points: f.grid_points,
            temperatures_k: f.thermal.temperatures_k,
            window_kt: f.thermal.window_kt,
            observable: f.thermal.observable,
            quadrature,
        })
    }

    pub fn grid(&self) -> Vec<f64> {
        let (lo, hi) = self.window;
        let n = self.grid_points - 1;
        (0..=n)
            .map(|i| lo + (hi - lo) * i as f64 / n as f64)
            .collect()
    }

    /// Finite chain with the scenario pattern; `ground` chains have `2n` sites
    /// so both patterns have the same length.
    pub fn chain_spec(&self, pattern: Pattern, cells: usize) -> mottgate::Result<FiniteChainSpec> {
        match pattern {
            Pattern::Alternating => FiniteChainSpec::alternating(
                self.cluster.clone(),
                self.chain,
                cells,
                self.period_length,
            ),
            Pattern::Ground => FiniteChainSpec::ground(
                self.cluster.clone(),
                self.chain,
                2 * cells,
                self.period_length,
            ),
        }
    }

    pub fn dot_gate(&self) -> Gate {
        Gate::Dot {
            cluster: self.cluster.clone(),
            coupling: self.dot,
        }
    }

    pub fn chain_gate(&self) -> Gate {
        Gate::Chain {
            cluster: self.cluster.clone(),
            coupling: self.chain,
            cells: self.cells,
            period_length: self.period_length,
        }
    }
}

pub fn states() -> [ClusterState; 2] {
    [ClusterState::Ground, ClusterState::Excited]
}
