//! Browser bindings for the mottgate model. Every entry point takes plain
//! numbers and returns a JSON string; the page in `www/` draws the result.
//!
//! The cluster is a matched two-level one: switched poles at `alpha_g` and
//! `alpha_e` with equal residue.

use mottgate::chain::{scatter_numeric, FiniteChainSpec};
use mottgate::dot::transmission_simplified;
use mottgate::lattice::{compute_bands, gap_at_fermi, Band, ChainCoupling, ChainState, FermiGap};
use mottgate::{ClusterState, TwoStateCluster};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MAX_POINTS: usize = 20_000;

#[derive(Serialize)]
struct Spectrum {
    lambda: Vec<f64>,
    ground: Vec<Option<f64>>,
    excited: Vec<Option<f64>>,
}

#[derive(Serialize)]
struct Bands {
    ground: Vec<Band>,
    excited: Vec<Band>,
    fermi_gap: FermiGap,
    mott_transition: bool,
}

#[derive(Serialize)]
struct ChainScan {
    lambda: Vec<f64>,
    transmission: Vec<Option<f64>>,
}

fn cluster(alpha_g: f64, alpha_e: f64, residue: f64) -> Result<TwoStateCluster, String> {
    TwoStateCluster::matched_two_level(alpha_g, alpha_e, residue).map_err(|e| e.to_string())
}

fn grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>, String> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!("empty energy window [{lo}, {hi}]"));
    }
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(format!("points must lie in 2..={MAX_POINTS}"));
    }
    let n = (points - 1) as f64;
    Ok((0..points).map(|i| lo + (hi - lo) * i as f64 / n).collect())
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// `|T|²` of a single dot in both cluster states over positive energies.
/// Entries at `λ ≤ 0` are `null`.
pub fn dot_spectrum_json(
    alpha_g: f64,
    alpha_e: f64,
    residue: f64,
    g01sq: f64,
    lo: f64,
    hi: f64,
    points: usize,
) -> Result<String, String> {
    let c = cluster(alpha_g, alpha_e, residue)?;
    let lambda = grid(lo, hi, points)?;
    let curve = |state| -> Result<Vec<Option<f64>>, String> {
        lambda
            .iter()
            .map(|&l| {
                if l <= 0.0 {
                    return Ok(None);
                }
                transmission_simplified(&c, state, g01sq, l.sqrt())
                    .map(|t| Some(t.norm_sqr()))
                    .map_err(|e| e.to_string())
            })
            .collect()
    };
    json(&Spectrum {
        ground: curve(ClusterState::Ground)?,
        excited: curve(ClusterState::Excited)?,
        lambda,
    })
}

/// Bands of the ground and excited chains in `[lo, hi]` and the excited gap
/// around `fermi`.
#[allow(clippy::too_many_arguments)]
pub fn band_structure_json(
    alpha_g: f64,
    alpha_e: f64,
    residue: f64,
    modulus: f64,
    phase: f64,
    lo: f64,
    hi: f64,
    fermi: f64,
) -> Result<String, String> {
    let c = cluster(alpha_g, alpha_e, residue)?;
    let cp = ChainCoupling::from_polar(modulus, phase).map_err(|e| e.to_string())?;
    let bands = |state| {
        compute_bands(&c, &cp, state, (lo, hi))
            .map(|b| b.bands)
            .map_err(|e| e.to_string())
    };
    let fermi_gap = gap_at_fermi(&c, &cp, fermi).map_err(|e| e.to_string())?;
    json(&Bands {
        ground: bands(ChainState::GroundPeriodL)?,
        excited: bands(ChainState::ExcitedPeriod2L)?,
        mott_transition: fermi_gap.is_mott_transition(),
        fermi_gap,
    })
}

/// `|T|²` through a finite chain of `cells` cells: alternating
/// ground/excited when `excited` is set, otherwise `2·cells` ground sites.
/// Points at `λ ≤ 0`, on a pole, or where the system is singular are `null`.
#[allow(clippy::too_many_arguments)]
pub fn chain_transmission_json(
    alpha_g: f64,
    alpha_e: f64,
    residue: f64,
    modulus: f64,
    phase: f64,
    cells: usize,
    excited: bool,
    lo: f64,
    hi: f64,
    points: usize,
) -> Result<String, String> {
    let c = cluster(alpha_g, alpha_e, residue)?;
    let cp = ChainCoupling::from_polar(modulus, phase).map_err(|e| e.to_string())?;
    let spec = if excited {
        FiniteChainSpec::alternating(c, cp, cells, 1.0)
    } else {
        FiniteChainSpec::ground(c, cp, 2 * cells, 1.0)
    }
    .map_err(|e| e.to_string())?;
    let lambda = grid(lo, hi, points)?;
    let transmission = lambda
        .iter()
        .map(|&l| {
            (l > 0.0)
                .then(|| scatter_numeric(&spec, l.sqrt()).ok())
                .flatten()
                .map(|s| s.t.norm_sqr())
        })
        .collect();
    json(&ChainScan {
        lambda,
        transmission,
    })
}

#[wasm_bindgen]
pub fn dot_spectrum(
    alpha_g: f64,
    alpha_e: f64,
    residue: f64,
    g01sq: f64,
    lo: f64,
    hi: f64,
    points: usize,
) -> Result<String, JsValue> {
    dot_spectrum_json(alpha_g, alpha_e, residue, g01sq, lo, hi, points)
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn band_structure(
    alpha_g: f64,
    alpha_e: f64,
    residue: f64,
    modulus: f64,
    phase: f64,
    lo: f64,
    hi: f64,
    fermi: f64,
) -> Result<String, JsValue> {
    band_structure_json(alpha_g, alpha_e, residue, modulus, phase, lo, hi, fermi)
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn chain_transmission(
    alpha_g: f64,
    alpha_e: f64,
    residue: f64,
    modulus: f64,
    phase: f64,
    cells: usize,
    excited: bool,
    lo: f64,
    hi: f64,
    points: usize,
) -> Result<String, JsValue> {
    chain_transmission_json(
        alpha_g, alpha_e, residue, modulus, phase, cells, excited, lo, hi, points,
    )
    .map_err(|e| JsValue::from_str(&e))
}
