use mottgate::chain::{locate_band_resonances, scatter_numeric, FiniteChainSpec};
use mottgate::dot::{landauer_conductance, transmission_full};
use mottgate::lattice::{
    compute_bands, gap_at_fermi, operating_window, BandStructure, ChainState, FermiGap,
};
use mottgate::materials::{
    contrast_vs_temperature, de_broglie_wavelength, find_material, validate_table, Gate,
    Observable, ThermalSpec,
};
use mottgate::validation::{run_all, CriterionResult};
use mottgate::{ClusterState, Error};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{flag, num, opt, Record};
use crate::scenario::{states, Pattern, Scenario};
use crate::Failure;

fn state_name(s: ClusterState) -> &'static str {
    match s {
        ClusterState::Ground => "ground",
        ClusterState::Excited => "excited",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DotRow {
    pub state: &'static str,
    pub lambda: f64,
    pub re_t: f64,
    pub im_t: f64,
    pub abs_t2: f64,
    /// Infinite at perfect transmission (`null` in JSON).
    pub sigma: f64,
    pub pole: bool,
}

impl Record for DotRow {
    fn header() -> &'static [&'static str] {
        &["state", "lambda", "re_t", "im_t", "abs_t2", "sigma", "pole"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.state.into(),
            num(self.lambda),
            num(self.re_t),
            num(self.im_t),
            num(self.abs_t2),
            num(self.sigma),
            flag(self.pole),
        ]
    }
}

pub fn dot_spectrum(sc: &Scenario, only: Option<ClusterState>) -> Result<Vec<DotRow>, Failure> {
    let grid: Vec<f64> = sc.grid().into_iter().filter(|x| *x > 0.0).collect();
    let mut rows = Vec::new();
    for state in states()
        .into_iter()
        .filter(|s| only.is_none_or(|o| o == *s))
    {
        let q = sc.cluster.q_function(state);
        // At a pole T has a removable limit, reported with the flag set.
        let part: Result<Vec<DotRow>, Failure> = grid
            .par_iter()
            .map(|&lambda| {
                let t = transmission_full(&sc.cluster, state, &sc.dot, lambda.sqrt())?;
                Ok(DotRow {
                    state: state_name(state),
                    lambda,
                    re_t: t.re,
                    im_t: t.im,
                    abs_t2: t.norm_sqr(),
                    sigma: landauer_conductance(t).value(),
                    pole: q.nearby_pole(lambda).is_some(),
                })
            })
            .collect();
        rows.extend(part?);
    }
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct BandRow {
    pub chain: &'static str,
    /// `band`, `gap` or `fermi_gap`.
    pub kind: &'static str,
    pub lo: f64,
    pub hi: f64,
    pub width: f64,
    pub lo_clipped: Option<bool>,
    pub hi_clipped: Option<bool>,
    pub width_ev: Option<f64>,
    pub operating_temperature_k: Option<f64>,
    pub mott_transition: Option<bool>,
}

impl Record for BandRow {
    fn header() -> &'static [&'static str] {
        &[
            "chain",
            "kind",
            "lo",
            "hi",
            "width",
            "lo_clipped",
            "hi_clipped",
            "width_ev",
            "operating_temperature_k",
            "mott_transition",
        ]
    }
    fn fields(&self) -> Vec<String> {
        let b = |x: Option<bool>| x.map(flag).unwrap_or_default();
        vec![
            self.chain.into(),
            self.kind.into(),
            num(self.lo),
            num(self.hi),
            num(self.width),
            b(self.lo_clipped),
            b(self.hi_clipped),
            opt(self.width_ev),
            opt(self.operating_temperature_k),
            b(self.mott_transition),
        ]
    }
}

fn listing(name: &'static str, bs: &BandStructure, e0: f64) -> Vec<BandRow> {
    let mut rows: Vec<BandRow> = bs
        .bands
        .iter()
        .map(|b| BandRow {
            chain: name,
            kind: "band",
            lo: b.lo,
            hi: b.hi,
            width: b.width(),
            lo_clipped: Some(b.lo_clipped),
            hi_clipped: Some(b.hi_clipped),
            width_ev: Some(b.width() * e0),
            operating_temperature_k: None,
            mott_transition: None,
        })
        .collect();
    rows.extend(bs.gaps.iter().map(|g| BandRow {
        chain: name,
        kind: "gap",
        lo: g.lo,
        hi: g.hi,
        width: g.width,
        lo_clipped: None,
        hi_clipped: None,
        width_ev: Some(g.width * e0),
        operating_temperature_k: None,
        mott_transition: None,
    }));
    rows.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    rows
}

pub fn bands(sc: &Scenario) -> Result<Vec<BandRow>, Failure> {
    let e0 = sc.energy_scale_ev;
    let mut rows = Vec::new();
    for (name, state) in [
        ("ground", ChainState::GroundPeriodL),
        ("excited", ChainState::ExcitedPeriod2L),
    ] {
        let bs = compute_bands(&sc.cluster, &sc.chain, state, sc.window)?;
        rows.extend(listing(name, &bs, e0));
    }
    let fermi = gap_at_fermi(&sc.cluster, &sc.chain, sc.chain_fermi)?;
    let (lo, hi, width) = match fermi {
        FermiGap::Gap { lo, hi, width, .. } => (lo, hi, width),
        FermiGap::NoGap { .. } => (sc.chain_fermi, sc.chain_fermi, 0.0),
    };
    let operating = if width > 0.0 && width.is_finite() {
        operating_window(width * e0).ok()
    } else {
        None
    };
    rows.push(BandRow {
        chain: "excited",
        kind: "fermi_gap",
        lo,
        hi,
        width,
        lo_clipped: None,
        hi_clipped: None,
        width_ev: Some(width * e0),
        operating_temperature_k: operating,
        mott_transition: Some(fermi.is_mott_transition()),
    });
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainRow {
    pub lambda: f64,
    pub abs_t2: Option<f64>,
    pub abs_r2: Option<f64>,
    pub unitarity_residual: Option<f64>,
    pub pole: bool,
    /// Located reflectionless energy rather than a grid point.
    pub resonance: bool,
}

impl Record for ChainRow {
    fn header() -> &'static [&'static str] {
        &[
            "lambda",
            "abs_t2",
            "abs_r2",
            "unitarity_residual",
            "pole",
            "resonance",
        ]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            num(self.lambda),
            opt(self.abs_t2),
            opt(self.abs_r2),
            opt(self.unitarity_residual),
            flag(self.pole),
            flag(self.resonance),
        ]
    }
}

fn chain_row(spec: &FiniteChainSpec, lambda: f64, resonance: bool) -> Result<ChainRow, Failure> {
    match scatter_numeric(spec, lambda.sqrt()) {
        Ok(r) => Ok(ChainRow {
            lambda,
            abs_t2: Some(r.t.norm_sqr()),
            abs_r2: Some(r.r.norm_sqr()),
            unitarity_residual: Some(r.unitarity_residual),
            pole: false,
            resonance,
        }),
        Err(Error::PoleHit { .. }) => Ok(ChainRow {
            lambda,
            abs_t2: None,
            abs_r2: None,
            unitarity_residual: None,
            pole: true,
            resonance,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Grid scan over the positive part of the window. For the ground pattern
/// the energies where the chain is reflectionless are located on each band
/// and merged into the listing.
pub fn chain_scan(sc: &Scenario, pattern: Pattern, cells: usize) -> Result<Vec<ChainRow>, Failure> {
    let spec = sc.chain_spec(pattern, cells)?;
    let mut energies: Vec<(f64, bool)> = sc
        .grid()
        .into_iter()
        .filter(|x| *x > 0.0)
        .map(|x| (x, false))
        .collect();
    if pattern == Pattern::Ground {
        let bs = compute_bands(&sc.cluster, &sc.chain, ChainState::GroundPeriodL, sc.window)?;
        for band in &bs.bands {
            energies.extend(
                locate_band_resonances(&spec, band)
                    .into_iter()
                    .filter(|x| *x > 0.0)
                    .map(|x| (x, true)),
            );
        }
        energies.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
    energies
        .par_iter()
        .map(|&(lambda, resonance)| chain_row(&spec, lambda, resonance))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub cells: usize,
    pub sites: usize,
    pub lambda: f64,
    pub ln_abs_t: f64,
    pub unitarity_residual: f64,
}

impl Record for SweepRow {
    fn header() -> &'static [&'static str] {
        &["cells", "sites", "lambda", "ln_abs_t", "unitarity_residual"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.cells.to_string(),
            self.sites.to_string(),
            num(self.lambda),
            num(self.ln_abs_t),
            num(self.unitarity_residual),
        ]
    }
}

pub fn chain_sweep(
    sc: &Scenario,
    pattern: Pattern,
    lambda: f64,
    max_cells: usize,
) -> Result<Vec<SweepRow>, Failure> {
    if !(lambda > 0.0) {
        return Err(Failure::Config(format!(
            "sweep energy must be positive, got {lambda}"
        )));
    }
    (1..=max_cells)
        .into_par_iter()
        .map(|n| {
            let spec = sc.chain_spec(pattern, n)?;
            let r = scatter_numeric(&spec, lambda.sqrt())?;
            Ok(SweepRow {
                cells: n,
                sites: spec.n_sites(),
                lambda,
                ln_abs_t: r.t.norm().ln(),
                unitarity_residual: r.unitarity_residual,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MaterialRow {
    pub name: String,
    pub m_e_ratio: f64,
    pub table_300k: f64,
    pub computed_300k: f64,
    pub rel_error_300k: f64,
    pub table_77k: f64,
    pub computed_77k: f64,
    pub rel_error_77k: f64,
}

impl Record for MaterialRow {
    fn header() -> &'static [&'static str] {
        &[
            "name",
            "m_e_ratio",
            "table_300k",
            "computed_300k",
            "rel_error_300k",
            "table_77k",
            "computed_77k",
            "rel_error_77k",
        ]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            num(self.m_e_ratio),
            num(self.table_300k),
            num(self.computed_300k),
            num(self.rel_error_300k),
            num(self.table_77k),
            num(self.computed_77k),
            num(self.rel_error_77k),
        ]
    }
}

pub const TABLE_TOLERANCE: f64 = 0.05;

pub fn materials_table() -> Vec<MaterialRow> {
    let table = mottgate::materials::material_table();
    validate_table()
        .into_iter()
        .zip(table)
        .map(|(c, r)| MaterialRow {
            name: c.name,
            m_e_ratio: r.m_e_ratio,
            table_300k: r.lambda_300k_angstrom,
            computed_300k: c.computed_300k,
            rel_error_300k: c.rel_error_300k,
            table_77k: r.lambda_77k_angstrom,
            computed_77k: c.computed_77k,
            rel_error_77k: c.rel_error_77k,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WavelengthRow {
    pub name: String,
    pub temperature_k: f64,
    pub wavelength_angstrom: f64,
}

impl Record for WavelengthRow {
    fn header() -> &'static [&'static str] {
        &["name", "temperature_k", "wavelength_angstrom"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            num(self.temperature_k),
            num(self.wavelength_angstrom),
        ]
    }
}

pub fn wavelength(name: &str, temperature_k: f64) -> Result<Vec<WavelengthRow>, Failure> {
    let m = find_material(name)?;
    Ok(vec![WavelengthRow {
        temperature_k,
        wavelength_angstrom: de_broglie_wavelength(m.m_e_ratio, temperature_k)?,
        name: m.name,
    }])
}

#[derive(Debug, Clone, Serialize)]
pub struct ThermalRow {
    pub temperature_k: f64,
    pub sigma_ground: f64,
    pub sigma_excited: f64,
    pub ratio: Option<f64>,
    pub divergent: bool,
}

impl Record for ThermalRow {
    fn header() -> &'static [&'static str] {
        &[
            "temperature_k",
            "sigma_ground",
            "sigma_excited",
            "ratio",
            "divergent",
        ]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            num(self.temperature_k),
            num(self.sigma_ground),
            num(self.sigma_excited),
            opt(self.ratio),
            flag(self.divergent),
        ]
    }
}

pub fn thermal(
    sc: &Scenario,
    gate: &Gate,
    fermi: f64,
    observable: Observable,
) -> Result<Vec<ThermalRow>, Failure> {
    let template = ThermalSpec::new(
        sc.temperatures_k[0],
        fermi,
        sc.energy_scale_ev,
        sc.window_kt,
    )?
    .with_quadrature(sc.quadrature);
    let rows: Result<Vec<Vec<ThermalRow>>, Failure> = sc
        .temperatures_k
        .par_iter()
        .map(|&t| {
            let pts = contrast_vs_temperature(gate, observable, &template, &[t])?;
            Ok(pts
                .into_iter()
                .map(|p| ThermalRow {
                    temperature_k: p.temperature_k,
                    divergent: p.sigma_ground.divergent || p.sigma_excited.divergent,
                    sigma_ground: p.sigma_ground.value,
                    sigma_excited: p.sigma_excited.value,
                    ratio: p.ratio,
                })
                .collect())
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionRow(pub CriterionResult);

impl Record for CriterionRow {
    fn header() -> &'static [&'static str] {
        &["id", "name", "passed", "detail"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.0.id.to_string(),
            self.0.name.clone(),
            flag(self.0.passed),
            self.0.detail.clone(),
        ]
    }
}

pub fn validate() -> Vec<CriterionRow> {
    run_all().into_iter().map(CriterionRow).collect()
}
