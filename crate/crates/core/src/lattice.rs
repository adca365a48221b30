//! Infinite periodic chains of clusters.
//!
//! Neighbouring clusters are joined by `ξ₋ˢ = γ ξ₊ˢ⁻¹ + γ̄ ξ₊ˢ⁺¹`. A Bloch
//! solution `ξ₊ˢ⁺¹ = θ ξ₊ˢ` of the ground chain (period `L`) obeys
//!
//! ```text
//! Q_g(λ) = γ θ⁻¹ + γ̄ θ = 2|γ| cos(κ − φ),     θ = e^{iκ}, φ = arg γ
//! ```
//!
//! and the excited chain (alternating ground/excited sites, period `2L`)
//!
//! ```text
//! Q_g(λ) Q_e(λ) = 4|γ|² cos²(κ/2 − φ).
//! ```
//!
//! Bands are where these have unimodular solutions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::materials::BOLTZMANN_EV_PER_K;
use crate::qfunc::{ClusterState, QFunction, TwoStateCluster, POLE_TOLERANCE};
use crate::roots::first_at_least;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainCoupling {
    gamma: Complex64,
}

impl ChainCoupling {
    pub fn new(gamma: Complex64) -> Result<Self> {
        if !(gamma.norm() > 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidCoupling(format!(
                "chain coupling {gamma} must be finite and nonzero"
            )));
        }
        Ok(Self { gamma })
    }

    pub fn from_polar(modulus: f64, phi: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(modulus, phi))
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn modulus(&self) -> f64 {
        self.gamma.norm()
    }

    pub fn phi(&self) -> f64 {
        self.gamma.arg()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainState {
    GroundPeriodL,
    ExcitedPeriod2L,
}

/// Closed spectral band. Edges cut by the search window are flagged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
    pub lo_clipped: bool,
    pub hi_clipped: bool,
}

impl Band {
    pub fn contains(&self, lambda: f64) -> bool {
        self.lo <= lambda && lambda <= self.hi
    }

    pub fn is_complete(&self) -> bool {
        !self.lo_clipped && !self.hi_clipped
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gap {
    pub lo: f64,
    pub hi: f64,
    pub width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandStructure {
    pub state: ChainState,
    pub window: (f64, f64),
    pub bands: Vec<Band>,
    pub gaps: Vec<Gap>,
}

impl BandStructure {
    fn from_bands(state: ChainState, window: (f64, f64), bands: Vec<Band>) -> Self {
        let gaps = bands
            .windows(2)
            .map(|w| Gap {
                lo: w[0].hi,
                hi: w[1].lo,
                width: w[1].lo - w[0].hi,
            })
            .collect();
        Self {
            state,
            window,
            bands,
            gaps,
        }
    }

    pub fn band_containing(&self, lambda: f64) -> Option<&Band> {
        self.bands.iter().find(|b| b.contains(lambda))
    }
}

/// The two solutions of the dispersion quadratic at one energy.
///
/// In a band both are unimodular and `theta_plus` is the branch with
/// `Im(θ e^{−iφ'}) ≥ 0` (`φ' = φ` for the ground chain, `2φ` for the excited
/// chain). Off band `theta_plus` lies outside the unit circle and
/// `theta_minus` inside.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuasimomentumRoots {
    pub theta_plus: Complex64,
    pub theta_minus: Complex64,
}

impl QuasimomentumRoots {
    /// Solves `z + 1/z = 2x` and rotates by `e^{i rot}`.
    fn from_cos(x: f64, rot: f64) -> Self {
        let phase = Complex64::from_polar(1.0, rot);
        let (zp, zm) = if x.abs() <= 1.0 {
            let y = (1.0 - x * x).sqrt();
            (Complex64::new(x, y), Complex64::new(x, -y))
        } else {
            let out = x + x.signum() * (x * x - 1.0).sqrt();
            (Complex64::new(out, 0.0), Complex64::new(1.0 / out, 0.0))
        };
        Self {
            theta_plus: phase * zp,
            theta_minus: phase * zm,
        }
    }

    pub fn is_unimodular(&self, tol: f64) -> bool {
        (self.theta_plus.norm() - 1.0).abs() <= tol && (self.theta_minus.norm() - 1.0).abs() <= tol
    }

    /// Root strictly inside the unit circle, if any.
    pub fn inner(&self) -> Option<Complex64> {
        [self.theta_plus, self.theta_minus]
            .into_iter()
            .find(|t| t.norm() < 1.0)
    }
}

fn q_checked(q: &QFunction, lambda: f64) -> Result<f64> {
    q.eval_real(lambda)
}

/// Roots of `γ̄θ² − Q_g(λ)θ + γ = 0`.
pub fn ground_dispersion_roots(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda: f64,
) -> Result<QuasimomentumRoots> {
    let q = q_checked(&cluster.q_function(ClusterState::Ground), lambda)?;
    Ok(ground_roots_from_q(q, coupling))
}

pub(crate) fn ground_roots_from_q(q: f64, coupling: &ChainCoupling) -> QuasimomentumRoots {
    QuasimomentumRoots::from_cos(q / (2.0 * coupling.modulus()), coupling.phi())
}

/// Roots of `γ̄²θ² + (2|γ|² − Q_gQ_e)θ + γ² = 0`; `θ` advances one cell `2L`.
pub fn excited_dispersion_roots(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda: f64,
) -> Result<QuasimomentumRoots> {
    let s = excited_dispersion_value(cluster, coupling, lambda)?;
    Ok(excited_roots_from_s(s, coupling))
}

pub(crate) fn excited_roots_from_s(s: f64, coupling: &ChainCoupling) -> QuasimomentumRoots {
    QuasimomentumRoots::from_cos(2.0 * s - 1.0, 2.0 * coupling.phi())
}

/// `|Q_g(λ)| ≤ 2|γ|`.
pub fn ground_band_membership(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda: f64,
) -> Result<bool> {
    let q = q_checked(&cluster.q_function(ClusterState::Ground), lambda)?;
    Ok(q.abs() <= 2.0 * coupling.modulus())
}

/// `s = Q_g Q_e / (4|γ|²)`; the excited chain conducts iff `0 ≤ s ≤ 1`.
pub fn excited_dispersion_value(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda: f64,
) -> Result<f64> {
    let qg = q_checked(&cluster.q_function(ClusterState::Ground), lambda)?;
    let qe = q_checked(&cluster.q_function(ClusterState::Excited), lambda)?;
    Ok(qg * qe / (4.0 * coupling.modulus().powi(2)))
}

pub fn excited_band_membership(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda: f64,
) -> Result<bool> {
    let s = excited_dispersion_value(cluster, coupling, lambda)?;
    Ok((0.0..=1.0).contains(&s))
}

/// Real zeros of `q` strictly inside `(lo, hi)`, one per monotone branch at most.
fn zeros_in(q: &QFunction, lo: f64, hi: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for seg in segments(q.poles(), lo, hi) {
        let f = |x: f64| q.eval_unchecked(x);
        let (fa, fb) = seg.end_values(&f);
        if fa < 0.0 && fb > 0.0 {
            if let Some(z) = first_at_least(f, (seg.a, fa), (seg.b, fb), 0.0) {
                out.push(z);
            }
        }
    }
    out
}

/// Open interval between breakpoints; endpoints flagged when they are poles.
#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    a_pole: bool,
    b_pole: bool,
}

impl Segment {
    /// Endpoint values of an increasing function that diverges at poles.
    fn end_values<F: Fn(f64) -> f64>(&self, f: &F) -> (f64, f64) {
        let fa = if self.a_pole {
            f64::NEG_INFINITY
        } else {
            f(self.a)
        };
        let fb = if self.b_pole {
            f64::INFINITY
        } else {
            f(self.b)
        };
        (fa, fb)
    }
}

fn segments(poles: impl Iterator<Item = f64>, lo: f64, hi: f64) -> Vec<Segment> {
    let mut cuts: Vec<(f64, bool)> = vec![(lo, false)];
    cuts.extend(poles.filter(|p| *p > lo && *p < hi).map(|p| (p, true)));
    cuts.push((hi, false));
    cuts.sort_by(|x, y| x.0.total_cmp(&y.0));
    cuts.dedup_by(|x, y| x.0 == y.0);
    cuts.windows(2)
        .map(|w| Segment {
            a: w[0].0,
            b: w[1].0,
            a_pole: w[0].1,
            b_pole: w[1].1,
        })
        .collect()
}

/// Band `{x : t_lo ≤ g(x) ≤ t_hi}` on a segment where `g` increases.
fn band_on_segment<F: Fn(f64) -> f64>(
    g: F,
    (a, ga): (f64, f64),
    (b, gb): (f64, f64),
    t_lo: f64,
    t_hi: f64,
) -> Option<(f64, f64)> {
    let start = first_at_least(&g, (a, ga), (b, gb), t_lo)?;
    let end = if gb <= t_hi {
        b
    } else {
        // Largest x with g(x) ≤ t_hi coincides with the crossing.
        first_at_least(&g, (a, ga), (b, gb), t_hi).unwrap_or(b)
    };
    (start < end).then_some((start, end))
}

fn check_window(cluster: &TwoStateCluster, window: (f64, f64)) -> Result<()> {
    let (lo, hi) = window;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidWindow(lo, hi));
    }
    for p in cluster.all_poles() {
        for e in [lo, hi] {
            if (e - p).abs() < POLE_TOLERANCE {
                return Err(Error::WindowAtPole(e));
            }
        }
    }
    Ok(())
}

fn finish(raw: Vec<(f64, f64)>, state: ChainState, window: (f64, f64)) -> BandStructure {
    let mut bands: Vec<Band> = Vec::new();
    for (lo, hi) in raw {
        if let Some(last) = bands.last_mut() {
            if lo <= last.hi {
                last.hi = last.hi.max(hi);
                continue;
            }
        }
        bands.push(Band {
            lo,
            hi,
            lo_clipped: false,
            hi_clipped: false,
        });
    }
    for b in &mut bands {
        b.lo_clipped = b.lo == window.0;
        b.hi_clipped = b.hi == window.1;
    }
    BandStructure::from_bands(state, window, bands)
}

/// All bands of the chain inside `window`.
///
/// Between poles `Q` is strictly increasing, so on each monotone piece the
/// band condition cuts out a single interval whose edges are found by
/// bisection to full precision. For the excited chain the pieces are also
/// split at the zeros of `Q_g` and `Q_e`; on a piece where both have the same
/// sign the product is monotone.
pub fn compute_bands(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    state: ChainState,
    window: (f64, f64),
) -> Result<BandStructure> {
    check_window(cluster, window)?;
    let (lo, hi) = window;
    let qg = cluster.q_function(ClusterState::Ground);
    let two_g = 2.0 * coupling.modulus();
    let mut raw = Vec::new();
    match state {
        ChainState::GroundPeriodL => {
            for seg in segments(qg.poles(), lo, hi) {
                let f = |x: f64| qg.eval_unchecked(x);
                let (fa, fb) = seg.end_values(&f);
                if let Some(b) = band_on_segment(f, (seg.a, fa), (seg.b, fb), -two_g, two_g) {
                    raw.push(b);
                }
            }
        }
        ChainState::ExcitedPeriod2L => {
            let qe = cluster.q_function(ClusterState::Excited);
            let four_g2 = two_g * two_g;
            // (position, kind): 0 window edge, 1 pole, 2 zero
            let mut cuts: Vec<(f64, u8)> = vec![(lo, 0), (hi, 0)];
            for p in cluster.all_poles() {
                if p > lo && p < hi {
                    cuts.push((p, 1));
                }
            }
            for z in zeros_in(&qg, lo, hi)
                .into_iter()
                .chain(zeros_in(&qe, lo, hi))
            {
                cuts.push((z, 2));
            }
            cuts.sort_by(|x, y| x.0.total_cmp(&y.0));
            cuts.dedup_by(|x, y| x.0 == y.0);
            let p = |x: f64| qg.eval_unchecked(x) * qe.eval_unchecked(x);
            for w in cuts.windows(2) {
                let ((a, ka), (b, kb)) = (w[0], w[1]);
                let mid = 0.5 * (a + b);
                let (sg, se) = (qg.eval_unchecked(mid), qe.eval_unchecked(mid));
                if sg.signum() != se.signum() {
                    continue;
                }
                let dir = sg.signum();
                let g = |x: f64| dir * p(x);
                let end = |x: f64, kind: u8, left: bool| match kind {
                    1 => {
                        if left {
                            f64::NEG_INFINITY
                        } else {
                            f64::INFINITY
                        }
                    }
                    2 => 0.0,
                    _ => g(x),
                };
                let (ga, gb) = (end(a, ka, true), end(b, kb, false));
                let (t_lo, t_hi) = if dir > 0.0 {
                    (0.0, four_g2)
                } else {
                    (-four_g2, 0.0)
                };
                if let Some(band) = band_on_segment(g, (a, ga), (b, gb), t_lo, t_hi) {
                    raw.push(band);
                }
            }
        }
    }
    Ok(finish(raw, state, window))
}

/// Search window covering every pole with a generous margin.
pub fn default_window(cluster: &TwoStateCluster) -> (f64, f64) {
    let poles = cluster.all_poles();
    let (pmin, pmax) = (poles[0], poles[poles.len() - 1]);
    let margin = 10.0 * (1.0 + (pmax - pmin));
    (pmin - margin, pmax + margin)
}

/// Excited-chain gap around the Fermi level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FermiGap {
    /// `lo`/`hi` are the neighbouring band edges (infinite when the gap is
    /// unbounded on that side). `metallic_ground` marks a Fermi level inside
    /// a ground-chain band: metal when unexcited, insulator when excited.
    Gap {
        lo: f64,
        hi: f64,
        width: f64,
        metallic_ground: bool,
    },
    NoGap {
        metallic_ground: bool,
    },
}

impl FermiGap {
    pub fn metallic_ground(&self) -> bool {
        match *self {
            FermiGap::Gap {
                metallic_ground, ..
            }
            | FermiGap::NoGap { metallic_ground } => metallic_ground,
        }
    }

    /// Metal in the ground state and insulator in the excited state.
    pub fn is_mott_transition(&self) -> bool {
        matches!(
            self,
            FermiGap::Gap {
                metallic_ground: true,
                ..
            }
        )
    }

    pub fn width(&self) -> Option<f64> {
        match *self {
            FermiGap::Gap { width, .. } => Some(width),
            FermiGap::NoGap { .. } => None,
        }
    }
}

pub fn gap_at_fermi(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda_f: f64,
) -> Result<FermiGap> {
    let metallic_ground = ground_band_membership(cluster, coupling, lambda_f)?;
    if excited_band_membership(cluster, coupling, lambda_f)? {
        return Ok(FermiGap::NoGap { metallic_ground });
    }
    let (mut lo, mut hi) = default_window(cluster);
    lo = lo.min(lambda_f - 1.0);
    hi = hi.max(lambda_f + 1.0);
    let bands = compute_bands(cluster, coupling, ChainState::ExcitedPeriod2L, (lo, hi))?;
    let below = bands.bands.iter().rev().find(|b| b.hi < lambda_f);
    let above = bands.bands.iter().find(|b| b.lo > lambda_f);
    // A band reaching the window edge keeps going; past it Q_gQ_e is nearly
    // constant, so a gap that touches the window edge is unbounded.
    let g_lo = below.map_or(f64::NEG_INFINITY, |b| b.hi);
    let g_hi = above.map_or(f64::INFINITY, |b| b.lo);
    Ok(FermiGap::Gap {
        lo: g_lo,
        hi: g_hi,
        width: g_hi - g_lo,
        metallic_ground,
    })
}

/// Boundary values of the excited-chain Bloch solution at an energy inside
/// an excited band.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochBoundaryValues {
    /// `1/√|Q_g|`
    pub xi_g: f64,
    /// Modulus `1/√|Q_e|`; the phase follows from the cell equations.
    pub xi_e: Complex64,
    pub theta: Complex64,
    /// `arg θ` in `[0, 2π)`.
    pub kappa: f64,
}

/// Bloch vector for the branch `θ`: the ground-site value is `1/√|Q_g|` and
/// the excited-site value solves `Q_g ξ_g = (γ̄ + γθ⁻¹) ξ_e`.
pub(crate) fn bloch_for_theta(
    qg: f64,
    coupling: &ChainCoupling,
    theta: Complex64,
) -> (f64, Complex64) {
    let g = coupling.gamma();
    let xi_g = 1.0 / qg.abs().sqrt();
    let xi_e = xi_g * qg / (g.conj() + g / theta);
    (xi_g, xi_e)
}

pub fn bloch_boundary_values(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    lambda: f64,
) -> Result<BlochBoundaryValues> {
    let qg = cluster.q_real(ClusterState::Ground, lambda)?;
    let qe = cluster.q_real(ClusterState::Excited, lambda)?;
    if qg == 0.0 || qe == 0.0 {
        return Err(Error::ZeroQ(lambda));
    }
    let s = qg * qe / (4.0 * coupling.modulus().powi(2));
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::OutOfBand(lambda));
    }
    let theta = excited_roots_from_s(s, coupling).theta_plus;
    let (xi_g, xi_e) = bloch_for_theta(qg, coupling, theta);
    let kappa = theta.arg().rem_euclid(std::f64::consts::TAU);
    Ok(BlochBoundaryValues {
        xi_g,
        xi_e,
        theta,
        kappa,
    })
}

/// Decay rate per site, `−ln|θ_in|` per period `L`. The excited chain's
/// cell root decays over `2L`, so its per-site rate is half the cell rate.
pub fn gap_decay_rate(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    state: ChainState,
    lambda: f64,
) -> Result<f64> {
    let x = match state {
        ChainState::GroundPeriodL => {
            cluster.q_real(ClusterState::Ground, lambda)? / (2.0 * coupling.modulus())
        }
        ChainState::ExcitedPeriod2L => {
            2.0 * excited_dispersion_value(cluster, coupling, lambda)? - 1.0
        }
    };
    if x.abs() <= 1.0 {
        return Err(Error::InBand(lambda));
    }
    let per_root = x.abs().acosh();
    Ok(match state {
        ChainState::GroundPeriodL => per_root,
        ChainState::ExcitedPeriod2L => 0.5 * per_root,
    })
}

/// Highest temperature (K) at which the gate still works: `|δ|/(2k_B)`.
pub fn operating_window(delta_ev: f64) -> Result<f64> {
    if !(delta_ev > 0.0) {
        return Err(Error::NonpositiveGap(delta_ev));
    }
    Ok(delta_ev / (2.0 * BOLTZMANN_EV_PER_K))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_pole() -> TwoStateCluster {
        TwoStateCluster::two_level(-1.0, 0.5, 0.0, 1.0).unwrap()
    }

    fn real(g: f64) -> ChainCoupling {
        ChainCoupling::new(Complex64::new(g, 0.0)).unwrap()
    }

    #[test]
    fn roots_at_zero_q() {
        let r = ground_roots_from_q(0.0, &real(1.0));
        assert_relative_eq!((r.theta_plus - Complex64::i()).norm(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(
            (r.theta_minus + Complex64::i()).norm(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn roots_off_band() {
        let r = ground_roots_from_q(3.0, &real(1.0));
        assert_relative_eq!(
            r.inner().unwrap().norm(),
            (3.0 - 5f64.sqrt()) / 2.0,
            epsilon = 1e-15
        );
        let edge = ground_roots_from_q(2.0, &real(1.0));
        assert_eq!(edge.theta_plus, edge.theta_minus);
        assert!(edge.is_unimodular(1e-15));
    }

    #[test]
    fn membership_hand_values() {
        let c = unit_pole();
        assert!(ground_band_membership(&c, &real(1.0), 1.0).unwrap());
        assert!(!ground_band_membership(&c, &real(1.0), 0.1).unwrap());
        assert!(ground_band_membership(&c, &real(1.0), 0.5).unwrap());
    }

    #[test]
    fn single_pole_bands() {
        let bs = compute_bands(
            &unit_pole(),
            &real(1.0),
            ChainState::GroundPeriodL,
            (-10.0, 10.0),
        )
        .unwrap();
        assert_eq!(bs.bands.len(), 2);
        assert_eq!(bs.bands[0].lo, -10.0);
        assert!(bs.bands[0].lo_clipped);
        assert_relative_eq!(bs.bands[0].hi, -0.5, epsilon = 1e-15);
        assert_relative_eq!(bs.bands[1].lo, 0.5, epsilon = 1e-15);
        assert!(bs.bands[1].hi_clipped);
        assert_relative_eq!(bs.gaps[0].width, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn window_without_bands() {
        let bs = compute_bands(
            &unit_pole(),
            &real(1.0),
            ChainState::GroundPeriodL,
            (0.1, 0.3),
        )
        .unwrap();
        assert!(bs.bands.is_empty());
        assert!(bs.gaps.is_empty());
    }

    #[test]
    fn window_at_pole() {
        assert_eq!(
            compute_bands(
                &unit_pole(),
                &real(1.0),
                ChainState::GroundPeriodL,
                (0.0, 1.0)
            ),
            Err(Error::WindowAtPole(0.0))
        );
    }

    #[test]
    fn bloch_edge_and_half() {
        // s = 1 where the dispersion value reaches its edge; check the branch
        // conventions on synthetic s values.
        let cp = ChainCoupling::from_polar(0.7, 0.3).unwrap();
        let edge = excited_roots_from_s(1.0, &cp).theta_plus;
        assert_relative_eq!(edge.arg(), 0.6, epsilon = 1e-15);
        let half = excited_roots_from_s(0.5, &cp).theta_plus;
        assert_relative_eq!(
            half.arg(),
            std::f64::consts::FRAC_PI_2 + 0.6,
            epsilon = 1e-15
        );
        let (xg, _) = bloch_for_theta(4.0, &cp, half);
        assert_eq!(xg, 0.5);
    }

    #[test]
    fn decay_rate_values() {
        let c = unit_pole();
        // Q_g(λ) = −1/λ; λ = 1/3 gives |Q| = 3 with |γ| = 1.
        let r = gap_decay_rate(&c, &real(1.0), ChainState::GroundPeriodL, 1.0 / 3.0).unwrap();
        assert_relative_eq!(r, -((3.0 - 5f64.sqrt()) / 2.0).ln(), epsilon = 1e-12);
        assert_relative_eq!(r, 0.9624236501192069, epsilon = 1e-12);
        assert!(matches!(
            gap_decay_rate(&c, &real(1.0), ChainState::GroundPeriodL, 1.0),
            Err(Error::InBand(_))
        ));
    }

    #[test]
    fn operating_window_values() {
        assert_relative_eq!(operating_window(0.05).unwrap(), 290.1, epsilon = 0.1);
        assert_relative_eq!(operating_window(0.0133).unwrap(), 77.17, epsilon = 0.01);
        assert!(operating_window(0.0).is_err());
    }
}
