//! A finite chain of `N` clusters inserted into the wire on `[0, NL]`.
//!
//! The wire carries `T e^{ikx}` for `x < 0` and `e^{ikx} + R e^{−ikx}` for
//! `x > NL`. Site `s` has internal boundary values `ξ₋ˢ = Q_s(λ) ξ₊ˢ` and is
//! coupled to its neighbours by `ξ₋ˢ = γ ξ₊ˢ⁻¹ + γ̄ ξ₊ˢ⁺¹`, the wire ends
//! playing the role of sites `0` and `N + 1` with values `u'(0)` and
//! `−u'(NL)`; the wire values are `u(0) = γ̄ ξ₊¹` and `u(NL) = γ ξ₊ᴺ`.
//!
//! With unknowns `(T, ξ¹, …, ξᴺ, R)` the system is tridiagonal of size
//! `N + 2` and is solved directly. Closed forms for the periodic cases are
//! checked against that solve.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::lattice::{
    bloch_for_theta, excited_roots_from_s, ground_roots_from_q, Band, ChainCoupling,
};
use crate::linalg::Tridiagonal;
use crate::qfunc::{ClusterState, TwoStateCluster};
use crate::roots::bisect_with_ends;
use crate::{Error, Result};

/// Condition estimates above this are reported as a singular system.
pub const MAX_CONDITION: f64 = 1e14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteChainSpec {
    pub cluster: TwoStateCluster,
    pub coupling: ChainCoupling,
    pub pattern: Vec<ClusterState>,
    pub period_length: f64,
}

impl FiniteChainSpec {
    pub fn new(
        cluster: TwoStateCluster,
        coupling: ChainCoupling,
        pattern: Vec<ClusterState>,
        period_length: f64,
    ) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::InvalidChain("chain needs at least one site".into()));
        }
        if !(period_length > 0.0 && period_length.is_finite()) {
            return Err(Error::InvalidChain(format!(
                "period length {period_length} must be positive"
            )));
        }
        Ok(Self {
            cluster,
            coupling,
            pattern,
            period_length,
        })
    }

    /// `n` cells of (ground, excited): the optically excited chain, `N = 2n`.
    pub fn alternating(
        cluster: TwoStateCluster,
        coupling: ChainCoupling,
        n: usize,
        period_length: f64,
    ) -> Result<Self> {
        let pattern = [ClusterState::Ground, ClusterState::Excited].repeat(n);
        Self::new(cluster, coupling, pattern, period_length)
    }

    /// `n_sites` clusters all in the ground state.
    pub fn ground(
        cluster: TwoStateCluster,
        coupling: ChainCoupling,
        n_sites: usize,
        period_length: f64,
    ) -> Result<Self> {
        Self::new(
            cluster,
            coupling,
            vec![ClusterState::Ground; n_sites],
            period_length,
        )
    }

    pub fn n_sites(&self) -> usize {
        self.pattern.len()
    }

    pub fn with_sites(&self, pattern: Vec<ClusterState>) -> Result<Self> {
        Self::new(
            self.cluster.clone(),
            self.coupling,
            pattern,
            self.period_length,
        )
    }

    /// Number of (ground, excited) cells if the pattern alternates.
    pub fn alternating_cells(&self) -> Option<usize> {
        let n = self.pattern.len();
        let ok = n.is_multiple_of(2)
            && self
                .pattern
                .chunks(2)
                .all(|c| c == [ClusterState::Ground, ClusterState::Excited]);
        ok.then_some(n / 2)
    }

    pub fn is_all_ground(&self) -> bool {
        self.pattern.iter().all(|s| *s == ClusterState::Ground)
    }

    /// `e^{ikNL}`.
    fn phase(&self, k: Complex64) -> Complex64 {
        (Complex64::i() * k * (self.n_sites() as f64 * self.period_length)).exp()
    }
}

/// The assembled system `A x = b` with `x = (T, ξ¹, …, ξᴺ, R e^{−ikNL})`.
///
/// Scaling the last unknown keeps every matrix entry of order one when `k`
/// is complex.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSystem {
    pub matrix: Tridiagonal,
    pub rhs: Vec<Complex64>,
}

impl ChainSystem {
    pub fn dim(&self) -> usize {
        self.rhs.len()
    }
}

fn assemble(spec: &FiniteChainSpec, k: Complex64) -> Result<ChainSystem> {
    let lambda = k * k;
    let mut q_ground = None;
    let mut q_excited = None;
    let mut q_site = |state: ClusterState| -> Result<Complex64> {
        let slot = match state {
            ClusterState::Ground => &mut q_ground,
            ClusterState::Excited => &mut q_excited,
        };
        if slot.is_none() {
            *slot = Some(spec.cluster.q(state, lambda)?);
        }
        Ok(slot.unwrap())
    };
    let n = spec.n_sites();
    let g = spec.coupling.gamma();
    let gb = g.conj();
    let ik = Complex64::i() * k;
    let e = spec.phase(k);
    let mut m = Tridiagonal::zeros(n + 2);
    let mut rhs = vec![Complex64::new(0.0, 0.0); n + 2];
    // u(0) = γ̄ ξ¹ with u(0) = T
    m.d[0] = Complex64::new(-1.0, 0.0);
    m.du[0] = gb;
    for s in 1..=n {
        m.dl[s - 1] = if s == 1 { g * ik } else { g };
        m.d[s] = -q_site(spec.pattern[s - 1])?;
        m.du[s] = if s == n { gb * ik } else { gb };
    }
    rhs[n] = gb * ik * e;
    // u(NL) = γ ξᴺ with u(NL) = e^{ikNL} + R e^{−ikNL}
    m.dl[n] = g;
    m.d[n + 1] = Complex64::new(-1.0, 0.0);
    rhs[n + 1] = e;
    Ok(ChainSystem { matrix: m, rhs })
}

pub fn assemble_chain_system(spec: &FiniteChainSpec, k: f64) -> Result<ChainSystem> {
    if !(k > 0.0) {
        return Err(Error::NonpositiveMomentum(k));
    }
    assemble(spec, Complex64::new(k, 0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainScatteringResult {
    pub t: Complex64,
    pub r: Complex64,
    pub lambda: f64,
    pub unitarity_residual: f64,
    pub condition_estimate: f64,
}

struct Solved {
    t: Complex64,
    r: Complex64,
    /// `R e^{−2ikNL}`
    edge: Complex64,
    cond: f64,
}

fn solve(spec: &FiniteChainSpec, k: Complex64) -> Result<Solved> {
    let sys = assemble(spec, k)?;
    let lu = sys.matrix.factor()?;
    let cond = lu.condition_estimate();
    if !(cond < MAX_CONDITION) {
        return Err(Error::SingularSystem { condition: cond });
    }
    // Solving with the right side divided by e^{ikNL} keeps the unknowns
    // bounded when that phase is far from unimodular.
    let e = spec.phase(k);
    let rhs: Vec<Complex64> = sys.rhs.iter().map(|b| b / e).collect();
    let x = lu.solve(&rhs);
    let edge = x[x.len() - 1];
    Ok(Solved {
        t: e * x[0],
        r: e * e * edge,
        edge,
        cond,
    })
}

/// Direct solve of the boundary-value system at real momentum `k > 0`.
pub fn scatter_numeric(spec: &FiniteChainSpec, k: f64) -> Result<ChainScatteringResult> {
    if !(k > 0.0) {
        return Err(Error::NonpositiveMomentum(k));
    }
    let Solved {
        t,
        r,
        cond: condition_estimate,
        ..
    } = solve(spec, Complex64::new(k, 0.0))?;
    Ok(ChainScatteringResult {
        t,
        r,
        lambda: k * k,
        unitarity_residual: (t.norm_sqr() + r.norm_sqr() - 1.0).abs(),
        condition_estimate,
    })
}

/// Direct solve at complex momentum; returns `(T, R)`.
pub fn scatter_complex(spec: &FiniteChainSpec, k: Complex64) -> Result<(Complex64, Complex64)> {
    let s = solve(spec, k)?;
    Ok((s.t, s.r))
}

/// Reflection referred to the right end of the chain, `R e^{−2ikNL}`. For
/// non-real energies it converges geometrically as the chain grows.
pub fn edge_reflection(spec: &FiniteChainSpec, k: Complex64) -> Result<Complex64> {
    Ok(solve(spec, k)?.edge)
}

/// Closed-form value with the magnitudes of the quantities it divides by.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub value: Complex64,
    /// Normalized modulus of the `θ`-power combination in the denominator.
    pub denominator: f64,
    /// `min_j |ξ_e − ik γ̄ θ_j ξ_g|` over both Bloch branches (excited chain).
    pub junction_denominator: Option<f64>,
}

/// Denominators below this are flagged as numerically small.
pub const SMALL_DENOMINATOR: f64 = 1e-12;

struct ExcitedBranch {
    theta: Complex64,
    vg: Complex64,
    l: Complex64,
    r: Complex64,
}

fn excited_branches(spec: &FiniteChainSpec, k: f64) -> Result<(usize, [ExcitedBranch; 2], f64)> {
    let n = spec.alternating_cells().ok_or_else(|| {
        Error::OutOfDomain("closed form needs an alternating ground/excited pattern".into())
    })?;
    if !(k > 0.0) {
        return Err(Error::NonpositiveMomentum(k));
    }
    let lambda = k * k;
    let qg = spec.cluster.q_real(ClusterState::Ground, lambda)?;
    let qe = spec.cluster.q_real(ClusterState::Excited, lambda)?;
    if qg == 0.0 {
        return Err(Error::OutOfDomain(format!("Q_g vanishes at {lambda}")));
    }
    let cp = spec.coupling;
    let s = qg * qe / (4.0 * cp.modulus().powi(2));
    let roots = excited_roots_from_s(s, &cp);
    if roots.theta_plus == roots.theta_minus {
        return Err(Error::OutOfDomain(format!("band edge at {lambda}")));
    }
    let g = cp.gamma();
    let ik = Complex64::new(0.0, k);
    let branch = |theta: Complex64| {
        let vg = g.conj() + g / theta;
        let ve = Complex64::new(qg, 0.0);
        ExcitedBranch {
            theta,
            vg,
            l: ve - ik * g.conj() * theta * vg,
            r: ik * g * ve - theta * vg,
        }
    };
    let junction = [roots.theta_plus, roots.theta_minus]
        .into_iter()
        .map(|th| {
            let (xg, xe) = bloch_for_theta(qg, &cp, th);
            (xe - ik * g.conj() * th * xg).norm()
        })
        .fold(f64::INFINITY, f64::min);
    Ok((
        n,
        [branch(roots.theta_plus), branch(roots.theta_minus)],
        junction,
    ))
}

/// Transmission of `n` (ground, excited) cells from the two Bloch solutions
/// of the excited chain:
///
/// ```text
/// T = 2ikγ̄ e^{ikNL} (θ₁v₁/L₁ − θ₂v₂/L₂) / (θ₁ⁿR₁/L₁ − θ₂ⁿR₂/L₂)
/// ```
///
/// with `v_j = γ̄ + γθ_j⁻¹` the ground-site Bloch amplitude (excited-site
/// amplitude `Q_g`), `L_j = Q_g − ikγ̄θ_j v_j` and `R_j = ikγQ_g − θ_j v_j`.
pub fn transmission_closed_form(spec: &FiniteChainSpec, k: f64) -> Result<ClosedForm> {
    let (n, [b1, b2], junction) = excited_branches(spec, k)?;
    let ik = Complex64::new(0.0, k);
    let e = spec.phase(Complex64::new(k, 0.0));
    let gb = spec.coupling.gamma().conj();
    let num = 2.0 * ik * gb * e * (b1.theta * b1.vg / b1.l - b2.theta * b2.vg / b2.l);
    // Factor out the larger root power.
    let (big, small, sign) = if b1.theta.norm() >= b2.theta.norm() {
        (&b1, &b2, 1.0)
    } else {
        (&b2, &b1, -1.0)
    };
    let ratio = powi(small.theta / big.theta, n);
    let rest = sign * (big.r / big.l - ratio * small.r / small.l);
    let value = num * powi(big.theta, n).inv() / rest;
    let scale = (big.r / big.l).norm() + (small.r / small.l).norm();
    Ok(ClosedForm {
        value,
        denominator: rest.norm() / scale,
        junction_denominator: Some(junction),
    })
}

/// Leading term of the closed form inside an excited-chain gap, where
/// `|θ₁| < 1 < |θ₂|`:
///
/// ```text
/// T ≈ −2ikγ̄ e^{ikNL} (θ₁v₁L₂ − θ₂v₂L₁) / (L₁R₂) · θ₂⁻ⁿ
/// ```
pub fn gap_asymptotic_t(spec: &FiniteChainSpec, k: f64) -> Result<Complex64> {
    let (n, [outer, inner], _) = excited_branches(spec, k)?;
    if outer.theta.norm() <= 1.0 {
        return Err(Error::InBand(k * k));
    }
    let ik = Complex64::new(0.0, k);
    let e = spec.phase(Complex64::new(k, 0.0));
    let gb = spec.coupling.gamma().conj();
    Ok(
        -2.0 * ik * gb * e * (inner.theta * inner.vg * outer.l - outer.theta * outer.vg * inner.l)
            / (inner.l * outer.r)
            * powi(outer.theta, n).inv(),
    )
}

fn powi(z: Complex64, n: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut base = z;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// `(θ₁, θ₂, [Δ₁, Δ₂, Δ₃, Δ₄])` for the ground chain:
///
/// ```text
/// Δ₁ = (Q + ik|γ|² − γθ₁⁻¹)/(Q − ik|γ|² − γ̄θ₁),  Δ₃ = (Q − ik|γ|² − γθ₁⁻¹)/(Q − ik|γ|² − γ̄θ₁)
/// ```
///
/// and `Δ₂`, `Δ₄` likewise with `θ₂`.
pub fn ground_deltas(
    spec: &FiniteChainSpec,
    k: f64,
) -> Result<(Complex64, Complex64, [Complex64; 4])> {
    if !spec.is_all_ground() {
        return Err(Error::OutOfDomain(
            "closed form needs an all-ground pattern".into(),
        ));
    }
    if !(k > 0.0) {
        return Err(Error::NonpositiveMomentum(k));
    }
    let q = spec.cluster.q_real(ClusterState::Ground, k * k)?;
    let roots = ground_roots_from_q(q, &spec.coupling);
    let (t1, t2) = (roots.theta_plus, roots.theta_minus);
    let g = spec.coupling.gamma();
    let ika = Complex64::new(0.0, k * g.norm_sqr());
    let d = |plus: bool, th: Complex64| {
        let num = q + if plus { ika } else { -ika } - g / th;
        num / (q - ika - g.conj() * th)
    };
    Ok((
        t1,
        t2,
        [d(true, t1), d(true, t2), d(false, t1), d(false, t2)],
    ))
}

/// Reflection of `N` ground-state clusters:
///
/// ```text
/// R = −e^{2ikNL} (θ₁ᴺ⁻¹Δ₁ − θ₂ᴺ⁻¹Δ₂) / (θ₁ᴺ⁻¹Δ₃ − θ₂ᴺ⁻¹Δ₄)
/// ```
pub fn reflection_ground_closed_form(spec: &FiniteChainSpec, k: f64) -> Result<ClosedForm> {
    let (t1, t2, [d1, d2, d3, d4]) = ground_deltas(spec, k)?;
    if t1 == t2 {
        return Err(Error::OutOfDomain(format!("band edge at {}", k * k)));
    }
    let m = spec.n_sites() - 1;
    let e = spec.phase(Complex64::new(k, 0.0));
    let (num, den) = if t1.norm() >= t2.norm() {
        let rho = powi(t2 / t1, m);
        (d1 - rho * d2, d3 - rho * d4)
    } else {
        let rho = powi(t1 / t2, m);
        (rho * d1 - d2, rho * d3 - d4)
    };
    let scale = d3.norm() + d4.norm();
    Ok(ClosedForm {
        value: -e * e * num / den,
        denominator: den.norm() / scale,
        junction_denominator: None,
    })
}

/// Phase `(θ₁/θ₂)ᴺ⁻¹ Δ₁/Δ₂`; the reflection vanishes where it equals one.
fn resonance_phase(spec: &FiniteChainSpec, lambda: f64) -> Option<Complex64> {
    let (t1, t2, [d1, d2, _, _]) = ground_deltas(spec, lambda.sqrt()).ok()?;
    let u = powi(t1 / t2, spec.n_sites() - 1) * d1 / d2;
    u.is_finite().then_some(u)
}

/// Energies strictly inside `band` where the reflection of the ground chain
/// vanishes (`|T| = 1`).
///
/// On a band `|Δ₁| = |Δ₂| = 1` and `|θ₁| = |θ₂| = 1`, so `R = 0` reduces to
/// a phase condition. The phase is tracked on a grid clustered toward the
/// band edges, refined until consecutive steps are below half a radian, and
/// each crossing of a multiple of `2π` is bisected. The edges themselves,
/// where `θ₁ = θ₂` makes the phase trivially one, are not counted.
pub fn locate_band_resonances(spec: &FiniteChainSpec, band: &Band) -> Vec<f64> {
    let (a, b) = (band.lo.max(0.0), band.hi);
    if !(b > a) || !spec.is_all_ground() {
        return Vec::new();
    }
    let m = 64 * (spec.n_sites() + 1);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let nodes: Vec<f64> = (0..m)
        .map(|j| mid - half * (std::f64::consts::PI * (j as f64 + 0.5) / m as f64).cos())
        .collect();
    let mut pts: Vec<(f64, Complex64)> = Vec::with_capacity(nodes.len());
    for x in nodes {
        if let Some(u) = resonance_phase(spec, x) {
            pts.push((x, u));
        }
    }
    // Adaptive refinement of large phase steps.
    let mut refined: Vec<(f64, Complex64)> = Vec::with_capacity(pts.len());
    for w in pts.windows(2) {
        refine(spec, w[0], w[1], 0, &mut refined);
    }
    if let Some(last) = pts.last() {
        refined.push(*last);
    }
    let mut roots = Vec::new();
    let mut phase = refined.first().map_or(0.0, |p| p.1.arg());
    for w in refined.windows(2) {
        let (x0, u0) = w[0];
        let (x1, u1) = w[1];
        let step = (u1 / u0).arg();
        let next = phase + step;
        let (lo_m, hi_m) = (phase.min(next), phase.max(next));
        let k0 = (lo_m / std::f64::consts::TAU).ceil() as i64;
        let k1 = (hi_m / std::f64::consts::TAU).floor() as i64;
        for mm in k0..=k1 {
            let target = mm as f64 * std::f64::consts::TAU;
            if target == phase {
                continue;
            }
            let local = |x: f64| match resonance_phase(spec, x) {
                Some(u) => phase + (u / u0).arg() - target,
                None => f64::NAN,
            };
            let r = bisect_with_ends(local, x0, phase - target, x1, next - target);
            if r > a && r < b {
                if let Ok(cf) = reflection_ground_closed_form(spec, r.sqrt()) {
                    if cf.value.norm() < 1e-6 {
                        roots.push(r);
                    }
                }
            }
        }
        phase = next;
    }
    roots
}

fn refine(
    spec: &FiniteChainSpec,
    p0: (f64, Complex64),
    p1: (f64, Complex64),
    depth: u32,
    out: &mut Vec<(f64, Complex64)>,
) {
    let step = (p1.1 / p0.1).arg().abs();
    let xm = 0.5 * (p0.0 + p1.0);
    if step > 0.5 && depth < 40 && xm > p0.0 && xm < p1.0 {
        if let Some(um) = resonance_phase(spec, xm) {
            refine(spec, p0, (xm, um), depth + 1, out);
            refine(spec, (xm, um), p1, depth + 1, out);
            return;
        }
    }
    out.push(p0);
}

pub fn count_band_resonances(spec: &FiniteChainSpec, band: &Band) -> usize {
    locate_band_resonances(spec, band).len()
}

/// Minimum of the Bloch junction combination over a grid of energies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DenominatorCheck {
    /// `min |ξ_e − ikγ̄θξ_g|` with the Bloch normalization `ξ_g = 1/√|Q_g|`.
    pub min_magnitude: f64,
    /// Same, divided by `|ξ_e| + k|γ||ξ_g|`.
    pub min_relative: f64,
    pub samples: usize,
}

/// Evaluates the junction combination at every grid energy that lies
/// strictly inside an excited band (others, including `λ ≤ 0`, are skipped).
pub fn denominator_nonvanishing_check(
    cluster: &TwoStateCluster,
    coupling: &ChainCoupling,
    grid: &[f64],
) -> DenominatorCheck {
    let g = coupling.gamma();
    let mut out = DenominatorCheck {
        min_magnitude: f64::INFINITY,
        min_relative: f64::INFINITY,
        samples: 0,
    };
    for &lambda in grid {
        if !(lambda > 0.0) {
            continue;
        }
        let (Ok(qg), Ok(qe)) = (
            cluster.q_real(ClusterState::Ground, lambda),
            cluster.q_real(ClusterState::Excited, lambda),
        ) else {
            continue;
        };
        let s = qg * qe / (4.0 * coupling.modulus().powi(2));
        if !(s > 0.0 && s < 1.0) {
            continue;
        }
        let k = lambda.sqrt();
        let ik = Complex64::new(0.0, k);
        let roots = excited_roots_from_s(s, coupling);
        for th in [roots.theta_plus, roots.theta_minus] {
            let (xg, xe) = bloch_for_theta(qg, coupling, th);
            let v = (xe - ik * g.conj() * th * xg).norm();
            out.min_magnitude = out.min_magnitude.min(v);
            out.min_relative = out.min_relative.min(v / (xe.norm() + k * g.norm() * xg));
        }
        out.samples += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cluster() -> TwoStateCluster {
        TwoStateCluster::matched_two_level(0.5, 1.0, 0.2).unwrap()
    }

    fn coupling() -> ChainCoupling {
        ChainCoupling::from_polar(0.8, 0.3).unwrap()
    }

    #[test]
    fn dimension_is_sites_plus_two() {
        let spec = FiniteChainSpec::alternating(cluster(), coupling(), 1, 1.0).unwrap();
        assert_eq!(assemble_chain_system(&spec, 1.3).unwrap().dim(), 4);
        let spec = FiniteChainSpec::ground(cluster(), coupling(), 7, 1.0).unwrap();
        assert_eq!(assemble_chain_system(&spec, 1.3).unwrap().dim(), 9);
    }

    #[test]
    fn all_ground_uses_ground_q() {
        let spec = FiniteChainSpec::ground(cluster(), coupling(), 3, 1.0).unwrap();
        let sys = assemble_chain_system(&spec, 1.5).unwrap();
        let q = cluster().q_real(ClusterState::Ground, 2.25).unwrap();
        for s in 1..=3 {
            assert!((sys.matrix.d[s] + q).norm() < 1e-15);
        }
    }

    #[test]
    fn pole_rejected() {
        let spec = FiniteChainSpec::alternating(cluster(), coupling(), 2, 1.0).unwrap();
        assert!(matches!(
            scatter_numeric(&spec, 1.0),
            Err(Error::PoleHit { .. })
        ));
        assert!(matches!(
            scatter_numeric(&spec, 0.5f64.sqrt()),
            Err(Error::PoleHit { .. })
        ));
    }

    #[test]
    fn ground_closed_form_rejects_excited_pattern() {
        let spec = FiniteChainSpec::alternating(cluster(), coupling(), 2, 1.0).unwrap();
        assert!(matches!(
            reflection_ground_closed_form(&spec, 1.3),
            Err(Error::OutOfDomain(_))
        ));
        let spec = FiniteChainSpec::ground(cluster(), coupling(), 4, 1.0).unwrap();
        assert!(matches!(
            transmission_closed_form(&spec, 1.3),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn powi_matches_repeated_product() {
        let z = Complex64::new(0.3, -1.1);
        let mut p = Complex64::new(1.0, 0.0);
        for n in 0..12 {
            assert!((powi(z, n) - p).norm() < 1e-12 * p.norm().max(1.0));
            p *= z;
        }
    }
}
