use approx::assert_relative_eq;
use mottgate::dot::*;
use mottgate::{ClusterState, Complex64, Error, Level, TwoStateCluster};

/// Cluster whose ground-state Q has the single pole (0, 1).
fn unit_pole() -> TwoStateCluster {
    TwoStateCluster::new(Level::new(-5.0, 1.0), Level::new(0.0, 1.0), vec![]).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn hand_evaluated_transmission() {
    // T = 2ikg/(2ikg − Q) with Q(1) = −1.
    let expect = c(0.0, 2.0) / c(1.0, 2.0);
    let full = transmission_full(
        &unit_pole(),
        ClusterState::Ground,
        &CouplingSpec::simplified(1.0).unwrap(),
        1.0,
    )
    .unwrap();
    let simple = transmission_simplified(&unit_pole(), ClusterState::Ground, 1.0, 1.0).unwrap();
    for t in [full, simple] {
        assert_relative_eq!(t.re, expect.re, epsilon = 1e-15);
        assert_relative_eq!(t.im, expect.im, epsilon = 1e-15);
        assert_relative_eq!(t.norm_sqr(), 0.8, epsilon = 1e-14);
    }
    let r = reflection(full);
    let r_expect = c(-1.0, 0.0) / c(1.0, 2.0);
    assert_relative_eq!((r - r_expect).norm(), 0.0, epsilon = 1e-15);
    assert!(
        matches!(landauer_conductance(full), Conductance::Finite(v) if (v - 4.0).abs() < 1e-12)
    );
}

#[test]
fn pole_limit() {
    let cl = unit_pole();
    let near = transmission_full(
        &cl,
        ClusterState::Ground,
        &CouplingSpec::simplified(0.7).unwrap(),
        1e-6f64.sqrt(),
    );
    assert!(near.unwrap().norm() < 2e-9);
    let cl = TwoStateCluster::new(Level::new(-5.0, 1.0), Level::new(2.0, 1.0), vec![]).unwrap();
    let g00 = 0.3;
    let cp = CouplingSpec::new(g00, c(0.5, 0.2), 0.1).unwrap();
    let k = 2f64.sqrt();
    let ik = c(0.0, 2.0 * k * g00);
    let t = transmission_full(&cl, ClusterState::Ground, &cp, k).unwrap();
    assert_relative_eq!((t - ik / (ik - 1.0)).norm(), 0.0, epsilon = 1e-12);
}

#[test]
fn zero_of_q_transmits_fully() {
    // Q_g = 0 between the poles of a symmetric pair.
    let cl = TwoStateCluster::new(
        Level::new(-9.0, 1.0),
        Level::new(0.5, 1.0),
        vec![Level::new(2.5, 1.0)],
    )
    .unwrap();
    let q = cl.q_function(ClusterState::Ground);
    let z = mottgate::roots::bisect(|x| q.eval_real(x).unwrap(), 0.6, 2.4);
    let t = transmission_simplified(&cl, ClusterState::Ground, 0.8, z.sqrt()).unwrap();
    assert_relative_eq!(t.re, 1.0, epsilon = 1e-9);
    assert!(landauer_conductance(t).is_infinite());
}

#[test]
fn conductance_limits() {
    assert_eq!(landauer_conductance(c(0.0, 0.0)), Conductance::Finite(0.0));
    assert_eq!(landauer_conductance(c(1.0, 0.0)), Conductance::Infinite);
    assert!(
        conductance_at(
            &unit_pole(),
            ClusterState::Ground,
            &CouplingSpec::simplified(1.0).unwrap(),
            -1.0
        )
        .value()
            == 0.0
    );
}

#[test]
fn calibration_examples() {
    assert_eq!(
        calibrate_chemical_shift(&unit_pole(), ClusterState::Ground),
        0.0
    );
    let cl = TwoStateCluster::new(Level::new(-3.0, 1.0), Level::new(1.0, 1.0), vec![]).unwrap();
    assert_eq!(calibrate_chemical_shift(&cl, ClusterState::Ground), -1.0);
    let cl = TwoStateCluster::new(
        Level::new(-2.0, 1.0),
        Level::new(-1.0, 1.0),
        vec![Level::new(2.0, 1.0)],
    )
    .unwrap();
    assert_eq!(calibrate_chemical_shift(&cl, ClusterState::Excited), 0.0);
}

#[test]
fn switching_contrast_swaps() {
    let cl = TwoStateCluster::matched_two_level(0.5, 1.0, 0.2).unwrap();
    let cp = CouplingSpec::simplified(0.5).unwrap();
    let (g, e) = switching_contrast(&cl, &cp, 1.0);
    assert_eq!(g.value(), 0.0);
    assert!(e.value() > 0.0);
    let (g, e) = switching_contrast(&cl, &cp, 0.5);
    assert!(g.value() > 0.0);
    assert_eq!(e.value(), 0.0);
}

#[test]
fn internal_amplitude_matches_wave_equation() {
    // The internal wave solves the boundary condition ξ₊ (Q − γ11) = γ10 [u'].
    let cl = TwoStateCluster::new(
        Level::new(-1.0, 0.6),
        Level::new(0.8, 1.2),
        vec![Level::new(2.0, 0.4)],
    )
    .unwrap();
    let cp = CouplingSpec::new(0.2, c(0.4, -0.3), 0.5).unwrap();
    let k: f64 = 1.3;
    let psi = internal_amplitude(&cl, ClusterState::Ground, &cp, k).unwrap();
    let t = transmission_full(&cl, ClusterState::Ground, &cp, k).unwrap();
    let q = cl.q_real(ClusterState::Ground, k * k).unwrap();
    let xi = cp.gamma10() * c(0.0, 2.0 * k) * (1.0 - t) / (q - cp.gamma11());
    let levels = cl.pole_levels(ClusterState::Ground);
    assert_eq!(psi.len(), levels.len());
    for (p, l) in psi.iter().zip(&levels) {
        let direct = c(l.energy, 1.0) / (l.energy - k * k) * l.weight.sqrt() * xi;
        assert_relative_eq!((p - direct).norm(), 0.0, epsilon = 1e-13);
    }
}

#[test]
fn invalid_inputs() {
    assert!(matches!(
        CouplingSpec::new(0.0, c(0.0, 0.0), 0.0),
        Err(Error::DegenerateCoupling)
    ));
    let cp = CouplingSpec::simplified(1.0).unwrap();
    assert!(matches!(
        transmission_full(&unit_pole(), ClusterState::Ground, &cp, 0.0),
        Err(Error::NonpositiveMomentum(_))
    ));
    assert!(transmission_full(&unit_pole(), ClusterState::Ground, &cp, -1.0).is_err());
}
