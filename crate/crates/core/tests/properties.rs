use mottgate::chain::{scatter_numeric, FiniteChainSpec};
use mottgate::dot::{transmission_full, CouplingSpec};
use mottgate::lattice::*;
use mottgate::materials::{fermi_weight, Gate, Observable, ThermalSpec};
use mottgate::quad::{integrate, QuadOptions};
use mottgate::{ClusterState, Complex64, Level, TwoStateCluster};
use proptest::prelude::*;

fn cluster() -> impl Strategy<Value = TwoStateCluster> {
    (
        -3.0..3.0f64,
        prop::collection::vec((0.15..1.5f64, 0.1..2.0f64), 2..5),
    )
        .prop_map(|(start, steps)| {
            let mut e = start;
            let mut levels = Vec::new();
            for (gap, w) in steps {
                levels.push(Level::new(e, w));
                e += gap;
            }
            let shared = levels.split_off(2);
            TwoStateCluster::new(levels[0], levels[1], shared).unwrap()
        })
}

fn state() -> impl Strategy<Value = ClusterState> {
    prop_oneof![Just(ClusterState::Ground), Just(ClusterState::Excited)]
}

fn chain_coupling() -> impl Strategy<Value = ChainCoupling> {
    (0.1..2.0f64, -3.1..3.1f64).prop_map(|(m, p)| ChainCoupling::from_polar(m, p).unwrap())
}

fn far_from_poles(c: &TwoStateCluster, x: f64) -> bool {
    c.all_poles().iter().all(|p| (p - x).abs() > 1e-6)
}

proptest! {
    #[test]
    fn herglotz(c in cluster(), s in state(), re in -6.0..6.0f64, im in 1e-6..10.0f64) {
        let q = c.q_function(s);
        prop_assert!(q.eval(Complex64::new(re, im)).unwrap().im > 0.0);
        prop_assert!(q.eval(Complex64::new(re, -im)).unwrap().im < 0.0);
    }

    #[test]
    fn real_on_real_axis(c in cluster(), s in state(), x in -6.0..6.0f64) {
        prop_assume!(far_from_poles(&c, x));
        let v = c.q(s, Complex64::new(x, 0.0)).unwrap();
        prop_assert_eq!(v.im, 0.0);
    }

    #[test]
    fn increasing_between_poles(c in cluster(), s in state(), x in -6.0..6.0f64, dx in 1e-4..0.05f64) {
        let q = c.q_function(s);
        prop_assume!(q.poles().all(|p| !(x - 1e-6..=x + dx + 1e-6).contains(&p)));
        prop_assert!(q.eval_real(x + dx).unwrap() > q.eval_real(x).unwrap());
        prop_assert!(q.derivative(x) > 0.0);
    }

    #[test]
    fn dot_unitarity(c in cluster(), s in state(), k in 0.01..5.0f64,
                     g00 in -1.0..1.0f64, g01 in 0.1..2.0f64, ph in -3.1..3.1f64, g11 in -2.0..2.0f64) {
        let cp = CouplingSpec::new(g00, Complex64::from_polar(g01, ph), g11).unwrap();
        let t = transmission_full(&c, s, &cp, k).unwrap();
        prop_assert!((t.norm_sqr() + (t - 1.0).norm_sqr() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn swapping_states_swaps_the_distinct_pole(c in cluster()) {
        let g: Vec<f64> = c.q_function(ClusterState::Ground).poles().collect();
        let e: Vec<f64> = c.q_function(ClusterState::Excited).poles().collect();
        let only_g: Vec<f64> = g.iter().copied().filter(|p| !e.contains(p)).collect();
        let only_e: Vec<f64> = e.iter().copied().filter(|p| !g.contains(p)).collect();
        prop_assert_eq!(only_g, vec![c.alpha_e()]);
        prop_assert_eq!(only_e, vec![c.alpha_g()]);
    }

    #[test]
    fn root_product(c in cluster(), g in chain_coupling(), x in -6.0..6.0f64) {
        prop_assume!(far_from_poles(&c, x));
        let ratio = g.gamma() / g.gamma().conj();
        let r = ground_dispersion_roots(&c, &g, x).unwrap();
        prop_assert!((r.theta_plus * r.theta_minus - ratio).norm() < 1e-10);
        let r = excited_dispersion_roots(&c, &g, x).unwrap();
        prop_assert!((r.theta_plus * r.theta_minus - ratio * ratio).norm() < 1e-10);
    }

    #[test]
    fn band_dichotomy(c in cluster(), g in chain_coupling(), x in -6.0..6.0f64) {
        prop_assume!(far_from_poles(&c, x));
        let r = ground_dispersion_roots(&c, &g, x).unwrap();
        let member = ground_band_membership(&c, &g, x).unwrap();
        let unimodular = r.is_unimodular(1e-8);
        let split = r.theta_minus.norm() < 1.0 && r.theta_plus.norm() > 1.0;
        prop_assert!(unimodular != split);
        prop_assert_eq!(member, unimodular);
        let bs = compute_bands(&c, &g, ChainState::GroundPeriodL, (-6.5, 6.5)).unwrap();
        let near_edge = bs.bands.iter().any(|b| (b.lo - x).abs() < 1e-9 || (b.hi - x).abs() < 1e-9);
        prop_assume!(!near_edge);
        prop_assert_eq!(bs.band_containing(x).is_some(), member);
    }

    #[test]
    fn chain_unitarity(c in cluster(), g in chain_coupling(), n in 1usize..6, x in 0.05..6.0f64,
                       alternating in any::<bool>()) {
        prop_assume!(far_from_poles(&c, x));
        let spec = if alternating {
            FiniteChainSpec::alternating(c, g, n, 1.0).unwrap()
        } else {
            FiniteChainSpec::ground(c, g, n, 1.0).unwrap()
        };
        let res = scatter_numeric(&spec, x.sqrt()).unwrap();
        prop_assert!(res.unitarity_residual < 1e-8);
    }

    #[test]
    fn weight_normalization(t in 5.0..600.0f64, lf in -1.0..2.0f64, w in 10.0..30.0f64) {
        let spec = ThermalSpec::new(t, lf, 0.1, w).unwrap();
        let (lo, hi) = spec.window();
        let r = integrate(|x| fermi_weight(x, &spec), &[lo, lf, hi], QuadOptions::default()).unwrap();
        prop_assert!((r.value - 1.0).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn blocked_conductance_grows_with_temperature(t in 10.0..200.0f64, factor in 1.2..3.0f64) {
        let cl = TwoStateCluster::matched_two_level(0.5, 1.0, 0.2).unwrap();
        let gate = Gate::Dot { cluster: cl, coupling: CouplingSpec::simplified(0.5).unwrap() };
        let at = |temp: f64| gate
            .mean(ClusterState::Ground, Observable::Landauer, &ThermalSpec::new(temp, 1.0, 0.1, 12.0).unwrap())
            .unwrap()
            .value;
        prop_assert!(at(t * factor) > at(t));
    }
}
