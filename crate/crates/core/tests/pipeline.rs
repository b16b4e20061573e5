use gravdiss::model::{dimensionless_point, ThermalSpec};
use gravdiss::oracle::{b1_numeric, QuadratureSpec, TensorF};
use gravdiss::specfun::bose_occupation;
use gravdiss::{
    analytic_state, evolve_numeric, AtomSpec, DensityMatrix2, Generator, GravityEnv, RateSet,
};

#[test]
fn thermal_relaxation_to_gibbs_state() {
    let atom = AtomSpec::new(1.2, 0.8, 0.7).unwrap();
    let env = GravityEnv::new(-0.04, 1.9).unwrap();
    let rates = RateSet::compute(&atom, &env, &ThermalSpec::distant(0.9).unwrap()).unwrap();
    let generator = Generator::from(&rates);
    let t_max = 30.0 / rates.gamma_total;
    let traj = evolve_numeric(&DensityMatrix2::excited(), &generator, t_max, 3000).unwrap();
    let gibbs = 1.0 / (1.0 + (rates.omega_g / 0.9).exp());
    assert!((traj.final_state().ee - gibbs).abs() < 1e-10);
    assert!((rates.steady_excited - gibbs).abs() < 1e-14);
}

#[test]
fn local_and_distant_temperatures_agree() {
    let atom = AtomSpec::new(1.0, 1.0, 0.0).unwrap();
    let env = GravityEnv::new(-0.08, 3.0).unwrap();
    let t = 0.6;
    let distant = RateSet::compute(&atom, &env, &ThermalSpec::distant(t).unwrap()).unwrap();
    let local =
        RateSet::compute(&atom, &env, &ThermalSpec::local(t / (1.0 - 0.08)).unwrap()).unwrap();
    assert!((distant.gamma_plus - local.gamma_plus).abs() <= 1e-14 * distant.gamma_plus);
    let n = bose_occupation(distant.omega_g, t).unwrap();
    assert!((distant.gamma_plus - n * distant.gamma_g).abs() <= 1e-15 * distant.gamma_plus);
}

#[test]
fn closed_tensor_matches_quadrature_through_public_api() {
    let (r, omega) = (1.5, 1.1);
    let closed = TensorF::closed_form([0.0, 0.0, r], omega).unwrap();
    let numeric = b1_numeric(r, omega, &QuadratureSpec::default()).unwrap();
    assert!(((closed.b1 - numeric.value) / closed.b1).abs() < 1e-9);
}

#[test]
fn coherent_state_dephases_at_half_rate() {
    let atom = AtomSpec::new(0.7, 1.0, 1.2).unwrap();
    let env = GravityEnv::new(-0.02, 4.0).unwrap();
    assert!(dimensionless_point(&atom, &env).x > 2.0);
    let rates = RateSet::compute(&atom, &env, &ThermalSpec::zero()).unwrap();
    let generator = Generator::from(&rates);
    let rho0 = DensityMatrix2::coherent(0.5).unwrap();
    let t = 2.0 / rates.gamma_total;
    let rho = analytic_state(&rho0, &generator, t).unwrap();
    assert!((rho.eg.norm() - 0.5 * (-1.0f64).exp()).abs() < 1e-15);
}
