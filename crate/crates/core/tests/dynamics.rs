use wwlab::codes::{build, Model};
use wwlab::dynamics::{metropolis_step, run_trajectory, Boltzmann, MemoryConfig, SimulationState};
use wwlab::symmetry::{enforced_generators, Family, MoveSet, Region, SymmetrySpec};
use wwlab::PauliOperator;

/// Energy histogram of the Metropolis chain against exact enumeration of
/// all 4^8 Paulis on the 2x2 torus.
#[test]
fn detailed_balance_on_smallest_torus() {
    let code = build(Model::Toric2d, &[2, 2]).unwrap();
    let n = code.n_qubits();
    assert_eq!(n, 8);
    let t = 0.9;
    let ng = code.hamiltonian().len();
    let mut weight = vec![0.0; ng + 1];
    for bits in 0u32..1 << (2 * n) {
        let x: Vec<usize> = (0..n).filter(|&q| bits >> q & 1 == 1).collect();
        let z: Vec<usize> = (0..n).filter(|&q| bits >> (n + q) & 1 == 1).collect();
        let mut op = PauliOperator::identity(n);
        for q in x {
            op.mul_assign(&PauliOperator::single(n, q, wwlab::Pauli::X));
        }
        for q in z {
            op.mul_assign(&PauliOperator::single(n, q, wwlab::Pauli::Z));
        }
        let e = code.energy(&op);
        weight[e] += (-(e as f64) / t).exp();
    }
    let total: f64 = weight.iter().sum();

    let moves = MoveSet::build(&code, &SymmetrySpec::none(), 1).unwrap();
    let w = Boltzmann::for_moves(t, &moves).unwrap();
    let mut st = SimulationState::new(&code, 17);
    for _ in 0..10_000 {
        metropolis_step(&mut st, &moves, &w);
    }
    let samples = 100_000;
    let mut hist = vec![0usize; ng + 1];
    for _ in 0..samples {
        for _ in 0..40 {
            metropolis_step(&mut st, &moves, &w);
        }
        hist[st.energy()] += 1;
    }
    let mut chi2 = 0.0;
    let mut dof = 0;
    for e in 0..=ng {
        let expect = samples as f64 * weight[e] / total;
        if expect < 5.0 {
            continue;
        }
        dof += 1;
        chi2 += (hist[e] as f64 - expect).powi(2) / expect;
    }
    // dof <= 5 here; 25 is far in the tail of chi2 for any such dof
    assert!(dof >= 3, "{hist:?}");
    assert!(chi2 < 25.0, "chi2 {chi2} over {dof} bins: {hist:?}");
}

#[test]
fn full_enforcement_never_violates_vertex_terms() {
    let code = build(Model::ThreeFermion, &[4, 4, 4]).unwrap();
    let spec = SymmetrySpec::new(Family::Vertex, Region::Full);
    let moves = MoveSet::build(&code, &spec, 1).unwrap();
    let enforced = enforced_generators(&code, &spec);
    let cfg = MemoryConfig {
        temperature: 0.7,
        max_steps: 100_000,
        checkpoint_interval: Some(1_000),
        trials: 1,
        seed_base: 3,
        radius: 1,
        quench_sweeps: 0,
    };
    let rec = run_trajectory(&code, &moves, &enforced, &[], &cfg, 3).unwrap();
    assert_eq!(rec.steps, 100_000);
    assert_eq!(rec.checkpoints, 100);
    assert!(rec.accepted > 0);
    assert!(rec.symmetry_conserved);
    assert!(rec.syndrome_consistent);
}

#[test]
fn hot_unprotected_memory_fails() {
    let code = build(Model::Toric2d, &[4, 4]).unwrap();
    let logicals: Vec<_> = wwlab::operators::tracked_logicals(&code)
        .unwrap()
        .into_iter()
        .map(|(_, l)| l)
        .collect();
    let cfg = MemoryConfig {
        temperature: 1.0,
        max_steps: 400_000,
        checkpoint_interval: Some(32),
        trials: 4,
        seed_base: 9,
        radius: 1,
        quench_sweeps: 5,
    };
    let r = wwlab::dynamics::measure_memory_time(&code, &SymmetrySpec::none(), &logicals, &cfg).unwrap();
    assert_eq!(r.failures, 4, "{r:?}");
    assert!(r.median_failure_step.is_some());
}
