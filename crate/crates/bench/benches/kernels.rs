use criterion::{black_box, criterion_group, criterion_main, Criterion};
use wwlab::barrier::{canonical_decomposition, path_energy, Variant};
use wwlab::codes::{build, Model};
use wwlab::dynamics::{metropolis_step, Boltzmann, SimulationState};
use wwlab::operators::named_operator;
use wwlab::symmetry::{enforced_generators, Family, MoveSet, Region, SymmetrySpec};

fn syndrome(c: &mut Criterion) {
    let code = build(Model::ThreeFermion, &[8, 6, 8]).unwrap();
    let op = named_operator(&code, "Rsigma-horiz").unwrap();
    c.bench_function("syndrome 3d3f 8x6x8 membrane", |b| b.iter(|| code.syndrome(black_box(&op))));
}

fn rank(c: &mut Criterion) {
    let code = build(Model::ThreeFermion, &[4, 3, 4]).unwrap();
    c.bench_function("stabilizer rank 3d3f 4x3x4", |b| b.iter(|| black_box(&code).rank()));
}

fn moves_and_metropolis(c: &mut Criterion) {
    let code = build(Model::ThreeFermion, &[8, 5, 8]).unwrap();
    let spec = SymmetrySpec::new(Family::Vertex, Region::Width(4));
    c.bench_function("move set 3d3f 8x5x8 r=1", |b| b.iter(|| MoveSet::build(&code, &spec, 1).unwrap()));
    let moves = MoveSet::build(&code, &spec, 1).unwrap();
    let weights = Boltzmann::for_moves(0.5, &moves).unwrap();
    let mut st = SimulationState::new(&code, 1);
    c.bench_function("metropolis 1000 steps", |b| {
        b.iter(|| {
            for _ in 0..1000 {
                metropolis_step(&mut st, &moves, &weights);
            }
        })
    });
}

fn barrier_path(c: &mut Criterion) {
    let code = build(Model::ThreeFermion, &[12, 12, 12]).unwrap();
    let spec = SymmetrySpec::new(Family::Vertex, Region::Width(6));
    let enforced = enforced_generators(&code, &spec);
    let path = canonical_decomposition(&code, &spec, "Se-vert", Variant::Canonical).unwrap();
    c.bench_function("canonical path energy 12^3 W=6", |b| {
        b.iter(|| path_energy(&code, &enforced, &path, 2).unwrap())
    });
}

criterion_group!(benches, syndrome, rank, moves_and_metropolis, barrier_path);
criterion_main!(benches);
