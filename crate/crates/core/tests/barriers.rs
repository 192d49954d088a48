use wwlab::barrier::{
    canonical_decomposition, minimal_barrier_oracle, paired_decomposition, path_energy, OracleResult, Variant,
};
use wwlab::codes::{build, Model};
use wwlab::operators::named_operator;
use wwlab::symmetry::{enforced_generators, Family, Region, SymmetrySpec};

#[test]
fn oracle_never_exceeds_constructed_paths() {
    let code = build(Model::Toric2d, &[3, 3]).unwrap();
    let spec = SymmetrySpec::none();
    for label in ["Z-horiz", "Z-vert"] {
        let target = named_operator(&code, label).unwrap();
        let OracleResult::Exact { barrier, .. } = minimal_barrier_oracle(&code, &spec, &target, 1, 100_000).unwrap()
        else {
            panic!("oracle did not finish for {label}");
        };
        for v in [Variant::Canonical, Variant::VerticalGrowth] {
            let path = canonical_decomposition(&code, &spec, label, v).unwrap();
            let r = path_energy(&code, &enforced_generators(&code, &spec), &path, 1).unwrap();
            assert!(r.peak_energy >= barrier, "{label} {v:?}: {} < {barrier}", r.peak_energy);
        }
    }
}

#[test]
fn paired_membrane_barrier_grows_with_size() {
    let mut peaks = Vec::new();
    for l in [3, 4, 5] {
        let code = build(Model::ThreeFermion, &[l, l, l]).unwrap();
        let spec = SymmetrySpec::new(Family::Vertex, Region::Full);
        let p = paired_decomposition(&code, "Rsigma-horiz").unwrap();
        let r = path_energy(&code, &enforced_generators(&code, &spec), &p, 1).unwrap();
        assert!(r.symmetric);
        peaks.push(r.peak_energy);
    }
    assert!(peaks.windows(2).all(|w| w[1] > w[0]), "{peaks:?}");
}

#[test]
fn canonical_barrier_rises_with_enforced_depth() {
    let code = build(Model::ThreeFermion, &[8, 8, 8]).unwrap();
    let peaks: Vec<usize> = (1..=5)
        .map(|w| {
            let spec = SymmetrySpec::new(Family::Vertex, Region::Width(w));
            let p = canonical_decomposition(&code, &spec, "Sm-vert", Variant::Canonical).unwrap();
            path_energy(&code, &enforced_generators(&code, &spec), &p, 2).unwrap().peak_energy
        })
        .collect();
    assert!(peaks.windows(2).all(|w| w[1] == w[0] + 2), "{peaks:?}");
}
