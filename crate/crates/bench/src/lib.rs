//! Criterion benchmarks for wwlab; see `benches/`.
