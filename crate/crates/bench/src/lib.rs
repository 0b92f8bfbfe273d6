//! Criterion benchmarks for `bicay-core` live under `benches/`.
