//! Criterion benchmarks for the invariant engine live in `benches/`.
