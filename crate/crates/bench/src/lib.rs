//! Criterion benchmarks for `isoclin-core`; see `benches/isoclin.rs`.
