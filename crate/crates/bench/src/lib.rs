//! Criterion benchmarks for `monideal`; see `benches/ideals.rs`.
