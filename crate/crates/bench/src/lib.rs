//! Criterion benchmarks for `laqc-core`; see `benches/quantifiers.rs`.
