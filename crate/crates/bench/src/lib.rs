//! Criterion benchmarks for zetakit; see `benches/functions.rs`.
