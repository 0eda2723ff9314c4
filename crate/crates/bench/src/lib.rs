//! Benchmark-only crate; see `benches/tableaux.rs`.
