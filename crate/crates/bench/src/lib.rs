//! Benchmark-only crate; see `benches/strategies.rs`.
