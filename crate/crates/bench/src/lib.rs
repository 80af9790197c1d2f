//! Benchmark-only crate; see `benches/rate.rs`.
