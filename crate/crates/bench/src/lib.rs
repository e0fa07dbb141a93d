//! Benchmark-only crate; the measured fixtures live in `benches/engine.rs`.
//! Kept as a separate workspace member so benchmark dependencies never touch
//! the engine or CLI build graphs.
