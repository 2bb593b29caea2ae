//! Benchmark-only crate; see `benches/pipeline.rs`. The measured code
//! lives in `rees-core`.
