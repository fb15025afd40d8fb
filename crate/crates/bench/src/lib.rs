//! Benchmarks for ncframe-core; see benches/.
