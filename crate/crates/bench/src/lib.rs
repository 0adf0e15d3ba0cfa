// SPDX-License-Identifier: Apache-2.0
//! Criterion benchmarks for `ttpack-core`; see `benches/`.
