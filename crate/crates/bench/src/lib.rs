//! Fixtures shared by the benchmarks in `benches/`.

use setinc_core::GraphParams;

/// Graph-sized parameter sets, smallest first; the eigensolver bench uses
/// only the first two.
pub fn bench_params() -> Vec<GraphParams> {
    [(6, 2, 3), (8, 3, 4), (10, 4, 5), (11, 3, 5)]
        .into_iter()
        .map(|(n, k, l)| GraphParams::new(n, k, l).expect("fixture parameters are valid"))
        .collect()
}
