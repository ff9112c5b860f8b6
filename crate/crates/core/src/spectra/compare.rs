use crate::error::{Error, Result};
use crate::spectra::spectrum::Spectrum;

/// Outcome of pairing an exact spectrum against numerically computed
/// eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    /// Largest `|exact_i - numeric_i|` after sorting both descending.
    pub max_deviation: f64,
    /// `tol · max(1, |λ|_max)`.
    pub threshold: f64,
    pub passed: bool,
}

/// Compares `exact` with `numeric` entry by entry after sorting both in
/// descending order. The tolerance is relative to `max(1, |λ|_max)`.
pub fn compare_spectra(exact: &Spectrum, numeric: &[f64], tol: f64) -> Result<ComparisonReport> {
    let expanded = exact.expand_f64()?;
    if expanded.len() != numeric.len() {
        return Err(Error::LengthMismatch { expected: expanded.len(), actual: numeric.len() });
    }
    let mut sorted = numeric.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let scale = expanded.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let max_deviation = expanded.iter().zip(&sorted).map(|(a, b)| (a - b).abs()).fold(0.0f64, |m, d| {
        if d.is_nan() {
            f64::INFINITY
        } else {
            m.max(d)
        }
    });
    let threshold = tol * scale;
    Ok(ComparisonReport { max_deviation, threshold, passed: max_deviation <= threshold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_inclusion_graph, GraphParams};
    use crate::spectra::closed_form::spectrum_inclusion;
    use crate::spectra::eigenvalue::Eigenvalue;
    use crate::spectra::jacobi::{eigensolver_oracle, DEFAULT_EIGEN_CAP};
    use num_bigint::BigUint;

    #[test]
    fn zeros() {
        let s = Spectrum::from_pairs([(Eigenvalue::int(0), BigUint::from(3u32))]);
        let r = compare_spectra(&s, &[0.0, 0.0, 0.0], 1e-8).unwrap();
        assert!(r.passed);
        assert_eq!(r.max_deviation, 0.0);
    }

    #[test]
    fn g412_against_oracle() {
        let p = GraphParams::new(4, 1, 2).unwrap();
        let g = build_inclusion_graph(p).unwrap();
        let numeric = eigensolver_oracle(&g.graph().adjacency_matrix(), DEFAULT_EIGEN_CAP).unwrap();
        let r = compare_spectra(&spectrum_inclusion(&p).unwrap(), &numeric, 1e-8).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn perturbation_fails() {
        let p = GraphParams::new(4, 1, 2).unwrap();
        let g = build_inclusion_graph(p).unwrap();
        let mut numeric = eigensolver_oracle(&g.graph().adjacency_matrix(), DEFAULT_EIGEN_CAP).unwrap();
        numeric[3] += 1e-4;
        let r = compare_spectra(&spectrum_inclusion(&p).unwrap(), &numeric, 1e-8).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn unsorted_input_is_sorted() {
        let s = Spectrum::from_pairs([
            (Eigenvalue::int(1), BigUint::from(1u32)),
            (Eigenvalue::int(-1), BigUint::from(1u32)),
        ]);
        assert!(compare_spectra(&s, &[-1.0, 1.0], 1e-12).unwrap().passed);
    }

    #[test]
    fn length_mismatch() {
        let s = Spectrum::from_pairs([(Eigenvalue::int(0), BigUint::from(3u32))]);
        assert!(matches!(compare_spectra(&s, &[0.0], 1e-8), Err(Error::LengthMismatch { .. })));
    }
}
