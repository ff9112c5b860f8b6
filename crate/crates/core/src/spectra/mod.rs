//! Exact closed-form spectra, the numeric eigensolver oracle and the
//! comparison between the two.

mod closed_form;
mod compare;
mod eigenvalue;
mod jacobi;
mod spectrum;

pub use closed_form::{
    spectrum_inclusion, spectrum_line_inclusion, spectrum_line_middle, spectrum_line_semiregular, spectrum_middle,
};
pub use compare::{compare_spectra, ComparisonReport};
pub use eigenvalue::{
    perfect_sqrt, square_factor, Branch, Eigenvalue, ExactEigenvalue, QuadraticParts, SurdEigenvalue,
};
pub use jacobi::{eigensolver_oracle, symmetric_eigen, SymmetricEigen, DEFAULT_EIGEN_CAP, RESIDUAL_TOLERANCE};
pub use spectrum::{format_sig17, QuadraticSum, Spectrum, SpectrumEntry};
