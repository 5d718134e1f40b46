//! Gröbner bases, initial modules and Hilbert series for finitely presented
//! modules over the ring of Frobenius operators `𝐅 = 𝔽_p[x_1..x_n]⟨F⟩` and its
//! associated graded ring `𝐀 = 𝔽_p[x_1..x_n]{f}/(x_i^p f)`.

pub mod error;
pub mod fmodule;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod operator;
pub mod oracle;
pub mod syzygy;

pub use error::{Error, Result};
pub use fmodule::{
    analyze, check_unit_identity, check_unit_identity_with_shift, standard_filtration_gr, structure_cokernel_hs,
    structure_kernel_hs, AnalysisReport, FPresentation, Verdict,
};
pub use groebner::{
    buchberger, buchberger_in, initial_module, interreduce, normal_form, GroebnerBasis, GroebnerTrace,
    InitialModule, Status, DEFAULT_CAP,
};
pub use hilbert::{
    count_standard_monomials, g_polynomial, hs_commutative, hs_monomial_quotient, standard_monomial_counts,
    verify_recurrence, GradedDiagnostics, HilbertRational, IntPolynomial,
};
pub use monomial::{parse_word, FrobMonomial, PositionedMonomial, RingContext, Word};
pub use operator::{FreeModule, ModuleVector, OperatorPoly, Semantics};
pub use oracle::{
    brute_membership, brute_syzygies, filtered_graded_dim, graded_dim_quotient, GradedMatrix, MembershipOracle,
};
pub use syzygy::{generating_syzygies, pair_syzygies, MonomialSyzygy};
