//! Mechanical checks of the inequalities relating VAT, conductance and the
//! spectral gap on regular graphs.
//!
//! Every inequality is evaluated in non-strict form (`holds`); the strict
//! form is recorded separately (`strict_holds`). Comparisons between two
//! exact quantities are exact; any comparison involving the spectral gap
//! uses an absolute tolerance.
//!
//! Two readings are fixed here. The argmin defining the conductance
//! witness is over `Φ_S`. The proof quantity `|V - S - T + 1|` is read as
//! `|V - S - T| + 1`, matching the VAT denominator.

mod checks;
mod lemmas;
mod report;
mod suite;

pub use checks::{
    check_cheeger, check_cor14, check_lemma23, check_proof_facts, check_remarks, check_thm12, check_thm13,
    Analysis, VerifyOptions,
};
pub use lemmas::{mediant_between, series_lower_bound};
pub use report::{Quantity, Theorem, TheoremReport};
pub use suite::{run_suite, Check, Equality, Keep, Skip, SuiteOptions, SuiteReport, Summary};
