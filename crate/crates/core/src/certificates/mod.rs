//! Explicit witnesses for almost Gorenstein Rees algebras: elements
//! `(f, g, h)` together with the finite ideal identities that make
//! `M · K ⊆ (f, g t) K + R h` hold.

mod note;
mod two_dim;
mod veronese;

pub use note::{mult2_note, MultiplicityTwoNote};
pub use two_dim::{
    build_certificate_2dim, claim_containment_by_degree, verify_claim_containment, Certificate2D,
    CertificateChecks,
};
pub use veronese::{
    good_agg_claim_report, veronese_instance, verify_good_agg_claim, verify_minimal_multiplicity,
    ExponentPair, SemigroupModule, VeroneseClaimReport, VeroneseInstance,
};
