use serde::Serialize;

/// A recorded fact with no computation behind it: Cohen-Macaulay local rings
/// of multiplicity two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiplicityTwoNote {
    pub hypothesis: &'static str,
    pub consequence: &'static str,
    pub gorenstein_note: &'static str,
}

pub fn mult2_note() -> MultiplicityTwoNote {
    MultiplicityTwoNote {
        hypothesis: "(A, m) Cohen-Macaulay local with e_m^0(A) = 2",
        consequence: "R(m) is an almost Gorenstein graded ring",
        gorenstein_note: "A has minimal multiplicity and is Gorenstein, so K = A",
    }
}
