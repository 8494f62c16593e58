//! z-measures, their mixtures over `n`, Schur measures and the RSK
//! correspondence on nonnegative integer matrices.

mod rsk_knuth;
mod schur;
mod zmeasure;

pub use rsk_knuth::{
    last_passage_time, matrices_with_sum, matrix_pushforward_check, rsk_knuth, sample_geometric_matrix, words_law_exact,
    words_pushforward_check, ExactReport, NonnegativeMatrix,
};
pub use schur::{normalize_over, schur_value, schur_weight, SchurNormalization, SchurSpec, Specialization};
pub use zmeasure::{
    meixner_check, meixner_coordinates, mixed_zmeasure_weight, negative_binomial_tail, pochhammer_box,
    pochhammer_box_complex, pochhammer_box_exact, rising, zmeasure_weight, zmeasure_weight_exact, MeixnerReport,
    ZParams, ADMISSIBILITY_DEPTH,
};
