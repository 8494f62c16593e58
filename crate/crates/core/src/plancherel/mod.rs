//! Plancherel measures `(dim λ)²/n!`: RSK, samplers, the limit shape and
//! global and edge fluctuations.

mod growth;
mod limit;
mod tableau;

pub use growth::{
    growth_probabilities, involution_count, plancherel_weight, plancherel_weight_exact, rsk_pushforward_exact,
    sample_involution, sample_plancherel_hookwalk, sample_plancherel_rsk,
};
pub use limit::{
    edge_statistic, edge_to_row, fluctuation_from, fluctuation_integral, omega, omega_excess_integral,
    sample_kerov_process, sup_distance_to_omega, KerovSeries, KEROV_TERMS, OMEGA_QUAD_TOL, SUP_GRID,
};
pub(crate) use tableau::row_insert;
pub use tableau::{lis_length, rsk, rsk_inverse, rsk_shape, StandardTableau};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlancherelSampler {
    Rsk,
    Hookwalk,
}

pub fn sample_plancherel<R: rand::Rng + ?Sized>(sampler: PlancherelSampler, n: usize, rng: &mut R) -> crate::Partition {
    match sampler {
        PlancherelSampler::Rsk => sample_plancherel_rsk(n, rng),
        PlancherelSampler::Hookwalk => sample_plancherel_hookwalk(n, rng),
    }
}
