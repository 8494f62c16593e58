//! Exact combinatorics of partitions, permutations and the diagram ↔ particle dictionary.

mod lattice;
mod partition;
mod permutation;
mod profile;

pub use lattice::{frobenius_coordinates, HalfInt, PointConfiguration};
pub use partition::{
    factorial, ln_factorial, partitions_in_box, partitions_of, partitions_with_rows, standard_tableaux_count, Partition,
};
pub use permutation::{all_permutations, Permutation};
pub use profile::Profile;
