//! Braid groups `B_n` in Artin generators: words, Garside normal forms,
//! lattice operations, conjugacy via sliding circuits, the Artin action on
//! the free group, pure-braid combing and the Dehornoy order.

pub mod artin;
pub mod classification;
pub mod combing;
pub mod conjugacy;
pub mod dehornoy;
pub mod error;
pub mod free_group;
pub mod lattice;
pub mod normal_form;
pub mod perm;
pub mod simple;
pub mod words;

pub use artin::{act, act_generator, generator_images, is_braid_automorphism, is_trivial_by_action};
pub use classification::{
    delta_braid, epsilon_braid, is_central, is_periodic, power, PeriodicBase, Periodicity,
};
pub use combing::{comb, include_strand, is_pure, is_trivial_pure, pure_generator, remove_last_strand, CombingCoordinates};
pub use conjugacy::{
    are_conjugate, centralizer_generators, cyclic_slide, preferred_prefix, slide_to_circuit,
    sliding_circuits, SlidingCircuitGraph,
};
pub use dehornoy::{compare, handle_reduce, less, sign, Sign};
pub use error::{BraidError, Result};
pub use free_group::FreeWord;
pub use lattice::{gcd, is_positive, lcm, prefix_divides, torsion_witness};
pub use normal_form::{equal, normal_form, LeftNormalForm};
pub use perm::Permutation;
pub use simple::SimpleElement;
pub use words::BraidWord;
