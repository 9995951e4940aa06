//! Boolean permutations: heaps, canonical reduced words, RSK tableaux, the
//! run statistic and uncrowded sets.
//!
//! Permutations are 1-based and written in one-line notation; `s_i` swaps
//! `i` and `i + 1`. Values of ten or more are parenthesized in compact text,
//! as in `231548697(11)(10)`.

pub mod canonical;
pub mod error;
pub mod heap;
pub mod notation;
pub mod permutation;
pub mod rsk;
pub mod runstat;
pub mod uncrowded;
pub mod words;

pub use canonical::{canonical_from_heap, canonical_from_word, CanonicalWord};
pub use error::{Error, Result};
pub use heap::{heap_of, linear_extensions, Cover, Heap};
pub use permutation::{all_permutations, Permutation, Side, Subsequence};
pub use rsk::{partial_insertion, row2_from_canonical, rsk, shape, Shape, Tableau};
pub use runstat::{
    brute_force_run, optimal_run_word, rho, rho_orbit, run_statistic, ulam_sort, RhoCase, RhoStep, UlamMove,
};
pub use uncrowded::{
    count_uncrowded, enumerate_x, f_map, g_map, is_feasible_second_row, is_uncrowded, is_uncrowded_tableau,
    realize_boolean, uncrowded_with_one, BinaryWord, UncrowdedCounts,
};
pub use words::{all_reduced_words, one_reduced_word, Direction, RunWord, Word};
