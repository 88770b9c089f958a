//! Exact combinatorics for line-bundle cohomology on Schubert varieties of
//! Kac-Moody groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`cartan`]: generalized Cartan matrices, symmetrizers, root and weight
//!   coordinates;
//! * [`weyl`]: Weyl-group elements with canonical words, inversion sets,
//!   Bruhat order and bounded enumeration;
//! * [`chamber`]: dot action, chamber location, generic weights;
//! * [`relative`]: the relative sets `W±(w, phi)`, their maxima `tau±` and
//!   the lengths `l±`;
//! * [`demazure`]: characters and Demazure operators;
//! * [`cohomology`]: degree predictions and the partial cohomology oracle;
//! * [`suite`]: exhaustive verification suites and their reports.

pub mod cartan;
pub mod chamber;
pub mod cohomology;
pub mod demazure;
pub mod error;
pub mod io;
pub mod linalg;
pub mod relative;
pub mod suite;
pub mod weyl;

pub use cartan::{CartanData, RootVec, WeightVec};
pub use chamber::{big_m, chamber_of, dot_act, generic_weight, ChamberResult, MarginRule};
pub use cohomology::{cross_check, predict_degrees, resolve, DegreePrediction, Outcome, ReductionTrace};
pub use demazure::{bwb_full_flag, demazure_character, demazure_step, Character};
pub use error::{Error, Result};
pub use relative::{bruhat_domination_check, tau_minus, tau_plus, w_sets, Mode, RelativeData};
pub use suite::{run_suite, SuiteConfig, SuiteName, SuiteReport};
pub use weyl::{InversionSet, WeylElt, WeylGroup};
