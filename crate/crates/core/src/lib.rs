//! # wkpc
//!
//! Watson-Crick finite automata and parallel communicating Watson-Crick
//! automata systems (PCWK systems).
//!
//! A Watson-Crick automaton has two read heads, one per strand of a
//! double-stranded tape, and a single control state. The lower strand is not
//! given: a word is accepted if *some* lower strand, complementary to the
//! input under the relation ρ, admits an accepting run. A PCWK system runs
//! several such automata in lockstep over the same double strand, letting
//! them exchange states through query states.
//!
//! ```
//! use wkpc::constructions::{build_squares_system, SquaresVariant};
//! use wkpc::engine::{search, SearchLimits, Verdict};
//! use wkpc::model::Word;
//!
//! let sys = build_squares_system(SquaresVariant::Corrected);
//! let r = search(&sys, &Word::parse("aaaaaaaaa").unwrap(), SearchLimits::default()).unwrap();
//! assert_eq!(r.verdict, Verdict::Accept);
//! assert_eq!(r.witness_lower.unwrap().to_string(), "bbbcccbbb");
//! ```
//!
//! Modules:
//!
//! * [`model`]: symbols, words, complementarity relations, double strands
//! * [`automaton`]: single Watson-Crick automata
//! * [`engine`]: system semantics, lazy-strand search, brute-force oracle,
//!   trace replay
//! * [`constructions`]: the two-component system for `{ a^(n²) : n > 1 }`
//! * [`verification`]: unary scans and the perfect-square cross-check
//! * [`format`]: system, trace and scan report text formats
//! * [`cli`]: the `wkpc` command line

pub mod automaton;
pub mod cli;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod format;
pub mod model;
pub mod verification;

pub use automaton::{StateId, WkAutomaton, WkTransition};
pub use engine::{MembershipResult, PcwkSystem, SearchLimits, SystemConfiguration, Verdict};
pub use error::ModelError;
pub use model::{Alphabet, ComplementarityRelation, Symbol, Word};
