//! Parallel communicating Watson-Crick automata systems.
//!
//! All components run over the same double strand. The upper word is the
//! input; the lower word is chosen nondeterministically, one symbol at a time,
//! the first time any lower head moves past the committed frontier. Every
//! component then sees the same committed symbols.
//!
//! A step of the system is either
//!
//! * a lockstep step, allowed only when no component is in a query state:
//!   every component applies one of its transitions simultaneously, or
//! * a communication step, taken whenever some component is in a query state
//!   `K_j`: it receives the current state of component `j`, unless that state
//!   is itself a query state. No head moves.
//!
//! A word is accepted when some run reaches a configuration in which every
//! head of every component has consumed its whole strand and every component
//! is in one of its final states.

mod brute;
mod compiled;
mod search;
mod trace;

use std::fmt;

use crate::automaton::{StateId, WkAutomaton};
use crate::error::ModelError;
use crate::model::{Alphabet, ComplementarityRelation, Word};

pub use brute::brute_force_accepts;
pub use trace::{validate_trace, RunTrace, TraceError, TraceStep};

use compiled::Engine;

/// `A = (V, ρ, A_1, …, A_n, K)`.
///
/// Component indices are 0-based in this API; text formats use 1-based
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcwkSystem {
    alphabet: Alphabet,
    relation: ComplementarityRelation,
    components: Vec<WkAutomaton>,
    queries: Vec<(StateId, usize)>,
}

impl PcwkSystem {
    /// `queries` maps each query state `K` to the index of the component it
    /// reads from.
    pub fn new(components: Vec<WkAutomaton>, queries: Vec<(StateId, usize)>) -> Result<Self, ModelError> {
        let first = components.first().ok_or(ModelError::NoComponents)?;
        let alphabet = first.alphabet().clone();
        let relation = first.relation().clone();
        for (i, c) in components.iter().enumerate() {
            if c.alphabet() != &alphabet {
                return Err(ModelError::AlphabetMismatch(i));
            }
            if c.relation() != &relation {
                return Err(ModelError::RelationMismatch(i));
            }
        }
        for (k, (state, target)) in queries.iter().enumerate() {
            if queries[..k].iter().any(|(s, _)| s == state) {
                return Err(ModelError::DuplicateQuery(state.clone()));
            }
            if *target >= components.len() {
                return Err(ModelError::QueryTargetOutOfRange { state: state.clone(), target: *target });
            }
            if !components.iter().any(|c| c.has_state(state)) {
                return Err(ModelError::UnusedQueryState(state.clone()));
            }
        }
        Ok(PcwkSystem { alphabet, relation, components, queries })
    }

    /// The degree-1 system with no query states.
    pub fn from_automaton(aut: WkAutomaton) -> Self {
        PcwkSystem {
            alphabet: aut.alphabet().clone(),
            relation: aut.relation().clone(),
            components: vec![aut],
            queries: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relation(&self) -> &ComplementarityRelation {
        &self.relation
    }

    pub fn components(&self) -> &[WkAutomaton] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.len()
    }

    /// Query states with their target component, in declaration order.
    pub fn queries(&self) -> &[(StateId, usize)] {
        &self.queries
    }

    pub fn query_target(&self, state: &StateId) -> Option<usize> {
        self.queries.iter().find(|(s, _)| s == state).map(|&(_, t)| t)
    }

    pub fn is_query_state(&self, state: &StateId) -> bool {
        self.query_target(state).is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentConfig {
    pub state: StateId,
    pub upper_pos: usize,
    pub lower_pos: usize,
}

/// Per-component state and head positions, plus the lower-strand prefix
/// committed so far. `committed_lower.len()` is the largest lower position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemConfiguration {
    pub components: Vec<ComponentConfig>,
    pub committed_lower: Word,
}

impl SystemConfiguration {
    pub fn initial(sys: &PcwkSystem) -> Self {
        SystemConfiguration {
            components: sys
                .components()
                .iter()
                .map(|c| ComponentConfig { state: c.initial().clone(), upper_pos: 0, lower_pos: 0 })
                .collect(),
            committed_lower: Word::empty(),
        }
    }
}

impl fmt::Display for SystemConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.committed_lower)?;
        for c in &self.components {
            write!(f, " {}@{},{}", c.state, c.upper_pos, c.lower_pos)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject,
    Limit,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accept => "ACCEPT",
            Verdict::Reject => "REJECT",
            Verdict::Limit => "LIMIT",
        })
    }
}

/// `witness_lower` and `trace` are present iff the verdict is `Accept`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipResult {
    pub verdict: Verdict,
    pub witness_lower: Option<Word>,
    pub trace: Option<RunTrace>,
    pub configs_explored: usize,
}

impl MembershipResult {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accept
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Upper bound on configurations dequeued before giving up.
    pub max_configs: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_configs: 1_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub limits: SearchLimits,
    /// Skip configurations whose canonical key was already visited.
    pub memoize: bool,
    /// Drop configurations in which some component still has input left on a
    /// strand but can provably never read from that strand again.
    pub prune_stranded: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limits: SearchLimits::default(), memoize: true, prune_stranded: true }
    }
}

impl From<SearchLimits> for SearchOptions {
    fn from(limits: SearchLimits) -> Self {
        SearchOptions { limits, ..SearchOptions::default() }
    }
}

/// Breadth-first membership search with lazy lower-strand commitment.
pub fn search(sys: &PcwkSystem, upper: &Word, limits: SearchLimits) -> Result<MembershipResult, ModelError> {
    search_with(sys, upper, &limits.into())
}

pub fn search_with(sys: &PcwkSystem, upper: &Word, opts: &SearchOptions) -> Result<MembershipResult, ModelError> {
    Ok(Engine::new(sys, upper)?.search(opts))
}

/// All lockstep successors of `cfg`. Each component's lower read must agree
/// with the committed strand; reads past the frontier commit new symbols,
/// which must be complementary to the upper symbol at the same position.
pub fn rule1_successors(
    sys: &PcwkSystem,
    cfg: &SystemConfiguration,
    upper: &Word,
) -> Result<Vec<SystemConfiguration>, ModelError> {
    let engine = Engine::new(sys, upper)?;
    let c = engine.import(cfg)?;
    let mut out = Vec::new();
    engine.rule1(&c, &mut out);
    Ok(out.into_iter().map(|(next, _)| engine.export(&next)).collect())
}

/// The communication step from `cfg`. Returns `cfg` unchanged when no
/// component can receive a state (no query states, or every queried
/// component is itself querying).
pub fn rule2_successor(sys: &PcwkSystem, cfg: &SystemConfiguration) -> Result<SystemConfiguration, ModelError> {
    let engine = Engine::new(sys, &Word::empty())?;
    let c = engine.import(cfg)?;
    Ok(match engine.rule2(&c) {
        Some((next, _)) => engine.export(&next),
        None => cfg.clone(),
    })
}

/// The one-step relation: communication if any component is querying,
/// lockstep otherwise. Successors equal to `cfg` are dropped.
pub fn successors(
    sys: &PcwkSystem,
    cfg: &SystemConfiguration,
    upper: &Word,
) -> Result<Vec<SystemConfiguration>, ModelError> {
    let engine = Engine::new(sys, upper)?;
    let c = engine.import(cfg)?;
    Ok(engine.successors(&c).into_iter().map(|(next, _)| engine.export(&next)).collect())
}

pub fn is_accepting(sys: &PcwkSystem, cfg: &SystemConfiguration, upper: &Word) -> bool {
    let m = upper.len();
    cfg.components.len() == sys.degree()
        && cfg.committed_lower.len() == m
        && cfg
            .components
            .iter()
            .zip(sys.components())
            .all(|(c, aut)| c.upper_pos == m && c.lower_pos == m && aut.is_final(&c.state))
}
