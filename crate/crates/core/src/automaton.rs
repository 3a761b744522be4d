//! Single Watson-Crick finite automata.
//!
//! An automaton reads a double-stranded tape with two independent heads
//! driven by one control state. A transition `q (w1/w2) -> q'` consumes `w1`
//! from the upper strand and `w2` from the lower strand; either may be λ and
//! their lengths need not match. Complementarity is a property of the whole
//! tape, not of transition labels.
//!
//! Membership is decided by wrapping the automaton as a one-component
//! [`PcwkSystem`] and running the system search.

use std::fmt;
use std::sync::Arc;

use crate::engine::{self, MembershipResult, PcwkSystem, SearchLimits};
use crate::error::ModelError;
use crate::model::{is_prefix, Alphabet, ComplementarityRelation, Symbol, Word};

/// A state name, unique within a component. Cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(Arc<str>);

impl StateId {
    /// State names are nonempty, contain no whitespace or `#`, and are not `-`.
    pub fn new(name: &str) -> Result<Self, ModelError> {
        if name.is_empty() || name == "-" || name.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(ModelError::InvalidStateName(name.to_string()));
        }
        Ok(StateId(name.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WkTransition {
    pub from: StateId,
    pub upper_read: Word,
    pub lower_read: Word,
    pub to: StateId,
}

impl fmt::Display for WkTransition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} --{}/{}--> {}", self.from, self.upper_read, self.lower_read, self.to)
    }
}

/// `M = (V, ρ, Q, q0, F, δ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WkAutomaton {
    alphabet: Alphabet,
    relation: ComplementarityRelation,
    states: Vec<StateId>,
    initial: StateId,
    finals: Vec<StateId>,
    transitions: Vec<WkTransition>,
}

impl WkAutomaton {
    pub fn builder(alphabet: Alphabet, relation: ComplementarityRelation) -> WkAutomatonBuilder {
        WkAutomatonBuilder {
            alphabet,
            relation,
            declared_states: None,
            initial: None,
            finals: Vec::new(),
            transitions: Vec::new(),
            error: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relation(&self) -> &ComplementarityRelation {
        &self.relation
    }

    /// States in first-appearance order.
    pub fn states(&self) -> &[StateId] {
        &self.states
    }

    pub fn initial(&self) -> &StateId {
        &self.initial
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, s: &StateId) -> bool {
        self.finals.contains(s)
    }

    pub fn has_state(&self, s: &StateId) -> bool {
        self.states.contains(s)
    }

    /// Transitions in declaration order.
    pub fn transitions(&self) -> &[WkTransition] {
        &self.transitions
    }

    pub fn applicable_transitions(
        &self,
        state: &StateId,
        upper_remaining: &[Symbol],
        lower_remaining: &[Symbol],
    ) -> Vec<&WkTransition> {
        self.transitions
            .iter()
            .filter(|t| {
                &t.from == state
                    && is_prefix(&t.upper_read, upper_remaining)
                    && is_prefix(&t.lower_read, lower_remaining)
            })
            .collect()
    }

    /// Decides `upper ∈ L(M)` by searching over complementary lower strands.
    pub fn accepts(&self, upper: &Word, limits: SearchLimits) -> Result<MembershipResult, ModelError> {
        let sys = PcwkSystem::from_automaton(self.clone());
        engine::search(&sys, upper, limits)
    }
}

pub struct WkAutomatonBuilder {
    alphabet: Alphabet,
    relation: ComplementarityRelation,
    declared_states: Option<Vec<StateId>>,
    initial: Option<StateId>,
    finals: Vec<StateId>,
    transitions: Vec<WkTransition>,
    error: Option<ModelError>,
}

impl WkAutomatonBuilder {
    fn state(&mut self, name: &str) -> Option<StateId> {
        match StateId::new(name) {
            Ok(s) => Some(s),
            Err(e) => {
                self.error.get_or_insert(e);
                None
            }
        }
    }

    fn word(&mut self, text: &str) -> Option<Word> {
        match Word::parse(text) {
            Ok(w) => Some(w),
            Err(e) => {
                self.error.get_or_insert(e);
                None
            }
        }
    }

    /// Fixes the state set. Without it, states are derived from the initial
    /// state, the transitions and the final states, in that order.
    pub fn states<'a, I: IntoIterator<Item = &'a str>>(mut self, names: I) -> Self {
        let mut out = Vec::new();
        for n in names {
            if let Some(s) = self.state(n) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        self.declared_states = Some(out);
        self
    }

    pub fn initial(mut self, name: &str) -> Self {
        self.initial = self.state(name);
        self
    }

    pub fn final_state(mut self, name: &str) -> Self {
        if let Some(s) = self.state(name) {
            if !self.finals.contains(&s) {
                self.finals.push(s);
            }
        }
        self
    }

    /// Adds `from --upper/lower--> to`; an empty string is λ.
    pub fn transition(mut self, from: &str, upper: &str, lower: &str, to: &str) -> Self {
        if let (Some(from), Some(upper_read), Some(lower_read), Some(to)) =
            (self.state(from), self.word(upper), self.word(lower), self.state(to))
        {
            self.transitions.push(WkTransition { from, upper_read, lower_read, to });
        }
        self
    }

    pub fn push_transition(mut self, t: WkTransition) -> Self {
        self.transitions.push(t);
        self
    }

    pub fn build(self) -> Result<WkAutomaton, ModelError> {
        if let Some(e) = self.error {
            return Err(e);
        }
        self.relation.check_against(&self.alphabet)?;
        let initial = self.initial.ok_or(ModelError::MissingInitial)?;
        for t in &self.transitions {
            self.alphabet.check_word(&t.upper_read)?;
            self.alphabet.check_word(&t.lower_read)?;
        }
        let mentioned = std::iter::once(&initial)
            .chain(self.transitions.iter().flat_map(|t| [&t.from, &t.to]))
            .chain(self.finals.iter());
        let states = match self.declared_states {
            Some(declared) => {
                for s in mentioned {
                    if !declared.contains(s) {
                        return Err(ModelError::UndeclaredState(s.clone()));
                    }
                }
                declared
            }
            None => {
                let mut out: Vec<StateId> = Vec::new();
                for s in mentioned {
                    if !out.contains(s) {
                        out.push(s.clone());
                    }
                }
                out
            }
        };
        Ok(WkAutomaton {
            alphabet: self.alphabet,
            relation: self.relation,
            states,
            initial,
            finals: self.finals,
            transitions: self.transitions,
        })
    }
}
