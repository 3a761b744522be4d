use thiserror::Error;

use crate::automaton::StateId;
use crate::model::{Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("'{0}' is reserved and cannot be used as a symbol")]
    ReservedSymbol(char),
    #[error("duplicate symbol '{0}' in alphabet")]
    DuplicateSymbol(Symbol),
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(Symbol),
    #[error("{upper}/{lower} is not a complementary double strand")]
    NotComplementary { upper: Word, lower: Word },
    #[error("invalid state name {0:?}")]
    InvalidStateName(String),
    #[error("state {0} is not declared")]
    UndeclaredState(StateId),
    #[error("no initial state")]
    MissingInitial,
    #[error("at least one component required")]
    NoComponents,
    #[error("component {0} does not share the system alphabet")]
    AlphabetMismatch(usize),
    #[error("component {0} does not share the system complementarity relation")]
    RelationMismatch(usize),
    #[error("query state {state} targets component {target}, which does not exist")]
    QueryTargetOutOfRange { state: StateId, target: usize },
    #[error("query state {0} appears in no component")]
    UnusedQueryState(StateId),
    #[error("query state {0} declared twice")]
    DuplicateQuery(StateId),
    #[error("configuration has {found} components, system has {expected}")]
    ArityMismatch { expected: usize, found: usize },
}
