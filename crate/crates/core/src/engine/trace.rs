//! Run traces and their independent replay.
//!
//! [`validate_trace`] works on the public types only and re-derives every
//! step from the system definition, so it does not share code with the
//! search that produced the trace.

use std::fmt;

use thiserror::Error;

use super::{is_accepting, PcwkSystem, SystemConfiguration};
use crate::automaton::{StateId, WkTransition};
use crate::model::{Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// One transition per component, in component order.
    Rule1 { transitions: Vec<WkTransition> },
    /// `(component index, received state)` for each component that received
    /// a state, in component order.
    Rule2 { substitutions: Vec<(usize, StateId)> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunTrace {
    pub initial: SystemConfiguration,
    pub steps: Vec<TraceStep>,
    pub final_config: SystemConfiguration,
}

impl RunTrace {
    /// Replays the steps without checking them, returning every intermediate
    /// configuration (initial first). `None` if a step cannot be applied at
    /// all (wrong arity or component index).
    pub fn configurations(&self) -> Option<Vec<SystemConfiguration>> {
        let mut out = vec![self.initial.clone()];
        let mut cur = self.initial.clone();
        for step in &self.steps {
            match step {
                TraceStep::Rule1 { transitions } => {
                    if transitions.len() != cur.components.len() {
                        return None;
                    }
                    for (c, t) in cur.components.iter_mut().zip(transitions) {
                        for (k, &s) in t.lower_read.iter().enumerate() {
                            if c.lower_pos + k == cur.committed_lower.len() {
                                cur.committed_lower.push(s);
                            }
                        }
                        c.state = t.to.clone();
                        c.upper_pos += t.upper_read.len();
                        c.lower_pos += t.lower_read.len();
                    }
                }
                TraceStep::Rule2 { substitutions } => {
                    for (i, s) in substitutions {
                        cur.components.get_mut(*i)?.state = s.clone();
                    }
                }
            }
            out.push(cur.clone());
        }
        Some(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {reason}", match .step { Some(i) => format!("step {}", i + 1), None => "trace".to_string() })]
pub struct TraceError {
    /// 0-based index of the first offending step; `None` for problems with
    /// the initial or final configuration.
    pub step: Option<usize>,
    pub reason: String,
}

fn fail<T>(step: Option<usize>, reason: impl fmt::Display) -> Result<T, TraceError> {
    Err(TraceError { step, reason: reason.to_string() })
}

/// Checks that `trace` is an accepting run of `sys` on `upper`.
pub fn validate_trace(sys: &PcwkSystem, upper: &Word, trace: &RunTrace) -> Result<(), TraceError> {
    if trace.initial != SystemConfiguration::initial(sys) {
        return fail(None, "initial configuration is not the system's initial configuration");
    }
    let mut cur = trace.initial.clone();
    for (ix, step) in trace.steps.iter().enumerate() {
        let at = Some(ix);
        match step {
            TraceStep::Rule1 { transitions } => {
                if let Some(c) = cur.components.iter().find(|c| sys.is_query_state(&c.state)) {
                    return fail(at, format!("lockstep step while a component is in query state {}", c.state));
                }
                if transitions.len() != sys.degree() {
                    return fail(at, format!("{} transitions for {} components", transitions.len(), sys.degree()));
                }
                let mut committed = cur.committed_lower.clone();
                for (i, t) in transitions.iter().enumerate() {
                    let aut = &sys.components()[i];
                    let c = &cur.components[i];
                    if !aut.transitions().contains(t) {
                        return fail(at, format!("component {} has no transition {}", i + 1, t));
                    }
                    if t.from != c.state {
                        return fail(at, format!("component {} is in {}, not {}", i + 1, c.state, t.from));
                    }
                    if !upper.get(c.upper_pos..).is_some_and(|rest| rest.starts_with(&t.upper_read)) {
                        return fail(
                            at,
                            format!("component {} cannot read {} on the upper strand", i + 1, t.upper_read),
                        );
                    }
                    if let Err(reason) = extend_lower(sys, upper, &mut committed, c.lower_pos, &t.lower_read) {
                        return fail(at, format!("component {}: {}", i + 1, reason));
                    }
                }
                for (c, t) in cur.components.iter_mut().zip(transitions) {
                    c.state = t.to.clone();
                    c.upper_pos += t.upper_read.len();
                    c.lower_pos += t.lower_read.len();
                }
                cur.committed_lower = committed;
            }
            TraceStep::Rule2 { substitutions } => {
                let expected: Vec<(usize, StateId)> = cur
                    .components
                    .iter()
                    .enumerate()
                    .filter_map(|(i, c)| {
                        let target = sys.query_target(&c.state)?;
                        let source = &cur.components[target].state;
                        (!sys.is_query_state(source)).then(|| (i, source.clone()))
                    })
                    .collect();
                if expected.is_empty() {
                    return fail(at, "communication step with nothing to communicate");
                }
                if &expected != substitutions {
                    return fail(at, "communication step does not match the query states");
                }
                for (i, s) in expected {
                    cur.components[i].state = s;
                }
            }
        }
    }
    if cur != trace.final_config {
        return fail(None, format!("replay ends in {}, trace claims {}", cur, trace.final_config));
    }
    if !is_accepting(sys, &cur, upper) {
        return fail(None, format!("final configuration {} is not accepting", cur));
    }
    Ok(())
}

fn extend_lower(
    sys: &PcwkSystem,
    upper: &Word,
    committed: &mut Word,
    pos: usize,
    read: &[Symbol],
) -> Result<(), String> {
    for (k, &s) in read.iter().enumerate() {
        let p = pos + k;
        if p < committed.len() {
            if committed[p] != s {
                return Err(format!("reads {} at lower position {}, strand has {}", s, p, committed[p]));
            }
        } else if p == committed.len() && p < upper.len() {
            if !sys.relation().contains(upper[p], s) {
                return Err(format!("{} at lower position {} is not complementary to {}", s, p, upper[p]));
            }
            committed.push(s);
        } else {
            return Err(format!("lower read past position {}", p));
        }
    }
    Ok(())
}
