//! Reference decision procedure: fix the whole lower strand up front.
//!
//! Every complementary lower strand is enumerated and, for each, the
//! configuration graph is searched with that strand fixed. There is no lazy
//! commitment and no window canonicalization; visited configurations are
//! compared in full. Exponential in the word length, meant for small inputs.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{
    ComponentConfig, MembershipResult, PcwkSystem, RunTrace, SearchLimits, SystemConfiguration, TraceStep, Verdict,
};
use crate::automaton::{StateId, WkTransition};
use crate::error::ModelError;
use crate::model::{Symbol, Word};

type Heads = Vec<(StateId, usize, usize)>;

pub fn brute_force_accepts(
    sys: &PcwkSystem,
    upper: &Word,
    limits: SearchLimits,
) -> Result<MembershipResult, ModelError> {
    sys.alphabet().check_word(upper)?;
    let choices: Vec<Vec<Symbol>> =
        upper.iter().map(|&a| sys.relation().complements_of(a).into_iter().collect()).collect();
    let mut explored = 0usize;
    let reject = |explored| MembershipResult {
        verdict: Verdict::Reject,
        witness_lower: None,
        trace: None,
        configs_explored: explored,
    };
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(reject(0));
    }
    let by_state: Vec<HashMap<&StateId, Vec<&WkTransition>>> = sys
        .components()
        .iter()
        .map(|c| {
            let mut map: HashMap<&StateId, Vec<&WkTransition>> = HashMap::new();
            for t in c.transitions() {
                map.entry(&t.from).or_default().push(t);
            }
            map
        })
        .collect();

    // Odometer over the per-position complement choices.
    let mut digits = vec![0usize; upper.len()];
    loop {
        let lower: Word = digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect();
        match run_fixed(sys, &by_state, upper, &lower, limits.max_configs, &mut explored) {
            Some(Some(trace)) => {
                return Ok(MembershipResult {
                    verdict: Verdict::Accept,
                    witness_lower: Some(lower),
                    trace: Some(trace),
                    configs_explored: explored,
                })
            }
            Some(None) => {}
            None => {
                return Ok(MembershipResult {
                    verdict: Verdict::Limit,
                    witness_lower: None,
                    trace: None,
                    configs_explored: explored,
                })
            }
        }
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(reject(explored));
            }
            digits[pos] += 1;
            if digits[pos] < choices[pos].len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// `None` on limit, `Some(None)` on reject, `Some(Some(trace))` on accept.
fn run_fixed(
    sys: &PcwkSystem,
    by_state: &[HashMap<&StateId, Vec<&WkTransition>>],
    upper: &Word,
    lower: &Word,
    max_configs: usize,
    explored: &mut usize,
) -> Option<Option<RunTrace>> {
    let m = upper.len();
    let start: Heads = sys.components().iter().map(|c| (c.initial().clone(), 0, 0)).collect();
    let mut nodes: Vec<(Heads, Option<(usize, TraceStep)>)> = vec![(start.clone(), None)];
    let mut seen: HashSet<Heads> = HashSet::from([start]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(ix) = queue.pop_front() {
        if *explored >= max_configs {
            return None;
        }
        *explored += 1;
        let heads = nodes[ix].0.clone();
        let accepting = heads.iter().zip(sys.components()).all(|((s, u, l), c)| *u == m && *l == m && c.is_final(s));
        if accepting {
            return Some(Some(rebuild(&nodes, ix, lower)));
        }

        let mut next: Vec<(Heads, TraceStep)> = Vec::new();
        if heads.iter().any(|(s, _, _)| sys.is_query_state(s)) {
            let mut after = heads.clone();
            let mut subs = Vec::new();
            for (i, (s, _, _)) in heads.iter().enumerate() {
                if let Some(j) = sys.query_target(s) {
                    let source = &heads[j].0;
                    if !sys.is_query_state(source) {
                        after[i].0 = source.clone();
                        subs.push((i, source.clone()));
                    }
                }
            }
            if !subs.is_empty() {
                next.push((after, TraceStep::Rule2 { substitutions: subs }));
            }
        } else {
            let options: Vec<Vec<&WkTransition>> = heads
                .iter()
                .enumerate()
                .map(|(i, (s, u, l))| {
                    by_state[i]
                        .get(s)
                        .map(|ts| {
                            ts.iter()
                                .copied()
                                .filter(|t| {
                                    upper[*u..].starts_with(&t.upper_read) && lower[*l..].starts_with(&t.lower_read)
                                })
                                .collect()
                        })
                        .unwrap_or_default()
                })
                .collect();
            for combo in cartesian(&options) {
                let after: Heads = heads
                    .iter()
                    .zip(&combo)
                    .map(|((_, u, l), t)| (t.to.clone(), u + t.upper_read.len(), l + t.lower_read.len()))
                    .collect();
                if after != heads {
                    next.push((after, TraceStep::Rule1 { transitions: combo.into_iter().cloned().collect() }));
                }
            }
        }
        for (after, step) in next {
            if seen.insert(after.clone()) {
                nodes.push((after, Some((ix, step))));
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    Some(None)
}

fn cartesian<'a>(options: &[Vec<&'a WkTransition>]) -> Vec<Vec<&'a WkTransition>> {
    let mut out: Vec<Vec<&WkTransition>> = vec![Vec::new()];
    for opts in options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&t| {
                    let mut p = prefix.clone();
                    p.push(t);
                    p
                })
            })
            .collect();
    }
    out
}

fn rebuild(nodes: &[(Heads, Option<(usize, TraceStep)>)], last: usize, lower: &Word) -> RunTrace {
    let to_config = |heads: &Heads| {
        let frontier = heads.iter().map(|h| h.2).max().unwrap_or(0);
        SystemConfiguration {
            components: heads
                .iter()
                .map(|(s, u, l)| ComponentConfig { state: s.clone(), upper_pos: *u, lower_pos: *l })
                .collect(),
            committed_lower: Word::from(&lower[..frontier]),
        }
    };
    let mut steps = Vec::new();
    let mut ix = last;
    while let Some((parent, step)) = &nodes[ix].1 {
        steps.push(step.clone());
        ix = *parent;
    }
    steps.reverse();
    RunTrace { initial: to_config(&nodes[ix].0), steps, final_config: to_config(&nodes[last].0) }
}
