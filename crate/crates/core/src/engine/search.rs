use std::collections::{HashMap, HashSet, VecDeque};

use super::compiled::{AbilityMemo, Cfg, Engine, Move};
use super::trace::{RunTrace, TraceStep};
use super::{MembershipResult, SearchOptions, Verdict};

struct Node {
    cfg: Cfg,
    parent: Option<usize>,
    step: Option<Move>,
}

impl Engine<'_> {
    /// Breadth-first search from the initial configuration. The first
    /// dequeued accepting configuration wins; successors are generated in
    /// component, then transition declaration order, so runs are
    /// reproducible.
    pub fn search(&self, opts: &SearchOptions) -> MembershipResult {
        let mut nodes = vec![Node { cfg: self.initial(), parent: None, step: None }];
        let mut queue = VecDeque::from([0usize]);
        let mut visited = HashSet::new();
        let mut memo: AbilityMemo = HashMap::new();
        if opts.memoize {
            visited.insert(self.key(&nodes[0].cfg));
        }
        let mut explored = 0usize;

        while let Some(ix) = queue.pop_front() {
            if explored >= opts.limits.max_configs {
                return MembershipResult {
                    verdict: Verdict::Limit,
                    witness_lower: None,
                    trace: None,
                    configs_explored: explored,
                };
            }
            explored += 1;
            if self.is_accepting(&nodes[ix].cfg) {
                let trace = self.rebuild(&nodes, ix);
                return MembershipResult {
                    verdict: Verdict::Accept,
                    witness_lower: Some(trace.final_config.committed_lower.clone()),
                    trace: Some(trace),
                    configs_explored: explored,
                };
            }
            for (next, step) in self.successors(&nodes[ix].cfg) {
                if opts.prune_stranded && self.stranded(&next, &mut memo) {
                    continue;
                }
                if opts.memoize && !visited.insert(self.key(&next)) {
                    continue;
                }
                nodes.push(Node { cfg: next, parent: Some(ix), step: Some(step) });
                queue.push_back(nodes.len() - 1);
            }
        }
        MembershipResult { verdict: Verdict::Reject, witness_lower: None, trace: None, configs_explored: explored }
    }

    fn rebuild(&self, nodes: &[Node], last: usize) -> RunTrace {
        let mut steps = Vec::new();
        let mut ix = last;
        while let Some(parent) = nodes[ix].parent {
            steps.push(self.export_step(nodes[ix].step.as_ref().expect("non-root node has a step")));
            ix = parent;
        }
        steps.reverse();
        RunTrace { initial: self.export(&nodes[ix].cfg), steps, final_config: self.export(&nodes[last].cfg) }
    }

    fn export_step(&self, step: &Move) -> TraceStep {
        match step {
            Move::Lockstep(chosen) => TraceStep::Rule1 {
                transitions: chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &t)| self.sys.components()[i].transitions()[t as usize].clone())
                    .collect(),
            },
            Move::Communicate(subs) => TraceStep::Rule2 {
                substitutions: subs.iter().map(|&(i, s)| (i as usize, self.state_name(s).clone())).collect(),
            },
        }
    }
}
