//! Interned representation of a system bound to one input word.

use std::collections::HashMap;
use std::rc::Rc;

use super::{ComponentConfig, PcwkSystem, SystemConfiguration};
use crate::automaton::StateId;
use crate::error::ModelError;
use crate::model::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Head {
    pub state: u32,
    pub upos: u32,
    pub lpos: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Cfg {
    pub heads: Box<[Head]>,
    pub committed: Rc<[u8]>,
}

/// Heads plus the committed symbols from the lowest lower head onwards.
/// Anything before every lower head can no longer be read.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    heads: Box<[Head]>,
    window: Box<[u8]>,
}

/// How a configuration was reached from its parent.
#[derive(Debug, Clone)]
pub(crate) enum Move {
    /// Transition index (into the component's declaration order) per component.
    Lockstep(Box<[u32]>),
    /// `(component, new state)` for every component that received a state.
    Communicate(Box<[(u32, u32)]>),
}

struct CTrans {
    upper: Box<[u8]>,
    lower: Box<[u8]>,
    to: u32,
}

struct Component {
    trans: Vec<CTrans>,
    outgoing: Vec<Vec<u32>>,
    is_final: Vec<bool>,
    reads_upper: Vec<bool>,
    reads_lower: Vec<bool>,
}

/// Per state tuple: whether each component can still read (upper, lower).
pub(crate) type AbilityMemo = HashMap<Box<[u32]>, Vec<(bool, bool)>>;

pub(crate) struct Engine<'a> {
    pub sys: &'a PcwkSystem,
    names: Vec<StateId>,
    ids: HashMap<StateId, u32>,
    symbols: Vec<Symbol>,
    related: Vec<Vec<bool>>,
    query_target: Vec<Option<u32>>,
    components: Vec<Component>,
    pub upper: Vec<u8>,
}

impl<'a> Engine<'a> {
    pub fn new(sys: &'a PcwkSystem, upper: &Word) -> Result<Self, ModelError> {
        sys.alphabet().check_word(upper)?;
        let symbols = sys.alphabet().symbols().to_vec();
        let sym_ix = |s: Symbol| symbols.iter().position(|&x| x == s).unwrap() as u8;

        let mut names: Vec<StateId> = Vec::new();
        let mut ids: HashMap<StateId, u32> = HashMap::new();
        let mut intern = |s: &StateId| -> u32 {
            *ids.entry(s.clone()).or_insert_with(|| {
                names.push(s.clone());
                (names.len() - 1) as u32
            })
        };
        for c in sys.components() {
            for s in c.states() {
                intern(s);
            }
        }
        for (k, _) in sys.queries() {
            intern(k);
        }
        let n_states = names.len();

        let mut related = vec![vec![false; symbols.len()]; symbols.len()];
        for &(a, b) in sys.relation().pairs() {
            related[sym_ix(a) as usize][sym_ix(b) as usize] = true;
        }
        let mut query_target = vec![None; n_states];
        for (k, t) in sys.queries() {
            query_target[ids[k] as usize] = Some(*t as u32);
        }

        let components = sys
            .components()
            .iter()
            .map(|aut| {
                let mut outgoing = vec![Vec::new(); n_states];
                let mut reads_upper = vec![false; n_states];
                let mut reads_lower = vec![false; n_states];
                let trans = aut
                    .transitions()
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        let from = ids[&t.from] as usize;
                        outgoing[from].push(i as u32);
                        reads_upper[from] |= !t.upper_read.is_empty();
                        reads_lower[from] |= !t.lower_read.is_empty();
                        CTrans {
                            upper: t.upper_read.iter().map(|&s| sym_ix(s)).collect(),
                            lower: t.lower_read.iter().map(|&s| sym_ix(s)).collect(),
                            to: ids[&t.to],
                        }
                    })
                    .collect();
                let mut is_final = vec![false; n_states];
                for f in aut.finals() {
                    is_final[ids[f] as usize] = true;
                }
                Component { trans, outgoing, is_final, reads_upper, reads_lower }
            })
            .collect();

        let upper = upper.iter().map(|&s| sym_ix(s)).collect();
        Ok(Engine { sys, names, ids, symbols, related, query_target, components, upper })
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn initial(&self) -> Cfg {
        Cfg {
            heads: self
                .sys
                .components()
                .iter()
                .map(|c| Head { state: self.ids[c.initial()], upos: 0, lpos: 0 })
                .collect(),
            committed: Rc::from(Vec::new()),
        }
    }

    pub fn key(&self, cfg: &Cfg) -> Key {
        let low = cfg.heads.iter().map(|h| h.lpos as usize).min().unwrap_or(0);
        Key { heads: cfg.heads.clone(), window: cfg.committed[low..].into() }
    }

    pub fn is_query(&self, state: u32) -> bool {
        self.query_target[state as usize].is_some()
    }

    pub fn is_accepting(&self, cfg: &Cfg) -> bool {
        let m = self.len() as u32;
        cfg.heads.iter().zip(&self.components).all(|(h, c)| h.upos == m && h.lpos == m && c.is_final[h.state as usize])
    }

    pub fn successors(&self, cfg: &Cfg) -> Vec<(Cfg, Move)> {
        let mut out = Vec::new();
        if cfg.heads.iter().any(|h| self.is_query(h.state)) {
            out.extend(self.rule2(cfg));
        } else {
            self.rule1(cfg, &mut out);
            out.retain(|(next, _)| next != cfg);
        }
        out
    }

    /// `None` when no component changes state.
    pub fn rule2(&self, cfg: &Cfg) -> Option<(Cfg, Move)> {
        let mut heads = cfg.heads.clone();
        let mut subs = Vec::new();
        for (i, h) in cfg.heads.iter().enumerate() {
            if let Some(j) = self.query_target[h.state as usize] {
                let source = cfg.heads[j as usize].state;
                if !self.is_query(source) {
                    heads[i].state = source;
                    subs.push((i as u32, source));
                }
            }
        }
        if subs.is_empty() {
            return None;
        }
        Some((Cfg { heads, committed: cfg.committed.clone() }, Move::Communicate(subs.into())))
    }

    pub fn rule1(&self, cfg: &Cfg, out: &mut Vec<(Cfg, Move)>) {
        let mut work = cfg.committed.to_vec();
        let mut heads = cfg.heads.to_vec();
        let mut chosen = vec![0u32; heads.len()];
        self.rule1_from(0, cfg, &mut work, &mut heads, &mut chosen, out);
    }

    fn rule1_from(
        &self,
        i: usize,
        cfg: &Cfg,
        work: &mut Vec<u8>,
        heads: &mut [Head],
        chosen: &mut [u32],
        out: &mut Vec<(Cfg, Move)>,
    ) {
        if i == heads.len() {
            let committed = if work.len() == cfg.committed.len() { cfg.committed.clone() } else { Rc::from(&work[..]) };
            out.push((Cfg { heads: heads.into(), committed }, Move::Lockstep(chosen.into())));
            return;
        }
        let h = cfg.heads[i];
        let comp = &self.components[i];
        for &ti in &comp.outgoing[h.state as usize] {
            let t = &comp.trans[ti as usize];
            let u = h.upos as usize;
            let u_end = u + t.upper.len();
            if u_end > self.upper.len() || self.upper[u..u_end] != t.upper[..] {
                continue;
            }
            let saved = work.len();
            if self.read_lower(work, h.lpos as usize, &t.lower) {
                heads[i] = Head { state: t.to, upos: u_end as u32, lpos: h.lpos + t.lower.len() as u32 };
                chosen[i] = ti;
                self.rule1_from(i + 1, cfg, work, heads, chosen, out);
            }
            work.truncate(saved);
        }
        heads[i] = h;
    }

    /// Matches `read` at `pos` against the shared strand, committing symbols
    /// past the frontier. Leaves partial commits for the caller to truncate.
    fn read_lower(&self, work: &mut Vec<u8>, pos: usize, read: &[u8]) -> bool {
        for (k, &sym) in read.iter().enumerate() {
            let p = pos + k;
            if p >= self.upper.len() {
                return false;
            }
            if p < work.len() {
                if work[p] != sym {
                    return false;
                }
            } else {
                if !self.related[self.upper[p] as usize][sym as usize] {
                    return false;
                }
                work.push(sym);
            }
        }
        true
    }

    /// True when some component still has input on a strand but no state it
    /// could ever reach has a transition reading that strand.
    ///
    /// Reachable states are over-approximated per component: closure under
    /// its own transitions, and a query state `K_j` pulls in everything
    /// component `j` could reach.
    pub fn stranded(&self, cfg: &Cfg, memo: &mut AbilityMemo) -> bool {
        let m = self.len() as u32;
        let states: Box<[u32]> = cfg.heads.iter().map(|h| h.state).collect();
        let abilities = memo.entry(states).or_insert_with_key(|s| self.reach_abilities(s));
        cfg.heads
            .iter()
            .zip(abilities.iter())
            .any(|(h, &(can_up, can_low))| (h.upos < m && !can_up) || (h.lpos < m && !can_low))
    }

    fn reach_abilities(&self, states: &[u32]) -> Vec<(bool, bool)> {
        let n = states.len();
        let n_states = self.names.len();
        let mut reach = vec![vec![false; n_states]; n];
        for (i, &s) in states.iter().enumerate() {
            reach[i][s as usize] = true;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                let comp = &self.components[i];
                for s in 0..n_states {
                    if !reach[i][s] {
                        continue;
                    }
                    for &ti in &comp.outgoing[s] {
                        let to = comp.trans[ti as usize].to as usize;
                        if !reach[i][to] {
                            reach[i][to] = true;
                            changed = true;
                        }
                    }
                    if let Some(j) = self.query_target[s] {
                        let imported = reach[j as usize].clone();
                        for (x, _) in imported.iter().enumerate().filter(|(_, &r)| r) {
                            if !reach[i][x] {
                                reach[i][x] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        (0..n)
            .map(|i| {
                let comp = &self.components[i];
                let up = (0..n_states).any(|s| reach[i][s] && comp.reads_upper[s]);
                let low = (0..n_states).any(|s| reach[i][s] && comp.reads_lower[s]);
                (up, low)
            })
            .collect()
    }

    pub fn import(&self, cfg: &SystemConfiguration) -> Result<Cfg, ModelError> {
        if cfg.components.len() != self.components.len() {
            return Err(ModelError::ArityMismatch { expected: self.components.len(), found: cfg.components.len() });
        }
        let heads = cfg
            .components
            .iter()
            .map(|c| {
                let state = *self.ids.get(&c.state).ok_or_else(|| ModelError::UndeclaredState(c.state.clone()))?;
                Ok(Head { state, upos: c.upper_pos as u32, lpos: c.lower_pos as u32 })
            })
            .collect::<Result<Box<[Head]>, ModelError>>()?;
        let committed = cfg
            .committed_lower
            .iter()
            .map(|&s| self.symbols.iter().position(|&x| x == s).map(|i| i as u8).ok_or(ModelError::UnknownSymbol(s)))
            .collect::<Result<Vec<u8>, ModelError>>()?;
        Ok(Cfg { heads, committed: Rc::from(committed) })
    }

    pub fn export(&self, cfg: &Cfg) -> SystemConfiguration {
        SystemConfiguration {
            components: cfg
                .heads
                .iter()
                .map(|h| ComponentConfig {
                    state: self.names[h.state as usize].clone(),
                    upper_pos: h.upos as usize,
                    lower_pos: h.lpos as usize,
                })
                .collect(),
            committed_lower: self.word(&cfg.committed),
        }
    }

    pub fn word(&self, syms: &[u8]) -> Word {
        syms.iter().map(|&i| self.symbols[i as usize]).collect()
    }

    pub fn state_name(&self, s: u32) -> &StateId {
        &self.names[s as usize]
    }
}
