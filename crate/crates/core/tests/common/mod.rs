#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use wkpc::engine::{RunTrace, TraceStep};
use wkpc::{Alphabet, ComplementarityRelation, PcwkSystem, StateId, Symbol, WkAutomaton, Word};

pub fn sym(c: char) -> Symbol {
    Symbol::new(c).unwrap()
}

pub fn word(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn unary(m: usize) -> Word {
    Word::repeat(sym('a'), m)
}

/// Every word over `letters` of length `0..=max_len`, shortest first.
pub fn all_words(letters: &str, max_len: usize) -> Vec<Word> {
    let syms: Vec<Symbol> = letters.chars().map(sym).collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                syms.iter().map(move |&s| {
                    let mut x = w.clone();
                    x.push(s);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn random_word<R: Rng>(rng: &mut R, letters: &[char], max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *letters.choose(rng).unwrap()).collect()
}

/// A random relation over `{a, b}` with at least one pair.
pub fn random_relation<R: Rng>(rng: &mut R) -> ComplementarityRelation {
    let all = [('a', 'a'), ('a', 'b'), ('b', 'a'), ('b', 'b')];
    loop {
        let pairs: Vec<(char, char)> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !pairs.is_empty() {
            return ComplementarityRelation::from_chars(&pairs).unwrap();
        }
    }
}

pub fn random_automaton<R: Rng>(
    rng: &mut R,
    rel: &ComplementarityRelation,
    max_states: usize,
    max_read: usize,
    extra_targets: &[&str],
) -> WkAutomaton {
    let k = rng.gen_range(1..=max_states);
    let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    let n_trans = rng.gen_range(1..=2 * k + 2);
    let mut b = WkAutomaton::builder(Alphabet::from_chars("ab").unwrap(), rel.clone()).initial("p0");
    for _ in 0..n_trans {
        let from = names.choose(rng).unwrap();
        let to = if !extra_targets.is_empty() && rng.gen_bool(0.25) {
            extra_targets.choose(rng).unwrap().to_string()
        } else {
            names.choose(rng).unwrap().clone()
        };
        let up = random_word(rng, &['a', 'b'], max_read);
        let low = random_word(rng, &['a', 'b'], max_read);
        b = b.transition(from, &up, &low, &to);
    }
    for n in &names {
        if rng.gen_bool(0.4) {
            b = b.final_state(n);
        }
    }
    b.build().unwrap()
}

/// Degree 1 or 2 over `{a, b}`; degree-2 systems may use query states K1, K2.
pub fn random_system<R: Rng>(rng: &mut R, max_states: usize, max_read: usize) -> PcwkSystem {
    let rel = random_relation(rng);
    let degree = rng.gen_range(1..=2);
    let targets: &[&str] = if degree == 2 { &["K1", "K2"] } else { &[] };
    let comps: Vec<WkAutomaton> =
        (0..degree).map(|_| random_automaton(rng, &rel, max_states, max_read, targets)).collect();
    let queries = [("K1", 0), ("K2", 1)]
        .into_iter()
        .take(degree)
        .map(|(k, t)| (StateId::new(k).unwrap(), t))
        .filter(|(k, _)| degree == 2 && comps.iter().any(|c| c.has_state(k)))
        .collect();
    PcwkSystem::new(comps, queries).unwrap()
}

/// Independent membership check for a single automaton: enumerate every
/// complementary lower strand, then explore `(state, upper pos, lower pos)`
/// by depth-first search.
pub fn wk_oracle(aut: &WkAutomaton, upper: &Word) -> bool {
    let choices: Vec<Vec<Symbol>> =
        upper.iter().map(|&a| aut.relation().complements_of(a).into_iter().collect()).collect();
    let mut strands: Vec<Vec<Symbol>> = vec![Vec::new()];
    for c in &choices {
        strands = strands
            .into_iter()
            .flat_map(|p| {
                c.iter().map(move |&s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    strands.iter().any(|lower| {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![(aut.initial().clone(), 0usize, 0usize)];
        while let Some((q, u, l)) = stack.pop() {
            if !seen.insert((q.clone(), u, l)) {
                continue;
            }
            if u == upper.len() && l == lower.len() && aut.is_final(&q) {
                return true;
            }
            for t in aut.transitions() {
                if t.from == q && upper[u..].starts_with(&t.upper_read) && lower[l..].starts_with(&t.lower_read) {
                    stack.push((t.to.clone(), u + t.upper_read.len(), l + t.lower_read.len()));
                }
            }
        }
        false
    })
}

/// Positions of component 1 after its first lockstep step reading `c`.
pub fn first_c_read_positions(trace: &RunTrace) -> (usize, usize) {
    let configs = trace.configurations().unwrap();
    let ix = trace
        .steps
        .iter()
        .position(|s| matches!(s, TraceStep::Rule1 { transitions } if transitions[0].lower_read.contains(&sym('c'))))
        .expect("component 1 reads c");
    let c = &configs[ix + 1].components[0];
    (c.upper_pos, c.lower_pos)
}

/// Sizes of component 1's non-empty upper reads, in order.
pub fn upper_chunks(trace: &RunTrace) -> Vec<usize> {
    trace
        .steps
        .iter()
        .filter_map(|s| match s {
            TraceStep::Rule1 { transitions } if !transitions[0].upper_read.is_empty() => {
                Some(transitions[0].upper_read.len())
            }
            _ => None,
        })
        .collect()
}
