//! Text formats: system definitions, run traces and scan reports.
//!
//! All formats are line oriented. `#` starts a comment, tokens are separated
//! by whitespace and `-` stands for the empty word. Component indices are
//! 1-based.
//!
//! System file:
//!
//! ```text
//! alphabet a b c
//! relation a b
//! relation a c
//! component 1 initial q0 final q4
//! component 2 initial q0 final q4
//! query K1 -> 1
//! query K2 -> 2
//! trans 1 q0 - b q0_l_b
//! trans 2 q1_aaa_l a b q1_aaa_l_b
//! ```
//!
//! `trans <component> <from> <upper> <lower> <to>`. A component's state set
//! is derived from its initial state, transitions and final states unless a
//! `states <component> <state>...` line fixes it, in which case every state
//! the component mentions must be listed.
//!
//! Trace file:
//!
//! ```text
//! initial - q0 0 0 q0 0 0
//! rule1 q0 - b q0_l_b q0 - - K1
//! rule2 2 q0_l_b
//! final bbcc q4 4 4 q4 4 4
//! ```
//!
//! Configurations are the committed lower strand followed by
//! `<state> <upper pos> <lower pos>` per component. `rule1` lists one
//! `<from> <upper> <lower> <to>` transition per component; `rule2` lists
//! `<component> <received state>` pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automaton::{StateId, WkAutomaton, WkTransition};
use crate::engine::{ComponentConfig, PcwkSystem, RunTrace, SystemConfiguration, TraceStep, Verdict};
use crate::error::ModelError;
use crate::model::{Alphabet, ComplementarityRelation, Symbol, Word};
use crate::verification::ScanReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("alphabet must be declared before use")]
    MissingAlphabet,
    #[error("alphabet declared twice")]
    DuplicateAlphabet,
    #[error("bad symbol {0:?}: symbols are single characters other than '-' and '#'")]
    BadSymbol(String),
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(Symbol),
    #[error("invalid state name {0:?}")]
    BadState(String),
    #[error("state {state} is not declared for component {component}")]
    UndeclaredState { state: String, component: usize },
    #[error("component {0} declared twice")]
    DuplicateComponent(usize),
    #[error("component {0} has more than one initial state")]
    DuplicateInitial(usize),
    #[error("component {0} has no initial state")]
    MissingInitial(usize),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("component {0} is missing (components must be numbered 1..n)")]
    MissingComponent(usize),
    #[error("at least one component required")]
    NoComponents,
    #[error("query state {0} has no target (expected `query <state> -> <component>`)")]
    QueryMissingTarget(String),
    #[error("query state {state} targets component {target}, which does not exist")]
    QueryTargetOutOfRange { state: String, target: usize },
    #[error("query state {0} declared twice")]
    DuplicateQuery(String),
    #[error("query state {0} appears in no component")]
    UnusedQueryState(String),
    #[error("{0}")]
    Model(ModelError),
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn eof_line(text: &str) -> usize {
    text.lines().count() + 1
}

fn parse_index(line: usize, tok: &str) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => err(line, ParseErrorKind::Malformed(format!("expected a component number, found {tok:?}"))),
    }
}

fn parse_symbol(line: usize, tok: &str) -> Result<Symbol, ParseError> {
    let mut chars = tok.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Symbol::new(c).or_else(|_| err(line, ParseErrorKind::BadSymbol(tok.into()))),
        _ => err(line, ParseErrorKind::BadSymbol(tok.into())),
    }
}

/// A word token: `-` for λ, otherwise one symbol per character.
fn parse_word_token(line: usize, tok: &str) -> Result<Word, ParseError> {
    if tok == "-" {
        return Ok(Word::empty());
    }
    tok.chars().map(|c| Symbol::new(c).or_else(|_| err(line, ParseErrorKind::BadSymbol(c.to_string())))).collect()
}

fn parse_state(line: usize, tok: &str) -> Result<StateId, ParseError> {
    StateId::new(tok).or_else(|_| err(line, ParseErrorKind::BadState(tok.into())))
}

fn word_token(w: &Word) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.iter().map(|s| s.as_char()).collect()
    }
}

#[derive(Default)]
struct ComponentDecl {
    line: usize,
    initial: Option<StateId>,
    finals: Vec<StateId>,
    states: Option<(usize, Vec<StateId>)>,
}

struct TransDecl {
    line: usize,
    component: usize,
    transition: WkTransition,
}

pub fn parse_system(text: &str) -> Result<PcwkSystem, ParseError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut pairs: Vec<(Symbol, Symbol)> = Vec::new();
    let mut components: BTreeMap<usize, ComponentDecl> = BTreeMap::new();
    let mut states_lines: Vec<(usize, usize, Vec<StateId>)> = Vec::new();
    let mut queries: Vec<(usize, StateId, usize)> = Vec::new();
    let mut trans: Vec<TransDecl> = Vec::new();

    let known = |line: usize, alphabet: &Option<Alphabet>, w: Word| -> Result<Word, ParseError> {
        let a = alphabet.as_ref().ok_or(ParseError { line, kind: ParseErrorKind::MissingAlphabet })?;
        match w.iter().find(|s| !a.contains(**s)) {
            Some(&s) => err(line, ParseErrorKind::UnknownSymbol(s)),
            None => Ok(w),
        }
    };

    for (line, toks) in lines(text) {
        match toks[0] {
            "alphabet" => {
                if alphabet.is_some() {
                    return err(line, ParseErrorKind::DuplicateAlphabet);
                }
                let syms = toks[1..].iter().map(|t| parse_symbol(line, t)).collect::<Result<Vec<_>, _>>()?;
                alphabet = Some(Alphabet::new(syms).or_else(|e| err(line, ParseErrorKind::Model(e)))?);
            }
            "relation" => {
                if toks.len() != 3 {
                    return err(line, ParseErrorKind::Malformed("expected `relation <upper> <lower>`".into()));
                }
                let a = parse_symbol(line, toks[1])?;
                let b = parse_symbol(line, toks[2])?;
                known(line, &alphabet, Word::from(vec![a, b]))?;
                pairs.push((a, b));
            }
            "component" => {
                if toks.len() < 2 {
                    return err(line, ParseErrorKind::Malformed("expected `component <n> initial <state>`".into()));
                }
                let ix = parse_index(line, toks[1])?;
                if components.get(&ix).is_some_and(|c| c.line != 0) {
                    return err(line, ParseErrorKind::DuplicateComponent(ix));
                }
                let decl = components.entry(ix).or_default();
                decl.line = line;
                let mut rest = toks[2..].iter();
                let mut in_finals = false;
                while let Some(&tok) = rest.next() {
                    match tok {
                        "initial" => {
                            in_finals = false;
                            let name = rest.next().ok_or(ParseError {
                                line,
                                kind: ParseErrorKind::Malformed("`initial` needs a state".into()),
                            })?;
                            if decl.initial.is_some() {
                                return err(line, ParseErrorKind::DuplicateInitial(ix));
                            }
                            decl.initial = Some(parse_state(line, name)?);
                        }
                        "final" => in_finals = true,
                        name if in_finals => {
                            let s = parse_state(line, name)?;
                            if !decl.finals.contains(&s) {
                                decl.finals.push(s);
                            }
                        }
                        other => {
                            return err(line, ParseErrorKind::Malformed(format!("unexpected token {other:?}")));
                        }
                    }
                }
            }
            "states" => {
                if toks.len() < 2 {
                    return err(line, ParseErrorKind::Malformed("expected `states <n> <state>...`".into()));
                }
                let ix = parse_index(line, toks[1])?;
                let names = toks[2..].iter().map(|t| parse_state(line, t)).collect::<Result<Vec<_>, _>>()?;
                states_lines.push((line, ix, names));
            }
            "query" => {
                if toks.len() < 2 {
                    return err(line, ParseErrorKind::Malformed("expected `query <state> -> <component>`".into()));
                }
                if toks.len() != 4 || toks[2] != "->" {
                    return err(line, ParseErrorKind::QueryMissingTarget(toks[1].into()));
                }
                let state = parse_state(line, toks[1])?;
                let target = toks[3].parse::<usize>().or_else(|_| {
                    err(line, ParseErrorKind::Malformed(format!("expected a component number, found {:?}", toks[3])))
                })?;
                queries.push((line, state, target));
            }
            "trans" => {
                if toks.len() != 6 {
                    return err(
                        line,
                        ParseErrorKind::Malformed("expected `trans <n> <from> <upper> <lower> <to>`".into()),
                    );
                }
                let component = parse_index(line, toks[1])?;
                let from = parse_state(line, toks[2])?;
                let upper_read = known(line, &alphabet, parse_word_token(line, toks[3])?)?;
                let lower_read = known(line, &alphabet, parse_word_token(line, toks[4])?)?;
                let to = parse_state(line, toks[5])?;
                trans.push(TransDecl {
                    line,
                    component,
                    transition: WkTransition { from, upper_read, lower_read, to },
                });
            }
            other => return err(line, ParseErrorKind::UnknownDirective(other.into())),
        }
    }

    let eof = eof_line(text);
    let alphabet = alphabet.ok_or(ParseError { line: eof, kind: ParseErrorKind::MissingAlphabet })?;
    if components.is_empty() {
        return err(eof, ParseErrorKind::NoComponents);
    }
    for (line, ix, names) in states_lines {
        match components.get_mut(&ix) {
            Some(decl) if decl.line != 0 => {
                if decl.states.is_some() {
                    return err(line, ParseErrorKind::Malformed(format!("states of component {ix} declared twice")));
                }
                decl.states = Some((line, names));
            }
            _ => return err(line, ParseErrorKind::UnknownComponent(ix)),
        }
    }
    let n = components.len();
    let (&max_ix, last) = components.iter().next_back().expect("non-empty");
    if max_ix != n {
        let missing = (1..=max_ix).find(|k| !components.contains_key(k)).unwrap_or(max_ix);
        return err(last.line, ParseErrorKind::MissingComponent(missing));
    }
    for t in &trans {
        if !components.contains_key(&t.component) {
            return err(t.line, ParseErrorKind::UnknownComponent(t.component));
        }
    }
    let relation = ComplementarityRelation::new(pairs);

    let mut automata = Vec::with_capacity(n);
    for (&ix, decl) in &components {
        let initial =
            decl.initial.clone().ok_or(ParseError { line: decl.line, kind: ParseErrorKind::MissingInitial(ix) })?;
        let own: Vec<&TransDecl> = trans.iter().filter(|t| t.component == ix).collect();
        if let Some((_, declared)) = &decl.states {
            let undeclared = |line: usize, s: &StateId| -> Result<(), ParseError> {
                if declared.contains(s) {
                    Ok(())
                } else {
                    err(line, ParseErrorKind::UndeclaredState { state: s.to_string(), component: ix })
                }
            };
            undeclared(decl.line, &initial)?;
            for f in &decl.finals {
                undeclared(decl.line, f)?;
            }
            for t in &own {
                undeclared(t.line, &t.transition.from)?;
                undeclared(t.line, &t.transition.to)?;
            }
        }
        let mut b = WkAutomaton::builder(alphabet.clone(), relation.clone()).initial(initial.as_str());
        if let Some((_, declared)) = &decl.states {
            b = b.states(declared.iter().map(|s| s.as_str()));
        }
        for f in &decl.finals {
            b = b.final_state(f.as_str());
        }
        for t in own {
            b = b.push_transition(t.transition.clone());
        }
        automata.push(b.build().or_else(|e| err(decl.line, ParseErrorKind::Model(e)))?);
    }

    let mut query_map: Vec<(StateId, usize)> = Vec::new();
    for (line, state, target) in queries {
        if target == 0 || target > n {
            return err(line, ParseErrorKind::QueryTargetOutOfRange { state: state.to_string(), target });
        }
        if query_map.iter().any(|(s, _)| s == &state) {
            return err(line, ParseErrorKind::DuplicateQuery(state.to_string()));
        }
        if !automata.iter().any(|a| a.has_state(&state)) {
            return err(line, ParseErrorKind::UnusedQueryState(state.to_string()));
        }
        query_map.push((state, target - 1));
    }
    PcwkSystem::new(automata, query_map).or_else(|e| err(eof, ParseErrorKind::Model(e)))
}

/// Canonical text for `sys`: components in order, each with its state set
/// in first-appearance order, then queries and transitions in declaration
/// order.
pub fn serialize_system(sys: &PcwkSystem) -> String {
    let mut out = String::new();
    let syms: Vec<String> = sys.alphabet().symbols().iter().map(|s| s.to_string()).collect();
    writeln!(out, "alphabet {}", syms.join(" ")).unwrap();
    for (a, b) in sys.relation().pairs() {
        writeln!(out, "relation {a} {b}").unwrap();
    }
    for (i, c) in sys.components().iter().enumerate() {
        write!(out, "component {} initial {}", i + 1, c.initial()).unwrap();
        if !c.finals().is_empty() {
            let finals: Vec<&str> = c.finals().iter().map(|s| s.as_str()).collect();
            write!(out, " final {}", finals.join(" ")).unwrap();
        }
        out.push('\n');
        let states: Vec<&str> = c.states().iter().map(|s| s.as_str()).collect();
        writeln!(out, "states {} {}", i + 1, states.join(" ")).unwrap();
    }
    for (k, t) in sys.queries() {
        writeln!(out, "query {} -> {}", k, t + 1).unwrap();
    }
    for (i, c) in sys.components().iter().enumerate() {
        for t in c.transitions() {
            writeln!(
                out,
                "trans {} {} {} {} {}",
                i + 1,
                t.from,
                word_token(&t.upper_read),
                word_token(&t.lower_read),
                t.to
            )
            .unwrap();
        }
    }
    out
}

fn config_tokens(cfg: &SystemConfiguration) -> String {
    let mut s = word_token(&cfg.committed_lower);
    for c in &cfg.components {
        write!(s, " {} {} {}", c.state, c.upper_pos, c.lower_pos).unwrap();
    }
    s
}

pub fn serialize_trace(trace: &RunTrace) -> String {
    let mut out = String::new();
    writeln!(out, "initial {}", config_tokens(&trace.initial)).unwrap();
    for step in &trace.steps {
        match step {
            TraceStep::Rule1 { transitions } => {
                out.push_str("rule1");
                for t in transitions {
                    write!(out, " {} {} {} {}", t.from, word_token(&t.upper_read), word_token(&t.lower_read), t.to)
                        .unwrap();
                }
            }
            TraceStep::Rule2 { substitutions } => {
                out.push_str("rule2");
                for (i, s) in substitutions {
                    write!(out, " {} {}", i + 1, s).unwrap();
                }
            }
        }
        out.push('\n');
    }
    writeln!(out, "final {}", config_tokens(&trace.final_config)).unwrap();
    out
}

fn parse_config(line: usize, toks: &[&str]) -> Result<SystemConfiguration, ParseError> {
    if toks.is_empty() || !(toks.len() - 1).is_multiple_of(3) {
        return err(line, ParseErrorKind::Malformed("expected `<lower> (<state> <upper> <lower>)...`".into()));
    }
    let committed_lower = parse_word_token(line, toks[0])?;
    let pos = |t: &str| {
        t.parse::<usize>()
            .or_else(|_| err(line, ParseErrorKind::Malformed(format!("expected a position, found {t:?}"))))
    };
    let components = toks[1..]
        .chunks(3)
        .map(|c| Ok(ComponentConfig { state: parse_state(line, c[0])?, upper_pos: pos(c[1])?, lower_pos: pos(c[2])? }))
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(SystemConfiguration { components, committed_lower })
}

pub fn parse_trace(text: &str) -> Result<RunTrace, ParseError> {
    let mut initial = None;
    let mut final_config = None;
    let mut steps = Vec::new();
    for (line, toks) in lines(text) {
        if final_config.is_some() {
            return err(line, ParseErrorKind::Malformed("content after `final`".into()));
        }
        match toks[0] {
            "initial" if initial.is_none() => initial = Some(parse_config(line, &toks[1..])?),
            "initial" => return err(line, ParseErrorKind::Malformed("second `initial` line".into())),
            _ if initial.is_none() => {
                return err(line, ParseErrorKind::Malformed("trace must start with `initial`".into()))
            }
            "final" => final_config = Some(parse_config(line, &toks[1..])?),
            "rule1" => {
                if (toks.len() - 1) % 4 != 0 {
                    return err(
                        line,
                        ParseErrorKind::Malformed("expected `rule1 (<from> <upper> <lower> <to>)...`".into()),
                    );
                }
                let transitions = toks[1..]
                    .chunks(4)
                    .map(|c| {
                        Ok(WkTransition {
                            from: parse_state(line, c[0])?,
                            upper_read: parse_word_token(line, c[1])?,
                            lower_read: parse_word_token(line, c[2])?,
                            to: parse_state(line, c[3])?,
                        })
                    })
                    .collect::<Result<Vec<_>, ParseError>>()?;
                steps.push(TraceStep::Rule1 { transitions });
            }
            "rule2" => {
                if (toks.len() - 1) % 2 != 0 {
                    return err(line, ParseErrorKind::Malformed("expected `rule2 (<component> <state>)...`".into()));
                }
                let substitutions = toks[1..]
                    .chunks(2)
                    .map(|c| Ok((parse_index(line, c[0])? - 1, parse_state(line, c[1])?)))
                    .collect::<Result<Vec<_>, ParseError>>()?;
                steps.push(TraceStep::Rule2 { substitutions });
            }
            other => return err(line, ParseErrorKind::UnknownDirective(other.into())),
        }
    }
    let eof = eof_line(text);
    let initial =
        initial.ok_or(ParseError { line: eof, kind: ParseErrorKind::Malformed("missing `initial`".into()) })?;
    let final_config =
        final_config.ok_or(ParseError { line: eof, kind: ParseErrorKind::Malformed("missing `final`".into()) })?;
    Ok(RunTrace { initial, steps, final_config })
}

/// One scan report record, as written by [`serialize_scan_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanLine {
    pub length: usize,
    pub verdict: Verdict,
    pub witness: Option<Word>,
    pub configs: usize,
}

/// `m=<int> verdict=<ACCEPT|REJECT|LIMIT> witness=<word|-> configs=<int>`,
/// one line per length.
pub fn serialize_scan_report(report: &ScanReport) -> String {
    let mut out = String::new();
    for rec in &report.records {
        let witness = rec.result.witness_lower.as_ref().map(word_token).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "m={} verdict={} witness={} configs={}",
            rec.length, rec.result.verdict, witness, rec.result.configs_explored
        )
        .unwrap();
    }
    out
}

pub fn parse_scan_report(text: &str) -> Result<Vec<ScanLine>, ParseError> {
    lines(text)
        .map(|(line, toks)| {
            let bad = || ParseError {
                line,
                kind: ParseErrorKind::Malformed("expected `m=.. verdict=.. witness=.. configs=..`".into()),
            };
            let [m, v, w, c] = toks.as_slice() else { return Err(bad()) };
            let field = |tok: &str, key: &str| tok.strip_prefix(key).map(str::to_string).ok_or_else(bad);
            let length = field(m, "m=")?.parse().map_err(|_| bad())?;
            let verdict = match field(v, "verdict=")?.as_str() {
                "ACCEPT" => Verdict::Accept,
                "REJECT" => Verdict::Reject,
                "LIMIT" => Verdict::Limit,
                _ => return Err(bad()),
            };
            let witness = match field(w, "witness=")?.as_str() {
                "-" => None,
                t => Some(parse_word_token(line, t)?),
            };
            let configs = field(c, "configs=")?.parse().map_err(|_| bad())?;
            Ok(ScanLine { length, verdict, witness, configs })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_squares_system, SquaresVariant};

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse_system(text).unwrap_err();
        (e.line, e.kind)
    }

    const MINI: &str = "alphabet a b\nrelation a b\ncomponent 1 initial p final p\ntrans 1 p a b p\n";

    #[test]
    fn parses_minimal_system() {
        let sys = parse_system(MINI).unwrap();
        assert_eq!(sys.degree(), 1);
        assert_eq!(sys.components()[0].transitions().len(), 1);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# header\n\n{}  # trailing\n", MINI.replace('\n', "   # c\n"));
        assert_eq!(parse_system(&text).unwrap(), parse_system(MINI).unwrap());
    }

    #[test]
    fn undeclared_state_names_state_and_line() {
        let text = "alphabet a b\nrelation a b\ncomponent 1 initial p\nstates 1 p\ntrans 1 p a b zz\n";
        let (line, k) = kind(text);
        assert_eq!(line, 5);
        assert_eq!(k, ParseErrorKind::UndeclaredState { state: "zz".into(), component: 1 });
        assert!(parse_system(text).unwrap_err().to_string().contains("zz"));
    }

    #[test]
    fn empty_components_section() {
        let (_, k) = kind("alphabet a\nrelation a a\n");
        assert_eq!(k, ParseErrorKind::NoComponents);
        assert_eq!(k.to_string(), "at least one component required");
    }

    #[test]
    fn error_kinds_and_lines() {
        assert_eq!(kind("alphabet a\ncomponent 1 initial p initial q\n"), (2, ParseErrorKind::DuplicateInitial(1)));
        assert_eq!(
            kind("alphabet a\ncomponent 1 initial p\ncomponent 1 initial p\n"),
            (3, ParseErrorKind::DuplicateComponent(1))
        );
        assert_eq!(kind("alphabet a\ncomponent 1 final p\n"), (2, ParseErrorKind::MissingInitial(1)));
        assert_eq!(
            kind("alphabet a\ncomponent 1 initial p\nquery K\n").1,
            ParseErrorKind::QueryMissingTarget("K".into())
        );
        assert_eq!(
            kind("alphabet a\ncomponent 1 initial p\ntrans 1 p - - K\nquery K -> 2\n"),
            (4, ParseErrorKind::QueryTargetOutOfRange { state: "K".into(), target: 2 })
        );
        assert_eq!(
            kind("alphabet a\ncomponent 1 initial p\nquery K -> 1\n"),
            (3, ParseErrorKind::UnusedQueryState("K".into()))
        );
        assert_eq!(
            kind("alphabet a\ncomponent 1 initial p\ntrans 1 p b - p\n").1,
            ParseErrorKind::UnknownSymbol(Symbol::new('b').unwrap())
        );
        assert_eq!(kind("relation a a\n"), (1, ParseErrorKind::MissingAlphabet));
        assert_eq!(kind("alphabet a\ncomponent 2 initial p\n"), (2, ParseErrorKind::MissingComponent(1)));
        assert_eq!(
            kind("alphabet a\ncomponent 1 initial p\ntrans 3 p - - p\n"),
            (3, ParseErrorKind::UnknownComponent(3))
        );
        assert_eq!(kind("alphabet ab\n").1, ParseErrorKind::BadSymbol("ab".into()));
        assert_eq!(kind("bogus\n").1, ParseErrorKind::UnknownDirective("bogus".into()));
        assert_eq!(kind("alphabet a\ncomponent 1 initial p\ntrans 1 p - -\n").0, 3);
    }

    #[test]
    fn squares_round_trip_is_stable() {
        for v in [SquaresVariant::Corrected, SquaresVariant::AsPrinted] {
            let sys = build_squares_system(v);
            let text = serialize_system(&sys);
            assert_eq!(text, serialize_system(&sys));
            let back = parse_system(&text).unwrap();
            assert_eq!(back, sys);
            assert_eq!(serialize_system(&back), text);
            assert_eq!(text.lines().filter(|l| l.starts_with("query ")).count(), 2);
        }
    }

    #[test]
    fn scan_line_parse() {
        let lines =
            parse_scan_report("m=4 verdict=ACCEPT witness=bbcc configs=12\nm=0 verdict=REJECT witness=- configs=3\n")
                .unwrap();
        assert_eq!(lines[0].witness, Some(Word::parse("bbcc").unwrap()));
        assert_eq!(lines[1].verdict, Verdict::Reject);
        assert!(parse_scan_report("m=4 verdict=MAYBE witness=- configs=1").is_err());
    }

    #[test]
    fn trace_parse_errors() {
        assert_eq!(parse_trace("rule2 1 q\n").unwrap_err().line, 1);
        assert_eq!(parse_trace("initial - q 0 0\n").unwrap_err().line, 2);
        assert!(parse_trace("initial - q 0 0\nrule1 q - -\nfinal - q 0 0\n").is_err());
        assert!(parse_trace("initial - q 0 x\nfinal - q 0 0\n").is_err());
    }
}
