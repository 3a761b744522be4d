//! A two-component system accepting `{ a^(n²) : n > 1 }`.
//!
//! With `ρ = {(a,b), (a,c)}` every `a^m` has `2^m` lower strands. The system
//! accepts exactly when some lower strand is `n` alternating blocks of `b`s
//! and `c`s, each of length `n`, starting with `b`; such a strand exists iff
//! `m = n²`.
//!
//! Component 1 reads the first block with its lower head while its upper
//! head waits, so at the first `c` the upper head lags `n + 1` cells behind.
//! From then on it reads one `a` per lower symbol, plus one extra `a` per
//! block boundary (two extra at the first). Its heads meet at the end iff the
//! strand has `n - 1` boundaries. Component 2 starts reading the lower strand
//! when component 1 sees the first `c` and must see the opposite letter at
//! every step, which forces all blocks to length `n`. The two components
//! hand control back and forth through the query states `K1` and `K2`.
//!
//! The transition table exists in two variants. [`SquaresVariant::AsPrinted`]
//! is the table as originally published. [`SquaresVariant::Corrected`]
//! repairs three entries of component 2:
//!
//! * `q3_a_b_c` returns to `q3` instead of the dangling state `s3`;
//! * in the endgame, `q2_l_l` expects a `c` and `q3_l_l` expects a `b`
//!   (the published table has the letters swapped);
//! * `q4_l_l` on `a/c` goes to `q4_l_l_c` instead of `q3_l_l_c` (both then
//!   continue to `q4`).
//!
//! Tuple-named intermediate states are flattened with `_`, writing `l` for λ:
//! `(q2, aa, b, c)` becomes `q2_aa_b_c`.

use std::fmt;
use std::str::FromStr;

use crate::automaton::{StateId, WkAutomaton};
use crate::engine::PcwkSystem;
use crate::model::{Alphabet, ComplementarityRelation, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquaresVariant {
    AsPrinted,
    Corrected,
}

impl fmt::Display for SquaresVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquaresVariant::AsPrinted => "as-printed",
            SquaresVariant::Corrected => "corrected",
        })
    }
}

impl FromStr for SquaresVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "as-printed" => Ok(SquaresVariant::AsPrinted),
            "corrected" => Ok(SquaresVariant::Corrected),
            other => Err(format!("unknown variant {other:?} (expected corrected or as-printed)")),
        }
    }
}

/// Component 1 table, `(from, upper, lower, to)`, λ as "".
const COMPONENT_1: &[(&str, &str, &str, &str)] = &[
    ("s2", "", "", "K2"),
    ("q0", "", "b", "q0_l_b"),
    ("q0_l_b", "", "", "s2"),
    ("q0", "", "c", "q0_l_c"),
    ("q0_l_c", "", "", "s2"),
    ("q1", "aaa", "", "q1_aaa_l"),
    ("q1_aaa_l", "", "", "s2"),
    ("q2", "a", "c", "q2_a_c"),
    ("q2_a_c", "", "", "s2"),
    ("q2", "aa", "b", "q2_aa_b"),
    ("q2_aa_b", "", "", "s2"),
    ("q3", "a", "b", "q3_a_b"),
    ("q3_a_b", "", "", "s2"),
    ("q3", "aa", "c", "q3_aa_c"),
    ("q3_aa_c", "", "", "s2"),
    ("q2", "", "", "q2_l_l"),
    ("q2_l_l", "", "", "s2"),
    ("q3", "", "", "q3_l_l"),
    ("q3_l_l", "", "", "s2"),
    ("q4", "", "", "q4_l_l"),
    ("q4_l_l", "", "", "s2"),
];

fn component_2(variant: SquaresVariant) -> Vec<(&'static str, &'static str, &'static str, &'static str)> {
    let printed = variant == SquaresVariant::AsPrinted;
    let mut rows: Vec<_> = ["q0", "q1", "q2", "q3", "q4"].into_iter().map(|q| (q, "", "", "K1")).collect();
    rows.extend([
        ("q0_l_b", "", "", "q0_l_b_l"),
        ("q0_l_b_l", "", "", "q0"),
        ("q0_l_c", "", "", "q0_l_c_l"),
        ("q0_l_c_l", "", "", "q1"),
        ("q1_aaa_l", "a", "b", "q1_aaa_l_b"),
        ("q1_aaa_l_b", "", "", "q2"),
        ("q2_a_c", "a", "b", "q2_a_c_b"),
        ("q2_a_c_b", "", "", "q2"),
        ("q2_aa_b", "a", "c", "q2_aa_b_c"),
        ("q2_aa_b_c", "", "", "q3"),
        ("q3_a_b", "a", "c", "q3_a_b_c"),
        ("q3_a_b_c", "", "", if printed { "s3" } else { "q3" }),
        ("q3_aa_c", "a", "b", "q3_aa_c_b"),
        ("q3_aa_c_b", "", "", "q2"),
    ]);
    if printed {
        rows.extend([
            ("q2_l_l", "a", "b", "q2_l_l_b"),
            ("q2_l_l_b", "", "", "q4"),
            ("q3_l_l", "a", "c", "q3_l_l_c"),
            ("q3_l_l_c", "", "", "q4"),
            ("q4_l_l", "a", "b", "q4_l_l_b"),
            ("q4_l_l_b", "", "", "q4"),
            ("q4_l_l", "a", "c", "q3_l_l_c"),
            ("q4_l_l_c", "", "", "q4"),
        ]);
    } else {
        rows.extend([
            ("q2_l_l", "a", "c", "q2_l_l_c"),
            ("q2_l_l_c", "", "", "q4"),
            ("q3_l_l", "a", "b", "q3_l_l_b"),
            ("q3_l_l_b", "", "", "q4"),
            ("q4_l_l", "a", "b", "q4_l_l_b"),
            ("q4_l_l_b", "", "", "q4"),
            ("q4_l_l", "a", "c", "q4_l_l_c"),
            ("q4_l_l_c", "", "", "q4"),
        ]);
    }
    rows
}

pub fn squares_alphabet() -> Alphabet {
    Alphabet::from_chars("abc").expect("static alphabet")
}

pub fn squares_relation() -> ComplementarityRelation {
    ComplementarityRelation::from_chars(&[('a', 'b'), ('a', 'c')]).expect("static relation")
}

fn component(rows: &[(&str, &str, &str, &str)]) -> WkAutomaton {
    rows.iter()
        .fold(WkAutomaton::builder(squares_alphabet(), squares_relation()).initial("q0"), |b, &(from, up, low, to)| {
            b.transition(from, up, low, to)
        })
        .final_state("q4")
        .build()
        .expect("static table is well formed")
}

pub fn build_squares_system(variant: SquaresVariant) -> PcwkSystem {
    let a1 = component(COMPONENT_1);
    let a2 = component(&component_2(variant));
    let k = |name: &str| StateId::new(name).expect("static state name");
    PcwkSystem::new(vec![a1, a2], vec![(k("K1"), 0), (k("K2"), 1)]).expect("static system is well formed")
}

fn bc() -> (Symbol, Symbol) {
    (Symbol::new('b').unwrap(), Symbol::new('c').unwrap())
}

/// `b^n c^n b^n …` with `n` blocks; `None` for `n < 2`.
pub fn squares_witness(n: usize) -> Option<Word> {
    if n < 2 {
        return None;
    }
    let (b, c) = bc();
    Some((0..n).flat_map(|block| std::iter::repeat_n(if block % 2 == 0 { b } else { c }, n)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("'{0}' is not b or c")]
pub struct NotBc(pub Symbol);

/// Number of adjacent positions holding different letters.
pub fn boundary_count(w: &[Symbol]) -> Result<usize, NotBc> {
    let (b, c) = bc();
    if let Some(&bad) = w.iter().find(|&&s| s != b && s != c) {
        return Err(NotBc(bad));
    }
    Ok(w.windows(2).filter(|p| p[0] != p[1]).count())
}
