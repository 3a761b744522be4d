mod common;

use common::{first_c_read_positions, sym, unary, upper_chunks};
use wkpc::constructions::{build_squares_system, squares_witness, SquaresVariant};
use wkpc::engine::{brute_force_accepts, search, validate_trace, RunTrace};
use wkpc::verification::{cross_check, is_square_gt1, scan_squares, witness_form_check, ScanBudget};
use wkpc::{SearchLimits, Verdict};

fn accepting_trace(n: usize) -> RunTrace {
    let sys = build_squares_system(SquaresVariant::Corrected);
    let r = search(&sys, &unary(n * n), SearchLimits::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Accept, "n={n}");
    assert_eq!(r.witness_lower, squares_witness(n), "n={n}");
    r.trace.unwrap()
}

#[test]
fn squares_are_accepted_with_block_witnesses() {
    let sys = build_squares_system(SquaresVariant::Corrected);
    for n in 2..=8 {
        let up = unary(n * n);
        let r = search(&sys, &up, SearchLimits::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Accept, "n={n}");
        assert_eq!(witness_form_check(r.witness_lower.as_ref().unwrap()), Some(n));
        validate_trace(&sys, &up, r.trace.as_ref().unwrap()).unwrap();
    }
}

#[test]
fn corrected_scan_to_64_has_no_discrepancies() {
    let sys = build_squares_system(SquaresVariant::Corrected);
    let check = cross_check(&sys, sym('a'), 64, ScanBudget::default()).unwrap();
    assert!(check.is_ok(), "{:?}", check.discrepancies);
    let squares: Vec<usize> = (0..=64).filter(|&m| is_square_gt1(m as u64)).collect();
    assert_eq!(check.report.accepted_lengths(), squares);
}

#[test]
fn both_variants_agree_with_brute_force_up_to_12() {
    for variant in [SquaresVariant::Corrected, SquaresVariant::AsPrinted] {
        let sys = build_squares_system(variant);
        for m in 0..=12 {
            let lazy = search(&sys, &unary(m), SearchLimits::default()).unwrap();
            let brute = brute_force_accepts(&sys, &unary(m), SearchLimits::default()).unwrap();
            assert_eq!(lazy.verdict, brute.verdict, "{variant} m={m}");
            assert_ne!(lazy.verdict, Verdict::Limit);
        }
    }
}

#[test]
fn as_printed_tables_accept_3_and_7_only() {
    let report = scan_squares(SquaresVariant::AsPrinted, 64, ScanBudget::default());
    assert!(report.limited_lengths().is_empty());
    assert_eq!(report.accepted_lengths(), vec![3, 7]);
    let witnesses: Vec<String> =
        report.records.iter().filter_map(|r| r.result.witness_lower.as_ref().map(|w| w.to_string())).collect();
    assert_eq!(witnesses, ["bbc", "bbbcccb"]);
}

#[test]
fn upper_head_waits_for_the_first_block_boundary() {
    for n in 2..=8 {
        assert_eq!(first_c_read_positions(&accepting_trace(n)), (0, n + 1), "n={n}");
    }
}

#[test]
fn upper_chunks_account_for_every_symbol() {
    for n in 2..=8 {
        let chunks = upper_chunks(&accepting_trace(n));
        assert!(chunks.iter().all(|k| (1..=3).contains(k)), "n={n} {chunks:?}");
        assert_eq!(chunks.iter().filter(|&&k| k == 3).count(), 1, "n={n} {chunks:?}");
        assert_eq!(chunks.iter().filter(|&&k| k == 2).count(), n - 2, "n={n} {chunks:?}");
        assert_eq!(chunks.iter().sum::<usize>(), n * n, "n={n}");
    }
}
