//! One line per acceptance criterion. Every comparison is exact.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail for reasons recorded in
//! the README; the run fails if the set of failing criteria changes in either
//! direction.

use std::process::Command;
use std::time::{Duration, Instant};

use dd3_core::double::Casimir;
use dd3_core::lax::{
    check_parametric_ybe, check_rll, check_universal_lax, r_matrix_2, r_matrix_3, universal_lax_2,
    universal_lax_3, LaxSource,
};
use dd3_core::suites::{homomorphism_report, run_suite, Suite};
use dd3_core::{
    GroupElement, IrrepLabel, LaurentPoly, RelationReport, Representation, ScalarMatrix, Symbol,
};

const KNOWN_RED: [u32; 2] = [8, 13];

struct Outcome {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn failing(reports: &[RelationReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.relation.clone())
        .collect()
}

fn suite_outcome(
    id: u32,
    title: &'static str,
    suite: Suite,
    limit: Duration,
    keep: impl Fn(&str) -> bool,
) -> Outcome {
    let (reports, elapsed) = timed(|| run_suite(suite).expect("suite runs"));
    let reports: Vec<_> = reports.into_iter().filter(|r| keep(&r.relation)).collect();
    let failed = failing(&reports);
    let passed = failed.is_empty() && elapsed < limit && !reports.is_empty();
    let detail = if failed.is_empty() {
        format!(
            "{} relations, {elapsed:.2?} (limit {limit:?})",
            reports.len()
        )
    } else {
        format!(
            "{} relations, failing: {}; {elapsed:.2?}",
            reports.len(),
            failed.join(", ")
        )
    };
    Outcome {
        id,
        title,
        passed,
        detail,
    }
}

fn all(_: &str) -> bool {
    true
}

fn negative_controls() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut expect_witness = |what: &str, report: RelationReport| {
        let caught = !report.passed() && report.witness.is_some();
        ok &= caught;
        notes.push(format!(
            "{what}: {}",
            if caught { "caught" } else { "MISSED" }
        ));
    };

    // sign flip in one entry of an irrep image
    let good = Representation::irrep(IrrepLabel::Two(1));
    let mut tau = good.tau_image().clone();
    tau.set(0, 1, LaurentPoly::int(-1));
    let duals = GroupElement::all()
        .map(|h| good.dual_image(h).clone())
        .collect();
    let bad =
        Representation::from_generators("flipped", good.sigma_image().clone(), tau, duals).unwrap();
    expect_witness("irrep sign flip", homomorphism_report("homomorphism", &bad));

    // zeroed R-matrix entry
    let mut r = r_matrix_2(Symbol::X);
    r.set(1, 2, LaurentPoly::zero());
    expect_witness("zeroed R entry", check_parametric_ybe("ybe", &r).unwrap());

    // swapped Casimir in the three-dimensional operator
    let swapped = universal_lax_3(Symbol::X, Casimir::C1, LaxSource::Matrix);
    expect_witness(
        "swapped Casimir",
        check_universal_lax("lax", &r_matrix_3(Symbol::X), &swapped).unwrap(),
    );

    // spectral twist in a matrix Lax operator
    let twist = ScalarMatrix::diag(vec![LaurentPoly::one(), LaurentPoly::x()]);
    expect_witness(
        "twisted L",
        check_rll("rll", &r_matrix_2(Symbol::X), &twist, 1).unwrap(),
    );

    // the two-dimensional operator does not see the Casimir swap at all
    let same = universal_lax_2(Symbol::X, Casimir::C1) == universal_lax_2(Symbol::X, Casimir::C2);
    notes.push(format!(
        "two-dimensional operator with c2: {}",
        if same { "identical to c1" } else { "differs" }
    ));

    Outcome {
        id: 12,
        title: "negative controls",
        passed: ok,
        detail: notes.join("; "),
    }
}

fn end_to_end() -> Outcome {
    let limit = Duration::from_secs(300);
    let (out, elapsed) = timed(|| {
        Command::new(env!("CARGO_BIN_EXE_dd3"))
            .args(["verify", "--suite", "all"])
            .output()
            .expect("binary runs")
    });
    let code = out.status.code();
    let text = String::from_utf8_lossy(&out.stdout);
    let failed: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("FAIL"))
        .map(|l| l.split(' ').nth(1).unwrap_or(""))
        .collect();
    Outcome {
        id: 13,
        title: "verify --suite all",
        passed: code == Some(0) && elapsed < limit,
        detail: format!(
            "exit {code:?} in {elapsed:.2?}; failing: [{}]",
            failed.join(", ")
        ),
    }
}

fn main() {
    let secs = Duration::from_secs;
    let outcomes = vec![
        suite_outcome(1, "Hopf axioms", Suite::Hopf, secs(5), all),
        suite_outcome(
            2,
            "quasi-triangularity",
            Suite::Quasitriangular,
            secs(10),
            all,
        ),
        suite_outcome(
            3,
            "constant Yang-Baxter equation",
            Suite::YbeConstant,
            secs(30),
            all,
        ),
        suite_outcome(4, "representations", Suite::Reps, secs(10), all),
        suite_outcome(5, "Casimirs", Suite::Casimirs, secs(10), all),
        suite_outcome(
            6,
            "parametric Yang-Baxter equation",
            Suite::YbeParametric,
            secs(60),
            |n| !n.ends_with(":regularity"),
        ),
        suite_outcome(
            7,
            "universal Lax relation and Casimir adjudication",
            Suite::LaxUniversal,
            secs(60),
            all,
        ),
        suite_outcome(
            8,
            "printed derived-L tables",
            Suite::LaxGolden,
            secs(60),
            |n| !n.ends_with(":with-opposite-tau-sign"),
        ),
        suite_outcome(9, "x -> 0 limits", Suite::Limits, secs(60), all),
        suite_outcome(
            10,
            "RLL for every irrep and both Lax operators",
            Suite::Rll,
            secs(60),
            |n| !n.starts_with("rll:printed:"),
        ),
        suite_outcome(11, "regularity", Suite::YbeParametric, secs(60), |n| {
            n.ends_with(":regularity")
        }),
        negative_controls(),
        end_to_end(),
    ];

    for o in &outcomes {
        let status = match (o.passed, KNOWN_RED.contains(&o.id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {:>2} [{status}] {}: {}", o.id, o.title, o.detail);
    }

    let red: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert_eq!(red, KNOWN_RED, "the set of failing criteria changed");
    println!(
        "acceptance: {} of {} criteria pass; known failures {KNOWN_RED:?}",
        outcomes.len() - red.len(),
        outcomes.len()
    );
}
