//! Property suites over every class up to a bound, sharded across a rayon pool.

use rayon::prelude::*;
use serde_json::{json, Value};
use upkit_core::check::{self, classes_up_to, Failure, Outcome};
use upkit_core::oracle::{Oracle, ORACLE_MAX};
use upkit_core::partition::{ClassPartition, GroupType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Dprop,
    Spc,
    #[value(name = "almostIntro")]
    AlmostIntro,
    Induction,
    #[value(name = "firstReduction")]
    FirstReduction,
    #[value(name = "theoremC")]
    TheoremC,
    #[value(name = "firstRow")]
    FirstRow,
    Moeglin,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Dprop,
        Suite::Spc,
        Suite::AlmostIntro,
        Suite::Induction,
        Suite::FirstReduction,
        Suite::TheoremC,
        Suite::FirstRow,
        Suite::Moeglin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dprop => "dprop",
            Suite::Spc => "spc",
            Suite::AlmostIntro => "almostIntro",
            Suite::Induction => "induction",
            Suite::FirstReduction => "firstReduction",
            Suite::TheoremC => "theoremC",
            Suite::FirstRow => "firstRow",
            Suite::Moeglin => "moeglin",
            Suite::All => "all",
        }
    }
}

/// Records emitted by one suite, and the first failure in enumeration order if any.
pub struct SuiteReport {
    pub records: Vec<Value>,
    pub failure: Option<Failure>,
}

fn first_failure<T>(results: Vec<Outcome<T>>) -> core::result::Result<Vec<T>, Failure> {
    results.into_iter().collect()
}

fn per_class<F>(name: &str, classes: &[ClassPartition], good_only: bool, f: F) -> SuiteReport
where
    F: Fn(&ClassPartition) -> Outcome<usize> + Sync,
{
    let subset: Vec<&ClassPartition> = classes.iter().filter(|c| !good_only || c.is_good_parity()).collect();
    let results: Vec<Outcome<usize>> = subset.par_iter().map(|c| f(c)).collect();
    match first_failure(results) {
        Err(e) => SuiteReport { records: Vec::new(), failure: Some(e) },
        Ok(counts) => {
            let mut records: Vec<Value> = subset
                .iter()
                .zip(&counts)
                .map(|(c, n)| json!({"suite": name, "s": c.s(), "partition": c.lambda().parts(), "count": n}))
                .collect();
            records.push(json!({
                "suite": name,
                "status": "PASS",
                "classes": subset.len(),
                "total": counts.iter().sum::<usize>(),
            }));
            SuiteReport { records, failure: None }
        }
    }
}

fn summary_only(name: &str, classes: usize, outcome: Outcome<usize>, extra: Value) -> SuiteReport {
    match outcome {
        Err(e) => SuiteReport { records: Vec::new(), failure: Some(e) },
        Ok(total) => {
            let mut rec = json!({"suite": name, "status": "PASS", "classes": classes, "total": total});
            if let (Value::Object(m), Value::Object(x)) = (&mut rec, extra) {
                m.extend(x);
            }
            SuiteReport { records: vec![rec], failure: None }
        }
    }
}

fn oracle_suite(suite: Suite, max_n: u64) -> SuiteReport {
    let n = max_n.min(ORACLE_MAX);
    let oracle = match Oracle::new(n) {
        Ok(o) => o,
        Err(e) => {
            return SuiteReport {
                records: Vec::new(),
                failure: Some(Failure { check: "oracle", subject: format!("n={}", n), detail: e.to_string() }),
            }
        }
    };
    let ranks: Vec<u64> = (0..=n).collect();
    let results: Vec<Outcome<usize>> = ranks
        .par_iter()
        .map(|&k| match suite {
            Suite::Induction => check::induction_oracle(&oracle, k),
            _ => check::first_reduction(&oracle, k),
        })
        .collect();
    let outcome = first_failure(results).map(|v| v.iter().sum());
    summary_only(suite.name(), ranks.len(), outcome, json!({"rank_bound": n}))
}

fn dprop_suite(max_n: u64) -> SuiteReport {
    let gts: Vec<GroupType> =
        (1..=max_n).flat_map(|n| [1, -1].into_iter().filter_map(move |s| GroupType::new(s, n).ok())).collect();
    let results: Vec<Outcome<usize>> = gts.par_iter().map(|&gt| check::dprop(gt).map(|_| 1)).collect();
    summary_only("dprop", gts.len(), first_failure(results).map(|v| v.len()), json!({}))
}

/// Run one suite (not `All`) with `N ≤ max_n`. Oracle suites read `max_n` as a rank bound,
/// capped at the oracle limit.
pub fn run_suite(suite: Suite, max_n: u64, classes: &[ClassPartition]) -> SuiteReport {
    match suite {
        Suite::Dprop => dprop_suite(max_n),
        Suite::Spc => per_class("spc", classes, false, |c| check::spc_cardinality(c).map(|_| 1)),
        Suite::AlmostIntro => per_class("almostIntro", classes, false, |c| check::almost_intro(c).map(|_| 1)),
        Suite::Induction | Suite::FirstReduction => oracle_suite(suite, max_n),
        Suite::TheoremC => per_class("theoremC", classes, true, check::theorem_c),
        Suite::FirstRow => per_class("firstRow", classes, true, check::first_row),
        Suite::Moeglin => per_class("moeglin", classes, false, check::moeglin_round_trip),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

pub fn run(suite: Suite, max_n: u64) -> Vec<(Suite, SuiteReport)> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let classes = classes_up_to(max_n);
    suites.into_iter().map(|s| (s, run_suite(s, max_n, &classes))).collect()
}
