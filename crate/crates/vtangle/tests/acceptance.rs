//! Runs the ten acceptance criteria and prints one line per criterion.

use std::process::ExitCode;

use vtangle::criteria::{run_criteria, AcceptanceConfig};

fn main() -> ExitCode {
    let cfg = AcceptanceConfig::default();
    let outcomes = run_criteria(&cfg);
    let mut all = true;
    for o in &outcomes {
        let ok = o.passed && o.within_budget();
        all &= ok;
        let budget = match o.budget {
            Some(b) => format!(" of {}s", b.as_secs()),
            None => String::new(),
        };
        println!(
            "criterion {:>2}: {} {} [{:.3}s{budget}] pass={} fail={} indeterminate={} finding={}; {}",
            o.id,
            if ok { "PASS" } else { "FAIL" },
            o.title,
            o.elapsed.as_secs_f64(),
            o.summary.pass,
            o.summary.fail,
            o.summary.indeterminate,
            o.summary.finding,
            o.detail,
        );
        if !ok {
            for r in o
                .non_passing
                .iter()
                .filter(|r| r.status.name() != "indeterminate")
                .take(20)
            {
                println!(
                    "    {} {} {}: {:?} vs {:?} {}",
                    r.status, r.check, r.instance, r.lhs, r.rhs, r.notes
                );
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
