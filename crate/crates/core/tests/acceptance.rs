//! One PASS/FAIL line per acceptance criterion on the reference corpus. Every
//! check is exact; the time limit printed with each line is also enforced.

use std::io::Write;

use graphcover::report::run_all;

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for row in run_all(0) {
        // straight to the handle so the table shows without --nocapture
        writeln!(std::io::stderr(), "{row}").unwrap();
        if !row.passed {
            failed.push(row.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
