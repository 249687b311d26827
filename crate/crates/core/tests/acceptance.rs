//! Runs every acceptance criterion and prints one line per criterion.
//!
//! Set `PENTACOVER_DEEP=1` to include the large instances.

use pentacover::acceptance::run_suite;

#[test]
fn acceptance_table() {
    let deep = std::env::var("PENTACOVER_DEEP").is_ok_and(|v| v == "1");
    let results = run_suite(deep);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
