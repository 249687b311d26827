//! Pentavalent symmetric graphs of order 2p^2 from the known families.
//!
//! Usage: `cargo run --release --example census -- [p...]`

use pentacover::algebra::is_prime;
use pentacover::symmetry::{census_2p2, CENSUS_PRIME_LIMIT};

fn main() -> Result<(), pentacover::Error> {
    let mut primes: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if primes.is_empty() {
        primes = (2..=CENSUS_PRIME_LIMIT).filter(|&p| is_prime(p)).collect();
    }
    for p in primes {
        let report = census_2p2(p)?;
        let names: Vec<String> = report
            .graphs
            .iter()
            .map(|e| format!("{} (|Aut| {}, s = {})", e.family, e.aut_order, e.s))
            .collect();
        println!(
            "p = {p:<3} {} graph(s){}{}",
            report.count,
            if names.is_empty() { String::new() } else { format!(": {}", names.join(", ")) },
            if report.pairwise_non_isomorphic { "" } else { "  [DUPLICATES]" }
        );
    }
    Ok(())
}
