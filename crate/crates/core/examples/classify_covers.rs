//! Classify arc-transitive elementary abelian covers of the pentavalent dipole.
//!
//! Usage: `cargo run --example classify_covers -- [n] [p...]`

use pentacover::voltage::{classify, Strategy};

fn main() -> Result<(), pentacover::Error> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, primes) = match args.split_first() {
        Some((&n, rest)) if !rest.is_empty() => (n as usize, rest.to_vec()),
        Some((&n, _)) => (n as usize, vec![2, 3, 5, 7, 11, 13]),
        None => (2, vec![5, 7, 11, 19, 29, 31]),
    };
    for p in primes {
        let start = std::time::Instant::now();
        let analytic = classify(p, n, Strategy::Analytic)?;
        let brute = match classify(p, n, Strategy::Brute) {
            Ok(classes) => Some(classes),
            Err(pentacover::Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let agree = match &brute {
            Some(b) => if *b == analytic { "brute force agrees" } else { "BRUTE FORCE DISAGREES" },
            None => "brute force skipped",
        };
        println!("p = {p}, n = {n}: {} class(es), {agree} ({:.2?})", analytic.len(), start.elapsed());
        for class in &analytic {
            let family = class
                .matched_family
                .map_or_else(|| "unmatched".to_string(), |f| f.to_string());
            println!(
                "  {}  lifting group order {}, {family}",
                class.representative, class.lifting_group_order
            );
        }
    }
    Ok(())
}
