//! Automorphism group orders of named family instances.
//!
//! Usage: `cargo run --release --example automorphisms -- "CGD1(11^2)" "FQ4"`

use pentacover::constructions::{family, FamilyId, FamilyParams};
use pentacover::symmetry::aut_group;

fn main() -> Result<(), pentacover::Error> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["K6", "CD(5)", "CD(11)", "CD(31)", "FQ4", "CD(11^2)", "CGD1(5^2)", "CGD1(11^2)",
            "CGD2(11^2)", "CGD2(19^2)", "CGD(5^3)", "CGD(3^4)", "CGD(2^4)"]
            .map(String::from)
            .to_vec();
    }
    for name in names {
        let (id, p): (FamilyId, Option<u64>) = FamilyId::parse_instance(&name)?;
        let ng = family(id, p, FamilyParams::default())?;
        let start = std::time::Instant::now();
        let aut = aut_group(&ng.graph)?;
        println!(
            "{:<12} |V| = {:<5} |Aut| = {:<8} ({:.2?})",
            ng.name(),
            ng.graph.vertex_count(),
            aut.order(),
            start.elapsed()
        );
    }
    Ok(())
}
