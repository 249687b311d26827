//! Build one member of each family and print basic invariants.
//!
//! Usage: `cargo run --example construct_families -- [p]` (default 11)

use pentacover::constructions::{family, FamilyId, FamilyParams};

fn main() -> Result<(), pentacover::Error> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(11);
    let ids = [
        FamilyId::K6,
        FamilyId::FQ(4),
        FamilyId::CdP,
        FamilyId::CdP2,
        FamilyId::Cgd1P2,
        FamilyId::Cgd2P2,
        FamilyId::CgdP3,
        FamilyId::CgdP4,
    ];
    for id in ids {
        let prime = id.takes_prime().then_some(p);
        match family(id, prime, FamilyParams::default()) {
            Ok(ng) => {
                let g = &ng.graph;
                println!(
                    "{:<12} |V| = {:<6} |E| = {:<6} valency {:?}  girth {:?}  connected {}",
                    ng.name(),
                    g.vertex_count(),
                    g.edge_count(),
                    g.regular_degree(),
                    g.girth(),
                    g.is_connected()
                );
            }
            // e.g. CD(p) needs 5 | p - 1, CGD2 needs a square root of 5.
            Err(e) => println!("{:<12} not defined: {e}", id.instance_name(prime)),
        }
    }
    Ok(())
}
