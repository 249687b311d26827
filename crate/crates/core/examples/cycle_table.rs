//! Images of the fundamental cycles of the dipole under its named
//! automorphisms, and which of them lift in each cover family.
//!
//! Usage: `cargo run --example cycle_table -- [p]` (default 11)

use pentacover::acceptance::FUNDAMENTAL_CYCLE_TABLE;
use pentacover::constructions::{FamilyId, FamilyParams};
use pentacover::voltage::{family_voltage, lifts, DipAut};

fn main() -> Result<(), pentacover::Error> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(11);
    println!("fundamental cycle images, coefficients over (a, b, c, d):");
    for (name, rows) in FUNDAMENTAL_CYCLE_TABLE {
        let cells: Vec<String> = rows.iter().map(|r| format!("{r:?}")).collect();
        println!("  {name:<3} {}", cells.join("  "));
    }

    let named = [
        ("α", DipAut::ALPHA),
        ("β", DipAut::BETA),
        ("γ", DipAut::GAMMA),
        ("δ", DipAut::DELTA),
        ("ε", DipAut::EPSILON),
    ];
    println!("\nlifting at p = {p}:");
    for id in [FamilyId::Cgd1P2, FamilyId::Cgd2P2, FamilyId::CgdP3, FamilyId::CgdP4] {
        let z = match family_voltage(id, p, FamilyParams::default()) {
            Ok(z) => z,
            Err(e) => {
                println!("  {:<12} {e}", id.instance_name(Some(p)));
                continue;
            }
        };
        let row: Vec<String> = named
            .iter()
            .map(|(n, s)| format!("{n}:{}", if lifts(&z, s).is_some() { "yes" } else { "no " }))
            .collect();
        println!("  {:<12} {}", id.instance_name(Some(p)), row.join("  "));
    }
    Ok(())
}
