//! Recover the `GD_H` Cayley structure of a cover from its translation
//! subgroup.
//!
//! Usage: `cargo run --example gd_cayley -- [family] [p]` (default `CGD1(p^2)` at 11)

use pentacover::constructions::{family, FamilyId, FamilyParams};
use pentacover::symmetry::{gd_recognize, TranslationHint};
use pentacover::PermGroup;

fn main() -> Result<(), pentacover::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id: FamilyId = args.first().map_or("CGD1(p^2)", String::as_str).parse()?;
    let p: u64 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(11);
    let ng = family(id, Some(p), FamilyParams::default())?;
    let hint = TranslationHint::for_family(&ng).expect("dipole covers carry translations");
    let h = PermGroup::new(ng.graph.vertex_count(), hint.basis.clone())?;
    let rec = gd_recognize(&ng.graph, &h)?;
    println!("{}: H = Z{:?}, |GD_H| = {}", ng.name(), rec.group.h().moduli(), rec.group.order());
    for s in rec.connection_set.elements() {
        println!("  S contains {s:?}");
    }
    println!("involution moves {} vertices", (0..rec.labels.len()).filter(|&v| !rec.involution.fixes(v)).count());
    Ok(())
}
