//! Lifting group of a voltage assignment, and the lifted automorphisms
//! checked against the derived cover.
//!
//! Usage: `cargo run --example lifting -- [family] [p]`
//! (default `CGD(p^3)` at 11)

use pentacover::constructions::{FamilyId, FamilyParams};
use pentacover::voltage::{derived, family_voltage, lift_to_cover, lifting_group};

fn main() -> Result<(), pentacover::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id: FamilyId = args.first().map_or("CGD(p^3)", String::as_str).parse()?;
    let p: u64 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(11);

    let z = family_voltage(id, p, FamilyParams::default())?;
    let cover = derived(&z)?;
    let lg = lifting_group(&z);
    println!("{} with voltages {z}", id.instance_name(Some(p)));
    println!(
        "lifting group order {} ({} fixing both dipole vertices), arc-transitive: {}",
        lg.order(),
        lg.vertex_fixing_order(),
        lg.arc_transitive
    );
    let mut bad = 0;
    for (s, m) in &lg.elements {
        let lifted = lift_to_cover(&z, s, m)?;
        if !cover.is_automorphism(&lifted) {
            bad += 1;
        }
    }
    println!("{} lifted automorphisms, {bad} failed to preserve the cover", lg.order());
    Ok(())
}
