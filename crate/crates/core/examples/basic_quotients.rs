//! Normal quotients of family members down to a basic graph.
//!
//! Usage: `cargo run --release --example basic_quotients -- "CGD(5^4)" ...`

use pentacover::constructions::{family, FamilyId, FamilyParams};
use pentacover::symmetry::{aut_group, basic_quotient_chain, is_basic, TranslationHint};

fn main() -> Result<(), pentacover::Error> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["K6", "FQ4", "CD(11)", "CGD(2^4)", "CGD(11^3)", "CGD(5^4)", "CGD1(11^2)", "CGD2(11^2)"]
            .map(String::from)
            .to_vec();
    }
    for name in names {
        let (id, p) = FamilyId::parse_instance(&name)?;
        let ng = family(id, p, FamilyParams::default())?;
        let hint = TranslationHint::for_family(&ng);
        let aut = aut_group(&ng.graph)?;
        let verdict = is_basic(&ng.graph, &aut, hint.as_ref())?;
        print!("{:<12} basic: {:<5}", ng.name(), verdict.basic);
        if let Some(w) = &verdict.witness {
            print!(" witness N of order {} with {} orbits", w.order(), w.orbits.len());
        }
        println!();
        for step in basic_quotient_chain(&ng.graph, hint.as_ref())? {
            let rec = step.recognized.map_or_else(|| "unrecognized".into(), |r| r.to_string());
            println!("    / {:<6} -> {:<5} vertices  {rec}", step.normal_order, step.quotient.vertex_count());
        }
    }
    Ok(())
}
