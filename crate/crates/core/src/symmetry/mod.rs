//! Automorphism groups, s-arc transitivity, basicness and recognition.

mod basic;
mod census;
mod recognize;
mod refine;

use serde::{Deserialize, Serialize};

use crate::constructions::NamedGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permgrp::PermGroup;

pub use basic::{basic_quotient_chain, is_basic, BasicVerdict, NormalWitness, QuotientStep, Tier, TranslationHint};
pub use census::{census_2p2, census_families, CensusEntry, CensusReport, CENSUS_PRIME_LIMIT};
pub use recognize::{gd_recognize, recognize_family, GdRecognition, Recognized, RECOGNITION_ORDER};
pub use refine::{aut_group, isomorphic, MAX_VERTICES};

/// Vertex stabilizers of connected pentavalent `(G, s)`-transitive graphs,
/// by `s`, as `(name, order)`.
pub struct StabCatalog;

impl StabCatalog {
    pub const ROWS: [(usize, &'static [(&'static str, u128)]); 5] = [
        (1, &[("Z_5", 5), ("D_5", 10), ("D_10", 20)]),
        (2, &[("F_20", 20), ("F_20×Z_2", 40), ("A_5", 60), ("S_5", 120)]),
        (
            3,
            &[("F_20×Z_4", 80), ("A_4×A_5", 720), ("(A_4×A_5)⋊Z_2", 1440), ("S_4×S_5", 2880)],
        ),
        (
            4,
            &[("ASL(2,4)", 960), ("AΣL(2,4)", 1920), ("AGL(2,4)", 2880), ("AΓL(2,4)", 5760)],
        ),
        (5, &[("Z_2^6⋊ΓL(2,4)", 23040)]),
    ];

    pub fn row(s: usize) -> &'static [(&'static str, u128)] {
        Self::ROWS
            .iter()
            .find(|(t, _)| *t == s)
            .map_or(&[], |(_, row)| row)
    }

    /// Names in row `s` whose order is `order`.
    pub fn matches(s: usize, order: u128) -> Vec<&'static str> {
        Self::row(s)
            .iter()
            .filter(|(_, o)| *o == order)
            .map(|(name, _)| *name)
            .collect()
    }
}

/// Largest number of s-arcs enumerated when testing s-arc transitivity.
pub const S_ARC_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SClass {
    /// Largest `s` with the automorphism group transitive on `s`-arcs.
    pub s: usize,
    pub stabilizer_order: u128,
    pub catalog: Vec<String>,
    /// False when the next s-arc set was too large to test, so `s` is a lower bound.
    pub exact: bool,
}

/// s-arc transitivity of a connected pentavalent vertex-transitive graph.
pub fn s_class(g: &Graph, aut: &PermGroup) -> Result<SClass> {
    if g.regular_degree() != Some(5) || !g.is_connected() {
        return Err(Error::NotPentavalent);
    }
    if !aut.is_transitive() {
        return Err(Error::NotVertexTransitive);
    }
    let stabilizer_order = aut.order() / g.vertex_count() as u128;
    let mut s = 0;
    let mut exact = true;
    loop {
        let arcs = match g.s_arcs(s + 1, S_ARC_LIMIT) {
            Ok(arcs) => arcs,
            Err(Error::TooLarge { .. }) => {
                exact = false;
                break;
            }
            Err(e) => return Err(e),
        };
        if !aut.tuple_orbit_transitive(&arcs) {
            break;
        }
        s += 1;
    }
    let catalog = StabCatalog::matches(s, stabilizer_order)
        .into_iter()
        .map(String::from)
        .collect();
    Ok(SClass {
        s,
        stabilizer_order,
        catalog,
        exact,
    })
}

/// Whether the automorphism group is transitive on arcs.
pub fn is_arc_transitive(g: &Graph, aut: &PermGroup) -> Result<bool> {
    if g.edge_count() == 0 {
        return Ok(false);
    }
    Ok(aut.is_transitive() && aut.tuple_orbit_transitive(&g.s_arcs(1, S_ARC_LIMIT)?))
}

/// Orbit summary of a normal subgroup witnessing non-basicness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSummary {
    pub order: u128,
    pub orbits: usize,
    pub semiregular: bool,
}

/// Symmetry summary of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub family: Option<String>,
    pub vertices: usize,
    pub aut_order: u128,
    pub girth: Option<usize>,
    pub s: Option<usize>,
    pub stabilizer_order: Option<u128>,
    pub catalog: Vec<String>,
    /// `None` when basicness could not be decided.
    pub basic: Option<bool>,
    pub witness: Option<WitnessSummary>,
    pub quotient: Option<String>,
}

/// Build the report; pentavalent-only fields are left empty otherwise.
pub fn analyze(g: &Graph, name: Option<String>, hint: Option<&TranslationHint>) -> Result<SymmetryReport> {
    let aut = aut_group(g)?;
    let pentavalent = g.regular_degree() == Some(5) && g.is_connected();
    let sc = if pentavalent && aut.is_transitive() {
        Some(s_class(g, &aut)?)
    } else {
        None
    };
    let symmetric = sc.as_ref().is_some_and(|c| c.s >= 1);
    let (basic, witness, quotient) = if symmetric {
        match is_basic(g, &aut, hint) {
            Ok(v) => {
                let witness = v.witness.as_ref().map(|w| WitnessSummary {
                    order: w.order(),
                    orbits: w.orbits.len(),
                    semiregular: w.group.is_semiregular(),
                });
                let quotient = if v.basic {
                    None
                } else {
                    basic_quotient_chain(g, hint)?
                        .last()
                        .and_then(|step| step.recognized)
                        .map(|r| r.to_string())
                };
                (Some(v.basic), witness, quotient)
            }
            Err(Error::Unsupported(_)) => (None, None, None),
            Err(e) => return Err(e),
        }
    } else {
        (None, None, None)
    };
    Ok(SymmetryReport {
        family: name,
        vertices: g.vertex_count(),
        aut_order: aut.order(),
        girth: g.girth(),
        s: sc.as_ref().map(|c| c.s),
        stabilizer_order: sc.as_ref().map(|c| c.stabilizer_order),
        catalog: sc.map(|c| c.catalog).unwrap_or_default(),
        basic,
        witness,
        quotient,
    })
}

/// [`analyze`] for a constructed family member.
pub fn analyze_family(ng: &NamedGraph) -> Result<SymmetryReport> {
    let hint = TranslationHint::for_family(ng);
    analyze(&ng.graph, Some(ng.name()), hint.as_ref())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{family, FamilyId, FamilyParams};
    use crate::graph::{complete, complete_bipartite, cycle};
    use crate::permgrp::PermGroup;

    fn named(name: &str) -> NamedGraph {
        let (id, p) = FamilyId::parse_instance(name).unwrap();
        family(id, p, FamilyParams::default()).unwrap()
    }

    #[test]
    fn catalog_orders() {
        for (_, row) in StabCatalog::ROWS {
            assert!(row.windows(2).all(|w| w[0].1 < w[1].1));
            assert!(row.iter().all(|(_, o)| 23040 % o == 0));
        }
        assert_eq!(StabCatalog::matches(2, 120), vec!["S_5"]);
    }

    #[test]
    fn s_classes() {
        let k6 = complete(6);
        let c = s_class(&k6, &aut_group(&k6).unwrap()).unwrap();
        assert_eq!((c.s, c.stabilizer_order), (2, 120));
        for (name, s, stab) in [("CD(31)", 1, 5), ("CGD1(11^2)", 1, 5), ("CGD2(11^2)", 1, 10), ("CGD(5^3)", 2, 120)] {
            let ng = named(name);
            let c = s_class(&ng.graph, &aut_group(&ng.graph).unwrap()).unwrap();
            assert_eq!((c.s, c.stabilizer_order), (s, stab), "{name}");
            assert!(!c.catalog.is_empty());
        }
        assert_eq!(
            s_class(&cycle(5), &aut_group(&cycle(5)).unwrap()),
            Err(Error::NotPentavalent)
        );
    }

    #[test]
    fn basic_verdicts_small() {
        for (name, basic) in [("K6", true), ("CD(5)", true), ("CGD1(5^2)", false), ("CGD(2^4)", false), ("FQ4", true)] {
            let ng = named(name);
            let aut = aut_group(&ng.graph).unwrap();
            let v = is_basic(&ng.graph, &aut, TranslationHint::for_family(&ng).as_ref()).unwrap();
            assert_eq!(v.basic, basic, "{name}");
            if let Some(w) = &v.witness {
                assert!(w.verify(&aut));
            }
        }
    }

    #[test]
    fn translation_tier_agrees_with_closures() {
        for name in ["CGD1(11^2)", "CGD2(11^2)", "CGD2(19^2)"] {
            let ng = named(name);
            let aut = aut_group(&ng.graph).unwrap();
            let hint = TranslationHint::for_family(&ng).unwrap();
            let full = is_basic(&ng.graph, &aut, None).unwrap();
            let c = basic::translation_search(&ng.graph, &aut, &hint).unwrap();
            assert_eq!(c.0, full.basic, "{name}");
        }
    }

    #[test]
    fn translation_tier_refuses_non_sylow() {
        // At p = 2 the translations form an irreducible module and the
        // order-2 normal subgroup lies outside them.
        let ng = named("CGD(2^4)");
        let aut = aut_group(&ng.graph).unwrap();
        let hint = TranslationHint::for_family(&ng).unwrap();
        assert!(matches!(
            basic::translation_search(&ng.graph, &aut, &hint),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn quotient_chains() {
        for (name, order, target) in [("CGD1(5^2)", 5, "CD(5)"), ("CGD(2^4)", 2, "FQ4"), ("CGD1(11^2)", 11, "CD(11)")] {
            let ng = named(name);
            let chain = basic_quotient_chain(&ng.graph, TranslationHint::for_family(&ng).as_ref()).unwrap();
            assert_eq!(chain.len(), 1, "{name}");
            assert_eq!(chain[0].normal_order, order);
            assert_eq!(chain[0].recognized.unwrap().to_string(), target);
        }
    }

    #[test]
    fn gd_recognition() {
        let k55 = complete_bipartite(5, 5);
        let rot = crate::perm::Perm::from_cycles(10, &[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]]).unwrap();
        let h = PermGroup::new(10, vec![rot]).unwrap();
        let r = gd_recognize(&k55, &h).unwrap();
        assert_eq!(r.group.order(), 10);
        assert_eq!(r.connection_set.len(), 5);
        assert_eq!(gd_recognize(&cycle(7), &PermGroup::trivial(7)).unwrap_err(), Error::NotBipartite);

        let ng = named("CGD2(11^2)");
        let hint = TranslationHint::for_family(&ng).unwrap();
        let t = PermGroup::new(ng.graph.vertex_count(), hint.basis).unwrap();
        let r = gd_recognize(&ng.graph, &t).unwrap();
        assert_eq!(r.group.h().moduli(), &[11, 11]);
        assert!(ng.graph.is_automorphism(&r.involution));
        let rebuilt = crate::constructions::cayley(&r.group, r.connection_set.elements()).unwrap();
        assert!(isomorphic(&rebuilt, &ng.graph).unwrap().is_some());
    }

    #[test]
    fn report_json_shape() {
        let r = analyze_family(&named("CGD1(11^2)")).unwrap();
        assert_eq!(r.aut_order, 1210);
        assert_eq!(r.girth, Some(6));
        assert_eq!((r.s, r.stabilizer_order), (Some(1), Some(5)));
        assert_eq!(r.basic, Some(false));
        assert_eq!(r.quotient.as_deref(), Some("CD(11)"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["family"], "CGD1(11^2)");
        assert_eq!(json["vertices"], 242);
    }
}
