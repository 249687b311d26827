//! Pentavalent symmetric graphs of order `2p²` from the known families.

use serde::{Deserialize, Serialize};

use crate::algebra;
use crate::constructions::{family, FamilyId, FamilyParams};
use crate::error::{Error, Result};

use super::refine::{aut_group, isomorphic};
use super::s_class;

/// Largest prime accepted by [`census_2p2`].
pub const CENSUS_PRIME_LIMIT: u64 = 31;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub family: String,
    pub vertices: usize,
    pub aut_order: u128,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub p: u64,
    pub count: usize,
    pub graphs: Vec<CensusEntry>,
    pub pairwise_non_isomorphic: bool,
}

/// Families of order `2p²` whose arithmetic condition holds at `p`.
pub fn census_families(p: u64) -> Vec<FamilyId> {
    let mut out = Vec::new();
    if p == 5 || p % 5 == 1 {
        out.push(FamilyId::Cgd1P2);
    }
    if p % 5 == 1 || p % 5 == 4 {
        out.push(FamilyId::Cgd2P2);
    }
    if p % 5 == 1 {
        out.push(FamilyId::CdP2);
    }
    out
}

/// Build every applicable family, check each is symmetric and that they
/// are pairwise non-isomorphic.
pub fn census_2p2(p: u64) -> Result<CensusReport> {
    if !algebra::is_prime(p) {
        return Err(Error::UnsupportedParameter(format!("{p} is not prime")));
    }
    if p > CENSUS_PRIME_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "order-2p^2 census (prime)",
            needed: p as u128,
            budget: CENSUS_PRIME_LIMIT as u128,
        });
    }
    let mut graphs = Vec::new();
    let mut entries = Vec::new();
    for id in census_families(p) {
        let ng = family(id, Some(p), FamilyParams::default())?;
        let aut = aut_group(&ng.graph)?;
        let class = s_class(&ng.graph, &aut)?;
        if class.s == 0 {
            return Err(Error::Unsupported(format!("{} is not arc-transitive", ng.name())));
        }
        entries.push(CensusEntry {
            family: ng.name(),
            vertices: ng.graph.vertex_count(),
            aut_order: aut.order(),
            s: class.s,
        });
        graphs.push(ng.graph);
    }
    let mut pairwise_non_isomorphic = true;
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            if isomorphic(&graphs[i], &graphs[j])?.is_some() {
                pairwise_non_isomorphic = false;
            }
        }
    }
    Ok(CensusReport {
        p,
        count: entries.len(),
        graphs: entries,
        pairwise_non_isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_counts() {
        let r = census_2p2(11).unwrap();
        assert_eq!(r.count, 3);
        assert!(r.pairwise_non_isomorphic);
        let orders: Vec<u128> = r.graphs.iter().map(|e| e.aut_order).collect();
        assert_eq!(orders, vec![1210, 2420, 1210]);
        assert_eq!(census_2p2(7).unwrap().count, 0);
        assert_eq!(census_2p2(19).unwrap().graphs[0].family, "CGD2(19^2)");
        assert!(matches!(census_2p2(37), Err(Error::BudgetExceeded { .. })));
    }
}
