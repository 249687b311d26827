//! Recognizing graphs as family members or as Cayley graphs on `GD_H`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, AbVector, AbelianSpec};
use crate::constructions::{cayley, family, FamilyId, FamilyParams};
use crate::error::{Error, Result};
use crate::gdgroup::{ConnectionSet, GdElement, GdGroup};
use crate::graph::Graph;
use crate::perm::Perm;
use crate::permgrp::PermGroup;

use super::refine::isomorphic;

/// Families tried by [`recognize_family`], in order.
pub const RECOGNITION_ORDER: [FamilyId; 7] = [
    FamilyId::K6,
    FamilyId::FQ(4),
    FamilyId::CdP,
    FamilyId::Cgd1P2,
    FamilyId::Cgd2P2,
    FamilyId::CgdP3,
    FamilyId::CgdP4,
];

/// A family instance isomorphic to a given graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognized {
    pub family: FamilyId,
    pub p: Option<u64>,
}

impl fmt::Display for Recognized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family.instance_name(self.p))
    }
}

fn family_exponent(id: FamilyId) -> Option<u32> {
    match id {
        FamilyId::CdP => Some(1),
        FamilyId::Cgd1P2 | FamilyId::Cgd2P2 | FamilyId::CdP2 => Some(2),
        FamilyId::CgdP3 => Some(3),
        FamilyId::CgdP4 => Some(4),
        _ => None,
    }
}

/// First family instance (in [`RECOGNITION_ORDER`]) isomorphic to `g`.
pub fn recognize_family(g: &Graph) -> Result<Option<Recognized>> {
    let n = g.vertex_count() as u64;
    for id in RECOGNITION_ORDER {
        let p = match family_exponent(id) {
            None => None,
            Some(e) => match n.is_multiple_of(2).then(|| algebra::prime_power(n / 2)).flatten() {
                Some((p, k)) if k == e => Some(p),
                _ => continue,
            },
        };
        let Ok(candidate) = family(id, p, FamilyParams::default()) else {
            continue;
        };
        if candidate.graph.vertex_count() as u64 != n {
            continue;
        }
        if isomorphic(g, &candidate.graph)?.is_some() {
            return Ok(Some(Recognized { family: id, p }));
        }
    }
    Ok(None)
}

/// `g` relabelled as a Cayley graph on `GD_H`.
#[derive(Debug, Clone)]
pub struct GdRecognition {
    pub group: GdGroup,
    pub connection_set: ConnectionSet,
    /// Group element assigned to each vertex.
    pub labels: Vec<GdElement>,
    /// The automorphism `h ↦ (h^{-1})'`, `h' ↦ h^{-1}`.
    pub involution: Perm,
}

/// Coordinates of the regular orbit of `start` under `gens`, in `Z_{d_1} × …`.
fn coordinates(start: usize, gens: &[Perm], spec: &AbelianSpec) -> HashMap<usize, AbVector> {
    let mut coords = HashMap::from([(start, spec.zero())]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for (i, f) in gens.iter().enumerate() {
            let y = f.apply(x);
            if !coords.contains_key(&y) {
                let v = spec.add(&coords[&x], &spec.basis(i));
                coords.insert(y, v);
                stack.push(y);
            }
        }
    }
    coords
}

/// Structure of an abelian group acting regularly on the orbit of `start`:
/// invariant factors and matching generators.
fn abelian_structure(h: &PermGroup, start: usize) -> (AbelianSpec, Vec<Perm>) {
    let gens = h.generators();
    let k = gens.len();
    let degree = h.degree();
    let mut vec_of: HashMap<usize, Vec<i64>> = HashMap::from([(start, vec![0; k])]);
    let mut order = vec![start];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (j, g) in gens.iter().enumerate() {
            let y = g.apply(x);
            if !vec_of.contains_key(&y) {
                let mut v = vec_of[&x].clone();
                v[j] += 1;
                vec_of.insert(y, v);
                order.push(y);
            }
        }
        i += 1;
    }
    let mut relations: HashSet<Vec<i64>> = HashSet::new();
    for &x in &order {
        for (j, g) in gens.iter().enumerate() {
            let mut r = vec_of[&x].clone();
            r[j] += 1;
            for (a, b) in r.iter_mut().zip(&vec_of[&g.apply(x)]) {
                *a -= b;
            }
            if r.iter().any(|&c| c != 0) {
                relations.insert(r);
            }
        }
    }
    if k == 0 {
        return (AbelianSpec::new(vec![]).expect("trivial group"), vec![]);
    }
    let mut relations: Vec<Vec<i64>> = relations.into_iter().collect();
    relations.sort();
    let (invariants, combos) = algebra::abelian_invariants(k, &relations);
    let new_gens = combos
        .iter()
        .map(|c| {
            c.iter().zip(gens).fold(Perm::identity(degree), |acc, (&e, g)| {
                let o = g.order() as i64;
                acc.then(&g.pow(e.rem_euclid(o) as u64))
            })
        })
        .collect();
    (AbelianSpec::new(invariants).expect("invariant factors exceed one"), new_gens)
}

/// Label a bipartite graph with an abelian group `h` regular on each part as
/// a Cayley graph on `GD_H`.
pub fn gd_recognize(g: &Graph, h: &PermGroup) -> Result<GdRecognition> {
    let Some((part0, part1)) = g.bipartition()? else {
        return Err(Error::NotBipartite);
    };
    if h.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch(h.degree(), g.vertex_count()));
    }
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !h.is_semiregular() {
        return Err(Error::NotSemiregular);
    }
    let mut orbits: Vec<Vec<usize>> = h.orbits().into_iter().map(|mut o| {
        o.sort_unstable();
        o
    }).collect();
    orbits.sort();
    let mut parts = vec![part0.clone(), part1.clone()];
    for p in parts.iter_mut() {
        p.sort_unstable();
    }
    parts.sort();
    if orbits != parts {
        return Err(Error::OrbitsNotParts);
    }
    let v0 = *part0.iter().min().expect("nonempty part");
    let w0 = *part1.iter().min().expect("nonempty part");
    let (spec, gens) = abelian_structure(h, v0);
    let side0 = coordinates(v0, &gens, &spec);
    let side1 = coordinates(w0, &gens, &spec);
    let group = GdGroup::new(spec.clone());
    // h(v0) ↦ (h, 0) and h(w0) ↦ (−h, 1), so that h acts as right
    // multiplication by (h, 0).
    let mut labels = vec![group.identity(); g.vertex_count()];
    for (&v, x) in &side0 {
        labels[v] = GdElement::new(x.clone(), false);
    }
    for (&v, x) in &side1 {
        labels[v] = GdElement::new(spec.neg(x), true);
    }
    let s: Vec<GdElement> = g.neighbors(v0).iter().map(|&u| labels[u as usize].clone()).collect();
    let connection_set = ConnectionSet::new(&group, s)?;
    let cay = cayley(&group, connection_set.elements())?;
    let map: Vec<usize> = labels.iter().map(|x| group.index_of(x)).collect();
    if !g.is_isomorphism(&cay, &map) {
        return Err(Error::Unsupported("labelling does not give a Cayley graph".into()));
    }
    let index_to_vertex: Vec<usize> = {
        let mut inv = vec![0; map.len()];
        for (v, &i) in map.iter().enumerate() {
            inv[i] = v;
        }
        inv
    };
    let flip = group.right_mult(&GdElement::new(spec.zero(), true));
    let involution = Perm::from_vec(map.iter().map(|&i| index_to_vertex[flip.apply(i)]).collect())?;
    if !g.is_automorphism(&involution) {
        return Err(Error::Unsupported("flip is not an automorphism".into()));
    }
    Ok(GdRecognition {
        group,
        connection_set,
        labels,
        involution,
    })
}
