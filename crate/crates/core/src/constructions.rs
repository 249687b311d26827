//! Cayley graphs on generalized dihedral groups and the named pentavalent families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, AbelianSpec};
use crate::error::{Error, Result};
use crate::gdgroup::{self, ConnectionSet, GdElement, GdGroup, SetStabilizer};
use crate::graph::{self, Graph};
use crate::perm::Perm;
use crate::permgrp::PermGroup;

/// Graph families, addressed by stable string ids such as `"CGD1(p^2)"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    K6,
    /// Hypercube `Q_n`.
    Q(usize),
    /// Folded hypercube `FQ_n`.
    FQ(usize),
    CdP,
    CdP2,
    Cgd1P2,
    Cgd2P2,
    CgdP3,
    CgdP4,
}

impl FamilyId {
    /// Families parameterized by a prime.
    pub fn takes_prime(self) -> bool {
        !matches!(self, FamilyId::K6 | FamilyId::Q(_) | FamilyId::FQ(_))
    }

    /// The four families arising as elementary abelian covers of the dipole.
    pub fn is_dipole_cover(self) -> bool {
        matches!(
            self,
            FamilyId::Cgd1P2 | FamilyId::Cgd2P2 | FamilyId::CgdP3 | FamilyId::CgdP4
        )
    }

    /// Name of the instance at prime `p`, e.g. `CGD1(11^2)`.
    pub fn instance_name(self, p: Option<u64>) -> String {
        let p = match p {
            Some(p) if self.takes_prime() => p.to_string(),
            _ => return self.to_string(),
        };
        match self {
            FamilyId::CdP => format!("CD({p})"),
            FamilyId::CdP2 => format!("CD({p}^2)"),
            FamilyId::Cgd1P2 => format!("CGD1({p}^2)"),
            FamilyId::Cgd2P2 => format!("CGD2({p}^2)"),
            FamilyId::CgdP3 => format!("CGD({p}^3)"),
            FamilyId::CgdP4 => format!("CGD({p}^4)"),
            _ => unreachable!("handled above"),
        }
    }

    /// Parse an instance name such as `CGD(5^3)`, `CD(11)` or `FQ4`.
    pub fn parse_instance(name: &str) -> Result<(FamilyId, Option<u64>)> {
        if let Ok(id) = name.parse::<FamilyId>() {
            return Ok((id, None));
        }
        let bad = || Error::Parse(format!("unknown family instance `{name}`"));
        let (head, rest) = name.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let (p, exp) = match inner.split_once('^') {
            Some((p, e)) => (p, e.parse::<u32>().map_err(|_| bad())?),
            None => (inner, 1),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        let id = match (head, exp) {
            ("CD", 1) => FamilyId::CdP,
            ("CD", 2) => FamilyId::CdP2,
            ("CGD1", 2) => FamilyId::Cgd1P2,
            ("CGD2", 2) => FamilyId::Cgd2P2,
            ("CGD", 3) => FamilyId::CgdP3,
            ("CGD", 4) => FamilyId::CgdP4,
            _ => return Err(bad()),
        };
        Ok((id, Some(p)))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::K6 => write!(f, "K6"),
            FamilyId::Q(n) => write!(f, "Q{n}"),
            FamilyId::FQ(n) => write!(f, "FQ{n}"),
            FamilyId::CdP => write!(f, "CD(p)"),
            FamilyId::CdP2 => write!(f, "CD(p^2)"),
            FamilyId::Cgd1P2 => write!(f, "CGD1(p^2)"),
            FamilyId::Cgd2P2 => write!(f, "CGD2(p^2)"),
            FamilyId::CgdP3 => write!(f, "CGD(p^3)"),
            FamilyId::CgdP4 => write!(f, "CGD(p^4)"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "K6" => FamilyId::K6,
            "CD(p)" => FamilyId::CdP,
            "CD(p^2)" => FamilyId::CdP2,
            "CGD1(p^2)" => FamilyId::Cgd1P2,
            "CGD2(p^2)" => FamilyId::Cgd2P2,
            "CGD(p^3)" => FamilyId::CgdP3,
            "CGD(p^4)" => FamilyId::CgdP4,
            _ => {
                let parse_n = |rest: &str| {
                    rest.parse::<usize>()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| Error::Parse(format!("unknown family id `{s}`")))
                };
                if let Some(rest) = s.strip_prefix("FQ") {
                    FamilyId::FQ(parse_n(rest)?)
                } else if let Some(rest) = s.strip_prefix('Q') {
                    FamilyId::Q(parse_n(rest)?)
                } else {
                    return Err(Error::Parse(format!("unknown family id `{s}`")));
                }
            }
        };
        Ok(id)
    }
}

/// Optional overrides for the order-5 element `ℓ` and the square root `λ` of 5.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub ell: Option<u64>,
    pub lambda: Option<u64>,
}

/// A constructed family member with its algebraic structure.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub family: FamilyId,
    pub p: Option<u64>,
    /// Present for Cayley families on `GD_H`; vertex `i` is `group.element_at(i)`.
    pub group: Option<GdGroup>,
    pub connection_set: Option<ConnectionSet>,
    pub graph: Graph,
    /// Parameters actually used.
    pub params: FamilyParams,
}

impl NamedGraph {
    pub fn name(&self) -> String {
        self.family.instance_name(self.p)
    }

    /// Vertex index of a group element.
    pub fn vertex_of(&self, x: &GdElement) -> Option<usize> {
        let g = self.group.as_ref()?;
        g.contains(x).then(|| g.index_of(x))
    }
}

/// `Cay(G, S)`: vertices are the elements of `G` in [`GdGroup::elements`]
/// order, and `g ~ s·g` for `s ∈ S`.
pub fn cayley(group: &GdGroup, s: &[GdElement]) -> Result<Graph> {
    group.check_size()?;
    let id = group.identity();
    for x in s {
        if !group.contains(x) {
            return Err(Error::SpecMismatch);
        }
    }
    if s.contains(&id) {
        return Err(Error::IdentityInS);
    }
    if s.iter().any(|x| !s.contains(&group.inv(x))) {
        return Err(Error::NotSymmetricSet);
    }
    let n = group.order();
    let mut edges = Vec::with_capacity(n * s.len() / 2);
    for i in 0..n {
        let g = group.element_at(i);
        for x in s {
            let j = group.index_of(&group.mul(x, &g));
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, edges)
}

fn require_prime(p: u64) -> Result<()> {
    if algebra::is_prime(p) {
        Ok(())
    } else {
        Err(Error::UnsupportedParameter(format!("{p} is not prime")))
    }
}

/// `ℓ` of multiplicative order 5 modulo `m`, or 1 when `p = 5` and `m = 5`.
fn order_five_parameter(p: u64, m: u64, ell: Option<u64>) -> Result<u64> {
    if p == 5 && m == 5 {
        return match ell {
            None | Some(1) => Ok(1),
            Some(l) => Err(Error::UnsupportedParameter(format!(
                "at p = 5 the parameter must be 1, got {l}"
            ))),
        };
    }
    match ell {
        Some(l) => {
            if algebra::multiplicative_order(l % m, m) == Some(5) {
                Ok(l % m)
            } else {
                Err(Error::UnsupportedParameter(format!(
                    "{l} does not have multiplicative order 5 modulo {m}"
                )))
            }
        }
        None => algebra::element_of_order(5, m).ok_or(Error::NoOrder5Element(p)),
    }
}

fn sqrt5_parameter(p: u64, lambda: Option<u64>) -> Result<u64> {
    if p == 2 || p == 5 {
        return Err(Error::UnsupportedParameter(format!(
            "CGD2 needs an odd prime other than 5, got {p}"
        )));
    }
    match lambda {
        Some(l) if algebra::mul_mod(l, l, p) == 5 % p => Ok(l % p),
        Some(l) => Err(Error::UnsupportedParameter(format!(
            "{l} is not a square root of 5 modulo {p}"
        ))),
        None => algebra::sqrt5(p).ok_or(Error::NoSquareRootOf5(p)),
    }
}

/// Vector parts of the connection set for a Cayley family at prime `p`.
/// Returns the abelian group `H`, the vectors, and the parameters used.
pub fn connection_vectors(
    id: FamilyId,
    p: u64,
    params: FamilyParams,
) -> Result<(AbelianSpec, Vec<Vec<i64>>, FamilyParams)> {
    require_prime(p)?;
    let ip = p as i64;
    let inv = |x: u64| algebra::unit_inverse(x, p).map(|y| y as i64);
    let used_ell = |l: u64| FamilyParams {
        ell: Some(l),
        lambda: None,
    };
    let geometric = |l: u64, m: u64| -> Vec<Vec<i64>> {
        // 0, 1, 1+ℓ, 1+ℓ+ℓ², 1+ℓ+ℓ²+ℓ³
        let mut out = vec![vec![0]];
        let mut acc = 0u64;
        let mut pw = 1u64;
        for _ in 0..4 {
            acc = (acc + pw) % m;
            pw = algebra::mul_mod(pw, l, m);
            out.push(vec![acc as i64]);
        }
        out
    };
    match id {
        FamilyId::CdP => {
            let l = order_five_parameter(p, p, params.ell)?;
            Ok((AbelianSpec::cyclic(p)?, geometric(l, p), used_ell(l)))
        }
        FamilyId::CdP2 => {
            let m = p * p;
            let l = order_five_parameter(p, m, params.ell)?;
            Ok((AbelianSpec::cyclic(m)?, geometric(l, m), used_ell(l)))
        }
        FamilyId::Cgd1P2 => {
            let l = order_five_parameter(p, p, params.ell)?;
            let l1 = inv(l + 1)?;
            let vs = vec![
                vec![0, 0],
                vec![1, 0],
                vec![(l as i64 * l1) % ip, inv(l)?],
                vec![l as i64, l1],
                vec![0, 1],
            ];
            Ok((AbelianSpec::elementary(p, 2)?, vs, used_ell(l)))
        }
        FamilyId::Cgd2P2 => {
            let lambda = sqrt5_parameter(p, params.lambda)?;
            let i = (inv(2)? * (1 + lambda as i64)) % ip;
            let vs = vec![vec![0, 0], vec![1, 0], vec![i, 1], vec![1, i], vec![0, 1]];
            let used = FamilyParams {
                ell: None,
                lambda: Some(lambda),
            };
            Ok((AbelianSpec::elementary(p, 2)?, vs, used))
        }
        FamilyId::CgdP3 => {
            let l = order_five_parameter(p, p, params.ell)?;
            let l = l as i64;
            let c = vec![-(l * l), -l, -(l.pow(4) % ip)];
            let vs = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], c, vec![0, 0, 1]];
            Ok((AbelianSpec::elementary(p, 3)?, vs, used_ell(l as u64)))
        }
        FamilyId::CgdP4 => {
            let mut vs = vec![vec![0; 4]];
            for i in 0..4 {
                let mut e = vec![0; 4];
                e[i] = 1;
                vs.push(e);
            }
            Ok((AbelianSpec::elementary(p, 4)?, vs, FamilyParams::default()))
        }
        FamilyId::K6 | FamilyId::Q(_) | FamilyId::FQ(_) => Err(Error::UnsupportedParameter(
            format!("{id} is not a Cayley family on a generalized dihedral group"),
        )),
    }
}

/// Construct a family member. `p` is required for prime-parameterized families
/// and ignored otherwise.
pub fn family(id: FamilyId, p: Option<u64>, params: FamilyParams) -> Result<NamedGraph> {
    match id {
        FamilyId::K6 => Ok(plain(id, graph::complete(6))),
        FamilyId::Q(n) => Ok(plain(id, hypercube(n, false)?)),
        FamilyId::FQ(n) => Ok(plain(id, hypercube(n, true)?)),
        _ => {
            let p = p.ok_or_else(|| {
                Error::UnsupportedParameter(format!("family {id} needs a prime parameter"))
            })?;
            let (spec, vectors, used) = connection_vectors(id, p, params)?;
            let group = GdGroup::new(spec);
            let elems = vectors
                .iter()
                .map(|v| group.element(v, true))
                .collect::<Result<Vec<_>>>()?;
            let s = ConnectionSet::new(&group, elems)?;
            let graph = cayley(&group, s.elements())?;
            Ok(NamedGraph {
                family: id,
                p: Some(p),
                group: Some(group),
                connection_set: Some(s),
                graph,
                params: used,
            })
        }
    }
}

fn plain(id: FamilyId, graph: Graph) -> NamedGraph {
    NamedGraph {
        family: id,
        p: None,
        group: None,
        connection_set: None,
        graph,
        params: FamilyParams::default(),
    }
}

/// `Q_n`, or `FQ_n` when `folded` (antipodal vertices also adjacent).
fn hypercube(n: usize, folded: bool) -> Result<Graph> {
    if n == 0 || n > 20 {
        return Err(Error::UnsupportedParameter(format!(
            "hypercube dimension must be in 1..=20, got {n}"
        )));
    }
    let count = 1usize << n;
    let full = count - 1;
    let mut edges = Vec::new();
    for v in 0..count {
        for b in 0..n {
            edges.push((v, v ^ (1 << b)));
        }
        if folded {
            edges.push((v, v ^ full));
        }
    }
    Graph::build(count, edges)
}

/// `Aut(G, S)` for a Cayley family member.
pub fn set_stabilizer(ng: &NamedGraph) -> Result<SetStabilizer> {
    let (group, s) = cayley_parts(ng)?;
    gdgroup::aut_fixing_s(group, s)
}

fn cayley_parts(ng: &NamedGraph) -> Result<(&GdGroup, &ConnectionSet)> {
    match (&ng.group, &ng.connection_set) {
        (Some(g), Some(s)) => Ok((g, s)),
        _ => Err(Error::Unsupported(format!(
            "{} is not a Cayley graph on a generalized dihedral group",
            ng.name()
        ))),
    }
}

/// `R(G) ⋊ Aut(G, S)` acting on the vertices of a Cayley family member.
pub fn normalizer_group(ng: &NamedGraph) -> Result<PermGroup> {
    let (group, _) = cayley_parts(ng)?;
    let stab = set_stabilizer(ng)?;
    let regular = group.right_regular()?;
    let mut gens: Vec<Perm> = regular.generators().to_vec();
    gens.extend(stab.auts.iter().map(|a| a.vertex_perm(group)));
    // R(G) is regular and Aut(G, S) fixes the identity vertex, so they meet
    // trivially and the product has exactly this order.
    let order = group.order() as u128 * stab.order() as u128;
    PermGroup::with_known_order(group.order(), gens, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(ng: &NamedGraph) -> Vec<Vec<u64>> {
        ng.connection_set.as_ref().unwrap().vectors()
    }

    #[test]
    fn family_ids_roundtrip() {
        for id in [
            FamilyId::K6,
            FamilyId::Q(5),
            FamilyId::FQ(4),
            FamilyId::CdP,
            FamilyId::CdP2,
            FamilyId::Cgd1P2,
            FamilyId::Cgd2P2,
            FamilyId::CgdP3,
            FamilyId::CgdP4,
        ] {
            assert_eq!(id.to_string().parse::<FamilyId>().unwrap(), id);
        }
        assert_eq!(
            FamilyId::parse_instance("CGD1(11^2)").unwrap(),
            (FamilyId::Cgd1P2, Some(11))
        );
        assert_eq!(FamilyId::parse_instance("CD(31)").unwrap(), (FamilyId::CdP, Some(31)));
        assert_eq!(FamilyId::Cgd1P2.instance_name(Some(11)), "CGD1(11^2)");
        assert!(FamilyId::parse_instance("XYZ(3)").is_err());
    }

    #[test]
    fn cgd1_at_five() {
        let ng = family(FamilyId::Cgd1P2, Some(5), FamilyParams::default()).unwrap();
        assert_eq!(vecs(&ng), vec![vec![0, 0], vec![1, 0], vec![3, 1], vec![1, 3], vec![0, 1]]);
        assert_eq!(
            family(FamilyId::Cgd1P2, Some(7), FamilyParams::default()).unwrap_err(),
            Error::NoOrder5Element(7)
        );
    }

    #[test]
    fn cgd2_at_eleven() {
        let ng = family(FamilyId::Cgd2P2, Some(11), FamilyParams::default()).unwrap();
        assert_eq!(ng.params.lambda, Some(4));
        assert_eq!(vecs(&ng), vec![vec![0, 0], vec![1, 0], vec![8, 1], vec![1, 8], vec![0, 1]]);
        // i(i − 1) = 1
        assert_eq!(8 * 7 % 11, 1);
        assert!(matches!(
            family(FamilyId::Cgd2P2, Some(5), FamilyParams::default()),
            Err(Error::UnsupportedParameter(_))
        ));
        assert_eq!(
            family(FamilyId::Cgd2P2, Some(7), FamilyParams::default()).unwrap_err(),
            Error::NoSquareRootOf5(7)
        );
    }

    #[test]
    fn cgd3_at_five() {
        let ng = family(FamilyId::CgdP3, Some(5), FamilyParams::default()).unwrap();
        assert_eq!(vecs(&ng)[3], vec![4, 4, 4]);
        let ng41 = FamilyParams {
            ell: Some(10),
            lambda: None,
        };
        assert!(family(FamilyId::CgdP3, Some(41), ng41).is_ok());
        let bad = FamilyParams {
            ell: Some(2),
            lambda: None,
        };
        assert!(family(FamilyId::CgdP3, Some(41), bad).is_err());
    }

    #[test]
    fn cd5_is_k55() {
        let ng = family(FamilyId::CdP, Some(5), FamilyParams::default()).unwrap();
        assert_eq!(ng.graph.edge_count(), 25);
        let (a, b) = ng.graph.bipartition().unwrap().unwrap();
        for &x in &a {
            for &y in &b {
                assert!(ng.graph.has_edge(x, y));
            }
        }
    }

    #[test]
    fn families_are_connected_and_pentavalent() {
        let cases = [
            (FamilyId::CdP, 11),
            (FamilyId::CdP, 31),
            (FamilyId::CdP2, 11),
            (FamilyId::Cgd1P2, 5),
            (FamilyId::Cgd1P2, 11),
            (FamilyId::Cgd2P2, 11),
            (FamilyId::Cgd2P2, 19),
            (FamilyId::CgdP3, 5),
            (FamilyId::CgdP3, 11),
            (FamilyId::CgdP4, 2),
            (FamilyId::CgdP4, 3),
        ];
        for (id, p) in cases {
            let ng = family(id, Some(p), FamilyParams::default()).unwrap();
            assert_eq!(ng.graph.regular_degree(), Some(5), "{}", ng.name());
            assert!(ng.graph.is_connected(), "{}", ng.name());
        }
        for id in [FamilyId::K6, FamilyId::FQ(4), FamilyId::Q(5)] {
            let ng = family(id, None, FamilyParams::default()).unwrap();
            assert_eq!(ng.graph.regular_degree(), Some(5));
            assert!(ng.graph.is_connected());
        }
    }

    #[test]
    fn cayley_validation() {
        let g = GdGroup::new(AbelianSpec::cyclic(5).unwrap());
        assert_eq!(cayley(&g, &[g.identity()]), Err(Error::IdentityInS));
        let a = g.element(&[1], false).unwrap();
        assert_eq!(cayley(&g, &[a]), Err(Error::NotSymmetricSet));
        let empty = cayley(&g, &[]).unwrap();
        assert_eq!(empty.regular_degree(), Some(0));
        assert!(!empty.is_connected());
    }

    #[test]
    fn set_stabilizer_orders() {
        let cases = [
            (FamilyId::CgdP4, 2, 120),
            (FamilyId::CgdP4, 3, 120),
            (FamilyId::Cgd1P2, 5, 20),
            (FamilyId::Cgd1P2, 11, 5),
            (FamilyId::Cgd2P2, 11, 10),
            (FamilyId::CgdP3, 5, 120),
            (FamilyId::CgdP3, 11, 5),
            (FamilyId::CdP, 31, 5),
        ];
        for (id, p, order) in cases {
            let ng = family(id, Some(p), FamilyParams::default()).unwrap();
            let stab = set_stabilizer(&ng).unwrap();
            assert_eq!(stab.order(), order, "{}", ng.name());
            let group = ng.group.as_ref().unwrap();
            let s = ng.connection_set.as_ref().unwrap().elements();
            for aut in &stab.auts {
                assert!(aut.is_group_automorphism(group));
                let mut img: Vec<GdElement> = s.iter().map(|x| aut.apply(group, x)).collect();
                img.sort();
                let mut orig = s.to_vec();
                orig.sort();
                assert_eq!(img, orig);
                assert!(ng.graph.is_automorphism(&aut.vertex_perm(group)));
            }
            // Some element permutes S in a 5-cycle.
            assert!(stab.perms.iter().any(|pi| {
                let mut x = 0;
                (0..5).all(|k| {
                    x = pi[x];
                    (x == 0) == (k == 4)
                })
            }));
        }
    }

    #[test]
    fn normalizer_orders() {
        let cases = [
            (FamilyId::CgdP4, 3, 19440),
            (FamilyId::Cgd2P2, 11, 2420),
            (FamilyId::CdP, 31, 310),
        ];
        for (id, p, order) in cases {
            let ng = family(id, Some(p), FamilyParams::default()).unwrap();
            let n = normalizer_group(&ng).unwrap();
            assert_eq!(n.order(), order);
            for g in n.generators() {
                assert!(ng.graph.is_automorphism(g));
            }
        }
    }
}
