//! Generalized dihedral groups `GD_H = H ⋊ Z_2` over an abelian `H`, with the
//! involution inverting every element of `H`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, AbVector, AbelianSpec, FpMatrix};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::permgrp::PermGroup;

/// Largest group whose elements are listed explicitly.
pub const MAX_ELEMENTS: usize = 1_000_000;

/// An element `(v, ε)` of `GD_H`: the vector part `v ∈ H` and the flip bit `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GdElement {
    pub h: AbVector,
    pub flip: bool,
}

impl GdElement {
    pub fn new(h: AbVector, flip: bool) -> Self {
        Self { h, flip }
    }
}

/// The group `GD_H`, determined by the abelian group `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GdGroup {
    spec: AbelianSpec,
}

impl GdGroup {
    pub fn new(spec: AbelianSpec) -> Self {
        Self { spec }
    }

    pub fn h(&self) -> &AbelianSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        2 * self.spec.order() as usize
    }

    pub fn identity(&self) -> GdElement {
        GdElement::new(self.spec.zero(), false)
    }

    /// `(v, flip)` from integer components, reduced.
    pub fn element(&self, comps: &[i64], flip: bool) -> Result<GdElement> {
        Ok(GdElement::new(self.spec.vector(comps)?, flip))
    }

    pub fn contains(&self, x: &GdElement) -> bool {
        self.spec.contains(&x.h)
    }

    fn check(&self, x: &GdElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// `(v, ε)·(w, δ) = (v + (−1)^ε w, ε ⊕ δ)`.
    pub fn compose(&self, x: &GdElement, y: &GdElement) -> Result<GdElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &GdElement, y: &GdElement) -> GdElement {
        let h = if x.flip {
            self.spec.sub(&x.h, &y.h)
        } else {
            self.spec.add(&x.h, &y.h)
        };
        GdElement::new(h, x.flip ^ y.flip)
    }

    pub fn inverse(&self, x: &GdElement) -> Result<GdElement> {
        self.check(x)?;
        Ok(self.inv(x))
    }

    pub(crate) fn inv(&self, x: &GdElement) -> GdElement {
        if x.flip {
            x.clone()
        } else {
            GdElement::new(self.spec.neg(&x.h), false)
        }
    }

    /// Position in [`GdGroup::elements`]: flip-0 block first, each block in
    /// mixed-radix order of the vector part.
    pub fn index_of(&self, x: &GdElement) -> usize {
        usize::from(x.flip) * self.spec.order() as usize + self.spec.index_of(&x.h)
    }

    pub fn element_at(&self, i: usize) -> GdElement {
        let n = self.spec.order() as usize;
        GdElement::new(self.spec.vector_at(i % n), i >= n)
    }

    pub fn elements(&self) -> Result<Vec<GdElement>> {
        self.check_size()?;
        Ok((0..self.order()).map(|i| self.element_at(i)).collect())
    }

    pub(crate) fn check_size(&self) -> Result<()> {
        if self.order() > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "generalized dihedral group",
                size: self.order(),
                limit: MAX_ELEMENTS,
            });
        }
        Ok(())
    }

    /// Generators: the unit vectors of `H` and the flip `(0, 1)`.
    pub fn generators(&self) -> Vec<GdElement> {
        let mut gens: Vec<GdElement> = (0..self.spec.rank())
            .map(|i| GdElement::new(self.spec.basis(i), false))
            .collect();
        gens.push(GdElement::new(self.spec.zero(), true));
        gens
    }

    /// The permutation `g ↦ g·x` of the element indices.
    pub fn right_mult(&self, x: &GdElement) -> Perm {
        let images = (0..self.order())
            .map(|i| self.index_of(&self.mul(&self.element_at(i), x)) as u32)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Right regular representation on the element indices.
    ///
    /// Right multiplications commute with the left multiplications that
    /// define Cayley-graph edges, so these are automorphisms of every Cayley
    /// graph built by [`crate::constructions::cayley`].
    pub fn right_regular(&self) -> Result<PermGroup> {
        self.check_size()?;
        let gens = self.generators().iter().map(|x| self.right_mult(x)).collect();
        PermGroup::with_known_order(self.order(), gens, self.order() as u128)
    }

    /// Whether `elems` generates the whole group.
    pub fn generates(&self, elems: &[GdElement]) -> bool {
        let mut seen = HashSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for s in elems {
                let y = self.mul(&x, s);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.len() == self.order()
    }
}

/// Five distinct involutions `(v, 1)` forming a Cayley connection set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSet(Vec<GdElement>);

impl ConnectionSet {
    pub fn new(group: &GdGroup, elems: Vec<GdElement>) -> Result<Self> {
        for x in &elems {
            group.check(x)?;
            if !x.flip {
                // Flip-0 elements are involutions only when 2v = 0; the
                // families here never use them.
                return Err(Error::UnsupportedParameter(
                    "connection set elements must have flip bit 1".into(),
                ));
            }
        }
        let distinct: HashSet<&GdElement> = elems.iter().collect();
        if distinct.len() != elems.len() {
            return Err(Error::UnsupportedParameter(
                "connection set elements must be distinct".into(),
            ));
        }
        Ok(Self(elems))
    }

    pub fn elements(&self) -> &[GdElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The vector parts `s_i` of the elements `(s_i, 1)`.
    pub fn vectors(&self) -> Vec<AbVector> {
        self.0.iter().map(|x| x.h.clone()).collect()
    }
}

/// Automorphism of `H` used in affine automorphisms of `GD_H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinearPart {
    /// `H = Z_p^n`.
    Matrix(FpMatrix),
    /// `H = Z_m` cyclic; multiplication by a unit.
    Unit { k: u64, m: u64 },
}

impl LinearPart {
    pub fn apply(&self, v: &[u64]) -> AbVector {
        match self {
            LinearPart::Matrix(mat) => mat.mul_vec(v),
            LinearPart::Unit { k, m } => vec![algebra::mul_mod(*k, v[0], *m)],
        }
    }
}

/// The automorphism `(v, 0) ↦ (Mv, 0)`, `(v, 1) ↦ (Mv + t, 1)` of `GD_H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineAut {
    pub linear: LinearPart,
    pub t: AbVector,
}

impl AffineAut {
    pub fn apply(&self, group: &GdGroup, x: &GdElement) -> GdElement {
        let mv = self.linear.apply(&x.h);
        if x.flip {
            GdElement::new(group.h().add(&mv, &self.t), true)
        } else {
            GdElement::new(mv, false)
        }
    }

    /// Action on element indices.
    pub fn vertex_perm(&self, group: &GdGroup) -> Perm {
        let images = (0..group.order())
            .map(|i| group.index_of(&self.apply(group, &group.element_at(i))) as u32)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Whether the map is a bijective homomorphism: multiplicative on all
    /// pairs of generators, with an invertible linear part.
    pub fn is_group_automorphism(&self, group: &GdGroup) -> bool {
        let gens = group.generators();
        let hom = gens.iter().all(|x| {
            gens.iter().all(|y| {
                self.apply(group, &group.mul(x, y))
                    == group.mul(&self.apply(group, x), &self.apply(group, y))
            })
        });
        let bijective = match &self.linear {
            LinearPart::Matrix(m) => m.is_invertible(),
            LinearPart::Unit { k, m } => algebra::gcd(*k, *m) == 1,
        };
        // Any affine map with a bijective linear part is a homomorphism; the
        // pairwise check guards against a malformed linear part.
        hom && bijective
    }
}

/// `Aut(G, S)`: automorphisms of `GD_H` fixing `S` setwise, each with the
/// permutation it induces on `S`.
#[derive(Debug, Clone)]
pub struct SetStabilizer {
    pub auts: Vec<AffineAut>,
    /// `perms[k][i] = j` when the k-th automorphism sends `S[i]` to `S[j]`.
    pub perms: Vec<Vec<usize>>,
}

impl SetStabilizer {
    pub fn order(&self) -> usize {
        self.auts.len()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Compute `Aut(G, S)` by trying every permutation `π` of `S` and solving for
/// the linear part on the differences `s_i − s_0`.
pub fn aut_fixing_s(group: &GdGroup, s: &ConnectionSet) -> Result<SetStabilizer> {
    if !group.generates(s.elements()) {
        return Err(Error::NotGenerating);
    }
    let spec = group.h();
    let vs = s.vectors();
    let k = vs.len();
    let diffs: Vec<AbVector> = (1..k).map(|i| spec.sub(&vs[i], &vs[0])).collect();
    let mut auts = Vec::new();
    let mut perms = Vec::new();
    for pi in permutations(k) {
        let targets: Vec<AbVector> = (1..k).map(|i| spec.sub(&vs[pi[i]], &vs[pi[0]])).collect();
        let linear = if let Some(p) = spec.elementary_prime() {
            match algebra::solve_extension(p, &diffs, &targets)? {
                Some(m) => LinearPart::Matrix(m),
                None => continue,
            }
        } else if spec.rank() == 1 {
            let m = spec.moduli()[0];
            let unit = (1..m).find(|&u| {
                algebra::gcd(u, m) == 1
                    && diffs
                        .iter()
                        .zip(&targets)
                        .all(|(d, t)| algebra::mul_mod(u, d[0], m) == t[0])
            });
            match unit {
                Some(u) => LinearPart::Unit { k: u, m },
                None => continue,
            }
        } else {
            return Err(Error::Unsupported(format!(
                "Aut(G, S) for H with moduli {:?}",
                spec.moduli()
            )));
        };
        let t = spec.sub(&vs[pi[0]], &linear.apply(&vs[0]));
        let aut = AffineAut { linear, t };
        let maps_s = (0..k).all(|i| aut.apply(group, &s.elements()[i]) == s.elements()[pi[i]]);
        if maps_s && aut.is_group_automorphism(group) {
            auts.push(aut);
            perms.push(pi);
        }
    }
    Ok(SetStabilizer { auts, perms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd(moduli: Vec<u64>) -> GdGroup {
        GdGroup::new(AbelianSpec::new(moduli).unwrap())
    }

    #[test]
    fn dihedral_relations() {
        let g = gd(vec![5, 5]);
        let a = g.element(&[1, 0], false).unwrap();
        let d = g.element(&[0, 1], false).unwrap();
        let h = g.element(&[0, 0], true).unwrap();
        let hah = g.mul(&g.mul(&h, &a), &h);
        assert_eq!(hah, g.inv(&a));
        assert_eq!(g.mul(&a, &d), g.mul(&d, &a));
        let v = g.element(&[3, 4], true).unwrap();
        assert_eq!(g.mul(&v, &v), g.identity());
    }

    #[test]
    fn compose_checks_membership() {
        let g = gd(vec![5]);
        let bad = GdElement::new(vec![7], false);
        assert_eq!(g.compose(&g.identity(), &bad), Err(Error::SpecMismatch));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for moduli in [vec![5], vec![3, 3], vec![2, 2, 2], vec![9], vec![4, 6]] {
            let g = gd(moduli);
            let els = g.elements().unwrap();
            assert!(els.len() <= 200);
            for x in &els {
                assert_eq!(g.mul(x, &g.inv(x)), g.identity());
                assert_eq!(g.mul(&g.inv(x), x), g.identity());
                for y in &els {
                    for z in &els {
                        assert_eq!(g.mul(&g.mul(x, y), z), g.mul(x, &g.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn element_listing() {
        let g = gd(vec![5]);
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 10);
        assert_eq!(els[0], g.identity());
        assert_eq!(gd(vec![2; 4]).elements().unwrap().len(), 32);
        assert_eq!(gd(vec![11, 11]).elements().unwrap().len(), 242);
        for (i, x) in els.iter().enumerate() {
            assert_eq!(g.index_of(x), i);
        }
    }

    #[test]
    fn right_regular_is_regular() {
        let g = gd(vec![5, 5]);
        let r = g.right_regular().unwrap();
        assert_eq!(r.order(), 50);
        assert!(r.is_transitive());
        assert!(r.is_semiregular());
        let r11 = gd(vec![11, 11]).right_regular().unwrap();
        assert_eq!(r11.order(), 242);
    }

    #[test]
    fn permutation_listing() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        assert_eq!(ps[0], vec![0, 1, 2, 3]);
        assert_eq!(ps[23], vec![3, 2, 1, 0]);
    }

    #[test]
    fn set_stabilizer_rejects_non_generating_sets() {
        let g = gd(vec![5, 5]);
        let s = ConnectionSet::new(
            &g,
            (0..5).map(|i| GdElement::new(vec![i, 0], true)).collect(),
        )
        .unwrap();
        assert_eq!(aut_fixing_s(&g, &s).unwrap_err(), Error::NotGenerating);
    }
}
