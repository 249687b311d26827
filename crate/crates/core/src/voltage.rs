//! Elementary abelian regular covers of the dipole with five parallel edges.
//!
//! The dipole has vertices `u`, `v` and arcs `a_1 … a_5` from `u` to `v`
//! (indexed `0..5` here). Voltages are written additively in `F_p^n`; arc
//! `a_1` carries the zero voltage, so the four fundamental cycles
//! `W_i = a_{i+1} a_1^{-1}` carry the voltages of arcs `1..5`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, FpMatrix, FpVector};
use crate::constructions::{self, FamilyId, FamilyParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;

/// Voltage assignment on the dipole's five arcs, with `zeta[0] = 0` and the
/// remaining voltages spanning `F_p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawVoltage", into = "RawVoltage")]
pub struct Dip5Voltage {
    p: u64,
    n: usize,
    zeta: [FpVector; 5],
}

#[derive(Serialize, Deserialize)]
struct RawVoltage {
    p: u64,
    n: usize,
    zeta: Vec<Vec<u64>>,
}

impl TryFrom<RawVoltage> for Dip5Voltage {
    type Error = Error;

    fn try_from(raw: RawVoltage) -> Result<Self> {
        Dip5Voltage::new(raw.p, raw.n, raw.zeta)
    }
}

impl From<Dip5Voltage> for RawVoltage {
    fn from(z: Dip5Voltage) -> Self {
        RawVoltage {
            p: z.p,
            n: z.n,
            zeta: z.zeta.to_vec(),
        }
    }
}

impl Dip5Voltage {
    pub fn new(p: u64, n: usize, zeta: Vec<Vec<u64>>) -> Result<Self> {
        if !algebra::is_prime(p) {
            return Err(Error::UnsupportedParameter(format!("{p} is not prime")));
        }
        if !(1..=4).contains(&n) {
            return Err(Error::UnsupportedParameter(format!(
                "voltage rank must be 1..=4, got {n}"
            )));
        }
        let zeta: [FpVector; 5] = zeta.try_into().map_err(|z: Vec<Vec<u64>>| {
            Error::UnsupportedParameter(format!("expected 5 arc voltages, got {}", z.len()))
        })?;
        if zeta.iter().any(|v| v.len() != n || v.iter().any(|&x| x >= p)) {
            return Err(Error::UnsupportedParameter(format!(
                "voltages must be reduced vectors of length {n} over F_{p}"
            )));
        }
        if zeta[0].iter().any(|&x| x != 0) {
            return Err(Error::UnsupportedParameter(
                "the first arc must carry the zero voltage".into(),
            ));
        }
        if algebra::rank(p, &zeta[1..]) < n {
            return Err(Error::NotSpanning);
        }
        Ok(Self { p, n, zeta })
    }

    /// From the four fundamental-cycle voltages.
    pub fn from_fundamental(p: u64, n: usize, w: Vec<FpVector>) -> Result<Self> {
        let mut zeta = vec![vec![0; n]];
        zeta.extend(w);
        Self::new(p, n, zeta)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeta(&self) -> &[FpVector; 5] {
        &self.zeta
    }

    /// Voltages on the four fundamental cycles.
    pub fn fundamental_voltages(&self) -> [FpVector; 4] {
        [
            self.zeta[1].clone(),
            self.zeta[2].clone(),
            self.zeta[3].clone(),
            self.zeta[4].clone(),
        ]
    }

    /// Size of one fibre, `p^n`.
    pub fn fibre_size(&self) -> usize {
        (self.p as usize).pow(self.n as u32)
    }

    fn has_repeated_voltages(&self) -> bool {
        (0..5).any(|i| (i + 1..5).any(|j| self.zeta[i] == self.zeta[j]))
    }

    fn vector_index(&self, x: &[u64]) -> usize {
        x.iter().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }

    fn vector_at(&self, mut i: usize) -> FpVector {
        let mut v = vec![0; self.n];
        for slot in v.iter_mut().rev() {
            *slot = (i % self.p as usize) as u64;
            i /= self.p as usize;
        }
        v
    }

    /// Vertex index of `(side, x)`: side 0 is `u`, side 1 is `v`.
    pub fn vertex(&self, side: usize, x: &[u64]) -> usize {
        side * self.fibre_size() + self.vector_index(x)
    }

    /// `(side, x)` of a vertex index.
    pub fn label(&self, vertex: usize) -> (usize, FpVector) {
        let f = self.fibre_size();
        (vertex / f, self.vector_at(vertex % f))
    }

    fn add(&self, a: &[u64], b: &[u64]) -> FpVector {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> FpVector {
        a.iter().zip(b).map(|(&x, &y)| (x + self.p - y) % self.p).collect()
    }
}

impl fmt::Display for Dip5Voltage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .zeta
            .iter()
            .map(|v| {
                let c: Vec<String> = v.iter().map(u64::to_string).collect();
                format!("({})", c.join(","))
            })
            .collect();
        write!(f, "F_{}^{}: [{}]", self.p, self.n, parts.join(" "))
    }
}

/// Automorphism of the dipole: an arc permutation and whether `u`, `v` are swapped.
///
/// Acts on the right: `(π₁, ε₁)(π₂, ε₂) = (π₁π₂, ε₁ ⊕ ε₂)` applies `π₁` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DipAut {
    /// `pi[i]` is the image of arc `i`.
    pub pi: [u8; 5],
    pub swap: bool,
}

impl DipAut {
    pub const IDENTITY: DipAut = DipAut {
        pi: [0, 1, 2, 3, 4],
        swap: false,
    };

    /// The 5-cycle `(a_1 a_2 a_3 a_4 a_5)`.
    pub const ALPHA: DipAut = DipAut {
        pi: [1, 2, 3, 4, 0],
        swap: false,
    };
    /// `(a_1 a_2 a_4 a_3)`.
    pub const BETA: DipAut = DipAut {
        pi: [1, 3, 0, 2, 4],
        swap: false,
    };
    /// Swap the two vertices, fixing every edge.
    pub const GAMMA: DipAut = DipAut {
        pi: [0, 1, 2, 3, 4],
        swap: true,
    };
    /// `(a_1 a_2 a_3)`.
    pub const DELTA: DipAut = DipAut {
        pi: [1, 2, 0, 3, 4],
        swap: false,
    };
    /// `(a_1 a_2 a_5 a_4)`.
    pub const EPSILON: DipAut = DipAut {
        pi: [1, 4, 2, 0, 3],
        swap: false,
    };

    pub fn new(pi: [u8; 5], swap: bool) -> Result<Self> {
        let mut seen = [false; 5];
        for &x in &pi {
            if x >= 5 || seen[x as usize] {
                return Err(Error::InvalidPermutation);
            }
            seen[x as usize] = true;
        }
        Ok(Self { pi, swap })
    }

    /// All 240 automorphisms, ordered by `(swap, π)` lexicographically.
    pub fn all() -> Vec<DipAut> {
        let perms = crate::gdgroup::permutations(5);
        [false, true]
            .into_iter()
            .flat_map(|swap| {
                perms.iter().map(move |p| DipAut {
                    pi: [p[0] as u8, p[1] as u8, p[2] as u8, p[3] as u8, p[4] as u8],
                    swap,
                })
            })
            .collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &DipAut) -> DipAut {
        let mut pi = [0u8; 5];
        for (i, slot) in pi.iter_mut().enumerate() {
            *slot = other.pi[self.pi[i] as usize];
        }
        DipAut {
            pi,
            swap: self.swap ^ other.swap,
        }
    }

    pub fn inverse(&self) -> DipAut {
        let mut pi = [0u8; 5];
        for (i, &x) in self.pi.iter().enumerate() {
            pi[x as usize] = i as u8;
        }
        DipAut {
            pi,
            swap: self.swap,
        }
    }

    fn image(&self, i: usize) -> usize {
        self.pi[i] as usize
    }

    /// Image of an arc `(edge, forward)`; `forward` means from `u` to `v`.
    pub fn map_arc(&self, edge: usize, forward: bool) -> (usize, bool) {
        (self.image(edge), forward ^ self.swap)
    }
}

/// Source and target voltages of the four fundamental cycles under `s`:
/// `source_i = ζ(W_i)` and `target_i = ζ(W_i^s)`.
pub fn induced_pairs(z: &Dip5Voltage, s: &DipAut) -> [(FpVector, FpVector); 4] {
    let zeta = &z.zeta;
    let head = &zeta[s.image(0)];
    std::array::from_fn(|k| {
        let i = k + 1;
        let img = &zeta[s.image(i)];
        let target = if s.swap {
            z.sub(head, img)
        } else {
            z.sub(img, head)
        };
        (zeta[i].clone(), target)
    })
}

/// The voltage `W ↦ ζ(W^s)`, whose derived graph is isomorphic to that of `ζ`.
pub fn pullback(z: &Dip5Voltage, s: &DipAut) -> Dip5Voltage {
    let targets: Vec<FpVector> = induced_pairs(z, s).into_iter().map(|(_, t)| t).collect();
    Dip5Voltage::from_fundamental(z.p, z.n, targets).expect("automorphisms preserve spanning")
}

/// Linear map extending `ζ(W_i) ↦ ζ(W_i^s)`, if one exists; then `s` lifts.
pub fn lifts(z: &Dip5Voltage, s: &DipAut) -> Option<FpMatrix> {
    let (src, tgt): (Vec<_>, Vec<_>) = induced_pairs(z, s).into_iter().unzip();
    algebra::solve_extension(z.p, &src, &tgt).expect("voltages span by construction")
}

/// The derived graph on `{u, v} × F_p^n` with `(u, x) ~ (v, x + ζ(a_i))`.
pub fn derived(z: &Dip5Voltage) -> Result<Graph> {
    if z.has_repeated_voltages() {
        return Err(Error::ParallelEdges);
    }
    let f = z.fibre_size();
    let mut edges = Vec::with_capacity(5 * f);
    for i in 0..f {
        let x = z.vector_at(i);
        for v in &z.zeta {
            edges.push((i, f + z.vector_index(&z.add(&x, v))));
        }
    }
    Graph::build(2 * f, edges)
}

/// Vertex map from the derived graph of `from` to that of `to`, covering `s`
/// with linear part `m`. Requires `m·ζ_from(W_i) = ζ_to(W_i^s)`.
pub fn cover_map(from: &Dip5Voltage, to: &Dip5Voltage, s: &DipAut, m: &FpMatrix) -> Result<Perm> {
    if from.p != to.p || from.n != to.n || m.dim() != from.n || m.p() != from.p {
        return Err(Error::NotALift);
    }
    let pairs = induced_pairs(to, s);
    let ok = from
        .fundamental_voltages()
        .iter()
        .zip(&pairs)
        .all(|(src, (_, tgt))| m.mul_vec(src) == *tgt)
        && m.is_invertible();
    if !ok {
        return Err(Error::NotALift);
    }
    let f = from.fibre_size();
    let shift = &to.zeta[s.image(0)];
    let mut images = vec![0u32; 2 * f];
    for i in 0..f {
        let x = from.vector_at(i);
        let mx = m.mul_vec(&x);
        let shifted = to.vector_index(&to.add(&mx, shift));
        let plain = to.vector_index(&mx);
        if s.swap {
            images[i] = (f + shifted) as u32;
            images[f + i] = plain as u32;
        } else {
            images[i] = plain as u32;
            images[f + i] = (f + shifted) as u32;
        }
    }
    Perm::from_images(images)
}

/// Automorphism of the derived graph projecting to `s`.
pub fn lift_to_cover(z: &Dip5Voltage, s: &DipAut, m: &FpMatrix) -> Result<Perm> {
    cover_map(z, z, s, m)
}

/// Translation `(side, x) ↦ (side, x + t)` by a covering transformation.
pub fn covering_translation(z: &Dip5Voltage, t: &[u64]) -> Perm {
    let f = z.fibre_size();
    let images = (0..2 * f)
        .map(|i| {
            let (side, x) = z.label(i);
            z.vertex(side, &z.add(&x, t)) as u32
        })
        .collect();
    Perm::from_images_unchecked(images)
}

/// The subgroup of dipole automorphisms that lift.
#[derive(Debug, Clone)]
pub struct LiftingGroup {
    pub elements: Vec<(DipAut, FpMatrix)>,
    pub arc_transitive: bool,
}

impl LiftingGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Order of the part fixing `u` and `v`.
    pub fn vertex_fixing_order(&self) -> usize {
        self.elements.iter().filter(|(s, _)| !s.swap).count()
    }

    pub fn contains(&self, s: &DipAut) -> bool {
        self.elements.iter().any(|(t, _)| t == s)
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|(a, _)| {
            self.contains(&a.inverse()) && self.elements.iter().all(|(b, _)| self.contains(&a.then(b)))
        })
    }
}

/// Whether the given dipole automorphisms act transitively on the ten arcs.
pub fn transitive_on_arcs<'a>(auts: impl IntoIterator<Item = &'a DipAut>) -> bool {
    let auts: Vec<&DipAut> = auts.into_iter().collect();
    let mut seen = [[false; 2]; 5];
    seen[0][1] = true;
    let mut stack = vec![(0usize, true)];
    let mut count = 1;
    while let Some((e, fwd)) = stack.pop() {
        for s in &auts {
            let (e2, f2) = s.map_arc(e, fwd);
            if !seen[e2][usize::from(f2)] {
                seen[e2][usize::from(f2)] = true;
                count += 1;
                stack.push((e2, f2));
            }
        }
    }
    count == 10
}

pub fn lifting_group(z: &Dip5Voltage) -> LiftingGroup {
    let elements: Vec<(DipAut, FpMatrix)> = DipAut::all()
        .into_iter()
        .filter_map(|s| lifts(z, &s).map(|m| (s, m)))
        .collect();
    let arc_transitive = transitive_on_arcs(elements.iter().map(|(s, _)| s));
    LiftingGroup {
        elements,
        arc_transitive,
    }
}

/// Isomorphism of covers projecting to the given `δ`, if one exists.
pub fn cover_isomorphism_via(z1: &Dip5Voltage, z2: &Dip5Voltage, delta: &DipAut) -> Option<FpMatrix> {
    if z1.p != z2.p || z1.n != z2.n {
        return None;
    }
    let src: Vec<FpVector> = z1.fundamental_voltages().to_vec();
    let tgt: Vec<FpVector> = induced_pairs(z2, delta).into_iter().map(|(_, t)| t).collect();
    algebra::solve_extension(z1.p, &src, &tgt).expect("voltages span by construction")
}

/// First `(δ, η)` in `(swap, π)` order with `η·ζ_1(W_i) = ζ_2(W_i^δ)` for all `i`.
pub fn covers_isomorphic(z1: &Dip5Voltage, z2: &Dip5Voltage) -> Option<(DipAut, FpMatrix)> {
    DipAut::all()
        .into_iter()
        .find_map(|d| cover_isomorphism_via(z1, z2, &d).map(|m| (d, m)))
}

/// Apply the unique linear map sending the first independent fundamental
/// voltages (in arc order) to the standard basis.
pub fn gl_canonical(z: &Dip5Voltage) -> Dip5Voltage {
    let w = z.fundamental_voltages();
    let pivots = algebra::greedy_independent(z.p, &w);
    let basis: Vec<FpVector> = pivots.iter().map(|&i| w[i].clone()).collect();
    let b_inv = FpMatrix::from_columns(z.p, &basis)
        .inverse()
        .expect("independent columns");
    let mapped: Vec<FpVector> = w.iter().map(|v| b_inv.mul_vec(v)).collect();
    Dip5Voltage::from_fundamental(z.p, z.n, mapped).expect("still spanning")
}

/// Canonical representative of the isomorphism class of covers: the least
/// GL-canonical form over all pullbacks by dipole automorphisms.
pub fn canonical_representative(z: &Dip5Voltage) -> Dip5Voltage {
    DipAut::all()
        .iter()
        .map(|d| gl_canonical(&pullback(z, d)))
        .min()
        .expect("nonempty")
}

/// Canonical voltage of a dipole-cover family at prime `p`.
pub fn family_voltage(id: FamilyId, p: u64, params: FamilyParams) -> Result<Dip5Voltage> {
    if !id.is_dipole_cover() {
        return Err(Error::UnsupportedParameter(format!(
            "{id} is not an elementary abelian cover of the dipole"
        )));
    }
    let (spec, vectors, _) = constructions::connection_vectors(id, p, params)?;
    let n = spec.rank();
    let zeta = vectors
        .iter()
        .map(|v| spec.vector(v))
        .collect::<Result<Vec<_>>>()?;
    Dip5Voltage::new(p, n, zeta)
}

/// One isomorphism class of connected arc-transitive covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverClass {
    pub representative: Dip5Voltage,
    pub lifting_group_order: usize,
    pub arc_transitive: bool,
    pub matched_family: Option<FamilyId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Brute,
    Analytic,
}

/// Largest prime accepted by the brute-force classification for each rank.
pub fn brute_prime_limit(n: usize) -> u64 {
    match n {
        2 => 50,
        3 => 23,
        _ => u64::MAX,
    }
}

/// Classify connected arc-transitive `Z_p^n`-covers of the dipole up to isomorphism.
pub fn classify(p: u64, n: usize, strategy: Strategy) -> Result<Vec<CoverClass>> {
    if !algebra::is_prime(p) {
        return Err(Error::UnsupportedParameter(format!("{p} is not prime")));
    }
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedParameter(format!(
            "cover rank must be 2..=4, got {n}"
        )));
    }
    let candidates = match strategy {
        Strategy::Brute => {
            let limit = brute_prime_limit(n);
            if p > limit {
                return Err(Error::BudgetExceeded {
                    what: "brute-force cover enumeration (prime)",
                    needed: p as u128,
                    budget: limit as u128,
                });
            }
            brute_candidates(p, n)
        }
        Strategy::Analytic => analytic_candidates(p, n),
    };
    let mut reps: Vec<Dip5Voltage> = Vec::new();
    for z in candidates {
        if reps.iter().any(|r| covers_isomorphic(r, &z).is_some()) {
            continue;
        }
        reps.push(z);
    }
    let mut classes: Vec<CoverClass> = reps
        .into_iter()
        .filter_map(|z| {
            let lg = lifting_group(&z);
            lg.arc_transitive.then(|| CoverClass {
                representative: canonical_representative(&z),
                lifting_group_order: lg.order(),
                arc_transitive: true,
                matched_family: matched_family(&z),
            })
        })
        .collect();
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

fn matched_family(z: &Dip5Voltage) -> Option<FamilyId> {
    [FamilyId::Cgd1P2, FamilyId::Cgd2P2, FamilyId::CgdP3, FamilyId::CgdP4]
        .into_iter()
        .find(|&id| {
            family_voltage(id, z.p, FamilyParams::default())
                .ok()
                .filter(|f| f.n == z.n)
                .is_some_and(|f| covers_isomorphic(&f, z).is_some())
        })
}

/// Generators of the six Sylow 5-subgroups of `Sym(5)`.
fn five_cycle_representatives() -> Vec<DipAut> {
    let mut reps: Vec<DipAut> = Vec::new();
    let mut covered: Vec<[u8; 5]> = Vec::new();
    for s in DipAut::all().into_iter().filter(|s| !s.swap) {
        let mut x = 0usize;
        let is_five_cycle = (0..5).all(|k| {
            x = s.image(x);
            (x == 0) == (k == 4)
        });
        if !is_five_cycle || covered.contains(&s.pi) {
            continue;
        }
        let mut pw = s;
        for _ in 0..4 {
            covered.push(pw.pi);
            pw = pw.then(&s);
        }
        reps.push(s);
    }
    reps
}

/// Cheap lifting test for a GL-canonical voltage whose pivot voltages are the
/// standard basis: the extension is forced column by column.
fn lifts_canonical(z: &Dip5Voltage, pivots: &[usize], s: &DipAut) -> bool {
    let pairs = induced_pairs(z, s);
    let cols: Vec<FpVector> = pivots.iter().map(|&i| pairs[i].1.clone()).collect();
    let m = FpMatrix::from_columns(z.p, &cols);
    pairs.iter().all(|(src, tgt)| m.mul_vec(src) == *tgt) && m.is_invertible()
}

/// Every GL-canonical simple voltage admitting a lift of some 5-cycle.
fn brute_candidates(p: u64, n: usize) -> Vec<Dip5Voltage> {
    let sylow = five_cycle_representatives();
    let mut out = Vec::new();
    for mask in 0u32..16 {
        if mask.count_ones() as usize != n {
            continue;
        }
        let pivots: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        // Free positions: vectors supported on the pivots seen so far.
        let free: Vec<(usize, usize)> = (0..4)
            .filter(|i| mask >> i & 1 == 0)
            .map(|i| (i, pivots.iter().filter(|&&q| q < i).count()))
            .collect();
        let total: u128 = free.iter().map(|&(_, k)| (p as u128).pow(k as u32)).product();
        for mut code in 0..total {
            let mut w = vec![vec![0u64; n]; 4];
            for (k, &q) in pivots.iter().enumerate() {
                w[q][k] = 1;
            }
            for &(i, k) in &free {
                for c in 0..k {
                    w[i][c] = (code % p as u128) as u64;
                    code /= p as u128;
                }
            }
            let Ok(z) = Dip5Voltage::from_fundamental(p, n, w) else {
                continue;
            };
            if z.has_repeated_voltages() {
                continue;
            }
            if sylow.iter().any(|s| lifts_canonical(&z, &pivots, s)) {
                out.push(z);
            }
        }
    }
    out
}

/// Voltages solving the parameter equations for each rank.
fn analytic_candidates(p: u64, n: usize) -> Vec<Dip5Voltage> {
    let r = |x: i64| algebra::reduce(x, p);
    let mut out = Vec::new();
    let mut push = |zeta: Vec<Vec<u64>>| {
        if let Ok(z) = Dip5Voltage::new(p, n, zeta) {
            if !z.has_repeated_voltages() {
                out.push(z);
            }
        }
    };
    match n {
        2 => {
            // Branch with ℓ = 1: i(i − 1) = 1, voltages (0, a, a^i d, a d^i, d).
            for i in 0..p {
                if algebra::mul_mod(i, (i + p - 1) % p, p) == 1 % p {
                    push(vec![vec![0, 0], vec![1, 0], vec![i, 1], vec![1, i], vec![0, 1]]);
                }
            }
            // Branch with ℓ of order 5: (0, a, a^{ℓ(ℓ+1)^{-1}} d^{ℓ^{-1}}, a^ℓ d^{(ℓ+1)^{-1}}, d).
            for l in algebra::elements_of_order(5, p) {
                let l1 = algebra::unit_inverse(l + 1, p).expect("ℓ ≠ −1");
                let li = algebra::unit_inverse(l, p).expect("unit");
                push(vec![
                    vec![0, 0],
                    vec![1, 0],
                    vec![algebra::mul_mod(l, l1, p), li],
                    vec![l, l1],
                    vec![0, 1],
                ]);
            }
        }
        3 => {
            // i + j² = 0, kj = 1, ij − i − j − k = −1; voltages (0, a, b, a^i b^j d^k, d).
            for j in 1..p as i64 {
                let i = -(j * j);
                let k = algebra::unit_inverse(j as u64, p).expect("nonzero") as i64;
                if r(i * j - i - j - k) == r(-1) {
                    push(vec![
                        vec![0, 0, 0],
                        vec![1, 0, 0],
                        vec![0, 1, 0],
                        vec![r(i), r(j), r(k)],
                        vec![0, 0, 1],
                    ]);
                }
            }
        }
        4 => {
            let mut zeta = vec![vec![0; 4]];
            for i in 0..4 {
                let mut e = vec![0; 4];
                e[i] = 1;
                zeta.push(e);
            }
            push(zeta);
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis_voltage(p: u64) -> Dip5Voltage {
        family_voltage(FamilyId::CgdP4, p, FamilyParams::default()).unwrap()
    }

    #[test]
    fn voltage_validation() {
        assert_eq!(
            Dip5Voltage::new(5, 2, vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0], vec![4, 0]]),
            Err(Error::NotSpanning)
        );
        assert!(Dip5Voltage::new(5, 2, vec![vec![1, 0]; 5]).is_err());
        assert!(Dip5Voltage::new(6, 1, vec![vec![0]; 5]).is_err());
    }

    #[test]
    fn fundamental_voltage_examples() {
        let z = Dip5Voltage::new(7, 1, vec![vec![0], vec![1], vec![1], vec![1], vec![1]]).unwrap();
        assert_eq!(z.fundamental_voltages(), [vec![1], vec![1], vec![1], vec![1]]);
        let cgd2 = family_voltage(FamilyId::Cgd2P2, 11, FamilyParams::default()).unwrap();
        assert_eq!(
            cgd2.fundamental_voltages(),
            [vec![1, 0], vec![8, 1], vec![1, 8], vec![0, 1]]
        );
        let cgd1 = family_voltage(FamilyId::Cgd1P2, 5, FamilyParams::default()).unwrap();
        assert_eq!(cgd1.zeta()[2], vec![3, 1]);
        assert_eq!(cgd1.zeta()[3], vec![1, 3]);
        assert_eq!(
            family_voltage(FamilyId::Cgd2P2, 7, FamilyParams::default()),
            Err(Error::NoSquareRootOf5(7))
        );
    }

    #[test]
    fn composition_law() {
        // β⁻¹ α β = α²
        let conj = DipAut::BETA.inverse().then(&DipAut::ALPHA).then(&DipAut::BETA);
        assert_eq!(conj, DipAut::ALPHA.then(&DipAut::ALPHA));
        assert_eq!(DipAut::all().len(), 240);
        assert_eq!(five_cycle_representatives().len(), 6);
    }

    #[test]
    fn pullback_is_an_action() {
        let z = basis_voltage(7);
        let all = DipAut::all();
        for s in all.iter().step_by(7) {
            for t in all.iter().step_by(11) {
                // ζ(W^{st}) = (ζ^t)(W^s)
                assert_eq!(pullback(&z, &s.then(t)), pullback(&pullback(&z, t), s));
            }
        }
    }

    #[test]
    fn gamma_lifts_with_minus_identity() {
        let z = family_voltage(FamilyId::Cgd2P2, 11, FamilyParams::default()).unwrap();
        let m = lifts(&z, &DipAut::GAMMA).unwrap();
        assert_eq!(m, FpMatrix::scalar(11, 2, 10));
        let lift = lift_to_cover(&z, &DipAut::GAMMA, &m).unwrap();
        // (u, x) -> (v, -x)
        let x = vec![3, 5];
        assert_eq!(lift.apply(z.vertex(0, &x)), z.vertex(1, &[8, 6]));
    }

    #[test]
    fn lifts_preserve_adjacency() {
        for z in [
            family_voltage(FamilyId::Cgd1P2, 11, FamilyParams::default()).unwrap(),
            family_voltage(FamilyId::Cgd2P2, 11, FamilyParams::default()).unwrap(),
            basis_voltage(3),
        ] {
            let g = derived(&z).unwrap();
            let lg = lifting_group(&z);
            assert!(lg.is_closed());
            for (s, m) in &lg.elements {
                let perm = lift_to_cover(&z, s, m).unwrap();
                assert!(g.is_automorphism(&perm));
            }
        }
    }

    #[test]
    fn lift_rejects_wrong_matrix() {
        let z = basis_voltage(3);
        let m = FpMatrix::identity(3, 4);
        assert_eq!(lift_to_cover(&z, &DipAut::ALPHA, &m), Err(Error::NotALift));
    }

    #[test]
    fn lifting_group_orders() {
        let cgd2 = family_voltage(FamilyId::Cgd2P2, 11, FamilyParams::default()).unwrap();
        assert_eq!(lifting_group(&cgd2).vertex_fixing_order(), 10);
        let cgd1 = family_voltage(FamilyId::Cgd1P2, 5, FamilyParams::default()).unwrap();
        assert_eq!(lifting_group(&cgd1).vertex_fixing_order(), 20);
        let lg = lifting_group(&basis_voltage(2));
        assert_eq!(lg.vertex_fixing_order(), 120);
        assert!(lg.arc_transitive);
        let cgd1_11 = family_voltage(FamilyId::Cgd1P2, 11, FamilyParams::default()).unwrap();
        assert!(lifts(&cgd1_11, &DipAut::ALPHA).is_some());
        let beta2 = DipAut::BETA.then(&DipAut::BETA);
        assert!(lifts(&cgd1_11, &beta2).is_none());
    }

    #[test]
    fn derived_graph_shape() {
        let z = basis_voltage(2);
        let g = derived(&z).unwrap();
        assert_eq!(g.vertex_count(), 32);
        assert_eq!(g.regular_degree(), Some(5));
        let (a, b) = g.bipartition().unwrap().unwrap();
        assert_eq!((a.len(), b.len()), (16, 16));
        let multi = Dip5Voltage::new(5, 1, vec![vec![0], vec![1], vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(derived(&multi), Err(Error::ParallelEdges));
    }

    #[test]
    fn voltage_json_roundtrip() {
        let z = family_voltage(FamilyId::Cgd2P2, 11, FamilyParams::default()).unwrap();
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"{"p":11,"n":2,"zeta":[[0,0],[1,0],[8,1],[1,8],[0,1]]}"#);
        let back: Dip5Voltage = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<Dip5Voltage>(r#"{"p":11,"n":2,"zeta":[[1,0]]}"#).is_err());
    }

    #[test]
    fn small_classifications_agree() {
        for (p, n, count) in [(5, 2, 1), (7, 2, 0), (11, 2, 2), (5, 3, 1), (2, 4, 1), (3, 4, 1)] {
            let brute = classify(p, n, Strategy::Brute).unwrap();
            let analytic = classify(p, n, Strategy::Analytic).unwrap();
            assert_eq!(brute.len(), count, "p = {p}, n = {n}");
            assert_eq!(brute, analytic, "p = {p}, n = {n}");
        }
    }
    /// Coefficients over the basis `(a, b, c, d)` of the fundamental voltages.
    fn symbolic(z: &Dip5Voltage, s: &DipAut) -> Vec<Vec<i64>> {
        let p = z.p() as i64;
        induced_pairs(z, s)
            .into_iter()
            .map(|(_, t)| t.iter().map(|&x| if x as i64 > p / 2 { x as i64 - p } else { x as i64 }).collect())
            .collect()
    }

    #[test]
    fn fundamental_cycle_images() {
        let z = basis_voltage(7);
        let beta2 = DipAut::BETA.then(&DipAut::BETA);
        let table: [(DipAut, [[i64; 4]; 4]); 6] = [
            (DipAut::ALPHA, [[-1, 1, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1], [-1, 0, 0, 0]]),
            (DipAut::BETA, [[-1, 0, 1, 0], [-1, 0, 0, 0], [-1, 1, 0, 0], [-1, 0, 0, 1]]),
            (beta2, [[0, 1, -1, 0], [1, 0, -1, 0], [0, 0, -1, 0], [0, 0, -1, 1]]),
            (DipAut::GAMMA, [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
            (DipAut::DELTA, [[-1, 1, 0, 0], [-1, 0, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1]]),
            (DipAut::EPSILON, [[-1, 0, 0, 1], [-1, 1, 0, 0], [-1, 0, 0, 0], [-1, 0, 1, 0]]),
        ];
        let mut cells = 0;
        for (s, row) in table {
            let got = symbolic(&z, &s);
            for (g, want) in got.iter().zip(row) {
                assert_eq!(g.as_slice(), want.as_slice(), "{s:?}");
                cells += 1;
            }
        }
        assert_eq!(cells, 24);
    }

    fn as_map(p: &Perm) -> Vec<usize> {
        (0..p.degree()).map(|i| p.apply(i)).collect()
    }

    #[test]
    fn cgd2_sign_choices_are_isomorphic() {
        let p = 11;
        let lambda = algebra::sqrt5(p).unwrap();
        let plus = family_voltage(FamilyId::Cgd2P2, p, FamilyParams { ell: None, lambda: Some(lambda) }).unwrap();
        let minus = family_voltage(FamilyId::Cgd2P2, p, FamilyParams { ell: None, lambda: Some(p - lambda) }).unwrap();
        let eta = cover_isomorphism_via(&plus, &minus, &DipAut::BETA).unwrap();
        // a ↦ d^{2⁻¹(1−λ)}, d ↦ d a⁻¹
        let half = algebra::unit_inverse(2, p).unwrap();
        let e = algebra::mul_mod(half, (1 + p - lambda) % p, p);
        assert_eq!(eta.column(0), vec![0, e]);
        assert_eq!(eta.column(1), vec![p - 1, 1]);
        let map = cover_map(&plus, &minus, &DipAut::BETA, &eta).unwrap();
        assert!(derived(&plus).unwrap().is_isomorphism(&derived(&minus).unwrap(), &as_map(&map)));
    }

    #[test]
    fn cgd1_parameter_choices_are_isomorphic() {
        let p = 11;
        let l = algebra::element_of_order(5, p).unwrap();
        let l2 = algebra::mul_mod(l, l, p);
        let z1 = family_voltage(FamilyId::Cgd1P2, p, FamilyParams { ell: Some(l), lambda: None }).unwrap();
        let z2 = family_voltage(FamilyId::Cgd1P2, p, FamilyParams { ell: Some(l2), lambda: None }).unwrap();
        let eta = cover_isomorphism_via(&z1, &z2, &DipAut::EPSILON).unwrap();
        // a ↦ a⁻¹ d
        assert_eq!(eta.column(0), vec![p - 1, 1]);
        let map = cover_map(&z1, &z2, &DipAut::EPSILON, &eta).unwrap();
        assert!(derived(&z1).unwrap().is_isomorphism(&derived(&z2).unwrap(), &as_map(&map)));
    }

    #[test]
    fn cgd1_at_five_lifts() {
        let z = family_voltage(FamilyId::Cgd1P2, 5, FamilyParams::default()).unwrap();
        // α: a ↦ a²d, d ↦ a⁻¹
        let ma = lifts(&z, &DipAut::ALPHA).unwrap();
        assert_eq!((ma.column(0), ma.column(1)), (vec![2, 1], vec![4, 0]));
        // β: a ↦ d³, d ↦ d a⁻¹, forced by W_1^β = c a⁻¹ with c = a d³
        let mb = lifts(&z, &DipAut::BETA).unwrap();
        assert_eq!((mb.column(0), mb.column(1)), (vec![0, 3], vec![4, 1]));
        let squared = FpMatrix::from_columns(5, &[vec![0, 2], vec![4, 1]]);
        assert_eq!(lift_to_cover(&z, &DipAut::BETA, &squared), Err(Error::NotALift));
        assert!(lifts(&z, &DipAut::DELTA).is_none());
        assert!(lifting_group(&z).arc_transitive);
    }

    #[test]
    fn canonical_representative_is_class_invariant() {
        let z = family_voltage(FamilyId::Cgd2P2, 11, FamilyParams::default()).unwrap();
        let c = canonical_representative(&z);
        for s in DipAut::all().iter().step_by(13) {
            assert_eq!(canonical_representative(&pullback(&z, s)), c);
        }
        assert!(covers_isomorphic(&z, &c).is_some());
    }
}
