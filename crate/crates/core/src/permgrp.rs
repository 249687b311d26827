//! Permutation groups: stabilizer chains, membership, orbits, normal closures
//! and normal-subgroup enumeration for small groups.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the order of groups whose elements are enumerated.
pub const DEFAULT_ELEMENT_BUDGET: u128 = 1 << 16;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;
const RNG_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    /// Indices into `StabChain::strong` of generators fixing all earlier base points.
    gens: Vec<u32>,
    orbit: Vec<u32>,
    /// Schreier vector: the strong generator whose application reached a point.
    sv: Vec<u32>,
    /// Position of each point in `orbit`, or `NONE`.
    pos: Vec<u32>,
}

/// Base and strong generating set with Schreier-vector transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Perm>,
    strong_inv: Vec<Perm>,
    /// Number of leading base points each strong generator fixes.
    depth: Vec<usize>,
    levels: Vec<Level>,
}

impl StabChain {
    fn empty(degree: usize) -> Self {
        Self {
            degree,
            strong: Vec::new(),
            strong_inv: Vec::new(),
            depth: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    fn rebuild_level(&mut self, i: usize) {
        let n = self.degree;
        let base = self.levels[i].base;
        let gens: Vec<u32> = (0..self.strong.len() as u32)
            .filter(|&g| self.depth[g as usize] >= i)
            .collect();
        let mut sv = vec![NONE; n];
        let mut pos = vec![NONE; n];
        let mut orbit = vec![base];
        sv[base as usize] = ROOT;
        pos[base as usize] = 0;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &g in &gens {
                let y = self.strong[g as usize].at(x);
                if sv[y as usize] == NONE {
                    sv[y as usize] = g;
                    pos[y as usize] = orbit.len() as u32;
                    orbit.push(y);
                }
            }
        }
        self.levels[i] = Level {
            base,
            gens,
            orbit,
            sv,
            pos,
        };
    }

    /// Strong generators along the Schreier tree from `q` back to the root.
    fn path(&self, level: usize, mut q: u32) -> Vec<u32> {
        let lv = &self.levels[level];
        let mut path = Vec::new();
        loop {
            let g = lv.sv[q as usize];
            debug_assert_ne!(g, NONE);
            if g == ROOT {
                return path;
            }
            path.push(g);
            q = self.strong_inv[g as usize].at(q);
        }
    }

    /// Image of `x` under the transversal element mapping the base point to `q`.
    fn u_apply(&self, level: usize, q: u32, x: u32) -> u32 {
        self.path(level, q)
            .iter()
            .rev()
            .fold(x, |y, &g| self.strong[g as usize].at(y))
    }

    /// Image of `x` under the inverse transversal element for `q`.
    fn u_inv_apply(&self, level: usize, q: u32, x: u32) -> u32 {
        self.path(level, q)
            .iter()
            .fold(x, |y, &g| self.strong_inv[g as usize].at(y))
    }

    fn transversal(&self, level: usize, q: u32) -> Perm {
        let path = self.path(level, q);
        let mut images: Vec<u32> = (0..self.degree as u32).collect();
        for &g in path.iter().rev() {
            let s = &self.strong[g as usize];
            for y in images.iter_mut() {
                *y = s.at(*y);
            }
        }
        Perm::from_images_unchecked(images)
    }

    /// Sift `g` starting at `from`; returns the residue and the level where it stopped.
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut images = g.images().to_vec();
        for j in from..self.levels.len() {
            let lv = &self.levels[j];
            let y = images[lv.base as usize];
            if lv.sv[y as usize] == NONE {
                return (Perm::from_images_unchecked(images), j);
            }
            let path = self.path(j, y);
            for z in images.iter_mut() {
                for &h in &path {
                    *z = self.strong_inv[h as usize].at(*z);
                }
            }
        }
        (Perm::from_images_unchecked(images), self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && {
            let (r, j) = self.sift(g, 0);
            j == self.levels.len() && r.is_identity()
        }
    }

    /// Add a non-identity residue that fixes the first `j` base points.
    fn add_strong(&mut self, h: Perm, j: usize) {
        debug_assert!(!h.is_identity());
        if j == self.levels.len() {
            let b = h.first_moved().expect("non-identity") as u32;
            self.levels.push(Level {
                base: b,
                gens: Vec::new(),
                orbit: Vec::new(),
                sv: Vec::new(),
                pos: Vec::new(),
            });
        }
        self.strong_inv.push(h.inverse());
        self.strong.push(h);
        self.depth.push(j);
        for i in 0..=j {
            self.rebuild_level(i);
        }
    }

    /// Sift `g` and extend the chain by its residue if needed. Returns whether the chain changed.
    fn absorb(&mut self, g: &Perm) -> Option<usize> {
        let (r, j) = self.sift(g, 0);
        if j == self.levels.len() && r.is_identity() {
            return None;
        }
        self.add_strong(r, j);
        Some(j)
    }

    /// Deterministic Schreier-generator check, starting at the deepest level.
    fn verify(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &q in &orbit {
                let uq = self.transversal(lvl, q);
                for &s in &gens {
                    let r = self.strong[s as usize].at(q);
                    // Tree edges give the identity.
                    if self.levels[lvl].sv[r as usize] == s && self.strong_inv[s as usize].at(r) == q {
                        continue;
                    }
                    let path = self.path(lvl, r);
                    let s_perm = &self.strong[s as usize];
                    let images: Vec<u32> = uq
                        .images()
                        .iter()
                        .map(|&y| {
                            path.iter()
                                .fold(s_perm.at(y), |z, &h| self.strong_inv[h as usize].at(z))
                        })
                        .collect();
                    let g = Perm::from_images_unchecked(images);
                    let (res, j) = self.sift(&g, lvl + 1);
                    if j < self.levels.len() || !res.is_identity() {
                        self.add_strong(res, j);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Build a chain for `⟨gens⟩`. When `known_order` is given and reached,
    /// the randomized phase alone certifies the chain (a partial chain never
    /// overcounts); otherwise the result is verified deterministically.
    pub fn schreier_sims(degree: usize, gens: &[Perm], known_order: Option<u128>) -> Self {
        let mut chain = Self::empty(degree);
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            chain.absorb(g);
        }
        if known_order == Some(chain.order()) {
            return chain;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
        let mut pr = ProductReplacement::new(&gens, &mut rng);
        let mut quiet = 0;
        let quiet_limit = if known_order.is_some() { 400 } else { 40 };
        while quiet < quiet_limit {
            let g = pr.next(&mut rng);
            if chain.absorb(&g).is_some() {
                quiet = 0;
                if known_order == Some(chain.order()) {
                    return chain;
                }
            } else {
                quiet += 1;
            }
        }
        chain.verify();
        chain
    }

    /// Chain from a base and a strong generating set that is already known to
    /// be complete (for instance, produced by an exhaustive search).
    pub fn from_base_and_strong_gens(degree: usize, base: &[usize], strong: Vec<Perm>) -> Self {
        let mut chain = Self::empty(degree);
        for &b in base {
            chain.levels.push(Level {
                base: b as u32,
                gens: Vec::new(),
                orbit: Vec::new(),
                sv: Vec::new(),
                pos: Vec::new(),
            });
        }
        for g in strong {
            if g.is_identity() {
                continue;
            }
            let d = base.iter().take_while(|&&b| g.fixes(b)).count();
            assert!(d < base.len(), "strong generator fixes the whole base");
            chain.strong_inv.push(g.inverse());
            chain.strong.push(g);
            chain.depth.push(d);
        }
        for i in 0..chain.levels.len() {
            chain.rebuild_level(i);
        }
        // Drop trailing trivial levels.
        while chain.levels.last().is_some_and(|l| l.orbit.len() == 1) {
            chain.levels.pop();
        }
        chain
    }

    /// Coordinates (orbit positions per level) of `g`, using only base-point images.
    fn coords_of(&self, mut image_of: impl FnMut(u32) -> u32) -> Option<Vec<u32>> {
        let mut coords = Vec::with_capacity(self.levels.len());
        let mut qs: Vec<u32> = Vec::with_capacity(self.levels.len());
        for lv in &self.levels {
            let mut y = image_of(lv.base);
            for (l, &q) in qs.iter().enumerate() {
                y = self.u_inv_apply(l, q, y);
            }
            let p = lv.pos[y as usize];
            if p == NONE {
                return None;
            }
            qs.push(y);
            coords.push(p);
        }
        Some(coords)
    }

    /// Evaluate the element with the given coordinates at `x`.
    fn eval(&self, coords: &[u32], x: u32) -> u32 {
        let mut y = x;
        for j in (0..self.levels.len()).rev() {
            let q = self.levels[j].orbit[coords[j] as usize];
            y = self.u_apply(j, q, y);
        }
        y
    }

    fn element(&self, coords: &[u32]) -> Perm {
        Perm::from_images_unchecked((0..self.degree as u32).map(|x| self.eval(coords, x)).collect())
    }
}

struct ProductReplacement {
    state: Vec<Perm>,
    acc: Perm,
}

impl ProductReplacement {
    fn new(gens: &[Perm], rng: &mut ChaCha8Rng) -> Self {
        let mut state: Vec<Perm> = gens.to_vec();
        while state.len() < 10 {
            state.push(gens[state.len() % gens.len()].clone());
        }
        let acc = Perm::identity(gens[0].degree());
        let mut pr = Self { state, acc };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    fn next(&mut self, rng: &mut ChaCha8Rng) -> Perm {
        let n = self.state.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let s = if rng.gen_bool(0.5) {
            self.state[j].clone()
        } else {
            self.state[j].inverse()
        };
        self.state[i] = if rng.gen_bool(0.5) {
            self.state[i].then(&s)
        } else {
            s.then(&self.state[i])
        };
        self.acc = self.acc.then(&self.state[i]);
        self.acc.clone()
    }
}

/// A permutation group given by generators; the stabilizer chain is built on demand.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    known_order: Option<u128>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
        Ok(Self {
            degree,
            gens,
            known_order: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            gens: Vec::new(),
            known_order: Some(1),
            chain: OnceLock::new(),
        }
    }

    /// Group whose order is known in advance; the chain build stops as soon
    /// as it reaches that order. The caller guarantees `order` is exact.
    pub fn with_known_order(degree: usize, gens: Vec<Perm>, order: u128) -> Result<Self> {
        let mut g = Self::new(degree, gens)?;
        g.known_order = Some(order);
        Ok(g)
    }

    /// Group given by a complete base and strong generating set.
    pub fn from_strong_generators(degree: usize, base: &[usize], strong: Vec<Perm>) -> Self {
        let chain = StabChain::from_base_and_strong_gens(degree, base, strong.clone());
        let order = chain.order();
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        Self {
            degree,
            gens: strong,
            known_order: Some(order),
            chain: lock,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::schreier_sims(self.degree, &self.gens, self.known_order))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(g.degree(), self.degree));
        }
        Ok(self.chain().contains(g))
    }

    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x).expect("in range");
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// No non-identity element fixes a point: every orbit has size `|G|`.
    pub fn is_semiregular(&self) -> bool {
        let n = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == n)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.chain().contains(g))
    }

    /// Whether `sub` is normalized by every generator of `self`.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|s| sub.gens.iter().all(|n| sub.chain().contains(&n.conj(s))))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<PermGroup> {
        for s in seeds {
            if s.degree() != self.degree {
                return Err(Error::DegreeMismatch(s.degree(), self.degree));
            }
            if !self.chain().contains(s) {
                return Err(Error::SeedNotInGroup);
            }
        }
        let mut chain = StabChain::empty(self.degree);
        let mut gens: Vec<Perm> = Vec::new();
        let mut queue: VecDeque<Perm> = seeds.iter().cloned().collect();
        while let Some(g) = queue.pop_front() {
            if chain.contains(&g) {
                continue;
            }
            gens.push(g.clone());
            chain = StabChain::schreier_sims(self.degree, &gens, None);
            for s in &self.gens {
                queue.push_back(g.conj(s));
            }
            // Conjugates of earlier generators by the new group are covered by
            // conjugating every generator by every group generator.
        }
        let order = chain.order();
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        Ok(PermGroup {
            degree: self.degree,
            gens,
            known_order: Some(order),
            chain: lock,
        })
    }

    /// All elements, for small groups.
    pub fn elements(&self, budget: u128) -> Result<Vec<Perm>> {
        let table = ElementTable::new(self, budget)?;
        Ok((0..table.len()).map(|i| table.perm(i)).collect())
    }

    /// All normal subgroups, sorted by order (ties by generation order).
    pub fn normal_subgroups(&self, element_budget: u128) -> Result<Vec<PermGroup>> {
        let table = ElementTable::new(self, element_budget)?;
        let lattice = NormalLattice::build(&table, true);
        Ok(lattice.into_groups(&table))
    }

    /// Normal closures of single elements, sorted by order. Every minimal
    /// normal subgroup appears among them.
    pub fn element_normal_closures(&self, element_budget: u128) -> Result<Vec<PermGroup>> {
        let table = ElementTable::new(self, element_budget)?;
        let lattice = NormalLattice::build(&table, false);
        Ok(lattice.into_groups(&table))
    }

    /// Whether the coordinatewise action is transitive on `tuples`, i.e. the
    /// orbit of `tuples[0]` is the whole list.
    pub fn tuple_orbit_transitive(&self, tuples: &[Vec<usize>]) -> bool {
        let Some(first) = tuples.first() else {
            return false;
        };
        let index: HashMap<&[usize], usize> = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_slice(), i))
            .collect();
        let mut seen = vec![false; tuples.len()];
        seen[0] = true;
        let mut count = 1;
        let mut queue = vec![first.clone()];
        while let Some(t) = queue.pop() {
            for g in &self.gens {
                let img: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                match index.get(img.as_slice()) {
                    Some(&k) => {
                        if !seen[k] {
                            seen[k] = true;
                            count += 1;
                            queue.push(img);
                        }
                    }
                    // The set is not invariant; the orbit leaves it.
                    None => return false,
                }
            }
        }
        count == tuples.len()
    }
}

/// Elements of a small group indexed densely; each element is stored by its
/// base-point images, which determine it.
pub(crate) struct ElementTable<'a> {
    group: &'a PermGroup,
    base: Vec<u32>,
    images: Vec<u32>,
    index: HashMap<Vec<u32>, u32>,
}

impl<'a> ElementTable<'a> {
    pub(crate) fn new(group: &'a PermGroup, budget: u128) -> Result<Self> {
        let order = group.order();
        if order > budget {
            return Err(Error::BudgetExceeded {
                what: "group element enumeration",
                needed: order,
                budget,
            });
        }
        let chain = group.chain();
        let base: Vec<u32> = chain.levels.iter().map(|l| l.base).collect();
        let k = base.len();
        let mut images = Vec::with_capacity(order as usize * k);
        let mut index = HashMap::with_capacity(order as usize);
        let sizes = chain.orbit_sizes();
        let mut coords = vec![0u32; k];
        for idx in 0..order as usize {
            let mut rem = idx;
            for j in (0..k).rev() {
                coords[j] = (rem % sizes[j]) as u32;
                rem /= sizes[j];
            }
            let img: Vec<u32> = base.iter().map(|&b| chain.eval(&coords, b)).collect();
            images.extend_from_slice(&img);
            index.insert(img, idx as u32);
        }
        Ok(Self {
            group,
            base,
            images,
            index,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.index.len()
    }

    fn k(&self) -> usize {
        self.base.len()
    }

    fn base_images(&self, i: usize) -> &[u32] {
        let k = self.k();
        &self.images[i * k..(i + 1) * k]
    }

    fn identity(&self) -> usize {
        self.index[&self.base] as usize
    }

    /// Index of `element(i)` followed by the full permutation `g`.
    fn times(&self, i: usize, g: &Perm) -> usize {
        let img: Vec<u32> = self.base_images(i).iter().map(|&y| g.at(y)).collect();
        self.index[&img] as usize
    }

    pub(crate) fn perm(&self, i: usize) -> Perm {
        let chain = self.group.chain();
        let coords = chain
            .coords_of(|b| {
                let j = self.base.iter().position(|&x| x == b).expect("base point");
                self.base_images(i)[j]
            })
            .expect("element of the group");
        chain.element(&coords)
    }

    /// Index of `s⁻¹ · element(i) · s`.
    fn conjugate(&self, i: usize, s: &Perm, s_inv: &Perm) -> usize {
        let chain = self.group.chain();
        let coords = chain
            .coords_of(|b| {
                let j = self.base.iter().position(|&x| x == b).expect("base point");
                self.base_images(i)[j]
            })
            .expect("element of the group");
        let img: Vec<u32> = self
            .base
            .iter()
            .map(|&b| s.at(chain.eval(&coords, s_inv.at(b))))
            .collect();
        self.index[&img] as usize
    }

    /// Conjugacy class id of every element, and class representatives in index order.
    fn classes(&self) -> (Vec<u32>, Vec<usize>) {
        let gens = self.group.generators();
        let invs: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        let mut class = vec![NONE; self.len()];
        let mut reps = Vec::new();
        for start in 0..self.len() {
            if class[start] != NONE {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            class[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for (s, si) in gens.iter().zip(&invs) {
                    let y = self.conjugate(x, s, si);
                    if class[y] == NONE {
                        class[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        (class, reps)
    }
}

/// A subgroup of an [`ElementTable`] held as a membership bitset.
#[derive(Clone)]
struct SubgroupSet {
    members: Vec<u64>,
    size: usize,
    gens: Vec<Perm>,
}

impl SubgroupSet {
    fn trivial(table: &ElementTable) -> Self {
        let mut members = vec![0u64; table.len().div_ceil(64)];
        let e = table.identity();
        members[e / 64] |= 1 << (e % 64);
        Self {
            members,
            size: 1,
            gens: Vec::new(),
        }
    }

    fn has(&self, i: usize) -> bool {
        self.members[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .all(|(a, b)| a & !b == 0)
    }

    /// Extend by a new generator given as an element index.
    fn add_generator(&mut self, table: &ElementTable, g_idx: usize) {
        if self.has(g_idx) {
            return;
        }
        let g = table.perm(g_idx);
        // Old members times the new generator, then close under all generators.
        let mut queue: Vec<usize> = Vec::new();
        let old: Vec<usize> = (0..table.len()).filter(|&i| self.has(i)).collect();
        self.gens.push(g);
        let gens = self.gens.clone();
        let last = gens.len() - 1;
        for i in old {
            let y = table.times(i, &gens[last]);
            if !self.has(y) {
                self.members[y / 64] |= 1 << (y % 64);
                self.size += 1;
                queue.push(y);
            }
        }
        while let Some(x) = queue.pop() {
            for g in &gens {
                let y = table.times(x, g);
                if !self.has(y) {
                    self.members[y / 64] |= 1 << (y % 64);
                    self.size += 1;
                    queue.push(y);
                }
            }
        }
    }
}

struct NormalLattice {
    subgroups: Vec<SubgroupSet>,
}

impl NormalLattice {
    fn build(table: &ElementTable, with_joins: bool) -> Self {
        let (class, reps) = table.classes();
        let mut class_members: Vec<Vec<usize>> = vec![Vec::new(); reps.len()];
        for (i, &c) in class.iter().enumerate() {
            class_members[c as usize].push(i);
        }
        let mut found: Vec<SubgroupSet> = vec![SubgroupSet::trivial(table)];
        let mut keys: HashSet<Vec<u64>> = HashSet::new();
        keys.insert(found[0].members.clone());
        let mut done = vec![false; reps.len()];
        let e = table.identity();
        done[class[e] as usize] = true;
        for (cid, &rep) in reps.iter().enumerate() {
            if done[cid] {
                continue;
            }
            let mut n = SubgroupSet::trivial(table);
            for &x in &class_members[cid] {
                n.add_generator(table, x);
            }
            // Generators of <rep> give the same closure.
            let rep_perm = table.perm(rep);
            let ord = rep_perm.order();
            let mut power = rep;
            for k in 1..ord {
                if crate::algebra::gcd(k, ord) == 1 {
                    done[class[power] as usize] = true;
                }
                power = table.times(power, &rep_perm);
            }
            done[cid] = true;
            if keys.insert(n.members.clone()) {
                found.push(n);
            }
        }
        if with_joins {
            let mut i = 0;
            while i < found.len() {
                for j in 0..i {
                    if found[i].is_subset_of(&found[j]) || found[j].is_subset_of(&found[i]) {
                        continue;
                    }
                    let mut join = found[i].clone();
                    for g in found[j].gens.clone() {
                        let idx = table.times(table.identity(), &g);
                        join.add_generator(table, idx);
                    }
                    if keys.insert(join.members.clone()) {
                        found.push(join);
                    }
                }
                i += 1;
            }
        }
        found.sort_by_key(|s| s.size);
        Self { subgroups: found }
    }

    fn into_groups(self, table: &ElementTable) -> Vec<PermGroup> {
        let degree = table.group.degree();
        self.subgroups
            .into_iter()
            .map(|s| {
                PermGroup::with_known_order(degree, s.gens, s.size as u128).expect("same degree")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let all: Vec<usize> = (0..n).collect();
        PermGroup::new(n, vec![cyc(n, &[&[0, 1]]), cyc(n, &[&all])]).unwrap()
    }

    fn alt5() -> PermGroup {
        PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap()
    }

    /// All elements by closure under right multiplication (oracle).
    fn brute_elements(g: &PermGroup) -> HashSet<Perm> {
        let mut seen = HashSet::new();
        let id = Perm::identity(g.degree());
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for s in g.generators() {
                let y = x.then(s);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn orbit_examples() {
        let c5 = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(c5.orbit(0).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(PermGroup::trivial(5).orbit(3).unwrap(), vec![3]);
        assert_eq!(
            c5.orbit(5),
            Err(Error::PointOutOfRange { point: 5, degree: 5 })
        );
    }

    #[test]
    fn order_of_symmetric_groups() {
        assert_eq!(sym(6).order(), 720);
        assert_eq!(sym(8).order(), 40320);
        assert_eq!(alt5().order(), 60);
        assert_eq!(PermGroup::trivial(4).order(), 1);
    }

    #[test]
    fn membership() {
        let s6 = sym(6);
        assert!(s6.contains(&cyc(6, &[&[2, 4]])).unwrap());
        let c5 = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert!(!c5.contains(&cyc(5, &[&[0, 1]])).unwrap());
        assert!(!alt5().contains(&cyc(5, &[&[0, 1]])).unwrap());
        assert_eq!(
            c5.contains(&Perm::identity(4)),
            Err(Error::DegreeMismatch(4, 5))
        );
    }

    #[test]
    fn chain_order_matches_brute_force() {
        let groups = [
            sym(5),
            alt5(),
            PermGroup::new(8, vec![cyc(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]), cyc(8, &[&[0, 4]])])
                .unwrap(),
            PermGroup::new(6, vec![cyc(6, &[&[0, 1], &[2, 3]]), cyc(6, &[&[2, 3], &[4, 5]])])
                .unwrap(),
        ];
        for g in groups {
            let brute = brute_elements(&g);
            assert_eq!(g.order(), brute.len() as u128);
            let listed: HashSet<Perm> = g.elements(1 << 20).unwrap().into_iter().collect();
            assert_eq!(listed, brute);
        }
    }

    #[test]
    fn known_order_path_agrees() {
        let g = sym(6);
        let h = PermGroup::with_known_order(6, g.generators().to_vec(), 720).unwrap();
        assert_eq!(h.order(), 720);
        assert!(h.contains(&cyc(6, &[&[0, 5, 3]])).unwrap());
    }

    #[test]
    fn normal_closure_examples() {
        let s4 = sym(4);
        let v4 = s4.normal_closure(&[cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(s4.normal_closure(&[]).unwrap().order(), 1);
        let a5 = alt5();
        let n = a5.normal_closure(&[cyc(5, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(n.order(), 60);
        assert_eq!(
            alt5().normal_closure(&[cyc(5, &[&[0, 1]])]).unwrap_err(),
            Error::SeedNotInGroup
        );
    }

    #[test]
    fn normal_subgroups_of_s4_and_c5() {
        let orders: Vec<u128> = sym(4)
            .normal_subgroups(DEFAULT_ELEMENT_BUDGET)
            .unwrap()
            .iter()
            .map(PermGroup::order)
            .collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let c5 = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let orders: Vec<u128> = c5
            .normal_subgroups(DEFAULT_ELEMENT_BUDGET)
            .unwrap()
            .iter()
            .map(PermGroup::order)
            .collect();
        assert_eq!(orders, vec![1, 5]);
    }

    #[test]
    fn normal_subgroups_budget() {
        let err = sym(6).normal_subgroups(100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 720, .. }));
    }

    #[test]
    fn tuple_orbits() {
        let s6 = sym(6);
        let arcs: Vec<Vec<usize>> = (0..6)
            .flat_map(|i| (0..6).filter(move |&j| j != i).map(move |j| vec![i, j]))
            .collect();
        assert!(s6.tuple_orbit_transitive(&arcs));
        let c5 = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let c5_arcs: Vec<Vec<usize>> = (0..5)
            .flat_map(|i| [vec![i, (i + 1) % 5], vec![(i + 1) % 5, i]])
            .collect();
        assert!(!c5.tuple_orbit_transitive(&c5_arcs));
    }
}
