//! Automorphism groups and isomorphism by individualization and refinement.
//!
//! Colourings are ordered: colour indices are assigned from sorted
//! label-free keys, so the refinement of `π^g` is the refinement of `π`
//! relabelled by `g`. The search follows one leftmost path to a discrete
//! colouring, then walks back up the base computing each basic orbit
//! exactly; the automorphisms found form a strong generating set.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;
use crate::permgrp::PermGroup;

/// Largest graph accepted by [`aut_group`] and [`isomorphic`].
pub const MAX_VERTICES: usize = 10_000;

#[derive(Clone)]
struct Colouring {
    colour: Vec<u32>,
    count: usize,
}

impl Colouring {
    fn unit(n: usize) -> Self {
        Self {
            colour: vec![0; n],
            count: usize::from(n > 0),
        }
    }

    fn is_discrete(&self) -> bool {
        self.count == self.colour.len()
    }

    /// Give `v` its own colour, placed just before the rest of its cell.
    fn individualize(&self, v: usize) -> Self {
        let c = self.colour[v];
        let colour = self
            .colour
            .iter()
            .enumerate()
            .map(|(u, &x)| if x > c || (x == c && u != v) { x + 1 } else { x })
            .collect();
        Self {
            colour,
            count: self.count + 1,
        }
    }

    /// Smallest non-singleton cell, lowest colour first; members ascending.
    fn target_cell(&self) -> Option<(u32, Vec<usize>)> {
        let mut sizes = vec![0usize; self.count];
        for &c in &self.colour {
            sizes[c as usize] += 1;
        }
        let (c, _) = sizes
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s > 1)
            .min_by_key(|&(i, &s)| (s, i))?;
        let members = (0..self.colour.len())
            .filter(|&v| self.colour[v] as usize == c)
            .collect();
        Some((c as u32, members))
    }

    fn members(&self, c: u32) -> Vec<usize> {
        (0..self.colour.len()).filter(|&v| self.colour[v] == c).collect()
    }
}

/// Refine to the coarsest equitable colouring below `col`; returns a trace
/// hash that is invariant under relabelling.
fn refine(g: &Graph, col: &mut Colouring) -> u64 {
    let n = g.vertex_count();
    let mut hasher = DefaultHasher::new();
    let mut keyed: Vec<(u32, Vec<u32>, u32)> = Vec::with_capacity(n);
    loop {
        keyed.clear();
        for v in 0..n {
            let mut sig: Vec<u32> = g.neighbors(v).iter().map(|&u| col.colour[u as usize]).collect();
            sig.sort_unstable();
            keyed.push((col.colour[v], sig, v as u32));
        }
        keyed.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                next += 1;
                keyed[i - 1].0.hash(&mut hasher);
                keyed[i - 1].1.hash(&mut hasher);
                i.hash(&mut hasher);
            }
            col.colour[keyed[i].2 as usize] = next;
        }
        let count = if n == 0 { 0 } else { next as usize + 1 };
        count.hash(&mut hasher);
        if count == col.count {
            return hasher.finish();
        }
        col.count = count;
    }
}

fn refined(g: &Graph, col: Colouring) -> (Colouring, u64) {
    let mut col = col;
    let trace = refine(g, &mut col);
    (col, trace)
}

/// The leftmost root-to-leaf path of the search tree.
struct FirstPath {
    /// Colouring at each level; the last is discrete.
    levels: Vec<Colouring>,
    traces: Vec<u64>,
    /// Target colour at each non-leaf level.
    targets: Vec<u32>,
    base: Vec<usize>,
}

impl FirstPath {
    fn new(g: &Graph, start: Colouring) -> Self {
        let (mut col, trace) = refined(g, start);
        let mut path = FirstPath {
            levels: Vec::new(),
            traces: vec![trace],
            targets: Vec::new(),
            base: Vec::new(),
        };
        while let Some((c, cell)) = col.target_cell() {
            let b = cell[0];
            let (next, trace) = refined(g, col.individualize(b));
            path.levels.push(col);
            path.targets.push(c);
            path.base.push(b);
            path.traces.push(trace);
            col = next;
        }
        path.levels.push(col);
        path
    }

    fn depth(&self) -> usize {
        self.base.len()
    }

    fn leaf(&self) -> &Colouring {
        &self.levels[self.depth()]
    }
}

/// Map each vertex of the `from` leaf to the vertex of equal colour in `to`.
fn leaf_map(from: &Colouring, to: &Colouring) -> Vec<usize> {
    let mut by_colour = vec![0usize; to.colour.len()];
    for (v, &c) in to.colour.iter().enumerate() {
        by_colour[c as usize] = v;
    }
    from.colour.iter().map(|&c| by_colour[c as usize]).collect()
}

/// Depth-first search below `col` (at `level`, already matched to the first
/// path's trace) for a leaf whose induced map is accepted by `accept`.
fn descend<F>(g: &Graph, path: &FirstPath, level: usize, col: &Colouring, accept: &mut F) -> Option<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    if level == path.depth() {
        if !col.is_discrete() {
            return None;
        }
        let map = leaf_map(path.leaf(), col);
        return accept(&map).then_some(map);
    }
    let cell = col.members(path.targets[level]);
    if cell.len() != path.levels[level].members(path.targets[level]).len() {
        return None;
    }
    for x in cell {
        let (next, trace) = refined(g, col.individualize(x));
        if trace != path.traces[level + 1] || next.count != path.levels[level + 1].count {
            continue;
        }
        if let Some(map) = descend(g, path, level + 1, &next, accept) {
            return Some(map);
        }
    }
    None
}

fn check_size(g: &Graph) -> Result<()> {
    if g.vertex_count() > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph for automorphism search",
            size: g.vertex_count(),
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

fn orbit_of(point: usize, gens: &[Perm], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Full automorphism group, with a strong generating set relative to the
/// search base. Deterministic.
pub fn aut_group(g: &Graph) -> Result<PermGroup> {
    check_size(g)?;
    Ok(aut_group_coloured(g, Colouring::unit(g.vertex_count())))
}

fn aut_group_coloured(g: &Graph, start: Colouring) -> PermGroup {
    let n = g.vertex_count();
    let path = FirstPath::new(g, start);
    let mut strong: Vec<Perm> = Vec::new();
    for level in (0..path.depth()).rev() {
        let b = path.base[level];
        let mut orbit = orbit_of(b, &strong, n);
        let cell = path.levels[level].members(path.targets[level]);
        for w in cell {
            if orbit[w] {
                continue;
            }
            let (col, trace) = refined(g, path.levels[level].individualize(w));
            if trace != path.traces[level + 1] || col.count != path.levels[level + 1].count {
                continue;
            }
            let found = descend(g, &path, level + 1, &col, &mut |map: &[usize]| {
                g.is_automorphism(&Perm::from_vec(map.to_vec()).expect("leaf maps are bijections"))
            });
            if let Some(map) = found {
                strong.push(Perm::from_vec(map).expect("bijection"));
                orbit = orbit_of(b, &strong, n);
            }
        }
    }
    PermGroup::from_strong_generators(n, &path.base, strong)
}

/// An isomorphism `g1 → g2` as a vertex map, or `None`.
///
/// Decided through the automorphism group of the disjoint union: the graphs
/// are isomorphic exactly when some automorphism maps the first copy onto
/// the second.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    check_size(g1)?;
    if 2 * (n + 1) > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "disjoint union for isomorphism test",
            size: 2 * (n + 1),
            limit: MAX_VERTICES,
        });
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    // Coning makes both sides connected; an isomorphism of cones restricts
    // to one of the originals after moving the apex home.
    let (h1, h2, coned) = if g1.is_connected() && g2.is_connected() {
        (g1.clone(), g2.clone(), false)
    } else {
        (cone(g1)?, cone(g2)?, true)
    };
    let m = h1.vertex_count();
    let union = h1.disjoint_union(&h2);
    let aut = aut_group_coloured(&union, Colouring::unit(2 * m));
    let Some(swap) = aut.generators().iter().find(|p| p.apply(0) >= m) else {
        return Ok(None);
    };
    let mut map: Vec<usize> = (0..m).map(|v| swap.apply(v) - m).collect();
    if coned {
        let apex = n;
        if map[apex] != apex {
            // The image of the apex is universal in the second cone, so the
            // transposition with the apex is an automorphism there.
            let hit = map[apex];
            for x in map.iter_mut() {
                if *x == apex {
                    *x = hit;
                } else if *x == hit {
                    *x = apex;
                }
            }
        }
        map.truncate(n);
    }
    debug_assert!(g1.is_isomorphism(g2, &map));
    Ok(Some(map))
}

fn cone(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    Graph::build(n + 1, g.edges().into_iter().chain((0..n).map(|v| (v, n))))
}
