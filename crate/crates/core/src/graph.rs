//! Simple undirected graphs with dense vertex indices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm;

const EDGE_LIST_HEADER: &str = "p2pg-graph v1";

/// A simple graph; neighbor lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Build from an edge list. Duplicate edges are merged; loops are rejected.
    pub fn build(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); vertex_count];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            adj[a].push(b as u32);
            adj[b].push(a as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list {
                if i < j as usize {
                    out.push((i, j as usize));
                }
            }
        }
        out
    }

    /// The common valency, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.component_of(0).len() == n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut out = vec![start];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &y in &self.adj[x] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y as usize);
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if !seen[v] {
                let mut c = self.component_of(v);
                c.sort_unstable();
                for &x in &c {
                    seen[x] = true;
                }
                out.push(c);
            }
        }
        out
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut touched = Vec::new();
        for root in 0..n {
            for &x in &touched {
                dist[x] = u32::MAX;
                parent[x] = u32::MAX;
            }
            touched.clear();
            dist[root] = 0;
            touched.push(root);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let dx = dist[x] as usize;
                // Any cycle found deeper than this cannot beat `best`.
                if 2 * dx + 1 >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    let y = y as usize;
                    if dist[y] == u32::MAX {
                        dist[y] = dx as u32 + 1;
                        parent[y] = x as u32;
                        touched.push(y);
                        queue.push_back(y);
                    } else if parent[x] != y as u32 {
                        best = best.min(dx + dist[y] as usize + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Two-coloring with vertex 0 in the first part, or `None` if not bipartite.
    pub fn bipartition(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        if n == 0 {
            return Ok(Some((Vec::new(), Vec::new())));
        }
        color[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                let y = y as usize;
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return Ok(None);
                }
            }
        }
        let part0 = (0..n).filter(|&v| color[v] == 0).collect();
        let part1 = (0..n).filter(|&v| color[v] == 1).collect();
        Ok(Some((part0, part1)))
    }

    /// Number of cycles of the given length that contain `path` as a
    /// consecutive run of vertices.
    pub fn cycles_through_path(&self, path: &[usize], length: usize) -> Result<u64> {
        let n = self.vertex_count();
        if path.len() < 2 {
            return Err(Error::NotAPath);
        }
        for &v in path {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, count: n });
            }
        }
        for w in path.windows(2) {
            if !self.has_edge(w[0], w[1]) {
                return Err(Error::NotAPath);
            }
        }
        for w in path.windows(3) {
            if w[0] == w[2] {
                return Err(Error::NotAPath);
            }
        }
        let k = path.len() - 1;
        let distinct: BTreeSet<usize> = path.iter().copied().collect();
        if distinct.len() != path.len() || length < 3 || length <= k {
            return Ok(0);
        }
        let mut blocked = vec![false; n];
        for &v in &path[1..] {
            blocked[v] = true;
        }
        let (head, tail) = (path[0], path[k]);
        // Count simple paths tail -> head of exactly `length - k` edges
        // avoiding the interior of `path`.
        let mut count = 0;
        self.count_return_paths(tail, head, length - k, &mut blocked, &mut count);
        Ok(count)
    }

    fn count_return_paths(
        &self,
        at: usize,
        target: usize,
        steps: usize,
        blocked: &mut [bool],
        count: &mut u64,
    ) {
        if steps == 1 {
            if self.has_edge(at, target) {
                *count += 1;
            }
            return;
        }
        for &y in &self.adj[at] {
            let y = y as usize;
            if y == target || blocked[y] {
                continue;
            }
            blocked[y] = true;
            self.count_return_paths(y, target, steps - 1, blocked, count);
            blocked[y] = false;
        }
    }

    /// Contract each cell of `partition` to a vertex; cells are adjacent when
    /// some edge joins them.
    pub fn quotient(&self, partition: &[Vec<usize>]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut cell_of = vec![usize::MAX; n];
        for (c, cell) in partition.iter().enumerate() {
            for &v in cell {
                if v >= n || cell_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition);
                }
                cell_of[v] = c;
            }
        }
        if cell_of.contains(&usize::MAX) {
            return Err(Error::InvalidPartition);
        }
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            if cell_of[a] == cell_of[b] {
                return Err(Error::IntraCellEdge(a, b));
            }
            edges.push((cell_of[a], cell_of[b]));
        }
        Graph::build(partition.len(), edges)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j));
        Graph::build(n, edges).expect("valid")
    }

    /// Vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(a, b)| (a + off, b + off)));
        Graph::build(off + other.vertex_count(), edges).expect("valid")
    }

    /// Graph on the same vertex count with vertex `v` renamed `perm(v)`.
    pub fn relabel(&self, perm: &Perm) -> Result<Graph> {
        if perm.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch(perm.degree(), self.vertex_count()));
        }
        Graph::build(
            self.vertex_count(),
            self.edges().into_iter().map(|(a, b)| (perm.apply(a), perm.apply(b))),
        )
    }

    pub fn is_automorphism(&self, perm: &Perm) -> bool {
        perm.degree() == self.vertex_count()
            && self.edges().into_iter().all(|(a, b)| self.has_edge(perm.apply(a), perm.apply(b)))
    }

    /// Whether `map` (a vertex bijection onto `other`) preserves adjacency both ways.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && map.len() == self.vertex_count()
            && Perm::from_vec(map.to_vec()).is_ok()
            && self.edges().into_iter().all(|(a, b)| other.has_edge(map[a], map[b]))
    }

    /// All `s`-arcs: vertex sequences `v_0 … v_s` with consecutive adjacency
    /// and `v_{i−1} ≠ v_{i+1}`. Fails once the count would exceed `limit`.
    pub fn s_arcs(&self, s: usize, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<usize>> = (0..self.vertex_count()).map(|v| vec![v]).collect();
        for _ in 0..s {
            let mut next = Vec::new();
            for arc in &out {
                let last = arc[arc.len() - 1];
                let prev = (arc.len() >= 2).then(|| arc[arc.len() - 2]);
                for &y in &self.adj[last] {
                    if Some(y as usize) == prev {
                        continue;
                    }
                    if next.len() == limit {
                        return Err(Error::TooLarge {
                            what: "s-arc set",
                            size: limit + 1,
                            limit,
                        });
                    }
                    let mut a = arc.clone();
                    a.push(y as usize);
                    next.push(a);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Serialize in the `p2pg-graph v1` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{EDGE_LIST_HEADER}\n{} {}\n", self.vertex_count(), self.edge_count());
        for (a, b) in self.edges() {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        if lines.next() != Some(EDGE_LIST_HEADER) {
            return Err(Error::Parse(format!("expected header `{EDGE_LIST_HEADER}`")));
        }
        let counts = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex/edge counts".into()))?;
        let (n, m) = parse_pair(counts)?;
        let edges: Vec<(usize, usize)> = lines.map(parse_pair).collect::<Result<_>>()?;
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        let g = Graph::build(n, edges)?;
        if g.edge_count() != m {
            return Err(Error::Parse("duplicate edges in edge list".into()));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

/// Cycle graph `C_n`.
pub fn cycle(n: usize) -> Graph {
    Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid")
}

/// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let k6 = complete(6);
        assert_eq!(k6.edge_count(), 15);
        assert_eq!(k6.regular_degree(), Some(5));
        let c4 = Graph::build(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.regular_degree(), Some(2));
        assert_eq!(Graph::build(3, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, count: 3 })
        );
        let dup = Graph::build(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    /// Shortest cycle by exhaustive search over simple cycles (oracle).
    fn naive_girth(g: &Graph) -> Option<usize> {
        let n = g.vertex_count();
        let mut best = None;
        for len in 3..=n {
            for start in 0..n {
                // simple closed paths through `start` using only larger vertices
                let mut stack = vec![(vec![start], 0usize)];
                while let Some((path, _)) = stack.pop() {
                    let last = *path.last().unwrap();
                    if path.len() == len {
                        if g.has_edge(last, start) {
                            best = Some(len);
                        }
                        continue;
                    }
                    for &y in g.neighbors(last) {
                        let y = y as usize;
                        if y > start && !path.contains(&y) {
                            let mut p = path.clone();
                            p.push(y);
                            stack.push((p, 0));
                        }
                    }
                }
                if best.is_some() {
                    return best;
                }
            }
        }
        best
    }

    #[test]
    fn girth_examples() {
        assert_eq!(complete(6).girth(), Some(3));
        assert_eq!(cycle(7).girth(), Some(7));
        assert_eq!(complete_bipartite(3, 3).girth(), Some(4));
        let path = Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
        let petersen = Graph::build(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(petersen.girth(), Some(5));
        assert_eq!(naive_girth(&petersen), Some(5));
    }

    #[test]
    fn bipartition_examples() {
        let (a, b) = complete_bipartite(5, 5).bipartition().unwrap().unwrap();
        assert_eq!((a.len(), b.len()), (5, 5));
        assert!(a.contains(&0));
        assert_eq!(complete(6).bipartition().unwrap(), None);
        let two = Graph::build(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.bipartition(), Err(Error::Disconnected));
    }

    #[test]
    fn cycles_through_path_examples() {
        assert_eq!(complete(6).cycles_through_path(&[0, 1], 3).unwrap(), 4);
        assert_eq!(cycle(6).cycles_through_path(&[0, 1, 2, 3], 6).unwrap(), 1);
        assert_eq!(cycle(6).cycles_through_path(&[0, 2], 6), Err(Error::NotAPath));
        assert_eq!(
            complete(4).cycles_through_path(&[0, 1, 0], 4),
            Err(Error::NotAPath)
        );
    }

    #[test]
    fn quotient_examples() {
        let c6 = cycle(6);
        let singletons: Vec<Vec<usize>> = (0..6).map(|v| vec![v]).collect();
        assert_eq!(c6.quotient(&singletons).unwrap(), c6);
        let antipodal: Vec<Vec<usize>> = (0..3).map(|v| vec![v, v + 3]).collect();
        assert_eq!(c6.quotient(&antipodal).unwrap(), complete(3));
        let bad = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        assert_eq!(c6.quotient(&bad), Err(Error::IntraCellEdge(0, 1)));
        assert_eq!(c6.quotient(&[vec![0]]), Err(Error::InvalidPartition));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = complete_bipartite(2, 3);
        let text = g.to_edge_list();
        assert!(text.starts_with("p2pg-graph v1\n5 6\n0 2\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        assert!(Graph::from_edge_list("nope\n").is_err());
        assert!(Graph::from_edge_list("p2pg-graph v1\n3 2\n0 1\n").is_err());
    }

    #[test]
    fn s_arc_counts() {
        let k6 = complete(6);
        assert_eq!(k6.s_arcs(1, 1000).unwrap().len(), 30);
        assert_eq!(k6.s_arcs(2, 1000).unwrap().len(), 120);
        assert!(k6.s_arcs(3, 100).is_err());
    }
}
