use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::permgroups::Perm;

/// Hard ceiling from the bitset representation; the configurable vertex cap
/// sits below it.
pub const MAX_VERTICES: usize = 32;

/// A finite simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "EdgeListJson", into = "EdgeListJson")]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct EdgeListJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeListJson> for Graph {
    type Error = crate::Error;
    fn try_from(j: EdgeListJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(j.n, &edges)
    }
}

impl From<Graph> for EdgeListJson {
    fn from(g: Graph) -> EdgeListJson {
        EdgeListJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(invalid(format!("edge ({a},{b}) has an endpoint outside 0..{n}")));
            }
            if a == b {
                return Err(invalid(format!("self-loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(invalid(format!("duplicate edge ({a},{b})")));
            }
            g.add_edge_unchecked(a, b);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(invalid(format!("{n} vertices exceeds the representation limit {MAX_VERTICES}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge_unchecked(a, b);
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }


    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (i, &row) in other.adj.iter().enumerate() {
            g.adj[self.n + i] = row << self.n;
        }
        Ok(g)
    }

    /// The graph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = 0u32;
        for &v in vertices {
            if v >= self.n {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            if seen >> v & 1 == 1 {
                return Err(invalid(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(vertices.len())?;
        for (a, &va) in vertices.iter().enumerate() {
            for (b, &vb) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(va, vb) {
                    g.add_edge_unchecked(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier |= new;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The image of the graph under `w`: edge `{i,j}` becomes `{w(i),w(j)}`.
    pub fn relabel(&self, w: &Perm) -> Graph {
        assert_eq!(w.degree(), self.n);
        let mut adj = vec![0u32; self.n];
        for a in 0..self.n {
            let mut row = self.adj[a];
            let wa = w.apply(a);
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                row &= row - 1;
                adj[wa] |= 1 << w.apply(b);
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn is_automorphism(&self, w: &Perm) -> bool {
        w.degree() == self.n && self.relabel(w) == *self
    }

    /// The butterfly: two triangles sharing the centre vertex 0.
    pub fn butterfly() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    /// A kite (two triangles sharing an edge) with a pendant vertex: a triangle
    /// 0,1,2 and 1,2,3 glued along 1–2, plus the edge 3–4.
    pub fn kite_with_tail() -> Graph {
        Graph::new(5, &[(4, 3), (3, 1), (1, 0), (0, 2), (2, 3), (1, 2)]).unwrap()
    }

    /// Named graphs: `butterfly`, `kite` (alias `lambda`), `K<n>`, `Kbar<n>`,
    /// `P<n>` (path), `C<n>` (cycle).
    pub fn named(name: &str) -> Result<Graph> {
        let lower = name.to_ascii_lowercase();
        let num = |prefix: &str| -> Option<usize> { lower.strip_prefix(prefix).and_then(|r| r.parse().ok()) };
        if lower == "butterfly" {
            return Ok(Graph::butterfly());
        }
        if lower == "kite" || lower == "lambda" {
            return Ok(Graph::kite_with_tail());
        }
        if let Some(n) = num("kbar") {
            return Graph::empty(n);
        }
        if let Some(n) = num("k") {
            return Graph::complete(n);
        }
        if let Some(n) = num("p") {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            return Graph::new(n, &edges);
        }
        if let Some(n) = num("c") {
            if n < 3 {
                return Err(invalid("cycles need at least 3 vertices"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            return Graph::new(n, &edges);
        }
        Err(invalid(format!("unknown graph name '{name}'")))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_errors() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::empty(33).is_err());
    }

    #[test]
    fn unions() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.disjoint_union(&k2).unwrap().edges(), vec![(0, 1), (2, 3)]);
        let b = Graph::butterfly();
        assert_eq!(b.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), b);
    }

    #[test]
    fn induced() {
        let b = Graph::butterfly();
        assert_eq!(b.induced_subgraph(&[1, 2]).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(b.induced_subgraph(&[]).unwrap().n(), 0);
        assert_eq!(Graph::complete(3).unwrap().induced_subgraph(&[0, 1]).unwrap(), Graph::complete(2).unwrap());
        assert!(b.induced_subgraph(&[5]).is_err());
        assert!(b.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(Graph::empty(3).unwrap().connected_components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Graph::butterfly().connected_components(), vec![vec![0, 1, 2, 3, 4]]);
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            k2.disjoint_union(&k2).unwrap().connected_components(),
            vec![vec![0, 1], vec![2, 3]]
        );
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn json_round_trip() {
        let b = Graph::butterfly();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(Graph::named("K4").unwrap().edge_count(), 6);
        assert_eq!(Graph::named("Kbar3").unwrap().edge_count(), 0);
        assert_eq!(Graph::named("lambda").unwrap(), Graph::kite_with_tail());
        assert_eq!(Graph::named("C5").unwrap().edge_count(), 5);
        assert_eq!(Graph::named("P3").unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::named("petersen").is_err());
        assert!(Graph::named("C2").is_err());
    }

    #[test]
    fn relabel_and_automorphism() {
        let b = Graph::butterfly();
        let w = Perm::parse_cycles("(1 3)(2 4)", 5).unwrap();
        assert!(b.is_automorphism(&w));
        let x = Perm::parse_cycles("(0 1)", 5).unwrap();
        assert!(!b.is_automorphism(&x));
        assert_eq!(b.relabel(&x).edge_count(), 6);
    }
}
