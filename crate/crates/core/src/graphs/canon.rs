//! Canonical labelling and automorphism groups.
//!
//! The canonical graph is the relabelling whose upper-triangle adjacency
//! bitstring (row by row, `(0,1),(0,2),..,(1,2),..`) is lexicographically
//! largest. Equivalently its sorted edge list is the smallest in the orbit.

use std::cmp::Ordering;

use serde::Serialize;

use super::graph::Graph;
use crate::error::Result;
use crate::limits::{self, Limits};
use crate::par;
use crate::permgroups::{Perm, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalWitness {
    pub canonical: Graph,
    /// Maps input vertices to canonical vertices.
    pub relabel: Perm,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalWitness> {
    canonical_form_with(g, &limits::current())
}

pub fn canonical_form_with(g: &Graph, lim: &Limits) -> Result<CanonicalWitness> {
    limits::check("vertex count", g.n(), lim.vertex_cap)?;
    let n = g.n();
    let mut s = Search {
        g,
        best: None,
        autos: twin_transpositions(g),
    };
    let mut order = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    let start = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    s.dfs(&mut order, &mut rows, start);
    let (best_rows, best_order) = s.best.expect("search visits at least one leaf");
    if best_rows == identity_rows(g) {
        return Ok(CanonicalWitness {
            canonical: g.clone(),
            relabel: Perm::identity(n),
        });
    }
    let mut img = vec![0usize; n];
    for (pos, &v) in best_order.iter().enumerate() {
        img[v] = pos;
    }
    let relabel = Perm::from_images(img).expect("search order is a bijection");
    let canonical = g.relabel(&relabel);
    debug_assert_eq!(identity_rows(&canonical), best_rows);
    Ok(CanonicalWitness { canonical, relabel })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.canonical == canonical_form(b)?.canonical)
}

fn row_bits(g: &Graph, v: usize, later: impl Iterator<Item = (usize, usize)>) -> u32 {
    let mut r = 0u32;
    for (pos, u) in later {
        if g.has_edge(v, u) {
            r |= 1 << (31 - pos);
        }
    }
    r
}

fn identity_rows(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|i| row_bits(g, i, (i + 1..g.n()).map(|q| (q, q))))
        .collect()
}

/// Transpositions `(u v)` where `u` and `v` have the same neighbours apart
/// from each other.
fn twin_transpositions(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mask = !((1u32 << u) | (1u32 << v));
            if g.neighbours(u) & mask == g.neighbours(v) & mask {
                let mut img: Vec<usize> = (0..n).collect();
                img.swap(u, v);
                out.push(img);
            }
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u32>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn dfs(&mut self, order: &mut Vec<usize>, rows: &mut Vec<u32>, cells: Vec<Vec<usize>>) {
        let depth = order.len();
        if cells.is_empty() {
            self.leaf(order, rows);
            return;
        }
        let g = self.g;
        let mut children: Vec<(u32, usize, Vec<Vec<usize>>)> = cells[0]
            .iter()
            .map(|&v| {
                let mut row = 0u32;
                let mut pos = depth + 1;
                let mut next = Vec::with_capacity(cells.len() + 1);
                for (ci, cell) in cells.iter().enumerate() {
                    let (nb, rest): (Vec<usize>, Vec<usize>) = cell
                        .iter()
                        .copied()
                        .filter(|&u| !(ci == 0 && u == v))
                        .partition(|&u| g.has_edge(v, u));
                    for q in pos..pos + nb.len() {
                        row |= 1 << (31 - q);
                    }
                    pos += nb.len() + rest.len();
                    if !nb.is_empty() {
                        next.push(nb);
                    }
                    if !rest.is_empty() {
                        next.push(rest);
                    }
                }
                (row, v, next)
            })
            .collect();
        let max = children.iter().map(|c| c.0).max().expect("first cell is nonempty");
        rows.push(max);
        if let Some((best_rows, _)) = &self.best {
            if rows[..] < best_rows[..=depth] {
                rows.pop();
                return;
            }
        }
        children.retain(|c| c.0 == max);
        let mut explored: Vec<usize> = Vec::new();
        let mut known = usize::MAX;
        let mut uf: Vec<usize> = Vec::new();
        for (_, v, next) in children {
            if known != self.autos.len() {
                known = self.autos.len();
                uf = orbit_partition(g.n(), &self.autos, order);
            }
            if explored.iter().any(|&e| find(&mut uf, e) == find(&mut uf, v)) {
                continue;
            }
            explored.push(v);
            order.push(v);
            self.dfs(order, rows, next);
            order.pop();
            // a sibling subtree may have raised the bar past this prefix
            if let Some((best_rows, _)) = &self.best {
                if rows[..] < best_rows[..=depth] {
                    break;
                }
            }
        }
        rows.pop();
    }

    fn leaf(&mut self, order: &[usize], rows: &[u32]) {
        match &self.best {
            None => self.best = Some((rows.to_vec(), order.to_vec())),
            Some((best_rows, best_order)) => match rows.cmp(best_rows) {
                Ordering::Greater => self.best = Some((rows.to_vec(), order.to_vec())),
                Ordering::Equal => {
                    let mut img = vec![0usize; order.len()];
                    for (p, &v) in order.iter().enumerate() {
                        img[v] = best_order[p];
                    }
                    if img.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(img);
                    }
                }
                Ordering::Less => {}
            },
        }
    }
}

/// Union-find over vertices, joined by the known automorphisms that fix
/// `prefix` pointwise.
fn orbit_partition(n: usize, autos: &[Vec<usize>], prefix: &[usize]) -> Vec<usize> {
    let mut uf: Vec<usize> = (0..n).collect();
    for a in autos {
        if prefix.iter().all(|&p| a[p] == p) {
            for (i, &x) in a.iter().enumerate() {
                let (ri, rx) = (find(&mut uf, i), find(&mut uf, x));
                if ri != rx {
                    uf[ri.max(rx)] = ri.min(rx);
                }
            }
        }
    }
    uf
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// Colour refinement (1-dimensional Weisfeiler–Leman) started from degrees.
/// Colours are isomorphism invariant, so automorphisms preserve them.
pub fn refined_colours(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| g.has_edge(v, u)).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with(g, &limits::current())
}

/// All automorphisms by backtracking over vertex images, constrained by
/// refined colours and adjacency to the already-mapped vertices. Branches on
/// the image of the first vertex run in parallel.
pub fn automorphism_group_with(g: &Graph, lim: &Limits) -> Result<PermGroup> {
    limits::check("vertex count", g.n(), lim.vertex_cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let colour = refined_colours(g);
    let seq = search_order(g, &colour);
    let first = seq[0];
    let starts: Vec<usize> = (0..n).filter(|&w| colour[w] == colour[first]).collect();
    let branches = par::map(&starts, |&w| {
        let mut img = vec![usize::MAX; n];
        let mut used = 0u32;
        img[first] = w;
        used |= 1 << w;
        let mut out = Vec::new();
        extend(g, &colour, &seq, 1, &mut img, &mut used, &mut out, lim.group_order_cap)?;
        Ok(out)
    });
    let mut elements = Vec::new();
    for b in branches {
        let b: Vec<Perm> = b?;
        elements.extend(b);
        limits::check("group order", elements.len(), lim.group_order_cap)?;
    }
    Ok(PermGroup::from_elements_unchecked(n, elements))
}

/// Visit vertices so that each one is adjacent to as many earlier ones as
/// possible, breaking ties toward rarer colours.
fn search_order(g: &Graph, colour: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in colour {
        size[c] += 1;
    }
    let mut placed = 0u32;
    let mut seq = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let links = (g.neighbours(v) & placed).count_ones() as usize;
                (std::cmp::Reverse(links), size[colour[v]], v)
            })
            .expect("unplaced vertex remains");
        placed |= 1 << v;
        seq.push(v);
    }
    seq
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    colour: &[usize],
    seq: &[usize],
    k: usize,
    img: &mut [usize],
    used: &mut u32,
    out: &mut Vec<Perm>,
    cap: usize,
) -> Result<()> {
    if k == seq.len() {
        out.push(Perm::from_u8_unchecked(img.iter().map(|&x| x as u8).collect()));
        return limits::check("group order", out.len(), cap);
    }
    let v = seq[k];
    for w in 0..g.n() {
        if *used >> w & 1 == 1 || colour[w] != colour[v] {
            continue;
        }
        if seq[..k].iter().any(|&u| g.has_edge(u, v) != g.has_edge(img[u], w)) {
            continue;
        }
        img[v] = w;
        *used |= 1 << w;
        extend(g, colour, seq, k + 1, img, used, out, cap)?;
        *used &= !(1 << w);
        img[v] = usize::MAX;
    }
    Ok(())
}

/// Full scan of all n! permutations. Only offered for n ≤ 7; used to check
/// the backtracking search.
pub fn automorphism_group_exhaustive(g: &Graph) -> Result<PermGroup> {
    limits::check("vertex count for exhaustive scan", g.n(), 7)?;
    let elements = crate::permgroups::all_perms(g.n())
        .into_iter()
        .filter(|p| g.is_automorphism(p))
        .collect();
    Ok(PermGroup::from_elements_unchecked(g.n(), elements))
}
