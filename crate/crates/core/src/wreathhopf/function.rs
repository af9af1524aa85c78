use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graphs::Graph;
use crate::permgroups::Perm;
use crate::youngsets::{Point, YoungSet};

/// A function `F: Y_n → Ĥ`, stored as its support: the points whose value
/// is not the trivial character, each with a nonzero character index.
///
/// Ordered by `n`, then by the sorted support point list, then by the label
/// list. Canonical representatives are the minima of `S_n`-orbits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FunctionF {
    n: usize,
    entries: Vec<(Point, u8)>,
}

impl FunctionF {
    /// The function on `Y_n` with empty support.
    pub fn empty(n: usize) -> FunctionF {
        FunctionF { n, entries: Vec::new() }
    }

    /// Build and validate against the Young set and the character count.
    pub fn new(y: &dyn YoungSet, n_chars: usize, n: usize, entries: Vec<(Point, usize)>) -> Result<FunctionF> {
        let pts = y.points(n);
        let mut out: Vec<(Point, u8)> = Vec::with_capacity(entries.len());
        for (p, l) in entries {
            if l >= n_chars {
                return Err(invalid(format!("label {l} out of range; H has {n_chars} characters")));
            }
            if pts.binary_search(&p).is_err() {
                return Err(invalid(format!("{p:?} is not a point of {}_{n}", y.name())));
            }
            if l != 0 {
                out.push((p, l as u8));
            }
        }
        out.sort();
        if out.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(invalid("a point is given two values"));
        }
        Ok(FunctionF { n, entries: out })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, entries: Vec<(Point, u8)>) -> FunctionF {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        FunctionF { n, entries }
    }

    /// The edge indicator of a graph, as a function on 2-subsets.
    pub fn from_graph(g: &Graph) -> FunctionF {
        let entries = g.edges().into_iter().map(|(a, b)| (vec![a as u8, b as u8], 1)).collect();
        FunctionF { n: g.n(), entries }
    }

    /// The graph whose edges are the support, if every support point is a
    /// 2-subset.
    pub fn to_graph(&self) -> Option<Graph> {
        let mut edges = Vec::new();
        for (p, _) in &self.entries {
            if p.len() != 2 {
                return None;
            }
            edges.push((p[0] as usize, p[1] as usize));
        }
        Graph::new(self.n, &edges).ok()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Point, u8)] {
        &self.entries
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn has_empty_support(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn label(&self, p: &Point) -> usize {
        self.entries
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.entries[i].1 as usize)
            .unwrap_or(0)
    }

    /// `w·F` for a bijection `w` of `[n]`: the value at `Y_w(p)` is `F(p)`.
    pub fn act(&self, y: &dyn YoungSet, w: &Perm) -> FunctionF {
        self.act_images(y, &w.images())
    }

    pub(crate) fn act_images(&self, y: &dyn YoungSet, w: &[usize]) -> FunctionF {
        let mut entries: Vec<(Point, u8)> = self
            .entries
            .iter()
            .map(|(p, l)| (y.map_point(w, self.n, p), *l))
            .collect();
        entries.sort();
        FunctionF { n: self.n, entries }
    }

    /// Push forward along an injection `w: [n] → [m]`, trivial elsewhere.
    pub fn push(&self, y: &dyn YoungSet, w: &[usize], m: usize) -> FunctionF {
        let mut entries: Vec<(Point, u8)> = self.entries.iter().map(|(p, l)| (y.map_point(w, m, p), *l)).collect();
        entries.sort();
        FunctionF { n: m, entries }
    }

    /// `F|_{Y_K}`, transported to `[|K|]` along the increasing bijection.
    /// `k` must be sorted.
    pub fn restrict(&self, y: &dyn YoungSet, k: &[usize]) -> FunctionF {
        let mask = k.iter().fold(0u32, |a, &x| a | 1 << x);
        let mut entries = Vec::new();
        for (p, l) in &self.entries {
            if y.vertex_support(self.n, p) & !mask == 0 {
                let q = y.pull_point(k, self.n, p).expect("point supported in K lies in the image of Y_K");
                entries.push((q, *l));
            }
        }
        entries.sort();
        FunctionF { n: k.len(), entries }
    }

    /// `F ⊔ G` on `[n + m]`, with `G` shifted up by `n`.
    pub fn disjoint_union(&self, y: &dyn YoungSet, other: &FunctionF) -> FunctionF {
        let total = self.n + other.n;
        let left: Vec<usize> = (0..self.n).collect();
        let right: Vec<usize> = (self.n..total).collect();
        let mut entries = self.push(y, &left, total).entries;
        entries.extend(other.push(y, &right, total).entries);
        entries.sort();
        FunctionF { n: total, entries }
    }

    /// Whether every support point lies in `Y_K ⊔ Y_{K^c}`.
    pub fn splits_along(&self, y: &dyn YoungSet, k: u32) -> bool {
        self.entries.iter().all(|(p, _)| {
            let s = y.vertex_support(self.n, p);
            s & !k == 0 || s & k == 0
        })
    }

    /// Primitive: `n ≥ 1` and no proper nonempty `K` splits the support.
    /// Checked as connectivity of the hypergraph of vertex supports.
    pub fn is_primitive(&self, y: &dyn YoungSet) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut comp: Vec<u32> = (0..self.n).map(|i| 1u32 << i).collect();
        for (p, _) in &self.entries {
            let s = y.vertex_support(self.n, p);
            let mut merged = s;
            comp.retain(|&c| {
                if c & s != 0 {
                    merged |= c;
                    false
                } else {
                    true
                }
            });
            comp.push(merged);
        }
        comp.len() == 1
    }
}

impl Ord for FunctionF {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.entries.iter().map(|e| &e.0).cmp(other.entries.iter().map(|e| &e.0)))
            .then_with(|| self.entries.iter().map(|e| e.1).cmp(other.entries.iter().map(|e| e.1)))
    }
}

impl PartialOrd for FunctionF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FunctionF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F(n={}", self.n)?;
        for (p, l) in &self.entries {
            write!(f, ", {p:?}:{l}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    point: Vec<u8>,
    label: usize,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct FunctionJson {
    n: usize,
    support: Vec<EntryJson>,
}

impl Serialize for FunctionF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FunctionJson {
            n: self.n,
            support: self
                .entries
                .iter()
                .map(|(p, l)| EntryJson {
                    point: p.clone(),
                    label: *l as usize,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl FunctionJson {
    pub(crate) fn into_function(self, y: &dyn YoungSet, n_chars: usize) -> Result<FunctionF> {
        FunctionF::new(y, n_chars, self.n, self.support.into_iter().map(|e| (e.point, e.label)).collect())
    }
}
