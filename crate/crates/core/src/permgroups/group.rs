use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use super::perm::{all_perms, Perm};
use crate::error::{invalid, Result};
use crate::limits::{self, Limits};

/// A finite group whose elements are addressed by index `0..order()`.
pub trait Group: Sync {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn identity(&self) -> usize;

    /// A generating set. The default picks one greedily.
    fn generators(&self) -> Vec<usize> {
        greedy_generators(self)
    }

    fn element_order(&self, a: usize) -> usize {
        let id = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn pow(&self, a: usize, k: usize) -> usize {
        let mut r = self.identity();
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }
}

/// Indices of the subgroup generated by `gens`.
pub fn closure_indices<G: Group + ?Sized>(g: &G, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let id = g.identity();
    seen[id] = true;
    let mut out = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A small generating set: scan elements in index order and keep any element
/// not already in the span of the ones kept so far.
pub fn greedy_generators<G: Group + ?Sized>(g: &G) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![false; g.order()];
    span[g.identity()] = true;
    for a in 0..g.order() {
        if span[a] {
            continue;
        }
        gens.push(a);
        for x in closure_indices(g, &gens) {
            span[x] = true;
        }
    }
    gens
}

/// A fully enumerated permutation group. Elements are sorted by image array,
/// so the identity is element 0.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    gens: Vec<usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}
impl Eq for PermGroup {}

impl PermGroup {
    /// Build from a closed, duplicate-free element list. Sorts the list.
    pub(crate) fn from_elements_unchecked(degree: usize, mut elements: Vec<Perm>) -> PermGroup {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut g = PermGroup {
            degree,
            elements,
            index,
            gens: Vec::new(),
        };
        g.gens = greedy_generators(&g);
        g
    }

    /// Build from an element list, checking closure, identity and degree.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<PermGroup> {
        if elements.iter().any(|p| p.degree() != degree) {
            return Err(invalid("element degree mismatch"));
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        let set: std::collections::HashSet<&Perm> = elements.iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(invalid("element list lacks the identity"));
        }
        for a in &elements {
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(invalid("element list is not closed under composition"));
                }
            }
        }
        Ok(PermGroup::from_elements_unchecked(degree, elements))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_elements_unchecked(degree, vec![Perm::identity(degree)])
    }

    pub fn symmetric(n: usize) -> Result<PermGroup> {
        Self::symmetric_with(n, &limits::current())
    }

    pub fn symmetric_with(n: usize, lim: &Limits) -> Result<PermGroup> {
        let order = (1..=n).try_fold(1usize, |a, b| a.checked_mul(b)).unwrap_or(usize::MAX);
        limits::check("group order", order, lim.group_order_cap)?;
        Ok(PermGroup::from_elements_unchecked(n, all_perms(n)))
    }

    /// The subgroup generated by `gens`, fully enumerated.
    pub fn close_generators(gens: &[Perm], degree: usize) -> Result<PermGroup> {
        Self::close_generators_with(gens, degree, &limits::current())
    }

    pub fn close_generators_with(gens: &[Perm], degree: usize, lim: &Limits) -> Result<PermGroup> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(invalid("generator degree mismatch"));
        }
        let id = Perm::identity(degree);
        let mut index: HashMap<Perm, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for s in gens {
                let y = x.compose(s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                    limits::check("group order", elements.len(), lim.group_order_cap)?;
                }
            }
        }
        Ok(PermGroup::from_elements_unchecked(degree, elements))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.gens.iter().map(|&i| self.elements[i].clone()).collect()
    }

    /// The subgroup of elements satisfying `pred`. The caller guarantees the
    /// selected set is a subgroup.
    pub fn filter_subgroup(&self, pred: impl Fn(&Perm) -> bool) -> PermGroup {
        let elts = self.elements.iter().filter(|p| pred(p)).cloned().collect();
        PermGroup::from_elements_unchecked(self.degree, elts)
    }

    /// Elements mapping the vertex set `u` onto itself.
    pub fn set_stabilizer(&self, u: &[usize]) -> Result<PermGroup> {
        let mut mask = vec![false; self.degree];
        for &x in u {
            if x >= self.degree {
                return Err(invalid(format!("vertex {x} out of range")));
            }
            mask[x] = true;
        }
        Ok(self.filter_subgroup(|p| (0..self.degree).all(|i| !mask[i] || mask[p.apply(i)])))
    }

    /// Elements fixing every point of `pts`.
    pub fn pointwise_stabilizer(&self, pts: &[usize]) -> PermGroup {
        self.filter_subgroup(|p| pts.iter().all(|&x| p.apply(x) == x))
    }

    /// Index map of `self`'s elements inside `g`. Fails if some element is missing.
    pub fn embedding_into(&self, g: &PermGroup) -> Result<Vec<usize>> {
        self.elements
            .iter()
            .map(|p| {
                g.index_of(p)
                    .ok_or_else(|| invalid(format!("{p} is not an element of the ambient group")))
            })
            .collect()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|p| g.contains(p))
    }
}

impl Group for PermGroup {
    fn order(&self) -> usize {
        self.elements.len()
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }
    fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }
    fn identity(&self) -> usize {
        0
    }
    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }
    fn element_order(&self, a: usize) -> usize {
        self.elements[a].order()
    }
}

/// The image of `S_k × S_l` in `S_{k+l}` under the block embedding.
#[derive(Clone, Debug)]
pub struct YoungEmbedding {
    pub k: usize,
    pub l: usize,
    pub image: PermGroup,
}

impl YoungEmbedding {
    pub fn embed(&self, a: &Perm, b: &Perm) -> Perm {
        a.direct_sum(b)
    }
}

pub fn young_embedding(k: usize, l: usize) -> Result<YoungEmbedding> {
    let sk = PermGroup::symmetric(k)?;
    let sl = PermGroup::symmetric(l)?;
    let mut elts = Vec::with_capacity(sk.order() * sl.order());
    for a in sk.elements() {
        for b in sl.elements() {
            elts.push(a.direct_sum(b));
        }
    }
    Ok(YoungEmbedding {
        k,
        l,
        image: PermGroup::from_elements_unchecked(k + l, elts),
    })
}
