use super::group::Group;
use crate::error::{invalid, Result};

/// A group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    identity: usize,
    labels: Option<Vec<String>>,
}

/// Associativity is checked on every triple up to this order and on a
/// deterministic sample above it.
const FULL_ASSOC_CHECK: usize = 128;

impl FiniteGroup {
    /// Validate a row-major multiplication table (`table[a*order+b] = a·b`).
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<FiniteGroup> {
        if order == 0 || table.len() != order * order {
            return Err(invalid("table size does not match order"));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(invalid("table entry out of range"));
        }
        // rows and columns must be permutations (Latin square)
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                let r = table[a * order + b] as usize;
                let c = table[b * order + a] as usize;
                if row[r] || col[c] {
                    return Err(invalid("table is not a Latin square"));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] as usize == a && table[a * order + e] as usize == a))
            .ok_or_else(|| invalid("no identity element"))?;
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a * order + b] as usize == identity)
                .ok_or_else(|| invalid("missing inverse"))?;
            inverse[a] = b as u32;
        }
        let g = FiniteGroup {
            order,
            table,
            inverse,
            identity,
            labels: None,
        };
        let mul = |a: usize, b: usize| g.table[a * order + b] as usize;
        if order <= FULL_ASSOC_CHECK {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul(a, b);
                    for c in 0..order {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(invalid(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let step = |i: usize| (i * 7919 + 13) % order;
            for i in 0..4096 {
                let (a, b, c) = (step(i), step(i + 1), step(3 * i + 2));
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(invalid(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        Ok(g)
    }

    /// Tabulate a group from an element list and a multiplication on indices.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u32);
            }
        }
        FiniteGroup::from_table(order, table)
    }

    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        FiniteGroup::from_fn(n, |a, b| (a + b) % n)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FiniteGroup> {
        if labels.len() != self.order {
            return Err(invalid("label count does not match order"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The subgroup on the given element indices, re-indexed `0..elems.len()`
    /// in the given order. Returns the group and the embedding.
    pub fn subgroup(&self, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            if e >= self.order || pos[e] != usize::MAX {
                return Err(invalid("bad subgroup element list"));
            }
            pos[e] = i;
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in elems {
            for &b in elems {
                let c = pos[self.mul(a, b)];
                if c == usize::MAX {
                    return Err(invalid("element list is not closed"));
                }
                table.push(c as u32);
            }
        }
        Ok((FiniteGroup::from_table(k, table)?, elems.to_vec()))
    }
}

impl Group for FiniteGroup {
    fn order(&self) -> usize {
        self.order
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }
    fn identity(&self) -> usize {
        self.identity
    }
}

/// `A × B` with element `(a, b)` at index `a·|B| + b`.
pub struct DirectProduct<'a, A: Group, B: Group> {
    pub a: &'a A,
    pub b: &'a B,
}

impl<'a, A: Group, B: Group> DirectProduct<'a, A, B> {
    pub fn new(a: &'a A, b: &'a B) -> Self {
        DirectProduct { a, b }
    }
    pub fn pair(&self, x: usize) -> (usize, usize) {
        (x / self.b.order(), x % self.b.order())
    }
    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.b.order() + b
    }
}

impl<'a, A: Group, B: Group> Group for DirectProduct<'a, A, B> {
    fn order(&self) -> usize {
        self.a.order() * self.b.order()
    }
    fn mul(&self, x: usize, y: usize) -> usize {
        let (a1, b1) = self.pair(x);
        let (a2, b2) = self.pair(y);
        self.index(self.a.mul(a1, a2), self.b.mul(b1, b2))
    }
    fn inv(&self, x: usize) -> usize {
        let (a, b) = self.pair(x);
        self.index(self.a.inv(a), self.b.inv(b))
    }
    fn identity(&self) -> usize {
        self.index(self.a.identity(), self.b.identity())
    }
    fn generators(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.a.generators().into_iter().map(|a| self.index(a, self.b.identity())).collect();
        g.extend(self.b.generators().into_iter().map(|b| self.index(self.a.identity(), b)));
        g
    }
}
