use serde::Serialize;

use super::group::Group;
use crate::error::Result;
use crate::limits::{self, Limits};

/// Conjugacy classes in canonical order: by element order, then class size,
/// then least element index. Each class is represented by its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClasses {
    pub group_order: usize,
    pub class_of: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub element_orders: Vec<usize>,
    /// `inverse_class[c]` is the class of the inverses of class `c`.
    pub inverse_class: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub representative: usize,
    pub size: usize,
    pub element_order: usize,
}

impl ConjClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.len()).collect()
    }

    pub fn rep(&self, c: usize) -> usize {
        self.members[c][0]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.members.iter().map(|m| m[0]).collect()
    }

    pub fn summary(&self) -> Vec<ClassSummary> {
        (0..self.len())
            .map(|c| ClassSummary {
                representative: self.rep(c),
                size: self.size(c),
                element_order: self.element_orders[c],
            })
            .collect()
    }

    /// Build from an unordered list of classes (each a list of element indices).
    pub(crate) fn from_unordered<G: Group + ?Sized>(g: &G, mut raw: Vec<Vec<usize>>, orders: Vec<usize>) -> ConjClasses {
        for m in raw.iter_mut() {
            m.sort_unstable();
        }
        let mut idx: Vec<usize> = (0..raw.len()).collect();
        idx.sort_by_key(|&i| (orders[i], raw[i].len(), raw[i][0]));
        let members: Vec<Vec<usize>> = idx.iter().map(|&i| raw[i].clone()).collect();
        let element_orders: Vec<usize> = idx.iter().map(|&i| orders[i]).collect();
        let mut class_of = vec![0; g.order()];
        for (c, m) in members.iter().enumerate() {
            for &x in m {
                class_of[x] = c;
            }
        }
        let inverse_class = members.iter().map(|m| class_of[g.inv(m[0])]).collect();
        ConjClasses {
            group_order: g.order(),
            class_of,
            members,
            element_orders,
            inverse_class,
        }
    }

    /// For class `c` with representative `x` of order `o`, the classes of
    /// `x^0, x^1, …, x^(o-1)`.
    pub fn power_classes<G: Group + ?Sized>(&self, g: &G, c: usize) -> Vec<usize> {
        let x = self.rep(c);
        let o = self.element_orders[c];
        let mut out = Vec::with_capacity(o);
        let mut y = g.identity();
        for _ in 0..o {
            out.push(self.class_of[y]);
            y = g.mul(y, x);
        }
        out
    }
}

pub fn conjugacy_classes<G: Group + ?Sized>(g: &G) -> Result<ConjClasses> {
    conjugacy_classes_with(g, &limits::current())
}

/// Classes by closing each element under conjugation by the generators.
pub fn conjugacy_classes_with<G: Group + ?Sized>(g: &G, lim: &Limits) -> Result<ConjClasses> {
    limits::check("group order", g.order(), lim.group_order_cap)?;
    let gens: Vec<(usize, usize)> = g.generators().into_iter().map(|s| (s, g.inv(s))).collect();
    let mut assigned = vec![false; g.order()];
    let mut raw = Vec::new();
    let mut orders = Vec::new();
    for x in 0..g.order() {
        if assigned[x] {
            continue;
        }
        assigned[x] = true;
        let mut class = vec![x];
        let mut head = 0;
        while head < class.len() {
            let y = class[head];
            head += 1;
            for &(s, si) in &gens {
                let z = g.mul(g.mul(s, y), si);
                if !assigned[z] {
                    assigned[z] = true;
                    class.push(z);
                }
            }
        }
        orders.push(g.element_order(x));
        raw.push(class);
    }
    Ok(ConjClasses::from_unordered(g, raw, orders))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroups::{FiniteGroup, Perm, PermGroup};

    /// Brute-force classes: conjugate by every element.
    fn brute_sizes<G: Group>(g: &G) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut sizes = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let mut cl: Vec<usize> = (0..g.order()).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
            cl.sort();
            cl.dedup();
            for &y in &cl {
                seen[y] = true;
            }
            sizes.push(cl.len());
        }
        sizes.sort();
        sizes
    }

    #[test]
    fn s3_classes() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let cc = conjugacy_classes(&s3).unwrap();
        assert_eq!(cc.sizes(), vec![1, 3, 2]);
        assert_eq!(cc.element_orders, vec![1, 2, 3]);
        assert_eq!(brute_sizes(&s3), vec![1, 2, 3]);
    }

    #[test]
    fn trivial_and_s0() {
        assert_eq!(conjugacy_classes(&PermGroup::trivial(3)).unwrap().len(), 1);
        let s0 = PermGroup::symmetric(0).unwrap();
        assert_eq!(conjugacy_classes(&s0).unwrap().len(), 1);
    }

    #[test]
    fn class_equation_and_inverse_classes() {
        let s5 = PermGroup::symmetric(5).unwrap();
        let cc = conjugacy_classes(&s5).unwrap();
        assert_eq!(cc.len(), 7);
        assert_eq!(cc.sizes().iter().sum::<usize>(), 120);
        let mut a = cc.sizes();
        a.sort();
        assert_eq!(a, brute_sizes(&s5));
        // symmetric groups are ambivalent
        assert!((0..cc.len()).all(|c| cc.inverse_class[c] == c));
        let c5 = FiniteGroup::cyclic(5).unwrap();
        let cc5 = conjugacy_classes(&c5).unwrap();
        assert_eq!(cc5.len(), 5);
        assert_eq!(cc5.inverse_class[1], 4);
    }

    #[test]
    fn invariant_under_input_reordering() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let mut elts: Vec<Perm> = s4.elements().to_vec();
        elts.reverse();
        let g2 = PermGroup::from_elements(4, elts).unwrap();
        assert_eq!(conjugacy_classes(&s4).unwrap(), conjugacy_classes(&g2).unwrap());
    }

    #[test]
    fn power_classes_of_4_cycle() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let cc = conjugacy_classes(&s4).unwrap();
        let c = (0..cc.len()).find(|&c| cc.element_orders[c] == 4).unwrap();
        let pc = cc.power_classes(&s4, c);
        assert_eq!(pc.len(), 4);
        assert_eq!(pc[0], 0);
        assert_eq!(pc[1], c);
        assert_eq!(cc.element_orders[pc[2]], 2);
        assert_eq!(cc.size(pc[2]), 3);
    }

    #[test]
    fn cap_enforced() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let lim = Limits {
            group_order_cap: 10,
            ..Limits::default()
        };
        assert!(conjugacy_classes_with(&s4, &lim).is_err());
    }
}
