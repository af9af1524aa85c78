//! Young sets: families of finite sets `Y_n` with an action of injections
//! `[n] → [m]`, such that `Y_∅` is empty and images of `Y_K`, `Y_L` inside
//! `Y_n` intersect in the image of `Y_{K∩L}`.

mod builtin;
mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use builtin::{builtin, parse_young_set};
pub use verify::{verify_axioms, AxiomCheck, AxiomReport};

use crate::error::{invalid, Error, Result};

/// A point of `Y_n`, encoded as a short integer tuple. Each Young set
/// documents its own encoding.
pub type Point = Vec<u8>;

pub trait YoungSet: Send + Sync + fmt::Debug {
    /// Name in the form accepted by [`parse_young_set`].
    fn name(&self) -> String;

    /// Points of `Y_n`, sorted and distinct.
    fn points(&self, n: usize) -> Vec<Point>;

    /// Image of `p ∈ Y_n` under the injection `w: [n] → [m]`, given as the
    /// image list `w[0..n]`.
    fn map_point(&self, w: &[usize], m: usize, p: &Point) -> Point;

    /// The `q ∈ Y_k` with `map_point(w, m, q) == p`, if `p` lies in the
    /// image of `w: [k] → [m]`.
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        self.points(w.len()).into_iter().find(|q| self.map_point(w, m, q) == *p)
    }

    /// The least `K ⊆ [n]` (as a bitmask) with `p` in the image of `Y_K`.
    ///
    /// The default tries dropping each vertex in turn; it relies on the
    /// intersection axiom.
    fn vertex_support(&self, n: usize, p: &Point) -> u32 {
        let mut mask = 0u32;
        for i in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let inside = self
                .points(n - 1)
                .iter()
                .any(|q| self.map_point(&rest, n, q) == *p);
            if !inside {
                mask |= 1 << i;
            }
        }
        mask
    }
}

pub type YoungSetRef = Arc<dyn YoungSet>;

/// Image of `Y_K` in `Y_n` under the increasing inclusion of `K`.
pub fn image_of_subset(y: &dyn YoungSet, n: usize, k: &[usize]) -> Vec<Point> {
    let mut out: Vec<Point> = y.points(k.len()).iter().map(|q| y.map_point(k, n, q)).collect();
    out.sort();
    out
}

/// Disjoint nonempty blocks inside `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartitionBlocks {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartitionBlocks {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<SetPartitionBlocks> {
        let mut seen = BTreeSet::new();
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(invalid("empty block"));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n {
                    return Err(invalid(format!("block element {x} outside 0..{n}")));
                }
                if !seen.insert(x) {
                    return Err(invalid(format!("element {x} lies in two blocks")));
                }
            }
        }
        Ok(SetPartitionBlocks { n, blocks })
    }

    /// `{K, K^c}` with empty parts dropped.
    pub fn bipartition(n: usize, k: &[usize]) -> Result<SetPartitionBlocks> {
        let kc: Vec<usize> = (0..n).filter(|x| !k.contains(x)).collect();
        let blocks = [k.to_vec(), kc].into_iter().filter(|b| !b.is_empty()).collect();
        SetPartitionBlocks::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// `Y_λ`: the union of the images of `Y_B` over the blocks `B`, which the
/// axioms force to be disjoint.
pub fn y_lambda(y: &dyn YoungSet, blocks: &SetPartitionBlocks) -> Result<Vec<Point>> {
    let mut out = BTreeSet::new();
    for b in blocks.blocks() {
        for p in image_of_subset(y, blocks.n(), b) {
            if !out.insert(p.clone()) {
                return Err(Error::AxiomViolation(format!(
                    "{}: point {p:?} lies in the images of two blocks of {:?}",
                    y.name(),
                    blocks.blocks()
                )));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Whether `p ∈ Y_n` lies in `Y_{K} ⊔ Y_{K^c}` for the bitmask `k`.
pub fn splits_along(y: &dyn YoungSet, n: usize, p: &Point, k: u32) -> bool {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let s = y.vertex_support(n, p);
    s & !k == 0 || s & (k & full) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroups::all_perms;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
    }

    #[test]
    fn point_counts() {
        let s2 = builtin("subsets:2").unwrap();
        let id = builtin("id").unwrap();
        let t2 = builtin("tuples:2").unwrap();
        let perms = builtin("nontrivial_permutations").unwrap();
        let ne = builtin("nonempty_subsets").unwrap();
        assert_eq!(s2.points(4).len(), 6);
        assert_eq!(t2.points(2).len(), 4);
        assert_eq!(id.points(3), vec![vec![0], vec![1], vec![2]]);
        for n in 0..=5 {
            assert_eq!(s2.points(n).len(), binom(n, 2));
            assert_eq!(builtin("subsets:3").unwrap().points(n).len(), binom(n, 3));
            assert_eq!(t2.points(n).len(), n * n);
            assert_eq!(builtin("tuples:3").unwrap().points(n).len(), n * n * n);
            assert_eq!(perms.points(n).len(), (1..=n).product::<usize>() - 1);
            assert_eq!(ne.points(n).len(), (1 << n) - 1);
            assert!(builtin("empty").unwrap().points(n).is_empty());
        }
    }

    #[test]
    fn y_lambda_examples() {
        let s2 = builtin("subsets:2").unwrap();
        let b = SetPartitionBlocks::bipartition(5, &[0, 3]).unwrap();
        assert_eq!(y_lambda(s2.as_ref(), &b).unwrap().len(), 4);
        let whole = SetPartitionBlocks::new(5, vec![(0..5).collect()]).unwrap();
        assert_eq!(y_lambda(s2.as_ref(), &whole).unwrap(), s2.points(5));
        let singles = SetPartitionBlocks::new(5, (0..5).map(|i| vec![i]).collect()).unwrap();
        assert!(y_lambda(s2.as_ref(), &singles).unwrap().is_empty());
        assert!(SetPartitionBlocks::new(3, vec![vec![0, 1], vec![1]]).is_err());
        assert!(SetPartitionBlocks::new(3, vec![vec![3]]).is_err());
        assert!(SetPartitionBlocks::new(3, vec![vec![]]).is_err());
    }

    #[test]
    fn bijections_act_compatibly() {
        for name in [
            "empty",
            "id",
            "subsets:2",
            "subsets:3",
            "nonempty_subsets",
            "tuples:2",
            "nontrivial_permutations",
            "product(id;subsets:2)",
            "coproduct(id;tuples:2)",
        ] {
            let y = builtin(name).unwrap();
            for n in 0..=4 {
                let pts = y.points(n);
                for w in all_perms(n) {
                    let img = w.images();
                    let mut mapped: Vec<Point> = pts.iter().map(|p| y.map_point(&img, n, p)).collect();
                    mapped.sort();
                    assert_eq!(mapped, pts, "{name} n={n}");
                    // Y_{wK} = w · Y_K
                    for kmask in 0u32..1 << n {
                        let k: Vec<usize> = (0..n).filter(|&i| kmask >> i & 1 == 1).collect();
                        let mut wk: Vec<usize> = k.iter().map(|&i| img[i]).collect();
                        wk.sort_unstable();
                        let mut pushed: Vec<Point> = image_of_subset(y.as_ref(), n, &k)
                            .iter()
                            .map(|p| y.map_point(&img, n, p))
                            .collect();
                        pushed.sort();
                        assert_eq!(pushed, image_of_subset(y.as_ref(), n, &wk), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn vertex_supports_match_default() {
        #[derive(Debug)]
        struct Plain(YoungSetRef);
        impl YoungSet for Plain {
            fn name(&self) -> String {
                self.0.name()
            }
            fn points(&self, n: usize) -> Vec<Point> {
                self.0.points(n)
            }
            fn map_point(&self, w: &[usize], m: usize, p: &Point) -> Point {
                self.0.map_point(w, m, p)
            }
        }
        for name in ["id", "subsets:2", "tuples:2", "nontrivial_permutations", "nonempty_subsets", "coproduct(id;subsets:2)", "product(id;id)"] {
            let y = builtin(name).unwrap();
            let plain = Plain(y.clone());
            for n in 0..=4 {
                for p in y.points(n) {
                    assert_eq!(y.vertex_support(n, &p), plain.vertex_support(n, &p), "{name} {p:?}");
                }
            }
        }
    }

    #[test]
    fn pull_inverts_map() {
        for name in ["empty", "id", "subsets:2", "tuples:2", "nontrivial_permutations", "nonempty_subsets", "coproduct(id;subsets:2)", "product(id;tuples:2)"] {
            let y = builtin(name).unwrap();
            for (w, m) in [(vec![], 3), (vec![2], 3), (vec![0, 2], 3), (vec![3, 1], 4), (vec![1, 0, 2], 3), (vec![4, 0, 2], 5)] {
                let mut seen = 0;
                for p in y.points(m) {
                    let q = y.pull_point(&w, m, &p);
                    let default = y.points(w.len()).into_iter().find(|q| y.map_point(&w, m, q) == p);
                    assert_eq!(q, default, "{name} {w:?} {p:?}");
                    if let Some(q) = q {
                        assert_eq!(y.map_point(&w, m, &q), p);
                        seen += 1;
                    }
                }
                assert_eq!(seen, y.points(w.len()).len(), "{name} {w:?}");
            }
        }
    }

    #[test]
    fn splitting() {
        let s2 = builtin("subsets:2").unwrap();
        assert!(splits_along(s2.as_ref(), 4, &vec![0, 1], 0b0011));
        assert!(splits_along(s2.as_ref(), 4, &vec![2, 3], 0b0011));
        assert!(!splits_along(s2.as_ref(), 4, &vec![1, 2], 0b0011));
    }
}
