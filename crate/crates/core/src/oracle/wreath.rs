use std::collections::HashMap;
use std::sync::Arc;

use crate::characters::{character_table_for_classes, CharacterTable};
use crate::error::{invalid, Result};
use crate::limits::{self, Limits};
use crate::permgroups::{all_perms, conjugacy_classes, ConjClasses, FiniteGroup, Group, Perm};
use crate::wreathhopf::Instance;
use crate::youngsets::Point;

/// `G_n(Y, H) = S_n ⋉ Map(Y_n, H)`, tabulated.
///
/// Element `(σ, f)` has index `s·|H|^m + Σ_y f(y)·|H|^y`, where `s` is the
/// position of `σ` in the lexicographic list of permutations and `m = |Y_n|`.
/// Multiplication is `(w₁,f₁)(w₂,f₂) = (w₁w₂, y ↦ f₁(w₂·y) + f₂(y))`.
pub struct WreathGroup {
    pub n: usize,
    pub group: FiniteGroup,
    pub classes: Arc<ConjClasses>,
    perms: Vec<Perm>,
    points: Vec<Point>,
    point_map: Vec<Vec<usize>>,
    h_order: usize,
    base: usize,
    table: std::sync::OnceLock<CharacterTable>,
}

/// A subgroup of a wreath group with its own tabulation and classes.
pub struct SubgroupHandle {
    pub group: FiniteGroup,
    /// `emb[i]` is the index in the ambient group of subgroup element `i`.
    pub emb: Vec<usize>,
    pub classes: Arc<ConjClasses>,
    position: HashMap<usize, usize>,
}

impl SubgroupHandle {
    fn new(ambient: &FiniteGroup, elems: Vec<usize>) -> Result<SubgroupHandle> {
        let (group, emb) = ambient.subgroup(&elems)?;
        let classes = Arc::new(conjugacy_classes(&group)?);
        let position = emb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Ok(SubgroupHandle {
            group,
            emb,
            classes,
            position,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Position of an ambient element, if it lies in the subgroup.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.position.get(&x).copied()
    }
}

impl WreathGroup {
    pub fn build(inst: &Instance, n: usize) -> Result<WreathGroup> {
        Self::build_with(inst, n, &limits::current())
    }

    pub fn build_with(inst: &Instance, n: usize, lim: &Limits) -> Result<WreathGroup> {
        let y = inst.young();
        let points = y.points(n);
        let q = inst.h().order();
        let m = points.len();
        let fact: u128 = (1..=n as u128).product();
        let size = (q as u128).checked_pow(m as u32).and_then(|b| b.checked_mul(fact)).unwrap_or(u128::MAX);
        limits::check("wreath group order", size.min(usize::MAX as u128) as usize, lim.oracle_cap)?;
        let base = q.pow(m as u32);
        let perms = all_perms(n);
        let index: HashMap<&Point, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let point_map: Vec<Vec<usize>> = perms
            .iter()
            .map(|w| {
                let img = w.images();
                points.iter().map(|p| index[&y.map_point(&img, n, p)]).collect()
            })
            .collect();
        let perm_index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let compose: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| perm_index[&a.compose(b)]).collect())
            .collect();
        let h = inst.h();
        let order = size as usize;
        let decode = |x: usize| -> (usize, Vec<usize>) {
            let mut code = x % base;
            let f = (0..m)
                .map(|_| {
                    let d = code % q;
                    code /= q;
                    d
                })
                .collect();
            (x / base, f)
        };
        let group = FiniteGroup::from_fn(order, |a, b| {
            let (s1, f1) = decode(a);
            let (s2, f2) = decode(b);
            let mut code = 0;
            for yi in (0..m).rev() {
                code = code * q + h.add(f1[point_map[s2][yi]], f2[yi]);
            }
            compose[s1][s2] * base + code
        })?;
        let classes = Arc::new(conjugacy_classes(&group)?);
        Ok(WreathGroup {
            n,
            group,
            classes,
            perms,
            points,
            point_map,
            h_order: q,
            base,
            table: std::sync::OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The permutation and the function of an element.
    pub fn decode(&self, x: usize) -> (&Perm, Vec<usize>) {
        let mut code = x % self.base;
        let f = (0..self.points.len())
            .map(|_| {
                let d = code % self.h_order;
                code /= self.h_order;
                d
            })
            .collect();
        (&self.perms[x / self.base], f)
    }

    pub fn encode(&self, w: &Perm, f: &[usize]) -> usize {
        let s = self.perms.binary_search(w).expect("permutation of the right degree");
        let code = f.iter().rev().fold(0, |acc, &d| acc * self.h_order + d);
        s * self.base + code
    }

    /// Index of the point `Y_w(p)` for the point with index `p`.
    pub fn map_point_index(&self, w: &Perm, p: usize) -> usize {
        let s = self.perms.binary_search(w).expect("permutation of the right degree");
        self.point_map[s][p]
    }

    pub fn character_table(&self) -> Result<&CharacterTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let t = character_table_for_classes(&self.group, self.classes.clone())?;
        Ok(self.table.get_or_init(|| t))
    }

    fn subgroup(&self, pred: impl Fn(&Perm, &[usize]) -> bool) -> Result<SubgroupHandle> {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&x| {
                let (w, f) = self.decode(x);
                pred(w, &f)
            })
            .collect();
        SubgroupHandle::new(&self.group, elems)
    }

    /// Points lying in `Y_λ`, the union of the `Y_B` over the blocks.
    fn in_y_lambda(&self, inst: &Instance, blocks: &[u32]) -> Vec<bool> {
        self.points
            .iter()
            .map(|p| {
                let s = inst.young().vertex_support(self.n, p);
                blocks.iter().any(|&b| s & !b == 0)
            })
            .collect()
    }

    fn block_masks(&self, blocks: &[Vec<usize>]) -> Result<Vec<u32>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for b in blocks.iter().filter(|b| !b.is_empty()) {
            let m = b.iter().try_fold(0u32, |acc, &x| {
                if x >= self.n || (acc | seen) >> x & 1 == 1 {
                    Err(invalid(format!("blocks {blocks:?} do not partition 0..{}", self.n)))
                } else {
                    Ok(acc | 1 << x)
                }
            })?;
            seen |= m;
            out.push(m);
        }
        if seen != ((1u64 << self.n) - 1) as u32 {
            return Err(invalid(format!("blocks {blocks:?} do not cover 0..{}", self.n)));
        }
        Ok(out)
    }

    fn preserves(w: &Perm, blocks: &[u32]) -> bool {
        blocks.iter().all(|&b| (0..32).filter(|&i| b >> i & 1 == 1).all(|i| b >> w.apply(i) & 1 == 1))
    }

    /// `G_λ = S_λ ⋉ Map(Y_λ, H)`. Empty blocks are ignored.
    pub fn young_subgroup(&self, inst: &Instance, blocks: &[Vec<usize>]) -> Result<SubgroupHandle> {
        let masks = self.block_masks(blocks)?;
        let inside = self.in_y_lambda(inst, &masks);
        self.subgroup(|w, f| Self::preserves(w, &masks) && f.iter().zip(&inside).all(|(&v, &i)| i || v == 0))
    }

    /// `P_λ = S_λ ⋉ Map(Y_n, H)`.
    pub fn parabolic_subgroup(&self, blocks: &[Vec<usize>]) -> Result<SubgroupHandle> {
        let masks = self.block_masks(blocks)?;
        self.subgroup(|w, _| Self::preserves(w, &masks))
    }

    /// `U_λ = Map(Y_n ∖ Y_λ, H)`.
    pub fn unipotent_subgroup(&self, inst: &Instance, blocks: &[Vec<usize>]) -> Result<SubgroupHandle> {
        let masks = self.block_masks(blocks)?;
        let inside = self.in_y_lambda(inst, &masks);
        self.subgroup(|w, f| w.is_identity() && f.iter().zip(&inside).all(|(&v, &i)| !i || v == 0))
    }

    /// The base group `Map(Y_n, H)`.
    pub fn base_subgroup(&self) -> Result<SubgroupHandle> {
        self.subgroup(|w, _| w.is_identity())
    }

    /// `S_n` as the elements with trivial function part.
    pub fn symmetric_subgroup(&self) -> Result<SubgroupHandle> {
        self.subgroup(|_, f| f.iter().all(|&v| v == 0))
    }

    /// `Aut F ⋉ Map(Y_n, H)` for a permutation group given by its elements.
    pub(crate) fn stabilizer_subgroup(&self, aut: &[Perm]) -> Result<SubgroupHandle> {
        self.subgroup(|w, _| aut.binary_search(w).is_ok())
    }

    /// For `x ∈ G_λ` with `λ = ([0,k), [k,n))`: the components in `G_k` and `G_{n-k}`.
    pub(crate) fn split_element(&self, inst: &Instance, x: usize, left: &WreathGroup, right: &WreathGroup) -> (usize, usize) {
        let k = left.n;
        let (w, f) = self.decode(x);
        let w1 = Perm::from_images((0..k).map(|i| w.apply(i)).collect()).expect("w preserves [0,k)");
        let w2 = Perm::from_images((k..self.n).map(|i| w.apply(i) - k).collect()).expect("w preserves [k,n)");
        let y = inst.young();
        let incl_l: Vec<usize> = (0..k).collect();
        let incl_r: Vec<usize> = (k..self.n).collect();
        let idx = |p: &Point| self.points.binary_search(p).expect("pushed point lies in Y_n");
        let f1: Vec<usize> = left.points.iter().map(|p| f[idx(&y.map_point(&incl_l, self.n, p))]).collect();
        let f2: Vec<usize> = right.points.iter().map(|p| f[idx(&y.map_point(&incl_r, self.n, p))]).collect();
        (left.encode(&w1, &f1), right.encode(&w2, &f2))
    }

    /// Drop the part of `f` outside `Y_λ`: the projection `P_λ → G_λ`.
    pub(crate) fn project_to_levi(&self, inst: &Instance, blocks: &[Vec<usize>], x: usize) -> Result<usize> {
        let masks = self.block_masks(blocks)?;
        let inside = self.in_y_lambda(inst, &masks);
        let (w, f) = self.decode(x);
        let g: Vec<usize> = f.iter().zip(&inside).map(|(&v, &i)| if i { v } else { 0 }).collect();
        Ok(self.encode(w, &g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let g = WreathGroup::build(&Instance::graphs(), 3).unwrap();
        assert_eq!(g.order(), 48);
        let b2 = WreathGroup::build(&Instance::parse("young=id,H=Z2").unwrap(), 2).unwrap();
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.character_table().unwrap().len(), 5);
        let s4 = WreathGroup::build(&Instance::parse("young=empty,H=Z3").unwrap(), 4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.classes.len(), 5);
        let z3 = WreathGroup::build(&Instance::parse("young=id,H=Z3").unwrap(), 2).unwrap();
        assert_eq!(z3.order(), 18);
    }

    #[test]
    fn cap_enforced() {
        let lim = Limits {
            oracle_cap: 47,
            ..Limits::default()
        };
        assert!(WreathGroup::build_with(&Instance::graphs(), 3, &lim).is_err());
    }

    #[test]
    fn encode_round_trip_and_law() {
        let inst = Instance::parse("young=id,H=Z3").unwrap();
        let g = WreathGroup::build(&inst, 2).unwrap();
        for x in 0..g.order() {
            let (w, f) = g.decode(x);
            assert_eq!(g.encode(w, &f), x);
        }
        // (w,0)(1,f)(w,0)⁻¹ moves f along w
        let swap = Perm::from_images(vec![1, 0]).unwrap();
        let s = g.encode(&swap, &[0, 0]);
        let t = g.encode(&Perm::identity(2), &[1, 0]);
        let c = g.group.mul(g.group.mul(s, t), g.group.inv(s));
        assert_eq!(g.decode(c).1, vec![0, 1]);
    }

    #[test]
    fn subgroup_orders() {
        let inst = Instance::graphs();
        let g = WreathGroup::build(&inst, 3).unwrap();
        let blocks = vec![vec![0, 1], vec![2]];
        // S_2 × S_1 ⋉ Map({01}, Z2)
        assert_eq!(g.young_subgroup(&inst, &blocks).unwrap().order(), 4);
        assert_eq!(g.parabolic_subgroup(&blocks).unwrap().order(), 16);
        assert_eq!(g.unipotent_subgroup(&inst, &blocks).unwrap().order(), 4);
        assert_eq!(g.base_subgroup().unwrap().order(), 8);
        assert_eq!(g.symmetric_subgroup().unwrap().order(), 6);
        let full = vec![vec![0], vec![1], vec![2]];
        assert_eq!(g.young_subgroup(&inst, &full).unwrap().order(), 1);
        // empty blocks are dropped
        let padded = vec![vec![0, 1], vec![], vec![2]];
        assert_eq!(g.young_subgroup(&inst, &padded).unwrap().order(), 4);
        assert!(g.young_subgroup(&inst, &[vec![0, 1]]).is_err());
    }
}
