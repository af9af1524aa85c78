use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;

use super::element::{HopfElement, HopfTensor, LinComb, MBasisKey};
use super::function::FunctionF;
use super::instance::{class_in, conjugate, AutData, Instance};
use crate::characters::{as_multiplicity, inner_product_values, Cyclotomic};
use crate::error::{internal, invalid, Result};
use crate::limits;
use crate::par;
use crate::permgroups::Perm;
use crate::symfunc::{assemble_from_quasi, enumerate_compositions, IntComposition, SymFunc};

/// Which coproduct to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coproduct {
    /// `Δ`: every orbit of subsets `K ⊆ [n]`.
    Full,
    /// `δ`: only the `K` along which the support splits.
    Restricted,
}

/// Representative chosen from each `Aut F`-orbit of subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RepChoice {
    LexMin,
    LexMax,
}

/// One orbit of subsets `K`, with the class statistics of the stabilizer
/// `(Aut F)_K` mapped into `Aut F`, `Aut F|_K` and `Aut F|_{K^c}`.
struct SplitTerm {
    left: FunctionF,
    right: FunctionF,
    splits: bool,
    stab_order: usize,
    counts: BTreeMap<(usize, usize, usize), usize>,
}

type Desc = String;
type PairTerms = Arc<Vec<((MBasisKey, MBasisKey), i64)>>;

static PRODUCT_CACHE: LazyLock<DashMap<(Desc, MBasisKey, MBasisKey), Arc<Vec<(MBasisKey, i64)>>>> =
    LazyLock::new(DashMap::new);
static SPLIT_CACHE: LazyLock<DashMap<(Desc, FunctionF), Arc<Vec<SplitTerm>>>> = LazyLock::new(DashMap::new);
static COPRODUCT_CACHE: LazyLock<DashMap<(Desc, MBasisKey, Coproduct), PairTerms>> = LazyLock::new(DashMap::new);
static RHO_CACHE: LazyLock<DashMap<(Desc, FunctionF), Arc<Vec<(IntComposition, Vec<i64>)>>>> =
    LazyLock::new(DashMap::new);

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn lex_key(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn bits(mask: u32, n: usize) -> Vec<usize> {
    lex_key(mask, n)
}

fn image_mask(w: &Perm, mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out |= 1 << w.apply(i);
        m &= m - 1;
    }
    out
}

/// The permutation of `[|K|]` induced by `s` on the sorted set `K`.
fn restrict_perm(s: &Perm, k: &[usize]) -> Perm {
    let images = k
        .iter()
        .map(|&x| k.binary_search(&s.apply(x)).expect("s stabilizes K"))
        .collect();
    Perm::from_images(images).expect("restriction of a bijection")
}

impl Instance {
    /// The basis key of `(F, γ)`. `F` is canonicalized first; `irrep` indexes
    /// the character table of the canonical representative.
    pub fn key(&self, f: &FunctionF, irrep: usize) -> Result<MBasisKey> {
        let (c, _) = self.canonicalize(f)?;
        let data = self.aut_data(&c)?;
        if irrep >= data.table.len() {
            return Err(invalid(format!(
                "irrep {irrep} out of range; Aut F has {} irreducible characters",
                data.table.len()
            )));
        }
        Ok(MBasisKey::new_unchecked(c, irrep))
    }

    /// Read `[{"F": {...}, "irrep": i, "coeff": c}, ...]`. Each `F` is
    /// canonicalized; `coeff` defaults to 1.
    pub fn element_from_json(&self, v: &serde_json::Value) -> Result<HopfElement> {
        let items = v.as_array().ok_or_else(|| invalid("a Hopf element is a JSON array of terms"))?;
        let mut out = HopfElement::zero();
        for item in items {
            let f = item.get("F").ok_or_else(|| invalid("term without \"F\""))?;
            let irrep = item
                .get("irrep")
                .and_then(|i| i.as_u64())
                .ok_or_else(|| invalid("term without a nonnegative integer \"irrep\""))?;
            let coeff = match item.get("coeff") {
                None => 1,
                Some(c) => c.as_i64().ok_or_else(|| invalid("\"coeff\" must be an integer"))?,
            };
            let f = self.function_from_json(f.clone())?;
            out.add_term(self.key(&f, irrep as usize)?, coeff);
        }
        Ok(out)
    }

    pub fn unit_key(&self) -> MBasisKey {
        MBasisKey::new_unchecked(FunctionF::empty(0), 0)
    }

    pub fn unit(&self) -> HopfElement {
        HopfElement::basis(self.unit_key())
    }

    /// All basis keys of degree `n`, by function then irrep index.
    pub fn basis_keys(&self, n: usize) -> Result<Vec<MBasisKey>> {
        let mut out = Vec::new();
        for f in self.basis_functions(n)?.iter() {
            let t = self.aut_data(f)?.table.len();
            out.extend((0..t).map(|i| MBasisKey::new_unchecked(f.clone(), i)));
        }
        Ok(out)
    }

    fn check_degree(&self, what: &'static str, n: usize) -> Result<()> {
        limits::check(what, n, limits::current().degree_cap)
    }

    /// Product of two basis keys: induce `γ₁ ⊗ γ₂` from `Aut F₁ × Aut F₂`
    /// to `Aut(F₁ ⊔ F₂)` and decompose.
    pub fn product_keys(&self, a: &MBasisKey, b: &MBasisKey) -> Result<Arc<Vec<(MBasisKey, i64)>>> {
        if a.f.n() == 0 {
            return Ok(Arc::new(vec![(b.clone(), 1)]));
        }
        if b.f.n() == 0 {
            return Ok(Arc::new(vec![(a.clone(), 1)]));
        }
        self.check_degree("product degree", a.f.n() + b.f.n())?;
        let ck = (self.descriptor().to_string(), a.clone(), b.clone());
        if let Some(hit) = PRODUCT_CACHE.get(&ck) {
            return Ok(hit.clone());
        }
        let da = self.aut_data(&a.f)?;
        let db = self.aut_data(&b.f)?;
        let joined = a.f.disjoint_union(self.young(), &b.f);
        let (fc, w) = self.canonicalize(&joined)?;
        let dc = self.aut_data(&fc)?;
        let mut acc = vec![Cyclotomic::zero(); dc.classes.len()];
        for c1 in 0..da.classes.len() {
            let x1 = da.group.element(da.classes.rep(c1));
            let v1 = da.table.value(a.irrep, c1).scale_int(da.classes.size(c1) as i64);
            for c2 in 0..db.classes.len() {
                let x2 = db.group.element(db.classes.rep(c2));
                let t = conjugate(&w, &x1.direct_sum(x2));
                let cls = class_in(&dc, &t);
                let v = &v1 * &db.table.value(b.irrep, c2).scale_int(db.classes.size(c2) as i64);
                acc[cls] += &v;
            }
        }
        let norm = ratio(1, da.order() * db.order());
        let mut out = Vec::new();
        let mut dim = 0i64;
        for psi in 0..dc.table.len() {
            let s: Cyclotomic = (0..acc.len()).map(|c| &acc[c] * &dc.table.value(psi, c).conj()).sum();
            let m = as_multiplicity(&s.scale(&norm), "product decomposition")?;
            if m != 0 {
                dim += m * dc.table.degree(psi);
                out.push((MBasisKey::new_unchecked(fc.clone(), psi), m));
            }
        }
        let expected = (dc.order() / (da.order() * db.order())) as i64 * da.table.degree(a.irrep) * db.table.degree(b.irrep);
        if dim != expected {
            return Err(internal(format!("induced degree {dim}, expected {expected}")));
        }
        let out = Arc::new(out);
        PRODUCT_CACHE.insert(ck, out.clone());
        Ok(out)
    }

    pub fn hopf_product(&self, a: &HopfElement, b: &HopfElement) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                for (k, m) in self.product_keys(ka, kb)?.iter() {
                    out.add_term(k.clone(), ca * cb * m);
                }
            }
        }
        Ok(out)
    }

    fn split_terms(&self, f: &FunctionF, choice: RepChoice) -> Result<Vec<SplitTerm>> {
        let n = f.n();
        let data = self.aut_data(f)?;
        let gens = data.group.generator_perms();
        // union-find over subsets, joined along generators
        let size = 1usize << n;
        let mut parent: Vec<u32> = (0..size as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for m in 0..size as u32 {
            for g in &gens {
                let a = find(&mut parent, m);
                let b = find(&mut parent, image_mask(g, m));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let mut reps: BTreeMap<u32, u32> = BTreeMap::new();
        for m in 0..size as u32 {
            let root = find(&mut parent, m);
            let better = match reps.get(&root) {
                None => true,
                Some(&cur) => {
                    let (x, y) = (lex_key(m, n), lex_key(cur, n));
                    match choice {
                        RepChoice::LexMin => x < y,
                        RepChoice::LexMax => x > y,
                    }
                }
            };
            if better {
                reps.insert(root, m);
            }
        }
        let mut ks: Vec<u32> = reps.into_values().collect();
        ks.sort_by_key(|&m| lex_key(m, n));
        let terms = par::map(&ks, |&mask| self.split_term(f, &data, mask));
        terms.into_iter().collect()
    }

    fn split_term(&self, f: &FunctionF, data: &AutData, mask: u32) -> Result<SplitTerm> {
        let n = f.n();
        let k = bits(mask, n);
        let kc = bits(!mask & ((1u32 << n) - 1), n);
        let left = f.restrict(self.young(), &k);
        let right = f.restrict(self.young(), &kc);
        let (lc, w1) = self.canonicalize(&left)?;
        let (rc, w2) = self.canonicalize(&right)?;
        let d1 = self.aut_data(&lc)?;
        let d2 = self.aut_data(&rc)?;
        let mut counts = BTreeMap::new();
        let mut stab_order = 0;
        for (i, s) in data.group.elements().iter().enumerate() {
            if image_mask(s, mask) != mask {
                continue;
            }
            stab_order += 1;
            let t1 = conjugate(&w1, &restrict_perm(s, &k));
            let t2 = conjugate(&w2, &restrict_perm(s, &kc));
            let key = (data.classes.class_of[i], class_in(&d1, &t1), class_in(&d2, &t2));
            *counts.entry(key).or_insert(0) += 1;
        }
        Ok(SplitTerm {
            left: lc,
            right: rc,
            splits: f.splits_along(self.young(), mask),
            stab_order,
            counts,
        })
    }

    fn cached_split_terms(&self, f: &FunctionF) -> Result<Arc<Vec<SplitTerm>>> {
        let ck = (self.descriptor().to_string(), f.clone());
        if let Some(hit) = SPLIT_CACHE.get(&ck) {
            return Ok(hit.clone());
        }
        let terms = Arc::new(self.split_terms(f, RepChoice::LexMin)?);
        Ok(SPLIT_CACHE.entry(ck).or_insert(terms).clone())
    }

    fn coproduct_from_terms(&self, key: &MBasisKey, terms: &[SplitTerm], kind: Coproduct) -> Result<Vec<((MBasisKey, MBasisKey), i64)>> {
        let data = self.aut_data(&key.f)?;
        let mut out = LinComb::zero();
        for term in terms {
            if kind == Coproduct::Restricted && !term.splits {
                continue;
            }
            let d1 = self.aut_data(&term.left)?;
            let d2 = self.aut_data(&term.right)?;
            // v[c1][c2] = Σ_cs count · γ(cs)
            let mut v = vec![vec![Cyclotomic::zero(); d2.classes.len()]; d1.classes.len()];
            for (&(cs, c1, c2), &cnt) in &term.counts {
                v[c1][c2] += &data.table.value(key.irrep, cs).scale_int(cnt as i64);
            }
            let norm = ratio(1, term.stab_order);
            for p2 in 0..d2.table.len() {
                let u: Vec<Cyclotomic> = (0..d1.classes.len())
                    .map(|c1| (0..d2.classes.len()).map(|c2| &v[c1][c2] * &d2.table.value(p2, c2).conj()).sum())
                    .collect();
                for p1 in 0..d1.table.len() {
                    let s: Cyclotomic = (0..d1.classes.len()).map(|c1| &u[c1] * &d1.table.value(p1, c1).conj()).sum();
                    let m = as_multiplicity(&s.scale(&norm), "coproduct decomposition")?;
                    if m != 0 {
                        let l = MBasisKey::new_unchecked(term.left.clone(), p1);
                        let r = MBasisKey::new_unchecked(term.right.clone(), p2);
                        out.add_term((l, r), m);
                    }
                }
            }
        }
        Ok(out.terms().map(|(k, c)| (k.clone(), c)).collect())
    }

    /// `Δ` or `δ` of a basis key, as `(left, right)` pairs with multiplicities.
    pub fn coproduct_key(&self, key: &MBasisKey, kind: Coproduct) -> Result<PairTerms> {
        self.check_degree("coproduct degree", key.f.n())?;
        let ck = (self.descriptor().to_string(), key.clone(), kind);
        if let Some(hit) = COPRODUCT_CACHE.get(&ck) {
            return Ok(hit.clone());
        }
        let terms = self.cached_split_terms(&key.f)?;
        let out = Arc::new(self.coproduct_from_terms(key, &terms, kind)?);
        COPRODUCT_CACHE.insert(ck, out.clone());
        Ok(out)
    }

    /// The coproduct computed from the lexicographically largest subset of
    /// each orbit instead of the smallest. Used to check that the result does
    /// not depend on the representatives.
    pub(crate) fn coproduct_key_alt_reps(&self, key: &MBasisKey, kind: Coproduct) -> Result<Vec<((MBasisKey, MBasisKey), i64)>> {
        let terms = self.split_terms(&key.f, RepChoice::LexMax)?;
        self.coproduct_from_terms(key, &terms, kind)
    }

    pub fn coproduct(&self, a: &HopfElement, kind: Coproduct) -> Result<HopfTensor> {
        let mut out = HopfTensor::zero();
        for (k, c) in a.terms() {
            for (pair, m) in self.coproduct_key(k, kind)?.iter() {
                out.add_term(pair.clone(), c * m);
            }
        }
        Ok(out)
    }

    /// Componentwise product on `ℳ ⊗ ℳ`.
    pub fn tensor_product(&self, s: &HopfTensor, t: &HopfTensor) -> Result<HopfTensor> {
        let mut out = HopfTensor::zero();
        for ((a, b), c) in s.terms() {
            for ((x, y), d) in t.terms() {
                let left = self.product_keys(a, x)?;
                let right = self.product_keys(b, y)?;
                for (l, m1) in left.iter() {
                    for (r, m2) in right.iter() {
                        out.add_term((l.clone(), r.clone()), c * d * m1 * m2);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The counit: the coefficient of the unit.
    pub fn counit(&self, a: &HopfElement) -> i64 {
        a.coeff(&self.unit_key())
    }

    /// `ζ_ℳ`: the total coefficient of keys with empty support and trivial character.
    pub fn zeta(&self, a: &HopfElement) -> i64 {
        a.terms()
            .filter(|(k, _)| k.f.has_empty_support() && k.irrep == 0)
            .map(|(_, c)| c)
            .sum()
    }

    /// `Σ_γ (deg γ)·(F, γ)`, the image of `π_F` in `ℳ`.
    pub fn reg_embed(&self, f: &FunctionF) -> Result<HopfElement> {
        let (c, _) = self.canonicalize(f)?;
        let data = self.aut_data(&c)?;
        Ok(HopfElement::from_terms(
            (0..data.table.len()).map(|i| (MBasisKey::new_unchecked(c.clone(), i), data.table.degree(i))),
        ))
    }

    /// For each composition `α` of `n`, the permutation character of `Aut F`
    /// on proper `α`-compositions, listed per conjugacy class.
    pub(crate) fn composition_characters(&self, f: &FunctionF) -> Result<Arc<Vec<(IntComposition, Vec<i64>)>>> {
        self.check_degree("psi degree", f.n())?;
        let ck = (self.descriptor().to_string(), f.clone());
        if let Some(hit) = RHO_CACHE.get(&ck) {
            return Ok(hit.clone());
        }
        let n = f.n();
        let data = self.aut_data(f)?;
        let mut supports: Vec<u32> = f.entries().iter().map(|(p, _)| self.young().vertex_support(n, p)).collect();
        supports.sort_unstable();
        supports.dedup();
        let cycles: Vec<Vec<(u32, usize)>> = (0..data.classes.len())
            .map(|c| {
                let mut cy: Vec<(u32, usize)> = data
                    .group
                    .element(data.classes.rep(c))
                    .cycles()
                    .into_iter()
                    .map(|cyc| (cyc.iter().fold(0u32, |m, &x| m | 1 << x), cyc.len()))
                    .collect();
                // long cycles first prune earlier
                cy.sort_by(|a, b| b.1.cmp(&a.1));
                cy
            })
            .collect();
        let comps = enumerate_compositions(n);
        let rows = par::map(&comps, |alpha| {
            cycles
                .iter()
                .map(|cy| {
                    let mut remaining = alpha.parts().to_vec();
                    let mut blocks = vec![0u32; remaining.len()];
                    count_proper(cy, 0, &mut remaining, &mut blocks, &supports)
                })
                .collect::<Vec<i64>>()
        });
        let out = Arc::new(comps.into_iter().zip(rows).collect::<Vec<_>>());
        Ok(RHO_CACHE.entry(ck).or_insert(out).clone())
    }

    /// `Ψ` on a basis key: the coefficient of `M_α` is the multiplicity of
    /// `γ` in the permutation character on proper `α`-compositions.
    pub fn psi_key(&self, key: &MBasisKey) -> Result<SymFunc> {
        if key.f.n() == 0 {
            return Ok(SymFunc::one());
        }
        let data = self.aut_data(&key.f)?;
        let rho = self.composition_characters(&key.f)?;
        let gamma = &data.table.rows()[key.irrep];
        let mut coeffs = BTreeMap::new();
        for (alpha, values) in rho.iter() {
            let vals: Vec<Cyclotomic> = values.iter().map(|&v| Cyclotomic::from_int(v)).collect();
            let m = as_multiplicity(&inner_product_values(&data.classes, &vals, gamma), "psi coefficient")?;
            coeffs.insert(alpha.clone(), m);
        }
        assemble_from_quasi(&coeffs)
    }

    pub fn psi(&self, a: &HopfElement) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (k, c) in a.terms() {
            out = out.add(&self.psi_key(k)?.scale(c)?)?;
        }
        Ok(out)
    }
}

/// Count set compositions with the given block sizes that are unions of the
/// given cycles and in which no support lies inside a single block.
fn count_proper(cycles: &[(u32, usize)], i: usize, remaining: &mut [usize], blocks: &mut [u32], supports: &[u32]) -> i64 {
    if i == cycles.len() {
        return 1;
    }
    let (mask, len) = cycles[i];
    let mut total = 0;
    for j in 0..remaining.len() {
        if remaining[j] < len {
            continue;
        }
        remaining[j] -= len;
        blocks[j] |= mask;
        let ok = remaining[j] > 0 || supports.iter().all(|&s| s & !blocks[j] != 0);
        if ok {
            total += count_proper(cycles, i + 1, remaining, blocks, supports);
        }
        remaining[j] += len;
        blocks[j] &= !mask;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::symfunc::{schur, IntPartition};

    fn gkey(inst: &Instance, g: &Graph, irrep: usize) -> MBasisKey {
        inst.key(&FunctionF::from_graph(g), irrep).unwrap()
    }

    fn m(parts: &[usize], c: i64) -> (IntPartition, i64) {
        (IntPartition::new(parts.to_vec()).unwrap(), c)
    }

    #[test]
    fn single_vertices_multiply_to_regular() {
        let inst = Instance::graphs();
        let x = HopfElement::basis(gkey(&inst, &Graph::empty(1).unwrap(), 0));
        let p = inst.hopf_product(&x, &x).unwrap();
        let k2bar = FunctionF::empty(2);
        assert_eq!(p, inst.reg_embed(&k2bar).unwrap());
        assert_eq!(p.len(), 2);
        assert_eq!(inst.hopf_product(&inst.unit(), &x).unwrap(), x);
    }

    #[test]
    fn pieri_in_s3() {
        let inst = Instance::graphs();
        let x = HopfElement::basis(gkey(&inst, &Graph::empty(1).unwrap(), 0));
        let triv2 = HopfElement::basis(gkey(&inst, &Graph::empty(2).unwrap(), 0));
        let p = inst.hopf_product(&triv2, &x).unwrap();
        let data = inst.aut_data(&FunctionF::empty(3)).unwrap();
        // trivial plus the degree-2 character
        let degs: Vec<i64> = p.terms().map(|(k, c)| c * data.table.degree(k.irrep)).collect();
        assert_eq!(p.len(), 2);
        assert_eq!(degs.iter().sum::<i64>(), 3);
        assert_eq!(p.coeff(&gkey(&inst, &Graph::empty(3).unwrap(), 0)), 1);
    }

    #[test]
    fn coproduct_examples() {
        let inst = Instance::graphs();
        let x = gkey(&inst, &Graph::empty(1).unwrap(), 0);
        let one = inst.unit_key();
        let dx = inst.coproduct(&HopfElement::basis(x.clone()), Coproduct::Full).unwrap();
        assert_eq!(dx, HopfTensor::from_terms([((one.clone(), x.clone()), 1), ((x.clone(), one.clone()), 1)]));
        let k2 = gkey(&inst, &Graph::complete(2).unwrap(), 0);
        let d = inst.coproduct(&HopfElement::basis(k2.clone()), Coproduct::Full).unwrap();
        let expect = HopfTensor::from_terms([
            ((one.clone(), k2.clone()), 1),
            ((x.clone(), x.clone()), 1),
            ((k2.clone(), one.clone()), 1),
        ]);
        assert_eq!(d, expect);
        let small = inst.coproduct(&HopfElement::basis(k2.clone()), Coproduct::Restricted).unwrap();
        assert_eq!(small.len(), 2);
        assert_eq!(small.coeff(&(x.clone(), x)), 0);
    }

    #[test]
    fn connected_graphs_are_restricted_primitive() {
        let inst = Instance::graphs();
        for g in [Graph::butterfly(), Graph::kite_with_tail(), Graph::complete(3).unwrap()] {
            for k in 0..inst.aut_data(&inst.canonicalize(&FunctionF::from_graph(&g)).unwrap().0).unwrap().table.len() {
                let key = gkey(&inst, &g, k);
                let d = inst.coproduct(&HopfElement::basis(key.clone()), Coproduct::Restricted).unwrap();
                let one = inst.unit_key();
                assert_eq!(d, HopfTensor::from_terms([((one.clone(), key.clone()), 1), ((key, one), 1)]));
            }
        }
    }

    #[test]
    fn two_edges_split_along_components() {
        let inst = Instance::graphs();
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let key = gkey(&inst, &g, 0);
        let d = inst.coproduct(&HopfElement::basis(key), Coproduct::Restricted).unwrap();
        let k2 = gkey(&inst, &Graph::complete(2).unwrap(), 0);
        // one orbit of K splits off a single edge
        assert_eq!(d.coeff(&(k2.clone(), k2)), 1);
        assert!(d.terms().all(|((l, r), _)| l.degree() % 2 == 0 && r.degree() % 2 == 0));
    }

    #[test]
    fn empty_young_set_coproducts_agree() {
        let inst = Instance::parse("young=empty,H=Z2").unwrap();
        for n in 0..=4 {
            for key in inst.basis_keys(n).unwrap() {
                let a = HopfElement::basis(key);
                assert_eq!(inst.coproduct(&a, Coproduct::Full).unwrap(), inst.coproduct(&a, Coproduct::Restricted).unwrap());
            }
        }
    }

    #[test]
    fn representatives_do_not_matter() {
        for inst in [Instance::graphs(), Instance::parse("young=id,H=Z3").unwrap()] {
            for n in 0..=4 {
                for key in inst.basis_keys(n).unwrap() {
                    for kind in [Coproduct::Full, Coproduct::Restricted] {
                        let a = LinComb::from_terms(inst.coproduct_key(&key, kind).unwrap().iter().cloned());
                        let b = LinComb::from_terms(inst.coproduct_key_alt_reps(&key, kind).unwrap());
                        assert_eq!(a, b, "{key:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let inst = Instance::graphs();
        let b = FunctionF::from_graph(&Graph::butterfly());
        let triv = inst.psi_key(&inst.key(&b, 0).unwrap()).unwrap();
        assert_eq!(triv, SymFunc::from_terms([m(&[2, 2, 1], 1), m(&[2, 1, 1, 1], 3), m(&[1, 1, 1, 1, 1], 15)]).unwrap());
        let total = inst.psi(&inst.reg_embed(&b).unwrap()).unwrap();
        assert_eq!(total, SymFunc::from_terms([m(&[2, 2, 1], 4), m(&[2, 1, 1, 1], 24), m(&[1, 1, 1, 1, 1], 120)]).unwrap());
        let k4 = FunctionF::from_graph(&Graph::complete(4).unwrap());
        let (c, _) = inst.canonicalize(&k4).unwrap();
        let data = inst.aut_data(&c).unwrap();
        for i in 0..data.table.len() {
            let p = inst.psi_key(&inst.key(&k4, i).unwrap()).unwrap();
            assert_eq!(p, SymFunc::from_terms([m(&[1, 1, 1, 1], data.table.degree(i))]).unwrap());
        }
        let e = Instance::parse("young=empty,H=Z2").unwrap();
        let sign = e.key(&FunctionF::empty(2), 1).unwrap();
        assert_eq!(e.psi_key(&sign).unwrap(), schur(&IntPartition::new(vec![1, 1]).unwrap()).unwrap());
    }

    #[test]
    fn zeta_and_counit() {
        let inst = Instance::graphs();
        let b = HopfElement::basis(gkey(&inst, &Graph::butterfly(), 0));
        assert_eq!(inst.zeta(&b), 0);
        assert_eq!(inst.zeta(&HopfElement::basis(gkey(&inst, &Graph::empty(3).unwrap(), 0))), 1);
        assert_eq!(inst.counit(&inst.unit()), 1);
        assert_eq!(inst.counit(&b), 0);
    }

    #[test]
    fn json_round_trip() {
        let inst = Instance::graphs();
        let a = inst.reg_embed(&FunctionF::from_graph(&Graph::butterfly())).unwrap();
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(inst.element_from_json(&v).unwrap(), a);
        assert!(inst.element_from_json(&serde_json::json!({"F": 1})).is_err());
    }

    #[test]
    fn key_rejects_bad_irrep() {
        let inst = Instance::graphs();
        assert!(inst.key(&FunctionF::from_graph(&Graph::butterfly()), 5).is_err());
    }
}
