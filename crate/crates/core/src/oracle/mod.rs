//! Ground truth at tiny sizes: explicit wreath products, the Clifford map
//! from basis keys to irreducible characters, and the parabolic
//! induction/restriction functors, compared against the `ℳ` side.

mod wreath;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use wreath::{SubgroupHandle, WreathGroup};

use crate::characters::{induce, inner_product, ClassFunction, Cyclotomic};
use crate::error::{Error, Result};
use crate::permgroups::Group;
use crate::wreathhopf::{Coproduct, Instance, MBasisKey};

/// The instances the oracle runs on, with their largest degree.
pub fn pinned_instances() -> Vec<(Instance, usize)> {
    vec![
        (Instance::graphs(), 3),
        (Instance::parse("young=id,H=Z2").expect("builtin"), 3),
        (Instance::parse("young=id,H=Z3").expect("builtin"), 2),
        (Instance::parse("young=empty,H=Z2").expect("builtin"), 4),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub instance: String,
    pub n: usize,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: String, result: Result<Option<String>>) {
        let (passed, detail) = match result {
            Ok(None) => (true, None),
            Ok(Some(why)) => (false, Some(why)),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(OracleCheck { name, passed, detail });
    }
}

/// Wreath groups `G_0, …, G_N` of one instance, with memoized `Φ`.
pub struct Oracle {
    inst: Instance,
    groups: Vec<WreathGroup>,
    phi_cache: HashMap<MBasisKey, ClassFunction>,
}

fn scale_rational(v: &Cyclotomic, num: usize, den: usize) -> Cyclotomic {
    v.scale(&BigRational::new(BigInt::from(num), BigInt::from(den)))
}

impl Oracle {
    pub fn new(inst: &Instance, max_n: usize) -> Result<Oracle> {
        let groups = (0..=max_n).map(|n| WreathGroup::build(inst, n)).collect::<Result<_>>()?;
        Ok(Oracle {
            inst: inst.clone(),
            groups,
            phi_cache: HashMap::new(),
        })
    }

    pub fn group(&self, n: usize) -> &WreathGroup {
        &self.groups[n]
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    /// `Φ_F(γ) = ind_{G_F}^{G_n}(γ ⋉ π_F)`, checked to be irreducible.
    pub fn clifford_phi(&mut self, key: &MBasisKey) -> Result<ClassFunction> {
        if let Some(hit) = self.phi_cache.get(key) {
            return Ok(hit.clone());
        }
        let f = key.function();
        let g = &self.groups[f.n()];
        let data = self.inst.aut_data(f)?;
        let gf = g.stabilizer_subgroup(data.group.elements())?;
        let h = self.inst.h();
        let e = h.exponent();
        let labels: Vec<usize> = g.points().iter().map(|p| f.label(p)).collect();
        let values = (0..gf.classes.len())
            .map(|c| {
                let x = gf.emb[gf.classes.rep(c)];
                let (w, fx) = g.decode(x);
                let sigma = data.group.index_of(w).expect("element of Aut F");
                let gamma = data.table.value(key.irrep(), data.classes.class_of[sigma]);
                let k: u64 = fx.iter().zip(&labels).map(|(&a, &chi)| u64::from(h.pairing_exponent(a, chi))).sum();
                gamma * &Cyclotomic::root_of_unity(e, (k % u64::from(e)) as i64)
            })
            .collect();
        let chi = ClassFunction::new(gf.classes.clone(), values)?;
        let phi = induce(&chi, &gf.group, &g.group, &gf.emb, &g.classes)?;
        let norm = inner_product(&phi, &phi)?;
        if norm != Cyclotomic::one() {
            return Err(Error::NotACharacter(format!("Φ of {key:?} has norm {norm}, expected 1")));
        }
        self.phi_cache.insert(key.clone(), phi.clone());
        Ok(phi)
    }

    /// `Σ c·Φ(key)` on `G_n`.
    fn phi_of_terms(&mut self, n: usize, terms: &[(MBasisKey, i64)]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(self.groups[n].classes.clone());
        for (k, c) in terms {
            acc = acc.add(&self.clifford_phi(k)?.scale_int(*c))?;
        }
        Ok(acc)
    }

    fn bipartition(n: usize, k: usize) -> Vec<Vec<usize>> {
        vec![(0..k).collect(), (k..n).collect()]
    }

    /// Inflate a class function of `G_λ` to `P_λ` and induce to `G_n`.
    pub fn pind_character(&self, n: usize, blocks: &[Vec<usize>], chi: &ClassFunction) -> Result<ClassFunction> {
        let g = &self.groups[n];
        let levi = g.young_subgroup(&self.inst, blocks)?;
        let para = g.parabolic_subgroup(blocks)?;
        if chi.classes.group_order != levi.order() {
            return Err(Error::GroupMismatch("character does not live on G_λ".into()));
        }
        let values = (0..para.classes.len())
            .map(|c| {
                let x = para.emb[para.classes.rep(c)];
                let y = g.project_to_levi(&self.inst, blocks, x)?;
                let pos = levi.position(y).expect("projection lands in G_λ");
                Ok(chi.at_element(pos).clone())
            })
            .collect::<Result<Vec<_>>>()?;
        let inflated = ClassFunction::new(para.classes.clone(), values)?;
        induce(&inflated, &para.group, &g.group, &para.emb, &g.classes)
    }

    /// `pres(χ)(g) = (1/|U|) Σ_{u ∈ U} χ(gu)` for `g ∈ G_λ`.
    pub fn pres_character(&self, n: usize, blocks: &[Vec<usize>], chi: &ClassFunction) -> Result<ClassFunction> {
        let g = &self.groups[n];
        let levi = g.young_subgroup(&self.inst, blocks)?;
        let uni = g.unipotent_subgroup(&self.inst, blocks)?;
        let values = (0..levi.classes.len())
            .map(|c| {
                let x = levi.emb[levi.classes.rep(c)];
                let s: Cyclotomic = uni.emb.iter().map(|&u| chi.at_element(g.group.mul(x, u)).clone()).sum();
                scale_rational(&s, 1, uni.order())
            })
            .collect();
        ClassFunction::new(levi.classes.clone(), values)
    }

    /// Plain restriction to `G_λ`.
    pub fn res_character(&self, n: usize, blocks: &[Vec<usize>], chi: &ClassFunction) -> Result<ClassFunction> {
        let g = &self.groups[n];
        let levi = g.young_subgroup(&self.inst, blocks)?;
        let values = (0..levi.classes.len())
            .map(|c| chi.at_element(levi.emb[levi.classes.rep(c)]).clone())
            .collect();
        ClassFunction::new(levi.classes.clone(), values)
    }

    /// `Φ(a) ⊠ Φ(b)` on `G_λ ≅ G_k × G_{n-k}` for `λ = ([0,k), [k,n))`.
    fn outer_product(&mut self, terms: &[((MBasisKey, MBasisKey), i64)], n: usize, k: usize) -> Result<ClassFunction> {
        let blocks = Self::bipartition(n, k);
        let levi = self.groups[n].young_subgroup(&self.inst, &blocks)?;
        let mut phis = Vec::new();
        for ((a, b), c) in terms {
            phis.push((self.clifford_phi(a)?, self.clifford_phi(b)?, *c));
        }
        let (g, left, right) = (&self.groups[n], &self.groups[k], &self.groups[n - k]);
        let values = (0..levi.classes.len())
            .map(|cl| {
                let x = levi.emb[levi.classes.rep(cl)];
                let (x1, x2) = g.split_element(&self.inst, x, left, right);
                phis.iter()
                    .map(|(pa, pb, c)| (pa.at_element(x1) * pb.at_element(x2)).scale_int(*c))
                    .sum()
            })
            .collect();
        ClassFunction::new(levi.classes.clone(), values)
    }

    /// `Φ` is a bijection from degree-`n` basis keys onto `Irr(G_n)` that
    /// multiplies degrees by `[S_n : Aut F]`.
    pub fn check_bijection(&mut self, n: usize) -> Result<Option<String>> {
        let keys = self.inst.basis_keys(n)?;
        let table = self.groups[n].character_table()?.clone();
        let mut hit = vec![false; table.len()];
        for key in &keys {
            let phi = self.clifford_phi(key)?;
            let data = self.inst.aut_data(key.function())?;
            let fact: usize = (1..=n).product();
            let expect = (fact / data.order()) as i64 * data.table.degree(key.irrep());
            if phi.degree() != &Cyclotomic::from_int(expect) {
                return Ok(Some(format!("deg Φ{key:?} = {}, expected {expect}", phi.degree())));
            }
            match table.find_row(&phi.values) {
                Some(r) if !hit[r] => hit[r] = true,
                Some(_) => return Ok(Some(format!("Φ{key:?} repeats an irreducible"))),
                None => return Ok(Some(format!("Φ{key:?} is not a row of the table"))),
            }
        }
        if keys.len() != table.len() {
            return Ok(Some(format!("{} keys but |Irr(G_{n})| = {}", keys.len(), table.len())));
        }
        Ok(None)
    }

    /// `Φ(a·b) = pind(Φ(a) ⊠ Φ(b))` for all basis pairs of total degree `n`.
    pub fn check_product(&mut self, n: usize) -> Result<Vec<(String, Option<String>)>> {
        let mut out = Vec::new();
        for k in 1..n {
            for a in self.inst.basis_keys(k)? {
                for b in self.inst.basis_keys(n - k)? {
                    let prod = self.inst.product_keys(&a, &b)?;
                    let lhs = self.phi_of_terms(n, &prod)?;
                    let outer = self.outer_product(&[((a.clone(), b.clone()), 1)], n, k)?;
                    let rhs = self.pind_character(n, &Self::bipartition(n, k), &outer)?;
                    let verdict = (lhs != rhs).then(|| format!("Φ(a·b) = {:?}, pind = {:?}", lhs.values, rhs.values));
                    out.push((format!("product {a:?} · {b:?}"), verdict));
                }
            }
        }
        Ok(out)
    }

    /// The R-side coproduct of `Φ(c)` against `(Φ ⊗ Φ)` of the `ℳ`-side one,
    /// degree by degree. `Δ` restricts; `δ` takes `U`-fixed vectors.
    pub fn check_coproduct(&mut self, n: usize, kind: Coproduct) -> Result<Vec<(String, Option<String>)>> {
        let mut out = Vec::new();
        for c in self.inst.basis_keys(n)? {
            let phi = self.clifford_phi(&c)?;
            let terms = self.inst.coproduct_key(&c, kind)?;
            for k in 0..=n {
                let blocks = Self::bipartition(n, k);
                let r_side = match kind {
                    Coproduct::Full => self.res_character(n, &blocks, &phi)?,
                    Coproduct::Restricted => self.pres_character(n, &blocks, &phi)?,
                };
                let part: Vec<_> = terms.iter().filter(|((l, _), _)| l.degree() == k).cloned().collect();
                let m_side = self.outer_product(&part, n, k)?;
                let verdict = (r_side != m_side).then(|| format!("R side {:?}, ℳ side {:?}", r_side.values, m_side.values));
                out.push((format!("{kind:?} {c:?} in degrees ({k},{})", n - k), verdict));
            }
        }
        Ok(out)
    }

    /// Adjointness `⟨pind χ, ψ⟩ = ⟨χ, pres ψ⟩` on random characters, and
    /// `pres(triv) = triv`.
    pub fn check_adjointness(&mut self, n: usize, samples: usize, seed: u64) -> Result<Vec<(String, Option<String>)>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gt = self.groups[n].character_table()?.clone();
        let mut out = Vec::new();
        for k in 0..=n {
            let blocks = Self::bipartition(n, k);
            let levi = self.groups[n].young_subgroup(&self.inst, &blocks)?;
            let lt = crate::characters::character_table_for_classes(&levi.group, levi.classes.clone())?;
            let triv_g = ClassFunction::trivial(self.groups[n].classes.clone());
            let pt = self.pres_character(n, &blocks, &triv_g)?;
            let triv_ok = pt == ClassFunction::trivial(levi.classes.clone());
            out.push((format!("pres(triv) = triv for K = [0,{k})"), (!triv_ok).then(|| "pres(triv) is not trivial".into())));
            for s in 0..samples {
                let chi = lt.recompose(&(0..lt.len()).map(|_| rng.gen_range(0..3)).collect::<Vec<i64>>());
                let psi = gt.recompose(&(0..gt.len()).map(|_| rng.gen_range(0..3)).collect::<Vec<i64>>());
                let ind = self.pind_character(n, &blocks, &chi)?;
                let lhs = inner_product(&ind, &psi)?;
                let rhs = inner_product(&chi, &self.pres_character(n, &blocks, &psi)?)?;
                let para = self.groups[n].parabolic_subgroup(&blocks)?;
                let deg_ok = ind.degree() == &chi.degree().scale_int((self.groups[n].order() / para.order()) as i64);
                let verdict = if lhs != rhs {
                    Some(format!("⟨pind χ, ψ⟩ = {lhs} but ⟨χ, pres ψ⟩ = {rhs}"))
                } else if !deg_ok {
                    Some("pind degree formula fails".into())
                } else {
                    None
                };
                out.push((format!("adjointness K = [0,{k}) sample {s}"), verdict));
            }
        }
        Ok(out)
    }

    /// `pres = res` when no point of `Y_n` lies outside `Y_λ`.
    pub fn check_pres_is_res(&mut self, n: usize) -> Result<Vec<(String, Option<String>)>> {
        let table = self.groups[n].character_table()?.clone();
        let mut out = Vec::new();
        for k in 0..=n {
            let blocks = Self::bipartition(n, k);
            for i in 0..table.len() {
                let chi = table.row(i);
                let a = self.pres_character(n, &blocks, &chi)?;
                let b = self.res_character(n, &blocks, &chi)?;
                out.push((format!("pres = res, K = [0,{k}), irrep {i}"), (a != b).then(|| "differ".into())));
            }
        }
        Ok(out)
    }
}

/// Run every oracle check on one instance up to degree `max_n`.
pub fn run_oracle(inst: &Instance, max_n: usize) -> Result<OracleReport> {
    let mut oracle = Oracle::new(inst, max_n)?;
    let mut report = OracleReport {
        instance: inst.descriptor().to_string(),
        n: max_n,
        checks: Vec::new(),
    };
    for n in 0..=max_n {
        let r = oracle.check_bijection(n);
        report.push(format!("Clifford bijection in degree {n}"), r);
    }
    for n in 2..=max_n {
        let mut checks = Vec::new();
        match oracle.check_product(n) {
            Ok(c) => checks.extend(c),
            Err(e) => report.push(format!("products in degree {n}"), Err(e)),
        }
        for kind in [Coproduct::Full, Coproduct::Restricted] {
            match oracle.check_coproduct(n, kind) {
                Ok(c) => checks.extend(c),
                Err(e) => report.push(format!("{kind:?} in degree {n}"), Err(e)),
            }
        }
        match oracle.check_adjointness(n, 3, 0x0ac1e + n as u64) {
            Ok(c) => checks.extend(c),
            Err(e) => report.push(format!("adjointness in degree {n}"), Err(e)),
        }
        for (name, v) in checks {
            report.push(name, Ok(v));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::wreathhopf::FunctionF;

    #[test]
    fn phi_of_trivial_is_trivial() {
        let inst = Instance::graphs();
        let mut o = Oracle::new(&inst, 3).unwrap();
        let key = inst.key(&FunctionF::empty(3), 0).unwrap();
        let phi = o.clifford_phi(&key).unwrap();
        assert_eq!(phi, ClassFunction::trivial(o.group(3).classes.clone()));
    }

    #[test]
    fn graph_instance_bijection_n3() {
        let inst = Instance::graphs();
        let mut o = Oracle::new(&inst, 3).unwrap();
        assert_eq!(inst.basis_keys(3).unwrap().len(), 10);
        assert_eq!(o.group(3).character_table().unwrap().len(), 10);
        assert_eq!(o.check_bijection(3).unwrap(), None);
    }

    #[test]
    fn products_commute_with_phi() {
        for (inst, n) in [(Instance::graphs(), 2), (Instance::graphs(), 3), (Instance::parse("young=id,H=Z2").unwrap(), 2)] {
            let mut o = Oracle::new(&inst, n).unwrap();
            for (name, v) in o.check_product(n).unwrap() {
                assert_eq!(v, None, "{name}");
            }
        }
    }

    #[test]
    fn coproducts_commute_with_phi() {
        let inst = Instance::graphs();
        let mut o = Oracle::new(&inst, 3).unwrap();
        for n in 2..=3 {
            for kind in [Coproduct::Full, Coproduct::Restricted] {
                for (name, v) in o.check_coproduct(n, kind).unwrap() {
                    assert_eq!(v, None, "{name}");
                }
            }
        }
    }

    #[test]
    fn restricted_drops_middle_term_for_an_edge() {
        let inst = Instance::graphs();
        let k2 = inst.key(&FunctionF::from_graph(&Graph::complete(2).unwrap()), 0).unwrap();
        let full = inst.coproduct_key(&k2, Coproduct::Full).unwrap();
        let small = inst.coproduct_key(&k2, Coproduct::Restricted).unwrap();
        assert_eq!(full.len(), 3);
        assert_eq!(small.len(), 2);
        assert!(small.iter().all(|((l, _), _)| l.degree() != 1));
    }

    #[test]
    fn pind_pres_adjoint() {
        let inst = Instance::graphs();
        let mut o = Oracle::new(&inst, 3).unwrap();
        for (name, v) in o.check_adjointness(3, 4, 7).unwrap() {
            assert_eq!(v, None, "{name}");
        }
        let id = Instance::parse("young=id,H=Z2").unwrap();
        let mut o = Oracle::new(&id, 3).unwrap();
        for (name, v) in o.check_pres_is_res(3).unwrap() {
            assert_eq!(v, None, "{name}");
        }
    }

    #[test]
    fn pinned_instances_pass() {
        for (inst, n) in pinned_instances() {
            let report = run_oracle(&inst, n).unwrap();
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{}: {failed:?}", inst.descriptor());
        }
    }

    #[test]
    fn pres_differs_from_res_for_graphs() {
        let inst = Instance::graphs();
        let o = Oracle::new(&inst, 2).unwrap();
        let blocks = vec![vec![0], vec![1]];
        let t = o.group(2).character_table().unwrap().clone();
        let differs = (0..t.len()).any(|i| {
            o.pres_character(2, &blocks, &t.row(i)).unwrap() != o.res_character(2, &blocks, &t.row(i)).unwrap()
        });
        assert!(differs);
    }
}
