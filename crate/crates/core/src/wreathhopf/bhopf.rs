use std::collections::BTreeMap;

use super::element::{BHopfElement, BHopfTensor};
use super::function::FunctionF;
use super::instance::Instance;
use super::mhopf::Coproduct;
use crate::error::Result;
use crate::limits;
use crate::symfunc::{assemble_from_quasi, SymFunc};

impl Instance {
    /// `π_F` for the canonical representative of `F`.
    pub fn b_key(&self, f: &FunctionF) -> Result<FunctionF> {
        Ok(self.canonicalize(f)?.0)
    }

    pub fn b_unit(&self) -> BHopfElement {
        BHopfElement::basis(FunctionF::empty(0))
    }

    /// Product in `ℬ`: the canonical disjoint union.
    pub fn b_product(&self, a: &BHopfElement, b: &BHopfElement) -> Result<BHopfElement> {
        let mut out = BHopfElement::zero();
        for (fa, ca) in a.terms() {
            for (fb, cb) in b.terms() {
                limits::check("product degree", fa.n() + fb.n(), limits::current().degree_cap)?;
                let u = fa.disjoint_union(self.young(), fb);
                out.add_term(self.canonicalize(&u)?.0, ca * cb);
            }
        }
        Ok(out)
    }

    /// `Δ_ℬ` sums over every subset `K ⊆ [n]`; `δ_ℬ` keeps the `K` along
    /// which the support splits.
    pub fn b_coproduct(&self, a: &BHopfElement, kind: Coproduct) -> Result<BHopfTensor> {
        let mut out = BHopfTensor::zero();
        for (f, c) in a.terms() {
            let n = f.n();
            limits::check("coproduct degree", n, limits::current().degree_cap)?;
            let full = (1u32 << n) - 1;
            for mask in 0..=full {
                if kind == Coproduct::Restricted && !f.splits_along(self.young(), mask) {
                    continue;
                }
                let k: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let kc: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
                let l = self.canonicalize(&f.restrict(self.young(), &k))?.0;
                let r = self.canonicalize(&f.restrict(self.young(), &kc))?.0;
                out.add_term((l, r), c);
            }
        }
        Ok(out)
    }

    pub fn b_counit(&self, a: &BHopfElement) -> i64 {
        a.coeff(&FunctionF::empty(0))
    }

    /// `ζ_ℬ`: the total coefficient of functions with empty support.
    pub fn zeta_b(&self, a: &BHopfElement) -> i64 {
        a.terms().filter(|(f, _)| f.has_empty_support()).map(|(_, c)| c).sum()
    }

    /// `Ψ_ℬ(π_F)`: the coefficient of `M_α` counts proper `α`-compositions.
    pub fn psi_b_key(&self, f: &FunctionF) -> Result<SymFunc> {
        let (c, _) = self.canonicalize(f)?;
        if c.n() == 0 {
            return Ok(SymFunc::one());
        }
        let data = self.aut_data(&c)?;
        let id = data.group.index_of(&crate::permgroups::Perm::identity(c.n())).expect("identity");
        let id_class = data.classes.class_of[id];
        let rho = self.composition_characters(&c)?;
        let coeffs: BTreeMap<_, _> = rho.iter().map(|(alpha, v)| (alpha.clone(), v[id_class])).collect();
        assemble_from_quasi(&coeffs)
    }

    pub fn psi_b(&self, a: &BHopfElement) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (f, c) in a.terms() {
            out = out.add(&self.psi_b_key(f)?.scale(c)?)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::symfunc::IntPartition;

    fn canon(inst: &Instance, g: &Graph) -> FunctionF {
        inst.b_key(&FunctionF::from_graph(g)).unwrap()
    }

    #[test]
    fn product_is_disjoint_union() {
        let inst = Instance::graphs();
        let k2 = BHopfElement::basis(canon(&inst, &Graph::complete(2).unwrap()));
        let x = BHopfElement::basis(canon(&inst, &Graph::empty(1).unwrap()));
        let p = inst.b_product(&k2, &x).unwrap();
        let expect = canon(&inst, &Graph::new(3, &[(0, 1)]).unwrap());
        assert_eq!(p, BHopfElement::basis(expect));
        assert_eq!(inst.b_product(&inst.b_unit(), &x).unwrap(), x);
    }

    #[test]
    fn coproduct_counts() {
        let inst = Instance::graphs();
        let x = BHopfElement::basis(canon(&inst, &Graph::empty(1).unwrap()));
        let one = FunctionF::empty(0);
        let xf = FunctionF::empty(1);
        let d = inst.b_coproduct(&x, Coproduct::Full).unwrap();
        assert_eq!(d, BHopfTensor::from_terms([((one.clone(), xf.clone()), 1), ((xf, one), 1)]));
        let k2 = BHopfElement::basis(canon(&inst, &Graph::complete(2).unwrap()));
        let full: i64 = inst.b_coproduct(&k2, Coproduct::Full).unwrap().terms().map(|(_, c)| c).sum();
        let restricted: i64 = inst.b_coproduct(&k2, Coproduct::Restricted).unwrap().terms().map(|(_, c)| c).sum();
        assert_eq!((full, restricted), (4, 2));
    }

    #[test]
    fn psi_b_examples() {
        let inst = Instance::graphs();
        let b = canon(&inst, &Graph::butterfly());
        let x = inst.psi_b_key(&b).unwrap();
        let p = |v: &[usize]| IntPartition::new(v.to_vec()).unwrap();
        assert_eq!(x.coeff(&p(&[2, 2, 1])), 4);
        assert_eq!(x.coeff(&p(&[2, 1, 1, 1])), 24);
        assert_eq!(x.coeff(&p(&[1, 1, 1, 1, 1])), 120);
        assert_eq!(x.len(), 3);
        // edgeless: (Σ x_i)^n
        let e3 = inst.psi_b_key(&FunctionF::empty(3)).unwrap();
        let m1 = SymFunc::monomial(p(&[1]));
        assert_eq!(e3, m1.multiply(&m1).unwrap().multiply(&m1).unwrap());
        // trivial H behaves like the empty-support case
        let t = Instance::parse("young=subsets:2,H=1").unwrap();
        assert_eq!(t.psi_b_key(&FunctionF::empty(3)).unwrap(), e3);
    }

    #[test]
    fn zeta_b_and_reg() {
        let inst = Instance::graphs();
        assert_eq!(inst.zeta_b(&BHopfElement::basis(FunctionF::empty(4))), 1);
        let b = canon(&inst, &Graph::butterfly());
        assert_eq!(inst.zeta_b(&BHopfElement::basis(b.clone())), 0);
        let r = inst.reg_embed(&b).unwrap();
        let mut coeffs: Vec<i64> = r.terms().map(|(_, c)| c).collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![1, 1, 1, 1, 2]);
        assert_eq!(inst.reg_embed(&FunctionF::empty(0)).unwrap(), inst.unit());
    }

    #[test]
    fn psi_commutes_with_reg_embed() {
        let inst = Instance::graphs();
        for n in 0..=5 {
            for f in inst.basis_functions(n).unwrap().iter() {
                let lhs = inst.psi(&inst.reg_embed(f).unwrap()).unwrap();
                assert_eq!(lhs, inst.psi_b_key(f).unwrap(), "{f:?}");
            }
        }
    }
}
