//! Graph specialization: refined chromatic symmetric functions, their
//! polynomial specializations and the free-action diagnostics.
//!
//! Irrep indices always refer to the character table of the automorphism
//! group of the *canonical* form of the graph.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::characters::{as_multiplicity, inner_product, permutation_character, CharacterTable};
use crate::error::{internal, invalid, Result};
use crate::graphs::Graph;
use crate::limits;
use crate::par;
use crate::permgroups::{ConjClasses, Group, Perm, PermGroup};
use crate::symfunc::{assemble_from_quasi, enumerate_compositions, IntComposition, IntPolynomial, SymFunc};
use crate::wreathhopf::{
    BHopfElement, Coproduct, FunctionF, HopfElement, HopfTensor, Instance, MBasisKey,
};

/// Proper colourings of a graph with prescribed colour class sizes.
/// Colours are `0..ℓ`; entry `v` of a colouring is the colour of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouringSet {
    pub graph: Graph,
    pub alpha: IntComposition,
    pub colourings: Vec<Vec<u8>>,
}

impl ColouringSet {
    pub fn len(&self) -> usize {
        self.colourings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colourings.is_empty()
    }
}

/// How to compute `X_{Γ,γ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Through `Ψ` on the graph instance of `ℳ`.
    Wreath,
    /// By enumerating colourings and decomposing the permutation character.
    Direct,
}

/// All proper `α`-colourings, in lexicographic order.
pub fn colourings(g: &Graph, alpha: &IntComposition) -> Result<ColouringSet> {
    let n = g.n();
    limits::check("vertex count", n, limits::current().vertex_cap)?;
    if alpha.weight() != n {
        return Err(invalid(format!("composition {alpha} has weight {} but the graph has {n} vertices", alpha.weight())));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut budget = alpha.parts().to_vec();
    let mut cur = vec![u8::MAX; n];
    let mut out = Vec::new();
    colour_rec(g, &order, 0, &mut budget, &mut cur, &mut out);
    out.sort();
    Ok(ColouringSet {
        graph: g.clone(),
        alpha: alpha.clone(),
        colourings: out,
    })
}

fn colour_rec(g: &Graph, order: &[usize], i: usize, budget: &mut [usize], cur: &mut [u8], out: &mut Vec<Vec<u8>>) {
    if i == order.len() {
        out.push(cur.to_vec());
        return;
    }
    let v = order[i];
    let nb = g.neighbours(v);
    for c in 0..budget.len() {
        if budget[c] == 0 {
            continue;
        }
        let clash = (0..g.n()).any(|u| nb >> u & 1 == 1 && cur[u] == c as u8);
        if clash {
            continue;
        }
        budget[c] -= 1;
        cur[v] = c as u8;
        colour_rec(g, order, i + 1, budget, cur, out);
        cur[v] = u8::MAX;
        budget[c] += 1;
    }
}

/// The canonical form of a graph with its automorphism data.
struct Canon {
    graph: Graph,
    group: PermGroupRef,
}

type PermGroupRef = Arc<crate::wreathhopf::AutData>;

fn canon(g: &Graph) -> Result<Canon> {
    let inst = Instance::graphs();
    let (f, _) = inst.canonicalize(&FunctionF::from_graph(g))?;
    let group = inst.aut_data(&f)?;
    Ok(Canon {
        graph: f.to_graph().expect("graph instance"),
        group,
    })
}

/// The basis key `(Γ, γ)` of the graph instance.
pub fn rep_key(g: &Graph, irrep: usize) -> Result<MBasisKey> {
    Instance::graphs().key(&FunctionF::from_graph(g), irrep)
}

/// Character table of `Aut Γ` for the canonical form of `Γ`.
pub fn aut_table(g: &Graph) -> Result<(PermGroup, Arc<ConjClasses>, CharacterTable)> {
    let c = canon(g)?;
    Ok((c.group.group.clone(), c.group.classes.clone(), c.group.table.clone()))
}

/// `X_{Γ,γ}`.
pub fn x_gamma(g: &Graph, irrep: usize, method: Method) -> Result<SymFunc> {
    match method {
        Method::Wreath => Instance::graphs().psi_key(&rep_key(g, irrep)?),
        Method::Direct => x_gamma_direct(g, irrep),
    }
}

fn x_gamma_direct(g: &Graph, irrep: usize) -> Result<SymFunc> {
    let c = canon(g)?;
    let data = &c.group;
    if irrep >= data.table.len() {
        return Err(invalid(format!("irrep {irrep} out of range; Aut has {} irreducible characters", data.table.len())));
    }
    let gamma = data.table.row(irrep);
    let comps = enumerate_compositions(c.graph.n());
    let per_alpha = par::map(&comps, |alpha| -> Result<i64> {
        let col = colourings(&c.graph, alpha)?;
        let rho = permutation_character(&data.group, &data.classes, &col.colourings, |x, k| {
            act_on_colouring(data.group.element(x), k)
        })?;
        as_multiplicity(&inner_product(&rho, &gamma)?, "colouring multiplicity")
    });
    let mut coeffs = BTreeMap::new();
    for (alpha, m) in comps.into_iter().zip(per_alpha) {
        coeffs.insert(alpha, m?);
    }
    assemble_from_quasi(&coeffs)
}

/// `(w·κ)(w(v)) = κ(v)`.
fn act_on_colouring(w: &Perm, k: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; k.len()];
    for (v, &c) in k.iter().enumerate() {
        out[w.apply(v)] = c;
    }
    out
}

/// Stanley's chromatic symmetric function `Σ_α |Col_{Γ,α}| M_α`.
pub fn x_chromatic(g: &Graph) -> Result<SymFunc> {
    limits::check("vertex count", g.n(), limits::current().vertex_cap)?;
    let comps = enumerate_compositions(g.n());
    let counts = par::map(&comps, |alpha| colourings(g, alpha).map(|c| c.len() as i64));
    let mut coeffs = BTreeMap::new();
    for (alpha, n) in comps.into_iter().zip(counts) {
        coeffs.insert(alpha, n?);
    }
    let x = assemble_from_quasi(&coeffs)?;
    let check = x_combination(g, &aut_table(g)?.2.degrees(), Method::Wreath)?;
    if check != x {
        return Err(internal(format!("Σ deg γ · X_γ = {check} differs from X = {x}")));
    }
    Ok(x)
}

/// `Σ_i c_i X_{Γ,γ_i}` for a coefficient vector indexed like the table.
pub fn x_combination(g: &Graph, coeffs: &[i64], method: Method) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            out = out.add(&x_gamma(g, i, method)?.scale(c)?)?;
        }
    }
    Ok(out)
}

/// `χ_{Γ,γ}(m) = X_{Γ,γ}(1^m)`.
pub fn chi_poly(g: &Graph, irrep: usize) -> Result<IntPolynomial> {
    Ok(x_gamma(g, irrep, Method::Wreath)?.specialize_polynomial())
}

/// The orbital chromatic polynomial, `χ_{Γ,triv}`.
pub fn orbital_chromatic(g: &Graph) -> Result<IntPolynomial> {
    chi_poly(g, 0)
}

/// `Σ_i c_i χ_{Γ,γ_i}`; with `c = degrees` this is the chromatic polynomial.
pub fn chi_poly_combination(g: &Graph, coeffs: &[i64]) -> Result<IntPolynomial> {
    Ok(x_combination(g, coeffs, Method::Wreath)?.specialize_polynomial())
}

/// Number of `Aut Γ`-orbits on proper colourings with at most `m` colours,
/// counted directly with Burnside's lemma.
pub fn orbit_count_burnside(g: &Graph, m: usize) -> Result<u64> {
    let c = canon(g)?;
    let n = c.graph.n();
    let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    limits::check("colourings scanned", total.min(usize::MAX as u128) as usize, limits::current().group_order_cap)?;
    let mut fixed_sum = 0u64;
    for w in c.group.group.elements() {
        let mut k = vec![0u8; n];
        for code in 0..total as u64 {
            let mut x = code;
            for slot in k.iter_mut() {
                *slot = (x % m as u64) as u8;
                x /= m as u64;
            }
            let proper = c.graph.edges().iter().all(|&(a, b)| k[a] != k[b]);
            if proper && (0..n).all(|v| k[w.apply(v)] == k[v]) {
                fixed_sum += 1;
            }
        }
    }
    Ok(fixed_sum / c.group.group.order() as u64)
}

/// The five equivalent conditions for `Aut Γ` to act freely on colourings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeActionReport {
    pub aut_order: usize,
    /// `Aut Γ` acts freely on every `Col_{Γ,α}`.
    pub acts_freely: bool,
    /// `X_Γ = |Aut Γ|·X_{Γ,triv}`.
    pub stanley_is_multiple: bool,
    /// `χ_Γ = |Aut Γ|·χ_{Γ,triv}`.
    pub polynomial_is_multiple: bool,
    /// `X_{Γ,γ} = (dim γ)·X_{Γ,triv}` for every `γ`.
    pub every_refinement_is_multiple: bool,
    /// `χ_{Γ,γ} = (dim γ)·χ_{Γ,triv}` for every `γ`.
    pub every_polynomial_is_multiple: bool,
}

impl FreeActionReport {
    pub fn all(&self) -> [bool; 5] {
        [
            self.acts_freely,
            self.stanley_is_multiple,
            self.polynomial_is_multiple,
            self.every_refinement_is_multiple,
            self.every_polynomial_is_multiple,
        ]
    }
}

pub fn free_action_report(g: &Graph) -> Result<FreeActionReport> {
    let c = canon(g)?;
    let data = &c.group;
    let order = data.group.order();
    let comps = enumerate_compositions(c.graph.n());
    let free_per_alpha = par::map(&comps, |alpha| -> Result<bool> {
        let col = colourings(&c.graph, alpha)?;
        Ok(col.colourings.iter().all(|k| {
            data.group
                .elements()
                .iter()
                .all(|w| w.is_identity() || act_on_colouring(w, k) != *k)
        }))
    });
    let mut acts_freely = true;
    for f in free_per_alpha {
        acts_freely &= f?;
    }
    let xs: Vec<SymFunc> = (0..data.table.len())
        .map(|i| x_gamma(&c.graph, i, Method::Wreath))
        .collect::<Result<_>>()?;
    let polys: Vec<IntPolynomial> = xs.iter().map(|x| x.specialize_polynomial()).collect();
    let x_total = x_chromatic(&c.graph)?;
    let order_i = order as i64;
    let stanley_is_multiple = x_total == xs[0].scale(order_i)?;
    let polynomial_is_multiple = x_total.specialize_polynomial() == polys[0].scale(&order_i.into());
    let degrees = data.table.degrees();
    let every_refinement_is_multiple = xs
        .iter()
        .zip(&degrees)
        .map(|(x, &d)| xs[0].scale(d).map(|y| y == *x))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let every_polynomial_is_multiple = polys.iter().zip(&degrees).all(|(p, &d)| *p == polys[0].scale(&d.into()));
    let report = FreeActionReport {
        aut_order: order,
        acts_freely,
        stanley_is_multiple,
        polynomial_is_multiple,
        every_refinement_is_multiple,
        every_polynomial_is_multiple,
    };
    let all = report.all();
    if all.iter().any(|&b| b != all[0]) {
        return Err(internal(format!("free-action conditions disagree for {g:?}: {all:?}")));
    }
    Ok(report)
}

/// Product in the graph instance of `ℳ`.
pub fn product(a: &HopfElement, b: &HopfElement) -> Result<HopfElement> {
    Instance::graphs().hopf_product(a, b)
}

pub fn coproduct(a: &HopfElement, kind: Coproduct) -> Result<HopfTensor> {
    Instance::graphs().coproduct(a, kind)
}

pub fn zeta(a: &HopfElement) -> i64 {
    Instance::graphs().zeta(a)
}

/// The embedding of the graph Hopf algebra: `[Γ] ↦ Σ_γ (deg γ)(Γ, γ)`.
pub fn reg_embed(g: &Graph) -> Result<HopfElement> {
    Instance::graphs().reg_embed(&FunctionF::from_graph(g))
}

/// `[Γ]` as an element of `ℬ`.
pub fn graph_element(g: &Graph) -> Result<BHopfElement> {
    Ok(BHopfElement::basis(Instance::graphs().b_key(&FunctionF::from_graph(g))?))
}

/// The graph underlying a key of the graph instance.
pub fn key_graph(k: &MBasisKey) -> Result<Graph> {
    k.function().to_graph().ok_or_else(|| invalid("key is not a graph-instance key"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{schur, IntPartition};

    fn p(v: &[usize]) -> IntPartition {
        IntPartition::new(v.to_vec()).unwrap()
    }

    fn sf(terms: &[(&[usize], i64)]) -> SymFunc {
        SymFunc::from_terms(terms.iter().map(|(v, c)| (p(v), *c))).unwrap()
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &q)| q).collect();
                Graph::new(n, &e).unwrap()
            })
            .collect()
    }

    fn comp(v: &[usize]) -> IntComposition {
        IntComposition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn colouring_counts() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(colourings(&k3, &comp(&[1, 1, 1])).unwrap().len(), 6);
        // the centre takes the singleton colour, each wing edge gets one of
        // each remaining colour: 2·2 colourings for every ordering of (2,2,1)
        assert_eq!(colourings(&Graph::butterfly(), &comp(&[2, 2, 1])).unwrap().len(), 4);
        assert_eq!(colourings(&Graph::butterfly(), &comp(&[1, 2, 2])).unwrap().len(), 4);
        assert_eq!(colourings(&Graph::complete(2).unwrap(), &comp(&[2])).unwrap().len(), 0);
        assert!(colourings(&k3, &comp(&[1, 1])).is_err());
    }

    #[test]
    fn colourings_match_brute_force() {
        for g in all_graphs(4) {
            for alpha in enumerate_compositions(4) {
                let l = alpha.len();
                let mut brute = 0;
                for code in 0..l.pow(4) {
                    let k: Vec<usize> = (0..4).map(|v| code / l.pow(v as u32) % l).collect();
                    let sizes_ok = (0..l).all(|c| k.iter().filter(|&&x| x == c).count() == alpha.parts()[c]);
                    if sizes_ok && g.edges().iter().all(|&(a, b)| k[a] != k[b]) {
                        brute += 1;
                    }
                }
                assert_eq!(colourings(&g, &alpha).unwrap().len(), brute);
            }
        }
    }

    #[test]
    fn butterfly_rows() {
        let b = Graph::butterfly();
        let (_, _, table) = aut_table(&b).unwrap();
        let rho = table.degrees().iter().position(|&d| d == 2).unwrap();
        let expect_rho = sf(&[(&[2, 2, 1], 1), (&[2, 1, 1, 1], 6), (&[1, 1, 1, 1, 1], 30)]);
        for method in [Method::Wreath, Method::Direct] {
            assert_eq!(x_gamma(&b, rho, method).unwrap(), expect_rho);
        }
        let x = x_chromatic(&b).unwrap();
        assert_eq!(x, sf(&[(&[2, 2, 1], 4), (&[2, 1, 1, 1], 24), (&[1, 1, 1, 1, 1], 120)]));
        assert_eq!(orbital_chromatic(&b).unwrap().eval(3), 3.into());
        assert_eq!(chi_poly_combination(&b, &table.degrees()).unwrap().eval(3), 12.into());
    }

    #[test]
    fn edgeless_gives_schur() {
        let g = Graph::empty(3).unwrap();
        let (_, _, table) = aut_table(&g).unwrap();
        let std = table.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(x_gamma(&g, std, Method::Direct).unwrap(), schur(&p(&[2, 1])).unwrap());
        assert_eq!(x_chromatic(&Graph::empty(1).unwrap()).unwrap(), sf(&[(&[1], 1)]));
    }

    #[test]
    fn two_paths_agree() {
        for n in 0..=5 {
            let inst = Instance::graphs();
            for f in inst.basis_functions(n).unwrap().iter() {
                let g = f.to_graph().unwrap();
                let (_, _, t) = aut_table(&g).unwrap();
                for i in 0..t.len() {
                    assert_eq!(x_gamma(&g, i, Method::Wreath).unwrap(), x_gamma(&g, i, Method::Direct).unwrap(), "{g:?} #{i}");
                }
            }
        }
    }

    #[test]
    fn orbital_matches_burnside() {
        for g in [Graph::butterfly(), Graph::kite_with_tail(), Graph::named("P4").unwrap()] {
            let poly = orbital_chromatic(&g).unwrap();
            for m in 0..=4 {
                assert_eq!(poly.eval(m as i64), orbit_count_burnside(&g, m).unwrap().into());
            }
        }
    }

    #[test]
    fn free_action_examples() {
        assert!(free_action_report(&Graph::complete(4).unwrap()).unwrap().all().iter().all(|&b| b));
        assert!(free_action_report(&Graph::butterfly()).unwrap().all().iter().all(|&b| !b));
        assert!(free_action_report(&Graph::empty(1).unwrap()).unwrap().all().iter().all(|&b| b));
    }

    #[test]
    fn hopf_wrappers() {
        let x = HopfElement::basis(rep_key(&Graph::empty(1).unwrap(), 0).unwrap());
        let xx = product(&x, &x).unwrap();
        assert_eq!(xx, reg_embed(&Graph::empty(2).unwrap()).unwrap());
        assert_eq!(zeta(&HopfElement::basis(rep_key(&Graph::empty(3).unwrap(), 0).unwrap())), 1);
        assert_eq!(zeta(&HopfElement::basis(rep_key(&Graph::complete(2).unwrap(), 0).unwrap())), 0);
        let c4 = Graph::named("C4").unwrap();
        assert_eq!(c4.connected_components().len(), 1);
        let k = rep_key(&c4, 0).unwrap();
        assert_eq!(coproduct(&HopfElement::basis(k), Coproduct::Restricted).unwrap().len(), 2);
        assert_eq!(key_graph(&rep_key(&c4, 0).unwrap()).unwrap().edge_count(), 4);
    }
}
