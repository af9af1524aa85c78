//! Verification suites: algebraic axioms of `ℳ`, self-adjointness, the
//! morphism `Ψ`, the oracle comparison and the Young-set axioms. Each suite
//! returns an ordered list of named pass/fail checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::oracle::{pinned_instances, run_oracle};
use crate::par;
use crate::wreathhopf::{Coproduct, HopfElement, HopfTensor, Instance, LinComb, MBasisKey};
use crate::youngsets::{builtin, verify_axioms};

pub const SCHEMA: &str = "hopfchrom/1";

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn from_result(name: String, r: Result<Option<String>>) -> Check {
        match r {
            Ok(None) => Check { name, passed: true, detail: None },
            Ok(Some(d)) => Check { name, passed: false, detail: Some(d) },
            Err(e) => Check { name, passed: false, detail: Some(e.to_string()) },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    Psh,
    Psi,
    Clifford,
    YoungSets,
    All,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "hopf" => Suite::Hopf,
            "psh" => Suite::Psh,
            "psi" => Suite::Psi,
            "clifford" => Suite::Clifford,
            "youngsets" => Suite::YoungSets,
            "all" => Suite::All,
            other => return Err(crate::error::invalid(format!("unknown suite '{other}'"))),
        })
    }
}

type Triple = (MBasisKey, MBasisKey, MBasisKey);

fn mismatch<T: std::fmt::Debug + PartialEq>(what: &str, lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs:?} != {rhs:?}"))
}

/// `(Δ ⊗ id)` applied to a tensor.
pub fn coproduct_left(inst: &Instance, t: &HopfTensor, kind: Coproduct) -> Result<LinComb<Triple>> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t.terms() {
        for ((a1, a2), m) in inst.coproduct_key(a, kind)?.iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c * m);
        }
    }
    Ok(out)
}

/// `(id ⊗ Δ)` applied to a tensor.
pub fn coproduct_right(inst: &Instance, t: &HopfTensor, kind: Coproduct) -> Result<LinComb<Triple>> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t.terms() {
        for ((b1, b2), m) in inst.coproduct_key(b, kind)?.iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c * m);
        }
    }
    Ok(out)
}

/// Counit on each side, coassociativity and grading of both coproducts,
/// and cocommutativity of `Δ`, for one basis key.
pub fn coalgebra_checks(inst: &Instance, key: &MBasisKey) -> Result<Option<String>> {
    let x = HopfElement::basis(key.clone());
    for kind in [Coproduct::Full, Coproduct::Restricted] {
        let d = inst.coproduct(&x, kind)?;
        let left: HopfElement = LinComb::from_terms(d.terms().map(|((l, r), c)| (r.clone(), c * inst.counit(&HopfElement::basis(l.clone())))));
        let right: HopfElement = LinComb::from_terms(d.terms().map(|((l, r), c)| (l.clone(), c * inst.counit(&HopfElement::basis(r.clone())))));
        if let Some(m) = mismatch(&format!("{kind:?} left counit"), &left, &x) {
            return Ok(Some(m));
        }
        if let Some(m) = mismatch(&format!("{kind:?} right counit"), &right, &x) {
            return Ok(Some(m));
        }
        if let Some(((l, r), _)) = d.terms().find(|((l, r), _)| l.degree() + r.degree() != key.degree()) {
            return Ok(Some(format!("{kind:?} term {l:?} ⊗ {r:?} breaks the grading")));
        }
        let lhs = coproduct_left(inst, &d, kind)?;
        let rhs = coproduct_right(inst, &d, kind)?;
        if let Some(m) = mismatch(&format!("{kind:?} coassociativity"), &lhs, &rhs) {
            return Ok(Some(m));
        }
        if kind == Coproduct::Full {
            let flipped = LinComb::from_terms(d.terms().map(|((l, r), c)| ((r.clone(), l.clone()), c)));
            if let Some(m) = mismatch("cocommutativity", &flipped, &d) {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

/// Commutativity, counit multiplicativity and compatibility of both
/// coproducts with the product, for one pair of basis keys.
pub fn bialgebra_checks(inst: &Instance, a: &MBasisKey, b: &MBasisKey) -> Result<Option<String>> {
    let (x, y) = (HopfElement::basis(a.clone()), HopfElement::basis(b.clone()));
    let xy = inst.hopf_product(&x, &y)?;
    let yx = inst.hopf_product(&y, &x)?;
    if let Some(m) = mismatch("commutativity", &xy, &yx) {
        return Ok(Some(m));
    }
    if let Some((k, _)) = xy.terms().find(|(k, _)| k.degree() != a.degree() + b.degree()) {
        return Ok(Some(format!("product term {k:?} has the wrong degree")));
    }
    if inst.counit(&xy) != inst.counit(&x) * inst.counit(&y) {
        return Ok(Some("counit is not multiplicative".into()));
    }
    for kind in [Coproduct::Full, Coproduct::Restricted] {
        let lhs = inst.coproduct(&xy, kind)?;
        let rhs = inst.tensor_product(&inst.coproduct(&x, kind)?, &inst.coproduct(&y, kind)?)?;
        if let Some(m) = mismatch(&format!("{kind:?}(ab) = {kind:?}(a){kind:?}(b)"), &lhs, &rhs) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

pub fn associativity_check(inst: &Instance, a: &MBasisKey, b: &MBasisKey, c: &MBasisKey) -> Result<Option<String>> {
    let (x, y, z) = (HopfElement::basis(a.clone()), HopfElement::basis(b.clone()), HopfElement::basis(c.clone()));
    let lhs = inst.hopf_product(&inst.hopf_product(&x, &y)?, &z)?;
    let rhs = inst.hopf_product(&x, &inst.hopf_product(&y, &z)?)?;
    Ok(mismatch("associativity", &lhs, &rhs))
}

/// Both coproducts agree when each orbit of subsets is represented by its
/// largest element instead of its smallest.
fn representative_check(inst: &Instance, key: &MBasisKey) -> Result<Option<String>> {
    for kind in [Coproduct::Full, Coproduct::Restricted] {
        let usual = HopfTensor::from_terms(inst.coproduct_key(key, kind)?.iter().cloned());
        let alt = HopfTensor::from_terms(inst.coproduct_key_alt_reps(key, kind)?);
        if usual != alt {
            return Ok(Some(format!("{kind:?} depends on the representatives")));
        }
    }
    Ok(None)
}

/// `⟨a·b, c⟩ = ⟨a ⊗ b, δ(c)⟩` for every basis triple with `deg c = n`.
pub fn psh_checks(inst: &Instance, n: usize) -> Result<Vec<(String, Option<String>)>> {
    let mut out = Vec::new();
    let cs = inst.basis_keys(n)?;
    for k in 0..=n {
        let lefts = inst.basis_keys(k)?;
        let rights = inst.basis_keys(n - k)?;
        for a in &lefts {
            for b in &rights {
                let prod = inst.product_keys(a, b)?;
                for c in &cs {
                    let lhs = prod.iter().find(|(kk, _)| kk == c).map(|(_, m)| *m).unwrap_or(0);
                    let rhs = inst
                        .coproduct_key(c, Coproduct::Restricted)?
                        .iter()
                        .find(|((l, r), _)| l == a && r == b)
                        .map(|(_, m)| *m)
                        .unwrap_or(0);
                    if lhs != rhs {
                        out.push((
                            format!("⟨{a:?}·{b:?}, {c:?}⟩"),
                            Some(format!("product side {lhs}, coproduct side {rhs}")),
                        ));
                    }
                }
            }
        }
    }
    if out.is_empty() {
        out.push((format!("self-adjointness in degree {n}"), None));
    }
    Ok(out)
}

/// `Ψ(ab) = Ψ(a)Ψ(b)`.
pub fn psi_multiplicative(inst: &Instance, a: &MBasisKey, b: &MBasisKey) -> Result<Option<String>> {
    let (x, y) = (HopfElement::basis(a.clone()), HopfElement::basis(b.clone()));
    let lhs = inst.psi(&inst.hopf_product(&x, &y)?)?;
    let rhs = inst.psi_key(a)?.multiply(&inst.psi_key(b)?)?;
    Ok(mismatch("Ψ(ab) = Ψ(a)Ψ(b)", &lhs, &rhs))
}

/// `ζ(x)` is the coefficient of `m_(n)` in `Ψ(x)`.
pub fn psi_zeta(inst: &Instance, key: &MBasisKey) -> Result<Option<String>> {
    let z = inst.zeta(&HopfElement::basis(key.clone()));
    let p = inst.psi_key(key)?;
    let c = if key.degree() == 0 {
        p.coeff(&crate::symfunc::IntPartition::empty())
    } else {
        p.coeff(&crate::symfunc::IntPartition::one_row(key.degree()))
    };
    Ok((z != c).then(|| format!("ζ = {z}, coefficient of m_(n) = {c}")))
}

/// Random pairs of basis keys with the given total degree.
pub fn random_pairs(inst: &Instance, total: usize, count: usize, seed: u64) -> Result<Vec<(MBasisKey, MBasisKey)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let by_degree: Vec<Vec<MBasisKey>> = (0..=total).map(|d| inst.basis_keys(d)).collect::<Result<_>>()?;
    Ok((0..count)
        .map(|_| {
            let k = rng.gen_range(1..total.max(2));
            let k = k.min(total);
            let a = &by_degree[k][rng.gen_range(0..by_degree[k].len())];
            let b = &by_degree[total - k][rng.gen_range(0..by_degree[total - k].len())];
            (a.clone(), b.clone())
        })
        .collect())
}

fn keys_up_to(inst: &Instance, n: usize) -> Result<Vec<MBasisKey>> {
    let mut out = Vec::new();
    for d in 0..=n {
        out.extend(inst.basis_keys(d)?);
    }
    Ok(out)
}

fn hopf_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for inst in [Instance::graphs(), Instance::parse("young=id,H=Z2")?] {
        let d = inst.descriptor().to_string();
        let keys = keys_up_to(&inst, 4)?;
        let results = par::map(&keys, |k| coalgebra_checks(&inst, k));
        for (k, r) in keys.iter().zip(results) {
            checks.push(Check::from_result(format!("[{d}] coalgebra axioms at {k:?}"), r));
        }
        let pairs: Vec<(MBasisKey, MBasisKey)> = keys
            .iter()
            .flat_map(|a| keys.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| a.degree() + b.degree() <= 4 && a <= b)
            .collect();
        let results = par::map(&pairs, |(a, b)| bialgebra_checks(&inst, a, b));
        let failed: Vec<Check> = pairs
            .iter()
            .zip(results)
            .map(|((a, b), r)| Check::from_result(format!("[{d}] bialgebra axioms at {a:?}, {b:?}"), r))
            .collect();
        checks.push(summarize(format!("[{d}] bialgebra axioms, all pairs of total degree ≤ 4"), failed));
        let random = random_pairs(&inst, 5, 50, 0xb1a1)?;
        let results = par::map(&random, |(a, b)| bialgebra_checks(&inst, a, b));
        let failed = random
            .iter()
            .zip(results)
            .map(|((a, b), r)| Check::from_result(format!("[{d}] bialgebra axioms at {a:?}, {b:?}"), r))
            .collect();
        checks.push(summarize(format!("[{d}] bialgebra axioms, 50 random pairs of degree 5"), failed));
        let small = keys_up_to(&inst, 2)?;
        let mut assoc = Vec::new();
        for a in &small {
            for b in &small {
                for c in &small {
                    assoc.push(Check::from_result(
                        format!("[{d}] associativity at {a:?}, {b:?}, {c:?}"),
                        associativity_check(&inst, a, b, c),
                    ));
                }
            }
        }
        checks.push(summarize(format!("[{d}] associativity, all triples of degree ≤ 2 each"), assoc));
        let results = par::map(&keys, |k| representative_check(&inst, k));
        let failed = keys
            .iter()
            .zip(results)
            .map(|(k, r)| Check::from_result(format!("[{d}] orbit representatives at {k:?}"), r))
            .collect();
        checks.push(summarize(format!("[{d}] coproducts independent of orbit representatives"), failed));
    }
    Ok(SuiteReport::new("hopf", checks))
}

/// Collapse many checks into one, keeping the first failure.
fn summarize(name: String, checks: Vec<Check>) -> Check {
    let total = checks.len();
    match checks.into_iter().find(|c| !c.passed) {
        None => Check { name: format!("{name} ({total} cases)"), passed: true, detail: None },
        Some(c) => Check {
            name,
            passed: false,
            detail: Some(format!("{}: {}", c.name, c.detail.unwrap_or_default())),
        },
    }
}

fn psh_suite() -> Result<SuiteReport> {
    let inst = Instance::graphs();
    let mut checks = Vec::new();
    for n in 0..=4 {
        for (name, v) in psh_checks(&inst, n)? {
            checks.push(Check::from_result(format!("[{}] {name}", inst.descriptor()), Ok(v)));
        }
    }
    Ok(SuiteReport::new("psh", checks))
}

fn psi_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for inst in [Instance::graphs(), Instance::parse("young=id,H=Z2")?] {
        let d = inst.descriptor().to_string();
        let mut pairs = Vec::new();
        for total in 1..=5 {
            pairs.extend(random_pairs(&inst, total, 10, 0x9510 + total as u64)?);
        }
        let results = par::map(&pairs, |(a, b)| psi_multiplicative(&inst, a, b));
        let all = pairs
            .iter()
            .zip(results)
            .map(|((a, b), r)| Check::from_result(format!("{a:?}, {b:?}"), r))
            .collect();
        checks.push(summarize(format!("[{d}] Ψ multiplicative on 50 pairs of degree ≤ 5"), all));
        let keys = keys_up_to(&inst, 4)?;
        let results = par::map(&keys, |k| psi_zeta(&inst, k));
        let all = keys.iter().zip(results).map(|(k, r)| Check::from_result(format!("{k:?}"), r)).collect();
        checks.push(summarize(format!("[{d}] ζ = coefficient of m_(n) in Ψ, degree ≤ 4"), all));
    }
    Ok(SuiteReport::new("psi", checks))
}

fn clifford_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for (inst, n) in pinned_instances() {
        let report = run_oracle(&inst, n)?;
        let d = inst.descriptor();
        let all = report
            .checks
            .into_iter()
            .map(|c| Check {
                name: c.name,
                passed: c.passed,
                detail: c.detail,
            })
            .collect();
        checks.push(summarize(format!("[{d}] oracle checks up to degree {n}"), all));
    }
    Ok(SuiteReport::new("clifford", checks))
}

/// Young sets exercised by the axiom suite.
pub const SHIPPED_YOUNG_SETS: &[&str] = &[
    "empty",
    "id",
    "subsets:2",
    "subsets:3",
    "nonempty_subsets",
    "tuples:2",
    "perms",
    "product(id;subsets:2)",
    "coproduct(id;subsets:2)",
];

fn youngsets_suite(n_max: usize) -> Result<SuiteReport> {
    let names: Vec<&str> = SHIPPED_YOUNG_SETS.to_vec();
    let reports = par::map(&names, |name| builtin(name).map(|y| verify_axioms(y.as_ref(), n_max)));
    let mut checks = Vec::new();
    for r in reports {
        let r = r?;
        for c in r.checks {
            checks.push(Check {
                name: format!("[{}] {}", r.young_set, c.axiom),
                passed: c.passed,
                detail: c.witness,
            });
        }
    }
    Ok(SuiteReport::new("youngsets", checks))
}

pub fn run_suite(suite: Suite) -> Result<VerifyReport> {
    let suites = match suite {
        Suite::Hopf => vec![hopf_suite()?],
        Suite::Psh => vec![psh_suite()?],
        Suite::Psi => vec![psi_suite()?],
        Suite::Clifford => vec![clifford_suite()?],
        Suite::YoungSets => vec![youngsets_suite(6)?],
        Suite::All => vec![hopf_suite()?, psh_suite()?, psi_suite()?, clifford_suite()?, youngsets_suite(6)?],
    };
    Ok(VerifyReport {
        schema: SCHEMA,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        assert_eq!("psh".parse::<Suite>().unwrap(), Suite::Psh);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn coalgebra_axioms_small() {
        let inst = Instance::graphs();
        for k in keys_up_to(&inst, 3).unwrap() {
            assert_eq!(coalgebra_checks(&inst, &k).unwrap(), None, "{k:?}");
        }
    }

    #[test]
    fn psh_degree_three() {
        let inst = Instance::graphs();
        let out = psh_checks(&inst, 3).unwrap();
        assert!(out.iter().all(|(_, v)| v.is_none()), "{out:?}");
    }

    #[test]
    fn youngsets_small() {
        assert!(youngsets_suite(4).unwrap().passed);
    }

    #[test]
    fn random_pairs_have_total_degree() {
        let inst = Instance::graphs();
        for (a, b) in random_pairs(&inst, 4, 10, 1).unwrap() {
            assert_eq!(a.degree() + b.degree(), 4);
            assert!(a.degree() >= 1 && b.degree() >= 1);
        }
    }
}
