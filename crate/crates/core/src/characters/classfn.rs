use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::cyclotomic::Cyclotomic;
use crate::error::{invalid, Error, Result};
use crate::permgroups::{ClassSummary, ConjClasses, Group};

/// A cyclotomic-valued function on conjugacy classes.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub classes: Arc<ConjClasses>,
    pub values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.classes, &other.classes) && self.values == other.values
    }
}

pub(crate) fn same_group(a: &Arc<ConjClasses>, b: &Arc<ConjClasses>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_same(a: &Arc<ConjClasses>, b: &Arc<ConjClasses>) -> Result<()> {
    if same_group(a, b) {
        Ok(())
    } else {
        Err(Error::GroupMismatch("class functions live on different groups".into()))
    }
}

impl ClassFunction {
    pub fn new(classes: Arc<ConjClasses>, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        if values.len() != classes.len() {
            return Err(invalid("value count does not match class count"));
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn constant(classes: Arc<ConjClasses>, v: i64) -> ClassFunction {
        let values = vec![Cyclotomic::from_int(v); classes.len()];
        ClassFunction { classes, values }
    }

    pub fn trivial(classes: Arc<ConjClasses>) -> ClassFunction {
        ClassFunction::constant(classes, 1)
    }

    /// The regular character: |G| at the identity, 0 elsewhere.
    pub fn regular(classes: Arc<ConjClasses>) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(); classes.len()];
        values[0] = Cyclotomic::from_int(classes.group_order as i64);
        ClassFunction { classes, values }
    }

    pub fn zero(classes: Arc<ConjClasses>) -> ClassFunction {
        ClassFunction::constant(classes, 0)
    }

    /// Value at a group element given by index.
    pub fn at_element(&self, x: usize) -> &Cyclotomic {
        &self.values[self.classes.class_of[x]]
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        check_same(&self.classes, &other.classes)?;
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale_int(&self, k: i64) -> ClassFunction {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.scale_int(k)).collect(),
        }
    }

    /// Pointwise product (tensor product of representations).
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction> {
        check_same(&self.classes, &other.classes)?;
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }
}

/// `(1/|G|) Σ_C |C| a(C) conj(b(C))`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    check_same(&a.classes, &b.classes)?;
    Ok(inner_product_values(&a.classes, &a.values, &b.values))
}

pub(crate) fn inner_product_values(cc: &ConjClasses, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    for c in 0..cc.len() {
        if a[c].is_zero() || b[c].is_zero() {
            continue;
        }
        let t = &a[c] * &b[c].conj();
        acc += &t.scale_int(cc.size(c) as i64);
    }
    acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(cc.group_order)))
}

/// Validate that a value is a nonnegative integer.
pub(crate) fn as_multiplicity(v: &Cyclotomic, what: &str) -> Result<i64> {
    match v.to_integer() {
        Some(z) if !z.is_negative() => z
            .to_i64()
            .ok_or_else(|| Error::NotACharacter(format!("{what}: multiplicity {z} overflows"))),
        _ => Err(Error::NotACharacter(format!("{what}: multiplicity {v} is not a nonnegative integer"))),
    }
}

/// Check that `emb` is an injective homomorphism H → G on a generating set of H.
pub fn check_embedding<H: Group + ?Sized, G: Group + ?Sized>(h: &H, g: &G, emb: &[usize]) -> Result<()> {
    if emb.len() != h.order() {
        return Err(invalid("embedding length does not match subgroup order"));
    }
    let mut seen = vec![false; g.order()];
    for &x in emb {
        if x >= g.order() || seen[x] {
            return Err(invalid("embedding is not injective"));
        }
        seen[x] = true;
    }
    let gens = h.generators();
    for x in 0..h.order() {
        for &s in &gens {
            if emb[h.mul(x, s)] != g.mul(emb[x], emb[s]) {
                return Err(invalid("embedding is not a homomorphism"));
            }
        }
    }
    Ok(())
}

/// Induce a class function from `H` to `G` along the embedding `emb`
/// (`emb[h]` is the index in `G` of subgroup element `h`).
pub fn induce<H: Group + ?Sized, G: Group + ?Sized>(
    chi: &ClassFunction,
    h: &H,
    g: &G,
    emb: &[usize],
    g_classes: &Arc<ConjClasses>,
) -> Result<ClassFunction> {
    check_embedding(h, g, emb)?;
    if g_classes.group_order != g.order() {
        return Err(Error::GroupMismatch("class data does not belong to the ambient group".into()));
    }
    let hc = &chi.classes;
    // counts[hclass][gclass] = #{x ∈ H in hclass landing in gclass}
    let k = g_classes.len();
    let mut counts = vec![vec![0u64; k]; hc.len()];
    for (x, &gx) in emb.iter().enumerate() {
        counts[hc.class_of[x]][g_classes.class_of[gx]] += 1;
    }
    let mut values = Vec::with_capacity(k);
    for gc in 0..k {
        let mut acc = Cyclotomic::zero();
        for (hcl, row) in counts.iter().enumerate() {
            if row[gc] != 0 {
                acc += &chi.values[hcl].scale_int(row[gc] as i64);
            }
        }
        // |G| / (|H| |C|)
        let f = BigRational::new(
            BigInt::from(g.order()),
            BigInt::from(h.order()) * BigInt::from(g_classes.size(gc)),
        );
        values.push(acc.scale(&f));
    }
    Ok(ClassFunction {
        classes: g_classes.clone(),
        values,
    })
}

/// Pull a class function on `G` back to the subgroup `H`.
pub fn restrict<H: Group + ?Sized, G: Group + ?Sized>(
    chi: &ClassFunction,
    h: &H,
    g: &G,
    emb: &[usize],
    h_classes: &Arc<ConjClasses>,
) -> Result<ClassFunction> {
    check_embedding(h, g, emb)?;
    if chi.classes.group_order != g.order() || h_classes.group_order != h.order() {
        return Err(Error::GroupMismatch("class data does not match the groups".into()));
    }
    let values = (0..h_classes.len())
        .map(|c| chi.at_element(emb[h_classes.rep(c)]).clone())
        .collect();
    Ok(ClassFunction {
        classes: h_classes.clone(),
        values,
    })
}

/// Permutation character of an action given on element indices.
pub fn permutation_character<G, P, A>(g: &G, classes: &Arc<ConjClasses>, points: &[P], act: A) -> Result<ClassFunction>
where
    G: Group + ?Sized,
    P: Hash + Eq,
    A: Fn(usize, &P) -> P,
{
    let set: std::collections::HashSet<&P> = points.iter().collect();
    for s in g.generators() {
        for p in points {
            if !set.contains(&act(s, p)) {
                return Err(invalid("action is not closed on the point list"));
            }
        }
    }
    let values = (0..classes.len())
        .map(|c| {
            let x = classes.rep(c);
            let fixed = points.iter().filter(|p| act(x, p) == **p).count();
            Cyclotomic::from_int(fixed as i64)
        })
        .collect();
    Ok(ClassFunction {
        classes: classes.clone(),
        values,
    })
}

/// Dimension of the `U`-fixed vectors, `(1/|U|) Σ_{u∈U} χ(u)`, for a subgroup
/// given by its element indices in `G`.
pub fn fixed_dim(chi: &ClassFunction, subgroup: &[usize]) -> Result<i64> {
    if subgroup.is_empty() {
        return Err(invalid("empty subgroup"));
    }
    let mut counts = vec![0i64; chi.classes.len()];
    for &u in subgroup {
        if u >= chi.classes.group_order {
            return Err(invalid("subgroup element out of range"));
        }
        counts[chi.classes.class_of[u]] += 1;
    }
    let mut acc = Cyclotomic::zero();
    for (c, &n) in counts.iter().enumerate() {
        if n != 0 {
            acc += &chi.values[c].scale_int(n);
        }
    }
    let v = acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(subgroup.len())));
    as_multiplicity(&v, "fixed_dim")
}

/// Serializable view of a character table.
#[derive(Serialize)]
pub struct TableJson<'a> {
    pub classes: Vec<ClassSummary>,
    pub rows: &'a [Vec<Cyclotomic>],
}
