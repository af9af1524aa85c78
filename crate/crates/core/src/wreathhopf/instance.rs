use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;

use super::abelian::AbelianGroup;
use super::function::{FunctionF, FunctionJson};
use crate::characters::{character_table_for_classes, CharacterTable};
use crate::error::{invalid, Result};
use crate::graphs::{automorphism_group_with, canonical_form_with};
use crate::limits::{self, Limits};
use crate::par;
use crate::permgroups::{all_perms, conjugacy_classes, ConjClasses, Group, Perm, PermGroup};
use crate::youngsets::{parse_young_set, YoungSet, YoungSetRef};

/// A choice of Young set `Y` and finite abelian group `H`.
#[derive(Clone)]
pub struct Instance {
    young: YoungSetRef,
    h: AbelianGroup,
    descriptor: String,
}

/// The automorphism group of a canonical `F` with its classes and table.
#[derive(Debug)]
pub struct AutData {
    pub group: PermGroup,
    pub classes: Arc<ConjClasses>,
    pub table: CharacterTable,
    /// Interning id, stable for the life of the process.
    pub id: usize,
}

type CacheKey = (String, FunctionF);

static AUT_CACHE: LazyLock<DashMap<CacheKey, Arc<AutData>>> = LazyLock::new(DashMap::new);
static CANON_CACHE: LazyLock<DashMap<CacheKey, (FunctionF, Perm)>> = LazyLock::new(DashMap::new);
static BASIS_CACHE: LazyLock<DashMap<(String, usize), Arc<Vec<FunctionF>>>> = LazyLock::new(DashMap::new);
static PERMS: LazyLock<DashMap<usize, Arc<Vec<Perm>>>> = LazyLock::new(DashMap::new);
static NEXT_ID: AtomicUsize = AtomicUsize::new(0);

fn perms_of(n: usize) -> Arc<Vec<Perm>> {
    if let Some(p) = PERMS.get(&n) {
        return p.clone();
    }
    let v = Arc::new(all_perms(n));
    PERMS.entry(n).or_insert(v).clone()
}

fn factorial_capped(n: usize) -> usize {
    (1..=n).try_fold(1usize, |a, b| a.checked_mul(b)).unwrap_or(usize::MAX)
}

impl Instance {
    pub fn new(young: YoungSetRef, h: AbelianGroup) -> Instance {
        let descriptor = format!("young={},H={}", young.name(), h);
        Instance { young, h, descriptor }
    }

    /// Graphs: 2-subsets with `H = Z/2`.
    pub fn graphs() -> Instance {
        Instance::new(parse_young_set("subsets:2").expect("builtin"), AbelianGroup::cyclic(2).expect("Z2"))
    }

    /// Parse a selector such as `young=subsets:2,H=Z2`.
    pub fn parse(s: &str) -> Result<Instance> {
        let mut young = None;
        let mut h = None;
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value in instance selector, got '{part}'")))?;
            match k.trim() {
                "young" | "Y" => young = Some(parse_young_set(v)?),
                "H" | "h" => h = Some(AbelianGroup::parse(v)?),
                other => return Err(invalid(format!("unknown instance key '{other}'"))),
            }
        }
        match (young, h) {
            (Some(y), Some(h)) => Ok(Instance::new(y, h)),
            _ => Err(invalid("instance selector needs both young= and H=")),
        }
    }

    pub fn young(&self) -> &dyn YoungSet {
        self.young.as_ref()
    }

    pub fn h(&self) -> &AbelianGroup {
        &self.h
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Number of characters of `H`, which equals `|H|`.
    pub fn n_chars(&self) -> usize {
        self.h.order()
    }

    pub fn function(&self, n: usize, entries: Vec<(Vec<u8>, usize)>) -> Result<FunctionF> {
        FunctionF::new(self.young(), self.n_chars(), n, entries)
    }

    pub fn function_from_json(&self, v: serde_json::Value) -> Result<FunctionF> {
        let j: FunctionJson = serde_json::from_value(v).map_err(|e| invalid(format!("bad function JSON: {e}")))?;
        j.into_function(self.young(), self.n_chars())
    }

    fn is_graph_like(&self, f: &FunctionF) -> bool {
        self.young.name() == "subsets:2" && f.entries().windows(2).all(|w| w[0].1 == w[1].1)
    }

    fn check_size(&self, n: usize, lim: &Limits) -> Result<()> {
        limits::check("vertex count", n, lim.vertex_cap)
    }

    /// The orbit minimum of `F` and a permutation `w` with `w·F` equal to it.
    pub fn canonicalize(&self, f: &FunctionF) -> Result<(FunctionF, Perm)> {
        self.canonicalize_with(f, &limits::current())
    }

    pub fn canonicalize_with(&self, f: &FunctionF, lim: &Limits) -> Result<(FunctionF, Perm)> {
        self.check_size(f.n(), lim)?;
        let key = (self.descriptor.clone(), f.clone());
        if let Some(hit) = CANON_CACHE.get(&key) {
            return Ok(hit.clone());
        }
        let out = if f.has_empty_support() {
            (f.clone(), Perm::identity(f.n()))
        } else if self.is_graph_like(f) {
            let g = f.to_graph().expect("2-subset support is a graph");
            let c = canonical_form_with(&g, lim)?;
            (f.act(self.young(), &c.relabel), c.relabel)
        } else {
            self.canonicalize_brute(f, lim)?
        };
        CANON_CACHE.insert(key, out.clone());
        Ok(out)
    }

    /// Orbit minimum by scanning all of `S_n`; ties go to the earliest
    /// permutation in lexicographic order.
    pub(crate) fn canonicalize_brute(&self, f: &FunctionF, lim: &Limits) -> Result<(FunctionF, Perm)> {
        limits::check("group order", factorial_capped(f.n()), lim.group_order_cap)?;
        let perms = perms_of(f.n());
        let chunk = 720usize;
        let chunks = perms.len().div_ceil(chunk);
        let best = par::map_range(chunks, |c| {
            let mut best: Option<(FunctionF, usize)> = None;
            for i in c * chunk..((c + 1) * chunk).min(perms.len()) {
                let g = f.act(self.young(), &perms[i]);
                if best.as_ref().is_none_or(|(b, _)| g < *b) {
                    best = Some((g, i));
                }
            }
            best
        });
        let (g, i) = best
            .into_iter()
            .flatten()
            .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))
            .expect("S_n is nonempty");
        Ok((g, perms[i].clone()))
    }

    /// `Aut F = {w ∈ S_n : w·F = F}`.
    pub fn aut_group(&self, f: &FunctionF) -> Result<PermGroup> {
        self.aut_group_with(f, &limits::current())
    }

    pub fn aut_group_with(&self, f: &FunctionF, lim: &Limits) -> Result<PermGroup> {
        self.check_size(f.n(), lim)?;
        let n = f.n();
        if f.has_empty_support() {
            return PermGroup::symmetric_with(n, lim);
        }
        if self.young.name() == "subsets:2" {
            let g = f.to_graph().expect("2-subset support is a graph");
            let a = automorphism_group_with(&g, lim)?;
            let keep: Vec<Perm> = a
                .elements()
                .iter()
                .filter(|w| f.act(self.young(), w) == *f)
                .cloned()
                .collect();
            return Ok(PermGroup::from_elements_unchecked(n, keep));
        }
        limits::check("group order", factorial_capped(n), lim.group_order_cap)?;
        let perms = perms_of(n);
        let keep = par::map(&perms, |w| f.act(self.young(), w) == *f);
        let elements = perms.iter().zip(keep).filter(|(_, k)| *k).map(|(w, _)| w.clone()).collect();
        Ok(PermGroup::from_elements_unchecked(n, elements))
    }

    /// Interned automorphism data of a canonical `F`.
    pub fn aut_data(&self, f: &FunctionF) -> Result<Arc<AutData>> {
        let key = (self.descriptor.clone(), f.clone());
        if let Some(hit) = AUT_CACHE.get(&key) {
            return Ok(hit.clone());
        }
        let group = self.aut_group(f)?;
        let classes = Arc::new(conjugacy_classes(&group)?);
        let table = character_table_for_classes(&group, classes.clone())?;
        let data = AutData {
            group,
            classes,
            table,
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        };
        Ok(AUT_CACHE.entry(key).or_insert(Arc::new(data)).clone())
    }

    /// Canonical functions on `Y_n`, sorted. Built by extending each
    /// canonical function on `Y_{n-1}` over the points that involve vertex
    /// `n-1` in every possible way.
    pub fn basis_functions(&self, n: usize) -> Result<Arc<Vec<FunctionF>>> {
        let lim = limits::current();
        limits::check("degree", n, lim.degree_cap)?;
        let key = (self.descriptor.clone(), n);
        if let Some(hit) = BASIS_CACHE.get(&key) {
            return Ok(hit.clone());
        }
        let out = if n == 0 {
            vec![FunctionF::empty(0)]
        } else {
            let prev = self.basis_functions(n - 1)?;
            let incl: Vec<usize> = (0..n - 1).collect();
            let new_points: Vec<Vec<u8>> = self
                .young
                .points(n)
                .into_iter()
                .filter(|p| self.young.vertex_support(n, p) >> (n - 1) & 1 == 1)
                .collect();
            let q = self.n_chars();
            let combos = (q as u128).checked_pow(new_points.len() as u32).unwrap_or(u128::MAX);
            limits::check("basis candidates", combos.saturating_mul(prev.len() as u128).min(usize::MAX as u128) as usize, lim.group_order_cap)?;
            let mut found = BTreeSet::new();
            for c in prev.iter() {
                let base = c.push(self.young(), &incl, n);
                let extensions = par::map_range(combos as usize, |mut code| {
                    let mut entries = base.entries().to_vec();
                    for p in &new_points {
                        let l = code % q;
                        code /= q;
                        if l != 0 {
                            entries.push((p.clone(), l as u8));
                        }
                    }
                    entries.sort();
                    let f = FunctionF::from_sorted_unchecked(n, entries);
                    self.canonicalize(&f).map(|(c, _)| c)
                });
                for e in extensions {
                    found.insert(e?);
                }
            }
            found.into_iter().collect()
        };
        let out = Arc::new(out);
        Ok(BASIS_CACHE.entry(key).or_insert(out).clone())
    }
}

/// `w a w⁻¹`.
pub(crate) fn conjugate(w: &Perm, a: &Perm) -> Perm {
    w.compose(&a.compose(&w.inverse()))
}

/// Look up the class of a permutation in an automorphism group.
pub(crate) fn class_in(data: &AutData, p: &Perm) -> usize {
    let idx = data.group.index_of(p).expect("transported element lies in the target automorphism group");
    data.classes.class_of[idx]
}

impl AutData {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Instance({})", self.descriptor)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}
