//! Process-wide resource caps.
//!
//! Most entry points read the current caps; the `*_with` variants on the
//! expensive operations take an explicit [`Limits`] so callers (and tests)
//! can use private settings without touching the global ones.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph (or Young-set degree) for canonical forms and automorphism search.
    pub vertex_cap: usize,
    /// Largest fully enumerated group.
    pub group_order_cap: usize,
    /// Largest degree accepted by the Hopf operations.
    pub degree_cap: usize,
    /// Largest wreath group the oracle will tabulate.
    pub oracle_cap: usize,
    /// Largest degree for symmetric-function products and Schur expansions.
    pub sym_degree_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: 12,
            group_order_cap: 1_000_000,
            degree_cap: 8,
            oracle_cap: 5000,
            sym_degree_cap: 16,
        }
    }
}

static VERTEX_CAP: AtomicUsize = AtomicUsize::new(12);
static GROUP_ORDER_CAP: AtomicUsize = AtomicUsize::new(1_000_000);
static DEGREE_CAP: AtomicUsize = AtomicUsize::new(8);
static ORACLE_CAP: AtomicUsize = AtomicUsize::new(5000);
static SYM_DEGREE_CAP: AtomicUsize = AtomicUsize::new(16);

/// The caps currently in force.
pub fn current() -> Limits {
    Limits {
        vertex_cap: VERTEX_CAP.load(Ordering::Relaxed),
        group_order_cap: GROUP_ORDER_CAP.load(Ordering::Relaxed),
        degree_cap: DEGREE_CAP.load(Ordering::Relaxed),
        oracle_cap: ORACLE_CAP.load(Ordering::Relaxed),
        sym_degree_cap: SYM_DEGREE_CAP.load(Ordering::Relaxed),
    }
}

/// Replace the global caps. All caps must be positive.
pub fn set(limits: Limits) -> Result<()> {
    limits.validate()?;
    VERTEX_CAP.store(limits.vertex_cap, Ordering::Relaxed);
    GROUP_ORDER_CAP.store(limits.group_order_cap, Ordering::Relaxed);
    DEGREE_CAP.store(limits.degree_cap, Ordering::Relaxed);
    ORACLE_CAP.store(limits.oracle_cap, Ordering::Relaxed);
    SYM_DEGREE_CAP.store(limits.sym_degree_cap, Ordering::Relaxed);
    Ok(())
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("vertex cap", self.vertex_cap),
            ("group order cap", self.group_order_cap),
            ("degree cap", self.degree_cap),
            ("oracle cap", self.oracle_cap),
            ("symmetric function degree cap", self.sym_degree_cap),
        ];
        for (name, v) in fields {
            if v == 0 {
                return Err(Error::Invalid(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}

pub(crate) fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::LimitExceeded {
            what,
            value: value as u128,
            limit: limit as u128,
        })
    } else {
        Ok(())
    }
}
