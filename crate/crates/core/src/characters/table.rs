use std::sync::Arc;

use num_integer::Integer;

use super::classfn::{as_multiplicity, inner_product, ClassFunction, TableJson};
use super::cyclotomic::Cyclotomic;
use super::dixon::verify_table;
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::permgroups::ConjClasses;

/// Irreducible characters of a finite group, ordered by degree and then by
/// value vector; row 0 is the trivial character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Arc<ConjClasses>,
    rows: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub(crate) fn from_rows_unchecked(classes: Arc<ConjClasses>, rows: Vec<Vec<Cyclotomic>>) -> CharacterTable {
        CharacterTable { classes, rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn value(&self, irrep: usize, class: usize) -> &Cyclotomic {
        &self.rows[irrep][class]
    }

    pub fn row(&self, i: usize) -> ClassFunction {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.rows[i].clone(),
        }
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.rows[i][0].to_i64().expect("degrees are integers")
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    /// Index of the row with exactly these values, if any.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.rows.iter().position(|r| r.as_slice() == values)
    }

    pub fn to_json(&self) -> TableJson<'_> {
        TableJson {
            classes: self.classes.summary(),
            rows: &self.rows,
        }
    }

    /// `Σ mult_i · χ_i`.
    pub fn recompose(&self, mult: &[i64]) -> ClassFunction {
        let k = self.classes.len();
        let mut values = vec![Cyclotomic::zero(); k];
        for (i, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for c in 0..k {
                values[c] += &self.rows[i][c].scale_int(m);
            }
        }
        ClassFunction {
            classes: self.classes.clone(),
            values,
        }
    }
}

/// Multiplicities of the irreducibles in a character. Fails with
/// "not a character" unless every multiplicity is a nonnegative integer.
pub fn decompose(chi: &ClassFunction, table: &CharacterTable) -> Result<Vec<i64>> {
    (0..table.len())
        .map(|i| {
            let ip = inner_product(chi, &table.row(i))?;
            as_multiplicity(&ip, "decompose")
        })
        .collect()
}

/// Character table of `G × H` from the tables of the factors. Element
/// `(g, h)` has index `g·|H| + h`.
pub fn product_table(tg: &CharacterTable, th: &CharacterTable) -> Result<CharacterTable> {
    product_table_with(tg, th, &limits::current())
}

pub fn product_table_with(tg: &CharacterTable, th: &CharacterTable, lim: &Limits) -> Result<CharacterTable> {
    let (cg, ch) = (&tg.classes, &th.classes);
    let order = cg.group_order.saturating_mul(ch.group_order);
    limits::check("group order", order, lim.group_order_cap)?;
    let hn = ch.group_order;
    // raw classes indexed by (a, b)
    let mut raw = Vec::new();
    for a in 0..cg.len() {
        for b in 0..ch.len() {
            let mut m: Vec<usize> = Vec::with_capacity(cg.size(a) * ch.size(b));
            for &x in &cg.members[a] {
                for &y in &ch.members[b] {
                    m.push(x * hn + y);
                }
            }
            m.sort_unstable();
            raw.push((a, b, m, cg.element_orders[a].lcm(&ch.element_orders[b])));
        }
    }
    raw.sort_by_key(|(_, _, m, o)| (*o, m.len(), m[0]));
    let mut class_of = vec![0usize; order];
    for (c, (_, _, m, _)) in raw.iter().enumerate() {
        for &x in m {
            class_of[x] = c;
        }
    }
    let inverse_class = raw
        .iter()
        .map(|(a, b, _, _)| {
            let ia = cg.inverse_class[*a];
            let ib = ch.inverse_class[*b];
            class_of[cg.members[ia][0] * hn + ch.members[ib][0]]
        })
        .collect();
    let classes = Arc::new(ConjClasses {
        group_order: order,
        class_of,
        element_orders: raw.iter().map(|r| r.3).collect(),
        members: raw.iter().map(|r| r.2.clone()).collect(),
        inverse_class,
    });
    let mut rows = Vec::with_capacity(tg.len() * th.len());
    for rg in tg.rows() {
        for rh in th.rows() {
            rows.push(raw.iter().map(|(a, b, _, _)| &rg[*a] * &rh[*b]).collect::<Vec<_>>());
        }
    }
    rows.sort_by(|x: &Vec<Cyclotomic>, y| {
        x[0].to_i64().cmp(&y[0].to_i64()).then_with(|| x.cmp(y))
    });
    verify_table(&classes, &rows).map_err(|e| Error::Internal(format!("product table: {e}")))?;
    Ok(CharacterTable::from_rows_unchecked(classes, rows))
}

