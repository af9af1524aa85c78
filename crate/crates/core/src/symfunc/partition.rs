use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A weakly decreasing list of positive integers.
///
/// Ordered by weight, then lexicographically with larger parts first, so that
/// `[2,2,1]` sorts before `[2,1,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition(Vec<usize>);

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<IntPartition> {
        if parts.contains(&0) {
            return Err(invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(IntPartition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> IntPartition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition(parts)
    }

    pub fn empty() -> IntPartition {
        IntPartition(Vec::new())
    }

    pub fn one_row(n: usize) -> IntPartition {
        IntPartition::from_unsorted(vec![n])
    }

    pub fn one_column(n: usize) -> IntPartition {
        IntPartition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiplicities `r_j` of each distinct part value.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let j = self.0[i..].iter().take_while(|&&p| p == self.0[i]).count();
            out.push(j);
            i += j;
        }
        out
    }

    /// Dominance order on partitions of equal weight.
    pub fn dominates(&self, other: &IntPartition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for IntPartition {
    type Error = crate::Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        IntPartition::new(v)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Vec<usize> {
        p.0
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// An ordered list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntComposition(Vec<usize>);

impl IntComposition {
    pub fn new(parts: Vec<usize>) -> Result<IntComposition> {
        if parts.contains(&0) {
            return Err(invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(IntComposition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sorted(&self) -> IntPartition {
        IntPartition::from_unsorted(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for IntComposition {
    type Error = crate::Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        IntComposition::new(v)
    }
}

impl From<IntComposition> for Vec<usize> {
    fn from(p: IntComposition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for IntComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Debug for IntComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// All partitions of `n`, in [`IntPartition`] order.
pub fn enumerate_partitions(n: usize) -> Vec<IntPartition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if rem == 0 {
            out.push(IntPartition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n`, in lexicographic order.
pub fn enumerate_compositions(n: usize) -> Vec<IntComposition> {
    fn go(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<IntComposition>) {
        if rem == 0 {
            out.push(IntComposition(cur.clone()));
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            go(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Distinct rearrangements of `parts`, in lexicographic order.
pub fn rearrangements(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation
    loop {
        let v = &mut sorted;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for n in 1..=10 {
            assert_eq!(enumerate_compositions(n).len(), 1 << (n - 1));
        }
        assert_eq!(enumerate_compositions(0).len(), 1);
        assert!(enumerate_partitions(0)[0].is_empty());
    }

    #[test]
    fn canonical_order() {
        let ps = enumerate_partitions(5);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
        assert_eq!(ps[0].parts(), &[5]);
        assert_eq!(ps[6].parts(), &[1, 1, 1, 1, 1]);
        let a = IntPartition::new(vec![2, 2, 1]).unwrap();
        let b = IntPartition::new(vec![2, 1, 1, 1]).unwrap();
        assert!(a < b);
        assert!(IntPartition::one_row(4) < a);
    }

    #[test]
    fn validation() {
        assert!(IntPartition::new(vec![1, 2]).is_err());
        assert!(IntPartition::new(vec![2, 0]).is_err());
        assert!(IntComposition::new(vec![0]).is_err());
        assert!(serde_json::from_str::<IntPartition>("[1,3]").is_err());
        assert_eq!(IntPartition::from_unsorted(vec![1, 0, 3, 1]).parts(), &[3, 1, 1]);
    }

    #[test]
    fn rearrange() {
        assert_eq!(rearrangements(&[2, 1, 1]).len(), 3);
        assert_eq!(rearrangements(&[3, 2, 1]).len(), 6);
        assert_eq!(rearrangements(&[]).len(), 1);
        let r = rearrangements(&[1, 2]);
        assert_eq!(r, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn multiplicities_and_dominance() {
        assert_eq!(IntPartition::new(vec![3, 3, 1, 1, 1]).unwrap().multiplicities(), vec![2, 3]);
        let a = IntPartition::new(vec![3, 1]).unwrap();
        let b = IntPartition::new(vec![2, 2]).unwrap();
        assert!(a.dominates(&b) && !b.dominates(&a));
    }
}
