use std::fmt;

use crate::characters::Cyclotomic;
use crate::error::{invalid, Result};
use crate::permgroups::FiniteGroup;

/// A finite abelian group `Z/d_1 × … × Z/d_k`. Elements and characters are
/// both indexed by mixed-radix tuples, first factor most significant; index 0
/// is the identity and the trivial character respectively.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<AbelianGroup> {
        if factors.contains(&0) {
            return Err(invalid("invariant factors must be positive"));
        }
        let factors: Vec<u32> = factors.into_iter().filter(|&d| d > 1).collect();
        let order = factors.iter().try_fold(1u32, |a, &d| a.checked_mul(d));
        match order {
            Some(o) if o <= 255 => Ok(AbelianGroup { factors }),
            _ => Err(invalid("abelian group too large (order must be at most 255)")),
        }
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(d: u32) -> Result<AbelianGroup> {
        AbelianGroup::new(vec![d])
    }

    /// Parse `Z2`, `Z2xZ3`, `1` or `trivial`.
    pub fn parse(s: &str) -> Result<AbelianGroup> {
        let s = s.trim();
        if s == "1" || s.eq_ignore_ascii_case("trivial") {
            return Ok(AbelianGroup::trivial());
        }
        let factors = s
            .split(['x', '*'])
            .map(|f| {
                f.trim()
                    .strip_prefix('Z')
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| invalid(format!("cannot parse abelian group '{s}'; expected e.g. Z2 or Z2xZ3")))
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&d| d as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        use num_integer::Integer;
        self.factors.iter().fold(1, |a, &d| a.lcm(&d))
    }

    pub fn tuple(&self, mut x: usize) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            let d = self.factors[i] as usize;
            out[i] = (x % d) as u32;
            x /= d;
        }
        out
    }

    pub fn index(&self, t: &[u32]) -> usize {
        t.iter()
            .zip(&self.factors)
            .fold(0usize, |a, (&x, &d)| a * d as usize + (x % d) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.tuple(a), self.tuple(b));
        let s: Vec<u32> = ta.iter().zip(&tb).map(|(x, y)| x + y).collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<u32> = self.tuple(a).iter().zip(&self.factors).map(|(&x, &d)| (d - x) % d).collect();
        self.index(&t)
    }

    /// `⟨a, χ⟩ = Π ζ_{d_i}^{a_i χ_i}`, returned as the exponent `k` of
    /// `ζ_e^k` with `e` the group exponent.
    pub fn pairing_exponent(&self, a: usize, chi: usize) -> u32 {
        let e = self.exponent();
        let (ta, tc) = (self.tuple(a), self.tuple(chi));
        let mut k = 0u64;
        for i in 0..self.factors.len() {
            let d = self.factors[i];
            k += u64::from(ta[i] * tc[i] % d) * u64::from(e / d);
        }
        (k % u64::from(e)) as u32
    }

    pub fn pairing(&self, a: usize, chi: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.exponent(), i64::from(self.pairing_exponent(a, chi)))
    }

    pub fn as_finite_group(&self) -> FiniteGroup {
        let n = self.order();
        FiniteGroup::from_fn(n, |a, b| self.add(a, b)).expect("abelian group table is valid")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(AbelianGroup::parse("Z2").unwrap().order(), 2);
        assert_eq!(AbelianGroup::parse("Z2xZ3").unwrap().order(), 6);
        assert_eq!(AbelianGroup::parse("1").unwrap().order(), 1);
        assert_eq!(AbelianGroup::parse("Z1").unwrap(), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::parse("Z2xZ2").unwrap().to_string(), "Z2xZ2");
        assert!(AbelianGroup::parse("S3").is_err());
        assert!(AbelianGroup::parse("Z0").is_err());
        assert!(AbelianGroup::parse("Z16xZ16").is_err());
    }

    #[test]
    fn pairing_is_bimultiplicative() {
        for h in ["Z2", "Z3", "Z2xZ2", "Z2xZ3", "Z4"] {
            let h = AbelianGroup::parse(h).unwrap();
            let e = h.exponent();
            for a in 0..h.order() {
                for b in 0..h.order() {
                    for c in 0..h.order() {
                        let lhs = h.pairing_exponent(h.add(a, b), c);
                        let rhs = (h.pairing_exponent(a, c) + h.pairing_exponent(b, c)) % e;
                        assert_eq!(lhs, rhs);
                        // symmetric in the two arguments with this indexing
                        assert_eq!(h.pairing_exponent(a, c), h.pairing_exponent(c, a));
                    }
                }
                assert_eq!(h.add(a, h.neg(a)), 0);
            }
        }
    }

    #[test]
    fn characters_are_orthogonal() {
        let h = AbelianGroup::parse("Z2xZ3").unwrap();
        for x in 0..h.order() {
            for y in 0..h.order() {
                let s: Cyclotomic = (0..h.order()).map(|a| &h.pairing(a, x) * &h.pairing(a, y).conj()).sum();
                let expect = if x == y { h.order() as i64 } else { 0 };
                assert_eq!(s, Cyclotomic::from_int(expect));
            }
        }
    }
}
