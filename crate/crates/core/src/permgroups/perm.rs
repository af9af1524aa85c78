use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A permutation of `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= 256, "permutation degree {n} too large");
        Perm {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        if n > 256 {
            return Err(invalid(format!("permutation degree {n} exceeds 256")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub(crate) fn from_u8_unchecked(images: Vec<u8>) -> Perm {
        Perm { images }
    }

    /// Build a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a >= n {
                    return Err(invalid(format!("cycle entry {a} out of range for degree {n}")));
                }
                if used[a] {
                    return Err(invalid(format!("point {a} repeated in cycle notation")));
                }
                used[a] = true;
                img[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Perm::from_images(img)
    }

    /// Parse cycle notation such as `(0 1 2)(3 4)` or `(0,1)`. The empty string
    /// and `()` give the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse {
                    offset: text.len() - rest.len(),
                    message: "expected '('".into(),
                });
            }
            let close = rest.find(')').ok_or_else(|| Error::Parse {
                offset: text.len() - rest.len(),
                message: "unclosed cycle".into(),
            })?;
            let body = &rest[1..close];
            let mut cyc = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    offset: text.len() - rest.len(),
                    message: format!("bad point '{tok}'"),
                })?;
                cyc.push(v);
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> usize {
        use num_integer::Integer;
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    /// All cycles, including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Direct sum: `self` on `0..n`, `other` shifted onto `n..n+m`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let n = self.degree() as u8;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + n));
        Perm { images }
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Perm> {
        Perm::from_images(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Vec<usize> {
        p.images()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// All permutations of `0..n` in lexicographic order of image arrays.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm::from_u8_unchecked(cur.clone()));
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (a∘b)(1) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&b).apply(2), 0);
    }

    #[test]
    fn cycle_round_trip() {
        let p = Perm::parse_cycles("(0 4)(1,2,3)", 5).unwrap();
        assert_eq!(p.images(), vec![4, 2, 3, 1, 0]);
        assert_eq!(p.to_string(), "(0 4)(1 2 3)");
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse_cycles("", 2).unwrap(), Perm::identity(2));
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn bad_inputs() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![2, 0]).is_err());
        assert!(Perm::parse_cycles("(0 1", 3).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(matches!(Perm::parse_cycles("x", 3), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn all_perms_count_and_order() {
        let ps = all_perms(4);
        assert_eq!(ps.len(), 24);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        assert!(ps[0].is_identity());
        assert_eq!(all_perms(0).len(), 1);
    }

    #[test]
    fn inverse_and_direct_sum() {
        let p = Perm::from_images(vec![2, 0, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let q = Perm::from_images(vec![1, 0]).unwrap();
        assert_eq!(p.direct_sum(&q).images(), vec![2, 0, 1, 4, 3]);
    }

    #[test]
    fn serde_as_image_array() {
        let p = Perm::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,2]");
        let q: Perm = serde_json::from_str("[1,0,2]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Perm>("[1,1]").is_err());
    }
}
