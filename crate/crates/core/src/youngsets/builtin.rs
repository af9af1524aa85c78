use std::sync::Arc;

use super::{Point, YoungSet, YoungSetRef};
use crate::error::{invalid, Result};

/// `Y_n = ∅` for every `n`.
#[derive(Debug)]
struct Empty;

impl YoungSet for Empty {
    fn name(&self) -> String {
        "empty".into()
    }
    fn points(&self, _n: usize) -> Vec<Point> {
        Vec::new()
    }
    fn map_point(&self, _w: &[usize], _m: usize, p: &Point) -> Point {
        p.clone()
    }
    fn pull_point(&self, _w: &[usize], _m: usize, _p: &Point) -> Option<Point> {
        None
    }
    fn vertex_support(&self, _n: usize, _p: &Point) -> u32 {
        0
    }
}

/// `Y_n` = the `r`-element subsets of `[n]`, as sorted tuples. With `r = 1`
/// this is the identity Young set.
#[derive(Debug)]
struct Subsets(usize);

fn subsets_of_size(n: usize, r: usize) -> Vec<Point> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Point, out: &mut Vec<Point>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u8);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

fn map_sorted(w: &[usize], p: &Point) -> Point {
    let mut q: Point = p.iter().map(|&x| w[x as usize] as u8).collect();
    q.sort_unstable();
    q
}

/// Preimages of each entry under `w`, or `None` if one falls outside.
fn pull_entries(w: &[usize], m: usize, p: &Point) -> Option<Point> {
    let mut inv = vec![u8::MAX; m];
    for (i, &x) in w.iter().enumerate() {
        inv[x] = i as u8;
    }
    p.iter()
        .map(|&x| {
            let y = inv[x as usize];
            (y != u8::MAX).then_some(y)
        })
        .collect()
}

fn mask_of(p: &[u8]) -> u32 {
    p.iter().fold(0u32, |a, &x| a | 1 << x)
}

impl YoungSet for Subsets {
    fn name(&self) -> String {
        if self.0 == 1 {
            "id".into()
        } else {
            format!("subsets:{}", self.0)
        }
    }
    fn points(&self, n: usize) -> Vec<Point> {
        subsets_of_size(n, self.0)
    }
    fn map_point(&self, w: &[usize], _m: usize, p: &Point) -> Point {
        map_sorted(w, p)
    }
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        let mut q = pull_entries(w, m, p)?;
        q.sort_unstable();
        Some(q)
    }
    fn vertex_support(&self, _n: usize, p: &Point) -> u32 {
        mask_of(p)
    }
}

/// All nonempty subsets of `[n]`.
#[derive(Debug)]
struct NonemptySubsets;

impl YoungSet for NonemptySubsets {
    fn name(&self) -> String {
        "nonempty_subsets".into()
    }
    fn points(&self, n: usize) -> Vec<Point> {
        let mut out: Vec<Point> = (1..=n).flat_map(|r| subsets_of_size(n, r)).collect();
        out.sort();
        out
    }
    fn map_point(&self, w: &[usize], _m: usize, p: &Point) -> Point {
        map_sorted(w, p)
    }
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        let mut q = pull_entries(w, m, p)?;
        q.sort_unstable();
        Some(q)
    }
    fn vertex_support(&self, _n: usize, p: &Point) -> u32 {
        mask_of(p)
    }
}

/// `Y_n = [n]^m`, ordered tuples with repetition.
#[derive(Debug)]
struct Tuples(usize);

impl YoungSet for Tuples {
    fn name(&self) -> String {
        format!("tuples:{}", self.0)
    }
    fn points(&self, n: usize) -> Vec<Point> {
        let mut out: Vec<Point> = vec![Vec::new()];
        for _ in 0..self.0 {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..n).map(move |i| {
                        let mut t = t.clone();
                        t.push(i as u8);
                        t
                    })
                })
                .collect();
        }
        out
    }
    fn map_point(&self, w: &[usize], _m: usize, p: &Point) -> Point {
        p.iter().map(|&x| w[x as usize] as u8).collect()
    }
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        pull_entries(w, m, p)
    }
    fn vertex_support(&self, _n: usize, p: &Point) -> u32 {
        mask_of(p)
    }
}

/// Non-identity permutations of `[n]`, as image arrays. An injection
/// conjugates and extends by fixed points.
#[derive(Debug)]
struct NontrivialPermutations;

impl YoungSet for NontrivialPermutations {
    fn name(&self) -> String {
        "nontrivial_permutations".into()
    }
    fn points(&self, n: usize) -> Vec<Point> {
        crate::permgroups::all_perms(n)
            .into_iter()
            .filter(|p| !p.is_identity())
            .map(|p| p.images().into_iter().map(|x| x as u8).collect())
            .collect()
    }
    fn map_point(&self, w: &[usize], m: usize, p: &Point) -> Point {
        let mut out: Point = (0..m as u8).collect();
        for (i, &x) in p.iter().enumerate() {
            out[w[i]] = w[x as usize] as u8;
        }
        out
    }
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        let moved = self.vertex_support(m, p);
        let image = w.iter().fold(0u32, |a, &x| a | 1 << x);
        if moved & !image != 0 || moved == 0 {
            return None;
        }
        let q = pull_entries(w, m, &w.iter().map(|&x| p[x]).collect())?;
        Some(q)
    }
    fn vertex_support(&self, _n: usize, p: &Point) -> u32 {
        p.iter()
            .enumerate()
            .filter(|(i, &x)| *i != x as usize)
            .fold(0u32, |a, (i, _)| a | 1 << i)
    }
}

/// `Y_n × Y'_n`, encoded as `[len(a), a.., b..]`.
#[derive(Debug)]
struct Product(YoungSetRef, YoungSetRef);

impl YoungSet for Product {
    fn name(&self) -> String {
        format!("product({};{})", self.0.name(), self.1.name())
    }
    fn points(&self, n: usize) -> Vec<Point> {
        let b = self.1.points(n);
        let mut out = Vec::new();
        for a in self.0.points(n) {
            for q in &b {
                let mut p = vec![a.len() as u8];
                p.extend_from_slice(&a);
                p.extend_from_slice(q);
                out.push(p);
            }
        }
        out.sort();
        out
    }
    fn map_point(&self, w: &[usize], m: usize, p: &Point) -> Point {
        let l = p[0] as usize;
        let a = self.0.map_point(w, m, &p[1..1 + l].to_vec());
        let b = self.1.map_point(w, m, &p[1 + l..].to_vec());
        let mut out = vec![a.len() as u8];
        out.extend(a);
        out.extend(b);
        out
    }
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        let l = p[0] as usize;
        let a = self.0.pull_point(w, m, &p[1..1 + l].to_vec())?;
        let b = self.1.pull_point(w, m, &p[1 + l..].to_vec())?;
        let mut out = vec![a.len() as u8];
        out.extend(a);
        out.extend(b);
        Some(out)
    }
    fn vertex_support(&self, n: usize, p: &Point) -> u32 {
        let l = p[0] as usize;
        self.0.vertex_support(n, &p[1..1 + l].to_vec()) | self.1.vertex_support(n, &p[1 + l..].to_vec())
    }
}

/// `Y_n ⊔ Y'_n`, encoded as `[tag, inner..]`.
#[derive(Debug)]
struct Coproduct(YoungSetRef, YoungSetRef);

impl YoungSet for Coproduct {
    fn name(&self) -> String {
        format!("coproduct({};{})", self.0.name(), self.1.name())
    }
    fn points(&self, n: usize) -> Vec<Point> {
        let tag = |t: u8, v: Vec<Point>| {
            v.into_iter().map(move |mut p| {
                p.insert(0, t);
                p
            })
        };
        tag(0, self.0.points(n)).chain(tag(1, self.1.points(n))).collect()
    }
    fn map_point(&self, w: &[usize], m: usize, p: &Point) -> Point {
        let inner = p[1..].to_vec();
        let mut q = if p[0] == 0 {
            self.0.map_point(w, m, &inner)
        } else {
            self.1.map_point(w, m, &inner)
        };
        q.insert(0, p[0]);
        q
    }
    fn pull_point(&self, w: &[usize], m: usize, p: &Point) -> Option<Point> {
        let inner = p[1..].to_vec();
        let mut q = if p[0] == 0 {
            self.0.pull_point(w, m, &inner)?
        } else {
            self.1.pull_point(w, m, &inner)?
        };
        q.insert(0, p[0]);
        Some(q)
    }
    fn vertex_support(&self, n: usize, p: &Point) -> u32 {
        let inner = p[1..].to_vec();
        if p[0] == 0 {
            self.0.vertex_support(n, &inner)
        } else {
            self.1.vertex_support(n, &inner)
        }
    }
}

/// Split `a;b` at the top-level semicolon.
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Look up a Young set by name: `empty`, `id` (or `identity`),
/// `subsets:R`, `nonempty_subsets`, `tuples:M`, `nontrivial_permutations`
/// (or `perms`), `product(A;B)`, `coproduct(A;B)`.
pub fn parse_young_set(name: &str) -> Result<YoungSetRef> {
    let s = name.trim();
    let num = |rest: &str| -> Result<usize> {
        rest.parse()
            .map_err(|_| invalid(format!("bad parameter in Young set '{name}'")))
    };
    for (prefix, is_product) in [("product(", true), ("coproduct(", false)] {
        if let Some(inner) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            let (a, b) = split_pair(inner).ok_or_else(|| invalid(format!("expected '{prefix}A;B)'")))?;
            let (a, b) = (parse_young_set(a)?, parse_young_set(b)?);
            return Ok(if is_product {
                Arc::new(Product(a, b))
            } else {
                Arc::new(Coproduct(a, b))
            });
        }
    }
    if let Some(r) = s.strip_prefix("subsets:").or_else(|| s.strip_prefix("subsets_")) {
        let r = num(r)?;
        if r == 0 {
            return Err(invalid("subsets:0 has a point over the empty set"));
        }
        return Ok(Arc::new(Subsets(r)));
    }
    if let Some(m) = s.strip_prefix("tuples:").or_else(|| s.strip_prefix("ordered_tuples:")) {
        let m = num(m)?;
        if m == 0 {
            return Err(invalid("tuples:0 has a point over the empty set"));
        }
        return Ok(Arc::new(Tuples(m)));
    }
    match s {
        "empty" => Ok(Arc::new(Empty)),
        "id" | "identity" => Ok(Arc::new(Subsets(1))),
        "nonempty_subsets" => Ok(Arc::new(NonemptySubsets)),
        "perms" | "nontrivial_permutations" => Ok(Arc::new(NontrivialPermutations)),
        _ => Err(invalid(format!("unknown Young set '{name}'"))),
    }
}

/// Alias of [`parse_young_set`].
pub fn builtin(name: &str) -> Result<YoungSetRef> {
    parse_young_set(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in [
            "empty",
            "id",
            "subsets:2",
            "nonempty_subsets",
            "tuples:2",
            "nontrivial_permutations",
            "product(id;subsets:2)",
            "coproduct(product(id;id);empty)",
        ] {
            assert_eq!(parse_young_set(name).unwrap().name(), name);
        }
        assert_eq!(parse_young_set("identity").unwrap().name(), "id");
        assert_eq!(parse_young_set("subsets:1").unwrap().name(), "id");
    }

    #[test]
    fn rejects() {
        for bad in ["subsets:0", "tuples:0", "subsets:x", "cubes", "product(id)", "product(id;nope)"] {
            assert!(parse_young_set(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn permutation_conjugation() {
        let y = parse_young_set("perms").unwrap();
        // (0 1) pushed along 0->2, 1->0 into [3] is (0 2)
        assert_eq!(y.map_point(&[2, 0], 3, &vec![1, 0]), vec![2, 1, 0]);
        assert_eq!(y.vertex_support(3, &vec![2, 1, 0]), 0b101);
    }
}
