//! Character tables by the Dixon–Schneider method: common eigenvectors of
//! the class matrices modulo a prime `p ≡ 1 (mod exponent)`, lifted to
//! cyclotomic integers through eigenvalue multiplicities on cyclic subgroups.

use std::sync::Arc;

use num_integer::Integer;

use super::classfn::{as_multiplicity, inner_product_values};
use super::cyclotomic::Cyclotomic;
use super::table::CharacterTable;
use crate::error::{internal, Result};
use crate::limits::{self, Limits};
use crate::permgroups::{conjugacy_classes_with, ConjClasses, Group};

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Least prime `p ≡ 1 (mod e)` with `p > bound`.
fn choose_prime(e: u64, bound: u64) -> u64 {
    let mut p = (bound / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

/// A primitive e-th root of unity modulo p (requires e | p-1).
fn primitive_root_of_unity(e: u64, p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            factors.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let g = (2..p)
        .find(|&g| factors.iter().all(|&f| powmod(g, (p - 1) / f, p) != 1))
        .expect("prime field has a generator");
    powmod(g, (p - 1) / e, p)
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(s) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, s);
        let inv = invmod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = mulmod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the right kernel of a square matrix.
fn kernel(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

fn det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut d = 1u64;
    for c in 0..n {
        let Some(s) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if s != c {
            m.swap(s, c);
            d = (p - d) % p;
        }
        d = mulmod(d, m[c][c], p);
        let inv = invmod(m[c][c], p);
        for i in c + 1..n {
            if m[i][c] != 0 {
                let f = mulmod(m[i][c], inv, p);
                for j in c..n {
                    let t = mulmod(f, m[c][j], p);
                    m[i][j] = (m[i][j] + p - t) % p;
                }
            }
        }
    }
    d
}

/// Characteristic polynomial `det(R - xI)` by evaluation and interpolation,
/// coefficients ascending.
fn charpoly(r: &[Vec<u64>], p: u64) -> Vec<u64> {
    let d = r.len();
    let mut system: Vec<Vec<u64>> = Vec::with_capacity(d + 1);
    for t in 0..=d as u64 {
        let mut m = r.to_vec();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = (row[i] + p - t % p) % p;
        }
        let y = det(m, p);
        let mut row: Vec<u64> = (0..=d as u32).map(|k| powmod(t, k as u64, p)).collect();
        row.push(y);
        system.push(row);
    }
    rref(&mut system, p);
    system.iter().map(|row| row[d + 1]).collect()
}

fn eval_poly(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| (mulmod(acc, x, p) + a) % p)
}

struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Split a space invariant under `a` into eigenspaces of `a`.
fn split(space: Space, a: &[Vec<u64>], p: u64) -> Result<Vec<Space>> {
    let d = space.basis.len();
    let k = a.len();
    // images of basis vectors
    let images: Vec<Vec<u64>> = space
        .basis
        .iter()
        .map(|b| {
            (0..k)
                .map(|l| a[l].iter().zip(b).fold(0u64, |acc, (&x, &y)| (acc + mulmod(x, y, p)) % p))
                .collect()
        })
        .collect();
    // matrix of a on the space: column i holds the coordinates of a·b_i
    let r: Vec<Vec<u64>> = (0..d)
        .map(|row| (0..d).map(|i| images[i][space.pivots[row]]).collect())
        .collect();
    let cp = charpoly(&r, p);
    let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&cp, x, p) == 0).collect();
    let mut out = Vec::new();
    let mut total = 0;
    for lam in roots {
        let mut m = r.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = (row[i] + p - lam) % p;
        }
        let ker = kernel(m, p);
        total += ker.len();
        let mut basis: Vec<Vec<u64>> = ker
            .iter()
            .map(|x| {
                (0..k)
                    .map(|l| {
                        x.iter()
                            .zip(&space.basis)
                            .fold(0u64, |acc, (&xi, b)| (acc + mulmod(xi, b[l], p)) % p)
                    })
                    .collect()
            })
            .collect();
        let pivots = rref(&mut basis, p);
        out.push(Space { basis, pivots });
    }
    if total != d {
        return Err(internal("class matrix is not diagonalizable modulo the chosen prime"));
    }
    Ok(out)
}

/// The full character table of `g`, with rows in canonical order.
pub fn character_table<G: Group + ?Sized>(g: &G) -> Result<CharacterTable> {
    character_table_with(g, &limits::current())
}

pub fn character_table_with<G: Group + ?Sized>(g: &G, lim: &Limits) -> Result<CharacterTable> {
    let classes = Arc::new(conjugacy_classes_with(g, lim)?);
    character_table_for_classes(g, classes)
}

pub fn character_table_for_classes<G: Group + ?Sized>(g: &G, classes: Arc<ConjClasses>) -> Result<CharacterTable> {
    let n = g.order() as u64;
    let k = classes.len();
    let e = classes.element_orders.iter().fold(1usize, |a, &b| a.lcm(&b)) as u64;
    let root_bound = (n as f64).sqrt().ceil() as u64;
    let p = choose_prime(e, (2 * root_bound).max(n));
    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();

    // class matrices: a[j][l][m] = #{x ∈ C_j : x⁻¹ z_m ∈ C_l}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for m in 0..k {
        let zm = classes.rep(m);
        for x in 0..g.order() {
            let j = classes.class_of[x];
            let l = classes.class_of[g.mul(g.inv(x), zm)];
            a[j][l][m] += 1;
        }
    }
    for mat in a.iter_mut() {
        for row in mat.iter_mut() {
            for x in row.iter_mut() {
                *x %= p;
            }
        }
    }

    let mut spaces = vec![Space {
        basis: (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect(),
        pivots: (0..k).collect(),
    }];
    for mat in a.iter().skip(1) {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for sp in spaces {
            if sp.basis.len() == 1 {
                next.push(sp);
            } else {
                next.extend(split(sp, mat, p)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.basis.len() != 1) {
        return Err(internal("class matrices failed to separate the irreducible characters"));
    }

    let z = primitive_root_of_unity(e, p);
    let max_deg = (n as f64).sqrt().floor() as u64 + 1;
    let mut rows = Vec::with_capacity(k);
    for sp in spaces {
        let v = &sp.basis[0];
        if v[0] == 0 {
            return Err(internal("central character vanishes at the identity"));
        }
        let inv0 = invmod(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| mulmod(x, inv0, p)).collect();
        // Σ ω_m ω_{m*} / |C_m| = |G| / χ(1)²
        let s = (0..k).fold(0u64, |acc, m| {
            let t = mulmod(mulmod(w[m], w[classes.inverse_class[m]], p), invmod(sizes[m] % p, p), p);
            (acc + t) % p
        });
        if s == 0 {
            return Err(internal("degree equation degenerate"));
        }
        let d2 = mulmod(n % p, invmod(s, p), p);
        let d = (1..=max_deg)
            .find(|&d| (d * d) % p == d2)
            .ok_or_else(|| internal("no integral degree found"))?;
        let modval: Vec<u64> = (0..k)
            .map(|m| mulmod(mulmod(d, w[m], p), invmod(sizes[m] % p, p), p))
            .collect();
        let mut row = Vec::with_capacity(k);
        for m in 0..k {
            let o = classes.element_orders[m] as u64;
            let pc = classes.power_classes(g, m);
            let step = e / o;
            let inv_o = invmod(o % p, p);
            let mut mult = Vec::with_capacity(o as usize);
            for i in 0..o {
                let mut acc = 0u64;
                for (j, &cj) in pc.iter().enumerate() {
                    let expo = (e - (step * i * j as u64) % e) % e;
                    acc = (acc + mulmod(modval[cj], powmod(z, expo, p), p)) % p;
                }
                let mu = mulmod(acc, inv_o, p);
                if mu > d {
                    return Err(internal(format!("eigenvalue multiplicity {mu} exceeds degree {d}")));
                }
                mult.push(mu as i64);
            }
            row.push(Cyclotomic::from_root_multiplicities(o as u32, &mult));
        }
        rows.push(row);
    }
    rows.sort_by(|x, y| {
        let dx = x[0].to_i64().unwrap_or(0);
        let dy = y[0].to_i64().unwrap_or(0);
        dx.cmp(&dy).then_with(|| x.cmp(y))
    });
    verify_table(&classes, &rows)?;
    Ok(CharacterTable::from_rows_unchecked(classes, rows))
}

/// Exact checks: degrees squared sum to |G|, rows orthonormal, first row trivial.
pub(crate) fn verify_table(classes: &ConjClasses, rows: &[Vec<Cyclotomic>]) -> Result<()> {
    let mut sum = 0i64;
    for r in rows {
        let d = as_multiplicity(&r[0], "degree").map_err(|_| internal("degree is not a positive integer"))?;
        sum += d * d;
    }
    if sum != classes.group_order as i64 {
        return Err(internal(format!("squared degrees sum to {sum}, not {}", classes.group_order)));
    }
    if rows.len() != classes.len() {
        return Err(internal("row count differs from class count"));
    }
    if rows.first().map(|r| r.iter().any(|v| *v != Cyclotomic::one())) != Some(false) {
        return Err(internal("first row is not the trivial character"));
    }
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let ip = inner_product_values(classes, &rows[i], &rows[j]);
            let want = Cyclotomic::from_int(i64::from(i == j));
            if ip != want {
                return Err(internal(format!("orthogonality violated between rows {i} and {j}: {ip}")));
            }
        }
    }
    Ok(())
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_helpers() {
        assert!(is_prime(2521) && !is_prime(841));
        let p = choose_prime(840, 402);
        assert_eq!(p, 2521);
        let z = primitive_root_of_unity(12, 13);
        assert_eq!(powmod(z, 12, 13), 1);
        assert!((1..12).all(|k| powmod(z, k, 13) != 1));
        assert_eq!(det(vec![vec![1, 2], vec![3, 4]], 7), 5); // -2 mod 7
        // charpoly of [[0,1],[1,0]] is x² - 1
        assert_eq!(charpoly(&[vec![0, 1], vec![1, 0]], 7), vec![6, 0, 1]);
        let ker = kernel(vec![vec![1, 1], vec![1, 1]], 7);
        assert_eq!(ker, vec![vec![6, 1]]);
    }
}
