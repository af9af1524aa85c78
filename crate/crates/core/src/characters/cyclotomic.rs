use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An element of the cyclotomic field ℚ(ζ_e), stored in the power basis
/// `1, ζ_e, …, ζ_e^(φ(e)-1)` and always normalized to its least conductor
/// (never ≡ 2 mod 4). Rationals have conductor 1, so structural equality is
/// field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    e: u32,
    c: Vec<BigRational>,
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the n-th cyclotomic polynomial, ascending.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    let p = Arc::new(num);
    cyclo_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut r = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let coef = r[i + dn];
        q[i] = coef;
        if coef != 0 {
            for j in 0..=dn {
                r[i + j] -= coef * den[j];
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Reduce a polynomial in ζ_e (any length) modulo x^e - 1 and then Φ_e.
fn reduce(e: u32, v: &[BigRational]) -> Vec<BigRational> {
    let eu = e as usize;
    let mut w = vec![BigRational::zero(); eu.max(1)];
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            w[i % eu] += x;
        }
    }
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    for i in (deg..w.len()).rev() {
        if w[i].is_zero() {
            continue;
        }
        let coef = w[i].clone();
        for (j, &pj) in phi.iter().enumerate() {
            if pj != 0 {
                w[i - deg + j] -= &coef * BigRational::from_integer(BigInt::from(pj));
            }
        }
    }
    w.truncate(deg);
    w
}

/// Solve `Σ y_j cols[j] = rhs` over ℚ, if consistent.
fn solve(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut y = vec![BigRational::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        y[col] = m[i][ncols].clone();
    }
    Some(y)
}

impl Cyclotomic {
    pub fn zero() -> Cyclotomic {
        Cyclotomic::from_rational(BigRational::zero())
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::from_int(1)
    }

    pub fn from_int(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Cyclotomic {
        Cyclotomic { e: 1, c: vec![q] }
    }

    /// `ζ_o^k`.
    pub fn root_of_unity(o: u32, k: i64) -> Cyclotomic {
        assert!(o >= 1);
        let mut v = vec![BigRational::zero(); o as usize];
        v[k.rem_euclid(o as i64) as usize] = BigRational::one();
        Cyclotomic::from_power_coeffs(o, &v)
    }

    /// `Σ_i mult[i] · ζ_o^i`.
    pub fn from_root_multiplicities(o: u32, mult: &[i64]) -> Cyclotomic {
        let v: Vec<BigRational> = mult.iter().map(|&m| BigRational::from_integer(BigInt::from(m))).collect();
        Cyclotomic::from_power_coeffs(o, &v)
    }

    /// `Σ_i v[i] ζ_e^i` for a coefficient vector of any length.
    pub fn from_power_coeffs(e: u32, v: &[BigRational]) -> Cyclotomic {
        let c = reduce(e, v);
        Cyclotomic::normalized(e, c)
    }

    fn normalized(e: u32, c: Vec<BigRational>) -> Cyclotomic {
        if e == 1 || c.iter().skip(1).all(|x| x.is_zero()) {
            let q = c.into_iter().next().unwrap_or_else(BigRational::zero);
            return Cyclotomic { e: 1, c: vec![q] };
        }
        for p in prime_factors(e) {
            let d = e / p;
            if d == 1 {
                continue; // rational case already excluded
            }
            if let Some(y) = Cyclotomic::express_in_subfield(e, &c, d) {
                return Cyclotomic::normalized(d, y);
            }
        }
        Cyclotomic { e, c }
    }

    fn express_in_subfield(e: u32, c: &[BigRational], d: u32) -> Option<Vec<BigRational>> {
        let step = (e / d) as usize;
        let cols: Vec<Vec<BigRational>> = (0..euler_phi(d))
            .map(|j| {
                let mut v = vec![BigRational::zero(); j * step + 1];
                v[j * step] = BigRational::one();
                reduce(e, &v)
            })
            .collect();
        solve(&cols, c)
    }

    /// Coefficients at conductor `l` (a multiple of the conductor).
    fn lift(&self, l: u32) -> Vec<BigRational> {
        debug_assert_eq!(l % self.e, 0);
        if l == self.e {
            return self.c.clone();
        }
        let step = (l / self.e) as usize;
        let mut v = vec![BigRational::zero(); (self.c.len().max(1) - 1) * step + 1];
        for (i, x) in self.c.iter().enumerate() {
            v[i * step] = x.clone();
        }
        reduce(l, &v)
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.e == 1 && self.c[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.e == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|z| z.to_i64())
    }

    /// Complex conjugation, ζ ↦ ζ^(-1).
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The Galois automorphism ζ ↦ ζ^a (a coprime to the conductor).
    pub fn galois(&self, a: i64) -> Cyclotomic {
        if self.e == 1 {
            return self.clone();
        }
        let e = self.e as i64;
        assert_eq!(a.gcd(&e), 1, "galois exponent must be coprime to the conductor");
        let mut v = vec![BigRational::zero(); self.e as usize];
        for (i, x) in self.c.iter().enumerate() {
            v[(i as i64 * a).rem_euclid(e) as usize] += x;
        }
        Cyclotomic {
            e: self.e,
            c: reduce(self.e, &v),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            e: self.e,
            c: self.c.iter().map(|x| x * q).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Cyclotomic {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    fn combine(&self, other: &Cyclotomic, f: impl Fn(&[BigRational], &[BigRational], u32) -> Vec<BigRational>) -> Cyclotomic {
        let l = self.e.lcm(&other.e);
        let a = self.lift(l);
        let b = other.lift(l);
        Cyclotomic::normalized(l, f(&a, &b, l))
    }

    /// Approximate complex value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, x) in self.c.iter().enumerate() {
            let v = x.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * i as f64 / self.e as f64;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        if self.e == 1 && o.e == 1 {
            return Cyclotomic::from_rational(&self.c[0] + &o.c[0]);
        }
        self.combine(o, |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            e: self.e,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if self.e == 1 {
            return o.scale(&self.c[0]);
        }
        if o.e == 1 {
            return self.scale(&o.c[0]);
        }
        self.combine(o, |a, b, l| {
            let mut v = vec![BigRational::zero(); a.len() + b.len()];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        v[i + j] += x * y;
                    }
                }
            }
            reduce(l, &v)
        })
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                (&self).$m(&o)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: &Cyclotomic) -> Cyclotomic {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, o: &Cyclotomic) {
        *self = &*self + o;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }
}

/// Conductor ascending, then coefficient vectors compared entrywise with
/// larger values first. Under this order 1 precedes every other value of
/// conductor 1, so the trivial character sorts first among degree-one rows.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.e.cmp(&other.e).then_with(|| {
            for (a, b) in self.c.iter().zip(&other.c) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            let mag = x.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("E({})", self.e),
                _ => format!("E({})^{}", self.e, i),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("conductor", &self.e)?;
        let coeffs: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(o: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(o, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn roots_sum_to_zero() {
        for o in 2..13 {
            let s: Cyclotomic = (0..o).map(|k| z(o, k as i64)).sum();
            assert!(s.is_zero(), "sum of {o}-th roots");
        }
    }

    #[test]
    fn conductor_normalization() {
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(6, 1).conductor(), 3); // ζ6 = -ζ3²
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(4, 1).conductor(), 4);
        // ζ8 + ζ8^-1 = √2 lives in ℚ(ζ8) only
        let r2 = z(8, 1) + z(8, -1);
        assert_eq!(r2.conductor(), 8);
        assert_eq!(&r2 * &r2, Cyclotomic::from_int(2));
        // i = ζ12^3 lifted then normalized
        assert_eq!(z(12, 3), z(4, 1));
        // ζ5 + ζ5^4 has conductor 5
        let g = z(5, 1) + z(5, 4);
        assert_eq!(g.conductor(), 5);
        assert_eq!(&g * &g + g.clone() - Cyclotomic::one(), Cyclotomic::zero());
    }

    #[test]
    fn arithmetic_mixed_conductors() {
        let w = z(3, 1);
        let i = z(4, 1);
        let p = &w * &i;
        assert_eq!(p.conductor(), 12);
        assert_eq!(&p * &p, &(&w * &w) * &Cyclotomic::from_int(-1));
        assert_eq!(&(&w + &i) - &i, w);
    }

    #[test]
    fn conj_and_galois() {
        let w = z(3, 1);
        assert_eq!(w.conj(), z(3, 2));
        assert_eq!((&w * &w.conj()), Cyclotomic::one());
        assert_eq!(w.galois(2), z(3, 2));
        let q = Cyclotomic::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(q.conj(), q);
    }

    #[test]
    fn ordering_puts_one_first() {
        let mut v = [Cyclotomic::from_int(-1), z(3, 1), Cyclotomic::one(), Cyclotomic::zero()];
        v.sort();
        assert_eq!(v[0], Cyclotomic::one());
        assert_eq!(v[1], Cyclotomic::zero());
        assert_eq!(v[2], Cyclotomic::from_int(-1));
        assert_eq!(v[3].conductor(), 3);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(Cyclotomic::from_int(-3).to_string(), "-3");
        assert_eq!(z(3, 1).to_string(), "E(3)");
        assert_eq!(z(3, 2).to_string(), "-1 - E(3)");
        let j = serde_json::to_string(&z(4, 1)).unwrap();
        assert_eq!(j, r#"{"conductor":4,"coeffs":["0","1"]}"#);
        let (re, im) = z(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn multiplicities_constructor() {
        // 2 + ζ4 + 0ζ4² + ζ4³ = 2
        let x = Cyclotomic::from_root_multiplicities(4, &[2, 1, 0, 1]);
        assert_eq!(x, Cyclotomic::from_int(2));
        assert_eq!(x.to_i64(), Some(2));
    }
}
