use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// An integer-valued polynomial in one variable.
///
/// Stored in the binomial basis `C(x,k)`, where every integer-valued
/// polynomial has integer coordinates; `m(m-1)/2` is `C(x,2)`. The power-basis
/// coefficients (possibly fractional) are available on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    binom: Vec<BigInt>,
}

fn binomial(n: &BigInt, k: usize) -> BigInt {
    // n(n-1)...(n-k+1)/k!, exact for any integer n
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    /// Build from binomial-basis coordinates: `Σ c_k C(x,k)`.
    pub fn from_binomial(coeffs: Vec<BigInt>) -> IntPolynomial {
        let mut p = IntPolynomial { binom: coeffs };
        p.trim();
        p
    }

    /// Build from ascending power-basis integer coefficients.
    pub fn from_power_coeffs(coeffs: &[i64]) -> IntPolynomial {
        // binomial coordinates are the forward differences at 0
        let d = coeffs.len();
        let mut vals: Vec<BigInt> = (0..d)
            .map(|x| {
                let x = BigInt::from(x);
                coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + BigInt::from(*c))
            })
            .collect();
        let mut out = Vec::with_capacity(d);
        for k in 0..d {
            out.push(vals[0].clone());
            for i in 0..d - k - 1 {
                vals[i] = &vals[i + 1] - &vals[i];
            }
            vals.pop();
        }
        IntPolynomial::from_binomial(out)
    }

    /// `C(x,k)` scaled by `c`.
    pub fn binomial_term(k: usize, c: BigInt) -> IntPolynomial {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPolynomial::from_binomial(v)
    }

    fn trim(&mut self) {
        while self.binom.last().is_some_and(|c| c.is_zero()) {
            self.binom.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.binom.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.binom.len().checked_sub(1)
    }

    pub fn binomial_coeffs(&self) -> &[BigInt] {
        &self.binom
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.binom
            .iter()
            .enumerate()
            .map(|(k, c)| c * binomial(&x, k))
            .sum()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.binom.len().max(other.binom.len());
        let z = BigInt::zero();
        IntPolynomial::from_binomial(
            (0..n)
                .map(|k| self.binom.get(k).unwrap_or(&z) + other.binom.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::from_binomial(self.binom.iter().map(|b| b * c).collect())
    }

    /// Ascending power-basis coefficients.
    pub fn power_coeffs(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.binom.len()];
        // falling factorial x(x-1)...(x-k+1) expanded, divided by k!
        let mut falling = vec![BigInt::one()];
        let mut fact = BigInt::one();
        for (k, c) in self.binom.iter().enumerate() {
            if k > 0 {
                fact *= BigInt::from(k);
                let shift = BigInt::from(k - 1);
                let mut next = vec![BigInt::zero(); falling.len() + 1];
                for (i, a) in falling.iter().enumerate() {
                    next[i + 1] += a;
                    next[i] -= a * &shift;
                }
                falling = next;
            }
            for (i, a) in falling.iter().enumerate() {
                out[i] += BigRational::new(a * c, fact.clone());
            }
        }
        out
    }

    /// Power-basis coefficients if they are all integers.
    pub fn integer_power_coeffs(&self) -> Option<Vec<BigInt>> {
        self.power_coeffs()
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.power_coeffs();
        let mut first = true;
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one() && k > 0;
            if !unit {
                if a.is_integer() {
                    write!(f, "{}", a.to_integer())?;
                } else {
                    write!(f, "({})", a)?;
                }
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serialized as the ascending power-basis coefficient array. Integral
/// coefficients are JSON integers; fractional ones are strings like `"1/2"`.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vals: Vec<serde_json::Value> = self
            .power_coeffs()
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    match c.to_integer().to_i64() {
                        Some(i) => serde_json::Value::from(i),
                        None => serde_json::Value::from(c.to_integer().to_string()),
                    }
                } else {
                    serde_json::Value::from(c.to_string())
                }
            })
            .collect();
        vals.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_round_trip() {
        // x(x-1)(x-2)
        let p = IntPolynomial::from_power_coeffs(&[0, 2, -3, 1]);
        assert_eq!(p.binomial_coeffs(), &[0.into(), 0.into(), 0.into(), BigInt::from(6)]);
        assert_eq!(
            p.integer_power_coeffs().unwrap(),
            vec![0, 2, -3, 1].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(p.eval(5), BigInt::from(60));
        assert_eq!(p.eval(-1), BigInt::from(-6));
        assert_eq!(p.to_string(), "m^3 - 3*m^2 + 2*m");
    }

    #[test]
    fn fractional() {
        let p = IntPolynomial::binomial_term(2, BigInt::one());
        assert!(p.integer_power_coeffs().is_none());
        assert_eq!(p.to_string(), "(1/2)*m^2 - (1/2)*m");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[0,"-1/2","1/2"]"#);
        for m in 0..10 {
            assert_eq!(p.eval(m), BigInt::from(m * (m - 1) / 2));
        }
    }

    #[test]
    fn zero_and_sum() {
        let z = IntPolynomial::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
        let a = IntPolynomial::from_power_coeffs(&[1, 1]);
        let b = IntPolynomial::from_power_coeffs(&[-1, -1]);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.scale(&BigInt::from(3)).eval(2), BigInt::from(9));
    }
}
