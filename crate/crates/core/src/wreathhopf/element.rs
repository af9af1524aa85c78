use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde_json::{Map, Value};

use super::function::FunctionF;

/// A basis element of `ℳ`: a canonical function and an index into the
/// character table of its automorphism group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MBasisKey {
    pub(crate) f: FunctionF,
    pub(crate) irrep: usize,
}

impl MBasisKey {
    pub(crate) fn new_unchecked(f: FunctionF, irrep: usize) -> MBasisKey {
        MBasisKey { f, irrep }
    }

    pub fn function(&self) -> &FunctionF {
        &self.f
    }

    pub fn irrep(&self) -> usize {
        self.irrep
    }

    pub fn degree(&self) -> usize {
        self.f.n()
    }
}

impl fmt::Debug for MBasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, #{})", self.f, self.irrep)
    }
}

/// A finite integer combination of basis keys with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, i64>,
}

/// Elements of `ℳ`.
pub type HopfElement = LinComb<MBasisKey>;
/// Elements of `ℳ ⊗ ℳ`.
pub type HopfTensor = LinComb<(MBasisKey, MBasisKey)>;
/// Elements of `ℬ`, keyed by canonical functions.
pub type BHopfElement = LinComb<FunctionF>;
/// Elements of `ℬ ⊗ ℬ`.
pub type BHopfTensor = LinComb<(FunctionF, FunctionF)>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        let mut out = Self::zero();
        out.add_term(k, 1);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(c).expect("coefficient overflow");
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(k, v)| (k.clone(), v.checked_mul(c).expect("coefficient overflow"))))
    }

    /// Apply a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> std::result::Result<LinComb<L>, E>,
    ) -> std::result::Result<LinComb<L>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.terms() {
            for (l, d) in f(k)?.terms() {
                out.add_term(l.clone(), c.checked_mul(d).expect("coefficient overflow"));
            }
        }
        Ok(out)
    }
}

/// The bilinear form making the basis orthonormal.
pub fn inner_product<K: Ord + Clone>(a: &LinComb<K>, b: &LinComb<K>) -> i64 {
    a.terms().map(|(k, c)| c * b.coeff(k)).sum()
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// How a key is written into its JSON object.
pub trait KeyJson {
    fn write_fields(&self, obj: &mut Map<String, Value>);
}

fn function_value(f: &FunctionF) -> Value {
    serde_json::to_value(f).expect("function serializes")
}

impl KeyJson for MBasisKey {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("F".into(), function_value(&self.f));
        obj.insert("irrep".into(), Value::from(self.irrep));
    }
}

impl KeyJson for FunctionF {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("F".into(), function_value(self));
    }
}

impl<A: KeyJson, B: KeyJson> KeyJson for (A, B) {
    fn write_fields(&self, obj: &mut Map<String, Value>) {
        let mut l = Map::new();
        self.0.write_fields(&mut l);
        let mut r = Map::new();
        self.1.write_fields(&mut r);
        obj.insert("left".into(), Value::Object(l));
        obj.insert("right".into(), Value::Object(r));
    }
}

impl<K: Ord + KeyJson> Serialize for LinComb<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, &c) in &self.terms {
            let mut obj = Map::new();
            k.write_fields(&mut obj);
            obj.insert("coeff".into(), Value::from(c));
            seq.serialize_element(&Value::Object(obj))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_vanish() {
        let mut a: LinComb<u32> = LinComb::from_terms([(1, 2), (2, 3)]);
        a.add_term(1, -2);
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&2), 3);
        assert!(a.sub(&a).is_zero());
        assert_eq!(inner_product(&a, &a.scale(2)), 18);
    }

    #[test]
    fn json_shape() {
        let k = MBasisKey::new_unchecked(FunctionF::empty(1), 0);
        let e = HopfElement::from_terms([(k, 2)]);
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"F":{"n":1,"support":[]},"coeff":2,"irrep":0}]"#
        );
    }
}
