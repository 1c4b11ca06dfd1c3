//! Rigs: rings without negatives, finite tables or the symbolic integers.

use crate::bio::elem::Value;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Arc;

/// Operations of a rig over dynamic values. Finite carriers list their
/// elements; the symbolic integer backends return `None`.
pub trait RigOps: Send + Sync {
    fn name(&self) -> String;
    fn zero(&self) -> Value;
    fn one(&self) -> Value;
    fn add(&self, a: &Value, b: &Value) -> Value;
    fn mul(&self, a: &Value, b: &Value) -> Value;
    fn contains(&self, v: &Value) -> bool;
    fn elements(&self) -> Option<Vec<Value>>;
    fn is_commutative(&self) -> bool;
    /// The involution when the rig carries one; commutative rigs get the
    /// identity.
    fn involution(&self, v: &Value) -> Option<Value> {
        if self.is_commutative() {
            Some(v.clone())
        } else {
            None
        }
    }
}

pub type RigHandle = Arc<dyn RigOps>;

/// A finite rig given by explicit addition and multiplication tables.
pub struct FiniteRig {
    name: String,
    elems: Vec<Value>,
    index: HashMap<Value, usize>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    commutative: bool,
}

impl FiniteRig {
    /// Build and validate a finite rig: associativity and units for both
    /// operations, commutative addition, distributivity, zero absorption.
    pub fn new(
        name: &str,
        elems: Vec<Value>,
        zero: Value,
        one: Value,
        add: impl Fn(&Value, &Value) -> Value,
        mul: impl Fn(&Value, &Value) -> Value,
    ) -> Result<FiniteRig> {
        let index: HashMap<Value, usize> =
            elems.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let look = |v: Value| -> Result<usize> {
            index
                .get(&v)
                .copied()
                .ok_or_else(|| Error::RigLawViolation(format!("{name}: {v} is not in the carrier")))
        };
        let n = elems.len();
        let mut add_t = vec![vec![0; n]; n];
        let mut mul_t = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                add_t[i][j] = look(add(&elems[i], &elems[j]))?;
                mul_t[i][j] = look(mul(&elems[i], &elems[j]))?;
            }
        }
        let rig = FiniteRig {
            name: name.to_string(),
            index,
            add: add_t,
            mul: mul_t,
            zero: elems.iter().position(|v| *v == zero).ok_or_else(|| {
                Error::RigLawViolation(format!("{name}: zero not in carrier"))
            })?,
            one: elems.iter().position(|v| *v == one).ok_or_else(|| {
                Error::RigLawViolation(format!("{name}: one not in carrier"))
            })?,
            commutative: false,
            elems,
        };
        rig.validate()
    }

    fn validate(mut self) -> Result<FiniteRig> {
        let n = self.elems.len();
        let fail = |what: &str| Err(Error::RigLawViolation(format!("{}: {what}", self.name)));
        for i in 0..n {
            if self.add[i][self.zero] != i || self.add[self.zero][i] != i {
                return fail("additive unit");
            }
            if self.mul[i][self.one] != i || self.mul[self.one][i] != i {
                return fail("multiplicative unit");
            }
            if self.mul[i][self.zero] != self.zero || self.mul[self.zero][i] != self.zero {
                return fail("zero absorption");
            }
            for j in 0..n {
                if self.add[i][j] != self.add[j][i] {
                    return fail("commutative addition");
                }
                for k in 0..n {
                    if self.add[self.add[i][j]][k] != self.add[i][self.add[j][k]] {
                        return fail("associative addition");
                    }
                    if self.mul[self.mul[i][j]][k] != self.mul[i][self.mul[j][k]] {
                        return fail("associative multiplication");
                    }
                    if self.mul[self.add[i][j]][k] != self.add[self.mul[i][k]][self.mul[j][k]] {
                        return fail("right distributivity");
                    }
                    if self.mul[k][self.add[i][j]] != self.add[self.mul[k][i]][self.mul[k][j]] {
                        return fail("left distributivity");
                    }
                }
            }
        }
        self.commutative =
            (0..n).all(|i| (0..n).all(|j| self.mul[i][j] == self.mul[j][i]));
        Ok(self)
    }

    fn idx(&self, v: &Value) -> usize {
        *self.index.get(v).unwrap_or_else(|| panic!("{}: {v} not in carrier", self.name))
    }
}

impl RigOps for FiniteRig {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn zero(&self) -> Value {
        self.elems[self.zero].clone()
    }
    fn one(&self) -> Value {
        self.elems[self.one].clone()
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        self.elems[self.add[self.idx(a)][self.idx(b)]].clone()
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        self.elems[self.mul[self.idx(a)][self.idx(b)]].clone()
    }
    fn contains(&self, v: &Value) -> bool {
        self.index.contains_key(v)
    }
    fn elements(&self) -> Option<Vec<Value>> {
        Some(self.elems.clone())
    }
    fn is_commutative(&self) -> bool {
        self.commutative
    }
}

/// The integers, or the natural numbers when `nonneg` is set.
pub struct IntRig {
    pub nonneg: bool,
}

impl RigOps for IntRig {
    fn name(&self) -> String {
        if self.nonneg { "N".into() } else { "Z".into() }
    }
    fn zero(&self) -> Value {
        Value::Int(0)
    }
    fn one(&self) -> Value {
        Value::Int(1)
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x.checked_add(*y).expect("overflow")),
            _ => panic!("integer rig over non-integers"),
        }
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x.checked_mul(*y).expect("overflow")),
            _ => panic!("integer rig over non-integers"),
        }
    }
    fn contains(&self, v: &Value) -> bool {
        matches!(v, Value::Int(x) if !self.nonneg || *x >= 0)
    }
    fn elements(&self) -> Option<Vec<Value>> {
        None
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

fn rat(n: i64, d: i64) -> Value {
    Value::Rat(BigRational::new(n.into(), d.into()))
}

/// Built-in rigs by name. `B` is the Boolean rig, `trop01` a four-point
/// truncation of the tropical interval [0,1] (products below the smallest
/// nonzero point collapse to 0), `trop-inf` the three-point tropical line
/// {0,1,inf}, `f2x` the four-element ring F2[x]/(x^2), and `ut2b` the
/// noncommutative rig of upper-triangular 2x2 Boolean matrices.
pub fn builtin_rig(name: &str) -> Result<RigHandle> {
    match name {
        "N" => Ok(Arc::new(IntRig { nonneg: true })),
        "Z" => Ok(Arc::new(IntRig { nonneg: false })),
        "B" => {
            let elems = vec![Value::Int(0), Value::Int(1)];
            Ok(Arc::new(FiniteRig::new(
                "B",
                elems,
                Value::Int(0),
                Value::Int(1),
                |a, b| match (a, b) {
                    (Value::Int(x), Value::Int(y)) => Value::Int((*x).max(*y)),
                    _ => unreachable!(),
                },
                |a, b| match (a, b) {
                    (Value::Int(x), Value::Int(y)) => Value::Int(x * y),
                    _ => unreachable!(),
                },
            )?))
        }
        "trop01" => {
            let pts = [rat(0, 1), rat(1, 4), rat(1, 2), rat(1, 1)];
            let theta = BigRational::new(1.into(), 4.into());
            let elems = pts.to_vec();
            Ok(Arc::new(FiniteRig::new(
                "trop01",
                elems,
                rat(0, 1),
                rat(1, 1),
                |a, b| match (a, b) {
                    (Value::Rat(x), Value::Rat(y)) => Value::Rat(x.max(y).clone()),
                    _ => unreachable!(),
                },
                move |a, b| match (a, b) {
                    (Value::Rat(x), Value::Rat(y)) => {
                        let p = x * y;
                        if p < theta && !p.is_zero() {
                            Value::Rat(BigRational::zero())
                        } else {
                            Value::Rat(p)
                        }
                    }
                    _ => unreachable!(),
                },
            )?))
        }
        "trop-inf" => {
            // 0 < 1 < inf with max-addition; inf * 0 = 0 keeps absorption
            let elems = vec![Value::sym("0"), Value::sym("1"), Value::sym("inf")];
            let rank = |v: &Value| match v {
                Value::Sym(s) if s == "0" => 0,
                Value::Sym(s) if s == "1" => 1,
                _ => 2,
            };
            Ok(Arc::new(FiniteRig::new(
                "trop-inf",
                elems.clone(),
                Value::sym("0"),
                Value::sym("1"),
                move |a, b| if rank(a) >= rank(b) { a.clone() } else { b.clone() },
                move |a, b| match (rank(a), rank(b)) {
                    (0, _) | (_, 0) => Value::sym("0"),
                    (1, r) | (r, 1) => {
                        if r == 2 {
                            Value::sym("inf")
                        } else {
                            Value::sym("1")
                        }
                    }
                    _ => Value::sym("inf"),
                },
            )?))
        }
        "f2x" => {
            // F2[x]/(x^2): elements a + b x encoded as (a, b) in bits
            let enc = |a: i64, b: i64| Value::Seq(vec![Value::Int(a), Value::Int(b)]);
            let elems = vec![enc(0, 0), enc(1, 0), enc(0, 1), enc(1, 1)];
            let dec = |v: &Value| -> (i64, i64) {
                let s = v.as_seq().unwrap();
                match (&s[0], &s[1]) {
                    (Value::Int(a), Value::Int(b)) => (*a, *b),
                    _ => unreachable!(),
                }
            };
            Ok(Arc::new(FiniteRig::new(
                "f2x",
                elems,
                enc(0, 0),
                enc(1, 0),
                move |x, y| {
                    let (a, b) = dec(x);
                    let (c, d) = dec(y);
                    enc((a + c) % 2, (b + d) % 2)
                },
                move |x, y| {
                    let (a, b) = dec(x);
                    let (c, d) = dec(y);
                    enc(a * c % 2, (a * d + b * c) % 2)
                },
            )?))
        }
        "ut2b" => {
            // upper-triangular 2x2 Boolean matrices [[a, b], [0, c]]
            let enc =
                |a: i64, b: i64, c: i64| Value::Seq(vec![Value::Int(a), Value::Int(b), Value::Int(c)]);
            let mut elems = Vec::new();
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        elems.push(enc(a, b, c));
                    }
                }
            }
            let dec = |v: &Value| -> (i64, i64, i64) {
                let s = v.as_seq().unwrap();
                match (&s[0], &s[1], &s[2]) {
                    (Value::Int(a), Value::Int(b), Value::Int(c)) => (*a, *b, *c),
                    _ => unreachable!(),
                }
            };
            let or = |x: i64, y: i64| (x + y).min(1);
            Ok(Arc::new(FiniteRig::new(
                "ut2b",
                elems,
                enc(0, 0, 0),
                enc(1, 0, 1),
                move |x, y| {
                    let (a, b, c) = dec(x);
                    let (d, e, f) = dec(y);
                    enc(or(a, d), or(b, e), or(c, f))
                },
                move |x, y| {
                    let (a, b, c) = dec(x);
                    let (d, e, f) = dec(y);
                    enc(a * d, or(a * e, b * f), c * f)
                },
            )?))
        }
        other => Err(Error::Unknown(format!("unknown builtin rig {other}"))),
    }
}

pub const BUILTIN_RIGS: &[&str] = &["N", "Z", "B", "trop01", "trop-inf", "f2x", "ut2b"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in BUILTIN_RIGS {
            let r = builtin_rig(name).unwrap();
            assert_eq!(&r.name(), name);
        }
    }

    #[test]
    fn ut2b_is_noncommutative() {
        let r = builtin_rig("ut2b").unwrap();
        let es = r.elements().unwrap();
        assert!(es
            .iter()
            .any(|a| es.iter().any(|b| r.mul(a, b) != r.mul(b, a))));
        assert!(!r.is_commutative());
    }

    #[test]
    fn commutative_small_builtins() {
        for name in ["B", "trop01", "trop-inf", "f2x"] {
            let r = builtin_rig(name).unwrap();
            assert!(r.is_commutative(), "{name}");
            assert!(r.elements().unwrap().len() <= 4);
        }
    }
}
