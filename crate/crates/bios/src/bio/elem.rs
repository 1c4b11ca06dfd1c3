//! Dynamic values, hom-set types and elements shared by every bio backend.

use crate::bit::Sign;
use num_rational::BigRational;
use serde::Serialize;
use std::fmt;

/// A dynamically typed carrier value: integers, exact rationals, named
/// symbols, the monochromatic object, or sequences of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Value {
    Star,
    Int(i64),
    #[serde(serialize_with = "ser_rat")]
    Rat(BigRational),
    Sym(String),
    Seq(Vec<Value>),
}

fn ser_rat<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Value {
    pub fn seq(items: impl IntoIterator<Item = Value>) -> Value {
        Value::Seq(items.into_iter().collect())
    }

    pub fn as_seq(&self) -> Option<&[Value]> {
        match self {
            Value::Seq(v) => Some(v),
            _ => None,
        }
    }

    pub fn sym(s: &str) -> Value {
        Value::Sym(s.to_string())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Star => write!(f, "*"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Rat(r) => write!(f, "{r}"),
            Value::Sym(s) => write!(f, "{s}"),
            Value::Seq(items) => {
                write!(f, "(")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{it}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The type of a hom-set: `Minus` is P⁻(head; word), `Plus` is
/// P⁺(word; head). Unary hom-sets on both sides are identified; the
/// canonical form uses `Minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomType {
    pub side: Sign,
    pub head: Value,
    pub word: Vec<Value>,
}

impl HomType {
    pub fn minus(head: Value, word: Vec<Value>) -> HomType {
        HomType { side: Sign::Minus, head, word }.normalized()
    }

    pub fn plus(word: Vec<Value>, head: Value) -> HomType {
        HomType { side: Sign::Plus, head, word }.normalized()
    }

    pub fn arity(&self) -> usize {
        self.word.len()
    }

    /// Unary hom-sets are shared between the two sides: P⁻(c₀; c₁) is
    /// identified with P⁺(c₁; c₀), so normalizing a unary plus type swaps
    /// its head and word entry.
    pub fn normalized(mut self) -> HomType {
        if self.word.len() == 1 && self.side == Sign::Plus {
            std::mem::swap(&mut self.head, &mut self.word[0]);
            self.side = Sign::Minus;
        }
        self
    }
}

impl fmt::Display for HomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.word.iter().map(|w| w.to_string()).collect();
        match self.side {
            Sign::Minus => write!(f, "P-({}; {})", self.head, word.join(" ")),
            Sign::Plus => write!(f, "P+({}; {})", word.join(" "), self.head),
        }
    }
}

/// An element of a bio together with its hom-set type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub ty: HomType,
    pub val: Value,
}

impl Elem {
    pub fn new(ty: HomType, val: Value) -> Elem {
        Elem { ty: ty.normalized(), val }
    }

    pub fn arity(&self) -> usize {
        self.ty.arity()
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.val, self.ty)
    }
}

/// Identity permutation check and composition helpers for the symmetric
/// group actions; a permutation maps position i to sigma[i], 0-indexed.
pub fn perm_identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn perm_compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    // (sigma . tau)(i) = sigma(tau(i))
    tau.iter().map(|&i| sigma[i]).collect()
}

pub fn perm_inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
