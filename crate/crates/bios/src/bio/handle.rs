//! The uniform bio interface: objects, hom-sets, compositions, actions and
//! symmetric group actions behind one trait, with table-backed and
//! predicate-backed instances.

use super::elem::{perm_identity, perm_inverse, Elem, HomType, Value};
use crate::bit::Sign;
use crate::error::{Error, Result};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// A hom-set: fully listed, or membership-only for the infinite backends.
#[derive(Clone, Debug)]
pub enum HomSet {
    Table(Vec<Value>),
    Predicate,
}

impl HomSet {
    pub fn table(self) -> Result<Vec<Value>> {
        match self {
            HomSet::Table(v) => Ok(v),
            HomSet::Predicate => Err(Error::NotEnumerable(
                "hom-set is predicate-backed; enumeration declared impossible".into(),
            )),
        }
    }
}

/// Operations of a bio. Compositions and actions take the full word form;
/// single-slot variants are derived in [`ops`].
pub trait BioImpl: Send + Sync {
    fn name(&self) -> String;

    /// The objects; all instances here have finitely many.
    fn objects(&self) -> Vec<Value>;

    fn hom(&self, ty: &HomType) -> HomSet;

    fn contains(&self, e: &Elem) -> bool;

    fn unit(&self, obj: &Value) -> Elem;

    /// Full composition: for a minus element p in P⁻(b0; b1..bn) and parts
    /// with parts[i] in P⁻(bi; w̄i), the result lies in P⁻(b0; w̄); dually
    /// for a plus element, parts[i] in P⁺(w̄i; bi) compose into p.
    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem>;

    /// Full mutual action: for a minus p in P⁻(b0; c̄) and plus parts with
    /// parts[i] in P⁺(c̄i; bi), this is p ⟵∘ (parts) in P⁻(b0; b1..bn);
    /// for a plus p in P⁺(c̄; b0) and minus parts[i] in P⁻(bi; c̄i), it is
    /// (parts) ⟶∘ p in P⁺(b1..bn; b0).
    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem>;

    /// The symmetric action of Eq-style variance: for minus elements the
    /// right action P·σ reindexes the word by σ; for plus elements σ·P
    /// reindexes by σ⁻¹.
    fn perm(&self, p: &Elem, sigma: &[usize]) -> Result<Elem>;

    /// Closed-structure restriction: substitute the 0-ary (co)operation at
    /// the dropped slots. Only meaningful for closed bios.
    fn substitute_zero(&self, _p: &Elem, _keep: &[bool]) -> Result<Elem> {
        Err(Error::Unsupported(format!(
            "{} does not expose the closed substitution",
            self.name()
        )))
    }

    /// The distinguished zero of P(1) for hosts under the field with one
    /// element.
    fn zero_unary(&self) -> Option<Elem> {
        None
    }

    /// Draw an element from a predicate-backed hom-set.
    fn sample(&self, _ty: &HomType, _rng: &mut ChaCha8Rng) -> Option<Elem> {
        None
    }

    /// Declared element-wise transpose (hom-minus <-> hom-plus), when the
    /// bio carries an involution.
    fn transpose(&self, _p: &Elem) -> Result<Elem> {
        Err(Error::Unsupported(format!("{} has no involution", self.name())))
    }

    /// Opposite wrappers return their inner handle so the involution on
    /// bios squares to the identity on handles.
    fn unwrap_opposite(&self) -> Option<BioHandle> {
        None
    }
}

pub type BioHandle = Arc<dyn BioImpl>;

/// Derived operations shared by every backend.
pub mod ops {
    use super::*;

    /// Single-slot composition p ∘_i q (0-indexed slot), padding the other
    /// slots with units.
    pub fn compose_at(b: &dyn BioImpl, p: &Elem, i: usize, q: &Elem) -> Result<Elem> {
        let mut parts = Vec::with_capacity(p.arity());
        for (j, obj) in p.ty.word.iter().enumerate() {
            if j == i {
                parts.push(q.clone());
            } else {
                parts.push(b.unit(obj));
            }
        }
        b.compose(p, &parts)
    }

    /// Single-block action p ⟵∘_j q over the consecutive slots j..j+|q|,
    /// padding with unit co-operations; mirrored when p is plus. A nullary
    /// q is inserted at position j without consuming a slot.
    pub fn act_at(b: &dyn BioImpl, p: &Elem, j: usize, q: &Elem) -> Result<Elem> {
        let m = q.arity();
        let n = p.arity();
        if j + m > n {
            return Err(Error::ArityMismatch { expected: n, got: j + m });
        }
        let mut parts: Vec<Elem> = p.ty.word[..j].iter().map(|o| b.unit(o)).collect();
        parts.push(q.clone());
        parts.extend(p.ty.word[j + m..].iter().map(|o| b.unit(o)));
        b.act(p, &parts)
    }

    /// Reorder an element's word by a new-position-to-old-position map,
    /// independent of its side.
    pub fn reorder(b: &dyn BioImpl, p: &Elem, new_to_old: &[usize]) -> Result<Elem> {
        match p.ty.side {
            Sign::Minus => b.perm(p, new_to_old),
            Sign::Plus => b.perm(p, &perm_inverse(new_to_old)),
        }
    }

    /// Action of a single q over an arbitrary slot subset, in the order
    /// the slots are listed: conjugate by the permutation gathering the
    /// slots at the position of the smallest one. With that choice the
    /// surviving word keeps its original relative order, contracted slot
    /// included, so no fix-up permutation is needed afterwards.
    pub fn act_at_slots(b: &dyn BioImpl, p: &Elem, slots: &[usize], q: &Elem) -> Result<Elem> {
        let n = p.arity();
        if slots.len() != q.arity() || slots.is_empty() {
            return Err(Error::ArityMismatch { expected: q.arity().max(1), got: slots.len() });
        }
        let first = *slots.iter().min().unwrap();
        let rest: Vec<usize> = (0..n).filter(|k| !slots.contains(k)).collect();
        let mut new_to_old: Vec<usize> = rest.iter().copied().filter(|&r| r < first).collect();
        let block_at = new_to_old.len();
        new_to_old.extend_from_slice(slots);
        new_to_old.extend(rest.iter().copied().filter(|&r| r >= first));
        let moved = reorder(b, p, &new_to_old)?;
        act_at(b, &moved, block_at, q)
    }

    /// Force the side tag of a unary element for operation dispatch. Unary
    /// hom-types are stored minus-side; when a unary element plays the
    /// outer role of a plus-side composition or action, the implementations
    /// must see the plus tag to pick the mirrored formula.
    pub fn as_side(e: &Elem, side: Sign) -> Elem {
        let mut x = e.clone();
        if x.arity() == 1 && x.ty.side != side {
            std::mem::swap(&mut x.ty.head, &mut x.ty.word[0]);
            x.ty.side = side;
        }
        x
    }

    /// Transport of a unary element across the minus/plus identification:
    /// f⃖ = 1⁻ ⟵∘ f and f⃗ = f ⟶∘ 1⁺, which agree on canonical unary
    /// representatives.
    pub fn transport(b: &dyn BioImpl, f: &Elem) -> Result<Elem> {
        if f.arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, got: f.arity() });
        }
        let unit = b.unit(&f.ty.head);
        b.act(&unit, &[f.clone()])
    }

    /// Collect a hom table or draw seeded samples for predicate backends.
    pub fn elements_of(
        b: &dyn BioImpl,
        ty: &HomType,
        rng: &mut ChaCha8Rng,
        samples: usize,
    ) -> Vec<Elem> {
        match b.hom(ty) {
            HomSet::Table(vals) => vals.into_iter().map(|v| Elem::new(ty.clone(), v)).collect(),
            HomSet::Predicate => {
                let mut out = Vec::new();
                for _ in 0..samples {
                    if let Some(e) = b.sample(ty, rng) {
                        out.push(e);
                    }
                }
                out.sort();
                out.dedup();
                out
            }
        }
    }
}

/// Words over the object set with total length `len`.
pub fn object_words(objects: &[Value], len: usize) -> Vec<Vec<Value>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for w in object_words(objects, len - 1) {
        for o in objects {
            let mut w2 = w.clone();
            w2.push(o.clone());
            out.push(w2);
        }
    }
    out
}

/// Compositions of `total` into `parts` nonnegative summands.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}
