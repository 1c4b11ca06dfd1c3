//! The opposite bio: hom-sets swapped, compositions and actions reversed.

use super::elem::{perm_inverse, Elem, HomType};
use super::handle::{BioHandle, BioImpl, HomSet};
use crate::bio::elem::Value;
use crate::error::Result;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub struct OppositeBio {
    inner: BioHandle,
}

/// Swap the side tag without renormalizing, so dispatch sees the mirrored
/// role; unary results re-normalize on construction.
fn flip(e: &Elem) -> Elem {
    let mut x = e.clone();
    x.ty.side = x.ty.side.flip();
    x
}

fn flip_ty(ty: &HomType) -> HomType {
    let mut t = ty.clone();
    t.side = t.side.flip();
    t
}

fn normalize(e: Elem) -> Elem {
    Elem::new(e.ty, e.val)
}

/// Form the opposite; taking it twice returns the original handle.
pub fn opposite_bio(b: &BioHandle) -> BioHandle {
    if let Some(inner) = b.unwrap_opposite() {
        return inner;
    }
    Arc::new(OppositeBio { inner: b.clone() })
}

impl BioImpl for OppositeBio {
    fn name(&self) -> String {
        format!("op({})", self.inner.name())
    }

    fn objects(&self) -> Vec<Value> {
        self.inner.objects()
    }

    fn unwrap_opposite(&self) -> Option<BioHandle> {
        Some(self.inner.clone())
    }

    fn hom(&self, ty: &HomType) -> HomSet {
        self.inner.hom(&flip_ty(ty).normalized())
    }

    fn contains(&self, e: &Elem) -> bool {
        self.inner.contains(&normalize(flip(e)))
    }

    fn unit(&self, obj: &Value) -> Elem {
        self.inner.unit(obj)
    }

    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let fp = flip(p);
        let fparts: Vec<Elem> = parts.iter().map(flip).collect();
        Ok(normalize(flip(&self.inner.compose(&fp, &fparts)?)))
    }

    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let fp = flip(p);
        let fparts: Vec<Elem> = parts.iter().map(flip).collect();
        Ok(normalize(flip(&self.inner.act(&fp, &fparts)?)))
    }

    fn perm(&self, p: &Elem, sigma: &[usize]) -> Result<Elem> {
        let fp = flip(p);
        Ok(normalize(flip(&self.inner.perm(&fp, &perm_inverse(sigma))?)))
    }

    fn substitute_zero(&self, p: &Elem, keep: &[bool]) -> Result<Elem> {
        Ok(normalize(flip(&self.inner.substitute_zero(&flip(p), keep)?)))
    }

    fn zero_unary(&self) -> Option<Elem> {
        self.inner.zero_unary()
    }

    fn sample(&self, ty: &HomType, rng: &mut ChaCha8Rng) -> Option<Elem> {
        self.inner
            .sample(&flip_ty(ty), rng)
            .map(|e| normalize(flip(&e)))
    }

    fn transpose(&self, p: &Elem) -> Result<Elem> {
        Ok(normalize(flip(&self.inner.transpose(&flip(p))?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bio::audit::audit_bio_axioms;
    use crate::rig::{builtin_rig, PaBio};

    #[test]
    fn double_opposite_unwraps() {
        let b: BioHandle = Arc::new(PaBio::new(builtin_rig("B").unwrap()));
        let op = opposite_bio(&b);
        let opop = opposite_bio(&op);
        assert_eq!(opop.name(), b.name());
    }

    #[test]
    fn opposite_is_a_bio() {
        let b: BioHandle = Arc::new(PaBio::new(builtin_rig("ut2b").unwrap()));
        let op = opposite_bio(&b);
        let report = audit_bio_axioms(op.as_ref(), 2, 16, 11);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn opposite_of_commutative_vectors_matches_transpose() {
        // op(P_A) ≅ P_A via transpose for commutative A
        let b = PaBio::new(builtin_rig("B").unwrap());
        let bh: BioHandle = Arc::new(PaBio::new(builtin_rig("B").unwrap()));
        let op = opposite_bio(&bh);
        let ty = HomType::minus(Value::Star, vec![Value::Star; 2]);
        let mut row_elems = op.hom(&ty).table().unwrap();
        let mut expect: Vec<Value> = b
            .hom(&HomType::plus(vec![Value::Star; 2], Value::Star))
            .table()
            .unwrap();
        row_elems.sort();
        expect.sort();
        assert_eq!(row_elems, expect);
    }
}
