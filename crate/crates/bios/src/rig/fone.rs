//! The field with one element: the sub-bio of vectors with at most one 1.

use super::pa::PaBio;
use super::rig::builtin_rig;
use crate::bio::elem::{Elem, HomType, Value};
use crate::bio::handle::{BioImpl, HomSet};
use crate::error::Result;

pub struct FOneBio {
    inner: PaBio,
}

impl FOneBio {
    pub fn new() -> FOneBio {
        FOneBio { inner: PaBio::new(builtin_rig("N").unwrap()) }
    }

    fn in_f(val: &Value) -> bool {
        match val.as_seq() {
            Some(s) => {
                s.iter().all(|v| matches!(v, Value::Int(0) | Value::Int(1)))
                    && s.iter().filter(|v| matches!(v, Value::Int(1))).count() <= 1
            }
            None => false,
        }
    }

    /// The delta vector with a single 1 at `i`, or the zero pattern.
    pub fn delta(&self, n: usize, i: Option<usize>) -> Elem {
        let entries: Vec<Value> = (0..n)
            .map(|k| Value::Int(if Some(k) == i { 1 } else { 0 }))
            .collect();
        Elem::new(HomType::minus(Value::Star, vec![Value::Star; n]), Value::Seq(entries))
    }
}

impl Default for FOneBio {
    fn default() -> Self {
        Self::new()
    }
}

impl BioImpl for FOneBio {
    fn name(&self) -> String {
        "F1".into()
    }

    fn objects(&self) -> Vec<Value> {
        vec![Value::Star]
    }

    fn hom(&self, ty: &HomType) -> HomSet {
        let n = ty.arity();
        let mut out = vec![self.delta(n, None).val];
        for i in 0..n {
            out.push(self.delta(n, Some(i)).val);
        }
        HomSet::Table(out)
    }

    fn contains(&self, e: &Elem) -> bool {
        e.val.as_seq().map(|s| s.len() == e.arity()).unwrap_or(false) && Self::in_f(&e.val)
    }

    fn unit(&self, obj: &Value) -> Elem {
        self.inner.unit(obj)
    }

    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let out = self.inner.compose(p, parts)?;
        debug_assert!(Self::in_f(&out.val), "F is closed under composition");
        Ok(out)
    }

    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let out = self.inner.act(p, parts)?;
        debug_assert!(Self::in_f(&out.val), "F is closed under the actions");
        Ok(out)
    }

    fn perm(&self, p: &Elem, sigma: &[usize]) -> Result<Elem> {
        self.inner.perm(p, sigma)
    }

    fn substitute_zero(&self, p: &Elem, keep: &[bool]) -> Result<Elem> {
        self.inner.substitute_zero(p, keep)
    }

    fn zero_unary(&self) -> Option<Elem> {
        self.inner.zero_unary()
    }

    fn transpose(&self, p: &Elem) -> Result<Elem> {
        self.inner.transpose(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bio::handle::ops;

    #[test]
    fn deltas_compose_like_projections() {
        let f = FOneBio::new();
        let d1 = f.delta(1, Some(0));
        let got = ops::compose_at(&f, &d1, 0, &d1).unwrap();
        assert_eq!(got, d1);
        let zero = f.delta(1, None);
        let z = ops::compose_at(&f, &zero, 0, &d1).unwrap();
        assert_eq!(z, zero);
    }

    #[test]
    fn hom_sets_have_n_plus_one_points() {
        let f = FOneBio::new();
        let ty = HomType::minus(Value::Star, vec![Value::Star; 3]);
        assert_eq!(f.hom(&ty).table().unwrap().len(), 4);
    }
}
