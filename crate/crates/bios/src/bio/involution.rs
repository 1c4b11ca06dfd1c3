//! Contraction for self-dual bios: P // (P_i) = P ⟵∘ (P_i^t).

use super::elem::Elem;
use super::handle::BioImpl;
use crate::error::Result;
use serde::Serialize;

/// The contraction operation of a bio with involution.
pub fn contraction(b: &dyn BioImpl, p: &Elem, parts: &[Elem]) -> Result<Elem> {
    let transposed: Result<Vec<Elem>> = parts.iter().map(|q| b.transpose(q)).collect();
    b.act(p, &transposed?)
}

/// The induced involution on unary elements, P^t = 1 // P.
pub fn unary_transpose(b: &dyn BioImpl, p: &Elem) -> Result<Elem> {
    let unit = b.unit(&p.ty.head);
    contraction(b, &unit, &[p.clone()])
}

#[derive(Debug, Serialize)]
pub struct ContractionReport {
    pub unital: bool,
    pub associative: bool,
    pub linear: bool,
    pub unary_involution: bool,
    pub cases: usize,
}

impl ContractionReport {
    pub fn all_pass(&self) -> bool {
        self.unital && self.associative && self.linear && self.unary_involution
    }
}

/// Check the contraction laws on every tabled element with arities within
/// the bound: unitality, associativity, linearity, and the unary
/// involution laws including the anti-homomorphism rule.
pub fn check_contraction_laws(b: &dyn BioImpl, bound: usize) -> Result<ContractionReport> {
    use super::elem::{HomType, Value};
    use super::handle::{object_words, HomSet};
    let objects = b.objects();
    let mut cases = 0usize;
    let mut unital = true;
    let mut associative = true;
    let mut linear = true;
    let mut unary_involution = true;

    let elems = |side: crate::bit::Sign, arity: usize| -> Vec<Elem> {
        let mut out = Vec::new();
        for h in &objects {
            for w in object_words(&objects, arity) {
                let ty = match side {
                    crate::bit::Sign::Minus => HomType::minus(h.clone(), w),
                    crate::bit::Sign::Plus => HomType::plus(w, h.clone()),
                };
                if let HomSet::Table(vals) = b.hom(&ty) {
                    out.extend(vals.into_iter().map(|v| Elem::new(ty.clone(), v)));
                }
            }
        }
        out
    };

    for n in 1..=bound {
        for p in elems(crate::bit::Sign::Minus, n) {
            // P // (units) = P
            let units: Vec<Elem> = p.ty.word.iter().map(|o| b.unit(o)).collect();
            cases += 1;
            if contraction(b, &p, &units)? != p {
                unital = false;
            }
        }
    }
    // associativity (P // (P_ij)) // (P_j) = P // (P_j ∘ (P_ij)) on small
    // shapes: two unary blocks
    for p in elems(crate::bit::Sign::Minus, 2.min(bound)) {
        if p.arity() != 2 {
            continue;
        }
        for pij1 in elems(crate::bit::Sign::Minus, 1) {
            if pij1.ty.head != p.ty.word[0] {
                continue;
            }
            for pij2 in elems(crate::bit::Sign::Minus, 1) {
                if pij2.ty.head != p.ty.word[1] {
                    continue;
                }
                for pj in elems(crate::bit::Sign::Minus, 2) {
                    if pj.ty.word != vec![pij1.ty.word[0].clone(), pij2.ty.word[0].clone()] {
                        continue;
                    }
                    cases += 1;
                    let lhs = (|| {
                        let first = contraction(b, &p, &[pij1.clone(), pij2.clone()])?;
                        contraction(b, &first, &[pj.clone()])
                    })();
                    let rhs = (|| {
                        let composed = b.compose(&pj, &[pij1.clone(), pij2.clone()])?;
                        contraction(b, &p, &[composed])
                    })();
                    match (lhs, rhs) {
                        (Ok(a), Ok(c)) if a == c => {}
                        _ => associative = false,
                    }
                }
            }
        }
    }
    // linearity (P ∘ (P_i)) // (P_ij) = P ∘ (P_i // P_ij) on unary blocks
    for p in elems(crate::bit::Sign::Minus, 1) {
        for pi in elems(crate::bit::Sign::Minus, 1) {
            if pi.ty.head != p.ty.word[0] {
                continue;
            }
            for pij in elems(crate::bit::Sign::Minus, 1) {
                if pij.ty.word != pi.ty.word {
                    continue;
                }
                cases += 1;
                let lhs = (|| {
                    let comp = b.compose(&p, &[pi.clone()])?;
                    contraction(b, &comp, &[pij.clone()])
                })();
                let rhs = (|| {
                    let inner = contraction(b, &pi, &[pij.clone()])?;
                    b.compose(&p, &[inner])
                })();
                match (lhs, rhs) {
                    (Ok(a), Ok(c)) if a == c => {}
                    _ => linear = false,
                }
            }
        }
    }
    // unary involution: P^tt = P, 1^t = 1, (P1 ∘ P2)^t = P2^t ∘ P1^t
    for p in elems(crate::bit::Sign::Minus, 1) {
        cases += 1;
        let t = unary_transpose(b, &p)?;
        let tt = unary_transpose(b, &t)?;
        if tt != p {
            unary_involution = false;
        }
        for q in elems(crate::bit::Sign::Minus, 1) {
            if q.ty.head != p.ty.word[0] {
                continue;
            }
            cases += 1;
            let lhs = unary_transpose(b, &b.compose(&p, &[q.clone()])?)?;
            let rhs = b.compose(
                &unary_transpose(b, &q)?,
                &[unary_transpose(b, &p)?],
            )?;
            if lhs != rhs {
                unary_involution = false;
            }
        }
    }
    for obj in &objects {
        let unit = b.unit(obj);
        if unary_transpose(b, &unit)? != unit {
            unary_involution = false;
        }
    }
    Ok(ContractionReport { unital, associative, linear, unary_involution, cases })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bio::elem::{HomType, Value};
    use crate::rig::{builtin_rig, PaBio};
    use crate::bit::Sign;

    #[test]
    fn integer_contraction_example() {
        // (1,2) // ((3),(4)) = (1,2) ⟵∘ ((3)^t, (4)^t) = (3, 8)
        let b = PaBio::with_entry_bound(builtin_rig("Z").unwrap(), 4);
        let row = |xs: &[i64]| {
            Elem::new(
                HomType::minus(Value::Star, vec![Value::Star; xs.len()]),
                Value::Seq(xs.iter().map(|&x| Value::Int(x)).collect()),
            )
        };
        let p = row(&[1, 2]);
        let got = contraction(&b, &p, &[row(&[3]), row(&[4])]).unwrap();
        assert_eq!(got, row(&[3, 8]));
    }

    #[test]
    fn boolean_contraction_laws_hold() {
        let b = PaBio::new(builtin_rig("B").unwrap());
        let report = check_contraction_laws(&b, 3).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert!(report.cases > 50);
    }

    #[test]
    fn transpose_of_a_row_is_the_column() {
        let b = PaBio::new(builtin_rig("B").unwrap());
        let p = Elem::new(
            HomType::minus(Value::Star, vec![Value::Star; 2]),
            Value::Seq(vec![Value::Int(1), Value::Int(0)]),
        );
        let t = unary_transpose(&b, &b.unit(&Value::Star)).unwrap();
        assert_eq!(t, b.unit(&Value::Star));
        let pt = b.transpose(&p).unwrap();
        assert_eq!(pt.ty.side, Sign::Plus);
        assert_eq!(pt.val, p.val);
    }
}
