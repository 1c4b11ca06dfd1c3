//! Natural transformations between bio maps and bilinear pairs.

use super::elem::{Elem, HomType, Value};
use super::handle::{object_words, BioImpl, HomSet};
use super::maps::BioMap;
use super::sigma::sigma_interchange;
use crate::bit::Sign;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Verify the interchange law for a minus-side transformation
/// α: q ↦ α_q in R⁻(φ₀(q); φ₁(q)..φ_n(q)) against every tabled generator
/// Q in the source's hom-sets within the bound, together with the dual law
/// when `alpha` is plus-side.
pub fn check_natural_transformation(
    phis: &[BioMap],
    alpha: &BTreeMap<Value, Elem>,
    bound: usize,
) -> Result<(bool, Option<String>)> {
    if phis.is_empty() {
        return Err(Error::TypeMismatch("need at least one functor".into()));
    }
    let q_bio = phis[0].source();
    let r = phis[0].target();
    let n = phis.len() - 1;
    // typing: alpha_q in R^-(phi_0 q; phi_1 q .. phi_n q)
    for q in q_bio.objects() {
        let a = alpha
            .get(&q)
            .ok_or_else(|| Error::TypeMismatch(format!("no component at {q}")))?;
        let want_head = phis[0].on_object(&q)?;
        let want_word: Result<Vec<Value>> =
            phis[1..].iter().map(|f| f.on_object(&q)).collect();
        let side_ok = match a.ty.side {
            Sign::Minus => a.ty.head == want_head && a.ty.word == want_word?,
            Sign::Plus => a.ty.head == want_head && a.ty.word == want_word?,
        };
        if !side_ok {
            return Ok((false, Some(format!("component at {q} has the wrong type"))));
        }
    }
    let objects = q_bio.objects();
    for m in 1..=bound {
        for side in [Sign::Minus, Sign::Plus] {
            for q0 in &objects {
                for word in object_words(&objects, m) {
                    let ty = match side {
                        Sign::Minus => HomType::minus(q0.clone(), word.clone()),
                        Sign::Plus => HomType::plus(word.clone(), q0.clone()),
                    };
                    if side == Sign::Plus && ty.side == Sign::Minus {
                        continue;
                    }
                    let table = match q_bio.hom(&ty) {
                        HomSet::Table(v) => v,
                        HomSet::Predicate => {
                            return Err(Error::NotEnumerable(
                                "naturality needs table-backed homs".into(),
                            ))
                        }
                    };
                    for qval in table {
                        let q_elem = Elem::new(ty.clone(), qval);
                        let verdict = match side {
                            Sign::Minus => interchange_minus(phis, alpha, &q_elem, n, &r)?,
                            Sign::Plus => interchange_plus(phis, alpha, &q_elem, n, &r)?,
                        };
                        if !verdict {
                            return Ok((
                                false,
                                Some(format!("interchange fails at {q_elem}")),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok((true, None))
}

/// φ₀(Q)∘(α_{q_j})∘σ_{n,m} = α_{q₀}∘(φ_i(Q)).
fn interchange_minus(
    phis: &[BioMap],
    alpha: &BTreeMap<Value, Elem>,
    q_elem: &Elem,
    n: usize,
    r: &super::handle::BioHandle,
) -> Result<bool> {
    let m = q_elem.arity();
    let lhs = {
        let fq = phis[0].on_elem(q_elem)?;
        let parts: Result<Vec<Elem>> = q_elem
            .ty
            .word
            .iter()
            .map(|qj| {
                alpha
                    .get(qj)
                    .cloned()
                    .ok_or_else(|| Error::TypeMismatch(format!("no component at {qj}")))
            })
            .collect();
        let composed = r.compose(&fq, &parts?)?;
        r.perm(&composed, &sigma_interchange(n, m))?
    };
    let rhs = {
        let a0 = alpha[&q_elem.ty.head].clone();
        let parts: Result<Vec<Elem>> =
            phis[1..].iter().map(|f| f.on_elem(q_elem)).collect();
        r.compose(&a0, &parts?)?
    };
    Ok(lhs == rhs)
}

/// σ_{n,m}∘(α_{q_j})∘φ₀(Q) = (φ_i(Q))∘α_{q₀}.
fn interchange_plus(
    phis: &[BioMap],
    alpha: &BTreeMap<Value, Elem>,
    q_elem: &Elem,
    n: usize,
    r: &super::handle::BioHandle,
) -> Result<bool> {
    use super::handle::ops::as_side;
    let m = q_elem.arity();
    let lhs = {
        let fq = phis[0].on_elem(q_elem)?;
        let parts: Result<Vec<Elem>> = q_elem
            .ty
            .word
            .iter()
            .map(|qj| {
                alpha
                    .get(qj)
                    .cloned()
                    .map(|e| as_side(&e, Sign::Plus))
                    .ok_or_else(|| Error::TypeMismatch(format!("no component at {qj}")))
            })
            .collect();
        let composed = r.compose(&as_side(&fq, Sign::Plus), &parts?)?;
        r.perm(&as_side(&composed, Sign::Plus), &sigma_interchange(n, m))?
    };
    let rhs = {
        let a0 = as_side(&alpha[&q_elem.ty.head], Sign::Plus);
        let parts: Result<Vec<Elem>> =
            phis[1..].iter().map(|f| f.on_elem(q_elem)).collect();
        r.compose(&a0, &parts?)?
    };
    Ok(lhs == rhs)
}

/// The bilinearity conditions for a pair of indexed families
/// φ_p ∈ Bio(Q,R), ψ_q ∈ Bio(P,R): matching object grids plus the two
/// sigma interchanges over all tabled operations within the bound.
pub fn check_bilinear_pair(
    phi: &BTreeMap<Value, BioMap>,
    psi: &BTreeMap<Value, BioMap>,
    bound: usize,
) -> Result<(bool, Option<String>)> {
    use super::handle::ops::as_side;
    let p_bio = psi.values().next().map(|f| f.source());
    let q_bio = phi.values().next().map(|f| f.source());
    let (Some(p_bio), Some(q_bio)) = (p_bio, q_bio) else {
        return Err(Error::TypeMismatch("empty family".into()));
    };
    let r = phi.values().next().unwrap().target();
    // grid agreement on objects
    for (p, fp) in phi {
        for (q, gq) in psi {
            if fp.on_object(q)? != gq.on_object(p)? {
                return Ok((false, Some(format!("object grid disagrees at ({p}, {q})"))));
            }
        }
    }
    let tabled = |b: &super::handle::BioHandle, side: Sign, arity: usize| -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for h in b.objects() {
            for w in object_words(&b.objects(), arity) {
                let ty = match side {
                    Sign::Minus => HomType::minus(h.clone(), w),
                    Sign::Plus => HomType::plus(w, h.clone()),
                };
                if side == Sign::Plus && ty.side == Sign::Minus {
                    continue;
                }
                match b.hom(&ty) {
                    HomSet::Table(vals) => {
                        out.extend(vals.into_iter().map(|v| Elem::new(ty.clone(), v)))
                    }
                    HomSet::Predicate => {
                        return Err(Error::NotEnumerable("bilinearity needs tables".into()))
                    }
                }
            }
        }
        Ok(out)
    };
    // minus interchange: φ_{p0}(Q)∘(ψ_{qj}(P)) = ψ_{q0}(P)∘(φ_{pi}(Q))∘σ_{m,n}
    for n in 1..=bound {
        for p_elem in tabled(&p_bio, Sign::Minus, n)? {
            for m in 1..=bound {
                for q_elem in tabled(&q_bio, Sign::Minus, m)? {
                    let lhs = {
                        let fq = phi[&p_elem.ty.head].on_elem(&q_elem)?;
                        let parts: Result<Vec<Elem>> = q_elem
                            .ty
                            .word
                            .iter()
                            .map(|qj| psi[qj].on_elem(&p_elem))
                            .collect();
                        r.compose(&fq, &parts?)?
                    };
                    let rhs = {
                        let gp = psi[&q_elem.ty.head].on_elem(&p_elem)?;
                        let parts: Result<Vec<Elem>> = p_elem
                            .ty
                            .word
                            .iter()
                            .map(|pi| phi[pi].on_elem(&q_elem))
                            .collect();
                        let composed = r.compose(&gp, &parts?)?;
                        r.perm(&composed, &sigma_interchange(m, n))?
                    };
                    if lhs != rhs {
                        return Ok((
                            false,
                            Some(format!("minus interchange fails at ({p_elem}, {q_elem})")),
                        ));
                    }
                }
            }
        }
        // plus interchange: σ_{n,m}∘(ψ_{qj}(P))∘φ_{p0}(Q) = (φ_{pi}(Q))∘ψ_{q0}(P)
        for p_elem in tabled(&p_bio, Sign::Plus, n)? {
            for m in 1..=bound {
                for q_elem in tabled(&q_bio, Sign::Plus, m)? {
                    let lhs = {
                        let fq = as_side(&phi[&p_elem.ty.head].on_elem(&q_elem)?, Sign::Plus);
                        let parts: Result<Vec<Elem>> = q_elem
                            .ty
                            .word
                            .iter()
                            .map(|qj| psi[qj].on_elem(&p_elem))
                            .collect();
                        let composed = r.compose(&fq, &parts?)?;
                        r.perm(&as_side(&composed, Sign::Plus), &sigma_interchange(n, m))?
                    };
                    let rhs = {
                        let gp = as_side(&psi[&q_elem.ty.head].on_elem(&p_elem)?, Sign::Plus);
                        let parts: Result<Vec<Elem>> = p_elem
                            .ty
                            .word
                            .iter()
                            .map(|pi| phi[pi].on_elem(&q_elem))
                            .collect();
                        r.compose(&gp, &parts?)?
                    };
                    if lhs != rhs {
                        return Ok((
                            false,
                            Some(format!("plus interchange fails at ({p_elem}, {q_elem})")),
                        ));
                    }
                }
            }
        }
    }
    Ok((true, None))
}
