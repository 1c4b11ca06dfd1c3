//! The interchange of compositions and actions in a monochromatic bio,
//! with the derived commutativity and centrality of P(1).

use super::elem::{Elem, HomType, Value};
use super::handle::{ops, BioImpl, HomSet};
use super::sigma::sigma_interchange;
use crate::bit::Sign;
use crate::error::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct DistributivityReport {
    pub bio: String,
    pub interchange_minus: bool,
    pub interchange_plus: bool,
    pub unary_commutative: bool,
    pub central: bool,
    pub cases: usize,
    pub witness: Option<String>,
}

impl DistributivityReport {
    pub fn is_distributive(&self) -> bool {
        self.interchange_minus && self.interchange_plus && self.unary_commutative && self.central
    }
}

fn mono_elems(b: &dyn BioImpl, side: Sign, n: usize, samples: usize, seed: u64) -> Vec<Elem> {
    let ty = match side {
        Sign::Minus => HomType::minus(Value::Star, vec![Value::Star; n]),
        Sign::Plus => HomType::plus(vec![Value::Star; n], Value::Star),
    };
    match b.hom(&ty) {
        HomSet::Table(vals) => vals.into_iter().map(|v| Elem::new(ty.clone(), v)).collect(),
        HomSet::Predicate => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ops::elements_of(b, &ty, &mut rng, samples)
        }
    }
}

/// Check the interchange identities for every (P, P', P'') with arities at
/// most the bound, including the block sigma insertions, together with
/// commutativity and centrality of P(1).
pub fn check_distributive(b: &dyn BioImpl, bound: usize) -> Result<DistributivityReport> {
    let mut cases = 0usize;
    let mut witness = None;
    let mut interchange_minus = true;
    let mut interchange_plus = true;

    // (P ⟵∘_j P') ∘_j P'' = (P ∘_block (P''...)) · σ_{m,l} ⟵∘_block (P'...)
    'outer: for n in 1..=bound {
        for p in mono_elems(b, Sign::Minus, n, 6, 1) {
            for m in 1..=n {
                for pp in mono_elems(b, Sign::Plus, m, 6, 2) {
                    for l in 1..=bound {
                        for ppp in mono_elems(b, Sign::Minus, l, 6, 3) {
                            for j in 0..=(n - m) {
                                cases += 1;
                                let lhs = (|| {
                                    let acted = ops::act_at(b, &p, j, &pp)?;
                                    ops::compose_at(b, &acted, j, &ppp)
                                })();
                                let rhs = (|| {
                                    // compose P'' at the m consecutive slots
                                    let mut parts = Vec::new();
                                    for (k, obj) in p.ty.word.iter().enumerate() {
                                        if k >= j && k < j + m {
                                            parts.push(ppp.clone());
                                        } else {
                                            parts.push(b.unit(obj));
                                        }
                                    }
                                    let composed = b.compose(&p, &parts)?;
                                    // block permutation sigma_{m,l} inside the
                                    // m*l block starting at j
                                    let total = composed.arity();
                                    let mut sigma: Vec<usize> = (0..j).collect();
                                    sigma.extend(
                                        sigma_interchange(m, l).iter().map(|&x| x + j),
                                    );
                                    sigma.extend(j + m * l..total);
                                    let permuted = b.perm(&composed, &sigma)?;
                                    // act with l copies of P' over the block
                                    let mut parts = Vec::new();
                                    let mut k = 0;
                                    while k < total {
                                        if k == j {
                                            for _ in 0..l {
                                                parts.push(pp.clone());
                                            }
                                            k += m * l;
                                        } else {
                                            parts.push(b.unit(&permuted.ty.word[k]));
                                            k += 1;
                                        }
                                    }
                                    b.act(&permuted, &parts)
                                })();
                                match (&lhs, &rhs) {
                                    (Ok(a), Ok(c)) if a == c => {}
                                    _ => {
                                        interchange_minus = false;
                                        witness = Some(format!(
                                            "minus interchange at n={n} m={m} l={l} j={j}: P={p} P'={pp} P''={ppp}"
                                        ));
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // dual: P'' ∘_j ((P') ⟶∘ P) against the sigma-inserted right action
    'outer2: for n in 1..=bound {
        for p in mono_elems(b, Sign::Plus, n, 6, 4) {
            for m in 1..=n {
                for pp in mono_elems(b, Sign::Minus, m, 6, 5) {
                    for l in 1..=bound {
                        for ppp in mono_elems(b, Sign::Plus, l, 6, 6) {
                            for j in 0..=(n - m) {
                                cases += 1;
                                let lhs = (|| {
                                    let acted =
                                        ops::act_at(b, &ops::as_side(&p, Sign::Plus), j, &pp)?;
                                    ops::compose_at(
                                        b,
                                        &ops::as_side(&acted, Sign::Plus),
                                        j,
                                        &ppp,
                                    )
                                })();
                                let rhs = (|| {
                                    let mut parts = Vec::new();
                                    for (k, obj) in p.ty.word.iter().enumerate() {
                                        if k >= j && k < j + m {
                                            parts.push(ppp.clone());
                                        } else {
                                            parts.push(b.unit(obj));
                                        }
                                    }
                                    let composed =
                                        b.compose(&ops::as_side(&p, Sign::Plus), &parts)?;
                                    let total = composed.arity();
                                    let mut sigma: Vec<usize> = (0..j).collect();
                                    sigma.extend(
                                        sigma_interchange(m, l).iter().map(|&x| x + j),
                                    );
                                    sigma.extend(j + m * l..total);
                                    let permuted = b.perm(
                                        &ops::as_side(&composed, Sign::Plus),
                                        &crate::bio::elem::perm_inverse(&sigma),
                                    )?;
                                    let mut parts = Vec::new();
                                    let mut k = 0;
                                    while k < total {
                                        if k == j {
                                            for _ in 0..l {
                                                parts.push(pp.clone());
                                            }
                                            k += m * l;
                                        } else {
                                            parts.push(b.unit(&permuted.ty.word[k]));
                                            k += 1;
                                        }
                                    }
                                    b.act(&ops::as_side(&permuted, Sign::Plus), &parts)
                                })();
                                match (&lhs, &rhs) {
                                    (Ok(a), Ok(c)) if a == c => {}
                                    _ => {
                                        interchange_plus = false;
                                        witness = witness.or_else(|| {
                                            Some(format!(
                                                "plus interchange at n={n} m={m} l={l} j={j}"
                                            ))
                                        });
                                        break 'outer2;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // derived: P(1) commutative
    let unaries = mono_elems(b, Sign::Minus, 1, 12, 7);
    let mut unary_commutative = true;
    for a in &unaries {
        for c in &unaries {
            cases += 1;
            if b.compose(a, &[c.clone()])? != b.compose(c, &[a.clone()])? {
                unary_commutative = false;
                witness = witness
                    .or_else(|| Some(format!("P(1) not commutative: {a} vs {c}")));
            }
        }
    }
    // derived: centrality a∘P = P∘(a..a) and P∘a = (a..a)∘P
    let mut central = true;
    for n in 1..=bound {
        for p in mono_elems(b, Sign::Minus, n, 6, 8) {
            for a in &unaries {
                cases += 1;
                let lhs = b.compose(a, &[p.clone()])?;
                let copies: Vec<Elem> = vec![a.clone(); n];
                let rhs = b.compose(&p, &copies)?;
                if lhs != rhs {
                    central = false;
                    witness =
                        witness.or_else(|| Some(format!("{a} is not central over {p}")));
                }
            }
        }
        for p in mono_elems(b, Sign::Plus, n, 6, 9) {
            for a in &unaries {
                cases += 1;
                // P∘a: a as the outer of the plus composition
                let lhs = b.compose(&ops::as_side(a, Sign::Plus), &[p.clone()])?;
                let copies: Vec<Elem> = vec![a.clone(); n];
                let rhs = b.compose(&ops::as_side(&p, Sign::Plus), &copies)?;
                if lhs != rhs {
                    central = false;
                    witness = witness
                        .or_else(|| Some(format!("{a} is not central over plus {p}")));
                }
            }
        }
    }

    Ok(DistributivityReport {
        bio: b.name(),
        interchange_minus,
        interchange_plus,
        unary_commutative,
        central,
        cases,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::{builtin_rig, FOneBio, PaBio};

    #[test]
    fn boolean_vectors_are_distributive() {
        let b = PaBio::new(builtin_rig("B").unwrap());
        let report = check_distributive(&b, 2).unwrap();
        assert!(report.is_distributive(), "{report:?}");
    }

    #[test]
    fn field_with_one_element_is_distributive() {
        let report = check_distributive(&FOneBio::new(), 2).unwrap();
        assert!(report.is_distributive(), "{report:?}");
    }

    #[test]
    fn natural_vectors_distribute_at_bound_three() {
        // block shapes with m=2, l=3 pin the sigma orientation
        let b = PaBio::with_entry_bound(builtin_rig("N").unwrap(), 2);
        let report = check_distributive(&b, 3).unwrap();
        assert!(report.is_distributive(), "{report:?}");
    }

    #[test]
    fn upper_triangular_booleans_fail_with_witness() {
        let b = PaBio::new(builtin_rig("ut2b").unwrap());
        let report = check_distributive(&b, 1).unwrap();
        assert!(!report.is_distributive());
        assert!(report.witness.is_some());
    }
}
