//! The monochromatic bio of row and column vectors over a rig.

use super::rig::{RigHandle, RigOps};
use crate::bio::elem::{Elem, HomType, Value};
use crate::bio::handle::{BioImpl, HomSet};
use crate::bit::Sign;
use crate::error::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// P_A: minus elements are rows A^n, plus elements columns A^n, with
/// composition scaling blocks and actions contracting row against column.
pub struct PaBio {
    pub rig: RigHandle,
    /// bound for enumerating hom tables of infinite rigs in audits; `None`
    /// leaves those hom-sets predicate-backed
    pub entry_bound: Option<i64>,
}

impl PaBio {
    pub fn new(rig: RigHandle) -> PaBio {
        PaBio { rig, entry_bound: None }
    }

    pub fn with_entry_bound(rig: RigHandle, bound: i64) -> PaBio {
        PaBio { rig, entry_bound: Some(bound) }
    }

    fn entries<'a>(&self, e: &'a Elem) -> &'a [Value] {
        e.val.as_seq().expect("vector element")
    }

    fn mono(&self, side: Sign, n: usize, entries: Vec<Value>) -> Elem {
        let ty = match side {
            Sign::Minus => HomType::minus(Value::Star, vec![Value::Star; n]),
            Sign::Plus => HomType::plus(vec![Value::Star; n], Value::Star),
        };
        Elem::new(ty, Value::Seq(entries))
    }

    fn vectors(&self, n: usize) -> Option<Vec<Value>> {
        let carrier = match self.rig.elements() {
            Some(c) => c,
            None => {
                let b = self.entry_bound?;
                Some((-b..=b).filter(|&x| self.rig.contains(&Value::Int(x))).map(Value::Int).collect())?
            }
        };
        let mut out: Vec<Vec<Value>> = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    carrier.iter().map(move |c| {
                        let mut w = v.clone();
                        w.push(c.clone());
                        w
                    }).collect::<Vec<_>>()
                })
                .collect();
        }
        Some(out.into_iter().map(Value::Seq).collect())
    }
}

impl BioImpl for PaBio {
    fn name(&self) -> String {
        format!("P_{}", self.rig.name())
    }

    fn objects(&self) -> Vec<Value> {
        vec![Value::Star]
    }

    fn hom(&self, ty: &HomType) -> HomSet {
        match self.vectors(ty.arity()) {
            Some(v) => HomSet::Table(v),
            None => HomSet::Predicate,
        }
    }

    fn contains(&self, e: &Elem) -> bool {
        match e.val.as_seq() {
            Some(s) => s.len() == e.arity() && s.iter().all(|v| self.rig.contains(v)),
            None => false,
        }
    }

    fn unit(&self, _obj: &Value) -> Elem {
        self.mono(Sign::Minus, 1, vec![self.rig.one()])
    }

    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        if parts.len() != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: parts.len() });
        }
        let pv = self.entries(p);
        let mut out = Vec::new();
        match p.ty.side {
            Sign::Minus => {
                // row composed with rows: block i is p_i * q^i
                for (i, q) in parts.iter().enumerate() {
                    for qv in self.entries(q) {
                        out.push(self.rig.mul(&pv[i], qv));
                    }
                }
                Ok(self.mono(Sign::Minus, out.len(), out))
            }
            Sign::Plus => {
                // columns into a column: block i is q^i * p_i (inner left)
                for (i, q) in parts.iter().enumerate() {
                    for qv in self.entries(q) {
                        out.push(self.rig.mul(qv, &pv[i]));
                    }
                }
                Ok(self.mono(Sign::Plus, out.len(), out))
            }
        }
    }

    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let pv = self.entries(p);
        let total: usize = parts.iter().map(|q| q.arity()).sum();
        if total != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: total });
        }
        let mut out = Vec::new();
        let mut off = 0;
        match p.ty.side {
            Sign::Minus => {
                // p ⟵∘ (columns): block i contracts to sum_j p_{off+j} * d_j
                for q in parts {
                    let qv = self.entries(q);
                    let mut acc = self.rig.zero();
                    for (j, d) in qv.iter().enumerate() {
                        acc = self.rig.add(&acc, &self.rig.mul(&pv[off + j], d));
                    }
                    out.push(acc);
                    off += qv.len();
                }
                Ok(self.mono(Sign::Minus, out.len(), out))
            }
            Sign::Plus => {
                // (rows) ⟶∘ p: block i contracts to sum_j r_j * p_{off+j}
                for q in parts {
                    let qv = self.entries(q);
                    let mut acc = self.rig.zero();
                    for (j, r) in qv.iter().enumerate() {
                        acc = self.rig.add(&acc, &self.rig.mul(r, &pv[off + j]));
                    }
                    out.push(acc);
                    off += qv.len();
                }
                Ok(self.mono(Sign::Plus, out.len(), out))
            }
        }
    }

    fn perm(&self, p: &Elem, sigma: &[usize]) -> Result<Elem> {
        if sigma.len() != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: sigma.len() });
        }
        let pv = self.entries(p);
        let out: Vec<Value> = match p.ty.side {
            Sign::Minus => sigma.iter().map(|&i| pv[i].clone()).collect(),
            Sign::Plus => {
                let mut o = vec![self.rig.zero(); pv.len()];
                for (i, &s) in sigma.iter().enumerate() {
                    o[s] = pv[i].clone();
                }
                o
            }
        };
        Ok(self.mono(p.ty.side, out.len(), out))
    }

    fn substitute_zero(&self, p: &Elem, keep: &[bool]) -> Result<Elem> {
        if keep.len() != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: keep.len() });
        }
        let out: Vec<Value> = self
            .entries(p)
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        Ok(self.mono(p.ty.side, out.len(), out))
    }

    fn zero_unary(&self) -> Option<Elem> {
        Some(self.mono(Sign::Minus, 1, vec![self.rig.zero()]))
    }

    fn sample(&self, ty: &HomType, rng: &mut ChaCha8Rng) -> Option<Elem> {
        // integer backends: small entries
        let entries: Vec<Value> = (0..ty.arity())
            .map(|_| {
                let x = rng.gen_range(if self.rig.contains(&Value::Int(-1)) { -5..=5 } else { 0..=5 });
                Value::Int(x)
            })
            .collect();
        Some(self.mono(ty.side, entries.len(), entries))
    }

    fn transpose(&self, p: &Elem) -> Result<Elem> {
        let entries: Option<Vec<Value>> = self
            .entries(p)
            .iter()
            .map(|v| self.rig.involution(v))
            .collect();
        let entries = entries.ok_or_else(|| {
            Error::Unsupported(format!("{} has no involution", self.rig.name()))
        })?;
        let side = if p.arity() == 1 { Sign::Minus } else { p.ty.side.flip() };
        Ok(self.mono(side, entries.len(), entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bio::handle::ops;
    use crate::rig::rig::builtin_rig;

    fn pn() -> PaBio {
        PaBio::new(builtin_rig("N").unwrap())
    }

    fn row(b: &PaBio, xs: &[i64]) -> Elem {
        b.mono(Sign::Minus, xs.len(), xs.iter().map(|&x| Value::Int(x)).collect())
    }

    fn col(b: &PaBio, xs: &[i64]) -> Elem {
        b.mono(Sign::Plus, xs.len(), xs.iter().map(|&x| Value::Int(x)).collect())
    }

    #[test]
    fn composition_matches_the_row_formula() {
        // (1,2) o_1 (3) = (3,2), 0-indexed slot 0
        let b = pn();
        let p = row(&b, &[1, 2]);
        let q = row(&b, &[3]);
        let got = ops::compose_at(&b, &p, 0, &q).unwrap();
        assert_eq!(got, row(&b, &[3, 2]));
    }

    #[test]
    fn action_contracts_row_against_column() {
        // (1,2) ⟵∘_1 (3,4)^T = (11)
        let b = pn();
        let p = row(&b, &[1, 2]);
        let q = col(&b, &[3, 4]);
        let got = ops::act_at(&b, &p, 0, &q).unwrap();
        assert_eq!(got, row(&b, &[11]));
    }

    #[test]
    fn unary_transport_is_identity_on_representatives() {
        let b = pn();
        let f = row(&b, &[7]);
        assert_eq!(ops::transport(&b, &f).unwrap(), f);
    }

    #[test]
    fn act_at_slots_places_block_at_least_slot() {
        // contract slots {0, 2} of (2,5,3) with (7,11)^T:
        // 2*7 + 3*11 = 47 at position 0, survivor 5 after it
        let b = pn();
        let p = row(&b, &[2, 5, 3]);
        let q = col(&b, &[7, 11]);
        let got = ops::act_at_slots(&b, &p, &[0, 2], &q).unwrap();
        assert_eq!(got, row(&b, &[47, 5]));
    }

    #[test]
    fn addition_recovers_from_the_one_one_vectors() {
        // a + b := (1,1) ⟵∘ (a,b) ⟵∘ (1,1)^T
        let b = pn();
        let ones = row(&b, &[1, 1]);
        let mid = b
            .compose(&ones, &[row(&b, &[3]), row(&b, &[4])])
            .unwrap();
        let got = b.act(&mid, &[col(&b, &[1, 1])]).unwrap();
        assert_eq!(got, row(&b, &[7]));
    }
}
