//! The ℓ_p sub-bios of the rational vectors, with exact membership.

use super::pa::PaBio;
use super::rig::RigOps;
use crate::bio::elem::{Elem, HomType, Value};
use crate::bio::handle::{BioImpl, HomSet};
use crate::bit::Sign;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// The rational field as a rig backend for the ambient P_Q.
pub struct QRig;

impl RigOps for QRig {
    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> Value {
        Value::Rat(BigRational::zero())
    }
    fn one(&self) -> Value {
        Value::Rat(BigRational::one())
    }
    fn add(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            _ => panic!("rational rig over non-rationals"),
        }
    }
    fn mul(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            _ => panic!("rational rig over non-rationals"),
        }
    }
    fn contains(&self, v: &Value) -> bool {
        matches!(v, Value::Rat(_))
    }
    fn elements(&self) -> Option<Vec<Value>> {
        None
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpExp {
    One,
    Two,
    Inf,
}

impl LpExp {
    pub fn dual(self) -> LpExp {
        match self {
            LpExp::One => LpExp::Inf,
            LpExp::Two => LpExp::Two,
            LpExp::Inf => LpExp::One,
        }
    }

    pub fn parse(s: &str) -> Result<LpExp> {
        match s {
            "1" => Ok(LpExp::One),
            "2" => Ok(LpExp::Two),
            "inf" | "oo" => Ok(LpExp::Inf),
            _ => Err(Error::Unknown(format!("l_p exponent {s}; use 1, 2 or inf"))),
        }
    }
}

/// Is the exact p-norm of the vector at most one?
pub fn in_unit_ball(p: LpExp, entries: &[Value]) -> bool {
    let rats: Vec<&BigRational> = entries
        .iter()
        .map(|v| match v {
            Value::Rat(r) => r,
            _ => panic!("l_p vectors are rational"),
        })
        .collect();
    let one = BigRational::one();
    match p {
        LpExp::One => rats.iter().map(|r| r.abs()).sum::<BigRational>() <= one,
        LpExp::Two => rats.iter().map(|r| *r * *r).sum::<BigRational>() <= one,
        LpExp::Inf => rats.iter().all(|r| r.abs() <= one),
    }
}

/// The pair (P_{ℓp}, P_{ℓq}) inside P_Q: rows in the p-ball, columns in
/// the dual q-ball. Membership is decidable exactly; hom-sets are
/// predicate-backed.
pub struct LpBio {
    pub p: LpExp,
    inner: PaBio,
}

impl LpBio {
    pub fn new(p: LpExp) -> LpBio {
        LpBio { p, inner: PaBio::new(Arc::new(QRig)) }
    }

    pub fn row(&self, entries: Vec<BigRational>) -> Elem {
        let n = entries.len();
        Elem::new(
            HomType::minus(Value::Star, vec![Value::Star; n]),
            Value::Seq(entries.into_iter().map(Value::Rat).collect()),
        )
    }

    pub fn col(&self, entries: Vec<BigRational>) -> Elem {
        let n = entries.len();
        Elem::new(
            HomType::plus(vec![Value::Star; n], Value::Star),
            Value::Seq(entries.into_iter().map(Value::Rat).collect()),
        )
    }
}

impl BioImpl for LpBio {
    fn name(&self) -> String {
        match self.p {
            LpExp::One => "l_1".into(),
            LpExp::Two => "l_2".into(),
            LpExp::Inf => "l_inf".into(),
        }
    }

    fn objects(&self) -> Vec<Value> {
        vec![Value::Star]
    }

    fn hom(&self, _ty: &HomType) -> HomSet {
        HomSet::Predicate
    }

    fn contains(&self, e: &Elem) -> bool {
        let Some(s) = e.val.as_seq() else { return false };
        if s.len() != e.arity() {
            return false;
        }
        // unary elements sit in both balls' intersection boundary story;
        // rows use p, columns the dual exponent
        let exp = match e.ty.side {
            Sign::Minus => self.p,
            Sign::Plus => self.p.dual(),
        };
        in_unit_ball(exp, s)
    }

    fn unit(&self, obj: &Value) -> Elem {
        self.inner.unit(obj)
    }

    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let out = self.inner.compose(p, parts)?;
        debug_assert!(self.contains(&out), "l_p is closed under composition");
        Ok(out)
    }

    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let out = self.inner.act(p, parts)?;
        debug_assert!(self.contains(&out), "l_p is closed under the actions");
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

    /// Entrywise identity moving rows to columns; the result may leave the
    /// ball pair unless p = 2, which is the point of the self-duality
    /// boundary.
    fn transpose(&self, p: &Elem) -> Result<Elem> {
        self.inner.transpose(p)
    }

    fn sample(&self, ty: &HomType, rng: &mut ChaCha8Rng) -> Option<Elem> {
        // random small rationals scaled into the ball
        let n = ty.arity();
        let exp = match ty.side {
            Sign::Minus => self.p,
            Sign::Plus => self.p.dual(),
        };
        for _ in 0..64 {
            let entries: Vec<BigRational> = (0..n)
                .map(|_| {
                    BigRational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=6).into())
                })
                .collect();
            let vals: Vec<Value> = entries.iter().cloned().map(Value::Rat).collect();
            if in_unit_ball(exp, &vals) {
                return Some(Elem::new(ty.clone(), Value::Seq(vals)));
            }
            // rescale by the l_1 norm plus one, which lands in every ball
            let norm: BigRational =
                entries.iter().map(|r| r.abs()).sum::<BigRational>() + BigRational::one();
            let scaled: Vec<Value> =
                entries.iter().map(|r| Value::Rat(r / &norm)).collect();
            if in_unit_ball(exp, &scaled) {
                return Some(Elem::new(ty.clone(), Value::Seq(scaled)));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn three_four_five_is_on_the_two_sphere() {
        let l2 = LpBio::new(LpExp::Two);
        let v = l2.row(vec![r(3, 5), r(4, 5)]);
        assert!(l2.contains(&v));
        let t = l2.transpose(&v).unwrap();
        assert!(l2.contains(&t));
    }

    #[test]
    fn half_half_transposes_out_of_the_one_ball_rows() {
        let l1 = LpBio::new(LpExp::One);
        let v = l1.col(vec![r(1, 2), r(1, 2)]);
        // the column is in the dual (sup) ball
        assert!(l1.contains(&v));
        // (1,1) is a sup-ball column whose transpose row has 1-norm 2
        let w = l1.col(vec![r(1, 1), r(1, 1)]);
        assert!(l1.contains(&w));
        let wt = l1.transpose(&w).unwrap();
        assert!(!l1.contains(&wt));
    }

    #[test]
    fn closure_under_composition_and_action() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [LpExp::One, LpExp::Two, LpExp::Inf] {
            let b = LpBio::new(p);
            for _ in 0..100 {
                let x = b.sample(&HomType::minus(Value::Star, vec![Value::Star; 2]), &mut rng).unwrap();
                let y = b.sample(&HomType::minus(Value::Star, vec![Value::Star; 2]), &mut rng).unwrap();
                let z = b.sample(&HomType::plus(vec![Value::Star; 2], Value::Star), &mut rng).unwrap();
                let c = crate::bio::handle::ops::compose_at(&b, &x, 0, &y).unwrap();
                assert!(b.contains(&c));
                let a = b.act(&x, &[z.clone()]).unwrap();
                assert!(b.contains(&a));
            }
        }
    }
}
