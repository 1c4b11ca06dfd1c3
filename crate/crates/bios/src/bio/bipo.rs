//! Bipos: bi-pre-orders, their closure, tensor and internal hom, and the
//! embedding into bios as the one-point-hom instances.

use super::elem::{Elem, HomType, Value};
use super::handle::{object_words, BioHandle, BioImpl, HomSet};
use crate::bit::Sign;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A (symmetric) bipo on a finite carrier, with relations kept up to an
/// arity bound. Symmetric relations store their words sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipo {
    pub name: String,
    pub carrier: Vec<Value>,
    pub arity_bound: usize,
    pub symmetric: bool,
    pub rel_minus: BTreeSet<(Value, Vec<Value>)>,
    pub rel_plus: BTreeSet<(Vec<Value>, Value)>,
}

impl Bipo {
    /// The discrete bipo: only the reflexive relations.
    pub fn discrete(name: &str, carrier: Vec<Value>, arity_bound: usize, symmetric: bool) -> Bipo {
        let mut b = Bipo {
            name: name.into(),
            carrier,
            arity_bound,
            symmetric,
            rel_minus: BTreeSet::new(),
            rel_plus: BTreeSet::new(),
        };
        for c in b.carrier.clone() {
            b.rel_minus.insert((c.clone(), vec![c.clone()]));
            b.rel_plus.insert((vec![c.clone()], c.clone()));
        }
        b
    }

    fn key(&self, word: &[Value]) -> Vec<Value> {
        let mut w = word.to_vec();
        if self.symmetric {
            w.sort();
        }
        w
    }

    pub fn le_minus(&self, c0: &Value, word: &[Value]) -> bool {
        self.rel_minus.contains(&(c0.clone(), self.key(word)))
    }

    pub fn le_plus(&self, word: &[Value], c0: &Value) -> bool {
        self.rel_plus.contains(&(self.key(word), c0.clone()))
    }

    /// Insert a generating relation; run [`Bipo::close`] afterwards.
    pub fn insert_minus(&mut self, c0: Value, word: Vec<Value>) {
        let key = self.key(&word);
        self.rel_minus.insert((c0, key));
    }

    pub fn insert_plus(&mut self, word: Vec<Value>, c0: Value) {
        let key = self.key(&word);
        self.rel_plus.insert((key, c0));
    }

    /// Close under reflexivity, the two transitivity families, the unary
    /// agreement and, when symmetric, permutation of words.
    pub fn close(&mut self) {
        let words: Vec<Vec<Value>> = (1..=self.arity_bound)
            .flat_map(|n| object_words(&self.carrier, n))
            .map(|w| self.key(&w))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        loop {
            let before = (self.rel_minus.len(), self.rel_plus.len());
            // unary agreement
            let unary_m: Vec<(Value, Value)> = self
                .rel_minus
                .iter()
                .filter(|(_, w)| w.len() == 1)
                .map(|(c, w)| (c.clone(), w[0].clone()))
                .collect();
            for (c, d) in unary_m {
                self.rel_plus.insert((vec![c], d));
            }
            let unary_p: Vec<(Value, Value)> = self
                .rel_plus
                .iter()
                .filter(|(w, _)| w.len() == 1)
                .map(|(w, c)| (w[0].clone(), c.clone()))
                .collect();
            for (c, d) in unary_p {
                self.rel_minus.insert((c, vec![d]));
            }
            // composition transitivity: b0 <= (b_i), b_i <= w_i  =>  b0 <= w
            let minus_snapshot: Vec<(Value, Vec<Value>)> = self.rel_minus.iter().cloned().collect();
            for (b0, bs) in &minus_snapshot {
                for expansion in expansions(self, bs, &words, Sign::Minus) {
                    if expansion.len() <= self.arity_bound {
                        self.rel_minus.insert((b0.clone(), self.key(&expansion)));
                    }
                }
                // action transitivity: b0 <= c̄, c̄_i <=' b_i => b0 <= b̄
                for contraction in contractions(self, bs, Sign::Minus) {
                    self.rel_minus.insert((b0.clone(), self.key(&contraction)));
                }
            }
            let plus_snapshot: Vec<(Vec<Value>, Value)> = self.rel_plus.iter().cloned().collect();
            for (bs, b0) in &plus_snapshot {
                for expansion in expansions(self, bs, &words, Sign::Plus) {
                    if expansion.len() <= self.arity_bound {
                        self.rel_plus.insert((self.key(&expansion), b0.clone()));
                    }
                }
                for contraction in contractions(self, bs, Sign::Plus) {
                    self.rel_plus.insert((self.key(&contraction), b0.clone()));
                }
            }
            if (self.rel_minus.len(), self.rel_plus.len()) == before {
                break;
            }
        }
    }

    /// No repeated letters in any related word (units aside).
    pub fn is_fermionic(&self) -> bool {
        let distinct = |w: &[Value]| {
            let set: BTreeSet<&Value> = w.iter().collect();
            set.len() == w.len()
        };
        self.rel_minus.iter().all(|(_, w)| w.len() == 1 || distinct(w))
            && self.rel_plus.iter().all(|(w, _)| w.len() == 1 || distinct(w))
    }

    /// Two-sided relations force equality.
    pub fn is_simple(&self) -> bool {
        self.rel_minus.iter().all(|(c0, w)| {
            !self.le_plus(w, c0) || w.iter().all(|c| c == c0)
        })
    }

    /// Related words stay related after dropping a letter.
    pub fn is_closed(&self) -> bool {
        let drop_ok_minus = self.rel_minus.iter().all(|(c0, w)| {
            w.len() <= 1
                || (0..w.len()).all(|i| {
                    let mut shorter = w.clone();
                    shorter.remove(i);
                    // non-symmetric bipos only require dropping the last
                    if !self.symmetric && i != w.len() - 1 {
                        return true;
                    }
                    self.le_minus(c0, &shorter)
                })
        });
        let drop_ok_plus = self.rel_plus.iter().all(|(w, c0)| {
            w.len() <= 1
                || (0..w.len()).all(|i| {
                    let mut shorter = w.clone();
                    shorter.remove(i);
                    if !self.symmetric && i != w.len() - 1 {
                        return true;
                    }
                    self.le_plus(&shorter, c0)
                })
        });
        drop_ok_minus && drop_ok_plus
    }
}

/// All words obtained by replacing every letter b_i with a related word,
/// one substitution pattern at a time (letters not substituted use their
/// reflexive relation).
fn expansions(bipo: &Bipo, word: &[Value], words: &[Vec<Value>], side: Sign) -> Vec<Vec<Value>> {
    // substitute at one position per step; the fixpoint iteration composes
    let mut out = Vec::new();
    for (i, b) in word.iter().enumerate() {
        for w in words {
            let related = match side {
                Sign::Minus => bipo.le_minus(b, w),
                Sign::Plus => bipo.le_plus(w, b),
            };
            if related {
                let mut e = word.to_vec();
                e.splice(i..=i, w.iter().cloned());
                out.push(e);
            }
        }
    }
    out
}

/// All words obtained by contracting a consecutive block related to a
/// single letter the other way (the mutual-action transitivity).
fn contractions(bipo: &Bipo, word: &[Value], side: Sign) -> Vec<Vec<Value>> {
    let mut out = Vec::new();
    let n = word.len();
    for i in 0..n {
        for j in i + 1..=n {
            let block = &word[i..j];
            for b in &bipo.carrier {
                let related = match side {
                    Sign::Minus => bipo.le_plus(block, b),
                    Sign::Plus => bipo.le_minus(b, block),
                };
                if related {
                    let mut c = word.to_vec();
                    c.splice(i..j, std::iter::once(b.clone()));
                    out.push(c);
                }
            }
        }
    }
    out
}

/// All bipo maps between two finite bipos (functions preserving the
/// relations up to the bound).
pub fn bipo_maps(src: &Bipo, dst: &Bipo) -> Vec<Vec<usize>> {
    let n = src.carrier.len();
    let m = dst.carrier.len();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        let apply = |w: &[Value]| -> Vec<Value> {
            w.iter()
                .map(|v| {
                    let i = src.carrier.iter().position(|c| c == v).unwrap();
                    dst.carrier[f[i]].clone()
                })
                .collect()
        };
        let ok = src
            .rel_minus
            .iter()
            .all(|(c0, w)| dst.le_minus(&apply(std::slice::from_ref(c0))[0], &apply(w)))
            && src
                .rel_plus
                .iter()
                .all(|(w, c0)| dst.le_plus(&apply(w), &apply(std::slice::from_ref(c0))[0]));
        if ok {
            out.push(f.clone());
        }
        // increment
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            f[k] += 1;
            if f[k] < m {
                break;
            }
            f[k] = 0;
            k += 1;
        }
    }
}

/// The tensor bipo on the product carrier, generated by the relations of
/// both factors on aligned slices.
pub fn bipo_tensor(left: &Bipo, right: &Bipo) -> Result<Bipo> {
    let bound = left.arity_bound.min(right.arity_bound);
    let pair = |b: &Value, c: &Value| Value::Seq(vec![b.clone(), c.clone()]);
    let carrier: Vec<Value> = left
        .carrier
        .iter()
        .flat_map(|b| right.carrier.iter().map(move |c| pair(b, c)))
        .collect();
    if carrier.len() > 16 {
        return Err(Error::BoundExceeded { requested: carrier.len(), limit: 16 });
    }
    let mut t = Bipo::discrete(
        &format!("{}⊗{}", left.name, right.name),
        carrier,
        bound,
        left.symmetric && right.symmetric,
    );
    for b in &left.carrier {
        for (c0, w) in &right.rel_minus {
            let word: Vec<Value> = w.iter().map(|c| pair(b, c)).collect();
            if word.len() <= bound {
                t.rel_minus.insert((pair(b, c0), t.key(&word)));
            }
        }
        for (w, c0) in &right.rel_plus {
            let word: Vec<Value> = w.iter().map(|c| pair(b, c)).collect();
            if word.len() <= bound {
                t.rel_plus.insert((t.key(&word), pair(b, c0)));
            }
        }
    }
    for c in &right.carrier {
        for (b0, w) in &left.rel_minus {
            let word: Vec<Value> = w.iter().map(|b| pair(b, c)).collect();
            if word.len() <= bound {
                t.rel_minus.insert((pair(b0, c), t.key(&word)));
            }
        }
        for (w, b0) in &left.rel_plus {
            let word: Vec<Value> = w.iter().map(|b| pair(b, c)).collect();
            if word.len() <= bound {
                t.rel_plus.insert((t.key(&word), pair(b0, c)));
            }
        }
    }
    t.close();
    Ok(t)
}

/// The internal hom bipo: carrier all bipo maps C→D, relations pointwise.
pub fn bipo_hom(c: &Bipo, d: &Bipo) -> Result<Bipo> {
    let maps = bipo_maps(c, d);
    if maps.len() > 64 {
        return Err(Error::BoundExceeded { requested: maps.len(), limit: 64 });
    }
    let encode = |f: &[usize]| Value::Seq(f.iter().map(|&i| d.carrier[i].clone()).collect());
    let carrier: Vec<Value> = maps.iter().map(|f| encode(f)).collect();
    let bound = c.arity_bound.min(d.arity_bound);
    let mut h = Bipo::discrete(
        &format!("{}^{}", d.name, c.name),
        carrier.clone(),
        bound,
        d.symmetric,
    );
    // φ0 <= φ1..φn iff pointwise in D for every carrier element of C
    let images = |fv: &Value, i: usize| -> Value {
        fv.as_seq().unwrap()[i].clone()
    };
    for n in 1..=bound {
        for f0 in &carrier {
            for word in object_words(&carrier, n) {
                let minus_ok = (0..c.carrier.len()).all(|i| {
                    let w: Vec<Value> = word.iter().map(|f| images(f, i)).collect();
                    d.le_minus(&images(f0, i), &w)
                });
                if minus_ok {
                    h.rel_minus.insert((f0.clone(), h.key(&word)));
                }
                let plus_ok = (0..c.carrier.len()).all(|i| {
                    let w: Vec<Value> = word.iter().map(|f| images(f, i)).collect();
                    d.le_plus(&w, &images(f0, i))
                });
                if plus_ok {
                    h.rel_plus.insert((h.key(&word), f0.clone()));
                }
            }
        }
    }
    Ok(h)
}

/// The bio with singleton hom-sets cut out by a bipo.
pub struct BipoBio {
    pub bipo: Bipo,
}

impl BioImpl for BipoBio {
    fn name(&self) -> String {
        format!("l!({})", self.bipo.name)
    }

    fn objects(&self) -> Vec<Value> {
        self.bipo.carrier.clone()
    }

    fn hom(&self, ty: &HomType) -> HomSet {
        let related = match ty.side {
            Sign::Minus => self.bipo.le_minus(&ty.head, &ty.word),
            Sign::Plus => self.bipo.le_plus(&ty.word, &ty.head),
        };
        if related {
            HomSet::Table(vec![Value::Star])
        } else {
            HomSet::Table(vec![])
        }
    }

    fn contains(&self, e: &Elem) -> bool {
        matches!(self.hom(&e.ty), HomSet::Table(v) if !v.is_empty()) && e.val == Value::Star
    }

    fn unit(&self, obj: &Value) -> Elem {
        Elem::new(HomType::minus(obj.clone(), vec![obj.clone()]), Value::Star)
    }

    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let parts: Vec<Elem> = parts
            .iter()
            .map(|q| crate::bio::handle::ops::as_side(q, p.ty.side))
            .collect();
        let (head, word) = match p.ty.side {
            Sign::Minus => {
                let word: Vec<Value> = parts.iter().flat_map(|q| q.ty.word.clone()).collect();
                (p.ty.head.clone(), word)
            }
            Sign::Plus => {
                let word: Vec<Value> = parts.iter().flat_map(|q| q.ty.word.clone()).collect();
                (p.ty.head.clone(), word)
            }
        };
        let ty = match p.ty.side {
            Sign::Minus => HomType::minus(head, word),
            Sign::Plus => HomType::plus(word, head),
        };
        match self.hom(&ty) {
            HomSet::Table(v) if !v.is_empty() => Ok(Elem::new(ty, Value::Star)),
            _ => Err(Error::TypeMismatch(format!(
                "bipo relation does not hold for the composite {ty}"
            ))),
        }
    }

    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let parts: Vec<Elem> = parts
            .iter()
            .map(|q| crate::bio::handle::ops::as_side(q, p.ty.side.flip()))
            .collect();
        let heads: Vec<Value> = parts.iter().map(|q| q.ty.head.clone()).collect();
        let ty = match p.ty.side {
            Sign::Minus => HomType::minus(p.ty.head.clone(), heads),
            Sign::Plus => HomType::plus(heads, p.ty.head.clone()),
        };
        match self.hom(&ty) {
            HomSet::Table(v) if !v.is_empty() => Ok(Elem::new(ty, Value::Star)),
            _ => Err(Error::TypeMismatch(format!(
                "bipo relation does not hold for the action result {ty}"
            ))),
        }
    }

    fn perm(&self, p: &Elem, sigma: &[usize]) -> Result<Elem> {
        let word: Vec<Value> = match p.ty.side {
            Sign::Minus => sigma.iter().map(|&i| p.ty.word[i].clone()).collect(),
            Sign::Plus => {
                let mut w = vec![Value::Star; p.ty.word.len()];
                for (i, &s) in sigma.iter().enumerate() {
                    w[s] = p.ty.word[i].clone();
                }
                w
            }
        };
        let ty = match p.ty.side {
            Sign::Minus => HomType::minus(p.ty.head.clone(), word),
            Sign::Plus => HomType::plus(word, p.ty.head.clone()),
        };
        Ok(Elem::new(ty, Value::Star))
    }
}

/// ℓ_! : the bio generated by a bipo.
pub fn bipo_to_bio(b: &Bipo) -> BioHandle {
    Arc::new(BipoBio { bipo: b.clone() })
}

/// ℓ* : the bipo of hom-set nonemptiness of a bio with enumerable homs.
pub fn bio_to_bipo(b: &BioHandle, arity_bound: usize, symmetric: bool) -> Result<Bipo> {
    let objects = b.objects();
    let mut out = Bipo::discrete(&format!("l*({})", b.name()), objects.clone(), arity_bound, symmetric);
    for n in 1..=arity_bound {
        for h in &objects {
            for w in object_words(&objects, n) {
                let mty = HomType::minus(h.clone(), w.clone());
                if !b.hom(&mty).table()?.is_empty() {
                    out.rel_minus.insert((h.clone(), out.key(&w)));
                }
                let pty = HomType::plus(w.clone(), h.clone());
                if !b.hom(&pty).table()?.is_empty() {
                    out.rel_plus.insert((out.key(&w), h.clone()));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms(names: &[&str]) -> Vec<Value> {
        names.iter().map(|n| Value::sym(n)).collect()
    }

    #[test]
    fn empty_generators_close_to_reflexivity() {
        let mut b = Bipo::discrete("d", syms(&["a", "b"]), 3, true);
        let before = b.clone();
        b.close();
        assert_eq!(b, before);
    }

    #[test]
    fn transitivity_through_a_word() {
        // a <= bb and b <= c give a <= cc
        let mut b = Bipo::discrete("t", syms(&["a", "b", "c"]), 3, true);
        b.rel_minus.insert((Value::sym("a"), vec![Value::sym("b"), Value::sym("b")]));
        b.rel_minus.insert((Value::sym("b"), vec![Value::sym("c")]));
        b.close();
        assert!(b.le_minus(&Value::sym("a"), &[Value::sym("c"), Value::sym("c")]));
        // unary agreement mirrors b <= c into the plus relation
        assert!(b.le_plus(&[Value::sym("b")], &Value::sym("c")));
    }

    #[test]
    fn l_star_l_shriek_round_trip() {
        let mut b = Bipo::discrete("g", syms(&["x", "y"]), 3, true);
        b.rel_minus.insert((Value::sym("x"), vec![Value::sym("y"), Value::sym("y")]));
        b.close();
        let bio = bipo_to_bio(&b);
        let back = bio_to_bipo(&bio, 3, true).unwrap();
        assert_eq!(back.rel_minus, b.rel_minus);
        assert_eq!(back.rel_plus, b.rel_plus);
    }

    #[test]
    fn discrete_bipo_gives_units_only_bio() {
        let b = Bipo::discrete("d", syms(&["x", "y"]), 3, true);
        let bio = bipo_to_bio(&b);
        let ty = HomType::minus(Value::sym("x"), vec![Value::sym("y")]);
        assert!(bio.hom(&ty).table().unwrap().is_empty());
        let tyx = HomType::minus(Value::sym("x"), vec![Value::sym("x")]);
        assert_eq!(bio.hom(&tyx).table().unwrap().len(), 1);
    }
}
