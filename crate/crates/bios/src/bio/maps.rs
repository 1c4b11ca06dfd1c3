//! Maps of bios: object function plus element function, either tabled for
//! finite sources or closure-backed.

use super::elem::{Elem, HomType, Value};
use super::handle::{object_words, BioHandle, BioImpl, HomSet};
use crate::bit::Sign;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

pub trait BioMapT: Send + Sync {
    fn source(&self) -> BioHandle;
    fn target(&self) -> BioHandle;
    fn on_object(&self, obj: &Value) -> Result<Value>;
    fn on_elem(&self, e: &Elem) -> Result<Elem>;
}

pub type BioMap = Arc<dyn BioMapT>;

pub struct IdentityMap {
    pub bio: BioHandle,
}

impl BioMapT for IdentityMap {
    fn source(&self) -> BioHandle {
        self.bio.clone()
    }
    fn target(&self) -> BioHandle {
        self.bio.clone()
    }
    fn on_object(&self, obj: &Value) -> Result<Value> {
        Ok(obj.clone())
    }
    fn on_elem(&self, e: &Elem) -> Result<Elem> {
        Ok(e.clone())
    }
}

/// A finite map given by its graph on objects and elements.
pub struct TableMap {
    pub source: BioHandle,
    pub target: BioHandle,
    pub objects: BTreeMap<Value, Value>,
    pub elems: BTreeMap<Elem, Elem>,
}

impl BioMapT for TableMap {
    fn source(&self) -> BioHandle {
        self.source.clone()
    }
    fn target(&self) -> BioHandle {
        self.target.clone()
    }
    fn on_object(&self, obj: &Value) -> Result<Value> {
        self.objects
            .get(obj)
            .cloned()
            .ok_or_else(|| Error::Unknown(format!("map undefined on object {obj}")))
    }
    fn on_elem(&self, e: &Elem) -> Result<Elem> {
        self.elems
            .get(e)
            .cloned()
            .ok_or_else(|| Error::Unknown(format!("map undefined on {e}")))
    }
}

/// A map defined by closures, for infinite sources.
pub struct FnMap {
    pub source: BioHandle,
    pub target: BioHandle,
    pub obj: Box<dyn Fn(&Value) -> Result<Value> + Send + Sync>,
    pub elem: Box<dyn Fn(&Elem) -> Result<Elem> + Send + Sync>,
}

impl BioMapT for FnMap {
    fn source(&self) -> BioHandle {
        self.source.clone()
    }
    fn target(&self) -> BioHandle {
        self.target.clone()
    }
    fn on_object(&self, obj: &Value) -> Result<Value> {
        (self.obj)(obj)
    }
    fn on_elem(&self, e: &Elem) -> Result<Elem> {
        (self.elem)(e)
    }
}

/// Check the homomorphism laws of a map on every tabled element with
/// arities within the bound: units, compositions, actions, Sn-actions.
pub fn validate_map(map: &dyn BioMapT, bound: usize) -> Result<()> {
    let src = map.source();
    let tgt = map.target();
    let objects = src.objects();
    for obj in &objects {
        let u = src.unit(obj);
        if map.on_elem(&u)? != tgt.unit(&map.on_object(obj)?) {
            return Err(Error::TypeMismatch(format!("unit at {obj} not preserved")));
        }
    }
    let elems = |side: Sign, arity: usize| -> Vec<Elem> {
        let mut out = Vec::new();
        for h in &objects {
            for w in object_words(&objects, arity) {
                let ty = match side {
                    Sign::Minus => HomType::minus(h.clone(), w),
                    Sign::Plus => HomType::plus(w, h.clone()),
                };
                if let HomSet::Table(vals) = src.hom(&ty) {
                    out.extend(vals.into_iter().map(|v| Elem::new(ty.clone(), v)));
                }
            }
        }
        out
    };
    for n in 1..=bound {
        for p in elems(Sign::Minus, n) {
            // single-slot compositions and one-block actions
            for (i, obj) in p.ty.word.iter().enumerate() {
                for q in elems(Sign::Minus, 1) {
                    if q.ty.head != *obj {
                        continue;
                    }
                    let lhs = map.on_elem(&super::handle::ops::compose_at(
                        src.as_ref(),
                        &p,
                        i,
                        &q,
                    )?)?;
                    let rhs = super::handle::ops::compose_at(
                        tgt.as_ref(),
                        &map.on_elem(&p)?,
                        i,
                        &map.on_elem(&q)?,
                    )?;
                    if lhs != rhs {
                        return Err(Error::TypeMismatch(format!(
                            "composition not preserved at {p} slot {i}"
                        )));
                    }
                }
            }
            for q in elems(Sign::Plus, n.min(2)) {
                if q.ty.word != p.ty.word[..q.arity()] {
                    continue;
                }
                let lhs = map.on_elem(&super::handle::ops::act_at(src.as_ref(), &p, 0, &q)?)?;
                let rhs = super::handle::ops::act_at(
                    tgt.as_ref(),
                    &map.on_elem(&p)?,
                    0,
                    &map.on_elem(&q)?,
                )?;
                if lhs != rhs {
                    return Err(Error::TypeMismatch(format!("action not preserved at {p}")));
                }
            }
            if n >= 2 {
                let swap: Vec<usize> = (0..n).rev().collect();
                let lhs = map.on_elem(&src.perm(&p, &swap)?)?;
                let rhs = tgt.perm(&map.on_elem(&p)?, &swap)?;
                if lhs != rhs {
                    return Err(Error::TypeMismatch(format!("Sn action not preserved at {p}")));
                }
            }
        }
    }
    Ok(())
}

/// Enumerate every bio map between two finite table-backed bios within the
/// arity bound, brute force with homomorphism filtering.
pub fn all_maps(source: &BioHandle, target: &BioHandle, bound: usize) -> Result<Vec<BioMap>> {
    let src_objs = source.objects();
    let tgt_objs = target.objects();
    let mut out: Vec<BioMap> = Vec::new();
    // object assignments
    let obj_choices = assignments(&src_objs, &tgt_objs);
    for objs in obj_choices {
        // element assignments per hom-set, respecting types
        let mut hom_list: Vec<(Elem, Vec<Elem>)> = Vec::new();
        let mut feasible = true;
        for side in [Sign::Minus, Sign::Plus] {
            for n in 0..=bound {
                for h in &src_objs {
                    for w in object_words(&src_objs, n) {
                        let ty = match side {
                            Sign::Minus => HomType::minus(h.clone(), w.clone()),
                            Sign::Plus => HomType::plus(w.clone(), h.clone()),
                        };
                        if side == Sign::Plus && ty.side == Sign::Minus {
                            continue; // unary normalized, already listed
                        }
                        let srcs = match source.hom(&ty) {
                            HomSet::Table(v) => v,
                            HomSet::Predicate => {
                                return Err(Error::NotEnumerable(
                                    "map enumeration needs table-backed homs".into(),
                                ))
                            }
                        };
                        let t_head = objs[&ty.head].clone();
                        let t_word: Vec<Value> =
                            ty.word.iter().map(|o| objs[o].clone()).collect();
                        let tty = match side {
                            Sign::Minus => HomType::minus(t_head, t_word),
                            Sign::Plus => HomType::plus(t_word, t_head),
                        };
                        let tgts = match target.hom(&tty) {
                            HomSet::Table(v) => v,
                            HomSet::Predicate => {
                                return Err(Error::NotEnumerable(
                                    "map enumeration needs table-backed homs".into(),
                                ))
                            }
                        };
                        if !srcs.is_empty() && tgts.is_empty() {
                            feasible = false;
                        }
                        for s in srcs {
                            hom_list.push((
                                Elem::new(ty.clone(), s),
                                tgts.iter().map(|t| Elem::new(tty.clone(), t.clone())).collect(),
                            ));
                        }
                    }
                }
            }
        }
        if !feasible {
            continue;
        }
        // backtrack over element images with early homomorphism pruning via
        // final validation (sources here are tiny)
        let mut assignment: BTreeMap<Elem, Elem> = BTreeMap::new();
        enumerate_elem_maps(
            source,
            target,
            &objs,
            &hom_list,
            0,
            &mut assignment,
            bound,
            &mut out,
        );
    }
    Ok(out)
}

fn assignments(src: &[Value], tgt: &[Value]) -> Vec<BTreeMap<Value, Value>> {
    if src.is_empty() {
        return vec![BTreeMap::new()];
    }
    let mut outs = Vec::new();
    for rest in assignments(&src[1..], tgt) {
        for t in tgt {
            let mut m = rest.clone();
            m.insert(src[0].clone(), t.clone());
            outs.push(m);
        }
    }
    outs
}

#[allow(clippy::too_many_arguments)]
fn enumerate_elem_maps(
    source: &BioHandle,
    target: &BioHandle,
    objs: &BTreeMap<Value, Value>,
    hom_list: &[(Elem, Vec<Elem>)],
    idx: usize,
    assignment: &mut BTreeMap<Elem, Elem>,
    bound: usize,
    out: &mut Vec<BioMap>,
) {
    if idx == hom_list.len() {
        let map = TableMap {
            source: source.clone(),
            target: target.clone(),
            objects: objs.clone(),
            elems: assignment.clone(),
        };
        if validate_map(&map, bound).is_ok() {
            out.push(Arc::new(map));
        }
        return;
    }
    let (src_elem, choices) = &hom_list[idx];
    for choice in choices {
        assignment.insert(src_elem.clone(), choice.clone());
        // cheap prune: units must map to units
        let ok = {
            let u = source.unit(&src_elem.ty.head);
            if *src_elem == u {
                *choice == target.unit(&objs[&src_elem.ty.head])
            } else {
                true
            }
        };
        if ok {
            enumerate_elem_maps(source, target, objs, hom_list, idx + 1, assignment, bound, out);
        }
    }
    assignment.remove(src_elem);
}
