//! The bio attached to a bit: objects its edges, hom-sets the grafting
//! stages over it, operations by gluing stages.

use crate::bio::elem::{Elem, HomType, Value};
use crate::bio::handle::{BioImpl, HomSet};
use crate::bit::{one_sub_bits, Bit, Derivation, EdgeId, Sign, Stage, SubBits};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

pub struct SgBio {
    pub host: Bit,
    pub subs: SubBits,
    /// hom tables: the induced sub-bits with boundary orders
    index: HashMap<HomType, Vec<Value>>,
    /// the full stage closure by type: what bit-map images range over
    stage_index: HashMap<HomType, Vec<Value>>,
}

pub fn edge_obj(e: EdgeId) -> Value {
    Value::Int(e as i64)
}

fn obj_edge(v: &Value) -> EdgeId {
    match v {
        Value::Int(e) => *e as EdgeId,
        _ => panic!("objects of an S_G bio are edges"),
    }
}

/// Stage encoding: the label set followed by the abstract vertex
/// descriptors, everything sorted.
pub fn stage_value(stage: &Stage) -> Value {
    let labels = Value::Seq(stage.labels.iter().map(|&e| edge_obj(e)).collect());
    let verts = Value::Seq(
        stage
            .vertices
            .iter()
            .map(|(hv, l, r)| {
                Value::Seq(vec![
                    Value::Int(*hv as i64),
                    Value::Seq(l.iter().map(|&e| edge_obj(e)).collect()),
                    Value::Seq(r.iter().map(|&e| edge_obj(e)).collect()),
                ])
            })
            .collect(),
    );
    Value::Seq(vec![labels, verts])
}

pub fn value_stage(v: &Value) -> Stage {
    let parts = v.as_seq().expect("stage value");
    let labels: BTreeSet<EdgeId> = parts[0].as_seq().unwrap().iter().map(obj_edge).collect();
    let vertices = parts[1]
        .as_seq()
        .unwrap()
        .iter()
        .map(|d| {
            let d = d.as_seq().unwrap();
            let hv = match d[0] {
                Value::Int(x) => x as usize,
                _ => unreachable!(),
            };
            let l: BTreeSet<EdgeId> = d[1].as_seq().unwrap().iter().map(obj_edge).collect();
            let r: BTreeSet<EdgeId> = d[2].as_seq().unwrap().iter().map(obj_edge).collect();
            (hv, l, r)
        })
        .collect();
    Stage { vertices, labels }
}

/// A stage with boundary orders: the elements of S_G hom-sets and the
/// vertex images of bit maps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SgElem {
    pub stage: Stage,
    pub left_order: Vec<EdgeId>,
    pub right_order: Vec<EdgeId>,
}

impl SgElem {
    /// The induced stage on an edge subset with the given orders.
    pub fn induced(
        host: &Bit,
        edges: &BTreeSet<EdgeId>,
        left_order: Vec<EdgeId>,
        right_order: Vec<EdgeId>,
    ) -> Option<SgElem> {
        Stage::induced(host, edges).map(|stage| SgElem { stage, left_order, right_order })
    }

    /// A one-descriptor stage: the corolla image of a map vertex.
    pub fn corolla(
        host_vertex: usize,
        left_order: Vec<EdgeId>,
        right_order: Vec<EdgeId>,
    ) -> SgElem {
        let l: BTreeSet<EdgeId> = left_order.iter().copied().collect();
        let r: BTreeSet<EdgeId> = right_order.iter().copied().collect();
        let labels: BTreeSet<EdgeId> = l.union(&r).copied().collect();
        SgElem {
            stage: Stage { vertices: vec![(host_vertex, l, r)], labels },
            left_order,
            right_order,
        }
    }

    pub fn single(e: EdgeId) -> SgElem {
        SgElem { stage: Stage::single(e), left_order: vec![e], right_order: vec![e] }
    }
}

fn permutations(items: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

impl SgBio {
    pub fn new(host: Bit) -> SgBio {
        let subs = one_sub_bits(&host);
        let mut index: HashMap<HomType, Vec<Value>> = HashMap::new();
        let mut stage_index: HashMap<HomType, Vec<Value>> = HashMap::new();
        {
            let mut add_side =
                |stages: &BTreeMap<Stage, Derivation>, side: Sign, host: &Bit| {
                    for stage in stages.keys() {
                        let left: Vec<EdgeId> = stage.boundary(Sign::Plus).into_iter().collect();
                        let right: Vec<EdgeId> =
                            stage.boundary(Sign::Minus).into_iter().collect();
                        let (single, word): (&[EdgeId], &[EdgeId]) = match side {
                            Sign::Minus => (&left, &right),
                            Sign::Plus => (&right, &left),
                        };
                        if single.len() != 1 {
                            continue;
                        }
                        let induced = stage.is_induced(host);
                        for perm in permutations(word) {
                            let ty = match side {
                                Sign::Minus => HomType::minus(
                                    edge_obj(single[0]),
                                    perm.iter().map(|&e| edge_obj(e)).collect(),
                                ),
                                Sign::Plus => HomType::plus(
                                    perm.iter().map(|&e| edge_obj(e)).collect(),
                                    edge_obj(single[0]),
                                ),
                            };
                            if side == Sign::Plus && ty.side == Sign::Minus {
                                continue; // unary, already listed from the minus side
                            }
                            stage_index.entry(ty.clone()).or_default().push(stage_value(stage));
                            if induced {
                                index.entry(ty).or_default().push(stage_value(stage));
                            }
                        }
                    }
                };
            add_side(&subs.minus_stages, Sign::Minus, &host);
            add_side(&subs.plus_stages, Sign::Plus, &host);
        }
        for v in index.values_mut() {
            v.sort();
            v.dedup();
        }
        for v in stage_index.values_mut() {
            v.sort();
            v.dedup();
        }
        SgBio { host, subs, index, stage_index }
    }

    /// Candidate images for bit maps: the full stage closure at this type,
    /// a superset of the tabled induced sub-bits on hosts with parallel
    /// interfaces.
    pub fn site_candidates(&self, ty: &HomType) -> Vec<Value> {
        self.stage_index.get(ty).cloned().unwrap_or_default()
    }

    pub fn handle(host: Bit) -> Arc<SgBio> {
        Arc::new(SgBio::new(host))
    }

    /// The stage with orders behind an element.
    pub fn sg_elem_of(&self, e: &Elem) -> SgElem {
        let stage = value_stage(&e.val);
        match e.ty.side {
            Sign::Minus => SgElem {
                stage,
                left_order: vec![obj_edge(&e.ty.head)],
                right_order: e.ty.word.iter().map(obj_edge).collect(),
            },
            Sign::Plus => SgElem {
                stage,
                left_order: e.ty.word.iter().map(obj_edge).collect(),
                right_order: vec![obj_edge(&e.ty.head)],
            },
        }
    }

    /// The element for a stage with orders, on the given side.
    pub fn elem_of(&self, s: &SgElem, side: Sign) -> Elem {
        let ty = match side {
            Sign::Minus => HomType::minus(
                edge_obj(s.left_order[0]),
                s.right_order.iter().map(|&e| edge_obj(e)).collect(),
            ),
            Sign::Plus => HomType::plus(
                s.left_order.iter().map(|&e| edge_obj(e)).collect(),
                edge_obj(s.right_order[0]),
            ),
        };
        Elem::new(ty, stage_value(&s.stage))
    }

    /// Glue stages along interface labels; labels must stay distinct away
    /// from the interfaces, and the result must carry the claimed boundary.
    fn glue(
        &self,
        base: &Stage,
        parts: &[(&Stage, BTreeSet<EdgeId>)],
        ty: HomType,
    ) -> Result<Elem> {
        let mut vertices = base.vertices.clone();
        let mut labels = base.labels.clone();
        for (part, interface) in parts {
            let overlap: BTreeSet<EdgeId> = labels.intersection(&part.labels).copied().collect();
            if overlap != *interface {
                return Err(Error::TypeMismatch(format!(
                    "stage glue overlaps on {overlap:?}, expected the interface {interface:?}"
                )));
            }
            vertices.extend(part.vertices.iter().cloned());
            labels.extend(part.labels.iter().copied());
        }
        let stage = Stage { vertices, labels }.normalized();
        let (want_left, want_right): (BTreeSet<EdgeId>, BTreeSet<EdgeId>) = match ty.side {
            Sign::Minus => (
                std::iter::once(obj_edge(&ty.head)).collect(),
                ty.word.iter().map(obj_edge).collect(),
            ),
            Sign::Plus => (
                ty.word.iter().map(obj_edge).collect(),
                std::iter::once(obj_edge(&ty.head)).collect(),
            ),
        };
        if stage.boundary(Sign::Plus) != want_left || stage.boundary(Sign::Minus) != want_right {
            return Err(Error::TypeMismatch(format!(
                "glued stage boundary does not match {ty}"
            )));
        }
        Ok(Elem::new(ty, stage_value(&stage)))
    }

    pub fn contains_stage(&self, stage: &Stage, side: Sign) -> bool {
        match side {
            Sign::Minus => self.subs.minus_stages.contains_key(stage),
            Sign::Plus => self.subs.plus_stages.contains_key(stage),
        }
    }

    pub fn derivation_of(&self, stage: &Stage, side: Sign) -> Result<&Derivation> {
        let table = match side {
            Sign::Minus => &self.subs.minus_stages,
            Sign::Plus => &self.subs.plus_stages,
        };
        table
            .get(stage)
            .ok_or_else(|| Error::Unknown(format!("stage {stage:?} not in the {side:?} closure")))
    }
}

impl BioImpl for SgBio {
    fn name(&self) -> String {
        format!("S_G({} edges)", self.host.n_edges())
    }

    fn objects(&self) -> Vec<Value> {
        (0..self.host.n_edges()).map(edge_obj).collect()
    }

    fn hom(&self, ty: &HomType) -> HomSet {
        HomSet::Table(self.index.get(ty).cloned().unwrap_or_default())
    }

    fn contains(&self, e: &Elem) -> bool {
        matches!(self.hom(&e.ty), HomSet::Table(v) if v.contains(&e.val))
    }

    fn unit(&self, obj: &Value) -> Elem {
        let e = obj_edge(obj);
        Elem::new(
            HomType::minus(obj.clone(), vec![obj.clone()]),
            stage_value(&Stage::single(e)),
        )
    }

    fn compose(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        if parts.len() != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: parts.len() });
        }
        let parts: Vec<Elem> =
            parts.iter().map(|q| crate::bio::handle::ops::as_side(q, p.ty.side)).collect();
        let base = value_stage(&p.val);
        let stages: Vec<Stage> = parts.iter().map(|q| value_stage(&q.val)).collect();
        let mut glued = Vec::new();
        let mut word = Vec::new();
        for ((i, q), stage) in parts.iter().enumerate().zip(&stages) {
            if q.ty.head != p.ty.word[i] {
                return Err(Error::TypeMismatch(format!(
                    "slot {i} of {p} expects {} but the part has head {}",
                    p.ty.word[i], q.ty.head
                )));
            }
            glued.push((stage, BTreeSet::from([obj_edge(&q.ty.head)])));
            word.extend(q.ty.word.clone());
        }
        let ty = match p.ty.side {
            Sign::Minus => HomType::minus(p.ty.head.clone(), word),
            Sign::Plus => HomType::plus(word, p.ty.head.clone()),
        };
        self.glue(&base, &glued, ty)
    }

    fn act(&self, p: &Elem, parts: &[Elem]) -> Result<Elem> {
        let total: usize = parts.iter().map(|q| q.arity()).sum();
        if total != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: total });
        }
        let parts: Vec<Elem> = parts
            .iter()
            .map(|q| crate::bio::handle::ops::as_side(q, p.ty.side.flip()))
            .collect();
        let base = value_stage(&p.val);
        let stages: Vec<Stage> = parts.iter().map(|q| value_stage(&q.val)).collect();
        let mut glued = Vec::new();
        let mut word = Vec::new();
        let mut off = 0;
        for (q, stage) in parts.iter().zip(&stages) {
            if q.ty.word != p.ty.word[off..off + q.arity()] {
                return Err(Error::TypeMismatch(format!(
                    "action block at {off} of {p} does not match {q}"
                )));
            }
            glued.push((stage, q.ty.word.iter().map(obj_edge).collect()));
            word.push(q.ty.head.clone());
            off += q.arity();
        }
        let ty = match p.ty.side {
            Sign::Minus => HomType::minus(p.ty.head.clone(), word),
            Sign::Plus => HomType::plus(word, p.ty.head.clone()),
        };
        self.glue(&base, &glued, ty)
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
        Ok(Elem::new(ty, p.val.clone()))
    }

    /// Restriction of a stage to a subset of its boundary slots: drop the
    /// discarded labels and prune dead branches.
    fn substitute_zero(&self, p: &Elem, keep: &[bool]) -> Result<Elem> {
        if keep.len() != p.arity() {
            return Err(Error::ArityMismatch { expected: p.arity(), got: keep.len() });
        }
        let sg = self.sg_elem_of(p);
        let grow_order: &[EdgeId] = match p.ty.side {
            Sign::Minus => &sg.right_order,
            Sign::Plus => &sg.left_order,
        };
        let mut stage = sg.stage.clone();
        let mut to_drop: Vec<EdgeId> = grow_order
            .iter()
            .zip(keep)
            .filter(|(_, &k)| !k)
            .map(|(&e, _)| e)
            .collect();
        while let Some(c) = to_drop.pop() {
            if !stage.labels.remove(&c) {
                continue;
            }
            // the covering abstract vertex loses c; a vertex emptied on its
            // growth side dies with its remaining branch
            let covering = match p.ty.side {
                Sign::Minus => stage.vertices.iter().position(|(_, _, r)| r.contains(&c)),
                Sign::Plus => stage.vertices.iter().position(|(_, l, _)| l.contains(&c)),
            };
            if let Some(vi) = covering {
                match p.ty.side {
                    Sign::Minus => {
                        stage.vertices[vi].2.remove(&c);
                        if stage.vertices[vi].2.is_empty() {
                            let dead = stage.vertices.remove(vi);
                            to_drop.extend(dead.1.iter().copied());
                        }
                    }
                    Sign::Plus => {
                        stage.vertices[vi].1.remove(&c);
                        if stage.vertices[vi].1.is_empty() {
                            let dead = stage.vertices.remove(vi);
                            to_drop.extend(dead.2.iter().copied());
                        }
                    }
                }
            }
        }
        if stage.labels.is_empty() {
            return Err(Error::TypeMismatch(
                "restriction emptied the stage; the attached bio is not closed".into(),
            ));
        }
        let kept_word: Vec<Value> = p
            .ty
            .word
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        let ty = match p.ty.side {
            Sign::Minus => HomType::minus(p.ty.head.clone(), kept_word),
            Sign::Plus => HomType::plus(kept_word, p.ty.head.clone()),
        };
        self.glue(&stage.normalized(), &[], ty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bio::audit::audit_bio_axioms;
    use crate::bio::handle::ops;
    use crate::bit::{corolla_bit, enumerate_bits, Graph};

    #[test]
    fn unit_bit_bio_has_one_object_and_identity() {
        let s = SgBio::new(Bit::unit());
        assert_eq!(s.objects().len(), 1);
        let ty = HomType::minus(edge_obj(0), vec![edge_obj(0)]);
        assert_eq!(s.hom(&ty).table().unwrap().len(), 1);
        let report = audit_bio_axioms(&s, 3, 16, 21);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn corolla_hom_has_a_free_two_orbit() {
        let c = corolla_bit(Sign::Minus, 2).bit().clone();
        let s = SgBio::new(c);
        let ty = HomType::minus(edge_obj(0), vec![edge_obj(1), edge_obj(2)]);
        assert_eq!(s.hom(&ty).table().unwrap().len(), 1);
        let swapped = HomType::minus(edge_obj(0), vec![edge_obj(2), edge_obj(1)]);
        assert_eq!(s.hom(&swapped).table().unwrap().len(), 1);
        let e = Elem::new(ty.clone(), s.hom(&ty).table().unwrap()[0].clone());
        let moved = s.perm(&e, &[1, 0]).unwrap();
        assert_eq!(moved.ty, swapped);
    }

    #[test]
    fn chain_composition_gives_the_five_edge_stage() {
        let g = Graph::new(6, &[(2, 0), (0, 1), (0, 3), (1, 4), (1, 5)]);
        let b = Bit::validate(g).unwrap();
        let s = SgBio::new(b);
        let outer = s.elem_of(&SgElem::corolla(0, vec![0], vec![1, 2]), Sign::Minus);
        let inner = s.elem_of(&SgElem::corolla(1, vec![1], vec![3, 4]), Sign::Minus);
        let got = ops::compose_at(&s, &outer, 0, &inner).unwrap();
        let stage = value_stage(&got.val);
        assert_eq!(stage.labels, BTreeSet::from([0, 1, 2, 3, 4]));
        assert_eq!(
            got.ty,
            HomType::minus(edge_obj(0), vec![edge_obj(3), edge_obj(4), edge_obj(2)])
        );
        assert!(s.contains(&got));
    }

    #[test]
    fn diamond_corolla_hom_is_inhabited_by_the_stage() {
        // the parallel-pair diamond: the corolla hom-set holds the abstract
        // corolla stage even though no induced subgraph realizes it
        let g = Graph::new(4, &[(2, 0), (0, 1), (0, 1), (1, 3)]);
        let b = Bit::validate(g).unwrap();
        let s = SgBio::new(b);
        let ty = HomType::minus(edge_obj(0), vec![edge_obj(1), edge_obj(2)]);
        assert_eq!(s.hom(&ty).table().unwrap().len(), 1);
        let stage = value_stage(&s.hom(&ty).table().unwrap()[0]);
        assert!(!stage.is_induced(&s.host));
    }

    #[test]
    fn small_hosts_pass_the_axiom_audit() {
        let mut hosts = enumerate_bits(3, true).unwrap();
        hosts.push(Bit::validate(Graph::new(4, &[(2, 0), (0, 1), (0, 1), (1, 3)])).unwrap());
        for host in hosts {
            let s = SgBio::new(host);
            let report = audit_bio_axioms(&s, 3, 8, 22);
            assert!(report.all_pass(), "{}: {report:?}", s.name());
        }
    }

    #[test]
    fn restriction_drops_a_leaf_branch() {
        let c = corolla_bit(Sign::Minus, 2).bit().clone();
        let s = SgBio::new(c);
        let full = s.elem_of(&SgElem::corolla(1, vec![0], vec![1, 2]), Sign::Minus);
        let cut = s.substitute_zero(&full, &[true, false]).unwrap();
        let stage = value_stage(&cut.val);
        assert_eq!(stage.labels, BTreeSet::from([0, 1]));
    }
}
