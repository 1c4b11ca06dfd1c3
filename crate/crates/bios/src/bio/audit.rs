//! The bio axiom auditor: associativity, units, symmetric variance, the
//! action laws and the four linearity identities, checked exhaustively on
//! small tables or by seeded sampling on predicate backends.

use super::elem::{all_permutations, perm_compose, Elem, HomType, Value};
use super::handle::{compositions, object_words, ops, BioImpl, HomSet};
use crate::bit::Sign;
use crate::error::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: String,
    pub pass: bool,
    pub cases: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub bio: String,
    pub arity_bound: usize,
    pub laws: Vec<LawResult>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.pass)
    }
}

/// Element pools per hom-set, drawn from tables or samples. Interior
/// mutability keeps the nested tuple loops simple.
struct Pool<'a> {
    b: &'a dyn BioImpl,
    rng: std::cell::RefCell<ChaCha8Rng>,
    samples: usize,
    per_hom: usize,
    cache: std::cell::RefCell<HashMap<HomType, Vec<Elem>>>,
}

impl<'a> Pool<'a> {
    fn new(b: &'a dyn BioImpl, seed: u64, samples: usize, per_hom: usize) -> Pool<'a> {
        Pool {
            b,
            rng: std::cell::RefCell::new(ChaCha8Rng::seed_from_u64(seed)),
            samples,
            per_hom,
            cache: std::cell::RefCell::new(HashMap::new()),
        }
    }

    fn of(&self, ty: &HomType) -> Vec<Elem> {
        if let Some(v) = self.cache.borrow().get(ty) {
            return v.clone();
        }
        let mut elems = match self.b.hom(ty) {
            HomSet::Table(vals) => vals.into_iter().map(|v| Elem::new(ty.clone(), v)).collect(),
            HomSet::Predicate => {
                ops::elements_of(self.b, ty, &mut self.rng.borrow_mut(), self.samples)
            }
        };
        if elems.len() > self.per_hom {
            // deterministic thinning
            let step = elems.len() / self.per_hom + 1;
            elems = elems.into_iter().step_by(step).collect();
        }
        self.cache.borrow_mut().insert(ty.clone(), elems.clone());
        elems
    }

    /// All elements of the given side and arity over every object word.
    fn all(&self, side: Sign, arity: usize) -> Vec<Elem> {
        let objects = self.b.objects();
        let mut out = Vec::new();
        for head in &objects {
            for word in object_words(&objects, arity) {
                let ty = match side {
                    Sign::Minus => HomType::minus(head.clone(), word),
                    Sign::Plus => HomType::plus(word, head.clone()),
                };
                out.extend(self.of(&ty));
            }
        }
        out
    }

    /// Elements matching an exact type.
    fn minus(&self, head: &Value, word: &[Value]) -> Vec<Elem> {
        self.of(&HomType::minus(head.clone(), word.to_vec()))
    }

    fn plus(&self, word: &[Value], head: &Value) -> Vec<Elem> {
        self.of(&HomType::plus(word.to_vec(), head.clone()))
    }
}

/// Iterate tuples over the given pools: full product when small, seeded
/// samples otherwise.
fn tuples(pools: &[Vec<Elem>], cap: usize, rng: &mut ChaCha8Rng, mut f: impl FnMut(&[Elem])) {
    if pools.iter().any(|p| p.is_empty()) {
        return;
    }
    let size: usize = pools.iter().map(|p| p.len()).product::<usize>();
    if size <= cap {
        let mut idx = vec![0usize; pools.len()];
        loop {
            let tuple: Vec<Elem> = idx.iter().zip(pools).map(|(&i, p)| p[i].clone()).collect();
            f(&tuple);
            let mut k = pools.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < pools[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    } else {
        for _ in 0..cap {
            let tuple: Vec<Elem> =
                pools.iter().map(|p| p[rng.gen_range(0..p.len())].clone()).collect();
            f(&tuple);
        }
    }
}

struct LawRun {
    name: String,
    cases: usize,
    witness: Option<String>,
}

impl LawRun {
    fn new(name: &str) -> LawRun {
        LawRun { name: name.into(), cases: 0, witness: None }
    }

    fn check(&mut self, lhs: Result<Elem>, rhs: Result<Elem>, ctx: impl Fn() -> String) {
        if self.witness.is_some() {
            return;
        }
        self.cases += 1;
        let ok = match (&lhs, &rhs) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        if !ok {
            self.witness = Some(format!(
                "{}: lhs={:?} rhs={:?}",
                ctx(),
                lhs.map(|e| e.to_string()),
                rhs.map(|e| e.to_string())
            ));
        }
    }

    fn result(self) -> LawResult {
        LawResult { law: self.name, pass: self.witness.is_none(), cases: self.cases, witness: self.witness }
    }
}

const TUPLE_CAP: usize = 4000;

/// Audit the bio axioms up to the arity bound. `sample_bound` controls how
/// many elements are drawn per predicate-backed hom-set.
pub fn audit_bio_axioms(b: &dyn BioImpl, bound: usize, sample_bound: usize, seed: u64) -> AuditReport {
    let pool = Pool::new(b, seed, sample_bound, 64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut laws = Vec::new();

    laws.push(assoc_compose(b, &pool, &mut rng, bound, Sign::Minus).result());
    laws.push(assoc_compose(b, &pool, &mut rng, bound, Sign::Plus).result());
    laws.push(units_compose(b, &pool, bound).result());
    laws.push(sn_group_law(b, &pool, bound).result());
    laws.push(sn_compose_equivariance(b, &pool, &mut rng, bound).result());
    laws.push(assoc_action(b, &pool, &mut rng, bound, Sign::Minus).result());
    laws.push(assoc_action(b, &pool, &mut rng, bound, Sign::Plus).result());
    laws.push(units_action(b, &pool, bound).result());
    laws.push(linearity_29a(b, &pool, &mut rng, bound).result());
    laws.push(linearity_29b(b, &pool, &mut rng, bound).result());
    laws.push(linearity_210a(b, &pool, &mut rng, bound).result());
    laws.push(linearity_210b(b, &pool, &mut rng, bound).result());

    AuditReport { bio: b.name(), arity_bound: bound, laws }
}

/// P∘(P_i∘(P_ij)) = (P∘(P_i))∘(P_ij), on both sides.
fn assoc_compose(
    b: &dyn BioImpl,
    pool: &Pool,
    rng: &mut ChaCha8Rng,
    bound: usize,
    side: Sign,
) -> LawRun {
    let tag = if side == Sign::Minus { "minus" } else { "plus" };
    let mut run = LawRun::new(&format!("associativity of composition ({tag})"));
    for n in 1..=bound {
        for outer in pool.all(side, n) {
            let outer = ops::as_side(&outer, side);
            for mids in word_splits(&outer, n, bound) {
                // mids: arities of the middle layer
                let mid_pools: Vec<Vec<Elem>> = part_pools(b, pool, &outer, &mids, side);
                let mid_pools_flat = mid_pools;
                tuples(&mid_pools_flat, 40, rng, |mid_elems| {
                    let total: usize = mid_elems.iter().map(|e| e.arity()).sum();
                    if total > bound {
                        return;
                    }
                    // inner layer: unary-or-less splits kept tiny: each middle
                    // slot gets one inner element of arity <= 1
                    let inner_pools: Vec<Vec<Elem>> = mid_elems
                        .iter()
                        .map(|m| ops::as_side(m, side))
                        .collect::<Vec<_>>()
                        .iter()
                        .flat_map(|m| {
                            m.ty.word.clone().into_iter().map(|obj| match side {
                                // a part at slot obj has head obj on the
                                // side it plays, over any short word
                                Sign::Minus => {
                                    let mut v = pool.minus(&obj, &[]);
                                    for w in b.objects() {
                                        v.extend(pool.minus(&obj, &[w.clone()]));
                                    }
                                    v.sort();
                                    v.dedup();
                                    v
                                }
                                Sign::Plus => {
                                    let mut v = pool.plus(&[], &obj);
                                    for w in b.objects() {
                                        v.extend(pool.plus(&[w.clone()], &obj));
                                    }
                                    v.sort();
                                    v.dedup();
                                    v
                                }
                            })
                        })
                        .collect();
                    let mut inner_rng = ChaCha8Rng::seed_from_u64(run.cases as u64);
                    tuples(&inner_pools, 6, &mut inner_rng, |inner| {
                        // group inner per middle element
                        let mut grouped: Vec<Vec<Elem>> = Vec::new();
                        let mut k = 0;
                        for m in mid_elems {
                            grouped.push(inner[k..k + m.arity()].to_vec());
                            k += m.arity();
                        }
                        // slot heads must match the middle words
                        let typed_ok = mid_elems.iter().zip(&grouped).all(|(m, g)| {
                            let mv = ops::as_side(m, side);
                            g.iter().zip(&mv.ty.word).all(|(q, obj)| {
                                ops::as_side(q, side).ty.head == *obj
                            })
                        });
                        if !typed_ok {
                            return;
                        }
                        let lhs = (|| {
                            let composed_mids: Result<Vec<Elem>> = mid_elems
                                .iter()
                                .zip(&grouped)
                                .map(|(m, g)| b.compose(&ops::as_side(m, side), g))
                                .collect();
                            b.compose(&ops::as_side(&outer, side), &composed_mids?)
                        })();
                        let rhs = (|| {
                            let first = b.compose(&ops::as_side(&outer, side), mid_elems)?;
                            b.compose(&ops::as_side(&first, side), inner)
                        })();
                        run.check(lhs, rhs, || format!("outer={outer}"));
                    });
                });
            }
        }
    }
    run
}

/// arity profiles for the middle layer, keeping the total small
fn word_splits(outer: &Elem, n: usize, bound: usize) -> Vec<Vec<usize>> {
    let _ = outer;
    let mut out = Vec::new();
    for total in n.saturating_sub(1)..=bound {
        out.extend(compositions(total, n));
    }
    out.truncate(12);
    out
}

/// pools for a family of parts under `outer` with the given arities
fn part_pools(
    b: &dyn BioImpl,
    pool: &Pool,
    outer: &Elem,
    arities: &[usize],
    side: Sign,
) -> Vec<Vec<Elem>> {
    let objects = b.objects();
    let outer = ops::as_side(outer, side);
    outer
        .ty
        .word
        .clone()
        .iter()
        .zip(arities)
        .map(|(obj, &m)| {
            let mut v = Vec::new();
            for word in object_words(&objects, m) {
                match side {
                    Sign::Minus => v.extend(pool.minus(obj, &word)),
                    Sign::Plus => v.extend(pool.plus(&word, obj)),
                }
            }
            v
        })
        .collect()
}

/// dual pools: plus parts under a minus outer and vice versa
fn dual_part_pools(
    b: &dyn BioImpl,
    pool: &Pool,
    word: &[Value],
    blocks: &[usize],
) -> Vec<Vec<Elem>> {
    // partition `word` into consecutive blocks; parts[i] has the block as
    // its word and any object as head
    let objects = b.objects();
    let mut out = Vec::new();
    let mut off = 0;
    for &m in blocks {
        let sub = &word[off..off + m];
        let mut v = Vec::new();
        for head in &objects {
            v.extend(pool.plus(sub, head));
        }
        out.push(v);
        off += m;
    }
    out
}

fn units_compose(b: &dyn BioImpl, pool: &Pool, bound: usize) -> LawRun {
    let mut run = LawRun::new("unitality of composition");
    for n in 1..=bound {
        for side in [Sign::Minus, Sign::Plus] {
            for p in pool.all(side, n) {
                let pv = ops::as_side(&p, side);
                // the unit as the outer element of a one-part composition
                let outer_unit = ops::as_side(&b.unit(&pv.ty.head), side);
                let lhs = b.compose(&outer_unit, &[p.clone()]);
                run.check(lhs, Ok(p.clone()), || format!("1∘{p}"));
                // units at every slot
                let parts: Vec<Elem> = pv.ty.word.iter().map(|o| b.unit(o)).collect();
                let rhs = b.compose(&pv, &parts);
                run.check(rhs, Ok(p.clone()), || format!("{p}∘(1s)"));
            }
        }
    }
    run
}

fn sn_group_law(b: &dyn BioImpl, pool: &Pool, bound: usize) -> LawRun {
    let mut run = LawRun::new("symmetric group action");
    for n in 1..=bound.min(3) {
        let perms = all_permutations(n);
        for side in [Sign::Minus, Sign::Plus] {
            for p in pool.all(side, n) {
                for s in &perms {
                    for t in &perms {
                        let lhs = b.perm(&b.perm(&p, s).unwrap(), t);
                        let st = match side {
                            // right action: (Pσ)τ = P(στ)
                            Sign::Minus => perm_compose(s, t),
                            // left action: σ(τP) = (στ)P applied as nested
                            Sign::Plus => perm_compose(t, s),
                        };
                        let rhs = b.perm(&p, &st);
                        run.check(lhs, rhs, || format!("{p} by {s:?} then {t:?}"));
                    }
                }
            }
        }
    }
    run
}

/// (Pσ)∘(Q_{σ(i)}) = (P∘(Q_i))·σ̃ with σ̃ the block permutation.
fn sn_compose_equivariance(
    b: &dyn BioImpl,
    pool: &Pool,
    rng: &mut ChaCha8Rng,
    bound: usize,
) -> LawRun {
    let mut run = LawRun::new("compose equivariance");
    for n in 2..=bound.min(3) {
        let perms = all_permutations(n);
        for p in pool.all(Sign::Minus, n) {
            for blocks in compositions(bound.min(n + 1), n).into_iter().take(4) {
                let parts_pools = part_pools(b, pool, &p, &blocks, Sign::Minus);
                tuples(&parts_pools, 12, rng, |parts| {
                    for s in &perms {
                        let lhs = (|| {
                            let ps = b.perm(&p, s)?;
                            let perm_parts: Vec<Elem> =
                                s.iter().map(|&i| parts[i].clone()).collect();
                            b.compose(&ps, &perm_parts)
                        })();
                        let rhs = (|| {
                            let comp = b.compose(&p, parts)?;
                            // block permutation: new block k is old block s[k]
                            let sizes: Vec<usize> = parts.iter().map(|q| q.arity()).collect();
                            let mut offsets = vec![0usize; sizes.len()];
                            let mut acc = 0;
                            for (i, &sz) in sizes.iter().enumerate() {
                                offsets[i] = acc;
                                acc += sz;
                            }
                            let mut sigma = Vec::with_capacity(acc);
                            for &i in s {
                                sigma.extend(offsets[i]..offsets[i] + sizes[i]);
                            }
                            b.perm(&comp, &sigma)
                        })();
                        run.check(lhs, rhs, || format!("{p} with σ={s:?}"));
                    }
                });
            }
        }
    }
    run
}

/// (P ⟵∘ (P_ij)) ⟵∘ (P_j) = P ⟵∘ ((P_ij)∘P_j), and the mirrored law.
fn assoc_action(
    b: &dyn BioImpl,
    pool: &Pool,
    rng: &mut ChaCha8Rng,
    bound: usize,
    side: Sign,
) -> LawRun {
    let tag = if side == Sign::Minus { "⟵∘" } else { "⟶∘" };
    let mut run = LawRun::new(&format!("associativity of the action ({tag})"));
    for total in 1..=bound {
        for p in pool.all(side, total) {
            let p = ops::as_side(&p, side);
            // split p's word into inner blocks, then group the blocks
            for inner_blocks in compositions(total, 2.min(total)).into_iter().chain(
                compositions(total, 1),
            ) {
                if inner_blocks.iter().any(|&k| k == 0) {
                    continue;
                }
                let inner_pools: Vec<Vec<Elem>> = match side {
                    Sign::Minus => dual_part_pools(b, pool, &p.ty.word, &inner_blocks),
                    Sign::Plus => {
                        // minus parts over consecutive blocks
                        let objects = b.objects();
                        let mut out = Vec::new();
                        let mut off = 0;
                        for &m in &inner_blocks {
                            let sub = p.ty.word[off..off + m].to_vec();
                            let mut v = Vec::new();
                            for head in &objects {
                                v.extend(pool.minus(head, &sub));
                            }
                            out.push(v);
                            off += m;
                        }
                        out
                    }
                };
                tuples(&inner_pools, 24, rng, |inner| {
                    // outer: a single block over all inner heads, read in the
                    // role the parts play
                    let heads: Vec<Value> = inner
                        .iter()
                        .map(|e| ops::as_side(e, side.flip()).ty.head.clone())
                        .collect();
                    let outer_pool: Vec<Elem> = {
                        let objects = b.objects();
                        let mut v = Vec::new();
                        for h in &objects {
                            match side {
                                Sign::Minus => v.extend(pool.plus(&heads, h)),
                                Sign::Plus => v.extend(pool.minus(h, &heads)),
                            }
                        }
                        v
                    };
                    let mut rng2 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 99);
                    tuples(&[outer_pool], 6, &mut rng2, |outers| {
                        let q = &outers[0];
                        let lhs = (|| {
                            let first = b.act(&ops::as_side(&p, side), inner)?;
                            b.act(&ops::as_side(&first, side), &[q.clone()])
                        })();
                        let rhs = (|| {
                            let composed = b.compose(&ops::as_side(q, side.flip()), inner)?;
                            b.act(&ops::as_side(&p, side), &[composed])
                        })();
                        run.check(lhs, rhs, || format!("{p} acted in stages"));
                    });
                });
            }
        }
    }
    run
}

fn units_action(b: &dyn BioImpl, pool: &Pool, bound: usize) -> LawRun {
    let mut run = LawRun::new("unitality of the actions");
    for n in 1..=bound {
        for side in [Sign::Minus, Sign::Plus] {
            for p in pool.all(side, n) {
                let pv = ops::as_side(&p, side);
                let parts: Vec<Elem> = pv.ty.word.iter().map(|o| b.unit(o)).collect();
                let lhs = b.act(&pv, &parts);
                run.check(lhs, Ok(p.clone()), || format!("{p} ⟵∘ units"));
            }
        }
    }
    run
}

/// (P∘(P_i)) ⟵∘ (P_ij) = P∘(P_i ⟵∘ (P_ij)), one co-operation per slot.
fn linearity_29a(b: &dyn BioImpl, pool: &Pool, rng: &mut ChaCha8Rng, bound: usize) -> LawRun {
    let mut run = LawRun::new("linearity (compose then act, minus)");
    for n in 1..=bound.min(2) {
        for p in pool.all(Sign::Minus, n) {
            for blocks in compositions(bound.min(2), n) {
                if blocks.iter().any(|&k| k == 0) {
                    continue;
                }
                let mids = part_pools(b, pool, &p, &blocks, Sign::Minus);
                tuples(&mids, 16, rng, |mid| {
                    // one plus element per middle element, over its full word
                    let co_pools: Vec<Vec<Elem>> = mid
                        .iter()
                        .map(|m| {
                            let mut v = Vec::new();
                            for h in b.objects() {
                                v.extend(pool.plus(&m.ty.word, &h));
                            }
                            v
                        })
                        .collect();
                    let mut rng2 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 7);
                    tuples(&co_pools, 6, &mut rng2, |cos| {
                        let lhs = (|| {
                            let comp = b.compose(&p, mid)?;
                            b.act(&comp, cos)
                        })();
                        let rhs = (|| {
                            let acted: Result<Vec<Elem>> = mid
                                .iter()
                                .zip(cos)
                                .map(|(m, c)| b.act(m, &[c.clone()]))
                                .collect();
                            b.compose(&p, &acted?)
                        })();
                        run.check(lhs, rhs, || format!("{p}"));
                    });
                });
            }
        }
    }
    run
}

/// (P_ij) ⟶∘ ((P_j)∘P) = ((P_ij) ⟶∘ P_j)∘P, one minus element per slot.
fn linearity_29b(b: &dyn BioImpl, pool: &Pool, rng: &mut ChaCha8Rng, bound: usize) -> LawRun {
    let mut run = LawRun::new("linearity (compose then act, plus)");
    for n in 1..=bound.min(2) {
        for p in pool.all(Sign::Plus, n) {
            let p = ops::as_side(&p, Sign::Plus);
            for blocks in compositions(bound.min(2), n) {
                if blocks.iter().any(|&k| k == 0) {
                    continue;
                }
                // plus parts composed into p
                let mids: Vec<Vec<Elem>> = {
                    let objects = b.objects();
                    p.ty.word
                        .clone()
                        .iter()
                        .zip(&blocks)
                        .map(|(obj, &m)| {
                            let mut v = Vec::new();
                            for word in object_words(&objects, m) {
                                v.extend(pool.plus(&word, obj));
                            }
                            v
                        })
                        .collect()
                };
                tuples(&mids, 16, rng, |mid| {
                    let ro_pools: Vec<Vec<Elem>> = mid
                        .iter()
                        .map(|m| {
                            let mv = ops::as_side(m, Sign::Plus);
                            let mut v = Vec::new();
                            for h in b.objects() {
                                v.extend(pool.minus(&h, &mv.ty.word));
                            }
                            v
                        })
                        .collect();
                    let mut rng2 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 13);
                    tuples(&ro_pools, 6, &mut rng2, |ros| {
                        let lhs = (|| {
                            let comp = b.compose(&ops::as_side(&p, Sign::Plus), mid)?;
                            b.act(&ops::as_side(&comp, Sign::Plus), ros)
                        })();
                        let rhs = (|| {
                            let acted: Result<Vec<Elem>> = mid
                                .iter()
                                .zip(ros)
                                .map(|(m, r)| b.act(&ops::as_side(m, Sign::Plus), &[r.clone()]))
                                .collect();
                            b.compose(&ops::as_side(&p, Sign::Plus), &acted?)
                        })();
                        run.check(lhs, rhs, || format!("{p}"));
                    });
                });
            }
        }
    }
    run
}

/// P ⟵∘ ((P_ij) ⟶∘ P_j) = (P∘(P_ij)) ⟵∘ (P_j).
fn linearity_210a(b: &dyn BioImpl, pool: &Pool, rng: &mut ChaCha8Rng, bound: usize) -> LawRun {
    let mut run = LawRun::new("linearity (mixed, minus outer)");
    // shape: n = 1..2 blocks, k_j = 1 inner element per block, inner words
    // of length <= bound
    for n in 1..=bound.min(2) {
        for inner_len in 0..=bound.saturating_sub(n).min(2) {
            let objects = b.objects();
            // P_ij in P^-(x_j; c̄_j), one per block
            let mut pij_pool = Vec::new();
            for h in &objects {
                for w in object_words(&objects, inner_len) {
                    pij_pool.extend(pool.minus(h, &w));
                }
            }
            let pij_pools: Vec<Vec<Elem>> = (0..n).map(|_| pij_pool.clone()).collect();
            tuples(&pij_pools, 14, rng, |pijs| {
                // P_j in P^+(c̄_j; b_j)
                let pj_pools: Vec<Vec<Elem>> = pijs
                    .iter()
                    .map(|pij| {
                        let mut v = Vec::new();
                        for h in b.objects() {
                            v.extend(pool.plus(&pij.ty.word, &h));
                        }
                        v
                    })
                    .collect();
                let mut rng2 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 21);
                tuples(&pj_pools, 5, &mut rng2, |pjs| {
                    // P in P^-(b0; x_1..x_n)
                    let xs: Vec<Value> = pijs.iter().map(|e| e.ty.head.clone()).collect();
                    let mut p_pool = Vec::new();
                    for h in b.objects() {
                        p_pool.extend(pool.minus(&h, &xs));
                    }
                    let mut rng3 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 34);
                    tuples(&[p_pool], 4, &mut rng3, |ps| {
                        let p = &ps[0];
                        let lhs = (|| {
                            let inner: Result<Vec<Elem>> = pijs
                                .iter()
                                .zip(pjs)
                                .map(|(pij, pj)| b.act(&ops::as_side(pj, Sign::Plus), &[pij.clone()]))
                                .collect();
                            b.act(p, &inner?)
                        })();
                        let rhs = (|| {
                            let comp = b.compose(p, pijs)?;
                            b.act(&comp, pjs)
                        })();
                        run.check(lhs, rhs, || format!("{p}"));
                    });
                });
            });
        }
    }
    run
}

/// (P_i ⟵∘ (P_ij)) ⟶∘ P = (P_i) ⟶∘ ((P_ij)∘P).
fn linearity_210b(b: &dyn BioImpl, pool: &Pool, rng: &mut ChaCha8Rng, bound: usize) -> LawRun {
    let mut run = LawRun::new("linearity (mixed, plus outer)");
    for n in 1..=bound.min(2) {
        for inner_len in 0..=bound.saturating_sub(n).min(2) {
            let objects = b.objects();
            // P_ij in P^+(c̄_j; y_j)
            let mut pij_pool = Vec::new();
            for h in &objects {
                for w in object_words(&objects, inner_len) {
                    pij_pool.extend(pool.plus(&w, h));
                }
            }
            let pij_pools: Vec<Vec<Elem>> = (0..n).map(|_| pij_pool.clone()).collect();
            tuples(&pij_pools, 14, rng, |pijs| {
                // P_i in P^-(b_i; c̄_i) over each P_ij's input word
                let pi_pools: Vec<Vec<Elem>> = pijs
                    .iter()
                    .map(|pij| {
                        let pv = ops::as_side(pij, Sign::Plus);
                        let mut v = Vec::new();
                        for h in b.objects() {
                            v.extend(pool.minus(&h, &pv.ty.word));
                        }
                        v
                    })
                    .collect();
                let mut rng2 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 55);
                tuples(&pi_pools, 5, &mut rng2, |pis| {
                    // P in P^+((y_i); b0) over the P_ij heads
                    let word: Vec<Value> =
                        pijs.iter().map(|e| ops::as_side(e, Sign::Plus).ty.head.clone()).collect();
                    let mut p_pool = Vec::new();
                    for h in b.objects() {
                        p_pool.extend(pool.plus(&word, &h));
                    }
                    let mut rng3 = ChaCha8Rng::seed_from_u64(run.cases as u64 ^ 89);
                    tuples(&[p_pool], 4, &mut rng3, |ps| {
                        let p = &ps[0];
                        let lhs = (|| {
                            let inner: Result<Vec<Elem>> = pis
                                .iter()
                                .zip(pijs)
                                .map(|(pi, pij)| b.act(pi, &[pij.clone()]))
                                .collect();
                            b.act(&ops::as_side(p, Sign::Plus), &inner?)
                        })();
                        let rhs = (|| {
                            let comp = b.compose(&ops::as_side(p, Sign::Plus), pijs)?;
                            b.act(&ops::as_side(&comp, Sign::Plus), pis)
                        })();
                        run.check(lhs, rhs, || format!("{p}"));
                    });
                });
            });
        }
    }
    run
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::{builtin_rig, FOneBio, LpBio, LpExp, PaBio};

    #[test]
    fn boolean_vectors_pass() {
        let b = PaBio::new(builtin_rig("B").unwrap());
        let report = audit_bio_axioms(&b, 3, 32, 1);
        for law in &report.laws {
            assert!(law.pass, "{}: {:?}", law.law, law.witness);
            assert!(law.cases > 0, "{} ran no cases", law.law);
        }
    }

    #[test]
    fn natural_vectors_pass() {
        let b = PaBio::with_entry_bound(builtin_rig("N").unwrap(), 3);
        let report = audit_bio_axioms(&b, 3, 32, 2);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn field_with_one_element_passes() {
        let report = audit_bio_axioms(&FOneBio::new(), 3, 32, 3);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn l2_samples_pass() {
        let b = LpBio::new(LpExp::Two);
        let report = audit_bio_axioms(&b, 2, 6, 4);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn noncommutative_rig_still_gives_a_bio() {
        // P_A is a bio for every rig; distributivity is what fails later
        let b = PaBio::new(builtin_rig("ut2b").unwrap());
        let report = audit_bio_axioms(&b, 2, 16, 5);
        assert!(report.all_pass(), "{report:?}");
    }
}
