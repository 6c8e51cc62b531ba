//! Factorizations and presentations: complete factorization sets, minimal
//! presentations extracted from factorization graphs, the lifted presentation
//! of the explicit multiple, and a connectivity-based verifier.

use std::collections::HashMap;

use serde::Serialize;

use crate::construction::DeltaDaSpec;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// An exponent vector over an ordered generator list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Factorization(pub Vec<u64>);

impl Factorization {
    /// The element this vector factors, i.e. the weighted sum over `gens`.
    pub fn evaluate(&self, gens: &[u64]) -> u64 {
        assert_eq!(self.0.len(), gens.len(), "exponent vector length mismatch");
        self.0
            .iter()
            .zip(gens)
            .map(|(&e, &g)| e.checked_mul(g).expect("factorization value fits in u64"))
            .fold(0u64, |acc, v| {
                acc.checked_add(v).expect("factorization value fits in u64")
            })
    }
}

/// A finite set of balanced relations over an ordered generator list. Both
/// sides of every relation evaluate to the same element, and no relation
/// pairs a vector with itself; this is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    generators: Vec<u64>,
    relations: Vec<(Factorization, Factorization)>,
}

impl Presentation {
    pub fn new(
        generators: Vec<u64>,
        relations: Vec<(Factorization, Factorization)>,
    ) -> Result<Presentation> {
        for (lhs, rhs) in &relations {
            if lhs.0.len() != generators.len() || rhs.0.len() != generators.len() {
                return Err(Error::GeneratorMismatch);
            }
            let (l, r) = (lhs.evaluate(&generators), rhs.evaluate(&generators));
            if l != r {
                return Err(Error::UnbalancedRelation { lhs: l, rhs: r });
            }
            if lhs == rhs {
                return Err(Error::SelfPairedRelation);
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn relations(&self) -> &[(Factorization, Factorization)] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

/// The complete set of factorizations of `n` over the minimal generators of
/// `s`, in increasing lexicographic order; empty exactly when `n` is not an
/// element.
pub fn factorizations(s: &NumericalSemigroup, n: u64) -> Vec<Factorization> {
    factorizations_over(s.msg(), n)
}

/// Factorizations over an explicitly ordered generator list (a presentation
/// may list the minimal generators in its own order).
pub fn factorizations_over(gens: &[u64], n: u64) -> Vec<Factorization> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; gens.len()];
    expand(gens, 0, n, &mut cur, &mut out);
    out
}

fn expand(gens: &[u64], idx: usize, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Factorization>) {
    if idx + 1 == gens.len() {
        if rest.is_multiple_of(gens[idx]) {
            cur[idx] = rest / gens[idx];
            out.push(Factorization(cur.clone()));
            cur[idx] = 0;
        }
        return;
    }
    for k in 0..=rest / gens[idx] {
        cur[idx] = k;
        expand(gens, idx + 1, rest - k * gens[idx], cur, out);
    }
    cur[idx] = 0;
}

/// A minimal presentation of `s`: for every element whose factorization
/// graph (edges join factorizations sharing a generator) is disconnected,
/// one relation per bridge between consecutive components, components
/// ordered by their lexicographically smallest factorization.
///
/// Only elements up to `F(s) + 2 * max(msg)` can have a disconnected graph:
/// beyond that, removing any two generators still leaves an element, so all
/// factorizations are linked through a common-generator chain.
pub fn minimal_presentation(s: &NumericalSemigroup) -> Presentation {
    let gens = s.msg().to_vec();
    let mut relations = Vec::new();
    for n in 1..=default_verify_bound(s) {
        if !s.contains(n) {
            continue;
        }
        let facs = factorizations(s, n);
        if facs.len() <= 1 {
            continue;
        }
        let comp = support_components(&facs);
        let classes = comp.iter().copied().max().expect("nonempty") + 1;
        if classes < 2 {
            continue;
        }
        // facs are in lex order, so the first index of each class is its
        // lex-smallest member; classes are then ordered by that member.
        let mut reps: Vec<Option<usize>> = vec![None; classes];
        for (i, &c) in comp.iter().enumerate() {
            if reps[c].is_none() {
                reps[c] = Some(i);
            }
        }
        let mut reps: Vec<usize> = reps
            .into_iter()
            .map(|r| r.expect("class present"))
            .collect();
        reps.sort_unstable();
        for pair in reps.windows(2) {
            relations.push((facs[pair[0]].clone(), facs[pair[1]].clone()));
        }
    }
    Presentation::new(gens, relations).expect("graph bridges balance by construction")
}

/// Connected components of the graph whose vertices are factorizations and
/// whose edges join vectors with a common supported generator.
fn support_components(facs: &[Factorization]) -> Vec<usize> {
    let mut comp: Vec<usize> = vec![usize::MAX; facs.len()];
    let mut next = 0;
    for start in 0..facs.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..facs.len() {
                if comp[j] == usize::MAX && shares_support(&facs[i], &facs[j]) {
                    comp[j] = next;
                    queue.push(j);
                }
            }
        }
        next += 1;
    }
    comp
}

fn shares_support(a: &Factorization, b: &Factorization) -> bool {
    a.0.iter().zip(&b.0).any(|(&x, &y)| x > 0 && y > 0)
}

/// Lifts a presentation of delta to one of the explicit multiple: the given
/// relations are zero-padded onto the dilated generators, and the quadratic
/// relations among the adjoined generators rewrite each pairwise sum through
/// the fixed factorizations `u` of `a` and `v` of `a + 1`.
pub fn lifted_presentation(
    spec: &DeltaDaSpec,
    sigma: &Presentation,
    u: &Factorization,
    v: &Factorization,
) -> Result<Presentation> {
    let delta = spec.ctx().delta();
    let d = spec.ctx().d() as usize;
    let e = delta.embedding_dimension();
    if sigma.generators() != delta.msg() {
        return Err(Error::GeneratorMismatch);
    }
    if u.0.len() != e || u.evaluate(delta.msg()) != spec.a() {
        return Err(Error::BadFactorization {
            value: if u.0.len() == e {
                u.evaluate(delta.msg())
            } else {
                0
            },
            expected: spec.a(),
        });
    }
    if v.0.len() != e || v.evaluate(delta.msg()) != spec.a() + 1 {
        return Err(Error::BadFactorization {
            value: if v.0.len() == e {
                v.evaluate(delta.msg())
            } else {
                0
            },
            expected: spec.a() + 1,
        });
    }

    let mut generators = spec.ctx().d_delta_msg().to_vec();
    generators.extend(spec.new_generators()?);
    let width = e + d - 1;
    let pad = |f: &Factorization| {
        let mut w = f.0.clone();
        w.resize(width, 0);
        Factorization(w)
    };
    let unit = |i: usize| {
        // the coordinate of the adjoined generator d*a + i
        let mut w = vec![0u64; width];
        w[e + i - 1] += 1;
        Factorization(w)
    };
    let plus = |a: &Factorization, b: &Factorization| {
        Factorization(a.0.iter().zip(&b.0).map(|(&x, &y)| x + y).collect())
    };

    let mut relations: Vec<(Factorization, Factorization)> = sigma
        .relations()
        .iter()
        .map(|(l, r)| (pad(l), pad(r)))
        .collect();
    let (u, v) = (pad(u), pad(v));
    for i in 1..d {
        for j in i..d {
            let lhs = plus(&unit(i), &unit(j));
            let rhs = if i + j < d {
                plus(&u, &unit(i + j))
            } else if i + j == d {
                plus(&u, &v)
            } else {
                plus(&v, &unit(i + j - d))
            };
            relations.push((lhs, rhs));
        }
    }
    Presentation::new(generators, relations)
}

/// Lifted presentation with the canonical choices: a minimal presentation of
/// delta and the lexicographically smallest factorizations of `a` and `a+1`.
pub fn lifted_presentation_default(spec: &DeltaDaSpec) -> Result<Presentation> {
    let delta = spec.ctx().delta();
    let sigma = minimal_presentation(delta);
    let u = factorizations(delta, spec.a())
        .into_iter()
        .next()
        .expect("a is an element");
    let v = factorizations(delta, spec.a() + 1)
        .into_iter()
        .next()
        .expect("a+1 is an element");
    lifted_presentation(spec, &sigma, &u, &v)
}

/// The bound up to which factorization graphs must be checked:
/// `F(s) + 2 * max(msg)`.
pub fn default_verify_bound(s: &NumericalSemigroup) -> u64 {
    let top = *s.msg().last().expect("nonempty");
    (s.frobenius() + 2 * top as i64) as u64
}

/// Whether the relations of `p` connect all factorizations of every element
/// up to `bound`, where a move subtracts one side of a relation and adds the
/// other. If they do, the relations generate the kernel congruence up to
/// that bound.
pub fn verify_presentation(s: &NumericalSemigroup, p: &Presentation, bound: u64) -> bool {
    let mut sorted = p.generators().to_vec();
    sorted.sort_unstable();
    assert_eq!(
        sorted,
        s.msg(),
        "presentation must be over the minimal generators of s"
    );
    for n in 1..=bound {
        if !s.contains(n) {
            continue;
        }
        let facs = factorizations_over(p.generators(), n);
        if facs.len() <= 1 {
            continue;
        }
        let index: HashMap<&Factorization, usize> =
            facs.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut uf = UnionFind::new(facs.len());
        for (i, f) in facs.iter().enumerate() {
            for (lhs, rhs) in p.relations() {
                for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                    if f.0.iter().zip(&from.0).all(|(&x, &y)| x >= y) {
                        let moved = Factorization(
                            f.0.iter()
                                .zip(&from.0)
                                .zip(&to.0)
                                .map(|((&x, &y), &z)| x - y + z)
                                .collect(),
                        );
                        uf.union(i, index[&moved]);
                    }
                }
            }
        }
        if !uf.all_joined() {
            return false;
        }
    }
    true
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn all_joined(&mut self) -> bool {
        let root = self.find(0);
        (1..self.parent.len()).all(|i| self.find(i) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::FiberContext;

    fn sgp(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn fac(v: &[u64]) -> Factorization {
        Factorization(v.to_vec())
    }

    #[test]
    fn factorization_sets() {
        let s = sgp(&[4, 5]);
        assert_eq!(factorizations(&s, 20), vec![fac(&[0, 4]), fac(&[5, 0])]);
        assert_eq!(factorizations(&s, 0), vec![fac(&[0, 0])]);
        assert_eq!(factorizations(&s, 3), vec![]);
        // lex order over three generators
        let t = sgp(&[5, 7, 9]);
        assert_eq!(
            factorizations(&t, 14),
            vec![fac(&[0, 2, 0]), fac(&[1, 0, 1])]
        );
    }

    #[test]
    fn presentation_validation() {
        assert!(Presentation::new(vec![4, 5], vec![(fac(&[5, 0]), fac(&[0, 4]))]).is_ok());
        assert_eq!(
            Presentation::new(vec![4, 5], vec![(fac(&[1, 0]), fac(&[0, 1]))]).unwrap_err(),
            Error::UnbalancedRelation { lhs: 4, rhs: 5 }
        );
        assert_eq!(
            Presentation::new(vec![4, 5], vec![(fac(&[1, 1]), fac(&[1, 1]))]).unwrap_err(),
            Error::SelfPairedRelation
        );
        assert_eq!(
            Presentation::new(vec![4, 5], vec![(fac(&[1]), fac(&[0, 1]))]).unwrap_err(),
            Error::GeneratorMismatch
        );
    }

    #[test]
    fn minimal_presentation_two_generators() {
        let s = sgp(&[4, 5]);
        let p = minimal_presentation(&s);
        // a single relation at 20, the sides ordered lexicographically
        assert_eq!(p.relations(), &[(fac(&[0, 4]), fac(&[5, 0]))]);
        assert!(verify_presentation(&s, &p, 60));
        // coprime pairs always have exactly one relation
        for (a, b) in [(2u64, 3), (3, 5), (5, 12), (7, 9)] {
            assert_eq!(minimal_presentation(&sgp(&[a, b])).len(), 1);
        }
    }

    #[test]
    fn minimal_presentation_five_seven_nine() {
        let s = sgp(&[5, 7, 9]);
        let p = minimal_presentation(&s);
        assert_eq!(p.len(), 3);
        assert!(verify_presentation(&s, &p, default_verify_bound(&s)));
        assert!(verify_presentation(&s, &p, 100));
    }

    #[test]
    fn minimal_presentation_naturals_is_free() {
        let p = minimal_presentation(&NumericalSemigroup::naturals());
        assert!(p.is_empty());
        assert_eq!(p.generators(), &[1]);
    }

    #[test]
    fn known_relations_for_five_seven_nine() {
        // 5*5 = 7 + 2*9, 2*7 = 5 + 9, 3*9 = 4*5 + 7
        let s = sgp(&[5, 7, 9]);
        let sigma = Presentation::new(
            vec![5, 7, 9],
            vec![
                (fac(&[5, 0, 0]), fac(&[0, 1, 2])),
                (fac(&[0, 2, 0]), fac(&[1, 0, 1])),
                (fac(&[0, 0, 3]), fac(&[4, 1, 0])),
            ],
        )
        .unwrap();
        assert!(verify_presentation(&s, &sigma, 100));
        // dropping any one of the three breaks connectivity somewhere
        for skip in 0..3 {
            let rels: Vec<_> = sigma
                .relations()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, r)| r.clone())
                .collect();
            let partial = Presentation::new(vec![5, 7, 9], rels).unwrap();
            assert!(!verify_presentation(&s, &partial, 100));
        }
    }

    #[test]
    fn lifted_presentation_small() {
        // delta = <4,5>, d = 3, a = 4: adjoined generators 13 and 14
        let delta = sgp(&[4, 5]);
        let ctx = FiberContext::new(delta.clone(), 3).unwrap();
        let spec = DeltaDaSpec::new(&ctx, 4).unwrap();
        let sigma = minimal_presentation(&delta);
        let u = fac(&[1, 0]);
        let v = fac(&[0, 1]);
        let p = lifted_presentation(&spec, &sigma, &u, &v).unwrap();
        assert_eq!(p.generators(), &[12, 15, 13, 14]);
        // one lifted relation plus the three quadratics 13+13, 13+14, 14+14
        assert_eq!(p.len(), 4);
        let quad: Vec<_> = p.relations()[1..].to_vec();
        assert_eq!(
            quad,
            vec![
                // 13 + 13 = 12 + 14
                (fac(&[0, 0, 2, 0]), fac(&[1, 0, 0, 1])),
                // 13 + 14 = 12 + 15
                (fac(&[0, 0, 1, 1]), fac(&[1, 1, 0, 0])),
                // 14 + 14 = 13 + 15
                (fac(&[0, 0, 0, 2]), fac(&[0, 1, 1, 0])),
            ]
        );
        let built = spec.build().unwrap().semigroup;
        assert!(verify_presentation(
            &built,
            &p,
            default_verify_bound(&built)
        ));

        let bad = lifted_presentation(&spec, &sigma, &fac(&[0, 1]), &v);
        assert_eq!(
            bad.unwrap_err(),
            Error::BadFactorization {
                value: 5,
                expected: 4
            }
        );
    }

    #[test]
    fn lifted_presentation_d_two_single_quadratic() {
        let delta = sgp(&[3, 4, 5]);
        let ctx = FiberContext::new(delta.clone(), 2).unwrap();
        let spec = DeltaDaSpec::new(&ctx, 3).unwrap();
        let p = lifted_presentation_default(&spec).unwrap();
        let quads: Vec<_> = p.relations().iter().filter(|(l, _)| l.0[3] > 0).collect();
        // 2*(2a+1) = u + v is the only quadratic when d = 2
        assert_eq!(quads.len(), 1);
        assert_eq!(quads[0].0, fac(&[0, 0, 0, 2]));
        let built = spec.build().unwrap().semigroup;
        assert!(verify_presentation(
            &built,
            &p,
            default_verify_bound(&built)
        ));
    }

    #[test]
    fn presentation_invariant_under_generator_permutation() {
        let p1 = minimal_presentation(&sgp(&[5, 7, 9]));
        let p2 = minimal_presentation(&sgp(&[9, 5, 7]));
        assert_eq!(p1, p2);
    }

    #[test]
    fn presentation_json_schema() {
        let p = minimal_presentation(&sgp(&[4, 5]));
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"generators":[4,5],"relations":[[[0,4],[5,0]]]}"#
        );
    }
}
