//! Quotients, monoids with a prescribed quotient, and the fixed-quotient
//! fiber: membership tests, closures, finite intersections, cofinite
//! extensions, and bounded enumeration of the fiber.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{checked_mul, Error, Result};
use crate::semigroup::{gcd, NumericalSemigroup};

impl NumericalSemigroup {
    /// The quotient `{x : d*x in S}`, again a numerical semigroup.
    pub fn quotient(&self, d: u64) -> NumericalSemigroup {
        assert!(d >= 1, "quotient divisor must be at least 1");
        if d == 1 {
            return self.clone();
        }
        // Everything from ceil(c / d) on is a member of the quotient.
        let all_above = self.conductor().div_ceil(d);
        NumericalSemigroup::from_membership(
            |x| match x.checked_mul(d) {
                Some(v) => self.contains(v),
                None => true,
            },
            all_above,
        )
    }

    /// Element-wise intersection of two numerical semigroups.
    pub fn intersection(&self, other: &NumericalSemigroup) -> NumericalSemigroup {
        let all_above = self.conductor().max(other.conductor());
        NumericalSemigroup::from_membership(|x| self.contains(x) && other.contains(x), all_above)
    }
}

/// A finitely generated submonoid of the naturals, not necessarily with
/// finite complement.
///
/// Stored as `scale * base` where `scale` is the gcd of the generators and
/// `base` is a numerical semigroup; membership stays exact. A monoid is a
/// numerical semigroup precisely when `scale` is 1, and operations that need
/// one reject the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    scale: u64,
    base: NumericalSemigroup,
}

impl Monoid {
    pub fn from_generators(gens: &[u64]) -> Result<Monoid> {
        let mut gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        gens.sort_unstable();
        gens.dedup();
        let scale = gens.iter().copied().fold(0, gcd);
        let reduced: Vec<u64> = gens.iter().map(|&g| g / scale).collect();
        let base = NumericalSemigroup::from_generators(&reduced)?;
        Ok(Monoid { scale, base })
    }

    pub fn naturals() -> Monoid {
        Monoid {
            scale: 1,
            base: NumericalSemigroup::naturals(),
        }
    }

    /// The gcd of the monoid's elements.
    pub fn gcd(&self) -> u64 {
        self.scale
    }

    /// Minimal generators (the scaled minimal generators of the base).
    pub fn msg(&self) -> Vec<u64> {
        self.base.msg().iter().map(|&g| g * self.scale).collect()
    }

    pub(crate) fn display_msg(&self) -> String {
        let parts: Vec<String> = self.msg().iter().map(u64::to_string).collect();
        parts.join(",")
    }

    pub fn contains(&self, x: u64) -> bool {
        x.is_multiple_of(self.scale) && self.base.contains(x / self.scale)
    }

    /// True when the monoid has finite complement, i.e. is a numerical semigroup.
    pub fn is_numerical(&self) -> bool {
        self.scale == 1
    }

    pub fn as_semigroup(&self) -> Option<&NumericalSemigroup> {
        if self.scale == 1 {
            Some(&self.base)
        } else {
            None
        }
    }

    pub fn into_semigroup(self) -> Result<NumericalSemigroup> {
        if self.scale == 1 {
            Ok(self.base)
        } else {
            Err(Error::NotCoprime { gcd: self.scale })
        }
    }

    /// The quotient `{x : d*x in M}` of a monoid.
    pub fn quotient(&self, d: u64) -> Monoid {
        assert!(d >= 1, "quotient divisor must be at least 1");
        let g = gcd(self.scale, d);
        Monoid {
            scale: self.scale / g,
            base: self.base.quotient(d / g),
        }
    }

    /// The union of the monoid with every integer at or above `n`; always a
    /// numerical semigroup. Extending above `d * F(delta)` preserves the
    /// quotient by `d`.
    pub fn cofinite_extension(&self, n: u64) -> NumericalSemigroup {
        NumericalSemigroup::from_membership(|x| x >= n || self.contains(x), n)
    }
}

impl From<NumericalSemigroup> for Monoid {
    fn from(base: NumericalSemigroup) -> Monoid {
        Monoid { scale: 1, base }
    }
}

/// A fixed quotient target: a numerical semigroup `delta` (not the naturals)
/// and a divisor `d >= 2`, with the gap list of `delta` and the generators of
/// `d * delta` precomputed.
#[derive(Clone, Debug)]
pub struct FiberContext {
    delta: NumericalSemigroup,
    d: u64,
    delta_gaps: Vec<u64>,
    d_delta_msg: Vec<u64>,
}

/// A numerical semigroup in the fiber over `delta`, together with its
/// relative minimal generators (the minimal generators outside `d * delta`)
/// and their count, the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberElement {
    pub semigroup: NumericalSemigroup,
    pub relative_msg: Vec<u64>,
    pub rank: usize,
}

impl Serialize for FiberElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FiberElement", 5)?;
        st.serialize_field("msg", self.semigroup.msg())?;
        st.serialize_field("relative_msg", &self.relative_msg)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("frobenius", &self.semigroup.frobenius())?;
        st.serialize_field("genus", &self.semigroup.genus())?;
        st.end()
    }
}

impl FiberContext {
    pub fn new(delta: NumericalSemigroup, d: u64) -> Result<FiberContext> {
        if delta.is_naturals() {
            return Err(Error::IsN);
        }
        if d < 2 {
            return Err(Error::InvalidD { d });
        }
        let delta_gaps = delta.gaps();
        let d_delta_msg = delta
            .msg()
            .iter()
            .map(|&g| checked_mul(d, g))
            .collect::<Result<Vec<u64>>>()?;
        checked_mul(d, delta.conductor())?;
        Ok(FiberContext {
            delta,
            d,
            delta_gaps,
            d_delta_msg,
        })
    }

    pub fn delta(&self) -> &NumericalSemigroup {
        &self.delta
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn delta_gaps(&self) -> &[u64] {
        &self.delta_gaps
    }

    pub fn d_delta_msg(&self) -> &[u64] {
        &self.d_delta_msg
    }

    /// The monoid `d * delta`.
    pub fn d_delta(&self) -> Monoid {
        Monoid {
            scale: self.d,
            base: self.delta.clone(),
        }
    }

    /// `d * F(delta)`, the largest element of `d * (gaps of delta)`.
    pub fn d_frobenius(&self) -> u64 {
        self.d * self.delta.frobenius() as u64
    }

    /// Constant-time test for membership in `d * delta`.
    pub fn in_d_delta(&self, x: u64) -> bool {
        x.is_multiple_of(self.d) && self.delta.contains(x / self.d)
    }

    /// Whether `X` is contained in some semigroup of the fiber, i.e. whether
    /// the monoid generated by `X` avoids `d * (gaps of delta)`.
    ///
    /// Each target `d * gap` is a bounded coin-problem membership query; a
    /// single saturating table over `[0, d * F(delta)]` answers them all.
    pub fn is_md_set(&self, xs: &[u64]) -> bool {
        self.md_set_violation(xs).is_none()
    }

    /// The smallest forbidden value reached by the monoid `<X>`, if any.
    fn md_set_violation(&self, xs: &[u64]) -> Option<u64> {
        let reach = reachable_upto(xs, self.d_frobenius());
        self.delta_gaps
            .iter()
            .map(|&n| self.d * n)
            .find(|&t| reach[t as usize])
    }

    /// The smallest monoid with quotient `delta` containing `X`, namely
    /// `<X> + d*delta`, returned with its minimal generating set.
    ///
    /// The result is a numerical semigroup exactly when `gcd(X u {d}) = 1`.
    pub fn md_closure(&self, xs: &[u64]) -> Result<Monoid> {
        if let Some(target) = self.md_set_violation(xs) {
            return Err(Error::NotAnMdSet { target });
        }
        let mut gens = xs.to_vec();
        gens.extend_from_slice(&self.d_delta_msg);
        Monoid::from_generators(&gens)
    }

    /// Checks that `s` lies in the fiber and returns it with its relative
    /// minimal generators; the error carries the actual quotient.
    pub fn in_fiber(&self, s: &NumericalSemigroup) -> Result<FiberElement> {
        let q = s.quotient(self.d);
        if q != self.delta {
            return Err(Error::WrongQuotient {
                actual: Box::new(Monoid::from(q)),
            });
        }
        Ok(self.fiber_element_unchecked(s.clone()))
    }

    /// Packs a semigroup known (by construction) to lie in the fiber.
    pub(crate) fn fiber_element_unchecked(&self, s: NumericalSemigroup) -> FiberElement {
        let relative_msg: Vec<u64> = s
            .msg()
            .iter()
            .copied()
            .filter(|&x| !self.in_d_delta(x))
            .collect();
        FiberElement {
            rank: relative_msg.len(),
            relative_msg,
            semigroup: s,
        }
    }

    /// Every semigroup of the fiber whose relative minimal generators lie in
    /// `[1, gen_bound]`, each exactly once, sorted by rank and then by
    /// minimal generators lexicographically.
    ///
    /// Candidate sets are walked one congruence class modulo `d * m(delta)`
    /// at a time: distinct relative generators are never congruent modulo
    /// `d * m(delta)` (their difference would lie in `d * delta`), so each
    /// class contributes at most one. A running reachability table prunes
    /// any branch whose partial monoid already meets `d * (gaps of delta)`,
    /// and a final canonicity check keeps exactly the sets that equal the
    /// relative minimal generators of their closure.
    pub fn enumerate_fiber(&self, gen_bound: u64) -> Vec<FiberElement> {
        let dm = self.d * self.delta.multiplicity();
        let df = self.d_frobenius();
        let mut forbidden = vec![false; df as usize + 1];
        for &n in &self.delta_gaps {
            forbidden[(self.d * n) as usize] = true;
        }

        let classes: Vec<Vec<u64>> = (1..dm)
            .filter(|r| r % self.d != 0)
            .map(|r| {
                (r..=gen_bound)
                    .step_by(dm as usize)
                    .filter(|&x| self.delta.contains(x))
                    .filter(|&x| {
                        // singleton pre-check: multiples of x must avoid the targets
                        !(1..=df / x.max(1)).any(|k| forbidden[(k * x) as usize])
                    })
                    .collect()
            })
            .collect();

        let mut reach = vec![false; df as usize + 1];
        reach[0] = true;
        let mut chosen: Vec<u64> = Vec::new();
        let mut out: Vec<FiberElement> = Vec::new();
        self.enumerate_rec(&classes, 0, &mut chosen, &reach, &forbidden, &mut out);

        out.sort_by(|a, b| (a.rank, a.semigroup.msg()).cmp(&(b.rank, b.semigroup.msg())));
        debug_assert!(out.windows(2).all(|w| w[0].semigroup != w[1].semigroup));
        out
    }

    fn enumerate_rec(
        &self,
        classes: &[Vec<u64>],
        idx: usize,
        chosen: &mut Vec<u64>,
        reach: &[bool],
        forbidden: &[bool],
        out: &mut Vec<FiberElement>,
    ) {
        if idx == classes.len() {
            if let Some(fe) = self.finish_candidate(chosen) {
                out.push(fe);
            }
            return;
        }
        // Skip this congruence class entirely.
        self.enumerate_rec(classes, idx + 1, chosen, reach, forbidden, out);
        'cand: for &x in &classes[idx] {
            for &y in chosen.iter() {
                let diff = x.abs_diff(y);
                if self.in_d_delta(diff) {
                    // one of the pair could never stay a minimal generator
                    continue 'cand;
                }
            }
            let mut next = reach.to_vec();
            if x <= self.d_frobenius() {
                let x = x as usize;
                let mut hit = false;
                for i in x..next.len() {
                    if next[i - x] {
                        next[i] = true;
                        hit |= forbidden[i];
                    }
                }
                if hit {
                    continue 'cand;
                }
            }
            chosen.push(x);
            self.enumerate_rec(classes, idx + 1, chosen, &next, forbidden, out);
            chosen.pop();
        }
    }

    /// Validates a leaf candidate: a generating set is kept exactly when it
    /// is the canonical relative generator set of its own closure.
    fn finish_candidate(&self, chosen: &[u64]) -> Option<FiberElement> {
        if chosen.is_empty() {
            return None;
        }
        let g = chosen.iter().copied().fold(self.d, gcd);
        if g != 1 {
            return None;
        }
        let mut gens = chosen.to_vec();
        gens.extend_from_slice(&self.d_delta_msg);
        let s = NumericalSemigroup::from_generators(&gens).expect("gcd checked above");
        let fe = self.fiber_element_unchecked(s);
        let mut sorted = chosen.to_vec();
        sorted.sort_unstable();
        if fe.relative_msg == sorted {
            Some(fe)
        } else {
            None
        }
    }
}

/// Representability table of `<gens>` over `[0, bound]`; generators above the
/// bound cannot contribute.
fn reachable_upto(gens: &[u64], bound: u64) -> Vec<bool> {
    let n = bound as usize + 1;
    let mut dp = vec![false; n];
    dp[0] = true;
    for &g in gens {
        if g == 0 || g as usize >= n {
            continue;
        }
        let g = g as usize;
        for i in g..n {
            if dp[i - g] {
                dp[i] = true;
            }
        }
    }
    dp
}
