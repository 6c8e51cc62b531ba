//! The exact kernel: numerical semigroups, membership, and the classical
//! invariants (multiplicity, Frobenius number, genus, embedding dimension,
//! sporadic count, conductor, Apery sets, pseudo-Frobenius numbers).
//!
//! A numerical semigroup is stored canonically: its unique minimal system of
//! generators plus a membership bit-vector up to the conductor. Membership at
//! or above the conductor is implicitly true, so the representation is exact
//! for every integer.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{checked_add, checked_mul, Error, Result};

/// A numerical semigroup: an additively closed subset of the naturals that
/// contains 0 and has finite complement.
///
/// Two values compare equal exactly when their minimal generating sets are
/// equal; the minimal system of generators is unique, so this is equality of
/// the underlying sets.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    /// Strictly increasing minimal system of generators.
    msg: Vec<u64>,
    /// Membership over `[0, conductor)`; `true` means the index is an element.
    members: Vec<bool>,
    /// Largest integer not in the semigroup; -1 encodes the full naturals.
    frobenius: i64,
    /// `frobenius + 1`.
    conductor: u64,
    multiplicity: u64,
    genus: u64,
    /// Number of elements strictly below the Frobenius number (0 included).
    sporadic: u64,
}

/// The record of classical invariants, in the order they are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    #[serde(rename = "m")]
    pub multiplicity: u64,
    #[serde(rename = "F")]
    pub frobenius: i64,
    #[serde(rename = "g")]
    pub genus: u64,
    #[serde(rename = "e")]
    pub embedding_dimension: usize,
    #[serde(rename = "n")]
    pub sporadic: u64,
    #[serde(rename = "c")]
    pub conductor: u64,
}

/// The Apery set of a semigroup with respect to a nonzero element `base`:
/// the smallest element in each congruence class modulo `base`.
///
/// `reps[r]` is the representative congruent to `r` modulo `base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperyTable {
    pub base: u64,
    pub reps: Vec<u64>,
}

impl AperyTable {
    /// Representatives in increasing order.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.reps.clone();
        v.sort_unstable();
        v
    }

    pub fn max(&self) -> u64 {
        self.reps
            .iter()
            .copied()
            .max()
            .expect("apery table is nonempty")
    }
}

impl NumericalSemigroup {
    /// The full semigroup of naturals, `<1>`.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            msg: vec![1],
            members: Vec::new(),
            frobenius: -1,
            conductor: 0,
            multiplicity: 1,
            genus: 0,
            sporadic: 0,
        }
    }

    /// Builds the semigroup generated by `gens`, reduced to its unique
    /// minimal system of generators.
    ///
    /// Fails with [`Error::NotCoprime`] when the generators have a common
    /// divisor greater than one (the complement would be infinite).
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        let mut gens: Vec<u64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let m = gens[0];
        if m == 1 {
            return Ok(Self::naturals());
        }

        // Grow the closure bit-vector until a run of m consecutive members
        // appears; the leftmost such run starts exactly at the conductor.
        let max_gen = *gens.last().expect("nonempty");
        let mut bound = checked_add(checked_mul(max_gen, 2)?, m)?;
        loop {
            let dp = closure_upto(&gens, bound);
            if let Some(start) = first_run(&dp, m as usize) {
                return Ok(Self::from_sieve(gens, dp, start));
            }
            bound = checked_mul(bound, 2)?;
        }
    }

    /// Finishes construction once the sieve `dp` is known to contain a run of
    /// `multiplicity` consecutive members starting at `conductor`.
    fn from_sieve(gens: Vec<u64>, dp: Vec<bool>, conductor: usize) -> Self {
        debug_assert!(conductor >= 2);
        debug_assert!(!dp[conductor - 1]);
        let m = gens[0];
        let member = |x: usize| x >= conductor || dp[x];

        // Minimal generators all lie below conductor + multiplicity. An
        // element is redundant iff subtracting one of the input generators
        // leaves a nonzero member.
        let top = conductor + m as usize - 1;
        let mut msg = Vec::new();
        for x in 1..=top {
            if !member(x) {
                continue;
            }
            let redundant = gens
                .iter()
                .take_while(|&&g| (g as usize) < x)
                .any(|&g| member(x - g as usize));
            if !redundant {
                msg.push(x as u64);
            }
        }

        let genus = (1..conductor).filter(|&x| !dp[x]).count() as u64;
        let mut members = dp;
        members.truncate(conductor);
        NumericalSemigroup {
            msg,
            multiplicity: m,
            genus,
            sporadic: conductor as u64 - genus,
            frobenius: conductor as i64 - 1,
            conductor: conductor as u64,
            members,
        }
    }

    /// The unique minimal system of generators, strictly increasing.
    pub fn msg(&self) -> &[u64] {
        &self.msg
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.msg.len()
    }

    /// Number of elements strictly below the Frobenius number.
    pub fn sporadic_count(&self) -> u64 {
        self.sporadic
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    /// Exact membership test; true for every integer at or above the conductor.
    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.members[n as usize]
    }

    /// Membership extended to signed integers (negative integers are never members).
    pub fn contains_int(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    /// All gaps, in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor)
            .filter(|&x| !self.members[x as usize])
            .collect()
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.multiplicity,
            frobenius: self.frobenius,
            genus: self.genus,
            embedding_dimension: self.msg.len(),
            sporadic: self.sporadic,
            conductor: self.conductor,
        }
    }

    /// The Apery set with respect to a nonzero element `base`: the elements
    /// `s` with `s - base` not in the semigroup, one per class modulo `base`.
    pub fn apery(&self, base: u64) -> Result<AperyTable> {
        if base == 0 || !self.contains(base) {
            return Err(Error::NotAMember { value: base });
        }
        let signed_base = i64::try_from(base).map_err(|_| Error::Overflow)?;
        let top = self
            .frobenius
            .checked_add(signed_base)
            .ok_or(Error::Overflow)? as u64;
        let mut reps = vec![u64::MAX; base as usize];
        for x in 0..=top {
            if self.contains(x) && !self.contains_int(x as i64 - signed_base) {
                let slot = &mut reps[(x % base) as usize];
                debug_assert_eq!(*slot, u64::MAX, "one representative per class");
                *slot = x;
            }
        }
        debug_assert!(reps.iter().all(|&r| r != u64::MAX));
        Ok(AperyTable { base, reps })
    }

    /// The pseudo-Frobenius numbers: gaps `x` with `x + s` in the semigroup
    /// for every nonzero element `s`. Rejects the naturals, whose set of
    /// pseudo-Frobenius numbers is empty.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        if self.is_naturals() {
            return Err(Error::IsN);
        }
        // Checking nonzero elements up to the conductor suffices: beyond it
        // x + s is at least the conductor.
        let mut pf = Vec::new();
        for x in 1..self.conductor {
            if self.contains(x) {
                continue;
            }
            let ok = (self.multiplicity..=self.conductor)
                .filter(|&s| self.contains(s))
                .all(|s| self.contains(x + s));
            if ok {
                pf.push(x);
            }
        }
        debug_assert_eq!(*pf.last().expect("pf is nonempty"), self.frobenius as u64);
        Ok(pf)
    }

    /// The type of the semigroup: the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> Result<usize> {
        Ok(self.pseudo_frobenius()?.len())
    }

    /// True when the only pseudo-Frobenius number is the Frobenius number.
    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(self.pseudo_frobenius()?.len() == 1)
    }

    /// The Wilf margin `e*n - c`; the Wilf conjecture asserts this is never
    /// negative.
    pub fn wilf_margin(&self) -> i64 {
        self.msg.len() as i64 * self.sporadic as i64 - self.conductor as i64
    }

    /// The depth `ceil(c / m)`.
    pub fn depth(&self) -> Result<u64> {
        if self.is_naturals() {
            return Err(Error::IsN);
        }
        Ok(self.conductor.div_ceil(self.multiplicity))
    }

    /// Builds the semigroup described by a membership predicate, given a
    /// bound above which every integer is a member.
    pub(crate) fn from_membership(is_member: impl Fn(u64) -> bool, all_above: u64) -> Self {
        if all_above == 0 {
            return Self::naturals();
        }
        let m = (1..=all_above).find(|&x| is_member(x)).unwrap_or(all_above);
        if m == 1 {
            return Self::naturals();
        }
        // Members up to all_above + m - 1 generate the whole set: anything
        // larger is such a member plus a multiple of m.
        let gens: Vec<u64> = (1..all_above + m)
            .filter(|&x| x >= all_above || is_member(x))
            .collect();
        Self::from_generators(&gens).expect("a membership snapshot has coprime generators")
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.msg == other.msg
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.msg.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    /// The canonical text form: the minimal generators as a comma-separated list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.msg.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or(Error::Parse {
                    text: s.to_string(),
                })
        };
        let gens = s.split(',').map(parse).collect::<Result<Vec<u64>>>()?;
        Self::from_generators(&gens)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("NumericalSemigroup", 3)?;
        st.serialize_field("msg", &self.msg)?;
        st.serialize_field("frobenius", &self.frobenius)?;
        st.serialize_field("genus", &self.genus)?;
        st.end()
    }
}

/// Membership of `<gens>` over `[0, bound]` by saturating each generator.
fn closure_upto(gens: &[u64], bound: u64) -> Vec<bool> {
    let n = bound as usize + 1;
    let mut dp = vec![false; n];
    dp[0] = true;
    for &g in gens {
        let g = g as usize;
        for i in g..n {
            if dp[i - g] {
                dp[i] = true;
            }
        }
    }
    dp
}

/// Index of the leftmost run of `len` consecutive `true` entries.
fn first_run(dp: &[bool], len: usize) -> Option<usize> {
    let mut run = 0;
    for (i, &b) in dp.iter().enumerate() {
        if b {
            run += 1;
            if run == len {
                return Some(i + 1 - len);
            }
        } else {
            run = 0;
        }
    }
    None
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn two_generator_semigroup_matches_sylvester() {
        // F = n1*n2 - n1 - n2 and g = (n1-1)(n2-1)/2 for coprime pairs.
        let s = sgp(&[4, 5]);
        assert_eq!(s.msg(), &[4, 5]);
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.genus(), 6);
        for (a, b) in [(2, 3), (3, 7), (5, 12), (7, 9), (11, 13)] {
            let s = sgp(&[a, b]);
            assert_eq!(s.frobenius(), (a * b - a - b) as i64);
            assert_eq!(s.genus(), (a - 1) * (b - 1) / 2);
        }
    }

    #[test]
    fn naturals_from_one() {
        let s = sgp(&[1]);
        assert_eq!(s.msg(), &[1]);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.genus(), 0);
        assert!(s.is_naturals());
        assert!(s.contains(0));
    }

    #[test]
    fn generator_reduction() {
        let s = sgp(&[6, 8, 10, 7, 9]);
        assert_eq!(s.msg(), &[6, 7, 8, 9, 10]);
        // 12 = 6 + 6 is redundant, as is anything at or above the conductor + m.
        let t = sgp(&[6, 7, 8, 9, 10, 12, 30]);
        assert_eq!(t, s);
    }

    #[test]
    fn non_coprime_rejected() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCoprime { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[2]),
            Err(Error::NotCoprime { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::ZeroGenerator)
        );
    }

    #[test]
    fn membership() {
        let s = sgp(&[4, 5]);
        assert!(!s.contains(11));
        assert!(s.contains(0));
        assert!(s.contains(12));
        assert!(s.contains(10_000));
        assert!(!s.contains_int(-3));
        let t = sgp(&[6, 7, 8, 9, 10]);
        assert!(t.contains(17));
        assert!(!t.contains(11));
    }

    #[test]
    fn invariants_record() {
        let s = sgp(&[4, 5]);
        let inv = s.invariants();
        assert_eq!(
            inv,
            Invariants {
                multiplicity: 4,
                frobenius: 11,
                genus: 6,
                embedding_dimension: 2,
                sporadic: 6,
                conductor: 12,
            }
        );
        let t = sgp(&[12, 13, 14, 15]);
        assert_eq!(t.frobenius(), 47);
        assert_eq!(t.genus(), 26);
        assert_eq!(t.sporadic_count(), 22);
        let n = sgp(&[1]).invariants();
        assert_eq!((n.multiplicity, n.frobenius, n.genus), (1, -1, 0));
        assert_eq!((n.embedding_dimension, n.sporadic, n.conductor), (1, 0, 0));
    }

    #[test]
    fn apery_sets() {
        let s = sgp(&[4, 5]);
        assert_eq!(s.apery(4).unwrap().sorted(), vec![0, 5, 10, 15]);
        let t = sgp(&[3, 4, 5]);
        assert_eq!(t.apery(3).unwrap().sorted(), vec![0, 4, 5]);
        // 0 always belongs: 0 - base is negative.
        for base in [3, 4, 5, 8] {
            assert!(t.apery(base).unwrap().reps.contains(&0));
        }
        assert_eq!(s.apery(3), Err(Error::NotAMember { value: 3 }));
        assert_eq!(s.apery(0), Err(Error::NotAMember { value: 0 }));
    }

    #[test]
    fn apery_size_and_max() {
        // |Ap(S, m)| = m and max = F + m for members m.
        for gens in [&[4u64, 5][..], &[3, 4, 5], &[6, 7, 8, 9, 10], &[5, 7, 9]] {
            let s = sgp(gens);
            let limit = s.conductor() + s.multiplicity();
            for m in 1..=limit {
                if !s.contains(m) {
                    continue;
                }
                let ap = s.apery(m).unwrap();
                assert_eq!(ap.reps.len() as u64, m);
                assert_eq!(ap.max() as i64, s.frobenius() + m as i64);
                for (r, &rep) in ap.reps.iter().enumerate() {
                    assert_eq!(rep % m, r as u64);
                    assert!(s.contains(rep) && !s.contains_int(rep as i64 - m as i64));
                }
            }
        }
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        assert_eq!(sgp(&[3, 4, 5]).pseudo_frobenius().unwrap(), vec![1, 2]);
        assert_eq!(sgp(&[4, 5]).pseudo_frobenius().unwrap(), vec![11]);
        assert_eq!(sgp(&[3, 8, 10]).pseudo_frobenius().unwrap(), vec![5, 7]);
        let s = sgp(&[6, 7, 8, 9, 10]);
        assert_eq!(
            *s.pseudo_frobenius().unwrap().last().unwrap() as i64,
            s.frobenius()
        );
        assert_eq!(sgp(&[1]).pseudo_frobenius(), Err(Error::IsN));
    }

    #[test]
    fn symmetry() {
        assert!(sgp(&[4, 5]).is_symmetric().unwrap());
        assert!(!sgp(&[3, 4, 5]).is_symmetric().unwrap());
        assert!(sgp(&[5, 12]).is_symmetric().unwrap());
        assert_eq!(sgp(&[1]).is_symmetric(), Err(Error::IsN));
    }

    #[test]
    fn wilf_margin_values() {
        assert_eq!(sgp(&[3, 4, 5]).wilf_margin(), 0);
        assert_eq!(sgp(&[1]).wilf_margin(), 0);
        assert_eq!(sgp(&[12, 13, 14, 15]).wilf_margin(), 40);
    }

    #[test]
    fn depth_values() {
        assert_eq!(sgp(&[4, 5]).depth().unwrap(), 3);
        assert_eq!(sgp(&[12, 13, 14, 15]).depth().unwrap(), 4);
        assert_eq!(sgp(&[2, 3]).depth().unwrap(), 1);
        assert_eq!(sgp(&[1]).depth(), Err(Error::IsN));
    }

    #[test]
    fn sporadic_plus_genus_is_conductor() {
        for gens in [&[4u64, 5][..], &[3, 4, 5], &[12, 13, 14, 15], &[1], &[2, 3]] {
            let s = sgp(gens);
            assert_eq!(s.sporadic_count() + s.genus(), s.conductor());
        }
    }

    #[test]
    fn text_round_trip() {
        let s = sgp(&[6, 8, 10, 7, 9]);
        assert_eq!(s.to_string(), "6,7,8,9,10");
        let back: NumericalSemigroup = s.to_string().parse().unwrap();
        assert_eq!(back, s);
        assert!(matches!(
            "4,x".parse::<NumericalSemigroup>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "".parse::<NumericalSemigroup>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn json_form() {
        let s = sgp(&[4, 5]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"msg":[4,5],"frobenius":11,"genus":6}"#
        );
    }
}
