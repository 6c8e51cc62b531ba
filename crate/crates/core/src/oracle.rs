//! Independent brute-force references used by the test suites.
//!
//! Everything here is deliberately naive and definition-faithful, and shares
//! no code with the closed-form or sieve paths it is used to validate. Bounds
//! are caller-supplied and checked; an insufficient bound is a hard error,
//! never a silent truncation.

use crate::error::{Error, Result};

/// A snapshot of a subset of the naturals over `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedSet {
    bound: u64,
    members: Vec<bool>,
}

impl BoundedSet {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Membership within the snapshot window; indices beyond the bound are
    /// not decided by a snapshot and are reported as absent.
    pub fn contains(&self, x: u64) -> bool {
        x <= self.bound && self.members[x as usize]
    }

    /// The members as a sorted list.
    pub fn to_vec(&self) -> Vec<u64> {
        (0..=self.bound).filter(|&x| self.contains(x)).collect()
    }
}

/// The members of `<gens>` in `[0, bound]`, found by scanning each value for
/// a generator whose removal leaves a member.
pub fn oracle_closure(gens: &[u64], bound: u64) -> BoundedSet {
    let n = bound as usize + 1;
    let mut members = vec![false; n];
    members[0] = true;
    for i in 1..n {
        members[i] = gens
            .iter()
            .any(|&g| g > 0 && (g as usize) <= i && members[i - g as usize]);
    }
    BoundedSet { bound, members }
}

/// The quotient `{x : d*x in set}`, applied index-wise.
pub fn oracle_quotient(set: &BoundedSet, d: u64) -> BoundedSet {
    assert!(d >= 1, "quotient divisor must be at least 1");
    let bound = set.bound / d;
    let members = (0..=bound).map(|x| set.contains(x * d)).collect();
    BoundedSet { bound, members }
}

/// Pseudo-Frobenius numbers read off a semigroup snapshot: every gap `x` is
/// tested against every nonzero member up to the conductor.
///
/// The snapshot must extend to at least twice the conductor so that each sum
/// `x + s` is decidable.
pub fn oracle_pf(set: &BoundedSet) -> Result<Vec<u64>> {
    let frobenius = match (0..=set.bound).rev().find(|&x| !set.contains(x)) {
        Some(f) => f,
        None => return Err(Error::IsN),
    };
    let conductor = frobenius + 1;
    if set.bound < 2 * conductor {
        return Err(Error::BoundTooSmall {
            bound: set.bound,
            needed: 2 * conductor,
        });
    }
    let mut pf = Vec::new();
    for x in 1..conductor {
        if set.contains(x) {
            continue;
        }
        let ok = (1..=conductor)
            .filter(|&s| set.contains(s))
            .all(|s| set.contains(x + s));
        if ok {
            pf.push(x);
        }
    }
    Ok(pf)
}

/// Whether all factorizations of `n` over `gens` fall into a single class
/// under the moves "subtract one side of a relation, add the other".
///
/// Vacuously true when `n` has at most one factorization.
pub fn oracle_congruence_connected(
    gens: &[u64],
    relations: &[(Vec<u64>, Vec<u64>)],
    n: u64,
) -> bool {
    let facs = expansions(gens, n);
    if facs.len() <= 1 {
        return true;
    }
    let index: std::collections::HashMap<&[u64], usize> = facs
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut seen = vec![false; facs.len()];
    let mut queue = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop() {
        for (a, b) in relations {
            for (from, to) in [(a, b), (b, a)] {
                if facs[i].iter().zip(from).all(|(x, y)| x >= y) {
                    let moved: Vec<u64> = facs[i]
                        .iter()
                        .zip(from)
                        .zip(to)
                        .map(|((x, y), z)| x - y + z)
                        .collect();
                    let j = index[moved.as_slice()];
                    if !seen[j] {
                        seen[j] = true;
                        reached += 1;
                        queue.push(j);
                    }
                }
            }
        }
    }
    reached == facs.len()
}

/// All exponent vectors over `gens` whose weighted sum is `n`.
fn expansions(gens: &[u64], n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; gens.len()];
    fn go(gens: &[u64], idx: usize, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if idx == gens.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = gens[idx];
        let mut used = 0;
        loop {
            cur[idx] = used;
            go(gens, idx + 1, rest - used * g, cur, out);
            used += 1;
            if used * g > rest {
                break;
            }
        }
        cur[idx] = 0;
    }
    go(gens, 0, n, &mut cur, &mut out);
    out
}

/// Every numerical semigroup with `1 <= genus <= max_genus` and multiplicity
/// at most `max_multiplicity`, as minimal generator lists.
///
/// Walks the tree in which the children of a semigroup are obtained by
/// removing one minimal generator larger than the Frobenius number; each
/// semigroup of genus g appears exactly once at depth g, and a subtree is
/// abandoned as soon as its multiplicity exceeds the cap (removals never
/// decrease the multiplicity).
pub fn enumerate_semigroups(max_genus: u64, max_multiplicity: u64) -> Vec<Vec<u64>> {
    // Frobenius numbers stay below 2 * genus, so this window covers every
    // minimal generator (bounded by frobenius + multiplicity) along the walk.
    let window = (4 * max_genus + 8).max(16) as usize;
    let mut out = Vec::new();
    let root = (vec![true; window], -1i64, 0u64);
    let mut stack = vec![root];
    while let Some((members, frobenius, genus)) = stack.pop() {
        let msg = minimal_generators(&members);
        if genus >= 1 {
            out.push(msg.clone());
        }
        if genus == max_genus {
            continue;
        }
        for &x in &msg {
            if (x as i64) <= frobenius {
                continue;
            }
            let mut child = members.clone();
            child[x as usize] = false;
            let child_mult = child
                .iter()
                .skip(1)
                .position(|&b| b)
                .expect("finite complement")
                + 1;
            if child_mult as u64 > max_multiplicity {
                continue;
            }
            stack.push((child, x as i64, genus + 1));
        }
    }
    out
}

/// Minimal generators read straight off a membership window: nonzero members
/// that are not the sum of two nonzero members.
fn minimal_generators(members: &[bool]) -> Vec<u64> {
    let mut msg = Vec::new();
    for x in 1..members.len() {
        if !members[x] {
            continue;
        }
        let decomposable = (1..x).any(|y| members[y] && members[x - y]);
        if !decomposable {
            msg.push(x as u64);
        }
    }
    msg
}
