//! The explicit multiple obtained from an element `a` of delta with `a + 1`
//! also in delta: one new generator in each nonzero residue class modulo `d`
//! on top of `d * delta`. Its classical invariants, Apery set, Wilf margin,
//! and depth all have closed forms in terms of delta, `d`, and `a`, computed
//! here without building the semigroup; the sieve-backed constructions live
//! next to them for cross-checking.

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::fiber::{FiberContext, FiberElement};
use crate::semigroup::{AperyTable, Invariants, NumericalSemigroup};

/// Parameters of the explicit multiple: a fiber context plus a nonzero
/// element `a` of delta with `a + 1` in delta.
#[derive(Clone, Copy, Debug)]
pub struct DeltaDaSpec<'a> {
    ctx: &'a FiberContext,
    a: u64,
}

/// The Wilf margin of the constructed multiple, split into the three
/// nonnegative-when-delta-is-Wilf contributions it decomposes into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WilfIdentity {
    pub lhs: i64,
    pub terms: [i64; 3],
}

impl<'a> DeltaDaSpec<'a> {
    pub fn new(ctx: &'a FiberContext, a: u64) -> Result<Self> {
        if a == 0 || !ctx.delta().contains(a) || !ctx.delta().contains(a + 1) {
            return Err(Error::InvalidA { a });
        }
        Ok(DeltaDaSpec { ctx, a })
    }

    pub fn ctx(&self) -> &FiberContext {
        self.ctx
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// The generators adjoined outside `d * delta`: `da+1, ..., da+d-1`.
    pub fn new_generators(&self) -> Result<Vec<u64>> {
        let da = checked_mul(self.ctx.d(), self.a)?;
        checked_add(da, self.ctx.d())?;
        Ok((1..self.ctx.d()).map(|i| da + i).collect())
    }

    /// Builds the multiple by sieve. Its minimal generators are exactly
    /// `d * msg(delta)` together with the adjoined generators, its quotient
    /// by `d` is delta, and its rank in the fiber is `d - 1`.
    pub fn build(&self) -> Result<FiberElement> {
        let mut gens = self.ctx.d_delta_msg().to_vec();
        gens.extend(self.new_generators()?);
        let s = NumericalSemigroup::from_generators(&gens).expect("d*n and d*a+1 are coprime");
        Ok(self.ctx.fiber_element_unchecked(s))
    }

    /// The five closed-form invariants (plus the conductor), computed without
    /// constructing the semigroup.
    pub fn predicted_invariants(&self) -> Result<Invariants> {
        let delta = self.ctx.delta().invariants();
        let d = self.ctx.d();
        let a = self.a;
        let f = delta.frobenius as u64; // delta is not the naturals
        let frobenius = checked_add(checked_mul(d, checked_add(f, a)?)?, d - 1)?;
        let genus = checked_add(checked_mul(d, delta.genus)?, checked_mul(d - 1, a)?)?;
        Ok(Invariants {
            multiplicity: checked_mul(d, delta.multiplicity)?,
            frobenius: frobenius as i64,
            genus,
            embedding_dimension: delta.embedding_dimension + d as usize - 1,
            sporadic: checked_add(checked_mul(d, delta.sporadic)?, a)?,
            conductor: frobenius + 1,
        })
    }

    /// The Apery set of the multiple with respect to its multiplicity
    /// `d * m(delta)`: the dilated Apery set of delta, shifted into each
    /// nonzero residue class by the adjoined generators. The union is
    /// disjoint and has exactly `d * m(delta)` elements.
    pub fn predicted_apery(&self) -> Result<AperyTable> {
        let d = self.ctx.d();
        let m = self.ctx.delta().multiplicity();
        let base = checked_mul(d, m)?;
        let delta_ap = self.ctx.delta().apery(m)?;
        let da = checked_mul(d, self.a)?;
        let mut reps = vec![u64::MAX; base as usize];
        let mut place = |v: u64| {
            let slot = &mut reps[(v % base) as usize];
            assert_eq!(
                *slot,
                u64::MAX,
                "the union of shifted Apery sets is disjoint"
            );
            *slot = v;
        };
        for &w in &delta_ap.reps {
            place(checked_mul(d, w)?);
        }
        for i in 1..d {
            for &w in &delta_ap.reps {
                place(checked_add(checked_add(da, i)?, checked_mul(d, w)?)?);
            }
        }
        Ok(AperyTable { base, reps })
    }

    /// The Wilf margin of the built multiple together with its exact
    /// three-term decomposition over delta's margin.
    pub fn wilf_identity(&self) -> Result<WilfIdentity> {
        let built = self.build()?;
        let lhs = built.semigroup.wilf_margin();
        let delta = self.ctx.delta().invariants();
        let d = self.ctx.d() as i64;
        let a = self.a as i64;
        let e = delta.embedding_dimension as i64;
        let n = delta.sporadic as i64;
        let c = delta.conductor as i64;
        let terms = [d * (e * n - c), d * (d - 1) * n, a * (e - 1)];
        assert_eq!(
            lhs,
            terms.iter().sum::<i64>(),
            "margin decomposition is exact"
        );
        Ok(WilfIdentity { lhs, terms })
    }

    /// The depth of the multiple, `ceil((c(delta) + a) / m(delta))`;
    /// independent of `d`.
    pub fn predicted_depth(&self) -> Result<u64> {
        let c = checked_add(self.ctx.delta().conductor(), self.a)?;
        Ok(c.div_ceil(self.ctx.delta().multiplicity()))
    }
}

/// The smallest nonzero `a` with both `a` and `a + 1` in delta. The
/// conductor always qualifies, so the scan terminates.
pub fn smallest_valid_a(delta: &NumericalSemigroup) -> u64 {
    (1..)
        .find(|&a| delta.contains(a) && delta.contains(a + 1))
        .expect("conductor qualifies")
}

/// Restriction of an Apery set along a quotient: the multiples of `d` in
/// `Ap(S, m)`, divided by `d`, form `Ap(S/d, m/d)` exactly.
pub fn apery_quotient_reduction(s: &NumericalSemigroup, d: u64, m: u64) -> Result<AperyTable> {
    if d == 0 || m == 0 || !m.is_multiple_of(d) || !s.contains(m) {
        return Err(Error::BadBase {
            base: m,
            divisor: d,
        });
    }
    let table = s.apery(m)?;
    let base = m / d;
    let mut reps = vec![u64::MAX; base as usize];
    for &w in &table.reps {
        if w % d == 0 {
            let v = w / d;
            let slot = &mut reps[(v % base) as usize];
            assert_eq!(*slot, u64::MAX, "one representative per class survives");
            *slot = v;
        }
    }
    assert!(reps.iter().all(|&r| r != u64::MAX), "every class is hit");
    Ok(AperyTable { base, reps })
}

/// A multiple of delta with any prescribed embedding dimension
/// `k >= e(delta)`: take `d = k - (e(delta) - 1)` and the smallest valid `a`.
/// For `k = e(delta)` the answer is delta itself with `d = 1`.
pub fn realize_embedding_dimension(
    delta: &NumericalSemigroup,
    k: usize,
) -> Result<(u64, NumericalSemigroup)> {
    if delta.is_naturals() {
        return Err(Error::IsN);
    }
    let e = delta.embedding_dimension();
    if k < e {
        return Err(Error::BadTarget {
            target: k,
            minimum: e,
        });
    }
    if k == e {
        return Ok((1, delta.clone()));
    }
    let d = (k - e + 1) as u64;
    let ctx = FiberContext::new(delta.clone(), d)?;
    let spec = DeltaDaSpec::new(&ctx, smallest_valid_a(delta))?;
    let built = spec.build()?;
    Ok((d, built.semigroup))
}
