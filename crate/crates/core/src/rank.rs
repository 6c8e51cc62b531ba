//! The rank filtration of a fixed-quotient fiber: relative minimal
//! generators, the extremal-rank witness, the embedding-dimension breakdown,
//! and the complete rank-one layer with its closed formulas for Frobenius
//! number, genus, and pseudo-Frobenius numbers.

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::fiber::{FiberContext, FiberElement, Monoid};
use crate::semigroup::{gcd, NumericalSemigroup};

/// Minimal generators of `s` outside `d * delta` -- the unique minimal set
/// `A` with `s = <A> + d*delta`.
pub fn relative_msg(ctx: &FiberContext, s: &NumericalSemigroup) -> Result<Vec<u64>> {
    Ok(ctx.in_fiber(s)?.relative_msg)
}

/// The number of relative minimal generators.
pub fn rank(ctx: &FiberContext, s: &NumericalSemigroup) -> Result<usize> {
    Ok(ctx.in_fiber(s)?.rank)
}

/// Rank of a monoid with quotient delta; `d * delta` itself has rank 0.
pub fn monoid_rank(ctx: &FiberContext, m: &Monoid) -> Result<usize> {
    let q = m.quotient(ctx.d());
    if q.as_semigroup() != Some(ctx.delta()) {
        return Err(Error::WrongQuotient {
            actual: Box::new(q),
        });
    }
    Ok(m.msg().iter().filter(|&&x| !ctx.in_d_delta(x)).count())
}

/// The smallest element of `s` outside `d * delta`; equals the smallest
/// relative minimal generator.
pub fn mu(ctx: &FiberContext, s: &NumericalSemigroup) -> Result<u64> {
    let a = relative_msg(ctx, s)?;
    a.first().copied().ok_or(Error::IsDDelta)
}

/// The maximal rank over the fiber, `(d-1) * m(delta)`, together with a
/// semigroup attaining it.
#[derive(Clone, Debug)]
pub struct MaxRankWitness {
    pub bound: u64,
    pub element: FiberElement,
}

/// Builds the extremal-rank witness: take the smallest multiple `B` of
/// `d * m(delta)` above `d * F(delta)` and adjoin `B + r` for every residue
/// `r` modulo `d * m(delta)` not divisible by `d`.
pub fn max_rank_witness(ctx: &FiberContext) -> Result<MaxRankWitness> {
    let d = ctx.d();
    let dm = checked_mul(d, ctx.delta().multiplicity())?;
    let df = ctx.d_frobenius();
    let b = checked_mul(df / dm + 1, dm)?;
    let mut gens: Vec<u64> = (0..dm)
        .filter(|r| r % d != 0)
        .map(|r| checked_add(b, r))
        .collect::<Result<_>>()?;
    let bound = gens.len() as u64;
    gens.extend_from_slice(ctx.d_delta_msg());
    let s = NumericalSemigroup::from_generators(&gens).expect("b + 1 is coprime to d");
    let element = ctx.fiber_element_unchecked(s);
    assert_eq!(
        element.rank as u64, bound,
        "the witness attains the maximal rank"
    );
    Ok(MaxRankWitness { bound, element })
}

/// The embedding dimension of a fiber element, decomposed as
/// `e(delta) + rank - |absorbed|` where `absorbed` collects the generators
/// `n` of delta whose multiple `d * n` already lies in the monoid generated
/// by the relative generators.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EmbeddingDim {
    pub e: usize,
    pub absorbed: Vec<u64>,
}

pub fn embedding_dim_via_rank(ctx: &FiberContext, s: &NumericalSemigroup) -> Result<EmbeddingDim> {
    let fe = ctx.in_fiber(s)?;
    let d = ctx.d();
    let bound = checked_mul(d, *ctx.delta().msg().last().expect("nonempty"))?;
    let reach = coin_reachable(&fe.relative_msg, bound);
    let absorbed: Vec<u64> = ctx
        .delta()
        .msg()
        .iter()
        .copied()
        .filter(|&n| reach[(d * n) as usize])
        .collect();
    let e = ctx.delta().embedding_dimension() + fe.rank - absorbed.len();
    debug_assert_eq!(e, s.embedding_dimension());
    Ok(EmbeddingDim { e, absorbed })
}

/// Parameters of a rank-one fiber element: `x` in delta, outside `d * delta`,
/// and coprime to `d`.
#[derive(Clone, Copy, Debug)]
pub struct RankOneSpec<'a> {
    ctx: &'a FiberContext,
    x: u64,
}

/// Closed-form invariants of a rank-one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RankOneInvariants {
    pub frobenius: i64,
    pub genus: u64,
}

impl<'a> RankOneSpec<'a> {
    pub fn new(ctx: &'a FiberContext, x: u64) -> Result<Self> {
        if x == 0 || !ctx.delta().contains(x) {
            return Err(Error::NotInDelta { x });
        }
        if gcd(x, ctx.d()) != 1 {
            return Err(Error::NotCoprime {
                gcd: gcd(x, ctx.d()),
            });
        }
        if ctx.in_d_delta(x) {
            return Err(Error::InDDelta { x });
        }
        Ok(RankOneSpec { ctx, x })
    }

    pub fn ctx(&self) -> &FiberContext {
        self.ctx
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    /// The semigroup `<x> + d*delta`; it has rank one and `mu = x`.
    pub fn build(&self) -> Result<FiberElement> {
        let mut gens = vec![self.x];
        gens.extend_from_slice(self.ctx.d_delta_msg());
        let s = NumericalSemigroup::from_generators(&gens).expect("x is coprime to d");
        let fe = self.ctx.fiber_element_unchecked(s);
        debug_assert_eq!(fe.relative_msg, vec![self.x]);
        Ok(fe)
    }

    /// Closed forms `F = d*F(delta) + (d-1)*x` and
    /// `g = d*g(delta) + (d-1)(x-1)/2`; the product `(d-1)(x-1)` is even
    /// whenever `gcd(x, d) = 1`.
    pub fn invariants(&self) -> Result<RankOneInvariants> {
        let d = self.ctx.d();
        let f = self.ctx.delta().frobenius() as u64;
        let frobenius = checked_add(checked_mul(d, f)?, checked_mul(d - 1, self.x)?)?;
        let half = checked_mul(d - 1, self.x - 1)?;
        assert_eq!(half % 2, 0, "(d-1)(x-1) is even when gcd(x,d)=1");
        let genus = checked_add(checked_mul(d, self.ctx.delta().genus())?, half / 2)?;
        Ok(RankOneInvariants {
            frobenius: frobenius as i64,
            genus,
        })
    }

    /// The pseudo-Frobenius numbers, transported from delta by
    /// `f -> d*f + (d-1)*x`; the type is preserved, and the element is
    /// symmetric exactly when delta is.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        let d = self.ctx.d();
        let shift = checked_mul(d - 1, self.x)?;
        self.ctx
            .delta()
            .pseudo_frobenius()?
            .into_iter()
            .map(|f| checked_add(checked_mul(d, f)?, shift))
            .collect()
    }
}

/// A gluing-style combination `<d * msg(delta) u e * msg(t)>` whose quotient
/// by `d` is certified to be delta by recomputation.
#[derive(Clone, Debug)]
pub struct GluingOutcome {
    pub semigroup: NumericalSemigroup,
    /// The recomputed quotient; always equal to the input delta.
    pub quotient: NumericalSemigroup,
}

/// Checks the gluing hypotheses, builds the combination, and certifies its
/// quotient. For `t` the naturals this is `<e> + d*delta` and the corollary
/// hypotheses apply (`e` at least 2 and not a minimal generator of delta);
/// otherwise `d` must lie in `t` without being one of its minimal generators.
pub fn gluing_quotient_check(
    delta: &NumericalSemigroup,
    t: &NumericalSemigroup,
    d: u64,
    e: u64,
) -> Result<GluingOutcome> {
    if d < 2 {
        return Err(Error::BadGluing {
            reason: "d must be at least 2",
        });
    }
    if gcd(d, e) != 1 {
        return Err(Error::BadGluing {
            reason: "d and e must be coprime",
        });
    }
    if e == 0 || !delta.contains(e) {
        return Err(Error::BadGluing {
            reason: "e must be a nonzero element of delta",
        });
    }
    if t.is_naturals() {
        if e < 2 {
            return Err(Error::BadGluing {
                reason: "e must be at least 2",
            });
        }
        if delta.msg().contains(&e) {
            return Err(Error::BadGluing {
                reason: "e must not be a minimal generator of delta",
            });
        }
    } else if !t.contains(d) || t.msg().contains(&d) {
        return Err(Error::BadGluing {
            reason: "d must lie in t without being one of its minimal generators",
        });
    }
    let mut gens: Vec<u64> = delta
        .msg()
        .iter()
        .map(|&n| checked_mul(d, n))
        .collect::<Result<_>>()?;
    for &n in t.msg() {
        gens.push(checked_mul(e, n)?);
    }
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    let quotient = semigroup.quotient(d);
    if quotient != *delta {
        return Err(Error::BadGluing {
            reason: "quotient mismatch",
        });
    }
    Ok(GluingOutcome {
        semigroup,
        quotient,
    })
}

/// Representability table of nonnegative combinations of `gens` over
/// `[0, bound]`; shares the coin-problem kernel shape used by the fiber
/// membership tests.
fn coin_reachable(gens: &[u64], bound: u64) -> Vec<bool> {
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
