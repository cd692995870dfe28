//! Exhaustive integer enumeration for the three destabilization searches:
//! fixed-β tilt-stability walls for truncated characters, destabilizing
//! decompositions in the Kuznetsov lattice, and the mixed-class cone
//! inequality systems. Every solver derives its search bounds exactly from
//! the constraints; [`brute_force_oracle`] re-checks any of them pointwise
//! over an explicit box.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, ToPrimitive};
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constraints::{evaluate, Assignment, ConstraintSystem, EvalEnv, EvalError, VarName};
use crate::lattice::{ChernCharacter, Rational};
use crate::threefold::{
    ku_basis, BasisError, FanoContext, GushelVariant, KuClassCoords, LatticeBasis, NamedClass,
};
use crate::tilt::{
    ch1_beta, ch2_beta, classical_mu, li_bound_check, mu, mu0, normalized_discriminant,
    rotated_charge, slope_cmp, LiBoundStatus, Slope, TiltPoint,
};

/// Sanity ceiling on derived enumeration bounds; anything larger is reported
/// as a numeric-range error instead of looping for hours.
const ENUMERATION_LIMIT: i64 = 1_000_000;

/// Truncated character `ch≤2 = (m0, m1·H, m2·L)` with integer entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruncatedClass {
    pub m0: i64,
    pub m1: i64,
    pub m2: i64,
}

impl TruncatedClass {
    pub fn new(m0: i64, m1: i64, m2: i64) -> Self {
        TruncatedClass { m0, m1, m2 }
    }

    /// Promote to a full character with vanishing `ch₃`.
    pub fn to_chern(&self) -> ChernCharacter {
        ChernCharacter::from_integers(self.m0, self.m1, self.m2, 0)
    }

    /// Truncate a full character; `None` unless `ch₀`, `ch₁`, `ch₂` are
    /// integers that fit in 64 bits (`ch₃` is dropped).
    pub fn from_chern(x: &ChernCharacter) -> Option<Self> {
        Some(TruncatedClass {
            m0: x.r.to_i64()?,
            m1: x.c.to_i64()?,
            m2: x.l.to_i64()?,
        })
    }

    /// As [`to_chern`](Self::to_chern), but reading `m2` in units of
    /// `L/denominator`.
    fn to_chern_scaled(&self, denominator: i64) -> ChernCharacter {
        ChernCharacter::new(
            Rational::from(self.m0),
            Rational::from(self.m1),
            Rational::new(self.m2, denominator),
            Rational::zero(),
        )
    }
}

impl fmt::Display for TruncatedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m0, self.m1, self.m2)
    }
}

impl FromStr for TruncatedClass {
    type Err = SearchError;

    /// Accepts `m0,m1,m2`, with optional whitespace and surrounding parens.
    fn from_str(s: &str) -> Result<Self, SearchError> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<_> = trimmed.split(',').map(str::trim).collect();
        let bad = || SearchError::BadTruncatedClass(s.to_string());
        if parts.len() != 3 {
            return Err(bad());
        }
        let parse = |t: &str| t.parse::<i64>().map_err(|_| bad());
        Ok(TruncatedClass {
            m0: parse(parts[0])?,
            m1: parse(parts[1])?,
            m2: parse(parts[2])?,
        })
    }
}

impl Serialize for TruncatedClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        seq.serialize_element(&self.m0)?;
        seq.serialize_element(&self.m1)?;
        seq.serialize_element(&self.m2)?;
        seq.end()
    }
}

/// One wall: an unordered decomposition of the target together with the
/// unique α² at which the three tilt slopes agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallCandidate {
    /// Canonical order: `pair.0 ≤ pair.1` lexicographically.
    pub pair: (TruncatedClass, TruncatedClass),
    pub alpha_sq_wall: Rational,
}

/// Knobs shared by the enumeration solvers.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// `None` resolves to strict exactly when `ch₁^β(target) > 0`.
    pub strict_ch1_bounds: Option<bool>,
    /// Fallback half-width used when a direction admits no derived bound.
    pub max_rank_cap: i64,
    /// Turn the fallback into a hard error instead.
    pub require_bounded: bool,
    /// `ch₂` entries are enumerated over `ℤ·(L/ch2_denominator)`; results are
    /// reported in those units. 1 keeps everything in `L`.
    pub ch2_denominator: i64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            strict_ch1_bounds: None,
            max_rank_cap: 60,
            require_bounded: false,
            ch2_denominator: 1,
        }
    }
}

fn validate_options(opts: &SearchOptions) -> Result<(), SearchError> {
    if opts.max_rank_cap < 1 {
        return Err(SearchError::InvalidOptions(format!(
            "max_rank_cap must be positive, got {}",
            opts.max_rank_cap
        )));
    }
    if opts.ch2_denominator < 1 {
        return Err(SearchError::InvalidOptions(format!(
            "ch2_denominator must be positive, got {}",
            opts.ch2_denominator
        )));
    }
    Ok(())
}

/// The options a search actually ran with, after defaults are resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvedOptions {
    pub strict_ch1_bounds: bool,
    pub max_rank_cap: i64,
    pub require_bounded: bool,
    pub ch2_denominator: i64,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("target lies outside the tilted heart: ch1^beta = {0} < 0")]
    TargetNotInHeart(Rational),
    #[error("search region is unbounded in the {direction} direction")]
    Unbounded { direction: String },
    #[error("invalid search options: {0}")]
    InvalidOptions(String),
    #[error("cone preset {preset} does not apply to genus {genus}")]
    PresetGenusMismatch { preset: ConePreset, genus: i64 },
    #[error("no cone preset covers genus {0}")]
    ConePresetUndefined(i64),
    #[error("genus 6 needs an explicit Gushel-Mukai variant here")]
    VariantRequired,
    #[error("intermediate value exceeds the exact-enumeration range: {0}")]
    NumericRange(String),
    #[error("oracle box has {got} interval(s) but the system has {expected} variable(s)")]
    BoxDimension { expected: usize, got: usize },
    #[error("cannot parse truncated class {0:?}: expected three comma-separated integers")]
    BadTruncatedClass(String),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Constraint(#[from] EvalError),
}

/// Result of a fixed-β wall enumeration.
///
/// `target` is echoed in the same `L/ch2_denominator` units the solutions use
/// (so each pair sums to it componentwise); with the default denominator this
/// is the argument unchanged.
#[derive(Clone, Debug, Serialize)]
pub struct WallSearchResult {
    pub target: TruncatedClass,
    pub beta: Rational,
    pub options: ResolvedOptions,
    pub solutions: Vec<WallCandidate>,
    pub complete: bool,
    pub warnings: Vec<String>,
}

// ---------------------------------------------------------------------------
// integer division helpers (exact floor/ceil semantics for either sign)

fn floor_div(n: i128, d: i128) -> i128 {
    let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
    n.div_euclid(d)
}

fn ceil_div(n: i128, d: i128) -> i128 {
    -floor_div(-n, d)
}

fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    BigInt::from(n)
        .sqrt()
        .to_i128()
        .expect("square root is no larger than its argument")
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(|a|,|b|)`.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

// ---------------------------------------------------------------------------
// wall search

/// Exact checker for one `(target, β, genus)` wall instance. Internally every
/// `ch₂` entry is an integer numerator over `denom`, so the whole candidate
/// lattice stays integral.
struct WallProblem<'a> {
    ctx: &'a FanoContext,
    beta: Rational,
    denom: i64,
    /// Target in numerator units: `(m0, m1, denom·m2)`.
    m: TruncatedClass,
    m_ch: ChernCharacter,
    d: i64,
    /// β = p/q in lowest terms, q > 0.
    p: i64,
    q: i64,
    /// q·ch₁^β(target) — the integer height of the ch₁^β window.
    n_total: i64,
    strict: bool,
    /// denom·d·Δnorm(target): shared width of both discriminant windows.
    w_disc: i128,
}

impl<'a> WallProblem<'a> {
    fn new(
        target: &TruncatedClass,
        beta: &Rational,
        ctx: &'a FanoContext,
        strict_ch1_bounds: Option<bool>,
        denom: i64,
    ) -> Result<Self, SearchError> {
        let d = ctx.degree();
        let range = |what: &str| SearchError::NumericRange(what.to_string());
        let p = beta
            .numer()
            .to_i64()
            .filter(|p| p.abs() <= ENUMERATION_LIMIT)
            .ok_or_else(|| range("beta numerator"))?;
        let q = beta
            .denom()
            .to_i64()
            .filter(|q| *q <= ENUMERATION_LIMIT)
            .ok_or_else(|| range("beta denominator"))?;
        for entry in [target.m0, target.m1, target.m2] {
            if entry.abs() > ENUMERATION_LIMIT {
                return Err(range("target entry"));
            }
        }
        let m2_num = target
            .m2
            .checked_mul(denom)
            .ok_or_else(|| range("ch2 numerator"))?;
        let m = TruncatedClass::new(target.m0, target.m1, m2_num);
        let m_ch = m.to_chern_scaled(denom);
        let n_total = i64::try_from(q as i128 * target.m1 as i128 - p as i128 * target.m0 as i128)
            .map_err(|_| range("ch1 window height"))?;
        if n_total < 0 {
            return Err(SearchError::TargetNotInHeart(ch1_beta(&m_ch, beta)));
        }
        let strict = strict_ch1_bounds.unwrap_or(n_total > 0);
        let w_disc = denom as i128 * d as i128 * (target.m1 as i128).pow(2)
            - 2 * target.m0 as i128 * m2_num as i128;
        Ok(WallProblem {
            ctx,
            beta: beta.clone(),
            denom,
            m,
            m_ch,
            d,
            p,
            q,
            n_total,
            strict,
            w_disc,
        })
    }

    /// q·ch₁^β of a candidate — integral, so the window test is exact.
    fn level(&self, x: &TruncatedClass) -> i128 {
        self.q as i128 * x.m1 as i128 - self.p as i128 * x.m0 as i128
    }

    fn level_ok(&self, n: i128) -> bool {
        let top = self.n_total as i128;
        if self.strict {
            0 < n && n < top
        } else {
            0 <= n && n <= top
        }
    }

    /// denom·d·Δnorm(x) ∈ [0, denom·d·Δnorm(target)], all integral.
    fn disc_window_ok(&self, x: &TruncatedClass) -> bool {
        let v = self.denom as i128 * self.d as i128 * (x.m1 as i128).pow(2)
            - 2 * x.m0 as i128 * x.m2 as i128;
        0 <= v && v <= self.w_disc
    }

    fn complement(&self, a: &TruncatedClass) -> Option<TruncatedClass> {
        Some(TruncatedClass {
            m0: self.m.m0.checked_sub(a.m0)?,
            m1: self.m.m1.checked_sub(a.m1)?,
            m2: self.m.m2.checked_sub(a.m2)?,
        })
    }

    /// Full wall test. All five conditions are checked here, so the same
    /// function serves the bounded solver and the pointwise oracle:
    /// both pieces lie in the ch₁^β window, both discriminant windows hold,
    /// the slope-equality line in α² has a unique root, that root is
    /// positive, and at it the three slope *values* agree (finite).
    fn candidate_check(&self, a: &TruncatedClass) -> Option<Rational> {
        let b = self.complement(a)?;
        let n = self.level(a);
        if !self.level_ok(n) || !self.level_ok(self.n_total as i128 - n) {
            return None;
        }
        if !self.disc_window_ok(a) || !self.disc_window_ok(&b) {
            return None;
        }
        // Slope equality at (α², β) is linear in α² with leading coefficient
        // d·K; K = 0 means the slopes agree nowhere or everywhere — not a
        // wall either way.
        let k = a.m0 as i128 * self.m.m1 as i128 - self.m.m0 as i128 * a.m1 as i128;
        if k == 0 {
            return None;
        }
        let a_ch = a.to_chern_scaled(self.denom);
        let b_ch = b.to_chern_scaled(self.denom);
        let k_r = &(&a_ch.r * &self.m_ch.c) - &(&self.m_ch.r * &a_ch.c);
        let l_r = &(&a_ch.l * &self.m_ch.r) - &(&self.m_ch.l * &a_ch.r);
        let c_r = &(&a_ch.c * &self.m_ch.l) - &(&self.m_ch.c * &a_ch.l);
        let two = Rational::from(2);
        let s = -&self.beta.square()
            - &(&(&two * &(&(&l_r * &self.beta) + &c_r)) / &(&Rational::from(self.d) * &k_r));
        if !s.is_positive() {
            return None;
        }
        let pt = TiltPoint::new(s.clone(), self.beta.clone()).expect("root is positive");
        let sm = mu(&self.m_ch, &pt, self.ctx);
        if !matches!(sm, Slope::Finite(_)) {
            return None;
        }
        if mu(&a_ch, &pt, self.ctx) != sm || mu(&b_ch, &pt, self.ctx) != sm {
            return None;
        }
        Some(s)
    }

    /// Integer interval for `a2` (numerator units) allowed by the two
    /// discriminant windows at fixed `(a0, a1)`; `None` when the windows are
    /// already incompatible or nothing constrains `a2`.
    fn a2_interval(&self, a0: i64, a1: i64) -> Option<(i64, i64)> {
        let dd = self.denom as i128 * self.d as i128;
        let w = self.w_disc;
        let b0 = self.m.m0 - a0;
        let b1 = self.m.m1 - a1;
        let xa = dd * (a1 as i128).pow(2);
        let xb = dd * (b1 as i128).pow(2);
        // Solve 0 ≤ x − coeff·t ≤ w for t.
        let window = |coeff: i128, x: i128| -> (i128, i128) {
            if coeff > 0 {
                (ceil_div(x - w, coeff), floor_div(x, coeff))
            } else {
                (ceil_div(x, coeff), floor_div(x - w, coeff))
            }
        };
        let mut lo: Option<i128> = None;
        let mut hi: Option<i128> = None;
        let mut merge = |l: i128, h: i128| {
            lo = Some(lo.map_or(l, |cur| cur.max(l)));
            hi = Some(hi.map_or(h, |cur| cur.min(h)));
        };
        if a0 != 0 {
            let (l, h) = window(2 * a0 as i128, xa);
            merge(l, h);
        } else if xa > w {
            return None;
        }
        if b0 != 0 {
            // Window on b2 = m2 − a2, flipped back to a2.
            let (l, h) = window(2 * b0 as i128, xb);
            merge(self.m.m2 as i128 - h, self.m.m2 as i128 - l);
        } else if xb > w {
            return None;
        }
        let (l, h) = (lo?, hi?);
        Some((i64::try_from(l).ok()?, i64::try_from(h).ok()?))
    }
}

/// Enumerate every wall decomposition of `target` at fixed `β`.
///
/// The rank direction is bounded exactly: writing Λ = ch₂^β(target) and
/// T = ch₁^β(target), the two discriminant windows force
/// |ch₀(A)|·|ch₀(B)| ≤ c₀·(|ch₀(A)|+|ch₀(B)|) with
/// c₀ = d·(Δnorm(target)+T²)/(2|Λ|), hence |ch₀(A)| ≤ |ch₀(target)| + 2c₀.
/// When Λ = 0 the direction is genuinely unbounded and the cap applies (or an
/// error, under `require_bounded`). For each rank, ch₁ runs over the integer
/// levels of the ch₁^β window and ch₂ over the exact discriminant interval.
pub fn find_tilt_walls(
    target: &TruncatedClass,
    beta: &Rational,
    ctx: &FanoContext,
    opts: &SearchOptions,
) -> Result<WallSearchResult, SearchError> {
    validate_options(opts)?;
    let problem = WallProblem::new(target, beta, ctx, opts.strict_ch1_bounds, opts.ch2_denominator)?;
    let resolved = ResolvedOptions {
        strict_ch1_bounds: problem.strict,
        max_rank_cap: opts.max_rank_cap,
        require_bounded: opts.require_bounded,
        ch2_denominator: opts.ch2_denominator,
    };
    let mut warnings = Vec::new();
    let mut complete = true;
    if problem.w_disc < 0 {
        // Δnorm(target) < 0: the discriminant windows are empty.
        return Ok(WallSearchResult {
            target: problem.m,
            beta: beta.clone(),
            options: resolved,
            solutions: Vec::new(),
            complete,
            warnings,
        });
    }
    let lambda = ch2_beta(&problem.m_ch, beta, problem.d);
    let rank_bound = if lambda.is_zero() {
        if opts.require_bounded {
            return Err(SearchError::Unbounded {
                direction: "rank (ch2^beta of the target vanishes)".to_string(),
            });
        }
        complete = false;
        warnings.push(format!(
            "ch2^beta(target) = 0 leaves the rank direction unbounded; \
             enumeration capped at |ch0| <= {}",
            opts.max_rank_cap
        ));
        opts.max_rank_cap
    } else {
        let t_rat = Rational::new(problem.n_total, problem.q);
        let dm = normalized_discriminant(&problem.m_ch, ctx);
        let bound = &Rational::from(problem.m.m0.abs())
            + &(&(&Rational::from(problem.d) * &(&dm + &t_rat.square())) / &lambda.abs());
        bound
            .floor()
            .to_i64()
            .filter(|r| *r <= ENUMERATION_LIMIT)
            .ok_or_else(|| SearchError::NumericRange("derived rank bound".to_string()))?
    };

    let ranks: Vec<i64> = (-rank_bound..=rank_bound).collect();
    let per_rank: Vec<Vec<(TruncatedClass, Rational)>> = ranks
        .par_iter()
        .map(|&a0| {
            let mut out = Vec::new();
            let (n_lo, n_hi) = if problem.strict {
                (1, problem.n_total - 1)
            } else {
                (0, problem.n_total)
            };
            for n in n_lo..=n_hi {
                let num = n as i128 + problem.p as i128 * a0 as i128;
                if num.rem_euclid(problem.q as i128) != 0 {
                    continue;
                }
                let Ok(a1) = i64::try_from(num / problem.q as i128) else {
                    continue;
                };
                let Some((lo, hi)) = problem.a2_interval(a0, a1) else {
                    continue;
                };
                for a2 in lo..=hi {
                    let cand = TruncatedClass::new(a0, a1, a2);
                    if let Some(s) = problem.candidate_check(&cand) {
                        out.push((cand, s));
                    }
                }
            }
            out
        })
        .collect();

    let mut seen: BTreeSet<(TruncatedClass, TruncatedClass)> = BTreeSet::new();
    let mut solutions = Vec::new();
    for (a, s) in per_rank.into_iter().flatten() {
        let b = problem.complement(&a).expect("checked in candidate_check");
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        if seen.insert((x, y)) {
            solutions.push(WallCandidate {
                pair: (x, y),
                alpha_sq_wall: s,
            });
        }
    }
    solutions.sort_by(|u, v| u.pair.cmp(&v.pair));
    Ok(WallSearchResult {
        target: problem.m,
        beta: beta.clone(),
        options: resolved,
        solutions,
        complete,
        warnings,
    })
}

/// Drop every candidate in which either member violates the genus's stronger
/// Bogomolov-type bound; candidates whose members are all consistent or
/// inapplicable survive. Members are read in plain `L` units.
pub fn filter_by_li_bound(cands: &[WallCandidate], ctx: &FanoContext) -> Vec<WallCandidate> {
    cands
        .iter()
        .filter(|cand| {
            li_bound_check(&cand.pair.0.to_chern(), ctx) != LiBoundStatus::Violated
                && li_bound_check(&cand.pair.1.to_chern(), ctx) != LiBoundStatus::Violated
        })
        .cloned()
        .collect()
}

// ---------------------------------------------------------------------------
// Kuznetsov-lattice destabilizer search

/// Integer form of the four destabilizer conditions at a fixed point: for
/// `[A] = a·v + b·w`, `[B] = c·v + d·w` it checks additivity to the target,
/// the closed im Z⁰ product window, strict μ⁰(A) > μ⁰(B) under Slope
/// semantics, and the Ext¹ budget from the Euler form. All comparisons reduce
/// to integers, so this is cheap enough for pointwise oracle scans.
pub struct DestabPredicate {
    ta: i64,
    tb: i64,
    // im Z⁰ / re Z⁰ of the basis classes, cleared to integers by a shared
    // positive factor per row.
    pa: i128,
    pb: i128,
    tau: i128,
    ra: i128,
    rb: i128,
    rtau: i128,
    e00: i128,
    e01_10: i128,
    e11: i128,
    bound: i128,
}

fn clear_pair(x: &Rational, y: &Rational) -> Result<(i128, i128), SearchError> {
    let den = x.denom().lcm(y.denom());
    let to_int = |v: &Rational| -> Option<i128> {
        let cleared = v * &Rational::from(den.clone());
        if cleared.is_integer() {
            cleared.numer().to_i128()
        } else {
            None
        }
    };
    let err = || SearchError::NumericRange("cleared charge coefficients".to_string());
    Ok((to_int(x).ok_or_else(err)?, to_int(y).ok_or_else(err)?))
}

impl DestabPredicate {
    pub fn new(
        target: &KuClassCoords,
        ctx: &FanoContext,
        pt: &TiltPoint,
        ext1_bound: i64,
    ) -> Result<Self, SearchError> {
        let ku = ku_basis(ctx)?;
        let zv = rotated_charge(&ku.b1, pt, ctx);
        let zw = rotated_charge(&ku.b2, pt, ctx);
        let (pa, pb) = clear_pair(&zv.im, &zw.im)?;
        let (ra, rb) = clear_pair(&zv.re, &zw.re)?;
        let entry = |i: usize, j: usize| -> Result<i128, SearchError> {
            ku.euler_matrix[i][j]
                .to_i64()
                .map(i128::from)
                .ok_or_else(|| SearchError::NumericRange("Euler matrix entry".to_string()))
        };
        let (e00, e01, e10, e11) = (entry(0, 0)?, entry(0, 1)?, entry(1, 0)?, entry(1, 1)?);
        Ok(DestabPredicate {
            ta: target.a,
            tb: target.b,
            pa,
            pb,
            tau: pa * target.a as i128 + pb * target.b as i128,
            ra,
            rb,
            rtau: ra * target.a as i128 + rb * target.b as i128,
            e00,
            e01_10: e01 + e10,
            e11,
            bound: ext1_bound as i128,
        })
    }

    /// im Z⁰(target), as the cleared integer.
    pub fn target_im(&self) -> i128 {
        self.tau
    }

    fn qform(&self, x: i128, y: i128) -> i128 {
        self.e00 * x * x + self.e01_10 * x * y + self.e11 * y * y
    }

    pub fn check(&self, tuple: [i64; 4]) -> bool {
        let [a, b, c, d] = tuple.map(i128::from);
        if a + c != self.ta as i128 || b + d != self.tb as i128 {
            return false;
        }
        // A destabilizing sequence has nonzero ends; the zero class has no
        // slope, so trivial decompositions are not solutions.
        if (a, b) == (0, 0) || (c, d) == (0, 0) {
            return false;
        }
        let im_a = self.pa * a + self.pb * b;
        let im_b = self.tau - im_a;
        if im_a * self.tau < 0 || im_b * self.tau < 0 {
            return false;
        }
        // μ⁰(A) > μ⁰(B); a nonpositive imaginary part means slope +∞.
        let re_a = self.ra * a + self.rb * b;
        let re_b = self.rtau - re_a;
        let slope_gt = match (im_a > 0, im_b > 0) {
            (true, true) => re_b * im_a - re_a * im_b > 0,
            (false, true) => true,
            _ => false,
        };
        if !slope_gt {
            return false;
        }
        2 - self.qform(a, b) - self.qform(c, d) <= self.bound
    }
}

/// Result of a Kuznetsov-lattice destabilizer enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct DestabResult {
    pub target: KuClassCoords,
    pub point: TiltPoint,
    pub ext1_bound: i64,
    pub solutions: Vec<[i64; 4]>,
    pub complete: bool,
    pub warnings: Vec<String>,
}

/// Enumerate all `(a, b, c, d)` with `[A] = a·v + b·w`, `[B] = c·v + d·w`
/// passing [`DestabPredicate`].
///
/// The im Z⁰ window slices the `(a, b)` plane into finitely many integer
/// levels of the cleared linear form; along each level line the Ext¹ budget
/// is an upward parabola in the line parameter (the Euler form is negative
/// on the line direction for every supported genus), giving exact integer
/// bounds. Degenerate cases — im Z⁰(target) = 0, or a direction on which the
/// Euler form fails to be negative — fall back to `max_rank_cap` with a
/// completeness warning, or error under `require_bounded`.
pub fn find_ku_destabilizers(
    target: &KuClassCoords,
    ctx: &FanoContext,
    pt: &TiltPoint,
    ext1_bound: i64,
    opts: &SearchOptions,
) -> Result<DestabResult, SearchError> {
    validate_options(opts)?;
    let pred = DestabPredicate::new(target, ctx, pt, ext1_bound)?;
    let mut warnings = Vec::new();
    let mut complete = true;
    let capped_scan = |warnings: &mut Vec<String>, why: &str| -> Result<BTreeSet<[i64; 4]>, SearchError> {
        if opts.require_bounded {
            return Err(SearchError::Unbounded {
                direction: why.to_string(),
            });
        }
        warnings.push(format!(
            "{why}; enumeration capped at coefficients in [-{0}, {0}] — \
             the list may be incomplete",
            opts.max_rank_cap
        ));
        let cap = opts.max_rank_cap;
        let rows: Vec<i64> = (-cap..=cap).collect();
        let found: Vec<Vec<[i64; 4]>> = rows
            .par_iter()
            .map(|&a| {
                let mut out = Vec::new();
                for b in -cap..=cap {
                    let tuple = [a, b, target.a - a, target.b - b];
                    if pred.check(tuple) {
                        out.push(tuple);
                    }
                }
                out
            })
            .collect();
        Ok(found.into_iter().flatten().collect())
    };

    let solutions: BTreeSet<[i64; 4]> = if pred.tau == 0 {
        complete = false;
        capped_scan(
            &mut warnings,
            "im Z0(target) = 0 makes the im-window vacuous",
        )?
    } else {
        let (g0, x0, y0) = egcd(pred.pa, pred.pb);
        let (kb, ka) = (pred.pb / g0, pred.pa / g0);
        let q_dir = pred.qform(kb, -ka);
        if q_dir >= 0 {
            complete = false;
            capped_scan(
                &mut warnings,
                "the Euler form is not negative along the level-line direction",
            )?
        } else {
            let (lo, hi) = (pred.tau.min(0), pred.tau.max(0));
            if hi - lo > ENUMERATION_LIMIT as i128 {
                return Err(SearchError::NumericRange("im-window level count".to_string()));
            }
            let p2 = -2 * q_dir;
            let levels: Vec<i128> = (lo..=hi).filter(|l| l.rem_euclid(g0) == 0).collect();
            let per_level: Vec<Vec<[i64; 4]>> = levels
                .par_iter()
                .map(|&level| {
                    let mut out = Vec::new();
                    let s = level / g0;
                    let (a0, b0) = (x0 * s, y0 * s);
                    let (c0, d0) = (pred.ta as i128 - a0, pred.tb as i128 - b0);
                    // Ext budget along A(k) = (a0 + k·kb, b0 − k·ka):
                    // q(A(k)) + q(B(k)) ≥ 2 − bound, an upward parabola in k
                    // after negation.
                    let l1 = 2 * pred.e00 * a0 * kb
                        + pred.e01_10 * (b0 * kb - a0 * ka)
                        - 2 * pred.e11 * b0 * ka
                        - 2 * pred.e00 * c0 * kb
                        + pred.e01_10 * (c0 * ka - d0 * kb)
                        + 2 * pred.e11 * d0 * ka;
                    let l0 = pred.qform(a0, b0) + pred.qform(c0, d0);
                    let p1 = -l1;
                    let p0 = 2 - pred.bound - l0;
                    let disc = p1 * p1 - 4 * p2 * p0;
                    if disc < 0 {
                        return out;
                    }
                    let sq = isqrt_i128(disc);
                    // Conservative integer root bounds, widened one step;
                    // the exact predicate filters the edges.
                    let k_lo = floor_div(-p1 - sq, 2 * p2) - 1;
                    let k_hi = ceil_div(-p1 + sq, 2 * p2) + 1;
                    for k in k_lo..=k_hi {
                        let (aa, bb) = (a0 + k * kb, b0 - k * ka);
                        let (Ok(aa), Ok(bb)) = (i64::try_from(aa), i64::try_from(bb)) else {
                            continue;
                        };
                        let (Some(cc), Some(dd)) =
                            (pred.ta.checked_sub(aa), pred.tb.checked_sub(bb))
                        else {
                            continue;
                        };
                        let tuple = [aa, bb, cc, dd];
                        if pred.check(tuple) {
                            out.push(tuple);
                        }
                    }
                    out
                })
                .collect();
            per_level.into_iter().flatten().collect()
        }
    };

    Ok(DestabResult {
        target: *target,
        point: pt.clone(),
        ext1_bound,
        solutions: solutions.into_iter().collect(),
        complete,
        warnings,
    })
}

// ---------------------------------------------------------------------------
// cone inequality systems

/// The two shipped cone systems: `A8` for genus 7, 8, 9, 10, 12 and `A9` for
/// the genus-6 (Gushel–Mukai) case with its involution-pullback condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConePreset {
    A8,
    A9,
}

impl fmt::Display for ConePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConePreset::A8 => write!(f, "A8"),
            ConePreset::A9 => write!(f, "A9"),
        }
    }
}

impl FromStr for ConePreset {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        match s.to_ascii_lowercase().as_str() {
            "a8" => Ok(ConePreset::A8),
            "a9" => Ok(ConePreset::A9),
            other => Err(SearchError::InvalidOptions(format!(
                "unknown cone preset {other:?}; expected A8 or A9"
            ))),
        }
    }
}

/// The preset a genus's cone argument uses.
pub fn preset_for_genus(ctx: &FanoContext) -> Result<ConePreset, SearchError> {
    match ctx.genus() {
        6 => Ok(ConePreset::A9),
        7 | 8 | 9 | 10 | 12 => Ok(ConePreset::A8),
        g => Err(SearchError::ConePresetUndefined(g)),
    }
}

fn check_preset_genus(preset: ConePreset, ctx: &FanoContext) -> Result<(), SearchError> {
    let ok = matches!(
        (preset, ctx.genus()),
        (ConePreset::A8, 7 | 8 | 9 | 10 | 12) | (ConePreset::A9, 6)
    );
    if ok {
        Ok(())
    } else {
        Err(SearchError::PresetGenusMismatch {
            preset,
            genus: ctx.genus(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeResult {
    pub preset: ConePreset,
    pub genus: i64,
    /// `[a, b, c]` for `A8`; projected `[a, b]` for `A9`.
    pub solutions: Vec<Vec<i64>>,
    pub complete: bool,
    pub warnings: Vec<String>,
}

/// Affine form `k·(a,b,c) + c0` over the three unknowns.
#[derive(Clone, Debug)]
struct Lin {
    k: [Rational; 3],
    c0: Rational,
}

impl Lin {
    fn constant(c0: Rational) -> Self {
        Lin {
            k: [Rational::zero(), Rational::zero(), Rational::zero()],
            c0,
        }
    }

    fn scale(&self, f: &Rational) -> Lin {
        Lin {
            k: [&self.k[0] * f, &self.k[1] * f, &self.k[2] * f],
            c0: &self.c0 * f,
        }
    }

    fn add(&self, other: &Lin) -> Lin {
        Lin {
            k: [
                &self.k[0] + &other.k[0],
                &self.k[1] + &other.k[1],
                &self.k[2] + &other.k[2],
            ],
            c0: &self.c0 + &other.c0,
        }
    }

    fn sub(&self, other: &Lin) -> Lin {
        self.add(&other.scale(&Rational::from(-1)))
    }

    /// Pin one variable, folding its contribution into the constant.
    fn substitute(&self, var: usize, value: i64) -> Lin {
        let mut k = self.k.clone();
        let c0 = &self.c0 + &(&k[var] * &Rational::from(value));
        k[var] = Rational::zero();
        Lin { k, c0 }
    }
}

/// One constraint `lin > 0` (strict) or `lin ≥ 0`.
#[derive(Clone, Debug)]
struct LinCon {
    lin: Lin,
    strict: bool,
}

/// Exact Fourier–Motzkin step: project the conjunction onto the complement of
/// `var`. Combinations take positive multipliers, so strictness is inherited
/// from either parent.
fn fm_eliminate(cons: &[LinCon], var: usize) -> Vec<LinCon> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut rest = Vec::new();
    for con in cons {
        match con.lin.k[var].signum() {
            0 => rest.push(con.clone()),
            1 => lower.push(con.clone()),
            _ => upper.push(con.clone()),
        }
    }
    for lo in &lower {
        for hi in &upper {
            let combined = lo
                .lin
                .scale(&hi.lin.k[var].abs())
                .add(&hi.lin.scale(&lo.lin.k[var]));
            debug_assert!(combined.k[var].is_zero());
            rest.push(LinCon {
                lin: combined,
                strict: lo.strict || hi.strict,
            });
        }
    }
    rest
}

/// Integer interval allowed for `var` by constraints that mention only it.
/// `Ok(None)` means a constant constraint already fails; an interval with
/// `lo > hi` is simply empty; a missing side is a genuine unbounded
/// direction and becomes an error.
fn integer_interval(cons: &[LinCon], var: usize) -> Result<Option<(i64, i64)>, SearchError> {
    let mut lower: Option<(Rational, bool)> = None;
    let mut upper: Option<(Rational, bool)> = None;
    for con in cons {
        let kv = &con.lin.k[var];
        if kv.is_zero() {
            let ok = if con.strict {
                con.lin.c0.is_positive()
            } else {
                !con.lin.c0.is_negative()
            };
            if !ok {
                return Ok(None);
            }
            continue;
        }
        let bound = &(-&con.lin.c0) / kv;
        use std::cmp::Ordering::{Equal, Greater, Less};
        if kv.is_positive() {
            lower = Some(match lower {
                None => (bound, con.strict),
                Some((cur, cur_strict)) => match bound.cmp(&cur) {
                    Greater => (bound, con.strict),
                    Equal => (cur, cur_strict || con.strict),
                    Less => (cur, cur_strict),
                },
            });
        } else {
            upper = Some(match upper {
                None => (bound, con.strict),
                Some((cur, cur_strict)) => match bound.cmp(&cur) {
                    Less => (bound, con.strict),
                    Equal => (cur, cur_strict || con.strict),
                    Greater => (cur, cur_strict),
                },
            });
        }
    }
    let names = ["a", "b", "c"];
    let (Some((lv, ls)), Some((hv, hs))) = (lower, upper) else {
        return Err(SearchError::Unbounded {
            direction: names[var].to_string(),
        });
    };
    let one = BigInt::from(1);
    let l = if ls { lv.floor() + &one } else { lv.ceil() };
    let h = if hs { hv.ceil() - &one } else { hv.floor() };
    let to = |v: BigInt| {
        v.to_i64()
            .filter(|x| x.abs() <= ENUMERATION_LIMIT)
            .ok_or_else(|| SearchError::NumericRange("cone variable bound".to_string()))
    };
    Ok(Some((to(l)?, to(h)?)))
}

fn substitute_all(cons: &[LinCon], var: usize, value: i64) -> Vec<LinCon> {
    cons.iter()
        .map(|con| LinCon {
            lin: con.lin.substitute(var, value),
            strict: con.strict,
        })
        .collect()
}

/// Shared data for one cone instance.
struct ConeInstance {
    pt: TiltPoint,
    ku: LatticeBasis,
    e: ChernCharacter,
    ix: ChernCharacter,
}

impl ConeInstance {
    fn new(ctx: &FanoContext) -> Result<Self, SearchError> {
        Ok(ConeInstance {
            pt: cone_point(ctx)?,
            ku: ku_basis(ctx)?,
            e: ctx
                .named_class(NamedClass::E)
                .expect("the bundle class exists for every Kuznetsov genus"),
            ix: ctx
                .named_class(NamedClass::IdealOfPoint)
                .expect("defined for every genus"),
        })
    }

    /// Exact re-check of a lattice point with real class arithmetic and Slope
    /// semantics; the authoritative test behind the linearized system.
    fn predicate(&self, preset: ConePreset, ctx: &FanoContext, a: i64, b: i64, c: i64) -> bool {
        use std::cmp::Ordering::{Greater, Less};
        if a >= 0 || c <= 0 {
            return false;
        }
        let vw = self.ku.combine(a, b);
        let b_ch = &vw + &self.e.scale(&Rational::from(c));
        let a_ch = &self.ix - &b_ch;
        let im = |x: &ChernCharacter| rotated_charge(x, &self.pt, ctx).im;
        if im(&a_ch).is_negative() || !im(&b_ch).is_positive() {
            return false;
        }
        let slope = |x: &ChernCharacter| mu0(x, &self.pt, ctx);
        let mu_b = slope(&b_ch);
        if slope_cmp(&slope(&self.ix), &mu_b) != Greater {
            return false;
        }
        match preset {
            ConePreset::A8 => {
                let ker = self.ku.combine(-a, -b);
                if !im(&ker).is_positive() {
                    return false;
                }
                if slope_cmp(&slope(&ker), &slope(&self.e)) != Less {
                    return false;
                }
                if slope_cmp(&mu_b, &slope(&self.e)) != Greater {
                    return false;
                }
            }
            ConePreset::A9 => {
                // Involution pullback of A: subtract the (3−c)·E correction.
                let ia = &a_ch - &self.e.scale(&Rational::from(3 - c));
                if im(&ia).is_negative() {
                    return false;
                }
                if slope_cmp(&mu_b, &slope(&self.e)) == Less {
                    return false;
                }
            }
        }
        // Negated conclusion: the v,w-part sits strictly below E in
        // classical slope.
        slope_cmp(&classical_mu(&vw, ctx), &classical_mu(&self.e, ctx)) == Less
    }

    /// The constraint conjunction, linearized over (a, b, c). Slope
    /// comparisons are cross-multiplied under the im-positivity conjuncts
    /// that accompany them, so the linear system cuts out exactly the same
    /// integer set as [`predicate`](Self::predicate).
    fn system(&self, preset: ConePreset, ctx: &FanoContext) -> Vec<LinCon> {
        let im = |x: &ChernCharacter| rotated_charge(x, &self.pt, ctx).im;
        let re = |x: &ChernCharacter| rotated_charge(x, &self.pt, ctx).re;
        let lin = |f: &dyn Fn(&ChernCharacter) -> Rational| Lin {
            k: [f(&self.ku.b1), f(&self.ku.b2), f(&self.e)],
            c0: Rational::zero(),
        };
        let b_im = lin(&im);
        let b_re = lin(&re);
        let im_e = im(&self.e);
        let re_e = re(&self.e);
        let im_ix = im(&self.ix);
        let re_ix = re(&self.ix);
        assert!(
            im_e.is_positive() && im_ix.is_positive(),
            "reference classes must have positive im Z0 at the preset point"
        );
        // A = I_x − B.
        let a_im = Lin::constant(im_ix.clone()).sub(&b_im);
        let mut cons = vec![
            // im Z⁰(A) ≥ 0, im Z⁰(B) > 0.
            LinCon {
                lin: a_im.clone(),
                strict: false,
            },
            LinCon {
                lin: b_im.clone(),
                strict: true,
            },
            // μ⁰(I_x) > μ⁰(B)  ⟺  re(B)·im(I_x) − re(I_x)·im(B) > 0.
            LinCon {
                lin: b_re.scale(&im_ix).sub(&b_im.scale(&re_ix)),
                strict: true,
            },
        ];
        match preset {
            ConePreset::A8 => {
                let ker_im = lin(&im).scale(&Rational::from(-1)).substitute(2, 0);
                let ker_re = lin(&re).scale(&Rational::from(-1)).substitute(2, 0);
                // im Z⁰(ker) > 0 and μ⁰(ker) < μ⁰(E).
                cons.push(LinCon {
                    lin: ker_im.clone(),
                    strict: true,
                });
                cons.push(LinCon {
                    lin: ker_re.scale(&im_e).sub(&ker_im.scale(&re_e)),
                    strict: true,
                });
                // μ⁰(B) > μ⁰(E).
                cons.push(LinCon {
                    lin: b_im.scale(&re_e).sub(&b_re.scale(&im_e)),
                    strict: true,
                });
            }
            ConePreset::A9 => {
                // im Z⁰(i*A) ≥ 0 with i*A = A − (3−c)·E; the c-coefficient
                // cancels, leaving A − 3E plus c-independence.
                let correction = Lin {
                    k: [Rational::zero(), Rational::zero(), im_e.clone()],
                    c0: &Rational::from(-3) * &im_e,
                };
                cons.push(LinCon {
                    lin: a_im.add(&correction),
                    strict: false,
                });
                // μ⁰(B) ≥ μ⁰(E).
                cons.push(LinCon {
                    lin: b_im.scale(&re_e).sub(&b_re.scale(&im_e)),
                    strict: false,
                });
            }
        }
        // c > 0 and a < 0.
        cons.push(LinCon {
            lin: Lin {
                k: [Rational::zero(), Rational::zero(), Rational::one()],
                c0: Rational::zero(),
            },
            strict: true,
        });
        cons.push(LinCon {
            lin: Lin {
                k: [Rational::from(-1), Rational::zero(), Rational::zero()],
                c0: Rational::zero(),
            },
            strict: true,
        });
        // Negated conclusion: classical slope of a·v + b·w strictly below
        // E's. With ch₀(w) = 0, ch₁(v) = 0 and a < 0 this cross-multiplies
        // to b − μ(E)·ch₀(v)·a > 0.
        debug_assert!(self.ku.b2.r.is_zero() && self.ku.b1.c.is_zero());
        let mu_e = &self.e.c / &self.e.r;
        cons.push(LinCon {
            lin: Lin {
                k: [
                    -&(&mu_e * &self.ku.b1.r),
                    self.ku.b2.c.clone(),
                    Rational::zero(),
                ],
                c0: Rational::zero(),
            },
            strict: true,
        });
        cons
    }
}

/// Solve a cone preset exactly: Fourier–Motzkin projection bounds `a`, then
/// `b`, then `c`, and every lattice point of the nested intervals is
/// re-checked with the exact Slope-semantics predicate.
pub fn solve_cone_system(preset: ConePreset, ctx: &FanoContext) -> Result<ConeResult, SearchError> {
    check_preset_genus(preset, ctx)?;
    let inst = ConeInstance::new(ctx)?;
    let cons = inst.system(preset, ctx);
    let after_c = fm_eliminate(&cons, 2);
    let after_cb = fm_eliminate(&after_c, 1);
    let mut solutions: BTreeSet<Vec<i64>> = BTreeSet::new();
    if let Some((a_lo, a_hi)) = integer_interval(&after_cb, 0)? {
        for a in a_lo..=a_hi {
            let in_b = substitute_all(&after_c, 0, a);
            let Some((b_lo, b_hi)) = integer_interval(&in_b, 1)? else {
                continue;
            };
            for b in b_lo..=b_hi {
                let in_c = substitute_all(&substitute_all(&cons, 0, a), 1, b);
                let Some((c_lo, c_hi)) = integer_interval(&in_c, 2)? else {
                    continue;
                };
                for c in c_lo..=c_hi {
                    if inst.predicate(preset, ctx, a, b, c) {
                        solutions.insert(match preset {
                            ConePreset::A8 => vec![a, b, c],
                            ConePreset::A9 => vec![a, b],
                        });
                    }
                }
            }
        }
    }
    Ok(ConeResult {
        preset,
        genus: ctx.genus(),
        solutions: solutions.into_iter().collect(),
        complete: true,
        warnings: Vec::new(),
    })
}

/// Exact membership test for one cone lattice point.
pub fn cone_predicate(
    preset: ConePreset,
    ctx: &FanoContext,
    coords: (i64, i64, i64),
) -> Result<bool, SearchError> {
    check_preset_genus(preset, ctx)?;
    let inst = ConeInstance::new(ctx)?;
    Ok(inst.predicate(preset, ctx, coords.0, coords.1, coords.2))
}

// ---------------------------------------------------------------------------
// per-genus fixture tables

/// The `(α₀², β₀)` point at which the skyscraper-projection destabilizer
/// systems are posed.
pub fn skyscraper_destab_point(ctx: &FanoContext) -> Result<TiltPoint, SearchError> {
    let (an, ad, bn, bd) = match ctx.genus() {
        6 => (1, 400, -9, 10),
        7 => (1, 144, -5, 6),
        8 => (1, 625, -22, 25),
        9 => (1, 64, -3, 4),
        10 => (1, 625, -22, 25),
        12 => (1, 625, -21, 25),
        g => return Err(BasisError::KuUndefined(g).into()),
    };
    Ok(TiltPoint::new(Rational::new(an, ad), Rational::new(bn, bd))
        .expect("table points have positive alpha^2"))
}

/// The `(α_g², β_g)` point at which the cone systems are posed.
pub fn cone_point(ctx: &FanoContext) -> Result<TiltPoint, SearchError> {
    let (an, ad, bn, bd) = match ctx.genus() {
        6 => (1, 400, -9, 10),
        7 => (71, 7056, -71, 84),
        8 => (316, 765_625, -122, 125),
        9 => (31, 1600, -31, 40),
        10 => (5, 3267, -10, 11),
        12 => (1, 484, -19, 22),
        g => return Err(BasisError::KuUndefined(g).into()),
    };
    Ok(TiltPoint::new(Rational::new(an, ad), Rational::new(bn, bd))
        .expect("table points have positive alpha^2"))
}

/// Default Ext¹ budget for the skyscraper destabilizer search. Genus 6 needs
/// the variant: the ordinary and special cases have different budgets.
pub fn default_ext1_bound(ctx: &FanoContext) -> Result<i64, SearchError> {
    match ctx.genus() {
        6 => match ctx.gushel_variant() {
            Some(GushelVariant::Ordinary) => Ok(6),
            Some(GushelVariant::Special) => Ok(7),
            None => Err(SearchError::VariantRequired),
        },
        7 => Ok(25),
        9 => Ok(9),
        g @ (8 | 10 | 12) => Ok(g),
        g => Err(BasisError::KuUndefined(g).into()),
    }
}

/// Kuznetsov coordinates of minus the skyscraper projection — the class whose
/// decompositions the destabilizer search enumerates.
pub fn skyscraper_target(ctx: &FanoContext) -> Result<KuClassCoords, SearchError> {
    let g = ctx.genus();
    match g {
        6 | 8 | 10 | 12 => Ok(KuClassCoords::new(1 - g, g / 2)),
        7 => Ok(KuClassCoords::new(-12, 10)),
        9 => Ok(KuClassCoords::new(-8, 3)),
        _ => Err(BasisError::KuUndefined(g).into()),
    }
}

// ---------------------------------------------------------------------------
// brute-force oracle

/// A searchable system, packaged for pointwise evaluation.
pub enum SearchSystem<'a> {
    TiltWalls {
        ctx: &'a FanoContext,
        target: TruncatedClass,
        beta: Rational,
        strict_ch1_bounds: Option<bool>,
        ch2_denominator: i64,
    },
    KuDestab {
        ctx: &'a FanoContext,
        target: KuClassCoords,
        point: TiltPoint,
        ext1_bound: i64,
    },
    Cone {
        ctx: &'a FanoContext,
        preset: ConePreset,
    },
    Dsl {
        system: &'a ConstraintSystem,
        env: &'a EvalEnv,
    },
}

fn expect_dims(box_: &[(i64, i64)], expected: usize) -> Result<(), SearchError> {
    if box_.len() != expected {
        return Err(SearchError::BoxDimension {
            expected,
            got: box_.len(),
        });
    }
    Ok(())
}

/// Evaluate every constraint of `system` directly at every lattice point of
/// `box_` — no bound derivation, no shortcuts beyond early exit within a
/// point. Output is the lexicographically sorted list of passing tuples
/// (wall systems list the subobject-side tuple; its complement is implied).
pub fn brute_force_oracle(
    system: &SearchSystem,
    box_: &[(i64, i64)],
) -> Result<Vec<Vec<i64>>, SearchError> {
    match system {
        SearchSystem::TiltWalls {
            ctx,
            target,
            beta,
            strict_ch1_bounds,
            ch2_denominator,
        } => {
            expect_dims(box_, 3)?;
            let problem =
                WallProblem::new(target, beta, ctx, *strict_ch1_bounds, *ch2_denominator)?;
            let firsts: Vec<i64> = (box_[0].0..=box_[0].1).collect();
            let rows: Vec<Vec<Vec<i64>>> = firsts
                .par_iter()
                .map(|&a0| {
                    let mut out = Vec::new();
                    for a1 in box_[1].0..=box_[1].1 {
                        for a2 in box_[2].0..=box_[2].1 {
                            let cand = TruncatedClass::new(a0, a1, a2);
                            if problem.candidate_check(&cand).is_some() {
                                out.push(vec![a0, a1, a2]);
                            }
                        }
                    }
                    out
                })
                .collect();
            Ok(rows.into_iter().flatten().collect())
        }
        SearchSystem::KuDestab {
            ctx,
            target,
            point,
            ext1_bound,
        } => {
            expect_dims(box_, 4)?;
            let pred = DestabPredicate::new(target, ctx, point, *ext1_bound)?;
            let firsts: Vec<i64> = (box_[0].0..=box_[0].1).collect();
            let rows: Vec<Vec<Vec<i64>>> = firsts
                .par_iter()
                .map(|&a| {
                    let mut out = Vec::new();
                    for b in box_[1].0..=box_[1].1 {
                        for c in box_[2].0..=box_[2].1 {
                            for d in box_[3].0..=box_[3].1 {
                                if pred.check([a, b, c, d]) {
                                    out.push(vec![a, b, c, d]);
                                }
                            }
                        }
                    }
                    out
                })
                .collect();
            Ok(rows.into_iter().flatten().collect())
        }
        SearchSystem::Cone { ctx, preset } => {
            expect_dims(box_, 3)?;
            check_preset_genus(*preset, ctx)?;
            let inst = ConeInstance::new(ctx)?;
            let firsts: Vec<i64> = (box_[0].0..=box_[0].1).collect();
            let rows: Vec<Vec<Vec<i64>>> = firsts
                .par_iter()
                .map(|&a| {
                    let mut out = Vec::new();
                    for b in box_[1].0..=box_[1].1 {
                        for c in box_[2].0..=box_[2].1 {
                            if inst.predicate(*preset, ctx, a, b, c) {
                                out.push(vec![a, b, c]);
                            }
                        }
                    }
                    out
                })
                .collect();
            Ok(rows.into_iter().flatten().collect())
        }
        SearchSystem::Dsl { system, env } => {
            let vars = system.used_variables();
            expect_dims(box_, vars.len())?;
            if vars.is_empty() {
                let ok = evaluate(system, &Assignment::new(), env)?;
                return Ok(if ok { vec![Vec::new()] } else { Vec::new() });
            }
            fn walk(
                vars: &[VarName],
                box_: &[(i64, i64)],
                depth: usize,
                current: &mut Vec<i64>,
                system: &ConstraintSystem,
                env: &EvalEnv,
                out: &mut Vec<Vec<i64>>,
            ) -> Result<(), EvalError> {
                if depth == vars.len() {
                    let pairs: Vec<(VarName, i64)> =
                        vars.iter().copied().zip(current.iter().copied()).collect();
                    if evaluate(system, &Assignment::from_integers(&pairs), env)? {
                        out.push(current.clone());
                    }
                    return Ok(());
                }
                for v in box_[depth].0..=box_[depth].1 {
                    current.push(v);
                    walk(vars, box_, depth + 1, current, system, env, out)?;
                    current.pop();
                }
                Ok(())
            }
            let firsts: Vec<i64> = (box_[0].0..=box_[0].1).collect();
            let rows: Result<Vec<Vec<Vec<i64>>>, EvalError> = firsts
                .par_iter()
                .map(|&v0| {
                    let mut out = Vec::new();
                    let mut current = vec![v0];
                    walk(&vars, box_, 1, &mut current, system, env, &mut out)?;
                    Ok(out)
                })
                .collect();
            Ok(rows?.into_iter().flatten().collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threefold::context;

    fn ctx(genus: i64) -> FanoContext {
        context(genus, None).unwrap()
    }

    fn pairs_of(result: &WallSearchResult) -> Vec<(TruncatedClass, TruncatedClass)> {
        result.solutions.iter().map(|c| c.pair).collect()
    }

    fn published_genus_seven_pairs() -> Vec<(TruncatedClass, TruncatedClass)> {
        let t = TruncatedClass::new;
        vec![
            (t(-11, 10, -54), t(16, -12, 54)),
            (t(-5, 5, -29), t(10, -7, 29)),
            (t(-4, 4, -24), t(9, -6, 24)),
            (t(-3, 3, -18), t(8, -5, 18)),
            (t(-3, 4, -27), t(8, -6, 27)),
            (t(-2, 2, -12), t(7, -4, 12)),
            (t(-1, 1, -6), t(6, -3, 6)),
            (t(-1, 2, -16), t(6, -4, 16)),
            (t(0, 1, -10), t(5, -3, 10)),
            (t(1, 0, -6), t(4, -2, 6)),
            (t(1, 0, -5), t(4, -2, 5)),
            (t(1, 0, -4), t(4, -2, 4)),
            (t(2, -1, 2), t(3, -1, -2)),
            (t(2, -1, 3), t(3, -1, -3)),
            (t(2, 0, -8), t(3, -2, 8)),
        ]
        .into_iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
    }

    #[test]
    fn genus_seven_wall_list_matches_the_published_fifteen_pairs() {
        let ctx7 = ctx(7);
        let target = TruncatedClass::new(5, -2, 0);
        let beta = Rational::new(-5, 6);
        let result =
            find_tilt_walls(&target, &beta, &ctx7, &SearchOptions::default()).unwrap();
        assert!(result.complete);
        assert!(result.warnings.is_empty());
        assert!(result.options.strict_ch1_bounds);
        assert_eq!(pairs_of(&result), published_genus_seven_pairs());
        let small = result
            .solutions
            .iter()
            .find(|c| c.pair.0 == TruncatedClass::new(2, -1, 2))
            .unwrap();
        assert_eq!(small.alpha_sq_wall, Rational::new(1, 36));
        assert!(result
            .solutions
            .iter()
            .all(|c| c.alpha_sq_wall.is_positive()));

        // The value-semantics wall test makes the strictness toggle inert on
        // outputs: boundary-level candidates always fail slope equality.
        let lax = SearchOptions {
            strict_ch1_bounds: Some(false),
            ..SearchOptions::default()
        };
        let relaxed = find_tilt_walls(&target, &beta, &ctx7, &lax).unwrap();
        assert_eq!(pairs_of(&relaxed), pairs_of(&result));
    }

    #[test]
    fn the_nearby_beta_value_gives_the_same_wall_list() {
        let ctx7 = ctx(7);
        let target = TruncatedClass::new(5, -2, 0);
        let result = find_tilt_walls(
            &target,
            &Rational::new(-71, 84),
            &ctx7,
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(result.complete);
        assert_eq!(pairs_of(&result), published_genus_seven_pairs());
    }

    #[test]
    fn li_filter_clears_the_genus_seven_and_genus_nine_lists() {
        let ctx7 = ctx(7);
        let result = find_tilt_walls(
            &TruncatedClass::new(5, -2, 0),
            &Rational::new(-5, 6),
            &ctx7,
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(result.solutions.len(), 15);
        assert!(filter_by_li_bound(&result.solutions, &ctx7).is_empty());

        let ctx9 = ctx(9);
        let result = find_tilt_walls(
            &TruncatedClass::new(3, -1, 0),
            &Rational::new(-3, 4),
            &ctx9,
            &SearchOptions::default(),
        )
        .unwrap();
        let t = TruncatedClass::new;
        assert_eq!(
            pairs_of(&result),
            vec![(t(-1, 1, -8), t(4, -2, 8)), (t(1, 0, -4), t(2, -1, 4))]
        );
        // Here the second members carry the violation (classical slope −1/2,
        // ch2 ratio 1/8 > 5/64); the firsts are untouched by the bound.
        for cand in &result.solutions {
            assert_ne!(
                li_bound_check(&cand.pair.0.to_chern(), &ctx9),
                LiBoundStatus::Violated
            );
            assert_eq!(
                li_bound_check(&cand.pair.1.to_chern(), &ctx9),
                LiBoundStatus::Violated
            );
        }
        assert!(filter_by_li_bound(&result.solutions, &ctx9).is_empty());
        assert!(filter_by_li_bound(&[], &ctx9).is_empty());

        let other_beta = find_tilt_walls(
            &TruncatedClass::new(3, -1, 0),
            &Rational::new(-31, 40),
            &ctx9,
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(pairs_of(&other_beta), pairs_of(&result));
    }

    #[test]
    fn twisted_shift_target_has_no_walls_for_genus_nine() {
        let ctx9 = ctx(9);
        let e = ctx9.named_class(NamedClass::E).unwrap();
        let class = e.twist(&Rational::one(), ctx9.degree()).shift(1);
        let target = TruncatedClass::from_chern(&class).unwrap();
        assert_eq!(target, TruncatedClass::new(-3, 4, -40));
        for beta in [Rational::new(-3, 4), Rational::new(-31, 40)] {
            let result =
                find_tilt_walls(&target, &beta, &ctx9, &SearchOptions::default()).unwrap();
            assert!(result.complete);
            assert!(result.solutions.is_empty());
        }
    }

    #[test]
    fn genus_six_combination_class_has_no_walls() {
        let ctx6 = ctx(6);
        let ku = ku_basis(&ctx6).unwrap();
        let target = TruncatedClass::from_chern(&ku.combine(3, -2)).unwrap();
        assert_eq!(target, TruncatedClass::new(3, -2, 3));
        let result = find_tilt_walls(
            &target,
            &Rational::new(-9, 10),
            &ctx6,
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(result.complete);
        assert!(result.solutions.is_empty());
    }

    #[test]
    fn target_below_the_heart_is_rejected() {
        let err = find_tilt_walls(
            &TruncatedClass::new(5, -5, 0),
            &Rational::new(-5, 6),
            &ctx(7),
            &SearchOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, SearchError::TargetNotInHeart(_)));
    }

    #[test]
    fn vanishing_ch2_beta_caps_the_rank_direction() {
        let ctx7 = ctx(7);
        let target = TruncatedClass::new(2, 0, -12);
        let beta = Rational::from(-1);
        let result =
            find_tilt_walls(&target, &beta, &ctx7, &SearchOptions::default()).unwrap();
        assert!(!result.complete);
        assert_eq!(result.warnings.len(), 1);

        let strict_opts = SearchOptions {
            require_bounded: true,
            ..SearchOptions::default()
        };
        let err = find_tilt_walls(&target, &beta, &ctx7, &strict_opts).unwrap_err();
        assert!(matches!(err, SearchError::Unbounded { .. }));
    }

    #[test]
    fn negative_discriminant_target_has_no_candidates() {
        let result = find_tilt_walls(
            &TruncatedClass::new(2, 0, 1),
            &Rational::new(-5, 6),
            &ctx(7),
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(result.complete);
        assert!(result.solutions.is_empty());
    }

    #[test]
    fn halved_ch2_units_refine_the_solution_lattice() {
        let ctx7 = ctx(7);
        let target = TruncatedClass::new(5, -2, 0);
        let beta = Rational::new(-5, 6);
        let opts = SearchOptions {
            ch2_denominator: 2,
            ..SearchOptions::default()
        };
        let refined = find_tilt_walls(&target, &beta, &ctx7, &opts).unwrap();
        assert_eq!(refined.options.ch2_denominator, 2);
        assert_eq!(refined.target, TruncatedClass::new(5, -2, 0));
        let refined_pairs: BTreeSet<_> = pairs_of(&refined).into_iter().collect();
        for (a, b) in published_genus_seven_pairs() {
            let doubled = (
                TruncatedClass::new(a.m0, a.m1, 2 * a.m2),
                TruncatedClass::new(b.m0, b.m1, 2 * b.m2),
            );
            assert!(refined_pairs.contains(&doubled));
        }
    }

    #[test]
    fn invalid_options_are_rejected() {
        let bad_cap = SearchOptions {
            max_rank_cap: 0,
            ..SearchOptions::default()
        };
        assert!(matches!(
            find_tilt_walls(
                &TruncatedClass::new(5, -2, 0),
                &Rational::new(-5, 6),
                &ctx(7),
                &bad_cap
            ),
            Err(SearchError::InvalidOptions(_))
        ));
        let bad_denom = SearchOptions {
            ch2_denominator: 0,
            ..SearchOptions::default()
        };
        assert!(matches!(
            find_tilt_walls(
                &TruncatedClass::new(5, -2, 0),
                &Rational::new(-5, 6),
                &ctx(7),
                &bad_denom
            ),
            Err(SearchError::InvalidOptions(_))
        ));
    }

    fn destab_defaults(genus: i64, variant: Option<GushelVariant>) -> DestabResult {
        let ctx = context(genus, variant).unwrap();
        let target = skyscraper_target(&ctx).unwrap();
        let pt = skyscraper_destab_point(&ctx).unwrap();
        let bound = default_ext1_bound(&ctx).unwrap();
        find_ku_destabilizers(&target, &ctx, &pt, bound, &SearchOptions::default()).unwrap()
    }

    #[test]
    fn destabilizer_lists_match_for_every_genus() {
        let ordinary = destab_defaults(6, Some(GushelVariant::Ordinary));
        assert_eq!(ordinary.solutions, vec![[-2, 1, -3, 2]]);
        assert!(ordinary.complete);

        let special = destab_defaults(6, Some(GushelVariant::Special));
        assert_eq!(special.solutions, vec![[-4, 2, -1, 1], [-2, 1, -3, 2]]);

        assert!(destab_defaults(7, None).solutions.is_empty());
        assert_eq!(
            destab_defaults(8, None).solutions,
            vec![[-4, 2, -3, 2], [-2, 1, -5, 3]]
        );
        assert!(destab_defaults(9, None).solutions.is_empty());
        assert!(destab_defaults(10, None).solutions.is_empty());
        assert!(destab_defaults(12, None).solutions.is_empty());
    }

    #[test]
    fn genus_six_fixtures_require_a_variant() {
        let ctx6 = ctx(6);
        assert!(matches!(
            default_ext1_bound(&ctx6),
            Err(SearchError::VariantRequired)
        ));
    }

    #[test]
    fn destabilizer_search_agrees_with_the_oracle_on_a_containing_box() {
        let ctx8 = ctx(8);
        let target = skyscraper_target(&ctx8).unwrap();
        let pt = skyscraper_destab_point(&ctx8).unwrap();
        let solved = find_ku_destabilizers(&target, &ctx8, &pt, 8, &SearchOptions::default())
            .unwrap()
            .solutions;
        let system = SearchSystem::KuDestab {
            ctx: &ctx8,
            target,
            point: pt,
            ext1_bound: 8,
        };
        let oracle = brute_force_oracle(&system, &[(-20, 20); 4]).unwrap();
        let solved_vecs: Vec<Vec<i64>> = solved.iter().map(|t| t.to_vec()).collect();
        assert_eq!(oracle, solved_vecs);
    }

    #[test]
    fn cone_systems_reproduce_the_reference_solutions() {
        let g7 = solve_cone_system(ConePreset::A8, &ctx(7)).unwrap();
        assert_eq!(g7.solutions, vec![vec![-11, 9, 5]]);
        assert!(g7.complete);
        for genus in [8, 9, 10, 12] {
            let result = solve_cone_system(ConePreset::A8, &ctx(genus)).unwrap();
            assert!(result.solutions.is_empty(), "genus {genus}");
        }
        let g6 = solve_cone_system(ConePreset::A9, &ctx(6)).unwrap();
        assert_eq!(g6.solutions, vec![vec![-3, 2], vec![-1, 1]]);

        assert!(matches!(
            solve_cone_system(ConePreset::A9, &ctx(7)),
            Err(SearchError::PresetGenusMismatch { .. })
        ));
    }

    #[test]
    fn cone_slope_constants_match_the_reference_values() {
        let table = [
            (6, (-320, 3), (-720, 323)),
            (7, (-2244, 71), (-12, 5)),
            (8, (-5831, 729), (-2989, 1458)),
            (9, (-424, 31), (-8, 3)),
        ];
        for (genus, mu_e, mu_ix) in table {
            let ctx_g = ctx(genus);
            let pt = cone_point(&ctx_g).unwrap();
            let e = ctx_g.named_class(NamedClass::E).unwrap();
            let ix = ctx_g.named_class(NamedClass::IdealOfPoint).unwrap();
            assert_eq!(
                mu0(&e, &pt, &ctx_g),
                Slope::Finite(Rational::new(mu_e.0, mu_e.1)),
                "mu0(E) at genus {genus}"
            );
            assert_eq!(
                mu0(&ix, &pt, &ctx_g),
                Slope::Finite(Rational::new(mu_ix.0, mu_ix.1)),
                "mu0(I_x) at genus {genus}"
            );
        }
    }

    #[test]
    fn truncated_combination_classes_match_their_closed_forms() {
        // Genus 7: a·v + b·w + c·E truncates to (2a+5c, b−2c, −5a−6b).
        let ctx7 = ctx(7);
        let ku = ku_basis(&ctx7).unwrap();
        let e = ctx7.named_class(NamedClass::E).unwrap();
        for (a, b, c) in [(-11, 9, 5), (1, 2, 3), (-2, 0, 1)] {
            let ch = &ku.combine(a, b) + &e.scale(&Rational::from(c));
            let trunc = TruncatedClass::from_chern(&ch).unwrap();
            assert_eq!(
                trunc,
                TruncatedClass::new(2 * a + 5 * c, b - 2 * c, -5 * a - 6 * b)
            );
        }
        assert_eq!(
            TruncatedClass::from_chern(
                &(&ku.combine(-11, 9) + &e.scale(&Rational::from(5)))
            )
            .unwrap(),
            TruncatedClass::new(3, -1, 1)
        );
        // Even genus: (a+2c, b−c, (g−4)/2·c − (g/2)·a − (3g−6)/2·b).
        for genus in [6, 8, 10, 12] {
            let ctx_g = ctx(genus);
            let ku = ku_basis(&ctx_g).unwrap();
            let e = ctx_g.named_class(NamedClass::E).unwrap();
            for (a, b, c) in [(-1, 1, 1), (2, -1, 3), (0, 2, 1)] {
                let ch = &ku.combine(a, b) + &e.scale(&Rational::from(c));
                let trunc = TruncatedClass::from_chern(&ch).unwrap();
                assert_eq!(
                    trunc,
                    TruncatedClass::new(
                        a + 2 * c,
                        b - c,
                        (genus - 4) / 2 * c - genus / 2 * a - (3 * genus - 6) / 2 * b
                    ),
                    "genus {genus}"
                );
            }
        }
    }

    #[test]
    fn wall_oracle_matches_the_solver_inside_a_box() {
        // A box large enough to contain every solution and the derived rank
        // bound: full equality with the solver's ordered members.
        let ctx9 = ctx(9);
        let target = TruncatedClass::new(3, -1, 0);
        let beta = Rational::new(-3, 4);
        let solved = find_tilt_walls(&target, &beta, &ctx9, &SearchOptions::default()).unwrap();
        let system = SearchSystem::TiltWalls {
            ctx: &ctx9,
            target,
            beta: beta.clone(),
            strict_ch1_bounds: None,
            ch2_denominator: 1,
        };
        let oracle =
            brute_force_oracle(&system, &[(-31, 31), (-25, 25), (-150, 150)]).unwrap();
        let mut members: Vec<Vec<i64>> = Vec::new();
        for cand in &solved.solutions {
            for m in [&cand.pair.0, &cand.pair.1] {
                members.push(vec![m.m0, m.m1, m.m2]);
            }
        }
        members.sort();
        assert_eq!(oracle, members);
        assert_eq!(oracle.len() % 2, 0);

        // A smaller box truncates both sides the same way.
        let ctx7 = ctx(7);
        let target7 = TruncatedClass::new(5, -2, 0);
        let beta7 = Rational::new(-5, 6);
        let solved7 =
            find_tilt_walls(&target7, &beta7, &ctx7, &SearchOptions::default()).unwrap();
        let system7 = SearchSystem::TiltWalls {
            ctx: &ctx7,
            target: target7,
            beta: beta7,
            strict_ch1_bounds: None,
            ch2_denominator: 1,
        };
        let oracle7 = brute_force_oracle(&system7, &[(-40, 40); 3]).unwrap();
        let mut members7: Vec<Vec<i64>> = Vec::new();
        for cand in &solved7.solutions {
            for m in [&cand.pair.0, &cand.pair.1] {
                if [m.m0, m.m1, m.m2].iter().all(|v| v.abs() <= 40) {
                    members7.push(vec![m.m0, m.m1, m.m2]);
                }
            }
        }
        members7.sort();
        assert_eq!(oracle7, members7);
    }

    #[test]
    fn cone_oracle_matches_the_solver_inside_a_box() {
        let ctx7 = ctx(7);
        let solved = solve_cone_system(ConePreset::A8, &ctx7).unwrap();
        let system = SearchSystem::Cone {
            ctx: &ctx7,
            preset: ConePreset::A8,
        };
        let oracle = brute_force_oracle(&system, &[(-20, 20); 3]).unwrap();
        assert_eq!(oracle, solved.solutions);
    }

    #[test]
    fn oracle_rejects_bad_boxes_and_accepts_empty_ones() {
        let ctx7 = ctx(7);
        let system = SearchSystem::Cone {
            ctx: &ctx7,
            preset: ConePreset::A8,
        };
        assert!(matches!(
            brute_force_oracle(&system, &[(-1, 1)]),
            Err(SearchError::BoxDimension {
                expected: 3,
                got: 1
            })
        ));
        let empty = brute_force_oracle(&system, &[(1, 0), (-1, 1), (-1, 1)]).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn truncated_class_parsing_and_display_round_trip() {
        let t: TruncatedClass = "5,-2,0".parse().unwrap();
        assert_eq!(t, TruncatedClass::new(5, -2, 0));
        let u: TruncatedClass = "(3, -1, 27)".parse().unwrap();
        assert_eq!(u, TruncatedClass::new(3, -1, 27));
        assert_eq!(u.to_string(), "(3, -1, 27)");
        assert!("1,2".parse::<TruncatedClass>().is_err());
        assert!("a,b,c".parse::<TruncatedClass>().is_err());
    }

    #[test]
    fn division_helpers_round_toward_the_correct_side() {
        assert_eq!(floor_div(7, 2), 3);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(floor_div(7, -2), -4);
        assert_eq!(floor_div(-7, -2), 3);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(isqrt_i128(0), 0);
        assert_eq!(isqrt_i128(24), 4);
        assert_eq!(isqrt_i128(25), 5);
        for (a, b) in [(13, 16), (-11, 32), (218, 435), (6, -4), (0, 7)] {
            let (g, x, y) = egcd(a, b);
            assert_eq!(a * x + b * y, g);
            assert_eq!(g, num::integer::gcd(a.abs(), b.abs()));
        }
    }

    #[test]
    fn skyscraper_tables_follow_the_genus() {
        for (genus, expected) in [(6, (-5, 3)), (8, (-7, 4)), (10, (-9, 5)), (12, (-11, 6))] {
            let target = skyscraper_target(&ctx(genus)).unwrap();
            assert_eq!((target.a, target.b), expected);
        }
        assert_eq!(skyscraper_target(&ctx(7)).map(|t| (t.a, t.b)).unwrap(), (-12, 10));
        assert_eq!(skyscraper_target(&ctx(9)).map(|t| (t.a, t.b)).unwrap(), (-8, 3));
        assert!(skyscraper_target(&ctx(4)).is_err());
        assert_eq!(default_ext1_bound(&ctx(7)).unwrap(), 25);
        assert_eq!(default_ext1_bound(&ctx(9)).unwrap(), 9);
        for genus in [8, 10, 12] {
            assert_eq!(default_ext1_bound(&ctx(genus)).unwrap(), genus);
        }
    }
}
