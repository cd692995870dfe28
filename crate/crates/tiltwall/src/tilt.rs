//! Tilt central charges on the (β, α²) half-plane: exact evaluation of
//! Z_{α,β} and its 90°-rotated companion, slope comparison with +∞ semantics,
//! the Bogomolov discriminant, stronger Bogomolov–Gieseker-type slope bounds,
//! admissibility windows, and wall loci.
//!
//! Everything is parameterized by α² rather than α so points with irrational
//! α stay exact.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{ChernCharacter, Rational};
use crate::threefold::{FanoContext, NamedClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TiltError {
    #[error("alpha_sq must be strictly positive (got {0})")]
    NonpositiveAlphaSq(Rational),
    #[error("the heart slope window applies only to genus >= 6 (got {0}); use the region-W test")]
    HeartWindowUndefined(i64),
}

/// A point (α², β) with α > 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltPoint {
    alpha_sq: Rational,
    beta: Rational,
}

impl TiltPoint {
    pub fn new(alpha_sq: Rational, beta: Rational) -> Result<Self, TiltError> {
        if !alpha_sq.is_positive() {
            return Err(TiltError::NonpositiveAlphaSq(alpha_sq));
        }
        Ok(TiltPoint { alpha_sq, beta })
    }

    pub fn alpha_sq(&self) -> &Rational {
        &self.alpha_sq
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

impl fmt::Display for TiltPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha^2 = {}, beta = {})", self.alpha_sq, self.beta)
    }
}

/// Value of a central charge: re + i·im, both exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Charge {
    pub re: Rational,
    pub im: Rational,
}

/// Slope of a charge, with the `+∞` convention for non-positive imaginary
/// part. `Finite` orders below `Infinite`, and `Infinite == Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinite,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => write!(f, "{q}"),
            Slope::Infinite => write!(f, "+inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// H-coefficient of the twisted degree-one character: ch₁^β = c − β·r.
pub fn ch1_beta(x: &ChernCharacter, beta: &Rational) -> Rational {
    &x.c - beta * &x.r
}

/// L-coefficient of the twisted degree-two character:
/// ch₂^β = l − β·c·d + (β²/2)·d·r.
pub fn ch2_beta(x: &ChernCharacter, beta: &Rational, degree: i64) -> Rational {
    let d = Rational::from(degree);
    &x.l - beta * &x.c * &d + &(beta * beta) * &d * &x.r / Rational::from(2)
}

/// Central charge Z_{α,β}(x) = (α²/2)·H³ch₀^β − H·ch₂^β + i·H²ch₁^β.
pub fn charge(x: &ChernCharacter, pt: &TiltPoint, ctx: &FanoContext) -> Charge {
    let d = Rational::from(ctx.degree());
    let re = pt.alpha_sq() / Rational::from(2) * &d * &x.r - ch2_beta(x, pt.beta(), ctx.degree());
    let im = &d * ch1_beta(x, pt.beta());
    Charge { re, im }
}

/// The charge rotated by i (the μ=0 member of the rotated family):
/// Z⁰ = (im Z, −re Z).
pub fn rotated_charge(x: &ChernCharacter, pt: &TiltPoint, ctx: &FanoContext) -> Charge {
    let z = charge(x, pt, ctx);
    Charge {
        re: z.im,
        im: -z.re,
    }
}

/// Slope −re/im when im > 0, +∞ otherwise.
pub fn slope_of(ch: &Charge) -> Slope {
    if ch.im.is_positive() {
        Slope::Finite(-&ch.re / &ch.im)
    } else {
        Slope::Infinite
    }
}

/// Exact three-way slope comparison.
pub fn slope_cmp(s1: &Slope, s2: &Slope) -> Ordering {
    s1.cmp(s2)
}

/// Tilt slope μ_{α,β}(x).
pub fn mu(x: &ChernCharacter, pt: &TiltPoint, ctx: &FanoContext) -> Slope {
    slope_of(&charge(x, pt, ctx))
}

/// Rotated tilt slope μ⁰_{α,β}(x).
pub fn mu0(x: &ChernCharacter, pt: &TiltPoint, ctx: &FanoContext) -> Slope {
    slope_of(&rotated_charge(x, pt, ctx))
}

/// Classical slope H²ch₁/(H³ch₀) = c/r, or +∞ for rank zero.
pub fn classical_mu(x: &ChernCharacter, _ctx: &FanoContext) -> Slope {
    if x.r.is_zero() {
        Slope::Infinite
    } else {
        Slope::Finite(&x.c / &x.r)
    }
}

/// Discriminant Δ_H = (H²ch₁)² − 2·H³ch₀·H·ch₂ = (cd)² − 2·d·r·l.
pub fn discriminant(x: &ChernCharacter, ctx: &FanoContext) -> Rational {
    let d = Rational::from(ctx.degree());
    (&x.c * &d).square() - Rational::from(2) * &d * &x.r * &x.l
}

/// Δ_H/d² = c² − 2rl/d; the form whose integrality window drives the wall
/// search.
pub fn normalized_discriminant(x: &ChernCharacter, ctx: &FanoContext) -> Rational {
    let d = Rational::from(ctx.degree());
    x.c.square() - Rational::from(2) * &x.r * &x.l / d
}

/// Outcome of a stronger Bogomolov–Gieseker-type slope-bound test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiBoundStatus {
    Consistent,
    Violated,
    Inapplicable,
}

/// Compare `m` with `base ± 1/(2√2)` exactly (1/(2√2) = √(1/8)), avoiding
/// irrational arithmetic by squaring the signed difference.
fn cmp_vs_offset(m: &Rational, base: i64, positive_offset: bool) -> Ordering {
    let t = m - &Rational::from(base);
    let eighth = Rational::new(1, 8);
    if positive_offset {
        if !t.is_positive() {
            Ordering::Less
        } else {
            t.square().cmp(&eighth)
        }
    } else if !t.is_negative() {
        Ordering::Greater
    } else {
        // t < 0: t < −√(1/8) ⟺ t² > 1/8.
        eighth.cmp(&t.square())
    }
}

/// Piecewise slope bound on H·ch₂/(H³ch₀) for genus 7, as a function of
/// m = |μ|. Returns `None` outside the covered range m ≤ 2 − 1/(2√2).
fn genus7_li_bound(m: &Rational) -> Option<Rational> {
    let half_m_sq_minus = |m: &Rational| {
        m.square() / Rational::from(2) - Rational::new(1, 16)
    };
    if cmp_vs_offset(m, 0, true) != Ordering::Greater {
        Some(Rational::zero())
    } else if cmp_vs_offset(m, 1, false) != Ordering::Greater {
        Some(half_m_sq_minus(m))
    } else if cmp_vs_offset(m, 1, true) != Ordering::Greater {
        Some(m - &Rational::new(1, 2))
    } else if cmp_vs_offset(m, 2, false) != Ordering::Greater {
        Some(half_m_sq_minus(m))
    } else {
        None
    }
}

/// Test a class against the genus-specific stronger Bogomolov–Gieseker
/// bound. Both the slope ratio m = |c/r| and the level q = l/(d·r) are
/// invariant under negating the class, so shifted classes test identically.
pub fn li_bound_check(x: &ChernCharacter, ctx: &FanoContext) -> LiBoundStatus {
    if x.r.is_zero() {
        return LiBoundStatus::Inapplicable;
    }
    let mu_classical = &x.c / &x.r;
    let q = &x.l / (Rational::from(ctx.degree()) * &x.r);
    let bound = match ctx.genus() {
        7 => genus7_li_bound(&mu_classical.abs()),
        9 => {
            if mu_classical == Rational::new(-1, 2) {
                Some(Rational::new(5, 64))
            } else {
                None
            }
        }
        _ => None,
    };
    match bound {
        Some(b) => {
            if q <= b {
                LiBoundStatus::Consistent
            } else {
                LiBoundStatus::Violated
            }
        }
        None => LiBoundStatus::Inapplicable,
    }
}

/// Strict slope chain μ(E(−H)[1]) < μ(O(−H)[1]) < 0 < μ(E) < μ(O) that cuts
/// out the parameter window where the induced stability condition exists.
pub fn heart_window_check(ctx: &FanoContext, pt: &TiltPoint) -> Result<bool, TiltError> {
    if ctx.genus() < 6 {
        return Err(TiltError::HeartWindowUndefined(ctx.genus()));
    }
    let d = ctx.degree();
    let e = ctx
        .named_class(NamedClass::E)
        .expect("E exists for genus >= 6");
    let o = ChernCharacter::from_integers(1, 0, 0, 0);
    let e_shift = -&e.twist(&Rational::one(), d);
    let o_shift = -&ChernCharacter::exp_line(&Rational::new(-1, 1), d);
    let zero = Slope::Finite(Rational::zero());
    let chain = [mu(&e_shift, pt, ctx), mu(&o_shift, pt, ctx), zero, mu(&e, pt, ctx), mu(&o, pt, ctx)];
    Ok(chain.windows(2).all(|w| w[0] < w[1]))
}

/// Exact membership in the region W = {−1/2 ≤ β < 0, α < −β} ∪
/// {−1 < β < −1/2, α ≤ 1+β}, with α given by α² ≥ 0.
pub fn region_w_check(alpha_sq: &Rational, beta: &Rational) -> bool {
    if alpha_sq.is_negative() {
        return false;
    }
    let half = Rational::new(-1, 2);
    let first = *beta >= half && beta.is_negative() && *alpha_sq < beta.square();
    let second = {
        let shifted = beta + &Rational::one();
        *beta < half && shifted.is_positive() && *alpha_sq <= shifted.square()
    };
    first || second
}

/// Solution set of the tilt-slope-equality equation between two classes,
/// classified in the (β, α² > 0) half-plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WallLocus {
    Circle {
        center_beta: Rational,
        radius_sq: Rational,
    },
    VerticalLine {
        beta: Rational,
    },
    Everywhere,
    Nowhere,
}

/// Classify where re Z(a)·im Z(m) = re Z(m)·im Z(a) holds. With
/// K = a₀m₁ − m₀a₁, L = a₂m₀ − m₂a₀, C = a₁m₂ − m₁a₂ the equation reduces to
/// (dK/2)(α² + β²) + Lβ + C = 0.
pub fn wall_locus(a: &ChernCharacter, m: &ChernCharacter, ctx: &FanoContext) -> WallLocus {
    let d = Rational::from(ctx.degree());
    let k = &a.r * &m.c - &m.r * &a.c;
    let l = &a.l * &m.r - &m.l * &a.r;
    let c = &a.c * &m.l - &m.c * &a.l;
    if !k.is_zero() {
        let dk = &d * &k;
        let center_beta = -&l / &dk;
        let radius_sq = center_beta.square() - Rational::from(2) * &c / &dk;
        if radius_sq.is_positive() {
            WallLocus::Circle {
                center_beta,
                radius_sq,
            }
        } else {
            WallLocus::Nowhere
        }
    } else if !l.is_zero() {
        WallLocus::VerticalLine { beta: -&c / &l }
    } else if !c.is_zero() {
        WallLocus::Nowhere
    } else {
        WallLocus::Everywhere
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threefold::{context, ku_basis};

    fn ctx(g: i64) -> FanoContext {
        context(g, None).unwrap()
    }

    fn pt(alpha_sq: Rational, beta: Rational) -> TiltPoint {
        TiltPoint::new(alpha_sq, beta).unwrap()
    }

    fn truncated(a: i64, b: i64, c: i64) -> ChernCharacter {
        ChernCharacter::from_integers(a, b, c, 0)
    }

    #[test]
    fn tilt_point_validation() {
        assert!(TiltPoint::new(Rational::zero(), Rational::zero()).is_err());
        assert!(TiltPoint::new(Rational::new(-1, 4), Rational::zero()).is_err());
        assert!(TiltPoint::new(Rational::new(316, 765_625), Rational::new(-122, 125)).is_ok());
    }

    #[test]
    fn charge_of_zero_class() {
        let z = charge(
            &ChernCharacter::zero(),
            &pt(Rational::one(), Rational::new(-1, 2)),
            &ctx(7),
        );
        assert_eq!(z, Charge { re: Rational::zero(), im: Rational::zero() });
    }

    #[test]
    fn genus7_slope_closed_form() {
        // μ at β = −5/6 for truncated (a,b,c) is
        // (−36aα² + 25a + 60b + 6c) / (12(5a + 6b)) when the denominator is
        // positive.
        let c7 = ctx(7);
        let beta = Rational::new(-5, 6);
        for (a, b, c) in [(2i64, -1i64, 3i64), (1, 0, -5), (3, -1, 0), (0, 1, -11)] {
            for alpha_sq in [Rational::new(1, 144), Rational::new(1, 36), Rational::from(2)] {
                let p = pt(alpha_sq.clone(), beta.clone());
                let x = truncated(a, b, c);
                let den = Rational::from(12) * Rational::from(5 * a + 6 * b);
                let num = Rational::from(-36 * a) * &alpha_sq
                    + Rational::from(25 * a + 60 * b + 6 * c);
                let expected = if den.is_positive() {
                    Slope::Finite(&num / &den)
                } else {
                    Slope::Infinite
                };
                assert_eq!(mu(&x, &p, &c7), expected, "({a},{b},{c}) at {alpha_sq}");
            }
        }
        // M = ch≤2(E₇): slope (5 − 180α²)/156.
        let m = truncated(5, -2, 0);
        let alpha_sq = Rational::new(1, 144);
        let p = pt(alpha_sq.clone(), beta);
        let expected = (Rational::from(5) - Rational::from(180) * &alpha_sq) / Rational::from(156);
        assert_eq!(mu(&m, &p, &c7), Slope::Finite(expected));
    }

    #[test]
    fn rotation_identity() {
        let c8 = ctx(8);
        let p = pt(Rational::new(3, 7), Rational::new(-9, 11));
        for x in [
            ChernCharacter::from_integers(2, -1, 5, 3),
            ChernCharacter::from_integers(0, 0, 1, 0),
            ChernCharacter::from_integers(-4, 3, -2, 1),
        ] {
            let z = charge(&x, &p, &c8);
            let z0 = rotated_charge(&x, &p, &c8);
            assert_eq!(z0.re, z.im);
            assert_eq!(z0.im, -&z.re);
        }
    }

    #[test]
    fn rotated_imaginary_part_linear_form_genus7() {
        // For av + bw at (α² = 1/144, β = −5/6): im Z⁰ = (13a + 16b)/4.
        let c7 = ctx(7);
        let ku = ku_basis(&c7).unwrap();
        let p = pt(Rational::new(1, 144), Rational::new(-5, 6));
        for a in -3..=3 {
            for b in -3..=3 {
                let z0 = rotated_charge(&ku.combine(a, b), &p, &c7);
                assert_eq!(z0.im, Rational::new(13 * a + 16 * b, 4));
            }
        }
    }

    #[test]
    fn rotated_structure_sheaf_positive_real_part() {
        let c6 = ctx(6);
        let o = ChernCharacter::from_integers(1, 0, 0, 0);
        for beta in [Rational::new(-9, 10), Rational::new(-1, 3)] {
            let p = pt(Rational::new(1, 100), beta.clone());
            let z0 = rotated_charge(&o, &p, &c6);
            assert_eq!(z0.re, -&beta * Rational::from(10));
            assert!(z0.re.is_positive());
        }
    }

    #[test]
    fn slope_branches_and_comparison() {
        let inf = slope_of(&Charge { re: Rational::from(-3), im: Rational::zero() });
        assert_eq!(inf, Slope::Infinite);
        let neg_im = slope_of(&Charge { re: Rational::one(), im: Rational::from(-2) });
        assert_eq!(neg_im, Slope::Infinite);
        let finite = slope_of(&Charge { re: Rational::from(-5), im: Rational::from(2) });
        assert_eq!(finite, Slope::Finite(Rational::new(5, 2)));
        assert_eq!(slope_cmp(&Slope::Infinite, &finite), Ordering::Greater);
        assert_eq!(slope_cmp(&Slope::Infinite, &Slope::Infinite), Ordering::Equal);
        assert_eq!(
            slope_cmp(&Slope::Finite(Rational::new(-1, 3)), &Slope::Finite(Rational::new(1, 7))),
            Ordering::Less
        );
    }

    #[test]
    fn classical_slopes() {
        let c8 = ctx(8);
        assert_eq!(
            classical_mu(&truncated(2, -1, 7), &c8),
            Slope::Finite(Rational::new(-1, 2))
        );
        for g in [6, 8, 10, 12] {
            let c = ctx(g);
            let e = c.named_class(NamedClass::E).unwrap();
            assert_eq!(classical_mu(&e, &c), Slope::Finite(Rational::new(-1, 2)));
        }
        assert_eq!(classical_mu(&truncated(0, 1, -4), &c8), Slope::Infinite);
    }

    #[test]
    fn discriminant_values() {
        let c7 = ctx(7);
        let o = ChernCharacter::from_integers(1, 0, 0, 0);
        assert_eq!(discriminant(&o, &c7), Rational::zero());
        let e7 = c7.named_class(NamedClass::E).unwrap();
        assert_eq!(normalized_discriminant(&e7, &c7), Rational::from(4));
        assert_eq!(discriminant(&e7, &c7), Rational::from(4 * 144));
        // Twist invariance and quadratic scaling.
        let x = ChernCharacter::from_integers(3, -2, 5, 1);
        let beta = Rational::new(-7, 9);
        assert_eq!(
            discriminant(&x.twist(&beta, c7.degree()), &c7),
            discriminant(&x, &c7)
        );
        assert_eq!(
            discriminant(&x.scale(&Rational::from(3)), &c7),
            Rational::from(9) * discriminant(&x, &c7)
        );
    }

    #[test]
    fn li_bound_genus7_pieces() {
        let c7 = ctx(7);
        // Piece 2 at m = 1/2: bound 1/16, and 2/(12·2) = 1/12 exceeds it.
        assert_eq!(li_bound_check(&truncated(2, -1, 2), &c7), LiBoundStatus::Violated);
        // Negated class tests identically.
        assert_eq!(li_bound_check(&truncated(-2, 1, -2), &c7), LiBoundStatus::Violated);
        // Piece 1 at m = 0: bound 0.
        assert_eq!(li_bound_check(&truncated(1, 0, -5), &c7), LiBoundStatus::Consistent);
        assert_eq!(li_bound_check(&truncated(1, 0, 1), &c7), LiBoundStatus::Violated);
        // Piece 1 boundary region m = 1/3 < 1/(2√2).
        assert_eq!(li_bound_check(&truncated(3, -1, 0), &c7), LiBoundStatus::Consistent);
        // Piece 3 at m = 1: bound 1/2, i.e. l ≤ 6 at rank 1.
        assert_eq!(li_bound_check(&truncated(1, -1, 6), &c7), LiBoundStatus::Consistent);
        assert_eq!(li_bound_check(&truncated(1, -1, 7), &c7), LiBoundStatus::Violated);
        // Piece 4 at m = 3/2: bound 17/16, i.e. l ≤ 25 at rank 2 (q = l/24).
        assert_eq!(li_bound_check(&truncated(2, -3, 25), &c7), LiBoundStatus::Consistent);
        assert_eq!(li_bound_check(&truncated(2, -3, 26), &c7), LiBoundStatus::Violated);
        // Beyond the last piece, and rank zero.
        assert_eq!(li_bound_check(&truncated(1, -2, 0), &c7), LiBoundStatus::Inapplicable);
        assert_eq!(li_bound_check(&truncated(0, 1, -6), &c7), LiBoundStatus::Inapplicable);
    }

    #[test]
    fn li_bound_genus9_and_uncovered_genera() {
        let c9 = ctx(9);
        assert_eq!(li_bound_check(&truncated(4, -2, 6), &c9), LiBoundStatus::Violated);
        assert_eq!(li_bound_check(&truncated(2, -1, 2), &c9), LiBoundStatus::Consistent);
        // Applies only exactly at μ = −1/2.
        assert_eq!(li_bound_check(&truncated(2, 1, 0), &c9), LiBoundStatus::Inapplicable);
        assert_eq!(li_bound_check(&truncated(3, -1, 0), &c9), LiBoundStatus::Inapplicable);
        assert_eq!(li_bound_check(&truncated(2, -1, 2), &ctx(8)), LiBoundStatus::Inapplicable);
    }

    #[test]
    fn heart_window_at_catalog_points() {
        let points: [(i64, Rational, Rational); 6] = [
            (6, Rational::new(1, 400), Rational::new(-9, 10)),
            (7, Rational::new(71, 7056), Rational::new(-71, 84)),
            (8, Rational::new(316, 765_625), Rational::new(-122, 125)),
            (9, Rational::new(31, 1600), Rational::new(-31, 40)),
            (10, Rational::new(5, 3267), Rational::new(-10, 11)),
            (12, Rational::new(1, 484), Rational::new(-19, 22)),
        ];
        for (g, alpha_sq, beta) in points {
            let c = ctx(g);
            assert!(
                heart_window_check(&c, &pt(alpha_sq, beta)).unwrap(),
                "genus {g}"
            );
        }
        // Far outside the window.
        assert!(!heart_window_check(&ctx(7), &pt(Rational::one(), Rational::new(-5, 6))).unwrap());
        assert_eq!(
            heart_window_check(&ctx(5), &pt(Rational::one(), Rational::zero())),
            Err(TiltError::HeartWindowUndefined(5))
        );
    }

    #[test]
    fn region_w_membership() {
        let yes = [
            (Rational::new(1, 64), Rational::new(-1, 4)),
            (Rational::new(1, 16), Rational::new(-3, 4)),
            (Rational::new(1, 100), Rational::new(-9, 10)),
            (Rational::zero(), Rational::new(-1, 3)),
        ];
        for (a, b) in yes {
            assert!(region_w_check(&a, &b), "({a}, {b})");
        }
        let no = [
            (Rational::new(1, 64), Rational::zero()),
            (Rational::new(1, 4), Rational::new(-3, 4)),
            (Rational::new(9, 100), Rational::new(-1, 4)),
            (Rational::new(1, 100), Rational::from(-1)),
            (Rational::new(1, 16), Rational::new(-1, 4)),
        ];
        for (a, b) in no {
            assert!(!region_w_check(&a, &b), "({a}, {b})");
        }
    }

    #[test]
    fn wall_locus_classification() {
        let c7 = ctx(7);
        // The wall between (2,−1,2) and ch≤2(E₇).
        let a = truncated(2, -1, 2);
        let m = truncated(5, -2, 0);
        let locus = wall_locus(&a, &m, &c7);
        assert_eq!(
            locus,
            WallLocus::Circle {
                center_beta: Rational::new(-5, 6),
                radius_sq: Rational::new(1, 36),
            }
        );
        // Proportional classes agree everywhere.
        assert_eq!(
            wall_locus(&a, &a.scale(&Rational::from(2)), &c7),
            WallLocus::Everywhere
        );
        // Equal (r, c) up to ratio but different l: a vertical line.
        assert_eq!(
            wall_locus(&truncated(1, 1, 0), &truncated(1, 1, 5), &c7),
            WallLocus::VerticalLine { beta: Rational::one() }
        );
        // Rank-zero classes of different l/c ratio never agree.
        assert_eq!(
            wall_locus(&truncated(0, 1, 0), &truncated(0, 2, 1), &c7),
            WallLocus::Nowhere
        );
        // Against a rank-zero class the locus is α² = (l − 6β²)/6, a circle
        // only when l > 0.
        assert_eq!(
            wall_locus(&truncated(1, 0, 1), &truncated(0, 1, 0), &c7),
            WallLocus::Circle {
                center_beta: Rational::zero(),
                radius_sq: Rational::new(1, 6),
            }
        );
        assert_eq!(
            wall_locus(&truncated(1, 0, -1), &truncated(0, 1, 0), &c7),
            WallLocus::Nowhere
        );
    }

    #[test]
    fn wall_locus_points_satisfy_slope_equality() {
        let c7 = ctx(7);
        let a = truncated(2, -1, 2);
        let m = truncated(5, -2, 0);
        let WallLocus::Circle { center_beta, radius_sq } = wall_locus(&a, &m, &c7) else {
            panic!("expected a circle");
        };
        let mut on_checked = 0;
        for k in -16i64..=16 {
            let beta = &center_beta + &Rational::new(k, 97);
            let alpha_sq = &radius_sq - (&beta - &center_beta).square();
            assert!(alpha_sq.is_positive());
            let p = pt(alpha_sq.clone(), beta.clone());
            assert_eq!(mu(&a, &p, &c7), mu(&m, &p, &c7), "on-locus k={k}");
            // Halving α² leaves the locus; slopes must then differ.
            let off = pt(alpha_sq / Rational::from(2), beta);
            assert_ne!(mu(&a, &off, &c7), mu(&m, &off, &c7), "off-locus k={k}");
            on_checked += 1;
        }
        assert!(on_checked >= 20);
    }
}
