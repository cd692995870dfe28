//! Numerical data of prime Fano threefolds of index one: genus catalog,
//! Todd class, Euler pairing, distinguished vector bundles, and the rank-two
//! sublattices used for semiorthogonal-component computations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{euler_pairing, ChernCharacter, Rational, ToddClass};

/// Genera for which the numerical theory here is implemented.
pub const SUPPORTED_GENERA: [i64; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

/// The two deformation types of the degree-ten (genus-six) family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GushelVariant {
    Ordinary,
    Special,
}

impl FromStr for GushelVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ordinary" => Ok(GushelVariant::Ordinary),
            "special" => Ok(GushelVariant::Special),
            other => Err(format!(
                "unknown variant {other:?}; expected \"ordinary\" or \"special\""
            )),
        }
    }
}

impl fmt::Display for GushelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GushelVariant::Ordinary => write!(f, "ordinary"),
            GushelVariant::Special => write!(f, "special"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContextError {
    #[error("unsupported genus {0}; supported genera are 2–10 and 12")]
    UnsupportedGenus(i64),
    #[error("variant is only meaningful for genus 6 (got genus {0})")]
    VariantNotApplicable(i64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("class {name} is not defined for genus {genus}")]
    UndefinedForGenus { name: NamedClass, genus: i64 },
    #[error("unknown class name {name:?}; known names: {catalog}")]
    UnknownName { name: String, catalog: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasisError {
    #[error("the Kuznetsov-component lattice basis is defined only for genus ≥ 6 (got {0})")]
    KuUndefined(i64),
    #[error("the alternative lattice basis is defined only for even genus ≥ 6 (got {0})")]
    AlternativeUndefined(i64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoordsError {
    #[error("class {class} does not lie in the integral lattice spanned by the basis")]
    NotInLattice { class: String },
    #[error("coordinates of {class} overflow the supported integer range")]
    OutOfRange { class: String },
}

/// A prime Fano threefold of index one, identified by its genus
/// (degree `H³ = 2g−2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoContext {
    genus: i64,
    degree: i64,
    gushel_variant: Option<GushelVariant>,
    todd: ToddClass,
}

/// Validated constructor for [`FanoContext`].
pub fn context(genus: i64, variant: Option<GushelVariant>) -> Result<FanoContext, ContextError> {
    if !SUPPORTED_GENERA.contains(&genus) {
        return Err(ContextError::UnsupportedGenus(genus));
    }
    if variant.is_some() && genus != 6 {
        return Err(ContextError::VariantNotApplicable(genus));
    }
    Ok(FanoContext {
        genus,
        degree: 2 * genus - 2,
        gushel_variant: variant,
        todd: ToddClass::with_t2(Rational::new(genus + 11, 6)),
    })
}

impl FanoContext {
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// `H³ = 2g − 2`.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn gushel_variant(&self) -> Option<GushelVariant> {
        self.gushel_variant
    }

    pub fn todd(&self) -> &ToddClass {
        &self.todd
    }

    /// Euler pairing `χ(x, y)` on this threefold.
    pub fn euler(&self, x: &ChernCharacter, y: &ChernCharacter) -> Rational {
        euler_pairing(x, y, &self.todd, self.degree)
    }

    /// The distinguished stable rank-two (rank-three for genus 9, rank-five
    /// for genus 7) bundle of the genus, when one is part of the theory here.
    fn e_bundle(&self) -> Result<ChernCharacter, ClassError> {
        let e = match self.genus {
            6 => ChernCharacter::new(
                2.into(),
                (-1).into(),
                1.into(),
                Rational::new(1, 3),
            ),
            7 => ChernCharacter::from_integers(5, -2, 0, 1),
            8 => ChernCharacter::new(
                2.into(),
                (-1).into(),
                2.into(),
                Rational::new(1, 6),
            ),
            9 => ChernCharacter::new(
                3.into(),
                (-1).into(),
                0.into(),
                Rational::new(1, 3),
            ),
            10 => ChernCharacter::from_integers(2, -1, 3, 0),
            12 => ChernCharacter::new(
                2.into(),
                (-1).into(),
                4.into(),
                Rational::new(-1, 6),
            ),
            g => {
                return Err(ClassError::UndefinedForGenus {
                    name: NamedClass::E,
                    genus: g,
                })
            }
        };
        Ok(e)
    }

    /// Resolve one of the catalog classes to its Chern character.
    pub fn named_class(&self, name: NamedClass) -> Result<ChernCharacter, ClassError> {
        use NamedClass::*;
        let g = self.genus;
        let d = self.degree;
        let minus_one = Rational::new(-1, 1);
        match name {
            O => Ok(ChernCharacter::from_integers(1, 0, 0, 0)),
            OMinusH => Ok(ChernCharacter::exp_line(&minus_one, d)),
            SkyscraperPoint => Ok(ChernCharacter::from_integers(0, 0, 0, 1)),
            IdealOfPoint => Ok(ChernCharacter::from_integers(1, 0, 0, -1)),
            E => self.e_bundle(),
            EMinusH => Ok(self.e_bundle()?.twist(&Rational::one(), d)),
            Q | QMinusH => {
                if g % 2 != 0 || g < 6 {
                    return Err(ClassError::UndefinedForGenus { name, genus: g });
                }
                let n = Rational::from(g / 2 + 2);
                let o = ChernCharacter::from_integers(1, 0, 0, 0);
                let q = &o.scale(&n) - &self.e_bundle()?;
                if name == Q {
                    Ok(q)
                } else {
                    Ok(q.twist(&Rational::one(), d))
                }
            }
            SkyscraperProjection => {
                let ku = ku_basis(self).map_err(|_| ClassError::UndefinedForGenus {
                    name,
                    genus: g,
                })?;
                let (a, b) = match g {
                    7 => (12, -10),
                    9 => (8, -3),
                    _ => (g - 1, -g / 2),
                };
                Ok(ku.combine(a, b))
            }
            GluingKu => {
                if g % 2 != 0 || g < 6 {
                    return Err(ClassError::UndefinedForGenus { name, genus: g });
                }
                let q_twisted = self.named_class(QMinusH)?;
                Ok(&self.e_bundle()? - &q_twisted)
            }
        }
    }
}

/// Catalog of classes addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NamedClass {
    O,
    OMinusH,
    SkyscraperPoint,
    IdealOfPoint,
    E,
    EMinusH,
    Q,
    QMinusH,
    SkyscraperProjection,
    GluingKu,
}

impl NamedClass {
    pub const ALL: [NamedClass; 10] = [
        NamedClass::O,
        NamedClass::OMinusH,
        NamedClass::SkyscraperPoint,
        NamedClass::IdealOfPoint,
        NamedClass::E,
        NamedClass::EMinusH,
        NamedClass::Q,
        NamedClass::QMinusH,
        NamedClass::SkyscraperProjection,
        NamedClass::GluingKu,
    ];

    pub fn catalog() -> String {
        NamedClass::ALL
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NamedClass::O => "O",
            NamedClass::OMinusH => "O(-H)",
            NamedClass::SkyscraperPoint => "O_x",
            NamedClass::IdealOfPoint => "I_x",
            NamedClass::E => "E",
            NamedClass::EMinusH => "E(-H)",
            NamedClass::Q => "Q",
            NamedClass::QMinusH => "Q(-H)",
            NamedClass::SkyscraperProjection => "skyscraper_projection",
            NamedClass::GluingKu => "gluing_Ku",
        };
        write!(f, "{s}")
    }
}

impl FromStr for NamedClass {
    type Err = ClassError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O" => Ok(NamedClass::O),
            "O(-H)" => Ok(NamedClass::OMinusH),
            "O_x" => Ok(NamedClass::SkyscraperPoint),
            "I_x" => Ok(NamedClass::IdealOfPoint),
            "E" => Ok(NamedClass::E),
            "E(-H)" => Ok(NamedClass::EMinusH),
            "Q" => Ok(NamedClass::Q),
            "Q(-H)" => Ok(NamedClass::QMinusH),
            "skyscraper_projection" | "sky" => Ok(NamedClass::SkyscraperProjection),
            "gluing_Ku" | "gluing" => Ok(NamedClass::GluingKu),
            other => Err(ClassError::UnknownName {
                name: other.to_string(),
                catalog: NamedClass::catalog(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Ku,
    Alternative,
}

/// A rank-two sublattice of the numerical Grothendieck group, with its Euler
/// pairing in matrix form (computed, never hardcoded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub kind: BasisKind,
    pub b1: ChernCharacter,
    pub b2: ChernCharacter,
    pub euler_matrix: [[Rational; 2]; 2],
}

impl LatticeBasis {
    fn build(kind: BasisKind, b1: ChernCharacter, b2: ChernCharacter, ctx: &FanoContext) -> Self {
        let euler_matrix = [
            [ctx.euler(&b1, &b1), ctx.euler(&b1, &b2)],
            [ctx.euler(&b2, &b1), ctx.euler(&b2, &b2)],
        ];
        LatticeBasis {
            kind,
            b1,
            b2,
            euler_matrix,
        }
    }

    /// `a·b1 + b·b2`.
    pub fn combine(&self, a: i64, b: i64) -> ChernCharacter {
        &self.b1.scale(&a.into()) + &self.b2.scale(&b.into())
    }

    /// Euler pairing of two coordinate vectors through the matrix.
    pub fn euler_coords(&self, x: (i64, i64), y: (i64, i64)) -> Rational {
        let m = &self.euler_matrix;
        let (x1, x2) = (Rational::from(x.0), Rational::from(x.1));
        let (y1, y2) = (Rational::from(y.0), Rational::from(y.1));
        &x1 * &m[0][0] * &y1 + &x1 * &m[0][1] * &y2 + &x2 * &m[1][0] * &y1 + &x2 * &m[1][1] * &y2
    }
}

/// Basis of the numerical Kuznetsov-component lattice (genus ≥ 6).
pub fn ku_basis(ctx: &FanoContext) -> Result<LatticeBasis, BasisError> {
    let g = ctx.genus();
    if g < 6 {
        return Err(BasisError::KuUndefined(g));
    }
    let (v, w) = match g {
        7 => (
            ChernCharacter::new(2.into(), 0.into(), (-5).into(), Rational::new(1, 2)),
            ChernCharacter::from_integers(0, 1, -6, 0),
        ),
        9 => (
            ChernCharacter::new(1.into(), 0.into(), (-3).into(), Rational::new(1, 2)),
            ChernCharacter::new(0.into(), 1.into(), (-8).into(), Rational::new(2, 3)),
        ),
        _ => (
            ChernCharacter::new(
                1.into(),
                0.into(),
                (-g / 2).into(),
                Rational::new(g - 4, 4),
            ),
            ChernCharacter::new(
                0.into(),
                1.into(),
                Rational::new(-(3 * g - 6), 2),
                Rational::new(7 * g - 40, 12),
            ),
        ),
    };
    Ok(LatticeBasis::build(BasisKind::Ku, v, w, ctx))
}

/// Alternative basis `(1 − 2L, H − (g/2+1)L − ((16−g)/12)P)` used for even
/// genus.
pub fn alt_basis(ctx: &FanoContext) -> Result<LatticeBasis, BasisError> {
    let g = ctx.genus();
    if g < 6 || g % 2 != 0 {
        return Err(BasisError::AlternativeUndefined(g));
    }
    let s = ChernCharacter::from_integers(1, 0, -2, 0);
    let t = ChernCharacter::new(
        0.into(),
        1.into(),
        (-(g / 2 + 1)).into(),
        Rational::new(-(16 - g), 12),
    );
    Ok(LatticeBasis::build(BasisKind::Alternative, s, t, ctx))
}

/// Integer coordinates of a class in a rank-two (optionally rank-three)
/// sublattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KuClassCoords {
    pub a: i64,
    pub b: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
}

impl KuClassCoords {
    pub fn new(a: i64, b: i64) -> Self {
        KuClassCoords { a, b, c: None }
    }
}

/// Solve `Σ coeffs[i]·columns[i] = x` exactly over the rationals.
/// Returns `None` when `x` is not in the span or the columns are dependent.
fn solve_exact(columns: &[&ChernCharacter], x: &ChernCharacter) -> Option<Vec<Rational>> {
    let n = columns.len();
    let rows = |ch: &ChernCharacter| [ch.r.clone(), ch.c.clone(), ch.l.clone(), ch.p.clone()];
    // Augmented 4×(n+1) matrix.
    let mut m: Vec<Vec<Rational>> = (0..4).map(|_| vec![Rational::zero(); n + 1]).collect();
    for (j, col) in columns.iter().enumerate() {
        for (i, entry) in rows(col).into_iter().enumerate() {
            m[i][j] = entry;
        }
    }
    for (i, entry) in rows(x).into_iter().enumerate() {
        m[i][n] = entry;
    }
    // Gaussian elimination with exact pivots.
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(r) = (pivot_row..4).find(|&r| !m[r][col].is_zero()) else {
            return None; // dependent columns
        };
        m.swap(pivot_row, r);
        let inv = Rational::one() / m[pivot_row][col].clone();
        for j in col..=n {
            m[pivot_row][j] = &m[pivot_row][j] * &inv;
        }
        for r in 0..4 {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=n {
                    m[r][j] = &m[r][j] - &f * &m[pivot_row][j];
                }
            }
        }
        pivot_row += 1;
    }
    // Consistency: remaining rows must have zero RHS.
    for r in pivot_row..4 {
        if !m[r][n].is_zero() {
            return None;
        }
    }
    Some((0..n).map(|j| m[j][n].clone()).collect())
}

fn integral_coord(value: &Rational, class: &ChernCharacter) -> Result<i64, CoordsError> {
    if !value.is_integer() {
        return Err(CoordsError::NotInLattice {
            class: class.to_string(),
        });
    }
    value.to_i64().ok_or_else(|| CoordsError::OutOfRange {
        class: class.to_string(),
    })
}

/// Exact integer coordinates of `x` in the given rank-two basis.
pub fn coords_of(basis: &LatticeBasis, x: &ChernCharacter) -> Result<KuClassCoords, CoordsError> {
    let sol = solve_exact(&[&basis.b1, &basis.b2], x).ok_or_else(|| CoordsError::NotInLattice {
        class: x.to_string(),
    })?;
    Ok(KuClassCoords {
        a: integral_coord(&sol[0], x)?,
        b: integral_coord(&sol[1], x)?,
        c: None,
    })
}

/// Exact integer coordinates of `x` in the basis extended by a third class
/// (used for mixed classes `a·b1 + b·b2 + c·e`).
pub fn coords_of_extended(
    basis: &LatticeBasis,
    e: &ChernCharacter,
    x: &ChernCharacter,
) -> Result<KuClassCoords, CoordsError> {
    let sol =
        solve_exact(&[&basis.b1, &basis.b2, e], x).ok_or_else(|| CoordsError::NotInLattice {
            class: x.to_string(),
        })?;
    Ok(KuClassCoords {
        a: integral_coord(&sol[0], x)?,
        b: integral_coord(&sol[1], x)?,
        c: Some(integral_coord(&sol[2], x)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: i64) -> FanoContext {
        context(g, None).unwrap()
    }

    fn int_matrix(m: &[[Rational; 2]; 2]) -> [[i64; 2]; 2] {
        [
            [m[0][0].to_i64().unwrap(), m[0][1].to_i64().unwrap()],
            [m[1][0].to_i64().unwrap(), m[1][1].to_i64().unwrap()],
        ]
    }

    #[test]
    fn context_validation() {
        assert_eq!(context(11, None), Err(ContextError::UnsupportedGenus(11)));
        assert_eq!(context(1, None), Err(ContextError::UnsupportedGenus(1)));
        assert_eq!(context(13, None), Err(ContextError::UnsupportedGenus(13)));
        assert_eq!(
            context(8, Some(GushelVariant::Ordinary)),
            Err(ContextError::VariantNotApplicable(8))
        );
        assert!(context(6, Some(GushelVariant::Special)).is_ok());
        assert_eq!(ctx(9).degree(), 16);
    }

    #[test]
    fn ku_euler_matrices() {
        // Even genus: [[1−g/2, −g/2], [3−g, 1−g]].
        for g in [6i64, 8, 10, 12] {
            let b = ku_basis(&ctx(g)).unwrap();
            assert_eq!(
                int_matrix(&b.euler_matrix),
                [[1 - g / 2, -g / 2], [3 - g, 1 - g]],
                "genus {g}"
            );
        }
        let b7 = ku_basis(&ctx(7)).unwrap();
        assert_eq!(int_matrix(&b7.euler_matrix), [[-6, -5], [-7, -6]]);
        let b9 = ku_basis(&ctx(9)).unwrap();
        assert_eq!(int_matrix(&b9.euler_matrix), [[-2, -3], [-5, -8]]);
        assert_eq!(ku_basis(&ctx(5)), Err(BasisError::KuUndefined(5)));
    }

    #[test]
    fn alternative_euler_matrices() {
        for g in [6i64, 8, 10, 12] {
            let b = alt_basis(&ctx(g)).unwrap();
            assert_eq!(
                int_matrix(&b.euler_matrix),
                [[-1, -2], [-g / 2 + 1, -g + 1]],
                "genus {g}"
            );
        }
        assert_eq!(alt_basis(&ctx(7)), Err(BasisError::AlternativeUndefined(7)));
        assert_eq!(alt_basis(&ctx(9)), Err(BasisError::AlternativeUndefined(9)));
    }

    #[test]
    fn e_bundle_is_exceptional() {
        // χ(E, E) = 1 for every genus with a distinguished bundle.
        for g in [6i64, 7, 8, 9, 10, 12] {
            let c = ctx(g);
            let e = c.named_class(NamedClass::E).unwrap();
            assert_eq!(c.euler(&e, &e), Rational::one(), "genus {g}");
        }
    }

    #[test]
    fn skyscraper_projection_identities() {
        // Even genus: ch(pr(O_x)) = (g−1, −(g/2)H, (g(g−4)/4)L, −((g+2)(g−12)/24)P).
        for g in [6i64, 8, 10, 12] {
            let c = ctx(g);
            let sky = c.named_class(NamedClass::SkyscraperProjection).unwrap();
            let expect = ChernCharacter::new(
                (g - 1).into(),
                (-g / 2).into(),
                Rational::new(g * (g - 4), 4),
                Rational::new(-(g + 2) * (g - 12), 24),
            );
            assert_eq!(sky, expect, "genus {g}");
        }
        // Genus 7: 12v − 10w = (24, −10H, 0, 6P).
        let sky7 = ctx(7).named_class(NamedClass::SkyscraperProjection).unwrap();
        assert_eq!(sky7, ChernCharacter::from_integers(24, -10, 0, 6));
        // Genus 9: 8v − 3w = (8, −3H, 0, 2P).
        let sky9 = ctx(9).named_class(NamedClass::SkyscraperProjection).unwrap();
        assert_eq!(sky9, ChernCharacter::from_integers(8, -3, 0, 2));
    }

    #[test]
    fn skyscraper_projection_chi_self() {
        let expected = [(6, -5), (7, -24), (8, -7), (9, -8), (10, -9), (12, -11)];
        for (g, chi) in expected {
            let c = ctx(g);
            let sky = c.named_class(NamedClass::SkyscraperProjection).unwrap();
            assert_eq!(c.euler(&sky, &sky), Rational::from(chi), "genus {g}");
        }
    }

    #[test]
    fn quotient_bundle_shape() {
        // Q sits in 0 → E → O^{g/2+2} → Q → 0, so rank(Q) = g/2 and
        // ch(E) + ch(Q) = (g/2+2)·ch(O).
        for g in [6i64, 8, 10, 12] {
            let c = ctx(g);
            let e = c.named_class(NamedClass::E).unwrap();
            let q = c.named_class(NamedClass::Q).unwrap();
            assert_eq!(q.r, Rational::from(g / 2));
            let total = &e + &q;
            assert_eq!(
                total,
                ChernCharacter::from_integers(1, 0, 0, 0).scale(&Rational::from(g / 2 + 2))
            );
        }
        assert!(matches!(
            ctx(7).named_class(NamedClass::Q),
            Err(ClassError::UndefinedForGenus { .. })
        ));
    }

    #[test]
    fn gluing_class_genus_ten() {
        let c = ctx(10);
        let gluing = c.named_class(NamedClass::GluingKu).unwrap();
        let ku = ku_basis(&c).unwrap();
        assert_eq!(gluing, ku.combine(-3, 3));
        assert_eq!(c.euler(&gluing, &gluing), Rational::from(-9));
        // The same χ in the alternative basis for the class −3s.
        let alt = alt_basis(&c).unwrap();
        assert_eq!(alt.euler_coords((-3, 0), (-3, 0)), Rational::from(-9));
    }

    #[test]
    fn gluing_class_in_lattice_all_even_genera() {
        for g in [6i64, 8, 10, 12] {
            let c = ctx(g);
            let gluing = c.named_class(NamedClass::GluingKu).unwrap();
            let ku = ku_basis(&c).unwrap();
            let coords = coords_of(&ku, &gluing).unwrap();
            assert_eq!(ku.combine(coords.a, coords.b), gluing, "genus {g}");
        }
    }

    #[test]
    fn coords_roundtrip_and_rejection() {
        let c = ctx(7);
        let ku = ku_basis(&c).unwrap();
        let x = ku.combine(12, -10);
        assert_eq!(coords_of(&ku, &x).unwrap(), KuClassCoords::new(12, -10));
        // O is not in the Kuznetsov lattice.
        let o = c.named_class(NamedClass::O).unwrap();
        assert!(matches!(
            coords_of(&ku, &o),
            Err(CoordsError::NotInLattice { .. })
        ));
        // Extended by ch(E): I_x = −12v + 10w + 5E exactly.
        let e = c.named_class(NamedClass::E).unwrap();
        let ix = c.named_class(NamedClass::IdealOfPoint).unwrap();
        let coords = coords_of_extended(&ku, &e, &ix).unwrap();
        assert_eq!((coords.a, coords.b, coords.c), (-12, 10, Some(5)));
    }

    #[test]
    fn named_class_parsing() {
        assert_eq!("sky".parse::<NamedClass>().unwrap(), NamedClass::SkyscraperProjection);
        assert_eq!("Q(-H)".parse::<NamedClass>().unwrap(), NamedClass::QMinusH);
        assert!(matches!(
            "bogus".parse::<NamedClass>(),
            Err(ClassError::UnknownName { .. })
        ));
    }
}
