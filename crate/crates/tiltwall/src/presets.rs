//! Shipped constraint-system texts mirroring the built-in searches, so every
//! solver in [`crate::search`] has a declarative twin that can be replayed
//! through [`crate::constraints`] and [`crate::search::brute_force_oracle`].

use crate::constraints::EvalEnv;
use crate::search::{
    cone_point, preset_for_genus, skyscraper_destab_point, skyscraper_target, ConePreset,
    SearchError,
};
use crate::threefold::{ku_basis, FanoContext, GushelVariant};

/// One shipped constraint system.
#[derive(Clone, Copy, Debug)]
pub struct PresetEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub description: &'static str,
}

/// Every shipped system, in catalog order.
pub const PRESETS: &[PresetEntry] = &[
    PresetEntry {
        name: "destab-g6-ordinary",
        text: include_str!("presets/destab_g6_ordinary.cst"),
        description: "skyscraper-projection destabilizers, genus 6 ordinary (Ext1 budget 6)",
    },
    PresetEntry {
        name: "destab-g6-special",
        text: include_str!("presets/destab_g6_special.cst"),
        description: "skyscraper-projection destabilizers, genus 6 special (Ext1 budget 7)",
    },
    PresetEntry {
        name: "destab-g7",
        text: include_str!("presets/destab_g7.cst"),
        description: "skyscraper-projection destabilizers, genus 7",
    },
    PresetEntry {
        name: "destab-g8",
        text: include_str!("presets/destab_g8.cst"),
        description: "skyscraper-projection destabilizers, genus 8",
    },
    PresetEntry {
        name: "destab-g9",
        text: include_str!("presets/destab_g9.cst"),
        description: "skyscraper-projection destabilizers, genus 9",
    },
    PresetEntry {
        name: "destab-g10",
        text: include_str!("presets/destab_g10.cst"),
        description: "skyscraper-projection destabilizers, genus 10",
    },
    PresetEntry {
        name: "destab-g12",
        text: include_str!("presets/destab_g12.cst"),
        description: "skyscraper-projection destabilizers, genus 12",
    },
    PresetEntry {
        name: "cone-a8",
        text: include_str!("presets/cone_a8.cst"),
        description: "cone inequality system for genus 7, 8, 9, 10, 12",
    },
    PresetEntry {
        name: "cone-a9",
        text: include_str!("presets/cone_a9.cst"),
        description: "cone inequality system for genus 6 (involution pullback)",
    },
];

pub fn preset_text(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|p| p.name == name).map(|p| p.text)
}

/// Catalog name of the destabilizer system for a genus; genus 6 needs the
/// variant because the Ext¹ budget differs.
pub fn destab_preset_name(
    genus: i64,
    variant: Option<GushelVariant>,
) -> Result<&'static str, SearchError> {
    match genus {
        6 => match variant {
            Some(GushelVariant::Ordinary) => Ok("destab-g6-ordinary"),
            Some(GushelVariant::Special) => Ok("destab-g6-special"),
            None => Err(SearchError::VariantRequired),
        },
        7 => Ok("destab-g7"),
        8 => Ok("destab-g8"),
        9 => Ok("destab-g9"),
        10 => Ok("destab-g10"),
        12 => Ok("destab-g12"),
        g => Err(crate::threefold::BasisError::KuUndefined(g).into()),
    }
}

/// Catalog name of the cone system a genus uses.
pub fn cone_preset_name(ctx: &FanoContext) -> Result<&'static str, SearchError> {
    Ok(match preset_for_genus(ctx)? {
        ConePreset::A8 => "cone-a8",
        ConePreset::A9 => "cone-a9",
    })
}

/// Evaluation environment the destabilizer presets assume: the genus's
/// skyscraper point, both bases, and `target` bound to the skyscraper
/// projection's negative.
pub fn destab_env(ctx: &FanoContext) -> Result<EvalEnv, SearchError> {
    let point = skyscraper_destab_point(ctx)?;
    let coords = skyscraper_target(ctx)?;
    let ku = ku_basis(ctx)?;
    Ok(EvalEnv::new(ctx.clone(), point)
        .with_bases()
        .with_target(ku.combine(coords.a, coords.b)))
}

/// Evaluation environment the cone presets assume: the genus's cone point
/// and both bases (the systems reference `I_x` and `E` directly).
pub fn cone_env(ctx: &FanoContext) -> Result<EvalEnv, SearchError> {
    Ok(EvalEnv::new(ctx.clone(), cone_point(ctx)?).with_bases())
}
