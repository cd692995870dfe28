//! Subcommand handlers: translate parsed flags into library calls and render
//! the results as human text or JSON.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use tiltwall::constraints::{parse, ConstraintSystem, EvalEnv, VarName};
use tiltwall::threefold::{
    alt_basis, context, ku_basis, FanoContext, GushelVariant, KuClassCoords, LatticeBasis,
    NamedClass,
};
use tiltwall::{
    brute_force_oracle, charge, classical_mu, cone_env, cone_point, default_ext1_bound, destab_env,
    discriminant, filter_by_li_bound, find_ku_destabilizers, find_tilt_walls, li_bound_check,
    mu, mu0, normalized_discriminant, preset_for_genus, preset_text, rotated_charge,
    skyscraper_destab_point, skyscraper_target, solve_cone_system, wall_locus, Charge,
    ChernCharacter, ConePreset, LiBoundStatus, Rational, SearchOptions, SearchSystem, Slope,
    TiltPoint, TruncatedClass, WallCandidate, WallLocus, PRESETS,
};

use crate::args::{Cli, Command};
use crate::classes::{parse_rational, parse_truncated, resolve_class};
use crate::{plot, usage, verify, CliError};

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Catalog => catalog(cli, out),
        Command::Chi { class_a, class_b } => chi(cli, class_a, class_b, out),
        Command::Charge {
            class,
            alpha_sq,
            beta,
        } => charge_at_point(cli, class, alpha_sq, beta, out),
        Command::Walls {
            target,
            beta,
            strict,
            no_strict,
            no_li_filter,
            ch2_denominator,
            require_bounded,
        } => walls(
            cli,
            target,
            beta,
            resolve_strict(*strict, *no_strict),
            *no_li_filter,
            *ch2_denominator,
            *require_bounded,
            out,
        ),
        Command::Destab {
            preset,
            constraints,
            preset_map,
            ext1_bound,
            alpha_sq,
            beta,
            require_bounded,
        } => destab(
            cli,
            preset.as_deref(),
            constraints.as_deref(),
            preset_map.as_deref(),
            *ext1_bound,
            alpha_sq.as_deref(),
            beta.as_deref(),
            *require_bounded,
            out,
        ),
        Command::Cone {
            preset,
            constraints,
            preset_map,
        } => cone(
            cli,
            preset.as_deref(),
            constraints.as_deref(),
            preset_map.as_deref(),
            out,
        ),
        Command::WallCircle { class_a, class_m } => wall_circle(cli, class_a, class_m, out),
        Command::PlotWalls {
            target,
            beta,
            denominator,
            svg,
            no_li_filter,
        } => plot_walls(
            cli,
            target,
            beta,
            *denominator,
            svg.as_deref(),
            *no_li_filter,
            out,
        ),
        Command::Verify { only } => run_verify(cli, only, out),
    }
}

fn require_ctx(cli: &Cli) -> Result<FanoContext, CliError> {
    let genus = cli
        .genus
        .ok_or_else(|| usage("--genus is required for this command"))?;
    context(genus, cli.variant).map_err(usage)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| usage(format!("could not encode the result as JSON: {e}")))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn genus_header(ctx: &FanoContext) -> String {
    match ctx.gushel_variant() {
        Some(v) => format!("genus {} ({v})  degree {}", ctx.genus(), ctx.degree()),
        None => format!("genus {}  degree {}", ctx.genus(), ctx.degree()),
    }
}

fn write_warnings(out: &mut dyn Write, warnings: &[String]) -> std::io::Result<()> {
    for w in warnings {
        writeln!(out, "warning: {w}")?;
    }
    Ok(())
}

fn completeness_line(out: &mut dyn Write, complete: bool) -> std::io::Result<()> {
    if complete {
        writeln!(out, "complete")
    } else {
        writeln!(out, "incomplete (see warnings)")
    }
}

// --- catalog ---------------------------------------------------------------

#[derive(Serialize)]
struct BasisOut {
    b1: ChernCharacter,
    b2: ChernCharacter,
    euler_matrix: [[Rational; 2]; 2],
}

impl BasisOut {
    fn from_basis(basis: LatticeBasis) -> Self {
        BasisOut {
            b1: basis.b1,
            b2: basis.b2,
            euler_matrix: basis.euler_matrix,
        }
    }
}

#[derive(Serialize)]
struct ClassOut {
    name: String,
    ch: ChernCharacter,
}

#[derive(Serialize)]
struct CatalogOut {
    genus: i64,
    degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<GushelVariant>,
    classes: Vec<ClassOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ku_basis: Option<BasisOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alternative_basis: Option<BasisOut>,
}

fn matrix_line(m: &[[Rational; 2]; 2]) -> String {
    format!(
        "[[{}, {}], [{}, {}]]",
        m[0][0], m[0][1], m[1][0], m[1][1]
    )
}

fn catalog(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;
    let classes: Vec<ClassOut> = NamedClass::ALL
        .iter()
        .filter_map(|&name| {
            ctx.named_class(name).ok().map(|ch| ClassOut {
                name: name.to_string(),
                ch,
            })
        })
        .collect();
    let ku = ku_basis(&ctx).ok().map(BasisOut::from_basis);
    let alt = alt_basis(&ctx).ok().map(BasisOut::from_basis);

    if cli.json {
        return emit_json(
            out,
            &CatalogOut {
                genus: ctx.genus(),
                degree: ctx.degree(),
                variant: ctx.gushel_variant(),
                classes,
                ku_basis: ku,
                alternative_basis: alt,
            },
        );
    }

    writeln!(out, "{}", genus_header(&ctx))?;
    writeln!(out, "classes:")?;
    let width = classes.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for class in &classes {
        writeln!(out, "  {:<width$}  {}", class.name, class.ch)?;
    }
    if let Some(basis) = ku {
        writeln!(out, "Kuznetsov basis:")?;
        writeln!(out, "  v = {}", basis.b1)?;
        writeln!(out, "  w = {}", basis.b2)?;
        writeln!(out, "  euler matrix {}", matrix_line(&basis.euler_matrix))?;
    }
    if let Some(basis) = alt {
        writeln!(out, "alternative basis:")?;
        writeln!(out, "  s = {}", basis.b1)?;
        writeln!(out, "  t = {}", basis.b2)?;
        writeln!(out, "  euler matrix {}", matrix_line(&basis.euler_matrix))?;
    }
    Ok(())
}

// --- chi ---------------------------------------------------------------------

#[derive(Serialize)]
struct ChiOut {
    genus: i64,
    class_a: ChernCharacter,
    class_b: ChernCharacter,
    chi: Rational,
}

fn chi(cli: &Cli, spec_a: &str, spec_b: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;
    let a = resolve_class(&ctx, spec_a)?;
    let b = resolve_class(&ctx, spec_b)?;
    let value = ctx.euler(&a, &b);
    if cli.json {
        return emit_json(
            out,
            &ChiOut {
                genus: ctx.genus(),
                class_a: a,
                class_b: b,
                chi: value,
            },
        );
    }
    writeln!(out, "{value}")?;
    Ok(())
}

// --- charge --------------------------------------------------------------------

#[derive(Serialize)]
struct ChargeParts {
    re: Rational,
    im: Rational,
}

impl From<Charge> for ChargeParts {
    fn from(z: Charge) -> Self {
        ChargeParts { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct ChargeOut {
    genus: i64,
    class: ChernCharacter,
    point: TiltPoint,
    z: ChargeParts,
    z0: ChargeParts,
    mu: Slope,
    mu0: Slope,
    mu_classical: Slope,
    discriminant: Rational,
    normalized_discriminant: Rational,
    li_bound: LiBoundStatus,
}

fn li_status_name(status: LiBoundStatus) -> &'static str {
    match status {
        LiBoundStatus::Consistent => "consistent",
        LiBoundStatus::Violated => "violated",
        LiBoundStatus::Inapplicable => "inapplicable",
    }
}

fn charge_display(z: &ChargeParts) -> String {
    format!("{} + ({})i", z.re, z.im)
}

fn charge_at_point(
    cli: &Cli,
    class_spec: &str,
    alpha_sq_spec: &str,
    beta_spec: &str,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;
    let x = resolve_class(&ctx, class_spec)?;
    let pt = TiltPoint::new(parse_rational(alpha_sq_spec)?, parse_rational(beta_spec)?)
        .map_err(usage)?;
    let result = ChargeOut {
        genus: ctx.genus(),
        z: charge(&x, &pt, &ctx).into(),
        z0: rotated_charge(&x, &pt, &ctx).into(),
        mu: mu(&x, &pt, &ctx),
        mu0: mu0(&x, &pt, &ctx),
        mu_classical: classical_mu(&x, &ctx),
        discriminant: discriminant(&x, &ctx),
        normalized_discriminant: normalized_discriminant(&x, &ctx),
        li_bound: li_bound_check(&x, &ctx),
        class: x,
        point: pt,
    };
    if cli.json {
        return emit_json(out, &result);
    }
    writeln!(out, "class {}", result.class)?;
    writeln!(out, "{}", genus_header(&ctx))?;
    writeln!(out, "point {}", result.point)?;
    writeln!(out, "Z            = {}", charge_display(&result.z))?;
    writeln!(out, "Z0           = {}", charge_display(&result.z0))?;
    writeln!(out, "mu           = {}", result.mu)?;
    writeln!(out, "mu0          = {}", result.mu0)?;
    writeln!(out, "mu_classical = {}", result.mu_classical)?;
    writeln!(out, "discriminant = {}", result.discriminant)?;
    writeln!(out, "normalized   = {}", result.normalized_discriminant)?;
    writeln!(out, "li bound     = {}", li_status_name(result.li_bound))?;
    Ok(())
}

// --- walls -----------------------------------------------------------------------

fn resolve_strict(strict: bool, no_strict: bool) -> Option<bool> {
    if strict {
        Some(true)
    } else if no_strict {
        Some(false)
    } else {
        None
    }
}

fn search_options(cli: &Cli, require_bounded: bool) -> SearchOptions {
    SearchOptions {
        strict_ch1_bounds: None,
        max_rank_cap: cli.max_rank.unwrap_or(60),
        require_bounded,
        ch2_denominator: 1,
    }
}

#[derive(Serialize)]
struct WallsOut<'a> {
    genus: i64,
    target: &'a TruncatedClass,
    beta: &'a Rational,
    options: &'a tiltwall::search::ResolvedOptions,
    li_filter: bool,
    solutions: &'a [WallCandidate],
    complete: bool,
    warnings: &'a [String],
}

fn write_pairs(out: &mut dyn Write, solutions: &[WallCandidate]) -> std::io::Result<()> {
    for cand in solutions {
        writeln!(
            out,
            "  {} + {}  alpha^2 = {}",
            cand.pair.0, cand.pair.1, cand.alpha_sq_wall
        )?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn walls(
    cli: &Cli,
    target_spec: &str,
    beta_spec: &str,
    strict: Option<bool>,
    no_li_filter: bool,
    ch2_denominator: i64,
    require_bounded: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;
    let target = parse_truncated(target_spec)?;
    let beta = parse_rational(beta_spec)?;
    let opts = SearchOptions {
        strict_ch1_bounds: strict,
        ch2_denominator,
        ..search_options(cli, require_bounded)
    };
    let result = find_tilt_walls(&target, &beta, &ctx, &opts)?;
    let solutions = if no_li_filter {
        result.solutions.clone()
    } else {
        filter_by_li_bound(&result.solutions, &ctx)
    };

    if cli.json {
        return emit_json(
            out,
            &WallsOut {
                genus: ctx.genus(),
                target: &result.target,
                beta: &result.beta,
                options: &result.options,
                li_filter: !no_li_filter,
                solutions: &solutions,
                complete: result.complete,
                warnings: &result.warnings,
            },
        );
    }

    writeln!(
        out,
        "target {}  beta {}  genus {}",
        result.target,
        result.beta,
        ctx.genus()
    )?;
    if ch2_denominator > 1 {
        writeln!(out, "ch2 entries are in units of L/{ch2_denominator}")?;
    }
    write_warnings(out, &result.warnings)?;
    let filter_note = if no_li_filter {
        "slope-bound filter off"
    } else {
        "slope-bound filter applied"
    };
    writeln!(out, "{} ({filter_note}):", plural(solutions.len(), "pair"))?;
    write_pairs(out, &solutions)?;
    completeness_line(out, result.complete)?;
    Ok(())
}

// --- destab ------------------------------------------------------------------------

enum DslSource {
    File(PathBuf),
    Named { name: String, path: Option<PathBuf> },
}

impl DslSource {
    fn label(&self) -> String {
        match self {
            DslSource::File(path) => format!("file:{}", path.display()),
            DslSource::Named { name, .. } => format!("preset:{name}"),
        }
    }

    fn text(&self) -> Result<String, CliError> {
        match self {
            DslSource::File(path) => Ok(fs::read_to_string(path)?),
            DslSource::Named {
                path: Some(path), ..
            } => Ok(fs::read_to_string(path)?),
            DslSource::Named { name, path: None } => Ok(preset_text(name)
                .expect("resolution only constructs shipped names that exist")
                .to_string()),
        }
    }
}

fn load_preset_map(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| {
        usage(format!(
            "{}: expected a TOML table of name = \"constraint file\" entries: {e}",
            path.display()
        ))
    })
}

/// Resolve a preset name against `--preset-map` first (an explicit mapping
/// shadows the shipped catalog), then the shipped systems.
fn resolve_named_source(
    name: &str,
    preset_map: Option<&Path>,
    extra: &str,
) -> Result<DslSource, CliError> {
    if let Some(map_path) = preset_map {
        let table = load_preset_map(map_path)?;
        if let Some(rel) = table.get(name) {
            let path = match map_path.parent() {
                Some(parent) if !parent.as_os_str().is_empty() => parent.join(rel),
                _ => PathBuf::from(rel),
            };
            return Ok(DslSource::Named {
                name: name.to_string(),
                path: Some(path),
            });
        }
    }
    if preset_text(name).is_some() {
        return Ok(DslSource::Named {
            name: name.to_string(),
            path: None,
        });
    }
    let shipped: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
    Err(usage(format!(
        "unknown preset \"{name}\": expected {extra}one of {}, or a name from --preset-map",
        shipped.join(", ")
    )))
}

fn dsl_search_box(system: &ConstraintSystem) -> Result<(Vec<VarName>, Vec<(i64, i64)>), CliError> {
    let vars = system.used_variables();
    if vars.is_empty() {
        return Err(usage(
            "the constraint system uses no variables, so there is nothing to enumerate",
        ));
    }
    let mut ranges = Vec::with_capacity(vars.len());
    for v in &vars {
        match system.declared_range(*v) {
            Some(range) => ranges.push(range),
            None => {
                return Err(usage(format!(
                    "variable {v} has no declared range; add \"var {v} in [lo, hi]\""
                )))
            }
        }
    }
    Ok((vars, ranges))
}

#[derive(Serialize)]
struct DslOut {
    genus: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<GushelVariant>,
    source: String,
    point: TiltPoint,
    variables: Vec<String>,
    #[serde(rename = "box")]
    search_box: Vec<(i64, i64)>,
    solutions: Vec<Vec<i64>>,
    complete: bool,
}

fn run_dsl(
    cli: &Cli,
    ctx: &FanoContext,
    source: &DslSource,
    env: &EvalEnv,
    point: TiltPoint,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = source.text()?;
    let system = parse(&text).map_err(|e| usage(format!("{}: {e}", source.label())))?;
    let (vars, search_box) = dsl_search_box(&system)?;
    let solutions = brute_force_oracle(&SearchSystem::Dsl {
        system: &system,
        env,
    }, &search_box)?;

    if cli.json {
        return emit_json(
            out,
            &DslOut {
                genus: ctx.genus(),
                variant: ctx.gushel_variant(),
                source: source.label(),
                point,
                variables: vars.iter().map(|v| v.to_string()).collect(),
                search_box,
                solutions,
                complete: true,
            },
        );
    }

    writeln!(out, "constraint system {}  {}", source.label(), genus_header(ctx))?;
    writeln!(out, "point {point}")?;
    let ranges: Vec<String> = vars
        .iter()
        .zip(&search_box)
        .map(|(v, (lo, hi))| format!("{v} in [{lo}, {hi}]"))
        .collect();
    writeln!(out, "variables {}", ranges.join(", "))?;
    writeln!(out, "{}:", plural(solutions.len(), "solution"))?;
    for sol in &solutions {
        let parts: Vec<String> = sol.iter().map(|n| n.to_string()).collect();
        writeln!(out, "  ({})", parts.join(", "))?;
    }
    writeln!(out, "complete")?;
    Ok(())
}

#[derive(Serialize)]
struct DestabOut {
    genus: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<GushelVariant>,
    preset: &'static str,
    target: KuClassCoords,
    point: TiltPoint,
    ext1_bound: i64,
    solutions: Vec<[i64; 4]>,
    complete: bool,
    warnings: Vec<String>,
}

/// The skyscraper point with optional per-coordinate overrides.
fn destab_point(
    ctx: &FanoContext,
    alpha_sq: Option<&str>,
    beta: Option<&str>,
) -> Result<TiltPoint, CliError> {
    let base = skyscraper_destab_point(ctx)?;
    let alpha_sq = match alpha_sq {
        Some(spec) => parse_rational(spec)?,
        None => base.alpha_sq().clone(),
    };
    let beta = match beta {
        Some(spec) => parse_rational(spec)?,
        None => base.beta().clone(),
    };
    TiltPoint::new(alpha_sq, beta).map_err(usage)
}

#[allow(clippy::too_many_arguments)]
fn destab(
    cli: &Cli,
    preset: Option<&str>,
    constraints: Option<&Path>,
    preset_map: Option<&Path>,
    ext1_bound: Option<i64>,
    alpha_sq: Option<&str>,
    beta: Option<&str>,
    require_bounded: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;

    let source = if let Some(path) = constraints {
        Some(DslSource::File(path.to_path_buf()))
    } else {
        match preset.unwrap_or("skyscraper") {
            "skyscraper" => None,
            name => Some(resolve_named_source(name, preset_map, "\"skyscraper\", ")?),
        }
    };

    if let Some(source) = source {
        if ext1_bound.is_some() {
            return Err(usage(
                "--ext1-bound applies only to the built-in skyscraper preset; \
                 edit the constraint system instead",
            ));
        }
        let point = destab_point(&ctx, alpha_sq, beta)?;
        let env = if alpha_sq.is_some() || beta.is_some() {
            let coords = skyscraper_target(&ctx)?;
            let ku = ku_basis(&ctx).map_err(tiltwall::SearchError::from)?;
            EvalEnv::new(ctx.clone(), point.clone())
                .with_bases()
                .with_target(ku.combine(coords.a, coords.b))
        } else {
            destab_env(&ctx)?
        };
        return run_dsl(cli, &ctx, &source, &env, point, out);
    }

    let target = skyscraper_target(&ctx)?;
    let point = destab_point(&ctx, alpha_sq, beta)?;
    let bound = match ext1_bound {
        Some(b) => b,
        None => default_ext1_bound(&ctx)?,
    };
    let opts = search_options(cli, require_bounded);
    let result = find_ku_destabilizers(&target, &ctx, &point, bound, &opts)?;

    if cli.json {
        return emit_json(
            out,
            &DestabOut {
                genus: ctx.genus(),
                variant: ctx.gushel_variant(),
                preset: "skyscraper",
                target: result.target,
                point: result.point,
                ext1_bound: result.ext1_bound,
                solutions: result.solutions,
                complete: result.complete,
                warnings: result.warnings,
            },
        );
    }

    writeln!(
        out,
        "skyscraper projection target ({}, {}) in the Kuznetsov basis  {}",
        result.target.a,
        result.target.b,
        genus_header(&ctx)
    )?;
    writeln!(
        out,
        "point {}  ext1 bound {}",
        result.point, result.ext1_bound
    )?;
    write_warnings(out, &result.warnings)?;
    writeln!(out, "{}:", plural(result.solutions.len(), "solution"))?;
    for [a, b, c, d] in &result.solutions {
        writeln!(out, "  A = ({a}, {b})  B = ({c}, {d})")?;
    }
    completeness_line(out, result.complete)?;
    Ok(())
}

// --- cone ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ConeOut {
    genus: i64,
    preset: String,
    solutions: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_truncations: Option<Vec<TruncatedClass>>,
    complete: bool,
    warnings: Vec<String>,
}

/// ch≤2 of B = a·v + b·w + c·[E] for an A8 solution.
fn b_truncation(ctx: &FanoContext, sol: &[i64]) -> Result<TruncatedClass, CliError> {
    let ku = ku_basis(ctx).map_err(tiltwall::SearchError::from)?;
    let e = ctx.named_class(NamedClass::E).map_err(usage)?;
    let ch = &ku.combine(sol[0], sol[1]) + &e.scale(&Rational::from(sol[2]));
    TruncatedClass::from_chern(&ch)
        .ok_or_else(|| usage("B-class truncation has non-integer entries"))
}

fn cone(
    cli: &Cli,
    preset: Option<&str>,
    constraints: Option<&Path>,
    preset_map: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;

    let builtin: Option<ConePreset> = if constraints.is_some() {
        None
    } else {
        match preset {
            None => Some(preset_for_genus(&ctx)?),
            Some(name) => name.parse::<ConePreset>().ok(),
        }
    };

    let Some(shape) = builtin else {
        let source = if let Some(path) = constraints {
            DslSource::File(path.to_path_buf())
        } else {
            resolve_named_source(preset.unwrap_or_default(), preset_map, "\"A8\", \"A9\", ")?
        };
        let point = cone_point(&ctx)?;
        let env = cone_env(&ctx)?;
        return run_dsl(cli, &ctx, &source, &env, point, out);
    };

    let result = solve_cone_system(shape, &ctx)?;
    let b_truncations = match shape {
        ConePreset::A8 => Some(
            result
                .solutions
                .iter()
                .map(|sol| b_truncation(&ctx, sol))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        ConePreset::A9 => None,
    };

    if cli.json {
        return emit_json(
            out,
            &ConeOut {
                genus: result.genus,
                preset: result.preset.to_string(),
                solutions: result.solutions,
                b_truncations,
                complete: result.complete,
                warnings: result.warnings,
            },
        );
    }

    writeln!(out, "cone system {}  {}", result.preset, genus_header(&ctx))?;
    write_warnings(out, &result.warnings)?;
    match shape {
        ConePreset::A8 => {
            writeln!(out, "{}:", plural(result.solutions.len(), "solution"))?;
            let truncations = b_truncations.unwrap_or_default();
            for (sol, b_ch) in result.solutions.iter().zip(&truncations) {
                writeln!(
                    out,
                    "  (a, b, c) = ({}, {}, {})  B truncation {}",
                    sol[0], sol[1], sol[2], b_ch
                )?;
            }
        }
        ConePreset::A9 => {
            writeln!(
                out,
                "{} (projected to (a, b)):",
                plural(result.solutions.len(), "solution")
            )?;
            for sol in &result.solutions {
                writeln!(out, "  ({}, {})", sol[0], sol[1])?;
            }
        }
    }
    completeness_line(out, result.complete)?;
    Ok(())
}

// --- wall-circle ------------------------------------------------------------------------

#[derive(Serialize)]
struct WallCircleOut {
    genus: i64,
    class_a: ChernCharacter,
    class_m: ChernCharacter,
    locus: WallLocus,
}

fn wall_circle(cli: &Cli, spec_a: &str, spec_m: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = require_ctx(cli)?;
    let a = resolve_class(&ctx, spec_a)?;
    let m = resolve_class(&ctx, spec_m)?;
    let locus = wall_locus(&a, &m, &ctx);
    if cli.json {
        return emit_json(
            out,
            &WallCircleOut {
                genus: ctx.genus(),
                class_a: a,
                class_m: m,
                locus,
            },
        );
    }
    match locus {
        WallLocus::Circle {
            center_beta,
            radius_sq,
        } => writeln!(
            out,
            "circle  center beta = {center_beta}  radius^2 = {radius_sq}"
        )?,
        WallLocus::VerticalLine { beta } => writeln!(out, "vertical line  beta = {beta}")?,
        WallLocus::Everywhere => writeln!(out, "everywhere (the tilt slopes agree identically)")?,
        WallLocus::Nowhere => writeln!(out, "nowhere")?,
    }
    Ok(())
}

// --- plot-walls ------------------------------------------------------------------------

#[derive(Serialize)]
struct PlotOut<'a> {
    genus: i64,
    target: &'a TruncatedClass,
    beta: &'a Rational,
    li_filter: bool,
    samples_denominator: i64,
    circles: &'a [plot::SampledCircle],
}

fn plot_walls(
    cli: &Cli,
    target_spec: &str,
    beta_spec: &str,
    denominator: i64,
    svg: Option<&Path>,
    no_li_filter: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if denominator < 1 {
        return Err(usage(format!(
            "--denominator must be positive, got {denominator}"
        )));
    }
    let ctx = require_ctx(cli)?;
    let target = parse_truncated(target_spec)?;
    let beta = parse_rational(beta_spec)?;
    let opts = search_options(cli, false);
    let result = find_tilt_walls(&target, &beta, &ctx, &opts)?;
    let kept = if no_li_filter {
        result.solutions.clone()
    } else {
        filter_by_li_bound(&result.solutions, &ctx)
    };
    let circles = plot::sample_circles(&kept, &target, &ctx, denominator);

    if cli.json {
        emit_json(
            out,
            &PlotOut {
                genus: ctx.genus(),
                target: &result.target,
                beta: &result.beta,
                li_filter: !no_li_filter,
                samples_denominator: denominator,
                circles: &circles,
            },
        )?;
    } else {
        writeln!(out, "pair,beta,alpha")?;
        for circle in &circles {
            for point in &circle.points {
                writeln!(out, "{},{},{:.6}", circle.index, point.beta, point.alpha)?;
            }
        }
    }

    if let Some(path) = svg {
        fs::write(path, plot::render_svg(&circles, &beta))?;
    }
    Ok(())
}

// --- verify ------------------------------------------------------------------------------

fn run_verify(cli: &Cli, only: &[String], out: &mut dyn Write) -> Result<(), CliError> {
    let fixtures = verify::Fixtures::builtin();
    let report = verify::run(&fixtures, only).map_err(usage)?;
    if cli.json {
        emit_json(out, &report)?;
    } else {
        let id_width = report
            .entries
            .iter()
            .map(|e| e.lemma.len())
            .max()
            .unwrap_or(0);
        let desc_width = report
            .entries
            .iter()
            .map(|e| e.description.len())
            .max()
            .unwrap_or(0);
        for entry in &report.entries {
            writeln!(
                out,
                "{:<id_width$}  {:<desc_width$}  {:<4}  {:>6} ms",
                entry.lemma,
                entry.description,
                match entry.status {
                    verify::Status::Pass => "pass",
                    verify::Status::Fail => "FAIL",
                },
                entry.runtime_ms
            )?;
            if entry.status == verify::Status::Fail {
                writeln!(out, "    expected: {}", entry.expected)?;
                writeln!(out, "    computed: {}", entry.computed)?;
            }
        }
        writeln!(
            out,
            "{} passed, {} failed  (total {} ms)",
            report.passed, report.failed, report.runtime_ms
        )?;
    }
    if report.failed > 0 {
        return Err(CliError::Verification {
            failed: report.failed,
            total: report.entries.len(),
        });
    }
    Ok(())
}
