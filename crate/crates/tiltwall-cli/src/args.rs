//! Command-line surface: one subcommand per query or search, plus `verify`.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use tiltwall::GushelVariant;

fn parse_variant(s: &str) -> Result<GushelVariant, String> {
    s.parse()
}

#[derive(Parser, Debug)]
#[command(
    name = "tiltwall",
    version,
    about = "Exact tilt-stability computations on prime Fano threefolds of index one",
    max_term_width = 100
)]
pub struct Cli {
    /// Genus of the threefold (the degree is 2g - 2).
    #[arg(long, global = true, value_name = "G")]
    pub genus: Option<i64>,

    /// Genus-6 variant: "ordinary" or "special" (the Ext¹ budget differs).
    #[arg(long, global = true, value_parser = parse_variant, value_name = "KIND")]
    pub variant: Option<GushelVariant>,

    /// Emit machine-readable JSON instead of the human rendering.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel searches (default: one per core).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Fallback enumeration half-width when a search direction admits no
    /// derived bound.
    #[arg(long, global = true, value_name = "N")]
    pub max_rank: Option<i64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the named classes and lattice bases available at a genus.
    Catalog,

    /// Euler pairing chi(A, B) of two classes.
    ///
    /// Classes are catalog names (O, O(-H), O_x, I_x, E, E(-H), Q, Q(-H),
    /// skyscraper_projection/sky, gluing_Ku/gluing), basis letters (v, w, s,
    /// t), or comma-separated components "r,c,l,p" (rationals allowed; a
    /// three-component form sets the point coefficient to zero).
    Chi {
        class_a: String,
        class_b: String,
    },

    /// Central charge, slopes, and discriminants of a class at a tilt point.
    Charge {
        /// Class to evaluate (same forms as `chi`).
        #[arg(long)]
        class: String,
        /// alpha^2 > 0, as a rational.
        #[arg(long, value_name = "Q")]
        alpha_sq: String,
        /// beta, as a rational.
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        beta: String,
    },

    /// Enumerate wall decompositions of a truncated class at fixed beta.
    Walls {
        /// Truncated target "r,c,l".
        #[arg(long = "M", value_name = "r,c,l", allow_hyphen_values = true)]
        target: String,
        /// beta, as a rational.
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        beta: String,
        /// Force strict bounds on the twisted degree-one window.
        #[arg(long, conflicts_with = "no_strict")]
        strict: bool,
        /// Force non-strict bounds on the twisted degree-one window.
        #[arg(long)]
        no_strict: bool,
        /// Show the raw candidate list, skipping the slope-bound filter.
        #[arg(long)]
        no_li_filter: bool,
        /// Enumerate ch2 in units of L divided by this.
        #[arg(long, default_value_t = 1, value_name = "N")]
        ch2_denominator: i64,
        /// Error out instead of capping an unbounded direction.
        #[arg(long)]
        require_bounded: bool,
    },

    /// Enumerate destabilizing decompositions in the rank-two lattice.
    Destab {
        /// Built-in "skyscraper", a shipped constraint-system name, or a name
        /// from --preset-map (default: skyscraper).
        #[arg(long, value_name = "NAME")]
        preset: Option<String>,
        /// Constraint-system file to solve instead of a preset.
        #[arg(long, value_name = "FILE", conflicts_with = "preset")]
        constraints: Option<PathBuf>,
        /// TOML table mapping preset names to constraint files.
        #[arg(long, value_name = "FILE")]
        preset_map: Option<PathBuf>,
        /// Override the Ext¹ budget (skyscraper preset only).
        #[arg(long, value_name = "N")]
        ext1_bound: Option<i64>,
        /// Override alpha^2 of the evaluation point.
        #[arg(long, value_name = "Q")]
        alpha_sq: Option<String>,
        /// Override beta of the evaluation point.
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        beta: Option<String>,
        /// Error out instead of capping an unbounded direction.
        #[arg(long)]
        require_bounded: bool,
    },

    /// Solve the cone inequality system for the genus.
    Cone {
        /// Force a system shape: "A8" or "A9" (default: by genus).
        #[arg(long, value_name = "NAME")]
        preset: Option<String>,
        /// Constraint-system file to solve instead of the built-in system.
        #[arg(long, value_name = "FILE")]
        constraints: Option<PathBuf>,
        /// TOML table mapping preset names to constraint files.
        #[arg(long, value_name = "FILE")]
        preset_map: Option<PathBuf>,
    },

    /// Locus where two classes share a tilt slope, in the (beta, alpha) plane.
    WallCircle {
        /// First class (same forms as `chi`).
        #[arg(long = "A", allow_hyphen_values = true)]
        class_a: String,
        /// Second class (same forms as `chi`).
        #[arg(long = "M", allow_hyphen_values = true)]
        class_m: String,
    },

    /// Sample the wall circles of a target as CSV (optionally SVG).
    PlotWalls {
        /// Truncated target "r,c,l".
        #[arg(long = "M", value_name = "r,c,l", allow_hyphen_values = true)]
        target: String,
        /// beta at which walls are enumerated, as a rational.
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        beta: String,
        /// Sample beta on the grid Z/denominator.
        #[arg(long, default_value_t = 64, value_name = "D")]
        denominator: i64,
        /// Also write an SVG rendering of the semicircles to this file.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Plot the raw candidate list, skipping the slope-bound filter.
        #[arg(long)]
        no_li_filter: bool,
    },

    /// Replay the embedded regression fixtures and report per-lemma results.
    Verify {
        /// Run only these lemma ids (repeatable), e.g. --only lemma-A2.
        #[arg(long, value_name = "LEMMA")]
        only: Vec<String>,
    },
}
