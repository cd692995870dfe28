//! Exact arithmetic for tilt-stability computations on prime Fano threefolds
//! of index one.

pub mod constraints;
pub mod lattice;
pub mod presets;
pub mod search;
pub mod threefold;
pub mod tilt;

pub use constraints::{
    evaluate, evaluate_expr, parse, pretty_print, Assignment, ConstraintSystem, EvalEnv,
    EvalError, ParseError, VarName,
};
pub use lattice::{euler_pairing, ChernCharacter, Rational, ToddClass};
pub use presets::{
    cone_env, cone_preset_name, destab_env, destab_preset_name, preset_text, PresetEntry, PRESETS,
};
pub use search::{
    brute_force_oracle, cone_point, cone_predicate, default_ext1_bound, filter_by_li_bound,
    find_ku_destabilizers, find_tilt_walls, preset_for_genus, skyscraper_destab_point,
    skyscraper_target, solve_cone_system, ConePreset, ConeResult, DestabPredicate, DestabResult,
    SearchError, SearchOptions, SearchSystem, TruncatedClass, WallCandidate, WallSearchResult,
};
pub use tilt::{
    charge, classical_mu, discriminant, heart_window_check, li_bound_check, mu, mu0,
    normalized_discriminant, region_w_check, rotated_charge, slope_cmp, slope_of, wall_locus,
    Charge, LiBoundStatus, Slope, TiltPoint, WallLocus,
};
pub use threefold::{
    alt_basis, context, coords_of, coords_of_extended, ku_basis, BasisKind, FanoContext,
    GushelVariant, KuClassCoords, LatticeBasis, NamedClass,
};
