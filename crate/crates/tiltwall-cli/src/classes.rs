//! Resolution of command-line class and number specs.

use tiltwall::threefold::{alt_basis, ku_basis, FanoContext, NamedClass};
use tiltwall::{ChernCharacter, Rational, TruncatedClass};

use crate::{usage, CliError};

pub fn parse_rational(spec: &str) -> Result<Rational, CliError> {
    spec.parse::<Rational>()
        .map_err(|e| usage(format!("cannot parse \"{spec}\" as a rational: {e}")))
}

/// A class spec is a catalog name, a basis letter (v/w for the Kuznetsov
/// basis, s/t for the alternative one), or comma-separated components
/// "r,c,l,p" ("r,c,l" sets p = 0).
pub fn resolve_class(ctx: &FanoContext, spec: &str) -> Result<ChernCharacter, CliError> {
    let spec = spec.trim();
    match spec {
        "v" => return Ok(ku_basis(ctx).map_err(usage)?.b1),
        "w" => return Ok(ku_basis(ctx).map_err(usage)?.b2),
        "s" => return Ok(alt_basis(ctx).map_err(usage)?.b1),
        "t" => return Ok(alt_basis(ctx).map_err(usage)?.b2),
        _ => {}
    }
    if let Ok(named) = spec.parse::<NamedClass>() {
        return ctx.named_class(named).map_err(usage);
    }
    if spec.contains(',') {
        return parse_components(spec);
    }
    Err(usage(format!(
        "unknown class \"{spec}\": expected one of {}, a basis letter (v, w, s, t), \
         or components \"r,c,l[,p]\"",
        NamedClass::catalog()
    )))
}

fn parse_components(spec: &str) -> Result<ChernCharacter, CliError> {
    let trimmed = spec
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')');
    let parts: Vec<Rational> = trimmed
        .split(',')
        .map(|p| parse_rational(p.trim()))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        [r, c, l] => Ok(ChernCharacter::new(
            r.clone(),
            c.clone(),
            l.clone(),
            Rational::zero(),
        )),
        [r, c, l, p] => Ok(ChernCharacter::new(
            r.clone(),
            c.clone(),
            l.clone(),
            p.clone(),
        )),
        _ => Err(usage(format!(
            "class \"{spec}\" must have three or four comma-separated components"
        ))),
    }
}

pub fn parse_truncated(spec: &str) -> Result<TruncatedClass, CliError> {
    spec.parse::<TruncatedClass>().map_err(usage)
}
