//! Canonical inputs shared by the benchmark targets: the heaviest searches
//! from the reference computations, so timing drift is measured on the runs
//! that actually matter.

use tiltwall::threefold::{context, FanoContext, KuClassCoords};
use tiltwall::{skyscraper_destab_point, skyscraper_target, Rational, TiltPoint, TruncatedClass};

/// The widest wall scan on the books: (5, -2, 0) at genus 7, β = -5/6.
pub fn wall_scan_inputs() -> (FanoContext, TruncatedClass, Rational) {
    let ctx = context(7, None).unwrap();
    (ctx, TruncatedClass::new(5, -2, 0), Rational::new(-5, 6))
}

/// The genus-8 destabilizer enumeration (two solutions).
pub fn destab_inputs() -> (FanoContext, KuClassCoords, TiltPoint, i64) {
    let ctx = context(8, None).unwrap();
    let target = skyscraper_target(&ctx).unwrap();
    let point = skyscraper_destab_point(&ctx).unwrap();
    (ctx, target, point, 8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tiltwall::{find_tilt_walls, SearchOptions};

    #[test]
    fn bench_inputs_reproduce_the_reference_counts() {
        let (ctx, target, beta) = wall_scan_inputs();
        let walls = find_tilt_walls(&target, &beta, &ctx, &SearchOptions::default()).unwrap();
        assert_eq!(walls.solutions.len(), 15);

        let (_, _, _, budget) = destab_inputs();
        assert_eq!(budget, 8);
    }
}
