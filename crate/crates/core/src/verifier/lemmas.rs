use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// The mediant `(a + b) / (x + y)` of `a/x` and `b/y`, which lies strictly
/// between them whenever they differ.
pub fn mediant_between((a, x): (u64, u64), (b, y): (u64, u64)) -> Result<Fraction> {
    if a == 0 || x == 0 || b == 0 || y == 0 {
        return Err(Error::BadParameter("mediant needs positive inputs".into()));
    }
    Ok(Fraction::new(a + b, x + y))
}

/// Whether `c <= Σa_i / Σb_i`. This holds whenever `c` is at most every
/// ratio `a_i / b_i`.
pub fn series_lower_bound(pairs: &[(u64, u64)], c: Fraction) -> Result<bool> {
    if pairs.is_empty() {
        return Err(Error::BadParameter("series needs at least one pair".into()));
    }
    if pairs.iter().any(|&(a, b)| a == 0 || b == 0) {
        return Err(Error::BadParameter("series terms must be positive".into()));
    }
    let (sa, sb) = pairs.iter().fold((0u64, 0u64), |(sa, sb), &(a, b)| (sa + a, sb + b));
    Ok(c <= Fraction::new(sa, sb))
}
