//! Fourth-order central differences for vector-valued functions.

use crate::algebra::Vec3M;

/// Five-point central difference of `f` at `t` with step `h`:
///
/// ```text
/// f'(t) ≈ (f(t-2h) - 8 f(t-h) + 8 f(t+h) - f(t+2h)) / 12h
/// ```
///
/// Truncation error is `O(h⁴)`. With `h ≈ 1e-3` the roundoff and truncation
/// terms are both near `1e-13` relative for the smooth surfaces in this crate.
pub fn central_diff5<F>(f: F, t: f64, h: f64) -> Vec3M
where
    F: Fn(f64) -> Vec3M,
{
    let fm2 = f(t - 2.0 * h);
    let fm1 = f(t - h);
    let fp1 = f(t + h);
    let fp2 = f(t + 2.0 * h);
    ((fm2 - fp2) + (fp1 - fm1) * 8.0) / (12.0 * h)
}
