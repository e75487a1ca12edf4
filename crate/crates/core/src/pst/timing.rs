use num_integer::Integer;

use super::PstError;
use crate::scalar::Sign;

const MAX_DENOMINATOR: i64 = 10_000;
const RATIO_TOLERANCE: f64 = 1e-9;

/// Smallest `t > 0` with `t (theta_0 - theta_r) = k_r pi` and
/// `k_r = (1 - sigma_r sigma_0) / 2 (mod 2)` for every `r`, where `theta_0`
/// is the largest eigenvalue. The gaps are written as integer multiples
/// `n_r delta` with `gcd(n_r) = 1`; then `t = m pi / delta` for the least
/// `m` of the forced parity. `None` when the gaps are not commensurable (up
/// to denominator 10^4) or the parities conflict.
pub fn min_pst_time(thetas: &[f64], sigmas: &[Sign]) -> Result<Option<f64>, PstError> {
    if thetas.len() != sigmas.len() {
        return Err(PstError::InconsistentInput { thetas: thetas.len(), sigmas: sigmas.len() });
    }
    let mut pairs: Vec<(f64, Sign)> = thetas.iter().copied().zip(sigmas.iter().copied()).collect();
    pairs.sort_by(|p, q| q.0.total_cmp(&p.0));
    let Some(&(top, top_sign)) = pairs.first() else { return Ok(None) };
    let rest: Vec<(f64, bool)> = pairs[1..].iter().map(|&(theta, s)| (top - theta, s != top_sign)).collect();
    if rest.is_empty() || rest.iter().any(|&(gap, _)| gap.is_nan() || gap <= 0.0) {
        return Ok(None);
    }

    let base = rest[0].0;
    let mut fractions = Vec::with_capacity(rest.len());
    for &(gap, _) in &rest {
        match rationalize(gap / base) {
            Some(f) => fractions.push(f),
            None => return Ok(None),
        }
    }
    let lcm = fractions.iter().fold(1i64, |acc, &(_, q)| acc.lcm(&q));
    let scaled: Vec<i64> = fractions.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let common = scaled.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let delta = base * common as f64 / lcm as f64;

    let mut parity = None;
    for (&n, &(_, odd)) in scaled.iter().zip(&rest) {
        let n = n / common;
        if n % 2 == 0 {
            if odd {
                return Ok(None);
            }
        } else if parity.replace(odd).is_some_and(|p| p != odd) {
            return Ok(None);
        }
    }
    let multiple = if parity == Some(true) { 1.0 } else { 2.0 };
    Ok(Some(multiple * std::f64::consts::PI / delta))
}

/// Best rational approximation `p / q` with `q <= 10^4` of a positive ratio,
/// accepted when within relative tolerance `1e-9`.
fn rationalize(x: f64) -> Option<(i64, i64)> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        if a > i64::MAX as f64 / 4.0 {
            return None;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_DENOMINATOR {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if ((h1 as f64 / k1 as f64) - x).abs() <= RATIO_TOLERANCE * x.abs() {
            return Some((h1, k1));
        }
        let frac = y - a as f64;
        if frac == 0.0 {
            return None;
        }
        y = 1.0 / frac;
    }
    None
}
