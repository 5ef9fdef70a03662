//! Window arithmetic and degree thresholds, all in exact integers.
//!
//! For target clique order r and path order t, the parameter k is fixed by
//! the window (r-1)(t-1)k < n <= (r-1)(t-1)(k+1), and the minimum-degree
//! threshold is n - ceil(k/(k+1) * x) with x = ceil(n/(r-1)). The same value
//! equals n - x + floor(x/(k+1)); both forms are computed and compared on
//! every call. ceil(a/b) is (a+b-1)/b throughout; no floats anywhere.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[inline]
pub(crate) fn ceil_div(a: u64, b: u64) -> u64 {
    debug_assert!(b > 0);
    a.div_ceil(b)
}

/// Parameters of one goodness instance. `x = ceil(n/(r-1))` and
/// `m = floor(x/(k+1))` are cached at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessParams {
    pub r: u64,
    pub t: u64,
    pub n: u64,
    pub k: u64,
    pub x: u64,
    pub m: u64,
}

/// The k with (r-1)(t-1)k < n <= (r-1)(t-1)(k+1). Errors when n is at or
/// below (r-1)(t-1), where no positive k exists.
pub fn k_of(r: u64, t: u64, n: u64) -> Result<u64> {
    if r < 2 || t < 2 {
        return Err(Error::Input(format!("need r >= 2 and t >= 2, got r = {r}, t = {t}")));
    }
    let base = (r - 1) * (t - 1);
    if n <= base {
        return Err(Error::BelowWindow { r, t, n, limit: base });
    }
    let k = ceil_div(n, base) - 1;
    debug_assert!(base * k < n && n <= base * (k + 1));
    Ok(k)
}

impl GoodnessParams {
    pub fn new(r: u64, t: u64, n: u64) -> Result<Self> {
        let k = k_of(r, t, n)?;
        let x = ceil_div(n, r - 1);
        let m = x / (k + 1);
        Ok(GoodnessParams { r, t, n, k, x, m })
    }

    /// The top of the window for a given k: n = (r-1)(t-1)(k+1). This is
    /// where the extremal construction lives.
    pub fn at_window_top(r: u64, t: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Input("k must be at least 1".into()));
        }
        if r < 2 || t < 2 {
            return Err(Error::Input(format!("need r >= 2 and t >= 2, got r = {r}, t = {t}")));
        }
        let n = (r - 1) * (t - 1) * (k + 1);
        let p = GoodnessParams::new(r, t, n)?;
        debug_assert_eq!(p.k, k);
        Ok(p)
    }

    /// Smallest minimum degree for which the arrowing conclusion is claimed:
    /// n - ceil(k/(k+1) * x), equal to n - x + m.
    pub fn degree_threshold(&self) -> u64 {
        let a = self.n - ceil_div(self.k * self.x, self.k + 1);
        let b = self.n - self.x + self.m;
        assert_eq!(a, b, "threshold forms disagree at {self:?}");
        a
    }

    /// Degree of the extremal construction: one below the threshold.
    /// Only defined at the top of the window.
    pub fn extremal_degree(&self) -> Result<u64> {
        if self.n != (self.r - 1) * (self.t - 1) * (self.k + 1) {
            return Err(Error::Input(format!(
                "extremal degree needs n = (r-1)(t-1)(k+1) = {}, got n = {}",
                (self.r - 1) * (self.t - 1) * (self.k + 1),
                self.n
            )));
        }
        Ok(self.degree_threshold() - 1)
    }
}

/// ceil(y - y/(k+1)) == y - floor(y/(k+1)), verified by exact integer
/// arithmetic: the left side is ceil(yk/(k+1)).
pub fn ceiling_identity_check(y: u64, k: u64) -> bool {
    if k == u64::MAX {
        return false;
    }
    let lhs = ceil_div(y * k, k + 1);
    let rhs = y - y / (k + 1);
    lhs == rhs
}

/// Lower bound for Ramsey numbers from the chromatic data of the target:
/// (chi - 1)(h_order - 1) + surplus.
pub fn burr_lower_bound(chi: u64, surplus: u64, h_order: u64) -> Result<u64> {
    if chi < 1 {
        return Err(Error::Input("chromatic number must be at least 1".into()));
    }
    if surplus < 1 || surplus > h_order {
        return Err(Error::Input(format!(
            "need 1 <= surplus <= h_order, got surplus = {surplus}, h_order = {h_order}"
        )));
    }
    Ok((chi - 1) * (h_order - 1) + surplus)
}

/// The Ramsey number of (K_r, P_t) when the path is good: (r-1)(t-1) + 1.
pub fn goodness_value(r: u64, t: u64) -> u64 {
    (r - 1) * (t - 1) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact rational ceiling via i128 cross multiplication, no div tricks:
    /// the least integer q with q*b >= a.
    fn rational_ceil(a: i128, b: i128) -> i128 {
        assert!(b > 0);
        let mut q = a / b;
        while q * b < a {
            q += 1;
        }
        while (q - 1) * b >= a {
            q -= 1;
        }
        q
    }

    #[test]
    fn k_of_examples() {
        assert_eq!(k_of(3, 3, 8).unwrap(), 1);
        assert_eq!(k_of(3, 3, 9).unwrap(), 2);
        assert_eq!(k_of(2, 4, 6).unwrap(), 1);
        assert!(matches!(k_of(3, 3, 4), Err(Error::BelowWindow { .. })));
        assert!(matches!(k_of(3, 3, 1), Err(Error::BelowWindow { .. })));
        assert!(k_of(1, 3, 5).is_err());
    }

    #[test]
    fn threshold_examples() {
        let p = GoodnessParams::new(3, 3, 8).unwrap();
        assert_eq!((p.k, p.x, p.m), (1, 4, 2));
        assert_eq!(p.degree_threshold(), 6);

        let p = GoodnessParams::new(3, 4, 12).unwrap();
        assert_eq!((p.k, p.x, p.m), (1, 6, 3));
        assert_eq!(p.degree_threshold(), 9);

        // r = 2 collapses to floor(n/(k+1)).
        for n in 3..=40u64 {
            if let Ok(p) = GoodnessParams::new(2, 3, n) {
                assert_eq!(p.degree_threshold(), n / (p.k + 1));
            }
        }
    }

    #[test]
    fn both_threshold_forms_agree_across_the_window() {
        for r in 2..=10u64 {
            for t in 2..=10u64 {
                for k in 1..=10u64 {
                    let base = (r - 1) * (t - 1);
                    for n in (base * k + 1)..=(base * (k + 1)) {
                        let p = GoodnessParams::new(r, t, n).unwrap();
                        assert_eq!(p.k, k);
                        // degree_threshold asserts the equality internally.
                        let thr = p.degree_threshold();
                        let oracle = p.n as i128
                            - rational_ceil(p.k as i128 * p.x as i128, p.k as i128 + 1);
                        assert_eq!(thr as i128, oracle);
                    }
                }
            }
        }
    }

    #[test]
    fn ceiling_identity_sweep() {
        assert!(ceiling_identity_check(7, 2));
        for y in 0..=10_000u64 {
            for k in 1..=100u64 {
                assert!(ceiling_identity_check(y, k), "identity fails at y={y}, k={k}");
            }
        }
        // The oracle agrees on a diagonal slice.
        for y in 0..=200u64 {
            for k in 1..=20u64 {
                let lhs = rational_ceil((y * k) as i128, (k + 1) as i128);
                let rhs = (y - y / (k + 1)) as i128;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn burr_bound_examples() {
        assert_eq!(burr_lower_bound(3, 1, 3).unwrap(), 5);
        assert_eq!(burr_lower_bound(3, 1, 5).unwrap(), 9);
        assert_eq!(goodness_value(3, 5), 9);
        assert_eq!(goodness_value(3, 3), 5);
        assert_eq!(goodness_value(3, 4), 7);
        assert_eq!(goodness_value(4, 3), 7);
        assert!(burr_lower_bound(0, 1, 3).is_err());
        assert!(burr_lower_bound(3, 0, 3).is_err());
        assert!(burr_lower_bound(3, 4, 3).is_err());
    }

    #[test]
    fn extremal_degree_examples() {
        let p = GoodnessParams::at_window_top(3, 3, 1).unwrap();
        assert_eq!(p.n, 8);
        assert_eq!(p.extremal_degree().unwrap(), 5);
        let p = GoodnessParams::at_window_top(2, 3, 1).unwrap();
        assert_eq!(p.n, 4);
        assert_eq!(p.extremal_degree().unwrap(), 1);
        let p = GoodnessParams::at_window_top(3, 4, 1).unwrap();
        assert_eq!(p.n, 12);
        assert_eq!(p.extremal_degree().unwrap(), 8);
        // Away from the top of the window the extremal degree is undefined.
        assert!(GoodnessParams::new(3, 3, 7).unwrap().extremal_degree().is_err());
    }
}
