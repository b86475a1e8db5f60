//! Coefficient-level forms of the two recurrences, checked one `(n, k, m)`
//! triple at a time against the closed formula.

use super::formula::w_formula;
use super::recurrence::fixed_n_rec_coeffs;
use crate::error::{Error, Result};
use crate::polyarith::{rat, rat_from_int, Rat};

/// Case split used to establish the fixed-`k` coefficient identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedKCase {
    /// `m < 0`, `m > k`, or `n < m + k - 2`: every term vanishes.
    Vacuous,
    /// `m = 0`.
    ZeroM,
    /// `m = 1`, `n = k - 1`.
    A1,
    /// `m = 1`, `n = k`.
    A2,
    /// `m = 1`, `n > k`.
    A3,
    /// `2 <= m <= k`, `n = m + k - 2`.
    B1,
    /// `2 <= m <= k`, `n = m + k - 1`.
    B2,
    /// `2 <= m <= k`, `n >= m + k`.
    B3,
}

pub fn classify_fixed_k(n: i64, k: i64, m: i64) -> FixedKCase {
    if m < 0 || m > k || n < m + k - 2 {
        return FixedKCase::Vacuous;
    }
    match m {
        0 => FixedKCase::ZeroM,
        1 if n == k - 1 => FixedKCase::A1,
        1 if n == k => FixedKCase::A2,
        1 => FixedKCase::A3,
        _ if n == m + k - 2 => FixedKCase::B1,
        _ if n == m + k - 1 => FixedKCase::B2,
        _ => FixedKCase::B3,
    }
}

/// Both sides of an identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Rat,
    pub rhs: Rat,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn w(n: i64, k: i64, m: i64) -> Result<Rat> {
    w_formula(n, k, m).map(rat_from_int)
}

/// `w_{n+2,k,m}` against the fixed-`k` combination of `w_{n+1,k,*}` and
/// `w_{n,k,*}`; valid for `n >= k - 1 >= 0`.
pub fn fixed_k_identity(n: i64, k: i64, m: i64) -> Result<IdentityCheck> {
    if k < 1 || n < k - 1 {
        return Err(Error::InvalidRange(format!(
            "fixed-k identity needs n >= k - 1 >= 0, got n = {n}, k = {k}"
        )));
    }
    let d = (n - k + 2) * (n - k + 3);
    let rhs = rat(2 * (n + 2) * (n - k + 1), d) * w(n + 1, k, m)?
        - rat((n + 2) * (n - 2 * k + 1), d) * w(n + 1, k, m - 1)?
        + rat((n + 1) * (n + 2) * (n - k), (n - k + 2) * d) * (w(n, k, m - 1)? - w(n, k, m)?);
    Ok(IdentityCheck {
        lhs: w(n + 2, k, m)?,
        rhs,
    })
}

/// `w_{n,k+2,m}` against `a w_{n,k+1,m-1} + b w_{n,k+1,m} - c w_{n,k,m}`;
/// valid for `1 <= k <= floor((n+1)/2) - 2`.
pub fn fixed_n_identity(n: u32, k: u32, m: i64) -> Result<IdentityCheck> {
    let co = fixed_n_rec_coeffs(n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let rhs = &co.a * w(ni, ki + 1, m - 1)? + &co.b * w(ni, ki + 1, m)? - &co.c * w(ni, ki, m)?;
    Ok(IdentityCheck {
        lhs: w(ni, ki + 2, m)?,
        rhs,
    })
}
