use num_traits::{One, Zero};

use crate::dyck::{CoeffTriangle, Provenance};
use crate::error::{Error, Result};
use crate::polyarith::{binomial, exact_div, int, Int, IntPoly};

/// `W_{n,k}(x)` together with its indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPoly {
    pub n: u32,
    pub k: u32,
    pub poly: IntPoly,
}

impl WPoly {
    /// `min(k, n - k)` for `n > k`, else 0.
    pub fn expected_degree(n: u32, k: u32) -> isize {
        if n > k {
            k.min(n - k) as isize
        } else {
            0
        }
    }
}

/// Closed form for the number of Dyck paths of semilength `n` with `k`
/// `UD`-factors and `m` `UUD`-factors. Any integer triple is accepted; triples
/// outside the support give zero.
pub fn w_formula(n: i64, k: i64, m: i64) -> Result<Int> {
    if m == 0 && n == k && n >= 0 {
        return Ok(Int::one());
    }
    if 0 < m && m <= k && k + m <= n {
        let num = binomial(n, k - 1) * binomial(n - k - 1, m - 1) * binomial(k, m);
        return exact_div(&num, &int(k), "w_formula");
    }
    Ok(Int::zero())
}

pub fn w_poly(n: u32, k: u32) -> Result<WPoly> {
    if k > n {
        return Err(Error::InvalidRange(format!(
            "W_{{n,k}} needs k <= n, got n = {n}, k = {k}"
        )));
    }
    let (ni, ki) = (n as i64, k as i64);
    let coeffs = (0..=ki).map(|m| w_formula(ni, ki, m)).collect::<Result<Vec<_>>>()?;
    Ok(WPoly {
        n,
        k,
        poly: IntPoly::new(coeffs),
    })
}

/// `N(n, k) = C(n, k-1) C(n, k) / n`, for `n >= 1`.
pub fn narayana(n: u32, k: u32) -> Result<Int> {
    if n == 0 {
        return Err(Error::InvalidRange("narayana needs n >= 1".into()));
    }
    let (n, k) = (n as i64, k as i64);
    exact_div(&(binomial(n, k - 1) * binomial(n, k)), &int(n), "narayana")
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> Result<Int> {
    let n = n as i64;
    exact_div(&binomial(2 * n, n), &int(n + 1), "catalan")
}

pub fn formula_triangle(n: u32) -> Result<CoeffTriangle> {
    let mut t = CoeffTriangle::new(n, Provenance::Formula);
    for k in 0..=n {
        for m in 0..=k {
            t.set(k, m, w_formula(n as i64, k as i64, m as i64)?);
        }
    }
    Ok(t)
}

/// Outcome of checking `w_{2k+1,k,m} = w_{2k+1,k,k+1-m}` for `1 <= m <= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub k: u32,
    pub holds: bool,
    /// First `m` where the two sides differ.
    pub witness: Option<u32>,
}

pub fn check_symmetry(k: u32) -> Result<SymmetryCheck> {
    if k == 0 {
        return Err(Error::InvalidRange("symmetry needs k >= 1".into()));
    }
    let (n, ki) = (2 * k as i64 + 1, k as i64);
    for m in 1..=ki {
        if w_formula(n, ki, m)? != w_formula(n, ki, ki + 1 - m)? {
            return Ok(SymmetryCheck {
                k,
                holds: false,
                witness: Some(m as u32),
            });
        }
    }
    Ok(SymmetryCheck {
        k,
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::oracle_triangle;

    #[test]
    fn formula_examples() {
        assert_eq!(w_formula(4, 2, 1).unwrap(), int(4));
        for k in 0..20 {
            assert_eq!(w_formula(k, k, 0).unwrap(), int(1));
        }
        for k in 1..20 {
            assert_eq!(w_formula(k + 1, k, 1).unwrap(), binomial(k + 1, k - 1));
        }
        assert_eq!(w_formula(4, 3, 1).unwrap(), int(6));
        assert_eq!(w_formula(5, 2, 2).unwrap(), int(5));
    }

    #[test]
    fn formula_vanishes_off_support() {
        for (n, k, m) in [
            (3, 2, 2),
            (4, 2, -1),
            (4, 2, 3),
            (2, 3, 1),
            (-1, -1, 0),
            (5, 0, 0),
            (0, 0, 1),
        ] {
            assert!(w_formula(n, k, m).unwrap().is_zero(), "({n},{k},{m})");
        }
    }

    #[test]
    fn w_poly_examples() {
        assert_eq!(w_poly(4, 2).unwrap().poly, IntPoly::from_ints(&[0, 4, 2]));
        for n in 0..30 {
            assert_eq!(w_poly(n, n).unwrap().poly, IntPoly::one());
        }
        for n in 2..30 {
            assert_eq!(w_poly(n, 1).unwrap().poly, IntPoly::x());
        }
        assert!(w_poly(2, 3).is_err());
    }

    #[test]
    fn formula_matches_enumeration_small() {
        for n in 0..=9 {
            let f = formula_triangle(n).unwrap();
            let o = oracle_triangle(n).unwrap();
            assert!(f.same_entries(&o), "n = {n}: {:?}", f.diff(&o));
        }
    }

    #[test]
    fn narayana_and_catalan() {
        assert_eq!(narayana(4, 2).unwrap(), int(6));
        assert_eq!(narayana(4, 2).unwrap(), oracle_triangle(4).unwrap().row_sum(2));
        assert_eq!(catalan(3).unwrap(), int(5));
        assert_eq!(catalan(0).unwrap(), int(1));
        for n in 1..=14 {
            let sum: Int = (1..=n).map(|k| narayana(n, k).unwrap()).sum();
            assert_eq!(sum, catalan(n).unwrap());
        }
        assert!(narayana(0, 0).is_err());
    }

    #[test]
    fn degree_and_row_sum_laws() {
        for n in 0..=40 {
            for k in 0..=n {
                let w = w_poly(n, k).unwrap();
                if k == 0 && n > 0 {
                    // no path of positive semilength lacks a peak
                    assert!(w.poly.is_zero());
                    continue;
                }
                assert_eq!(w.poly.degree(), WPoly::expected_degree(n, k), "({n},{k})");
                assert!(w.poly.has_nonnegative_coeffs());
                let c0 = w.poly.coeff(0);
                assert_eq!(c0, if n == k { int(1) } else { int(0) });
                if n > k && k >= 1 {
                    let total: Int = w.poly.coeffs().iter().sum();
                    assert_eq!(total, narayana(n, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        let s2 = check_symmetry(2).unwrap();
        assert!(s2.holds);
        assert_eq!(w_formula(5, 2, 1).unwrap(), int(5));
        assert_eq!(w_formula(5, 2, 2).unwrap(), int(5));
        assert!(check_symmetry(1).unwrap().holds);
        assert!(check_symmetry(12).unwrap().holds);
        assert!(check_symmetry(0).is_err());
    }
}
