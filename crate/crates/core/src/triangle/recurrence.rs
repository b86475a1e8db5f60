use num_traits::One;

use super::formula::{w_poly, WPoly};
use crate::dyck::{CoeffTriangle, Provenance};
use crate::error::{Error, Result};
use crate::polyarith::{binomial, rat, Int, IntPoly, Rat, RatPoly};

/// Multipliers of the fixed-`k` recurrence in three-term form: with
/// `F_i = W_{k+i,k}`, `F_{j+2} = A_j F_{j+1} + B_j F_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedKRecCoeffs {
    pub k: u32,
    pub j: u32,
    pub a: RatPoly,
    pub b: RatPoly,
}

/// Scalars of the fixed-`n` recurrence
/// `W_{n,k+2} = (a x + b) W_{n,k+1} - c W_{n,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedNRecCoeffs {
    pub n: u32,
    pub k: u32,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

pub fn fixed_k_rec_coeffs(k: u32, j: u32) -> Result<FixedKRecCoeffs> {
    if k == 0 {
        return Err(Error::InvalidRange("fixed-k recurrence needs k >= 1".into()));
    }
    let (k, j) = (k as i64, j as i64);
    let a_scale = rat(k + j + 2, (j + 2) * (j + 3));
    let a = RatPoly::from_ints(&[2 * (j + 1), -(j - k + 1)]).scale(&a_scale);
    let b_scale = rat((k + j + 1) * (k + j + 2) * j, (j + 2) * (j + 2) * (j + 3));
    let b = RatPoly::from_ints(&[-1, 1]).scale(&b_scale);
    Ok(FixedKRecCoeffs {
        k: k as u32,
        j: j as u32,
        a,
        b,
    })
}

/// Largest `k` for which the fixed-`n` recurrence is valid: `floor((n+1)/2) - 2`.
pub fn fixed_n_max_k(n: u32) -> i64 {
    (n as i64 + 1) / 2 - 2
}

pub fn fixed_n_rec_coeffs(n: u32, k: u32) -> Result<FixedNRecCoeffs> {
    let max = fixed_n_max_k(n);
    let (ni, ki) = (n as i64, k as i64);
    if ki < 1 || ki > max {
        return Err(Error::OutsideRecurrenceRange { n: ni, k: ki, max });
    }
    let a = rat(
        (ni - ki) * (ni - 2 * ki - 2) * (ni - 2 * ki - 3),
        (ki + 1) * (ki + 2) * (ni - ki - 2),
    );
    let b = rat(
        2 * (ni - ki) * (ni - ki - 1) * (ni - 2 * ki - 2),
        (ki + 2) * (ni - ki - 2) * (ni - 2 * ki - 1),
    );
    let c = rat(
        (ni - ki + 1) * (ni - ki) * (ni - ki) * (ni - 2 * ki - 3),
        (ki + 1) * (ki + 2) * (ni - ki - 2) * (ni - 2 * ki - 1),
    );
    Ok(FixedNRecCoeffs { n, k, a, b, c })
}

fn integral(p: &RatPoly, what: impl FnOnce() -> String) -> Result<IntPoly> {
    p.to_int_poly()
        .ok_or_else(|| Error::Internal(format!("{} has non-integer coefficients: {p}", what())))
}

/// `W_{n,k}` for `n = k..=n_max` via the fixed-`k` recurrence, seeded with
/// `W_{k,k}` and `W_{k+1,k}` from the closed formula.
pub fn w_poly_rec_fixed_k(k: u32, n_max: u32) -> Result<Vec<WPoly>> {
    if k == 0 || n_max < k {
        return Err(Error::InvalidRange(format!(
            "fixed-k recurrence needs 1 <= k <= n_max, got k = {k}, n_max = {n_max}"
        )));
    }
    let mut out = vec![w_poly(k, k)?];
    if n_max > k {
        out.push(w_poly(k + 1, k)?);
    }
    let (mut prev, mut cur) = (out[0].poly.to_rat(), out.last().unwrap().poly.to_rat());
    for n in k + 2..=n_max {
        let co = fixed_k_rec_coeffs(k, n - 2 - k)?;
        let next = &(&co.a * &cur) + &(&co.b * &prev);
        let poly = integral(&next, || format!("W_{{{n},{k}}} (fixed-k recurrence)"))?;
        out.push(WPoly { n, k, poly });
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// `W_{n,k}` for `k = 1..=floor((n+1)/2)` via the fixed-`n` recurrence, seeded
/// with `W_{n,1}` and `W_{n,2}` from the closed formula. Every step is checked
/// against the closed formula. Below `n = 5` the recurrence takes no steps and
/// only seeds are returned.
pub fn w_poly_rec_fixed_n(n: u32) -> Result<Vec<WPoly>> {
    if n == 0 {
        return Err(Error::InvalidRange("fixed-n recurrence needs n >= 1".into()));
    }
    let top = n.div_ceil(2);
    if top < 3 {
        return (1..=top).map(|k| w_poly(n, k)).collect();
    }
    let mut out = vec![w_poly(n, 1)?, w_poly(n, 2)?];
    let (mut prev, mut cur) = (out[0].poly.to_rat(), out[1].poly.to_rat());
    for k in 1..=top - 2 {
        let co = fixed_n_rec_coeffs(n, k)?;
        let lin = RatPoly::new(vec![co.b.clone(), co.a.clone()]);
        let next = &(&lin * &cur) - &prev.scale(&co.c);
        let poly = integral(&next, || format!("W_{{{n},{}}} (fixed-n recurrence)", k + 2))?;
        let expected = w_poly(n, k + 2)?;
        if poly != expected.poly {
            return Err(Error::Internal(format!(
                "fixed-n recurrence gives {poly} for W_{{{n},{}}}, closed formula gives {}",
                k + 2,
                expected.poly
            )));
        }
        out.push(WPoly { n, k: k + 2, poly });
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// `W_{n,n-k} = (C(n,k+1) / C(n,k-1)) W_{n,k}` for `1 <= k <= n-1`.
pub fn reflection_factor(n: u32, k: u32) -> Rat {
    let (n, k) = (n as i64, k as i64);
    Rat::new(binomial(n, k + 1), binomial(n, k - 1))
}

/// Triangle for one `n` built row by row from the fixed-`k` recurrence.
pub fn rec_fixed_k_triangle(n: u32) -> Result<CoeffTriangle> {
    let mut t = CoeffTriangle::new(n, Provenance::RecFixedK);
    if n == 0 {
        t.set(0, 0, Int::one());
    }
    for k in 1..=n {
        let row = w_poly_rec_fixed_k(k, n)?;
        let last = row.last().expect("n >= k gives a nonempty row");
        for (m, c) in last.poly.coeffs().iter().enumerate() {
            t.set(k, m as u32, c.clone());
        }
    }
    Ok(t)
}

/// Triangle for one `n` from the fixed-`n` recurrence. Rows above
/// `floor((n+1)/2)` come from the lower half through [`reflection_factor`];
/// `W_{n,n} = 1` is a seed.
pub fn rec_fixed_n_triangle(n: u32) -> Result<CoeffTriangle> {
    if n == 0 {
        let mut t = CoeffTriangle::new(0, Provenance::RecFixedN);
        t.set(0, 0, Int::one());
        return Ok(t);
    }
    let lower = w_poly_rec_fixed_n(n)?;
    let top = n.div_ceil(2);
    let mut t = CoeffTriangle::new(n, Provenance::RecFixedN);
    let mut put = |k: u32, p: &IntPoly| {
        for (m, c) in p.coeffs().iter().enumerate() {
            t.set(k, m as u32, c.clone());
        }
    };
    for w in &lower {
        put(w.k, &w.poly);
    }
    for j in top + 1..n {
        let src = &lower[(n - j - 1) as usize];
        let scaled = src.poly.to_rat().scale(&reflection_factor(n, src.k));
        put(j, &integral(&scaled, || format!("W_{{{n},{j}}} (reflection)"))?);
    }
    put(n, &w_poly(n, n)?.poly);
    Ok(t)
}

/// A polynomial sequence together with three-term recurrence multipliers:
/// `seq[j+2] = a[j] seq[j+1] + b[j] seq[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceFamily {
    pub seq: Vec<RatPoly>,
    pub a: Vec<RatPoly>,
    pub b: Vec<RatPoly>,
}

/// `F_i = W_{k+i,k}` for `i < len` with the matching fixed-`k` multipliers.
pub fn fixed_k_family(k: u32, len: u32) -> Result<RecurrenceFamily> {
    if k == 0 || len == 0 {
        return Err(Error::InvalidRange("fixed-k family needs k >= 1 and len >= 1".into()));
    }
    let seq = (0..len)
        .map(|i| w_poly(k + i, k).map(|w| w.poly.to_rat()))
        .collect::<Result<Vec<_>>>()?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for j in 0..len.saturating_sub(2) {
        let co = fixed_k_rec_coeffs(k, j)?;
        a.push(co.a);
        b.push(co.b);
    }
    Ok(RecurrenceFamily { seq, a, b })
}

/// `F_i = W_{n,i+1}` for `0 <= i <= floor((n+1)/2) - 1`, with
/// `A_j = a(n,j+1) x + b(n,j+1)` and `B_j = -c(n,j+1)`.
pub fn fixed_n_family(n: u32) -> Result<RecurrenceFamily> {
    if n == 0 {
        return Err(Error::InvalidRange("fixed-n family needs n >= 1".into()));
    }
    let top = n.div_ceil(2);
    let seq = (1..=top)
        .map(|k| w_poly(n, k).map(|w| w.poly.to_rat()))
        .collect::<Result<Vec<_>>>()?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for j in 0..top.saturating_sub(2) {
        let co = fixed_n_rec_coeffs(n, j + 1)?;
        a.push(RatPoly::new(vec![co.b, co.a]));
        b.push(RatPoly::constant(-co.c));
    }
    Ok(RecurrenceFamily { seq, a, b })
}
