use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::sturm::{radical, squarefree_decompose, SturmChain};
use crate::error::{Error, Result};
use crate::polyarith::{rat, simplest_rational_between, Int, IntPoly, Rat, RatPoly};

/// One distinct real root, isolated in `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: u32,
    /// The root itself when it is rational.
    pub exact: Option<Rat>,
}

/// Certified real roots of `poly`, ascending, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootProfile {
    pub poly: RatPoly,
    pub roots: Vec<IsolatedRoot>,
}

impl RootProfile {
    /// Real roots counted with multiplicity.
    pub fn real_root_count(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.real_root_count() as isize == self.poly.degree()
    }
}

// A square-free polynomial prepared for repeated sign queries.
pub(crate) struct SquareFree {
    pub(crate) poly: RatPoly,
    int: IntPoly,
    chain: SturmChain,
}

impl SquareFree {
    pub(crate) fn new(radical: RatPoly) -> Result<SquareFree> {
        let chain = SturmChain::new(&radical)?;
        Ok(SquareFree {
            int: radical.primitive_int(),
            poly: radical,
            chain,
        })
    }

    pub(crate) fn sign_at(&self, x: &Rat) -> Ordering {
        self.int.sign_at(x)
    }

    fn count(&self, lo: &Rat, hi: &Rat) -> Result<usize> {
        self.chain.count_in(lo, hi)
    }

    /// Power of two strictly above every root's absolute value (Cauchy bound).
    fn bound(&self) -> Rat {
        let lead = self.poly.leading().expect("nonzero").abs();
        let max_ratio = self
            .poly
            .coeffs()
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rat::zero);
        let cauchy = max_ratio + Rat::one();
        let mut r = Rat::one();
        while r < cauchy {
            r *= rat(2, 1);
        }
        r
    }

    /// Disjoint isolating intervals for every root, ascending. Dyadic midpoints
    /// that land on a root are recorded as exact.
    pub(crate) fn isolate(&self) -> Result<Vec<(Rat, Rat, Option<Rat>)>> {
        let mut out = Vec::new();
        if self.poly.degree() < 1 {
            return Ok(out);
        }
        let r = self.bound();
        let lo = -r.clone();
        let total = self.count(&lo, &r)?;
        self.bisect(lo, r, total, &mut out)?;
        Ok(out)
    }

    fn bisect(&self, lo: Rat, hi: Rat, count: usize, out: &mut Vec<(Rat, Rat, Option<Rat>)>) -> Result<()> {
        match count {
            0 => return Ok(()),
            1 => {
                out.push((lo, hi, None));
                return Ok(());
            }
            _ => {}
        }
        let two = rat(2, 1);
        let mid = (&lo + &hi) / &two;
        if self.sign_at(&mid) != Ordering::Equal {
            let left = self.count(&lo, &mid)?;
            self.bisect(lo, mid.clone(), left, out)?;
            return self.bisect(mid, hi, count - left, out);
        }
        // shrink a window around the exact root until it holds nothing else
        let mut delta = (&hi - &lo) / rat(4, 1);
        let (a, b) = loop {
            let (a, b) = (&mid - &delta, &mid + &delta);
            if self.sign_at(&a) != Ordering::Equal && self.sign_at(&b) != Ordering::Equal && self.count(&a, &b)? == 1 {
                break (a, b);
            }
            delta /= &two;
        };
        let left = self.count(&lo, &a)?;
        self.bisect(lo, a.clone(), left, out)?;
        out.push((a, b.clone(), Some(mid)));
        self.bisect(b, hi, count - left - 1, out)
    }

    /// Tightens a one-root interval until its root is shown rational or not.
    ///
    /// A rational root `p/q` of the primitive integer form has `q` dividing the
    /// leading coefficient, so once the simplest rational in the interval has
    /// a larger denominator, the root is irrational.
    fn resolve_rational(&self, mut lo: Rat, mut hi: Rat) -> (Rat, Rat, Option<Rat>) {
        let max_den: Int = self.int.leading().expect("nonzero").abs();
        let two = rat(2, 1);
        loop {
            let s = simplest_rational_between(&lo, &hi);
            if s.denom() > &max_den {
                return (lo, hi, None);
            }
            if self.sign_at(&s) == Ordering::Equal {
                return (lo, hi, Some(s));
            }
            let mid = (&lo + &hi) / &two;
            let sm = self.sign_at(&mid);
            if sm == Ordering::Equal {
                return (lo, hi, Some(mid));
            }
            if sm == self.sign_at(&lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

/// Exponent of the square-free factor owning the single root in `(lo, hi]`,
/// or 0 when no factor vanishes there.
pub(crate) fn multiplicity_at(factors: &[(RatPoly, u32)], lo: &Rat, hi: &Rat, exact: Option<&Rat>) -> u32 {
    for (f, e) in factors {
        let hit = match exact {
            Some(x) => f.eval(x).is_zero(),
            // f is square-free and has at most this one root in (lo, hi]
            None => {
                let g = f.primitive_int();
                g.sign_at(lo) != g.sign_at(hi)
            }
        };
        if hit {
            return *e;
        }
    }
    0
}

/// Isolates every real root of `p` and attaches its multiplicity. Rational
/// roots are identified exactly.
pub fn isolate_real_roots(p: &RatPoly) -> Result<RootProfile> {
    isolate_with(p, true)
}

pub(crate) fn isolate_with(p: &RatPoly, resolve_rationals: bool) -> Result<RootProfile> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_real_roots"));
    }
    let sqf = SquareFree::new(radical(p)?)?;
    let factors = squarefree_decompose(p)?;
    let mut roots = Vec::new();
    for (lo, hi, exact) in sqf.isolate()? {
        let (lo, hi, exact) = match exact {
            None if resolve_rationals => sqf.resolve_rational(lo, hi),
            _ => (lo, hi, exact),
        };
        let multiplicity = multiplicity_at(&factors, &lo, &hi, exact.as_ref());
        if multiplicity == 0 {
            return Err(Error::Internal(format!(
                "isolated root in ({lo}, {hi}] belongs to no square-free factor"
            )));
        }
        roots.push(IsolatedRoot {
            lo,
            hi,
            multiplicity,
            exact,
        });
    }
    Ok(RootProfile { poly: p.clone(), roots })
}

/// True iff all roots of `p` are real, counted with multiplicity.
pub fn certify_real_rooted(p: &RatPoly) -> Result<bool> {
    Ok(isolate_with(p, false)?.is_real_rooted())
}

/// True iff `p` and `q` have the same monic radical, i.e. the same zero set.
pub fn same_root_set(p: &RatPoly, q: &RatPoly) -> Result<bool> {
    Ok(radical(p)? == radical(q)?)
}

/// Decides `b(x) <= 0` for all `x <= 0`. Returns a point `x <= 0` with
/// `b(x) > 0` when the condition fails.
pub fn nonpositive_on_nonpositive_reals(b: &RatPoly) -> Result<Option<Rat>> {
    if b.is_zero() {
        return Ok(None);
    }
    let sqf = SquareFree::new(radical(b)?)?;
    let roots = sqf.isolate()?;
    let zero = Rat::zero();
    let zero_is_root = b.eval(&zero).is_zero();
    // whether each isolated root is strictly negative
    let negative = roots
        .iter()
        .map(|(lo, hi, exact)| -> Result<bool> {
            Ok(match exact {
                Some(x) => x.is_negative(),
                None if *hi <= zero => true,
                None if *lo >= zero => false,
                None if zero_is_root => false,
                None => sqf.count(lo, &zero)? == 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    // one sample per sign-constant open interval meeting (-inf, 0)
    let mut samples = Vec::new();
    match roots.first() {
        None => samples.push(rat(-1, 1)),
        Some((lo, _, _)) => samples.push(lo - Rat::one()),
    }
    for ((_, hi, _), neg) in roots.iter().zip(&negative) {
        if !neg {
            continue;
        }
        samples.push(if *hi <= zero { hi.clone() } else { zero.clone() });
    }
    for x in samples {
        debug_assert!(x <= zero);
        if b.eval(&x).is_positive() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn from_rational_roots(roots: &[(i64, i64)]) -> RatPoly {
        roots.iter().fold(RatPoly::one(), |acc, &(n, d)| &acc * &rp(&[-n, d]))
    }

    fn exact_roots(p: &RootProfile) -> Vec<(Rat, u32)> {
        p.roots
            .iter()
            .map(|r| (r.exact.clone().expect("rational root"), r.multiplicity))
            .collect()
    }

    #[test]
    fn isolate_examples() {
        let prof = isolate_real_roots(&rp(&[0, 4, 2])).unwrap();
        assert_eq!(exact_roots(&prof), vec![(rat(-2, 1), 1), (rat(0, 1), 1)]);
        let prof = isolate_real_roots(&rp(&[0, 5, 5])).unwrap();
        assert_eq!(exact_roots(&prof), vec![(rat(-1, 1), 1), (rat(0, 1), 1)]);
        assert!(isolate_real_roots(&rp(&[7])).unwrap().roots.is_empty());
        assert!(isolate_real_roots(&RatPoly::zero()).is_err());
    }

    #[test]
    fn irrational_and_non_dyadic_roots() {
        let prof = isolate_real_roots(&rp(&[-2, 0, 1])).unwrap();
        assert_eq!(prof.roots.len(), 2);
        assert!(prof.roots.iter().all(|r| r.exact.is_none()));
        assert!(prof.roots[0].hi < Rat::zero() && prof.roots[1].lo >= Rat::zero());

        let p = from_rational_roots(&[(-1, 3), (2, 7), (2, 7), (5, 1)]);
        let prof = isolate_real_roots(&p).unwrap();
        assert_eq!(
            exact_roots(&prof),
            vec![(rat(-1, 3), 1), (rat(2, 7), 2), (rat(5, 1), 1)]
        );
    }

    #[test]
    fn certify_examples() {
        assert!(!certify_real_rooted(&rp(&[1, 0, 1])).unwrap());
        assert!(certify_real_rooted(&rp(&[1, 3, 3, 1])).unwrap());
        let prof = isolate_real_roots(&rp(&[1, 3, 3, 1])).unwrap();
        assert_eq!(exact_roots(&prof), vec![(rat(-1, 1), 3)]);
        assert!(certify_real_rooted(&rp(&[4])).unwrap());
        assert!(!certify_real_rooted(&(&rp(&[1, 0, 1]) * &rp(&[0, 1]))).unwrap());
    }

    #[test]
    fn same_root_set_examples() {
        assert!(same_root_set(&rp(&[0, 5, 5]), &rp(&[0, 10, 10])).unwrap());
        assert!(same_root_set(&rp(&[0, 1]), &rp(&[0, 0, 1])).unwrap());
        assert!(!same_root_set(&rp(&[0, 1]), &rp(&[1, 1])).unwrap());
    }

    #[test]
    fn sign_condition_on_negative_axis() {
        assert_eq!(nonpositive_on_nonpositive_reals(&rp(&[0, 1])).unwrap(), None);
        let w = nonpositive_on_nonpositive_reals(&rp(&[1, 1])).unwrap().unwrap();
        assert!(w <= Rat::zero() && rp(&[1, 1]).eval(&w).is_positive());
        assert!(rp(&[1, 1]).eval(&rat(-1, 2)).is_positive());
        assert_eq!(nonpositive_on_nonpositive_reals(&rp(&[-3])).unwrap(), None);
        assert!(nonpositive_on_nonpositive_reals(&rp(&[2])).unwrap().is_some());
        assert_eq!(nonpositive_on_nonpositive_reals(&RatPoly::zero()).unwrap(), None);
        // -(x+1)^2 touches zero at -1 but stays nonpositive
        assert_eq!(nonpositive_on_nonpositive_reals(&rp(&[-1, -2, -1])).unwrap(), None);
        // x^2 - 1 on x <= 0 is positive left of -1
        assert!(nonpositive_on_nonpositive_reals(&rp(&[-1, 0, 1])).unwrap().is_some());
        // (x - 1)(x - 3) is positive at 0
        assert!(nonpositive_on_nonpositive_reals(&rp(&[3, -4, 1])).unwrap().is_some());
        // x (x - 1)(x + 2) positive on (-2, 0)
        let p = &rp(&[0, 1]) * &(&rp(&[-1, 1]) * &rp(&[2, 1]));
        let w = nonpositive_on_nonpositive_reals(&p).unwrap().unwrap();
        assert!(w <= Rat::zero() && p.eval(&w).is_positive());
        // (x - 1)/3, the shape of every fixed-k B_j
        let b = RatPoly::new(vec![rat(-1, 3), rat(1, 3)]);
        assert_eq!(nonpositive_on_nonpositive_reals(&b).unwrap(), None);
    }

    fn small_rational_roots() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-12i64..=12, 1i64..=5), 1..6)
    }

    proptest! {
        #[test]
        fn isolation_is_sound(roots in small_rational_roots(), extra in prop::option::of(1i64..5)) {
            let mut p = from_rational_roots(&roots);
            if let Some(c) = extra {
                // irreducible quadratic factor x^2 + c contributes no real roots
                p = &p * &rp(&[c, 0, 1]);
            }
            let prof = isolate_real_roots(&p).unwrap();
            let sqf = radical(&p).unwrap().primitive_int();
            for w in prof.roots.windows(2) {
                prop_assert!(w[0].hi <= w[1].lo);
            }
            for r in &prof.roots {
                prop_assert!(r.lo < r.hi);
                match &r.exact {
                    Some(x) => {
                        prop_assert!(&r.lo < x && x <= &r.hi);
                        prop_assert!(p.eval(x).is_zero());
                    }
                    None => prop_assert!(sqf.sign_at(&r.lo) != sqf.sign_at(&r.hi)),
                }
            }
            let mut expected: Vec<Rat> = roots.iter().map(|&(n, d)| rat(n, d)).collect();
            expected.sort();
            let mut got = Vec::new();
            for r in &prof.roots {
                for _ in 0..r.multiplicity {
                    got.push(r.exact.clone().unwrap());
                }
            }
            prop_assert_eq!(got, expected);
            prop_assert_eq!(prof.is_real_rooted(), extra.is_none());
        }
    }
}
