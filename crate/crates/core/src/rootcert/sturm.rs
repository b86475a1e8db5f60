use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::polyarith::{IntPoly, Rat, RatPoly};

/// Canonical Sturm chain `p, p', -rem(p, p'), ...`, stopping at the last
/// nonzero remainder.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
    // positive multiples of `chain`, used for sign evaluation
    scaled: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial("sturm_chain"));
        }
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
            }
        }
        let scaled = chain.iter().map(RatPoly::primitive_int).collect();
        Ok(SturmChain { chain, scaled })
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.chain
    }

    /// `gcd(p, p')` up to a constant factor.
    pub fn last(&self) -> &RatPoly {
        self.chain.last().expect("chain is never empty")
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.scaled.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.scaled.iter().map(|p| {
            let lead = p.leading().expect("chain members are nonzero");
            let s = if lead.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            if positive || p.degree() % 2 == 0 {
                s
            } else {
                s.reverse()
            }
        }))
    }

    /// Distinct real roots in `(lo, hi]`. Neither endpoint may be a root.
    pub fn count_in(&self, lo: &Rat, hi: &Rat) -> Result<usize> {
        if lo >= hi {
            return Err(Error::InvalidRange(format!("empty interval ({lo}, {hi}]")));
        }
        for x in [lo, hi] {
            if self.scaled[0].sign_at(x) == Ordering::Equal {
                return Err(Error::EndpointIsRoot(x.clone()));
            }
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

pub fn sturm_chain(p: &RatPoly) -> Result<SturmChain> {
    SturmChain::new(p)
}

/// Distinct real roots of `p` in `(lo, hi]`; the endpoints must not be roots.
pub fn count_roots_in(p: &RatPoly, lo: &Rat, hi: &Rat) -> Result<usize> {
    SturmChain::new(p)?.count_in(lo, hi)
}

/// Square-free factors of `p` with their exponents, monic and pairwise
/// coprime, ordered by exponent (Yun's algorithm). Constants yield no factors.
pub fn squarefree_decompose(p: &RatPoly) -> Result<Vec<(RatPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_decompose"));
    }
    let mut out = Vec::new();
    if p.degree() == 0 {
        return Ok(out);
    }
    let p = p.monic();
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.exact_quotient(&a0)?;
    let mut c = dp.exact_quotient(&a0)?;
    let mut d = &c - &b.derivative();
    let mut exponent = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d)?;
        if a.degree() > 0 {
            out.push((a.clone(), exponent));
        }
        b = b.exact_quotient(&a)?;
        c = d.exact_quotient(&a)?;
        d = &c - &b.derivative();
        exponent += 1;
    }
    Ok(out)
}

/// Monic product of the distinct irreducible factors (`p / gcd(p, p')`).
pub fn radical(p: &RatPoly) -> Result<RatPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("radical"));
    }
    if p.degree() == 0 {
        return Ok(RatPoly::one());
    }
    Ok(p.exact_quotient(&p.gcd(&p.derivative())?)?.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::rat;
    use proptest::prelude::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn from_roots(roots: &[i64]) -> RatPoly {
        roots.iter().fold(RatPoly::one(), |acc, &r| &acc * &rp(&[-r, 1]))
    }

    #[test]
    fn chain_examples() {
        let c = sturm_chain(&rp(&[-2, 0, 1])).unwrap();
        assert_eq!(c.polys(), &[rp(&[-2, 0, 1]), rp(&[0, 2]), rp(&[2])]);
        let c = sturm_chain(&rp(&[0, 1])).unwrap();
        assert_eq!(c.polys(), &[rp(&[0, 1]), rp(&[1])]);
        let c = sturm_chain(&rp(&[1, 2, 1])).unwrap();
        assert_eq!(c.last().monic(), rp(&[1, 1]));
        assert!(sturm_chain(&RatPoly::zero()).is_err());
    }

    #[test]
    fn chain_degrees_strictly_decrease() {
        let p = &from_roots(&[-3, -1, 2, 2, 5]) * &rp(&[1, 0, 1]);
        let c = sturm_chain(&p).unwrap();
        assert!(c.polys().windows(2).all(|w| w[0].degree() > w[1].degree()));
        assert_eq!(c.last().monic(), p.gcd(&p.derivative()).unwrap());
    }

    #[test]
    fn count_examples() {
        let p = rp(&[-2, 0, 1]);
        assert_eq!(count_roots_in(&p, &rat(-2, 1), &rat(2, 1)).unwrap(), 2);
        assert_eq!(count_roots_in(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 0);
        let w42 = rp(&[0, 4, 2]);
        assert_eq!(count_roots_in(&w42, &rat(-3, 1), &rat(1, 1)).unwrap(), 2);
        assert_eq!(count_roots_in(&w42, &rat(-3, 1), &rat(-1, 1)).unwrap(), 1);
        assert_eq!(
            count_roots_in(&w42, &rat(-3, 1), &rat(0, 1)),
            Err(Error::EndpointIsRoot(rat(0, 1)))
        );
        assert!(count_roots_in(&w42, &rat(1, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn count_all_with_multiplicity_ignored() {
        let p = &from_roots(&[-1, -1, -1, 4]) * &rp(&[1, 0, 1]);
        assert_eq!(sturm_chain(&p).unwrap().count_all(), 2);
        assert_eq!(sturm_chain(&rp(&[5])).unwrap().count_all(), 0);
    }

    #[test]
    fn squarefree_examples() {
        let p = &(&rp(&[1, 1]) * &rp(&[1, 1])) * &rp(&[0, 1]);
        assert_eq!(
            squarefree_decompose(&p).unwrap(),
            vec![(rp(&[0, 1]), 1), (rp(&[1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decompose(&rp(&[-2, 0, 1])).unwrap(),
            vec![(rp(&[-2, 0, 1]), 1)]
        );
        assert!(squarefree_decompose(&rp(&[7])).unwrap().is_empty());
        assert_eq!(radical(&p).unwrap(), rp(&[0, 1, 1]));
    }

    #[test]
    fn squarefree_reconstructs() {
        let p = (&from_roots(&[3, 3, 3, -2, 0, 0]) * &rp(&[2, 0, 1])).scale(&rat(-5, 3));
        let parts = squarefree_decompose(&p).unwrap();
        let rebuilt = parts
            .iter()
            .fold(RatPoly::one(), |acc, (f, e)| (0..*e).fold(acc, |a, _| &a * f));
        assert_eq!(rebuilt, p.monic());
        let exps: Vec<u32> = parts.iter().map(|(_, e)| *e).collect();
        assert_eq!(exps, [1, 2, 3]);
    }

    proptest! {
        #[test]
        fn sturm_counts_known_roots(
            roots in prop::collection::btree_set(-8i64..=8, 1..6),
            a in -20i64..20, b in -20i64..20, den in 1i64..4,
        ) {
            let roots: Vec<i64> = roots.into_iter().collect();
            let p = from_roots(&roots);
            // odd numerators over 2*den never hit an integer root
            let lo = rat(2 * a.min(b) - 1, 2 * den);
            let hi = rat(2 * a.max(b) + 1, 2 * den);
            let expected = roots.iter().filter(|&&r| lo < rat(r, 1) && rat(r, 1) <= hi).count();
            prop_assert_eq!(count_roots_in(&p, &lo, &hi).unwrap(), expected);
        }
    }
}
