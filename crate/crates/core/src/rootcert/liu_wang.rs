use super::interlace::{interlaces, InterlaceVerdict};
use super::isolate::nonpositive_on_nonpositive_reals;
use crate::error::{Error, Operand, Result};
use crate::polyarith::{Rat, RatPoly};

/// The hypotheses of the three-term-recurrence criterion for a generalized
/// Sturm sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiuWangCondition {
    NonnegativeCoefficients,
    BaseInterlacing,
    DegreeGrowth,
    Recurrence,
    BNonpositive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiuWangFailure {
    NegativeCoefficient {
        index: usize,
    },
    BaseNotRealRooted {
        index: usize,
    },
    BaseNotInterlacing {
        verdict: Box<InterlaceVerdict>,
    },
    DegreeGrowth {
        index: usize,
        from: isize,
        to: isize,
    },
    RecurrenceMismatch {
        index: usize,
    },
    /// `B_j(x) > 0` at the recorded `x <= 0`.
    BPositive {
        index: usize,
        at: Rat,
    },
}

impl LiuWangFailure {
    pub fn condition(&self) -> LiuWangCondition {
        match self {
            LiuWangFailure::NegativeCoefficient { .. } => LiuWangCondition::NonnegativeCoefficients,
            LiuWangFailure::BaseNotRealRooted { .. } | LiuWangFailure::BaseNotInterlacing { .. } => {
                LiuWangCondition::BaseInterlacing
            }
            LiuWangFailure::DegreeGrowth { .. } => LiuWangCondition::DegreeGrowth,
            LiuWangFailure::RecurrenceMismatch { .. } => LiuWangCondition::Recurrence,
            LiuWangFailure::BPositive { .. } => LiuWangCondition::BNonpositive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiuWangReport {
    /// Number of recurrence steps checked.
    pub steps: usize,
    pub base: Option<InterlaceVerdict>,
    pub failures: Vec<LiuWangFailure>,
}

impl LiuWangReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn condition_holds(&self, c: LiuWangCondition) -> bool {
        self.failures.iter().all(|f| f.condition() != c)
    }
}

/// Checks every hypothesis for `seq[j+2] = a[j] seq[j+1] + b[j] seq[j]`.
/// When all hold, `seq` is a generalized Sturm sequence.
pub fn check_liu_wang_hypotheses(seq: &[RatPoly], a: &[RatPoly], b: &[RatPoly]) -> Result<LiuWangReport> {
    if seq.len() < 2 {
        return Err(Error::InvalidRange(
            "the criterion needs at least two polynomials".into(),
        ));
    }
    let steps = seq.len() - 2;
    for got in [a.len(), b.len()] {
        if got != steps {
            return Err(Error::LengthMismatch { expected: steps, got });
        }
    }
    let mut failures = Vec::new();

    for (index, p) in seq.iter().enumerate() {
        if !p.has_nonnegative_coeffs() {
            failures.push(LiuWangFailure::NegativeCoefficient { index });
        }
    }

    let base = match interlaces(&seq[0], &seq[1]) {
        Ok(v) => {
            if !v.g_interlaces_f() {
                failures.push(LiuWangFailure::BaseNotInterlacing {
                    verdict: Box::new(v.clone()),
                });
            }
            Some(v)
        }
        Err(Error::NotRealRooted(op)) => {
            let index = if op == Operand::G { 0 } else { 1 };
            failures.push(LiuWangFailure::BaseNotRealRooted { index });
            None
        }
        // already reported as a coefficient failure
        Err(Error::NegativeCoefficient(_)) => None,
        Err(e) => return Err(e),
    };

    for (index, w) in seq.windows(2).enumerate() {
        let (from, to) = (w[0].degree(), w[1].degree());
        if to != from && to != from + 1 {
            failures.push(LiuWangFailure::DegreeGrowth { index, from, to });
        }
    }

    for j in 0..steps {
        let rhs = &(&a[j] * &seq[j + 1]) + &(&b[j] * &seq[j]);
        if rhs != seq[j + 2] {
            failures.push(LiuWangFailure::RecurrenceMismatch { index: j });
        }
        if let Some(at) = nonpositive_on_nonpositive_reals(&b[j])? {
            failures.push(LiuWangFailure::BPositive { index: j, at });
        }
    }

    Ok(LiuWangReport { steps, base, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn linear_b_sign_conditions() {
        // F = 1, x, x^2 + ..., with A = x + 1 and B chosen per case
        let seq = [rp(&[1]), rp(&[0, 1]), rp(&[0, 1, 1])];
        let good = check_liu_wang_hypotheses(&seq, &[rp(&[1, 1])], &[RatPoly::zero()]).unwrap();
        assert!(good.passes(), "{good:?}");

        let seq = [rp(&[1]), rp(&[0, 1]), rp(&[0, 1, 1])];
        // x*F_1 + (x + 1)*1 = x^2 + x + 1 differs from F_2 and B > 0 near 0
        let bad = check_liu_wang_hypotheses(&seq, &[rp(&[0, 1])], &[rp(&[1, 1])]).unwrap();
        assert!(!bad.condition_holds(LiuWangCondition::BNonpositive));
        assert!(!bad.condition_holds(LiuWangCondition::Recurrence));
        assert!(bad.condition_holds(LiuWangCondition::BaseInterlacing));
        let at = bad
            .failures
            .iter()
            .find_map(|f| match f {
                LiuWangFailure::BPositive { at, .. } => Some(at.clone()),
                _ => None,
            })
            .unwrap();
        assert!(at <= Rat::from_integer(0.into()));

        // B = x: nonpositive for x <= 0, zero at 0
        let seq = [rp(&[1]), rp(&[0, 1]), rp(&[0, 2, 1])];
        let r = check_liu_wang_hypotheses(&seq, &[rp(&[1, 1])], &[rp(&[0, 1])]).unwrap();
        assert!(r.condition_holds(LiuWangCondition::BNonpositive));
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn structural_failures() {
        let seq = [rp(&[0, 1]), rp(&[1]), rp(&[0, 0, 0, 1])];
        let r = check_liu_wang_hypotheses(&seq, &[RatPoly::zero()], &[RatPoly::zero()]).unwrap();
        assert!(!r.condition_holds(LiuWangCondition::BaseInterlacing));
        assert!(!r.condition_holds(LiuWangCondition::DegreeGrowth));
        assert!(!r.condition_holds(LiuWangCondition::Recurrence));

        let seq = [rp(&[1]), rp(&[-1, 1])];
        let r = check_liu_wang_hypotheses(&seq, &[], &[]).unwrap();
        assert!(!r.condition_holds(LiuWangCondition::NonnegativeCoefficients));

        let seq = [rp(&[0, 1]), rp(&[1, 0, 1])];
        let r = check_liu_wang_hypotheses(&seq, &[], &[]).unwrap();
        assert_eq!(r.failures[0], LiuWangFailure::BaseNotRealRooted { index: 1 });
    }

    #[test]
    fn length_checks() {
        let seq = [rp(&[1]), rp(&[0, 1]), rp(&[0, 1, 1])];
        assert_eq!(
            check_liu_wang_hypotheses(&seq, &[], &[]),
            Err(Error::LengthMismatch { expected: 1, got: 0 })
        );
        assert!(check_liu_wang_hypotheses(&seq[..1], &[], &[]).is_err());
    }
}
