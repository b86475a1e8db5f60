use super::interlace::{interlaces, InterlaceVerdict};
use super::isolate::certify_real_rooted;
use crate::error::{Error, Operand, Result};
use crate::polyarith::RatPoly;

/// Pairwise interlacing along a sequence `F_1, F_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmSeqReport {
    pub id: Option<String>,
    /// `verdicts[i]` compares `F_{i+1}` (as G) with `F_{i+2}` (as F).
    pub verdicts: Vec<InterlaceVerdict>,
    /// Every consecutive pair rises: `F_i ⪯ F_{i+1}`.
    pub is_generalized_sturm: bool,
    /// Admissible 1-based peak indices; empty for a plain Sturm check or when
    /// the sequence is not Sturm-unimodal.
    pub peaks: Vec<usize>,
    /// 0-based pair indices that break the requested shape.
    pub failures: Vec<usize>,
}

impl SturmSeqReport {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    pub fn is_sturm_unimodal(&self) -> bool {
        !self.peaks.is_empty()
    }

    pub fn rising(&self, pair: usize) -> bool {
        self.verdicts[pair].g_interlaces_f()
    }

    pub fn falling(&self, pair: usize) -> bool {
        self.verdicts[pair].f_interlaces_g()
    }
}

fn pairwise(seq: &[RatPoly]) -> Result<Vec<InterlaceVerdict>> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let [only] = seq {
        if !only.is_zero() && !certify_real_rooted(only)? {
            return Err(Error::NotRealRooted(Operand::G).at(0));
        }
    }
    seq.windows(2)
        .enumerate()
        .map(|(i, w)| interlaces(&w[0], &w[1]).map_err(|e| e.at(i)))
        .collect()
}

pub fn verify_generalized_sturm(seq: &[RatPoly]) -> Result<SturmSeqReport> {
    let verdicts = pairwise(seq)?;
    let failures: Vec<usize> = verdicts
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.g_interlaces_f())
        .map(|(i, _)| i)
        .collect();
    Ok(SturmSeqReport {
        id: None,
        is_generalized_sturm: failures.is_empty(),
        verdicts,
        peaks: Vec::new(),
        failures,
    })
}

/// Finds every `j` with `F_1 ⪯ ... ⪯ F_j ⪰ F_{j+1} ⪰ ... ⪰ F_n`.
pub fn verify_sturm_unimodal(seq: &[RatPoly]) -> Result<SturmSeqReport> {
    let verdicts = pairwise(seq)?;
    let pairs = verdicts.len();
    let rising: Vec<bool> = verdicts.iter().map(|v| v.g_interlaces_f()).collect();
    let falling: Vec<bool> = verdicts.iter().map(|v| v.f_interlaces_g()).collect();

    // peak j (1-based) needs rising on pairs 0..j-1 and falling on pairs j-1..
    let rise_prefix = rising.iter().take_while(|r| **r).count();
    let fall_suffix = falling.iter().rev().take_while(|f| **f).count();
    let peaks: Vec<usize> = (1..=pairs + 1)
        .filter(|&j| j - 1 <= rise_prefix && pairs - (j - 1) <= fall_suffix)
        .collect();

    let mut failures: Vec<usize> = (0..pairs).filter(|&i| !rising[i] && !falling[i]).collect();
    if peaks.is_empty() && failures.is_empty() {
        // every pair has a direction, but a rise follows a fall
        if let Some(i) = (rise_prefix..pairs).find(|&i| !falling[i]) {
            failures.push(i);
        }
    }
    Ok(SturmSeqReport {
        id: None,
        is_generalized_sturm: rise_prefix == pairs,
        verdicts,
        peaks,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn generalized_sturm_examples() {
        let r = verify_generalized_sturm(&[rp(&[1]), rp(&[0, 1])]).unwrap();
        assert!(r.is_generalized_sturm);
        let r = verify_generalized_sturm(&[rp(&[0, 1, 1]), rp(&[2, 3, 1])]).unwrap();
        assert!(!r.is_generalized_sturm);
        assert_eq!(r.failures, vec![0]);
        assert!(r.verdicts[0].witness().is_some());
        assert!(verify_generalized_sturm(&[]).is_err());
        assert!(verify_generalized_sturm(&[rp(&[1, 0, 1])]).is_err());
        let r = verify_generalized_sturm(&[rp(&[0, 1])]).unwrap();
        assert!(r.is_generalized_sturm && r.verdicts.is_empty());
    }

    #[test]
    fn errors_carry_the_pair_index() {
        let seq = [rp(&[1]), rp(&[0, 1]), rp(&[1, 0, 1])];
        match verify_generalized_sturm(&seq) {
            Err(Error::AtIndex { index, source }) => {
                assert_eq!(index, 1);
                assert_eq!(*source, Error::NotRealRooted(Operand::F));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unimodal_examples() {
        let r = verify_sturm_unimodal(&[rp(&[0, 1])]).unwrap();
        assert_eq!(r.peaks, vec![1]);
        // x, 5x + 5x^2, 10x + 10x^2, 10x, 1 is W_{5,k}
        let seq = [rp(&[0, 1]), rp(&[0, 5, 5]), rp(&[0, 10, 10]), rp(&[0, 10]), rp(&[1])];
        let r = verify_sturm_unimodal(&seq).unwrap();
        assert_eq!(r.peaks, vec![2, 3]);
        assert!(!r.is_generalized_sturm);
    }

    #[test]
    fn valley_is_not_unimodal() {
        // x ⪰ 1 then 1 ⪯ x: falls, then rises
        let seq = [rp(&[0, 1]), rp(&[1]), rp(&[0, 1])];
        let r = verify_sturm_unimodal(&seq).unwrap();
        assert!(!r.is_sturm_unimodal());
        assert_eq!(r.failures, vec![1]);
    }
}
