use super::isolate::{certify_real_rooted, multiplicity_at, SquareFree};
use super::sturm::{radical, squarefree_decompose};
use crate::error::{Error, Operand, Result};
use crate::polyarith::{Rat, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InterlaceOutcome {
    /// `G ⪯ F` holds and `F ⪯ G` does not.
    GInterlacesF,
    /// `F ⪯ G` holds and `G ⪯ F` does not.
    FInterlacesG,
    Both,
    Neither,
    /// Both directions hold, each only through a convention for constants or
    /// the zero polynomial.
    DegenerateConvention,
}

/// A root named as in the weakly decreasing listing `r_1 >= r_2 >= ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootLabel {
    pub poly: Operand,
    /// 1-based position in decreasing order.
    pub index: usize,
    pub lo: Rat,
    pub hi: Rat,
    pub exact: Option<Rat>,
}

/// Adjacent chain entries where `left <= right` is required but fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub left: RootLabel,
    pub right: RootLabel,
}

/// Result of testing one direction, `lower ⪯ upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Direction {
    Holds,
    HoldsByConvention,
    DegreeMismatch { lower: isize, upper: isize },
    OrderViolated(Box<Witness>),
}

impl Direction {
    pub fn holds(&self) -> bool {
        matches!(self, Direction::Holds | Direction::HoldsByConvention)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlaceVerdict {
    pub outcome: InterlaceOutcome,
    /// `G ⪯ F`.
    pub g_into_f: Direction,
    /// `F ⪯ G`.
    pub f_into_g: Direction,
}

impl InterlaceVerdict {
    /// `G ⪯ F`, whether directly or by convention.
    pub fn g_interlaces_f(&self) -> bool {
        self.g_into_f.holds()
    }

    pub fn f_interlaces_g(&self) -> bool {
        self.f_into_g.holds()
    }

    /// The first violated inequality, preferring the `G ⪯ F` direction.
    pub fn witness(&self) -> Option<&Witness> {
        [&self.g_into_f, &self.f_into_g].into_iter().find_map(|d| match d {
            Direction::OrderViolated(w) => Some(w.as_ref()),
            _ => None,
        })
    }
}

// All distinct real roots of f*g in one ascending order; each polynomial's
// roots are indices into that order, repeated by multiplicity.
struct MergedRoots {
    intervals: Vec<(Rat, Rat, Option<Rat>)>,
    g: Vec<usize>,
    f: Vec<usize>,
}

impl MergedRoots {
    fn new(g: &RatPoly, f: &RatPoly) -> Result<MergedRoots> {
        let sqf = SquareFree::new(radical(&(g * f))?)?;
        let intervals = sqf.isolate()?;
        let g_factors = squarefree_decompose(g)?;
        let f_factors = squarefree_decompose(f)?;
        let (mut gr, mut fr) = (Vec::new(), Vec::new());
        for (i, (lo, hi, exact)) in intervals.iter().enumerate() {
            let mg = multiplicity_at(&g_factors, lo, hi, exact.as_ref());
            let mf = multiplicity_at(&f_factors, lo, hi, exact.as_ref());
            gr.extend(std::iter::repeat_n(i, mg as usize));
            fr.extend(std::iter::repeat_n(i, mf as usize));
        }
        Ok(MergedRoots {
            intervals,
            g: gr,
            f: fr,
        })
    }

    fn roots(&self, op: Operand) -> &[usize] {
        match op {
            Operand::G => &self.g,
            Operand::F => &self.f,
        }
    }

    fn label(&self, op: Operand, ascending_pos: usize) -> RootLabel {
        let roots = self.roots(op);
        let (lo, hi, exact) = self.intervals[roots[ascending_pos]].clone();
        RootLabel {
            poly: op,
            index: roots.len() - ascending_pos,
            lo,
            hi,
            exact,
        }
    }

    /// Checks `lower ⪯ upper` on the weak alternation chain.
    fn precedes(&self, lower: Operand, upper: Operand) -> Direction {
        let (lo_roots, up_roots) = (self.roots(lower), self.roots(upper));
        let (dl, du) = (lo_roots.len(), up_roots.len());
        // ascending chain: equal degrees l1 <= u1 <= l2 <= ...,
        // upper one degree higher u1 <= l1 <= u2 <= ...
        let mut chain: Vec<(Operand, usize)> = Vec::with_capacity(dl + du);
        if du == dl {
            for i in 0..dl {
                chain.push((lower, i));
                chain.push((upper, i));
            }
        } else if du == dl + 1 {
            for i in 0..dl {
                chain.push((upper, i));
                chain.push((lower, i));
            }
            chain.push((upper, dl));
        } else {
            return Direction::DegreeMismatch {
                lower: dl as isize,
                upper: du as isize,
            };
        }
        for w in chain.windows(2) {
            let (a, b) = (w[0], w[1]);
            if self.roots(a.0)[a.1] > self.roots(b.0)[b.1] {
                return Direction::OrderViolated(Box::new(Witness {
                    left: self.label(a.0, a.1),
                    right: self.label(b.0, b.1),
                }));
            }
        }
        Direction::Holds
    }
}

/// Decides `G ⪯ F` and `F ⪯ G` exactly.
///
/// The conventions come first: any constant precedes any polynomial of degree
/// at most one, and the zero polynomial precedes and follows every real-rooted
/// polynomial. Otherwise both inputs must have nonnegative coefficients and be
/// real-rooted, and roots are compared with multiplicity.
pub fn interlaces(g: &RatPoly, f: &RatPoly) -> Result<InterlaceVerdict> {
    if g.is_zero() || f.is_zero() {
        for (p, op) in [(g, Operand::G), (f, Operand::F)] {
            if !p.is_zero() && !certify_real_rooted(p)? {
                return Err(Error::NotRealRooted(op));
            }
        }
        return Ok(InterlaceVerdict {
            outcome: InterlaceOutcome::DegenerateConvention,
            g_into_f: Direction::HoldsByConvention,
            f_into_g: Direction::HoldsByConvention,
        });
    }

    let conv_gf = g.degree() == 0 && f.degree() <= 1;
    let conv_fg = f.degree() == 0 && g.degree() <= 1;
    let mismatch = Direction::DegreeMismatch {
        lower: f.degree(),
        upper: g.degree(),
    };
    // exactly one convention applies only to a constant against a linear
    // polynomial, where the reverse direction fails on degrees alone
    let (g_into_f, f_into_g) = if conv_gf && conv_fg {
        (Direction::HoldsByConvention, Direction::HoldsByConvention)
    } else if conv_gf {
        (Direction::HoldsByConvention, mismatch)
    } else if conv_fg {
        (
            Direction::DegreeMismatch {
                lower: g.degree(),
                upper: f.degree(),
            },
            Direction::HoldsByConvention,
        )
    } else {
        if !g.has_nonnegative_coeffs() {
            return Err(Error::NegativeCoefficient(Operand::G));
        }
        if !f.has_nonnegative_coeffs() {
            return Err(Error::NegativeCoefficient(Operand::F));
        }
        let merged = MergedRoots::new(g, f)?;
        for (p, op) in [(g, Operand::G), (f, Operand::F)] {
            if merged.roots(op).len() as isize != p.degree() {
                return Err(Error::NotRealRooted(op));
            }
        }
        (
            merged.precedes(Operand::G, Operand::F),
            merged.precedes(Operand::F, Operand::G),
        )
    };

    let outcome = match (g_into_f.holds(), f_into_g.holds()) {
        (true, true) if g_into_f == Direction::HoldsByConvention && f_into_g == Direction::HoldsByConvention => {
            InterlaceOutcome::DegenerateConvention
        }
        (true, true) => InterlaceOutcome::Both,
        (true, false) => InterlaceOutcome::GInterlacesF,
        (false, true) => InterlaceOutcome::FInterlacesG,
        (false, false) => InterlaceOutcome::Neither,
    };
    Ok(InterlaceVerdict {
        outcome,
        g_into_f,
        f_into_g,
    })
}
