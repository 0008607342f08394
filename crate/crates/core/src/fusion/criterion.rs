use crate::error::{HopfError, Result};
use crate::hopf::Family;
use crate::rep::RepLabel;
use num_integer::Integer;

/// Arithmetic inner-faithfulness test for the module shapes that have one:
/// a single two-dimensional label, or (𝒜 with m even) a two-dimensional
/// label plus a one-dimensional one.
pub fn inner_faithful_criterion(family: Family, v: &[RepLabel]) -> Result<bool> {
    let na = || HopfError::CriterionNotApplicable(format!("{v:?} for {family}"));
    for l in v {
        if !l.fits(family) {
            return Err(HopfError::LabelOutOfFamily(format!("{l:?} for {family}")));
        }
    }
    let p = family.parameter() as i64;
    match (family, v) {
        (Family::KacPalyutkin | Family::H2n2 { .. }, [RepLabel::HTwo { i, j }]) => {
            let (i, j) = (*i as i64, *j as i64);
            Ok((i * i - j * j).gcd(&p) == 1)
        }
        (Family::B4m { .. }, [RepLabel::Two { i }]) => Ok((*i as i64).gcd(&(2 * p)) == 1),
        (Family::A4m { .. }, [RepLabel::TwoEps { i, eps }]) => {
            if p % 2 == 1 {
                Ok(*eps == -1 && (*i as i64).gcd(&p) == 1)
            } else {
                // a lone two-dimensional module never suffices when m is even
                Ok(false)
            }
        }
        (Family::A4m { .. }, [RepLabel::TwoEps { i, eps }, RepLabel::One { signs }])
        | (Family::A4m { .. }, [RepLabel::One { signs }, RepLabel::TwoEps { i, eps }])
            if p % 2 == 0 =>
        {
            if (*i as i64).gcd(&p) != 1 {
                return Ok(false);
            }
            let [al, be, ga] = *signs;
            Ok(if al == be {
                ga == -1
            } else if *eps == 1 {
                ga == -1
            } else if p % 4 == 0 {
                ga == -1
            } else {
                ga == 1
            })
        }
        _ => Err(na()),
    }
}
