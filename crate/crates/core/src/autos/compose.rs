use super::word::{AutoWord, WordFactor};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Degree cap used by the commands when none is given.
pub const DEFAULT_MAX_DEGREE: u32 = 1 << 16;

fn max_degree_of<C: Scalar>(coords: &[MultiPoly<C>]) -> u32 {
    coords.iter().filter_map(MultiPoly::degree).max().unwrap_or(0)
}

fn letter_coords<C: Scalar>(w: &AutoWord<C>, wf: &WordFactor<C>) -> Vec<MultiPoly<C>> {
    let vars: Vec<MultiPoly<C>> =
        (0..w.dimension()).map(|i| MultiPoly::var(w.ring(), w.dimension(), i)).collect();
    wf.factor.apply(&vars, wf.inverted)
}

/// Expanded coordinate polynomials of the whole word.
pub fn compose_symbolic<C: Scalar>(w: &AutoWord<C>, max_degree: u32) -> Result<Vec<MultiPoly<C>>> {
    let dim = w.dimension();
    let mut cur: Vec<MultiPoly<C>> = (0..dim).map(|i| MultiPoly::var(w.ring(), dim, i)).collect();
    let mut degree = 1u32;
    for wf in w.flattened().iter().rev() {
        let letter_degree = max_degree_of(&letter_coords(w, wf));
        let bound = degree.saturating_mul(letter_degree);
        if bound > max_degree {
            return Err(Error::DegreeOverflow { degree: bound, limit: max_degree });
        }
        cur = wf.factor.apply(&cur, wf.inverted);
        degree = max_degree_of(&cur);
    }
    Ok(cur)
}

/// Top-degree part of a polynomial map: the common degree D and the degree-D
/// homogeneous component of each coordinate (zero when that coordinate has lower
/// degree).
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingMap<C: Scalar> {
    pub degree: u32,
    pub forms: Vec<MultiPoly<C>>,
}

impl<C: Scalar> LeadingMap<C> {
    pub fn of_coords(coords: &[MultiPoly<C>]) -> Self {
        let degree = max_degree_of(coords);
        LeadingMap { degree, forms: coords.iter().map(|c| c.homogeneous_part(degree)).collect() }
    }
}

/// Leading map of the word, composed letter by letter from the letters' leading
/// maps. When some partial composition of leading forms vanishes identically the
/// degree drops and the full expansion is used instead.
pub fn leading_map<C: Scalar>(w: &AutoWord<C>, max_degree: u32) -> Result<LeadingMap<C>> {
    let dim = w.dimension();
    let mut lead: Vec<MultiPoly<C>> = (0..dim).map(|i| MultiPoly::var(w.ring(), dim, i)).collect();
    let mut degree = 1u32;
    for wf in w.flattened().iter().rev() {
        let letter = LeadingMap::of_coords(&letter_coords(w, wf));
        let next_degree = degree.saturating_mul(letter.degree);
        if next_degree > max_degree {
            return Err(Error::DegreeOverflow { degree: next_degree, limit: max_degree });
        }
        let next: Vec<MultiPoly<C>> = letter.forms.iter().map(|f| f.eval(&lead)).collect();
        if next.iter().all(MultiPoly::is_zero) {
            return Ok(LeadingMap::of_coords(&compose_symbolic(w, max_degree)?));
        }
        lead = next;
        degree = next_degree;
    }
    Ok(LeadingMap { degree, forms: lead })
}
