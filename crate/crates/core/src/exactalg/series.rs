use super::LaurentPoly;

/// Truncated expansion in descending powers of `q`: every exponent of `terms`
/// is at least `cutoff`, and the coefficients below it are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescSeries {
    cutoff: i64,
    terms: LaurentPoly,
}

impl DescSeries {
    pub fn new(cutoff: i64, terms: LaurentPoly) -> Self {
        Self {
            cutoff,
            terms: terms.truncate_below(cutoff),
        }
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn terms(&self) -> &LaurentPoly {
        &self.terms
    }

    /// Coarser truncation; a cutoff below the current one is clamped.
    pub fn truncate(&self, cutoff: i64) -> Self {
        let cutoff = cutoff.max(self.cutoff);
        Self::new(cutoff, self.terms.clone())
    }

    /// Whether `p` agrees with this series at every known exponent.
    pub fn agrees_with(&self, p: &LaurentPoly) -> bool {
        p.truncate_below(self.cutoff) == self.terms
    }
}
