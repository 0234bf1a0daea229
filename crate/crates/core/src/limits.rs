/// Caps guarding the enumerations, matrices and big-number bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of candidate lattice points a volume enumeration may visit.
    pub enumeration_cap: u64,
    /// Maximum `rows * columns` of a prolongation matrix.
    pub matrix_cell_cap: u64,
    /// Maximum number of decimal digits of any materialized bound.
    pub bound_digits: u64,
    /// Maximum number of steps of the iterated bound recursions.
    pub bound_steps: u64,
    /// Highest level the prolongation pipeline searches for a stable window.
    pub prolongation_ceiling: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 10_000_000,
            matrix_cell_cap: 100_000_000,
            bound_digits: 100_000,
            bound_steps: 10_000_000,
            prolongation_ceiling: 200,
        }
    }
}

impl Limits {
    /// Bit budget equivalent to `bound_digits` decimal digits.
    pub(crate) fn bound_bits(&self) -> u64 {
        // log2(10) < 3.322
        self.bound_digits.saturating_mul(3322) / 1000 + 1
    }
}
