/// Resource ceilings shared by the table, search and enumeration routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of cells a single denumerant table may allocate.
    pub max_table_cells: usize,
    /// Largest number of representations `enumerate_reps` may return.
    pub max_reps_out: usize,
    /// First horizon tried by the doubling g_k search. `None` picks
    /// `2 (k+1) max(A)^2`.
    pub horizon: Option<i64>,
}

impl Limits {
    pub const DEFAULT_MAX_TABLE_CELLS: usize = 100_000_000;
    pub const DEFAULT_MAX_REPS_OUT: usize = 1_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_table_cells: Self::DEFAULT_MAX_TABLE_CELLS,
            max_reps_out: Self::DEFAULT_MAX_REPS_OUT,
            horizon: None,
        }
    }
}
