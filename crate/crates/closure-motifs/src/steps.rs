//! Primitive-operation counters used to validate running-time behaviour
//! empirically.

/// Monotone tallies of the primitive operations an algorithm performs.
///
/// One counter is owned per algorithm run; callers reset (or allocate a fresh
/// counter) between runs. Work spent on internal preprocessing that a caller
/// could share across runs (closure computation inside a detector, for
/// instance) is booked under `setup` so the per-phase tallies stay
/// comparable with their analytic bounds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StepCounter {
    /// Single adjacency tests (binary probes of a neighbor list).
    pub edge_probes: u64,
    /// Elements visited while scanning or merging neighbor lists.
    pub neighbor_scans: u64,
    /// Reads of common-neighborhood index entries.
    pub index_touches: u64,
    /// Preprocessing charged separately (e.g. closure computation inside a
    /// detector).
    pub setup: u64,
}

impl StepCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    /// Sum of all tallies including setup.
    pub fn total(&self) -> u64 {
        self.edge_probes + self.neighbor_scans + self.index_touches + self.setup
    }

    /// Folds another counter's tallies into `setup`.
    pub fn charge_setup(&mut self, inner: &StepCounter) {
        self.setup += inner.total();
    }

    /// Adds another counter's tallies field-wise.
    pub fn absorb(&mut self, other: &StepCounter) {
        self.edge_probes += other.edge_probes;
        self.neighbor_scans += other.neighbor_scans;
        self.index_touches += other.index_touches;
        self.setup += other.setup;
    }
}
