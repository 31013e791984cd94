use alloc::vec;
use alloc::vec::Vec;

/// Size-`n` wedge counter array.
///
/// Zero before and after every counting call.
#[derive(Debug, Clone, Default)]
pub struct Scratch {
    counters: Vec<u64>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Self {
            counters: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.counters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counters.is_empty()
    }

    pub fn is_zeroed(&self) -> bool {
        self.counters.iter().all(|&c| c == 0)
    }

    /// Grows to at least `n` counters and returns the first `n`.
    pub(crate) fn fit(&mut self, n: usize) -> &mut [u64] {
        if self.counters.len() < n {
            self.counters.resize(n, 0);
        }
        &mut self.counters[..n]
    }

    pub(crate) fn reset(&mut self) {
        self.counters.fill(0);
    }
}

/// Counter pair for the local algorithms: the running count and a copy of
/// its value at the last increment (final count minus one once the first
/// pass over a vertex ends).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DualCounter {
    pub orig: u64,
    pub copy: u64,
}

/// Size-`n` array of [`DualCounter`]s, stored interleaved.
///
/// `orig` is zero before and after every counting call. `copy` is only
/// meaningful within one outer vertex and is overwritten before it is read.
#[derive(Debug, Clone, Default)]
pub struct DualScratch {
    slots: Vec<DualCounter>,
}

impl DualScratch {
    pub fn new(n: usize) -> Self {
        Self {
            slots: vec![DualCounter::default(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn is_zeroed(&self) -> bool {
        self.slots.iter().all(|s| s.orig == 0)
    }

    pub(crate) fn fit(&mut self, n: usize) -> &mut [DualCounter] {
        if self.slots.len() < n {
            self.slots.resize(n, DualCounter::default());
        }
        &mut self.slots[..n]
    }

    pub(crate) fn reset(&mut self) {
        self.slots.fill(DualCounter::default());
    }
}
