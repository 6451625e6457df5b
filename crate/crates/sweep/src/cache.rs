//! Green's-grid evaluation in parallel, plus a small LRU cache keyed by the
//! exact parameters so repeated work is reused bit for bit.

use std::collections::VecDeque;
use std::sync::{Arc, Mutex};

use faddeev_core::green::GreenGrid;
use faddeev_core::ls::TorusGrid;
use faddeev_core::spectral::SpectralParam;
use rayon::prelude::*;

use crate::error::Result;

pub const DEFAULT_CAPACITY: usize = 8;

/// Samples every node on the current rayon pool. Each node is a pure
/// function of its coordinates, so the result does not depend on the
/// number of threads.
pub fn compute_green_grid(p: &SpectralParam, grid: &TorusGrid) -> Result<GreenGrid> {
    let evaluator = GreenGrid::evaluator(p, grid)?;
    let samples = (0..grid.len())
        .into_par_iter()
        .map(|idx| GreenGrid::node_value(&evaluator, grid, idx))
        .collect::<faddeev_core::Result<Vec<_>>>()?;
    Ok(GreenGrid::from_samples(&evaluator, grid, samples)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Key {
    lambda: (u64, u64),
    energy: u64,
    exponent: u32,
    half_width: u64,
}

impl Key {
    fn new(p: &SpectralParam, grid: &TorusGrid) -> Self {
        Key {
            lambda: (p.lambda().re.to_bits(), p.lambda().im.to_bits()),
            energy: p.energy().to_bits(),
            exponent: grid.exponent(),
            half_width: grid.half_width().to_bits(),
        }
    }
}

/// Least-recently-used store of Green's grids, shared between workers.
#[derive(Debug)]
pub struct GreenCache {
    capacity: usize,
    entries: Mutex<VecDeque<(Key, Arc<GreenGrid>)>>,
}

impl Default for GreenCache {
    fn default() -> Self {
        GreenCache::new(DEFAULT_CAPACITY)
    }
}

impl GreenCache {
    pub fn new(capacity: usize) -> Self {
        GreenCache {
            capacity: capacity.max(1),
            entries: Mutex::new(VecDeque::new()),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, VecDeque<(Key, Arc<GreenGrid>)>> {
        // A panic while holding the lock cannot leave the deque inconsistent.
        self.entries.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn get(&self, p: &SpectralParam, grid: &TorusGrid) -> Option<Arc<GreenGrid>> {
        let key = Key::new(p, grid);
        let mut entries = self.lock();
        let pos = entries.iter().position(|(k, _)| *k == key)?;
        let entry = entries.remove(pos)?;
        let value = entry.1.clone();
        entries.push_front(entry);
        Some(value)
    }

    fn insert(&self, p: &SpectralParam, grid: &TorusGrid, value: Arc<GreenGrid>) {
        let key = Key::new(p, grid);
        let mut entries = self.lock();
        entries.retain(|(k, _)| *k != key);
        entries.push_front((key, value));
        entries.truncate(self.capacity);
    }

    /// Cached grid, or a fresh one that is then stored. Concurrent misses on
    /// the same key may both compute; the results are identical.
    pub fn get_or_compute(&self, p: &SpectralParam, grid: &TorusGrid) -> Result<Arc<GreenGrid>> {
        if let Some(hit) = self.get(p, grid) {
            return Ok(hit);
        }
        let fresh = Arc::new(compute_green_grid(p, grid)?);
        self.insert(p, grid, fresh.clone());
        Ok(fresh)
    }
}
