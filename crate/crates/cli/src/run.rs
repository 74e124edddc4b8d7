//! Thread-count-independent parallel ensemble accumulation.
//!
//! Realizations are split into fixed 32-wide chunks. Workers claim chunks
//! from an atomic counter, accumulate each chunk sequentially, and the
//! chunk results are merged in chunk-index order afterwards. The chunking
//! and the merge order are both independent of how many workers ran, so a
//! given (spec, chunk size) produces bitwise identical statistics with 1
//! thread or 64.

use revan_core::ensemble::{accumulate_range, EnsembleError, EnsembleSpec, EnsembleStats};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

const CHUNK: u64 = 32;

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn run_ensemble_parallel(
    spec: &EnsembleSpec,
    threads: usize,
) -> Result<EnsembleStats, EnsembleError> {
    spec.validate()?;
    let chunk_count = spec.realizations.div_ceil(CHUNK);
    let workers = threads.clamp(1, chunk_count.min(1024) as usize);

    let next = AtomicU64::new(0);
    let chunks: Mutex<Vec<(u64, EnsembleStats)>> =
        Mutex::new(Vec::with_capacity(chunk_count as usize));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                loop {
                    let chunk = next.fetch_add(1, Ordering::Relaxed);
                    if chunk >= chunk_count {
                        break;
                    }
                    let lo = chunk * CHUNK;
                    let hi = (lo + CHUNK).min(spec.realizations);
                    let stats =
                        accumulate_range(spec, lo..hi).expect("spec validated, range in bounds");
                    chunks.lock().unwrap().push((chunk, stats));
                }
            });
        }
    });

    let mut chunks = chunks.into_inner().unwrap();
    chunks.sort_unstable_by_key(|&(chunk, _)| chunk);
    let mut total = EnsembleStats::new(*spec);
    for (_, stats) in &chunks {
        total.merge(stats).expect("all chunks share the spec");
    }
    Ok(total)
}
