//! Deterministic fan-out helper.
//!
//! Work items are mapped on up to `threads` workers, each writing a
//! contiguous chunk of the output, so output order (and any reduction done
//! over it) is identical for every thread count.

/// Maps `f` over `items`, preserving input order in the output.
///
/// `threads == 1` runs inline on the calling thread.
pub fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }

    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let fref = &f;
    std::thread::scope(|scope| {
        for (in_chunk, out_chunk) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (item, slot) in in_chunk.iter().zip(out_chunk.iter_mut()) {
                    *slot = Some(fref(item));
                }
            });
        }
    });

    out.into_iter()
        .map(|r| r.expect("worker filled every slot"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = parallel_map(&items, 1, |&x| x * x);
        let par = parallel_map(&items, 8, |&x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 100);
    }

    #[test]
    fn empty_input() {
        let items: Vec<u64> = vec![];
        let out = parallel_map(&items, 4, |&x| x);
        assert!(out.is_empty());
    }
}
