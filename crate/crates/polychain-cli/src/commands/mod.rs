pub mod compute;
pub mod enumerate;
pub mod extremal;
pub mod flip;
pub mod reduce;
pub mod resistance;
pub mod verify;

use polychain::chain::ChainSpec;

/// clap value parser for chain encodings (`k:h:w1,...,w(h-2)`).
pub(crate) fn parse_spec(s: &str) -> Result<ChainSpec, String> {
    s.parse::<ChainSpec>().map_err(|err| err.to_string())
}

/// clap value parser for `u,v` vertex pairs.
pub(crate) fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("'{s}': expected a pair u,v"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a vertex index"))
    };
    Ok((parse(a)?, parse(b)?))
}

/// clap value parser for `k:h` cells.
pub(crate) fn parse_cell(s: &str) -> Result<(u32, u32), String> {
    let (k, h) = s
        .split_once(':')
        .ok_or_else(|| format!("'{s}': expected a cell k:h"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("'{t}' is not a number"))
    };
    Ok((parse(k)?, parse(h)?))
}

/// clap value parser for ranges: `a..=b` (inclusive), `a..b` (exclusive
/// end), `a-b` (inclusive), or a single value. Returns inclusive bounds.
pub(crate) fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("'{t}' is not a number"))
    };
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (parse(a)?, parse(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        let end = parse(b)?;
        let hi = end
            .checked_sub(1)
            .ok_or_else(|| format!("'{s}' is an empty range"))?;
        (parse(a)?, hi)
    } else if let Some((a, b)) = s.split_once('-') {
        (parse(a)?, parse(b)?)
    } else {
        let v = parse(s)?;
        (v, v)
    };
    if lo > hi {
        return Err(format!("'{s}' is an empty range"));
    }
    Ok((lo, hi))
}

/// Applies `f` to every item across `workers` threads (stride-sharded)
/// and returns the results in input order.
pub(crate) fn parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = workers.clamp(1, items.len().max(1));
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let f = &f;
    let mut indexed: Vec<(usize, R)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|lane| {
                scope.spawn(move || -> Vec<(usize, R)> {
                    items
                        .iter()
                        .enumerate()
                        .skip(lane)
                        .step_by(workers)
                        .map(|(i, item)| (i, f(item)))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|handle| handle.join().expect("worker thread panicked"))
            .collect()
    });
    indexed.sort_by_key(|&(i, _)| i);
    indexed.into_iter().map(|(_, r)| r).collect()
}
