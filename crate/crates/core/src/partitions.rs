//! Enumeration of integer partitions as nondecreasing part sequences.

/// Calls `f` on every nondecreasing sequence of exactly `parts` integers in
/// `[min, max]` summing to `total`, in lexicographic order.
pub(crate) fn for_each_bounded(
    total: u32,
    parts: usize,
    min: u32,
    max: u32,
    f: &mut impl FnMut(&[u32]),
) {
    let mut buf = Vec::with_capacity(parts);
    recurse(total, parts, min.max(1), max, &mut buf, f);
}

fn recurse(
    remaining: u32,
    parts: usize,
    min: u32,
    max: u32,
    buf: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if parts == 0 {
        if remaining == 0 {
            f(buf);
        }
        return;
    }
    let k = parts as u64;
    // The smallest part is at most remaining / parts.
    let hi = (remaining as u64 / k).min(max as u64) as u32;
    if parts == 1 {
        if remaining >= min && remaining <= max {
            buf.push(remaining);
            f(buf);
            buf.pop();
        }
        return;
    }
    let mut v = min;
    while v <= hi {
        buf.push(v);
        recurse(remaining - v, parts - 1, v, max, buf, f);
        buf.pop();
        v += 1;
    }
}

#[cfg(test)]
/// Partitions of `total` into exactly `parts` positive parts.
pub(crate) fn exact(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_bounded(total, parts, 1, u32::MAX, &mut |p| out.push(p.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_recursive(total: u32, parts: u32) -> u64 {
        // p(n, k) = p(n - 1, k - 1) + p(n - k, k)
        match (total, parts) {
            (0, 0) => 1,
            (_, 0) => 0,
            (t, k) if t < k => 0,
            (t, k) => count_recursive(t - 1, k - 1) + count_recursive(t - k, k),
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(exact(4, 2), vec![vec![1, 3], vec![2, 2]]);
        assert_eq!(exact(5, 3), vec![vec![1, 1, 3], vec![1, 2, 2]]);
        assert!(exact(2, 3).is_empty());
        assert_eq!(exact(0, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn counts_match_recurrence() {
        for total in 0..=60 {
            for parts in 0..=6 {
                assert_eq!(
                    exact(total, parts).len() as u64,
                    count_recursive(total, parts as u32),
                    "p({total}, {parts})"
                );
            }
        }
    }

    #[test]
    fn bounded_parts() {
        let mut seen = Vec::new();
        for_each_bounded(6, 2, 2, 3, &mut |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![3, 3]]);
    }
}
