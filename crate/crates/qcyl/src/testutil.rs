//! Brute-force counting oracles for tests. Everything here enumerates or
//! recurses directly on partitions, independent of the series arithmetic
//! it is used to check.

/// Count partitions of `n` whose parts come from the given
/// (part value, number of colors) list; parts of the same value and color
/// are indistinguishable.
pub fn count_colored_partitions(n: usize, parts: &[(usize, usize)]) -> u64 {
    fn multichoose(colors: usize, picks: usize) -> u64 {
        // C(colors + picks - 1, picks)
        let mut acc = 1u64;
        for i in 0..picks {
            acc = acc * (colors as u64 + i as u64) / (i as u64 + 1);
        }
        acc
    }
    fn go(n: usize, parts: &[(usize, usize)], idx: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        if idx == parts.len() {
            return 0;
        }
        let (value, colors) = parts[idx];
        let mut total = 0;
        let mut used = 0;
        while used * value <= n {
            total += multichoose(colors, used) * go(n - used * value, parts, idx + 1);
            used += 1;
        }
        total
    }
    go(n, parts, 0)
}

/// Part list for partitions into parts lying in the given residue classes
/// (with multiplicity) modulo m, covering part values below `limit`.
pub fn residue_parts(classes: &[usize], m: usize, limit: usize) -> Vec<(usize, usize)> {
    let mut parts = Vec::new();
    for v in 1..limit {
        let colors = classes.iter().filter(|&&c| v % m == c % m).count();
        if colors > 0 {
            parts.push((v, colors));
        }
    }
    parts
}

/// Ordinary partition numbers p(0), ..., p(order-1), by brute force.
pub fn partition_numbers(order: usize) -> Vec<u64> {
    let parts: Vec<(usize, usize)> = (1..order.max(1)).map(|v| (v, 1)).collect();
    (0..order)
        .map(|n| count_colored_partitions(n, &parts))
        .collect()
}
