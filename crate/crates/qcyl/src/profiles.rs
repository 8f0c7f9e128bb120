//! Profile (composition) combinatorics: rotation, the subset move of the
//! Corteel–Welsh recursion, and the Borodin exponent multiset in both of
//! its printed formulations.
//!
//! Indices are 1-based to match the usual conventions for compositions;
//! the c_0 = c_k wrap is implemented by index arithmetic, not padding.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const MAX_K: usize = 8;
const MAX_LEVEL: usize = 64;

/// A composition (c_1, ..., c_k) of the level l = sum c_i, with modulus
/// t = k + l. Profiles index the cylindric-partition generating functions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    parts: Vec<usize>,
}

impl Profile {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidProfile("need at least one part".into()));
        }
        if parts.len() > MAX_K {
            return Err(Error::InvalidProfile(format!(
                "k = {} exceeds the supported maximum {MAX_K}",
                parts.len()
            )));
        }
        let level: usize = parts.iter().sum();
        if level == 0 {
            return Err(Error::InvalidProfile("level must be positive".into()));
        }
        if level > MAX_LEVEL {
            return Err(Error::InvalidProfile(format!(
                "level {level} exceeds the supported maximum {MAX_LEVEL}"
            )));
        }
        Ok(Profile { parts })
    }

    /// Number of parts k.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The level l = c_1 + ... + c_k.
    pub fn level(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The modulus t = k + l of the Borodin product.
    pub fn modulus(&self) -> usize {
        self.k() + self.level()
    }

    /// c_i with 1-based index; i = 0 wraps to c_k.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            self.parts[self.k() - 1]
        } else {
            self.parts[i - 1]
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Partial sum s(i,j) = c_i + ... + c_j, with s(i,j) = 0 when j < i.
    pub fn s(&self, i: usize, j: usize) -> usize {
        if j < i {
            return 0;
        }
        (i..=j).map(|x| self.part(x)).sum()
    }

    /// Left rotation (c_2, ..., c_k, c_1).
    pub fn rotate(&self) -> Profile {
        let mut parts = self.parts.clone();
        parts.rotate_left(1);
        Profile { parts }
    }

    /// The support I_c = { j : c_j > 0 }, as 1-based indices in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.k()).filter(|&j| self.part(j) > 0).collect()
    }

    /// All nonempty subsets of the support, ordered by increasing cardinality
    /// and then lexicographically, so recursion traces are reproducible.
    pub fn subsets_of_support(&self) -> Vec<Vec<usize>> {
        let support = self.support();
        let n = support.len();
        let mut subsets: Vec<Vec<usize>> = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1u32 << n) {
            let subset: Vec<usize> = (0..n)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| support[b])
                .collect();
            subsets.push(subset);
        }
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subsets
    }

    /// The moved composition c(J) of the Corteel–Welsh recursion:
    /// c_i - 1 when i enters J without i-1, c_i + 1 when i-1 is in J
    /// without i, unchanged otherwise. Requires a nonempty J inside the
    /// support; the level is preserved.
    pub fn move_cj(&self, j_set: &[usize]) -> Result<Profile> {
        if j_set.is_empty() {
            return Err(Error::InvalidMove("J must be nonempty".into()));
        }
        let support = self.support();
        for &j in j_set {
            if !support.contains(&j) {
                return Err(Error::InvalidMove(format!(
                    "index {j} is not in the support of {self}"
                )));
            }
        }
        let k = self.k();
        let contains = |i: usize| {
            let wrapped = if i == 0 { k } else { i };
            j_set.contains(&wrapped)
        };
        let parts = (1..=k)
            .map(|i| {
                let here = contains(i);
                let prev = contains(i - 1);
                match (here, prev) {
                    (true, false) => self.part(i) - 1,
                    (false, true) => self.part(i) + 1,
                    _ => self.part(i),
                }
            })
            .collect();
        Ok(Profile { parts })
    }

    /// Exponent multiset of the Borodin product for this profile, read off
    /// the two triple products plus one copy of t for the leading
    /// 1/(q^t;q^t)_inf factor. All factors share the modulus t.
    pub fn borodin_exponents(&self) -> ExponentMultiset {
        let k = self.k();
        let t = self.modulus();
        let mut ms = ExponentMultiset::new(t);
        ms.insert(t);
        for i in 1..=k {
            for j in i..=k {
                for m in 1..=self.part(i) {
                    ms.insert(m + j - i + self.s(i + 1, j));
                }
            }
        }
        for i in 2..=k {
            for j in 2..=i {
                for m in 1..=self.part(i) {
                    ms.insert(t - m + j - i - self.s(j, i - 1));
                }
            }
        }
        ms
    }

    /// The same multiset in the hook-length formulation: hooks of the
    /// partition mu = (s(1,1), ..., s(1,k)) plus t minus the hooks of its
    /// complement in the k x l rectangle, plus t itself.
    pub fn hook_exponents(&self) -> ExponentMultiset {
        let k = self.k();
        let level = self.level();
        let t = self.modulus();
        // mu has increasing partial sums; arrange rows weakly decreasing.
        let mut mu: Vec<usize> = (1..=k).map(|j| self.s(1, j)).collect();
        mu.reverse();
        // Complement inside the k x level rectangle, rotated back to a partition.
        let complement: Vec<usize> = mu.iter().rev().map(|&row| level - row).collect();

        let mut ms = ExponentMultiset::new(t);
        ms.insert(t);
        for h in hook_lengths(&mu) {
            ms.insert(h);
        }
        for h in hook_lengths(&complement) {
            ms.insert(t - h);
        }
        ms
    }
}

/// Hook lengths of all cells of a partition (weakly decreasing row lengths).
fn hook_lengths(shape: &[usize]) -> Vec<usize> {
    let width = shape.first().copied().unwrap_or(0);
    // column heights
    let mut cols = vec![0usize; width];
    for &row in shape {
        for c in 0..row {
            cols[c] += 1;
        }
    }
    let mut hooks = Vec::new();
    for (r, &row) in shape.iter().enumerate() {
        for c in 0..row {
            let arm = row - c - 1;
            let leg = cols[c] - r - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidProfile(format!("bad part `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Profile::new(parts)
    }
}

/// A multiset of Pochhammer exponents, all in [1, t] for a modulus t.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentMultiset {
    modulus: usize,
    counts: BTreeMap<usize, usize>,
}

impl ExponentMultiset {
    pub fn new(modulus: usize) -> Self {
        ExponentMultiset {
            modulus,
            counts: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, exponent: usize) {
        assert!(
            (1..=self.modulus).contains(&exponent),
            "exponent {exponent} outside [1, {}]",
            self.modulus
        );
        *self.counts.entry(exponent).or_insert(0) += 1;
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, exponent: usize) -> usize {
        self.counts.get(&exponent).copied().unwrap_or(0)
    }

    /// Remove one copy of each exponent in 1..=t. Returns false (leaving
    /// self untouched beyond the removals already made) if a class is missing.
    pub fn remove_full_ladder(&mut self) -> bool {
        for e in 1..=self.modulus {
            match self.counts.get_mut(&e) {
                Some(c) if *c > 0 => {
                    *c -= 1;
                    if *c == 0 {
                        self.counts.remove(&e);
                    }
                }
                _ => return false,
            }
        }
        true
    }

    /// Flatten to (start, modulus) factor pairs for series expansion.
    pub fn factors(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.total());
        for (&e, &c) in &self.counts {
            for _ in 0..c {
                out.push((e, self.modulus));
            }
        }
        out
    }
}

/// All compositions of `level` into exactly `k` nonnegative parts.
pub fn compositions(k: usize, level: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, level: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            prefix.push(level);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=level {
            prefix.push(first);
            go(k - 1, level - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, level, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(parts: &[usize]) -> Profile {
        Profile::new(parts.to_vec()).unwrap()
    }

    fn multiset(modulus: usize, pairs: &[(usize, usize)]) -> ExponentMultiset {
        let mut ms = ExponentMultiset::new(modulus);
        for &(e, c) in pairs {
            for _ in 0..c {
                ms.insert(e);
            }
        }
        ms
    }

    #[test]
    fn partial_sums() {
        let c = profile(&[3, 1, 1]);
        assert_eq!(c.s(2, 3), 2);
        assert_eq!(c.s(2, 1), 0);
        assert_eq!(c.s(1, 3), 5);
    }

    #[test]
    fn rotation() {
        assert_eq!(profile(&[5, 0, 0]).rotate(), profile(&[0, 0, 5]));
        assert_eq!(profile(&[2, 1]).rotate(), profile(&[1, 2]));
        let c = profile(&[3, 1, 1, 2]);
        let mut r = c.clone();
        for _ in 0..c.k() {
            r = r.rotate();
        }
        assert_eq!(r, c);
    }

    #[test]
    fn moves_from_the_rr_warmup() {
        assert_eq!(profile(&[3, 0]).move_cj(&[1]).unwrap(), profile(&[2, 1]));
        assert_eq!(profile(&[2, 1]).move_cj(&[1, 2]).unwrap(), profile(&[2, 1]));
    }

    #[test]
    fn moves_from_the_level5_system() {
        let c = profile(&[4, 1, 0]);
        assert_eq!(c.move_cj(&[2]).unwrap(), profile(&[4, 0, 1]));
        assert_eq!(c.move_cj(&[1]).unwrap(), profile(&[3, 2, 0]));
        assert_eq!(c.move_cj(&[1, 2]).unwrap(), profile(&[3, 1, 1]));
    }

    #[test]
    fn move_rejects_bad_subsets() {
        let c = profile(&[3, 0]);
        assert!(c.move_cj(&[]).is_err());
        assert!(c.move_cj(&[2]).is_err());
    }

    #[test]
    fn move_preserves_level_exhaustively() {
        for k in 1..=4 {
            for level in 1..=6 {
                for parts in compositions(k, level) {
                    let c = Profile::new(parts).unwrap();
                    for j_set in c.subsets_of_support() {
                        let moved = c.move_cj(&j_set).unwrap();
                        assert_eq!(moved.level(), level, "{c} with J={j_set:?}");
                        assert_eq!(moved.k(), k);
                    }
                }
            }
        }
    }

    #[test]
    fn subset_enumeration_order() {
        assert_eq!(profile(&[3, 0]).subsets_of_support(), vec![vec![1]]);
        assert_eq!(
            profile(&[2, 1]).subsets_of_support(),
            vec![vec![1], vec![2], vec![1, 2]]
        );
        assert_eq!(profile(&[3, 1, 1]).subsets_of_support().len(), 7);
    }

    #[test]
    fn borodin_exponents_examples() {
        assert_eq!(
            profile(&[3, 1, 1]).borodin_exponents(),
            multiset(
                8,
                &[(1, 3), (2, 1), (3, 3), (4, 1), (5, 3), (6, 1), (7, 3), (8, 1)]
            )
        );
        assert_eq!(
            profile(&[2, 1]).borodin_exponents(),
            multiset(5, &[(1, 2), (2, 1), (3, 1), (4, 2), (5, 1)])
        );
        assert_eq!(
            profile(&[1, 0]).borodin_exponents(),
            multiset(3, &[(1, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn hook_exponents_examples() {
        let c = profile(&[3, 1, 1]);
        assert_eq!(c.hook_exponents(), c.borodin_exponents());

        // Single-row profile: hooks 1..l plus t.
        let c = profile(&[4]);
        let mut expect = ExponentMultiset::new(5);
        for e in 1..=5 {
            expect.insert(e);
        }
        assert_eq!(c.hook_exponents(), expect);
    }

    #[test]
    fn hook_equals_borodin_exhaustively() {
        for k in 1..=4 {
            for level in 1..=6 {
                for parts in compositions(k, level) {
                    let c = Profile::new(parts).unwrap();
                    assert_eq!(
                        c.hook_exponents(),
                        c.borodin_exponents(),
                        "formulations disagree for {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn exponents_stay_in_range() {
        for k in 1..=4 {
            for level in 1..=6 {
                for parts in compositions(k, level) {
                    let c = Profile::new(parts).unwrap();
                    let ms = c.borodin_exponents();
                    assert_eq!(ms.modulus(), c.modulus());
                    // range is enforced by ExponentMultiset::insert; also
                    // sanity-check the eta ladder for k = 3: present for
                    // every level not divisible by 3, absent when all three
                    // parts are equal.
                    if k == 3 {
                        let mut copy = ms.clone();
                        let has_ladder = copy.remove_full_ladder();
                        if level % 3 != 0 {
                            assert!(has_ladder, "no full ladder for {c}");
                        }
                        if c.parts().iter().all(|&p| p == c.parts()[0]) {
                            assert!(!has_ladder, "unexpected ladder for {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn profile_bounds_rejected() {
        assert!(Profile::new(vec![]).is_err());
        assert!(Profile::new(vec![0, 0]).is_err());
        assert!(Profile::new(vec![1; 9]).is_err());
        assert!(Profile::new(vec![65]).is_err());
        assert!("3,1,1".parse::<Profile>().is_ok());
        assert!("3,x".parse::<Profile>().is_err());
    }
}
