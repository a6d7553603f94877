//! Combinatorial enumerators: ordered partitions, set partitions and
//! permutations.
//!
//! All indices are zero-based. Every enumerator yields its items in a fixed
//! order, documented on each function, so that downstream expansions are
//! reproducible.

use std::fmt;

use itertools::Itertools;

use super::KernelError;

/// A tuple of pairwise disjoint, possibly empty, sorted blocks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Writes a block of zero-based indices one-based, e.g. `{1,3}`.
fn write_block(f: &mut fmt::Formatter<'_>, block: &[usize]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, b) in block.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", b + 1)?;
    }
    write!(f, "}}")
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write_block(f, b)?;
        }
        write!(f, ")")
    }
}

/// All ways to distribute `ground` over `k` labelled, possibly empty blocks.
///
/// Order: lexicographic in the assignment vector that records, for each
/// ground element in the given order, the index of its block.
pub fn ordered_partitions_with_empty(ground: &[usize], k: usize) -> Vec<OrderedPartition> {
    assert!(k >= 1, "at least one block is required");
    let n = ground.len();
    let mut out = Vec::with_capacity(k.pow(n as u32));
    let mut assign = vec![0usize; n];
    loop {
        let mut blocks = vec![Vec::new(); k];
        for (g, &b) in ground.iter().zip(&assign) {
            blocks[b].push(*g);
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        out.push(OrderedPartition { blocks });

        // odometer increment, most significant digit first
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            assign[pos] += 1;
            if assign[pos] < k {
                break;
            }
            assign[pos] = 0;
        }
    }
}

/// One summation index of the cancellation-free antipode formula: blocks
/// `B_1..B_k` of the complement of `tail`, and `tail = b_1 > ... > b_k`,
/// where block `B_j` is paired with `b_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntipodePartition {
    pub blocks: Vec<Vec<usize>>,
    pub tail: Vec<usize>,
}

impl AntipodePartition {
    /// Iterates over the `(B_j, b_j)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (&[usize], usize)> {
        self.blocks
            .iter()
            .map(Vec::as_slice)
            .zip(self.tail.iter().copied())
    }
}

impl fmt::Display for AntipodePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for b in &self.blocks {
            write_block(f, b)?;
            write!(f, ", ")?;
        }
        write!(f, "{{")?;
        for (i, b) in self.tail.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", b + 1)?;
        }
        write!(f, "}})")
    }
}

/// Summation range of the cancellation-free antipode of a word of length `m`.
///
/// Order: by `k = |tail|` increasing, then by the tail set (as an increasing
/// combination, lexicographically), then by the block assignment as in
/// [`ordered_partitions_with_empty`].
pub fn antipode_partitions(m: usize) -> Result<Vec<AntipodePartition>, KernelError> {
    if m == 0 {
        return Err(KernelError::EmptyWord);
    }
    let mut out = Vec::new();
    for k in 1..=m {
        for tail_set in (0..m).combinations(k) {
            let rest: Vec<usize> = (0..m).filter(|i| !tail_set.contains(i)).collect();
            let tail: Vec<usize> = tail_set.iter().rev().copied().collect();
            for p in ordered_partitions_with_empty(&rest, k) {
                out.push(AntipodePartition {
                    blocks: p.blocks,
                    tail: tail.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// A set partition into nonempty sorted blocks.
pub type SetPartition = Vec<Vec<usize>>;

/// Set partitions of `{0..n}` with blocks listed by increasing maximum.
///
/// Order: lexicographic in the restricted growth string of the partition.
pub fn max_ordered_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut [usize], out: &mut Vec<SetPartition>) {
        let n = rgs.len();
        if i == n {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e);
            }
            blocks.sort_by_key(|b| *b.last().expect("blocks are nonempty"));
            out.push(blocks);
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    rgs[0] = 0;
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Permutations of `{0..m}` in one-line notation, lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    (0..m).permutations(m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn bell(n: usize) -> usize {
        // Bell triangle
        let mut row = vec![1usize];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn with_empty_single_element() {
        let ps = ordered_partitions_with_empty(&[0], 2);
        assert_eq!(
            ps,
            vec![
                OrderedPartition {
                    blocks: vec![vec![0], vec![]]
                },
                OrderedPartition {
                    blocks: vec![vec![], vec![0]]
                },
            ]
        );
    }

    #[test]
    fn with_empty_empty_ground() {
        let ps = ordered_partitions_with_empty(&[], 3);
        assert_eq!(ps.len(), 1);
        assert!(ps[0].blocks.iter().all(Vec::is_empty));
        assert_eq!(ps[0].len(), 3);
    }

    #[test]
    fn with_empty_counts_placements() {
        let ps = ordered_partitions_with_empty(&[0, 1, 2], 2);
        assert_eq!(ps.len(), 8);
        for p in &ps {
            let mut all: Vec<usize> = p.blocks.concat();
            all.sort();
            assert_eq!(all, vec![0, 1, 2]);
        }
        let distinct: std::collections::BTreeSet<_> = ps.iter().collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn antipode_partitions_small() {
        assert!(antipode_partitions(0).is_err());
        let one = antipode_partitions(1).unwrap();
        assert_eq!(
            one,
            vec![AntipodePartition {
                blocks: vec![vec![]],
                tail: vec![0]
            }]
        );
        // (∅,{2,1}), ({1},{2}), ({2},{1})
        assert_eq!(antipode_partitions(2).unwrap().len(), 3);
        assert_eq!(antipode_partitions(3).unwrap().len(), 10);
    }

    #[test]
    fn antipode_partition_counts_match_closed_form() {
        for m in 1..=8u64 {
            let expected: u64 = (1..=m).map(|k| binom(m, k) * k.pow((m - k) as u32)).sum();
            let ps = antipode_partitions(m as usize).unwrap();
            assert_eq!(ps.len() as u64, expected, "m = {m}");
            for p in &ps {
                assert!(p.tail.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(p.blocks.len(), p.tail.len());
                let mut all: Vec<usize> = p.blocks.concat();
                all.extend(&p.tail);
                all.sort();
                assert_eq!(all, (0..m as usize).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn max_ordered_counts_are_bell_numbers() {
        assert_eq!(max_ordered_set_partitions(1), vec![vec![vec![0]]]);
        assert_eq!(max_ordered_set_partitions(3).len(), 5);
        assert_eq!(max_ordered_set_partitions(4).len(), 15);
        for n in 1..=8 {
            let ps = max_ordered_set_partitions(n);
            assert_eq!(ps.len(), bell(n), "n = {n}");
            for p in &ps {
                let maxima: Vec<usize> = p.iter().map(|b| *b.last().unwrap()).collect();
                assert!(maxima.windows(2).all(|w| w[0] < w[1]));
                assert!(p.iter().all(|b| b.windows(2).all(|w| w[0] < w[1])));
            }
        }
    }

    #[test]
    fn permutation_orders() {
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(permutations(2), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(5).len(), 120);
    }

    #[test]
    fn display_is_one_based() {
        let p = &antipode_partitions(3).unwrap()[9];
        assert_eq!(p.to_string(), "({}, {}, {}, {3,2,1})");
    }
}
