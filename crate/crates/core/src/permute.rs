//! Explicit permutations over channel index space, with inversion and fast
//! powers via cycle decomposition.
//!
//! The cipher's spatial shuffle is the bijection obtained by transposing a
//! `rows × cols` matrix and reshaping the transpose back to `rows × cols`
//! in column-major order. The reshape order is load-bearing: reading and
//! refilling column-major (as MATLAB and Fortran do) yields the closed form
//! implemented here, while a row-major reshape would undo the transpose and
//! leave every channel untouched. Implementations disagreeing on this point
//! do not interoperate.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::image::Channel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermutationError {
    /// The map is not a bijection on `0..len` (entry out of range or repeated).
    NotABijection { index: usize },
    /// The permutation does not cover the element count it was applied to.
    SizeMismatch { permutation: usize, elements: usize },
}

impl fmt::Display for PermutationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutationError::NotABijection { index } => {
                write!(f, "map entry at index {index} breaks the bijection")
            }
            PermutationError::SizeMismatch {
                permutation,
                elements,
            } => write!(
                f,
                "permutation of size {permutation} applied to {elements} elements"
            ),
        }
    }
}

impl core::error::Error for PermutationError {}

/// A bijection on `0..size` with its disjoint-cycle decomposition.
///
/// `map[k]` is the destination index of source index `k`. Cycles are
/// oriented so that `cycle[t+1] = map[cycle[t]]`, start at their smallest
/// member, and cover every index, fixed points included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    size: usize,
    map: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self::from_valid_map((0..size).collect())
    }

    /// Validates `map` as a bijection and decomposes it into cycles.
    pub fn from_map(map: Vec<usize>) -> Result<Self, PermutationError> {
        let mut seen = vec![false; map.len()];
        for (index, &dest) in map.iter().enumerate() {
            if dest >= map.len() || seen[dest] {
                return Err(PermutationError::NotABijection { index });
            }
            seen[dest] = true;
        }
        Ok(Self::from_valid_map(map))
    }

    /// The transpose-then-column-major-reshape shuffle for a `rows × cols`
    /// channel: index `k` moves to `(k mod rows)·cols + floor(k/rows)`.
    ///
    /// Degenerate shapes (`rows == 1` or `cols == 1`) produce the identity.
    pub fn transpose_reshape(rows: usize, cols: usize) -> Self {
        let size = rows * cols;
        let mut map = Vec::with_capacity(size);
        for k in 0..size {
            map.push((k % rows) * cols + k / rows);
        }
        Self::from_valid_map(map)
    }

    fn from_valid_map(map: Vec<usize>) -> Self {
        let cycles = cycles_of(&map);
        Self {
            size: map.len(),
            map,
            cycles,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, &dest)| k == dest)
    }

    /// Moves every sample of `ch` to its destination index.
    pub fn apply(&self, ch: &Channel) -> Result<Channel, PermutationError> {
        let src = ch.samples();
        if src.len() != self.size {
            return Err(PermutationError::SizeMismatch {
                permutation: self.size,
                elements: src.len(),
            });
        }
        let mut out = vec![0u8; src.len()];
        for (k, &dest) in self.map.iter().enumerate() {
            out[dest] = src[k];
        }
        Ok(Channel::new(ch.rows(), ch.cols(), out).expect("output shaped like input"))
    }

    /// The inverse bijection: `inverted().map()[map[k]] == k`.
    pub fn inverted(&self) -> Self {
        let mut inv = vec![0usize; self.size];
        for (k, &dest) in self.map.iter().enumerate() {
            inv[dest] = k;
        }
        Self::from_valid_map(inv)
    }

    /// The `k`-th power, equal to `k`-fold self-composition but computed in
    /// O(size): each index advances `k mod cycle_len` positions along its
    /// cycle.
    pub fn pow(&self, k: u64) -> Self {
        let mut map = vec![0usize; self.size];
        for cycle in &self.cycles {
            let step = (k % cycle.len() as u64) as usize;
            for (t, &src) in cycle.iter().enumerate() {
                map[src] = cycle[(t + step) % cycle.len()];
            }
        }
        Self::from_valid_map(map)
    }

    /// `self` followed by `then`: the result maps `k` to `then.map[self.map[k]]`.
    pub fn compose(&self, then: &Self) -> Result<Self, PermutationError> {
        if self.size != then.size {
            return Err(PermutationError::SizeMismatch {
                permutation: self.size,
                elements: then.size,
            });
        }
        let map = self.map.iter().map(|&mid| then.map[mid]).collect();
        Ok(Self::from_valid_map(map))
    }
}

/// Literal `k`-fold self-composition. Reference implementation for
/// [`Permutation::pow`], kept as the ground truth the fast path is verified
/// against.
pub fn naive_iterate(perm: &Permutation, k: u64) -> Permutation {
    let mut acc = Permutation::identity(perm.size());
    for _ in 0..k {
        acc = acc.compose(perm).expect("sizes match by construction");
    }
    acc
}

fn cycles_of(map: &[usize]) -> Vec<Vec<usize>> {
    let mut visited = vec![false; map.len()];
    let mut cycles = Vec::new();
    for start in 0..map.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut cycle = vec![start];
        let mut next = map[start];
        while next != start {
            visited[next] = true;
            cycle.push(next);
            next = map[next];
        }
        cycles.push(cycle);
    }
    cycles
}
