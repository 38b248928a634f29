//! Canonical forms for posets.
//!
//! The form is a complete isomorphism invariant: relabel the elements along
//! a linear extension, read the strictly-lower-triangular cover matrix
//! column by column (column `j` holds the bits "position `i` is covered by
//! position `j`" for `i < j`, row 0 most significant), and take the
//! lexicographically smallest encoding over all linear extensions. The
//! encoding determines the Hasse diagram up to relabeling, so two posets
//! compare equal exactly when they are isomorphic.
//!
//! The minimization is a depth-first search that places one element per
//! step. Only candidates whose new column is minimal can extend a minimal
//! encoding, so ties are the only branch points; candidates that differ by
//! a transposition automorphism lead to identical subtrees and are pruned.

use crate::poset::Poset;

/// Lex-minimal column encoding; ordered, hashable, and stable across runs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    size: usize,
    /// columns 1..size-1 of the minimal cover matrix
    columns: Vec<u32>,
}

struct Search {
    n: usize,
    /// up_cover[u] = bitmask of v with u covered-by v (u below)
    up_cover: Vec<u64>,
    /// down_cover[v] = bitmask of u with u covered-by v
    down_cover: Vec<u64>,
    best: Option<Vec<u32>>,
}

impl Search {
    fn transposition_automorphism(&self, u: usize, v: usize) -> bool {
        let (bu, bv) = (1u64 << u, 1u64 << v);
        // swapping u and v must fix the cover relation
        if (self.up_cover[u] & bv != 0) != (self.up_cover[v] & bu != 0) {
            return false;
        }
        self.up_cover[u] & !bv == self.up_cover[v] & !bu
            && self.down_cover[u] & !bv == self.down_cover[v] & !bu
    }

    fn dfs(&mut self, placed: &mut Vec<usize>, placed_mask: u64, cols: &mut Vec<u32>) {
        let j = placed.len();
        if j == self.n {
            if self.best.as_ref().is_none_or(|b| cols.as_slice() < b.as_slice()) {
                self.best = Some(cols.clone());
            }
            return;
        }
        // candidates: unplaced elements whose lower covers are all placed
        let mut cands: Vec<(u32, usize)> = Vec::new();
        for u in 0..self.n {
            if placed_mask & (1 << u) != 0 || self.down_cover[u] & !placed_mask != 0 {
                continue;
            }
            let mut col = 0u32;
            for (i, &p) in placed.iter().enumerate() {
                if self.down_cover[u] & (1 << p) != 0 {
                    col |= 1 << (j - 1 - i);
                }
            }
            cands.push((col, u));
        }
        let min_col = cands.iter().map(|&(c, _)| c).min().expect("acyclic");
        cands.retain(|&(c, _)| c == min_col);

        // a branch whose prefix is already lex-greater than the best full
        // encoding cannot contain the minimum
        if j >= 1 {
            cols.push(min_col);
            if let Some(best) = &self.best {
                if cols.as_slice() > &best[..cols.len()] {
                    cols.pop();
                    return;
                }
            }
        }

        let mut kept: Vec<usize> = Vec::new();
        'next: for &(_, u) in &cands {
            for &v in &kept {
                if self.transposition_automorphism(u, v) {
                    continue 'next;
                }
            }
            kept.push(u);
        }
        for u in kept {
            placed.push(u);
            self.dfs(placed, placed_mask | (1 << u), cols);
            placed.pop();
        }
        if j >= 1 {
            cols.pop();
        }
    }
}

impl CanonicalForm {
    pub fn of(p: &Poset) -> CanonicalForm {
        let n = p.size();
        assert!(n <= 64, "canonical form supports at most 64 elements");
        if n == 0 {
            return CanonicalForm {
                size: 0,
                columns: Vec::new(),
            };
        }
        let mut up_cover = vec![0u64; n];
        let mut down_cover = vec![0u64; n];
        for &(a, b) in p.covers() {
            up_cover[a] |= 1 << b;
            down_cover[b] |= 1 << a;
        }
        let mut search = Search {
            n,
            up_cover,
            down_cover,
            best: None,
        };
        let mut placed = Vec::with_capacity(n);
        let mut cols = Vec::with_capacity(n.saturating_sub(1));
        search.dfs(&mut placed, 0, &mut cols);
        CanonicalForm {
            size: n,
            columns: search.best.expect("every poset has a linear extension"),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Compact rendering: element count, then the concatenated column bits
    /// packed into bytes (most significant bit first) as lowercase hex.
    pub fn hex(&self) -> String {
        let mut bits: Vec<bool> = Vec::new();
        for (idx, &col) in self.columns.iter().enumerate() {
            let width = idx + 1;
            for k in (0..width).rev() {
                bits.push(col & (1 << k) != 0);
            }
        }
        let mut bytes = vec![0u8; bits.len().div_ceil(8)];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                bytes[i / 8] |= 1 << (7 - i % 8);
            }
        }
        let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
        if hex.is_empty() {
            format!("{}:", self.size)
        } else {
            format!("{}:{}", self.size, hex)
        }
    }
}
