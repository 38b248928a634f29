//! Isomorph-free enumeration of finite posets, and the census of
//! distributive lattices built from it.
//!
//! Every poset on n+1 elements arises from one on n elements by re-adding a
//! deleted maximal element, so the generator extends each n-element class by
//! a new maximal element whose lower-cover set ranges over the antichains,
//! deduplicating per level by canonical form.
//!
//! Deleting a maximal element never increases the number of order ideals
//! (each ideal of the smaller poset is still an ideal of the larger one),
//! so when a target ideal count is given, classes that already exceed it
//! can be pruned without losing any lattice from the census.

use std::collections::HashSet;

use crate::canon::CanonicalForm;
use crate::poset::{Poset, PosetError};

/// All isomorphism classes of posets on `n` elements, optionally pruned to
/// classes with at most `max_ideals` order ideals. Without a bound the
/// level sizes grow fast; `n` is capped at 10 (16999 classes at n = 8),
/// or 11 when a bound keeps the levels small.
pub fn enumerate_posets(n: usize, max_ideals: Option<usize>) -> Result<Vec<Poset>, PosetError> {
    let hard_cap = if max_ideals.is_some() { 11 } else { 10 };
    if n > hard_cap {
        return Err(PosetError::TooLarge(n, hard_cap));
    }
    let mut level =
        vec![Poset::from_covers(0, vec![], None, "P0").expect("empty poset is valid")];
    if matches!(max_ideals, Some(0)) {
        return Ok(Vec::new());
    }
    for size in 1..=n {
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut next: Vec<Poset> = Vec::new();
        for p in &level {
            let s = p.size();
            'subsets: for mask in 0u32..(1 << s) {
                // the lower covers of the new maximal element must form an
                // antichain, or some of them would become redundant
                for a in 0..s {
                    if mask >> a & 1 == 0 {
                        continue;
                    }
                    for b in a + 1..s {
                        if mask >> b & 1 == 1 && (p.leq(a, b) || p.leq(b, a)) {
                            continue 'subsets;
                        }
                    }
                }
                let mut covers = p.covers().to_vec();
                for a in 0..s {
                    if mask >> a & 1 == 1 {
                        covers.push((a, s));
                    }
                }
                let q = Poset::from_covers(s + 1, covers, None, format!("P{size}"))
                    .expect("extension by a maximal element stays valid");
                if let Some(cap) = max_ideals {
                    if q.count_ideals_capped(cap).is_none() {
                        continue;
                    }
                }
                if seen.insert(CanonicalForm::of(&q)) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// One distributive lattice in a census: the lattice itself, its canonical
/// form, and its poset of join-irreducibles.
pub struct CensusEntry {
    pub lattice: Poset,
    pub canonical: CanonicalForm,
    pub irreducibles: Poset,
}

/// All distributive lattices with exactly `m` elements, up to isomorphism,
/// sorted by canonical form.
///
/// The route is through the irreducibles: a distributive lattice is the
/// ideal lattice of its join-irreducibles, and non-isomorphic posets give
/// non-isomorphic ideal lattices, so enumerating poset classes whose ideal
/// count is exactly `m` enumerates the census exactly once.
pub fn census_distributive_lattices(m: usize) -> Result<Vec<CensusEntry>, PosetError> {
    if m == 0 || m > 12 {
        return Err(PosetError::TooLarge(m, 12));
    }
    let mut entries: Vec<CensusEntry> = Vec::new();
    for j in 0..m {
        for p in enumerate_posets(j, Some(m))? {
            if p.count_ideals_capped(m) != Some(m) {
                continue;
            }
            let lattice = p.order_ideals()?;
            assert!(
                lattice.distributivity_check().is_distributive_lattice(),
                "ideal lattices are distributive"
            );
            let canonical = CanonicalForm::of(&lattice);
            entries.push(CensusEntry {
                lattice,
                canonical,
                irreducibles: p,
            });
        }
    }
    entries.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    for w in entries.windows(2) {
        assert!(
            w[0].canonical != w[1].canonical,
            "distinct irreducible posets give distinct lattices"
        );
    }
    let entries = entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let CensusEntry {
                lattice,
                canonical,
                irreducibles,
            } = e;
            CensusEntry {
                lattice: lattice.rename(format!("L{}_{}", m, i + 1)),
                canonical,
                irreducibles,
            }
        })
        .collect();
    Ok(entries)
}
