//! Finite posets: cover-list representation with a precomputed order
//! relation, the text format used by the CLI, order-ideal lattices, the
//! distributivity check, and the named families used throughout the tests.

use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("duplicate cover {0:?} < {1:?}")]
    DuplicateCover(String, String),
    #[error("cover {0:?} < {1:?} is implied by transitivity; input must be a Hasse diagram")]
    RedundantCover(String, String),
    #[error("cycle detected through element {0:?}")]
    Cycle(String),
    #[error("poset has {0} elements, operation supports at most {1}")]
    TooLarge(usize, usize),
    #[error("cover endpoint {0} out of range")]
    OutOfRange(usize),
    #[error("unsupported parameter {0} for family {1}")]
    BadParameter(usize, String),
}

/// A finite poset. `covers` is the irredundant Hasse diagram; `leq` stores
/// the reflexive-transitive closure row-major (`leq[x * size + y]` means
/// `x <= y`).
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    leq: Vec<bool>,
    name: String,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}, {} elements, {} covers)", self.name, self.size, self.covers.len())
    }
}

impl Poset {
    /// Builds a poset from an explicit Hasse diagram and validates it:
    /// in-range endpoints, no duplicate or transitively implied covers, no
    /// cycles.
    pub fn from_covers(
        size: usize,
        mut covers: Vec<(usize, usize)>,
        names: Option<Vec<String>>,
        name: impl Into<String>,
    ) -> Result<Poset, PosetError> {
        let names =
            names.unwrap_or_else(|| (0..size).map(|i| format!("p{}", i + 1)).collect());
        assert_eq!(names.len(), size, "one name per element");
        covers.sort();
        for w in covers.windows(2) {
            if w[0] == w[1] {
                return Err(PosetError::DuplicateCover(
                    names[w[0].0].clone(),
                    names[w[0].1].clone(),
                ));
            }
        }
        for &(a, b) in &covers {
            if a >= size {
                return Err(PosetError::OutOfRange(a));
            }
            if b >= size {
                return Err(PosetError::OutOfRange(b));
            }
            if a == b {
                return Err(PosetError::Cycle(names[a].clone()));
            }
        }
        // topological order; failure pinpoints a vertex on a cycle
        let mut indeg = vec![0usize; size];
        for &(_, b) in &covers {
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..size).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(size);
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &(a, b) in &covers {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        if topo.len() != size {
            let culprit = (0..size).find(|v| indeg[*v] > 0).unwrap();
            return Err(PosetError::Cycle(names[culprit].clone()));
        }
        // closure: up-sets accumulated in reverse topological order
        let mut leq = vec![false; size * size];
        for &v in topo.iter().rev() {
            leq[v * size + v] = true;
            for &(a, b) in &covers {
                if a == v {
                    for y in 0..size {
                        if leq[b * size + y] {
                            leq[v * size + y] = true;
                        }
                    }
                }
            }
        }
        // irredundancy: a cover (a, b) reachable through another cover of a
        for &(a, b) in &covers {
            for &(a2, z) in &covers {
                if a2 == a && z != b && leq[z * size + b] {
                    return Err(PosetError::RedundantCover(
                        names[a].clone(),
                        names[b].clone(),
                    ));
                }
            }
        }
        Ok(Poset {
            size,
            names,
            covers,
            leq,
            name: name.into(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Poset {
        self.name = name.into();
        self
    }

    /// Number of lower covers of `x`.
    pub fn lower_cover_count(&self, x: usize) -> usize {
        self.covers.iter().filter(|&&(_, b)| b == x).count()
    }

    /// All order ideals (down-closed subsets) as bitmasks, sorted by
    /// (popcount, numeric value). Requires at most 20 elements.
    pub fn order_ideal_masks(&self) -> Result<Vec<u32>, PosetError> {
        if self.size > 20 {
            return Err(PosetError::TooLarge(self.size, 20));
        }
        let topo = self.topological_order();
        // strict down-set of each element as a mask
        let down: Vec<u32> = (0..self.size)
            .map(|x| {
                let mut m = 0u32;
                for y in 0..self.size {
                    if y != x && self.leq(y, x) {
                        m |= 1 << y;
                    }
                }
                m
            })
            .collect();
        let mut ideals: Vec<u32> = vec![0];
        for &e in &topo {
            let bit = 1u32 << e;
            let need = down[e];
            let mut extended: Vec<u32> = ideals
                .iter()
                .filter(|&&m| m & need == need)
                .map(|&m| m | bit)
                .collect();
            ideals.append(&mut extended);
        }
        ideals.sort_by_key(|&m| (m.count_ones(), m));
        Ok(ideals)
    }

    /// Number of order ideals, abandoning the count once it exceeds `cap`.
    pub fn count_ideals_capped(&self, cap: usize) -> Option<usize> {
        let topo = self.topological_order();
        let down: Vec<u64> = (0..self.size)
            .map(|x| {
                let mut m = 0u64;
                for y in 0..self.size {
                    if y != x && self.leq(y, x) {
                        m |= 1 << y;
                    }
                }
                m
            })
            .collect();
        let mut ideals: Vec<u64> = vec![0];
        for &e in &topo {
            let bit = 1u64 << e;
            let mut extended: Vec<u64> = ideals
                .iter()
                .filter(|&&m| m & down[e] == down[e])
                .map(|&m| m | bit)
                .collect();
            ideals.append(&mut extended);
            if ideals.len() > cap {
                return None;
            }
        }
        Some(ideals.len())
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        // sort by down-set size; ties by index — a valid linear extension
        order.sort_by_key(|&x| {
            (
                (0..self.size).filter(|&y| self.leq(y, x)).count(),
                x,
            )
        });
        order
    }

    /// The lattice of order ideals J(P), ordered by inclusion. Element names
    /// spell out the ideal, e.g. `{a,b}`.
    pub fn order_ideals(&self) -> Result<Poset, PosetError> {
        let masks = self.order_ideal_masks()?;
        let index_of: HashMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let names: Vec<String> = masks
            .iter()
            .map(|&m| {
                let members: Vec<&str> = (0..self.size)
                    .filter(|&x| m >> x & 1 == 1)
                    .map(|x| self.element_name(x))
                    .collect();
                format!("{{{}}}", members.join(","))
            })
            .collect();
        // in a lattice of ideals, covers add exactly one element
        let mut covers = Vec::new();
        for (i, &m) in masks.iter().enumerate() {
            for x in 0..self.size {
                if m >> x & 1 == 0 {
                    let bigger = m | 1 << x;
                    if let Some(&j) = index_of.get(&bigger) {
                        covers.push((i, j));
                    }
                }
            }
        }
        let n = masks.len();
        let mut leq = vec![false; n * n];
        for (i, &mi) in masks.iter().enumerate() {
            for (j, &mj) in masks.iter().enumerate() {
                leq[i * n + j] = mi & mj == mi;
            }
        }
        covers.sort();
        Ok(Poset {
            size: n,
            names,
            covers,
            leq,
            name: format!("J({})", self.name),
        })
    }

    /// Induced subposet on `elems` (indices into `self`), with fresh covers
    /// computed by transitive reduction.
    pub fn induced_subposet(&self, elems: &[usize], name: impl Into<String>) -> Poset {
        let k = elems.len();
        let mut leq = vec![false; k * k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                leq[i * k + j] = self.leq(x, y);
            }
        }
        let mut covers = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j && leq[i * k + j] {
                    let between = (0..k)
                        .any(|z| z != i && z != j && leq[i * k + z] && leq[z * k + j]);
                    if !between {
                        covers.push((i, j));
                    }
                }
            }
        }
        covers.sort();
        Poset {
            size: k,
            names: elems.iter().map(|&x| self.names[x].clone()).collect(),
            covers,
            leq,
            name: name.into(),
        }
    }

    /// Join-irreducible elements (exactly one lower cover) as an induced
    /// subposet. For a distributive lattice L this is the Birkhoff partner:
    /// `L = J(irreducibles(L))`.
    pub fn join_irreducibles(&self) -> Poset {
        let elems: Vec<usize> = (0..self.size)
            .filter(|&x| self.lower_cover_count(x) == 1)
            .collect();
        self.induced_subposet(&elems, format!("Irr({})", self.name))
    }

    /// Lattice and distributivity check, reporting a witness on failure.
    pub fn distributivity_check(&self) -> LatticeCheck {
        if self.size == 0 {
            return LatticeCheck::NotLattice {
                x: 0,
                y: 0,
                op: LatticeOp::Meet,
            };
        }
        let n = self.size;
        let mut meet = vec![usize::MAX; n * n];
        let mut join = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                match self.bound(x, y, true) {
                    Some(m) => meet[x * n + y] = m,
                    None => {
                        return LatticeCheck::NotLattice {
                            x,
                            y,
                            op: LatticeOp::Meet,
                        }
                    }
                }
                match self.bound(x, y, false) {
                    Some(j) => join[x * n + y] = j,
                    None => {
                        return LatticeCheck::NotLattice {
                            x,
                            y,
                            op: LatticeOp::Join,
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = meet[x * n + join[y * n + z]];
                    let rhs = join[meet[x * n + y] * n + meet[x * n + z]];
                    if lhs != rhs {
                        return LatticeCheck::NotDistributive { x, y, z };
                    }
                }
            }
        }
        LatticeCheck::DistributiveLattice
    }

    /// Greatest lower bound (`lower = true`) or least upper bound of a pair,
    /// when it exists.
    fn bound(&self, x: usize, y: usize, lower: bool) -> Option<usize> {
        let cmp = |a: usize, b: usize| if lower { self.leq(a, b) } else { self.leq(b, a) };
        let candidates: Vec<usize> = (0..self.size)
            .filter(|&z| cmp(z, x) && cmp(z, y))
            .collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&z| cmp(z, m)))
    }

    // ---- named families ----

    pub fn named_chain(n: usize) -> Poset {
        let covers = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Poset::from_covers(n, covers, None, format!("chain({n})")).unwrap()
    }

    pub fn named_antichain(n: usize) -> Poset {
        Poset::from_covers(n, vec![], None, format!("antichain({n})")).unwrap()
    }

    /// Boolean lattice on `n` atoms as a poset of subsets (2^n elements).
    pub fn named_boolean(n: usize) -> Poset {
        assert!(n <= 10, "boolean family capped at 1024 elements");
        let size = 1usize << n;
        let mut covers = Vec::new();
        for m in 0..size {
            for b in 0..n {
                if m >> b & 1 == 0 {
                    covers.push((m, m | 1 << b));
                }
            }
        }
        let names = (0..size)
            .map(|m| {
                let members: Vec<String> =
                    (0..n).filter(|&b| m >> b & 1 == 1).map(|b| format!("{}", b + 1)).collect();
                format!("{{{}}}", members.join(","))
            })
            .collect();
        Poset::from_covers(size, covers, Some(names), format!("boolean({n})")).unwrap()
    }

    /// Tamari lattice on bracketings of `n + 1` letters, ordered by the
    /// right-rotation `((AB)C) -> (A(BC))` going upwards. `n <= 6`.
    pub fn named_tamari(n: usize) -> Result<Poset, PosetError> {
        if n == 0 || n > 6 {
            return Err(PosetError::BadParameter(n, "tamari".into()));
        }
        let trees = binary_trees(n + 1);
        let index_of: HashMap<String, usize> = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (render_tree(t), i))
            .collect();
        let mut covers = Vec::new();
        for (i, t) in trees.iter().enumerate() {
            for rotated in single_rotations(t) {
                let j = index_of[&render_tree(&rotated)];
                covers.push((i, j));
            }
        }
        covers.sort();
        covers.dedup();
        let names: Vec<String> = trees.iter().map(render_tree).collect();
        Poset::from_covers(trees.len(), covers, Some(names), format!("tamari({n})"))
    }

    /// The 20-element lattice of order ideals of the Boolean poset on three
    /// atoms — the free distributive lattice shape on three generators with
    /// bounds adjoined.
    pub fn named_fdl3() -> Poset {
        Poset::named_boolean(3)
            .order_ideals()
            .expect("boolean(3) is small")
            .rename("fdl3")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// Outcome of [`Poset::distributivity_check`], with witnesses for failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeCheck {
    DistributiveLattice,
    NotLattice { x: usize, y: usize, op: LatticeOp },
    NotDistributive { x: usize, y: usize, z: usize },
}

impl LatticeCheck {
    pub fn is_distributive_lattice(&self) -> bool {
        matches!(self, LatticeCheck::DistributiveLattice)
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

fn binary_trees(leaves: usize) -> Vec<Tree> {
    if leaves == 1 {
        return vec![Tree::Leaf];
    }
    let mut out = Vec::new();
    for split in 1..leaves {
        for l in binary_trees(split) {
            for r in binary_trees(leaves - split) {
                out.push(Tree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

fn render_tree(t: &Tree) -> String {
    match t {
        Tree::Leaf => "x".into(),
        Tree::Node(l, r) => format!("({}{})", render_tree(l), render_tree(r)),
    }
}

/// All trees reachable by one rotation `((AB)C) -> (A(BC))` somewhere.
fn single_rotations(t: &Tree) -> Vec<Tree> {
    let mut out = Vec::new();
    if let Tree::Node(l, r) = t {
        if let Tree::Node(a, b) = l.as_ref() {
            out.push(Tree::Node(
                a.clone(),
                Box::new(Tree::Node(b.clone(), r.clone())),
            ));
        }
        for lr in single_rotations(l) {
            out.push(Tree::Node(Box::new(lr), r.clone()));
        }
        for rr in single_rotations(r) {
            out.push(Tree::Node(l.clone(), Box::new(rr)));
        }
    }
    out
}

/// Parses the poset text format.
///
/// Lines are either `elem <name>` declarations or `<a> < <b>` cover
/// relations; `#` starts a comment and blank lines are skipped. When at
/// least one `elem` declaration is present the file is strict: every name in
/// a cover must be declared. Without declarations, names register in order
/// of first appearance. The cover list must be an irredundant Hasse diagram.
pub fn parse_poset(input: &str) -> Result<Poset, PosetError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut raw_covers: Vec<(String, String)> = Vec::new();
    let mut has_declarations = false;

    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["elem", name] => {
                has_declarations = true;
                if index.contains_key(*name) {
                    return Err(PosetError::DuplicateElement((*name).into()));
                }
                index.insert((*name).into(), names.len());
                names.push((*name).into());
            }
            [a, "<", b] => {
                raw_covers.push(((*a).into(), (*b).into()));
            }
            _ => {
                return Err(PosetError::Syntax {
                    line: lineno + 1,
                    msg: format!("expected `elem <name>` or `<a> < <b>`, got {line:?}"),
                });
            }
        }
    }

    let mut covers = Vec::new();
    for (a, b) in raw_covers {
        let mut resolve = |n: &String| -> Result<usize, PosetError> {
            if let Some(&i) = index.get(n) {
                return Ok(i);
            }
            if has_declarations {
                return Err(PosetError::UnknownElement(n.clone()));
            }
            index.insert(n.clone(), names.len());
            names.push(n.clone());
            Ok(names.len() - 1)
        };
        let ia = resolve(&a)?;
        let ib = resolve(&b)?;
        covers.push((ia, ib));
    }
    let n = names.len();
    Poset::from_covers(n, covers, Some(names), format!("poset({n} elements)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_chain() {
        let p = parse_poset("a < b").unwrap();
        assert_eq!(p.size(), 2);
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
        assert_eq!(p.covers(), &[(0, 1)]);
    }

    #[test]
    fn parse_declared_antichain() {
        let p = parse_poset("elem a\nelem b\nelem c\n").unwrap();
        assert_eq!(p.size(), 3);
        assert_eq!(p.covers(), &[]);
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let p = parse_poset("# diamond\n\na < b # left\na < c\nb < d\nc < d\n").unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.leq(0, 3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poset("a < b\nb < a"),
            Err(PosetError::Cycle(_))
        ));
        assert!(matches!(
            parse_poset("elem a\na < b"),
            Err(PosetError::UnknownElement(_))
        ));
        assert!(matches!(
            parse_poset("a < b\na < b"),
            Err(PosetError::DuplicateCover(_, _))
        ));
        assert!(matches!(
            parse_poset("a < b\nb < c\na < c"),
            Err(PosetError::RedundantCover(_, _))
        ));
        assert!(matches!(
            parse_poset("a << b"),
            Err(PosetError::Syntax { .. })
        ));
    }

    #[test]
    fn boolean_cube_ideals() {
        let b3 = Poset::named_boolean(3);
        assert_eq!(b3.size(), 8);
        let ideals = b3.order_ideal_masks().unwrap();
        assert_eq!(ideals.len(), 20);
        let fdl3 = Poset::named_fdl3();
        assert_eq!(fdl3.size(), 20);
        assert!(fdl3.distributivity_check().is_distributive_lattice());
    }

    #[test]
    fn boolean_two_is_the_grid() {
        let b2 = Poset::named_boolean(2);
        assert_eq!(b2.size(), 4);
        assert_eq!(b2.covers().len(), 4);
        assert!(b2.distributivity_check().is_distributive_lattice());
    }

    #[test]
    fn chains_and_antichains() {
        let c = Poset::named_chain(5);
        assert_eq!(c.order_ideal_masks().unwrap().len(), 6);
        assert!(c.distributivity_check().is_distributive_lattice());
        let a = Poset::named_antichain(3);
        assert_eq!(a.order_ideal_masks().unwrap().len(), 8);
        assert!(!a.distributivity_check().is_distributive_lattice());
    }

    #[test]
    fn tamari_three_is_the_pentagon() {
        let t = Poset::named_tamari(3).unwrap();
        assert_eq!(t.size(), 5);
        let check = t.distributivity_check();
        assert!(matches!(check, LatticeCheck::NotDistributive { .. }), "{check:?}");
        // pentagon: exactly one maximal chain of length 3 and one of length 2
        let bottom = (0..5).find(|&x| (0..5).all(|y| t.leq(x, y))).unwrap();
        let top = (0..5).find(|&x| (0..5).all(|y| t.leq(y, x))).unwrap();
        assert_ne!(bottom, top);
    }

    #[test]
    fn tamari_sizes_are_catalan() {
        assert_eq!(Poset::named_tamari(1).unwrap().size(), 1);
        assert_eq!(Poset::named_tamari(2).unwrap().size(), 2);
        assert_eq!(Poset::named_tamari(4).unwrap().size(), 14);
        assert_eq!(Poset::named_tamari(5).unwrap().size(), 42);
        assert!(Poset::named_tamari(7).is_err());
    }

    #[test]
    fn join_irreducibles_of_boolean_square() {
        let b2 = Poset::named_boolean(2);
        let irr = b2.join_irreducibles();
        assert_eq!(irr.size(), 2);
        assert_eq!(irr.covers(), &[]);
        // Birkhoff round trip: J(antichain(2)) is the square again
        let j = irr.order_ideals().unwrap();
        assert_eq!(j.size(), 4);
    }

    #[test]
    fn ideal_count_cap() {
        let a = Poset::named_antichain(6);
        assert_eq!(a.count_ideals_capped(100), Some(64));
        assert_eq!(a.count_ideals_capped(10), None);
        assert_eq!(Poset::named_chain(10).count_ideals_capped(11), Some(11));
    }

    #[test]
    fn induced_subposet_recomputes_covers() {
        let c4 = Poset::named_chain(4);
        let sub = c4.induced_subposet(&[0, 2, 3], "sub");
        assert_eq!(sub.size(), 3);
        assert_eq!(sub.covers(), &[(0, 1), (1, 2)]);
    }
}
