//! Finite-dimensional split basic algebras presented by a multiplication
//! table over a fixed basis, together with the constructors the toolkit is
//! built around: path algebras of acyclic quivers, incidence algebras of
//! posets, trivial extensions, tensor products and enveloping algebras.
//!
//! Every constructor runs the full validator before returning, so a
//! `BasedAlgebra` in hand is always unital, associative, vertex-compatible
//! and split basic with nilpotent radical.

use crate::field::{FieldSpec, Scalar};
use crate::matrix::ExactMatrix;
use crate::poset::Poset;
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("quiver has an oriented cycle; path algebra would be infinite-dimensional")]
    CyclicQuiver,
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error("duplicate arrow label {0:?}")]
    DuplicateArrowLabel(String),
    #[error("arrow endpoint {0} out of range for {1} vertices")]
    ArrowOutOfRange(usize, usize),
}

/// A finite quiver: numbered vertices and labelled arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            if a.source >= vertices {
                return Err(AlgebraError::ArrowOutOfRange(a.source, vertices));
            }
            if a.target >= vertices {
                return Err(AlgebraError::ArrowOutOfRange(a.target, vertices));
            }
            if !seen.insert(a.label.clone()) {
                return Err(AlgebraError::DuplicateArrowLabel(a.label.clone()));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Linearly oriented A_n: `1 -> 2 -> ... -> n` (vertices are 0-based).
    pub fn linear(n: usize) -> Quiver {
        let arrows = (0..n.saturating_sub(1))
            .map(|i| Arrow {
                source: i,
                target: i + 1,
                label: format!("a{}", i + 1),
            })
            .collect();
        Quiver {
            vertices: n,
            arrows,
        }
    }

    /// Two vertices, two parallel arrows.
    pub fn kronecker() -> Quiver {
        Quiver {
            vertices: 2,
            arrows: vec![
                Arrow {
                    source: 0,
                    target: 1,
                    label: "a".into(),
                },
                Arrow {
                    source: 0,
                    target: 1,
                    label: "b".into(),
                },
            ],
        }
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let mut indeg = vec![0usize; self.vertices];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        seen == self.vertices
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Idempotent,
    Radical,
}

/// One basis vector of a [`BasedAlgebra`].
///
/// `degree` distinguishes the two graded pieces of a trivial extension
/// (0 = original algebra, 1 = dual part); plain algebras sit in degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub index: usize,
    pub source: usize,
    pub target: usize,
    pub kind: BasisKind,
    pub degree: u8,
    pub label: String,
}

pub type SparseVec = Vec<(usize, Scalar)>;

/// A finite-dimensional algebra given by structure constants on a based
/// vector space, with a complete set of orthogonal primitive idempotents
/// indexed by vertices.
#[derive(Clone)]
pub struct BasedAlgebra {
    field: FieldSpec,
    vertices: usize,
    basis: Vec<BasisElement>,
    idempotent_index: Vec<usize>,
    mult: Vec<SparseVec>, // mult[i * dim + j] = expansion of b_i * b_j
    name: String,
}

impl fmt::Debug for BasedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BasedAlgebra({}, dim {}, {} vertices, over {})",
            self.name,
            self.dim(),
            self.vertices,
            self.field
        )
    }
}

impl BasedAlgebra {
    /// Assembles and validates an algebra from raw parts.
    pub fn new(
        field: FieldSpec,
        vertices: usize,
        basis: Vec<BasisElement>,
        idempotent_index: Vec<usize>,
        mult: Vec<SparseVec>,
        name: String,
    ) -> Result<Self, AlgebraError> {
        let a = BasedAlgebra {
            field,
            vertices,
            basis,
            idempotent_index,
            mult,
            name,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotent_index[v]
    }

    pub fn mult(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn radical_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis
            .iter()
            .filter(|b| b.kind == BasisKind::Radical)
            .map(|b| b.index)
    }

    /// Product of a sparse element with a basis element on the right.
    pub fn mul_sparse_basis(&self, x: &[(usize, Scalar)], j: usize) -> SparseVec {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (i, c) in x {
            for (k, d) in self.mult(*i, j) {
                let term = self.field.mul(c, d);
                match acc.entry(*k) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = self.field.add(e.get(), &term);
                        if self.field.is_zero(&s) {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !self.field.is_zero(&term) {
                            e.insert(term);
                        }
                    }
                }
            }
        }
        let mut out: SparseVec = acc.into_iter().collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// The n x n Cartan matrix `U[i][j] = dim e_i A e_j`, returned over Q.
    pub fn cartan_matrix(&self) -> ExactMatrix {
        let q = FieldSpec::Rationals;
        let mut counts = vec![0i64; self.vertices * self.vertices];
        for b in &self.basis {
            counts[b.source * self.vertices + b.target] += 1;
        }
        ExactMatrix::from_fn(q, self.vertices, self.vertices, |i, j| {
            q.from_i64(counts[i * self.vertices + j])
        })
    }

    /// Full invariant check: structural sanity, unitality, idempotent
    /// orthogonality, vertex compatibility, associativity, and the split
    /// basic property (radical span is a nilpotent two-sided ideal).
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let dim = self.dim();
        let f = self.field;
        let fail = |msg: String| Err(AlgebraError::Invalid(msg));

        // structural sanity
        if self.mult.len() != dim * dim {
            return fail(format!(
                "multiplication table has {} entries for dimension {}",
                self.mult.len(),
                dim
            ));
        }
        if self.idempotent_index.len() != self.vertices {
            return fail("idempotent index does not cover the vertex set".into());
        }
        for (i, b) in self.basis.iter().enumerate() {
            if b.index != i {
                return fail(format!("basis element {i} carries index {}", b.index));
            }
            if b.source >= self.vertices || b.target >= self.vertices {
                return fail(format!("basis element {i} has out-of-range vertex"));
            }
        }
        let mut idempotents_seen = vec![false; self.vertices];
        for (v, &i) in self.idempotent_index.iter().enumerate() {
            let b = &self.basis[i];
            if b.kind != BasisKind::Idempotent || b.source != v || b.target != v {
                return fail(format!("idempotent of vertex {v} is malformed"));
            }
            idempotents_seen[v] = true;
        }
        let n_idem = self
            .basis
            .iter()
            .filter(|b| b.kind == BasisKind::Idempotent)
            .count();
        if n_idem != self.vertices || idempotents_seen.iter().any(|s| !s) {
            return fail("idempotent basis elements do not biject with vertices".into());
        }
        for (pos, entry) in self.mult.iter().enumerate() {
            let mut last = None;
            for (k, c) in entry {
                if *k >= dim {
                    return fail(format!("table entry {pos} references basis element {k}"));
                }
                if f.is_zero(c) {
                    return fail(format!("table entry {pos} stores an explicit zero"));
                }
                if last.is_some_and(|l| l >= *k) {
                    return fail(format!("table entry {pos} is not sorted by index"));
                }
                last = Some(*k);
            }
        }

        // idempotent orthogonality: e_u e_v = delta e_u
        for u in 0..self.vertices {
            for v in 0..self.vertices {
                let prod = self.mult(self.idempotent(u), self.idempotent(v));
                let expect: SparseVec = if u == v {
                    vec![(self.idempotent(u), f.one())]
                } else {
                    vec![]
                };
                if prod != expect.as_slice() {
                    return fail(format!("idempotents {u},{v} are not orthogonal"));
                }
            }
        }

        // vertex compatibility and unitality
        for b in &self.basis {
            let eu = self.idempotent(b.source);
            let ev = self.idempotent(b.target);
            let left = self.mult(eu, b.index);
            let right = self.mult(b.index, ev);
            let expect: SparseVec = vec![(b.index, f.one())];
            if left != expect.as_slice() || right != expect.as_slice() {
                return fail(format!(
                    "element {} is not fixed by its vertex idempotents",
                    b.index
                ));
            }
            for u in 0..self.vertices {
                if u != b.source && !self.mult(self.idempotent(u), b.index).is_empty() {
                    return fail(format!("e_{u} b_{} should vanish", b.index));
                }
                if u != b.target && !self.mult(b.index, self.idempotent(u)).is_empty() {
                    return fail(format!("b_{} e_{u} should vanish", b.index));
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                if self.basis[i].target != self.basis[j].source && !self.mult(i, j).is_empty() {
                    return fail(format!("product {i}*{j} ignores vertex compatibility"));
                }
                for (k, _) in self.mult(i, j) {
                    let b = &self.basis[*k];
                    if b.source != self.basis[i].source || b.target != self.basis[j].target {
                        return fail(format!(
                            "product {i}*{j} contains element {k} with wrong endpoints"
                        ));
                    }
                }
            }
        }

        // associativity on composable triples (non-composable ones vanish on
        // both sides by vertex compatibility, which is already verified)
        for i in 0..dim {
            for j in 0..dim {
                if self.basis[i].target != self.basis[j].source {
                    continue;
                }
                let ij = self.mult(i, j).to_vec();
                for k in 0..dim {
                    if self.basis[j].target != self.basis[k].source {
                        continue;
                    }
                    let left = self.mul_sparse_basis(&ij, k);
                    let jk = self.mult(j, k);
                    let right = self.mul_left(i, jk);
                    if left != right {
                        return fail(format!("associativity fails on ({i},{j},{k})"));
                    }
                }
            }
        }

        // split basic: the radical span is a two-sided ideal...
        for i in 0..dim {
            for j in 0..dim {
                let both_idem = self.basis[i].kind == BasisKind::Idempotent
                    && self.basis[j].kind == BasisKind::Idempotent;
                if both_idem {
                    continue;
                }
                for (k, _) in self.mult(i, j) {
                    if self.basis[*k].kind == BasisKind::Idempotent {
                        return fail(format!(
                            "product {i}*{j} leaks out of the radical onto idempotent {k}"
                        ));
                    }
                }
            }
        }
        // ...and nilpotent: rad^k strictly decreases until it vanishes
        let radical: Vec<usize> = self.radical_indices().collect();
        let mut current: Vec<SparseVec> = radical.iter().map(|&i| vec![(i, f.one())]).collect();
        let mut current_dim = self.span_rank(&current);
        loop {
            if current.is_empty() || current_dim == 0 {
                break;
            }
            let mut next: Vec<SparseVec> = Vec::new();
            for &r in &radical {
                for x in &current {
                    let prod = self.mul_left(r, x);
                    if !prod.is_empty() {
                        next.push(prod);
                    }
                }
            }
            let next_dim = self.span_rank(&next);
            if next_dim >= current_dim {
                return fail("radical span is not nilpotent".into());
            }
            current = next;
            current_dim = next_dim;
        }
        Ok(())
    }

    fn mul_left(&self, i: usize, x: &[(usize, Scalar)]) -> SparseVec {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (j, c) in x {
            for (k, d) in self.mult(i, *j) {
                let term = self.field.mul(c, d);
                let cur = acc.remove(k);
                let s = match cur {
                    Some(prev) => self.field.add(&prev, &term),
                    None => term,
                };
                if !self.field.is_zero(&s) {
                    acc.insert(*k, s);
                }
            }
        }
        let mut out: SparseVec = acc.into_iter().collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    fn span_rank(&self, vectors: &[SparseVec]) -> usize {
        if vectors.is_empty() {
            return 0;
        }
        let dim = self.dim();
        let m = ExactMatrix::from_fn(self.field, vectors.len(), dim, |i, j| {
            vectors[i]
                .iter()
                .find(|(k, _)| *k == j)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| self.field.zero())
        });
        m.rank()
    }
}

/// Path algebra of an acyclic quiver: basis indexed by paths, product is
/// concatenation (paths compose left to right).
pub fn path_algebra(field: FieldSpec, quiver: &Quiver) -> Result<BasedAlgebra, AlgebraError> {
    if !quiver.is_acyclic() {
        return Err(AlgebraError::CyclicQuiver);
    }
    // enumerate paths: arrow index sequences, trivial paths first, then by
    // (length, lexicographic arrow indices)
    let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new(); // (source, target, arrows)
    for v in 0..quiver.vertices {
        paths.push((v, v, vec![]));
    }
    let mut frontier: Vec<(usize, usize, Vec<usize>)> = (0..quiver.arrows.len())
        .map(|i| (quiver.arrows[i].source, quiver.arrows[i].target, vec![i]))
        .collect();
    while !frontier.is_empty() {
        paths.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for (s, t, arrows) in &frontier {
            for (i, a) in quiver.arrows.iter().enumerate() {
                if a.source == *t {
                    let mut ext = arrows.clone();
                    ext.push(i);
                    next.push((*s, a.target, ext));
                }
            }
        }
        frontier = next;
    }
    let index_of: HashMap<Vec<usize>, usize> = paths
        .iter()
        .enumerate()
        .map(|(i, (s, _, arrows))| {
            let key = if arrows.is_empty() {
                vec![usize::MAX - s] // trivial paths keyed by source vertex
            } else {
                arrows.clone()
            };
            (key, i)
        })
        .collect();
    let dim = paths.len();
    let basis: Vec<BasisElement> = paths
        .iter()
        .enumerate()
        .map(|(i, (s, t, arrows))| BasisElement {
            index: i,
            source: *s,
            target: *t,
            kind: if arrows.is_empty() {
                BasisKind::Idempotent
            } else {
                BasisKind::Radical
            },
            degree: 0,
            label: if arrows.is_empty() {
                format!("e{s}")
            } else {
                arrows
                    .iter()
                    .map(|&a| quiver.arrows[a].label.clone())
                    .collect::<Vec<_>>()
                    .join("*")
            },
        })
        .collect();
    let mut mult = vec![SparseVec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let (si, ti, ai) = &paths[i];
            let (sj, tj, aj) = &paths[j];
            if *ti != *sj {
                continue;
            }
            let mut concat = ai.clone();
            concat.extend(aj.iter());
            let key = if concat.is_empty() {
                vec![usize::MAX - si]
            } else {
                concat
            };
            let k = index_of[&key];
            debug_assert_eq!(paths[k].0, *si);
            debug_assert_eq!(paths[k].1, *tj);
            mult[i * dim + j] = vec![(k, field.one())];
        }
    }
    let idempotent_index: Vec<usize> = (0..quiver.vertices).collect();
    BasedAlgebra::new(
        field,
        quiver.vertices,
        basis,
        idempotent_index,
        mult,
        format!("k[quiver on {} vertices]", quiver.vertices),
    )
}

/// Incidence algebra k[P]: basis the intervals `[x, y]` of the poset,
/// `[x,y] * [u,v] = delta_{y,u} [x,v]`.
pub fn incidence_algebra(field: FieldSpec, poset: &Poset) -> Result<BasedAlgebra, AlgebraError> {
    let n = poset.size();
    let mut intervals: Vec<(usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) {
                intervals.push((x, y));
            }
        }
    }
    // idempotents [x,x] first, then strict intervals, both in (x, y) order
    intervals.sort_by_key(|&(x, y)| (x != y, x, y));
    let index_of: HashMap<(usize, usize), usize> = intervals
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let dim = intervals.len();
    let basis: Vec<BasisElement> = intervals
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| BasisElement {
            index: i,
            source: x,
            target: y,
            kind: if x == y {
                BasisKind::Idempotent
            } else {
                BasisKind::Radical
            },
            degree: 0,
            label: format!("[{},{}]", poset.element_name(x), poset.element_name(y)),
        })
        .collect();
    let mut mult = vec![SparseVec::new(); dim * dim];
    for (i, &(x, y)) in intervals.iter().enumerate() {
        for (j, &(u, v)) in intervals.iter().enumerate() {
            if y == u {
                mult[i * dim + j] = vec![(index_of[&(x, v)], field.one())];
            }
        }
    }
    let idempotent_index: Vec<usize> = (0..n).collect();
    BasedAlgebra::new(
        field,
        n,
        basis,
        idempotent_index,
        mult,
        format!("k[{}]", poset.name()),
    )
}

/// Trivial extension T(A) = A (+) D(A) with multiplication
/// `(a,f)(b,g) = (ab, ag + fb)`.
///
/// The dual basis element `b*` of `b` runs backwards: its source is
/// `target(b)` and its target is `source(b)`. Degree 0 is the original
/// algebra, degree 1 the dual part, and degree-1 times degree-1 vanishes.
pub fn trivial_extension(a: &BasedAlgebra) -> BasedAlgebra {
    let f = a.field();
    let d = a.dim();
    let mut basis: Vec<BasisElement> = a
        .basis()
        .iter()
        .map(|b| BasisElement {
            degree: 0,
            ..b.clone()
        })
        .collect();
    for b in a.basis() {
        basis.push(BasisElement {
            index: d + b.index,
            source: b.target,
            target: b.source,
            kind: BasisKind::Radical,
            degree: 1,
            label: format!("({})*", b.label),
        });
    }
    let dim = 2 * d;
    let mut mult = vec![SparseVec::new(); dim * dim];
    // degree 0 x degree 0: the original table
    for i in 0..d {
        for j in 0..d {
            mult[i * dim + j] = a.mult(i, j).to_vec();
        }
    }
    // b * (b_j)^: coefficient on (b_i)^ is the coefficient of b_j in b_i b
    // (b_j)^ * b: coefficient on (b_i)^ is the coefficient of b_j in b b_i
    for b in 0..d {
        for j in 0..d {
            let mut left = SparseVec::new(); // b * b_j^*
            let mut right = SparseVec::new(); // b_j^* * b
            for i in 0..d {
                if let Some((_, c)) = a.mult(i, b).iter().find(|(k, _)| *k == j) {
                    left.push((d + i, c.clone()));
                }
                if let Some((_, c)) = a.mult(b, i).iter().find(|(k, _)| *k == j) {
                    right.push((d + i, c.clone()));
                }
            }
            left.sort_by_key(|(k, _)| *k);
            right.sort_by_key(|(k, _)| *k);
            mult[b * dim + (d + j)] = left;
            mult[(d + j) * dim + b] = right;
        }
    }
    // degree 1 x degree 1 = 0 (already empty)
    let idempotent_index = a.idempotent_index.clone();
    BasedAlgebra::new(
        f,
        a.vertices(),
        basis,
        idempotent_index,
        mult,
        format!("T({})", a.name()),
    )
    .expect("trivial extension of a valid algebra is valid")
}

/// Tensor product A (x) B over the common ground field. Vertex `(u, p)` gets
/// index `u * B.vertices + p`; basis pairs follow the same layout.
pub fn tensor_product(
    a: &BasedAlgebra,
    b: &BasedAlgebra,
) -> Result<BasedAlgebra, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let nb = b.vertices();
    let vertices = a.vertices() * nb;
    let pair_vertex = |u: usize, p: usize| u * nb + p;
    let basis: Vec<BasisElement> = (0..da)
        .flat_map(|i| (0..db).map(move |j| (i, j)))
        .map(|(i, j)| {
            let (x, y) = (&a.basis()[i], &b.basis()[j]);
            BasisElement {
                index: i * db + j,
                source: pair_vertex(x.source, y.source),
                target: pair_vertex(x.target, y.target),
                kind: if x.kind == BasisKind::Idempotent && y.kind == BasisKind::Idempotent {
                    BasisKind::Idempotent
                } else {
                    BasisKind::Radical
                },
                degree: x.degree + y.degree,
                label: format!("{}(x){}", x.label, y.label),
            }
        })
        .collect();
    let mut mult = vec![SparseVec::new(); dim * dim];
    for i1 in 0..da {
        for j1 in 0..db {
            for i2 in 0..da {
                for j2 in 0..db {
                    let pa = a.mult(i1, i2);
                    if pa.is_empty() {
                        continue;
                    }
                    let pb = b.mult(j1, j2);
                    if pb.is_empty() {
                        continue;
                    }
                    let mut entry = SparseVec::new();
                    for (ka, ca) in pa {
                        for (kb, cb) in pb {
                            entry.push((ka * db + kb, f.mul(ca, cb)));
                        }
                    }
                    entry.sort_by_key(|(k, _)| *k);
                    mult[(i1 * db + j1) * dim + (i2 * db + j2)] = entry;
                }
            }
        }
    }
    let idempotent_index: Vec<usize> = (0..a.vertices())
        .flat_map(|u| (0..nb).map(move |p| (u, p)))
        .map(|(u, p)| a.idempotent(u) * db + b.idempotent(p))
        .collect();
    BasedAlgebra::new(
        f,
        vertices,
        basis,
        idempotent_index,
        mult,
        format!("{}(x){}", a.name(), b.name()),
    )
}

/// Opposite algebra: same basis, reversed multiplication, endpoints swapped.
/// The vertex numbering is preserved.
pub fn opposite(a: &BasedAlgebra) -> BasedAlgebra {
    let dim = a.dim();
    let basis: Vec<BasisElement> = a
        .basis()
        .iter()
        .map(|b| BasisElement {
            source: b.target,
            target: b.source,
            ..b.clone()
        })
        .collect();
    let mut mult = vec![SparseVec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            mult[i * dim + j] = a.mult(j, i).to_vec();
        }
    }
    BasedAlgebra::new(
        a.field(),
        a.vertices(),
        basis,
        a.idempotent_index.clone(),
        mult,
        format!("{}^op", a.name()),
    )
    .expect("opposite of a valid algebra is valid")
}

/// Enveloping algebra A^e = A (x) A^op.
pub fn enveloping(a: &BasedAlgebra) -> BasedAlgebra {
    let op = opposite(a);
    let mut e = tensor_product(a, &op).expect("same field on both sides");
    e.name = format!("{}^e", a.name());
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn path_algebra_dimensions() {
        assert_eq!(path_algebra(q(), &Quiver::linear(2)).unwrap().dim(), 3);
        assert_eq!(path_algebra(q(), &Quiver::linear(4)).unwrap().dim(), 10);
        assert_eq!(path_algebra(q(), &Quiver::kronecker()).unwrap().dim(), 4);
    }

    #[test]
    fn path_algebra_rejects_cycles() {
        let c = Quiver::new(
            2,
            vec![
                Arrow { source: 0, target: 1, label: "a".into() },
                Arrow { source: 1, target: 0, label: "b".into() },
            ],
        )
        .unwrap();
        assert!(matches!(path_algebra(q(), &c), Err(AlgebraError::CyclicQuiver)));
    }

    #[test]
    fn incidence_algebra_of_boolean_square() {
        let b2 = Poset::named_boolean(2);
        let a = incidence_algebra(q(), &b2).unwrap();
        assert_eq!(a.dim(), 9);
        let u = a.cartan_matrix();
        // Cartan entries follow the order relation
        for x in 0..4 {
            for y in 0..4 {
                let expect = if b2.leq(x, y) { 1 } else { 0 };
                assert_eq!(u.at(x, y), &q().from_i64(expect), "({x},{y})");
            }
        }
    }

    #[test]
    fn trivial_extension_doubles_dimension() {
        let a = path_algebra(q(), &Quiver::linear(2)).unwrap();
        let t = trivial_extension(&a);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.vertices(), 2);
        // dual elements reverse orientation
        for b in a.basis() {
            let dual = &t.basis()[a.dim() + b.index];
            assert_eq!(dual.source, b.target);
            assert_eq!(dual.target, b.source);
            assert_eq!(dual.degree, 1);
        }
        // degree-1 times degree-1 vanishes
        for x in t.basis() {
            for y in t.basis() {
                if x.degree == 1 && y.degree == 1 {
                    assert!(t.mult(x.index, y.index).is_empty());
                }
            }
        }
    }

    #[test]
    fn tensor_product_dimension_and_cartan() {
        let a = path_algebra(q(), &Quiver::linear(2)).unwrap();
        let t = tensor_product(&a, &a).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.vertices(), 4);
        // Cartan of the tensor is the Kronecker product of the Cartans
        let u = a.cartan_matrix();
        let ut = t.cartan_matrix();
        for i1 in 0..2 {
            for j1 in 0..2 {
                for i2 in 0..2 {
                    for j2 in 0..2 {
                        let expect = q().mul(u.at(i1, i2), u.at(j1, j2));
                        assert_eq!(ut.at(i1 * 2 + j1, i2 * 2 + j2), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn enveloping_of_two_dimensional_algebra() {
        let a = path_algebra(q(), &Quiver::linear(1)).unwrap();
        let t = trivial_extension(&a); // k[x]/(x^2)
        let e = enveloping(&t);
        assert_eq!(e.dim(), 4);
        assert_eq!(e.vertices(), 1);
    }

    #[test]
    fn opposite_squares_to_identity_table() {
        let a = incidence_algebra(q(), &Poset::named_boolean(2)).unwrap();
        let oo = opposite(&opposite(&a));
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(a.mult(i, j), oo.mult(i, j));
            }
        }
    }

    #[test]
    fn validator_rejects_corrupted_tables() {
        let a = path_algebra(q(), &Quiver::linear(2)).unwrap();
        let dim = a.dim();
        let at = |i: usize, j: usize| i * dim + j;
        let alpha = 2; // the arrow e0 -> e1

        // 1: break associativity/unitality by dropping a product
        let mut broken = a.clone();
        broken.mult[at(0, alpha)] = vec![];
        assert!(broken.validate().is_err());

        // 2: break orthogonality
        let mut broken = a.clone();
        broken.mult[at(0, 1)] = vec![(0, q().one())];
        assert!(broken.validate().is_err());

        // 3: break vertex compatibility in an expansion
        let mut broken = a.clone();
        broken.mult[at(alpha, 1)] = vec![(1, q().one())];
        assert!(broken.validate().is_err());

        // 4: break the grading so the radical leaks onto an idempotent
        let mut broken = a.clone();
        broken.mult[at(0, alpha)] = vec![(0, q().one())];
        assert!(broken.validate().is_err());

        // 5: break nilpotency by making the arrow square to itself...
        let mut broken = a.clone();
        broken.basis[alpha].target = 0;
        broken.mult[at(alpha, alpha)] = vec![(alpha, q().one())];
        broken.mult[at(alpha, 0)] = vec![(alpha, q().one())];
        broken.mult[at(0, alpha)] = vec![(alpha, q().one())];
        broken.mult[at(1, alpha)] = vec![];
        assert!(broken.validate().is_err());
    }
}
