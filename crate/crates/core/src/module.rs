//! Finite-dimensional right modules over a [`BasedAlgebra`], presented on
//! the vertex grading: a module is a tuple of components `M e_v` and, for
//! every basis element `b`, a block matrix carrying the source component to
//! the target component (row-vector convention: `x -> x * action(b)`).
//!
//! Projective covers and syzygies work one vertex at a time — a module map
//! commutes with the idempotents, so kernels and images split along the
//! grading and all the linear algebra happens in small blocks.

use crate::algebra::{BasedAlgebra, BasisKind};
use crate::field::Scalar;
use crate::matrix::ExactMatrix;

/// Right module over `algebra`, graded by vertices.
#[derive(Clone)]
pub struct RightModule<'a> {
    algebra: &'a BasedAlgebra,
    vertex_dims: Vec<usize>,
    /// `actions[b]`: `(vertex_dims[source(b)] x vertex_dims[target(b)])`
    actions: Vec<ExactMatrix>,
}

impl<'a> RightModule<'a> {
    pub fn new(
        algebra: &'a BasedAlgebra,
        vertex_dims: Vec<usize>,
        actions: Vec<ExactMatrix>,
    ) -> Self {
        debug_assert_eq!(vertex_dims.len(), algebra.vertices());
        debug_assert_eq!(actions.len(), algebra.dim());
        RightModule {
            algebra,
            vertex_dims,
            actions,
        }
    }

    pub fn algebra(&self) -> &'a BasedAlgebra {
        self.algebra
    }

    pub fn vertex_dims(&self) -> &[usize] {
        &self.vertex_dims
    }

    pub fn action(&self, basis_index: usize) -> &ExactMatrix {
        &self.actions[basis_index]
    }

    pub fn total_dim(&self) -> usize {
        self.vertex_dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// For a one-dimensional module, the vertex carrying it. Over a split
    /// basic algebra every one-dimensional module is the simple at its
    /// supporting vertex.
    pub fn simple_support(&self) -> Option<usize> {
        if self.total_dim() != 1 {
            return None;
        }
        self.vertex_dims.iter().position(|&d| d == 1)
    }

    /// The simple module S_v: one-dimensional at `v`, radical acts by zero.
    pub fn simple(algebra: &'a BasedAlgebra, v: usize) -> Self {
        let f = algebra.field();
        let mut vertex_dims = vec![0; algebra.vertices()];
        vertex_dims[v] = 1;
        let actions = algebra
            .basis()
            .iter()
            .map(|b| {
                let rows = vertex_dims[b.source];
                let cols = vertex_dims[b.target];
                if b.kind == BasisKind::Idempotent && b.source == v {
                    ExactMatrix::identity(f, 1)
                } else {
                    ExactMatrix::zeros(f, rows, cols)
                }
            })
            .collect();
        RightModule::new(algebra, vertex_dims, actions)
    }

    /// The indecomposable projective P_v = e_v A, with basis the algebra
    /// basis elements starting at `v`.
    pub fn projective(algebra: &'a BasedAlgebra, v: usize) -> Self {
        let f = algebra.field();
        let n = algebra.vertices();
        // component bases: elements with source v, grouped by target
        let mut comp: Vec<Vec<usize>> = vec![Vec::new(); n];
        for b in algebra.basis() {
            if b.source == v {
                comp[b.target].push(b.index);
            }
        }
        let mut pos = vec![usize::MAX; algebra.dim()];
        for c in &comp {
            for (i, &b) in c.iter().enumerate() {
                pos[b] = i;
            }
        }
        let vertex_dims: Vec<usize> = comp.iter().map(|c| c.len()).collect();
        let actions = algebra
            .basis()
            .iter()
            .map(|c_el| {
                let (u, w) = (c_el.source, c_el.target);
                let mut m = ExactMatrix::zeros(f, vertex_dims[u], vertex_dims[w]);
                for (row, &p) in comp[u].iter().enumerate() {
                    for (q, coeff) in algebra.mult(p, c_el.index) {
                        *m.at_mut(row, pos[*q]) = coeff.clone();
                    }
                }
                m
            })
            .collect();
        RightModule::new(algebra, vertex_dims, actions)
    }

    /// Checks the module axioms: idempotents act as identities and the
    /// action respects the multiplication table on composable pairs.
    pub fn validate(&self) -> Result<(), String> {
        let a = self.algebra;
        let f = a.field();
        for b in a.basis() {
            let m = &self.actions[b.index];
            if m.rows() != self.vertex_dims[b.source] || m.cols() != self.vertex_dims[b.target] {
                return Err(format!("action of {} has wrong shape", b.index));
            }
            if b.kind == BasisKind::Idempotent
                && *m != ExactMatrix::identity(f, self.vertex_dims[b.source])
            {
                return Err(format!("idempotent {} does not act as identity", b.index));
            }
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if a.basis()[i].target != a.basis()[j].source {
                    continue;
                }
                let lhs = self.actions[i]
                    .mul(&self.actions[j])
                    .map_err(|e| e.to_string())?;
                let mut rhs = ExactMatrix::zeros(
                    f,
                    self.vertex_dims[a.basis()[i].source],
                    self.vertex_dims[a.basis()[j].target],
                );
                for (k, c) in a.mult(i, j) {
                    rhs = rhs.add(&self.actions[*k].scale(c)).map_err(|e| e.to_string())?;
                }
                if lhs != rhs {
                    return Err(format!("action breaks on product ({i},{j})"));
                }
            }
        }
        Ok(())
    }
}

/// A projective cover `P -> M`: the cover module, the per-vertex surjection
/// matrices, and the top multiplicities that built it.
pub struct CoverData<'a> {
    /// multiplicity of P_v in the cover, per vertex
    pub multiplicities: Vec<usize>,
    pub cover: RightModule<'a>,
    /// per vertex u: `(cover dim at u) x (M dim at u)`, row-vector convention
    pub maps: Vec<ExactMatrix>,
}

/// Projective cover of `m`, computed from the top `M / M rad`.
///
/// Per vertex, the radical subspace is the row span of all radical actions
/// landing there; the cover generators are the standard basis vectors at the
/// non-pivot columns of its echelon form, one copy of P_v each.
pub fn projective_cover<'a>(m: &RightModule<'a>) -> CoverData<'a> {
    let a = m.algebra();
    let f = a.field();
    let n = a.vertices();

    // pivot columns of the radical row space, per vertex
    let mut generators: Vec<Vec<usize>> = Vec::with_capacity(n);
    for w in 0..n {
        let dim_w = m.vertex_dims()[w];
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for b in a.basis() {
            if b.kind == BasisKind::Radical && b.target == w {
                let act = m.action(b.index);
                for r in 0..act.rows() {
                    rows.push(act.row(r).to_vec());
                }
            }
        }
        let pivot_cols: Vec<usize> = if rows.is_empty() {
            vec![]
        } else {
            let mat = ExactMatrix::from_fn(f, rows.len(), dim_w, |i, j| rows[i][j].clone());
            mat.rref().1
        };
        let gens: Vec<usize> = (0..dim_w).filter(|c| !pivot_cols.contains(c)).collect();
        generators.push(gens);
    }
    let multiplicities: Vec<usize> = generators.iter().map(|g| g.len()).collect();

    // assemble the cover: copies of P_w in (vertex, generator) order
    let projectives: Vec<RightModule<'a>> = (0..n).map(|w| RightModule::projective(a, w)).collect();
    let mut cover_dims = vec![0usize; n];
    for w in 0..n {
        for u in 0..n {
            cover_dims[u] += multiplicities[w] * projectives[w].vertex_dims()[u];
        }
    }
    // offsets[w][copy] -> per-vertex starting row of that copy inside the cover
    let mut offsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    {
        let mut cursor = vec![0usize; n];
        for w in 0..n {
            for _copy in 0..multiplicities[w] {
                let mut per_vertex = vec![0usize; n];
                for u in 0..n {
                    per_vertex[u] = cursor[u];
                    cursor[u] += projectives[w].vertex_dims()[u];
                }
                offsets[w].push(per_vertex);
            }
        }
    }

    let actions: Vec<ExactMatrix> = a
        .basis()
        .iter()
        .map(|c_el| {
            let (u, t) = (c_el.source, c_el.target);
            let mut big = ExactMatrix::zeros(f, cover_dims[u], cover_dims[t]);
            for w in 0..n {
                let block = projectives[w].action(c_el.index);
                for copy in 0..multiplicities[w] {
                    let ro = offsets[w][copy][u];
                    let co = offsets[w][copy][t];
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            if !f.is_zero(block.at(i, j)) {
                                *big.at_mut(ro + i, co + j) = block.at(i, j).clone();
                            }
                        }
                    }
                }
            }
            big
        })
        .collect();
    let cover = RightModule::new(a, cover_dims, actions);

    // cover maps: the copy of P_w for generator g sends the basis element p
    // (source w) to e_g * action(p), i.e. row g of the action matrix of p
    let mut maps = Vec::with_capacity(n);
    for u in 0..n {
        let mut mp = ExactMatrix::zeros(f, cover.vertex_dims()[u], m.vertex_dims()[u]);
        for w in 0..n {
            // rows of this copy at vertex u correspond to basis elements
            // with source w and target u, in index order
            let elems: Vec<usize> = a
                .basis()
                .iter()
                .filter(|b| b.source == w && b.target == u)
                .map(|b| b.index)
                .collect();
            for (copy, &g) in generators[w].iter().enumerate() {
                let ro = offsets[w][copy][u];
                for (i, &p) in elems.iter().enumerate() {
                    let act = m.action(p); // (dims[w] x dims[u])
                    for j in 0..act.cols() {
                        let val = act.at(g, j);
                        if !f.is_zero(val) {
                            *mp.at_mut(ro + i, j) = val.clone();
                        }
                    }
                }
            }
        }
        debug_assert_eq!(
            mp.rank(),
            m.vertex_dims()[u],
            "cover map must be surjective at vertex {u}"
        );
        maps.push(mp);
    }

    CoverData {
        multiplicities,
        cover,
        maps,
    }
}

/// Kernel of a cover map, with the induced module structure — the syzygy.
pub fn syzygy_from_cover<'a>(m: &RightModule<'a>, cover: &CoverData<'a>) -> RightModule<'a> {
    let a = m.algebra();
    let f = a.field();
    let n = a.vertices();

    // per-vertex kernel bases in canonical echelon form, plus their pivots
    let mut bases: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(n);
    let mut pivots: Vec<Vec<usize>> = Vec::with_capacity(n);
    for u in 0..n {
        let ker = cover.maps[u].transpose().kernel_basis();
        let piv: Vec<usize> = ker
            .iter()
            .map(|v| v.iter().position(|s| !f.is_zero(s)).expect("nonzero basis vector"))
            .collect();
        debug_assert_eq!(
            ker.len(),
            cover.cover.vertex_dims()[u] - m.vertex_dims()[u],
            "syzygy dimension must be cover minus module at vertex {u}"
        );
        bases.push(ker);
        pivots.push(piv);
    }
    let vertex_dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();

    let actions: Vec<ExactMatrix> = a
        .basis()
        .iter()
        .map(|b_el| {
            let (u, w) = (b_el.source, b_el.target);
            let act_p = cover.cover.action(b_el.index);
            let mut out = ExactMatrix::zeros(f, vertex_dims[u], vertex_dims[w]);
            for (i, base_vec) in bases[u].iter().enumerate() {
                let image = act_p.row_mul(base_vec); // lands inside the kernel at w
                for (j, &piv) in pivots[w].iter().enumerate() {
                    let c = image[piv].clone();
                    if !f.is_zero(&c) {
                        *out.at_mut(i, j) = c;
                    }
                }
                #[cfg(debug_assertions)]
                {
                    // the pivot coordinates must reconstruct the image exactly
                    let mut recon = vec![f.zero(); image.len()];
                    for (j, bw) in bases[w].iter().enumerate() {
                        let c = out.at(i, j);
                        for (k, s) in bw.iter().enumerate() {
                            let t = f.mul(c, s);
                            recon[k] = f.add(&recon[k], &t);
                        }
                    }
                    debug_assert_eq!(recon, image, "syzygy image escapes the kernel");
                }
            }
            out
        })
        .collect();
    RightModule::new(a, vertex_dims, actions)
}

/// One syzygy step: kernel of the projective cover of `m`.
pub fn syzygy<'a>(m: &RightModule<'a>) -> RightModule<'a> {
    let cover = projective_cover(m);
    syzygy_from_cover(m, &cover)
}
