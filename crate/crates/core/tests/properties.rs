//! Randomized structural properties, cross-checked against independent
//! brute-force oracles at sizes where exhaustion is affordable.
//!
//! The oracles deliberately avoid the code paths they check: poset classes
//! are counted by closing arbitrary upper-triangular relations instead of
//! orderly generation, and ideal lattices are rebuilt from raw subset
//! masks instead of `order_ideals`.

use std::collections::HashSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trivext_core::algebra::{
    incidence_algebra, path_algebra, trivial_extension, AlgebraError, Arrow, BasedAlgebra,
    BasisElement, BasisKind, Quiver, SparseVec,
};
use trivext_core::canon::CanonicalForm;
use trivext_core::enumerate::{census_distributive_lattices, enumerate_posets};
use trivext_core::field::{FieldSpec, Scalar};
use trivext_core::matrix::ExactMatrix;
use trivext_core::module::{projective_cover, syzygy, syzygy_from_cover, RightModule};
use trivext_core::poly::char_poly;
use trivext_core::poset::Poset;
use trivext_core::resolution::{syzygy_orbit, OrbitOptions, PeriodicityVerdict};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

/// Decodes `mask` as an upper-triangular relation on n points (bit k is the
/// k-th pair (i, j) with i < j in lex order), closes it transitively, and
/// returns the resulting poset. Every isomorphism class on n points is hit
/// by some mask, because every finite poset has a linear extension.
fn poset_from_mask(n: usize, mask: u64) -> Poset {
    let mut leq = vec![false; n * n];
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> k & 1 == 1 {
                leq[i * n + j] = true;
            }
            k += 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            if leq[i * n + m] {
                for j in 0..n {
                    if leq[m * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        'pair: for j in (i + 1)..n {
            if !leq[i * n + j] {
                continue;
            }
            for m in 0..n {
                if leq[i * n + m] && leq[m * n + j] {
                    continue 'pair;
                }
            }
            covers.push((i, j));
        }
    }
    Poset::from_covers(n, covers, None, "random").unwrap()
}

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), 0u64..(1u64 << pairs))
        })
        .prop_map(|(n, mask)| poset_from_mask(n, mask))
}

fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let covers = p
        .covers()
        .iter()
        .map(|&(a, b)| (perm[a], perm[b]))
        .collect();
    Poset::from_covers(p.size(), covers, None, "relabeled").unwrap()
}

/// All transitive upper-triangular relations on n points, as up-set masks
/// `up[i] = { j : i < j in the relation }`.
fn transitive_relations(n: usize) -> Vec<Vec<u32>> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1u32 << pairs) {
        let mut up = vec![0u32; n];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> k & 1 == 1 {
                    up[i] |= 1 << j;
                }
                k += 1;
            }
        }
        for i in 0..n {
            let mut rest = up[i];
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if up[j] & !up[i] != 0 {
                    continue 'mask;
                }
            }
        }
        out.push(up);
    }
    out
}

fn canonical_of_relation(n: usize, up: &[u32]) -> CanonicalForm {
    let mut covers = Vec::new();
    for i in 0..n {
        'pair: for j in (i + 1)..n {
            if up[i] >> j & 1 == 0 {
                continue;
            }
            for m in 0..n {
                if up[i] >> m & 1 == 1 && up[m] >> j & 1 == 1 {
                    continue 'pair;
                }
            }
            covers.push((i, j));
        }
    }
    CanonicalForm::of(&Poset::from_covers(n, covers, None, "oracle").unwrap())
}

#[test]
fn enumerate_counts_match_labeled_brute_force() {
    let pinned = [1usize, 1, 2, 5, 16, 63, 318];
    for (n, &want) in pinned.iter().enumerate() {
        let mut classes: HashSet<CanonicalForm> = HashSet::new();
        for up in transitive_relations(n) {
            classes.insert(canonical_of_relation(n, &up));
        }
        assert_eq!(classes.len(), want, "brute-force classes on {n} points");
        let generated: HashSet<CanonicalForm> = enumerate_posets(n, None)
            .unwrap()
            .iter()
            .map(CanonicalForm::of)
            .collect();
        assert_eq!(generated, classes, "class sets on {n} points");
    }
}

/// The ideal lattice of a relation, rebuilt from subset masks: ideals are
/// the down-closed subsets, and one ideal covers another exactly when it
/// adds a single element.
fn ideal_lattice_of_relation(n: usize, up: &[u32]) -> (usize, CanonicalForm) {
    let mut down = vec![0u32; n];
    for (i, &u) in up.iter().enumerate() {
        down[i] |= 1 << i;
        let mut rest = u;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            down[j] |= 1 << i;
        }
    }
    let mut ideals = Vec::new();
    for s in 0u32..(1 << n) {
        if (0..n).all(|j| s >> j & 1 == 0 || down[j] & !s == 0) {
            ideals.push(s);
        }
    }
    let mut covers = Vec::new();
    for (a, &s) in ideals.iter().enumerate() {
        for (b, &t) in ideals.iter().enumerate() {
            if s != t && t & s == s && (t & !s).count_ones() == 1 {
                covers.push((a, b));
            }
        }
    }
    let lattice = Poset::from_covers(ideals.len(), covers, None, "oracle ideals").unwrap();
    (ideals.len(), CanonicalForm::of(&lattice))
}

#[test]
fn census_counts_match_labeled_brute_force() {
    let max_m = 8;
    let mut per_m: Vec<HashSet<CanonicalForm>> = vec![HashSet::new(); max_m + 1];
    for n in 1..max_m {
        for up in transitive_relations(n) {
            let mut down = vec![0u32; n];
            for (i, &u) in up.iter().enumerate() {
                down[i] |= 1 << i;
                let mut rest = u;
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    down[j] |= 1 << i;
                }
            }
            let ideal_count = (0u32..(1 << n))
                .filter(|&s| (0..n).all(|j| s >> j & 1 == 0 || down[j] & !s == 0))
                .count();
            if ideal_count >= 2 && ideal_count <= max_m {
                let (sz, form) = ideal_lattice_of_relation(n, &up);
                assert_eq!(sz, ideal_count);
                per_m[ideal_count].insert(form);
            }
        }
    }
    let pinned = [1usize, 1, 2, 3, 5, 8, 15]; // sizes 2..=8
    for m in 2..=max_m {
        assert_eq!(
            per_m[m].len(),
            pinned[m - 2],
            "distributive lattices with {m} elements (brute force)"
        );
        let census: HashSet<CanonicalForm> = census_distributive_lattices(m)
            .unwrap()
            .into_iter()
            .map(|e| e.canonical)
            .collect();
        assert_eq!(census, per_m[m], "census class set at size {m}");
    }
}

#[test]
fn birkhoff_round_trip_on_census() {
    for m in 2..=7 {
        for e in census_distributive_lattices(m).unwrap() {
            let irr = e.lattice.join_irreducibles();
            let back = irr.order_ideals().unwrap();
            assert_eq!(CanonicalForm::of(&back), e.canonical, "size {m}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_survives_relabeling(p in arb_poset(6), seed in any::<u64>()) {
        let base = CanonicalForm::of(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..p.size()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            prop_assert_eq!(&CanonicalForm::of(&relabel(&p, &perm)), &base);
        }
    }

    #[test]
    fn order_ideals_form_distributive_lattices(p in arb_poset(5)) {
        let lattice = p.order_ideals().unwrap();
        prop_assert!(lattice.distributivity_check().is_distributive_lattice());
    }

    #[test]
    fn constructed_algebras_pass_the_validator(p in arb_poset(4), qmask in 0u64..64) {
        let a = incidence_algebra(q(), &p).unwrap();
        a.validate().unwrap();
        let t = trivial_extension(&a);
        t.validate().unwrap();
        prop_assert_eq!(t.dim(), 2 * a.dim());
        for x in t.basis() {
            for y in t.basis() {
                if x.degree == 1 && y.degree == 1 {
                    prop_assert!(t.mult(x.index, y.index).is_empty());
                }
            }
        }
        // a small acyclic quiver on 3 vertices from the mask bits
        let names = ["a", "b", "c", "d", "e", "f"];
        let mut arrows = Vec::new();
        let mut k = 0;
        for i in 0..3usize {
            for j in (i + 1)..3 {
                for copy in 0..2 {
                    if qmask >> k & 1 == 1 {
                        arrows.push(Arrow {
                            source: i,
                            target: j,
                            label: format!("{}{}", names[k], copy),
                        });
                    }
                    k += 1;
                }
            }
        }
        let pa = path_algebra(q(), &Quiver::new(3, arrows).unwrap()).unwrap();
        pa.validate().unwrap();
        trivial_extension(&pa).validate().unwrap();
    }

    #[test]
    fn incidence_cartan_is_unimodular_for_bounded_posets(p in arb_poset(5)) {
        let n = p.size();
        // adjoin a global bottom (index 0) and top (index n + 1)
        let mut covers: Vec<(usize, usize)> =
            p.covers().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        for v in 0..n {
            if (0..n).all(|u| u == v || !p.leq(u, v)) {
                covers.push((0, v + 1));
            }
            if (0..n).all(|u| u == v || !p.leq(v, u)) {
                covers.push((v + 1, n + 1));
            }
        }
        let bounded = Poset::from_covers(n + 2, covers, None, "bounded").unwrap();
        let a = incidence_algebra(q(), &bounded).unwrap();
        let cp = char_poly(&a.cartan_matrix()).unwrap();
        let det_abs = cp.coeffs()[0].clone();
        prop_assert!(
            det_abs == BigInt::from(1) || det_abs == BigInt::from(-1),
            "Cartan determinant must be a unit, char poly constant {}",
            det_abs
        );
    }
}

/// The trace form of a trivial extension: lambda vanishes on degree 0 and
/// picks out duals of idempotents in degree 1; beta(x, y) = lambda(xy).
fn trace_form(a: &BasedAlgebra, t: &BasedAlgebra) -> ExactMatrix {
    let f = t.field();
    let lam: Vec<bool> = t
        .basis()
        .iter()
        .map(|b| b.degree == 1 && a.basis()[b.index - a.dim()].kind == BasisKind::Idempotent)
        .collect();
    ExactMatrix::from_fn(f, t.dim(), t.dim(), |i, j| {
        let mut acc = f.zero();
        for (k, c) in t.mult(i, j) {
            if lam[*k] {
                acc = f.add(&acc, c);
            }
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn trivial_extension_trace_form_is_symmetric_and_nondegenerate(p in arb_poset(4)) {
        let a = incidence_algebra(q(), &p).unwrap();
        let t = trivial_extension(&a);
        let f = t.field();
        let beta = trace_form(&a, &t);
        prop_assert_eq!(&beta.transpose(), &beta, "form must be symmetric");
        prop_assert_eq!(beta.rows(), t.dim());
        prop_assert_eq!(beta.rank(), t.dim(), "form must be nondegenerate");
        // associativity beta(xy, z) = beta(x, yz), expanded on the basis
        for x in 0..t.dim() {
            for y in 0..t.dim() {
                for z in 0..t.dim() {
                    let mut left = f.zero();
                    for (k, c) in t.mult(x, y) {
                        left = f.add(&left, &f.mul(c, beta.at(*k, z)));
                    }
                    let mut right = f.zero();
                    for (k, c) in t.mult(y, z) {
                        right = f.add(&right, &f.mul(c, beta.at(x, *k)));
                    }
                    prop_assert_eq!(left, right, "triple ({}, {}, {})", x, y, z);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn syzygy_covers_are_exact_and_minimal(p in arb_poset(4)) {
        let a = incidence_algebra(q(), &p).unwrap();
        let t = trivial_extension(&a);
        let f = t.field();
        for v in 0..t.vertices() {
            let mut cur = RightModule::simple(&t, v);
            for _ in 0..3 {
                let cover = projective_cover(&cur);
                // minimality: multiplicities equal the top dimensions,
                // recomputed here as dim minus radical-image rank
                for w in 0..t.vertices() {
                    let dim_w = cur.vertex_dims()[w];
                    let mut rows: Vec<Vec<Scalar>> = Vec::new();
                    for b in t.basis() {
                        if b.kind == BasisKind::Radical && b.target == w {
                            let act = cur.action(b.index);
                            for r in 0..act.rows() {
                                rows.push(act.row(r).to_vec());
                            }
                        }
                    }
                    let rad_rank = if rows.is_empty() {
                        0
                    } else {
                        ExactMatrix::from_fn(f, rows.len(), dim_w, |i, j| rows[i][j].clone())
                            .rank()
                    };
                    prop_assert_eq!(cover.multiplicities[w], dim_w - rad_rank);
                }
                let s = syzygy_from_cover(&cur, &cover);
                // exactness: dim P = dim M + dim Omega(M), per vertex
                prop_assert_eq!(
                    cover.cover.total_dim(),
                    cur.total_dim() + s.total_dim()
                );
                for u in 0..t.vertices() {
                    prop_assert_eq!(
                        cover.cover.vertex_dims()[u],
                        cur.vertex_dims()[u] + s.vertex_dims()[u]
                    );
                    // surjectivity of the cover map
                    prop_assert_eq!(cover.maps[u].rank(), cur.vertex_dims()[u]);
                }
                s.validate().unwrap();
                if s.is_zero() {
                    break;
                }
                cur = s;
            }
        }
    }
}

/// Rebuilds an algebra through the public constructor with a patched
/// multiplication table.
fn rebuild_with(
    a: &BasedAlgebra,
    patch: impl FnOnce(&mut Vec<SparseVec>),
) -> Result<BasedAlgebra, AlgebraError> {
    let dim = a.dim();
    let mut mult: Vec<SparseVec> = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            mult.push(a.mult(i, j).to_vec());
        }
    }
    patch(&mut mult);
    BasedAlgebra::new(
        a.field(),
        a.vertices(),
        a.basis().to_vec(),
        (0..a.vertices()).map(|v| a.idempotent(v)).collect(),
        mult,
        "corrupted".into(),
    )
}

/// A one-vertex table with basis {e, r}, r marked radical, and r*r set by
/// the caller; everything else is the k[x]/(x^2) table.
fn one_vertex_table(rr: SparseVec) -> Result<BasedAlgebra, AlgebraError> {
    let f = q();
    let basis = vec![
        BasisElement {
            index: 0,
            source: 0,
            target: 0,
            kind: BasisKind::Idempotent,
            degree: 0,
            label: "e".into(),
        },
        BasisElement {
            index: 1,
            source: 0,
            target: 0,
            kind: BasisKind::Radical,
            degree: 0,
            label: "r".into(),
        },
    ];
    let mult = vec![
        vec![(0, f.one())], // e e
        vec![(1, f.one())], // e r
        vec![(1, f.one())], // r e
        rr,
    ];
    BasedAlgebra::new(f, 1, basis, vec![0], mult, "hand table".into())
}

#[test]
fn validator_rejects_five_corrupted_tables() {
    let find = |a: &BasedAlgebra, s: usize, t: usize| {
        a.basis()
            .iter()
            .find(|b| b.kind == BasisKind::Radical && b.source == s && b.target == t)
            .map(|b| b.index)
            .unwrap()
    };

    // control: the honest k[x]/(x^2) table passes
    one_vertex_table(vec![]).unwrap();

    // 1: scale one interior product — associativity breaks further down
    // the path a1 a2 a3
    let a4 = path_algebra(q(), &Quiver::linear(4)).unwrap();
    let (a1, a2) = (find(&a4, 0, 1), find(&a4, 1, 2));
    let two = q().from_i64(2);
    let dim = a4.dim();
    let res = rebuild_with(&a4, |mult| {
        let entry = &mut mult[a1 * dim + a2];
        entry[0].1 = two;
    });
    assert!(matches!(res, Err(AlgebraError::Invalid(ref m)) if m.contains("associativity")));

    // 2: distinct idempotents with a nonzero product
    let a2q = path_algebra(q(), &Quiver::linear(2)).unwrap();
    let dim2 = a2q.dim();
    let (e0, e1) = (a2q.idempotent(0), a2q.idempotent(1));
    let res = rebuild_with(&a2q, |mult| {
        mult[e0 * dim2 + e1] = vec![(e0, q().one())];
    });
    assert!(matches!(res, Err(AlgebraError::Invalid(ref m)) if m.contains("orthogonal")));

    // 3: a product of non-composable elements
    let alpha = find(&a2q, 0, 1);
    let res = rebuild_with(&a2q, |mult| {
        mult[alpha * dim2 + alpha] = vec![(alpha, q().one())];
    });
    assert!(matches!(res, Err(AlgebraError::Invalid(ref m)) if m.contains("compatibility")));

    // 4: radical square landing on an idempotent (a group-algebra table
    // with the wrong radical marking)
    let res = one_vertex_table(vec![(0, q().one())]);
    assert!(matches!(res, Err(AlgebraError::Invalid(ref m)) if m.contains("radical")));

    // 5: idempotent-like radical — the radical chain never shrinks
    let res = one_vertex_table(vec![(1, q().one())]);
    assert!(matches!(res, Err(AlgebraError::Invalid(ref m)) if m.contains("nilpotent")));
}

#[test]
fn periodic_verdict_permutation_is_consistent() {
    // T(kA_2): sigma is the swap, so n steps land at sigma(v) and n more
    // at sigma(sigma(v)) = v
    let a = path_algebra(q(), &Quiver::linear(2)).unwrap();
    let t = trivial_extension(&a);
    let report = syzygy_orbit(&t, &OrbitOptions::default());
    let PeriodicityVerdict::Periodic { n, sigma, .. } = &report.verdict else {
        panic!("T(kA_2) must be periodic, got {:?}", report.verdict);
    };
    assert_eq!(sigma, &vec![1, 0]);
    for v in 0..t.vertices() {
        let mut cur = RightModule::simple(&t, v);
        for _ in 0..*n {
            cur = syzygy(&cur);
        }
        assert_eq!(cur.simple_support(), Some(sigma[v]));
        for _ in 0..*n {
            cur = syzygy(&cur);
        }
        assert_eq!(cur.simple_support(), Some(sigma[sigma[v]]));
    }
}
