use proptest::prelude::*;

use rickart::lattice::projector_of;
use rickart::linalg::{
    col_space, is_invariant, is_moore_penrose_inverse, largest_invariant_subspace, null_space, pinv, rank, row_space,
    rref,
};
use rickart::order::{join_bounded, meet, meet_bounded};
use rickart::ring::{left_proj, right_ann, right_proj};
use rickart::star::star_leq;
use rickart::{Matrix, Scalar, Subspace};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=4, -4i64..=4, 1i64..=4, 0u8..3).prop_map(|(p, q, r, s, kind)| match kind {
        0 => Scalar::from_ratio(p, q),
        _ => Scalar::gaussian(p, q, r, s),
    })
}

/// Sparse-ish entries so that rank-deficient matrices show up often.
fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![2 => Just(Scalar::zero()), 3 => scalar()]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(entry(), rows * cols).prop_map(move |e| Matrix::new(rows, cols, e).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square() -> impl Strategy<Value = Matrix> {
    (1usize..=4).prop_flat_map(|n| matrix(n, n))
}

fn square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=4).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

fn subspaces(k: usize) -> impl Strategy<Value = Vec<Subspace>> {
    (1usize..=4).prop_flat_map(move |n| {
        prop::collection::vec((0usize..=n).prop_flat_map(move |r| matrix(r, n)), k)
            .prop_map(|ms| ms.iter().map(Subspace::from_spanning_rows).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn scalar_text_round_trips(s in scalar()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), s);
    }

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn rank_identities(a in any_matrix()) {
        let r = rank(&a);
        prop_assert_eq!(row_space(&a).dim(), r);
        prop_assert_eq!(col_space(&a).dim(), r);
        prop_assert_eq!(null_space(&a).dim(), a.cols() - r);
        let (red, _) = rref(&a);
        prop_assert_eq!(rank(&red), r);
        prop_assert_eq!(rank(&a.adjoint()), r);
    }

    #[test]
    fn penrose_equations(a in any_matrix()) {
        let ap = pinv(&a);
        prop_assert!(is_moore_penrose_inverse(&a, &ap));
        prop_assert_eq!(pinv(&ap), a);
    }

    #[test]
    fn annihilator_projections(x in any_matrix()) {
        let xp = pinv(&x);
        prop_assert_eq!(right_proj(&x).into_matrix(), &xp * &x);
        prop_assert_eq!(left_proj(&x).into_matrix(), &x * &xp);
        prop_assert!((&x * right_ann(&x).matrix()).is_zero());
    }

    #[test]
    fn modular_law(v in subspaces(3)) {
        let (u, v, w) = (&v[0], &v[1], &v[2]);
        // force u ⊆ w by replacing w with u + w
        let w = u.sum(w).unwrap();
        let lhs = u.sum(&v.intersect(&w).unwrap()).unwrap();
        let rhs = u.sum(v).unwrap().intersect(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orthocomplement_is_a_complement(v in subspaces(1)) {
        let u = &v[0];
        let c = u.orthocomplement();
        prop_assert!(u.intersect(&c).unwrap().is_zero());
        prop_assert_eq!(u.sum(&c).unwrap().dim(), u.ambient_dim());
        prop_assert_eq!(&c.orthocomplement(), u);
        prop_assert_eq!(projector_of(u).ortho(), projector_of(&c));
    }

    #[test]
    fn largest_invariant_subspace_is_largest(
        (w, ops, probe) in (1usize..=4).prop_flat_map(|n| {
            (
                (0usize..=n).prop_flat_map(move |r| matrix(r, n)),
                prop::collection::vec(matrix(n, n), 1..=2),
                matrix(1, n),
            )
        })
    ) {
        let w = Subspace::from_spanning_rows(&w);
        let v = largest_invariant_subspace(&w, &ops).unwrap();
        prop_assert!(w.contains(&v).unwrap());
        for op in &ops {
            prop_assert!(is_invariant(&v, op).unwrap());
        }
        // the cyclic subspace generated by a probe vector is invariant; if it
        // fits in w it must fit in v
        let n = w.ambient_dim();
        let mut cyclic = Subspace::from_spanning_rows(&probe);
        loop {
            let mut next = cyclic.clone();
            for op in &ops {
                next = next.sum(&cyclic.image(op).unwrap()).unwrap();
            }
            if next.dim() == cyclic.dim() {
                break;
            }
            cyclic = next;
        }
        prop_assert!(cyclic.dim() <= n);
        if w.contains(&cyclic).unwrap() {
            prop_assert!(v.contains(&cyclic).unwrap());
        }
    }

    #[test]
    fn star_order_respects_adjoint((a, b) in square_pair()) {
        prop_assert_eq!(star_leq(&a, &b), star_leq(&a.adjoint(), &b.adjoint()));
    }

    #[test]
    fn star_order_below_sum((a, r) in square_pair()) {
        // (I - a a†) r (I - a† a) is *-orthogonal to a
        let ap = pinv(&a);
        let n = a.rows();
        let i = Matrix::identity(n);
        let w = &(&(&i - &(&a * &ap)) * &r) * &(&i - &(&ap * &a));
        let b = &a + &w;
        prop_assert!(star_leq(&a, &b));
        prop_assert_eq!(meet_bounded(&a, &a, &b).unwrap(), a.clone());
        prop_assert_eq!(join_bounded(&a, &a, &b).unwrap(), a.clone());
        prop_assert_eq!(meet(&a, &b).meet, a);
    }

    #[test]
    fn meet_is_below_both((a, b) in square_pair()) {
        let m = meet(&a, &b).meet;
        prop_assert!(star_leq(&m, &a));
        prop_assert!(star_leq(&m, &b));
        prop_assert_eq!(meet(&b, &a).meet, m);
    }

    #[test]
    fn projector_matches_range(a in square()) {
        let e = projector_of(&col_space(&a));
        prop_assert!(e.matrix().is_projection());
        prop_assert_eq!(col_space(e.matrix()), col_space(&a));
    }
}
