use polyval::linear::{format_rat, int, parse_rat, rat, random_unimodular, rotate90};
use polyval::polytope::Hyperplane;
use polyval::valuations::facet_vector;
use polyval::{Matrix, Polytope, Vector, Zeta};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = polyval::Rat> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn point(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-6i64..=6, n).prop_map(|xs| Vector::from_ints(&xs))
}

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |xs| {
        let rows: Vec<&[i64]> = xs.chunks(n).collect();
        Matrix::from_int_rows(&rows).unwrap()
    })
}

proptest! {
    #[test]
    fn rational_strings_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn rotation_intertwines_inverse_transpose(seed in any::<u64>(), steps in 0usize..8, v in point(2)) {
        let phi = random_unimodular(2, seed, steps);
        let lhs = rotate90(&phi.apply(&v)).unwrap();
        let rhs = phi.inverse_transpose().unwrap().apply(&rotate90(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
    }

    #[test]
    fn inverse_transpose_is_an_involution(seed in any::<u64>(), n in 2usize..=4) {
        let m = random_unimodular(n, seed, 5);
        prop_assert!(m.is_unimodular());
        prop_assert_eq!(m.inverse_transpose().unwrap().inverse_transpose().unwrap(), m);
    }

    #[test]
    fn hull_is_idempotent_and_order_free(pts in prop::collection::vec(point(3), 1..9)) {
        let p = Polytope::hull(&pts).unwrap();
        prop_assert_eq!(&Polytope::hull(p.vertices()).unwrap(), &p);
        let mut rev = pts.clone();
        rev.reverse();
        prop_assert_eq!(Polytope::hull(&rev).unwrap(), p);
    }

    #[test]
    fn cut_pieces_split_the_volume(pts in prop::collection::vec(point(2), 3..8), normal in point(2), off in small_rat()) {
        let p = Polytope::hull(&pts).unwrap();
        prop_assume!(p.is_full_dimensional() && !normal.is_zero());
        let pieces = p.cut(&Hyperplane::new(normal, off).unwrap()).unwrap();
        let vol = |q: &Option<Polytope>| q.as_ref().map(Polytope::volume).unwrap_or_default();
        prop_assert_eq!(vol(&pieces.plus) + vol(&pieces.minus), p.volume());
    }

    #[test]
    fn facet_vector_is_linear_in_zeta(pts in prop::collection::vec(point(3), 4..8), a in small_rat(), b in small_rat()) {
        let p = Polytope::hull(&pts).unwrap();
        let (za, zb) = (Zeta::new(a.clone()), Zeta::new(b.clone()));
        let sum = &facet_vector(&p, &za) + &facet_vector(&p, &zb);
        prop_assert_eq!(facet_vector(&p, &Zeta::new(a + b)), sum);
    }

    #[test]
    fn facet_vector_scales_with_degree_n_minus_1(pts in prop::collection::vec(point(2), 3..7), s in 1i64..5) {
        let p = Polytope::hull(&pts).unwrap();
        let z = Zeta::identity();
        prop_assert_eq!(facet_vector(&p.scale(&int(s)), &z), facet_vector(&p, &z).scale(&int(s)));
    }
}
