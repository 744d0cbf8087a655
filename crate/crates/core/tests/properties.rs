use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qloci::lacing::{pi, pipes_to_laces};
use qloci::perm::all_permutations;
use qloci::quiver::zelevinsky;
use qloci::{BipartiteQuiver, LacingDiagram, LaurentPoly, OrbitData, PartialPermutation, Permutation, PipeDream, VarId};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn partial_perm() -> impl Strategy<Value = PartialPermutation> {
    (0usize..4, 0usize..4).prop_flat_map(|(r, c)| {
        let all = PartialPermutation::all(r, c);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn quiver() -> impl Strategy<Value = BipartiteQuiver> {
    (1usize..=2).prop_flat_map(|n| {
        (prop::collection::vec(0usize..=2, n + 1), prop::collection::vec(0usize..=2, n))
            .prop_map(|(dy, dx)| BipartiteQuiver::new(dy, dx).unwrap())
    })
}

fn diagram() -> impl Strategy<Value = (BipartiteQuiver, LacingDiagram)> {
    quiver().prop_flat_map(|q| {
        let all = LacingDiagram::all(&q);
        (0..all.len()).prop_map(move |i| (q.clone(), all[i].clone()))
    })
}

fn orbit() -> impl Strategy<Value = (BipartiteQuiver, OrbitData)> {
    quiver().prop_flat_map(|q| {
        let all = OrbitData::enumerate(&q);
        (0..all.len()).prop_map(move |i| (q.clone(), all[i].clone()))
    })
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    let var = (0usize..2, 1usize..3, any::<bool>()).prop_map(|(k, i, s)| if s { VarId::s(k + 1, i) } else { VarId::t(k, i) });
    prop::collection::vec((prop::collection::vec((var, -2i32..=2), 0..3), -3i64..=3), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (powers, c) in terms {
            p.add_term(qloci::Monomial::from_powers(powers), BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn inverse_and_length(u in perm(6), v in perm(6)) {
        prop_assert_eq!(u.compose(&u.inverse()), Permutation::identity());
        prop_assert_eq!(u.length(), u.inverse().length());
        prop_assert!(u.compose(&v).length() <= u.length() + v.length());
        prop_assert_eq!(u.compose(&v).length() % 2, (u.length() + v.length()) % 2);
    }

    #[test]
    fn demazure_product_laws(u in perm(5), v in perm(5), w in perm(5)) {
        let uv = u.demazure_product(&v);
        prop_assert_eq!(uv.demazure_product(&w), u.demazure_product(&v.demazure_product(&w)));
        prop_assert!(uv.length() >= u.length().max(v.length()));
        prop_assert!(uv.length() <= u.length() + v.length());
        if u.compose(&v).length() == u.length() + v.length() {
            prop_assert_eq!(uv, u.compose(&v));
        }
    }

    #[test]
    fn rotation_and_shift(u in perm(5), m in 0usize..3) {
        prop_assert_eq!(u.rotate(5).rotate(5), u.clone());
        prop_assert_eq!(u.rotate(5).length(), u.length());
        prop_assert_eq!(u.embed_shift(m).length(), u.length());
    }

    #[test]
    fn completion_truncates_back(w in partial_perm()) {
        let c = w.complete();
        prop_assert_eq!(c.truncate(w.rows(), w.cols()), w.clone());
        prop_assert_eq!(w.rot().rot(), w.clone());
        // no completion in the same group is shorter
        let d = w.rows() + w.cols() - w.rank();
        for e in all_permutations(d) {
            if e.truncate(w.rows(), w.cols()) == w {
                prop_assert!(e.length() >= c.length());
            }
        }
    }

    #[test]
    fn diagrams_extend_and_truncate((q, w) in diagram()) {
        let ext = w.extend();
        prop_assert!(ext.is_completion(&q));
        prop_assert_eq!(ext.truncate(&q), w.clone());
        prop_assert_eq!(ext.length(), w.crossings());
        let o = w.orbit(&q);
        prop_assert!(o.validate(&q).is_ok());
    }

    #[test]
    fn pipe_dreams_map_to_the_orbit((q, o) in orbit()) {
        let v = zelevinsky(&q, &o).unwrap();
        let space = qloci::lacing::snake_space(&q).unwrap();
        for mask in space.generate_target(&v) {
            let p: PipeDream = space.to_dream(mask);
            prop_assert_eq!(p.demazure(), v.clone());
            if p.is_reduced() {
                let w = pipes_to_laces(&q, &p).unwrap();
                prop_assert_eq!(pi(&q, &p).unwrap().truncate(&q), w.clone());
                prop_assert_eq!(w.orbit(&q), o.clone());
                prop_assert!(w.is_minimal(&q));
            }
        }
    }

    #[test]
    fn polynomial_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &LaurentPoly::zero());
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
    }

    #[test]
    fn series_at_matches_eval(a in small_poly(), xs in prop::collection::vec(-5i64..=5, 12)) {
        let vars = a.variables();
        let point: HashMap<VarId, BigInt> = vars.iter().zip(xs.iter().cycle()).map(|(&v, &x)| (v, BigInt::from(x))).collect();
        let rational: HashMap<VarId, BigRational> = point.iter().map(|(&v, x)| (v, BigRational::from_integer(x.clone()))).collect();
        let series = a.series_at(&point, 3).unwrap();
        for (d, x) in series.iter().enumerate() {
            prop_assert_eq!(BigRational::from_integer(x.clone()), a.series_part(d).eval(&rational).unwrap());
        }
    }
}
