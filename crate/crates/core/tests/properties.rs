use coeffbounds::caratheodory::{
    caratheodory_to_schwarz, carlson_feasible, coeffs_from_measure, schur_to_schwarz, schwarz_to_caratheodory,
};
use coeffbounds::functionals::{gamma_diff, gamma_inv_diff, hankel_log, hankel_log_inverse, log_coeffs, log_inverse_coeffs};
use coeffbounds::lemmas::{fekete_szego_bound, ps_region_classify, psi_minus_bound, psi_plus_bound};
use coeffbounds::walpha::taylor_from_caratheodory;
use coeffbounds::{bounds, Alpha, AtomicMeasure, CarCoeffs, Complex64, PsiInputs, SchurParams, TaylorPrefix};
use proptest::prelude::*;

fn disk() -> impl Strategy<Value = Complex64> {
    (0.0..=1.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r.sqrt(), t))
}

fn complex(scale: f64) -> impl Strategy<Value = Complex64> {
    (-scale..scale, -scale..scale).prop_map(|(a, b)| Complex64::new(a, b))
}

fn measure() -> impl Strategy<Value = AtomicMeasure> {
    prop::collection::vec((0.01..1.0f64, 0.0..std::f64::consts::TAU), 1..6).prop_map(|atoms| {
        let total: f64 = atoms.iter().map(|a| a.0).sum();
        AtomicMeasure::new(atoms.into_iter().map(|(w, t)| (w / total, t)).collect()).unwrap()
    })
}

fn prefix() -> impl Strategy<Value = TaylorPrefix> {
    (complex(2.0), complex(3.0), complex(4.0)).prop_map(|(a2, a3, a4)| TaylorPrefix::new(a2, a3, a4))
}

fn alpha() -> impl Strategy<Value = Alpha> {
    (0.0..50.0f64).prop_map(|a| Alpha::new(a).unwrap())
}

proptest! {
    #[test]
    fn schur_parameters_give_feasible_schwarz_coefficients(t1 in disk(), t2 in disk(), t3 in disk()) {
        let c = schur_to_schwarz(&SchurParams::new(t1, t2, t3).unwrap());
        prop_assert!(carlson_feasible(&c));
        let p = schwarz_to_caratheodory(&c);
        prop_assert!(p.within_caratheodory_bound());
    }

    #[test]
    fn schwarz_caratheodory_round_trip(t1 in disk(), t2 in disk(), t3 in disk()) {
        let c = schur_to_schwarz(&SchurParams::new(t1, t2, t3).unwrap());
        let back = caratheodory_to_schwarz(&schwarz_to_caratheodory(&c));
        prop_assert!((back.c1 - c.c1).norm() < 1e-13);
        prop_assert!((back.c2 - c.c2).norm() < 1e-13);
        prop_assert!((back.c3 - c.c3).norm() < 1e-13);
    }

    #[test]
    fn measures_respect_caratheodory_and_carlson(m in measure()) {
        let p = coeffs_from_measure(&m);
        prop_assert!(p.within_caratheodory_bound());
        prop_assert!(carlson_feasible(&caratheodory_to_schwarz(&p)));
    }

    #[test]
    fn coefficient_map_is_linear(a in alpha(), p in (complex(2.0), complex(2.0), complex(2.0)),
                                 q in (complex(2.0), complex(2.0), complex(2.0)), s in -3.0..3.0f64) {
        let p = CarCoeffs::new(p.0, p.1, p.2);
        let q = CarCoeffs::new(q.0, q.1, q.2);
        let sum = CarCoeffs::new(p.p1 + s * q.p1, p.p2 + s * q.p2, p.p3 + s * q.p3);
        let (tp, tq, ts) = (taylor_from_caratheodory(a, &p), taylor_from_caratheodory(a, &q), taylor_from_caratheodory(a, &sum));
        prop_assert!((ts.a2 - (tp.a2 + s * tq.a2)).norm() < 1e-12);
        prop_assert!((ts.a3 - (tp.a3 + s * tq.a3)).norm() < 1e-12);
        prop_assert!((ts.a4 - (tp.a4 + s * tq.a4)).norm() < 1e-12);
    }

    #[test]
    fn functionals_are_rotation_invariant(a in prefix(), theta in 0.0..std::f64::consts::TAU) {
        let r = a.rotated(theta);
        let (g, gr) = (log_coeffs(&a), log_coeffs(&r));
        let (h, hr) = (log_inverse_coeffs(&a), log_inverse_coeffs(&r));
        for (x, y, n) in [(g.g1, gr.g1, 1.0), (g.g2, gr.g2, 2.0), (g.g3, gr.g3, 3.0),
                          (h.g1, hr.g1, 1.0), (h.g2, hr.g2, 2.0), (h.g3, hr.g3, 3.0)] {
            let scale = 1.0 + x.norm();
            prop_assert!((y - x * Complex64::from_polar(1.0, n * theta)).norm() < 1e-12 * scale);
        }
        prop_assert!((gamma_diff(&a) - gamma_diff(&r)).abs() < 1e-12 * (1.0 + gamma_diff(&a).abs()));
        prop_assert!((gamma_inv_diff(&a) - gamma_inv_diff(&r)).abs() < 1e-12 * (1.0 + gamma_inv_diff(&a).abs()));
        let hn = hankel_log(&a).norm();
        prop_assert!((hn - hankel_log(&r).norm()).abs() < 1e-12 * (1.0 + hn));
        let hin = hankel_log_inverse(&a).norm();
        prop_assert!((hin - hankel_log_inverse(&r).norm()).abs() < 1e-12 * (1.0 + hin));
    }

    #[test]
    fn member_functionals_never_beat_the_bounds(a in alpha(), t1 in disk(), t2 in disk(), t3 in disk()) {
        let c = schur_to_schwarz(&SchurParams::new(t1, t2, t3).unwrap());
        let f = taylor_from_caratheodory(a, &schwarz_to_caratheodory(&c));
        let g = log_coeffs(&f);
        let h = log_inverse_coeffs(&f);
        let tol = 1e-12;
        for (n, gn, hn) in [(1u8, g.g1, h.g1), (2, g.g2, h.g2), (3, g.g3, h.g3)] {
            prop_assert!(gn.norm() <= bounds::bound_gamma(n, a).unwrap() + tol);
            prop_assert!(hn.norm() <= bounds::bound_gamma_inv(n, a).unwrap() + tol);
        }
        let (u, l) = bounds::bound_gamma_diff(a);
        prop_assert!(l - tol <= gamma_diff(&f) && gamma_diff(&f) <= u + tol);
        let (u, l) = bounds::bound_gamma_inv_diff(a);
        prop_assert!(l - tol <= gamma_inv_diff(&f) && gamma_inv_diff(&f) <= u + tol);
    }

    #[test]
    fn fekete_szego_is_continuous(v in -5.0..5.0f64) {
        let h = 1e-9;
        prop_assert!((fekete_szego_bound(v + h) - fekete_szego_bound(v)).abs() <= 4.0 * h + 1e-15);
    }

    #[test]
    fn psi_bounds_dominate_measures(b1 in 0.0..1.0f64, b2 in complex(1.0), b3 in -1.0..1.0f64, m in measure()) {
        let b = PsiInputs::new(b1, b2, b3).unwrap();
        let p = coeffs_from_measure(&m);
        let v = b.psi_plus(p.p1, p.p2);
        prop_assert!(v <= psi_plus_bound(&b) + 1e-12);
        if let Ok(minus) = psi_minus_bound(&b) {
            prop_assert!(-v <= minus + 1e-12);
        }
    }

    #[test]
    fn region_bound_dominates_schwarz_functions(mu in -6.0..6.0f64, nu in -6.0..6.0f64,
                                               t1 in disk(), t2 in disk(), t3 in disk()) {
        let label = ps_region_classify(mu, nu);
        if let Some(bound) = label.bound {
            let c = schur_to_schwarz(&SchurParams::new(t1, t2, t3).unwrap());
            let v = (c.c3 + mu * c.c1 * c.c2 + nu * c.c1 * c.c1 * c.c1).norm();
            prop_assert!(v <= bound + 1e-12, "({}, {}) in {}: {} > {}", mu, nu, label, v, bound);
        }
    }

    #[test]
    fn piecewise_bounds_use_the_covering_piece(a in 0.0..30.0f64) {
        for pb in bounds::piecewise_bounds() {
            let piece = pb.piece_at(a);
            prop_assert!(piece.lo <= a && a <= piece.hi);
            prop_assert_eq!(pb.eval(a), (piece.eval)(a));
        }
    }
}
