use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use wpsing::bpfamily::{bp_analyze, bp_wly_data};
use wpsing::exactmath::{
    det_exact, hj_evaluate, hj_expansion, int, mod_inverse, rat, smith_normal_form, IntMatrix, RatMatrix, Rational,
};
use wpsing::fpgroups::{
    abelianization, group_order, reidemeister_schreier, Builder, CosetTable, EnumerationResult, Transversal,
};
use wpsing::leyomdin::{
    cyclic_germ_det, ly_det, si_det, si_intersection_matrix, wly_det, wly_det_rational, wly_intersection_matrix,
    CyclicGerm, WlyCurveData,
};
use wpsing::plumbing::{
    det_rational, intersection_matrix, resolve_quotient_point, solve_self_intersections, PlumbingGraph, Vertex,
};
use wpsing::poly::{are_collinear, cremona_push, kummer_pull, MultiPoly, Qz};
use wpsing::quotientsing::{bamboo_weights, normalize, order, resolve_bamboo, CyclicQuotient};
use wpsing::wproj::{bezout, normalize_weight, CremonaParams, Weight3};

// ---------- oracles ----------

fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<Rational>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
            let s = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            s * &m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k x k minors, the k-th determinantal divisor.
fn minor_gcd(m: &[Vec<i64>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.len(), k) {
        for cs in subsets(m[0].len(), k) {
            let sub: Vec<Vec<Rational>> = rs.iter().map(|&r| cs.iter().map(|&c| int(m[r][c])).collect()).collect();
            g = g.gcd(&cofactor_det(&sub).to_integer());
        }
    }
    g
}

fn poly_from(terms: &[([u64; 3], i64)]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(3), |acc, (e, c)| &acc + &MultiPoly::monomial(3, e.to_vec(), Qz::from_i64(*c)))
}

fn homogeneous(n: u64) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0..=n, 0..=n, -5i64..=5), 1..5).prop_map(move |v| {
        let terms: Vec<([u64; 3], i64)> =
            v.into_iter().filter(|&(a, b, _)| a + b <= n).map(|(a, b, c)| ([a, b, n - a - b], c)).collect();
        poly_from(&terms)
    })
}

fn any_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u64..4, 0u64..4, 0u64..4, -5i64..=5), 0..5)
        .prop_map(|v| poly_from(&v.into_iter().map(|(a, b, c, k)| ([a, b, c], k)).collect::<Vec<_>>()))
}

fn cremona() -> impl Strategy<Value = CremonaParams> {
    (1u64..6, 1u64..6, 0u64..8, 0u64..8).prop_filter_map("valid Cremona data", |(a1, a2, b1, b2)| {
        let a3 = (a1 * b1 + a2 * b2).checked_sub(a1 * a2)?;
        CremonaParams::new([a1, a2, a3], [b1, b2]).ok()
    })
}

fn qz() -> impl Strategy<Value = Qz> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| Qz::new(int(a), int(b)))
}

fn nonzero_qz() -> impl Strategy<Value = Qz> {
    qz().prop_filter("nonzero", |z| !z.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_matches_determinantal_divisors(rows in 1usize..4, cols in 1usize..4, seed in prop::collection::vec(-9i64..=9, 9)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 3 + j]).collect()).collect();
        let f = smith_normal_form(&IntMatrix::from_rows(&m).unwrap());
        let mut prod = BigInt::one();
        for k in 1..=rows.min(cols) {
            prod *= &f[k - 1];
            prop_assert_eq!(prod.abs(), minor_gcd(&m, k));
        }
        for w in f.windows(2) {
            prop_assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn bareiss_matches_cofactor(n in 1usize..5, nums in prop::collection::vec(-7i64..=7, 16), dens in prop::collection::vec(1i64..=4, 16)) {
        let rows: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| rat(nums[i * 4 + j], dens[i * 4 + j])).collect()).collect();
        let m = RatMatrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(det_exact(&m).unwrap(), cofactor_det(&rows));
    }

    #[test]
    fn hj_round_trip(d in 2i64..200, a in 1i64..200) {
        prop_assume!(a < d && a.gcd(&d) == 1);
        let bs = hj_expansion(d, a).unwrap();
        prop_assert!(bs.iter().all(|&b| b >= 2));
        prop_assert_eq!(hj_evaluate(&bs), rat(d, a));
    }

    #[test]
    fn mod_inverse_is_inverse(a in -500i64..500, m in 1i64..500) {
        match mod_inverse(a, m) {
            Ok(r) => {
                prop_assert!((0..m).contains(&r));
                prop_assert_eq!((a * r).rem_euclid(m), 1 % m);
            }
            Err(_) => prop_assert_ne!(a.gcd(&m), 1),
        }
    }

    #[test]
    fn quotient_normalization(d in 1u64..60, a in 0i64..60, b in 0i64..60) {
        let Ok(s) = CyclicQuotient::new(d, a, b) else { return Ok(()) };
        let n = normalize(&s);
        prop_assert_eq!(normalize(&n.to_cyclic()), n);
        prop_assert_eq!(n.dual().dual(), n);
        prop_assert_eq!(normalize(&CyclicQuotient::new(d, b, a).unwrap()), n.dual());
        if !n.is_smooth() {
            let g = resolve_bamboo(&n).unwrap();
            prop_assert_eq!(det_rational(&g).unwrap(), int(order(&s) as i64));
            let mut rev = bamboo_weights(&n.dual()).unwrap();
            rev.reverse();
            prop_assert_eq!(rev, bamboo_weights(&n).unwrap());
        }
    }

    #[test]
    fn weight_reassembly(e1 in 1u64..200, e2 in 1u64..200, e3 in 1u64..200) {
        let Ok(w) = Weight3::new(e1, e2, e3) else { return Ok(()) };
        let n = normalize_weight(&w);
        let e = w.e();
        for (k, (i, j)) in [(1, 2), (0, 2), (0, 1)].into_iter().enumerate() {
            prop_assert_eq!(e[k], n.alpha[k] * n.d[i] * n.d[j]);
        }
    }

    #[test]
    fn bezout_symmetric_bilinear(a in 0u64..50, b in 0u64..50, c in 0u64..50, e1 in 1u64..9, e2 in 1u64..9, e3 in 1u64..9) {
        let Ok(w) = Weight3::new(e1, e2, e3) else { return Ok(()) };
        prop_assert_eq!(bezout(a, b, &w), bezout(b, a, &w));
        prop_assert_eq!(bezout(a + c, b, &w), bezout(a, b, &w) + bezout(c, b, &w));
    }

    #[test]
    fn cremona_push_multiplicative(f in any_poly(), g in any_poly(), p in cremona()) {
        let fg = f.try_mul(&g).unwrap();
        let lhs = cremona_push(&fg, &p).unwrap();
        let rhs = cremona_push(&f, &p).unwrap().try_mul(&cremona_push(&g, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cremona_degree_law(f in (1u64..4).prop_flat_map(homogeneous), p in cremona()) {
        prop_assume!(!f.is_zero());
        let deg = f.total_degree().unwrap();
        let pushed = cremona_push(&f, &p).unwrap();
        prop_assert_eq!(pushed.weighted_homogeneous_degree(&p.alpha).unwrap(), Some(deg * p.degree_unit()));
    }

    #[test]
    fn kummer_composition(f in any_poly(), a in prop::array::uniform3(0u32..3), b in prop::array::uniform3(0u32..3)) {
        let primes = [2u64, 3, 5];
        let d: [u64; 3] = std::array::from_fn(|i| primes[i].pow(a[i]));
        let e: [u64; 3] = std::array::from_fn(|i| primes[i].pow(b[i]));
        let de: [u64; 3] = std::array::from_fn(|i| d[i] * e[i]);
        let twice = kummer_pull(&kummer_pull(&f, d).unwrap(), e).unwrap();
        prop_assert_eq!(twice, kummer_pull(&f, de).unwrap());
        prop_assert_eq!(kummer_pull(&f, [1, 1, 1]).unwrap(), f);
    }

    #[test]
    fn collinearity_is_projective(p in prop::array::uniform3(prop::array::uniform3(qz())),
                                  s in prop::array::uniform3(nonzero_qz()), perm in 0usize..6) {
        prop_assume!(p.iter().all(|x| x.iter().any(|c| !c.is_zero())));
        let base = are_collinear(&p[0], &p[1], &p[2]).unwrap();
        let scaled: Vec<[Qz; 3]> = (0..3).map(|i| p[i].clone().map(|c| &c * &s[i])).collect();
        let order = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]][perm];
        prop_assert_eq!(are_collinear(&scaled[order[0]], &scaled[order[1]], &scaled[order[2]]).unwrap(), base);
    }

    #[test]
    fn splice_preserves_determinant(self_num in -40i64..-1, orders in prop::collection::vec(2u64..12, 1..4), qs in prop::collection::vec(1u64..12, 4)) {
        let mut g = PlumbingGraph::default();
        g.add_vertex(Vertex::rational(int(self_num)).with_points(&orders));
        let before = det_rational(&g).unwrap();
        let mut h = g.clone();
        for (i, &d) in orders.iter().enumerate() {
            let q = (qs[i] % d).max(1);
            if q.gcd(&d) != 1 {
                continue;
            }
            let idx = h.vertices[0].quotient_points.iter().position(|&x| x == d).unwrap();
            h = resolve_quotient_point(&h, 0, idx, q).unwrap();
        }
        prop_assert_eq!(det_rational(&h).unwrap(), before);
    }

    #[test]
    fn solved_graph_kills_pullback(mults in prop::collection::vec(1i64..20, 2..5), contact in 0i64..5, ints in prop::collection::vec(1i64..4, 4)) {
        let mut g = PlumbingGraph::default();
        for (i, &m) in mults.iter().enumerate() {
            let c = if i == 0 { int(contact) } else { Rational::zero() };
            g.add_vertex(Vertex::unknown(0, int(m), c));
        }
        for i in 1..mults.len() {
            g.add_edge(i - 1, i, rat(1, ints[i - 1]));
        }
        let s = solve_self_intersections(&g).unwrap();
        let a = intersection_matrix(&s).unwrap();
        for v in 0..mults.len() {
            let total: Rational = (0..mults.len()).map(|u| int(mults[u]) * &a[(u, v)]).sum::<Rational>() + &s.vertices[v].contact;
            prop_assert!(total.is_zero());
        }
    }

    #[test]
    fn superisolated_three_ways(parts in prop::collection::vec(1u64..5, 1..4)) {
        let d: u64 = parts.iter().sum();
        let det = si_det(d, &parts).unwrap();
        let a = si_intersection_matrix(d, &parts).unwrap();
        prop_assert_eq!(det_exact(&a.neg()).unwrap(), Rational::from_integer(det.clone()));
        prop_assert_eq!(ly_det(d, 1, &parts, &[]).unwrap(), det.clone());
        let data = WlyCurveData::new(Weight3::new(1, 1, 1).unwrap(), 1, d, [false; 3], parts.clone(), vec![]).unwrap();
        prop_assert_eq!(wly_det(&data).unwrap(), det);
    }

    #[test]
    fn wly_closed_form_matches_matrix(k in 1u64..5, eps in prop::array::uniform3(any::<bool>()), mult in prop::collection::vec(1u64..3, 0..3), germs in prop::collection::vec(1u64..5, 0..3),
                                      w in prop::sample::select(vec![(1u64, 1u64, 1u64), (1, 2, 3), (2, 3, 5), (6, 10, 15), (2, 2, 1), (3, 1, 1)])) {
        let w = Weight3::new(w.0, w.1, w.2).unwrap();
        let dd: u64 = normalize_weight(&w).d.iter().product();
        let deltas: Vec<u64> = mult.iter().map(|m| m * dd).collect();
        let e = w.e();
        let d = deltas.iter().sum::<u64>() + (0..3).filter(|&i| eps[i]).map(|i| e[i]).sum::<u64>();
        let Ok(data) = WlyCurveData::new(w, k, d, eps, deltas, germs.clone()) else { return Ok(()) };
        let a = wly_intersection_matrix(&data);
        prop_assert!(a.is_symmetric());
        let direct = det_exact(&a.neg()).unwrap() * Rational::from_integer(germs.iter().map(|&g| BigInt::from(g)).product());
        prop_assert_eq!(direct, wly_det_rational(&data));
    }

    #[test]
    fn brieskorn_pham_as_wly(n1 in 1u64..10, n2 in 1u64..10, n3 in 1u64..10, k in 1u64..4) {
        let a = bp_analyze(n1, n2, n3).unwrap();
        let data = bp_wly_data(&a, k).unwrap();
        prop_assert_eq!(wly_det(&data).unwrap(), a.det);
    }

    #[test]
    fn germ_symmetry(a in 1u64..15, b in 1u64..15, k in 1u64..15) {
        let x = cyclic_germ_det(&CyclicGerm { a, b, k }).unwrap();
        let y = cyclic_germ_det(&CyclicGerm { a: b, b: a, k }).unwrap();
        prop_assert_eq!(x, y);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn order_divisible_by_abelian_order(p in cremona()) {
        prop_assume!(wpsing::fpgroups::conic_quotient_order(&p) <= 2000);
        let pres = Builder::ConicQuotient(p).presentation().unwrap();
        let order = group_order(&pres, 100_000).unwrap().index().unwrap();
        let ab = abelianization(&pres).order().unwrap();
        prop_assert!(BigInt::from(order).is_multiple_of(&ab));
        prop_assert_eq!(order as u64, wpsing::fpgroups::conic_quotient_order(&p));
    }

    #[test]
    fn rs_abelianization_independent_of_transversal(p in cremona()) {
        let pres = Builder::ConicQuotient(p).presentation().unwrap();
        let flips = [true, false, false, false];
        let t = CosetTable::index2_kernel(&pres, &flips).unwrap();
        let f = reidemeister_schreier(&pres, &t, Transversal::Forward).unwrap();
        let r = reidemeister_schreier(&pres, &t, Transversal::Reversed).unwrap();
        prop_assert_eq!(abelianization(&f), abelianization(&r));
        let k = wpsing::fpgroups::milnor_fiber_order(&p) * p.degree_unit();
        prop_assert_eq!(abelianization(&f).order(), Some(BigInt::from(k)));
    }

    #[test]
    fn coset_table_closes(n in 1u64..30) {
        let pres = Builder::Cyclic(n).presentation().unwrap();
        let EnumerationResult::Finished { index, table } = group_order(&pres, 1000).unwrap() else { panic!() };
        prop_assert_eq!(index as u64, n);
        table.check_relators(&pres).unwrap();
    }
}
