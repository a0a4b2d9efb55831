use proptest::prelude::*;
use quivdim::combinatorics::{hasse_reduction, Order, Quiver};
use quivdim::criteria::{
    build_gamma, classify_critical, critical_subcategories, is_critical, pd_spectrum_check,
    resolution_shape_audit,
};
use quivdim::dsl::{parse_algebra, parse_spec, to_spec_text};
use quivdim::homology::{
    self, audit_exactness, audit_minimality, ext_dim, gl_dim, id_table,
    minimal_projective_resolution, pd, pd_table, resolve_simple,
};
use quivdim::presentation::IncidenceQuotient;
use quivdim::random::{random_algebra, RandomModel};
use quivdim::vertex_set::VertexSet;
use std::sync::Arc;

fn instance(seed: u64, n: usize) -> IncidenceQuotient {
    random_algebra(&RandomModel::new(seed, n)).unwrap()
}

fn arb_instance(max_n: usize) -> impl Strategy<Value = IncidenceQuotient> {
    (any::<u64>(), 1..=max_n).prop_map(|(seed, n)| instance(seed, n))
}

fn arb_pairs(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .collect();
        let len = pairs.len();
        (Just(n), proptest::sample::subsequence(pairs, 0..=len))
    })
}

/// hom(x, y) from first principles: some path x ⇝ y, and no path x ⇝ y runs
/// through both ends of a zero pair in order.
fn hom_by_paths(q: &IncidenceQuotient, x: usize, y: usize) -> bool {
    let paths = q.hasse().paths(x, y);
    if paths.is_empty() {
        return false;
    }
    !paths.iter().any(|p| {
        let vs = p.vertices();
        q.zeros().iter().any(|&(s, t)| {
            vs.iter()
                .position(|&v| v == s)
                .is_some_and(|a| vs[a..].contains(&t))
        })
    })
}

/// Subset scan: `x` induces a cycle of comparabilities, has no three-element
/// chain and is convex.
fn is_convex_crown(order: &Order, x: VertexSet) -> bool {
    let k = x.len();
    if k < 4 || k % 2 == 1 {
        return false;
    }
    let strict = |a: usize, b: usize| a != b && order.geq(a, b);
    let neighbours = |v: usize| x.iter().filter(|&w| strict(v, w) || strict(w, v)).count();
    if x.iter().any(|v| neighbours(v) != 2) {
        return false;
    }
    let chain = x.iter().any(|a| {
        x.iter()
            .any(|b| x.iter().any(|c| strict(a, b) && strict(b, c)))
    });
    let convex = (0..order.len()).all(|z| {
        x.contains(z)
            || !x
                .iter()
                .any(|a| x.iter().any(|b| strict(a, z) && strict(z, b)))
    });
    // connected: walk the cycle from the first element
    let start = x.first().unwrap();
    let (mut prev, mut cur, mut steps) = (usize::MAX, start, 0);
    loop {
        let next = x
            .iter()
            .find(|&w| w != prev && (strict(cur, w) || strict(w, cur)))
            .unwrap();
        prev = cur;
        cur = next;
        steps += 1;
        if cur == start {
            break;
        }
    }
    !chain && convex && steps == k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn convex_crown_search_matches_subset_scan((n, pairs) in arb_pairs(8)) {
        let order = Order::from_pairs(n, &pairs).unwrap();
        let scan = (0u64..1 << n).any(|m| is_convex_crown(&order, VertexSet(m)));
        let found = order.find_convex_crown();
        prop_assert_eq!(found.is_some(), scan);
        if let Some(c) = found {
            prop_assert!(is_convex_crown(&order, c.iter().copied().collect()));
        }
    }

    #[test]
    fn reduction_preserves_order((n, pairs) in arb_pairs(8)) {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let q = hasse_reduction(labels, &pairs).unwrap();
        let order = Order::from_pairs(n, &pairs).unwrap();
        prop_assert_eq!(q.reachability().unwrap(), order);
        prop_assert!(!q.has_bypass());
        prop_assert!(q.is_triangular());
    }

    #[test]
    fn irreducible_contours_are_not_interlaced((n, pairs) in arb_pairs(7)) {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let q = hasse_reduction(labels, &pairs).unwrap();
        for c in q.irreducible_contours() {
            prop_assert!(!c.is_interlaced());
            prop_assert!(q.is_irreducible(&c));
        }
    }

    #[test]
    fn opposite_quiver_keeps_shape((n, pairs) in arb_pairs(7)) {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let q = hasse_reduction(labels, &pairs).unwrap();
        let op = q.opposite();
        prop_assert!(op.is_triangular());
        prop_assert_eq!(op.contours().len(), q.contours().len());
        prop_assert_eq!(op.opposite(), q);
    }

    #[test]
    fn hom_support_matches_paths(q in arb_instance(8)) {
        let a = q.algebra();
        for x in 0..a.vertex_count() {
            for y in 0..a.vertex_count() {
                prop_assert_eq!(a.hom(x, y), hom_by_paths(&q, x, y), "({}, {})", x, y);
            }
        }
    }

    #[test]
    fn projectives_have_hom_support(q in arb_instance(7)) {
        let a = Arc::new(q.algebra().clone());
        for x in 0..a.vertex_count() {
            let p = homology::projective(&a, x);
            let dims: Vec<bool> = p.dims().iter().map(|&d| d == 1).collect();
            let expect: Vec<bool> = (0..a.vertex_count()).map(|y| hom_by_paths(&q, x, y)).collect();
            prop_assert_eq!(dims, expect);
        }
    }

    #[test]
    fn full_subcategory_idempotent(q in arb_instance(8), mask in any::<u64>()) {
        let a = q.algebra();
        let keep = VertexSet(mask).intersection(a.vertices());
        prop_assume!(!keep.is_empty());
        let b = a.full_subcategory(keep).unwrap();
        let again = b.full_subcategory(b.vertices()).unwrap();
        prop_assert_eq!(again.hom_rows(), b.hom_rows());
        for (bi, x) in keep.iter().enumerate() {
            for (bj, y) in keep.iter().enumerate() {
                prop_assert_eq!(b.hom(bi, bj), a.hom(x, y));
            }
        }
    }

    #[test]
    fn convex_hull_is_convex_and_preserves_ext(q in arb_instance(8), i in 0usize..8, j in 0usize..8) {
        let a = q.algebra();
        let n = a.vertex_count();
        let (i, j) = (i % n, j % n);
        prop_assume!(a.reach().geq(i, j));
        let hull = a.convex_hull_vertices(i, j);
        prop_assert!(a.quiver().is_convex(hull));
        let c = a.full_subcategory(hull).unwrap();
        let old = hull.to_vec();
        for (cx, &x) in old.iter().enumerate() {
            for (cy, &y) in old.iter().enumerate() {
                for k in 0..=3 {
                    prop_assert_eq!(ext_dim(&c, cx, cy, k), ext_dim(a, x, y, k));
                }
            }
        }
    }

    #[test]
    fn opposite_is_involution(q in arb_instance(8)) {
        let a = q.algebra();
        prop_assert_eq!(a.opposite().opposite(), a.clone());
    }

    #[test]
    fn resolutions_are_exact_and_minimal(q in arb_instance(8)) {
        let a = q.algebra();
        for x in 0..a.vertex_count() {
            let res = resolve_simple(a, x);
            let mut dims = vec![0; a.vertex_count()];
            dims[x] = 1;
            let (exact, messages) = audit_exactness(a, &res, &dims);
            prop_assert!(exact, "{:?}", messages);
            prop_assert!(audit_minimality(&res));
            let audit = resolution_shape_audit(a, x);
            prop_assert!(audit.passed(), "{:?}", audit);
        }
    }

    #[test]
    fn duality(q in arb_instance(8)) {
        let a = q.algebra();
        let op = a.opposite();
        prop_assert_eq!(pd_table(a), id_table(&op));
        prop_assert_eq!(id_table(a), pd_table(&op));
    }

    #[test]
    fn spectrum_has_no_gaps(q in arb_instance(9)) {
        prop_assert!(pd_spectrum_check(q.algebra()));
    }

    #[test]
    fn maximal_pd_modules_have_maximal_factors(q in arb_instance(7), x in 0usize..7) {
        let a = Arc::new(q.algebra().clone());
        let n = a.vertex_count();
        let gl = gl_dim(&a);
        let pds = pd_table(&a);
        let p = homology::projective(&a, x % n);
        let inj = homology::injective(&a, x % n);
        for m in [p.radical(), p.radical().radical(), inj.clone(), inj.radical()] {
            if m.is_zero() {
                continue;
            }
            if pd(&m).unwrap() == gl {
                prop_assert!(m.support().iter().any(|v| pds[v] == gl));
            }
        }
    }

    #[test]
    fn some_maximal_simple_avoids_the_others(q in arb_instance(8)) {
        let a = q.algebra();
        let pds = pd_table(a);
        let gl = gl_dim(a);
        let top: Vec<usize> = (0..a.vertex_count()).filter(|&v| pds[v] == gl).collect();
        let ok = top.iter().any(|&j| {
            let res = resolve_simple(a, j);
            (0..res.terms.len()).all(|k| {
                let dims = res.term_dims(a, k);
                top.iter().all(|&o| o == j || dims[o] == 0)
            })
        });
        prop_assert!(ok);
    }

    #[test]
    fn third_syzygy_pairs(q in arb_instance(9)) {
        let a = q.algebra();
        for i in 0..a.vertex_count() {
            let res = resolve_simple(a, i);
            if res.length() != 3 {
                continue;
            }
            for j in res.term_support(3).iter() {
                prop_assert!(!a.hom(i, j));
                let hull = a.convex_hull_vertices(i, j);
                let c = a.full_subcategory(hull).unwrap();
                let ci = hull.iter().position(|v| v == i).unwrap();
                prop_assert_eq!(homology::pd_simple(&c, ci), 3);
            }
        }
    }

    #[test]
    fn general_engine_agrees_on_simples(q in arb_instance(7)) {
        let a = Arc::new(q.algebra().clone());
        for x in 0..a.vertex_count() {
            let general = minimal_projective_resolution(&homology::simple(&a, x)).unwrap();
            prop_assert_eq!(general.terms, resolve_simple(&a, x).terms);
        }
    }

    #[test]
    fn critical_subcategories_classify(q in arb_instance(9)) {
        let a = q.algebra();
        for r in critical_subcategories(a) {
            prop_assert!(is_critical(&r.induced).is_critical());
            prop_assert!(classify_critical(&r.induced).is_ok());
        }
    }

    #[test]
    fn critical_subcategory_exists_above_two(q in arb_instance(9)) {
        let a = q.algebra();
        if gl_dim(a) >= 3 {
            prop_assert!(!critical_subcategories(a).is_empty());
        }
    }

    #[test]
    fn random_is_deterministic(seed in any::<u64>(), n in 1usize..10) {
        let m = RandomModel::new(seed, n);
        prop_assert_eq!(random_algebra(&m).unwrap(), random_algebra(&m).unwrap());
    }

    #[test]
    fn text_format_round_trips(q in arb_instance(9)) {
        let text = to_spec_text(&q);
        prop_assert_eq!(parse_algebra(&text).unwrap(), q);
    }

    #[test]
    fn parser_is_total(text in "\\PC{0,200}") {
        if let Err(d) = parse_spec(&text) {
            prop_assert!(d.at.line >= 1 && d.at.column >= 1);
        }
    }

    #[test]
    fn parser_is_total_on_near_misses(
        lines in proptest::collection::vec(
            prop_oneof![
                Just("algebra x".to_string()),
                Just("vertices 1 2 3".to_string()),
                Just("arrows 1->2 2->3".to_string()),
                Just("zero 1 ~> 3".to_string()),
                Just("# c".to_string()),
                "[a-z0-9 >~#-]{0,12}",
            ],
            0..8,
        )
    ) {
        let text = lines.join("\n");
        if let Err(d) = parse_algebra(&text) {
            prop_assert!(d.at.line >= 1 && d.at.line <= lines.len().max(1));
        }
    }
}

#[test]
fn third_syzygy_hulls_contain_critical_subcategories() {
    let (mut pairs, mut constructed) = (0, 0);
    for seed in 0..300u64 {
        let q = instance(seed, 1 + (seed as usize % 9));
        let a = q.algebra();
        for i in 0..a.vertex_count() {
            let res = resolve_simple(a, i);
            if res.length() != 3 {
                continue;
            }
            for j in res.term_support(3).iter() {
                pairs += 1;
                let (gamma, _) = build_gamma(a, i, j).unwrap();
                if is_critical(&gamma).is_critical() {
                    constructed += 1;
                }
                let hull = a.convex_hull(i, j);
                assert!(
                    !critical_subcategories(&hull).is_empty(),
                    "seed {seed}: {}",
                    a.describe()
                );
            }
        }
    }
    assert!(pairs > 10);
    assert!(constructed * 10 >= pairs * 9, "{constructed} of {pairs}");
}

#[test]
fn gamma_construction_can_lose_a_relation() {
    // 1 ⇝ 4 is a commutativity relation through 2 and 3; 2 carries no relation
    // to 8, so it is dropped and the relation at 4 disappears
    let q = IncidenceQuotient::numbered(
        "gamma-miss",
        8,
        &[
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 4),
            (3, 6),
            (4, 5),
            (4, 7),
            (6, 7),
            (7, 8),
        ],
        &[(1, 6), (3, 5), (3, 8)],
    )
    .unwrap();
    let a = q.algebra();
    assert!(q.is_certified());
    assert_eq!(resolve_simple(a, 0).multiplicity(3, 7), 1);
    let (gamma, subset) = build_gamma(a, 0, 7).unwrap();
    assert_eq!(subset, VertexSet::from_iter([0, 2, 3, 5, 7]));
    assert!(!is_critical(&gamma).first_four());
    let guided = quivdim::criteria::guided_critical_subcategories(a);
    assert!(!guided.is_empty());
}

#[test]
fn quiver_round_trip_through_names() {
    let q = Quiver::from_names(&["a", "b"], &[("a", "b")]).unwrap();
    assert_eq!(q.opposite().opposite(), q);
}
