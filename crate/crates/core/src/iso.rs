//! Isomorphism tests and canonical forms for binary relations on small vertex sets.

use crate::combinatorics::Order;
use crate::vertex_set::VertexSet;

fn in_sets(rel: &[VertexSet]) -> Vec<VertexSet> {
    let mut inc = vec![VertexSet::EMPTY; rel.len()];
    for (x, out) in rel.iter().enumerate() {
        for y in out.iter() {
            inc[y].insert(x);
        }
    }
    inc
}

fn degree_profile(rel: &[VertexSet]) -> Vec<(usize, usize)> {
    let inc = in_sets(rel);
    rel.iter()
        .zip(&inc)
        .map(|(o, i)| (o.len(), i.len()))
        .collect()
}

/// Finds a bijection `phi` with `y ∈ a[x] ⇔ phi(y) ∈ b[phi(x)]`, if one exists.
pub fn find_isomorphism(a: &[VertexSet], b: &[VertexSet]) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let da = degree_profile(a);
    let db = degree_profile(b);
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // assign the most constrained vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (da.iter().filter(|&&d| d == da[v]).count(), v));
    let mut phi = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    if extend(a, b, &da, &db, &order, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &[VertexSet],
    b: &[VertexSet],
    da: &[(usize, usize)],
    db: &[(usize, usize)],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for cand in 0..b.len() {
        if used.contains(cand) || db[cand] != da[x] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&y| {
            let py = phi[y];
            a[x].contains(y) == b[cand].contains(py) && a[y].contains(x) == b[py].contains(cand)
        }) && a[x].contains(x) == b[cand].contains(cand);
        if !consistent {
            continue;
        }
        phi[x] = cand;
        used.insert(cand);
        if extend(a, b, da, db, order, depth + 1, phi, used) {
            return true;
        }
        used.remove(cand);
        phi[x] = usize::MAX;
    }
    false
}

/// A key equal for two orders exactly when they are isomorphic.
///
/// Vertices are grouped by (down-set size, up-set size); every relabelling that
/// respects the grouping is tried and the lexicographically least encoding wins.
/// Intended for the small posets used in exhaustive enumeration.
pub fn canonical_order_key(order: &Order) -> Vec<u64> {
    let down = order.down_sets();
    let n = down.len();
    let up = order.up_sets();
    let mut verts: Vec<usize> = (0..n).collect();
    let inv = |v: usize| (down[v].len(), up[v].len());
    verts.sort_by_key(|&v| inv(v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match classes.last_mut() {
            Some(c) if inv(c[0]) == inv(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u64>> = None;
    let mut slots: Vec<usize> = Vec::with_capacity(n);
    permute_classes(&classes, 0, &mut slots, &mut |perm| {
        // perm[new] = old
        let mut pos = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let enc: Vec<u64> = perm
            .iter()
            .map(|&old| down[old].iter().fold(0u64, |m, y| m | 1u64 << pos[y]))
            .collect();
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    });
    let mut key = vec![n as u64];
    key.extend(best.unwrap_or_default());
    key
}

fn permute_classes(
    classes: &[Vec<usize>],
    idx: usize,
    prefix: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if idx == classes.len() {
        visit(prefix);
        return;
    }
    let mut class = classes[idx].clone();
    heap_permutations(&mut class, 0, &mut |p| {
        let len = prefix.len();
        prefix.extend_from_slice(p);
        permute_classes(classes, idx + 1, prefix, visit);
        prefix.truncate(len);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        heap_permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> Vec<VertexSet> {
        let mut r = vec![VertexSet::EMPTY; n];
        for &(x, y) in pairs {
            r[x].insert(y);
        }
        r
    }

    #[test]
    fn relabelled_relations_are_isomorphic() {
        let a = rel(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = rel(4, &[(3, 1), (1, 0), (0, 2)]);
        let phi = find_isomorphism(&a, &b).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(a[x].contains(y), b[phi[x]].contains(phi[y]));
            }
        }
    }

    #[test]
    fn different_shapes_are_not() {
        let chain = rel(3, &[(0, 1), (1, 2)]);
        let vee = rel(3, &[(0, 1), (0, 2)]);
        assert!(find_isomorphism(&chain, &vee).is_none());
        assert!(find_isomorphism(&chain, &chain.opposite_for_test()).is_some());
    }

    trait Opp {
        fn opposite_for_test(&self) -> Vec<VertexSet>;
    }
    impl Opp for Vec<VertexSet> {
        fn opposite_for_test(&self) -> Vec<VertexSet> {
            in_sets(self)
        }
    }

    #[test]
    fn canonical_keys_identify_isomorphic_orders() {
        let a = Order::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        let b = Order::from_pairs(3, &[(2, 0), (2, 1)]).unwrap();
        let c = Order::from_pairs(3, &[(1, 0), (2, 0)]).unwrap();
        assert_eq!(canonical_order_key(&a), canonical_order_key(&b));
        assert_ne!(canonical_order_key(&a), canonical_order_key(&c));
    }
}
