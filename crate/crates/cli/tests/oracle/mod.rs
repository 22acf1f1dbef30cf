//! Brute-force reference computations straight from the definitions. Only
//! table lookups are taken from the library.

#![allow(dead_code)]

use spined_core::{EquivRelation, FiniteSemigroup};

/// Multiplication on S¹, with `n` standing for the adjoined identity.
pub fn mul1(s: &FiniteSemigroup, a: usize, b: usize) -> usize {
    let n = s.order();
    match (a == n, b == n) {
        (true, _) => b,
        (_, true) => a,
        _ => s.mul(a, b),
    }
}

/// a R* b: xa = ya ⟺ xb = yb for all x, y ∈ S¹.
pub fn r_star(s: &FiniteSemigroup) -> Vec<Vec<bool>> {
    let n = s.order();
    matrix(n, |a, b| {
        (0..=n).all(|x| (0..=n).all(|y| (mul1(s, x, a) == mul1(s, y, a)) == (mul1(s, x, b) == mul1(s, y, b))))
    })
}

/// a L* b: ax = ay ⟺ bx = by for all x, y ∈ S¹.
pub fn l_star(s: &FiniteSemigroup) -> Vec<Vec<bool>> {
    let n = s.order();
    matrix(n, |a, b| {
        (0..=n).all(|x| (0..=n).all(|y| (mul1(s, a, x) == mul1(s, a, y)) == (mul1(s, b, x) == mul1(s, b, y))))
    })
}

fn principal(s: &FiniteSemigroup, a: usize, right: bool) -> Vec<bool> {
    let n = s.order();
    let mut set = vec![false; n];
    for x in 0..=n {
        set[if right { mul1(s, a, x) } else { mul1(s, x, a) }] = true;
    }
    set
}

/// aS¹ = bS¹.
pub fn green_r(s: &FiniteSemigroup) -> Vec<Vec<bool>> {
    let ideals: Vec<_> = (0..s.order()).map(|a| principal(s, a, true)).collect();
    matrix(s.order(), |a, b| ideals[a] == ideals[b])
}

/// S¹a = S¹b.
pub fn green_l(s: &FiniteSemigroup) -> Vec<Vec<bool>> {
    let ideals: Vec<_> = (0..s.order()).map(|a| principal(s, a, false)).collect();
    matrix(s.order(), |a, b| ideals[a] == ideals[b])
}

pub fn matrix(n: usize, f: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

/// First pair on which the library relation and the oracle disagree.
pub fn relation_mismatch(lib: &EquivRelation, oracle: &[Vec<bool>]) -> Option<(usize, usize)> {
    let n = oracle.len();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| lib.related(a, b) != oracle[a][b])
}

pub fn idempotents(s: &FiniteSemigroup) -> Vec<usize> {
    (0..s.order()).filter(|&e| s.mul(e, e) == e).collect()
}

fn idempotents_in_class(s: &FiniteSemigroup, rel: &[Vec<bool>], a: usize) -> usize {
    idempotents(s).into_iter().filter(|&e| rel[a][e]).count()
}

pub fn is_abundant(s: &FiniteSemigroup) -> bool {
    let (r, l) = (r_star(s), l_star(s));
    (0..s.order()).all(|a| idempotents_in_class(s, &r, a) > 0 && idempotents_in_class(s, &l, a) > 0)
}

/// Abundant with one idempotent in each R*-class.
pub fn is_left_adequate(s: &FiniteSemigroup) -> bool {
    let r = r_star(s);
    is_abundant(s) && (0..s.order()).all(|a| idempotents_in_class(s, &r, a) == 1)
}

pub fn is_right_adequate(s: &FiniteSemigroup) -> bool {
    let l = l_star(s);
    is_abundant(s) && (0..s.order()).all(|a| idempotents_in_class(s, &l, a) == 1)
}

/// Abundant with commuting idempotents.
pub fn is_adequate(s: &FiniteSemigroup) -> bool {
    let e = idempotents(s);
    is_abundant(s) && e.iter().all(|&x| e.iter().all(|&y| s.mul(x, y) == s.mul(y, x)))
}

pub fn is_regular_element(s: &FiniteSemigroup, x: usize) -> bool {
    (0..s.order()).any(|y| s.mul(s.mul(x, y), x) == x)
}

pub fn is_regular(s: &FiniteSemigroup) -> bool {
    (0..s.order()).all(|x| is_regular_element(s, x))
}

/// V(x) = {y : xyx = x, yxy = y}.
pub fn inverses(s: &FiniteSemigroup, x: usize) -> Vec<usize> {
    (0..s.order()).filter(|&y| s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y).collect()
}

pub fn is_closed(s: &FiniteSemigroup, set: &[usize]) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| set.contains(&s.mul(a, b))))
}

/// The subtable on `set` (listed in increasing order) as a fresh semigroup.
pub fn subtable(s: &FiniteSemigroup, set: &[usize]) -> FiniteSemigroup {
    let pos = |x: usize| set.iter().position(|&y| y == x).expect("closed");
    FiniteSemigroup::from_fn(set.len(), |a, b| pos(s.mul(set[a], set[b]))).expect("subtables are associative")
}

/// Whether `map` is an injective homomorphism from `a` into `b`.
pub fn is_embedding(a: &FiniteSemigroup, b: &FiniteSemigroup, map: &[usize]) -> bool {
    let mut seen = vec![false; b.order()];
    for &y in map {
        if seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..a.order()).all(|x| (0..a.order()).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])))
}

pub fn is_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, map: &[usize]) -> bool {
    a.order() == b.order() && map.len() == a.order() && is_embedding(a, b, map)
}
