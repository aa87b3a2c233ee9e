//! Independent oracles for the integration and acceptance tests. They work
//! on raw exponent vectors and share no code with the library beyond parsing.

#![allow(dead_code)]

use std::collections::BTreeMap;

use polymat::{Monomial, MonomialIdeal};

pub type Exps = Vec<u32>;

pub fn exps(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal.gens().iter().map(|g| g.exps().to_vec()).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Rank of a dense matrix over F_p.
fn rank_mod(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as u128;
    let mut m: Vec<Vec<u128>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| i128::from(x).rem_euclid(p as i128) as u128)
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                for k in c..cols {
                    m[r][k] = (m[r][k] + p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u128, mut e: u128, p: u128) -> u128 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over the prime field of characteristic `ch`. For 0 the rank is the
/// maximum over several 61-bit primes, which never exceeds the rational rank.
fn rank(rows: &[Vec<i64>], ch: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match ch {
        0 => [
            2305843009213693951u64,
            4611686018427387847,
            1152921504606846883,
        ]
        .iter()
        .map(|&p| rank_mod(rows, p))
        .max()
        .unwrap(),
        p => rank_mod(rows, p),
    }
}

/// Graded Betti numbers `(i, j) -> β_{i,j}` from the Taylor complex: for each
/// multidegree `b`, the subsets of generators with lcm `b` and the Taylor
/// differential restricted to them compute `Tor_i(I, K)_b`.
pub fn taylor_betti(ideal: &MonomialIdeal, ch: u64) -> BTreeMap<(usize, u64), u64> {
    let g = exps(ideal);
    let n = ideal.nvars();
    let s = g.len();
    assert!(
        s <= 12,
        "Taylor oracle is exponential in the number of generators"
    );
    let mut by_lcm: BTreeMap<Exps, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..1 << s {
        let l = (0..s)
            .filter(|k| mask >> k & 1 == 1)
            .fold(vec![0; n], |acc, k| lcm(&acc, &g[k]));
        by_lcm.entry(l).or_default().push(mask);
    }
    let mut out = BTreeMap::new();
    for (b, masks) in by_lcm {
        let deg: u64 = b.iter().map(|&e| u64::from(e)).sum();
        let by_size = |k: u32| -> Vec<u32> {
            masks
                .iter()
                .copied()
                .filter(|m| m.count_ones() == k)
                .collect()
        };
        // boundary from faces of size k to faces of size k-1
        let boundary = |k: u32| -> Vec<Vec<i64>> {
            let hi = by_size(k);
            let lo = by_size(k - 1);
            lo.iter()
                .map(|&t| {
                    hi.iter()
                        .map(|&f| {
                            if f & t != t {
                                return 0;
                            }
                            let removed = f ^ t;
                            let below = (f & (removed - 1)).count_ones();
                            if below % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .collect()
                })
                .collect()
        };
        for k in 1..=s as u32 {
            let dim = by_size(k).len();
            if dim == 0 {
                continue;
            }
            let r_out = if k > 1 { rank(&boundary(k), ch) } else { 0 };
            let r_in = if (k as usize) < s {
                rank(&boundary(k + 1), ch)
            } else {
                0
            };
            let h = dim - r_out - r_in;
            if h > 0 {
                *out.entry(((k - 1) as usize, deg)).or_insert(0) += h as u64;
            }
        }
    }
    out
}

/// Minimal generators of `(prefix) : v`, from the definition.
fn colon_gens(prefix: &[Exps], v: &[u32]) -> Vec<Exps> {
    let mut q: Vec<Exps> = prefix
        .iter()
        .map(|w| w.iter().zip(v).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    q.sort();
    q.dedup();
    let all = q.clone();
    q.retain(|a| !all.iter().any(|b| b != a && divides(b, a)));
    q
}

/// Some ordering of the generators has linear quotients: every colon
/// `(u_1..u_{k-1}) : u_k` is generated by variables. Tries all permutations.
pub fn brute_force_lq(ideal: &MonomialIdeal) -> bool {
    let g = exps(ideal);
    assert!(g.len() <= 8, "brute force over permutations");
    let mut idx: Vec<usize> = (0..g.len()).collect();
    permutations(&mut idx, 0, &mut |order| {
        (1..order.len()).all(|k| {
            let prefix: Vec<Exps> = order[..k].iter().map(|&i| g[i].clone()).collect();
            colon_gens(&prefix, &g[order[k]])
                .iter()
                .all(|q| q.iter().sum::<u32>() == 1)
        })
    })
}

fn permutations(idx: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == idx.len() {
        return f(idx);
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        if permutations(idx, k + 1, f) {
            idx.swap(k, i);
            return true;
        }
        idx.swap(k, i);
    }
    false
}

/// Monomials with exponents `<= bound_i` coordinatewise.
pub fn box_monomials(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|e: Exps| {
                (0..=b).map(move |x| {
                    let mut e = e.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Membership agrees with "in every part" on the box up to `lcm + 1`, which
/// decides equality of `I` and the intersection of the parts (all generated
/// inside that box).
pub fn is_intersection(ideal: &MonomialIdeal, parts: &[MonomialIdeal]) -> bool {
    let mut bound: Exps = ideal.lcm().exps().to_vec();
    for p in parts {
        bound = lcm(&bound, p.lcm().exps());
    }
    let bound: Exps = bound.iter().map(|e| e + 1).collect();
    let member =
        |i: &MonomialIdeal, w: &Monomial| i.gens().iter().any(|g| divides(g.exps(), w.exps()));
    box_monomials(&bound)
        .iter()
        .all(|w| member(ideal, w) == parts.iter().all(|p| member(p, w)))
}

/// Independent exchange check on exponent vectors.
pub fn exchange_holds(ideal: &MonomialIdeal) -> bool {
    let g = exps(ideal);
    let d: Vec<u32> = g.iter().map(|e| e.iter().sum()).collect();
    if d.iter().any(|&x| x != d[0]) {
        return false;
    }
    let contains = |e: &Exps| g.iter().any(|h| divides(h, e));
    g.iter().all(|u| {
        g.iter().all(|v| {
            (0..u.len()).filter(|&i| u[i] > v[i]).all(|i| {
                (0..u.len()).filter(|&j| u[j] < v[j]).any(|j| {
                    let mut w = u.clone();
                    w[i] -= 1;
                    w[j] += 1;
                    contains(&w)
                })
            })
        })
    })
}

/// Seeded random ideals: each has `k` minimal generators, `k` uniform in
/// `1..=max_gens`, of degrees in `degrees`, in `n` variables.
pub fn random_ideals(
    seed: u64,
    count: usize,
    n: usize,
    degrees: std::ops::RangeInclusive<u32>,
    max_gens: usize,
) -> Vec<MonomialIdeal> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.random_range(1..=max_gens);
            let mut gens: Vec<Exps> = Vec::new();
            for _ in 0..10_000 {
                if gens.len() == k {
                    break;
                }
                let d = rng.random_range(degrees.clone());
                let mut e = vec![0u32; n];
                for _ in 0..d {
                    e[rng.random_range(0..n)] += 1;
                }
                if !gens.iter().any(|g| divides(g, &e) || divides(&e, g)) {
                    gens.push(e);
                }
            }
            MonomialIdeal::minimalize(n, gens.into_iter().map(Monomial::new)).unwrap()
        })
        .collect()
}
