//! Derives a generator file for the Mathieu group M₁₁ from first principles
//! and writes it to `data/m11.json` (relative to the current directory).
//!
//! The route is the classical one:
//!
//! 1. Build the Steiner system S(4,5,11) — 66 five-point blocks on 11 points
//!    such that every four-point subset lies in exactly one block — by exact
//!    cover search over the 462 candidate blocks. The system is unique up to
//!    relabelling, so the lexicographically-first solution is as good as any.
//! 2. Enumerate automorphisms of the block set by image backtracking, pruning
//!    a partial map as soon as some five-point subset of its domain changes
//!    block status. The full automorphism group of S(4,5,11) is M₁₁.
//! 3. Feed each discovered automorphism to a stabilizer chain until the group
//!    order reaches 7920 = |M₁₁|, then stop and write the generators found.
//!
//! The output file is what the acceptance suite's data-gated Mathieu cases
//! consume; `catalog::load_external(path, 7920)` re-verifies the order on
//! every load, so a corrupted or wrong file can never masquerade as M₁₁.

use std::collections::HashSet;

use vsrep::perm::{PermGroup, Permutation};

const N: usize = 11;
const BLOCK: usize = 5;

fn bit(i: usize) -> u16 {
    1 << i
}

/// All k-subsets of {0..n} as sorted index vectors, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn mask_of(set: &[usize]) -> u16 {
    set.iter().fold(0, |m, &i| m | bit(i))
}

/// Exact cover: pick blocks so that each quadruple is covered exactly once.
fn steiner_system() -> Vec<u16> {
    let quads = subsets(N, 4);
    let quad_index: std::collections::HashMap<u16, usize> = quads
        .iter()
        .enumerate()
        .map(|(i, q)| (mask_of(q), i))
        .collect();
    let candidates: Vec<(u16, Vec<usize>)> = subsets(N, BLOCK)
        .iter()
        .map(|b| {
            let m = mask_of(b);
            let covered = subsets(BLOCK, 4)
                .iter()
                .map(|pick| {
                    let quad: Vec<usize> = pick.iter().map(|&i| b[i]).collect();
                    quad_index[&mask_of(&quad)]
                })
                .collect();
            (m, covered)
        })
        .collect();

    let mut covered = vec![false; quads.len()];
    let mut chosen: Vec<u16> = Vec::new();
    fn search(
        covered: &mut Vec<bool>,
        chosen: &mut Vec<u16>,
        candidates: &[(u16, Vec<usize>)],
        quads: &[Vec<usize>],
    ) -> bool {
        let next = match covered.iter().position(|&c| !c) {
            None => return true,
            Some(i) => i,
        };
        let need = mask_of(&quads[next]);
        for (m, qs) in candidates {
            if m & need == need && qs.iter().all(|&q| !covered[q]) {
                for &q in qs {
                    covered[q] = true;
                }
                chosen.push(*m);
                if search(covered, chosen, candidates, quads) {
                    return true;
                }
                chosen.pop();
                for &q in qs {
                    covered[q] = false;
                }
            }
        }
        false
    }
    assert!(
        search(&mut covered, &mut chosen, &candidates, &quads),
        "exact cover search must succeed: S(4,5,11) exists"
    );
    assert_eq!(chosen.len(), 66);
    chosen.sort_unstable();
    chosen
}

/// Backtracking enumeration of block-set automorphisms, in lexicographic
/// image order, feeding each one to the group until the order hits 7920.
fn automorphism_generators(blocks: &[u16]) -> Vec<Permutation> {
    let block_set: HashSet<u16> = blocks.iter().copied().collect();
    // five_sets_with_max[d] = the 5-subsets of {0..=d} that contain d, so a
    // partial map extended to d only needs those checked.
    let mut five_sets_with_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); N];
    for s in subsets(N, BLOCK) {
        five_sets_with_max[*s.last().unwrap()].push(s);
    }

    let mut gens: Vec<Permutation> = Vec::new();
    let target = num_bigint::BigUint::from(7920u32);

    struct State<'a> {
        image: Vec<usize>,
        used: u16,
        block_set: &'a HashSet<u16>,
        five_sets_with_max: &'a [Vec<Vec<usize>>],
        gens: Vec<Permutation>,
        order: num_bigint::BigUint,
        target: num_bigint::BigUint,
    }

    impl State<'_> {
        /// Returns true once the target order is reached (cuts the search).
        fn extend(&mut self) -> bool {
            let d = self.image.len();
            if d == N {
                let p = Permutation::from_images(self.image.clone()).expect("valid images");
                if !p.is_identity() {
                    let mut cand = self.gens.clone();
                    cand.push(p.clone());
                    let g = PermGroup::new(N, cand).expect("degree 11 group");
                    let order = g.order().expect("degree 11 chain");
                    if order > self.order {
                        self.gens.push(p);
                        self.order = order;
                    }
                }
                return self.order == self.target;
            }
            for v in 0..N {
                if self.used & bit(v) != 0 {
                    continue;
                }
                self.image.push(v);
                self.used |= bit(v);
                let ok = self.five_sets_with_max[d].iter().all(|s| {
                    let pre = mask_of(s);
                    let img = s.iter().fold(0u16, |m, &i| m | bit(self.image[i]));
                    self.block_set.contains(&pre) == self.block_set.contains(&img)
                });
                if ok && self.extend() {
                    return true;
                }
                self.image.pop();
                self.used &= !bit(v);
            }
            false
        }
    }

    let mut state = State {
        image: Vec::new(),
        used: 0,
        block_set: &block_set,
        five_sets_with_max: &five_sets_with_max,
        gens: Vec::new(),
        order: num_bigint::BigUint::from(1u32),
        target,
    };
    let reached = state.extend();
    assert!(reached, "automorphism search must reach order 7920");
    gens.append(&mut state.gens);
    reduce_generators(&gens)
}

/// Picks a small subset of the found automorphisms that still generates the
/// whole group (pairs first, then triples, falling back to the full list).
fn reduce_generators(gens: &[Permutation]) -> Vec<Permutation> {
    let target = num_bigint::BigUint::from(7920u32);
    let order_of = |subset: &[Permutation]| {
        PermGroup::new(N, subset.to_vec())
            .ok()
            .and_then(|g| g.order().ok())
    };
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let pair = vec![gens[i].clone(), gens[j].clone()];
            if order_of(&pair) == Some(target.clone()) {
                return pair;
            }
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            for k in j + 1..gens.len() {
                let triple = vec![gens[i].clone(), gens[j].clone(), gens[k].clone()];
                if order_of(&triple) == Some(target.clone()) {
                    return triple;
                }
            }
        }
    }
    gens.to_vec()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let blocks = steiner_system();
    println!("Steiner system S(4,5,11): {} blocks", blocks.len());
    for (i, b) in blocks.iter().enumerate().take(6) {
        let pts: Vec<usize> = (0..N).filter(|&j| b & bit(j) != 0).collect();
        println!("  block {i}: {pts:?}");
    }
    println!("  …");

    let gens = automorphism_generators(&blocks);
    let group = PermGroup::new(N, gens.clone())?;
    let order = group.order()?;
    println!("automorphism group: {} generators, order {order}", gens.len());
    assert_eq!(order, num_bigint::BigUint::from(7920u32));
    assert!(group.is_transitive());
    assert!(group.is_two_transitive()?);

    std::fs::create_dir_all("data")?;
    let path = std::path::Path::new("data/m11.json");
    std::fs::write(path, serde_json::to_string_pretty(&group)? + "\n")?;
    println!("wrote {}", path.display());

    let back = vsrep::catalog::load_external(path, 7920)?;
    println!("re-loaded and order-verified: degree {}", back.degree());
    Ok(())
}
