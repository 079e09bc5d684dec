//! Exhaustive enumeration of small complexes and matroids.
//!
//! A complex on `[n]` with `n ≤ 5` is a down-closed family of the `2^n`
//! subsets, stored as a `u32` bitmap indexed by subset mask. Two complexes are
//! identified when a relabeling of `[n]` maps one to the other; each class is
//! represented by its relabeling with the smallest bitmap.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::matroid::{is_matroid_exchange, uniform};
use crate::vertex_set::VertexSet;

pub const CENSUS_LIMIT: usize = 5;

/// Largest ground set in the uniform-and-join reconstruction family.
pub const FAMILY_GROUND_LIMIT: usize = 7;

fn check_limit(n: usize) -> Result<()> {
    if n > CENSUS_LIMIT {
        return Err(Error::CensusTooLarge {
            n,
            limit: CENSUS_LIMIT,
        });
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every down-closed bitmap over subsets of `[n]`, void included.
fn downsets(n: usize) -> Vec<u32> {
    fn grow(mask: usize, size: usize, n: usize, family: u32, out: &mut Vec<u32>) {
        if mask == size {
            out.push(family);
            return;
        }
        grow(mask + 1, size, n, family, out);
        let closed = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .all(|i| family & (1 << (mask & !(1 << i))) != 0);
        if closed {
            grow(mask + 1, size, n, family | (1 << mask), out);
        }
    }
    let mut out = Vec::new();
    grow(0, 1 << n, n, 0, &mut out);
    out
}

fn relabel(family: u32, n: usize, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for mask in (0..1usize << n).filter(|m| family & (1 << m) != 0) {
        let image = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .fold(0usize, |acc, i| acc | (1 << perm[i]));
        out |= 1 << image;
    }
    out
}

fn to_complex(family: u32, n: usize) -> SimplicialComplex {
    let faces = (0..1u64 << n)
        .filter(|m| family & (1 << m) != 0)
        .map(VertexSet::from_bits);
    SimplicialComplex::from_facets(n, faces).expect("masks stay within [n]")
}

/// Nonvoid complexes on exactly `[n]`, one per relabeling class, sorted by
/// representative bitmap.
pub fn complexes_on(n: usize) -> Result<Vec<SimplicialComplex>> {
    check_limit(n)?;
    let perms = permutations(n);
    let classes: BTreeSet<u32> = downsets(n)
        .into_par_iter()
        .filter(|family| *family != 0)
        .map(|family| {
            perms
                .iter()
                .map(|p| relabel(family, n, p))
                .min()
                .expect("at least the identity")
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(classes.into_iter().map(|f| to_complex(f, n)).collect())
}

/// Nonvoid complexes on `[n]` for every `n ≤ max_n`, up to relabeling.
pub fn complexes_up_to(max_n: usize) -> Result<Vec<SimplicialComplex>> {
    check_limit(max_n)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(complexes_on(n)?);
    }
    Ok(out)
}

/// The matroids among [`complexes_up_to`].
pub fn matroids_up_to(max_n: usize) -> Result<Vec<SimplicialComplex>> {
    let all = complexes_up_to(max_n)?;
    let flags: Result<Vec<bool>> = all.par_iter().map(is_matroid_exchange).collect();
    Ok(all
        .into_iter()
        .zip(flags?)
        .filter_map(|(c, m)| m.then_some(c))
        .collect())
}

/// `U(m,k) * U(ℓ,0) * U(c,c)` for `1 ≤ k < m` and `m + ℓ + c ≤ limit`.
pub fn uniform_joins(limit: usize) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    for m in 2..=limit {
        for k in 1..m {
            for loops in 0..=limit - m {
                for coloops in 0..=limit - m - loops {
                    out.push(
                        uniform(m, k)?
                            .join(&uniform(loops, 0)?)?
                            .join(&uniform(coloops, coloops)?)?,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Test family for reconstruction: census matroids on `≤ max_n` vertices,
/// each of them with one extra loop and with one extra coloop, and the
/// uniform joins on at most [`FAMILY_GROUND_LIMIT`] vertices. Duplicates are
/// dropped; discrete matroids are kept.
pub fn reconstruction_family(max_n: usize) -> Result<Vec<SimplicialComplex>> {
    let census = matroids_up_to(max_n)?;
    let (a_loop, a_coloop) = (uniform(1, 0)?, uniform(1, 1)?);
    let mut candidates = census.clone();
    for m in &census {
        candidates.push(m.join(&a_loop)?);
        candidates.push(m.join(&a_coloop)?);
    }
    candidates.extend(uniform_joins(FAMILY_GROUND_LIMIT)?);
    let mut seen = HashSet::new();
    candidates.retain(|c| seen.insert(c.clone()));
    Ok(candidates)
}
