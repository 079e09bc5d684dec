//! Matroid recognizers and constructors.
//!
//! The three recognizers use unrelated characterizations (independent-set
//! exchange, strong circuit elimination, unique minimal elements of `N_v`) so
//! that they can serve as oracles for one another.

use crate::complex::{FaceIndex, SimplicialComplex};
use crate::cotangent::n_del_in;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_GROUND};

/// `U(n, k)`: all subsets of `[n]` of size at most `k`.
pub fn uniform(n: usize, k: usize) -> Result<SimplicialComplex> {
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            n,
            limit: MAX_GROUND,
        });
    }
    if k > n {
        return Err(Error::InvalidUniform { n, k });
    }
    SimplicialComplex::from_facets(n, VertexSet::full(n).subsets_of_size(k))
}

/// Independent-set exchange, checked for `|I| = |J| + 1`.
pub fn is_matroid_exchange(delta: &SimplicialComplex) -> Result<bool> {
    delta.require_nonvoid()?;
    let index = FaceIndex::new(delta);
    let top = index.faces.last().map_or(0, |f| f.len());
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for f in &index.faces {
        by_size[f.len()].push(*f);
    }
    for k in 0..top {
        for j in &by_size[k] {
            for i in &by_size[k + 1] {
                let extendable = (*i - *j).iter().any(|v| index.contains(j.with(v)));
                if !extendable {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Strong circuit elimination on the minimal nonfaces.
pub fn is_matroid_circuit_elimination(delta: &SimplicialComplex) -> Result<bool> {
    let circuits = delta.minimal_nonfaces()?;
    for (x, c) in circuits.iter().enumerate() {
        for (y, d) in circuits.iter().enumerate() {
            if x == y {
                continue;
            }
            let shared = *c & *d;
            if shared.is_empty() {
                continue;
            }
            let union = *c | *d;
            for i in shared.iter() {
                let allowed = union.without(i);
                for v in (*c - *d).iter() {
                    let eliminated = circuits
                        .iter()
                        .any(|e| e.contains(v) && e.is_subset(allowed));
                    if !eliminated {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Every element of every `N_v(Δ)` contains exactly one minimal element of `N_v(Δ)`.
pub fn is_matroid_unique_min(delta: &SimplicialComplex) -> Result<bool> {
    delta.require_nonvoid()?;
    let index = FaceIndex::new(delta);
    for v in 1..=delta.n() {
        let nv = n_del_in(&index, VertexSet::singleton(v));
        // Canonical order lists smaller sets first, so minimal elements are
        // exactly those containing no earlier member.
        let minima: Vec<VertexSet> = nv
            .iter()
            .copied()
            .filter(|f| !nv.iter().any(|g| g.is_proper_subset(*f)))
            .collect();
        for f in &nv {
            if minima.iter().filter(|m| m.is_subset(*f)).count() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every vertex of the matroid is a loop or a coloop.
pub fn is_discrete(delta: &SimplicialComplex) -> Result<bool> {
    if !is_matroid_exchange(delta)? {
        return Err(Error::NotAMatroid);
    }
    let (loops, coloops) = delta.loops_and_coloops()?;
    Ok((loops | coloops) == delta.ground())
}

/// `U(ℓ,0) * U(c,c)`: `ℓ` loops followed by `c` coloops.
pub fn discrete(loops: usize, coloops: usize) -> Result<SimplicialComplex> {
    uniform(loops, 0)?.join(&uniform(coloops, coloops)?)
}

pub(crate) fn require_matroid(delta: &SimplicialComplex) -> Result<()> {
    if is_matroid_exchange(delta)? {
        Ok(())
    } else {
        Err(Error::NotAMatroid)
    }
}
