//! Named property checks run over instance families.
//!
//! Each check walks its instances in parallel and reports how many
//! sub-instances it examined together with every violation, in instance order.

use rayon::prelude::*;
use serde::Serialize;

use crate::census::{complexes_up_to, reconstruction_family};
use crate::complex::SimplicialComplex;
use crate::cotangent::{
    bijection_check, dim_t1, dim_t1_nonface, n_del, n_del_red, t1_table, t1_upper_bound_terms,
    MultiDegree, T1Table,
};
use crate::error::{Error, Result};
use crate::matroid::{
    is_discrete, is_matroid_circuit_elimination, is_matroid_exchange, is_matroid_unique_min,
    uniform,
};
use crate::recognition::{formula_discrepancies, is_matroid_via_t1};
use crate::reconstruction::{classify_loops_coloops, reconstruct, slice_link_table, VertexRole};
use crate::vertex_set::{maximal_elements, minimal_elements, VertexSet};

/// Largest `n` for the uniform closed-form sweep.
pub const UNIFORM_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub instances: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    violations: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(describe());
        }
    }
}

fn run<T: Sync>(
    name: &'static str,
    items: &[T],
    body: impl Fn(&T, &mut Tally) -> Result<()> + Sync,
) -> Result<CheckReport> {
    let tallies: Result<Vec<Tally>> = items
        .par_iter()
        .map(|item| {
            let mut tally = Tally::default();
            body(item, &mut tally)?;
            Ok(tally)
        })
        .collect();
    let mut report = CheckReport {
        name,
        instances: 0,
        violations: Vec::new(),
    };
    for tally in tallies? {
        report.instances += tally.checked;
        report.violations.extend(tally.violations);
    }
    Ok(report)
}

fn nonempty_subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    s.subsets().filter(|b| !b.is_empty())
}

fn same_sets(mut left: Vec<VertexSet>, mut right: Vec<VertexSet>) -> bool {
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    left == right
}

fn matroids(complexes: &[SimplicialComplex]) -> Result<Vec<SimplicialComplex>> {
    let flags: Result<Vec<bool>> = complexes.par_iter().map(is_matroid_exchange).collect();
    Ok(complexes
        .iter()
        .zip(flags?)
        .filter(|(_, m)| *m)
        .map(|(c, _)| c.clone())
        .collect())
}

// complex

pub fn check_antichain(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("antichain", complexes, |delta, t| {
        let facets = delta.facets();
        for (i, f) in facets.iter().enumerate() {
            for g in &facets[i + 1..] {
                t.check(!f.is_subset(*g) && !g.is_subset(*f), || {
                    format!("{delta:?}: facets {f} and {g} are nested")
                });
            }
        }
        Ok(())
    })
}

pub fn check_nonface_duality(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("nonface duality", complexes, |delta, t| {
        let rebuilt =
            SimplicialComplex::from_minimal_nonfaces(delta.n(), delta.minimal_nonfaces()?)?;
        t.check(rebuilt == *delta, || {
            format!("{delta:?} rebuilt as {rebuilt:?}")
        });
        Ok(())
    })
}

pub fn check_link_restrict_commute(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("link/restrict commutation", complexes, |delta, t| {
        for w in delta.ground().subsets() {
            let restricted = delta.restrict(w)?;
            for f in w.subsets() {
                let left = restricted.link(f)?;
                let right = delta.link(f)?.restrict(w)?;
                t.check(left == right, || format!("{delta:?}: W={w}, F={f}"));
            }
        }
        Ok(())
    })
}

pub fn check_rank_monotone(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("rank monotone and bounded", complexes, |delta, t| {
        for b in delta.ground().subsets() {
            let rb = delta.rank_of(b)?;
            t.check(rb <= b.len(), || format!("{delta:?}: rank of {b} is {rb}"));
            for a in b.subsets() {
                let ra = delta.rank_of(a)?;
                t.check(ra <= rb, || {
                    format!("{delta:?}: rank {a} = {ra} > rank {b} = {rb}")
                });
            }
        }
        Ok(())
    })
}

pub fn check_join_laws(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let unit = SimplicialComplex::from_facets(0, [])?;
    let small: Vec<&SimplicialComplex> = complexes.iter().filter(|c| c.n() <= 2).collect();
    run("join identity and associativity", complexes, |delta, t| {
        let joined = delta.join(&unit)?;
        t.check(joined == *delta, || {
            format!("{delta:?} * unit = {joined:?}")
        });
        if delta.n() <= 2 {
            for g in &small {
                for h in &small {
                    let left = delta.join(g)?.join(h)?;
                    let right = delta.join(&g.join(h)?)?;
                    t.check(left == right, || format!("({delta:?} * {g:?}) * {h:?}"));
                }
            }
        }
        Ok(())
    })
}

// matroid

pub fn check_oracle_agreement(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("matroid oracle agreement", complexes, |delta, t| {
        let exchange = is_matroid_exchange(delta)?;
        let circuits = is_matroid_circuit_elimination(delta)?;
        let unique_min = is_matroid_unique_min(delta)?;
        t.check(exchange == circuits && circuits == unique_min, || {
            format!("{delta:?}: exchange {exchange}, circuits {circuits}, unique-min {unique_min}")
        });
        Ok(())
    })
}

pub fn check_matroid_closure(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let ms = matroids(complexes)?;
    let max_n = ms.iter().map(|m| m.n()).max().unwrap_or(0);
    run("matroid closure", &ms, |m, t| {
        for a in m.faces() {
            let link = m.link(a)?;
            t.check(is_matroid_exchange(&link)?, || {
                format!("{m:?}: link of {a}")
            });
        }
        for w in m.ground().subsets() {
            let r = m.restrict(w)?;
            t.check(is_matroid_exchange(&r)?, || {
                format!("{m:?}: restriction to {w}")
            });
        }
        for other in ms.iter().filter(|o| o.n() + m.n() <= max_n) {
            let j = m.join(other)?;
            t.check(is_matroid_exchange(&j)?, || format!("{m:?} * {other:?}"));
        }
        Ok(())
    })
}

pub fn check_coloop_free_heredity(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let ms = matroids(complexes)?;
    run("coloop-free heredity", &ms, |m, t| {
        if !m.loops_and_coloops()?.1.is_empty() {
            return Ok(());
        }
        for a in m.faces() {
            let coloops = m.link(a)?.loops_and_coloops()?.1;
            t.check(coloops.is_empty(), || {
                format!("{m:?}: link of {a} has coloops {coloops}")
            });
        }
        Ok(())
    })
}

pub fn check_equicardinal_bases(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let ms = matroids(complexes)?;
    run("bases have size rank", &ms, |m, t| {
        let rank = m.rank()?;
        t.check(m.facets().iter().all(|f| f.len() == rank), || {
            format!("{m:?}: facet sizes differ from rank {rank}")
        });
        Ok(())
    })
}

// cotangent

pub fn check_link_reduction(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("link reduction", complexes, |delta, t| {
        for a in delta.faces() {
            let link = delta.link(a)?;
            for b in nonempty_subsets(delta.ground() - a) {
                let lhs = dim_t1(delta, MultiDegree::new(a, b)?)?;
                let rhs = dim_t1(&link, MultiDegree::negative_only(b))?;
                t.check(lhs == rhs, || {
                    format!("{delta:?}: ({a},{b}) gives {lhs} vs {rhs}")
                });
            }
        }
        Ok(())
    })
}

pub fn check_minimal_elements(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("minimal elements of N_b", complexes, |delta, t| {
        let circuits = delta.minimal_nonfaces()?;
        for b in nonempty_subsets(delta.ground()) {
            for m in minimal_elements(&n_del(delta, b)?) {
                let ok = circuits.iter().any(|c| !c.is_disjoint(b) && *c - b == m);
                t.check(ok, || {
                    format!("{delta:?}: minimal {m} of N_{b} is no C \\ b")
                });
            }
            for m in minimal_elements(&n_del_red(delta, b)?) {
                let ok = circuits
                    .iter()
                    .any(|c| !c.is_disjoint(b) && !b.is_subset(*c) && *c - b == m);
                t.check(ok, || {
                    format!("{delta:?}: minimal {m} of reduced N_{b} is no C \\ b")
                });
            }
        }
        Ok(())
    })
}

pub fn check_reduced_emptiness(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("reduced set emptiness", complexes, |delta, t| {
        let circuits = delta.minimal_nonfaces()?;
        for b in nonempty_subsets(delta.ground()) {
            let reduced_empty = n_del_red(delta, b)?.is_empty();
            let split = circuits.iter().all(|c| b.is_subset(*c) || c.is_disjoint(b));
            t.check(reduced_empty == split, || {
                format!("{delta:?}: b={b}, reduced empty {reduced_empty}, circuits split {split}")
            });
            if reduced_empty && split {
                let mins = minimal_elements(&n_del(delta, b)?);
                let expected: Vec<VertexSet> = circuits
                    .iter()
                    .filter(|c| b.is_subset(**c))
                    .map(|c| *c - b)
                    .collect();
                t.check(same_sets(mins, expected), || {
                    format!("{delta:?}: b={b}, minimal elements differ from circuits minus b")
                });
            }
        }
        Ok(())
    })
}

/// `dim T¹_{-b} ≤ bound` at every nonempty face `b`, the restated bound
/// agrees, and for matroids every nonzero dimension attains the bound.
pub fn check_upper_bound(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("upper bound", complexes, |delta, t| {
        let matroid = is_matroid_exchange(delta)?;
        for b in delta.faces().into_iter().filter(|b| !b.is_empty()) {
            let terms = t1_upper_bound_terms(delta, b)?;
            t.check(
                (
                    terms.link_circuits_in_deletion,
                    terms.deletion_facets_off_link,
                ) == (terms.restated_circuits, terms.restated_facets),
                || format!("{delta:?}: restated bound differs at {b}: {terms:?}"),
            );
            let bound = terms.value(b.len());
            let dim = dim_t1(delta, MultiDegree::negative_only(b))?;
            t.check(dim <= bound, || {
                format!("{delta:?}: dim {dim} exceeds bound {bound} at {b}")
            });
            if matroid && dim > 0 {
                t.check(dim == bound, || {
                    format!("{delta:?}: matroid degree {b} has dim {dim} below bound {bound}")
                });
            }
        }
        Ok(())
    })
}

pub fn check_deletion_saturation(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let ms = matroids(complexes)?;
    run("deletion basis saturation", &ms, |m, t| {
        for b in nonempty_subsets(m.ground()) {
            let deletion_bases = m.deletion(b)?.facets().to_vec();
            let del = n_del(m, b)?;
            if del.is_empty() {
                continue;
            }
            t.check(deletion_bases.iter().all(|f| del.contains(f)), || {
                format!("{m:?}: some basis of M \\ {b} lies outside N_b")
            });
            let red = n_del_red(m, b)?;
            if !red.is_empty() {
                t.check(deletion_bases.iter().all(|f| red.contains(f)), || {
                    format!("{m:?}: some basis of M \\ {b} lies outside reduced N_b")
                });
                t.check(maximal_elements(&del) == maximal_elements(&red), || {
                    format!("{m:?}: maximal elements differ at {b}")
                });
            }
        }
        Ok(())
    })
}

pub fn check_basis_extension(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let ms = matroids(complexes)?;
    run("basis extension equivalence", &ms, |m, t| {
        for b in nonempty_subsets(m.ground()) {
            let bases = m.deletion(b)?.facets().to_vec();
            for b_sub in b.subsets() {
                let first = m.contains(bases[0] | b_sub);
                for other in &bases[1..] {
                    t.check(m.contains(*other | b_sub) == first, || {
                        format!("{m:?}: bases {} and {other} disagree on {b_sub}", bases[0])
                    });
                }
            }
        }
        Ok(())
    })
}

/// The circuit formula matches every dimension exactly for matroids and
/// fails somewhere for every other complex.
pub fn check_formula_characterization(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("formula holds iff matroid", complexes, |delta, t| {
        let formula_holds = formula_discrepancies(delta)?.is_empty();
        let oracles = [
            is_matroid_exchange(delta)?,
            is_matroid_circuit_elimination(delta)?,
            is_matroid_unique_min(delta)?,
        ];
        t.check(oracles.iter().all(|o| *o == formula_holds), || {
            format!("{delta:?}: formula holds {formula_holds}, oracles {oracles:?}")
        });
        Ok(())
    })
}

pub fn check_nonface_degree(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("nonface degree", complexes, |delta, t| {
        for b in delta.ground().subsets().filter(|b| !delta.contains(*b)) {
            let fast = dim_t1_nonface(delta, b)?;
            let graph = dim_t1(delta, MultiDegree::negative_only(b))?;
            t.check(fast == graph, || {
                format!("{delta:?}: nonface {b} gives {fast} vs {graph}")
            });
        }
        Ok(())
    })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Three-case closed form for `dim T¹_{a-b}(U(n,k))` in terms of `|A|` and `|b|`.
pub fn uniform_closed_form(n: usize, k: usize, a_len: usize, b_len: usize) -> usize {
    if b_len > 1 && k + 1 == n && a_len <= k {
        1
    } else if b_len == 1 && k + 1 < n && a_len + b_len <= k {
        binomial(n - a_len - 1, n - k - 1) - 1
    } else {
        0
    }
}

pub fn check_uniform_closed_form(limit: usize) -> Result<CheckReport> {
    let pairs: Vec<(usize, usize)> = (1..=limit)
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect();
    run("uniform closed form", &pairs, |&(n, k), t| {
        let u = uniform(n, k)?;
        let ground = VertexSet::full(n);
        for a in ground.subsets() {
            for b in nonempty_subsets(ground - a) {
                let dim = dim_t1(&u, MultiDegree::new(a, b)?)?;
                let closed = uniform_closed_form(n, k, a.len(), b.len());
                t.check(dim == closed, || {
                    format!("U({n},{k}) at ({a},{b}): {dim} vs {closed}")
                });
            }
        }
        Ok(())
    })
}

pub fn check_bijection(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    let ms = matroids(complexes)?;
    run("circuit bijection", &ms, |m, t| {
        for a in m.faces() {
            let lambda = m.link(a)?;
            let circuits = lambda.minimal_nonfaces()?;
            for b in lambda.faces().into_iter().filter(|b| !b.is_empty()) {
                if circuits.iter().all(|c| b.is_subset(*c) || c.is_disjoint(b)) {
                    let outcome = bijection_check(m, a, b)?;
                    t.check(outcome.holds, || {
                        format!(
                            "{m:?}: A={a}, b={b}: {}",
                            outcome.detail.unwrap_or_default()
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

// recognition

pub fn check_recognition(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run(
        "recognition via singleton degrees",
        complexes,
        |delta, t| {
            let via = is_matroid_via_t1(delta)?;
            let exchange = is_matroid_exchange(delta)?;
            t.check(via == exchange, || {
                format!("{delta:?}: via T1 {via}, exchange {exchange}")
            });
            Ok(())
        },
    )
}

pub fn check_singleton_direction(complexes: &[SimplicialComplex]) -> Result<CheckReport> {
    run("singleton discrepancy direction", complexes, |delta, t| {
        for d in formula_discrepancies(delta)? {
            if d.degree.negative().len() == 1 {
                t.check(d.graph_dim < d.formula_dim, || format!("{delta:?}: {d:?}"));
            }
        }
        Ok(())
    })
}

// reconstruction

pub fn check_round_trip(family: &[SimplicialComplex]) -> Result<CheckReport> {
    let mut report = run("reconstruction round trip", family, |m, t| {
        let table = t1_table(m)?;
        match reconstruct(&table) {
            Ok(rebuilt) => t.check(rebuilt == *m, || format!("{m:?} rebuilt as {rebuilt:?}")),
            Err(Error::DiscreteAmbiguous) => {
                t.check(is_discrete(m)?, || format!("{m:?}: reported discrete"))
            }
            Err(e) => t.check(false, || format!("{m:?}: {e}")),
        }
        Ok(())
    })?;
    for n in 0..=3 {
        report.instances += 1;
        if !matches!(
            reconstruct(&T1Table::new(n)?),
            Err(Error::DiscreteAmbiguous)
        ) {
            report
                .violations
                .push(format!("empty table on [{n}] not reported discrete"));
        }
    }
    Ok(report)
}

pub fn check_rigidity(family: &[SimplicialComplex]) -> Result<CheckReport> {
    run("rigid iff discrete", family, |m, t| {
        let rigid = t1_table(m)?.is_empty();
        let discrete = is_discrete(m)?;
        t.check(rigid == discrete, || {
            format!("{m:?}: rigid {rigid}, discrete {discrete}")
        });
        Ok(())
    })
}

pub fn check_link_rigidity(family: &[SimplicialComplex]) -> Result<CheckReport> {
    run("link rigidity at bases", family, |m, t| {
        if !m.loops_and_coloops()?.1.is_empty() {
            return Ok(());
        }
        let table = t1_table(m)?;
        for a in m.faces() {
            let rigid = slice_link_table(&table, a)?.is_empty();
            let basis = m.facets().contains(&a);
            t.check(rigid == basis, || {
                format!("{m:?}: face {a} rigid {rigid}, basis {basis}")
            });
        }
        Ok(())
    })
}

/// `t1_table(M * U(c,c))` consists of the entries of `t1_table(M)` with every
/// subset of the coloops added to `A`.
pub fn check_coloop_extension(family: &[SimplicialComplex]) -> Result<CheckReport> {
    let small: Vec<&SimplicialComplex> = family.iter().filter(|m| m.n() <= 5).collect();
    run("coloop extension", &small, |m, t| {
        let base = t1_table(m)?;
        for c in 1..=2 {
            let joined = m.join(&uniform(c, c)?)?;
            let coloops = joined.ground() - m.ground();
            let mut expected = T1Table::new(joined.n())?;
            for (d, dim) in &base {
                for s in coloops.subsets() {
                    expected.insert(MultiDegree::new(d.positive() | s, d.negative())?, *dim)?;
                }
            }
            let actual = t1_table(&joined)?;
            t.check(actual == expected, || format!("{m:?} with {c} coloops"));
        }
        Ok(())
    })
}

pub fn check_classification(family: &[SimplicialComplex]) -> Result<CheckReport> {
    run("loop and coloop classification", family, |m, t| {
        let table = t1_table(m)?;
        if table.is_empty() {
            return Ok(());
        }
        let (loops, coloops) = m.loops_and_coloops()?;
        for (v, role) in classify_loops_coloops(&table)? {
            let expected = if loops.contains(v) {
                VertexRole::Loop
            } else if coloops.contains(v) {
                VertexRole::Coloop
            } else {
                VertexRole::Ordinary
            };
            t.check(role == expected, || {
                format!("{m:?}: vertex {v} is {expected:?}, got {role:?}")
            });
        }
        Ok(())
    })
}

/// Every check over the census on `≤ max_n` vertices, the reconstruction
/// family built from it, and uniform matroids up to [`UNIFORM_LIMIT`].
pub fn run_all(max_n: usize) -> Result<Vec<CheckReport>> {
    let complexes = complexes_up_to(max_n)?;
    let family = reconstruction_family(max_n)?;
    let checks: Vec<Box<dyn Fn() -> Result<CheckReport> + Sync>> = vec![
        Box::new(|| check_antichain(&complexes)),
        Box::new(|| check_nonface_duality(&complexes)),
        Box::new(|| check_link_restrict_commute(&complexes)),
        Box::new(|| check_rank_monotone(&complexes)),
        Box::new(|| check_join_laws(&complexes)),
        Box::new(|| check_oracle_agreement(&complexes)),
        Box::new(|| check_matroid_closure(&complexes)),
        Box::new(|| check_coloop_free_heredity(&complexes)),
        Box::new(|| check_equicardinal_bases(&complexes)),
        Box::new(|| check_link_reduction(&complexes)),
        Box::new(|| check_minimal_elements(&complexes)),
        Box::new(|| check_reduced_emptiness(&complexes)),
        Box::new(|| check_upper_bound(&complexes)),
        Box::new(|| check_deletion_saturation(&complexes)),
        Box::new(|| check_basis_extension(&complexes)),
        Box::new(|| check_formula_characterization(&complexes)),
        Box::new(|| check_nonface_degree(&complexes)),
        Box::new(|| check_uniform_closed_form(UNIFORM_LIMIT)),
        Box::new(|| check_bijection(&complexes)),
        Box::new(|| check_recognition(&complexes)),
        Box::new(|| check_singleton_direction(&complexes)),
        Box::new(|| check_round_trip(&family)),
        Box::new(|| check_rigidity(&family)),
        Box::new(|| check_link_rigidity(&family)),
        Box::new(|| check_coloop_extension(&family)),
        Box::new(|| check_classification(&family)),
    ];
    checks.iter().map(|check| check()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(uniform_closed_form(4, 2, 0, 1), 2);
        assert_eq!(uniform_closed_form(4, 2, 1, 1), 1);
        assert_eq!(uniform_closed_form(3, 2, 0, 3), 1);
        assert_eq!(uniform_closed_form(3, 2, 0, 1), 0);
        assert_eq!(uniform_closed_form(4, 4, 0, 2), 0);
    }

    #[test]
    fn every_check_passes_on_three_vertices() {
        for report in run_all(3).unwrap() {
            assert!(report.passed(), "{}: {:?}", report.name, report.violations);
            assert!(report.instances > 0, "{} examined nothing", report.name);
        }
    }
}
