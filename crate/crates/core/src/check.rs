//! Cross-verification of the two torsion routes and the identities tying the
//! polytope labels to the weight data. Shared by the `verify` command and the
//! test suite.

use num::{Integer, One, Signed};

use crate::arith::{gcd_many, Int, Rat};
use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::link::{fractional_weights, LinkDescriptor};
use crate::orlik::{orlik_k_table, orlik_torsion, Subset};
use crate::seifert::{branch_divisors, kollar_homology, ramification_indices};

/// Runs the full identity suite on one 5-dimensional link:
///
/// (a) every edge label equals `d * gcd(w_i, w_j) / (w_i w_j)`;
/// (b) the reduced index `m_i` equals the gcd of the complementary weights;
/// (c) `2 g_i` equals the complementary subset invariant and, when `m_i > 1`,
///     twice the branch-divisor genus;
/// (d) `kappa` is a non-negative integer, and so is every `2 g_i` with
///     `m_i > 1`;
/// and checks that the subset-lattice torsion and the branch-divisor torsion
/// agree as abstract groups.
pub fn cross_check(link: &LinkDescriptor) -> Result<()> {
    let fail = |msg: String| Err(Error::InternalInconsistency(msg));
    let w = link.weights();
    let d = link.degree();
    let fw = fractional_weights(link);
    let graph = build_graph(&fw)?;

    // (a)
    for ((i, j), label) in &graph.edge_labels {
        let expected = Rat::new(d * w[*i].gcd(&w[*j]), &w[*i] * &w[*j]);
        if label != &expected {
            return fail(format!(
                "edge ({i},{j}) label {label} != d*gcd(w_i,w_j)/(w_i w_j) = {expected} on {link:?}"
            ));
        }
    }

    // (b)
    let ms = ramification_indices(link)?;
    for i in 0..4 {
        let g = gcd_many((0..4).filter(|&j| j != i).map(|j| &w[j]));
        if graph.reduced_indices[i] != g || ms[i] != g {
            return fail(format!(
                "m_{i}: polytope {} vs gcd {} vs seifert {} on {link:?}",
                graph.reduced_indices[i], g, ms[i]
            ));
        }
    }

    // (c)
    let k = orlik_k_table(&fw);
    let divisors = branch_divisors(link)?;
    for i in 0..4 {
        let triple = Subset::new((0..4).filter(|&x| x != i).collect());
        if graph.genus_terms[i] != k[&triple] {
            return fail(format!(
                "2g_{i} = {} but the complementary subset invariant is {} on {link:?}",
                graph.genus_terms[i], k[&triple]
            ));
        }
        if !ms[i].is_one() {
            let twice = Rat::from(&divisors[i].genus * Int::from(2));
            if graph.genus_terms[i] != twice {
                return fail(format!(
                    "2g_{i} = {} but the divisor genus is {} on {link:?}",
                    graph.genus_terms[i], divisors[i].genus
                ));
            }
        }
    }

    // (d)
    if graph.kappa.is_negative() {
        return fail(format!("kappa = {} is negative on {link:?}", graph.kappa));
    }
    for i in 0..4 {
        if ms[i].is_one() {
            continue;
        }
        let t = &graph.genus_terms[i];
        if !t.is_integer() || t.is_negative() || t.numer().is_odd() {
            return fail(format!(
                "2g_{i} = {t} is not a non-negative even integer on {link:?}"
            ));
        }
    }

    // the two torsion routes
    let by_subsets = orlik_torsion(&fw)?;
    let by_divisors = kollar_homology(link, None)?;
    if by_subsets != by_divisors.torsion {
        return fail(format!(
            "torsion {} (subset route) vs {} (divisor route) on {link:?}",
            by_subsets.to_string_canonical(),
            by_divisors.torsion.to_string_canonical()
        ));
    }
    if Rat::from(by_divisors.b2.clone()) != Rat::from(graph.kappa.clone()) {
        return fail(format!(
            "b2 {} vs kappa {} on {link:?}",
            by_divisors.b2, graph.kappa
        ));
    }
    Ok(())
}

/// All non-decreasing BP exponent tuples `2 <= a_0 <= ... <= a_3 <= max`.
pub fn bp_tuples_up_to(max: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for a0 in 2..=max {
        for a1 in a0..=max {
            for a2 in a1..=max {
                for a3 in a2..=max {
                    out.push([a0, a1, a2, a3]);
                }
            }
        }
    }
    out
}
