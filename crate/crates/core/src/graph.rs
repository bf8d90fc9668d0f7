//! The labeled tetrahedron attached to a 5-dimensional link: vertex, edge,
//! face, and interior labels, reduced indices, genera, and the second Betti
//! number kappa.

use num::{One, Zero};

use crate::arith::{as_nonneg_int, gcd_many, lcm_many, Int, Rat};
use crate::error::{Error, Result};
use crate::link::FractionalWeights;
use crate::orlik::{orlik_c_table, Subset};
use crate::seifert::HomologySummary;
use crate::orlik::TorsionGroup;

/// Labels of the rational Brieskorn polytope for a 4-weight link.
///
/// Edges are keyed by pairs `(i, j)` with `i < j`, faces by the omitted
/// vertex. `genus_terms[i]` holds the raw rational value of `2g_i`; `genera`
/// holds the validated integer genus, which is forced to zero when `m_i = 1`
/// (the corresponding divisor never contributes to torsion).
#[derive(Debug, Clone)]
pub struct BrieskornGraph {
    pub vertex_labels: Vec<(Int, Rat)>,
    pub edge_labels: Vec<((usize, usize), Rat)>,
    pub face_labels: Vec<(usize, Rat)>,
    pub interior: (Rat, Rat),
    pub reduced_indices: Vec<Int>,
    pub genus_terms: Vec<Rat>,
    pub genera: Vec<Int>,
    pub kappa: Int,
}

impl BrieskornGraph {
    pub fn edge(&self, i: usize, j: usize) -> &Rat {
        let key = (i.min(j), i.max(j));
        &self
            .edge_labels
            .iter()
            .find(|(k, _)| *k == key)
            .expect("edge exists")
            .1
    }

    /// Face opposite vertex `i` (the triple omitting `i`).
    pub fn face(&self, i: usize) -> &Rat {
        &self
            .face_labels
            .iter()
            .find(|(k, _)| *k == i)
            .expect("face exists")
            .1
    }
}

/// Builds the polytope for a 4-weight link. Errors when a reduced index
/// `m_i > 1` comes with a `2g_i` that is not a non-negative even integer, or
/// when kappa is not a non-negative integer.
pub fn build_graph(fw: &FractionalWeights) -> Result<BrieskornGraph> {
    if fw.len() != 4 {
        return Err(Error::WrongDimension(fw.len()));
    }
    let u = fw.u();
    let v = fw.v();
    let inv = |x: &Int| Rat::new(Int::one(), x.clone());

    let mut vertex_labels = Vec::with_capacity(4);
    for i in 0..4 {
        let alpha = (0..4)
            .filter(|&j| j != i)
            .fold(Rat::one(), |acc, j| acc - inv(&v[j]));
        vertex_labels.push((u[i].clone(), alpha));
    }

    let mut edge_labels = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            let g = gcd_many([&u[i], &u[j]]);
            edge_labels.push(((i, j), Rat::new(g, &v[i] * &v[j])));
        }
    }

    let mut face_labels = Vec::with_capacity(4);
    for omitted in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&x| x != omitted).collect();
        let g = gcd_many(idx.iter().map(|&x| &u[x]));
        let vv: Int = idx.iter().map(|&x| &v[x]).product();
        face_labels.push((omitted, Rat::new(g, vv)));
    }

    let u_prod: Int = u.iter().product();
    let v_prod: Int = v.iter().product();
    let l = lcm_many(u.iter()).expect("fractional weights are positive");
    let t = Rat::new(u_prod, v_prod * l);
    let tau = v.iter().fold(-Rat::one(), |acc, vi| acc + inv(vi));

    let graph = BrieskornGraph {
        vertex_labels,
        edge_labels,
        face_labels,
        interior: (t.clone(), tau.clone()),
        reduced_indices: vec![],
        genus_terms: vec![],
        genera: vec![],
        kappa: Int::zero(),
    };

    // reduced indices via the c-recursion on the complementary triple
    let c = orlik_c_table(u)?;
    let mut reduced_indices = Vec::with_capacity(4);
    for i in 0..4 {
        let triple = Subset::new((0..4).filter(|&x| x != i).collect());
        let m = c[&triple].clone();
        // closed-form cross-check: u_i times the triple gcds through i over
        // the full gcd and the pair gcds through i
        let mut num = u[i].clone();
        let mut den = gcd_many(u.iter());
        for j in 0..4 {
            if j == i {
                continue;
            }
            den *= gcd_many([&u[i], &u[j]]);
            let other: Vec<&Int> = (0..4).filter(|&x| x != j).map(|x| &u[x]).collect();
            num *= gcd_many(other);
        }
        debug_assert_eq!(&m * &den, num, "reduced index closed form at {i}");
        reduced_indices.push(m);
    }

    // 2g_i from the face opposite vertex i
    let mut genus_terms = Vec::with_capacity(4);
    let mut genera = Vec::with_capacity(4);
    for i in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&x| x != i).collect();
        let edges: Vec<Rat> = vec![
            graph.edge(idx[0], idx[1]).clone(),
            graph.edge(idx[0], idx[2]).clone(),
            graph.edge(idx[1], idx[2]).clone(),
        ];
        let prod: Rat = edges.iter().product();
        let sum: Rat = edges.iter().sum();
        let two_g = prod / graph.face(i).clone() - sum - graph.vertex_labels[i].1.clone();
        let genus = if reduced_indices[i].is_one() {
            Int::zero()
        } else {
            let val = as_nonneg_int(&two_g).ok_or_else(|| {
                Error::NonIntegralInvariant(format!(
                    "2g_{i} = {two_g} with reduced index {} > 1",
                    reduced_indices[i]
                ))
            })?;
            if (&val % Int::from(2)).is_zero() {
                val / Int::from(2)
            } else {
                return Err(Error::NonIntegralInvariant(format!("2g_{i} = {two_g} is odd")));
            }
        };
        genus_terms.push(two_g);
        genera.push(genus);
    }

    // kappa from all six edges and the four face terms
    let edge_sum: Rat = graph.edge_labels.iter().map(|(_, e)| e.clone()).sum();
    let mut face_term_sum = Rat::zero();
    for omitted in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&x| x != omitted).collect();
        let prod = graph.edge(idx[0], idx[1]).clone()
            * graph.edge(idx[0], idx[2]).clone()
            * graph.edge(idx[1], idx[2]).clone();
        face_term_sum += prod / graph.face(omitted).clone();
    }
    let kappa_rat = edge_sum - face_term_sum - tau + t;
    let kappa = as_nonneg_int(&kappa_rat)
        .ok_or_else(|| Error::NonIntegralInvariant(format!("kappa = {kappa_rat}")))?;

    Ok(BrieskornGraph {
        reduced_indices,
        genus_terms,
        genera,
        kappa,
        ..graph
    })
}

/// `H_2 = Z^kappa + sum over i of (Z/m_i)^{2 g_i}`, unit factors dropped.
pub fn graph_homology(g: &BrieskornGraph) -> HomologySummary {
    let mut orders: Vec<Int> = Vec::new();
    for (m, genus) in g.reduced_indices.iter().zip(&g.genera) {
        if !m.is_one() {
            let copies = usize::try_from(genus.clone() * Int::from(2)).expect("small genus");
            orders.extend(std::iter::repeat(m.clone()).take(copies));
        }
    }
    HomologySummary {
        b2: g.kappa.clone(),
        torsion: TorsionGroup::from_orders(orders.iter()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::link::{from_bp, fractional_weights, BPExponents, LinkDescriptor};

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn fw_of_bp(a: &[i64]) -> FractionalWeights {
        fractional_weights(&from_bp(&BPExponents::new(ints(a)).unwrap()))
    }

    fn fw_of(w: &[i64], d: i64) -> FractionalWeights {
        fractional_weights(&LinkDescriptor::new(ints(w), int(d)).unwrap())
    }

    #[test]
    fn kappa_spot_values() {
        assert_eq!(build_graph(&fw_of_bp(&[2, 3, 3, 18])).unwrap().kappa, int(4));
        assert_eq!(build_graph(&fw_of(&[2, 22, 17, 34], 68)).unwrap().kappa, int(3));
        assert_eq!(build_graph(&fw_of_bp(&[2, 2, 2, 5])).unwrap().kappa, int(0));
    }

    #[test]
    fn table3_row1_labels() {
        let g = build_graph(&fw_of(&[2, 22, 17, 34], 68)).unwrap();
        assert_eq!(g.interior.0, rat(136, 11));
        assert_eq!(g.interior.1, rat(23, 11));
        assert_eq!(g.reduced_indices, ints(&[1, 1, 2, 1]));
        assert_eq!(g.genera[2], int(1));
        let h = graph_homology(&g);
        assert_eq!(h.b2, int(3));
        assert_eq!(h.torsion.invariant_factors(), &ints(&[2, 2])[..]);
    }

    #[test]
    fn homology_spot_values() {
        let h = graph_homology(&build_graph(&fw_of_bp(&[2, 3, 5, 75])).unwrap());
        assert_eq!(h.b2, int(0));
        assert_eq!(h.torsion.to_string_canonical(), "(Z/2)^8");

        let h = graph_homology(&build_graph(&fw_of_bp(&[2, 3, 3, 18])).unwrap());
        assert_eq!(h.b2, int(4));
        assert!(h.torsion.is_trivial());
    }

    #[test]
    fn wrong_dimension_rejected() {
        let fw = fractional_weights(&LinkDescriptor::new(ints(&[1, 1, 1]), int(3)).unwrap());
        assert!(matches!(build_graph(&fw), Err(Error::WrongDimension(3))));
    }

    #[test]
    fn reduced_index_equals_complementary_weight_gcd() {
        for a in [[2i64, 3, 3, 18], [2, 3, 5, 75], [2, 2, 2, 5], [4, 6, 6, 12]] {
            let link = from_bp(&BPExponents::new(ints(&a)).unwrap());
            let g = build_graph(&fractional_weights(&link)).unwrap();
            let w = link.weights();
            for i in 0..4 {
                let expect = gcd_many((0..4).filter(|&x| x != i).map(|x| &w[x]));
                assert_eq!(g.reduced_indices[i], expect, "a = {a:?}, i = {i}");
            }
        }
    }
}
