//! The branch-divisor route to H2 of a 5-dimensional link: ramification
//! indices from complementary weight gcds and the orbifold curve genus
//! formula.

use num::{Integer, One, Zero};

use crate::arith::{as_nonneg_int, gcd_many, Int, Rat};
use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::link::{fractional_weights, LinkDescriptor};
use crate::orlik::TorsionGroup;
use crate::polynomial::{quasismooth_surface, Polynomial};

/// Rank and torsion of H2 of a simply connected 5-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub b2: Int,
    pub torsion: TorsionGroup,
}

impl HomologySummary {
    /// Every elementary divisor of a 5-link torsion group occurs an even
    /// number of times.
    pub fn torsion_pairs_up(&self) -> bool {
        let divisors = self.torsion.elementary_divisors();
        let mut i = 0;
        while i < divisors.len() {
            let run = divisors[i..].iter().take_while(|q| **q == divisors[i]).count();
            if run % 2 != 0 {
                return false;
            }
            i += run;
        }
        true
    }
}

/// One branch divisor `D_i` of the Seifert fibration.
#[derive(Debug, Clone)]
pub struct BranchDivisor {
    pub index: usize,
    pub ramification: Int,
    pub normalized_weights: Vec<Int>,
    pub reduced_degree: Int,
    pub genus: Int,
}

/// Genus of a quasi-smooth curve of degree `deg` in the weighted projective
/// plane with primitive weights `wt`.
pub fn divisor_genus(wt: &[Int; 3], deg: &Int) -> Result<Int> {
    assert!(
        gcd_many(wt.iter()).is_one(),
        "normalized weights must be primitive"
    );
    let mut value = Rat::new(deg * deg, wt.iter().product());
    for i in 0..3 {
        for j in i + 1..3 {
            let g = wt[i].gcd(&wt[j]);
            value -= Rat::new(deg * g, &wt[i] * &wt[j]);
        }
    }
    for wi in wt {
        value += Rat::new(deg.gcd(wi), wi.clone());
    }
    value -= Rat::one();
    value /= Rat::from(Int::from(2));
    as_nonneg_int(&value).ok_or_else(|| Error::NonIntegralGenus {
        weights: format!("({},{},{})", wt[0], wt[1], wt[2]),
        degree: deg.to_string(),
    })
}

/// `m_i = gcd(w_j : j != i)` for a 4-weight descriptor.
pub fn ramification_indices(link: &LinkDescriptor) -> Result<[Int; 4]> {
    let w = link.weights();
    if w.len() != 4 {
        return Err(Error::WrongDimension(w.len()));
    }
    Ok(std::array::from_fn(|i| {
        gcd_many((0..4).filter(|&j| j != i).map(|j| &w[j]))
    }))
}

/// The four branch divisors; only those with `m_i > 1` carry torsion.
pub fn branch_divisors(link: &LinkDescriptor) -> Result<Vec<BranchDivisor>> {
    let w = link.weights();
    let d = link.degree();
    let ms = ramification_indices(link)?;
    let mut out = Vec::with_capacity(4);
    for (i, m) in ms.iter().enumerate() {
        let normalized: Vec<Int> = (0..4)
            .filter(|&j| j != i)
            .map(|j| &w[j] / m)
            .collect();
        let triple: [Int; 3] = normalized.clone().try_into().unwrap();
        if !m.is_one() && !(d % m).is_zero() {
            return Err(Error::NonIntegralInvariant(format!(
                "ramification index m_{i} = {m} does not divide the degree {d}"
            )));
        }
        let reduced_degree = d / m;
        let genus = if m.is_one() {
            // the divisor lies in the smooth locus; its genus is irrelevant
            Int::zero()
        } else {
            divisor_genus(&triple, &reduced_degree)?
        };
        out.push(BranchDivisor {
            index: i,
            ramification: m.clone(),
            normalized_weights: normalized,
            reduced_degree,
            genus,
        });
    }
    Ok(out)
}

/// H2 of the link by the branch-divisor formula; `b2` is taken from the
/// polytope. When `f` is supplied its quasi-smoothness is checked first,
/// otherwise the caller asserts it.
pub fn kollar_homology(link: &LinkDescriptor, f: Option<&Polynomial>) -> Result<HomologySummary> {
    if link.weights().len() != 4 {
        return Err(Error::WrongDimension(link.weights().len()));
    }
    if let Some(f) = f {
        let report = quasismooth_surface(f, link)?;
        if !report.verdict {
            return Err(Error::NotQuasiSmooth);
        }
    }
    let graph = build_graph(&fractional_weights(link))?;
    let mut orders: Vec<Int> = Vec::new();
    for div in branch_divisors(link)? {
        if !div.ramification.is_one() {
            let copies = usize::try_from(div.genus.clone() * Int::from(2)).expect("small genus");
            orders.extend(std::iter::repeat(div.ramification.clone()).take(copies));
        }
    }
    Ok(HomologySummary {
        b2: graph.kappa,
        torsion: TorsionGroup::from_orders(orders.iter()),
    })
}
