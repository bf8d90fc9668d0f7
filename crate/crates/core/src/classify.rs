//! Smale-Barden names and the existence/obstruction verdicts for extremal and
//! Sasaki-Einstein structures on 5-dimensional links.

use num::{Integer, One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::graph::{build_graph, graph_homology};
use crate::link::{
    fractional_weights, link_index, BPExponents, FractionalWeights, LinkDescriptor, LinkIndex,
    LinkSign,
};
use crate::orlik::{orlik_torsion, TorsionGroup};
use crate::polynomial::Polynomial;
use crate::seifert::{kollar_homology, HomologySummary};
use crate::tables;

/// Connected-sum normal form of a closed simply connected spin 5-manifold:
/// `k` copies of S^2 x S^3 plus one M_m per invariant factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmaleName {
    /// Number of M_infinity summands (= b2).
    pub k: Int,
    /// Ascending divisibility chain m_1 | m_2 | ..., each >= 2.
    pub ms: Vec<Int>,
}

impl SmaleName {
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.k.is_positive() {
            if self.k.is_one() {
                parts.push("M_∞".to_string());
            } else {
                parts.push(format!("{}M_∞", self.k));
            }
        }
        let mut i = 0;
        while i < self.ms.len() {
            let run = self.ms[i..].iter().take_while(|m| **m == self.ms[i]).count();
            if run == 1 {
                parts.push(format!("M_{}", self.ms[i]));
            } else {
                parts.push(format!("{}M_{}", run, self.ms[i]));
            }
            i += run;
        }
        if parts.is_empty() {
            "S^5".to_string()
        } else {
            parts.join(" # ")
        }
    }

    /// Accepts renderings like "S^5", "M_1", "4M_inf # M_2", "2M_∞#M_2".
    pub fn parse(text: &str) -> Result<SmaleName> {
        let mut k = Int::zero();
        let mut ms: Vec<Int> = Vec::new();
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned == "S^5" {
            return Ok(SmaleName { k, ms });
        }
        for part in cleaned.split('#') {
            let bad = || Error::TableData(format!("unrecognized manifold name part '{part}'"));
            let idx = part.find('M').ok_or_else(bad)?;
            let count: Int = if idx == 0 {
                Int::one()
            } else {
                part[..idx].parse().map_err(|_| bad())?
            };
            let suffix = part[idx..].strip_prefix("M_").ok_or_else(bad)?;
            if suffix == "∞" || suffix.eq_ignore_ascii_case("inf") {
                k += count;
            } else {
                let m: Int = suffix.parse().map_err(|_| bad())?;
                if m.is_one() {
                    continue; // M_1 = S^5 contributes nothing
                }
                let copies = usize::try_from(count).map_err(|_| bad())?;
                ms.extend(std::iter::repeat(m).take(copies));
            }
        }
        ms.sort();
        Ok(SmaleName { k, ms })
    }
}

impl std::fmt::Display for SmaleName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Regroups paired torsion into the Smale normal form.
pub fn smale_name(h: &HomologySummary) -> Result<SmaleName> {
    let divisors = h.torsion.elementary_divisors();
    let mut halved: Vec<Int> = Vec::new();
    let mut i = 0;
    while i < divisors.len() {
        let run = divisors[i..].iter().take_while(|q| **q == divisors[i]).count();
        if run % 2 != 0 {
            return Err(Error::UnpairedTorsion(divisors[i].to_string()));
        }
        halved.extend(std::iter::repeat(divisors[i].clone()).take(run / 2));
        i += run;
    }
    let mut ms = TorsionGroup::from_orders(halved.iter())
        .invariant_factors()
        .to_vec();
    ms.reverse(); // ascending chain
    Ok(SmaleName {
        k: h.b2.clone(),
        ms,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lichnerowicz {
    Obstructed,
    Borderline,
    NotObstructed,
    NotApplicable,
}

/// The index estimate: a positive link with `I > n * min(w_i)` admits no
/// Sasaki-Einstein metric and its natural extremal set is empty. Equality is
/// reported as Borderline, never as an obstruction.
pub fn lichnerowicz_check(link: &LinkDescriptor) -> Lichnerowicz {
    let ix = link_index(link);
    if ix.sign != LinkSign::Positive {
        return Lichnerowicz::NotApplicable;
    }
    let n = Int::from(link.n() as u64);
    let bound = n * link.weights().iter().min().expect("nonempty weights");
    match ix.index.cmp(&bound) {
        std::cmp::Ordering::Greater => Lichnerowicz::Obstructed,
        std::cmp::Ordering::Equal => Lichnerowicz::Borderline,
        std::cmp::Ordering::Less => Lichnerowicz::NotObstructed,
    }
}

/// The Klt interval test for a BP link: both bounds and the witnessing data.
#[derive(Debug, Clone)]
pub struct KltData {
    /// `C^j = lcm(a_i : i != j)`.
    pub c_upper: Vec<Int>,
    /// `b_j = gcd(a_j, C^j)`.
    pub b: Vec<Int>,
    pub sum: Rat,
    pub lower: Rat,
    pub upper: Rat,
    pub verdict: bool,
}

/// `1 < sum 1/a_i < 1 + n/(n-1) * min{1/a_i, 1/(b_i b_j)}`; a true verdict
/// means the base carries a positive Kaehler-Einstein orbifold metric, so the
/// link is Sasaki-Einstein.
pub fn klt_check(a: &BPExponents) -> KltData {
    let exps = a.exponents();
    let n = exps.len() - 1;
    let c_upper: Vec<Int> = (0..exps.len())
        .map(|j| {
            crate::arith::lcm_many(
                exps.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, x)| x),
            )
            .expect("BP exponents are positive")
        })
        .collect();
    let b: Vec<Int> = exps
        .iter()
        .zip(&c_upper)
        .map(|(aj, cj)| aj.gcd(cj))
        .collect();
    let sum: Rat = exps.iter().map(|ai| Rat::new(Int::one(), ai.clone())).sum();
    let mut min = exps
        .iter()
        .map(|ai| Rat::new(Int::one(), ai.clone()))
        .min()
        .expect("nonempty");
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            min = min.min(Rat::new(Int::one(), &b[i] * &b[j]));
        }
    }
    let lower = Rat::one();
    let upper =
        Rat::one() + Rat::new(Int::from(n as u64), Int::from((n - 1) as u64)) * min;
    let verdict = sum > lower && sum < upper;
    KltData {
        c_upper,
        b,
        sum,
        lower,
        upper,
        verdict,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkVerdict {
    ExtremalYes,
    ExtremalNo,
    NotApplicable,
}

/// The sharp criterion for pairwise-coprime BP links: extremal iff
/// `sum 1/a_i < 1 + n * min 1/a_i`. Applies only to positive links with
/// pairwise coprime exponents.
pub fn gk_coprime_check(a: &BPExponents) -> GkVerdict {
    if !a.pairwise_coprime() {
        return GkVerdict::NotApplicable;
    }
    let link = crate::link::from_bp(a);
    if link_index(&link).sign != LinkSign::Positive {
        return GkVerdict::NotApplicable;
    }
    let exps = a.exponents();
    let n = Int::from((exps.len() - 1) as u64);
    let sum: Rat = exps.iter().map(|ai| Rat::new(Int::one(), ai.clone())).sum();
    let min = exps
        .iter()
        .map(|ai| Rat::new(Int::one(), ai.clone()))
        .min()
        .expect("nonempty");
    if sum < Rat::one() + Rat::from(n) * min {
        GkVerdict::ExtremalYes
    } else {
        GkVerdict::ExtremalNo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeDim {
    ExactlyOne,
    Undetermined,
}

/// The Sasaki cone is one-dimensional when `2 w_i < d` at all but at most one
/// index; otherwise this bound says nothing.
pub fn cone_dim_bound(link: &LinkDescriptor) -> ConeDim {
    let d = link.degree();
    let failures = link
        .weights()
        .iter()
        .filter(|&w| &(w * Int::from(2)) >= d)
        .count();
    if failures <= 1 {
        ConeDim::ExactlyOne
    } else {
        ConeDim::Undetermined
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaEinstein {
    ExistsByTransverseAubinYau,
    Unknown,
}

/// Negative and null links carry eta-Einstein metrics on their whole
/// (one-dimensional) Sasaki cone.
pub fn eta_einstein_check(link: &LinkDescriptor) -> EtaEinstein {
    match link_index(link).sign {
        LinkSign::Negative | LinkSign::Null => EtaEinstein::ExistsByTransverseAubinYau,
        LinkSign::Positive => EtaEinstein::Unknown,
    }
}

/// The allow-list of torsion groups of positive Sasakian 5-manifolds:
/// (Z/m)^2, (Z/5)^4, (Z/4)^4, (Z/3)^4, (Z/3)^6, (Z/3)^8, (Z/2)^{2n}.
pub fn positive_torsion_allowed(t: &TorsionGroup) -> bool {
    if t.is_trivial() {
        return true; // (Z/1)^2
    }
    let inv = t.invariant_factors();
    if inv.len() == 2 && inv[0] == inv[1] {
        return true; // (Z/m)^2
    }
    let all_equal = |x: i64| inv.iter().all(|m| m == &Int::from(x));
    if all_equal(2) && inv.len() % 2 == 0 {
        return true; // (Z/2)^{2n}
    }
    if all_equal(3) && matches!(inv.len(), 4 | 6 | 8) {
        return true;
    }
    if (all_equal(4) || all_equal(5)) && inv.len() == 4 {
        return true;
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeTableEntry {
    Yes,
    Open,
    NotListed,
}

/// Looks the manifold up in the embedded table of simply connected spin
/// 5-manifolds admitting Sasaki-Einstein metrics. `Yes` when a row's
/// sufficient condition holds, `Open` when the manifold is listed but no
/// condition applies, `NotListed` otherwise (then no Sasaki-Einstein metric
/// exists on it).
pub fn se_table_lookup(name: &SmaleName) -> SeTableEntry {
    let rows = tables::table1_rows();
    let mut listed = false;
    for row in rows {
        if let Some(entry) = row.matches(name) {
            match entry {
                SeTableEntry::Yes => return SeTableEntry::Yes,
                _ => listed = true,
            }
        }
    }
    if listed {
        SeTableEntry::Open
    } else {
        SeTableEntry::NotListed
    }
}

/// Everything the library can say about one link.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub descriptor: LinkDescriptor,
    pub fractional: FractionalWeights,
    pub index: LinkIndex,
    pub graph_route: HomologySummary,
    pub seifert_route: HomologySummary,
    pub routes_agree: bool,
    pub smale: SmaleName,
    pub cone_dim: ConeDim,
    pub lichnerowicz: Lichnerowicz,
    pub klt: Option<KltData>,
    pub gk: Option<GkVerdict>,
    pub eta_einstein: EtaEinstein,
    pub se_table: SeTableEntry,
    pub torsion_allowed: bool,
}

/// Does `f` consist of one pure power per variable?
fn bp_shape(f: &Polynomial) -> Option<BPExponents> {
    let n = f.variables();
    if f.monomials().len() != n {
        return None;
    }
    let mut exps = vec![Int::zero(); n];
    for m in f.monomials() {
        let support = m.support();
        let [i] = support.as_slice() else { return None };
        if !exps[*i].is_zero() {
            return None;
        }
        exps[*i] = Int::from(m.exponents[*i]);
    }
    BPExponents::new(exps).ok()
}

/// Runs both homology routes, asserts their agreement, and fills every
/// verdict field. `f`, when given, is checked for quasi-smoothness; `bp`
/// enables the BP-only criteria and is derived from `f` when `f` has the BP
/// shape.
pub fn classify_link(
    link: &LinkDescriptor,
    f: Option<&Polynomial>,
    bp: Option<&BPExponents>,
) -> Result<ClassificationReport> {
    if link.weights().len() != 4 {
        return Err(Error::WrongDimension(link.weights().len()));
    }
    let derived_bp = match bp {
        Some(b) => Some(b.clone()),
        None => f.and_then(bp_shape),
    };
    let fractional = fractional_weights(link);
    let index = link_index(link);

    let graph = build_graph(&fractional)?;
    let graph_route = graph_homology(&graph);
    let seifert_route = kollar_homology(link, f)?;
    let orlik = orlik_torsion(&fractional)?;
    if graph_route.torsion != seifert_route.torsion || graph_route.torsion != orlik {
        return Err(Error::InternalInconsistency(format!(
            "graph {} / seifert {} / subset-lattice {}",
            graph_route.torsion.to_string_canonical(),
            seifert_route.torsion.to_string_canonical(),
            orlik.to_string_canonical()
        )));
    }
    if graph_route.b2 != seifert_route.b2 {
        return Err(Error::InternalInconsistency(format!(
            "b2 {} vs {}",
            graph_route.b2, seifert_route.b2
        )));
    }

    let smale = smale_name(&graph_route)?;
    let se_table = se_table_lookup(&smale);
    let torsion_allowed = positive_torsion_allowed(&graph_route.torsion);
    let klt = derived_bp.as_ref().map(klt_check);
    let gk = derived_bp.as_ref().map(gk_coprime_check);

    Ok(ClassificationReport {
        cone_dim: cone_dim_bound(link),
        lichnerowicz: lichnerowicz_check(link),
        eta_einstein: eta_einstein_check(link),
        descriptor: link.clone(),
        fractional,
        index,
        routes_agree: true,
        graph_route,
        seifert_route,
        smale,
        klt,
        gk,
        se_table,
        torsion_allowed,
    })
}
