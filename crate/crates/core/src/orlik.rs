//! The subset-lattice torsion algorithm: c-values from gcd peeling, alternating
//! k-sums, and the resulting invariant factors of the middle homology torsion.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::arith::{exact_div, factorize, gcd_many, lcm_many, Int, Rat};
use crate::error::{Error, Result};
use crate::link::FractionalWeights;

/// A subset of the index set {0, ..., n}, ordered by cardinality and then
/// lexicographically on the sorted index list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset {
    indices: Vec<usize>,
}

impl Subset {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Subset { indices }
    }

    pub fn empty() -> Self {
        Subset { indices: vec![] }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn complement(&self, n_vars: usize) -> Subset {
        Subset {
            indices: (0..n_vars).filter(|&i| !self.contains(i)).collect(),
        }
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(&self) -> Vec<Subset> {
        let mut out = Vec::with_capacity(1 << self.indices.len());
        for mask in 0u32..(1 << self.indices.len()) {
            let indices = self
                .indices
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            out.push(Subset { indices });
        }
        out
    }

    pub fn is_proper_subset_of(&self, other: &Subset) -> bool {
        self.indices.len() < other.indices.len()
            && self.indices.iter().all(|&i| other.contains(i))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.indices
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All proper subsets of {0, ..., n_vars-1} in canonical order. The full set
/// is omitted: its c-value would involve a gcd over the empty complement, and
/// its k-value is always zero.
pub fn proper_subsets(n_vars: usize) -> Vec<Subset> {
    let mut all = Subset::new((0..n_vars).collect()).subsets();
    all.pop();
    all.sort();
    all
}

/// A finite abelian group in both canonical presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionGroup {
    /// Descending divisibility chain, unit factors dropped.
    invariant_factors: Vec<Int>,
    /// Sorted multiset of prime powers.
    elementary_divisors: Vec<Int>,
}

impl TorsionGroup {
    pub fn trivial() -> Self {
        TorsionGroup {
            invariant_factors: vec![],
            elementary_divisors: vec![],
        }
    }

    /// Canonical form from any list of cyclic orders; equal groups compare
    /// equal regardless of the input presentation.
    pub fn from_orders<'a, I>(orders: I) -> Self
    where
        I: IntoIterator<Item = &'a Int>,
    {
        let mut elementary: Vec<Int> = Vec::new();
        for d in orders {
            assert!(d.is_positive(), "cyclic order must be positive");
            // Z/d splits into one Z/p^e per prime of d
            for (p, e) in factorize(d) {
                elementary.push(p.pow(e));
            }
        }
        Self::from_elementary(elementary)
    }

    fn from_elementary(mut elementary: Vec<Int>) -> Self {
        elementary.sort();
        // regroup into the descending divisibility chain: repeatedly take the
        // largest power of each prime present
        let mut by_prime: BTreeMap<Int, Vec<Int>> = BTreeMap::new();
        for q in &elementary {
            let f = factorize(q);
            debug_assert_eq!(f.len(), 1, "elementary divisor must be a prime power");
            by_prime.entry(f[0].0.clone()).or_default().push(q.clone());
        }
        for v in by_prime.values_mut() {
            v.sort();
        }
        let mut invariant_factors = Vec::new();
        loop {
            let mut factor = Int::one();
            for v in by_prime.values_mut() {
                if let Some(q) = v.pop() {
                    factor *= q;
                }
            }
            if factor.is_one() {
                break;
            }
            invariant_factors.push(factor);
        }
        TorsionGroup {
            invariant_factors,
            elementary_divisors: elementary,
        }
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn elementary_divisors(&self) -> &[Int] {
        &self.elementary_divisors
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Rendering like "(Z/2)^8 + Z/5" grouped by elementary divisor.
    pub fn to_string_canonical(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut groups: Vec<(Int, usize)> = Vec::new();
        for q in &self.elementary_divisors {
            match groups.last_mut() {
                Some((prev, count)) if prev == q => *count += 1,
                _ => groups.push((q.clone(), 1)),
            }
        }
        groups
            .iter()
            .map(|(q, c)| {
                if *c == 1 {
                    format!("Z/{q}")
                } else {
                    format!("(Z/{q})^{c}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The full table of c-values, k-values, and invariant factors.
#[derive(Debug, Clone)]
pub struct OrlikTable {
    pub c: BTreeMap<Subset, Int>,
    pub k: BTreeMap<Subset, Rat>,
    pub r: usize,
    pub invariant_factors: Vec<Int>,
}

/// The gcd-peeling recursion: `c_S = gcd(u_i : i not in S) / prod of c_T over
/// proper subsets T of S`, computed by increasing cardinality.
pub fn orlik_c_table(u: &[Int]) -> Result<BTreeMap<Subset, Int>> {
    let n_vars = u.len();
    let mut table: BTreeMap<Subset, Int> = BTreeMap::new();
    for s in proper_subsets(n_vars) {
        let complement_gcd = gcd_many(s.complement(n_vars).indices().iter().map(|&i| &u[i]));
        let mut denom = Int::one();
        for t in s.subsets() {
            if t.len() < s.len() {
                denom *= &table[&t];
            }
        }
        let c = exact_div(&complement_gcd, &denom).ok_or_else(|| Error::NonIntegralC(s.to_string()))?;
        if !c.is_positive() {
            return Err(Error::NonIntegralC(s.to_string()));
        }
        table.insert(s, c);
    }
    Ok(table)
}

fn epsilon(m: usize) -> Rat {
    if m % 2 == 1 {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// Alternating k-sums over all subsets T of S (the full T = S term and the
/// empty term included).
pub fn orlik_k_table(fw: &FractionalWeights) -> BTreeMap<Subset, Rat> {
    let n_vars = fw.len();
    let n = n_vars - 1;
    let mut table = BTreeMap::new();
    for s in proper_subsets(n_vars) {
        let size = s.len();
        let eps = epsilon(n - size + 1);
        let k = if eps.is_zero() {
            Rat::zero()
        } else {
            let mut sum = Rat::zero();
            for t in s.subsets() {
                let u_prod: Int = t.indices().iter().map(|&i| &fw.u()[i]).product();
                let v_prod: Int = t.indices().iter().map(|&i| &fw.v()[i]).product();
                let l = lcm_many(t.indices().iter().map(|&i| &fw.u()[i]))
                    .expect("fractional weights are positive");
                let term = Rat::new(u_prod, v_prod * l);
                if (size - t.len()) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            sum
        };
        table.insert(s, k);
    }
    table
}

/// Full subset table and the torsion invariant factors
/// `d_j = prod of c_S over subsets with k_S >= j`, `1 <= j <= floor(max k)`.
pub fn orlik_table(fw: &FractionalWeights) -> Result<OrlikTable> {
    let c = orlik_c_table(fw.u())?;
    let k = orlik_k_table(fw);
    let max_k = k.values().max().cloned().unwrap_or_else(Rat::zero);
    let r = if max_k.is_positive() {
        usize::try_from(max_k.floor().to_integer()).unwrap_or(0)
    } else {
        0
    };
    let mut invariant_factors = Vec::with_capacity(r);
    for j in 1..=r {
        let threshold = Rat::from(Int::from(j));
        let mut d = Int::one();
        for (s, kv) in &k {
            if kv >= &threshold {
                d *= &c[s];
            }
        }
        invariant_factors.push(d);
    }
    Ok(OrlikTable {
        c,
        k,
        r,
        invariant_factors,
    })
}

/// Torsion of the middle homology group, in canonical form.
pub fn orlik_torsion(fw: &FractionalWeights) -> Result<TorsionGroup> {
    let table = orlik_table(fw)?;
    Ok(TorsionGroup::from_orders(table.invariant_factors.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::link::{from_bp, fractional_weights, BPExponents, LinkDescriptor};

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn sub(indices: &[usize]) -> Subset {
        Subset::new(indices.to_vec())
    }

    fn fw_of(w: &[i64], d: i64) -> FractionalWeights {
        fractional_weights(&LinkDescriptor::new(ints(w), int(d)).unwrap())
    }

    fn fw_of_bp(a: &[i64]) -> FractionalWeights {
        fractional_weights(&from_bp(&BPExponents::new(ints(a)).unwrap()))
    }

    #[test]
    fn subset_order_is_cardinality_then_lex() {
        let all = proper_subsets(4);
        assert_eq!(all.len(), 15);
        assert_eq!(all[0], Subset::empty());
        assert_eq!(all[5], sub(&[0, 1]));
        assert_eq!(all[6], sub(&[0, 2]));
        assert_eq!(all[7], sub(&[0, 3]));
        assert_eq!(all[8], sub(&[1, 2]));
        assert_eq!(all[14], sub(&[1, 2, 3]));
    }

    #[test]
    fn c_table_bp_2_3_3_18() {
        let c = orlik_c_table(&ints(&[2, 3, 3, 18])).unwrap();
        assert_eq!(c[&Subset::empty()], int(1));
        assert_eq!(c[&sub(&[0])], int(3));
        assert_eq!(c[&sub(&[1])], int(1));
        assert_eq!(c[&sub(&[2])], int(1));
        assert_eq!(c[&sub(&[3])], int(1));
        assert_eq!(c[&sub(&[1, 2])], int(2));
        assert_eq!(c[&sub(&[0, 1, 2])], int(3));
        assert_eq!(c[&sub(&[0, 1, 3])], int(1));
        assert_eq!(c[&sub(&[0, 2, 3])], int(1));
        assert_eq!(c[&sub(&[1, 2, 3])], int(1));
        for pair in [[0usize, 1], [0, 2], [0, 3], [1, 3], [2, 3]] {
            assert_eq!(c[&sub(&pair)], int(1), "pair {pair:?}");
        }
    }

    #[test]
    fn c_table_34_34_4_2() {
        let c = orlik_c_table(&ints(&[34, 34, 4, 2])).unwrap();
        assert_eq!(c[&Subset::empty()], int(2));
        assert_eq!(c[&sub(&[2, 3])], int(17));
        assert_eq!(c[&sub(&[0, 1, 3])], int(2));
        for i in 0..4 {
            assert_eq!(c[&sub(&[i])], int(1));
        }
    }

    #[test]
    fn c_table_units() {
        let c = orlik_c_table(&ints(&[1, 1, 1, 1])).unwrap();
        assert!(c.values().all(|v| v == &int(1)));
    }

    #[test]
    fn reconstruction_identity() {
        for u in [
            ints(&[2, 3, 3, 18]),
            ints(&[34, 34, 4, 2]),
            ints(&[2, 3, 5, 75]),
            ints(&[6, 10, 15, 30]),
        ] {
            let c = orlik_c_table(&u).unwrap();
            for s in proper_subsets(u.len()) {
                let g = gcd_many(s.complement(u.len()).indices().iter().map(|&i| &u[i]));
                let prod: Int = s.subsets().iter().map(|t| c[t].clone()).product();
                assert_eq!(g, prod, "subset {s}");
            }
        }
    }

    #[test]
    fn k_table_examples() {
        let k = orlik_k_table(&fw_of(&[9, 6, 6, 1], 18));
        assert_eq!(k[&sub(&[1, 2, 3])], rat(2, 1));
        assert_eq!(k[&Subset::empty()], rat(0, 1));

        let k = orlik_k_table(&fw_of(&[2, 22, 17, 34], 68));
        assert_eq!(k[&sub(&[0, 1, 3])], rat(2, 1));
        assert_eq!(k[&sub(&[1, 2, 3])], rat(-10, 11));
    }

    #[test]
    fn k_vanishes_at_even_complement_size() {
        // for n = 3 only odd-size subsets can be nonzero
        let k = orlik_k_table(&fw_of_bp(&[2, 3, 5, 75]));
        for (s, v) in &k {
            if s.len() % 2 == 0 {
                assert!(v.is_zero(), "k at {s} should vanish");
            }
        }
    }

    #[test]
    fn torsion_examples() {
        let t = orlik_torsion(&fw_of_bp(&[2, 3, 5, 75])).unwrap();
        assert_eq!(t.invariant_factors(), &ints(&[2, 2, 2, 2, 2, 2, 2, 2])[..]);
        assert_eq!(t.to_string_canonical(), "(Z/2)^8");

        let t = orlik_torsion(&fw_of_bp(&[2, 3, 3, 18])).unwrap();
        assert!(t.is_trivial());

        let t = orlik_torsion(&fw_of(&[2, 22, 17, 34], 68)).unwrap();
        assert_eq!(t.invariant_factors(), &ints(&[2, 2])[..]);
    }

    #[test]
    fn divisibility_chain() {
        for a in [[2i64, 4, 6, 8], [2, 3, 5, 75], [4, 4, 4, 4], [2, 6, 6, 6]] {
            let table = orlik_table(&fw_of_bp(&a)).unwrap();
            for w in table.invariant_factors.windows(2) {
                assert!(
                    (&w[0] % &w[1]).is_zero(),
                    "chain broken for {a:?}: {:?}",
                    table.invariant_factors
                );
            }
        }
    }

    #[test]
    fn coprime_bp_torsion_trivial() {
        for a in [[2i64, 3, 5, 7], [2, 3, 7, 41], [3, 4, 5, 7], [2, 3, 7, 43]] {
            let t = orlik_torsion(&fw_of_bp(&a)).unwrap();
            assert!(t.is_trivial(), "tuple {a:?}");
        }
    }

    #[test]
    fn torsion_group_canonicalization() {
        // Z/12 + Z/18 = Z/36 + Z/6 as abstract groups
        let a = TorsionGroup::from_orders(&ints(&[12, 18]));
        let b = TorsionGroup::from_orders(&ints(&[36, 6]));
        assert_eq!(a, b);
        assert_eq!(a.invariant_factors(), &ints(&[36, 6])[..]);
        assert_eq!(a.elementary_divisors(), &ints(&[2, 3, 4, 9])[..]);
        // unit factors dropped
        let c = TorsionGroup::from_orders(&ints(&[1, 1, 2]));
        assert_eq!(c.invariant_factors(), &ints(&[2])[..]);
    }
}
