//! Link descriptors: weight vectors, degrees, fractional weights, and the
//! index whose sign separates negative, null, and positive links.

use num::{Integer, One, Signed, Zero};

use crate::arith::{lcm_many, Int};
use crate::error::{Error, Result};

/// Weight vector `w = (w_0, ..., w_n)` and degree `d` of a weighted
/// homogeneous polynomial; the link has real dimension `2n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDescriptor {
    weights: Vec<Int>,
    degree: Int,
}

impl LinkDescriptor {
    pub fn new(weights: Vec<Int>, degree: Int) -> Result<Self> {
        if weights.len() < 3 {
            return Err(Error::InvalidDescriptor(format!(
                "need at least 3 weights, got {}",
                weights.len()
            )));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidDescriptor(
                "all weights must be >= 1".into(),
            ));
        }
        if !degree.is_positive() {
            return Err(Error::InvalidDescriptor("degree must be >= 1".into()));
        }
        Ok(LinkDescriptor { weights, degree })
    }

    pub fn weights(&self) -> &[Int] {
        &self.weights
    }

    pub fn degree(&self) -> &Int {
        &self.degree
    }

    /// Ambient complex dimension minus one; the link is (2n-1)-dimensional.
    pub fn n(&self) -> usize {
        self.weights.len() - 1
    }
}

/// The reduced numerators and denominators of `d / w_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalWeights {
    u: Vec<Int>,
    v: Vec<Int>,
}

impl FractionalWeights {
    pub fn u(&self) -> &[Int] {
        &self.u
    }

    pub fn v(&self) -> &[Int] {
        &self.v
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }
}

/// Exponents of a Brieskorn-Pham polynomial `z_0^{a_0} + ... + z_n^{a_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BPExponents {
    a: Vec<Int>,
}

impl BPExponents {
    pub fn new(a: Vec<Int>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidDescriptor("empty exponent list".into()));
        }
        for ai in &a {
            if ai < &Int::from(2) {
                return Err(Error::BadExponent(ai.to_string()));
            }
        }
        Ok(BPExponents { a })
    }

    pub fn exponents(&self) -> &[Int] {
        &self.a
    }

    pub fn pairwise_coprime(&self) -> bool {
        for i in 0..self.a.len() {
            for j in i + 1..self.a.len() {
                if !self.a[i].gcd(&self.a[j]).is_one() {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkSign {
    Negative,
    Null,
    Positive,
}

impl std::fmt::Display for LinkSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinkSign::Negative => write!(f, "Negative"),
            LinkSign::Null => write!(f, "Null"),
            LinkSign::Positive => write!(f, "Positive"),
        }
    }
}

/// Index `I = |w| - d` and its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkIndex {
    pub index: Int,
    pub sign: LinkSign,
}

/// Descriptor of the BP link: `d = lcm(a)`, `w_i = d / a_i`.
pub fn from_bp(a: &BPExponents) -> LinkDescriptor {
    let d = lcm_many(a.exponents()).expect("BP exponents are >= 2");
    let weights = a.exponents().iter().map(|ai| &d / ai).collect();
    LinkDescriptor { weights, degree: d }
}

/// Fractional weights `u_i = d / gcd(d, w_i)`, `v_i = w_i / gcd(d, w_i)`.
pub fn fractional_weights(link: &LinkDescriptor) -> FractionalWeights {
    let d = link.degree();
    let (u, v) = link
        .weights()
        .iter()
        .map(|w| {
            let g = d.gcd(w);
            (d / &g, w / &g)
        })
        .unzip();
    FractionalWeights { u, v }
}

pub fn link_index(link: &LinkDescriptor) -> LinkIndex {
    let sum: Int = link.weights().iter().sum();
    let index = sum - link.degree();
    let sign = if index.is_positive() {
        LinkSign::Positive
    } else if index.is_zero() {
        LinkSign::Null
    } else {
        LinkSign::Negative
    };
    LinkIndex { index, sign }
}
