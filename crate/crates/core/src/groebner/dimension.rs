//! Krull dimension from a leading-term ideal via independent variable sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

/// Height of an ideal; the unit ideal has infinite height. Serialised as
/// an integer, or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Height {
    Finite(usize),
    Infinite,
}

impl Serialize for Height {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Height::Finite(h) => s.serialize_u64(*h as u64),
            Height::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Height {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Height::Finite(n as usize)),
            Raw::Text(t) if t == "inf" => Ok(Height::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad height {t:?}"))),
        }
    }
}

impl Height {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Height::Finite(h) => Some(*h),
            Height::Infinite => None,
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{h}"),
            Height::Infinite => write!(f, "inf"),
        }
    }
}

/// Variable supports of the monomials as bitmasks, minimalised under
/// inclusion.
pub(crate) fn support_sets(monomials: &[Monomial]) -> Vec<u64> {
    let mut sets: Vec<u64> = monomials
        .iter()
        .map(|m| {
            assert!(m.nvars() <= 64, "at most 64 variables supported");
            m.support().iter().fold(0u64, |acc, &v| acc | (1 << v))
        })
        .collect();
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&t| t & s == t) {
            minimal.push(s);
        }
    }
    minimal
}

/// Size of a smallest set of variables meeting every support set.
pub(crate) fn min_cover_size(sets: &[u64]) -> usize {
    fn go(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        match sets.iter().find(|&&s| s & chosen == 0) {
            None => *best = size,
            Some(&s) => {
                let mut bits = s;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    go(sets, chosen | (1 << v), size + 1, best);
                }
            }
        }
    }
    let mut best = usize::MAX;
    go(sets, 0, 0, &mut best);
    best
}

/// `dim k[x]/(leads)`: the largest set of variables containing the support
/// of no leading monomial, i.e. `nvars` minus a minimum cover. The caller
/// handles the unit ideal.
pub(crate) fn dimension_of_leading_ideal(nvars: usize, leads: &[Monomial]) -> usize {
    let sets = support_sets(leads);
    if sets.is_empty() {
        return nvars;
    }
    nvars - min_cover_size(&sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn covers() {
        // x*y, y*z, z*w: a path, min cover 2
        let leads = [m(&[1, 1, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 1, 1])];
        assert_eq!(dimension_of_leading_ideal(4, &leads), 2);
        assert_eq!(dimension_of_leading_ideal(3, &[]), 3);
        assert_eq!(dimension_of_leading_ideal(2, &[m(&[2, 0]), m(&[0, 3])]), 0);
    }

    #[test]
    fn height_order_and_serde() {
        assert!(Height::Finite(7) < Height::Infinite);
        assert!(Height::Finite(2) >= Height::Finite(2));
        assert_eq!(Height::Infinite.to_string(), "inf");
    }
}
