//! Combinatorial shortcuts for monomial ideals.

use crate::error::{Error, Result};
use crate::groebner::{support_sets, Ideal};

/// Largest variable count for the exhaustive minimal-prime search.
pub const MAX_PRIME_SEARCH_VARS: usize = 24;

/// True when the ideal has a monomial generating set, i.e. its reduced
/// Gröbner basis consists of monomials.
pub fn is_monomial(ideal: &Ideal) -> bool {
    ideal.reduced_basis().iter().all(|g| g.len() == 1)
}

/// The minimal primes of a monomial ideal, each generated by variables.
///
/// They correspond to the minimal sets of variables meeting the support of
/// every generator. The unit ideal has none; the zero ideal has `(0)`.
pub fn minimal_primes_monomial(ideal: &Ideal) -> Result<Vec<Ideal>> {
    if !is_monomial(ideal) {
        return Err(Error::Input(format!("{ideal} is not a monomial ideal")));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let leads: Vec<_> = ideal
        .groebner()
        .leading_terms()
        .into_iter()
        .map(|(m, _)| m)
        .collect();
    let sets = support_sets(&leads);

    // only variables dividing some generator can occur in a minimal prime
    let used: Vec<usize> = (0..n)
        .filter(|&v| sets.iter().any(|&t| t >> v & 1 == 1))
        .collect();
    let k = used.len();
    if k > MAX_PRIME_SEARCH_VARS {
        return Err(Error::BoundExceeded(format!(
            "minimal prime search over {k} variables (limit {MAX_PRIME_SEARCH_VARS})"
        )));
    }
    let compress = |t: u64| {
        used.iter()
            .enumerate()
            .filter(|(_, &v)| t >> v & 1 == 1)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    };
    let sets: Vec<u64> = sets.into_iter().map(compress).collect();

    let mut subsets: Vec<u64> = (0..1u64 << k).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut covers: Vec<u64> = Vec::new();
    for s in subsets {
        if covers.iter().any(|&c| c & s == c) {
            continue;
        }
        if sets.iter().all(|&t| t & s != 0) {
            covers.push(s);
        }
    }
    let mut primes: Vec<Vec<usize>> = covers
        .into_iter()
        .map(|c| (0..k).filter(|&i| c >> i & 1 == 1).map(|i| used[i]).collect())
        .collect();
    primes.sort();
    Ok(primes
        .iter()
        .map(|vars| Ideal::of_variables(ring, vars))
        .collect())
}

/// `dim R/I = 0`.
pub fn is_m_primary(ideal: &Ideal) -> bool {
    ideal.dimension() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, PolyRing};
    use std::sync::Arc;

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
    }

    fn names(primes: &[Ideal]) -> Vec<String> {
        primes.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn monomial_detection() {
        let r = PolyRing::rationals(["x", "y"]);
        assert!(is_monomial(&ideal(&r, &["x^2", "x*y"])));
        assert!(!is_monomial(&ideal(&r, &["x + y"])));
        assert!(is_monomial(&ideal(&r, &["x + y", "y"])));
    }

    #[test]
    fn minimal_primes_examples() {
        let r3 = PolyRing::rationals(["x1", "x2", "x3"]);
        let f2 = ideal(&r3, &["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(names(&minimal_primes_monomial(&f2).unwrap()), ["(x1, x2)", "(x1, x3)"]);

        let r = PolyRing::rationals(["x", "y"]);
        assert_eq!(names(&minimal_primes_monomial(&ideal(&r, &["x*y"])).unwrap()), ["(x)", "(y)"]);
        assert_eq!(names(&minimal_primes_monomial(&ideal(&r, &["x", "y"])).unwrap()), ["(x, y)"]);
        assert!(minimal_primes_monomial(&ideal(&r, &["x + y^2"])).is_err());
        assert!(minimal_primes_monomial(&ideal(&r, &["1"])).unwrap().is_empty());
        assert_eq!(names(&minimal_primes_monomial(&Ideal::zero(&r)).unwrap()), ["()"]);
    }

    #[test]
    fn search_is_over_support_variables() {
        let names: Vec<String> = (1..=30).map(|i| format!("x{i}")).collect();
        let r = PolyRing::rationals(names.clone());
        let p = minimal_primes_monomial(&ideal(&r, &["x3*x29", "x7*x29"])).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().any(|q| q.equals(&ideal(&r, &["x29"])).unwrap()));
        assert!(p.iter().any(|q| q.equals(&ideal(&r, &["x3", "x7"])).unwrap()));
        let product = names[..25].join("*");
        assert!(matches!(
            minimal_primes_monomial(&ideal(&r, &[product.as_str()])),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn m_primary_examples() {
        let r = PolyRing::rationals(["x", "y"]);
        assert!(is_m_primary(&ideal(&r, &["x^2", "y^3"])));
        assert!(!is_m_primary(&ideal(&r, &["x"])));
        assert!(is_m_primary(&ideal(&r, &["x^2", "x*y", "y^2"])));
        assert!(!is_m_primary(&ideal(&r, &["1"])));
    }

    #[test]
    fn dimension_matches_minimal_primes() {
        let r = PolyRing::rationals(["a", "b", "c", "d"]);
        for gens in [
            &["a*b", "c*d"][..],
            &["a^2*b", "b*c", "d^3"][..],
            &["a*b*c", "b*d"][..],
        ] {
            let i = ideal(&r, gens);
            let primes = minimal_primes_monomial(&i).unwrap();
            let best = primes.iter().map(|p| p.dimension()).max().unwrap();
            assert_eq!(best, i.dimension());
            for (k, p) in primes.iter().enumerate() {
                for g in i.generators() {
                    assert!(p.contains(g).unwrap());
                }
                for (l, q) in primes.iter().enumerate() {
                    if k != l {
                        assert!(!q.contains_ideal(p).unwrap() || !p.contains_ideal(q).unwrap());
                        assert!(!p.contains_ideal(q).unwrap(), "{p} contains {q}");
                    }
                }
            }
        }
    }
}
