//! Exponent vectors and term orders.

use std::cmp::Ordering;

/// An exponent vector, one entry per ring variable.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors and is only used for canonical storage; term orders go through
/// [`MonomialOrder::cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }
}

/// A multiplicative well-order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Variables `0..split` form the first block, the rest the second;
    /// grevlex inside each block, first block compared first.
    Block { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block { split } => {
                let split = split.min(a.0.len());
                grevlex(&a.0[..split], &b.0[..split])
                    .then_with(|| grevlex(&a.0[split..], &b.0[split..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// How module terms `m * e_i` are compared. Basis vectors with smaller
/// index are larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PositionRule {
    /// Monomial first, position breaks ties.
    #[default]
    TermOverPosition,
    /// Position first.
    PositionOverTerm,
    /// Positions `< split` dominate every position `>= split`;
    /// term-over-position inside each group. Used to eliminate components.
    Split(usize),
}

/// A term order on a free module `R^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub position: PositionRule,
}

impl ModuleOrder {
    pub fn new(monomial: MonomialOrder, position: PositionRule) -> Self {
        ModuleOrder { monomial, position }
    }

    pub fn top(monomial: MonomialOrder) -> Self {
        ModuleOrder::new(monomial, PositionRule::TermOverPosition)
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let pos = || b.1.cmp(&a.1);
        let mono = || self.monomial.cmp(a.0, b.0);
        match self.position {
            PositionRule::TermOverPosition => mono().then_with(pos),
            PositionRule::PositionOverTerm => pos().then_with(mono),
            PositionRule::Split(s) => {
                let ga = (a.1 >= s) as u8;
                let gb = (b.1 >= s) as u8;
                gb.cmp(&ga).then_with(mono).then_with(pos)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x*z < y^2 in grevlex on (x, y, z)
        assert_eq!(o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 0, 2]), &mono(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block { split: 1 };
        // t beats any power of x, y
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn position_rules() {
        let m = mono(&[1, 0]);
        let n = mono(&[0, 2]);
        let top = ModuleOrder::top(MonomialOrder::Grevlex);
        assert_eq!(top.cmp((&m, 1), (&n, 0)), Ordering::Less);
        let pot = ModuleOrder::new(MonomialOrder::Grevlex, PositionRule::PositionOverTerm);
        assert_eq!(pot.cmp((&m, 0), (&n, 1)), Ordering::Greater);
        let split = ModuleOrder::new(MonomialOrder::Grevlex, PositionRule::Split(2));
        assert_eq!(split.cmp((&m, 1), (&n, 2)), Ordering::Greater);
        assert_eq!(split.cmp((&m, 1), (&n, 0)), Ordering::Less);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (0usize..4).prop_map(|split| MonomialOrder::Block { split }),
        ]
    }

    fn monos() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn order_laws(o in orders(), u in monos(), v in monos(), w in monos()) {
            // totality: equal only for identical monomials
            prop_assert_eq!(o.cmp(&u, &v) == Ordering::Equal, u == v);
            prop_assert_eq!(o.cmp(&u, &v), o.cmp(&v, &u).reverse());
            // multiplicative
            if o.cmp(&u, &v) == Ordering::Less {
                prop_assert_eq!(o.cmp(&u.mul(&w), &v.mul(&w)), Ordering::Less);
            }
            // well-founded: 1 is the least monomial
            prop_assert_ne!(o.cmp(&Monomial::one(3), &u), Ordering::Greater);
        }

        #[test]
        fn order_transitive(o in orders(), u in monos(), v in monos(), w in monos()) {
            if o.cmp(&u, &v) != Ordering::Greater && o.cmp(&v, &w) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&u, &w), Ordering::Greater);
            }
        }
    }
}
