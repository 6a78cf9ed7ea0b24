use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use super::{Carrier, SampleConfig, Semiring};
use crate::{Comparison, Error, Result};

/// Componentwise product of two semirings, ordered componentwise. This is the
/// instance that makes incomparable values reachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Product<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Product { left, right }
    }
}

/// Split `(x, y)` at its top-level comma.
pub(crate) fn split_pair(text: &str) -> Option<(&str, &str)> {
    let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

impl<A: Semiring, B: Semiring> Semiring for Product<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn name(&self) -> String {
        format!("product:{}:{}", self.left.name(), self.right.name())
    }

    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.add(&a.0, &b.0), self.right.add(&a.1, &b.1))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }

    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Comparison {
        self.left.compare(&a.0, &b.0).product(self.right.compare(&a.1, &b.1))
    }

    fn solve_add(&self, target: &Self::Elem, known: &Self::Elem) -> Option<Self::Elem> {
        Some((
            self.left.solve_add(&target.0, &known.0)?,
            self.right.solve_add(&target.1, &known.1)?,
        ))
    }

    fn solve_add_system(&self, equations: &[(Self::Elem, Self::Elem)]) -> Option<Self::Elem> {
        let left: Vec<_> = equations.iter().map(|(t, k)| (t.0.clone(), k.0.clone())).collect();
        let right: Vec<_> = equations.iter().map(|(t, k)| (t.1.clone(), k.1.clone())).collect();
        Some((self.left.solve_add_system(&left)?, self.right.solve_add_system(&right)?))
    }

    fn solve_scale(&self, lambda: &Self::Elem, mu: &Self::Elem) -> Option<(Self::Elem, Self::Elem)> {
        let (l1, l2) = self.left.solve_scale(&lambda.0, &mu.0)?;
        let (r1, r2) = self.right.solve_scale(&lambda.1, &mu.1)?;
        Some(((l1, r1), (l2, r2)))
    }

    fn contains(&self, e: &Self::Elem) -> bool {
        self.left.contains(&e.0) && self.right.contains(&e.1)
    }

    fn render(&self, e: &Self::Elem) -> String {
        format!("({},{})", self.left.render(&e.0), self.right.render(&e.1))
    }

    fn parse(&self, text: &str) -> Result<Self::Elem> {
        let (l, r) = split_pair(text).ok_or_else(|| Error::Parse {
            what: "product pair",
            text: text.to_string(),
        })?;
        Ok((self.left.parse(l)?, self.right.parse(r)?))
    }
}

impl<A: Carrier, B: Carrier> Carrier for Product<A, B> {
    fn elements(&self, cfg: &SampleConfig) -> Option<Vec<Self::Elem>> {
        let left = self.left.elements(cfg)?;
        let right = self.right.elements(cfg)?;
        Some(
            left.iter()
                .flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone())))
                .collect(),
        )
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, cfg: &SampleConfig) -> Self::Elem {
        (self.left.sample(rng, cfg), self.right.sample(rng, cfg))
    }

    fn sample_normalized<R: Rng + ?Sized>(&self, rng: &mut R, k: usize, cfg: &SampleConfig) -> Vec<Self::Elem> {
        let left = self.left.sample_normalized(rng, k, cfg);
        let right = self.right.sample_normalized(rng, k, cfg);
        left.into_iter().zip(right).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::rational::ratio;
    use crate::semiring::{Probability, QualPossibility};

    #[test]
    fn componentwise_order_reaches_incomparable() {
        let p = Product::new(Probability, Probability);
        let a = (ratio(1, 2), ratio(3, 4));
        let b = (ratio(3, 4), ratio(1, 2));
        assert_eq!(p.compare(&a, &b), Comparison::Incomparable);
        assert_eq!(p.compare(&a, &a), Comparison::Equivalent);
        assert_eq!(p.compare(&(ratio(1, 1), ratio(3, 4)), &a), Comparison::Greater);
    }

    #[test]
    fn system_is_solved_per_component() {
        let q = QualPossibility::new(3).unwrap();
        let p = Product::new(q, q);
        // first component needs d from the second equation, second from the first
        let eqs = [((2, 2), (2, 1)), ((1, 2), (0, 2))];
        let d = p.solve_add_system(&eqs).unwrap();
        for (t, k) in &eqs {
            assert_eq!(p.add(k, &d), *t);
        }
    }

    #[test]
    fn nested_literals() {
        let p = Product::new(Product::new(Probability, Probability), Probability);
        let v = p.parse("((1/2, 2/4), 3)").unwrap();
        assert_eq!(p.render(&v), "((1/2,1/2),3)");
        assert!(p.parse("(1/2)").is_err());
    }
}
