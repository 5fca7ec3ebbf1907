use std::cmp::Ordering;

/// Exponent vector over the variables of a [`VariableContext`](super::VariableContext).
///
/// Ordered graded-lexicographically: higher total degree is larger, and among
/// monomials of equal degree the one with the larger exponent in the first
/// differing variable is larger. Variable order is the context order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise `self >= other`.
    pub fn divides_into(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides_into(other) {
            return None;
        }
        Some(Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `k` in `nvars` variables, largest first
/// in graded-lex order (so `X^k` leads).
pub fn exponent_vectors(nvars: usize, k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut current, 0, k, &mut out);
    out
}

fn fill(current: &mut [u32], index: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if current.is_empty() {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if index + 1 == current.len() {
        current[index] = remaining;
        out.push(Monomial::new(current.to_vec()));
        current[index] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[index] = e;
        fill(current, index + 1, remaining - e, out);
    }
    current[index] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn enumeration_is_strictly_descending_and_exhaustive() {
        for nvars in 1..=6usize {
            for k in 0..=6u32 {
                let list = exponent_vectors(nvars, k);
                assert_eq!(
                    list.len() as u64,
                    binom(k as u64 + nvars as u64 - 1, k as u64)
                );
                assert!(list.windows(2).all(|w| w[0] > w[1]));
                assert!(list.iter().all(|m| m.degree() == k));
            }
        }
    }

    #[test]
    fn graded_before_lex() {
        let a = Monomial::new(vec![0, 0, 2]);
        let b = Monomial::new(vec![1, 0, 0]);
        assert!(a > b);
        let c = Monomial::new(vec![1, 1, 0]);
        assert!(c > a);
    }
}
