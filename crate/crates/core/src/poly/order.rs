use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

/// A monomial order: a comparison kind applied to a variable sequence,
/// optionally refined into an elimination order where the first
/// `elimination_block` variables of the sequence dominate the rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialOrder {
    kind: OrderKind,
    sequence: Vec<usize>,
    elimination_block: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, sequence: (0..nvars).collect(), elimination_block: 0 }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grlex, nvars)
    }

    /// Use `sequence` (a permutation of the variable indices, most
    /// significant first) instead of the declared order.
    pub fn with_sequence(mut self, sequence: Vec<usize>) -> Self {
        let mut sorted = sequence.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().copied().eq(0..self.sequence.len()), "variable sequence must be a permutation");
        self.sequence = sequence;
        self
    }

    /// Make the first `block` variables of the sequence an elimination block.
    pub fn eliminating(mut self, block: usize) -> Self {
        assert!(block <= self.sequence.len());
        self.elimination_block = block;
        self
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.sequence.len()
    }

    pub fn elimination_block(&self) -> &[usize] {
        &self.sequence[..self.elimination_block]
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.elimination_block > 0 {
            let (block, rest) = self.sequence.split_at(self.elimination_block);
            cmp_on(self.kind, block, a, b).then_with(|| cmp_on(self.kind, rest, a, b))
        } else {
            cmp_on(self.kind, &self.sequence, a, b)
        }
    }
}

fn cmp_on(kind: OrderKind, vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let lex = || {
        for &v in vars {
            match ea[v].cmp(&eb[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    };
    match kind {
        OrderKind::Lex => lex(),
        OrderKind::Grlex => {
            let da: u64 = vars.iter().map(|&v| ea[v]).sum();
            let db: u64 = vars.iter().map(|&v| eb[v]).sum();
            da.cmp(&db).then_with(lex)
        }
        OrderKind::Grevlex => {
            let da: u64 = vars.iter().map(|&v| ea[v]).sum();
            let db: u64 = vars.iter().map(|&v| eb[v]).sum();
            da.cmp(&db).then_with(|| {
                for &v in vars.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn standard_orders() {
        let grevlex = MonomialOrder::grevlex(3);
        let lex = MonomialOrder::lex(3);
        let grlex = MonomialOrder::grlex(3);
        // x^2 vs yz^... textbook: x y^5 z^2 vs x^4 y z^3 under the three orders
        assert_eq!(lex.cmp(&m(&[1, 5, 2]), &m(&[4, 1, 3])), Ordering::Less);
        assert_eq!(grlex.cmp(&m(&[1, 5, 2]), &m(&[4, 1, 3])), Ordering::Less);
        assert_eq!(grevlex.cmp(&m(&[1, 5, 2]), &m(&[4, 1, 3])), Ordering::Greater);
        assert_eq!(grevlex.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(grevlex.cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let ord = MonomialOrder::grevlex(3).eliminating(1);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        let swapped = MonomialOrder::lex(2).with_sequence(vec![1, 0]);
        assert_eq!(swapped.cmp(&m(&[5, 0]), &m(&[0, 1])), Ordering::Less);
    }
}
