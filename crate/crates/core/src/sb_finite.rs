//! Schröder–Bernstein on finite carriers.
//!
//! Carriers are `{0, …, n-1}`. Starting from injections `f: A → B` and
//! `g: B → A`, the chain `A_0 = A ∖ g(B)`, `B_n = f(A_n)`,
//! `A_{n+1} = g(B_n)` is grown to its fixpoint and the bijection is
//! `h = f` on `⋃ A_n` and `h = g⁻¹` elsewhere.

use serde::Serialize;

use crate::error::{Error, Result};

/// An injective map `{0..domain} → {0..codomain}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInjection {
    codomain_size: usize,
    mapping: Vec<usize>,
}

impl FiniteInjection {
    pub fn new(mapping: Vec<usize>, codomain_size: usize) -> Result<Self> {
        let mut seen: Vec<Option<usize>> = vec![None; codomain_size];
        for (index, &value) in mapping.iter().enumerate() {
            let slot = seen.get_mut(value).ok_or(Error::OutOfCodomain {
                index,
                value,
                size: codomain_size,
            })?;
            if let Some(first) = *slot {
                return Err(Error::NotInjective {
                    first,
                    duplicate: index,
                    value,
                });
            }
            *slot = Some(index);
        }
        Ok(FiniteInjection {
            codomain_size,
            mapping,
        })
    }

    pub fn domain_size(&self) -> usize {
        self.mapping.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, a: usize) -> usize {
        self.mapping[a]
    }

    /// Preimage table: `inverse[b] = Some(a)` iff `self(a) = b`.
    pub fn inverse(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.codomain_size];
        for (a, &b) in self.mapping.iter().enumerate() {
            inv[b] = Some(a);
        }
        inv
    }
}

/// First chain level at which each element appears, or `None` off the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainPartition {
    pub a_levels: Vec<Option<usize>>,
    pub b_levels: Vec<Option<usize>>,
    /// Rounds of `A_n ↦ g(f(A_n))` run before the fixpoint.
    pub rounds: usize,
}

impl ChainPartition {
    pub fn in_a_chain(&self, a: usize) -> bool {
        self.a_levels[a].is_some()
    }

    pub fn a_chain_union(&self) -> Vec<usize> {
        members(&self.a_levels)
    }

    pub fn b_chain_union(&self) -> Vec<usize> {
        members(&self.b_levels)
    }
}

fn members(levels: &[Option<usize>]) -> Vec<usize> {
    levels
        .iter()
        .enumerate()
        .filter_map(|(i, l)| l.map(|_| i))
        .collect()
}

fn check_sizes(f: &FiniteInjection, g: &FiniteInjection) -> Result<()> {
    if f.codomain_size() != g.domain_size() || g.codomain_size() != f.domain_size() {
        return Err(Error::SizeMismatch(format!(
            "f maps {} elements into {}, g maps {} elements into {}",
            f.domain_size(),
            f.codomain_size(),
            g.domain_size(),
            g.codomain_size()
        )));
    }
    Ok(())
}

pub fn build_chain(f: &FiniteInjection, g: &FiniteInjection) -> Result<ChainPartition> {
    check_sizes(f, g)?;
    let mut a_levels = vec![None; f.domain_size()];
    let mut b_levels = vec![None; f.codomain_size()];

    let g_inv = g.inverse();
    let mut frontier: Vec<usize> = (0..f.domain_size()).filter(|&a| g_inv[a].is_none()).collect();
    for &a in &frontier {
        a_levels[a] = Some(0);
    }

    let mut level = 0;
    let mut rounds = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            let b = f.apply(a);
            if b_levels[b].is_none() {
                b_levels[b] = Some(level);
                let a_next = g.apply(b);
                if a_levels[a_next].is_none() {
                    a_levels[a_next] = Some(level + 1);
                    next.push(a_next);
                }
            }
        }
        frontier = next;
        level += 1;
        rounds += 1;
    }

    Ok(ChainPartition {
        a_levels,
        b_levels,
        rounds,
    })
}

/// The bijection `h: A → B` as a lookup table.
pub fn build_bijection(f: &FiniteInjection, g: &FiniteInjection) -> Result<Vec<usize>> {
    let chain = build_chain(f, g)?;
    let g_inv = g.inverse();
    let h: Vec<usize> = (0..f.domain_size())
        .map(|a| {
            if chain.in_a_chain(a) {
                f.apply(a)
            } else {
                g_inv[a].expect("elements off the chain lie in g(B)")
            }
        })
        .collect();
    assert!(
        verify_bijection(&h, f.domain_size(), f.codomain_size()),
        "chain construction produced a non-bijection"
    );
    Ok(h)
}

/// Exhaustive check that `h` is a total bijection `{0..domain} → {0..codomain}`.
pub fn verify_bijection(h: &[usize], domain_size: usize, codomain_size: usize) -> bool {
    if h.len() != domain_size || domain_size != codomain_size {
        return false;
    }
    let mut hit = vec![false; codomain_size];
    for &b in h {
        if b >= codomain_size || hit[b] {
            return false;
        }
        hit[b] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inj(m: &[usize], codomain: usize) -> FiniteInjection {
        FiniteInjection::new(m.to_vec(), codomain).unwrap()
    }

    #[test]
    fn identity_pair_has_empty_chain() {
        let id = inj(&[0, 1, 2], 3);
        let chain = build_chain(&id, &id).unwrap();
        assert!(chain.a_chain_union().is_empty());
        assert!(chain.b_chain_union().is_empty());
        assert_eq!(chain.rounds, 0);
        assert_eq!(build_bijection(&id, &id).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn surjective_g_gives_its_inverse() {
        let f = inj(&[0, 1], 2);
        let g = inj(&[1, 0], 2);
        assert!(build_chain(&f, &g).unwrap().a_chain_union().is_empty());
        assert_eq!(build_bijection(&f, &g).unwrap(), vec![1, 0]);

        let f = inj(&[1, 2, 0], 3);
        let g = inj(&[0, 1, 2], 3);
        assert_eq!(build_bijection(&f, &g).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_injections() {
        assert_eq!(
            FiniteInjection::new(vec![1, 0, 1], 3),
            Err(Error::NotInjective {
                first: 0,
                duplicate: 2,
                value: 1
            })
        );
        assert_eq!(
            FiniteInjection::new(vec![0, 1], 1),
            Err(Error::OutOfCodomain {
                index: 1,
                value: 1,
                size: 1
            })
        );
    }

    #[test]
    fn rejects_mismatched_sizes() {
        let f = inj(&[0], 2);
        let g = inj(&[0], 1);
        assert!(matches!(build_chain(&f, &g), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn verifies_by_exhaustion() {
        assert!(verify_bijection(&[0, 1, 2, 3, 4], 5, 5));
        assert!(!verify_bijection(&[0, 0], 2, 2));
        assert!(!verify_bijection(&[0, 1], 3, 3));
        assert!(!verify_bijection(&[0, 5], 2, 2));
    }
}
