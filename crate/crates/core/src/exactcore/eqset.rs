//! Labelled lists of polynomial equations `f = 0`.

use super::poly::Polynomial;
use super::ring::Ring;
use super::scalar::{Coeff, Rational};
use super::ExactError;

#[derive(Debug, Clone, PartialEq)]
pub struct EquationSet<K: Coeff = Rational> {
    ring: Ring,
    labels: Vec<String>,
    gens: Vec<Polynomial<K>>,
}

impl<K: Coeff> EquationSet<K> {
    /// Zero generators are dropped; their labels go with them.
    pub fn new(ring: &Ring, labelled: impl IntoIterator<Item = (String, Polynomial<K>)>) -> Result<Self, ExactError> {
        let mut labels = Vec::new();
        let mut gens = Vec::new();
        for (l, g) in labelled {
            ring.check_same(g.ring())?;
            if !g.is_zero() {
                labels.push(l);
                gens.push(g);
            }
        }
        Ok(EquationSet { ring: ring.clone(), labels, gens })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Polynomial<K>)> {
        self.labels.iter().map(String::as_str).zip(&self.gens)
    }

    /// Apply a ring map to every generator.
    pub fn map_into(&self, target: &Ring, images: &[Polynomial<K>]) -> Result<Self, ExactError> {
        let mapped = self
            .iter()
            .map(|(l, g)| Ok((l.to_string(), g.map_into(target, images)?)))
            .collect::<Result<Vec<_>, ExactError>>()?;
        EquationSet::new(target, mapped)
    }

    /// Labels of generators that do not vanish at `point`.
    pub fn failures_at(&self, point: &[K]) -> Result<Vec<String>, ExactError> {
        let mut out = Vec::new();
        for (l, g) in self.iter() {
            if !g.evaluate(point)?.is_zero() {
                out.push(l.to_string());
            }
        }
        Ok(out)
    }
}
