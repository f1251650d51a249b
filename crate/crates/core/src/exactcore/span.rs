//! Comparing linear spans of polynomial sets.

use std::collections::BTreeMap;

use serde::Serialize;

use super::linalg::RowSpace;
use super::poly::{Monomial, Polynomial};
use super::scalar::Field;
use super::ExactError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpanRelation {
    Equal,
    /// `span(a)` strictly contains `span(b)`.
    AContainsB,
    /// `span(b)` strictly contains `span(a)`.
    BContainsA,
    Incomparable,
}

#[derive(Debug, Clone)]
pub struct SpanComparison<K> {
    pub relation: SpanRelation,
    pub rank_a: usize,
    pub rank_b: usize,
    /// For each generator of `a`: its coefficients over `b`, or `None` if outside `span(b)`.
    pub a_in_b: Vec<Option<Vec<K>>>,
    /// For each generator of `b`: its coefficients over `a`.
    pub b_in_a: Vec<Option<Vec<K>>>,
}

impl<K> SpanComparison<K> {
    pub fn first_missing_from_b(&self) -> Option<usize> {
        self.a_in_b.iter().position(Option::is_none)
    }

    pub fn first_missing_from_a(&self) -> Option<usize> {
        self.b_in_a.iter().position(Option::is_none)
    }
}

/// Coefficient vectors of `polys` over the union of their monomials.
pub fn coefficient_matrix<K: Field>(polys: &[&[Polynomial<K>]]) -> Vec<Vec<Vec<K>>> {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for set in polys {
        for p in set.iter() {
            for (m, _) in p.terms() {
                let n = index.len();
                index.entry(m.clone()).or_insert(n);
            }
        }
    }
    let width = index.len();
    polys
        .iter()
        .map(|set| {
            set.iter()
                .map(|p| {
                    let mut row = vec![K::zero(); width];
                    for (m, c) in p.terms() {
                        row[index[m]] = c.clone();
                    }
                    row
                })
                .collect()
        })
        .collect()
}

/// Compare `span(a)` and `span(b)` as vector spaces over `K`.
pub fn span_compare<K: Field>(
    a: &[Polynomial<K>],
    b: &[Polynomial<K>],
) -> Result<SpanComparison<K>, ExactError> {
    if let Some(first) = a.iter().chain(b).next() {
        for p in a.iter().chain(b) {
            first.ring().check_same(p.ring())?;
        }
    }
    let mats = coefficient_matrix(&[a, b]);
    let width = mats[0].first().or(mats[1].first()).map_or(0, Vec::len);
    let ra = RowSpace::new(&mats[0], width);
    let rb = RowSpace::new(&mats[1], width);
    let a_in_b: Vec<_> = mats[0].iter().map(|r| rb.express(r)).collect();
    let b_in_a: Vec<_> = mats[1].iter().map(|r| ra.express(r)).collect();
    let a_sub = a_in_b.iter().all(Option::is_some);
    let b_sub = b_in_a.iter().all(Option::is_some);
    let relation = match (a_sub, b_sub) {
        (true, true) => SpanRelation::Equal,
        (false, true) => SpanRelation::AContainsB,
        (true, false) => SpanRelation::BContainsA,
        (false, false) => SpanRelation::Incomparable,
    };
    Ok(SpanComparison { relation, rank_a: ra.rank(), rank_b: rb.rank(), a_in_b, b_in_a })
}

pub fn span_equal<K: Field>(a: &[Polynomial<K>], b: &[Polynomial<K>]) -> Result<bool, ExactError> {
    Ok(span_compare(a, b)?.relation == SpanRelation::Equal)
}

/// Dimension of the linear span.
pub fn span_rank<K: Field>(a: &[Polynomial<K>]) -> usize {
    let mats = coefficient_matrix(&[a]);
    let width = mats[0].first().map_or(0, Vec::len);
    RowSpace::new(&mats[0], width).rank()
}
