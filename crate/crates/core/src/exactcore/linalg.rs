//! Dense linear algebra over a coefficient field.

use super::scalar::Field;

/// Reduced row echelon form of `rows`, together with, for every basis row,
/// its expression as a combination of the input rows.
#[derive(Debug, Clone)]
pub struct RowSpace<K> {
    pub ncols: usize,
    pub basis: Vec<Vec<K>>,
    pub pivots: Vec<usize>,
    pub combos: Vec<Vec<K>>,
    pub ninputs: usize,
}

impl<K: Field> RowSpace<K> {
    pub fn new(rows: &[Vec<K>], ncols: usize) -> Self {
        let n = rows.len();
        let mut work: Vec<(Vec<K>, Vec<K>)> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut e = vec![K::zero(); n];
                e[i] = K::one();
                (r.clone(), e)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            let Some(p) = (top..work.len()).find(|&r| !work[r].0[col].is_zero()) else {
                continue;
            };
            work.swap(top, p);
            let inv = K::one() / work[top].0[col].clone();
            scale_pair(&mut work[top], &inv);
            for r in 0..work.len() {
                if r != top && !work[r].0[col].is_zero() {
                    let f = work[r].0[col].clone();
                    let (pr, pe) = work[top].clone();
                    axpy(&mut work[r].0, &pr, &f);
                    axpy(&mut work[r].1, &pe, &f);
                }
            }
            pivots.push(col);
            top += 1;
            if top == work.len() {
                break;
            }
        }
        work.truncate(top);
        let (basis, combos) = work.into_iter().unzip();
        RowSpace { ncols, basis, pivots, combos, ninputs: n }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coefficients over the input rows expressing `v`, if `v` is in the span.
    pub fn express(&self, v: &[K]) -> Option<Vec<K>> {
        let mut rem = v.to_vec();
        let mut coeffs = vec![K::zero(); self.ninputs];
        for (b, (&pc, combo)) in self.basis.iter().zip(self.pivots.iter().zip(&self.combos)) {
            let f = rem[pc].clone();
            if f.is_zero() {
                continue;
            }
            axpy(&mut rem, b, &f);
            for (c, e) in coeffs.iter_mut().zip(combo) {
                *c = c.clone() + f.clone() * e.clone();
            }
        }
        rem.iter().all(|x| x.is_zero()).then_some(coeffs)
    }
}

fn scale_pair<K: Field>(pair: &mut (Vec<K>, Vec<K>), f: &K) {
    for x in pair.0.iter_mut().chain(pair.1.iter_mut()) {
        *x = x.clone() * f.clone();
    }
}

/// `a -= f * b`
fn axpy<K: Field>(a: &mut [K], b: &[K], f: &K) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.clone() - f.clone() * y.clone();
        }
    }
}

pub fn rank<K: Field>(rows: &[Vec<K>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    RowSpace::new(rows, ncols).rank()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace<K: Field>(rows: &[Vec<K>], ncols: usize) -> Vec<Vec<K>> {
    let rs = RowSpace::new(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !rs.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![K::zero(); ncols];
            x[f] = K::one();
            for (b, &pc) in rs.basis.iter().zip(&rs.pivots) {
                x[pc] = -b[f].clone();
            }
            x
        })
        .collect()
}

/// One solution of `A x = b`, or `None` if inconsistent.
pub fn solve<K: Field>(rows: &[Vec<K>], rhs: &[K], ncols: usize) -> Option<Vec<K>> {
    let aug: Vec<Vec<K>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let rs = RowSpace::new(&aug, ncols + 1);
    if rs.pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![K::zero(); ncols];
    for (b, &pc) in rs.basis.iter().zip(&rs.pivots) {
        x[pc] = b[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::{rat, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for r in &a {
            let dot: Rational = r.iter().zip(&ns[0]).map(|(x, y)| x * y).sum();
            assert_eq!(dot, rat(0));
        }
    }

    #[test]
    fn express_and_solve() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let rs = RowSpace::new(&a, 3);
        assert_eq!(rs.express(&[rat(2), rat(3), rat(5)]), Some(vec![rat(2), rat(3)]));
        assert_eq!(rs.express(&[rat(0), rat(0), rat(1)]), None);
        let x = solve(&a, &[rat(1), rat(2)], 3).unwrap();
        assert_eq!(x, vec![rat(1), rat(2), rat(0)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[rat(0), rat(1)], 2).is_none());
    }
}
