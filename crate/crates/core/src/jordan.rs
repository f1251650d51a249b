//! Cubic Jordan algebras given by a cubic norm, a sharp map and a unit.
//!
//! The trace form is recovered from the norm at the unit:
//! `T(x, y) = -d_x d_y N(1) + d_x N(1) d_y N(1)`, and all other operations
//! (`S`, the sharp product, `U`, the Jordan product) are built from `T` and sharp.

use thiserror::Error;

use crate::exactcore::{Coeff, ExactError, Polynomial, Rational, Ring, VarId};

/// Coordinates of an algebra element; entries may be constants or polynomials.
pub type Element<K = Rational> = Vec<Polynomial<K>>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JordanError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("N(1) = {0}, expected 1")]
    NotNormalized(String),
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("presentation needs {0} symbol vectors")]
    MissingSymbols(usize),
}

#[derive(Clone)]
pub struct JordanPresentation<K = Rational> {
    ring: Ring,
    coords: Vec<VarId>,
    unit: Vec<K>,
    cubic: Polynomial<K>,
    sharp: Vec<Polynomial<K>>,
    symbols: Vec<Vec<VarId>>,
    lambda: Option<VarId>,
    grad_unit: Vec<Polynomial<K>>,
    hess_unit: Vec<Vec<Polynomial<K>>>,
}

/// Residuals of the three sharp conditions for a symbolic pair `x`, `y`.
#[derive(Debug, Clone)]
pub struct SharpResiduals<K: Coeff = Rational> {
    /// `T(x#, y) - d_y N(x)`
    pub adjoint: Polynomial<K>,
    /// `x## - N(x) x`, per coordinate
    pub double_sharp: Vec<Polynomial<K>>,
    /// `1 # y - T(y) 1 + y`, per coordinate
    pub unit_sharp: Vec<Polynomial<K>>,
}

impl<K: Coeff> SharpResiduals<K> {
    pub fn all_zero(&self) -> bool {
        self.adjoint.is_zero()
            && self.double_sharp.iter().all(Polynomial::is_zero)
            && self.unit_sharp.iter().all(Polynomial::is_zero)
    }

    pub fn nonzero(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.adjoint.is_zero() {
            out.push(format!("adjoint: {}", self.adjoint));
        }
        for (i, r) in self.double_sharp.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
            out.push(format!("double_sharp[{i}]: {r}"));
        }
        for (i, r) in self.unit_sharp.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
            out.push(format!("unit_sharp[{i}]: {r}"));
        }
        out
    }
}

/// Values of `N(s)`, `T(s, e_i)` and `T(s#, e_i)` for an element `s`.
#[derive(Debug, Clone)]
pub struct NormTraceWitness<K: Coeff = Rational> {
    pub norm: Polynomial<K>,
    pub trace_with_basis: Vec<Polynomial<K>>,
    pub trace_sharp_with_basis: Vec<Polynomial<K>>,
}

impl<K: Coeff> NormTraceWitness<K> {
    pub fn all_zero(&self) -> bool {
        self.norm.is_zero()
            && self.trace_with_basis.iter().all(Polynomial::is_zero)
            && self.trace_sharp_with_basis.iter().all(Polynomial::is_zero)
    }
}

impl<K: Coeff> JordanPresentation<K> {
    /// `symbols` are vectors of spare ring variables, each as long as `coords`,
    /// used for symbolic arguments; at least two are required. `lambda` is an
    /// optional spare scalar variable.
    pub fn new(
        ring: &Ring,
        coords: Vec<VarId>,
        unit: Vec<K>,
        cubic: Polynomial<K>,
        sharp: Vec<Polynomial<K>>,
        symbols: Vec<Vec<VarId>>,
        lambda: Option<VarId>,
    ) -> Result<Self, JordanError> {
        let n = coords.len();
        for len in [unit.len(), sharp.len()] {
            if len != n {
                return Err(JordanError::Arity { expected: n, got: len });
            }
        }
        if symbols.len() < 2 {
            return Err(JordanError::MissingSymbols(2));
        }
        for s in &symbols {
            if s.len() != n {
                return Err(JordanError::Arity { expected: n, got: s.len() });
            }
        }
        ring.check_same(cubic.ring())?;
        for s in &sharp {
            ring.check_same(s.ring())?;
        }
        let mut p = JordanPresentation {
            ring: ring.clone(),
            coords,
            unit,
            cubic,
            sharp,
            symbols,
            lambda,
            grad_unit: Vec::new(),
            hess_unit: Vec::new(),
        };
        let one = p.unit_element();
        let n1 = p.norm(&one)?;
        if n1 != Polynomial::one(ring) {
            return Err(JordanError::NotNormalized(n1.to_string()));
        }
        let grads: Vec<Polynomial<K>> = p.coords.iter().map(|&v| p.cubic.derivative(v)).collect();
        p.grad_unit = grads.iter().map(|g| p.at(g, &one)).collect::<Result<_, _>>()?;
        p.hess_unit = grads
            .iter()
            .map(|g| p.coords.iter().map(|&w| p.at(&g.derivative(w), &one)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        Ok(p)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[VarId] {
        &self.coords
    }

    pub fn cubic(&self) -> &Polynomial<K> {
        &self.cubic
    }

    pub fn sharp_map(&self) -> &[Polynomial<K>] {
        &self.sharp
    }

    pub fn constant(&self, c: K) -> Polynomial<K> {
        Polynomial::constant(&self.ring, c)
    }

    pub fn unit_element(&self) -> Element<K> {
        self.unit.iter().map(|c| self.constant(c.clone())).collect()
    }

    pub fn zero_element(&self) -> Element<K> {
        vec![Polynomial::zero(&self.ring); self.dim()]
    }

    /// The element whose coordinates are the coordinate variables themselves.
    pub fn generic_element(&self) -> Element<K> {
        self.coords.iter().map(|&v| Polynomial::var(&self.ring, v)).collect()
    }

    /// The `k`-th symbolic element built from spare variables.
    pub fn symbolic(&self, k: usize) -> Result<Element<K>, JordanError> {
        let s = self.symbols.get(k).ok_or(JordanError::MissingSymbols(k + 1))?;
        Ok(s.iter().map(|&v| Polynomial::var(&self.ring, v)).collect())
    }

    pub fn lambda(&self) -> Option<Polynomial<K>> {
        self.lambda.map(|v| Polynomial::var(&self.ring, v))
    }

    pub fn basis(&self, i: usize) -> Element<K> {
        let mut e = self.zero_element();
        e[i] = Polynomial::one(&self.ring);
        e
    }

    fn check(&self, x: &Element<K>) -> Result<(), JordanError> {
        if x.len() != self.dim() {
            return Err(JordanError::Arity { expected: self.dim(), got: x.len() });
        }
        for c in x {
            self.ring.check_same(c.ring())?;
        }
        Ok(())
    }

    /// Evaluate `f` at the element `x` (substitute the coordinate variables).
    pub fn at(&self, f: &Polynomial<K>, x: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.check(x)?;
        let pairs: Vec<(VarId, Polynomial<K>)> = self.coords.iter().copied().zip(x.iter().cloned()).collect();
        Ok(f.substitute_some(&pairs)?)
    }

    pub fn norm(&self, x: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.at(&self.cubic, x)
    }

    pub fn sharp(&self, x: &Element<K>) -> Result<Element<K>, JordanError> {
        self.sharp.iter().map(|s| self.at(s, x)).collect()
    }

    /// `d_y N (x) = sum_v (dN/dv)(x) y_v`
    pub fn norm_derivative(&self, x: &Element<K>, y: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.check(y)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (&v, yv) in self.coords.iter().zip(y) {
            if yv.is_zero() {
                continue;
            }
            acc = acc + self.at(&self.cubic.derivative(v), x)? * yv;
        }
        Ok(acc)
    }

    pub fn trace_bilinear(&self, x: &Element<K>, y: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.check(x)?;
        self.check(y)?;
        let dot = |v: &Element<K>| {
            self.grad_unit.iter().zip(v).fold(Polynomial::zero(&self.ring), |acc, (g, c)| acc + g * c)
        };
        let mut hess = Polynomial::zero(&self.ring);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.hess_unit[i][j].is_zero() {
                    hess = hess + &self.hess_unit[i][j] * xi * yj;
                }
            }
        }
        Ok(dot(x) * dot(y) - hess)
    }

    pub fn trace(&self, x: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.trace_bilinear(x, &self.unit_element())
    }

    /// `S(x) = T(x#)`
    pub fn spur(&self, x: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.trace(&self.sharp(x)?)
    }

    /// `S(x, y) = T(x # y)`
    pub fn spur_bilinear(&self, x: &Element<K>, y: &Element<K>) -> Result<Polynomial<K>, JordanError> {
        self.trace(&self.sharp_product(x, y)?)
    }

    /// `x # y = (x + y)# - x# - y#`
    pub fn sharp_product(&self, x: &Element<K>, y: &Element<K>) -> Result<Element<K>, JordanError> {
        let s = self.sharp(&add(x, y))?;
        let (sx, sy) = (self.sharp(x)?, self.sharp(y)?);
        Ok(s.iter().zip(sx.iter().zip(&sy)).map(|(a, (b, c))| a - b - c).collect())
    }

    /// `U_x y = T(x, y) x - x# # y`
    pub fn u_operator(&self, x: &Element<K>, y: &Element<K>) -> Result<Element<K>, JordanError> {
        let t = self.trace_bilinear(x, y)?;
        let xs = self.sharp(x)?;
        let b = self.sharp_product(&xs, y)?;
        Ok(x.iter().zip(&b).map(|(xi, bi)| &t * xi - bi).collect())
    }

    /// `x . y = (x # y + T(x) y + T(y) x - S(x, y) 1) / 2`
    pub fn bullet(&self, x: &Element<K>, y: &Element<K>) -> Result<Element<K>, JordanError> {
        let xy = self.sharp_product(x, y)?;
        let (tx, ty) = (self.trace(x)?, self.trace(y)?);
        let sxy = self.trace(&xy)?;
        let one = self.unit_element();
        let half = K::one() / (K::one() + K::one());
        Ok((0..self.dim())
            .map(|i| (&xy[i] + &tx * &y[i] + &ty * &x[i] - &sxy * &one[i]).scale(&half))
            .collect())
    }

    /// `x . x = x# + T(x) x - S(x) 1`
    pub fn bullet_square(&self, x: &Element<K>) -> Result<Element<K>, JordanError> {
        let xs = self.sharp(x)?;
        let t = self.trace(x)?;
        let s = self.trace(&xs)?;
        let one = self.unit_element();
        Ok((0..self.dim()).map(|i| &xs[i] + &t * &x[i] - &s * &one[i]).collect())
    }

    /// Residuals of the three sharp conditions with `x`, `y` the first two symbolic elements.
    pub fn verify_sharp_conditions(&self) -> Result<SharpResiduals<K>, JordanError> {
        let x = self.symbolic(0)?;
        let y = self.symbolic(1)?;
        let xs = self.sharp(&x)?;
        let adjoint = self.trace_bilinear(&xs, &y)? - self.norm_derivative(&x, &y)?;
        let xss = self.sharp(&xs)?;
        let nx = self.norm(&x)?;
        let double_sharp = xss.iter().zip(&x).map(|(a, b)| a - &nx * b).collect();
        let one = self.unit_element();
        let lhs = self.sharp_product(&one, &y)?;
        let ty = self.trace(&y)?;
        let unit_sharp = (0..self.dim()).map(|i| &lhs[i] - &ty * &one[i] + &y[i]).collect();
        Ok(SharpResiduals { adjoint, double_sharp, unit_sharp })
    }

    /// Coordinates of `U_s y` for a symbolic `y`; `s` lies in the radical iff all vanish.
    pub fn radical_residual(&self, s: &Element<K>) -> Result<Element<K>, JordanError> {
        let y = self.symbolic(self.symbols.len() - 1)?;
        self.u_operator(s, &y)
    }

    pub fn radical_membership(&self, s: &Element<K>) -> Result<bool, JordanError> {
        Ok(self.radical_residual(s)?.iter().all(Polynomial::is_zero))
    }

    /// Data for the norm/trace characterisation of the radical.
    pub fn norm_trace_witness(&self, s: &Element<K>) -> Result<NormTraceWitness<K>, JordanError> {
        let ss = self.sharp(s)?;
        let basis: Vec<Element<K>> = (0..self.dim()).map(|i| self.basis(i)).collect();
        Ok(NormTraceWitness {
            norm: self.norm(s)?,
            trace_with_basis: basis.iter().map(|e| self.trace_bilinear(s, e)).collect::<Result<_, _>>()?,
            trace_sharp_with_basis: basis.iter().map(|e| self.trace_bilinear(&ss, e)).collect::<Result<_, _>>()?,
        })
    }
}

pub fn add<K: Coeff>(x: &Element<K>, y: &Element<K>) -> Element<K> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub<K: Coeff>(x: &Element<K>, y: &Element<K>) -> Element<K> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale<K: Coeff>(c: &Polynomial<K>, x: &Element<K>) -> Element<K> {
    x.iter().map(|a| c * a).collect()
}

pub fn is_zero<K: Coeff>(x: &Element<K>) -> bool {
    x.iter().all(Polynomial::is_zero)
}

/// Ring with `base` variables followed by `k` symbol vectors of length `n`
/// named `{prefix}{j}_{i}` and a scalar `lam`.
pub fn ring_with_symbols(base: &[&str], n: usize, k: usize) -> Result<(Ring, Vec<Vec<VarId>>, VarId), ExactError> {
    let mut names: Vec<String> = base.iter().map(|s| s.to_string()).collect();
    for j in 0..k {
        for i in 0..n {
            names.push(format!("s{j}_{i}"));
        }
    }
    names.push("lam".into());
    let ring = Ring::new(&names)?;
    let syms = (0..k)
        .map(|j| (0..n).map(|i| ring.v(&format!("s{j}_{i}"))).collect())
        .collect();
    let lam = ring.v("lam");
    Ok((ring, syms, lam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{parse_poly, rat};

    fn diagonal() -> JordanPresentation {
        let (r, syms, lam) = ring_with_symbols(&["a", "b", "c"], 3, 3).unwrap();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let coords = vec![r.v("a"), r.v("b"), r.v("c")];
        JordanPresentation::new(
            &r,
            coords,
            vec![rat(1); 3],
            p("a*b*c"),
            vec![p("b*c"), p("a*c"), p("a*b")],
            syms,
            Some(lam),
        )
        .unwrap()
    }

    /// 3x3 symmetric matrices with N = det and x# = adjugate.
    fn symmetric() -> JordanPresentation {
        let names = ["m11", "m12", "m13", "m22", "m23", "m33"];
        let (r, syms, lam) = ring_with_symbols(&names, 6, 3).unwrap();
        let v = |s: &str| Polynomial::named(&r, s);
        let m = crate::exactcore::PolyMatrix::from_rows(
            &r,
            vec![
                vec![v("m11"), v("m12"), v("m13")],
                vec![v("m12"), v("m22"), v("m23")],
                vec![v("m13"), v("m23"), v("m33")],
            ],
        )
        .unwrap();
        let adj = m.adjugate().unwrap();
        let sharp = vec![
            adj.get(0, 0).clone(),
            adj.get(0, 1).clone(),
            adj.get(0, 2).clone(),
            adj.get(1, 1).clone(),
            adj.get(1, 2).clone(),
            adj.get(2, 2).clone(),
        ];
        let unit = [1, 0, 0, 1, 0, 1].iter().map(|&c| rat(c)).collect();
        let coords = names.iter().map(|n| r.v(n)).collect();
        JordanPresentation::new(&r, coords, unit, m.det().unwrap(), sharp, syms, Some(lam)).unwrap()
    }

    #[test]
    fn diagonal_algebra_traces() {
        let j = diagonal();
        let x = j.symbolic(0).unwrap();
        let y = j.symbolic(1).unwrap();
        let r = j.ring();
        let expect = parse_poly(r, "s0_0*s1_0 + s0_1*s1_1 + s0_2*s1_2").unwrap();
        assert_eq!(j.trace_bilinear(&x, &y).unwrap(), expect);
        assert_eq!(j.trace(&x).unwrap(), parse_poly(r, "s0_0 + s0_1 + s0_2").unwrap());
        assert!(j.verify_sharp_conditions().unwrap().all_zero());
        // The product is componentwise.
        let b = j.bullet(&x, &y).unwrap();
        assert_eq!(b[0], parse_poly(r, "s0_0*s1_0").unwrap());
        assert_eq!(j.bullet_square(&x).unwrap(), j.bullet(&x, &x).unwrap());
    }

    #[test]
    fn symmetric_matrices_satisfy_sharp_conditions() {
        let j = symmetric();
        let res = j.verify_sharp_conditions().unwrap();
        assert!(res.all_zero(), "{:?}", res.nonzero());
        let x = j.symbolic(0).unwrap();
        // Trace of a symmetric matrix is the sum of the diagonal.
        assert_eq!(j.trace(&x).unwrap(), parse_poly(j.ring(), "s0_0 + s0_3 + s0_5").unwrap());
        // Nondegenerate: a nonzero element is not in the radical.
        assert!(!j.radical_membership(&j.basis(1)).unwrap());
        assert!(j.radical_membership(&j.zero_element()).unwrap());
    }

    #[test]
    fn bad_inputs_rejected() {
        let (r, syms, _) = ring_with_symbols(&["a"], 1, 2).unwrap();
        let a = Polynomial::named(&r, "a");
        let err = JordanPresentation::new(&r, vec![r.v("a")], vec![rat(2)], a.pow(3), vec![a.pow(2)], syms.clone(), None);
        assert!(matches!(err, Err(JordanError::NotNormalized(_))));
        let err = JordanPresentation::new(&r, vec![r.v("a")], vec![rat(1)], a.pow(3), vec![], syms, None);
        assert!(matches!(err, Err(JordanError::Arity { .. })));
    }

    #[test]
    fn u_operator_is_quadratic_in_x() {
        let j = symmetric();
        let x = j.symbolic(0).unwrap();
        let y = j.symbolic(1).unwrap();
        let lam = j.lambda().unwrap();
        let lhs = j.u_operator(&scale(&lam, &x), &y).unwrap();
        let rhs = scale(&lam.pow(2), &j.u_operator(&x, &y).unwrap());
        assert_eq!(lhs, rhs);
    }
}
