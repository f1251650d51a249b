//! Sparse multivariate polynomials with dense exponent vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Ring, VarId};
use super::scalar::{Coeff, Rational};
use super::ExactError;

/// Exponent vector, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Graded lex: higher total degree first, then lex with earlier variables larger.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A polynomial over `K` in the variables of a [`Ring`]. No stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial<K = Rational> {
    ring: Ring,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Coeff> Polynomial<K> {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: K) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, K::one())
    }

    pub fn int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, super::scalar::from_i64(n))
    }

    pub fn var(ring: &Ring, v: VarId) -> Self {
        let mut e = Monomial::one(ring.len());
        e.0[v.0] = 1;
        Self::from_terms(ring, vec![(e, K::one())])
    }

    /// Variable by name; panics if absent.
    pub fn named(ring: &Ring, name: &str) -> Self {
        Self::var(ring, ring.v(name))
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old = old.clone() + c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: VarId) -> u16 {
        self.terms.keys().map(|m| m.0[v.0]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(Monomial::degree);
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    /// Variables that occur with nonzero exponent.
    pub fn support(&self) -> Vec<VarId> {
        (0..self.ring.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(VarId)
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.ring.check_same(&other.ring)?;
        let mut acc: BTreeMap<Monomial, K> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(old) => *old = old.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial { ring: self.ring.clone(), terms: acc })
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to one variable.
    pub fn derivative(&self, v: VarId) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[v.0];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[v.0] -= 1;
            out.add_term(m2, c.clone() * super::scalar::from_i64::<K>(e as i64));
        }
        out
    }

    /// `sum_v (d f / d v) * direction[v]`, one direction entry per ring variable.
    pub fn directional_derivative(&self, direction: &[Self]) -> Result<Self, ExactError> {
        if direction.len() != self.ring.len() {
            return Err(ExactError::Dimension(format!(
                "direction has {} entries, ring has {}",
                direction.len(),
                self.ring.len()
            )));
        }
        let mut out = Self::zero(&self.ring);
        for (i, d) in direction.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let part = self.derivative(VarId(i));
            if !part.is_zero() {
                out = out.checked_add(&part.checked_mul(d)?)?;
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution inside the same ring; `None` keeps the variable.
    pub fn substitute(&self, map: &[Option<Self>]) -> Result<Self, ExactError> {
        if map.len() != self.ring.len() {
            return Err(ExactError::Dimension("substitution map length".into()));
        }
        let images: Vec<Self> = map
            .iter()
            .enumerate()
            .map(|(i, m)| m.clone().unwrap_or_else(|| Self::var(&self.ring, VarId(i))))
            .collect();
        self.map_into(&self.ring, &images)
    }

    /// Substitute a few variables, keeping the rest.
    pub fn substitute_some(&self, pairs: &[(VarId, Self)]) -> Result<Self, ExactError> {
        let mut map: Vec<Option<Self>> = vec![None; self.ring.len()];
        for (v, p) in pairs {
            map[v.0] = Some(p.clone());
        }
        self.substitute(&map)
    }

    /// Ring homomorphism into `target`: variable `i` goes to `images[i]`.
    pub fn map_into(&self, target: &Ring, images: &[Self]) -> Result<Self, ExactError> {
        if images.len() != self.ring.len() {
            return Err(ExactError::Dimension("image count differs from ring size".into()));
        }
        for im in images {
            target.check_same(&im.ring)?;
        }
        let mut powers: Vec<Vec<Self>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e as usize])?;
                if t.is_zero() {
                    break;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Evaluate at a point given by one value per ring variable.
    pub fn evaluate(&self, point: &[K]) -> Result<K, ExactError> {
        if point.len() != self.ring.len() {
            return Err(ExactError::Dimension("point length".into()));
        }
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitute constants for some variables.
    pub fn partial_evaluate(&self, values: &[(VarId, K)]) -> Self {
        let pairs: Vec<(VarId, Self)> = values
            .iter()
            .map(|(v, c)| (*v, Self::constant(&self.ring, c.clone())))
            .collect();
        self.substitute_some(&pairs).expect("same ring")
    }

    /// Terms sorted by graded lex order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &K)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    pub fn leading_coeff(&self) -> Option<K> {
        self.sorted_terms().first().map(|(_, c)| (*c).clone())
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(VarId(i)))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<K: Coeff> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<K: Coeff> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl<K: Coeff> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<K: Coeff> $tr<&Polynomial<K>> for &Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: &Polynomial<K>) -> Polynomial<K> {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }
        impl<K: Coeff> $tr<Polynomial<K>> for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: Polynomial<K>) -> Polynomial<K> {
                (&self).$m(&rhs)
            }
        }
        impl<K: Coeff> $tr<&Polynomial<K>> for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: &Polynomial<K>) -> Polynomial<K> {
                (&self).$m(rhs)
            }
        }
        impl<K: Coeff> $tr<Polynomial<K>> for &Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: Polynomial<K>) -> Polynomial<K> {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<K: Coeff> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        self.scale(&-K::one())
    }
}

impl<K: Coeff> Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        -&self
    }
}

/// Sum of polynomials in `ring`.
pub fn sum<'a, K: Coeff + 'a>(ring: &Ring, it: impl IntoIterator<Item = &'a Polynomial<K>>) -> Polynomial<K> {
    let mut acc = Polynomial::zero(ring);
    for p in it {
        acc = acc + p;
    }
    acc
}
