use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::exactcore::linalg::{nullspace, solve};
use crate::exactcore::{EquationSet, Monomial, Polynomial, Ring};
use crate::Rational;

use super::GradingError;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Variable name -> weight vector. Every entry has the same number of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSystem {
    rows: usize,
    weights: BTreeMap<String, Vec<Rational>>,
}

impl WeightSystem {
    pub fn single<'a>(pairs: impl IntoIterator<Item = (&'a str, i64)>) -> Self {
        WeightSystem { rows: 1, weights: pairs.into_iter().map(|(n, w)| (n.to_string(), vec![q(w)])).collect() }
    }

    pub fn from_rows(names: &[&str], rows: &[Vec<i64>]) -> Result<Self, GradingError> {
        if rows.is_empty() || rows.iter().any(|r| r.len() != names.len()) {
            return Err(GradingError::RowMismatch(format!("{} names", names.len())));
        }
        let weights = names
            .iter()
            .enumerate()
            .map(|(j, n)| (n.to_string(), rows.iter().map(|r| q(r[j])).collect()))
            .collect();
        Ok(WeightSystem { rows: rows.len(), weights })
    }

    pub fn from_map(rows: usize, weights: BTreeMap<String, Vec<Rational>>) -> Result<Self, GradingError> {
        if let Some((n, _)) = weights.iter().find(|(_, w)| w.len() != rows) {
            return Err(GradingError::RowMismatch(n.clone()));
        }
        Ok(WeightSystem { rows, weights })
    }

    /// `{"x11": 1, "u1": "2"}` or `{"x11": [1, 0], ...}`.
    pub fn from_json(text: &str) -> Result<Self, GradingError> {
        let v: Value = serde_json::from_str(text).map_err(|e| GradingError::Parse(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| GradingError::Parse("expected an object".into()))?;
        let mut weights = BTreeMap::new();
        let mut rows = None;
        for (name, w) in obj {
            let vec = match w {
                Value::Array(items) => items.iter().map(json_rational).collect::<Result<Vec<_>, _>>()?,
                other => vec![json_rational(other)?],
            };
            match rows {
                None => rows = Some(vec.len()),
                Some(r) if r != vec.len() => return Err(GradingError::RowMismatch(name.clone())),
                _ => {}
            }
            weights.insert(name.clone(), vec);
        }
        let rows = rows.filter(|r| *r > 0).ok_or_else(|| GradingError::Parse("no weights".into()))?;
        Ok(WeightSystem { rows, weights })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, name: &str) -> Option<&[Rational]> {
        self.weights.get(name).map(|v| v.as_slice())
    }

    pub fn weight(&self, name: &str) -> Result<&Rational, GradingError> {
        self.get(name).map(|v| &v[0]).ok_or_else(|| GradingError::MissingWeight(name.into()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.weights.keys().map(|k| k.as_str())
    }

    pub fn row(&self, k: usize) -> WeightSystem {
        WeightSystem { rows: 1, weights: self.weights.iter().map(|(n, w)| (n.clone(), vec![w[k].clone()])).collect() }
    }

    /// Replace the rows by integer combinations of them: new row `i` is `Σ_j m[i][j] row_j`.
    pub fn combine_rows(&self, m: &[Vec<i64>]) -> Result<WeightSystem, GradingError> {
        if m.iter().any(|r| r.len() != self.rows) {
            return Err(GradingError::RowMismatch("row operation".into()));
        }
        let weights = self
            .weights
            .iter()
            .map(|(n, w)| {
                let new = m.iter().map(|r| r.iter().zip(w).fold(q(0), |acc, (c, x)| acc + q(*c) * x)).collect();
                (n.clone(), new)
            })
            .collect();
        Ok(WeightSystem { rows: m.len(), weights })
    }

    pub fn monomial_weight(&self, ring: &Ring, m: &Monomial) -> Result<Vec<Rational>, GradingError> {
        let mut out = vec![q(0); self.rows];
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = &ring.names()[i];
            let w = self.get(name).ok_or_else(|| GradingError::MissingWeight(name.clone()))?;
            for (o, x) in out.iter_mut().zip(w) {
                *o += x * q(e as i64);
            }
        }
        Ok(out)
    }

    /// Weight of a polynomial when it is homogeneous, `None` otherwise.
    pub fn poly_weight(&self, f: &Polynomial<Rational>) -> Result<Option<Vec<Rational>>, GradingError> {
        let mut seen: Option<Vec<Rational>> = None;
        for (m, _) in f.terms() {
            let w = self.monomial_weight(f.ring(), m)?;
            match &seen {
                None => seen = Some(w),
                Some(s) if *s != w => return Ok(None),
                _ => {}
            }
        }
        Ok(seen.or_else(|| Some(vec![q(0); self.rows])))
    }

    /// x = p = 1, u = 2 on the seventeen coordinates.
    pub fn standard() -> Self {
        let mut w = BTreeMap::new();
        for n in crate::coord8::COORD_NAMES.iter().chain(crate::coord8::P_NAMES.iter()) {
            w.insert(n.to_string(), vec![q(if n.starts_with('u') { 2 } else { 1 })]);
        }
        WeightSystem { rows: 1, weights: w }
    }

    /// The bigrading with columns `v, u1, x2, x3, p, u2, u3, x1`.
    pub fn wtmat() -> Self {
        Self::from_matrix_columns([[0, -1], [2, -1], [1, 0], [1, 0], [1, 0], [2, 1], [2, 1], [1, 1]])
    }

    pub fn wtmat2() -> Self {
        Self::from_matrix_columns([[2, -1], [4, -1], [1, 0], [1, 0], [1, 0], [0, 1], [0, 1], [-1, 1]])
    }

    pub fn wtmat3() -> Self {
        Self::from_matrix_columns([[-1, 1], [-1, 3], [0, 1], [0, 1], [0, 1], [1, 1], [1, 1], [1, 0]])
    }

    fn from_matrix_columns(cols: [[i64; 2]; 8]) -> Self {
        let [v, u1, x2, x3, p, u2, u3, x1] = cols;
        let mut w = BTreeMap::new();
        let mut put = |n: &str, c: [i64; 2]| {
            w.insert(n.to_string(), vec![q(c[0]), q(c[1])]);
        };
        put("v", v);
        put("u1", u1);
        put("u2", u2);
        put("u3", u3);
        for (k, c) in [(1, x1), (2, x2), (3, x3)] {
            put(&format!("x1{k}"), c);
            put(&format!("x2{k}"), c);
        }
        for n in crate::coord8::P_NAMES {
            put(n, p);
        }
        WeightSystem { rows: 2, weights: w }
    }

    /// Weights on the sixteen coordinates left after `p111 = 1` for the Fano family numbered 5052.
    pub fn weights_5052() -> Self {
        let mut pairs: Vec<(&str, i64)> =
            vec![("x11", 3), ("x12", 3), ("x13", 3), ("x21", 4), ("x22", 4), ("x23", 4), ("u1", 5), ("u2", 5), ("u3", 5)];
        pairs.extend([("p111", 0), ("p112", 1), ("p121", 1), ("p211", 1)]);
        pairs.extend([("p122", 2), ("p212", 2), ("p221", 2), ("p222", 3)]);
        Self::single(pairs)
    }
}

fn json_rational(v: &Value) -> Result<Rational, GradingError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(q)
            .ok_or_else(|| GradingError::Parse(format!("weight {n} is not an integer; write it as \"a/b\""))),
        Value::String(s) => Rational::from_str(s.trim()).map_err(|_| GradingError::Parse(format!("bad rational {s:?}"))),
        other => Err(GradingError::Parse(format!("bad weight {other}"))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Homogeneity {
    pub label: String,
    /// Common weight of all monomials, when there is one.
    pub weight: Option<Vec<String>>,
    /// Distinct monomial weights otherwise.
    pub clashes: Vec<Vec<String>>,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        self.weight.is_some()
    }
}

fn strs(w: &[Rational]) -> Vec<String> {
    w.iter().map(|x| x.to_string()).collect()
}

pub fn check_homogeneous(eqs: &EquationSet, w: &WeightSystem) -> Result<Vec<Homogeneity>, GradingError> {
    let mut out = Vec::new();
    for (label, f) in eqs.iter() {
        let mut distinct: Vec<Vec<Rational>> = Vec::new();
        for (m, _) in f.terms() {
            let mw = w.monomial_weight(eqs.ring(), m)?;
            if !distinct.contains(&mw) {
                distinct.push(mw);
            }
        }
        let entry = match distinct.len() {
            0 | 1 => Homogeneity {
                label: label.into(),
                weight: Some(distinct.first().map(|d| strs(d)).unwrap_or_else(|| vec!["0".into(); w.rows()])),
                clashes: vec![],
            },
            _ => Homogeneity { label: label.into(), weight: None, clashes: distinct.iter().map(|d| strs(d)).collect() },
        };
        out.push(entry);
    }
    Ok(out)
}

/// Affine space of single-row weightings making every generator homogeneous.
#[derive(Debug, Clone, Serialize)]
pub struct WeightLattice {
    pub vars: Vec<String>,
    #[serde(serialize_with = "ser_vec")]
    pub particular: Vec<Rational>,
    #[serde(serialize_with = "ser_vecs")]
    pub basis: Vec<Vec<Rational>>,
}

fn ser_vec<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_vecs<S: serde::Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

impl WeightLattice {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn index(&self, name: &str) -> Result<usize, GradingError> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| GradingError::UnknownVariable(name.into()))
    }

    fn form(&self, rel: &[(&str, i64)]) -> Result<Vec<Rational>, GradingError> {
        let mut c = vec![q(0); self.vars.len()];
        for (n, k) in rel {
            c[self.index(n)?] += q(*k);
        }
        Ok(c)
    }

    fn apply(c: &[Rational], w: &[Rational]) -> Rational {
        c.iter().zip(w).fold(q(0), |acc, (a, b)| acc + a * b)
    }

    /// Whether `Σ k_i w(v_i) = 0` on the whole solution set.
    pub fn relation_holds(&self, rel: &[(&str, i64)]) -> Result<bool, GradingError> {
        let c = self.form(rel)?;
        let zero = q(0);
        Ok(Self::apply(&c, &self.particular) == zero && self.basis.iter().all(|b| Self::apply(&c, b) == zero))
    }

    /// Whether `f` is homogeneous for every weighting in the solution set.
    pub fn poly_homogeneous(&self, f: &Polynomial<Rational>) -> Result<bool, GradingError> {
        let names = f.ring().names();
        let terms: Vec<&Monomial> = f.terms().map(|(m, _)| m).collect();
        let Some(first) = terms.first() else { return Ok(true) };
        for m in &terms[1..] {
            let mut rel: Vec<(&str, i64)> = Vec::new();
            for (i, (a, b)) in m.0.iter().zip(&first.0).enumerate() {
                if a != b {
                    rel.push((&names[i], *a as i64 - *b as i64));
                }
            }
            if !self.relation_holds(&rel)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `particular + Σ coeffs_i basis_i`.
    pub fn point(&self, coeffs: &[Rational]) -> WeightSystem {
        let mut w = self.particular.clone();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (x, y) in w.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        let map = self.vars.iter().cloned().zip(w.into_iter().map(|x| vec![x])).collect();
        WeightSystem { rows: 1, weights: map }
    }
}

/// Solve "all monomials of each generator share one weight" with some weights
/// fixed. Unknowns are the variables occurring in `eqs` plus the fixed ones.
pub fn solve_weight_constraints(eqs: &EquationSet, fixed: &[(&str, Rational)]) -> Result<WeightLattice, GradingError> {
    let ring = eqs.ring();
    let mut used = vec![false; ring.len()];
    for f in eqs.generators() {
        for v in f.support() {
            used[v.0] = true;
        }
    }
    for (n, _) in fixed {
        let v = ring.var(n).ok_or_else(|| GradingError::UnknownVariable(n.to_string()))?;
        used[v.0] = true;
    }
    let cols: Vec<usize> = (0..ring.len()).filter(|i| used[*i]).collect();
    let vars: Vec<String> = cols.iter().map(|i| ring.names()[*i].clone()).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for f in eqs.generators() {
        let terms: Vec<&Monomial> = f.terms().map(|(m, _)| m).collect();
        for m in terms.iter().skip(1) {
            rows.push(cols.iter().map(|&i| q(m.0[i] as i64 - terms[0].0[i] as i64)).collect::<Vec<_>>());
            rhs.push(q(0));
        }
    }
    for (n, w) in fixed {
        let j = vars.iter().position(|v| v == n).expect("fixed variable is a column");
        let mut r = vec![q(0); cols.len()];
        r[j] = q(1);
        rows.push(r.clone());
        rhs.push(w.clone());
    }
    let particular = solve(&rows, &rhs, cols.len()).ok_or(GradingError::InfeasibleWeights)?;
    let basis = nullspace(&rows, cols.len());
    Ok(WeightLattice { vars, particular, basis })
}

impl WeightLattice {
    /// Whether the single-row system `w` lies in the solution set.
    pub fn contains(&self, w: &WeightSystem) -> Result<bool, GradingError> {
        let v: Vec<Rational> = self
            .vars
            .iter()
            .zip(&self.particular)
            .map(|(n, p)| Ok(w.weight(n)? - p))
            .collect::<Result<_, GradingError>>()?;
        if self.basis.is_empty() {
            return Ok(v.iter().all(|x| *x == q(0)));
        }
        // v = Σ c_j b_j, one equation per coordinate
        let rows: Vec<Vec<Rational>> = (0..self.vars.len()).map(|i| self.basis.iter().map(|b| b[i].clone()).collect()).collect();
        Ok(solve(&rows, &v, self.basis.len()).is_some())
    }
}
