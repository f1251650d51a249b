//! The Cayley hyperdeterminant and the five orbits of hypermatrices.

use serde::Serialize;

use crate::coord8::Hypermatrix;
use crate::exactcore::linalg::rank;
use crate::{Poly, Rational};

/// The Cayley hyperdeterminant of a 2x2x2 hypermatrix.
pub fn hyperdeterminant(p: &Hypermatrix<Poly>) -> Poly {
    let e = |s: &str| -> Poly {
        let b = s.as_bytes();
        p.get((b[0] - b'0') as usize, (b[1] - b'0') as usize, (b[2] - b'0') as usize).clone()
    };
    let m = |xs: [&str; 4]| xs.iter().fold(crate::coord8::int(1), |a, s| a * e(s));
    let sq = |a: &str, b: &str| m([a, a, b, b]);
    let squares = sq("111", "222") + sq("112", "221") + sq("121", "212") + sq("122", "211");
    let twos = m(["111", "122", "211", "222"])
        + m(["111", "121", "212", "222"])
        + m(["111", "112", "221", "222"])
        + m(["121", "122", "211", "212"])
        + m(["112", "122", "211", "221"])
        + m(["112", "121", "212", "221"]);
    let fours = m(["111", "122", "212", "221"]) + m(["112", "121", "211", "222"]);
    squares - twos.scale(&crate::exactcore::rat(2)) + fours.scale(&crate::exactcore::rat(4))
}

pub fn hyperdeterminant_value(p: &Hypermatrix<Rational>) -> Rational {
    hyperdeterminant(&p.to_polys()).as_constant().expect("numeric entries")
}

/// Ranks of the three 2x4 flattenings; the `k`-th keeps index `k` as the row.
pub fn flattening_ranks(p: &Hypermatrix<Rational>) -> [usize; 3] {
    std::array::from_fn(|k| {
        let rows: Vec<Vec<Rational>> = (1..=2)
            .map(|r| {
                let mut row = Vec::with_capacity(4);
                for a in 1..=2 {
                    for b in 1..=2 {
                        let idx = match k {
                            0 => (r, a, b),
                            1 => (a, r, b),
                            _ => (a, b, r),
                        };
                        row.push(p.get(idx.0, idx.1, idx.2).clone());
                    }
                }
                row
            })
            .collect();
        rank(&rows)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitLabel {
    Origin,
    O1,
    O2,
    O3,
    O4,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitClass {
    pub label: OrbitLabel,
    pub ranks: [usize; 3],
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub dh: Rational,
}

impl std::fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.ranks;
        write!(f, "{:?}, D_H = {}, flattening ranks ({a},{b},{c})", self.label, self.dh)
    }
}

pub fn classify_orbit(p: &Hypermatrix<Rational>) -> OrbitClass {
    let ranks = flattening_ranks(p);
    let dh = hyperdeterminant_value(p);
    let label = if p.is_zero() {
        OrbitLabel::Origin
    } else if dh != Rational::from_integer(0.into()) {
        OrbitLabel::O4
    } else {
        match ranks.iter().filter(|&&r| r <= 1).count() {
            3 => OrbitLabel::O1,
            0 => OrbitLabel::O3,
            _ => OrbitLabel::O2,
        }
    };
    OrbitClass { label, ranks, dh }
}

/// The origin and the four orbit representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpecialPoint {
    Origin,
    P1,
    P2,
    P3,
    P4,
}

impl SpecialPoint {
    pub const ALL: [SpecialPoint; 5] =
        [SpecialPoint::Origin, SpecialPoint::P1, SpecialPoint::P2, SpecialPoint::P3, SpecialPoint::P4];

    pub fn name(&self) -> &'static str {
        match self {
            SpecialPoint::Origin => "origin",
            SpecialPoint::P1 => "p1",
            SpecialPoint::P2 => "p2",
            SpecialPoint::P3 => "p3",
            SpecialPoint::P4 => "p4",
        }
    }

    pub fn hypermatrix(&self) -> Hypermatrix<Rational> {
        Hypermatrix::ones_at(match self {
            SpecialPoint::Origin => &[],
            SpecialPoint::P1 => &[(1, 1, 1)],
            SpecialPoint::P2 => &[(1, 1, 1), (2, 2, 1)],
            SpecialPoint::P3 => &[(1, 1, 1), (1, 2, 2), (2, 1, 2)],
            SpecialPoint::P4 => &[(1, 1, 1), (2, 2, 2)],
        })
    }

    pub fn expected_orbit(&self) -> OrbitLabel {
        match self {
            SpecialPoint::Origin => OrbitLabel::Origin,
            SpecialPoint::P1 => OrbitLabel::O1,
            SpecialPoint::P2 => OrbitLabel::O2,
            SpecialPoint::P3 => OrbitLabel::O3,
            SpecialPoint::P4 => OrbitLabel::O4,
        }
    }
}

/// `D_H` of the symbolic hypermatrix, for display.
pub fn symbolic_hyperdeterminant() -> Poly {
    hyperdeterminant(&Hypermatrix::symbolic())
}
