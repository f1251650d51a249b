//! Fibers of `H13 -> A_P` over the origin and the orbit representatives.
//!
//! Over `p3` and `p4` the fiber equations are compared with the determinantal
//! systems by span. The fibers over the origin, `p1`, `p2` are reducible; each
//! listed component is parametrized and the fiber equations are evaluated on
//! samples from it.

use serde::Serialize;

use crate::coord8::{generators, ring, Hypermatrix, COORD_NAMES};
use crate::exactcore::{parse_poly, span_compare, EquationSet, PolyMatrix, SpanComparison};
use crate::sampling::{nonzero_rational, rational, Rng8};
use crate::{Poly, Rational};

use super::orbit::SpecialPoint;
use super::{labelled, ring_point, HError};

pub type FiberCase = SpecialPoint;

/// The nine equations with `p` fixed.
pub fn fiber_equations(p: &Hypermatrix<Rational>) -> EquationSet {
    labelled(&generators(&p.to_polys()))
}

fn poly(s: &str) -> Poly {
    parse_poly(ring(), s).expect("valid literal")
}

fn matrix(rows: [[&str; 3]; 3]) -> PolyMatrix<Rational> {
    PolyMatrix::from_rows(ring(), rows.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect()).expect("3x3")
}

/// 2x2 minors of `[[u1, x13, x22], [x23, u2, x11], [x12, x21, u3]]`.
pub fn p4_system() -> Vec<Poly> {
    matrix([["u1", "x13", "x22"], ["x23", "u2", "x11"], ["x12", "x21", "u3"]]).minors(2)
}

/// 2x2 minors of the symmetric matrix `S` and the entries of `S (-x11, x12, x23)`.
pub fn p3_system() -> Vec<Poly> {
    let s = matrix([["u1", "x13", "x22"], ["x13", "u2", "-x21"], ["x22", "-x21", "-u3"]]);
    let mut out = s.minors(2);
    out.extend(s.mul_vec(&[poly("-x11"), poly("x12"), poly("x23")]).expect("3x3 times 3"));
    out
}

/// Span comparison of the fiber equations with the determinantal system (`p3`, `p4` only).
pub fn span_certificate(case: FiberCase) -> Option<SpanComparison<Rational>> {
    let target = match case {
        SpecialPoint::P3 => p3_system(),
        SpecialPoint::P4 => p4_system(),
        _ => return None,
    };
    let eqs = fiber_equations(&case.hypermatrix());
    Some(span_compare(eqs.generators(), &target).expect("one ring"))
}

type Sampler = fn(&mut Rng8) -> Vec<Rational>;

pub struct Component {
    pub name: &'static str,
    /// Defining equations as displayed.
    pub equations: Vec<Poly>,
    pub sampler: Sampler,
}

fn polys(src: &[&str]) -> Vec<Poly> {
    src.iter().map(|s| poly(s)).collect()
}

fn assign(pairs: &[(&str, Rational)]) -> Vec<Rational> {
    let mut x = vec![Rational::from_integer(0.into()); 9];
    for (n, q) in pairs {
        let i = COORD_NAMES.iter().position(|c| c == n).expect("coordinate name");
        x[i] = q.clone();
    }
    x
}

fn free(rng: &mut Rng8, names: &[&'static str]) -> Vec<(&'static str, Rational)> {
    names.iter().map(|n| (*n, rational(rng))).collect()
}

fn with(mut base: Vec<(&'static str, Rational)>, extra: &[(&'static str, Rational)]) -> Vec<Rational> {
    base.extend_from_slice(extra);
    assign(&base)
}

pub fn components(case: FiberCase) -> Vec<Component> {
    match case {
        SpecialPoint::Origin => vec![
            Component {
                name: "u=0",
                equations: polys(&["u1", "u2", "u3"]),
                sampler: |r| assign(&free(r, &["x11", "x21", "x12", "x22", "x13", "x23"])),
            },
            Component {
                name: "u1=u2=x13=x23=0",
                equations: polys(&["u1", "u2", "x13", "x23"]),
                sampler: |r| assign(&free(r, &["x11", "x21", "x12", "x22", "u3"])),
            },
            Component {
                name: "u1=u3=x12=x22=0",
                equations: polys(&["u1", "u3", "x12", "x22"]),
                sampler: |r| assign(&free(r, &["x11", "x21", "x13", "x23", "u2"])),
            },
            Component {
                name: "u2=u3=x11=x21=0",
                equations: polys(&["u2", "u3", "x11", "x21"]),
                sampler: |r| assign(&free(r, &["x12", "x22", "x13", "x23", "u1"])),
            },
        ],
        SpecialPoint::P1 => vec![
            Component {
                name: "u1=u2=x23=u3x13-x21x22=0",
                equations: polys(&["u1", "u2", "x23", "u3*x13 - x21*x22"]),
                sampler: |r| {
                    let f = free(r, &["x11", "x12", "x21", "x22"]);
                    let x13 = nonzero_rational(r);
                    let u3 = &f[2].1 * &f[3].1 / &x13;
                    with(f, &[("x13", x13), ("u3", u3)])
                },
            },
            Component {
                name: "u1=u3=x22=u2x12-x21x23=0",
                equations: polys(&["u1", "u3", "x22", "u2*x12 - x21*x23"]),
                sampler: |r| {
                    let f = free(r, &["x11", "x13", "x21", "x23"]);
                    let x12 = nonzero_rational(r);
                    let u2 = &f[2].1 * &f[3].1 / &x12;
                    with(f, &[("x12", x12), ("u2", u2)])
                },
            },
            Component {
                name: "u2=u3=x21=u1x11-x22x23=0",
                equations: polys(&["u2", "u3", "x21", "u1*x11 - x22*x23"]),
                sampler: |r| {
                    let f = free(r, &["x12", "x13", "x22", "x23"]);
                    let x11 = nonzero_rational(r);
                    let u1 = &f[2].1 * &f[3].1 / &x11;
                    with(f, &[("x11", x11), ("u1", u1)])
                },
            },
        ],
        SpecialPoint::P2 => vec![
            Component {
                name: "u1=u2=x23=u3x13-x11x12-x21x22=0",
                equations: polys(&["u1", "u2", "x23", "u3*x13 - x11*x12 - x21*x22"]),
                sampler: |r| {
                    let f = free(r, &["x11", "x12", "x21", "x22"]);
                    let x13 = nonzero_rational(r);
                    let u3 = (&f[0].1 * &f[1].1 + &f[2].1 * &f[3].1) / &x13;
                    with(f, &[("x13", x13), ("u3", u3)])
                },
            },
            Component {
                name: "u3=0,rank[[x23,u2,x11,x21],[u1,-x23,x22,-x12]]<=1",
                equations: polys(&[
                    "u3",
                    "-x23^2 - u1*u2",
                    "x23*x22 - u1*x11",
                    "-x23*x12 - u1*x21",
                    "u2*x22 + x23*x11",
                    "-u2*x12 + x23*x21",
                    "-x11*x12 - x21*x22",
                ]),
                // rows a*c and b*c with c2 = -a*c1/b forced by the repeated x23
                sampler: |r| {
                    let a = rational(r);
                    let b = nonzero_rational(r);
                    let (c1, c3, c4) = (rational(r), rational(r), rational(r));
                    let c2 = -(&a * &c1) / &b;
                    let f = free(r, &["x13"]);
                    with(
                        f,
                        &[
                            ("x23", &a * &c1),
                            ("u2", &a * &c2),
                            ("x11", &a * &c3),
                            ("x21", &a * &c4),
                            ("u1", &b * &c1),
                            ("x22", &b * &c3),
                            ("x12", -(&b * &c4)),
                        ],
                    )
                },
            },
        ],
        SpecialPoint::P3 => vec![Component {
            name: "S=c*v*v^t, S*w=0",
            equations: p3_system(),
            sampler: |r| {
                let c = rational(r);
                let v = [nonzero_rational(r), rational(r), rational(r)];
                let (a, b) = (rational(r), rational(r));
                // w orthogonal to v
                let w = [&a * &v[1] + &b * &v[2], -(&a * &v[0]), -(&b * &v[0])];
                let s = |i: usize, j: usize| &c * &v[i] * &v[j];
                assign(&[
                    ("u1", s(0, 0)),
                    ("x13", s(0, 1)),
                    ("x22", s(0, 2)),
                    ("u2", s(1, 1)),
                    ("x21", -s(1, 2)),
                    ("u3", -s(2, 2)),
                    ("x11", -w[0].clone()),
                    ("x12", w[1].clone()),
                    ("x23", w[2].clone()),
                ])
            },
        }],
        SpecialPoint::P4 => vec![Component {
            name: "M=a*b^t",
            equations: p4_system(),
            sampler: |r| {
                let a = [rational(r), rational(r), rational(r)];
                let b = [rational(r), rational(r), rational(r)];
                let m = |i: usize, j: usize| &a[i] * &b[j];
                assign(&[
                    ("u1", m(0, 0)),
                    ("x13", m(0, 1)),
                    ("x22", m(0, 2)),
                    ("x23", m(1, 0)),
                    ("u2", m(1, 1)),
                    ("x11", m(1, 2)),
                    ("x12", m(2, 0)),
                    ("x21", m(2, 1)),
                    ("u3", m(2, 2)),
                ])
            },
        }],
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentCheck {
    pub component: String,
    pub samples: usize,
    /// Samples on which some fiber equation is nonzero.
    pub fiber_failures: usize,
    /// Samples that miss the component's own equations (a bad parametrization).
    pub component_failures: usize,
}

impl ComponentCheck {
    pub fn ok(&self) -> bool {
        self.fiber_failures == 0 && self.component_failures == 0
    }
}

pub fn check_components(case: FiberCase, samples: usize, rng: &mut Rng8) -> Result<Vec<ComponentCheck>, HError> {
    let p = case.hypermatrix();
    let eqs = fiber_equations(&p);
    let mut out = Vec::new();
    for comp in components(case) {
        let mut check = ComponentCheck { component: comp.name.into(), samples, fiber_failures: 0, component_failures: 0 };
        for _ in 0..samples {
            let x = (comp.sampler)(rng);
            let pt = ring_point(&x, &p);
            if !eqs.failures_at(&pt)?.is_empty() {
                check.fiber_failures += 1;
            }
            let zero = Rational::from_integer(0.into());
            if comp.equations.iter().map(|f| f.evaluate(&pt)).collect::<Result<Vec<_>, _>>()?.iter().any(|v| v != &zero) {
                check.component_failures += 1;
            }
        }
        out.push(check);
    }
    Ok(out)
}
