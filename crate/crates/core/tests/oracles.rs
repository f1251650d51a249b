use keyvar::coord8::ring;
use keyvar::exactcore::linalg::rank;
use keyvar::hvariety::{chart_reduce_u1, sample_point, symbolic_generators, ChartVariant};
use keyvar::sampling::rng_for;
use keyvar::Rational;

// The chart dimension agrees with 17 minus the Jacobian rank at sampled points.
#[test]
fn chart_dimension_matches_jacobian_rank() {
    let r = ring();
    let gens = symbolic_generators();
    let vars: Vec<_> = r.vars().take(17).collect();
    let jac: Vec<Vec<_>> = gens.iter().map(|g| vars.iter().map(|v| g.derivative(*v)).collect()).collect();
    let mut rng = rng_for(5, "jacobian");
    let mut ranks = Vec::new();
    for _ in 0..8 {
        let pt = sample_point(&mut rng, &[]).unwrap();
        let mut x = pt.as_vec();
        x.resize(r.len(), Rational::from_integer(0.into()));
        let m: Vec<Vec<Rational>> = jac.iter().map(|row| row.iter().map(|f| f.evaluate(&x).unwrap()).collect()).collect();
        ranks.push(rank(&m));
    }
    let generic = *ranks.iter().max().unwrap();
    assert_eq!(generic, 4);
    assert_eq!(17 - generic, chart_reduce_u1(ChartVariant::Corrected).dimension);
}
