use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{find_triangle, Graph, VertexSet};
use crate::poly::BivariatePoly;

/// `F(u) = 1 + sum_v u_v + sum_{uv in E} u_u u_v` for a triangle-free graph,
/// whose cliques are exactly the empty set, vertices and edges.
#[derive(Clone, Debug)]
pub struct MultiaffineVertexPoly {
    graph: Graph,
}

impl MultiaffineVertexPoly {
    /// Rejects graphs with a triangle, reporting its labels.
    pub fn new(g: &Graph) -> Result<Self> {
        if let Some(t) = find_triangle(g) {
            return Err(Error::TriangleFound(t.map(|v| g.label(v))));
        }
        Ok(MultiaffineVertexPoly { graph: g.clone() })
    }

    pub fn variables(&self) -> usize {
        self.graph.n()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.graph.n() {
            return Err(Error::OutOfRange(format!(
                "expected {} vertex values, got {len}",
                self.graph.n()
            )));
        }
        Ok(())
    }

    pub fn evaluate(&self, u: &[Complex64]) -> Result<Complex64> {
        self.check_len(u.len())?;
        let mut total = Complex64::new(1.0, 0.0) + u.iter().sum::<Complex64>();
        for (a, b) in self.graph.edges() {
            total += u[a] * u[b];
        }
        Ok(total)
    }

    pub fn evaluate_exact(&self, u: &[BigRational]) -> Result<BigRational> {
        self.check_len(u.len())?;
        let mut total = BigRational::one();
        for x in u {
            total += x;
        }
        for (a, b) in self.graph.edges() {
            total += &u[a] * &u[b];
        }
        Ok(total)
    }

    /// Substitutes `u_v = x` outside `b` and `u_v = xy` inside `b`.
    pub fn specialize(&self, b: VertexSet) -> BivariatePoly {
        let ind = |v: usize| u32::from(b.contains(v));
        let mut p = BivariatePoly::one();
        for v in 0..self.graph.n() {
            p.add_term(1, ind(v), One::one());
        }
        for (a, c) in self.graph.edges() {
            p.add_term(2, ind(a) + ind(c), One::one());
        }
        p
    }
}
