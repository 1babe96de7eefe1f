use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{for_each_clique, CliqueBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::BivariatePoly;
use crate::weighted::WeightFunction;

/// Counts cliques by size and by total weight of their members in `b`.
pub fn weighted_cbpoly(
    g: &Graph,
    b: VertexSet,
    w: &WeightFunction,
    budget: CliqueBudget,
) -> Result<BivariatePoly> {
    g.check_set(b)?;
    if w.domain() != b {
        return Err(Error::InvalidWeight(format!(
            "weights are defined on {:?} but B is {:?}",
            g.set_labels(w.domain()),
            g.set_labels(b)
        )));
    }
    let mut counts: BTreeMap<(u32, u64), u64> = BTreeMap::new();
    for_each_clique(g, budget, |k| {
        *counts.entry((k.len() as u32, w.weight_of(k))).or_default() += 1;
    })?;
    let mut p = BivariatePoly::zero();
    for ((i, t), c) in counts {
        let t = u32::try_from(t).map_err(|_| Error::InvalidWeight("total weight overflows".into()))?;
        p.add_term(i, t, BigInt::from(c));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::cbpoly_bruteforce;
    use crate::graph::families;

    #[test]
    fn unit_weights_reduce_to_unweighted() {
        let g = families::petersen();
        let b = VertexSet::from_iter([0, 1, 2, 5, 7]);
        let w = WeightFunction::uniform(b, 1);
        assert_eq!(
            weighted_cbpoly(&g, b, &w, CliqueBudget::default()).unwrap(),
            cbpoly_bruteforce(&g, b, CliqueBudget::default()).unwrap()
        );
    }

    #[test]
    fn single_vertex_weight_three() {
        let g = families::complete(1);
        let b = VertexSet::full(1);
        let w = WeightFunction::uniform(b, 3);
        let p = weighted_cbpoly(&g, b, &w, CliqueBudget::default()).unwrap();
        assert_eq!(p, BivariatePoly::from_terms([(0, 0, 1), (1, 3, 1)]));
    }

    #[test]
    fn triangle_term_sums_weights() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        let b = VertexSet::from_iter([1, 2]);
        let w = WeightFunction::new(b, BTreeMap::from([(1, 2), (2, 1)])).unwrap();
        let p = weighted_cbpoly(&g, b, &w, CliqueBudget::default()).unwrap();
        assert_eq!(p.coeff(3, 3), BigInt::from(1));
        assert_eq!(p.coeff(3, 2), BigInt::from(0));
    }

    #[test]
    fn domain_must_equal_b() {
        let g = families::complete(2);
        let w = WeightFunction::uniform(VertexSet::singleton(0), 1);
        assert!(weighted_cbpoly(&g, VertexSet::full(2), &w, CliqueBudget::default()).is_err());
    }
}
