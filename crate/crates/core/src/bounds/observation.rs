use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::BoundError;
use crate::graph::{girth, BipartiteView, Girth, Graph};
use crate::walks::{bipartite_term_lengths, WalkCountTable};

/// Walk-count total for one vertex or edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationItem {
    /// Vertex id (odd case) or edge index (even and bipartite cases).
    pub item: usize,
    pub total: BigUint,
}

/// Checks `capacity >= total` for every item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationCheck {
    /// `n`, or the side size in the bipartite case.
    pub capacity: usize,
    pub r: u32,
    pub items: Vec<ObservationItem>,
}

impl ObservationCheck {
    pub fn holds(&self) -> bool {
        let cap = BigUint::from(self.capacity);
        self.items.iter().all(|it| it.total <= cap)
    }

    /// Item with the least `capacity - total`, and that slack.
    pub fn min_slack(&self) -> Option<(usize, BigInt)> {
        let cap = BigInt::from(self.capacity);
        self.items
            .iter()
            .map(|it| (it.item, &cap - BigInt::from(it.total.clone())))
            .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteObservationCheck {
    pub left: ObservationCheck,
    pub right: ObservationCheck,
}

impl BipartiteObservationCheck {
    pub fn holds(&self) -> bool {
        self.left.holds() && self.right.holds()
    }
}

fn girth_with_parity(g: &Graph, odd: bool) -> Result<u32, BoundError> {
    let gi = girth(g);
    match gi {
        Girth::Finite(x) if x % 2 == u32::from(odd) => Ok(x),
        _ => Err(BoundError::GirthParity {
            expected: if odd { "odd" } else { "even" },
            girth: gi,
        }),
    }
}

fn sum<'a>(it: impl Iterator<Item = &'a BigUint>) -> BigUint {
    it.fold(BigUint::zero(), |acc, x| acc + x)
}

/// Odd girth `2r + 1`: `n >= n_0(v) + ... + n_r(v)` for every vertex.
pub fn verify_observation_odd(
    g: &Graph,
    counts: &WalkCountTable,
) -> Result<ObservationCheck, BoundError> {
    let r = girth_with_parity(g, true)? / 2;
    counts.require(r as usize)?;
    let items = (0..g.vertex_count())
        .map(|v| ObservationItem {
            item: v,
            total: sum((0..=r as usize).map(|i| counts.vertex(v, i))),
        })
        .collect();
    Ok(ObservationCheck {
        capacity: g.vertex_count(),
        r,
        items,
    })
}

/// Even girth `2r`: `n >= Σ_{i<r} [n_i(a) + n_i(reverse a)]` for every edge.
pub fn verify_observation_even(
    g: &Graph,
    counts: &WalkCountTable,
) -> Result<ObservationCheck, BoundError> {
    let r = girth_with_parity(g, false)? / 2;
    counts.require(r as usize - 1)?;
    let items = (0..g.edge_count())
        .map(|k| ObservationItem {
            item: k,
            total: sum((0..r as usize).flat_map(|i| [counts.arc(2 * k, i), counts.arc(2 * k + 1, i)])),
        })
        .collect();
    Ok(ObservationCheck {
        capacity: g.vertex_count(),
        r,
        items,
    })
}

/// Bipartite girth `2r`, per edge with `a₁` leaving the left side and `a₂`
/// its reverse:
/// `n_L >= Σ_{i<=⌊(r-2)/2⌋} n_{2i+1}(a₁) + Σ_{i<=⌈(r-2)/2⌉} n_{2i}(a₂)`,
/// and the same with the sides exchanged for `n_R`.
pub fn verify_observation_bipartite(
    bv: &BipartiteView,
    counts: &WalkCountTable,
) -> Result<BipartiteObservationCheck, BoundError> {
    let g = bv.graph();
    let r = girth_with_parity(g, false)? / 2;
    let (odd, even) = bipartite_term_lengths(r as usize);
    let need = odd.iter().chain(&even).copied().max().unwrap_or(0);
    counts.require(need)?;

    let side_check = |leaving: &[usize], capacity: usize| {
        let mut items: Vec<ObservationItem> = leaving
            .iter()
            .map(|&a1| {
                let a2 = a1 ^ 1;
                let total = sum(odd.iter().map(|&i| counts.arc(a1, i)))
                    + sum(even.iter().map(|&i| counts.arc(a2, i)));
                ObservationItem { item: a1 / 2, total }
            })
            .collect();
        items.sort_by_key(|it| it.item);
        ObservationCheck { capacity, r, items }
    };
    Ok(BipartiteObservationCheck {
        left: side_check(bv.arcs_lr(), bv.n_left()),
        right: side_check(bv.arcs_rl(), bv.n_right()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, generators, to_directed};
    use crate::walks::count_table;

    fn table(g: &Graph, h: usize) -> WalkCountTable {
        count_table(&to_directed(g), h)
    }

    #[test]
    fn petersen_odd_case_is_tight_everywhere() {
        let g = generators::petersen();
        let check = verify_observation_odd(&g, &table(&g, 2)).unwrap();
        assert_eq!(check.r, 2);
        assert!(check.items.iter().all(|it| it.total == BigUint::from(10u32)));
        assert_eq!(check.min_slack(), Some((0, BigInt::zero())));
        assert!(check.holds());
    }

    #[test]
    fn cycle_seven_odd_case() {
        let g = generators::cycle(7).unwrap();
        let check = verify_observation_odd(&g, &table(&g, 3)).unwrap();
        assert!(check.items.iter().all(|it| it.total == BigUint::from(7u32)));
    }

    #[test]
    fn petersen_minus_edge_odd_case() {
        let p = generators::petersen();
        let g = Graph::from_edges(10, p.edges().skip(1)).unwrap();
        let check = verify_observation_odd(&g, &table(&g, 2)).unwrap();
        assert!(check.holds());
        // removed edge {0,1}: its endpoints reach 1 + 2 + 4 = 7 vertices
        assert_eq!(check.items[0].total, BigUint::from(7u32));
        assert_eq!(check.items[1].total, BigUint::from(7u32));
        // vertex 3 is at distance 2 from both endpoints and keeps a full ball
        assert_eq!(check.items[3].total, BigUint::from(10u32));
        assert_eq!(check.min_slack(), Some((3, BigInt::zero())));
    }

    #[test]
    fn even_case_on_regular_graphs() {
        for (g, total) in [
            (generators::complete_bipartite(3, 3).unwrap(), 6u32),
            (generators::heawood(), 14),
            (generators::cycle(8).unwrap(), 8),
        ] {
            let check = verify_observation_even(&g, &table(&g, 4)).unwrap();
            assert!(check.items.iter().all(|it| it.total == BigUint::from(total)));
            assert!(check.holds());
        }
    }

    #[test]
    fn bipartite_case() {
        let g = generators::heawood();
        let bv = bipartition(&g).unwrap();
        let check = verify_observation_bipartite(&bv, &table(&g, 3)).unwrap();
        assert!(check.left.items.iter().all(|it| it.total == BigUint::from(7u32)));
        assert!(check.right.items.iter().all(|it| it.total == BigUint::from(7u32)));

        let g = generators::complete_bipartite(2, 3).unwrap();
        let bv = bipartition(&g).unwrap();
        let check = verify_observation_bipartite(&bv, &table(&g, 3)).unwrap();
        assert!(check.left.items.iter().all(|it| it.total == BigUint::from(2u32)));
        assert!(check.right.items.iter().all(|it| it.total == BigUint::from(3u32)));
        assert_eq!(check.left.items.len(), 6);

        let g = generators::cycle(6).unwrap();
        let bv = bipartition(&g).unwrap();
        let check = verify_observation_bipartite(&bv, &table(&g, 3)).unwrap();
        assert!(check.left.items.iter().all(|it| it.total == BigUint::from(3u32)));
    }

    #[test]
    fn parity_preconditions() {
        let p = generators::petersen();
        assert!(matches!(
            verify_observation_even(&p, &table(&p, 3)),
            Err(BoundError::GirthParity { expected: "even", .. })
        ));
        let h = generators::heawood();
        assert!(matches!(
            verify_observation_odd(&h, &table(&h, 3)),
            Err(BoundError::GirthParity { expected: "odd", .. })
        ));
        let path = generators::path(4);
        assert!(verify_observation_odd(&path, &table(&path, 3)).is_err());
        assert!(matches!(
            verify_observation_odd(&p, &table(&p, 1)),
            Err(BoundError::Walk(_))
        ));
    }
}
