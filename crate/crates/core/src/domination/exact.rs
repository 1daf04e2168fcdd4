//! Exact exponential solvers over `u128` vertex masks.

use crate::domination::{is_secure_dominating, DefenseCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::Combinations;

/// Largest graph the exact solvers accept.
pub const EXACT_MAX_VERTICES: usize = 128;

type Mask = u128;

struct Masks {
    n: usize,
    open: Vec<Mask>,
    closed: Vec<Mask>,
}

impl Masks {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > EXACT_MAX_VERTICES {
            return Err(Error::Parameter(format!(
                "exact solvers support at most {EXACT_MAX_VERTICES} vertices, got {n}"
            )));
        }
        let open: Vec<Mask> = g
            .vertices()
            .map(|v| g.adjacency(v).iter().fold(0, |m, w| m | 1 << w))
            .collect();
        let closed = open.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        Ok(Self { n, open, closed })
    }

    fn all(&self) -> Mask {
        if self.n == 128 {
            Mask::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    fn dominates(&self, s: Mask) -> bool {
        let mut covered = s;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.open[v];
        }
        covered == self.all()
    }

    /// Secure-domination test on masks: for every outside `v` some
    /// neighbour `u` in `s` has all its private external neighbours inside
    /// `N[v]`.
    fn secure(&self, s: Mask) -> bool {
        if !self.dominates(s) {
            return false;
        }
        let mut epn = [0 as Mask; EXACT_MAX_VERTICES];
        let mut outside = self.all() & !s;
        while outside != 0 {
            let w = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let in_s = self.open[w] & s;
            if in_s.count_ones() == 1 {
                epn[in_s.trailing_zeros() as usize] |= 1 << w;
            }
        }
        let mut outside = self.all() & !s;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let mut cands = self.open[v] & s;
            let mut ok = false;
            while cands != 0 {
                let u = cands.trailing_zeros() as usize;
                cands &= cands - 1;
                if epn[u] & !self.closed[v] == 0 {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }
}

fn to_set(n: usize, m: Mask) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1))
}

fn subset_mask(sub: &[usize]) -> Mask {
    sub.iter().fold(0, |m, &v| m | 1 << v)
}

/// Greedy independent set (minimum remaining degree first), used as the
/// initial lower bound.
fn greedy_independent(m: &Masks) -> u32 {
    let mut cand = m.all();
    let mut size = 0;
    while cand != 0 {
        let mut best = None;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (m.open[v] & cand).count_ones();
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, v));
            }
        }
        let (_, v) = best.expect("non-empty candidate set");
        cand &= !m.closed[v];
        size += 1;
    }
    size
}

/// Upper bound on the independence number of `G[cand]`: number of cliques
/// in a greedy clique cover.
fn clique_cover_bound(m: &Masks, mut cand: Mask) -> u32 {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique_common = m.open[v] & cand;
        cand &= !(1 << v);
        while clique_common != 0 {
            let w = clique_common.trailing_zeros() as usize;
            clique_common &= m.open[w];
            cand &= !(1 << w);
        }
        cliques += 1;
    }
    cliques
}

struct MisSearch<'a> {
    m: &'a Masks,
    best: Mask,
    best_size: u32,
    floor: u32,
}

impl MisSearch<'_> {
    fn threshold(&self) -> u32 {
        self.floor.max(self.best_size + 1)
    }

    fn run(&mut self, cand: Mask, cur: Mask, size: u32) {
        if cand == 0 {
            if size > self.best_size {
                self.best = cur;
                self.best_size = size;
            }
            return;
        }
        if size + clique_cover_bound(self.m, cand) < self.threshold() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        self.run(cand & !self.m.closed[v], cur | 1 << v, size + 1);
        self.run(cand & !(1 << v), cur, size);
    }
}

/// A maximum independent set: the lexicographically smallest one.
///
/// Branch and bound that branches on the smallest candidate, trying
/// inclusion before exclusion, so the first maximum set reached is the
/// lexicographically least. Pruning uses a greedy clique cover, and the
/// search starts from a greedy lower bound.
pub fn max_independent_set(g: &Graph) -> Result<VertexSet> {
    let m = Masks::new(g)?;
    if g.n() == 0 {
        return Ok(VertexSet::empty(0));
    }
    let mut search = MisSearch {
        m: &m,
        best: 0,
        best_size: 0,
        floor: greedy_independent(&m),
    };
    search.run(m.all(), 0, 0);
    Ok(to_set(g.n(), search.best))
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(max_independent_set(g)?.len())
}

/// First `k`-subset in lexicographic order accepted by `accept`, trying
/// `k = from, from + 1, ...`.
fn first_by_size(m: &Masks, from: usize, accept: impl Fn(Mask) -> bool) -> Mask {
    for k in from..=m.n {
        let mut combos = Combinations::new(m.n, k);
        while let Some(sub) = combos.next_subset() {
            let s = subset_mask(sub);
            if accept(s) {
                return s;
            }
        }
    }
    unreachable!("the full vertex set is always accepted")
}

/// A minimum dominating set, lexicographically first among the smallest.
pub fn min_dominating_set(g: &Graph) -> Result<VertexSet> {
    let m = Masks::new(g)?;
    if g.n() == 0 {
        return Ok(VertexSet::empty(0));
    }
    let s = first_by_size(&m, 1, |s| m.dominates(s));
    Ok(to_set(g.n(), s))
}

/// A minimum secure dominating set with its certificate.
///
/// Cardinalities are tried upward starting from the domination number;
/// within a cardinality, subsets are tried in lexicographic order.
pub fn min_secure_dominating_set(g: &Graph) -> Result<(VertexSet, DefenseCertificate)> {
    let m = Masks::new(g)?;
    let gamma = min_dominating_set(g)?.len();
    let s = if g.n() == 0 {
        0
    } else {
        first_by_size(&m, gamma, |s| m.secure(s))
    };
    let set = to_set(g.n(), s);
    let cert = is_secure_dominating(g, &set)
        .map_err(|e| Error::Certification { vertex: e.vertex() })?;
    Ok((set, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_dominating;
    use crate::generators::{enumerate_labeled, gen_basic, gen_disjoint_c5, BasicFamily};
    use crate::graph::Graph;

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, xs.iter().copied())
    }

    /// Every subset, smallest cardinality first, lexicographic within.
    fn brute_first(g: &Graph, pred: impl Fn(&VertexSet) -> bool) -> VertexSet {
        let n = g.n();
        let mut all: Vec<VertexSet> = (0u32..1 << n)
            .map(|mask| VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
            .filter(|s| pred(s))
            .collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.into_iter().next().unwrap()
    }

    fn brute_mis(g: &Graph) -> VertexSet {
        let n = g.n();
        let mut all: Vec<VertexSet> = (0u32..1 << n)
            .map(|mask| VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
            .filter(|s| g.is_independent(s))
            .collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.into_iter().next().unwrap()
    }

    #[test]
    fn independence_examples() {
        let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
        assert_eq!(max_independent_set(&c5).unwrap(), set(5, &[0, 2]));
        let star = gen_basic(BasicFamily::Star, 6).unwrap();
        assert_eq!(max_independent_set(&star).unwrap(), set(6, &[1, 2, 3, 4, 5]));
        let k6 = gen_basic(BasicFamily::Complete, 6).unwrap();
        assert_eq!(max_independent_set(&k6).unwrap(), set(6, &[0]));
        assert!(max_independent_set(&Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn secure_domination_examples() {
        let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
        let (s, cert) = min_secure_dominating_set(&c5).unwrap();
        assert_eq!(s.len(), 3);
        cert.verify(&c5).unwrap();
        let star = gen_basic(BasicFamily::Star, 5).unwrap();
        assert_eq!(min_secure_dominating_set(&star).unwrap().0.len(), 4);
        let p3 = gen_basic(BasicFamily::Path, 3).unwrap();
        assert_eq!(min_secure_dominating_set(&p3).unwrap().0.len(), 2);
        assert!(min_secure_dominating_set(&Graph::empty(0)).unwrap().0.is_empty());
    }

    #[test]
    fn domination_examples() {
        let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
        assert_eq!(min_dominating_set(&c5).unwrap().len(), 2);
        let star = gen_basic(BasicFamily::Star, 5).unwrap();
        assert_eq!(min_dominating_set(&star).unwrap(), set(5, &[0]));
        assert_eq!(min_dominating_set(&gen_disjoint_c5(2)).unwrap().len(), 4);
    }

    #[test]
    fn solvers_match_brute_force_up_to_five_vertices() {
        for n in 0..=5 {
            for g in enumerate_labeled(n).unwrap() {
                assert_eq!(max_independent_set(&g).unwrap(), brute_mis(&g), "{g:?}");
                if n == 0 {
                    continue;
                }
                assert_eq!(
                    min_dominating_set(&g).unwrap(),
                    brute_first(&g, |s| is_dominating(&g, s)),
                    "{g:?}"
                );
                assert_eq!(
                    min_secure_dominating_set(&g).unwrap().0,
                    brute_first(&g, |s| is_secure_dominating(&g, s).is_ok()),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn rejects_oversized_graphs() {
        assert!(max_independent_set(&Graph::empty(129)).is_err());
        assert_eq!(max_independent_set(&Graph::empty(128)).unwrap().len(), 128);
    }
}
