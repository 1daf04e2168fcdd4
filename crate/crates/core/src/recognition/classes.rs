//! Class membership flags for the rows of the bound table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::pattern::{free_of_kinds, PatternKind};

/// Graph classes reported by [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    ClawFree,
    C3Free,
    PawFree,
    Bipartite,
    C5Free,
    P5Free,
    P3UnionP2Free,
    P3UnionP1Free,
    K2UnionTwoK1Free,
    P5PawFree,
    P5C4Free,
    Split,
    CompleteMultipartite,
    Connected,
}

impl GraphClass {
    pub const ALL: [GraphClass; 14] = [
        GraphClass::ClawFree,
        GraphClass::C3Free,
        GraphClass::PawFree,
        GraphClass::Bipartite,
        GraphClass::C5Free,
        GraphClass::P5Free,
        GraphClass::P3UnionP2Free,
        GraphClass::P3UnionP1Free,
        GraphClass::K2UnionTwoK1Free,
        GraphClass::P5PawFree,
        GraphClass::P5C4Free,
        GraphClass::Split,
        GraphClass::CompleteMultipartite,
        GraphClass::Connected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::ClawFree => "claw-free",
            GraphClass::C3Free => "c3-free",
            GraphClass::PawFree => "paw-free",
            GraphClass::Bipartite => "bipartite",
            GraphClass::C5Free => "c5-free",
            GraphClass::P5Free => "p5-free",
            GraphClass::P3UnionP2Free => "p3up2-free",
            GraphClass::P3UnionP1Free => "p3up1-free",
            GraphClass::K2UnionTwoK1Free => "k2u2k1-free",
            GraphClass::P5PawFree => "p5paw-free",
            GraphClass::P5C4Free => "p5c4-free",
            GraphClass::Split => "split",
            GraphClass::CompleteMultipartite => "complete-multipartite",
            GraphClass::Connected => "connected",
        }
    }

    /// Forbidden patterns defining the class, when it is defined that way.
    pub fn forbidden(self) -> Option<&'static [PatternKind]> {
        use PatternKind as P;
        Some(match self {
            GraphClass::ClawFree => &[P::Claw],
            GraphClass::C3Free => &[P::C3],
            GraphClass::PawFree => &[P::Paw],
            GraphClass::C5Free => &[P::C5],
            GraphClass::P5Free => &[P::P5],
            GraphClass::P3UnionP2Free => &[P::P3UnionP2],
            GraphClass::P3UnionP1Free => &[P::P3UnionP1],
            GraphClass::K2UnionTwoK1Free => &[P::K2UnionTwoK1],
            GraphClass::P5PawFree => &[P::P5, P::Paw],
            GraphClass::P5C4Free => &[P::P5, P::C4],
            GraphClass::Split => &[P::TwoK2, P::C4, P::C5],
            GraphClass::Bipartite | GraphClass::CompleteMultipartite | GraphClass::Connected => {
                return None
            }
        })
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::Bipartite => is_bipartite(g),
            GraphClass::CompleteMultipartite => is_complete_multipartite(g).is_some(),
            GraphClass::Connected => g.is_connected(),
            other => free_of_kinds(g, other.forbidden().expect("pattern-defined class")),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(Error::UnknownClass(s))
    }
}

/// Membership flag for every class in [`GraphClass::ALL`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub flags: BTreeMap<GraphClass, bool>,
}

impl ClassReport {
    pub fn get(&self, class: GraphClass) -> bool {
        self.flags[&class]
    }

    /// Implications that must hold between flags. Returns the first broken
    /// one.
    pub fn check_consistency(&self) -> std::result::Result<(), &'static str> {
        use GraphClass as C;
        if self.get(C::P5PawFree) != (self.get(C::P5Free) && self.get(C::PawFree)) {
            return Err("(P5,paw)-free must equal P5-free and paw-free");
        }
        if self.get(C::Split) && !self.get(C::C5Free) {
            return Err("split must imply C5-free");
        }
        if self.get(C::CompleteMultipartite) && !self.get(C::PawFree) {
            return Err("complete multipartite must imply paw-free");
        }
        if self.get(C::Bipartite) && !(self.get(C::C3Free) && self.get(C::C5Free)) {
            return Err("bipartite must imply C3-free and C5-free");
        }
        if self.get(C::P3UnionP1Free) && !self.get(C::P3UnionP2Free) {
            return Err("(P3+P1)-free must imply (P3+P2)-free");
        }
        if self.get(C::K2UnionTwoK1Free) && !self.get(C::P3UnionP2Free) {
            return Err("(K2+2K1)-free must imply (P3+P2)-free");
        }
        Ok(())
    }
}

pub fn classify(g: &Graph) -> ClassReport {
    ClassReport {
        flags: GraphClass::ALL.into_iter().map(|c| (c, c.contains(g))).collect(),
    }
}

/// Two-colouring by traversal.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    for start in g.vertices() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = colour[v].expect("coloured before push");
            for w in g.adjacency(v).iter() {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Parts of a complete multipartite graph: the components of the
/// complement, provided each is independent in `g`.
pub fn is_complete_multipartite(g: &Graph) -> Option<Vec<VertexSet>> {
    let parts = g.complement().components();
    parts
        .iter()
        .all(|p| g.is_independent(p))
        .then_some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_basic, gen_complete_multipartite, BasicFamily};

    #[test]
    fn c5_report() {
        let r = classify(&PatternKind::C5.graph());
        assert!(r.get(GraphClass::P5Free));
        assert!(!r.get(GraphClass::C5Free));
        assert!(!r.get(GraphClass::Bipartite));
        assert!(!r.get(GraphClass::Split));
        assert!(r.check_consistency().is_ok());
    }

    #[test]
    fn star_report() {
        let r = classify(&gen_basic(BasicFamily::Star, 5).unwrap());
        assert!(r.get(GraphClass::Bipartite));
        assert!(r.get(GraphClass::C5Free));
        assert!(r.get(GraphClass::P5Free));
        assert!(!r.get(GraphClass::ClawFree));
    }

    #[test]
    fn two_c5_report() {
        let c5 = PatternKind::C5.graph();
        let r = classify(&Graph::disjoint_union([&c5, &c5]));
        assert!(!r.get(GraphClass::Connected));
        assert!(r.get(GraphClass::C3Free));
    }

    #[test]
    fn complete_multipartite_examples() {
        let k23 = gen_complete_multipartite(&[2, 3]).unwrap();
        let mut sizes: Vec<usize> = is_complete_multipartite(&k23)
            .unwrap()
            .iter()
            .map(|p| p.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        assert!(is_complete_multipartite(&PatternKind::C5.graph()).is_none());
        let k4 = gen_basic(BasicFamily::Complete, 4).unwrap();
        let parts = is_complete_multipartite(&k4).unwrap();
        assert_eq!(parts.len(), 4);
        assert!(parts.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn class_names_round_trip() {
        for c in GraphClass::ALL {
            assert_eq!(c.name().parse::<GraphClass>().unwrap(), c);
        }
        assert!("nope".parse::<GraphClass>().is_err());
    }
}
