//! Constructions of secure dominating sets whose size is bounded in terms
//! of the independence number, one per graph class.
//!
//! Every construction ends by certifying its output with
//! [`is_secure_dominating`] and checking the size bound; a failure of
//! either is reported as an error rather than returned.

mod expansion;
mod p5;
mod peel;
mod small_alpha;

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::domination::{is_secure_dominating, min_secure_dominating_set, DefenseCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::pattern::{contains_induced, PatternKind};

pub use expansion::{c5_expansion_parts, sds_p5_c3_free, sds_p5_paw_free};
pub use p5::{sds_p5_free, AlgorithmTrace, TraceStep};
pub use peel::sds_p5_c4_free;
pub use small_alpha::{sds_k2_2k1_free, sds_p3p1_free, sds_p3p2_free};

/// A non-negative multiple of one half, used for exact size bounds such as
/// `3α/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bound {
    halves: u64,
}

impl Bound {
    pub fn from_int(k: usize) -> Self {
        Self { halves: 2 * k as u64 }
    }

    pub fn from_halves(halves: u64) -> Self {
        Self { halves }
    }

    /// `3α/2`.
    pub fn three_halves(alpha: usize) -> Self {
        Self { halves: 3 * alpha as u64 }
    }

    /// `max{3, α}`.
    pub fn max_three(alpha: usize) -> Self {
        Self::from_int(alpha.max(3))
    }

    pub fn halves(self) -> u64 {
        self.halves
    }

    /// Largest integer not above the bound.
    pub fn floor(self) -> usize {
        (self.halves / 2) as usize
    }

    pub fn as_f64(self) -> f64 {
        self.halves as f64 / 2.0
    }

    pub fn admits(self, size: usize) -> bool {
        size <= self.floor()
    }
}

impl Add for Bound {
    type Output = Bound;

    fn add(self, rhs: Bound) -> Bound {
        Bound {
            halves: self.halves + rhs.halves,
        }
    }
}

impl std::iter::Sum for Bound {
    fn sum<I: Iterator<Item = Bound>>(iter: I) -> Bound {
        iter.fold(Bound::default(), Add::add)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.halves / 2;
        if self.halves.is_multiple_of(2) {
            write!(f, "{whole}.0")
        } else {
            write!(f, "{whole}.5")
        }
    }
}

/// A certified secure dominating set with the bound it was built against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub set: VertexSet,
    pub certificate: DefenseCertificate,
    pub bound: Bound,
    pub trace: Option<AlgorithmTrace>,
}

impl ConstructionResult {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn within_bound(&self) -> bool {
        self.bound.admits(self.size())
    }
}

/// Whether constructions check class membership before running.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub validate: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self { validate: true }
    }
}

impl Options {
    pub fn skip_validation() -> Self {
        Self { validate: false }
    }
}

/// Graph classes with a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionClass {
    P5Free,
    P3UnionP2Free,
    P3UnionP1Free,
    K2UnionTwoK1Free,
    P5C3Free,
    P5PawFree,
    P5C4Free,
}

impl ConstructionClass {
    pub const ALL: [ConstructionClass; 7] = [
        ConstructionClass::P5Free,
        ConstructionClass::P3UnionP2Free,
        ConstructionClass::P3UnionP1Free,
        ConstructionClass::K2UnionTwoK1Free,
        ConstructionClass::P5C3Free,
        ConstructionClass::P5PawFree,
        ConstructionClass::P5C4Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionClass::P5Free => "p5-free",
            ConstructionClass::P3UnionP2Free => "p3up2-free",
            ConstructionClass::P3UnionP1Free => "p3up1-free",
            ConstructionClass::K2UnionTwoK1Free => "k2u2k1-free",
            ConstructionClass::P5C3Free => "p5c3-free",
            ConstructionClass::P5PawFree => "p5paw-free",
            ConstructionClass::P5C4Free => "p5c4-free",
        }
    }

    pub fn forbidden(self) -> &'static [PatternKind] {
        use PatternKind as P;
        match self {
            ConstructionClass::P5Free => &[P::P5],
            ConstructionClass::P3UnionP2Free => &[P::P3UnionP2],
            ConstructionClass::P3UnionP1Free => &[P::P3UnionP1],
            ConstructionClass::K2UnionTwoK1Free => &[P::K2UnionTwoK1],
            ConstructionClass::P5C3Free => &[P::P5, P::C3],
            ConstructionClass::P5PawFree => &[P::P5, P::Paw],
            ConstructionClass::P5C4Free => &[P::P5, P::C4],
        }
    }

    /// The bound for this class is stated for connected graphs only.
    pub fn connected_only(self) -> bool {
        matches!(
            self,
            ConstructionClass::P5C3Free | ConstructionClass::P5PawFree | ConstructionClass::P5C4Free
        )
    }

    /// Membership test: forbidden patterns only. Disconnected members of a
    /// connected-only class are handled component by component.
    pub fn contains(self, g: &Graph) -> bool {
        self.forbidden()
            .iter()
            .all(|k| contains_induced(g, &k.spec()).is_none())
    }

    /// Runs the class's construction directly on `g`.
    pub fn construct(self, g: &Graph, opts: Options) -> Result<ConstructionResult> {
        match self {
            ConstructionClass::P5Free => sds_p5_free(g, opts),
            ConstructionClass::P3UnionP2Free => sds_p3p2_free(g, opts),
            ConstructionClass::P3UnionP1Free => sds_p3p1_free(g, opts),
            ConstructionClass::K2UnionTwoK1Free => sds_k2_2k1_free(g, opts),
            ConstructionClass::P5C3Free => sds_p5_c3_free(g, opts),
            ConstructionClass::P5PawFree => sds_p5_paw_free(g, opts),
            ConstructionClass::P5C4Free => sds_p5_c4_free(g, opts),
        }
    }
}

impl fmt::Display for ConstructionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        ConstructionClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(Error::UnknownClass(s))
    }
}

/// Validates membership, then runs the class construction; connected-only
/// classes are applied per component and the per-component sets and bounds
/// are summed.
pub fn construct_for_class(
    g: &Graph,
    class: ConstructionClass,
    opts: Options,
) -> Result<ConstructionResult> {
    if opts.validate {
        validate_patterns(g, class.name(), class.forbidden())?;
    }
    if !class.connected_only() || g.is_connected() {
        if g.n() == 0 {
            return certify(g, VertexSet::empty(0), Bound::default(), None);
        }
        return class.construct(g, Options::skip_validation());
    }
    let mut set = VertexSet::empty(g.n());
    let mut bound = Bound::default();
    for comp in g.components() {
        let (h, map) = g.induced_subgraph(&comp)?;
        let part = class.construct(&h, Options::skip_validation())?;
        for v in part.set.iter() {
            set.insert(map[v]);
        }
        bound = bound + part.bound;
    }
    certify(g, set, bound, None)
}

pub(crate) fn validate_patterns(g: &Graph, class: &str, kinds: &[PatternKind]) -> Result<()> {
    for &kind in kinds {
        if let Some(w) = contains_induced(g, &kind.spec()) {
            return Err(Error::ClassValidation {
                class: class.to_string(),
                reason: format!("induced {kind} on vertices {w:?}"),
            });
        }
    }
    Ok(())
}

pub(crate) fn require_connected(g: &Graph, class: &str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::ClassValidation {
            class: class.to_string(),
            reason: "graph is disconnected".into(),
        })
    }
}

/// Final certification shared by every construction.
pub(crate) fn certify(
    g: &Graph,
    set: VertexSet,
    bound: Bound,
    trace: Option<AlgorithmTrace>,
) -> Result<ConstructionResult> {
    let certificate = is_secure_dominating(g, &set)
        .map_err(|e| Error::Certification { vertex: e.vertex() })?;
    if !bound.admits(set.len()) {
        return Err(Error::Structure(format!(
            "constructed set of size {} exceeds bound {bound}",
            set.len()
        )));
    }
    Ok(ConstructionResult {
        set,
        certificate,
        bound,
        trace,
    })
}

/// Exact fallback for branches whose `γs <= α` guarantee comes from a
/// result without a construction here; still enforces `|S| <= α`.
pub(crate) fn exact_within_alpha(g: &Graph, alpha: usize) -> Result<VertexSet> {
    let (set, _) = min_secure_dominating_set(g)?;
    if set.len() > alpha {
        return Err(Error::Structure(format!(
            "secure domination number {} exceeds independence number {alpha}",
            set.len()
        )));
    }
    Ok(set)
}
