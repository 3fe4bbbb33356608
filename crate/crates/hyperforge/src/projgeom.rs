//! Projective geometries arising from hyperfields whose self-sums are
//! `x + x = {x, 0}`: line extraction, incidence axioms, dimension, and the
//! Desargues property.
//!
//! Points are the nonzero elements of the source structure, named by their
//! element indices `1..=point_count`; the line through two distinct points
//! `x, y` is `{x, y} ∪ (x + y)`. All checks are exhaustive enumerations over
//! these finite configurations.

use serde::{Deserialize, Serialize};

use crate::hyperfield::{bits, FiniteHyperfield};
use crate::{Error, Result};

/// An incidence structure: points `1..=point_count` and lines as point sets.
///
/// Lines are stored sorted (members ascending, lines lexicographic). The
/// JSON form is `{"points": …, "lines": [[…]], "provenance": …}` with
/// `provenance` omitted when absent. Duplicate lines are representable so
/// that defective structures can be examined by
/// [`ProjectiveGeometry::check_incidence_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GeometryRepr", into = "GeometryRepr")]
pub struct ProjectiveGeometry {
    point_count: usize,
    lines: Vec<Vec<usize>>,
    provenance: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GeometryRepr {
    points: usize,
    lines: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

impl TryFrom<GeometryRepr> for ProjectiveGeometry {
    type Error = Error;

    fn try_from(repr: GeometryRepr) -> Result<Self> {
        let g = ProjectiveGeometry::from_lines(repr.points, repr.lines)?;
        Ok(match repr.provenance {
            Some(p) => g.with_provenance(p),
            None => g,
        })
    }
}

impl From<ProjectiveGeometry> for GeometryRepr {
    fn from(g: ProjectiveGeometry) -> Self {
        GeometryRepr {
            points: g.point_count,
            lines: g.lines,
            provenance: g.provenance,
        }
    }
}

/// Largest point count representable (point indices live in a `u128` mask
/// alongside the unused index 0).
pub const MAX_POINTS: usize = 127;

impl ProjectiveGeometry {
    /// Builds a geometry from explicit lines over points `1..=point_count`.
    ///
    /// Each line must have at least two distinct points in range; duplicate
    /// lines are kept as given (sorted), so defective structures survive the
    /// round trip into [`Self::check_incidence_axioms`].
    pub fn from_lines(point_count: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        if point_count == 0 {
            return Err(Error::GeometryInvalid("no points".into()));
        }
        if point_count > MAX_POINTS {
            return Err(Error::BoundExceeded {
                what: "point count",
                got: point_count as u128,
                limit: MAX_POINTS as u128,
            });
        }
        let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(lines.len());
        for mut line in lines {
            line.sort_unstable();
            line.dedup();
            if line.len() < 2 {
                return Err(Error::GeometryInvalid(format!(
                    "line {line:?} has fewer than two points"
                )));
            }
            if let Some(&p) = line.iter().find(|&&p| p == 0 || p > point_count) {
                return Err(Error::GeometryInvalid(format!(
                    "line point {p} outside 1..={point_count}"
                )));
            }
            sorted.push(line);
        }
        sorted.sort();
        Ok(ProjectiveGeometry {
            point_count,
            lines: sorted,
            provenance: None,
        })
    }

    /// Attaches a provenance note (e.g. which structure the geometry came from).
    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    /// Point indices, ascending.
    pub fn points(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.point_count
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    fn all_mask(&self) -> u128 {
        ((1u128 << self.point_count) - 1) << 1
    }

    fn line_masks(&self) -> Vec<u128> {
        self.lines
            .iter()
            .map(|l| l.iter().fold(0u128, |acc, &p| acc | (1 << p)))
            .collect()
    }

    /// Line ids through each point.
    fn lines_through(&self) -> Vec<Vec<usize>> {
        let mut through = vec![Vec::new(); self.point_count + 1];
        for (id, line) in self.lines.iter().enumerate() {
            for &p in line {
                through[p].push(id);
            }
        }
        through
    }

    /// First line id containing each point pair, when any.
    fn pair_lines(&self) -> Vec<Vec<Option<usize>>> {
        let n = self.point_count + 1;
        let mut pair = vec![vec![None; n]; n];
        for (id, line) in self.lines.iter().enumerate().rev() {
            for (i, &x) in line.iter().enumerate() {
                for &y in &line[i + 1..] {
                    pair[x][y] = Some(id);
                    pair[y][x] = Some(id);
                }
            }
        }
        pair
    }

    /// Closure of a point set under "two points pull in their whole line".
    fn span(&self, masks: &[u128], mut set: u128) -> u128 {
        loop {
            let mut grew = false;
            for &m in masks {
                if (m & set).count_ones() >= 2 && m & !set != 0 {
                    set |= m;
                    grew = true;
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Projective dimension: one less than the size of a minimal spanning
    /// set, grown greedily in ascending point order (always adding the least
    /// point outside the current span).
    pub fn dimension(&self) -> usize {
        let masks = self.line_masks();
        let all = self.all_mask();
        let mut set = self.span(&masks, 1u128 << 1);
        let mut basis = 1;
        while set != all {
            let missing = (all & !set).trailing_zeros();
            set = self.span(&masks, set | (1u128 << missing));
            basis += 1;
        }
        basis - 1
    }

    /// Checks the three incidence axioms and reports a verdict for each:
    /// a unique line through every point pair; the transversal axiom (a line
    /// meeting two sides of a triangle off their vertices meets the third);
    /// and thickness (every line has ≥ 3 points), where a geometry that is a
    /// single line is admitted as the degenerate dimension-one case.
    pub fn check_incidence_axioms(&self) -> IncidenceReport {
        let masks = self.line_masks();
        let through = self.lines_through();
        let pair = self.pair_lines();
        IncidenceReport {
            pair_uniqueness: self.check_pair_uniqueness(&masks),
            veblen_young: self.check_veblen_young(&masks, &through, &pair),
            thickness: self.check_thickness(),
        }
    }

    fn check_pair_uniqueness(&self, masks: &[u128]) -> IncidenceVerdict {
        for x in 1..=self.point_count {
            for y in x + 1..=self.point_count {
                let both = (1u128 << x) | (1u128 << y);
                let count = masks.iter().filter(|&&m| m & both == both).count();
                if count != 1 {
                    return IncidenceVerdict::fail(vec![x, y]);
                }
            }
        }
        IncidenceVerdict::pass()
    }

    fn check_veblen_young(
        &self,
        masks: &[u128],
        through: &[Vec<usize>],
        pair: &[Vec<Option<usize>>],
    ) -> IncidenceVerdict {
        let mut any_instance = false;
        for a in 1..=self.point_count {
            for b in a + 1..=self.point_count {
                for c in b + 1..=self.point_count {
                    let (Some(ab), Some(ac), Some(bc)) = (pair[a][b], pair[a][c], pair[b][c])
                    else {
                        continue;
                    };
                    if masks[ab] & (1u128 << c) != 0 {
                        continue;
                    }
                    // Each vertex in turn is the one shared by the two sides
                    // the transversal must cross.
                    for (apex, u, v, side_u, side_v, side_uv) in [
                        (a, b, c, ab, ac, bc),
                        (b, a, c, ab, bc, ac),
                        (c, a, b, ac, bc, ab),
                    ] {
                        let interior = masks[side_u] & !(1u128 << apex) & !(1u128 << u);
                        for p in bits(interior) {
                            for &l in &through[p] {
                                let crossings =
                                    masks[l] & masks[side_v] & !(1u128 << apex) & !(1u128 << v);
                                if crossings == 0 {
                                    continue;
                                }
                                any_instance = true;
                                if masks[l] & masks[side_uv] == 0 {
                                    let q = crossings.trailing_zeros() as usize;
                                    return IncidenceVerdict::fail(vec![apex, u, v, p, q]);
                                }
                            }
                        }
                    }
                }
            }
        }
        if any_instance {
            IncidenceVerdict::pass()
        } else {
            IncidenceVerdict::vacuous()
        }
    }

    fn check_thickness(&self) -> IncidenceVerdict {
        if self.lines.len() == 1 {
            return IncidenceVerdict::degenerate_admitted();
        }
        for line in &self.lines {
            if line.len() < 3 {
                return IncidenceVerdict::fail(line.clone());
            }
        }
        IncidenceVerdict::pass()
    }

    /// Exhaustively checks the Desargues property: any two triangles
    /// perspective from a point, with all corresponding sides distinct, have
    /// collinear intersection points of corresponding sides.
    ///
    /// Requires dimension ≥ 2 and at most 40 points.
    pub fn is_desarguesian(&self) -> Result<bool> {
        if self.point_count > 40 {
            return Err(Error::BoundExceeded {
                what: "point count",
                got: self.point_count as u128,
                limit: 40,
            });
        }
        if self.dimension() < 2 {
            return Err(Error::Precondition(
                "the Desargues check needs dimension at least 2".into(),
            ));
        }
        let masks = self.line_masks();
        let through = self.lines_through();
        let pair = self.pair_lines();
        for center in 1..=self.point_count {
            let pencil = &through[center];
            for i in 0..pencil.len() {
                for j in i + 1..pencil.len() {
                    for k in j + 1..pencil.len() {
                        let legs = [pencil[i], pencil[j], pencil[k]];
                        let spots: Vec<Vec<usize>> = legs
                            .iter()
                            .map(|&l| bits(masks[l] & !(1u128 << center)).collect())
                            .collect();
                        for &a1 in &spots[0] {
                            for &b1 in &spots[0] {
                                if b1 == a1 {
                                    continue;
                                }
                                for &a2 in &spots[1] {
                                    for &b2 in &spots[1] {
                                        if b2 == a2 {
                                            continue;
                                        }
                                        for &a3 in &spots[2] {
                                            for &b3 in &spots[2] {
                                                if b3 == a3 {
                                                    continue;
                                                }
                                                if self.desargues_violated(
                                                    &masks,
                                                    &pair,
                                                    [a1, a2, a3],
                                                    [b1, b2, b3],
                                                ) {
                                                    return Ok(false);
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// True when this perspective pair is a proper configuration whose axis
    /// points are not collinear. Degenerate configurations (a flat triangle,
    /// or coinciding corresponding sides) are skipped.
    fn desargues_violated(
        &self,
        masks: &[u128],
        pair: &[Vec<Option<usize>>],
        a: [usize; 3],
        b: [usize; 3],
    ) -> bool {
        let side = |x: usize, y: usize| pair[x][y];
        let (Some(sa12), Some(sa13), Some(sa23)) =
            (side(a[0], a[1]), side(a[0], a[2]), side(a[1], a[2]))
        else {
            return false;
        };
        let (Some(sb12), Some(sb13), Some(sb23)) =
            (side(b[0], b[1]), side(b[0], b[2]), side(b[1], b[2]))
        else {
            return false;
        };
        if masks[sa12] & (1u128 << a[2]) != 0 || masks[sb12] & (1u128 << b[2]) != 0 {
            return false;
        }
        let mut axis_points = [0usize; 3];
        for (slot, (sa, sb)) in [(sa12, sb12), (sa13, sb13), (sa23, sb23)]
            .into_iter()
            .enumerate()
        {
            if sa == sb {
                return false;
            }
            let inter = masks[sa] & masks[sb];
            if inter.count_ones() != 1 {
                return false;
            }
            axis_points[slot] = inter.trailing_zeros() as usize;
        }
        let [p, q, r] = axis_points;
        if p == q || p == r || q == r {
            return false;
        }
        match pair[p][q] {
            Some(axis) => masks[axis] & (1u128 << r) == 0,
            None => true,
        }
    }
}

/// Derives the incidence geometry of a hyperfield whose self-sums collapse:
/// every nonzero `x` must satisfy `x + x = {x, 0}`, or `x + x = {0}` in the
/// characteristic-two degenerate form. Points are the nonzero elements and
/// the line through distinct `x, y` is `{x, y} ∪ (x + y)`. Uniqueness of the
/// line through each pair is verified during construction.
pub fn geometry_of(h: &FiniteHyperfield) -> Result<ProjectiveGeometry> {
    let collapsed = h.hyperadd(0, 0) == 1
        && (1..h.n()).all(|x| {
            let s = h.hyperadd(x, x);
            s == (1u128 << x) | 1 || s == 1
        });
    if !collapsed {
        return Err(Error::Precondition(
            "the geometry is defined for structures whose self-sums lie in {x, 0}".into(),
        ));
    }
    if h.n() < 3 {
        return Err(Error::Precondition(
            "need at least two points to draw a line".into(),
        ));
    }
    let point_count = h.n() - 1;
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for x in 1..h.n() {
        for y in x + 1..h.n() {
            let mut line = h.hyperadd_members(x, y);
            line.retain(|&w| w != 0);
            line.push(x);
            line.push(y);
            line.sort_unstable();
            line.dedup();
            lines.push(line);
        }
    }
    lines.sort();
    lines.dedup();
    let geometry = ProjectiveGeometry::from_lines(point_count, lines)?;
    let masks = geometry.line_masks();
    for x in 1..=point_count {
        for y in x + 1..=point_count {
            let both = (1u128 << x) | (1u128 << y);
            if masks.iter().filter(|&&m| m & both == both).count() != 1 {
                return Err(Error::GeometryInvalid(format!(
                    "points {x} and {y} do not lie on a unique line"
                )));
            }
        }
    }
    Ok(geometry)
}

/// Verdict status for one incidence axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IncidenceStatus {
    Pass,
    /// The axiom's hypothesis never occurs in this geometry.
    Vacuous,
    /// The geometry is one single line; thickness is waived for this
    /// dimension-one case.
    DegenerateAdmitted,
    Fail,
}

/// Outcome of one incidence axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceVerdict {
    pub status: IncidenceStatus,
    pub counterexample: Option<Vec<usize>>,
}

impl IncidenceVerdict {
    fn pass() -> Self {
        IncidenceVerdict {
            status: IncidenceStatus::Pass,
            counterexample: None,
        }
    }

    fn vacuous() -> Self {
        IncidenceVerdict {
            status: IncidenceStatus::Vacuous,
            counterexample: None,
        }
    }

    fn degenerate_admitted() -> Self {
        IncidenceVerdict {
            status: IncidenceStatus::DegenerateAdmitted,
            counterexample: None,
        }
    }

    fn fail(witness: Vec<usize>) -> Self {
        IncidenceVerdict {
            status: IncidenceStatus::Fail,
            counterexample: Some(witness),
        }
    }

    /// Whether the axiom is satisfied (possibly vacuously or by the admitted
    /// degenerate case).
    pub fn ok(&self) -> bool {
        self.status != IncidenceStatus::Fail
    }
}

/// Verdicts for the three incidence axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceReport {
    #[serde(rename = "pair uniqueness")]
    pub pair_uniqueness: IncidenceVerdict,
    #[serde(rename = "veblen-young")]
    pub veblen_young: IncidenceVerdict,
    pub thickness: IncidenceVerdict,
}

impl IncidenceReport {
    pub fn all_ok(&self) -> bool {
        self.pair_uniqueness.ok() && self.veblen_young.ok() && self.thickness.ok()
    }
}
