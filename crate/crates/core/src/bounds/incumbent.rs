//! Incumbent list `U` and its local upper bounds.

use std::fmt;

use serde::Serialize;

use crate::model::{Image, Point2, Solution};

/// One coordinate of a local upper bound; `Inf` is the sentinel `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Coord {
    Finite(i64),
    Inf,
}

impl Coord {
    pub fn finite(self) -> Option<i64> {
        match self {
            Coord::Finite(v) => Some(v),
            Coord::Inf => None,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Finite(v) => write!(f, "{v}"),
            Coord::Inf => f.write_str("M"),
        }
    }
}

pub type Lub = Point2<Coord>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Incumbent {
    pub solution: Solution,
    /// Proven nondominated by an IP scalarization.
    pub confirmed: bool,
}

impl Incumbent {
    pub fn image(&self) -> Image {
        self.solution.image
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InsertOutcome {
    Inserted { removed: Vec<Solution> },
    Dominated,
}

impl InsertOutcome {
    pub fn inserted(&self) -> bool {
        matches!(self, InsertOutcome::Inserted { .. })
    }
}

/// Mutually nondominated feasible images sorted by `z1` ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IncumbentList {
    entries: Vec<Incumbent>,
}

impl IncumbentList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[Incumbent] {
        &self.entries
    }

    pub fn images(&self) -> Vec<Image> {
        self.entries.iter().map(Incumbent::image).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, image: &Image) -> Option<&Incumbent> {
        self.entries.iter().find(|e| e.image() == *image)
    }

    /// The `⊎` update: rejects a candidate weakly dominated by (or equal to)
    /// an incumbent, otherwise inserts it and drops what it dominates.
    pub fn insert(&mut self, cand: Solution) -> InsertOutcome {
        let z = cand.image;
        if self.entries.iter().any(|e| e.image().weakly_dominates(&z)) {
            return InsertOutcome::Dominated;
        }
        let mut removed = Vec::new();
        let mut kept = Vec::with_capacity(self.entries.len() + 1);
        for e in self.entries.drain(..) {
            if z.weakly_dominates(&e.image()) {
                removed.push(e.solution);
            } else {
                kept.push(e);
            }
        }
        let pos = kept.partition_point(|e| e.image().z1 < z.z1);
        kept.insert(
            pos,
            Incumbent {
                solution: cand,
                confirmed: false,
            },
        );
        self.entries = kept;
        InsertOutcome::Inserted { removed }
    }

    /// Marks the incumbent with this image as confirmed; `false` if absent.
    pub fn confirm(&mut self, image: &Image) -> bool {
        match self.entries.iter_mut().find(|e| e.image() == *image) {
            Some(e) => {
                e.confirmed = true;
                true
            }
            None => false,
        }
    }

    pub fn confirmed_images(&self) -> Vec<Image> {
        self.entries
            .iter()
            .filter(|e| e.confirmed)
            .map(Incumbent::image)
            .collect()
    }

    pub fn lubs(&self) -> Vec<Lub> {
        rebuild_lubs(&self.images())
    }

    pub fn into_solutions(self) -> Vec<Solution> {
        self.entries.into_iter().map(|e| e.solution).collect()
    }

    /// Replaces an incumbent image without any dominance checks. Only for
    /// negative tests of verification tooling.
    #[doc(hidden)]
    pub fn corrupt_for_testing(&mut self, index: usize, image: Image) {
        self.entries[index].solution.image = image;
    }
}

/// Free-function form of [`IncumbentList::insert`].
pub fn incumbent_insert(u: &mut IncumbentList, cand: Solution) -> InsertOutcome {
    u.insert(cand)
}

/// Local upper bounds of a sorted, mutually nondominated image list:
/// `(z¹₁, M)`, the interior corners `(z^{i+1}₁, z^i₂)`, then `(M, z^k₂)`.
/// An empty list gives the single bound `(M, M)`.
pub fn rebuild_lubs(points: &[Image]) -> Vec<Lub> {
    let Some(first) = points.first() else {
        return vec![Point2::new(Coord::Inf, Coord::Inf)];
    };
    let mut out = Vec::with_capacity(points.len() + 1);
    out.push(Point2::new(Coord::Finite(first.z1), Coord::Inf));
    out.extend(
        interior_lubs(points)
            .into_iter()
            .map(|p| Point2::new(Coord::Finite(p.z1), Coord::Finite(p.z2))),
    );
    out.push(Point2::new(
        Coord::Inf,
        Coord::Finite(points.last().expect("nonempty").z2),
    ));
    out
}

/// Interior corners `(z^{i+1}₁, z^i₂)` only.
pub fn interior_lubs(points: &[Image]) -> Vec<Image> {
    points
        .windows(2)
        .map(|w| Point2::new(w[1].z1, w[0].z2))
        .collect()
}
