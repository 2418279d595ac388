//! Problem representation for bi-objective 0-1 linear programs.
//!
//! Internally every instance is a minimization problem. Instances read or
//! generated in max sense keep their sense flag but store negated objective
//! rows; [`Instance::to_original`] maps images back for reporting.

mod format;
mod generate;

pub use format::{parse_instance, serialize_instance};
pub use generate::{gen_assignment, gen_facility_location, gen_knapsack};

use serde::Serialize;

use crate::error::{Error, Result};

/// A point in objective space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point2<T> {
    pub z1: T,
    pub z2: T,
}

impl<T> Point2<T> {
    pub const fn new(z1: T, z2: T) -> Self {
        Point2 { z1, z2 }
    }
}

/// Image of a 0-1 vector under integral objectives.
pub type Image = Point2<i64>;

impl Image {
    /// `self ≦ other` componentwise (weak dominance, equality allowed).
    pub fn weakly_dominates(&self, other: &Image) -> bool {
        self.z1 <= other.z1 && self.z2 <= other.z2
    }

    /// `self ≤ other` and `self ≠ other`.
    pub fn dominates(&self, other: &Image) -> bool {
        self.weakly_dominates(other) && self != other
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    pub fn le(coeffs: Vec<i64>, rhs: i64) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        }
    }

    pub fn eq(coeffs: Vec<i64>, rhs: i64) -> Self {
        Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }

    pub fn activity(&self, x: &[u8]) -> i64 {
        self.coeffs
            .iter()
            .zip(x)
            .filter(|(_, &xi)| xi != 0)
            .map(|(c, _)| *c)
            .sum()
    }

    pub fn is_satisfied_by(&self, activity: i64) -> bool {
        match self.relation {
            Relation::Le => activity <= self.rhs,
            Relation::Eq => activity == self.rhs,
        }
    }
}

/// Benchmark class an instance was generated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Knapsack { m: usize },
    Assignment { l: usize },
    FacilityLocation { l: usize, q: usize },
    Generic,
}

impl ClassTag {
    pub fn name(&self) -> &'static str {
        match self {
            ClassTag::Knapsack { .. } => "knapsack",
            ClassTag::Assignment { .. } => "assignment",
            ClassTag::FacilityLocation { .. } => "facility_location",
            ClassTag::Generic => "generic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    /// Min-sense objective rows.
    objectives: [Vec<i64>; 2],
    constraints: Vec<Constraint>,
    sense: Sense,
    class: ClassTag,
    seed: Option<u64>,
}

impl Instance {
    /// Builds an instance from objectives given in `sense` orientation.
    pub fn new(
        sense: Sense,
        objectives: [Vec<i64>; 2],
        constraints: Vec<Constraint>,
        class: ClassTag,
        seed: Option<u64>,
    ) -> Result<Self> {
        let n = objectives[0].len();
        let objectives = match sense {
            Sense::Min => objectives,
            Sense::Max => objectives.map(|row| row.into_iter().map(|c| -c).collect()),
        };
        let inst = Instance {
            n,
            objectives,
            constraints,
            sense,
            class,
            seed,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Convenience constructor for small hand-written min-sense problems.
    pub fn generic_min(objectives: [Vec<i64>; 2], constraints: Vec<Constraint>) -> Result<Self> {
        Instance::new(Sense::Min, objectives, constraints, ClassTag::Generic, None)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidInstance("no variables".into()));
        }
        if self.objectives[1].len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: self.objectives[1].len(),
            });
        }
        for c in &self.constraints {
            if c.coeffs.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: c.coeffs.len(),
                });
            }
        }
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        match self.class {
            ClassTag::Generic => Ok(()),
            ClassTag::Knapsack { m } => {
                if !(1..=3).contains(&m) || self.constraints.len() != m {
                    return bad(format!("knapsack with m={m} needs exactly m rows"));
                }
                if self.constraints.iter().any(|c| c.relation != Relation::Le) {
                    return bad("knapsack rows must be `le`".into());
                }
                Ok(())
            }
            ClassTag::Assignment { l } => {
                if n != l * l || self.constraints.len() != 2 * l {
                    return bad(format!(
                        "assignment with l={l} needs l^2 variables and 2l rows"
                    ));
                }
                for c in &self.constraints {
                    let ones = c.coeffs.iter().filter(|&&v| v == 1).count();
                    let zeros = c.coeffs.iter().filter(|&&v| v == 0).count();
                    if c.relation != Relation::Eq || c.rhs != 1 || ones != l || ones + zeros != n {
                        return bad("assignment rows must be `eq` with l unit coefficients".into());
                    }
                }
                Ok(())
            }
            ClassTag::FacilityLocation { l, q } => {
                if n != (l + 1) * q || self.constraints.len() != l + l * q {
                    return bad(format!(
                        "facility location with l={l}, q={q} needs (l+1)q variables and l+lq rows"
                    ));
                }
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Min-sense objective row `k` (0 or 1).
    pub fn objective(&self, k: usize) -> &[i64] {
        &self.objectives[k]
    }

    /// Objective row `k` in the instance's original sense.
    pub fn original_objective(&self, k: usize) -> Vec<i64> {
        match self.sense {
            Sense::Min => self.objectives[k].clone(),
            Sense::Max => self.objectives[k].iter().map(|c| -c).collect(),
        }
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn class(&self) -> ClassTag {
        self.class
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Min-sense image `(C₁·x, C₂·x)`.
    pub fn evaluate(&self, x: &[u8]) -> Result<Image> {
        self.check_len(x)?;
        let dot = |row: &[i64]| -> i64 {
            row.iter()
                .zip(x)
                .filter(|(_, &xi)| xi != 0)
                .map(|(c, _)| *c)
                .sum()
        };
        Ok(Point2::new(
            dot(&self.objectives[0]),
            dot(&self.objectives[1]),
        ))
    }

    pub fn is_feasible(&self, x: &[u8]) -> Result<bool> {
        self.check_len(x)?;
        Ok(self
            .constraints
            .iter()
            .all(|c| c.is_satisfied_by(c.activity(x))))
    }

    /// Maps a min-sense image back to the original orientation.
    pub fn to_original(&self, p: Image) -> Image {
        match self.sense {
            Sense::Min => p,
            Sense::Max => Point2::new(-p.z1, -p.z2),
        }
    }

    fn check_len(&self, x: &[u8]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(())
    }
}

/// A feasible 0/1 vector together with its min-sense image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Solution {
    pub assignment: Vec<u8>,
    pub image: Image,
}

impl Solution {
    pub fn new(inst: &Instance, assignment: Vec<u8>) -> Result<Self> {
        let image = inst.evaluate(&assignment)?;
        Ok(Solution { assignment, image })
    }
}
