//! Objective-space bookkeeping: incumbents, local upper bounds, dominance
//! fathoming, level-set cuts and gap scores.

mod gap;
mod geometry;
mod incumbent;

pub use gap::{box_proxy, gap_report, hg, spanning_points, GapKind, GapReport};
pub use geometry::{
    awt_level_points, clip_awt_levelset, clip_halfspace, fathom_by_dominance, points_above,
};
pub use incumbent::{
    incumbent_insert, interior_lubs, rebuild_lubs, Coord, Incumbent, IncumbentList, InsertOutcome,
    Lub,
};
