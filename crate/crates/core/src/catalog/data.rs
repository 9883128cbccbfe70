//! Embedded catalog data: exact matrix files, placement plans, and the
//! alias table for re-listed entries and building-block names.

pub(super) static MATRIX_DATA: &[(&str, &str)] = &[
    ("I", include_str!("../../data/matrices/I.json")),
    ("II", include_str!("../../data/matrices/II.json")),
    ("III.A.1", include_str!("../../data/matrices/III.A.1.json")),
    ("III.A.2", include_str!("../../data/matrices/III.A.2.json")),
    ("III.A.3", include_str!("../../data/matrices/III.A.3.json")),
    ("III.A.4", include_str!("../../data/matrices/III.A.4.json")),
    ("III.B.1", include_str!("../../data/matrices/III.B.1.json")),
    ("III.B.2", include_str!("../../data/matrices/III.B.2.json")),
    ("III.B.3", include_str!("../../data/matrices/III.B.3.json")),
    ("III.B.4", include_str!("../../data/matrices/III.B.4.json")),
    ("III.B.5", include_str!("../../data/matrices/III.B.5.json")),
    ("III.B.6", include_str!("../../data/matrices/III.B.6.json")),
    ("III.B.7", include_str!("../../data/matrices/III.B.7.json")),
    ("III.B.8", include_str!("../../data/matrices/III.B.8.json")),
    ("III.B.9", include_str!("../../data/matrices/III.B.9.json")),
    ("III.B.10", include_str!("../../data/matrices/III.B.10.json")),
    ("IV.A.1", include_str!("../../data/matrices/IV.A.1.json")),
    ("IV.A.2", include_str!("../../data/matrices/IV.A.2.json")),
    ("IV.A.3", include_str!("../../data/matrices/IV.A.3.json")),
    ("IV.A.4", include_str!("../../data/matrices/IV.A.4.json")),
    ("IV.A.5", include_str!("../../data/matrices/IV.A.5.json")),
    (
        "IV.A.5.corrected",
        include_str!("../../data/matrices/IV.A.5.corrected.json"),
    ),
    ("IV.A.6", include_str!("../../data/matrices/IV.A.6.json")),
    ("IV.A.7", include_str!("../../data/matrices/IV.A.7.json")),
    ("IV.B.3", include_str!("../../data/matrices/IV.B.3.json")),
    ("IV.B.4", include_str!("../../data/matrices/IV.B.4.json")),
    ("V.A.1", include_str!("../../data/matrices/V.A.1.json")),
    (
        "V.A.1.corrected",
        include_str!("../../data/matrices/V.A.1.corrected.json"),
    ),
    ("V.A.2", include_str!("../../data/matrices/V.A.2.json")),
    ("BB5", include_str!("../../data/matrices/BB5.json")),
    ("BB7", include_str!("../../data/matrices/BB7.json")),
    ("BB8", include_str!("../../data/matrices/BB8.json")),
    ("BB9a", include_str!("../../data/matrices/BB9a.json")),
    ("BB9b", include_str!("../../data/matrices/BB9b.json")),
    (
        "BB9b.corrected",
        include_str!("../../data/matrices/BB9b.corrected.json"),
    ),
];

pub(super) static PLAN_DATA: &[(&str, &str)] = &[
    ("III.A.3", include_str!("../../data/plans/III.A.3.json")),
    ("III.B.3", include_str!("../../data/plans/III.B.3.json")),
    ("III.B.6", include_str!("../../data/plans/III.B.6.json")),
    ("III.B.8", include_str!("../../data/plans/III.B.8.json")),
    ("III.B.11", include_str!("../../data/plans/III.B.11.json")),
    ("III.B.12", include_str!("../../data/plans/III.B.12.json")),
    ("IV.B.1", include_str!("../../data/plans/IV.B.1.json")),
    ("IV.B.2", include_str!("../../data/plans/IV.B.2.json")),
    ("IV.B.3", include_str!("../../data/plans/IV.B.3.json")),
    ("IV.B.4", include_str!("../../data/plans/IV.B.4.json")),
    ("IV.B.5", include_str!("../../data/plans/IV.B.5.json")),
    (
        "IV.B.5.corrected",
        include_str!("../../data/plans/IV.B.5.corrected.json"),
    ),
    ("IV.B.6", include_str!("../../data/plans/IV.B.6.json")),
    ("IV.B.7", include_str!("../../data/plans/IV.B.7.json")),
    ("IV.C.3", include_str!("../../data/plans/IV.C.3.json")),
];

/// `(alias, target, note)`. Re-listings resolve to the original entries;
/// building-block names resolve to the entries that define them.
pub(super) static ALIASES: &[(&str, &str, &str)] = &[
    ("IX.1", "II", "re-listing of the 6-in-R^3 set"),
    ("IX.2", "III.B.4", "re-listing of the 10-in-R^5 set"),
    ("IX.3a", "III.B.5", "re-listing of the 12-in-R^6 set"),
    (
        "IX.3b",
        "III.B.11",
        "re-listing of the 28-line chart; its heading misprints the \
         dimension as R^14 and the index line misstates the angle",
    ),
    (
        "IX.4",
        "IV.B.1",
        "re-listing of the 28-in-R^14 chart; this printing drops one mark \
         from its fourth item, the original chart is authoritative",
    ),
    ("BB1", "III.A.1", "building block: 4 sign rows over √3"),
    ("BB2", "IV.A.1", "building block: √(2/5) column plus three √(1/5) columns"),
    (
        "BB3",
        "IV.A.5",
        "building block: the corrected variant is the printing that composes in IV.B.1",
    ),
    ("BB4", "IV.A.3", "building block: circulant −1-diagonal sign matrix over √5"),
    ("BB6", "IV.A.7", "building block: 8 rows over √(1/10) with a ±√(3/10) column"),
];
