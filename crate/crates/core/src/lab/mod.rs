//! Harnesses that check characterizations of polymatroidal ideals on
//! concrete ideals, scan ideal spaces, and run the regression suite.
//!
//! ```
//! use polymat::lab::{scan_conjecture, IdealSpace};
//! use polymat::{Characteristic, Limits};
//!
//! let space = IdealSpace::exhaustive(2, 3, 4);
//! let report = scan_conjecture(&space, Characteristic::ZERO, &Limits::default()).unwrap();
//! assert!(report.summary.counterexamples.is_empty());
//! ```

mod properties;
mod records;
mod report;
mod space;
mod suite;

pub use properties::{corpus_properties, is_experimental, PropertyOutcome};
pub use records::{
    conjecture_record, distinct_colons, distinct_localizations, verify_equivalences,
    verify_squarefree, ConjectureRecord, Disagreement, EquivalenceRecord, EquivalenceWitnesses,
    FailingLocalization, SquarefreeRecord, SquarefreeWitnesses,
};
pub use report::{
    describe, evaluate, reverify, run_harness, run_on_ideals, scan_conjecture, Harness, ItemStatus,
    LabReport, ReportConfig, ReportItem, Stats, Summary, REPORT_VERSION,
};
pub use space::{IdealSpace, SpaceMode};
pub use suite::{ideals as suite_ideals, regression_suite};
