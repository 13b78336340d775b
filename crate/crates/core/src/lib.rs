//! Pipeline library for studying whether high-quality wiki articles keep
//! their promoted status over time.
//!
//! The crate is organized along the pipeline stages:
//!
//! - [`ingest`]: stream MediaWiki XML (or JSON-lines) history dumps into
//!   per-article revision sequences and load quality-status title lists.
//! - [`labels`]: reconstruct each article's promotion/demotion life cycle
//!   from talk-page milestones and article templates, and derive the
//!   unsustainability label per use case.
//! - [`features`]: the six explanatory feature families (edit history,
//!   team composition, topics, edit network, discussions, editor
//!   experience) computed over the pre-promotion window.
//! - [`model`]: deterministic gradient-boosted trees with logistic loss
//!   and exact per-feature Shapley attribution.
//! - [`eval`]: classification metrics, bootstrap / cross-validation
//!   protocols, heatmap binning, corpus-growth and false-positive
//!   analyses.
//! - [`matrix`]: the named feature matrix tying the families together.
//! - [`synth`]: a deterministic synthetic corpus generator used for the
//!   bundled end-to-end fixture and the label-rule test suite.

pub mod error;
pub mod eval;
pub mod features;
pub mod hash;
pub mod ingest;
pub mod labels;
pub mod matrix;
pub mod model;
pub mod synth;
pub mod timeparse;
pub mod wikitext;

pub use error::{Error, Result};
pub use ingest::{Editor, PageHistory, RevisionRecord, StatusLists, UseCase};
pub use labels::{ArticleTimeline, EventKind, EventSource, QualityEvent, QualityLevel};
pub use matrix::FeatureMatrix;
pub use model::GbtModel;
