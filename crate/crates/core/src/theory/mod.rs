//! Closed-form eventual graphs of `C^m(D)`: graph operations, clique-block
//! templates and the classifier.

mod classify;
mod matching;
mod ops;
mod template;
mod verdict;

pub use classify::{classify, classify_with_budget};
pub use matching::{match_template, MatchProblem};
pub use ops::{complete_on, empty_on, graph_join, graph_union, SubGraph};
pub use template::{instantiate_template, GraphTemplate, Shape};
pub use verdict::{CaseTag, Kind, Verdict};
