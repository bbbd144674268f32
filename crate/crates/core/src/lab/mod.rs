pub mod check;
pub mod family;
pub mod forms;
pub mod lemma;
pub mod lines;
pub mod search;
pub mod table;

pub use check::{check_family, check_parallelism, parallelism_violations, CheckMode, FamilyReport, Violation, ViolationReason};
pub use family::{s_family, LineFamily};
pub use forms::{recover_diagonal_form, recover_plane_form, DiagonalForm, PlaneForm};
pub use lemma::{verify_parallelism_lemma, LemmaConclusion, LemmaReport};
pub use lines::{enumerate_lines, lines_in_direction, Line};
pub use search::{exhaustive_bijection_search, DEFAULT_SEARCH_BUDGET};
pub use table::{FiniteMapTable, Grid, DEFAULT_POINT_BUDGET};
