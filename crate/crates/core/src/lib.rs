//! Combinatorics of orthogonal tableaux for the odd orthogonal Lie
//! algebras: admissible and spin columns with their doubling, straight
//! and skew tableaux, the orthogonal jeu de taquin slide in both its
//! doubled and direct forms, the push map onto quasistandard tableaux
//! with its inverse, and exhaustive enumeration checked against the Weyl
//! dimension formula.

pub mod alphabet;
pub mod columns;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod jdt;
pub mod push;
pub mod shape;
pub mod skew;
pub mod subsets;
pub mod tableau;

pub use alphabet::{Entry, Weight};
pub use columns::{
    complete_column, from_coadmissible, lecouvey_convert, lecouvey_from, lecouvey_split,
    lecouvey_to, AdmissibleColumn, SpinColumn, TwoLetterColumn,
};
pub use enumeration::{
    columns_of_height, enumerate_quasistandard, enumerate_tableaux, spin_columns, verify_shape,
    weyl_dim, VerifyReport,
};
pub use error::{Error, Result};
pub use format::{
    format_document, format_skew, format_tableau, parse_document, parse_tableau, pretty_grid,
    TableauDoc,
};
pub use jdt::{
    ojdt_direct, ojdt_direct_step, ojdt_inverse_slide, ojdt_slide, ojdt_slide_horizontal,
    SlideTrace,
};
pub use push::{push, unpush, PassTrace, PushTrace, RemovalTrace};
pub use shape::{ColumnSlot, Shape};
pub use skew::{Cell, SkewColumn, SkewTableau};
pub use subsets::{is_left_side, left_gamma, right_delta, LetterSet};
pub use tableau::{Column, Tableau, TwoLetterTableau};
