//! Sliding algorithms: the plain jeu de taquin on ordinary fillings, the
//! elementary slide on doubled (two-letter) tableaux, the orthogonal slide
//! obtained by doubling, and its direct one-row form.

pub mod direct;
pub mod engine;
pub mod sl;
pub mod slide;

pub use direct::{ojdt_direct, ojdt_direct_step};
pub use engine::{slide_star, TlColumn, TlMove, TlSkew, TlStep};
pub use sl::{sl_jdt, SlColumn, SlTableau};
pub use slide::{
    double_skew, ojdt_inverse_slide, ojdt_slide, ojdt_slide_horizontal, undouble_skew, PairKind,
    SlideTrace,
};
