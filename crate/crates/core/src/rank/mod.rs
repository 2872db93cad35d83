//! Rank analysis in the maximal nilpotent subalgebra `m` of `g2(2)` and the
//! resulting embedding obstruction for metric nilpotent Lie algebras.

pub mod certificate;
pub mod classify;
pub mod family;
pub mod obstruction;
pub mod refute;
pub mod search;

pub use certificate::{constant_rank_two_certificate, FormulaCheck, ImageFormula, RankTwoCertificate};
pub use classify::{classify_rank2, family_a, family_b, verify_rank2_classification, RankClass, SweepReport};
pub use family::{family_a_rank_locus, family_b_pair_identity, FamilyALocus, PairReport};
pub use obstruction::{
    catalog_obstruction, embedding_obstruction, two_step_lemma_check, Conclusion, ObstructionReport, TestSubspace,
    TwoStepReport,
};
pub use refute::{refute_rank2_3d_subspace, RefutationCase, RefutationWitness};
pub use search::{
    family_b_pair_sweep, random_search_rank2_subalgebra, refutation_sweep, PairSweepReport, RefutationSweep, SearchReport,
};
