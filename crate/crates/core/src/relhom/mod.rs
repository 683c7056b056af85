//! Relative homological algebra with respect to the exact structure of
//! sequences that stay exact under `Hom(T, -)` for every `T` of projective
//! dimension at most `n`.

mod class;
mod dims;
mod exactness;
mod resolution;
mod theorems;

pub use class::{build_test_class, inventory_pds, Level, TestClass};
pub use dims::{fd_n_gldim, FD_CAVEAT};
pub use exactness::{
    is_n_exact, is_n_projective, is_n_projective_indexed, is_precover, n_exact_subspace,
    n_exact_subspace_indexed, n_precover, ExactSubspace, Precover,
};
pub use resolution::{
    essential_part, n_ext, n_ext_from, n_id, n_pd, n_pd_of, n_resolution, n_resolution_to_depth,
    RelResolution, RelStatus,
};
pub use theorems::{
    classify, verify_degeneracy, verify_euler, verify_ext_oracle, verify_fpd_theorem, verify_pd_bounds,
    CheckReport, FpdTheoremReport,
};
