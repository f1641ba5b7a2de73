//! Containment certificates, grid scans for resurgence lower bounds, and the
//! closed-form bound arithmetic for sums of ideals.

mod bounds;
mod certificate;
mod scan;

pub use bounds::{
    evaluate_max_sup, iterated_sum_bound, res_set_11, rho_a_star_configuration,
    rho_a_sum_reference, sharp_sum_bound, sup_term, BoundReport, BoundRule, SupEvaluation,
};
pub use certificate::{
    check_containment, product_witness, ContainmentCertificate, Verdict, WitnessPart,
};
pub use scan::{scan, ScanCell, ScanOptions, ScanReport};
