//! Exact monomial-ideal calculus: canonical ideals, decompositions, symbolic
//! powers, containment certificates and resurgence bounds.

pub mod decomposition;
pub mod error;
pub mod families;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod rational;
pub mod resurgence;
pub mod symbolic;
pub mod verify;

pub use decomposition::{
    associated_primes, irreducible_decomposition, maximal_associated_primes, primary_decomposition,
    IrreducibleComponent, PrimeSupport,
};
pub use error::{Error, Result};
pub use families::{
    family_f, family_f_named, fd_membership_oracle, fd_symbolic_closed_form, iterated_sum,
    pm_ideal, star_ideal, FdMembershipSystem,
};
pub use ideal::MonomialIdeal;
pub use io::{parse_ideal, parse_monomial, parse_session, Emit, Session};
pub use monomial::{Monomial, RingContext};
pub use rational::{format_rational, parse_rational, Rational};
pub use resurgence::{
    check_containment, evaluate_max_sup, iterated_sum_bound, product_witness, res_set_11,
    rho_a_star_configuration, rho_a_sum_reference, scan, sharp_sum_bound, BoundReport, BoundRule,
    ContainmentCertificate, ScanOptions, ScanReport, Verdict, WitnessPart,
};
pub use symbolic::{
    detect_blocks, symbolic_power, symbolic_power_blockwise, BlockPartition, SymbolicCache,
};
pub use verify::{verify_paper, VerifyItem, VerifyOptions, VerifyReport};
