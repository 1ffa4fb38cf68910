//! The degree engine and theorem-checking harness: exact commutativity
//! degree, breadth, the degree bounds, the subalgebra/quotient inequalities,
//! and isoclinism verification and search.

pub mod bounds;
pub mod degree;
pub mod isoclinism;
pub mod relations;

pub use bounds::{check_bounds, five_eighths, lower_bound, upper_bound_any, upper_bound_centerless, BoundCheck, BoundsReport};
pub use degree::{breadth, comm_degree, DegreeMethod, DegreeReport};
pub use isoclinism::{search_isoclinism, verify_isoclinism, IsoclinismWitness};
pub use relations::{
    check_quotient_monotonicity, check_quotient_product, check_subalgebra_sandwich,
    QuotientMonotonicityReport, QuotientProductReport, SandwichReport,
};
