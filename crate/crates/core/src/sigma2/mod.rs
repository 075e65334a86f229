//! Ramification data of the double cover of the quadric cone and the associated maps.

mod basepoint;
mod closed;
mod maps;
mod modlin;
mod oracle;
mod square;

pub use basepoint::{basepoint_locus, basepoint_residual, basepoint_residual_at, basepoint_section, moved_psi6, su_closed_form, vanishing_order, BasepointSection};
pub use closed::{binary_form, compose_form, free_terms, ram_closed_form, RamData};
pub use maps::{cone_map, sigma2_chart, trigonal_residual, ConePoint, Sigma2Point};
pub use oracle::{ram_oracle, ram_oracle_seeded, OracleOutput};
pub use square::exact_sqrt;

pub(crate) use closed::sign_rule;
