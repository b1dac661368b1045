//! Exact square matrices over any scalar domain.

mod charpoly;
mod matrix;
mod order;

pub use charpoly::{berkowitz, char_poly, eval_at_matrix, faddeev_leverrier, min_poly};
pub use matrix::{kernel_of_rows, parse_dump, rank_of_rows, rref_rows, DivExact, ExactMatrix};
pub use order::{element_order, order_dividing, prime_factors, LinalgError, OrderOutcome, DEFAULT_ORDER_CUTOFF};
