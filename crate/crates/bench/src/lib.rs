//! Benchmark inputs shared by the criterion targets in `benches/`.

use hyparr_core::fixtures::random_family;
use hyparr_core::Arrangement;

/// The eight-hyperplane instances of a fixed random family.
pub fn medium_instances() -> Vec<Arrangement> {
    random_family(7, 40, 8, 4).into_iter().filter(|a| a.n() >= 7).take(4).collect()
}
