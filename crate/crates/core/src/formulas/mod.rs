//! Closed-form and constructive invariants, evaluated from `(p, r, n)`
//! without building a graph.

mod center;
mod degree;
mod diameter;

pub use center::{
    center_o, radius_o, vandermonde_coefficients, vee_step, CenterResult, CountMethod,
};
pub use degree::{max_degree, min_degree, min_degree_i, min_degree_o, min_degree_witness};
pub use diameter::{
    best_barrier, diameter_i, diameter_o, diameter_o_unshifted, BarrierProfile, DiameterCase,
    DiameterResult,
};

/// `r * ceil(n / (p + r))`, the radius value suggested for family I.
pub fn claimed_radius_i(p: u32, r: u32, n: u32) -> u32 {
    r * n.div_ceil(p + r)
}

/// Eccentricity of `0^n` in family I: the largest weight of a valid word,
/// `r * floor(n / (p + r)) + min(n mod (p + r), r)`.
pub fn zero_eccentricity_i(p: u32, r: u32, n: u32) -> u32 {
    r * (n / (p + r)) + (n % (p + r)).min(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_radius_helpers() {
        assert_eq!(claimed_radius_i(2, 2, 8), 4);
        assert_eq!(zero_eccentricity_i(2, 2, 8), 4);
        assert_eq!(zero_eccentricity_i(2, 2, 4), 2);
        assert_eq!(zero_eccentricity_i(2, 3, 5), 3);
        assert_eq!(claimed_radius_i(2, 3, 6), 6);
        assert_eq!(zero_eccentricity_i(2, 3, 6), 4);
    }
}
