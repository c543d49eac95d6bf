use crate::RangeError;
use profiles::{cheb_fit, ChebProfile, SampledProfile};
use transforms::fit_degree;

/// Inverts m applications of D = (1/x) d/dx on sampled data: each inverse is
/// u -> integral from the left support edge of s * u(s) ds, so the result
/// vanishes identically to the left. Returns the antiderivative profile and
/// the right-end values [phi(b), phi'(b), ..., phi^(m-1)(b)]: for data in the
/// operator's range on compactly supported functions these are near zero,
/// and their size is the compact-support defect (reported, never asserted,
/// since measured data never vanishes exactly).
pub fn construct_phi(
    h: &SampledProfile,
    m: u32,
) -> Result<(ChebProfile, Vec<f64>), RangeError> {
    let grid = h.grid();
    let (a, b) = (grid[0], grid[grid.len() - 1]);
    let mut profile = cheb_fit(h, (a, b), fit_degree(h.len()))?;
    for _ in 0..m {
        profile = profile.multiply_by_x().antiderivative();
    }
    let defect = if m == 0 {
        Vec::new()
    } else {
        profile.right_end_values(m as usize - 1)
    };
    Ok((profile, defect))
}
