use crate::TransformError;
use exact_core::{factorial, int, BigInt};

/// Number of linearly independent spherical harmonics of degree m on the unit
/// sphere of R^n: (2m + n - 2) (n + m - 3)! / (m! (n - 2)!), with d_0 = 1.
pub fn dimension_of_harmonics(m: u32, n: u32) -> Result<u64, TransformError> {
    if n < 2 {
        return Err(TransformError::IndexOutOfRange(format!(
            "harmonic dimension needs n >= 2, got {n}"
        )));
    }
    if m == 0 {
        return Ok(1);
    }
    let numer = int((2 * m + n - 2) as i64) * factorial(n + m - 3);
    let denom = factorial(m) * factorial(n - 2);
    let d: BigInt = numer / denom;
    d.try_into()
        .map_err(|_| TransformError::IndexOutOfRange(format!("d_({m},{n}) overflows u64")))
}

/// A single spherical-harmonic mode (degree m, index l within the degree-m
/// eigenspace). All transforms act mode by mode, so the profile attached to a
/// mode is ordinary 1-D data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarmonicMode {
    m: u32,
    l: u64,
    dmn: u64,
}

impl HarmonicMode {
    pub fn new(m: u32, l: u64, n: u32) -> Result<Self, TransformError> {
        let dmn = dimension_of_harmonics(m, n)?;
        if l >= dmn {
            return Err(TransformError::IndexOutOfRange(format!(
                "mode index l = {l} outside the degree-{m} eigenspace of dimension {dmn}"
            )));
        }
        Ok(HarmonicMode { m, l, dmn })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn eigenspace_dimension(&self) -> u64 {
        self.dmn
    }
}
