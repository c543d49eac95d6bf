use crate::TransformError;

/// Surface area of the unit d-sphere (the sphere in R^{d+1}), by the
/// two-step recursion |S^d| = |S^{d-2}| * 2 pi / (d - 1).
pub fn sphere_area(d: u32) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let (mut area, mut dim) = if d % 2 == 0 { (2.0, 0) } else { (two_pi, 1) };
    while dim < d {
        dim += 2;
        area *= two_pi / (dim - 1) as f64;
    }
    area
}

/// The two readings of the sphere-area symbol in dimension m: the area of the
/// unit sphere sitting inside R^m, or the area of the m-sphere itself. The
/// data-scaling constant differs between them, and the 3-D oracle experiment
/// decides which one reproduces the actual sphere mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaConvention {
    /// omega_m = |S^{m-1}|, the boundary area of the unit ball of R^m.
    SphereInRm,
    /// omega_m = |S^m|.
    SphereSm,
}

impl OmegaConvention {
    pub fn omega(self, m: u32) -> f64 {
        match self {
            OmegaConvention::SphereInRm => {
                assert!(m >= 1, "no unit sphere in R^0");
                sphere_area(m - 1)
            }
            OmegaConvention::SphereSm => sphere_area(m),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OmegaConvention::SphereInRm => "sphere-in-rm",
            OmegaConvention::SphereSm => "sphere-sm",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "sphere-in-rm" => Some(OmegaConvention::SphereInRm),
            "sphere-sm" => Some(OmegaConvention::SphereSm),
            _ => None,
        }
    }
}

/// Odd ambient dimension n = 2k + 3 and the derived indices used throughout.
#[derive(Debug, Clone, Copy)]
pub struct DimensionParams {
    n: u32,
    k: u32,
    convention: OmegaConvention,
}

impl DimensionParams {
    pub fn new(n: u32, convention: OmegaConvention) -> Result<Self, TransformError> {
        if n < 3 || n % 2 == 0 {
            return Err(TransformError::DimensionUnsupported {
                n,
                detail: "ambient dimension must be odd and at least 3".into(),
            });
        }
        Ok(DimensionParams {
            n,
            k: (n - 3) / 2,
            convention,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// k = (n - 3) / 2, the weight exponent of the reduced integrals.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// alpha = (n - 2) / 2 = k + 1/2.
    pub fn alpha(&self) -> f64 {
        (self.n - 2) as f64 / 2.0
    }

    pub fn convention(&self) -> OmegaConvention {
        self.convention
    }

    pub fn omega(&self, m: u32) -> f64 {
        self.convention.omega(m)
    }
}
