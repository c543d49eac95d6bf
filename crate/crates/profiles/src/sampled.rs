use crate::ProfileError;
use std::path::Path;

/// Function values on a strictly increasing grid. The exchange format between
/// the forward transform, file io, and the fitting code.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledProfile {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl SampledProfile {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self, ProfileError> {
        if grid.len() != values.len() {
            return Err(ProfileError::InvalidData(format!(
                "grid has {} points but values has {}",
                grid.len(),
                values.len()
            )));
        }
        if grid.is_empty() {
            return Err(ProfileError::InvalidData("empty sample set".into()));
        }
        if grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(ProfileError::InvalidData(
                "grid must be strictly increasing".into(),
            ));
        }
        if grid.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(ProfileError::InvalidData(
                "grid and values must be finite".into(),
            ));
        }
        Ok(SampledProfile { grid, values })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Pointwise transformation of the values, keeping the grid.
    pub fn map_values(&self, f: impl Fn(f64, f64) -> f64) -> SampledProfile {
        SampledProfile {
            grid: self.grid.clone(),
            values: self
                .grid
                .iter()
                .zip(&self.values)
                .map(|(t, v)| f(*t, *v))
                .collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self, ProfileError> {
        let mut reader = csv::Reader::from_path(path.as_ref())
            .map_err(|e| ProfileError::Io(e.to_string()))?;
        let mut grid = Vec::new();
        let mut values = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| ProfileError::Io(e.to_string()))?;
            if record.len() != 2 {
                return Err(ProfileError::InvalidData(format!(
                    "expected 2 columns (t, value), found {}",
                    record.len()
                )));
            }
            let t: f64 = record[0]
                .trim()
                .parse()
                .map_err(|_| ProfileError::InvalidData(format!("bad t entry {:?}", &record[0])))?;
            let v: f64 = record[1].trim().parse().map_err(|_| {
                ProfileError::InvalidData(format!("bad value entry {:?}", &record[1]))
            })?;
            grid.push(t);
            values.push(v);
        }
        SampledProfile::new(grid, values)
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<(), ProfileError> {
        let mut writer =
            csv::Writer::from_path(path.as_ref()).map_err(|e| ProfileError::Io(e.to_string()))?;
        writer
            .write_record(["t", "value"])
            .map_err(|e| ProfileError::Io(e.to_string()))?;
        for (t, v) in self.grid.iter().zip(&self.values) {
            writer
                .write_record([format!("{t:.17e}"), format!("{v:.17e}")])
                .map_err(|e| ProfileError::Io(e.to_string()))?;
        }
        writer.flush().map_err(|e| ProfileError::Io(e.to_string()))
    }
}
