use crate::error::{Error, Result};

/// Maximum allowed deviation of an input probability vector from total mass 1.
/// Inputs inside the tolerance are rescaled so stored mass is exact to f64
/// rounding; inputs outside it are rejected.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

fn validate_and_normalize(dims: &[usize], mut pmf: Vec<f64>) -> Result<Vec<f64>> {
    let expected: usize = dims.iter().product();
    if pmf.len() != expected {
        return Err(Error::ShapeMismatch {
            dims: dims.to_vec(),
            expected,
            got: pmf.len(),
        });
    }
    if pmf.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (index, &value) in pmf.iter().enumerate() {
        if value < 0.0 || !value.is_finite() {
            return Err(Error::NegativeProbability { index, value });
        }
    }
    let sum: f64 = pmf.iter().sum();
    if sum == 0.0 {
        return Err(Error::EmptyInput);
    }
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NonNormalized {
            sum,
            tolerance: NORMALIZATION_TOLERANCE,
        });
    }
    for value in &mut pmf {
        *value /= sum;
    }
    Ok(pmf)
}

fn counts_to_pmf(counts: &[u64]) -> Result<Vec<f64>> {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(counts.iter().map(|&c| c as f64 / total as f64).collect())
}

/// Joint distribution of an outcome variable X and one predictor Y,
/// stored row-major (`x * ny + y`).
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution2 {
    nx: usize,
    ny: usize,
    pmf: Vec<f64>,
}

impl JointDistribution2 {
    pub fn from_probabilities(nx: usize, ny: usize, pmf: Vec<f64>) -> Result<Self> {
        let pmf = validate_and_normalize(&[nx, ny], pmf)?;
        Ok(Self { nx, ny, pmf })
    }

    pub fn from_counts(nx: usize, ny: usize, counts: &[u64]) -> Result<Self> {
        Self::from_probabilities(nx, ny, counts_to_pmf(counts)?)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn p(&self, x: usize, y: usize) -> f64 {
        self.pmf[x * self.ny + y]
    }

    pub fn marginal_x(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.nx];
        for x in 0..self.nx {
            for y in 0..self.ny {
                out[x] += self.p(x, y);
            }
        }
        out
    }

    pub fn marginal_y(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.ny];
        for x in 0..self.nx {
            for y in 0..self.ny {
                out[y] += self.p(x, y);
            }
        }
        out
    }

    pub(crate) fn pmf(&self) -> &[f64] {
        &self.pmf
    }
}

/// Joint distribution of an outcome variable X and two predictors Y1, Y2,
/// stored row-major (`(x * ny1 + y1) * ny2 + y2`). Construction validates
/// shape, non-negativity, and total mass, then rescales so the stored cells
/// sum to 1 up to f64 rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution3 {
    nx: usize,
    ny1: usize,
    ny2: usize,
    pmf: Vec<f64>,
}

impl JointDistribution3 {
    pub fn from_probabilities(nx: usize, ny1: usize, ny2: usize, pmf: Vec<f64>) -> Result<Self> {
        let pmf = validate_and_normalize(&[nx, ny1, ny2], pmf)?;
        Ok(Self { nx, ny1, ny2, pmf })
    }

    pub fn from_counts(nx: usize, ny1: usize, ny2: usize, counts: &[u64]) -> Result<Self> {
        Self::from_probabilities(nx, ny1, ny2, counts_to_pmf(counts)?)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny1(&self) -> usize {
        self.ny1
    }

    pub fn ny2(&self) -> usize {
        self.ny2
    }

    pub fn p(&self, x: usize, y1: usize, y2: usize) -> f64 {
        self.pmf[(x * self.ny1 + y1) * self.ny2 + y2]
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    pub fn marginal_x(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.nx];
        for (i, &v) in self.pmf.iter().enumerate() {
            out[i / (self.ny1 * self.ny2)] += v;
        }
        out
    }

    /// Marginal joint of (X, Y1).
    pub fn xy1(&self) -> JointDistribution2 {
        let mut pmf = vec![0.0; self.nx * self.ny1];
        for x in 0..self.nx {
            for y1 in 0..self.ny1 {
                for y2 in 0..self.ny2 {
                    pmf[x * self.ny1 + y1] += self.p(x, y1, y2);
                }
            }
        }
        JointDistribution2 {
            nx: self.nx,
            ny: self.ny1,
            pmf,
        }
    }

    /// Marginal joint of (X, Y2).
    pub fn xy2(&self) -> JointDistribution2 {
        let mut pmf = vec![0.0; self.nx * self.ny2];
        for x in 0..self.nx {
            for y1 in 0..self.ny1 {
                for y2 in 0..self.ny2 {
                    pmf[x * self.ny2 + y2] += self.p(x, y1, y2);
                }
            }
        }
        JointDistribution2 {
            nx: self.nx,
            ny: self.ny2,
            pmf,
        }
    }

    /// Joint of X against the paired predictor (Y1, Y2) flattened to one axis.
    pub fn x_vs_pair(&self) -> JointDistribution2 {
        JointDistribution2 {
            nx: self.nx,
            ny: self.ny1 * self.ny2,
            pmf: self.pmf.clone(),
        }
    }

    /// Parses the plain-text cell exchange format: one line per nonzero cell,
    /// `x y1 y2 probability`, whitespace separated, 0-based integer states.
    /// Alphabet sizes are the largest mentioned state plus one; omitted cells
    /// are zero. Blank lines and `#` comment lines are skipped.
    pub fn read_cells(text: &str) -> Result<Self> {
        let mut cells: Vec<(usize, usize, usize, f64)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::MalformedCellLine {
                    line,
                    reason: format!("expected 4 fields, got {}", fields.len()),
                });
            }
            let parse_state = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::MalformedCellLine {
                    line,
                    reason: format!("bad state index {s:?}"),
                })
            };
            let x = parse_state(fields[0])?;
            let y1 = parse_state(fields[1])?;
            let y2 = parse_state(fields[2])?;
            let p: f64 = fields[3].parse().map_err(|_| Error::MalformedCellLine {
                line,
                reason: format!("bad probability {:?}", fields[3]),
            })?;
            cells.push((x, y1, y2, p));
        }
        if cells.is_empty() {
            return Err(Error::EmptyInput);
        }
        let nx = cells.iter().map(|c| c.0).max().unwrap() + 1;
        let ny1 = cells.iter().map(|c| c.1).max().unwrap() + 1;
        let ny2 = cells.iter().map(|c| c.2).max().unwrap() + 1;
        let mut pmf = vec![0.0; nx * ny1 * ny2];
        for (x, y1, y2, p) in cells {
            pmf[(x * ny1 + y1) * ny2 + y2] += p;
        }
        Self::from_probabilities(nx, ny1, ny2, pmf)
    }

    /// Renders the distribution in the cell exchange format accepted by
    /// [`read_cells`](Self::read_cells). Probabilities use shortest
    /// round-trip decimal form, so read-back reproduces the cells exactly.
    pub fn write_cells(&self) -> String {
        let mut out = String::new();
        for x in 0..self.nx {
            for y1 in 0..self.ny1 {
                for y2 in 0..self.ny2 {
                    let p = self.p(x, y1, y2);
                    if p > 0.0 {
                        out.push_str(&format!("{x} {y1} {y2} {p}\n"));
                    }
                }
            }
        }
        out
    }
}
