use crate::dist::{JointDistribution2, JointDistribution3, NORMALIZATION_TOLERANCE};
use crate::error::{Error, Result};

/// Shannon entropy in bits of a validated probability vector.
pub fn entropy(pmf: &[f64]) -> Result<f64> {
    for (index, &value) in pmf.iter().enumerate() {
        if value < 0.0 || !value.is_finite() {
            return Err(Error::NegativeProbability { index, value });
        }
    }
    let sum: f64 = pmf.iter().sum();
    if pmf.is_empty() || sum == 0.0 {
        return Err(Error::EmptyInput);
    }
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NonNormalized {
            sum,
            tolerance: NORMALIZATION_TOLERANCE,
        });
    }
    Ok(entropy_unchecked(pmf.iter().copied()))
}

/// -sum p log2 p over the given masses, with 0 log 0 = 0.
pub(crate) fn entropy_unchecked(masses: impl Iterator<Item = f64>) -> f64 {
    masses.filter(|&p| p > 0.0).map(|p| -p * p.log2()).sum()
}

impl JointDistribution2 {
    /// Mutual information I(X;Y) in bits, via H(X) + H(Y) - H(X,Y).
    pub fn mutual_information(&self) -> f64 {
        let hx = entropy_unchecked(self.marginal_x().into_iter());
        let hy = entropy_unchecked(self.marginal_y().into_iter());
        let hxy = entropy_unchecked(self.pmf().iter().copied());
        hx + hy - hxy
    }

    /// Information in bits that the single outcome X = x carries about Y:
    /// the relative entropy of p(y|x) against p(y).
    pub fn specific_information(&self, x: usize) -> Result<f64> {
        if x >= self.nx() {
            return Err(Error::StateOutOfRange { x, nx: self.nx() });
        }
        let px: f64 = (0..self.ny()).map(|y| self.p(x, y)).sum();
        if px <= 0.0 {
            return Err(Error::ZeroProbabilityState { x });
        }
        let py = self.marginal_y();
        let mut acc = 0.0;
        for y in 0..self.ny() {
            let joint = self.p(x, y);
            if joint > 0.0 {
                if py[y] <= 0.0 {
                    return Err(Error::InconsistentJoint);
                }
                let cond = joint / px;
                acc += cond * (cond / py[y]).log2();
            }
        }
        Ok(acc)
    }
}

impl JointDistribution3 {
    /// Total information I(X; Y1,Y2) in bits carried by the predictor pair.
    pub fn total_information(&self) -> f64 {
        self.x_vs_pair().mutual_information()
    }

    /// Information the single outcome X = x carries about the pair (Y1,Y2).
    pub fn specific_total_information(&self, x: usize) -> Result<f64> {
        self.x_vs_pair().specific_information(x)
    }

    /// Expected over outcomes of the lesser specific information of the two
    /// predictors: the redundant (shared) information about X.
    pub fn redundancy(&self) -> f64 {
        let px = self.marginal_x();
        let xy1 = self.xy1();
        let xy2 = self.xy2();
        let mut acc = 0.0;
        for (x, &w) in px.iter().enumerate() {
            if w > 0.0 {
                let s1 = xy1.specific_information(x).expect("positive-mass state");
                let s2 = xy2.specific_information(x).expect("positive-mass state");
                acc += w * s1.min(s2);
            }
        }
        acc
    }

    /// Total information as a fraction of the outcome entropy H(X).
    pub fn normalized_total(&self) -> Result<f64> {
        let hx = entropy_unchecked(self.marginal_x().into_iter());
        if hx <= 0.0 {
            return Err(Error::ZeroEntropyOutput);
        }
        Ok(self.total_information() / hx)
    }
}
