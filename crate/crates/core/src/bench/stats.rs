use statrs::distribution::{ContinuousCDF, StudentsT};

/// Running mean and variance (Welford) of timing samples.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RunningStats {
    count: u64,
    mean: f64,
    m2: f64,
}

impl RunningStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance; zero below two samples.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            (self.m2 / (self.count - 1) as f64).max(0.0)
        }
    }

    /// Half-width of the two-sided Student-t confidence interval for the mean.
    pub fn half_width(&self, confidence_level: f64) -> f64 {
        if self.count < 2 {
            return f64::INFINITY;
        }
        let variance = self.variance();
        if variance == 0.0 {
            return 0.0;
        }
        let t = t_quantile(confidence_level, self.count - 1);
        t * (variance / self.count as f64).sqrt()
    }
}

/// Upper `(1 + confidence)/2` quantile of Student's t with `df` degrees of freedom.
pub fn t_quantile(confidence_level: f64, df: u64) -> f64 {
    let dist = StudentsT::new(0.0, 1.0, df as f64).expect("positive degrees of freedom");
    dist.inverse_cdf(0.5 + confidence_level / 2.0)
}
