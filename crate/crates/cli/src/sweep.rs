//! Sweep specifications for grid commands.
//!
//! Grammar: `MIN..MAX/COUNT` for an inclusive linear grid, with an optional
//! `/log` suffix for log10-spaced points, or a bare number for a single
//! value. Examples: `0.1..20/200`, `1e-4..1/13/log`, `2.5`.

use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn single(value: f64) -> Self {
        SweepSpec {
            min: value,
            max: value,
            count: 1,
            scale: Scale::Linear,
        }
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Self {
        SweepSpec {
            min,
            max,
            count,
            scale: Scale::Linear,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let n = (self.count - 1) as f64;
        match self.scale {
            Scale::Linear => (0..self.count)
                .map(|i| self.min + (self.max - self.min) * i as f64 / n)
                .collect(),
            Scale::Log => {
                let (lo, hi) = (self.min.log10(), self.max.log10());
                (0..self.count)
                    .map(|i| 10f64.powf(lo + (hi - lo) * i as f64 / n))
                    .collect()
            }
        }
    }
}

impl FromStr for SweepSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let Some((range, rest)) = s.split_once('/') else {
            // bare number: a single-value sweep
            let v: f64 = s
                .parse()
                .map_err(|_| format!("expected a number or MIN..MAX/COUNT[/log], got `{s}`"))?;
            if !v.is_finite() {
                return Err(format!("sweep value must be finite, got `{s}`"));
            }
            return Ok(SweepSpec::single(v));
        };
        let (min_s, max_s) = range
            .split_once("..")
            .ok_or_else(|| format!("expected MIN..MAX before `/` in `{s}`"))?;
        let min: f64 = min_s
            .parse()
            .map_err(|_| format!("bad sweep minimum `{min_s}`"))?;
        let max: f64 = max_s
            .parse()
            .map_err(|_| format!("bad sweep maximum `{max_s}`"))?;
        let (count_s, scale) = match rest.split_once('/') {
            Some((c, "log")) => (c, Scale::Log),
            Some((_, other)) => return Err(format!("unknown sweep suffix `/{other}`")),
            None => (rest, Scale::Linear),
        };
        let count: usize = count_s
            .parse()
            .map_err(|_| format!("bad sweep count `{count_s}`"))?;
        if !min.is_finite() || !max.is_finite() {
            return Err("sweep endpoints must be finite".into());
        }
        if count < 2 {
            return Err("sweep count must be at least 2 (or give a single number)".into());
        }
        if min >= max {
            return Err(format!("sweep needs min < max, got {min}..{max}"));
        }
        if scale == Scale::Log && min <= 0.0 {
            return Err("log sweeps need min > 0".into());
        }
        Ok(SweepSpec {
            min,
            max,
            count,
            scale,
        })
    }
}
