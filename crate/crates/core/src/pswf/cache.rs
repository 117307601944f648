//! JSON cache files for [`PswfBasis`].

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::basis::{PswfBasis, Spectrum};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

/// On-disk layout. `mu_re`, `mu_im`, `lambda` and `ln_lambda` are `null` for `c = 0`.
/// `ln_abs_mu` and `ln_lambda` keep the magnitudes that underflow in `mu` and `lambda`.
#[derive(Debug, Serialize, Deserialize)]
struct CacheDocument {
    format_version: u32,
    c: f64,
    n_max: usize,
    #[serde(rename = "K")]
    truncation: usize,
    chi: Vec<f64>,
    beta: Vec<Vec<f64>>,
    mu_re: Option<Vec<f64>>,
    mu_im: Option<Vec<f64>>,
    ln_abs_mu: Option<Vec<f64>>,
    lambda: Option<Vec<f64>>,
    ln_lambda: Option<Vec<f64>>,
}

impl PswfBasis {
    pub fn to_json(&self) -> Result<String> {
        let spec = self.spectrum.as_ref();
        let doc = CacheDocument {
            format_version: FORMAT_VERSION,
            c: self.c,
            n_max: self.n_max,
            truncation: self.truncation,
            chi: self.chi.clone(),
            beta: self.beta.clone(),
            mu_re: spec.map(|s| s.mu.iter().map(|m| m.re).collect()),
            mu_im: spec.map(|s| s.mu.iter().map(|m| m.im).collect()),
            ln_abs_mu: spec.map(|s| s.ln_abs_mu.clone()),
            lambda: spec.map(|s| s.lambda.clone()),
            ln_lambda: spec.map(|s| s.ln_lambda.clone()),
        };
        Ok(serde_json::to_string(&doc)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CacheDocument = serde_json::from_str(text)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::InvalidInput(format!(
                "unsupported cache format_version {}",
                doc.format_version
            )));
        }
        let rows = doc.n_max + 1;
        if doc.chi.len() != rows
            || doc.beta.len() != rows
            || doc.beta.iter().any(|r| r.len() != doc.truncation + 1)
        {
            return Err(Error::InvalidInput("cache arrays have inconsistent lengths".into()));
        }
        let spectrum = match (doc.mu_re, doc.mu_im, doc.ln_abs_mu, doc.lambda, doc.ln_lambda) {
            (Some(re), Some(im), Some(ln_abs_mu), Some(lambda), Some(ln_lambda)) => {
                if [re.len(), im.len(), ln_abs_mu.len(), lambda.len(), ln_lambda.len()]
                    .iter()
                    .any(|&l| l != rows)
                {
                    return Err(Error::InvalidInput("cache spectrum has inconsistent lengths".into()));
                }
                let mu = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a, b)).collect();
                Some(Spectrum {
                    mu,
                    ln_abs_mu,
                    lambda,
                    ln_lambda,
                })
            }
            (None, None, None, None, None) => None,
            _ => return Err(Error::InvalidInput("cache spectrum is partially present".into())),
        };
        if spectrum.is_none() != (doc.c == 0.0) {
            return Err(Error::InvalidInput("spectrum must be present exactly when c > 0".into()));
        }
        Ok(PswfBasis {
            c: doc.c,
            n_max: doc.n_max,
            truncation: doc.truncation,
            chi: doc.chi,
            beta: doc.beta,
            spectrum,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}
