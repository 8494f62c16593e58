use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};

/// A specialization of the symmetric functions, given by its values on `h_k`.
#[derive(Debug, Clone, PartialEq)]
pub enum Specialization {
    /// `h[k−1]` is the value on `h_k`; indices past the end are unavailable.
    Explicit(Vec<f64>),
    /// `h_k ↦ ξ^{k/2} (z)_k / k!`.
    ZSeries { z: f64, xi: f64 },
}

impl Specialization {
    /// Value on `h_k`, with `h_0 = 1` and `h_k = 0` for `k < 0`.
    pub fn h(&self, k: i64) -> Result<f64> {
        if k < 0 {
            return Ok(0.0);
        }
        if k == 0 {
            return Ok(1.0);
        }
        let k = k as usize;
        match self {
            Specialization::Explicit(h) => h
                .get(k - 1)
                .copied()
                .ok_or(Error::InsufficientSpecialization { needed: k, available: h.len() }),
            Specialization::ZSeries { z, xi } => {
                let s = xi.sqrt();
                Ok((0..k).map(|i| s * (z + i as f64) / (i + 1) as f64).product())
            }
        }
    }
}

/// `φ(s_λ) = det[φ(h_{λ_i − i + j})]_{i,j ≤ ℓ(λ)}`.
pub fn schur_value(lambda: &Partition, phi: &Specialization) -> Result<f64> {
    let l = lambda.length();
    if l == 0 {
        return Ok(1.0);
    }
    let mut m = DMatrix::<f64>::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            m[(i, j)] = phi.h(lambda.part(i + 1) as i64 - i as i64 + j as i64)?;
        }
    }
    Ok(m.determinant())
}

/// Unnormalized Schur measure weight `φ(s_λ) ψ(s_λ)`.
pub fn schur_weight(lambda: &Partition, phi: &Specialization, psi: &Specialization) -> Result<f64> {
    Ok(schur_value(lambda, phi)? * schur_value(lambda, psi)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchurNormalization {
    pub max_size: usize,
    /// `Σ_{|λ| ≤ max_size} φ(s_λ) ψ(s_λ)`.
    pub truncated: f64,
    /// Mass of the outermost shell `|λ| = max_size`, a proxy for the remainder.
    pub last_shell: f64,
    pub closed_form: Option<f64>,
    /// `closed_form − truncated` when a closed form is known.
    pub remainder: Option<f64>,
}

pub fn normalize_over(phi: &Specialization, psi: &Specialization, max_size: usize, closed_form: Option<f64>) -> Result<SchurNormalization> {
    let mut truncated = 0.0;
    let mut last_shell = 0.0;
    for n in 0..=max_size {
        last_shell = partitions_of(n).iter().map(|l| schur_weight(l, phi, psi)).sum::<Result<f64>>()?;
        truncated += last_shell;
    }
    Ok(SchurNormalization { max_size, truncated, last_shell, closed_form, remainder: closed_form.map(|c| c - truncated) })
}

/// A pair of specializations as accepted on the command line.
///
/// `{"kind":"explicit","h":[…]}` uses the same values for both factors unless
/// `h_psi` is given; `{"kind":"zxi","z":…,"zp":…,"xi":…}` is the z-measure pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SchurSpec {
    Explicit {
        h: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        h_psi: Option<Vec<f64>>,
    },
    Zxi {
        z: f64,
        zp: f64,
        xi: f64,
    },
}

impl SchurSpec {
    pub fn pair(&self) -> Result<(Specialization, Specialization)> {
        match self {
            SchurSpec::Explicit { h, h_psi } => {
                let psi = h_psi.clone().unwrap_or_else(|| h.clone());
                Ok((Specialization::Explicit(h.clone()), Specialization::Explicit(psi)))
            }
            &SchurSpec::Zxi { z, zp, xi } => {
                if !(xi > 0.0 && xi < 1.0) {
                    return Err(Error::InvalidParameter(format!("need 0 < ξ < 1, got {xi}")));
                }
                Ok((Specialization::ZSeries { z, xi }, Specialization::ZSeries { z: zp, xi }))
            }
        }
    }

    /// `Σ_λ φ(s_λ) ψ(s_λ)` in closed form, when known: `(1−ξ)^{−zz′}` for the z pair.
    pub fn closed_form(&self) -> Option<f64> {
        match *self {
            SchurSpec::Zxi { z, zp, xi } => Some((-z * zp * (-xi).ln_1p()).exp()),
            SchurSpec::Explicit { .. } => None,
        }
    }
}
