//! Structured records for every inequality/identity check.
//!
//! A [`VerificationReport`] stores both sides of one claim, the
//! multiplicative constant (1 for identities), the achieved ratio and the
//! tolerance it was judged against, so a report bundle is auditable
//! without rerunning anything.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// lhs and rhs should agree: pass ⇔ |lhs − rhs| ≤ tol·max(1, |rhs|).
    Identity,
    /// lhs ≤ constant·rhs should hold: pass ⇔ ratio ≤ 1 + tol.
    Inequality,
}

/// Grid/sample resolution a check ran at, for provenance.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Resolution {
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub spacing: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub levels: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub kind: CheckKind,
    pub lhs: f64,
    pub rhs: f64,
    /// Multiplicative constant in `lhs ≤ constant·rhs`; 1 for identities.
    pub constant: f64,
    /// lhs/(constant·rhs); 0 when both sides vanish.
    pub ratio: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default)]
    pub resolution: Resolution,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn identity(claim_id: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let gap = (lhs - rhs).abs();
        let pass = gap <= tolerance * rhs.abs().max(1.0);
        let ratio = if rhs == 0.0 && lhs == 0.0 {
            0.0
        } else {
            lhs / rhs
        };
        VerificationReport {
            claim_id: claim_id.into(),
            kind: CheckKind::Identity,
            lhs,
            rhs,
            constant: 1.0,
            ratio,
            tolerance,
            pass,
            resolution: Resolution::default(),
            notes: Vec::new(),
        }
    }

    pub fn inequality(
        claim_id: impl Into<String>,
        lhs: f64,
        rhs: f64,
        constant: f64,
        tolerance: f64,
    ) -> Self {
        let denom = constant * rhs;
        let ratio = if denom == 0.0 {
            if lhs == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            lhs / denom
        };
        VerificationReport {
            claim_id: claim_id.into(),
            kind: CheckKind::Inequality,
            lhs,
            rhs,
            constant,
            ratio,
            tolerance,
            pass: ratio <= 1.0 + tolerance,
            resolution: Resolution::default(),
            notes: Vec::new(),
        }
    }

    pub fn with_resolution(mut self, res: Resolution) -> Self {
        self.resolution = res;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Relative gap |lhs − rhs| / |rhs| (∞ if rhs = 0 and lhs ≠ 0).
    pub fn relative_gap(&self) -> f64 {
        if self.rhs == 0.0 {
            if self.lhs == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.lhs - self.rhs).abs() / self.rhs.abs()
        }
    }

    /// One human-readable line, used by the CLI table printer.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {:<42} lhs={:<12.6} rhs={:<12.6} C={:<8.4} ratio={:<8.5} tol={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.claim_id,
            self.lhs,
            self.rhs,
            self.constant,
            self.ratio,
            self.tolerance
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rule() {
        assert!(VerificationReport::identity("x", 1.0, 1.005, 0.01).pass);
        assert!(!VerificationReport::identity("x", 1.0, 1.02, 0.01).pass);
        // small magnitudes are judged against max(1, |rhs|)
        assert!(VerificationReport::identity("x", 0.001, 0.0, 0.01).pass);
    }

    #[test]
    fn inequality_rule() {
        assert!(VerificationReport::inequality("x", 2.0, 1.0, 2.0, 0.03).pass);
        assert!(!VerificationReport::inequality("x", 2.2, 1.0, 2.0, 0.03).pass);
        let both_zero = VerificationReport::inequality("x", 0.0, 0.0, 1.0, 0.03);
        assert!(both_zero.pass);
        assert_eq!(both_zero.ratio, 0.0);
    }
}
