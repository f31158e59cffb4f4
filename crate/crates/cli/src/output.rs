//! Machine-readable output records.
//!
//! Every command emits one [`OutputRecord`]: a kind tag, a structured
//! payload mirroring the library record it wraps, and a pinned schema
//! version. JSON payloads round-trip losslessly (floats are serialized in
//! shortest round-trip form); CSV uses 17 significant digits, a `.` decimal
//! separator, `,` delimiters, LF line endings and a mandatory header row.
//! Nothing time- or environment-dependent enters a payload, so identical
//! invocations produce byte-identical output.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// 17-significant-digit float formatting for CSV cells (round-trip safe).
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    #[serde(flatten)]
    pub body: Body,
}

/// Kind-tagged payload tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Body {
    Construction(Construction),
    Solution(Solution),
    Verification(Verification),
    Table(Table),
    Oracle(Oracle),
}

impl OutputRecord {
    pub fn new(body: Body) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// CSV rendering: header row plus data rows. Only construction,
    /// solution and table records have a tabular form.
    pub fn to_csv(&self) -> Option<String> {
        let mut out = String::new();
        match &self.body {
            Body::Construction(c) => {
                out.push_str(
                    "t,b0,b1,b2,b3,b4,b5,b6,gamma,alpha,beta,z1,z2,z3,z4,s,L,schema_version\n",
                );
                let mut cells = vec![fmt_f64(c.t)];
                cells.extend(c.b.iter().map(|&v| fmt_f64(v)));
                cells.extend(
                    [c.gamma, c.alpha, c.beta].iter().map(|&v| fmt_f64(v)),
                );
                cells.extend(c.z.iter().map(|&v| fmt_f64(v)));
                cells.push(fmt_f64(c.s));
                cells.push(fmt_f64(c.l));
                cells.push(self.schema_version.clone());
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Body::Solution(s) => {
                out.push_str(
                    "s,t_star,c0,c1,c2,c3,c4,c5,c6,L,residual,schema_version\n",
                );
                let mut cells = vec![fmt_f64(s.s), fmt_f64(s.t_star)];
                cells.extend(s.monic.iter().map(|&v| fmt_f64(v)));
                cells.push(fmt_f64(s.l));
                cells.push(fmt_f64(s.residual));
                cells.push(self.schema_version.clone());
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Body::Table(t) => {
                out.push_str("t,s,L,L_inf,alpha,beta,gamma,schema_version\n");
                for row in &t.rows {
                    let cells = [
                        fmt_f64(row.t),
                        fmt_f64(row.s),
                        fmt_f64(row.l),
                        fmt_f64(row.l_inf),
                        fmt_f64(row.alpha),
                        fmt_f64(row.beta),
                        fmt_f64(row.gamma),
                        self.schema_version.clone(),
                    ];
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
            Body::Verification(_) | Body::Oracle(_) => return None,
        }
        Some(out)
    }
}

/// Full construction record for one parameter value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Construction {
    pub t: f64,
    pub b: [f64; 7],
    pub gamma: f64,
    pub alpha: f64,
    pub beta: f64,
    pub z: [f64; 4],
    pub s: f64,
    #[serde(rename = "L")]
    pub l: f64,
}

/// Monic least-deviation solution for a prescribed constraint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub s: f64,
    pub t_star: f64,
    pub monic: [f64; 7],
    #[serde(rename = "L")]
    pub l: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppliedTolerances {
    pub abel_pell: f64,
    pub ps: f64,
    pub product_form: f64,
    pub relaxed: bool,
}

/// Residual report for one parameter value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub t: f64,
    pub grid: usize,
    pub abel_pell_max_residual: f64,
    pub ps_linear_residual: f64,
    pub ps_power_residuals: [f64; 5],
    pub product_form_max_diff: [f64; 2],
    pub alternations_inner: usize,
    pub alternations_outer: usize,
    pub limits_checked: bool,
    pub tolerances: AppliedTolerances,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub t: f64,
    pub s: f64,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "L_inf")]
    pub l_inf: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub rows: Vec<TableRow>,
}

/// Discrete minimax result next to the closed-form deviation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Oracle {
    pub s: f64,
    pub grid_size: usize,
    pub deviation: f64,
    pub iterations: usize,
    /// Best degree-≤4 approximant, ascending monomial coefficients.
    pub q: [f64; 5],
    /// Monic sextic recovered from the oracle: `x⁶ − 6s·x⁵ − q(x)`.
    pub monic: [f64; 7],
    #[serde(rename = "closed_form_L")]
    pub closed_form_l: f64,
    pub abs_difference: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let rec = OutputRecord::new(Body::Construction(Construction {
            t: -0.05,
            b: [-0.7, -3.7, 10.1, 16.0, -22.7, -13.2, 13.3],
            gamma: 1.2453169841011225,
            alpha: 1.3911602066226165,
            beta: 1.4319765331532288,
            z: [-0.845506411300438, -0.4240344501336144, 0.14868046534952917, 0.7068003409173993],
            s: 0.1662513857867997,
            l: 0.07530573789315273,
        }));
        let json = rec.to_json();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert!(json.contains("\"kind\":\"construction\""));
        assert!(json.contains("\"schema_version\":\"1\""));
    }

    #[test]
    fn csv_shape_for_construction() {
        let rec = OutputRecord::new(Body::Construction(Construction {
            t: -0.01,
            b: [0.0; 7],
            gamma: 1.0,
            alpha: 2.0,
            beta: 3.0,
            z: [0.0; 4],
            s: 0.5,
            l: 0.25,
        }));
        let csv = rec.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split(',').count(), 18);
        assert_eq!(lines[1].split(',').count(), 18);
    }

    #[test]
    fn csv_floats_round_trip() {
        let v = -0.002272726541593766_f64;
        let parsed: f64 = fmt_f64(v).parse().unwrap();
        assert_eq!(parsed, v);
    }

    #[test]
    fn verification_has_no_csv_form() {
        let rec = OutputRecord::new(Body::Verification(Verification {
            t: -0.05,
            grid: 1001,
            abel_pell_max_residual: 0.0,
            ps_linear_residual: 0.0,
            ps_power_residuals: [0.0; 5],
            product_form_max_diff: [0.0; 2],
            alternations_inner: 5,
            alternations_outer: 1,
            limits_checked: true,
            tolerances: AppliedTolerances {
                abel_pell: 1e-8,
                ps: 1e-8,
                product_form: 1e-9,
                relaxed: false,
            },
            passed: true,
        }));
        assert!(rec.to_csv().is_none());
    }
}
