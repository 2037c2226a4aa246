//! Wire formats.
//!
//! Complex numbers are `[re, im]` pairs. Every float is written with 17
//! significant digits in exponent form (`-1.2500000000000000e-1`), which
//! round-trips doubles exactly and keeps output byte-stable.

use std::collections::BTreeMap;
use std::io;

use nestsolve_core::corpus::{Instance, Params, Trace};
use nestsolve_core::deg8::Diagnosis8;
use nestsolve_core::deg9::Diagnosis9;
use nestsolve_core::{Complex, Degree, Error, MonicPoly, RootSet};
use serde::{Deserialize, Serialize};

pub type Pair = [f64; 2];

fn pair(z: Complex) -> Pair {
    [z.re, z.im]
}

fn complex(p: Pair) -> Complex {
    Complex::new(p[0], p[1])
}

fn pairs(zs: &[Complex]) -> Vec<Pair> {
    zs.iter().copied().map(pair).collect()
}

/// `serde_json` formatter that prints floats as `{:.16e}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeventeenDigits;

impl serde_json::ser::Formatter for SeventeenDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if !value.is_finite() {
            return writer.write_all(b"null");
        }
        // +0.0 for both zeros
        write!(writer, "{:.16e}", value + 0.0)
    }
}

/// Compact single-line JSON with 17-significant-digit floats.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SeventeenDigits);
    value
        .serialize(&mut ser)
        .expect("serializing an in-memory value cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonPolynomial {
    pub degree: usize,
    /// `c_0 .. c_{N-1}`.
    pub coeffs: Vec<Pair>,
}

impl JsonPolynomial {
    pub fn from_poly(p: &MonicPoly) -> Self {
        JsonPolynomial {
            degree: p.degree(),
            coeffs: pairs(p.coeffs()),
        }
    }

    pub fn to_poly(&self) -> Result<MonicPoly, Error> {
        if self.coeffs.len() != self.degree {
            return Err(Error::InvalidInput(format!(
                "degree {} but {} coefficients",
                self.degree,
                self.coeffs.len()
            )));
        }
        MonicPoly::new(self.coeffs.iter().copied().map(complex).collect())
    }
}

const KEYS8: [&str; 6] = ["alpha0", "alpha1", "beta0", "beta1", "gamma0", "gamma1"];
const KEYS9: [&str; 6] = ["alpha0", "alpha1", "alpha2", "beta0", "beta1", "beta2"];

fn keys(degree: Degree) -> [&'static str; 6] {
    match degree {
        Degree::Eight => KEYS8,
        Degree::Nine => KEYS9,
    }
}

pub type ParamMap = BTreeMap<String, Pair>;

fn param_map(p: &Params) -> ParamMap {
    keys(p.degree())
        .iter()
        .zip(p.to_array())
        .map(|(k, v)| (k.to_string(), pair(v)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonParams {
    pub degree: usize,
    pub params: ParamMap,
}

impl JsonParams {
    pub fn from_params(p: &Params) -> Self {
        JsonParams {
            degree: p.degree().as_usize(),
            params: param_map(p),
        }
    }

    pub fn to_params(&self) -> Result<Params, Error> {
        let degree = Degree::try_from(self.degree)?;
        let expected = keys(degree);
        if self.params.len() != 6 || !expected.iter().all(|k| self.params.contains_key(*k)) {
            let got: Vec<&str> = self.params.keys().map(String::as_str).collect();
            return Err(Error::InvalidInput(format!(
                "degree-{degree} parameters must be exactly {expected:?}, got {got:?}"
            )));
        }
        Params::from_array(degree, expected.map(|k| complex(self.params[k])))
    }
}

/// Input to `verify`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonVerifyInput {
    pub degree: usize,
    pub coeffs: Vec<Pair>,
    pub roots: Vec<Pair>,
}

impl JsonVerifyInput {
    pub fn parts(&self) -> Result<(MonicPoly, Vec<Complex>), Error> {
        let poly = JsonPolynomial {
            degree: self.degree,
            coeffs: self.coeffs.clone(),
        }
        .to_poly()?;
        if self.roots.len() != self.degree {
            return Err(Error::InvalidInput(format!(
                "degree {} but {} roots",
                self.degree,
                self.roots.len()
            )));
        }
        let roots: Vec<Complex> = self.roots.iter().copied().map(complex).collect();
        if roots
            .iter()
            .any(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::InvalidInput("roots must be finite".into()));
        }
        Ok((poly, roots))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum JsonTrace {
    Deg8 {
        x: [Pair; 2],
        /// `y[mu][nu]`
        y: [[Pair; 2]; 2],
        /// `z[lambda][mu][nu]`
        z: [[[Pair; 2]; 2]; 2],
    },
    Deg9 {
        y: [Pair; 3],
        /// `z[lambda][mu]`
        z: [[Pair; 3]; 3],
    },
}

impl From<&Trace> for JsonTrace {
    fn from(t: &Trace) -> Self {
        match t {
            Trace::Deg8(t) => JsonTrace::Deg8 {
                x: t.x.map(pair),
                y: t.y.map(|r| r.map(pair)),
                z: t.z.map(|r| r.map(|s| s.map(pair))),
            },
            Trace::Deg9(t) => JsonTrace::Deg9 {
                y: t.y.map(pair),
                z: t.z.map(|r| r.map(pair)),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JsonDiagnosis {
    pub in_family: bool,
    pub residuals: Vec<f64>,
    pub roundtrip_error: f64,
    pub recovered: Option<ParamMap>,
    pub gauge: ParamMap,
}

impl From<&Diagnosis8> for JsonDiagnosis {
    fn from(d: &Diagnosis8) -> Self {
        JsonDiagnosis {
            in_family: d.in_family,
            residuals: d.constraint_residuals.to_vec(),
            roundtrip_error: d.roundtrip_error,
            recovered: d.recovered.map(|p| param_map(&Params::Deg8(p))),
            gauge: [
                ("alpha0".to_string(), pair(d.gauge.0)),
                ("beta0".to_string(), pair(d.gauge.1)),
            ]
            .into(),
        }
    }
}

impl From<&Diagnosis9> for JsonDiagnosis {
    fn from(d: &Diagnosis9) -> Self {
        JsonDiagnosis {
            in_family: d.in_family,
            residuals: d.constraint_residuals.to_vec(),
            roundtrip_error: d.roundtrip_error,
            recovered: d.recovered.map(|p| param_map(&Params::Deg9(p))),
            gauge: [("alpha0".to_string(), pair(d.gauge_alpha0))].into(),
        }
    }
}

/// Output of `solve`, `detect` and `verify`; absent parts are omitted.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct JsonResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<Pair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<JsonTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnosis: Option<JsonDiagnosis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    pub errors: Vec<String>,
}

pub fn roots_json(r: &RootSet) -> Vec<Pair> {
    pairs(r.as_slice())
}

/// One line of a corpus file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusRecord {
    pub index: u64,
    pub degree: usize,
    pub params: ParamMap,
    pub coeffs: Vec<Pair>,
    pub perturbed: bool,
}

impl From<&Instance> for CorpusRecord {
    fn from(i: &Instance) -> Self {
        CorpusRecord {
            index: i.index,
            degree: i.poly.degree(),
            params: param_map(&i.params),
            coeffs: pairs(i.poly.coeffs()),
            perturbed: i.perturbed,
        }
    }
}

/// Corpus as JSON lines, one instance per line, trailing newline included.
pub fn corpus_jsonl(instances: &[Instance]) -> String {
    let mut out = String::new();
    for i in instances {
        out.push_str(&to_json(&CorpusRecord::from(i)));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use nestsolve_core::corpus::{gen_instances, GenSpec};

    #[test]
    fn floats_use_seventeen_digits() {
        assert_eq!(to_json(&[1.0, -0.125, 0.0, -0.0]), "[1.0000000000000000e0,-1.2500000000000000e-1,0.0000000000000000e0,0.0000000000000000e0]");
        assert_eq!(to_json(&f64::INFINITY), "null");
    }

    #[test]
    fn params_reject_wrong_keys() {
        let text = r#"{"degree":9,"params":{"alpha0":[0,0],"alpha1":[0,0],"beta0":[0,0],"beta1":[0,0],"gamma0":[0,0],"gamma1":[0,0]}}"#;
        let p: JsonParams = serde_json::from_str(text).unwrap();
        assert!(p.to_params().unwrap_err().is_invalid_input());
        let p8 = JsonParams { degree: 8, ..p };
        assert!(p8.to_params().is_ok());
        let p7 = JsonParams { degree: 7, ..p8 };
        assert!(p7.to_params().is_err());
    }

    #[test]
    fn polynomial_length_must_match_degree() {
        let p = JsonPolynomial {
            degree: 3,
            coeffs: vec![[0.0, 0.0]; 2],
        };
        assert!(p.to_poly().unwrap_err().is_invalid_input());
    }

    #[test]
    fn corpus_lines_parse_back_exactly() {
        let corpus = gen_instances(&GenSpec::new(Degree::Nine, 5, 99)).unwrap();
        let text = corpus_jsonl(&corpus);
        for (line, inst) in text.lines().zip(&corpus) {
            let rec: CorpusRecord = serde_json::from_str(line).unwrap();
            let params = JsonParams {
                degree: rec.degree,
                params: rec.params.clone(),
            }
            .to_params()
            .unwrap();
            assert_eq!(params, inst.params);
            let poly = JsonPolynomial {
                degree: rec.degree,
                coeffs: rec.coeffs,
            }
            .to_poly()
            .unwrap();
            assert_eq!(poly, inst.poly);
        }
    }
}
