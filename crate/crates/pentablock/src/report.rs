//! Machine-readable records: one JSON object per line, fixed field order,
//! floats at 17 significant digits so emit-parse round trips are exact.
//!
//! Emission is hand-rolled (field order and float formatting are part of
//! the output contract); parsing goes through serde_json.

use num_complex::Complex64;
use serde_json::Value;

use crate::bidisc::g2_classify;
use crate::error::{Error, Result};
use crate::penta::penta_classify;
use crate::point::{G2Point, PentaPoint};
use crate::sample::{Region, RegionSample};

/// Name of the pseudo-random generator, recorded in every report so that
/// sample streams are reproducible across implementations.
pub const RNG_NAME: &str = "chacha8";

/// 17 significant digits: enough to reproduce any f64 exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_complex(z: Complex64) -> String {
    format!("[{},{}]", fmt_f64(z.re), fmt_f64(z.im))
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite_name: String,
    pub seed: u64,
    pub cases_run: u64,
    pub cases_passed: u64,
    pub max_deviation: f64,
    /// Wall-clock seconds; excluded from the determinism contract.
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.cases_passed == self.cases_run
    }

    pub fn to_json_line(&self) -> String {
        debug_assert!(self.cases_passed <= self.cases_run);
        debug_assert!(self.max_deviation >= 0.0);
        format!(
            "{{\"suite_name\":\"{}\",\"rng\":\"{}\",\"seed\":{},\"cases_run\":{},\"cases_passed\":{},\"max_deviation\":{},\"pass\":{},\"wall_time\":{}}}",
            self.suite_name,
            RNG_NAME,
            self.seed,
            self.cases_run,
            self.cases_passed,
            fmt_f64(self.max_deviation),
            self.pass(),
            fmt_f64(self.wall_time),
        )
    }

    pub fn from_json_line(line: &str) -> Result<SuiteReport> {
        let v = parse_object(line)?;
        let report = SuiteReport {
            suite_name: str_field(&v, "suite_name")?.to_owned(),
            seed: int_field(&v, "seed")?,
            cases_run: int_field(&v, "cases_run")?,
            cases_passed: int_field(&v, "cases_passed")?,
            max_deviation: f64_field(&v, "max_deviation")?,
            wall_time: f64_field(&v, "wall_time")?,
        };
        if report.cases_passed > report.cases_run {
            return Err(Error::Parse {
                position: 0,
                message: "cases_passed exceeds cases_run".into(),
            });
        }
        Ok(report)
    }
}

/// One emitted sample: where it was drawn from, the point, the verdict it
/// re-classifies to, and the membership defects backing that verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    pub region: String,
    pub point: RegionSample,
    pub classification: String,
    pub defects: Vec<f64>,
}

impl SampleRecord {
    /// Classify a freshly drawn sample and package it.
    pub fn from_sample(region: Region, sample: RegionSample, tol: f64) -> Result<SampleRecord> {
        let (classification, defects) = match sample {
            RegionSample::Base(pt) => {
                let class = g2_classify(pt, tol)?;
                let mut defects = vec![class.defect];
                if region == Region::Royal {
                    defects.push((pt.s * pt.s - 4.0 * pt.p).norm());
                }
                (class.verdict.name().to_owned(), defects)
            }
            RegionSample::Full(pt) => {
                let class = penta_classify(pt, tol)?;
                let mut defects = vec![class.base.defect];
                if let Some(h) = class.hartogs_defect {
                    defects.push(h);
                }
                (class.verdict.name().to_owned(), defects)
            }
        };
        Ok(SampleRecord {
            region: region.name().to_owned(),
            point: sample,
            classification,
            defects,
        })
    }

    pub fn to_json_line(&self) -> String {
        let point = match self.point {
            RegionSample::Base(pt) => {
                format!("{{\"s\":{},\"p\":{}}}", fmt_complex(pt.s), fmt_complex(pt.p))
            }
            RegionSample::Full(pt) => format!(
                "{{\"a\":{},\"s\":{},\"p\":{}}}",
                fmt_complex(pt.a),
                fmt_complex(pt.s),
                fmt_complex(pt.p)
            ),
        };
        let defects: Vec<String> = self.defects.iter().map(|d| fmt_f64(*d)).collect();
        format!(
            "{{\"region\":\"{}\",\"point\":{},\"classification\":\"{}\",\"defects\":[{}]}}",
            self.region,
            point,
            self.classification,
            defects.join(",")
        )
    }

    pub fn from_json_line(line: &str) -> Result<SampleRecord> {
        let v = parse_object(line)?;
        let point_obj = v
            .get("point")
            .and_then(Value::as_object)
            .ok_or_else(|| field_error("point"))?;
        let coord = |key: &str| -> Result<Complex64> {
            let arr = point_obj
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| field_error(key))?;
            match (arr.first().and_then(Value::as_f64), arr.get(1).and_then(Value::as_f64)) {
                (Some(re), Some(im)) if arr.len() == 2 => Ok(Complex64::new(re, im)),
                _ => Err(field_error(key)),
            }
        };
        let point = if point_obj.contains_key("a") {
            RegionSample::Full(PentaPoint::new(coord("a")?, coord("s")?, coord("p")?))
        } else {
            RegionSample::Base(G2Point::new(coord("s")?, coord("p")?))
        };
        let defects = v
            .get("defects")
            .and_then(Value::as_array)
            .ok_or_else(|| field_error("defects"))?
            .iter()
            .map(|d| d.as_f64().ok_or_else(|| field_error("defects")))
            .collect::<Result<Vec<f64>>>()?;
        Ok(SampleRecord {
            region: str_field(&v, "region")?.to_owned(),
            point,
            classification: str_field(&v, "classification")?.to_owned(),
            defects,
        })
    }
}

fn parse_object(line: &str) -> Result<Value> {
    let v: Value = serde_json::from_str(line).map_err(|e| Error::Parse {
        position: e.column().saturating_sub(1),
        message: e.to_string(),
    })?;
    if !v.is_object() {
        return Err(Error::Parse { position: 0, message: "expected a JSON object".into() });
    }
    Ok(v)
}

fn field_error(name: &str) -> Error {
    Error::Parse { position: 0, message: format!("missing or malformed field '{name}'") }
}

fn str_field<'a>(v: &'a Value, name: &str) -> Result<&'a str> {
    v.get(name).and_then(Value::as_str).ok_or_else(|| field_error(name))
}

fn int_field(v: &Value, name: &str) -> Result<u64> {
    v.get(name).and_then(Value::as_u64).ok_or_else(|| field_error(name))
}

fn f64_field(v: &Value, name: &str) -> Result<f64> {
    v.get(name).and_then(Value::as_f64).ok_or_else(|| field_error(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn float_formatting_round_trips_exactly() {
        for v in [
            0.0,
            1.0,
            -1.0,
            0.057_192_818_321_313_05,
            1.875e-5,
            f64::MIN_POSITIVE,
            -123456.789e300,
        ] {
            let parsed: f64 = fmt_f64(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits(), "lost bits for {v:e}");
        }
    }

    #[test]
    fn suite_report_round_trips() {
        let report = SuiteReport {
            suite_name: "royal-identity".into(),
            seed: 7,
            cases_run: 1000,
            cases_passed: 1000,
            max_deviation: 3.1415e-12,
            wall_time: 0.125,
        };
        let line = report.to_json_line();
        assert!(line.starts_with("{\"suite_name\":\"royal-identity\",\"rng\":\"chacha8\",\"seed\":7,"));
        let back = SuiteReport::from_json_line(&line).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json_line(), line);
        assert!(report.pass());
    }

    #[test]
    fn failing_report_shows_pass_false() {
        let report = SuiteReport {
            suite_name: "dual-formula".into(),
            seed: 1,
            cases_run: 10,
            cases_passed: 9,
            max_deviation: 0.5,
            wall_time: 0.0,
        };
        assert!(!report.pass());
        assert!(report.to_json_line().contains("\"pass\":false"));
    }

    #[test]
    fn sample_records_round_trip_across_all_regions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for region in Region::ALL {
            let sample = region.sample(&mut rng);
            let record = SampleRecord::from_sample(region, sample, crate::tol::SAMPLED_BOUNDARY).unwrap();
            let line = record.to_json_line();
            let back = SampleRecord::from_json_line(&line).unwrap();
            assert_eq!(back, record, "round trip failed for {}", region.name());
            assert_eq!(back.to_json_line(), line);
        }
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(SuiteReport::from_json_line("not json").is_err());
        assert!(SuiteReport::from_json_line("{\"suite_name\":\"x\"}").is_err());
        assert!(SampleRecord::from_json_line("{\"region\":\"royal\"}").is_err());
        assert!(SuiteReport::from_json_line(
            "{\"suite_name\":\"x\",\"rng\":\"chacha8\",\"seed\":1,\"cases_run\":1,\"cases_passed\":2,\"max_deviation\":0e0,\"pass\":true,\"wall_time\":0e0}"
        )
        .is_err());
    }
}
