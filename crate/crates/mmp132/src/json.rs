//! JSON encodings. Every integer is a decimal string, keys come out in a
//! fixed order, and re-serializing a parsed document reproduces it byte for
//! byte.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use mmp132_core::closed_forms::FormulaCheck;
use mmp132_core::recursion::{RecursionReport, RouteRow};
use mmp132_core::{DistTable, IntPoly, PatternSpec, RationalGF, XPoly, XSeries};

use crate::error::{Error, Result};

pub fn int_string(v: &BigInt) -> String {
    v.to_string()
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|_| Error::BadInteger(s.to_string()))
}

pub fn poly_strings(p: &XPoly) -> Vec<String> {
    p.coeffs().iter().map(int_string).collect()
}

pub fn parse_poly(cs: &[String]) -> Result<XPoly> {
    Ok(XPoly::from_coeffs(
        cs.iter().map(|c| parse_int(c)).collect::<Result<_>>()?,
    ))
}

/// `{"order":N,"coeffs":[[c_0^0,...],...]}`: entry `n` lists the
/// coefficients of `x^0, x^1, ...` in the coefficient of `t^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl From<&XSeries> for SeriesJson {
    fn from(s: &XSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs().iter().map(poly_strings).collect(),
        }
    }
}

impl SeriesJson {
    pub fn to_series(&self) -> Result<XSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_poly(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(XSeries::from_coeffs(coeffs, self.order))
    }
}

/// `{"num":[...],"den":[...]}`, ascending powers of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RationalGF> for RationalJson {
    fn from(r: &RationalGF) -> Self {
        let strings = |p: &IntPoly| p.coeffs().iter().map(int_string).collect();
        RationalJson {
            num: strings(&r.num),
            den: strings(&r.den),
        }
    }
}

impl RationalJson {
    pub fn to_rational(&self) -> Result<RationalGF> {
        let poly = |cs: &[String]| -> Result<IntPoly> {
            Ok(IntPoly::from_coeffs(
                cs.iter().map(|c| parse_int(c)).collect::<Result<_>>()?,
            ))
        };
        Ok(RationalGF::new(poly(&self.num)?, poly(&self.den)?))
    }
}

/// `{"pattern":"a,b,c,d","rows":{"n":[c_0,...]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub pattern: String,
    pub rows: BTreeMap<usize, Vec<String>>,
}

impl From<&DistTable> for TableJson {
    fn from(t: &DistTable) -> Self {
        TableJson {
            pattern: t.pattern.to_string(),
            rows: t.rows.iter().map(|(n, r)| (*n, poly_strings(r))).collect(),
        }
    }
}

impl TableJson {
    pub fn to_table(&self) -> Result<DistTable> {
        let pattern = PatternSpec::from_str(&self.pattern)?;
        let mut table = DistTable::new(pattern);
        for (n, cs) in &self.rows {
            table.rows.insert(*n, parse_poly(cs)?);
        }
        Ok(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteRowJson {
    pub route: String,
    pub coeffs: Vec<String>,
}

impl From<&RouteRow> for RouteRowJson {
    fn from(r: &RouteRow) -> Self {
        RouteRowJson {
            route: r.route.as_str().to_string(),
            coeffs: poly_strings(&r.row),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub n: usize,
    pub route_a: RouteRowJson,
    pub route_b: RouteRowJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionReportJson {
    pub pattern: String,
    pub n_max: usize,
    pub agree: bool,
    pub first_mismatch: Option<MismatchJson>,
}

impl From<&RecursionReport> for RecursionReportJson {
    fn from(r: &RecursionReport) -> Self {
        RecursionReportJson {
            pattern: r.pattern.clone(),
            n_max: r.n_max,
            agree: r.agree,
            first_mismatch: r.first_mismatch.as_ref().map(|m| MismatchJson {
                n: m.n,
                route_a: (&m.route_a).into(),
                route_b: (&m.route_b).into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCheckJson {
    pub formula_id: String,
    pub pattern: String,
    pub n: usize,
    pub predicted: Option<String>,
    pub observed: Option<String>,
    pub status: String,
}

impl From<&FormulaCheck> for FormulaCheckJson {
    fn from(c: &FormulaCheck) -> Self {
        FormulaCheckJson {
            formula_id: c.formula_id.to_string(),
            pattern: c.pattern.to_string(),
            n: c.n,
            predicted: c.predicted.as_ref().map(int_string),
            observed: c.observed.as_ref().map(int_string),
            status: c.status.as_str().to_string(),
        }
    }
}

/// One row of a table command: the coefficients from the requested route,
/// and for the two-route comparison whether the routes agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteTableRowJson {
    pub n: usize,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

/// `{"pattern":"1,0,1,0","route":"both","rows":[{"n":0,"coeffs":["1"],"agree":true},...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteTableJson {
    pub pattern: String,
    pub route: String,
    pub rows: Vec<RouteTableRowJson>,
}

/// `{"id":"A000129","offset":0,"terms":["0","1",...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OeisFixtureJson {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use mmp132_core::{build_table, GfEngine, DEFAULT_ENUMERATION_CAP};

    fn roundtrip<T: Serialize + for<'de> Deserialize<'de>>(value: &T) -> (String, String) {
        let first = serde_json::to_string(value).unwrap();
        let parsed: T = serde_json::from_str(&first).unwrap();
        (first, serde_json::to_string(&parsed).unwrap())
    }

    #[test]
    fn table_roundtrip() {
        let table =
            build_table(&PatternSpec::nat(1, 0, 1, 0), 11, DEFAULT_ENUMERATION_CAP).unwrap();
        let json = TableJson::from(&table);
        let (a, b) = roundtrip(&json);
        assert_eq!(a, b);
        assert!(a.starts_with(
            r#"{"pattern":"1,0,1,0","rows":{"0":["1"],"1":["1"],"2":["2"],"3":["4","1"]"#
        ));
        assert!(a.contains(r#""10":["#));
        assert_eq!(json.to_table().unwrap(), table);
    }

    #[test]
    fn series_roundtrip() {
        let s = GfEngine::new(6)
            .dispatch(&PatternSpec::nat(0, 1, 0, 1))
            .unwrap();
        let json = SeriesJson::from(&s);
        let (a, b) = roundtrip(&json);
        assert_eq!(a, b);
        assert_eq!(json.to_series().unwrap(), s);
        assert!(a.starts_with(r#"{"order":6,"coeffs":[["1"],["1"],["2"],["4","1"]"#));
    }

    #[test]
    fn rational_roundtrip() {
        let r = RationalGF::from_i64s(&[1, -2, -1], &[1, -3, 0, 1]);
        let json = RationalJson::from(&r);
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"num":["1","-2","-1"],"den":["1","-3","0","1"]}"#
        );
        assert_eq!(json.to_rational().unwrap(), r);
    }

    #[test]
    fn route_table_roundtrip() {
        let json = RouteTableJson {
            pattern: "1,0,1,0".into(),
            route: "both".into(),
            rows: vec![
                RouteTableRowJson {
                    n: 0,
                    coeffs: vec!["1".into()],
                    agree: Some(true),
                },
                RouteTableRowJson {
                    n: 3,
                    coeffs: vec!["4".into(), "1".into()],
                    agree: None,
                },
            ],
        };
        let (a, b) = roundtrip(&json);
        assert_eq!(a, b);
        assert_eq!(
            a,
            r#"{"pattern":"1,0,1,0","route":"both","rows":[{"n":0,"coeffs":["1"],"agree":true},{"n":3,"coeffs":["4","1"]}]}"#
        );
    }

    #[test]
    fn big_values_stay_exact() {
        let big = "123456789012345678901234567890";
        assert_eq!(int_string(&parse_int(big).unwrap()), big);
        assert!(matches!(parse_int("1.5"), Err(Error::BadInteger(_))));
    }
}
