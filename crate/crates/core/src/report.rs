//! A versioned, line-oriented report format.
//!
//! Reports are the only output surface of the command-line tools: a `report
//! v1` header, the command name, echoed inputs, then typed items.  Series
//! appear as exponent:coefficient lists, rationals as integer pairs, so the
//! format carries exact values only and parses back losslessly.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::powser::{LaurentPoly, RationalSeries};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReportError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("key {0:?} contains whitespace")]
    BadKey(String),
    #[error("text value contains a line break")]
    BadValue,
}

/// One typed entry of a report body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Text { key: String, value: String },
    Int { key: String, value: BigInt },
    Rational { key: String, num: BigInt, den: BigInt },
    Flag { key: String, value: bool },
    /// A rational function as two exponent:coefficient lists.
    Series { key: String, num: Vec<(i64, BigInt)>, den: Vec<(i64, BigInt)> },
    /// A coefficient window starting at the given exponent.
    Taylor { key: String, lo: i64, coeffs: Vec<BigInt> },
}

impl Item {
    pub fn key(&self) -> &str {
        match self {
            Item::Text { key, .. }
            | Item::Int { key, .. }
            | Item::Rational { key, .. }
            | Item::Flag { key, .. }
            | Item::Series { key, .. }
            | Item::Taylor { key, .. } => key,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub items: Vec<Item>,
}

fn check_key(key: &str) -> Result<(), ReportError> {
    if key.is_empty() || key.chars().any(|c| c.is_whitespace()) {
        return Err(ReportError::BadKey(key.to_string()));
    }
    Ok(())
}

fn check_value(value: &str) -> Result<(), ReportError> {
    if value.contains('\n') || value.contains('\r') {
        return Err(ReportError::BadValue);
    }
    Ok(())
}

fn poly_terms(p: &LaurentPoly) -> Vec<(i64, BigInt)> {
    p.terms().map(|(e, c)| (e, c.clone())).collect()
}

fn render_terms(terms: &[(i64, BigInt)]) -> String {
    if terms.is_empty() {
        return "-".into();
    }
    terms.iter().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>().join(",")
}

fn parse_terms(s: &str, line: usize) -> Result<Vec<(i64, BigInt)>, ReportError> {
    if s == "-" {
        return Ok(Vec::new());
    }
    let err = |msg: String| ReportError::Parse { line, msg };
    s.split(',')
        .map(|t| {
            let (e, c) = t
                .split_once(':')
                .ok_or_else(|| err(format!("term {t:?} is not exponent:coefficient")))?;
            let e: i64 = e.parse().map_err(|_| err(format!("bad exponent {e:?}")))?;
            let c: BigInt = c.parse().map_err(|_| err(format!("bad coefficient {c:?}")))?;
            Ok((e, c))
        })
        .collect()
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), inputs: Vec::new(), items: Vec::new() }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn text(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.items.push(Item::Text { key: key.to_string(), value: value.to_string() });
        self
    }

    pub fn int(&mut self, key: &str, value: impl Into<BigInt>) -> &mut Self {
        self.items.push(Item::Int { key: key.to_string(), value: value.into() });
        self
    }

    pub fn rational(&mut self, key: &str, num: BigInt, den: BigInt) -> &mut Self {
        self.items.push(Item::Rational { key: key.to_string(), num, den });
        self
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.items.push(Item::Flag { key: key.to_string(), value });
        self
    }

    pub fn series(&mut self, key: &str, s: &RationalSeries) -> &mut Self {
        self.items.push(Item::Series {
            key: key.to_string(),
            num: poly_terms(s.num()),
            den: poly_terms(s.den()),
        });
        self
    }

    pub fn taylor(&mut self, key: &str, lo: i64, coeffs: Vec<BigInt>) -> &mut Self {
        self.items.push(Item::Taylor { key: key.to_string(), lo, coeffs });
        self
    }

    pub fn get(&self, key: &str) -> Option<&Item> {
        self.items.iter().find(|it| it.key() == key)
    }

    pub fn render(&self) -> Result<String, ReportError> {
        check_key(&self.command)?;
        let mut out = String::from("report v1\n");
        let _ = writeln!(out, "command {}", self.command);
        for (k, v) in &self.inputs {
            check_key(k)?;
            check_value(v)?;
            let _ = writeln!(out, "input {k} {v}");
        }
        for item in &self.items {
            check_key(item.key())?;
            match item {
                Item::Text { key, value } => {
                    check_value(value)?;
                    let _ = writeln!(out, "text {key} {value}");
                }
                Item::Int { key, value } => {
                    let _ = writeln!(out, "int {key} {value}");
                }
                Item::Rational { key, num, den } => {
                    let _ = writeln!(out, "rational {key} {num}/{den}");
                }
                Item::Flag { key, value } => {
                    let _ = writeln!(out, "flag {key} {value}");
                }
                Item::Series { key, num, den } => {
                    let _ = writeln!(out, "series {key} {} / {}", render_terms(num), render_terms(den));
                }
                Item::Taylor { key, lo, coeffs } => {
                    let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(out, "taylor {key} {lo} {}", cs.join(" "));
                }
            }
        }
        out.push_str("end\n");
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<Self, ReportError> {
        let mut lines = text.lines().enumerate();
        let err = |line: usize, msg: String| ReportError::Parse { line: line + 1, msg };
        match lines.next() {
            Some((_, "report v1")) => {}
            other => {
                return Err(err(0, format!("expected `report v1`, got {:?}", other.map(|(_, s)| s))))
            }
        }
        let mut report = Report::default();
        let mut saw_command = false;
        let mut saw_end = false;
        for (ln, raw) in lines {
            if saw_end {
                return Err(err(ln, "content after end".into()));
            }
            let (kind, rest) = raw.split_once(' ').unwrap_or((raw, ""));
            match kind {
                "end" => saw_end = true,
                "command" => {
                    report.command = rest.to_string();
                    saw_command = true;
                }
                "input" => {
                    let (k, v) = rest.split_once(' ').unwrap_or((rest, ""));
                    report.inputs.push((k.to_string(), v.to_string()));
                }
                "text" => {
                    let (k, v) = rest.split_once(' ').unwrap_or((rest, ""));
                    report.text(k, v);
                }
                "int" => {
                    let (k, v) = rest
                        .split_once(' ')
                        .ok_or_else(|| err(ln, "int needs key and value".into()))?;
                    let value: BigInt =
                        v.parse().map_err(|_| err(ln, format!("bad integer {v:?}")))?;
                    report.items.push(Item::Int { key: k.to_string(), value });
                }
                "rational" => {
                    let (k, v) = rest
                        .split_once(' ')
                        .ok_or_else(|| err(ln, "rational needs key and value".into()))?;
                    let (n, d) = v
                        .split_once('/')
                        .ok_or_else(|| err(ln, format!("rational {v:?} is not num/den")))?;
                    let num: BigInt =
                        n.parse().map_err(|_| err(ln, format!("bad numerator {n:?}")))?;
                    let den: BigInt =
                        d.parse().map_err(|_| err(ln, format!("bad denominator {d:?}")))?;
                    report.items.push(Item::Rational { key: k.to_string(), num, den });
                }
                "flag" => {
                    let (k, v) = rest
                        .split_once(' ')
                        .ok_or_else(|| err(ln, "flag needs key and value".into()))?;
                    let value = match v {
                        "true" => true,
                        "false" => false,
                        _ => return Err(err(ln, format!("bad flag value {v:?}"))),
                    };
                    report.items.push(Item::Flag { key: k.to_string(), value });
                }
                "series" => {
                    let mut words = rest.splitn(4, ' ');
                    let k = words.next().unwrap_or("");
                    let num = words.next().ok_or_else(|| err(ln, "series needs terms".into()))?;
                    let slash = words.next();
                    let den = words.next();
                    if slash != Some("/") || den.is_none() {
                        return Err(err(ln, "series needs `num / den`".into()));
                    }
                    report.items.push(Item::Series {
                        key: k.to_string(),
                        num: parse_terms(num, ln + 1)?,
                        den: parse_terms(den.unwrap(), ln + 1)?,
                    });
                }
                "taylor" => {
                    let mut words = rest.split(' ');
                    let k = words.next().unwrap_or("").to_string();
                    let lo: i64 = words
                        .next()
                        .ok_or_else(|| err(ln, "taylor needs a start exponent".into()))?
                        .parse()
                        .map_err(|_| err(ln, "bad start exponent".into()))?;
                    let coeffs: Vec<BigInt> = words
                        .map(|w| w.parse().map_err(|_| err(ln, format!("bad coefficient {w:?}"))))
                        .collect::<Result<_, _>>()?;
                    report.items.push(Item::Taylor { key: k, lo, coeffs });
                }
                _ => return Err(err(ln, format!("unknown line kind {kind:?}"))),
            }
        }
        if !saw_command {
            return Err(err(0, "missing command line".into()));
        }
        if !saw_end {
            return Err(err(0, "missing end line".into()));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn round_trip() {
        let mut r = Report::new("series");
        r.input("class", "T")
            .input("l", 2)
            .int("depth", 0)
            .rational("gamma", BigInt::from(3), BigInt::from(2))
            .flag("exception", false)
            .taylor("mu", -2, vec![BigInt::one(), BigInt::from(-4), BigInt::from(7)])
            .text("note", "window bound only");
        let s = RationalSeries::new(
            LaurentPoly::from_terms(&[(-1, 2), (3, 1)]),
            LaurentPoly::from_terms(&[(0, 1), (1, -1)]),
        )
        .unwrap();
        r.series("bass", &s);
        let text = r.render().unwrap();
        let back = Report::parse(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.render().unwrap(), text);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Report::parse("nope").is_err());
        assert!(Report::parse("report v1\ncommand x\n").is_err());
        assert!(Report::parse("report v1\ncommand x\nint k notanumber\nend\n").is_err());
        assert!(Report::parse("report v1\ncommand x\nend\nmore\n").is_err());
        let mut r = Report::new("bad key");
        assert_eq!(r.render(), Err(ReportError::BadKey("bad key".into())));
        r.command = "ok".into();
        r.text("note", "two\nlines");
        assert_eq!(r.render(), Err(ReportError::BadValue));
    }

    #[test]
    fn empty_series_sides_round_trip() {
        let mut r = Report::new("verify");
        r.items.push(Item::Series { key: "zero".into(), num: vec![], den: vec![(0, BigInt::one())] });
        let text = r.render().unwrap();
        assert_eq!(Report::parse(&text).unwrap(), r);
    }
}
