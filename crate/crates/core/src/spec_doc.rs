//! TOML spec documents.
//!
//! ```toml
//! P = ["-x1", "-1"]      # denominator polynomials P_1..P_m
//! Q = ["0", "1"]         # optional numerator Q_0..Q_k
//! alpha = 1              # numerator power, default 1
//! beta = "1"             # denominator power, default "1"
//! N = 16                 # truncation, default 16
//! [eval]                 # optional point
//! x1 = "1"
//! ```

use std::collections::BTreeMap;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::poly::{Assignment, Polynomial};
use crate::rational::Rational;
use crate::series::{expand_s, expand_s_higher, FamilySpec, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Int(v) => v.to_string(),
            Scalar::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(rename = "P")]
    p: Vec<Spanned<String>>,
    #[serde(rename = "Q", default)]
    q: Option<Vec<Spanned<String>>>,
    alpha: Option<i64>,
    beta: Option<Spanned<Scalar>>,
    #[serde(rename = "N")]
    n: Option<i64>,
    eval: Option<BTreeMap<String, Spanned<Scalar>>>,
}

#[derive(Debug, Serialize)]
struct CanonicalDocument {
    #[serde(rename = "P")]
    p: Vec<String>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    q: Option<Vec<String>>,
    alpha: u32,
    beta: String,
    #[serde(rename = "N")]
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    eval: Option<BTreeMap<String, String>>,
}

/// A parsed spec document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub spec: FamilySpec,
    /// Whether a `Q` list was given; selects `S` over `Y` output.
    pub has_numerator: bool,
    pub eval: Option<Assignment>,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn at(text: &str, span: Range<usize>, message: impl std::fmt::Display) -> Error {
    let (line, column) = position(text, span.start);
    Error::Spec(format!("line {line}, column {column}: {message}"))
}

/// Parses a polynomial held in a TOML string, reporting positions in the document.
fn poly_at(text: &str, value: &Spanned<String>, field: &str) -> Result<Polynomial> {
    parse_polynomial(value.get_ref()).map_err(|e| match e {
        Error::Parse(p) => {
            // the span covers the opening quote
            let (line, column) = position(text, value.span().start + 1);
            let column = if p.line == 1 { column + p.column - 1 } else { p.column };
            Error::Spec(format!("line {}, column {column}: {field}: {}", line + p.line - 1, p.message))
        }
        other => other,
    })
}

fn rational_at(text: &str, value: &Spanned<Scalar>, field: &str) -> Result<Rational> {
    let raw = value.get_ref().text();
    let poly = parse_polynomial(&raw).map_err(|e| at(text, value.span(), format!("{field}: {e}")))?;
    poly.as_constant()
        .ok_or_else(|| at(text, value.span(), format!("{field}: expected a rational, got '{raw}'")))
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument = toml::from_str(text).map_err(|e| match e.span() {
            Some(span) => at(text, span, e.message()),
            None => Error::Spec(e.message().to_string()),
        })?;
        let p = raw
            .p
            .iter()
            .enumerate()
            .map(|(i, v)| poly_at(text, v, &format!("P[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        if p.is_empty() {
            return Err(Error::Spec("P must list at least one polynomial".into()));
        }
        let q = match &raw.q {
            Some(list) => list
                .iter()
                .enumerate()
                .map(|(i, v)| poly_at(text, v, &format!("Q[{i}]")))
                .collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        let alpha = match raw.alpha {
            None => 1,
            Some(a) => u32::try_from(a).map_err(|_| Error::Spec(format!("alpha must be a nonnegative integer, got {a}")))?,
        };
        let beta = match &raw.beta {
            None => Rational::one(),
            Some(b) => rational_at(text, b, "beta")?,
        };
        let n = match raw.n {
            None => 16,
            Some(n) => usize::try_from(n).map_err(|_| Error::Spec(format!("N must be a nonnegative integer, got {n}")))?,
        };
        let eval = match &raw.eval {
            None => None,
            Some(map) => {
                let mut point = Assignment::new();
                for (name, value) in map {
                    let var = name
                        .strip_prefix('x')
                        .and_then(|d| d.parse::<u32>().ok())
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| at(text, value.span(), format!("eval: '{name}' is not a variable like x1")))?;
                    point.insert(var, rational_at(text, value, &format!("eval.{name}"))?);
                }
                Some(point)
            }
        };
        let spec = FamilySpec::new(p, q, n)?.with_orders(alpha, beta);
        Ok(SpecDocument { spec, has_numerator: raw.q.is_some(), eval })
    }

    pub fn from_spec(spec: FamilySpec, eval: Option<Assignment>) -> Self {
        let has_numerator = !spec.numer_polys.is_empty();
        SpecDocument { spec, has_numerator, eval }
    }

    /// Canonical TOML: fixed key order, canonical polynomial and rational text.
    pub fn to_toml(&self) -> String {
        let doc = CanonicalDocument {
            p: self.spec.denom_polys.iter().map(Polynomial::to_string).collect(),
            q: self
                .has_numerator
                .then(|| self.spec.numer_polys.iter().map(Polynomial::to_string).collect()),
            alpha: self.spec.alpha,
            beta: self.spec.beta.to_string(),
            n: self.spec.truncation,
            eval: self
                .eval
                .as_ref()
                .map(|pt| pt.iter().map(|(k, v)| (format!("x{k}"), v.to_string())).collect()),
        };
        toml::to_string(&doc).expect("plain document")
    }

    /// `Y` coefficients without a numerator, `S` with one; orders applied when not 1.
    pub fn expand(&self) -> TruncatedSeries {
        let s = &self.spec;
        if s.alpha == 1 && s.beta.is_one() {
            expand_s(s)
        } else {
            expand_s_higher(s)
        }
    }

    /// Expanded coefficients, evaluated at the `eval` point when one is given.
    pub fn coefficients(&self) -> Result<Vec<Polynomial>> {
        let series = self.expand();
        match &self.eval {
            None => Ok(series.into_coeffs()),
            Some(point) => Ok(series.eval(point)?.into_iter().map(Polynomial::constant).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::x;
    use crate::rat;
    use proptest::prelude::*;

    #[test]
    fn defaults_and_fibonacci() {
        let d = SpecDocument::parse("P = [\"-1\", \"-1\"]\nQ = [\"0\", \"1\"]\nN = 8\n").unwrap();
        assert_eq!(d.spec.alpha, 1);
        assert!(d.spec.beta.is_one());
        let c: Vec<String> = d.coefficients().unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(c, ["0", "1", "1", "2", "3", "5", "8", "13", "21"]);
        let d = SpecDocument::parse("P = [\"-x1\"]").unwrap();
        assert_eq!(d.spec.truncation, 16);
        assert!(!d.has_numerator);
    }

    #[test]
    fn eval_and_orders() {
        let text = "P = [\"-2*x1\", \"1\"]\nbeta = \"1/2\"\nN = 2\n[eval]\nx1 = \"0\"\n";
        let d = SpecDocument::parse(text).unwrap();
        let c = d.coefficients().unwrap();
        assert_eq!(c[2], Polynomial::constant(rat!(-1, 2)));
        let d = SpecDocument::parse("P = [\"-1\"]\nbeta = 2\nN = 3").unwrap();
        assert_eq!(d.spec.beta, rat!(2));
    }

    #[test]
    fn error_positions() {
        let e = SpecDocument::parse("P = [\"x1\",\n  \"2x1\"]").unwrap_err();
        assert!(e.to_string().contains("line 2, column 5"), "{e}");
        assert!(e.to_string().contains("implicit"), "{e}");
        let e = SpecDocument::parse("P = [\"x1\"]\nbogus = 1").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = SpecDocument::parse("Q = [\"1\"]").unwrap_err();
        assert!(matches!(e, Error::Spec(_)), "{e}");
        let e = SpecDocument::parse("P = []").unwrap_err();
        assert!(e.to_string().contains("at least one"));
        let e = SpecDocument::parse("P = [\"1\"]\nbeta = \"x1\"").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = SpecDocument::parse("P = [\"1\"]\nalpha = -1").unwrap_err();
        assert!(e.to_string().contains("alpha"));
        let e = SpecDocument::parse("P = [\"1\"]\n[eval]\ny = \"1\"").unwrap_err();
        assert!(e.to_string().contains("not a variable"));
    }

    #[test]
    fn canonical_round_trip() {
        let text = "N=5\nP=[ \"x1*2 - 1\" ,\"-(x2)^2\"]\nbeta=\"4/6\"\nQ=[\"1\"]\n[eval]\nx2=\"3\"\n";
        let d = SpecDocument::parse(text).unwrap();
        let canon = d.to_toml();
        let again = SpecDocument::parse(&canon).unwrap();
        assert_eq!(again, d);
        assert_eq!(again.to_toml(), canon);
        assert!(canon.starts_with("P = [\"2*x1 - 1\", \"-x2^2\"]\nQ = [\"1\"]\nalpha = 1\nbeta = \"2/3\"\nN = 5\n"), "{canon}");
        let from = SpecDocument::from_spec(FamilySpec::new(vec![x(1)], vec![], 3).unwrap(), None);
        assert_eq!(from.to_toml(), "P = [\"x1\"]\nalpha = 1\nbeta = \"1\"\nN = 3\n");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        (-5i64..=5, 1i64..=3, 1u32..=3, 0u32..=3, -5i64..=5)
            .prop_map(|(a, d, v, e, b)| &x(v).pow(e).scale(&rat!(a, d)) + &Polynomial::from(b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_text_is_a_fixed_point(
            p in prop::collection::vec(arb_poly(), 1..=4),
            q in prop::collection::vec(arb_poly(), 0..=3),
            alpha in 0u32..=3,
            (bn, bd) in (-6i64..=6, 1i64..=4),
            n in 0usize..=20,
            at in prop::option::of((-4i64..=4, 1i64..=3)),
        ) {
            let spec = FamilySpec::new(p, q, n).unwrap().with_orders(alpha, rat!(bn, bd));
            let eval = at.map(|(a, b)| Assignment::from([(2, rat!(a, b))]));
            let doc = SpecDocument::from_spec(spec, eval);
            let text = doc.to_toml();
            let back = SpecDocument::parse(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_toml(), text);
        }
    }
}
