//! Exact rationals and their JSON form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::Serializer;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn big_json<S: SerializeStruct>(st: &mut S, key: &'static str, v: &BigInt) -> Result<(), S::Error> {
    match v.to_i64() {
        Some(x) => st.serialize_field(key, &x),
        None => st.serialize_field(key, &v.to_string()),
    }
}

/// Serializes as `{"num": .., "den": ..}`; components outside `i64` become strings.
pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    big_json(&mut st, "num", r.numer())?;
    big_json(&mut st, "den", r.denom())?;
    st.end()
}

pub(crate) struct Json<'a>(pub &'a Rational);

impl serde::Serialize for Json<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize(self.0, s)
    }
}

pub fn serialize_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Json))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        #[derive(serde::Serialize)]
        struct W {
            #[serde(serialize_with = "serialize")]
            x: Rational,
        }
        let s = serde_json::to_string(&W { x: ratio(10, 4) }).unwrap();
        assert_eq!(s, r#"{"x":{"num":5,"den":2}}"#);
    }
}
