//! Exact rational values and their JSON form `{"num": …, "den": …}`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

pub type Rational = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        RationalJson {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl From<RationalJson> for Rational {
    fn from(r: RationalJson) -> Self {
        Rational::new(r.num, r.den)
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// `85` or `145/2`.
pub fn show(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn serialize_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    RationalJson::from(*r).serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(show(int(85)), "85");
        assert_eq!(show(Rational::new(145, 2)), "145/2");
        assert_eq!(show(Rational::new(-6, 4)), "-3/2");
    }

    #[test]
    fn json_form_is_reduced() {
        let j = RationalJson::from(Rational::new(28, 2));
        assert_eq!(j, RationalJson { num: 14, den: 1 });
        assert_eq!(
            serde_json::to_string(&RationalJson::from(Rational::new(145, 2))).unwrap(),
            r#"{"num":145,"den":2}"#
        );
    }
}
