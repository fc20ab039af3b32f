//! Serde adapters that write exact integers as JSON numbers when they fit in 128 bits and
//! as decimal strings otherwise. Both forms are accepted when reading.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    if let Some(v) = value.to_i64() {
        serializer.serialize_i64(v)
    } else if let Some(v) = value.to_i128() {
        serializer.serialize_i128(v)
    } else {
        serializer.serialize_str(&value.to_string())
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
    deserializer.deserialize_any(BigIntVisitor)
}

struct BigIntVisitor;

impl Visitor<'_> for BigIntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse()
            .map_err(|_| E::custom(format!("invalid integer {v:?}")))
    }
}

pub mod option {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<BigInt>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => super::serialize(v, serializer),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<BigInt>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super")] BigInt);
        Ok(Option::<Wrap>::deserialize(deserializer)?.map(|w| w.0))
    }
}

pub mod matrix {
    use num_bigint::BigInt;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Cell(#[serde(with = "super")] BigInt);

    struct Row<'a>(&'a [BigInt]);

    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
            for v in self.0 {
                seq.serialize_element(&Cell(v.clone()))?;
            }
            seq.end()
        }
    }

    pub fn serialize<S: Serializer>(
        rows: &[Vec<BigInt>],
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(rows.len()))?;
        for row in rows {
            seq.serialize_element(&Row(row))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let rows = Vec::<Vec<Cell>>::deserialize(deserializer)?;
        Ok(rows
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.0).collect())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Holder {
        #[serde(with = "super")]
        v: BigInt,
        #[serde(with = "super::option")]
        o: Option<BigInt>,
    }

    #[test]
    fn small_values_are_numbers_and_huge_values_strings() {
        let h = Holder {
            v: BigInt::from(-7),
            o: None,
        };
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"v":-7,"o":null}"#);
        let huge: BigInt = "123456789012345678901234567890123456789012"
            .parse()
            .unwrap();
        let h = Holder {
            v: huge.clone(),
            o: Some(BigInt::from(3)),
        };
        let text = serde_json::to_string(&h).unwrap();
        assert_eq!(text, format!(r#"{{"v":"{huge}","o":3}}"#));
        assert_eq!(serde_json::from_str::<Holder>(&text).unwrap(), h);
    }
}
