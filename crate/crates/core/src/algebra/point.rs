use std::fmt;

use serde::Serialize;

use crate::poly::ParamPoly;
use crate::scalars::{Domain, Scalar, ScalarError};

use super::{AlgebraError, AlgebraTable};

/// Values of `(alpha, beta, gamma, psi)` in one scalar domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPoint {
    domain: Domain,
    values: [Scalar; 4],
}

impl ParameterPoint {
    pub fn new(domain: Domain, values: [Scalar; 4]) -> Result<Self, ScalarError> {
        for v in &values {
            if !domain.contains(v) {
                return Err(ScalarError::MixedDomains(domain.to_string(), v.domain().to_string()));
            }
        }
        Ok(ParameterPoint { domain, values })
    }

    /// Parses the four values with [`Domain::parse_value`].
    pub fn parse(domain: &Domain, values: [&str; 4]) -> Result<Self, ScalarError> {
        let v = values.map(|s| domain.parse_value(s));
        let [a, b, c, d] = v;
        ParameterPoint::new(domain.clone(), [a?, b?, c?, d?])
    }

    /// Point of a prime field from small integers.
    pub fn prime_field(p: u64, values: [i64; 4]) -> Result<Self, ScalarError> {
        let domain: Domain = format!("Fp:{p}").parse()?;
        let v = values.map(|x| domain.embed(&crate::scalars::rat(x, 1)));
        let [a, b, c, d] = v;
        ParameterPoint::new(domain, [a?, b?, c?, d?])
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn values(&self) -> &[Scalar; 4] {
        &self.values
    }

    pub fn specialize(&self, table: &AlgebraTable<ParamPoly>) -> Result<AlgebraTable<Scalar>, AlgebraError> {
        table.specialize(&self.values)
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.values;
        write!(f, "{} (alpha={a}, beta={b}, gamma={c}, psi={d})", self.domain)
    }
}

impl Serialize for ParameterPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ParameterPoint", 5)?;
        st.serialize_field("domain", &self.domain.to_string())?;
        for (name, v) in crate::poly::PARAM_NAMES.iter().zip(&self.values) {
            st.serialize_field(*name, &v.to_string())?;
        }
        st.end()
    }
}
