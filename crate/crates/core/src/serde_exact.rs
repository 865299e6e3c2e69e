//! Big integers are written to JSON as decimal strings so that no consumer
//! silently truncates them to a 64-bit float.

use serde::Serializer;

use crate::combinatorics::ExactInt;

pub(crate) fn ser<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn ser_opt<S: Serializer>(v: &Option<ExactInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
