//! Report envelopes shared by the CLI and the acceptance suite.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Budget,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Pass and pass gives pass; budget dominates fail.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Budget, _) | (_, Status::Budget) => Status::Budget,
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            _ => Status::Pass,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Budget => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Budget => "budget",
        }
    }
}

/// Maps a computation error to its report status: budget errors become
/// `budget`, anything else a failure.
pub fn status_of_error(e: &Error) -> Status {
    if e.is_budget() {
        Status::Budget
    } else {
        Status::Fail
    }
}

/// `{schema, check, params, status, witnesses, ...extra}`.
pub fn envelope(check: &str, params: Value, status: Status, witnesses: Vec<Value>, extra: Value) -> Value {
    let mut v = json!({
        "schema": SCHEMA_VERSION,
        "check": check,
        "params": params,
        "status": status,
        "witnesses": witnesses,
    });
    if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
        for (k, x) in more {
            obj.insert(k, x);
        }
    }
    v
}
