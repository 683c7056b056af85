//! Answers to semi-decidable questions, qualified by the search bounds.

use std::fmt;

use crate::repmod::{Morphism, Representation};

/// Search bounds: inventory dimension bound `d` and resolution cutoff `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub dim_bound: usize,
    pub cutoff: usize,
}

impl Bounds {
    pub fn new(dim_bound: usize, cutoff: usize) -> Self {
        Bounds { dim_bound, cutoff }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d:{},B:{}", self.dim_bound, self.cutoff)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug)]
pub enum Witness {
    /// A test module and a map into the end term that does not lift.
    Unliftable { test: Representation, map: Morphism },
    /// A nonsplit short exact sequence.
    Sequence { inj: Morphism, surj: Morphism },
    /// A module realizing the value (a simple of infinite dimension, say).
    Module(Representation),
    /// A repeating pair of syzygy indices.
    Period { start: usize, repeat: usize },
    Pair(Representation, Representation),
    Note(String),
}

fn dims(m: &Representation) -> String {
    let parts: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

fn mats(f: &Morphism) -> String {
    let parts: Vec<String> = f
        .maps()
        .iter()
        .map(|m| {
            let rows: Vec<String> = (0..m.rows())
                .map(|r| {
                    let e: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
                    format!("[{}]", e.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    parts.join(";")
}

impl Witness {
    /// Single-token inline form, stable across runs.
    pub fn inline(&self) -> String {
        match self {
            Witness::Unliftable { test, map } => format!("test{}:map{{{}}}", dims(test), mats(map)),
            Witness::Sequence { inj, surj } => format!(
                "seq{}>{}>{}:inj{{{}}}",
                dims(inj.source()),
                dims(inj.target()),
                dims(surj.target()),
                mats(inj)
            ),
            Witness::Module(m) => format!("module{}", dims(m)),
            Witness::Period { start, repeat } => format!("period:{start}-{repeat}"),
            Witness::Pair(a, b) => format!("pair{}{}", dims(a), dims(b)),
            Witness::Note(s) => s.replace(' ', "_"),
        }
    }
}

/// A yes/no verdict. `bounded` is the answer found within the bounds;
/// `answer` equals it when certified and is `Unknown` otherwise.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub answer: Answer,
    pub bounded: Answer,
    pub bounds: Bounds,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn new(bounded: Answer, certified: bool, bounds: Bounds) -> Self {
        Verdict {
            answer: if certified { bounded } else { Answer::Unknown },
            bounded,
            bounds,
            witness: None,
        }
    }

    pub fn yes(certified: bool, bounds: Bounds) -> Self {
        Verdict::new(Answer::Yes, certified, bounds)
    }

    pub fn no(certified: bool, bounds: Bounds, witness: Witness) -> Self {
        Verdict::new(Answer::No, certified, bounds).with_witness(witness)
    }

    pub fn unknown(bounds: Bounds) -> Self {
        Verdict::new(Answer::Unknown, false, bounds)
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_decisive(&self) -> bool {
        self.answer != Answer::Unknown
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub fn is_no(&self) -> bool {
        self.answer == Answer::No
    }
}

/// Value of a homological dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimValue {
    Finite(usize),
    Infinite,
    /// The dimension of the zero object.
    NegInfinite,
    /// Not settled; at least this large.
    AtLeast(usize),
}

impl DimValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            DimValue::Finite(m) => Some(m),
            _ => None,
        }
    }

    /// Lower bound implied by the value (`None` for `-∞`).
    pub fn lower(self) -> Option<usize> {
        match self {
            DimValue::Finite(m) | DimValue::AtLeast(m) => Some(m),
            DimValue::Infinite => Some(usize::MAX),
            DimValue::NegInfinite => None,
        }
    }

    /// `self <= k`, when settled.
    pub fn at_most(self, k: usize) -> Option<bool> {
        match self {
            DimValue::Finite(m) => Some(m <= k),
            DimValue::NegInfinite => Some(true),
            DimValue::Infinite => Some(false),
            DimValue::AtLeast(m) => (m > k).then_some(false),
        }
    }

    /// Supremum of two values.
    pub fn max(self, other: DimValue) -> DimValue {
        use DimValue::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (NegInfinite, x) | (x, NegInfinite) => x,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (AtLeast(a), Finite(b)) | (Finite(b), AtLeast(a)) | (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(m) => write!(f, "finite:{m}"),
            DimValue::Infinite => f.write_str("infinite"),
            DimValue::NegInfinite => f.write_str("neginfinite"),
            DimValue::AtLeast(m) => write!(f, "atleast:{m}"),
        }
    }
}

/// A dimension verdict. Uncertified values are reported as unknown with
/// the bounded value alongside.
#[derive(Clone, Debug)]
pub struct DimVerdict {
    pub value: DimValue,
    pub certified: bool,
    pub bounds: Bounds,
    pub witness: Option<Witness>,
    pub caveat: Option<String>,
}

impl DimVerdict {
    pub fn new(value: DimValue, certified: bool, bounds: Bounds) -> Self {
        let certified = certified && !matches!(value, DimValue::AtLeast(_));
        DimVerdict { value, certified, bounds, witness: None, caveat: None }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_caveat(mut self, c: impl Into<String>) -> Self {
        self.caveat = Some(c.into());
        self
    }

    pub fn is_decisive(&self) -> bool {
        self.certified
    }

    /// The certified value, if any.
    pub fn decided(&self) -> Option<DimValue> {
        self.certified.then_some(self.value)
    }

    /// Certified finite value.
    pub fn finite(&self) -> Option<usize> {
        self.decided().and_then(DimValue::finite)
    }

    /// Certified finiteness (`-∞` counts as finite).
    pub fn is_finite(&self) -> Option<bool> {
        self.decided().map(|v| !matches!(v, DimValue::Infinite))
    }
}

/// An extended integer, used for complexes where dimensions and the
/// bounds `inf_n`, `sup_n` may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntValue {
    Finite(i64),
    Infinite,
    NegInfinite,
    AtLeast(i64),
}

impl IntValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            IntValue::Finite(m) => Some(m),
            _ => None,
        }
    }

    /// Shifts a finite value; infinities are fixed.
    pub fn offset(self, k: i64) -> IntValue {
        match self {
            IntValue::Finite(m) => IntValue::Finite(m + k),
            IntValue::AtLeast(m) => IntValue::AtLeast(m + k),
            x => x,
        }
    }
}

impl fmt::Display for IntValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntValue::Finite(m) => write!(f, "finite:{m}"),
            IntValue::Infinite => f.write_str("infinite"),
            IntValue::NegInfinite => f.write_str("neginfinite"),
            IntValue::AtLeast(m) => write!(f, "atleast:{m}"),
        }
    }
}

impl From<DimValue> for IntValue {
    fn from(v: DimValue) -> Self {
        match v {
            DimValue::Finite(m) => IntValue::Finite(m as i64),
            DimValue::Infinite => IntValue::Infinite,
            DimValue::NegInfinite => IntValue::NegInfinite,
            DimValue::AtLeast(m) => IntValue::AtLeast(m as i64),
        }
    }
}

/// An extended-integer verdict.
#[derive(Clone, Debug)]
pub struct IntVerdict {
    pub value: IntValue,
    pub certified: bool,
    pub bounds: Bounds,
    pub witness: Option<Witness>,
}

impl IntVerdict {
    pub fn new(value: IntValue, certified: bool, bounds: Bounds) -> Self {
        let certified = certified && !matches!(value, IntValue::AtLeast(_));
        IntVerdict { value, certified, bounds, witness: None }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_decisive(&self) -> bool {
        self.certified
    }

    pub fn decided(&self) -> Option<IntValue> {
        self.certified.then_some(self.value)
    }
}

/// One machine-readable record per verdict.
pub trait Record {
    fn record(&self, question: &str) -> String;
}

fn tail(witness: &Option<Witness>) -> String {
    witness.as_ref().map_or_else(|| "none".to_string(), Witness::inline)
}

impl Record for Verdict {
    fn record(&self, question: &str) -> String {
        let mut s = format!(
            "VERDICT {question} value={} bounds={} witness={}",
            self.answer,
            self.bounds,
            tail(&self.witness)
        );
        if self.answer == Answer::Unknown && self.bounded != Answer::Unknown {
            s.push_str(&format!(" bounded={}", self.bounded));
        }
        s
    }
}

impl Record for DimVerdict {
    fn record(&self, question: &str) -> String {
        let value = if self.certified { self.value.to_string() } else { "unknown".into() };
        let mut s = format!(
            "VERDICT {question} value={value} bounds={} witness={}",
            self.bounds,
            tail(&self.witness)
        );
        if !self.certified {
            s.push_str(&format!(" bounded={}", self.value));
        }
        if let Some(c) = &self.caveat {
            s.push_str(&format!(" caveat=\"{c}\""));
        }
        s
    }
}

impl Record for IntVerdict {
    fn record(&self, question: &str) -> String {
        let value = if self.certified { self.value.to_string() } else { "unknown".into() };
        let mut s = format!(
            "VERDICT {question} value={value} bounds={} witness={}",
            self.bounds,
            tail(&self.witness)
        );
        if !self.certified {
            s.push_str(&format!(" bounded={}", self.value));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records() {
        let b = Bounds::new(6, 16);
        let v = DimVerdict::new(DimValue::Finite(1), true, b);
        assert_eq!(v.record("gldim"), "VERDICT gldim value=finite:1 bounds=d:6,B:16 witness=none");
        let v = DimVerdict::new(DimValue::AtLeast(17), true, b);
        assert!(!v.certified);
        assert!(v.record("pd").contains("value=unknown"));
        assert!(v.record("pd").ends_with("bounded=atleast:17"));
        let v = Verdict::yes(false, b);
        assert_eq!(v.answer, Answer::Unknown);
        assert!(v.record("nproj").ends_with("bounded=yes"));
    }

    #[test]
    fn dim_value_order() {
        use DimValue::*;
        assert_eq!(Finite(1).max(Finite(3)), Finite(3));
        assert_eq!(Finite(1).max(Infinite), Infinite);
        assert_eq!(NegInfinite.max(Finite(0)), Finite(0));
        assert_eq!(AtLeast(4).max(Finite(2)), AtLeast(4));
        assert_eq!(AtLeast(4).at_most(3), Some(false));
        assert_eq!(AtLeast(4).at_most(5), None);
    }
}
