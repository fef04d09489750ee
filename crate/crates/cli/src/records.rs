//! JSON records. Integers are decimal strings so no consumer loses precision.

use std::fmt;
use std::str::FromStr;

use normed_forms_core::classify::{ClassificationReport, Decision, Order3Verdict, Verdict};
use normed_forms_core::forms::SemigroupReport;
use normed_forms_core::{BigInt, Definiteness, Form, PairingType, PlusParams, Quadruple};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(pub BigInt);

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        Int(x.clone())
    }
}

impl From<i64> for Int {
    fn from(x: i64) -> Self {
        Int(BigInt::from(x))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = Int;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a decimal integer string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                BigInt::from_str(v).map(Int).map_err(E::custom)
            }
        }

        d.deserialize_str(IntVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub m: Int,
    pub k: Int,
    pub n: Int,
}

impl From<&Form> for FormRecord {
    fn from(f: &Form) -> Self {
        FormRecord { m: (&f.m).into(), k: (&f.k).into(), n: (&f.n).into() }
    }
}

impl FormRecord {
    pub fn to_form(&self) -> Form {
        Form { m: self.m.0.clone(), k: self.k.0.clone(), n: self.n.0.clone() }
    }
}

pub fn definiteness_name(d: Definiteness) -> &'static str {
    match d {
        Definiteness::PositiveDefinite => "positive_definite",
        Definiteness::NegativeDefinite => "negative_definite",
        Definiteness::Indefinite => "indefinite",
        Definiteness::Degenerate => "degenerate",
    }
}

pub fn decision_name(d: Decision) -> &'static str {
    match d {
        Decision::Decided => "decided",
        Decision::BoundedSearchOnly => "bounded_search_only",
    }
}

pub fn order3_name(v: Order3Verdict) -> &'static str {
    match v {
        Order3Verdict::Order1 => "order1",
        Order3Verdict::Order3 => "order3",
        Order3Verdict::NotApplicable => "not_applicable",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlusWitness {
    pub m: Int,
    pub k: Int,
    pub n: Int,
    pub p: Int,
    pub q: Int,
    pub r: Int,
}

impl From<&PlusParams> for PlusWitness {
    fn from(p: &PlusParams) -> Self {
        PlusWitness {
            m: (&p.m).into(),
            k: (&p.k).into(),
            n: (&p.n).into(),
            p: (&p.p).into(),
            q: (&p.q).into(),
            r: (&p.r()).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleWitness {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
}

impl From<&Quadruple> for QuadrupleWitness {
    fn from(q: &Quadruple) -> Self {
        QuadrupleWitness { a: (&q.a).into(), b: (&q.b).into(), c: (&q.c).into(), d: (&q.d).into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord<W> {
    pub admits: bool,
    pub decision: String,
    pub witness: Option<W>,
}

impl<W> VerdictRecord<W> {
    fn from_verdict<T>(v: &Verdict<T>, f: impl Fn(&T) -> W) -> Self {
        VerdictRecord {
            admits: v.admits(),
            decision: decision_name(v.decision).to_string(),
            witness: v.witness.as_ref().map(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub pp: VerdictRecord<PlusWitness>,
    pub mp: VerdictRecord<PlusWitness>,
    pub pm: VerdictRecord<PlusWitness>,
    pub mm: VerdictRecord<QuadrupleWitness>,
    pub admitted: Vec<String>,
    /// Present when a `(-,-)` witness exists.
    pub order3: Option<String>,
}

impl ClassificationRecord {
    pub fn new(r: &ClassificationReport, order3: Option<Order3Verdict>) -> Self {
        ClassificationRecord {
            pp: VerdictRecord::from_verdict(&r.admits_pp, |p| PlusWitness::from(p)),
            mp: VerdictRecord::from_verdict(&r.admits_mp, |p| PlusWitness::from(p)),
            pm: VerdictRecord::from_verdict(&r.admits_pm, |p| PlusWitness::from(p)),
            mm: VerdictRecord::from_verdict(&r.admits_mm, |q| QuadrupleWitness::from(q)),
            admitted: r.admitted_types().iter().map(PairingType::to_string).collect(),
            order3: order3.map(|v| order3_name(v).to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormInfoRecord {
    pub content: Int,
    pub primitive: bool,
    pub primitive_part: Option<FormRecord>,
    pub reduced: Option<FormRecord>,
    pub is_reduced: bool,
    /// Whether the reduced primitive part is the principal form.
    pub principal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub normed: bool,
    pub pairing_type: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub x: [Int; 2],
    pub y: [Int; 2],
    pub product: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub sample_bound: Int,
    pub distinct_values: usize,
    pub products_checked: usize,
    pub holds_on_sample: bool,
    pub exhaustive: bool,
    pub counterexample: Option<CounterexampleRecord>,
}

impl SemigroupRecord {
    pub fn new(sample_bound: &BigInt, r: &SemigroupReport) -> Self {
        SemigroupRecord {
            sample_bound: sample_bound.into(),
            distinct_values: r.distinct_values,
            products_checked: r.products_checked,
            holds_on_sample: r.counterexample.is_none(),
            exhaustive: r.exhaustive,
            counterexample: r.counterexample.as_ref().map(|c| CounterexampleRecord {
                x: [(&c.x.x1).into(), (&c.x.x2).into()],
                y: [(&c.y.x1).into(), (&c.y.x2).into()],
                product: (&c.product).into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityRecord {
    pub s1: bool,
    pub s2: bool,
    pub s3: bool,
    pub s4: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub height_bound: Int,
    pub found: bool,
    /// Basis realizing the form, as `u + v*tau` with rational `u`, `v`.
    pub basis: Option<[String; 2]>,
    pub lattice: Option<String>,
    pub discriminant: Option<String>,
    pub stable: Option<StabilityRecord>,
    pub principal: Option<bool>,
    pub cube_principal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub form: FormRecord,
    pub discriminant: Int,
    pub definiteness: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info: Option<FormInfoRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl OutputRecord {
    pub fn new(command: &str, f: &Form) -> Self {
        OutputRecord {
            command: command.to_string(),
            form: f.into(),
            discriminant: (&f.discriminant()).into(),
            definiteness: definiteness_name(f.definiteness()).to_string(),
            info: None,
            classification: None,
            verification: None,
            semigroup: None,
            lattice: None,
            timing_ms: None,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Flat catalog row for CSV output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub discriminant: Int,
    pub m: Int,
    pub k: Int,
    pub n: Int,
    pub pp: bool,
    pub mp: bool,
    pub pm: bool,
    pub mm: bool,
    pub plus_decision: String,
    pub mm_decision: String,
    /// `m k n p q` of the plus-type witness, space separated.
    pub plus_witness: String,
    /// `a b c d` of the `(-,-)` witness, space separated.
    pub mm_witness: String,
    pub order3: String,
    pub semigroup_holds_on_sample: bool,
    pub semigroup_exhaustive: bool,
}

impl CatalogRow {
    pub fn from_record(r: &OutputRecord) -> Option<Self> {
        let c = r.classification.as_ref()?;
        let s = r.semigroup.as_ref()?;
        let join = |xs: &[&Int]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        Some(CatalogRow {
            discriminant: r.discriminant.clone(),
            m: r.form.m.clone(),
            k: r.form.k.clone(),
            n: r.form.n.clone(),
            pp: c.pp.admits,
            mp: c.mp.admits,
            pm: c.pm.admits,
            mm: c.mm.admits,
            plus_decision: c.pp.decision.clone(),
            mm_decision: c.mm.decision.clone(),
            plus_witness: c.pp.witness.as_ref().map_or_else(String::new, |w| join(&[&w.m, &w.k, &w.n, &w.p, &w.q])),
            mm_witness: c.mm.witness.as_ref().map_or_else(String::new, |w| join(&[&w.a, &w.b, &w.c, &w.d])),
            order3: c.order3.clone().unwrap_or_default(),
            semigroup_holds_on_sample: s.holds_on_sample,
            semigroup_exhaustive: s.exhaustive,
        })
    }
}
