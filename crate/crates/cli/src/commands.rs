use std::f64::consts::PI;
use std::io::Write;
use std::time::Instant;

use normed_forms_core::classify::curve::{curve_kind, curve_sample, uniform_thetas, Branch, CurveKind};
use normed_forms_core::classify::{full_classification, order3_verdict, SearchBounds};
use normed_forms_core::forms::principal_form;
use normed_forms_core::lattices::embed_form;
use normed_forms_core::{Form, Mat2Z, Pairing, ProductKind};

use crate::cli::{ClassifyArgs, CurveArgs, FormArgs, LatticeArgs, ProbeArgs, VerifyArgs};
use crate::error::{CliError, Status};
use crate::records::{
    ClassificationRecord, FormInfoRecord, LatticeRecord, OutputRecord, SemigroupRecord, StabilityRecord,
    VerificationRecord,
};

fn emit(out: &mut dyn Write, r: &OutputRecord) -> Result<(), CliError> {
    writeln!(out, "{}", r.to_json_line())?;
    Ok(())
}

pub fn form_info_record(f: &Form) -> OutputRecord {
    let mut rec = OutputRecord::new("form-info", f);
    let split = f.content_and_primitive().ok();
    let prim = split.as_ref().map(|(_, p)| p.clone());
    let reduced = split.and_then(|(g, p)| p.reduce().ok().map(|(r, _)| r.scale(&g)));
    let principal = prim.as_ref().filter(|p| p.is_positive_definite()).and_then(|p| {
        let (r, _) = p.reduce().ok()?;
        principal_form(&p.discriminant()).ok().map(|q| q == r)
    });
    rec.info = Some(FormInfoRecord {
        content: (&f.content()).into(),
        primitive: f.is_primitive(),
        primitive_part: prim.as_ref().map(Into::into),
        reduced: reduced.as_ref().map(Into::into),
        is_reduced: f.is_reduced(),
        principal,
    });
    rec
}

pub fn form_info(a: &FormArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    emit(out, &form_info_record(&a.form()))?;
    Ok(Status::Ok)
}

/// Full classification plus the order-3 verdict of the `(-,-)` witness.
pub fn classification_record(f: &Form, bounds: &SearchBounds) -> Result<OutputRecord, CliError> {
    let report = full_classification(f, bounds)?;
    let order3 = report.admits_mm.witness.as_ref().map(order3_verdict);
    let mut rec = OutputRecord::new("classify", f);
    rec.classification = Some(ClassificationRecord::new(&report, order3));
    Ok(rec)
}

pub fn classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let start = Instant::now();
    let mut rec = classification_record(&a.form.form(), &SearchBounds::new(a.box_bound.clone()))?;
    if a.timing {
        rec.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    emit(out, &rec)?;
    let c = rec.classification.as_ref().expect("just set");
    let bounded = [&c.pp.decision, &c.mp.decision, &c.pm.decision, &c.mm.decision]
        .iter()
        .any(|d| d.as_str() != "decided");
    Ok(if a.strict && bounded { Status::Inconclusive } else { Status::Ok })
}

/// Twelve decimals, trailing zeros dropped, no negative zero.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn curve(a: &CurveArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let f = a.form.form();
    let kind = curve_kind(&f)?;
    let (lo, hi) = match kind {
        CurveKind::Trigonometric => (0.0, 2.0 * PI),
        CurveKind::Hyperbolic => (-2.0, 2.0),
    };
    let (lo, hi) = (a.theta_min.unwrap_or(lo), a.theta_max.unwrap_or(hi));
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(CliError::Input("theta bounds must be finite".into()));
    }
    let branch = if a.minus { Branch::Minus } else { Branch::Plus };
    let points = curve_sample(&f, &uniform_thetas(lo, hi, a.samples), branch)?;
    if kind == CurveKind::Hyperbolic {
        writeln!(out, "# indefinite form: s = sinh, c = cosh")?;
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["theta", "a", "b", "c", "d"])?;
    for p in points {
        w.write_record([p.theta, p.a, p.b, p.c, p.d].map(format_float))?;
    }
    w.flush()?;
    Ok(Status::Ok)
}

pub fn verify_record(s: &Pairing, f: &Form) -> OutputRecord {
    let normed = s.is_normed(f);
    let pairing_type = if normed { s.type_of(f).ok().map(|t| t.to_string()) } else { None };
    let mut rec = OutputRecord::new("verify", f);
    rec.verification = Some(VerificationRecord { normed, pairing_type });
    rec
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let v = &a.values;
    if v.len() != 11 {
        return Err(CliError::Input(format!("expected 11 integers, got {}", v.len())));
    }
    let a1 = Mat2Z::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
    let a2 = Mat2Z::new(v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone());
    let f = Form { m: v[8].clone(), k: v[9].clone(), n: v[10].clone() };
    let rec = verify_record(&Pairing::new(a1, a2), &f);
    emit(out, &rec)?;
    let normed = rec.verification.as_ref().is_some_and(|v| v.normed);
    Ok(if normed { Status::Ok } else { Status::Negative })
}

pub fn probe_record(f: &Form, sample_bound: &normed_forms_core::BigInt, box_bound: &normed_forms_core::BigInt) -> Result<OutputRecord, CliError> {
    let report = f.semigroup_probe(sample_bound, box_bound)?;
    let mut rec = OutputRecord::new("probe", f);
    rec.semigroup = Some(SemigroupRecord::new(sample_bound, &report));
    Ok(rec)
}

pub fn probe(a: &ProbeArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    emit(out, &probe_record(&a.form.form(), &a.sample_bound, &a.box_bound)?)?;
    Ok(Status::Ok)
}

pub fn lattice_record(f: &Form, height: &normed_forms_core::BigInt) -> Result<OutputRecord, CliError> {
    let embedded = embed_form(f, height)?;
    let mut rec = OutputRecord::new("lattice", f);
    let mut lr = LatticeRecord {
        height_bound: height.into(),
        found: embedded.is_some(),
        basis: None,
        lattice: None,
        discriminant: None,
        stable: None,
        principal: None,
        cube_principal: None,
    };
    if let Some(e) = embedded {
        let l = &e.lattice;
        lr.basis = Some([e.e1.to_string(), e.e2.to_string()]);
        lr.lattice = Some(l.to_string());
        lr.discriminant = Some(l.discriminant().to_string());
        lr.stable = Some(StabilityRecord {
            s1: l.stable_under(ProductKind::Plain),
            s2: l.stable_under(ProductKind::ConjLeft),
            s3: l.stable_under(ProductKind::ConjRight),
            s4: l.stable_under(ProductKind::ConjBoth),
        });
        lr.principal = l.is_principal().ok();
        lr.cube_principal = l.cube_is_principal().ok();
    }
    rec.lattice = Some(lr);
    Ok(rec)
}

pub fn lattice(a: &LatticeArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    emit(out, &lattice_record(&a.form.form(), &a.height)?)?;
    Ok(Status::Ok)
}
