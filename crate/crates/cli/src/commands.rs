use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use trireg::linalg::permanent_with_limit;
use trireg::stability::VerdictSource;
use trireg::{
    biadjacency, build_region, convenient_family, criterion_check, decide_semistability,
    determinant, enumerate_tilings, example_family, find_tiling, has_wlp, is_tileable_structural,
    rank, region_svg, tiling_svg, Error, FamilyIdeal, FamilySpec, MonomialIdeal, RenderOptions,
    Result, StructuralVerdict, TilingCount,
};

/// A command result in both output formats.
pub struct Output {
    json: Option<Value>,
    text: String,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json: Some(json),
            text,
        }
    }

    /// Output that is the same in every format, such as an SVG document.
    pub fn raw(text: String) -> Self {
        Output { json: None, text }
    }

    pub fn json(&self) -> String {
        match &self.json {
            Some(v) => format!(
                "{}\n",
                serde_json::to_string_pretty(v).expect("serializable")
            ),
            None => self.text.clone(),
        }
    }

    pub fn text(&self) -> String {
        self.text.clone()
    }
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn hilbert(ideal: &MonomialIdeal, max_degree: u32) -> Output {
    let series = ideal.hilbert_series(max_degree);
    let mut text = format!("R/({ideal})\n");
    for r in &series {
        let _ = writeln!(text, "h({}) = {}", r.degree, r.value);
    }
    Output::new(
        json!({ "ideal": ideal.to_string(), "series": value(&series) }),
        text,
    )
}

pub fn region(ideal: &MonomialIdeal, d: u32, matrix: bool) -> Result<(Output, String)> {
    let r = build_region(ideal, d)?;
    let counts = r.triangle_counts();
    let dump = r.dump();
    let j = r.monomial_ideal();
    let mut out = json!({
        "ideal": ideal.to_string(),
        "d": d,
        "up": dump.up,
        "down": dump.down,
        "counts": value(&counts),
        "monomial_ideal": j.to_string(),
        "punctures": value(&dump.punctures),
        "overpuncturing": r.overpuncturing(),
        "overpuncturing_ideal": trireg::overpuncturing_ideal(ideal, d),
        "perfectly_punctured": r.is_perfectly_punctured(),
    });
    let mut text = format!(
        "T_{d}({ideal})\nup triangles: {}\ndown triangles: {}\nbalance: {:?}\nmonomial ideal: {j}\n",
        counts.up, counts.down, counts.balance
    );
    for p in &dump.punctures {
        let _ = writeln!(
            text,
            "puncture {} side {}{}",
            p.generator,
            p.side,
            if p.floating { " floating" } else { "" }
        );
    }
    let _ = writeln!(text, "over-puncturing: {}", r.overpuncturing());
    if matrix {
        let z = biadjacency(&r);
        out["matrix"] = value(&z.dump());
        text.push_str(&z.to_text());
        if !text.ends_with('\n') {
            text.push('\n');
        }
    }
    let drawing = region_svg(&r, &RenderOptions::default());
    Ok((Output::new(out, text), drawing))
}

pub fn tile(ideal: &MonomialIdeal, d: u32) -> Result<(Output, Option<String>)> {
    let r = build_region(ideal, d)?;
    let tiling = find_tiling(&r);
    let structural = is_tileable_structural(&r);
    let lozenges: Option<Vec<Value>> = tiling.as_ref().map(|t| {
        t.lozenges()
            .iter()
            .map(|l| {
                json!({
                    "down": l.down.to_string(),
                    "up": l.up.to_string(),
                    "orientation": l.orientation().symbol().to_string(),
                })
            })
            .collect()
    });
    let out = json!({
        "ideal": ideal.to_string(),
        "d": d,
        "tileable": tiling.is_some(),
        "tiling": lozenges,
        "structural": value(&structural),
    });
    let mut text = format!("T_{d}({ideal}) tileable: {}\n", yes(tiling.is_some()));
    match (&tiling, &structural) {
        (Some(t), _) => {
            for l in t.lozenges() {
                let _ = writeln!(
                    text,
                    "{} -> {} ({})",
                    l.down,
                    l.up,
                    l.orientation().symbol()
                );
            }
        }
        (None, StructuralVerdict::Unbalanced { counts }) => {
            let _ = writeln!(text, "unbalanced: {} down, {} up", counts.down, counts.up);
        }
        (None, StructuralVerdict::HeavySubregion { witness, counts }) => {
            let _ = writeln!(
                text,
                "subregion of {witness} has {} down and {} up triangles",
                counts.down, counts.up
            );
        }
        (None, StructuralVerdict::Tileable) => {}
    }
    let drawing = match &tiling {
        Some(t) => Some(tiling_svg(&r, t, &RenderOptions::default())?),
        None => None,
    };
    Ok((Output::new(out, text), drawing))
}

pub fn count(ideal: &MonomialIdeal, d: u32, cap: u64, max_columns: usize) -> Result<Output> {
    let r = build_region(ideal, d)?;
    let z = biadjacency(&r);
    let tilings = enumerate_tilings(&r, cap);
    let (kind, n) = match tilings {
        TilingCount::Exact(n) => ("exact", n),
        TilingCount::Exceeded(n) => ("exceeded", n),
    };
    let (permanent, permanent_note) = if z.is_square() {
        match permanent_with_limit(&z, max_columns) {
            Ok(p) => (Some(p.to_string()), None),
            Err(e @ Error::PermanentTooLarge { .. }) => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        }
    } else {
        (None, Some("matrix is not square".to_string()))
    };
    let det = z
        .is_square()
        .then(|| determinant(&z))
        .transpose()?
        .map(|v| v.to_string());
    let rk = rank(&z);
    let out = json!({
        "ideal": ideal.to_string(),
        "d": d,
        "rows": z.rows(),
        "cols": z.cols(),
        "tilings": { "kind": kind, "value": n.to_string() },
        "permanent": permanent,
        "permanent_note": permanent_note,
        "determinant": det,
        "rank": rk,
    });
    let mut text = format!("T_{d}({ideal}): Z is {}x{}\n", z.rows(), z.cols());
    match tilings {
        TilingCount::Exact(n) => {
            let _ = writeln!(text, "tilings: {n}");
        }
        TilingCount::Exceeded(n) => {
            let _ = writeln!(text, "tilings: more than {n} (cap reached)");
        }
    }
    let _ = writeln!(
        text,
        "permanent: {}",
        permanent
            .as_deref()
            .or(permanent_note.as_deref())
            .unwrap_or("-")
    );
    let _ = writeln!(text, "determinant: {}", det.as_deref().unwrap_or("-"));
    let _ = writeln!(text, "rank: {rk}");
    Ok(Output::new(out, text))
}

pub fn wlp(ideal: &MonomialIdeal) -> Result<Output> {
    let report = has_wlp(ideal)?;
    let mut out = value(&report);
    out["ideal"] = json!(ideal.to_string());
    let mut text = format!("R/({ideal}) has WLP: {}\n", yes(report.verdict));
    if let Some(f) = report.failing_degree {
        let rec = report.records.last().expect("failing record");
        let _ = writeln!(
            text,
            "Z(T_{f}) is {}x{} of rank {}",
            rec.rows, rec.cols, rec.rank
        );
    }
    let _ = writeln!(text, "degrees scanned: 1..={}", report.scanned_through);
    Ok(Output::new(out, text))
}

pub fn criterion(ideal: &MonomialIdeal) -> Result<Output> {
    let r = criterion_check(ideal)?;
    let mut out = value(&r);
    out["ideal"] = json!(ideal.to_string());
    let d = match r.d {
        Some(d) => d.to_string(),
        None => format!("{}/{}", r.degree_sum, r.denominator),
    };
    let opt = |v: Option<bool>| v.map_or("undecided", yes);
    let mut text = format!("d = {d}\n");
    let _ = writeln!(text, "(i) integral: {}", yes(r.cond_integer));
    let _ = writeln!(text, "(ii) degrees below d: {}", yes(r.cond_degrees_below));
    let _ = writeln!(
        text,
        "(iii) lcm degrees >= d: {}, >= d + 1: {} (minimum {})",
        yes(r.cond_lcm_weak),
        yes(r.cond_lcm_strong),
        r.min_lcm_degree.map_or("-".to_string(), |l| l.to_string())
    );
    let _ = writeln!(text, "(iv) parity: {}", yes(r.cond_parity));
    for m in &r.parity_violations {
        let _ = writeln!(text, "    odd gap at {m}");
    }
    let source = match r.verdict_source {
        VerdictSource::Tileability => "tileability",
        VerdictSource::RankScan => "rank scan",
        VerdictSource::None => "none",
    };
    let _ = writeln!(text, "WLP: {} ({source})", opt(r.wlp_verdict));
    let _ = writeln!(text, "semistable: {}", opt(r.semistable_verdict));
    Ok(Output::new(out, text))
}

pub fn semistable(ideal: &MonomialIdeal, d: u32) -> Result<Output> {
    let r = decide_semistability(ideal, d)?;
    let mut out = value(&r);
    out["ideal"] = json!(ideal.to_string());
    let text = format!(
        "T_{d}({ideal}): over-puncturing {}, tileable {}\nverdict: {:?}\n",
        r.overpuncturing,
        yes(r.tileable),
        r.verdict
    );
    Ok(Output::new(out, text))
}

fn family_output(f: FamilyIdeal) -> Output {
    let mut out = value(&f);
    out["ideal"] = json!(f.ideal.to_string());
    let mut text = format!("d = {}\n", f.d);
    for (k, (g, e)) in f.generators.iter().zip(&f.degrees).enumerate() {
        let _ = writeln!(text, "m_{} = {g} (degree {e})", k + 1);
    }
    let _ = writeln!(text, "minimum lcm degree: {}", f.min_lcm_degree);
    for n in &f.notes {
        let _ = writeln!(text, "note: {n}");
    }
    Output::new(out, text)
}

pub fn family_example(degrees: Vec<u32>) -> Result<Output> {
    let spec = FamilySpec::new(degrees)?;
    Ok(family_output(example_family(&spec)?))
}

pub fn family_convenient(t: usize, d: u32) -> Result<Output> {
    Ok(family_output(convenient_family(t, d)?))
}

pub fn render(ideal: &MonomialIdeal, d: u32, tiling: bool, opts: &RenderOptions) -> Result<String> {
    let r = build_region(ideal, d)?;
    if !tiling {
        return Ok(region_svg(&r, opts));
    }
    match find_tiling(&r) {
        Some(t) => tiling_svg(&r, &t, opts),
        None => Err(Error::TilingMismatch(format!(
            "T_{d}({ideal}) is not tileable"
        ))),
    }
}
