use std::fmt;

use rayon::prelude::*;

use crate::embeddings::EmbeddingSpec;
use crate::error::{Error, Result};
use crate::kernel::{
    bounded_max_check, compatible, first_difference, mutate, ArcSet, MutateOutcome, Window,
};

/// Compatibility-iff is checked on source windows of at most this radius;
/// the number of arc pairs grows with the fourth power of the radius.
pub const PAIR_CHECK_RADIUS: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub check: &'static str,
    pub sample: usize,
    pub detail: String,
}

/// Outcome of a verification run: what was checked and every failure found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub radius: Option<u32>,
    pub samples: usize,
    pub checks: usize,
    pub failures: Vec<Finding>,
}

impl Report {
    pub fn new(name: impl Into<String>, radius: Option<u32>, samples: usize) -> Self {
        Report { name: name.into(), radius, samples, checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    fn record(&mut self, check: &'static str, sample: usize, failure: Option<String>) {
        self.checks += 1;
        if let Some(detail) = failure {
            self.failures.push(Finding { check, sample, detail });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radius = self.radius.map_or("-".to_string(), |r| r.to_string());
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} (radius {radius}, {} samples, {} checks, {} failures)",
            self.name,
            self.samples,
            self.checks,
            self.failures.len()
        )?;
        for x in &self.failures {
            write!(f, "\n  [{}] sample {}: {}", x.check, x.sample, x.detail)?;
        }
        Ok(())
    }
}

fn source_window(e: &EmbeddingSpec, w: &Window) -> Window {
    let r = w.radius_hint().unwrap_or(PAIR_CHECK_RADIUS);
    Window::radius(e.source(), r.min(PAIR_CHECK_RADIUS))
}

/// Check 1: `{α, β}` compatible iff `{Φ(α), Φ(β)}` compatible, on a source window.
fn check_compatibility_iff(e: &EmbeddingSpec, src: &Window) -> Option<String> {
    let arcs = src.valid_arcs();
    let images: Vec<_> = arcs.iter().map(|a| e.map_arc(a)).collect();
    if let Some((a, Err(err))) = arcs.iter().zip(&images).find(|(_, r)| r.is_err()) {
        return Some(format!("Φ{a} fails: {err}"));
    }
    let images: Vec<_> = images.into_iter().map(|r| r.unwrap()).collect();
    (0..arcs.len()).into_par_iter().find_map_first(|i| {
        (i + 1..arcs.len()).find_map(|j| {
            let before = compatible(&arcs[i], &arcs[j]).ok()?;
            let after = compatible(&images[i], &images[j]).ok()?;
            (before != after).then(|| {
                format!("{} vs {}: compatible {before} before, {after} after", arcs[i], arcs[j])
            })
        })
    })
}

struct SampleResult {
    image: Result<ArcSet>,
    findings: Vec<(&'static str, Option<String>)>,
}

fn check_sample(e: &EmbeddingSpec, t: &ArcSet, src: &Window, w: &Window) -> SampleResult {
    let mut findings = Vec::new();
    let image = match e.apply(t) {
        Ok(img) => img,
        Err(err) => {
            findings.push(("apply", Some(err.to_string())));
            return SampleResult { image: Err(err), findings };
        }
    };
    // Check 2: Φ(T) ⊆ F(T), on explicit arcs and on family members in the source window
    let missing = t
        .arcs_in_window(src)
        .into_iter()
        .chain(t.explicit().iter().cloned())
        .find_map(|a| match e.map_arc(&a) {
            Ok(b) if image.contains(&b) => None,
            Ok(b) => Some(format!("Φ{a} = {b} missing from the image")),
            Err(err) => Some(format!("Φ{a}: {err}")),
        });
    findings.push(("image-contains-phi", missing));
    // Check 3: the image is a cluster on the window
    let verdict = bounded_max_check(&image, w);
    findings.push((
        "bounded-max",
        match verdict {
            Ok(v) if v.is_ok() => None,
            Ok(v) => Some(v.to_string()),
            Err(err) => Some(err.to_string()),
        },
    ));
    // Check 5: flips go to flips
    for x in t.explicit() {
        let Ok(MutateOutcome::Mutable { y, t: t2 }) = mutate(t, x) else { continue };
        let detail = (|| -> Result<Option<String>> {
            let image2 = e.apply(&t2)?;
            let (fx, fy) = (e.map_arc(x)?, e.map_arc(&y)?);
            let a = image.arcs_in_window(w);
            let b = image2.arcs_in_window(w);
            let gone: Vec<_> = a.difference(&b).cloned().collect();
            let new: Vec<_> = b.difference(&a).cloned().collect();
            let want_gone: Vec<_> = w.contains_arc(&fx).then(|| fx.clone()).into_iter().collect();
            let want_new: Vec<_> = w.contains_arc(&fy).then(|| fy.clone()).into_iter().collect();
            if gone == want_gone && new == want_new && image.contains(&fx) && image2.contains(&fy) {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "flip {x} -> {y}: image lost {gone:?}, gained {new:?}; expected {fx} -> {fy}"
                )))
            }
        })();
        findings.push(("flip-to-flip", detail.unwrap_or_else(|err| Some(err.to_string()))));
    }
    SampleResult { image: Ok(image), findings }
}

/// Checks an embedding on sample clusters: compatibility-iff, `Φ(T) ⊆ F(T)`,
/// bounded maximality of `F(T)` on `w`, injectivity on the samples, and that
/// flips go to flips.
pub fn verify_embedding(e: &EmbeddingSpec, samples: &[ArcSet], w: &Window) -> Report {
    let mut report = Report::new(e.name.clone(), w.radius_hint(), samples.len());
    if w.model() != e.target() {
        let err = Error::ModelMismatch { expected: e.target(), found: w.model().to_string() };
        report.record("window", 0, Some(err.to_string()));
        return report;
    }
    let src = source_window(e, w);
    report.record("compatibility-iff", 0, check_compatibility_iff(e, &src));
    let results: Vec<SampleResult> =
        samples.par_iter().map(|t| check_sample(e, t, &src, w)).collect();
    for (k, r) in results.iter().enumerate() {
        for (check, f) in &r.findings {
            report.record(check, k, f.clone());
        }
    }
    // Check 4: samples differing somewhere have images differing at the image of that arc
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let (Ok(fi), Ok(fj)) = (&results[i].image, &results[j].image) else { continue };
            let Ok(Some(a)) = first_difference(&samples[i], &samples[j], &src) else { continue };
            let detail = match e.map_arc(&a) {
                Ok(b) if fi.contains(&b) != fj.contains(&b) => None,
                Ok(b) => Some(format!("samples {i} and {j} differ at {a} but agree at {b}")),
                Err(err) => Some(err.to_string()),
            };
            report.record("injective", i, detail);
        }
    }
    report
}

fn apply_path(path: &[EmbeddingSpec], t: &ArcSet) -> Result<ArcSet> {
    path.iter().try_fold(t.clone(), |x, e| e.apply(&x))
}

fn path_name(path: &[EmbeddingSpec]) -> String {
    path.iter().rev().map(|e| e.name.as_str()).collect::<Vec<_>>().join(" ∘ ")
}

/// Whether two paths of embeddings (applied first to last) agree on `w` for
/// every sample.
pub fn commutes_on_window(
    path1: &[EmbeddingSpec],
    path2: &[EmbeddingSpec],
    samples: &[ArcSet],
    w: &Window,
) -> Report {
    let name = format!("{} = {}", path_name(path1), path_name(path2));
    let mut report = Report::new(name, w.radius_hint(), samples.len());
    let ends = |p: &[EmbeddingSpec]| p.first().zip(p.last()).map(|(a, b)| (a.source(), b.target()));
    if ends(path1).is_none() || ends(path1) != ends(path2) {
        report.record("paths", 0, Some("paths do not share source and target".into()));
        return report;
    }
    let results: Vec<Option<String>> = samples
        .par_iter()
        .map(|t| {
            let run = || -> Result<Option<String>> {
                let (a, b) = (apply_path(path1, t)?, apply_path(path2, t)?);
                Ok(first_difference(&a, &b, w)?.map(|arc| {
                    format!("{arc}: in first path {}, in second {}", a.contains(&arc), b.contains(&arc))
                }))
            };
            run().unwrap_or_else(|err| Some(err.to_string()))
        })
        .collect();
    for (k, r) in results.into_iter().enumerate() {
        report.record("commutes", k, r);
    }
    report
}
