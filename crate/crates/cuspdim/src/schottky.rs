//! Generalized Schottky presentations: m parabolic and n hyperbolic
//! generator pairs acting on the disc, with the ping-pong condition
//! checked through isometric arcs.
//!
//! A presentation is valid when every listed parabolic/hyperbolic element
//! classifies as such and the 2(m+n) isometric arcs have pairwise disjoint
//! closures with an angular gap of at least [`MIN_ARC_GAP`]; only the two
//! arcs of one parabolic pair may touch, at their common fixed point.

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moebius::{BoundaryArc, DiscIsometry, IsometryClass, TAU};

/// Minimal angular gap between arcs of different generator pairs.
pub const MIN_ARC_GAP: f64 = 1e-6;

/// A marked Schottky group: the generating pairs in presentation order.
#[derive(Debug, Clone)]
pub struct GroupPresentation {
    /// Parabolic generators γ_1..γ_m (positive representatives).
    parabolic: Vec<DiscIsometry>,
    /// Hyperbolic generators h_1..h_n (positive representatives).
    hyperbolic: Vec<DiscIsometry>,
    /// Signed lists [g_1, g_1⁻¹, g_2, g_2⁻¹, …]; index k pairs with k ^ 1.
    par_signed: Vec<DiscIsometry>,
    hyp_signed: Vec<DiscIsometry>,
}

impl GroupPresentation {
    /// Assembles a presentation from positive generators.
    pub fn new(parabolic: Vec<DiscIsometry>, hyperbolic: Vec<DiscIsometry>) -> Result<Self> {
        if parabolic.is_empty() || hyperbolic.is_empty() {
            return Err(Error::Schema(
                "need at least one parabolic and one hyperbolic generator".into(),
            ));
        }
        let sign = |list: &[DiscIsometry]| {
            let mut out = Vec::with_capacity(2 * list.len());
            for g in list {
                out.push(g.clone());
                out.push(g.inverse());
            }
            out
        };
        let par_signed = sign(&parabolic);
        let hyp_signed = sign(&hyperbolic);
        Ok(Self {
            parabolic,
            hyperbolic,
            par_signed,
            hyp_signed,
        })
    }

    /// Number of cusps (parabolic pairs).
    pub fn m(&self) -> usize {
        self.parabolic.len()
    }

    /// Number of hyperbolic pairs.
    pub fn n(&self) -> usize {
        self.hyperbolic.len()
    }

    /// Positive parabolic generators in presentation order.
    pub fn parabolic(&self) -> &[DiscIsometry] {
        &self.parabolic
    }

    /// Positive hyperbolic generators in presentation order.
    pub fn hyperbolic(&self) -> &[DiscIsometry] {
        &self.hyperbolic
    }

    /// Signed parabolic list; index 2i is γ_{i+1}, index 2i+1 its inverse.
    pub fn par_signed(&self, k: usize) -> &DiscIsometry {
        &self.par_signed[k]
    }

    /// Signed hyperbolic list with the same pairing convention.
    pub fn hyp_signed(&self, k: usize) -> &DiscIsometry {
        &self.hyp_signed[k]
    }

    /// Runs all validation checks and collects a line-by-line report.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        for (g, expected) in self
            .parabolic
            .iter()
            .map(|g| (g, IsometryClass::Parabolic))
            .chain(self.hyperbolic.iter().map(|g| (g, IsometryClass::Hyperbolic)))
        {
            let class = g.classify();
            let kind = match expected {
                IsometryClass::Parabolic => "parabolic",
                _ => "hyperbolic",
            };
            if g.is_identity() {
                report.fail(
                    format!("class {}", g.name),
                    format!("listed as {kind} but is the identity"),
                );
            } else if class != expected {
                report.fail(
                    format!("class {}", g.name),
                    format!("listed as {kind} but classifies as {class:?} (|tr| = {})", g.trace_abs()),
                );
            } else {
                report.pass(
                    format!("class {}", g.name),
                    format!("{kind}, |tr| = {:.6}", g.trace_abs()),
                );
            }
            let norm = g.a.norm_sqr() - g.b.norm_sqr();
            if (norm - 1.0).abs() > crate::moebius::NORMALIZATION_TOL {
                report.fail(
                    format!("norm {}", g.name),
                    format!("|a|^2 - |b|^2 = {norm}"),
                );
            }
        }
        if !report.passed() {
            // Arc geometry is meaningless for misclassified generators.
            return report;
        }

        // One family per generator pair: the two signed arcs together.
        let families: Vec<(String, [BoundaryArc; 2], bool)> = self
            .parabolic
            .iter()
            .map(|g| (g, true))
            .chain(self.hyperbolic.iter().map(|g| (g, false)))
            .map(|(g, is_par)| {
                let arcs = [
                    g.isometric_arc().expect("non-rotation generator"),
                    g.inverse().isometric_arc().expect("non-rotation generator"),
                ];
                (g.name.clone(), arcs, is_par)
            })
            .collect();

        // Within a pair: parabolic arcs may touch at the fixed point but must
        // not overlap; hyperbolic arcs need the full gap.
        for (name, arcs, is_par) in &families {
            let overlap = arcs[0]
                .intersect(&arcs[1])
                .map_or(0.0, |i| i.length);
            if *is_par {
                if overlap > 1e-9 {
                    report.fail(
                        format!("pair {name}"),
                        format!("arcs of the parabolic pair overlap by {overlap:.3e}"),
                    );
                } else {
                    report.pass(
                        format!("pair {name}"),
                        format!("arcs touch at the fixed point (gap {:.3e})", arcs[0].gap_to(&arcs[1])),
                    );
                }
            } else {
                let gap = arcs[0].gap_to(&arcs[1]);
                if gap < MIN_ARC_GAP {
                    report.fail(format!("pair {name}"), format!("gap {gap:.3e} below minimum"));
                } else {
                    report.pass(format!("pair {name}"), format!("gap {gap:.6}"));
                }
            }
        }

        // Across pairs: every arc-to-arc gap at least MIN_ARC_GAP.
        for i in 0..families.len() {
            for j in i + 1..families.len() {
                let mut min_gap = f64::INFINITY;
                for a in &families[i].1 {
                    for b in &families[j].1 {
                        let gap = if a.intersect(b).is_some() { 0.0 } else { a.gap_to(b) };
                        min_gap = min_gap.min(gap);
                    }
                }
                let label = format!("gap {} | {}", families[i].0, families[j].0);
                if min_gap < MIN_ARC_GAP {
                    report.fail(label, format!("gap {min_gap:.3e} below minimum"));
                } else {
                    report.pass(label, format!("gap {min_gap:.6}"));
                }
            }
        }

        // The arcs must leave room on the circle.
        let total: f64 = families
            .iter()
            .flat_map(|(_, arcs, _)| arcs.iter().map(|a| a.length))
            .sum();
        if total >= TAU {
            report.fail("coverage".into(), format!("arcs cover {total:.6} >= 2π"));
        } else {
            report.pass("coverage".into(), format!("arcs cover {total:.6} of {TAU:.6}"));
        }

        report
    }

    /// Returns `self` if validation passes, the failing report otherwise.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::Validation {
                report: report.to_string(),
            })
        }
    }

    /// Upper bound Z on |h′| over the isometric arcs of all hyperbolic
    /// generators: max (|a| + |b|)². The boundary derivative of every
    /// signed hyperbolic letter lies in [1/Z, Z] on its arc.
    pub fn hyperbolic_derivative_bound(&self) -> f64 {
        self.hyperbolic
            .iter()
            .map(|g| {
                let s = g.a.norm() + g.b.norm();
                s * s
            })
            .fold(1.0, f64::max)
    }

    /// Serializes to the JSON config schema.
    pub fn serialize(&self) -> String {
        let to_spec = |g: &DiscIsometry| GeneratorSpec {
            name: g.name.clone(),
            a: [g.a.re, g.a.im],
            b: [g.b.re, g.b.im],
        };
        let file = ConfigFile {
            parabolic: self.parabolic.iter().map(to_spec).collect(),
            hyperbolic: self.hyperbolic.iter().map(to_spec).collect(),
        };
        serde_json::to_string_pretty(&file).expect("schema serializes")
    }

    /// Parses, normalizes and validates a JSON config.
    pub fn load(json: &str) -> Result<Self> {
        let file: ConfigFile =
            serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
        if file.parabolic.is_empty() || file.hyperbolic.is_empty() {
            return Err(Error::Schema(
                "both `parabolic` and `hyperbolic` must be nonempty".into(),
            ));
        }
        let build = |specs: &[GeneratorSpec]| -> Result<Vec<DiscIsometry>> {
            specs
                .iter()
                .map(|s| {
                    DiscIsometry::new(
                        Complex::new(s.a[0], s.a[1]),
                        Complex::new(s.b[0], s.b[1]),
                        s.name.clone(),
                    )
                })
                .collect()
        };
        let presentation =
            GroupPresentation::new(build(&file.parabolic)?, build(&file.hyperbolic)?)?;
        presentation.validated()
    }

    /// Reads a config file from disk.
    pub fn load_path(path: &std::path::Path) -> Result<Self> {
        Self::load(&std::fs::read_to_string(path)?)
    }

    /// Built-in presentations addressable as `preset:NAME`.
    ///
    /// `one_cusp`: γ_t with t = 3 fixing z = 1, h_s with s = 1.8 fixing ±i.
    /// `two_cusp`: the same plus the rotation-by-π conjugate of γ fixing −1.
    ///
    /// The constants leave a 0.5997 rad gap between the cusp and hyperbolic
    /// arcs and put the one_cusp dimension near 0.52, comfortably inside
    /// the (1/2, 1) window where the geometric weight stays summable.
    pub fn preset(name: &str) -> Result<Self> {
        let t = 3.0;
        let s: f64 = 1.8;
        let g1 = DiscIsometry::new(Complex::new(1.0, t), Complex::new(0.0, -t), "g1")
            .expect("preset parabolic");
        let h1 = DiscIsometry::new(
            Complex::new(s.cosh(), 0.0),
            Complex::new(0.0, s.sinh()),
            "h1",
        )
        .expect("preset hyperbolic");
        match name {
            "one_cusp" => GroupPresentation::new(vec![g1], vec![h1])?.validated(),
            "two_cusp" => {
                // Conjugating by the rotation z ↦ −z sends b to −b.
                let g2 = DiscIsometry::new(Complex::new(1.0, t), Complex::new(0.0, t), "g2")
                    .expect("preset parabolic");
                GroupPresentation::new(vec![g1, g2], vec![h1])?.validated()
            }
            other => Err(Error::Usage(format!(
                "unknown preset '{other}' (available: one_cusp, two_cusp)"
            ))),
        }
    }
}

/// JSON schema of a config file.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    parabolic: Vec<GeneratorSpec>,
    hyperbolic: Vec<GeneratorSpec>,
}

/// One generator entry: complex numbers as [re, im] pairs.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorSpec {
    name: String,
    a: [f64; 2],
    b: [f64; 2],
}

/// Outcome of one validation check.
#[derive(Debug, Clone)]
pub struct CheckItem {
    /// Short identifier of the check.
    pub label: String,
    /// Whether the check passed.
    pub passed: bool,
    /// Human-readable measurement or failure reason.
    pub detail: String,
}

/// All validation outcomes for a presentation.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    /// Individual check results in evaluation order.
    pub items: Vec<CheckItem>,
}

impl ValidationReport {
    fn pass(&mut self, label: String, detail: String) {
        self.items.push(CheckItem {
            label,
            passed: true,
            detail,
        });
    }

    fn fail(&mut self, label: String, detail: String) {
        self.items.push(CheckItem {
            label,
            passed: false,
            detail,
        });
    }

    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for item in &self.items {
            writeln!(
                f,
                "{} {}: {}",
                if item.passed { "ok  " } else { "FAIL" },
                item.label,
                item.detail
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for name in ["one_cusp", "two_cusp"] {
            let p = GroupPresentation::preset(name).unwrap();
            let report = p.validate();
            assert!(report.passed(), "{name} failed:\n{report}");
        }
        assert!(GroupPresentation::preset("three_cusp").is_err());
    }

    #[test]
    fn preset_geometry_frozen() {
        let p = GroupPresentation::preset("one_cusp").unwrap();
        assert_eq!((p.m(), p.n()), (1, 1));
        // Smallest inter-family gap of the preset; recorded from the arc
        // geometry (cusp arc ending at 2·arctan(1/3), hyperbolic arc
        // starting at π/2 − arccos(tanh 1.8)).
        let g_arc = p.parabolic()[0].isometric_arc().unwrap();
        let h_inv_arc = p.hyperbolic()[0].inverse().isometric_arc().unwrap();
        let gap = g_arc.gap_to(&h_inv_arc);
        assert!((gap - 0.5997).abs() < 0.01, "gap = {gap}");
        let z = p.hyperbolic_derivative_bound();
        assert!((z - (1.8f64.cosh() + 1.8f64.sinh()).powi(2)).abs() < 1e-9);
    }

    #[test]
    fn duplicated_generator_fails_validation() {
        let p = GroupPresentation::preset("one_cusp").unwrap();
        let dup = GroupPresentation::new(
            p.parabolic().to_vec(),
            vec![p.hyperbolic()[0].clone(), p.hyperbolic()[0].clone()],
        )
        .unwrap();
        let report = dup.validate();
        assert!(!report.passed());
        assert!(report.items.iter().any(|i| !i.passed && i.label.starts_with("gap")));
    }

    #[test]
    fn rotation_and_identity_are_validation_failures() {
        let p = GroupPresentation::preset("one_cusp").unwrap();
        let rot = GroupPresentation::new(
            p.parabolic().to_vec(),
            vec![DiscIsometry::rotation(0.3)],
        )
        .unwrap();
        assert!(!rot.validate().passed());

        let ident = GroupPresentation::new(
            vec![DiscIsometry::identity()],
            p.hyperbolic().to_vec(),
        )
        .unwrap();
        let report = ident.validate();
        assert!(!report.passed());
        assert!(report.items.iter().any(|i| i.detail.contains("identity")));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        for name in ["one_cusp", "two_cusp"] {
            let p = GroupPresentation::preset(name).unwrap();
            let json = p.serialize();
            let q = GroupPresentation::load(&json).unwrap();
            for (x, y) in p
                .parabolic()
                .iter()
                .chain(p.hyperbolic())
                .zip(q.parabolic().iter().chain(q.hyperbolic()))
            {
                assert_eq!(x.a.re.to_bits(), y.a.re.to_bits());
                assert_eq!(x.a.im.to_bits(), y.a.im.to_bits());
                assert_eq!(x.b.re.to_bits(), y.b.re.to_bits());
                assert_eq!(x.b.im.to_bits(), y.b.im.to_bits());
                assert_eq!(x.name, y.name);
            }
        }
    }

    #[test]
    fn schema_errors_name_the_problem() {
        let missing = r#"{"parabolic": [{"name": "g1", "a": [1.0, 4.0], "b": [0.0, -4.0]}]}"#;
        let err = GroupPresentation::load(missing).unwrap_err();
        assert!(err.to_string().contains("hyperbolic"), "{err}");

        let badly_scaled = r#"{
            "parabolic": [{"name": "g1", "a": [1.0, 4.0], "b": [0.0, -4.0]}],
            "hyperbolic": [{"name": "h1", "a": [1.3, 0.0], "b": [0.0, 0.9]}]
        }"#;
        let err = GroupPresentation::load(badly_scaled).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { ref name, .. } if name == "h1"), "{err}");
    }

    #[test]
    fn load_rejects_overlapping_arcs() {
        // Two parabolics fixing the same point: arcs overlap, ping-pong fails.
        let json = r#"{
            "parabolic": [
                {"name": "g1", "a": [1.0, 4.0], "b": [0.0, -4.0]},
                {"name": "g2", "a": [1.0, 2.0], "b": [0.0, -2.0]}
            ],
            "hyperbolic": [{"name": "h1", "a": [10.067661995777765, 0.0], "b": [0.0, 10.017874927409903]}]
        }"#;
        let err = GroupPresentation::load(json).unwrap_err();
        assert!(matches!(err, Error::Validation { .. }), "{err}");
    }
}
