//! Möbius isometries of the unit disc and arcs of its boundary circle.
//!
//! Every orientation-preserving isometry of the hyperbolic disc can be
//! written z ↦ (az + b)/(b̄z + ā) with |a|² − |b|² = 1. Only the pair
//! (a, b) is stored; the second matrix row is the conjugate of the first.
//! On the boundary circle the map restricts to an orientation-preserving
//! homeomorphism with |g′(e^{iθ})| = 1/|b̄e^{iθ} + ā|², so all derivative
//! and isometric-circle computations reduce to closed forms in (a, b).

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Full circle in radians.
pub const TAU: f64 = std::f64::consts::TAU;

/// Tolerance on the SU(1,1) normalization |a|² − |b|² = 1 accepted at
/// construction time. Inputs further from 1 are rejected, not repaired.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Trace tolerance separating parabolic (|tr| = 2) from the open classes.
pub const PARABOLIC_TRACE_TOL: f64 = 1e-10;

/// Reduce an angle to [0, 2π).
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs.
    if r >= TAU {
        r - TAU
    } else {
        r
    }
}

/// Conjugacy class of a disc isometry, decided by |trace|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryClass {
    /// |tr| > 2: two boundary fixed points, one attracting and one repelling.
    Hyperbolic,
    /// |tr| = 2 (within [`PARABOLIC_TRACE_TOL`]): a single boundary fixed point.
    Parabolic,
    /// |tr| < 2: fixed point inside the disc, no boundary fixed points.
    Elliptic,
}

/// An orientation-preserving isometry of the unit disc in SU(1,1) form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiscIsometry {
    /// Diagonal matrix entry.
    pub a: Complex,
    /// Off-diagonal matrix entry.
    pub b: Complex,
    /// Short label used in reports and letter names.
    pub name: String,
}

impl DiscIsometry {
    /// Builds an isometry, checking the SU(1,1) normalization.
    ///
    /// Entries are stored exactly as given. Rescaling onto the constraint
    /// would divide by a cancellation-dominated norm, which both perturbs
    /// the entries and breaks serialize → load bit-stability; a defect
    /// within [`NORMALIZATION_TOL`] is harmless downstream, anything
    /// further off is rejected so misconfigured inputs fail loudly.
    pub fn new(a: Complex, b: Complex, name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let norm = a.norm_sqr() - b.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized { name, norm });
        }
        Ok(Self { a, b, name })
    }

    /// The identity map.
    pub fn identity() -> Self {
        Self {
            a: Complex::new(1.0, 0.0),
            b: Complex::new(0.0, 0.0),
            name: "id".to_owned(),
        }
    }

    /// Rotation of the disc by `phi` radians about the origin.
    pub fn rotation(phi: f64) -> Self {
        Self {
            a: Complex::from_polar(1.0, phi / 2.0),
            b: Complex::new(0.0, 0.0),
            name: format!("rot({phi:.3})"),
        }
    }

    /// Matrix product, i.e. the composition g∘h (h applied first).
    ///
    /// The raw product is kept: rescaling onto |a|² − |b|² = 1 would divide
    /// by a catastrophically cancelled norm and only add noise, while the
    /// drift of the raw constraint stays near machine precision relative to
    /// the entry sizes.
    pub fn compose(g: &Self, h: &Self) -> Self {
        let a = g.a * h.a + g.b * h.b.conj();
        let b = g.a * h.b + g.b * h.a.conj();
        // Names are diagnostic labels; cap their growth so long words and
        // repeated squaring stay cheap.
        let name = if g.name.len() + h.name.len() <= 32 {
            format!("{}{}", g.name, h.name)
        } else {
            "…".to_owned()
        };
        Self { a, b, name }
    }

    /// Inverse isometry; exact in the stored entries.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
            name: format!("{}'", self.name),
        }
    }

    /// k-th power by repeated squaring (k = 0 gives the identity).
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity();
        let mut base = self.clone();
        let mut rest = k;
        while rest > 0 {
            if rest & 1 == 1 {
                result = Self::compose(&result, &base);
            }
            rest >>= 1;
            if rest > 0 {
                base = Self::compose(&base, &base);
            }
        }
        result.name = format!("{}^{}", self.name, k);
        result
    }

    /// |trace| = 2|Re a| of the matrix representative.
    pub fn trace_abs(&self) -> f64 {
        2.0 * self.a.re.abs()
    }

    /// Conjugacy class by the trace rule.
    pub fn classify(&self) -> IsometryClass {
        let t = self.trace_abs();
        if (t - 2.0).abs() <= PARABOLIC_TRACE_TOL {
            IsometryClass::Parabolic
        } else if t > 2.0 {
            IsometryClass::Hyperbolic
        } else {
            IsometryClass::Elliptic
        }
    }

    /// True for (±) identity up to the normalization tolerance.
    pub fn is_identity(&self) -> bool {
        self.b.norm() <= 1e-12 && self.a.im.abs() <= 1e-12
    }

    /// Image angle of e^{iθ} under the boundary restriction.
    ///
    /// Computed as arg(num · conj(den)) which avoids the division and keeps
    /// the result exactly on the circle.
    pub fn apply_boundary(&self, theta: f64) -> f64 {
        let z = Complex::from_polar(1.0, theta);
        let num = self.a * z + self.b;
        let den = self.b.conj() * z + self.a.conj();
        normalize_angle((num * den.conj()).arg())
    }

    /// |g′(e^{iθ})| = 1/|b̄e^{iθ} + ā|².
    pub fn boundary_derivative(&self, theta: f64) -> f64 {
        self.log_boundary_derivative(theta).exp()
    }

    /// log|g′(e^{iθ})|, computed without the intermediate exp.
    pub fn log_boundary_derivative(&self, theta: f64) -> f64 {
        let z = Complex::from_polar(1.0, theta);
        let den = self.b.conj() * z + self.a.conj();
        -den.norm_sqr().ln()
    }

    /// Boundary fixed points as sorted angles: two for a hyperbolic
    /// element, one for a parabolic. Elliptic elements have none and
    /// produce an error.
    ///
    /// Roots of b̄z² + (ā − a)z − b = 0; the discriminant is 4(Re²a − 1),
    /// so the classification decides the root structure exactly.
    pub fn fixed_boundary_points(&self) -> Result<Vec<f64>> {
        match self.classify() {
            IsometryClass::Elliptic => Err(Error::NoBoundaryFixedPoints {
                name: self.name.clone(),
            }),
            IsometryClass::Parabolic => {
                if self.b.norm() == 0.0 {
                    // ±identity: every boundary point is fixed; refuse.
                    return Err(Error::NoBoundaryFixedPoints {
                        name: self.name.clone(),
                    });
                }
                let z = Complex::new(0.0, self.a.im) / self.b.conj();
                Ok(vec![normalize_angle(z.arg())])
            }
            IsometryClass::Hyperbolic => {
                let root = (self.a.re * self.a.re - 1.0).sqrt();
                let i_im = Complex::new(0.0, self.a.im);
                let z1 = (i_im + root) / self.b.conj();
                let z2 = (i_im - root) / self.b.conj();
                let mut angles = vec![normalize_angle(z1.arg()), normalize_angle(z2.arg())];
                angles.sort_by(f64::total_cmp);
                Ok(angles)
            }
        }
    }

    /// Isometric arc Δ(g) = {θ : |g′(e^{iθ})| ≥ 1}.
    ///
    /// From |b̄e^{iθ} + ā|² = |a|² + |b|² + 2|a||b|cos(θ + arg(ab̄)) the arc
    /// is centered at π − arg(ab̄) with half-width arccos(|b|/|a|).
    /// Undefined for rotations (b = 0).
    pub fn isometric_arc(&self) -> Result<BoundaryArc> {
        let r = self.b.norm();
        if r == 0.0 {
            return Err(Error::IsometricArcUndefined {
                name: self.name.clone(),
            });
        }
        let center = std::f64::consts::PI - (self.a * self.b.conj()).arg();
        let half_width = (r / self.a.norm()).acos();
        Ok(BoundaryArc::new(center - half_width, 2.0 * half_width))
    }

    /// Image of a boundary arc; endpoints map to endpoints and the
    /// counterclockwise orientation is preserved.
    ///
    /// When the image is shorter than the absolute angle resolution of the
    /// endpoint images (strong contraction of an already small arc), the
    /// endpoint difference can wrap past zero and come out near 2π. That
    /// failure mode is recognized by an endpoint length above π paired with
    /// a first-order length |arc|·|g′(midpoint)| far below it, and the
    /// first-order value, exact at those scales, replaces the wrapped one.
    /// Genuinely long images keep the endpoint length: their first-order
    /// estimate agrees with it up to bounded distortion, so it never falls
    /// under the threshold.
    pub fn map_arc(&self, arc: &BoundaryArc) -> BoundaryArc {
        let start = self.apply_boundary(arc.start);
        let end = self.apply_boundary(arc.end());
        let mut length = normalize_angle(end - start);
        if length > std::f64::consts::PI {
            let first_order = arc.length * self.log_boundary_derivative(arc.midpoint()).exp();
            if first_order < 1e-6 {
                length = first_order;
            }
        }
        if length == 0.0 {
            // A fully collapsed image still needs positive measure.
            length = TAU * f64::EPSILON;
        }
        BoundaryArc::new(start, length)
    }

    /// (inf, sup) of log|g′| over an arc.
    ///
    /// |b̄e^{iθ} + ā|² is a sinusoid in θ, so the extrema lie at the arc
    /// endpoints or at the two critical angles of cos(θ + arg(ab̄)).
    pub fn log_derivative_range(&self, arc: &BoundaryArc) -> (f64, f64) {
        let psi = (self.a * self.b.conj()).arg();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut visit = |theta: f64| {
            let v = self.log_boundary_derivative(theta);
            lo = lo.min(v);
            hi = hi.max(v);
        };
        visit(arc.start);
        visit(arc.end());
        for critical in [-psi, std::f64::consts::PI - psi] {
            let c = normalize_angle(critical);
            if arc.contains(c) {
                visit(c);
            }
        }
        (lo, hi)
    }
}

/// A closed arc of the boundary circle, counterclockwise from `start`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryArc {
    /// Start angle in [0, 2π).
    pub start: f64,
    /// Arc length in (0, 2π).
    pub length: f64,
}

impl BoundaryArc {
    /// Builds an arc, reducing the start angle mod 2π.
    pub fn new(start: f64, length: f64) -> Self {
        debug_assert!(length > 0.0 && length < TAU, "arc length {length} out of range");
        Self {
            start: normalize_angle(start),
            length,
        }
    }

    /// End angle (start + length, reduced mod 2π).
    pub fn end(&self) -> f64 {
        normalize_angle(self.start + self.length)
    }

    /// Midpoint angle.
    pub fn midpoint(&self) -> f64 {
        normalize_angle(self.start + 0.5 * self.length)
    }

    /// Membership by the wraparound rule mod2π(θ − start) ≤ length.
    pub fn contains(&self, theta: f64) -> bool {
        normalize_angle(theta - self.start) <= self.length
    }

    /// True when `other` lies inside `self`, allowing `tol` of overhang.
    pub fn contains_arc(&self, other: &Self, tol: f64) -> bool {
        let offset = normalize_angle(other.start - self.start);
        let offset = if offset > TAU - tol { offset - TAU } else { offset };
        offset <= self.length + tol && offset + other.length <= self.length + tol
    }

    /// Intersection when it is a single arc; `None` when disjoint.
    ///
    /// Nested cylinder arcs only ever meet in one component; if both
    /// relative placements of `other` overlap, the longer component wins.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let d = normalize_angle(other.start - self.start);
        let mut best: Option<(f64, f64)> = None;
        for shift in [d, d - TAU] {
            let lo = shift.max(0.0);
            let hi = (shift + other.length).min(self.length);
            if hi > lo && best.map_or(true, |(blo, bhi)| hi - lo > bhi - blo) {
                best = Some((lo, hi));
            }
        }
        best.map(|(lo, hi)| Self::new(self.start + lo, hi - lo))
    }

    /// Counterclockwise gap from the end of `self` to the start of `other`,
    /// minimized over both orders; 0 when the arcs overlap or touch.
    pub fn gap_to(&self, other: &Self) -> f64 {
        if self.intersect(other).is_some() {
            return 0.0;
        }
        let g1 = normalize_angle(other.start - self.end());
        let g2 = normalize_angle(self.start - other.end());
        g1.min(g2)
    }
}
