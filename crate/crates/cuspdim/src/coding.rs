//! Symbolic coding of the induced boundary map over a truncated alphabet.
//!
//! The boundary expanding map sends each isometric arc Δ(g) forward by g.
//! Inducing on first returns to the hyperbolic arcs collapses every
//! maximal parabolic run into a single letter: the countable alphabet
//! consists of the 2n hyperbolic symbols plus all blocks γ^p·h with
//! 1 ≤ p, γ a signed parabolic and h a signed hyperbolic. A truncation
//! keeps p ≤ L, giving 2n + 4mnL letters.
//!
//! The only Markov constraint is at the hyperbolic junction: after a
//! letter ending in h, the letter starting with h⁻¹ is forbidden.
//! Cylinder arcs nest by pulling back under inverse branches; for an
//! admissible word the pullback always lands inside the next symbol's
//! arc, so the recursive intersection never truncates and the pair arcs
//! have O(1) closed forms.

use crate::error::{Error, Result};
use crate::moebius::{BoundaryArc, DiscIsometry};
use crate::schottky::GroupPresentation;

/// Index into the signed generator lists; `k ^ 1` is the inverse of `k`.
pub type SignedIdx = usize;

/// One letter of the induced coding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// A single hyperbolic symbol.
    Hyp {
        /// Signed hyperbolic index.
        gen: SignedIdx,
    },
    /// A maximal parabolic block γ^power followed by one hyperbolic symbol.
    Par {
        /// Cusp number in presentation order.
        cusp: usize,
        /// True for the inverse generator of the pair.
        negative: bool,
        /// Block length p ≥ 1.
        power: u32,
        /// Signed hyperbolic index of the closing symbol.
        terminal: SignedIdx,
    },
}

impl Letter {
    /// Signed hyperbolic index the letter ends with.
    pub fn terminal(&self) -> SignedIdx {
        match *self {
            Letter::Hyp { gen } => gen,
            Letter::Par { terminal, .. } => terminal,
        }
    }

    /// Signed parabolic index of the block, if any.
    pub fn par_index(&self) -> Option<SignedIdx> {
        match *self {
            Letter::Hyp { .. } => None,
            Letter::Par { cusp, negative, .. } => Some(2 * cusp + usize::from(negative)),
        }
    }

    /// Block length p for parabolic letters.
    pub fn power(&self) -> Option<u32> {
        match *self {
            Letter::Hyp { .. } => None,
            Letter::Par { power, .. } => Some(power),
        }
    }
}

/// One symbol of the un-induced coding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symbol {
    Par(SignedIdx),
    Hyp(SignedIdx),
}

impl Symbol {
    fn inverse(self) -> Self {
        match self {
            Symbol::Par(k) => Symbol::Par(k ^ 1),
            Symbol::Hyp(k) => Symbol::Hyp(k ^ 1),
        }
    }
}

/// The alphabet truncated at parabolic block length `l_max`, with all
/// per-letter geometry precomputed.
#[derive(Debug, Clone)]
pub struct TruncatedAlphabet {
    presentation: GroupPresentation,
    l_max: u32,
    letters: Vec<Letter>,
    /// Branch of the induced map on each letter cylinder (h∘γ^p or h).
    branch: Vec<DiscIsometry>,
    inv_branch: Vec<DiscIsometry>,
    /// One-letter cylinder arcs.
    arc: Vec<BoundaryArc>,
    /// Isometric arcs of the signed parabolic / hyperbolic symbols.
    par_arcs: Vec<BoundaryArc>,
    hyp_arcs: Vec<BoundaryArc>,
}

impl TruncatedAlphabet {
    /// Builds the truncated alphabet for a validated presentation.
    ///
    /// Letter order: the 2n hyperbolic letters in signed order, then the
    /// parabolic letters sorted by (cusp, sign, power, terminal).
    pub fn build(presentation: &GroupPresentation, l_max: u32) -> Result<Self> {
        if l_max == 0 {
            return Err(Error::Usage("truncation length must be at least 1".into()));
        }
        let presentation = presentation.clone().validated()?;
        let (m, n) = (presentation.m(), presentation.n());

        let par_arcs: Vec<BoundaryArc> = (0..2 * m)
            .map(|k| presentation.par_signed(k).isometric_arc().expect("validated"))
            .collect();
        let hyp_arcs: Vec<BoundaryArc> = (0..2 * n)
            .map(|k| presentation.hyp_signed(k).isometric_arc().expect("validated"))
            .collect();

        let count = 2 * n + 4 * m * n * (l_max as usize);
        let mut letters = Vec::with_capacity(count);
        for gen in 0..2 * n {
            letters.push(Letter::Hyp { gen });
        }
        for cusp in 0..m {
            for negative in [false, true] {
                for power in 1..=l_max {
                    for terminal in 0..2 * n {
                        letters.push(Letter::Par {
                            cusp,
                            negative,
                            power,
                            terminal,
                        });
                    }
                }
            }
        }
        debug_assert_eq!(letters.len(), count);

        let mut branch = Vec::with_capacity(count);
        let mut inv_branch = Vec::with_capacity(count);
        let mut arc = Vec::with_capacity(count);
        for letter in &letters {
            match *letter {
                Letter::Hyp { gen } => {
                    let g = presentation.hyp_signed(gen).clone();
                    inv_branch.push(g.inverse());
                    arc.push(hyp_arcs[gen]);
                    branch.push(g);
                }
                Letter::Par {
                    cusp,
                    negative,
                    power,
                    terminal,
                } => {
                    let gamma = presentation.par_signed(2 * cusp + usize::from(negative));
                    let gamma_p = gamma.pow(power);
                    let b = DiscIsometry::compose(presentation.hyp_signed(terminal), &gamma_p);
                    // The letter cylinder is the pullback of the closing
                    // symbol's arc through the parabolic block.
                    arc.push(gamma_p.inverse().map_arc(&hyp_arcs[terminal]));
                    inv_branch.push(b.inverse());
                    branch.push(b);
                }
            }
        }

        Ok(Self {
            presentation,
            l_max,
            letters,
            branch,
            inv_branch,
            arc,
            par_arcs,
            hyp_arcs,
        })
    }

    /// Number of letters, 2n + 4mnL.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True only for a degenerate empty alphabet (never after `build`).
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Truncation length L.
    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    /// The validated presentation this alphabet codes.
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    /// Letter at an index.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i]
    }

    /// All letters in index order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Index of a letter under the fixed ordering.
    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        let n2 = 2 * self.presentation.n();
        let l = self.l_max as usize;
        match letter {
            Letter::Hyp { gen } => (gen < n2).then_some(gen),
            Letter::Par {
                cusp,
                negative,
                power,
                terminal,
            } => {
                if cusp >= self.presentation.m()
                    || power == 0
                    || power > self.l_max
                    || terminal >= n2
                {
                    return None;
                }
                let sign_block = 2 * cusp + usize::from(negative);
                Some(n2 + (sign_block * l + (power as usize - 1)) * n2 + terminal)
            }
        }
    }

    /// Inducing time: 1 for hyperbolic letters, p + 1 for blocks γ^p·h.
    pub fn tau(&self, i: usize) -> u32 {
        match self.letters[i] {
            Letter::Hyp { .. } => 1,
            Letter::Par { power, .. } => power + 1,
        }
    }

    /// Cusp-winding vector: p − 1 in the block's cusp coordinate.
    pub fn cusp_vector(&self, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; self.presentation.m()];
        if let Letter::Par { cusp, power, .. } = self.letters[i] {
            v[cusp] = f64::from(power - 1);
        }
        v
    }

    /// Winding in one cusp coordinate without allocating.
    pub fn winding(&self, i: usize, cusp: usize) -> f64 {
        match self.letters[i] {
            Letter::Par { cusp: c, power, .. } if c == cusp => f64::from(power - 1),
            _ => 0.0,
        }
    }

    /// Index of the single forbidden successor of letter `i`.
    pub fn forbidden_successor(&self, i: usize) -> usize {
        // The hyperbolic letter of the inverse of the closing symbol.
        self.letters[i].terminal() ^ 1
    }

    /// Combinatorial admissibility: `j` may follow `i` unless `j` is the
    /// hyperbolic letter inverse to the closing symbol of `i`.
    pub fn admissible(&self, i: usize, j: usize) -> bool {
        j != self.forbidden_successor(i)
    }

    /// Geometric admissibility: the branch image of cylinder `i` covers
    /// cylinder `j`.
    pub fn admissible_geometric(&self, i: usize, j: usize) -> bool {
        let image = self.branch[i].map_arc(&self.arc[i]);
        image.contains_arc(&self.arc[j], 1e-9)
    }

    /// Branch of the induced map on the letter cylinder: h for Hyp(h),
    /// h∘γ^p for Par(γ, p, h) (γ applied first).
    pub fn branch_map(&self, i: usize) -> &DiscIsometry {
        &self.branch[i]
    }

    /// Inverse branch, used for pullbacks.
    pub fn inv_branch(&self, i: usize) -> &DiscIsometry {
        &self.inv_branch[i]
    }

    /// One-letter cylinder arc.
    pub fn arc(&self, i: usize) -> &BoundaryArc {
        &self.arc[i]
    }

    /// (inf, sup) of log|f̃′| over the letter's own cylinder, from the
    /// precomputed arc. Equals `log_deriv_range(&[i])` without the
    /// symbol recursion.
    pub fn letter_log_deriv_range(&self, i: usize) -> (f64, f64) {
        self.branch[i].log_derivative_range(&self.arc[i])
    }

    /// Two-letter cylinder arc by the closed form: the pullback of
    /// cylinder `j` through the inverse branch of `i`.
    pub fn pair_arc(&self, i: usize, j: usize) -> BoundaryArc {
        debug_assert!(self.admissible(i, j));
        let pulled = self.inv_branch[i].map_arc(&self.arc[j]);
        debug_assert!(
            self.arc[i].contains_arc(&pulled, 1e-9),
            "pair arc escaped its letter cylinder"
        );
        pulled
    }

    fn symbols_of(&self, letter: Letter) -> Vec<Symbol> {
        match letter {
            Letter::Hyp { gen } => vec![Symbol::Hyp(gen)],
            Letter::Par {
                cusp,
                negative,
                power,
                terminal,
            } => {
                let pidx = 2 * cusp + usize::from(negative);
                let mut syms = vec![Symbol::Par(pidx); power as usize];
                syms.push(Symbol::Hyp(terminal));
                syms
            }
        }
    }

    fn symbol_arc(&self, s: Symbol) -> &BoundaryArc {
        match s {
            Symbol::Par(k) => &self.par_arcs[k],
            Symbol::Hyp(k) => &self.hyp_arcs[k],
        }
    }

    fn symbol_inverse_map(&self, s: Symbol) -> &DiscIsometry {
        // The signed lists interleave inverses, so the inverse map is the
        // stored element at k ^ 1 (bit-exact, no recomputation).
        match s {
            Symbol::Par(k) => self.presentation.par_signed(k ^ 1),
            Symbol::Hyp(k) => self.presentation.hyp_signed(k ^ 1),
        }
    }

    /// Cylinder arc of a letter word by the symbol-level recursion
    /// arc(s_j…) = Δ(s_j) ∩ s_j⁻¹(arc(s_{j+1}…)).
    pub fn cylinder_arc(&self, word: &[usize]) -> Result<BoundaryArc> {
        if word.is_empty() {
            return Err(Error::InadmissibleWord {
                position: 0,
                detail: "empty word".into(),
            });
        }
        let mut symbols = Vec::new();
        for (w, &li) in word.iter().enumerate() {
            if li >= self.letters.len() {
                return Err(Error::InadmissibleWord {
                    position: w,
                    detail: format!("letter index {li} out of range"),
                });
            }
            symbols.extend(self.symbols_of(self.letters[li]));
        }

        let mut arc = *self.symbol_arc(symbols[symbols.len() - 1]);
        for j in (0..symbols.len() - 1).rev() {
            let s = symbols[j];
            if symbols[j + 1] == s.inverse() {
                return Err(Error::InadmissibleWord {
                    position: j,
                    detail: "symbol followed by its inverse".into(),
                });
            }
            let pulled = self.symbol_inverse_map(s).map_arc(&arc);
            arc = self
                .symbol_arc(s)
                .intersect(&pulled)
                .ok_or_else(|| Error::InadmissibleWord {
                    position: j,
                    detail: "pullback misses the symbol arc".into(),
                })?;
        }
        Ok(arc)
    }

    /// Representative point of a cylinder: the midpoint of its arc.
    pub fn rep_point(&self, word: &[usize]) -> Result<f64> {
        Ok(self.cylinder_arc(word)?.midpoint())
    }

    /// (inf, sup) of log|f̃′| of the first letter over the word's cylinder.
    pub fn log_deriv_range(&self, word: &[usize]) -> Result<(f64, f64)> {
        let arc = self.cylinder_arc(word)?;
        Ok(self.branch[word[0]].log_derivative_range(&arc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::normalize_angle;

    fn one_cusp() -> GroupPresentation {
        GroupPresentation::preset("one_cusp").unwrap()
    }

    /// m = 1, n = 2 test presentation: the preset plus a narrower second
    /// pair rotated into the free spans of the arc layout.
    fn one_cusp_two_hyp() -> GroupPresentation {
        let p = one_cusp();
        let s2: f64 = 2.2;
        let base = DiscIsometry::new(
            num_complex::Complex::new(s2.cosh(), 0.0),
            num_complex::Complex::new(0.0, s2.sinh()),
            "h2",
        )
        .unwrap();
        let r = DiscIsometry::rotation(0.63);
        let h2 = DiscIsometry::compose(&DiscIsometry::compose(&r, &base), &r.inverse());
        let h2 = DiscIsometry::new(h2.a, h2.b, "h2").unwrap();
        GroupPresentation::new(p.parabolic().to_vec(), vec![p.hyperbolic()[0].clone(), h2])
            .unwrap()
            .validated()
            .unwrap()
    }

    #[test]
    fn letter_counts_and_indexing() {
        let a = TruncatedAlphabet::build(&one_cusp(), 3).unwrap();
        assert_eq!(a.len(), 2 + 4 * 3);
        let b = TruncatedAlphabet::build(&GroupPresentation::preset("two_cusp").unwrap(), 3).unwrap();
        assert_eq!(b.len(), 2 + 8 * 3);
        let c = TruncatedAlphabet::build(&one_cusp_two_hyp(), 2).unwrap();
        assert_eq!(c.len(), 4 + 8 * 2);

        assert_eq!(a.index_of(Letter::Hyp { gen: 0 }), Some(0));
        for (i, &letter) in a.letters().iter().enumerate() {
            assert_eq!(a.index_of(letter), Some(i), "round trip at {i}");
        }
        assert_eq!(
            a.index_of(Letter::Par {
                cusp: 0,
                negative: false,
                power: 4,
                terminal: 0
            }),
            None,
            "beyond truncation"
        );
    }

    #[test]
    fn tau_and_winding() {
        let a = TruncatedAlphabet::build(&one_cusp(), 5).unwrap();
        for i in 0..a.len() {
            match a.letter(i) {
                Letter::Hyp { .. } => {
                    assert_eq!(a.tau(i), 1);
                    assert_eq!(a.cusp_vector(i), vec![0.0]);
                }
                Letter::Par { power, .. } => {
                    assert_eq!(a.tau(i), power + 1);
                    assert_eq!(a.cusp_vector(i), vec![f64::from(power - 1)]);
                    assert_eq!(a.winding(i, 0), f64::from(power - 1));
                }
            }
        }
    }

    #[test]
    fn branch_maps_compose_terminal_after_block() {
        let p = one_cusp();
        let a = TruncatedAlphabet::build(&p, 4).unwrap();
        let gamma = &p.parabolic()[0];
        let h = &p.hyperbolic()[0];
        let li = a
            .index_of(Letter::Par {
                cusp: 0,
                negative: false,
                power: 3,
                terminal: 0,
            })
            .unwrap();
        // Iterated-composition oracle: h∘γ∘γ∘γ.
        let mut oracle = gamma.clone();
        oracle = DiscIsometry::compose(gamma, &oracle);
        oracle = DiscIsometry::compose(gamma, &oracle);
        oracle = DiscIsometry::compose(h, &oracle);
        let b = a.branch_map(li);
        assert!((b.a - oracle.a).norm() < 1e-13);
        assert!((b.b - oracle.b).norm() < 1e-13);
        // And the branch acts as the symbol sequence on sample points.
        let theta = a.arc(li).midpoint();
        let stepped = h.apply_boundary(
            gamma.apply_boundary(gamma.apply_boundary(gamma.apply_boundary(theta))),
        );
        assert!((b.apply_boundary(theta) - stepped).abs() < 1e-10);
    }

    #[test]
    fn admissibility_rule_and_geometry_agree() {
        for p in [one_cusp(), one_cusp_two_hyp()] {
            let a = TruncatedAlphabet::build(&p, 3).unwrap();
            for i in 0..a.len() {
                let forbidden = a.forbidden_successor(i);
                assert!(matches!(a.letter(forbidden), Letter::Hyp { gen } if gen == a.letter(i).terminal() ^ 1));
                for j in 0..a.len() {
                    let expected = j != forbidden;
                    assert_eq!(a.admissible(i, j), expected);
                    assert_eq!(
                        a.admissible_geometric(i, j),
                        expected,
                        "geometric admissibility mismatch at ({i}, {j})"
                    );
                }
            }
        }
    }

    #[test]
    fn parabolic_letters_follow_everything() {
        let a = TruncatedAlphabet::build(&one_cusp(), 3).unwrap();
        for i in 0..a.len() {
            for j in 0..a.len() {
                if matches!(a.letter(j), Letter::Par { .. }) {
                    assert!(a.admissible(i, j));
                }
            }
        }
    }

    #[test]
    fn cylinder_arc_closed_forms() {
        let p = one_cusp();
        let a = TruncatedAlphabet::build(&p, 9).unwrap();
        // One hyperbolic letter: the full isometric arc.
        let h_arc = p.hyperbolic()[0].isometric_arc().unwrap();
        let got = a.cylinder_arc(&[0]).unwrap();
        assert!((got.start - h_arc.start).abs() < 1e-14);
        assert!((got.length - h_arc.length).abs() < 1e-14);

        // Parabolic letters: recursion equals the pullback γ^{-p}(Δ(h)).
        for power in [1u32, 2, 5, 9] {
            let li = a
                .index_of(Letter::Par {
                    cusp: 0,
                    negative: false,
                    power,
                    terminal: 1,
                })
                .unwrap();
            let rec = a.cylinder_arc(&[li]).unwrap();
            let closed = p.parabolic()[0]
                .pow(power)
                .inverse()
                .map_arc(&p.hyperbolic()[0].inverse().isometric_arc().unwrap());
            assert!(
                (rec.start - closed.start).abs() < 1e-11 && (rec.length - closed.length).abs() < 1e-11,
                "power {power}: {rec:?} vs {closed:?}"
            );
            // Stored letter arc agrees too.
            assert!((a.arc(li).start - closed.start).abs() < 1e-11);
        }
    }

    #[test]
    fn pair_arcs_nest_and_match_recursion() {
        let a = TruncatedAlphabet::build(&one_cusp(), 3).unwrap();
        for i in 0..a.len() {
            for j in 0..a.len() {
                if !a.admissible(i, j) {
                    assert!(a.cylinder_arc(&[i, j]).is_err());
                    continue;
                }
                let rec = a.cylinder_arc(&[i, j]).unwrap();
                let fast = a.pair_arc(i, j);
                assert!(
                    (rec.start - fast.start).abs() < 1e-11
                        && (rec.length - fast.length).abs() < 1e-11,
                    "pair ({i},{j})"
                );
                assert!(a.arc(i).contains_arc(&rec, 1e-9));
                assert!(rec.length < a.arc(i).length);
                let mid = a.rep_point(&[i, j]).unwrap();
                assert!(a.arc(i).contains(mid));
            }
        }
    }

    #[test]
    fn deeper_cylinders_nest() {
        let a = TruncatedAlphabet::build(&one_cusp(), 2).unwrap();
        let word = [2usize, 0, 3];
        assert!(a.admissible(word[0], word[1]) && a.admissible(word[1], word[2]));
        let c1 = a.cylinder_arc(&word[..1]).unwrap();
        let c2 = a.cylinder_arc(&word[..2]).unwrap();
        let c3 = a.cylinder_arc(&word).unwrap();
        assert!(c1.contains_arc(&c2, 1e-10));
        assert!(c2.contains_arc(&c3, 1e-10));
        assert!(c3.length < c2.length && c2.length < c1.length);
    }

    #[test]
    fn inadmissible_words_error() {
        let a = TruncatedAlphabet::build(&one_cusp(), 2).unwrap();
        // Hyp(h) followed by Hyp(h⁻¹).
        let err = a.cylinder_arc(&[0, 1]).unwrap_err();
        assert!(matches!(err, Error::InadmissibleWord { .. }));
        assert!(a.cylinder_arc(&[]).is_err());
        assert!(a.cylinder_arc(&[999]).is_err());
    }

    #[test]
    fn parabolic_arc_lengths_scale_like_p_squared() {
        let p = one_cusp();
        let a = TruncatedAlphabet::build(&p, 200).unwrap();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for power in 20..=200u32 {
            let li = a
                .index_of(Letter::Par {
                    cusp: 0,
                    negative: false,
                    power,
                    terminal: 0,
                })
                .unwrap();
            xs.push(f64::from(power).ln());
            ys.push(a.arc(li).length.ln());
        }
        let slope = least_squares_slope(&xs, &ys);
        assert!((slope + 2.0).abs() < 0.05, "slope = {slope}");
    }

    #[test]
    fn uniform_expansion_on_pair_cylinders() {
        let a = TruncatedAlphabet::build(&one_cusp(), 5).unwrap();
        let mut min_log = f64::INFINITY;
        for i in 0..a.len() {
            for j in 0..a.len() {
                if a.admissible(i, j) {
                    let (lo, _) = a.branch_map(i).log_derivative_range(&a.pair_arc(i, j));
                    min_log = min_log.min(lo);
                }
            }
        }
        assert!(min_log > 0.0, "expansion constant log = {min_log}");
    }

    #[test]
    fn hyperbolic_derivative_bounded_by_presentation_constant() {
        let p = one_cusp_two_hyp();
        let z = p.hyperbolic_derivative_bound();
        let a = TruncatedAlphabet::build(&p, 3).unwrap();
        for i in 0..a.len() {
            if matches!(a.letter(i), Letter::Hyp { .. }) {
                let (lo, hi) = a.log_deriv_range(&[i]).unwrap();
                assert!(lo >= -(z.ln()) - 1e-12 && hi <= z.ln() + 1e-12);
            }
        }
    }

    #[test]
    fn two_cylinder_ranges_shrink_under_refinement() {
        let a = TruncatedAlphabet::build(&one_cusp(), 3).unwrap();
        let mut v2 = 0.0f64;
        let mut v3 = 0.0f64;
        for i in 0..a.len() {
            for j in 0..a.len() {
                if !a.admissible(i, j) {
                    continue;
                }
                let (lo, hi) = a.log_deriv_range(&[i, j]).unwrap();
                v2 = v2.max(hi - lo);
                for k in 0..a.len() {
                    if a.admissible(j, k) {
                        let (lo3, hi3) = a.log_deriv_range(&[i, j, k]).unwrap();
                        v3 = v3.max(hi3 - lo3);
                    }
                }
            }
        }
        assert!(v2.is_finite() && v3 < v2, "V2 = {v2}, V3 = {v3}");
    }

    #[test]
    fn single_connector_between_any_ordered_pair() {
        let a = TruncatedAlphabet::build(&one_cusp(), 5).unwrap();
        for i in 0..a.len() {
            for j in 0..a.len() {
                let linked = (0..a.len()).any(|c| a.admissible(i, c) && a.admissible(c, j));
                assert!(linked, "no connector from {i} to {j}");
            }
        }
    }

    #[test]
    fn rep_points_live_deep_in_their_letter() {
        let a = TruncatedAlphabet::build(&one_cusp(), 4).unwrap();
        // Depth-2 representative points stay clear of the letter arc ends,
        // where the expansion degenerates for hyperbolic letters.
        for i in 0..a.len() {
            for j in 0..a.len() {
                if a.admissible(i, j) {
                    let rep = a.pair_arc(i, j).midpoint();
                    let arc = a.arc(i);
                    let off = normalize_angle(rep - arc.start);
                    assert!(off > 0.0 && off < arc.length);
                }
            }
        }
    }

    fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        cov / var
    }
}
