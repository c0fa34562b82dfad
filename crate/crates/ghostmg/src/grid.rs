//! Uniform grid with an embedded interface, and the two-sided field
//! containers shared by every solver component.
//!
//! The domain [0,1] is split at an interface `alpha` into a left subdomain
//! [0,alpha) and a right subdomain (alpha,1]. Nodes are x_j = j*h with
//! h = 1/(N+1). Each side owns one ghost node just past the interface:
//! the left side stores values on 0..=J+1 (ghost at J+1), the right side
//! on J..=N+1 (ghost at J), so nodes J and J+1 carry one value per side.

use crate::error::{Error, Result};

/// Uniform grid metadata: N interior nodes, spacing h = 1/(N+1), interface
/// position `alpha` with x_J <= alpha < x_{J+1} and theta = alpha/h - J.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    n: usize,
    h: f64,
    alpha: f64,
    j: usize,
    theta: f64,
}

impl GridSpec {
    /// Build a grid with `n` interior nodes (n+1 intervals) and interface `alpha`.
    ///
    /// Rejects alpha outside (0,1) and interfaces so close to a boundary that a
    /// subdomain cannot host the quadratic interface stencil (J < 2 or J > N-2).
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) || !alpha.is_finite() {
            return Err(Error::AlphaOutOfRange { alpha });
        }
        if n < 7 {
            return Err(Error::GridTooSmall { n });
        }
        let h = 1.0 / (n as f64 + 1.0);
        let ratio = alpha / h;
        let j = ratio.floor() as i64;
        let max = n as i64 - 2;
        if j < 2 || j > max {
            return Err(Error::SubdomainTooSmall { j, max });
        }
        let j = j as usize;
        let theta = ratio - j as f64;
        Ok(Self { n, h, alpha, j, theta })
    }

    /// Build from the interval count N+1 (the quantity tabulated in reports).
    pub fn from_intervals(intervals: usize, alpha: f64) -> Result<Self> {
        if intervals < 8 {
            return Err(Error::GridTooSmall {
                n: intervals.saturating_sub(1),
            });
        }
        Self::new(intervals - 1, alpha)
    }

    /// Number of interior nodes N.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of intervals N+1.
    pub fn intervals(&self) -> usize {
        self.n + 1
    }

    /// Grid spacing h = 1/(N+1).
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Interface position.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Index J of the last node at or left of the interface.
    pub fn j(&self) -> usize {
        self.j
    }

    /// Fractional interface offset theta = alpha/h - J in [0,1).
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Node coordinate x_j = j*h.
    pub fn x(&self, j: usize) -> f64 {
        j as f64 * self.h
    }

    /// Total number of unknowns N+4 (both sides including ghosts).
    pub fn n_unknowns(&self) -> usize {
        self.n + 4
    }

    /// Grid for the mirrored problem x -> 1-x.
    pub fn mirrored(&self) -> Result<Self> {
        Self::new(self.n, 1.0 - self.alpha)
    }
}

/// Element of S(Omega_h): left values on nodes 0..=J+1 (ghost at J+1),
/// right values on nodes J..=N+1 (ghost at J). Indexing is by global node
/// index; the two sides overlap on J and J+1 with independent storage.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedField {
    j: usize,
    n: usize,
    left: Vec<f64>,
    right: Vec<f64>,
}

impl TwoSidedField {
    pub fn zeros(grid: &GridSpec) -> Self {
        Self {
            j: grid.j(),
            n: grid.n(),
            left: vec![0.0; grid.j() + 2],
            right: vec![0.0; grid.n() + 2 - grid.j()],
        }
    }

    /// Fill from per-side functions of the node coordinate, ghosts included.
    pub fn from_fns(
        grid: &GridSpec,
        mut left: impl FnMut(f64) -> f64,
        mut right: impl FnMut(f64) -> f64,
    ) -> Self {
        let mut f = Self::zeros(grid);
        for j in 0..=grid.j() + 1 {
            f.set_left(j, left(grid.x(j)));
        }
        for j in grid.j()..=grid.n() + 1 {
            f.set_right(j, right(grid.x(j)));
        }
        f
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Left value at global node index j in 0..=J+1.
    #[inline]
    pub fn left(&self, j: usize) -> f64 {
        self.left[j]
    }

    /// Right value at global node index j in J..=N+1.
    #[inline]
    pub fn right(&self, j: usize) -> f64 {
        self.right[j - self.j]
    }

    #[inline]
    pub fn set_left(&mut self, j: usize, v: f64) {
        self.left[j] = v;
    }

    #[inline]
    pub fn set_right(&mut self, j: usize, v: f64) {
        self.right[j - self.j] = v;
    }

    /// Left ghost value u^L_{J+1}.
    pub fn left_ghost(&self) -> f64 {
        self.left[self.j + 1]
    }

    /// Right ghost value u^R_J.
    pub fn right_ghost(&self) -> f64 {
        self.right[0]
    }

    pub fn left_slice(&self) -> &[f64] {
        &self.left
    }

    pub fn right_slice(&self) -> &[f64] {
        &self.right
    }

    pub fn left_slice_mut(&mut self) -> &mut [f64] {
        &mut self.left
    }

    pub fn right_slice_mut(&mut self) -> &mut [f64] {
        &mut self.right
    }

    /// Max absolute value over every stored entry (ghosts included).
    pub fn max_abs(&self) -> f64 {
        self.left
            .iter()
            .chain(self.right.iter())
            .fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Max absolute difference against another field on the same grid.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.j, other.j);
        debug_assert_eq!(self.n, other.n);
        self.left
            .iter()
            .zip(&other.left)
            .chain(self.right.iter().zip(&other.right))
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }

    /// In-place sum with another field (used for coarse-grid corrections).
    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.j, other.j);
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.left.iter_mut().zip(&other.left) {
            *a += b;
        }
        for (a, b) in self.right.iter_mut().zip(&other.right) {
            *a += b;
        }
    }
}

/// Element of the interior space: left values on nodes 1..=J, right values
/// on nodes J+1..=N. The two ranges are disjoint and cover 1..=N; this is
/// where source terms and interior defects live.
#[derive(Debug, Clone, PartialEq)]
pub struct InteriorField {
    j: usize,
    n: usize,
    left: Vec<f64>,
    right: Vec<f64>,
}

impl InteriorField {
    pub fn zeros(grid: &GridSpec) -> Self {
        Self {
            j: grid.j(),
            n: grid.n(),
            left: vec![0.0; grid.j()],
            right: vec![0.0; grid.n() - grid.j()],
        }
    }

    pub fn from_fns(
        grid: &GridSpec,
        mut left: impl FnMut(f64) -> f64,
        mut right: impl FnMut(f64) -> f64,
    ) -> Self {
        let mut f = Self::zeros(grid);
        for j in 1..=grid.j() {
            f.set_left(j, left(grid.x(j)));
        }
        for j in grid.j() + 1..=grid.n() {
            f.set_right(j, right(grid.x(j)));
        }
        f
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Left value at global node index j in 1..=J.
    #[inline]
    pub fn left(&self, j: usize) -> f64 {
        self.left[j - 1]
    }

    /// Right value at global node index j in J+1..=N.
    #[inline]
    pub fn right(&self, j: usize) -> f64 {
        self.right[j - self.j - 1]
    }

    #[inline]
    pub fn set_left(&mut self, j: usize, v: f64) {
        self.left[j - 1] = v;
    }

    #[inline]
    pub fn set_right(&mut self, j: usize, v: f64) {
        self.right[j - self.j - 1] = v;
    }

    /// Max absolute value over all interior entries.
    pub fn max_abs(&self) -> f64 {
        self.left
            .iter()
            .chain(self.right.iter())
            .fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

/// Complete problem data: coefficient field (ghosts populated), source term,
/// Dirichlet boundary values and the two interface jump values.
#[derive(Debug, Clone)]
pub struct ProblemData {
    pub grid: GridSpec,
    pub gamma: TwoSidedField,
    pub f: InteriorField,
    pub g0: f64,
    pub g1: f64,
    pub g_d: f64,
    pub g_n: f64,
}

impl ProblemData {
    /// Validates positivity of the coefficient on both sides (ghosts included).
    pub fn new(
        grid: GridSpec,
        gamma: TwoSidedField,
        f: InteriorField,
        g0: f64,
        g1: f64,
        g_d: f64,
        g_n: f64,
    ) -> Result<Self> {
        for j in 0..=grid.j() + 1 {
            if gamma.left(j) <= 0.0 {
                return Err(Error::NonPositiveGamma {
                    side: "left",
                    index: j,
                    value: gamma.left(j),
                });
            }
        }
        for j in grid.j()..=grid.n() + 1 {
            if gamma.right(j) <= 0.0 {
                return Err(Error::NonPositiveGamma {
                    side: "right",
                    index: j,
                    value: gamma.right(j),
                });
            }
        }
        Ok(Self {
            grid,
            gamma,
            f,
            g0,
            g1,
            g_d,
            g_n,
        })
    }

    /// The problem under the reflection x -> 1-x: sides swapped and index-reversed,
    /// boundary values exchanged, g_D negated, g_N unchanged (both the jump
    /// orientation and the derivative sign flip, so the flux jump is invariant).
    ///
    /// When the interface sits exactly on a node (theta = 0) the overlap
    /// structure is asymmetric: one ghost value has no mirror source and is
    /// re-synthesized by linear extrapolation, and the interface node keeps
    /// its stored one-sided sample.
    pub fn mirrored(&self) -> Result<Self> {
        let g = self.grid;
        let mg = g.mirrored()?;
        let (n, oj, mj) = (g.n(), g.j(), mg.j());

        let mut gamma = TwoSidedField::zeros(&mg);
        // new left nodes 0..=J'+1 <- old right at N+1-j', reversed
        for j in 0..=mj + 1 {
            let s = n + 1 - j;
            if s >= oj {
                gamma.set_left(j, self.gamma.right(s));
            } else {
                // theta=0 overhang: extrapolate past the already-mirrored values
                let v = 2.0 * gamma.left(j - 1) - gamma.left(j - 2);
                gamma.set_left(j, v);
            }
        }
        // new right nodes J'..=N+1 <- old left at N+1-j', reversed
        for j in mj..=n + 1 {
            let s = n + 1 - j;
            gamma.set_right(j, self.gamma.left(s));
        }

        let mut f = InteriorField::zeros(&mg);
        for j in 1..=mj {
            let s = n + 1 - j;
            if s >= oj + 1 {
                f.set_left(j, self.f.right(s));
            } else {
                // theta=0: the interface node's sample crosses sides
                f.set_left(j, self.f.left(s));
            }
        }
        for j in mj + 1..=n {
            let s = n + 1 - j;
            f.set_right(j, self.f.left(s));
        }

        ProblemData::new(mg, gamma, f, self.g1, self.g0, -self.g_d, self.g_n)
    }
}

/// Mirror a solution-like field to the grid of the mirrored problem.
/// Ghost entries without a mirror source are filled by linear extrapolation.
pub fn mirror_field(u: &TwoSidedField, grid: &GridSpec, mirrored: &GridSpec) -> TwoSidedField {
    let (n, oj, mj) = (grid.n(), grid.j(), mirrored.j());
    let mut out = TwoSidedField::zeros(mirrored);
    for j in 0..=mj + 1 {
        let s = n + 1 - j;
        if s >= oj {
            out.set_left(j, u.right(s));
        } else {
            out.set_left(j, 2.0 * out.left(j - 1) - out.left(j - 2));
        }
    }
    for j in mj..=n + 1 {
        out.set_right(j, u.left(n + 1 - j));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grid_example_forced_arithmetic() {
        // 0.343 * 64 = 21.952
        let g = GridSpec::new(63, 0.343).unwrap();
        assert_eq!(g.intervals(), 64);
        assert_abs_diff_eq!(g.h(), 1.0 / 64.0);
        assert_eq!(g.j(), 21);
        assert_abs_diff_eq!(g.theta(), 0.952, epsilon = 1e-12);

        // 0.743 * 64 = 47.552
        let g = GridSpec::new(63, 0.743).unwrap();
        assert_eq!(g.j(), 47);
        assert_abs_diff_eq!(g.theta(), 0.552, epsilon = 1e-12);
    }

    #[test]
    fn grid_rejects_small_subdomains() {
        assert!(GridSpec::new(3, 0.5).is_err());
        assert!(GridSpec::new(63, 1.5).is_err());
        assert!(GridSpec::new(63, 0.0).is_err());
        assert!(GridSpec::new(63, 0.01).is_err()); // J = 0
        assert!(GridSpec::new(63, 0.999).is_err()); // J = N
    }

    #[test]
    fn grid_node_theta_roundtrip() {
        let n = 63;
        let h = 1.0 / 64.0;
        for j in 3..=60 {
            for &theta in &[0.0, 0.25, 0.5, 0.75, 0.999] {
                let alpha = (j as f64 + theta) * h;
                let g = GridSpec::new(n, alpha).unwrap();
                assert_eq!(g.j(), j, "alpha={alpha}");
                assert_abs_diff_eq!(g.theta(), theta, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn field_overlap_is_independent() {
        let g = GridSpec::new(63, 0.343).unwrap();
        let mut u = TwoSidedField::zeros(&g);
        u.set_left(g.j(), 1.0);
        u.set_left(g.j() + 1, 2.0);
        u.set_right(g.j(), 3.0);
        u.set_right(g.j() + 1, 4.0);
        assert_eq!(u.left(g.j()), 1.0);
        assert_eq!(u.left_ghost(), 2.0);
        assert_eq!(u.right_ghost(), 3.0);
        assert_eq!(u.right(g.j() + 1), 4.0);
        assert_eq!(u.left_slice().len(), g.j() + 2);
        assert_eq!(u.right_slice().len(), g.n() + 2 - g.j());
    }

    #[test]
    fn interior_ranges_disjoint_cover() {
        let g = GridSpec::new(63, 0.343).unwrap();
        let f = InteriorField::from_fns(&g, |x| x, |x| 10.0 + x);
        for j in 1..=g.j() {
            assert_abs_diff_eq!(f.left(j), g.x(j));
        }
        for j in g.j() + 1..=g.n() {
            assert_abs_diff_eq!(f.right(j), 10.0 + g.x(j));
        }
    }

    fn sample_problem(n: usize, alpha: f64) -> ProblemData {
        let g = GridSpec::new(n, alpha).unwrap();
        let gamma = TwoSidedField::from_fns(&g, |x| 3.0 + x, |x| 10.0 - x);
        let f = InteriorField::from_fns(&g, |x| x * x, |x| 1.0 - x);
        ProblemData::new(g, gamma, f, 0.5, -0.25, 1.5, -2.0).unwrap()
    }

    #[test]
    fn mirror_maps_example1_alpha() {
        let p = sample_problem(63, 0.343);
        let m = p.mirrored().unwrap();
        assert_abs_diff_eq!(m.grid.alpha(), 0.657, epsilon = 1e-15);
        assert_eq!(m.grid.j(), 42);
        // sides swapped and reversed: gamma'^L(x) = gamma^R(1-x)
        for j in 0..=m.grid.j() {
            assert_eq!(m.gamma.left(j), p.gamma.right(p.grid.n() + 1 - j));
        }
        assert_eq!(m.g0, p.g1);
        assert_eq!(m.g1, p.g0);
        assert_eq!(m.g_d, -p.g_d);
        assert_eq!(m.g_n, p.g_n);
    }

    #[test]
    fn mirror_twice_is_identity_on_dyadic_alpha() {
        // alpha with exactly representable complement: every scalar returns bit-exactly
        for &alpha in &[0.25, 0.375, 0.34375, 0.5, 0.65625, 0.8125] {
            let p = sample_problem(63, alpha);
            let back = p.mirrored().unwrap().mirrored().unwrap();
            assert_eq!(back.grid.alpha(), p.grid.alpha());
            assert_eq!(back.grid.j(), p.grid.j());
            assert_eq!(back.gamma, p.gamma);
            assert_eq!(back.f, p.f);
            assert_eq!(back.g0, p.g0);
            assert_eq!(back.g1, p.g1);
            assert_eq!(back.g_d, p.g_d);
            assert_eq!(back.g_n, p.g_n);
        }
    }

    #[test]
    fn mirror_fixed_point_for_symmetric_problem() {
        // alpha = 0.5 on an even interval count puts theta = 0 and the problem
        // symmetric under mirroring when the data are symmetric.
        // theta = 0 here, so the interface node carries one-sided samples;
        // a constant coefficient keeps the problem a true fixed point while
        // the quadratic source still exercises the index reversal (x*(1-x)
        // is exact dyadic arithmetic on a 64-interval grid).
        let g = GridSpec::new(63, 0.5).unwrap();
        let gamma = TwoSidedField::from_fns(&g, |_| 1.0e9 + 7.0, |_| 1.0e9 + 7.0);
        let f = InteriorField::from_fns(&g, |x| x * (1.0 - x), |x| x * (1.0 - x));
        let p = ProblemData::new(g, gamma, f, 2.0, 2.0, 0.0, 1.0).unwrap();
        let m = p.mirrored().unwrap();
        assert_eq!(m.grid.j(), p.grid.j());
        assert_eq!(m.gamma, p.gamma);
        assert_eq!(m.f, p.f);
        assert_eq!(m.g0, p.g0);
        assert_eq!(m.g1, p.g1);
        assert_eq!(m.g_d, 0.0);
        assert_eq!(m.g_n, p.g_n);
    }
}
