//! Grid sweeps over named paths: disjointness at every sample, boundary and gluing
//! conditions, and a continuity bound between neighbouring samples.

use std::fmt;

use serde::Serialize;

use super::paths::{
    bottom, delta, gamma, l, phi, phi_lower, phi_upper, r_pair, reflect, top, top_reflected, upper_row, vhat,
    v1_v2, Tri, b, k,
};
use super::{check_disjoint, compose_operad, point_m, CubeConfig, NamedPath, PathId};

pub const DEFAULT_GRID: usize = 64;
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Parameter values of every failing sample, rendered as `t=0.5,s=1`.
    pub failures: Vec<String>,
    /// Largest deviation seen (0 for pass/fail style checks).
    pub max_error: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomotopyReport {
    pub path: String,
    pub grid: usize,
    pub side: f64,
    pub tol: f64,
    pub samples: usize,
    /// Smallest Chebyshev distance between two cube centers over all samples.
    pub min_sep: f64,
    pub checks: Vec<CheckResult>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for HomotopyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "PASS {} {} min_sep={:.6}", self.path, c.name, self.min_sep)?;
            }
            for params in &c.failures {
                writeln!(f, "FAIL {} {} [{}] min_sep={:.6}", self.path, c.name, params, self.min_sep)?;
            }
        }
        Ok(())
    }
}

type Centers = Vec<Vec<f64>>;
type Side = Box<dyn Fn(&[f64]) -> Centers>;
type Domain = [(&'static str, f64, f64)];

fn grid_points(domain: &Domain, g: usize) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::new()];
    for &(_, lo, hi) in domain {
        let mut next = Vec::with_capacity(out.len() * g);
        for prefix in &out {
            for i in 0..g {
                let mut p = prefix.clone();
                p.push(lo + (hi - lo) * i as f64 / (g - 1) as f64);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn render(domain: &Domain, p: &[f64]) -> String {
    domain
        .iter()
        .zip(p)
        .map(|((name, _, _), v)| format!("{name}={v:.6}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn max_diff(a: &Centers, b: &Centers, axes: usize) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(p, q)| p.iter().zip(q).take(axes).map(|(x, y)| (x - y).abs()))
        .fold(0.0, |m, d| if d.is_nan() || m.is_nan() { f64::NAN } else { m.max(d) })
}

fn tri(c: Tri) -> Centers {
    c.iter().map(|p| p.to_vec()).collect()
}

/// Compare `lhs` with `rhs` over a grid of `domain`, on the first `axes` coordinates.
struct Face {
    name: &'static str,
    domain: Vec<(&'static str, f64, f64)>,
    axes: usize,
    lhs: Side,
    rhs: Side,
}

fn face(
    name: &'static str,
    domain: &[(&'static str, f64, f64)],
    axes: usize,
    lhs: impl Fn(&[f64]) -> Centers + 'static,
    rhs: impl Fn(&[f64]) -> Centers + 'static,
) -> Face {
    Face {
        name,
        domain: domain.to_vec(),
        axes,
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

fn run_face(f: &Face, g: usize, tol: f64) -> CheckResult {
    let mut failures = Vec::new();
    let mut max_error: f64 = 0.0;
    for p in grid_points(&f.domain, g) {
        let e = max_diff(&(f.lhs)(&p), &(f.rhs)(&p), f.axes);
        max_error = max_error.max(e);
        // NaN counts as a failure
        if e.is_nan() || e > tol {
            failures.push(render(&f.domain, &p));
        }
    }
    CheckResult {
        name: f.name.to_string(),
        failures,
        max_error,
    }
}

fn m_centers(dim: usize) -> Centers {
    point_m(dim).to_f64().centers()
}

fn left_nested() -> Centers {
    let m = point_m(3);
    compose_operad(&m, &[m.clone(), CubeConfig::identity(3)])
        .expect("m(m,1) is a configuration")
        .to_f64()
        .centers()
}

/// `m(1, m)`, listed in the order the labels `a, b, c` reach it along `δ`.
fn right_nested_relabelled() -> Centers {
    let m = point_m(3);
    let c = compose_operad(&m, &[CubeConfig::identity(3), m.clone()])
        .expect("m(1,m) is a configuration")
        .to_f64()
        .centers();
    vec![c[2].clone(), c[0].clone(), c[1].clone()]
}

fn r_centers(t: f64) -> Centers {
    r_pair(t).iter().map(|[x, y]| vec![*x, *y, 0.5]).collect()
}

fn constant(c: Centers) -> impl Fn(&[f64]) -> Centers {
    move |_| c.clone()
}

const T3: (&str, f64, f64) = ("t", 0.0, 3.0);

fn faces(id: PathId) -> Vec<Face> {
    match id {
        PathId::M => vec![face("centers", &[], 4, |_| m_centers(4), |_| {
            vec![vec![0.3, 0.5, 0.5, 0.5], vec![0.7, 0.5, 0.5, 0.5]]
        })],
        PathId::RaRb => vec![
            face("t=0_is_m", &[], 3, |_| r_centers(0.0), |_| m_centers(3)),
            face("t=1_is_m_swapped", &[], 3, |_| r_centers(1.0), |_| {
                let m = m_centers(3);
                vec![m[1].clone(), m[0].clone()]
            }),
        ],
        PathId::Vhat => {
            let t = [("t", 0.0, 1.0)];
            let s = [("s", 0.0, 1.0)];
            vec![
                face("s=0_is_R", &t, 3, |p| vhat(p[0], 0.0).iter().map(|c| c.to_vec()).collect(), |p| r_centers(p[0])),
                face("s=1_is_R_reversed", &t, 3, |p| vhat(p[0], 1.0).iter().map(|c| c.to_vec()).collect(), |p| {
                    let r = r_centers(1.0 - p[0]);
                    vec![r[1].clone(), r[0].clone()]
                }),
                face("t=0_fixes_xy", &s, 2, |p| vhat(0.0, p[0]).iter().map(|c| c.to_vec()).collect(), |_| m_centers(3)),
                face("t=1_fixes_xy", &s, 2, |p| vhat(1.0, p[0]).iter().map(|c| c.to_vec()).collect(), |_| {
                    let m = m_centers(3);
                    vec![m[1].clone(), m[0].clone()]
                }),
            ]
        }
        PathId::V1V2 => {
            let v = |r: f64, t: f64| -> Centers { v1_v2(r, t).iter().map(|c| c.to_vec()).collect() };
            vec![
                face("r=1_is_R_then_R", &[("t", 0.0, 1.0)], 4, move |p| v(1.0, p[0]), |p| {
                    let t = p[0];
                    let r = if t <= 0.5 { r_centers(2.0 * t) } else { r_centers(2.0 * t - 1.0) };
                    let (first, second) = if t <= 0.5 { (&r[0], &r[1]) } else { (&r[1], &r[0]) };
                    vec![
                        vec![first[0], first[1], 0.5, 0.5],
                        vec![second[0], second[1], 0.5, 0.5],
                    ]
                }),
                face("r=0_is_constant", &[("t", 0.0, 1.0)], 4, move |p| v(0.0, p[0]), |_| {
                    vec![vec![0.5, 0.5, 0.7, 0.5], vec![0.5, 0.5, 0.3, 0.5]]
                }),
                face("t=0_meets_t=1", &[("r", 0.0, 1.0)], 4, move |p| v(p[0], 0.0), move |p| v(p[0], 1.0)),
            ]
        }
        PathId::Delta | PathId::Gamma => {
            let f = if id == PathId::Delta { delta } else { gamma };
            vec![
                face("t=0_is_m(m,1)", &[], 3, move |_| tri(f(0.0)), |_| left_nested()),
                face("t=3_is_m(1,m)", &[], 3, move |_| tri(f(3.0)), |_| right_nested_relabelled()),
            ]
        }
        PathId::H => {
            let s = [("s", 1.0, 2.0)];
            vec![
                face("s=1_is_gamma", &[T3], 3, |p| tri(super::paths::h(p[0], 1.0)), |p| tri(gamma(p[0]))),
                face("s=2_is_delta", &[T3], 3, |p| tri(super::paths::h(p[0], 2.0)), |p| tri(delta(p[0]))),
                face("t=0_fixes_xy", &s, 2, |p| tri(super::paths::h(0.0, p[0])), constant(left_nested())),
                face("t=3_fixes_xy", &s, 2, |p| tri(super::paths::h(3.0, p[0])), constant(right_nested_relabelled())),
            ]
        }
        PathId::L => vec![
            face("s=1_is_Rdot1.a.1Rdot", &[T3], 3, |p| tri(l(p[0], 1.0)), |p| tri(top_reflected(p[0]))),
            face("s=2_is_delta", &[T3], 3, |p| tri(l(p[0], 2.0)), |p| tri(delta(p[0]))),
        ],
        PathId::B => vec![
            face("s=2_is_delta", &[T3], 3, |p| tri(b(p[0], 2.0)), |p| tri(delta(p[0]))),
            face("s=3_is_a.Rdot.a", &[T3], 3, |p| tri(b(p[0], 3.0)), |p| tri(bottom(p[0]))),
        ],
        PathId::T => {
            let th = super::paths::t_hom;
            vec![
                face("s=0_is_R1.a.1R", &[T3], 3, move |p| tri(th(p[0], 0.0)), |p| tri(top(p[0]))),
                face("s=1_is_gamma", &[T3], 3, move |p| tri(th(p[0], 1.0)), |p| tri(gamma(p[0]))),
                face("mirrors_L", &[T3, ("s", 0.0, 1.0)], 3, move |p| tri(th(p[0], p[1])), |p| {
                    tri(reflect(&l(p[0], p[1] + 1.0)))
                }),
            ]
        }
        PathId::MLinear => {
            let mh = super::paths::m_hom;
            vec![
                face("s=1_is_gamma", &[T3], 3, move |p| tri(mh(p[0], 1.0)), |p| tri(gamma(p[0]))),
                face("s=2_is_a.R.a", &[T3], 3, move |p| tri(mh(p[0], 2.0)), |p| tri(reflect(&bottom(p[0])))),
                face("mirrors_B", &[T3, ("s", 1.0, 2.0)], 3, move |p| tri(mh(p[0], p[1])), |p| {
                    tri(reflect(&b(p[0], p[1] + 1.0)))
                }),
            ]
        }
        PathId::K => vec![
            face("s=0_is_R1.a.1R", &[T3], 3, |p| tri(k(p[0], 0.0)), |p| tri(top(p[0]))),
            face("s=2_is_delta", &[T3], 3, |p| tri(k(p[0], 2.0)), |p| tri(delta(p[0]))),
        ],
        PathId::Phi => {
            let tu = [T3, ("u", 0.0, 1.0)];
            vec![
                face("cases_agree_at_s=1", &tu, 3, |p| tri(phi_lower(p[0], 1.0, p[1])), |p| {
                    tri(phi_upper(p[0], 1.0, p[1]))
                }),
                face("u=1_is_K", &[T3, ("s", 0.0, 2.0)], 3, |p| tri(phi(p[0], p[1], 1.0)), |p| tri(k(p[0], p[1]))),
                face("u=0_is_L_on_s_in_[1,2]", &[T3, ("s", 1.0, 2.0)], 3, |p| tri(phi(p[0], p[1], 0.0)), |p| {
                    tri(l(p[0], p[1]))
                }),
                face("u=0_is_flipped_top_on_s_in_[0,1]", &[T3, ("s", 0.0, 1.0)], 3, |p| tri(phi(p[0], p[1], 0.0)), |p| {
                    tri(upper_row(p[0], p[1]))
                }),
                face("flipped_top_runs_R1.a.1R_to_Rdot1.a.1Rdot", &[T3], 3, |p| {
                    let (a, b) = (upper_row(p[0], 0.0), upper_row(p[0], 1.0));
                    tri(a).into_iter().chain(tri(b)).collect()
                }, |p| tri(top(p[0])).into_iter().chain(tri(top_reflected(p[0]))).collect()),
                face("s=0_is_R1.a.1R", &tu, 3, |p| tri(phi(p[0], 0.0, p[1])), |p| tri(top(p[0]))),
                face("s=2_is_delta_in_xy", &tu, 2, |p| tri(phi(p[0], 2.0, p[1])), |p| tri(delta(p[0]))),
            ]
        }
    }
}

/// Bound on how far centers may move per unit of each parameter, plus a square-root term
/// for the `√(1 - r²)` coordinate of `v1_v2`.
fn speed(id: PathId) -> (&'static [f64], f64) {
    match id {
        PathId::M => (&[], 0.0),
        PathId::RaRb => (&[0.7], 0.0),
        PathId::Vhat => (&[0.7, 0.8], 0.0),
        PathId::V1V2 => (&[0.2, 1.3], 0.2),
        PathId::Delta | PathId::Gamma => (&[0.3], 0.0),
        PathId::H => (&[0.3, 0.8], 0.0),
        PathId::L | PathId::B | PathId::T | PathId::MLinear => (&[0.7, 1.0], 0.0),
        PathId::K => (&[0.7, 2.0], 0.0),
        PathId::Phi => (&[0.7, 3.0, 3.0], 0.0),
    }
}

fn chebyshev_min_sep(c: &Centers) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let d = c[i].iter().zip(&c[j]).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            best = best.min(d);
        }
    }
    best
}

/// Sweep `path` over a uniform grid with `grid` points per parameter (at least 2).
pub fn verify_homotopy(path: &NamedPath, grid: usize, tol: f64) -> HomotopyReport {
    let grid = grid.max(2);
    let id = path.id;
    let domain = id.domain();
    let points = grid_points(domain, grid);
    let centers: Vec<Centers> = points.iter().map(|p| id.centers(p)).collect();

    let mut disjoint = Vec::new();
    let mut min_sep = f64::INFINITY;
    for (p, c) in points.iter().zip(&centers) {
        min_sep = min_sep.min(chebyshev_min_sep(c));
        let ok = path.eval(p).map(|cfg| check_disjoint(&cfg)).unwrap_or(false);
        if !ok {
            disjoint.push(render(domain, p));
        }
    }
    let mut checks = vec![CheckResult {
        name: "disjoint".into(),
        failures: disjoint,
        max_error: 0.0,
    }];
    checks.extend(faces(id).iter().map(|f| run_face(f, grid, tol)));

    if !domain.is_empty() {
        let (lips, root) = speed(id);
        let mut failures = Vec::new();
        let mut worst: f64 = 0.0;
        let axes = id.dim();
        // points are laid out with the last parameter varying fastest
        for (idx, p) in points.iter().enumerate() {
            let mut stride = 1;
            for axis in (0..domain.len()).rev() {
                let digit = (idx / stride) % grid;
                if digit + 1 < grid {
                    let (_, lo, hi) = domain[axis];
                    let h = (hi - lo) / (grid - 1) as f64;
                    let bound = lips[axis] * h + root * (2.0 * h).sqrt() + tol;
                    let e = max_diff(&centers[idx], &centers[idx + stride], axes);
                    worst = worst.max(e / bound);
                    if e > bound {
                        failures.push(format!("{} -> {}", render(domain, p), domain[axis].0));
                    }
                }
                stride *= grid;
            }
        }
        checks.push(CheckResult {
            name: "continuity".into(),
            failures,
            max_error: worst,
        });
    }

    HomotopyReport {
        path: id.name().to_string(),
        grid,
        side: path.side,
        tol,
        samples: points.len(),
        min_sep,
        checks,
    }
}
