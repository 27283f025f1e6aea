//! Coloured point patches and SVG output: square and hexagonal lattice
//! patches for the discrete rings `n = 3, 4`, and Ammann–Beenker vertex
//! patches cut from `Z[ξ_8]` by projection to an octagonal window.

use std::sync::Arc;

use num_complex::Complex64;

use crate::cyclotomic::{CycInt, CyclotomicRing};
use crate::error::{Error, Result};
use crate::ideal::CosetTable;
use crate::scalar::Scalar;

/// Hard cap on rendered points.
pub const MAX_POINTS: usize = 100_000;

/// Default window circumradius: the octagonal shadow of the unit 4-cube,
/// which reproduces the Ammann–Beenker vertex set at edge length 1.
/// Numerically `cos(π/8) + sin(π/8)`.
pub fn default_window_radius() -> f64 {
    (1.0 + std::f64::consts::FRAC_1_SQRT_2).sqrt()
}

/// Regular octagonal acceptance window, centred at the origin with vertices
/// at angles `(2k+1)π/8` (so edge normals sit at angles `kπ/4`).
#[derive(Debug, Clone, Copy)]
pub struct Window {
    circumradius: f64,
}

impl Window {
    pub fn new(circumradius: f64) -> Self {
        assert!(circumradius > 0.0, "window must have positive size");
        Window { circumradius }
    }

    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    fn apothem(&self) -> f64 {
        self.circumradius * (std::f64::consts::PI / 8.0).cos()
    }

    /// Strict interior test: points within `1e−12` of the boundary are
    /// treated as outside, so membership is never decided by noise.
    pub fn contains(&self, p: Complex64) -> bool {
        let a = self.apothem();
        for k in 0..8 {
            let angle = k as f64 * std::f64::consts::FRAC_PI_4;
            let dot = p.re * angle.cos() + p.im * angle.sin();
            if dot >= a - 1e-12 {
                return false;
            }
        }
        true
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::new(default_window_radius())
    }
}

/// Cell geometry used when drawing a patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    /// Unit squares (square lattice, `n = 4`).
    Square,
    /// Hexagonal Voronoi cells (triangular lattice, `n = 3`).
    Hexagon,
    /// Dots (quasiperiodic vertex sets).
    Dot,
}

/// One coloured point of a patch.
#[derive(Debug, Clone)]
pub struct PatchPoint<T: Scalar> {
    pub element: CycInt<T>,
    pub position: Complex64,
    pub colour: usize,
}

/// A finite coloured point set ready for rendering.
#[derive(Debug, Clone)]
pub struct Patch<T: Scalar> {
    pub points: Vec<PatchPoint<T>>,
    pub radius: f64,
    pub cell: CellKind,
}

impl<T: Scalar> Patch<T> {
    /// Colours actually present, deduplicated.
    pub fn colours_used(&self) -> Vec<usize> {
        let mut cs: Vec<usize> = self.points.iter().map(|p| p.colour).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }
}

/// All module points within `radius`, coloured by the coset table.
///
/// Only `n = 3` and `n = 4` give discrete planar modules; all other rings
/// are dense in the plane and are rejected.
pub fn lattice_patch<T: Scalar>(table: &CosetTable<T>, radius: f64) -> Result<Patch<T>> {
    let ring = table.ideal().ring().clone();
    let n = ring.n();
    if n != 3 && n != 4 {
        return Err(Error::UnsupportedRing {
            n,
            reason: "only n = 3, 4 are discrete in the plane",
        });
    }
    assert!(radius >= 0.0);
    let bound = radius.ceil() as i64 + 1;
    let mut points = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let z: CycInt<T> = ring.element_from_i64(&[a, b]).expect("two coefficients");
            let pos = z.embedding(1).expect("k=1 is coprime");
            if pos.norm() <= radius + 1e-12 {
                let colour = table.colour_of(&z);
                points.push(PatchPoint {
                    element: z,
                    position: pos,
                    colour,
                });
            }
        }
    }
    if points.len() > MAX_POINTS {
        return Err(Error::TooManyPoints {
            count: points.len(),
            limit: MAX_POINTS,
        });
    }
    points.sort_by(sort_points);
    Ok(Patch {
        points,
        radius,
        cell: if n == 4 {
            CellKind::Square
        } else {
            CellKind::Hexagon
        },
    })
}

/// The cut-and-project vertex set: all `z ∈ Z[ξ_8]` with physical embedding
/// within `radius` whose star image (the Galois conjugate `ξ ↦ ξ³`) falls in
/// the window. The search box `|coeffs| ≤ ⌈radius⌉ + ⌈ρ⌉` covers every
/// candidate, since both embeddings bound each coefficient.
pub fn ammann_beenker_vertices<T: Scalar>(
    ring: &Arc<CyclotomicRing>,
    window: &Window,
    radius: f64,
) -> Result<Vec<CycInt<T>>> {
    if ring.n() != 8 {
        return Err(Error::UnsupportedRing {
            n: ring.n(),
            reason: "the octagonal cut-and-project construction lives in Z[ξ_8]",
        });
    }
    assert!(radius >= 0.0);
    let bound = radius.ceil() as i64 + window.circumradius().ceil() as i64;
    let mut out = Vec::new();
    let mut coeffs = [-bound, -bound, -bound, -bound];
    'boxes: loop {
        let z: CycInt<T> = ring.element_from_i64(&coeffs).expect("four coefficients");
        let pos = z.embedding(1).expect("k=1 embedding");
        if pos.norm() <= radius + 1e-12 {
            let star = z
                .galois(3)
                .expect("gcd(3,8)=1")
                .embedding(1)
                .expect("embedding");
            if window.contains(star) {
                out.push(z);
            }
        }
        let mut i = 0;
        loop {
            if i == 4 {
                break 'boxes;
            }
            coeffs[i] += 1;
            if coeffs[i] <= bound {
                break;
            }
            coeffs[i] = -bound;
            i += 1;
        }
    }
    out.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    Ok(out)
}

/// Colours an Ammann–Beenker vertex set by the given coset table.
pub fn ammann_beenker_patch<T: Scalar>(
    table: &CosetTable<T>,
    window: &Window,
    radius: f64,
) -> Result<Patch<T>> {
    let vertices = ammann_beenker_vertices::<T>(table.ideal().ring(), window, radius)?;
    if vertices.len() > MAX_POINTS {
        return Err(Error::TooManyPoints {
            count: vertices.len(),
            limit: MAX_POINTS,
        });
    }
    let points = vertices
        .into_iter()
        .map(|z| {
            let position = z.embedding(1).expect("k=1 embedding");
            let colour = table.colour_of(&z);
            PatchPoint {
                element: z,
                position,
                colour,
            }
        })
        .collect();
    Ok(Patch {
        points,
        radius,
        cell: CellKind::Dot,
    })
}

fn sort_points<T: Scalar>(a: &PatchPoint<T>, b: &PatchPoint<T>) -> std::cmp::Ordering {
    a.element.coeffs().cmp(b.element.coeffs())
}

/// Default 18-colour palette; colour indices beyond it cycle.
pub const PALETTE: [&str; 18] = [
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377", "#bbbbbb", "#e69f00",
    "#56b4e9", "#009e73", "#f0e442", "#0072b2", "#d55e00", "#cc79a7", "#882255", "#44aa99",
    "#999933", "#dddddd",
];

pub fn palette_colour(palette: &[&str], colour: usize) -> String {
    palette[(colour - 1) % palette.len()].to_string()
}

fn fmt(x: f64) -> String {
    // fixed decimals keep the output byte-stable across runs
    format!("{:.4}", x)
}

/// Renders a patch as an SVG document string; one element per point,
/// deterministic order, viewBox fitted to the radius.
pub fn render_svg<T: Scalar>(patch: &Patch<T>, palette: &[&str]) -> Result<String> {
    if patch.points.len() > MAX_POINTS {
        return Err(Error::TooManyPoints {
            count: patch.points.len(),
            limit: MAX_POINTS,
        });
    }
    let pad = 1.0;
    let r = patch.radius + pad;
    let mut svg = String::with_capacity(128 + 96 * patch.points.len());
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt(-r),
        fmt(-r),
        fmt(2.0 * r),
        fmt(2.0 * r)
    ));
    for p in &patch.points {
        let fill = palette_colour(palette, p.colour);
        let (x, y) = (p.position.re, -p.position.im);
        match patch.cell {
            CellKind::Square => {
                svg.push_str(&format!(
                    "<rect x=\"{}\" y=\"{}\" width=\"1\" height=\"1\" fill=\"{}\"/>\n",
                    fmt(x - 0.5),
                    fmt(y - 0.5),
                    fill
                ));
            }
            CellKind::Hexagon => {
                let rad = 1.0 / 3f64.sqrt();
                let mut pts = String::new();
                for k in 0..6 {
                    let ang = std::f64::consts::FRAC_PI_6 + k as f64 * std::f64::consts::FRAC_PI_3;
                    if k > 0 {
                        pts.push(' ');
                    }
                    pts.push_str(&format!(
                        "{},{}",
                        fmt(x + rad * ang.cos()),
                        fmt(y + rad * ang.sin())
                    ));
                }
                svg.push_str(&format!(
                    "<polygon points=\"{}\" fill=\"{}\"/>\n",
                    pts, fill
                ));
            }
            CellKind::Dot => {
                svg.push_str(&format!(
                    "<circle cx=\"{}\" cy=\"{}\" r=\"0.18\" fill=\"{}\"/>\n",
                    fmt(x),
                    fmt(y),
                    fill
                ));
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Renders a patch into an SVG file.
pub fn render_to_file<T: Scalar>(patch: &Patch<T>, palette: &[&str], path: &str) -> Result<()> {
    let svg = render_svg(patch, palette)?;
    std::fs::write(path, svg)?;
    Ok(())
}
