//! Computable varieties: projective spaces and Hirzebruch surfaces.
//!
//! Both are toric, so every complete linear system has a basis of lattice
//! points and multiplication of sections is addition of lattice points.
//! Points are exponent vectors in `Z^{n+1}` on `P^n` and points `(x, y)` of
//! the polygon `0 <= x <= a, 0 <= y <= b - e*x` on `F_e`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Result, SyzygyError};

/// A variety with monomial section spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceModel {
    ProjectiveSpace { n: u32 },
    Hirzebruch { e: u32 },
}

/// A line bundle in the Picard lattice of a [`SurfaceModel`].
///
/// `Hyperplane(d)` is `dH` on `P^n`; `Ruled(a, b)` is `aC_0 + bf` on `F_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisorClass {
    Hyperplane(i64),
    Ruled(i64, i64),
}

pub type LatticePoint = Vec<i32>;

impl SurfaceModel {
    pub fn projective(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(SyzygyError::InvalidModel("P^n needs n >= 1".into()));
        }
        Ok(SurfaceModel::ProjectiveSpace { n })
    }

    pub fn hirzebruch(e: u32) -> Self {
        SurfaceModel::Hirzebruch { e }
    }

    pub fn dimension(&self) -> usize {
        match *self {
            SurfaceModel::ProjectiveSpace { n } => n as usize,
            SurfaceModel::Hirzebruch { .. } => 2,
        }
    }

    pub fn is_surface(&self) -> bool {
        self.dimension() == 2
    }

    /// Number of coordinates of a lattice point (and of a multidegree).
    pub fn lattice_rank(&self) -> usize {
        match *self {
            SurfaceModel::ProjectiveSpace { n } => n as usize + 1,
            SurfaceModel::Hirzebruch { .. } => 2,
        }
    }

    /// Checks that `class` lives in this model's Picard lattice.
    pub fn check(&self, class: &DivisorClass) -> Result<()> {
        match (self, class) {
            (SurfaceModel::ProjectiveSpace { .. }, DivisorClass::Hyperplane(_))
            | (SurfaceModel::Hirzebruch { .. }, DivisorClass::Ruled(..)) => Ok(()),
            _ => Err(SyzygyError::ModelMismatch { model: self.to_string(), class: class.to_string() }),
        }
    }

    pub fn is_base_point_free(&self, class: &DivisorClass) -> bool {
        match (*self, *class) {
            (SurfaceModel::ProjectiveSpace { .. }, DivisorClass::Hyperplane(d)) => d >= 0,
            (SurfaceModel::Hirzebruch { e }, DivisorClass::Ruled(a, b)) => a >= 0 && b >= a * e as i64,
            _ => false,
        }
    }

    pub fn is_ample(&self, class: &DivisorClass) -> bool {
        match (*self, *class) {
            (SurfaceModel::ProjectiveSpace { .. }, DivisorClass::Hyperplane(d)) => d >= 1,
            (SurfaceModel::Hirzebruch { e }, DivisorClass::Ruled(a, b)) => a >= 1 && b > a * e as i64,
            _ => false,
        }
    }

    /// Parses a bundle in the grammar `<d>` (on `P^n`) or `<a>,<b>` (on `F_e`).
    pub fn parse_class(&self, s: &str) -> Result<DivisorClass> {
        let bad = || SyzygyError::Parse(format!("bad bundle '{s}' for {self}"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        match (self, parts.as_slice()) {
            (SurfaceModel::ProjectiveSpace { .. }, [d]) => Ok(DivisorClass::Hyperplane(d.parse().map_err(|_| bad())?)),
            (SurfaceModel::Hirzebruch { .. }, [a, b]) => {
                Ok(DivisorClass::Ruled(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceModel::ProjectiveSpace { n } => write!(f, "P:{n}"),
            SurfaceModel::Hirzebruch { e } => write!(f, "F:{e}"),
        }
    }
}

impl FromStr for SurfaceModel {
    type Err = SyzygyError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || SyzygyError::Parse(format!("bad variety '{s}' (expected P:<n> or F:<e>)"));
        let (kind, num) = s.trim().split_once(':').ok_or_else(bad)?;
        let num: u32 = num.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "P" | "p" => SurfaceModel::projective(num),
            "F" | "f" => Ok(SurfaceModel::hirzebruch(num)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorClass::Hyperplane(d) => write!(f, "{d}"),
            DivisorClass::Ruled(a, b) => write!(f, "{a},{b}"),
        }
    }
}

impl DivisorClass {
    pub fn scale(&self, k: i64) -> DivisorClass {
        match *self {
            DivisorClass::Hyperplane(d) => DivisorClass::Hyperplane(k * d),
            DivisorClass::Ruled(a, b) => DivisorClass::Ruled(k * a, k * b),
        }
    }

    /// Sum of two classes; `None` when they live on different models.
    pub fn add(&self, other: &DivisorClass) -> Option<DivisorClass> {
        match (*self, *other) {
            (DivisorClass::Hyperplane(d1), DivisorClass::Hyperplane(d2)) => Some(DivisorClass::Hyperplane(d1 + d2)),
            (DivisorClass::Ruled(a1, b1), DivisorClass::Ruled(a2, b2)) => Some(DivisorClass::Ruled(a1 + a2, b1 + b2)),
            _ => None,
        }
    }

    /// Writes the class as `l * B` with `B` primitive and `l >= 1`.
    pub fn primitive_part(&self) -> (i64, DivisorClass) {
        match *self {
            DivisorClass::Hyperplane(d) if d != 0 => (d.abs(), DivisorClass::Hyperplane(d.signum())),
            DivisorClass::Ruled(a, b) if (a, b) != (0, 0) => {
                let g = num_integer::gcd(a, b);
                (g, DivisorClass::Ruled(a / g, b / g))
            }
            other => (1, other),
        }
    }
}

/// Lattice-point basis of `H^0(model, D)` in a fixed order.
///
/// On `P^n` the exponent vectors are listed in decreasing lexicographic order
/// (so `x_0^d` comes first); on `F_e` the points `(x, y)` are listed in
/// increasing lexicographic order.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    points: Vec<LatticePoint>,
    index: HashMap<LatticePoint, usize>,
}

impl MonomialBasis {
    fn from_points(points: Vec<LatticePoint>) -> Self {
        let index = points.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        MonomialBasis { points, index }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn point(&self, k: usize) -> &LatticePoint {
        &self.points[k]
    }

    pub fn index_of(&self, p: &[i32]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &[i32]) -> bool {
        self.index.contains_key(p)
    }
}

/// `h^0(model, D)` by lattice-point count.
pub fn h0(model: &SurfaceModel, class: &DivisorClass) -> u64 {
    match (*model, *class) {
        (SurfaceModel::ProjectiveSpace { n }, DivisorClass::Hyperplane(d)) => {
            if d < 0 {
                0
            } else {
                binomial(n as u64 + d as u64, n as u64)
            }
        }
        (SurfaceModel::Hirzebruch { e }, DivisorClass::Ruled(a, b)) => {
            if a < 0 {
                return 0;
            }
            (0..=a).map(|k| (b - k * e as i64 + 1).max(0) as u64).sum()
        }
        _ => 0,
    }
}

/// The lattice-point basis of `H^0(model, D)`.
pub fn section_basis(model: &SurfaceModel, class: &DivisorClass) -> Result<MonomialBasis> {
    model.check(class)?;
    if !model.is_base_point_free(class) {
        return Err(SyzygyError::NotBasePointFree(class.to_string()));
    }
    let points = match (*model, *class) {
        (SurfaceModel::ProjectiveSpace { n }, DivisorClass::Hyperplane(d)) => {
            let mut out = Vec::with_capacity(h0(model, class) as usize);
            let mut cur = vec![0i32; n as usize + 1];
            fill_exponents(&mut cur, 0, d as i32, &mut out);
            out
        }
        (SurfaceModel::Hirzebruch { e }, DivisorClass::Ruled(a, b)) => {
            let mut out = Vec::with_capacity(h0(model, class) as usize);
            for x in 0..=a {
                for y in 0..=(b - e as i64 * x) {
                    out.push(vec![x as i32, y as i32]);
                }
            }
            out
        }
        _ => unreachable!("checked above"),
    };
    Ok(MonomialBasis::from_points(points))
}

fn fill_exponents(cur: &mut Vec<i32>, pos: usize, left: i32, out: &mut Vec<LatticePoint>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for v in (0..=left).rev() {
        cur[pos] = v;
        fill_exponents(cur, pos + 1, left - v, out);
    }
    cur[pos] = 0;
}

/// Multiplication of sections: componentwise sum of lattice points.
pub fn multiply(p: &[i32], q: &[i32]) -> LatticePoint {
    debug_assert_eq!(p.len(), q.len());
    p.iter().zip(q).map(|(a, b)| a + b).collect()
}

pub fn canonical_class(model: &SurfaceModel) -> DivisorClass {
    match *model {
        SurfaceModel::ProjectiveSpace { n } => DivisorClass::Hyperplane(-(n as i64 + 1)),
        SurfaceModel::Hirzebruch { e } => DivisorClass::Ruled(-2, -2 - e as i64),
    }
}

/// Intersection number of two classes on a surface.
pub fn intersect(model: &SurfaceModel, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    model.check(d1)?;
    model.check(d2)?;
    match (*model, *d1, *d2) {
        (SurfaceModel::ProjectiveSpace { n: 2 }, DivisorClass::Hyperplane(x), DivisorClass::Hyperplane(y)) => Ok(x * y),
        (SurfaceModel::ProjectiveSpace { .. }, ..) => Err(SyzygyError::DimensionMismatch(model.to_string())),
        (SurfaceModel::Hirzebruch { e }, DivisorClass::Ruled(a1, b1), DivisorClass::Ruled(a2, b2)) => {
            Ok(a1 * b2 + a2 * b1 - e as i64 * a1 * a2)
        }
        _ => unreachable!("checked above"),
    }
}

/// Arithmetic genus of a smooth member of `|D|`, by adjunction.
pub fn genus_in_system(model: &SurfaceModel, class: &DivisorClass) -> Result<u64> {
    if !model.is_surface() {
        return Err(SyzygyError::DimensionMismatch(model.to_string()));
    }
    model.check(class)?;
    if h0(model, class) == 0 {
        return Err(SyzygyError::EmptySystem(class.to_string()));
    }
    let k = canonical_class(model);
    let adj = class.add(&k).expect("same model");
    let two_g_minus_two = intersect(model, class, &adj)?;
    // Sums of disjoint fibres (a = 0 on F_e) give negative values here.
    Ok((two_g_minus_two / 2 + 1).max(0) as u64)
}

/// Window of trailing zero differences that marks the end of the numerator.
fn stabilization_window(model: &SurfaceModel) -> usize {
    model.dimension() + 2
}

/// Numerator `N(t) = H(t) (1-t)^{r+1}` of the Hilbert series of the section ring.
pub fn hilbert_numerator(model: &SurfaceModel, class: &DivisorClass) -> Result<Vec<i64>> {
    model.check(class)?;
    if !model.is_ample(class) {
        return Err(SyzygyError::NotAmple(class.to_string()));
    }
    let r1 = h0(model, class) as usize;
    let window = stabilization_window(model);
    let cap = 2 * r1 + window + 16;
    let signed_binom: Vec<i128> = (0..=r1)
        .map(|t| {
            let c = binomial(r1 as u64, t as u64) as i128;
            if t % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let hilb: Vec<i128> = (0..=cap).map(|k| h0(model, &class.scale(k as i64)) as i128).collect();
    let mut coeffs: Vec<i128> = Vec::new();
    let mut zeros = 0usize;
    for k in 0..=cap {
        let c: i128 = (0..=k.min(r1)).map(|t| signed_binom[t] * hilb[k - t]).sum();
        coeffs.push(c);
        zeros = if c == 0 { zeros + 1 } else { 0 };
        if zeros == window {
            coeffs.truncate(coeffs.len() - window);
            while coeffs.last() == Some(&0) {
                coeffs.pop();
            }
            return Ok(coeffs.into_iter().map(|c| c as i64).collect());
        }
    }
    Err(SyzygyError::NonPolynomialHilbert { cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> SurfaceModel {
        SurfaceModel::projective(n).unwrap()
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0(&p(2), &DivisorClass::Hyperplane(3)), 10);
        assert_eq!(h0(&SurfaceModel::hirzebruch(0), &DivisorClass::Ruled(2, 3)), 12);
        // brute-force lattice count for F_2, (2,5)
        let mut count = 0;
        for x in 0..=2i64 {
            for y in 0..=5i64 {
                if y <= 5 - 2 * x {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 12);
        assert_eq!(h0(&SurfaceModel::hirzebruch(2), &DivisorClass::Ruled(2, 5)), count);
        assert_eq!(h0(&p(2), &DivisorClass::Hyperplane(-1)), 0);
        assert_eq!(h0(&SurfaceModel::hirzebruch(1), &DivisorClass::Ruled(-1, 4)), 0);
    }

    #[test]
    fn basis_order() {
        let b = section_basis(&p(1), &DivisorClass::Hyperplane(1)).unwrap();
        assert_eq!(b.points(), &[vec![1, 0], vec![0, 1]]);
        let b = section_basis(&SurfaceModel::hirzebruch(0), &DivisorClass::Ruled(1, 1)).unwrap();
        assert_eq!(b.points(), &[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let b = section_basis(&p(2), &DivisorClass::Hyperplane(2)).unwrap();
        assert_eq!(
            b.points(),
            &[vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]
        );
    }

    #[test]
    fn basis_rejects_non_bpf() {
        let err = section_basis(&SurfaceModel::hirzebruch(2), &DivisorClass::Ruled(2, 3)).unwrap_err();
        assert!(matches!(err, SyzygyError::NotBasePointFree(_)));
        assert!(section_basis(&p(2), &DivisorClass::Ruled(1, 1)).is_err());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(&[1, 1, 0], &[2, 0, 0]), vec![3, 1, 0]);
        assert_eq!(multiply(&[1, 0], &[0, 2]), vec![1, 2]);
        let f2 = SurfaceModel::hirzebruch(2);
        let prod = multiply(&[2, 1], &[0, 3]);
        for b in 8..12 {
            let basis = section_basis(&f2, &DivisorClass::Ruled(4, b)).unwrap();
            assert!(basis.contains(&prod), "b = {b}");
        }
    }

    #[test]
    fn canonical_and_intersections() {
        assert_eq!(canonical_class(&p(2)), DivisorClass::Hyperplane(-3));
        assert_eq!(canonical_class(&SurfaceModel::hirzebruch(0)), DivisorClass::Ruled(-2, -2));
        assert_eq!(canonical_class(&SurfaceModel::hirzebruch(2)), DivisorClass::Ruled(-2, -4));
        let f0 = SurfaceModel::hirzebruch(0);
        assert_eq!(intersect(&f0, &DivisorClass::Ruled(2, 3), &DivisorClass::Ruled(1, 0)).unwrap(), 3);
        assert_eq!(intersect(&p(2), &DivisorClass::Hyperplane(3), &DivisorClass::Hyperplane(4)).unwrap(), 12);
        let f2 = SurfaceModel::hirzebruch(2);
        assert_eq!(intersect(&f2, &DivisorClass::Ruled(1, 2), &DivisorClass::Ruled(1, 2)).unwrap(), 2);
        assert!(matches!(
            intersect(&p(3), &DivisorClass::Hyperplane(1), &DivisorClass::Hyperplane(1)),
            Err(SyzygyError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_in_system(&p(2), &DivisorClass::Hyperplane(3)).unwrap(), 1);
        let f0 = SurfaceModel::hirzebruch(0);
        assert_eq!(genus_in_system(&f0, &DivisorClass::Ruled(2, 2)).unwrap(), 1);
        for b in 0..6 {
            assert_eq!(genus_in_system(&f0, &DivisorClass::Ruled(1, b)).unwrap(), 0);
        }
        for d in 1..=8i64 {
            assert_eq!(genus_in_system(&p(2), &DivisorClass::Hyperplane(d)).unwrap() as i64, (d - 1) * (d - 2) / 2);
        }
        assert!(matches!(genus_in_system(&p(2), &DivisorClass::Hyperplane(-1)), Err(SyzygyError::EmptySystem(_))));
    }

    /// Truncated product of the series `sum h0(kD) t^k` with `(1-t)^{r+1}`,
    /// computed by repeated first differences.
    fn numerator_by_differencing(values: &[i128], times: usize) -> Vec<i128> {
        let mut v = values.to_vec();
        for _ in 0..times {
            let mut next = vec![v[0]];
            next.extend(v.windows(2).map(|w| w[1] - w[0]));
            v = next;
        }
        v
    }

    #[test]
    fn hilbert_numerators() {
        assert_eq!(hilbert_numerator(&p(2), &DivisorClass::Hyperplane(2)).unwrap(), vec![1, 0, -6, 8, -3]);
        assert_eq!(hilbert_numerator(&p(1), &DivisorClass::Hyperplane(1)).unwrap(), vec![1]);
        let f0 = SurfaceModel::hirzebruch(0);
        assert_eq!(hilbert_numerator(&f0, &DivisorClass::Ruled(1, 1)).unwrap(), vec![1, 0, -1]);

        // (F_0, (2,3)): H(t) = sum (2k+1)(3k+1) t^k, r = 11
        let values: Vec<i128> = (0..40).map(|k| (2 * k + 1) * (3 * k + 1)).collect();
        let mut expected = numerator_by_differencing(&values, 12);
        expected.truncate(20);
        while expected.last() == Some(&0) {
            expected.pop();
        }
        let got: Vec<i128> =
            hilbert_numerator(&f0, &DivisorClass::Ruled(2, 3)).unwrap().into_iter().map(i128::from).collect();
        assert_eq!(got, expected);
        assert!(matches!(hilbert_numerator(&f0, &DivisorClass::Ruled(2, 0)), Err(SyzygyError::NotAmple(_))));
    }

    #[test]
    fn parsing() {
        let m: SurfaceModel = "P:2".parse().unwrap();
        assert_eq!(m, p(2));
        assert_eq!(m.parse_class("4").unwrap(), DivisorClass::Hyperplane(4));
        let f: SurfaceModel = "F:1".parse().unwrap();
        assert_eq!(f.parse_class("2, 3").unwrap(), DivisorClass::Ruled(2, 3));
        assert!(f.parse_class("2").is_err());
        assert!("P:0".parse::<SurfaceModel>().is_err());
        assert!("Q:1".parse::<SurfaceModel>().is_err());
        assert_eq!(f.to_string(), "F:1");
    }
}
