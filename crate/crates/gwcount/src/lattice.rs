//! Intersection lattices of del-Pezzo surfaces.
//!
//! A surface is modelled by its H_2 lattice with the intersection form, the
//! anticanonical vector c_1(TX), and the full H^* pairing (degrees 0, 2, 4).
//! Classes on a blowup of P^2 are stored as (d; m_1, ..., m_k), meaning
//! dL - m_1 E_1 - ... - m_k E_k; on P^1 x P^1 as a bidegree (a, b).

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    /// P^2 blown up at k general points, 0 <= k <= 8.
    P2Blowup(u8),
    /// P^1 x P^1.
    Quadric,
}

/// A class in H_2(X, Z), in the coordinates fixed by [`SurfaceModel`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass(pub Vec<i64>);

impl CurveClass {
    pub fn zero(rank: usize) -> Self {
        CurveClass(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CurveClass) -> CurveClass {
        CurveClass(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &CurveClass) -> CurveClass {
        CurveClass(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub kind: SurfaceKind,
    /// Rank of H_2: k+1 for a blowup, 2 for the quadric.
    pub rank: usize,
    /// Intersection form on the H_2 basis.
    pub pairing: Vec<Vec<i64>>,
    /// Poincare dual of c_1(TX): (3; 1, ..., 1) resp. (2, 2).
    pub c1: CurveClass,
    /// Labels and homology degrees of the full H_* basis: 1, divisors, pt.
    pub cohomology_basis: Vec<(String, u32)>,
    /// Inverse of the full H_* pairing g_{ij}, where g_{ij} = 0 unless the
    /// degrees of e_i and e_j sum to 4. Integral because the form is unimodular.
    pub inverse_pairing: Vec<Vec<i64>>,
}

/// Builds the lattice model for a del-Pezzo surface.
pub fn make_surface(kind: SurfaceKind) -> Result<SurfaceModel> {
    match kind {
        SurfaceKind::P2Blowup(k) => {
            if k > 8 {
                return Err(Error::NotDelPezzo(k as i64));
            }
            let k = k as usize;
            let rank = k + 1;
            let mut pairing = vec![vec![0i64; rank]; rank];
            pairing[0][0] = 1;
            for i in 1..rank {
                pairing[i][i] = -1;
            }
            let mut c1 = vec![1i64; rank];
            c1[0] = 3;
            let mut basis = vec![("1".to_string(), 0)];
            basis.push(("L".to_string(), 2));
            for i in 1..=k {
                basis.push((format!("E{i}"), 2));
            }
            basis.push(("pt".to_string(), 4));
            let inverse_pairing = full_pairing_matrix(&pairing);
            Ok(SurfaceModel {
                kind,
                rank,
                pairing,
                c1: CurveClass(c1),
                cohomology_basis: basis,
                inverse_pairing,
            })
        }
        SurfaceKind::Quadric => {
            let pairing = vec![vec![0, 1], vec![1, 0]];
            let basis = vec![
                ("1".to_string(), 0),
                ("F1".to_string(), 2),
                ("F2".to_string(), 2),
                ("pt".to_string(), 4),
            ];
            let inverse_pairing = full_pairing_matrix(&pairing);
            Ok(SurfaceModel {
                kind: SurfaceKind::Quadric,
                rank: 2,
                pairing,
                c1: CurveClass(vec![2, 2]),
                cohomology_basis: basis,
                inverse_pairing,
            })
        }
    }
}

/// The full H_* pairing in the basis {1, divisors, pt}. Entries pair to zero
/// unless degrees sum to 4. Both our H_2 blocks are involutive, so this matrix
/// doubles as its own inverse; `make_surface` still verifies that.
fn full_pairing_matrix(h2: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = h2.len();
    let n = r + 2;
    let mut m = vec![vec![0i64; n]; n];
    m[0][n - 1] = 1;
    m[n - 1][0] = 1;
    for i in 0..r {
        for j in 0..r {
            m[1 + i][1 + j] = h2[i][j];
        }
    }
    m
}

impl SurfaceModel {
    /// Stable identifier used in cache files: "p2x3", "quadric", ...
    pub fn surface_id(&self) -> String {
        match self.kind {
            SurfaceKind::P2Blowup(k) => format!("p2x{k}"),
            SurfaceKind::Quadric => "quadric".to_string(),
        }
    }

    /// The full H_* pairing matrix (of size rank + 2).
    pub fn full_pairing(&self) -> Vec<Vec<i64>> {
        full_pairing_matrix(&self.pairing)
    }

    pub fn check_class(&self, beta: &CurveClass) -> Result<()> {
        if beta.0.len() != self.rank {
            return Err(Error::RankMismatch {
                got: beta.0.len(),
                want: self.rank,
            });
        }
        Ok(())
    }

    /// Parses the shared class syntax: "d;m1,m2,...,mk" for blowups
    /// (the semicolon is mandatory, "3;" for k = 0), "a,b" for the quadric.
    pub fn parse_class(&self, s: &str) -> Result<CurveClass> {
        let parse_int = |t: &str| -> Result<i64> {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in class {s:?}")))
        };
        match self.kind {
            SurfaceKind::P2Blowup(k) => {
                let (d_str, m_str) = s
                    .split_once(';')
                    .ok_or_else(|| Error::Parse(format!("class {s:?} needs \"d;m1,...\" form")))?;
                let mut coords = vec![parse_int(d_str)?];
                if !m_str.is_empty() {
                    for t in m_str.split(',') {
                        coords.push(parse_int(t)?);
                    }
                }
                if coords.len() != k as usize + 1 {
                    return Err(Error::Parse(format!(
                        "class {s:?} has {} multiplicities, surface p2x{k} needs {k}",
                        coords.len() - 1
                    )));
                }
                Ok(CurveClass(coords))
            }
            SurfaceKind::Quadric => {
                let parts: Vec<&str> = s.split(',').collect();
                if parts.len() != 2 || s.contains(';') {
                    return Err(Error::Parse(format!("class {s:?} needs \"a,b\" form")));
                }
                Ok(CurveClass(vec![parse_int(parts[0])?, parse_int(parts[1])?]))
            }
        }
    }

    /// Formats a class in the shared syntax (inverse of [`parse_class`]).
    pub fn class_string(&self, beta: &CurveClass) -> String {
        match self.kind {
            SurfaceKind::P2Blowup(_) => {
                let ms: Vec<String> = beta.0[1..].iter().map(|m| m.to_string()).collect();
                format!("{};{}", beta.0[0], ms.join(","))
            }
            SurfaceKind::Quadric => format!("{},{}", beta.0[0], beta.0[1]),
        }
    }
}

/// Parses a surface spec: "p2", "p2xK" (K <= 8), or "quadric".
pub fn parse_surface(s: &str) -> Result<SurfaceModel> {
    if s == "p2" {
        return make_surface(SurfaceKind::P2Blowup(0));
    }
    if s == "quadric" {
        return make_surface(SurfaceKind::Quadric);
    }
    if let Some(k_str) = s.strip_prefix("p2x") {
        let k: i64 = k_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad surface spec {s:?}")))?;
        if !(0..=8).contains(&k) {
            return Err(Error::NotDelPezzo(k));
        }
        return make_surface(SurfaceKind::P2Blowup(k as u8));
    }
    Err(Error::Parse(format!(
        "unknown surface {s:?} (expected p2, p2xK, or quadric)"
    )))
}

/// Topological intersection number b1 . b2.
pub fn intersect(s: &SurfaceModel, b1: &CurveClass, b2: &CurveClass) -> Result<i64> {
    s.check_class(b1)?;
    s.check_class(b2)?;
    let mut acc = 0i64;
    for (i, &x) in b1.0.iter().enumerate() {
        for (j, &y) in b2.0.iter().enumerate() {
            acc += x * s.pairing[i][j] * y;
        }
    }
    Ok(acc)
}

/// <c_1(TX), beta>.
pub fn c1_pairing(s: &SurfaceModel, beta: &CurveClass) -> Result<i64> {
    intersect(s, &s.c1, beta)
}

/// Number of generic point conditions: <c_1(TX), beta> - 1. May be negative;
/// callers treat a negative value as "no valid point count".
pub fn delta(s: &SurfaceModel, beta: &CurveClass) -> Result<i64> {
    Ok(c1_pairing(s, beta)? - 1)
}

/// Arithmetic genus of a smooth class-beta curve: (beta.beta - c1.beta + 2)/2.
pub fn arithmetic_genus(s: &SurfaceModel, beta: &CurveClass) -> Result<i64> {
    let num = intersect(s, beta, beta)? - c1_pairing(s, beta)? + 2;
    if num % 2 != 0 {
        // Parity is a characteristic-class fact on these lattices; an odd
        // numerator means the pairing data is corrupted.
        return Err(Error::Inconsistency(format!(
            "odd adjunction numerator {num} for class {beta} on {}",
            s.surface_id()
        )));
    }
    Ok(num / 2)
}

/// Quadratic Cremona move on the first three multiplicities. Expects the
/// multiplicities sorted descending; preserves beta.beta and c1.beta.
pub fn cremona_once(s: &SurfaceModel, beta: &CurveClass) -> Result<CurveClass> {
    match s.kind {
        SurfaceKind::P2Blowup(k) if k >= 3 => {
            s.check_class(beta)?;
            let d = beta.0[0];
            let (m1, m2, m3) = (beta.0[1], beta.0[2], beta.0[3]);
            let mut coords = Vec::with_capacity(beta.0.len());
            coords.push(2 * d - m1 - m2 - m3);
            coords.push(d - m2 - m3);
            coords.push(d - m1 - m3);
            coords.push(d - m1 - m2);
            coords.extend_from_slice(&beta.0[4..]);
            Ok(CurveClass(coords))
        }
        _ => Err(Error::Validation(format!(
            "Cremona move needs a blowup of P^2 at >= 3 points, got {}",
            s.surface_id()
        ))),
    }
}

/// Canonical Weyl-orbit representative: multiplicities sorted descending,
/// with the Cremona move applied while m1 + m2 + m3 > d. On the quadric the
/// relevant Weyl group is generated by the factor swap, so (a, b) is sorted.
/// Terminates because d strictly decreases inside a finite Weyl orbit.
pub fn weyl_normalize(s: &SurfaceModel, beta: &CurveClass) -> CurveClass {
    match s.kind {
        SurfaceKind::Quadric => {
            let (a, b) = (beta.0[0], beta.0[1]);
            CurveClass(vec![a.max(b), a.min(b)])
        }
        SurfaceKind::P2Blowup(k) => {
            let mut cur = beta.clone();
            loop {
                cur.0[1..].sort_unstable_by(|a, b| b.cmp(a));
                if k < 3 || cur.0[1] + cur.0[2] + cur.0[3] <= cur.0[0] {
                    return cur;
                }
                cur = cremona_once(s, &cur).expect("cremona preconditions hold");
            }
        }
    }
}

/// Whether beta lies in the candidate cone for a nonzero genus-0 count:
/// a simple exceptional class, or d >= 1 with 0 <= m_i <= d (resp. a, b >= 0
/// nonzero on the quadric), with delta >= 0 and arithmetic genus >= 0.
pub fn candidate_filter(s: &SurfaceModel, beta: &CurveClass) -> bool {
    if s.check_class(beta).is_err() {
        return false;
    }
    let cone_ok = match s.kind {
        SurfaceKind::P2Blowup(_) => {
            let d = beta.0[0];
            let ms = &beta.0[1..];
            if d == 0 {
                ms.iter().filter(|&&m| m == -1).count() == 1
                    && ms.iter().all(|&m| m == 0 || m == -1)
            } else {
                d >= 1 && ms.iter().all(|&m| (0..=d).contains(&m))
            }
        }
        SurfaceKind::Quadric => beta.0[0] >= 0 && beta.0[1] >= 0 && !beta.is_zero(),
    };
    if !cone_ok {
        return false;
    }
    let del = delta(s, beta).expect("rank checked");
    let g = arithmetic_genus(s, beta).expect("rank checked");
    del >= 0 && g >= 0
}

/// All ordered splittings beta = b1 + b2 with both parts nonzero and in the
/// candidate cone, in lexicographic order of (b1, b2). Complete relative to
/// `candidate_filter`: every passing part has d1 = 0 with one m = -1, or
/// d1 >= 1 with multiplicities in [0, d1].
pub fn decompositions(s: &SurfaceModel, beta: &CurveClass) -> Result<Vec<(CurveClass, CurveClass)>> {
    s.check_class(beta)?;
    let mut out = Vec::new();
    let mut push_if_valid = |b1: CurveClass, b2: CurveClass| {
        if !b1.is_zero()
            && !b2.is_zero()
            && candidate_filter(s, &b1)
            && candidate_filter(s, &b2)
        {
            out.push((b1, b2));
        }
    };
    match s.kind {
        SurfaceKind::P2Blowup(k) => {
            let k = k as usize;
            let d = beta.0[0];
            // Exceptional part on either side.
            for i in 0..k {
                let mut e = vec![0i64; k + 1];
                e[1 + i] = -1;
                let e = CurveClass(e);
                push_if_valid(e.clone(), beta.sub(&e));
                push_if_valid(beta.sub(&e), e);
            }
            // Both parts of positive degree.
            for d1 in 1..d {
                let d2 = d - d1;
                let mut ranges = Vec::with_capacity(k);
                for &m in &beta.0[1..] {
                    let lo = 0.max(m - d2);
                    let hi = d1.min(m);
                    if lo > hi {
                        ranges.clear();
                        break;
                    }
                    ranges.push((lo, hi));
                }
                if ranges.len() != k && k > 0 {
                    continue;
                }
                let mut cur = vec![d1];
                enumerate_ranges(&ranges, &mut cur, &mut |coords| {
                    let b1 = CurveClass(coords.to_vec());
                    let b2 = beta.sub(&b1);
                    push_if_valid(b1, b2);
                });
            }
        }
        SurfaceKind::Quadric => {
            let (a, b) = (beta.0[0], beta.0[1]);
            for a1 in 0..=a.max(0) {
                for b1 in 0..=b.max(0) {
                    let p1 = CurveClass(vec![a1, b1]);
                    let p2 = beta.sub(&p1);
                    push_if_valid(p1, p2);
                }
            }
        }
    }
    out.sort();
    // The two exceptional-part pushes coincide when beta = 2E_i; such beta
    // never passes the candidate filter, but keep the output duplicate-free
    // for arbitrary input.
    out.dedup();
    Ok(out)
}

fn enumerate_ranges(
    ranges: &[(i64, i64)],
    cur: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if ranges.is_empty() {
        emit(cur);
        return;
    }
    let (lo, hi) = ranges[0];
    for v in lo..=hi {
        cur.push(v);
        enumerate_ranges(&ranges[1..], cur, emit);
        cur.pop();
    }
}

/// Evaluates sum_{i,j} g^{ij} (beta.e_i)(beta.e_j) over the full H_* basis,
/// with g_{ij} = 0 when the degrees of e_i and e_j do not sum to 4. Must
/// equal beta.beta.
pub fn pairing_sum_identity(s: &SurfaceModel, beta: &CurveClass) -> Result<i64> {
    s.check_class(beta)?;
    let n = s.rank + 2;
    // beta . e_i is an intersection number only when e_i is a divisor class;
    // against the degree-0 and degree-4 basis elements it vanishes.
    let mut v = vec![0i64; n];
    for i in 0..s.rank {
        let mut acc = 0i64;
        for j in 0..s.rank {
            acc += beta.0[j] * s.pairing[j][i];
        }
        v[1 + i] = acc;
    }
    let mut total = 0i64;
    for i in 0..n {
        for j in 0..n {
            total += v[i] * s.inverse_pairing[i][j] * v[j];
        }
    }
    Ok(total)
}

/// The data of the dimension condition: genus, half real-dimension m of X,
/// homology degrees of the marked constraints alpha_i and unmarked
/// constraints gamma_j, and the class.
#[derive(Clone, Debug)]
pub struct DimensionQuery {
    pub g: i64,
    pub m: i64,
    pub alpha_degs: Vec<u32>,
    pub gamma_degs: Vec<u32>,
    pub beta: CurveClass,
}

/// Checks the dimension condition
///   sum_i (2m - deg a_i) + sum_j (2m - 2 - deg g_j) = 2m(1-g) + 2<c_1, beta>.
pub fn dimension_check(q: &DimensionQuery, s: &SurfaceModel) -> Result<bool> {
    for &deg in q.alpha_degs.iter().chain(&q.gamma_degs) {
        if deg != 0 && deg != 2 && deg != 4 {
            return Err(Error::Validation(format!(
                "homology degree {deg} not in {{0, 2, 4}}"
            )));
        }
    }
    let k = q.alpha_degs.len() as i64;
    if k + 2 * q.g < 3 {
        return Err(Error::Validation(format!(
            "need k + 2g >= 3, got k = {k}, g = {}",
            q.g
        )));
    }
    let two_m = 2 * q.m;
    let lhs: i64 = q
        .alpha_degs
        .iter()
        .map(|&a| two_m - a as i64)
        .sum::<i64>()
        + q.gamma_degs
            .iter()
            .map(|&g| two_m - 2 - g as i64)
            .sum::<i64>();
    let rhs = two_m * (1 - q.g) + 2 * c1_pairing(s, &q.beta)?;
    Ok(lhs == rhs)
}

/// The canonical genus-1 point-count query for beta: one marked point
/// constraint (degree 0) plus delta - 1 unmarked points, which balances the
/// dimension condition exactly. Requires delta >= 1.
pub fn canonical_genus1_query(s: &SurfaceModel, beta: &CurveClass) -> Result<DimensionQuery> {
    let del = delta(s, beta)?;
    if del < 1 {
        return Err(Error::Validation(format!(
            "class {beta} has delta = {del} < 1, no canonical genus-1 query"
        )));
    }
    Ok(DimensionQuery {
        g: 1,
        m: 2,
        alpha_degs: vec![0],
        gamma_degs: vec![0; (del - 1) as usize],
        beta: beta.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> SurfaceModel {
        make_surface(SurfaceKind::P2Blowup(0)).unwrap()
    }

    fn blowup(k: u8) -> SurfaceModel {
        make_surface(SurfaceKind::P2Blowup(k)).unwrap()
    }

    fn quadric() -> SurfaceModel {
        make_surface(SurfaceKind::Quadric).unwrap()
    }

    fn cc(coords: &[i64]) -> CurveClass {
        CurveClass(coords.to_vec())
    }

    #[test]
    fn make_surface_p2() {
        let s = p2();
        assert_eq!(s.rank, 1);
        assert_eq!(s.pairing, vec![vec![1]]);
        assert_eq!(s.c1, cc(&[3]));
    }

    #[test]
    fn make_surface_quadric() {
        let s = quadric();
        assert_eq!(s.rank, 2);
        assert_eq!(s.pairing, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(s.c1, cc(&[2, 2]));
    }

    #[test]
    fn make_surface_rejects_k9() {
        assert!(matches!(
            make_surface(SurfaceKind::P2Blowup(9)),
            Err(Error::NotDelPezzo(9))
        ));
    }

    #[test]
    fn anticanonical_self_intersection() {
        for k in 0..=8u8 {
            let s = blowup(k);
            assert_eq!(intersect(&s, &s.c1, &s.c1).unwrap(), 9 - k as i64);
        }
        let q = quadric();
        assert_eq!(intersect(&q, &q.c1, &q.c1).unwrap(), 8);
    }

    #[test]
    fn full_pairing_times_inverse_is_identity() {
        for s in [p2(), blowup(3), blowup(8), quadric()] {
            let full = s.full_pairing();
            let n = full.len();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0i64;
                    for l in 0..n {
                        acc += full[i][l] * s.inverse_pairing[l][j];
                    }
                    assert_eq!(acc, i64::from(i == j), "entry ({i},{j}) of {}", s.surface_id());
                }
            }
        }
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(intersect(&p2(), &cc(&[3]), &cc(&[3])).unwrap(), 9);
        let b2 = blowup(2);
        assert_eq!(intersect(&b2, &cc(&[3, 1, 1]), &cc(&[2, 1, 0])).unwrap(), 5);
        assert_eq!(intersect(&quadric(), &cc(&[1, 0]), &cc(&[1, 0])).unwrap(), 0);
    }

    #[test]
    fn intersect_rank_mismatch() {
        assert!(matches!(
            intersect(&p2(), &cc(&[1, 2]), &cc(&[1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn c1_pairing_examples() {
        assert_eq!(c1_pairing(&p2(), &cc(&[3])).unwrap(), 9);
        let b8 = blowup(8);
        assert_eq!(c1_pairing(&b8, &cc(&[3, 1, 1, 1, 1, 1, 1, 1, 1])).unwrap(), 1);
        assert_eq!(c1_pairing(&quadric(), &cc(&[1, 1])).unwrap(), 4);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&p2(), &cc(&[3])).unwrap(), 8);
        assert_eq!(delta(&p2(), &cc(&[1])).unwrap(), 2);
        let b8 = blowup(8);
        assert_eq!(delta(&b8, &cc(&[3, 1, 1, 1, 1, 1, 1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(arithmetic_genus(&p2(), &cc(&[3])).unwrap(), 1);
        assert_eq!(arithmetic_genus(&p2(), &cc(&[4])).unwrap(), 3);
        let b1 = blowup(1);
        assert_eq!(arithmetic_genus(&b1, &cc(&[0, -1])).unwrap(), 0);
    }

    #[test]
    fn cremona_examples() {
        let b3 = blowup(3);
        let img = cremona_once(&b3, &cc(&[1, 1, 1, 0])).unwrap();
        assert_eq!(img, cc(&[0, 0, 0, -1]));
        // The move preserves both invariants.
        assert_eq!(intersect(&b3, &img, &img).unwrap(), -1);
        assert_eq!(c1_pairing(&b3, &img).unwrap(), 1);

        let img2 = cremona_once(&b3, &cc(&[3, 2, 1, 1])).unwrap();
        assert_eq!(img2, cc(&[2, 1, 0, 0]));
        assert_eq!(c1_pairing(&b3, &img2).unwrap(), 5);
    }

    #[test]
    fn cremona_needs_three_points() {
        assert!(cremona_once(&blowup(2), &cc(&[1, 1, 0])).is_err());
        assert!(cremona_once(&quadric(), &cc(&[1, 0])).is_err());
    }

    #[test]
    fn weyl_normalize_examples() {
        let b2 = blowup(2);
        assert_eq!(weyl_normalize(&b2, &cc(&[2, 0, 1])), cc(&[2, 1, 0]));
        let b3 = blowup(3);
        assert_eq!(weyl_normalize(&b3, &cc(&[1, 1, 1, 0])), cc(&[0, 0, 0, -1]));
        let q = quadric();
        assert_eq!(weyl_normalize(&q, &cc(&[1, 3])), cc(&[3, 1]));
    }

    #[test]
    fn weyl_normalize_conic_through_five() {
        let b5 = blowup(5);
        let nf = weyl_normalize(&b5, &cc(&[2, 1, 1, 1, 1, 1]));
        assert_eq!(nf, cc(&[0, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn candidate_filter_examples() {
        let b1 = blowup(1);
        assert!(candidate_filter(&b1, &cc(&[0, -1])));
        assert!(!candidate_filter(&b1, &cc(&[2, 2]))); // genus -1
        assert!(!candidate_filter(&b1, &cc(&[1, 2]))); // m > d
        assert!(!candidate_filter(&quadric(), &cc(&[0, 0])));
        assert!(candidate_filter(&quadric(), &cc(&[1, 0])));
    }

    #[test]
    fn decompositions_examples() {
        let s = p2();
        assert_eq!(
            decompositions(&s, &cc(&[2])).unwrap(),
            vec![(cc(&[1]), cc(&[1]))]
        );
        assert_eq!(
            decompositions(&s, &cc(&[3])).unwrap(),
            vec![(cc(&[1]), cc(&[2])), (cc(&[2]), cc(&[1]))]
        );
        let q = quadric();
        assert_eq!(
            decompositions(&q, &cc(&[1, 1])).unwrap(),
            vec![
                (cc(&[0, 1]), cc(&[1, 0])),
                (cc(&[1, 0]), cc(&[0, 1])),
            ]
        );
    }

    #[test]
    fn pairing_sum_examples() {
        assert_eq!(pairing_sum_identity(&p2(), &cc(&[3])).unwrap(), 9);
        let b2 = blowup(2);
        assert_eq!(pairing_sum_identity(&b2, &cc(&[1, 1, 0])).unwrap(), 0);
        assert_eq!(pairing_sum_identity(&quadric(), &cc(&[1, 1])).unwrap(), 2);
    }

    #[test]
    fn dimension_check_examples() {
        let s = p2();
        let beta = cc(&[3]);
        let q = canonical_genus1_query(&s, &beta).unwrap();
        assert_eq!(q.gamma_degs.len(), 7);
        assert!(dimension_check(&q, &s).unwrap());

        let mut off = q.clone();
        off.gamma_degs.push(0);
        assert!(!dimension_check(&off, &s).unwrap());

        let q0 = DimensionQuery {
            g: 0,
            m: 2,
            alpha_degs: vec![2, 2, 0],
            gamma_degs: vec![0; 7],
            beta,
        };
        assert!(dimension_check(&q0, &s).unwrap());
    }

    #[test]
    fn dimension_check_rejects_bad_input() {
        let s = p2();
        let q = DimensionQuery {
            g: 0,
            m: 2,
            alpha_degs: vec![3],
            gamma_degs: vec![],
            beta: cc(&[1]),
        };
        assert!(matches!(dimension_check(&q, &s), Err(Error::Validation(_))));
        let q = DimensionQuery {
            g: 1,
            m: 2,
            alpha_degs: vec![],
            gamma_degs: vec![],
            beta: cc(&[1]),
        };
        // k + 2g = 2 < 3.
        assert!(matches!(dimension_check(&q, &s), Err(Error::Validation(_))));
    }

    #[test]
    fn class_string_round_trip() {
        let s = blowup(3);
        let beta = s.parse_class("3;1,1,1").unwrap();
        assert_eq!(beta, cc(&[3, 1, 1, 1]));
        assert_eq!(s.class_string(&beta), "3;1,1,1");
        let p = p2();
        assert_eq!(p.parse_class("4;").unwrap(), cc(&[4]));
        assert_eq!(p.class_string(&cc(&[4])), "4;");
        let q = quadric();
        assert_eq!(q.parse_class("2,3").unwrap(), cc(&[2, 3]));
        assert!(q.parse_class("2;3").is_err());
        assert!(p.parse_class("4").is_err());
        assert!(s.parse_class("3;1,1").is_err());
    }

    #[test]
    fn parse_surface_specs() {
        assert_eq!(parse_surface("p2").unwrap().rank, 1);
        assert_eq!(parse_surface("p2x5").unwrap().rank, 6);
        assert_eq!(parse_surface("quadric").unwrap().rank, 2);
        assert!(matches!(parse_surface("p2x9"), Err(Error::NotDelPezzo(9))));
        assert!(parse_surface("p3").is_err());
    }
}
