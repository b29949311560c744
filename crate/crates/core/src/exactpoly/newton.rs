use alloc::borrow::ToOwned;
use alloc::vec::Vec;

use super::{MultiPoly, PolyError};

/// Convex hull of the exponent support of a bivariate polynomial.
///
/// Vertices run counterclockwise from the lexicographically smallest one;
/// points in the interior of an edge are not vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl NewtonPolygon {
    pub fn of(p: &MultiPoly) -> Result<Self, PolyError> {
        if p.vars().len() != 2 {
            return Err(PolyError::Unsupported("Newton polygon needs exactly two variables".to_owned()));
        }
        if p.laurent_flags().iter().any(|l| *l) {
            return Err(PolyError::Unsupported("Newton polygon of a Laurent polynomial".to_owned()));
        }
        if p.is_zero() {
            return Err(PolyError::EmptyInput("Newton polygon of zero".to_owned()));
        }
        let points = p.terms().map(|(e, _)| (i64::from(e[0]), i64::from(e[1]))).collect();
        Ok(Self::from_points(points))
    }

    /// Andrew's monotone chain; collinear boundary points are dropped.
    pub fn from_points(mut points: Vec<(i64, i64)>) -> Self {
        points.sort_unstable();
        points.dedup();
        if points.len() <= 1 {
            return Self { vertices: points };
        }
        let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * points.len());
        for &pt in &points {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
                hull.pop();
            }
            hull.push(pt);
        }
        let lower_len = hull.len() + 1;
        for &pt in points.iter().rev().skip(1) {
            while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
                hull.pop();
            }
            hull.push(pt);
        }
        hull.pop();
        Self { vertices: hull }
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn is_vertex(&self, pt: (i64, i64)) -> bool {
        self.vertices.contains(&pt)
    }

    /// Inside or on the boundary.
    pub fn contains(&self, pt: (i64, i64)) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == pt,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, pt) == 0
                    && pt.0 >= a.0.min(b.0)
                    && pt.0 <= a.0.max(b.0)
                    && pt.1 >= a.1.min(b.1)
                    && pt.1 <= a.1.max(b.1)
            }
            n => (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], pt) >= 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn collinear_points_are_not_vertices() {
        let p = MultiPoly::parse(&["X", "z"], "1 + X^2 + z^2 + X*z").unwrap();
        let poly = NewtonPolygon::of(&p).unwrap();
        assert_eq!(poly.vertices(), &[(0, 0), (2, 0), (0, 2)]);
        assert!(!poly.is_vertex((1, 1)));
        assert!(poly.contains((1, 1)));
        assert!(!poly.contains((2, 1)));
    }

    #[test]
    fn single_monomial_and_segment() {
        let p = MultiPoly::parse(&["X", "z"], "X^3*z^2").unwrap();
        assert_eq!(NewtonPolygon::of(&p).unwrap().vertices(), &[(3, 2)]);
        let seg = NewtonPolygon::from_points(vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(seg.vertices(), &[(0, 0), (2, 2)]);
        assert!(seg.contains((1, 1)));
        assert!(!seg.contains((1, 0)));
    }

    #[test]
    fn errors() {
        assert!(NewtonPolygon::of(&MultiPoly::zero(&["X", "z"])).is_err());
        assert!(NewtonPolygon::of(&MultiPoly::from_int(&["X"], 1)).is_err());
    }

    #[test]
    fn counterclockwise_from_smallest() {
        let poly = NewtonPolygon::from_points(vec![(2, 2), (0, 0), (2, 0), (0, 2), (1, 1)]);
        assert_eq!(poly.vertices(), &[(0, 0), (2, 0), (2, 2), (0, 2)]);
    }
}
