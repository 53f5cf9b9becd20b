//! The projective plane `PG(2, q)` for small primes `q`.

use super::BuildError;

/// Points and lines of `PG(2, q)` in canonical order.
///
/// Both are stored as normalised vectors of `F_q^3` (first nonzero entry 1),
/// sorted lexicographically. A line is given by its normal covector, so
/// point `x` lies on line `w` iff `w . x = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePlane {
    q: u32,
    points: Vec<[u32; 3]>,
    lines: Vec<[u32; 3]>,
    incidence: Vec<Vec<bool>>,
}

impl ProjectivePlane {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn points(&self) -> &[[u32; 3]] {
        &self.points
    }

    pub fn lines(&self) -> &[[u32; 3]] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.incidence[point][line]
    }

    pub fn points_on(&self, line: usize) -> Vec<usize> {
        (0..self.points.len()).filter(|&p| self.incidence[p][line]).collect()
    }

    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&l| self.incidence[point][l]).collect()
    }

    /// Index of the point spanned by a nonzero vector.
    pub fn point_index(&self, v: [u32; 3]) -> Option<usize> {
        let n = normalize(v, self.q)?;
        self.points.binary_search(&n).ok()
    }

    /// Index of the line with the given nonzero normal covector.
    pub fn line_index(&self, w: [u32; 3]) -> Option<usize> {
        let n = normalize(w, self.q)?;
        self.lines.binary_search(&n).ok()
    }
}

pub fn build_projective_plane(q: u32) -> Result<ProjectivePlane, BuildError> {
    if !matches!(q, 2 | 3) {
        return Err(BuildError::UnsupportedQ(q));
    }
    let mut points = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if normalize(v, q) == Some(v) {
                    points.push(v);
                }
            }
        }
    }
    points.sort();
    let lines = points.clone();
    let incidence = points
        .iter()
        .map(|x| lines.iter().map(|w| dot(*w, *x, q) == 0).collect())
        .collect();
    Ok(ProjectivePlane {
        q,
        points,
        lines,
        incidence,
    })
}

fn dot(a: [u32; 3], b: [u32; 3], q: u32) -> u32 {
    (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q
}

/// Scales a nonzero vector so its first nonzero entry is 1.
fn normalize(v: [u32; 3], q: u32) -> Option<[u32; 3]> {
    let v = v.map(|x| x % q);
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = (1..q).find(|&k| (k * lead) % q == 1)?;
    Some(v.map(|x| (x * inv) % q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p2 = build_projective_plane(2).unwrap();
        assert_eq!(p2.len(), 7);
        assert!((0..7).all(|l| p2.points_on(l).len() == 3));
        let p3 = build_projective_plane(3).unwrap();
        assert_eq!(p3.len(), 13);
        assert!((0..13).all(|x| p3.lines_through(x).len() == 4));
        assert_eq!(build_projective_plane(4), Err(BuildError::UnsupportedQ(4)));
    }

    #[test]
    fn two_points_span_one_line() {
        let p = build_projective_plane(3).unwrap();
        for x in 0..13 {
            for y in 0..13 {
                if x != y {
                    let common = (0..13).filter(|&l| p.incident(x, l) && p.incident(y, l)).count();
                    assert_eq!(common, 1);
                }
            }
        }
    }
}
