//! Text file formats. Field elements appear everywhere as their canonical
//! integer index in `[0, q)` (base-p digits = polynomial coefficients,
//! lowest degree first).
//!
//! Curve file: header `q d`, then one `i j k c` line per nonzero term;
//! order-insensitive on read, canonical triangular order on write.
//!
//! Arc file: header `q k`, then one `(x:y:z)` point per line; duplicate
//! points are rejected.
//!
//! Generator matrix file: header `n 3 d q`, three rows of n elements, and
//! an optional `W: c_d .. c_n` line (ascending weight). Writing a parsed
//! file reproduces it byte for byte.

use std::fmt;

use curveforge_core::codes::{LinearCode3, WeightEnumerator};
use curveforge_core::gf::FieldSpec;
use curveforge_core::hpoly::HPoly;
use curveforge_core::projplane::{PPoint, PointSet};

#[derive(Debug)]
pub enum FormatError {
    Syntax { line: usize, message: String },
    Semantic(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            FormatError::Semantic(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Builds the field a file header describes, given q.
pub fn field_for_q(q: u32, cap: u32) -> Result<FieldSpec, FormatError> {
    let (p, h) = factor_prime_power(q)
        .ok_or_else(|| FormatError::Semantic(format!("{q} is not a prime power")))?;
    FieldSpec::make_field_capped(p, h, cap)
        .map_err(|e| FormatError::Semantic(format!("cannot build GF({q}): {e}")))
}

/// q = p^h with p prime, or None.
pub fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut n = q;
            let mut h = 0;
            while n % p == 0 {
                n /= p;
                h += 1;
            }
            return if n == 1 { Some((p, h)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// ---------------------------------------------------------------------
// Curve files
// ---------------------------------------------------------------------

pub fn write_curve(f: &FieldSpec, poly: &HPoly) -> String {
    let mut out = format!("{} {}\n", f.q(), poly.degree());
    for (i, j, k, c) in poly.terms() {
        out.push_str(&format!("{i} {j} {k} {}\n", c.index()));
    }
    out
}

pub fn read_curve(text: &str, cap: u32) -> Result<(FieldSpec, HPoly), FormatError> {
    let mut lines = text.lines().enumerate();
    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "empty curve file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(syntax(ln + 1, "expected header 'q d'"));
    }
    let q: u32 = head[0]
        .parse()
        .map_err(|_| syntax(ln + 1, "bad q in header"))?;
    let d: u32 = head[1]
        .parse()
        .map_err(|_| syntax(ln + 1, "bad degree in header"))?;
    let f = field_for_q(q, cap)?;
    let mut terms = Vec::new();
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(syntax(ln + 1, "expected 'i j k c'"));
        }
        let i: u32 = parts[0].parse().map_err(|_| syntax(ln + 1, "bad exponent"))?;
        let j: u32 = parts[1].parse().map_err(|_| syntax(ln + 1, "bad exponent"))?;
        let k: u32 = parts[2].parse().map_err(|_| syntax(ln + 1, "bad exponent"))?;
        let c: u32 = parts[3]
            .parse()
            .map_err(|_| syntax(ln + 1, "bad coefficient"))?;
        let felt = f
            .elt_checked(c)
            .map_err(|e| syntax(ln + 1, format!("{e}")))?;
        if i + j + k != d {
            return Err(syntax(ln + 1, format!("exponents sum to {} != {d}", i + j + k)));
        }
        terms.push((i, j, k, felt));
    }
    let poly = HPoly::from_terms(&f, d, &terms)
        .map_err(|e| FormatError::Semantic(format!("{e}")))?;
    Ok((f, poly))
}

// ---------------------------------------------------------------------
// Arc files
// ---------------------------------------------------------------------

pub fn write_arc(f: &FieldSpec, s: &PointSet) -> String {
    let mut out = format!("{} {}\n", f.q(), s.len());
    for p in s.points(f) {
        out.push_str(&p.render());
        out.push('\n');
    }
    out
}

pub fn parse_point(f: &FieldSpec, text: &str) -> Result<PPoint, String> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| format!("expected (x:y:z), got '{t}'"))?;
    let parts: Vec<&str> = inner.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected three coordinates, got '{t}'"));
    }
    let mut coords = [f.zero(); 3];
    for (slot, part) in coords.iter_mut().zip(&parts) {
        let idx: u32 = part.trim().parse().map_err(|_| format!("bad coordinate in '{t}'"))?;
        *slot = f.elt_checked(idx).map_err(|e| format!("{e}"))?;
    }
    PPoint::new(f, coords).map_err(|e| format!("{e}"))
}

pub fn read_arc(text: &str, cap: u32) -> Result<(FieldSpec, PointSet), FormatError> {
    let mut lines = text.lines().enumerate();
    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty arc file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(syntax(ln + 1, "expected header 'q k'"));
    }
    let q: u32 = head[0]
        .parse()
        .map_err(|_| syntax(ln + 1, "bad q in header"))?;
    let k: usize = head[1]
        .parse()
        .map_err(|_| syntax(ln + 1, "bad k in header"))?;
    let f = field_for_q(q, cap)?;
    let mut pts = Vec::with_capacity(k);
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        pts.push(parse_point(&f, line).map_err(|m| syntax(ln + 1, m))?);
    }
    if pts.len() != k {
        return Err(FormatError::Semantic(format!(
            "header promises {k} points, file has {}",
            pts.len()
        )));
    }
    let s = PointSet::from_points(&f, &pts)
        .map_err(|e| FormatError::Semantic(format!("{e}")))?;
    Ok((f, s))
}

// ---------------------------------------------------------------------
// Generator matrix files
// ---------------------------------------------------------------------

pub struct GenMatrixFile {
    pub field: FieldSpec,
    pub code: LinearCode3,
    pub weights: Option<WeightEnumerator>,
}

pub fn write_genmatrix(
    f: &FieldSpec,
    code: &LinearCode3,
    weights: Option<&WeightEnumerator>,
) -> String {
    let mut out = format!("{} 3 {} {}\n", code.n(), code.d(), f.q());
    for row in code.generator_rows() {
        let cells: Vec<String> = row.iter().map(|c| c.index().to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(w) = weights {
        let cells: Vec<String> = (code.d()..=code.n())
            .map(|i| w.counts()[i].to_string())
            .collect();
        out.push_str("W: ");
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_genmatrix(text: &str, cap: u32) -> Result<GenMatrixFile, FormatError> {
    let mut lines = text.lines().enumerate();
    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty file"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 4 || head[1] != "3" {
        return Err(syntax(ln + 1, "expected header 'n 3 d q'"));
    }
    let n: usize = head[0].parse().map_err(|_| syntax(ln + 1, "bad n"))?;
    let d: usize = head[2].parse().map_err(|_| syntax(ln + 1, "bad d"))?;
    let q: u32 = head[3].parse().map_err(|_| syntax(ln + 1, "bad q"))?;
    let f = field_for_q(q, cap)?;
    let mut rows = Vec::with_capacity(3);
    let mut weights = None;
    for (ln, line) in lines {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix("W:") {
            let counts: Result<Vec<u64>, _> =
                rest.split_whitespace().map(|x| x.parse::<u64>()).collect();
            let counts = counts.map_err(|_| syntax(ln + 1, "bad weight count"))?;
            if counts.len() != n - d + 1 {
                return Err(syntax(
                    ln + 1,
                    format!("expected {} weight counts c_d..c_n", n - d + 1),
                ));
            }
            let mut c = vec![0u64; n + 1];
            c[0] = 1;
            for (i, &x) in counts.iter().enumerate() {
                c[d + i] = x;
            }
            weights = Some(WeightEnumerator::from_counts(c));
            continue;
        }
        if rows.len() == 3 {
            return Err(syntax(ln + 1, "more than three matrix rows"));
        }
        let row: Result<Vec<u32>, _> = t.split_whitespace().map(|x| x.parse::<u32>()).collect();
        let row = row.map_err(|_| syntax(ln + 1, "bad matrix entry"))?;
        if row.len() != n {
            return Err(syntax(ln + 1, format!("expected {n} entries")));
        }
        rows.push(row);
    }
    if rows.len() != 3 {
        return Err(FormatError::Semantic("expected three matrix rows".into()));
    }
    // columns as points; the code structure is rebuilt from the columns
    let mut pts = Vec::with_capacity(n);
    for c in 0..n {
        let coords = [
            f.elt_checked(rows[0][c])
                .map_err(|e| FormatError::Semantic(format!("{e}")))?,
            f.elt_checked(rows[1][c])
                .map_err(|e| FormatError::Semantic(format!("{e}")))?,
            f.elt_checked(rows[2][c])
                .map_err(|e| FormatError::Semantic(format!("{e}")))?,
        ];
        pts.push(
            PPoint::new(&f, coords)
                .map_err(|e| FormatError::Semantic(format!("zero column: {e}")))?,
        );
    }
    let set = PointSet::from_points(&f, &pts)
        .map_err(|e| FormatError::Semantic(format!("columns not projectively distinct: {e}")))?;
    let plane = curveforge_core::projplane::Plane::new(&f);
    let code = curveforge_core::codes::code_from_arc(&f, &plane, &set)
        .map_err(|e| FormatError::Semantic(format!("{e}")))?;
    if code.d() != d {
        return Err(FormatError::Semantic(format!(
            "header distance {d} disagrees with the column geometry ({})",
            code.d()
        )));
    }
    Ok(GenMatrixFile {
        field: f,
        code,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use curveforge_core::curve::{family_catalog, FamilyId};
    use curveforge_core::projplane::Plane;

    const CAP: u32 = 1 << 14;

    #[test]
    fn curve_roundtrip() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let c = family_catalog(
            &f,
            &FamilyId::Fermat {
                alpha: f.one(),
                beta: f.one(),
                gamma: f.from_int(3),
                require_zero_sum: true,
            },
        )
        .unwrap();
        let text = write_curve(&f, c.poly());
        let (f2, poly2) = read_curve(&text, CAP).unwrap();
        assert_eq!(f2.q(), 5);
        assert_eq!(&poly2, c.poly());
        // order-insensitive read
        let mut lines: Vec<&str> = text.lines().collect();
        lines[1..].reverse();
        let shuffled = lines.join("\n");
        let (_, poly3) = read_curve(&shuffled, CAP).unwrap();
        assert_eq!(poly3, poly2);
    }

    #[test]
    fn curve_errors() {
        assert!(read_curve("", CAP).is_err());
        assert!(read_curve("6 2\n", CAP).is_err()); // not a prime power
        assert!(read_curve("5 2\n1 1 1 1\n", CAP).is_err()); // degree mismatch
        assert!(read_curve("5 2\n2 0 0 9\n", CAP).is_err()); // element out of range
    }

    #[test]
    fn arc_roundtrip_and_duplicates() {
        let f = FieldSpec::make_field(7, 1).unwrap();
        let c = family_catalog(
            &f,
            &FamilyId::Fermat {
                alpha: f.one(),
                beta: f.one(),
                gamma: f.from_int(5),
                require_zero_sum: true,
            },
        )
        .unwrap();
        let text = write_arc(&f, c.points());
        let (_, s) = read_arc(&text, CAP).unwrap();
        assert_eq!(&s, c.points());

        let dup = "5 2\n(1:2:3)\n(2:4:1)\n"; // same point scaled
        assert!(read_arc(dup, CAP).is_err());

        let short = "5 3\n(1:2:3)\n";
        assert!(read_arc(short, CAP).is_err());
    }

    #[test]
    fn genmatrix_bit_exact_roundtrip() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let c = family_catalog(
            &f,
            &FamilyId::Fermat {
                alpha: f.one(),
                beta: f.one(),
                gamma: f.from_int(3),
                require_zero_sum: true,
            },
        )
        .unwrap();
        let code = curveforge_core::codes::code_from_arc(&f, &plane, c.points()).unwrap();
        let we = curveforge_core::codes::weight_enumerator(&f, &code).unwrap();
        for with_w in [false, true] {
            let text = write_genmatrix(&f, &code, with_w.then_some(&we));
            let parsed = read_genmatrix(&text, CAP).unwrap();
            let again = write_genmatrix(
                &parsed.field,
                &parsed.code,
                parsed.weights.as_ref(),
            );
            assert_eq!(text, again, "round trip must be bit-exact");
        }
    }

    #[test]
    fn genmatrix_header_distance_checked() {
        let f = FieldSpec::make_field(5, 1).unwrap();
        let plane = Plane::new(&f);
        let c = family_catalog(&f, &FamilyId::Conic).unwrap();
        let code = curveforge_core::codes::code_from_arc(&f, &plane, c.points()).unwrap();
        let text = write_genmatrix(&f, &code, None);
        // corrupt the distance field
        let bad = text.replacen(&format!(" {} ", code.d()), " 1 ", 1);
        assert!(read_genmatrix(&bad, CAP).is_err());
    }
}
