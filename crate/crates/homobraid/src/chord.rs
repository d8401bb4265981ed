//! Chord sets on a circularly ordered boundary: right/left comparison at a
//! shared endpoint, and extraction of one right and one left witness from
//! two distinct non-crossing matchings with equal endpoint sets.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChordError {
    #[error("unknown boundary point {0}")]
    UnknownPoint(String),
    #[error("duplicate boundary point {0}")]
    DuplicatePoint(String),
    #[error("point {0} used by two chords of the same set")]
    EndpointReused(String),
    #[error("chord {0}-{1} has identical endpoints")]
    DegenerateChord(String, String),
    #[error("chords {0}-{1} and {2}-{3} of the same set cross")]
    Crossing(String, String, String, String),
    #[error("chord endpoint sets of A and B differ at {0}")]
    EndpointMismatch(String),
    #[error("chord {0}-{1} joins two points of the same side")]
    SameSideChord(String, String),
    #[error("sides do not partition the boundary points in order")]
    BadSidePartition,
    #[error("chords do not share exactly one endpoint, or it is not {0}")]
    NotSharedAt(String),
    #[error("malformed chord config: {0}")]
    Malformed(String),
}

/// Two chord sets A and B on common circularly ordered boundary points,
/// optionally with the points partitioned into consecutive polygon sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordConfig {
    points: Vec<String>,
    /// side index per point, present in polygon mode
    side_of: Option<Vec<usize>>,
    chords_a: Vec<(usize, usize)>,
    chords_b: Vec<(usize, usize)>,
}

/// One half of a witness pair: chords `a` and `b` sharing exactly the
/// boundary point `at`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub a: (String, String),
    pub b: (String, String),
    pub at: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    /// b right of a at the shared point.
    pub right: Witness,
    /// b left of a at the shared point.
    pub left: Witness,
    /// Polygon mode: the other endpoints of each witness's chords lie on
    /// different sides.
    pub different_sides: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Equal,
    Pair(WitnessPair),
}

/// True iff, reading the circular order of `points` starting just after the
/// shared endpoint `p`, chord `a`'s other endpoint precedes chord `b`'s.
/// Earlier is further right.
pub fn is_right_of(
    points: &[String],
    a: (&str, &str),
    b: (&str, &str),
    p: &str,
) -> Result<bool, ChordError> {
    let pos = |l: &str| {
        points
            .iter()
            .position(|q| q == l)
            .ok_or_else(|| ChordError::UnknownPoint(l.to_string()))
    };
    let (a0, a1) = (pos(a.0)?, pos(a.1)?);
    let (b0, b1) = (pos(b.0)?, pos(b.1)?);
    let shared = pos(p)?;
    let other = |(x, y): (usize, usize)| {
        if x == shared {
            Some(y)
        } else if y == shared {
            Some(x)
        } else {
            None
        }
    };
    let (oa, ob) = match (other((a0, a1)), other((b0, b1))) {
        (Some(oa), Some(ob)) if oa != ob && oa != shared && ob != shared => (oa, ob),
        _ => return Err(ChordError::NotSharedAt(p.to_string())),
    };
    let n = points.len();
    let rank = |x: usize| (x + n - shared) % n; // 0 only for p itself
    Ok(rank(oa) < rank(ob))
}

impl ChordConfig {
    pub fn new(
        points: Vec<String>,
        sides: Option<Vec<Vec<String>>>,
        chords_a: Vec<(String, String)>,
        chords_b: Vec<(String, String)>,
    ) -> Result<ChordConfig, ChordError> {
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p, i).is_some() {
                return Err(ChordError::DuplicatePoint(p.clone()));
            }
        }
        let side_of = match sides {
            None => None,
            Some(sides) => {
                // sides must list the points consecutively, in order
                let flat: Vec<&String> = sides.iter().flatten().collect();
                if flat.len() != points.len()
                    || flat.iter().zip(&points).any(|(a, b)| **a != *b)
                {
                    return Err(ChordError::BadSidePartition);
                }
                let mut side_of = Vec::with_capacity(points.len());
                for (s, side) in sides.iter().enumerate() {
                    side_of.extend(std::iter::repeat(s).take(side.len()));
                }
                Some(side_of)
            }
        };
        let resolve = |set: &[(String, String)]| -> Result<Vec<(usize, usize)>, ChordError> {
            let mut out = Vec::with_capacity(set.len());
            let mut used = vec![false; points.len()];
            for (x, y) in set {
                let xi = *index
                    .get(x.as_str())
                    .ok_or_else(|| ChordError::UnknownPoint(x.clone()))?;
                let yi = *index
                    .get(y.as_str())
                    .ok_or_else(|| ChordError::UnknownPoint(y.clone()))?;
                if xi == yi {
                    return Err(ChordError::DegenerateChord(x.clone(), y.clone()));
                }
                for i in [xi, yi] {
                    if used[i] {
                        return Err(ChordError::EndpointReused(points[i].clone()));
                    }
                    used[i] = true;
                }
                out.push((xi.min(yi), xi.max(yi)));
            }
            Ok(out)
        };
        let a = resolve(&chords_a)?;
        let b = resolve(&chords_b)?;
        for set in [&a, &b] {
            for (i, &(x0, x1)) in set.iter().enumerate() {
                for &(y0, y1) in &set[i + 1..] {
                    // chords cross iff exactly one endpoint of one lies
                    // strictly between the endpoints of the other
                    if (x0 < y0 && y0 < x1) != (x0 < y1 && y1 < x1) {
                        return Err(ChordError::Crossing(
                            points[x0].clone(),
                            points[x1].clone(),
                            points[y0].clone(),
                            points[y1].clone(),
                        ));
                    }
                }
            }
        }
        let touched = |set: &[(usize, usize)]| {
            let mut t = vec![false; points.len()];
            for &(x, y) in set {
                t[x] = true;
                t[y] = true;
            }
            t
        };
        let (ta, tb) = (touched(&a), touched(&b));
        if let Some(i) = (0..points.len()).find(|&i| ta[i] != tb[i]) {
            return Err(ChordError::EndpointMismatch(points[i].clone()));
        }
        if let Some(side_of) = &side_of {
            for &(x, y) in a.iter().chain(&b) {
                if side_of[x] == side_of[y] {
                    return Err(ChordError::SameSideChord(
                        points[x].clone(),
                        points[y].clone(),
                    ));
                }
            }
        }
        Ok(ChordConfig {
            points,
            side_of,
            chords_a: a,
            chords_b: b,
        })
    }

    /// Line format: `points p q r ...`, optional `side p q` lines listing the
    /// points of each side in order, then `a p q` / `b p q` chord lines.
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<ChordConfig, ChordError> {
        let mut points: Option<Vec<String>> = None;
        let mut sides: Vec<Vec<String>> = Vec::new();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace().map(str::to_string);
            let head = tokens.next().unwrap();
            let rest: Vec<String> = tokens.collect();
            let chord = |rest: &[String]| -> Result<(String, String), ChordError> {
                match rest {
                    [x, y] => Ok((x.clone(), y.clone())),
                    _ => Err(ChordError::Malformed(format!(
                        "line {}: expected two endpoints",
                        no + 1
                    ))),
                }
            };
            match head.as_str() {
                "points" => {
                    if points.replace(rest).is_some() {
                        return Err(ChordError::Malformed(format!(
                            "line {}: duplicate points line",
                            no + 1
                        )));
                    }
                }
                "side" => sides.push(rest),
                "a" => a.push(chord(&rest)?),
                "b" => b.push(chord(&rest)?),
                other => {
                    return Err(ChordError::Malformed(format!(
                        "line {}: unknown directive {other}",
                        no + 1
                    )))
                }
            }
        }
        let points = points.ok_or_else(|| ChordError::Malformed("missing points line".into()))?;
        let sides = if sides.is_empty() { None } else { Some(sides) };
        ChordConfig::new(points, sides, a, b)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn polygon_mode(&self) -> bool {
        self.side_of.is_some()
    }

    fn chord_at(set: &[(usize, usize)], p: usize) -> Option<(usize, usize)> {
        set.iter().copied().find(|&(x, y)| x == p || y == p)
    }

    fn labels(&self, c: (usize, usize)) -> (String, String) {
        (self.points[c.0].clone(), self.points[c.1].clone())
    }
}

/// Scan the boundary points in circular order and report the first point
/// where B's chord is right of A's and the first where it is left. In
/// polygon mode only candidates whose other endpoints lie on different sides
/// count. Returns `Equal` iff the chord sets coincide.
pub fn find_witnesses(cfg: &ChordConfig) -> WitnessOutcome {
    let n = cfg.points.len();
    let mut right = None;
    let mut left = None;
    for p in 0..n {
        let (Some(a), Some(b)) = (
            ChordConfig::chord_at(&cfg.chords_a, p),
            ChordConfig::chord_at(&cfg.chords_b, p),
        ) else {
            continue;
        };
        if a == b {
            continue;
        }
        let other = |(x, y): (usize, usize)| if x == p { y } else { x };
        if let Some(side_of) = &cfg.side_of {
            if side_of[other(a)] == side_of[other(b)] {
                continue;
            }
        }
        let rank = |x: usize| (x + n - p) % n;
        let b_right = rank(other(b)) < rank(other(a));
        let witness = Witness {
            a: cfg.labels(a),
            b: cfg.labels(b),
            at: cfg.points[p].clone(),
        };
        let slot = if b_right { &mut right } else { &mut left };
        if slot.is_none() {
            *slot = Some(witness);
        }
    }
    match (right, left) {
        (Some(right), Some(left)) => WitnessOutcome::Pair(WitnessPair {
            right,
            left,
            different_sides: cfg.polygon_mode(),
        }),
        (None, None) => WitnessOutcome::Equal,
        (right, left) => unreachable!(
            "distinct matchings admit both witnesses, got right={right:?} left={left:?}"
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("p{i}")).collect()
    }

    fn pairs(raw: &[(&str, &str)]) -> Vec<(String, String)> {
        raw.iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect()
    }

    #[test]
    fn right_of_basics() {
        let points = pts(4);
        // a = {1,2}, b = {1,3}: after p1, a's other endpoint comes first
        assert_eq!(
            is_right_of(&points, ("p1", "p2"), ("p1", "p3"), "p1"),
            Ok(true)
        );
        assert_eq!(
            is_right_of(&points, ("p1", "p3"), ("p1", "p2"), "p1"),
            Ok(false)
        );
        assert_eq!(
            is_right_of(&points, ("p1", "p2"), ("p1", "p2"), "p1"),
            Err(ChordError::NotSharedAt("p1".into()))
        );
        assert_eq!(
            is_right_of(&points, ("p1", "p2"), ("p3", "p4"), "p1"),
            Err(ChordError::NotSharedAt("p1".into()))
        );
    }

    #[test]
    fn antisymmetry() {
        let points = pts(6);
        for x in 2..=6 {
            for y in 2..=6 {
                if x == y {
                    continue;
                }
                let a = (String::from("p1"), format!("p{x}"));
                let b = (String::from("p1"), format!("p{y}"));
                let ab = is_right_of(&points, (&a.0, &a.1), (&b.0, &b.1), "p1").unwrap();
                let ba = is_right_of(&points, (&b.0, &b.1), (&a.0, &a.1), "p1").unwrap();
                assert_ne!(ab, ba);
            }
        }
    }

    #[test]
    fn equal_sets() {
        let cfg = ChordConfig::new(
            pts(4),
            None,
            pairs(&[("p1", "p2"), ("p3", "p4")]),
            pairs(&[("p3", "p4"), ("p1", "p2")]),
        )
        .unwrap();
        assert_eq!(find_witnesses(&cfg), WitnessOutcome::Equal);
    }

    #[test]
    fn four_point_swap() {
        let cfg = ChordConfig::new(
            pts(4),
            None,
            pairs(&[("p1", "p2"), ("p3", "p4")]),
            pairs(&[("p1", "p4"), ("p2", "p3")]),
        )
        .unwrap();
        let WitnessOutcome::Pair(w) = find_witnesses(&cfg) else {
            panic!("expected witnesses");
        };
        assert!(!w.different_sides);
        // re-check the reported relations
        assert!(is_right_of(
            &cfg.points,
            (&w.right.b.0, &w.right.b.1),
            (&w.right.a.0, &w.right.a.1),
            &w.right.at
        )
        .unwrap());
        assert!(is_right_of(
            &cfg.points,
            (&w.left.a.0, &w.left.a.1),
            (&w.left.b.0, &w.left.b.1),
            &w.left.at
        )
        .unwrap());
    }

    #[test]
    fn swapping_sets_swaps_roles() {
        let a = pairs(&[("p1", "p2"), ("p3", "p4")]);
        let b = pairs(&[("p1", "p4"), ("p2", "p3")]);
        let cfg = ChordConfig::new(pts(4), None, a.clone(), b.clone()).unwrap();
        let swapped = ChordConfig::new(pts(4), None, b, a).unwrap();
        let (WitnessOutcome::Pair(w), WitnessOutcome::Pair(v)) =
            (find_witnesses(&cfg), find_witnesses(&swapped))
        else {
            panic!("expected witnesses");
        };
        assert_eq!(w.right.at, v.left.at);
        assert_eq!(w.left.at, v.right.at);
    }

    // Two 3-chord sets on a 4-gon, points labeled along the transcribed
    // curves rather than around the boundary.
    fn hexagon() -> ChordConfig {
        let points: Vec<String> = ["p1", "p5", "p2", "p3", "p4", "p6"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let sides = vec![
            vec!["p1".to_string()],
            vec!["p5".to_string(), "p2".to_string()],
            vec!["p3".to_string(), "p4".to_string()],
            vec!["p6".to_string()],
        ];
        ChordConfig::new(
            points,
            Some(sides),
            pairs(&[("p1", "p6"), ("p4", "p5"), ("p2", "p3")]),
            pairs(&[("p1", "p5"), ("p2", "p3"), ("p4", "p6")]),
        )
        .unwrap()
    }

    #[test]
    fn hexagon_on_square() {
        let WitnessOutcome::Pair(w) = find_witnesses(&hexagon()) else {
            panic!("expected witnesses");
        };
        assert!(w.different_sides);
        assert_eq!(w.right.at, "p1");
        assert_eq!(w.left.at, "p5");
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            ChordConfig::new(
                pts(4),
                None,
                pairs(&[("p1", "p3"), ("p2", "p4")]),
                pairs(&[("p1", "p3"), ("p2", "p4")]),
            ),
            Err(ChordError::Crossing(
                "p1".into(),
                "p3".into(),
                "p2".into(),
                "p4".into()
            ))
        );
        assert_eq!(
            ChordConfig::new(
                pts(4),
                None,
                pairs(&[("p1", "p2"), ("p2", "p3")]),
                pairs(&[("p1", "p2"), ("p2", "p3")]),
            ),
            Err(ChordError::EndpointReused("p2".into()))
        );
        assert_eq!(
            ChordConfig::new(
                pts(4),
                None,
                pairs(&[("p1", "p2")]),
                pairs(&[("p3", "p4")]),
            ),
            Err(ChordError::EndpointMismatch("p1".into()))
        );
        assert_eq!(
            ChordConfig::new(
                pts(4),
                Some(vec![
                    vec!["p1".into(), "p2".into()],
                    vec!["p3".into(), "p4".into()],
                ]),
                pairs(&[("p1", "p2"), ("p3", "p4")]),
                pairs(&[("p1", "p2"), ("p3", "p4")]),
            ),
            Err(ChordError::SameSideChord("p1".into(), "p2".into()))
        );
        assert_eq!(
            ChordConfig::new(
                pts(4),
                Some(vec![vec!["p1".into()], vec!["p3".into(), "p2".into()]]),
                vec![],
                vec![],
            ),
            Err(ChordError::BadSidePartition)
        );
    }

    #[test]
    fn parse_config() {
        let text = "
# four boundary points
points p1 p2 p3 p4
a p1 p2
a p3 p4
b p1 p4
b p2 p3
";
        let cfg = ChordConfig::parse(text).unwrap();
        assert!(!cfg.polygon_mode());
        assert!(matches!(find_witnesses(&cfg), WitnessOutcome::Pair(_)));
        assert!(ChordConfig::parse("a p1 p2").is_err());
        assert!(ChordConfig::parse("points p1 p2\nq x y").is_err());
    }
}
