//! Exhaustive pair counting.

use super::{Design, Point};
use crate::report::{VerificationReport, Violation};

/// Triangular pair counter over `v` points.
#[derive(Clone, Debug)]
pub struct PairCounter {
    v: usize,
    counts: Vec<u16>,
}

impl PairCounter {
    pub fn new(v: usize) -> Self {
        Self { v, counts: vec![0; v * v.saturating_sub(1) / 2] }
    }

    fn slot(&self, a: Point, b: Point) -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        // row a holds pairs (a, a+1..v)
        a * (2 * self.v - a - 1) / 2 + (b - a - 1)
    }

    pub fn get(&self, a: Point, b: Point) -> usize {
        usize::from(self.counts[self.slot(a, b)])
    }

    /// Adds one to the count of `{a, b}` and returns the new count.
    pub fn bump(&mut self, a: Point, b: Point) -> usize {
        let s = self.slot(a, b);
        self.counts[s] = self.counts[s].saturating_add(1);
        usize::from(self.counts[s])
    }

    pub fn unbump(&mut self, a: Point, b: Point) {
        let s = self.slot(a, b);
        self.counts[s] -= 1;
    }

    /// All pairs `a < b` with their counts, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Point, Point, usize)> + '_ {
        (0..self.v).flat_map(move |a| (a + 1..self.v).map(move |b| (a, b, self.get(a, b))))
    }
}

pub fn pair_counts(d: &Design) -> PairCounter {
    let mut c = PairCounter::new(d.v());
    for b in &d.blocks {
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i + 1..] {
                c.bump(x, y);
            }
        }
    }
    c
}

fn lambda_text(lambda: usize, partial: bool) -> String {
    if partial {
        format!("<= {lambda}")
    } else {
        lambda.to_string()
    }
}

/// Shared checker: block sizes, repeated points, optional groups, pairs.
fn check(
    d: &Design,
    subject: String,
    sizes: &[usize],
    lambda: usize,
    partial: bool,
    groups: Option<&[Vec<Point>]>,
) -> VerificationReport {
    let (v, b) = (d.v(), d.b());
    let fail = |viol| VerificationReport::fail(subject.clone(), v, b, viol);
    let mut group_of: Vec<Option<usize>> = vec![None; v];
    if let Some(groups) = groups {
        for (gi, g) in groups.iter().enumerate() {
            for &p in g {
                if p >= v {
                    return fail(Violation::GroupPartition { detail: format!("group {gi} has point index {p}") });
                }
                if group_of[p].is_some() {
                    return fail(Violation::GroupPartition {
                        detail: format!("point {} lies in two groups", d.render(p)),
                    });
                }
                group_of[p] = Some(gi);
            }
        }
        if let Some(p) = group_of.iter().position(Option::is_none) {
            return fail(Violation::GroupPartition {
                detail: format!("point {} lies in no group", d.render(p)),
            });
        }
    }
    let mut counter = PairCounter::new(v);
    for (bi, block) in d.blocks.iter().enumerate() {
        if !sizes.contains(&block.len()) {
            return fail(Violation::BlockSize { block: bi, size: block.len(), allowed: sizes.to_vec() });
        }
        for (i, &x) in block.iter().enumerate() {
            if x >= v {
                return fail(Violation::UnknownPoint { block: bi, point: x.to_string() });
            }
            for &y in &block[i + 1..] {
                if y == x {
                    return fail(Violation::RepeatedPoint { block: bi, point: d.render(x) });
                }
                if groups.is_some() && group_of[x] == group_of[y] {
                    return fail(Violation::IntraGroupPair { block: bi, a: d.render(x), b: d.render(y) });
                }
                let c = counter.bump(x, y);
                if c > lambda {
                    return fail(Violation::PairCount {
                        a: d.render(x.min(y)),
                        b: d.render(x.max(y)),
                        count: c,
                        expected: lambda_text(lambda, partial),
                    });
                }
            }
        }
    }
    if !partial {
        for (x, y, c) in counter.iter() {
            let same = groups.is_some() && group_of[x] == group_of[y];
            if !same && c != lambda {
                return fail(Violation::PairCount {
                    a: d.render(x),
                    b: d.render(y),
                    count: c,
                    expected: lambda.to_string(),
                });
            }
        }
    }
    VerificationReport::pass(subject, v, b)
}

fn prefix(partial: bool) -> &'static str {
    if partial {
        "partial "
    } else {
        ""
    }
}

pub fn verify_bibd(d: &Design, v: usize, k: usize, lambda: usize, partial: bool) -> VerificationReport {
    let subject = format!("{}({v},{k},{lambda})-BIBD", prefix(partial));
    if d.v() != v {
        return VerificationReport::fail(subject, d.v(), d.b(), Violation::PointCount { expected: v, found: d.v() });
    }
    check(d, subject, &[k], lambda, partial, None)
}

/// `(v, K)`-PBD: every pair exactly once, block sizes in `sizes`.
pub fn verify_pbd(d: &Design, v: usize, sizes: &[usize]) -> VerificationReport {
    let subject = format!("({v},{sizes:?})-PBD");
    if d.v() != v {
        return VerificationReport::fail(subject, d.v(), d.b(), Violation::PointCount { expected: v, found: d.v() });
    }
    check(d, subject, sizes, 1, false, None)
}

pub fn verify_gdd(d: &Design, k: usize, lambda: usize, partial: bool) -> VerificationReport {
    verify_gdd_sizes(d, &[k], lambda, partial)
}

pub fn verify_gdd_sizes(d: &Design, sizes: &[usize], lambda: usize, partial: bool) -> VerificationReport {
    let ks = if sizes.len() == 1 {
        sizes[0].to_string()
    } else {
        format!("{sizes:?}")
    };
    let ty = d.group_type().unwrap_or_else(|| "?".into());
    let subject = format!("{}({ks},{lambda})-GDD of type {ty}", prefix(partial));
    match &d.groups {
        None => VerificationReport::fail(
            subject,
            d.v(),
            d.b(),
            Violation::GroupPartition { detail: "no group partition given".into() },
        ),
        Some(groups) => check(d, subject, sizes, lambda, partial, Some(groups)),
    }
}
