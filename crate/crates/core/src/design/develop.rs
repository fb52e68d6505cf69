//! Development of base blocks through a group, with optional infinity
//! points and partial orbits.

use super::{Design, Label, Point};
use crate::error::{Error, Result};
use crate::group::{Elem, Factor, FiniteGroup, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasePoint {
    G(Elem),
    /// Infinity point `inf<i>`.
    Inf(usize),
}

/// How translation by `g` acts on infinity points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfinityAction {
    Fixed,
    /// `inf_i + g = inf_{(i + g) mod m}`; cyclic groups only, `m | n`.
    Rotate(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translations {
    Group,
    Subgroup(Subgroup),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSpec {
    pub base: Vec<BasePoint>,
    pub nested: Option<BasePoint>,
    pub translations: Translations,
    /// Take only the first `count` translates of `T` in enumeration order.
    pub count: Option<usize>,
}

impl OrbitSpec {
    pub fn full(base: Vec<BasePoint>) -> Self {
        Self { base, nested: None, translations: Translations::Group, count: None }
    }

    pub fn of_elems(base: &[Elem]) -> Self {
        Self::full(base.iter().map(|&e| BasePoint::G(e)).collect())
    }

    pub fn nested_with(mut self, p: BasePoint) -> Self {
        self.nested = Some(p);
        self
    }

    pub fn partial(mut self, count: usize) -> Self {
        self.count = Some(count);
        self
    }

    pub fn over(mut self, t: Subgroup) -> Self {
        self.translations = Translations::Subgroup(t);
        self
    }
}

/// Label of a group element: an integer for `Z_n` and prime fields, the
/// rendered element otherwise.
pub fn elem_label(group: &FiniteGroup, e: Elem) -> Label {
    match group.factors() {
        [Factor::Cyclic(_)] => Label::Int(e as i64),
        [Factor::Field(f)] if f.degree() == 1 => Label::Int(e as i64),
        _ => Label::Text(group.render(e)),
    }
}

/// A point universe `G ∪ {inf0, ..., inf<m-1>}` with an infinity action.
#[derive(Clone, Debug)]
pub struct Development {
    pub group: FiniteGroup,
    pub infinities: usize,
    pub action: InfinityAction,
}

/// Result of developing: a design and, when every orbit carried one, the
/// nested point of each block.
#[derive(Clone, Debug)]
pub struct Developed {
    pub design: Design,
    pub nested: Option<Vec<Point>>,
}

impl Development {
    pub fn new(group: FiniteGroup) -> Self {
        Self { group, infinities: 0, action: InfinityAction::Fixed }
    }

    pub fn with_infinities(mut self, m: usize, action: InfinityAction) -> Result<Self> {
        if let InfinityAction::Rotate(r) = action {
            let n = match self.group.factors() {
                [Factor::Cyclic(n)] => *n as usize,
                _ => return Err(Error::InvalidInput("rotating infinity action needs a cyclic group".into())),
            };
            if r != m || n % r != 0 {
                return Err(Error::InvalidInput(format!(
                    "rotation of {m} infinity points is not an action of Z{n}"
                )));
            }
        }
        self.infinities = m;
        self.action = action;
        Ok(self)
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut labels: Vec<Label> = self.group.elements().map(|e| elem_label(&self.group, e)).collect();
        labels.extend((0..self.infinities).map(|i| Label::Text(format!("inf{i}"))));
        labels
    }

    pub fn point(&self, p: BasePoint) -> Point {
        match p {
            BasePoint::G(e) => e,
            BasePoint::Inf(i) => self.group.order() + i,
        }
    }

    pub fn base_point(&self, p: Point) -> BasePoint {
        if p < self.group.order() {
            BasePoint::G(p)
        } else {
            BasePoint::Inf(p - self.group.order())
        }
    }

    pub fn translate(&self, p: BasePoint, t: Elem) -> BasePoint {
        match (p, self.action) {
            (BasePoint::G(e), _) => BasePoint::G(self.group.add(e, t)),
            (BasePoint::Inf(i), InfinityAction::Fixed) => BasePoint::Inf(i),
            (BasePoint::Inf(i), InfinityAction::Rotate(m)) => BasePoint::Inf((i + t) % m),
        }
    }

    fn translate_block(&self, b: &[BasePoint], t: Elem) -> Vec<Point> {
        let mut out: Vec<Point> = b.iter().map(|&p| self.point(self.translate(p, t))).collect();
        out.sort_unstable();
        out
    }

    fn check_point(&self, p: BasePoint) -> Result<()> {
        match p {
            BasePoint::G(e) if e < self.group.order() => Ok(()),
            BasePoint::Inf(i) if i < self.infinities => Ok(()),
            _ => Err(Error::InvalidInput(format!("base point {p:?} outside the point universe"))),
        }
    }

    /// Translates of one orbit, with the computed stabilizer checked
    /// against the declared count.
    fn orbit(&self, spec: &OrbitSpec) -> Result<Vec<(Vec<Point>, Option<Point>)>> {
        for &p in spec.base.iter().chain(spec.nested.iter()) {
            self.check_point(p)?;
        }
        let ts: Vec<Elem> = match &spec.translations {
            Translations::Group => self.group.elements().collect(),
            Translations::Subgroup(h) => h.elements().to_vec(),
        };
        let base = self.translate_block(&spec.base, 0);
        if base.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("base block repeats a point".into()));
        }
        let stab = ts.iter().filter(|&&t| self.translate_block(&spec.base, t) == base).count();
        let count = match spec.count {
            None if stab == 1 => ts.len(),
            None => {
                return Err(Error::InvalidInput(format!(
                    "base block has a stabilizer of order {stab}; declare {} translates",
                    ts.len() / stab
                )))
            }
            Some(c) if stab > 1 && c != ts.len() / stab => {
                return Err(Error::InvalidInput(format!(
                    "base block has a stabilizer of order {stab}, so {} translates are distinct, not {c}",
                    ts.len() / stab
                )))
            }
            Some(c) if c > ts.len() => {
                return Err(Error::InvalidInput(format!("{c} translates requested from {}", ts.len())))
            }
            Some(c) => c,
        };
        Ok(ts[..count]
            .iter()
            .map(|&t| {
                (
                    self.translate_block(&spec.base, t),
                    spec.nested.map(|n| self.point(self.translate(n, t))),
                )
            })
            .collect())
    }

    pub fn develop(&self, specs: &[OrbitSpec]) -> Result<Developed> {
        let mut blocks = Vec::new();
        let mut nested = Vec::new();
        let all_nested = !specs.is_empty() && specs.iter().all(|s| s.nested.is_some());
        for spec in specs {
            for (b, n) in self.orbit(spec)? {
                blocks.push(b);
                if let Some(n) = n {
                    nested.push(n);
                }
            }
        }
        let design = Design::new(self.labels(), blocks)?.with_group_descriptor(self.group.descriptor());
        Ok(Developed { design, nested: all_nested.then_some(nested) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_13_full_orbit() {
        let dev = Development::new(FiniteGroup::cyclic(13).unwrap());
        let d = dev.develop(&[OrbitSpec::of_elems(&[1, 2, 4, 10]).nested_with(BasePoint::G(0))]).unwrap();
        assert_eq!(d.design.b(), 13);
        assert_eq!(d.design.blocks[3], vec![0, 4, 5, 7]);
        assert_eq!(d.nested.unwrap()[3], 3);
    }

    #[test]
    fn short_orbit_requires_count() {
        let dev = Development::new(FiniteGroup::cyclic(40).unwrap());
        assert!(dev.develop(&[OrbitSpec::of_elems(&[0, 10, 20, 30])]).is_err());
        assert!(dev.develop(&[OrbitSpec::of_elems(&[0, 10, 20, 30]).partial(20)]).is_err());
        let d = dev.develop(&[OrbitSpec::of_elems(&[0, 10, 20, 30]).partial(10)]).unwrap();
        assert_eq!(d.design.b(), 10);
        assert_eq!(d.design.blocks[9], vec![9, 19, 29, 39]);
    }

    #[test]
    fn rotating_infinities() {
        let dev = Development::new(FiniteGroup::cyclic(21).unwrap())
            .with_infinities(3, InfinityAction::Rotate(3))
            .unwrap();
        let spec = OrbitSpec::full(vec![BasePoint::G(15), BasePoint::G(16), BasePoint::G(20), BasePoint::Inf(0)]);
        let d = dev.develop(&[spec]).unwrap();
        assert_eq!(d.design.b(), 21);
        // translate by 4 sends inf0 to inf1
        assert!(d.design.blocks[4].contains(&22));
        assert!(Development::new(FiniteGroup::cyclic(20).unwrap())
            .with_infinities(3, InfinityAction::Rotate(3))
            .is_err());
    }

    #[test]
    fn subgroup_translations() {
        let g = FiniteGroup::parse("Z3xZ3xZ3").unwrap();
        let t = g.factor_subgroup(&[false, true, true]).unwrap();
        let dev = Development::new(g.clone()).with_infinities(1, InfinityAction::Fixed).unwrap();
        let base = vec![
            BasePoint::G(g.compose(&[0, 0, 0])),
            BasePoint::G(g.compose(&[1, 0, 0])),
            BasePoint::G(g.compose(&[2, 0, 0])),
            BasePoint::Inf(0),
        ];
        let d = dev.develop(&[OrbitSpec::full(base).over(t)]).unwrap();
        assert_eq!(d.design.b(), 9);
        assert_eq!(d.design.labels[27], Label::from("inf0"));
    }
}
