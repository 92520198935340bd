use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::nakayama::{indecomposables, is_tau_rigid, AlgebraId, Indecomposable};
use crate::perpendicular::{j_category, CategoryShape};

/// One choice of last term: `module` taken in component `component` of the
/// current (canonically sorted) shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub component: usize,
    pub algebra: AlgebraId,
    pub module: Indecomposable,
}

/// A complete tau-exceptional sequence, recorded outermost-first: the first
/// step is the last term of the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ChoiceChain {
    pub steps: Vec<ChainStep>,
}

impl ChoiceChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the chain from `start`, returning false if some step picks a
    /// module that is not tau-rigid in its component or the chain does not
    /// exhaust the shape.
    pub fn is_valid_for(&self, start: &CategoryShape) -> bool {
        let mut shape = start.clone();
        for step in &self.steps {
            let Some(&alg) = shape.components().get(step.component) else {
                return false;
            };
            if alg != step.algebra || !alg.contains(&step.module) {
                return false;
            }
            if !is_tau_rigid(&alg, &step.module) {
                return false;
            }
            match j_category(&alg, &step.module) {
                Ok(j) => shape = shape.replace(step.component, &j),
                Err(_) => return false,
            }
        }
        shape.rank() == 0
    }
}

struct Frame {
    shape: CategoryShape,
    choices: Vec<(usize, Indecomposable)>,
    next: usize,
}

impl Frame {
    fn new(shape: CategoryShape) -> Self {
        let choices = shape
            .components()
            .iter()
            .enumerate()
            .flat_map(|(idx, c)| {
                indecomposables(c)
                    .into_iter()
                    .filter(move |m| is_tau_rigid(c, m))
                    .map(move |m| (idx, m))
            })
            .collect();
        Self {
            shape,
            choices,
            next: 0,
        }
    }
}

/// Depth-first stream of all chains of a shape, in lexicographic order of
/// (component index, module).
pub struct ChainIter {
    stack: Vec<Frame>,
    steps: Vec<ChainStep>,
    remaining: Option<usize>,
    failed: bool,
}

pub fn enumerate_chains(s: &CategoryShape, limit: Option<usize>) -> ChainIter {
    ChainIter {
        stack: vec![Frame::new(s.clone())],
        steps: Vec::new(),
        remaining: limit,
        failed: false,
    }
}

impl ChainIter {
    fn pop(&mut self) {
        self.stack.pop();
        self.steps.pop();
    }
}

impl Iterator for ChainIter {
    type Item = Result<ChoiceChain>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.remaining == Some(0) {
            return None;
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.shape.rank() == 0 {
                let chain = ChoiceChain {
                    steps: self.steps.clone(),
                };
                self.pop();
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                return Some(Ok(chain));
            }
            if top.next == top.choices.len() {
                self.pop();
                continue;
            }
            let (component, module) = top.choices[top.next];
            top.next += 1;
            let algebra = top.shape.components()[component];
            let j = match j_category(&algebra, &module) {
                Ok(j) => j,
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e));
                }
            };
            let shape = top.shape.replace(component, &j);
            self.steps.push(ChainStep {
                component,
                algebra,
                module,
            });
            self.stack.push(Frame::new(shape));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::count_shape_naive;
    use crate::error::Error;

    fn chains(s: &CategoryShape) -> Vec<ChoiceChain> {
        enumerate_chains(s, None).collect::<Result<_>>().unwrap()
    }

    #[test]
    fn a2_has_three_chains() {
        let s = CategoryShape::single(AlgebraId::gamma(2, 2));
        let all = chains(&s);
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].steps[0].component, 0);
        assert_eq!(all[0].steps[0].module, Indecomposable::new(1, 1));
        assert!(all.iter().all(|c| c.len() == 2 && c.is_valid_for(&s)));
    }

    #[test]
    fn single_vertex_and_empty_shape() {
        assert_eq!(chains(&CategoryShape::single(AlgebraId::gamma(1, 1))).len(), 1);
        let empty = chains(&CategoryShape::empty());
        assert_eq!(empty, vec![ChoiceChain::default()]);
    }

    #[test]
    fn gamma_3_2_has_twelve_distinct_chains() {
        let s = CategoryShape::single(AlgebraId::gamma(3, 2));
        let all = chains(&s);
        assert_eq!(all.len(), 12);
        for w in all.windows(2) {
            assert_ne!(w[0], w[1]);
        }
    }

    #[test]
    fn limit_truncates() {
        let s = CategoryShape::single(AlgebraId::lambda(3, 3));
        assert_eq!(enumerate_chains(&s, Some(5)).count(), 5);
        assert_eq!(enumerate_chains(&s, Some(0)).count(), 0);
        assert_eq!(
            enumerate_chains(&s, None).count(),
            count_shape_naive(&s).unwrap().try_into().unwrap_or(usize::MAX)
        );
    }

    #[test]
    fn unsupported_component_yields_one_error() {
        let s = CategoryShape::single(AlgebraId::lambda(5, 3));
        let items: Vec<_> = enumerate_chains(&s, None).collect();
        assert_eq!(items.len(), 1);
        assert!(matches!(items[0], Err(Error::UnsupportedFamily { .. })));
    }
}
