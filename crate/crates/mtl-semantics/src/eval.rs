//! Pointwise evaluation by bottom-up tabulation over a deduplicated node table.

use std::cmp::Ordering;
use std::collections::HashMap;

use mtl_core::{Formula, Interval, Prop, TimedWord};

use crate::axis::Axis;
use crate::error::SemanticsError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    True,
    False,
    Atom(usize),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Until(Interval, usize, usize),
    Since(Interval, usize, usize),
}

/// A formula compiled for repeated evaluation.
///
/// Compilation expands derived operators and shares structurally equal subformulas, so
/// evaluating on a word of length `n` costs `O(n² · |nodes|)` in the worst case.
#[derive(Clone, Debug)]
pub struct CompiledFormula {
    nodes: Vec<Node>,
    props: Vec<Prop>,
    root: usize,
    max_bound: u64,
}

struct Builder {
    nodes: Vec<Node>,
    index: HashMap<Node, usize>,
    props: Vec<Prop>,
    prop_index: HashMap<Prop, usize>,
    max_bound: u64,
}

impl Builder {
    fn intern(&mut self, n: Node) -> usize {
        if let Some(&id) = self.index.get(&n) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(n.clone());
        self.index.insert(n, id);
        id
    }

    fn note_interval(&mut self, i: &Interval) {
        self.max_bound = self.max_bound.max(i.lower()).max(i.upper().unwrap_or(0));
    }

    fn build(&mut self, f: &Formula) -> usize {
        let node = match f {
            Formula::True => Node::True,
            Formula::False => Node::False,
            Formula::Atom(p) => {
                let next = self.props.len();
                let k = *self.prop_index.entry(p.clone()).or_insert(next);
                if k == next {
                    self.props.push(p.clone());
                }
                Node::Atom(k)
            }
            Formula::Not(a) => Node::Not(self.build(a)),
            Formula::And(a, b) => {
                let (a, b) = (self.build(a), self.build(b));
                Node::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.build(a), self.build(b));
                Node::Or(a, b)
            }
            Formula::Until(i, a, b) => {
                self.note_interval(i);
                let (a, b) = (self.build(a), self.build(b));
                Node::Until(i.clone(), a, b)
            }
            Formula::Since(i, a, b) => {
                self.note_interval(i);
                let (a, b) = (self.build(a), self.build(b));
                Node::Since(i.clone(), a, b)
            }
            other => return self.build(&other.expand()),
        };
        self.intern(node)
    }
}

impl CompiledFormula {
    pub fn new(f: &Formula) -> Self {
        let mut b = Builder {
            nodes: Vec::new(),
            index: HashMap::new(),
            props: Vec::new(),
            prop_index: HashMap::new(),
            max_bound: 0,
        };
        let root = b.build(&f.expand());
        Self { nodes: b.nodes, props: b.props, root, max_bound: b.max_bound }
    }

    /// Number of distinct subformulas after expansion.
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Truth value of the formula at every position (index 0 is position 1).
    pub fn eval_word(&self, w: &TimedWord) -> Vec<bool> {
        self.table(w).swap_remove(self.root)
    }

    /// Truth value at the 1-based position `i`.
    pub fn eval_at(&self, w: &TimedWord, i: usize) -> Result<bool, SemanticsError> {
        if i == 0 || i > w.len() {
            return Err(SemanticsError::PositionOutOfRange { position: i, len: w.len() });
        }
        Ok(self.eval_word(w)[i - 1])
    }

    /// `ρ ⊨ φ`, i.e. truth at position 1. The empty word is rejected.
    pub fn satisfied_by(&self, w: &TimedWord) -> Result<bool, SemanticsError> {
        if w.is_empty() {
            return Err(SemanticsError::EmptyWord);
        }
        Ok(self.eval_word(w)[0])
    }

    fn table(&self, w: &TimedWord) -> Vec<Vec<bool>> {
        let n = w.len();
        let axis = Axis::new(w, self.max_bound);
        let mut vals: Vec<Vec<bool>> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let v = match node {
                Node::True => vec![true; n],
                Node::False => vec![false; n],
                Node::Atom(k) => {
                    let p = &self.props[*k];
                    w.points().iter().map(|pt| pt.holds(p)).collect()
                }
                Node::Not(a) => vals[*a].iter().map(|x| !x).collect(),
                Node::And(a, b) => vals[*a].iter().zip(&vals[*b]).map(|(x, y)| *x && *y).collect(),
                Node::Or(a, b) => vals[*a].iter().zip(&vals[*b]).map(|(x, y)| *x || *y).collect(),
                Node::Until(i, a, b) => until(&axis, i, &vals[*a], &vals[*b]),
                Node::Since(i, a, b) => since(&axis, i, &vals[*a], &vals[*b]),
            };
            vals.push(v);
        }
        vals
    }
}

#[allow(clippy::needless_range_loop)]
fn until(axis: &Axis, i: &Interval, a: &[bool], b: &[bool]) -> Vec<bool> {
    let n = a.len();
    let mut out = vec![false; n];
    if i.is_full() {
        for p in (0..n.saturating_sub(1)).rev() {
            out[p] = b[p + 1] || (a[p + 1] && out[p + 1]);
        }
        return out;
    }
    for p in 0..n {
        for q in p + 1..n {
            match axis.locate(p, q, i) {
                Ordering::Greater => break,
                Ordering::Equal if b[q] => {
                    out[p] = true;
                    break;
                }
                _ => {}
            }
            if !a[q] {
                break;
            }
        }
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn since(axis: &Axis, i: &Interval, a: &[bool], b: &[bool]) -> Vec<bool> {
    let n = a.len();
    let mut out = vec![false; n];
    if i.is_full() {
        for p in 1..n {
            out[p] = b[p - 1] || (a[p - 1] && out[p - 1]);
        }
        return out;
    }
    for p in 0..n {
        for q in (0..p).rev() {
            match axis.locate(q, p, i) {
                Ordering::Greater => break,
                Ordering::Equal if b[q] => {
                    out[p] = true;
                    break;
                }
                _ => {}
            }
            if !a[q] {
                break;
            }
        }
    }
    out
}

/// `ρ, i ⊨ φ` for a 1-based position `i`.
pub fn eval(w: &TimedWord, i: usize, f: &Formula) -> Result<bool, SemanticsError> {
    CompiledFormula::new(f).eval_at(w, i)
}

/// `ρ ⊨ φ`, anchored at the first position.
pub fn satisfies(w: &TimedWord, f: &Formula) -> Result<bool, SemanticsError> {
    CompiledFormula::new(f).satisfied_by(w)
}

/// Truth value of `φ` at every position of `w`.
pub fn eval_positions(w: &TimedWord, f: &Formula) -> Vec<bool> {
    CompiledFormula::new(f).eval_word(w)
}
