//! Random words, model pools and perturbed extensions.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use mtl_core::{rat, Point, Prop, Time, TimedWord};
use mtl_semantics::{CompiledFormula, GridSpace};

/// Shape of the random grid words.
#[derive(Clone, Debug)]
pub struct WordShape {
    pub max_len: usize,
    /// Timestamps are multiples of `1 / denominator`.
    pub denominator: i64,
    /// Largest gap between consecutive points, in grid steps.
    pub max_step: i64,
}

impl Default for WordShape {
    fn default() -> Self {
        Self { max_len: 7, denominator: 4, max_step: 8 }
    }
}

fn random_event<R: Rng>(rng: &mut R, props: &[Prop]) -> BTreeSet<Prop> {
    loop {
        let ev: BTreeSet<Prop> = props.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if !ev.is_empty() {
            return ev;
        }
    }
}

/// A random strictly monotonic word over `Σ` with nonempty events.
pub fn random_word<R: Rng>(rng: &mut R, sigma: &BTreeSet<Prop>, shape: &WordShape) -> TimedWord {
    let props: Vec<Prop> = sigma.iter().cloned().collect();
    let len = rng.gen_range(1..=shape.max_len.max(1));
    let mut t = rat(rng.gen_range(0..=2), shape.denominator);
    let mut pts = Vec::with_capacity(len);
    for k in 0..len {
        if k > 0 {
            t += rat(rng.gen_range(1..=shape.max_step.max(1)), shape.denominator);
        }
        pts.push(Point { event: random_event(rng, &props), time: t.clone() });
    }
    TimedWord::strict(pts).expect("strictly increasing timestamps")
}

/// Parameters of the exhaustive part of a model pool.
#[derive(Clone, Debug)]
pub struct PoolShape {
    pub enum_max_len: usize,
    pub enum_grid: Time,
    pub enum_horizon: Time,
    /// Upper bound on the number of enumerated words inspected.
    pub enum_limit: usize,
    /// Random words tried per requested random model.
    pub attempts_per_model: usize,
    pub random: WordShape,
}

impl Default for PoolShape {
    fn default() -> Self {
        Self {
            enum_max_len: 4,
            enum_grid: rat(1, 2),
            enum_horizon: rat(4, 1),
            enum_limit: 40_000,
            attempts_per_model: 200,
            random: WordShape::default(),
        }
    }
}

/// Up to `size` distinct models of `phi`: half taken at even strides from the
/// exhaustive grid enumeration, the rest random grid words that satisfy `phi`.
pub fn model_pool<R: Rng>(
    rng: &mut R,
    phi: &CompiledFormula,
    sigma: &BTreeSet<Prop>,
    size: usize,
    shape: &PoolShape,
) -> Vec<TimedWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if let Ok(space) = GridSpace::new(sigma, shape.enum_max_len, &shape.enum_grid, &shape.enum_horizon) {
        let all: Vec<TimedWord> =
            space.words().take(shape.enum_limit).filter(|w| phi.satisfied_by(w).unwrap_or(false)).collect();
        let want = (size / 2).min(all.len());
        for j in 0..want {
            let w = &all[j * all.len() / want];
            if seen.insert(w.to_string()) {
                out.push(w.clone());
            }
        }
    }
    let mut attempts = (size - out.len().min(size)) * shape.attempts_per_model;
    while out.len() < size && attempts > 0 {
        attempts -= 1;
        let w = random_word(rng, sigma, &shape.random);
        if phi.satisfied_by(&w).unwrap_or(false) && seen.insert(w.to_string()) {
            out.push(w);
        }
    }
    out
}

/// How a word over `Σ ∪ W ∪ X` may be perturbed.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub sigma: Vec<Prop>,
    pub ext: Vec<Prop>,
    /// Whether points may be inserted and deleted (oversampled behaviours).
    pub change_points: bool,
    /// Whether base propositions may be toggled.
    pub toggle_base: bool,
}

impl Perturbation {
    /// Applies `edits` random edits: toggling an extension proposition (most often),
    /// and when allowed toggling a base proposition, inserting a point that carries
    /// one extension proposition or deleting a point without base propositions.
    /// Points whose event becomes empty are removed. Returns `None` if the word
    /// becomes empty.
    pub fn apply<R: Rng>(&self, rng: &mut R, w: &TimedWord, edits: usize) -> Option<TimedWord> {
        let mut pts = w.points().to_vec();
        for _ in 0..edits {
            if pts.is_empty() {
                return None;
            }
            let kind = rng.gen_range(0..if self.change_points { 8 } else { 6 });
            match kind {
                0..=5 if !self.ext.is_empty() && (kind <= 4 || !self.toggle_base) => {
                    let k = rng.gen_range(0..pts.len());
                    let p = self.ext.choose(rng).expect("nonempty");
                    toggle(&mut pts[k].event, p);
                }
                0..=5 if self.toggle_base => {
                    let k = rng.gen_range(0..pts.len());
                    let p = self.sigma.choose(rng).expect("Σ is nonempty");
                    toggle(&mut pts[k].event, p);
                }
                6 if !self.ext.is_empty() => {
                    let first = pts[0].time.clone();
                    let last = pts[pts.len() - 1].time.clone();
                    let span = (&last - &first) * rat(8, 1);
                    let steps = span.floor().to_integer();
                    let steps: i64 = steps.try_into().unwrap_or(0);
                    if steps >= 2 {
                        let t = &first + rat(rng.gen_range(1..steps), 8);
                        if !pts.iter().any(|p| p.time == t) {
                            let p = self.ext.choose(rng).expect("nonempty").clone();
                            pts.push(Point { event: [p].into_iter().collect(), time: t });
                            pts.sort_by(|x, y| x.time.cmp(&y.time));
                        }
                    }
                }
                0..=5 => {}
                _ => {
                    let candidates: Vec<usize> =
                        (0..pts.len()).filter(|&k| !pts[k].event.iter().any(|q| self.sigma.contains(q))).collect();
                    if let Some(&k) = candidates.choose(rng) {
                        pts.remove(k);
                    }
                }
            }
            pts.retain(|p| !p.event.is_empty());
        }
        if pts.is_empty() {
            return None;
        }
        TimedWord::new(pts, w.monotonicity()).ok()
    }
}

fn toggle(ev: &mut BTreeSet<Prop>, p: &Prop) {
    if !ev.remove(p) {
        ev.insert(p.clone());
    }
}
