use std::collections::BTreeSet;

use mtl_core::formula::{
    always, and, and_all, atom, eventually, iff, implies, not, or, until, weak_always, weak_eventually,
    weak_until,
};
use mtl_core::{Formula, FreshNames, Interval, Prop};
use mtl_normal_forms::{since_constraints, FreshProp, TemporalDefinition};

use crate::error::SpError;
use crate::region::SpShape;

/// Group names of the marking conjunction, in emission order.
pub const SP_MARK_GROUPS: [&str; 10] = [
    "MARK_b",
    "MARK_first",
    "MARK_last",
    "MARK_a",
    "MARK_beg_end_d",
    "MARK_x_y_c",
    "MARK_not_b_c",
    "MARK_succ_inf",
    "MARK_not_b_inf",
    "MARK_l0",
];

/// The definition being eliminated: `□ʷ(b ↔ ⋄̄_I a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpParams {
    pub a: Prop,
    pub b: Prop,
    pub shape: SpShape,
}

/// Fresh propositions of one bounded elimination. Index `d − 1` of `beg`, `end` and
/// `send` belongs to over-approximations of length `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpFresh {
    pub bits: [Prop; 2],
    pub x: [Prop; 2],
    pub y: [Prop; 2],
    pub binf1: Prop,
    pub binf2: Prop,
    pub beg: Vec<Prop>,
    pub end: Vec<Prop>,
    /// Auxiliary witnesses for the untimed Since inside `end_d`.
    pub send: Vec<Prop>,
    /// Auxiliary witness for the untimed Since inside `b²∞`.
    pub sinf: Prop,
}

impl SpFresh {
    fn issue(owner: &str, l: u64, fresh: &mut FreshNames) -> Self {
        let mut two = |r0: &str, r1: &str| [fresh.derived(r0, owner), fresh.derived(r1, owner)];
        let bits = two("a0", "a1");
        let x = two("x0", "x1");
        let y = two("y0", "y1");
        let binf1 = fresh.derived("binf1", owner);
        let binf2 = fresh.derived("binf2", owner);
        let beg = (1..=l).map(|d| fresh.derived(&format!("beg{d}"), owner)).collect();
        let end = (1..=l).map(|d| fresh.derived(&format!("end{d}"), owner)).collect();
        let send = (1..=l).map(|d| fresh.derived(&format!("send{d}"), owner)).collect();
        let sinf = fresh.derived("sinf", owner);
        Self { bits, x, y, binf1, binf2, beg, end, send, sinf }
    }

    /// `(name, role)` pairs in a fixed order.
    pub fn roles(&self) -> Vec<(Prop, String)> {
        let mut out = vec![
            (self.bits[0].clone(), "a0".to_string()),
            (self.bits[1].clone(), "a1".to_string()),
            (self.x[0].clone(), "x0".to_string()),
            (self.x[1].clone(), "x1".to_string()),
            (self.y[0].clone(), "y0".to_string()),
            (self.y[1].clone(), "y1".to_string()),
            (self.binf1.clone(), "binf1".to_string()),
            (self.binf2.clone(), "binf2".to_string()),
        ];
        for (k, ((beg, end), send)) in self.beg.iter().zip(&self.end).zip(&self.send).enumerate() {
            out.push((beg.clone(), format!("beg{}", k + 1)));
            out.push((end.clone(), format!("end{}", k + 1)));
            out.push((send.clone(), format!("send{}", k + 1)));
        }
        out.push((self.sinf.clone(), "sinf".to_string()));
        out
    }

    pub fn set(&self) -> BTreeSet<Prop> {
        self.roles().into_iter().map(|(p, _)| p).collect()
    }
}

/// Result of eliminating one bounded past definition; `mark` is the conjunction of
/// `groups`.
#[derive(Clone, Debug)]
pub struct SpEliminationOutput {
    pub mark: Formula,
    pub groups: Vec<(String, Formula)>,
    pub fresh: SpFresh,
    pub params: SpParams,
}

impl SpEliminationOutput {
    pub fn fresh_set(&self) -> BTreeSet<Prop> {
        self.fresh.set()
    }

    pub fn fresh_props(&self) -> Vec<FreshProp> {
        self.fresh
            .roles()
            .into_iter()
            .map(|(name, role)| FreshProp { name, role, owner: self.params.b.clone() })
            .collect()
    }

    /// The marking formula with the named group left out, or the full one for `None`.
    pub fn assemble(&self, drop: Option<&str>) -> Formula {
        and_all(self.groups.iter().filter(|(n, _)| Some(n.as_str()) != drop).map(|(_, g)| g.clone()))
    }

    pub fn group(&self, name: &str) -> Option<&Formula> {
        self.groups.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }
}

fn g(f: Formula) -> Formula {
    weak_always(Interval::full(), f)
}

/// Replaces `□ʷ(b ↔ ⋄̄_⟨l,u⟩ a)` by a marking conjunction over fresh propositions whose
/// models are simple extensions.
///
/// The `a`-points carry alternating bits `a0`/`a1` that change exactly when the gap to
/// the next `a` leaves room for points where `b` fails. For gaps of at most `u` the
/// stretch where `b` fails is cut out as the intersection of two intervals of integer
/// length `d`, one marked `x_c` forward from the earlier `a` and one marked `y_c`
/// forward from the later `a`. Longer gaps are handled by `b¹∞`/`b²∞`.
pub fn elim_bounded_past_sp(def: &TemporalDefinition, fresh: &mut FreshNames) -> Result<SpEliminationOutput, SpError> {
    let (i, a) = def.as_past_eventually().ok_or_else(|| SpError::NotPastEventuality(def.witness.clone()))?;
    let shape = SpShape::new(i)?;
    let params = SpParams { a: a.clone(), b: def.witness.clone(), shape };
    let x = SpFresh::issue(&def.witness, params.shape.lower(), fresh);
    let groups = mark_groups(&params, &x);
    let mark = and_all(groups.iter().map(|(_, f)| f.clone()));
    Ok(SpEliminationOutput { mark, groups, fresh: x, params })
}

fn mark_groups(p: &SpParams, x: &SpFresh) -> Vec<(String, Formula)> {
    let s = &p.shape;
    let i = s.interval();
    let a = atom(p.a.clone());
    let b = atom(p.b.clone());
    let na = not(a.clone());
    let nb = not(b.clone());
    let bit = |c: usize| atom(x.bits[c].clone());
    let xs = |c: usize| atom(x.x[c].clone());
    let ys = |c: usize| atom(x.y[c].clone());
    let full = Interval::full;
    let first_tail = match s.before_window() {
        Some(w) => weak_always(w, nb.clone()),
        None => nb.clone(),
    };

    let mut out: Vec<(String, Formula)> = Vec::new();
    let mut push = |name: &str, f: Formula| out.push((name.to_string(), f));

    push("MARK_b", g(implies(a.clone(), always(i.clone(), b.clone()))));

    let none = and(na.clone(), nb.clone());
    push("MARK_first", or(g(none.clone()), weak_until(none, and(a.clone(), first_tail.clone()))));

    push("MARK_last", g(implies(always(full(), na.clone()), always(s.after_window(), nb.clone()))));

    let mut bits = vec![
        g(iff(or(bit(0), bit(1)), a.clone())),
        g(or(not(bit(0)), not(bit(1)))),
        or(g(na.clone()), weak_until(na.clone(), and(a.clone(), bit(0)))),
    ];
    for c in 0..2 {
        let f1 = implies(
            and(bit(c), always(s.same_bit_window(), na.clone())),
            or(always(full(), na.clone()), until(full(), na.clone(), and(a.clone(), bit(1 - c)))),
        );
        let f2 = implies(
            and(bit(c), eventually(s.same_bit_window(), a.clone())),
            until(full(), na.clone(), and(a.clone(), bit(c))),
        );
        bits.push(g(and(f1, f2)));
    }
    push("MARK_a", and_all(bits));

    let mut beg_end = Vec::new();
    for (d, piece) in s.pieces() {
        let k = (d - 1) as usize;
        let beg = atom(x.beg[k].clone());
        let end = atom(x.end[k].clone());
        let r = atom(x.send[k].clone());
        beg_end.push(g(iff(beg.clone(), and(a.clone(), until(piece, na.clone(), a.clone())))));
        beg_end.push(g(iff(end, and(a.clone(), r.clone()))));
        beg_end.push(since_constraints(&r, &na, &beg));
    }
    push("MARK_beg_end_d", and_all(beg_end));

    let mut xy = Vec::new();
    for (d, _) in s.pieces() {
        let k = (d - 1) as usize;
        for c in 0..2 {
            xy.push(g(implies(and(atom(x.beg[k].clone()), bit(c)), always(s.i2(d), xs(c)))));
            xy.push(g(implies(and(atom(x.end[k].clone()), bit(c)), weak_always(s.i1(d), ys(1 - c)))));
        }
    }
    push("MARK_x_y_c", and_all(xy));

    push("MARK_not_b_c", and_all((0..2).map(|c| g(implies(and(xs(c), ys(c)), nb.clone())))));

    let b1 = atom(x.binf1.clone());
    let b2 = atom(x.binf2.clone());
    let rinf = atom(x.sinf.clone());
    push(
        "MARK_succ_inf",
        and_all([
            g(iff(b1.clone(), and(a.clone(), until(s.far_gap(), na.clone(), a.clone())))),
            g(iff(b2.clone(), and(a.clone(), rinf.clone()))),
            since_constraints(&rinf, &na, &b1),
        ]),
    );

    let window = s.through_window();
    push(
        "MARK_not_b_inf",
        and_all([
            g(implies(
                and(b1.clone(), weak_eventually(window.clone(), b.clone())),
                weak_eventually(window.clone(), and(b.clone(), until(full(), nb.clone(), b2.clone()))),
            )),
            g(implies(
                and(b1, weak_always(window, nb.clone())),
                and(nb.clone(), until(full(), nb.clone(), b2.clone())),
            )),
            g(implies(b2, first_tail)),
        ]),
    );

    if s.lower() == 0 && i.left_closed() && !i.right_closed() {
        let u = s.upper();
        let closed_u = Interval::closed(0, u);
        push(
            "MARK_l0",
            g(implies(
                and_all([a.clone(), always(Interval::closed_open(0, u), na), eventually(closed_u.clone(), a)]),
                eventually(closed_u, nb),
            )),
        );
    }
    out
}
