use mtl_core::{Point, TimedWord};
use mtl_semantics::CompiledFormula;

use crate::definition::TemporalDefinition;
use crate::error::NormalFormError;

/// Adds each witness exactly at the positions where its body holds.
///
/// Definitions are processed in order over the progressively marked word, so a body may
/// mention witnesses of earlier definitions but not of later ones.
pub fn mark_witnesses(w: &TimedWord, defs: &[TemporalDefinition]) -> Result<TimedWord, NormalFormError> {
    for (k, d) in defs.iter().enumerate() {
        let props = d.body.propositions();
        if let Some(later) = defs[k..].iter().find(|e| props.contains(&e.witness)) {
            return Err(NormalFormError::OrderingViolation { witness: d.witness.clone(), later: later.witness.clone() });
        }
    }
    let mut points: Vec<Point> = w.points().to_vec();
    for d in defs {
        let current = TimedWord::new(points.clone(), w.monotonicity()).expect("marking keeps the word valid");
        let truth = CompiledFormula::new(&d.body).eval_word(&current);
        for (p, holds) in points.iter_mut().zip(truth) {
            if holds {
                p.event.insert(d.witness.clone());
            }
        }
    }
    Ok(TimedWord::new(points, w.monotonicity()).expect("marking keeps the word valid"))
}
