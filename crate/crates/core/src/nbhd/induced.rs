use std::sync::Arc;

use super::structure::PreNbhd;
use crate::error::{Error, Result};
use crate::order::{ElemSet, Filter};
use crate::subfib::SubobjectEmbedding;

/// The structure induced on a subobject `p`:
/// `γ_p(m) = {u : ∃w ∈ γ(p∘m), p ∧ w <= p∘u}`.
pub fn induced_substructure(p: &SubobjectEmbedding, gamma: &PreNbhd) -> Result<PreNbhd> {
    if gamma.carrier() != p.ambient() {
        return Err(Error::CarrierMismatch);
    }
    let sub = p.sub();
    let assign = sub
        .elems()
        .map(|m| {
            let members = gamma
                .filter(p.embed(m))
                .members()
                .iter()
                .fold(ElemSet::EMPTY, |acc, w| acc.union(sub.up_set(p.pull(w))));
            Filter::from_members_unchecked(members)
        })
        .collect();
    Ok(PreNbhd::new_unchecked(Arc::new(sub.clone()), assign))
}
