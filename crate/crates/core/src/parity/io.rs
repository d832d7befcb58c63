//! Arena JSON:
//! `{"positions":[{"id":0,"owner":"E","priority":2,"succ":[1]}, ...], "initial":0}`.
//! Ids are arbitrary distinct integers; positions are indexed in listed order.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{ParityArena, ParityError, Player};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArenaDoc {
    positions: Vec<PositionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    initial: Option<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PositionDoc {
    id: i64,
    owner: Player,
    priority: u32,
    #[serde(default)]
    succ: Vec<i64>,
}

/// Reads an arena, returning it with the id of every position.
pub fn read_arena(bytes: &[u8]) -> Result<(ParityArena, Vec<i64>), ParityError> {
    let doc: ArenaDoc = serde_json::from_slice(bytes).map_err(|e| ParityError::Json(e.to_string()))?;
    let mut index = HashMap::new();
    for (i, p) in doc.positions.iter().enumerate() {
        if index.insert(p.id, i).is_some() {
            return Err(ParityError::DuplicateId(p.id));
        }
    }
    let lookup = |id: i64| index.get(&id).copied().ok_or(ParityError::UnknownId(id));
    let mut arena = ParityArena::new();
    for p in &doc.positions {
        arena.add_position(p.owner, p.priority);
    }
    for (i, p) in doc.positions.iter().enumerate() {
        for &t in &p.succ {
            arena.add_edge(i, lookup(t)?);
        }
    }
    arena.set_initial(doc.initial.map(lookup).transpose()?);
    Ok((arena, doc.positions.iter().map(|p| p.id).collect()))
}

/// Writes an arena with ids equal to position indices.
pub fn write_arena(arena: &ParityArena) -> Vec<u8> {
    let doc = ArenaDoc {
        positions: (0..arena.len())
            .map(|v| PositionDoc {
                id: v as i64,
                owner: arena.owner(v),
                priority: arena.priority(v),
                succ: arena.successors(v).iter().map(|&t| t as i64).collect(),
            })
            .collect(),
        initial: arena.initial().map(|i| i as i64),
    };
    serde_json::to_vec(&doc).expect("arena documents serialize")
}
