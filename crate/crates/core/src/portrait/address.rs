//! The `d` pieces cut out of R/Z by the chords of a critical portrait.
//!
//! Two boundary arcs belong to the same piece iff no critical set separates
//! them, i.e. they lie in the same gap of every set. Left addresses use the
//! `(a,b]` convention, right addresses the mirrored `[a,b)` one.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::angle::{gap_index, Angle, Arc, Rational};
use crate::error::Error;
use crate::portrait::critical::CriticalPortrait;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PieceId(pub usize);

impl fmt::Display for PieceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    id: PieceId,
    arcs: Vec<Arc>,
}

impl Piece {
    pub fn id(&self) -> PieceId {
        self.id
    }

    /// Arcs in counterclockwise order starting from the one nearest 0.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn length(&self) -> Rational {
        self.arcs.iter().map(Arc::length).sum()
    }

    pub fn contains(&self, x: Angle) -> bool {
        self.arcs.iter().any(|a| a.contains(x))
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", arcs.join(" ∪ "))
    }
}

pub(crate) struct Decomposition {
    pub cuts: Vec<Angle>,
    pub arc_piece: Vec<PieceId>,
    pub pieces: Vec<Piece>,
}

/// Sort key placing the piece that contains `(0, ε)` first.
fn arc_key(arc: &Arc) -> Rational {
    if arc.wraps() && arc.end() != Angle::ZERO {
        Rational::zero()
    } else {
        arc.start().value()
    }
}

pub(crate) fn decompose(portrait: &CriticalPortrait) -> Decomposition {
    let cuts = portrait.cut_points();
    let n = cuts.len();
    let sets: Vec<&[Angle]> = portrait.sets().map(|s| s.angles()).collect();

    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let right_end = cuts[(i + 1) % n];
        let signature: Vec<usize> = sets.iter().map(|s| gap_index(s, right_end)).collect();
        groups.entry(signature).or_default().push(i);
    }

    let mut raw: Vec<Vec<Arc>> = groups
        .into_values()
        .map(|idx| {
            let mut arcs: Vec<Arc> = idx
                .into_iter()
                .map(|i| Arc::new(cuts[i], cuts[(i + 1) % n]).expect("cut points are distinct"))
                .collect();
            arcs.sort_by_key(arc_key);
            arcs
        })
        .collect();
    raw.sort_by_key(|arcs| arc_key(&arcs[0]));

    let mut arc_piece = vec![PieceId(0); n];
    let pieces: Vec<Piece> = raw
        .into_iter()
        .enumerate()
        .map(|(id, arcs)| {
            for arc in &arcs {
                let i = cuts.binary_search(&arc.start()).expect("arc starts at a cut");
                arc_piece[i] = PieceId(id);
            }
            Piece {
                id: PieceId(id),
                arcs,
            }
        })
        .collect();

    Decomposition {
        cuts,
        arc_piece,
        pieces,
    }
}

/// A validated portrait together with its pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddressSystem {
    portrait: CriticalPortrait,
    cuts: Vec<Angle>,
    arc_piece: Vec<PieceId>,
    pieces: Vec<Piece>,
}

impl AddressSystem {
    pub fn new(portrait: CriticalPortrait) -> AddressSystem {
        let Decomposition {
            cuts,
            arc_piece,
            pieces,
        } = decompose(&portrait);
        AddressSystem {
            portrait,
            cuts,
            arc_piece,
            pieces,
        }
    }

    pub fn portrait(&self) -> &CriticalPortrait {
        &self.portrait
    }

    pub fn degree(&self) -> u32 {
        self.portrait.degree()
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn piece(&self, id: PieceId) -> Option<&Piece> {
        self.pieces.get(id.0)
    }

    /// Number of boundary arcs over all pieces (= number of portrait angles).
    pub fn arc_count(&self) -> usize {
        self.cuts.len()
    }

    /// `A^-(θ)`: the piece whose `(a,b]` arcs contain θ.
    pub fn address_left(&self, theta: Angle) -> PieceId {
        let n = self.cuts.len();
        let k = self.cuts.partition_point(|c| *c < theta);
        self.arc_piece[(k + n - 1) % n]
    }

    /// `A^+(θ)`: the piece containing `(θ, θ+ε)`.
    pub fn address_right(&self, theta: Angle) -> PieceId {
        let n = self.cuts.len();
        let k = self.cuts.partition_point(|c| *c <= theta);
        self.arc_piece[(k + n - 1) % n]
    }

    /// The unique `m_d`-preimage of `x` lying in `piece` (left convention).
    pub fn inverse_branch(&self, piece: PieceId, x: Angle) -> Result<Angle, Error> {
        if piece.0 >= self.pieces.len() {
            return Err(Error::InvalidPiece(piece.0));
        }
        let found = x
            .preimages(self.degree())
            .into_iter()
            .find(|y| self.address_left(*y) == piece)
            .expect("m_d is bijective on every piece");
        Ok(found)
    }

    /// Images of the cut points under `m_d`, sorted; the branches of every
    /// inverse branch jump only here (and at 0).
    pub(crate) fn critical_values(&self) -> Vec<Angle> {
        let mut v: Vec<Angle> = self.cuts.iter().map(|c| c.md(self.degree())).collect();
        v.push(Angle::ZERO);
        v.sort();
        v.dedup();
        v
    }
}
