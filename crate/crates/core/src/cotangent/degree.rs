use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_GROUND};

/// A support class of `Z^n`-degrees `a - b`: the support `A` of the
/// nonnegative part and the 0-1 negative part `b`, with `A ∩ b = ∅`.
///
/// Ordered by `A`, then `b`, each in canonical set order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    positive: VertexSet,
    negative: VertexSet,
}

impl MultiDegree {
    pub fn new(positive: VertexSet, negative: VertexSet) -> Result<Self> {
        let overlap = positive & negative;
        if !overlap.is_empty() {
            return Err(Error::OverlappingDegree { overlap });
        }
        Ok(MultiDegree { positive, negative })
    }

    /// The degree `-b`.
    pub fn negative_only(negative: VertexSet) -> Self {
        MultiDegree {
            positive: VertexSet::EMPTY,
            negative,
        }
    }

    /// Support of the nonnegative part.
    pub fn positive(&self) -> VertexSet {
        self.positive
    }

    pub fn negative(&self) -> VertexSet {
        self.negative
    }

    pub fn support(&self) -> VertexSet {
        self.positive | self.negative
    }
}

impl fmt::Display for MultiDegree {
    /// Same syntax as [`FromStr`]: `"1,2;3"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: VertexSet| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(self.positive), join(self.negative))
    }
}

impl FromStr for MultiDegree {
    type Err = Error;

    /// Parses `"a1,a2,...;b1,b2,..."`; either side may be empty.
    fn from_str(text: &str) -> Result<Self> {
        let syntax = |message: String| Error::DegreeSyntax {
            text: text.to_string(),
            message,
        };
        let (left, right) = text
            .split_once(';')
            .ok_or_else(|| syntax("expected exactly one ';' separating A and b".into()))?;
        if right.contains(';') {
            return Err(syntax("expected exactly one ';' separating A and b".into()));
        }
        let side = |part: &str| -> Result<VertexSet> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(VertexSet::EMPTY);
            }
            let mut set = VertexSet::EMPTY;
            for token in part.split(',') {
                let token = token.trim();
                let v: usize = token
                    .parse()
                    .map_err(|_| syntax(format!("{token:?} is not a vertex number")))?;
                if v == 0 || v > MAX_GROUND {
                    return Err(syntax(format!("vertex {v} outside 1..={MAX_GROUND}")));
                }
                set = set.with(v);
            }
            Ok(set)
        };
        MultiDegree::new(side(left)?, side(right)?)
    }
}
