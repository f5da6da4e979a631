//! Diagonal one-parameter subgroups and their limit action on matrices.
//!
//! A [`Cocharacter`] holds integer weights (w_1, ..., w_N) standing for the
//! diagonal family lambda(t) = diag(t^{w_1}, ..., t^{w_N}). Conjugation by
//! lambda(t) scales the (i, j) entry of a matrix by t^{w_i - w_j}, so the
//! limit at t -> 0, the fixed points, and the parabolic classification can
//! all be decided exactly from the signs of weight differences — no
//! evaluation at small t is ever needed.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraKind, GroupTag};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Integer weights of a diagonal one-parameter subgroup.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cocharacter {
    weights: Vec<i64>,
}

/// Which of the three subgroups attached to a cocharacter contain a given
/// group element: the parabolic P (conjugation limit exists), its Levi L
/// (conjugation acts trivially), and the unipotent radical U (conjugation
/// limit is the identity). All false means the element is outside P.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParabolicClass {
    pub parabolic: bool,
    pub levi: bool,
    pub unipotent: bool,
}

impl Cocharacter {
    pub fn new(weights: Vec<i64>) -> Self {
        Cocharacter { weights }
    }

    pub fn zero(n: usize) -> Self {
        Cocharacter { weights: vec![0; n] }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Whether lambda(t) lies in the group for all t: no condition for gl,
    /// weight sum zero for sl, and mirror antisymmetry w_i + w_{N+1-i} = 0
    /// for sp/o (the diagonal solutions of the defining equation).
    pub fn in_group(&self, kind: AlgebraKind) -> Result<bool> {
        if self.dim() != kind.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cocharacter of length {} in {kind}",
                self.dim()
            )));
        }
        let w = &self.weights;
        Ok(match kind.tag() {
            GroupTag::Gl => true,
            GroupTag::Sl => w.iter().sum::<i64>() == 0,
            GroupTag::Sp | GroupTag::O => {
                (0..w.len()).all(|i| w[i] + w[w.len() - 1 - i] == 0)
            }
        })
    }

    /// The limit of lambda(t) x lambda(t)^{-1} as t -> 0, decided by weight
    /// differences: it exists iff every nonzero entry (i, j) has
    /// w_i - w_j >= 0, and then keeps exactly the weight-equal entries.
    pub fn limit(&self, x: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        self.check_square(x)?;
        let w = &self.weights;
        let mut y = ExactMatrix::zeros(x.rows(), x.cols());
        for i in 0..x.rows() {
            for j in 0..x.cols() {
                if x.at(i, j).is_zero() {
                    continue;
                }
                if w[i] < w[j] {
                    return Ok(None);
                }
                if w[i] == w[j] {
                    y.set(i, j, x.at(i, j).clone());
                }
            }
        }
        Ok(Some(y))
    }

    /// Whether conjugation by lambda(t) leaves y unchanged for every t,
    /// i.e. every nonzero entry sits at weight-equal coordinates.
    pub fn fixes(&self, y: &ExactMatrix) -> Result<bool> {
        self.check_square(y)?;
        let w = &self.weights;
        for i in 0..y.rows() {
            for j in 0..y.cols() {
                if !y.at(i, j).is_zero() && w[i] != w[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The zero-sum rescaling w'_i = N*w_i - sum(w). Every weight difference
    /// keeps its sign (w'_i - w'_j = N*(w_i - w_j)), so limits, fixed points
    /// and parabolic data are unchanged, but the result lies in SL_N.
    pub fn normalize_to_sl(&self) -> Cocharacter {
        let n = self.weights.len() as i64;
        let total: i64 = self.weights.iter().sum();
        Cocharacter::new(self.weights.iter().map(|&w| n * w - total).collect())
    }

    /// Drop the outer d weights on each side, matching the matrix shrinking
    /// operation that deletes the outer d rows and columns.
    pub fn shrink(&self, d: usize) -> Result<Cocharacter> {
        if 2 * d >= self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot shrink a length-{} cocharacter by {d} on each side",
                self.dim()
            )));
        }
        Ok(Cocharacter::new(self.weights[d..self.dim() - d].to_vec()))
    }

    /// Classify an invertible g against the parabolic triple of this
    /// cocharacter: g is in P iff all nonzero entries satisfy w_i >= w_j,
    /// in L iff all are weight-equal, and in U iff it is in P and its
    /// weight-equal (block-diagonal) part is the identity.
    pub fn parabolic_membership(&self, g: &ExactMatrix) -> Result<ParabolicClass> {
        self.check_square(g)?;
        if g.det()?.is_zero() {
            return Err(Error::Singular);
        }
        let w = &self.weights;
        let mut parabolic = true;
        let mut levi = true;
        let mut equal_part_is_identity = true;
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                let entry = g.at(i, j);
                if w[i] == w[j] {
                    let matches_identity =
                        if i == j { entry.is_one() } else { entry.is_zero() };
                    if !matches_identity {
                        equal_part_is_identity = false;
                    }
                } else if !entry.is_zero() {
                    levi = false;
                    if w[i] < w[j] {
                        parabolic = false;
                    }
                }
            }
        }
        Ok(ParabolicClass {
            parabolic,
            levi: parabolic && levi,
            unipotent: parabolic && equal_part_is_identity,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.weights.iter().map(|&w| serde_json::Value::from(w)).collect(),
        )
    }

    fn check_square(&self, x: &ExactMatrix) -> Result<()> {
        if x.rows() != x.cols() || x.rows() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix against a length-{} cocharacter",
                x.rows(),
                x.cols(),
                self.dim()
            )));
        }
        Ok(())
    }
}

impl ParabolicClass {
    pub fn outside(&self) -> bool {
        !self.parabolic
    }
}

impl fmt::Display for ParabolicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.outside() {
            return write!(f, "outside");
        }
        let mut tags = vec!["P"];
        if self.levi {
            tags.push("L");
        }
        if self.unipotent {
            tags.push("U");
        }
        write!(f, "{{{}}}", tags.join(","))
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Cocharacter {
    type Err = Error;

    /// Accepts comma-separated integers, optionally wrapped in parentheses
    /// or brackets: `1,1,0,0` or `(1,1,0,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.is_empty() {
            return Err(Error::Parse("empty cocharacter".into()));
        }
        let weights = trimmed
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight {piece:?} in {s:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(Cocharacter::new(weights))
    }
}
