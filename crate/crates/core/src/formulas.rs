//! The printed closed forms for the hyper Zagreb index of the seven thorn
//! constructions, evaluated exactly as printed.
//!
//! Each entry is reproduced term for term from its statement, including
//! coefficients that do not agree with a direct edge count. Deciding which
//! ones hold is the job of [`crate::audit`]; this module never corrects a
//! formula.
//!
//! Theorems are written against a [`SumBundle`] of vertex and edge sums over
//! the base graph. Corollaries assume a uniform thorn count `t` and read only
//! `n`, `m`, `HM(G)` and `M1(G)`. Examples fix the base to `P_n` (`*a`
//! entries, `m = n - 1`) or `C_n` (`*b` entries, `m = n`) and read only `n`.

use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::base::{BaseFamily, BaseSpec};
use crate::exact::Int;
use crate::graph::Graph;
use crate::indices;
use crate::thorn::{ThornSpec, ThornType};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    T1,
    T2,
    T3,
    /// Final line of the type III derivation, whose last bracket differs from
    /// the stated theorem.
    T3Proof,
    T4,
    T5,
    T6,
    T7,
    C1,
    C2,
    C3,
    C4,
    /// Type IV corollary specialised to `r = s`.
    C4R,
    C5,
    C6,
    C7,
    E1a,
    E1b,
    E2a,
    E2b,
    E3a,
    E3b,
    E4aRs,
    E4bRs,
    E5a,
    E5b,
    E6a,
    E6b,
    E7a,
    E7aRst,
    E7b,
    E7bRst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaKind {
    Theorem,
    Corollary,
    Example,
}

impl FormulaKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaKind::Theorem => "theorem",
            FormulaKind::Corollary => "corollary",
            FormulaKind::Example => "example",
        }
    }
}

/// Which base graphs an entry speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRequirement {
    Any,
    /// `P_n`, n >= 2.
    Path,
    /// `C_n`, n >= 3.
    Cycle,
}

/// Extra parameter relations some entries are stated under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    None,
    REqualsS,
    REqualsSEqualsT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaMeta {
    pub id: FormulaId,
    pub kind: FormulaKind,
    pub thorn_type: ThornType,
    pub base: BaseRequirement,
    pub uniform_t: bool,
    pub relation: Relation,
    /// The right-hand side as printed (LaTeX).
    pub anchor: &'static str,
}

macro_rules! registry {
    ($( $id:ident, $name:literal, $kind:ident, $ty:ident, $base:ident, $uniform:literal, $rel:ident, $anchor:literal; )*) => {
        impl FormulaId {
            pub const ALL: &'static [FormulaId] = &[$(FormulaId::$id),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(FormulaId::$id => $name,)*
                }
            }

            pub fn meta(self) -> FormulaMeta {
                match self {
                    $(FormulaId::$id => FormulaMeta {
                        id: FormulaId::$id,
                        kind: FormulaKind::$kind,
                        thorn_type: ThornType::$ty,
                        base: BaseRequirement::$base,
                        uniform_t: $uniform,
                        relation: Relation::$rel,
                        anchor: $anchor,
                    },)*
                }
            }
        }
    };
}

registry! {
    T1, "T1", Theorem, I, Any, false, None,
        r"HM(G)+2 \sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+\sum\limits_{v_iv_j \in E(G)}(t_i + t_j)^{2} + (16r-35)\sum\limits_{i=1}^{n}t_i + \sum\limits_{i=1}^{n} \left[t_id(v_i)^2+t_i^{3}+4t_i^{2}+2t_i^{2}d(v_i)+4t_id(v_i)\right]";
    T2, "T2", Theorem, II, Any, false, None,
        r"HM(G)+4 \sum \limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+4 \sum\limits_{v_iv_j \in E(G)}(t_i+t_j)^2 +2\sum\limits_{i=1}^{n}t_id(v_i)^{2}+8\sum\limits_{i=1}^{n}\left[d(v_i)t_i^{2}+d(v_i)t_i+t_i^{3}+2t_i^{2}\right]+(16r-24)\sum\limits_{i=1}^{n}t_i";
    T3, "T3", Theorem, III, Any, false, None,
        r"HM(G)+2(r-1)\sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+(r-1)^2\sum\limits_{v_iv_j \in E(G)}(t_i+t_j)^2+(r-1)\sum\limits_{i=1}^{n}t_id(v_i)^{2}+2(r-1)^{2}\sum\limits_{i=1}^{n}d(v_i)t_i(t_i+1)+(r-1)^{3}\sum\limits_{i=1}^{n}\left[t_i^3+2t_i^2+(2r-1)t_i\right]";
    T3Proof, "T3_proof", Theorem, III, Any, false, None,
        r"HM(G)+2(r-1)\sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right]\left[t_i+t_j\right]+(r-1)^2\sum\limits_{v_iv_j\in E(G)}(t_i+t_j)^{2}+(r-1)\sum\limits_{i=1}^{n}t_id(v_i)^2+2(r-1)^2\sum\limits_{i=1}^{n}d(v_i)t_i(t_i+1)+(r-1)^3\sum\limits_{i=1}^{n}\left[t_i^3+2t_i^2+2(r-1)t_i\right]";
    T4, "T4", Theorem, IV, Any, false, None,
        r"HM(G)+2s\sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+ \\ \sum\limits_{i=1}^{n}st_i\left[d(v_i)+r+s^2+r^2+st_i+2rs\right]";
    T5, "T5", Theorem, V, Any, false, None,
        r"HM(G)+2 \sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+\sum\limits_{v_iv_j \in E(G)}(t_i+t_j)^{2}+M_1(G)+2\sum\limits_{i=1}^{n}d(v_i)t_i+\sum\limits_{i=1}^{n}\left[t_i^{2}+(16r-24)t_i\right]+9n+12m";
    T6, "T6", Theorem, VI, Any, false, None,
        r"HM(G)+2\sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+ \sum\limits_{v_iv_j \in E(G)}(t_i+t_j)^{2}+\sum\limits_{i=1}^{n}t_id(v_i)+\sum\limits_{i=1}^{n}t_i^{2}+(2r^{4}-6r^{3}-10r^{2}+15r)\sum\limits_{i=1}^{n}t_i";
    T7, "T7", Theorem, VII, Any, false, None,
        r"HM(G)+\sum\limits_{v_iv_j \in E(G)}\left[d(v_i)+d(v_j)\right](t_i+t_j)+\sum\limits_{v_iv_j \in E(G)}(t_i+t_j)^{2}+\sum\limits_{i=1}^{n}t_id(v_i)^{2}+2\sum\limits_{i=1}^{n}t_i^{2}d(v_i)+\sum\limits_{i=1}^{n}t_i^{3}+2(s+1)\sum\limits_{i=1}^{n}d(v_i)t_i+2\sum\limits_{i=1}^{n}t_i^{2}+(s^2+3s+2s(s+r)(s+r+1)+1)\sum\limits_{i=1}^{n}t_i";
    C1, "C1", Corollary, I, Any, true, None,
        r"HM(G)+5tM_1(G)+8mt^2+nt^3+4nt^2+16mt+16rnt-35nt";
    C2, "C2", Corollary, II, Any, true, None,
        r"HM(G)+10tM_1(G)+32mt^2+16mt+8nt^3+16nt^2+(16r-24)nt";
    C3, "C3", Corollary, III, Any, true, None,
        r"HM(G)+5t(r-1)M_1(G)+4mt(t+1)(r-1)^{2}+n(r-1)^{3}(t^3+2t^2+2(r-1)t)";
    C4, "C4", Corollary, IV, Any, true, None,
        r"HM(G)+4tsM_1(G)+2mst+st(r+s^2+r^2)n+s^2t^2n+2rs^2tn";
    C4R, "C4R", Corollary, IV, Any, true, REqualsS,
        r"HM(G)+4tsM_1(G)+2mst+ns^2t+ns^2t^2+2tns^3";
    C5, "C5", Corollary, V, Any, true, None,
        r"HM(G)+(4t+1)M_1(G)+4mt(t+1)+nt^2+nt(16r-24)+12m+9n";
    C6, "C6", Corollary, VI, Any, true, None,
        r"HM(G)+4tM_1(G)+4mt^2+2mt+nt^2+(2r^4-6r^3-10r^2+15r)nt";
    C7, "C7", Corollary, VII, Any, true, None,
        r"HM(G)+3tM_1(G)+8mt^2+nt^3+4mt(s+1)+2nt^2(s+1)+(s^2+3s+1)nt+2s(s+r)(s+r+1)nt";
    E1a, "E1a", Example, I, Path, true, None,
        r"16n+(8m+4n)t^2+16t(m+rn)-15nt-30t-30";
    E1b, "E1b", Example, I, Cycle, true, None,
        r"16n-15nt+8mt^2+nt^3+4nt^2+16mt+16rnt";
    E2a, "E2a", Example, II, Path, true, None,
        r"16n-30+16nt-60t+32mt^2+16mt+8nt^3+16nt^2+16rnt";
    E2b, "E2b", Example, II, Cycle, true, None,
        r"16n+32mt^2+16mt+8nt^3+16nt^2+16rnt+16nt";
    E3a, "E3a", Example, III, Path, true, None,
        r"16n-30+20nrt-20nt-30rt+30t+4mt(t+1)(r-1)^2+n(r-1)^3(t^3+2t^2+2rt-2t)";
    E3b, "E3b", Example, III, Cycle, true, None,
        r"16n+20nrt-20nt+4mt(t+1)(r-1)^2+n(r-1)^3(t^3+2t^2+2(r-1)t)";
    E4aRs, "E4a_rs", Example, IV, Path, true, REqualsS,
        r"16n-30+16nst-24st+2mst+ns^2t+ns^2t^2+2tns^{3}";
    E4bRs, "E4b_rs", Example, IV, Cycle, true, REqualsS,
        r"16n+16nst+2mst+ns^2t+ns^2t^2+2tns^3";
    E5a, "E5a", Example, V, Path, true, None,
        r"38n-8nt-8t+4mt^2+4mt+16rnt+12m+nt^2-32";
    E5b, "E5b", Example, V, Cycle, true, None,
        r"29n-8nt+4mt+16rnt+16m+nt^2";
    E6a, "E6a", Example, VI, Path, true, None,
        r"16n-30+16nt-8t+4mt^2+2mt+nt^2+(2r^4-6r^3-10r^2+15r)nt";
    E6b, "E6b", Example, VI, Cycle, true, None,
        r"16n+16nt+4mt^2+2mt+nt^2+(2r^4-6r^3-10r^2+15r)nt";
    E7a, "E7a", Example, VII, Path, true, REqualsS,
        r"16n-30+13nt-6t+8mt^2+nt^3+4mts+4mt+2nst^2+2nt^2+9nts^2+7nst";
    E7aRst, "E7a_rst", Example, VII, Path, true, REqualsSEqualsT,
        r"16n-30+31nr+12nr^3+12mr^2+9nr^2+4mr-6r";
    E7b, "E7b", Example, VII, Cycle, true, REqualsS,
        r"16n+13nt+8mt^2+4mt+4mts+9ns^2t+2nst^2+2nt^2+7snt+nt^3";
    E7bRst, "E7b_rst", Example, VII, Cycle, true, REqualsSEqualsT,
        r"16n+13nr+12mr^2+4mr+12nr^3+9nr^2";
}

impl FormulaId {
    pub fn kind(self) -> FormulaKind {
        self.meta().kind
    }

    pub fn thorn_type(self) -> ThornType {
        self.meta().thorn_type
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Unknown {
                what: "formula id",
                value: s.to_string(),
            })
    }
}

serde_as_str!(FormulaId);

pub fn list_formulas() -> Vec<FormulaMeta> {
    FormulaId::ALL.iter().map(|id| id.meta()).collect()
}

/// SHA-256 fingerprint (first 16 hex digits) of the registry contents.
pub fn registry_hash() -> String {
    let mut hasher = Sha256::new();
    for meta in list_formulas() {
        let line = format!(
            "{}|{}|{}|{:?}|{}|{:?}|{}\n",
            meta.id,
            meta.kind.as_str(),
            meta.thorn_type,
            meta.base,
            meta.uniform_t,
            meta.relation,
            meta.anchor
        );
        hasher.update(line.as_bytes());
    }
    hasher
        .finalize()
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Every summation symbol used by the theorem statements, over the base
/// graph `G` with thorn counts `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumBundle {
    pub n: i128,
    pub m: i128,
    /// HM(G).
    pub hm: i128,
    /// M1(G).
    pub m1: i128,
    /// Σ_{v_iv_j ∈ E} (d_i + d_j)(t_i + t_j).
    pub et: i128,
    /// Σ_{v_iv_j ∈ E} (t_i + t_j)².
    pub et2: i128,
    /// Σ t_i d_i².
    pub td2: i128,
    /// Σ t_i² d_i.
    pub t2d: i128,
    /// Σ t_i d_i.
    pub td: i128,
    /// Σ t_i.
    pub t: i128,
    /// Σ t_i².
    pub t2: i128,
    /// Σ t_i³.
    pub t3: i128,
}

pub fn sum_bundle(g: &Graph, t: &[usize]) -> Result<SumBundle> {
    if t.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: t.len(),
        });
    }
    let d = |v: usize| Int::from_usize(g.degrees()[v]);
    let tv = |v: usize| Int::from_usize(t[v]);
    let over_edges =
        |f: &dyn Fn(usize, usize) -> Int| -> Int { g.edges().iter().map(|&(u, v)| f(u, v)).sum() };
    let over_vertices = |f: &dyn Fn(usize) -> Int| -> Int { (0..g.n()).map(f).sum() };

    Ok(SumBundle {
        n: Int::from_usize(g.n()).value()?,
        m: Int::from_usize(g.m()).value()?,
        hm: indices::hm(g)?,
        m1: indices::m1(g)?,
        et: over_edges(&|u, v| (d(u) + d(v)) * (tv(u) + tv(v))).value()?,
        et2: over_edges(&|u, v| (tv(u) + tv(v)).pow(2)).value()?,
        td2: over_vertices(&|v| tv(v) * d(v).pow(2)).value()?,
        t2d: over_vertices(&|v| tv(v).pow(2) * d(v)).value()?,
        td: over_vertices(&|v| tv(v) * d(v)).value()?,
        t: over_vertices(&tv).value()?,
        t2: over_vertices(&|v| tv(v).pow(2)).value()?,
        t3: over_vertices(&|v| tv(v).pow(3)).value()?,
    })
}

impl SumBundle {
    /// The bundle for a uniform thorn count, from `n`, `m`, `HM(G)`, `M1(G)`
    /// alone: Σ(d_i+d_j) over edges is M1 and Σ d_i is 2m.
    pub fn uniform(n: i128, m: i128, hm: i128, m1: i128, t: i128) -> Result<SumBundle> {
        let (ni, mi, m1i, ti) = (Int::new(n), Int::new(m), Int::new(m1), Int::new(t));
        Ok(SumBundle {
            n,
            m,
            hm,
            m1,
            et: (2 * ti * m1i).value()?,
            et2: (4 * mi * ti.pow(2)).value()?,
            td2: (ti * m1i).value()?,
            t2d: (ti.pow(2) * 2 * mi).value()?,
            td: (ti * 2 * mi).value()?,
            t: (ni * ti).value()?,
            t2: (ni * ti.pow(2)).value()?,
            t3: (ni * ti.pow(3)).value()?,
        })
    }
}

fn int(v: usize) -> Int {
    Int::from_usize(v)
}

/// Right-hand side of a theorem statement over an already computed bundle.
pub fn theorem_rhs(id: FormulaId, b: &SumBundle, r: usize, s: usize) -> Result<i128> {
    let hm = Int::new(b.hm);
    let m1 = Int::new(b.m1);
    let et = Int::new(b.et);
    let et2 = Int::new(b.et2);
    let td2 = Int::new(b.td2);
    let t2d = Int::new(b.t2d);
    let td = Int::new(b.td);
    let st = Int::new(b.t);
    let st2 = Int::new(b.t2);
    let st3 = Int::new(b.t3);
    let (n, m) = (Int::new(b.n), Int::new(b.m));
    let (r, s) = (int(r), int(s));

    let value = match id {
        FormulaId::T1 => {
            hm + 2 * et + et2 + (16 * r - 35) * st + (td2 + st3 + 4 * st2 + 2 * t2d + 4 * td)
        }
        FormulaId::T2 => {
            hm + 4 * et + 4 * et2 + 2 * td2 + 8 * (t2d + td + st3 + 2 * st2) + (16 * r - 24) * st
        }
        FormulaId::T3 | FormulaId::T3Proof => {
            let tail = if id == FormulaId::T3 {
                2 * r - 1
            } else {
                2 * (r - 1)
            };
            hm + 2 * (r - 1) * et
                + (r - 1).pow(2) * et2
                + (r - 1) * td2
                + 2 * (r - 1).pow(2) * (t2d + td)
                + (r - 1).pow(3) * (st3 + 2 * st2 + tail * st)
        }
        // Σ s t_i [d_i + r + s² + r² + s t_i + 2rs], bracket not squared.
        FormulaId::T4 => {
            hm + 2 * s * et
                + s * td
                + s * (r + s.pow(2) + r.pow(2) + 2 * r * s) * st
                + s.pow(2) * st2
        }
        FormulaId::T5 => {
            hm + 2 * et + et2 + m1 + 2 * td + (st2 + (16 * r - 24) * st) + 9 * n + 12 * m
        }
        FormulaId::T6 => {
            hm + 2 * et
                + et2
                + td
                + st2
                + (2 * r.pow(4) - 6 * r.pow(3) - 10 * r.pow(2) + 15 * r) * st
        }
        FormulaId::T7 => {
            hm + et
                + et2
                + td2
                + 2 * t2d
                + st3
                + 2 * (s + 1) * td
                + 2 * st2
                + (s.pow(2) + 3 * s + 2 * s * (s + r) * (s + r + 1) + 1) * st
        }
        other => {
            return Err(Error::Inapplicable {
                id: other.to_string(),
                reason: "not a theorem".into(),
            })
        }
    };
    value.value()
}

fn inapplicable(id: FormulaId, reason: impl Into<String>) -> Error {
    Error::Inapplicable {
        id: id.to_string(),
        reason: reason.into(),
    }
}

fn check_params(id: FormulaId, r: usize, s: usize, t: Option<usize>) -> Result<()> {
    let meta = id.meta();
    let ty = meta.thorn_type;
    if r < ty.min_r() {
        return Err(inapplicable(
            id,
            format!("type {ty} needs r >= {}, got {r}", ty.min_r()),
        ));
    }
    if ty.uses_s() && s < 1 {
        return Err(inapplicable(id, format!("type {ty} needs s >= 1")));
    }
    match meta.relation {
        Relation::None => {}
        Relation::REqualsS if r != s => {
            return Err(inapplicable(
                id,
                format!("stated for r = s, got r={r}, s={s}"),
            ))
        }
        Relation::REqualsSEqualsT if r != s || t != Some(r) => {
            return Err(inapplicable(
                id,
                format!("stated for r = s = t, got r={r}, s={s}, t={t:?}"),
            ))
        }
        _ => {}
    }
    Ok(())
}

/// Theorem statement at a base graph and per-vertex thorn counts.
pub fn eval_theorem(id: FormulaId, g: &Graph, t: &[usize], r: usize, s: usize) -> Result<i128> {
    if id.kind() != FormulaKind::Theorem {
        return Err(inapplicable(id, "not a theorem"));
    }
    check_params(id, r, s, None)?;
    let bundle = sum_bundle(g, t)?;
    theorem_rhs(id, &bundle, r, s)
}

/// Corollary statement for uniform thorn count `t`.
#[allow(clippy::too_many_arguments)]
pub fn eval_corollary(
    id: FormulaId,
    n: usize,
    m: usize,
    hm_g: i128,
    m1_g: i128,
    t: usize,
    r: usize,
    s: usize,
) -> Result<i128> {
    if id.kind() != FormulaKind::Corollary {
        return Err(inapplicable(id, "not a corollary"));
    }
    check_params(id, r, s, Some(t))?;
    let (n, m, t, r, s) = (int(n), int(m), int(t), int(r), int(s));
    let (hm, m1) = (Int::new(hm_g), Int::new(m1_g));

    let value = match id {
        FormulaId::C1 => {
            hm + 5 * t * m1
                + 8 * m * t.pow(2)
                + n * t.pow(3)
                + 4 * n * t.pow(2)
                + 16 * m * t
                + 16 * r * n * t
                - 35 * n * t
        }
        FormulaId::C2 => {
            hm + 10 * t * m1
                + 32 * m * t.pow(2)
                + 16 * m * t
                + 8 * n * t.pow(3)
                + 16 * n * t.pow(2)
                + (16 * r - 24) * n * t
        }
        FormulaId::C3 => {
            hm + 5 * t * (r - 1) * m1
                + 4 * m * t * (t + 1) * (r - 1).pow(2)
                + n * (r - 1).pow(3) * (t.pow(3) + 2 * t.pow(2) + 2 * (r - 1) * t)
        }
        FormulaId::C4 => {
            hm + 4 * t * s * m1
                + 2 * m * s * t
                + s * t * (r + s.pow(2) + r.pow(2)) * n
                + s.pow(2) * t.pow(2) * n
                + 2 * r * s.pow(2) * t * n
        }
        FormulaId::C4R => {
            hm + 4 * t * s * m1
                + 2 * m * s * t
                + n * s.pow(2) * t
                + n * s.pow(2) * t.pow(2)
                + 2 * t * n * s.pow(3)
        }
        FormulaId::C5 => {
            hm + (4 * t + 1) * m1
                + 4 * m * t * (t + 1)
                + n * t.pow(2)
                + n * t * (16 * r - 24)
                + 12 * m
                + 9 * n
        }
        FormulaId::C6 => {
            hm + 4 * t * m1
                + 4 * m * t.pow(2)
                + 2 * m * t
                + n * t.pow(2)
                + (2 * r.pow(4) - 6 * r.pow(3) - 10 * r.pow(2) + 15 * r) * n * t
        }
        FormulaId::C7 => {
            hm + 3 * t * m1
                + 8 * m * t.pow(2)
                + n * t.pow(3)
                + 4 * m * t * (s + 1)
                + 2 * n * t.pow(2) * (s + 1)
                + (s.pow(2) + 3 * s + 1) * n * t
                + 2 * s * (s + r) * (s + r + 1) * n * t
        }
        _ => unreachable!("kind checked above"),
    };
    value.value()
}

/// Example statement for `P_n` / `C_n` with uniform thorn count `t`.
pub fn eval_example(id: FormulaId, n: usize, t: usize, r: usize, s: usize) -> Result<i128> {
    let meta = id.meta();
    if meta.kind != FormulaKind::Example {
        return Err(inapplicable(id, "not an example"));
    }
    check_params(id, r, s, Some(t))?;
    let m = match meta.base {
        BaseRequirement::Path if n >= 2 => n - 1,
        BaseRequirement::Cycle if n >= 3 => n,
        BaseRequirement::Path => {
            return Err(inapplicable(id, format!("P_n needs n >= 2, got {n}")))
        }
        _ => return Err(inapplicable(id, format!("C_n needs n >= 3, got {n}"))),
    };
    let (n, m, t, r, s) = (int(n), int(m), int(t), int(r), int(s));
    let k6 = 2 * r.pow(4) - 6 * r.pow(3) - 10 * r.pow(2) + 15 * r;

    let value = match id {
        FormulaId::E1a => {
            16 * n + (8 * m + 4 * n) * t.pow(2) + 16 * t * (m + r * n) - 15 * n * t - 30 * t - 30
        }
        FormulaId::E1b => {
            16 * n - 15 * n * t
                + 8 * m * t.pow(2)
                + n * t.pow(3)
                + 4 * n * t.pow(2)
                + 16 * m * t
                + 16 * r * n * t
        }
        FormulaId::E2a => {
            16 * n - 30 + 16 * n * t - 60 * t
                + 32 * m * t.pow(2)
                + 16 * m * t
                + 8 * n * t.pow(3)
                + 16 * n * t.pow(2)
                + 16 * r * n * t
        }
        FormulaId::E2b => {
            16 * n
                + 32 * m * t.pow(2)
                + 16 * m * t
                + 8 * n * t.pow(3)
                + 16 * n * t.pow(2)
                + 16 * r * n * t
                + 16 * n * t
        }
        FormulaId::E3a => {
            16 * n - 30 + 20 * n * r * t - 20 * n * t - 30 * r * t
                + 30 * t
                + 4 * m * t * (t + 1) * (r - 1).pow(2)
                + n * (r - 1).pow(3) * (t.pow(3) + 2 * t.pow(2) + 2 * r * t - 2 * t)
        }
        FormulaId::E3b => {
            16 * n + 20 * n * r * t - 20 * n * t
                + 4 * m * t * (t + 1) * (r - 1).pow(2)
                + n * (r - 1).pow(3) * (t.pow(3) + 2 * t.pow(2) + 2 * (r - 1) * t)
        }
        FormulaId::E4aRs => {
            16 * n - 30 + 16 * n * s * t - 24 * s * t
                + 2 * m * s * t
                + n * s.pow(2) * t
                + n * s.pow(2) * t.pow(2)
                + 2 * t * n * s.pow(3)
        }
        FormulaId::E4bRs => {
            16 * n
                + 16 * n * s * t
                + 2 * m * s * t
                + n * s.pow(2) * t
                + n * s.pow(2) * t.pow(2)
                + 2 * t * n * s.pow(3)
        }
        FormulaId::E5a => {
            38 * n - 8 * n * t - 8 * t
                + 4 * m * t.pow(2)
                + 4 * m * t
                + 16 * r * n * t
                + 12 * m
                + n * t.pow(2)
                - 32
        }
        FormulaId::E5b => 29 * n - 8 * n * t + 4 * m * t + 16 * r * n * t + 16 * m + n * t.pow(2),
        FormulaId::E6a => {
            16 * n - 30 + 16 * n * t - 8 * t
                + 4 * m * t.pow(2)
                + 2 * m * t
                + n * t.pow(2)
                + k6 * n * t
        }
        FormulaId::E6b => {
            16 * n + 16 * n * t + 4 * m * t.pow(2) + 2 * m * t + n * t.pow(2) + k6 * n * t
        }
        FormulaId::E7a => {
            16 * n - 30 + 13 * n * t - 6 * t
                + 8 * m * t.pow(2)
                + n * t.pow(3)
                + 4 * m * t * s
                + 4 * m * t
                + 2 * n * s * t.pow(2)
                + 2 * n * t.pow(2)
                + 9 * n * t * s.pow(2)
                + 7 * n * s * t
        }
        FormulaId::E7aRst => {
            16 * n - 30
                + 31 * n * r
                + 12 * n * r.pow(3)
                + 12 * m * r.pow(2)
                + 9 * n * r.pow(2)
                + 4 * m * r
                - 6 * r
        }
        FormulaId::E7b => {
            16 * n
                + 13 * n * t
                + 8 * m * t.pow(2)
                + 4 * m * t
                + 4 * m * t * s
                + 9 * n * s.pow(2) * t
                + 2 * n * s * t.pow(2)
                + 2 * n * t.pow(2)
                + 7 * s * n * t
                + n * t.pow(3)
        }
        FormulaId::E7bRst => {
            16 * n
                + 13 * n * r
                + 12 * m * r.pow(2)
                + 4 * m * r
                + 12 * n * r.pow(3)
                + 9 * n * r.pow(2)
        }
        _ => unreachable!("kind checked above"),
    };
    value.value()
}

/// A parameter point: the base descriptor, its graph, and the construction.
#[derive(Debug, Clone, Copy)]
pub struct Point<'a> {
    pub base: &'a BaseSpec,
    pub graph: &'a Graph,
    pub spec: &'a ThornSpec,
}

/// `Ok(())` when the entry speaks about this point, otherwise the reason it
/// does not.
pub fn check_applicable(id: FormulaId, point: &Point<'_>) -> Result<()> {
    let meta = id.meta();
    let spec = point.spec;
    if spec.kind != meta.thorn_type {
        return Err(inapplicable(
            id,
            format!(
                "stated for type {}, point is type {}",
                meta.thorn_type, spec.kind
            ),
        ));
    }
    if spec.t.len() != point.graph.n() {
        return Err(Error::LengthMismatch {
            expected: point.graph.n(),
            got: spec.t.len(),
        });
    }
    let uniform = spec.uniform_t();
    if meta.uniform_t && (uniform.is_none() || point.graph.n() == 0) {
        return Err(inapplicable(id, "stated for a uniform thorn count t_i = t"));
    }
    let family = point.base.family();
    match meta.base {
        BaseRequirement::Any => {}
        BaseRequirement::Path if family != BaseFamily::Path => {
            return Err(inapplicable(
                id,
                format!("stated for P_n, base is {}", point.base),
            ))
        }
        BaseRequirement::Cycle if family != BaseFamily::Cycle => {
            return Err(inapplicable(
                id,
                format!("stated for C_n, base is {}", point.base),
            ))
        }
        BaseRequirement::Path if point.graph.n() < 2 => {
            return Err(inapplicable(id, "P_n needs n >= 2"))
        }
        _ => {}
    }
    check_params(id, spec.r, spec.s, uniform)
}

pub fn applicability(id: FormulaId, point: &Point<'_>) -> bool {
    check_applicable(id, point).is_ok()
}

/// Evaluates an entry at a point. Reads the base graph only, never the
/// constructed thorn graph.
pub fn evaluate(id: FormulaId, point: &Point<'_>) -> Result<i128> {
    check_applicable(id, point)?;
    let g = point.graph;
    let spec = point.spec;
    match id.kind() {
        FormulaKind::Theorem => eval_theorem(id, g, &spec.t, spec.r, spec.s),
        FormulaKind::Corollary => eval_corollary(
            id,
            g.n(),
            g.m(),
            indices::hm(g)?,
            indices::m1(g)?,
            spec.t[0],
            spec.r,
            spec.s,
        ),
        FormulaKind::Example => eval_example(id, g.n(), spec.t[0], spec.r, spec.s),
    }
}
