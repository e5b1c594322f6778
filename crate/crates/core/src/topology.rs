//! Fundamental groups of nilpotent orbits and the menu of finite covers of
//! their closures.
//!
//! For `sl(d)` the fundamental group of the orbit with parts
//! `d_1, ..., d_k` is cyclic of order `gcd(d_1, ..., d_k)`, so the closure
//! carries one cyclic cover per divisor. For `sp(2n)` it is elementary
//! abelian of rank `b` (the number of distinct even members) and the only
//! cover considered is the universal one. For `so(m)` the group is
//! elementary abelian of rank `max(a-1, 0)` when the partition is not
//! rather odd; when it is rather odd a central `Z/2` sits underneath and
//! the quotient by it gives a second distinguished cover `Y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Algebra, OrbitId};

/// Structure of a finite group attached to an orbit or cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `Z/nZ`.
    Cyclic(u64),
    /// `(Z/2Z)^k`.
    ElemAbelian2(u64),
    /// A central extension of `(Z/2Z)^k` by `Z/2Z`; order `2^{k+1}`. The
    /// extension class is not determined, only the order and quotient.
    CentralExtBy2(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteGroupDescriptor {
    pub kind: GroupKind,
    pub order: u64,
}

impl FiniteGroupDescriptor {
    pub fn cyclic(n: u64) -> Self {
        FiniteGroupDescriptor {
            kind: GroupKind::Cyclic(n),
            order: n,
        }
    }

    pub fn elem_abelian_2(k: u64) -> Self {
        FiniteGroupDescriptor {
            kind: GroupKind::ElemAbelian2(k),
            order: 1 << k,
        }
    }

    pub fn central_ext_by_2(k: u64) -> Self {
        FiniteGroupDescriptor {
            kind: GroupKind::CentralExtBy2(k),
            order: 1 << (k + 1),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupDto {
    kind: String,
    param: u64,
    order: u64,
}

impl Serialize for FiniteGroupDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, param) = match self.kind {
            GroupKind::Cyclic(n) => ("cyclic", n),
            GroupKind::ElemAbelian2(k) => ("elem_abelian_2", k),
            GroupKind::CentralExtBy2(k) => ("central_ext_by_2", k),
        };
        GroupDto {
            kind: kind.into(),
            param,
            order: self.order,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteGroupDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = GroupDto::deserialize(d)?;
        let out = match dto.kind.as_str() {
            "cyclic" => FiniteGroupDescriptor::cyclic(dto.param),
            "elem_abelian_2" => FiniteGroupDescriptor::elem_abelian_2(dto.param),
            "central_ext_by_2" => FiniteGroupDescriptor::central_ext_by_2(dto.param),
            other => {
                return Err(serde::de::Error::custom(format!(
                    "unknown group kind `{other}`"
                )))
            }
        };
        if out.order != dto.order {
            return Err(serde::de::Error::custom("group order inconsistent"));
        }
        Ok(out)
    }
}

/// One cover of an orbit closure from the per-family menu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverSpec {
    #[serde(flatten)]
    pub kind: CoverKind,
    pub degree: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverKind {
    /// The cover associated with the universal covering of the orbit.
    Universal,
    /// The degree-`e` cyclic cover of an sl orbit closure, `e | gcd`.
    CyclicSl { e: u64 },
    /// For a rather odd so-partition, the quotient of the universal cover by
    /// the central `Z/2`; degree `2^{max(a-1,0)}`.
    YCoverSo,
}

impl CoverSpec {
    pub fn universal(degree: u64) -> Self {
        CoverSpec {
            kind: CoverKind::Universal,
            degree,
        }
    }

    pub fn cyclic_sl(e: u64) -> Self {
        CoverSpec {
            kind: CoverKind::CyclicSl { e },
            degree: e,
        }
    }

    pub fn y_cover(degree: u64) -> Self {
        CoverSpec {
            kind: CoverKind::YCoverSo,
            degree,
        }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            CoverKind::Universal => format!("universal cover (degree {})", self.degree),
            CoverKind::CyclicSl { e } => format!("cyclic cover of degree {e}"),
            CoverKind::YCoverSo => format!("Y-cover (degree {})", self.degree),
        }
    }
}

impl std::fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Fundamental group of the orbit.
pub fn fundamental_group(orbit: &OrbitId) -> Result<FiniteGroupDescriptor> {
    orbit.ensure_valid()?;
    let p = &orbit.partition;
    Ok(match orbit.algebra {
        Algebra::Sl => {
            let (_, _, g) = p.counts();
            FiniteGroupDescriptor::cyclic(g.max(1))
        }
        Algebra::Sp => FiniteGroupDescriptor::elem_abelian_2(p.count_even()),
        Algebra::So => {
            let a = p.count_odd();
            let k = a.saturating_sub(1);
            // The zero orbit is a point, so its group is trivial no matter
            // what the multiplicity pattern says; only [1] (m = 1) needs
            // this escape hatch, [1^m] with m >= 2 is not rather odd.
            if orbit.is_zero_orbit() {
                FiniteGroupDescriptor::elem_abelian_2(0)
            } else if p.is_rather_odd() {
                FiniteGroupDescriptor::central_ext_by_2(k)
            } else {
                FiniteGroupDescriptor::elem_abelian_2(k)
            }
        }
    })
}

/// The covers of the orbit closure this library can analyze.
pub fn cover_menu(orbit: &OrbitId) -> Result<Vec<CoverSpec>> {
    orbit.ensure_valid()?;
    let p = &orbit.partition;
    Ok(match orbit.algebra {
        Algebra::Sl => {
            let (_, _, g) = p.counts();
            let g = g.max(1);
            let mut degrees: Vec<u64> = (1..=g).filter(|e| g % e == 0).collect();
            degrees.sort_unstable();
            degrees.into_iter().map(CoverSpec::cyclic_sl).collect()
        }
        Algebra::Sp => {
            vec![CoverSpec::universal(fundamental_group(orbit)?.order)]
        }
        Algebra::So => {
            let mut menu = vec![CoverSpec::universal(fundamental_group(orbit)?.order)];
            // When the partition is not rather odd the candidate quotient
            // cover Y coincides with the universal cover; with a single odd
            // member it degenerates to the trivial cover of the closure.
            // Only the genuinely intermediate quotient is offered.
            let a = p.count_odd();
            if p.is_rather_odd() && !orbit.is_zero_orbit() && a >= 2 {
                menu.push(CoverSpec::y_cover(1 << (a - 1)));
            }
            menu
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QFactorialVerdict {
    /// A structural hypothesis guarantees Q-factoriality of the cover
    /// itself: sl with a single distinct part (rectangular Jordan type),
    /// sp with no even member of multiplicity 2, so with no odd member of
    /// multiplicity 2 -- each for any cover in the menu.
    Yes,
    /// Q-factoriality of a built object certified through the construction:
    /// a finite Galois quotient of a product of Q-factorial covers, spread
    /// over a flag bundle.
    ViaConstruction,
    Unknown,
}

/// Is the cover `X` of the orbit closure known to be Q-factorial?
///
/// This is deliberately tri-state: outside the proved hypotheses nothing is
/// asserted. `ViaConstruction` is only produced by the terminalization
/// builder for its composite base objects, never here.
pub fn q_factorial_verdict(orbit: &OrbitId, _cover: &CoverSpec) -> QFactorialVerdict {
    if !orbit.validate_jordan_type() {
        return QFactorialVerdict::Unknown;
    }
    if orbit.is_zero_orbit() {
        // a point
        return QFactorialVerdict::Yes;
    }
    let p = &orbit.partition;
    let hypothesis = match orbit.algebra {
        Algebra::Sl => p.pairs().len() == 1,
        Algebra::Sp => p.pairs().iter().all(|&(v, m)| v % 2 == 1 || m != 2),
        Algebra::So => p.pairs().iter().all(|&(v, m)| v % 2 == 0 || m != 2),
    };
    if hypothesis {
        QFactorialVerdict::Yes
    } else {
        QFactorialVerdict::Unknown
    }
}

/// Human-readable shape of the reductive centralizer of a defining triple
/// for the orbit, from which the component group above is read off. Kept as
/// an annotation only; nothing downstream computes with it.
pub fn centralizer_note(orbit: &OrbitId) -> String {
    let p = &orbit.partition;
    match orbit.algebra {
        Algebra::Sl => {
            let factors: Vec<String> = p
                .pairs()
                .iter()
                .map(|&(v, m)| format!("GL({m})^({v})"))
                .collect();
            format!(
                "block-diagonal {} with total determinant 1",
                factors.join(" x ")
            )
        }
        Algebra::Sp => {
            let factors: Vec<String> = p
                .pairs()
                .iter()
                .map(|&(v, m)| {
                    if v % 2 == 1 {
                        format!("Sp({m})^({v})")
                    } else {
                        format!("O({m})^({v})")
                    }
                })
                .collect();
            factors.join(" x ")
        }
        Algebra::So => {
            let factors: Vec<String> = p
                .pairs()
                .iter()
                .map(|&(v, m)| {
                    if v % 2 == 0 {
                        format!("Sp({m})^({v})")
                    } else {
                        format!("O({m})^({v})")
                    }
                })
                .collect();
            format!(
                "determinant-1 part of {}, pulled back to the spin group",
                factors.join(" x ")
            )
        }
    }
}

/// Is `cover` one of the entries `cover_menu` offers for this orbit?
pub fn cover_in_menu(orbit: &OrbitId, cover: &CoverSpec) -> Result<()> {
    let menu = cover_menu(orbit)?;
    if menu.iter().any(|c| c == cover) {
        Ok(())
    } else {
        Err(Error::InvalidCover(format!(
            "{} is not in the cover menu of {} (menu: {})",
            cover,
            orbit,
            menu.iter()
                .map(|c| c.describe())
                .collect::<Vec<_>>()
                .join(", ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn orbit(alg: Algebra, s: &str) -> OrbitId {
        OrbitId::new(alg, Partition::parse_text(s).unwrap())
    }

    #[test]
    fn fundamental_group_examples() {
        let g = fundamental_group(&orbit(Algebra::Sl, "9,6")).unwrap();
        assert_eq!(g, FiniteGroupDescriptor::cyclic(3));

        let g = fundamental_group(&orbit(Algebra::Sp, "6^2,4^2")).unwrap();
        assert_eq!(g, FiniteGroupDescriptor::elem_abelian_2(2));
        assert_eq!(g.order, 4);

        let g = fundamental_group(&orbit(Algebra::So, "4^2,3,1")).unwrap();
        assert_eq!(g, FiniteGroupDescriptor::central_ext_by_2(1));
        assert_eq!(g.order, 4);

        // not rather odd
        let g = fundamental_group(&orbit(Algebra::So, "11^3,3^2,1")).unwrap();
        assert_eq!(g, FiniteGroupDescriptor::elem_abelian_2(2));

        assert!(fundamental_group(&orbit(Algebra::Sp, "3,1")).is_err());
    }

    #[test]
    fn zero_orbits_are_simply_connected() {
        for alg in [Algebra::Sl, Algebra::Sp, Algebra::So] {
            for m in 1..=6u64 {
                if alg == Algebra::Sp && m % 2 == 1 {
                    continue;
                }
                let o = OrbitId::new(alg, Partition::canonicalize(&vec![1; m as usize]).unwrap());
                assert_eq!(fundamental_group(&o).unwrap().order, 1, "{o}");
            }
        }
    }

    #[test]
    fn cover_menu_examples() {
        let menu = cover_menu(&orbit(Algebra::Sl, "4")).unwrap();
        let degrees: Vec<u64> = menu.iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 2, 4]);

        let menu = cover_menu(&orbit(Algebra::Sp, "6")).unwrap();
        assert_eq!(menu, vec![CoverSpec::universal(2)]);

        let menu = cover_menu(&orbit(Algebra::So, "11^3,3^2,1")).unwrap();
        assert_eq!(menu, vec![CoverSpec::universal(4)]);

        // 13 has multiplicity 2, so this type is not rather odd: no Y entry
        let menu = cover_menu(&orbit(Algebra::So, "13^2,3,1")).unwrap();
        assert_eq!(menu, vec![CoverSpec::universal(4)]);

        let menu = cover_menu(&orbit(Algebra::So, "4^2,3,1")).unwrap();
        assert_eq!(
            menu,
            vec![CoverSpec::universal(4), CoverSpec::y_cover(2)]
        );
    }

    #[test]
    fn q_factorial_examples() {
        let yes = QFactorialVerdict::Yes;
        let unknown = QFactorialVerdict::Unknown;
        let sp = orbit(Algebra::Sp, "4,3^2,2,1^2");
        assert_eq!(q_factorial_verdict(&sp, &CoverSpec::universal(4)), yes);
        let sl = orbit(Algebra::Sl, "3^4");
        assert_eq!(q_factorial_verdict(&sl, &CoverSpec::cyclic_sl(3)), yes);
        let so = orbit(Algebra::So, "3^2,2^2");
        assert_eq!(q_factorial_verdict(&so, &CoverSpec::universal(1)), unknown);
    }

    #[test]
    fn group_json_shape() {
        let g = FiniteGroupDescriptor::central_ext_by_2(1);
        let v = serde_json::to_value(g).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"kind": "central_ext_by_2", "param": 1, "order": 4})
        );
        let back: FiniteGroupDescriptor = serde_json::from_value(v).unwrap();
        assert_eq!(back, g);
    }
}
