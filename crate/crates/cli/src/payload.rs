//! Serializable payloads, one per subcommand. Pitch classes are integers,
//! chords and group elements are name strings, permutations carry both a
//! cycle string and an index array over the carrier.

use serde::{Deserialize, Serialize};

use triadic::duality::{
    chord_carrier, plr_label, plr_named, plr_rank, ti_group, ti_rank, word_labels, PlrName,
};
use triadic::enumerate::{case_audit, enumerate_carriers, CARRIER_TYPES};
use triadic::monoid::{MonoidAction, TriadicMonoid};
use triadic::topos::{characteristic_morphism, lt_topologies, upgrade, Omega, TopologyName};
use triadic::zmod::maximal_cover;
use triadic::{AffineMap, Chord, PcSet, PermGroup, Permutation, SubDualSystem};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub command: String,
    pub payload: T,
}

pub fn pitches(set: PcSet) -> Vec<u8> {
    set.values()
}

pub fn chord_names(chords: impl IntoIterator<Item = Chord>) -> Vec<String> {
    chords.into_iter().map(|c| c.name()).collect()
}

fn chord_names_of(points: &[usize]) -> Vec<String> {
    chord_names(points.iter().map(|&i| Chord::from_index(i)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonoidElement {
    pub label: String,
    pub multiplier: u8,
    pub offset: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonoidDoc {
    pub elements: Vec<MonoidElement>,
    /// `table[m][n]` is the label of `m ∘ n`.
    pub table: Vec<Vec<String>>,
}

pub fn monoid() -> MonoidDoc {
    let t = TriadicMonoid::new();
    MonoidDoc {
        elements: t
            .elements()
            .map(|m| MonoidElement {
                label: t.label(m).to_string(),
                multiplier: t.map(m).multiplier(),
                offset: t.map(m).offset(),
            })
            .collect(),
        table: t
            .elements()
            .map(|m| {
                t.elements()
                    .map(|n| t.label(t.compose(m, n)).to_string())
                    .collect()
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub name: String,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionRow {
    pub element: String,
    /// Image of each ideal, in the order of `ideals`.
    pub images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaDoc {
    pub ideals: Vec<IdealDoc>,
    pub action: Vec<ActionRow>,
}

pub fn omega() -> OmegaDoc {
    let omega = Omega::new();
    let t = omega.monoid();
    OmegaDoc {
        ideals: (0..6)
            .map(|k| IdealDoc {
                name: omega.name(k).to_string(),
                elements: omega
                    .ideal(k)
                    .elements()
                    .into_iter()
                    .map(|m| t.label(m).to_string())
                    .collect(),
            })
            .collect(),
        action: t
            .elements()
            .map(|m| ActionRow {
                element: t.label(m).to_string(),
                images: (0..6)
                    .map(|k| omega.name(omega.act(m, k)).to_string())
                    .collect(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub key: String,
    pub symbol: String,
    /// Image of each element of Ω, in Ω order.
    pub table: Vec<String>,
    pub upgrade_of_c: Vec<u8>,
    pub upgrade_type: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopologiesDoc {
    pub omega: Vec<String>,
    pub topologies: Vec<TopologyDoc>,
}

pub fn topologies() -> anyhow::Result<TopologiesDoc> {
    let omega = Omega::new();
    let natural = MonoidAction::natural();
    let topologies = lt_topologies(&omega)
        .iter()
        .map(|j| {
            Ok(TopologyDoc {
                key: j.name.key().to_string(),
                symbol: j.name.symbol().to_string(),
                table: j.table.iter().map(|&k| omega.name(k).to_string()).collect(),
                upgrade_of_c: pitches(upgrade(
                    &omega,
                    triadic::monoid::major_triad(),
                    &natural,
                    j,
                )?),
                upgrade_type: j.name.upgrade_type().to_string(),
            })
        })
        .collect::<anyhow::Result<_>>()?;
    Ok(TopologiesDoc {
        omega: (0..6).map(|k| omega.name(k).to_string()).collect(),
        topologies,
    })
}

fn ti_name(phi: AffineMap) -> String {
    phi.ti_label().expect("conjugators are T/I elements")
}

fn closed_action(set: PcSet, phi: AffineMap) -> anyhow::Result<MonoidAction> {
    let action = MonoidAction::conjugated(phi)?;
    anyhow::ensure!(
        action.is_closed(set),
        "{set} is not closed under the {}-conjugated action",
        ti_name(phi)
    );
    Ok(action)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiDoc {
    pub set: Vec<u8>,
    pub conjugate: String,
    /// `table[z]` names the ideal `χ(z)`.
    pub table: Vec<String>,
}

pub fn chi(set: PcSet, phi: AffineMap) -> anyhow::Result<ChiDoc> {
    let omega = Omega::new();
    let action = closed_action(set, phi)?;
    let chi = characteristic_morphism(&omega, set, &action)?;
    Ok(ChiDoc {
        set: pitches(set),
        conjugate: ti_name(phi),
        table: chi
            .table
            .iter()
            .map(|&k| omega.name(k).to_string())
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UpgradeDoc {
    pub set: Vec<u8>,
    pub topology: String,
    pub symbol: String,
    pub conjugate: String,
    pub upgrade: Vec<u8>,
    /// `φ` applied to the natural upgrade of `φ⁻¹(set)`.
    pub via_image: Vec<u8>,
    pub cover: Vec<String>,
    pub covered: bool,
}

pub fn upgrade_doc(set: PcSet, name: TopologyName, phi: AffineMap) -> anyhow::Result<UpgradeDoc> {
    let omega = Omega::new();
    let j = triadic::topos::topology(&omega, name);
    let direct = upgrade(&omega, set, &closed_action(set, phi)?, &j)?;
    let phi_inv = phi.inverse().expect("T/I elements are invertible");
    let natural = upgrade(&omega, phi_inv.image(set), &MonoidAction::natural(), &j)?;
    let cover = maximal_cover(direct);
    Ok(UpgradeDoc {
        set: pitches(set),
        topology: name.key().to_string(),
        symbol: name.symbol().to_string(),
        conjugate: ti_name(phi),
        upgrade: pitches(direct),
        via_image: pitches(phi.image(natural)),
        cover: chord_names(cover.chords.iter().copied()),
        covered: cover.covered,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub name: String,
    pub cycles: String,
    /// Images of carrier positions, carrier in chord order.
    pub images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub seed: String,
    pub orbit: Vec<String>,
    pub g0: Vec<ElementDoc>,
    pub h0: Vec<ElementDoc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlrSubgroup {
    Pl,
    Pr,
    Plr,
}

impl PlrSubgroup {
    pub fn name(self) -> &'static str {
        match self {
            PlrSubgroup::Pl => "PL",
            PlrSubgroup::Pr => "PR",
            PlrSubgroup::Plr => "PLR",
        }
    }

    fn generators(self) -> Vec<(&'static str, Permutation)> {
        let letters: &[(&str, PlrName)] = match self {
            PlrSubgroup::Pl => &[("P", PlrName::P), ("L", PlrName::L)],
            PlrSubgroup::Pr => &[("P", PlrName::P), ("R", PlrName::R)],
            PlrSubgroup::Plr => &[("P", PlrName::P), ("L", PlrName::L), ("R", PlrName::R)],
        };
        letters.iter().map(|&(s, n)| (s, plr_named(n))).collect()
    }

    pub fn group(self) -> PermGroup {
        let gens: Vec<Permutation> = self.generators().into_iter().map(|(_, p)| p).collect();
        PermGroup::generate(Chord::COUNT, &gens).expect("generators share the chord carrier")
    }

    /// Element names with their ambient permutations: shortest words for the
    /// two-generator groups, `Q`-form labels for the whole group.
    fn named_elements(self) -> Vec<(String, Permutation)> {
        match self {
            PlrSubgroup::Plr => {
                let mut elements: Vec<Permutation> = self.group().elements().to_vec();
                elements.sort_by_key(plr_rank);
                elements
                    .into_iter()
                    .map(|p| (plr_label(&p).expect("PLR element"), p))
                    .collect()
            }
            _ => word_labels(&self.group(), &self.generators()),
        }
    }
}

fn element_docs(
    sys: &SubDualSystem,
    named: &[(String, Permutation)],
) -> anyhow::Result<Vec<ElementDoc>> {
    let carrier = sys.carrier(&chord_carrier());
    named
        .iter()
        .map(|(name, p)| {
            let local = p.restrict(&sys.orbit)?;
            Ok(ElementDoc {
                name: name.clone(),
                cycles: carrier.render_cycles(&local),
                images: local.images().to_vec(),
            })
        })
        .collect()
}

fn system_doc(sys: &SubDualSystem, group: PlrSubgroup) -> anyhow::Result<SystemDoc> {
    let ti = ti_group();
    let mut partner: Vec<Permutation> = sys.h0.elements().to_vec();
    partner.sort_by_key(ti_rank);
    let partner: Vec<(String, Permutation)> = partner
        .into_iter()
        .map(|p| (ti.label(&p).expect("T/I element").to_string(), p))
        .collect();
    Ok(SystemDoc {
        seed: Chord::from_index(sys.base).name(),
        orbit: chord_names_of(&sys.orbit),
        g0: element_docs(sys, &group.named_elements())?,
        h0: element_docs(sys, &partner)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualDoc {
    pub group: String,
    pub system: SystemDoc,
}

pub fn dual(group: PlrSubgroup, seed: Chord) -> anyhow::Result<DualDoc> {
    let pair = triadic::DualPair::plr_ti();
    let sys = pair.sub_dual(&group.group(), seed.index())?;
    anyhow::ensure!(sys.verify(), "sub-dual system at {seed} fails verification");
    Ok(DualDoc {
        group: group.name().to_string(),
        system: system_doc(&sys, group)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemsDoc {
    pub group: String,
    pub systems: Vec<SystemDoc>,
}

pub fn systems(group: PlrSubgroup, seed: Chord) -> anyhow::Result<SystemsDoc> {
    let pair = triadic::DualPair::plr_ti();
    let all = pair.all_orbits(&group.group(), seed.index(), ti_rank)?;
    for sys in &all {
        anyhow::ensure!(
            sys.verify(),
            "system through {} fails verification",
            Chord::from_index(sys.base)
        );
    }
    Ok(SystemsDoc {
        group: group.name().to_string(),
        systems: all
            .iter()
            .map(|s| system_doc(s, group))
            .collect::<anyhow::Result<_>>()?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub carrier: Vec<u8>,
    pub name: String,
    pub cover: Vec<String>,
    pub subgroup_elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerateDoc {
    pub rows: Vec<EnumerationRecord>,
}

pub fn enumerate() -> EnumerateDoc {
    EnumerateDoc {
        rows: enumerate_carriers()
            .into_iter()
            .map(|row| {
                let mut elements = row.subgroup.elements().to_vec();
                elements.sort_by_key(plr_rank);
                EnumerationRecord {
                    carrier: pitches(row.carrier),
                    name: row.type_label.to_string(),
                    cover: chord_names(row.cover.iter().copied()),
                    subgroup_elements: elements
                        .iter()
                        .map(|p| plr_label(p).expect("PLR element"))
                        .collect(),
                }
            })
            .collect(),
    }
}

/// Short subgroup description for a table row, by carrier.
pub fn subgroup_label(name: &str) -> &'static str {
    CARRIER_TYPES
        .iter()
        .find(|(_, n, _)| *n == name)
        .map(|(_, _, s)| *s)
        .unwrap_or("?")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PCaseDoc {
    pub generators: Vec<String>,
    pub order: usize,
    pub orbit: Vec<String>,
    pub pitch_union: Vec<u8>,
    pub closed: bool,
    pub cover: Vec<String>,
    pub simply_transitive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub elements: Vec<String>,
    pub orbit: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PFreeDoc {
    pub excludes_3: bool,
    pub excludes_5: bool,
    pub excludes_9: bool,
    pub candidates: Vec<CandidateDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditDoc {
    pub p_containing: Vec<PCaseDoc>,
    pub p_free: PFreeDoc,
}

pub fn audit() -> AuditDoc {
    let audit = case_audit();
    let ti = ti_group();
    let c = Chord::major(0).index();
    AuditDoc {
        p_containing: audit
            .p_containing
            .iter()
            .map(|case| PCaseDoc {
                generators: vec!["P".to_string(), format!("Q{}", case.i)],
                order: case.group.order(),
                orbit: chord_names(case.orbit.iter().copied()),
                pitch_union: pitches(case.pitch_union),
                closed: case.closed,
                cover: chord_names(case.full_cover.iter().copied()),
                simply_transitive: case.simply_transitive_on_cover,
            })
            .collect(),
        p_free: PFreeDoc {
            excludes_3: audit.p_free.excludes_3,
            excludes_5: audit.p_free.excludes_5,
            excludes_9: audit.p_free.excludes_9,
            candidates: audit
                .p_free
                .candidates
                .iter()
                .map(|h| {
                    let mut elements = h.elements().to_vec();
                    elements.sort_by_key(ti_rank);
                    CandidateDoc {
                        elements: elements
                            .iter()
                            .map(|p| ti.label(p).expect("T/I element").to_string())
                            .collect(),
                        orbit: chord_names_of(&h.orbit(c)),
                    }
                })
                .collect(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowCheck {
    pub name: String,
    pub ok: bool,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub rows: Vec<RowCheck>,
    pub all_ok: bool,
}

/// Rebuilds every row of an enumeration document from its names and
/// rechecks closure, covering, the maximal cover, the subgroup axioms and
/// simple transitivity.
pub fn verify(doc: &EnumerateDoc) -> VerifyDoc {
    let rows: Vec<RowCheck> = doc.rows.iter().map(check_record).collect();
    VerifyDoc {
        all_ok: !rows.is_empty() && rows.iter().all(|r| r.ok),
        rows,
    }
}

fn check_record(record: &EnumerationRecord) -> RowCheck {
    let mut problems = Vec::new();
    let carrier = if record.carrier.iter().all(|&v| v < 12) {
        Some(
            record
                .carrier
                .iter()
                .map(|&v| triadic::PitchClass::new(v as i64))
                .collect::<PcSet>(),
        )
    } else {
        problems.push("carrier has a value outside 0..12".to_string());
        None
    };
    let cover: Result<Vec<Chord>, _> = record.cover.iter().map(|n| n.parse::<Chord>()).collect();
    let cover = cover.map_err(|e| problems.push(e.to_string())).ok();
    let elements: Option<Vec<Permutation>> = record
        .subgroup_elements
        .iter()
        .map(|n| {
            let p = triadic::duality::parse_plr_label(n);
            if p.is_none() {
                problems.push(format!("unknown PLR element {n:?}"));
            }
            p
        })
        .collect();
    let subgroup = elements.and_then(|e| {
        PermGroup::from_elements(Chord::COUNT, e)
            .map_err(|e| problems.push(format!("subgroup: {e}")))
            .ok()
    });
    if let (Some(carrier), Some(cover), Some(subgroup)) = (carrier, cover, subgroup) {
        if !triadic::enumerate::verify_row(carrier, &cover, &subgroup) {
            problems.push("row fails closure, cover or simple transitivity".to_string());
        }
        match CARRIER_TYPES.iter().find(|(v, _, _)| {
            v.iter()
                .map(|&x| triadic::PitchClass::new(x))
                .collect::<PcSet>()
                == carrier
        }) {
            Some((_, name, _)) if *name == record.name => {}
            Some((_, name, _)) => problems.push(format!("carrier is named {name:?}")),
            None => problems.push("carrier is not a listed type".to_string()),
        }
    }
    RowCheck {
        name: record.name.clone(),
        ok: problems.is_empty(),
        problems,
    }
}
