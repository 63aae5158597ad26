//! JSON input files: one spec object or an array of them, resolved by name.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use nbhd_core::finframe::{all_sublocales_capped, natural_topology};
use nbhd_core::{
    FinFunction, FinSetObj, FiniteFrame, FiniteLattice, KuratowskiInterior, LocalicMap,
    MorphismData, PreNbhd, PseudoFrameSet,
};

use crate::Caps;

/// An input problem: malformed JSON, schema mismatch, unresolved name or invalid mathematical data.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<nbhd_core::Error> for InputError {
    fn from(e: nbhd_core::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Input<T> = Result<T, InputError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lattice,
    Finset,
    Finfn,
    Frame,
    Localic,
    Prenbhd,
    Pfs,
    Kuratowski,
    Morphism,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Lattice => "lattice",
            Kind::Finset => "finset",
            Kind::Finfn => "finfn",
            Kind::Frame => "frame",
            Kind::Localic => "localic",
            Kind::Prenbhd => "prenbhd",
            Kind::Pfs => "pfs",
            Kind::Kuratowski => "kuratowski",
            Kind::Morphism => "morphism",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub kind: Kind,
    pub name: String,
    pub payload: Value,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    Many(Vec<SpecFile>),
    One(SpecFile),
}

/// A value given inline or by the name of another spec.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Name(String),
    Inline(T),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticePayload {
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinSetPayload {
    pub points: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinFnPayload {
    pub dom: Ref<FinSetPayload>,
    pub cod: Ref<FinSetPayload>,
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramePayload {
    pub lattice: Ref<LatticePayload>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalicPayload {
    pub src: Ref<FramePayload>,
    pub dst: Ref<FramePayload>,
    /// The frame homomorphism from `dst` to `src`.
    pub hom: BTreeMap<String, String>,
}

/// A carrier given inline as a lattice or a finite set, or by the name of a lattice, finite
/// set (its powerset) or frame (its sublocale lattice).
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CarrierRef {
    Name(String),
    Lattice(LatticePayload),
    FinSet(FinSetPayload),
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    Nabla,
    Atleast,
    ConstantTop,
    NaturalTopology,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreNbhdPayload {
    pub carrier: CarrierRef,
    #[serde(default)]
    pub neighbourhoods: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub preset: Option<Preset>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PfsPayload {
    pub carrier: CarrierRef,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KuratowskiPayload {
    pub carrier: CarrierRef,
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataPayload {
    pub dom: Ref<LatticePayload>,
    pub cod: Ref<LatticePayload>,
    pub image: BTreeMap<String, String>,
    pub preimage: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismPayload {
    #[serde(default)]
    pub finfn: Option<Ref<FinFnPayload>>,
    #[serde(default)]
    pub localic: Option<Ref<LocalicPayload>>,
    #[serde(default)]
    pub data: Option<DataPayload>,
    #[serde(default)]
    pub src: Option<Ref<PreNbhdPayload>>,
    #[serde(default)]
    pub dst: Option<Ref<PreNbhdPayload>>,
}

/// The underlying map of a morphism bundle.
pub enum Map {
    FinSet(FinFunction),
    Localic(LocalicMap),
    /// Image and preimage tables only; the data lives in [`Bundle::data`].
    Abstract,
}

pub struct Bundle {
    pub map: Map,
    pub data: MorphismData,
    pub src: Option<PreNbhd>,
    pub dst: Option<PreNbhd>,
}

/// Every spec of an invocation, in argument order.
pub struct Catalog {
    specs: Vec<SpecFile>,
    by_name: HashMap<String, usize>,
    caps: Caps,
}

fn pairs(map: &BTreeMap<String, String>) -> Vec<(&str, &str)> {
    map.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect()
}

impl Catalog {
    pub fn load(paths: &[impl AsRef<Path>], caps: Caps) -> Input<Self> {
        let mut specs = Vec::new();
        for path in paths {
            let path = path.as_ref();
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            let parsed: OneOrMany = serde_json::from_str(&text)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            match parsed {
                OneOrMany::Many(v) => specs.extend(v),
                OneOrMany::One(s) => specs.push(s),
            }
        }
        Self::from_specs(specs, caps)
    }

    pub fn from_specs(specs: Vec<SpecFile>, caps: Caps) -> Input<Self> {
        let mut by_name = HashMap::new();
        for (i, s) in specs.iter().enumerate() {
            if by_name.insert(s.name.clone(), i).is_some() {
                return Err(InputError(format!("duplicate spec name {:?}", s.name)));
            }
        }
        Ok(Catalog {
            specs,
            by_name,
            caps,
        })
    }

    pub fn specs(&self) -> &[SpecFile] {
        &self.specs
    }

    pub fn get(&self, name: &str) -> Input<&SpecFile> {
        self.by_name
            .get(name)
            .map(|&i| &self.specs[i])
            .ok_or_else(|| InputError(format!("no spec named {name:?}")))
    }

    /// The spec named `target`, or the only spec of an accepted kind.
    pub fn target(&self, target: Option<&str>, kinds: &[Kind]) -> Input<&SpecFile> {
        let wanted = kinds
            .iter()
            .map(|k| k.name())
            .collect::<Vec<_>>()
            .join(" or ");
        if let Some(name) = target {
            let s = self.get(name)?;
            if !kinds.contains(&s.kind) {
                return Err(InputError(format!(
                    "spec {name:?} is a {}, expected {wanted}",
                    s.kind.name()
                )));
            }
            return Ok(s);
        }
        let found: Vec<&SpecFile> = self
            .specs
            .iter()
            .filter(|s| kinds.contains(&s.kind))
            .collect();
        match found.as_slice() {
            [one] => Ok(one),
            [] => Err(InputError(format!("no {wanted} spec among the inputs"))),
            _ => Err(InputError(format!(
                "several {wanted} specs among the inputs; choose one with --target"
            ))),
        }
    }

    fn payload<T: for<'de> Deserialize<'de>>(&self, spec: &SpecFile) -> Input<T> {
        serde_json::from_value(spec.payload.clone())
            .map_err(|e| InputError(format!("{} {:?}: {e}", spec.kind.name(), spec.name)))
    }

    fn named<T: for<'de> Deserialize<'de>>(&self, name: &str, kind: Kind) -> Input<T> {
        let s = self.get(name)?;
        if s.kind != kind {
            return Err(InputError(format!(
                "spec {name:?} is a {}, expected {}",
                s.kind.name(),
                kind.name()
            )));
        }
        self.payload(s)
    }

    fn resolve<T: Clone + for<'de> Deserialize<'de>>(&self, r: &Ref<T>, kind: Kind) -> Input<T> {
        match r {
            Ref::Name(n) => self.named(n, kind),
            Ref::Inline(t) => Ok(t.clone()),
        }
    }

    pub fn lattice_payload(&self, p: &LatticePayload) -> Input<FiniteLattice> {
        let leq: Vec<(&str, &str)> = p
            .leq
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let elements: Vec<&str> = p.elements.iter().map(String::as_str).collect();
        Ok(FiniteLattice::new(&elements, &leq)?)
    }

    pub fn finset_payload(&self, p: &FinSetPayload) -> Input<FinSetObj> {
        let s = FinSetObj::new(&p.points)?;
        if s.len() > self.caps.set {
            return Err(nbhd_core::Error::TooLarge {
                what: "set",
                size: s.len(),
                cap: self.caps.set,
            }
            .into());
        }
        Ok(s)
    }

    pub fn lattice(&self, r: &Ref<LatticePayload>) -> Input<FiniteLattice> {
        self.lattice_payload(&self.resolve(r, Kind::Lattice)?)
    }

    pub fn finset(&self, r: &Ref<FinSetPayload>) -> Input<FinSetObj> {
        self.finset_payload(&self.resolve(r, Kind::Finset)?)
    }

    pub fn frame_payload(&self, p: &FramePayload) -> Input<FiniteFrame> {
        let l = self.lattice(&p.lattice)?;
        if !l.is_frame() {
            return Err(InputError("lattice is not a frame".into()));
        }
        Ok(FiniteFrame::new(l))
    }

    pub fn frame(&self, r: &Ref<FramePayload>) -> Input<FiniteFrame> {
        self.frame_payload(&self.resolve(r, Kind::Frame)?)
    }

    pub fn finfn(&self, r: &Ref<FinFnPayload>) -> Input<FinFunction> {
        let p = self.resolve(r, Kind::Finfn)?;
        Ok(FinFunction::from_names(
            self.finset(&p.dom)?,
            self.finset(&p.cod)?,
            &pairs(&p.map),
        )?)
    }

    pub fn localic(&self, r: &Ref<LocalicPayload>) -> Input<LocalicMap> {
        let p = self.resolve(r, Kind::Localic)?;
        Ok(LocalicMap::from_names(
            self.frame(&p.src)?,
            self.frame(&p.dst)?,
            &pairs(&p.hom),
        )?)
    }

    /// The carrier lattice, and the frame when the carrier is a sublocale lattice.
    pub fn carrier(&self, c: &CarrierRef) -> Input<(Arc<FiniteLattice>, Option<FiniteFrame>)> {
        match c {
            CarrierRef::Lattice(p) => Ok((Arc::new(self.lattice_payload(p)?), None)),
            CarrierRef::FinSet(p) => {
                let s = self.finset_payload(p)?;
                Ok((Arc::new(s.powerset_lattice_capped(self.caps.set)?), None))
            }
            CarrierRef::Name(n) => {
                let s = self.get(n)?;
                match s.kind {
                    Kind::Lattice => Ok((Arc::new(self.lattice_payload(&self.payload(s)?)?), None)),
                    Kind::Finset => {
                        let set = self.finset_payload(&self.payload(s)?)?;
                        Ok((Arc::new(set.powerset_lattice_capped(self.caps.set)?), None))
                    }
                    Kind::Frame => {
                        let frame = self.frame_payload(&self.payload(s)?)?;
                        let subs = all_sublocales_capped(&frame, self.caps.frame)?;
                        Ok((subs.lattice_arc().clone(), Some(frame)))
                    }
                    other => Err(InputError(format!(
                        "carrier {n:?} is a {}, expected lattice, finset or frame",
                        other.name()
                    ))),
                }
            }
        }
    }

    pub fn prenbhd_payload(&self, p: &PreNbhdPayload) -> Input<PreNbhd> {
        let (l, frame) = self.carrier(&p.carrier)?;
        match (&p.neighbourhoods, p.preset) {
            (Some(rows), None) => {
                let rows: Vec<(&str, Vec<&str>)> = rows
                    .iter()
                    .map(|(m, ps)| (m.as_str(), ps.iter().map(String::as_str).collect()))
                    .collect();
                Ok(PreNbhd::from_names(l, &rows)?)
            }
            (None, Some(Preset::Nabla)) => Ok(PreNbhd::nabla(l)),
            (None, Some(Preset::Atleast)) => Ok(PreNbhd::atleast(l)),
            (None, Some(Preset::ConstantTop)) => Ok(PreNbhd::constant_top(l)),
            (None, Some(Preset::NaturalTopology)) => {
                let frame = frame
                    .ok_or_else(|| InputError("natural_topology needs a frame carrier".into()))?;
                Ok(natural_topology(&all_sublocales_capped(
                    &frame,
                    self.caps.frame,
                )?))
            }
            _ => Err(InputError(
                "give exactly one of neighbourhoods and preset".into(),
            )),
        }
    }

    pub fn prenbhd(&self, r: &Ref<PreNbhdPayload>) -> Input<PreNbhd> {
        self.prenbhd_payload(&self.resolve(r, Kind::Prenbhd)?)
    }

    pub fn spec_prenbhd(&self, s: &SpecFile) -> Input<PreNbhd> {
        self.prenbhd_payload(&self.payload(s)?)
    }

    pub fn spec_pfs(&self, s: &SpecFile) -> Input<PseudoFrameSet> {
        let p: PfsPayload = self.payload(s)?;
        let (l, _) = self.carrier(&p.carrier)?;
        Ok(PseudoFrameSet::from_names(l, &p.members)?)
    }

    pub fn spec_kuratowski(&self, s: &SpecFile) -> Input<KuratowskiInterior> {
        let p: KuratowskiPayload = self.payload(s)?;
        let (l, _) = self.carrier(&p.carrier)?;
        Ok(KuratowskiInterior::from_names(l, &pairs(&p.map))?)
    }

    /// The raw carrier field of a structure-valued spec, for echoing into converted output.
    pub fn carrier_value(&self, s: &SpecFile) -> Input<Value> {
        s.payload
            .get("carrier")
            .cloned()
            .ok_or_else(|| InputError(format!("{} {:?} has no carrier", s.kind.name(), s.name)))
    }

    /// A lattice for enumeration: a lattice, the powerset of a finite set, or the sublocale
    /// lattice of a frame.
    pub fn spec_carrier(&self, s: &SpecFile) -> Input<Arc<FiniteLattice>> {
        Ok(self.carrier(&CarrierRef::Name(s.name.clone()))?.0)
    }

    pub fn spec_frame(&self, s: &SpecFile) -> Input<FiniteFrame> {
        self.frame_payload(&self.payload(s)?)
    }

    pub fn spec_localic(&self, s: &SpecFile) -> Input<LocalicMap> {
        self.localic(&Ref::Name(s.name.clone()))
    }

    pub fn bundle(&self, s: &SpecFile) -> Input<Bundle> {
        let p: MorphismPayload = self.payload(s)?;
        let (map, data) = match (&p.finfn, &p.localic, &p.data) {
            (Some(f), None, None) => {
                let f = self.finfn(f)?;
                let data = f.to_morphism_data_capped(self.caps.set)?;
                (Map::FinSet(f), data)
            }
            (None, Some(m), None) => {
                let m = self.localic(m)?;
                let (_, _, data) = m.sublocale_data(self.caps.frame)?;
                (Map::Localic(m), data)
            }
            (None, None, Some(d)) => {
                let dom = self.lattice(&d.dom)?;
                let cod = self.lattice(&d.cod)?;
                let data =
                    MorphismData::from_names(dom, cod, &pairs(&d.image), &pairs(&d.preimage))?;
                (Map::Abstract, data)
            }
            _ => {
                return Err(InputError(format!(
                    "morphism {:?}: give exactly one of finfn, localic and data",
                    s.name
                )))
            }
        };
        let natural = |frame: &FiniteFrame| -> Input<PreNbhd> {
            Ok(natural_topology(&all_sublocales_capped(
                frame,
                self.caps.frame,
            )?))
        };
        let src = match (&p.src, &map) {
            (Some(r), _) => Some(self.prenbhd(r)?),
            (None, Map::Localic(m)) => Some(natural(m.src())?),
            (None, _) => None,
        };
        let dst = match (&p.dst, &map) {
            (Some(r), _) => Some(self.prenbhd(r)?),
            (None, Map::Localic(m)) => Some(natural(m.dst())?),
            (None, _) => None,
        };
        for (end, mu, l) in [("src", &src, data.dom()), ("dst", &dst, data.cod())] {
            if mu.as_ref().is_some_and(|mu| mu.carrier() != l) {
                return Err(InputError(format!(
                    "morphism {:?}: {end} structure lives on a different lattice than the map's {}",
                    s.name,
                    if end == "src" { "domain" } else { "codomain" }
                )));
            }
        }
        Ok(Bundle {
            map,
            data,
            src,
            dst,
        })
    }
}
