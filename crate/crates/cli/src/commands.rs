//! One function per verb. Each returns an [`Output`] whose verdicts decide the exit code.

use serde_json::{json, Value};

use nbhd_core::finframe::{
    all_sublocales_capped, check_right_inverse, enumerate_localic_maps, natural_topology,
};
use nbhd_core::morphisms::quotient_structure;
use nbhd_core::nbhd::{
    enumerate_below, enumerate_structures_capped, kuratowski_from, nbhd_from_kuratowski,
    nbhd_from_pfs, pfs_from, reflect_nbhd, reflect_nbhd_by_enumeration, reflect_top, reflect_weak,
};
use nbhd_core::subfib::check_frobenius_equivalences;
use nbhd_core::{Error, FiniteLattice, LocalicMap, PreNbhd, SpaceMorphism, StructureClass};

use crate::output::Output;
use crate::spec::{Bundle, Catalog, Input, InputError, Kind, Map, SpecFile};
use crate::{Caps, Check, Facet, ReflectTarget};

fn table(mu: &PreNbhd) -> Value {
    let rows: serde_json::Map<String, Value> = mu
        .table()
        .into_iter()
        .map(|(m, ps)| (m, json!(ps)))
        .collect();
    Value::Object(rows)
}

fn interior_table(mu: &PreNbhd) -> Value {
    let l = mu.carrier();
    let rows: serde_json::Map<String, Value> = l
        .elems()
        .map(|m| (l.name(m).to_owned(), json!(l.name(mu.interior(m)))))
        .collect();
    Value::Object(rows)
}

/// `m -> g(m)` where `μ(m) = ↑g(m)`.
fn generators(mu: &PreNbhd) -> Value {
    let l = mu.carrier();
    let rows: serde_json::Map<String, Value> = l
        .elems()
        .map(|m| (l.name(m).to_owned(), json!(l.name(mu.generator(m)))))
        .collect();
    Value::Object(rows)
}

fn names(l: &FiniteLattice, s: nbhd_core::ElemSet) -> Value {
    json!(l.names_of(s))
}

fn class_label(mu: &PreNbhd) -> String {
    match mu.classify() {
        StructureClass::Topology => "Nbhd (Topology)".into(),
        c => c.name().into(),
    }
}

pub fn classify(
    cat: &Catalog,
    target: Option<&str>,
    expect: Option<StructureClass>,
) -> Input<Output> {
    let spec = cat.target(target, &[Kind::Prenbhd])?;
    let mu = cat.spec_prenbhd(spec)?;
    let (class, witness) = mu.classify_with_witness();
    let l = mu.carrier();
    let mut result = json!({
        "name": spec.name,
        "class": class_label(&mu),
    });
    if let Some(w) = witness {
        result["witness"] = json!(w);
    }
    result["opens"] = names(l, mu.opens());
    result["interior"] = interior_table(&mu);
    result["neighbourhoods"] = table(&mu);
    let mut out = Output::new("classify", result);
    if let Some(c) = expect {
        out.check(
            format!("class is {c}"),
            class == c,
            vec![class.name().to_owned()],
        );
    }
    Ok(out)
}

enum Source {
    Nbhd(PreNbhd),
    Pfs(nbhd_core::PseudoFrameSet),
    Kuratowski(nbhd_core::KuratowskiInterior),
}

impl Source {
    fn facet(&self) -> Facet {
        match self {
            Source::Nbhd(_) => Facet::Nbhd,
            Source::Pfs(_) => Facet::Pfs,
            Source::Kuratowski(_) => Facet::Kuratowski,
        }
    }

    fn to_nbhd(&self) -> Input<PreNbhd> {
        match self {
            Source::Nbhd(mu) => {
                if !mu.is_neighbourhood() {
                    return Err(
                        Error::NotANeighbourhood(format!("class is {}", mu.classify())).into(),
                    );
                }
                Ok(mu.clone())
            }
            Source::Pfs(o) => Ok(nbhd_from_pfs(o)),
            Source::Kuratowski(k) => Ok(nbhd_from_kuratowski(k)),
        }
    }
}

fn facet_payload(mu: &PreNbhd, to: Facet, carrier: Value) -> Input<(Kind, Value)> {
    let l = mu.carrier();
    Ok(match to {
        Facet::Nbhd => (
            Kind::Prenbhd,
            json!({ "carrier": carrier, "neighbourhoods": table(mu) }),
        ),
        Facet::Pfs => {
            let o = pfs_from(mu)?;
            (
                Kind::Pfs,
                json!({ "carrier": carrier, "members": names(l, o.members()) }),
            )
        }
        Facet::Kuratowski => {
            let k = kuratowski_from(mu)?;
            let map: serde_json::Map<String, Value> =
                k.table().into_iter().map(|(a, b)| (a, json!(b))).collect();
            (Kind::Kuratowski, json!({ "carrier": carrier, "map": map }))
        }
    })
}

fn same_facet(a: &Source, mu: &PreNbhd) -> Input<bool> {
    Ok(match a {
        Source::Nbhd(x) => x == mu,
        Source::Pfs(o) => pfs_from(mu)?.members() == o.members(),
        Source::Kuratowski(k) => kuratowski_from(mu)?.map() == k.map(),
    })
}

pub fn convert(cat: &Catalog, target: Option<&str>, to: Facet, round_trip: bool) -> Input<Output> {
    let spec = cat.target(target, &[Kind::Prenbhd, Kind::Pfs, Kind::Kuratowski])?;
    let source = match spec.kind {
        Kind::Prenbhd => Source::Nbhd(cat.spec_prenbhd(spec)?),
        Kind::Pfs => Source::Pfs(cat.spec_pfs(spec)?),
        _ => Source::Kuratowski(cat.spec_kuratowski(spec)?),
    };
    let mu = source.to_nbhd()?;
    let (kind, payload) = facet_payload(&mu, to, cat.carrier_value(spec)?)?;
    let converted = json!({
        "kind": kind.name(),
        "name": format!("{}-{}", spec.name, to.name()),
        "payload": payload,
    });
    let result = json!({ "from": source.facet().name(), "to": to.name(), "spec": converted });
    let mut out = Output::new(format!("convert --to {}", to.name()), result);
    if round_trip {
        let back = reparse(cat, &converted)?;
        let pass = same_facet(&source, &back)?;
        out.check("round-trip", pass, vec![format!("{back}")]);
    }
    Ok(out)
}

/// Read a converted spec back as a neighbourhood structure.
fn reparse(cat: &Catalog, value: &Value) -> Input<PreNbhd> {
    let spec: SpecFile =
        serde_json::from_value(value.clone()).map_err(|e| InputError(e.to_string()))?;
    let source = match spec.kind {
        Kind::Prenbhd => Source::Nbhd(cat.spec_prenbhd(&spec)?),
        Kind::Pfs => Source::Pfs(cat.spec_pfs(&spec)?),
        _ => Source::Kuratowski(cat.spec_kuratowski(&spec)?),
    };
    source.to_nbhd()
}

pub fn enumerate(
    cat: &Catalog,
    target: Option<&str>,
    class: StructureClass,
    count_only: bool,
    caps: Caps,
) -> Input<Output> {
    let spec = cat.target(target, &[Kind::Lattice, Kind::Finset, Kind::Frame])?;
    let l = cat.spec_carrier(spec)?;
    let all = enumerate_structures_capped(l.clone(), class, caps.lattice)?;
    let mut result = json!({ "carrier": spec.name, "class": class.name(), "count": all.len() });
    if !count_only {
        result["generators"] = Value::Array(all.iter().map(generators).collect());
    }
    let mut out = Output::new(format!("enumerate --class {}", class.name()), result);
    out.count("structures", all.len());
    Ok(out)
}

type Checks = Vec<(String, bool, Vec<String>)>;

fn largest(list: &[PreNbhd]) -> Option<&PreNbhd> {
    list.iter().find(|m| list.iter().all(|b| b.leq(m)))
}

pub fn reflect(
    cat: &Catalog,
    target: Option<&str>,
    to: ReflectTarget,
    caps: Caps,
) -> Input<Output> {
    let spec = cat.target(target, &[Kind::Prenbhd])?;
    let mu = cat.spec_prenbhd(spec)?;
    let feasible = mu.carrier().len() <= caps.lattice;
    let (command, r, mut out_checks): (&str, PreNbhd, Checks) = match to {
        ReflectTarget::Weak => {
            let r = reflect_weak(&mu);
            let mut checks = vec![
                ("below input".to_owned(), r.leq(&mu), vec![]),
                (
                    "weak".to_owned(),
                    r.is_weak(),
                    vec![r.classify().name().to_owned()],
                ),
            ];
            if feasible {
                let below = enumerate_below(&mu, StructureClass::Weak, caps.lattice)?;
                checks.push((
                    "largest weak structure below input".into(),
                    largest(&below) == Some(&r),
                    vec![],
                ));
            }
            ("reflect --weak", r, checks)
        }
        ReflectTarget::Nbhd => {
            let refl = reflect_nbhd(&mu)?;
            let r = refl.structure;
            let mut checks = vec![(
                "neighbourhood".to_owned(),
                r.is_neighbourhood(),
                vec![r.classify().name().to_owned()],
            )];
            if feasible {
                let below = enumerate_below(&mu, StructureClass::Nbhd, caps.lattice)?;
                if refl.below_input {
                    checks.push((
                        "largest neighbourhood below input".into(),
                        largest(&below) == Some(&r),
                        vec![],
                    ));
                } else {
                    let sup = reflect_nbhd_by_enumeration(&mu, caps.lattice)?;
                    checks.push((
                        "no largest neighbourhood below input".into(),
                        largest(&below).is_none(),
                        vec![],
                    ));
                    checks.push((
                        "least neighbourhood above those below input".into(),
                        sup == r,
                        vec![],
                    ));
                }
            }
            ("reflect --nbhd", r, checks)
        }
        ReflectTarget::Top => {
            let r = reflect_top(&mu)?;
            let same = reflect_nbhd(&mu)?.structure == r;
            let checks = vec![
                ("below input".to_owned(), r.leq(&mu), vec![]),
                (
                    "topology".to_owned(),
                    r.is_topology(),
                    vec![r.classify().name().to_owned()],
                ),
                ("equals neighbourhood reflection".to_owned(), same, vec![]),
            ];
            ("reflect --top", r, checks)
        }
    };
    let result = json!({
        "input": spec.name,
        "below_input": r.leq(&mu),
        "unchanged": r == mu,
        "class": class_label(&r),
        "neighbourhoods": table(&r),
    });
    let mut out = Output::new(command, result);
    for (name, pass, witness) in out_checks.drain(..) {
        out.check(name, pass, witness);
    }
    Ok(out)
}

fn structures<'a>(b: &'a Bundle, spec: &SpecFile, why: &str) -> Input<(&'a PreNbhd, &'a PreNbhd)> {
    match (&b.src, &b.dst) {
        (Some(s), Some(d)) => Ok((s, d)),
        _ => Err(InputError(format!(
            "morphism {:?} needs src and dst structures for {why}",
            spec.name
        ))),
    }
}

fn space_morphism(b: &Bundle, src: PreNbhd, dst: PreNbhd, caps: Caps) -> Input<SpaceMorphism> {
    Ok(match &b.map {
        Map::FinSet(f) => SpaceMorphism::from_finset(f.clone(), src, dst)?,
        Map::Localic(m) => SpaceMorphism::from_localic(m.clone(), caps.frame, src, dst)?,
        Map::Abstract => SpaceMorphism::new(b.data.clone(), src, dst)?,
    })
}

fn pair(
    l1: &FiniteLattice,
    a: nbhd_core::Elem,
    l2: &FiniteLattice,
    b: nbhd_core::Elem,
) -> Vec<String> {
    vec![l1.name(a).to_owned(), l2.name(b).to_owned()]
}

pub fn morphism(
    cat: &Catalog,
    target: Option<&str>,
    checks: &[Check],
    caps: Caps,
) -> Input<Output> {
    let spec = cat.target(target, &[Kind::Morphism])?;
    let b = cat.bundle(spec)?;
    let checks: Vec<Check> = if checks.is_empty() {
        vec![
            Check::Prenbhd,
            Check::Pseudoopen,
            Check::Frobenius,
            Check::Ppj,
        ]
    } else {
        checks.to_vec()
    };
    let backend = match b.map {
        Map::FinSet(_) => "finset",
        Map::Localic(_) => "localic",
        Map::Abstract => "abstract",
    };
    let mut out = Output::new("morphism", json!({ "name": spec.name, "backend": backend }));
    let (d, c) = (b.data.dom(), b.data.cod());
    for check in checks {
        match check {
            Check::Prenbhd => {
                let (s, t) = structures(&b, spec, "--check prenbhd")?;
                let sm = space_morphism(&b, s.clone(), t.clone(), caps)?;
                out.check(
                    "prenbhd",
                    sm.is_prenbhd_morphism(),
                    sm.prenbhd_counterexample()
                        .map(|(n, p)| pair(c, n, c, p))
                        .unwrap_or_default(),
                );
                out.absorb("prenbhd", sm.prenbhd_formulations());
            }
            Check::Pseudoopen => {
                let (s, t) = structures(&b, spec, "--check pseudoopen")?;
                let sm = space_morphism(&b, s.clone(), t.clone(), caps)?;
                out.check(
                    "pseudo-open",
                    sm.is_pseudo_open(),
                    sm.pseudo_open_counterexample()
                        .map(|(y, u)| pair(c, y, d, u))
                        .unwrap_or_default(),
                );
            }
            Check::Frobenius => {
                out.check(
                    "frobenius",
                    b.data.is_frobenius(),
                    b.data
                        .frobenius_counterexample()
                        .map(|(x, y)| pair(d, x, c, y))
                        .unwrap_or_default(),
                );
                match &b.map {
                    Map::FinSet(f) => out.absorb("frobenius", check_frobenius_equivalences(f)?),
                    Map::Localic(m) => out.absorb("frobenius", check_frobenius_equivalences(m)?),
                    Map::Abstract => {}
                }
            }
            Check::Ppj => {
                let w = b.data.ppj_counterexample();
                out.check(
                    "ppj",
                    w.is_none(),
                    w.map(|g| vec![c.format_set(g)]).unwrap_or_default(),
                );
            }
        }
    }
    Ok(out)
}

pub fn regepi(cat: &Catalog, target: Option<&str>, hereditary: bool, nhd: bool) -> Input<Output> {
    let spec = cat.target(target, &[Kind::Morphism])?;
    let b = cat.bundle(spec)?;
    let Map::FinSet(f) = &b.map else {
        return Err(Error::BackendRequired.into());
    };
    let src = b
        .src
        .clone()
        .ok_or_else(|| InputError(format!("morphism {:?} needs a src structure", spec.name)))?;
    let (dst, quotient) = match &b.dst {
        Some(d) => (d.clone(), false),
        None => (quotient_structure(&b.data, &src)?, true),
    };
    let sm = SpaceMorphism::from_finset(f.clone(), src, dst)?;
    let regular = sm.is_regular_epi_pnhd()?;
    let mut result =
        json!({ "name": spec.name, "dst_is_quotient": quotient, "regular_epi": regular });
    if quotient {
        result["dst"] = table(sm.dst());
    }
    let mut out = Output::new("regepi", result);
    out.absorb("", sm.regular_epi_report()?);
    if hereditary {
        out.absorb("hereditary", sm.heredity_report()?);
    }
    if nhd {
        out.check(
            "regular epi of neighbourhood spaces",
            sm.is_regular_epi_nhd()?,
            vec![],
        );
        out.absorb("nhd", sm.neighbourhood_heredity_checks()?);
    }
    Ok(out)
}

pub fn locale(
    cat: &Catalog,
    target: Option<&str>,
    natural: bool,
    right_inverse: bool,
    caps: Caps,
) -> Input<Output> {
    let mut result = serde_json::Map::new();
    let mut out_checks = Vec::new();
    let mut counts = Vec::new();
    if natural || !right_inverse {
        let spec = cat.target(target, &[Kind::Frame])?;
        let frame = cat.spec_frame(spec)?;
        let subs = all_sublocales_capped(&frame, caps.frame)?;
        let nt = natural_topology(&subs);
        let sl = subs.lattice();
        let l = frame.lattice();
        let open = subs.open_map();
        let opens: serde_json::Map<String, Value> = l
            .elems()
            .map(|a| (l.name(a).to_owned(), json!(sl.name(open[a.index()]))))
            .collect();
        let iso = l.elems().all(|a| {
            l.elems()
                .all(|b| l.leq(a, b) == sl.leq(open[a.index()], open[b.index()]))
        }) && open.iter().copied().collect::<nbhd_core::ElemSet>() == nt.opens();
        result.insert("frame".into(), json!(spec.name));
        result.insert("sublocales".into(), json!(sl.names()));
        result.insert("open_sublocales".into(), json!(opens));
        result.insert("class".into(), json!(class_label(&nt)));
        result.insert("natural_topology".into(), table(&nt));
        out_checks.push((
            "natural topology is a topology".to_owned(),
            nt.is_topology(),
            vec![nt.classify().name().to_owned()],
        ));
        out_checks.push((
            "opens order-isomorphic to the frame".to_owned(),
            iso,
            vec![],
        ));
        out_checks.push((
            "sublocale lattice".to_owned(),
            subs.check().all_pass(),
            vec![],
        ));
        counts.push(("sublocales", subs.len()));
    }
    let mut report = None;
    if right_inverse {
        let mut maps: Vec<LocalicMap> = cat
            .specs()
            .iter()
            .filter(|s| s.kind == Kind::Localic)
            .map(|s| cat.spec_localic(s))
            .collect::<Input<_>>()?;
        let supplied = !maps.is_empty();
        if !supplied {
            let frames = cat
                .specs()
                .iter()
                .filter(|s| s.kind == Kind::Frame)
                .map(|s| cat.spec_frame(s))
                .collect::<Input<Vec<_>>>()?;
            for x in &frames {
                for y in &frames {
                    maps.extend(enumerate_localic_maps(x, y));
                }
            }
        }
        result.insert(
            "maps".into(),
            json!(if supplied { "supplied" } else { "enumerated" }),
        );
        counts.push(("localic maps", maps.len()));
        report = Some(check_right_inverse(&maps, caps.frame)?);
    }
    let mut out = Output::new("locale", Value::Object(result));
    for (name, pass, w) in out_checks {
        out.check(name, pass, w);
    }
    if let Some(r) = report {
        out.absorb("right-inverse", r);
    }
    for (name, n) in counts {
        out.count(name, n);
    }
    Ok(out)
}
