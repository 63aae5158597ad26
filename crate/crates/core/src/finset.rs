//! Finite sets and functions as a base category: powerset subobject lattices, direct and
//! inverse image, surjection/injection factorization, kernel pairs, pullbacks and
//! restrictions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::{Elem, ElemSet, FiniteLattice, MAX_ELEMS};
use crate::subfib::{MorphismData, Restriction, RestrictionBackend, SubobjectEmbedding};

/// Default bound on `|X|` for [`FinSetObj::powerset_lattice`].
pub const DEFAULT_SET_CAP: usize = 6;

/// Largest `|X|` whose powerset fits a [`FiniteLattice`].
pub const MAX_SET_SIZE: usize = MAX_ELEMS.trailing_zeros() as usize;

/// A subset of a finite set, bit `i` standing for the `i`-th point.
pub type Mask = u128;

/// A finite set of named points, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetObj {
    points: Vec<String>,
    index: HashMap<String, usize>,
}

impl FinSetObj {
    pub fn new<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicateElement(p.clone()));
            }
        }
        Ok(FinSetObj { points, index })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::ForeignElement(name.to_owned()))
    }

    pub fn full_mask(&self) -> Mask {
        ElemSet::full(self.len()).bits()
    }

    pub fn mask_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Mask> {
        names
            .iter()
            .try_fold(0, |m, n| Ok(m | 1 << self.index_of(n.as_ref())?))
    }

    /// `{x,y}` with points in object order.
    pub fn subset_name(&self, mask: Mask) -> String {
        let inner: Vec<&str> = ElemSet::from_bits(mask)
            .iter()
            .map(|e| self.point(e.index()))
            .collect();
        format!("{{{}}}", inner.join(","))
    }

    /// The points of `mask` as a set in their own right, in the same relative order.
    pub fn subobject(&self, mask: Mask) -> FinSetObj {
        let pts: Vec<&str> = ElemSet::from_bits(mask)
            .iter()
            .map(|e| self.point(e.index()))
            .collect();
        FinSetObj::new(&pts).expect("points of a set are distinct")
    }

    /// The Boolean lattice of subsets, with element index equal to the subset's bitmask.
    pub fn powerset_lattice(&self) -> Result<FiniteLattice> {
        self.powerset_lattice_capped(DEFAULT_SET_CAP)
    }

    pub fn powerset_lattice_capped(&self, cap: usize) -> Result<FiniteLattice> {
        let cap = cap.min(MAX_SET_SIZE);
        if self.len() > cap {
            return Err(Error::TooLarge {
                what: "set",
                size: self.len(),
                cap,
            });
        }
        let size = 1usize << self.len();
        let names = (0..size as Mask).map(|m| self.subset_name(m)).collect();
        FiniteLattice::from_order(names, |i, j| i & !j == 0)
    }

    /// The lattice element naming `mask` in [`Self::powerset_lattice`].
    pub fn subset_elem(&self, l: &FiniteLattice, mask: Mask) -> Result<Elem> {
        l.elem_at(mask as usize)
    }

    /// `Sub(P) -> Sub(X)` for the subset `P` given by `mask`.
    pub fn subset_embedding(&self, mask: Mask) -> Result<SubobjectEmbedding> {
        let sub = self.subobject(mask);
        let sub_l = sub.powerset_lattice_capped(MAX_SET_SIZE)?;
        let ambient = self.powerset_lattice_capped(MAX_SET_SIZE)?;
        let positions: Vec<usize> = ElemSet::from_bits(mask).iter().map(Elem::index).collect();
        let embed = (0..1u128 << sub.len())
            .map(|m| {
                let bits = ElemSet::from_bits(m)
                    .iter()
                    .fold(0, |acc, e| acc | 1 << positions[e.index()]);
                ambient
                    .elem_at(bits as usize)
                    .expect("subset of the ambient set")
            })
            .collect();
        SubobjectEmbedding::new(sub_l, ambient, embed)
    }
}

/// A total function between finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunction {
    dom: FinSetObj,
    cod: FinSetObj,
    map: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: FinSetObj, cod: FinSetObj, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() {
            return Err(Error::InvalidFunction(format!(
                "{} values for {} points",
                map.len(),
                dom.len()
            )));
        }
        if let Some(i) = map.iter().position(|&v| v >= cod.len()) {
            return Err(Error::InvalidFunction(format!(
                "{} maps outside the codomain",
                dom.point(i)
            )));
        }
        Ok(FinFunction { dom, cod, map })
    }

    /// Build from `(point, value)` pairs covering every domain point exactly once.
    pub fn from_names<S: AsRef<str>>(
        dom: FinSetObj,
        cod: FinSetObj,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let mut map = vec![None; dom.len()];
        for (x, y) in pairs {
            let i = dom.index_of(x.as_ref())?;
            let j = cod.index_of(y.as_ref())?;
            if map[i].replace(j).is_some() {
                return Err(Error::InvalidFunction(format!(
                    "{} assigned twice",
                    dom.point(i)
                )));
            }
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::InvalidFunction(format!("{} unassigned", dom.point(i))))
            })
            .collect::<Result<_>>()?;
        Self::new(dom, cod, map)
    }

    pub fn identity(x: &FinSetObj) -> Self {
        FinFunction {
            dom: x.clone(),
            cod: x.clone(),
            map: (0..x.len()).collect(),
        }
    }

    /// Every function `dom -> cod`, in lexicographic order of value tuples.
    pub fn all(dom: &FinSetObj, cod: &FinSetObj) -> Vec<FinFunction> {
        let (n, k) = (dom.len(), cod.len());
        if k == 0 {
            return if n == 0 {
                vec![FinFunction {
                    dom: dom.clone(),
                    cod: cod.clone(),
                    map: Vec::new(),
                }]
            } else {
                Vec::new()
            };
        }
        let total = k.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = code % k;
                    code /= k;
                }
                FinFunction {
                    dom: dom.clone(),
                    cod: cod.clone(),
                    map,
                }
            })
            .collect()
    }

    pub fn dom(&self) -> &FinSetObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinSetObj {
        &self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn image_mask(&self, m: Mask) -> Mask {
        ElemSet::from_bits(m)
            .iter()
            .fold(0, |acc, e| acc | 1 << self.map[e.index()])
    }

    pub fn preimage_mask(&self, t: Mask) -> Mask {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, &v)| t >> v & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_mask(self.dom.full_mask()) == self.cod.full_mask()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.map
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// In finite sets the regular epimorphisms are the surjections.
    pub fn is_regular_epi(&self) -> bool {
        self.is_surjective()
    }

    /// `g ∘ self`.
    pub fn compose(&self, g: &FinFunction) -> Result<FinFunction> {
        if self.cod != g.dom {
            return Err(Error::CarrierMismatch);
        }
        Ok(FinFunction {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            map: self.map.iter().map(|&v| g.map[v]).collect(),
        })
    }

    /// Direct and inverse image between the powerset lattices.
    pub fn to_morphism_data(&self) -> Result<MorphismData> {
        self.to_morphism_data_capped(DEFAULT_SET_CAP)
    }

    pub fn to_morphism_data_capped(&self, cap: usize) -> Result<MorphismData> {
        let dom = self.dom.powerset_lattice_capped(cap)?;
        let cod = self.cod.powerset_lattice_capped(cap)?;
        let image = (0..dom.len() as Mask)
            .map(|m| cod.elem_at(self.image_mask(m) as usize))
            .collect::<Result<_>>()?;
        let preimage = (0..cod.len() as Mask)
            .map(|t| dom.elem_at(self.preimage_mask(t) as usize))
            .collect::<Result<_>>()?;
        MorphismData::new_unchecked(dom, cod, image, preimage)
    }

    /// `f = m ∘ e` with `e` onto the image (points in codomain order) and `m` its inclusion.
    pub fn epi_mono_factorize(&self) -> (FinFunction, FinFunction) {
        let hit = self.image_mask(self.dom.full_mask());
        let image = self.cod.subobject(hit);
        let positions: Vec<usize> = ElemSet::from_bits(hit).iter().map(Elem::index).collect();
        let e = FinFunction {
            dom: self.dom.clone(),
            cod: image.clone(),
            map: self
                .map
                .iter()
                .map(|v| {
                    positions
                        .iter()
                        .position(|p| p == v)
                        .expect("value is in the image")
                })
                .collect(),
        };
        let m = FinFunction {
            dom: image,
            cod: self.cod.clone(),
            map: positions,
        };
        (e, m)
    }

    /// `K = {(x, x') : f(x) = f(x')}` with its two projections.
    pub fn kernel_pair(&self) -> (FinSetObj, FinFunction, FinFunction) {
        let mut names = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..self.dom.len() {
            for j in 0..self.dom.len() {
                if self.map[i] == self.map[j] {
                    names.push(format!("({},{})", self.dom.point(i), self.dom.point(j)));
                    left.push(i);
                    right.push(j);
                }
            }
        }
        let k = FinSetObj::new(&names).expect("pairs are distinct");
        let p1 = FinFunction {
            dom: k.clone(),
            cod: self.dom.clone(),
            map: left,
        };
        let p2 = FinFunction {
            dom: k.clone(),
            cod: self.dom.clone(),
            map: right,
        };
        (k, p1, p2)
    }

    /// Pullback of `self : X -> Z` and `g : Y -> Z`.
    pub fn pullback(&self, g: &FinFunction) -> Result<(FinSetObj, FinFunction, FinFunction)> {
        if self.cod != g.cod {
            return Err(Error::CarrierMismatch);
        }
        let mut names = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..self.dom.len() {
            for j in 0..g.dom.len() {
                if self.map[i] == g.map[j] {
                    names.push(format!("({},{})", self.dom.point(i), g.dom.point(j)));
                    left.push(i);
                    right.push(j);
                }
            }
        }
        let p = FinSetObj::new(&names).expect("pairs are distinct");
        Ok((
            p.clone(),
            FinFunction {
                dom: p.clone(),
                cod: self.dom.clone(),
                map: left,
            },
            FinFunction {
                dom: p,
                cod: g.dom.clone(),
                map: right,
            },
        ))
    }

    /// `f_t : f⁻¹T -> T`, given `T` by point names.
    pub fn restrict_along<S: AsRef<str>>(&self, t: &[S]) -> Result<FinFunction> {
        Ok(self.restrict_along_mask(self.cod.mask_of(t)?))
    }

    pub fn restrict_along_mask(&self, t: Mask) -> FinFunction {
        let pre = self.preimage_mask(t);
        let dom = self.dom.subobject(pre);
        let cod = self.cod.subobject(t);
        let targets: Vec<usize> = ElemSet::from_bits(t).iter().map(Elem::index).collect();
        let map = ElemSet::from_bits(pre)
            .iter()
            .map(|x| {
                let v = self.map[x.index()];
                targets
                    .iter()
                    .position(|&p| p == v)
                    .expect("value lies in T")
            })
            .collect();
        FinFunction { dom, cod, map }
    }

    /// `f|_M : M -> Y`, the trace of `f` on a subset of its domain.
    pub fn trace(&self, m: Mask) -> FinFunction {
        FinFunction {
            dom: self.dom.subobject(m),
            cod: self.cod.clone(),
            map: ElemSet::from_bits(m)
                .iter()
                .map(|x| self.map[x.index()])
                .collect(),
        }
    }

    /// Inclusion of the subset `mask` into `X`.
    pub fn inclusion(x: &FinSetObj, mask: Mask) -> FinFunction {
        FinFunction {
            dom: x.subobject(mask),
            cod: x.clone(),
            map: ElemSet::from_bits(mask).iter().map(Elem::index).collect(),
        }
    }

    /// Every restriction `f_t` is surjective.
    pub fn is_in_e_stably(&self) -> bool {
        (0..=self.cod.full_mask()).all(|t| self.restrict_along_mask(t).is_surjective())
    }

    /// First `t` whose restriction is not surjective.
    pub fn unstable_witness(&self) -> Option<Mask> {
        (0..=self.cod.full_mask()).find(|&t| !self.restrict_along_mask(t).is_surjective())
    }

    /// Restriction along `t` with both subobject embeddings, as consumed by the
    /// Frobenius and heredity checks.
    pub fn restriction_mask(&self, t: Mask) -> Result<Restriction> {
        let f_t = self.restrict_along_mask(t);
        Ok(Restriction {
            data: f_t.to_morphism_data_capped(MAX_SET_SIZE)?,
            dom_embed: self.dom.subset_embedding(self.preimage_mask(t))?,
            cod_embed: self.cod.subset_embedding(t)?,
        })
    }
}

impl RestrictionBackend for FinFunction {
    fn morphism_data(&self) -> Result<MorphismData> {
        self.to_morphism_data_capped(MAX_SET_SIZE)
    }

    fn restriction(&self, t: Elem) -> Result<Restriction> {
        self.restriction_mask(t.index() as Mask)
    }

    /// `w : P ∩ f⁻¹T -> T ∩ f(P)` is a surjection.
    fn comparison_in_e(&self, t: Elem, p: Elem) -> Result<bool> {
        let (t, p) = (t.index() as Mask, p.index() as Mask);
        let source = p & self.preimage_mask(t);
        let target = t & self.image_mask(p);
        Ok(self.image_mask(source) == target)
    }
}
