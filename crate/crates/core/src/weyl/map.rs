use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{
    parse_fraction, parse_polynomial, AlgebraError, Fraction, LinearForm, ParamMap, Polynomial, Rational, Var,
    PARAMS, PHASE, VAR_COUNT,
};
use crate::systems::HamiltonSystem;

/// Birational transformation of the extended space `(x..p, t, a0..a5)`.
#[derive(Clone)]
pub struct ExtendedMap {
    pub name: String,
    /// Images of `x, y, z, w, q, p`.
    pub phase: [Fraction; 6],
    /// Image of `t`.
    pub time: Fraction,
    pub params: ParamMap,
    pub inverse: Option<Box<ExtendedMap>>,
}

impl ExtendedMap {
    pub fn identity() -> ExtendedMap {
        ExtendedMap {
            name: String::from("id"),
            phase: PHASE.map(Fraction::var),
            time: Fraction::var(Var::T),
            params: ParamMap::identity(),
            inverse: None,
        }
    }

    /// Builds a map from text, listing only the components that move.
    /// Time is `"t"` or `"-t"` in the catalog; parameter entries are
    /// `("a0", "-a0")`-style pairs.
    pub fn from_text(
        name: &str,
        phase: &[(&str, &str)],
        time: &str,
        params: &[(&str, &str)],
    ) -> Result<ExtendedMap, AlgebraError> {
        let mut m = ExtendedMap::identity();
        m.name = String::from(name);
        for (v, e) in phase {
            let var = Var::from_name(v).filter(|v| v.is_phase()).ok_or_else(|| bad_name(v))?;
            m.phase[var.index()] = parse_fraction(e)?;
        }
        m.time = parse_fraction(time)?;
        let mut images: [Polynomial; 6] = PARAMS.map(Polynomial::var);
        for (v, e) in params {
            let var = Var::from_name(v).filter(|v| v.is_param()).ok_or_else(|| bad_name(v))?;
            images[var.param_index().unwrap()] = parse_polynomial(e)?;
        }
        m.params = ParamMap::from_images(&images)?;
        Ok(m)
    }

    pub fn named(mut self, name: impl Into<String>) -> ExtendedMap {
        self.name = name.into();
        self
    }

    pub fn with_inverse(mut self, inv: ExtendedMap) -> ExtendedMap {
        self.inverse = Some(Box::new(inv));
        self
    }

    /// Marks the map as its own inverse.
    pub fn involutive(self) -> ExtendedMap {
        let inv = self.clone();
        self.with_inverse(inv)
    }

    pub fn inverse(&self) -> Option<&ExtendedMap> {
        self.inverse.as_deref()
    }

    /// `dt'/dt` when the time component is `+-t`.
    pub fn time_sign(&self) -> Option<i32> {
        let t = Fraction::var(Var::T);
        if self.time == t {
            Some(1)
        } else if self.time == -&t {
            Some(-1)
        } else {
            None
        }
    }

    /// Bindings for substituting this map into an expression; fixed
    /// coordinates are omitted.
    pub fn bindings(&self) -> Vec<(Var, Fraction)> {
        let mut b: Vec<(Var, Fraction)> = Vec::new();
        for (i, v) in PHASE.iter().enumerate() {
            if self.phase[i] != Fraction::var(*v) {
                b.push((*v, self.phase[i].clone()));
            }
        }
        if self.time != Fraction::var(Var::T) {
            b.push((Var::T, self.time.clone()));
        }
        b.extend(self.params.bindings());
        b
    }

    /// Pull-back of an expression: `e o self`.
    pub fn apply(&self, e: &Fraction) -> Result<Fraction, AlgebraError> {
        e.substitute(&self.bindings())
    }

    /// Total number of stored terms, a proxy for expression swell.
    pub fn size(&self) -> usize {
        self.phase.iter().map(|f| f.size()).sum::<usize>() + self.time.size()
    }

    /// Largest exponent of any single variable in a numerator or denominator.
    pub fn max_degree(&self) -> u32 {
        self.phase
            .iter()
            .chain(core::iter::once(&self.time))
            .flat_map(|f| [f.numer(), f.denom()])
            .flat_map(|p| crate::algebra::ALL_VARS.iter().map(move |v| p.degree_in(*v)))
            .max()
            .unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.equals(&ExtendedMap::identity())
    }

    /// Exact equality of phase, time and parameter action.
    pub fn equals(&self, other: &ExtendedMap) -> bool {
        self.params == other.params && self.time == other.time && self.phase == other.phase
    }

    /// Equality on the hyperplane cut out by a normalization.
    pub fn equals_on(&self, other: &ExtendedMap, sys: &HamiltonSystem) -> bool {
        if self.time != other.time {
            return false;
        }
        for i in 0..6 {
            let a = sys.reduce_poly(&self.params.image(i));
            let b = sys.reduce_poly(&other.params.image(i));
            if a != b {
                return false;
            }
        }
        (0..6).all(|i| sys.reduce(&self.phase[i]) == sys.reduce(&other.phase[i]))
    }

    /// The first differing component against `other` on the hyperplane, as
    /// `(label, self - other)`.
    pub fn difference_on(&self, other: &ExtendedMap, sys: &HamiltonSystem) -> Option<(String, String)> {
        for (i, v) in PHASE.iter().enumerate() {
            let d = &sys.reduce(&self.phase[i]) - &sys.reduce(&other.phase[i]);
            if !d.is_zero() {
                return Some((alloc::format!("{v}"), alloc::format!("{d}")));
            }
        }
        let d = &self.time - &other.time;
        if !d.is_zero() {
            return Some((String::from("t"), alloc::format!("{d}")));
        }
        for i in 0..6 {
            let d = sys.reduce_poly(&(&self.params.image(i) - &other.params.image(i)));
            if !d.is_zero() {
                return Some((alloc::format!("a{i}"), alloc::format!("{d}")));
            }
        }
        None
    }

    /// Reduces every component by a normalization.
    pub fn reduced(&self, sys: &HamiltonSystem) -> ExtendedMap {
        let mut m = self.clone();
        for f in m.phase.iter_mut() {
            *f = sys.reduce(f);
        }
        m.time = sys.reduce(&m.time);
        let images: [Polynomial; 6] = core::array::from_fn(|i| sys.reduce_poly(&m.params.image(i)));
        m.params = ParamMap::from_images(&images).expect("reduction keeps images affine");
        m
    }

    /// Image of a rational point; `None` on a pole.
    pub fn evaluate(&self, point: &[Rational; VAR_COUNT]) -> Option<[Rational; VAR_COUNT]> {
        let mut out = point.clone();
        for (i, v) in PHASE.iter().enumerate() {
            out[v.index()] = self.phase[i].evaluate(point)?;
        }
        out[Var::T.index()] = self.time.evaluate(point)?;
        let alpha: [Rational; 6] = core::array::from_fn(|i| point[PARAMS[i].index()].clone());
        let img = self.params.apply(&alpha);
        for (i, v) in PARAMS.iter().enumerate() {
            out[v.index()] = img[i].clone();
        }
        Some(out)
    }

    /// Whether the parameter action maps the hyperplane `c` into itself
    /// identically: `c o params = c`.
    pub fn preserves(&self, c: &LinearForm) -> bool {
        c.pullback(&self.params) == *c
    }
}

fn bad_name(v: &str) -> AlgebraError {
    AlgebraError::Parse { pos: 0, msg: alloc::format!("`{v}` is not a valid component name") }
}

/// `(f o g)(P) = f(g(P))`.
pub fn compose(f: &ExtendedMap, g: &ExtendedMap) -> Result<ExtendedMap, AlgebraError> {
    let b = g.bindings();
    let mut phase: [Fraction; 6] = core::array::from_fn(|_| Fraction::zero());
    for i in 0..6 {
        phase[i] = f.phase[i].substitute(&b)?;
    }
    let time = f.time.substitute(&b)?;
    let params = f.params.compose(&g.params);
    let inverse = match (f.inverse(), g.inverse()) {
        (Some(fi), Some(gi)) => {
            // (f g)^-1 = g^-1 f^-1, without carrying nested inverses along.
            let gi = strip(gi);
            let fi = strip(fi);
            Some(Box::new(compose(&gi, &fi)?))
        }
        _ => None,
    };
    Ok(ExtendedMap {
        name: alloc::format!("{}*{}", f.name, g.name),
        phase,
        time,
        params,
        inverse,
    })
}

fn strip(m: &ExtendedMap) -> ExtendedMap {
    let mut c = m.clone();
    c.inverse = None;
    c
}

/// Product `w[0] o w[1] o ... o w[k]`; the empty word is the identity.
pub fn compose_word(word: &[&ExtendedMap]) -> Result<ExtendedMap, AlgebraError> {
    let mut acc = ExtendedMap::identity();
    for m in word.iter().rev() {
        acc = compose(&strip(m), &acc)?;
    }
    let names: Vec<&str> = word.iter().map(|m| m.name.as_str()).collect();
    acc.name = names.join("*");
    Ok(acc)
}

/// Smallest `n <= max` with `f^n = id` exactly, if any.
/// Iterates past this degree are taken as evidence of infinite order; it
/// keeps exponents well inside the packed monomial range.
const ORDER_DEGREE_LIMIT: u32 = 12;

pub fn order_of(f: &ExtendedMap, max: u32) -> Result<Option<u32>, AlgebraError> {
    assert!(max >= 1);
    let f = strip(f);
    let mut acc = f.clone();
    for n in 1..=max {
        if acc.is_identity() {
            return Ok(Some(n));
        }
        if acc.max_degree() > ORDER_DEGREE_LIMIT {
            return Ok(None);
        }
        if n < max {
            acc = compose(&f, &acc)?;
        }
    }
    Ok(None)
}

impl fmt::Debug for ExtendedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExtendedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: (", self.name)?;
        for (i, c) in self.phase.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; {}; {})", self.time, self.params)
    }
}
