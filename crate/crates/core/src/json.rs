//! JSON forms of the library's objects. Tract elements always travel as
//! exact strings.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::flats::{ExplicitCollection, TFlatLattice};
use crate::gp::GpFunction;
use crate::matroid::Matroid;
use crate::pointline::PointLineArrangement;
use crate::rep::{Lambda2Representation, Representation};
use crate::subset::{self, Subset};
use crate::tract::{Tract, TractDescriptor};

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| input(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| input(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| input(format!("{what} must be an array")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| input(format!("{what} must be an object")))
}

pub fn descriptor_to_json(d: TractDescriptor) -> Value {
    serde_json::to_value(d).expect("descriptor serializes")
}

pub fn descriptor_from_json(v: &Value) -> Result<TractDescriptor> {
    serde_json::from_value(v.clone()).map_err(|e| input(format!("bad tract descriptor: {e}")))
}

/// The descriptor under `key`, for dispatching on the tract before parsing.
pub fn read_descriptor(v: &Value, key: &str) -> Result<TractDescriptor> {
    descriptor_from_json(field(v, key)?)
}

fn check_tract<T: Tract>(tract: &T, v: &Value, key: &str) -> Result<()> {
    let d = read_descriptor(v, key)?;
    if d != tract.descriptor() {
        return Err(Error::TractMismatch(tract.descriptor().to_string(), d.to_string()));
    }
    Ok(())
}

pub fn subset_to_json(s: Subset) -> Value {
    json!(subset::elements(s))
}

pub fn subset_from_json(v: &Value, n: usize) -> Result<Subset> {
    let mut s = 0;
    for e in as_array(v, "subset")? {
        let e = as_usize(e, "subset element")?;
        if e >= n || subset::contains(s, e) {
            return Err(input(format!("bad subset element {e}")));
        }
        s |= 1 << e;
    }
    Ok(s)
}

fn key_from_str(text: &str, n: usize) -> Result<Subset> {
    let s = subset::parse(text, n).ok_or_else(|| input(format!("bad subset key {text:?}")))?;
    if subset::format(s) != text.trim() {
        return Err(input(format!("subset key {text:?} is not sorted")));
    }
    Ok(s)
}

pub fn vector_to_json<T: Tract>(tract: &T, x: &[T::Elem]) -> Value {
    Value::Array(x.iter().map(|a| Value::String(tract.format_elem(a))).collect())
}

pub fn elem_from_json<T: Tract>(tract: &T, v: &Value) -> Result<T::Elem> {
    match v {
        Value::String(s) => tract.parse_elem(s),
        Value::Number(n) => tract.parse_elem(&n.to_string()),
        _ => Err(input("tract elements must be strings")),
    }
}

pub fn vector_from_json<T: Tract>(tract: &T, n: usize, v: &Value) -> Result<Vec<T::Elem>> {
    let items = as_array(v, "vector")?;
    if items.len() != n {
        return Err(input(format!("vector of length {} where {n} expected", items.len())));
    }
    items.iter().map(|a| elem_from_json(tract, a)).collect()
}

pub fn matroid_to_json(m: &Matroid) -> Value {
    let bases: Vec<Value> = m.bases().iter().map(|&b| subset_to_json(b)).collect();
    json!({"n": m.n(), "r": m.rank(), "bases": bases})
}

pub fn matroid_from_json(v: &Value) -> Result<Matroid> {
    let n = as_usize(field(v, "n")?, "n")?;
    let r = as_usize(field(v, "r")?, "r")?;
    if n > subset::MAX_GROUND_SET {
        return Err(input(format!("ground set larger than {}", subset::MAX_GROUND_SET)));
    }
    let bases = as_array(field(v, "bases")?, "bases")?
        .iter()
        .map(|b| subset_from_json(b, n))
        .collect::<Result<Vec<_>>>()?;
    Matroid::from_bases(n, r, bases)
}

pub fn gp_to_json<T: Tract>(phi: &GpFunction<T>) -> Value {
    let t = phi.tract();
    let mut values = Map::new();
    for (&k, a) in phi.values() {
        if !t.is_zero(a) {
            values.insert(subset::format(k), Value::String(t.format_elem(a)));
        }
    }
    json!({
        "tract": descriptor_to_json(t.descriptor()),
        "n": phi.n(),
        "r": phi.rank(),
        "values": values,
    })
}

/// Parses and checks GP1–GP3; absent keys are zero.
pub fn gp_from_json<T: Tract>(tract: &T, v: &Value) -> Result<GpFunction<T>> {
    check_tract(tract, v, "tract")?;
    let n = as_usize(field(v, "n")?, "n")?;
    let r = as_usize(field(v, "r")?, "r")?;
    if n > subset::MAX_GROUND_SET || r > n {
        return Err(input(format!("unsupported shape n = {n}, r = {r}")));
    }
    let mut values = Vec::new();
    for (k, a) in as_object(field(v, "values")?, "values")? {
        let key = key_from_str(k, n)?;
        if subset::size(key) != r {
            return Err(input(format!("key {k:?} does not have {r} elements")));
        }
        values.push((key, elem_from_json(tract, a)?));
    }
    GpFunction::new_checked(tract.clone(), n, r, values)
}

fn functions_to_json<T: Tract>(tract: &T, map: &BTreeMap<Subset, Vec<T::Elem>>) -> Value {
    let obj: Map<String, Value> = map.iter().map(|(&h, x)| (subset::format(h), vector_to_json(tract, x))).collect();
    Value::Object(obj)
}

pub fn rep_to_json<T: Tract>(rep: &Representation<T>) -> Value {
    json!({
        "tract": descriptor_to_json(rep.tract().descriptor()),
        "matroid": matroid_to_json(rep.matroid()),
        "eta": functions_to_json(rep.tract(), rep.functions()),
    })
}

/// Parses shapes only; the axioms are left to the checkers.
pub fn rep_from_json<T: Tract>(tract: &T, v: &Value) -> Result<Representation<T>> {
    check_tract(tract, v, "tract")?;
    let matroid = matroid_from_json(field(v, "matroid")?)?;
    let n = matroid.n();
    let mut eta = Vec::new();
    for (k, x) in as_object(field(v, "eta")?, "eta")? {
        eta.push((key_from_str(k, n)?, vector_from_json(tract, n, x)?));
    }
    Representation::new(tract.clone(), matroid, eta)
}

pub fn lambda2_to_json<T: Tract>(l: &Lambda2Representation<T>) -> Value {
    let psi: Map<String, Value> = l.psi().iter().map(|(&f, g)| (subset::format(f), gp_to_json(g))).collect();
    json!({
        "tract": descriptor_to_json(l.tract().descriptor()),
        "matroid": matroid_to_json(l.matroid()),
        "psi": psi,
    })
}

pub fn lambda2_from_json<T: Tract>(tract: &T, v: &Value) -> Result<Lambda2Representation<T>> {
    check_tract(tract, v, "tract")?;
    let matroid = matroid_from_json(field(v, "matroid")?)?;
    let mut psi = Vec::new();
    for (k, g) in as_object(field(v, "psi")?, "psi")? {
        psi.push((key_from_str(k, matroid.n())?, gp_from_json(tract, g)?));
    }
    Lambda2Representation::new(tract.clone(), matroid, psi)
}

/// Members for finite tracts, generators otherwise.
pub fn lattice_to_json<T: Tract>(l: &TFlatLattice<T>) -> Value {
    let t = l.tract();
    let flats: Vec<Value> = l
        .flats()
        .iter()
        .map(|f| {
            let mut obj = Map::new();
            obj.insert("F".into(), subset_to_json(f.flat()));
            match f.members() {
                Some(m) => obj.insert("members".into(), m.iter().map(|x| vector_to_json(t, x)).collect()),
                None => obj.insert(
                    "generators".into(),
                    f.predicate().generators().iter().map(|x| vector_to_json(t, x)).collect(),
                ),
            };
            Value::Object(obj)
        })
        .collect();
    json!({"tract": descriptor_to_json(t.descriptor()), "n": l.n(), "flats": flats})
}

pub fn collection_to_json<T: Tract>(c: &ExplicitCollection<T>) -> Value {
    let t = c.tract();
    let flats: Vec<Value> = (0..c.members().len())
        .map(|i| {
            let members: Vec<Value> = c.members()[i].iter().map(|x| vector_to_json(t, x)).collect();
            json!({"F": subset_to_json(c.coordinates(i)), "members": members})
        })
        .collect();
    json!({"tract": descriptor_to_json(t.descriptor()), "n": c.n(), "flats": flats})
}

/// Reads `{"tract", "n", "flats": [{"members": [...]}, ...]}`; any `"F"`
/// labels are ignored, since the checker recomputes coordinates.
pub fn collection_from_json<T: Tract>(tract: &T, v: &Value) -> Result<ExplicitCollection<T>> {
    check_tract(tract, v, "tract")?;
    let n = as_usize(field(v, "n")?, "n")?;
    if n > subset::MAX_GROUND_SET {
        return Err(input("ground set too large"));
    }
    let mut sets = Vec::new();
    for f in as_array(field(v, "flats")?, "flats")? {
        let members = as_array(field(f, "members")?, "members")?
            .iter()
            .map(|x| vector_from_json(tract, n, x))
            .collect::<Result<BTreeSet<_>>>()?;
        sets.push(members);
    }
    ExplicitCollection::new(tract.clone(), n, sets)
}

pub fn arrangement_to_json<T: Tract>(a: &PointLineArrangement<T>) -> Value {
    let t = a.tract();
    let points: Vec<Value> = a.points().iter().map(|p| vector_to_json(t, p.representative())).collect();
    let lines: Vec<Value> = a.lines().iter().map(gp_to_json).collect();
    json!({"tract": descriptor_to_json(t.descriptor()), "n": a.n(), "points": points, "lines": lines})
}

pub fn arrangement_from_json<T: Tract>(tract: &T, v: &Value) -> Result<PointLineArrangement<T>> {
    check_tract(tract, v, "tract")?;
    let n = as_usize(field(v, "n")?, "n")?;
    let points = as_array(field(v, "points")?, "points")?
        .iter()
        .map(|x| vector_from_json(tract, n, x))
        .collect::<Result<Vec<_>>>()?;
    let lines = as_array(field(v, "lines")?, "lines")?
        .iter()
        .map(|g| gp_from_json(tract, g))
        .collect::<Result<Vec<_>>>()?;
    PointLineArrangement::new(tract.clone(), n, &points, lines)
}

pub fn matrix_to_json<T: Tract>(tract: &T, rows: &[Vec<T::Elem>]) -> Value {
    let rows: Vec<Value> = rows.iter().map(|r| vector_to_json(tract, r)).collect();
    json!({"field": descriptor_to_json(tract.descriptor()), "rows": rows})
}

pub fn matrix_from_json<T: Tract>(tract: &T, v: &Value) -> Result<Vec<Vec<T::Elem>>> {
    check_tract(tract, v, "field")?;
    let rows = as_array(field(v, "rows")?, "rows")?;
    let n = rows.first().map(|r| as_array(r, "row").map(Vec::len)).transpose()?.unwrap_or(0);
    rows.iter().map(|r| vector_from_json(tract, n, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{Krasner, PrimeField, Tropical};
    use num_bigint::BigInt;

    #[test]
    fn gp_round_trip() {
        let t = Tropical::<BigInt>::new();
        let v: Value = serde_json::from_str(
            r#"{"tract":{"kind":"tropical"},"n":4,"r":2,
                "values":{"0,1":"1","0,2":"1","0,3":"1","1,2":"1","1,3":"1","2,3":"1/2"}}"#,
        )
        .unwrap();
        let phi = gp_from_json(&t, &v).unwrap();
        assert_eq!(gp_to_json(&phi), v);
        assert!(matches!(gp_from_json(&Krasner, &v), Err(Error::TractMismatch(..))));
        let unsorted = json!({"tract":{"kind":"krasner"},"n":2,"r":1,"values":{"1,0":"1"}});
        assert!(gp_from_json(&Krasner, &unsorted).is_err());
    }

    #[test]
    fn matrix_and_rep() {
        let f3 = PrimeField::new(3).unwrap();
        let v = json!({"field":{"kind":"gf","p":3},"rows":[["1","0","1"],["0","1","1"]]});
        let rows = matrix_from_json(&f3, &v).unwrap();
        assert_eq!(matrix_to_json(&f3, &rows), v);
        let phi = GpFunction::from_matrix(f3.clone(), &rows).unwrap();
        let rep = crate::rep::fundamental_rep(&phi);
        let back = rep_from_json(&f3, &rep_to_json(&rep)).unwrap();
        assert_eq!(back, rep);
    }
}
