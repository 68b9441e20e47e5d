//! JSON records for each subcommand.

use serde_json::{json, Value};
use upkit_core::components::{block_structure, canonical_subgroup, char_group, in_canonical, CharFn};
use upkit_core::params::{ATable, LParam, WeakPacketRow};
use upkit_core::partition::{ClassPartition, Partition};
use upkit_core::pieces::{bvls_dual, is_special, piece_data, special_piece};
use upkit_core::springer::{
    gamma, green_tableaux, is_springer_type, p_set, springer_bipartition, standard_params, weakly_spherical,
    GreenTableau, SpringerIndexData,
};
use upkit_core::wreps::Bipartition;
use upkit_core::Result;

use crate::format::dual_name;

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn eps(e: &CharFn) -> Value {
    json!(e.subset())
}

pub fn table(t: &ATable) -> Value {
    let entries: Vec<Value> = t.entries().iter().map(|&(a, b)| json!({"a": a, "b": b})).collect();
    json!({"entries": entries, "z": t.z()})
}

pub fn lparam(phi: &LParam) -> Value {
    let v: Vec<Value> = phi.summands().iter().map(|s| json!({"z": phi.z, "j2": s.j2, "k": s.k})).collect();
    Value::Array(v)
}

pub fn bipartition(b: &Bipartition) -> Value {
    json!({"alpha": b.alpha.parts(), "beta": b.beta.parts()})
}

pub fn tableau(t: &GreenTableau) -> Value {
    json!({"rows": t.rows, "alpha": t.alpha.parts(), "beta": t.beta.parts()})
}

fn header(cp: &ClassPartition) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("dual".into(), json!(dual_name(cp.s())));
    m.insert("N".into(), json!(cp.gt().N()));
    m.insert("partition".into(), partition(cp.lambda()));
    m
}

pub fn class_line(cp: &ClassPartition) -> Value {
    let pd = piece_data(cp);
    json!({"partition": partition(cp.lambda()), "special": is_special(cp), "I": pd.i, "J": pd.j})
}

pub fn class_info(cp: &ClassPartition) -> Value {
    let pd = piece_data(cp);
    let blocks: Vec<Vec<u64>> = block_structure(cp).classes.into_iter().map(|b| b.members).collect();
    let dagger: Vec<Value> = canonical_subgroup(cp).iter().map(eps).collect();
    let spc: Vec<Value> =
        special_piece(cp).iter().map(|(j, mu)| json!({"J": j, "partition": partition(mu.lambda())})).collect();
    let d = bvls_dual(cp);
    let mut m = header(cp);
    m.insert("special".into(), json!(is_special(cp)));
    m.insert("S".into(), json!(cp.s_set()));
    m.insert("S0".into(), json!(cp.s0()));
    m.insert("blocks".into(), json!(blocks));
    m.insert("A0_size".into(), json!(char_group(cp).len()));
    m.insert("A_dagger".into(), Value::Array(dagger));
    m.insert("I".into(), json!(pd.i));
    m.insert("J".into(), json!(pd.j));
    m.insert("Spc".into(), Value::Array(spc));
    m.insert("d".into(), json!({"dual": dual_name(d.s()), "N": d.gt().N(), "partition": partition(d.lambda())}));
    Value::Object(m)
}

pub fn packet_row(r: &WeakPacketRow) -> Value {
    json!({
        "J": r.j,
        "mu": partition(&r.mu),
        "table": table(&r.table),
        "phi": lparam(&r.phi),
        "lpacket_size": r.lpacket_size,
    })
}

pub fn springer(cp: &ClassPartition, e: &CharFn) -> Result<Value> {
    let gp = cp.good_parity_part();
    let sd = SpringerIndexData::new(&gp, e)?;
    let mut m = header(cp);
    m.insert("eps".into(), eps(e));
    m.insert("good_parity_part".into(), partition(gp.lambda()));
    m.insert("springer_type".into(), json!(is_springer_type(&sd)));
    if is_springer_type(&sd) {
        let (d, t) = standard_params(&sd);
        let tabs = green_tableaux(&sd, d, t)?;
        let (p, raw) = p_set(&sd, d, t)?;
        m.insert("gamma".into(), json!(gamma(&sd)?));
        m.insert("bipartition".into(), bipartition(&springer_bipartition(&sd)?));
        m.insert("delta".into(), json!(d));
        m.insert("tau".into(), json!(t));
        m.insert("tableaux".into(), Value::Array(tabs.iter().map(tableau).collect()));
        m.insert("p_set".into(), Value::Array(p.iter().map(bipartition).collect()));
        m.insert("p_set_raw_count".into(), json!(raw));
    }
    m.insert("weakly_spherical".into(), json!(weakly_spherical(&sd)?));
    Ok(Value::Object(m))
}

pub fn sphericity(cp: &ClassPartition, e: &CharFn, spherical: bool) -> Value {
    let mut m = header(cp);
    m.insert("eps".into(), eps(e));
    m.insert("sign_string".into(), json!(e.sign_string(cp)));
    m.insert("canonical".into(), json!(in_canonical(cp, e)));
    m.insert("weakly_spherical".into(), json!(spherical));
    Value::Object(m)
}
