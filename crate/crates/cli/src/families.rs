//! The `families` command: enumerate an integral family and confirm every
//! member.

use anyhow::{bail, Result};
use gpgraph_core::arith;
use gpgraph_core::families::{integrality_reasons, FamilyDescriptor};
use serde::Serialize;

#[derive(Debug, Clone, Default)]
pub struct FamilyArgs {
    pub kind: String,
    pub p: Option<u64>,
    pub k: Option<u64>,
    pub d: Option<u32>,
    /// Base field size for `tower`.
    pub base_q: Option<u64>,
    /// Inner family for `two-parameter`.
    pub inner: Option<String>,
}

pub const KINDS: [&str; 6] = [
    "subfield-divisor",
    "semiprimitive-divisor",
    "totient-power",
    "cyclotomic-value",
    "tower",
    "two-parameter",
];

pub fn descriptor(args: &FamilyArgs) -> Result<FamilyDescriptor> {
    let need_p = || args.p.ok_or_else(|| anyhow::anyhow!("--p is required for {}", args.kind));
    let need_k = || args.k.ok_or_else(|| anyhow::anyhow!("--k is required for {}", args.kind));
    Ok(match args.kind.as_str() {
        "subfield-divisor" => FamilyDescriptor::SubfieldDivisor { p: need_p()?, k: need_k()? },
        "semiprimitive-divisor" => FamilyDescriptor::SemiprimitiveDivisor { p: need_p()?, k: need_k()? },
        "totient-power" => FamilyDescriptor::TotientPower { p: need_p()?, k: need_k()? },
        "cyclotomic-value" => FamilyDescriptor::CyclotomicValue {
            p: need_p()?,
            d: args.d.ok_or_else(|| anyhow::anyhow!("--d is required for cyclotomic-value"))?,
        },
        "tower" => match (args.k, args.base_q) {
            (Some(k), Some(q)) => FamilyDescriptor::Tower { k, q },
            (None, None) => FamilyDescriptor::quadratic_tower(need_p()?),
            _ => bail!("tower takes both --k and --base-q, or only --p"),
        },
        "two-parameter" => {
            let inner = args.inner.clone().ok_or_else(|| anyhow::anyhow!("--inner is required"))?;
            let inner = descriptor(&FamilyArgs { kind: inner, ..args.clone() })?;
            FamilyDescriptor::TwoParameter(Box::new(inner))
        }
        other => bail!("unknown family kind {other:?}; expected one of {}", KINDS.join(", ")),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub k: u64,
    pub q: u64,
    pub integral: bool,
    pub criteria: Vec<String>,
}

pub fn members(family: &FamilyDescriptor, max_q: u64) -> Result<Vec<FamilyMember>> {
    family
        .enumerate(max_q)?
        .into_iter()
        .map(|(k, q)| {
            let (p, m) = arith::prime_power(q).expect("members live over fields");
            let reasons = integrality_reasons(p, m, k)?;
            Ok(FamilyMember {
                k,
                q,
                integral: !reasons.is_empty(),
                criteria: reasons.iter().map(ToString::to_string).collect(),
            })
        })
        .collect()
}

pub fn render_table(family: &FamilyDescriptor, members: &[FamilyMember]) -> String {
    let mut out = format!("family {}\n", family.name());
    for m in members {
        let verdict = if m.integral { "integral" } else { "NOT integral" };
        out += &format!("Γ({},{})  {verdict}  [{}]\n", m.k, m.q, m.criteria.join("; "));
    }
    out
}

pub fn render_records(members: &[FamilyMember]) -> String {
    members
        .iter()
        .map(|m| serde_json::to_string(m).expect("members serialize") + "\n")
        .collect()
}
