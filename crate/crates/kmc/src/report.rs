//! Trace output: the fixed JSON schema and a plain-text table.

use std::fmt::Write as _;

use serde::Serialize;

use kmc_core::khm::{self, ConstructionTrace};

#[derive(Debug, Serialize)]
pub struct TraceJson {
    pub group: String,
    pub subgroup: String,
    pub word: String,
    pub mode: String,
    pub steps: Vec<StepJson>,
    #[serde(rename = "H")]
    pub h: SubgroupJson,
    pub bound: f64,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct StepJson {
    pub i: usize,
    #[serde(rename = "orderG_i")]
    pub order_g: usize,
    #[serde(rename = "orderN_i")]
    pub order_n: usize,
    pub p_i: usize,
    pub l_i: f64,
}

#[derive(Debug, Serialize)]
pub struct SubgroupJson {
    pub order: usize,
    pub generators: Vec<String>,
}

impl TraceJson {
    pub fn new(group: &str, subgroup: &str, trace: &ConstructionTrace) -> TraceJson {
        TraceJson {
            group: group.to_string(),
            subgroup: subgroup.to_string(),
            word: trace.word.render(),
            mode: trace.mode.name().to_string(),
            steps: trace
                .steps
                .iter()
                .map(|s| StepJson {
                    i: s.index,
                    order_g: s.g.order(),
                    order_n: s.n.order(),
                    p_i: s.p,
                    l_i: s.l,
                })
                .collect(),
            h: SubgroupJson {
                order: trace.h.order(),
                generators: trace.h.generators().iter().map(|g| g.to_string()).collect(),
            },
            bound: trace.bound,
            holds: trace.holds,
        }
    }
}

pub fn json(group: &str, subgroup: &str, trace: &ConstructionTrace) -> String {
    let mut out = serde_json::to_string_pretty(&TraceJson::new(group, subgroup, trace))
        .expect("trace serializes");
    out.push('\n');
    out
}

pub fn text(group: &str, subgroup: &str, trace: &ConstructionTrace) -> String {
    let g = &trace.group;
    let index_n = g.order() / trace.subgroup.order();
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("group      {group} (order {}, degree {})", g.order(), g.degree()));
    line(format!("subgroup   {subgroup} (order {}, index {index_n})", trace.subgroup.order()));
    if let Some(core) = &trace.core {
        line(format!(
            "normal core used in place of the subgroup: order {}, index {}",
            core.order(),
            g.order() / core.order()
        ));
    }
    line(format!("word       {} (weight {})", trace.word, trace.word.weight()));
    line(format!("mode       {}", trace.mode.name()));
    line(format!("l0         {:.6}", trace.l0));
    line(format!("{:<6}{:>8}{:>8}{:>6}{:>12}", "step", "|G_i|", "|N_i|", "p_i", "l_i"));
    for s in &trace.steps {
        line(format!(
            "{:<6}{:>8}{:>8}{:>6}{:>12.6}",
            s.index,
            s.g.order(),
            s.n.order(),
            s.p,
            s.l
        ));
    }
    let gens: Vec<String> = trace.h.generators().iter().map(|x| x.to_string()).collect();
    line(format!(
        "H          order {}, index {}, generators {}",
        trace.h.order(),
        trace.index_h(),
        if gens.is_empty() { "none".to_string() } else { gens.join(", ") }
    ));
    let lhs = trace.log2_index_h();
    line(format!("log2|G:H|  {lhs:.6}"));
    line(format!("bound      {:.6}", trace.bound));
    let tight = (lhs - trace.bound).abs() <= khm::BOUND_TOLERANCE * trace.bound.max(1.0);
    let mut verdict = String::from(if trace.holds { "holds" } else { "VIOLATED" });
    if trace.holds && tight {
        write!(verdict, " (tight: log2|G:H| equals the bound)").expect("string write");
    }
    line(format!("result     {verdict}"));
    out
}
