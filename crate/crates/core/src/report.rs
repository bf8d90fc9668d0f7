//! JSON serialization of classification reports. All integers are rendered
//! as decimal strings and rationals as "p/q" so values survive any consumer's
//! number type untouched.

use serde_json::{json, Value};

use crate::arith::{rat_string, Int};
use crate::classify::{
    ClassificationReport, ConeDim, EtaEinstein, GkVerdict, Lichnerowicz, SeTableEntry,
};
use crate::link::LinkSign;

fn ints(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn sign_str(s: LinkSign) -> &'static str {
    match s {
        LinkSign::Positive => "positive",
        LinkSign::Null => "null",
        LinkSign::Negative => "negative",
    }
}

pub fn report_to_json(r: &ClassificationReport) -> Value {
    let homology = |h: &crate::seifert::HomologySummary| {
        json!({
            "b2": h.b2.to_string(),
            "torsion_invariant_factors": ints(h.torsion.invariant_factors()),
            "torsion": h.torsion.to_string_canonical(),
        })
    };
    json!({
        "descriptor": {
            "weights": ints(r.descriptor.weights()),
            "degree": r.descriptor.degree().to_string(),
            "index": r.index.index.to_string(),
            "sign": sign_str(r.index.sign),
        },
        "fractional_weights": {
            "u": ints(r.fractional.u()),
            "v": ints(r.fractional.v()),
        },
        "homology": {
            "b2": r.graph_route.b2.to_string(),
            "torsion_invariant_factors": ints(r.graph_route.torsion.invariant_factors()),
            "routes_agree": r.routes_agree,
            "graph_route": homology(&r.graph_route),
            "seifert_route": homology(&r.seifert_route),
        },
        "smale_name": r.smale.render(),
        "cone_dim": match r.cone_dim {
            ConeDim::ExactlyOne => "exactly_one",
            ConeDim::Undetermined => "undetermined",
        },
        "lichnerowicz": match r.lichnerowicz {
            Lichnerowicz::Obstructed => "obstructed",
            Lichnerowicz::Borderline => "borderline",
            Lichnerowicz::NotObstructed => "not_obstructed",
            Lichnerowicz::NotApplicable => "not_applicable",
        },
        "klt": r.klt.as_ref().map(|k| json!({
            "sum": rat_string(&k.sum),
            "lower": rat_string(&k.lower),
            "upper": rat_string(&k.upper),
            "verdict": k.verdict,
        })),
        "gk": r.gk.as_ref().map(|g| match g {
            GkVerdict::ExtremalYes => "extremal_yes",
            GkVerdict::ExtremalNo => "extremal_no",
            GkVerdict::NotApplicable => "not_applicable",
        }),
        "eta_einstein": match r.eta_einstein {
            EtaEinstein::ExistsByTransverseAubinYau => "exists_by_transverse_aubin_yau",
            EtaEinstein::Unknown => "unknown",
        },
        "se_table": match r.se_table {
            SeTableEntry::Yes => "yes",
            SeTableEntry::Open => "open",
            SeTableEntry::NotListed => "not_listed",
        },
        "torsion_allowed": r.torsion_allowed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_link;
    use crate::link::{from_bp, BPExponents};

    #[test]
    fn json_shape_and_string_integers() {
        let bp = BPExponents::new(vec![2.into(), 3.into(), 3.into(), 18.into()]).unwrap();
        let link = from_bp(&bp);
        let report = classify_link(&link, None, Some(&bp)).unwrap();
        let v = report_to_json(&report);
        assert_eq!(v["descriptor"]["degree"], "18");
        assert_eq!(v["descriptor"]["weights"][0], "9");
        assert_eq!(v["descriptor"]["sign"], "positive");
        assert!(v["homology"]["b2"].is_string());
        assert!(v["homology"]["routes_agree"].as_bool().unwrap());
        assert!(v["klt"].is_object());
        assert!(v["smale_name"].is_string());
    }
}
