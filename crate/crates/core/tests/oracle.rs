use twist53_core::arith::{rat, Rational, Ring};
use twist53_core::modular::ModularData;
use twist53_core::oracle::{
    check_with, newform_series, owning_identity, verify_identities, Identity, Newform, OracleSeries,
};

// Coefficients a_1..a_17 as displayed for the two newforms.
const F1_DISPLAY: [i64; 17] = [1, -1, -1, -1, 1, 1, 0, 3, 1, -1, -4, 1, -2, 0, -1, -1, 2];
const F2_DISPLAY: [i64; 17] = [1, 1, 0, -1, -1, 0, 0, -3, 0, -1, 4, 0, -2, 0, 0, -1, -2];

#[test]
fn newform_prefixes_match_display() {
    let md = ModularData::builtin();
    let f1 = newform_series(&md, Newform::F1, 18).unwrap();
    let f2 = newform_series(&md, Newform::F2, 18).unwrap();
    assert_eq!(&f1.coeffs[1..], &F1_DISPLAY);
    assert_eq!(&f2.coeffs[1..], &F2_DISPLAY);
}

#[test]
fn identities_hold_at_40_and_60() {
    let md = ModularData::builtin();
    for n in [40, 60] {
        for r in verify_identities(&md, &Identity::ALL, n).unwrap() {
            assert!(r.pass, "{r:?}");
            assert!(r.achieved >= n);
        }
    }
}

fn bump(q: &Rational) -> Rational {
    if q.is_zero_elem() {
        rat(1)
    } else {
        q * rat(2)
    }
}

#[test]
fn every_constant_is_guarded() {
    let stock = ModularData::builtin();
    let n = 40;
    let base = OracleSeries::compute(&stock, n + twist53_core::oracle::identities::DEFAULT_MARGIN).unwrap();
    let names: Vec<String> = stock.names().map(String::from).collect();
    for name in names {
        let mut md = stock.clone();
        md.set(&name, bump(&stock.c(&name))).unwrap();
        let id = owning_identity(&name);
        let needs_series = name.starts_with("X015") || name.starts_with("f1.");
        let report = if needs_series {
            verify_identities(&md, &[id], n).unwrap().remove(0)
        } else {
            check_with(&base, &md, id, n)
        };
        assert!(!report.pass, "corrupting {name} went unnoticed by {}", id.name());
    }
}
