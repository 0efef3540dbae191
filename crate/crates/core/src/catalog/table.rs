//! The eighteen series representations of F₂.
//!
//! Component notation follows the Kampé de Fériet layout
//! `[(m+n) : m ; n / (m+n) : m ; n]`, with the first group read as (m−n)
//! for mirror series.

use super::args::ArgExpr::{self, *};
use super::{Component, Representation, RocAtom, SeriesKind};
use crate::params::combo;
use crate::series::DoubleSeriesSpec;

fn list(v: &[&str]) -> Vec<crate::params::ParamCombo> {
    v.iter().map(|s| combo(s)).collect()
}

fn f2(a: &str, b1: &str, b2: &str, c1: &str, c2: &str) -> (SeriesKind, DoubleSeriesSpec) {
    (
        SeriesKind::AppellF2,
        DoubleSeriesSpec {
            upper_plus: list(&[a]),
            upper_m: list(&[b1]),
            upper_n: list(&[b2]),
            lower_m: list(&[c1]),
            lower_n: list(&[c2]),
            ..Default::default()
        },
    )
}

fn kdf(
    plus: &[&str],
    m: &[&str],
    n: &[&str],
    lplus: &[&str],
    lm: &[&str],
    ln: &[&str],
) -> (SeriesKind, DoubleSeriesSpec) {
    (
        SeriesKind::KampeDeFeriet,
        DoubleSeriesSpec {
            upper_plus: list(plus),
            upper_m: list(m),
            upper_n: list(n),
            lower_plus: list(lplus),
            lower_m: list(lm),
            lower_n: list(ln),
            ..Default::default()
        },
    )
}

fn mirror(
    minus: &[&str],
    m: &[&str],
    n: &[&str],
    lminus: &[&str],
    lm: &[&str],
    ln: &[&str],
) -> (SeriesKind, DoubleSeriesSpec) {
    (
        SeriesKind::Mirror,
        DoubleSeriesSpec {
            upper_minus: list(minus),
            upper_m: list(m),
            upper_n: list(n),
            lower_minus: list(lminus),
            lower_m: list(lm),
            lower_n: list(ln),
            ..Default::default()
        },
    )
}

/// Horn H₂(α, β, γ, δ; ε) = Σ (α)_{m−n}(β)_m(γ)_n(δ)_n / ((ε)_m m! n!) X^m Y^n.
fn h2(alpha: &str, beta: &str, gamma: &str, delta: &str, eps: &str) -> (SeriesKind, DoubleSeriesSpec) {
    (
        SeriesKind::HornH2,
        DoubleSeriesSpec {
            upper_minus: list(&[alpha]),
            upper_m: list(&[beta]),
            upper_n: list(&[gamma, delta]),
            lower_m: list(&[eps]),
            ..Default::default()
        },
    )
}

fn comp(
    num: &[&str],
    den: &[&str],
    pre: &[(ArgExpr, &str)],
    series: (SeriesKind, DoubleSeriesSpec),
    args: (ArgExpr, ArgExpr),
) -> Component {
    Component {
        gamma_num: list(num),
        gamma_den: list(den),
        prefactors: pre.iter().map(|(b, e)| super::Prefactor::new(*b, combo(e))).collect(),
        kind: series.0,
        series: series.1,
        args,
    }
}

fn rep(index: u8, package: u32, roc: Vec<RocAtom>, components: Vec<Component>) -> Representation {
    Representation { index, package, roc, components }
}

use RocAtom::{AbsGt1, AbsLt1, OnePlusAbsTimesAbsLt1, SumAbsLt1};

pub(super) fn build() -> Vec<Representation> {
    vec![
        rep(1, 1, vec![SumAbsLt1(X, Y)], vec![comp(
            &[], &[], &[],
            f2("a", "b1", "b2", "c1", "c2"), (X, Y),
        )]),
        rep(2, 23, vec![SumAbsLt1(XOverOneMinusY, YOverYMinus1)], vec![comp(
            &[], &[], &[(OneMinusY, "-a")],
            f2("a", "b1", "c2-b2", "c1", "c2"), (XOverOneMinusY, YOverYMinus1),
        )]),
        rep(3, 34, vec![SumAbsLt1(XOverS, YOverS)], vec![comp(
            &[], &[], &[(OneMinusXMinusY, "-a")],
            f2("a", "c1-b1", "c2-b2", "c1", "c2"), (XOverS, YOverS),
        )]),
        rep(4, 14, vec![AbsGt1(OneMinusX), AbsLt1(Y)], vec![
            comp(
                &["c1", "a-b1"], &["a", "c1-b1"],
                &[(OneMinusX, "-a"), (InvOneMinusX, "-a+b1")],
                mirror(&["c1-a"], &["b1"], &["b2", "a-c1+1"], &["b1-a+1"], &[], &["c2"]),
                (InvOneMinusX, Y),
            ),
            comp(
                &["c1", "b1-a"], &["b1", "c1-a"], &[(OneMinusX, "-a")],
                kdf(&["a"], &["c1-b1"], &["b2", "a-c1+1"], &["a-b1+1"], &[], &["c2"]),
                (InvOneMinusX, YOverOneMinusX),
            ),
        ]),
        rep(5, 25, vec![AbsLt1(YOverS), AbsLt1(SOverYMinus1)], vec![
            comp(
                &["c1", "c1-a-b1"], &["c1-a", "c1-b1"], &[(OneMinusY, "-a")],
                kdf(&["a"], &["b1"], &["c2-b2", "a-c1+1"], &["a+b1-c1+1"], &[], &["c2"]),
                (SOverYMinus1, YOverYMinus1),
            ),
            comp(
                &["c1", "a+b1-c1"], &["a", "b1"],
                &[(OneMinusY, "-a"), (SOverYMinus1, "-a-b1+c1")],
                mirror(&["c1-a"], &["c1-b1"], &["c2-b2", "a-c1+1"], &["-a-b1+c1+1"], &[], &["c2"]),
                (SOverYMinus1, YOverS),
            ),
        ]),
        rep(6, 4, vec![AbsLt1(OneMinusYOverX), AbsLt1(X)], vec![
            comp(
                &["c2", "c2-a-b2"], &["c2-a", "c2-b2"], &[],
                kdf(&["a"], &["a-c2+1", "b1"], &["b2"], &["a+b2-c2+1"], &["c1"], &[]),
                (X, OneMinusY),
            ),
            comp(
                &["c1", "c2", "a+b2-c2", "-a+b1-b2+c2"], &["a", "b1", "b2", "c1+c2-a-b2"],
                &[(OneMinusY, "-a-b2+c2"), (XOverYMinus1, "-a-b2+c2")],
                mirror(&["a+b2-c2", "a+b2-c2-c1+1"], &["b2"], &["c2-b2"], &["b2", "a-b1+b2-c2+1"], &[], &[]),
                (OneMinusYOverX, X),
            ),
            comp(
                &["c1", "c2", "a-b1+b2-c2"], &["a", "b2", "c1-b1"],
                &[(XOverYMinus1, "-b1"), (OneMinusY, "-a-b2+c2")],
                kdf(&["-a+b1+c2"], &["b1", "b1-c1+1"], &["c2-b2"], &["-a+b1-b2+c2+1"], &["-a+b1+c2"], &[]),
                (OneMinusYOverX, OneMinusY),
            ),
        ]),
        rep(7, 15, vec![AbsLt1(SOverX), AbsLt1(XOverXMinus1)], vec![
            comp(
                &["c2", "c2-a-b2"], &["c2-a", "c2-b2"], &[(OneMinusX, "-a")],
                kdf(&["a"], &["a-c2+1", "c1-b1"], &["b2"], &["a+b2-c2+1"], &["c1"], &[]),
                (XOverXMinus1, SOverXMinus1),
            ),
            comp(
                &["c1", "c2", "a+b2-c2", "c1+c2-a-b1-b2"], &["a", "b2", "c1-b1", "c1+c2-a-b2"],
                &[(OneMinusX, "-a"), (NegXOverS, "-a-b2+c2"), (SOverXMinus1, "-a-b2+c2")],
                mirror(&["a+b2-c2", "a+b2-c1-c2+1"], &["b2"], &["c2-b2"], &["a+b1+b2-c1-c2+1", "b2"], &[], &[]),
                (SOverX, XOverXMinus1),
            ),
            comp(
                &["c1", "c2", "a+b1+b2-c1-c2"], &["a", "b1", "b2"],
                &[(OneMinusX, "-a"), (SOverXMinus1, "-a-b2+c2"), (NegXOverS, "b1-c1")],
                kdf(&["c1+c2-a-b1"], &["1-b1", "c1-b1"], &["c2-b2"], &["c1+c2-a-b1-b2+1"], &["c1+c2-a-b1"], &[]),
                (SOverX, SOverXMinus1),
            ),
        ]),
        rep(8, 37, vec![AbsLt1(XMinus1OverX), AbsLt1(XOverS)], vec![
            comp(
                &["c1", "c2", "a-b2", "-a-b1+b2+c1"], &["a", "c1-b1", "c2-b2", "-a+b2+c1"],
                &[(OneMinusXMinusY, "-a"), (NegXOverXMinus1, "b2-a"), (XMinus1OverS, "b2-a")],
                mirror(&["a-b2", "a-b2-c1+1"], &["c2-b2"], &["b2"], &["c2-b2", "a+b1-b2-c1+1"], &[], &[]),
                (XMinus1OverX, XOverS),
            ),
            comp(
                &["c2", "b2-a"], &["b2", "c2-a"], &[(OneMinusXMinusY, "-a")],
                kdf(&["a"], &["a-c2+1", "c1-b1"], &["c2-b2"], &["a-b2+1"], &["c1"], &[]),
                (XOverS, XMinus1OverS),
            ),
            comp(
                &["c1", "c2", "a+b1-b2-c1"], &["a", "b1", "c2-b2"],
                &[(OneMinusXMinusY, "-a"), (NegXOverXMinus1, "b1-c1"), (XMinus1OverS, "b2-a")],
                kdf(&["c1+c2-a-b1"], &["1-b1", "c1-b1"], &["b2"], &["-a-b1+b2+c1+1"], &["c1+c2-a-b1"], &[]),
                (XMinus1OverX, XMinus1OverS),
            ),
        ]),
        rep(9, 5, vec![AbsLt1(OneMinusXOverY), AbsLt1(Y)], vec![
            comp(
                &["c1", "c2", "a+b1-b2-c1"], &["a", "b1", "c2-b2"],
                &[(OneMinusX, "c1-a-b1"), (YOverXMinus1, "-b2")],
                kdf(&["-a+b2+c1"], &["c1-b1"], &["b2", "b2-c2+1"], &["-a-b1+b2+c1+1"], &[], &["-a+b2+c1"]),
                (OneMinusX, OneMinusXOverY),
            ),
            comp(
                &["c1", "c2", "a+b1-c1", "-a-b1+b2+c1"], &["a", "b1", "b2", "c1+c2-a-b1"],
                &[(OneMinusX, "c1-a-b1"), (YOverXMinus1, "c1-a-b1")],
                mirror(&["1-b1", "-a-b1+b2+c1"], &["c1-b1"], &["b1"], &["-a-b1+c1+1", "c1+c2-a-b1"], &[], &[]),
                (Y, OneMinusXOverY),
            ),
            comp(
                &["c1", "c1-a-b1"], &["c1-a", "c1-b1"], &[],
                kdf(&["a"], &["b1"], &["b2", "a-c1+1"], &["a+b1-c1+1"], &[], &["c2"]),
                (OneMinusX, Y),
            ),
        ]),
        rep(10, 27, vec![AbsLt1(SOverY), AbsLt1(YOverYMinus1)], vec![
            comp(
                &["c1", "c2", "a+b1-c1", "c1+c2-a-b1-b2"], &["a", "b1", "c2-b2", "c1+c2-a-b1"],
                &[(OneMinusY, "-a"), (NegYOverS, "c1-a-b1"), (SOverYMinus1, "c1-a-b1")],
                mirror(&["1-b1", "c1+c2-a-b1-b2"], &["c1-b1"], &["b1"], &["-a-b1+c1+1", "c1+c2-a-b1"], &[], &[]),
                (YOverYMinus1, SOverY),
            ),
            comp(
                &["c1", "c1-a-b1"], &["c1-a", "c1-b1"], &[(OneMinusY, "-a")],
                kdf(&["a"], &["b1"], &["a-c1+1", "c2-b2"], &["a+b1-c1+1"], &[], &["c2"]),
                (SOverYMinus1, YOverYMinus1),
            ),
            comp(
                &["c1", "c2", "a+b1+b2-c1-c2"], &["a", "b1", "b2"],
                &[(OneMinusY, "-a"), (SOverYMinus1, "c1-a-b1"), (NegYOverS, "b2-c2")],
                kdf(&["c1+c2-a-b2"], &["c1-b1"], &["1-b2", "c2-b2"], &["c1+c2-a-b1-b2+1"], &[], &["c1+c2-a-b2"]),
                (SOverYMinus1, SOverY),
            ),
        ]),
        rep(11, 38, vec![AbsLt1(YMinus1OverY), AbsLt1(YOverS)], vec![
            comp(
                &["c1", "c2", "a-b1", "-a+b1-b2+c2"], &["a", "c1-b1", "c2-b2", "-a+b1+c2"],
                &[(OneMinusXMinusY, "-a"), (NegYOverYMinus1, "b1-a"), (YMinus1OverS, "b1-a")],
                mirror(&["b1-c1+1", "-a+b1-b2+c2"], &["b1"], &["c1-b1"], &["-a+b1+1", "-a+b1+c2"], &[], &[]),
                (YOverS, YMinus1OverY),
            ),
            comp(
                &["c1", "b1-a"], &["b1", "c1-a"], &[(OneMinusXMinusY, "-a")],
                kdf(&["a"], &["c1-b1"], &["a-c1+1", "c2-b2"], &["a-b1+1"], &[], &["c2"]),
                (YMinus1OverS, YOverS),
            ),
            comp(
                &["c1", "c2", "a-b1+b2-c2"], &["a", "b2", "c1-b1"],
                &[(OneMinusXMinusY, "-a"), (NegYOverYMinus1, "b2-c2"), (YMinus1OverS, "b1-a")],
                kdf(&["c1+c2-a-b2"], &["b1"], &["1-b2", "c2-b2"], &["-a+b1-b2+c2+1"], &[], &["c1+c2-a-b2"]),
                (YMinus1OverS, YMinus1OverY),
            ),
        ]),
        rep(12, 6, vec![AbsLt1(InvX), AbsLt1(OneMinusY)], vec![
            comp(
                &["c1", "b1-a"], &["b1", "c1-a"], &[(NegX, "-a")],
                kdf(&["a", "a-c1+1"], &["c2-b2"], &["b2"], &["c2", "a-b1+1"], &[], &[]),
                (InvX, OneMinusYOverX),
            ),
            comp(
                &["c1", "c2", "a-b1", "-a+b1-b2+c2"], &["a", "c1-b1", "c2-b2", "-a+b1+c2"],
                &[(NegX, "-b1")],
                mirror(&["-a+b1-b2+c2"], &["b1", "b1-c1+1"], &["b2"], &["-a+b1+1"], &["-a+b1+c2"], &[]),
                (InvX, OneMinusY),
            ),
            comp(
                &["c1", "c2", "a-b1+b2-c2"], &["a", "b2", "c1-b1"],
                &[(NegX, "-b1"), (OneMinusY, "-a+b1-b2+c2")],
                kdf(&["-a+b1+c2"], &["b1", "b1-c1+1"], &["c2-b2"], &["-a+b1-b2+c2+1"], &["-a+b1+c2"], &[]),
                (OneMinusYOverX, OneMinusY),
            ),
        ]),
        rep(13, 17, vec![AbsLt1(XMinus1OverX), AbsLt1(SOverXMinus1)], vec![
            comp(
                &["c1", "c1-a-b1"], &["c1-a", "c1-b1"],
                &[(OneMinusX, "-a"), (NegXOverXMinus1, "-a")],
                kdf(&["a", "a-c1+1"], &["c2-b2"], &["b2"], &["c2", "a+b1-c1+1"], &[], &[]),
                (XMinus1OverX, SOverX),
            ),
            comp(
                &["c1", "c2", "a+b1-c1", "c1+c2-a-b1-b2"], &["a", "b1", "c2-b2", "c1+c2-a-b1"],
                &[(OneMinusX, "-a"), (NegXOverXMinus1, "b1-c1")],
                mirror(&["c1+c2-a-b1-b2"], &["1-b1", "c1-b1"], &["b2"], &["-a-b1+c1+1"], &["c1+c2-a-b1"], &[]),
                (XMinus1OverX, SOverXMinus1),
            ),
            comp(
                &["c1", "c2", "a+b1+b2-c1-c2"], &["a", "b1", "b2"],
                &[(OneMinusX, "-a"), (NegXOverXMinus1, "b1-c1"), (SOverXMinus1, "c1+c2-a-b1-b2")],
                kdf(&["c1+c2-a-b1"], &["1-b1", "c1-b1"], &["c2-b2"], &["c1+c2-a-b1-b2+1"], &["c1+c2-a-b1"], &[]),
                (SOverX, SOverXMinus1),
            ),
        ]),
        rep(14, 7, vec![AbsLt1(OneMinusX), AbsGt1(Y)], vec![
            comp(
                &["c2", "b2-a"], &["b2", "c2-a"], &[(NegY, "-a")],
                kdf(&["a", "a-c2+1"], &["b1"], &["c1-b1"], &["c1", "a-b2+1"], &[], &[]),
                (OneMinusXOverY, InvY),
            ),
            comp(
                &["c1", "c2", "a-b2", "-a-b1+b2+c1"], &["a", "c1-b1", "c2-b2", "-a+b2+c1"],
                &[(NegY, "-b2")],
                mirror(&["a-b2"], &["b1"], &["b2", "b2-c2+1"], &["a+b1-b2-c1+1"], &[], &["-a+b2+c1"]),
                (OneMinusX, InvY),
            ),
            comp(
                &["c1", "c2", "a+b1-b2-c1"], &["a", "b1", "c2-b2"],
                &[(NegY, "-b2"), (OneMinusX, "-a-b1+b2+c1")],
                kdf(&["-a+b2+c1"], &["c1-b1"], &["b2", "b2-c2+1"], &["-a-b1+b2+c1+1"], &[], &["-a+b2+c1"]),
                (OneMinusX, OneMinusXOverY),
            ),
        ]),
        rep(15, 29, vec![AbsLt1(YMinus1OverY), AbsLt1(SOverYMinus1)], vec![
            comp(
                &["c2", "c2-a-b2"], &["c2-a", "c2-b2"],
                &[(OneMinusY, "-a"), (NegYOverYMinus1, "-a")],
                kdf(&["a", "a-c2+1"], &["b1"], &["c1-b1"], &["c1", "a+b2-c2+1"], &[], &[]),
                (SOverY, YMinus1OverY),
            ),
            comp(
                &["c1", "c2", "a+b2-c2", "c1+c2-a-b1-b2"], &["a", "b2", "c1-b1", "c1+c2-a-b2"],
                &[(OneMinusY, "-a"), (NegYOverYMinus1, "b2-c2")],
                mirror(&["a+b2-c2"], &["b1"], &["1-b2", "c2-b2"], &["a+b1+b2-c1-c2+1"], &[], &["c1+c2-a-b2"]),
                (SOverYMinus1, YMinus1OverY),
            ),
            comp(
                &["c1", "c2", "a+b1+b2-c1-c2"], &["a", "b1", "b2"],
                &[(OneMinusY, "-a"), (NegYOverYMinus1, "b2-c2"), (YMinus1OverS, "a+b1+b2-c1-c2")],
                kdf(&["c1+c2-a-b2"], &["c1-b1"], &["1-b2", "c2-b2"], &["c1+c2-a-b1-b2+1"], &[], &["c1+c2-a-b2"]),
                (SOverYMinus1, SOverY),
            ),
        ]),
        rep(16, 40, vec![AbsLt1(SOverY), AbsLt1(YMinus1OverS)], vec![
            comp(
                &["c2", "c2-a-b2"], &["c2-a", "c2-b2"],
                &[(OneMinusXMinusY, "-a"), (NegYOverS, "-a")],
                kdf(&["a", "a-c2+1"], &["c1-b1"], &["b1"], &["c1", "a+b2-c2+1"], &[], &[]),
                (YMinus1OverY, SOverY),
            ),
            comp(
                &["c1", "c2", "a+b2-c2", "-a+b1-b2+c2"], &["a", "b1", "b2", "c1+c2-a-b2"],
                &[(OneMinusXMinusY, "-a"), (NegYOverS, "b2-c2")],
                mirror(&["a+b2-c2"], &["c1-b1"], &["1-b2", "c2-b2"], &["a-b1+b2-c2+1"], &[], &["c1+c2-a-b2"]),
                (YMinus1OverS, SOverY),
            ),
            comp(
                &["c1", "c2", "a-b1+b2-c2"], &["a", "b2", "c1-b1"],
                &[(OneMinusXMinusY, "-a"), (NegYOverS, "b2-c2"), (YMinus1OverS, "-a+b1-b2+c2")],
                kdf(&["c1+c2-a-b2"], &["b1"], &["1-b2", "c2-b2"], &["-a+b1-b2+c2+1"], &[], &["c1+c2-a-b2"]),
                (YMinus1OverS, YMinus1OverY),
            ),
        ]),
        rep(17, 8, vec![AbsLt1(X), AbsLt1(NegInvY), OnePlusAbsTimesAbsLt1(X, NegInvY)], vec![
            comp(
                &["c2", "b2-a"], &["b2", "c2-a"], &[(NegY, "-a")],
                kdf(&["a", "a-c2+1"], &["b1"], &[], &["a-b2+1"], &["c1"], &[]),
                (NegXOverY, InvY),
            ),
            comp(
                &["c2", "a-b2"], &["a", "c2-b2"], &[(NegY, "-b2")],
                h2("a-b2", "b1", "b2", "b2-c2+1", "c1"),
                (X, NegInvY),
            ),
        ]),
        rep(18, 9, vec![AbsLt1(Y), AbsLt1(InvX), OnePlusAbsTimesAbsLt1(Y, NegInvX)], vec![
            comp(
                &["c1", "b1-a"], &["b1", "c1-a"], &[(NegX, "-a")],
                kdf(&["a", "a-c1+1"], &["b2"], &[], &["a-b1+1"], &["c2"], &[]),
                (NegYOverX, InvX),
            ),
            comp(
                &["c1", "a-b1"], &["a", "c1-b1"], &[(NegX, "-b1")],
                h2("a-b1", "b2", "b1", "b1-c1+1", "c2"),
                (Y, NegInvX),
            ),
        ]),
    ]
}
