from fractions import Fraction as F

import pytest

from ordfield.certs import (
    ConstRule,
    LinearCapRule,
    QStepProbe,
    QXStepProbe,
    TwoSided,
    parse_rule,
    parse_witness,
)
from ordfield.claims import (
    FalsifierCert,
    LimitClaim,
    VerifierCert,
    check_falsifier,
    check_verifier,
    default_eps_schedule,
)
from ordfield.errors import ParseError
from ordfield.fields import Field
from ordfield.functions import Quotient, Identity, StepQ
from ordfield.laurent import RF_ONE, RF_X
from ordfield.literals import parse_elem
from ordfield.transcript import (
    Transcript,
    kv_line,
    parse_claim_file,
    parse_kv_line,
)


def test_kv_line_roundtrip():
    line = kv_line("check", [("claim", 1), ("eps", F(1, 2)), ("verdict", True)])
    kind, kv = parse_kv_line(line)
    assert kind == "check"
    assert kv == {"claim": "1", "eps": "1/2", "verdict": "pass"}


def test_kv_line_note_last():
    line = kv_line("cert", [("claim", 2), ("note", "has spaces here")])
    kind, kv = parse_kv_line(line)
    assert kv["note"] == "has spaces here"
    with pytest.raises(ValueError):
        kv_line("cert", [("note", "early"), ("claim", 2)])
    with pytest.raises(ValueError):
        kv_line("cert", [("w", "a space")])


def test_rule_render_parse_roundtrip():
    pv = lambda s: parse_elem(Field.Q, s)
    for rule in (ConstRule(F(1, 4)), LinearCapRule(F(1), F(1, 2))):
        assert parse_rule(rule.render(), pv) == rule
    pvx = lambda s: parse_elem(Field.QX, s)
    assert parse_rule(LinearCapRule(RF_ONE, RF_X).render(), pvx) == LinearCapRule(
        RF_ONE, RF_X
    )


def test_witness_render_parse_roundtrip():
    pv = lambda s: parse_elem(Field.Q, s)
    for w in (
        QStepProbe(F(5, 7)),
        TwoSided(QStepProbe(F(5, 7)), QStepProbe(F(-5, 7)), F(0)),
    ):
        assert parse_witness(w.render(), pv) == w
    pvx = lambda s: parse_elem(Field.QX, s)
    wx = QXStepProbe(RF_ONE, -1)
    assert parse_witness(wx.render(), pvx) == wx


def test_transcript_claim_ids_deduplicate():
    tr = Transcript()
    claim = LimitClaim(StepQ(), F(0), F(0))
    assert tr.claim_id(claim) == 1
    assert tr.claim_id(claim) == 1
    other = LimitClaim(StepQ(), F(1), F(1))
    assert tr.claim_id(other) == 2
    assert sum(1 for ln in tr.lines if ln.startswith("claim ")) == 2


def test_transcript_report_lines_recompute():
    tr = Transcript()
    cert = VerifierCert(
        LimitClaim(StepQ(), F(0), F(0)), LinearCapRule(F(1), F(1, 2)), "env"
    )
    rep = check_verifier(cert, default_eps_schedule(Field.Q, 4), 0)
    tr.add_report(rep)
    checks = [ln for ln in tr.lines if ln.startswith("check ")]
    assert len(checks) == len(rep.records)
    # recompute one verdict from the serialized exact values
    kind, kv = parse_kv_line(checks[0])
    eps = parse_elem(Field.Q, kv["eps"])
    delta = parse_elem(Field.Q, kv["delta"])
    w = parse_elem(Field.Q, kv["w"])
    fw = parse_elem(Field.Q, kv["fw"])
    dist = parse_elem(Field.Q, kv["dist"])
    sep = parse_elem(Field.Q, kv["sep"])
    assert dist == abs(fw - F(0)) and sep == abs(w - F(0))
    assert (kv["verdict"] == "pass") == (0 < sep < delta and dist < eps)


def test_parse_claim_file_verifier_and_falsifier():
    text = """
# comment line
claim field=q fn=quotient(step_q,identity) point=0 candidate=0
cert kind=falsifier eps=1/2 witness=qstep(5/7)
cert kind=verifier rule=linear_cap(1,1/2) note=wrong on purpose
schedule kind=delta depth=8
schedule kind=eps values=1,1/2,1/4
"""
    cf = parse_claim_file(text)
    assert len(cf.certs) == 2
    fals, ver = cf.certs
    assert isinstance(fals, FalsifierCert)
    assert fals.claim.fn == Quotient(StepQ(), Identity(Field.Q))
    assert fals.epsilon == F(1, 2)
    assert cf.delta_depth == 8
    assert cf.eps_values == [F(1), F(1, 2), F(1, 4)]
    assert isinstance(ver, VerifierCert) and ver.note == "wrong on purpose"


def test_parse_claim_file_errors():
    with pytest.raises(ParseError):
        parse_claim_file("cert kind=falsifier eps=1/2 witness=qstep(5/7)\n")
    with pytest.raises(ParseError):
        parse_claim_file("claim field=q fn=nosuch point=0 candidate=0\n")
    with pytest.raises(ParseError):
        parse_claim_file("claim field=zz fn=step_q point=0 candidate=0\n")
    with pytest.raises(ParseError):
        parse_claim_file("")


def test_falsifier_transcript_has_witness_line():
    tr = Transcript()
    cert = FalsifierCert(
        LimitClaim(Quotient(StepQ(), Identity(Field.Q)), F(0), F(0)),
        F(1, 2),
        QStepProbe(F(5, 7)),
    )
    rep = check_falsifier(cert, [F(1, 4)])
    tr.add_report(rep)
    text = tr.render()
    assert "witness=qstep(5/7)" in text
    assert "tag=refutation-instances" in text
