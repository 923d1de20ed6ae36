"""Line-delimited transcript records and the claim-file format.

One exact check per line, every number in exact textual form, no
timestamps anywhere: identical invocations produce byte-identical
transcripts, and every verdict can be recomputed from its own line plus
the claim line it references.  The same record syntax is used for claim
files fed to `ordfield claim`.

Record kinds:

    header  tool/version/demo and the schedule parameters
    claim   id, field, fn, point, candidate
    cert    claim, kind (verifier|falsifier), rule/eps+witness, note
    check   one referee check (eps, delta, w, fw, dist, sep, verdict)
    report  per-certificate outcome and epistemic tag
    value   a plain exact evaluation (used by demos)
    bound   an exact squaring justification for a radius
    mvt     the mean-value gap record
    summary final verdict and exit status
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .certs import parse_rule, parse_witness
from .claims import (
    CheckRecord,
    FalsifierCert,
    LimitClaim,
    RefereeReport,
    VerifierCert,
)
from .errors import ParseError
from .fields import Field, render_elem
from .functions import fn_name, parse_fn
from .literals import parse_elem

TOOL = "ordfield"
VERSION = "0.1.0"


def _fmt(v) -> str:
    if v is None:
        return "undef"
    if isinstance(v, bool):
        return "pass" if v else "fail"
    if isinstance(v, (int, str)):
        return str(v)
    if isinstance(v, Field):
        return v.value
    return render_elem(v)


def kv_line(kind: str, pairs: list[tuple[str, object]]) -> str:
    """Render one record; a `note` value may contain spaces and must come
    last."""
    parts = [kind]
    for i, (k, v) in enumerate(pairs):
        s = _fmt(v)
        if k == "note":
            if i != len(pairs) - 1:
                raise ValueError("note must be the last field")
        elif " " in s:
            raise ValueError(f"record value for {k} contains a space: {s!r}")
        parts.append(f"{k}={s}")
    return " ".join(parts)


def parse_kv_line(line: str) -> tuple[str, dict[str, str]]:
    body = line.strip()
    kind, _, rest = body.partition(" ")
    out: dict[str, str] = {}
    while rest:
        key, eq, tail = rest.partition("=")
        if not eq or " " in key:
            raise ParseError(f"malformed record field near {rest!r}")
        if key == "note":
            out[key] = tail
            break
        val, _, rest = tail.partition(" ")
        out[key] = val
    return kind, out


class Transcript:
    """Accumulates record lines; renders to one deterministic text blob."""

    def __init__(self):
        self.lines: list[str] = []
        self._next_claim_id = 1
        self._claim_ids: dict[LimitClaim, int] = {}

    def add(self, kind: str, pairs: list[tuple[str, object]]) -> None:
        self.lines.append(kv_line(kind, pairs))

    def header(self, pairs: list[tuple[str, object]]) -> None:
        self.add("header", [("tool", TOOL)] + pairs)

    def claim_id(self, claim: LimitClaim) -> int:
        cid = self._claim_ids.get(claim)
        if cid is None:
            cid = self._next_claim_id
            self._next_claim_id += 1
            self._claim_ids[claim] = cid
            self.add(
                "claim",
                [
                    ("id", cid),
                    ("field", claim.field),
                    ("fn", fn_name(claim.fn)),
                    ("point", claim.point),
                    ("candidate", claim.candidate),
                ],
            )
        return cid

    def add_report(self, report: RefereeReport) -> None:
        cert = report.cert
        cid = self.claim_id(cert.claim)
        if isinstance(cert, VerifierCert):
            pairs = [("claim", cid), ("kind", "verifier"), ("rule", cert.rule.render())]
            if cert.note:
                pairs.append(("note", cert.note))
        else:
            pairs = [
                ("claim", cid),
                ("kind", "falsifier"),
                ("eps", cert.epsilon),
                ("witness", cert.witness.render()),
            ]
        self.add("cert", pairs)
        for rec in report.records:
            self.add("check", _check_pairs(cid, rec))
        self.add(
            "report",
            [
                ("claim", cid),
                ("kind", "verifier" if isinstance(cert, VerifierCert) else "falsifier"),
                ("tag", report.tag),
                ("checks", len(report.records)),
                ("verdict", report.passed),
            ],
        )

    def summary(self, demo: str, exit_code: int, verdict: bool) -> None:
        checks = sum(1 for ln in self.lines if ln.startswith("check "))
        self.add(
            "summary",
            [
                ("demo", demo),
                ("claims", self._next_claim_id - 1),
                ("checks", checks),
                ("exit", exit_code),
                ("verdict", verdict),
            ],
        )

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _check_pairs(cid: int, rec: CheckRecord) -> list[tuple[str, object]]:
    return [
        ("claim", cid),
        ("kind", rec.kind),
        ("eps", rec.eps),
        ("delta", rec.delta),
        ("w", rec.w),
        ("fw", rec.fw),
        ("dist", rec.dist),
        ("sep", rec.sep),
        ("verdict", rec.ok),
    ]


@dataclass
class ClaimFile:
    """Parsed contents of an `ordfield claim` input file."""

    certs: list[VerifierCert | FalsifierCert] = dc_field(default_factory=list)
    eps_depth: int | None = None
    delta_depth: int | None = None
    eps_values: list | None = None
    delta_values: list | None = None


def parse_claim_file(text: str) -> ClaimFile:
    out = ClaimFile()
    current: LimitClaim | None = None
    fld: Field | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, kv = parse_kv_line(line)
        if kind == "claim":
            fld = _field_of(kv)
            fn = parse_fn(fld, _need(kv, "fn", line))
            current = LimitClaim(
                fn,
                parse_elem(fld, _need(kv, "point", line)),
                parse_elem(fld, _need(kv, "candidate", line)),
            )
        elif kind == "cert":
            if current is None or fld is None:
                raise ParseError("cert record before any claim record")
            parse_value = _value_parser(fld)
            ckind = _need(kv, "kind", line)
            if ckind == "verifier":
                rule = parse_rule(_need(kv, "rule", line), parse_value)
                out.certs.append(VerifierCert(current, rule, kv.get("note", "")))
            elif ckind == "falsifier":
                out.certs.append(
                    FalsifierCert(
                        current,
                        parse_value(_need(kv, "eps", line)),
                        parse_witness(_need(kv, "witness", line), parse_value),
                    )
                )
            else:
                raise ParseError(f"unknown cert kind {ckind!r}")
        elif kind == "schedule":
            if fld is None:
                raise ParseError("schedule record before any claim record")
            skind = _need(kv, "kind", line)
            if skind not in ("eps", "delta"):
                raise ParseError(f"unknown schedule kind {skind!r}")
            if "depth" in kv:
                depth = int(kv["depth"])
                if skind == "eps":
                    out.eps_depth = depth
                else:
                    out.delta_depth = depth
            elif "values" in kv:
                vals = [parse_elem(fld, v) for v in kv["values"].split(",")]
                if skind == "eps":
                    out.eps_values = vals
                else:
                    out.delta_values = vals
            else:
                raise ParseError("schedule record needs depth= or values=")
        else:
            raise ParseError(f"unknown record kind {kind!r}")
    if not out.certs:
        raise ParseError("claim file contains no certificates")
    return out


def _field_of(kv: dict[str, str]) -> Field:
    name = kv.get("field", "")
    for f in Field:
        if f.value == name:
            return f
    raise ParseError(f"unknown field {name!r}")


def _need(kv: dict[str, str], key: str, line: str) -> str:
    if key not in kv:
        raise ParseError(f"missing {key}= in record {line!r}")
    return kv[key]


def _value_parser(fld: Field):
    return lambda s: parse_elem(fld, s)
