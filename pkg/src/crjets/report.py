"""Analysis reports and their serialization.

The JSON schema is fixed and key order is stable::

    {dims: {n, d, N, m, k}, basepoint, r1, r2, nondeg_order, strong_type,
     finite_type, certificates: {normal_form_residual_zero,
     oracle_agreement}, seed?, timings_ms}

Basepoint coordinates are emitted as exact rational strings so a report
round-trips without loss.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .scalars import GQ


def format_gq(c):
    """Exact textual form of a Gaussian rational, re-parseable."""
    if not isinstance(c, GQ):
        c = GQ(c)
    if not c.im:
        return str(c.re)
    im = "%s*i" % c.im if c.im >= 0 else "(0-%s*i)" % (-c.im)
    if not c.re:
        return im
    if c.im > 0:
        return "%s+%s*i" % (c.re, c.im)
    return "%s-%s*i" % (c.re, -c.im)


@dataclass
class AnalysisReport:
    dims: dict                 # {n, d, N, m, k}
    basepoint: list            # exact strings, z block then s block
    r1: list
    r2: list
    nondeg_order: int | None
    strong_type: int | None
    finite_type: int | None
    certificates: dict         # {normal_form_residual_zero, oracle_agreement}
    seed: int | None = None
    timings_ms: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "dims": {key: self.dims[key] for key in ("n", "d", "N", "m", "k")},
            "basepoint": list(self.basepoint),
            "r1": list(self.r1),
            "r2": list(self.r2),
            "nondeg_order": self.nondeg_order,
            "strong_type": self.strong_type,
            "finite_type": self.finite_type,
            "certificates": {
                "normal_form_residual_zero":
                    self.certificates["normal_form_residual_zero"],
                "oracle_agreement": self.certificates["oracle_agreement"],
            },
        }
        if self.seed is not None:
            out["seed"] = self.seed
        out["timings_ms"] = dict(self.timings_ms)
        return out

    @classmethod
    def from_dict(cls, data):
        return cls(dims=dict(data["dims"]),
                   basepoint=list(data["basepoint"]),
                   r1=list(data["r1"]),
                   r2=list(data["r2"]),
                   nondeg_order=data["nondeg_order"],
                   strong_type=data["strong_type"],
                   finite_type=data["finite_type"],
                   certificates=dict(data["certificates"]),
                   seed=data.get("seed"),
                   timings_ms=dict(data.get("timings_ms", {})))

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def render_human(self):
        d = self.dims
        lines = [
            "dimensions: n=%d d=%d N=%d m=%d k=%d"
            % (d["n"], d["d"], d["N"], d["m"], d["k"]),
            "basepoint: (%s)" % ", ".join(self.basepoint),
            "r1 (j=1..%d): %s" % (d["k"] - 1, list(self.r1)),
            "r2 (j=1..%d): %s" % (d["k"], list(self.r2)),
            "nondegeneracy order: %s" % _fmt(self.nondeg_order),
            "strong type: %s" % _fmt(self.strong_type),
            "finite type: %s" % _fmt(self.finite_type),
            "normal form residual zero: %s"
            % self.certificates["normal_form_residual_zero"],
            "oracle agreement: %s" % self.certificates["oracle_agreement"],
        ]
        if self.timings_ms:
            steps = ", ".join("%s=%d" % kv
                              for kv in sorted(self.timings_ms.items()))
            lines.append("timings (ms): %s" % steps)
        return "\n".join(lines)


def _fmt(v):
    return "none" if v is None else str(v)
