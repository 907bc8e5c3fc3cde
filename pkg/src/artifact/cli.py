"""Command-line front end.

    python3 -m artifact compute sl2 --class unramified --depth 1 --center black --n 0..3
    python3 -m artifact compute gsp4 --type 3 --n 2 --method both
    python3 -m artifact verify appendixA --q 2,3 --max-reach 4

Exit codes: 0 success, 1 a verification check failed, 2 usage or
precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .halfint import HalfInt
from .qrat import QRat


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def parse_range(text: str) -> list[int]:
    """``3``, ``0..3`` or ``1,2,5``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer range {text!r}") from None


def parse_half(text: str) -> HalfInt:
    try:
        return HalfInt.of(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{text!r} is not an integer or half-integer (use a/2 or .5)") from None


def parse_fraction_list(text: str) -> list[Fraction]:
    return [Fraction(t) for t in text.split(",")]


# ---------------------------------------------------------------------------
# output


@dataclass
class Row:
    params: dict
    value: object  # QRat, Fraction, int or text such as "divergent"


@dataclass
class OutputTable:
    subject: str
    rows: list[Row] = field(default_factory=list)
    numeric_q: int | None = None

    def add(self, params: dict, value):
        self.rows.append(Row(params, value))

    def _value(self, v):
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            v = QRat(v)
        return str(v)

    def _numeric(self, v):
        if self.numeric_q is None or not isinstance(v, (QRat, int, Fraction)):
            return None
        x = v(self.numeric_q) if isinstance(v, QRat) else Fraction(v)
        return {"q": self.numeric_q, "value": str(x)}

    def records(self) -> list[dict]:
        out = []
        for r in self.rows:
            rec = {"subject": self.subject, "params": {k: str(v) for k, v in r.params.items()}, "value": self._value(r.value)}
            num = self._numeric(r.value)
            if num is not None:
                rec["numeric"] = num
            out.append(rec)
        return out

    def render(self, fmt: str) -> str:
        recs = self.records()
        if fmt == "json":
            return json.dumps(recs, indent=2)
        if fmt == "csv":
            buf = io.StringIO()
            keys = list(dict.fromkeys(k for r in recs for k in r["params"]))
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["subject", *keys, "value", "numeric"])
            for r in recs:
                num = r.get("numeric", {}).get("value", "")
                w.writerow([r["subject"], *(r["params"].get(k, "") for k in keys), r["value"], num])
            return buf.getvalue().rstrip("\n")
        if fmt == "latex":
            keys = list(dict.fromkeys(k for r in recs for k in r["params"]))
            lines = [r"\begin{tabular}{" + "l" * len(keys) + "l}", " & ".join(keys + ["value"]) + r" \\", r"\hline"]
            for r, row in zip(recs, self.rows):
                v = row.value
                if isinstance(v, (int, Fraction)):
                    v = QRat(v)
                val = f"${v.latex()}$" if isinstance(v, QRat) else str(v)
                lines.append(" & ".join([r["params"].get(k, "") for k in keys] + [val]) + r" \\")
            lines.append(r"\end{tabular}")
            return "\n".join(lines)
        raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# compute


def _sl2(a, t: OutputTable):
    from . import sl2
    from .invariants import GammaInvariants

    ns = parse_range(a.n)
    if a.klass == "unipotent":
        for n in ns:
            t.add({"rep": a.rep, "n": n}, sl2.sl2_unipotent(a.rep, n) if a.rep != "stable" else sl2.sl2_unipotent_stable(n))
        return
    color = a.center if a.klass in ("unramified", "unram", "unramified_elliptic") else None
    inv = GammaInvariants(a.klass, parse_half(a.depth), color)
    if a.kind == "germ":
        for k, v in sl2.sl2_shalika(inv).as_dict().items():
            t.add({"class": inv, "coefficient": k}, v)
        return
    fn = sl2.sl2_stable if a.kind == "stable" else sl2.sl2_orbital
    for n in ns:
        t.add({"class": inv, "n": n}, fn(inv, n))


def _gl2gl2(a, t: OutputTable):
    from . import gl2gl2 as g
    from .invariants import parse_invariants

    ns, ms = parse_range(a.n), parse_range(a.m)
    if a.case == "unipotent":
        data, f = {"rep": a.rep}, lambda n, m: g.g_unipotent(a.rep, n, m)
        shal = None
    elif a.case == "hyperbolic":
        d1, d2 = int(a.d1), int(a.d2)
        data, f = {"d1": d1, "d2": d2}, lambda n, m: g.g_hyperbolic(d1, d2, n, m)
        shal = ("hyperbolic", (d1, d2))
    elif a.case == "mixed":
        inv2 = parse_invariants(a.inv2)
        d1 = int(a.d1)
        data, f = {"d1": d1, "inv2": inv2}, lambda n, m: g.g_mixed(d1, inv2, n, m)
        shal = ("mixed", (d1, inv2))
    elif a.case == "elliptic":
        cfg = g.EllipticPairConfig(parse_invariants(a.inv1), parse_invariants(a.inv2), a.parity)
        data, f = {"inv1": cfg.inv1, "inv2": cfg.inv2, "parity": cfg.parity}, lambda n, m: g.g_elliptic(cfg, n, m)
        shal = ("elliptic", cfg)
    else:
        raise UsageError(f"unknown gl2gl2 case {a.case!r}")
    if a.kind == "germ":
        if shal is None:
            raise UsageError("germ expansions are defined for regular semisimple classes")
        for k, v in g.g_shalika(*shal).as_dict().items():
            t.add({**data, "coefficient": k}, v)
        return
    if a.kind == "stable":
        if a.case == "elliptic":
            f = lambda n, m: g.g_stable(cfg, n, m)  # noqa: E731
        elif a.case == "unipotent":
            f = lambda n, m: g.g_stable(("unipotent", a.rep), n, m)  # noqa: E731
    for n in ns:
        for m in ms:
            t.add({**data, "n": n, "m": m}, f(n, m))


def _gsp4(a, t: OutputTable):
    from . import gsp4

    for n in parse_range(a.n):
        if a.type in ("3", "T3") and a.method == "comparison":
            t.add({"type": "T3", "n": n, "quantity": "ratio"}, gsp4.type3_comparison(n))
            continue
        closed = gsp4.orbital_closed_form(a.type, n)
        region = gsp4.orbital_region_sum(a.type, n)
        if a.method in ("closed", "both"):
            t.add({"type": a.type, "n": n, "method": "closed-form"}, closed)
        if a.method in ("region", "both"):
            t.add({"type": a.type, "n": n, "method": "region-sum"}, region)
        if a.method == "both":
            t.add({"type": a.type, "n": n, "method": "residual"}, closed - region)


def _relative(a, t: OutputTable):
    from .invariants import parse_invariants
    from .relative import RelativeConfig, relative_orbital

    cfg = RelativeConfig(parse_invariants(a.inv1), parse_invariants(a.inv2), parse_half(a.delta),
                         a.overlap, a.core)
    res = relative_orbital(cfg)
    if a.case != "auto" and a.case != res.case:
        raise UsageError(f"the invariants describe case {res.case}, not {a.case}")
    t.add({"case": res.case, "inv1": cfg.inv1, "inv2": cfg.inv2, "delta": cfg.delta}, "divergent" if res.divergent else res.value)


def _descent(a, t: OutputTable):
    from . import descent as ds

    if a.kind == "weyl-pair":
        t1 = Fraction(a.t1) if "," not in a.t1 else tuple(parse_fraction_list(a.t1))
        t2 = Fraction(a.t2) if "," not in a.t2 else tuple(parse_fraction_list(a.t2))
        t.add({"t1": a.t1, "t2": a.t2, "lambda": a.lam, "mode": a.mode}, ds.weyl_disc_pair(t1, t2, Fraction(a.lam), a.mode))
    elif a.kind == "weyl-many":
        res = ds.weyl_disc_many([int(x) for x in a.traces.split(",")], a.p, a.prime, a.mode)
        t.add({"traces": a.traces, "q": a.p, "quantity": "D"}, res.D)
        if res.valuation is not None:
            t.add({"traces": a.traces, "q": a.p, "quantity": f"val_{a.prime}"}, res.valuation)
    elif a.kind == "special":
        for n in parse_range(a.n):
            f = ds.descent_factor("special", n)
            t.add({"n": n, "quantity": "exponent"}, f.exponent)
            t.add({"n": n, "quantity": "squared"}, f.squared())
    elif a.kind == "levi-ratio":
        word = [int(x) for x in a.word.split(",")]
        t.add({"a": a.word, "quantity": "varpi_exponent"}, ds.levi_exponent(word))
        t.add({"a": a.word, "quantity": "half_power_exponent"}, ds.descent_factor("levi-ratio", word).exponent)
    elif a.kind in ("ext", "isogeny"):
        traces = [int(x) for x in a.traces.split(",")]
        if a.kind == "ext":
            if len(traces) != 2:
                raise UsageError("ext needs exactly two traces")
            t.add({"T1": traces[0], "T2": traces[1], "q": a.p}, ds.ext_count(ds.FrobeniusPair(*traces, a.p)))
        else:
            r = ds.isogeny_ratio(traces, a.p)
            t.add({"traces": a.traces, "p": a.p, "quantity": "ratio_squared"}, r.squared)
            t.add({"traces": a.traces, "p": a.p, "quantity": "ratio"}, f"{r.approx:.12g}")
            if r.ext_over_p is not None:
                t.add({"traces": a.traces, "p": a.p, "quantity": "ext_over_p"}, r.ext_over_p)
    else:
        raise UsageError(f"unknown descent kind {a.kind!r}")


def _treecount(a, t: OutputTable):
    from . import treecount as tc

    op = a.op
    if op == "ball":
        spec = tc.BallSpec(a.kind1, parse_half(a.alpha))
        t.add({"op": op, "center": a.kind1, "radius": spec.radius}, tc.ball_count(spec))
    elif op == "ball-ball":
        regime, v = tc.ball_ball_intersection(parse_half(a.alpha), parse_half(a.beta), parse_half(a.delta), a.kind1)
        t.add({"op": op, "alpha": a.alpha, "beta": a.beta, "delta": a.delta, "regime": regime.tag}, v)
    elif op == "tube-ball":
        t.add({"op": op, "alpha": a.alpha, "beta": a.beta, "delta": a.delta},
              tc.tube_ball_count(int(a.alpha), parse_half(a.beta), parse_half(a.delta), a.kind1))
    elif op == "tube-tube":
        t.add({"op": op, "alpha": a.alpha, "beta": a.beta, "delta": a.delta, "r": a.r},
              tc.tube_tube_count(int(a.alpha), int(a.beta), int(a.delta), a.r))
    elif op == "sphere":
        for n in parse_range(a.n):
            t.add({"op": op, "n": n, "V": a.r}, tc.sphere_from_convex(n, a.r))
    elif op == "chi":
        for d in parse_range(a.n):
            t.add({"op": op, "d": d}, tc.chi(d))
    else:
        raise UsageError(f"unknown treecount op {op!r}")


_COMPUTE = {"sl2": _sl2, "gl2gl2": _gl2gl2, "gsp4": _gsp4, "relative": _relative, "descent": _descent, "treecount": _treecount}


def cmd_compute(a) -> tuple[str, int]:
    t = OutputTable(a.subject, numeric_q=a.numeric)
    _COMPUTE[a.subject](a, t)
    return t.render(a.format), 0


def cmd_verify(a) -> tuple[str, int]:
    from .verify import SUITES

    qs = tuple(parse_range(a.q))
    if any(x < 2 for x in qs):
        raise UsageError("q entries must be at least 2")
    if a.max_reach > 6:
        raise UsageError("max-reach above 6 exceeds the truncation policy")
    kw = {
        "appendixA": {"qs": qs, "max_reach": a.max_reach},
        "sl2": {"qs": qs, "max_n": a.max_n, "max_reach": a.max_reach},
        "gl2gl2": {"qs": qs, "max_nm": min(a.max_n, 4), "max_reach": a.max_reach},
        "gsp4-regions": {"max_n": a.max_n},
        "relative": {"qs": qs, "max_reach": a.max_reach},
    }[a.suite]
    rep = SUITES[a.suite](**kw)
    return json.dumps(rep.summary(), indent=2), 0 if rep.ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description="Exact orbital integrals as rational functions of q.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate integrals, germs, descent factors or tree counts")
    c.add_argument("subject", choices=sorted(_COMPUTE))
    c.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    c.add_argument("--numeric", type=int, metavar="Q", help="also evaluate at q = Q")
    c.add_argument("--n", default="0")
    c.add_argument("--m", default="0")
    c.add_argument("--kind", default="orbital", help="sl2/gl2gl2: orbital|stable|germ; descent: see --help")
    # sl2
    c.add_argument("--class", dest="klass", default="split")
    c.add_argument("--depth", default="0")
    c.add_argument("--center", choices=("black", "white"), default="black")
    c.add_argument("--rep", default="one")
    # gl2gl2 / relative
    c.add_argument("--case", default="auto")
    c.add_argument("--d1", default="0")
    c.add_argument("--d2", default="0")
    c.add_argument("--inv1", default="split:0")
    c.add_argument("--inv2", default="split:0")
    c.add_argument("--parity", choices=("monochrome", "bichrome"))
    c.add_argument("--delta", default="0")
    c.add_argument("--overlap", type=int)
    c.add_argument("--core", choices=("equal", "shared_ray"))
    # gsp4
    c.add_argument("--type", default="1")
    c.add_argument("--method", choices=("closed", "region", "both", "comparison"), default="both")
    # descent
    c.add_argument("--t1", default="2")
    c.add_argument("--t2", default="3")
    c.add_argument("--lam", default="1")
    c.add_argument("--mode", choices=("group", "lie"), default="group")
    c.add_argument("--traces", default="1,2")
    c.add_argument("--p", type=int, default=5)
    c.add_argument("--prime", type=int)
    c.add_argument("--word", default="1,1")
    # treecount
    c.add_argument("--op", default="ball")
    c.add_argument("--alpha", default="0")
    c.add_argument("--beta", default="0")
    c.add_argument("--kind1", default="vertex")
    c.add_argument("--r", type=int, default=0)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("suite", choices=("appendixA", "sl2", "gl2gl2", "gsp4-regions", "relative"))
    v.add_argument("--q", default="2,3")
    v.add_argument("--max-reach", type=int, default=4)
    v.add_argument("--max-n", type=int, default=6)
    return p


def main(argv=None) -> int:
    p = build_parser()
    a = p.parse_args(argv)
    try:
        out, code = cmd_compute(a) if a.command == "compute" else cmd_verify(a)
    except (ValueError, TypeError, ZeroDivisionError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
