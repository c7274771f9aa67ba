"""Command-line surface: towers, codes, distances, certificates, products.

Exit codes: 0 success, 2 precondition/hypothesis violation (the violated
hypothesis is named in the report), 3 enumeration budget exhausted.  Output
is JSON on stdout by default; `--format text` renders a human summary.
"""

from __future__ import annotations

import argparse
import configparser
import json
import re
import sys
import time

from . import __version__
from .bivar import BivarPoly, nu_map, ev_total
from .bounds import (
    CHECKERS,
    BoundCertificate,
    BoundParams,
    DefiningSetView,
    SearchLimits,
    best_bound_search,
)
from .codes import (
    LinearCode,
    Partition,
    code_from_skew_generator,
    is_cyclic_skew_cyclic,
    min_distance_bruteforce,
)
from .errors import BudgetExceeded, ParseError, SumrankError
from .product import factor_distances, product_code_from_polys, product_generator_poly
from .skew import SkewPoly, parse_poly
from .tower import FieldTower, build_tower

_BIV_TERM_RE = re.compile(
    r"^\s*(?:(g(?:\^\d+)?|\d+)\s*\*?)?\s*(?:x(?:\^(\d+))?)?\s*\*?\s*(?:z(?:\^(\d+))?)?\s*$"
)


def parse_bivar(text: str, tower: FieldTower, level: str = "F") -> BivarPoly:
    """Parse "3*x^2*z + x + 1" style text into a coefficient grid."""
    gf = tower.gf(level)
    grid = [[0] * tower.N for _ in range(tower.ell)]
    text = text.strip()
    if text == "0":
        return BivarPoly.from_lists(tower, level, grid)
    for raw in re.findall(r"[+-]?[^+-]+", text):
        raw = raw.strip()
        sign = 1
        if raw.startswith("-"):
            sign, raw = -1, raw[1:].strip()
        elif raw.startswith("+"):
            raw = raw[1:].strip()
        m = _BIV_TERM_RE.match(raw)
        if not m or not raw:
            raise ParseError(f"bad term {raw!r}")
        cstr, xe, ze = m.groups()
        if cstr is None and xe is None and ze is None and "x" not in raw and "z" not in raw:
            raise ParseError(f"bad term {raw!r}")
        if cstr is None:
            c = 1
        elif cstr.startswith("g"):
            k = int(cstr[2:]) if cstr.startswith("g^") else 1
            c = gf.pow(gf.gen, k)
        else:
            c = int(cstr)
            if not 0 <= c < gf.order:
                raise ParseError(f"coefficient {c} out of range")
        if sign < 0:
            c = gf.neg(c)
        i = (int(xe) if xe else (1 if "x" in raw else 0)) % tower.ell
        j = (int(ze) if ze else (1 if "z" in raw else 0)) % tower.N
        grid[i][j] = gf.add(grid[i][j], c)
    return BivarPoly.from_lists(tower, level, grid)


def _parse_token(tok: str, gf) -> int:
    if tok.startswith("g"):
        k = int(tok[2:]) if tok.startswith("g^") else (1 if tok == "g" else None)
        if k is None:
            raise ParseError(f"bad field token {tok!r}")
        return gf.pow(gf.gen, k)
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"bad field token {tok!r}")
    if not 0 <= v < gf.order:
        raise ParseError(f"field token {v} out of range for order {gf.order}")
    return v


class CodeSpec:
    """Parsed code-spec file: a tower plus a matrix or generator data."""

    def __init__(self, tower, code, generator=None, f1=None, f2=None):
        self.tower = tower
        self.code = code
        self.generator = generator  # BivarPoly or None
        self.f1 = f1
        self.f2 = f2

    def defining_view(self) -> DefiningSetView:
        if self.generator is not None:
            return DefiningSetView.from_generator(self.tower, self.generator)
        t = self.tower
        rows = [
            nu_map([t.lift(v, self.code.level, "L") for v in row], t, "L")
            for row in self.code.G
        ]

        def member(aval, bval):
            return all(ev_total(f, aval, bval) == 0 for f in rows)

        return DefiningSetView.from_predicate(t, member)


def parse_code_spec(text: str) -> CodeSpec:
    cp = configparser.ConfigParser()
    cp.optionxform = str  # keep key case: N and n differ
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ParseError(str(exc))
    if "tower" not in cp:
        raise ParseError("missing [tower] section")
    tw = cp["tower"]
    try:
        t = build_tower(
            int(tw.get("p")),
            int(tw.get("e_deg", 1)),
            int(tw.get("m")),
            int(tw.get("h")),
            int(tw.get("ell")),
            int(tw.get("N", tw.get("n"))),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad [tower] section: {exc}")
    if "matrix" in cp:
        sec = cp["matrix"]
        raw = sec.get("rows", "")
        rows = []
        for line in raw.replace(";", "\n").splitlines():
            line = line.strip()
            if not line:
                continue
            rows.append([_parse_token(tok, t.F) for tok in re.split(r"[,\s]+", line)])
        parts_raw = sec.get("parts", "")
        if parts_raw:
            part = Partition(tuple(int(x) for x in re.split(r"[,\s]+", parts_raw.strip())))
        else:
            part = Partition.equal(t.ell, t.N)
        code = LinearCode(t, rows, part)
        return CodeSpec(t, code)
    if "generator" in cp:
        sec = cp["generator"]
        if sec.get("g"):
            g = parse_bivar(sec.get("g"), t)
            code = code_from_skew_generator(g, t)
            return CodeSpec(t, code, generator=g)
        f1_text, f2_text = sec.get("f1"), sec.get("f2")
        if f1_text is None or f2_text is None:
            raise ParseError("[generator] needs g= or both f1= and f2=")
        f1 = parse_poly(f1_text, t, "F", "x")
        f2 = SkewPoly(t, "F", parse_poly(f2_text, t, "F", "z"))
        g = product_generator_poly(t, f1, f2)
        code = code_from_skew_generator(g, t)
        return CodeSpec(t, code, generator=g, f1=f1, f2=f2)
    raise ParseError("need a [matrix] or [generator] section")


def load_code_spec(path: str) -> CodeSpec:
    with open(path) as fh:
        return parse_code_spec(fh.read())


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    lines = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {v}")

    walk(report)
    return "\n".join(lines)


def _report(args, payload: dict, timings: dict | None = None) -> None:
    report = {"version": __version__}
    report.update(payload)
    if timings:
        report["timings"] = timings
    print(_render(report, args.format))


def cmd_tower(args) -> int:
    t = build_tower(args.p, args.e_deg, args.m, args.h, args.ell, args.N)
    _report(args, {"tower": t.describe()})
    return 0


def cmd_code_build(args) -> int:
    spec = load_code_spec(args.code)
    payload = {"tower": spec.tower.describe(), "code": spec.code.describe()}
    payload["code"]["cyclic_skew_cyclic"] = is_cyclic_skew_cyclic(spec.code)
    if spec.generator is not None:
        payload["generator"] = str(spec.generator)
    _report(args, payload)
    return 0


def cmd_distance(args) -> int:
    spec = load_code_spec(args.code)
    t0 = time.perf_counter()
    d = min_distance_bruteforce(spec.code, metric=args.metric)
    dt = time.perf_counter() - t0
    _report(
        args,
        {"d": d, "metric": args.metric, "code_id": spec.code.code_id()},
        {"distance_seconds": round(dt, 6)},
    )
    return 0


def _params_from_args(args) -> BoundParams:
    if args.kind == "bch":
        return BoundParams("bch", args.b, args.delta, t=args.t)
    if args.kind == "ht":
        return BoundParams("ht", args.b, args.delta, r=args.r, t1=args.t1, t2=args.t2)
    ks = tuple(int(x) for x in re.split(r"[,\s]+", args.k.strip()))
    return BoundParams("roos", args.b, args.delta, r=len(ks) - 1, s=args.s, ks=ks)


def cmd_certify(args) -> int:
    spec = load_code_spec(args.code)
    D = spec.defining_view()
    params = _params_from_args(args)
    cert = CHECKERS[args.kind](D, params, spec.code.code_id())
    _report(args, {"certificate": cert.as_dict()})
    return 0


def cmd_search(args) -> int:
    spec = load_code_spec(args.code)
    D = spec.defining_view()
    limits = SearchLimits(args.delta_max, args.r_max)
    t0 = time.perf_counter()
    cert = best_bound_search(D, limits, spec.code.code_id())
    dt = time.perf_counter() - t0
    _report(args, {"certificate": cert.as_dict()}, {"search_seconds": round(dt, 6)})
    return 0


def cmd_product(args) -> int:
    spec1 = load_code_spec(args.code1)
    spec2 = load_code_spec(args.code2)
    if spec1.tower != spec2.tower:
        raise SumrankError("the two code specs use different towers")
    if spec1.f1 is None or spec2.f2 is None:
        raise ParseError("product needs f1 in the first spec and f2 in the second")
    t = spec1.tower
    P = product_code_from_polys(t, spec1.f1, spec2.f2)
    dH, dR = factor_distances(P)
    dSR = min_distance_bruteforce(P.code) if P.code.k else None
    D = DefiningSetView.from_generator(t, product_generator_poly(t, spec1.f1, spec2.f2))
    bounds = []
    if P.code.k:
        cert = best_bound_search(D, code_id=P.code.code_id())
        bounds.append(cert.as_dict())
    _report(
        args,
        {
            "k1": P.k1,
            "k2": P.k2,
            "dH": dH,
            "dR": dR,
            "dSR": dSR,
            "bounds": bounds,
        },
    )
    return 0


def cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        data = json.load(fh)
    spec = load_code_spec(args.code)
    if data.get("code_id") and data["code_id"] != spec.code.code_id():
        raise SumrankError("certificate code_id does not match the code")
    pd = data["params"]
    params = BoundParams(
        pd["kind"],
        pd["b"],
        pd["delta"],
        t=pd.get("t"),
        r=pd.get("r", 0),
        t1=pd.get("t1"),
        t2=pd.get("t2"),
        s=pd.get("s"),
        ks=tuple(pd["ks"]) if "ks" in pd else None,
    )
    D = spec.defining_view()
    cert = CHECKERS[params.kind](D, params, spec.code.code_id())
    if cert.bound != data["bound"]:
        raise SumrankError(
            f"recomputed bound {cert.bound} != certificate bound {data['bound']}"
        )
    if [list(p) for p in cert.grid] != [list(p) for p in data["grid"]]:
        raise SumrankError("recomputed grid differs from the certificate grid")
    _report(args, {"verified": True, "certificate": cert.as_dict()})
    return 0


def _add_common(p):
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized paths")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sumrank",
        description="Cyclic-skew-cyclic sum-rank codes: distances and certified bounds.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tower", help="build and describe a field tower")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e-deg", dest="e_deg", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("code", help="code operations")
    csub = p.add_subparsers(dest="code_command", required=True)
    pb = csub.add_parser("build", help="build a code from a spec file")
    pb.add_argument("--code", required=True)
    _add_common(pb)
    pb.set_defaults(func=cmd_code_build)

    p = sub.add_parser("distance", help="exact minimum distance by enumeration")
    p.add_argument("--code", required=True)
    p.add_argument("--metric", choices=("sumrank", "hamming", "rank"), default="sumrank")
    _add_common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("certify", help="check one bound certificate")
    ksub = p.add_subparsers(dest="kind", required=True)
    pk = ksub.add_parser("bch")
    pk.add_argument("--code", required=True)
    pk.add_argument("--b", type=int, required=True)
    pk.add_argument("--t", type=int, required=True)
    pk.add_argument("--delta", type=int, required=True)
    _add_common(pk)
    pk.set_defaults(func=cmd_certify)
    pk = ksub.add_parser("ht")
    pk.add_argument("--code", required=True)
    pk.add_argument("--b", type=int, required=True)
    pk.add_argument("--t1", type=int, required=True)
    pk.add_argument("--t2", type=int, required=True)
    pk.add_argument("--delta", type=int, required=True)
    pk.add_argument("--r", type=int, required=True)
    _add_common(pk)
    pk.set_defaults(func=cmd_certify)
    pk = ksub.add_parser("roos")
    pk.add_argument("--code", required=True)
    pk.add_argument("--b", type=int, required=True)
    pk.add_argument("--s", type=int, required=True)
    pk.add_argument("--delta", type=int, required=True)
    pk.add_argument("--k", required=True, help="comma-separated k_0,...,k_r")
    _add_common(pk)
    pk.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="best bound over all certificate families")
    p.add_argument("--code", required=True)
    p.add_argument("--delta-max", dest="delta_max", type=int, default=None)
    p.add_argument("--r-max", dest="r_max", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("product", help="tensor product of two generator-spec codes")
    p.add_argument("--code1", required=True)
    p.add_argument("--code2", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="re-check a certificate from scratch")
    p.add_argument("--certificate", required=True)
    p.add_argument("--code", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 3
    except SumrankError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
