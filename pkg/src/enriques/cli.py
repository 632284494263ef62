"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON object on stderr), 2 usage error.
Settings come from defaults, then ``--config`` (``key = value`` lines), then
``ENRIQUES_*`` environment variables, then explicit flags.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, fields

from . import exceptional as exc
from . import fundrep, invariants, isotropy, lattice
from . import limit_surface as ls
from .certificates import dumps
from .errors import BadParameter, EnriquesError, ParseError
from .lattice import E8_CLASS, NumClass, PicClass, SurfaceModel


@dataclass(frozen=True)
class CliConfig:
    model: SurfaceModel = SurfaceModel.VERY_GENERAL
    length_cap: int = invariants.DEFAULT_LENGTH_CAP
    output: str = "json"
    oracle: bool = False
    k: int = ls.DEFAULT_K
    threads: int = 1

    def __post_init__(self):
        object.__setattr__(self, "model", SurfaceModel.parse(self.model))
        if self.length_cap < 2:
            raise BadParameter("length_cap must be >= 2", length_cap=self.length_cap)
        if self.k < 0:
            raise BadParameter("k must be >= 0", k=self.k)
        if self.output not in ("json", "table"):
            raise BadParameter("output must be json or table", output=self.output)


def _coerce(name, value):
    if name in ("length_cap", "k", "threads"):
        return int(value)
    if name == "oracle":
        return str(value).strip().lower() in ("1", "true", "yes", "on")
    return str(value).strip()


def read_config_file(path):
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"bad config line {raw.strip()!r}", path=path)
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


def build_config(args, environ=None):
    environ = os.environ if environ is None else environ
    known = {f.name for f in fields(CliConfig)}
    settings = {}
    if getattr(args, "config", None):
        settings.update(read_config_file(args.config))
    for name in known:
        env = environ.get(f"ENRIQUES_{name.upper()}")
        if env is not None:
            settings[name] = env
    for name in known:
        val = getattr(args, name, None)
        if val is not None:
            settings[name] = val
    unknown = set(settings) - known
    if unknown:
        raise ParseError(f"unknown config keys {sorted(unknown)}")
    return CliConfig(**{k: _coerce(k, v) for k, v in settings.items()})


_NAMES = {name: NumClass.basis(i) for i, name in enumerate(lattice.SLOT_NAMES)}
_NAMES["E8"] = E8_CLASS
_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(E910|E10|E[1-9]|K)")


def parse_class(text):
    """Parse ``[c1,...,c10]`` or a symbolic sum like ``2*E9+2*E10+2*E910`` (``K`` = canonical)."""
    text = text.strip()
    if text.startswith("[") or text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"cannot parse class {text!r}: {e}") from None
        if isinstance(obj, dict):
            return PicClass.from_json(obj)
        if len(obj) != lattice.RANK or not all(isinstance(x, int) for x in obj):
            raise ParseError("class needs 10 integer coordinates", given=obj)
        return PicClass(NumClass(tuple(obj)))
    compact = text.replace(" ", "")
    pos = 0
    total = PicClass(NumClass.zero())
    for m in _TERM.finditer(compact):
        if m.start() != pos:
            break
        sign, coef, name = m.groups()
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        term = PicClass.canonical() * c if name == "K" else PicClass(_NAMES[name] * c)
        total = total + term
        pos = m.end()
    if pos != len(compact) or not compact:
        raise ParseError(f"cannot parse class {text!r}")
    return total


_LIMIT_PRESETS = {
    "L0": lambda k: ls.l0_class(k),
    "E10": lambda k: ls.e0_classes(k)[0],
    "E20": lambda k: ls.e0_classes(k)[1],
    "E30": lambda k: ls.e0_classes(k)[2],
    "xi": lambda k: ls.xi(k),
}


def parse_limit_class(text, k):
    text = text.strip()
    if text in _LIMIT_PRESETS:
        return _LIMIT_PRESETS[text](k)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"cannot parse limit class {text!r}: {e}") from None
    r = obj["r"]
    return ls.make_limit_class(ls.RClass(r["c0"], r["f"], r.get("k", k)), ls.PClass(obj["p"]["coords"]))


class UsageError(Exception):
    pass


def _need(args, name):
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return val


def _num(args):
    return parse_class(_need(args, "cls")).num


# command handlers return a JSON-able object


def cmd_phi(args, cfg):
    H = _num(args)
    value, wits = isotropy.min_isotropic_pairing(H) if H.square > 0 else (invariants.phi(H), [])
    out = {"class": list(H.coords), "square": H.square, "phi": value, "witnesses": [list(w.coords) for w in wits]}
    if cfg.oracle:
        from .oracles import phi_oracle

        o_val, o_wits = phi_oracle(H)
        out["oracle"] = {"phi": o_val, "agrees": o_val == value and o_wits == wits}
    return out


def cmd_seshadri(args, cfg):
    return invariants.seshadri(_num(args), cfg.model).to_json()


def cmd_length(args, cfg):
    L = _num(args)
    out = {"class": list(L.coords), "square": L.square, "length": invariants.length(L, cap=cfg.length_cap)}
    if L.square > 0:
        out["greedy_lower_bound"] = invariants.greedy_length(L)
    return out


def cmd_fundrep(args, cfg):
    w = fundrep.fundamental_coefficients(parse_class(_need(args, "cls")))
    out = w.to_json()
    out["certified"] = w.check()
    return out


CENSUS_HEADER = "assumes every constrained tuple is realized by some polarized Enriques surface"


def cmd_census(args, cfg):
    sq = int(_need(args, "square"))
    if sq < 2 or sq % 2:
        raise BadParameter("square must be an even integer >= 2", square=sq)
    rows = fundrep.enumerate_components(sq, threads=cfg.threads)
    table = []
    for r in rows:
        table.append({
            "square": sq,
            "genus": 1 + sq // 2,
            "a": list(r.a),
            "epsilon": r.epsilon,
            "phi": invariants.phi(r.as_class()),
        })
    return {"assumption": CENSUS_HEADER, "components": table}


def cmd_classify(args, cfg):
    C = _num(args)
    t = exc.classify_exceptional(C, cap=max(cfg.length_cap, C.square))
    return {"class": list(C.coords), "square": C.square, "type": t.to_json(),
            "note": "families (iii), (iv) use h >= 1; (i) is reported for C^2 = 4, phi = 2"}


def cmd_admissible(args, cfg):
    C = _num(args)
    return {"class": list(C.coords), "admissible": exc.rational_class_admissible(C, cfg.model)}


def cmd_isotropic_enum(args, cfg):
    H = _num(args)
    c = int(_need(args, "c"))
    res = isotropy.isotropic_slice(H, c, primitive_only=args.primitive, effective_only=True)
    return {"H": list(H.coords), "c": c, "solutions": [list(v.coords) for v in res.solutions],
            "certificate": res.certificate}


def cmd_limit(args, cfg):
    k = cfg.k
    op = args.op
    L = parse_limit_class(_need(args, "L"), k)
    if op == "pair":
        M = parse_limit_class(args.M, k) if args.M else L
        return {"pairing": ls.pair_limit(L, M)}
    if op == "twist":
        a = int(_need(args, "a"))
        return {"class": ls.twist(L, a).to_json(), "a": a}
    if op == "parity":
        return {"fiber_degree": L.r.fiber_degree, "obstructed": ls.parity_obstruction(L)}
    if op == "obstruct":
        m = int(_need(args, "m"))
        return ls.multiplicity_obstruction(L, m, general=args.general).to_json()
    raise UsageError(f"unknown limit operation {op}")


def cmd_verify(args, cfg):
    if cfg.model is not SurfaceModel.VERY_GENERAL:
        raise BadParameter("verify replays the very general case only", model=cfg.model.value)
    cert = exc.verify_eps_equals_phi(_num(args))
    out = cert.to_json()
    out["valid"] = cert.validate()
    return out


def cmd_selftest(args, cfg):
    from .selftest import run_selftest

    results = run_selftest(full=args.full)
    return {"mode": "full" if args.full else "quick",
            "passed": all(r["ok"] for r in results), "checks": results}


COMMANDS = {
    "phi": cmd_phi,
    "seshadri": cmd_seshadri,
    "length": cmd_length,
    "fundrep": cmd_fundrep,
    "census": cmd_census,
    "classify": cmd_classify,
    "admissible": cmd_admissible,
    "isotropic-enum": cmd_isotropic_enum,
    "limit": cmd_limit,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--class", dest="cls", help="10 integers as JSON, or a symbolic sum like 2*E1+E2")
    common.add_argument("--square", type=int)
    common.add_argument("--model", choices=[m.value for m in SurfaceModel])
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json")
    fmt.add_argument("--table", dest="output", action="store_const", const="table")
    common.add_argument("--threads", type=int)
    common.add_argument("--config")
    common.add_argument("--oracle", action="store_const", const=True)
    common.add_argument("--length-cap", dest="length_cap", type=int)
    common.add_argument("--k", type=int, help="self-intersection of the section class on R")

    parser = argparse.ArgumentParser(prog="enriques", parents=[common], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], allow_abbrev=False)
        if name == "isotropic-enum":
            p.add_argument("--c", type=int)
            p.add_argument("--primitive", action="store_true")
        elif name == "limit":
            p.add_argument("op", choices=["pair", "twist", "parity", "obstruct"])
            p.add_argument("--L", help="preset (L0, E10, E20, E30, xi) or JSON {r:{c0,f}, p:{coords}}")
            p.add_argument("--M")
            p.add_argument("--a", type=int)
            p.add_argument("--m", type=int)
            p.add_argument("--general", action="store_true")
        elif name == "selftest":
            mode = p.add_mutually_exclusive_group()
            mode.add_argument("--quick", dest="full", action="store_false")
            mode.add_argument("--full", dest="full", action="store_true")
    return parser


def _table(obj):
    if isinstance(obj, dict) and "components" in obj:
        rows = obj["components"]
        head = ("square", "genus", "tuple", "eps", "phi")
        body = [(str(r["square"]), str(r["genus"]), "(" + ",".join(map(str, r["a"][:7])) + ";"
                 + ",".join(map(str, r["a"][7:])) + ")", str(r["epsilon"]), str(r["phi"])) for r in rows]
        widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h) for i, h in enumerate(head)]
        lines = [f"# {obj['assumption']}", "  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
        lines += ["  ".join(c.ljust(w) for c, w in zip(b, widths)).rstrip() for b in body]
        return "\n".join(lines)
    if isinstance(obj, dict) and "checks" in obj:
        lines = [f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}" for r in obj["checks"]]
        lines.append(f"{'PASSED' if obj['passed'] else 'FAILED'} ({obj['mode']})")
        return "\n".join(lines)
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(obj.items()))
    return json.dumps(obj, sort_keys=True)


def run(argv=None, stdout=None, stderr=None, environ=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = build_config(args, environ)
        result = COMMANDS[args.command](args, cfg)
    except (UsageError, ParseError) as e:
        code = getattr(e, "code", "UsageError")
        stderr.write(dumps({"error": {"code": code, "message": str(e)}}) + "\n")
        return 2
    except EnriquesError as e:
        stderr.write(dumps({"error": e.to_dict()}) + "\n")
        return 1
    if cfg.output == "table":
        stdout.write(_table(result) + "\n")
    else:
        stdout.write(dumps(result) + "\n")
    if args.command == "selftest" and not result["passed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
