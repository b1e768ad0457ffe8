"""Command line entry point: ``formalfj <group> <command> ...``."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass, field

from . import serialize
from .cyclotomic import frac_str, parse_frac
from .errors import FormalFJError, IncompatibleShapes
from .fjseries import (
    FormalFJSeries,
    fj_invert,
    fj_is_symmetric,
    fj_meromorphic_expansion,
    fj_pair,
    fj_tensor,
    validate_fj,
)
from .jacobi import jacobi_basis
from .lattice import EvenLattice, discriminant_form, read_gram
from .linalg import mat_identity, mat_to_json
from .representation import (
    DiscriminantForm,
    Representation,
    rep_trivial,
    rep_weil_genus2,
    verify_weil_genus1,
    weil_rep_genus1,
)
from .siegel import expected_dimension, symmetric_space

LIMITS = {"M": 32, "N": 64, "max_k": 40, "index": 32}


@dataclass
class RunConfig:
    command: str
    weight: str = None
    index: int = None
    M: int = None
    N: int = None
    rep: str = "trivial"
    sigma: str = None
    paths: list = field(default_factory=list)
    out: str = None
    manifest: str = None
    max_k: int = None
    stabilize: bool = True
    max_steps: int = 3
    signature: list = None
    verify: bool = False

    def check(self):
        for name, cap in LIMITS.items():
            v = getattr(self, name)
            if v is not None and not 0 <= v <= cap:
                raise ValueError("%s=%s outside [0, %d]" % (name, v, cap))
        if self.weight is not None:
            k = parse_frac(self.weight)
            if (2 * k).denominator != 1:
                raise ValueError("weight must be half-integral, got %s" % self.weight)
        return self

    def to_json(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_json(cls, obj):
        return cls(**obj)


# -- representation references -----------------------------------------------------


def resolve_rep(ref):
    """'trivial', 'trivial^d', 'sign', 'weil2:<gram file>' or a JSON file."""
    if ref in (None, "trivial"):
        return rep_trivial()
    if ref.startswith("trivial^"):
        return rep_trivial(int(ref.split("^", 1)[1]))
    if ref == "sign":
        one = mat_identity(1)
        return Representation([[-1]], one, one, 2, "sign")
    if ref.startswith("weil2:"):
        with open(ref[6:]) as fh:
            return rep_weil_genus2(discriminant_form(EvenLattice(read_gram(fh.read()))))
    obj = _load_json(ref)
    return Representation.from_json(obj.get("data", obj) if "kind" in obj else obj)


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _load(path, inputs):
    with open(path, "rb") as fh:
        raw = fh.read()
    inputs[path] = serialize.digest(raw)
    return serialize.from_text(raw.decode("ascii"))


def _series_list(obj):
    if isinstance(obj, FormalFJSeries):
        return [obj]
    if isinstance(obj, list) and all(isinstance(x, FormalFJSeries) for x in obj):
        return obj
    raise IncompatibleShapes("expected a formal Fourier-Jacobi series artifact")


def _single_series(obj):
    items = _series_list(obj)
    if len(items) != 1:
        raise IncompatibleShapes("expected one series, found %d" % len(items))
    return items[0]


# -- commands ----------------------------------------------------------------------


def cmd_jacobi_basis(cfg, inputs):
    basis = jacobi_basis(parse_frac(cfg.weight), cfg.index, cfg.N + 1)
    return basis, "jacobi_basis", {"k": cfg.weight, "m": cfg.index, "N": cfg.N}


def cmd_fj_check(cfg, inputs):
    results = []
    for f in _series_list(_load(cfg.paths[0], inputs)):
        sym = fj_is_symmetric(f)
        report = validate_fj(f)
        results.append({"symmetric": sym.symmetric, "symmetry": sym.to_json(),
                        "valid": report.passed, "violations": report.to_json()["violations"]})
    data = {"symmetric": all(r["symmetric"] for r in results),
            "valid": all(r["valid"] for r in results), "series": results}
    return data, "fj_check", {}


def cmd_fj_tensor(cfg, inputs):
    f = _single_series(_load(cfg.paths[0], inputs))
    g = _single_series(_load(cfg.paths[1], inputs))
    out = fj_tensor(f, g)
    return out, "fj_series", {"M": frac_str(out.M), "N": frac_str(out.qprec)}


def cmd_fj_pair(cfg, inputs):
    g = _single_series(_load(cfg.paths[0], inputs))
    f = _single_series(_load(cfg.paths[1], inputs))
    sigma = resolve_rep(cfg.sigma) if cfg.sigma else rep_trivial(g.rep.dim // f.rep.dim)
    out = fj_pair(g, f, sigma)
    return out, "fj_series", {"M": frac_str(out.M), "N": frac_str(out.qprec)}


def cmd_fj_invert(cfg, inputs):
    out = fj_invert(_single_series(_load(cfg.paths[0], inputs)))
    return out, "meromorphic_fj", {"M": frac_str(out.M)}


def cmd_fj_quotient(cfg, inputs):
    g = _single_series(_load(cfg.paths[0], inputs))
    h = _single_series(_load(cfg.paths[1], inputs))
    out = fj_meromorphic_expansion(g, h)
    return out, "meromorphic_fj", {"M": frac_str(out.M)}


def cmd_siegel_solve(cfg, inputs):
    rho = resolve_rep(cfg.rep)
    res = symmetric_space(parse_frac(cfg.weight), rho, cfg.M, cfg.N, cfg.stabilize, cfg.max_steps)
    manifest = dict(res.manifest)
    manifest["rep"] = cfg.rep
    timing = {"seconds": manifest.pop("seconds")}
    params = {"k": cfg.weight, "rep": cfg.rep, "M": manifest["M"], "N": manifest["N"],
              "dimension": res.dimension, "solver": manifest}
    return res.basis, "fj_basis", params, timing


def cmd_siegel_dims(cfg, inputs):
    rows = []
    for k in range(0, cfg.max_k + 1, 2):
        row = {"k": k, "expected": expected_dimension(k)}
        if cfg.verify:
            row["solved"] = symmetric_space(k, None, cfg.M or 6, cfg.N or 8).dimension
        rows.append(row)
    data = {"dims": rows}
    if cfg.verify:
        data["match"] = all(r["solved"] == r["expected"] for r in rows)
    return data, "siegel_dims", {"max_k": cfg.max_k}


def cmd_lattice_disc(cfg, inputs):
    with open(cfg.paths[0], "rb") as fh:
        raw = fh.read()
    inputs[cfg.paths[0]] = serialize.digest(raw)
    L = EvenLattice(read_gram(raw.decode()), cfg.signature)
    return discriminant_form(L), "discriminant_form", {"gram": L.gram,
                                                       "signature": list(L.signature)}


def cmd_weil_genus1(cfg, inputs):
    with open(cfg.paths[0], "rb") as fh:
        raw = fh.read()
    inputs[cfg.paths[0]] = serialize.digest(raw)
    obj = json.loads(raw)
    D = DiscriminantForm.from_json(obj["data"] if "kind" in obj else obj)
    S, T = weil_rep_genus1(D)
    report = verify_weil_genus1(S, T)
    data = {"basis": [list(x) for x in D.elements()], "S": mat_to_json(S), "T": mat_to_json(T),
            "checks": report.to_json()}
    return data, "weil_genus1", {"order": D.order()}


COMMANDS = {
    "jacobi basis": cmd_jacobi_basis,
    "fj check": cmd_fj_check,
    "fj tensor": cmd_fj_tensor,
    "fj pair": cmd_fj_pair,
    "fj invert": cmd_fj_invert,
    "fj quotient": cmd_fj_quotient,
    "siegel solve": cmd_siegel_solve,
    "siegel dims": cmd_siegel_dims,
    "lattice disc": cmd_lattice_disc,
    "weil genus1": cmd_weil_genus1,
}


# -- argument parsing --------------------------------------------------------------


def _common(p):
    p.add_argument("-o", "--out", help="write the artifact here instead of stdout")
    p.add_argument("--manifest", help="manifest path (default: OUT.manifest.json or stderr)")


def build_parser():
    parser = argparse.ArgumentParser(prog="formalfj", description=__doc__)
    groups = parser.add_subparsers(dest="group", required=True)

    jac = groups.add_parser("jacobi").add_subparsers(dest="action", required=True)
    p = jac.add_parser("basis", help="basis of J_{k,m}")
    p.add_argument("-k", dest="weight", required=True)
    p.add_argument("-m", dest="index", type=int, required=True)
    p.add_argument("-N", type=int, default=5, help="q-orders n <= N are kept")
    _common(p)

    fj = groups.add_parser("fj").add_subparsers(dest="action", required=True)
    for name, nargs in (("check", 1), ("tensor", 2), ("pair", 2), ("invert", 1), ("quotient", 2)):
        p = fj.add_parser(name)
        p.add_argument("paths", nargs=nargs)
        if name == "pair":
            p.add_argument("--sigma", help="target representation (default trivial^d)")
        _common(p)

    sg = groups.add_parser("siegel").add_subparsers(dest="action", required=True)
    p = sg.add_parser("solve", help="symmetric formal Fourier-Jacobi series")
    p.add_argument("-k", dest="weight", required=True)
    p.add_argument("-M", type=int, default=6)
    p.add_argument("-N", type=int, default=8)
    p.add_argument("--rep", default="trivial")
    p.add_argument("--stabilize", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--max-steps", type=int, default=3)
    _common(p)
    p = sg.add_parser("dims", help="expected dimensions of scalar Siegel forms")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="also run the solver")
    p.add_argument("-M", type=int)
    p.add_argument("-N", type=int)
    _common(p)

    lat = groups.add_parser("lattice").add_subparsers(dest="action", required=True)
    p = lat.add_parser("disc", help="discriminant form of an even lattice")
    p.add_argument("paths", nargs=1, metavar="gram")
    p.add_argument("--signature", type=int, nargs=2)
    _common(p)

    weil = groups.add_parser("weil").add_subparsers(dest="action", required=True)
    p = weil.add_parser("genus1", help="S and T under the Weil representation")
    p.add_argument("paths", nargs=1, metavar="disc")
    _common(p)
    return parser


def config_from_args(args):
    names = {f.name for f in dataclasses.fields(RunConfig)}
    values = {k: v for k, v in vars(args).items() if k in names and v is not None}
    return RunConfig(command="%s %s" % (args.group, args.action), **values).check()


def run(cfg, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    start = time.perf_counter()
    inputs = {}
    result = COMMANDS[cfg.command](cfg, inputs)
    obj, kind, params = result[:3]
    extra = result[3] if len(result) > 3 else {}
    text = serialize.to_text(obj, kind, params)
    if cfg.out:
        with open(cfg.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    manifest = {
        "command": cfg.command,
        "config": cfg.to_json(),
        "version": serialize.VERSION,
        "inputs": dict(sorted(inputs.items())),
        "output": serialize.digest(text),
        "seconds": round(time.perf_counter() - start, 3),
    }
    manifest.update(extra)
    mtext = serialize.dumps(manifest)
    path = cfg.manifest or (cfg.out + ".manifest.json" if cfg.out else None)
    if path:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(mtext)
    else:
        stderr.write(mtext)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(config_from_args(args))
    except FormalFJError as exc:
        sys.stderr.write(serialize.dumps(exc.to_json()))
        return 1
    except (ValueError, OSError, KeyError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(serialize.dumps(err))
        return 1


if __name__ == "__main__":
    sys.exit(main())
