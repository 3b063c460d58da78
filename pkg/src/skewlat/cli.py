"""Command line front end.

Configs are flat ``key = value`` text files; values are integers, bracketed
integer lists (possibly nested), or one of a few keywords.  Blank lines and
``#`` comments are allowed.  Required keys: p, min_poly, sigma_image, u.
Optional: conjugation_mode, assume_division, generator, bound, seed, box,
e_weight.

Commands: divisors, code, dual, lattice, stmatrix, mindet, coset-encode,
coset-decode, verify-examples.  Results go to stdout (plain tables by
default, machine-readable with --json), diagnostics to stderr.  Exit codes:
0 success, 1 domain error (with a stable error code), 2 usage error.
"""

from __future__ import annotations

import argparse
import ast
import json
import re
import sys
from dataclasses import dataclass

from .codes import ConstacyclicCode
from .errors import MissingKey, ParseError, SkewLatError, UnknownKey
from .fixtures import worked_example_checks
from .lattice import NaturalOrder, construction_a_basis, lift_codeword
from .number_ring import ENUMERATION_BOUND, AlgebraSpec, QuotientRing
from .skew import SkewPoly, monic_right_divisors
from .spacetime import coset_decode_label, coset_encode, matrix_rep, min_det_sample

_INT_KEYS = ("p", "u", "bound", "seed", "box", "e_weight")
_LIST_KEYS = ("min_poly", "sigma_image")
_NESTED_KEYS = ("generator",)
_WORD_KEYS = ("conjugation_mode",)
_BOOL_KEYS = ("assume_division",)
REQUIRED_KEYS = ("p", "min_poly", "sigma_image", "u")
KNOWN_KEYS = _INT_KEYS + _LIST_KEYS + _NESTED_KEYS + _WORD_KEYS + _BOOL_KEYS


@dataclass
class Config:
    p: int
    min_poly: list
    sigma_image: list
    u: int
    conjugation_mode: str = "complex"
    assume_division: bool = False
    generator: list | None = None
    bound: int = ENUMERATION_BOUND
    seed: int = 0
    box: int = 3
    e_weight: int = 1

    def spec(self) -> AlgebraSpec:
        return AlgebraSpec(
            min_poly=self.min_poly,
            sigma_image=self.sigma_image,
            u=self.u,
            p=self.p,
            conjugation_mode=self.conjugation_mode,
            assume_division=self.assume_division,
        )


def _parse_int_list(raw, lineno, nested=False):
    try:
        value = ast.literal_eval(raw)
    except (ValueError, SyntaxError):
        raise ParseError(f"line {lineno}: cannot parse list value {raw!r}") from None

    def check(v, depth):
        if isinstance(v, list):
            if depth == 0:
                raise ParseError(f"line {lineno}: list nesting too deep in {raw!r}")
            for item in v:
                check(item, depth - 1)
        elif not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"line {lineno}: expected integers in {raw!r}")

    if not isinstance(value, list):
        raise ParseError(f"line {lineno}: expected a bracketed list, got {raw!r}")
    check(value, 2 if nested else 1)
    return value


def parse_config(text: str) -> Config:
    """Parse config text; the first problem is reported with its line number."""
    values = {}
    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value', got {raw_line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise UnknownKey(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        if key in _INT_KEYS:
            try:
                values[key] = int(raw)
            except ValueError:
                raise ParseError(f"line {lineno}: {key} must be an integer") from None
        elif key in _LIST_KEYS:
            values[key] = _parse_int_list(raw, lineno)
        elif key in _NESTED_KEYS:
            values[key] = _parse_int_list(raw, lineno, nested=True)
        elif key in _WORD_KEYS:
            values[key] = raw
        else:
            lowered = raw.lower()
            if lowered in ("1", "true"):
                values[key] = True
            elif lowered in ("0", "false"):
                values[key] = False
            else:
                raise ParseError(f"line {lineno}: {key} must be 0/1 or true/false")
    for key in REQUIRED_KEYS:
        if key not in values:
            raise MissingKey(f"missing required key {key!r}")
    return Config(**values)


def serialize_config(cfg: Config) -> str:
    """Canonical text form; parse(serialize(parse(t))) == parse(t)."""
    lines = [
        f"p = {cfg.p}",
        f"min_poly = {list(cfg.min_poly)}",
        f"sigma_image = {list(cfg.sigma_image)}",
        f"u = {cfg.u}",
        f"conjugation_mode = {cfg.conjugation_mode}",
        f"assume_division = {1 if cfg.assume_division else 0}",
    ]
    if cfg.generator is not None:
        lines.append(f"generator = {cfg.generator}")
    lines += [
        f"bound = {cfg.bound}",
        f"seed = {cfg.seed}",
        f"box = {cfg.box}",
        f"e_weight = {cfg.e_weight}",
    ]
    return "\n".join(lines) + "\n"


def load_config(path: str) -> Config:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def error_code(exc: SkewLatError) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "_", type(exc).__name__).upper()


# -- command implementations ----------------------------------------------


def _ring(cfg: Config) -> QuotientRing:
    return QuotientRing(cfg.spec())


def _code(cfg: Config, ring: QuotientRing) -> ConstacyclicCode:
    if cfg.generator is None:
        raise MissingKey("missing required key 'generator' for this command")
    g = SkewPoly(ring, [ring.element(c) for c in cfg.generator])
    return ConstacyclicCode.from_generator(g)


def _parse_cli_list(raw: str, what: str, nested=False):
    try:
        return _parse_int_list(raw, 0, nested=nested)
    except ParseError:
        raise ParseError(f"cannot parse {what}: {raw!r}") from None


def cmd_divisors(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    divisors = monic_right_divisors(ring, ring.n, cfg.u, args.degree, bound=cfg.bound)
    return {
        "degree": args.degree,
        "count": len(divisors),
        "divisors": [d.to_lists() for d in divisors],
        "pretty": [str(d) for d in divisors],
    }


def cmd_code(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    out = code.to_dict()
    out["pretty"] = {"g": str(code.g), "h": str(code.h)}
    return out


def cmd_dual(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    gp = code.dual_generator()
    dual = code.dual_code()
    return {
        "g_perp": gp.to_lists(),
        "g_perp_monic": dual.g.to_lists(),
        "self_dual": code.is_self_dual(),
        "pretty": {"g_perp": str(gp), "g_perp_monic": str(dual.g)},
    }


def cmd_lattice(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    basis = construction_a_basis(code, e_weight=cfg.e_weight)
    return basis.to_dict()


def cmd_stmatrix(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    order = NaturalOrder(cfg.spec())
    if args.element:
        rows = _parse_cli_list(args.element, "--element", nested=True)
        element = order.element(rows)
    else:
        element = lift_codeword(order, code.to_codeword(code.g))
    matrix = matrix_rep(element)
    return {
        "element": element.to_lists(),
        "matrix": matrix.to_lists(),
        "norm_det": matrix.norm_det(),
        "pretty": str(element),
    }


def cmd_mindet(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    coeff_bound = args.coeff_bound
    space = (2 * coeff_bound + 1) ** (ring.n * ring.n)
    exhaustive = space <= cfg.bound
    value = min_det_sample(
        code,
        coeff_bound,
        seed=cfg.seed,
        samples=args.samples,
        enumeration_bound=cfg.bound,
    )
    return {
        "coeff_bound": coeff_bound,
        "mode": "exhaustive" if exhaustive else "sampled",
        "min_norm_det": value,
        "division_attested": bool(value > 0),
    }


def cmd_coset_encode(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    msg_lists = _parse_cli_list(args.msg, "--msg", nested=True)
    msg = [ring.element(c) for c in msg_lists]
    if args.offset:
        offset = _parse_cli_list(args.offset, "--offset", nested=False)
    else:
        offset = [0] * (ring.n * ring.n)
    enc = coset_encode(code, msg, offset)
    return enc.to_dict()


def cmd_coset_decode(cfg: Config, args) -> dict:
    ring = _ring(cfg)
    code = _code(cfg, ring)
    order = NaturalOrder(cfg.spec())
    rows = _parse_cli_list(args.point, "--point", nested=True)
    point = order.element(rows)
    codeword, offset = coset_decode_label(code, point)
    return {
        "codeword": [c.to_list() for c in codeword],
        "offset": offset.to_lists(),
    }


def cmd_verify_examples(cfg, args) -> dict:
    results = worked_example_checks()
    return {
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "passed": all(r.passed for r in results),
    }


# -- output formatting ------------------------------------------------------


def _print_matrix(rows, indent="  "):
    for row in rows:
        print(indent + " ".join(f"{v:>6}" for v in row))


def _print_human(command: str, payload: dict):
    if command == "divisors":
        print(f"monic right divisors of degree {payload['degree']}: {payload['count']}")
        for pretty, coeffs in zip(payload["pretty"], payload["divisors"]):
            print(f"  {pretty:<24} {coeffs}")
    elif command == "code":
        print(f"n = {payload['n']}  k = {payload['k']}  u = {payload['u']}")
        print(f"g = {payload['pretty']['g']}")
        print(f"h = {payload['pretty']['h']}")
    elif command == "dual":
        print(f"g_perp       = {payload['pretty']['g_perp']}")
        print(f"g_perp_monic = {payload['pretty']['g_perp_monic']}")
        print(f"self_dual    = {str(payload['self_dual']).lower()}")
    elif command == "lattice":
        print(f"index = {payload['index']}  gram_det = {payload['det']}")
        print("basis (columns generate):")
        _print_matrix(payload["basis"])
        print("gram:")
        _print_matrix(payload["gram"])
    elif command == "stmatrix":
        print(f"element = {payload['pretty']}")
        print("matrix (entries are coordinate vectors):")
        for row in payload["matrix"]:
            print("  " + "  ".join(str(e) for e in row))
        print(f"norm_det = {payload['norm_det']}")
    elif command == "mindet":
        print(
            f"min |norm det| = {payload['min_norm_det']} "
            f"({payload['mode']}, coeff_bound {payload['coeff_bound']})"
        )
    elif command == "coset-encode":
        print(f"codeword = {payload['codeword']}")
        print(f"offset   = {payload['offset']}")
        print(f"point    = {payload['point']}")
    elif command == "coset-decode":
        print(f"codeword = {payload['codeword']}")
        print(f"offset   = {payload['offset']}")
    elif command == "verify-examples":
        for check in payload["checks"]:
            status = "PASS" if check["passed"] else "FAIL"
            print(f"{status} {check['name']}: {check['detail']}")
        print("all checks passed" if payload["passed"] else "SOME CHECKS FAILED")


_HANDLERS = {
    "divisors": cmd_divisors,
    "code": cmd_code,
    "dual": cmd_dual,
    "lattice": cmd_lattice,
    "stmatrix": cmd_stmatrix,
    "mindet": cmd_mindet,
    "coset-encode": cmd_coset_encode,
    "coset-decode": cmd_coset_decode,
    "verify-examples": cmd_verify_examples,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlat",
        description="Constacyclic codes over skew polynomial quotients and their lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_config=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=needs_config, help="path to a config file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--bound", type=int, help="enumeration bound override")
        p.add_argument("--seed", type=int, help="random seed override")
        return p

    p = add("divisors", "list monic right divisors of x^n - u")
    p.add_argument("--degree", type=int, required=True)
    add("code", "build the code of the configured generator")
    add("dual", "dual generator and self-duality of the configured code")
    p = add("lattice", "Construction A basis, Gram matrix, determinant, index")
    p = add("stmatrix", "matrix representation of an order element")
    p.add_argument("--element", help="row-major coordinate matrix, e.g. [[1,1],[1,0]]")
    p = add("mindet", "minimum |norm det| over sampled pairs of lattice points")
    p.add_argument("--coeff-bound", type=int, default=1)
    p.add_argument("--samples", type=int, default=2000)
    p = add("coset-encode", "encode (message, offset) to a lattice point")
    p.add_argument("--msg", required=True, help="message symbols, e.g. [[1,0]]")
    p.add_argument("--offset", help="integer offset coordinates, e.g. [1,0,0,0]")
    p = add("coset-decode", "split a lattice point into codeword and offset")
    p.add_argument("--point", required=True, help="row-major coordinate matrix")
    add("verify-examples", "replay the bundled worked examples", needs_config=False)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "verify-examples":
            cfg = None
        else:
            cfg = load_config(args.config)
            if args.bound is not None:
                cfg.bound = args.bound
            if args.seed is not None:
                cfg.seed = args.seed
        payload = _HANDLERS[args.command](cfg, args)
    except SkewLatError as exc:
        print(f"error[{error_code(exc)}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error[IO]: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = dict(payload)
        payload.pop("pretty", None)
        print(json.dumps(payload))
    else:
        _print_human(args.command, payload)
    if args.command == "verify-examples" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
