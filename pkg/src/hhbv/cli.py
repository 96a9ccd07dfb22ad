"""Command-line front end.

    hhbv <command> --e <int> --N <int> --field <q|p:prime>
         [--max-degree <int>] [--format json|csv|md] [--out PATH] [args]

Commands: dims, basis, cup, bracket, delta, verify.  Elements are written
in the canonical generator grammar (x[k,i], y[k,j], v[k,j], u[l]) combined
with integer multiples and sums, e.g. "2*x[0,1] + y[0,1] - u[2]".

Exit codes: 0 success, 1 verification failure, 2 usage/regime error,
3 internal oracle inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .algebra import AlgebraParams
from .bv import criterion_check, delta_bar_oracle, delta_classes, verify_bv
from .cohomology import HHBasisElement, HHClass, HochschildCohomology
from .complexes import verify_chain_maps
from .fields import field_from_descriptor
from .products import (bracket, chain_jacobi_counterexample, cup,
                       bracket_classes, cup_classes, cup_closed,
                       verify_gerstenhaber, verify_presentation,
                       verify_products_closed, yoneda_lift_check)

MAX_DEGREE_GUARD = 10


class UsageError(Exception):
    pass


class OracleError(Exception):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<coeff>\d+)\s*\*"
                    r"|(?P<atom>[xyvu]\[\s*\d+\s*(?:,\s*\d+\s*)?\]))")


def parse_element(hh: HochschildCohomology, text: str) -> tuple[int, HHClass]:
    """Parse a linear combination of basis element names into (degree, class)."""
    pos = 0
    sign = 1
    coeff = None
    terms: list[tuple[object, HHBasisElement]] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse element expression at: {text[pos:]!r}")
        pos = m.end()
        if m.group("sign"):
            if coeff is not None:
                raise UsageError(f"dangling coefficient in {text!r}")
            if m.group("sign") == "-":
                sign = -sign
            continue
        if m.group("coeff"):
            coeff = int(m.group("coeff"))
            continue
        atom = m.group("atom")
        tag = atom[0]
        nums = [int(s) for s in re.findall(r"\d+", atom)]
        elem = _atom_element(hh, tag, nums)
        terms.append((sign * (coeff if coeff is not None else 1), elem))
        sign, coeff = 1, None
    if coeff is not None:
        raise UsageError(f"dangling coefficient in {text!r}")
    if not terms:
        raise UsageError(f"empty element expression {text!r}")
    degree = terms[0][1].degree
    if any(elem.degree != degree for _, elem in terms):
        raise UsageError(f"mixed degrees in {text!r}")
    out = hh.zero_class(degree)
    for c, elem in terms:
        out = hh.class_add(out, hh.class_of(elem), hh.par.field.of(c))
    return degree, out


def _atom_element(hh: HochschildCohomology, tag: str, nums: list[int]) -> HHBasisElement:
    par = hh.par
    if tag == "u":
        if len(nums) != 1:
            raise UsageError("u takes one index: u[l]")
        elem = HHBasisElement("u", 0, nums[0], par.N - 1)
    else:
        if len(nums) != 2:
            raise UsageError(f"{tag} takes two indices: {tag}[k,i]")
        k, i = nums
        degree = 2 * k if tag == "x" else 2 * k + 1
        elem = HHBasisElement(tag, degree, k, i)
    if elem not in hh.basis(elem.degree):
        names = ", ".join(b.name() for b in hh.basis(elem.degree))
        raise UsageError(f"{elem.name()} is not a basis element in this regime "
                         f"(degree {elem.degree} basis: {names or 'empty'})")
    return elem


def class_record(hh: HochschildCohomology, cls: HHClass):
    return {
        "degree": cls.degree,
        "result_coordinates": [str(c) for c in cls.coords],
        "result_basis": [b.name() for b in hh.basis(cls.degree)],
        "result_pretty": hh.pretty(cls),
    }


def base_record(par: AlgebraParams, command: str) -> dict:
    return {
        "command": command,
        "params": {"e": par.e, "N": par.N, "field": par.field.describe()},
        "regime": par.regime.presentation,
        "semisimple": par.regime.semisimple,
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_dims(hh: HochschildCohomology, args) -> tuple[dict, int]:
    record = base_record(hh.par, "dims")
    dims = [hh.dim(n) for n in range(args.max_degree + 1)]
    record["dims"] = dims
    record["formula_dims"] = [hh.dim_formula(n) for n in range(args.max_degree + 1)]
    record["oracle_checked"] = True  # dim() itself compares both routes
    return record, 0


def cmd_basis(hh: HochschildCohomology, args) -> tuple[dict, int]:
    record = base_record(hh.par, "basis")
    record["basis"] = {
        str(n): [b.name() for b in hh.basis(n)]
        for n in range(args.max_degree + 1)
    }
    return record, 0


def cmd_cup(hh: HochschildCohomology, args) -> tuple[dict, int]:
    par = hh.par
    da, ca = parse_element(hh, args.lhs)
    db, cb = parse_element(hh, args.rhs)
    closed = cup_classes(hh, ca, cb)
    generic = hh.reduce(cup(par, hh.class_rep(ca), hh.class_rep(cb)))
    record = base_record(par, "cup")
    record["lhs"], record["rhs"] = args.lhs, args.rhs
    record.update(class_record(hh, closed))
    record["oracle_checked"] = generic == closed
    if generic != closed:
        record["generic_pretty"] = hh.pretty(generic)
        raise OracleError(json.dumps(record, sort_keys=True))
    return record, 0


def cmd_bracket(hh: HochschildCohomology, args) -> tuple[dict, int]:
    par = hh.par
    da, ca = parse_element(hh, args.lhs)
    db, cb = parse_element(hh, args.rhs)
    if da + db < 1:
        raise UsageError("bracket of two degree-0 classes vanishes in degree -1")
    closed = bracket_classes(hh, ca, cb)
    generic = hh.reduce(bracket(par, hh.class_rep(ca), hh.class_rep(cb)))
    record = base_record(par, "bracket")
    record["lhs"], record["rhs"] = args.lhs, args.rhs
    record.update(class_record(hh, closed))
    record["oracle_checked"] = generic == closed
    if generic != closed:
        record["generic_pretty"] = hh.pretty(generic)
        raise OracleError(json.dumps(record, sort_keys=True))
    return record, 0


def cmd_delta(hh: HochschildCohomology, args) -> tuple[dict, int]:
    par = hh.par
    da, ca = parse_element(hh, args.lhs)
    closed = delta_classes(hh, ca)
    record = base_record(par, "delta")
    record["lhs"] = args.lhs
    record.update(class_record(hh, closed))
    checked = False
    if par.is_semisimple() and da >= 1:
        oracle = hh.zero_class(da - 1)
        for c, b in zip(ca.coords, hh.basis(da)):
            if c:
                oracle = hh.class_add(oracle, delta_bar_oracle(hh, b), c)
        checked = True
        if oracle != closed:
            record["generic_pretty"] = hh.pretty(oracle)
            record["oracle_checked"] = False
            raise OracleError(json.dumps(record, sort_keys=True))
    record["oracle_checked"] = checked
    return record, 0


def cmd_verify(hh: HochschildCohomology, args) -> tuple[dict, int]:
    par = hh.par
    record = base_record(par, f"verify {args.suite}")
    checks: list[dict] = []

    def add(name: str, failures: list[str], expected_failure: bool = False):
        ok = (not failures) if not expected_failure else bool(failures)
        checks.append({"check": name, "ok": ok,
                       "failures": failures if not expected_failure else []})

    deg = args.max_degree
    if args.chain_level:
        if args.suite != "gerstenhaber":
            raise UsageError("--chain-level applies to the gerstenhaber suite")
        if (par.e, par.N, par.field.char) != (2, 3, 2):
            raise UsageError("the recorded chain-level Jacobi witness lives at "
                             "e=2, N=3, char 2")
        ok, detail = chain_jacobi_counterexample(par)
        checks.append({"check": "chain-level Jacobi failure (expected)",
                       "ok": ok, "failures": [] if ok else [detail]})
    else:
        if args.suite in ("complexes", "all"):
            add("comparison chain maps + omega*mu = id", verify_chain_maps(par, min(deg, 5)))
        if args.suite in ("gerstenhaber", "all"):
            add("closed cup/bracket tables vs chain level",
                verify_products_closed(hh, deg))
            add("Gerstenhaber axioms on cohomology", verify_gerstenhaber(hh, deg))
            if par.field.char == 2 and par.N % 4 == 2 and par.d == 1:
                witness, _ = cup_closed(hh, hh.basis(1)[0],
                                        next(b for b in hh.basis(2 * par.I - 1)
                                             if b.i == 0))
                checks.append({"check": "odd cup odd nonzero witness (expected)",
                               "ok": not witness.is_zero(), "failures": []})
        if args.suite in ("presentation", "all"):
            add("ring presentation relations + normal forms",
                verify_presentation(hh, min(deg, 8)))
        if args.suite in ("bv", "all"):
            report = verify_bv(hh, deg)
            add("BV identity, Delta^2, duality oracle", report.failures)
        if args.suite in ("criterion", "all"):
            if par.is_semisimple():
                if args.suite == "criterion":
                    raise UsageError("criterion suite applies to nonsemisimple "
                                     "regimes; this one is semisimple")
                checks.append({"check": "nonsemisimple criterion",
                               "ok": True, "failures": [],
                               "skipped": "semisimple regime"})
            else:
                add("nonsemisimple criterion assumptions",
                    criterion_check(hh, deg))
        if args.suite == "all" and par.regime.top_even and par.e >= 2:
            add("Yoneda lifting vs cup", yoneda_lift_check(hh, min(deg, 5)))
    record["checks"] = checks
    ok = all(c["ok"] for c in checks)
    record["ok"] = ok
    return record, 0 if ok else 1


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    rows = []
    for rec in records:
        base = {
            "command": rec.get("command", ""),
            "e": rec["params"]["e"],
            "N": rec["params"]["N"],
            "field": rec["params"]["field"],
            "regime": rec.get("regime", ""),
        }
        if "checks" in rec:
            for c in rec["checks"]:
                rows.append({**base, "detail": c["check"],
                             "result": "pass" if c["ok"] else "FAIL"})
        elif "dims" in rec:
            rows.append({**base, "detail": "dims",
                         "result": " ".join(str(d) for d in rec["dims"])})
        elif "basis" in rec:
            for n, names in rec["basis"].items():
                rows.append({**base, "detail": f"degree {n}",
                             "result": " ".join(names) or "-"})
        else:
            detail = rec.get("lhs", "")
            if "rhs" in rec:
                detail += f" | {rec['rhs']}"
            rows.append({**base, "detail": detail,
                         "result": rec.get("result_pretty", "")})
    headers = ["command", "e", "N", "field", "regime", "detail", "result"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=headers, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    # markdown
    lines = ["| " + " | ".join(headers) + " |",
             "| " + " | ".join("---" for _ in headers) + " |"]
    for row in rows:
        lines.append("| " + " | ".join(str(row[h]) for h in headers) + " |")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhbv",
        description="Exact Hochschild cohomology of truncated cycle algebras: "
                    "dimensions, cup products, Gerstenhaber brackets and the "
                    "BV operator, with built-in cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--e", type=int, required=True, help="number of vertices")
        p.add_argument("--N", type=int, required=True, help="truncation length")
        p.add_argument("--field", required=True,
                       help="'q' for the rationals or 'p:<prime>'")
        p.add_argument("--max-degree", type=int, default=6)
        p.add_argument("--format", choices=("json", "csv", "md"), default="json")
        p.add_argument("--out", help="write the report to this path")
        p.add_argument("--grid", metavar="E1:E2,N1:N2",
                       help="iterate over a parameter rectangle (inclusive)")
        p.add_argument("--force", action="store_true",
                       help="allow max degrees above the guard")

    p = sub.add_parser("dims", help="cohomology dimensions per degree")
    common(p)
    p = sub.add_parser("basis", help="canonical basis element names per degree")
    common(p)
    p = sub.add_parser("cup", help="cup product of two classes")
    common(p)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p = sub.add_parser("bracket", help="Gerstenhaber bracket of two classes")
    common(p)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p = sub.add_parser("delta", help="BV operator on a class")
    common(p)
    p.add_argument("lhs")
    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("suite", choices=("complexes", "gerstenhaber",
                                     "presentation", "bv", "criterion", "all"))
    p.add_argument("--chain-level", action="store_true",
                   help="check the recorded chain-level Jacobi failure "
                        "(expected-failure semantics)")
    return parser


HANDLERS = {
    "dims": cmd_dims,
    "basis": cmd_basis,
    "cup": cmd_cup,
    "bracket": cmd_bracket,
    "delta": cmd_delta,
    "verify": cmd_verify,
}


def parse_grid(text: str) -> tuple[range, range]:
    m = re.fullmatch(r"(\d+):(\d+),(\d+):(\d+)", text)
    if not m:
        raise UsageError("--grid wants E1:E2,N1:N2")
    e1, e2, n1, n2 = (int(g) for g in m.groups())
    return range(e1, e2 + 1), range(n1, n2 + 1)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "chain_level"):
        args.chain_level = False
    try:
        if args.max_degree > MAX_DEGREE_GUARD and not args.force:
            raise UsageError(f"--max-degree {args.max_degree} exceeds the "
                             f"guard {MAX_DEGREE_GUARD}; pass --force to override")
        field = field_from_descriptor(args.field)
        if args.grid:
            es, ns = parse_grid(args.grid)
            points = [(e, N) for e in es for N in ns]
        else:
            points = [(args.e, args.N)]
        records = []
        worst = 0
        for e, N in points:
            par = AlgebraParams(e, N, field)
            hh = HochschildCohomology(par)
            record, code = HANDLERS[args.command](hh, args)
            records.append(record)
            worst = max(worst, code)
        text = render(records, args.format)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return worst
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleError as exc:
        print(f"internal oracle inconsistency: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
