"""Command-line front end.

Every command reads module files (``-`` for stdin) and prints its result as a
module file preceded by ``#`` summary lines, so outputs can be fed back in.
``--json`` prints one JSON document instead.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 precondition violation, 4 enumeration guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .duality import dual, intersect, sum_modules, verify_dimension_identities
from .errors import DimensionMismatch, NotASubmoduleOf, TooLarge
from .fileformat import ParseError, format_module, format_row, load_module, parse_vector
from .module import GeneratorSet, Submodule
from .pbasis import extend_p_basis, p_basis, p_coordinates, socle

EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION, EXIT_GUARD = 1, 2, 3, 4


def _read(path, stdin):
    if path == "-":
        return stdin.read(), "<stdin>"
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as exc:
        raise ParseError(path, 0, exc.strerror or str(exc)) from None


def _load(path, stdin):
    text, source = _read(path, stdin)
    return load_module(text, source)


def _summary(m: Submodule):
    return {
        "k": list(m.k),
        "k_total": sum(m.k),
        "cardinality": m.cardinality,
        "p_dim": m.p_dimension,
    }


def _summary_lines(m: Submodule):
    s = _summary(m)
    return [
        "k: " + format_row(s["k"]),
        f"k(M): {s['k_total']}",
        f"|M|: {s['cardinality']}",
        f"p-dim: {s['p_dim']}",
    ]


def _module_doc(title, m: Submodule, **extra):
    doc = {"command": title, "p": m.ring.p, "r": m.ring.r, "n": m.n,
           "rows": [list(g) for g in m.generators]}
    doc.update(_summary(m))
    doc.update(extra)
    return doc


def _emit_module(args, title, m: Submodule, extra_lines=(), **extra):
    if args.json:
        return _module_doc(title, m, **extra)
    comments = [title] + _summary_lines(m) + list(extra_lines)
    return format_module(m.ring, m.n, m.generators, comments)


def cmd_standard_form(args, stdin):
    m = _load(args.file, stdin)
    perm = [c + 1 for c in m.sf.permutation]
    if args.json:
        return _module_doc("standard-form", m, permutation=perm,
                           matrix=[list(row) for row in m.sf.rows])
    extra = ["permutation (standard column j is original column): " + format_row(perm),
             "matrix in permuted columns:"]
    extra += ["  " + format_row(row) for row in m.sf.rows]
    return _emit_module(args, "standard-form", m, extra)


def _emit_basis(args, title, m, basis, extra_lines=()):
    if args.json:
        return {"command": title, "p": m.ring.p, "r": m.ring.r, "n": m.n,
                "basis": [list(v) for v in basis.vectors], "p_dim": basis.pdim}
    comments = [title, f"p-dim: {basis.pdim}"] + list(extra_lines)
    return format_module(m.ring, m.n, basis.vectors, comments)


def cmd_pbasis(args, stdin):
    m = _load(args.file, stdin)
    return _emit_basis(args, "pbasis", m, p_basis(m))


def cmd_dual(args, stdin):
    return _emit_module(args, "dual", dual(_load(args.file, stdin)))


def cmd_socle(args, stdin):
    return _emit_module(args, "socle", socle(_load(args.file, stdin)))


def cmd_member(args, stdin):
    m = _load(args.file, stdin)
    v = parse_vector(args.vector, m.ring, m.n)
    basis = p_basis(m)
    digits = p_coordinates(basis, v)
    if args.json:
        return {"command": "member", "vector": list(v), "member": digits is not None,
                "digits": None if digits is None else list(digits),
                "basis": [list(b) for b in basis.vectors]}
    lines = ["# member: " + format_row(v), "# p-basis (digits refer to these vectors, in order):"]
    lines += ["#   " + format_row(b) for b in basis.vectors]
    lines.append("not a member" if digits is None else "member: " + format_row(digits))
    return "\n".join(lines) + "\n"


def _load_pair(args, stdin):
    a = _load(args.file_a, stdin)
    b = _load(args.file_b, stdin)
    if a.ring != b.ring or a.n != b.n:
        raise DimensionMismatch(f"ambient spaces differ: {a.ring}^{a.n} vs {b.ring}^{b.n}")
    return a, b


def cmd_sum(args, stdin):
    a, b = _load_pair(args, stdin)
    return _emit_module(args, "sum", sum_modules(a, b))


def cmd_intersect(args, stdin):
    a, b = _load_pair(args, stdin)
    return _emit_module(args, "intersect", intersect(a, b))


def cmd_extend(args, stdin):
    sub, m = _load_pair(args, stdin)
    sub_basis = p_basis(sub)
    basis = extend_p_basis(sub_basis, m)
    return _emit_basis(args, "extend", m, basis,
                       [f"contains the {sub_basis.pdim} vectors of the sub-module's p-basis"])


def cmd_verify(args, stdin):
    m = _load(args.file, stdin)
    rep = verify_dimension_identities(m)
    status = 0 if rep.ok else EXIT_VERIFY
    if args.json:
        checks = [{"identity": label, "lhs": lhs, "rhs": rhs, "ok": ok}
                  for label, (lhs, rhs, ok) in rep.checks.items()]
        return {"command": "verify", "ok": rep.ok, "checks": checks}, status
    lines = ["# verify"] + ["# " + line for line in _summary_lines(m)] + list(rep.lines())
    lines.append("all identities hold" if rep.ok else "identity violated")
    return "\n".join(lines) + "\n", status


def cmd_enumerate(args, stdin):
    m = _load(args.file, stdin)
    guard = oracle.EnumerationGuard(args.max_states)
    guard.check(m.cardinality)
    elems = oracle.enumerate_span(GeneratorSet(m.ring, m.n, m.generators), guard)
    if args.json:
        return {"command": "enumerate", "p": m.ring.p, "r": m.ring.r, "n": m.n,
                "cardinality": len(elems), "elements": [list(e) for e in elems]}
    return format_module(m.ring, m.n, elems, ["enumerate", f"|M|: {len(elems)}"])


COMMANDS = {
    "standard-form": (cmd_standard_form, ["file"], "standard-form generator matrix and parameters"),
    "pbasis": (cmd_pbasis, ["file"], "an ordered p-basis"),
    "dual": (cmd_dual, ["file"], "the dual module"),
    "socle": (cmd_socle, ["file"], "the socle {v in M : p v = 0}"),
    "member": (cmd_member, ["file", "vector"], "digit coordinates of a vector, or 'not a member'"),
    "sum": (cmd_sum, ["file_a", "file_b"], "sum of two modules"),
    "intersect": (cmd_intersect, ["file_a", "file_b"], "intersection of two modules"),
    "extend": (cmd_extend, ["file_a", "file_b"], "extend a p-basis of the first module to the second"),
    "verify": (cmd_verify, ["file"], "check the dual cardinality/dimension/parameter identities"),
    "enumerate": (cmd_enumerate, ["file"], "list every element (guarded by --max-states)"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a single JSON document")
    common.add_argument("--max-states", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="enumeration guard for 'enumerate' (default 65536)")
    parser = argparse.ArgumentParser(prog="zpr", parents=[common],
                                     description="Submodules of (Z/p^r)^n and their p-bases.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, params, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for param in params:
            sp.add_argument(param)
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.max_states = getattr(args, "max_states", oracle.DEFAULT_GUARD.max_states)
    func = COMMANDS[args.command][0]
    try:
        result = func(args, stdin)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except (DimensionMismatch, NotASubmoduleOf) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except TooLarge as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_GUARD
    status = 0
    if isinstance(result, tuple):
        result, status = result
    if args.json:
        result = json.dumps(result, sort_keys=True) + "\n"
    stdout.write(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
