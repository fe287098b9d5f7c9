"""Command-line interface.

Exit codes: 0 completed, 2 parse error, 3 precondition violation,
4 size guard tripped. Vertex numbers in reports are 1-based like the files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .certificates import extract_no_certificate, make_irreducible_path, make_irreducible_splitco
from .errors import EnvelopeExceeded, ParseError, PreconditionError
from .formats import parse_dimacs_cnf, parse_instance, write_dimacs_cnf, write_instance
from .graphs import GraphClass, recognize
from .kernelize import (
    Envelope,
    VcKernelEncoding,
    decode_vc_kernel,
    dominated_kernelize_3col,
    encode_vc_kernel,
    generic_kernelize,
    vc_kernelize,
)
from .listsolvers import (
    is_dominating,
    solve_cochordal_union,
    solve_cograph,
    solve_dominated_3col,
    solve_split_union,
    solve_two_list,
    solve_windmill,
)
from .oracle import Decision, Instance, brute_force_list_color
from .reductions import (
    cnf_to_3col_linforest,
    connect_to_single_path,
    naesat_to_qcol,
    pad_clauses,
    qcnf_to_naesat,
    tcnf_via_irreducible,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_ENVELOPE = 0, 2, 3, 4
ORACLE_MAX_N = 22


@dataclass
class ResultReport:
    command: str
    answer: str = "N-A"
    coloring: list | None = None
    certificate: list | None = None
    stats: dict = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "answer": self.answer,
            "coloring": self.coloring,
            "certificate": self.certificate,
            "stats": self.stats,
            "parameters": self.parameters,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        p = self.parameters
        lines = [f"command: {self.command}", f"answer: {self.answer}"]
        lines.append("parameters: " + " ".join(f"{key}={p[key]}" for key in ("n", "m", "q", "k") if key in p))
        if self.coloring is not None:
            lines.append("coloring: " + " ".join(map(str, self.coloring)))
        if self.certificate is not None:
            lines.append("certificate: " + " ".join(map(str, self.certificate)))
        if self.stats:
            lines.append("stats: " + " ".join(f"{key}={self.stats[key]}" for key in sorted(self.stats)))
        return "\n".join(lines)


def instance_parameters(inst: Instance) -> dict:
    return {"n": inst.n, "m": inst.graph.m, "q": inst.q, "k": inst.k}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_instance(path: str) -> Instance:
    return parse_instance(_read_text(path))


# ---------------------------------------------------------------------------
# solving


def _solve_independent(inst: Instance) -> Decision:
    coloring = []
    for s in inst.lists:
        if not s:
            return Decision(False)
        coloring.append(min(s))
    return Decision(True, tuple(coloring))


_CLASS_SOLVERS = (
    (GraphClass.INDEPENDENT, _solve_independent),
    (GraphClass.SPLIT_UNION, solve_split_union),
    (GraphClass.COCHORDAL_UNION, solve_cochordal_union),
    (GraphClass.COGRAPH, solve_cograph),
    (GraphClass.WINDMILL, solve_windmill),
)


def solve_instance(inst: Instance, force: bool = False) -> tuple[Decision, str]:
    """Pick a solver: lists of size <= 2, a recognized class, a dominating
    modulator for 3-coloring, and finally the oracle (guarded by size)."""
    if all(len(s) <= 2 for s in inst.lists):
        return solve_two_list(inst), "two-list"
    for cls, solver in _CLASS_SOLVERS:
        if recognize(inst.graph, cls).member:
            return solver(inst), cls.value
    if inst.q == 3 and inst.full_lists and inst.modulator and is_dominating(inst.graph, inst.modulator):
        return solve_dominated_3col(inst.graph, inst.modulator), "dominating-set"
    if inst.n > ORACLE_MAX_N and not force:
        raise EnvelopeExceeded(
            f"oracle fallback refuses n={inst.n} > {ORACLE_MAX_N}; pass --force to run anyway"
        )
    return brute_force_list_color(inst), "oracle"


def cmd_solve(args) -> tuple[ResultReport, str | None]:
    inst = _read_instance(args.instance)
    dec, solver = solve_instance(inst, force=args.force)
    stats = dict(dec.stats, solver=solver)
    coloring = list(dec.coloring) if dec.yes else None
    return ResultReport("solve", dec.answer, coloring, None, stats, instance_parameters(inst)), None


def cmd_certify_no(args):
    inst = _read_instance(args.instance)
    cert = extract_no_certificate(inst, GraphClass.parse(args.cls))
    stats = {"size": len(cert.vertices), "bound": int(cert.bound)}
    verts = [v + 1 for v in cert.vertices]
    return ResultReport("certify-no", "NO", None, verts, stats, instance_parameters(inst)), None


def cmd_verify_equiv(args):
    a, b = _read_instance(args.first), _read_instance(args.second)
    da, db = brute_force_list_color(a), brute_force_list_color(b)
    same = da.yes == db.yes
    stats = {"first": da.answer, "second": db.answer}
    return ResultReport("verify-equiv", "YES" if same else "NO", None, None, stats, instance_parameters(a)), None


# ---------------------------------------------------------------------------
# kernels


def cmd_kernelize(args):
    inst = _read_instance(args.instance)
    cls = GraphClass.parse(args.cls)
    env = Envelope(
        max_g=args.max_g if args.max_g is not None else (7 if args.method == "dominated" else 5),
        max_k=args.max_k if args.max_k is not None else 4,
        max_n=args.max_n if args.max_n is not None else 30,
    )
    marking = "fast" if args.fast else "faithful"
    if args.method == "vc":
        if cls is not GraphClass.INDEPENDENT:
            raise PreconditionError("the vc method needs --class independent")
        res = vc_kernelize(inst)
    elif args.method == "dominated":
        if cls is not GraphClass.DOMINATED:
            raise PreconditionError("the dominated method needs --class dominated")
        res = dominated_kernelize_3col(inst, method=marking, envelope=env)
    else:
        res = generic_kernelize(inst, cls, method=marking, envelope=env)
    stats = dict(res.stats)
    stats.update(input_n=inst.n, input_m=inst.graph.m)
    return ResultReport("kernelize", "N-A", None, None, stats, instance_parameters(res.instance)), write_instance(res.instance)


def cmd_encode_vc(args):
    inst = _read_instance(args.instance)
    kernel = vc_kernelize(inst).instance
    enc = encode_vc_kernel(kernel)
    stats = {"payload_bits": enc.payload_bits, "bytes": len(enc.to_bytes())}
    return ResultReport("encode-vc", "N-A", None, None, stats, instance_parameters(kernel)), enc.to_bytes()


def cmd_decode_vc(args):
    if args.encoding == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(args.encoding, "rb") as fh:
            data = fh.read()
    try:
        enc = VcKernelEncoding.from_bytes(data)
        inst = decode_vc_kernel(enc)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    stats = {"payload_bits": enc.payload_bits}
    return ResultReport("decode-vc", "N-A", None, None, stats, instance_parameters(inst)), write_instance(inst)


# ---------------------------------------------------------------------------
# reductions and generators


def _formula_parameters(phi) -> dict:
    return {"n": phi.n, "m": phi.m, "q": None, "k": None}


def cmd_reduce(args):
    phi = parse_dimacs_cnf(_read_text(args.formula))
    stats = {"variables": phi.n, "clauses": phi.m}
    if args.kind == "cnf-to-nae":
        out = qcnf_to_naesat(phi)
        return ResultReport("reduce", "N-A", None, None, stats, _formula_parameters(out)), write_dimacs_cnf(out)
    if args.kind == "cnf-to-3col":
        inst = cnf_to_3col_linforest(phi)
        if args.single_path:
            inst = connect_to_single_path(inst)
    elif args.kind == "nae-to-col":
        inst = naesat_to_qcol(phi, args.q)
    else:
        hard = _read_instance(args.hard)
        if args.pad:
            phi = pad_clauses(phi, hard.n)
        inst = tcnf_via_irreducible(phi, hard)
    return ResultReport("reduce", "N-A", None, None, stats, instance_parameters(inst)), write_instance(inst)


def cmd_gen(args):
    if args.kind == "path-irreducible":
        inst = make_irreducible_path(args.t)
    else:
        inst = make_irreducible_splitco(args.q)
    return ResultReport("gen", "N-A", None, None, {}, instance_parameters(inst)), write_instance(inst)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("-o", "--output", help="write produced instance/encoding here (default stdout)")

    parser = argparse.ArgumentParser(prog="colorkernels", description="q-coloring kernels, solvers and reductions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="decide an instance")
    p.add_argument("instance")
    p.add_argument("--force", action="store_true", help="allow the oracle on large graphs")
    p.set_defaults(func=cmd_solve)

    classes = [c.value for c in GraphClass]
    p = sub.add_parser("kernelize", parents=[common], help="shrink a q-COLORING instance")
    p.add_argument("instance")
    p.add_argument("--class", dest="cls", required=True, choices=classes)
    p.add_argument("--method", choices=("generic", "vc", "dominated"), default="generic")
    p.add_argument("--fast", action="store_true", help="exact-trace marking (keeps more vertices)")
    p.add_argument("--max-g", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("certify-no", parents=[common], help="small NO-subinstance")
    p.add_argument("instance")
    p.add_argument("--class", dest="cls", required=True, choices=classes)
    p.set_defaults(func=cmd_certify_no)

    p = sub.add_parser("reduce", parents=[common], help="SAT to coloring transformations")
    p.add_argument("kind", choices=("cnf-to-3col", "cnf-to-nae", "nae-to-col", "lowerbound"))
    p.add_argument("formula", help="DIMACS CNF file")
    p.add_argument("--single-path", action="store_true", help="cnf-to-3col: join the remainder into one path")
    p.add_argument("--q", type=int, default=3, help="nae-to-col: number of colors")
    p.add_argument("--hard", help="lowerbound: irreducible NO-instance file")
    p.add_argument("--pad", action="store_true", help="lowerbound: pad short clauses")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", parents=[common], help="irreducible NO-instances")
    p.add_argument("kind", choices=("path-irreducible", "splitco-irreducible"))
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode-vc", parents=[common], help="bit encoding of the vertex-cover kernel")
    p.add_argument("instance")
    p.set_defaults(func=cmd_encode_vc)

    p = sub.add_parser("decode-vc", parents=[common], help="instance from a vertex-cover encoding")
    p.add_argument("encoding")
    p.set_defaults(func=cmd_decode_vc)

    p = sub.add_parser("verify-equiv", parents=[common], help="check two instances have the same answer")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_verify_equiv)
    return parser


def _emit_payload(payload, output: str | None):
    if output:
        mode = "wb" if isinstance(payload, bytes) else "w"
        with open(output, mode) as fh:
            fh.write(payload)
    elif isinstance(payload, bytes):
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    else:
        sys.stdout.write(payload)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "reduce" and args.kind == "lowerbound" and not args.hard:
        parser.error("reduce lowerbound needs --hard FILE")
    try:
        report, payload = args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EnvelopeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENVELOPE
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = report.to_json() if args.json else report.to_text()
    if payload is None:
        print(text)
    else:
        _emit_payload(payload, args.output)
        print(text, file=sys.stderr if not args.output else sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
