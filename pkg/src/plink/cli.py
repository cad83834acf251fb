"""Command-line entry point: ``plink <subcommand> ...``.

Exit codes: 0 all checks pass, 1 a mathematical violation was witnessed,
2 operational failure (bad config, I/O, genericity exhausted).
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import complex as cx
from . import constructions as cons
from .errors import DegenerateConfiguration, GenericityExhausted, PlinkError
from .geometry import (
    Embedding,
    lk2_cone,
    lk2_projection,
    randomized_embedding,
    simplex_crossings,
)
from .linking import THEOREMS, verify_theorem
from .spheres import SphereSubcomplex

RANDOMIZED = {"cgs", "oldil1", "oldil2", "newil", "vkf", "deltayil"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    selector: str = None
    n: int = None
    trials: int = 50
    seed: int = None
    max_nodes: int = 1000
    out: str = None
    format: str = "json"
    jobs: int = 1

    def check(self):
        if self.seed is not None and self.seed < 0:
            raise UsageError("--seed must be non-negative")
        if self.trials is not None and self.trials < 1:
            raise UsageError("--trials must be positive")
        if self.n is not None and self.n < 0:
            raise UsageError("--n must be non-negative")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_complex(path):
    with open(path) as fh:
        return cx.from_json(fh.read())


def _load_embedding(path, K=None):
    with open(path) as fh:
        return Embedding.from_json(fh.read(), K)


def _vertex(token, K):
    token = token.strip()
    if K is not None:
        try:
            return K.vertex_by_label(token)
        except KeyError:
            if token.isdigit() and int(token) in K.vertices:
                return int(token)
            raise UsageError("unknown vertex %r" % token)
    return int(token) if token.isdigit() else token


def parse_sphere(text, K=None):
    """Sphere from ``"boundary:a,b,c"``, ``"join:a,b|c,d"`` or
    ``"a,b;b,c;a,c"`` (explicit top simplices)."""
    if text.startswith("boundary:"):
        vs = [_vertex(t, K) for t in text[len("boundary:"):].split(",")]
        return SphereSubcomplex.boundary_of(vs)
    if text.startswith("join:"):
        from itertools import product
        pairs = [[_vertex(t, K) for t in grp.split(",")]
                 for grp in text[len("join:"):].split("|")]
        return SphereSubcomplex(
            frozenset(tuple(sorted(c)) for c in product(*pairs)),
            kind="octahedron")
    simplices = [tuple(sorted(_vertex(t, K) for t in s.split(",")))
                 for s in text.split(";") if s.strip()]
    return SphereSubcomplex(frozenset(simplices), kind="cycle")


# -- subcommands -------------------------------------------------------

def cmd_build(args):
    fam = args.family
    if fam == "sigma":
        if args.m is None or args.n is None:
            raise UsageError("sigma needs --m and --n")
        K = cons.sigma_skeleton(args.m, args.n)
    elif fam == "join":
        if args.k is None or args.folds is None:
            raise UsageError("join needs --k and --folds")
        K = cons.fold_join(args.k, args.folds)
    elif fam in ("K", "H", "P"):
        if args.n is None or args.n < 1:
            raise UsageError("%s needs --n >= 1" % fam)
        if fam == "K":
            K = cons.build_K(args.n)[0]
        elif fam == "H":
            K = cons.build_H(args.n)
        else:
            from .deltay import build_P
            K = build_P(args.n)
    elif fam == "petersen":
        K = cons.petersen_graph()
    else:
        raise UsageError("unknown family %r" % fam)
    _emit(cx.to_json(K), args.out)
    return 0


def cmd_embed(args):
    K = _load_complex(args.complex)
    d = args.dim if args.dim is not None else 2 * K.n + 1
    e = randomized_embedding(K, d, args.seed)
    _emit(e.to_json(), args.out)
    return 0


def cmd_lk2(args):
    K = _load_complex(args.complex) if args.complex else None
    e = _load_embedding(args.embedding, K)
    g1 = parse_sphere(args.sphere1, K)
    g2 = parse_sphere(args.sphere2, K)
    for g in (g1, g2):
        if not g.is_valid():
            raise UsageError("not a Z2-sphere: %r" % (g.key,))
    if g1.vertices & g2.vertices:
        raise UsageError("spheres share a vertex")
    try:
        proj = lk2_projection(g1, g2, e)
    except DegenerateConfiguration as exc:
        raise GenericityExhausted("degenerate projection: %s" % exc)
    cone = lk2_cone(g1, g2, e, seed=args.seed)
    out = {"lk2_projection": proj, "lk2_cone": cone}
    code = 0
    if proj != cone:
        code = 1
        out["crossings"] = [simplex_crossings(s, t, e).to_dict()
                            for s in g1.key for t in g2.key]
    if args.format == "text":
        _emit("lk2 (projection) = %d\nlk2 (cone)       = %d" % (proj, cone),
              args.out)
    else:
        _emit(json.dumps(out, sort_keys=True), args.out)
    return code


def cmd_verify(args):
    cfg = RunConfig("verify", args.theorem, args.n, args.trials, args.seed,
                    out=args.out, format=args.format, jobs=args.jobs)
    cfg.check()
    if args.theorem in RANDOMIZED and args.seed is None:
        raise UsageError("%s is randomized: pass --seed" % args.theorem)
    n = args.n
    if n is None:
        n = 2 if args.theorem == "hdpet" else 1
    report = verify_theorem(args.theorem, n, args.trials, args.seed or 0,
                            jobs=args.jobs)
    if args.format == "text":
        status = "PASS" if report.ok else "VIOLATION"
        lines = ["%s n=%d: %s (%d results, %d violations, %d ms)"
                 % (report.theorem, report.n, status, len(report.results),
                    len(report.violations), report.elapsed_ms)]
        if not report.ok:
            lines.append(json.dumps(report.violations, sort_keys=True))
        _emit("\n".join(lines), args.out)
    else:
        _emit(report.to_json(timing=not args.no_timing), args.out)
    return 0 if report.ok else 1


def cmd_deltay(args):
    from .deltay import apply_delta_y

    K = _load_complex(args.complex)
    tetra = [_vertex(t, K) for t in args.tetra.split(",")]
    KY, rec = apply_delta_y(K, tetra)
    if args.record:
        with open(args.record, "w") as fh:
            json.dump(rec.to_dict(), fh)
    _emit(cx.to_json(KY), args.out)
    return 0


def cmd_family(args):
    from .deltay import family_search

    K = _load_complex(args.complex)
    res = family_search(K, args.max_nodes)
    _emit(json.dumps(res.to_dict(), sort_keys=True), args.out)
    return 0


def cmd_info(args):
    from .canonical import canonicalize
    from .linking import lambda_pattern

    K = _load_complex(args.complex)
    info = {
        "name": K.name,
        "n": K.n,
        "vertices": len(K.vertices),
        "f_vector": K.f_vector(),
        "tetrahedra": len(cx.find_tetrahedra(K)),
        "octahedra": len(cx.find_octahedra(K)),
        "pattern_pairs": len(lambda_pattern(K)),
        "trivalent": K.n >= 1 and cx.is_trivalent(K),
        "digest": canonicalize(K).digest,
    }
    if args.format == "text":
        _emit("\n".join("%s: %s" % kv for kv in info.items()), args.out)
    else:
        _emit(json.dumps(info, sort_keys=True), args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="plink",
        description="Exact Z2-linking and Delta-Y workbench for simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a named complex as JSON")
    b.add_argument("--family", required=True,
                   choices=["sigma", "join", "K", "H", "P", "petersen"])
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--folds", type=int)
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("embed", help="seeded generic embedding of a complex")
    e.add_argument("--complex", required=True)
    e.add_argument("--dim", type=int)
    e.add_argument("--seed", type=int, required=True)
    e.add_argument("--out")
    e.set_defaults(func=cmd_embed)

    lk = sub.add_parser("lk2", help="Z2 linking number by both methods")
    lk.add_argument("--embedding", required=True)
    lk.add_argument("--complex")
    lk.add_argument("--sphere1", required=True)
    lk.add_argument("--sphere2", required=True)
    lk.add_argument("--seed", type=int, required=True)
    lk.add_argument("--format", choices=["json", "text"], default="json")
    lk.add_argument("--out")
    lk.set_defaults(func=cmd_lk2)

    v = sub.add_parser("verify", help="run a theorem check")
    v.add_argument("theorem", choices=THEOREMS)
    v.add_argument("--n", type=int)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["json", "text"], default="json")
    v.add_argument("--no-timing", action="store_true",
                   help="write elapsed_ms as 0 for byte-reproducible reports")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("deltay", help="Delta-Y exchanges")
    dsub = d.add_subparsers(dest="action", required=True)
    da = dsub.add_parser("apply", help="exchange at one tetrahedron")
    da.add_argument("--complex", required=True)
    da.add_argument("--tetra", required=True,
                    help="comma-separated vertex labels")
    da.add_argument("--record", help="also write the exchange record here")
    da.add_argument("--out")
    da.set_defaults(func=cmd_deltay)

    f = sub.add_parser("family", help="breadth-first exchange family search")
    f.add_argument("--complex", required=True)
    f.add_argument("--max-nodes", type=int, default=1000)
    f.add_argument("--out")
    f.set_defaults(func=cmd_family)

    i = sub.add_parser("info", help="summary of a complex file")
    i.add_argument("--complex", required=True)
    i.add_argument("--format", choices=["json", "text"], default="json")
    i.add_argument("--out")
    i.set_defaults(func=cmd_info)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, OSError, json.JSONDecodeError,
            GenericityExhausted, PlinkError) as exc:
        print("plink: error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
