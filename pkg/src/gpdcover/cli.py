"""Command line front end.

Exit codes: 0 the property holds or the construction succeeded, 1 the
property fails (a witness is reported), 2 the input is invalid.
Construction commands print the resulting document, or write it to
``--output`` and print a summary instead.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .catgroup import (
    CatGroupStructure,
    is_catgroup_morphism,
    lift_categorical_group,
    validate_categorical_group,
    validate_group_groupoid,
)
from .core import Groupoid
from .covering import (
    characteristic_group,
    check_covering,
    factor_covering,
    is_universal_covering,
    lift_morphism,
    universal_cover,
)
from .errors import (
    AxiomFailed,
    CharGroupNotContained,
    CriterionFailed,
    GroupoidError,
    NotCovering,
)
from .functors import GroupoidMorphism, validate_functor
from .homotopy import (
    HomotopyFunctor,
    NaturalIsomorphism,
    are_homotopic,
    homotopy_to_nat_iso,
    nat_iso_to_homotopy,
    validate_nat_iso,
)
from .io import dumps, load_document, write_document


class Report:
    def __init__(self):
        self.lines: list[str] = []

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def _plural(n: int, word: str) -> str:
    return f"{n} {word}" if n == 1 else f"{n} {word}s"


def _load(path: str, kind: str):
    doc = load_document(path)
    if doc.kind != kind:
        raise GroupoidError(f"{path}: expected a {kind} document, got {doc.kind}")
    return doc.value


def _ids(xs) -> str:
    return "{" + ", ".join(xs) + "}"


def _emit(out: Report, value, args, summary: list[str]) -> None:
    if args.output:
        write_document(value, args.output)
        for line in summary:
            out(line)
        out(f"written: {args.output}")
    else:
        out.lines.append(dumps(value).rstrip("\n"))


# --- commands ------------------------------------------------------------------

def cmd_validate(args, out: Report) -> int:
    doc = load_document(args.file)
    v = doc.value
    if doc.kind == "groupoid":
        conn = "connected" if v.is_connected() else "not connected"
        out(f"groupoid: {_plural(len(v.objects), 'object')}, "
            f"{_plural(len(v.morphisms), 'morphism')}, {conn}")
        return 0
    if doc.kind == "functor":
        ok = validate_functor(v)
    elif doc.kind == "natiso":
        ok = validate_nat_iso(v)
    else:
        ok = validate_functor(v.tensor)
        if ok:
            ok = validate_functor(v.inv)
    if ok:
        out(f"{doc.kind}: valid")
        return 0
    out(f"{doc.kind}: invalid")
    out(f"reason: {ok.reason}")
    out(f"witness: {_fmt(ok.witness)}")
    return 1


def _fmt(w) -> str:
    if isinstance(w, tuple):
        return ", ".join(_fmt(x) for x in w)
    return str(w)


def cmd_analyze(args, out: Report) -> int:
    G: Groupoid = _load(args.file, "groupoid")
    out(f"objects: {len(G.objects)}")
    out(f"morphisms: {len(G.morphisms)}")
    out(f"connected: {'yes' if G.is_connected() else 'no'}")
    out(f"simply connected: {'yes' if G.is_simply_connected() else 'no'}")
    out(f"components: {len(G.components())}")
    for x in G.objects:
        og = G.object_group(x)
        out(f"object group at {x}: order {len(og)} {_ids(og)}")
    for x in G.objects:
        out(f"star at {x}: {_ids(G.star(x))}")
    return 0


def cmd_covering_check(args, out: Report) -> int:
    p: GroupoidMorphism = _load(args.functor, "functor")
    try:
        c = check_covering(p)
    except NotCovering as exc:
        out("covering: no")
        out(f"object: {exc.object}")
        out(f"failure: not {exc.kind}")
        out(f"star sizes: {exc.sizes[0]} vs {exc.sizes[1]}")
        return 1
    out("covering: yes")
    out(f"universal: {'yes' if is_universal_covering(c) else 'no'}")
    for x in c.domain.objects:
        out(f"characteristic group at {x}: {_ids(characteristic_group(c, x))}")
    return 0


def cmd_covering_chargroup(args, out: Report) -> int:
    c = check_covering(_load(args.functor, "functor"))
    C = characteristic_group(c, args.object)
    out(f"characteristic group at {args.object} (in the object group at {C.base}): "
        f"order {len(C)} {_ids(C)}")
    return 0


def cmd_covering_lift(args, out: Report) -> int:
    p = check_covering(_load(args.covering, "functor"))
    q = _load(args.functor, "functor")
    try:
        r = lift_morphism(p, q, args.z, args.xt)
    except CriterionFailed as exc:
        out("lift: no")
        out(f"loop: {exc.loop}")
        out(f"image: {exc.image}")
        out(f"characteristic group: {_ids(exc.characteristic)}")
        return 1
    _emit(out, r, args, ["lift: yes"])
    return 0


def cmd_covering_factor(args, out: Report) -> int:
    p = check_covering(_load(args.p, "functor"))
    q = check_covering(_load(args.q, "functor"))
    try:
        fac = factor_covering(p, args.xt, q, args.zt)
    except CharGroupNotContained as exc:
        out("factorization: no")
        out(f"witness: {exc.witness} is not in the characteristic group of q")
        return 1
    _emit(out, fac.functor, args,
          ["factorization: yes", f"isomorphism: {'yes' if fac.isomorphism else 'no'}"])
    return 0


def cmd_covering_universal(args, out: Report) -> int:
    G = _load(args.groupoid, "groupoid")
    _, p = universal_cover(G, args.object)
    _emit(out, p.functor, args, [f"universal cover: {_plural(len(p.domain.objects), 'object')}, "
                                 f"{_plural(len(p.domain.morphisms), 'morphism')}"])
    return 0


def cmd_homotopic(args, out: Report) -> int:
    f = _load(args.f, "functor")
    g = _load(args.g, "functor")
    sigma = are_homotopic(f, g)
    if sigma is None:
        out("homotopic: no")
        return 1
    out("homotopic: yes")
    for x in f.domain.objects:
        out(f"component at {x}: {sigma[x]}")
    return 0


def cmd_natiso_to_homotopy(args, out: Report) -> int:
    sigma: NaturalIsomorphism = _load(args.natiso, "natiso")
    F = nat_iso_to_homotopy(sigma)
    _emit(out, F.functor, args, ["homotopy: yes"])
    return 0


def cmd_homotopy_to_natiso(args, out: Report) -> int:
    F = HomotopyFunctor(_load(args.homotopy, "functor"))
    ok = validate_functor(F.functor)
    if not ok:
        raise GroupoidError(f"homotopy is not a functor: {ok.reason}")
    _emit(out, homotopy_to_nat_iso(F), args, ["natural isomorphism: yes"])
    return 0


def cmd_catgroup_strict(args, out: Report) -> int:
    S: CatGroupStructure = _load(args.structure, "catgroup")
    v = validate_group_groupoid(S)
    if v:
        out("group-groupoid: yes")
        return 0
    which, detail = v.witness
    out("group-groupoid: no")
    out(f"failed: {which if isinstance(which, str) else f'axiom {which}'}")
    out(f"witness: {_fmt(detail)}")
    return 1


_AXIOM_LABELS = ("associativity", "left unit", "right unit", "right inverse", "left inverse")


def cmd_catgroup_check(args, out: Report) -> int:
    S: CatGroupStructure = _load(args.structure, "catgroup")
    try:
        T = validate_categorical_group(S)
    except AxiomFailed as exc:
        out("categorical group: no")
        out(f"failed: axiom {exc.which} ({exc.detail})")
        return 1
    out("categorical group: yes")
    for label, sigma in zip(_AXIOM_LABELS, T.witnesses):
        comps = sigma.components
        trivial = all(sigma.source.codomain.identity(sigma.source.obj(x)) == s
                      for x, s in comps.items())
        out(f"{label}: {'identity' if trivial else 'non-identity'} components")
    return 0


def cmd_catgroup_lift(args, out: Report) -> int:
    p = check_covering(_load(args.covering, "functor"))
    S = _load(args.structure, "catgroup")
    T = lift_categorical_group(p, S, args.unit)
    morphism = is_catgroup_morphism(p.functor, T, S)
    strict = validate_group_groupoid(T)
    _emit(out, T, args, [
        "lifted: yes",
        f"covering is a morphism of categorical groups: {'yes' if morphism else 'no'}",
        f"strict: {'yes' if strict else 'no'}",
    ])
    return 0


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpdcover", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate any document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="connectivity, object groups and stars of a groupoid")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    cov = sub.add_parser("covering", help="covering morphisms").add_subparsers(
        dest="subcommand", required=True)
    p = cov.add_parser("check")
    p.add_argument("functor")
    p.set_defaults(func=cmd_covering_check)
    p = cov.add_parser("chargroup")
    p.add_argument("functor")
    p.add_argument("object")
    p.set_defaults(func=cmd_covering_chargroup)
    p = cov.add_parser("lift")
    p.add_argument("covering")
    p.add_argument("functor")
    p.add_argument("z", help="base object of the functor's domain")
    p.add_argument("xt", help="object of the covering groupoid over q(z)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_covering_lift)
    p = cov.add_parser("factor")
    p.add_argument("p")
    p.add_argument("xt")
    p.add_argument("q")
    p.add_argument("zt")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_covering_factor)
    p = cov.add_parser("universal")
    p.add_argument("groupoid")
    p.add_argument("object")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_covering_universal)

    p = sub.add_parser("homotopic", help="decide whether two functors are homotopic")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_homotopic)

    p = sub.add_parser("natiso-to-homotopy")
    p.add_argument("natiso")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_natiso_to_homotopy)

    p = sub.add_parser("homotopy-to-natiso")
    p.add_argument("homotopy")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_homotopy_to_natiso)

    cg = sub.add_parser("catgroup", help="categorical groups").add_subparsers(
        dest="subcommand", required=True)
    p = cg.add_parser("check-strict")
    p.add_argument("structure")
    p.set_defaults(func=cmd_catgroup_strict)
    p = cg.add_parser("check")
    p.add_argument("structure")
    p.set_defaults(func=cmd_catgroup_check)
    p = cg.add_parser("lift")
    p.add_argument("covering")
    p.add_argument("structure")
    p.add_argument("unit")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catgroup_lift)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    out = Report()
    try:
        code = args.func(args, out)
    except GroupoidError as exc:
        return 2, out.text(), f"error: {type(exc).__name__}: {exc}\n"
    return code, out.text(), ""


def main(argv: Sequence[str] | None = None) -> int:
    code, stdout, stderr = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
