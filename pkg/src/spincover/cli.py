"""Batch command line front end.

Every subcommand reads at most one diagram JSON file and prints one report.
JSON reports are key-sorted and contain no timing, so repeated runs on the
same input are byte-identical; elapsed time goes to stderr.  Exit codes:
0 when every check passes, 1 when a check fails, 2 on an input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .amalgam import build_group, conjugation_identity, utilde_embedding_check, utilde_structure
from .colouring import (
    Colouring,
    c_value,
    enumerate_admissible,
    forced_ones,
    kappa_max,
    membership_table,
    require_admissible,
    trivial,
)
from .diagram import CartanMatrix, diagram_view, is_simply_laced, q_value, source_target, validate_gcm
from .errors import CapExceeded, FormulaMismatch, InputError
from .spinrep import build_spinrep, sqrt2_scaling, xi_image
from .suite import criterion_1_clifford, criterion_2_double_cover, run_suite
from .transform import check_c_preserved, dl_reduce, orientation_preserved, unfold
from .weyl import order_formula_check, presentation, verify_relations

FAMILY_FLAG = {"w": "W", "wext": "Wext", "wspin": "WspinColoured"}


class Request:
    """A parsed invocation: the diagram document plus the common flags."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.path: str | None = getattr(args, "input", None)
        self.raw = b""
        self.doc: dict | None = None
        if self.path is not None:
            try:
                self.raw = Path(self.path).read_bytes()
            except OSError as exc:
                raise InputError(f"cannot read input: {exc.strerror}") from None
            self.doc = _load_document(self.raw)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.raw).hexdigest()

    def cm(self) -> CartanMatrix:
        if self.doc is None:
            raise InputError("this subcommand needs a diagram file")
        return validate_gcm(self.doc["cartan"], self.doc.get("labels"))

    def kappa(self, cm: CartanMatrix) -> Colouring:
        flag = self.args.colouring
        if flag is None:
            values = (self.doc or {}).get("colouring")
            kappa = kappa_max(cm) if values is None else _colouring_from(values)
        elif flag == "max":
            kappa = kappa_max(cm)
        elif flag == "trivial":
            kappa = trivial(cm)
        else:
            try:
                values = json.loads(flag)
            except json.JSONDecodeError as exc:
                raise InputError(f"--colouring is not max, trivial or a JSON array: {exc.msg}") from None
            kappa = _colouring_from(values)
        if len(kappa) != cm.n:
            raise InputError(f"colouring has {len(kappa)} values for {cm.n} vertices")
        require_admissible(cm, kappa)
        return kappa

    @property
    def family(self) -> str:
        return FAMILY_FLAG[self.args.family]


def _load_document(raw: bytes) -> dict:
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"input is not UTF-8 (byte {exc.start})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "cartan" not in doc:
        raise InputError('diagram JSON must be an object with a "cartan" key')
    return doc


def _colouring_from(values: Any) -> Colouring:
    if not isinstance(values, list) or any(isinstance(v, bool) or v not in (1, 2) for v in values):
        raise InputError(f"colouring must be a JSON array of 1 and 2, got {values!r}")
    return Colouring.of(values)


# -- subcommands -------------------------------------------------------------------------------


def cmd_diagram_validate(req: Request) -> dict:
    cm = req.cm()
    return {**cm.to_json_dict(), "view": diagram_view(cm), "pass": True}


def cmd_colourings(req: Request) -> dict:
    cm = req.cm()
    kappa = req.kappa(cm)
    km = kappa_max(cm)
    admissible = enumerate_admissible(cm)
    return {
        "kappa_max": km.to_list(),
        "c_max": c_value(cm, km),
        "forced_ones": sorted(forced_ones(cm)),
        "admissible": [k.to_list() for k in admissible],
        "admissible_count": len(admissible),
        "colouring": kappa.to_list(),
        "c": c_value(cm, kappa),
        "membership": membership_table(cm, kappa),
        "pass": True,
    }


def cmd_transform_dl(req: Request) -> dict:
    cm = req.cm()
    kappa = req.kappa(cm)
    reduced, _ = dl_reduce(cm, kappa)
    c_ok = check_c_preserved(cm, kappa)
    orient = orientation_preserved(cm, kappa)
    return {
        **reduced.to_json_dict(),
        "colouring": kappa.to_list(),
        "c_preserved": c_ok,
        "orientation_preserved": orient,
        "pass": c_ok and orient,
    }


def cmd_transform_unfold(req: Request) -> dict:
    cm = req.cm()
    un = unfold(cm, req.kappa(cm))
    laced = is_simply_laced(un.cm)
    return {
        **un.cm.to_json_dict(),
        "colouring": un.kappa.to_list(),
        "origin": [list(o) for o in un.origin],
        "simply_laced": laced,
        "pass": laced,
    }


def cmd_clifford_check(req: Request) -> dict:
    first, second = criterion_1_clifford(), criterion_2_double_cover()
    return {"identities": first, "double_cover": second, "pass": first["pass"] and second["pass"]}


def cmd_rank2_verify(req: Request) -> dict:
    cm = req.cm()
    return verify_relations(cm, req.kappa(cm), req.family)


def cmd_amalgam_utilde(req: Request) -> dict:
    cm = req.cm()
    kappa = req.kappa(cm)
    edges = []
    for i, j in cm.pairs():
        if q_value(cm, i, j) < 4:
            continue
        src, tgt = source_target(cm, kappa, i, j)
        g = build_group(-cm(src, tgt), -cm(tgt, src), spin=True, kappa=(kappa(src), kappa(tgt)))
        emb = utilde_embedding_check(g)
        conj = all(conjugation_identity(g, side, theta) for side in (1, 2) for theta in ("1/8", "1/4", "1/2"))
        edges.append(
            {
                "pair": [src, tgt],
                "r": g.r,
                "s": g.s,
                "structure": utilde_structure(g),
                "embedding": emb,
                "conjugation_identity": conj,
                "pass": all(emb.values()) and conj,
            }
        )
    if not edges:
        raise InputError("the diagram has no infinity edge (a(i,j)a(j,i) >= 4)")
    return {"edges": edges, "pass": all(e["pass"] for e in edges)}


def cmd_spinrep_image(req: Request) -> dict:
    rep = build_spinrep(req.cm())
    out: dict[str, Any] = {"dimension": rep.dimension, "invariants": rep.invariants()}
    try:
        image = xi_image(rep, req.args.cap)
    except CapExceeded:
        return {**out, "order": None, "cap_hit": True, "pass": False}
    powers = [sqrt2_scaling(m) for m in image.elements]
    integral = all(p is not None for p in powers)
    return {
        **out,
        "order": image.order,
        "cap_hit": False,
        "max_sqrt2_power": max(p for p in powers if p is not None),
        "integral": integral,
        "pass": all(out["invariants"].values()) and integral,
    }


def cmd_weyl_orders(req: Request) -> dict:
    cm = req.cm()
    kappa = req.kappa(cm)
    try:
        report = order_formula_check(cm, kappa, req.args.cap)
    except FormulaMismatch as exc:
        return {"orders": exc.orders, "formula": "fail", "pass": False}
    return {**report["orders"], "c": report["c"], "colouring": kappa.to_list(), "formula": "pass", "pass": True}


def cmd_weyl_verify(req: Request) -> dict:
    cm = req.cm()
    return verify_relations(cm, req.kappa(cm), req.family)


def cmd_weyl_presentation(req: Request) -> dict:
    cm = req.cm()
    family = req.family
    kappa = req.kappa(cm) if family == "WspinColoured" else None
    return {**presentation(cm, family, kappa).to_dict(), "pass": True}


def cmd_suite(req: Request) -> dict:
    return run_suite()


COMMANDS: dict[tuple[str, ...], tuple[Callable[[Request], dict], bool, str]] = {
    ("diagram", "validate"): (cmd_diagram_validate, True, "validate a Cartan matrix and show its augmented diagram"),
    ("colourings",): (cmd_colourings, True, "admissible colourings, kappa_max and c"),
    ("transform", "dl"): (cmd_transform_dl, True, "doubly laced reduction"),
    ("transform", "unfold"): (cmd_transform_unfold, True, "simply laced unfolding"),
    ("clifford", "check"): (cmd_clifford_check, False, "exact Clifford identities and the double cover"),
    ("rank2", "verify"): (cmd_rank2_verify, True, "evaluate the relators pair by pair"),
    ("amalgam", "utilde"): (cmd_amalgam_utilde, True, "structure of U~ on every infinity edge"),
    ("spinrep", "image"): (cmd_spinrep_image, True, "finite image of the generalized spin representation"),
    ("weyl", "orders"): (cmd_weyl_orders, True, "orders of W, W~, W^ and the central factors"),
    ("weyl", "verify"): (cmd_weyl_verify, True, "relation report for one family"),
    ("weyl", "presentation"): (cmd_weyl_presentation, True, "relator words of one family"),
    ("suite",): (cmd_suite, False, "the full acceptance battery"),
}


def _add_common(p: argparse.ArgumentParser, needs_input: bool) -> None:
    if needs_input:
        p.add_argument("input", help="diagram JSON file")
    p.add_argument("--cap", type=int, default=10**6, help="closure element cap (default 10^6)")
    p.add_argument("--family", choices=sorted(FAMILY_FLAG), default="wspin", help="presentation family")
    p.add_argument("--colouring", default=None, help="max, trivial or a JSON array of 1/2 values")
    p.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spincover", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"spincover {__version__}")
    top = parser.add_subparsers(dest="command", required=True)
    groups: dict[str, argparse._SubParsersAction] = {}
    for path, (fn, needs_input, help_text) in COMMANDS.items():
        if len(path) == 1:
            leaf = top.add_parser(path[0], help=help_text)
        else:
            if path[0] not in groups:
                grp = top.add_parser(path[0], help=f"{path[0]} subcommands")
                groups[path[0]] = grp.add_subparsers(dest="action", required=True)
            leaf = groups[path[0]].add_parser(path[1], help=help_text)
        _add_common(leaf, needs_input)
        leaf.set_defaults(handler=fn, words=" ".join(path))
    return parser


def _has_dict(value: Any) -> bool:
    if isinstance(value, dict):
        return True
    return isinstance(value, list) and any(_has_dict(v) for v in value)


def _render_text(value: Any, indent: int = 0) -> list[str]:
    """Indented ``key: value`` lines; values without nested objects stay on one line."""
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k in sorted(value, key=str):
            v = value[k]
            if _has_dict(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(value, list):
        for item in value:
            lines.append(f"{pad}-")
            lines.extend(_render_text(item, indent + 1))
    else:
        lines.append(f"{pad}{json.dumps(value, sort_keys=True)}")
    return lines


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    where = f"{args.input}: " if getattr(args, "input", None) else ""
    try:
        req = Request(args)
        results = args.handler(req)
    except InputError as exc:
        print(f"error: {where}{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {where}{exc}", file=sys.stderr)
        return 1
    passed = bool(results.pop("pass"))
    report = {"subcommand": args.words, "input_digest": req.digest, "results": results, "pass": passed}
    if args.fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(_render_text(report)))
    print(f"elapsed {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return 0 if passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
