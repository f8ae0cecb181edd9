"""The acceptance battery: one deterministic, JSON-ready check per criterion.

Every check returns ``{"pass": bool, ...details}``.  Random inputs come from
``random.Random`` with fixed seeds, so repeated runs give identical reports.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .amalgam import build_group, utilde_embedding_check, utilde_structure
from .clifford import CliffordElement, embed, spin_generator_S, twisted_adjoint
from .colouring import Colouring, c_value, enumerate_admissible, kappa_max
from .corpus import c_preservation_report, pair_locality_report, parity_corpus
from .diagram import A2, A3, C2, FIGURE1, G2, validate_gcm
from .matgroups import D, closure
from .scalars import QSqrt2
from .spinrep import R_generator, build_spinrep, evaluate_word, sqrt2_scaling, xi_image
from .transform import graph_isomorphic, unfold
from .weyl import order_formula_check, presentation, proof_replay, unfold_generator_check

A1xA1 = validate_gcm([[2, 0], [0, 2]], ["1", "2"])
SEED = 20240501


def _random_qsqrt2(rng: random.Random) -> QSqrt2:
    def frac() -> Fraction:
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))

    return QSqrt2(frac(), frac())


def criterion_1_clifford() -> dict:
    x = spin_generator_S(1)
    e12 = CliffordElement.blade(2, 1, 2)
    rng = random.Random(SEED)
    norms = True
    for _ in range(100):
        a, b = _random_qsqrt2(rng), _random_qsqrt2(rng)
        y = CliffordElement(2, {0: a, 0b11: b})
        norms &= y.spinor_norm() == CliffordElement.scalar(2, a * a + b * b)
    checks = {
        "square": x * x == e12,
        "inverse": x.inverse() == spin_generator_S(-1),
        "spinor_norm_100_pairs": norms,
        "rho2_S_k_is_D_2k": all(twisted_adjoint(spin_generator_S(k)) == D(2 * k) for k in range(8)),
    }
    return {"checks": checks, "pass": all(checks.values())}


def criterion_2_double_cover() -> dict:
    gens = [embed(spin_generator_S(1), (2, 3), 3), embed(spin_generator_S(1), (1, 2), 3)]
    group = closure(gens)
    fibres: dict = {}
    for g in group.elements:
        fibres.setdefault(twisted_adjoint(g), []).append(g)
    sizes = sorted({len(v) for v in fibres.values()})
    ok = group.order == 48 and len(fibres) == 24 and sizes == [2]
    return {"order": group.order, "image_order": len(fibres), "fibre_sizes": sizes, "pass": ok}


def criterion_3_proof_replay() -> dict:
    replay = proof_replay()
    return {"cases": {k: v["pass"] for k, v in replay.items()}, "pass": all(v["pass"] for v in replay.values())}


def criterion_4_orders() -> dict:
    expected = {"A2": (6, 24, 48), "C2": (8, 32, 64), "G2": (12, 48, 96)}
    rows = {}
    ok = True
    for name, cm in (("A2", A2), ("A3", A3), ("C2", C2), ("G2", G2), ("A1xA1", A1xA1)):
        report = order_formula_check(cm, kappa_max(cm))
        triple = (report["orders"]["W"], report["orders"]["Wtilde"], report["orders"]["What"])
        row_ok = report["pass"] and (name not in expected or triple == expected[name])
        rows[name] = {"orders": list(triple), "c": report["c"], "pass": row_ok}
        ok &= row_ok
    return {"diagrams": rows, "pass": ok}


def criterion_5_utilde() -> dict:
    expected = {(5, 5): "Q8", (4, 4): "Z4xZ4", (4, 5): "Z4xZ2"}
    rows = {}
    for (r, s), tag in expected.items():
        st = utilde_structure(build_group(r, s))
        rows[f"{r},{s}"] = {"iso_tag": st["iso_tag"], "order": st["order"], "pass": st["iso_tag"] == tag}
    return {"cases": rows, "pass": all(v["pass"] for v in rows.values())}


def criterion_6_colourings() -> dict:
    km = kappa_max(FIGURE1)
    fig = {
        "kappa_max": km.to_list(),
        "c": c_value(FIGURE1, km),
        "admissible": len(enumerate_admissible(FIGURE1)),
    }
    fig_ok = fig == {"kappa_max": [2, 2, 1, 1], "c": 2, "admissible": 4}
    locality = pair_locality_report()
    preserved = c_preservation_report(cm for n in range(1, 5) for cm in parity_corpus(n))
    un = unfold(C2, kappa_max(C2))
    iso = graph_isomorphic(un.cm, A3)
    return {
        "figure1": fig,
        "pair_locality": locality["pass"],
        "c_preserved_checked": preserved["checked"],
        "c_preserved": preserved["pass"],
        "unfold_C2_is_A3": iso,
        "pass": fig_ok and locality["pass"] and preserved["pass"] and iso,
    }


def criterion_7_spinrep() -> dict:
    rows = {}
    for name, cm in (("A2", A2), ("A3", A3), ("A1xA1", A1xA1)):
        rep = build_spinrep(cm)
        inv = rep.invariants()
        pres = presentation(cm, "WspinColoured", Colouring.constant(cm.n, 2))
        relators = all(evaluate_word(rep, r.word) == rep.identity() for r in pres.relators)
        rewrite = True
        s2 = rep.identity().ring.coerce(QSqrt2.sqrt2())
        for i, j in cm.pairs():
            if cm(i, j) != 0:
                ri, rj = R_generator(rep, i), R_generator(rep, j)
                rewrite &= ri * rj == -(rj * ri) + ri * s2 + rj * s2 - rep.identity()
        image = xi_image(rep, cap=10**5)
        powers = [sqrt2_scaling(m) for m in image.elements]
        integral = all(p is not None for p in powers)
        row = {
            "dimension": rep.dimension,
            "invariants": all(inv.values()),
            "relators": relators,
            "rewrite_identity": rewrite,
            "image_order": image.order,
            "max_sqrt2_power": max(p for p in powers if p is not None),
            "integral": integral,
            "r1_fourth_is_minus_identity": evaluate_word(rep, [1, 1, 1, 1]) == -rep.identity(),
        }
        row["pass"] = all(v for k, v in row.items() if isinstance(v, bool))
        rows[name] = row
    return {"diagrams": rows, "pass": all(r["pass"] for r in rows.values())}


def criterion_8_amalgam(triples: int = 10**4) -> dict:
    rng = random.Random(SEED)
    groups = [build_group(5, 5), build_group(4, 4), build_group(4, 5)]
    assoc = inverse = True
    for k in range(triples):
        g = groups[k % len(groups)]
        a, b, c = (g.random_word(rng, rng.randint(0, 6)) for _ in range(3))
        assoc &= (a * b) * c == a * (b * c)
        inverse &= (a * a.inverse()).is_identity() and (a.inverse() * a).is_identity()
    embeddings = {f"{g.r},{g.s}": utilde_embedding_check(g) for g in groups}
    emb_ok = all(all(v.values()) for v in embeddings.values())
    return {
        "triples": triples,
        "associativity": assoc,
        "inverse_law": inverse,
        "embeddings": embeddings,
        "pass": assoc and inverse and emb_ok,
    }


def criterion_9_unfold() -> dict:
    report = unfold_generator_check(C2, kappa_max(C2))
    return {"assignment": report["assignment"], "relators": report["relators"], "pass": report["pass"]}


CRITERIA: dict[str, Callable[[], dict]] = {
    "1 clifford identities": criterion_1_clifford,
    "2 double cover": criterion_2_double_cover,
    "3 rank-2 proof replay": criterion_3_proof_replay,
    "4 order formulas": criterion_4_orders,
    "5 U~ structure": criterion_5_utilde,
    "6 colouring and transform battery": criterion_6_colourings,
    "7 spin representation": criterion_7_spinrep,
    "8 amalgam normal forms": criterion_8_amalgam,
    "9 unfolding at group level": criterion_9_unfold,
}


def run_suite() -> dict:
    results = {name: fn() for name, fn in CRITERIA.items()}
    return {"criteria": results, "pass": all(r["pass"] for r in results.values())}
