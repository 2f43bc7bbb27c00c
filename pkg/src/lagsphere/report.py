"""
The end-to-end verification pipeline and its JSON report.

Each check recomputes one claim from scratch and compares it with the
expected value.  Expected values carry a provenance tag:

    published  -- value stated in the source construction
    derived    -- value computed independently (by hand or by an oracle)
    trivial    -- follows from a definition
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import certificates as cert_mod
from .congruence import (
    Cusp, LISTED_TABLE, check_transversal, cusp_classes, cusp_stabilizer_generator,
    is_member, psl_index,
)
from .monodromy import (
    M1, M2, M3, M6, MONODROMY_BY_WIDTH, beauville_search, validate_tuple,
)
from .schoen_calculus import (
    automorphism_group, build_fiber_product, conifold_count, hodge_of_fiber_product,
    schoen_smoothing_invariants, transition_solve_r,
)
from .sl2_arith import IDENTITY, max_finite_order, parabolic_width_class, product
from .surfaces import (
    ADMISSIBLE_PHIS, RatPoint, check_surface, euler_char, generic_fiber_picard_rank,
    load_catalog, moebius_apply, named_moebius,
)

SCHEMA_VERSION = "1.0"
PROVENANCES = ("published", "derived", "trivial")


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    computed: Any
    expected: Any
    provenance: str
    elapsed_ms: float | None = None
    error: str | None = None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "computed": self.computed,
            "expected": {"value": self.expected, "provenance": self.provenance},
            "elapsed_ms": self.elapsed_ms,
            "error": self.error,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    options: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks if c.status != "skipped")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "status": self.status,
            "options": self.options,
            "summary": {
                "total": len(self.checks),
                "passed": sum(c.status == "pass" for c in self.checks),
                "failed": sum(c.status == "fail" for c in self.checks),
                "skipped": sum(c.status == "skipped" for c in self.checks),
            },
            "checks": [c.as_dict() for c in self.checks],
        }

    def table(self) -> str:
        width = max((len(c.id) for c in self.checks), default=10)
        lines = [f"{'check'.ljust(width)}  status  expected ({'provenance'})"]
        for c in self.checks:
            lines.append(f"{c.id.ljust(width)}  {c.status:6}  {_short(c.expected)} ({c.provenance})")
            if c.status == "fail":
                lines.append(f"{'':{width}}          computed: {_short(c.computed)}")
                if c.error:
                    lines.append(f"{'':{width}}          error: {c.error}")
        lines.append(f"overall: {self.status.upper()} "
                     f"({len(self.checks) - len(self.failed())}/{len(self.checks)})")
        return "\n".join(lines)


def _short(value, limit=70) -> str:
    s = json.dumps(value, sort_keys=True)
    return s if len(s) <= limit else s[:limit - 3] + "..."


def emit_json(report: VerificationReport) -> bytes:
    return (json.dumps(report.as_dict(), indent=2, sort_keys=False) + "\n").encode()


def load_schema() -> dict:
    from importlib import resources
    return json.loads(resources.files("lagsphere.data").joinpath("report_schema.json").read_text())


# ---------------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, (Cusp,)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=json.dumps) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "rows"):
        return [list(r) for r in x.rows()]
    return x


class _Runner:
    def __init__(self, timings: bool):
        self.timings = timings
        self.checks: list[Check] = []

    def run(self, cid: str, anchor: str, provenance: str, expected,
            compute: Callable[[], Any], compare: Callable[[Any, Any], bool] | None = None):
        assert provenance in PROVENANCES
        assert cid not in {c.id for c in self.checks}, cid
        t0 = time.perf_counter()
        error = None
        try:
            computed = compute()
            ok = compare(computed, expected) if compare else computed == expected
        except Exception as exc:  # any module error is a failed check
            computed, ok, error = None, False, f"{type(exc).__name__}: {exc}"
        elapsed = round((time.perf_counter() - t0) * 1000, 3) if self.timings else None
        self.checks.append(Check(cid, anchor, "pass" if ok else "fail",
                                 _jsonable(computed), _jsonable(expected),
                                 provenance, elapsed, error))

    def skip(self, cid: str, anchor: str, provenance: str, expected):
        self.checks.append(Check(cid, anchor, "skipped", None, _jsonable(expected), provenance))


def verify_paper(*, seed: int = cert_mod.DEFAULT_SEED, samples: int = cert_mod.DEFAULT_SAMPLES,
                 with_beauville: bool = False, bound: int = 100, workers: int = 1,
                 catalog: str | Path | None = None, timings: bool = False) -> VerificationReport:
    opts = {"seed": seed, "samples": samples, "with_beauville": with_beauville,
            "bound": bound if with_beauville else None,
            "catalog": "builtin" if catalog is None else str(catalog)}
    r = _Runner(timings)

    # SL(2, Z)
    r.run("sl2.product_relation", "ordered product of the four local monodromies",
          "derived", IDENTITY, lambda: product([M1, M6, M2, M3]))
    r.run("sl2.width_classes", "widths of M1, M6, M2, M3", "published", [1, 6, 2, 3],
          lambda: [parabolic_width_class(m) for m in (M1, M6, M2, M3)])
    r.run("sl2.lower_left_entries", "lower-left entry of M_b is -36/b for b = 2, 3, 6",
          "published", {2: -18, 3: -12, 6: -6},
          lambda: {b: MONODROMY_BY_WIDTH[b].c for b in (2, 3, 6)})
    r.run("sl2.lower_left_mod36", "lower-left entry of M_b is -36/b mod 36 for b = 1, 2, 3, 6",
          "derived", {1: 0, 2: 18, 3: 24, 6: 30},
          lambda: {b: m.c % 36 for b, m in sorted(MONODROMY_BY_WIDTH.items())})
    r.run("sl2.max_finite_order", "finite subgroups of SL(2, Z) have order <= 6",
          "published", 6, max_finite_order)

    # Gamma_1(6)
    r.run("congruence.membership", "M1, M6, M2, M3 lie in Gamma_1(6)", "published",
          [True] * 4, lambda: [is_member(6, m) for m in (M1, M6, M2, M3)])
    r.run("congruence.index", "index of Gamma_1(6) in PSL(2, Z)", "published", 12,
          lambda: psl_index(6))
    r.run("congruence.transversal", "the twelve listed coset representatives",
          "derived", True, lambda: check_transversal(LISTED_TABLE) or True)
    expected_cusps = {"inf": 1, "0": 6, "1/3": 2, "1/2": 3}
    r.run("congruence.cusps", "cusps inf, 0, 1/3, 1/2 with widths", "published",
          expected_cusps, lambda: {str(c): w for c, w in cusp_classes(6)})
    r.run("congruence.width_sum", "cusp widths sum to the index", "derived", 12,
          lambda: sum(w for _, w in cusp_classes(6)))
    r.run("congruence.stabilizers", "stabilizer generators are the local monodromies",
          "published", {"inf": M1, "0": M6, "1/3": M2, "1/2": M3},
          lambda: {k: cusp_stabilizer_generator(6, Cusp.parse(k))
                   for k in ("inf", "0", "1/3", "1/2")})

    # catalog surface and its monodromy
    def surface():
        return load_catalog(catalog)["X1_6"]

    r.run("monodromy.x16_tuple", "catalog monodromy tuple is a valid factorization",
          "published", {"valid": True, "widths": [1, 6, 2, 3], "violations": []},
          lambda: _tuple_summary(surface()))
    r.run("surfaces.consistency", "catalog fibers I_6, I_3, I_2, I_1 agree with monodromy",
          "derived", {"euler": 12, "problems": []},
          lambda: {"euler": euler_char(surface()), "problems": check_surface(surface())})
    r.run("surfaces.cusp_dictionary", "cusp widths match Kodaira types at critical values",
          "published", {"inf": 1, "0": 6, "1/3": 2, "1/2": 3},
          lambda: _cusp_dictionary_check(surface()))
    r.run("surfaces.generic_picard_rank", "rho(S) = 10, 12 fiber curves, 3 relations",
          "published", 1, lambda: generic_fiber_picard_rank(10, 12, 3))
    r.run("surfaces.phi_moves_minus8", "phi(-8) != -8 for every admissible phi",
          "published", {p: True for p in ADMISSIBLE_PHIS},
          lambda: {p: moebius_apply(named_moebius(p), RatPoint(-8, 1)) != RatPoint(-8, 1)
                   for p in ADMISSIBLE_PHIS})

    # Schoen calculus
    def per_phi(fn):
        s = surface()
        return {p: fn(build_fiber_product(s, named_moebius(p))) for p in ADMISSIBLE_PHIS}

    r.run("schoen.conifold_counts", "conifold counts n = 33, 36, 40, 48", "published",
          [33, 36, 40, 48], lambda: sorted(set(per_phi(conifold_count).values())))
    r.run("schoen.three_cycles_agree", "both 3-cycles give n = 36", "published",
          [36, 36], lambda: [conifold_count(build_fiber_product(surface(), named_moebius(p)))
                             for p in ("cycle", "cycle2")])
    r.run("schoen.conifold_assignment", "which transposition gives which n", "derived",
          {"swap01": 48, "swap0inf": 40, "swap1inf": 33, "cycle": 36, "cycle2": 36},
          lambda: per_phi(conifold_count))
    r.run("schoen.euler_characteristics", "chi(Xhat) = 66, 72, 80, 96", "published",
          [66, 72, 80, 96],
          lambda: sorted(set(h.chi for h in per_phi(hodge_of_fiber_product).values())))
    r.run("schoen.rigidity", "h12(Xhat) = 0 for every phi", "published",
          {p: 0 for p in ADMISSIBLE_PHIS},
          lambda: {p: h.h12 for p, h in per_phi(hodge_of_fiber_product).items()})
    r.run("schoen.picard_rank", "h11(Xhat) = n", "published", True,
          lambda: all(h.h11 == h.n for h in per_phi(hodge_of_fiber_product).values()))
    r.run("schoen.small_resolution", "all matched fibers have b, b' > 1", "derived",
          {p: [] for p in ADMISSIBLE_PHIS}, lambda: per_phi(lambda fp: fp.flags))
    r.run("schoen.smoothing", "Schoen manifold Y: chi 0, h11 = h12 = 19, b3 = 40",
          "published", {"chi": 0, "h11": 19, "h12": 19, "b3": 40},
          lambda: _smoothing_summary(surface()))
    r.run("schoen.transition_r", "r = 19 and b2(Xhat) = n for all four n", "published",
          {n: {"r": 19, "b2": n} for n in (33, 36, 40, 48)},
          lambda: _transition_summary(surface()))
    r.run("schoen.automorphisms", "Aut(Xhat) = (Z/6)^2", "published",
          {"factors": [6, 6], "order": 36},
          lambda: _aut_summary(surface()))

    # certificates
    certs = {}
    for b in cert_mod.ADMISSIBLE_WIDTHS:
        for bp in cert_mod.ADMISSIBLE_WIDTHS:
            if b == bp:
                continue
            expected = (-36 // b + 36 // bp) % 36

            def compute(b=b, bp=bp):
                c = cert_mod.essentiality_certificate(b, bp, samples, seed)
                certs[(b, bp)] = c
                return {"residue_mod36": c.residue_mod36, "passed": c.passed,
                        "sampled_conjugators": c.sampled_conjugators}

            r.run(f"certificates.pair_{b}_{bp}",
                  "pairing of the two spheres is a nonzero multiple of 6 mod 36",
                  "derived", {"residue_mod36": expected, "passed": True,
                              "sampled_conjugators": samples}, compute)

    def obstruction():
        c = certs.get((2, 6)) or cert_mod.essentiality_certificate(2, 6, samples, seed)
        rep = cert_mod.nodal_obstruction(c)
        return {"verdict": rep.verdict.value, "twist_infinite_order": rep.twist_infinite_order,
                "allowed_monodromy_order": rep.allowed_monodromy_order}

    r.run("certificates.obstruction", "twist order versus the finite monodromy bound",
          "published", {"verdict": "NodalDegenerationImpossible", "twist_infinite_order": True,
                        "allowed_monodromy_order": 6}, obstruction)

    # Beauville search
    fixture = load_beauville_fixture()
    if with_beauville:
        def search():
            res = beauville_search(bound, workers=workers)
            return {"count": len(res.multisets), "multisets": [list(m) for m in res.sorted()]}
        r.run("monodromy.beauville_search", "four-fiber search returns six width multisets",
              "published", {"count": 6, "multisets": fixture["multisets"]}, search)
    else:
        r.skip("monodromy.beauville_search", "four-fiber search returns six width multisets",
               "published", {"count": 6, "multisets": fixture["multisets"]})

    return VerificationReport(r.checks, opts)


def load_beauville_fixture() -> dict:
    from importlib import resources
    return json.loads(resources.files("lagsphere.data")
                      .joinpath("beauville_multisets.json").read_text())


def _tuple_summary(s):
    if s.tuple_ref is None:
        raise ValueError("catalog surface has no monodromy tuple")
    rep = validate_tuple(s.tuple_ref)
    widths = [e.width for e in rep.entries]
    return {"valid": rep.valid, "widths": widths, "violations": rep.violations}


def _cusp_dictionary_check(s):
    classes = dict(cusp_classes(6))
    out = {}
    for cusp, t in s.cusp_dictionary:
        b = s.fiber_type(t)
        if b != classes[cusp]:
            raise ValueError(f"cusp {cusp} has width {classes[cusp]} but fiber over {t} is I_{b}")
        out[str(cusp)] = b
    return out


def _smoothing_summary(s):
    y = schoen_smoothing_invariants(s)
    return {"chi": y.chi, "h11": y.h11, "h12": y.h12, "b3": y.betti[3]}


def _transition_summary(s):
    y = schoen_smoothing_invariants(s)
    out = {}
    for p in ADMISSIBLE_PHIS:
        h = hodge_of_fiber_product(build_fiber_product(s, named_moebius(p)))
        td = transition_solve_r(y.betti, h.betti, h.n)
        out[h.n] = {"r": td.r, "b2": td.betti_Xhat[2]}
    return dict(sorted(out.items()))


def _aut_summary(s):
    fps = [build_fiber_product(s, named_moebius(p)) for p in ADMISSIBLE_PHIS]
    groups = {automorphism_group(fp) for fp in fps}
    if len(groups) != 1:
        raise ValueError(f"automorphism group depends on phi: {groups}")
    g = groups.pop()
    return {"factors": list(g.factors), "order": g.order}
