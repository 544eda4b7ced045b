"""Per-instance property checks and the seeded corpus that drives them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .core import GenerationError, GoodIdeal, equals, random_good_ideal
from .duality import dual
from .generation import decomposition_violations, generation_disagreements, generation_input, reconstruct
from .lattice import Box
from .maximals import classify_maximals, relmax_from_dual, symmetry_check
from .stdbasis import (eji_violations, irr_absmax_by_characterization,
                       irreducible_absolute_maximals, nu_independence_check)

CHECKS = ("biduality", "symmetry", "relmax_from_dual", "reconstruct", "fprime",
          "eji", "characterization_subset", "nu_independence", "decomposition", "p2_coincidence")


@dataclass
class InstanceResult:
    seed: int
    p: int
    bound: int
    results: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, object] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(self.results.values())

    def failed(self) -> List[str]:
        return sorted(k for k, v in self.results.items() if not v)

    def to_dict(self) -> dict:
        out = {"seed": self.seed, "p": self.p, "bound": self.bound, "ok": self.ok,
               "results": dict(sorted(self.results.items()))}
        if self.error:
            out["error"] = self.error
        if not self.ok:
            out["details"] = self.details
        return out


def nu_choices(E: GoodIdeal) -> List[tuple]:
    g = E.gammaE
    return [g, tuple(x + 1 for x in g), tuple(x + 2 * (i % 2) for i, x in enumerate(g)),
            tuple(x + 3 * (i == 0) for i, x in enumerate(g))]


def check_ideal(E: GoodIdeal, out: InstanceResult, tag: str = "", D: Optional[GoodIdeal] = None,
                with_reconstruct: bool = True) -> GoodIdeal:
    """Run every check on E, recording results under ``tag + name``."""
    rec, det = out.results, out.details

    def put(name, ok, detail=None):
        key = tag + name
        rec[key] = rec.get(key, True) and bool(ok)
        if not ok and detail is not None:
            det[key] = detail

    if D is None:
        D = dual(E).dual
    DD = dual(D).dual
    put("biduality", equals(DD, E))

    sym = symmetry_check(E, D)
    put("symmetry", sym.ok, [v.to_dict() for v in sym.violations][:5])
    report = classify_maximals(E)
    rel = relmax_from_dual(E, D)
    put("relmax_from_dual", rel == report.relative,
        {"direct": sorted(map(list, report.relative)), "from_dual": sorted(map(list, rel))})

    if with_reconstruct and E.p >= 2:
        window = Box(E.mu, tuple(x + 1 for x in E.gammaE))
        try:
            R = reconstruct(generation_input(E), E.ambient, window)
            put("reconstruct", equals(R, E))
        except Exception as exc:  # reported, never swallowed silently
            put("reconstruct", False, str(exc))

    if E.p >= 2:
        gd = generation_disagreements(E, D=D)
        put("fprime", not gd["fprime_disagreements"] and not gd["relmax_disagreements"]
            and not gd["members_failing_projection"] and gd["relmax_in_fprime"], gd)

    nus = nu_choices(E)
    bad = eji_violations(E, nus[0])
    put("eji", not bad, bad[:5])
    direct = irreducible_absolute_maximals(E)
    for nu in nus:
        put("characterization_subset", irr_absmax_by_characterization(E, nu) <= direct)
    put("nu_independence", all(nu_independence_check(E, nus[0], nu) for nu in nus[1:]))
    dec = decomposition_violations(E)
    put("decomposition", not dec, dec[:5])
    if E.p == 2:
        put("p2_coincidence", report.maximals == report.absolute == report.relative)
    return D


def run_instance(seed: int, p: int, bound: int, include_dual: bool = True) -> InstanceResult:
    out = InstanceResult(seed, p, bound)
    try:
        E = random_good_ideal(seed, p, bound)
    except GenerationError as exc:
        out.error = str(exc)
        return out
    D = check_ideal(E, out, with_reconstruct=p <= 3)
    if include_dual:
        check_ideal(D, out, "dual.", D=E, with_reconstruct=p <= 3)
    return out


def default_corpus() -> List[Tuple[int, int, int]]:
    """(seed, p, bound) triples: 80 + 80 + 40 instances."""
    corpus = [(s, 2, 8) for s in range(1, 81)]
    corpus += [(s, 3, 6) for s in range(1, 81)]
    corpus += [(s, 4, 5) for s in range(1, 41)]
    return corpus


def _run(args):
    return run_instance(*args)


def run_many(jobs: Iterable[Tuple[int, int, int]], parallel: int = 1) -> List[InstanceResult]:
    """Results in job order regardless of the worker count."""
    jobs = list(jobs)
    if parallel > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(_run, jobs, chunksize=4))
    return [_run(j) for j in jobs]


def summarize(results: List[InstanceResult]) -> dict:
    counts = {}
    for r in results:
        for k, v in r.results.items():
            c = counts.setdefault(k, {"pass": 0, "fail": 0})
            c["pass" if v else "fail"] += 1
    failing = [r.to_dict() for r in results if not r.ok]
    return {
        "instances": len(results),
        "passed": sum(r.ok for r in results),
        "failed": len(failing),
        "checks": dict(sorted(counts.items())),
        "failures": failing,
    }
