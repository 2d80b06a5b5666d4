"""The decision pipeline and the exhaustive census.

Verdict pipeline for a nonempty pattern, cheapest test first and exact
arithmetic throughout:

1. the row/column count criterion fails        -> NPT_ENTANGLED
2. some pattern point is quadruple-free        -> PPT_ENTANGLED
3. the exact covering LP is feasible           -> SEPARABLE
4. otherwise                                   -> UNDECIDED

Every SEPARABLE verdict carries a covering that has been re-verified
exactly before the classification is returned.  The spectral oracle never
sits on the decision path; the census runs it across all 65,535 nonempty
patterns as an independent cross-check of step 1.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .coverings import (Covering, find_integer_uniform_covering,
                        find_uniform_covering, verify_decomposition)
from .fixtures import FIXTURES
from .patterns import (Pattern, ppt_combinatorial, prop_ppt2_point,
                       prop_ppt3_point)
from .quadruples import catalog_all, quadruple_free_point, quadruple_indices_inside
from .states import PPT_EIGENVALUE_TOLERANCE, lattice_pt_min_eigenvalues
from .symmetry import canonical_table

NPT_ENTANGLED = "NPT_ENTANGLED"
PPT_ENTANGLED = "PPT_ENTANGLED"
SEPARABLE = "SEPARABLE"
UNDECIDED = "UNDECIDED"

VERDICTS = (NPT_ENTANGLED, PPT_ENTANGLED, SEPARABLE, UNDECIDED)

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Classification:
    """Verdict plus machine-checkable certificate and criterion flags."""

    pattern: Pattern
    verdict: str
    violating_point: Optional[tuple] = None
    quadruple_free: Optional[tuple] = None
    covering: Optional[Covering] = None
    delta_estimate: Optional[float] = None
    flags: dict = field(default_factory=dict)

    def as_json(self) -> dict:
        cert: dict
        if self.verdict == NPT_ENTANGLED:
            cert = {"type": "violating_point", "point": list(self.violating_point)}
        elif self.verdict == PPT_ENTANGLED:
            cert = {"type": "quadruple_free_point", "point": list(self.quadruple_free)}
            if self.delta_estimate is not None:
                cert["delta_estimate"] = self.delta_estimate
        elif self.verdict == SEPARABLE:
            cert = {"type": "covering", **self.covering.as_json()}
        else:
            cert = {"type": "none"}
        return {
            "schema": SCHEMA_VERSION,
            "mask": self.pattern.hex(),
            "grid": self.pattern.grid_rows(),
            "n_points": self.pattern.n_points,
            "verdict": self.verdict,
            "certificate": cert,
            "flags": dict(sorted(self.flags.items())),
        }


def classify(pattern: Pattern, spectral: bool = False,
             delta: bool = False) -> Classification:
    """Classify one pattern; see the module docstring for the pipeline.

    spectral=True additionally runs the eigenvalue oracle and records its
    margin; delta=True attaches the single-point witness estimate to
    PPT-entangled verdicts (numeric, slower).  Raises ValueError on the
    empty pattern.
    """
    if pattern.mask == 0:
        raise ValueError("empty pattern")
    ppt, violating = ppt_combinatorial(pattern)
    ppt2 = prop_ppt2_point(pattern)
    ppt3 = prop_ppt3_point(pattern)
    flags = {
        "ppt": ppt,
        "ppt2_hit": list(ppt2) if ppt2 else None,
        "ppt3_hit": list(ppt3) if ppt3 else None,
        "spectral_ppt": None,
        "spectral_margin": None,
        "lp_feasible": None,
        "integer_covering": None,
    }
    if spectral:
        margin = float(lattice_pt_min_eigenvalues([pattern.mask])[0])
        flags["spectral_ppt"] = bool(margin >= -PPT_EIGENVALUE_TOLERANCE)
        flags["spectral_margin"] = margin

    if not ppt:
        return Classification(pattern, NPT_ENTANGLED,
                              violating_point=violating, flags=flags)

    free = quadruple_free_point(pattern)
    if free is not None:
        estimate = None
        if delta:
            from .witness import delta_max_estimate
            estimate = delta_max_estimate(pattern, free)
        return Classification(pattern, PPT_ENTANGLED, quadruple_free=free,
                              delta_estimate=estimate, flags=flags)

    result = find_uniform_covering(pattern)
    flags["lp_feasible"] = result.feasible
    if result.feasible:
        covering = result.covering
        flags["integer_covering"] = covering.counts is not None and all(
            c == 1 for c in covering.counts)
        if not verify_decomposition(pattern, covering):
            raise AssertionError(
                f"covering certificate failed exact verification on {pattern.hex()}")
        return Classification(pattern, SEPARABLE, covering=covering, flags=flags)
    flags["integer_covering"] = False
    return Classification(pattern, UNDECIDED, flags=flags)


def classify_rank11_conjecture() -> tuple[Classification, int]:
    """Classify the rank-11 pattern; also report the minimum, over its
    points, of the number of catalog quadruples through the point that
    lie inside the pattern."""
    pattern = FIXTURES["rank11"]
    cat = catalog_all()
    inside = set(quadruple_indices_inside(pattern.mask))
    min_through = min(
        sum(1 for i in cat.through[p] if i in inside) for p in pattern.points)
    return classify(pattern), min_through


# -- census -------------------------------------------------------------------

@dataclass
class CensusReport:
    totals: dict
    orbit_rows: list          # one dict per canonical orbit
    spectral_agreement: tuple  # (agreeing masks, total masks)
    final_proposition_holds: bool
    final_proposition_counterexamples: list
    ppt_pattern_count: int
    consistency: dict
    elapsed_seconds: float

    def summary_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "totals": self.totals,
            "orbit_count": len(self.orbit_rows),
            "spectral_agreement": {
                "agree": self.spectral_agreement[0],
                "total": self.spectral_agreement[1],
            },
            "final_proposition": {
                "holds": self.final_proposition_holds,
                "ppt_patterns": self.ppt_pattern_count,
                "counterexamples": self.final_proposition_counterexamples,
            },
            "consistency": self.consistency,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def as_json(self) -> dict:
        out = self.summary_json()
        out["orbits"] = self.orbit_rows
        return out


CSV_COLUMNS = ("canonical_mask", "N_I", "verdict", "ppt", "ppt2", "ppt3",
               "quadruple_free", "lp_feasible", "integer_covering")


def _cheap_scan(mask: int) -> tuple:
    """(ppt, ppt2 hit?, ppt3 hit?, quadruple-free hit?) for one mask."""
    p = Pattern(mask)
    ppt, _ = ppt_combinatorial(p)
    ppt2 = prop_ppt2_point(p) is not None
    ppt3 = prop_ppt3_point(p) is not None
    free = quadruple_free_point(p) is not None
    return ppt, ppt2, ppt3, free


def _scan_chunk(bounds: tuple) -> list:
    lo, hi = bounds
    return [(mask, _cheap_scan(mask)) for mask in range(lo, hi)]


def census(orbits_only: bool = False, jobs: int = 1,
           spectral: bool = True) -> CensusReport:
    """Classify every nonempty pattern and cross-validate the criteria.

    orbits_only classifies one representative per canonical orbit and
    multiplies by orbit sizes; the default walks all 65,535 masks,
    evaluating the criteria on every single one.  The covering LP runs
    once per canonical orbit either way (feasibility is orbit invariant,
    and the certificate is still verified exactly on the representative).
    jobs > 1 partitions the mask walk across worker processes.
    """
    start = time.time()
    canon = canonical_table()
    scan: dict[int, tuple] = {}
    orbit_size: dict[int, int] = {}
    for mask in range(1, 65536):
        c = int(canon[mask])
        orbit_size[c] = orbit_size.get(c, 0) + 1
        if c == mask:
            scan[mask] = _cheap_scan(mask)

    # per-orbit verdicts, LP on demand
    orbit_verdict: dict[int, str] = {}
    orbit_lp: dict[int, Optional[bool]] = {}
    orbit_int: dict[int, Optional[bool]] = {}
    for mask, (ppt, ppt2, ppt3, free) in scan.items():
        if not ppt:
            orbit_verdict[mask] = NPT_ENTANGLED
            orbit_lp[mask] = None
            orbit_int[mask] = None
        elif free:
            orbit_verdict[mask] = PPT_ENTANGLED
            orbit_lp[mask] = None
            orbit_int[mask] = None
        else:
            result = find_uniform_covering(Pattern(mask), integer_search=False)
            orbit_lp[mask] = result.feasible
            if result.feasible:
                if not verify_decomposition(Pattern(mask), result.covering):
                    raise AssertionError(f"bad covering certificate on {mask:#x}")
                orbit_verdict[mask] = SEPARABLE
                orbit_int[mask] = find_integer_uniform_covering(Pattern(mask)) is not None
            else:
                orbit_verdict[mask] = UNDECIDED
                orbit_int[mask] = False

    per_mask: dict[int, tuple] = {}
    if not orbits_only:
        if jobs > 1:
            from multiprocessing import Pool
            step = 4096
            bounds = [(lo, min(lo + step, 65536)) for lo in range(1, 65536, step)]
            with Pool(jobs) as pool:
                for chunk in pool.map(_scan_chunk, bounds):
                    per_mask.update(chunk)
        else:
            for mask in range(1, 65536):
                c = int(canon[mask])
                per_mask[mask] = scan[c] if mask == c else _cheap_scan(mask)

    totals = {v: 0 for v in VERDICTS}
    final_bad: list = []
    ppt_count = 0
    refinement_violations = 0
    masks_iter = scan.keys() if orbits_only else range(1, 65536)
    for mask in masks_iter:
        c = int(canon[mask])
        weight = orbit_size[c] if orbits_only else 1
        ppt, ppt2, ppt3, free = scan[c] if orbits_only else per_mask[mask]
        totals[orbit_verdict[c]] += weight
        if ppt2 and not ppt3:
            refinement_violations += weight
        if ppt:
            ppt_count += weight
            if (ppt2 or ppt3) != free:
                final_bad.append({"mask": f"0x{mask:04X}", "ppt2": ppt2,
                                  "ppt3": ppt3, "quadruple_free": free})

    # spectral cross-check over every nonempty mask
    agree = total = 0
    if spectral:
        import numpy as np
        masks = list(range(1, 65536))
        mins = lattice_pt_min_eigenvalues(masks)
        spectral_ppt = mins >= -PPT_EIGENVALUE_TOLERANCE
        comb = np.zeros(len(masks), dtype=bool)
        for i, mask in enumerate(masks):
            if per_mask:
                comb[i] = per_mask[mask][0]
            else:
                comb[i] = scan[int(canon[mask])][0]
        agree = int((spectral_ppt == comb).sum())
        total = len(masks)

    orbit_rows = []
    for mask in sorted(scan):
        ppt, ppt2, ppt3, free = scan[mask]
        orbit_rows.append({
            "canonical_mask": f"0x{mask:04X}",
            "N_I": Pattern(mask).n_points,
            "orbit_size": orbit_size[mask],
            "verdict": orbit_verdict[mask],
            "ppt": ppt,
            "ppt2": ppt2,
            "ppt3": ppt3,
            "quadruple_free": free,
            "lp_feasible": orbit_lp[mask],
            "integer_covering": orbit_int[mask],
        })

    lp_runs = sum(1 for v in orbit_lp.values() if v is not None)
    consistency = {
        "separable_all_ppt": all(
            r["ppt"] for r in orbit_rows if r["verdict"] == SEPARABLE),
        "ppt2_without_ppt3": refinement_violations,
        "lp_runs": lp_runs,
        "lp_feasible_orbits": sum(1 for v in orbit_lp.values() if v),
        "integer_covering_orbits": sum(1 for v in orbit_int.values() if v),
        "lp_feasible_without_integer_covering": sum(
            1 for m in orbit_lp if orbit_lp[m] and orbit_int[m] is False),
    }
    return CensusReport(
        totals=totals,
        orbit_rows=orbit_rows,
        spectral_agreement=(agree, total),
        final_proposition_holds=not final_bad,
        final_proposition_counterexamples=final_bad[:16],
        ppt_pattern_count=ppt_count,
        consistency=consistency,
        elapsed_seconds=time.time() - start,
    )


def equivalence_check_final_proposition() -> tuple[bool, list]:
    """Exhaustive check over PPT patterns: a single-line hit (either line
    criterion) occurs exactly when a quadruple-free point exists."""
    bad = []
    for mask in range(1, 65536):
        p = Pattern(mask)
        ppt, _ = ppt_combinatorial(p)
        if not ppt:
            continue
        hit = prop_ppt2_point(p) is not None or prop_ppt3_point(p) is not None
        free = quadruple_free_point(p) is not None
        if hit != free:
            bad.append(mask)
    return not bad, bad


def write_census_json(report: CensusReport, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report.as_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_census_csv(report: CensusReport, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in report.orbit_rows:
            writer.writerow([row["canonical_mask"], row["N_I"], row["verdict"],
                             row["ppt"], row["ppt2"], row["ppt3"],
                             row["quadruple_free"], row["lp_feasible"],
                             row["integer_covering"]])
