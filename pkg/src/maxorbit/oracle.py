"""Independent verification of the recursion by finite-field sampling.

Random elements of the structured nilpotent slice are drawn over GF(p) for a
large prime p; their Jordan types must all be dominated by the predicted
maximal type, and for generic draws the maximum is attained.  A pure audit
sweeps the structural invariants over every partition up to a bound.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from . import basis_graph, centralizer, maxtype
from .fieldmat import rank_profile, type_from_profile
from .partitions import (
    Ordering,
    Partition,
    ar_decomposition,
    dominance,
    enumerate_partitions,
    is_almost_rectangular,
    s_max,
    tilde,
)

__all__ = [
    "Verdict",
    "VerifyReport",
    "verify",
    "AuditSummary",
    "audit_range",
    "enumerate_partitions",
    "verify_report_text",
    "audit_summary_text",
]


class Verdict(enum.Enum):
    CONFIRMED = "Confirmed"
    MAX_MISMATCH = "MaxMismatch"
    DOMINANCE_VIOLATION = "DominanceViolation"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of sampling one partition.

    ``observed`` pairs each distinct sampled Jordan type with its frequency;
    ``maximal`` is the dominance-maximal antichain of the observed types.
    Confirmed means the antichain is exactly the predicted type and no
    per-sample check failed.
    """

    partition: Partition
    predicted: Partition
    prime: int
    samples: int
    seed: int
    observed: tuple[tuple[Partition, int], ...]
    maximal: tuple[Partition, ...]
    corank_counts: tuple[tuple[int, int], ...]
    modal_corank: int
    expected_corank: int
    violations: tuple[tuple[str, int], ...]
    verdict: Verdict

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "predicted": list(self.predicted.parts),
            "prime": self.prime,
            "samples": self.samples,
            "seed": self.seed,
            "observed": [
                {"type": list(t.parts), "count": c} for t, c in self.observed
            ],
            "maximal": [list(t.parts) for t in self.maximal],
            "corank_counts": [
                {"corank": c, "count": k} for c, k in self.corank_counts
            ],
            "modal_corank": self.modal_corank,
            "expected_corank": self.expected_corank,
            "violations": [{"check": name, "witness": w} for name, w in self.violations],
            "verdict": self.verdict.value,
        }


def verify(
    b: Partition, p: int = 10007, samples: int = 100, seed: int = 0
) -> VerifyReport:
    """Sample the structured nilpotent slice and compare against Q(B).

    Per sample: the Jordan type must be dominated by Q(B) (a single failure
    falsifies the implementation, since orbit-closure containment is exact),
    and the rank of every power of the s_max-th power is bounded by the rank
    of the same power of the Jordan matrix.  Coranks are tallied: the modal
    corank of generic samples is the number of almost rectangular segments.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    predicted = maxtype.q_of(b).result
    spec = centralizer.subalgebra_spec(b, "N_bar")
    n = b.n
    j_profile = rank_profile(centralizer.jordan_matrix(b, p)) if b else None
    sb = s_max(b) if b else 1
    expected_corank = ar_decomposition(b).r if b else 0

    type_counts: Counter = Counter()
    corank_counts: Counter = Counter()
    violations: list[tuple[str, int]] = []
    for idx in range(samples):
        a = centralizer.sample(spec, p, seed=(seed, idx))
        profile = rank_profile(a)
        jt = type_from_profile(profile, n)
        type_counts[jt] += 1
        corank_counts[n - profile.at(1)] += 1
        if dominance(jt, predicted) not in (Ordering.LESS, Ordering.EQUAL):
            violations.append(("type_le_q", idx))
        if j_profile is not None:
            # rank((A^sb)^m) == rank(A^(sb*m)), read off the profile directly
            for m in range(n + 1):
                if profile.at(sb * m) > j_profile.at(m):
                    violations.append(("power_rank_bound", idx))
                    break

    types = sorted(type_counts, key=lambda t: t.parts, reverse=True)
    maximal = tuple(
        t
        for t in types
        if not any(u != t and dominance(t, u) is Ordering.LESS for u in types)
    )
    modal_corank = min(
        corank_counts, key=lambda c: (-corank_counts[c], c)
    )

    dom_failed = any(name == "type_le_q" for name, _ in violations)
    if dom_failed:
        verdict = Verdict.DOMINANCE_VIOLATION
    elif violations:
        verdict = Verdict.MAX_MISMATCH
    elif maximal == (predicted,):
        verdict = Verdict.CONFIRMED
    elif all(dominance(t, predicted) is Ordering.LESS for t in maximal):
        verdict = Verdict.INCONCLUSIVE  # unlucky draws; rerun with more samples
    else:
        verdict = Verdict.MAX_MISMATCH

    observed = tuple(
        (t, type_counts[t])
        for t in sorted(type_counts, key=lambda t: (-type_counts[t], t.parts))
    )
    return VerifyReport(
        partition=b,
        predicted=predicted,
        prime=p,
        samples=samples,
        seed=seed,
        observed=observed,
        maximal=maximal,
        corank_counts=tuple(sorted(corank_counts.items())),
        modal_corank=modal_corank,
        expected_corank=expected_corank,
        violations=tuple(violations),
        verdict=verdict,
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passes: int
    failures: int
    first_counterexample: Optional[str]


@dataclass(frozen=True)
class SamplingSummary:
    upto: int
    prime: int
    samples: int
    seed: int
    partitions: int
    confirmed: int
    escalated: int
    failed: tuple[str, ...]


@dataclass(frozen=True)
class AuditSummary:
    n_max: int
    partitions: int
    checks: tuple[CheckResult, ...]
    total_failures: int
    sampling: Optional[SamplingSummary]

    def to_dict(self) -> dict:
        d = {
            "n_max": self.n_max,
            "partitions": self.partitions,
            "checks": [
                {
                    "name": c.name,
                    "passes": c.passes,
                    "failures": c.failures,
                    "first_counterexample": c.first_counterexample,
                }
                for c in self.checks
            ],
            "total_failures": self.total_failures,
            "sampling": None,
        }
        if self.sampling is not None:
            s = self.sampling
            d["sampling"] = {
                "upto": s.upto,
                "prime": s.prime,
                "samples": s.samples,
                "seed": s.seed,
                "partitions": s.partitions,
                "confirmed": s.confirmed,
                "escalated": s.escalated,
                "failed": list(s.failed),
            }
        return d


_TIE_ROBUST_LIMIT = 20  # maximiser enumeration is cheap, but pin the sweep bound


def _pure_checks(b: Partition) -> list[tuple[str, bool, str]]:
    """Run every structural invariant on one partition.

    Returns (check name, passed, detail) triples.  Each invariant is phrased
    against an independent route: the graph levels against the index formula,
    the fixed points against the gap condition, and so on.
    """
    chain = maxtype.q_of(b)
    q = chain.result
    graph = basis_graph.build_graph(b)
    sel = chain.steps[0].selection
    out: list[tuple[str, bool, str]] = []

    gaps_ok = all(q[i] - q[i + 1] >= 2 for i in range(q.t - 1))
    out.append(("q_gaps_ge_2", gaps_ok, f"Q={q.parts}"))
    out.append(("q_idempotent", maxtype.q_of(q).result == q, f"Q={q.parts}"))
    out.append(("q_weight", q.n == b.n, f"Q={q.parts}"))

    all_gaps_gt_1 = all(b[i] - b[i + 1] > 1 for i in range(b.t - 1))
    out.append(("q_fixed_iff_gaps", (q == b) == all_gaps_gt_1, f"Q={q.parts}"))
    out.append(
        (
            "q_ar_iff_single",
            is_almost_rectangular(b) == (q == Partition([b.n])),
            f"Q={q.parts}",
        )
    )
    out.append(
        (
            "q_dominates_b",
            dominance(b, q) in (Ordering.LESS, Ordering.EQUAL),
            f"Q={q.parts}",
        )
    )
    out.append(
        (
            "omega1_graph_agrees",
            graph.omega1 == chain.steps[0].omega1,
            f"graph={graph.omega1} formula={chain.steps[0].omega1}",
        )
    )
    out.append(
        (
            "delta_circ_card_eq_omega1",
            sel.cardinality == chain.steps[0].omega1,
            f"card={sel.cardinality}",
        )
    )
    circ_levels = sorted(graph.level[lab] for lab in graph.delta_circ)
    out.append(
        (
            "delta_circ_level_bijection",
            circ_levels == list(range(graph.omega1)),
            f"levels={circ_levels}",
        )
    )

    segs = ar_decomposition(b).segment_bounds()
    if all(hi - lo + 1 == s_max(b) for lo, hi in segs):
        out.append(("equal_segments_give_tilde", q == tilde(b), f"tilde={tilde(b).parts}"))

    if b.n <= _TIE_ROBUST_LIMIT:
        variants = {
            maxtype.q_of(maxtype.hat_with(b, m)).result
            for m in maxtype.hat_maximizers(b)
        }
        expected = Partition(q.parts[1:])
        out.append(
            (
                "hat_tie_robust",
                variants == {expected},
                f"variants={[v.parts for v in variants]}",
            )
        )
    return out


def audit_range(
    n_max: int,
    sample_upto: int = 0,
    prime: int = 10007,
    samples: int = 100,
    seed: int = 0,
) -> AuditSummary:
    """Sweep the pure invariants over every partition of every n <= n_max.

    With ``sample_upto`` > 0, partitions of weight up to that bound are also
    run through :func:`verify`; an Inconclusive verdict is retried once with
    ten times the samples before counting as a failure.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    passes: Counter = Counter()
    failures: Counter = Counter()
    first: dict[str, str] = {}
    total = 0
    sampling = None
    s_partitions = s_confirmed = s_escalated = 0
    s_failed: list[str] = []
    for n in range(1, n_max + 1):
        for b in enumerate_partitions(n):
            total += 1
            for name, ok, detail in _pure_checks(b):
                if ok:
                    passes[name] += 1
                else:
                    failures[name] += 1
                    first.setdefault(name, f"B={b.parts}: {detail}")
            if n <= sample_upto:
                s_partitions += 1
                report = verify(b, p=prime, samples=samples, seed=seed)
                if report.verdict is Verdict.INCONCLUSIVE:
                    s_escalated += 1
                    report = verify(b, p=prime, samples=10 * samples, seed=seed)
                if report.verdict is Verdict.CONFIRMED:
                    s_confirmed += 1
                else:
                    s_failed.append(
                        f"B={b.parts}: {report.verdict.value}"
                    )
    if sample_upto > 0:
        sampling = SamplingSummary(
            upto=sample_upto,
            prime=prime,
            samples=samples,
            seed=seed,
            partitions=s_partitions,
            confirmed=s_confirmed,
            escalated=s_escalated,
            failed=tuple(s_failed),
        )
    names = sorted(set(passes) | set(failures))
    checks = tuple(
        CheckResult(name, passes[name], failures[name], first.get(name))
        for name in names
    )
    total_failures = sum(failures.values()) + len(s_failed)
    return AuditSummary(n_max, total, checks, total_failures, sampling)


def verify_report_text(d: dict) -> str:
    """Human rendering of a VerifyReport dict (as served over the wire)."""
    lines = [
        "partition = "
        + ",".join(str(x) for x in d["partition"]),
        f"prime={d['prime']} samples={d['samples']} seed={d['seed']}",
        "predicted Q = " + ",".join(str(x) for x in d["predicted"]),
        f"observed types ({len(d['observed'])} distinct):",
    ]
    for rec in d["observed"]:
        lines.append(
            "  " + ",".join(str(x) for x in rec["type"]) + f"  x{rec['count']}"
        )
    lines.append(
        "maximal observed = "
        + "; ".join(",".join(str(x) for x in t) for t in d["maximal"])
    )
    lines.append(
        f"modal corank = {d['modal_corank']} (expected {d['expected_corank']})"
    )
    if d["violations"]:
        for v in d["violations"]:
            lines.append(f"violation: {v['check']} at sample {v['witness']}")
    lines.append(f"verdict: {d['verdict']}")
    return "\n".join(lines)


def audit_summary_text(d: dict) -> str:
    """Human rendering of an AuditSummary dict."""
    lines = [f"audit n <= {d['n_max']}: {d['partitions']} partitions"]
    width = max((len(c["name"]) for c in d["checks"]), default=4)
    for c in d["checks"]:
        line = f"  {c['name'].ljust(width)}  pass={c['passes']}  fail={c['failures']}"
        if c["first_counterexample"]:
            line += f"  first: {c['first_counterexample']}"
        lines.append(line)
    if d.get("sampling"):
        s = d["sampling"]
        lines.append(
            f"  sampling n <= {s['upto']} (p={s['prime']}, samples={s['samples']}, "
            f"seed={s['seed']}): {s['confirmed']}/{s['partitions']} confirmed, "
            f"{s['escalated']} escalated"
        )
        for f in s["failed"]:
            lines.append(f"    FAILED {f}")
    lines.append(f"total failures: {d['total_failures']}")
    return "\n".join(lines)
