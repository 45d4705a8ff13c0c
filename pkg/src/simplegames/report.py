"""One-shot analysis of a game file: every property with its evidence."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .core import ORACLE_LIMIT, Hypergraph, SimpleGame, responds, row, transversal_kernel
from .duality import coherence_witness, strongness_witness
from .regular import (
    PlayerOrdering,
    find_regular_order,
    regular_transversal_kernel,
    regularity_violation,
    shift_kernel_to_kernel,
    shift_minimal_edges,
    shift_minimize,
)
from .weighted import (
    NonWeightedCertificate,
    ThresholdCriterion,
    check_criterion,
    is_homogeneous,
    is_majority,
    is_weighted,
    search_nonweighted_certificate,
    verify_nonweighted_certificate,
)

PROPERTIES = (
    "proper",
    "strong",
    "decisive",
    "regular",
    "linear",
    "weighted",
    "homogeneous",
    "majority",
    "submajority",
)


@dataclass
class Report:
    kernel: Hypergraph
    mode: str = "simple"
    proper: bool = False
    strong: bool = False
    decisive: bool = False
    regular: bool = False
    linear: bool = False
    weighted: bool = False
    homogeneous: bool = False
    majority: bool = False
    submajority: bool = False
    disjoint_winners: Optional[tuple[int, int]] = None
    strong_witness: Optional[int] = None
    regular_violation: Optional[tuple[int, int, int]] = None
    ordering: Optional[PlayerOrdering] = None
    criterion: Optional[ThresholdCriterion] = None
    homogeneous_criterion: Optional[ThresholdCriterion] = None
    not_weighted_reason: str = ""
    certificate: Optional[NonWeightedCertificate] = None
    shift_kernel: Optional[Hypergraph] = None
    dual: Optional[Hypergraph] = None
    dual_method: str = ""
    kappa: int = 0
    kappa_prime: Optional[int] = None
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.kernel.n

    def verdicts(self) -> dict[str, bool]:
        return {p: getattr(self, p) for p in PROPERTIES}

    def check_dependencies(self):
        implications = [
            ("decisive", ("proper", "strong")),
            ("majority", ("weighted", "decisive")),
            ("submajority", ("weighted", "strong")),
            ("homogeneous", ("weighted",)),
            ("weighted", ("linear",)),
            ("regular", ("linear",)),
        ]
        for p, needs in implications:
            for q in needs:
                if getattr(self, p) and not getattr(self, q):
                    raise AssertionError(f"report inconsistent: {p} without {q}")
        if self.decisive != (self.proper and self.strong):
            raise AssertionError("report inconsistent: decisive != proper and strong")

    def fields(self) -> list[tuple[str, str]]:
        n = self.n
        out = [("mode", self.mode), ("players", str(n)), ("edges", str(len(self.kernel)))]
        out += [(p, "true" if v else "false") for p, v in self.verdicts().items()]
        out.append(("kappa", str(self.kappa)))
        if self.kappa_prime is not None:
            out.append(("kappa_prime", str(self.kappa_prime)))
        if self.disjoint_winners:
            x, y = self.disjoint_winners
            out.append(("disjoint_winners", f"{row(x, n)} {row(y, n)}"))
        if self.strong_witness is not None:
            out.append(("losing_pair", f"{row(self.strong_witness, n)} {row(self.kernel.full ^ self.strong_witness, n)}"))
        if self.regular_violation:
            x, a, b = self.regular_violation
            out.append(("regular_violation", f"{row(x, n)} {b}->{a}"))
        if self.ordering is not None:
            out.append(("order_weakest_first", " ".join(map(str, self.ordering.weakest_first()))))
        if self.criterion is not None:
            out.append(("quota", str(self.criterion.q)))
            out.append(("weights", " ".join(str(v) for v in reversed(self.criterion.p))))
        if self.homogeneous_criterion is not None:
            out.append(("homogeneous_quota", str(self.homogeneous_criterion.q)))
            out.append(("homogeneous_weights", " ".join(str(v) for v in reversed(self.homogeneous_criterion.p))))
        if self.not_weighted_reason:
            out.append(("not_weighted_reason", self.not_weighted_reason))
        if self.certificate is not None:
            out.append(("certificate_u", " ".join(map(str, self.certificate.u))))
            out.append(("certificate_u_prime", " ".join(map(str, self.certificate.u_prime))))
        for name, secs in self.timings.items():
            out.append((f"time_{name}_ms", f"{secs * 1000:.3f}"))
        return out

    def format(self, kv: bool = False) -> str:
        pairs = self.fields()
        if kv:
            text = "\n".join(f"{k}={v}" for k, v in pairs)
        else:
            width = max(len(k) for k, _ in pairs)
            text = "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)
        blocks = [text]
        if self.shift_kernel is not None:
            blocks.append("# shift-minimal winning coalitions\n" + "\n".join(self.shift_kernel.rows()))
        if self.dual is not None:
            blocks.append(f"# minimal transversals ({self.dual_method})\n" + "\n".join(self.dual.rows()))
        return "\n".join(blocks) + "\n"


def dualize(h: Hypergraph) -> tuple[Hypergraph, str]:
    """Minimal transversals, through a regular relabelling when one exists."""
    order = find_regular_order(h)
    if order is None:
        return transversal_kernel(h), "berge"
    inv = order.inverse()
    k = regular_transversal_kernel(order.relabel(h))
    return inv.relabel(k), "regular"


def analyze(
    h: Hypergraph,
    mode: str = "simple",
    emit_dual: bool = False,
    emit_shift_kernel: bool = False,
    certify: bool = False,
    max_certificate_total: int = 4,
    limit: int = ORACLE_LIMIT,
) -> Report:
    """Decide every property of the game specified by ``h``.

    In ``simple`` mode ``h`` lists the minimal winning coalitions.  In
    ``regular`` mode it lists shift-minimal winners; the minimal winners are
    then recovered by an exhaustive scan, so ``n`` is capped by ``limit``.
    """
    clock = {}
    t0 = time.perf_counter()
    if mode == "regular":
        spec = Hypergraph(h.n, tuple(shift_minimal_edges(list(h.edges), h.n)))
        kernel = shift_kernel_to_kernel(spec, limit)
        clock["expand"] = time.perf_counter() - t0
    elif mode == "simple":
        kernel = h
    else:
        raise ValueError(f"unknown mode {mode!r}")
    game = SimpleGame(kernel)
    rep = Report(kernel, mode=mode, kappa=kernel.n * len(kernel))

    t = time.perf_counter()
    rep.disjoint_winners = coherence_witness(kernel, kernel)
    rep.proper = rep.disjoint_winners is None
    rep.strong_witness = strongness_witness(game)
    rep.strong = rep.strong_witness is None
    rep.decisive = rep.proper and rep.strong
    clock["duality"] = time.perf_counter() - t

    t = time.perf_counter()
    rep.regular_violation = regularity_violation(kernel)
    rep.regular = rep.regular_violation is None
    rep.ordering = find_regular_order(kernel)
    rep.linear = rep.ordering is not None
    if rep.regular:
        rep.shift_kernel = shift_minimize(kernel)
        rep.kappa_prime = kernel.n * len(rep.shift_kernel)
        if not emit_shift_kernel:
            rep.shift_kernel = None
    clock["regular"] = time.perf_counter() - t

    t = time.perf_counter()
    crit = is_weighted(game)
    rep.weighted = bool(crit)
    if crit:
        rep.criterion = crit
        hom = is_homogeneous(game)
        rep.homogeneous = bool(hom)
        rep.homogeneous_criterion = hom or None
    else:
        rep.not_weighted_reason = crit.reason
    verdict = is_majority(game)
    rep.majority = verdict.majority
    rep.submajority = verdict.submajority
    if certify and not rep.weighted and rep.proper:
        rep.certificate = search_nonweighted_certificate(kernel, max_certificate_total)
    clock["weighted"] = time.perf_counter() - t

    if emit_dual:
        t = time.perf_counter()
        rep.dual, rep.dual_method = dualize(kernel)
        clock["dual"] = time.perf_counter() - t

    _reverify(rep)
    rep.check_dependencies()
    clock["total"] = time.perf_counter() - t0
    rep.timings = clock
    return rep


def _reverify(rep: Report):
    h = rep.kernel
    if rep.disjoint_winners is not None:
        x, y = rep.disjoint_winners
        assert x & y == 0 and x in h and y in h
    if rep.strong_witness is not None:
        z = rep.strong_witness
        assert not responds(h, z) and not responds(h, h.full ^ z)
    for crit, hom in ((rep.criterion, False), (rep.homogeneous_criterion, True)):
        if crit is not None and not check_criterion(h, crit, hom):
            raise AssertionError("emitted criterion fails re-verification")
    if rep.certificate is not None and not verify_nonweighted_certificate(h, rep.certificate):
        raise AssertionError("emitted certificate fails re-verification")
