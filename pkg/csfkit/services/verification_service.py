"""Desk-scale verification runs.

Each check enumerates its instances in a fixed order, evaluates them on a
thread pool and assembles the report in submission order, so the text is
byte-identical for any thread count.
"""

import logging
import random
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, TypeVar

from csfkit.config.constants import (
    DEFAULT_CLASSES_MAX_WEIGHT,
    DEFAULT_EQ3_MAX_ORDER,
    DEFAULT_LEMMA3_MAX_ORDER,
    DEFAULT_PROP1_MAX_ORDER,
    DEFAULT_UPOLY_MAX_ORDER,
    DEFAULT_UPOLY_RANDOM_MAX_ORDER,
    DEFAULT_UPOLY_RANDOM_TREES,
    LOG_MSG_ORDER_DONE,
    LOG_MSG_VERIFY_DONE,
    LOG_MSG_VERIFY_START,
    LOG_MSG_WORKERS,
    STATUS_FAIL,
    STATUS_PASS,
)
from csfkit.config.settings import Config
from csfkit.core.caterpillars import (
    is_proper_q_caterpillar_prop1,
    lemma4_certificate,
    phi,
    structural_spine,
    tau,
)
from csfkit.core.compositions import (
    check_lemma4_shape,
    compose,
    compose_all,
    compositions_of,
    irreducible_factorization,
    l_equivalence_class,
    l_polynomial,
    qualifying_compositions,
    reverse,
)
from csfkit.core.enumeration import enumerate_trees
from csfkit.core.symmetric import csf_from_upoly, csf_power_sum
from csfkit.core.trees import random_tree
from csfkit.core.upoly import restrict_min_part, upoly_naive, upoly_tree_dp
from csfkit.models.composition import Composition
from csfkit.models.report import RunManifest, RunResult, VerificationReport
from csfkit.models.tree import Tree
from csfkit.services.report_cache import NullReportCache, ReportCacheProtocol
from csfkit.utils.errors import BoundExceededError, ValidationError
from csfkit.utils.formatters import format_polynomial, format_tree
from csfkit.utils.validators import validate_positive, validate_q
from csfkit.utils.version import TOOL_VERSION

T = TypeVar("T")
R = TypeVar("R")

Partitioning = FrozenSet[FrozenSet[Composition]]


def _status(ok: bool) -> str:
    return STATUS_PASS if ok else STATUS_FAIL


def _partition_by(keys: Dict[Composition, str]) -> Partitioning:
    groups: Dict[str, set] = defaultdict(set)
    for composition, key in keys.items():
        groups[key].add(composition)
    return frozenset(frozenset(group) for group in groups.values())


@dataclass
class _TauCheck:
    """Per-instance results of the τ cross-checks."""
    composition: Composition
    l_key: str
    u_key: str
    csf_key: Optional[str]
    round_trip: bool


class VerificationService:
    """Runs the verification commands and caches their reports.

    Attributes:
        config: Application configuration (bounds, threads, sampling)
        cache: Report cache, NullReportCache when none is given
    """

    COMMANDS = ("theorem1", "lemma3", "eq3", "prop1", "upoly", "lemma4", "classes")

    def __init__(self, config: Config, cache: Optional[ReportCacheProtocol] = None):
        self.config = config
        self.cache = cache or NullReportCache()
        self._logger = logging.getLogger(__name__)

    # ------------------------------------------------------------------
    # Infrastructure
    # ------------------------------------------------------------------

    def _map(self, fn: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """Apply fn to every item on the worker pool; results keep item order."""
        worker_count = max(1, min(self.config.THREADS, len(items)))
        if worker_count == 1:
            return [fn(item) for item in items]
        self._logger.debug(LOG_MSG_WORKERS.format(workers=worker_count, items=len(items)))
        with ThreadPoolExecutor(max_workers=worker_count) as executor:
            return list(executor.map(fn, items))

    def _rng(self) -> random.Random:
        return random.Random(self.config.RANDOM_SEED)

    def manifest_for(self, command: str, params: Dict[str, Any]) -> RunManifest:
        """Manifest of a run: its own params plus every setting that shapes the report."""
        full = dict(params)
        full.update({
            "csf_bound": self.config.CSF_ORDER_BOUND,
            "tree_bound": self.config.TREE_ORDER_BOUND,
            "composition_bound": self.config.COMPOSITION_ORDER_BOUND,
            "sample_size": self.config.SAMPLE_SIZE,
            "seed": self.config.RANDOM_SEED,
        })
        return RunManifest(command=command, params=full, version=TOOL_VERSION)

    def run(self, command: str, params: Dict[str, Any], use_cache: bool = False) -> RunResult:
        """
        Run a verification command, serving it from the cache when allowed

        The report is written to the cache after every fresh run.

        Args:
            command: One of COMMANDS
            params: Keyword arguments of the command method
            use_cache: Read a stored report for an identical manifest

        Returns:
            RunResult with the rendered report

        Raises:
            ValidationError: Unknown command
            CacheError: The cache cannot be written
        """
        if command not in self.COMMANDS:
            raise ValidationError(f"unknown verification command: {command}")
        manifest = self.manifest_for(command, params)
        if use_cache:
            hit = self.cache.get(manifest)
            if hit is not None:
                return hit

        self._logger.info(LOG_MSG_VERIFY_START.format(command=command, params=params))
        report: VerificationReport = getattr(self, command)(**params)
        manifest.outcome = report.status
        text = report.render()
        self.cache.put(manifest, text)
        self._logger.info(LOG_MSG_VERIFY_DONE.format(command=command, status=report.status))
        return RunResult(manifest=manifest, text=text)

    def _check_bound(self, what: str, size: int, bound: int) -> None:
        if size > bound:
            raise BoundExceededError(what, size, bound)

    # ------------------------------------------------------------------
    # CSF distinguishes proper q-caterpillars
    # ------------------------------------------------------------------

    def theorem1(self, q: int, max_order: int) -> VerificationReport:
        """
        Group every qualifying composition by L-polynomial, order by order

        PASS iff each group is exactly {α, α*}. Instances of order up to the
        CSF bound are re-grouped by the restricted U-polynomial and by the CSF
        of τ(α); a seeded sample of larger instances checks the U-polynomial
        and the φ/τ round trip.

        Raises:
            ValidationError: q < 2 or max_order < 1
            BoundExceededError: max_order above the composition bound
        """
        validate_q(q)
        validate_positive(max_order, "max_order")
        self._check_bound("max order", max_order, self.config.COMPOSITION_ORDER_BOUND)
        report = VerificationReport("theorem1", {"q": q, "max_order": max_order})

        larger: List[Composition] = []
        for order in range(q + 1, max_order + 1):
            compositions = list(qualifying_compositions(order, q, self.config.COMPOSITION_ORDER_BOUND))
            keys = self._map(lambda a: format_polynomial(l_polynomial(a)), compositions)
            groups: Dict[str, List[Composition]] = defaultdict(list)
            for composition, key in zip(compositions, keys):
                groups[key].append(composition)

            ok = True
            for key, members in groups.items():
                expected = {members[0], reverse(members[0])}
                if set(members) != expected:
                    ok = False
                    report.violations.append(
                        f"q={q} n={order} group "
                        + " | ".join(str(m) for m in members)
                        + f" expected {' | '.join(sorted(str(e) for e in expected))} L={key}"
                    )
            max_class = max((len(members) for members in groups.values()), default=0)
            report.lines.append(
                f"q={q} n={order} classes={len(groups)} max_class={max_class} {_status(ok)}"
            )
            self._logger.debug(LOG_MSG_ORDER_DONE.format(q=q, order=order, count=len(compositions)))

            if order <= self.config.CSF_ORDER_BOUND:
                self._cross_check_order(q, order, compositions, report)
            else:
                larger.extend(compositions)

        self._sample_larger(q, larger, report)
        return report

    def _tau_check(self, q: int, composition: Composition, with_csf: bool) -> _TauCheck:
        t = tau(composition, q)
        return _TauCheck(
            composition=composition,
            l_key=format_polynomial(l_polynomial(composition)),
            u_key=format_polynomial(restrict_min_part(upoly_tree_dp(t), q)),
            csf_key=(
                format_polynomial(csf_power_sum(t, self.config.CSF_ORDER_BOUND))
                if with_csf else None
            ),
            round_trip=phi(t, q) in (composition, reverse(composition)),
        )

    def _cross_check_order(
        self,
        q: int,
        order: int,
        compositions: List[Composition],
        report: VerificationReport,
    ) -> None:
        checks = self._map(lambda a: self._tau_check(q, a, True), compositions)
        by_l = _partition_by({c.composition: c.l_key for c in checks})
        by_u = _partition_by({c.composition: c.u_key for c in checks})
        by_csf = _partition_by({c.composition: c.csf_key for c in checks})
        ok = by_l == by_u == by_csf
        if by_u != by_l:
            report.violations.append(f"q={q} n={order} U-polynomial grouping differs from L-polynomial grouping")
        if by_csf != by_l:
            report.violations.append(f"q={q} n={order} CSF grouping differs from L-polynomial grouping")
        for check in checks:
            if check.u_key != check.l_key:
                ok = False
                report.violations.append(
                    f"q={q} composition {check.composition}: U restricted={check.u_key} L={check.l_key}"
                )
            if not check.round_trip:
                ok = False
                report.violations.append(f"q={q} composition {check.composition}: phi(tau) round trip failed")
        report.lines.append(f"q={q} n={order} cross-check instances={len(checks)} {_status(ok)}")

    def _sample_larger(self, q: int, pool: List[Composition], report: VerificationReport) -> None:
        if not pool:
            return
        sample = self._rng().sample(pool, min(self.config.SAMPLE_SIZE, len(pool)))
        checks = self._map(lambda a: self._tau_check(q, a, False), sample)
        ok = True
        for check in checks:
            if check.u_key != check.l_key or not check.round_trip:
                ok = False
                report.violations.append(
                    f"q={q} sampled composition {check.composition}: "
                    f"U restricted={check.u_key} L={check.l_key} round_trip={check.round_trip}"
                )
        report.lines.append(f"q={q} sample instances={len(checks)} {_status(ok)}")

    # ------------------------------------------------------------------
    # Instancewise checks
    # ------------------------------------------------------------------

    def lemma3(self, q: int, max_order: int = DEFAULT_LEMMA3_MAX_ORDER) -> VerificationReport:
        """Restricted U-polynomial against L(φ(T)) for every proper q-caterpillar."""
        validate_q(q)
        validate_positive(max_order, "max_order")
        self._check_bound("max order", max_order, self.config.COMPOSITION_ORDER_BOUND)
        report = VerificationReport("lemma3", {"q": q, "max_order": max_order})

        def check(a: Composition) -> Optional[str]:
            t = tau(a, q)
            image = phi(t, q)
            if image not in (a, reverse(a)):
                return f"q={q} composition {a}: phi(tau) = {image}"
            restricted = restrict_min_part(upoly_tree_dp(t), q)
            expected = l_polynomial(image)
            if restricted != expected:
                return (
                    f"q={q} tree {format_tree(t)}: U restricted={format_polynomial(restricted)} "
                    f"L(phi)={format_polynomial(expected)}"
                )
            return None

        for order in range(q + 1, max_order + 1):
            compositions = list(qualifying_compositions(order, q, self.config.COMPOSITION_ORDER_BOUND))
            failures = [f for f in self._map(check, compositions) if f is not None]
            report.violations.extend(failures)
            report.lines.append(
                f"q={q} n={order} caterpillars={len(compositions)} {_status(not failures)}"
            )
        return report

    def eq3(self, max_order: int = DEFAULT_EQ3_MAX_ORDER) -> VerificationReport:
        """CSF recovered from the U-polynomial against the power-sum expansion, all trees."""
        validate_positive(max_order, "max_order")
        self._check_bound("max order", max_order, min(self.config.CSF_ORDER_BOUND, self.config.TREE_ORDER_BOUND))
        report = VerificationReport("eq3", {"max_order": max_order})

        def check(t: Tree) -> Optional[str]:
            recovered = csf_from_upoly(upoly_tree_dp(t), t.order)
            direct = csf_power_sum(t, self.config.CSF_ORDER_BOUND)
            if recovered != direct:
                return (
                    f"tree {format_tree(t)}: from U={format_polynomial(recovered)} "
                    f"power-sum={format_polynomial(direct)}"
                )
            return None

        for order in range(1, max_order + 1):
            trees = list(enumerate_trees(order))
            failures = [f for f in self._map(check, trees) if f is not None]
            report.violations.extend(failures)
            report.lines.append(f"n={order} trees={len(trees)} {_status(not failures)}")
        return report

    def prop1(self, q: int, max_order: int = DEFAULT_PROP1_MAX_ORDER) -> VerificationReport:
        """
        Structural recognizer against the trunk/twig/diameter recognizer on all trees

        Also checks that the recognized trees match the qualifying
        compositions up to reversal, one to one.
        """
        validate_q(q)
        validate_positive(max_order, "max_order")
        self._check_bound("max order", max_order, self.config.TREE_ORDER_BOUND)
        report = VerificationReport("prop1", {"q": q, "max_order": max_order})

        def check(t: Tree) -> Tuple[Optional[Composition], bool]:
            return structural_spine(t, q), is_proper_q_caterpillar_prop1(t, q)

        for order in range(1, max_order + 1):
            trees = list(enumerate_trees(order))
            results = self._map(check, trees)
            ok = True
            recognized: List[Composition] = []
            for t, (spine, by_conditions) in zip(trees, results):
                structural = spine is not None
                if structural != by_conditions:
                    ok = False
                    report.violations.append(
                        f"q={q} tree {format_tree(t)}: structural={structural} conditions={by_conditions}"
                    )
                if spine is not None:
                    recognized.append(spine)
            expected = {
                min(a, reverse(a))
                for a in qualifying_compositions(order, q, self.config.COMPOSITION_ORDER_BOUND)
            }
            if sorted(recognized) != sorted(expected):
                ok = False
                report.violations.append(
                    f"q={q} n={order}: {len(recognized)} caterpillars recognized, "
                    f"{len(expected)} compositions up to reversal"
                )
            report.lines.append(
                f"q={q} n={order} trees={len(trees)} caterpillars={len(recognized)} {_status(ok)}"
            )
        return report

    def upoly(
        self,
        max_order: int = DEFAULT_UPOLY_MAX_ORDER,
        random_trees: int = DEFAULT_UPOLY_RANDOM_TREES,
    ) -> VerificationReport:
        """Dynamic-program U-polynomial against subset enumeration, exhaustive then random."""
        validate_positive(max_order, "max_order")
        if random_trees < 0:
            raise ValidationError(f"random tree count must be non-negative, got {random_trees}")
        self._check_bound("max order", max_order, min(self.config.CSF_ORDER_BOUND, self.config.TREE_ORDER_BOUND))
        report = VerificationReport("upoly", {"max_order": max_order, "random": random_trees})

        def check(t: Tree) -> Optional[str]:
            dp = upoly_tree_dp(t)
            naive = upoly_naive(t, self.config.CSF_ORDER_BOUND)
            if dp != naive:
                return f"tree {format_tree(t)}: dp={format_polynomial(dp)} naive={format_polynomial(naive)}"
            return None

        for order in range(1, max_order + 1):
            trees = list(enumerate_trees(order))
            failures = [f for f in self._map(check, trees) if f is not None]
            report.violations.extend(failures)
            report.lines.append(f"n={order} trees={len(trees)} {_status(not failures)}")

        if random_trees:
            rng = self._rng()
            largest = min(DEFAULT_UPOLY_RANDOM_MAX_ORDER, self.config.CSF_ORDER_BOUND)
            samples = [random_tree(rng.randint(1, largest), rng) for _ in range(random_trees)]
            failures = [f for f in self._map(check, samples) if f is not None]
            report.violations.extend(failures)
            report.lines.append(
                f"random trees={len(samples)} max_order={largest} {_status(not failures)}"
            )
        return report

    def lemma4(self, q: int, max_order: int) -> VerificationReport:
        """Factorization shape of every caterpillar composition after dividing out its gcd."""
        validate_q(q)
        validate_positive(max_order, "max_order")
        self._check_bound("max order", max_order, self.config.COMPOSITION_ORDER_BOUND)
        report = VerificationReport("lemma4", {"q": q, "max_order": max_order})

        def check(a: Composition) -> Optional[str]:
            epsilon, divisor, h = lemma4_certificate(a, q)
            if compose(epsilon, Composition((divisor,))) != a:
                return f"q={q} composition {a}: {epsilon} o {divisor} does not recompose"
            if epsilon.is_identity:
                return None
            if not check_lemma4_shape(epsilon, h, q):
                return (
                    f"q={q} composition {a}: {epsilon} (h={h}) factors as "
                    f"{irreducible_factorization(epsilon)}"
                )
            return None

        for order in range(q + 1, max_order + 1):
            compositions = list(qualifying_compositions(order, q, self.config.COMPOSITION_ORDER_BOUND))
            failures = [f for f in self._map(check, compositions) if f is not None]
            report.violations.extend(failures)
            report.lines.append(f"q={q} n={order} compositions={len(compositions)} {_status(not failures)}")
        return report

    def classes(self, max_weight: int = DEFAULT_CLASSES_MAX_WEIGHT) -> VerificationReport:
        """
        Factor-reversal classes against brute-force L-polynomial grouping

        Every composition must also recompose from its irreducible factorization.
        """
        validate_positive(max_weight, "max_weight")
        self._check_bound("max weight", max_weight, self.config.COMPOSITION_ORDER_BOUND)
        report = VerificationReport("classes", {"max_weight": max_weight})

        def check(a: Composition) -> Tuple[str, Optional[FrozenSet[Composition]], bool]:
            key = format_polynomial(l_polynomial(a))
            if a.is_identity:
                return key, frozenset({a}), True
            recomposes = compose_all(irreducible_factorization(a).factors) == a
            return key, l_equivalence_class(a), recomposes

        for weight in range(1, max_weight + 1):
            compositions = list(compositions_of(weight, self.config.COMPOSITION_ORDER_BOUND))
            results = self._map(check, compositions)
            groups: Dict[str, set] = defaultdict(set)
            for a, (key, _, _) in zip(compositions, results):
                groups[key].add(a)
            ok = True
            for a, (key, predicted, recomposes) in zip(compositions, results):
                if not recomposes:
                    ok = False
                    report.violations.append(f"composition {a}: factorization does not recompose")
                if predicted != frozenset(groups[key]):
                    ok = False
                    report.violations.append(
                        f"composition {a}: factor-reversal class "
                        + " | ".join(sorted(str(c) for c in predicted))
                        + " L-class "
                        + " | ".join(sorted(str(c) for c in groups[key]))
                    )
            report.lines.append(
                f"n={weight} compositions={len(compositions)} classes={len(groups)} {_status(ok)}"
            )
        return report
