# corequot/verification_engine/engine.py
import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List

from corequot.config_manager.config import ConfigError
from corequot.enumeration.generator import (
    PartitionClass,
    PartitionStream,
    count_class,
    count_multipartitions,
    count_partitions,
    count_t_cores,
    distinct_partitions,
    multipartitions,
    partitions,
)
from corequot.frobenius.symbols import (
    count_colored_frobenius,
    is_t_core_frobenius,
    is_t_core_kolitsch,
    to_colored,
    to_frobenius,
)
from corequot.littlewood.decomposition import compose, decompose, quotient_hook1_count
from corequot.partition_core.partition import (
    DomainError,
    HookCase,
    classify_hooks,
    count_hooks_of_length,
    is_t_core_bruteforce,
    strip_t_core,
)
from corequot.qseries.identities import IDENTITIES, run_identity
from corequot.special_classes.classes import (
    double_distinct,
    is_doubled_distinct,
    is_self_conjugate,
    verify_dd_decomposition,
    verify_sc_decomposition,
)
from corequot.wright.wright_map import (
    TwoRowedArray,
    array_weight,
    staircase_weight,
    wright_backward,
    wright_forward,
)

logger = logging.getLogger(__name__)

# Identity checks that take a modulus run over this range when none is given.
IDENTITY_MODULI = range(2, 6)
MODULUS_FREE_IDENTITIES = ("frobenius-gf", "jtp")

# Wright sweep grid: row entries below WRIGHT_ENTRY_BOUND, at most WRIGHT_MAX_ROW per row.
WRIGHT_ENTRY_BOUND = 12
WRIGHT_MAX_ROW = 5


@dataclass
class SweepReport:
    """
    Tally of one exhaustive sweep: every case counted, the first few failures
    kept verbatim.
    """
    name: str
    sample_limit: int = 5
    cases: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return self.failed == 0

    def check(self, condition, description):
        self.cases += 1
        if not condition:
            self.failed += 1
            if len(self.failures) < self.sample_limit:
                self.failures.append(description)

    def to_payload(self):
        return {
            "sweep": self.name,
            "pass": self.passed,
            "cases": self.cases,
            "failed": self.failed,
            "failures": list(self.failures),
        }


def _partitions_up_to(max_n):
    for n in range(max_n + 1):
        yield from partitions(n)


def wright_rows():
    """Every strictly decreasing row on the Wright sweep grid, shortest first."""
    return [tuple(sorted(c, reverse=True))
            for u in range(WRIGHT_MAX_ROW + 1)
            for c in itertools.combinations(range(WRIGHT_ENTRY_BOUND), u)]


class VerificationEngine:
    """
    Runs the exhaustive sweeps and generating-function identity checks.

    Independent checks are fanned out over a thread pool; results come back
    ordered by name (and modulus), so output is deterministic.
    """

    def __init__(self, config):
        """
        Initializes the VerificationEngine.

        Args:
            config (dict): The loaded configuration; [verification] and [qseries]
                           supply the sweep depths and the z-window margin.

        Raises:
            ConfigError: If a required section or key is missing.
        """
        try:
            verification = config['verification']
            self.order = int(verification['order'])
            self.max_n = int(verification['max_n'])
            self.max_t = int(verification['max_t'])
            self.workers = int(verification['workers'])
            self.seed = int(verification['seed'])
            self.failure_sample = int(verification['failure_sample'])
            self.wright_max_weight = int(verification['wright_max_weight'])
            self.window_margin = int(config['qseries']['window_margin'])
        except KeyError as e:
            raise ConfigError(f"Missing configuration key {e}") from e
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid verification settings: {e}") from e

        self.sweeps = {
            "bijection": self.sweep_bijection,
            "inverse-bijection": self.sweep_inverse_bijection,
            "predicates": self.sweep_predicates,
            "oracle": self.sweep_oracle,
            "hook-transfer": self.sweep_hook_transfer,
            "hook-bounds": self.sweep_hook_bounds,
            "wright": self.sweep_wright,
            "propositions": self.sweep_propositions,
            "counting": self.sweep_counting,
            "colored-count": self.sweep_colored_count,
            "filters": self.sweep_filters,
        }

    def _report(self, name):
        return SweepReport(name, sample_limit=self.failure_sample)

    def _guarded(self, report, description, check):
        try:
            report.check(check(), description)
        except (DomainError, AssertionError) as e:
            report.check(False, f"{description}: {type(e).__name__}: {e}")

    def sweep_bijection(self):
        """compose∘decompose = id and the size identity, over all λ ⊢ n ≤ max_n, t ≤ max_t."""
        report = self._report("bijection")
        for lam in _partitions_up_to(self.max_n):
            for t in range(1, self.max_t + 1):
                def check(lam=lam, t=t):
                    d = decompose(lam, t)
                    return (compose(d.core, d.quotient, t) == lam
                            and lam.size == d.core.size + t * sum(q.size for q in d.quotient)
                            and sum(d.charvec) == 0)
                self._guarded(report, f"({lam}), t={t}", check)
        return report

    def sweep_inverse_bijection(self):
        """decompose∘compose = id over t-cores of size ≤ 8 and quotients of total size ≤ 4, t ∈ {2, 3}."""
        report = self._report("inverse-bijection")
        for t in (2, 3):
            if t > self.max_t:
                continue
            cores = [lam for lam in _partitions_up_to(8) if is_t_core_bruteforce(lam, t)]
            for core in cores:
                for k in range(5):
                    for quotient in multipartitions(k, t):
                        def check(core=core, quotient=quotient, t=t):
                            d = decompose(compose(core, quotient, t), t)
                            return d.core == core and d.quotient == quotient
                        self._guarded(report, f"core ({core}), quotient {[str(q) for q in quotient]}, t={t}", check)
        return report

    def sweep_predicates(self):
        """Hook divisibility, the Frobenius conditions and the colored conditions agree."""
        report = self._report("predicates")
        for lam in _partitions_up_to(self.max_n):
            symbol = to_frobenius(lam)
            for t in range(1, self.max_t + 1):
                brute = is_t_core_bruteforce(lam, t)
                report.check(brute == is_t_core_frobenius(symbol, t) == is_t_core_kolitsch(to_colored(symbol, t)),
                             f"({lam}), t={t}")
        return report

    def sweep_oracle(self):
        """The decomposition core equals rim-hook stripping, in fixed and random removal orders."""
        report = self._report("oracle")
        rng = random.Random(self.seed)
        for lam in _partitions_up_to(min(self.max_n, 20)):
            for t in range(1, min(self.max_t, 5) + 1):
                core = decompose(lam, t).core
                report.check(core == strip_t_core(lam, t) == strip_t_core(lam, t, rng), f"({lam}), t={t}")
        return report

    def sweep_hook_transfer(self):
        """Hooks of length t in λ match hooks of length 1 across its t-quotient."""
        report = self._report("hook-transfer")
        for lam in _partitions_up_to(self.max_n):
            for t in range(2, self.max_t + 1):
                report.check(count_hooks_of_length(lam, t) == quotient_hook1_count(decompose(lam, t)),
                             f"({lam}), t={t}")
        return report

    def sweep_hook_bounds(self):
        """Arm and Leg hook lengths fall strictly inside their Frobenius bounds."""
        report = self._report("hook-bounds")
        for lam in _partitions_up_to(min(self.max_n, 20)):
            symbol = to_frobenius(lam)
            for hook in classify_hooks(lam):
                i, j = hook.box
                if hook.case is HookCase.ARM_LEG:
                    ok = hook.length == symbol.top[i - 1] + symbol.bottom[j - 1] + 1
                else:
                    ok = hook.lower < hook.length < hook.upper
                report.check(ok, f"({lam}) box {hook.box} {hook.case.value}")
        return report

    def sweep_wright(self):
        """
        Both Wright roundtrips and weight preservation: every pair of rows from
        wright_rows(), optionally capped at wright_max_weight; images with
        |d| ≤ 4 and |μ| ≤ min(max_n, 15).
        """
        report = self._report("wright")
        rows = wright_rows()  # 1586 rows at the default bounds
        cap = self.wright_max_weight
        for top in rows:
            top_weight = sum(top) + len(top)
            if cap and top_weight > cap:
                continue
            for bottom in rows:
                if cap and top_weight + sum(bottom) > cap:
                    continue
                array = TwoRowedArray(top, bottom)
                image = wright_forward(array)
                report.check(wright_backward(image.offset, image.mu) == array
                             and array_weight(array) == staircase_weight(image.offset) + image.mu.size,
                             f"array {array}")
        logger.debug(f"wright: {report.cases} arrays checked (cap {cap or 'none'})")
        for d in range(-4, 5):
            for mu in _partitions_up_to(min(self.max_n, 15)):
                def check(d=d, mu=mu):
                    image = wright_forward(wright_backward(d, mu))
                    return image.offset == d and image.mu == mu
                self._guarded(report, f"d={d}, mu=({mu})", check)
        return report

    def sweep_propositions(self):
        """Self-conjugate and doubled distinct partitions pass their structured verifiers."""
        report = self._report("propositions")
        depth = min(self.max_n, 20)
        for n in range(depth + 1):
            for lam in partitions(n):
                for t in range(2, min(self.max_t, 5) + 1):
                    if is_self_conjugate(lam):
                        sc = verify_sc_decomposition(lam, t)
                        report.check(sc.passed, f"self-conjugate ({lam}), t={t}: {sc.checks}")
                    if is_doubled_distinct(lam):
                        dd = verify_dd_decomposition(lam, t)
                        report.check(dd.passed, f"doubled distinct ({lam}), t={t}: {dd.checks}")
        images = set()
        for n in range(13):
            for delta in distinct_partitions(n):
                mu = double_distinct(delta.parts)
                report.check(is_doubled_distinct(mu) and mu.size == 2 * n and mu not in images,
                             f"double_distinct({delta})")
                images.add(mu)
        return report

    def sweep_counting(self):
        """p(n) = Σ_k c_t(n − t·k) · #(t-multipartitions of k)."""
        report = self._report("counting")
        for t in (2, 3, 4):
            if t > self.max_t:
                continue
            for n in range(min(self.max_n, 15) + 1):
                total = sum(count_t_cores(n - t * k, t) * count_multipartitions(k, t) for k in range(n // t + 1))
                report.check(total == count_partitions(n), f"n={n}, t={t}: {total} != {count_partitions(n)}")
        return report

    def sweep_colored_count(self):
        report = self._report("colored-count")
        report.check(count_colored_frobenius(2, 2) == 9, "two-colored Frobenius partitions of 2")
        for n in range(min(self.max_n, 10) + 1):
            report.check(count_colored_frobenius(n, 1) == count_partitions(n), f"one-colored, n={n}")
        return report

    def sweep_filters(self):
        """Stream filters agree with the predicates, the cached counters and a second pass."""
        report = self._report("filters")
        predicates = {
            PartitionClass.SELF_CONJUGATE: is_self_conjugate,
            PartitionClass.DOUBLED_DISTINCT: is_doubled_distinct,
            PartitionClass.DISTINCT: lambda lam: len(set(lam.parts)) == len(lam.parts),
            PartitionClass.ALL: lambda lam: True,
        }
        for n in range(self.max_n + 1):
            everything = list(partitions(n))
            for partition_class, predicate in predicates.items():
                stream = PartitionStream(n, partition_class)
                first = list(stream)
                report.check(first == list(stream), f"{partition_class.value} stream not repeatable, n={n}")
                expected = [lam for lam in everything if predicate(lam)]
                report.check(sorted(first, key=lambda lam: lam.parts) == sorted(expected, key=lambda lam: lam.parts)
                             and len(first) == count_class(n, partition_class),
                             f"{partition_class.value}, n={n}")
            for t in range(2, self.max_t + 1):
                cores = PartitionStream(n, PartitionClass.TCORE, t).count()
                report.check(cores == sum(1 for lam in everything if is_t_core_bruteforce(lam, t))
                             == count_class(n, PartitionClass.TCORE, t), f"tcore, n={n}, t={t}")
        return report

    def _tasks(self, names, t):
        tasks = []
        for name in names:
            if name in self.sweeps:
                tasks.append(((name, 0), self.sweeps[name]))
            elif name in IDENTITIES:
                moduli = [None] if name in MODULUS_FREE_IDENTITIES else ([t] if t is not None else list(IDENTITY_MODULI))
                for modulus in moduli:
                    tasks.append(((name, modulus or 0),
                                  lambda name=name, modulus=modulus: run_identity(name, modulus, self.order, self.window_margin)))
            else:
                raise DomainError(f"Unknown check '{name}', expected one of {sorted(self.available())}")
        return tasks

    def available(self):
        return list(self.sweeps) + list(IDENTITIES)

    def run(self, names, t=None):
        """
        Runs the named sweeps and identity checks.

        Args:
            names (list of str): Sweep or identity names; "all" expands to every check.
            t (int, optional): Modulus for identity checks; by default 2..5.

        Returns:
            list: SweepReport and IdentityReport objects ordered by name, then modulus.
        """
        if "all" in names:
            names = self.available()
        tasks = self._tasks(dict.fromkeys(names), t)
        logger.info(f"Running {len(tasks)} checks on {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = [(key, executor.submit(task)) for key, task in tasks]
            results = [(key, future.result()) for key, future in futures]
        results.sort(key=lambda item: item[0])
        for (name, _), result in results:
            logger.info(f"{name}: {'pass' if result.passed else 'FAIL'}")
        return [result for _, result in results]
