# Verification suites: closed forms against brute force, and cross-formula identities
#
# Every suite builds a list of named checks; checks may run on a thread pool
# but results are reported in the order they were built.
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from config import (
    ENUMERATION_LIMIT,
    VERIFY_CARTAN_MAX_A,
    VERIFY_IDENTITY_MAX_LEVEL,
    VERIFY_IDENTITY_MAX_N,
    VERIFY_LEVEL0_MAX_EXPONENT,
    VERIFY_LEVEL0_Q,
    VERIFY_MAX_EXPONENT,
    VERIFY_MAX_N,
    VERIFY_PRIMES,
)
from cuspidal import LevelZero, ai_unramified_quadratic, gl2_growth, level_zero, murnaghan_unramified
from errors import GrowthError, InvalidInput
from growth import (
    langlands_quotient_growth_disjoint,
    normalize_I,
    parabolic_coset_count,
    product_growth,
    segment_growth,
    segment_growth_recursive,
)
from logging_config import log_check_result, log_debug
from oracle import MatRing, cartan_coset_bruteforce, cartan_coset_size, flag_count_bruteforce, level_zero_dim_sum
from orbits import CharacterExpansion, Partition, expansion_to_growth, gl2_jl_dimension, jl_constant_term
from orbits import partitions_of
from qring import XLaurent, eval_dim, product
from segments import CuspidalSymbol, Multisegment, Segment


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    predicted: str
    observed: str

    @property
    def passed(self):
        return self.predicted == self.observed


Task = Tuple[str, str, Callable[[], Tuple[object, object]]]


def _run_task(task: Task) -> Check:
    suite, name, fn = task
    try:
        predicted, observed = fn()
    except GrowthError as e:
        return Check(suite, name, "-", f"error: {e}")
    check = Check(suite, name, _text(predicted), _text(observed))
    log_check_result(suite, name, check.passed)
    return check


def _text(value):
    return value.render() if hasattr(value, "render") else str(value)


def _fits(n, p, N, limit):
    return MatRing(n, p, N).size <= limit


def flag_tasks(max_n=VERIFY_MAX_N, primes=VERIFY_PRIMES, max_N=VERIFY_MAX_EXPONENT,
               limit=ENUMERATION_LIMIT) -> List[Task]:
    """|P_lambda \\ GL_n(Z/p^N)| by orbit counting against [n; lambda]_q X^(...)"""
    tasks = []
    for n in range(1, max_n + 1):
        for parts in partitions_of(n):
            for p in primes:
                for N in range(1, max_N + 1):
                    if not _fits(n, p, N, limit):
                        log_debug(f"flags: skipping n={n}, p={p}, N={N} (above enumeration limit)")
                        continue
                    parts_t = list(parts.parts)
                    tasks.append(("flags", f"P{parts} p={p} N={N}",
                                  lambda parts_t=parts_t, p=p, N=N: (
                                      eval_dim(parabolic_coset_count(parts_t), p, N),
                                      flag_count_bruteforce(parts_t, p, N, limit))))
    return tasks


def cartan_tasks(max_n=VERIFY_MAX_N, primes=VERIFY_PRIMES, max_N=VERIFY_MAX_EXPONENT,
                 max_a=VERIFY_CARTAN_MAX_A, limit=ENUMERATION_LIMIT) -> List[Task]:
    """Double coset sizes K_0 \\ K_0 g K_0 / K_N against the closed form"""
    grid = []
    if max_n >= 2:
        grid += [((a, 0), p, N) for p in primes for N in range(1, max_N + 1) for a in range(max_a + 1)]
    if max_n >= 3:
        grid += [(a, 2, 1) for a in ((0, 0, 0), (1, 0, 0), (1, 1, 0))]
    tasks = []
    for a, p, N in grid:
        if not _fits(len(a), p, N, limit):
            log_debug(f"cartan: skipping a={a}, p={p}, N={N} (above enumeration limit)")
            continue
        tasks.append(("cartan", f"a={a} p={p} N={N}",
                      lambda a=a, p=p, N=N: (cartan_coset_size(a, N).evaluate(p),
                                             cartan_coset_bruteforce(a, p, N, limit))))
    return tasks


def level0_tasks(qs=VERIFY_LEVEL0_Q, max_N=VERIFY_LEVEL0_MAX_EXPONENT) -> List[Task]:
    """Cartan-cell summation for level zero supercuspidals of GL_2, GL_3"""
    tasks = []
    for n in (2, 3):
        G = level_zero(n)
        for q0 in qs:
            for N in range(1, max_N + 1):
                tasks.append(("level0", f"GL_{n} q={q0} N={N}",
                              lambda n=n, G=G, q0=q0, N=N: (eval_dim(G, q0, N), level_zero_dim_sum(n, q0, N))))
    return tasks


def _steinberg(n):
    chi = CuspidalSymbol("chi", 1, LevelZero(1))
    return Multisegment.of(Segment(chi, k, 1) for k in range(n))


def identity_tasks(max_n=VERIFY_IDENTITY_MAX_N, max_j=VERIFY_IDENTITY_MAX_LEVEL) -> List[Task]:
    """Agreement between independently computed formulas"""
    tasks: List[Task] = []
    for n in range(1, max_n + 1):
        tasks.append(("identities", f"level_zero({n}) = murnaghan_unr({n}, 0)",
                      lambda n=n: (murnaghan_unramified(n, 0), level_zero(n))))
    for j in range(max_j + 1):
        tasks.append(("identities", f"murnaghan_unr(2, {j}) = ai_quad({j})",
                      lambda j=j: (ai_unramified_quadratic(j), murnaghan_unramified(2, j))))
    tasks.append(("identities", "murnaghan_unr(2, 0) = gl2(level0)",
                  lambda: (gl2_growth("level0"), murnaghan_unramified(2, 0))))
    gl3 = CharacterExpansion(3, ((Partition.of(1, 1, 1), 1), (Partition.of(2, 1), -3), (Partition.of(3), 3)))
    tasks.append(("identities", "GL_3 character expansion = level_zero(3)",
                  lambda: (level_zero(3), expansion_to_growth(gl3))))

    cases = [("level0", None)] + [(case, level) for case in ("e2", "e1") for level in range(1, max_j + 1)]
    for case, level in cases:
        label = case if level is None else f"{case}{{{level}}}"
        tasks.append(("identities", f"JL constant term of gl2 {label}",
                      lambda case=case, level=level: (
                          XLaurent.const(jl_constant_term(gl2_jl_dimension(case, level), 2)),
                          XLaurent.const(gl2_growth(case, level).constant_term()))))

    for n1 in (1, 2, 3):
        rho = CuspidalSymbol("rho", n1, LevelZero(n1))
        for r in (1, 2, 3):
            d = Segment(rho, 0, r)
            tasks.append(("identities", f"<Delta> closed form = recursion, n1={n1} r={r}",
                          lambda d=d: (segment_growth(d), segment_growth_recursive(d))))

    factors = [(2, level_zero(2)), (1, level_zero(1)), (3, level_zero(3))]
    tasks.append(("identities", "normalize_I is multiplicative on GL_2 x GL_1 x GL_3",
                  lambda: (product(normalize_I(k, G) for k, G in factors),
                           normalize_I(6, product_growth(factors)))))

    for n in (2, 3, 4):
        for q0 in (2, 3, 5):
            tasks.append(("identities", f"Steinberg of GL_{n} at N=1, q={q0}",
                          lambda n=n, q0=q0: (q0 ** (n * (n - 1) // 2),
                                              eval_dim(langlands_quotient_growth_disjoint(_steinberg(n)), q0, 1))))
    return tasks


def build_tasks(suites: Iterable[str], max_n: Optional[int] = None, primes: Optional[Sequence[int]] = None,
                max_N: Optional[int] = None, limit: int = ENUMERATION_LIMIT,
                identity_max_n: Optional[int] = None) -> List[Task]:
    """max_n and primes bound the brute-force suites; identity_max_n bounds the formula identities"""
    tasks: List[Task] = []
    for suite in suites:
        if suite == "flags":
            tasks += flag_tasks(max_n or VERIFY_MAX_N, primes or VERIFY_PRIMES, max_N or VERIFY_MAX_EXPONENT, limit)
        elif suite == "cartan":
            tasks += cartan_tasks(max_n or VERIFY_MAX_N, primes or VERIFY_PRIMES, max_N or VERIFY_MAX_EXPONENT,
                                  limit=limit)
        elif suite == "level0":
            tasks += level0_tasks(primes or VERIFY_LEVEL0_Q, max_N or VERIFY_LEVEL0_MAX_EXPONENT)
        elif suite == "identities":
            tasks += identity_tasks(identity_max_n or VERIFY_IDENTITY_MAX_N)
        else:
            raise InvalidInput(f"unknown verification suite {suite!r}")
    return tasks


def run_checks(tasks: Sequence[Task], workers: int = 1) -> List[Check]:
    """Run tasks, in parallel when workers > 1; output order is the task order"""
    if workers <= 1:
        return [_run_task(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_run_task, tasks))


def format_table(checks: Sequence[Check]) -> str:
    width = max((len(c.name) for c in checks), default=10)
    lines = [f"{'':4}  {'check':<{width}}  predicted | observed"]
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status:4}  {c.name:<{width}}  {c.predicted} | {c.observed}")
    failed = sum(1 for c in checks if not c.passed)
    lines.append(f"{len(checks) - failed} passed, {failed} failed")
    return "\n".join(lines)

