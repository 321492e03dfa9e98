"""
:py:mod:`scf_geometry.verify` runs the consistency suites behind ``scf-geometry verify``.

Each suite sweeps one family of objects, compares the independent characterizations
and returns a :py:class:`Report`; only resource caps raise.
"""

import dataclasses
import logging
import typing

import numpy

from .ablist import (
    ABList,
    anchors,
    build_f_from_q,
    count_ablists,
    decompose,
    enumerate_ablists,
    mirror_ablist,
    rank_ablist,
    unrank_ablist,
)
from .config import DEFAULT_LIMITS, Limits
from .exceptions import ResourceLimitExceeded
from .grid import (
    Alternative,
    Cone,
    Grid,
    GridFunction,
    all_grid_functions,
    cone_shift,
    is_dually_monotone,
    mirror_function,
    tfae_check,
)
from .profiles import find_manipulation, grid_manipulation_check, oracle_from_function
from .quotas import (
    build_T,
    dualize,
    q_from_quotas,
    q_from_quotas_via_matrix,
    quota_rule_function,
    quotas_from_q,
    quotas_from_q_via_matrix,
    validate_quota_sequence,
)

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: typing.Optional[str] = None

    def __str__(self) -> str:
        words = [self.name]
        if self.detail is not None:
            words.append(self.detail)
        if not self.passed:
            words.append("FAILED")
        elif self.detail is None:
            words.append("OK")
        return " ".join(words)


@dataclasses.dataclass
class Report:
    suite: str
    n: int
    checks: typing.List[Check] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: typing.Optional[str] = None) -> None:
        check = Check(name, passed, detail)
        if not passed:
            logger.warning("%s (n=%d): %s", self.suite, self.n, check)
        self.checks.append(check)

    def extend(self, that: "Report") -> None:
        self.checks.extend(that.checks)

    def __str__(self) -> str:
        return "; ".join(str(c) for c in self.checks)


def _require_cap(what: str, n: int, cap: int) -> None:
    if n > cap:
        raise ResourceLimitExceeded(what, n, cap)


def _first_failures(failures: typing.List[str], limit: int = 3) -> typing.Optional[str]:
    if not failures:
        return None
    more = f" and {len(failures) - limit} more" if len(failures) > limit else ""
    return "at " + ", ".join(failures[:limit]) + more


def verify_tables(g: Grid, limits: typing.Optional[Limits] = None) -> Report:
    """
    Visits every grid function of ``g``: counts the dually monotone ones, compares
    the four equivalent conditions, the profile-level and grid-level manipulation
    searches, and rebuilds each dually monotone table from its {a,b}-list.
    """
    limits = DEFAULT_LIMITS if limits is None else limits
    _require_cap("exhaustive table sweep", g.n, limits.table_sweep_n)
    logger.info("table sweep over %d grid functions for n=%d", 1 << g.size, g.n)

    total = dm_count = 0
    tfae_failures: typing.List[str] = []
    sp_failures: typing.List[str] = []
    grid_sp_failures: typing.List[str] = []
    rebuild_failures: typing.List[str] = []
    for f in all_grid_functions(g):
        total += 1
        dm = is_dually_monotone(f)
        if set(tfae_check(f)) != {dm}:
            tfae_failures.append(f.cells)
        strategy_proof = find_manipulation(oracle_from_function(f), "exhaustive", limits) is None
        if strategy_proof is not dm:
            sp_failures.append(f.cells)
        if grid_manipulation_check(f) is not dm:
            grid_sp_failures.append(f.cells)
        if dm:
            dm_count += 1
            if build_f_from_q(decompose(f)) != f:
                rebuild_failures.append(f.cells)

    r = Report("tables", g.n)
    expected = count_ablists(g)
    r.add("dually-monotone count", dm_count == expected, f"{dm_count}/{total}")
    r.add("TFAE agreement", not tfae_failures, _first_failures(tfae_failures))
    r.add("SP-equivalence", not sp_failures, _first_failures(sp_failures))
    r.add("grid SP-equivalence", not grid_sp_failures, _first_failures(grid_sp_failures))
    r.add("build-decompose identity", not rebuild_failures, _first_failures(rebuild_failures))
    return r


def _anchors_partition(q: ABList) -> bool:
    a = anchors(q)
    a_region = cone_shift(a.qa, Cone.A, q.grid)
    b_region = cone_shift(a.qb, Cone.B, q.grid)
    return not a_region & b_region and len(a_region) + len(b_region) == q.grid.size


def verify_lists(g: Grid, limits: typing.Optional[Limits] = None) -> Report:
    limits = DEFAULT_LIMITS if limits is None else limits
    _require_cap("{a,b}-list sweep", g.n, limits.list_sweep_n)
    logger.info("list sweep over %d {a,b}-lists for n=%d", count_ablists(g), g.n)

    count = 0
    round_trip: typing.List[str] = []
    not_dm: typing.List[str] = []
    partitions: typing.List[str] = []
    ranks: typing.List[str] = []
    mirrors: typing.List[str] = []
    for i, q in enumerate(enumerate_ablists(g)):
        count += 1
        f = build_f_from_q(q)
        if not is_dually_monotone(f):
            not_dm.append(str(q))
        elif decompose(f) != q:
            round_trip.append(str(q))
        if not _anchors_partition(q):
            partitions.append(str(q))
        if rank_ablist(q) != i or unrank_ablist(g, i) != q:
            ranks.append(str(q))
        if build_f_from_q(mirror_ablist(q)) != mirror_function(f):
            mirrors.append(str(q))

    r = Report("lists", g.n)
    expected = count_ablists(g)
    r.add("lists enumerated", count == expected, f"2^{g.n + 1} = {count}")
    r.add("dual monotonicity", not not_dm, _first_failures(not_dm))
    r.add("anchor partition", not partitions, _first_failures(partitions))
    r.add("round-trip", not round_trip, _first_failures(round_trip))
    r.add("rank/unrank", not ranks, _first_failures(ranks))
    r.add("mirror", not mirrors, _first_failures(mirrors))
    return r


def _inverse_holds(r: int) -> bool:
    t = build_T(r)
    return bool(numpy.array_equal(t.forward @ t.inverse, numpy.eye(r, dtype=numpy.int64)))


def verify_quotas(g: Grid, limits: typing.Optional[Limits] = None) -> Report:
    limits = DEFAULT_LIMITS if limits is None else limits
    _require_cap("quota sequence sweep", g.n, limits.quota_sweep_n)
    logger.info("quota sweep over %d sequences for n=%d", count_ablists(g), g.n)

    seen: typing.Set[typing.Tuple[int, ...]] = set()
    round_trip: typing.List[str] = []
    matrix: typing.List[str] = []
    regions: typing.List[str] = []
    duals: typing.List[str] = []
    for q in enumerate_ablists(g):
        ks = quotas_from_q(q)
        if validate_quota_sequence(ks):
            seen.add(ks.quotas)
        if q_from_quotas(ks) != q:
            round_trip.append(str(ks))
        if q_from_quotas_via_matrix(ks) != q or quotas_from_q_via_matrix(q) != ks:
            matrix.append(str(ks))
        if quota_rule_function(ks) != build_f_from_q(q):
            regions.append(str(ks))
        if quotas_from_q(mirror_ablist(q)) != dualize(ks):
            duals.append(str(ks))

    identities = all(_inverse_holds(r) for r in range(1, g.n + 1))

    r = Report("quotas", g.n)
    r.add("distinct sequences", len(seen) == count_ablists(g), f"{len(seen)}")
    r.add("round-trip", not round_trip, _first_failures(round_trip))
    r.add("matrix-formula agreement", not matrix, _first_failures(matrix))
    r.add("T T^-1 = I", identities)
    r.add("region oracle", not regions, _first_failures(regions))
    r.add("mirror dualizes", not duals, _first_failures(duals))
    return r


def _random_table(g: Grid, rng: numpy.random.Generator) -> GridFunction:
    bits = rng.integers(0, 2, size=g.size)
    return GridFunction(g.n, (Alternative.B if b else Alternative.A for b in bits))


def _random_rule(g: Grid, rng: numpy.random.Generator) -> GridFunction:
    bits = rng.integers(0, 2, size=g.n + 1)
    rank = sum(int(b) << i for i, b in enumerate(bits))
    return build_f_from_q(unrank_ablist(g, rank))


def verify_random_tfae(
    g: Grid, samples: int, seed: int = 0, limits: typing.Optional[Limits] = None
) -> Report:
    """
    Compares the four equivalent conditions on ``samples`` uniformly random tables
    and as many uniformly random dually monotone ones.
    """
    limits = DEFAULT_LIMITS if limits is None else limits
    _require_cap("random table check", g.n, limits.random_table_n)
    _require_cap("random table samples", samples, limits.random_samples)
    logger.info("TFAE on %d random tables for n=%d (seed=%d)", samples, g.n, seed)
    rng = numpy.random.default_rng(seed)
    failures: typing.List[str] = []
    for _ in range(samples):
        for f in (_random_table(g, rng), _random_rule(g, rng)):
            if len(set(tfae_check(f))) != 1:
                failures.append(f.cells)
    r = Report("tfae", g.n)
    r.add("TFAE agreement", not failures, _first_failures(failures))
    return r


SUITES = ("full", "tables", "lists", "quotas", "tfae")


def run(
    suite: str, g: Grid, limits: typing.Optional[Limits] = None, samples: int = 10000
) -> Report:
    limits = DEFAULT_LIMITS if limits is None else limits
    if suite == "tables":
        return verify_tables(g, limits)
    elif suite == "lists":
        return verify_lists(g, limits)
    elif suite == "quotas":
        return verify_quotas(g, limits)
    elif suite == "tfae":
        return verify_random_tfae(g, samples, limits.seed, limits)
    elif suite == "full":
        r = verify_tables(g, limits)
        r.suite = "full"
        r.extend(verify_lists(g, limits))
        r.extend(verify_quotas(g, limits))
        return r
    raise ValueError(f"unknown suite: {suite}")
