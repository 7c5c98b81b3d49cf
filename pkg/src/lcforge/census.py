"""Exhaustive and sampled censuses of k-error complexity distributions.

A census tallies, for every complexity value L, how many sequences of
period 2^n have k-error linear complexity exactly L — either over all
sequences or restricted to one weight-parity class.  Exhaustive censuses
(n <= 4) walk every packed period value; sampled censuses (n <= 5) draw
values from a counter-based hash stream so the same (seed, count) always
yields the same draws regardless of how the work is sharded.

Work is split into contiguous shards of the index space and merged by
componentwise addition, so results are identical for any worker count.
The heavy lifting is vectorised: a byte lookup table (or a vectorised
halving recurrence when no table fits) scores whole shards per flip
pattern at once.

verify_formulas joins a census with the closed forms from
lcforge.counting, and refutation_report reruns the period-16 3-error
census against both the closed form and the previously published table
it contradicts.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from hashlib import blake2b
from itertools import combinations
from math import sqrt
from time import perf_counter

import numpy as np

from . import core, counting
from .errors import InvalidParams, NoFormulaAvailable, TooLarge

MAX_CENSUS_EXPONENT = 5
MAX_EXHAUSTIVE_EXPONENT = 4
MAX_ERRORS = 4


class SequenceClass(Enum):
    """Which weight-parity class of sequences a census covers."""

    ALL = "all"
    FULL_LC = "full"  # odd weight per period: complexity is exactly 2^n
    LESS_LC = "less"  # even weight: complexity is below 2^n


@dataclass(frozen=True)
class Exhaustive:
    """Walk every sequence of the class; allowed for n <= 4."""


@dataclass(frozen=True)
class Sampled:
    """Draw `count` sequences from a deterministic stream keyed by `seed`."""

    count: int
    seed: int = 0


@dataclass(frozen=True)
class CensusQuery:
    """What to census: period exponent, error bound, class, and mode."""

    n: int
    k: int
    seq_class: SequenceClass
    mode: Exhaustive | Sampled

    def __post_init__(self):
        if not 0 <= self.n <= MAX_CENSUS_EXPONENT:
            raise TooLarge(
                f"census supports n <= {MAX_CENSUS_EXPONENT}, got {self.n}"
            )
        if not 0 <= self.k <= min(MAX_ERRORS, 1 << self.n):
            raise InvalidParams(f"census supports k <= {MAX_ERRORS}, got {self.k}")
        if isinstance(self.mode, Exhaustive):
            if self.n > MAX_EXHAUSTIVE_EXPONENT:
                raise TooLarge(
                    f"exhaustive census supports n <= {MAX_EXHAUSTIVE_EXPONENT},"
                    f" got {self.n}"
                )
        else:
            if self.mode.count < 1:
                raise InvalidParams("sample count must be at least 1")
            if not 0 <= self.mode.seed < 1 << 64:
                raise InvalidParams("seed must fit in 64 bits")


@dataclass(frozen=True)
class CensusRow:
    """Census (and optional formula) count for one complexity value."""

    L: int
    census: int
    formula: int | None = None
    verdict: str = ""


@dataclass
class CensusReport:
    """A census distribution, optionally joined with formula counts."""

    n: int
    k: int
    seq_class: SequenceClass
    mode: Exhaustive | Sampled
    rows: list[CensusRow]
    elapsed: float = 0.0

    @property
    def census_total(self) -> int:
        return sum(row.census for row in self.rows)

    @property
    def formula_total(self) -> int | None:
        if any(row.formula is None for row in self.rows):
            return None
        return sum(row.formula for row in self.rows)

    @property
    def all_match(self) -> bool:
        return not any(row.verdict == "Mismatch" for row in self.rows)

    @property
    def sample_size(self) -> int | None:
        return self.mode.count if isinstance(self.mode, Sampled) else None

    def interval(self, row: CensusRow) -> tuple[float, float] | None:
        """Display interval around a sampled row's proportion, else None."""
        size = self.sample_size
        if size is None:
            return None
        return proportion_interval(row.census, size)

    def to_csv(self) -> str:
        lines = ["L,census,formula,verdict"]
        for row in self.rows:
            formula = "" if row.formula is None else str(row.formula)
            lines.append(f"{row.L},{row.census},{formula},{row.verdict}")
        return "\n".join(lines) + "\n"

    def to_json(self, stable: bool = True) -> str:
        if isinstance(self.mode, Sampled):
            mode = {"kind": "sampled", "count": self.mode.count, "seed": self.mode.seed}
        else:
            mode = {"kind": "exhaustive"}
        rows = []
        for row in self.rows:
            item = {
                "L": row.L,
                "census": row.census,
                "formula": row.formula,
                "verdict": row.verdict,
            }
            interval = self.interval(row)
            if interval is not None:
                item["interval"] = list(interval)
            rows.append(item)
        payload = {
            "n": self.n,
            "k": self.k,
            "class": self.seq_class.value,
            "mode": mode,
            "rows": rows,
            "totals": {"census": self.census_total, "formula": self.formula_total},
        }
        if not stable:
            payload["elapsed_seconds"] = self.elapsed
        return render_json(payload)


def render_json(payload) -> str:
    """The one JSON renderer: parse-then-re-render is byte identical."""
    return json.dumps(payload, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# tallying


def _popcount_parity(values: np.ndarray) -> np.ndarray:
    """Parity of the set-bit count of each uint64 value."""
    v = values.copy()
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> np.uint64(shift)
    return (v & np.uint64(1)).astype(np.uint8)


def _lc_bulk(values: np.ndarray, exponent: int) -> np.ndarray:
    """Vectorised halving recurrence over packed period values (uint64)."""
    v = values.astype(np.uint64, copy=True)
    lc = np.zeros(v.shape, dtype=np.int64)
    for t in range(exponent, 0, -1):
        half = 1 << (t - 1)
        mask = np.uint64((1 << half) - 1)
        left = v & mask
        right = v >> np.uint64(half)
        unequal = left != right
        lc[unequal] += half
        v = np.where(unequal, left ^ right, left)
    return lc + (v & np.uint64(1)).astype(np.int64)


def _flip_masks(period: int, weight: int) -> list[int]:
    masks = []
    for combo in combinations(range(period), weight):
        mask = 0
        for p in combo:
            mask |= 1 << p
        masks.append(mask)
    return masks


def _tally_minima(values: np.ndarray, n: int, k: int) -> np.ndarray:
    """Per-L tally of the exact k-error complexity of each packed value.

    Values may mix weight parities; each parity group is scored against
    the pattern weights that can actually help it (see lcforge.kerror).
    """
    period = 1 << n
    if n <= core.TABLE_MAX_EXPONENT:
        table = np.frombuffer(core.lc_table(n), dtype=np.uint8)
        score = lambda arr: table[arr].astype(np.int64)  # noqa: E731
    else:
        score = lambda arr: _lc_bulk(arr, n)  # noqa: E731
    parities = _popcount_parity(values)
    tally = np.zeros(period + 1, dtype=np.int64)
    for parity in (0, 1):
        group = values[parities == parity]
        if group.size == 0:
            continue
        best = score(group)
        for w in range(1, k + 1):
            if (w & 1) != parity:
                continue
            for mask in _flip_masks(period, w):
                np.minimum(best, score(group ^ np.uint64(mask)), out=best)
        tally += np.bincount(best, minlength=period + 1)
    return tally


_CLASS_PARITY = {SequenceClass.FULL_LC: 1, SequenceClass.LESS_LC: 0}


def _exhaustive_shard(n: int, k: int, class_value: str, lo: int, hi: int) -> list[int]:
    """Tally for packed values in [lo, hi); module-level so workers can run it."""
    seq_class = SequenceClass(class_value)
    values = np.arange(lo, hi, dtype=np.uint64)
    if seq_class is not SequenceClass.ALL:
        values = values[_popcount_parity(values) == _CLASS_PARITY[seq_class]]
    return _tally_minima(values, n, k).tolist()


def _draw_value(seed: int, index: int, n: int, seq_class: SequenceClass) -> int:
    """Deterministic draw: hash (seed, index), then force the class parity.

    For a parity class, 2^n - 1 hash bits choose the low positions freely
    and the top position is set to fix the parity; every class member
    arises from exactly one bit string, so draws are uniform on the class.
    """
    data = seed.to_bytes(8, "big") + index.to_bytes(8, "big")
    word = int.from_bytes(blake2b(data, digest_size=8).digest(), "big")
    period = 1 << n
    if seq_class is SequenceClass.ALL:
        return word & ((1 << period) - 1)
    free = word & ((1 << (period - 1)) - 1)
    top = (free.bit_count() & 1) ^ _CLASS_PARITY[seq_class]
    return free | top << (period - 1)


def _sampled_shard(
    n: int, k: int, class_value: str, seed: int, lo: int, hi: int
) -> list[int]:
    seq_class = SequenceClass(class_value)
    draws = [_draw_value(seed, i, n, seq_class) for i in range(lo, hi)]
    values = np.array(draws, dtype=np.uint64)
    return _tally_minima(values, n, k).tolist()


def _shard_bounds(total: int, shards: int) -> list[tuple[int, int]]:
    shards = max(1, min(shards, total))
    edges = [total * i // shards for i in range(shards + 1)]
    return list(zip(edges, edges[1:]))


def _run_shards(worker, common_args: tuple, total: int, jobs: int) -> list[int]:
    bounds = _shard_bounds(total, jobs)
    if len(bounds) == 1:
        return worker(*common_args, *bounds[0])
    with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
        futures = [pool.submit(worker, *common_args, lo, hi) for lo, hi in bounds]
        tallies = [f.result() for f in futures]
    # componentwise addition: any sharding gives the same merged tally
    return [sum(parts) for parts in zip(*tallies)]


def census_distribution(query: CensusQuery, jobs: int = 1) -> CensusReport:
    """Run the census described by `query`, optionally across `jobs` workers."""
    if jobs < 1:
        raise InvalidParams(f"jobs must be at least 1, got {jobs}")
    start = perf_counter()
    args = (query.n, query.k, query.seq_class.value)
    if isinstance(query.mode, Exhaustive):
        counts = _run_shards(_exhaustive_shard, args, 1 << (1 << query.n), jobs)
    else:
        counts = _run_shards(
            _sampled_shard, args + (query.mode.seed,), query.mode.count, jobs
        )
    rows = [CensusRow(L, count) for L, count in enumerate(counts)]
    return CensusReport(
        query.n, query.k, query.seq_class, query.mode, rows,
        elapsed=perf_counter() - start,
    )


def class_size(n: int, seq_class: SequenceClass) -> int:
    """Number of sequences of period 2^n in the class."""
    if seq_class is SequenceClass.ALL:
        return 1 << (1 << n)
    return 1 << ((1 << n) - 1)


# ---------------------------------------------------------------------------
# joining censuses with the closed forms

_FORMULAS = {
    (0, SequenceClass.ALL): counting.rueppel_count,
    (1, SequenceClass.FULL_LC): counting.n1_lcfull,
    (2, SequenceClass.LESS_LC): counting.n2_lcless,
    (2, SequenceClass.FULL_LC): counting.n2_lcfull,
    (2, SequenceClass.ALL): counting.n2_total,
    (3, SequenceClass.LESS_LC): counting.n3_lcless,
    (3, SequenceClass.FULL_LC): counting.n3_lcfull,
    (3, SequenceClass.ALL): counting.n3_total,
    (4, SequenceClass.FULL_LC): counting.n4_lcfull,
}


def formula_counts(n: int, k: int, seq_class: SequenceClass) -> list[int]:
    """Closed-form counts for every L, or NoFormulaAvailable."""
    formula = _FORMULAS.get((k, seq_class))
    if formula is None:
        raise NoFormulaAvailable(
            f"no closed form for k={k} on class '{seq_class.value}'"
        )
    return [formula(n, L) for L in range((1 << n) + 1)]


def verify_formulas(
    n: int, k: int, seq_class: SequenceClass, jobs: int = 1
) -> CensusReport:
    """Exhaustively census (n, k, class) and join each row with its closed form."""
    expected = formula_counts(n, k, seq_class)
    query = CensusQuery(n, k, seq_class, Exhaustive())
    report = census_distribution(query, jobs)
    rows = [
        CensusRow(
            row.L,
            row.census,
            expected[row.L],
            "Match" if row.census == expected[row.L] else "Mismatch",
        )
        for row in report.rows
    ]
    report.rows = rows
    return report


# ---------------------------------------------------------------------------
# the period-16 refutation


@dataclass(frozen=True)
class RefutationRow:
    """census vs closed form vs published value for one complexity L."""

    L: int
    census: int
    theorem: int
    fixture: int
    verdict: str  # Match | FixtureWrong | TheoremMismatch


@dataclass
class RefutationReport:
    """Side-by-side period-16 3-error counts: census, closed form, publication."""

    rows: list[RefutationRow]
    elapsed: float = 0.0

    @property
    def census_total(self) -> int:
        return sum(row.census for row in self.rows)

    @property
    def theorem_total(self) -> int:
        return sum(row.theorem for row in self.rows)

    @property
    def fixture_total(self) -> int:
        return sum(row.fixture for row in self.rows)

    @property
    def mismatched_L(self) -> tuple[int, ...]:
        return tuple(row.L for row in self.rows if row.fixture != row.census)

    def to_csv(self) -> str:
        lines = ["L,census,theorem,fixture,verdict"]
        for row in self.rows:
            lines.append(
                f"{row.L},{row.census},{row.theorem},{row.fixture},{row.verdict}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self, stable: bool = True) -> str:
        payload = {
            "n": 4,
            "k": 3,
            "class": SequenceClass.ALL.value,
            "rows": [
                {
                    "L": row.L,
                    "census": row.census,
                    "theorem": row.theorem,
                    "fixture": row.fixture,
                    "verdict": row.verdict,
                }
                for row in self.rows
            ],
            "totals": {
                "census": self.census_total,
                "theorem": self.theorem_total,
                "fixture": self.fixture_total,
            },
            "mismatched_L": list(self.mismatched_L),
        }
        if not stable:
            payload["elapsed_seconds"] = self.elapsed
        return render_json(payload)


def refutation_report(jobs: int = 1) -> RefutationReport:
    """Census period 16 at k = 3 and compare against formula and publication.

    The published table gets one row per L in [0, 15]; the exhaustive
    census puts no sequence at L = 16 for k = 3 (one flip already breaks
    full complexity), so those rows carry the whole distribution.
    """
    query = CensusQuery(4, 3, SequenceClass.ALL, Exhaustive())
    report = census_distribution(query, jobs)
    rows = []
    for L in range(16):
        census = report.rows[L].census
        theorem = counting.n3_total(4, L)
        fixture = counting.kavuluru_table1(L)
        if census != theorem:
            verdict = "TheoremMismatch"
        elif census == fixture:
            verdict = "Match"
        else:
            verdict = "FixtureWrong"
        rows.append(RefutationRow(L, census, theorem, fixture, verdict))
    return RefutationReport(rows, elapsed=report.elapsed)


# ---------------------------------------------------------------------------
# sampled-census intervals


def proportion_interval(count: int, sample_size: int) -> tuple[float, float]:
    """Symmetric three-sigma normal interval around the sample proportion."""
    p = count / sample_size
    delta = 3.0 * sqrt(p * (1.0 - p) / sample_size)
    return (max(0.0, p - delta), min(1.0, p + delta))


def interval_covers(
    count: int, sample_size: int, true_numerator: int, true_denominator: int
) -> bool:
    """Exact-rational test that the three-sigma interval contains the truth."""
    p_hat = Fraction(count, sample_size)
    p = Fraction(true_numerator, true_denominator)
    return (p_hat - p) ** 2 <= Fraction(9, sample_size) * p_hat * (1 - p_hat)
