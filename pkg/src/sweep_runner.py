"""
Verification sweeps: closed forms checked against the enumeration oracles.

Every cell is an independent unit of work evaluated by a module-level
function on plain tuples, so cells can run in a process pool. Results are
merged in cell-key order, making the output identical for any worker count.
"""

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from config import (
    DEFAULT_A_RANGE, DEFAULT_B_RANGE, DEFAULT_C_RANGE, DEFAULT_DEG_RANGE,
    DEFAULT_ENUMERATION_CAP, DEFAULT_FH_MAX, DEFAULT_MU_K_MAX, DEFAULT_MU_R_MAX,
    DEFAULT_MU_S_MAX, DEFAULT_N2_T_RANGE, DEFAULT_N3_MARGIN, DEFAULT_OUTPUT_FORMAT,
    DEFAULT_THRESHOLD_MARGIN, DEFAULT_WORKERS, OUTPUT_FORMATS, TABLE_MODE, VERIFY_MODES
)
from borel_sets import borel_closure, borel_size, maxgen, maxgen_Slnd, maxgen_Snd
from errors import ConfigError, EnumerationCapExceeded
from exact_arith import binom
from gaps_mu import (
    gap_count, gaps_enumerated, gaps_structural, maxgen_gaps_formula,
    maxgen_gaps_xn_shift, mu_enumerated, mu_power_drop, mu_two_var
)
from gotzmann import (
    closed_form_threshold, f_of_t, h_of_t, is_gotzmann_monomial_oracle, threshold_n4
)
from lex_engine import MonomialSet, full_degree_set
from monomial_core import Monomial, min_index

Range = Tuple[int, int]
CellKey = Tuple[int, ...]


def parse_range(text: str) -> Range:
    """Parse an inclusive range "lo..hi" or a single integer "k"."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError(f"invalid range {text!r}; expected lo..hi")
    if lo < 0 or lo > hi:
        raise ConfigError(f"range {text!r} is empty or negative")
    return lo, hi


def parse_pair(text: str) -> Tuple[int, int]:
    """Parse a boundary pair "b,c"."""
    try:
        b_text, c_text = text.split(",")
        b, c = int(b_text), int(c_text)
    except ValueError:
        raise ConfigError(f"invalid pair {text!r}; expected b,c")
    if b < 0 or c < 0:
        raise ConfigError(f"pair {text!r} has a negative entry")
    return b, c


def _span(bounds: Range) -> range:
    return range(bounds[0], bounds[1] + 1)


@dataclass
class SweepConfig:
    """Validated parameters of a verify or table run."""
    nvars: int
    mode: str
    a_range: Range = DEFAULT_A_RANGE
    b_range: Range = DEFAULT_B_RANGE
    c_range: Range = DEFAULT_C_RANGE
    t_range: Optional[Range] = None
    deg_range: Range = DEFAULT_DEG_RANGE
    boundary: List[Tuple[int, int]] = field(default_factory=list)
    cap: int = DEFAULT_ENUMERATION_CAP
    workers: int = DEFAULT_WORKERS
    output_format: str = DEFAULT_OUTPUT_FORMAT

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.mode not in VERIFY_MODES + [TABLE_MODE]:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if self.nvars < 1:
            raise ConfigError(f"number of variables must be positive, got {self.nvars}")
        if self.cap < 1:
            raise ConfigError(f"enumeration cap must be at least 1, got {self.cap}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        ranges = [self.a_range, self.b_range, self.c_range, self.deg_range]
        if self.t_range is not None:
            ranges.append(self.t_range)
        for lo, hi in ranges:
            if lo < 0 or lo > hi:
                raise ConfigError(f"range {lo}..{hi} is empty or negative")
        if self.mode == "verify-threshold" and not 2 <= self.nvars <= 4:
            raise ConfigError("verify-threshold covers 2 to 4 variables")
        if self.boundary and self.nvars != 4:
            raise ConfigError("boundary pairs apply to 4 variables only")


@dataclass(frozen=True)
class Mismatch:
    cell: str
    monomial: str
    expected: str
    actual: str
    criterion: str


@dataclass(frozen=True)
class Skip:
    cell: str
    reason: str


@dataclass
class CellOutcome:
    key: CellKey
    checks: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    skip: Optional[Skip] = None


@dataclass
class SweepResult:
    """Aggregated outcome; the run succeeds iff there are no mismatches."""
    mode: str
    cells_checked: int
    checks: int
    mismatches: List[Mismatch]
    skips: List[Skip]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _compare(outcome: CellOutcome, cell: str, u: Monomial, expected, actual, criterion: str) -> None:
    outcome.checks += 1
    if expected != actual:
        outcome.mismatches.append(Mismatch(cell, str(u), str(expected), str(actual), criterion))


def _guarded(key: CellKey, label: str, body: Callable[[CellOutcome], None]) -> CellOutcome:
    outcome = CellOutcome(key)
    try:
        body(outcome)
    except EnumerationCapExceeded as e:
        outcome.skip = Skip(label, str(e))
    return outcome


# Cell functions (module level so they pickle)

def threshold_cell(cell: Tuple[int, int, int, int, int, int]) -> CellOutcome:
    """Oracle verdict on x1^a x2^b x3^c x4^t (truncated to n variables) vs t >= threshold."""
    nvars, a, b, c, t, cap = cell
    exps = {2: (a, t), 3: (a, b, t), 4: (a, b, c, t)}[nvars]
    u = Monomial(exps)
    label = f"a={a},b={b},c={c},t={t}"

    def body(outcome: CellOutcome) -> None:
        expected = t >= closed_form_threshold(u)
        actual = is_gotzmann_monomial_oracle(u, cap).is_gotzmann
        _compare(outcome, label, u, expected, actual, f"threshold n={nvars}")

    return _guarded((b, c, t, a), label, body)


def formulas_cell(cell: Tuple[int, int, int]) -> CellOutcome:
    """Every closed formula on every monomial of S_{n,d}."""
    nvars, degree, cap = cell
    label = f"n={nvars},d={degree}"

    def body(outcome: CellOutcome) -> None:
        everything = full_degree_set(nvars, degree, cap)
        for u in everything:
            closure = borel_closure(u, cap)
            _compare(outcome, label, u, len(closure), borel_size(u), "borel_size")
            gaps = gaps_enumerated(u, cap)
            _compare(outcome, label, u, gaps.formatted(), gaps_structural(u, cap).formatted(),
                     "gaps_structural")
            _compare(outcome, label, u, len(gaps), gap_count(u), "gap_count")
            _compare(outcome, label, u, maxgen(gaps), maxgen_gaps_formula(u), "maxgen_gaps_formula")
            shifted = Monomial(u.exps[:-1] + (u.exps[-1] + 1,))
            _compare(outcome, label, u, maxgen(gaps_enumerated(shifted, cap)),
                     maxgen_gaps_xn_shift(maxgen(gaps)), "maxgen_gaps_xn_shift")
        if degree >= 1:
            top = everything.members[0]
            _compare(outcome, label, top, maxgen(everything), maxgen_Snd(nvars, degree), "maxgen_Snd")
            for l in range(1, nvars + 1):
                tail = MonomialSet(
                    nvars, degree, tuple(w for w in everything if min_index(w) >= l))
                _compare(outcome, label, top, maxgen(tail), maxgen_Slnd(l, nvars, degree),
                         f"maxgen_Slnd l={l}")

    return _guarded((0, nvars, degree), label, body)


def _power_drop_base(nvars: int, m: int, kind: int) -> Monomial:
    if kind == 0:
        return Monomial.unit(nvars)
    if kind == 1:
        return Monomial.variable(nvars, 1)
    return Monomial.variable(nvars, m - 1, 2)


def power_drop_cell(cell: Tuple[int, int, int, int, int]) -> CellOutcome:
    """mu(v*x_m^k, v*x_{m-1}^k) by enumeration vs the power-drop closed form."""
    nvars, m, k, kind, cap = cell
    v = _power_drop_base(nvars, m, kind)
    label = f"n={nvars},m={m},k={k},v={v}"

    def body(outcome: CellOutcome) -> None:
        lower = Monomial(tuple(a + (k if i == m - 1 else 0) for i, a in enumerate(v.exps)))
        upper = Monomial(tuple(a + (k if i == m - 2 else 0) for i, a in enumerate(v.exps)))
        _compare(outcome, label, lower, mu_enumerated(lower, upper, cap),
                 mu_power_drop(v, m, k, nvars), "mu_power_drop")

    return _guarded((1, nvars, m, k, kind), label, body)


def two_var_cell(cell: Tuple[int, int, int, int]) -> CellOutcome:
    """mu(x2^r x4^s, x2^(r+i) x4^(s-i)) by enumeration vs the two-variable closed form."""
    r, s, i, cap = cell
    label = f"r={r},s={s},i={i}"
    lower = Monomial((0, r, 0, s))
    upper = Monomial((0, r + i, 0, s - i))

    def body(outcome: CellOutcome) -> None:
        _compare(outcome, label, lower, mu_enumerated(lower, upper, cap),
                 mu_two_var(r, s, i), "mu_two_var")

    return _guarded((2, r, s, i), label, body)


def f_h_cell(cell: Tuple[int, int, int, int]) -> CellOutcome:
    """f(t) against enumerated gaps, h(t) against enumerated mu, and their constant difference."""
    b, c, t, cap = cell
    label = f"b={b},c={c},t={t}"
    u = Monomial((0, b, c, t))
    cb = binom(b, 2)

    def body(outcome: CellOutcome) -> None:
        _compare(outcome, label, u, maxgen(gaps_enumerated(u, cap)),
                 Monomial((0, 0, cb, f_of_t(b, c, t))), "f(t)")
        # The h identity needs the target above u
        if (b >= 2 and c + t >= cb) or (b <= 1 and c == 0):
            target = Monomial((0, b + cb, 0, c + t - cb))
            _compare(outcome, label, u, mu_enumerated(u, target, cap),
                     Monomial((0, 0, cb, h_of_t(b, c, t))), "h(t)")
        _compare(outcome, label, u, threshold_n4(b, c).constant_gap,
                 f_of_t(b, c, t) - h_of_t(b, c, t), "f(t) - h(t)")

    return _guarded((3, b, c, t), label, body)


# Cell generation

def threshold_cells(config: SweepConfig) -> List[Tuple[int, ...]]:
    n, cap = config.nvars, config.cap
    cells = set()
    if n == 2:
        t_span = _span(config.t_range or DEFAULT_N2_T_RANGE)
        cells.update((n, a, 0, 0, t, cap) for a in _span(config.a_range) for t in t_span)
        return sorted(cells)
    c_span = _span(config.c_range) if n == 4 else [0]
    for b in _span(config.b_range):
        for c in c_span:
            representative = Monomial((0, b, c, 0) if n == 4 else (0, b, 0))
            threshold = closed_form_threshold(representative)
            margin = DEFAULT_THRESHOLD_MARGIN if n == 4 else DEFAULT_N3_MARGIN
            t_span = _span(config.t_range) if config.t_range else range(threshold + margin + 1)
            cells.update((n, a, b, c, t, cap) for a in _span(config.a_range) for t in t_span)
    for b, c in config.boundary:
        threshold = threshold_n4(b, c).threshold
        cells.update((n, 0, b, c, t, cap) for t in (threshold - 1, threshold) if t >= 0)
    return sorted(cells, key=lambda cell: (cell[2], cell[3], cell[4], cell[1]))


def formula_cells(config: SweepConfig) -> List[Tuple[Callable, tuple]]:
    n, cap = config.nvars, config.cap
    work: List[Tuple[Callable, tuple]] = []
    for nv in range(1, n + 1):
        for d in _span(config.deg_range):
            work.append((formulas_cell, (nv, d, cap)))
    for nv in range(2, n + 1):
        for m in range(2, nv + 1):
            for k in range(1, DEFAULT_MU_K_MAX + 1):
                for kind in range(3):
                    work.append((power_drop_cell, (nv, m, k, kind, cap)))
    if n >= 4:
        for r in range(DEFAULT_MU_R_MAX + 1):
            for s in range(1, DEFAULT_MU_S_MAX + 1):
                for i in range(1, s + 1):
                    work.append((two_var_cell, (r, s, i, cap)))
        for b in range(DEFAULT_FH_MAX + 1):
            for c in range(DEFAULT_FH_MAX + 1):
                for t in range(DEFAULT_FH_MAX + 1):
                    work.append((f_h_cell, (b, c, t, cap)))
    return work


def _apply(job: Tuple[Callable, tuple]) -> CellOutcome:
    func, args = job
    return func(args)


def run_cells(func: Callable, cells: Sequence, workers: int = DEFAULT_WORKERS,
              show_progress: bool = True, desc: str = "cells") -> List[CellOutcome]:
    """Evaluate func on every cell, inline or in a process pool, sorted by cell key."""
    outcomes: List[CellOutcome] = []
    with tqdm(total=len(cells), desc=desc, file=sys.stderr, disable=not show_progress,
              dynamic_ncols=True, leave=False) as pbar:
        if workers == 1:
            for cell in cells:
                outcomes.append(func(cell))
                pbar.update(1)
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = {executor.submit(func, cell): cell for cell in cells}
                for fut in as_completed(futures):
                    outcomes.append(fut.result())
                    pbar.update(1)
    outcomes.sort(key=lambda o: o.key)
    return outcomes


def run_sweep(config: SweepConfig, sweep_logger=None, show_progress: bool = True) -> SweepResult:
    """
    Run a verification sweep.

    Args:
        config: Validated sweep configuration (mode verify-threshold or verify-formulas)
        sweep_logger: Optional SweepLogger receiving per-cell and summary records
        show_progress: Whether to draw a progress bar on stderr

    Returns:
        SweepResult with mismatches and skips in cell order
    """
    if config.mode not in VERIFY_MODES:
        raise ConfigError(f"{config.mode!r} is not a verification mode")
    start = time.perf_counter()
    if config.mode == "verify-threshold":
        outcomes = run_cells(threshold_cell, threshold_cells(config), config.workers,
                             show_progress, desc=config.mode)
    else:
        outcomes = run_cells(_apply, formula_cells(config), config.workers,
                             show_progress, desc=config.mode)

    mismatches: List[Mismatch] = []
    skips: List[Skip] = []
    checks = 0
    for outcome in outcomes:
        checks += outcome.checks
        mismatches.extend(outcome.mismatches)
        if outcome.skip is not None:
            skips.append(outcome.skip)
        if sweep_logger is not None:
            sweep_logger.log_cell_outcome(outcome)

    result = SweepResult(
        mode=config.mode,
        cells_checked=len(outcomes) - len(skips),
        checks=checks,
        mismatches=mismatches,
        skips=skips,
        elapsed=time.perf_counter() - start,
    )
    logging.info(f"{config.mode}: {result.cells_checked} cells, {len(mismatches)} mismatches, "
                 f"{len(skips)} skips in {result.elapsed:.2f}s")
    if sweep_logger is not None:
        sweep_logger.log_sweep_summary(result)
    return result


def result_rows(result: SweepResult) -> List[Dict[str, str]]:
    """Mismatches then skips as flat rows for tabular output."""
    rows = [
        {"kind": "mismatch", "cell": m.cell, "monomial": m.monomial,
         "expected": m.expected, "actual": m.actual, "criterion": m.criterion}
        for m in result.mismatches
    ]
    rows.extend(
        {"kind": "skip", "cell": s.cell, "monomial": "", "expected": "", "actual": "",
         "criterion": s.reason}
        for s in result.skips
    )
    return rows


RESULT_COLUMNS = ["kind", "cell", "monomial", "expected", "actual", "criterion"]
